//! Named checks, named series and output formats shared by the command-line
//! tool and the C interface.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::closed_forms::{
    baxter_identities, baxter_ode_report, baxter_series, check_gv, check_prop1,
    check_prop2_closed_form, check_prop3, osculating_complete_gf, osculating_length_gf,
    osculation_refined_gf, two_walker_suite, vicious_complete_gf, vicious_length_gf, BaxterSeries,
};
use crate::enumerator::{CountTable, GapState, Mode, WalkerSystem};
use crate::error::{Error, Result};
use crate::kernel::{
    check_boundary, check_framed_system, check_main_equation, check_orbit, check_prop2_derivation,
    check_quasivicious, check_refined_equation, CheckOrders,
};
use crate::report::CheckReport;
use crate::series::{
    fmt_rational, series_to_value, solve_t, solve_x, solve_y0, LaurentPoly1, LaurentPoly2,
    Rational, Ring, TruncSeries, UPoly,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(format!("unknown format '{s}' (expected json, csv or text)")),
        }
    }
}

/// Parses `"i,j"` (three walkers) or `"i"` (two walkers).
pub fn parse_start(s: &str) -> std::result::Result<Vec<u32>, String> {
    let gaps: std::result::Result<Vec<u32>, _> = s.split(',').map(|p| p.trim().parse()).collect();
    match gaps {
        Ok(g) if (1..=2).contains(&g.len()) => Ok(g),
        _ => Err(format!(
            "start '{s}' must be 'i,j' or 'i' with nonnegative integers"
        )),
    }
}

/// The walker system for a start given as one or two gaps. Vicious starts
/// with a zero gap are rejected: such stars do not exist.
pub fn walker_system(start: &[u32], mode: Mode) -> Result<WalkerSystem> {
    let system = WalkerSystem {
        start: GapState::new(start),
        mode,
    };
    if mode == Mode::Vicious && start.contains(&0) {
        return Err(Error::BadStart {
            i: start[0],
            j: start.get(1).copied().unwrap_or(0),
            reason: "vicious walkers need every start gap >= 1",
        });
    }
    Ok(system)
}

pub fn render_table(table: &CountTable, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = table.to_json();
            s.push('\n');
            s
        }
        Format::Csv => table.to_csv(),
        Format::Text => {
            let sys = table.system();
            let gaps: Vec<String> = sys.start.as_slice().iter().map(u32::to_string).collect();
            let mut out = format!(
                "# {} walkers, {} mode, start gaps ({}), lengths 0..={}\n",
                sys.walkers(),
                sys.mode,
                gaps.join(","),
                table.n_max()
            );
            for line in table.to_csv().lines() {
                let cells: Vec<String> = line.split(',').map(|c| format!("{c:>8}")).collect();
                out.push_str(cells.join("").trim_start());
                out.push('\n');
            }
            for n in 0..=table.n_max() {
                writeln!(out, "# total n={n}: {}", table.total(n)).unwrap();
            }
            out
        }
    }
}

/// Every series the `series` command can print.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    T,
    X,
    Y0,
    Baxter,
    OsculatingLength,
    ViciousLength,
    OsculatingRefined,
    CompleteVicious,
    CompleteOsculating,
}

impl SeriesKind {
    pub const ALL: [SeriesKind; 9] = [
        SeriesKind::T,
        SeriesKind::X,
        SeriesKind::Y0,
        SeriesKind::Baxter,
        SeriesKind::OsculatingLength,
        SeriesKind::ViciousLength,
        SeriesKind::OsculatingRefined,
        SeriesKind::CompleteVicious,
        SeriesKind::CompleteOsculating,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::T => "T",
            SeriesKind::X => "X",
            SeriesKind::Y0 => "Y0",
            SeriesKind::Baxter => "baxter",
            SeriesKind::OsculatingLength => "osculating-length",
            SeriesKind::ViciousLength => "vicious-length",
            SeriesKind::OsculatingRefined => "osculating-refined",
            SeriesKind::CompleteVicious => "complete-vicious",
            SeriesKind::CompleteOsculating => "complete-osculating",
        }
    }

    pub fn needs_start(self) -> bool {
        !matches!(
            self,
            SeriesKind::T | SeriesKind::X | SeriesKind::Y0 | SeriesKind::Baxter
        )
    }
}

impl FromStr for SeriesKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        SeriesKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<&str> = SeriesKind::ALL.iter().map(|k| k.name()).collect();
                format!(
                    "unknown series '{s}' (expected one of {})",
                    names.join(", ")
                )
            })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SeriesValue {
    Rational(TruncSeries<Rational>),
    Laurent1(TruncSeries<LaurentPoly1>),
    Laurent2(TruncSeries<LaurentPoly2>),
    Refined(TruncSeries<UPoly>),
    Baxter(BaxterSeries),
}

fn require_pair(start: &[u32]) -> Result<(u32, u32)> {
    match start {
        [i, j] => Ok((*i, *j)),
        _ => Err(Error::Invalid("this series needs a start 'i,j'".into())),
    }
}

pub fn evaluate_series(kind: SeriesKind, start: &[u32], order: usize) -> Result<SeriesValue> {
    Ok(match kind {
        SeriesKind::T => SeriesValue::Rational(solve_t(order)),
        SeriesKind::X => SeriesValue::Rational(solve_x(order)),
        SeriesKind::Y0 => SeriesValue::Laurent1(solve_y0(order, order as i32 + 2)?),
        SeriesKind::Baxter => SeriesValue::Baxter(baxter_series(order)),
        SeriesKind::OsculatingLength => {
            let (i, j) = require_pair(start)?;
            SeriesValue::Rational(osculating_length_gf(i, j, order)?)
        }
        SeriesKind::ViciousLength => {
            let (i, j) = require_pair(start)?;
            SeriesValue::Rational(vicious_length_gf(i, j, order))
        }
        SeriesKind::OsculatingRefined => {
            let (i, j) = require_pair(start)?;
            SeriesValue::Refined(osculation_refined_gf(i, j, order)?)
        }
        SeriesKind::CompleteVicious => {
            let (i, j) = require_pair(start)?;
            SeriesValue::Laurent2(vicious_complete_gf(i, j, order))
        }
        SeriesKind::CompleteOsculating => {
            let (i, j) = require_pair(start)?;
            SeriesValue::Laurent2(osculating_complete_gf(i, j, order)?)
        }
    })
}

fn series_csv<C: Ring>(s: &TruncSeries<C>, vars: &[&str]) -> String {
    let mut out = String::from("n");
    for v in vars {
        write!(out, ",{v}").unwrap();
    }
    out.push_str(",value\n");
    for (n, c) in s.coeffs().iter().enumerate() {
        for (m, r) in c.terms() {
            write!(out, "{n}").unwrap();
            for e in m.exponents() {
                write!(out, ",{e}").unwrap();
            }
            writeln!(out, ",{}", fmt_rational(&r)).unwrap();
        }
    }
    out
}

fn series_lines<C: Ring + std::fmt::Display>(s: &TruncSeries<C>) -> String {
    let mut out = String::new();
    for (n, c) in s.coeffs().iter().enumerate() {
        writeln!(out, "t^{n}: {c}").unwrap();
    }
    out
}

impl SeriesValue {
    pub fn to_json_value(&self) -> Value {
        match self {
            SeriesValue::Rational(s) => series_to_value(s),
            SeriesValue::Laurent1(s) => series_to_value(s),
            SeriesValue::Laurent2(s) => series_to_value(s),
            SeriesValue::Refined(s) => series_to_value(s),
            SeriesValue::Baxter(b) => json!({
                "b": b.b.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "series": series_to_value(&b.series),
            }),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", self.to_json_value()),
            Format::Csv => match self {
                SeriesValue::Rational(s) => series_csv(s, &[]),
                SeriesValue::Laurent1(s) => series_csv(s, &["x"]),
                SeriesValue::Laurent2(s) => series_csv(s, &["x", "y"]),
                SeriesValue::Refined(s) => series_csv(s, &["u"]),
                SeriesValue::Baxter(b) => {
                    let mut out = String::from("n,b\n");
                    for (k, bk) in b.b.iter().enumerate() {
                        writeln!(out, "{},{bk}", k + 1).unwrap();
                    }
                    out
                }
            },
            Format::Text => match self {
                SeriesValue::Rational(s) => {
                    let c: Vec<String> = s.coeffs().iter().map(fmt_rational).collect();
                    format!("{}\n", c.join(","))
                }
                SeriesValue::Laurent1(s) => series_lines(s),
                SeriesValue::Laurent2(s) => series_lines(s),
                SeriesValue::Refined(s) => {
                    let mut out = String::new();
                    for (n, c) in s.coeffs().iter().enumerate() {
                        let parts: Vec<String> = c.coeffs().iter().map(fmt_rational).collect();
                        writeln!(out, "t^{n}: [{}]", parts.join(", ")).unwrap();
                    }
                    out
                }
                SeriesValue::Baxter(b) => {
                    let c: Vec<String> = b.b.iter().map(|x| x.to_string()).collect();
                    format!("{}\n", c.join(","))
                }
            },
        }
    }
}

/// A named verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckName {
    MainEq,
    Orbit,
    FramedSystem,
    Boundary,
    Quasivicious,
    Refined,
    Prop2,
    Prop1,
    Prop3,
    Gv,
    Baxter,
    Ode,
    TwoWalker,
}

impl CheckName {
    pub const ALL: [CheckName; 13] = [
        CheckName::MainEq,
        CheckName::Orbit,
        CheckName::FramedSystem,
        CheckName::Boundary,
        CheckName::Quasivicious,
        CheckName::Refined,
        CheckName::Prop2,
        CheckName::Prop1,
        CheckName::Prop3,
        CheckName::Gv,
        CheckName::Baxter,
        CheckName::Ode,
        CheckName::TwoWalker,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckName::MainEq => "main-eq",
            CheckName::Orbit => "orbit",
            CheckName::FramedSystem => "framed-system",
            CheckName::Boundary => "boundary",
            CheckName::Quasivicious => "quasivicious",
            CheckName::Refined => "refined",
            CheckName::Prop2 => "prop2",
            CheckName::Prop1 => "prop1",
            CheckName::Prop3 => "prop3",
            CheckName::Gv => "gv",
            CheckName::Baxter => "baxter",
            CheckName::Ode => "ode",
            CheckName::TwoWalker => "two-walker",
        }
    }

    /// Truncation order used when none is given.
    pub fn default_order(self) -> usize {
        match self {
            CheckName::Orbit => 25,
            CheckName::Prop1 => 20,
            CheckName::Prop3 => 14,
            CheckName::Prop2 => 10,
            CheckName::Baxter => 12,
            CheckName::Ode => 30,
            CheckName::TwoWalker => 25,
            _ => 8,
        }
    }

    /// Whether the check makes sense for this start; used by `all` to skip
    /// the determinant check when a start gap is zero.
    pub fn applies_to(self, i: u32, j: u32) -> bool {
        match self {
            CheckName::Gv => i > 0 && j > 0,
            _ => true,
        }
    }

    pub fn run(self, i: u32, j: u32, order: Option<usize>) -> Result<Vec<CheckReport>> {
        let n = order.unwrap_or(self.default_order());
        let orders = CheckOrders::from_order(n);
        Ok(match self {
            CheckName::MainEq => vec![check_main_equation(i, j, n)?],
            CheckName::Orbit => vec![check_orbit(n)?],
            CheckName::FramedSystem => vec![check_framed_system(i, j, orders)?],
            CheckName::Boundary => vec![check_boundary(i, j, n)?],
            CheckName::Quasivicious => vec![check_quasivicious(i, j, orders)?],
            CheckName::Refined => vec![check_refined_equation(i, j, orders)?],
            CheckName::Prop2 => vec![
                check_prop2_derivation(i, j, n)?,
                check_prop2_closed_form(i, j, n)?,
            ],
            CheckName::Prop1 => vec![check_prop1(i, j, n)?],
            CheckName::Prop3 => vec![check_prop3(i, j, n)?],
            CheckName::Gv => vec![check_gv(i, j, n)?],
            CheckName::Baxter => vec![baxter_identities(n)?],
            CheckName::Ode => vec![baxter_ode_report(n)?],
            CheckName::TwoWalker => vec![two_walker_suite(i, n)?],
        })
    }
}

impl FromStr for CheckName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check '{s}'"))
    }
}

/// Outcome of one named check inside a batch.
#[derive(Clone, Debug, PartialEq)]
pub enum CheckOutcome {
    Ran(CheckName, Vec<CheckReport>),
    Skipped(CheckName, &'static str),
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        match self {
            CheckOutcome::Ran(_, reps) => reps.iter().all(|r| r.passed),
            CheckOutcome::Skipped(..) => true,
        }
    }
}

/// Runs `checks` on a pool of `jobs` workers (the global pool when `None`).
/// Results keep the order of `checks`. The first error aborts the batch.
pub fn run_checks(
    checks: &[CheckName],
    i: u32,
    j: u32,
    order: Option<usize>,
    jobs: Option<usize>,
    skip_inapplicable: bool,
) -> Result<Vec<CheckOutcome>> {
    let work = || -> Vec<Result<CheckOutcome>> {
        checks
            .par_iter()
            .map(|&c| {
                if skip_inapplicable && !c.applies_to(i, j) {
                    Ok(CheckOutcome::Skipped(c, "needs both start gaps >= 1"))
                } else {
                    c.run(i, j, order).map(|r| CheckOutcome::Ran(c, r))
                }
            })
            .collect()
    };
    let results = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Invalid(e.to_string()))?
            .install(work),
        None => work(),
    };
    results.into_iter().collect()
}

pub fn render_outcomes(outcomes: &[CheckOutcome], format: Format) -> String {
    match format {
        Format::Json => {
            let reports: Vec<Value> = outcomes
                .iter()
                .flat_map(|o| match o {
                    CheckOutcome::Ran(_, reps) => reps
                        .iter()
                        .map(|r| serde_json::to_value(r).expect("reports serialize"))
                        .collect(),
                    CheckOutcome::Skipped(c, why) => {
                        vec![json!({"check_name": c.name(), "skipped": why})]
                    }
                })
                .collect();
            let passed = outcomes.iter().all(CheckOutcome::passed);
            format!("{}\n", json!({"passed": passed, "reports": reports}))
        }
        Format::Csv => {
            let mut out = String::from(
                "check,i,j,order,identity,order_checked,residual_zero,first_nonzero\n",
            );
            for o in outcomes {
                if let CheckOutcome::Ran(_, reps) = o {
                    for r in reps {
                        for id in &r.identities {
                            let cell =
                                |v: Option<u32>| v.map(|x| x.to_string()).unwrap_or_default();
                            writeln!(
                                out,
                                "{},{},{},{},\"{}\",{},{},{}",
                                r.check_name,
                                cell(r.i),
                                cell(r.j),
                                r.order,
                                id.identity.replace('"', "'"),
                                id.order_checked,
                                id.residual_zero,
                                id.first_nonzero
                                    .as_ref()
                                    .map(|f| f.to_string())
                                    .unwrap_or_default()
                            )
                            .unwrap();
                        }
                    }
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for o in outcomes {
                match o {
                    CheckOutcome::Ran(_, reps) => {
                        for r in reps {
                            writeln!(out, "{r}").unwrap();
                        }
                    }
                    CheckOutcome::Skipped(c, why) => {
                        writeln!(out, "SKIP {}: {why}", c.name()).unwrap();
                    }
                }
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_starts() {
        assert_eq!(parse_start("1,2").unwrap(), [1, 2]);
        assert_eq!(parse_start("3").unwrap(), [3]);
        assert!(parse_start("1,2,3").is_err());
        assert!(parse_start("-1,2").is_err());
    }

    #[test]
    fn names_round_trip() {
        for c in CheckName::ALL {
            assert_eq!(c.name().parse::<CheckName>().unwrap(), c);
        }
        for k in SeriesKind::ALL {
            assert_eq!(k.name().parse::<SeriesKind>().unwrap(), k);
        }
    }

    #[test]
    fn t_as_text() {
        let s = evaluate_series(SeriesKind::T, &[], 4).unwrap();
        assert_eq!(s.render(Format::Text), "0,2,8,40,224\n");
    }

    #[test]
    fn vicious_zero_gap_rejected() {
        assert!(walker_system(&[0, 1], Mode::Vicious).is_err());
        assert!(walker_system(&[0, 1], Mode::Osculating).is_ok());
    }
}
