use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};

use super::{EnumError, GapState, WalkerSystem};
use crate::series::{
    Laurent, LaurentPoly1, LaurentPoly1U, LaurentPoly2, LaurentPoly2U, Rational, TruncSeries, UPoly,
};

/// Index of one cell of a [`CountTable`].
///
/// Ordering is lexicographic in `(n, gaps, osc, anchor)`, which is the row
/// order of every serialized form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CountKey {
    /// Length of the configuration.
    pub n: u32,
    /// Final gaps.
    pub gaps: GapState,
    /// Number of osculations (contacts at times `m < n`).
    pub osc: u32,
    /// Number of up steps of the bottom walker, when tracked. Its final
    /// ordinate is then `2 * anchor - n`.
    pub anchor: Option<u32>,
}

/// Exact configuration counts by length, final gaps and osculation number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    system: WalkerSystem,
    n_max: u32,
    positioned: bool,
    entries: BTreeMap<CountKey, BigUint>,
}

fn to_rational(c: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(c.clone()))
}

impl CountTable {
    pub(crate) fn new(
        system: WalkerSystem,
        n_max: u32,
        positioned: bool,
        entries: BTreeMap<CountKey, BigUint>,
    ) -> Self {
        Self {
            system,
            n_max,
            positioned,
            entries,
        }
    }

    pub fn system(&self) -> &WalkerSystem {
        &self.system
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn positioned(&self) -> bool {
        self.positioned
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CountKey, &BigUint)> {
        self.entries.iter()
    }

    pub fn get(&self, key: &CountKey) -> BigUint {
        self.entries.get(key).cloned().unwrap_or_default()
    }

    /// Count summed over osculations and anchors.
    pub fn count(&self, n: u32, gaps: GapState) -> BigUint {
        self.entries
            .iter()
            .filter(|(k, _)| k.n == n && k.gaps == gaps)
            .map(|(_, c)| c)
            .sum()
    }

    /// Number of configurations of length `n`.
    pub fn total(&self, n: u32) -> BigUint {
        self.entries
            .iter()
            .filter(|(k, _)| k.n == n)
            .map(|(_, c)| c)
            .sum()
    }

    /// Osculation histogram of length-`n` configurations, index = count.
    pub fn osculation_histogram(&self, n: u32) -> Vec<BigUint> {
        let mut hist: Vec<BigUint> = Vec::new();
        for (k, c) in self.entries.iter().filter(|(k, _)| k.n == n) {
            let idx = k.osc as usize;
            if hist.len() <= idx {
                hist.resize(idx + 1, BigUint::default());
            }
            hist[idx] += c;
        }
        hist
    }

    /// Forgets the anchor, merging cells that differ only by it.
    pub fn without_anchor(&self) -> CountTable {
        let mut entries: BTreeMap<CountKey, BigUint> = BTreeMap::new();
        for (k, c) in &self.entries {
            *entries.entry(CountKey { anchor: None, ..*k }).or_default() += c;
        }
        CountTable::new(self.system, self.n_max, false, entries)
    }

    /// Keeps only configurations with exactly `osc` osculations.
    pub fn with_osculations(&self, osc: u32) -> CountTable {
        let entries = self
            .entries
            .iter()
            .filter(|(k, _)| k.osc == osc)
            .map(|(k, c)| (*k, c.clone()))
            .collect();
        CountTable::new(self.system, self.n_max, self.positioned, entries)
    }

    fn series_by<C: crate::series::Ring>(
        &self,
        mut term: impl FnMut(&CountKey, Rational) -> C,
    ) -> TruncSeries<C> {
        let order = self.n_max as usize;
        TruncSeries::from_terms(
            self.entries
                .iter()
                .map(|(k, c)| (k.n as usize, term(k, to_rational(c)))),
            order,
        )
    }

    /// Length generating function `sum_n (#configurations of length n) t^n`.
    pub fn length_series(&self) -> TruncSeries<Rational> {
        self.series_by(|_, c| c)
    }

    /// Length generating function with `u` marking osculations.
    pub fn length_series_u(&self) -> TruncSeries<UPoly> {
        self.series_by(|k, c| UPoly::monomial(k.osc as usize, c))
    }

    fn require_walkers(&self, expected: usize) -> Result<(), EnumError> {
        let found = self.system.walkers();
        if found == expected {
            Ok(())
        } else {
            Err(EnumError::WalkerCount { expected, found })
        }
    }

    /// Complete generating function of three walkers: `x` marks the first
    /// final gap, `y` the second.
    pub fn complete_gf(&self) -> Result<TruncSeries<LaurentPoly2>, EnumError> {
        self.require_walkers(3)?;
        Ok(self
            .series_by(|k, c| Laurent::monomial([k.gaps.get(0) as i32, k.gaps.get(1) as i32], c)))
    }

    /// As [`complete_gf`](Self::complete_gf), with `u` marking osculations.
    pub fn complete_gf_u(&self) -> Result<TruncSeries<LaurentPoly2U>, EnumError> {
        self.require_walkers(3)?;
        Ok(self.series_by(|k, c| {
            Laurent::monomial(
                [k.gaps.get(0) as i32, k.gaps.get(1) as i32],
                UPoly::monomial(k.osc as usize, c),
            )
        }))
    }

    /// Complete generating function of two walkers, `x` marking the final gap.
    pub fn complete_gf_two(&self) -> Result<TruncSeries<LaurentPoly1>, EnumError> {
        self.require_walkers(2)?;
        Ok(self.series_by(|k, c| Laurent::monomial(k.gaps.get(0) as i32, c)))
    }

    /// As [`complete_gf_two`](Self::complete_gf_two), with `u` marking osculations.
    pub fn complete_gf_two_u(&self) -> Result<TruncSeries<LaurentPoly1U>, EnumError> {
        self.require_walkers(2)?;
        Ok(self.series_by(|k, c| {
            Laurent::monomial(k.gaps.get(0) as i32, UPoly::monomial(k.osc as usize, c))
        }))
    }

    fn header(&self) -> Vec<String> {
        let mut cols = vec!["n".to_string()];
        for k in 1..self.system.walkers() {
            cols.push(format!("gap{k}"));
        }
        cols.push("osc".into());
        if self.positioned {
            cols.push("r".into());
        }
        cols.push("count".into());
        cols
    }

    /// CSV with a header row; one row per nonzero cell, in key order.
    pub fn to_csv(&self) -> String {
        let mut out = self.header().join(",");
        out.push('\n');
        for (k, c) in &self.entries {
            write!(out, "{}", k.n).unwrap();
            for g in k.gaps.as_slice() {
                write!(out, ",{g}").unwrap();
            }
            write!(out, ",{}", k.osc).unwrap();
            if let Some(r) = k.anchor {
                write!(out, ",{r}").unwrap();
            }
            writeln!(out, ",{c}").unwrap();
        }
        out
    }

    /// JSON object with the system description and the rows; counts are
    /// decimal strings.
    pub fn to_json_value(&self) -> Value {
        let rows: Vec<Value> = self
            .entries
            .iter()
            .map(|(k, c)| {
                let mut row = json!({
                    "n": k.n,
                    "gaps": k.gaps.as_slice(),
                    "osc": k.osc,
                    "count": c.to_string(),
                });
                if let Some(r) = k.anchor {
                    row["r"] = json!(r);
                }
                row
            })
            .collect();
        json!({
            "walkers": self.system.walkers(),
            "start": self.system.start.as_slice(),
            "mode": self.system.mode.name(),
            "n_max": self.n_max,
            "rows": rows,
        })
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }
}
