//! Exhaustive oracle: generate step sequences walker by walker and test the
//! model definitions directly on the ordinates.
//!
//! Nothing here shares code with the gap-state DP. Every property tested is
//! prefix-closed (a configuration is valid only if all its prefixes are), so
//! subtrees under an invalid prefix are skipped without changing the result.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;

use super::table::{CountKey, CountTable};
use super::{EnumError, GapState, Mode, WalkerSystem};

/// Longest configuration the exhaustive oracle accepts.
pub const NAIVE_MAX_LENGTH: u32 = 10;

type Ordinates = [i64; 3];

fn ordered(o: &Ordinates, p: usize) -> bool {
    (0..p - 1).all(|k| o[k] <= o[k + 1])
}

fn strictly_ordered(o: &Ordinates, p: usize) -> bool {
    (0..p - 1).all(|k| o[k] < o[k + 1])
}

fn contacts(o: &Ordinates, p: usize) -> u32 {
    (0..p - 1).filter(|&k| o[k] == o[k + 1]).count() as u32
}

/// Walkers in contact at the earlier time are strictly apart at the later one.
fn separates(prev: &Ordinates, cur: &Ordinates, p: usize) -> bool {
    (0..p - 1).all(|k| prev[k] != prev[k + 1] || cur[k] < cur[k + 1])
}

/// Whether a configuration whose last two times are `prev`, `cur` is valid,
/// given that its prefix ending at `prev` is.
fn extends(mode: Mode, prev: &Ordinates, cur: &Ordinates, p: usize) -> bool {
    match mode {
        Mode::NonCrossing => ordered(cur, p),
        Mode::Vicious => strictly_ordered(cur, p),
        Mode::Osculating => ordered(cur, p) && separates(prev, cur, p),
        // All times before the last are contact-free.
        Mode::QuasiVicious => strictly_ordered(prev, p) && ordered(cur, p),
    }
}

fn valid_start(mode: Mode, o: &Ordinates, p: usize) -> bool {
    match mode {
        Mode::Vicious => strictly_ordered(o, p),
        _ => ordered(o, p),
    }
}

struct Search<'a> {
    mode: Mode,
    p: usize,
    n_max: u32,
    positioned: bool,
    counts: &'a mut HashMap<CountKey, u64>,
}

impl Search<'_> {
    fn record(&mut self, n: u32, o: &Ordinates, osc: u32) {
        let gaps: Vec<u32> = (0..self.p - 1)
            .map(|k| ((o[k + 1] - o[k]) / 2) as u32)
            .collect();
        let anchor = self.positioned.then(|| ((o[0] + i64::from(n)) / 2) as u32);
        let key = CountKey {
            n,
            gaps: GapState::new(&gaps),
            osc,
            anchor,
        };
        *self.counts.entry(key).or_default() += 1;
    }

    fn visit(&mut self, n: u32, cur: Ordinates, osc: u32) {
        self.record(n, &cur, osc);
        if n == self.n_max {
            return;
        }
        let osc_next = osc + contacts(&cur, self.p);
        for bits in 0..1u32 << self.p {
            let mut next = cur;
            for (k, o) in next.iter_mut().enumerate().take(self.p) {
                *o += if bits >> k & 1 == 1 { 1 } else { -1 };
            }
            if extends(self.mode, &cur, &next, self.p) {
                self.visit(n + 1, next, osc_next);
            }
        }
    }
}

/// Exhaustive enumeration up to length `n_max <= 10`.
pub fn enumerate_naive(system: WalkerSystem, n_max: u32) -> Result<CountTable, EnumError> {
    enumerate_naive_with(system, n_max, false)
}

/// As [`enumerate_naive`], optionally recording the bottom walker's position.
pub fn enumerate_naive_with(
    system: WalkerSystem,
    n_max: u32,
    positioned: bool,
) -> Result<CountTable, EnumError> {
    if n_max > NAIVE_MAX_LENGTH {
        return Err(EnumError::NaiveTooLong {
            requested: n_max,
            max: NAIVE_MAX_LENGTH,
        });
    }
    let p = system.walkers();
    let mut start: Ordinates = [0; 3];
    for k in 1..p {
        start[k] = start[k - 1] + 2 * i64::from(system.start.get(k - 1));
    }
    let mut counts = HashMap::new();
    if valid_start(system.mode, &start, p) {
        let mut search = Search {
            mode: system.mode,
            p,
            n_max,
            positioned,
            counts: &mut counts,
        };
        search.visit(0, start, 0);
    }
    let entries: BTreeMap<CountKey, BigUint> = counts
        .into_iter()
        .map(|(k, c)| (k, BigUint::from(c)))
        .collect();
    Ok(CountTable::new(system, n_max, positioned, entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_configuration() {
        let t = enumerate_naive(WalkerSystem::star(1, 1, Mode::Osculating), 0).unwrap();
        assert_eq!(t.len(), 1);
        let (k, c) = t.iter().next().unwrap();
        assert_eq!((k.n, k.osc, c.clone()), (0, 0, BigUint::from(1u8)));
    }

    #[test]
    fn two_first_steps_from_zero_one() {
        let t = enumerate_naive(WalkerSystem::star(0, 1, Mode::Osculating), 1).unwrap();
        assert_eq!(t.total(1), BigUint::from(2u8));
    }

    #[test]
    fn length_limit() {
        assert!(enumerate_naive(WalkerSystem::star(1, 1, Mode::Vicious), 11).is_err());
    }

    #[test]
    fn quasi_vicious_stops_at_contact() {
        let t = enumerate_naive(WalkerSystem::star(0, 1, Mode::QuasiVicious), 3).unwrap();
        assert_eq!(t.total(0), BigUint::from(1u8));
        assert_eq!(t.total(1), BigUint::from(0u8));
    }
}
