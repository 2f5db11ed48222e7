use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use super::steps::legal_steps;
use super::table::{CountKey, CountTable};
use super::{GapState, WalkerSystem};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DpOptions {
    /// Track the absolute position of the bottom walker (the `r` index of
    /// fixed-endpoint counts).
    pub positioned: bool,
    /// Process each time layer on the rayon pool.
    pub parallel: bool,
}

type State = (GapState, u32, u32);
type Layer = HashMap<State, BigUint>;

fn advance(layer: &[(&State, &BigUint)], system: &WalkerSystem, opts: DpOptions) -> Layer {
    let step = |mut acc: Layer, &(&(gaps, osc, anchor), count): &(&State, &BigUint)| {
        for mv in legal_steps(&gaps, system.mode) {
            let next = gaps
                .apply(&mv.delta[..gaps.as_slice().len()])
                .expect("legal step keeps gaps nonnegative");
            let anchor = if opts.positioned && mv.steps[0] > 0 {
                anchor + 1
            } else {
                anchor
            };
            *acc.entry((next, osc + u32::from(mv.contacts), anchor))
                .or_default() += count;
        }
        acc
    };
    if opts.parallel {
        layer
            .par_iter()
            .fold(Layer::new, step)
            .reduce(Layer::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_default() += v;
                }
                a
            })
    } else {
        layer.iter().fold(Layer::new(), step)
    }
}

/// Counts all configurations of length `0..=n_max` by dynamic programming
/// over gap states.
pub fn enumerate_dp(system: WalkerSystem, n_max: u32) -> CountTable {
    enumerate_dp_with(system, n_max, DpOptions::default())
}

pub fn enumerate_dp_with(system: WalkerSystem, n_max: u32, opts: DpOptions) -> CountTable {
    let mut entries = BTreeMap::new();
    let mut layer = Layer::new();
    if system.start_is_admissible() {
        layer.insert((system.start, 0, 0), BigUint::one());
    }
    for n in 0..=n_max {
        for (&(gaps, osc, anchor), count) in &layer {
            let key = CountKey {
                n,
                gaps,
                osc,
                anchor: opts.positioned.then_some(anchor),
            };
            entries.insert(key, count.clone());
        }
        if n == n_max || layer.is_empty() {
            break;
        }
        // Sorted so that the fold order, and hence the run, is reproducible.
        let mut cells: Vec<(&State, &BigUint)> = layer.iter().collect();
        cells.sort_unstable_by_key(|(k, _)| **k);
        layer = advance(&cells, &system, opts);
    }
    CountTable::new(system, n_max, opts.positioned, entries)
}

#[cfg(test)]
mod tests {
    use super::super::Mode;
    use super::*;

    fn totals(system: WalkerSystem, n_max: u32) -> Vec<u64> {
        let t = enumerate_dp(system, n_max);
        (0..=n_max)
            .map(|n| t.total(n).try_into().unwrap())
            .collect()
    }

    #[test]
    fn small_totals() {
        assert_eq!(
            totals(WalkerSystem::star(1, 1, Mode::Osculating), 2),
            [1, 8, 40]
        );
        assert_eq!(
            totals(WalkerSystem::star(1, 1, Mode::Vicious), 2),
            [1, 4, 20]
        );
        assert_eq!(
            totals(WalkerSystem::star(0, 1, Mode::Osculating), 1),
            [1, 2]
        );
    }

    #[test]
    fn zero_start_vicious_is_empty() {
        assert!(enumerate_dp(WalkerSystem::star(0, 2, Mode::Vicious), 4).is_empty());
    }

    #[test]
    fn osculating_zero_zero_never_moves() {
        assert_eq!(
            totals(WalkerSystem::star(0, 0, Mode::Osculating), 3),
            [1, 0, 0, 0]
        );
    }

    #[test]
    fn parallel_matches_sequential() {
        let system = WalkerSystem::star(1, 2, Mode::Osculating);
        let seq = enumerate_dp(system, 7);
        let par = enumerate_dp_with(
            system,
            7,
            DpOptions {
                parallel: true,
                ..DpOptions::default()
            },
        );
        assert_eq!(seq, par);
    }

    #[test]
    fn positioned_collapses_to_plain() {
        let system = WalkerSystem::star(2, 1, Mode::Vicious);
        let pos = enumerate_dp_with(
            system,
            6,
            DpOptions {
                positioned: true,
                ..DpOptions::default()
            },
        );
        assert_eq!(pos.without_anchor(), enumerate_dp(system, 6));
    }

    #[test]
    fn osculations_at_start_contact_are_counted() {
        // Both length-1 (0,1)-stars leave the initial contact: one osculation each.
        let t = enumerate_dp(WalkerSystem::star(0, 1, Mode::Osculating), 1);
        assert_eq!(
            t.osculation_histogram(1),
            [BigUint::from(0u8), BigUint::from(2u8)]
        );
    }
}
