use super::{GapState, Mode};

/// One simultaneous step of all walkers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Move {
    /// `+1` (north-east) or `-1` (south-east) per walker, bottom first.
    pub steps: [i8; 3],
    /// Change of each gap, `(s_{k+1} - s_k) / 2`.
    pub delta: [i8; 2],
    /// Number of pairs in contact before the step, i.e. the osculations
    /// this step resolves.
    pub contacts: u8,
}

impl Move {
    pub fn departs_contact(&self) -> bool {
        self.contacts > 0
    }
}

/// All step vectors `{-1, +1}^p` for `p` walkers, bottom walker first.
fn step_vectors(walkers: usize) -> impl Iterator<Item = [i8; 3]> {
    (0..1u32 << walkers).map(move |bits| {
        let mut s = [0i8; 3];
        for (k, slot) in s.iter_mut().enumerate().take(walkers) {
            *slot = if bits >> k & 1 == 1 { 1 } else { -1 };
        }
        s
    })
}

/// The moves allowed out of `state` under `mode`.
///
/// - every mode keeps the walkers ordered (no gap below 0);
/// - osculating: a pair in contact must strictly separate;
/// - vicious: no gap may reach 0;
/// - quasi-vicious: gaps may reach 0, but a state with a contact is final.
///
/// Vicious and quasi-vicious states with a contact have no moves.
pub fn legal_steps(state: &GapState, mode: Mode) -> Vec<Move> {
    let walkers = state.walkers();
    let contacts = state.contacts() as u8;
    if matches!(mode, Mode::Vicious | Mode::QuasiVicious) && contacts > 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(1 << walkers);
    for steps in step_vectors(walkers) {
        let mut delta = [0i8; 2];
        for k in 0..walkers - 1 {
            delta[k] = (steps[k + 1] - steps[k]) / 2;
        }
        let legal = state.as_slice().iter().zip(delta).all(|(&g, d)| {
            let next = i64::from(g) + i64::from(d);
            match mode {
                Mode::NonCrossing | Mode::QuasiVicious => next >= 0,
                Mode::Osculating => next >= 0 && (g > 0 || d == 1),
                Mode::Vicious => next >= 1,
            }
        });
        if legal {
            out.push(Move {
                steps,
                delta,
                contacts,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force over the 8 step triples, straight from the ordinates.
    /// `keep` sees the new and old ordinate differences `(n1, n2, o1, o2)`.
    fn brute_force_count(gaps: (i64, i64), keep: impl Fn(i64, i64, i64, i64) -> bool) -> usize {
        let mut n = 0;
        for s1 in [-1i64, 1] {
            for s2 in [-1i64, 1] {
                for s3 in [-1i64, 1] {
                    let (a, b, c) = (0, 2 * gaps.0, 2 * (gaps.0 + gaps.1));
                    let (a2, b2, c2) = (a + s1, b + s2, c + s3);
                    if keep(b2 - a2, c2 - b2, b - a, c - b) {
                        n += 1;
                    }
                }
            }
        }
        n
    }

    #[test]
    fn free_state_allows_all_eight_osculating_moves() {
        assert_eq!(
            legal_steps(&GapState::pair(1, 1), Mode::Osculating).len(),
            8
        );
    }

    #[test]
    fn single_contact_leaves_two_moves() {
        let moves = legal_steps(&GapState::pair(0, 1), Mode::Osculating);
        assert_eq!(moves.len(), 2);
        assert!(moves.iter().all(|m| m.delta[0] == 1 && m.contacts == 1));
    }

    #[test]
    fn vicious_from_one_one() {
        let brute = brute_force_count((1, 1), |n1, n2, _, _| n1 > 0 && n2 > 0);
        assert_eq!(brute, 4);
        assert_eq!(
            legal_steps(&GapState::pair(1, 1), Mode::Vicious).len(),
            brute
        );
    }

    #[test]
    fn triple_contact_is_stuck_when_osculating() {
        assert!(legal_steps(&GapState::pair(0, 0), Mode::Osculating).is_empty());
        // Non-crossing walkers can move together: both all-up and all-down,
        // plus the moves opening one or both gaps.
        let brute = brute_force_count((0, 0), |n1, n2, _, _| n1 >= 0 && n2 >= 0);
        assert_eq!(
            legal_steps(&GapState::pair(0, 0), Mode::NonCrossing).len(),
            brute
        );
    }

    #[test]
    fn quasi_vicious_contact_is_terminal() {
        assert!(legal_steps(&GapState::pair(0, 3), Mode::QuasiVicious).is_empty());
        assert_eq!(
            legal_steps(&GapState::pair(1, 1), Mode::QuasiVicious).len(),
            8
        );
    }

    #[test]
    fn two_walkers() {
        assert_eq!(legal_steps(&GapState::single(2), Mode::Osculating).len(), 4);
        let from_contact = legal_steps(&GapState::single(0), Mode::Osculating);
        assert_eq!(from_contact.len(), 1);
        assert_eq!(from_contact[0].steps[..2], [-1, 1]);
    }

    #[test]
    fn matches_brute_force_everywhere() {
        for g1 in 0..3i64 {
            for g2 in 0..3i64 {
                let state = GapState::pair(g1 as u32, g2 as u32);
                let osc = brute_force_count((g1, g2), |n1, n2, o1, o2| {
                    n1 >= 0 && n2 >= 0 && (o1 > 0 || n1 > 0) && (o2 > 0 || n2 > 0)
                });
                assert_eq!(
                    legal_steps(&state, Mode::Osculating).len(),
                    osc,
                    "{state:?}"
                );
                let nc = brute_force_count((g1, g2), |n1, n2, _, _| n1 >= 0 && n2 >= 0);
                assert_eq!(
                    legal_steps(&state, Mode::NonCrossing).len(),
                    nc,
                    "{state:?}"
                );
            }
        }
    }
}
