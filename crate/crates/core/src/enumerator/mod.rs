//! Ground-truth counting of walker configurations.
//!
//! Walkers are tracked only through the gaps between neighbours, measured
//! in units of two ordinate steps: three walkers at ordinates
//! `j1 <= j2 <= j3` have gap state `((j2 - j1)/2, (j3 - j2)/2)`. Counts are
//! translation invariant, so the gap state (plus the number of osculations
//! so far) is all the dynamic programme needs. An optional anchor keeps the
//! absolute position of the lowest walker for fixed-endpoint counts.

mod dp;
mod naive;
mod steps;
mod table;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use dp::{enumerate_dp, enumerate_dp_with, DpOptions};
pub use naive::{enumerate_naive, enumerate_naive_with, NAIVE_MAX_LENGTH};
pub use steps::{legal_steps, Move};
pub use table::{CountKey, CountTable};

/// Interaction rule between neighbouring walkers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Walkers stay ordered; they may share sites and edges.
    NonCrossing,
    /// Walkers may meet at a site but must separate on the next step.
    Osculating,
    /// Walkers never share a site.
    Vicious,
    /// Osculating walkers that may only meet at the final time.
    QuasiVicious,
}

impl Mode {
    pub const ALL: [Mode; 4] = [
        Mode::NonCrossing,
        Mode::Osculating,
        Mode::Vicious,
        Mode::QuasiVicious,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mode::NonCrossing => "non-crossing",
            Mode::Osculating => "osculating",
            Mode::Vicious => "vicious",
            Mode::QuasiVicious => "quasi-vicious",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = EnumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "non-crossing" | "noncrossing" => Ok(Mode::NonCrossing),
            "osculating" => Ok(Mode::Osculating),
            "vicious" => Ok(Mode::Vicious),
            "quasi-vicious" | "quasivicious" => Ok(Mode::QuasiVicious),
            _ => Err(EnumError::UnknownMode(s.to_string())),
        }
    }
}

/// Gaps between consecutive walkers, one entry per neighbouring pair.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GapState {
    gaps: [u32; 2],
    len: u8,
}

impl GapState {
    /// Gap state of `gaps.len() + 1` walkers. Panics unless 1 or 2 gaps.
    pub fn new(gaps: &[u32]) -> Self {
        assert!(
            (1..=2).contains(&gaps.len()),
            "only two or three walkers are supported"
        );
        let mut g = [0; 2];
        g[..gaps.len()].copy_from_slice(gaps);
        Self {
            gaps: g,
            len: gaps.len() as u8,
        }
    }

    pub fn pair(i: u32, j: u32) -> Self {
        Self::new(&[i, j])
    }

    pub fn single(i: u32) -> Self {
        Self::new(&[i])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.gaps[..self.len as usize]
    }

    pub fn get(&self, k: usize) -> u32 {
        self.as_slice()[k]
    }

    pub fn walkers(&self) -> usize {
        self.len as usize + 1
    }

    /// Number of neighbouring pairs currently in contact.
    pub fn contacts(&self) -> u32 {
        self.as_slice().iter().filter(|&&g| g == 0).count() as u32
    }

    pub fn all_positive(&self) -> bool {
        self.contacts() == 0
    }

    /// Applies gap deltas; `None` if some gap would become negative.
    pub fn apply(&self, delta: &[i8]) -> Option<Self> {
        let mut out = *self;
        for (g, d) in out.gaps[..self.len as usize].iter_mut().zip(delta) {
            let next = i64::from(*g) + i64::from(*d);
            if next < 0 {
                return None;
            }
            *g = next as u32;
        }
        Some(out)
    }
}

impl fmt::Debug for GapState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.as_slice())
    }
}

/// A family of walkers: how many, where they start, how they interact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WalkerSystem {
    pub start: GapState,
    pub mode: Mode,
}

impl WalkerSystem {
    /// Three walkers starting at ordinates `0, 2i, 2(i+j)`.
    pub fn star(i: u32, j: u32, mode: Mode) -> Self {
        Self {
            start: GapState::pair(i, j),
            mode,
        }
    }

    /// Two walkers starting at ordinates `0, 2i`.
    pub fn two(i: u32, mode: Mode) -> Self {
        Self {
            start: GapState::single(i),
            mode,
        }
    }

    pub fn walkers(&self) -> usize {
        self.start.walkers()
    }

    /// Whether the length-0 configuration already satisfies the mode.
    ///
    /// Only vicious walkers can fail here: coinciding starting points are
    /// not vicious, so such a system has no configurations at all.
    pub fn start_is_admissible(&self) -> bool {
        self.mode != Mode::Vicious || self.start.all_positive()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("unknown mode {0:?} (expected non-crossing, osculating, vicious or quasi-vicious)")]
    UnknownMode(String),
    #[error("naive enumeration is limited to length {max}, got {requested}")]
    NaiveTooLong { requested: u32, max: u32 },
    #[error("this operation needs {expected} walkers, the table has {found}")]
    WalkerCount { expected: usize, found: usize },
}
