//! Seeded machine checks of the coherence diagrams of the tricategory of
//! commutative algebras, defects, sectors and intertwiners.
//!
//! Each suite draws random instances from a splitmix64 stream and compares
//! the two sides of a diagram as exact matrices.
//!
//! Case `n` of a suite run with seed `s` uses the seed given by the
//! `(n+1)`-th output of splitmix64 started at state `s`; that case seed is
//! printed in the report, and the instance is a function of it alone.

mod checks;
mod generate;

use std::fmt;
use std::str::FromStr;

pub use checks::{
    associator_modification_check, hexagon_check, pentagon_check, pentagonator_check, square_check, triangle_check,
    unitors_check, Diagram,
};
pub use generate::InstanceGenerator;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseKind {
    Pentagon,
    Triangle,
    InterchangerSquare,
    InterchangerHexagon,
    Pentagonator,
    AssociatorModification,
    Unitors,
}

impl CaseKind {
    pub const ALL: [CaseKind; 7] = [
        CaseKind::Pentagon,
        CaseKind::Triangle,
        CaseKind::InterchangerSquare,
        CaseKind::InterchangerHexagon,
        CaseKind::Pentagonator,
        CaseKind::AssociatorModification,
        CaseKind::Unitors,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseKind::Pentagon => "pentagon",
            CaseKind::Triangle => "triangle",
            CaseKind::InterchangerSquare => "interchanger-square",
            CaseKind::InterchangerHexagon => "interchanger-hexagon",
            CaseKind::Pentagonator => "pentagonator",
            CaseKind::AssociatorModification => "associator-modification",
            CaseKind::Unitors => "unitors",
        }
    }

    /// Number of cases in a full run.
    pub fn default_cases(self) -> usize {
        match self {
            CaseKind::InterchangerHexagon => 25,
            _ => 100,
        }
    }

    /// Largest bimodule (or, for the pentagonator, defect algebra) dimension.
    pub fn default_max_dim(self) -> usize {
        match self {
            CaseKind::Pentagon | CaseKind::Triangle | CaseKind::InterchangerSquare | CaseKind::Unitors => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CaseKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The two composites differ; `entry` is the first differing position.
    Mismatch {
        entry: (usize, usize),
        lhs: Matrix,
        rhs: Matrix,
    },
    /// The instance could not be generated or a composite is undefined.
    Error(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub kind: CaseKind,
    pub case: usize,
    pub seed: u64,
    pub outcome: Outcome,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

fn entry_or_blank(m: &Matrix, (i, j): (usize, usize)) -> String {
    if i < m.rows() && j < m.cols() {
        m.get(i, j).to_string()
    } else {
        format!("{}x{}", m.rows(), m.cols())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (kind, case, seed) = (self.kind, self.case, self.seed);
        match &self.outcome {
            Outcome::Pass => write!(f, "OK {kind} case={case} seed={seed}"),
            Outcome::Mismatch { entry, lhs, rhs } => write!(
                f,
                "FAIL {kind} case={case} seed={seed} entry=({},{}) lhs={} rhs={}",
                entry.0,
                entry.1,
                entry_or_blank(lhs, *entry),
                entry_or_blank(rhs, *entry)
            ),
            Outcome::Error(e) => write!(f, "FAIL {kind} case={case} seed={seed} error={e}"),
        }
    }
}

/// Seeds of the first `cases` cases of a run.
pub fn case_seeds(seed: u64, cases: usize) -> Vec<u64> {
    let mut rng = SplitMix64::seed_from_u64(seed);
    (0..cases).map(|_| rng.next_u64()).collect()
}

/// Runs one case from its own seed.
pub fn run_case(kind: CaseKind, case: usize, seed: u64, max_dim: usize) -> CheckReport {
    let mut generator = InstanceGenerator::new(seed, max_dim);
    let outcome = match checks::run(kind, &mut generator) {
        Ok(diagrams) => match diagrams.into_iter().find(|d| !d.commutes()) {
            None => Outcome::Pass,
            Some(d) => Outcome::Mismatch { entry: d.first_difference().unwrap_or((0, 0)), lhs: d.lhs, rhs: d.rhs },
        },
        Err(e) => Outcome::Error(e.to_string()),
    };
    CheckReport { kind, case, seed, outcome }
}

/// Runs `cases` cases of a suite.
pub fn run_suite(kind: CaseKind, seed: u64, cases: usize, max_dim: usize) -> Result<Vec<CheckReport>> {
    if cases == 0 {
        return Err(Error::InvalidArgument("a suite needs at least one case".into()));
    }
    if max_dim == 0 {
        return Err(Error::InvalidArgument("max-dim must be positive".into()));
    }
    Ok(case_seeds(seed, cases).into_iter().enumerate().map(|(n, s)| run_case(kind, n, s, max_dim)).collect())
}

/// Renders reports one per line.
pub fn render(reports: &[CheckReport]) -> String {
    reports.iter().map(|r| format!("{r}\n")).collect()
}

#[cfg(test)]
mod tests;
