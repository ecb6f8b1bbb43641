//! Interchangeable word-problem deciders, selectable by name.

use crate::braid::artin;
use crate::braid::word::BraidWord;
use crate::error::{Error, Result};

pub trait WordProblemSolver: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    /// Whether `a` and `b` (same strand count) are the same element of `B_n`.
    fn equal(&self, a: &BraidWord, b: &BraidWord) -> Result<bool>;
}

pub struct GarsideSolver;

impl WordProblemSolver for GarsideSolver {
    fn name(&self) -> &'static str {
        "garside"
    }

    fn description(&self) -> &'static str {
        "left-greedy normal form with permutation-braid factors"
    }

    fn equal(&self, a: &BraidWord, b: &BraidWord) -> Result<bool> {
        a.equals(b)
    }
}

pub struct ArtinActionSolver;

impl WordProblemSolver for ArtinActionSolver {
    fn name(&self) -> &'static str {
        "artin"
    }

    fn description(&self) -> &'static str {
        "faithful action on the free group"
    }

    fn equal(&self, a: &BraidWord, b: &BraidWord) -> Result<bool> {
        if a.strands() != b.strands() {
            return Err(Error::StrandMismatch { left: a.strands(), right: b.strands() });
        }
        Ok(artin::action(a) == artin::action(b))
    }
}

static SOLVERS: &[&dyn WordProblemSolver] = &[&GarsideSolver, &ArtinActionSolver];

pub fn solvers() -> &'static [&'static dyn WordProblemSolver] {
    SOLVERS
}

pub fn solver(name: &str) -> Result<&'static dyn WordProblemSolver> {
    SOLVERS
        .iter()
        .copied()
        .find(|s| s.name() == name)
        .ok_or_else(|| Error::UnknownName { kind: "solver", name: name.to_string() })
}
