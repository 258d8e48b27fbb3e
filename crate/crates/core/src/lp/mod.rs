//! Linear programs over layered families: separator LPs, their path-indexed
//! duals, and the shared simplex backend.

pub mod ab;
pub mod balanced;
pub mod simplex;

use serde::{Deserialize, Serialize};

/// How path constraints are handled.
///
/// `Exact` enumerates the induced path family up to a cap and solves the full
/// LP, yielding a dual distribution over paths. `Fast` runs constraint
/// generation against the vertex-weighted shortest-path relaxation; it yields
/// primal values and a valid objective but no path dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Fast,
}

/// Numeric backend for the simplex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arithmetic {
    Float,
    Rational,
}

/// Shared solver knobs. Pivot tolerance is for basis decisions; certificate
/// tolerance is for a-posteriori feasibility and duality checks.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct LpConfig {
    pub mode: Mode,
    pub arithmetic: Arithmetic,
    pub tol: f64,
    pub cert_tol: f64,
    pub path_cap: usize,
}

impl Default for LpConfig {
    fn default() -> Self {
        LpConfig {
            mode: Mode::Exact,
            arithmetic: Arithmetic::Float,
            tol: 1e-9,
            cert_tol: 1e-6,
            path_cap: 200_000,
        }
    }
}

impl LpConfig {
    pub fn fast() -> Self {
        LpConfig { mode: Mode::Fast, ..Self::default() }
    }

    pub(crate) fn solve(
        &self,
        p: &simplex::Problem,
    ) -> crate::error::Result<simplex::Solution> {
        match self.arithmetic {
            Arithmetic::Float => simplex::solve_f64(p, self.tol),
            Arithmetic::Rational => simplex::solve_rational(p, self.tol),
        }
    }
}

/// Relative gap test between a primal and dual objective.
pub fn check_strong_duality(primal: f64, dual: f64, tol: f64) -> bool {
    (primal - dual).abs() <= tol * primal.abs().max(1.0)
}
