//! Exact algebra for heights on plane curves: certified heights of algebraic
//! numbers, the explicit quasi-equivalence constants, auxiliary polynomial
//! constructions, and a Runge-type integral point search.

pub mod absirr;
pub mod auxiliary;
pub mod bigfloat;
pub mod bipoly;
pub mod diffop;
pub mod error;
pub mod factor;
pub mod heights;
pub mod linalg;
pub mod parse;
pub mod rational;
pub mod resultant;
pub mod runge;
pub mod roots;
pub mod upoly;

pub use absirr::count_absolute_factors;
pub use auxiliary::{AuxConstruction, AuxParams};
pub use bipoly::{BiPoly, Var};
pub use diffop::BranchSeries;
pub use error::{Error, Result};
pub use factor::Factorization;
pub use heights::{AlgebraicNumber, CurvePoint, QuasiReport, Verdict};
pub use linalg::SparseMatrix;
pub use parse::{parse_algebraic, parse_bipoly, parse_univariate};
pub use rational::BigRat;
pub use roots::{Approx, RootBall};
pub use runge::{RungeCondition, RungeReport};
pub use upoly::{IntPoly, RatPoly};

/// Default per-coefficient bit budget.
pub const DEFAULT_BITS_CAP: u64 = 1_000_000;

/// Resource limits shared by the routines that can blow up coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub bits_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            bits_cap: DEFAULT_BITS_CAP,
        }
    }
}
