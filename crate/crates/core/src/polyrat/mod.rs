//! Univariate polynomials and rational functions over an exact [`Field`],
//! with the local data (poles, Laurent coefficients, orders, square-root
//! parts) that the Kovacic algorithm consumes.
//!
//! [`Field`]: crate::exactnum::Field

mod laurent;
mod linalg;
mod partial;
mod poly;
mod ratfunc;
mod roots;

pub use laurent::{
    laurent_at, laurent_at_infinity, laurent_series_at, laurent_series_at_infinity, order_at,
    order_at_infinity, residue, sqrt_part_at, sqrt_part_at_infinity, Laurent, SqrtPart,
};
pub(crate) use laurent::half;
pub use linalg::{nullity, solve_affine, solve_linear};
pub use partial::{hermite_reduce, partial_fractions, HermiteReduction, PartialFractions, PolePart};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use roots::{poles, rational_roots, roots, Pole};
