//! Liouvillian solvability and differential Galois groups of second-order
//! linear ODEs with rational coefficients.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactnum`]: exact scalars (rationals, Gaussian rationals and sums of
//!   square roots over them).
//! * [`polyrat`]: univariate polynomials and rational functions, poles,
//!   Laurent coefficients and partial fractions.
//! * [`ode`]: second-order equations, reduction to `ξ'' = rξ` and
//!   singularity classification.
//! * [`kovacic`]: Kovacic's algorithm with Galois group labelling, plus the
//!   completing-squares path for polynomial potentials.
//! * [`algebrize`]: rewriting `ÿ = r(t)y` with exponential/trigonometric `r`
//!   into an equation with rational coefficients.
//! * [`nve`]: Lie derivatives along planar Hamiltonian flows, the `E_{n,k}`
//!   recurrence and the Hamiltonian families with prescribed normal
//!   variational equations.
//! * [`verdict`]: Morales-Ramis non-integrability verdicts.

pub mod algebrize;
pub mod error;
pub mod exactnum;
pub mod kovacic;
pub mod nve;
pub mod ode;
pub mod polyrat;
pub mod verdict;

pub use error::{Error, Result};
pub use exactnum::{Field, GaussRat, RadNum, Rat};
pub use polyrat::{Poly, RatFunc};
