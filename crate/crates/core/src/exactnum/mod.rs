//! Exact scalars.
//!
//! [`Rat`] is the arbitrary-precision rational, [`GaussRat`] adjoins `i`, and
//! [`RadNum`] is a finite sum `Σ c_s·√s` over squarefree positive radicands
//! with Gaussian-rational coefficients. Every value is kept in a unique normal
//! form, so `==` is structural equality.

mod field;
mod gauss;
mod integer;
mod radnum;

pub use field::Field;
pub use gauss::GaussRat;
pub use integer::square_part;
pub use radnum::{sqrt_rational, RadNum};

use num_bigint::BigInt;

/// Arbitrary-precision rational number in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

/// `n/d` as a [`Rat`]. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rat`].
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Serializes a [`Rat`] as its `p/q` string, for `#[serde(serialize_with)]`.
pub fn serialize_rat<S: serde::Serializer>(q: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(q)
}
