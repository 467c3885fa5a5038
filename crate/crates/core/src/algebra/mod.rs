//! Exact integer, rational and univariate polynomial arithmetic.
//!
//! Integers and rationals are `num-bigint` / `num-rational` values; this
//! module supplies the polynomial layer on top of them.

mod cyclotomic;
mod poly;
mod resultant;

pub use cyclotomic::{cyclotomic, divisors, factorize, totient};
pub use num_bigint::BigInt;
pub use num_rational::BigRational as BigRat;
pub use poly::{poly_gcd, squarefree_decomposition, squarefree_part, IntPoly, RatPoly};
pub use resultant::{bareiss_determinant, resultant, sylvester_resultant};

use num_traits::One;

/// Formats a rational as `"num"` when integral, otherwise `"num/den"`.
pub fn rat_to_string(r: &BigRat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
