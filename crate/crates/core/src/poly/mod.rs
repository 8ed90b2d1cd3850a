//! Exact sparse polynomials: symmetric functions in the power-sum basis,
//! polynomials in Stanley coordinates, polynomials in free cumulants, and
//! formal series over any of these.

mod kerov_poly;
mod pq;
mod psym;
mod series;

pub use kerov_poly::KerovPolynomial;
pub use pq::{pq_substitute_negate_q, PQPolynomial};
pub use psym::{pfun_coefficient, PSymmetricFunction};
pub(crate) use series::moments_from_power_sums;
pub use series::{moments_from_cumulants, series_functional_inverse, FormalSeries};

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// The arithmetic needed by the series routines.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
}

/// Joins `(coefficient, monomial)` pairs as `2*x - y + 1/2*z`. An empty
/// monomial string stands for the constant term.
pub(crate) fn format_terms<'a>(terms: impl Iterator<Item = (&'a Rational, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
