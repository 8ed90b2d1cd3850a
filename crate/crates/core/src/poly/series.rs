use super::Ring;
use crate::error::{Error, Result};
use crate::rational;

/// A Cauchy-transform-like Laurent series `G(z) = Σ_{n≥0} c_n z^{−n−1}`,
/// truncated after `c_N`. For a probability measure `c_n` is the `n`-th
/// moment and `c_0 = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> FormalSeries<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        FormalSeries { coeffs }
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    /// Highest `n` with a known `c_n`.
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

// (M(z)^j truncated to degree n) for j = 0..=n
fn truncated_powers<T: Ring>(m: &[T], n: usize) -> Vec<Vec<T>> {
    let zero = m[0].zero_like();
    let mut powers = Vec::with_capacity(n + 1);
    let mut one = vec![zero.clone(); n + 1];
    one[0] = m[0].one_like();
    powers.push(one);
    for j in 1..=n {
        let prev = &powers[j - 1];
        let mut next = vec![zero.clone(); n + 1];
        for (a, pa) in prev.iter().enumerate() {
            if pa.is_zero_elem() {
                continue;
            }
            for b in 0..=n - a {
                if b < m.len() && !m[b].is_zero_elem() {
                    next[a + b] = next[a + b].add_ref(&pa.mul_ref(&m[b]));
                }
            }
        }
        powers.push(next);
    }
    powers
}

/// Coefficients `R_1..R_{n_max}` of the functional inverse
/// `K(z) = 1/z + Σ R_n z^{n−1}` of `G`.
///
/// Solves `M_n = Σ_{j=1}^{n} R_j [z^{n−j}] M(z)^j` for `R_n`, where
/// `M(z) = Σ M_i z^i` is the moment generating series.
pub fn series_functional_inverse<T: Ring>(g: &FormalSeries<T>, n_max: usize) -> Result<Vec<T>> {
    let m = g.coefficients();
    if m.is_empty() || m[0] != m[0].one_like() {
        return Err(Error::validation("series must start with 1/z"));
    }
    if m.len() <= n_max {
        return Err(Error::validation(format!(
            "series known to order {}, need {n_max}",
            m.len() - 1
        )));
    }
    let powers = truncated_powers(m, n_max);
    let mut r: Vec<T> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut acc = m[n].clone();
        for j in 1..n {
            acc = acc.sub_ref(&r[j - 1].mul_ref(&powers[j][n - j]));
        }
        r.push(acc);
    }
    Ok(r)
}

/// The inverse direction: moments `M_0..M_{n}` from cumulants `R_1..R_n`.
pub fn moments_from_cumulants<T: Ring>(r: &[T]) -> Vec<T> {
    assert!(!r.is_empty(), "need at least R_1");
    let n_max = r.len();
    let one = r[0].one_like();
    let mut m = vec![one];
    for n in 1..=n_max {
        // [z^{n−j}] M^j only involves M_0..M_{n−1}
        let mut padded = m.clone();
        padded.push(r[0].zero_like());
        let powers = truncated_powers(&padded, n);
        let mut acc = r[0].zero_like();
        for j in 1..=n {
            acc = acc.add_ref(&r[j - 1].mul_ref(&powers[j][n - j]));
        }
        m.push(acc);
    }
    m
}

/// Moments from the power sums `P_j = Σ x^j − Σ y^j` of an interlacing
/// sequence, via `n M_n = Σ_{j=1}^{n} P_j M_{n−j}`.
pub(crate) fn moments_from_power_sums<T: Ring>(one: &T, power_sums: &[T]) -> Vec<T> {
    let mut m = vec![one.clone()];
    for n in 1..=power_sums.len() {
        let mut acc = one.zero_like();
        for j in 1..=n {
            acc = acc.add_ref(&power_sums[j - 1].mul_ref(&m[n - j]));
        }
        m.push(acc.scale(&rational::frac(1, n as i64)));
    }
    m
}
