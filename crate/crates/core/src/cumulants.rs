//! Free cumulants of Young diagrams via the transition measure.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::MultiRect;
use crate::poly::{moments_from_power_sums, series_functional_inverse, FormalSeries, PQPolynomial};
use crate::rational::{self, Rational};

/// Local minima `x_0 < … < x_m` and maxima `y_1 < … < y_m` of a diagram
/// profile drawn in content coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterlacingCoords {
    minima: Vec<Rational>,
    maxima: Vec<Rational>,
}

impl InterlacingCoords {
    /// Checks `x_0 < y_1 < x_1 < … < y_m < x_m` and `Σx = Σy`.
    pub fn new(minima: Vec<Rational>, maxima: Vec<Rational>) -> Result<InterlacingCoords> {
        if minima.len() != maxima.len() + 1 {
            return Err(Error::validation(format!(
                "{} minima need {} maxima, got {}",
                minima.len(),
                minima.len().saturating_sub(1),
                maxima.len()
            )));
        }
        for (i, y) in maxima.iter().enumerate() {
            if !(minima[i] < *y && *y < minima[i + 1]) {
                return Err(Error::validation(format!("maximum {y} does not interlace the minima")));
            }
        }
        let balance: Rational = minima.iter().sum::<Rational>() - maxima.iter().sum::<Rational>();
        if !balance.is_zero() {
            return Err(Error::validation(format!(
                "minima and maxima are unbalanced by {balance}"
            )));
        }
        Ok(InterlacingCoords { minima, maxima })
    }

    pub fn minima(&self) -> &[Rational] {
        &self.minima
    }

    pub fn maxima(&self) -> &[Rational] {
        &self.maxima
    }
}

/// A finitely supported probability measure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMeasure {
    atoms: Vec<(Rational, Rational)>,
}

impl TransitionMeasure {
    /// `(location, weight)` pairs ordered by location.
    pub fn atoms(&self) -> &[(Rational, Rational)] {
        &self.atoms
    }

    /// `M_0..=M_n`.
    pub fn moments(&self, n: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); n + 1];
        for (x, w) in &self.atoms {
            let mut pw = w.clone();
            for m in out.iter_mut() {
                *m += &pw;
                pw *= x;
            }
        }
        out
    }
}

pub fn interlacing_of_multirect(m: &MultiRect) -> Result<InterlacingCoords> {
    let canonical = MultiRect::new(m.p().to_vec(), m.q().to_vec())?;
    if canonical != *m {
        return Err(Error::validation("multirectangular coordinates are not canonical"));
    }
    let mut minima = Vec::with_capacity(m.blocks() + 1);
    let mut maxima = Vec::with_capacity(m.blocks());
    let mut height = Rational::zero();
    for (p, q) in m.p().iter().zip(m.q()) {
        minima.push(q - &height);
        height += p;
        maxima.push(q - &height);
    }
    minima.push(-height);
    minima.sort();
    maxima.sort();
    InterlacingCoords::new(minima, maxima)
}

/// Atoms at the minima `x_k` with weight `∏_i (x_k − y_i) / ∏_{j≠k} (x_k − x_j)`.
pub fn transition_measure(c: &InterlacingCoords) -> Result<TransitionMeasure> {
    let (x, y) = (&c.minima, &c.maxima);
    let mut atoms = Vec::with_capacity(x.len());
    for (k, xk) in x.iter().enumerate() {
        let mut num = Rational::one();
        for yi in y {
            num *= xk - yi;
        }
        let mut den = Rational::one();
        for (j, xj) in x.iter().enumerate() {
            if j != k {
                den *= xk - xj;
            }
        }
        if den.is_zero() {
            return Err(Error::validation("minima are not distinct"));
        }
        atoms.push((xk.clone(), num / den));
    }
    let measure = TransitionMeasure { atoms };
    let m = measure.moments(1);
    if measure.atoms.iter().any(|(_, w)| !w.is_positive()) || !m[0].is_one() || !m[1].is_zero() {
        return Err(Error::Invariant(format!(
            "not a centred probability measure: {:?}",
            measure.atoms
        )));
    }
    Ok(measure)
}

/// `R_1..=R_{n_max}` of the diagram.
pub fn free_cumulants(m: &MultiRect, n_max: usize) -> Result<Vec<Rational>> {
    if n_max == 0 {
        return Err(Error::validation("n_max must be at least 1"));
    }
    let mu = transition_measure(&interlacing_of_multirect(m)?)?;
    let r = series_functional_inverse(&FormalSeries::new(mu.moments(n_max)), n_max)?;
    if !r[0].is_zero() {
        return Err(Error::Invariant(format!("R_1 = {} for {m}", r[0])));
    }
    Ok(r)
}

/// `R_k^{(α)}(λ) = α^{−k} R_k(αλ)`, with `αλ` the diagram with rows stretched by `α`.
pub fn anisotropic_cumulant(m: &MultiRect, alpha: &Rational, k: usize) -> Result<Rational> {
    if k == 0 {
        return Err(Error::validation("k must be at least 1"));
    }
    Ok(anisotropic_cumulants(m, alpha, k)?.pop().expect("k >= 1"))
}

/// `R_1^{(α)}..=R_{n_max}^{(α)}`.
pub fn anisotropic_cumulants(m: &MultiRect, alpha: &Rational, n_max: usize) -> Result<Vec<Rational>> {
    let r = free_cumulants(&m.stretch(alpha)?, n_max)?;
    Ok(r.into_iter()
        .enumerate()
        .map(|(i, v)| v * rational::pow(alpha, -(i as i64 + 1)))
        .collect())
}

/// `R_1..=R_{n_max}` of `p × q` as polynomials in `m` rectangle variables.
pub fn free_cumulants_symbolic(m: usize, n_max: usize) -> Result<Vec<PQPolynomial>> {
    if n_max == 0 {
        return Err(Error::validation("n_max must be at least 1"));
    }
    let mut minima = Vec::with_capacity(m + 1);
    let mut maxima = Vec::with_capacity(m);
    let mut height = PQPolynomial::zero(m);
    for i in 1..=m {
        minima.push(&PQPolynomial::q(m, i) - &height);
        height = &height + &PQPolynomial::p(m, i);
        maxima.push(&PQPolynomial::q(m, i) - &height);
    }
    minima.push(-&height);

    let mut power_sums = Vec::with_capacity(n_max);
    let mut xp = minima.clone();
    let mut yp = maxima.clone();
    for n in 1..=n_max {
        if n > 1 {
            xp = xp.iter().zip(&minima).map(|(a, b)| a * b).collect();
            yp = yp.iter().zip(&maxima).map(|(a, b)| a * b).collect();
        }
        let mut s = PQPolynomial::zero(m);
        for v in &xp {
            s = &s + v;
        }
        for v in &yp {
            s = &s - v;
        }
        power_sums.push(s);
    }
    let moments = moments_from_power_sums(&PQPolynomial::constant(m, Rational::one()), &power_sums);
    series_functional_inverse(&FormalSeries::new(moments), n_max)
}

/// `R_j^{(α)} = α^{−j} R_j(p, αq)` symbolically.
pub fn anisotropic_cumulants_symbolic(m: usize, alpha: &Rational, n_max: usize) -> Result<Vec<PQPolynomial>> {
    let r = free_cumulants_symbolic(m, n_max)?;
    Ok(r.iter()
        .enumerate()
        .map(|(i, f)| f.scale_q(alpha).scale(&rational::pow(alpha, -(i as i64 + 1))))
        .collect())
}
