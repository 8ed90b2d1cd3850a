use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{format_terms, Ring};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A polynomial in the Stanley coordinates `p_1..p_m, q_1..q_m`.
///
/// Monomials are dense exponent vectors `[e(p_1), …, e(p_m), e(q_1), …,
/// e(q_m)]`; terms iterate in increasing lexicographic order of that vector.
/// Binary operations on polynomials with different `m` embed the smaller one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PQPolynomial {
    vars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl PQPolynomial {
    pub fn zero(vars: usize) -> Self {
        PQPolynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: Rational) -> Self {
        let mut f = Self::zero(vars);
        f.add_term(vec![0; 2 * vars], c);
        f
    }

    /// The variable `p_i`, `1 ≤ i ≤ vars`.
    pub fn p(vars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= vars, "p_{i} outside 1..={vars}");
        let mut e = vec![0; 2 * vars];
        e[i - 1] = 1;
        let mut f = Self::zero(vars);
        f.add_term(e, Rational::one());
        f
    }

    /// The variable `q_i`, `1 ≤ i ≤ vars`.
    pub fn q(vars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= vars, "q_{i} outside 1..={vars}");
        let mut e = vec![0; 2 * vars];
        e[vars + i - 1] = 1;
        let mut f = Self::zero(vars);
        f.add_term(e, Rational::one());
        f
    }

    /// Builds from `(exponents, coefficient)` pairs; each exponent vector has
    /// length `2·vars`.
    pub fn from_terms(vars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut f = Self::zero(vars);
        for (e, c) in terms {
            f.add_term(e, c);
        }
        f
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        assert_eq!(exps.len(), 2 * self.vars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Same polynomial viewed in `vars ≥ self.vars()` variable pairs.
    pub fn with_vars(&self, vars: usize) -> Self {
        assert!(vars >= self.vars, "cannot shrink with with_vars; use restrict_vars");
        if vars == self.vars {
            return self.clone();
        }
        let m = self.vars;
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0; 2 * vars];
                ne[..m].copy_from_slice(&e[..m]);
                ne[vars..vars + m].copy_from_slice(&e[m..]);
                (ne, c.clone())
            })
            .collect();
        PQPolynomial { vars, terms }
    }

    /// Sets `p_j = 0` for `j > vars` and drops those variables. Fails if some
    /// surviving term still involves a `q_j` with `j > vars`.
    pub fn restrict_vars(&self, vars: usize) -> Result<Self> {
        assert!(vars <= self.vars);
        let m = self.vars;
        let mut out = Self::zero(vars);
        for (e, c) in &self.terms {
            if e[vars..m].iter().any(|&x| x > 0) {
                continue;
            }
            if e[m + vars..].iter().any(|&x| x > 0) {
                return Err(Error::Invariant(format!(
                    "term {} survives p_j = 0 for j > {vars}",
                    monomial_text(e, m)
                )));
            }
            let mut ne = Vec::with_capacity(2 * vars);
            ne.extend_from_slice(&e[..vars]);
            ne.extend_from_slice(&e[m..m + vars]);
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        PQPolynomial {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// `q_i ↦ c·q_i` for every `i`.
    pub fn scale_q(&self, c: &Rational) -> Self {
        let m = self.vars;
        Self::from_terms(
            m,
            self.terms.iter().map(|(e, x)| {
                let d: u32 = e[m..].iter().sum();
                (e.clone(), x * rational::pow(c, d as i64))
            }),
        )
    }

    /// `q_i ↦ −q_i` for every `i`.
    pub fn substitute_negate_q(&self) -> Self {
        self.scale_q(&rational::int(-1))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(self.vars, Rational::one());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Evaluates at concrete `p`, `q` (each of length `vars`).
    pub fn evaluate(&self, p: &[Rational], q: &[Rational]) -> Result<Rational> {
        let m = self.vars;
        if p.len() != m || q.len() != m {
            return Err(Error::validation(format!(
                "evaluation needs {m} values for p and q, got {} and {}",
                p.len(),
                q.len()
            )));
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    let v = if i < m { &p[i] } else { &q[i - m] };
                    t *= num_traits::pow(v.clone(), x as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::validation(format!("bad pq-polynomial JSON: {e}")))
    }

    fn aligned(&self, other: &Self) -> (std::borrow::Cow<'_, Self>, usize) {
        let m = self.vars.max(other.vars);
        if self.vars == m {
            (std::borrow::Cow::Borrowed(self), m)
        } else {
            (std::borrow::Cow::Owned(self.with_vars(m)), m)
        }
    }
}

/// `q_i ↦ −q_i` applied to `f`.
pub fn pq_substitute_negate_q(f: &PQPolynomial) -> PQPolynomial {
    f.substitute_negate_q()
}

fn var_name(i: usize, m: usize) -> String {
    if i < m {
        format!("p{}", i + 1)
    } else {
        format!("q{}", i - m + 1)
    }
}

pub(crate) fn monomial_text(e: &[u32], m: usize) -> String {
    let factors: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(i, &x)| {
            if x == 1 {
                var_name(i, m)
            } else {
                format!("{}^{x}", var_name(i, m))
            }
        })
        .collect();
    factors.join("*")
}

impl fmt::Display for PQPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(
            self.terms.iter().map(|(e, c)| (c, monomial_text(e, self.vars))),
        ))
    }
}

impl Add for &PQPolynomial {
    type Output = PQPolynomial;
    fn add(self, rhs: &PQPolynomial) -> PQPolynomial {
        let (a, m) = self.aligned(rhs);
        let (b, _) = rhs.aligned(self);
        let mut out = a.into_owned();
        out.vars = m;
        for (e, c) in b.terms.iter() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &PQPolynomial {
    type Output = PQPolynomial;
    fn sub(self, rhs: &PQPolynomial) -> PQPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &PQPolynomial {
    type Output = PQPolynomial;
    fn neg(self) -> PQPolynomial {
        PQPolynomial {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &PQPolynomial {
    type Output = PQPolynomial;
    fn mul(self, rhs: &PQPolynomial) -> PQPolynomial {
        let (a, m) = self.aligned(rhs);
        let (b, _) = rhs.aligned(self);
        let mut out = PQPolynomial::zero(m);
        for (ea, ca) in a.terms.iter() {
            for (eb, cb) in b.terms.iter() {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Ring for PQPolynomial {
    fn zero_like(&self) -> Self {
        Self::zero(self.vars)
    }
    fn one_like(&self) -> Self {
        Self::constant(self.vars, Rational::one())
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
        PQPolynomial::scale(self, c)
    }
}

struct ExpJson<'a>(&'a [u32], usize);

impl Serialize for ExpJson<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let nonzero: Vec<(usize, u32)> = self.0.iter().copied().enumerate().filter(|&(_, x)| x > 0).collect();
        let mut map = serializer.serialize_map(Some(nonzero.len()))?;
        for (i, x) in nonzero {
            map.serialize_entry(&var_name(i, self.1), &x)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct PqTermOut<'a> {
    exp: ExpJson<'a>,
    coeff: String,
}

#[derive(Serialize)]
struct PqOut<'a> {
    vars: usize,
    terms: Vec<PqTermOut<'a>>,
}

#[derive(Deserialize)]
struct PqIn {
    vars: usize,
    terms: Vec<PqTermIn>,
}

#[derive(Deserialize)]
struct PqTermIn {
    exp: BTreeMap<String, u32>,
    coeff: String,
}

impl Serialize for PQPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PqOut {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| PqTermOut {
                    exp: ExpJson(e, self.vars),
                    coeff: rational::format(c),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

fn parse_var(name: &str, m: usize) -> Option<usize> {
    let (kind, idx) = name.split_at(1);
    let i: usize = idx.parse().ok()?;
    if i == 0 || i > m {
        return None;
    }
    match kind {
        "p" => Some(i - 1),
        "q" => Some(m + i - 1),
        _ => None,
    }
}

impl<'de> Deserialize<'de> for PQPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PqIn::deserialize(deserializer)?;
        let m = raw.vars;
        let mut f = PQPolynomial::zero(m);
        for t in raw.terms {
            let mut e = vec![0; 2 * m];
            for (name, x) in t.exp {
                let i = parse_var(&name, m).ok_or_else(|| D::Error::custom(format!("unknown variable {name:?}")))?;
                e[i] = x;
            }
            f.add_term(e, rational::parse(&t.coeff).map_err(D::Error::custom)?);
        }
        Ok(f)
    }
}
