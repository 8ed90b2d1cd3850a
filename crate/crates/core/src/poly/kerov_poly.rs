use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::format_terms;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A polynomial in free cumulants `R_2, R_3, …`.
///
/// A monomial `∏ R_i^{s_i}` is keyed by `[s_2, s_3, …]` with trailing zeros
/// removed, so the derived ordering is the lexicographic order of the
/// zero-padded vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KerovPolynomial {
    terms: BTreeMap<Vec<u32>, Rational>,
}

fn trim(mut s: Vec<u32>) -> Vec<u32> {
    while s.last() == Some(&0) {
        s.pop();
    }
    s
}

impl KerovPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `R_i`, `i ≥ 2`.
    pub fn r(i: usize) -> Self {
        assert!(i >= 2, "free cumulant index starts at 2");
        let mut s = vec![0; i - 1];
        s[i - 2] = 1;
        let mut f = Self::zero();
        f.add_term(s, Rational::one());
        f
    }

    pub fn constant(c: Rational) -> Self {
        let mut f = Self::zero();
        f.add_term(Vec::new(), c);
        f
    }

    /// `s` is `[s_2, s_3, …]`.
    pub fn add_term(&mut self, s: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(trim(s)) {
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

    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut f = Self::zero();
        for (s, c) in terms {
            f.add_term(s, c);
        }
        f
    }

    /// Coefficient of `∏ R_i^{s_i}`, `s = [s_2, s_3, …]`.
    pub fn coefficient(&self, s: &[u32]) -> Rational {
        self.terms
            .get(&trim(s.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
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

    /// `Σ i·s_i` of a monomial key.
    pub fn weight(s: &[u32]) -> u32 {
        s.iter().enumerate().map(|(j, &x)| (j as u32 + 2) * x).sum()
    }

    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(|s| Self::weight(s)).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(s, x)| (s.clone(), x * c)))
    }

    /// Substitutes `R_i ↦ r[i]` (so `r[0]`, `r[1]` are ignored).
    pub fn evaluate(&self, r: &[Rational]) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (s, c) in &self.terms {
            let mut t = c.clone();
            for (j, &x) in s.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let v = r
                    .get(j + 2)
                    .ok_or_else(|| Error::validation(format!("no value supplied for R{}", j + 2)))?;
                t *= num_traits::pow(v.clone(), x as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::validation(format!("bad Kerov polynomial JSON: {e}")))
    }
}

fn monomial_text(s: &[u32]) -> String {
    let factors: Vec<String> = s
        .iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(j, &x)| {
            if x == 1 {
                format!("R{}", j + 2)
            } else {
                format!("R{}^{x}", j + 2)
            }
        })
        .collect();
    factors.join("*")
}

impl fmt::Display for KerovPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.terms.iter().map(|(s, c)| (c, monomial_text(s)))))
    }
}

impl Add for &KerovPolynomial {
    type Output = KerovPolynomial;
    fn add(self, rhs: &KerovPolynomial) -> KerovPolynomial {
        let mut out = self.clone();
        for (s, c) in &rhs.terms {
            out.add_term(s.clone(), c.clone());
        }
        out
    }
}

impl Sub for &KerovPolynomial {
    type Output = KerovPolynomial;
    fn sub(self, rhs: &KerovPolynomial) -> KerovPolynomial {
        self + &rhs.scale(&rational::int(-1))
    }
}

impl Mul for &KerovPolynomial {
    type Output = KerovPolynomial;
    fn mul(self, rhs: &KerovPolynomial) -> KerovPolynomial {
        let mut out = KerovPolynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let n = a.len().max(b.len());
                let s: Vec<u32> = (0..n)
                    .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
                    .collect();
                out.add_term(s, x * y);
            }
        }
        out
    }
}

struct SJson<'a>(&'a [u32]);

impl Serialize for SJson<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let nonzero: Vec<(usize, u32)> = self.0.iter().copied().enumerate().filter(|&(_, x)| x > 0).collect();
        let mut map = serializer.serialize_map(Some(nonzero.len()))?;
        for (j, x) in nonzero {
            map.serialize_entry(&(j + 2).to_string(), &x)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct TermOut<'a> {
    s: SJson<'a>,
    coeff: String,
}

#[derive(Serialize)]
struct KerovOut<'a> {
    terms: Vec<TermOut<'a>>,
}

#[derive(Deserialize)]
struct TermIn {
    s: BTreeMap<String, u32>,
    coeff: String,
}

#[derive(Deserialize)]
struct KerovIn {
    terms: Vec<TermIn>,
}

impl Serialize for KerovPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        KerovOut {
            terms: self
                .terms
                .iter()
                .map(|(s, c)| TermOut {
                    s: SJson(s),
                    coeff: rational::format(c),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for KerovPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = KerovIn::deserialize(deserializer)?;
        let mut f = KerovPolynomial::zero();
        for t in raw.terms {
            let mut s = Vec::new();
            for (k, x) in t.s {
                let i: usize = k
                    .parse()
                    .map_err(|_| D::Error::custom(format!("bad cumulant index {k:?}")))?;
                if i < 2 {
                    return Err(D::Error::custom(format!("cumulant index {i} below 2")));
                }
                if s.len() < i - 1 {
                    s.resize(i - 1, 0);
                }
                s[i - 2] = x;
            }
            f.add_term(s, rational::parse(&t.coeff).map_err(D::Error::custom)?);
        }
        Ok(f)
    }
}
