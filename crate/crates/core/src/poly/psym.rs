use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::format_terms;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{self, Rational};

/// A symmetric function written in the power-sum basis, `Σ c_ρ p_ρ`.
///
/// Terms iterate in increasing lexicographic order of `ρ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PSymmetricFunction {
    terms: BTreeMap<Partition, Rational>,
}

impl PSymmetricFunction {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single basis element `p_ρ`.
    pub fn p(rho: Partition) -> Self {
        let mut f = Self::zero();
        f.add_term(rho, Rational::from_integer(1.into()));
        f
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut f = Self::zero();
        for (rho, c) in terms {
            f.add_term(rho, c);
        }
        f
    }

    pub fn add_term(&mut self, rho: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(rho);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Coefficient of `p_ρ` (zero when absent).
    pub fn coefficient(&self, rho: &Partition) -> Rational {
        self.terms.get(rho).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(r, x)| (r.clone(), x * c)))
    }

    /// Every `ρ` with a nonzero coefficient has `|ρ| = n`.
    pub fn is_homogeneous_of_degree(&self, n: usize) -> bool {
        self.terms.keys().all(|r| r.size() == n)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Text form, e.g. `p[1,1,1] + p[2,1] - 2*p[3]`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::validation(format!("bad symmetric function JSON: {e}")))
    }
}

/// Coefficient of `p_ρ` in `f`.
pub fn pfun_coefficient(f: &PSymmetricFunction, rho: &Partition) -> Rational {
    f.coefficient(rho)
}

impl fmt::Display for PSymmetricFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = format_terms(self.terms.iter().map(|(rho, c)| {
            let mono = if rho.is_empty() {
                String::new()
            } else {
                let parts: Vec<String> = rho.parts().iter().map(|x| x.to_string()).collect();
                format!("p[{}]", parts.join(","))
            };
            (c, mono)
        }));
        f.write_str(&text)
    }
}

impl Add for &PSymmetricFunction {
    type Output = PSymmetricFunction;
    fn add(self, rhs: &PSymmetricFunction) -> PSymmetricFunction {
        let mut out = self.clone();
        for (r, c) in &rhs.terms {
            out.add_term(r.clone(), c.clone());
        }
        out
    }
}

impl Sub for &PSymmetricFunction {
    type Output = PSymmetricFunction;
    fn sub(self, rhs: &PSymmetricFunction) -> PSymmetricFunction {
        let mut out = self.clone();
        for (r, c) in &rhs.terms {
            out.add_term(r.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &PSymmetricFunction {
    type Output = PSymmetricFunction;
    fn neg(self) -> PSymmetricFunction {
        self.scale(&rational::int(-1))
    }
}

impl Mul for &PSymmetricFunction {
    type Output = PSymmetricFunction;
    /// `p_ρ p_σ = p_{ρ ∪ σ}`.
    fn mul(self, rhs: &PSymmetricFunction) -> PSymmetricFunction {
        let mut out = PSymmetricFunction::zero();
        for (r, a) in &self.terms {
            for (s, b) in &rhs.terms {
                let mut parts = r.parts().to_vec();
                parts.extend_from_slice(s.parts());
                out.add_term(Partition::new(parts), a * b);
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct PsymJson {
    basis: String,
    terms: Vec<PsymTermJson>,
}

#[derive(Serialize, Deserialize)]
struct PsymTermJson {
    mu: Vec<u32>,
    coeff: String,
}

impl Serialize for PSymmetricFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PsymJson {
            basis: "p".into(),
            terms: self
                .terms
                .iter()
                .map(|(r, c)| PsymTermJson {
                    mu: r.parts().to_vec(),
                    coeff: rational::format(c),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PSymmetricFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PsymJson::deserialize(deserializer)?;
        if raw.basis != "p" {
            return Err(D::Error::custom(format!("unsupported basis {:?}", raw.basis)));
        }
        let mut f = PSymmetricFunction::zero();
        for t in raw.terms {
            let rho = Partition::try_from(t.mu).map_err(D::Error::custom)?;
            let c = rational::parse(&t.coeff).map_err(D::Error::custom)?;
            f.add_term(rho, c);
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn z21() -> PSymmetricFunction {
        PSymmetricFunction::from_terms([
            (Partition::new(vec![1, 1, 1]), int(1)),
            (Partition::new(vec![2, 1]), int(1)),
            (Partition::new(vec![3]), int(-2)),
        ])
    }

    #[test]
    fn coefficients() {
        let f = z21();
        assert_eq!(pfun_coefficient(&f, &Partition::new(vec![1, 1, 1])), int(1));
        assert_eq!(pfun_coefficient(&f, &Partition::new(vec![3])), int(-2));
        assert_eq!(pfun_coefficient(&f, &Partition::new(vec![2])), int(0));
    }

    #[test]
    fn text_form() {
        assert_eq!(z21().to_text(), "p[1,1,1] + p[2,1] - 2*p[3]");
        assert_eq!(PSymmetricFunction::zero().to_text(), "0");
        let g = PSymmetricFunction::from_terms([(Partition::new(vec![2]), int(-1))]);
        assert_eq!(g.to_text(), "-p[2]");
        let h = PSymmetricFunction::from_terms([(Partition::empty(), rational::frac(1, 2))]);
        assert_eq!(h.to_text(), "1/2");
    }

    #[test]
    fn json_round_trip() {
        let f = z21();
        let s = f.to_json();
        assert_eq!(
            s,
            r#"{"basis":"p","terms":[{"mu":[1,1,1],"coeff":"1"},{"mu":[2,1],"coeff":"1"},{"mu":[3],"coeff":"-2"}]}"#
        );
        let back = PSymmetricFunction::from_json(&s).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.to_json(), s);
        assert!(PSymmetricFunction::from_json(r#"{"basis":"m","terms":[]}"#).is_err());
    }

    #[test]
    fn arithmetic() {
        let f = z21();
        assert!((&f - &f).is_zero());
        let p1 = PSymmetricFunction::p(Partition::new(vec![1]));
        let sq = &p1 * &p1;
        assert_eq!(sq.coefficient(&Partition::new(vec![1, 1])), int(1));
        let sum = &f + &(-&f);
        assert!(sum.is_zero());
        assert!(f.is_homogeneous_of_degree(3));
        assert!(f.has_integer_coefficients());
    }
}
