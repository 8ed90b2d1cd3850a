//! Zonal polynomials in the power-sum basis, from admissible couples of
//! pair-partitions, and an independent Jack polynomial construction used as
//! a reference.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg;
use crate::loops::trace_loops;
use crate::pair_partition::PairPartitions;
use crate::partition::{tableau_2lambda, Partition};
use crate::poly::PSymmetricFunction;
use crate::rational::{self, Rational};

/// Largest `|λ|` accepted by [`zonal_polynomial`].
pub const ZONAL_CAPACITY: usize = 6;
/// Largest `|λ|` accepted by [`jack_oracle`].
pub const JACK_ORACLE_CAPACITY: usize = 8;

/// The two Jack parameters handled by the library.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alpha {
    /// `α = 2`, zonal.
    Two,
    /// `α = 1/2`, symplectic zonal.
    Half,
}

impl Alpha {
    pub fn value(self) -> Rational {
        match self {
            Alpha::Two => rational::int(2),
            Alpha::Half => rational::frac(1, 2),
        }
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Alpha::Two => "2",
            Alpha::Half => "1/2",
        })
    }
}

impl FromStr for Alpha {
    type Err = Error;
    fn from_str(s: &str) -> Result<Alpha> {
        match s.trim() {
            "2" => Ok(Alpha::Two),
            "1/2" | "0.5" => Ok(Alpha::Half),
            other => Err(Error::validation(format!("alpha must be 2 or 1/2, got {other:?}"))),
        }
    }
}

/// Sorted (decreasing) half-lengths of the loops of `L(a, b)`.
pub(crate) fn loop_type_raw(a: &[u32], b: &[u32]) -> Vec<u32> {
    let (loops, _) = trace_loops(a, b);
    let mut t: Vec<u32> = loops.iter().map(|l| l.len() as u32 / 2).collect();
    t.sort_unstable_by(|x, y| y.cmp(x));
    t
}

// every bijection between two equally long label lists, written into partner arrays
fn column_pair_matchings(left: &[u32], right: &[u32]) -> Vec<Vec<(u32, u32)>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..right.len()).collect();
    permutations(&mut perm, 0, &mut |p| {
        out.push(left.iter().zip(p).map(|(&l, &r)| (l, right[r])).collect());
    });
    out
}

fn permutations(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}

/// Cartesian product of per-block pairings, each block a list of label pairs.
fn product_of_blocks(n: usize, blocks: &[Vec<Vec<(u32, u32)>>]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![u32::MAX; n]];
    for choices in blocks {
        let mut next = Vec::with_capacity(out.len() * choices.len());
        for partial in &out {
            for choice in choices {
                let mut p = partial.clone();
                for &(a, b) in choice {
                    p[a as usize - 1] = b - 1;
                    p[b as usize - 1] = a - 1;
                }
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// `Z_λ = Σ (−1)^{L(S,S1)} p_{L(S1,S2)}` over couples with `S2` preserving the
/// rows of the tableau of `2λ` and `S∘S1` preserving its columns.
///
/// Both factors are built directly: `S2` as a product of perfect matchings of
/// each row, `S1` as a product of bijections between columns `2j−1` and `2j`.
pub fn zonal_polynomial(lambda: &Partition) -> Result<PSymmetricFunction> {
    let n = lambda.size();
    if n > ZONAL_CAPACITY {
        return Err(Error::capacity(format!(
            "zonal polynomial limited to |lambda| <= {ZONAL_CAPACITY}, got {lambda}"
        )));
    }
    if n == 0 {
        return Ok(PSymmetricFunction::p(Partition::empty()));
    }
    let t = tableau_2lambda(lambda)?;
    let s = t.neighbor_pairing().raw().to_vec();

    let row_blocks: Vec<Vec<Vec<(u32, u32)>>> = t
        .rows()
        .iter()
        .map(|row| {
            PairPartitions::of_size(row.len() / 2)
                .map(|m| {
                    m.pairs()
                        .iter()
                        .map(|&(a, b)| (row[a as usize - 1], row[b as usize - 1]))
                        .collect()
                })
                .collect()
        })
        .collect();
    let column_blocks: Vec<Vec<Vec<(u32, u32)>>> = (1..=t.width() / 2)
        .map(|j| column_pair_matchings(&t.column(2 * j - 1), &t.column(2 * j)))
        .collect();

    let s2_all = product_of_blocks(2 * n, &row_blocks);
    let s1_all = product_of_blocks(2 * n, &column_blocks);

    let counts = s1_all
        .par_iter()
        .map(|s1| {
            let loops = trace_loops(&s, s1).0.len();
            let sign: i64 = if (n - loops).is_multiple_of(2) { 1 } else { -1 };
            let mut local: HashMap<Vec<u32>, i64> = HashMap::new();
            for s2 in &s2_all {
                *local.entry(loop_type_raw(s1, s2)).or_default() += sign;
            }
            local
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    Ok(PSymmetricFunction::from_terms(
        counts
            .into_iter()
            .map(|(rho, c)| (Partition::new(rho), rational::int(c))),
    ))
}

/// Coefficient of `m_λ` in `p_ρ`: the number of ways to distribute the parts
/// of `ρ` into the slots of `λ` so that slot `j` receives total `λ_j`.
fn p_to_m(rho: &Partition, lambda: &Partition) -> u64 {
    fn go(parts: &[u32], slots: &mut [u32]) -> u64 {
        let Some((&first, rest)) = parts.split_first() else {
            return slots.iter().all(|&s| s == 0) as u64;
        };
        let mut total = 0;
        for j in 0..slots.len() {
            if slots[j] >= first {
                slots[j] -= first;
                total += go(rest, slots);
                slots[j] += first;
            }
        }
        total
    }
    let mut slots = lambda.parts().to_vec();
    go(rho.parts(), &mut slots)
}

/// Jack polynomials `J^{(α)}_λ` for every `λ ⊢ n`, in the power-sum basis,
/// normalized by `[p_{1^n}] J_λ = 1`.
///
/// Gram–Schmidt on the monomial basis, in increasing lexicographic order,
/// for the scalar product `⟨p_ρ, p_σ⟩ = δ_{ρσ} z_ρ α^{ℓ(ρ)}`.
pub(crate) fn jack_basis(n: usize, alpha: &Rational) -> Result<Vec<(Partition, PSymmetricFunction)>> {
    let mut parts = Partition::all(n);
    parts.reverse();
    let size = parts.len();
    let a: Vec<Vec<Rational>> = parts
        .iter()
        .map(|rho| parts.iter().map(|l| rational::int(p_to_m(rho, l) as i64)).collect())
        .collect();
    // m_λ = Σ_ρ inv[λ][ρ] p_ρ, with p = A m
    let inv = linalg::inverse(&a)?;
    let weight: Vec<Rational> = parts
        .iter()
        .map(|rho| rational::from_biguint(&rho.z()) * rational::pow(alpha, rho.len() as i64))
        .collect();
    let dot = |u: &[Rational], v: &[Rational]| -> Rational {
        u.iter().zip(v).zip(&weight).map(|((x, y), w)| x * y * w).sum()
    };
    let mut basis: Vec<Vec<Rational>> = Vec::with_capacity(size);
    let mut norms: Vec<Rational> = Vec::with_capacity(size);
    for i in 0..size {
        let m = &inv[i];
        let mut v = m.clone();
        for (b, nb) in basis.iter().zip(&norms) {
            let c = dot(m, b) / nb;
            if !c.is_zero() {
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &c * y;
                }
            }
        }
        norms.push(dot(&v, &v));
        basis.push(v);
    }
    // p_{1^n} comes first in increasing order
    let ones = 0;
    basis
        .into_iter()
        .zip(parts.iter())
        .map(|(v, lambda)| {
            let lead = v[ones].clone();
            if lead.is_zero() {
                return Err(Error::Invariant(format!("[p_1^n] of J_{lambda} vanishes")));
            }
            let f = PSymmetricFunction::from_terms(parts.iter().cloned().zip(v.iter().map(|x| x / &lead)));
            Ok((lambda.clone(), f))
        })
        .collect()
}

/// `J^{(α)}_λ` for a rational `α > 0`.
pub(crate) fn jack_polynomial(lambda: &Partition, alpha: &Rational) -> Result<PSymmetricFunction> {
    if lambda.is_empty() {
        return Ok(PSymmetricFunction::p(Partition::empty()));
    }
    jack_basis(lambda.size(), alpha)?
        .into_iter()
        .find(|(l, _)| l == lambda)
        .map(|(_, f)| f)
        .ok_or_else(|| Error::Invariant(format!("{lambda} missing from its own degree")))
}

/// `J^{(2)}_λ` built from orthogonality and triangularity alone.
pub fn jack_oracle(lambda: &Partition) -> Result<PSymmetricFunction> {
    if lambda.size() > JACK_ORACLE_CAPACITY {
        return Err(Error::capacity(format!(
            "Jack oracle limited to |lambda| <= {JACK_ORACLE_CAPACITY}, got {lambda}"
        )));
    }
    jack_polynomial(lambda, &rational::int(2))
}

/// `θ^{(α)}_ρ(λ)`, the coefficient of `p_ρ` in `J^{(α)}_λ`, for `α ∈ {2, 1/2}`.
/// The `α = 1/2` value is `θ^{(2)}_ρ(λ′) / (−2)^{|ρ|−ℓ(ρ)}`.
pub fn theta_coefficient(lambda: &Partition, rho: &Partition, alpha: Alpha) -> Result<Rational> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: rho.size(),
        });
    }
    match alpha {
        Alpha::Two => Ok(zonal_polynomial(lambda)?.coefficient(rho)),
        Alpha::Half => {
            let v = zonal_polynomial(&lambda.conjugate())?.coefficient(rho);
            Ok(v * rational::pow(&rational::int(-2), -((rho.size() - rho.len()) as i64)))
        }
    }
}
