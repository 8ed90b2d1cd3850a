//! Zonal Kerov polynomials: coefficients by counting triplets of
//! pair-partitions with a labelling of the black loops, and an algebraic
//! oracle for one-part `μ`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::characters::stanley_polynomial;
use crate::cumulants::{anisotropic_cumulants, anisotropic_cumulants_symbolic};
use crate::error::{Error, Result};
use crate::linalg::solve_unique;
use crate::loops::canonical_couple;
use crate::pair_partition::enumerate_pair_partitions;
use crate::partition::{MultiRect, Partition};
use crate::poly::{KerovPolynomial, PQPolynomial};
use crate::rational::{self, Rational};
use crate::triplet::{triplet_graph_raw, BipartiteGraph};

/// Largest `|μ|` for the counting routines.
pub const KEROV_CAPACITY: usize = 5;
/// Largest `k` for [`kerov_oracle`].
pub const KEROV_ORACLE_CAPACITY: usize = 4;

type CountTable = BTreeMap<Vec<u32>, BigUint>;

fn check_mu(mu: &Partition) -> Result<()> {
    if mu.is_empty() {
        return Err(Error::validation("mu must be non-empty"));
    }
    if mu.size() > KEROV_CAPACITY {
        return Err(Error::capacity(format!(
            "Kerov polynomials limited to |mu| <= {KEROV_CAPACITY}, got {mu}"
        )));
    }
    Ok(())
}

// Transitive triplets only, grouped by graph.
fn connected_graphs(mu: &Partition) -> Result<Vec<(BipartiteGraph, u64)>> {
    let (s1, s2) = canonical_couple(mu)?;
    let all: Vec<_> = enumerate_pair_partitions(mu.size())?.collect();
    let table = all
        .par_iter()
        .filter_map(|s0| {
            let g = triplet_graph_raw(s0.raw(), s1.raw(), s2.raw());
            g.is_connected().then(|| g.graph().clone())
        })
        .fold(HashMap::new, |mut acc: HashMap<BipartiteGraph, u64>, g| {
            *acc.entry(g).or_default() += 1;
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (g, n) in b {
                *a.entry(g).or_default() += n;
            }
            a
        });
    let mut out: Vec<_> = table.into_iter().collect();
    out.sort_by(|a, b| {
        (a.0.black_count(), a.0.white_count(), a.0.edges()).cmp(&(b.0.black_count(), b.0.white_count(), b.0.edges()))
    });
    Ok(out)
}

// Calls f with every vector of `parts` positive integers summing to `total`.
fn compositions(total: usize, parts: usize, f: &mut impl FnMut(&[usize])) {
    fn go(rest: usize, parts: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == parts {
            if rest == 0 {
                f(cur);
            }
            return;
        }
        let left = parts - cur.len() - 1;
        for x in 1..=rest.saturating_sub(left) {
            cur.push(x);
            go(rest - x, parts, cur, f);
            cur.pop();
        }
    }
    if parts == 0 {
        if total == 0 {
            f(&[]);
        }
        return;
    }
    go(total, parts, &mut Vec::with_capacity(parts), f);
}

// Every proper non-empty subset A of black vertices has more white
// neighbours than Σ_{v∈A} (q(v) − 1).
fn hall_condition(masks: &[u64], excess: &[usize]) -> bool {
    let b = masks.len();
    let full = (1u32 << b) - 1;
    (1..full).all(|a| {
        let mut nb = 0u64;
        let mut need = 0usize;
        for v in 0..b {
            if a >> v & 1 == 1 {
                nb |= masks[v];
                need += excess[v];
            }
        }
        nb.count_ones() as usize > need
    })
}

fn count_table(mu: &Partition, hall: bool) -> Result<CountTable> {
    let graphs = connected_graphs(mu)?;
    let table = graphs
        .par_iter()
        .map(|(g, mult)| {
            let mut local: CountTable = BTreeMap::new();
            let masks = g.black_neighbour_masks();
            compositions(g.white_count(), g.black_count(), &mut |excess| {
                if hall && !hall_condition(&masks, excess) {
                    return;
                }
                let top = excess.iter().max().copied().unwrap_or(0);
                let mut s = vec![0u32; top];
                for &e in excess {
                    s[e - 1] += 1;
                }
                *local.entry(s).or_insert_with(BigUint::zero) += *mult;
            });
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (s, n) in b {
                *a.entry(s).or_insert_with(BigUint::zero) += n;
            }
            a
        });
    Ok(table)
}

fn cached_table(mu: &Partition) -> Result<Arc<CountTable>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<CountTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().expect("cache lock").get(mu) {
        return Ok(hit.clone());
    }
    let t = Arc::new(count_table(mu, true)?);
    cache.lock().expect("cache lock").insert(mu.clone(), t.clone());
    Ok(t)
}

fn trim(s: &[u32]) -> Vec<u32> {
    let mut v = s.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// The number of pairs `(S0, q)` with `⟨S0, S1, S2⟩` transitive,
/// `|L(S0,S1)| = Σ s_i`, `|L(S0,S2)| = Σ (i−1) s_i`, `q` taking the value `i`
/// on exactly `s_i` loops of `L(S0,S1)`, and every proper non-empty set `A`
/// of such loops meeting more than `Σ_{v∈A} (q(v) − 1)` loops of `L(S0,S2)`.
///
/// `s = [s_2, s_3, …]`.
pub fn kerov_count(mu: &Partition, s: &[u32]) -> Result<BigUint> {
    check_mu(mu)?;
    Ok(cached_table(mu)?.get(&trim(s)).cloned().unwrap_or_else(BigUint::zero))
}

/// Same count with the subset condition dropped.
pub fn kerov_count_without_subset_condition(mu: &Partition, s: &[u32]) -> Result<BigUint> {
    check_mu(mu)?;
    Ok(count_table(mu, false)?
        .get(&trim(s))
        .cloned()
        .unwrap_or_else(BigUint::zero))
}

fn weight(s: &[u32]) -> i64 {
    KerovPolynomial::weight(s) as i64
}

/// `K^{(2)}_μ` with the coefficient of `∏ (R_i^{(2)})^{s_i}` equal to
/// `(−1)^{|μ|+ℓ(μ)+Σ i s_i} 2^{Σ i s_i − ℓ(μ)}` times [`kerov_count`].
///
/// For several parts this counting formula is taken as the definition.
pub fn kerov_polynomial_combinatorial(mu: &Partition) -> Result<KerovPolynomial> {
    check_mu(mu)?;
    let table = cached_table(mu)?;
    let (k, l) = (mu.size() as i64, mu.len() as i64);
    Ok(KerovPolynomial::from_terms(table.iter().map(|(s, n)| {
        let w = weight(s);
        let c = rational::sign((k + l + w) % 2 == 1) * rational::pow2(w - l) * rational::from_biguint(n);
        (s.clone(), c)
    })))
}

/// `K^{(1/2)}_μ`: the coefficient of `∏ (R_i^{(1/2)})^{s_i}` is
/// `2^{−|μ|}` times [`kerov_count`].
pub fn symplectic_kerov(mu: &Partition) -> Result<KerovPolynomial> {
    check_mu(mu)?;
    let table = cached_table(mu)?;
    let scale = rational::pow2(-(mu.size() as i64));
    let f = KerovPolynomial::from_terms(
        table
            .iter()
            .map(|(s, n)| (s.clone(), rational::from_biguint(n) * &scale)),
    );
    if let Some((s, c)) = f.terms().find(|(_, c)| c.is_negative()) {
        return Err(Error::Invariant(format!(
            "negative coefficient {c} at {s:?} in K^(1/2)_{mu}"
        )));
    }
    Ok(f)
}

// Exponent vectors [s_2, …, s_{max}] of weight at most `max`.
fn monomials_up_to(max: usize) -> Vec<Vec<u32>> {
    fn go(i: usize, budget: usize, max: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i > max {
            out.push(trim(cur));
            return;
        }
        for e in 0..=budget / i {
            cur.push(e as u32);
            go(i + 1, budget - e * i, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(2, max, max, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `K^{(2)}_{(k)}` obtained by writing `Σ^{(2)}_{(k)}(p × q)` in the
/// symbolic free cumulants `R_j^{(2)}(p × q)`, `j ≤ k + 1`, by an exact
/// linear solve.
pub fn kerov_oracle(k: usize) -> Result<KerovPolynomial> {
    if k == 0 {
        return Err(Error::validation("k must be at least 1"));
    }
    if k > KEROV_ORACLE_CAPACITY {
        return Err(Error::capacity(format!(
            "Kerov oracle limited to k <= {KEROV_ORACLE_CAPACITY}, got {k}"
        )));
    }
    let mut last = None;
    for m in k + 1..=k + 3 {
        match kerov_oracle_in(k, m) {
            Err(Error::Singular(msg)) => last = Some(msg),
            other => return other,
        }
    }
    Err(Error::Singular(format!(
        "no unique solution for k={k}: {}",
        last.unwrap_or_default()
    )))
}

fn kerov_oracle_in(k: usize, m: usize) -> Result<KerovPolynomial> {
    let target = stanley_polynomial(&Partition::row(k as u32), m)?;
    let r = anisotropic_cumulants_symbolic(m, &rational::int(2), k + 1)?;
    let basis = monomials_up_to(k + 1);
    let columns: Vec<PQPolynomial> = basis
        .par_iter()
        .map(|s| {
            let mut f = PQPolynomial::constant(m, Rational::one());
            for (j, &e) in s.iter().enumerate() {
                if e > 0 {
                    f = &f * &r[j + 1].pow(e);
                }
            }
            f
        })
        .collect();
    let mut rows: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for f in columns.iter().chain(std::iter::once(&target)) {
        for (e, _) in f.terms() {
            let n = rows.len();
            rows.entry(e.clone()).or_insert(n);
        }
    }
    let mut a = vec![vec![Rational::zero(); columns.len()]; rows.len()];
    let mut b = vec![Rational::zero(); rows.len()];
    for (c, f) in columns.iter().enumerate() {
        for (e, v) in f.terms() {
            a[rows[e]][c] = v.clone();
        }
    }
    for (e, v) in target.terms() {
        b[rows[e]] = v.clone();
    }
    let x = solve_unique(&a, &b)?;
    Ok(KerovPolynomial::from_terms(basis.into_iter().zip(x)))
}

/// Evaluates a Kerov polynomial at the anisotropic free cumulants
/// `R_i^{(α)}` of a diagram.
pub fn evaluate_kerov(f: &KerovPolynomial, lambda: &MultiRect, alpha: &Rational) -> Result<Rational> {
    let n = f.max_weight().max(2) as usize;
    let mut r = vec![Rational::zero()];
    r.extend(anisotropic_cumulants(lambda, alpha, n)?);
    f.evaluate(&r)
}

/// Outcome of the integrality and divisibility check on `K^{(2)}_μ`.
#[derive(Clone, Debug)]
pub struct KerovIntegrityReport {
    pub mu: Partition,
    pub polynomial: KerovPolynomial,
    /// Every coefficient is an integer divisible by `2^{s_2 + 2 s_3 + 3 s_4 + …}`.
    pub passed: bool,
    pub violation: Option<(Vec<u32>, Rational)>,
}

pub fn kerov_integrality_report(mu: &Partition) -> Result<KerovIntegrityReport> {
    let f = kerov_polynomial_combinatorial(mu)?;
    let violation = f
        .terms()
        .find(|(s, c)| {
            let shift: i64 = s.iter().enumerate().map(|(j, &x)| (j as i64 + 1) * x as i64).sum();
            !(*c * rational::pow2(-shift)).is_integer()
        })
        .map(|(s, c)| (s.clone(), c.clone()));
    Ok(KerovIntegrityReport {
        mu: mu.clone(),
        passed: violation.is_none(),
        polynomial: f,
        violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{symplectic_character, zonal_character};
    use crate::rational::{frac, int};

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn count(mu: &[u32], s: &[u32]) -> u64 {
        kerov_count(&part(mu), s).unwrap().try_into().unwrap()
    }

    #[test]
    fn counts_for_mu_two() {
        assert_eq!(count(&[2], &[1]), 1);
        assert_eq!(count(&[2], &[0, 1]), 1);
        assert_eq!(count(&[2], &[2]), 0);
        assert_eq!(count(&[1], &[1]), 1);
        assert_eq!(count(&[1, 1], &[1]), 2);
    }

    #[test]
    fn compositions_are_complete() {
        let mut seen = Vec::new();
        compositions(4, 2, &mut |c| seen.push(c.to_vec()));
        assert_eq!(seen, vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        let mut n = 0;
        compositions(0, 0, &mut |_| n += 1);
        assert_eq!(n, 1);
        compositions(1, 2, &mut |_| n += 1);
        assert_eq!(n, 1);
    }

    #[test]
    fn hall_condition_examples() {
        assert!(hall_condition(&[0b011, 0b110], &[1, 1]));
        assert!(!hall_condition(&[0b011, 0b110], &[1, 2]));
        assert!(!hall_condition(&[0b001, 0b110], &[2, 1]));
        assert!(hall_condition(&[0b1], &[1]));
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(
            kerov_polynomial_combinatorial(&part(&[2])).unwrap().to_text(),
            "4*R3 - 2*R2"
        );
        assert_eq!(kerov_polynomial_combinatorial(&part(&[1])).unwrap().to_text(), "2*R2");
        assert_eq!(kerov_oracle(1).unwrap().to_text(), "2*R2");
        assert_eq!(kerov_oracle(2).unwrap().to_text(), "4*R3 - 2*R2");
        assert_eq!(
            symplectic_kerov(&part(&[2])).unwrap(),
            KerovPolynomial::from_terms([(vec![1], frac(1, 4)), (vec![0, 1], frac(1, 4))])
        );
    }

    #[test]
    fn count_matches_oracle() {
        for k in 1..=3 {
            let mu = Partition::row(k);
            assert_eq!(
                kerov_polynomial_combinatorial(&mu).unwrap(),
                kerov_oracle(k as usize).unwrap(),
                "k={k}"
            );
        }
    }

    #[test]
    fn evaluation() {
        let two = int(2);
        for k in 1..=3 {
            let f = kerov_polynomial_combinatorial(&Partition::row(k)).unwrap();
            for lambda in Partition::all_up_to(5) {
                let v = evaluate_kerov(&f, &MultiRect::of_partition(&lambda), &two).unwrap();
                assert_eq!(
                    v,
                    zonal_character(&Partition::row(k), &lambda).unwrap(),
                    "k={k} {lambda}"
                );
            }
        }
    }

    #[test]
    fn symplectic_evaluation() {
        let half = frac(1, 2);
        for k in 1..=3 {
            let f = symplectic_kerov(&Partition::row(k)).unwrap();
            for lambda in Partition::all_up_to(5) {
                let v = evaluate_kerov(&f, &MultiRect::of_partition(&lambda), &half).unwrap();
                assert_eq!(
                    v,
                    symplectic_character(&Partition::row(k), &lambda).unwrap(),
                    "k={k} {lambda}"
                );
            }
        }
    }

    #[test]
    fn subset_condition_only_removes() {
        for mu in [part(&[2]), part(&[3]), part(&[2, 1]), part(&[2, 2])] {
            let loose = count_table(&mu, false).unwrap();
            for (s, n) in cached_table(&mu).unwrap().iter() {
                assert!(loose.get(s).is_some_and(|m| m >= n));
            }
        }
    }

    #[test]
    fn integrality() {
        for n in 1..=4 {
            for mu in Partition::all(n) {
                let r = kerov_integrality_report(&mu).unwrap();
                assert!(r.passed, "{mu}: {:?}", r.violation);
            }
        }
        let r = kerov_integrality_report(&part(&[2])).unwrap();
        assert_eq!(r.polynomial.coefficient(&[1]), int(-2));
    }

    #[test]
    fn capacity() {
        assert!(kerov_count(&part(&[6]), &[1]).unwrap_err().is_capacity());
        assert!(kerov_oracle(5).unwrap_err().is_capacity());
    }
}
