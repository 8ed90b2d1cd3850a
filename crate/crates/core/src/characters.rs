//! N-functions of triplets of pair-partitions and the zonal characters
//! `Σ^{(2)}_μ` built from them.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::loops::canonical_couple;
use crate::orientation::orientation_orbits;
use crate::pair_partition::{enumerate_pair_partitions, PairPartition};
use crate::partition::{MultiRect, Partition};
use crate::poly::PQPolynomial;
use crate::rational::{self, Rational};
use crate::triplet::{triplet_graph, triplet_graph_raw, BipartiteGraph};
use crate::zonal::theta_coefficient;

/// Largest `|μ|` accepted by the character and Stanley polynomial routines.
pub const CHARACTER_CAPACITY: usize = 5;
/// Bound on the number of candidate functions scanned by the brute-force
/// N-function counters.
pub const BRUTE_FORCE_LIMIT: u64 = 10_000_000;

/// A Young diagram given either as a partition or in multirectangular
/// coordinates.
pub trait Diagram {
    fn to_multirect(&self) -> MultiRect;
    fn as_partition(&self) -> Option<Partition>;
}

impl Diagram for Partition {
    fn to_multirect(&self) -> MultiRect {
        MultiRect::of_partition(self)
    }
    fn as_partition(&self) -> Option<Partition> {
        Some(self.clone())
    }
}

impl Diagram for MultiRect {
    fn to_multirect(&self) -> MultiRect {
        self.clone()
    }
    fn as_partition(&self) -> Option<Partition> {
        self.to_partition().ok()
    }
}

fn boxes(lambda: &Partition) -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity(lambda.size());
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len {
            out.push((r as u32, c));
        }
    }
    out
}

fn guard(boxes: usize, k: usize) -> Result<()> {
    let total = (boxes as f64).powi(k as i32);
    if total > BRUTE_FORCE_LIMIT as f64 {
        return Err(Error::capacity(format!(
            "brute force would scan {boxes}^{k} functions (limit {BRUTE_FORCE_LIMIT})"
        )));
    }
    Ok(())
}

fn same_sizes(s0: &PairPartition, s1: &PairPartition, s2: &PairPartition) -> Result<()> {
    for s in [s1, s2] {
        if s.ground_size() != s0.ground_size() {
            return Err(Error::SizeMismatch {
                left: s0.ground_size(),
                right: s.ground_size(),
            });
        }
    }
    Ok(())
}

// Odometer over [0, base)^len; calls f for every vector.
fn for_each_word(len: usize, base: usize, mut f: impl FnMut(&[usize])) {
    if base == 0 {
        if len == 0 {
            f(&[]);
        }
        return;
    }
    let mut w = vec![0usize; len];
    loop {
        f(&w);
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            w[i] += 1;
            if w[i] < base {
                break;
            }
            w[i] = 0;
            i += 1;
        }
    }
}

/// `N^{(1)}_{S0,S1,S2}(λ)` by exhaustive search: functions from the pairs of
/// `S0` to the boxes of `λ` such that `f(l)`, `f(S1 l)` share a column and
/// `f(l)`, `f(S2 l)` share a row.
pub fn n1_bruteforce(s0: &PairPartition, s1: &PairPartition, s2: &PairPartition, lambda: &Partition) -> Result<u64> {
    same_sizes(s0, s1, s2)?;
    let bx = boxes(lambda);
    let k = s0.k();
    guard(bx.len(), k)?;
    let pair_of = pair_index(s0);
    let (a, b, c) = (s0.raw(), s1.raw(), s2.raw());
    let mut count = 0u64;
    for_each_word(k, bx.len(), |w| {
        let at = |l: usize| bx[w[pair_of[l]]];
        let ok = (0..a.len()).all(|l| at(l).1 == at(b[l] as usize).1 && at(l).0 == at(c[l] as usize).0);
        count += ok as u64;
    });
    Ok(count)
}

fn pair_index(s0: &PairPartition) -> Vec<usize> {
    let mut idx = vec![usize::MAX; s0.ground_size()];
    for (i, (a, b)) in s0.pairs().into_iter().enumerate() {
        idx[a as usize - 1] = i;
        idx[b as usize - 1] = i;
    }
    idx
}

/// `N^{(2)}_{S0,S1,S2}(λ)` by exhaustive search over functions into the boxes
/// of `2λ`: `f(l)`, `f(S0 l)` are horizontal neighbours, `f(l)`,
/// `f(S0∘S1 l)` share a column and `f(l)`, `f(S2 l)` share a row.
pub fn n2_bruteforce(s0: &PairPartition, s1: &PairPartition, s2: &PairPartition, lambda: &Partition) -> Result<u64> {
    same_sizes(s0, s1, s2)?;
    let doubled = Partition::new(lambda.parts().iter().map(|&x| 2 * x).collect());
    let bx = boxes(&doubled);
    let k = s0.k();
    guard(bx.len(), k)?;
    let (a, b, c) = (s0.raw(), s1.raw(), s2.raw());
    let pairs = s0.pairs();
    let mut image = vec![(0u32, 0u32); a.len()];
    let mut count = 0u64;
    for_each_word(k, bx.len(), |w| {
        for (i, &(x, y)) in pairs.iter().enumerate() {
            let (r, col) = bx[w[i]];
            image[x as usize - 1] = (r, col);
            image[y as usize - 1] = (r, col ^ 1);
        }
        let ok = (0..a.len())
            .all(|l| image[l].1 == image[a[b[l] as usize] as usize].1 && image[l].0 == image[c[l] as usize].0);
        count += ok as u64;
    });
    Ok(count)
}

/// For each black vertex, the largest colour among its white neighbours
/// (`None` for an isolated black vertex).
fn psi<'a>(nb: &'a [Vec<usize>], phi: &'a [usize]) -> impl Iterator<Item = Option<usize>> + 'a {
    nb.iter().map(move |ws| ws.iter().map(|&w| phi[w]).max())
}

/// `N^{(1)}_G` evaluated on a diagram in multirectangular coordinates:
/// `Σ_φ ∏_{white} p_{φ(w)} ∏_{black} q_{ψ(b)}` with `ψ(b)` the largest
/// `φ` among the neighbours of `b` (`q_1` for an isolated black vertex).
pub fn n1_graph(g: &BipartiteGraph, lambda: &MultiRect) -> Rational {
    let m = lambda.blocks();
    if m == 0 {
        return if g.black_count() + g.white_count() == 0 {
            Rational::one()
        } else {
            Rational::zero()
        };
    }
    let integral = lambda.p().iter().chain(lambda.q()).all(|x| x.is_integer());
    if integral {
        let p: Vec<BigInt> = lambda.p().iter().map(|x| x.to_integer()).collect();
        let q: Vec<BigInt> = lambda.q().iter().map(|x| x.to_integer()).collect();
        return Rational::from_integer(n1_graph_generic(g, &p, &q));
    }
    n1_graph_generic(g, lambda.p(), lambda.q())
}

fn n1_graph_generic<T>(g: &BipartiteGraph, p: &[T], q: &[T]) -> T
where
    T: Clone + Zero + One + for<'a> std::ops::MulAssign<&'a T> + for<'a> std::ops::AddAssign<&'a T>,
{
    let nb = g.black_neighbours();
    let mut total = T::zero();
    for_each_word(g.white_count(), p.len(), |phi| {
        let mut t = T::one();
        for &c in phi {
            t *= &p[c];
        }
        for s in psi(&nb, phi) {
            t *= &q[s.unwrap_or(0)];
        }
        total += &t;
    });
    total
}

/// `N^{(1)}_G(p × q)` as a polynomial in `m` rectangle variables.
pub fn n1_graph_symbolic(g: &BipartiteGraph, m: usize) -> PQPolynomial {
    let counts = n1_graph_counts(g, m);
    PQPolynomial::from_terms(m, counts.into_iter().map(|(e, c)| (e, rational::int(c))))
}

fn n1_graph_counts(g: &BipartiteGraph, m: usize) -> HashMap<Vec<u32>, i64> {
    let nb = g.black_neighbours();
    let mut counts: HashMap<Vec<u32>, i64> = HashMap::new();
    if m == 0 {
        return counts;
    }
    for_each_word(g.white_count(), m, |phi| {
        let mut e = vec![0u32; 2 * m];
        for &c in phi {
            e[c] += 1;
        }
        for s in psi(&nb, phi) {
            e[m + s.unwrap_or(0)] += 1;
        }
        *counts.entry(e).or_default() += 1;
    });
    counts
}

type WeightedGraphs = Vec<(BipartiteGraph, i64)>;

/// The distinct triplet graphs `G(S0, S1, S2)` over all `S0`, with
/// `(S1, S2) = canonical_couple(μ)`, each with the summed weight
/// `(−1)^{k−|L(S0,S1)|} 2^{|L(S0,S1)|}`.
pub(crate) fn weighted_graphs(mu: &Partition) -> Result<Arc<WeightedGraphs>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<WeightedGraphs>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().expect("cache lock").get(mu) {
        return Ok(hit.clone());
    }
    let k = mu.size();
    if k > CHARACTER_CAPACITY {
        return Err(Error::capacity(format!(
            "characters limited to |mu| <= {CHARACTER_CAPACITY}, got {mu}"
        )));
    }
    let (s1, s2) = canonical_couple(mu)?;
    let all: Vec<PairPartition> = enumerate_pair_partitions(k)?.collect();
    let table = all
        .par_iter()
        .map(|s0| {
            let g = triplet_graph_raw(s0.raw(), s1.raw(), s2.raw());
            let b = g.black_count();
            let w = if (k - b).is_multiple_of(2) { 1i64 } else { -1 } << b;
            let mut local = HashMap::new();
            local.insert(g.graph().clone(), w);
            local
        })
        .reduce(HashMap::new, |mut a: HashMap<BipartiteGraph, i64>, b| {
            for (g, w) in b {
                *a.entry(g).or_default() += w;
            }
            a
        });
    let mut entries: Vec<(BipartiteGraph, i64)> = table.into_iter().filter(|(_, w)| *w != 0).collect();
    entries.sort_by(|a, b| {
        (a.0.black_count(), a.0.white_count(), a.0.edges()).cmp(&(b.0.black_count(), b.0.white_count(), b.0.edges()))
    });
    let entries = Arc::new(entries);
    cache.lock().expect("cache lock").insert(mu.clone(), entries.clone());
    Ok(entries)
}

fn check_mu(mu: &Partition) -> Result<()> {
    if mu.is_empty() {
        return Err(Error::validation("mu must be non-empty"));
    }
    if mu.size() > CHARACTER_CAPACITY {
        return Err(Error::capacity(format!(
            "characters limited to |mu| <= {CHARACTER_CAPACITY}, got {mu}"
        )));
    }
    Ok(())
}

/// `Σ^{(2)}_μ(λ) = 2^{−ℓ(μ)} Σ_{S0} (−1)^{L(S0,S1)} 2^{|L(S0,S1)|} N^{(1)}_{S0,S1,S2}(λ)`.
///
/// For a genuine partition the value is checked to be an integer.
pub fn zonal_character<D: Diagram + ?Sized>(mu: &Partition, lambda: &D) -> Result<Rational> {
    check_mu(mu)?;
    let mr = lambda.to_multirect();
    let graphs = weighted_graphs(mu)?;
    let sum: Rational = graphs
        .par_iter()
        .map(|(g, w)| n1_graph(g, &mr) * rational::int(*w))
        .reduce(Rational::zero, |a, b| a + b);
    let value = sum * rational::pow2(-(mu.len() as i64));
    if let Some(p) = lambda.as_partition() {
        if !value.is_integer() {
            return Err(Error::Invariant(format!(
                "Sigma^(2)_{mu}({p}) = {value} is not an integer"
            )));
        }
    }
    Ok(value)
}

/// `Σ^{(2)}_μ(λ)` from the coefficients of `Z_λ`:
/// `binom(|λ|−|μ|+m_1(μ), m_1(μ)) · z_μ · θ^{(2)}_{μ∪1^{|λ|−|μ|}}(λ)`.
pub fn zonal_character_oracle(mu: &Partition, lambda: &Partition) -> Result<Rational> {
    check_mu(mu)?;
    let (k, n) = (mu.size(), lambda.size());
    if k > n {
        return Err(Error::validation(format!(
            "oracle needs |mu| <= |lambda|, got {mu} and {lambda}"
        )));
    }
    let m1 = mu.multiplicity(1) as u64;
    let rho = mu.with_ones(n - k);
    let theta = theta_coefficient(lambda, &rho, crate::zonal::Alpha::Two)?;
    let factor = rational::binomial((n - k) as u64 + m1, m1) * mu.z();
    Ok(rational::from_biguint(&factor) * theta)
}

/// `Σ^{(2)}_μ(p × q)` as a polynomial in `m` rectangle variables, i.e.
/// `((−1)^k / 2^{ℓ(μ)}) Σ_{S0} Σ_φ ∏ p_{φ(w)} ∏ (−2 q_{ψ(b)})`.
pub fn stanley_polynomial(mu: &Partition, m: usize) -> Result<PQPolynomial> {
    check_mu(mu)?;
    if m == 0 {
        return Err(Error::validation("at least one rectangle is needed"));
    }
    let graphs = weighted_graphs(mu)?;
    let counts = graphs
        .par_iter()
        .map(|(g, w)| {
            let mut c = n1_graph_counts(g, m);
            for v in c.values_mut() {
                *v *= w;
            }
            c
        })
        .reduce(HashMap::new, |mut a, b| {
            for (e, v) in b {
                *a.entry(e).or_default() += v;
            }
            a
        });
    let scale = rational::pow2(-(mu.len() as i64));
    Ok(PQPolynomial::from_terms(
        m,
        counts.into_iter().map(|(e, c)| (e, rational::int(c) * &scale)),
    ))
}

/// Outcome of the check that `(−1)^{|μ|} Σ^{(2)}_μ(p, −q)` has non-negative
/// integer coefficients.
#[derive(Clone, Debug)]
pub struct StanleyPositivityReport {
    pub mu: Partition,
    pub rectangles: usize,
    /// `(−1)^{|μ|} Σ^{(2)}_μ(p, −q)`
    pub polynomial: PQPolynomial,
    pub is_poly_nonneg_int: bool,
    /// The first offending term, if any.
    pub witness: Option<(Vec<u32>, Rational)>,
}

/// Positivity check in `|μ|` rectangle variables.
pub fn stanley_positivity_report(mu: &Partition) -> Result<StanleyPositivityReport> {
    stanley_positivity_report_with(mu, mu.size())
}

pub fn stanley_positivity_report_with(mu: &Partition, m: usize) -> Result<StanleyPositivityReport> {
    let f = stanley_polynomial(mu, m)?.substitute_negate_q();
    let f = if mu.size() % 2 == 1 { -&f } else { f };
    let witness = f
        .terms()
        .find(|(_, c)| !rational::is_nonneg_integer(c))
        .map(|(e, c)| (e.clone(), c.clone()));
    Ok(StanleyPositivityReport {
        mu: mu.clone(),
        rectangles: m,
        is_poly_nonneg_int: witness.is_none(),
        polynomial: f,
        witness,
    })
}

/// `Σ^{(1/2)}_μ(λ) = (−2)^{−(|μ|−ℓ(μ))} Σ^{(2)}_μ(λ′)`.
pub fn symplectic_character<D: Diagram + ?Sized>(mu: &Partition, lambda: &D) -> Result<Rational> {
    check_mu(mu)?;
    let conj = lambda.to_multirect().conjugate();
    let v = zonal_character(mu, &conj)?;
    Ok(v * rational::pow(&rational::int(-2), -((mu.size() - mu.len()) as i64)))
}

/// `Σ^{(2)}_μ(λ) = Σ_Ω (−1)^{L(S0(Ω),S1)} N^{(1)}_{S0(Ω),S1,S2}(λ)` over the
/// orbits of compatible orientations under the axial symmetry group.
pub fn zonal_character_orbit_formula<D: Diagram + ?Sized>(mu: &Partition, lambda: &D) -> Result<Rational> {
    check_mu(mu)?;
    let (s1, s2) = canonical_couple(mu)?;
    let mr = lambda.to_multirect();
    let k = mu.size();
    let mut total = Rational::zero();
    for orbit in orientation_orbits(mu)? {
        let g = triplet_graph(&orbit.s0, &s1, &s2)?;
        let v = n1_graph(g.graph(), &mr);
        if (k - orbit.black_loops).is_multiple_of(2) {
            total += v;
        } else {
            total -= v;
        }
    }
    Ok(total)
}

/// `Σ^{(2)}_{(2)}(λ) = 2Σλ_i² − Σλ′_i² − |λ|`.
pub fn sigma2_closed_form(lambda: &Partition) -> Rational {
    rational::int(
        2 * lambda.sum_of_squares() as i64 - lambda.conjugate().sum_of_squares() as i64 - lambda.size() as i64,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair_partition::make_pair_partition;
    use crate::rational::int;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn pp(pairs: &[(u32, u32)]) -> PairPartition {
        make_pair_partition(pairs).unwrap()
    }

    fn two() -> (PairPartition, PairPartition) {
        canonical_couple(&part(&[2])).unwrap()
    }

    #[test]
    fn brute_force_examples() {
        let s = pp(&[(1, 2)]);
        assert_eq!(n1_bruteforce(&s, &s, &s, &part(&[2, 1])).unwrap(), 3);
        let (s1, s2) = two();
        assert_eq!(n1_bruteforce(&s1, &s1, &s2, &part(&[2, 1])).unwrap(), 5);
        assert_eq!(n1_bruteforce(&s2, &s1, &s2, &part(&[2, 1])).unwrap(), 5);
        assert_eq!(
            n1_bruteforce(&pp(&[(1, 3), (2, 4)]), &s1, &s2, &part(&[3, 1])).unwrap(),
            4
        );
        assert_eq!(n2_bruteforce(&s, &s, &s, &part(&[1])).unwrap(), 2);
        assert_eq!(n2_bruteforce(&s, &s, &s, &Partition::empty()).unwrap(), 0);
        let big = first(8);
        assert!(n1_bruteforce(&big, &big, &big, &part(&[4, 4, 4]))
            .unwrap_err()
            .is_capacity());
    }

    fn first(k: usize) -> PairPartition {
        PairPartition::first(k).unwrap()
    }

    #[test]
    fn single_edge_graph() {
        let g = BipartiteGraph::new(1, 1, vec![(0, 0)]).unwrap();
        assert_eq!(n1_graph(&g, &MultiRect::of_partition(&part(&[2, 1]))), int(3));
        let empty = BipartiteGraph::new(0, 0, vec![]).unwrap();
        assert_eq!(n1_graph(&empty, &MultiRect::of_partition(&Partition::empty())), int(1));
        assert_eq!(n1_graph(&g, &MultiRect::of_partition(&Partition::empty())), int(0));
    }

    #[test]
    fn graph_count_matches_brute_force() {
        let all: Vec<_> = enumerate_pair_partitions(3).unwrap().collect();
        let lambdas = [part(&[1]), part(&[2]), part(&[1, 1]), part(&[2, 1]), part(&[3, 2, 1])];
        for lambda in &lambdas {
            let mr = MultiRect::of_partition(lambda);
            for a in &all {
                for b in &all {
                    for c in &all {
                        let g = triplet_graph(a, b, c).unwrap();
                        assert_eq!(
                            n1_graph(g.graph(), &mr),
                            int(n1_bruteforce(a, b, c, lambda).unwrap() as i64),
                            "{a} {b} {c} on {lambda}"
                        );
                    }
                }
            }
        }
        for k in 1..=2 {
            let all: Vec<_> = enumerate_pair_partitions(k).unwrap().collect();
            for lambda in &lambdas[..4] {
                for a in &all {
                    for b in &all {
                        for c in &all {
                            let g = triplet_graph(a, b, c).unwrap();
                            assert_eq!(
                                n1_graph(g.graph(), &MultiRect::of_partition(lambda)),
                                int(n1_bruteforce(a, b, c, lambda).unwrap() as i64)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn symbolic_graph_count_evaluates_to_numeric() {
        let (s1, s2) = two();
        let g = triplet_graph(&s1, &s1, &s2).unwrap();
        let f = n1_graph_symbolic(g.graph(), 2);
        assert_eq!(f.evaluate(&[int(1), int(1)], &[int(2), int(1)]).unwrap(), int(5));
        assert_eq!(f.to_text(), "p2*q2^2 + p1*q1^2");
    }

    #[test]
    fn n2_is_power_of_two_times_n1() {
        let lambdas = [part(&[1]), part(&[2]), part(&[1, 1]), part(&[2, 1])];
        for k in 1..=2 {
            let all: Vec<_> = enumerate_pair_partitions(k).unwrap().collect();
            for lambda in &lambdas {
                for a in &all {
                    for b in &all {
                        for c in &all {
                            let loops = crate::loops::loop_structure(a, b).unwrap().count();
                            assert_eq!(
                                n2_bruteforce(a, b, c, lambda).unwrap(),
                                n1_bruteforce(a, b, c, lambda).unwrap() << loops
                            );
                        }
                    }
                }
            }
        }
        let all: Vec<_> = enumerate_pair_partitions(3).unwrap().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let a = all.choose(&mut rng).unwrap();
            let b = all.choose(&mut rng).unwrap();
            let c = all.choose(&mut rng).unwrap();
            let lambda = lambdas.choose(&mut rng).unwrap();
            let loops = crate::loops::loop_structure(a, b).unwrap().count();
            assert_eq!(
                n2_bruteforce(a, b, c, lambda).unwrap(),
                n1_bruteforce(a, b, c, lambda).unwrap() << loops
            );
        }
    }

    #[test]
    fn character_examples() {
        assert_eq!(zonal_character(&part(&[2]), &part(&[2, 1])).unwrap(), int(2));
        assert_eq!(zonal_character(&part(&[1]), &part(&[4, 2])).unwrap(), int(6));
        assert_eq!(zonal_character(&part(&[2]), &part(&[1])).unwrap(), int(0));
        assert!(zonal_character(&part(&[6]), &part(&[6])).unwrap_err().is_capacity());
        assert!(zonal_character(&Partition::empty(), &part(&[1])).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(zonal_character_oracle(&part(&[2]), &part(&[2, 1])).unwrap(), int(2));
        assert_eq!(
            zonal_character_oracle(&part(&[1, 1, 1]), &part(&[2, 1])).unwrap(),
            int(6)
        );
        assert_eq!(zonal_character_oracle(&part(&[3]), &part(&[2, 1])).unwrap(), int(-6));
        assert!(zonal_character_oracle(&part(&[3]), &part(&[2])).is_err());
    }

    #[test]
    fn closed_form_for_mu_two() {
        for lambda in Partition::all_up_to(6) {
            assert_eq!(
                zonal_character(&part(&[2]), &lambda).unwrap(),
                sigma2_closed_form(&lambda),
                "{lambda}"
            );
        }
    }

    #[test]
    fn stanley_examples() {
        let one = stanley_polynomial(&part(&[1]), 1).unwrap();
        assert_eq!(one.to_text(), "p1*q1");
        let f = stanley_polynomial(&part(&[2]), 2).unwrap();
        let v = f.evaluate(&[int(1), int(1)], &[int(2), int(1)]).unwrap();
        assert_eq!(v, int(2));
    }

    #[test]
    fn stanley_mu_two_closed_form() {
        let m = 3;
        let p = |i| PQPolynomial::p(m, i);
        let q = |i| PQPolynomial::q(m, i);
        let mut expected = PQPolynomial::zero(m);
        for i in 1..=m {
            expected = &expected + &(&p(i) * &q(i).pow(2)).scale(&int(2));
            expected = &expected - &(&p(i) * &q(i));
            for j in 1..=m {
                expected = &expected - &(&(&p(i) * &p(j)) * &q(i.max(j)));
            }
        }
        assert_eq!(stanley_polynomial(&part(&[2]), m).unwrap(), expected);
    }

    #[test]
    fn positivity() {
        for mu in [part(&[1]), part(&[2]), part(&[2, 1]), part(&[3])] {
            let r = stanley_positivity_report(&mu).unwrap();
            assert!(r.is_poly_nonneg_int, "{mu}: {:?}", r.witness);
        }
        let r = stanley_positivity_report(&part(&[2])).unwrap();
        assert_eq!(r.polynomial.coefficient(&[1, 0, 2, 0]), int(2));
    }

    #[test]
    fn symplectic_examples() {
        assert_eq!(symplectic_character(&part(&[1]), &part(&[3, 1])).unwrap(), int(4));
        assert_eq!(symplectic_character(&part(&[2]), &part(&[2, 1])).unwrap(), int(-1));
        assert_eq!(symplectic_character(&part(&[2]), &part(&[2])).unwrap(), int(1));
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(
            zonal_character_orbit_formula(&part(&[2]), &part(&[2, 1])).unwrap(),
            int(2)
        );
        assert_eq!(zonal_character_orbit_formula(&part(&[1]), &part(&[3])).unwrap(), int(3));
        assert_eq!(zonal_character_orbit_formula(&part(&[2]), &part(&[1])).unwrap(), int(0));
    }

    #[test]
    fn independent_of_the_chosen_couple() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for mu in Partition::all_up_to(3).into_iter().filter(|m| !m.is_empty()) {
            let k = mu.size();
            let (c1, c2) = canonical_couple(&mu).unwrap();
            for _ in 0..5 {
                let mut sigma: Vec<u32> = (1..=2 * k as u32).collect();
                sigma.shuffle(&mut rng);
                let s1 = c1.permuted(&sigma).unwrap();
                let s2 = c2.permuted(&sigma).unwrap();
                for lambda in Partition::all_up_to(4) {
                    let mr = MultiRect::of_partition(&lambda);
                    let mut total = Rational::zero();
                    for s0 in enumerate_pair_partitions(k).unwrap() {
                        let g = triplet_graph(&s0, &s1, &s2).unwrap();
                        let b = g.black_count();
                        let w = rational::sign((k - b) % 2 == 1) * rational::pow2(b as i64);
                        total += w * n1_graph(g.graph(), &mr);
                    }
                    total *= rational::pow2(-(mu.len() as i64));
                    assert_eq!(total, zonal_character(&mu, &lambda).unwrap());
                }
            }
        }
    }
}
