//! Integer partitions, Young diagrams in multirectangular coordinates and the
//! row-numbered tableau of the doubled diagram `2λ`.

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::pair_partition::PairPartition;
use crate::rational::{self, Rational};

/// An integer partition, stored as weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`.
    pub fn row(n: u32) -> Self {
        Partition::new(vec![n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// `ℓ(λ)`
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition(parts)
    }

    /// `m_i(λ)`
    pub fn multiplicity(&self, i: u32) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// `z_λ = ∏ λ_i · ∏ m_i(λ)!`
    pub fn z(&self) -> BigUint {
        let mut z = BigUint::one();
        for &p in &self.0 {
            z *= p;
        }
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            z *= rational::factorial((j - i) as u64);
            i = j;
        }
        z
    }

    /// `λ ∪ 1^extra`
    pub fn with_ones(&self, extra: usize) -> Partition {
        let mut parts = self.0.clone();
        parts.extend(std::iter::repeat_n(1, extra));
        Partition::new(parts)
    }

    /// Dominance order: `self ⊵ other`. Both must have the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0usize;
        let mut b = 0usize;
        let n = self.len().max(other.len());
        for i in 0..n {
            a += self.0.get(i).copied().unwrap_or(0) as usize;
            b += other.0.get(i).copied().unwrap_or(0) as usize;
            if a < b {
                return false;
            }
        }
        a == b
    }

    /// `Σ λ_i²`
    pub fn sum_of_squares(&self) -> u64 {
        self.0.iter().map(|&p| (p as u64) * (p as u64)).sum()
    }

    /// All partitions of `n` in decreasing lexicographic order, `(n)` first.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill(n as u32, n as u32, &mut current, &mut out);
        out
    }

    /// All partitions of size at most `n`, grouped by increasing size.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all).collect()
    }

    /// Parses a comma-separated list of parts such as `"4,2,1"`. An empty
    /// string or `"0"` gives the empty partition.
    pub fn parse(s: &str) -> Result<Partition> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::validation(format!("not a partition part: {x:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition::new(parts))
    }
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = String;

    fn try_from(parts: Vec<u32>) -> std::result::Result<Self, String> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(format!("not a weakly decreasing list of positive parts: {parts:?}"));
        }
        Ok(Partition(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A diagram given by Stanley's multirectangular coordinates: `p_i` rows of
/// length `q_i`, with `q` strictly decreasing.
///
/// Entries may be arbitrary positive rationals so that stretched and dilated
/// diagrams are represented uniformly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiRect {
    p: Vec<Rational>,
    q: Vec<Rational>,
}

impl MultiRect {
    /// Validates and canonicalises: blocks with `p = 0` are dropped and
    /// adjacent blocks with equal `q` are merged.
    pub fn new(p: Vec<Rational>, q: Vec<Rational>) -> Result<MultiRect> {
        if p.len() != q.len() {
            return Err(Error::validation(format!(
                "p and q must have the same length ({} vs {})",
                p.len(),
                q.len()
            )));
        }
        if let Some(x) = p.iter().find(|x| x.is_negative()) {
            return Err(Error::validation(format!("negative block height {x}")));
        }
        if let Some(x) = q.iter().find(|x| !x.is_positive()) {
            return Err(Error::validation(format!("non-positive row length {x}")));
        }
        let mut cp: Vec<Rational> = Vec::with_capacity(p.len());
        let mut cq: Vec<Rational> = Vec::with_capacity(q.len());
        for (pi, qi) in p.into_iter().zip(q) {
            if pi.is_zero() {
                continue;
            }
            match cq.last() {
                Some(last) if *last == qi => {
                    *cp.last_mut().expect("parallel vectors") += pi;
                }
                Some(last) if *last < qi => {
                    return Err(Error::validation("row lengths q must be non-increasing"));
                }
                _ => {
                    cp.push(pi);
                    cq.push(qi);
                }
            }
        }
        Ok(MultiRect { p: cp, q: cq })
    }

    pub fn of_partition(lambda: &Partition) -> MultiRect {
        let mut p = Vec::new();
        let mut q = Vec::new();
        for &part in lambda.parts() {
            if q.last() == Some(&rational::int(part as i64)) {
                *p.last_mut().expect("parallel vectors") += rational::int(1);
            } else {
                p.push(rational::int(1));
                q.push(rational::int(part as i64));
            }
        }
        MultiRect { p, q }
    }

    /// The partition `p × q`; all entries must be integers.
    pub fn to_partition(&self) -> Result<Partition> {
        let mut parts = Vec::new();
        for (pi, qi) in self.p.iter().zip(&self.q) {
            if !pi.is_integer() || !qi.is_integer() {
                return Err(Error::validation("multirectangular coordinates are not integers"));
            }
            let times: u32 = pi
                .to_integer()
                .try_into()
                .map_err(|_| Error::capacity("block height too large"))?;
            let len: u32 = qi
                .to_integer()
                .try_into()
                .map_err(|_| Error::capacity("row length too large"))?;
            parts.extend(std::iter::repeat_n(len, times as usize));
        }
        Ok(Partition::new(parts))
    }

    pub fn p(&self) -> &[Rational] {
        &self.p
    }

    pub fn q(&self) -> &[Rational] {
        &self.q
    }

    /// Number of rectangles.
    pub fn blocks(&self) -> usize {
        self.p.len()
    }

    /// `|p × q| = Σ p_i q_i`
    pub fn size(&self) -> Rational {
        self.p.iter().zip(&self.q).map(|(a, b)| a * b).sum()
    }

    /// `αλ`: rows stretched by `α`, heights unchanged.
    pub fn stretch(&self, alpha: &Rational) -> Result<MultiRect> {
        if !alpha.is_positive() {
            return Err(Error::validation("stretch factor must be positive"));
        }
        Ok(MultiRect {
            p: self.p.clone(),
            q: self.q.iter().map(|x| x * alpha).collect(),
        })
    }

    /// `D_s λ`: both directions scaled by `s`.
    pub fn dilate(&self, s: &Rational) -> Result<MultiRect> {
        if !s.is_positive() {
            return Err(Error::validation("dilation factor must be positive"));
        }
        Ok(MultiRect {
            p: self.p.iter().map(|x| x * s).collect(),
            q: self.q.iter().map(|x| x * s).collect(),
        })
    }

    /// The transposed diagram. Column lengths `p_1 + … + p_i` occur
    /// `q_i − q_{i+1}` times.
    pub fn conjugate(&self) -> MultiRect {
        let m = self.p.len();
        let mut heights = Vec::with_capacity(m);
        let mut acc = Rational::zero();
        for x in &self.p {
            acc += x;
            heights.push(acc.clone());
        }
        let mut p = Vec::with_capacity(m);
        let mut q = Vec::with_capacity(m);
        for i in (0..m).rev() {
            let next = if i + 1 < m {
                self.q[i + 1].clone()
            } else {
                Rational::zero()
            };
            p.push(&self.q[i] - next);
            q.push(heights[i].clone());
        }
        MultiRect { p, q }
    }

    /// Parses `"p=1,1;q=4,2"`; entries may be written `num/den`.
    pub fn parse(s: &str) -> Result<MultiRect> {
        let mut p = None;
        let mut q = None;
        for section in s.split(';') {
            let (key, value) = section
                .split_once('=')
                .ok_or_else(|| Error::validation(format!("expected key=value in {section:?}")))?;
            let values = value
                .split(',')
                .filter(|x| !x.trim().is_empty())
                .map(rational::parse)
                .collect::<Result<Vec<_>>>()?;
            match key.trim() {
                "p" => p = Some(values),
                "q" => q = Some(values),
                other => return Err(Error::validation(format!("unknown coordinate {other:?}"))),
            }
        }
        match (p, q) {
            (Some(p), Some(q)) => MultiRect::new(p, q),
            _ => Err(Error::validation("multirectangular coordinates need both p= and q=")),
        }
    }
}

impl fmt::Display for MultiRect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "p={};q={}", join(&self.p), join(&self.q))
    }
}

/// The tableau of shape `2λ` with boxes numbered `1..2n` along the rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau2Lambda {
    shape: Partition,
    rows: Vec<Vec<u32>>,
    row_of: Vec<u32>,
    col_of: Vec<u32>,
    neighbor_pairing: PairPartition,
}

impl Tableau2Lambda {
    pub fn new(lambda: &Partition) -> Result<Tableau2Lambda> {
        if lambda.is_empty() {
            return Err(Error::validation("the tableau of 2λ needs a non-empty λ"));
        }
        let shape = Partition::new(lambda.parts().iter().map(|&p| 2 * p).collect());
        let mut rows = Vec::with_capacity(shape.len());
        let mut row_of = vec![0];
        let mut col_of = vec![0];
        let mut next = 1u32;
        for (r, &len) in shape.parts().iter().enumerate() {
            let mut row = Vec::with_capacity(len as usize);
            for c in 1..=len {
                row.push(next);
                row_of.push(r as u32 + 1);
                col_of.push(c);
                next += 1;
            }
            rows.push(row);
        }
        let pairs: Vec<(u32, u32)> = rows
            .iter()
            .flat_map(|row| row.chunks(2).map(|w| (w[0], w[1])))
            .collect();
        let neighbor_pairing = PairPartition::from_pairs(&pairs)?;
        Ok(Tableau2Lambda {
            shape,
            rows,
            row_of,
            col_of,
            neighbor_pairing,
        })
    }

    /// The shape `2λ`.
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Labels of each row, top to bottom.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Labels of column `c` (1-based), top to bottom.
    pub fn column(&self, c: u32) -> Vec<u32> {
        self.rows
            .iter()
            .filter_map(|row| row.get(c as usize - 1).copied())
            .collect()
    }

    pub fn width(&self) -> u32 {
        self.shape.parts().first().copied().unwrap_or(0)
    }

    pub fn row_of(&self, label: u32) -> u32 {
        self.row_of[label as usize]
    }

    pub fn col_of(&self, label: u32) -> u32 {
        self.col_of[label as usize]
    }

    /// The pairing of horizontally neighbouring boxes (columns `2i−1`, `2i`).
    pub fn neighbor_pairing(&self) -> &PairPartition {
        &self.neighbor_pairing
    }
}

pub fn tableau_2lambda(lambda: &Partition) -> Result<Tableau2Lambda> {
    Tableau2Lambda::new(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn conjugates() {
        assert_eq!(part(&[2, 1]).conjugate(), part(&[2, 1]));
        assert_eq!(part(&[4, 2]).conjugate(), part(&[2, 2, 1, 1]));
        assert_eq!(part(&[5]).conjugate(), part(&[1, 1, 1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn z_values() {
        assert_eq!(part(&[2]).z(), BigUint::from(2u32));
        assert_eq!(part(&[1, 1]).z(), BigUint::from(2u32));
        assert_eq!(part(&[2, 1]).z(), BigUint::from(2u32));
        assert_eq!(part(&[2, 2, 1]).z(), BigUint::from(8u32));
        assert_eq!(Partition::empty().z(), BigUint::one());
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 0..=6 {
            let total: BigUint = Partition::all(n)
                .iter()
                .map(|mu| rational::factorial(n as u64) / mu.z())
                .sum();
            assert_eq!(total, rational::factorial(n as u64));
        }
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn dominance() {
        assert!(part(&[3]).dominates(&part(&[2, 1])));
        assert!(!part(&[2, 1]).dominates(&part(&[3])));
        assert!(!part(&[3, 1, 1, 1]).dominates(&part(&[2, 2, 2])));
        assert!(!part(&[2, 2, 2]).dominates(&part(&[3, 1, 1, 1])));
    }

    #[test]
    fn multirect_round_trips() {
        let m = MultiRect::new(vec![int(1), int(1)], vec![int(4), int(2)]).unwrap();
        assert_eq!(m.to_partition().unwrap(), part(&[4, 2]));
        let m = MultiRect::new(vec![int(2)], vec![int(3)]).unwrap();
        assert_eq!(m.to_partition().unwrap(), part(&[3, 3]));
        let d = MultiRect::of_partition(&part(&[2, 1]));
        assert_eq!(d.p(), &[int(1), int(1)]);
        assert_eq!(d.q(), &[int(2), int(1)]);
        assert_eq!(MultiRect::of_partition(&part(&[3, 3, 1])).size(), int(7));
    }

    #[test]
    fn multirect_canonicalises() {
        let m = MultiRect::new(vec![int(1), int(0), int(2)], vec![int(3), int(2), int(3)]).unwrap();
        assert_eq!(m.p(), &[int(3)]);
        assert_eq!(m.q(), &[int(3)]);
        assert!(MultiRect::new(vec![int(1), int(1)], vec![int(1), int(2)]).is_err());
        assert!(MultiRect::new(vec![int(1)], vec![int(0)]).is_err());
        assert!(MultiRect::new(vec![int(1)], vec![]).is_err());
    }

    #[test]
    fn stretch_and_dilate() {
        let one_row = MultiRect::new(vec![int(1)], vec![int(2)]).unwrap();
        let s = one_row.stretch(&int(2)).unwrap();
        assert_eq!(s.to_partition().unwrap(), part(&[4]));
        let single = MultiRect::of_partition(&part(&[1]));
        assert_eq!(single.dilate(&int(2)).unwrap().to_partition().unwrap(), part(&[2, 2]));
        let m = MultiRect::of_partition(&part(&[3, 1]));
        let (a, s) = (frac(1, 2), int(3));
        assert_eq!(
            m.stretch(&a).unwrap().dilate(&s).unwrap(),
            m.dilate(&s).unwrap().stretch(&a).unwrap()
        );
    }

    #[test]
    fn parses() {
        assert_eq!(Partition::parse("1,4,2").unwrap(), part(&[4, 2, 1]));
        assert!(Partition::parse("2,x").is_err());
        let m = MultiRect::parse("p=1,1;q=4,2").unwrap();
        assert_eq!(m.to_partition().unwrap(), part(&[4, 2]));
        let m = MultiRect::parse("p=1/2;q=3").unwrap();
        assert_eq!(m.size(), frac(3, 2));
        assert!(MultiRect::parse("p=1").is_err());
    }

    #[test]
    fn tableau_of_2_1() {
        let t = tableau_2lambda(&part(&[2, 1])).unwrap();
        assert_eq!(t.rows(), &[vec![1, 2, 3, 4], vec![5, 6]]);
        assert_eq!(t.column(1), vec![1, 5]);
        assert_eq!(t.column(4), vec![4]);
        assert_eq!(t.neighbor_pairing().pairs(), vec![(1, 2), (3, 4), (5, 6)]);
        assert_eq!((t.row_of(6), t.col_of(6)), (2, 2));
        let t = tableau_2lambda(&part(&[1])).unwrap();
        assert_eq!(t.neighbor_pairing().pairs(), vec![(1, 2)]);
        assert!(tableau_2lambda(&Partition::empty()).is_err());
    }

    #[test]
    fn neighbor_pairing_is_the_first_pair_partition() {
        for n in 1..=6 {
            for lambda in Partition::all(n) {
                let t = tableau_2lambda(&lambda).unwrap();
                assert_eq!(t.neighbor_pairing(), &PairPartition::first(n).unwrap());
            }
        }
    }

    #[test]
    fn serde_rejects_unsorted() {
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
        let p: Partition = serde_json::from_str("[2,1]").unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[2,1]");
    }

    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn conjugation_is_involutive(parts in prop::collection::vec(1u32..6, 0..5)) {
            let lambda = Partition::new(parts);
            prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
            prop_assert_eq!(lambda.conjugate().size(), lambda.size());
        }

        #[test]
        fn multirect_size_matches_partition(parts in prop::collection::vec(1u32..8, 0..6)) {
            let lambda = Partition::new(parts);
            let m = MultiRect::of_partition(&lambda);
            prop_assert_eq!(m.size(), int(lambda.size() as i64));
            prop_assert_eq!(m.to_partition().unwrap(), lambda.clone());
            prop_assert_eq!(m.conjugate().to_partition().unwrap(), lambda.conjugate());
        }
    }
}
