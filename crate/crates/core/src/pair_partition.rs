//! Pair-partitions of `[2k]` (fixpoint-free involutions) and their
//! enumeration.
//!
//! Labels are 1-based on every public surface; the partner table is stored
//! 0-based.

use num_bigint::BigUint;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational;

/// Default refusal threshold for exhaustive enumeration, `(2·8−1)!! = 2 027 025`.
pub const DEFAULT_ENUMERATION_CEILING: usize = 8;

/// A perfect matching of `{1, …, 2k}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairPartition {
    partner: Vec<u32>,
}

impl PairPartition {
    /// Builds a pair-partition from 1-based label pairs. The labels must be
    /// exactly `1..=2k`, each appearing once.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Result<PairPartition> {
        let n = 2 * pairs.len();
        let mut partner = vec![u32::MAX; n];
        for &(a, b) in pairs {
            if a == b {
                return Err(Error::validation(format!("label {a} is paired with itself")));
            }
            for x in [a, b] {
                if x == 0 || x as usize > n {
                    return Err(Error::validation(format!("label {x} outside 1..={n}")));
                }
                if partner[x as usize - 1] != u32::MAX {
                    return Err(Error::validation(format!("label {x} appears twice")));
                }
            }
            partner[a as usize - 1] = b - 1;
            partner[b as usize - 1] = a - 1;
        }
        Ok(PairPartition { partner })
    }

    /// Builds a pair-partition from a 1-based partner table
    /// (`table[i-1]` is the partner of `i`).
    pub fn from_partner_table(table: &[u32]) -> Result<PairPartition> {
        let n = table.len();
        if n % 2 == 1 {
            return Err(Error::validation(format!("odd number of labels ({n})")));
        }
        let mut partner = Vec::with_capacity(n);
        for (i, &t) in table.iter().enumerate() {
            let label = i as u32 + 1;
            if t == 0 || t as usize > n {
                return Err(Error::validation(format!(
                    "partner {t} of label {label} outside 1..={n}"
                )));
            }
            if t == label {
                return Err(Error::validation(format!("label {label} is paired with itself")));
            }
            if table[t as usize - 1] != label {
                return Err(Error::validation(format!("label {label}: table is not an involution")));
            }
            partner.push(t - 1);
        }
        Ok(PairPartition { partner })
    }

    /// Internal constructor from a 0-based partner table that is already known
    /// to be a fixpoint-free involution.
    pub(crate) fn from_raw(partner: Vec<u32>) -> PairPartition {
        debug_assert!(partner
            .iter()
            .enumerate()
            .all(|(i, &j)| j as usize != i && partner[j as usize] as usize == i));
        PairPartition { partner }
    }

    /// The first pair-partition `{{1,2},{3,4},…,{2k−1,2k}}`.
    pub fn first(k: usize) -> Result<PairPartition> {
        if k == 0 {
            return Err(Error::validation("the first pair-partition needs k ≥ 1"));
        }
        let partner = (0..2 * k as u32).map(|i| i ^ 1).collect();
        Ok(PairPartition { partner })
    }

    /// Number of pairs `k`.
    pub fn k(&self) -> usize {
        self.partner.len() / 2
    }

    /// Size `2k` of the ground set.
    pub fn ground_size(&self) -> usize {
        self.partner.len()
    }

    /// Partner of a 1-based label.
    pub fn partner(&self, label: u32) -> u32 {
        self.partner[label as usize - 1] + 1
    }

    /// 0-based partner table.
    pub(crate) fn raw(&self) -> &[u32] {
        &self.partner
    }

    /// 1-based partner table.
    pub fn partner_table(&self) -> Vec<u32> {
        self.partner.iter().map(|&j| j + 1).collect()
    }

    /// Pairs `(a, b)` with `a < b`, sorted by `a`.
    pub fn pairs(&self) -> Vec<(u32, u32)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(i, &j)| (i as u32) < j)
            .map(|(i, &j)| (i as u32 + 1, j + 1))
            .collect()
    }

    /// `σ · S`: the pair-partition containing `{σ(i), σ(j)}` for each pair
    /// `{i, j}` of `S`. `sigma` is given in 1-based one-line notation.
    pub fn permuted(&self, sigma: &[u32]) -> Result<PairPartition> {
        let n = self.partner.len();
        if sigma.len() != n {
            return Err(Error::SizeMismatch {
                left: sigma.len(),
                right: n,
            });
        }
        let mut seen = vec![false; n];
        for &s in sigma {
            if s == 0 || s as usize > n || seen[s as usize - 1] {
                return Err(Error::validation("sigma is not a permutation of the ground set"));
            }
            seen[s as usize - 1] = true;
        }
        Ok(self.permuted_raw(&sigma.iter().map(|&s| s - 1).collect::<Vec<_>>()))
    }

    /// Same as [`permuted`](Self::permuted) for a 0-based permutation.
    pub(crate) fn permuted_raw(&self, sigma: &[u32]) -> PairPartition {
        let mut partner = vec![0; self.partner.len()];
        for (i, &j) in self.partner.iter().enumerate() {
            partner[sigma[i] as usize] = sigma[j as usize];
        }
        PairPartition { partner }
    }

    /// Concatenation on disjoint label blocks: labels of `other` are shifted
    /// by `2·self.k()`.
    pub fn disjoint_union(&self, other: &PairPartition) -> PairPartition {
        let shift = self.partner.len() as u32;
        let mut partner = self.partner.clone();
        partner.extend(other.partner.iter().map(|&j| j + shift));
        PairPartition { partner }
    }
}

impl fmt::Debug for PairPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PairPartition{:?}", self.pairs())
    }
}

impl fmt::Display for PairPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self.pairs().iter().map(|(a, b)| format!("[{a},{b}]")).collect();
        write!(f, "[{}]", pairs.join(","))
    }
}

impl Serialize for PairPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[u32; 2]> = self.pairs().into_iter().map(|(a, b)| [a, b]).collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PairPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<[u32; 2]> = Vec::deserialize(deserializer)?;
        let pairs: Vec<(u32, u32)> = pairs.into_iter().map(|[a, b]| (a, b)).collect();
        PairPartition::from_pairs(&pairs).map_err(D::Error::custom)
    }
}

pub fn make_pair_partition(pairs: &[(u32, u32)]) -> Result<PairPartition> {
    PairPartition::from_pairs(pairs)
}

pub fn first_pair_partition(k: usize) -> Result<PairPartition> {
    PairPartition::first(k)
}

/// Lazy stream over all pair-partitions of `[2k]`.
///
/// Order: the smallest unpaired label is matched with each larger unpaired
/// label in increasing order, recursively.
#[derive(Clone, Debug)]
pub struct PairPartitions {
    partner: Vec<u32>,
    // (smallest free label, its current partner) for each open decision
    stack: Vec<(u32, u32)>,
    started: bool,
    done: bool,
}

const FREE: u32 = u32::MAX;

impl PairPartitions {
    /// Unchecked stream over the pair-partitions of `[2k]`.
    pub(crate) fn of_size(k: usize) -> PairPartitions {
        PairPartitions::new(k)
    }

    fn new(k: usize) -> PairPartitions {
        PairPartitions {
            partner: vec![FREE; 2 * k],
            stack: Vec::with_capacity(k),
            started: false,
            done: false,
        }
    }

    fn next_free(&self, after: u32) -> Option<u32> {
        (after..self.partner.len() as u32).find(|&i| self.partner[i as usize] == FREE)
    }

    fn link(&mut self, a: u32, b: u32) {
        self.partner[a as usize] = b;
        self.partner[b as usize] = a;
        self.stack.push((a, b));
    }

    // completes the current partial matching greedily
    fn descend(&mut self) {
        while let Some(a) = self.next_free(0) {
            let b = self.next_free(a + 1).expect("even number of free labels");
            self.link(a, b);
        }
    }

    fn advance(&mut self) -> bool {
        while let Some((a, b)) = self.stack.pop() {
            self.partner[a as usize] = FREE;
            self.partner[b as usize] = FREE;
            if let Some(c) = self.next_free(b + 1) {
                self.link(a, c);
                self.descend();
                return true;
            }
        }
        false
    }
}

impl Iterator for PairPartitions {
    type Item = PairPartition;

    fn next(&mut self) -> Option<PairPartition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        if self.partner.is_empty() {
            // k = 0 yields nothing
            self.done = true;
            return None;
        }
        Some(PairPartition {
            partner: self.partner.clone(),
        })
    }
}

/// All pair-partitions of `[2k]`, refusing `k` above the default ceiling.
pub fn enumerate_pair_partitions(k: usize) -> Result<PairPartitions> {
    enumerate_pair_partitions_with_ceiling(k, DEFAULT_ENUMERATION_CEILING)
}

pub fn enumerate_pair_partitions_with_ceiling(k: usize, ceiling: usize) -> Result<PairPartitions> {
    if k == 0 {
        return Err(Error::validation("enumeration needs k ≥ 1"));
    }
    if k > ceiling {
        return Err(Error::capacity(format!(
            "refusing to enumerate the {}  pair-partitions of [{}] (ceiling k = {ceiling})",
            rational::double_factorial_odd(k as u64),
            2 * k
        )));
    }
    Ok(PairPartitions::new(k))
}

/// Number of couples `(S1, S2)` of pair-partitions of `[2n]` of type `μ`,
/// `(2n)! / (z_μ 2^{ℓ(μ)})`.
pub fn couples_of_type_count(mu: &Partition) -> BigUint {
    let n = mu.size() as u64;
    rational::factorial(2 * n) / (mu.z() << mu.len())
}
