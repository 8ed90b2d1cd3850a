//! Loops of the graph `L(S_a, S_b)` for a couple of pair-partitions.

use crate::error::{Error, Result};
use crate::pair_partition::PairPartition;
use crate::partition::Partition;

/// Loops of `L(S_a, S_b)`.
///
/// Each loop is a label sequence starting at its smallest label and
/// alternating `S_a`, `S_b`, `S_a`, … from there. Labels are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopStructure {
    loops: Vec<Vec<u32>>,
    loop_type: Partition,
    k: usize,
}

impl LoopStructure {
    pub fn loops(&self) -> &[Vec<u32>] {
        &self.loops
    }

    /// The partition of half-lengths of the loops.
    pub fn loop_type(&self) -> &Partition {
        &self.loop_type
    }

    pub fn count(&self) -> usize {
        self.loops.len()
    }

    /// `(−1)^{k − #loops}`.
    pub fn sign(&self) -> i32 {
        if (self.k - self.loops.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// For every 1-based label, the index of the loop containing it
    /// (0-based, indexing [`loops`](Self::loops)).
    pub fn loop_index(&self) -> Vec<usize> {
        let mut idx = vec![0; 2 * self.k];
        for (i, l) in self.loops.iter().enumerate() {
            for &x in l {
                idx[x as usize - 1] = i;
            }
        }
        idx
    }
}

pub fn loop_structure(sa: &PairPartition, sb: &PairPartition) -> Result<LoopStructure> {
    if sa.ground_size() != sb.ground_size() {
        return Err(Error::SizeMismatch {
            left: sa.ground_size(),
            right: sb.ground_size(),
        });
    }
    let (loops0, _) = trace_loops(sa.raw(), sb.raw());
    let mut lengths: Vec<u32> = loops0.iter().map(|l| l.len() as u32 / 2).collect();
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    let loops = loops0
        .into_iter()
        .map(|l| l.into_iter().map(|x| x + 1).collect())
        .collect();
    Ok(LoopStructure {
        loops,
        loop_type: Partition::new(lengths),
        k: sa.k(),
    })
}

/// 0-based loop tracing. Returns the loops and, for every label, the index of
/// its loop.
pub(crate) fn trace_loops(a: &[u32], b: &[u32]) -> (Vec<Vec<u32>>, Vec<usize>) {
    let n = a.len();
    let mut owner = vec![usize::MAX; n];
    let mut loops = Vec::new();
    for start in 0..n {
        if owner[start] != usize::MAX {
            continue;
        }
        let id = loops.len();
        let mut cycle = Vec::new();
        let mut x = start as u32;
        loop {
            owner[x as usize] = id;
            cycle.push(x);
            let y = a[x as usize];
            owner[y as usize] = id;
            cycle.push(y);
            x = b[y as usize];
            if x as usize == start {
                break;
            }
        }
        loops.push(cycle);
    }
    (loops, owner)
}

/// Number of loops of `L(a, b)` without materializing them.
pub(crate) fn count_loops(a: &[u32], b: &[u32]) -> usize {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut x = start;
        loop {
            seen[x] = true;
            let y = a[x] as usize;
            seen[y] = true;
            x = b[y] as usize;
            if x == start {
                break;
            }
        }
    }
    count
}

/// The couple `(S1, S2)` of type `μ` laid out on consecutive label blocks:
/// a block of size `2μ_i` at offset `a` contributes `{a+1,a+2},{a+3,a+4},…` to
/// `S1` and `{a+2,a+3},…,{a+2μ_i,a+1}` to `S2`.
pub fn canonical_couple(mu: &Partition) -> Result<(PairPartition, PairPartition)> {
    if mu.is_empty() {
        return Err(Error::validation("canonical couple of the empty partition"));
    }
    let n = 2 * mu.size();
    let mut s1 = vec![0u32; n];
    let mut s2 = vec![0u32; n];
    let mut a = 0u32;
    for &m in mu.parts() {
        let len = 2 * m;
        for j in (0..len).step_by(2) {
            s1[(a + j) as usize] = a + j + 1;
            s1[(a + j + 1) as usize] = a + j;
        }
        for j in 0..len {
            // S2 pairs position j with the neighbour on the other side of its S1 partner
            let partner = if j % 2 == 1 { (j + 1) % len } else { (j + len - 1) % len };
            s2[(a + j) as usize] = a + partner;
        }
        a += len;
    }
    let s1 = PairPartition::from_raw(s1);
    let s2 = PairPartition::from_raw(s2);
    let ty = loop_structure(&s1, &s2)?;
    if ty.loop_type() != mu {
        return Err(Error::Invariant(format!(
            "canonical couple of {mu} has type {}",
            ty.loop_type()
        )));
    }
    Ok((s1, s2))
}
