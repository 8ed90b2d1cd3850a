//! The bipartite graph `G(S0, S1, S2)`: black vertices are the loops of
//! `L(S0, S1)`, white vertices the loops of `L(S0, S2)`.

use crate::error::{Error, Result};
use crate::loops::trace_loops;
use crate::pair_partition::PairPartition;

/// A bipartite graph with vertices `0..black` and `0..white`.
///
/// Edges are stored without repetition, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    black: usize,
    white: usize,
    edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(black: usize, white: usize, mut edges: Vec<(usize, usize)>) -> Result<BipartiteGraph> {
        if let Some(&(b, w)) = edges.iter().find(|&&(b, w)| b >= black || w >= white) {
            return Err(Error::validation(format!(
                "edge ({b},{w}) outside a {black}x{white} graph"
            )));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(BipartiteGraph { black, white, edges })
    }

    pub fn black_count(&self) -> usize {
        self.black
    }

    pub fn white_count(&self) -> usize {
        self.white
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// White neighbours of every black vertex.
    pub fn black_neighbours(&self) -> Vec<Vec<usize>> {
        let mut nb = vec![Vec::new(); self.black];
        for &(b, w) in &self.edges {
            nb[b].push(w);
        }
        nb
    }

    /// Bitmask of white neighbours for every black vertex (needs `white ≤ 64`).
    pub(crate) fn black_neighbour_masks(&self) -> Vec<u64> {
        assert!(self.white <= 64);
        let mut nb = vec![0u64; self.black];
        for &(b, w) in &self.edges {
            nb[b] |= 1 << w;
        }
        nb
    }

    pub fn is_connected(&self) -> bool {
        let n = self.black + self.white;
        if n == 0 {
            return true;
        }
        // union-find over black ++ white
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut components = n;
        for &(b, w) in &self.edges {
            let (rb, rw) = (find(&mut parent, b), find(&mut parent, self.black + w));
            if rb != rw {
                parent[rb] = rw;
                components -= 1;
            }
        }
        components == 1
    }
}

/// `G(S0, S1, S2)` together with the loops it was built from.
#[derive(Clone, Debug)]
pub struct TripletGraph {
    black_loops: Vec<Vec<u32>>,
    white_loops: Vec<Vec<u32>>,
    black_of: Vec<usize>,
    white_of: Vec<usize>,
    graph: BipartiteGraph,
}

impl TripletGraph {
    /// Loops of `L(S0, S1)`, 1-based labels.
    pub fn black_vertices(&self) -> Vec<Vec<u32>> {
        self.black_loops
            .iter()
            .map(|l| l.iter().map(|x| x + 1).collect())
            .collect()
    }

    /// Loops of `L(S0, S2)`, 1-based labels.
    pub fn white_vertices(&self) -> Vec<Vec<u32>> {
        self.white_loops
            .iter()
            .map(|l| l.iter().map(|x| x + 1).collect())
            .collect()
    }

    pub fn black_count(&self) -> usize {
        self.black_loops.len()
    }

    pub fn white_count(&self) -> usize {
        self.white_loops.len()
    }

    /// Black vertex containing a 1-based label.
    pub fn black_of(&self, label: u32) -> usize {
        self.black_of[label as usize - 1]
    }

    /// White vertex containing a 1-based label.
    pub fn white_of(&self, label: u32) -> usize {
        self.white_of[label as usize - 1]
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        self.graph.edges()
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }
}

fn check_sizes(s0: &PairPartition, s1: &PairPartition, s2: &PairPartition) -> Result<()> {
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

pub fn triplet_graph(s0: &PairPartition, s1: &PairPartition, s2: &PairPartition) -> Result<TripletGraph> {
    check_sizes(s0, s1, s2)?;
    Ok(triplet_graph_raw(s0.raw(), s1.raw(), s2.raw()))
}

pub(crate) fn triplet_graph_raw(s0: &[u32], s1: &[u32], s2: &[u32]) -> TripletGraph {
    let (black_loops, black_of) = trace_loops(s0, s1);
    let (white_loops, white_of) = trace_loops(s0, s2);
    let edges = (0..s0.len()).map(|i| (black_of[i], white_of[i])).collect();
    let graph = BipartiteGraph::new(black_loops.len(), white_loops.len(), edges).expect("indices in range");
    TripletGraph {
        black_loops,
        white_loops,
        black_of,
        white_of,
        graph,
    }
}

/// Whether `S0, S1, S2` generate a transitive subgroup of the symmetric
/// group, i.e. whether `G(S0, S1, S2)` is connected.
pub fn is_transitive_triplet(s0: &PairPartition, s1: &PairPartition, s2: &PairPartition) -> Result<bool> {
    check_sizes(s0, s1, s2)?;
    Ok(triplet_graph_raw(s0.raw(), s1.raw(), s2.raw()).is_connected())
}
