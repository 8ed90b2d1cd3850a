//! The surface obtained by gluing the polygons of `L(S1, S2)` along the pairs
//! of `S0`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::loops::{canonical_couple, count_loops};
use crate::pair_partition::PairPartition;
use crate::partition::Partition;
use crate::triplet::triplet_graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapStats {
    pub black: usize,
    pub white: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub connected: bool,
    pub orientable: bool,
}

/// Statistics of `M(S0, S1, S2)` with `(S1, S2) = canonical_couple(μ)`.
pub fn map_stats(mu: &Partition, s0: &PairPartition) -> Result<MapStats> {
    let (s1, s2) = canonical_couple(mu)?;
    if s0.ground_size() != s1.ground_size() {
        return Err(Error::SizeMismatch {
            left: s0.ground_size(),
            right: s1.ground_size(),
        });
    }
    map_stats_for(s0, &s1, &s2)
}

pub fn map_stats_for(s0: &PairPartition, s1: &PairPartition, s2: &PairPartition) -> Result<MapStats> {
    let g = triplet_graph(s0, s1, s2)?;
    let black = g.black_count();
    let white = g.white_count();
    let edges = s0.k();
    let faces = count_loops(s1.raw(), s2.raw());
    Ok(MapStats {
        black,
        white,
        edges,
        faces,
        euler_characteristic: (black + white + faces) as i64 - edges as i64,
        connected: g.is_connected(),
        orientable: two_colourable(&[s0.raw(), s1.raw(), s2.raw()]),
    })
}

// Can the labels be coloured with two colours so that every pair of every
// matching is bichromatic?
fn two_colourable(matchings: &[&[u32]]) -> bool {
    let n = matchings[0].len();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    let mut stack = Vec::new();
    for start in 0..n {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(false);
        stack.push(start);
        while let Some(x) = stack.pop() {
            let c = colour[x].expect("coloured before push");
            for m in matchings {
                let y = m[x] as usize;
                match colour[y] {
                    None => {
                        colour[y] = Some(!c);
                        stack.push(y);
                    }
                    Some(d) if d == c => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair_partition::{enumerate_pair_partitions, make_pair_partition};

    fn pp(pairs: &[(u32, u32)]) -> PairPartition {
        make_pair_partition(pairs).unwrap()
    }

    #[test]
    fn small_examples() {
        let mu = Partition::row(2);
        let (_, s2) = canonical_couple(&mu).unwrap();
        let st = map_stats(&mu, &s2).unwrap();
        assert_eq!(
            (st.black, st.white, st.edges, st.faces, st.euler_characteristic),
            (1, 2, 2, 1, 2)
        );
        assert!(st.connected && st.orientable);

        let st = map_stats(&mu, &pp(&[(1, 3), (2, 4)])).unwrap();
        assert_eq!(
            (st.black, st.white, st.edges, st.faces, st.euler_characteristic),
            (1, 1, 2, 1, 1)
        );
        assert!(!st.orientable);

        let st = map_stats(&Partition::row(1), &pp(&[(1, 2)])).unwrap();
        assert_eq!(
            (st.black, st.white, st.edges, st.faces, st.euler_characteristic),
            (1, 1, 1, 1, 2)
        );

        assert!(matches!(
            map_stats(&mu, &pp(&[(1, 2)])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn klein_bottle() {
        let s1 = pp(&[(1, 15), (2, 3), (4, 14), (13, 16), (5, 7), (6, 10), (8, 11), (9, 12)]);
        let s2 = pp(&[(1, 10), (2, 7), (8, 13), (9, 14), (3, 5), (4, 12), (6, 15), (11, 16)]);
        let s0 = pp(&[(1, 2), (3, 4), (5, 6), (7, 8), (9, 10), (11, 12), (13, 14), (15, 16)]);
        let st = map_stats_for(&s0, &s1, &s2).unwrap();
        assert!(st.connected);
        assert!(!st.orientable);
        assert_eq!(st.euler_characteristic, 0);
    }

    #[test]
    fn sphere_iff_euler_two() {
        for n in 1..=3 {
            for mu in Partition::all(n) {
                let (s1, s2) = canonical_couple(&mu).unwrap();
                for s0 in enumerate_pair_partitions(n).unwrap() {
                    let st = map_stats_for(&s0, &s1, &s2).unwrap();
                    if st.connected {
                        assert!(st.euler_characteristic <= 2);
                        if !st.orientable {
                            assert!(st.euler_characteristic <= 1);
                        } else {
                            assert_eq!(st.euler_characteristic % 2, 0);
                        }
                    }
                }
            }
        }
    }
}
