//! Red/green orientations of the labels and the axial symmetry group acting
//! on compatible pairs `(S0, φ)`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::loops::{canonical_couple, count_loops, trace_loops};
use crate::pair_partition::{enumerate_pair_partitions, PairPartition};
use crate::partition::Partition;

/// Largest `|μ|` accepted by [`orientation_orbits`].
pub const ORBIT_CAPACITY: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Green,
}

impl Color {
    fn flip(self) -> Color {
        match self {
            Color::Red => Color::Green,
            Color::Green => Color::Red,
        }
    }
}

/// A color for each label; `colors()[i]` belongs to label `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    color: Vec<Color>,
}

impl Orientation {
    pub fn new(color: Vec<Color>) -> Orientation {
        Orientation { color }
    }

    pub fn colors(&self) -> &[Color] {
        &self.color
    }

    pub fn color(&self, label: u32) -> Color {
        self.color[label as usize - 1]
    }

    /// Every pair of every given pair-partition has one red and one green
    /// element.
    pub fn is_compatible_with(&self, pairings: &[&PairPartition]) -> bool {
        pairings.iter().all(|s| {
            s.ground_size() == self.color.len()
                && s.raw()
                    .iter()
                    .enumerate()
                    .all(|(i, &j)| self.color[i] != self.color[j as usize])
        })
    }

    // (σ·φ)(σ(i)) = φ(i)
    fn permuted_raw(&self, sigma: &[u32]) -> Orientation {
        let mut color = self.color.clone();
        for (i, &c) in self.color.iter().enumerate() {
            color[sigma[i] as usize] = c;
        }
        Orientation { color }
    }
}

/// All `2^{|L(S0,S1)|}` orientations compatible with `L(S0, S1)`.
pub fn compatible_orientations(s0: &PairPartition, s1: &PairPartition) -> Result<Vec<Orientation>> {
    if s0.ground_size() != s1.ground_size() {
        return Err(Error::SizeMismatch {
            left: s0.ground_size(),
            right: s1.ground_size(),
        });
    }
    Ok(orientations_raw(s0.raw(), s1.raw()))
}

fn orientations_raw(s0: &[u32], s1: &[u32]) -> Vec<Orientation> {
    let (loops, _) = trace_loops(s0, s1);
    assert!(loops.len() < 32, "too many loops to list orientations");
    (0u32..1 << loops.len())
        .map(|mask| {
            let mut color = vec![Color::Red; s0.len()];
            for (i, l) in loops.iter().enumerate() {
                // consecutive labels along a loop are paired by S0 or S1
                let mut c = if mask >> i & 1 == 1 { Color::Green } else { Color::Red };
                for &x in l {
                    color[x as usize] = c;
                    c = c.flip();
                }
            }
            Orientation { color }
        })
        .collect()
}

/// One orbit of compatible pairs `(S0, φ)` under the axial symmetry group.
#[derive(Clone, Debug)]
pub struct OrientationOrbit {
    pub s0: PairPartition,
    pub orientation: Orientation,
    /// `|L(S0, S1)|` for the representative (constant on the orbit).
    pub black_loops: usize,
    pub size: usize,
}

/// The axial symmetries `r_i` of the loops of `L(S1, S2)`, 0-based one-line
/// notation. Labels of loop `i` are read as `j_1 = min`, `j_2 = S2(j_1)`,
/// `j_3 = S1(j_2)`, … and `r_i` sends `j_m` to `j_{2μ_i+1−m}`.
pub(crate) fn axial_symmetries(s1: &[u32], s2: &[u32]) -> Vec<Vec<u32>> {
    let n = s1.len();
    let (loops, _) = trace_loops(s2, s1);
    loops
        .iter()
        .map(|l| {
            let mut r: Vec<u32> = (0..n as u32).collect();
            let len = l.len();
            for m in 0..len {
                r[l[m] as usize] = l[len - 1 - m];
            }
            r
        })
        .collect()
}

fn compose_all(gens: &[Vec<u32>], mask: usize, n: usize) -> Vec<u32> {
    let mut sigma: Vec<u32> = (0..n as u32).collect();
    for (i, g) in gens.iter().enumerate() {
        if mask >> i & 1 == 1 {
            sigma = sigma.iter().map(|&x| g[x as usize]).collect();
        }
    }
    sigma
}

/// Orbits of `{(S0, φ) : φ compatible with L(S0, S1)}` under the group
/// generated by the axial symmetries, with `(S1, S2) = canonical_couple(μ)`.
pub fn orientation_orbits(mu: &Partition) -> Result<Vec<OrientationOrbit>> {
    let k = mu.size();
    if k > ORBIT_CAPACITY {
        return Err(Error::capacity(format!(
            "orientation orbits limited to |mu| <= {ORBIT_CAPACITY}, got {mu}"
        )));
    }
    let (s1, s2) = canonical_couple(mu)?;
    let gens = axial_symmetries(s1.raw(), s2.raw());
    let n = 2 * k;
    let group: Vec<Vec<u32>> = (0..1usize << gens.len())
        .map(|mask| compose_all(&gens, mask, n))
        .collect();
    let mut seen: HashSet<(PairPartition, Orientation)> = HashSet::new();
    let mut orbits = Vec::new();
    for s0 in enumerate_pair_partitions(k)? {
        let black_loops = count_loops(s0.raw(), s1.raw());
        for phi in orientations_raw(s0.raw(), s1.raw()) {
            if seen.contains(&(s0.clone(), phi.clone())) {
                continue;
            }
            let mut orbit: HashSet<(PairPartition, Orientation)> = HashSet::new();
            for g in &group {
                orbit.insert((s0.permuted_raw(g), phi.permuted_raw(g)));
            }
            if orbit.len() != group.len() {
                return Err(Error::Invariant(format!(
                    "orbit of size {} under a group of order {} for mu = {mu}",
                    orbit.len(),
                    group.len()
                )));
            }
            let size = orbit.len();
            seen.extend(orbit);
            orbits.push(OrientationOrbit {
                s0: s0.clone(),
                orientation: phi,
                black_loops,
                size,
            });
        }
    }
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair_partition::make_pair_partition;

    fn pp(pairs: &[(u32, u32)]) -> PairPartition {
        make_pair_partition(pairs).unwrap()
    }

    #[test]
    fn orientation_counts() {
        let s = pp(&[(1, 2)]);
        assert_eq!(compatible_orientations(&s, &s).unwrap().len(), 2);
        let s1 = pp(&[(1, 2), (3, 4)]);
        assert_eq!(compatible_orientations(&s1, &s1).unwrap().len(), 4);
        let s0 = pp(&[(1, 3), (2, 4)]);
        let all = compatible_orientations(&s0, &s1).unwrap();
        assert_eq!(all.len(), 2);
        assert!(all.iter().all(|o| o.is_compatible_with(&[&s0, &s1])));
    }

    #[test]
    fn orientations_are_exactly_the_compatible_colorings() {
        for k in 1..=3 {
            let all: Vec<_> = enumerate_pair_partitions(k).unwrap().collect();
            for s0 in &all {
                for s1 in &all {
                    let listed: HashSet<_> = compatible_orientations(s0, s1).unwrap().into_iter().collect();
                    let brute: HashSet<_> = (0u32..1 << (2 * k))
                        .map(|m| {
                            Orientation::new(
                                (0..2 * k)
                                    .map(|i| if m >> i & 1 == 1 { Color::Green } else { Color::Red })
                                    .collect(),
                            )
                        })
                        .filter(|o| o.is_compatible_with(&[s0, s1]))
                        .collect();
                    assert_eq!(listed, brute);
                    assert_eq!(listed.len(), 1 << count_loops(s0.raw(), s1.raw()));
                }
            }
        }
    }

    #[test]
    fn axial_symmetries_fix_the_couple() {
        for mu in Partition::all_up_to(5).into_iter().filter(|m| !m.is_empty()) {
            let (s1, s2) = canonical_couple(&mu).unwrap();
            let gens = axial_symmetries(s1.raw(), s2.raw());
            assert_eq!(gens.len(), mu.len());
            for r in &gens {
                assert_eq!(s1.permuted_raw(r), s1);
                assert_eq!(s2.permuted_raw(r), s2);
                assert!((0..r.len()).all(|i| r[r[i] as usize] as usize == i));
            }
        }
    }

    #[test]
    fn orbit_counts() {
        let orbits = orientation_orbits(&Partition::new(vec![1])).unwrap();
        assert_eq!(orbits.len(), 1);
        // 8 compatible pairs, group of order 2
        let orbits = orientation_orbits(&Partition::new(vec![2])).unwrap();
        assert_eq!(orbits.len(), 4);
        for mu in Partition::all_up_to(4).into_iter().filter(|m| !m.is_empty()) {
            let orbits = orientation_orbits(&mu).unwrap();
            let (s1, _) = canonical_couple(&mu).unwrap();
            let total: usize = enumerate_pair_partitions(mu.size())
                .unwrap()
                .map(|s0| 1 << count_loops(s0.raw(), s1.raw()))
                .sum();
            assert!(orbits.iter().all(|o| o.size == 1 << mu.len()));
            assert_eq!(orbits.len() * (1 << mu.len()), total);
        }
        assert!(orientation_orbits(&Partition::new(vec![6])).unwrap_err().is_capacity());
    }
}
