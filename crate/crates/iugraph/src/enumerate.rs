//! Family enumerators used by the exhaustive verifiers.
//!
//! Two universes matter here: graphs of maximum degree ≤ 2 — where hosting
//! one canonical labeled representative per multiset of path/cycle components
//! is enough, because any isomorphic relabeling embeds the same way — and
//! fully labeled graphs of maximum degree ≤ D, where counting arguments need
//! every labeled graph, so all 2^C(n,2) edge subsets are filtered.

use crate::error::{Error, Result};
use crate::graph::{ComponentKind, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

/// Default size cap for [`enumerate_deg2_family`].
pub const DEFAULT_DEG2_ENUM_CAP: usize = 14;

/// Hard size guard for [`enumerate_bounded_degree`]: 2^C(8,2) is already
/// 2^28 graph builds, so the line is drawn at 7 vertices.
pub const BOUNDED_DEGREE_ENUM_CAP: usize = 7;

/// Enumerates one canonical labeled representative per multiset of
/// components with total size `n`, drawn from paths `P_1..P_n` and — unless
/// `acyclic` — cycles `C_3..C_n`. Uses the default cap
/// [`DEFAULT_DEG2_ENUM_CAP`].
///
/// The representative lays components out on consecutive vertex indices,
/// paths first (ascending size), then cycles (ascending size).
pub fn enumerate_deg2_family(n: usize, acyclic: bool) -> Result<Vec<Graph>> {
    enumerate_deg2_family_with_cap(n, acyclic, DEFAULT_DEG2_ENUM_CAP)
}

/// [`enumerate_deg2_family`] with an explicit size cap.
pub fn enumerate_deg2_family_with_cap(n: usize, acyclic: bool, cap: usize) -> Result<Vec<Graph>> {
    if n > cap {
        return Err(Error::SizeGuard {
            what: "degree-2 family enumeration",
            size: n,
            cap,
        });
    }

    // Parts in canonical order: paths by size, then cycles by size. A
    // multiset is enumerated once as a nondecreasing sequence of part
    // indices, which doubles as the canonical component layout order.
    let mut parts: Vec<(ComponentKind, usize)> = (1..=n).map(|s| (ComponentKind::Path, s)).collect();
    if !acyclic {
        parts.extend((3..=n).map(|s| (ComponentKind::Cycle, s)));
    }

    let mut result = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fill(n, 0, &parts, &mut chosen, &mut result);
    Ok(result)
}

fn fill(
    remaining: usize,
    min_part: usize,
    parts: &[(ComponentKind, usize)],
    chosen: &mut Vec<usize>,
    result: &mut Vec<Graph>,
) {
    if remaining == 0 {
        result.push(realize(parts, chosen));
        return;
    }
    for idx in min_part..parts.len() {
        let size = parts[idx].1;
        if size > remaining {
            continue;
        }
        chosen.push(idx);
        fill(remaining - size, idx, parts, chosen, result);
        chosen.pop();
    }
}

/// Lays the chosen parts out on consecutive indices.
fn realize(parts: &[(ComponentKind, usize)], chosen: &[usize]) -> Graph {
    let total: usize = chosen.iter().map(|&i| parts[i].1).sum();
    let mut g = Graph::empty(total);
    let mut base = 0u32;
    for &i in chosen {
        let (kind, size) = parts[i];
        for j in 1..size as u32 {
            g.insert_edge(base + j - 1, base + j);
        }
        if kind == ComponentKind::Cycle {
            g.insert_edge(base, base + size as u32 - 1);
        }
        base += size as u32;
    }
    g
}

/// Enumerates every labeled graph on vertex set `0..n` with maximum degree
/// ≤ `d`, by filtering all 2^C(n,2) edge subsets. Guarded at
/// [`BOUNDED_DEGREE_ENUM_CAP`] vertices.
///
/// Returned lazily (there are millions of subsets at the cap); iteration
/// order is by edge-subset bitmask, ascending.
pub fn enumerate_bounded_degree(n: usize, d: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > BOUNDED_DEGREE_ENUM_CAP {
        return Err(Error::SizeGuard {
            what: "bounded-degree labeled enumeration",
            size: n,
            cap: BOUNDED_DEGREE_ENUM_CAP,
        });
    }
    let pairs: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|u| ((u + 1)..n as u32).map(move |v| (u, v)))
        .collect();
    let num_masks: u64 = 1u64 << pairs.len();

    Ok((0..num_masks).filter_map(move |mask| {
        let mut degree = vec![0usize; n];
        let mut edges = Vec::new();
        for (bit, &(u, v)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                degree[u as usize] += 1;
                degree[v as usize] += 1;
                if degree[u as usize] > d || degree[v as usize] > d {
                    return None;
                }
                edges.push((u, v));
            }
        }
        Some(Graph::from_edges(n, &edges).expect("generated edges are valid"))
    }))
}

/// Number of labeled graphs on `n` vertices with maximum degree ≤ `d`.
pub fn count_bounded_degree(n: usize, d: usize) -> Result<u64> {
    Ok(enumerate_bounded_degree(n, d)?.count() as u64)
}

/// Samples one labeled graph on `n` vertices with maximum degree ≤ `d`:
/// a target edge count is drawn uniformly from [0, ⌊nd/2⌋], then a shuffled
/// ordering of all vertex pairs is scanned greedily, taking each pair whose
/// endpoints still have spare degree, until the target is met or the pairs
/// run out. Deterministic given the generator state.
pub fn random_bounded_degree(n: usize, d: usize, rng: &mut impl Rng) -> Graph {
    let mut pairs: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|u| ((u + 1)..n as u32).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let target = rng.gen_range(0..=n * d / 2);

    let mut degree = vec![0usize; n];
    let mut g = Graph::empty(n);
    let mut taken = 0usize;
    for (u, v) in pairs {
        if taken == target {
            break;
        }
        if degree[u as usize] < d && degree[v as usize] < d {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
            g.insert_edge(u, v);
            taken += 1;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::decompose_components;

    #[test]
    fn acyclic_multisets_of_size_3() {
        // P_3; P_2 + P_1; three P_1
        let family = enumerate_deg2_family(3, true).unwrap();
        assert_eq!(family.len(), 3);
        for g in &family {
            assert_eq!(g.n(), 3);
            assert!(g.max_degree() <= 2);
            let comps = decompose_components(g).unwrap();
            assert!(comps.iter().all(|c| c.kind == ComponentKind::Path));
        }
        // all three edge counts distinct: 0, 1, 2
        let mut m: Vec<usize> = family.iter().map(|g| g.num_edges()).collect();
        m.sort_unstable();
        assert_eq!(m, vec![0, 1, 2]);
    }

    #[test]
    fn full_multisets_of_size_4() {
        // P_4; P_3+P_1; 2×P_2; P_2+2×P_1; 4×P_1; C_3+P_1; C_4
        let family = enumerate_deg2_family(4, false).unwrap();
        assert_eq!(family.len(), 7);
        let with_cycles = family
            .iter()
            .filter(|g| {
                decompose_components(g)
                    .unwrap()
                    .iter()
                    .any(|c| c.kind == ComponentKind::Cycle)
            })
            .count();
        assert_eq!(with_cycles, 2);
    }

    #[test]
    fn empty_size_yields_the_empty_graph() {
        let family = enumerate_deg2_family(0, false).unwrap();
        assert_eq!(family.len(), 1);
        assert_eq!(family[0].n(), 0);
    }

    #[test]
    fn representatives_are_distinct_multisets() {
        let family = enumerate_deg2_family(6, false).unwrap();
        let mut signatures: Vec<Vec<(ComponentKind, usize)>> = family
            .iter()
            .map(|g| {
                let mut sig: Vec<(ComponentKind, usize)> = decompose_components(g)
                    .unwrap()
                    .iter()
                    .map(|c| (c.kind, c.len()))
                    .collect();
                sig.sort();
                sig
            })
            .collect();
        let before = signatures.len();
        signatures.sort();
        signatures.dedup();
        assert_eq!(signatures.len(), before, "duplicate multiset representative");
    }

    #[test]
    fn deg2_cap_is_enforced() {
        assert!(matches!(
            enumerate_deg2_family(15, true),
            Err(Error::SizeGuard { .. })
        ));
        assert!(enumerate_deg2_family_with_cap(15, true, 15).is_ok());
    }

    #[test]
    fn all_triangle_subsets_have_degree_at_most_2() {
        let graphs: Vec<Graph> = enumerate_bounded_degree(3, 2).unwrap().collect();
        assert_eq!(graphs.len(), 8);
    }

    #[test]
    fn matchings_on_4_labeled_vertices() {
        let graphs: Vec<Graph> = enumerate_bounded_degree(4, 1).unwrap().collect();
        assert_eq!(graphs.len(), 10);
        for g in &graphs {
            assert!(g.max_degree() <= 1);
        }
    }

    #[test]
    fn degree_zero_leaves_only_the_empty_graph() {
        assert_eq!(count_bounded_degree(2, 0).unwrap(), 1);
    }

    #[test]
    fn labeled_enumeration_is_exhaustive_and_valid() {
        // n=4, d=3 places no constraint: all 2^6 subsets
        assert_eq!(count_bounded_degree(4, 3).unwrap(), 64);
        for g in enumerate_bounded_degree(4, 2).unwrap() {
            assert!(g.max_degree() <= 2);
            assert_eq!(g.n(), 4);
        }
    }

    #[test]
    fn bounded_degree_cap_is_enforced() {
        assert!(enumerate_bounded_degree(8, 2).is_err());
    }

    #[test]
    fn random_graphs_respect_the_degree_bound_and_seed() {
        use rand::SeedableRng;
        use rand_chacha::ChaCha12Rng;
        for d in [0usize, 1, 3, 7] {
            let mut rng = ChaCha12Rng::seed_from_u64(42 + d as u64);
            for _ in 0..20 {
                let g = random_bounded_degree(25, d, &mut rng);
                assert_eq!(g.n(), 25);
                assert!(g.max_degree() <= d);
            }
        }
        let mut a = ChaCha12Rng::seed_from_u64(7);
        let mut b = ChaCha12Rng::seed_from_u64(7);
        assert_eq!(
            random_bounded_degree(30, 4, &mut a),
            random_bounded_degree(30, 4, &mut b)
        );
        // with a generous budget the sampler actually produces edges
        let mut rng = ChaCha12Rng::seed_from_u64(1);
        let dense = (0..10).any(|_| random_bounded_degree(20, 5, &mut rng).num_edges() > 10);
        assert!(dense);
    }
}
