//! Hosts for the family of single cycles of length 3..=n, in two flavors.
//!
//! Size-aware host: a base cycle v_1..v_n plus ~log2(n) shortcut nodes and
//! one hub node. Shortcut i bridges anchors x(i) and x(i+1) where the anchor
//! gaps grow as powers of two, so choosing which shortcuts to replace by
//! their arcs realizes (via the greedy subset-sum lemma) every cycle length
//! from ~2k up to n. The hub is wired to positions y(2), y(3), …, whose
//! consecutive gaps are 0, 1, 2, …, so hub-to-arc windows realize the short
//! lengths. For a few small n the hub window is truncated and one length
//! falls through the crack; those graphs carry one explicit patch cycle.
//!
//! Size-oblivious host: a path v_1..v_{k²} with a hub u_p per square p² ≥ 4
//! (wired to v_{p²} and v_1), power-of-two shortcuts along the path, and a
//! constant gadget (one triangle, one hexagon) for the two short lengths the
//! main structure cannot realize. Built only at sizes m = k²+1; other sizes
//! reuse the next such m. Vertex identifiers follow the growth order, so
//! the host for a smaller size is literally an identifier-prefix of the
//! host for any larger size.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Greedy subset-sum selection: for a nondecreasing sequence starting at 1
/// with each element at most twice its predecessor, every target in
/// [0, Σa] is a subset sum, found by taking the largest element that fits,
/// then recursing on the prefix. Returns the chosen indices, ascending.
pub fn subset_sum_greedy(a: &[u64], x: u64) -> Result<Vec<usize>> {
    if a.is_empty() || a[0] != 1 {
        return Err(Error::precondition(
            "subset-sum sequence must be nonempty and start at 1",
        ));
    }
    for w in a.windows(2) {
        if w[1] < w[0] || w[1] > 2 * w[0] {
            return Err(Error::precondition(format!(
                "subset-sum sequence must be nondecreasing with a[i+1] ≤ 2·a[i]; \
                 violated at pair ({}, {})",
                w[0], w[1]
            )));
        }
    }
    let total: u64 = a.iter().sum();
    if x > total {
        return Err(Error::TargetOutOfRange { target: x, max: total });
    }
    let mut remaining = x;
    let mut picked = Vec::new();
    for i in (0..a.len()).rev() {
        if a[i] <= remaining {
            picked.push(i);
            remaining -= a[i];
        }
    }
    debug_assert_eq!(remaining, 0, "greedy subset-sum must hit the target");
    picked.reverse();
    Ok(picked)
}

/// Checks that `nodes` (in cycle order) induce exactly a cycle in `g`:
/// distinct, length ≥ 3, and every node's neighborhood restricted to the
/// set is precisely its two cyclic neighbors.
fn assert_induced_cycle(g: &Graph, nodes: &[u32]) {
    let len = nodes.len();
    assert!(len >= 3, "cycle must have length ≥ 3, got {len}");
    let mut sorted = nodes.to_vec();
    sorted.sort_unstable();
    assert!(
        sorted.windows(2).all(|w| w[0] < w[1]),
        "cycle nodes must be distinct"
    );
    for (i, &v) in nodes.iter().enumerate() {
        let prev = nodes[(i + len - 1) % len];
        let next = nodes[(i + 1) % len];
        let mut expected = [prev, next];
        expected.sort_unstable();
        let mut actual: Vec<u32> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|w| sorted.binary_search(w).is_ok())
            .collect();
        actual.sort_unstable();
        assert_eq!(
            actual, expected,
            "induced-cycle check failed at node {v} (position {i})"
        );
    }
}

// ---------------------------------------------------------------------------
// Size-aware host
// ---------------------------------------------------------------------------

/// The size-aware cycle host with its embedding bookkeeping.
///
/// Identifiers: cycle node v_j = j−1 for j in 1..=n, shortcut node
/// w_i = n+i−1 for i in 1..=k, hub u = n+k, patch cycles (rare, small n
/// only) appended after the hub.
#[derive(Clone, Debug)]
pub struct AwareCycleUniversal {
    pub n: usize,
    /// Number of shortcut nodes.
    pub k: usize,
    /// Anchor positions x(1)..x(k+1), 1-based cycle positions; the last is
    /// clamped to min{x(k)+2^(k−1)+2, n+1} and position n+1 wraps to v_1.
    pub x: Vec<u64>,
    /// Hub positions y(2)..y(2k) (y(i+1) = y(i)+i−1), 1-based.
    pub y: Vec<u64>,
    /// Largest ℓ with a hub route: ℓ ≤ 2k and y(ℓ) ≤ n.
    pub hub_max: usize,
    /// Smallest shortcut-route length: 2k+1 if x(k+1) = n, else 2k.
    pub base: usize,
    /// Patch cycles as (length, first identifier), one per length that
    /// neither the hub nor the shortcuts realize.
    pub patches: Vec<(usize, u32)>,
    graph: Graph,
}

impl AwareCycleUniversal {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::precondition(format!(
                "cycle host needs n ≥ 3, got {n}"
            )));
        }
        let nu = n as u64;
        // anchors: grow while the next strictly precedes position n
        let mut x = vec![1u64];
        while *x.last().unwrap() + (1 << (x.len() - 1)) + 2 < nu {
            let last = *x.last().unwrap();
            x.push(last + (1 << (x.len() - 1)) + 2);
        }
        let k = x.len();
        let last = *x.last().unwrap();
        x.push((last + (1 << (k - 1)) + 2).min(nu + 1));
        debug_assert!(x[k] == nu || x[k] == nu + 1);

        // hub positions y(2)..y(2k)
        let mut y = Vec::new();
        if k >= 1 {
            y.push(1u64);
            for i in 2..2 * k {
                y.push(y[i - 2] + i as u64 - 1);
            }
        }

        let base = if x[k] == nu { 2 * k + 1 } else { 2 * k };
        let hub_max = (3..=2 * k)
            .take_while(|&ell| y[ell - 2] <= nu)
            .last()
            .unwrap_or(0);

        // lengths in [3, n] with neither a hub nor a shortcut route
        let missing: Vec<usize> = (3..base.min(n + 1))
            .filter(|&ell| ell > hub_max)
            .collect();

        let mut g = Graph::empty(n + k + 1 + missing.iter().sum::<usize>());
        let vid = |pos: u64| -> u32 {
            debug_assert!((1..=nu + 1).contains(&pos));
            if pos == nu + 1 { 0 } else { (pos - 1) as u32 }
        };
        for j in 0..n as u32 {
            g.insert_edge(j, (j + 1) % n as u32);
        }
        for i in 0..k {
            let w = (n + i) as u32;
            g.insert_edge(vid(x[i]), w);
            // at n = 3 both anchors are v_1; the duplicate insert is a no-op
            // and the (useless there) shortcut node simply dangles
            if vid(x[i + 1]) != vid(x[i]) {
                g.insert_edge(w, vid(x[i + 1]));
            }
        }
        let hub = (n + k) as u32;
        for &pos in y.iter().filter(|&&pos| pos <= nu) {
            g.insert_edge(hub, vid(pos));
        }
        let mut patches = Vec::new();
        let mut next_id = (n + k + 1) as u32;
        for &ell in &missing {
            for t in 0..ell as u32 {
                g.insert_edge(next_id + t, next_id + (t + 1) % ell as u32);
            }
            patches.push((ell, next_id));
            next_id += ell as u32;
        }

        Ok(AwareCycleUniversal {
            n,
            k,
            x,
            y,
            hub_max,
            base,
            patches,
            graph: g,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Identifier of cycle position j (1-based; n+1 wraps to v_1).
    fn vid(&self, pos: u64) -> u32 {
        if pos == self.n as u64 + 1 {
            0
        } else {
            (pos - 1) as u32
        }
    }

    /// Returns an induced cycle of length ℓ in cycle order.
    pub fn embed(&self, ell: usize) -> Result<Vec<u32>> {
        if !(3..=self.n).contains(&ell) {
            return Err(Error::LengthOutOfRange {
                length: ell,
                max: self.n,
            });
        }
        let nodes = if ell <= self.hub_max {
            // hub, then the arc v_{y(ℓ−1)} .. v_{y(ℓ)}
            let mut nodes = vec![(self.n + self.k) as u32];
            for pos in self.y[ell - 3]..=self.y[ell - 2] {
                nodes.push(self.vid(pos));
            }
            nodes
        } else if ell >= self.base {
            self.shortcut_route(ell)?
        } else {
            let &(len, start) = self
                .patches
                .iter()
                .find(|&&(len, _)| len == ell)
                .expect("internal error: uncovered length despite patch analysis");
            (start..start + len as u32).collect()
        };
        assert_induced_cycle(&self.graph, &nodes);
        Ok(nodes)
    }

    /// Route of length ℓ ∈ [base, n]: per shortcut, either the shortcut node
    /// (2 edges) or the arc (2 + gap(i) edges, gap(i) = x(i+1)−x(i)−2);
    /// arcs are chosen by greedy subset-sum over the nonzero gaps.
    fn shortcut_route(&self, ell: usize) -> Result<Vec<u32>> {
        let target = (ell - self.base) as u64;
        let gaps: Vec<u64> = (0..self.k)
            .map(|i| self.x[i + 1] - self.x[i] - 2)
            .collect();
        // sort the nonzero gaps (the clamped last gap can be out of order)
        let mut order: Vec<usize> = (0..self.k).filter(|&i| gaps[i] > 0).collect();
        order.sort_by_key(|&i| gaps[i]);
        let values: Vec<u64> = order.iter().map(|&i| gaps[i]).collect();
        let mut arc = vec![false; self.k];
        if target > 0 {
            for idx in subset_sum_greedy(&values, target)? {
                arc[order[idx]] = true;
            }
        }
        let mut nodes = Vec::with_capacity(ell);
        for i in 0..self.k {
            nodes.push(self.vid(self.x[i]));
            if arc[i] {
                for pos in self.x[i] + 1..self.x[i + 1] {
                    nodes.push(self.vid(pos));
                }
            } else {
                nodes.push((self.n + i) as u32);
            }
        }
        if self.x[self.k] == self.n as u64 {
            nodes.push(self.vid(self.x[self.k]));
        }
        Ok(nodes)
    }
}

/// Builds the size-aware host for cycles of length 3..=n.
pub fn build_cycle_aware(n: usize) -> Result<Graph> {
    Ok(AwareCycleUniversal::new(n)?.graph)
}

/// Convenience wrapper: builds the size-aware host for n and embeds C_ℓ.
pub fn embed_cycle_aware(ell: usize, n: usize) -> Result<Vec<u32>> {
    AwareCycleUniversal::new(n)?.embed(ell)
}

// ---------------------------------------------------------------------------
// Size-oblivious host
// ---------------------------------------------------------------------------

/// Number of gadget nodes (a triangle plus a hexagon) in the oblivious host.
const GADGET_SIZE: usize = 9;

/// The size-oblivious cycle host, built at the canonical size
/// m = ⌈√(n−1)⌉² + 1 ≥ n.
///
/// Identifiers follow the growth order: generation g contributes path nodes
/// v_{(g−1)²+1}..v_{g²}, then hub u_g (g ≥ 2), then any shortcut node whose
/// far anchor first fits inside g², then (generation 2 only) the gadget.
/// Hence the host for a smaller size is an identifier-prefix of the host
/// for a larger one, and the induced subgraph on that prefix is exactly the
/// smaller host.
#[derive(Clone, Debug)]
pub struct ObliviousCycleUniversal {
    pub n: usize,
    /// Canonical size m = k²+1 at which the host is actually built.
    pub m: usize,
    /// Side length k = ⌈√(n−1)⌉ (with minimum 2).
    pub k: usize,
    /// Anchor positions x(i) = 2^(i−1)+2(i−1) with x(i) ≤ k².
    pub x: Vec<u64>,
    path_ids: Vec<u32>,
    hub_ids: Vec<u32>,
    shortcut_ids: Vec<u32>,
    gadget_triangle: [u32; 3],
    gadget_hexagon: [u32; 6],
    graph: Graph,
}

/// Canonical build size for a requested family size: the next integer of
/// the form k²+1 (k ≥ 2).
pub fn oblivious_build_size(n: usize) -> (usize, usize) {
    let k = ((n - 1) as f64).sqrt().ceil() as usize;
    let k = k.max(2) + usize::from(k * k + 1 < n); // guard float rounding
    (k, k * k + 1)
}

impl ObliviousCycleUniversal {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::precondition(format!(
                "cycle host needs n ≥ 3, got {n}"
            )));
        }
        let (k, m) = oblivious_build_size(n);
        let square = (k * k) as u64;

        // anchors x(i) = 2^(i−1) + 2(i−1), kept while ≤ k²
        let mut x = vec![1u64];
        loop {
            let i = x.len() as u64;
            let next = (1 << i) + 2 * i;
            if next > square {
                break;
            }
            x.push(next);
        }

        // identifier assignment in generation order
        let mut path_ids = vec![u32::MAX; k * k];
        let mut hub_ids = vec![u32::MAX; k - 1];
        let mut shortcut_ids = vec![u32::MAX; x.len().saturating_sub(1)];
        let mut gadget = [u32::MAX; GADGET_SIZE];
        let mut next_id = 0u32;
        for g in 1..=k {
            for j in (g - 1) * (g - 1) + 1..=g * g {
                path_ids[j - 1] = next_id;
                next_id += 1;
            }
            if g >= 2 {
                hub_ids[g - 2] = next_id;
                next_id += 1;
            }
            for i in 0..shortcut_ids.len() {
                let far = x[i + 1] as usize;
                if (g - 1) * (g - 1) < far && far <= g * g {
                    shortcut_ids[i] = next_id;
                    next_id += 1;
                }
            }
            if g == 2 {
                for slot in gadget.iter_mut() {
                    *slot = next_id;
                    next_id += 1;
                }
            }
        }

        let mut graph = Graph::empty(next_id as usize);
        for j in 1..k * k {
            graph.insert_edge(path_ids[j - 1], path_ids[j]);
        }
        for p in 2..=k {
            graph.insert_edge(path_ids[p * p - 1], hub_ids[p - 2]);
            graph.insert_edge(hub_ids[p - 2], path_ids[0]);
        }
        for (i, &w) in shortcut_ids.iter().enumerate() {
            graph.insert_edge(path_ids[x[i] as usize - 1], w);
            graph.insert_edge(w, path_ids[x[i + 1] as usize - 1]);
        }
        let tri: [u32; 3] = gadget[0..3].try_into().unwrap();
        let hex: [u32; 6] = gadget[3..9].try_into().unwrap();
        for i in 0..3 {
            graph.insert_edge(tri[i], tri[(i + 1) % 3]);
        }
        for i in 0..6 {
            graph.insert_edge(hex[i], hex[(i + 1) % 6]);
        }

        Ok(ObliviousCycleUniversal {
            n,
            m,
            k,
            x,
            path_ids,
            hub_ids,
            shortcut_ids,
            gadget_triangle: tri,
            gadget_hexagon: hex,
            graph,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Shortest route length through hub u_p: all shortcuts up to the last
    /// anchor x(r) ≤ p², then the arc to v_{p²}, then the hub.
    pub fn min_hub_length(&self, p: usize) -> usize {
        let square = (p * p) as u64;
        let r = self.x.iter().take_while(|&&v| v <= square).count();
        2 * r + (square - self.x[r - 1]) as usize
    }

    /// Returns an induced cycle of length ℓ in cycle order.
    pub fn embed(&self, ell: usize) -> Result<Vec<u32>> {
        if !(3..=self.n).contains(&ell) {
            return Err(Error::LengthOutOfRange {
                length: ell,
                max: self.n,
            });
        }
        let nodes = match ell {
            3 => self.gadget_triangle.to_vec(),
            6 => self.gadget_hexagon.to_vec(),
            _ => {
                let p = (2..=self.k)
                    .find(|&p| self.min_hub_length(p) <= ell && ell <= p * p + 1)
                    .expect("internal error: no hub window covers the length");
                self.hub_route(p, ell)?
            }
        };
        assert_induced_cycle(&self.graph, &nodes);
        Ok(nodes)
    }

    /// Route of length ℓ through u_p: per shortcut below x(r), either the
    /// shortcut node or the arc (arcs chosen by subset-sum over gaps
    /// 1, 2, 4, …), then v_{x(r)}..v_{p²}, then u_p, closing at v_1.
    fn hub_route(&self, p: usize, ell: usize) -> Result<Vec<u32>> {
        let square = (p * p) as u64;
        let r = self.x.iter().take_while(|&&v| v <= square).count();
        let target = (ell - self.min_hub_length(p)) as u64;
        let gaps: Vec<u64> = (0..r - 1).map(|i| 1u64 << i).collect();
        let mut arc = vec![false; r - 1];
        if target > 0 {
            for idx in subset_sum_greedy(&gaps, target)? {
                arc[idx] = true;
            }
        }
        let mut nodes = Vec::with_capacity(ell);
        for i in 0..r - 1 {
            nodes.push(self.path_ids[self.x[i] as usize - 1]);
            if arc[i] {
                for pos in self.x[i] + 1..self.x[i + 1] {
                    nodes.push(self.path_ids[pos as usize - 1]);
                }
            } else {
                nodes.push(self.shortcut_ids[i]);
            }
        }
        for pos in self.x[r - 1]..=square {
            nodes.push(self.path_ids[pos as usize - 1]);
        }
        nodes.push(self.hub_ids[p - 2]);
        Ok(nodes)
    }
}

/// Builds the size-oblivious host for cycles of length 3..=n.
pub fn build_cycle_oblivious(n: usize) -> Result<Graph> {
    Ok(ObliviousCycleUniversal::new(n)?.graph)
}

/// Convenience wrapper: builds the size-oblivious host for n and embeds C_ℓ.
pub fn embed_cycle_oblivious(ell: usize, n: usize) -> Result<Vec<u32>> {
    ObliviousCycleUniversal::new(n)?.embed(ell)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn greedy_subset_sum_spec_cases() {
        let pick = |a: &[u64], x: u64| -> Vec<u64> {
            subset_sum_greedy(a, x)
                .unwrap()
                .into_iter()
                .map(|i| a[i])
                .collect()
        };
        assert_eq!(pick(&[1, 2, 4], 5), vec![1, 4]);
        assert_eq!(pick(&[1, 2, 4], 0), Vec::<u64>::new());
        assert_eq!(pick(&[1, 1, 2, 3], 6).iter().sum::<u64>(), 6);
    }

    #[test]
    fn greedy_subset_sum_rejects_bad_input() {
        assert!(matches!(
            subset_sum_greedy(&[2, 3], 2),
            Err(Error::PreconditionViolated { .. })
        ));
        assert!(matches!(
            subset_sum_greedy(&[1, 3], 2),
            Err(Error::PreconditionViolated { .. })
        ));
        assert!(matches!(
            subset_sum_greedy(&[1, 2, 1], 2),
            Err(Error::PreconditionViolated { .. })
        ));
        assert!(matches!(
            subset_sum_greedy(&[1, 2], 4),
            Err(Error::TargetOutOfRange { target: 4, max: 3 })
        ));
        assert!(matches!(
            subset_sum_greedy(&[], 0),
            Err(Error::PreconditionViolated { .. })
        ));
    }

    #[test]
    fn greedy_subset_sum_covers_every_target() {
        // every valid sequence must reach every target in [0, Σ]
        let sequences: &[&[u64]] = &[
            &[1],
            &[1, 1, 1],
            &[1, 2, 4, 8, 16],
            &[1, 1, 2, 3, 5, 8],
            &[1, 2, 2, 3, 4, 8, 9],
        ];
        for a in sequences {
            let total: u64 = a.iter().sum();
            for x in 0..=total {
                let picked = subset_sum_greedy(a, x).unwrap();
                assert_eq!(picked.iter().map(|&i| a[i]).sum::<u64>(), x);
                assert!(picked.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn aware_structure_at_24_matches_the_source_layout() {
        let host = AwareCycleUniversal::new(24).unwrap();
        assert_eq!(host.k, 4);
        assert_eq!(host.x, vec![1, 4, 8, 14, 24]);
        assert_eq!(host.y, vec![1, 2, 4, 7, 11, 16, 22]);
        assert!(host.patches.is_empty());
        assert_eq!(host.graph().n(), 24 + 4 + 1);
    }

    #[test]
    fn aware_hub_route_example() {
        // ℓ=5 runs hub, v_4..v_7 (positions y(4)=4 through y(5)=7)
        let host = AwareCycleUniversal::new(24).unwrap();
        assert_eq!(host.embed(5).unwrap(), vec![28, 3, 4, 5, 6]);
    }

    #[test]
    fn aware_full_length_is_the_base_cycle() {
        let host = AwareCycleUniversal::new(24).unwrap();
        assert_eq!(host.embed(24).unwrap(), (0..24).collect::<Vec<u32>>());
    }

    #[test]
    fn aware_minimal_length_takes_every_shortcut() {
        let host = AwareCycleUniversal::new(24).unwrap();
        assert_eq!(host.base, 9);
        let nodes = host.embed(9).unwrap();
        // anchors v_1, v_4, v_8, v_14, v_24 interleaved with w_1..w_4
        assert_eq!(nodes, vec![0, 24, 3, 25, 7, 26, 13, 27, 23]);
    }

    #[test]
    fn aware_covers_every_length_up_to_128() {
        for n in 3..=128 {
            let host = AwareCycleUniversal::new(n).unwrap();
            for ell in 3..=n {
                host.embed(ell)
                    .unwrap_or_else(|e| panic!("n={n}, ℓ={ell}: {e}"));
            }
            assert!(matches!(
                host.embed(n + 1),
                Err(Error::LengthOutOfRange { .. })
            ));
        }
    }

    #[test]
    fn aware_patches_exist_only_for_the_known_sizes() {
        let mut patched = Vec::new();
        for n in 3..=512 {
            let host = AwareCycleUniversal::new(n).unwrap();
            if !host.patches.is_empty() {
                assert_eq!(host.patches.len(), 1, "n={n}");
                assert_eq!(host.patches[0].0, 2 * host.k - 1, "n={n}");
                patched.push(n);
            }
        }
        assert_eq!(patched, vec![15, 25, 26, 27, 28, 43, 44, 45]);
    }

    #[test]
    fn aware_size_overhead_is_logarithmic() {
        for n in [64, 100, 256, 1000, 4096] {
            let host = AwareCycleUniversal::new(n).unwrap();
            let overhead = host.graph().n() - n;
            assert!(
                (overhead as f64) <= (n as f64).log2() + 2.0,
                "n={n}: overhead {overhead}"
            );
        }
    }

    #[test]
    fn aware_smallest_size_is_degenerate_but_valid() {
        let host = AwareCycleUniversal::new(3).unwrap();
        assert_eq!(host.embed(3).unwrap(), vec![0, 1, 2]);
        assert_eq!(host.graph().n(), 5); // triangle + dangling shortcut + hub
    }

    #[test]
    fn oblivious_build_size_formula() {
        assert_eq!(oblivious_build_size(3), (2, 5));
        assert_eq!(oblivious_build_size(5), (2, 5));
        assert_eq!(oblivious_build_size(6), (3, 10));
        assert_eq!(oblivious_build_size(10), (3, 10));
        assert_eq!(oblivious_build_size(11), (4, 17));
        assert_eq!(oblivious_build_size(17), (4, 17));
        assert_eq!(oblivious_build_size(18), (5, 26));
        assert_eq!(oblivious_build_size(37), (6, 37));
    }

    #[test]
    fn oblivious_structure_at_37_matches_the_source_layout() {
        let host = ObliviousCycleUniversal::new(37).unwrap();
        assert_eq!(host.k, 6);
        assert_eq!(host.x, vec![1, 4, 8, 14, 24]);
        assert_eq!(host.hub_ids.len(), 5); // u_2..u_6
        assert_eq!(host.shortcut_ids.len(), 4); // w_1..w_4
        assert_eq!(host.graph().n(), 36 + 5 + 4 + GADGET_SIZE);
    }

    #[test]
    fn oblivious_short_routes() {
        let host = ObliviousCycleUniversal::new(37).unwrap();
        // ℓ=5: v_1..v_4 and u_2
        let five = host.embed(5).unwrap();
        assert_eq!(five.len(), 5);
        assert!(five.contains(&host.hub_ids[0]));
        // ℓ=3 and ℓ=6 come from the gadget
        assert_eq!(host.embed(3).unwrap(), host.gadget_triangle.to_vec());
        assert_eq!(host.embed(6).unwrap(), host.gadget_hexagon.to_vec());
        // ℓ=37: the whole path plus u_6
        let full = host.embed(37).unwrap();
        assert_eq!(full.len(), 37);
        assert_eq!(full[36], host.hub_ids[4]);
    }

    #[test]
    fn oblivious_covers_every_length_up_to_128() {
        for n in 3..=128 {
            let host = ObliviousCycleUniversal::new(n).unwrap();
            for ell in 3..=n {
                host.embed(ell)
                    .unwrap_or_else(|e| panic!("n={n}, ℓ={ell}: {e}"));
            }
        }
    }

    #[test]
    fn oblivious_prefix_is_literal() {
        // the host for n is the identifier-prefix-induced subgraph of the
        // host for n+1, for every size in range
        let mut prev = ObliviousCycleUniversal::new(3).unwrap();
        for n in 4..=200 {
            let cur = ObliviousCycleUniversal::new(n).unwrap();
            let pn = prev.graph().n();
            assert!(pn <= cur.graph().n(), "n={n}");
            let mut induced = Graph::empty(pn);
            for (u, v) in cur.graph().edges() {
                if (u as usize) < pn && (v as usize) < pn {
                    induced.insert_edge(u, v);
                }
            }
            assert_eq!(&induced, prev.graph(), "prefix violated at n={n}");
            prev = cur;
        }
    }

    #[test]
    fn oblivious_size_overhead_is_sqrt() {
        for n in 16..=1024 {
            let host = ObliviousCycleUniversal::new(n).unwrap();
            let overhead = (host.graph().n() - n) as f64;
            assert!(
                overhead <= 6.0 * (n as f64).sqrt(),
                "n={n}: overhead {overhead}"
            );
        }
    }

    #[test]
    fn free_function_wrappers_agree() {
        assert_eq!(
            build_cycle_aware(24).unwrap().n(),
            AwareCycleUniversal::new(24).unwrap().graph().n()
        );
        assert_eq!(embed_cycle_aware(5, 24).unwrap(), vec![28, 3, 4, 5, 6]);
        assert_eq!(
            embed_cycle_oblivious(3, 37).unwrap(),
            ObliviousCycleUniversal::new(37).unwrap().embed(3).unwrap()
        );
    }
}
