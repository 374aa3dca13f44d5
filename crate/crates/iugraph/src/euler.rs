//! Splitting a graph of maximum degree ≤ 2k into k edge-disjoint parts of
//! maximum degree ≤ 2, and the related bounded-out-degree orientation.
//!
//! Both rest on the same classical device: augment the graph with a dummy
//! vertex joined to every odd-degree vertex, walk an Euler circuit of each
//! component, and orient edges along the walk. Every vertex then has
//! in-degree = out-degree ≤ ⌈deg/2⌉. For the split, the directed edges are
//! viewed as a bipartite (out-side, in-side) graph of maximum degree ≤ k and
//! properly k-edge-colored by alternating-path recoloring; each color class
//! leaves every vertex with ≤ 1 outgoing + ≤ 1 incoming edge, hence Δ ≤ 2.

use crate::error::{Error, Result};
use crate::graph::{Graph, Orientation};

/// Orients every edge of `g` so each vertex has out-degree ≤ ⌈deg/2⌉.
/// Fails with `DegreeExceeded` unless Δ(g) ≤ 2c, which guarantees
/// out-degree ≤ c.
pub fn orient_bounded_outdegree(g: &Graph, c: usize) -> Result<Orientation> {
    check_max_degree(g, 2 * c)?;
    Ok(Orientation {
        arcs: euler_orient(g),
    })
}

/// Splits `g` (with Δ ≤ 2k) into exactly `k` edge-disjoint graphs on the
/// same vertex set, each of maximum degree ≤ 2, whose edges union to E[g].
pub fn euler_split(g: &Graph, k: usize) -> Result<Vec<Graph>> {
    if k == 0 {
        return if g.num_edges() == 0 {
            Ok(Vec::new())
        } else {
            Err(Error::precondition(
                "cannot split a non-empty edge set into 0 parts",
            ))
        };
    }
    check_max_degree(g, 2 * k)?;

    let arcs = euler_orient(g);
    let colors = bipartite_edge_coloring(g.n(), &arcs, k);

    let mut parts = vec![Graph::empty(g.n()); k];
    for (arc, color) in arcs.iter().zip(&colors) {
        parts[*color].insert_edge(arc.0, arc.1);
    }
    Ok(parts)
}

fn check_max_degree(g: &Graph, bound: usize) -> Result<()> {
    for u in 0..g.n() as u32 {
        if g.degree(u) > bound {
            return Err(Error::DegreeExceeded {
                vertex: u,
                degree: g.degree(u),
                bound,
            });
        }
    }
    Ok(())
}

/// Orients the edges of `g` via Euler circuits of the dummy-augmented graph;
/// the result has per-vertex out-degree and in-degree ≤ ⌈deg/2⌉.
fn euler_orient(g: &Graph) -> Vec<(u32, u32)> {
    let n = g.n();
    let dummy = n as u32;

    // Augmented adjacency with edge ids; the dummy joins odd-degree vertices,
    // making every augmented degree even.
    let mut adj: Vec<Vec<(u32, usize)>> = vec![Vec::new(); n + 1];
    let mut edge_count = 0usize;
    for (u, v) in g.edges() {
        adj[u as usize].push((v, edge_count));
        adj[v as usize].push((u, edge_count));
        edge_count += 1;
    }
    for u in 0..n as u32 {
        if g.degree(u) % 2 == 1 {
            adj[u as usize].push((dummy, edge_count));
            adj[dummy as usize].push((u, edge_count));
            edge_count += 1;
        }
    }

    let mut used = vec![false; edge_count];
    let mut next_ptr = vec![0usize; n + 1];
    let mut arcs = Vec::with_capacity(g.num_edges());

    for start in 0..(n + 1) as u32 {
        if adj[start as usize].is_empty() {
            continue;
        }
        // Iterative Hierholzer: the circuit comes out in reverse traversal
        // order, which is still an Euler circuit of the component.
        let mut stack = vec![start];
        let mut circuit: Vec<u32> = Vec::new();
        while let Some(&v) = stack.last() {
            let ptr = &mut next_ptr[v as usize];
            while *ptr < adj[v as usize].len() && used[adj[v as usize][*ptr].1] {
                *ptr += 1;
            }
            if *ptr == adj[v as usize].len() {
                circuit.push(v);
                stack.pop();
            } else {
                let (w, id) = adj[v as usize][*ptr];
                used[id] = true;
                stack.push(w);
            }
        }
        // Orient along the walk, dropping steps through the dummy.
        for pair in circuit.windows(2) {
            if pair[0] != dummy && pair[1] != dummy {
                arcs.push((pair[0], pair[1]));
            }
        }
    }
    debug_assert_eq!(arcs.len(), g.num_edges());
    arcs
}

/// Properly k-edge-colors the bipartite graph whose left nodes are the arc
/// tails, right nodes the arc heads, and edges the arcs. Assumes per-side
/// degree ≤ k (guaranteed by the Euler orientation when Δ ≤ 2k). Returns one
/// color in `0..k` per arc.
fn bipartite_edge_coloring(n: usize, arcs: &[(u32, u32)], k: usize) -> Vec<usize> {
    const NONE: usize = usize::MAX;
    // slot[x][c] = arc currently colored c at bipartite node x
    // (x < n: out-side of vertex x; x ≥ n: in-side of vertex x − n).
    let mut slot = vec![vec![NONE; k]; 2 * n];
    let mut color = vec![NONE; arcs.len()];
    let ends = |e: usize| (arcs[e].0 as usize, arcs[e].1 as usize + n);

    for e in 0..arcs.len() {
        let (a, b) = ends(e);
        let ca = (0..k).find(|&c| slot[a][c] == NONE).expect("out-degree ≤ k");
        let cb = (0..k).find(|&c| slot[b][c] == NONE).expect("in-degree ≤ k");
        if ca != cb {
            // Walk the (ca, cb)-alternating path from b and swap its colors.
            // It cannot reach a: a ca-colored arrival is impossible at `a`
            // (ca is free there) and a cb-colored arrival lands on the wrong
            // side of the bipartition.
            let mut path = Vec::new();
            let (mut x, mut c) = (b, ca);
            loop {
                let edge = slot[x][c];
                if edge == NONE {
                    break;
                }
                path.push(edge);
                let (p, q) = ends(edge);
                x = if p == x { q } else { p };
                c = if c == ca { cb } else { ca };
            }
            for &edge in &path {
                let (p, q) = ends(edge);
                slot[p][color[edge]] = NONE;
                slot[q][color[edge]] = NONE;
            }
            for &edge in &path {
                let (p, q) = ends(edge);
                let swapped = if color[edge] == ca { cb } else { ca };
                color[edge] = swapped;
                slot[p][swapped] = edge;
                slot[q][swapped] = edge;
            }
        }
        color[e] = ca;
        slot[a][ca] = e;
        slot[b][ca] = e;
    }
    color
}
