//! Simple undirected graphs on vertex set `0..n`, plus the component
//! decomposition used by the degree-2 embedders and the text/DOT formats
//! used by the CLI.
//!
//! Graphs are immutable once built (all mutation is internal to the
//! constructors), loop-free, and keep each adjacency list sorted so that
//! `has_edge` is a binary search and serialization is canonical.

use crate::error::{Error, Result};
use std::fmt::Write as _;

/// A simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=", self.n(), self.num_edges())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, validating ranges and rejecting
    /// self-loops. Duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::precondition(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::precondition(format!("self-loop at vertex {u}")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Convenience constructor for the path `0 - 1 - … - (n-1)`.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 1..n {
            g.insert_edge(u as u32 - 1, u as u32);
        }
        g
    }

    /// Convenience constructor for the cycle `0 - 1 - … - (n-1) - 0`.
    /// Requires `n ≥ 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.insert_edge(0, n as u32 - 1);
        g
    }

    /// Inserts an undirected edge, keeping adjacency sorted; no-op if present.
    pub(crate) fn insert_edge(&mut self, u: u32, v: u32) {
        debug_assert!(u != v);
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut self.adj[a as usize];
            if let Err(pos) = list.binary_search(&b) {
                list.insert(pos, b);
            }
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of undirected edges.
    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Sorted neighbor list of `u`.
    pub fn neighbors(&self, u: u32) -> &[u32] {
        &self.adj[u as usize]
    }

    /// Degree of `u`.
    pub fn degree(&self, u: u32) -> usize {
        self.adj[u as usize].len()
    }

    /// Maximum degree over all vertices (0 for the empty graph).
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    /// Whether `{u, v}` is an edge.
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u != v
            && (u as usize) < self.n()
            && (v as usize) < self.n()
            && self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Iterates edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            let u = u as u32;
            nbrs.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }
}

/// Classification of a connected component of a graph with Δ ≤ 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ComponentKind {
    Path,
    Cycle,
}

/// One connected component of a graph with Δ ≤ 2, with its traversal order.
///
/// For a path the vertices run endpoint to endpoint; a single vertex is a
/// path of length 1. For a cycle the vertices are in cyclic order (the
/// closing edge `last - first` is implied).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub kind: ComponentKind,
    pub vertices: Vec<u32>,
}

impl Component {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Splits a graph with maximum degree ≤ 2 into its path and cycle
/// components, each with a deterministic traversal order (paths start at
/// their smaller endpoint; cycles start at their smallest vertex and turn
/// toward its smaller neighbor).
pub fn decompose_components(g: &Graph) -> Result<Vec<Component>> {
    for u in 0..g.n() as u32 {
        if g.degree(u) > 2 {
            return Err(Error::DegreeExceeded {
                vertex: u,
                degree: g.degree(u),
                bound: 2,
            });
        }
    }

    let mut visited = vec![false; g.n()];
    let mut components = Vec::new();

    // Paths first pass: start walks only from endpoints (degree ≤ 1) so the
    // traversal order is endpoint-to-endpoint.
    for start in 0..g.n() as u32 {
        if visited[start as usize] || g.degree(start) > 1 {
            continue;
        }
        let mut order = vec![start];
        visited[start as usize] = true;
        let mut prev = start;
        let mut cur = start;
        while let Some(&next) = g
            .neighbors(cur)
            .iter()
            .find(|&&w| w != prev && !visited[w as usize])
        {
            order.push(next);
            visited[next as usize] = true;
            prev = cur;
            cur = next;
        }
        components.push(Component {
            kind: ComponentKind::Path,
            vertices: order,
        });
    }

    // Every vertex still unvisited has degree exactly 2 and lies on a cycle.
    for start in 0..g.n() as u32 {
        if visited[start as usize] {
            continue;
        }
        let mut order = vec![start];
        visited[start as usize] = true;
        // Turn toward the smaller neighbor for determinism.
        let mut prev = start;
        let mut cur = g.neighbors(start)[0];
        while cur != start {
            order.push(cur);
            visited[cur as usize] = true;
            let next = *g
                .neighbors(cur)
                .iter()
                .find(|&&w| w != prev)
                .expect("cycle vertex has two neighbors");
            prev = cur;
            cur = next;
        }
        components.push(Component {
            kind: ComponentKind::Cycle,
            vertices: order,
        });
    }

    // Report components in order of their smallest vertex so the output is
    // independent of the pass structure above.
    components.sort_by_key(|c| *c.vertices.iter().min().expect("non-empty component"));
    Ok(components)
}

/// An injective placement of guest vertices onto host vertex identifiers.
///
/// Index `u` holds the image of guest vertex `u`. Host identifiers are `u64`
/// because some hosts (the degree-D product) are addressed by combinatorial
/// rank rather than by a materialized vertex index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingMap {
    pub images: Vec<u64>,
}

impl EmbeddingMap {
    pub fn new(images: Vec<u64>) -> EmbeddingMap {
        EmbeddingMap { images }
    }

    pub fn guest_n(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, u: u32) -> u64 {
        self.images[u as usize]
    }
}

/// A choice of direction for every edge of some graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    /// Directed edges `(tail, head)`; each undirected edge appears once.
    pub arcs: Vec<(u32, u32)>,
}

impl Orientation {
    /// Out-degree of `u` under this orientation.
    pub fn out_degree(&self, u: u32) -> usize {
        self.arcs.iter().filter(|&&(t, _)| t == u).count()
    }

    /// Out-neighbors of `u`, sorted.
    pub fn out_neighbors(&self, u: u32) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .arcs
            .iter()
            .filter(|&&(t, _)| t == u)
            .map(|&(_, h)| h)
            .collect();
        out.sort_unstable();
        out
    }
}

/// Parses the plain text graph format: a header `n m`, then `m` lines `u v`
/// with `0 ≤ u < v < n`. Lines starting with `#` and blank lines are
/// ignored. Duplicate edges are rejected.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut data_lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_no, header) = data_lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header line \"n m\""))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(header_no, "header must be two integers \"n m\""))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(header_no, "header must be two integers \"n m\""))?;
    if parts.next().is_some() {
        return Err(Error::parse(header_no, "header has trailing tokens"));
    }

    let mut g = Graph::empty(n);
    let mut seen = 0usize;
    for (line_no, line) in data_lines {
        if seen == m {
            return Err(Error::parse(
                line_no,
                format!("more than the declared {m} edge lines"),
            ));
        }
        let mut parts = line.split_whitespace();
        let (u, v) = match (
            parts.next().and_then(|t| t.parse::<u32>().ok()),
            parts.next().and_then(|t| t.parse::<u32>().ok()),
        ) {
            (Some(u), Some(v)) if parts.next().is_none() => (u, v),
            _ => {
                return Err(Error::parse(
                    line_no,
                    "edge line must be two integers \"u v\"",
                ))
            }
        };
        if u >= v {
            return Err(Error::parse(
                line_no,
                format!("edge ({u}, {v}) must satisfy u < v"),
            ));
        }
        if v as usize >= n {
            return Err(Error::parse(
                line_no,
                format!("vertex {v} out of range for n = {n}"),
            ));
        }
        if g.has_edge(u, v) {
            return Err(Error::parse(line_no, format!("duplicate edge ({u}, {v})")));
        }
        g.insert_edge(u, v);
        seen += 1;
    }
    if seen != m {
        return Err(Error::parse(
            text.lines().count().max(1),
            format!("declared {m} edges but found {seen}"),
        ));
    }
    Ok(g)
}

/// Serializes a graph in the canonical text form: header, then edges in
/// lexicographic order, one per line.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.num_edges());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Renders a graph in DOT (undirected; vertex names are the indices).
/// Isolated vertices are listed explicitly so the vertex count survives.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph g {\n");
    for u in 0..g.n() as u32 {
        if g.degree(u) == 0 {
            let _ = writeln!(out, "  {u};");
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
