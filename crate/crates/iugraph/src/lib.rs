//! Induced-universal graphs for bounded-degree graph families.
//!
//! A graph U is *induced-universal* for a family F if every member of F is
//! an induced subgraph of U — edges and non-edges both preserved. This crate
//! builds such hosts for several families, produces explicit embeddings,
//! realizes each construction as an adjacency labeling scheme (per-vertex
//! bit labels from which adjacency is decoded), and ships brute-force
//! verification oracles plus evaluators for the size bounds the
//! constructions achieve.
//!
//! Families covered:
//! - paths (disjoint unions of paths) — host on ⌊3n/2⌋ vertices;
//! - all graphs of maximum degree ≤ 2 — host on 2n − 1 vertices;
//! - graphs of maximum degree ≤ D — a deterministic product host and a
//!   seeded randomized labeling scheme;
//! - cycles C_3..C_n — one host whose decoder knows n, and one whose
//!   decoder does not (its hosts form an identity-prefix chain).

pub mod bounds;
pub mod cycles;
pub mod deg2;
pub mod degd;
pub mod enumerate;
pub mod error;
pub mod euler;
pub mod graph;
pub mod labeling;
pub mod oracle;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Component, ComponentKind, EmbeddingMap, Graph, Orientation};
