//! Independent induced-subgraph oracle.
//!
//! [`check_induced_embedding`] validates a proposed vertex placement against
//! the defining condition — guest vertices map injectively and every guest
//! pair is adjacent exactly when its image pair is — and the backtracking
//! search [`find_induced_embedding`] decides existence outright for small
//! guests. The constructions elsewhere in the crate are all validated
//! against these two functions, which share no code with them.

use crate::error::{Error, Result};
use crate::graph::{EmbeddingMap, Graph};

/// Default guest-size cap for the backtracking search.
pub const DEFAULT_SEARCH_CAP: usize = 16;

/// Why a placement fails to be an induced embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingViolation {
    /// The map is defined on a different number of vertices than the guest has.
    WrongDomain { expected: usize, actual: usize },
    /// Some image is not a host vertex.
    ImageOutOfRange { guest_vertex: u32, image: u64 },
    /// Two guest vertices share an image.
    NotInjective { first: u32, second: u32 },
    /// A guest edge maps to a host non-edge.
    EdgeLost { u: u32, v: u32 },
    /// A guest non-edge maps to a host edge.
    NonEdgeLost { u: u32, v: u32 },
}

impl std::fmt::Display for EmbeddingViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EmbeddingViolation::WrongDomain { expected, actual } => {
                write!(f, "map covers {actual} vertices, guest has {expected}")
            }
            EmbeddingViolation::ImageOutOfRange { guest_vertex, image } => {
                write!(f, "vertex {guest_vertex} maps to non-host id {image}")
            }
            EmbeddingViolation::NotInjective { first, second } => {
                write!(f, "vertices {first} and {second} share an image")
            }
            EmbeddingViolation::EdgeLost { u, v } => {
                write!(f, "guest edge ({u}, {v}) maps to a host non-edge")
            }
            EmbeddingViolation::NonEdgeLost { u, v } => {
                write!(f, "guest non-edge ({u}, {v}) maps to a host edge")
            }
        }
    }
}

/// Checks whether `map` places `guest` into `host` as an induced subgraph,
/// reporting the first violation found (scanning vertices, then pairs in
/// lexicographic order).
pub fn check_induced_embedding(
    guest: &Graph,
    host: &Graph,
    map: &EmbeddingMap,
) -> std::result::Result<(), EmbeddingViolation> {
    let n = guest.n();
    if map.guest_n() != n {
        return Err(EmbeddingViolation::WrongDomain {
            expected: n,
            actual: map.guest_n(),
        });
    }
    for u in 0..n as u32 {
        if map.image(u) >= host.n() as u64 {
            return Err(EmbeddingViolation::ImageOutOfRange {
                guest_vertex: u,
                image: map.image(u),
            });
        }
    }
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            if map.image(u) == map.image(v) {
                return Err(EmbeddingViolation::NotInjective { first: u, second: v });
            }
            let host_adj = host.has_edge(map.image(u) as u32, map.image(v) as u32);
            match (guest.has_edge(u, v), host_adj) {
                (true, false) => return Err(EmbeddingViolation::EdgeLost { u, v }),
                (false, true) => return Err(EmbeddingViolation::NonEdgeLost { u, v }),
                _ => {}
            }
        }
    }
    Ok(())
}

/// Boolean form of [`check_induced_embedding`].
pub fn is_induced_embedding(guest: &Graph, host: &Graph, map: &EmbeddingMap) -> bool {
    check_induced_embedding(guest, host, map).is_ok()
}

/// Searches for an induced embedding of `guest` into `host` by backtracking,
/// with the default guest-size cap of [`DEFAULT_SEARCH_CAP`].
///
/// Returns `Ok(None)` when no induced embedding exists. The search order is
/// deterministic: guest vertices are processed most-constrained-first
/// (most already-placed neighbors, then highest degree, then lowest index)
/// and host candidates in increasing id order.
pub fn find_induced_embedding(guest: &Graph, host: &Graph) -> Result<Option<EmbeddingMap>> {
    find_induced_embedding_with_cap(guest, host, DEFAULT_SEARCH_CAP)
}

/// [`find_induced_embedding`] with an explicit guest-size cap.
pub fn find_induced_embedding_with_cap(
    guest: &Graph,
    host: &Graph,
    cap: usize,
) -> Result<Option<EmbeddingMap>> {
    if guest.n() > cap {
        return Err(Error::SizeGuard {
            what: "induced-embedding search guest",
            size: guest.n(),
            cap,
        });
    }
    if guest.n() > host.n() {
        return Ok(None);
    }
    if guest.n() == 0 {
        return Ok(Some(EmbeddingMap::new(Vec::new())));
    }

    let mut state = Search {
        guest,
        host,
        image: vec![u32::MAX; guest.n()],
        used: vec![false; host.n()],
        placed: 0,
    };
    if state.extend() {
        Ok(Some(EmbeddingMap::new(
            state.image.iter().map(|&x| x as u64).collect(),
        )))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    guest: &'a Graph,
    host: &'a Graph,
    /// image[u] = host vertex, or u32::MAX while unplaced.
    image: Vec<u32>,
    used: Vec<bool>,
    placed: usize,
}

impl Search<'_> {
    fn extend(&mut self) -> bool {
        if self.placed == self.guest.n() {
            return true;
        }
        let u = self.pick_next();
        for candidate in 0..self.host.n() as u32 {
            if self.used[candidate as usize] || !self.consistent(u, candidate) {
                continue;
            }
            self.image[u as usize] = candidate;
            self.used[candidate as usize] = true;
            self.placed += 1;
            if self.extend() {
                return true;
            }
            self.placed -= 1;
            self.used[candidate as usize] = false;
            self.image[u as usize] = u32::MAX;
        }
        false
    }

    /// Most-constrained unplaced guest vertex.
    fn pick_next(&self) -> u32 {
        (0..self.guest.n() as u32)
            .filter(|&u| self.image[u as usize] == u32::MAX)
            .max_by_key(|&u| {
                let placed_nbrs = self
                    .guest
                    .neighbors(u)
                    .iter()
                    .filter(|&&w| self.image[w as usize] != u32::MAX)
                    .count();
                (placed_nbrs, self.guest.degree(u), std::cmp::Reverse(u))
            })
            .expect("some vertex is unplaced")
    }

    /// Whether mapping `u → candidate` preserves adjacency and
    /// non-adjacency against every guest vertex placed so far.
    fn consistent(&self, u: u32, candidate: u32) -> bool {
        for w in 0..self.guest.n() as u32 {
            let img = self.image[w as usize];
            if img == u32::MAX {
                continue;
            }
            if self.guest.has_edge(u, w) != self.host.has_edge(candidate, img) {
                return false;
            }
        }
        true
    }
}

/// Brute-force existence check trying every injective placement; exponential,
/// used only to cross-validate the backtracking search on tiny inputs.
pub fn exists_embedding_brute_force(guest: &Graph, host: &Graph) -> bool {
    fn rec(guest: &Graph, host: &Graph, image: &mut Vec<u32>, used: &mut Vec<bool>) -> bool {
        let u = image.len();
        if u == guest.n() {
            let map = EmbeddingMap::new(image.iter().map(|&x| x as u64).collect());
            return is_induced_embedding(guest, host, &map);
        }
        for c in 0..host.n() as u32 {
            if used[c as usize] {
                continue;
            }
            image.push(c);
            used[c as usize] = true;
            if rec(guest, host, image, used) {
                return true;
            }
            used[c as usize] = false;
            image.pop();
        }
        false
    }
    if guest.n() > host.n() {
        return false;
    }
    rec(guest, host, &mut Vec::new(), &mut vec![false; host.n()])
}
