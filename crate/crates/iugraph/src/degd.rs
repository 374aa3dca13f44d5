//! Hosts and labeling schemes for graphs of maximum degree ≤ D.
//!
//! Deterministic side: the product host. With k = ⌈D/2⌉, vertices are pairs
//! (x, A) where x is a vertex of the degree-2 host for size n and A is a set
//! of ≤ k−1 such vertices; (x, A) ~ (y, B) iff x ∈ B, y ∈ A, or x ~ y in the
//! degree-2 host. A guest of max degree ≤ D splits into k parts of max
//! degree ≤ 2; one part is embedded directly (the x coordinate) and the
//! remaining parts, oriented with out-degree ≤ k−1, fill the sets.
//!
//! Randomized side: a circular-difference labeling. A seeded permutation π
//! of an odd-padded vertex range assigns positions; each vertex stores the
//! clockwise differences (≤ half the circle) to its neighbors. Because the
//! circle is odd, each edge is "clockwise-short" for exactly one endpoint,
//! and adjacency is decodable from two labels alone. The permutation is
//! resampled until every difference set fits the Chernoff-sized budget.

use crate::deg2::{embed_deg2, u_adjacent};
use crate::error::{Error, Result};
use crate::euler::{euler_split, orient_bounded_outdegree};
use crate::graph::{EmbeddingMap, Graph};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// Default vertex-count cap for materializing the product host.
pub const DEFAULT_PRODUCT_CAP: usize = 1_000_000;

/// Default retry cap for the randomized encoder.
pub const DEFAULT_RETRY_CAP: usize = 64;

/// Default constant in the difference-budget formula
/// ⌊D/2 + c·√(D·ln(2n))⌋.
pub const DEFAULT_BUDGET_CONSTANT: f64 = 2.0;

/// Half-split parameter k = ⌈D/2⌉ of the product host.
pub fn product_k(d: usize) -> usize {
    d.div_ceil(2)
}

/// One vertex of the product host: a degree-2-host vertex `x` together with
/// a sorted set `a` of at most k−1 degree-2-host vertices. `x ∈ a` is
/// permitted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProductVertex {
    pub x: u32,
    pub a: Vec<u32>,
}

impl ProductVertex {
    pub fn new(x: u32, mut a: Vec<u32>) -> Self {
        a.sort_unstable();
        a.dedup();
        ProductVertex { x, a }
    }
}

/// Adjacency rule of the product host: `p ~ q` iff p.x ∈ q.a, or q.x ∈ p.a,
/// or the x coordinates are adjacent in the degree-2 host.
pub fn product_adjacent(p: &ProductVertex, q: &ProductVertex) -> bool {
    if p == q {
        return false;
    }
    q.a.binary_search(&p.x).is_ok()
        || p.a.binary_search(&q.x).is_ok()
        || u_adjacent(p.x as u64, q.x as u64)
}

/// Exact vertex count of the product host: (2n−1) · Σ_{i<k} C(2n−1, i).
pub fn product_vertex_count(n: usize, d: usize) -> Result<BigUint> {
    check_product_params(n, d)?;
    let m = 2 * n - 1;
    let k = product_k(d);
    let mut sum = BigUint::zero();
    for i in 0..k {
        sum += binomial_big(m, i);
    }
    Ok(BigUint::from(m) * sum)
}

/// Closed-form size bound the product host stays under (for n ≥ 2):
/// 2^(k+1) · n^k / (k−1)!, rounded down.
pub fn product_size_bound(n: usize, d: usize) -> Result<BigUint> {
    check_product_params(n, d)?;
    let k = product_k(d) as u32;
    let numerator = (BigUint::one() << (k + 1)) * BigUint::from(n).pow(k);
    Ok(numerator / factorial_big(k as usize - 1))
}

fn check_product_params(n: usize, d: usize) -> Result<()> {
    if n == 0 || d == 0 {
        return Err(Error::precondition(format!(
            "product host needs n ≥ 1 and D ≥ 1, got n = {n}, D = {d}"
        )));
    }
    Ok(())
}

/// All product vertices for (n, D) in identifier order: by x, then by set
/// size ascending, then lexicographic within a size.
pub fn product_vertices(n: usize, d: usize) -> Result<Vec<ProductVertex>> {
    check_product_params(n, d)?;
    let m = (2 * n - 1) as u32;
    let k = product_k(d);
    let mut subsets: Vec<Vec<u32>> = vec![Vec::new()];
    for size in 1..k {
        subsets.extend(combinations_lex(m, size));
    }
    let mut vertices = Vec::with_capacity(m as usize * subsets.len());
    for x in 0..m {
        for a in &subsets {
            vertices.push(ProductVertex { x, a: a.clone() });
        }
    }
    Ok(vertices)
}

/// All size-`s` subsets of 0..m in lexicographic order.
fn combinations_lex(m: u32, s: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if s > m as usize {
        return out;
    }
    let mut cur: Vec<u32> = (0..s as u32).collect();
    loop {
        out.push(cur.clone());
        // advance to the next combination
        let mut i = s;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < m - (s - i) as u32 {
                break;
            }
        }
        cur[i] += 1;
        for j in i + 1..s {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Identifier (combinatorial rank) of a product vertex: x · T plus the rank
/// of the set among the ≤(k−1)-subsets ordered by size, then lex.
pub fn product_vertex_rank(n: usize, d: usize, v: &ProductVertex) -> Result<u128> {
    check_product_params(n, d)?;
    let m = 2 * n - 1;
    let k = product_k(d);
    if v.x as usize >= m || v.a.len() > k - 1 || v.a.iter().any(|&e| e as usize >= m) {
        return Err(Error::precondition(format!(
            "malformed product vertex for n = {n}, D = {d}: ({}, {:?})",
            v.x, v.a
        )));
    }
    let mut t = 0u128; // subsets of size < k
    for i in 0..k {
        t += binomial_u128(m, i);
    }
    let mut rank_a = 0u128; // smaller sizes first
    for i in 0..v.a.len() {
        rank_a += binomial_u128(m, i);
    }
    // lexicographic rank within the size class
    let s = v.a.len();
    let mut prev: i64 = -1;
    for (i, &e) in v.a.iter().enumerate() {
        for c in (prev + 1)..e as i64 {
            rank_a += binomial_u128(m - 1 - c as usize, s - 1 - i);
        }
        prev = e as i64;
    }
    Ok(v.x as u128 * t + rank_a)
}

/// Materializes the product host as a graph over vertex identifiers, with
/// the default vertex cap [`DEFAULT_PRODUCT_CAP`].
///
/// The host is dense (its edge count grows almost quadratically), so
/// materialization is only sensible well below the cap; the labeling scheme
/// works on the un-materialized host at any size.
pub fn build_product_universal(n: usize, d: usize) -> Result<Graph> {
    build_product_universal_with_cap(n, d, DEFAULT_PRODUCT_CAP)
}

/// [`build_product_universal`] with an explicit vertex cap.
pub fn build_product_universal_with_cap(n: usize, d: usize, cap: usize) -> Result<Graph> {
    let count = product_vertex_count(n, d)?;
    if count > BigUint::from(cap) {
        let size = count.to_string().parse::<usize>().unwrap_or(usize::MAX);
        return Err(Error::SizeGuard {
            what: "product host materialization",
            size,
            cap,
        });
    }
    let vertices = product_vertices(n, d)?;
    let mut g = Graph::empty(vertices.len());
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if product_adjacent(&vertices[i], &vertices[j]) {
                g.insert_edge(i as u32, j as u32);
            }
        }
    }
    Ok(g)
}

/// Embeds a graph of max degree ≤ D into the product host, returning the
/// explicit product vertices λ(u). Validated pairwise against
/// [`product_adjacent`] before returning.
pub fn embed_degd_product(g: &Graph, d: usize) -> Result<Vec<ProductVertex>> {
    if d == 0 {
        return Err(Error::precondition("degree bound D must be ≥ 1"));
    }
    for u in 0..g.n() as u32 {
        if g.degree(u) > d {
            return Err(Error::DegreeExceeded {
                vertex: u,
                degree: g.degree(u),
                bound: d,
            });
        }
    }
    let k = product_k(d);

    // Split into k parts of max degree ≤ 2; the densest part carries the
    // direct embedding, the rest are oriented into the sets.
    let parts = euler_split(g, k)?;
    let h0_idx = (0..parts.len())
        .max_by_key(|&i| (parts[i].num_edges(), std::cmp::Reverse(i)))
        .expect("k ≥ 1 parts");
    let mut h1 = Graph::empty(g.n());
    for (i, part) in parts.iter().enumerate() {
        if i != h0_idx {
            for (u, v) in part.edges() {
                h1.insert_edge(u, v);
            }
        }
    }

    let f = embed_deg2(&parts[h0_idx])?;
    let orientation = orient_bounded_outdegree(&h1, k.saturating_sub(1).max(0))?;

    let lambda: Vec<ProductVertex> = (0..g.n() as u32)
        .map(|u| {
            let a: Vec<u32> = orientation
                .out_neighbors(u)
                .into_iter()
                .map(|w| f.image(w) as u32)
                .collect();
            ProductVertex::new(f.image(u) as u32, a)
        })
        .collect();

    // Full pairwise validation against the adjacency rule (the product host
    // itself may be too large to materialize, but the rule never is).
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            assert_eq!(
                product_adjacent(&lambda[u], &lambda[v]),
                g.has_edge(u as u32, v as u32),
                "internal error: product placement failed at pair ({u}, {v})"
            );
        }
    }
    Ok(lambda)
}

/// [`embed_degd_product`] packaged as an identifier-valued embedding map.
pub fn embed_degd(g: &Graph, d: usize) -> Result<EmbeddingMap> {
    let lambda = embed_degd_product(g, d)?;
    let mut images = Vec::with_capacity(lambda.len());
    for v in &lambda {
        let rank = product_vertex_rank(g.n(), d, v)?;
        images.push(u64::try_from(rank).map_err(|_| Error::SizeGuard {
            what: "product vertex identifier (exceeds 64 bits)",
            size: usize::MAX,
            cap: usize::MAX,
        })?);
    }
    Ok(EmbeddingMap::new(images))
}

// ---------------------------------------------------------------------------
// Randomized circular-difference scheme
// ---------------------------------------------------------------------------

/// Parameters of one sampled labeling: the odd-padded range, the degree
/// bound, the accepted permutation, and the per-vertex set-size cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandScheme {
    pub n_padded: usize,
    pub d: usize,
    pub d_cap: usize,
    pub pi: Vec<u32>,
}

/// One vertex label of the randomized scheme: the vertex's position on the
/// circle and the sorted clockwise differences to its neighbors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandLabel {
    pub position: u32,
    pub diffs: Vec<u32>,
    pub n_padded: usize,
}

/// Difference budget D'' = min{⌊n/2⌋, ⌊D/2 + c·√(D·ln(2n))⌋}.
pub fn rand_diff_budget(n_padded: usize, d: usize, c: f64) -> usize {
    let n = n_padded as f64;
    let df = d as f64;
    let d_prime = (df / 2.0 + c * (df * (2.0 * n).ln()).sqrt()).floor() as usize;
    d_prime.min(n_padded / 2)
}

/// Encodes a graph of max degree ≤ D with the randomized scheme, using the
/// default budget constant and retry cap. Deterministic given the seed.
pub fn rand_encode(g: &Graph, d: usize, seed: u64) -> Result<(RandScheme, Vec<RandLabel>)> {
    rand_encode_with_params(g, d, seed, DEFAULT_BUDGET_CONSTANT, DEFAULT_RETRY_CAP)
}

/// [`rand_encode`] with an explicit budget constant and retry cap.
pub fn rand_encode_with_params(
    g: &Graph,
    d: usize,
    seed: u64,
    budget_constant: f64,
    retry_cap: usize,
) -> Result<(RandScheme, Vec<RandLabel>)> {
    check_rand_pre(g, d)?;
    let n_padded = if g.n() % 2 == 1 { g.n() } else { g.n() + 1 };
    let d_cap = rand_diff_budget(n_padded, d, budget_constant);

    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    for _ in 0..retry_cap {
        let mut pi: Vec<u32> = (0..n_padded as u32).collect();
        pi.shuffle(&mut rng);
        if let Some(result) = try_labels(g, d, d_cap, pi) {
            return Ok(result);
        }
    }
    Err(Error::RetryExhausted {
        attempts: retry_cap,
        budget: d_cap,
    })
}

/// Test hook: builds the scheme from an explicit permutation instead of a
/// seed, with the default budget. Fails like an exhausted retry loop if the
/// permutation does not fit the budget.
pub fn rand_encode_with_permutation(
    g: &Graph,
    d: usize,
    pi: Vec<u32>,
) -> Result<(RandScheme, Vec<RandLabel>)> {
    check_rand_pre(g, d)?;
    let n_padded = if g.n() % 2 == 1 { g.n() } else { g.n() + 1 };
    if pi.len() != n_padded {
        return Err(Error::precondition(format!(
            "permutation length {} does not match padded size {n_padded}",
            pi.len()
        )));
    }
    let d_cap = rand_diff_budget(n_padded, d, DEFAULT_BUDGET_CONSTANT);
    try_labels(g, d, d_cap, pi).ok_or(Error::RetryExhausted {
        attempts: 1,
        budget: d_cap,
    })
}

fn check_rand_pre(g: &Graph, d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::precondition("degree bound D must be ≥ 1"));
    }
    for u in 0..g.n() as u32 {
        if g.degree(u) > d {
            return Err(Error::DegreeExceeded {
                vertex: u,
                degree: g.degree(u),
                bound: d,
            });
        }
    }
    Ok(())
}

/// Computes all difference sets under `pi`; `None` if any exceeds the budget.
fn try_labels(
    g: &Graph,
    d: usize,
    d_cap: usize,
    pi: Vec<u32>,
) -> Option<(RandScheme, Vec<RandLabel>)> {
    let n = pi.len() as u64;
    let half = n / 2;
    let mut labels = Vec::with_capacity(g.n());
    for u in 0..g.n() as u32 {
        let pu = pi[u as usize] as u64;
        let mut diffs: Vec<u32> = g
            .neighbors(u)
            .iter()
            .filter_map(|&v| {
                let diff = (pi[v as usize] as u64 + n - pu) % n;
                (1..=half).contains(&diff).then_some(diff as u32)
            })
            .collect();
        if diffs.len() > d_cap {
            return None;
        }
        diffs.sort_unstable();
        labels.push(RandLabel {
            position: pi[u as usize],
            diffs,
            n_padded: n as usize,
        });
    }
    Some((
        RandScheme {
            n_padded: n as usize,
            d,
            d_cap,
            pi,
        },
        labels,
    ))
}

/// Decodes adjacency from two labels of one scheme instance: the clockwise
/// difference that lands in the short half is looked up in that endpoint's
/// neighbor set.
pub fn rand_decode(l_u: &RandLabel, l_v: &RandLabel) -> Result<bool> {
    if l_u.n_padded != l_v.n_padded {
        return Err(Error::SchemeMismatch {
            msg: format!(
                "padded sizes differ: {} vs {}",
                l_u.n_padded, l_v.n_padded
            ),
        });
    }
    let n = l_u.n_padded as u64;
    let half = n / 2;
    let d = (l_u.position as u64 + n - l_v.position as u64) % n;
    if (1..=half).contains(&d) {
        Ok(l_v.diffs.binary_search(&(d as u32)).is_ok())
    } else {
        let back = (l_v.position as u64 + n - l_u.position as u64) % n;
        Ok(l_u.diffs.binary_search(&(back as u32)).is_ok())
    }
}

// ---------------------------------------------------------------------------
// Bit-string encodings
// ---------------------------------------------------------------------------

/// Bits needed to address `count` distinct values (0 when count ≤ 1).
pub fn bits_for(count: usize) -> usize {
    if count <= 1 {
        0
    } else {
        (usize::BITS - (count - 1).leading_zeros()) as usize
    }
}

fn push_field(out: &mut String, value: usize, width: usize) {
    for i in (0..width).rev() {
        out.push(if value >> i & 1 == 1 { '1' } else { '0' });
    }
}

fn read_field(bits: &[u8], at: usize, width: usize) -> usize {
    bits[at..at + width]
        .iter()
        .fold(0, |acc, &b| acc * 2 + (b - b'0') as usize)
}

/// Fixed-width bit encoding of a product vertex: x, then |A|, then k−1
/// element slots (unused slots zero-filled). Width is
/// k·⌈log2(2n−1)⌉ + ⌈log2 k⌉, so (length, D) determine the field widths.
pub fn product_label_bits(v: &ProductVertex, n: usize, d: usize) -> Result<String> {
    check_product_params(n, d)?;
    let k = product_k(d);
    let w = bits_for(2 * n - 1);
    if v.x as usize >= 2 * n - 1 || v.a.len() > k - 1 {
        return Err(Error::precondition(format!(
            "product vertex out of range for n = {n}, D = {d}"
        )));
    }
    let mut out = String::with_capacity(k * w + bits_for(k));
    push_field(&mut out, v.x as usize, w);
    push_field(&mut out, v.a.len(), bits_for(k));
    for i in 0..k - 1 {
        push_field(&mut out, v.a.get(i).copied().unwrap_or(0) as usize, w);
    }
    Ok(out)
}

/// Parses a product-vertex label given only the degree bound: the per-field
/// width is recovered from the label length.
pub fn product_label_from_bits(bits: &str, d: usize) -> Result<ProductVertex> {
    if d == 0 {
        return Err(Error::precondition("degree bound D must be ≥ 1"));
    }
    let k = product_k(d);
    let s = bits_for(k);
    let raw = bits.as_bytes();
    if raw.iter().any(|&b| b != b'0' && b != b'1') {
        return Err(Error::parse(1, "label must be a string of 0s and 1s"));
    }
    if raw.len() < s || (raw.len() - s) % k != 0 {
        return Err(Error::parse(
            1,
            format!("label length {} does not fit D = {d}", raw.len()),
        ));
    }
    let w = (raw.len() - s) / k;
    let x = read_field(raw, 0, w);
    let count = read_field(raw, w, s);
    if count > k - 1 {
        return Err(Error::parse(1, format!("set size {count} exceeds k−1")));
    }
    let mut a = Vec::with_capacity(count);
    for i in 0..count {
        a.push(read_field(raw, w + s + i * w, w) as u32);
    }
    if !a.windows(2).all(|p| p[0] < p[1]) {
        return Err(Error::parse(1, "set elements must be strictly increasing"));
    }
    Ok(ProductVertex { x: x as u32, a })
}

/// Bit encoding of a randomized-scheme label: position, then |S|, then the
/// sorted differences, each field ⌈log2 n_padded⌉ bits wide.
pub fn rand_label_bits(l: &RandLabel) -> String {
    let w = bits_for(l.n_padded);
    let mut out = String::with_capacity(w * (2 + l.diffs.len()));
    push_field(&mut out, l.position as usize, w);
    push_field(&mut out, l.diffs.len(), w);
    for &diff in &l.diffs {
        push_field(&mut out, diff as usize, w);
    }
    out
}

/// Parses a randomized-scheme label; needs the padded size for field widths.
pub fn rand_label_from_bits(bits: &str, n_padded: usize) -> Result<RandLabel> {
    let w = bits_for(n_padded);
    let raw = bits.as_bytes();
    if raw.iter().any(|&b| b != b'0' && b != b'1') {
        return Err(Error::parse(1, "label must be a string of 0s and 1s"));
    }
    if w == 0 || raw.len() < 2 * w || raw.len() % w != 0 {
        return Err(Error::parse(
            1,
            format!("label length {} does not fit n = {n_padded}", raw.len()),
        ));
    }
    let position = read_field(raw, 0, w);
    let count = read_field(raw, w, w);
    if raw.len() != w * (2 + count) {
        return Err(Error::parse(
            1,
            format!("label declares {count} differences but has {} bits", raw.len()),
        ));
    }
    let mut diffs = Vec::with_capacity(count);
    for i in 0..count {
        diffs.push(read_field(raw, (2 + i) * w, w) as u32);
    }
    if !diffs.windows(2).all(|p| p[0] < p[1]) {
        return Err(Error::parse(1, "differences must be strictly increasing"));
    }
    Ok(RandLabel {
        position: position as u32,
        diffs,
        n_padded,
    })
}

// ---------------------------------------------------------------------------
// Small exact-arithmetic helpers
// ---------------------------------------------------------------------------

pub(crate) fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub(crate) fn binomial_big(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub(crate) fn factorial_big(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deg2::build_deg2_universal;
    use crate::enumerate::enumerate_bounded_degree;
    use crate::graph::Graph;
    use crate::oracle::is_induced_embedding;

    #[test]
    fn k_collapses_the_product_for_small_degree() {
        assert_eq!(product_k(1), 1);
        assert_eq!(product_k(2), 1);
        assert_eq!(product_k(3), 2);
        assert_eq!(product_k(4), 2);
        assert_eq!(product_k(10), 5);
    }

    #[test]
    fn product_counts_small_cases() {
        assert_eq!(product_vertex_count(3, 2).unwrap(), BigUint::from(5u32));
        assert_eq!(product_vertex_count(3, 3).unwrap(), BigUint::from(30u32));
        assert_eq!(product_vertex_count(3, 4).unwrap(), BigUint::from(30u32));
    }

    #[test]
    fn degenerate_product_equals_the_degree2_host() {
        // k = 1: all sets empty, identifiers collapse to x
        let product = build_product_universal(3, 2).unwrap();
        assert_eq!(product, build_deg2_universal(3));
    }

    #[test]
    fn product_adjacency_rule_cases() {
        let p = |x, a: &[u32]| ProductVertex::new(x, a.to_vec());
        assert!(product_adjacent(&p(0, &[5]), &p(5, &[])));
        assert!(product_adjacent(&p(0, &[]), &p(1, &[])));
        assert!(!product_adjacent(&p(2, &[]), &p(4, &[])));
        assert!(!product_adjacent(&p(0, &[]), &p(0, &[])));
    }

    #[test]
    fn ranks_agree_with_enumeration_order() {
        for (n, d) in [(3, 3), (3, 4), (4, 5), (5, 3)] {
            let vertices = product_vertices(n, d).unwrap();
            for (i, v) in vertices.iter().enumerate() {
                assert_eq!(
                    product_vertex_rank(n, d, v).unwrap(),
                    i as u128,
                    "rank mismatch at n={n}, D={d}, vertex {v:?}"
                );
            }
        }
    }

    #[test]
    fn product_build_respects_cap() {
        assert!(matches!(
            build_product_universal_with_cap(3, 3, 10),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn count_stays_under_closed_form_bound() {
        for n in 2..=30 {
            for d in 1..=10.min(n) {
                assert!(
                    product_vertex_count(n, d).unwrap() <= product_size_bound(n, d).unwrap(),
                    "bound violated at n={n}, D={d}"
                );
            }
        }
    }

    #[test]
    fn embeds_triangle_with_empty_sets() {
        let lambda = embed_degd_product(&Graph::cycle(3), 2).unwrap();
        let mut xs: Vec<u32> = lambda.iter().map(|v| v.x).collect();
        xs.sort_unstable();
        assert_eq!(xs, vec![0, 1, 4]);
        assert!(lambda.iter().all(|v| v.a.is_empty()));
    }

    #[test]
    fn embeds_complete_graph_on_4() {
        let edges: Vec<(u32, u32)> = (0..4u32)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        let k4 = Graph::from_edges(4, &edges).unwrap();
        let lambda = embed_degd_product(&k4, 3).unwrap();
        assert!(lambda.iter().all(|v| v.a.len() <= 1));
        // embed_degd_product asserts the full pairwise rule internally
    }

    #[test]
    fn embeds_empty_pair_distinctly() {
        let lambda = embed_degd_product(&Graph::empty(2), 2).unwrap();
        assert_ne!(lambda[0], lambda[1]);
        assert!(!product_adjacent(&lambda[0], &lambda[1]));
    }

    #[test]
    fn embedding_rejects_high_degree() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(matches!(
            embed_degd_product(&star, 3),
            Err(Error::DegreeExceeded { .. })
        ));
    }

    #[test]
    fn identifier_embedding_lands_in_materialized_host() {
        for (n, d) in [(4, 3), (5, 4)] {
            let host = build_product_universal(n, d).unwrap();
            for g in enumerate_bounded_degree(n, d).unwrap().step_by(7) {
                let map = embed_degd(&g, d).unwrap();
                assert!(
                    is_induced_embedding(&g, &host, &map),
                    "identifier map failed for {g:?}"
                );
            }
        }
    }

    #[test]
    fn forced_identity_permutation_example() {
        let g = Graph::from_edges(5, &[(0, 1)]).unwrap();
        let (scheme, labels) = rand_encode_with_permutation(&g, 2, (0..5).collect()).unwrap();
        assert_eq!(scheme.n_padded, 5);
        assert_eq!(labels[0].diffs, vec![1]);
        assert!(labels[1].diffs.is_empty());
        assert!(rand_decode(&labels[0], &labels[1]).unwrap());
        assert!(!rand_decode(&labels[0], &labels[2]).unwrap());
        assert!(!rand_decode(&labels[3], &labels[3]).unwrap());
    }

    #[test]
    fn empty_graph_encodes_first_try() {
        let (scheme, labels) = rand_encode(&Graph::empty(4), 1, 7).unwrap();
        assert_eq!(scheme.n_padded, 5); // padded to odd
        assert!(labels.iter().all(|l| l.diffs.is_empty()));
    }

    #[test]
    fn odd_circle_assigns_each_edge_to_one_endpoint() {
        let g = Graph::cycle(5);
        let (_, labels) = rand_encode(&g, 2, 123).unwrap();
        let total: usize = labels.iter().map(|l| l.diffs.len()).sum();
        assert_eq!(total, 5);
    }

    #[test]
    fn round_trip_on_a_small_batch() {
        let graphs = [
            Graph::cycle(7),
            Graph::path(10),
            Graph::from_edges(9, &[(0, 3), (3, 7), (1, 2), (5, 6), (6, 8), (5, 8)]).unwrap(),
        ];
        for (i, g) in graphs.iter().enumerate() {
            let (_, labels) = rand_encode(g, 3, 42 + i as u64).unwrap();
            for u in 0..g.n() as u32 {
                for v in 0..g.n() as u32 {
                    if u == v {
                        continue;
                    }
                    assert_eq!(
                        rand_decode(&labels[u as usize], &labels[v as usize]).unwrap(),
                        g.has_edge(u, v),
                        "decode mismatch at ({u}, {v}) in graph {i}"
                    );
                }
            }
        }
    }

    #[test]
    fn encoding_is_deterministic_per_seed() {
        let g = Graph::cycle(9);
        let a = rand_encode(&g, 2, 99).unwrap();
        let b = rand_encode(&g, 2, 99).unwrap();
        assert_eq!(a, b);
        let c = rand_encode(&g, 2, 100).unwrap();
        assert!(a.1 != c.1 || a.0.pi != c.0.pi);
    }

    #[test]
    fn impossible_budget_exhausts_retries() {
        // one edge but a zero budget: every permutation is rejected
        let g = Graph::path(2);
        match rand_encode_with_params(&g, 1, 5, -10.0, 8) {
            Err(Error::RetryExhausted { attempts: 8, .. }) => {}
            other => panic!("expected RetryExhausted, got {other:?}"),
        }
    }

    #[test]
    fn mismatched_schemes_refuse_to_decode() {
        let (_, l5) = rand_encode(&Graph::empty(5), 1, 1).unwrap();
        let (_, l7) = rand_encode(&Graph::empty(7), 1, 1).unwrap();
        assert!(matches!(
            rand_decode(&l5[0], &l7[0]),
            Err(Error::SchemeMismatch { .. })
        ));
    }

    #[test]
    fn product_bits_layout_and_round_trip() {
        // n=3, D=2: single 3-bit field, no size field (k = 1)
        let v = ProductVertex::new(4, vec![]);
        let bits = product_label_bits(&v, 3, 2).unwrap();
        assert_eq!(bits, "100");
        assert_eq!(product_label_from_bits(&bits, 2).unwrap(), v);

        // n=3, D=3: k=2 → 3+1+3 bits
        let v2 = ProductVertex::new(3, vec![1]);
        let bits2 = product_label_bits(&v2, 3, 3).unwrap();
        assert_eq!(bits2.len(), 7);
        assert_eq!(product_label_from_bits(&bits2, 3).unwrap(), v2);

        // all vertices of a host round-trip distinctly
        let mut seen = std::collections::HashSet::new();
        for v in product_vertices(4, 4).unwrap() {
            let bits = product_label_bits(&v, 4, 4).unwrap();
            assert!(seen.insert(bits.clone()), "duplicate label");
            assert_eq!(product_label_from_bits(&bits, 4).unwrap(), v);
        }
    }

    #[test]
    fn rand_bits_round_trip_and_length() {
        let g = Graph::cycle(7);
        let (scheme, labels) = rand_encode(&g, 2, 5).unwrap();
        let w = bits_for(scheme.n_padded);
        for l in &labels {
            let bits = rand_label_bits(l);
            assert!(bits.len() <= (scheme.d_cap + 2) * w);
            assert_eq!(&rand_label_from_bits(&bits, scheme.n_padded).unwrap(), l);
        }
    }

    #[test]
    fn binomials_are_exact() {
        assert_eq!(binomial_u128(5, 2), 10);
        assert_eq!(binomial_u128(0, 0), 1);
        assert_eq!(binomial_u128(4, 7), 0);
        assert_eq!(binomial_big(60, 30), BigUint::parse_bytes(b"118264581564861424", 10).unwrap());
        assert_eq!(factorial_big(10), BigUint::from(3628800u64));
    }
}
