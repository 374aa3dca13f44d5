//! Adjacency labeling built on the universal hosts: a vertex's label is the
//! bit encoding of its host image, and adjacency of two vertices is decided
//! from their labels alone (plus, for the size-aware schemes, the family
//! size n as explicit context).
//!
//! Schemes named `paths`, `deg2`, `degd-det`, and `cycles-oblivious` decode
//! without n: their host adjacency is intrinsic to the identifiers (the
//! hosts for growing n are identifier-prefixes of one another, or the rule
//! is arithmetic in the ids/fields). `degd-rand` and `cycles-aware` decode
//! relative to the size-n instance and require n.

use crate::cycles::{AwareCycleUniversal, ObliviousCycleUniversal};
use crate::deg2::{
    build_deg2_universal, build_path_universal, deg2_universal_vertex_count, embed_acyclic,
    embed_deg2, path_universal_vertex_count, u_adjacent, up_adjacent,
};
use crate::degd::{
    bits_for, build_product_universal, embed_degd_product, product_adjacent, product_k,
    product_label_bits, product_label_from_bits, rand_decode, rand_diff_budget, rand_encode,
    rand_label_bits, rand_label_from_bits, DEFAULT_BUDGET_CONSTANT,
};
use crate::error::{Error, Result};
use crate::graph::{decompose_components, ComponentKind, Graph};

/// The six shipped schemes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchemeName {
    Paths,
    Deg2,
    DegDDet,
    DegDRand,
    CyclesAware,
    CyclesOblivious,
}

impl SchemeName {
    pub const ALL: [SchemeName; 6] = [
        SchemeName::Paths,
        SchemeName::Deg2,
        SchemeName::DegDDet,
        SchemeName::DegDRand,
        SchemeName::CyclesAware,
        SchemeName::CyclesOblivious,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SchemeName::Paths => "paths",
            SchemeName::Deg2 => "deg2",
            SchemeName::DegDDet => "degd-det",
            SchemeName::DegDRand => "degd-rand",
            SchemeName::CyclesAware => "cycles-aware",
            SchemeName::CyclesOblivious => "cycles-oblivious",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "paths" => Ok(SchemeName::Paths),
            "deg2" => Ok(SchemeName::Deg2),
            "degd-det" => Ok(SchemeName::DegDDet),
            "degd-rand" => Ok(SchemeName::DegDRand),
            "cycles-aware" => Ok(SchemeName::CyclesAware),
            "cycles-oblivious" => Ok(SchemeName::CyclesOblivious),
            other => Err(Error::parse(1, format!("unknown scheme {other:?}"))),
        }
    }

    /// Whether decode consults the family size n.
    pub fn size_aware(self) -> bool {
        matches!(self, SchemeName::DegDRand | SchemeName::CyclesAware)
    }

    /// Whether the scheme takes a degree bound D.
    pub fn takes_degree(self) -> bool {
        matches!(self, SchemeName::DegDDet | SchemeName::DegDRand)
    }
}

/// A scheme instance: the family parameters labels were issued under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scheme {
    pub name: SchemeName,
    pub n: usize,
    pub d: Option<usize>,
    pub seed: Option<u64>,
}

impl Scheme {
    pub fn new(name: SchemeName, n: usize) -> Self {
        Scheme {
            name,
            n,
            d: None,
            seed: None,
        }
    }

    pub fn with_degree(name: SchemeName, n: usize, d: usize) -> Self {
        Scheme {
            name,
            n,
            d: Some(d),
            seed: None,
        }
    }

    pub fn with_seed(name: SchemeName, n: usize, d: usize, seed: u64) -> Self {
        Scheme {
            name,
            n,
            d: Some(d),
            seed: Some(seed),
        }
    }

    fn degree(&self) -> Result<usize> {
        self.d.ok_or_else(|| Error::MissingContext {
            scheme: self.name.as_str().to_string(),
        })
    }
}

/// Per-vertex labels for one encoded graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub scheme: Scheme,
    pub labels: Vec<String>,
}

/// Fixed-width big-endian encoding of a host identifier.
fn id_bits(id: u64, width: usize) -> String {
    (0..width)
        .rev()
        .map(|i| if id >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Parses a bit string as a big-endian integer (width-agnostic).
fn bits_to_id(bits: &str) -> Result<u64> {
    if bits.is_empty() || bits.len() > 63 || bits.bytes().any(|b| b != b'0' && b != b'1') {
        return Err(Error::parse(1, format!("malformed label {bits:?}")));
    }
    Ok(bits.bytes().fold(0u64, |acc, b| acc * 2 + (b - b'0') as u64))
}

fn family_mismatch(scheme: SchemeName, err: Error) -> Error {
    Error::FamilyMismatch {
        msg: format!("graph is outside the {} family: {err}", scheme.as_str()),
    }
}

/// Checks the guest is a single cycle on all its vertices, returning the
/// vertices in cycle order.
fn single_cycle_order(g: &Graph) -> Result<Vec<u32>> {
    let comps = decompose_components(g)?;
    match comps.as_slice() {
        [c] if c.kind == ComponentKind::Cycle && c.vertices.len() == g.n() => {
            Ok(c.vertices.clone())
        }
        _ => Err(Error::FamilyMismatch {
            msg: "graph is not a single cycle on all vertices".into(),
        }),
    }
}

/// Maximum label length in bits issued by a scheme instance.
pub fn scheme_label_bits(scheme: &Scheme) -> Result<usize> {
    let n = scheme.n;
    Ok(match scheme.name {
        SchemeName::Paths => bits_for(path_universal_vertex_count(n)).max(1),
        SchemeName::Deg2 => bits_for(deg2_universal_vertex_count(n)).max(1),
        SchemeName::DegDDet => {
            let d = scheme.degree()?;
            let k = product_k(d);
            k * bits_for(2 * n - 1) + bits_for(k)
        }
        SchemeName::DegDRand => {
            let d = scheme.degree()?;
            let n_padded = if n % 2 == 1 { n } else { n + 1 };
            let w = bits_for(n_padded);
            (2 + rand_diff_budget(n_padded, d, DEFAULT_BUDGET_CONSTANT)) * w
        }
        SchemeName::CyclesAware => bits_for(AwareCycleUniversal::new(n)?.graph().n()).max(1),
        SchemeName::CyclesOblivious => {
            bits_for(ObliviousCycleUniversal::new(n)?.graph().n()).max(1)
        }
    })
}

/// Materializes the host graph a scheme's labels point into. The randomized
/// scheme labels graphs directly and is rejected here.
pub fn host_graph(name: SchemeName, n: usize, d: Option<usize>) -> Result<Graph> {
    match name {
        SchemeName::Paths => Ok(build_path_universal(n)),
        SchemeName::Deg2 => Ok(build_deg2_universal(n)),
        SchemeName::DegDDet => {
            let d = d.ok_or_else(|| Error::precondition("the product host needs a degree bound D"))?;
            build_product_universal(n, d)
        }
        SchemeName::CyclesAware => Ok(AwareCycleUniversal::new(n)?.graph().clone()),
        SchemeName::CyclesOblivious => Ok(ObliviousCycleUniversal::new(n)?.graph().clone()),
        SchemeName::DegDRand => Err(Error::precondition(
            "the randomized scheme labels graphs directly and has no host graph; see `label`",
        )),
    }
}

/// Encodes a family member: each vertex's label is the bit encoding of its
/// image under the scheme's embedder. Labels are pairwise distinct because
/// embeddings are injective.
pub fn encode(scheme: &Scheme, g: &Graph) -> Result<LabeledGraph> {
    if g.n() != scheme.n && !matches!(scheme.name, SchemeName::CyclesAware | SchemeName::CyclesOblivious)
    {
        return Err(Error::FamilyMismatch {
            msg: format!(
                "graph has {} vertices but the scheme instance is for n = {}",
                g.n(),
                scheme.n
            ),
        });
    }
    let labels = match scheme.name {
        SchemeName::Paths => {
            let map = embed_acyclic(g).map_err(|e| family_mismatch(scheme.name, e))?;
            let width = scheme_label_bits(scheme)?;
            map.images.iter().map(|&id| id_bits(id, width)).collect()
        }
        SchemeName::Deg2 => {
            let map = embed_deg2(g).map_err(|e| family_mismatch(scheme.name, e))?;
            let width = scheme_label_bits(scheme)?;
            map.images.iter().map(|&id| id_bits(id, width)).collect()
        }
        SchemeName::DegDDet => {
            let d = scheme.degree()?;
            let lambda =
                embed_degd_product(g, d).map_err(|e| family_mismatch(scheme.name, e))?;
            lambda
                .iter()
                .map(|v| product_label_bits(v, scheme.n, d))
                .collect::<Result<Vec<_>>>()?
        }
        SchemeName::DegDRand => {
            let d = scheme.degree()?;
            let seed = scheme.seed.ok_or_else(|| Error::MissingContext {
                scheme: scheme.name.as_str().to_string(),
            })?;
            let (_, labels) =
                rand_encode(g, d, seed).map_err(|e| family_mismatch(scheme.name, e))?;
            labels.iter().map(rand_label_bits).collect()
        }
        SchemeName::CyclesAware | SchemeName::CyclesOblivious => {
            if g.n() > scheme.n {
                return Err(Error::FamilyMismatch {
                    msg: format!(
                        "cycle has length {} but the family caps length at {}",
                        g.n(),
                        scheme.n
                    ),
                });
            }
            let order = single_cycle_order(g)?;
            let route = if scheme.name == SchemeName::CyclesAware {
                AwareCycleUniversal::new(scheme.n)?.embed(g.n())?
            } else {
                ObliviousCycleUniversal::new(scheme.n)?.embed(g.n())?
            };
            let width = scheme_label_bits(scheme)?;
            let mut labels = vec![String::new(); g.n()];
            for (guest, host) in order.iter().zip(route.iter()) {
                labels[*guest as usize] = id_bits(*host as u64, width);
            }
            labels
        }
    };
    debug_assert!({
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.windows(2).all(|w| w[0] != w[1])
    });
    Ok(LabeledGraph {
        scheme: scheme.clone(),
        labels,
    })
}

/// Smallest canonical size whose size-oblivious host contains `id`, and the
/// host built at that size (decode helper; the verdict is the same in every
/// larger host by the prefix property).
fn oblivious_host_containing(id: u64) -> Result<ObliviousCycleUniversal> {
    if id > u32::MAX as u64 {
        return Err(Error::parse(1, format!("label value {id} out of range")));
    }
    let mut n = 3;
    loop {
        let host = ObliviousCycleUniversal::new(n)?;
        if (host.graph().n() as u64) > id {
            return Ok(host);
        }
        n = host.m + 1; // next canonical size
    }
}

/// Decides adjacency from two labels. `n` is required (and read) only by
/// the size-aware schemes `degd-rand` and `cycles-aware`; `d` is required
/// by the two degree-parameterized schemes.
pub fn decode(
    name: SchemeName,
    l1: &str,
    l2: &str,
    n: Option<usize>,
    d: Option<usize>,
) -> Result<bool> {
    let need_n = || {
        n.ok_or_else(|| Error::MissingContext {
            scheme: name.as_str().to_string(),
        })
    };
    match name {
        SchemeName::Paths => Ok(up_adjacent(bits_to_id(l1)?, bits_to_id(l2)?)),
        SchemeName::Deg2 => Ok(u_adjacent(bits_to_id(l1)?, bits_to_id(l2)?)),
        SchemeName::DegDDet => {
            let d = d.ok_or_else(|| Error::MissingContext {
                scheme: name.as_str().to_string(),
            })?;
            let a = product_label_from_bits(l1, d)?;
            let b = product_label_from_bits(l2, d)?;
            Ok(product_adjacent(&a, &b))
        }
        SchemeName::DegDRand => {
            let n = need_n()?;
            let n_padded = if n % 2 == 1 { n } else { n + 1 };
            let a = rand_label_from_bits(l1, n_padded)?;
            let b = rand_label_from_bits(l2, n_padded)?;
            rand_decode(&a, &b)
        }
        SchemeName::CyclesAware => {
            let host = AwareCycleUniversal::new(need_n()?)?;
            let (a, b) = (bits_to_id(l1)?, bits_to_id(l2)?);
            let count = host.graph().n() as u64;
            if a >= count || b >= count {
                return Err(Error::parse(1, "label value outside the host"));
            }
            Ok(host.graph().has_edge(a as u32, b as u32))
        }
        SchemeName::CyclesOblivious => {
            let (a, b) = (bits_to_id(l1)?, bits_to_id(l2)?);
            let host = oblivious_host_containing(a.max(b))?;
            Ok(host.graph().has_edge(a as u32, b as u32))
        }
    }
}

/// Decides adjacency for two labels of one [`LabeledGraph`].
pub fn decode_pair(lg: &LabeledGraph, u: usize, v: usize) -> Result<bool> {
    decode(
        lg.scheme.name,
        &lg.labels[u],
        &lg.labels[v],
        Some(lg.scheme.n),
        lg.scheme.d,
    )
}

// ---------------------------------------------------------------------------
// Label file I/O
// ---------------------------------------------------------------------------

/// Serializes labels: a header `# scheme=<name> n=<n> [D=<d>] [seed=<seed>]`
/// followed by one `vertex_id<TAB>bitstring` line per vertex.
pub fn write_label_file(lg: &LabeledGraph) -> String {
    let mut out = format!("# scheme={} n={}", lg.scheme.name.as_str(), lg.scheme.n);
    if let Some(d) = lg.scheme.d {
        out.push_str(&format!(" D={d}"));
    }
    if let Some(seed) = lg.scheme.seed {
        out.push_str(&format!(" seed={seed}"));
    }
    out.push('\n');
    for (v, label) in lg.labels.iter().enumerate() {
        out.push_str(&format!("{v}\t{label}\n"));
    }
    out
}

/// Parses the label file format produced by [`write_label_file`].
pub fn parse_label_file(text: &str) -> Result<LabeledGraph> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty label file"))?;
    let header = header
        .strip_prefix('#')
        .ok_or_else(|| Error::parse(1, "label file must start with a '#' header"))?;
    let mut name = None;
    let mut n = None;
    let mut d = None;
    let mut seed = None;
    for field in header.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| Error::parse(1, format!("malformed header field {field:?}")))?;
        match key {
            "scheme" => name = Some(SchemeName::parse(value)?),
            "n" => {
                n = Some(value.parse().map_err(|_| {
                    Error::parse(1, format!("bad n value {value:?}"))
                })?)
            }
            "D" => {
                d = Some(value.parse().map_err(|_| {
                    Error::parse(1, format!("bad D value {value:?}"))
                })?)
            }
            "seed" => {
                seed = Some(value.parse().map_err(|_| {
                    Error::parse(1, format!("bad seed value {value:?}"))
                })?)
            }
            other => return Err(Error::parse(1, format!("unknown header key {other:?}"))),
        }
    }
    let scheme = Scheme {
        name: name.ok_or_else(|| Error::parse(1, "header missing scheme="))?,
        n: n.ok_or_else(|| Error::parse(1, "header missing n="))?,
        d,
        seed,
    };
    let mut labels: Vec<(usize, String)> = Vec::new();
    for (idx, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let (v, bits) = line
            .split_once('\t')
            .ok_or_else(|| Error::parse(lineno, "expected vertex_id<TAB>bitstring"))?;
        let v: usize = v
            .parse()
            .map_err(|_| Error::parse(lineno, format!("bad vertex id {v:?}")))?;
        if bits.is_empty() || bits.bytes().any(|b| b != b'0' && b != b'1') {
            return Err(Error::parse(lineno, format!("malformed bitstring {bits:?}")));
        }
        labels.push((v, bits.to_string()));
    }
    labels.sort_by_key(|&(v, _)| v);
    for (expect, &(v, _)) in labels.iter().enumerate() {
        if v != expect {
            return Err(Error::parse(
                1,
                format!("vertex ids must cover 0..count; missing or duplicate id {expect}"),
            ));
        }
    }
    Ok(LabeledGraph {
        scheme,
        labels: labels.into_iter().map(|(_, bits)| bits).collect(),
    })
}

// ---------------------------------------------------------------------------
// Obliviousness verification
// ---------------------------------------------------------------------------

/// Outcome of the identity-prefix containment check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObliviousnessOutcome {
    /// Identity on the smaller host's ids induces it inside every larger one.
    Pass,
    /// The scheme is not prefix-structured (size-aware decoder, or host ids
    /// reshuffle with n); nothing to check.
    NotApplicable(&'static str),
    /// First consecutive pair of sizes whose hosts disagree.
    Fail { n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObliviousnessReport {
    pub scheme: SchemeName,
    pub lo: usize,
    pub hi: usize,
    pub outcome: ObliviousnessOutcome,
}

/// Verifies that host(n) is exactly the induced subgraph of host(n+1) on
/// the first |V[host(n)]| identifiers, for every n in lo..hi. Reported as
/// not applicable for the size-aware schemes and for `degd-det` (its host
/// ids are combinatorial ranks that reshuffle as n grows, even though its
/// decoder never reads n).
pub fn check_obliviousness(name: SchemeName, lo: usize, hi: usize) -> Result<ObliviousnessReport> {
    let build: fn(usize) -> Result<Graph> = match name {
        SchemeName::Paths => |n| Ok(build_path_universal(n)),
        SchemeName::Deg2 => |n| Ok(build_deg2_universal(n)),
        SchemeName::CyclesOblivious => crate::cycles::build_cycle_oblivious,
        SchemeName::CyclesAware => {
            return Ok(ObliviousnessReport {
                scheme: name,
                lo,
                hi,
                outcome: ObliviousnessOutcome::NotApplicable(
                    "decoder is size-aware; hosts are built per n",
                ),
            })
        }
        SchemeName::DegDRand => {
            return Ok(ObliviousnessReport {
                scheme: name,
                lo,
                hi,
                outcome: ObliviousnessOutcome::NotApplicable(
                    "decoder is size-aware; labels are relative to the n-circle",
                ),
            })
        }
        SchemeName::DegDDet => {
            return Ok(ObliviousnessReport {
                scheme: name,
                lo,
                hi,
                outcome: ObliviousnessOutcome::NotApplicable(
                    "host identifiers are size-parameterized ranks",
                ),
            })
        }
    };
    let mut prev = build(lo)?;
    for n in lo + 1..=hi {
        let cur = build(n)?;
        let pn = prev.n();
        let mut induced = Graph::empty(pn);
        for (u, v) in cur.edges() {
            if (u as usize) < pn && (v as usize) < pn {
                induced.insert_edge(u, v);
            }
        }
        if induced != prev {
            return Ok(ObliviousnessReport {
                scheme: name,
                lo,
                hi,
                outcome: ObliviousnessOutcome::Fail { n: n - 1 },
            });
        }
        prev = cur;
    }
    Ok(ObliviousnessReport {
        scheme: name,
        lo,
        hi,
        outcome: ObliviousnessOutcome::Pass,
    })
}
