//! Numeric evaluators for the size bounds on degree-D universal hosts:
//! exact construction counts, closed-form upper bounds, and the three
//! counting lower bounds, all in exact big-integer/rational arithmetic with
//! log2 views. Asymptotic constants hidden in O(·)/Ω(·) terms are threaded
//! explicitly (default 1) so every reported number states its assumptions.

use crate::degd::{binomial_big, factorial_big, product_size_bound, product_vertex_count};
use crate::enumerate::count_bounded_degree;
use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Values standing in for the constants inside O(·)/Ω(·) terms.
#[derive(Clone, Debug, PartialEq)]
pub struct OConstants {
    /// Multiplier on +√(D·log2 n)·log2(n/D) in the randomized upper bound.
    pub rand_upper: f64,
    /// Multiplier on −√(D·log2 n)·log2(n/D) in the randomized lower bound.
    pub rand_lower: f64,
    /// Multiplier on −n·√(D·log2 n)·log2(n/D) in the graph-count bound.
    pub count_lower: f64,
    /// Multiplier on the Ω(·) of the simple counting lower bound.
    pub simple_lower: f64,
}

impl Default for OConstants {
    fn default() -> Self {
        OConstants {
            rand_upper: 1.0,
            rand_lower: 1.0,
            count_lower: 1.0,
            simple_lower: 1.0,
        }
    }
}

impl OConstants {
    /// Names accepted by [`OConstants::set`] (CLI `--o-constant NAME=VALUE`).
    pub const NAMES: [&'static str; 4] =
        ["rand-upper", "rand-lower", "count-lower", "simple-lower"];

    pub fn set(&mut self, name: &str, value: f64) -> Result<()> {
        let slot = match name {
            "rand-upper" => &mut self.rand_upper,
            "rand-lower" => &mut self.rand_lower,
            "count-lower" => &mut self.count_lower,
            "simple-lower" => &mut self.simple_lower,
            _ => {
                return Err(Error::precondition(format!(
                    "unknown constant {name:?}; expected one of {:?}",
                    Self::NAMES
                )))
            }
        };
        *slot = value;
        Ok(())
    }
}

/// What a table entry bounds or measures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    /// Lower bound on host size.
    Lower,
    /// Upper bound on host size.
    Upper,
    /// Exact size of a shipped construction.
    Construction,
    /// Lower bound on the number of labeled graphs in the family.
    Count,
}

impl BoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::Lower => "lower",
            BoundKind::Upper => "upper",
            BoundKind::Construction => "construction",
            BoundKind::Count => "count",
        }
    }
}

/// Closed-form exact value attached to an entry, when one exists.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactValue {
    Integer(BigUint),
    Rational(BigRational),
}

impl std::fmt::Display for ExactValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExactValue::Integer(v) => write!(f, "{v}"),
            ExactValue::Rational(v) => write!(f, "{v}"),
        }
    }
}

/// One named row of a bounds table.
#[derive(Clone, Debug)]
pub struct BoundEntry {
    pub name: &'static str,
    pub kind: BoundKind,
    pub log2_value: f64,
    pub exact: Option<ExactValue>,
    /// True when the row carries no information here: a non-positive lower
    /// bound, or a formula evaluated outside its stated validity (n < 2D).
    pub vacuous: bool,
}

/// The assembled table for one (n, D) cell.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub n: usize,
    pub d: usize,
    pub constants: OConstants,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    /// CSV rows `n,D,name,kind,log2_value,exact_value` (exact empty when not
    /// closed-form; kind suffixed `-vacuous` for rows flagged vacuous).
    pub fn to_csv_rows(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let kind = if e.vacuous {
                format!("{}-vacuous", e.kind.as_str())
            } else {
                e.kind.as_str().to_string()
            };
            let exact = e.exact.as_ref().map(|v| v.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{:.6},{}\n",
                self.n, self.d, e.name, kind, e.log2_value, exact
            ));
        }
        out
    }

    pub const CSV_HEADER: &'static str = "n,D,name,kind,log2_value,exact_value";

    /// Checks that no informative lower bound exceeds any exact construction
    /// size (tolerating floating slack in the log2 view).
    pub fn validate(&self) -> Result<()> {
        let min_construction = self
            .entries
            .iter()
            .filter(|e| e.kind == BoundKind::Construction)
            .map(|e| e.log2_value)
            .fold(f64::INFINITY, f64::min);
        for e in &self.entries {
            if e.kind == BoundKind::Lower && !e.vacuous && e.log2_value > min_construction + 1e-9 {
                return Err(Error::precondition(format!(
                    "lower bound {} (log2 {:.4}) exceeds a construction size (log2 {:.4}) \
                     at n={}, D={}",
                    e.name, e.log2_value, min_construction, self.n, self.d
                )));
            }
        }
        Ok(())
    }
}

/// log2 of a nonzero big integer, exact to within one ulp of the 53-bit
/// mantissa (top bits are used directly; the rest only shift the exponent).
pub fn log2_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 53 {
        return x.to_f64().expect("fits f64").log2();
    }
    let shift = bits - 53;
    let mantissa = (x >> shift).to_f64().expect("53 bits fit f64");
    mantissa.log2() + shift as f64
}

/// log2 of a positive big rational.
pub fn log2_bigrational(x: &BigRational) -> f64 {
    debug_assert!(x.is_positive());
    log2_biguint(x.numer().magnitude()) - log2_biguint(x.denom().magnitude())
}

/// Exact number of labeled graphs on [n] with maximum degree ≤ D, by
/// exhaustive enumeration (guarded: the count explodes past n = 7).
pub fn count_bounded_degree_exact(n: usize, d: usize) -> Result<BigUint> {
    Ok(BigUint::from(count_bounded_degree(n, d)?))
}

/// The perfect-matching counting bound: there are at least
/// (⌊n/2⌋!)^D / D^(D·⌊n/2⌋) labeled graphs on [n] with max degree ≤ D.
/// Exact rational value.
pub fn matching_count_lower_bound(n: usize, d: usize) -> Result<BigRational> {
    if d == 0 {
        return Err(Error::precondition("degree bound D must be ≥ 1"));
    }
    let half = n / 2;
    let numer = factorial_big(half).pow(d as u32);
    let denom = BigUint::from(d).pow((d * half) as u32);
    Ok(BigRational::new(
        BigInt::from(numer),
        BigInt::from(denom),
    ))
}

/// The simple counting lower bound on host size:
/// Ω((n/(2eD))^(D/2)), reported as (D/2)·log2(n/(2eD)) + log2(c).
/// The companion flag is true when the value is non-positive (the bound
/// says nothing: every host has ≥ 1 vertex).
pub fn gv_lower_simple(n: usize, d: usize) -> (f64, bool) {
    gv_lower_simple_with_constant(n, d, 1.0)
}

pub fn gv_lower_simple_with_constant(n: usize, d: usize, c: f64) -> (f64, bool) {
    let ratio = n as f64 / (2.0 * std::f64::consts::E * d as f64);
    let value = (d as f64 / 2.0) * ratio.log2() + c.log2();
    (value, value <= 0.0)
}

/// The deterministic host bound: (closed-form bound, exact construction
/// size), i.e. 2^(k+1)·n^k/(k−1)! and (2n−1)·Σ_{i<k} C(2n−1, i).
pub fn gv_upper_det(n: usize, d: usize) -> Result<(BigUint, BigUint)> {
    Ok((product_size_bound(n, d)?, product_vertex_count(n, d)?))
}

/// √(D·log2 n)·log2(n/D): the exponent shape shared by the randomized
/// upper/lower rows (the graph-count row scales it by n).
fn rand_exponent(n: usize, d: usize) -> f64 {
    let nf = n as f64;
    let df = d as f64;
    (df * nf.log2()).sqrt() * (nf / df).log2()
}

/// Assembles every in-scope bound row for one (n, D) cell.
pub fn gv_bounds_table(n: usize, d: usize, constants: &OConstants) -> Result<BoundReport> {
    if n == 0 || d == 0 {
        return Err(Error::precondition(format!(
            "bounds table needs n ≥ 1 and D ≥ 1, got n = {n}, D = {d}"
        )));
    }
    let mut entries = Vec::new();

    // exact construction sizes
    let product = product_vertex_count(n, d)?;
    entries.push(BoundEntry {
        name: "product-host",
        kind: BoundKind::Construction,
        log2_value: log2_biguint(&product),
        exact: Some(ExactValue::Integer(product)),
        vacuous: false,
    });
    if d <= 2 {
        let deg2 = BigUint::from((2 * n).saturating_sub(1).max(1));
        entries.push(BoundEntry {
            name: "degree2-host",
            kind: BoundKind::Construction,
            log2_value: log2_biguint(&deg2),
            exact: Some(ExactValue::Integer(deg2)),
            vacuous: false,
        });
    }

    // closed-form deterministic upper bound
    let det = product_size_bound(n, d)?;
    entries.push(BoundEntry {
        name: "det-closed-form",
        kind: BoundKind::Upper,
        log2_value: log2_biguint(&det),
        exact: Some(ExactValue::Integer(det)),
        vacuous: false,
    });

    // randomized binomial upper/lower bounds (stated for n ≥ 2D)
    let outside_validity = n < 2 * d;
    let binom = binomial_big(n / 2, d / 2);
    let binom_log2 = log2_biguint(&binom);
    let exponent = rand_exponent(n, d);
    entries.push(BoundEntry {
        name: "rand-binomial-upper",
        kind: BoundKind::Upper,
        log2_value: binom_log2 + constants.rand_upper * exponent,
        exact: None,
        vacuous: outside_validity,
    });
    let rand_lower = binom_log2 - constants.rand_lower * exponent;
    entries.push(BoundEntry {
        name: "rand-binomial-lower",
        kind: BoundKind::Lower,
        log2_value: rand_lower,
        exact: None,
        vacuous: outside_validity || rand_lower <= 0.0,
    });

    // simple counting lower bound
    let (simple, simple_vacuous) =
        gv_lower_simple_with_constant(n, d, constants.simple_lower);
    entries.push(BoundEntry {
        name: "simple-lower",
        kind: BoundKind::Lower,
        log2_value: simple,
        exact: None,
        vacuous: simple_vacuous,
    });

    // matching-based graph count and the host bound it implies
    let matching = matching_count_lower_bound(n, d)?;
    let matching_log2 = log2_bigrational(&matching);
    entries.push(BoundEntry {
        name: "matching-count",
        kind: BoundKind::Count,
        log2_value: matching_log2,
        exact: Some(ExactValue::Rational(matching)),
        vacuous: false,
    });
    let matching_gv = matching_log2 / n as f64; // |V|^n ≥ count
    entries.push(BoundEntry {
        name: "matching-gv-lower",
        kind: BoundKind::Lower,
        log2_value: matching_gv,
        exact: None,
        vacuous: matching_gv <= 0.0,
    });

    // graph-count bound via the binomial over edge slots
    let edge_slots = n * (n - 1) / 2;
    let count_binom = binomial_big(edge_slots, n * d / 2);
    let count_log2 =
        log2_biguint(&count_binom) - constants.count_lower * n as f64 * exponent;
    entries.push(BoundEntry {
        name: "graphcount-binomial",
        kind: BoundKind::Count,
        log2_value: count_log2,
        exact: None,
        vacuous: outside_validity,
    });

    Ok(BoundReport {
        n,
        d,
        constants: constants.clone(),
        entries,
    })
}
