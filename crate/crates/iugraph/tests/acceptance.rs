//! Acceptance gate: one test per criterion. Each test prints a single
//! pass/fail line (written straight to stderr so it survives the harness's
//! output capture) with its key measurements, then asserts the criterion,
//! including its runtime budget.

use std::io::Write as _;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;

use iugraph::bounds::{count_bounded_degree_exact, matching_count_lower_bound};
use iugraph::degd::{product_size_bound, product_vertex_count, product_vertices};
use iugraph::labeling::SchemeName;
use iugraph::verify::{
    measure_cycle_overheads, negative_control_sweep, verify_euler_random, verify_exact_sizes,
    verify_negative_control, verify_prefix_monotone, verify_rand_round_trip,
    verify_subset_sum_random, verify_universality, Verdict, VerificationReport,
};

fn report(idx: usize, ok: bool, detail: &str, wall: Duration) {
    let line = format!(
        "criterion {idx} [{}] {detail} ({} ms)",
        if ok { "pass" } else { "FAIL" },
        wall.as_millis()
    );
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "{line}");
}

fn passed(r: &VerificationReport) -> bool {
    r.verdict == Verdict::Pass
}

#[test]
fn criterion_1_exact_sizes() {
    let t = Instant::now();
    let r = verify_exact_sizes(1000);
    let ok = passed(&r);
    report(
        1,
        ok,
        &format!(
            "exact host sizes for 1 ≤ n ≤ 1000: {} checks, {} failures",
            r.passes + r.failures,
            r.failures
        ),
        t.elapsed(),
    );
    assert!(ok, "{}", r.to_text());
    assert!(t.elapsed() < Duration::from_secs(5), "over the 5 s budget");
}

#[test]
fn criterion_2_exhaustive_degree_two() {
    let t = Instant::now();
    let deg2 = verify_universality(SchemeName::Deg2, 0, 12, None).unwrap();
    let paths = verify_universality(SchemeName::Paths, 0, 14, None).unwrap();
    let cases = deg2.passes + deg2.failures + paths.passes + paths.failures;
    let fails = deg2.failures + paths.failures;
    let ok = passed(&deg2) && passed(&paths);
    report(
        2,
        ok,
        &format!(
            "exhaustive universality, degree ≤ 2 (n ≤ 12) and acyclic (n ≤ 14): {cases} members, {fails} failures"
        ),
        t.elapsed(),
    );
    assert!(ok, "{}\n{}", deg2.to_text(), paths.to_text());
    assert!(t.elapsed() < Duration::from_secs(120), "over the 2 min budget");
}

#[test]
fn criterion_3_degree_d_exhaustive_and_counts() {
    let t = Instant::now();
    let mut cases = 0u64;
    let mut fails = 0u64;
    let mut texts = Vec::new();
    for d in [3usize, 4] {
        let r = verify_universality(SchemeName::DegDDet, 1, 6, Some(d)).unwrap();
        cases += r.passes + r.failures;
        fails += r.failures;
        texts.push(r.to_text());
    }

    // host vertex count agrees with full enumeration on a small grid
    let mut count_ok = true;
    for n in 1..=4usize {
        for d in 1..=5usize {
            let formula = product_vertex_count(n, d).unwrap();
            let listed = BigUint::from(product_vertices(n, d).unwrap().len());
            count_ok &= formula == listed;
        }
    }
    // and stays at or below the closed-form guarantee across the sweep
    for n in 2..=30usize {
        for d in 1..=10usize {
            let exact = product_vertex_count(n, d).unwrap();
            let bound = product_size_bound(n, d).unwrap();
            count_ok &= exact <= bound;
        }
    }

    let ok = fails == 0 && count_ok;
    report(
        3,
        ok,
        &format!(
            "degree-D exhaustive (n ≤ 6, D ∈ {{3,4}}): {cases} members, {fails} failures; count formula vs enumeration and closed form: {}",
            if count_ok { "agree" } else { "DISAGREE" }
        ),
        t.elapsed(),
    );
    assert!(ok, "{}", texts.join("\n"));
    assert!(t.elapsed() < Duration::from_secs(600), "over the 10 min budget");
}

#[test]
fn criterion_4_randomized_round_trip() {
    let t = Instant::now();
    let r = verify_rand_round_trip(&[51, 101, 501], &[4, 10, 20], 100, 0xACCE97).unwrap();
    let ok = passed(&r);
    report(
        4,
        ok,
        &format!(
            "randomized labels round-trip (n ∈ {{51,101,501}} × D ∈ {{4,10,20}} × 100 graphs): {} graphs, {} failures",
            r.passes + r.failures,
            r.failures
        ),
        t.elapsed(),
    );
    assert!(ok, "{}", r.to_text());
    assert!(t.elapsed() < Duration::from_secs(300), "over the 5 min budget");
}

#[test]
fn criterion_5_cycle_coverage_and_overheads() {
    let t = Instant::now();
    let aware = verify_universality(SchemeName::CyclesAware, 3, 256, None).unwrap();
    let oblivious = verify_universality(SchemeName::CyclesOblivious, 3, 256, None).unwrap();
    let o = measure_cycle_overheads(256).unwrap();
    let aware_tail = o.aware_constant_tail.unwrap();
    let oblivious_tail = o.oblivious_constant_tail.unwrap();
    let coverage_ok = passed(&aware) && passed(&oblivious);
    let aware_ok = aware_tail <= 4.0;
    // the host jumps to the next square past each canonical size, so the
    // √n multiple peaks near 4.7 on the tail and 7 overall; see notes
    let oblivious_ok = oblivious_tail <= 5.0 && o.oblivious_constant_all <= 7.0;
    let ok = coverage_ok && aware_ok && oblivious_ok;
    report(
        5,
        ok,
        &format!(
            "every cycle length ℓ ∈ [3,n] embeds for n ≤ 256 (both hosts); size-aware overhead beyond log2 n: C = {:.2} (n ≥ 64), {:.2} all; size-oblivious √n multiple: c = {:.2} (n ≥ 64), {:.2} all",
            aware_tail,
            o.aware_constant_all,
            oblivious_tail,
            o.oblivious_constant_all
        ),
        t.elapsed(),
    );
    assert!(ok, "{}\n{}\n{o:?}", aware.to_text(), oblivious.to_text());
    assert!(t.elapsed() < Duration::from_secs(120), "over the 2 min budget");
}

#[test]
fn criterion_6_prefix_monotonicity_and_negative_control() {
    let t = Instant::now();
    let deg2 = verify_prefix_monotone(SchemeName::Deg2, 1, 200).unwrap();
    let paths = verify_prefix_monotone(SchemeName::Paths, 1, 200).unwrap();
    let cyc = verify_prefix_monotone(SchemeName::CyclesOblivious, 3, 400).unwrap();
    let prefix_ok = passed(&deg2) && passed(&paths) && passed(&cyc);

    let mut control_ok = true;
    // every single-edge deletion must be caught (placement breakage or edge count)
    let deg2_sweep = negative_control_sweep(SchemeName::Deg2, 10, None).unwrap();
    let paths_sweep = negative_control_sweep(SchemeName::Paths, 10, None).unwrap();
    control_ok &= passed(&deg2_sweep) && passed(&paths_sweep);
    for seed in [1u64, 2, 3] {
        control_ok &= passed(&verify_negative_control(SchemeName::Deg2, 10, seed, None).unwrap());
        control_ok &= passed(&verify_negative_control(SchemeName::Paths, 10, seed, None).unwrap());
    }

    let ok = prefix_ok && control_ok;
    report(
        6,
        ok,
        &format!(
            "identity-prefix containment (deg2 ≤ 200, paths ≤ 200, cycles-oblivious ≤ 400): {}; every host-edge deletion at n=10 caught: {} ({}; {})",
            if prefix_ok { "holds" } else { "BROKEN" },
            if control_ok { "yes" } else { "NO" },
            deg2_sweep.notes.first().map(String::as_str).unwrap_or(""),
            paths_sweep.notes.first().map(String::as_str).unwrap_or("")
        ),
        t.elapsed(),
    );
    assert!(
        ok,
        "{}\n{}\n{}\ncontrol_ok={control_ok}",
        deg2.to_text(),
        paths.to_text(),
        cyc.to_text()
    );
}

#[test]
fn criterion_7_counting_consistency() {
    let t = Instant::now();
    let matchings = count_bounded_degree_exact(4, 1).unwrap();
    let triangle_subsets = count_bounded_degree_exact(3, 2).unwrap();
    let pins_ok = matchings == BigUint::from(10u32) && triangle_subsets == BigUint::from(8u32);

    let mut bound_ok = true;
    for n in [2usize, 4, 6] {
        for d in 1..n {
            let exact =
                BigRational::from_integer(count_bounded_degree_exact(n, d).unwrap().into());
            let lower = matching_count_lower_bound(n, d).unwrap();
            bound_ok &= lower <= exact;
        }
    }

    let ok = pins_ok && bound_ok;
    report(
        7,
        ok,
        &format!(
            "exact counts (4,1) → {matchings}, (3,2) → {triangle_subsets}; matching-based lower bound ≤ exact for n ∈ {{2,4,6}}, D < n: {}",
            if bound_ok { "holds" } else { "VIOLATED" }
        ),
        t.elapsed(),
    );
    assert!(ok);
}

#[test]
fn criterion_8_euler_split_properties() {
    let t = Instant::now();
    let r = verify_euler_random(500, 50, 5, 0xE0E0).unwrap();
    let ok = passed(&r);
    report(
        8,
        ok,
        &format!(
            "edge split and orientation on 500 random graphs (n ≤ 50, Δ ≤ 2k, k ≤ 5): {} failures",
            r.failures
        ),
        t.elapsed(),
    );
    assert!(ok, "{}", r.to_text());
    assert!(t.elapsed() < Duration::from_secs(30), "over the 30 s budget");
}

#[test]
fn criterion_9_subset_sum_lemma() {
    let t = Instant::now();
    let r = verify_subset_sum_random(10_000, 12, 0x51D).unwrap();
    let ok = passed(&r);
    report(
        9,
        ok,
        &format!(
            "greedy subset-sum hits every representable target on 10000 random sequences: {} failures",
            r.failures
        ),
        t.elapsed(),
    );
    assert!(ok, "{}", r.to_text());
}
