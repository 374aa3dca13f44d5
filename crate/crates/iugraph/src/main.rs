//! Command-line front end: materialize hosts, embed guests, issue and decode
//! adjacency labels, run verification campaigns, and print bound tables.
//!
//! Exit codes: 0 on success, 1 when a verification or embedding check fails,
//! 2 on usage or parse errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use iugraph::bounds::{gv_bounds_table, BoundReport, OConstants};
use iugraph::cycles::{AwareCycleUniversal, ObliviousCycleUniversal};
use iugraph::deg2::{embed_acyclic, embed_deg2};
use iugraph::degd::embed_degd;
use iugraph::error::{Error, Result};
use iugraph::graph::{parse_graph, serialize_graph, to_dot, Graph};
use iugraph::labeling::{decode, encode, host_graph, write_label_file, Scheme, SchemeName};
use iugraph::verify::{run_suite, Verdict, VerificationReport};

#[derive(Parser)]
#[command(
    name = "iugraph",
    about = "Induced-universal hosts for bounded-degree graph families: builders, embedders, labelers, verifiers, and bound tables",
    version
)]
struct Cli {
    /// Worker threads for parallel campaigns (0 = one per core)
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Materialize a universal host graph
    Build {
        /// One of: paths, deg2, degd-det, cycles-aware, cycles-oblivious
        #[arg(long)]
        construction: String,
        /// Family size the host serves
        #[arg(long)]
        n: usize,
        /// Degree bound (degd-det only)
        #[arg(long)]
        d: Option<usize>,
        /// Output format: edgelist, dot, or csv
        #[arg(long, default_value = "edgelist")]
        format: String,
    },
    /// Embed a guest graph (or a bare cycle) into its host; prints
    /// tab-separated "guest_vertex<TAB>host_vertex" lines
    Embed {
        #[arg(long)]
        construction: String,
        /// Guest graph file ("n m" header, then "u v" lines)
        #[arg(long)]
        input: Option<PathBuf>,
        /// Family size (cycles default to the guest length)
        #[arg(long)]
        n: Option<usize>,
        /// Degree bound (degd-det only)
        #[arg(long)]
        d: Option<usize>,
        /// Cycle length to embed without an input file (cycle hosts only)
        #[arg(long)]
        length: Option<usize>,
    },
    /// Issue per-vertex adjacency labels for a guest graph
    Label {
        #[arg(long)]
        construction: String,
        #[arg(long)]
        input: PathBuf,
        /// Family size (defaults to the guest's vertex count)
        #[arg(long)]
        n: Option<usize>,
        /// Degree bound (degd-det and degd-rand)
        #[arg(long)]
        d: Option<usize>,
        /// Seed for the randomized scheme
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Decide adjacency from two labels alone (plus declared context)
    Decode {
        #[arg(long)]
        construction: String,
        /// First label (ASCII bits)
        label1: String,
        /// Second label (ASCII bits)
        label2: String,
        /// Family size (size-aware schemes only)
        #[arg(long)]
        n: Option<usize>,
        /// Degree bound (degd-det and degd-rand)
        #[arg(long)]
        d: Option<usize>,
    },
    /// Run verification campaigns and print their reports
    Verify {
        /// One of: sizes, universality, rand, cycles, prefix, oracle,
        /// euler, subset-sum, negative-control, all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Cap the family-size sweeps
        #[arg(long)]
        max_n: Option<usize>,
        /// Master seed for the randomized campaigns
        #[arg(long, default_value_t = 0xC0FFEE)]
        seed: u64,
        /// Output format: text or csv
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Print the bound table for one (n, D) cell
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Override a hidden constant, e.g. --o-constant rand-upper=2.5
        /// (names: rand-upper, rand-lower, count-lower, simple-lower)
        #[arg(long = "o-constant")]
        o_constant: Vec<String>,
        /// Output format: csv or text
        #[arg(long, default_value = "csv")]
        format: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        // a failed re-init only means a pool already exists; that is fine
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global();
    }
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

/// Usage and parse problems exit 2; failed checks and runtime failures exit 1.
fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::PreconditionViolated { .. }
        | Error::MissingContext { .. }
        | Error::SizeGuard { .. } => 2,
        _ => 1,
    }
}

fn run(cmd: Cmd) -> Result<ExitCode> {
    match cmd {
        Cmd::Build {
            construction,
            n,
            d,
            format,
        } => {
            let host = host_graph(SchemeName::parse(&construction)?, n, d)?;
            print!("{}", render_graph(&host, &format)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Embed {
            construction,
            input,
            n,
            d,
            length,
        } => {
            let pairs = run_embed(SchemeName::parse(&construction)?, input, n, d, length)?;
            let mut out = String::new();
            for (guest, host) in pairs {
                out.push_str(&format!("{guest}\t{host}\n"));
            }
            print!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Label {
            construction,
            input,
            n,
            d,
            seed,
        } => {
            let name = SchemeName::parse(&construction)?;
            let g = parse_graph(&std::fs::read_to_string(&input)?)?;
            let scheme = Scheme {
                name,
                n: n.unwrap_or(g.n()),
                d,
                seed: if name == SchemeName::DegDRand {
                    Some(seed.unwrap_or(0))
                } else {
                    seed
                },
            };
            let labeled = encode(&scheme, &g)?;
            print!("{}", write_label_file(&labeled));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Decode {
            construction,
            label1,
            label2,
            n,
            d,
        } => {
            let name = SchemeName::parse(&construction)?;
            let adjacent = decode(name, &label1, &label2, n, d)?;
            println!("{adjacent}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            suite,
            max_n,
            seed,
            format,
        } => {
            let reports = run_suite(&suite, max_n, seed)?;
            let all_good = print_reports(&reports, &format)?;
            Ok(if all_good {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::Bounds {
            n,
            d,
            o_constant,
            format,
        } => {
            let mut constants = OConstants::default();
            for spec in &o_constant {
                let (name, value) = spec.split_once('=').ok_or_else(|| {
                    Error::precondition(format!(
                        "--o-constant takes NAME=VALUE, got {spec:?} (names: {})",
                        OConstants::NAMES.join(", ")
                    ))
                })?;
                let value: f64 = value
                    .parse()
                    .map_err(|_| Error::precondition(format!("bad value in {spec:?}")))?;
                constants.set(name, value)?;
            }
            let report = gv_bounds_table(n, d, &constants)?;
            print_bounds(&report, &format)?;
            match report.validate() {
                Ok(()) => Ok(ExitCode::SUCCESS),
                Err(e) => {
                    eprintln!("bound consistency check failed: {e}");
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}

fn render_graph(g: &Graph, format: &str) -> Result<String> {
    match format {
        "edgelist" => Ok(serialize_graph(g)),
        "dot" => Ok(to_dot(g)),
        "csv" => {
            let mut out = String::from("u,v\n");
            for (u, v) in g.edges() {
                out.push_str(&format!("{u},{v}\n"));
            }
            Ok(out)
        }
        other => Err(Error::precondition(format!(
            "unknown graph format {other:?}; use edgelist, dot, or csv"
        ))),
    }
}

fn run_embed(
    name: SchemeName,
    input: Option<PathBuf>,
    n: Option<usize>,
    d: Option<usize>,
    length: Option<usize>,
) -> Result<Vec<(u32, u64)>> {
    let read_guest = |input: &Option<PathBuf>| -> Result<Graph> {
        let path = input
            .as_ref()
            .ok_or_else(|| Error::precondition("this construction requires --input"))?;
        parse_graph(&std::fs::read_to_string(path)?)
    };
    match name {
        SchemeName::Paths | SchemeName::Deg2 => {
            let g = read_guest(&input)?;
            let map = if name == SchemeName::Paths {
                embed_acyclic(&g)?
            } else {
                embed_deg2(&g)?
            };
            Ok(map
                .images
                .iter()
                .enumerate()
                .map(|(i, &img)| (i as u32, img))
                .collect())
        }
        SchemeName::DegDDet => {
            let g = read_guest(&input)?;
            let d = d.ok_or_else(|| Error::precondition("degd-det requires --d"))?;
            let map = embed_degd(&g, d)?;
            Ok(map
                .images
                .iter()
                .enumerate()
                .map(|(i, &img)| (i as u32, img))
                .collect())
        }
        SchemeName::CyclesAware | SchemeName::CyclesOblivious => {
            // either a bare --length, or an input file holding a single cycle
            let (ell, order): (usize, Vec<u32>) = match (length, &input) {
                (Some(ell), None) => (ell, (0..ell as u32).collect()),
                (None, Some(_)) => {
                    let g = read_guest(&input)?;
                    let comps = iugraph::graph::decompose_components(&g)?;
                    match comps.as_slice() {
                        [c] if c.kind == iugraph::graph::ComponentKind::Cycle
                            && c.vertices.len() == g.n() =>
                        {
                            (g.n(), c.vertices.clone())
                        }
                        _ => {
                            return Err(Error::FamilyMismatch {
                                msg: "input graph is not a single cycle on all vertices".into(),
                            })
                        }
                    }
                }
                _ => {
                    return Err(Error::precondition(
                        "cycle hosts take exactly one of --length or --input",
                    ))
                }
            };
            let n = n.unwrap_or(ell);
            let route = if name == SchemeName::CyclesAware {
                AwareCycleUniversal::new(n)?.embed(ell)?
            } else {
                ObliviousCycleUniversal::new(n)?.embed(ell)?
            };
            Ok(order
                .iter()
                .zip(route.iter())
                .map(|(&g, &h)| (g, u64::from(h)))
                .collect())
        }
        SchemeName::DegDRand => Err(Error::precondition(
            "the randomized scheme labels graphs directly and has no host embedding; see `label`",
        )),
    }
}

/// Prints reports in the chosen format; returns whether none failed.
/// Standard output stays byte-deterministic, so wall time goes to stderr.
fn print_reports(reports: &[VerificationReport], format: &str) -> Result<bool> {
    let total_ms: u128 = reports.iter().map(|r| r.wall.as_millis()).sum();
    eprintln!("ran {} campaign(s) in {} ms", reports.len(), total_ms);
    match format {
        "text" => {
            for r in reports {
                println!("{}", r.to_text());
            }
            let (pass, fail, na) = reports.iter().fold((0, 0, 0), |(p, f, na), r| {
                match r.verdict {
                    Verdict::Pass => (p + 1, f, na),
                    Verdict::Fail => (p, f + 1, na),
                    Verdict::NotApplicable => (p, f, na + 1),
                }
            });
            println!("suites: {pass} pass, {fail} fail, {na} not-applicable");
        }
        "csv" => {
            println!("{}", VerificationReport::CSV_HEADER);
            for r in reports {
                println!("{}", r.csv_row());
            }
        }
        other => {
            return Err(Error::precondition(format!(
                "unknown report format {other:?}; use text or csv"
            )))
        }
    }
    Ok(reports.iter().all(|r| r.passed()))
}

fn print_bounds(report: &BoundReport, format: &str) -> Result<()> {
    match format {
        "csv" => {
            println!("{}", BoundReport::CSV_HEADER);
            print!("{}", report.to_csv_rows());
        }
        "text" => {
            println!("bounds for n = {}, D = {}:", report.n, report.d);
            for e in &report.entries {
                let exact = e
                    .exact
                    .as_ref()
                    .map(|v| format!(", exact {v}"))
                    .unwrap_or_default();
                let vac = if e.vacuous { " [vacuous]" } else { "" };
                println!(
                    "  {:<22} {:<13} log2 {:>12.6}{}{}",
                    e.name,
                    e.kind.as_str(),
                    e.log2_value,
                    exact,
                    vac
                );
            }
        }
        other => {
            return Err(Error::precondition(format!(
                "unknown bounds format {other:?}; use csv or text"
            )))
        }
    }
    Ok(())
}
