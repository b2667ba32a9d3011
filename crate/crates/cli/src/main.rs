use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use berge::goodset::{enumerate_good_sets, find_good_set, rotation_closure, GoodSetCertificate};
use berge::search::{self, parse_path_literal, PathQuery};
use berge::verify::{report_write, run_sweep, Check, SweepConfig, SweepMode};
use berge::weights::{gap_check, turan_exact, weight_report};
use berge::{EdgeRef, Hypergraph};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

/// Berge paths, localized weights and good sets of small uniform hypergraphs.
#[derive(Parser)]
#[command(name = "hg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Weight report: p(e), f_r(p(e)), the localized sum and its classification.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Longest Berge path, or p(e) with a witness when --edge is given.
    Longest {
        file: PathBuf,
        #[arg(long)]
        edge: Option<usize>,
    },
    /// One good set with its certificate, or every good set with --all.
    Goodset {
        file: PathBuf,
        #[arg(long)]
        all: bool,
    },
    /// Rotation closure of a path given as "v0,e1,v1,e2,v2,...".
    Rotate {
        file: PathBuf,
        #[arg(long)]
        path: String,
        /// Terminal held fixed; defaults to the first vertex of the path.
        #[arg(long)]
        fixed: Option<usize>,
    },
    /// Exact Turán number for Berge paths of length k.
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
    },
    /// Exhaustive or sampled verification sweep.
    Verify(VerifyArgs),
    /// Table of f_r(k) - 2 against C(k/2, r-1).
    Gapcheck {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        kmax: usize,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Only check connected instances.
    #[arg(long)]
    connected: bool,
    #[arg(long, conflicts_with = "sample", required_unless_present = "sample")]
    exhaustive: bool,
    #[arg(long, value_name = "COUNT", requires = "seed")]
    sample: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Comma-separated checks, or "all".
    #[arg(long, default_value = "all")]
    checks: String,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Write elapsed_ms as 0 so reports compare byte for byte.
    #[arg(long)]
    no_timing: bool,
    /// Maximum violations recorded in the report.
    #[arg(long, default_value_t = berge::verify::DEFAULT_VIOLATION_CAP)]
    cap: usize,
}

fn load(path: &Path) -> Result<Hypergraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    text.parse()
        .with_context(|| format!("parsing {}", path.display()))
}

fn edge_arg(h: &Hypergraph, idx: usize) -> Result<EdgeRef> {
    if idx >= h.num_edges() {
        bail!("edge {idx} out of range ({} edges)", h.num_edges());
    }
    Ok(EdgeRef(idx))
}

fn analyze(file: &Path, as_json: bool) -> Result<()> {
    let h = load(file)?;
    let rep = weight_report(&h);
    if as_json {
        let out = json!({
            "hypergraph": { "n": h.n(), "r": h.r(), "edges": h.edge_lists() },
            "report": rep,
        });
        println!("{}", serde_json::to_string_pretty(&out)?);
        return Ok(());
    }
    println!("n = {}, r = {}, edges = {}, k = {}", h.n(), h.r(), h.num_edges(), rep.k);
    for w in &rep.per_edge {
        println!(
            "  {} {:?}  p = {}  f = {}  1/f = {}",
            w.edge, w.vertices, w.p, w.f, w.inv_f
        );
    }
    println!("sum = {} (bound {})", rep.sum, rep.bound);
    println!("equality: {}", rep.is_equality);
    println!("classification: {}", rep.classification.as_str());
    for (i, c) in rep.components.iter().enumerate() {
        println!(
            "  component {i}: vertices {:?}, {} edges, sum {}, {}",
            c.vertices,
            c.edges.len(),
            c.sum,
            c.classification.as_str()
        );
    }
    Ok(())
}

fn longest(file: &Path, edge: Option<usize>) -> Result<()> {
    let h = load(file)?;
    let (label, witness) = match edge {
        Some(idx) => {
            let e = edge_arg(&h, idx)?;
            let w = search::search_witness(&h, &PathQuery::through(e)).expect("an edge is a path");
            (format!("p({e}) = {}", w.len()), w)
        }
        None => match berge::longest_berge_path(&h) {
            Some((k, w)) => (format!("k = {k}"), w),
            None => bail!("hypergraph has no vertices"),
        },
    };
    println!("{label}");
    println!("witness: {witness}");
    println!("edge union: {:?}", witness.covered_vertices(&h));
    Ok(())
}

fn print_certificate(c: &GoodSetCertificate) {
    println!(
        "S = {:?}  |S| = {}  k = {}  |N(S)| = {} <= {}",
        c.set,
        c.set.len(),
        c.k,
        c.neighborhood.len(),
        c.bound
    );
}

fn goodset(file: &Path, all: bool) -> Result<()> {
    let h = load(file)?;
    if all {
        let certs = enumerate_good_sets(&h)?;
        println!("{} good sets", certs.len());
        for c in &certs {
            print_certificate(c);
        }
    } else {
        let (route, c) = find_good_set(&h)?;
        println!("route: {}", route.as_str());
        print_certificate(&c);
        let ns: Vec<String> = c.neighborhood.iter().map(ToString::to_string).collect();
        println!("N(S) = {}", ns.join(" "));
    }
    Ok(())
}

fn rotate(file: &Path, literal: &str, fixed: Option<usize>) -> Result<()> {
    let h = load(file)?;
    let p = parse_path_literal(literal)?;
    let fam = rotation_closure(&h, &p, fixed.unwrap_or(p.start()))?;
    println!("base: {}", fam.base);
    println!("terminals: {:?}", fam.terminals);
    for (t, q) in &fam.witnesses {
        println!("  v{t}: {q}");
    }
    println!(
        "|N_E(P)(terminals)| = {} <= 2|terminals| - 1 = {}: {}",
        fam.bound_lhs,
        fam.bound_rhs,
        fam.bound_holds()
    );
    Ok(())
}

fn turan(n: usize, r: usize, k: usize) -> Result<()> {
    let t = turan_exact(n, r, k)?;
    let bound = t.bound.as_ref().map_or("-".to_string(), ToString::to_string);
    let regime = match t.regime {
        Some(berge::weights::TuranRegime::ShortPaths) => "n>=r>=k>2",
        Some(berge::weights::TuranRegime::LongPaths) => "n>=k>=r+1",
        None => "-",
    };
    println!("n\tr\tk\texact\tbound\tregime");
    println!("{n}\t{r}\t{k}\t{}\t{bound}\t{regime}", t.exact);
    println!("witness edges: {:?}", t.witness.edge_lists());
    Ok(())
}

fn verify(a: &VerifyArgs) -> Result<bool> {
    let mode = match (a.exhaustive, a.sample, a.seed) {
        (true, _, _) => SweepMode::Exhaustive,
        (false, Some(count), Some(seed)) => SweepMode::Sample { count, seed },
        _ => bail!("choose --exhaustive or --sample COUNT --seed SEED"),
    };
    let cfg = SweepConfig {
        n: a.n,
        r: a.r,
        mode,
        connected_only: a.connected,
        checks: Check::parse_list(&a.checks)?,
        violation_cap: a.cap,
    };
    let mut rep = run_sweep(&cfg, a.workers)?;
    if a.no_timing {
        rep = rep.without_timing();
    }
    if let Some(out) = &a.out {
        report_write(&rep, out).with_context(|| format!("writing {}", out.display()))?;
    }
    println!(
        "instances: {}  violations: {}  discrepancies: {}",
        rep.instances, rep.violations_total, rep.discrepancies_total
    );
    println!(
        "census: case_i {}  case_ii {}  not_extremal {}",
        rep.census.case_i, rep.census.case_ii, rep.census.not_extremal
    );
    for v in &rep.violations {
        println!("violation [{}] #{}: {}", v.check, v.index, v.detail);
    }
    println!("elapsed: {} ms", rep.elapsed_ms);
    Ok(rep.passed())
}

fn gapcheck(r: usize, kmax: usize) -> Result<bool> {
    if r < 3 {
        bail!("r must be at least 3");
    }
    let lo = if r == 3 { 6 } else { r + 1 };
    let mut ok = true;
    println!("r\tk\tlhs\trhs\tholds\tequality");
    for k in lo..=kmax {
        let g = gap_check(r, k)?;
        ok &= !g.in_domain || g.holds;
        println!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            g.r, g.k, g.lhs, g.rhs, g.holds, g.is_equality
        );
    }
    Ok(ok)
}

fn run() -> Result<bool> {
    match Cli::parse().command {
        Command::Analyze { file, json } => analyze(&file, json).map(|_| true),
        Command::Longest { file, edge } => longest(&file, edge).map(|_| true),
        Command::Goodset { file, all } => goodset(&file, all).map(|_| true),
        Command::Rotate { file, path, fixed } => rotate(&file, &path, fixed).map(|_| true),
        Command::Turan { n, r, k } => turan(n, r, k).map(|_| true),
        Command::Verify(args) => verify(&args),
        Command::Gapcheck { r, kmax } => gapcheck(r, kmax),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
