//! `rqv`: command-line front end for the ratio-bound verification toolkit.
//!
//! Exit codes are CI-oriented: 0 all pass/certified, 1 violation or failed
//! certificate, 2 rejected input, 3 undecidable at the working precision.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{ArgGroup, Args, Parser, Subcommand};

use rqv_core::certifier::{self, CertifyOptions, LemmaCheck, LemmaId};
use rqv_core::enumerate::graph6::{read_graph6, write_graph6};
use rqv_core::enumerate::{enumerate_connected, GraphFilter};
use rqv_core::harness::{
    self, error_exit_code, VerifyRunConfig, VerifyRunResult, VerifySpec, DEFAULT_TOLERANCE,
};
use rqv_core::invariants::{self, InvariantReport};
use rqv_core::spectral::DEFAULT_EIGEN_TOL;
use rqv_core::{Error, Family, Graph, Interval};

#[derive(Parser)]
#[command(
    name = "rqv",
    version,
    about = "Certified checks of the signless-Laplacian / Randic-index ratio bound"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the ratio bound over enumerated or sampled connected graphs
    Verify(VerifyArgs),
    /// Print certified invariants for explicitly given graphs
    Invariants(InvariantArgs),
    /// Run the inequality certificate suite
    Certify(CertifyArgs),
    /// Rank order-n connected graphs by their ratio
    Extremal(ExtremalArgs),
}

/// Inclusive integer range: `7`, `4..9`, `4..=9`, or `4-9`.
#[derive(Clone, Copy, Debug)]
struct Span {
    lo: usize,
    hi: usize,
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let one = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
        let (lo, hi) = if let Some((a, b)) = s.split_once("..=") {
            (one(a)?, one(b)?)
        } else if let Some((a, b)) = s.split_once("..") {
            (one(a)?, one(b)?)
        } else if let Some((a, b)) = s.split_once('-') {
            (one(a)?, one(b)?)
        } else {
            let v = one(s)?;
            (v, v)
        };
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(Span { lo, hi })
    }
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["exhaustive", "samples"])))]
struct VerifyArgs {
    /// Order or inclusive order range, e.g. 7 or 4..9
    #[arg(long, value_name = "N|LO..HI")]
    n: Span,
    /// Check every connected graph up to isomorphism (orders up to 10)
    #[arg(long)]
    exhaustive: bool,
    /// Seeded connected samples per order
    #[arg(long, value_name = "COUNT")]
    samples: Option<u64>,
    /// Sampler seed
    #[arg(long, value_name = "SEED", default_value_t = 0, requires = "samples")]
    seed: u64,
    /// Edge-count window, clamped per order to n-1 ..= n(n-1)/2
    #[arg(long, value_name = "M|LO..HI", requires = "samples")]
    m: Option<Span>,
    /// Half-width for equality detection and violation slack
    #[arg(long, value_name = "TOL", default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
    /// Write the JSON report here ("-" for stdout)
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Negative control: pass each complete graph downstream with one edge
    /// missing. Single-order exhaustive runs only.
    #[arg(long, hide = true, requires = "exhaustive")]
    corrupt_stream: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true).args(["graph6", "family"])))]
struct InvariantArgs {
    /// File of graph6 lines, or "-" for stdin
    #[arg(long, value_name = "FILE|-")]
    graph6: Option<String>,
    /// Named family and order, e.g. --family star 13
    #[arg(long, num_args = 2, value_names = ["NAME", "N"])]
    family: Option<Vec<String>>,
    /// Write one JSON report per graph here ("-" for stdout)
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct CertifyArgs {
    /// Run a single certificate by id (e.g. reduce_f, g12_final)
    #[arg(long, value_name = "ID")]
    lemma: Option<String>,
    /// Grid ceiling for the cubic identity and growth certificates
    #[arg(long, value_name = "N")]
    n_max: Option<usize>,
    /// Write one JSON certificate per line here ("-" for stdout)
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Negative control: shift every f margin by this amount
    #[arg(long, hide = true, value_name = "SHIFT", allow_hyphen_values = true)]
    perturb_f: Option<f64>,
}

#[derive(Args)]
struct ExtremalArgs {
    /// Order to enumerate (up to 10)
    #[arg(long, value_name = "N")]
    n: usize,
    /// Write the JSON report here ("-" for stdout)
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

fn main() -> ExitCode {
    // die quietly when downstream closes the pipe (e.g. `rqv ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::Verify(args) => run_verify(&args),
        Cmd::Invariants(args) => run_invariants(&args),
        Cmd::Certify(args) => run_certify(&args),
        Cmd::Extremal(args) => run_extremal(&args),
    };
    let code = outcome.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        error_exit_code(&e)
    });
    ExitCode::from(code as u8)
}

fn write_json_lines(path: &Path, lines: &[String]) -> Result<(), Error> {
    let payload = lines.join("\n") + "\n";
    if path == Path::new("-") {
        print!("{payload}");
        Ok(())
    } else {
        std::fs::write(path, payload)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))
    }
}

fn fmt_interval(iv: &Interval) -> String {
    format!("[{}, {}]", iv.lo(), iv.hi())
}

fn run_verify(args: &VerifyArgs) -> Result<i32, Error> {
    let spec = if args.exhaustive {
        VerifySpec::Exhaustive { n_lo: args.n.lo, n_hi: args.n.hi }
    } else {
        VerifySpec::Sample {
            n_lo: args.n.lo,
            n_hi: args.n.hi,
            samples: args.samples.expect("clap mode group guarantees --samples"),
            seed: args.seed,
            m_lo: args.m.map(|s| s.lo),
            m_hi: args.m.map(|s| s.hi),
        }
    };
    let cfg = VerifyRunConfig { spec, tolerance: args.tolerance, eigen_tol: DEFAULT_EIGEN_TOL };

    let result = if args.corrupt_stream {
        if args.n.lo != args.n.hi {
            return Err(Error::InvalidInput(
                "the corrupted-stream control runs one order at a time".into(),
            ));
        }
        let n = args.n.lo;
        let stream = enumerate_connected(n, GraphFilter::default())?.map(drop_one_edge_if_complete);
        harness::verify_stream(n, stream, cfg.tolerance, cfg.eigen_tol)?
    } else {
        harness::verify_conjecture(&cfg)?
    };

    if let Some(path) = &args.json {
        write_json_lines(path, &[to_json(&result)?])?;
    }
    print_verify(&result);
    Ok(if result.passes() { 0 } else { 1 })
}

fn drop_one_edge_if_complete(g: Graph) -> Graph {
    if g.is_complete() && g.n() >= 3 {
        let mut edges = g.edges();
        edges.pop();
        Graph::from_edges(g.n(), &edges).expect("complete graph minus an edge stays simple")
    } else {
        g
    }
}

fn print_verify(result: &VerifyRunResult) {
    println!(
        "checked {} graphs, {} violation(s)",
        result.graphs_checked,
        result.violations.len()
    );
    let max = &result.max_ratio_graph;
    println!(
        "max q/R = {} at {} (n = {}, m = {})",
        fmt_interval(&max.ratio),
        max.graph6,
        max.n,
        max.m
    );
    if result.equality_witnesses.is_empty() {
        println!("equality witnesses: none");
    } else {
        println!("equality witnesses: {}", result.equality_witnesses.join(" "));
    }
    if !result.near_misses.is_empty() {
        println!("near misses (within tolerance, not extremal): {}", result.near_misses.join(" "));
    }
    for v in &result.violations {
        println!("violation {:?} at {} (n = {}): {}", v.kind, v.graph6, v.n, v.detail);
    }
    println!("{}", if result.passes() { "PASS" } else { "FAIL" });
}

fn run_invariants(args: &InvariantArgs) -> Result<i32, Error> {
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    if let Some(source) = &args.graph6 {
        let text = if source == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::InvalidInput(format!("cannot read stdin: {e}")))?;
            buf
        } else {
            std::fs::read_to_string(source)
                .map_err(|e| Error::InvalidInput(format!("cannot read {source}: {e}")))?
        };
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let g = read_graph6(line)
                .map_err(|e| Error::InvalidInput(format!("line {}: {e}", idx + 1)))?;
            graphs.push((line.to_string(), g));
        }
        if graphs.is_empty() {
            return Err(Error::InvalidInput("no graph6 lines in input".into()));
        }
    } else {
        let spec = args.family.as_ref().expect("clap input group guarantees --family");
        let family: Family = spec[0].parse()?;
        let n: usize = spec[1]
            .parse()
            .map_err(|e| Error::InvalidInput(format!("order `{}`: {e}", spec[1])))?;
        let g = Graph::family(family, n)?;
        graphs.push((write_graph6(&g), g));
    }

    let mut json = Vec::new();
    for (label, g) in &graphs {
        let report = invariants::full_report(g, DEFAULT_EIGEN_TOL)?;
        print_report(label, &report);
        if args.json.is_some() {
            json.push(to_json(&report)?);
        }
    }
    if let Some(path) = &args.json {
        write_json_lines(path, &json)?;
    }
    Ok(0)
}

fn print_report(label: &str, r: &InvariantReport) {
    println!("graph {label}: n = {}, m = {}, degrees {}..{}", r.n, r.m, r.min_degree, r.max_degree);
    println!("  R(G)     {}", fmt_interval(&r.randic));
    println!("  q(G)     {}", fmt_interval(&r.q_radius));
    println!("  lambda1  {}", fmt_interval(&r.lambda1));
    println!("  q/R      {}", fmt_interval(&r.ratio));
    for b in &r.bounds {
        println!(
            "  bound {:9} ({} bound on {})  {}",
            b.name.as_str(),
            b.side.as_str(),
            b.target.as_str(),
            fmt_interval(&b.value)
        );
    }
}

fn run_certify(args: &CertifyArgs) -> Result<i32, Error> {
    let mut opts = CertifyOptions::default();
    if let Some(n_max) = args.n_max {
        opts.n_max_hl = n_max;
    }
    if let Some(shift) = args.perturb_f {
        opts.f_shift = shift;
    }
    let checks = match &args.lemma {
        Some(id) => vec![certifier::certify_one(id.parse::<LemmaId>()?, &opts)?],
        None => certifier::certify_all(&opts)?,
    };

    if let Some(path) = &args.json {
        let lines = checks.iter().map(to_json).collect::<Result<Vec<_>, _>>()?;
        write_json_lines(path, &lines)?;
    }
    for check in &checks {
        print_check(check);
    }
    let certified = checks.iter().filter(|c| c.passed()).count();
    println!("{certified}/{} certificates hold", checks.len());
    Ok(if certified == checks.len() { 0 } else { 1 })
}

fn print_check(c: &LemmaCheck) {
    let status = match c.passed() {
        true => "certified",
        false => "FAILED   ",
    };
    println!(
        "{status} {:20} points = {:6}  worst margin = {}  at {}",
        c.lemma_id.as_str(),
        c.evaluated_points,
        fmt_interval(&c.worst_margin),
        c.witness
    );
    for e in &c.exceptions {
        println!("          outside claimed domain: {e}");
    }
}

fn run_extremal(args: &ExtremalArgs) -> Result<i32, Error> {
    let result = harness::find_extremal(args.n, DEFAULT_EIGEN_TOL)?;
    if let Some(path) = &args.json {
        write_json_lines(path, &[to_json(&result)?])?;
    }
    println!("top ratios at n = {} ({} graphs checked)", args.n, result.graphs_checked);
    for (rank, entry) in result.top_ratios.iter().enumerate() {
        println!(
            "  {:2}. {}  m = {:2}  q/R = {}",
            rank + 1,
            entry.graph6,
            entry.m,
            fmt_interval(&entry.ratio)
        );
    }
    Ok(if result.passes() { 0 } else { 1 })
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Error> {
    serde_json::to_string(value)
        .map_err(|e| Error::InvalidInput(format!("serialization failed: {e}")))
}
