//! Command-line front end. Every subcommand is deterministic given its flags
//! and seed, apart from timing fields.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::certify::{certify_with, final_d_bound, CertifyOptions};
use crate::constructions::{build_construction, density_report, ConstructionParams};
use crate::format::{read_triple_file, write_triple_file};
use crate::graph::GraphTriple;
use crate::lemmas::{run_suite, SuiteConfig};
use crate::rainbow::{count_rainbow_triangles, find_rainbow_triangle, RainbowWitness};
use crate::search::{
    branch_and_bound_r_with, exhaustive_r, local_search_r_with, BnbConfig, LocalInit, LocalSearchConfig,
    OutcomeSummary, DEFAULT_BUDGET,
};

/// Seed used when neither `--seed` nor `RAINBOW_MANTEL_SEED` is given.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

pub const SEED_ENV: &str = "RAINBOW_MANTEL_SEED";
pub const THREADS_ENV: &str = "RAINBOW_MANTEL_THREADS";

/// Column header of `bench` output.
pub const BENCH_HEADER: &str = "benchmark,n,count,work,seconds,rate";

/// Column header of `search --csv` output.
pub const SEARCH_CSV_HEADER: &str = "n,value,exact,nodes,seconds";

#[derive(Parser, Debug)]
#[command(name = "rainbow-mantel", version, about = "Rainbow triangles in graph triples")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for every random choice in the run.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the three-block construction and print its density report.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        block: Option<usize>,
        /// Write the triple in the edge-list text format.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count rainbow triangles in a triple file.
    Check { file: PathBuf },
    /// Compute or bound the largest rainbow-free minimum colour size.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::Bnb)]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 100_000)]
        iterations: u64,
        #[arg(long, value_enum, default_value_t = Init::Bipartite)]
        init: Init,
        /// Also write a one-row CSV summary here.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run the lemma checks and print a pass/fail table.
    Lemmas {
        #[arg(long, default_value_t = 7)]
        exhaustive_max: usize,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Certify infeasibility of the final inequality system.
    Certify {
        #[arg(long, default_value_t = 512)]
        resolution: usize,
        /// Also write the certificate JSON here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Use box bounds only, without the exact corner argument.
        #[arg(long)]
        no_corner: bool,
    },
    /// Time rainbow counting and branch and bound; prints CSV.
    Bench {
        /// Comma-separated cases such as `count:256,bnb:6`; empty for none.
        #[arg(long, default_value = "count:256,count:1024,count:4096,bnb:6")]
        cases: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Mode {
    Exhaustive,
    Bnb,
    Local,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Init {
    Bipartite,
    Construction,
}

/// Runs the CLI on `args` (including the program name) with the process's
/// standard streams and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Like [`run`] but writing to the given streams.
///
/// Exit codes: 0 on success, 1 when a check fails or an input cannot be
/// processed, 2 on a usage error.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let threads = match cli.threads.map(Ok).or_else(|| env_number(THREADS_ENV)) {
        Some(Ok(t)) => Some(t),
        Some(Err(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
        None => None,
    };
    let seed = match cli.seed.map(Ok).or_else(|| env_number(SEED_ENV)) {
        Some(Ok(s)) => s,
        Some(Err(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
        None => DEFAULT_SEED,
    };

    let mut text = String::new();
    let result = match threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| dispatch(cli.command, seed, threads, &mut text)),
            Err(e) => Err(format!("could not build thread pool: {e}")),
        },
        None => dispatch(cli.command, seed, threads, &mut text),
    };
    if let Err(e) = out.write_all(text.as_bytes()) {
        let _ = writeln!(err, "error: {e}");
        return 1;
    }
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn env_number<T: std::str::FromStr>(name: &str) -> Option<Result<T, String>> {
    let raw = std::env::var(name).ok()?;
    Some(raw.trim().parse().map_err(|_| format!("{name}={raw:?} is not a valid number")))
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string_pretty(value).map_err(|e| e.to_string())
}

fn emit(out: &mut String, text: &str) -> Result<(), String> {
    out.push_str(text);
    out.push('\n');
    Ok(())
}

fn dispatch(command: Command, seed: u64, threads: Option<usize>, out: &mut String) -> Result<i32, String> {
    match command {
        Command::Construct { n, block, out: path } => construct(n, block, path, out),
        Command::Check { file } => check(file, out),
        Command::Search { n, mode, budget, iterations, init, csv } => {
            search(SearchArgs { n, mode, budget, iterations, init, csv, seed, threads }, out)
        }
        Command::Lemmas { exhaustive_max, samples } => lemmas(exhaustive_max, samples, seed, out),
        Command::Certify { resolution, json, no_corner } => certify(resolution, json, !no_corner, out),
        Command::Bench { cases } => bench(&cases, seed, out),
    }
}

fn construct(n: usize, block: Option<usize>, path: Option<PathBuf>, out: &mut String) -> Result<i32, String> {
    let params = match block {
        Some(b) => ConstructionParams::new(n, b),
        None => ConstructionParams::near_tau(n),
    }
    .map_err(|e| e.to_string())?;
    let triple = build_construction(&params).map_err(|e| e.to_string())?;
    if let Some(path) = path {
        write_triple_file(&path, &triple).map_err(|e| e.to_string())?;
    }
    let report = density_report(&params, &triple).map_err(|e| e.to_string())?;
    emit(out, &to_json(&report)?)?;
    Ok(if report.rainbow_count == 0 { 0 } else { 1 })
}

#[derive(Serialize)]
struct CheckReport {
    n: usize,
    edges: [usize; 3],
    rainbow_count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<RainbowWitness>,
}

fn check(file: PathBuf, out: &mut String) -> Result<i32, String> {
    let triple = read_triple_file(&file).map_err(|e| format!("{}: {e}", file.display()))?;
    let report = CheckReport {
        n: triple.order(),
        edges: triple.edge_counts(),
        rainbow_count: count_rainbow_triangles(&triple),
        witness: find_rainbow_triangle(&triple),
    };
    emit(out, &to_json(&report)?)?;
    Ok(0)
}

struct SearchArgs {
    n: usize,
    mode: Mode,
    budget: u64,
    iterations: u64,
    init: Init,
    csv: Option<PathBuf>,
    seed: u64,
    threads: Option<usize>,
}

#[derive(Serialize)]
struct SearchReport {
    mode: Mode,
    seed: u64,
    #[serde(flatten)]
    outcome: OutcomeSummary,
}

fn search(a: SearchArgs, out: &mut String) -> Result<i32, String> {
    let outcome = match a.mode {
        Mode::Exhaustive => exhaustive_r(a.n),
        Mode::Bnb => branch_and_bound_r_with(a.n, &BnbConfig { budget: a.budget, threads: a.threads }),
        Mode::Local => {
            let init = match a.init {
                Init::Bipartite => LocalInit::Bipartite,
                Init::Construction => LocalInit::Construction(None),
            };
            let config = LocalSearchConfig { seed: a.seed, iterations: a.iterations, init, ..Default::default() };
            local_search_r_with(a.n, &config)
        }
    }
    .map_err(|e| e.to_string())?;
    let summary = outcome.summary();
    if let Some(path) = a.csv {
        let row = format!(
            "{SEARCH_CSV_HEADER}\n{},{},{},{},{:.6}\n",
            summary.n, summary.value, summary.exact, summary.nodes, summary.seconds
        );
        fs::write(&path, row).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    emit(out, &to_json(&SearchReport { mode: a.mode, seed: a.seed, outcome: summary })?)?;
    Ok(0)
}

fn lemmas(exhaustive_max: usize, samples: usize, seed: u64, out: &mut String) -> Result<i32, String> {
    let start = Instant::now();
    let rows = run_suite(&SuiteConfig { exhaustive_max, samples, seed });
    let mut text = format!(
        "seed {seed}\n{:<24} {:>10} {:>9} {:>10}  {:<6} detail\n",
        "check", "checked", "failures", "skipped", "status"
    );
    for r in &rows {
        let status = if r.passed() { "pass" } else { "FAIL" };
        text += &format!(
            "{:<24} {:>10} {:>9} {:>10}  {:<6} {}\n",
            r.name, r.checked, r.failures, r.skipped, status, r.detail
        );
    }
    let all = rows.iter().all(|r| r.passed());
    text += &format!(
        "{} in {:.2}s",
        if all { "all checks passed" } else { "some checks FAILED" },
        start.elapsed().as_secs_f64()
    );
    emit(out, &text)?;
    Ok(if all { 0 } else { 1 })
}

#[derive(Serialize)]
struct CertifyReport<'a> {
    #[serde(flatten)]
    certificate: &'a crate::certify::Certificate,
    complete: bool,
    final_d_bound: f64,
    seconds: f64,
}

fn certify(resolution: usize, json: Option<PathBuf>, corner_rule: bool, out: &mut String) -> Result<i32, String> {
    let start = Instant::now();
    let cert = certify_with(&CertifyOptions { resolution, corner_rule }).map_err(|e| e.to_string())?;
    let identities_hold = cert.identities.values().all(|r| r.abs() < cert.tolerance);
    let report = CertifyReport {
        certificate: &cert,
        complete: cert.complete(),
        final_d_bound: final_d_bound(),
        seconds: start.elapsed().as_secs_f64(),
    };
    let text = to_json(&report)?;
    if let Some(path) = json {
        fs::write(&path, format!("{text}\n")).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    emit(out, &text)?;
    Ok(if cert.complete() && identities_hold { 0 } else { 1 })
}

#[derive(Debug, PartialEq)]
enum BenchCase {
    Count(usize),
    Bnb(usize),
}

fn parse_cases(list: &str) -> Result<Vec<BenchCase>, String> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let (kind, n) = s.split_once(':').ok_or_else(|| format!("bad bench case {s:?}"))?;
            let n: usize = n.parse().map_err(|_| format!("bad size in bench case {s:?}"))?;
            match kind {
                "count" => Ok(BenchCase::Count(n)),
                "bnb" => Ok(BenchCase::Bnb(n)),
                _ => Err(format!("unknown bench kind {kind:?}")),
            }
        })
        .collect()
}

fn bench(cases: &str, seed: u64, out: &mut String) -> Result<i32, String> {
    let cases = parse_cases(cases)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut text = String::from(BENCH_HEADER);
    for case in cases {
        // `work` is vertex triples examined for counting and nodes for search.
        let (name, n, count, work, seconds) = match case {
            BenchCase::Count(n) => {
                let t = GraphTriple::random(n, 0.5, &mut rng).map_err(|e| e.to_string())?;
                let start = Instant::now();
                let count = count_rainbow_triangles(&t);
                let triples = (n as u64) * (n.saturating_sub(1) as u64) * (n.saturating_sub(2) as u64);
                ("count", n, count, triples, start.elapsed().as_secs_f64())
            }
            BenchCase::Bnb(n) => {
                let o = branch_and_bound_r_with(n, &BnbConfig::default()).map_err(|e| e.to_string())?;
                ("bnb", n, o.value as u64, o.nodes_visited, o.wall_time.as_secs_f64())
            }
        };
        let rate = if seconds > 0.0 { work as f64 / seconds } else { 0.0 };
        text += &format!("\n{name},{n},{count},{work},{seconds:.6},{rate:.1}");
    }
    emit(out, &text)?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("rainbow-mantel").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_two() {
        let (code, _, err) = run_capture(&["construct", "--bogus"]);
        assert_eq!(code, 2);
        assert!(err.contains("--bogus"));
        assert_eq!(run_capture(&[]).0, 2);
        assert_eq!(run_capture(&["search", "--n", "3", "--mode", "magic"]).0, 2);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("certify"));
    }

    #[test]
    fn construct_example() {
        let (code, out, _) = run_capture(&["construct", "--n", "20", "--block", "3"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["edges"], serde_json::json!([94, 94, 99]));
        assert_eq!(v["rainbow_count"], 0);
    }

    #[test]
    fn invalid_construction_is_a_runtime_error() {
        let (code, _, err) = run_capture(&["construct", "--n", "6", "--block", "3"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn exhaustive_search_example() {
        let (code, out, _) = run_capture(&["search", "--n", "3", "--mode", "exhaustive"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!((v["value"].as_u64(), v["exact"].as_bool()), (Some(2), Some(true)));
        assert_eq!(v["mode"], "exhaustive");
    }

    #[test]
    fn bench_cases() {
        assert_eq!(parse_cases("").unwrap(), vec![]);
        assert_eq!(parse_cases("count:8, bnb:3").unwrap(), vec![BenchCase::Count(8), BenchCase::Bnb(3)]);
        assert!(parse_cases("count").is_err());
        assert!(parse_cases("sort:4").is_err());
        let (code, out, _) = run_capture(&["bench", "--cases", ""]);
        assert_eq!((code, out.trim_end()), (0, BENCH_HEADER));
    }

    #[test]
    fn bench_counts_are_seeded() {
        let counts = |seed: &str| {
            let (_, out, _) = run_capture(&["--seed", seed, "bench", "--cases", "count:40,bnb:4"]);
            out.lines().skip(1).map(|l| l.split(',').take(3).collect::<Vec<_>>().join(",")).collect::<Vec<_>>()
        };
        assert_eq!(counts("9"), counts("9"));
        assert_eq!(counts("9").len(), 2);
    }
}
