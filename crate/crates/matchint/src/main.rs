//! Command-line surface: per-line polynomial and integrality output, family
//! construction/verification, stream search, and the one-shot family
//! verification run.
//!
//! Exit codes: 0 success, 1 verification or check failure, 2 usage or input
//! format error.

use clap::{Parser, Subcommand, ValueEnum};
use matchint::{
    generate_small_graphs, is_matching_integral, matching_polynomial,
    matching_polynomial_recurrence, parse_graph6, to_graph6, verify, verify_family, FamilyKind,
    FamilySpec, SearchConfig,
};
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "matchint",
    about = "Exact matching polynomials, matching-integral graphs, and graph6 search"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Alg {
    /// Direct matching enumeration (the oracle path).
    Enum,
    /// Memoized vertex-deletion recurrence (fast path).
    Rec,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Hk,
    Hkprime,
    F7,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the matching polynomial of each graph6 input line.
    Poly {
        #[arg(long, value_enum, default_value_t = Alg::Rec)]
        alg: Alg,
        /// Machine form {"coeffs": [...]} instead of canonical text.
        #[arg(long)]
        json: bool,
        /// Input file of graph6 lines; standard input when omitted.
        file: Option<PathBuf>,
    },
    /// Decide matching integrality for each graph6 input line.
    Check {
        #[arg(long)]
        json: bool,
        file: Option<PathBuf>,
    },
    /// Build a family member and report construction vs closed form.
    Family {
        #[arg(long = "type", value_enum)]
        kind: FamilyArg,
        /// Family parameter (ignored for f7).
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        /// Exit nonzero unless the report matches and the connectivity claim holds.
        #[arg(long)]
        expect: bool,
        /// Print only the graph6 line instead of the report.
        #[arg(long = "emit-g6")]
        emit_g6: bool,
    },
    /// Filter a graph6 stream (or generated small graphs) for
    /// matching-integral graphs of prescribed connectivity.
    Search {
        #[arg(long = "min-connectivity", default_value_t = 0)]
        min_connectivity: usize,
        /// Generate all isomorphism classes with up to N vertices (N <= 8)
        /// instead of reading a stream.
        #[arg(long)]
        gen: Option<usize>,
        /// Input file of graph6 lines; standard input when omitted.
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
        /// Emit hits in input order.
        #[arg(long)]
        ordered: bool,
        /// JSON-lines output.
        #[arg(long)]
        json: bool,
    },
    /// Re-derive the published family results for k = 1..=kmax.
    VerifyPaper {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        kmax: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Poly { alg, json, file } => per_line(&file, |g| {
            let mu = match alg {
                Alg::Enum => matching_polynomial(g),
                Alg::Rec => matching_polynomial_recurrence(g),
            };
            if json {
                mu.to_json_string()
            } else {
                mu.to_string()
            }
        }),
        Cmd::Check { json, file } => per_line(&file, |g| {
            let (integral, report) = is_matching_integral(g);
            let remainder_degree = report.remainder.degree().unwrap_or(0);
            if json {
                let zeros: Vec<String> = report
                    .zeros
                    .iter()
                    .map(|(z, m)| format!("[{z},{m}]"))
                    .collect();
                format!(
                    "{{\"integral\":{},\"zeros\":[{}],\"remainder_degree\":{}}}",
                    integral,
                    zeros.join(","),
                    remainder_degree
                )
            } else if integral {
                format!("INTEGRAL zeros={}", report.zeros_string())
            } else {
                format!("NOT_INTEGRAL remainder_degree={remainder_degree}")
            }
        }),
        Cmd::Family {
            kind,
            k,
            expect,
            emit_g6,
        } => run_family(kind, k as usize, expect, emit_g6),
        Cmd::Search {
            min_connectivity,
            gen,
            file,
            jobs,
            ordered,
            json,
        } => run_search(min_connectivity, gen, file, jobs as usize, ordered, json),
        Cmd::VerifyPaper { kmax } => run_verify(kmax as usize),
    };
    ExitCode::from(code)
}

fn open_lines(file: &Option<PathBuf>) -> io::Result<Box<dyn Iterator<Item = String> + Send>> {
    Ok(match file {
        Some(path) => Box::new(BufReader::new(File::open(path)?).lines().map_while(Result::ok)),
        None => Box::new(
            BufReader::new(io::stdin())
                .lines()
                .map_while(Result::ok),
        ),
    })
}

/// Runs `render` on each parsed input graph; parse failures go to standard
/// error and turn the final exit code into 2.
fn per_line(file: &Option<PathBuf>, render: impl Fn(&matchint::Graph) -> String) -> u8 {
    let lines = match open_lines(file) {
        Ok(lines) => lines,
        Err(e) => {
            eprintln!("ERR {e}");
            return 2;
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut bad_input = false;
    for (idx, line) in lines.enumerate() {
        match parse_graph6(&line) {
            Ok(g) => {
                if writeln!(out, "{}", render(&g)).is_err() {
                    return 2;
                }
            }
            Err(e) => {
                eprintln!("ERR line={}: {e}", idx + 1);
                bad_input = true;
            }
        }
    }
    if bad_input {
        2
    } else {
        0
    }
}

fn run_family(kind: FamilyArg, k: usize, expect: bool, emit_g6: bool) -> u8 {
    let spec = FamilySpec {
        kind: match kind {
            FamilyArg::Hk => FamilyKind::Hk,
            FamilyArg::Hkprime => FamilyKind::HkPrime,
            FamilyArg::F7 => FamilyKind::F7,
        },
        k,
    };
    let report = match verify_family(&spec) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("ERR {e}");
            return 2;
        }
    };
    if emit_g6 {
        match &report.graph6 {
            Some(line) => println!("{line}"),
            None => {
                eprintln!("ERR graph on {} vertices exceeds short-form graph6", report.n);
                return 2;
            }
        }
    } else {
        println!("{}", report.to_json_string());
    }
    if expect && !(report.matches && report.connectivity_claim_holds) {
        return 1;
    }
    0
}

fn run_search(
    min_connectivity: usize,
    gen: Option<usize>,
    file: Option<PathBuf>,
    jobs: usize,
    ordered: bool,
    json: bool,
) -> u8 {
    if gen.is_some() && file.is_some() {
        eprintln!("ERR --gen and an input file are mutually exclusive");
        return 2;
    }
    let cfg = SearchConfig {
        min_connectivity,
        parallelism: jobs,
        ordered_output: ordered,
    };
    let lines: Box<dyn Iterator<Item = String> + Send> = if let Some(max_n) = gen {
        if max_n < 1 {
            eprintln!("ERR --gen requires at least 1 vertex");
            return 2;
        }
        let mut generated = Vec::new();
        for n in 1..=max_n {
            match generate_small_graphs(n) {
                Ok(graphs) => {
                    generated.extend(
                        graphs
                            .iter()
                            .map(|g| to_graph6(g).expect("generated graphs fit graph6")),
                    );
                }
                Err(e) => {
                    eprintln!("ERR {e}");
                    return 2;
                }
            }
        }
        Box::new(generated.into_iter())
    } else {
        match open_lines(&file) {
            Ok(lines) => lines,
            Err(e) => {
                eprintln!("ERR {e}");
                return 2;
            }
        }
    };
    let mut bad_input = false;
    matchint::filter_stream(
        &cfg,
        lines,
        |hit| {
            if json {
                println!("{}", hit.to_json_line());
            } else {
                println!("{}", hit.to_line());
            }
        },
        |err| {
            eprintln!("ERR line={}: {}", err.line, err.message);
            bad_input = true;
        },
    );
    if bad_input {
        2
    } else {
        0
    }
}

fn run_verify(kmax: usize) -> u8 {
    let mut failed = false;
    for (i, (name, outcome)) in verify::run_all(kmax, 500).into_iter().enumerate() {
        match outcome {
            Ok(()) => println!("criterion {} ({name}): PASS", i + 1),
            Err(msg) => {
                println!("criterion {} ({name}): FAIL: {msg}", i + 1);
                failed = true;
            }
        }
    }
    if failed {
        1
    } else {
        0
    }
}
