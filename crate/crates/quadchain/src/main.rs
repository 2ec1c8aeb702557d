//! Command-line front door for the 4-chain library.
//!
//! Exit codes: 0 success, 1 verification-negative, 2 usage error,
//! 3 internal error (e.g. factorization timeout).

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use quadchain::json::{
    search_result_json, CertificateJson, ChainJson, JsonError, ModulusReportJson,
    SiblingReportJson,
};
use quadchain::{
    check_system, equal_consecutive_chains, find_siblings, forbidden_moduli, least_element,
    modulus_report, palindromic_solutions, search_box, third_chain, ChainError, ChainWindow,
    FactorConfig, Int, SolutionPair, SystemLabel, Triple, TripleError,
};

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "quadchain", version, about = "Construct, verify, and explore 4-chains")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct FactorOpts {
    /// Seed for randomized factorization (fixed by default for
    /// reproducible output).
    #[arg(long)]
    seed: Option<u64>,
}

impl FactorOpts {
    fn config(&self) -> Result<FactorConfig, String> {
        let mut cfg = FactorConfig::default();
        if let Some(seed) = self.seed {
            cfg.seed = seed;
        }
        if let Ok(raw) = std::env::var("QUADCHAIN_FACTOR_BUDGET") {
            cfg.rho_budget = raw
                .parse()
                .map_err(|_| format!("QUADCHAIN_FACTOR_BUDGET is not a number: {raw:?}"))?;
        }
        Ok(cfg)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Extend a solution pair into a chain window
    Extend {
        /// Seed pair as "x,y"
        #[arg(long, allow_hyphen_values = true)]
        pair: String,
        /// System label as "a,b" with a, b in {1, 2}
        #[arg(long)]
        system: String,
        #[arg(long, default_value_t = 4)]
        left: usize,
        #[arg(long, default_value_t = 4)]
        right: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check every chain-window invariant of a serialized chain or a pair
    Verify {
        #[arg(long, conflicts_with_all = ["pair", "system"])]
        chain_file: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true, requires = "system")]
        pair: Option<String>,
        #[arg(long)]
        system: Option<String>,
    },
    /// List all sibling chains through the center of a triple
    Siblings {
        /// Base triple as "left,center,right"
        #[arg(long, allow_hyphen_values = true)]
        triple: String,
        #[arg(long)]
        system: String,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        factor: FactorOpts,
    },
    /// Construct the third chain from two matching triples
    Third {
        #[arg(long, allow_hyphen_values = true)]
        first: String,
        #[arg(long, allow_hyphen_values = true)]
        second: String,
        #[arg(long)]
        system: String,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive solution-pair scan over a box
    Search {
        /// Bound on |x| and |y|
        #[arg(long)]
        radius: i64,
        /// Restrict to one system "a,b" (default: all four)
        #[arg(long)]
        system: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
    /// Root scans of the two cubics for all moduli up to a limit
    Residues {
        #[arg(long)]
        max_m: u64,
        #[arg(long)]
        json: bool,
    },
    /// The equal-consecutive-term chains and the elliptic-point report
    Special {
        #[arg(long)]
        json: bool,
    },
}

fn parse_ints(raw: &str, expected: usize, what: &str) -> Result<Vec<Int>, String> {
    let parts: Vec<&str> = raw.split(',').map(str::trim).collect();
    if parts.len() != expected {
        return Err(format!("{what} must be {expected} comma-separated integers, got {raw:?}"));
    }
    parts
        .iter()
        .map(|p| Int::from_str(p).map_err(|_| format!("{what}: invalid integer {p:?}")))
        .collect()
}

fn parse_system(raw: &str) -> Result<SystemLabel, String> {
    let parts: Vec<&str> = raw.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(format!("system must be \"a,b\", got {raw:?}"));
    }
    let a: u8 = parts[0].parse().map_err(|_| format!("bad system component {:?}", parts[0]))?;
    let b: u8 = parts[1].parse().map_err(|_| format!("bad system component {:?}", parts[1]))?;
    SystemLabel::new(a, b).map_err(|e| e.to_string())
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serialization cannot fail"));
}

/// Aligned columns with the system 4-cycle annotated beneath each pair.
fn print_chain(w: &ChainWindow) {
    let cells: Vec<String> = w.terms().iter().map(|t| t.to_string()).collect();
    let width = cells.iter().map(String::len).max().unwrap_or(1).max(4) + 2;
    let row: String = cells.iter().map(|c| format!("{c:>width$}")).collect();
    let mut labels = vec![b' '; row.len()];
    for i in 0..w.len() - 1 {
        let s = w.pair_system(i);
        let tag = format!("S{},{}", s.lambda_a(), s.lambda_b());
        // Center the tag under the boundary between columns i and i+1.
        let at = (i + 1) * width - tag.len() / 2;
        labels[at..at + tag.len()].copy_from_slice(tag.as_bytes());
    }
    println!("{row}");
    println!("{}", String::from_utf8(labels).unwrap().trim_end());
}

fn cmd_extend(pair: &str, system: &str, left: usize, right: usize, json: bool) -> u8 {
    let (ints, sys) = match (parse_ints(pair, 2, "--pair"), parse_system(system)) {
        (Ok(i), Ok(s)) => (i, s),
        (Err(e), _) | (_, Err(e)) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let seed = match SolutionPair::new(ints[0].clone(), ints[1].clone(), sys) {
        Ok(p) => p,
        Err(_) => {
            eprintln!("({}, {}) is not a solution pair of {sys}", ints[0], ints[1]);
            return EXIT_NEGATIVE;
        }
    };
    let w = ChainWindow::generate(&seed, left, right);
    if json {
        print_json(&ChainJson::from_window(&w));
    } else {
        print_chain(&w);
    }
    EXIT_OK
}

fn cmd_verify(chain_file: Option<&PathBuf>, pair: Option<&str>, system: Option<&str>) -> u8 {
    match (chain_file, pair, system) {
        (Some(path), None, None) => {
            let raw = match std::fs::read_to_string(path) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", path.display());
                    return EXIT_USAGE;
                }
            };
            let dto: ChainJson = match serde_json::from_str(&raw) {
                Ok(d) => d,
                Err(e) => {
                    eprintln!("error: malformed chain file: {e}");
                    return EXIT_USAGE;
                }
            };
            match dto.to_window() {
                Ok(w) => {
                    println!("valid chain window of {} terms", w.len());
                    EXIT_OK
                }
                Err(JsonError::BadInteger(s)) => {
                    eprintln!("error: malformed chain file: bad integer {s:?}");
                    EXIT_USAGE
                }
                Err(JsonError::Chain(ChainError::BadSystemLabel)) => {
                    eprintln!("error: malformed chain file: bad system label");
                    EXIT_USAGE
                }
                Err(JsonError::Chain(e)) => {
                    println!("invalid: {e}");
                    EXIT_NEGATIVE
                }
            }
        }
        (None, Some(pair), Some(system)) => {
            let (ints, sys) = match (parse_ints(pair, 2, "--pair"), parse_system(system)) {
                (Ok(i), Ok(s)) => (i, s),
                (Err(e), _) | (_, Err(e)) => {
                    eprintln!("error: {e}");
                    return EXIT_USAGE;
                }
            };
            if check_system(&ints[0], &ints[1], sys) {
                println!("({}, {}) solves {sys}", ints[0], ints[1]);
                EXIT_OK
            } else {
                println!("({}, {}) does not solve {sys}", ints[0], ints[1]);
                EXIT_NEGATIVE
            }
        }
        _ => {
            eprintln!("error: pass either --chain-file or --pair with --system");
            EXIT_USAGE
        }
    }
}

fn parse_triple(raw: &str, sys: SystemLabel, what: &str) -> Result<Triple, String> {
    let ints = parse_ints(raw, 3, what)?;
    Triple::new(ints[0].clone(), ints[1].clone(), ints[2].clone(), sys)
        .map_err(|e| format!("{what}: {e}"))
}

#[derive(Serialize)]
struct SiblingLineJson {
    #[serde(flatten)]
    report: SiblingReportJson,
    least_element: String,
    least_trivial: bool,
    shares_base_least: bool,
}

fn cmd_siblings(triple: &str, system: &str, json: bool, factor: &FactorOpts) -> u8 {
    let sys = match parse_system(system) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let base = match parse_triple(triple, sys, "--triple") {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    if !base.verify_chain() {
        eprintln!("{base} is not a run of three consecutive chain terms");
        return EXIT_NEGATIVE;
    }
    let cfg = match factor.config() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let base_pair = SolutionPair::new(base.left().clone(), base.center().clone(), sys)
        .expect("verified triple has a valid first pair");
    let base_least = match least_element(&base_pair, 256) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INTERNAL;
        }
    };
    let reports = match find_siblings(&base, &cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INTERNAL;
        }
    };
    let mut lines = Vec::new();
    for r in &reports {
        let pair = SolutionPair::new(r.sibling_value.clone(), base.center().clone(), sys)
            .expect("lemma 7 guarantees a valid sibling pair");
        let least = match least_element(&pair, 256) {
            Ok(l) => l,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_INTERNAL;
            }
        };
        let shares = least.trivial == base_least.trivial
            && (least.trivial || least.value == base_least.value);
        lines.push((r, least, shares));
    }
    if json {
        let dto: Vec<SiblingLineJson> = lines
            .iter()
            .map(|(r, least, shares)| SiblingLineJson {
                report: SiblingReportJson::from_report(r),
                least_element: least.value.to_string(),
                least_trivial: least.trivial,
                shares_base_least: *shares,
            })
            .collect();
        print_json(&dto);
    } else {
        println!("base {base}, least element {} (trivial: {})", base_least.value, base_least.trivial);
        for (r, least, shares) in &lines {
            println!(
                "v = {}: sibling {}, via Corollary 8: {}, least element {} (shares base least: {})",
                r.sibling_value, r.sibling, r.via_corollary8, least.value, shares
            );
        }
    }
    EXIT_OK
}

fn cmd_third(first: &str, second: &str, system: &str, json: bool) -> u8 {
    let sys = match parse_system(system) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let (first, second) = match (
        parse_triple(first, sys, "--first"),
        parse_triple(second, sys, "--second"),
    ) {
        (Ok(f), Ok(s)) => (f, s),
        (Err(e), _) | (_, Err(e)) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    match third_chain(&first, &second) {
        Ok(cert) => {
            if json {
                print_json(&CertificateJson::from_certificate(&cert));
            } else {
                println!("third chain triple: {}", cert.third);
                println!(
                    "w = {}, |t| prime: {}, t does not divide u-v: {}",
                    cert.w, cert.hypothesis_prime, cert.hypothesis_nondiv
                );
            }
            EXIT_OK
        }
        Err(e @ TripleError::HypothesisFailed { .. }) => {
            println!("no third chain: {e}");
            EXIT_NEGATIVE
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn cmd_search(radius: i64, system: Option<&str>, jobs: usize, json: bool) -> u8 {
    if radius < 1 {
        eprintln!("error: --radius must be positive");
        return EXIT_USAGE;
    }
    let systems: Vec<SystemLabel> = match system {
        Some(raw) => match parse_system(raw) {
            Ok(s) => vec![s],
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        },
        None => SystemLabel::ALL.to_vec(),
    };
    let res = search_box(radius, &systems, jobs);
    if json {
        print_json(&search_result_json(&res));
    } else {
        for &s in &systems {
            let pairs: Vec<String> = res
                .pairs
                .iter()
                .filter(|p| p.system() == s)
                .map(|p| format!("({}, {})", p.x(), p.y()))
                .collect();
            println!("{s}: {} pairs", pairs.len());
            if !pairs.is_empty() {
                println!("  {}", pairs.join(" "));
            }
        }
    }
    EXIT_OK
}

fn cmd_residues(max_m: u64, json: bool) -> u8 {
    if max_m < 2 {
        eprintln!("error: --max-m must be at least 2");
        return EXIT_USAGE;
    }
    if max_m > 1_000_000 {
        eprintln!("error: --max-m capped at 1000000");
        return EXIT_USAGE;
    }
    let reports: Vec<_> = (2..=max_m).map(modulus_report).collect();
    if json {
        let dto: Vec<ModulusReportJson> =
            reports.iter().map(ModulusReportJson::from_report).collect();
        print_json(&dto);
    } else {
        for r in &reports {
            if r.forbidden {
                println!("m = {}: forbidden (no chain term is divisible by {})", r.m, r.m);
            } else {
                println!(
                    "m = {}: roots of x^3+x+1: {:?}, roots of x^3+x^2+1: {:?}",
                    r.m, r.roots_p1, r.roots_p2
                );
            }
        }
        let forbidden = forbidden_moduli(max_m);
        println!(
            "forbidden moduli up to {max_m}: {}",
            forbidden.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
        );
    }
    EXIT_OK
}

#[derive(Serialize)]
struct SpecialJson {
    equal_consecutive: Vec<SpecialChainJson>,
    palindromic: Vec<PalindromicJson>,
}

#[derive(Serialize)]
struct SpecialChainJson {
    x: String,
    y: String,
    equation_exponent: u32,
    chain: ChainJson,
}

#[derive(Serialize)]
struct PalindromicJson {
    x: String,
    y: String,
    curve_exponent: u32,
    generates_chain: bool,
    chain: Option<ChainJson>,
}

fn cmd_special(json: bool) -> u8 {
    let chains = equal_consecutive_chains();
    let palindromic: Vec<_> = [1u32, 2]
        .into_iter()
        .flat_map(|e| palindromic_solutions(100, e))
        .collect();
    if json {
        let dto = SpecialJson {
            equal_consecutive: chains
                .iter()
                .map(|c| SpecialChainJson {
                    x: c.x.to_string(),
                    y: c.y.to_string(),
                    equation_exponent: c.equation_exponent,
                    chain: ChainJson::from_window(&c.window),
                })
                .collect(),
            palindromic: palindromic
                .iter()
                .map(|p| PalindromicJson {
                    x: p.x.to_string(),
                    y: p.y.to_string(),
                    curve_exponent: p.curve_exponent,
                    generates_chain: p.generates_chain,
                    chain: p.window.as_ref().map(ChainJson::from_window),
                })
                .collect(),
        };
        print_json(&dto);
    } else {
        println!("chains with exactly two equal consecutive terms:");
        for c in &chains {
            println!(
                "  from (x, y) = ({}, {}) of x*y = x^3 + x^{} + 1:",
                c.x, c.y, c.equation_exponent
            );
            print_chain(&c.window);
        }
        println!("integral points of y^2 = x^3 + x^e + 1 with |x| <= 100 (verified within the box only):");
        for p in &palindromic {
            println!(
                "  e = {}: (x, y) = ({}, {}), generates a chain: {}",
                p.curve_exponent, p.x, p.y, p.generates_chain
            );
            if let Some(w) = &p.window {
                print_chain(w);
            }
        }
    }
    EXIT_OK
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.cmd {
        Cmd::Extend {
            pair,
            system,
            left,
            right,
            json,
        } => cmd_extend(pair, system, *left, *right, *json),
        Cmd::Verify {
            chain_file,
            pair,
            system,
        } => cmd_verify(chain_file.as_ref(), pair.as_deref(), system.as_deref()),
        Cmd::Siblings {
            triple,
            system,
            json,
            factor,
        } => cmd_siblings(triple, system, *json, factor),
        Cmd::Third {
            first,
            second,
            system,
            json,
        } => cmd_third(first, second, system, *json),
        Cmd::Search {
            radius,
            system,
            jobs,
            json,
        } => cmd_search(*radius, system.as_deref(), *jobs, *json),
        Cmd::Residues { max_m, json } => cmd_residues(*max_m, *json),
        Cmd::Special { json } => cmd_special(*json),
    };
    ExitCode::from(code)
}
