//! Command-line front end: family dumps, verification sweeps, metric
//! summaries, graph exports and exploration tables.
//!
//! Exit codes: 0 success, 1 verification failure or I/O error, 2 usage
//! error (including n-ranges beyond the family caps). Identical
//! invocations produce byte-identical output.

use std::fmt::Write as _;
use std::io::Write as _;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bitstring::Family;
use crate::error::{Error, Result};
use crate::explore::{self, HamTarget, HamiltonicityResult};
use crate::families;
use crate::graph::build_graph;
use crate::metrics;
use crate::verify::{self, Status};

/// An inclusive index range: a bare `7` or a span `3..12`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub lo: u32,
    pub hi: u32,
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse_one = |part: &str| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| format!("invalid index {part:?}"))
        };
        if let Some((lo, hi)) = s.split_once("..") {
            let (lo, hi) = (parse_one(lo)?, parse_one(hi)?);
            if lo > hi {
                return Err(format!("empty range {s:?}"));
            }
            Ok(NRange { lo, hi })
        } else {
            let n = parse_one(s)?;
            Ok(NRange { lo: n, hi: n })
        }
    }
}

impl NRange {
    fn iter(self) -> impl Iterator<Item = u32> {
        self.lo..=self.hi
    }
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => {
            Family::from_letter(c).ok_or_else(|| format!("unknown family {s:?}, expected one of Q F L R M"))
        }
        _ => Err(format!("unknown family {s:?}, expected one of Q F L R M")),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Method {
    Brute,
    Recursive,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum TextFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "amgraph",
    version,
    about = "Hypercube subfamilies: enumeration, verification and exploration",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct FamilyArg {
    /// Family: Q (hypercube), F (Fibonacci), L (Lucas), R (run-constrained),
    /// M (run-constrained circularly)
    #[arg(short = 'f', long = "family", value_parser = parse_family)]
    family: Family,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List family members or counts
    Families {
        #[command(flatten)]
        family: FamilyArg,
        /// Length n or inclusive range lo..hi
        #[arg(short = 'n', long = "n")]
        n: NRange,
        /// Print counts instead of members
        #[arg(long)]
        counts: bool,
        /// Generator to use; `both` compares them and fails on mismatch
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
        #[arg(long, value_enum, default_value_t = TextFormat::Table)]
        format: TextFormat,
    },
    /// Run the verification sweeps (PASS/FAIL/FINDING per theorem and n)
    Verify {
        /// Run every catalog entry
        #[arg(long)]
        all: bool,
        /// Run one entry, e.g. --thm 3.8
        #[arg(long = "thm", value_name = "ID")]
        theorem: Option<String>,
        /// Restrict the sweep to this n range
        #[arg(short = 'n', long = "n")]
        n: Option<NRange>,
        /// List the catalog and exit
        #[arg(long)]
        list: bool,
    },
    /// Eccentricity summaries: radius, diameter, center, periphery
    Metrics {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(short = 'n', long = "n")]
        n: NRange,
        #[arg(long, value_enum, default_value_t = TextFormat::Table)]
        format: TextFormat,
        /// Include the full per-vertex eccentricity map (json only)
        #[arg(long)]
        verbose: bool,
        /// Write to a file instead of standard output
        #[arg(short = 'o', long = "output")]
        output: Option<std::path::PathBuf>,
    },
    /// Emit one graph in DOT or JSON form
    Export {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(short = 'n', long = "n")]
        n: u32,
        #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
        format: ExportFormat,
        #[arg(short = 'o', long = "output")]
        output: Option<std::path::PathBuf>,
    },
    /// Exploration harnesses for the open questions
    Explore {
        #[command(subcommand)]
        what: ExploreCommand,
    },
}

#[derive(Subcommand, Debug)]
enum ExploreCommand {
    /// Induced-subcube counting polynomial, coefficients low to high
    CubePoly {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(short = 'n', long = "n")]
        n: NRange,
    },
    /// Hamiltonian path search (exhaustive within the budget)
    HamPath {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(short = 'n', long = "n")]
        n: NRange,
        #[arg(long, default_value_t = explore::DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        /// Append the witness column
        #[arg(long)]
        verbose: bool,
    },
    /// Hamiltonian cycle search (exhaustive within the budget)
    HamCycle {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(short = 'n', long = "n")]
        n: NRange,
        #[arg(long, default_value_t = explore::DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        #[arg(long)]
        verbose: bool,
    },
    /// Degree distribution table
    Degrees {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(short = 'n', long = "n")]
        n: NRange,
    },
}

/// Entry point used by the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let mut stdout = String::new();
    match execute(cli, &mut stdout) {
        Ok(code) => {
            print!("{stdout}");
            let _ = std::io::stdout().flush();
            code
        }
        Err(e) => {
            print!("{stdout}");
            let _ = std::io::stdout().flush();
            eprintln!("error: {e}");
            match e {
                Error::CapExceeded { .. } | Error::IndexOutOfRange { .. } | Error::Usage(_) => 2,
                _ => 1,
            }
        }
    }
}

fn execute(cli: Cli, out: &mut String) -> Result<i32> {
    match cli.command {
        Command::Families {
            family,
            n,
            counts,
            method,
            format,
        } => cmd_families(family.family, n, counts, method, format, out),
        Command::Verify {
            all,
            theorem,
            n,
            list,
        } => cmd_verify(all, theorem, n, list, out),
        Command::Metrics {
            family,
            n,
            format,
            verbose,
            output,
        } => cmd_metrics(family.family, n, format, verbose, output, out),
        Command::Export {
            family,
            n,
            format,
            output,
        } => cmd_export(family.family, n, format, output, out),
        Command::Explore { what } => cmd_explore(what, out),
    }
}

fn cmd_families(
    family: Family,
    range: NRange,
    counts: bool,
    method: Method,
    format: TextFormat,
    out: &mut String,
) -> Result<i32> {
    if method != Method::Brute
        && !matches!(family, Family::RunConstrained | Family::CircularRunConstrained)
    {
        return Err(Error::Usage(
            "--method recursive/both applies only to the R and M families".into(),
        ));
    }
    for n in range.iter() {
        let brute = match method {
            Method::Recursive => None,
            _ => Some(families::enumerate(family, n)?),
        };
        let recursive = match (method, family) {
            (Method::Brute, _) => None,
            (_, Family::RunConstrained) => Some(families::build_r_recursive(n)?),
            (_, Family::CircularRunConstrained) => Some(families::build_m_recursive(n)?),
            _ => unreachable!("checked above"),
        };
        if let (Some(b), Some(r)) = (&brute, &recursive) {
            if b.codes() != r.codes() {
                let _ = writeln!(out, "n={n} MISMATCH brute={} recursive={}", b.len(), r.len());
                return Ok(1);
            }
        }
        let set = brute.or(recursive).expect("one generator ran");
        if counts {
            let _ = writeln!(out, "n={n} |V|={}", set.len());
        } else {
            match format {
                TextFormat::Table => {
                    for label in set.labels() {
                        let _ = writeln!(out, "{label}");
                    }
                }
                TextFormat::Json => {
                    let _ = writeln!(out, "{}", serde_json::to_string(&set).expect("serializable"));
                }
            }
        }
    }
    Ok(0)
}

fn cmd_verify(
    all: bool,
    theorem: Option<String>,
    n: Option<NRange>,
    list: bool,
    out: &mut String,
) -> Result<i32> {
    if list {
        for info in verify::CATALOG {
            let _ = writeln!(
                out,
                "{:<4} n in {}..{} (default {}..{})  {}",
                info.id, info.min_n, info.max_n, info.default_lo, info.default_hi, info.title
            );
        }
        return Ok(0);
    }
    let range = n.map(|r| (r.lo, r.hi));
    let lines = match (all, theorem) {
        (true, None) => verify::run_all(range)?,
        (false, Some(id)) => {
            if verify::theorem_info(&id).is_none() {
                return Err(Error::Usage(format!(
                    "unknown theorem id {id:?}; see verify --list"
                )));
            }
            verify::run_theorem(&id, range)?
        }
        _ => {
            return Err(Error::Usage(
                "pass exactly one of --all or --thm ID".into(),
            ));
        }
    };
    let mut failures = 0usize;
    let mut findings = 0usize;
    for line in &lines {
        let _ = writeln!(out, "{line}");
        match line.status {
            Status::Fail => failures += 1,
            Status::Finding => findings += 1,
            Status::Pass => {}
        }
    }
    eprintln!(
        "verify: {} checks, {} pass, {} findings, {} failures",
        lines.len(),
        lines.len() - failures - findings,
        findings,
        failures
    );
    Ok(if failures > 0 { 1 } else { 0 })
}

fn write_or_print(out: &mut String, output: Option<std::path::PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(path) => {
            std::fs::write(&path, text)?;
            Ok(())
        }
        None => {
            out.push_str(text);
            Ok(())
        }
    }
}

fn cmd_metrics(
    family: Family,
    range: NRange,
    format: TextFormat,
    verbose: bool,
    output: Option<std::path::PathBuf>,
    out: &mut String,
) -> Result<i32> {
    let mut text = String::new();
    for n in range.iter() {
        let g = build_graph(family, n)?;
        let summary = metrics::metric_summary(&g)?;
        match format {
            TextFormat::Table => {
                let _ = writeln!(
                    text,
                    "family={} n={} radius={} diameter={} center={} |periphery|={}",
                    family.letter(),
                    n,
                    summary.radius,
                    summary.diameter,
                    summary.center.join(","),
                    summary.periphery.len()
                );
            }
            TextFormat::Json => {
                let _ = writeln!(
                    text,
                    "{}",
                    serde_json::to_string(&summary.to_json(verbose)).expect("serializable")
                );
            }
        }
    }
    write_or_print(out, output, &text)?;
    Ok(0)
}

fn cmd_export(
    family: Family,
    n: u32,
    format: ExportFormat,
    output: Option<std::path::PathBuf>,
    out: &mut String,
) -> Result<i32> {
    let g = build_graph(family, n)?;
    let text = match format {
        ExportFormat::Dot => g.export_dot(),
        ExportFormat::Json => {
            let mut s = serde_json::to_string(&g.to_json()).expect("serializable");
            s.push('\n');
            s
        }
    };
    write_or_print(out, output, &text)?;
    Ok(0)
}

fn ham_row(result: &HamiltonicityResult, verbose: bool) -> String {
    let found = match result.found {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    };
    let mut row = format!(
        "{},{},{},{},{}",
        result.n,
        result.family.letter(),
        found,
        result.exhausted,
        result.steps
    );
    if verbose {
        row.push(',');
        if let Some(witness) = &result.witness {
            row.push_str(&witness.join("-"));
        }
    }
    row
}

fn run_ham(
    target: HamTarget,
    family: Family,
    range: NRange,
    budget: u64,
    verbose: bool,
    out: &mut String,
) -> Result<i32> {
    let header = if verbose {
        "n,family,found,exhausted,steps,witness"
    } else {
        "n,family,found,exhausted,steps"
    };
    let _ = writeln!(out, "{header}");
    for n in range.iter() {
        let g = build_graph(family, n)?;
        let result = match target {
            HamTarget::Path => explore::hamiltonian_path(&g, budget),
            HamTarget::Cycle => explore::hamiltonian_cycle(&g, budget),
        };
        match result {
            Ok(r) => {
                let _ = writeln!(out, "{}", ham_row(&r, verbose));
            }
            Err(Error::TooFewVertices(_)) => {
                let _ = writeln!(
                    out,
                    "{},{},n/a,true,0{}",
                    n,
                    family.letter(),
                    if verbose { "," } else { "" }
                );
            }
            Err(e) => return Err(e),
        }
    }
    Ok(0)
}

fn cmd_explore(what: ExploreCommand, out: &mut String) -> Result<i32> {
    match what {
        ExploreCommand::CubePoly { family, n } => {
            for n in n.iter() {
                let g = build_graph(family.family, n)?;
                let poly = explore::cube_polynomial(&g);
                let coeffs: Vec<String> =
                    poly.coefficients.iter().map(|c| c.to_string()).collect();
                let _ = writeln!(out, "{}", coeffs.join(","));
            }
            Ok(0)
        }
        ExploreCommand::HamPath {
            family,
            n,
            budget,
            verbose,
        } => run_ham(HamTarget::Path, family.family, n, budget, verbose, out),
        ExploreCommand::HamCycle {
            family,
            n,
            budget,
            verbose,
        } => run_ham(HamTarget::Cycle, family.family, n, budget, verbose, out),
        ExploreCommand::Degrees { family, n } => {
            let _ = writeln!(out, "n,family,degree_counts");
            let rows = explore::degree_distribution(family.family, n.lo, n.hi)?;
            for row in rows {
                let counts: Vec<String> = row
                    .counts
                    .iter()
                    .map(|(d, c)| format!("{d}:{c}"))
                    .collect();
                let _ = writeln!(
                    out,
                    "{},{},{}",
                    row.n,
                    row.family.letter(),
                    counts.join(";")
                );
            }
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!("5".parse::<NRange>().unwrap(), NRange { lo: 5, hi: 5 });
        assert_eq!("3..12".parse::<NRange>().unwrap(), NRange { lo: 3, hi: 12 });
        assert!("12..3".parse::<NRange>().is_err());
        assert!("x".parse::<NRange>().is_err());
        assert!("3..y".parse::<NRange>().is_err());
    }

    #[test]
    fn family_parsing() {
        assert_eq!(parse_family("M").unwrap(), Family::CircularRunConstrained);
        assert_eq!(parse_family("q").unwrap(), Family::Hypercube);
        assert!(parse_family("X").is_err());
        assert!(parse_family("MM").is_err());
    }

    #[test]
    fn families_counts_line() {
        let mut out = String::new();
        let code = cmd_families(
            Family::CircularRunConstrained,
            NRange { lo: 5, hi: 5 },
            true,
            Method::Brute,
            TextFormat::Table,
            &mut out,
        )
        .unwrap();
        assert_eq!(code, 0);
        assert_eq!(out, "n=5 |V|=11\n");
    }

    #[test]
    fn families_member_lines() {
        let mut out = String::new();
        cmd_families(
            Family::RunConstrained,
            NRange { lo: 3, hi: 3 },
            false,
            Method::Both,
            TextFormat::Table,
            &mut out,
        )
        .unwrap();
        assert_eq!(out, "000\n100\n");
    }

    #[test]
    fn families_cap_is_usage_error() {
        let mut out = String::new();
        let err = cmd_families(
            Family::CircularRunConstrained,
            NRange { lo: 40, hi: 40 },
            true,
            Method::Brute,
            TextFormat::Table,
            &mut out,
        )
        .unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn explore_cube_poly_star() {
        let mut out = String::new();
        cmd_explore(
            ExploreCommand::CubePoly {
                family: FamilyArg {
                    family: Family::CircularRunConstrained,
                },
                n: NRange { lo: 3, hi: 3 },
            },
            &mut out,
        )
        .unwrap();
        assert_eq!(out, "4,3\n");
    }
}
