//! Command-line front end. Every command writes JSON (or graph6 lines) to
//! stdout; `--pretty` switches to an indented or tabular view.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or input error.

use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cycles::{find_chorded_cycle, find_dcc, find_dcc1, find_k1_join_p4, Target};
use crate::error::Error;
use crate::families::{build_family, FamilyName, FamilySpec};
use crate::graph::{graph6_decode, Graph};
use crate::search::{verify_edge_lemmas_with, verify_theorem, Enumerator, TheoremId, VerificationReport};
use crate::spectral::{spectral_radius, SpectralResult, DEFAULT_TOL};

/// Environment variable holding the default worker count.
pub const JOBS_ENV: &str = "DCC_SPECTRAL_JOBS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "dcc-spectral", version, about = "Chorded cycles, spectral radii and exhaustive extremal checks")]
pub struct Cli {
    /// Human-readable output instead of compact JSON.
    #[arg(long, global = true)]
    pub pretty: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Look for a chorded cycle, DCC, DCC1 or K1∨P4.
    Detect {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        target: Target,
    },
    /// Spectral radius by power iteration.
    Radius {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Named graph families.
    Families {
        #[command(subcommand)]
        action: FamiliesAction,
    },
    /// Exhaustive check of an extremal theorem at one order.
    VerifyTheorem {
        theorem: TheoremArg,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Exhaustive check of the edge-count lemmas at one order.
    VerifyLemmas {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Stream connected graphs on n vertices, one per isomorphism class.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        filter: Option<Filter>,
        /// Emit `graph6,rho,<target>_free...` rows instead of bare graph6.
        #[arg(long)]
        csv: bool,
        #[command(flatten)]
        jobs: Jobs,
    },
}

#[derive(Debug, Subcommand)]
pub enum FamiliesAction {
    /// Family names with their parameter domains.
    List,
    /// Print the graph6 form of one member.
    Build {
        name: FamilyName,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// graph6 string, or `-` for the first line of stdin (the default).
    #[arg(long, default_value = "-")]
    pub input: String,
}

#[derive(Debug, Args)]
pub struct Jobs {
    /// Worker threads; defaults to the environment variable, then all cores.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    Dcc,
    Dcc1,
    K1p4,
}

impl From<TheoremArg> for TheoremId {
    fn from(t: TheoremArg) -> TheoremId {
        match t {
            TheoremArg::Dcc => TheoremId::ThmDcc,
            TheoremArg::Dcc1 => TheoremId::ThmDcc1,
            TheoremArg::K1p4 => TheoremId::ThmK1p4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Filter {
    DccFree,
    Dcc1Free,
    K1p4Free,
}

impl From<Filter> for Target {
    fn from(f: Filter) -> Target {
        match f {
            Filter::DccFree => Target::Dcc,
            Filter::Dcc1Free => Target::Dcc1,
            Filter::K1p4Free => Target::K1p4,
        }
    }
}

impl clap::ValueEnum for Target {
    fn value_variants<'a>() -> &'a [Self] {
        &Target::ALL
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(self.name()))
    }
}

impl clap::ValueEnum for FamilyName {
    fn value_variants<'a>() -> &'a [Self] {
        &FamilyName::ALL
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        let v = clap::builder::PossibleValue::new(self.as_str());
        Some(if *self == FamilyName::Hn { v.alias("Hn_thm5") } else { v })
    }
}

#[derive(Serialize)]
struct RadiusOutput<'a> {
    graph6: String,
    #[serde(flatten)]
    result: &'a SpectralResult,
    tol: f64,
}

#[derive(Serialize)]
struct K1p4Output {
    hub: usize,
    path: [usize; 4],
}

#[derive(Serialize)]
struct FamilyEntry {
    name: &'static str,
    parameters: &'static str,
}

/// A command failure and the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: EXIT_USAGE, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_USAGE, message: format!("i/o error: {e}") }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli, stdin, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn read_graph(input: &Input, stdin: &mut dyn BufRead) -> std::result::Result<Graph, Failure> {
    let text = if input.input == "-" {
        let mut line = String::new();
        stdin.read_line(&mut line)?;
        line
    } else {
        input.input.clone()
    };
    Ok(graph6_decode(text.trim_end_matches(['\n', '\r']))?)
}

fn jobs(j: &Jobs) -> std::result::Result<Option<usize>, Failure> {
    if j.jobs.is_some() {
        return Ok(j.jobs);
    }
    match std::env::var(JOBS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(Some)
            .map_err(|_| Failure { code: EXIT_USAGE, message: format!("{JOBS_ENV}={v:?} is not a thread count") }),
        Err(_) => Ok(None),
    }
}

fn emit(out: &mut dyn Write, value: &impl Serialize, pretty: bool) -> std::result::Result<(), Failure> {
    let text = if pretty { serde_json::to_string_pretty(value) } else { serde_json::to_string(value) }
        .map_err(|e| Failure { code: EXIT_USAGE, message: e.to_string() })?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn report_table(out: &mut dyn Write, r: &VerificationReport) -> std::io::Result<()> {
    writeln!(out, "{:<18} {}", "theorem", r.theorem)?;
    writeln!(out, "{:<18} {}", "n", r.n)?;
    writeln!(out, "{:<18} {}", "graphs scanned", r.graphs_scanned)?;
    writeln!(out, "{:<18} {:.12}", "max rho", r.max_rho)?;
    writeln!(out, "{:<18} {}", "argmax", r.argmax_canonical)?;
    writeln!(out, "{:<18} {}", "unique", r.argmax_unique)?;
    writeln!(out, "{:<18} {:.12}", "bound", r.bound_value)?;
    if let Some(e) = &r.edges {
        writeln!(out, "{:<18} {} (bound {}, {} at bound)", "max edges", e.max_edges, e.edge_bound, e.at_bound)?;
    }
    writeln!(out, "{:<18} {:.3}s", "runtime", r.runtime)?;
    writeln!(out, "{:<18} {}", "verified", r.verified())?;
    for v in &r.violations {
        writeln!(out, "  violation: {v}")?;
    }
    for n in &r.notes {
        writeln!(out, "  note: {n}")?;
    }
    Ok(())
}

fn execute(cli: &Cli, stdin: &mut dyn BufRead, out: &mut dyn Write) -> CmdResult {
    let pretty = cli.pretty;
    match &cli.command {
        Command::Detect { input, target } => {
            let g = read_graph(input, stdin)?;
            let witness = match target {
                Target::Chorded => find_chorded_cycle(&g),
                Target::Dcc => find_dcc(&g),
                Target::Dcc1 => find_dcc1(&g),
                Target::K1p4 => None,
            };
            let hub = match target {
                Target::K1p4 => find_k1_join_p4(&g).map(|[hub, a, b, c, d]| K1p4Output { hub, path: [a, b, c, d] }),
                _ => None,
            };
            match (witness, hub) {
                (Some(w), _) => emit(out, &w, pretty)?,
                (None, Some(h)) => emit(out, &h, pretty)?,
                (None, None) => writeln!(out, "none")?,
            }
            Ok(EXIT_OK)
        }
        Command::Radius { input, tol } => {
            let g = read_graph(input, stdin)?;
            let result = spectral_radius(&g, *tol)?;
            emit(out, &RadiusOutput { graph6: g.to_string(), result: &result, tol: *tol }, pretty)?;
            Ok(EXIT_OK)
        }
        Command::Families { action: FamiliesAction::List } => {
            let list: Vec<FamilyEntry> =
                FamilyName::ALL.iter().map(|f| FamilyEntry { name: f.as_str(), parameters: f.parameters() }).collect();
            emit(out, &list, pretty)?;
            Ok(EXIT_OK)
        }
        Command::Families { action: FamiliesAction::Build { name, n, r, t, k } } => {
            let spec = FamilySpec { name: *name, n: *n, r: *r, t: *t, k: *k };
            writeln!(out, "{}", build_family(&spec)?)?;
            Ok(EXIT_OK)
        }
        Command::VerifyTheorem { theorem, n, jobs: j } => {
            let report = verify_theorem((*theorem).into(), *n, jobs(j)?)?;
            if pretty {
                report_table(out, &report)?;
            } else {
                emit(out, &report, false)?;
            }
            Ok(if report.verified() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::VerifyLemmas { n, jobs: j } => {
            let reports = verify_edge_lemmas_with(*n, jobs(j)?)?;
            if pretty {
                for r in &reports {
                    report_table(out, r)?;
                }
            } else {
                emit(out, &reports, false)?;
            }
            Ok(if reports.iter().all(VerificationReport::verified) { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Enumerate { n, filter, csv, jobs: j } => {
            let e = Enumerator::new(*n)?.free_of(filter.map(Target::from)).jobs(jobs(j)?);
            if *csv {
                // graph6 never contains ',' or '"', so no quoting is needed.
                write!(out, "graph6,rho")?;
                for t in Target::ALL {
                    write!(out, ",{}_free", t.name())?;
                }
                writeln!(out)?;
            }
            let mut io_err = None;
            let mut calc_err = None;
            e.for_each(|g| {
                if io_err.is_some() || calc_err.is_some() {
                    return;
                }
                let line = if *csv {
                    match spectral_radius(g, DEFAULT_TOL) {
                        Ok(r) => {
                            let mut s = format!("{g},{}", r.rho);
                            for t in Target::ALL {
                                s.push_str(if t.occurs_in(g) { ",false" } else { ",true" });
                            }
                            s
                        }
                        Err(err) => {
                            calc_err = Some(err);
                            return;
                        }
                    }
                } else {
                    g.to_string()
                };
                if let Err(err) = writeln!(out, "{line}") {
                    io_err = Some(err);
                }
            })?;
            if let Some(err) = calc_err {
                return Err(err.into());
            }
            match io_err {
                // A closed pipe just ends the stream.
                Some(err) if err.kind() == std::io::ErrorKind::BrokenPipe => Ok(EXIT_OK),
                Some(err) => Err(err.into()),
                None => Ok(EXIT_OK),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("dcc-spectral").chain(args.iter().copied());
        let code = run(argv, &mut input, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn detect_triangle() {
        let (code, out, _) = call(&["detect", "--input", "Bw", "--target", "dcc"], "");
        assert_eq!((code, out.as_str()), (0, "none\n"));
    }

    #[test]
    fn detect_from_stdin() {
        let (code, out, _) = call(&["detect", "--input", "-", "--target", "chorded"], "C~\n");
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["cycle"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["detect", "--target", "dcc", "--bogus"], "").0, 2);
        assert_eq!(call(&["detect", "--target", "nope", "--input", "Bw"], "").0, 2);
        let (code, _, err) = call(&["radius", "--input", "~???"], "");
        assert_eq!(code, 2);
        assert!(err.contains("byte"), "{err}");
    }

    #[test]
    fn build_then_radius() {
        let (code, g6, _) = call(&["families", "build", "F1"], "");
        assert_eq!(code, 0);
        let (code, out, _) = call(&["radius"], &g6);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!((v["rho"].as_f64().unwrap() - 3.0861).abs() < 5e-4);
        assert_eq!(v["tol"].as_f64().unwrap(), DEFAULT_TOL);
    }

    #[test]
    fn enumerate_lines() {
        let (code, out, _) = call(&["enumerate", "--n", "4"], "");
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 6);
        let (_, csv, _) = call(&["enumerate", "--n", "4", "--csv", "--filter", "dcc-free"], "");
        assert_eq!(csv.lines().next().unwrap(), "graph6,rho,chorded_free,dcc_free,dcc1_free,k1p4_free");
        assert_eq!(csv.lines().count(), 6);
    }
}
