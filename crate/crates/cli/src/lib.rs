//! The `effdom` command line: recognize, solve, verify and generate.
//!
//! Exit codes: 0 for a solution or a true verdict, 1 for infeasible or
//! false, 2 for input errors, 3 when a forced method does not apply or the
//! instance is too large for exhaustive search.

pub mod report;

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use effdom::generate::{gen_alpha_acyclic, gen_chordal, gen_dually_chordal, gen_hypertree};
use effdom::io::{parse_instance, write_graph, write_hypergraph, Instance, Parsed};
use effdom::recognition::JoinTree;
use effdom::*;

use report::{
    from_zero_based, from_zero_based_edges, parse_edges, parse_indices, RunReport, WeightCheck,
};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMITED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "effdom",
    version,
    about = "Efficient domination and related problems on graphs and hypergraphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide class membership and print a witness.
    Recognize {
        #[arg(long, value_enum)]
        class: RecognizeClass,
        file: PathBuf,
    },
    /// Solve a problem on one instance, or on every file in a directory.
    Solve {
        #[arg(value_enum)]
        problem: Problem,
        #[arg(long, default_value = "auto", value_parser = parse_method)]
        method: MethodChoice,
        #[arg(long)]
        json: bool,
        /// Also write the certificate line to this file (single instances only).
        #[arg(long, value_name = "FILE")]
        write_certificate: Option<PathBuf>,
        /// Worker threads when solving a directory.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        path: PathBuf,
    },
    /// Check a certificate file against an instance.
    Verify {
        #[arg(value_enum)]
        problem: Problem,
        #[arg(long, value_name = "FILE")]
        certificate: PathBuf,
        file: PathBuf,
    },
    /// Write a seeded random instance of a class.
    Generate {
        #[arg(value_enum)]
        class: GenerateClass,
        #[arg(long)]
        n: usize,
        /// Hyperedge count; defaults to n. Ignored for chordal graphs.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        seed: u64,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RecognizeClass {
    Chordal,
    DuallyChordal,
    Helly,
    Conformal,
    AlphaAcyclic,
    Hypertree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    Ed,
    Eed,
    Mim,
    Xc,
}

impl Problem {
    fn as_str(self) -> &'static str {
        match self {
            Problem::Ed => "ed",
            Problem::Eed => "eed",
            Problem::Mim => "mim",
            Problem::Xc => "xc",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenerateClass {
    Chordal,
    DuallyChordal,
    Hypertree,
    AlphaAcyclic,
}

fn parse_method(s: &str) -> Result<MethodChoice, String> {
    s.parse()
}

/// What a command produced: an exit code and the text for each stream.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn out(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }
}

/// A failure with the exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::MethodInapplicable { .. } | Error::GateExceeded { .. } => EXIT_LIMITED,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<Failure> for Outcome {
    fn from(f: Failure) -> Self {
        Outcome {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            if code == 0 {
                Outcome::out(0, text)
            } else {
                Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

pub fn execute(command: Command) -> Outcome {
    let result = match command {
        Command::Recognize { class, file } => recognize(class, &file),
        Command::Solve {
            problem,
            method,
            json,
            write_certificate,
            jobs,
            path,
        } => {
            if path.is_dir() {
                solve_dir(problem, method, json, &path, jobs)
            } else {
                solve_file(problem, method, json, &path, write_certificate.as_deref())
            }
        }
        Command::Verify {
            problem,
            certificate,
            file,
        } => verify(problem, &certificate, &file),
        Command::Generate {
            class,
            n,
            m,
            seed,
            output,
        } => generate(class, n, m, seed, output.as_deref()),
    };
    result.unwrap_or_else(Outcome::from)
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

/// Reads and parses an instance; errors carry the file name and line.
pub fn load(path: &Path) -> Result<Parsed<Instance>, Failure> {
    let text = read(path)?;
    parse_instance(&text).map_err(|e| {
        if e.line == 0 {
            Failure::input(format!("{}: {}", path.display(), e.message))
        } else {
            Failure::input(format!("{}:{}: {}", path.display(), e.line, e.message))
        }
    })
}

fn need_graph(inst: &Instance, what: &str) -> Result<Graph, Failure> {
    match inst {
        Instance::Graph(g) => Ok(g.clone()),
        Instance::Hypergraph(_) => Err(Failure::input(format!("{what} needs a graph file"))),
    }
}

/// Graph files stand for the hypergraph of their edges.
fn as_hypergraph(inst: &Instance) -> Hypergraph {
    match inst {
        Instance::Graph(g) => Hypergraph::from_graph(g),
        Instance::Hypergraph(h) => h.clone(),
    }
}

fn one_based(set: &[usize]) -> String {
    set.iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn recognize(class: RecognizeClass, path: &Path) -> Result<Outcome, Failure> {
    let inst = load(path)?.value;
    let report = match class {
        RecognizeClass::Chordal => is_chordal(&need_graph(&inst, "chordal recognition")?),
        RecognizeClass::DuallyChordal => {
            is_dually_chordal(&need_graph(&inst, "dually chordal recognition")?)
        }
        RecognizeClass::Helly => is_helly(&as_hypergraph(&inst)),
        RecognizeClass::Conformal => is_conformal(&as_hypergraph(&inst))?,
        RecognizeClass::AlphaAcyclic => is_alpha_acyclic(&as_hypergraph(&inst)),
        RecognizeClass::Hypertree => is_hypertree(&as_hypergraph(&inst)),
    };
    let name = class
        .to_possible_value()
        .expect("named")
        .get_name()
        .to_string();
    let mut text = format!("{name}: {}\n", if report.verdict { "yes" } else { "no" });
    if let Some(w) = describe(&report.witness) {
        text += &format!("witness: {w}\n");
    }
    let code = if report.verdict { EXIT_YES } else { EXIT_NO };
    Ok(Outcome::out(code, text))
}

fn describe(witness: &Witness) -> Option<String> {
    let pairs = |edges: &[(usize, usize)]| {
        edges
            .iter()
            .map(|(a, b)| format!("{}-{}", a + 1, b + 1))
            .collect::<Vec<_>>()
            .join(" ")
    };
    Some(match witness {
        Witness::None => return None,
        Witness::Ordering(sigma) => format!("perfect elimination ordering {}", one_based(sigma)),
        Witness::Mno(mno) => format!(
            "maximum neighborhood ordering {} with maximum neighbors {}",
            one_based(&mno.sigma),
            one_based(
                &mno.sigma
                    .iter()
                    .map(|&v| mno.max_neighbor[v])
                    .collect::<Vec<_>>()
            )
        ),
        Witness::JoinTree(JoinTree { edges, .. }) => {
            format!("join tree on hyperedges {}", pairs(edges))
        }
        Witness::UnderlyingTree(edges) => format!("tree {}", pairs(edges)),
        Witness::Hole(cycle) => format!("chordless cycle {}", one_based(cycle)),
        Witness::LineGraphHole(cycle) => {
            format!("chordless cycle of hyperedges {}", one_based(cycle))
        }
        Witness::HellyViolation(t) => format!("vertex triple {}", one_based(t)),
        Witness::NonConformalTriple(t) => format!("hyperedge triple {}", one_based(t)),
        Witness::GyoResidue(h) => format!(
            "GYO residue {}",
            h.edges()
                .iter()
                .map(|e| format!("{{{}}}", one_based(e)))
                .collect::<Vec<_>>()
                .join(" ")
        ),
        Witness::MnoObstruction(rest) => format!("stuck on vertices {}", one_based(rest)),
    })
}

fn exit_for(status: Status) -> i32 {
    match status {
        Status::Solution => EXIT_YES,
        Status::Infeasible => EXIT_NO,
        Status::ResourceLimited => EXIT_LIMITED,
    }
}

/// Solves one parsed instance and builds its report.
pub fn solve_instance(
    problem: Problem,
    method: MethodChoice,
    parsed: &Parsed<Instance>,
) -> Result<RunReport, Failure> {
    let start = Instant::now();
    let inst = &parsed.value;
    let (status, certificate, used, weight_check) = match (problem, inst) {
        (Problem::Ed, Instance::Graph(g)) => ed_report(solve_ed(g, method)?),
        (Problem::Ed, Instance::Hypergraph(h)) => ed_report(solve_hyper_ed(h, method)?),
        (Problem::Eed, Instance::Graph(g)) => {
            let c = solve_eed(g, method)?;
            let check = WeightCheck {
                sum: c.weight_sum,
                target: c.target,
            };
            (
                c.status,
                from_zero_based_edges(&c.edges),
                c.method,
                Some(check),
            )
        }
        (Problem::Eed, Instance::Hypergraph(h)) => ed_report(solve_hyper_eed(h, method)?),
        (Problem::Mim, Instance::Graph(g)) => {
            let c = solve_mim(g, method)?;
            (c.status, from_zero_based_edges(&c.matching), c.method, None)
        }
        (Problem::Mim, Instance::Hypergraph(h)) => {
            let c = solve_hyper_mim(h, method)?;
            (c.status, from_zero_based(&c.matching), c.method, None)
        }
        (Problem::Xc, Instance::Graph(_)) => {
            return Err(Failure::input("xc needs a hypergraph file"));
        }
        (Problem::Xc, Instance::Hypergraph(h)) => {
            let c = solve_exact_cover(h, method)?;
            let check = WeightCheck {
                sum: c.covered_count,
                target: c.target,
            };
            (c.status, from_zero_based(&c.cover), c.method, Some(check))
        }
    };
    Ok(RunReport {
        problem: problem.as_str().to_string(),
        status,
        certificate: (status == Status::Solution).then_some(certificate),
        method: used.as_str().to_string(),
        weight_check: (status != Status::ResourceLimited)
            .then_some(weight_check)
            .flatten(),
        time_ms: start.elapsed().as_secs_f64() * 1e3,
        warnings: parsed.warnings.clone(),
    })
}

fn ed_report(c: EdCertificate) -> (Status, report::Certificate, Method, Option<WeightCheck>) {
    let check = WeightCheck {
        sum: c.weight_sum,
        target: c.target,
    };
    (c.status, from_zero_based(&c.set), c.method, Some(check))
}

fn render(report: &RunReport, json: bool) -> String {
    if json {
        serde_json::to_string_pretty(report).expect("reports serialize") + "\n"
    } else {
        report.to_text()
    }
}

fn solve_file(
    problem: Problem,
    method: MethodChoice,
    json: bool,
    path: &Path,
    write_certificate: Option<&Path>,
) -> Result<Outcome, Failure> {
    let parsed = load(path)?;
    let report = solve_instance(problem, method, &parsed)?;
    if let (Some(out), Some(cert)) = (write_certificate, &report.certificate) {
        std::fs::write(out, report::to_line(cert) + "\n")
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", out.display())))?;
    }
    Ok(Outcome::out(exit_for(report.status), render(&report, json)))
}

#[derive(Debug, Serialize)]
struct BatchEntry {
    file: String,
    #[serde(flatten)]
    result: BatchResult,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
enum BatchResult {
    Report(RunReport),
    Error { error: String, exit_code: i32 },
}

/// Solves every regular file in `dir` (sorted by name) on `jobs` threads.
/// The exit code is the largest over all instances.
fn solve_dir(
    problem: Problem,
    method: MethodChoice,
    json: bool,
    dir: &Path,
    jobs: usize,
) -> Result<Outcome, Failure> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();

    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<(i32, BatchEntry)>>> =
        Mutex::new((0..files.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..jobs.max(1).min(files.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(path) = files.get(i) else { break };
                let outcome = load(path).and_then(|p| solve_instance(problem, method, &p));
                let (code, result) = match outcome {
                    Ok(r) => (exit_for(r.status), BatchResult::Report(r)),
                    Err(f) => (
                        f.code,
                        BatchResult::Error {
                            error: f.message,
                            exit_code: f.code,
                        },
                    ),
                };
                let entry = BatchEntry {
                    file: path.display().to_string(),
                    result,
                };
                results.lock().expect("no panics while holding the lock")[i] = Some((code, entry));
            });
        }
    });

    let results: Vec<(i32, BatchEntry)> = results
        .into_inner()
        .expect("workers finished")
        .into_iter()
        .map(|r| r.expect("every file processed"))
        .collect();
    let code = results.iter().map(|(c, _)| *c).max().unwrap_or(EXIT_YES);
    let entries: Vec<&BatchEntry> = results.iter().map(|(_, e)| e).collect();
    let text = if json {
        serde_json::to_string_pretty(&entries).expect("reports serialize") + "\n"
    } else {
        let mut text = String::new();
        for e in entries {
            text += &format!("== {}\n", e.file);
            match &e.result {
                BatchResult::Report(r) => text += &r.to_text(),
                BatchResult::Error { error, .. } => text += &format!("error: {error}\n"),
            }
        }
        text
    };
    Ok(Outcome::out(code, text))
}

fn verify(problem: Problem, cert_path: &Path, path: &Path) -> Result<Outcome, Failure> {
    let inst = load(path)?.value;
    let text = read(cert_path)?;
    let bad_cert = |e: String| Failure::input(format!("{}: {e}", cert_path.display()));
    let valid = match (problem, &inst) {
        (Problem::Ed, Instance::Graph(g)) => {
            verify_ed(g, &parse_indices(&text).map_err(bad_cert)?)?
        }
        (Problem::Ed, Instance::Hypergraph(h)) => {
            verify_ed(&two_section(h), &parse_indices(&text).map_err(bad_cert)?)?
        }
        (Problem::Eed, Instance::Graph(g)) => {
            verify_eed(g, &parse_edges(&text).map_err(bad_cert)?)?
        }
        (Problem::Eed, Instance::Hypergraph(h)) => {
            verify_hyper_eed(h, &parse_indices(&text).map_err(bad_cert)?)?
        }
        (Problem::Mim, Instance::Graph(g)) => {
            verify_mim(g, &parse_edges(&text).map_err(bad_cert)?)?
        }
        (Problem::Mim, Instance::Hypergraph(h)) => {
            verify_hyper_mim(h, &parse_indices(&text).map_err(bad_cert)?)?
        }
        (Problem::Xc, Instance::Graph(_)) => {
            return Err(Failure::input("xc needs a hypergraph file"))
        }
        (Problem::Xc, Instance::Hypergraph(h)) => {
            verify_exact_cover(h, &parse_indices(&text).map_err(bad_cert)?)?
        }
    };
    let (code, word) = if valid {
        (EXIT_YES, "valid")
    } else {
        (EXIT_NO, "invalid")
    };
    Ok(Outcome::out(
        code,
        format!("{}: {word}\n", problem.as_str()),
    ))
}

fn generate(
    class: GenerateClass,
    n: usize,
    m: Option<usize>,
    seed: u64,
    output: Option<&Path>,
) -> Result<Outcome, Failure> {
    let m = m.unwrap_or(n);
    if n == 0 {
        return Err(Failure::input("--n must be at least 1"));
    }
    if m == 0 && class != GenerateClass::Chordal {
        return Err(Failure::input("--m must be at least 1"));
    }
    let text = match class {
        GenerateClass::Chordal => write_graph(&gen_chordal(n, seed)),
        GenerateClass::DuallyChordal => write_graph(&gen_dually_chordal(n, m, seed)),
        GenerateClass::Hypertree => write_hypergraph(&gen_hypertree(n, m, seed)),
        GenerateClass::AlphaAcyclic => write_hypergraph(&gen_alpha_acyclic(n, m, seed)),
    };
    match output {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))?;
            Ok(Outcome::out(EXIT_YES, String::new()))
        }
        None => Ok(Outcome::out(EXIT_YES, text)),
    }
}
