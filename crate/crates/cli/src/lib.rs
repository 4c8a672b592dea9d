//! Command implementations for the `stau` binary. Each command writes to the
//! supplied streams and returns the process exit code, so the whole surface
//! can be driven from tests.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use stau_core::brauer::{
    brauer_cycle_rsz, brauer_line_rsz, catalan_identities, composition_sums, cycle_count, line_count,
    verify_identities_with, CompositionSum, IdentityCheck,
};
use stau_core::signdec::{infinite_witness, signdec_table};
use stau_core::{count_stau, glued_hasse, parse_quiver, Count, Error, GluedHasse, ValuedQuiver};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_UNSUPPORTED: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "stau", version, about = "Support tau-tilting theory of radical-square-zero algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide tau-tilting-finiteness.
    Finite { path: PathBuf },
    /// Count support tau-tilting modules.
    Count { path: PathBuf },
    /// Show the sign-decomposition.
    Signdec {
        path: PathBuf,
        /// One row per sign vector instead of a summary.
        #[arg(long)]
        per_epsilon: bool,
    },
    /// Print the Hasse quiver of support tau-tilting modules.
    Hasse {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Brauer line / cycle algebras.
    Brauer(BrauerArgs),
    /// Check the Catalan and composition-sum identities.
    Identities {
        #[arg(long = "max-n", default_value_t = 12)]
        max_n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BrauerKind {
    Line,
    Cycle,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["emit_quiver", "verify"])))]
pub struct BrauerArgs {
    #[arg(value_enum)]
    pub kind: BrauerKind,
    pub n: usize,
    /// Write the radical-square-zero quiver in the quiver file format.
    #[arg(long)]
    pub emit_quiver: bool,
    /// Compare the computed count with the closed formula.
    #[arg(long)]
    pub verify: bool,
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match &cli.command {
        Command::Finite { path } => load(path).and_then(|q| cmd_finite(&q, out)),
        Command::Count { path } => load(path).and_then(|q| cmd_count(&q, out)),
        Command::Signdec { path, per_epsilon } => load(path).and_then(|q| cmd_signdec(&q, *per_epsilon, out)),
        Command::Hasse { path, format } => load(path).and_then(|q| cmd_hasse(&q, *format, out)),
        Command::Brauer(args) => cmd_brauer(args, out),
        Command::Identities { max_n } => cmd_identities(&composition_sums(*max_n), *max_n, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnsupportedComponent { .. } => EXIT_UNSUPPORTED,
            _ => EXIT_INPUT,
        };
        CliError { code, message: e.to_string() }
    }
}

type CmdResult = Result<u8, CliError>;

pub fn load(path: &Path) -> Result<ValuedQuiver, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    parse_quiver(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

pub fn cmd_finite(q: &ValuedQuiver, out: &mut dyn Write) -> CmdResult {
    match infinite_witness(q)? {
        None => writeln!(out, "finite")?,
        Some((eps, comp)) => {
            let verts: Vec<String> = comp.vertices.iter().map(|v| v.to_string()).collect();
            writeln!(out, "infinite")?;
            writeln!(out, "witness eps={eps} component={{{}}} type={}", verts.join(","), comp.kind)?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_count(q: &ValuedQuiver, out: &mut dyn Write) -> CmdResult {
    writeln!(out, "{}", count_stau(q)?)?;
    Ok(EXIT_OK)
}

pub fn cmd_signdec(q: &ValuedQuiver, per_epsilon: bool, out: &mut dyn Write) -> CmdResult {
    let rows = signdec_table(q)?;
    if per_epsilon {
        writeln!(out, "eps\tcomponents\tcount\ttwo_term")?;
        for row in &rows {
            let comps: Vec<String> = row
                .components
                .iter()
                .map(|c| {
                    let verts: Vec<String> = c.vertices.iter().map(|v| v.to_string()).collect();
                    format!("{}{{{}}}", c.kind, verts.join(","))
                })
                .collect();
            writeln!(out, "{}\t{}\t{}\t{}", row.eps, comps.join(" "), row.count, row.two_term)?;
        }
    } else {
        let infinite = rows.iter().filter(|r| !r.count.is_finite()).count();
        let total: Count = rows.iter().map(|r| r.count.clone()).sum();
        writeln!(out, "sign vectors: {}", rows.len())?;
        writeln!(out, "infinite slices: {infinite}")?;
        writeln!(out, "two-term slices: {}", rows.iter().filter(|r| r.two_term).count())?;
        writeln!(out, "total: {total}")?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct JsonNode {
    id: usize,
    eps: Vec<i8>,
    summand_supports: Vec<Vec<usize>>,
    g: Vec<i64>,
}

#[derive(Serialize)]
struct JsonArrow {
    from: usize,
    to: usize,
    kind: &'static str,
}

#[derive(Serialize)]
struct JsonHasse {
    nodes: Vec<JsonNode>,
    arrows: Vec<JsonArrow>,
}

pub fn hasse_json(h: &GluedHasse) -> String {
    let doc = JsonHasse {
        nodes: h
            .nodes
            .iter()
            .enumerate()
            .map(|(id, n)| JsonNode {
                id,
                eps: n.eps.as_slice().to_vec(),
                summand_supports: n.tilt.summands().iter().map(|m| m.support().to_vec()).collect(),
                g: n.g.clone(),
            })
            .collect(),
        arrows: h
            .arrows
            .iter()
            .map(|a| JsonArrow { from: a.from, to: a.to, kind: a.kind.as_str() })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

fn tuple(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn hasse_dot(h: &GluedHasse) -> String {
    let mut s = String::from("digraph stau {\n  node [shape=box];\n");
    for (id, n) in h.nodes.iter().enumerate() {
        let _ = writeln!(s, "  n{id} [label=\"eps={}\\ng={}\"];", n.eps, tuple(&n.g));
    }
    for a in &h.arrows {
        match a.kind {
            stau_core::ArrowKind::Internal => {
                let _ = writeln!(s, "  n{} -> n{};", a.from, a.to);
            }
            stau_core::ArrowKind::Gluing => {
                let _ = writeln!(s, "  n{} -> n{} [style=dashed];", a.from, a.to);
            }
        }
    }
    s.push_str("}\n");
    s
}

pub fn cmd_hasse(q: &ValuedQuiver, format: Format, out: &mut dyn Write) -> CmdResult {
    let h = glued_hasse(q)?;
    match format {
        Format::Json => writeln!(out, "{}", hasse_json(&h))?,
        Format::Dot => write!(out, "{}", hasse_dot(&h))?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_brauer(args: &BrauerArgs, out: &mut dyn Write) -> CmdResult {
    let q = match args.kind {
        BrauerKind::Line => brauer_line_rsz(args.n)?,
        BrauerKind::Cycle => brauer_cycle_rsz(args.n)?,
    };
    if args.emit_quiver {
        write!(out, "{}", q.to_file_string())?;
        return Ok(EXIT_OK);
    }
    let got = count_stau(&q)?;
    let want = match args.kind {
        BrauerKind::Line => Count::Finite(line_count(args.n)),
        BrauerKind::Cycle => match cycle_count(args.n) {
            Ok(v) => Count::Finite(v),
            Err(Error::EvenCycle(_)) => Count::Infinite,
            Err(e) => return Err(e.into()),
        },
    };
    match (&got, &want) {
        (Count::Infinite, Count::Infinite) => {
            writeln!(out, "infinite (expected: not tau-tilting-finite)")?;
            Ok(EXIT_OK)
        }
        _ if got == want => {
            writeln!(out, "OK {got}")?;
            Ok(EXIT_OK)
        }
        _ => {
            writeln!(out, "MISMATCH {got} {want}")?;
            Ok(EXIT_VERIFY_FAILED)
        }
    }
}

/// Runs the composition-sum identities against `table` and the Catalan
/// identities up to `max_n`.
pub fn cmd_identities(table: &CompositionSum, max_n: usize, out: &mut dyn Write) -> CmdResult {
    let mut checks: Vec<IdentityCheck> = verify_identities_with(table);
    checks.extend(catalan_identities(max_n));
    writeln!(out, "identity\tn\tlhs\trhs\tresult")?;
    for c in &checks {
        let verdict = if c.passed() { "pass" } else { "FAIL" };
        writeln!(out, "{}\t{}\t{}\t{}\t{verdict}", c.name, c.n, c.lhs, c.rhs)?;
    }
    let failed = checks.iter().filter(|c| !c.passed()).count();
    writeln!(out, "{} checks, {failed} failed", checks.len())?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_VERIFY_FAILED })
}
