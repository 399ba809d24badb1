//! Command-line surface.
//!
//! Every command prints one JSON object on stdout. Exit codes: 0 when the
//! relation holds or the certificate is valid, 1 when it fails or is invalid,
//! 2 on usage, parse, I/O or resource-cap errors.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use partrel_core::arrows::{decide, ramsey_number, DecisionOutcome};
use partrel_core::connectivity::{is_highly_connected, kappa_connected_fast};
use partrel_core::generators::{constant_coloring, delta_coloring, hub_coloring, random_coloring};
use partrel_core::ordinals::ClubSystem;
use partrel_core::wellconn::{is_wc_set, wc_pair};
use partrel_core::{Coloring, Mode, Palette, RelationQuery};
use serde::Serialize;

use crate::certfile::CertificateFile;
use crate::formats::{read_coloring, read_graph, write_coloring};
use crate::verify::{verify, Expectations};

#[derive(Debug, Parser)]
#[command(name = "partrel", version, about = "Decide and certify finite partition relations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated coloring file
    Gen(GenArgs),
    /// Decide a relation instance for a coloring file
    Decide(DecideArgs),
    /// Least n at which every coloring satisfies the relation
    Ramsey(RamseyArgs),
    /// Re-check a certificate against a coloring file
    Verify(VerifyArgs),
    /// Check kappa-connectivity of a graph file
    CheckConn(CheckConnArgs),
    /// Check that a vertex set is well-connected in a palette
    CheckWc(CheckWcArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GenKind {
    Random,
    Constant,
    Delta,
    Csystem,
    Hub,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Classical,
    Hc,
    Wc,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Classical => Mode::Classical,
            ModeArg::Hc => Mode::Hc,
            ModeArg::Wc => Mode::Wc,
        }
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub kind: GenKind,
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of colors (lambda)
    #[arg(long)]
    pub colors: Option<u32>,
    /// Color used by `constant`
    #[arg(long, default_value_t = 0)]
    pub color: u32,
    /// String length for `delta`
    #[arg(long)]
    pub len: Option<u32>,
    /// Exponent bound d for `csystem`
    #[arg(long)]
    pub dim: Option<u32>,
    #[arg(long)]
    pub coeff_max: Option<u64>,
    /// Universe size for `csystem`
    #[arg(long)]
    pub size: Option<usize>,
    #[arg(long)]
    pub n0: Option<usize>,
    #[arg(long)]
    pub n1: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct DecideArgs {
    pub coloring: PathBuf,
    #[arg(long)]
    pub mode: ModeArg,
    #[arg(long)]
    pub m: usize,
    /// Palette budget kappa: palettes of at most this many colors
    #[arg(long, default_value_t = 1)]
    pub palette_size: usize,
    /// Connectivity demand for `hc` (defaults to m)
    #[arg(long)]
    pub j: Option<usize>,
    /// Also write the certificate to this file
    #[arg(long)]
    pub cert_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RamseyArgs {
    #[arg(long)]
    pub mode: ModeArg,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub colors: u32,
    #[arg(long, default_value_t = 1)]
    pub palette_size: usize,
    #[arg(long)]
    pub j: Option<usize>,
    #[arg(long)]
    pub max_n: usize,
    /// Stop with an error after examining this many colorings
    #[arg(long)]
    pub cap: Option<u64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub certificate: PathBuf,
    pub coloring: PathBuf,
    /// Require |X| = m
    #[arg(long)]
    pub m: Option<usize>,
    /// Require |Lambda| <= palette-size
    #[arg(long)]
    pub palette_size: Option<usize>,
    /// Require certified connectivity >= j (hc)
    #[arg(long)]
    pub j: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CheckConnArgs {
    pub graph: PathBuf,
    #[arg(long)]
    pub kappa: usize,
}

#[derive(Debug, Args)]
pub struct CheckWcArgs {
    pub coloring: PathBuf,
    /// Comma-separated ascending vertices
    #[arg(long)]
    pub set: String,
    /// Comma-separated colors; empty for the empty palette
    #[arg(long, allow_hyphen_values = true)]
    pub palette: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn json(code: i32, payload: &impl Serialize) -> Self {
        let mut stdout = serde_json::to_string(payload).expect("payload serializes");
        stdout.push('\n');
        CommandResult { code, stdout, stderr: String::new() }
    }

    fn error(msg: String) -> Self {
        #[derive(Serialize)]
        struct ErrorOut<'a> {
            error: &'a str,
        }
        let mut out = CommandResult::json(2, &ErrorOut { error: &msg });
        out.stderr = format!("error: {msg}\n");
        out
    }
}

type CmdResult = Result<CommandResult, String>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CommandResult { code, stdout: text, stderr: String::new() }
            } else {
                CommandResult { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(&a),
        Command::Decide(a) => cmd_decide(&a),
        Command::Ramsey(a) => cmd_ramsey(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::CheckConn(a) => cmd_check_conn(&a),
        Command::CheckWc(a) => cmd_check_wc(&a),
    };
    result.unwrap_or_else(CommandResult::error)
}

fn read_text(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_text(path: &Path, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_coloring(path: &Path) -> Result<Coloring, String> {
    read_coloring(&read_text(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T, String> {
    value.ok_or_else(|| format!("--{flag} is required for this generator"))
}

fn cmd_gen(a: &GenArgs) -> CmdResult {
    #[derive(Serialize)]
    struct GenOut {
        kind: &'static str,
        n: usize,
        lambda: u32,
        seed: u64,
        out: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        universe: Option<Vec<String>>,
    }
    let mut universe = None;
    let (kind, coloring) = match a.kind {
        GenKind::Random => ("random", random_coloring(need(a.n, "n")?, need(a.colors, "colors")?, a.seed)),
        GenKind::Constant => ("constant", constant_coloring(need(a.n, "n")?, a.color, need(a.colors, "colors")?)),
        GenKind::Delta => ("delta", delta_coloring(need(a.len, "len")?)),
        GenKind::Hub => ("hub", hub_coloring(need(a.n0, "n0")?, need(a.n1, "n1")?)),
        GenKind::Csystem => {
            let sys = ClubSystem::new(need(a.dim, "dim")?).map_err(|e| e.to_string())?;
            let points = sys
                .sample_universe(need(a.coeff_max, "coeff-max")?, need(a.size, "size")?, a.seed)
                .map_err(|e| e.to_string())?;
            universe = Some(points.iter().map(ToString::to_string).collect());
            ("csystem", sys.coloring(&points))
        }
    };
    let coloring = coloring.map_err(|e| e.to_string())?;
    write_text(&a.out, &write_coloring(&coloring))?;
    Ok(CommandResult::json(
        0,
        &GenOut {
            kind,
            n: coloring.n(),
            lambda: coloring.lambda(),
            seed: a.seed,
            out: a.out.display().to_string(),
            universe,
        },
    ))
}

#[derive(Serialize)]
struct ExhaustedOut {
    #[serde(rename = "Lambda")]
    palette: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    best: Option<usize>,
}

#[derive(Serialize)]
struct DecideOut {
    verdict: &'static str,
    mode: &'static str,
    m: usize,
    kappa: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateFile>,
    exhausted: Vec<ExhaustedOut>,
}

fn decide_out(query: &RelationQuery, outcome: &DecisionOutcome) -> DecideOut {
    DecideOut {
        verdict: if outcome.holds() { "holds" } else { "fails" },
        mode: query.mode.name(),
        m: query.m,
        kappa: query.kappa,
        j: (query.mode == Mode::Hc).then_some(query.j),
        certificate: outcome.certificate.as_ref().map(CertificateFile::from),
        exhausted: outcome
            .exhausted
            .iter()
            .map(|r| ExhaustedOut { palette: r.palette.to_vec(), best: r.best })
            .collect(),
    }
}

fn query_from(mode: ModeArg, m: usize, kappa: usize, j: Option<usize>) -> RelationQuery {
    RelationQuery { mode: mode.into(), m, kappa, j: j.unwrap_or(m) }
}

fn cmd_decide(a: &DecideArgs) -> CmdResult {
    let coloring = load_coloring(&a.coloring)?;
    let query = query_from(a.mode, a.m, a.palette_size, a.j);
    let outcome = decide(&coloring, &query).map_err(|e| e.to_string())?;
    let out = decide_out(&query, &outcome);
    if let (Some(path), Some(cert)) = (&a.cert_out, &out.certificate) {
        write_text(path, &format!("{}\n", cert.to_json()))?;
    }
    Ok(CommandResult::json(if outcome.holds() { 0 } else { 1 }, &out))
}

fn cmd_ramsey(a: &RamseyArgs) -> CmdResult {
    #[derive(Serialize)]
    struct RamseyOut {
        mode: &'static str,
        m: usize,
        colors: u32,
        kappa: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        j: Option<usize>,
        max_n: usize,
        threshold: Option<usize>,
        extremal: String,
        colorings_checked: u64,
    }
    let query = query_from(a.mode, a.m, a.palette_size, a.j);
    let outcome = ramsey_number(&query, a.colors, a.max_n, a.cap).map_err(|e| e.to_string())?;
    let out = RamseyOut {
        mode: query.mode.name(),
        m: query.m,
        colors: a.colors,
        kappa: query.kappa,
        j: (query.mode == Mode::Hc).then_some(query.j),
        max_n: a.max_n,
        threshold: outcome.threshold,
        extremal: write_coloring(&outcome.extremal),
        colorings_checked: outcome.colorings_checked,
    };
    Ok(CommandResult::json(if out.threshold.is_some() { 0 } else { 1 }, &out))
}

fn cmd_verify(a: &VerifyArgs) -> CmdResult {
    #[derive(Serialize)]
    struct VerifyOut {
        valid: bool,
        kind: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        violation: Option<String>,
    }
    let cert = CertificateFile::from_json(&read_text(&a.certificate)?)
        .map_err(|e| format!("{}: {e}", a.certificate.display()))?;
    let coloring = load_coloring(&a.coloring)?;
    let expect = Expectations { m: a.m, kappa: a.palette_size, j: a.j };
    let verdict = verify(&cert, &coloring, &expect);
    let out = VerifyOut {
        valid: verdict.is_ok(),
        kind: cert.kind.clone(),
        violation: verdict.as_ref().err().map(ToString::to_string),
    };
    let mut result = CommandResult::json(if out.valid { 0 } else { 1 }, &out);
    if let Err(v) = verdict {
        result.stderr = format!("invalid certificate: {v}\n");
    }
    Ok(result)
}

fn cmd_check_conn(a: &CheckConnArgs) -> CmdResult {
    #[derive(Serialize)]
    struct ConnOut {
        n: usize,
        edges: usize,
        kappa: usize,
        kappa_connected: bool,
        highly_connected: bool,
    }
    if a.kappa == 0 {
        return Err("--kappa must be at least 1".into());
    }
    let text = read_text(&a.graph)?;
    let g = read_graph(&text).map_err(|e| format!("{}: {e}", a.graph.display()))?;
    let out = ConnOut {
        n: g.order(),
        edges: g.edge_count(),
        kappa: a.kappa,
        kappa_connected: kappa_connected_fast(&g, a.kappa),
        highly_connected: is_highly_connected(&g),
    };
    Ok(CommandResult::json(if out.kappa_connected { 0 } else { 1 }, &out))
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| format!("bad {what} entry `{s}`")))
        .collect()
}

fn cmd_check_wc(a: &CheckWcArgs) -> CmdResult {
    #[derive(Serialize)]
    struct WcOut {
        well_connected: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        certificate: Option<CertificateFile>,
        #[serde(skip_serializing_if = "Option::is_none")]
        failing_pair: Option<[usize; 2]>,
    }
    let coloring = load_coloring(&a.coloring)?;
    let x: Vec<usize> = parse_list(&a.set, "--set")?;
    let colors: Vec<u32> = parse_list(&a.palette, "--palette")?;
    if colors.iter().any(|&c| c >= 64) {
        return Err("palette colors must be below 64".into());
    }
    let palette = Palette::from_colors(&colors);
    let cert = is_wc_set(&coloring, &x, &palette).map_err(|e| e.to_string())?;
    let failing_pair = match cert {
        Some(_) => None,
        None => x
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| x[i + 1..].iter().map(move |&q| (p, q)))
            .find(|&(p, q)| matches!(wc_pair(&coloring, p, q, palette.members()), Ok(None)))
            .map(|(p, q)| [p, q]),
    };
    let out = WcOut {
        well_connected: cert.is_some(),
        certificate: cert.map(|c| CertificateFile::from(&partrel_core::Certificate::Wc(c))),
        failing_pair,
    };
    Ok(CommandResult::json(if out.well_connected { 0 } else { 1 }, &out))
}
