//! Command-line front end.
//!
//! Exit codes: 0 clean, 1 usage or I/O error, 2 conjecture violation,
//! 3 theorem violation.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use sqenergy::conjecture::{run_check, CheckId, Universe};
use sqenergy::enumerate::{all_graphs, connected_graphs};
use sqenergy::gluing::{glue, Attachment, GluingSpec, Preset};
use sqenergy::invariants::invariants;
use sqenergy::spectral::{graph_energies, zero_tol_factor, EIG_TOL_ENV};
use sqenergy::sweep::{run_sweep, SweepTarget};
use sqenergy::{graph6, Error, FamilySpec, Graph};

const DESK_MAX_N: usize = 8;

#[derive(Parser)]
#[command(name = "sqenergy", version, about = "Square energies of graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Graph in graph6.
    #[arg(long)]
    graph6: Option<String>,
    /// Family spec such as `cycle(5)` or `join(cycle(4),empty(2))`.
    #[arg(long)]
    family: Option<String>,
    /// graph6 file, one graph per line.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Spectrum, inertia and square energies as JSON.
    Energy(Source),
    /// Exact invariants as JSON.
    Invariants(Source),
    /// Check a conjecture or the theorem suite over all connected graphs.
    Check {
        #[arg(long)]
        conjecture: String,
        #[arg(long, default_value_t = DESK_MAX_N)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        /// Check the graphs of a graph6 file instead of enumerating.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Allow orders above 8.
        #[arg(long)]
        deep: bool,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Include wall time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Gluing lower bound against the true s+.
    Gluing {
        /// fig1, case1, ga, gb, gt2 or gt3.
        #[arg(long, conflicts_with = "spec", required_unless_present = "spec")]
        preset: Option<String>,
        /// Path length parameter of the gt2/gt3 bases.
        #[arg(long)]
        t: Option<usize>,
        /// Order of the path glued at every marked vertex [default: 10 for
        /// gt3, 5 otherwise].
        #[arg(long)]
        attach: Option<usize>,
        /// JSON gluing spec.
        #[arg(long)]
        spec: Option<PathBuf>,
    },
    /// Parameter sweep as CSV.
    Sweep {
        /// path-endpoint, path-offdiag, gt2, gt3, p3-ineq, cycle-closed-form or family:NAME.
        #[arg(long)]
        target: String,
        /// Inclusive range `A:B`.
        #[arg(long)]
        range: String,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Write every graph of an order in graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        output: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Lib(e.into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Failure {
        Failure::Lib(e.into())
    }
}

type Run = std::result::Result<u8, Failure>;

fn load(src: &Source) -> std::result::Result<Vec<Graph>, Failure> {
    if let Some(s) = &src.graph6 {
        Ok(vec![graph6::decode(s)?])
    } else if let Some(s) = &src.family {
        Ok(vec![s.parse::<FamilySpec>()?.build()?])
    } else if let Some(p) = &src.file {
        Ok(graph6::read_file(p)?)
    } else {
        Err(Failure::Usage("one of --graph6, --family, --file is required".into()))
    }
}

/// Writes a line to stdout; a closed pipe is not an error.
fn emit(text: &str) -> std::result::Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}").and_then(|_| out.flush()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn print_json(v: &impl Serialize) -> Run {
    emit(&serde_json::to_string_pretty(v)?)?;
    Ok(0)
}

fn header() -> serde_json::Value {
    json!({ "zeroTolFactor": zero_tol_factor(), "eigTolEnv": std::env::var(EIG_TOL_ENV).ok() })
}

fn energy(src: &Source) -> Run {
    let graphs = load(src)?;
    let mut out = Vec::new();
    for g in &graphs {
        let e = graph_energies(g)?;
        out.push(json!({
            "graph6": graph6::encode(g),
            "n": g.n(),
            "m": g.m(),
            "spectrum": e.eigenvalues,
            "inertia": e.inertia,
            "sPlus": e.s_plus,
            "sMinus": e.s_minus,
            "zeroTol": e.zero_tol,
        }));
    }
    let body = if src.file.is_some() { json!(out) } else { out.pop().expect("one graph") };
    print_json(&json!({ "header": header(), "result": body }))
}

fn invariants_cmd(src: &Source) -> Run {
    let graphs = load(src)?;
    let sets: Vec<_> = graphs.iter().map(invariants).collect();
    if src.file.is_some() {
        print_json(&sets)
    } else {
        print_json(&sets[0])
    }
}

#[allow(clippy::too_many_arguments)]
fn check(id: &str, min_n: usize, max_n: usize, file: Option<&PathBuf>, deep: bool, json_out: Option<&PathBuf>, csv_out: Option<&PathBuf>, timing: bool) -> Run {
    let id = CheckId::from_name(id).ok_or_else(|| Failure::Usage(format!("unknown conjecture `{id}`")))?;
    let universe = match file {
        Some(p) => Universe::from_file(p)?,
        None => {
            if max_n > DESK_MAX_N && !deep {
                return Err(Failure::Usage(format!("--max-n {max_n} exceeds {DESK_MAX_N}; pass --deep")));
            }
            Universe::Connected { n_min: min_n, n_max: max_n }
        }
    };
    let report = run_check(id, &universe, timing)?;
    let text = serde_json::to_string_pretty(&report)?;
    match json_out {
        Some(p) => std::fs::write(p, text + "\n")?,
        None => emit(&text)?,
    }
    if let Some(p) = csv_out {
        report.write_csv(BufWriter::new(File::create(p)?))?;
    }
    eprintln!(
        "{}: {} graphs, {} violations",
        report.conjecture_id,
        report.graphs_checked,
        report.violations.len()
    );
    Ok(match (report.clean(), id.is_theorem()) {
        (true, _) => 0,
        (false, false) => 2,
        (false, true) => 3,
    })
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct SpecFile {
    base: String,
    glue_points: Vec<usize>,
    attachments: Vec<AttachmentFile>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AttachmentFile {
    graph: String,
    vertex: usize,
    shift: Option<f64>,
}

/// A family spec, or graph6 when it does not parse as one.
fn graph_from_str(s: &str) -> std::result::Result<Graph, Failure> {
    match s.parse::<FamilySpec>() {
        Ok(spec) => Ok(spec.build()?),
        Err(_) => Ok(graph6::decode(s)?),
    }
}

fn gluing(preset: Option<&str>, t: Option<usize>, attach: Option<usize>, spec: Option<&PathBuf>) -> Run {
    let (name, gspec) = match (preset, spec) {
        (Some(p), _) => {
            let preset = Preset::from_name(p).ok_or_else(|| Failure::Usage(format!("unknown preset `{p}`")))?;
            let (t, attach) = match preset {
                Preset::Gt3 => (t.unwrap_or(10), attach.unwrap_or(10)),
                _ => (t.unwrap_or(2), attach.unwrap_or(5)),
            };
            (format!("{p} t={t} attach={attach}"), preset.gluing(t, attach)?)
        }
        (None, Some(path)) => {
            let f: SpecFile = serde_json::from_reader(File::open(path)?)?;
            let attachments = f
                .attachments
                .iter()
                .map(|a| {
                    let g = graph_from_str(&a.graph)?;
                    let at = Attachment::new(g, a.vertex);
                    Ok(match a.shift {
                        Some(s) => at.with_shift(s),
                        None => at,
                    })
                })
                .collect::<std::result::Result<_, Failure>>()?;
            let spec = GluingSpec {
                base: graph_from_str(&f.base)?,
                glue_points: f.glue_points,
                attachments,
            };
            (path.display().to_string(), spec)
        }
        (None, None) => return Err(Failure::Usage("one of --preset, --spec is required".into())),
    };
    let glued = glue(&gspec)?;
    let bound = glued.bound()?;
    let sound = bound.margin >= -1e-7;
    print_json(&json!({
        "header": header(),
        "source": name,
        "graph6": graph6::encode(&glued.graph),
        "bound": bound,
        "sound": sound,
    }))?;
    Ok(if sound { 0 } else { 3 })
}

fn sweep(target: &str, range: &str, csv_out: Option<&PathBuf>) -> Run {
    let t = SweepTarget::parse(target).ok_or_else(|| Failure::Usage(format!("unknown sweep target `{target}`")))?;
    let (a, b) = range
        .split_once(':')
        .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
        .ok_or_else(|| Failure::Usage(format!("range must look like A:B, got `{range}`")))?;
    let table = run_sweep(t, a, b)?;
    match csv_out {
        Some(p) => table.write_csv(BufWriter::new(File::create(p)?))?,
        None => match table.write_csv(std::io::stdout().lock()) {
            Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
            r => r?,
        },
    }
    eprintln!("{target}: {} rows, {} failures", table.rows.len(), table.failures);
    Ok(match (table.failures, t.failure_is_bug()) {
        (0, _) => 0,
        (_, false) => 2,
        (_, true) => 3,
    })
}

fn enumerate(n: usize, connected: bool, output: &PathBuf) -> Run {
    let graphs = if connected { connected_graphs(n)? } else { all_graphs(n)? };
    let mut w = BufWriter::new(File::create(output)?);
    graph6::write_all(&mut w, &graphs)?;
    w.flush()?;
    emit(&graphs.len().to_string())?;
    Ok(0)
}

fn run(cli: Cli) -> Run {
    match &cli.cmd {
        Cmd::Energy(src) => energy(src),
        Cmd::Invariants(src) => invariants_cmd(src),
        Cmd::Check {
            conjecture,
            max_n,
            min_n,
            file,
            deep,
            json,
            csv,
            timing,
        } => check(conjecture, *min_n, *max_n, file.as_ref(), *deep, json.as_ref(), csv.as_ref(), *timing),
        Cmd::Gluing { preset, t, attach, spec } => gluing(preset.as_deref(), *t, *attach, spec.as_ref()),
        Cmd::Sweep { target, range, csv } => sweep(target, range, csv.as_ref()),
        Cmd::Enumerate { n, connected, output } => enumerate(*n, *connected, output),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
