//! Command-line front end for the verification toolkit: ingest groups and
//! orders from files or builtins, run the window verifications, classify
//! compatible orders, saturate seed sets, and emit Hasse diagrams.
//!
//! All output is deterministic: nodes and edges are sorted, reports carry no
//! timestamps, and parallel classification reduces to scheduling-independent
//! counts. Exit codes: 0 all checks pass, 1 a verification failed (the
//! report is still emitted), 2 usage or input error.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use alextop::group::{FiniteGroup, GroupFile, BUILTIN_GROUPS};
use alextop::paratopo::{classify, classify_preorders, ClassificationReport};
use alextop::poset::{Poset, PosetFile};
use alextop::theorem::{verify_proposition, verify_theorem, Report};
use alextop::xn::{XnElement, XnGroup};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Groups verified when `verify` is given no `--group`: fibers covering
/// every order in {1, 2, 3, 4, 6}, with both groups of order 4 and 6.
pub const DEFAULT_GROUPS: [&str; 7] = ["trivial", "c2", "c3", "c4", "v4", "c6", "s3"];

/// Largest window radius of the default `verify` sweep.
pub const DEFAULT_MAX_WINDOW: i64 = 5;

#[derive(Parser)]
#[command(
    name = "alextop",
    version,
    about = "Verify order-compatibility facts for Alexandroff topologies on groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HasseFormat {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full verification reports for a group fiber, or sweep the
    /// whole default grid when no group is given
    Verify {
        /// Builtin group name or path to a Cayley JSON file
        #[arg(long)]
        group: Option<String>,
        /// Verify a single window radius (at least 1)
        #[arg(long)]
        window: Option<i64>,
        /// Verify radii 1..=N when no --window is given
        #[arg(long, default_value_t = DEFAULT_MAX_WINDOW)]
        max_window: i64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        /// Write the output to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the Hasse diagram of a window or of a poset file
    Hasse {
        /// Builtin group name or path to a Cayley JSON file
        #[arg(long)]
        group: Option<String>,
        /// Window radius (required with --group)
        #[arg(long)]
        window: Option<i64>,
        /// Path to a poset JSON file instead of a group window
        #[arg(long)]
        poset: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = HasseFormat::Dot)]
        format: HasseFormat,
        /// Mark the minimal open set of this element in red and the set of
        /// its inverses in blue, e.g. --mark-u "(0,1)"
        #[arg(long)]
        mark_u: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify every labeled partial order on a group's carrier
    Classify {
        /// Builtin group name or path to a Cayley JSON file
        #[arg(long)]
        group: String,
        /// Exploratory mode: classify preorders (non-T0 topologies) instead
        #[arg(long)]
        preorders: bool,
        /// Number of parallel workers (0 = automatic)
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Saturate a seed set under minimal-open and minimal-closed propagation
    Saturate {
        /// Builtin group name or path to a Cayley JSON file
        #[arg(long)]
        group: String,
        /// Window radius
        #[arg(long)]
        window: i64,
        /// Seed element such as "(1,0)"; repeatable
        #[arg(long = "seed")]
        seeds: Vec<String>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Show facts about a group table
    Info {
        /// Builtin group name or path to a Cayley JSON file
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses and runs a full invocation, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(outcome) => {
            let mut payload = outcome.payload;
            if !payload.ends_with('\n') {
                payload.push('\n');
            }
            match outcome.out {
                Some(path) => {
                    if let Err(err) = fs::write(&path, payload) {
                        eprintln!("error: cannot write '{}': {err}", path.display());
                        return 2;
                    }
                }
                None => print!("{payload}"),
            }
            if outcome.pass {
                0
            } else {
                1
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

struct Outcome {
    payload: String,
    pass: bool,
    out: Option<PathBuf>,
}

fn execute(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Verify {
            group,
            window,
            max_window,
            format,
            out,
        } => run_verify(group, window, max_window, format).map(|(payload, pass)| Outcome {
            payload,
            pass,
            out,
        }),
        Command::Hasse {
            group,
            window,
            poset,
            format,
            mark_u,
            out,
        } => run_hasse(group, window, poset, format, mark_u).map(|payload| Outcome {
            payload,
            pass: true,
            out,
        }),
        Command::Classify {
            group,
            preorders,
            workers,
            format,
            out,
        } => run_classify(&group, preorders, workers, format).map(|payload| Outcome {
            payload,
            pass: true,
            out,
        }),
        Command::Saturate {
            group,
            window,
            seeds,
            format,
            out,
        } => run_saturate(&group, window, &seeds, format).map(|payload| Outcome {
            payload,
            pass: true,
            out,
        }),
        Command::Info { group, format, out } => run_info(&group, format).map(|payload| Outcome {
            payload,
            pass: true,
            out,
        }),
    }
}

/// Resolves a `--group` value: builtin names take precedence, anything else
/// is read as a Cayley JSON file.
fn load_group(source: &str) -> Result<FiniteGroup, String> {
    if BUILTIN_GROUPS.contains(&source) {
        return FiniteGroup::builtin(source).map_err(|e| e.to_string());
    }
    let text = fs::read_to_string(source).map_err(|e| {
        format!(
            "cannot read group '{source}': {e} (builtins: {})",
            BUILTIN_GROUPS.join(", ")
        )
    })?;
    let file: GroupFile =
        serde_json::from_str(&text).map_err(|e| format!("invalid group file '{source}': {e}"))?;
    FiniteGroup::from_file(&file).map_err(|e| format!("invalid group '{source}': {e}"))
}

#[derive(Serialize)]
struct VerifyOutput {
    reports: Vec<Report>,
    pass: bool,
}

fn run_verify(
    group: Option<String>,
    window: Option<i64>,
    max_window: i64,
    format: ReportFormat,
) -> Result<(String, bool), String> {
    let groups = match group {
        Some(source) => vec![load_group(&source)?],
        None => DEFAULT_GROUPS
            .iter()
            .map(|name| FiniteGroup::builtin(name).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?,
    };
    let radii: Vec<i64> = match window {
        Some(m) if m < 1 => {
            return Err(format!(
                "window radius must be at least 1 for verification, got {m}"
            ))
        }
        Some(m) => vec![m],
        None if max_window < 1 => {
            return Err(format!("max-window must be at least 1, got {max_window}"))
        }
        None => (1..=max_window).collect(),
    };
    let mut reports = Vec::new();
    for g in &groups {
        for &m in &radii {
            reports.push(verify_proposition(g, m).map_err(|e| e.to_string())?);
            reports.push(verify_theorem(g, m).map_err(|e| e.to_string())?);
        }
    }
    let pass = reports.iter().all(|r| r.pass);
    let payload = match format {
        ReportFormat::Json => serde_json::to_string_pretty(&VerifyOutput { reports, pass })
            .expect("reports serialize"),
        ReportFormat::Text => {
            let mut text = String::new();
            for report in &reports {
                text.push_str(&report_text(report));
            }
            text.push_str(if pass { "overall PASS" } else { "overall FAIL" });
            text
        }
    };
    Ok((payload, pass))
}

fn report_text(report: &Report) -> String {
    let radius = match report.parameters.m {
        Some(m) => format!(" m={m}"),
        None => String::new(),
    };
    let mut text = format!(
        "{} group={} n={}{}{}\n",
        report.subject,
        report.parameters.group,
        report.parameters.n,
        radius,
        if report.pass { " PASS" } else { " FAIL" },
    );
    for check in &report.checks {
        text.push_str(&format!(
            "  {} {}\n",
            if check.passed() { "PASS" } else { "FAIL" },
            check.name
        ));
    }
    text
}

struct HasseData {
    nodes: Vec<String>,
    edges: Vec<(String, String)>,
    red: Option<BTreeSet<String>>,
    blue: Option<BTreeSet<String>>,
}

#[derive(Serialize)]
struct HasseOutput {
    nodes: Vec<String>,
    edges: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    red: Option<BTreeSet<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    blue: Option<BTreeSet<String>>,
}

fn run_hasse(
    group: Option<String>,
    window: Option<i64>,
    poset: Option<PathBuf>,
    format: HasseFormat,
    mark_u: Option<String>,
) -> Result<String, String> {
    let data = match (group, poset) {
        (Some(source), None) => {
            let m = window.ok_or("hasse with --group requires --window")?;
            let mark = mark_u.map(|s| s.parse::<XnElement>()).transpose()?;
            window_hasse(&XnGroup::new(load_group(&source)?), m, mark)?
        }
        (None, Some(path)) => {
            if mark_u.is_some() {
                return Err("--mark-u applies only to group windows".to_string());
            }
            if window.is_some() {
                return Err("--window applies only to group windows".to_string());
            }
            let text = fs::read_to_string(&path)
                .map_err(|e| format!("cannot read poset '{}': {e}", path.display()))?;
            let file: PosetFile = serde_json::from_str(&text)
                .map_err(|e| format!("invalid poset file '{}': {e}", path.display()))?;
            let poset = Poset::from_file(&file)
                .map_err(|e| format!("invalid poset '{}': {e}", path.display()))?;
            poset_hasse(&poset)
        }
        _ => return Err("hasse needs exactly one of --group or --poset".to_string()),
    };
    Ok(match format {
        HasseFormat::Dot => to_dot(&data),
        HasseFormat::Json => serde_json::to_string_pretty(&HasseOutput {
            nodes: data.nodes,
            edges: data.edges,
            red: data.red,
            blue: data.blue,
        })
        .expect("diagram serializes"),
    })
}

fn window_hasse(x: &XnGroup, m: i64, mark: Option<XnElement>) -> Result<HasseData, String> {
    let window = x.window(m).map_err(|e| e.to_string())?;
    let poset = x.window_poset(m).map_err(|e| e.to_string())?;
    let name_of = |index: usize| window.element(index).map(|p| p.to_string());
    let mut edges = Vec::new();
    for &(i, j) in poset.covers().edges() {
        edges.push((
            name_of(i).map_err(|e| e.to_string())?,
            name_of(j).map_err(|e| e.to_string())?,
        ));
    }
    let (red, blue) = match mark {
        None => (None, None),
        Some(p) => {
            let red_set = x.u_set(p, m).map_err(|e| e.to_string())?;
            let inverses: BTreeSet<XnElement> = red_set
                .iter()
                .map(|&q| x.inv(q))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            let blue_set: BTreeSet<String> = inverses
                .difference(&red_set)
                .map(ToString::to_string)
                .collect();
            let red_set: BTreeSet<String> = red_set.iter().map(ToString::to_string).collect();
            (Some(red_set), Some(blue_set))
        }
    };
    Ok(HasseData {
        nodes: window.elements().iter().map(ToString::to_string).collect(),
        edges,
        red,
        blue,
    })
}

fn poset_hasse(poset: &Poset) -> HasseData {
    HasseData {
        nodes: (0..poset.size()).map(|i| i.to_string()).collect(),
        edges: poset
            .covers()
            .edges()
            .iter()
            .map(|&(i, j)| (i.to_string(), j.to_string()))
            .collect(),
        red: None,
        blue: None,
    }
}

fn to_dot(data: &HasseData) -> String {
    let mut text = String::from("digraph hasse { rankdir=BT;\n");
    for node in &data.nodes {
        let attributes = if data.red.as_ref().is_some_and(|set| set.contains(node)) {
            " [style=filled, fillcolor=red]"
        } else if data.blue.as_ref().is_some_and(|set| set.contains(node)) {
            " [style=filled, fillcolor=blue]"
        } else {
            ""
        };
        text.push_str(&format!("  \"{node}\"{attributes};\n"));
    }
    for (source, target) in &data.edges {
        text.push_str(&format!("  \"{source}\" -> \"{target}\";\n"));
    }
    text.push_str("}\n");
    text
}

fn run_classify(
    source: &str,
    preorders: bool,
    workers: Option<usize>,
    format: ReportFormat,
) -> Result<String, String> {
    let group = load_group(source)?;
    let classify_group = || {
        if preorders {
            classify_preorders(&group)
        } else {
            classify(&group)
        }
    };
    let report = match workers {
        None => classify_group(),
        Some(count) => rayon::ThreadPoolBuilder::new()
            .num_threads(count)
            .build()
            .map_err(|e| format!("cannot build worker pool: {e}"))?
            .install(classify_group),
    }
    .map_err(|e| e.to_string())?;
    Ok(match format {
        ReportFormat::Json => {
            serde_json::to_string_pretty(&report).expect("classification serializes")
        }
        ReportFormat::Text => classification_text(&report),
    })
}

fn classification_text(report: &ClassificationReport) -> String {
    let mut text = format!(
        "group {}\ntotal_orders {}\nparatopological {}\ntopological {}\n",
        report.group_name, report.total_orders, report.paratopological, report.topological
    );
    for witness in &report.witnesses {
        text.push_str(&format!("witness pairs={:?}\n", witness.leq));
    }
    text
}

#[derive(Serialize)]
struct SaturationOutput {
    group: String,
    n: usize,
    m: i64,
    seed: BTreeSet<XnElement>,
    closure: BTreeSet<XnElement>,
    size: usize,
    fills_window: bool,
}

fn run_saturate(
    source: &str,
    window: i64,
    seeds: &[String],
    format: ReportFormat,
) -> Result<String, String> {
    let x = XnGroup::new(load_group(source)?);
    let seed: BTreeSet<XnElement> = seeds
        .iter()
        .map(|s| s.parse::<XnElement>())
        .collect::<Result<_, _>>()?;
    let closure = x.saturate(&seed, window).map_err(|e| e.to_string())?;
    let full = x.window(window).map_err(|e| e.to_string())?.len();
    let output = SaturationOutput {
        group: x.fiber().name().to_string(),
        n: x.n(),
        m: window,
        size: closure.len(),
        fills_window: closure.len() == full,
        seed,
        closure,
    };
    Ok(match format {
        ReportFormat::Json => serde_json::to_string_pretty(&output).expect("closure serializes"),
        ReportFormat::Text => {
            let list = |set: &BTreeSet<XnElement>| {
                set.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            format!(
                "group {} n={} m={}\nseed: {}\nclosure: {}\nsize: {}\nfills_window: {}",
                output.group,
                output.n,
                output.m,
                list(&output.seed),
                list(&output.closure),
                output.size,
                output.fills_window,
            )
        }
    })
}

#[derive(Serialize)]
struct InfoOutput {
    name: String,
    order: usize,
    abelian: bool,
    inverses: Vec<usize>,
}

fn run_info(source: &str, format: ReportFormat) -> Result<String, String> {
    let group = load_group(source)?;
    let inverses = (0..group.order())
        .map(|x| group.inv(x))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let output = InfoOutput {
        name: group.name().to_string(),
        order: group.order(),
        abelian: group.is_abelian(),
        inverses,
    };
    Ok(match format {
        ReportFormat::Json => serde_json::to_string_pretty(&output).expect("info serializes"),
        ReportFormat::Text => format!(
            "name: {}\norder: {}\nabelian: {}\ninverses: {:?}",
            output.name, output.order, output.abelian, output.inverses
        ),
    })
}
