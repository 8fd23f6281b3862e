//! Command-line front end. Exit codes: 0 success, 1 a checked property
//! failed, 2 usage or input error.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::catalog::{FamilySpec, FAMILY_NAMES};
use crate::graph::Graph;
use crate::graph6;
use crate::perm::{count_double_cosets, enumerate_double_coset_reps};
use crate::report::{AnalysisOptions, Report};
use crate::space::FormKind;
use crate::survey::{self, Scope};
use crate::switching::{build_gamma_phi, pgl_on_hyperplanes, SwitchingPlan};
use crate::symmetry;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "srgkit", version, about = "Strongly regular graphs from finite geometry")]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for the pair loops (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Include wall-clock time in reports.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph from a named family.
    Build(BuildArgs),
    /// Regenerate a table of known examples and compare.
    Survey {
        /// intro-table, cyclotomic, ivanov, switching-32 or all.
        scope: String,
        /// Include rows that take longer than a minute or need much memory.
        #[arg(long)]
        big: bool,
    },
    /// Analyse graph6 input, one graph per line.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
        /// Also scan all lambda- and mu-graphs.
        #[arg(long)]
        local: bool,
        /// Also compute the automorphism group.
        #[arg(long)]
        aut: bool,
    },
    /// Build the switched graph of a plan file.
    Switch {
        #[arg(long)]
        plan: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        aut: bool,
    },
    /// Count double cosets of the collineation group of PG(d-1, q) acting
    /// on hyperplanes.
    Doublecosets {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        q: u32,
        /// List the lexicographically least representatives (at most 10 hyperplanes).
        #[arg(long)]
        reps: bool,
    },
    /// Automorphism group of graph6 input.
    Aut {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    /// polar, no, disjoint-planes, local-delta, delta-bar, hyperoval,
    /// cyclotomic, ivanov-gamma, ivanov-sigma, tee or upsilon.
    #[arg(long)]
    pub family: String,
    /// Parameters as a JSON object; flags override its fields.
    #[arg(long)]
    pub params: Option<String>,
    #[arg(long)]
    pub form: Option<FormKind>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub q: Option<u32>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub eps: Option<i8>,
    #[arg(long)]
    pub e: Option<u32>,
    #[arg(long = "J", value_delimiter = ',')]
    pub classes: Option<Vec<u32>>,
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u32>>,
    #[arg(long)]
    pub eta: Option<u32>,
    /// Write graph6 here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub local: bool,
    #[arg(long)]
    pub aut: bool,
}

impl BuildArgs {
    pub fn spec(&self) -> Result<FamilySpec, String> {
        let mut obj = match &self.params {
            Some(text) => match serde_json::from_str::<serde_json::Value>(text) {
                Ok(serde_json::Value::Object(m)) => m,
                Ok(_) => return Err("--params must be a JSON object".into()),
                Err(e) => return Err(format!("--params: {e}")),
            },
            None => serde_json::Map::new(),
        };
        if !FAMILY_NAMES.contains(&self.family.as_str()) {
            return Err(format!("unknown family {:?}; known: {}", self.family, FAMILY_NAMES.join(", ")));
        }
        obj.insert("family".into(), self.family.clone().into());
        let mut set = |k: &str, v: Option<serde_json::Value>| {
            if let Some(v) = v {
                obj.insert(k.into(), v);
            }
        };
        set("form", self.form.map(|f| f.to_string().into()));
        set("d", self.d.map(Into::into));
        set("q", self.q.map(Into::into));
        set("m", self.m.map(Into::into));
        set("eps", self.eps.map(Into::into));
        set("e", self.e.map(Into::into));
        set("J", self.classes.clone().map(Into::into));
        set("modulus", self.modulus.clone().map(Into::into));
        set("eta", self.eta.map(Into::into));
        serde_json::from_value(serde_json::Value::Object(obj)).map_err(|e| format!("{}: {e}", self.family))
    }
}

/// Outcome of a command: exit code plus what to print.
struct Outcome {
    code: i32,
    text: String,
}

fn usage(msg: impl std::fmt::Display) -> Outcome {
    Outcome { code: EXIT_USAGE, text: format!("error: {msg}\n") }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes") + "\n"
}

fn read_graphs(path: &Path) -> Result<Vec<Graph>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let graphs: Result<Vec<Graph>, String> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| graph6::decode(l.trim()).map_err(|e| format!("{}: {e}", path.display())))
        .collect();
    match graphs {
        Ok(g) if g.is_empty() => Err(format!("{}: no graphs", path.display())),
        other => other,
    }
}

fn write_graph(path: &Path, g: &Graph) -> Result<(), String> {
    std::fs::write(path, graph6::encode(g) + "\n").map_err(|e| format!("{}: {e}", path.display()))
}

fn report_text(cli: &Cli, reports: &[Report]) -> String {
    if cli.json {
        if reports.len() == 1 {
            to_json(&reports[0])
        } else {
            to_json(&reports)
        }
    } else {
        reports.iter().map(|r| r.summary() + "\n").collect()
    }
}

fn analyse(cli: &Cli, command: &str, g: &Graph, opts: &AnalysisOptions) -> Result<Report, String> {
    let start = Instant::now();
    let mut r = Report::analyse(command, g, opts).map_err(|e| e.to_string())?;
    if cli.timing {
        r.millis = Some(start.elapsed().as_millis() as u64);
    }
    Ok(r)
}

fn cmd_build(cli: &Cli, args: &BuildArgs) -> Outcome {
    let spec = match args.spec() {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    let g = match spec.build() {
        Ok(g) => g,
        Err(e) => return usage(e),
    };
    if let Some(out) = &args.out {
        if let Err(e) = write_graph(out, &g) {
            return usage(e);
        }
    }
    let command = format!("build {}", serde_json::to_string(&spec).unwrap());
    match analyse(cli, &command, &g, &AnalysisOptions { local: args.local, automorphisms: args.aut }) {
        Ok(r) => Outcome { code: EXIT_OK, text: report_text(cli, &[r]) },
        Err(e) => usage(e),
    }
}

fn cmd_survey(cli: &Cli, scope: &str, big: bool) -> Outcome {
    let scopes: Vec<Scope> = if scope == "all" {
        Scope::ALL.to_vec()
    } else {
        match scope.parse() {
            Ok(s) => vec![s],
            Err(e) => return usage(e),
        }
    };
    let mut surveys = Vec::new();
    for s in scopes {
        match survey::run(s, big) {
            Ok(r) => surveys.push(r),
            Err(e) => return usage(e),
        }
    }
    let ok = surveys.iter().all(|s| s.ok());
    let text = if cli.json { to_json(&surveys) } else { surveys.iter().map(|s| s.markdown() + "\n").collect() };
    Outcome { code: if ok { EXIT_OK } else { EXIT_PROPERTY }, text }
}

fn cmd_check(cli: &Cli, input: &Path, local: bool, aut: bool) -> Outcome {
    let graphs = match read_graphs(input) {
        Ok(g) => g,
        Err(e) => return usage(e),
    };
    let mut reports = Vec::new();
    for g in &graphs {
        match analyse(cli, "check", g, &AnalysisOptions { local, automorphisms: aut }) {
            Ok(r) => reports.push(r),
            Err(e) => return usage(e),
        }
    }
    let code = if reports.iter().all(|r| r.srg) { EXIT_OK } else { EXIT_PROPERTY };
    Outcome { code, text: report_text(cli, &reports) }
}

fn cmd_switch(cli: &Cli, plan: &Path, out: Option<&Path>, aut: bool) -> Outcome {
    let plan = match SwitchingPlan::load(plan) {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    let g = match build_gamma_phi(&plan) {
        Ok(g) => g,
        Err(e) => return usage(e),
    };
    if let Some(out) = out {
        if let Err(e) = write_graph(out, &g) {
            return usage(e);
        }
    }
    match analyse(cli, "switch", &g, &AnalysisOptions { local: false, automorphisms: aut }) {
        Ok(r) => Outcome { code: if r.srg { EXIT_OK } else { EXIT_PROPERTY }, text: report_text(cli, &[r]) },
        Err(e) => usage(e),
    }
}

#[derive(Serialize)]
struct DoubleCosetReport {
    d: usize,
    q: u32,
    hyperplanes: usize,
    group_order: usize,
    double_cosets: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    representatives: Option<Vec<Vec<usize>>>,
}

fn cmd_doublecosets(cli: &Cli, d: usize, q: u32, reps: bool) -> Outcome {
    let group = match pgl_on_hyperplanes(d, q) {
        Ok(g) => g,
        Err(e) => return usage(e),
    };
    let representatives = if reps {
        match enumerate_double_coset_reps(&group) {
            Ok(r) => Some(r),
            Err(e) => return usage(e),
        }
    } else {
        None
    };
    let r = DoubleCosetReport {
        d,
        q,
        hyperplanes: group.degree(),
        group_order: group.order(),
        double_cosets: count_double_cosets(&group).to_string(),
        representatives,
    };
    let text = if cli.json {
        to_json(&r)
    } else {
        let mut s = format!(
            "PG({}, {q}): {} hyperplanes, group order {}, {} double cosets\n",
            d - 1,
            r.hyperplanes,
            r.group_order,
            r.double_cosets
        );
        for p in r.representatives.iter().flatten() {
            s += &format!("{p:?}\n");
        }
        s
    };
    Outcome { code: EXIT_OK, text }
}

#[derive(Serialize)]
struct AutReport {
    order: String,
    orbit_lengths: Vec<usize>,
    rank: Option<usize>,
    generators: Vec<Vec<usize>>,
}

fn cmd_aut(cli: &Cli, input: &Path) -> Outcome {
    let graphs = match read_graphs(input) {
        Ok(g) => g,
        Err(e) => return usage(e),
    };
    let mut reports = Vec::new();
    for g in &graphs {
        match symmetry::automorphism_group(g) {
            Ok(a) => reports.push(AutReport {
                order: a.order.to_string(),
                orbit_lengths: a.orbit_lengths(),
                rank: a.rank(),
                generators: a.generators.clone(),
            }),
            Err(e) => return usage(e),
        }
    }
    let text = if cli.json {
        if reports.len() == 1 {
            to_json(&reports[0])
        } else {
            to_json(&reports)
        }
    } else {
        reports
            .iter()
            .map(|r| format!("|Aut| = {}, orbits {:?}, rank {}\n", r.order, r.orbit_lengths, r.rank.map_or("-".into(), |x| x.to_string())))
            .collect()
    };
    Outcome { code: EXIT_OK, text }
}

fn dispatch(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Build(args) => cmd_build(cli, args),
        Command::Survey { scope, big } => cmd_survey(cli, scope, *big),
        Command::Check { input, local, aut } => cmd_check(cli, input, *local, *aut),
        Command::Switch { plan, out, aut } => cmd_switch(cli, plan, out.as_deref(), *aut),
        Command::Doublecosets { d, q, reps } => cmd_doublecosets(cli, *d, *q, *reps),
        Command::Aut { input } => cmd_aut(cli, input),
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output to `out`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        if n == 0 {
            let _ = writeln!(out, "error: --threads must be positive");
            return EXIT_USAGE;
        }
        builder = builder.num_threads(n);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let outcome = pool.install(|| dispatch(&cli));
    let _ = out.write_all(outcome.text.as_bytes());
    outcome.code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run(std::iter::once("srgkit").chain(args.iter().copied()), &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn build_flags_and_params_agree() {
        let (code, a) = run_str(&["--json", "build", "--family", "polar", "--form", "sp", "--d", "3", "--q", "2"]);
        assert_eq!(code, EXIT_OK, "{a}");
        let (_, b) = run_str(&["--json", "build", "--family", "polar", "--params", r#"{"form":"sp","d":3,"q":2}"#]);
        assert_eq!(a, b);
        assert!(a.contains("\"alpha\": 30"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["build", "--family", "nope"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["build", "--family", "no", "--m", "2", "--q", "4", "--eps", "-1"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["survey", "nope"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn doublecosets_small() {
        let (code, text) = run_str(&["--json", "doublecosets", "--d", "3", "--q", "2", "--reps"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["double_cosets"], "4");
        assert_eq!(v["representatives"].as_array().unwrap().len(), 4);
    }
}
