//! Command-line surface. Every report is JSON by default and embeds the
//! field description; `--format csv` gives a flat projection.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::code::{
    code_params, hilbert_function, hilbert_profile_with, torus_dimension, torus_hilbert_series_coeffs,
    torus_min_distance, torus_regularity, HilbertMethod,
};
use crate::field::{prime_power, FieldSpec};
use crate::generators::{
    bipartite_disjoint_generators, even_cycle_generators, regularity_formula_disjoint, regularity_upper_bound,
    GeneratorEntry,
};
use crate::graph::{components, cycle_blocks, parse_graph, parse_graph_normalized, validate_cycle_family, CycleBlocks};
use crate::groebner::test_conjecture;
use crate::ideal::{format_binomials, minimalize, parse_binomials, verify_generating_set, Binomial};
use crate::limits::Limits;
use crate::monomial::MonomialOrder;
use crate::suite::{self, Status, SuiteConfig};
use crate::toric::{enumerate_toric_set, length_formula, projective_torus, ToricError};
use crate::{Error, Graph, Result};

#[derive(Debug, Parser)]
#[command(name = "toricgraph", version, about = "Toric sets of graphs over finite fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Length of the toric set: closed formula and enumeration.
    Length(GraphArgs),
    /// Parameters of the evaluation code C_X(d).
    Code {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        min_distance: bool,
    },
    /// Hilbert function values up to the regularity.
    Hilbert {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = Method::Rank)]
        method: Method,
    },
    /// The points of the toric set.
    Points(GraphArgs),
    /// Computed regularity, with the closed formula and upper bound when they apply.
    Regularity {
        #[command(flatten)]
        graph: GraphArgs,
        /// Edge-disjoint even cycle as comma-separated vertices; repeatable.
        #[arg(long = "cycle")]
        cycles: Vec<String>,
    },
    /// Binomial generators of the vanishing ideal.
    Generators {
        #[command(flatten)]
        graph: GraphArgs,
        /// Check a binomial file instead of building the set.
        #[arg(long)]
        from: Option<PathBuf>,
        /// Compare graded dimensions of the generated ideal against I(X)
        #[arg(long)]
        verify: bool,
        /// Drop redundant generators
        #[arg(long)]
        minimalize: bool,
        /// Cycle graphs only: test the conjectured basis.
        #[arg(long)]
        conjecture: bool,
        #[arg(long, value_enum, default_value_t = Order::Grevlex)]
        order: Order,
        /// Writes `generators.txt` and `generators.json` here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed forms for the projective torus, cross-checked by enumeration.
    Torus {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        d: u32,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Runs the acceptance battery.
    Suite {
        #[command(flatten)]
        common: Common,
        /// Binomial file replacing the two-triangles generator list.
        #[arg(long)]
        two_triangles: Option<PathBuf>,
        /// Criterion ids to run, comma-separated.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
    },
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    /// Field order as `P^M` or a prime power.
    #[arg(long = "q")]
    pub q: String,
    /// Monic modulus coefficients `c0,c1,...,cM`, low degree first.
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u32>>,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Highest degree to examine
    #[arg(long)]
    pub max_d: Option<u32>,
    /// Largest torus or point set to enumerate
    #[arg(long, default_value_t = Limits::default().enumeration)]
    pub enum_cap: u64,
    /// Largest evaluation matrix, in entries
    #[arg(long, default_value_t = Limits::default().matrix)]
    pub matrix_cap: u64,
    /// Largest codeword search for minimum distance
    #[arg(long, default_value_t = Limits::default().search)]
    pub dist_cap: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

impl Common {
    fn limits(&self) -> Limits {
        Limits { enumeration: self.enum_cap, matrix: self.matrix_cap, search: self.dist_cap }
    }
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Edge-list file.
    pub graph: PathBuf,
    #[command(flatten)]
    pub field: FieldArgs,
    /// Drop loops and repeated edges with a warning instead of failing.
    #[arg(long)]
    pub normalize: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Method {
    Rank,
    Characters,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Order {
    Grevlex,
    Revlex,
}

impl From<Order> for MonomialOrder {
    fn from(o: Order) -> Self {
        match o {
            Order::Grevlex => MonomialOrder::Grevlex,
            Order::Revlex => MonomialOrder::Revlex,
        }
    }
}

/// Output of a command: what goes to stdout and the exit code.
#[derive(Debug)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `P^M` or a plain prime power.
pub fn parse_q(text: &str) -> Result<(u64, u32)> {
    let bad = || Error::Input(format!("invalid field order {text:?}, expected P^M or a prime power"));
    if let Some((p, m)) = text.split_once('^') {
        let p = p.trim().parse().map_err(|_| bad())?;
        let m = m.trim().parse().map_err(|_| bad())?;
        return Ok((p, m));
    }
    let q: u64 = text.trim().parse().map_err(|_| bad())?;
    prime_power(q).ok_or_else(bad)
}

impl FieldArgs {
    pub fn spec(&self) -> Result<FieldSpec> {
        let (p, m) = parse_q(&self.q)?;
        Ok(FieldSpec::new(p, m, self.modulus.as_deref())?)
    }
}

struct Loaded {
    graph: Graph,
    field: FieldSpec,
    limits: Limits,
    warnings: Vec<String>,
}

impl GraphArgs {
    fn load(&self) -> Result<Loaded> {
        let text = fs::read_to_string(&self.graph)?;
        let (graph, warnings) = if self.normalize { parse_graph_normalized(&text)? } else { (parse_graph(&text)?, vec![]) };
        Ok(Loaded { graph, field: self.field.spec()?, limits: self.common.limits(), warnings })
    }
}

/// Parses the arguments and runs the command.
pub fn run_with_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    run(&cli)
}

pub fn run(cli: &Cli) -> Output {
    match dispatch(&cli.command) {
        Ok((code, stdout, warnings)) => Output { code, stdout, stderr: warnings.join("\n") },
        Err(e) => Output { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}") },
    }
}

type Dispatched = (i32, String, Vec<String>);

fn emit(format: Format, report: &Value) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("reports serialize") + "\n",
        Format::Csv => flat_csv(report),
    }
}

/// Header and one row of the scalar top-level fields, with the field
/// order `q` first.
fn flat_csv(report: &Value) -> String {
    let mut header = vec!["q".to_string()];
    let mut row = vec![report["field"]["q"].to_string()];
    if let Value::Object(map) = report {
        for (k, v) in map {
            let cell = match v {
                Value::Null => String::new(),
                Value::Bool(_) | Value::Number(_) => v.to_string(),
                Value::String(s) => s.clone(),
                _ => continue,
            };
            header.push(k.clone());
            row.push(cell);
        }
    }
    format!("{}\n{}\n", header.join(","), row.join(","))
}

fn with_field<T: Serialize>(field: &FieldSpec, body: T) -> Value {
    let mut v = serde_json::to_value(body).expect("reports serialize");
    v["field"] = serde_json::to_value(field).expect("field serializes");
    v
}

fn dispatch(command: &Command) -> Result<Dispatched> {
    match command {
        Command::Length(args) => cmd_length(args),
        Command::Code { graph, d, min_distance } => cmd_code(graph, *d, *min_distance),
        Command::Hilbert { graph, method } => cmd_hilbert(graph, *method),
        Command::Points(args) => cmd_points(args),
        Command::Regularity { graph, cycles } => cmd_regularity(graph, cycles),
        Command::Generators { graph, from, verify, minimalize, conjecture, order, out } => {
            cmd_generators(graph, from.as_deref(), *verify, *minimalize, *conjecture, (*order).into(), out.as_deref())
        }
        Command::Torus { s, d, field, common } => cmd_torus(*s, *d, field, common),
        Command::Suite { common, two_triangles, only } => cmd_suite(common, two_triangles.as_deref(), only.clone()),
    }
}

fn cmd_length(args: &GraphArgs) -> Result<Dispatched> {
    let l = args.load()?;
    let formula = length_formula(&l.graph, &l.field);
    let enumerated = match enumerate_toric_set(&l.graph, &l.field, &l.limits) {
        Ok(x) => Some(x.len() as u64),
        Err(ToricError::EnumerationTooLarge { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let matches = enumerated.map(|e| formula == e.into());
    let report = json!({
        "n": l.graph.n(),
        "s": l.graph.s(),
        "components": components(&l.graph).len(),
        "formula": formula.to_string(),
        "enumerated": enumerated,
        "match": matches,
    });
    let code = if matches == Some(false) { 4 } else { 0 };
    Ok((code, emit(args.common.format, &with_field(&l.field, report)), l.warnings))
}

fn cmd_code(args: &GraphArgs, d: u32, want: bool) -> Result<Dispatched> {
    let l = args.load()?;
    let x = enumerate_toric_set(&l.graph, &l.field, &l.limits)?;
    let p = code_params(&x, d, want, &l.limits)?;
    Ok((0, emit(args.common.format, &with_field(&l.field, p)), l.warnings))
}

fn cmd_hilbert(args: &GraphArgs, method: Method) -> Result<Dispatched> {
    let l = args.load()?;
    let x = enumerate_toric_set(&l.graph, &l.field, &l.limits)?;
    let method = match method {
        Method::Rank => HilbertMethod::Rank,
        Method::Characters => HilbertMethod::Characters,
    };
    let profile = hilbert_profile_with(&x, args.common.max_d, &l.limits, method)?;
    let out = match args.common.format {
        Format::Csv => profile.to_csv(),
        Format::Json => emit(Format::Json, &with_field(&l.field, &profile)),
    };
    Ok((0, out, l.warnings))
}

fn cmd_points(args: &GraphArgs) -> Result<Dispatched> {
    let l = args.load()?;
    let x = enumerate_toric_set(&l.graph, &l.field, &l.limits)?;
    let out = match args.common.format {
        Format::Csv => x.to_csv(),
        Format::Json => emit(Format::Json, &with_field(&l.field, &x)),
    };
    Ok((0, out, l.warnings))
}

fn parse_cycle(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Input(format!("invalid cycle {text:?}"))))
        .collect()
}

fn cmd_regularity(args: &GraphArgs, cycles: &[String]) -> Result<Dispatched> {
    let l = args.load()?;
    let q = l.field.q();
    let x = enumerate_toric_set(&l.graph, &l.field, &l.limits)?;
    let profile = hilbert_profile_with(&x, args.common.max_d, &l.limits, HilbertMethod::Rank)?;
    let computed = profile.regularity;
    let formula = regularity_formula_disjoint(&l.graph, q).ok();
    let family = if cycles.is_empty() {
        match cycle_blocks(&l.graph) {
            CycleBlocks::Disjoint(f) => Some(f),
            CycleBlocks::NotDisjoint => None,
        }
    } else {
        let seqs = cycles.iter().map(|c| parse_cycle(c)).collect::<Result<Vec<_>>>()?;
        Some(validate_cycle_family(&l.graph, &seqs, true)?)
    };
    let bound = family.and_then(|f| regularity_upper_bound(&l.graph, q, &f).ok());
    let same = |v: Option<u64>| v.zip(computed).map(|(a, b)| a == b as u64);
    let report = json!({
        "size": x.len(),
        "computed": computed,
        "formula": formula,
        "formula_match": same(formula),
        "bound": bound,
        "bound_holds": bound.zip(computed).map(|(b, c)| c as u64 <= b),
        "bound_sharp": same(bound),
    });
    let code = if same(formula) == Some(false) { 4 } else { 0 };
    Ok((code, emit(args.common.format, &with_field(&l.field, report)), l.warnings))
}

/// Even cycle graphs get the cycle construction with provenance; other
/// graphs need connected bipartite structure with vertex-disjoint cycles.
fn build_generators(g: &Graph, q: u32) -> Result<Vec<GeneratorEntry>> {
    if let Some(k) = even_cycle_k(g) {
        if g.edges().iter().enumerate().all(|(i, &(u, v))| (u, v) == (i, (i + 1) % g.n())) {
            return Ok(even_cycle_generators(k, q)?.entries());
        }
    }
    Ok(bipartite_disjoint_generators(g, q)?)
}

/// `k` when the graph is a single cycle of length `2k`.
fn even_cycle_k(g: &Graph) -> Option<usize> {
    let connected = components(g).len() == 1;
    let regular = (0..g.n()).all(|v| g.neighbours(v).len() == 2);
    (connected && regular && g.s() == g.n() && g.s() % 2 == 0).then_some(g.s() / 2)
}

fn cmd_generators(
    args: &GraphArgs,
    from: Option<&Path>,
    verify: bool,
    minimal: bool,
    conjecture: bool,
    order: MonomialOrder,
    out: Option<&Path>,
) -> Result<Dispatched> {
    let l = args.load()?;
    let q = l.field.q();
    let mut report = serde_json::Map::new();
    let mut code = 0;

    if conjecture {
        let k = even_cycle_k(&l.graph).ok_or_else(|| Error::Input("--conjecture needs an even cycle graph".into()))?;
        let r = test_conjecture(k, q, order, &l.limits)?;
        if !r.generates {
            code = 4;
        }
        report.insert("conjecture".into(), serde_json::to_value(&r).expect("serializes"));
    }

    let (gens, entries): (Vec<Binomial>, Option<Vec<GeneratorEntry>>) = match from {
        Some(path) => (parse_binomials(&fs::read_to_string(path)?, Some(l.graph.s()))?, None),
        None => {
            let e = build_generators(&l.graph, q)?;
            (e.iter().map(|g| g.binomial.clone()).collect(), Some(e))
        }
    };
    report.insert("count".into(), json!(gens.len()));
    report.insert("max_degree".into(), json!(gens.iter().map(Binomial::degree).max()));
    report.insert("binomials".into(), json!(gens.iter().map(ToString::to_string).collect::<Vec<_>>()));

    if verify || minimal {
        let x = enumerate_toric_set(&l.graph, &l.field, &l.limits)?;
        if minimal {
            let m = minimalize(&gens, &x, &l.limits)?;
            if !m.report.generates {
                code = 4;
            }
            report.insert("minimalization".into(), serde_json::to_value(&m).expect("serializes"));
        } else {
            let r = verify_generating_set(&gens, &x, None, &l.limits)?;
            if !r.generates {
                code = 4;
            }
            report.insert("verification".into(), serde_json::to_value(&r).expect("serializes"));
        }
    }

    if let Some(dir) = out {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("generators.txt"), format_binomials(&gens))?;
        let sidecar = with_field(&l.field, json!({ "s": l.graph.s(), "generators": entries.clone().unwrap_or_default() }));
        fs::write(dir.join("generators.json"), serde_json::to_string_pretty(&sidecar).expect("serializes") + "\n")?;
        report.insert("written".into(), json!([dir.join("generators.txt"), dir.join("generators.json")]));
    }

    let out = match args.common.format {
        Format::Csv => format_binomials(&gens),
        Format::Json => emit(Format::Json, &with_field(&l.field, Value::Object(report))),
    };
    Ok((code, out, l.warnings))
}

fn cmd_torus(s: usize, d: u32, field: &FieldArgs, common: &Common) -> Result<Dispatched> {
    let f = field.spec()?;
    let q = f.q();
    if s < 2 {
        return Err(Error::Input("the torus needs s >= 2".into()));
    }
    let limits = common.limits();
    let reg = torus_regularity(s, q);
    let dimension = torus_dimension(s, q, d);
    let series = torus_hilbert_series_coeffs(s, q, d)[d as usize].clone();
    let (delta, delta_note) = match torus_min_distance(s, q, d) {
        Ok(v) => (Some(v.to_string()), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let x = projective_torus(s, &f, &limits).ok();
    let (enumerated, h) = match &x {
        Some(x) => (Some(x.len()), hilbert_function(x, d, &limits).ok()),
        None => (None, None),
    };
    let report = json!({
        "s": s,
        "d": d,
        "regularity": reg,
        "dimension": dimension.to_string(),
        "series_coefficient": series.to_string(),
        "min_distance": delta,
        "min_distance_note": delta_note,
        "enumerated_size": enumerated,
        "computed_dimension": h,
        "match": h.map(|h| dimension == h.into()),
    });
    Ok((0, emit(common.format, &with_field(&f, report)), vec![]))
}

fn cmd_suite(common: &Common, example: Option<&Path>, only: Option<Vec<String>>) -> Result<Dispatched> {
    let two_triangles_override = match example {
        Some(p) => Some(parse_binomials(&fs::read_to_string(p)?, Some(6))?),
        None => None,
    };
    let config = SuiteConfig { limits: common.limits(), two_triangles_override, only };
    let summary = suite::run(&config);
    let lines: Vec<String> = summary.results.iter().map(|r| r.line()).collect();
    let code = if summary.passed {
        0
    } else if summary.results.iter().any(|r| r.status == Status::Fail) {
        4
    } else {
        3
    };
    let out = match common.format {
        Format::Json => serde_json::to_string_pretty(&summary).expect("serializes") + "\n",
        Format::Csv => {
            let mut s = String::from("id,status\n");
            for r in &summary.results {
                s.push_str(&format!("{},{:?}\n", r.id, r.status).to_lowercase());
            }
            s
        }
    };
    Ok((code, out, lines))
}
