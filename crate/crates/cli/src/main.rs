use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use fpr_core::classifier::{classify, minimal_degree_formula, minimal_index_formula, BoundKind};
use fpr_core::exact_math::Rational;
use fpr_core::fpr_formulas::{evaluate, formula_list, Params};
use fpr_core::gf_linear::{ElementSpec, Sign};
use fpr_core::model::{ActionSpec, Family, GroupSpec};
use fpr_core::perm_core::{fpr_of, max_fpr_by_prime_of, min_index_of, minimal_degree_of, ClassImage, DEFAULT_CLOSURE_CAP};
use fpr_core::verify_harness::{self, catalog::named_actions, construct, ElementRef, Report, Status, Suite};
use fpr_core::{Error, PermGroup, Permutation};

const DEFAULT_POINT_BUDGET: u64 = 1 << 24;

#[derive(Parser)]
#[command(name = "fpr", version, about = "Exact fixed point ratios of primitive permutation groups")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Config {
    /// Largest group closure attempted before falling back to element mode.
    #[arg(long, global = true, env = "FPR_CLOSURE_CAP", default_value_t = DEFAULT_CLOSURE_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    closure_cap: u64,
    /// Largest action degree enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_POINT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    point_budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    parallelism: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Csv,
    Human,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a formula or table row.
    Formula {
        id: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Brute-force fixed points on a concrete group.
    Brute(BruteArgs),
    /// Table lookup of the elements exceeding a bound.
    Classify {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        r: i64,
        #[arg(long, value_enum, default_value_t = BoundArg::Main)]
        bound: BoundArg,
    },
    /// Minimal degree from the classification.
    Mindeg {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Minimal index from the classification.
    Minindex {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Run a verification suite (or one case) and stream reports.
    Verify {
        /// all, tables, subset, subspace, affine, diagonal, product, minindex, mindeg, burnside or exceptions.
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long)]
        case: Option<String>,
    },
    /// Catalog listings.
    Catalog {
        #[command(subcommand)]
        what: CatalogCmd,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Verification cases and named constructions.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundArg {
    Main,
    OneOverR,
    Sqrt,
}

impl From<BoundArg> for BoundKind {
    fn from(b: BoundArg) -> Self {
        match b {
            BoundArg::Main => BoundKind::Main,
            BoundArg::OneOverR => BoundKind::OneOverR,
            BoundArg::Sqrt => BoundKind::Sqrt,
        }
    }
}

#[derive(Args, Default)]
struct ParamArgs {
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    q: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<String>,
    #[arg(long)]
    l: Option<i64>,
    #[arg(long)]
    r: Option<i64>,
    #[arg(long)]
    p: Option<i64>,
    #[arg(long)]
    d: Option<i64>,
    #[arg(long)]
    e: Option<i64>,
    #[arg(long)]
    k: Option<i64>,
    #[arg(long)]
    h: Option<i64>,
    #[arg(long)]
    alt: bool,
    #[arg(long)]
    kind: Option<String>,
    #[arg(long)]
    t_order: Option<i64>,
    #[arg(long)]
    centralizer: Option<i64>,
    #[arg(long)]
    inversions: Option<i64>,
    #[arg(long)]
    gamma: Option<i64>,
    /// Comma-separated rationals for product formulas.
    #[arg(long, value_delimiter = ',')]
    values: Vec<String>,
}

impl ParamArgs {
    fn to_params(&self) -> Result<Params, Error> {
        Ok(Params {
            n: self.n,
            q: self.q,
            eps: self.eps.as_deref().map(str::parse::<Sign>).transpose()?,
            l: self.l,
            r: self.r,
            p: self.p,
            d: self.d,
            e: self.e,
            k: self.k,
            h: self.h,
            alt: self.alt.then_some(true),
            kind: self.kind.clone(),
            t_order: self.t_order,
            centralizer: self.centralizer,
            inversions: self.inversions,
            gamma: self.gamma,
            values: self.values.iter().map(|v| v.parse::<Rational>()).collect::<Result<_, _>>()?,
        })
    }
}

#[derive(Args)]
struct SpecArgs {
    /// SymAlt, L, U, Sp, O, Oeps, Sporadic, Affine or Diagonal.
    #[arg(long)]
    family: Option<String>,
    /// Full GroupSpec as JSON, instead of --family.
    #[arg(long, conflicts_with = "family")]
    group_json: Option<String>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<String>,
    #[arg(long)]
    alt: bool,
    /// Sporadic group name or simple group T of a diagonal group.
    #[arg(long)]
    name: Option<String>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    d: Option<u32>,
    /// Point stabilizer name of an affine group.
    #[arg(long)]
    h: Option<String>,
    #[arg(long)]
    k: Option<u32>,
    /// Extension label, repeatable (tau, phi, b1, r, transvection, ...).
    #[arg(long = "label")]
    labels: Vec<String>,
    /// subsets:l, partitions, P1, N1, N:1:-, N1ns, Oeps:-, natural, catalog:<name>, product:<action>.
    #[arg(long, allow_hyphen_values = true)]
    action: String,
}

impl SpecArgs {
    fn to_spec(&self) -> Result<(GroupSpec, ActionSpec), Error> {
        let action: ActionSpec = self.action.parse()?;
        if let Some(text) = &self.group_json {
            let g: GroupSpec = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
            return Ok((g, action));
        }
        let missing = |what: &str| Error::InvalidSpec(format!("missing --{what}"));
        let n = || self.n.ok_or_else(|| missing("n"));
        let q = || self.q.ok_or_else(|| missing("q"));
        let family = self.family.as_deref().ok_or_else(|| missing("family"))?;
        let fam = match family {
            "SymAlt" | "S" | "A" => Family::SymAlt { n: n()?, alt: self.alt || family == "A" },
            "L" | "Linear" => Family::Linear { n: n()?, q: q()? },
            "U" | "Unitary" => Family::Unitary { n: n()?, q: q()? },
            "Sp" | "Symplectic" => Family::Symplectic { n: n()?, q: q()? },
            "O" | "OrthogonalOdd" => Family::OrthogonalOdd { n: n()?, q: q()? },
            "Oeps" | "OrthogonalEven" => {
                let eps = self.eps.as_deref().ok_or_else(|| missing("eps"))?.parse()?;
                Family::OrthogonalEven { n: n()?, q: q()?, eps }
            }
            "Sporadic" => Family::Sporadic { name: self.name.clone().ok_or_else(|| missing("name"))? },
            "Affine" => Family::Affine {
                p: self.p.ok_or_else(|| missing("p"))?,
                d: self.d.ok_or_else(|| missing("d"))?,
                h: self.h.clone().unwrap_or_default(),
            },
            "Diagonal" => Family::Diagonal { t: self.name.clone().ok_or_else(|| missing("name"))?, k: self.k.ok_or_else(|| missing("k"))? },
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        let mut g = GroupSpec::new(fam);
        for l in &self.labels {
            g = g.with(l);
        }
        Ok((g, action))
    }
}

#[derive(Args)]
struct BruteArgs {
    /// catalog:<name> or file:<path>.
    #[arg(long)]
    group: String,
    /// cycles:(0 1)(2 3), images:1,0,2 or spec:<ElementSpec JSON>.
    #[arg(long, conflicts_with_all = ["scan", "min_index", "min_degree"])]
    element: Option<String>,
    /// Per-prime maximum fpr, minimal degree and minimal index.
    #[arg(long)]
    scan: bool,
    #[arg(long)]
    min_index: bool,
    #[arg(long)]
    min_degree: bool,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::ConditionViolated { .. } => 3,
            Error::CapExceeded(_) | Error::PointBudget(_) => 4,
            _ => 2,
        };
        let mut message = e.to_string();
        if code == 4 {
            message.push_str(" (try --element for element-level mode)");
        }
        Failure { code, message }
    }
}

type Out<T> = Result<T, Failure>;

fn emit(out: &mut impl Write, output: Output, rows: &[Value]) -> std::io::Result<()> {
    match output {
        Output::Json => {
            for r in rows {
                writeln!(out, "{}", serde_json::to_string(r).expect("serializable"))?;
            }
        }
        Output::Human => {
            for r in rows {
                human(out, r, 0)?;
                if rows.len() > 1 {
                    writeln!(out)?;
                }
            }
        }
        Output::Csv => {
            let mut headers: Vec<String> = Vec::new();
            for r in rows {
                if let Value::Object(m) = r {
                    for k in m.keys() {
                        if !headers.contains(k) {
                            headers.push(k.clone());
                        }
                    }
                }
            }
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&headers).map_err(std::io::Error::other)?;
            for r in rows {
                let cells: Vec<String> = headers.iter().map(|h| cell(r.get(h))).collect();
                w.write_record(&cells).map_err(std::io::Error::other)?;
            }
            out.write_all(&w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?)?;
        }
    }
    Ok(())
}

fn cell(v: Option<&Value>) -> String {
    match v {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(other) => other.to_string(),
    }
}

fn human(out: &mut impl Write, v: &Value, depth: usize) -> std::io::Result<()> {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(_) | Value::Array(_) if !is_flat(x) => {
                        writeln!(out, "{pad}{k}:")?;
                        human(out, x, depth + 1)?;
                    }
                    _ => writeln!(out, "{pad}{k}: {}", scalar(x))?,
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                if is_flat(x) {
                    writeln!(out, "{pad}- {}", scalar(x))?;
                } else {
                    writeln!(out, "{pad}-")?;
                    human(out, x, depth + 1)?;
                }
            }
        }
        other => writeln!(out, "{pad}{}", scalar(other))?,
    }
    Ok(())
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_object() && !x.is_array()),
        Value::Object(m) => m.is_empty(),
        _ => true,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => a.iter().map(scalar).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn anchor_of(id: &str) -> Option<String> {
    formula_list().into_iter().find(|(f, _, _)| f == id).map(|(_, _, a)| a)
}

fn cmd_formula(id: &str, args: &ParamArgs) -> Out<Vec<Value>> {
    let params = args.to_params()?;
    let res = evaluate(id, &params)?;
    let mut v = to_value(&res);
    if let (Value::Object(m), Some(a)) = (&mut v, anchor_of(id)) {
        m.insert("anchor".into(), Value::String(a));
    }
    Ok(vec![v])
}

/// A group ready for brute-force queries.
enum Target {
    Catalog(verify_harness::Construction),
    File(PermGroup),
}

impl Target {
    fn load(uri: &str, cfg: &Config) -> Out<Target> {
        if let Some(name) = uri.strip_prefix("catalog:") {
            let c = construct(name)?;
            if c.degree() as u64 > cfg.point_budget {
                return Err(Error::PointBudget(c.degree() as u128).into());
            }
            if let Some(order) = &c.real.def.order {
                if *order > cfg.closure_cap {
                    return Err(Error::CapExceeded(cfg.closure_cap as usize).into());
                }
            }
            return Ok(Target::Catalog(c));
        }
        if let Some(path) = uri.strip_prefix("file:") {
            let text = std::fs::read_to_string(PathBuf::from(path)).map_err(|e| Failure { code: 2, message: format!("{path}: {e}") })?;
            let g = PermGroup::from_json(&text)?;
            if g.degree() as u64 > cfg.point_budget {
                return Err(Error::PointBudget(g.degree() as u128).into());
            }
            return Ok(Target::File(g));
        }
        Err(Failure { code: 2, message: format!("group `{uri}` must start with catalog: or file:") })
    }

    fn name(&self) -> String {
        match self {
            Target::Catalog(c) => format!("catalog:{}", c.name),
            Target::File(g) => g.name().map_or("file".to_string(), |n| n.to_string()),
        }
    }

    fn degree(&self) -> usize {
        match self {
            Target::Catalog(c) => c.degree(),
            Target::File(g) => g.degree(),
        }
    }

    fn element(&self, text: &str) -> Out<Permutation> {
        let bad = |m: String| Failure { code: 2, message: m };
        if let Some(s) = text.strip_prefix("spec:") {
            let spec: ElementSpec = serde_json::from_str(s).map_err(|e| bad(format!("bad element spec: {e}")))?;
            return match self {
                Target::Catalog(c) => Ok(c.element(&ElementRef::Spec(spec))?),
                Target::File(_) => Err(bad("spec: elements need a classical catalog group".into())),
            };
        }
        let perm = if let Some(s) = text.strip_prefix("images:") {
            let imgs = s.split(',').map(|x| x.trim().parse::<u32>().map_err(|e| bad(format!("bad image `{x}`: {e}")))).collect::<Out<Vec<_>>>()?;
            Permutation::from_images(imgs)?
        } else {
            let s = text.strip_prefix("cycles:").unwrap_or(text);
            match self {
                Target::Catalog(c) => return Ok(c.element(&ElementRef::Cycles(s.to_string()))?),
                Target::File(g) => Permutation::parse_cycles(g.degree(), s)?,
            }
        };
        match self {
            Target::Catalog(c) => {
                let base = c.real.base_degree().ok_or_else(|| bad("construction has no base points".into()))?;
                if perm.degree() != base {
                    return Err(Error::DegreeMismatch(perm.degree(), base).into());
                }
                Ok(c.omega.image(&c.real, &verify_harness::Elem::Perm(perm))?)
            }
            Target::File(g) => {
                if perm.degree() != g.degree() {
                    return Err(Error::DegreeMismatch(perm.degree(), g.degree()).into());
                }
                Ok(perm)
            }
        }
    }

    fn classes(&mut self, cap: u64) -> Out<(String, Vec<ClassImage>)> {
        match self {
            Target::Catalog(c) => Ok((c.order()?.to_string(), c.class_images()?)),
            Target::File(g) => {
                g.close(cap as usize)?;
                Ok((g.order()?.to_string(), g.class_images(None)?))
            }
        }
    }
}

fn cmd_brute(args: &BruteArgs, cfg: &Config) -> Out<Vec<Value>> {
    let mut target = Target::load(&args.group, cfg)?;
    let mut row = Map::new();
    row.insert("group".into(), json!(target.name()));
    row.insert("degree".into(), json!(target.degree()));
    if let Some(e) = &args.element {
        let x = target.element(e)?;
        let m = x.degree();
        row.insert("element".into(), json!(x.to_cycle_string()));
        row.insert("order".into(), json!(x.element_order().to_string()));
        row.insert("fixed".into(), json!(x.fixed_point_count()));
        row.insert("fpr".into(), json!(fpr_of(&x).to_string()));
        row.insert("ind".into(), json!(m - x.orbit_count()));
        if let Target::File(g) = &mut target {
            if g.close(cfg.closure_cap as usize).is_ok() {
                row.insert("in_group".into(), json!(g.contains(&x)?));
            }
        }
        return Ok(vec![Value::Object(row)]);
    }
    if !(args.scan || args.min_index || args.min_degree) {
        return Err(Failure { code: 2, message: "give --element, --scan, --min-index or --min-degree".into() });
    }
    let (order, classes) = target.classes(cfg.closure_cap)?;
    row.insert("group_order".into(), json!(order));
    if args.scan {
        let mut per = Map::new();
        for (r, (v, x)) in max_fpr_by_prime_of(&classes) {
            per.insert(r.to_string(), json!({"max_fpr": v.to_string(), "element": x.to_cycle_string()}));
        }
        row.insert("max_fpr_by_prime".into(), Value::Object(per));
    }
    if args.scan || args.min_degree {
        row.insert("min_degree".into(), json!(minimal_degree_of(&classes)?));
    }
    if args.scan || args.min_index {
        let (ind, wit) = min_index_of(&classes)?;
        row.insert("min_index".into(), json!(ind));
        row.insert("witness_orders".into(), json!(wit));
    }
    Ok(vec![Value::Object(row)])
}

fn cmd_verify(suite: &str, case: Option<&str>, cfg: &Config, out: &mut impl Write) -> Out<bool> {
    let start = Instant::now();
    let cases = match case {
        Some(id) => vec![verify_harness::find_case(id).ok_or_else(|| Failure { code: 2, message: format!("unknown case `{id}`") })?],
        None => {
            let s = if suite == "all" { None } else { Some(suite.parse::<Suite>()?) };
            verify_harness::select(s)
        }
    };
    let reports: Vec<Report> = verify_harness::run_cases(&cases, cfg.parallelism as usize)?;
    let summary = verify_harness::summarize(case.unwrap_or(suite), &cases, &reports, start.elapsed().as_millis() as u64);
    let mut rows: Vec<Value> = reports.iter().map(to_value).collect();
    if cfg.output != Output::Csv {
        rows.push(json!({ "summary": to_value(&summary) }));
    }
    emit(out, cfg.output, &rows).map_err(io_fail)?;
    if cfg.output == Output::Csv {
        let t = &summary.total;
        eprintln!("pass {} fail {} infeasible {} in {} ms", t.pass, t.fail, t.infeasible, summary.ms);
    }
    Ok(reports.iter().all(|r| r.status != Status::Fail))
}

fn cmd_catalog() -> Vec<Value> {
    let mut rows: Vec<Value> = verify_harness::catalog::catalog()
        .iter()
        .map(|c| {
            json!({
                "kind": "case",
                "id": c.id,
                "suites": c.suites.iter().map(|s| s.name()).collect::<Vec<_>>().join(" "),
                "mode": c.check.mode(),
                "provenance": to_value(&c.provenance),
                "anchor": c.anchor,
            })
        })
        .collect();
    for (name, def, omega) in named_actions() {
        rows.push(json!({ "kind": "construction", "id": format!("catalog:{name}"), "group": def.key, "action": omega.key() }));
    }
    rows
}

fn io_fail(e: std::io::Error) -> Failure {
    Failure { code: 1, message: e.to_string() }
}

fn run(cli: Cli) -> Out<u8> {
    let cfg = cli.config;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let rows = match &cli.command {
        Command::Formula { id, params } => cmd_formula(id, params)?,
        Command::Brute(args) => cmd_brute(args, &cfg)?,
        Command::Classify { spec, r, bound } => {
            let (g, a) = spec.to_spec()?;
            vec![to_value(&classify(&g, &a, *r, (*bound).into())?)]
        }
        Command::Mindeg { spec } => {
            let (g, a) = spec.to_spec()?;
            vec![to_value(&minimal_degree_formula(&g, &a)?)]
        }
        Command::Minindex { spec } => {
            let (g, a) = spec.to_spec()?;
            vec![to_value(&minimal_index_formula(&g, &a)?)]
        }
        Command::Verify { suite, case } => {
            let ok = cmd_verify(suite, case.as_deref(), &cfg, &mut out)?;
            return Ok(if ok { 0 } else { 1 });
        }
        Command::Catalog { what: CatalogCmd::List } => cmd_catalog(),
    };
    emit(&mut out, cfg.output, &rows).map_err(io_fail)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
