use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context as _;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use hecke_lie::adpoly::{self, Expression, Mode};
use hecke_lie::exactnum::{Cyclotomic, MAX_CONDUCTOR};
use hecke_lie::generic::{self, GenericityReport, TauParameters};
use hecke_lie::groupkit::{linear_characters, FiniteMatrixGroup, GroupFile, ReflectionCatalog, DEFAULT_ELEMENT_CAP};
use hecke_lie::heckelie::{
    self, Context, DecompositionReport, GenTag, IrrClassification, ParameterPoint, ReflectionSet,
};
use hecke_lie::liecore::DualityClass;
use hecke_lie::repkit::{inventory_for, rebuild_exceptional, Inventory, InventoryFile};
use hecke_lie::Error;

const VERSION: &str = env!("CARGO_PKG_VERSION");
const CACHE_ENV: &str = "HECKE_LIE_CACHE_DIR";

const EXIT_USAGE: u8 = 1;
const EXIT_RESOURCE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_INCONSISTENT: u8 = 4;
/// A negative mathematical answer backed by a certificate.
const EXIT_CERTIFICATE: u8 = 5;

#[derive(Parser)]
#[command(name = "hecke-lie", version, about = "Infinitesimal Hecke Lie algebras of complex reflection groups")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Result cache directory (defaults to $HECKE_LIE_CACHE_DIR; no caching when unset).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Ignore the cache for this run.
    #[arg(long, global = true)]
    no_cache: bool,
    #[arg(long, global = true, default_value_t = DEFAULT_ELEMENT_CAP)]
    element_cap: usize,
    #[arg(long, global = true, default_value_t = MAX_CONDUCTOR)]
    conductor_cap: u32,
    /// Seed for spot checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Group queries.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Decompose an infinitesimal Hecke algebra.
    Decompose(DecomposeArgs),
    /// Classify irreducibles: Ref, QRef, ΛRef, X(ρ) and the ≈ classes.
    Classify(ClassifyArgs),
    /// Genericity of a parameter point.
    Generic(GenericArgs),
    /// Ad(g) as a polynomial in the ad(g^k).
    Adpoly(AdpolyArgs),
    /// Print or rebuild the irreducible inventory of a group.
    Inventory(InventoryArgs),
}

#[derive(Subcommand)]
enum GroupAction {
    /// Order, classes, reflections, hyperplane classes.
    Info(GroupSource),
}

#[derive(Args, Clone)]
struct GroupSource {
    /// Bundled group: g4, g25, g26 or "g(de,e,r)".
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    builtin: Option<String>,
    /// Group file (JSON).
    #[arg(long)]
    file: Option<PathBuf>,
    /// Inventory file for a group without a bundled one.
    #[arg(long)]
    inventory: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Gens {
    H,
    Hs,
    Hlambda,
    Hst,
    Hu,
    Hutilde,
}

#[derive(Args)]
struct DecomposeArgs {
    #[command(flatten)]
    source: GroupSource,
    #[arg(long, value_enum, ignore_case = true)]
    gens: Gens,
    /// Parameter point: classes separated by ';', coordinates by ','.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Generator indices forming U, e.g. "0,1".
    #[arg(long)]
    u: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SetArg {
    Distinguished,
    All,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    source: GroupSource,
    #[arg(long, value_enum, default_value_t = SetArg::Distinguished)]
    set: SetArg,
}

#[derive(Args)]
struct GenericArgs {
    #[command(flatten)]
    source: GroupSource,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "tau", required_unless_present = "tau")]
    lambda: Option<String>,
    /// KZ weights τ_{c,0..e_c−1}, same syntax as --lambda.
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<String>,
}

#[derive(Args)]
struct AdpolyArgs {
    /// Order of g.
    #[arg(long, required_unless_present = "table")]
    n: Option<usize>,
    /// Use ad(g) only.
    #[arg(long)]
    single: bool,
    /// Verify the published table for n = 2..6 instead.
    #[arg(long, conflicts_with = "n")]
    table: bool,
    /// Also check the identity in the group algebra of this builtin group.
    #[arg(long)]
    check_group: Option<String>,
}

#[derive(Args)]
struct InventoryArgs {
    #[command(flatten)]
    source: GroupSource,
    /// Recompute from scratch instead of loading bundled data.
    #[arg(long)]
    rebuild: bool,
    #[arg(long, default_value_t = 40)]
    max_dim: usize,
    /// Write the inventory file here.
    #[arg(long)]
    output: Option<PathBuf>,
}

struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let code = match error.downcast_ref::<Error>() {
            Some(e) => exit_code(e),
            None => EXIT_USAGE,
        };
        Failure { code, error }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: exit_code(&e), error: e.into() }
    }
}

fn exit_code(e: &Error) -> u8 {
    use hecke_lie::exactnum::NumError;
    match e {
        Error::Resource(_) | Error::Num(NumError::ConductorCap(_)) => EXIT_RESOURCE,
        Error::Precondition(_) => EXIT_PRECONDITION,
        Error::Consistency(_) => EXIT_INCONSISTENT,
        _ => EXIT_USAGE,
    }
}

/// One command's result: its structured payload and the exit status it implies.
struct Outcome {
    payload: Value,
    code: u8,
}

#[derive(Serialize, Deserialize)]
struct CachedResult {
    key: String,
    version: String,
    payload: Value,
}

struct Session {
    format: Format,
    cache: Option<PathBuf>,
    element_cap: usize,
    conductor_cap: u32,
    seed: u64,
    verbose: u8,
}

impl Session {
    fn log(&self, msg: impl AsRef<str>) {
        if self.verbose > 0 {
            eprintln!("{}", msg.as_ref());
        }
    }

    fn load_group(&self, src: &GroupSource) -> Result<(GroupFile, FiniteMatrixGroup), Failure> {
        let file = match (&src.builtin, &src.file) {
            (Some(name), _) => GroupFile::builtin(name)?,
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                GroupFile::parse(&text)?
            }
            (None, None) => return Err(anyhow::anyhow!("give --builtin or --file").into()),
        };
        if file.conductor > self.conductor_cap {
            return Err(Error::Resource(format!(
                "conductor {} exceeds the cap {}",
                file.conductor, self.conductor_cap
            ))
            .into());
        }
        let t = Instant::now();
        let group = FiniteMatrixGroup::from_file(&file, self.element_cap)?;
        self.log(format!("{}: {} elements in {:?}", group.name(), group.order(), t.elapsed()));
        Ok((file, group))
    }

    fn context(&self, src: &GroupSource, group: FiniteMatrixGroup) -> Result<Context, Failure> {
        let t = Instant::now();
        let ctx = match &src.inventory {
            Some(path) => {
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let file: InventoryFile =
                    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
                let inv = Inventory::from_file(&file, &group)?;
                Context::with_inventory(group, inv)?
            }
            None => Context::new(group)?,
        };
        self.log(format!("context ready in {:?}", t.elapsed()));
        Ok(ctx)
    }

    fn cache_key(&self, file: &GroupFile, operation: &str, detail: &str) -> String {
        let mut h = Sha256::new();
        h.update(serde_json::to_vec(file).expect("group file serializes"));
        for part in [operation, detail, VERSION] {
            h.update([0u8]);
            h.update(part.as_bytes());
        }
        hex::encode(h.finalize())
    }

    fn cached(&self, key: &str) -> Option<Value> {
        let path = self.cache.as_ref()?.join(format!("{key}.json"));
        let text = std::fs::read_to_string(path).ok()?;
        let entry: CachedResult = serde_json::from_str(&text).ok()?;
        (entry.key == key && entry.version == VERSION).then(|| {
            self.log(format!("cache hit {key}"));
            entry.payload
        })
    }

    fn store(&self, key: &str, payload: &Value) {
        let Some(dir) = &self.cache else { return };
        let entry = CachedResult { key: key.to_string(), version: VERSION.to_string(), payload: payload.clone() };
        let write = || -> std::io::Result<()> {
            std::fs::create_dir_all(dir)?;
            let tmp = dir.join(format!("{key}.tmp"));
            std::fs::write(&tmp, serde_json::to_vec(&entry)?)?;
            std::fs::rename(tmp, dir.join(format!("{key}.json")))
        };
        if let Err(e) = write() {
            self.log(format!("cache write failed: {e}"));
        }
    }

    /// Runs `compute` unless a cached payload exists for `key`.
    fn memo<T: Serialize>(&self, key: &str, compute: impl FnOnce() -> Result<T, Failure>) -> Result<Value, Failure> {
        if let Some(v) = self.cached(key) {
            return Ok(v);
        }
        let v = serde_json::to_value(compute()?).context("serializing report")?;
        self.store(key, &v);
        Ok(v)
    }
}

fn parse_gen_tag(args: &DecomposeArgs, group: &FiniteMatrixGroup) -> Result<GenTag, Failure> {
    let u = || -> Result<Vec<usize>, Failure> {
        let text = args.u.as_deref().ok_or_else(|| anyhow::anyhow!("--u is required for this generator set"))?;
        text.split(',')
            .map(|t| {
                let k: usize = t.trim().parse().with_context(|| format!("bad generator index {t:?}"))?;
                if k >= group.generators().len() {
                    return Err(Error::Domain(format!("generator index {k} out of range")).into());
                }
                Ok(group.generator_element(k))
            })
            .collect()
    };
    Ok(match args.gens {
        Gens::H => GenTag::H,
        Gens::Hs => GenTag::Hs,
        Gens::Hst => GenTag::Hst,
        Gens::Hlambda => {
            let text = args.lambda.as_deref().ok_or_else(|| anyhow::anyhow!("--lambda is required for Hlambda"))?;
            GenTag::Hlambda(text.parse()?)
        }
        Gens::Hu => GenTag::HU(u()?),
        Gens::Hutilde => GenTag::HUtilde(u()?),
    })
}

fn group_info(s: &Session, src: &GroupSource) -> Result<Outcome, Failure> {
    let (_, g) = s.load_group(src)?;
    let cat = ReflectionCatalog::new(&g)?;
    let chars = linear_characters(&g, &cat)?;
    let classes: Vec<Value> = cat
        .classes
        .iter()
        .map(|c| json!({"hyperplanes": c.hyperplanes.len(), "e": c.e, "zeta": c.zeta.to_string()}))
        .collect();
    let payload = json!({
        "name": g.name(),
        "degree": g.degree(),
        "conductor": g.conductor(),
        "order": g.order(),
        "classes": g.classes().len(),
        "reflections": cat.r().len(),
        "distinguished": cat.s().len(),
        "hyperplanes": cat.hyperplane_count(),
        "hyperplane_classes": classes,
        "linear_characters": chars.len(),
    });
    Ok(Outcome { payload, code: 0 })
}

fn decompose(s: &Session, args: &DecomposeArgs) -> Result<Outcome, Failure> {
    let (file, g) = s.load_group(&args.source)?;
    let tag = parse_gen_tag(args, &g)?;
    let key = s.cache_key(&file, "decompose", &tag.to_string());
    let payload = s.memo(&key, || {
        let ctx = s.context(&args.source, g)?;
        let t = Instant::now();
        let r = heckelie::decompose(&ctx, &tag)?;
        s.log(format!("decomposed in {:?}", t.elapsed()));
        Ok(r)
    })?;
    let report: DecompositionReport = serde_json::from_value(payload.clone()).context("reading report")?;
    let code = if report.consistent() { 0 } else { EXIT_INCONSISTENT };
    Ok(Outcome { payload, code })
}

fn classify(s: &Session, args: &ClassifyArgs) -> Result<Outcome, Failure> {
    let (file, g) = s.load_group(&args.source)?;
    let set = match args.set {
        SetArg::Distinguished => ReflectionSet::Distinguished,
        SetArg::All => ReflectionSet::All,
    };
    let key = s.cache_key(&file, "classify", &format!("{set:?}"));
    let payload = s.memo(&key, || {
        let ctx = s.context(&args.source, g)?;
        Ok(heckelie::classify_irreps(&ctx, set)?)
    })?;
    Ok(Outcome { payload, code: 0 })
}

fn genericity(s: &Session, args: &GenericArgs) -> Result<Outcome, Failure> {
    let (_, g) = s.load_group(&args.source)?;
    let ctx = s.context(&args.source, g)?;
    let (lambda, lambda0, tau) = match (&args.lambda, &args.tau) {
        (Some(l), _) => (l.parse::<ParameterPoint>()?, None, None),
        (None, Some(t)) => {
            let tau = TauParameters { values: t.parse::<ParameterPoint>()?.values };
            let (l, l0) = generic::tau_to_lambda(&ctx, &tau)?;
            (l, Some(l0), Some(tau))
        }
        (None, None) => return Err(anyhow::anyhow!("give --lambda or --tau").into()),
    };
    let report = generic::membership(&ctx, &lambda)?;
    let strs = |v: &[Cyclotomic]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let payload = json!({
        "lambda": lambda.to_string(),
        "lambda0": lambda0.as_deref().map(strs),
        "tau": tau.map(|t| t.values.iter().map(|v| strs(v)).collect::<Vec<_>>()),
        "report": report,
    });
    Ok(Outcome { payload, code: 0 })
}

fn adpoly_cmd(s: &Session, args: &AdpolyArgs) -> Result<Outcome, Failure> {
    if args.table {
        let rows: Vec<Value> = adpoly::printed_table()
            .into_iter()
            .map(|(n, p)| json!({"n": n, "polynomial": p.to_string(), "verified": adpoly::verify_identity(&p)}))
            .collect();
        let all = rows.iter().all(|r| r["verified"] == json!(true));
        return Ok(Outcome { payload: json!({"table": rows}), code: if all { 0 } else { EXIT_INCONSISTENT } });
    }
    let n = args.n.expect("clap requires --n");
    let mode = if args.single { Mode::Single } else { Mode::Multi };
    let t = Instant::now();
    let expr = adpoly::express_z(n, mode)?;
    s.log(format!("solved in {:?}", t.elapsed()));
    match expr {
        Expression::Polynomial(p) => {
            let verified = adpoly::verify_identity(&p);
            let group_check = match &args.check_group {
                Some(name) => Some(check_on_group(s, &p, name)?),
                None => None,
            };
            let ok = verified && group_check.as_ref().is_none_or(|c| c["holds"] == json!(true));
            let payload = json!({
                "n": n,
                "mode": mode,
                "outcome": "polynomial",
                "display": p.to_string(),
                "polynomial": p,
                "verified": verified,
                "group_check": group_check,
            });
            Ok(Outcome { payload, code: if ok { 0 } else { EXIT_INCONSISTENT } })
        }
        Expression::Impossible(c) => {
            let payload = json!({"n": n, "mode": mode, "outcome": "impossible", "certificate": c});
            Ok(Outcome { payload, code: EXIT_CERTIFICATE })
        }
    }
}

fn check_on_group(s: &Session, p: &adpoly::AdPolynomial, name: &str) -> Result<Value, Failure> {
    let file = GroupFile::builtin(name)?;
    let g = FiniteMatrixGroup::from_file(&file, s.element_cap)?;
    let candidates: Vec<usize> = (0..g.order()).filter(|&x| g.element_order(x) as usize == p.n).collect();
    if candidates.is_empty() {
        return Err(Error::Precondition(format!("{} has no element of order {}", g.name(), p.n)).into());
    }
    let x = candidates[(s.seed % candidates.len() as u64) as usize];
    let holds = adpoly::verify_on_group(p, &g, x)?;
    Ok(json!({"group": g.name(), "element": x, "word": g.word(x), "holds": holds}))
}

fn inventory_cmd(s: &Session, args: &InventoryArgs) -> Result<Outcome, Failure> {
    let (_, g) = s.load_group(&args.source)?;
    let t = Instant::now();
    let inv = if args.rebuild { rebuild_exceptional(g.name(), &g, args.max_dim)? } else { inventory_for(&g)? };
    inv.certify(&g)?;
    s.log(format!("inventory ready in {:?}", t.elapsed()));
    let file = inv.to_file(&g);
    if let Some(path) = &args.output {
        let text = serde_json::to_string(&file).context("serializing inventory")?;
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    let reps: Vec<Value> = inv.reps.iter().map(|r| json!({"label": r.label(), "dim": r.dim()})).collect();
    let payload =
        json!({"group": g.name(), "count": inv.len(), "sum_of_squares": inv.sum_of_squares(), "representations": reps});
    Ok(Outcome { payload, code: 0 })
}

fn duality_name(d: &Option<DualityClass>) -> &'static str {
    match d {
        None => "-",
        Some(DualityClass::None) => "not selfdual",
        Some(DualityClass::Orthogonal) => "orthogonal",
        Some(DualityClass::Symplectic) => "symplectic",
    }
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "-".into(), |v| v.to_string())
}

fn render_decomposition(r: &DecompositionReport) -> String {
    let mut o = String::new();
    let _ = writeln!(o, "{} {}", r.group, r.tag);
    let _ = writeln!(o, "dim {}  center {}  derived {}", opt(r.dim), opt(r.center_dim), r.derived_dim);
    let _ = writeln!(o, "structure {}", r.structure());
    let _ = writeln!(o, "block dims {:?}", r.block_dims());
    for (i, b) in r.blocks.iter().enumerate() {
        let _ = writeln!(o, "  block {i}: {} (dim {}) on {}", b.simple_type, b.dim, b.members.join(", "));
    }
    for rep in &r.reps {
        let _ = writeln!(
            o,
            "  {:<12} dim {:<2} image {:<3} derived {:<3} {:<13} blocks {:?}",
            rep.label,
            rep.dim,
            rep.image_dim,
            rep.derived_dim,
            duality_name(&rep.duality),
            rep.blocks
        );
    }
    if let Some(ga) = &r.group_algebra {
        let _ = writeln!(o, "group algebra: dim {} center {} derived {}", ga.dim, ga.center_dim, ga.derived_dim);
    }
    for c in &r.checks {
        let _ = writeln!(o, "[{}] {}: {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail);
    }
    o
}

fn render_classification(c: &IrrClassification) -> String {
    let mut o = String::new();
    let _ = writeln!(o, "{} irreducibles, {} classes under ≈", c.irreps.len(), c.approx_classes.len());
    for i in &c.irreps {
        let mut tags = Vec::new();
        if i.is_ref {
            tags.push("Ref");
        }
        if i.is_qref {
            tags.push("QRef");
        }
        if i.is_lambda_ref {
            tags.push("ΛRef");
        }
        let _ = writeln!(
            o,
            "  {:<12} dim {:<2} {:<14} X {:?} family {:?} {} class {}",
            i.label,
            i.dim,
            tags.join(","),
            i.x,
            i.family,
            duality_name(&i.duality),
            i.approx_class
        );
    }
    for (k, class) in c.approx_classes.iter().enumerate() {
        let labels: Vec<&str> = class.iter().map(|&i| c.irreps[i].label.as_str()).collect();
        let _ = writeln!(o, "  class {k}: {}", labels.join(" ≈ "));
    }
    for p in &c.predicted {
        let _ = writeln!(o, "  predicted {} (dim {}) from {}", p.simple_type, p.dim, p.representative);
    }
    o
}

fn render_value(v: &Value, indent: usize, o: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(_) => {
                        let _ = writeln!(o, "{pad}{k}:");
                        render_value(x, indent + 2, o);
                    }
                    Value::Array(a) if a.iter().any(|y| y.is_object()) => {
                        let _ = writeln!(o, "{pad}{k}:");
                        for y in a {
                            let _ = writeln!(o, "{pad}  -");
                            render_value(y, indent + 4, o);
                        }
                    }
                    _ => {
                        let _ = writeln!(o, "{pad}{k}: {}", scalar(x));
                    }
                }
            }
        }
        other => {
            let _ = writeln!(o, "{pad}{}", scalar(other));
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn render_generic(v: &Value) -> anyhow::Result<String> {
    let r: GenericityReport = serde_json::from_value(v["report"].clone())?;
    let mut o = String::new();
    let _ = writeln!(o, "lambda {}", scalar(&v["lambda"]));
    if !v["tau"].is_null() {
        let _ = writeln!(o, "tau {}  lambda0 {}", v["tau"], v["lambda0"]);
    }
    let _ = writeln!(o, "in L1 {}  in L2 {}  in L3 {}  generic {}", r.in_l1, r.in_l2, r.in_l3, r.generic);
    for h in &r.containing {
        let normal: Vec<String> = h.normal.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(o, "  {} class {} indices {:?} normal ({})", h.kind, h.class, h.indices, normal.join(", "));
    }
    Ok(o)
}

fn render(command: &Command, payload: &Value) -> anyhow::Result<String> {
    Ok(match command {
        Command::Decompose(_) => render_decomposition(&serde_json::from_value(payload.clone())?),
        Command::Classify(_) => render_classification(&serde_json::from_value(payload.clone())?),
        Command::Generic(_) => render_generic(payload)?,
        _ => {
            let mut o = String::new();
            render_value(payload, 0, &mut o);
            o
        }
    })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Group { .. } => "group info",
        Command::Decompose(_) => "decompose",
        Command::Classify(_) => "classify",
        Command::Generic(_) => "generic",
        Command::Adpoly(_) => "adpoly",
        Command::Inventory(_) => "inventory",
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let session = Session {
        format: cli.format,
        cache: if cli.no_cache {
            None
        } else {
            cli.cache_dir.clone().or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
        },
        element_cap: cli.element_cap,
        conductor_cap: cli.conductor_cap,
        seed: cli.seed,
        verbose: cli.verbose,
    };
    if session.element_cap == 0 || session.conductor_cap == 0 {
        return Err(anyhow::anyhow!("caps must be positive").into());
    }
    let outcome = match &cli.command {
        Command::Group { action: GroupAction::Info(src) } => group_info(&session, src)?,
        Command::Decompose(a) => decompose(&session, a)?,
        Command::Classify(a) => classify(&session, a)?,
        Command::Generic(a) => genericity(&session, a)?,
        Command::Adpoly(a) => adpoly_cmd(&session, a)?,
        Command::Inventory(a) => inventory_cmd(&session, a)?,
    };
    let text = match session.format {
        Format::Json => {
            let doc = json!({"command": command_name(&cli.command), "version": VERSION, "result": outcome.payload});
            serde_json::to_string_pretty(&doc).context("serializing output")? + "\n"
        }
        Format::Text => render(&cli.command, &outcome.payload)?,
    };
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            Err(anyhow::Error::from(e).context("writing output").into())
        }
        _ => Ok(outcome.code),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
