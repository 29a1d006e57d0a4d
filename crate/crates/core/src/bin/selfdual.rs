use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use selfdual::constructions::{
    algorithm_one, construct_G, construct_P_prime, construct_Q, construct_S, DegreeTuple,
};
use selfdual::planar_map::{induced_by_degree, radial, DegreeMode, JsonMap};
use selfdual::verify::{
    canonical_graph, check_lemma_leaf, check_phi, component_fingerprint, enumerate_realizations,
    self_duality_witness, EnumerationQuery, Filters,
};
use selfdual::{suite, DegreeSequence, Error, PlanarMap};

#[derive(Parser)]
#[command(name = "selfdual", version, about = "Build and check self-dual 3-polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a polyhedron from one of the families.
    Construct(ConstructArgs),
    /// Check a property of a map read from a file or built from a tuple.
    Verify(VerifyArgs),
    /// List the realisations of a degree sequence up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Print the component fingerprint of H3 or H+.
    Fingerprint(FingerprintArgs),
    /// Run the acceptance criteria.
    Suite(SuiteArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// P(T) from a degree tuple (--tuple).
    POfT,
    /// S(x, y) (--x, --y).
    S,
    /// Q(x, y) (--x, --y).
    Q,
    /// G_p (--p).
    Gp,
    /// P'(n; k) (--n, --k).
    Pprime,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    JsonMap,
    Graph6,
    Dot,
}

#[derive(Args)]
struct ConstructArgs {
    family: Family,
    #[arg(long)]
    tuple: Option<DegreeTuple>,
    #[arg(long)]
    x: Option<usize>,
    #[arg(long)]
    y: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "json-map")]
    format: Format,
    /// Write here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A map given as a file, or P(T) for a tuple.
#[derive(Args)]
#[group(required = true, multiple = true)]
struct Source {
    /// json-map or text rotation system.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long)]
    tuple: Option<DegreeTuple>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Property {
    #[arg(long)]
    self_dual: bool,
    /// Adjacency pattern of the high-degree vertices of P(T); needs --tuple.
    #[arg(long)]
    lemma_leaf: bool,
    /// v_i -> f_i on the radial produced for --tuple.
    #[arg(long)]
    phi: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    property: Property,
    #[command(flatten)]
    source: Source,
    /// Also write a JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// For example `4,4,3^4`.
    #[arg(long)]
    sequence: DegreeSequence,
    #[arg(long, conflicts_with = "polyhedral")]
    self_dual: bool,
    /// 3-connected and planar.
    #[arg(long)]
    polyhedral: bool,
    #[arg(long)]
    max_results: Option<usize>,
    /// Overrides SELFDUAL_ORDER_CAP.
    #[arg(long)]
    order_cap: Option<usize>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Which {
    #[arg(long)]
    h3: bool,
    #[arg(long)]
    hplus: bool,
}

#[derive(Args)]
struct FingerprintArgs {
    #[command(flatten)]
    which: Which,
    #[command(flatten)]
    source: Source,
    /// Take the subgraph of the radial instead of the map itself.
    #[arg(long)]
    radial: bool,
}

#[derive(Args)]
struct SuiteArgs {
    /// Run only this criterion.
    #[arg(long)]
    criterion: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    report: Option<PathBuf>,
}

/// Failure modes and their exit statuses.
enum Failure {
    /// Exit 1, with an optional reason.
    Verification(Option<String>),
    /// Exit 2.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotPolyhedral => Failure::Verification(Some(e.to_string())),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Construct(a) => construct(a),
        Command::Verify(a) => verify(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Fingerprint(a) => fingerprint(a),
        Command::Suite(a) => run_suite(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(reason)) => {
            if let Some(msg) = reason {
                eprintln!("{msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("this family needs {flag}")))
}

fn construct(a: ConstructArgs) -> Outcome {
    let map = match a.family {
        Family::POfT => algorithm_one(&need(a.tuple, "--tuple")?)?.polyhedron,
        Family::S => construct_S(need(a.x, "--x")?, need(a.y, "--y")?)?,
        Family::Q => construct_Q(need(a.x, "--x")?, need(a.y, "--y")?)?,
        Family::Gp => construct_G(need(a.p, "--p")?)?,
        Family::Pprime => construct_P_prime(need(a.n, "--n")?, need(a.k, "--k")?)?,
    };
    let text = match a.format {
        Format::JsonMap => {
            let mut s = serde_json::to_string_pretty(&map.to_json_map()).expect("serialisable");
            s.push('\n');
            s
        }
        Format::Graph6 => format!("{}\n", map.underlying().to_graph6()),
        Format::Dot => map.to_dot("polyhedron"),
    };
    emit(&text, a.out.as_deref())
}

fn emit(text: &str, out: Option<&Path>) -> Outcome {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_map(path: &Path) -> Result<PlanarMap, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    if text.trim_start().starts_with('{') {
        let json: JsonMap = serde_json::from_str(&text)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        Ok(json.to_map()?)
    } else {
        Ok(PlanarMap::from_text(&text)?)
    }
}

/// The map named by `s`: the file when given, otherwise P(T).
fn source_map(s: &Source) -> Result<PlanarMap, Failure> {
    match (&s.file, &s.tuple) {
        (Some(path), _) => read_map(path),
        (None, Some(t)) => Ok(algorithm_one(t)?.polyhedron),
        (None, None) => Err(Failure::Usage("give --file or --tuple".into())),
    }
}

fn write_report(path: Option<&Path>, value: &serde_json::Value) -> Outcome {
    match path {
        Some(p) => {
            let text = serde_json::to_string_pretty(value).expect("serialisable") + "\n";
            emit(&text, Some(p))
        }
        None => Ok(()),
    }
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification(None))
    }
}

fn verify(a: VerifyArgs) -> Outcome {
    if a.property.self_dual {
        let map = source_map(&a.source)?;
        let witness = self_duality_witness(&map)?;
        let faces = map.faces();
        let pairs: Vec<(String, String)> = witness
            .iter()
            .flatten()
            .enumerate()
            .map(|(v, &f)| {
                let names: Vec<String> = faces[f].iter().map(|&w| map.label(w)).collect();
                (map.label(v), format!("[{}]", names.join(",")))
            })
            .collect();
        println!("self-dual: {}", if witness.is_some() { "yes" } else { "no" });
        for (v, f) in &pairs {
            println!("{v} -> {f}");
        }
        let bijection: serde_json::Map<String, serde_json::Value> =
            pairs.into_iter().map(|(v, f)| (v, json!(f))).collect();
        write_report(
            a.report.as_deref(),
            &json!({"property": "self-dual", "passed": witness.is_some(), "bijection": bijection}),
        )?;
        return verdict(witness.is_some());
    }
    let t = need(a.source.tuple.clone(), "--tuple")?;
    let (name, ok) = if a.property.lemma_leaf {
        let map = match &a.source.file {
            Some(path) => read_map(path)?,
            None => algorithm_one(&t)?.polyhedron,
        };
        ("lemma-leaf", check_lemma_leaf(&t, &map)?)
    } else {
        if a.source.file.is_some() {
            return Err(Failure::Usage("--phi works on --tuple only".into()));
        }
        ("phi", check_phi(&algorithm_one(&t)?.radial)?)
    };
    println!("{name} {t}: {}", if ok { "pass" } else { "fail" });
    write_report(
        a.report.as_deref(),
        &json!({"property": name, "tuple": t.to_string(), "passed": ok}),
    )?;
    verdict(ok)
}

fn enumerate(a: EnumerateArgs) -> Outcome {
    let filters = if a.self_dual {
        Filters::self_dual()
    } else if a.polyhedral {
        Filters::polyhedral()
    } else {
        Filters::none()
    };
    let mut q = EnumerationQuery::new(a.sequence).with_filters(filters);
    if let Some(n) = a.max_results {
        q = q.with_max_results(n);
    }
    if let Some(cap) = a.order_cap {
        q = q.with_order_cap(cap);
    }
    let found = enumerate_realizations(&q)?;
    for r in &found {
        println!("{}", canonical_graph(&r.graph).to_graph6());
    }
    println!("count {}", found.len());
    Ok(())
}

fn fingerprint(a: FingerprintArgs) -> Outcome {
    let map = source_map(&a.source)?;
    let g = if a.radial { radial(&map)?.map().underlying() } else { map.underlying() };
    let mode = if a.which.h3 { DegreeMode::Three } else { DegreeMode::AtLeastFour };
    println!("{}", component_fingerprint(&induced_by_degree(&g, mode).graph));
    Ok(())
}

fn run_suite(a: SuiteArgs) -> Outcome {
    let reports = match a.criterion {
        Some(id) => vec![suite::run_criterion(id, a.seed)?],
        None => suite::run_all(a.seed),
    };
    for r in &reports {
        println!("{r}");
    }
    let passed = reports.iter().all(|r| r.passed);
    write_report(
        a.report.as_deref(),
        &json!({"seed": a.seed, "passed": passed, "criteria": reports}),
    )?;
    verdict(passed)
}
