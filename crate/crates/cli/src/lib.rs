//! `mkoszul`: maximal corners, decompositions, Betti bounds and a
//! benchmark harness over ideal files.
//!
//! [`run_command`] does all the work and returns the exit status with the
//! rendered output, so the binary is a thin wrapper.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monomial_koszul::oracle::{self, Verification};
use monomial_koszul::text::{default_variable_names, format_vector};
use monomial_koszul::{
    betti_bounds, build_mvt, compute_b_n_minus_1_with, format_monomial, hilbert_series, irreducible_decomposition_with,
    krull_dimension, parse_ideal, random_ideal, stanley_artinian_with, stanley_general, BenchSpec, Error,
    HilbertCoefficient, IdealDocument, IrreducibleComponent, MonomialIdeal, Multidegree, MvtOptions, PivotStrategy,
    StanleyDecomposition,
};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Unpruned trees double with every generator.
const MAX_BETTI_GENERATORS: usize = 16;

#[derive(Parser, Debug)]
#[command(name = "mkoszul", version, about = "Koszul homology of monomial ideals")]
struct Cli {
    /// Worker threads for the corner search.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Maximal corners, the support of the top Koszul homology.
    Corners { file: String },
    /// Irredundant irreducible decomposition.
    Decompose { file: String },
    /// Stanley decomposition of the quotient ring.
    Stanley { file: String },
    /// Multigraded Betti number bounds from the unpruned tree.
    Betti {
        file: String,
        /// Also compute exact Koszul homology on the lcm lattice.
        #[arg(long)]
        exact: bool,
    },
    /// Hilbert series and its coefficients.
    Hilbert {
        file: String,
        #[arg(long)]
        degree: usize,
    },
    /// Mayer-Vietoris tree.
    Mvt {
        file: String,
        /// Print every node.
        #[arg(long)]
        dump: bool,
        #[arg(long)]
        no_prune: bool,
        #[arg(long, value_enum, default_value_t = StrategyArg::Lex)]
        strategy: StrategyArg,
    },
    /// Seeded random ideal.
    Random(RandomArgs),
    /// Check decompositions against brute-force references.
    Verify { file: String },
    /// Time decompositions of seeded random ideals.
    Bench {
        /// e.g. `vars=10,gens=40,max-exp=30,seed=1,generic,reps=3`
        #[arg(long)]
        spec: String,
    },
}

#[derive(Args, Debug)]
struct RandomArgs {
    #[arg(long)]
    vars: usize,
    #[arg(long)]
    gens: usize,
    #[arg(long)]
    max_exp: u32,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    generic: bool,
    #[arg(short = 'o', long)]
    output: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Lex,
    Last,
}

impl From<StrategyArg> for PivotStrategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Lex => PivotStrategy::LexFirst,
            StrategyArg::Last => PivotStrategy::LastGenerator,
        }
    }
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = std::result::Result<(i32, String), Failure>;

/// Run one invocation; `argv[0]` is the program name.
pub fn run_command<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    match dispatch(&cli) {
        Ok(done) => done,
        Err(Failure::Usage(msg)) => (EXIT_USAGE, format!("error: {msg}\n")),
        Err(Failure::Domain(msg)) => (EXIT_DOMAIN, format!("error: {msg}\n")),
    }
}

fn load(path: &str) -> std::result::Result<IdealDocument, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{path}: {e}")))?;
    parse_ideal(&text).map_err(|e| Failure::Domain(format!("{path}: {e}")))
}

fn options(cli: &Cli) -> std::result::Result<MvtOptions, Failure> {
    if cli.threads == Some(0) {
        return Err(Failure::Usage("--threads must be positive".into()));
    }
    Ok(MvtOptions { threads: cli.threads, ..MvtOptions::default() })
}

fn vectors(ms: impl IntoIterator<Item = Multidegree>) -> Value {
    ms.into_iter().map(|m| json!(m.as_slice())).collect()
}

fn base_json(doc: &IdealDocument) -> serde_json::Map<String, Value> {
    let mut map = serde_json::Map::new();
    map.insert("variables".into(), json!(doc.variables));
    map.insert("generators".into(), vectors(doc.generators.iter().cloned()));
    map
}

fn render_json(map: serde_json::Map<String, Value>) -> String {
    let mut s = serde_json::to_string_pretty(&Value::Object(map)).expect("json values serialize");
    s.push('\n');
    s
}

fn component_text(c: &IrreducibleComponent, names: &[String]) -> String {
    let powers: Vec<String> = c
        .0
        .as_slice()
        .iter()
        .enumerate()
        .filter(|&(_, &a)| a > 0)
        .map(|(i, &a)| format_monomial(&Multidegree::pure_power(c.0.len(), i, a), names))
        .collect();
    format!("<{}>", powers.join(", "))
}

fn stanley_for(ideal: &MonomialIdeal, opts: &MvtOptions) -> Result<StanleyDecomposition, Failure> {
    Ok(if ideal.is_artinian() { stanley_artinian_with(ideal, opts)? } else { stanley_general(ideal)? })
}

fn dispatch(cli: &Cli) -> Outcome {
    let opts = options(cli)?;
    match &cli.command {
        Command::Corners { file } => {
            let doc = load(file)?;
            let found = compute_b_n_minus_1_with(&doc.ideal(), &opts)?;
            if cli.json {
                let mut map = base_json(&doc);
                map.insert("corners".into(), vectors(found.corners));
                return Ok((EXIT_OK, render_json(map)));
            }
            let mut out = String::new();
            for c in &found.corners {
                writeln!(out, "{}", format_monomial(c, &doc.variables)).unwrap();
            }
            Ok((EXIT_OK, out))
        }
        Command::Decompose { file } => {
            let doc = load(file)?;
            let comps = irreducible_decomposition_with(&doc.ideal(), &opts)?;
            if cli.json {
                let mut map = base_json(&doc);
                map.insert("components".into(), vectors(comps.into_iter().map(|c| c.0)));
                return Ok((EXIT_OK, render_json(map)));
            }
            let mut out = String::new();
            for c in &comps {
                writeln!(out, "{}", component_text(c, &doc.variables)).unwrap();
            }
            Ok((EXIT_OK, out))
        }
        Command::Stanley { file } => {
            let doc = load(file)?;
            let sd = stanley_for(&doc.ideal(), &opts)?;
            if cli.json {
                let mut map = base_json(&doc);
                map.insert("cones".into(), cones_json(&sd));
                return Ok((EXIT_OK, render_json(map)));
            }
            let mut out = String::new();
            for cone in &sd.cones {
                let free: Vec<&str> = cone.free.iter().map(|&i| doc.variables[i].as_str()).collect();
                writeln!(out, "{} k[{}]", format_monomial(&cone.base, &doc.variables), free.join(",")).unwrap();
            }
            Ok((EXIT_OK, out))
        }
        Command::Hilbert { file, degree } => {
            let doc = load(file)?;
            let sd = stanley_for(&doc.ideal(), &opts)?;
            let series = hilbert_series(&sd);
            let coeffs: Vec<HilbertCoefficient> = series.coefficients(*degree);
            let coeff_text: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
            let dim = krull_dimension(&sd);
            if cli.json {
                let mut map = base_json(&doc);
                let terms: Vec<Value> =
                    series.terms.iter().map(|&(shift, power)| json!({"shift": shift, "power": power})).collect();
                // big integers go out as decimal strings when they do not fit
                let coeffs: Vec<Value> = coeffs
                    .iter()
                    .map(|c| u64::try_from(c).map(Value::from).unwrap_or_else(|_| Value::from(c.to_string())))
                    .collect();
                map.insert("hilbert".into(), json!({"terms": terms, "coefficients": coeffs, "krull_dimension": dim}));
                return Ok((EXIT_OK, render_json(map)));
            }
            let mut out = String::new();
            let terms: Vec<String> =
                series.terms.iter().map(|&(shift, power)| format!("t^{shift}/(1-t)^{power}")).collect();
            writeln!(out, "series: {}", terms.join(" + ")).unwrap();
            writeln!(out, "krull-dimension: {dim}").unwrap();
            writeln!(out, "coefficients: {}", coeff_text.join(", ")).unwrap();
            Ok((EXIT_OK, out))
        }
        Command::Betti { file, exact } => betti(cli, &load(file)?, *exact),
        Command::Mvt { file, dump, no_prune, strategy } => {
            let doc = load(file)?;
            let ideal = doc.ideal();
            if *no_prune && ideal.num_generators() > MAX_BETTI_GENERATORS {
                return Err(Failure::Domain(format!(
                    "unpruned trees are limited to {MAX_BETTI_GENERATORS} generators"
                )));
            }
            let tree = build_mvt(&ideal, (*strategy).into(), !no_prune)?;
            let relevant = tree.nodes().iter().filter(|n| n.relevant).count();
            let mut out = format!("nodes: {}\nrelevant: {}\n", tree.nodes().len(), relevant);
            if *dump {
                out.push_str(&tree.dump(&doc.variables));
            }
            Ok((EXIT_OK, out))
        }
        Command::Random(args) => {
            let spec = BenchSpec {
                vars: args.vars,
                gens: args.gens,
                max_exp: args.max_exp,
                seed: args.seed,
                generic: args.generic,
                repetitions: 1,
            };
            let ideal = random_ideal(&spec)?;
            let doc = IdealDocument::new(default_variable_names(spec.vars), &ideal);
            let text = doc.to_string();
            match &args.output {
                Some(path) => {
                    std::fs::write(path, &text).map_err(|e| Failure::Domain(format!("{path}: {e}")))?;
                    Ok((EXIT_OK, format!("wrote {} generators to {path}\n", ideal.num_generators())))
                }
                None => Ok((EXIT_OK, text)),
            }
        }
        Command::Verify { file } => verify(cli, &load(file)?, &opts),
        Command::Bench { spec } => bench(cli, &parse_bench_spec(spec)?, &opts),
    }
}

fn cones_json(sd: &StanleyDecomposition) -> Value {
    sd.cones.iter().map(|c| json!({"base": c.base.as_slice(), "free": c.free})).collect()
}

fn betti(cli: &Cli, doc: &IdealDocument, exact: bool) -> Outcome {
    let ideal = doc.ideal();
    if ideal.num_generators() > MAX_BETTI_GENERATORS {
        return Err(Failure::Domain(format!("betti bounds are limited to {MAX_BETTI_GENERATORS} generators")));
    }
    let tree = build_mvt(&ideal, PivotStrategy::LexFirst, false)?;
    let bounds = betti_bounds(&tree)?;
    let mut rows: Vec<(usize, Multidegree, u8, usize, Option<usize>)> =
        bounds.entries.iter().map(|((i, mu), b)| (*i, mu.clone(), b.lower, b.upper, None)).collect();
    if exact {
        for row in rows.iter_mut() {
            row.4 = Some(oracle::koszul_homology_bruteforce(&ideal, row.0, &row.1)?);
        }
        // homology the tree missed would show up here
        for mu in oracle::lcm_lattice(&ideal) {
            for i in 0..=ideal.nvars() {
                if rows.iter().any(|r| r.0 == i && r.1 == mu) {
                    continue;
                }
                let dim = oracle::koszul_homology_bruteforce(&ideal, i, &mu)?;
                if dim > 0 {
                    rows.push((i, mu.clone(), 0, 0, Some(dim)));
                }
            }
        }
        rows.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));
    }
    if cli.json {
        let mut map = base_json(doc);
        let entries: Vec<Value> = rows
            .iter()
            .map(|(i, mu, lower, upper, exact)| {
                let mut e = json!({"i": i, "mu": mu.as_slice(), "lower": lower, "upper": upper});
                if let Some(x) = exact {
                    e["exact"] = json!(x);
                }
                e
            })
            .collect();
        map.insert("betti".into(), Value::Array(entries));
        return Ok((EXIT_OK, render_json(map)));
    }
    let mut out = String::new();
    for (i, mu, lower, upper, exact) in &rows {
        write!(out, "{i} {} {lower} {upper}", format_monomial(mu, &doc.variables)).unwrap();
        if let Some(x) = exact {
            write!(out, " {x}").unwrap();
        }
        out.push('\n');
    }
    Ok((EXIT_OK, out))
}

fn verdict(name: &str, v: &Result<Verification, Error>, out: &mut String) -> bool {
    match v {
        Ok(v) if v.ok => {
            let how = if v.sampled { "sampled" } else { "exhaustive" };
            writeln!(out, "{name}: ok ({how}, {} monomials)", v.checked).unwrap();
            true
        }
        Ok(v) => {
            let w = v.witness.as_ref().map(format_vector).unwrap_or_default();
            writeln!(out, "{name}: FAILED {} {w}", v.reason.as_deref().unwrap_or("")).unwrap();
            false
        }
        Err(Error::Scale(msg)) => {
            writeln!(out, "{name}: skipped ({msg})").unwrap();
            true
        }
        Err(e) => {
            writeln!(out, "{name}: FAILED {e}").unwrap();
            false
        }
    }
}

fn verify(cli: &Cli, doc: &IdealDocument, opts: &MvtOptions) -> Outcome {
    let ideal = doc.ideal();
    let comps = irreducible_decomposition_with(&ideal, opts)?;
    let mut out = String::new();
    let mut ok = verdict("irreducible", &oracle::verify_irreducible(&ideal, &comps), &mut out);
    let stanley = stanley_for(&ideal, opts).map_err(|_| ()).map(|sd| oracle::verify_stanley(&ideal, &sd));
    match stanley {
        Ok(v) => ok &= verdict("stanley", &v, &mut out),
        Err(()) => writeln!(out, "stanley: skipped (decomposition too large)").unwrap(),
    }
    // corners of the closure against a direct scan of the box below λ
    let closure = ideal.artinian_closure()?;
    let corners = compute_b_n_minus_1_with(&closure, opts)?.corners;
    match oracle::maximal_standard_monomials_box(&ideal, true) {
        Ok(scan) => {
            let lowered: Vec<Multidegree> = corners.iter().map(Multidegree::lowered).collect();
            if lowered == scan {
                writeln!(out, "corners: ok ({} maximal corners)", corners.len()).unwrap();
            } else {
                writeln!(out, "corners: FAILED search found {}, scan found {}", lowered.len(), scan.len()).unwrap();
                ok = false;
            }
        }
        Err(Error::Scale(msg)) => writeln!(out, "corners: skipped ({msg})").unwrap(),
        Err(e) => return Err(e.into()),
    }
    if cli.json {
        let mut map = base_json(doc);
        map.insert("ok".into(), json!(ok));
        map.insert("report".into(), json!(out.lines().collect::<Vec<_>>()));
        return Ok((if ok { EXIT_OK } else { EXIT_DOMAIN }, render_json(map)));
    }
    Ok((if ok { EXIT_OK } else { EXIT_DOMAIN }, out))
}

/// `key=value` pairs separated by commas; `generic` alone sets the flag.
fn parse_bench_spec(text: &str) -> std::result::Result<BenchSpec, Failure> {
    let mut spec = BenchSpec { generic: false, ..BenchSpec::default() };
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part.split_once('=').unwrap_or((part, ""));
        let num = |v: &str| v.parse::<u64>().map_err(|_| Failure::Usage(format!("bad value in `{part}`")));
        match key {
            "vars" => spec.vars = num(value)? as usize,
            "gens" => spec.gens = num(value)? as usize,
            "max-exp" => spec.max_exp = num(value)? as u32,
            "seed" => spec.seed = num(value)?,
            "reps" => spec.repetitions = num(value)? as usize,
            "generic" => spec.generic = value.is_empty() || value == "true",
            _ => return Err(Failure::Usage(format!("unknown bench key `{key}`"))),
        }
    }
    if spec.repetitions == 0 {
        return Err(Failure::Usage("reps must be positive".into()));
    }
    Ok(spec)
}

fn bench(cli: &Cli, spec: &BenchSpec, opts: &MvtOptions) -> Outcome {
    let ideal = random_ideal(spec)?;
    let mut runs = Vec::new();
    for _ in 0..spec.repetitions {
        let start = Instant::now();
        let comps = irreducible_decomposition_with(&ideal, opts)?;
        runs.push((start.elapsed().as_secs_f64(), comps.len()));
    }
    let stable = runs.windows(2).all(|w| w[0].1 == w[1].1);
    if cli.json {
        let runs: Vec<Value> = runs.iter().map(|&(t, c)| json!({"seconds": t, "components": c})).collect();
        let doc = json!({
            "spec": {"vars": spec.vars, "gens": spec.gens, "max_exp": spec.max_exp,
                     "seed": spec.seed, "generic": spec.generic, "reps": spec.repetitions},
            "generators": ideal.num_generators(),
            "runs": runs,
            "stable": stable,
        });
        return Ok((EXIT_OK, format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())));
    }
    let mut out = format!(
        "vars={} gens={} max-exp={} seed={} {}\n",
        spec.vars,
        spec.gens,
        spec.max_exp,
        spec.seed,
        if spec.generic { "generic" } else { "non-generic" }
    );
    for (k, (t, c)) in runs.iter().enumerate() {
        writeln!(out, "run {}: {t:.3}s components={c}", k + 1).unwrap();
    }
    writeln!(out, "stable: {}", if stable { "yes" } else { "no" }).unwrap();
    Ok((EXIT_OK, out))
}
