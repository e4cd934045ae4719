use std::collections::{BTreeMap, HashMap};
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lambda_forge::dot::{db_term_to_dot, term_to_dot};
use lambda_forge::exit;
use lambda_forge::files::{self, FileError};
use lambda_forge::parallel::Pipeline;
use lambda_forge::reference::{self, RefStats};
use lambda_forge_core::gen::{Convention, DatasetSpec, GenConfig, LambdaSetKind, SplitSizes, Summary, Task};
use lambda_forge_core::metrics::{cross_eval_matrix, EvalReport, EvalSet, Predictor, SymbolicOracle};
use lambda_forge_core::{
    beta_reduce_once, from_debruijn, normalize, normalize_db, parse_debruijn, parse_traditional, reduce_db_once,
    to_debruijn, NameOrder, ParseError, Strategy, DEFAULT_MAX_STEPS, DEFAULT_MAX_TOKENS,
};

#[derive(Parser)]
#[command(name = "lambda-forge", version, about = "Lambda-calculus reduction engine and dataset generator")]
struct Cli {
    /// Worker threads for batch, generation and evaluation work (default: one per core).
    #[arg(long, global = true, env = "LAMBDA_FORGE_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// One reduction step. Reads one term per line from stdin when TERM is omitted.
    Reduce(ReduceArgs),
    /// Reduce to normal form, printing the result and the step count.
    Normalize(NormalizeArgs),
    /// Convert between named and de Bruijn notation.
    Convert(ConvertArgs),
    /// Generate a dataset: split files plus a metadata sidecar.
    Generate(GenerateArgs),
    /// Statistics of a generated dataset.
    Stats(StatsArgs),
    /// Exact-match accuracy and string similarity of predictions.
    Eval(EvalArgs),
    /// Graphviz DOT tree of a term.
    Dot(DotArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Notation {
    Trad,
    Db,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Lazy,
    Strict,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Lazy => Strategy::Lazy,
            StrategyArg::Strict => Strategy::Strict,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TaskArg {
    Obr,
    Mbr,
}

impl From<TaskArg> for Task {
    fn from(t: TaskArg) -> Self {
        match t {
            TaskArg::Obr => Task::Obr,
            TaskArg::Mbr => Task::Mbr,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Random,
    Cb,
    Ob,
    Mixed,
}

impl From<KindArg> for LambdaSetKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Random => LambdaSetKind::Random,
            KindArg::Cb => LambdaSetKind::ClosedBool,
            KindArg::Ob => LambdaSetKind::OpenBool,
            KindArg::Mixed => LambdaSetKind::Mixed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Trad,
    Randvars,
    Db,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Trad => Convention::Traditional,
            ConventionArg::Randvars => Convention::RandomVars,
            ConventionArg::Db => Convention::DeBruijn,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Alpha,
    Random,
}

#[derive(Args)]
struct TermArgs {
    /// Term in prefix notation; omitted to read one term per line from stdin.
    term: Option<String>,
    #[arg(long, value_enum, default_value = "trad")]
    notation: Notation,
    #[arg(long, value_enum, default_value = "lazy")]
    strategy: StrategyArg,
}

#[derive(Args)]
struct ReduceArgs {
    #[command(flatten)]
    term: TermArgs,
}

#[derive(Args)]
struct NormalizeArgs {
    #[command(flatten)]
    term: TermArgs,
    #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
    max_steps: usize,
}

#[derive(Args)]
struct ConvertArgs {
    term: Option<String>,
    #[arg(long, value_enum, default_value = "trad")]
    from: Notation,
    #[arg(long, value_enum, default_value = "db")]
    to: Notation,
    /// Name order when producing named terms.
    #[arg(long, value_enum, default_value = "alpha")]
    order: OrderArg,
    #[arg(long, env = "LAMBDA_FORGE_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long, value_enum)]
    task: TaskArg,
    /// One or more conventions, comma separated.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "trad")]
    convention: Vec<ConventionArg>,
    /// Number of distinct source terms.
    #[arg(long)]
    count: usize,
    #[arg(long, env = "LAMBDA_FORGE_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = ".")]
    out: PathBuf,
    #[arg(long, default_value_t = DEFAULT_MAX_TOKENS)]
    max_tokens: usize,
    #[arg(long, default_value_t = 5)]
    max_internal: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
    max_steps: usize,
    /// Probability that a bound-position leaf of a random term is free.
    #[arg(long, default_value_t = 0.25)]
    p_free: f64,
    #[arg(long, default_value_t = 10_000)]
    valid_size: usize,
    #[arg(long, default_value_t = 10_000)]
    test_size: usize,
}

#[derive(Args)]
struct StatsArgs {
    /// Dataset path without extension, e.g. `out/obr_cb_trad`.
    base: PathBuf,
    /// Show the published reference table next to the measured values.
    #[arg(long, alias = "compare-paper")]
    compare_reference: bool,
}

#[derive(Args)]
struct EvalArgs {
    /// Prediction file, one output per line.
    predictions: Option<PathBuf>,
    /// Reference file: a dataset split or one target per line.
    references: Option<PathBuf>,
    /// Print a score line per example.
    #[arg(long)]
    per_example: bool,
    /// Cross-evaluation: every model on every `--set`.
    #[arg(long, requires = "sets")]
    matrix: bool,
    /// Evaluation set as NAME=SPLIT_FILE.
    #[arg(long = "set", value_name = "NAME=PATH")]
    sets: Vec<String>,
    /// Model predictions for one set as MODEL:SET=PATH.
    #[arg(long = "prediction", value_name = "MODEL:SET=PATH")]
    predictions_for: Vec<String>,
    /// Add the exact reduction engine as a model row, as TASK:CONVENTION.
    #[arg(long, value_name = "TASK:CONVENTION")]
    oracle: Option<String>,
}

#[derive(Args)]
struct DotArgs {
    term: String,
    #[arg(long, value_enum, default_value = "trad")]
    notation: Notation,
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }

    fn parse(e: ParseError) -> Self {
        Failure::new(exit::PARSE_ERROR, format!("parse error: {e}"))
    }
}

impl From<FileError> for Failure {
    fn from(e: FileError) -> Self {
        Failure::new(e.exit_code(), e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(exit::IO_ERROR, e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pipeline = match Pipeline::new(cli.jobs) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit::VALIDATION_ERROR as u8);
        }
    };
    let result = match cli.command {
        Command::Reduce(a) => cmd_reduce(&pipeline, a),
        Command::Normalize(a) => cmd_normalize(&pipeline, a),
        Command::Convert(a) => cmd_convert(a),
        Command::Generate(a) => cmd_generate(&pipeline, a),
        Command::Stats(a) => cmd_stats(a),
        Command::Eval(a) => cmd_eval(&pipeline, a),
        Command::Dot(a) => cmd_dot(a),
    };
    let code = match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    };
    ExitCode::from(code as u8)
}

fn stdin_lines() -> Result<Vec<String>, Failure> {
    Ok(io::stdin().lock().lines().collect::<Result<_, _>>()?)
}

/// Outcome of running a term command on one input.
enum Outcome {
    Done(String),
    /// Printed, with a notice and a distinct exit code.
    Flagged(String, &'static str, i32),
}

fn reduce_one(text: &str, notation: Notation, strategy: Strategy) -> Result<Outcome, ParseError> {
    Ok(match notation {
        Notation::Trad => {
            let t = parse_traditional(text)?;
            match beta_reduce_once(&t, strategy) {
                Some(out) if out.capture_required => Outcome::Flagged(
                    out.term.to_string(),
                    "substitution captured a free variable; the input breaks the Barendregt convention",
                    exit::OK,
                ),
                Some(out) => Outcome::Done(out.term.to_string()),
                None => Outcome::Flagged(t.to_string(), "normal form", exit::NORMAL_FORM),
            }
        }
        Notation::Db => {
            let t = parse_debruijn(text)?;
            match reduce_db_once(&t, strategy) {
                Some(next) => Outcome::Done(next.to_string()),
                None => Outcome::Flagged(t.to_string(), "normal form", exit::NORMAL_FORM),
            }
        }
    })
}

fn normalize_one(text: &str, notation: Notation, strategy: Strategy, max_steps: usize) -> Result<Outcome, ParseError> {
    let (term, steps, normal, capture) = match notation {
        Notation::Trad => {
            let n = normalize(&parse_traditional(text)?, strategy, max_steps);
            (n.term.to_string(), n.steps, n.reached_normal_form, n.capture_required)
        }
        Notation::Db => {
            let n = normalize_db(&parse_debruijn(text)?, strategy, max_steps);
            (n.term.to_string(), n.steps, n.reached_normal_form, false)
        }
    };
    let line = format!("{term}\t{steps}");
    Ok(if !normal {
        Outcome::Flagged(line, "no normal form within the step cap", exit::STEP_CAP)
    } else if capture {
        Outcome::Flagged(line, "a substitution captured a free variable", exit::OK)
    } else {
        Outcome::Done(line)
    })
}

/// Runs `f` on the TERM argument, or on every stdin line in parallel.
///
/// Single-term mode prints notices on stderr and returns their exit code.
/// Batch mode prints one line per input (an empty line for unparseable
/// input) and fails with the parse-error code if any line did not parse.
fn run_terms(
    pipeline: &Pipeline,
    term: Option<String>,
    single: impl Fn(&str) -> CmdResult,
    f: impl Fn(&str) -> Result<Outcome, ParseError> + Sync + Send,
) -> CmdResult {
    if let Some(t) = term {
        return single(&t);
    }
    let lines = stdin_lines()?;
    let results = pipeline.map(&lines, |l| f(l));
    let mut out = io::BufWriter::new(io::stdout().lock());
    let mut code = exit::OK;
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(Outcome::Done(s)) | Ok(Outcome::Flagged(s, _, _)) => writeln!(out, "{s}")?,
            Err(e) => {
                writeln!(out)?;
                eprintln!("line {}: parse error: {e}", i + 1);
                code = exit::PARSE_ERROR;
            }
        }
    }
    out.flush()?;
    Ok(code)
}

fn print_outcome(outcome: Outcome) -> CmdResult {
    match outcome {
        Outcome::Done(s) => {
            println!("{s}");
            Ok(exit::OK)
        }
        Outcome::Flagged(s, notice, code) => {
            println!("{s}");
            eprintln!("{notice}");
            Ok(code)
        }
    }
}

fn cmd_reduce(pipeline: &Pipeline, a: ReduceArgs) -> CmdResult {
    let (notation, strategy) = (a.term.notation, Strategy::from(a.term.strategy));
    run_terms(
        pipeline,
        a.term.term,
        |t| print_outcome(reduce_one(t, notation, strategy).map_err(Failure::parse)?),
        move |t| reduce_one(t, notation, strategy),
    )
}

fn cmd_normalize(pipeline: &Pipeline, a: NormalizeArgs) -> CmdResult {
    let (notation, strategy, max_steps) = (a.term.notation, Strategy::from(a.term.strategy), a.max_steps);
    run_terms(
        pipeline,
        a.term.term,
        |t| {
            // one line for the term, one for the step count
            let outcome = normalize_one(t, notation, strategy, max_steps).map_err(Failure::parse)?;
            let split = |s: String| {
                let (term, steps) = s.split_once('\t').map(|(a, b)| (a.to_owned(), b.to_owned())).unwrap();
                format!("{term}\nsteps={steps}")
            };
            print_outcome(match outcome {
                Outcome::Done(s) => Outcome::Done(split(s)),
                Outcome::Flagged(s, n, c) => Outcome::Flagged(split(s), n, c),
            })
        },
        move |t| normalize_one(t, notation, strategy, max_steps),
    )
}

fn convert_one(text: &str, a: &ConvertArgs) -> Result<String, Failure> {
    let db = match a.from {
        Notation::Trad => to_debruijn(&parse_traditional(text).map_err(Failure::parse)?),
        Notation::Db => parse_debruijn(text).map_err(Failure::parse)?,
    };
    Ok(match a.to {
        Notation::Db => db.to_string(),
        Notation::Trad => {
            let order = match a.order {
                OrderArg::Alpha => NameOrder::Alphabetical,
                OrderArg::Random => {
                    NameOrder::shuffled(&mut ChaCha8Rng::seed_from_u64(a.seed), db.abstraction_count() + 1)
                }
            };
            from_debruijn(&db, &order)
                .map_err(|e| Failure::new(exit::VALIDATION_ERROR, e.to_string()))?
                .to_string()
        }
    })
}

fn cmd_convert(a: ConvertArgs) -> CmdResult {
    let inputs = match &a.term {
        Some(t) => vec![t.clone()],
        None => stdin_lines()?,
    };
    for line in &inputs {
        println!("{}", convert_one(line, &a)?);
    }
    Ok(exit::OK)
}

fn print_summary(label: &str, s: &Summary, reference: Option<RefStats>) {
    println!(
        "{label:<13} n={:<9} min={:<6} max={:<6} mean={:<9.3} stddev={:.3}",
        s.count, s.min, s.max, s.mean, s.stddev
    );
    if let Some(r) = reference {
        println!(
            "{:<13} {:<11} min={:<6} max={:<6} mean={:<9.3} stddev={:.3}",
            "  reference", "", r.min, r.max, r.mean, r.stddev
        );
        println!(
            "{:<13} {:<11} min={:<+6.1} max={:<+6.1} mean={:<+9.1} (% deviation)",
            "",
            "",
            100.0 * (s.min - r.min) / r.min,
            100.0 * (s.max - r.max) / r.max,
            100.0 * (s.mean - r.mean) / r.mean
        );
    }
}

fn cmd_generate(pipeline: &Pipeline, a: GenerateArgs) -> CmdResult {
    let config = GenConfig {
        max_tokens: a.max_tokens,
        max_internal: a.max_internal,
        p_free: a.p_free,
        max_steps: a.max_steps,
        ..GenConfig::default()
    };
    if !(0.0..=1.0).contains(&a.p_free) || a.max_tokens < 1 {
        return Err(Failure::new(exit::VALIDATION_ERROR, "--p-free must be in [0, 1] and --max-tokens at least 1"));
    }
    let (kind, task) = (LambdaSetKind::from(a.kind), Task::from(a.task));
    lambda_forge_core::gen::check_task(kind, task).map_err(|e| Failure::new(exit::VALIDATION_ERROR, e.to_string()))?;
    let ls = pipeline.build_lambda_set(kind, task, a.count, a.seed, &config);
    if ls.terms.len() < a.count {
        eprintln!("note: only {} distinct source terms exist under these limits", ls.terms.len());
    }
    for conv in &a.convention {
        let spec = DatasetSpec {
            kind,
            task,
            convention: Convention::from(*conv),
            seed: a.seed,
            config,
            sizes: SplitSizes { valid: a.valid_size, test: a.test_size },
        };
        let ds = pipeline
            .render_dataset(spec, &ls)
            .map_err(|e| Failure::new(exit::VALIDATION_ERROR, e.to_string()))?;
        let stats = files::write_dataset(&a.out, &ds)?;
        let base = spec.base_name();
        println!(
            "{}: {} train / {} valid / {} test from {} source terms",
            files::split_path(&a.out, &base, "*").display(),
            ds.train.len(),
            ds.valid.len(),
            ds.test.len(),
            ds.source_terms
        );
        println!(
            "  cleaning: {} raw, {} needed renaming, {} normal input, {} duplicate",
            ds.cleaning.before, ds.cleaning.capture, ds.cleaning.normal_input, ds.cleaning.duplicate
        );
        if let Some(st) = stats {
            print_summary("  input size", &st.input_tokens, None);
            if let Some(r) = &st.reductions {
                print_summary("  reductions", r, None);
            }
        }
    }
    Ok(exit::OK)
}

fn meta_summary(meta: &BTreeMap<String, String>, prefix: &str) -> Option<Summary> {
    let get = |k: &str| meta.get(&format!("{prefix}_{k}"))?.parse::<f64>().ok();
    Some(Summary {
        count: meta.get(&format!("{prefix}_count"))?.parse().ok()?,
        min: get("min")?,
        max: get("max")?,
        mean: get("mean")?,
        stddev: get("stddev")?,
    })
}

fn cmd_stats(a: StatsArgs) -> CmdResult {
    let dir = a.base.parent().map(Path::to_path_buf).unwrap_or_default();
    let base = a
        .base
        .file_name()
        .and_then(|s| s.to_str())
        .ok_or_else(|| Failure::new(exit::VALIDATION_ERROR, "dataset base name must be valid UTF-8"))?;

    let mut sizes = Vec::new();
    for split in files::SPLITS {
        let pairs = files::read_pairs(&files::split_path(&dir, base, split))?;
        println!("{split:<5} {} pairs", pairs.len());
        sizes.extend(pairs.iter().map(|(input, _)| input.split_ascii_whitespace().count() as f64));
    }
    let meta = files::read_meta(&files::meta_path(&dir, base))?;
    let task = meta.get("task").and_then(|t| Task::from_tag(t));
    let kind = meta.get("kind").and_then(|k| LambdaSetKind::from_tag(k));
    let traditional = meta.get("convention").map(String::as_str) == Some(Convention::Traditional.tag());
    let compare = a.compare_reference && traditional;
    if a.compare_reference && !traditional {
        eprintln!("note: reference sizes exist for the traditional convention only");
    }

    let Some(input) = Summary::of(sizes) else {
        return Err(Failure::new(exit::VALIDATION_ERROR, "dataset has no pairs"));
    };
    let pick = |f: fn(Task, LambdaSetKind) -> Option<RefStats>| match (compare, task, kind) {
        (true, Some(t), Some(k)) => f(t, k),
        _ => None,
    };
    print_summary("input size", &input, pick(reference::input_sizes));
    match meta_summary(&meta, "reductions") {
        Some(r) => print_summary("reductions", &r, pick(reference::reductions)),
        None => println!("reductions    (not recorded)"),
    }
    Ok(exit::OK)
}

/// Predictions read from a file, looked up by input line.
struct FilePredictions(HashMap<String, String>);

impl Predictor for FilePredictions {
    fn predict(&self, input: &str) -> String {
        self.0.get(input).cloned().unwrap_or_default()
    }
}

fn print_report(label: &str, r: &EvalReport) {
    println!(
        "{label}n={} ACC (%) {:.2} STR SIM (%) {:.2}",
        r.n,
        100.0 * r.exact_match_accuracy,
        100.0 * r.mean_string_similarity
    );
}

fn metrics_failure(e: impl ToString) -> Failure {
    Failure::new(exit::VALIDATION_ERROR, e.to_string())
}

fn cmd_eval(pipeline: &Pipeline, a: EvalArgs) -> CmdResult {
    if a.matrix {
        return cmd_eval_matrix(a);
    }
    let (Some(pred_path), Some(ref_path)) = (&a.predictions, &a.references) else {
        return Err(Failure::new(exit::VALIDATION_ERROR, "eval needs PREDICTIONS and REFERENCES (or --matrix)"));
    };
    let predictions = files::read_targets(pred_path)?;
    let references = files::read_targets(ref_path)?;
    let report = pipeline.evaluate(&predictions, &references).map_err(metrics_failure)?;
    print_report("", &report);
    println!("n={}", report.n);
    println!("exact_match_accuracy={}", report.exact_match_accuracy);
    println!("mean_string_similarity={}", report.mean_string_similarity);
    if a.per_example {
        for (i, s) in report.per_example.iter().flatten().enumerate() {
            println!("{}\t{}\t{}", i + 1, u8::from(s.matched), s.similarity);
        }
    }
    Ok(exit::OK)
}

fn cmd_eval_matrix(a: EvalArgs) -> CmdResult {
    let bad = |what: &str, v: &str| Failure::new(exit::VALIDATION_ERROR, format!("malformed {what} `{v}`"));

    let mut sets: Vec<(String, Vec<(String, String)>)> = Vec::new();
    for s in &a.sets {
        let (name, path) = s.split_once('=').ok_or_else(|| bad("--set", s))?;
        sets.push((name.to_owned(), files::read_pairs(Path::new(path))?));
    }

    // model -> set -> predictions by input
    let mut models: Vec<(String, BTreeMap<String, Vec<String>>)> = Vec::new();
    for p in &a.predictions_for {
        let (lhs, path) = p.split_once('=').ok_or_else(|| bad("--prediction", p))?;
        let (model, set) = lhs.split_once(':').ok_or_else(|| bad("--prediction", p))?;
        if !sets.iter().any(|(n, _)| n == set) {
            return Err(Failure::new(exit::VALIDATION_ERROR, format!("unknown set `{set}` in `{p}`")));
        }
        let lines = files::read_targets(Path::new(path))?;
        let idx = match models.iter().position(|(m, _)| m == model) {
            Some(i) => i,
            None => {
                models.push((model.to_owned(), BTreeMap::new()));
                models.len() - 1
            }
        };
        models[idx].1.insert(set.to_owned(), lines);
    }

    let mut predictors: Vec<(String, Box<dyn Predictor>)> = Vec::new();
    for (model, per_set) in models {
        let mut by_input = HashMap::new();
        for (set, pairs) in &sets {
            let Some(lines) = per_set.get(set) else {
                return Err(Failure::new(exit::VALIDATION_ERROR, format!("model `{model}` has no predictions for `{set}`")));
            };
            if lines.len() != pairs.len() {
                return Err(metrics_failure(lambda_forge_core::metrics::MetricsError::LengthMismatch {
                    predictions: lines.len(),
                    references: pairs.len(),
                }));
            }
            for ((input, _), pred) in pairs.iter().zip(lines) {
                by_input.insert(input.clone(), pred.clone());
            }
        }
        predictors.push((model, Box::new(FilePredictions(by_input))));
    }
    if let Some(o) = &a.oracle {
        let parsed = o
            .split_once(':')
            .and_then(|(t, c)| Some(SymbolicOracle { task: Task::from_tag(t)?, convention: Convention::from_tag(c)? }));
        predictors.push(("oracle".to_owned(), Box::new(parsed.ok_or_else(|| bad("--oracle", o))?)));
    }

    let eval_sets: Vec<EvalSet<'_>> = sets
        .iter()
        .map(|(name, pairs)| EvalSet {
            name: name.clone(),
            inputs: pairs.iter().map(|(i, _)| i.as_str()).collect(),
            references: pairs.iter().map(|(_, t)| t.as_str()).collect(),
        })
        .collect();
    let rows: Vec<(&str, &dyn Predictor)> = predictors.iter().map(|(n, p)| (n.as_str(), p.as_ref())).collect();
    let m = cross_eval_matrix(&rows, &eval_sets).map_err(metrics_failure)?;

    print!("{:<16}", "ACC (%)");
    for c in &m.columns {
        print!(" {c:>10}");
    }
    println!(" {:>10}", "AVERAGE");
    for row in &m.rows {
        print!("{:<16}", row.model);
        for cell in &row.cells {
            print!(" {:>10.2}", 100.0 * cell.exact_match_accuracy);
        }
        println!(" {:>10.2}", 100.0 * row.average_accuracy);
    }
    for row in &m.rows {
        for (c, cell) in m.columns.iter().zip(&row.cells) {
            println!("{}.{c}.accuracy={}", row.model, cell.exact_match_accuracy);
            println!("{}.{c}.similarity={}", row.model, cell.mean_string_similarity);
        }
        println!("{}.average_accuracy={}", row.model, row.average_accuracy);
    }
    Ok(exit::OK)
}

fn cmd_dot(a: DotArgs) -> CmdResult {
    let dot = match a.notation {
        Notation::Trad => term_to_dot(&parse_traditional(&a.term).map_err(Failure::parse)?),
        Notation::Db => db_term_to_dot(&parse_debruijn(&a.term).map_err(Failure::parse)?),
    };
    print!("{dot}");
    Ok(exit::OK)
}
