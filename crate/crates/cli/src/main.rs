use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use sumsetlab::extremal::DEFAULT_CANDIDATE_CAP;
use sumsetlab::{
    bound_for_computed, sums, CandidateSpace, IntSet, MultiSeq, Regime, SumInput, SweepConfig,
    Variant, VerificationReport,
};
use sumsetlab_cli::output::{
    csv_bound, csv_compute, csv_verify, plain_bound, plain_compute, plain_verify, to_json,
    BoundParams, ComputeParams, ComputeResult, Envelope, Format, InputEcho, VerifyParams,
};
use sumsetlab_cli::parse;

#[derive(Parser)]
#[command(
    name = "sumsetlab",
    version,
    about = "Size-restricted subset and subsequence sums: compute them exactly, \
             evaluate the minimum-cardinality bounds, and verify the direct and \
             inverse theorems exhaustively over bounded universes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a restricted sum set for one set or sequence
    Compute(ComputeArgs),
    /// Evaluate the lower bound, achieved cardinality, and extremality
    Bound(BoundArgs),
    /// Run an exhaustive verification sweep
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Args)]
#[command(group = ArgGroup::new("input").required(true).args(["set", "terms"]))]
struct InputArgs {
    /// Set literal: comma-separated distinct integers, e.g. --set 1,2,3,4
    #[arg(long, value_name = "INTS", allow_hyphen_values = true)]
    set: Option<String>,
    /// Sequence terms: comma-separated distinct integers (pairs with --reps)
    #[arg(
        long,
        value_name = "INTS",
        requires = "reps",
        conflicts_with = "set",
        allow_hyphen_values = true
    )]
    terms: Option<String>,
    /// Repetition counts matching --terms, e.g. --reps 2,1,3
    #[arg(
        long,
        value_name = "COUNTS",
        requires = "terms",
        conflicts_with = "set"
    )]
    reps: Option<String>,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    /// Write the report to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    AtLeast,
    AtMost,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::AtLeast => Variant::AtLeast,
            VariantArg::AtMost => Variant::AtMost,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RegimeArg {
    Positive,
    WithZero,
}

impl From<RegimeArg> for Regime {
    fn from(r: RegimeArg) -> Self {
        match r {
            RegimeArg::Positive => Regime::Positive,
            RegimeArg::WithZero => Regime::WithZero,
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Size (sets) or length (sequences) restriction
    #[arg(long)]
    alpha: usize,
    /// Restriction side
    #[arg(long, value_enum, default_value = "at-least")]
    variant: VariantArg,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct BoundArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Size (sets) or length (sequences) restriction
    #[arg(long)]
    alpha: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Sweep candidates asserting the direct inequality achieved >= bound
    Direct(DirectArgs),
    /// Sweep extremal candidates against the predicted dilated-interval form
    Inverse(InverseArgs),
}

#[derive(Args)]
struct SweepCommonArgs {
    /// Universe bound N: candidate values are drawn from [1, N]
    /// (the with-zero regime adds 0 as the forced least value)
    #[arg(long, value_name = "N")]
    max: i64,
    /// Sign regime of the swept universe
    #[arg(long, value_enum, default_value = "positive")]
    regime: RegimeArg,
    /// Candidate cap; takes precedence over the SUMSETLAB_CAP environment
    /// variable and the built-in default
    #[arg(long)]
    cap: Option<u64>,
    /// Worker threads: 0 = available parallelism, 1 = serial reference run
    #[arg(long, default_value_t = 0)]
    workers: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
#[command(group = ArgGroup::new("space").required(true).args(["k", "reps"]))]
#[command(group = ArgGroup::new("alphas").required(true).args(["alpha", "alpha_range"]))]
struct DirectArgs {
    /// Sweep every k-subset of the universe
    #[arg(long)]
    k: Option<usize>,
    /// Sweep every term tuple for this repetition pattern
    #[arg(long, value_name = "COUNTS")]
    reps: Option<String>,
    /// Single restriction value
    #[arg(long)]
    alpha: Option<usize>,
    /// Inclusive restriction range, e.g. --alpha-range 0..5
    #[arg(long, value_name = "LO..HI")]
    alpha_range: Option<String>,
    #[command(flatten)]
    sweep: SweepCommonArgs,
}

#[derive(Args)]
#[command(group = ArgGroup::new("space").required(true).args(["k", "reps"]))]
struct InverseArgs {
    /// Sweep every k-subset of the universe
    #[arg(long)]
    k: Option<usize>,
    /// Sweep every term tuple for this repetition pattern
    #[arg(long, value_name = "COUNTS")]
    reps: Option<String>,
    /// Restriction value
    #[arg(long)]
    alpha: usize,
    /// Enumerate and classify extremal inputs without asserting the inverse
    /// theorem (allowed outside its hypotheses)
    #[arg(long)]
    explore: bool,
    #[command(flatten)]
    sweep: SweepCommonArgs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Compute(args) => run_compute(args),
        Command::Bound(args) => run_bound(args),
        Command::Verify(VerifyCommand::Direct(args)) => run_direct(args),
        Command::Verify(VerifyCommand::Inverse(args)) => run_inverse(args),
    }
}

/// Parses the input flags into a [`SumInput`] plus the literal echo used in
/// report parameters.
fn build_input(args: &InputArgs) -> Result<(SumInput, InputEcho), String> {
    if let Some(raw) = &args.set {
        let elements = parse::int_list(raw, "set")?;
        let set = IntSet::new(elements.clone()).map_err(|e| e.to_string())?;
        return Ok((
            set.into(),
            InputEcho {
                set: Some(elements),
                terms: None,
                reps: None,
            },
        ));
    }
    let terms = parse::int_list(args.terms.as_ref().expect("clap group"), "terms")?;
    let reps = parse::count_list(args.reps.as_ref().expect("clap requires"), "reps")?;
    let seq = MultiSeq::new(terms.clone(), reps.clone()).map_err(|e| e.to_string())?;
    Ok((
        seq.into(),
        InputEcho {
            set: None,
            terms: Some(terms),
            reps: Some(reps),
        },
    ))
}

fn run_compute(args: ComputeArgs) -> Result<ExitCode, String> {
    let (input, echo) = build_input(&args.input)?;
    let variant: Variant = args.variant.into();
    let start = Instant::now();
    let sum_set = sums(&input, args.alpha, variant).map_err(|e| e.to_string())?;
    let envelope = Envelope {
        command: "compute".to_string(),
        parameters: ComputeParams {
            input: echo,
            alpha: args.alpha,
            variant,
        },
        result: ComputeResult::from(&sum_set),
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    let text = match args.out.format {
        Format::Plain => plain_compute(&envelope.result),
        Format::Json => to_json(&envelope),
        Format::Csv => csv_compute(&envelope.result),
    };
    emit(&args.out.output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn run_bound(args: BoundArgs) -> Result<ExitCode, String> {
    let (input, echo) = build_input(&args.input)?;
    let start = Instant::now();
    let report = bound_for_computed(&input, args.alpha).map_err(|e| e.to_string())?;
    let envelope = Envelope {
        command: "bound".to_string(),
        parameters: BoundParams {
            input: echo,
            alpha: args.alpha,
        },
        result: report,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    let text = match args.out.format {
        Format::Plain => plain_bound(&envelope.result),
        Format::Json => to_json(&envelope),
        Format::Csv => csv_bound(&envelope.result),
    };
    emit(&args.out.output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn build_space(k: Option<usize>, reps: &Option<String>) -> Result<CandidateSpace, String> {
    match (k, reps) {
        (Some(k), None) => Ok(CandidateSpace::sets(k)),
        (None, Some(raw)) => Ok(CandidateSpace::seqs(parse::count_list(raw, "reps")?)),
        _ => unreachable!("clap group enforces exactly one"),
    }
}

fn resolve_cap(flag: Option<u64>) -> Result<u64, String> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("SUMSETLAB_CAP") {
        Ok(value) => value
            .trim()
            .parse()
            .map_err(|_| format!("invalid SUMSETLAB_CAP value '{value}'")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_CANDIDATE_CAP),
        Err(e) => Err(format!("SUMSETLAB_CAP: {e}")),
    }
}

fn sweep_config(common: &SweepCommonArgs) -> Result<SweepConfig, String> {
    Ok(SweepConfig::new(common.max, common.regime.into())
        .with_cap(resolve_cap(common.cap)?)
        .with_workers(common.workers))
}

fn emit_verify(
    common: &SweepCommonArgs,
    space: &CandidateSpace,
    report: VerificationReport,
    config: &SweepConfig,
) -> Result<ExitCode, String> {
    let elapsed_ms = report.elapsed.as_millis() as u64;
    let envelope = Envelope {
        command: "verify".to_string(),
        parameters: VerifyParams {
            mode: report.mode,
            k: match space {
                CandidateSpace::Sets { k } => Some(*k),
                CandidateSpace::Seqs { .. } => None,
            },
            reps: space.reps().map(<[usize]>::to_vec),
            alphas: report.alphas.clone(),
            universe_max: config.universe_max,
            regime: config.regime,
            cap: config.candidate_cap,
        },
        result: report,
        elapsed_ms,
    };
    let text = match common.out.format {
        Format::Plain => plain_verify(&envelope.result),
        Format::Json => to_json(&envelope),
        Format::Csv => csv_verify(&envelope.result),
    };
    emit(&common.out.output, &text)?;
    if envelope.result.counterexamples.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(2))
    }
}

fn run_direct(args: DirectArgs) -> Result<ExitCode, String> {
    let space = build_space(args.k, &args.reps)?;
    let config = sweep_config(&args.sweep)?;
    let alphas = match (&args.alpha, &args.alpha_range) {
        (Some(a), None) => vec![*a],
        (None, Some(raw)) => parse::alpha_range(raw)?,
        _ => unreachable!("clap group enforces exactly one"),
    };
    let report = sumsetlab::verify_direct(&space, &alphas, &config).map_err(|e| e.to_string())?;
    emit_verify(&args.sweep, &space, report, &config)
}

fn run_inverse(args: InverseArgs) -> Result<ExitCode, String> {
    let space = build_space(args.k, &args.reps)?;
    let config = sweep_config(&args.sweep)?;
    let report = if args.explore {
        sumsetlab::enumerate_extremal(&space, args.alpha, &config)
    } else {
        sumsetlab::verify_inverse(&space, args.alpha, &config)
    }
    .map_err(|e| e.to_string())?;
    emit_verify(&args.sweep, &space, report, &config)
}

fn emit(path: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match path {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
