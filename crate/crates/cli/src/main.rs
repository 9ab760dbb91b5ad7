use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use smooth_ntt::bench::{emit_report, run_benchmark, BenchOptions, ReportFormat};
use smooth_ntt::transform::NoCount;
use smooth_ntt::{
    factorize, find_generator, plan_transform, prime_search, FieldParams, OutputOrder, Variant,
    VectorFile,
};

/// Number-theoretic transforms over primes with smooth p - 1.
#[derive(Debug, Parser)]
#[command(name = "smooth-ntt", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Transform an ntt-vec file.
    Transform(TransformArgs),
    /// Print the smallest generator of the order-n subgroup of F_p^*.
    Generator(GeneratorArgs),
    /// List primes min < p < max whose p - 1 factors over the given primes.
    Primes(PrimesArgs),
    /// Count and time one transform configuration.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct TransformArgs {
    input: PathBuf,
    output: PathBuf,
    /// Run the inverse transform.
    #[arg(long)]
    inverse: bool,
    #[arg(long, default_value = "twiddle")]
    variant: Variant,
    /// Radix schedule, e.g. 2,2,3.
    #[arg(long, value_delimiter = ',')]
    radices: Option<Vec<usize>>,
    /// Root of unity of order n.
    #[arg(long)]
    omega: Option<u64>,
    /// Leave the output in digit-reversed storage order.
    #[arg(long)]
    raw_order: bool,
}

#[derive(Debug, Args)]
struct GeneratorArgs {
    p: u64,
    /// Subgroup order; defaults to p - 1.
    #[arg(long)]
    n: Option<u64>,
}

#[derive(Debug, Args)]
struct PrimesArgs {
    #[arg(long)]
    min: u64,
    #[arg(long)]
    max: u64,
    #[arg(long, value_delimiter = ',', default_value = "2,3")]
    factors: Vec<u64>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    p: u64,
    /// Transform length; defaults to p - 1.
    #[arg(long)]
    n: Option<u64>,
    #[arg(long, value_delimiter = ',')]
    radices: Option<Vec<usize>>,
    #[arg(long, default_value = "twiddle")]
    variant: Variant,
    #[arg(long, default_value_t = 5)]
    trials: usize,
    /// Largest n for which the naive DFT is timed.
    #[arg(long, default_value_t = 1 << 14)]
    naive_cutoff: u64,
    #[arg(long, default_value = "human")]
    format: ReportFormat,
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
}

/// Exit status plus diagnostic.
struct Failure {
    code: u8,
    message: String,
}

const MALFORMED: u8 = 2;
const PLAN_ERROR: u8 = 3;

fn fail(code: u8, message: impl ToString) -> Failure {
    Failure {
        code,
        message: message.to_string(),
    }
}

fn field(p: u64) -> Result<FieldParams, Failure> {
    FieldParams::new(p).map_err(|e| fail(PLAN_ERROR, e))
}

fn transform(args: TransformArgs) -> Result<(), Failure> {
    let text = fs::read_to_string(&args.input)
        .map_err(|e| fail(MALFORMED, format!("{}: {e}", args.input.display())))?;
    let file = VectorFile::parse(&text)
        .map_err(|e| fail(MALFORMED, format!("{}: {e}", args.input.display())))?;
    let params = file.params;
    let omega = args
        .omega
        .map(|w| params.element(w))
        .transpose()
        .map_err(|e| fail(PLAN_ERROR, e))?;
    let plan = plan_transform(&params, file.len() as u64, omega, args.radices.as_deref())
        .map_err(|e| fail(PLAN_ERROR, e))?;
    let order = if args.raw_order {
        OutputOrder::DigitReversed
    } else {
        OutputOrder::Natural
    };
    let values = if args.inverse {
        plan.inverse(&file.values, args.variant, order, &mut NoCount)
    } else {
        plan.forward(&file.values, args.variant, order, &mut NoCount)
    }
    .map_err(|e| fail(PLAN_ERROR, e))?;
    fs::write(&args.output, VectorFile::new(params, values).to_string())
        .map_err(|e| fail(1, format!("{}: {e}", args.output.display())))
}

fn generator(args: GeneratorArgs) -> Result<(), Failure> {
    let params = field(args.p)?;
    let n = args.n.unwrap_or(params.group_order());
    let g = find_generator(&params, n).map_err(|e| fail(PLAN_ERROR, e))?;
    println!("{g} {}", factorize(n));
    Ok(())
}

fn primes(args: PrimesArgs) -> Result<(), Failure> {
    for record in prime_search(args.min, args.max, &args.factors) {
        println!("{record}");
    }
    Ok(())
}

fn bench(args: BenchArgs) -> Result<(), Failure> {
    let params = field(args.p)?;
    let n = args.n.unwrap_or(params.group_order());
    let options = BenchOptions {
        measure_naive_up_to: args.naive_cutoff,
        trials: args.trials,
        seed: args.seed,
    };
    let report = run_benchmark(
        &params,
        n,
        None,
        args.radices.as_deref(),
        args.variant,
        &options,
    )
    .map_err(|e| fail(PLAN_ERROR, e))?;
    print!("{}", emit_report(&[report], args.format));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Transform(a) => transform(a),
        Command::Generator(a) => generator(a),
        Command::Primes(a) => primes(a),
        Command::Bench(a) => bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, message }) => {
            eprintln!("smooth-ntt: {message}");
            ExitCode::from(code)
        }
    }
}
