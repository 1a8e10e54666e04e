//! `rankdep`: rank-based independence tests from the command line.
//!
//! Subcommands: `test` (compute statistics and p-values on two-column
//! data), `generate` (sample the built-in bivariate distributions), and
//! `benchmark` (wall-time scaling report).
//!
//! Exit codes: 0 success, 2 parse/usage error, 3 tied values under the
//! `error` tie policy, 4 sample too small.

mod bench;
mod input;
mod output;

use std::fs;
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rankdep::{
    permutation_pvalue, rank_permutation, Generator, NullDist, NullDistSpec, PValueMethod,
    Statistic, TestResult, TiePolicy,
};

#[derive(Parser)]
#[command(
    name = "rankdep",
    version,
    about = "Rank-based independence tests: Hoeffding's D, the refined statistic R, and tau-star"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute independence statistics on two-column numeric input.
    ///
    /// Scaled values are n*D, n*R, and n*tau*/36 (= n*T/3); under
    /// independence all three converge to the same limit law, so one
    /// asymptotic p-value table serves every statistic.
    Test(TestArgs),
    /// Sample one of the built-in bivariate distributions.
    Generate(GenerateArgs),
    /// Time the statistics on random permutations across sample sizes.
    Benchmark(BenchmarkArgs),
}

#[derive(Args)]
struct TestArgs {
    /// Input path, or "-" for stdin; two numeric columns, separator
    /// auto-detected (comma, tab, or whitespace), one optional header
    #[arg(long, default_value = "-")]
    input: String,
    /// Which statistic(s) to compute
    #[arg(long = "test", value_enum, default_value_t = TestSelector::All)]
    selector: TestSelector,
    /// How to obtain p-values
    #[arg(long, value_enum, default_value_t = PvalueArg::None)]
    pvalue: PvalueArg,
    /// Resample count for --pvalue permutation
    #[arg(long, default_value_t = 999)]
    resamples: usize,
    /// What to do with tied values
    #[arg(long, value_enum, default_value_t = TiesArg::Error)]
    ties: TiesArg,
    /// Master seed: tie breaking, permutation resampling, and the
    /// asymptotic Monte Carlo table all derive from it
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cache file for the asymptotic null distribution (created when
    /// missing, reused when compatible)
    #[arg(long)]
    null_cache: Option<PathBuf>,
    /// Monte Carlo draws backing asymptotic p-values
    #[arg(long, default_value_t = 2_000_000)]
    mc_samples: usize,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(Args)]
struct GenerateArgs {
    /// One of: independent, yanagimoto, hyperbola, binary, monotone
    generator: String,
    /// Number of pairs to draw
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Flip the sign of each x with an independent fair coin
    #[arg(long)]
    mirror: bool,
    /// Bit depth of the binary generator (8..=62)
    #[arg(long)]
    depth: Option<u32>,
}

#[derive(Args)]
struct BenchmarkArgs {
    /// Comma-separated sample sizes, ascending
    #[arg(long, default_value = "100000,1000000")]
    sizes: String,
    /// Which statistic(s) to time
    #[arg(long = "test", value_enum, default_value_t = TestSelector::All)]
    selector: TestSelector,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum TestSelector {
    Hoeffding,
    Refined,
    Taustar,
    All,
}

impl TestSelector {
    fn statistics(self) -> Vec<Statistic> {
        match self {
            TestSelector::Hoeffding => vec![Statistic::HoeffdingD],
            TestSelector::Refined => vec![Statistic::RefinedR],
            TestSelector::Taustar => vec![Statistic::TauStar],
            TestSelector::All => vec![
                Statistic::HoeffdingD,
                Statistic::RefinedR,
                Statistic::TauStar,
            ],
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PvalueArg {
    None,
    Asymptotic,
    Permutation,
}

#[derive(Clone, Copy, ValueEnum)]
enum TiesArg {
    Error,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Tsv,
}

/// A failure with its process exit code.
struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn core_failure(e: rankdep::Error) -> Failure {
    use rankdep::Error;
    let code = match e {
        Error::TiesPresent { .. } => 3,
        Error::SampleTooSmall { .. } => 4,
        Error::LengthMismatch { .. } | Error::NonFiniteValue { .. } | Error::NotAPermutation(_) => {
            2
        }
        _ => 1,
    };
    fail(code, e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Test(args) => run_test(args),
        Command::Generate(args) => run_generate(args),
        Command::Benchmark(args) => run_benchmark(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run_test(args: TestArgs) -> Result<(), Failure> {
    let text = read_input(&args.input)?;
    let (xs, ys) = input::parse_columns(&text).map_err(|m| fail(2, m))?;
    let policy = match args.ties {
        TiesArg::Error => TiePolicy::Error,
        TiesArg::Random => TiePolicy::Random { seed: args.seed },
    };
    let perm = rank_permutation(&xs, &ys, policy).map_err(core_failure)?;

    let stats = args.selector.statistics();
    let null_dist = match args.pvalue {
        PvalueArg::Asymptotic => Some(build_null_dist(&args)?),
        PvalueArg::Permutation if args.resamples == 0 => {
            return Err(fail(2, "--pvalue permutation requires --resamples >= 1"));
        }
        _ => None,
    };

    let mut lines = Vec::new();
    for stat in stats {
        let mut result = TestResult::without_pvalue(stat, &perm).map_err(core_failure)?;
        match args.pvalue {
            PvalueArg::None => {}
            PvalueArg::Asymptotic => {
                let dist = null_dist.as_ref().unwrap();
                result.p_value = Some(dist.p_value(result.scaled).map_err(core_failure)?);
                result.p_method = PValueMethod::Asymptotic;
            }
            PvalueArg::Permutation => {
                let p = permutation_pvalue(stat, &perm, args.resamples, args.seed)
                    .map_err(core_failure)?;
                result.p_value = Some(p);
                result.p_method = PValueMethod::Permutation;
            }
        }
        lines.push(result);
    }

    match args.format {
        FormatArg::Json => {
            for r in &lines {
                println!("{}", output::json_line(r, args.seed));
            }
        }
        FormatArg::Tsv => {
            println!("{}", output::TSV_HEADER);
            for r in &lines {
                println!("{}", output::tsv_line(r, args.seed));
            }
        }
    }
    Ok(())
}

fn build_null_dist(args: &TestArgs) -> Result<NullDist, Failure> {
    let spec = NullDistSpec {
        mc_samples: args.mc_samples,
        seed: args.seed,
        ..NullDistSpec::default()
    };
    match &args.null_cache {
        Some(path) => NullDist::load_or_build(path, &spec).map_err(core_failure),
        None => Ok(NullDist::from_spec(&spec)),
    }
}

fn run_generate(args: GenerateArgs) -> Result<(), Failure> {
    let mut gen = Generator::parse(&args.generator)
        .ok_or_else(|| fail(2, format!("unknown generator {:?}", args.generator)))?;
    if let Some(depth) = args.depth {
        if !matches!(gen, Generator::BinaryExpansion { .. }) {
            return Err(fail(2, "--depth only applies to the binary generator"));
        }
        if !(8..=62).contains(&depth) {
            return Err(fail(2, "--depth must be in 8..=62"));
        }
        gen = Generator::BinaryExpansion { depth };
    }
    let sample = gen.sample(args.n, args.seed, args.mirror);
    let mut out = String::with_capacity(args.n * 48);
    for (x, y) in sample.xs.iter().zip(sample.ys.iter()) {
        out.push_str(&format!("{x:.16e}\t{y:.16e}\n"));
    }
    print!("{out}");
    Ok(())
}

fn run_benchmark(args: BenchmarkArgs) -> Result<(), Failure> {
    let sizes: Vec<usize> = args
        .sizes
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|e| fail(2, format!("bad --sizes value: {e}")))?;
    if sizes.is_empty() || sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(fail(2, "--sizes must be strictly ascending"));
    }
    let report = bench::run_benchmark(&sizes, &args.selector.statistics(), args.seed)
        .map_err(core_failure)?;
    print!("{report}");
    Ok(())
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| fail(2, format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| fail(2, format!("reading {path}: {e}")))
    }
}
