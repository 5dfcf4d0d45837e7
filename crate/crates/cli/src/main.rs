use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use iar::bench::{run_benchmark, stat_record, write_csv, BenchMode, GenParams, StatRecord};
use iar::hoa::{parse_hoa, to_dot, to_hoa_with, EmitOptions};
use iar::iar::{IarOptions, Permutation};
use iar::oracle::{counterexample, lasso_counterexample};
use iar::translate::{translate, Mode, TranslateOptions};
use iar::{Automaton, Error};

/// Deterministic Rabin, generalized Rabin and Streett automata to parity
/// automata via index appearance records.
#[derive(Parser)]
#[command(name = "iar", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Translate an HOA automaton into a parity automaton.
    Translate(TranslateArgs),
    /// Check two HOA automata for language equivalence.
    Check(CheckArgs),
    /// Translate random Rabin automata and report sizes as CSV.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum CliMode {
    Iar,
    IarStar,
}

#[derive(Args)]
struct TranslateArgs {
    /// Input file; standard input if omitted or `-`.
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "iar-star")]
    mode: CliMode,
    /// Initial record for iar mode, as 1-based pair indices (`2,1`).
    #[arg(long, value_name = "I1,I2,...")]
    initial_perm: Option<Permutation>,
    /// Reuse existing successors when several prohibited sets are visited.
    #[arg(long)]
    prefer_existing: bool,
    /// Emit state-based acceptance.
    #[arg(long)]
    state_based_output: bool,
    /// Complete the input with a rejecting sink first.
    #[arg(long)]
    complete: bool,
    /// Emit Graphviz instead of HOA.
    #[arg(long)]
    dot: bool,
    /// Print size statistics to standard error.
    #[arg(long)]
    stats: bool,
    /// Abort when the output grows beyond this many states.
    #[arg(long, default_value_t = IarOptions::default().state_budget)]
    budget: usize,
    #[arg(short, long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// First automaton (`-` for standard input).
    a: PathBuf,
    /// Second automaton (`-` for standard input).
    b: PathBuf,
    /// Also compare all lasso words with prefix and cycle up to this length.
    #[arg(long, value_name = "BOUND")]
    lasso: Option<usize>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// State count range `A..B` (inclusive).
    #[arg(short = 'Q', value_parser = parse_range, default_value = "5..15")]
    states: RangeInclusive<usize>,
    /// Pair count range `A..B` (inclusive).
    #[arg(long, value_parser = parse_range, default_value = "2..3")]
    pairs: RangeInclusive<usize>,
    /// Number of atomic propositions.
    #[arg(long, default_value_t = 1)]
    ap: usize,
    #[arg(long, default_value_t = 0.05)]
    density: f64,
    #[arg(long, default_value_t = 0.2)]
    acc_probability: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated subset of iar, iar-star, iar-prefer-existing, sb-output.
    #[arg(long, value_delimiter = ',', default_value = "iar,iar-star")]
    modes: Vec<BenchMode>,
    /// Write CSV here instead of standard output.
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
    /// Per-instance state budget.
    #[arg(long, default_value_t = 1_000_000)]
    budget: usize,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    match s.split_once("..") {
        Some((a, b)) => Ok(parse(a)?..=parse(b)?),
        None => {
            let n = parse(s)?;
            Ok(n..=n)
        }
    }
}

fn read_input(path: Option<&Path>) -> anyhow::Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
    }
}

fn load(path: Option<&Path>) -> anyhow::Result<Automaton> {
    let text = read_input(path)?;
    let name = path.map_or("<stdin>".into(), |p| p.display().to_string());
    parse_hoa(&text).with_context(|| format!("parsing {name}"))
}

fn write_output(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn run_translate(args: TranslateArgs) -> anyhow::Result<ExitCode> {
    let input = load(args.input.as_deref())?;
    let opts = TranslateOptions {
        mode: match args.mode {
            CliMode::Iar => Mode::Iar,
            CliMode::IarStar => Mode::IarStar,
        },
        initial_perm: args.initial_perm,
        iar: IarOptions {
            prefer_existing: args.prefer_existing,
            state_budget: args.budget,
            ..IarOptions::default()
        },
        complete: args.complete,
        state_based: args.state_based_output,
    };
    let tag = match args.mode {
        CliMode::Iar => "iar",
        CliMode::IarStar => "iar-star",
    };
    let start = Instant::now();
    let result = translate(&input, &opts);
    let record = stat_record(0, tag, &result, start.elapsed().as_secs_f64() * 1e3);
    let out = result?;
    let text = if args.dot {
        to_dot(&out)
    } else {
        let emit = EmitOptions {
            name: None,
            state_based: args.state_based_output,
        };
        to_hoa_with(&out, &emit)?
    };
    write_output(args.output.as_deref(), &text)?;
    if args.stats {
        eprintln!("{}", StatRecord::CSV_HEADER);
        eprintln!("{}", record.csv_row(true));
    }
    Ok(ExitCode::SUCCESS)
}

fn run_check(args: CheckArgs) -> anyhow::Result<ExitCode> {
    if args.a == Path::new("-") && args.b == Path::new("-") {
        bail!("only one input can come from standard input");
    }
    let a = load(Some(&args.a))?;
    let b = load(Some(&args.b))?;
    let mut witness = counterexample(&a, &b)?;
    if witness.is_none() {
        if let Some(bound) = args.lasso {
            witness = lasso_counterexample(&a, &b, bound)?;
        }
    }
    match witness {
        None => {
            println!("equivalent");
            Ok(ExitCode::SUCCESS)
        }
        Some(w) => {
            println!("not equivalent");
            println!("{}", w.display(a.dts.alphabet()));
            Ok(ExitCode::from(1))
        }
    }
}

fn run_bench(args: BenchArgs) -> anyhow::Result<ExitCode> {
    let params = GenParams {
        states: args.states,
        pairs: args.pairs,
        aps: args.ap,
        density: args.density,
        acc_probability: args.acc_probability,
        seed: args.seed,
        count: args.count,
    };
    if args.modes.is_empty() {
        bail!("no modes selected");
    }
    let report = run_benchmark(&params, &args.modes, args.budget)?;
    let mut buf = Vec::new();
    write_csv(&report, &mut buf, true)?;
    write_output(args.csv.as_deref(), &String::from_utf8(buf)?)?;
    Ok(ExitCode::SUCCESS)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::BudgetExceeded(_)) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Translate(a) => run_translate(a),
        Command::Check(a) => run_check(a),
        Command::Bench(a) => run_bench(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
