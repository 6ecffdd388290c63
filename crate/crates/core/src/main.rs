use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use lerch::dsl::{eval, parse};
use lerch::eulerian::level_factor;
use lerch::identity::{builtin_corpus, parse_binding, parse_corpus, run_suite, Entry, SuiteReport};
use lerch::series::Rational;

#[derive(Parser)]
#[command(name = "lerch", version, about = "Exact q-series expansion and identity checking")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Expand an expression as a truncated q-series.
    Expand {
        expr: String,
        /// Keep exponents strictly below this (integer or a/b).
        #[arg(long, default_value = "10", value_parser = parse_order)]
        order: Rational,
        /// Bind a symbol, e.g. `--bind x=zeta(3,1)*q^(1/2)`.
        #[arg(long = "bind", value_name = "SYM=MONO")]
        binds: Vec<String>,
    },
    /// Check every case of a corpus file.
    Verify {
        file: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Check the built-in corpus.
    Suite {
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(clap::Args)]
struct RunArgs {
    /// Override every case's order.
    #[arg(long, value_parser = parse_order)]
    order: Option<Rational>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Append wall times to the report.
    #[arg(long)]
    timings: bool,
}

fn parse_order(s: &str) -> Result<Rational, String> {
    let r = match s.split_once('/') {
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| format!("bad order `{s}`"))?;
            let b: i64 = b.trim().parse().map_err(|_| format!("bad order `{s}`"))?;
            if b == 0 {
                return Err("zero denominator".into());
            }
            Rational::new(a, b)
        }
        None => Rational::from_integer(s.trim().parse().map_err(|_| format!("bad order `{s}`"))?),
    };
    if r <= Rational::from_integer(0) {
        return Err("order must be positive".into());
    }
    Ok(r)
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn expand(expr: &str, order: Rational, binds: &[String]) -> ExitCode {
    let e = match parse(expr) {
        Ok(e) => e,
        Err(err) => return usage(err),
    };
    let binding = if binds.is_empty() {
        Default::default()
    } else {
        match parse_binding(&binds.join(", ")) {
            Ok(b) => b,
            Err(err) => return usage(format!("--bind: {err}")),
        }
    };
    let s = match eval(&e, &binding, order) {
        Ok(s) => s,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(1);
        }
    };
    println!("# {e}");
    println!("# D={} M={} order={}", s.denom(), s.field_order(), order);
    for (k, c) in s.terms() {
        println!("q^({}/{}): {c}", k.numer(), k.denom());
    }
    ExitCode::SUCCESS
}

fn print_report(source: &str, run: &RunArgs, report: &SuiteReport) -> ExitCode {
    println!("# corpus: {source}");
    match run.order {
        Some(o) => println!("# order: {o}"),
        None => println!("# order: per case"),
    }
    let levels: Vec<String> = (2..=5).map(|c| format!("f_{c}={}", level_factor(c))).collect();
    println!("# level factors f_c = 2c/gcd(c,4): {}", levels.join(" "));
    print!("{}", report.render(run.timings));
    if report.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn check(source: &str, entries: &[Entry], run: &RunArgs) -> ExitCode {
    if run.jobs == Some(0) {
        return usage("--jobs must be at least 1");
    }
    let report = run_suite(entries, run.order, run.jobs);
    print_report(source, run, &report)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match cli.cmd {
        Cmd::Expand { expr, order, binds } => expand(&expr, order, &binds),
        Cmd::Verify { file, run } => match fs::read_to_string(&file) {
            Ok(text) => check(&file, &parse_corpus(&text), &run),
            Err(e) => usage(format!("{file}: {e}")),
        },
        Cmd::Suite { run } => check("built-in", &builtin_corpus(), &run),
    }
}
