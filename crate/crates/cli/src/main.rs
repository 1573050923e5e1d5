use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use edgering::{FamilyKind, Limits};
use edgering_cli::{read_graph, render_json, render_table, CliResult, Outcome, EXIT_INPUT, EXIT_OK};

#[derive(Parser)]
#[command(name = "edgering", version, about = "Edge polytopes, edge rings and their resolutions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Maximum number of cycles to enumerate.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget_cycles: Option<u64>,
    /// Maximum number of lattice-point candidates to visit.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget_points: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Disjoint,
    OneCommon,
    Even,
    Odd,
}

impl From<Kind> for FamilyKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Disjoint => FamilyKind::DisjointPair,
            Kind::OneCommon => FamilyKind::OneCommonVertex,
            Kind::Even => FamilyKind::EvenEar,
            Kind::Odd => FamilyKind::OddEar,
        }
    }
}

#[derive(Args)]
struct Input {
    /// Graph file: a `p N M` header followed by `u v` edge lines.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    q: usize,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Structure, dimension, h*-vector and ideal generators.
    Analyze(Input),
    /// Graded Betti numbers of the edge ring.
    Betti {
        #[command(flatten)]
        input: Input,
        /// Largest internal degree; defaults to the edge count, which is complete.
        #[arg(long)]
        jmax: Option<usize>,
    },
    /// Linear-resolution prediction, optionally verified.
    Classify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        jmax: Option<usize>,
    },
    /// Certify a family's interior lattice point and degree bound.
    LemmaWitness(FamilyArgs),
    /// Classify all small connected bipartite graphs.
    Scan {
        #[arg(long, default_value_t = 9)]
        nmax: usize,
        /// Verify graphs with at most this many edges.
        #[arg(long, default_value_t = 14)]
        verify_budget: usize,
    },
    /// Print a family graph in the graph file format.
    Family(FamilyArgs),
}

fn run(cli: &Cli, limits: &Limits) -> CliResult<Option<Outcome>> {
    use edgering_cli as cmd;
    let outcome = match &cli.command {
        Command::Analyze(i) => cmd::analyze(&read_graph(&i.input)?, limits)?,
        Command::Betti { input, jmax } => cmd::betti(&read_graph(&input.input)?, *jmax, limits)?,
        Command::Classify { input, verify, jmax } => cmd::classify(&read_graph(&input.input)?, *verify, *jmax, limits)?,
        Command::LemmaWitness(f) => cmd::lemma(&cmd::family_spec(f.kind.into(), f.q, f.k, f.m)?, limits)?,
        Command::Scan { nmax, verify_budget } => cmd::scan_graphs(*nmax, *verify_budget, limits)?,
        Command::Family(f) => {
            print!("{}", cmd::family(&cmd::family_spec(f.kind.into(), f.q, f.k, f.m)?)?);
            return Ok(None);
        }
    };
    Ok(Some(outcome))
}

fn main() -> ExitCode {
    // usage errors are input errors; exit code 2 is reserved for budgets
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { EXIT_OK });
        }
    };
    let mut limits = Limits::default();
    if let Some(c) = cli.budget_cycles {
        limits.cycles = c as usize;
    }
    if let Some(p) = cli.budget_points {
        limits.points = p.into();
    }
    match run(&cli, &limits) {
        Ok(None) => ExitCode::from(EXIT_OK),
        Ok(Some(out)) => {
            match cli.format {
                Format::Json => println!("{}", render_json(&out.record)),
                Format::Table => print!("{}", render_table(&out.record)),
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
