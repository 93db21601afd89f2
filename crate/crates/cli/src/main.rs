use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod job;

use job::{Job, Method, Source};

/// Fixed default seed so randomized checks are reproducible.
const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Parser)]
#[command(
    name = "metabelian",
    version,
    about = "Wedderburn decompositions of semisimple group algebras F_q[G], G metabelian"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Wedderburn table and the automorphism-group term.
    Decompose(GroupArgs),
    /// Like `decompose`, plus the coefficient vector of every idempotent.
    Idempotents(GroupArgs),
    /// Run the invariant suite and the independent center-split comparison.
    Verify(GroupArgs),
    /// Compare the generic engine with the metacyclic and closed-form paths.
    Compare(GroupArgs),
    /// Sweep the D1/D2 closed forms against the engine over a grid.
    Families(FamilyArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// Cayley table file.
    #[arg(long, value_name = "FILE")]
    cayley: Option<PathBuf>,
    /// Metacyclic group ⟨a, b | a^n = 1, b^t = a^k, b^-1 a b = a^r⟩.
    #[arg(long, num_args = 4, value_names = ["N", "T", "K", "R"])]
    metacyclic: Option<Vec<u64>>,
    #[arg(long, value_name = "M")]
    d1: Option<u32>,
    #[arg(long, value_name = "M")]
    d2: Option<u32>,
}

#[derive(Args)]
struct GroupArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Characteristic of the coefficient field.
    #[arg(long = "p")]
    p: u64,
    /// The field is F_q with q = p^a.
    #[arg(long = "a", default_value_t = 1)]
    a: u32,
    /// Largest group order the subgroup lattice is enumerated for.
    #[arg(long, default_value_t = metabelian::group::DEFAULT_SUBGROUP_CAP)]
    cap: usize,
    /// Seed for the randomized choice-independence check.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = MethodArg::Generic)]
    method: MethodArg,
    /// Include idempotent coefficient vectors in the output.
    #[arg(long)]
    emit_idempotents: bool,
    /// Write the machine-readable report here.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Generic,
    Metacyclic,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    D1,
    D2,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum, value_delimiter = ',', default_values = ["d1", "d2"])]
    family: Vec<FamilyArg>,
    #[arg(long, default_value_t = 2)]
    m_min: u32,
    #[arg(long, default_value_t = 4)]
    m_max: u32,
    /// Odd primes.
    #[arg(long, value_delimiter = ',', default_values = ["3", "5", "7", "13"])]
    q: Vec<u64>,
    #[arg(long, default_value_t = metabelian::group::DEFAULT_SUBGROUP_CAP)]
    cap: usize,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn group_job(cmd: job::Command, args: GroupArgs) -> Job {
    let s = args.source;
    let source = if let Some(path) = s.cayley {
        Source::Cayley(path)
    } else if let Some(v) = s.metacyclic {
        Source::Metacyclic(v[0], v[1], v[2], v[3])
    } else if let Some(m) = s.d1 {
        Source::D1(m)
    } else {
        Source::D2(s.d2.expect("clap enforces exactly one source"))
    };
    Job {
        command: cmd,
        source,
        p: args.p,
        a: args.a,
        cap: args.cap,
        seed: args.seed,
        method: match args.method {
            MethodArg::Generic => Method::Generic,
            MethodArg::Metacyclic => Method::Metacyclic,
        },
        emit_idempotents: args.emit_idempotents || matches!(cmd, job::Command::Idempotents),
        output: args.output,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Decompose(a) => job::run(&group_job(job::Command::Decompose, a)),
        Command::Idempotents(a) => job::run(&group_job(job::Command::Idempotents, a)),
        Command::Verify(a) => job::run(&group_job(job::Command::Verify, a)),
        Command::Compare(a) => job::run(&group_job(job::Command::Compare, a)),
        Command::Families(f) => {
            let families = f
                .family
                .iter()
                .map(|x| match x {
                    FamilyArg::D1 => metabelian::families::Family::D1,
                    FamilyArg::D2 => metabelian::families::Family::D2,
                })
                .collect();
            job::run_families(&job::FamilyJob {
                families,
                m_min: f.m_min,
                m_max: f.m_max,
                q: f.q,
                cap: f.cap,
                output: f.output,
            })
        }
    };
    print!("{}", outcome.text);
    if let Some(msg) = &outcome.error {
        eprintln!("error: {msg}");
    }
    ExitCode::from(outcome.code)
}
