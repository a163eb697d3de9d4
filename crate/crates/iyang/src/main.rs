//! Command-line front end. Exit status: 0 when every check passes, 1 when a
//! check fails or a computation errors, 2 on a schema error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use iyang::cli::{parse_descriptor, run_many, CaseDescriptor, Command, Limits, Overrides, ZChoice};
use iyang::Error;

#[derive(Parser, Debug)]
#[command(name = "iyang", version, about = "Exact verification of shifted iYangian data")]
struct Args {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Quantum relations on the difference-operator images.
    IgkloVerify(Opts),
    /// Poisson relations, auxiliary identities and homogeneity.
    ClassicalVerify(Opts),
    /// Partition data and strata of a type AI islice.
    Islice(Opts),
    /// Folded gauge data and rank numerology of a framed quiver.
    Iquiverify(Opts),
    /// Graded generator counts of the PBW basis.
    PbwCount(Opts),
    /// The acceptance battery.
    Suite(Opts),
}

#[derive(clap::Args, Debug)]
struct Opts {
    /// Case descriptor (JSON); repeat for several cases.
    #[arg(long = "case")]
    case: Vec<PathBuf>,
    /// Truncation order, overriding the descriptor.
    #[arg(long = "K")]
    k: Option<i64>,
    /// Treatment of the central variables.
    #[arg(long, value_enum)]
    z: Option<ZArg>,
    /// Run both bipartite colourings side by side.
    #[arg(long)]
    both_signs: bool,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ZArg {
    Symbolic,
    Zero,
}

#[derive(Serialize)]
struct Diagnostic {
    error: &'static str,
    message: String,
}

fn fail(kind: &'static str, message: String, code: u8) -> ExitCode {
    let d = Diagnostic { error: kind, message };
    eprintln!("{}", serde_json::to_string(&d).expect("diagnostic serializes"));
    ExitCode::from(code)
}

fn error_exit(e: Error) -> ExitCode {
    match e {
        Error::Schema(m) => fail("schema", m, 2),
        other => fail("computation", other.to_string(), 1),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let (command, opts) = match args.command {
        Cmd::IgkloVerify(o) => (Command::IgkloVerify, o),
        Cmd::ClassicalVerify(o) => (Command::ClassicalVerify, o),
        Cmd::Islice(o) => (Command::Islice, o),
        Cmd::Iquiverify(o) => (Command::Iquiverify, o),
        Cmd::PbwCount(o) => (Command::PbwCount, o),
        Cmd::Suite(o) => (Command::Suite, o),
    };
    let mut descs = Vec::new();
    for path in &opts.case {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return fail("io", format!("{}: {}", path.display(), e), 2),
        };
        match parse_descriptor(&text) {
            Ok(d) => descs.push(d),
            Err(e) => return error_exit(e),
        }
    }
    if descs.is_empty() {
        if command != Command::Suite {
            return fail("schema", "no --case given".into(), 2);
        }
        descs.push(CaseDescriptor::default());
    }
    let ov = Overrides {
        k: opts.k,
        z: opts.z.map(|z| match z {
            ZArg::Symbolic => ZChoice::Symbolic,
            ZArg::Zero => ZChoice::Zero,
        }),
        both_signs: opts.both_signs,
    };
    let doc = match run_many(command, &descs, &Limits::default(), &ov, opts.jobs) {
        Ok(d) => d,
        Err(e) => return error_exit(e),
    };
    let text = doc.render();
    match &opts.out {
        Some(p) => {
            if let Err(e) = fs::write(p, &text) {
                return fail("io", format!("{}: {}", p.display(), e), 1);
            }
        }
        None => print!("{}", text),
    }
    if doc.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
