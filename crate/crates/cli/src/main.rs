mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use basis4::completion::CompletionPolicy;
use basis4::FieldKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "basis4", version, about = "Classify planes of C^4 by decomposability and complete orthogonal bases")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
pub struct Config {
    /// Scalar field of the vector space.
    #[arg(long, global = true, default_value = "complex", value_parser = parse_field)]
    pub field: FieldKind,
    /// Exact rational arithmetic or floating point with a tolerance.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    /// Zero tolerance in float mode.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub eps: f64,
    /// Seed for sampling checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output format; the BASIS4_OUTPUT environment variable takes precedence.
    #[arg(long, global = true, value_enum, default_value_t = Output::Human)]
    pub output: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Human,
    Json,
}

fn parse_field(s: &str) -> Result<FieldKind, String> {
    s.parse()
}

fn parse_policy(s: &str) -> Result<CompletionPolicy, String> {
    s.parse()
}

#[derive(Subcommand)]
pub enum Command {
    /// Type of the plane spanned by two vectors.
    Classify { a: String, b: String },
    /// Decomposable rays inside the plane spanned by two vectors.
    Locus { a: String, b: String },
    /// Basis of the orthocomplement of span{e1, e2}.
    Complement { e1: String, e2: String },
    /// Complete an orthogonal pair to an orthogonal basis.
    Complete {
        e1: String,
        e2: String,
        /// any, decomposable, indecomposable or mixed.
        #[arg(long, default_value = "any", value_parser = parse_policy)]
        policy: CompletionPolicy,
    },
    /// Write a decomposable vector as a tensor product.
    Factorize { z: String },
    /// The orthogonal pair u^x⊗t^x, s^x⊗v^x completing s⊗t, u⊗v.
    Tensor { s: String, t: String, u: String, v: String },
    /// Types of the six planes through four tensor-product vertices.
    Tetrahedron { s: String, t: String, u: String, v: String },
    /// Decomposability guarantee for the orthocomplement of span{e1, e2}.
    Steer { e1: String, e2: String },
    /// Orthogonality hypergraphs in the JSON exchange format.
    Hypergraph {
        #[command(subcommand)]
        action: HypergraphAction,
    },
    /// Check that four vectors form an orthogonal basis.
    Verify { v1: String, v2: String, v3: String, v4: String },
}

#[derive(Subcommand)]
pub enum HypergraphAction {
    /// Missing-plane analysis of every incomplete context.
    Analyze { file: PathBuf },
    /// Label every missing vertex.
    Complete {
        file: PathBuf,
        #[arg(long, default_value = "any", value_parser = parse_policy)]
        policy: CompletionPolicy,
    },
    /// Orthogonality and multiplicity check of a fully labeled hypergraph.
    Check { file: PathBuf },
}

fn main() -> ExitCode {
    let mut cli = Cli::parse();
    if let Ok(value) = std::env::var("BASIS4_OUTPUT") {
        match Output::from_str(&value, true) {
            Ok(output) => cli.config.output = output,
            Err(_) => {
                eprintln!("error: BASIS4_OUTPUT must be \"human\" or \"json\", got {value:?}");
                return ExitCode::from(2);
            }
        }
    }
    let json = cli.config.output == Output::Json;
    match commands::run(&cli.command, &cli.config) {
        Ok(report) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("reports serialize"));
            } else {
                print!("{}", report.human);
            }
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
    }
}
