mod commands;
mod config;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::Report;

#[derive(Parser, Debug)]
#[command(
    name = "braid-sigma",
    version,
    about = "Braid invariants, Garside normal forms, weak Bruhat homology and ascending links"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for classification [default: available cores].
    #[arg(long, env = "BRAID_SIGMA_JOBS", global = true)]
    jobs: Option<usize>,
    /// JSON object of option values; explicit arguments take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Permutation, crossing count and twice-winding matrix of a word.
    Braid(BraidArgs),
    /// Left-greedy normal form.
    Nf(WordArgs),
    /// Whether two words represent the same braid.
    Eq(PairArgs),
    /// Prefix order `left <= right` and the sandwich relation.
    Leq(PairArgs),
    /// Reduced homology of the reversing subcomplex Rev_n(i,j).
    RevHomology(RevArgs),
    /// Reduced homology of the proper part PW_n.
    PwHomology(PwArgs),
    /// Nerve of the cover of Rev_n(i,j) by stars of extremal vertices.
    Nerve(NerveArgs),
    /// Join and meet of a set of permutations in the weak order.
    Joinmeet(JoinMeetArgs),
    /// Homology profiles of positive ascending links over (sigma, k) cells.
    Classify(ClassifyArgs),
    /// The character chi(m,n) and its one-positive data.
    Chi(ChiArgs),
}

#[derive(Args, Debug)]
pub struct BraidArgs {
    #[arg(long)]
    pub n: usize,
    /// Letters such as "2 2 1 -2" or "s2 s1^-1".
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub word: String,
    /// Keep only these strands, e.g. "1,3".
    #[arg(long)]
    pub erase: Option<String>,
    /// Replace every letter by its inverse.
    #[arg(long)]
    pub mirror: bool,
}

#[derive(Args, Debug)]
pub struct WordArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub word: String,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long)]
    pub n: usize,
    /// Strand count of the right word [default: --n].
    #[arg(long)]
    pub right_n: Option<usize>,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub left: String,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub right: String,
}

#[derive(Args, Debug)]
pub struct RevArgs {
    #[arg(long)]
    pub n: usize,
    /// The pair "i,j".
    #[arg(long)]
    pub pair: String,
    /// Highest homology degree to compute.
    #[arg(long)]
    pub max_degree: Option<usize>,
}

#[derive(Args, Debug)]
pub struct PwArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub max_degree: Option<usize>,
}

#[derive(Args, Debug)]
pub struct NerveArgs {
    #[arg(long)]
    pub n: usize,
    /// The pair "i,j" [default: 1,n]. Minimal-vertex stars unless the pair is (1,n).
    #[arg(long)]
    pub pair: Option<String>,
}

#[derive(Args, Debug)]
pub struct JoinMeetArgs {
    #[arg(long)]
    pub n: usize,
    /// Permutations separated by ';', e.g. "[2,1,3];[1,3,2]".
    #[arg(long)]
    pub set: String,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    /// Strand count [default: inferred from --char].
    #[arg(long)]
    pub n: Option<usize>,
    /// Character, e.g. "2*w[1,2]-w[1,3]-w[2,3]" or "-chi(4,4)".
    #[arg(long = "char", allow_hyphen_values = true)]
    pub character: String,
    /// Values of k, e.g. "0,1" [default: all].
    #[arg(long)]
    pub k: Option<String>,
    /// Permutations separated by ';' [default: all of S_n].
    #[arg(long)]
    pub sigma: Option<String>,
    #[arg(long)]
    pub max_degree: Option<usize>,
    /// Omit the per-cell list and report only profile classes.
    #[arg(long)]
    pub summary: bool,
}

#[derive(Args, Debug)]
pub struct ChiArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    match &cli.command {
        Command::Braid(a) => commands::braid(a),
        Command::Nf(a) => commands::nf(a),
        Command::Eq(a) => commands::eq(a),
        Command::Leq(a) => commands::leq(a),
        Command::RevHomology(a) => commands::rev_homology(a),
        Command::PwHomology(a) => commands::pw_homology(a),
        Command::Nerve(a) => commands::nerve(a),
        Command::Joinmeet(a) => commands::joinmeet(a),
        Command::Classify(a) => commands::classify(a, cli.jobs),
        Command::Chi(a) => commands::chi(a),
    }
}

fn emit(cli: &Cli, report: &Report) -> std::io::Result<()> {
    let mut body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report.json).expect("reports serialize"),
        Format::Text => report.text.trim_end().to_string(),
    };
    body.push('\n');
    match &cli.output {
        Some(path) => fs::write(path, body),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let args = match config::merge_config(std::env::args().collect()) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let cli = Cli::parse_from(args);
    match run(&cli) {
        Ok(report) => match emit(&cli, &report) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: writing output: {e}");
                ExitCode::from(1)
            }
        },
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
