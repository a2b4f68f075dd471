use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use vstab_cli::{render_text, run, run_batch, Basis, BatchItem, Command, Scenario, EXIT_ERROR};

/// Very-stability, wobbly witnesses and equivariant multiplicities for
/// Borel-type fixed points of the Higgs moduli space.
#[derive(Parser)]
#[command(name = "vstab", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct Output {
    /// Emit compact JSON (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,

    /// Emit a human-readable rendering instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Args)]
struct Input {
    /// Cartan type, e.g. `B4` or `A2+G2`.
    #[arg(value_name = "TYPE")]
    type_name: String,

    /// Basis of the input coweights.
    #[arg(long, global = true, default_value = "coweight", value_parser = parse_basis)]
    basis: Basis,
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    s.parse().map_err(|e: vstab_core::Error| e.to_string())
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide very-stability of a multiplicity divisor `c1:1,0;c2:0,1`.
    Classify {
        #[command(flatten)]
        input: Input,
        /// Divisor; empty means no points.
        #[arg(default_value = "")]
        divisor: String,
    },
    /// Virtual equivariant multiplicity for a total coweight.
    Mult {
        #[command(flatten)]
        input: Input,
        #[arg(allow_hyphen_values = true)]
        coweight: String,
        /// Comma-separated genus list.
        #[arg(long, value_delimiter = ',', default_value = "2")]
        genus: Vec<i64>,
    },
    /// Dynkin polynomial and Weyl dimension.
    Dynkin {
        #[command(flatten)]
        input: Input,
        #[arg(allow_hyphen_values = true)]
        coweight: String,
    },
    /// Root whose coroot exhibits a wobbly direction.
    Witness {
        #[command(flatten)]
        input: Input,
        #[arg(allow_hyphen_values = true)]
        coweight: String,
    },
    /// Minuscule fundamental coweights, and optionally test one coweight.
    Minuscule {
        #[command(flatten)]
        input: Input,
        #[arg(allow_hyphen_values = true)]
        coweight: Option<String>,
    },
    /// Reproduce the minuscule multiplicity table rows for a type.
    Table1 {
        #[command(flatten)]
        input: Input,
    },
    /// Whether a coweight is a sum of minuscule fundamental coweights.
    Feasible {
        #[command(flatten)]
        input: Input,
        #[arg(allow_hyphen_values = true)]
        coweight: String,
    },
    /// Run a JSON-lines scenario file, one result line per scenario.
    Batch { file: PathBuf },
}

fn scenario(input: Input, command: Command) -> Scenario {
    let mut s = Scenario::new(input.type_name, command);
    s.basis = input.basis;
    s
}

fn print(value: &serde_json::Value, pretty: bool) {
    if pretty {
        print!("{}", render_text(value));
    } else {
        println!("{value}");
    }
}

fn batch(file: PathBuf, pretty: bool) -> ExitCode {
    let text = match std::fs::read_to_string(&file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", file.display());
            return ExitCode::from(EXIT_ERROR as u8);
        }
    };
    let results = run_batch(&text);
    let mut failed = Vec::new();
    for (line, item) in &results {
        print(&item.to_json(*line), pretty);
        if let BatchItem::Failed(e) = item {
            failed.push(format!("line {line}: {e}"));
        }
    }
    eprintln!("{} scenarios, {} failed", results.len(), failed.len());
    for f in &failed {
        eprintln!("  {f}");
    }
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_ERROR as u8)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // usage errors are input errors; help and version are not errors
            let code = if e.use_stderr() { EXIT_ERROR as u8 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let pretty = cli.out.pretty;
    let s = match cli.cmd {
        Cmd::Batch { file } => return batch(file, pretty),
        Cmd::Classify { input, divisor } => {
            let mut s = scenario(input, Command::Classify);
            s.divisor = Some(divisor);
            s
        }
        Cmd::Mult {
            input,
            coweight,
            genus,
        } => {
            let mut s = scenario(input, Command::Mult);
            s.coweight = Some(coweight);
            s.genus = genus;
            s
        }
        Cmd::Dynkin { input, coweight } => {
            let mut s = scenario(input, Command::Dynkin);
            s.coweight = Some(coweight);
            s
        }
        Cmd::Witness { input, coweight } => {
            let mut s = scenario(input, Command::Witness);
            s.coweight = Some(coweight);
            s
        }
        Cmd::Minuscule { input, coweight } => {
            let mut s = scenario(input, Command::Minuscule);
            s.coweight = coweight;
            s
        }
        Cmd::Table1 { input } => scenario(input, Command::Table1),
        Cmd::Feasible { input, coweight } => {
            let mut s = scenario(input, Command::Feasible);
            s.coweight = Some(coweight);
            s
        }
    };
    match run(&s) {
        Ok(report) => {
            print(&report.value, pretty);
            ExitCode::from(report.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
