//! `tbchar`: character rings and skein normal forms of two-bridge links.
//!
//! Variables are written `x`, `xp`, `y` for the negated traces of the two
//! meridians and of their product.

mod commands;

use std::io::{self, Write};

use clap::{Parser, Subcommand};

use commands::{CommandResult, Options, Status};

#[derive(Parser, Debug)]
#[command(
    name = "tbchar",
    version,
    about = "Character rings of two-bridge links b(2p,q)"
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the random matrix oracle
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of random SL2 pairs checked against the oracle
    #[arg(long, global = true, default_value_t = 20)]
    samples: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the defining polynomial eta of the character ring
    Eta {
        #[arg(allow_negative_numbers = true)]
        twop: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        /// Also print eta_ab and eta_nab = eta / eta_ab
        #[arg(long)]
        nab: bool,
    },
    /// List basis monomials x^a xp^b y^c (c <= p) up to a total degree
    Basis {
        #[arg(allow_negative_numbers = true)]
        twop: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(long, default_value_t = 2)]
        max_degree: u32,
    },
    /// Reduce a polynomial modulo eta to y-degree at most p
    Reduce {
        #[arg(allow_negative_numbers = true)]
        twop: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(long)]
        poly: String,
    },
    /// Run every check on one link
    Check {
        #[arg(allow_negative_numbers = true)]
        twop: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
    },
    /// Run the checks on every link with 1 <= p <= max-p
    Scan {
        #[arg(long)]
        max_p: u32,
    },
    /// Print the link group presentation
    Presentation {
        #[arg(allow_negative_numbers = true)]
        twop: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
    },
    /// Compare eta of two parameters up to sign and x <-> xp
    Compare {
        twop_a: i64,
        q_a: i64,
        twop_b: i64,
        q_b: i64,
    },
}

fn run(cli: &Cli) -> CommandResult {
    let opts = Options {
        json: cli.json,
        seed: cli.seed,
        samples: cli.samples,
    };
    match &cli.command {
        Command::Eta { twop, q, nab } => commands::cmd_eta(*twop, *q, *nab, &opts),
        Command::Basis {
            twop,
            q,
            max_degree,
        } => commands::cmd_basis(*twop, *q, *max_degree, &opts),
        Command::Reduce { twop, q, poly } => commands::cmd_reduce(*twop, *q, poly, &opts),
        Command::Check { twop, q } => commands::cmd_check(*twop, *q, &opts),
        Command::Scan { max_p } => commands::cmd_scan(*max_p, &opts),
        Command::Presentation { twop, q } => commands::cmd_presentation(*twop, *q, &opts),
        Command::Compare {
            twop_a,
            q_a,
            twop_b,
            q_b,
        } => commands::cmd_compare((*twop_a, *q_a), (*twop_b, *q_b), &opts),
    }
}

fn main() {
    let cli = Cli::parse();
    let result = run(&cli);
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = match result.status {
        Status::UsageError => writeln!(io::stderr(), "{}", result.payload),
        _ => writeln!(io::stdout(), "{}", result.payload),
    };
    std::process::exit(result.status.exit_code());
}
