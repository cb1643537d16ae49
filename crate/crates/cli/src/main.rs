use std::process::ExitCode;

use clap::{Parser, Subcommand};
use skewtor::{commands, conventions, suites, CliError, Report};

/// Exact checks for connections with skew torsion on Lie algebra models.
#[derive(Parser)]
#[command(name = "skewtor", version)]
struct Cli {
    /// Print the pinned conventions and the identities that pin them.
    #[arg(long, global = true)]
    convention_ledger: bool,
    #[command(subcommand)]
    command: Option<Cmd>,
}

#[derive(Subcommand)]
enum Cmd {
    /// List or show registered models.
    Models {
        #[command(subcommand)]
        action: ModelsCmd,
    },
    /// Run a check suite.
    Verify {
        suite: String,
        #[arg(long)]
        json: bool,
    },
    /// Torsion of the characteristic connection.
    Torsion { model: String },
    /// Ricci tensors of the characteristic and Levi-Civita connections.
    Ricci { model: String },
    /// G2 type decomposition of a 2- or 3-form.
    Decompose {
        model: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Eigenvalues of a form acting on spinors.
    SpinEig {
        dim: usize,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Almost contact metric checks for one model.
    Contact {
        #[command(subcommand)]
        action: ReportCmd,
    },
    /// Almost hermitian checks for one model.
    Hermitian {
        #[command(subcommand)]
        action: ReportCmd,
    },
}

#[derive(Subcommand)]
enum ModelsCmd {
    List,
    Show { name: String },
}

#[derive(Subcommand)]
enum ReportCmd {
    Report {
        model: String,
        #[arg(long)]
        json: bool,
    },
}

enum Output {
    Text(String),
    Report(Report, bool),
}

fn dispatch(cmd: Cmd) -> Result<Output, CliError> {
    Ok(match cmd {
        Cmd::Models { action: ModelsCmd::List } => Output::Text(commands::models_list()?),
        Cmd::Models { action: ModelsCmd::Show { name } } => Output::Text(commands::models_show(&name)?),
        Cmd::Verify { suite, json } => Output::Report(suites::run(&suite)?, json),
        Cmd::Torsion { model } => Output::Text(commands::torsion(&model)?),
        Cmd::Ricci { model } => Output::Text(commands::ricci(&model)?),
        Cmd::Decompose { model, expr } => Output::Text(commands::decompose(&model, &expr)?),
        Cmd::SpinEig { dim, expr } => Output::Text(commands::spin_eig(dim, &expr)?),
        Cmd::Contact { action: ReportCmd::Report { model, json } } => {
            Output::Report(commands::contact_report(&model)?, json)
        }
        Cmd::Hermitian { action: ReportCmd::Report { model, json } } => {
            Output::Report(commands::hermitian_report(&model)?, json)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.convention_ledger {
        match conventions::ledger() {
            Ok(text) => print!("{text}"),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
        if cli.command.is_none() {
            return ExitCode::SUCCESS;
        }
    }
    let Some(cmd) = cli.command else {
        eprintln!("error: no command given; try `skewtor --help`");
        return ExitCode::from(2);
    };
    match dispatch(cmd) {
        Ok(Output::Text(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Output::Report(r, json)) => {
            if json {
                println!("{}", r.to_json());
            } else {
                print!("{}", r.render());
            }
            ExitCode::from(r.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
