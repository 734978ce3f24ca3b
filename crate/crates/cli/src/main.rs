use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use wiener_cli::{
    render, run_closed_form, run_compute, run_enumerate, run_extremal, run_generate,
    run_transform, run_verify_erratum, ClosedForm, ComputeMethod, FamilyParams,
};
use wiener_core::extremal::{DEFAULT_ENUMERATION_CAP, DEFAULT_SEARCH_CAP};
use wiener_core::{canonical_string, BetheSpec, IndexKind, Tree, DEFAULT_MAX_VERTICES};

const EXIT_USAGE: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_COUNTEREXAMPLE: u8 = 3;

/// Wiener and terminal Wiener indices of trees.
#[derive(Parser)]
#[command(name = "wiener", version)]
struct Cli {
    /// Emit machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an index of a tree read from an edge-list file.
    Compute {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        index: IndexArg,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        /// Root for the recursive engine; defaults to the first vertex of degree ≥ 2.
        #[arg(long)]
        root: Option<usize>,
    },
    /// Write a tree from one of the built-in families.
    Generate {
        #[command(subcommand)]
        family: FamilyCmd,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
        #[arg(long, global = true, default_value_t = DEFAULT_MAX_VERTICES)]
        cap: usize,
    },
    /// Evaluate a closed-form index.
    ClosedForm {
        #[arg(value_enum)]
        formula: FormulaArg,
        #[arg(long, value_delimiter = ',')]
        degrees: Option<Vec<u64>>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        d: Option<u64>,
    },
    /// Compare the published generalized Bethe formula with the corrected one.
    VerifyErratum {
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u64>,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        cap: usize,
    },
    /// Exhaustive minimum terminal Wiener search.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
        cap: usize,
    },
    /// Path-shifting transformation.
    Transform {
        #[command(subcommand)]
        kind: TransformCmd,
    },
    /// List every tree of a given order, one per isomorphism class.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
}

#[derive(Subcommand)]
enum FamilyCmd {
    Bethe {
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u64>,
    },
    Dendrimer {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: u64,
    },
    BetheKd {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: u64,
    },
    Starlike {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        lengths: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum TransformCmd {
    /// Attach paths of lengths a and b at the root of R and shift.
    Tab(TabArgs),
}

#[derive(Args)]
struct TabArgs {
    /// Edge-list file holding R.
    #[arg(long)]
    tree: PathBuf,
    #[arg(long)]
    root: usize,
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
    #[arg(long, default_value_t = 1)]
    steps: usize,
    /// Write the final tree here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum IndexArg {
    Wiener,
    TerminalWiener,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Bruteforce,
    EdgeCut,
    Recursive,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormulaArg {
    WienerBethe,
    TwBethe,
    WienerDendrimer,
    TwDendrimer,
    WienerBetheKd,
    TwBetheKd,
}

/// Usage mistakes found after clap has accepted the arguments.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn read_tree(path: &Path) -> anyhow::Result<Tree> {
    let text = fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
    Tree::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_tree(tree: &Tree, out: Option<&Path>) -> anyhow::Result<()> {
    let text = format!("{}\n", tree.serialize());
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit<T: Serialize>(json: bool, report: &T, human: impl FnOnce(&T) -> String) -> anyhow::Result<()> {
    if json {
        println!("{}", serde_json::to_string_pretty(report)?);
    } else {
        print!("{}", human(report));
    }
    Ok(())
}

/// Runs the command; `Ok(false)` means a verification came out negative.
fn run(cli: Cli) -> anyhow::Result<bool> {
    let json = cli.json;
    match cli.command {
        Command::Compute { input, index, method, root } => {
            let tree = read_tree(&input)?;
            let index = match index {
                IndexArg::Wiener => IndexKind::Wiener,
                IndexArg::TerminalWiener => IndexKind::TerminalWiener,
            };
            let method = match method {
                MethodArg::Auto => ComputeMethod::Auto,
                MethodArg::Bruteforce => ComputeMethod::BruteForce,
                MethodArg::EdgeCut => ComputeMethod::EdgeCut,
                MethodArg::Recursive => ComputeMethod::Recursive,
                MethodArg::All => ComputeMethod::All,
            };
            let report = run_compute(&input.display().to_string(), &tree, index, method, root)?;
            emit(json, &report, render::index_report)?;
            Ok(report.agreement)
        }
        Command::Generate { family, out, cap } => {
            let params = match family {
                FamilyCmd::Bethe { degrees } => FamilyParams::Bethe { degrees },
                FamilyCmd::Dendrimer { k, d } => FamilyParams::Dendrimer { k, d },
                FamilyCmd::BetheKd { k, d } => FamilyParams::BetheKd { k, d },
                FamilyCmd::Starlike { n, delta, lengths } => FamilyParams::Starlike { n, delta, lengths },
            };
            let tree = run_generate(&params, cap)?;
            if json && out.is_none() {
                let doc = serde_json::json!({ "parameters": params, "tree": tree.serialize() });
                println!("{}", serde_json::to_string_pretty(&doc)?);
            } else {
                write_tree(&tree, out.as_deref())?;
            }
            Ok(true)
        }
        Command::ClosedForm { formula, degrees, k, d } => {
            let formula = match formula {
                FormulaArg::WienerBethe => ClosedForm::WienerBethe,
                FormulaArg::TwBethe => ClosedForm::TwBethe,
                FormulaArg::WienerDendrimer => ClosedForm::WienerDendrimer,
                FormulaArg::TwDendrimer => ClosedForm::TwDendrimer,
                FormulaArg::WienerBetheKd => ClosedForm::WienerBetheKd,
                FormulaArg::TwBetheKd => ClosedForm::TwBetheKd,
            };
            let params = match (formula, degrees, k, d) {
                (ClosedForm::WienerBethe | ClosedForm::TwBethe, Some(degrees), None, None) => {
                    FamilyParams::Bethe { degrees }
                }
                (ClosedForm::WienerDendrimer | ClosedForm::TwDendrimer, None, Some(k), Some(d)) => {
                    FamilyParams::Dendrimer { k, d }
                }
                (ClosedForm::WienerBetheKd | ClosedForm::TwBetheKd, None, Some(k), Some(d)) => {
                    FamilyParams::BetheKd { k, d }
                }
                (f, ..) => {
                    let wanted = match f {
                        ClosedForm::WienerBethe | ClosedForm::TwBethe => "--degrees LIST",
                        _ => "--k K --d D",
                    };
                    bail!(UsageError(format!("{} takes {wanted}", f.name())));
                }
            };
            let report = run_closed_form(formula, params)?;
            emit(json, &report, render::closed_form_report)?;
            Ok(true)
        }
        Command::VerifyErratum { degrees, cap } => {
            let spec = BetheSpec::new(degrees)?;
            let report = run_verify_erratum(&spec, cap)?;
            emit(json, &report, render::erratum_report)?;
            Ok(report.verified())
        }
        Command::Extremal { n, delta, cap } => {
            let report = run_extremal(n, delta, cap)?;
            emit(json, &report, render::extremal_report)?;
            Ok(report.verified())
        }
        Command::Transform { kind: TransformCmd::Tab(args) } => {
            let r_tree = read_tree(&args.tree)?;
            let report = run_transform(&r_tree, args.root, args.a, args.b, args.steps)?;
            if let Some(out) = &args.out {
                let last = report.states.last().expect("at least the starting state");
                write_tree(&Tree::parse(&last.tree)?, Some(out))?;
            }
            emit(json, &report, render::transform_report)?;
            Ok(report.checks.iter().all(|c| c.holds))
        }
        Command::Enumerate { n, delta, cap } => {
            let trees: Vec<String> = run_enumerate(n, delta, cap)?.iter().map(canonical_string).collect();
            if json {
                let doc = serde_json::json!({ "n": n, "delta": delta, "count": trees.len(), "trees": trees });
                println!("{}", serde_json::to_string_pretty(&doc)?);
            } else {
                for (i, t) in trees.iter().enumerate() {
                    println!("# tree {}\n{t}", i + 1);
                }
                println!("count {}", trees.len());
            }
            Ok(true)
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<UsageError>().is_some() {
        return EXIT_USAGE;
    }
    match err.downcast_ref::<wiener_core::Error>() {
        Some(e) if e.is_counterexample() => EXIT_COUNTEREXAMPLE,
        Some(_) => EXIT_PRECONDITION,
        None => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_COUNTEREXAMPLE),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
