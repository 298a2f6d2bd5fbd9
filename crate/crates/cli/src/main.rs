use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lierad::format::{load_algebra, load_family, subspace_rows, FamilyFile};
use lierad::report::analyze;
use lierad::suite::{self, SuiteOptions};
use lierad::target::{describe, resolve};
use lierad::CliError;
use lierad_core::chains::{self, SubspaceFamily, TieBreak, DEFAULT_COMPLETION_BOUND};
use lierad_core::frattini::{classify_subsimple, frattini_ideal, index_class, jacobson_ideal};
use lierad_core::radicals::{self, levi_subalgebra, REGISTRY_NAMES};
use lierad_core::{parse_rational, Matrix, Subspace};
use serde_json::json;

/// Structure theory of finite-dimensional Lie algebras over the rationals.
#[derive(Parser)]
#[command(name = "lierad", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Emit JSON instead of text.
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit text (the default).
    #[arg(long, global = true)]
    text: bool,
    /// Seed for the randomized parts of `suite`.
    #[arg(long, global = true, default_value_t = suite::DEFAULT_SEED)]
    seed: u64,
    /// Largest family accepted by the chain completions.
    #[arg(long, global = true, default_value_t = DEFAULT_COMPLETION_BOUND)]
    completion_bound: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Check that an algebra file is well formed and satisfies Jacobi.
    Validate { file: PathBuf },
    /// Full analysis report for a file or `corpus:NAME[:params]`.
    Analyze { target: String },
    /// One named radical or preradical.
    Radical {
        /// One of the registered names, or `levi` for a Levi subalgebra.
        which: String,
        target: String,
    },
    /// Frattini ideal estimate, indices and index class.
    Frattini { target: String },
    /// Subsimple classification.
    Classify {
        target: String,
        /// Offer the identity map as the isomorphism between two simple summands.
        #[arg(long)]
        identity_witness: bool,
    },
    /// Operations on a family of subspaces.
    Chains {
        family: PathBuf,
        #[command(subcommand)]
        op: ChainOp,
    },
    /// Run the acceptance corpus and print a pass/fail table.
    Suite,
}

#[derive(Subcommand)]
enum ChainOp {
    Meet,
    Join,
    PCompletion,
    SCompletion,
    /// Lower and upper finite-gap predicates.
    FiniteGap,
    /// A maximal lower finite-gap chain from the join of the family.
    Chain {
        #[arg(long, value_enum, default_value_t = Tie::Forward)]
        tie: Tie,
    },
    Delta,
    /// Intersect every member with a subspace given as `;`-separated rows.
    Restrict { rows: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Tie {
    Forward,
    Reverse,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("value serializes"));
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let g = cli.global;
    match cli.command {
        Command::Validate { file } => {
            let (name, l) = load_algebra(&file)?;
            if g.json {
                print_json(&json!({"name": name, "dim": l.dim(), "valid": true}));
            } else {
                println!("{name}: valid Lie algebra of dimension {}", l.dim());
            }
            Ok(0)
        }
        Command::Analyze { target } => {
            let (name, l) = resolve(&target)?;
            let report = analyze(&name, &l);
            if g.json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(if report.is_clean() { 0 } else { 1 })
        }
        Command::Radical { which, target } => {
            let (name, l) = resolve(&target)?;
            let s = if which == "levi" {
                levi_subalgebra(&l).levi
            } else {
                let p = radicals::by_name(&which).ok_or_else(|| {
                    CliError::Usage(format!("unknown radical `{which}`; expected levi or one of {}", REGISTRY_NAMES.join(", ")))
                })?;
                p.eval(&l)?
            };
            if g.json {
                print_json(&json!({"name": name, "radical": which, "dim": s.dim(), "basis": subspace_rows(&s)}));
            } else {
                println!("{which}({name}) = {} (dim {})", describe(l.labels(), &s), s.dim());
            }
            Ok(0)
        }
        Command::Frattini { target } => {
            let (name, l) = resolve(&target)?;
            let est = frattini_ideal(&l);
            let c = index_class(&l);
            let k = jacobson_ideal(&l);
            if g.json {
                print_json(&json!({
                    "name": name,
                    "kind": format!("{:?}", est.kind),
                    "rule": format!("{:?}", est.rule),
                    "lower": subspace_rows(&est.lower),
                    "upper": subspace_rows(&est.upper),
                    "jacobson_ideal": subspace_rows(&k),
                    "frattini_index": {"low": c.frattini_index.low, "high": c.frattini_index.high},
                    "jacobson_index": c.jacobson_index,
                    "nilradical_index": c.nilradical_index,
                    "class": format!("{:?}", c.class),
                }));
            } else {
                let labels = l.labels();
                match est.value() {
                    Some(v) => println!("Frattini ideal of {name}: {} (exact, {:?})", describe(labels, v), est.rule),
                    None => println!(
                        "Frattini ideal of {name}: between {} and {} ({:?})",
                        describe(labels, &est.lower),
                        describe(labels, &est.upper),
                        est.rule
                    ),
                }
                println!("Jacobson ideal: {}", describe(labels, &k));
                println!(
                    "indices: Frattini {}..{}, Jacobson {}, nilradical {}; class {:?}",
                    c.frattini_index.low, c.frattini_index.high, c.jacobson_index, c.nilradical_index, c.class
                );
            }
            Ok(0)
        }
        Command::Classify { target, identity_witness } => {
            let (name, l) = resolve(&target)?;
            let witness = identity_witness.then(|| {
                let half = l.dim() / 2;
                Matrix::identity(half)
            });
            let c = classify_subsimple(&l, witness.as_ref())?;
            if g.json {
                print_json(&json!({"name": name, "class": format!("{:?}", c.tag), "verified": c.verified}));
            } else {
                let note = if c.verified { "" } else { " (isomorphism not verified)" };
                println!("{name}: {:?}{note}", c.tag);
            }
            Ok(0)
        }
        Command::Chains { family, op } => chains_command(&load_family(&family)?, op, &g),
        Command::Suite => {
            let outcomes = suite::run(&SuiteOptions { seed: g.seed, completion_bound: g.completion_bound });
            let all = outcomes.iter().all(|o| o.passed);
            if g.json {
                let rows: Vec<_> = outcomes
                    .iter()
                    .map(|o| json!({"id": o.id, "title": o.title, "passed": o.passed, "detail": o.detail}))
                    .collect();
                print_json(&json!({"seed": g.seed, "passed": all, "criteria": rows}));
            } else {
                for o in &outcomes {
                    println!("{:>2}  {}  {:<38} {}", o.id, if o.passed { "PASS" } else { "FAIL" }, o.title, o.detail);
                }
            }
            Ok(if all { 0 } else { 1 })
        }
    }
}

fn parse_rows(n: usize, text: &str) -> Result<Subspace, CliError> {
    let mut rows = Vec::new();
    for row in text.split(';').map(str::trim).filter(|r| !r.is_empty()) {
        let v = row.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?;
        if v.len() != n {
            return Err(CliError::Usage(format!("row `{row}` has {} entries, expected {n}", v.len())));
        }
        rows.push(v);
    }
    Ok(Subspace::from_vectors(n, rows))
}

fn show_subspace(s: &Subspace, g: &Global) {
    if g.json {
        print_json(&json!({"dim": s.dim(), "basis": subspace_rows(s)}));
    } else {
        println!("dim {}: {:?}", s.dim(), subspace_rows(s));
    }
}

fn show_family(f: &SubspaceFamily, g: &Global) {
    if g.json {
        print_json(&serde_json::to_value(FamilyFile::from_family(f)).expect("family serializes"));
    } else {
        println!("{} members in Q^{}", f.len(), f.ambient_dim());
        for m in f.members() {
            println!("  dim {}: {:?}", m.dim(), subspace_rows(m));
        }
    }
}

fn chains_command(f: &SubspaceFamily, op: ChainOp, g: &Global) -> Result<u8, CliError> {
    match op {
        ChainOp::Meet => show_subspace(&chains::family_meet(f), g),
        ChainOp::Join => show_subspace(&chains::family_join(f), g),
        ChainOp::PCompletion => show_family(&chains::p_completion(f, g.completion_bound)?, g),
        ChainOp::SCompletion => show_family(&chains::s_completion(f, g.completion_bound)?, g),
        ChainOp::FiniteGap => {
            let (lower, upper) = (chains::is_lower_finite_gap(f), chains::is_upper_finite_gap(f));
            if g.json {
                print_json(&json!({"lower_finite_gap": lower, "upper_finite_gap": upper}));
            } else {
                println!("lower finite-gap: {lower}\nupper finite-gap: {upper}");
            }
        }
        ChainOp::Chain { tie } => {
            let tie = match tie {
                Tie::Forward => TieBreak::Forward,
                Tie::Reverse => TieBreak::Reverse,
            };
            let top = chains::family_join(f);
            let chain = chains::maximal_lower_finite_gap_chain_with(f, &top, tie)?;
            if g.json {
                let items: Vec<_> = chain.iter().map(|s| json!({"dim": s.dim(), "basis": subspace_rows(s)})).collect();
                print_json(&json!({"chain": items}));
            } else {
                for s in &chain {
                    println!("dim {}: {:?}", s.dim(), subspace_rows(s));
                }
            }
        }
        ChainOp::Delta => show_subspace(&chains::delta(f)?, g),
        ChainOp::Restrict { rows } => {
            let w = parse_rows(f.ambient_dim(), &rows)?;
            show_family(&chains::restrict_family(f, &w)?, g);
        }
    }
    Ok(0)
}
