//! `twistlab`: run validity, entailment, classification, twist and
//! definability checks from the command line.
//!
//! Exit codes: 0 when the queried property holds (or an object was built),
//! 1 when it fails (a counterexample is printed), 2 on usage or input
//! errors.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use twistlab_core as core;
use twistlab_core::{
    definability, formula, AlgebraSpec, Definability, FiniteAlgebra, LogicalMatrix, TableItem,
    TwistSpec,
};

#[derive(Parser)]
#[command(name = "twistlab", version, about = "Workbench for conditional logics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a connective or formula table over a matrix
    Table {
        #[arg(long)]
        matrix: String,
        /// Connective name from the matrix signature
        #[arg(long, conflicts_with = "formula")]
        connective: Option<String>,
        /// Formula of at most two variables
        #[arg(long)]
        formula: Option<String>,
        /// Adjoin a constant first, `name=LABEL`; repeatable
        #[arg(long = "const")]
        consts: Vec<String>,
        /// text, csv or json
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Check validity of a formula in a matrix
    Valid {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        formula: String,
        #[arg(long)]
        json: bool,
    },
    /// Check an entailment from premises to a conclusion
    Entail {
        #[arg(long)]
        matrix: String,
        #[arg(long = "premise")]
        premises: Vec<String>,
        #[arg(long)]
        conclusion: String,
        #[arg(long)]
        json: bool,
    },
    /// Check Aristotle's and Boethius' theses
    Theses {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        json: bool,
    },
    /// Run a class recognizer on an algebra
    Classify {
        #[command(flatten)]
        input: AlgebraInput,
        /// Class name, e.g. de-morgan-lattice, cn-algebra, boolean
        #[arg(long)]
        class: String,
        #[arg(long)]
        json: bool,
    },
    /// Build a twist algebra from a spec file
    Twist {
        #[arg(long)]
        spec: PathBuf,
        /// Write the resulting algebra JSON here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate the pi1-full subalgebras of a twist
    Subalgebras {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = usize::MAX)]
        limit: usize,
        #[arg(long)]
        json: bool,
    },
    /// Verify the twist representation of an algebra
    Represent {
        #[arg(long)]
        kind: String,
        #[command(flatten)]
        input: AlgebraInput,
        #[arg(long)]
        json: bool,
    },
    /// Build a twist, verify its representation, and recover the factor
    Roundtrip {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Decide definability of a connective from a basis
    Define {
        #[arg(long)]
        matrix: String,
        /// Target connective, either `name` or `OTHERMATRIX:name` (same carrier)
        #[arg(long)]
        target: String,
        /// Comma-separated basis connectives
        #[arg(long)]
        basis: String,
        #[arg(long, default_value_t = 200_000)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Compute the binary clone fragment of a basis
    Clone {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        basis: String,
        #[arg(long, default_value_t = 200_000)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check an equation (or quasi-equation, with --given premises)
    Eq {
        #[command(flatten)]
        input: AlgebraInput,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        /// Premise equations `lhs = rhs`, repeatable
        #[arg(long = "given")]
        given: Vec<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct AlgebraInput {
    /// Built-in matrix name (DF3, OL3, CN3, F3, OLg4, DFg4, CNg4, Fg4,
    /// DFf4, OLf4, CNf4, Ff4)
    #[arg(long)]
    matrix: Option<String>,
    /// Algebra JSON file
    #[arg(long, conflicts_with = "matrix")]
    algebra: Option<PathBuf>,
    /// Adjoin a constant, `name=LABEL`; repeatable
    #[arg(long = "const")]
    consts: Vec<String>,
}

impl AlgebraInput {
    fn load(&self) -> Result<FiniteAlgebra> {
        let mut a = match (&self.matrix, &self.algebra) {
            (Some(name), None) => core::named_matrix(name)?.algebra().clone(),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                FiniteAlgebra::from_json(&text)?
            }
            _ => bail!("exactly one of --matrix and --algebra is required"),
        };
        for spec in &self.consts {
            let (name, label) = spec
                .split_once('=')
                .ok_or_else(|| anyhow!("--const takes `name=LABEL`, got `{spec}`"))?;
            a = a.with_constants(&[(name, label)])?;
        }
        Ok(a)
    }
}

fn parse_vars(formulas: &[&formula::Formula]) -> Vec<String> {
    let mut vars = std::collections::BTreeSet::new();
    for f in formulas {
        vars.extend(f.variables());
    }
    vars.into_iter().collect()
}

fn parse_equation(
    lhs: &str,
    rhs: &str,
    given: &[String],
) -> Result<(core::QuasiEquation, Vec<String>)> {
    let lhs = formula::parse(lhs)?;
    let rhs = formula::parse(rhs)?;
    let mut premises_f = Vec::new();
    for g in given {
        let (l, r) = g
            .split_once('=')
            .ok_or_else(|| anyhow!("--given takes `lhs = rhs`, got `{g}`"))?;
        premises_f.push((formula::parse(l.trim())?, formula::parse(r.trim())?));
    }
    let mut all: Vec<&formula::Formula> = vec![&lhs, &rhs];
    for (l, r) in &premises_f {
        all.push(l);
        all.push(r);
    }
    let vars = parse_vars(&all);
    let conclusion = core::Equation::new(lhs.to_term(&vars)?, rhs.to_term(&vars)?);
    let premises = premises_f
        .iter()
        .map(|(l, r)| Ok(core::Equation::new(l.to_term(&vars)?, r.to_term(&vars)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok((core::QuasiEquation::new(premises, conclusion), vars))
}

fn counterexample_json(
    a: &FiniteAlgebra,
    vars: &[String],
    r: &core::CheckResult,
) -> serde_json::Value {
    match &r.counterexample {
        None => serde_json::Value::Null,
        Some(asg) => serde_json::Value::Object(
            vars.iter()
                .zip(asg)
                .map(|(v, &e)| (v.clone(), serde_json::Value::String(a.label(e).to_string())))
                .collect(),
        ),
    }
}

fn describe_with_vars(a: &FiniteAlgebra, vars: &[String], r: &core::CheckResult) -> String {
    match &r.counterexample {
        None => "holds".to_string(),
        Some(asg) => {
            let parts: Vec<String> = vars
                .iter()
                .zip(asg)
                .map(|(v, &e)| format!("{}={}", v, a.label(e)))
                .collect();
            format!("fails at {}", parts.join(", "))
        }
    }
}

fn run() -> Result<u8> {
    let cli = Cli::parse();
    match cli.command {
        Command::Table { matrix, connective, formula: f, consts, format } => {
            let mut m = core::named_matrix(&matrix)?;
            for spec in &consts {
                let (name, label) = spec
                    .split_once('=')
                    .ok_or_else(|| anyhow!("--const takes `name=LABEL`, got `{spec}`"))?;
                let a = m.algebra().with_constants(&[(name, label)])?;
                m = LogicalMatrix::new(m.name(), a, m.designated().iter().copied())?;
            }
            let item = match (connective, f) {
                (Some(c), None) => TableItem::Connective(c),
                (None, Some(f)) => TableItem::Formula(formula::parse(&f)?),
                _ => bail!("exactly one of --connective and --formula is required"),
            };
            let table = core::connective_table(&m, &item)?;
            match format.as_str() {
                "text" => print!("{}", table.to_text()),
                "csv" => print!("{}", table.to_csv()),
                "json" => println!("{}", serde_json::to_string_pretty(&table.to_json())?),
                other => bail!("unknown format `{other}` (text, csv, json)"),
            }
            Ok(0)
        }
        Command::Valid { matrix, formula: f, json } => {
            let m = core::named_matrix(&matrix)?;
            let f = formula::parse(&f)?;
            let v = core::is_valid(&m, &f)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                println!("{}: {}", formula::render(&f), v.describe());
            }
            Ok(if v.valid { 0 } else { 1 })
        }
        Command::Entail { matrix, premises, conclusion, json } => {
            let m = core::named_matrix(&matrix)?;
            let premises: Vec<_> =
                premises.iter().map(|p| formula::parse(p)).collect::<core::Result<_>>()?;
            let conclusion = formula::parse(&conclusion)?;
            let v = core::entails(&m, &premises, &conclusion)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                println!("{}", v.describe());
            }
            Ok(if v.valid { 0 } else { 1 })
        }
        Command::Theses { matrix, json } => {
            let m = core::named_matrix(&matrix)?;
            let r = core::check_theses(&m)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&r)?);
            } else {
                for (name, v) in r.iter() {
                    println!("{name}: {}", v.describe());
                }
            }
            Ok(if r.all_valid() { 0 } else { 1 })
        }
        Command::Classify { input, class, json } => {
            let a = input.load()?;
            let r = core::classify_by_name(&a, &class)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&r)?);
            } else {
                println!("{} as {}: {}", a.name(), class, r.describe(&a));
            }
            Ok(if r.holds { 0 } else { 1 })
        }
        Command::Twist { spec, out } => {
            let spec = TwistSpec::from_file(&spec)?;
            let t = core::twist_build(&spec)?;
            let json = t.algebra.to_json();
            match out {
                Some(path) => std::fs::write(&path, json)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => println!("{json}"),
            }
            Ok(0)
        }
        Command::Subalgebras { spec, limit, json } => {
            let spec = TwistSpec::from_file(&spec)?;
            let t = core::twist_build(&spec)?;
            let subs = core::enumerate_pi1_full_subalgebras(&t, limit)?;
            if json {
                let arr: Vec<_> = subs
                    .iter()
                    .map(|(s, _)| serde_json::to_value(AlgebraSpec::from_algebra(&s.algebra)))
                    .collect::<std::result::Result<_, _>>()?;
                println!("{}", serde_json::to_string_pretty(&arr)?);
            } else {
                println!("{} pi1-full subalgebras of {}", subs.len(), t.algebra.name());
                for (s, _) in &subs {
                    let labels: Vec<&str> =
                        s.algebra.labels().iter().map(String::as_str).collect();
                    println!("  size {}: {}", s.algebra.size(), labels.join(" "));
                }
            }
            Ok(0)
        }
        Command::Represent { kind, input, json } => {
            let kind: core::TwistKind = kind.parse()?;
            let a = input.load()?;
            let rep = core::verify_representation(&a, kind)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rep.to_json())?);
            } else {
                println!("{}", rep.summary());
            }
            Ok(if rep.overall { 0 } else { 1 })
        }
        Command::Roundtrip { spec, json } => {
            let spec = TwistSpec::from_file(&spec)?;
            let r = core::roundtrip_check(&spec)?;
            if json {
                let v = serde_json::json!({
                    "representation": r.representation.to_json(),
                    "factor_recovered": r.factor_recovered,
                    "overall": r.overall,
                });
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                println!("{}", r.representation.summary());
                println!("factor recovered: {}", r.factor_recovered.detail);
                println!("overall: {}", if r.overall { "OK" } else { "FAILED" });
            }
            Ok(if r.overall { 0 } else { 1 })
        }
        Command::Define { matrix, target, basis, cap, json } => {
            let m = core::named_matrix(&matrix)?;
            let basis: Vec<String> = basis.split(',').map(|s| s.trim().to_string()).collect();
            let target_table = resolve_target(&m, &target)?;
            let (verdict, clone) =
                core::is_table_definable(&m, &target_table, &basis, cap)?;
            let witness = match &verdict {
                Definability::Definable(t) => Some(t.clone()),
                _ => None,
            };
            if json {
                let v = serde_json::json!({
                    "matrix": m.name(),
                    "target": target,
                    "basis": basis,
                    "definable": matches!(verdict, Definability::Definable(_)),
                    "inconclusive": matches!(verdict, Definability::InconclusiveAtCap{..}),
                    "witness": witness.as_ref().map(render_term),
                    "explored": clone.len(),
                });
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                match &verdict {
                    Definability::Definable(t) => {
                        println!("definable: {} := {}", target, render_term(t))
                    }
                    Definability::NotDefinable => println!("not definable (closure complete)"),
                    Definability::InconclusiveAtCap { explored } => {
                        println!("inconclusive at cap ({explored} tables explored)")
                    }
                }
            }
            Ok(if verdict.is_definable() { 0 } else { 1 })
        }
        Command::Clone { matrix, basis, cap, json } => {
            let m = core::named_matrix(&matrix)?;
            let basis: Vec<String> = basis.split(',').map(|s| s.trim().to_string()).collect();
            let clone = definability::binary_clone(&m, &basis, cap)?;
            if json {
                let v = serde_json::json!({
                    "matrix": m.name(),
                    "basis": basis,
                    "size": clone.len(),
                    "closed": clone.closed,
                    "rounds_completed": clone.rounds_completed,
                    "cap": clone.size_cap,
                });
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                println!(
                    "clone fragment of {} over {{{}}}: {} tables, {}",
                    m.name(),
                    clone.basis.join(", "),
                    clone.len(),
                    if clone.closed {
                        "closed".to_string()
                    } else {
                        format!("capped after {} full rounds", clone.rounds_completed)
                    }
                );
            }
            Ok(if clone.closed { 0 } else { 1 })
        }
        Command::Eq { input, lhs, rhs, given, json } => {
            let a = input.load()?;
            let (qeq, vars) = parse_equation(&lhs, &rhs, &given)?;
            let r = if qeq.premises.is_empty() {
                core::check_equation(&a, &qeq.conclusion)?
            } else {
                core::check_quasiequation(&a, &qeq)?
            };
            if json {
                let v = serde_json::json!({
                    "holds": r.holds,
                    "counterexample": counterexample_json(&a, &vars, &r),
                });
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                println!("{}", describe_with_vars(&a, &vars, &r));
            }
            Ok(if r.holds { 0 } else { 1 })
        }
    }
}

/// `name` in the matrix itself, or `MATRIX:name` for a connective of another
/// built-in matrix over the same carrier.
fn resolve_target(m: &LogicalMatrix, target: &str) -> Result<Vec<u8>> {
    match target.split_once(':') {
        None => Ok(definability::connective_as_binary_table(m.algebra(), target)?),
        Some((other, conn)) => {
            let o = core::named_matrix(other)?;
            if o.algebra().labels() != m.algebra().labels() {
                bail!("{} and {} have different carriers", m.name(), other);
            }
            Ok(definability::connective_as_binary_table(o.algebra(), conn)?)
        }
    }
}

fn render_term(t: &core::Term) -> String {
    match formula::term_to_formula(t) {
        Some(f) => formula::render(&f),
        None => t.to_string(),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
