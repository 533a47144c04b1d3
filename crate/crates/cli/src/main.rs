//! `crt` — command-line front end for CRT-module computations.
//!
//! Exit codes: 0 on success, 1 on a mathematical failure (a check that does
//! not pass, a mismatch, a search without solution), 2 on usage, I/O or parse
//! errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crt_core::catalog::{self, CatalogEntry};
use crt_core::crt::{
    crt_isomorphic_with_budget, is_acyclic, is_free, module_from_json, module_to_json, render_table_window,
    verify_relations, CrtModule, Part, DEFAULT_ISO_BUDGET,
};
use crt_core::kunneth::{kunneth_pipeline, KunnethReport, DEFAULT_BUDGET};
use crt_core::tensor::{cuntz_resolution, resolve, tensor_and_tor, FreeResolution};
use crt_core::{Error, Int};

#[derive(Parser)]
#[command(name = "crt", version, about = "Exact computations with CRT-modules (united K-theory)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the machine-readable result to this file.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Search-node budget for isomorphism and extension searches.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Last degree shown in rendered tables (degrees repeat with period 8).
    #[arg(long, global = true, default_value_t = 8)]
    period_window: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect the built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Check the relations, acyclicity and freeness of a module.
    Verify { module: String },
    /// Tensor product `A ⊗ B` (a free resolution of `A` is computed).
    Tensor { left: String, right: String },
    /// `Tor(A, B)`.
    Tor { left: String, right: String },
    /// Künneth pipeline for `A ⊗ B`: tensor, Tor and the middle term.
    Kunneth { left: String, right: String },
    /// Compare two modules degreewise and up to isomorphism.
    Compare { left: String, right: String },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List catalog names.
    List,
    /// Show one catalog module.
    Show { name: String },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::Fixture(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn math(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// A loaded input: catalog entry or module file.
struct Input {
    name: String,
    module: CrtModule<Int>,
    cuntz_k: Option<i64>,
}

fn load(arg: &str) -> CliResult<Input> {
    let path = Path::new(arg);
    if arg.ends_with(".json") || (path.is_file() && !arg.starts_with("catalog:")) {
        let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {arg}: {e}")))?;
        let value: Value = serde_json::from_str(&text).map_err(|e| usage(format!("{arg}: invalid JSON: {e}")))?;
        let value = value.get("module").cloned().unwrap_or(value);
        let module = module_from_json(&value).map_err(|e| usage(format!("{arg}: {e}")))?;
        return Ok(Input { name: arg.to_string(), module, cuntz_k: None });
    }
    let entry: CatalogEntry<Int> = catalog::lookup(arg)?;
    let cuntz_k = if entry.template.starts_with("cuntz") { entry.params.get("k").copied() } else { None };
    Ok(Input { name: entry.name, module: entry.module, cuntz_k })
}

fn resolution_of(input: &Input) -> CliResult<FreeResolution<Int>> {
    Ok(match input.cuntz_k {
        Some(k) => cuntz_resolution(k)?,
        None => resolve(&input.module)?,
    })
}

fn write_json(path: &Option<PathBuf>, value: &Value) -> CliResult<()> {
    if let Some(p) = path {
        let text = serde_json::to_string_pretty(value).expect("JSON values serialize");
        std::fs::write(p, text + "\n").map_err(|e| usage(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(())
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn run(cli: Cli) -> CliResult<()> {
    let window = cli.period_window;
    if window < 0 {
        return Err(usage("--period-window must be non-negative"));
    }
    let table = |m: &CrtModule<Int>| render_table_window(m, window);
    let budget = cli.budget;
    let is_tensor = matches!(cli.command, Command::Tensor { .. });
    match cli.command {
        Command::Catalog { action: CatalogAction::List } => {
            for n in catalog::listed_names() {
                println!("{n}");
            }
            write_json(&cli.json, &json!({ "names": catalog::listed_names() }))
        }
        Command::Catalog { action: CatalogAction::Show { name } } => {
            let input = load(&name)?;
            println!("{}\n{}", input.name, table(&input.module));
            write_json(&cli.json, &json!({ "name": input.name, "module": module_to_json(&input.module) }))
        }
        Command::Verify { module } => {
            let input = load(&module)?;
            let rel = verify_relations(&input.module);
            let acyc = is_acyclic(&input.module)?;
            let free = is_free(&input.module);
            println!("relations: {}, acyclic: {}, free: {}", pass(rel.passed()), pass(acyc.passed()), pass(free));
            if !rel.passed() {
                println!("{rel}");
            }
            if !acyc.passed() {
                println!("{acyc}");
            }
            write_json(
                &cli.json,
                &json!({ "name": input.name, "relations": rel.passed(), "acyclic": acyc.passed(), "free": free }),
            )?;
            if rel.passed() && acyc.passed() {
                Ok(())
            } else {
                Err(math(format!("{} fails verification", input.name)))
            }
        }
        Command::Tensor { left, right } | Command::Tor { left, right } => {
            let a = load(&left)?;
            let b = load(&right)?;
            let res = resolution_of(&a)?;
            let tt = tensor_and_tor(&res, &b.module)?;
            let (label, m) = if is_tensor { ("tensor", &tt.tensor) } else { ("tor", &tt.tor) };
            println!("{label}({}, {})\n{}", a.name, b.name, table(m));
            write_json(&cli.json, &json!({ "left": a.name, "right": b.name, "kind": label, "module": module_to_json(m) }))
        }
        Command::Kunneth { left, right } => {
            let report = kunneth_pipeline::<Int>(&left, &right, budget.unwrap_or(DEFAULT_BUDGET))?;
            print_kunneth(&report, &table);
            write_json(&cli.json, &kunneth_json(&report))?;
            match report.matches_expected {
                Some(false) => Err(math("middle term differs from the stored table")),
                _ => Ok(()),
            }
        }
        Command::Compare { left, right } => {
            let a = load(&left)?;
            let b = load(&right)?;
            let mut diffs = Vec::new();
            for p in Part::ALL {
                for n in 0..8 {
                    let (x, y) = (a.module.group(p, n), b.module.group(p, n));
                    if x != y {
                        diffs.push(format!("M{}_{n}: {x} vs {y}", p.name()));
                    }
                }
            }
            for d in &diffs {
                println!("{d}");
            }
            let iso = if !diffs.is_empty() {
                false
            } else if a.module.is_finite() {
                crt_isomorphic_with_budget(&a.module, &b.module, budget.unwrap_or(DEFAULT_ISO_BUDGET))?.is_some()
            } else {
                a.module == b.module
            };
            println!("{} {} {}", a.name, if iso { "≅" } else { "≇" }, b.name);
            write_json(&cli.json, &json!({ "left": a.name, "right": b.name, "isomorphic": iso, "group_differences": diffs }))?;
            if iso {
                Ok(())
            } else {
                Err(math("modules are not isomorphic"))
            }
        }
    }
}

fn print_kunneth(r: &KunnethReport<Int>, table: &dyn Fn(&CrtModule<Int>) -> String) {
    println!("resolution of {}: F1 = {:?}, F0 = {:?}", r.left, r.resolution.f1.summands, r.resolution.f0.summands);
    println!("\ntensor\n{}", table(&r.problem.tensor));
    println!("tor\n{}", table(&r.problem.tor));
    let res = &r.result;
    println!(
        "middle terms: {} isomorphism class(es) from {} assignments ({} nodes)",
        res.solutions.len(),
        res.raw_solutions,
        res.nodes
    );
    for (i, s) in res.solutions.iter().enumerate() {
        println!("\nmiddle term {i} (split: {})\n{}", s.split, table(&s.middle));
    }
    match r.matches_expected {
        Some(true) => println!("stored table: match"),
        Some(false) => println!("stored table: MISMATCH"),
        None => println!("stored table: none for this pair"),
    }
}

fn kunneth_json(r: &KunnethReport<Int>) -> Value {
    let sols: Vec<Value> = r
        .result
        .solutions
        .iter()
        .map(|s| json!({ "module": module_to_json(&s.middle), "split": s.split }))
        .collect();
    let mut v = json!({
        "left": r.left,
        "right": r.right,
        "tensor": module_to_json(&r.problem.tensor),
        "tor": module_to_json(&r.problem.tor),
        "solutions": sols,
        "matches_expected": r.matches_expected,
    });
    if let [only] = r.result.solutions.as_slice() {
        v["module"] = module_to_json(&only.middle);
    }
    v
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
