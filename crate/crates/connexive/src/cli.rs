//! Command-line front end: evaluate formulas, check principles, classify
//! matrices, verify proof documents, and run matrix searches.
//!
//! Exit codes: 0 success, 1 a requested check failed (invalid formula,
//! failed principle, rejected proof), 2 usage error, 3 parse error.

use std::collections::BTreeMap;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::hilbert;
use crate::matrix::{self, BUILTIN_NAMES};
use crate::parser::{parse_formula, parse_schema};
use crate::principles::{self, VerdictKind};
use crate::search;
use crate::semantics::{self, Assignment};

const EXIT_OK: i32 = 0;
const EXIT_CHECK_FAILED: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_PARSE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "connexive",
    about = "Finite matrix workbench for connexive logics",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a formula under an assignment of matrix values.
    Eval {
        #[command(flatten)]
        logic: LogicArg,
        /// Formula, e.g. "~(p -> ~p)".
        formula: String,
        /// Comma-separated assignment of value labels, e.g. "p=3,q=1".
        #[arg(long, default_value = "")]
        assign: String,
    },
    /// Check principles (by catalog id) or ad-hoc schemata for validity.
    Check {
        #[command(flatten)]
        logic: LogicArg,
        /// Catalog principle ids.
        #[arg(long = "principle")]
        principles: Vec<String>,
        /// Schemata checked for validity.
        #[arg(long = "schema")]
        schemata: Vec<String>,
        /// Check every catalog principle.
        #[arg(long)]
        all: bool,
    },
    /// Full connexivity classification of a matrix.
    Classify {
        #[command(flatten)]
        logic: LogicArg,
    },
    /// Verify a proof document (or replay the bundled corpus).
    Verify {
        /// Path to a proof JSON document.
        proof: Option<String>,
        /// Replay every bundled derivation instead.
        #[arg(long)]
        corpus: bool,
        /// Replay all *.json proof documents in a directory instead of the
        /// bundled corpus (an empty directory is reported as failure).
        #[arg(long = "corpus-dir")]
        corpus_dir: Option<String>,
    },
    /// Search finite matrices meeting principle constraints.
    Search(SearchArgs),
    /// List the principle catalog.
    ListPrinciples,
    /// List the bundled matrices.
    ListLogics,
}

#[derive(Debug, Args)]
struct LogicArg {
    /// Bundled matrix name, or path to a logic JSON file.
    #[arg(long)]
    logic: String,
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Path to a search spec JSON file (flags below are ignored if set,
    /// except --force and --jobs).
    #[arg(long)]
    spec: Option<String>,
    #[arg(long)]
    values: Option<usize>,
    /// Comma-separated connectives, e.g. "neg,imp,bot".
    #[arg(long)]
    signature: Option<String>,
    /// Designated sets as semicolon-separated index lists, e.g. "1;0,1".
    #[arg(long)]
    designated: Option<String>,
    #[arg(long = "require-valid")]
    require_valid: Vec<String>,
    #[arg(long = "require-invalid")]
    require_invalid: Vec<String>,
    #[arg(long = "require-unsat")]
    require_unsat: Vec<String>,
    #[arg(long = "require-sat")]
    require_sat: Vec<String>,
    #[arg(long = "require-rule")]
    require_rules: Vec<String>,
    /// Keep the bottom constant undesignated (default; this is also a hard
    /// structural invariant of every matrix).
    #[arg(long, default_value_t = true)]
    bot_undesignated: bool,
    #[arg(long)]
    dedupe: Option<bool>,
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long)]
    no_prune: bool,
    #[arg(long)]
    jobs: Option<usize>,
    /// Pin tables to a bundled matrix (searches only the rest).
    #[arg(long = "fixed-from")]
    fixed_from: Option<String>,
    /// Comma-separated connectives to pin when --fixed-from is set.
    #[arg(long = "fixed-tables")]
    fixed_tables: Option<String>,
    /// Run an unpinned search with four or more values anyway.
    #[arg(long)]
    force: bool,
}

pub fn cli_main() -> i32 {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

struct CliError {
    code: i32,
    message: String,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_USAGE,
        message: msg.into(),
    }
}

fn parse_err(msg: impl ToString) -> CliError {
    CliError {
        code: EXIT_PARSE,
        message: msg.to_string(),
    }
}

fn load_logic(arg: &LogicArg) -> Result<matrix::MatrixLogic, CliError> {
    let name = &arg.logic;
    if !name.contains('.') && !name.contains('/') {
        return matrix::builtin(name).map_err(|e| usage(e.to_string()));
    }
    let text = std::fs::read_to_string(Path::new(name))
        .map_err(|e| usage(format!("cannot read '{name}': {e}")))?;
    matrix::load_logic_from_str(&text).map_err(|e| parse_err(e))
}

fn parse_assignment(m: &matrix::MatrixLogic, s: &str) -> Result<Assignment, CliError> {
    let mut out = Assignment::new();
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| usage(format!("bad assignment entry '{part}', expected name=label")))?;
        let value = m
            .value_of_label(v.trim())
            .ok_or_else(|| usage(format!("unknown value label '{}'", v.trim())))?;
        out.insert(k.trim().to_string(), value);
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Eval {
            logic,
            formula,
            assign,
        } => {
            let m = load_logic(&logic)?;
            let f = parse_formula(&formula).map_err(|e| parse_err(e))?;
            let a = parse_assignment(&m, &assign)?;
            let v = semantics::eval(&m, &f, &a).map_err(|e| usage(e.to_string()))?;
            match format {
                Format::Text => println!(
                    "{} = {}{}",
                    f,
                    m.label(v),
                    if m.is_designated(v) { " (designated)" } else { "" }
                ),
                Format::Json => println!(
                    "{}",
                    json!({
                        "formula": f.to_string(),
                        "value": m.label(v),
                        "designated": m.is_designated(v),
                    })
                ),
            }
            Ok(EXIT_OK)
        }
        Command::Check {
            logic,
            principles: ids,
            schemata,
            all,
        } => {
            let m = load_logic(&logic)?;
            let ids: Vec<String> = if all {
                principles::catalog().iter().map(|p| p.id.to_string()).collect()
            } else {
                ids
            };
            if ids.is_empty() && schemata.is_empty() {
                return Err(usage("nothing to check: pass --principle, --schema or --all"));
            }
            let mut all_hold = true;
            let mut results = BTreeMap::new();
            for id in &ids {
                let p = principles::find(id)
                    .ok_or_else(|| usage(format!("unknown principle '{id}'")))?;
                let verdict = principles::check_principle(&m, p);
                all_hold &= verdict.holds();
                results.insert(id.clone(), verdict);
            }
            let mut schema_results = BTreeMap::new();
            for s in &schemata {
                let schema = parse_schema(s).map_err(|e| parse_err(e))?;
                let outcome = semantics::schema_valid(&m, &schema)
                    .map_err(|e| usage(e.to_string()))?;
                all_hold &= outcome.is_ok();
                schema_results.insert(s.clone(), outcome);
            }
            match format {
                Format::Text => {
                    for (id, v) in &results {
                        let status = match v.verdict {
                            VerdictKind::Holds => "holds".to_string(),
                            VerdictKind::NotApplicable => "not applicable".to_string(),
                            VerdictKind::Fails => match (&v.counterexample, &v.witness) {
                                (Some(cex), _) => format!("fails (counterexample {cex:?})"),
                                (_, Some(w)) => format!("fails (witness {w:?})"),
                                _ => "fails".to_string(),
                            },
                        };
                        println!("{id}: {status}");
                    }
                    for (s, outcome) in &schema_results {
                        match outcome {
                            Ok(()) => println!("{s}: valid"),
                            Err(cex) => println!(
                                "{s}: invalid (counterexample {:?})",
                                cex.display_assignment(&m)
                            ),
                        }
                    }
                }
                Format::Json => {
                    let schemata_json: BTreeMap<&String, serde_json::Value> = schema_results
                        .iter()
                        .map(|(s, outcome)| {
                            (
                                s,
                                match outcome {
                                    Ok(()) => json!({"valid": true}),
                                    Err(cex) => json!({
                                        "valid": false,
                                        "counterexample": cex.display_assignment(&m),
                                    }),
                                },
                            )
                        })
                        .collect();
                    println!(
                        "{}",
                        json!({
                            "logic": m.name,
                            "principles": results,
                            "schemata": schemata_json,
                            "all_hold": all_hold,
                        })
                    );
                }
            }
            Ok(if all_hold { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Classify { logic } => {
            let m = load_logic(&logic)?;
            let report = principles::classify(&m);
            match format {
                Format::Text => {
                    println!("logic: {}", report.logic);
                    for (id, v) in &report.verdicts {
                        let status = match v.verdict {
                            VerdictKind::Holds => "holds",
                            VerdictKind::Fails => "fails",
                            VerdictKind::NotApplicable => "not applicable",
                        };
                        println!("  {id}: {status}");
                    }
                    println!("weakly connexive: {}", report.weakly_connexive);
                    println!("strongly connexive: {}", report.strongly_connexive);
                    println!("superconnexive: {}", report.superconnexive);
                    println!("super-bot connexive: {}", report.super_bot_connexive);
                    println!(
                        "super-bot without Aristotle/Boethius: {}",
                        report.super_bot_without_at_bt
                    );
                }
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            proof,
            corpus,
            corpus_dir,
        } => {
            if corpus || corpus_dir.is_some() {
                let docs = match &corpus_dir {
                    None => hilbert::corpus(),
                    Some(dir) => {
                        let mut paths: Vec<_> = std::fs::read_dir(dir)
                            .map_err(|e| usage(format!("cannot read '{dir}': {e}")))?
                            .filter_map(|entry| entry.ok().map(|e| e.path()))
                            .filter(|p| p.extension().is_some_and(|x| x == "json"))
                            .collect();
                        paths.sort();
                        let mut docs = Vec::new();
                        for p in paths {
                            let text = std::fs::read_to_string(&p)
                                .map_err(|e| usage(format!("cannot read {p:?}: {e}")))?;
                            docs.push(hilbert::from_json_str(&text).map_err(|e| parse_err(e))?);
                        }
                        docs
                    }
                };
                let summary = match hilbert::replay_all(&docs) {
                    Ok(s) => s,
                    Err(e) => {
                        eprintln!("error: {e}");
                        return Ok(EXIT_CHECK_FAILED);
                    }
                };
                match format {
                    Format::Text => {
                        for (name, ok) in &summary.results {
                            println!("{name}: {}", if *ok { "accepted" } else { "REJECTED" });
                        }
                        println!("{}/{} accepted", summary.accepted, summary.total);
                    }
                    Format::Json => {
                        println!("{}", serde_json::to_string_pretty(&summary).unwrap())
                    }
                }
                return Ok(if summary.all_accepted() {
                    EXIT_OK
                } else {
                    EXIT_CHECK_FAILED
                });
            }
            let path = proof.ok_or_else(|| usage("pass a proof file or --corpus"))?;
            let text = std::fs::read_to_string(&path)
                .map_err(|e| usage(format!("cannot read '{path}': {e}")))?;
            let doc = hilbert::from_json_str(&text).map_err(|e| parse_err(e))?;
            let report = hilbert::verify_proof(&doc);
            match format {
                Format::Text => {
                    for lv in &report.lines {
                        match &lv.reason {
                            None => println!("line {}: ok", lv.line),
                            Some(r) => println!("line {}: FAIL ({r})", lv.line),
                        }
                    }
                    match &report.first_failure {
                        None => println!("accepted: {}", report.name),
                        Some((line, reason)) => {
                            println!("rejected: {} (line {line}: {reason})", report.name)
                        }
                    }
                }
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
            }
            Ok(if report.accepted {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        Command::Search(args) => cmd_search(args, format),
        Command::ListPrinciples => {
            match format {
                Format::Text => {
                    for p in principles::catalog() {
                        println!("{:<22} {}", p.id, p.source);
                    }
                }
                Format::Json => {
                    let items: Vec<serde_json::Value> = principles::catalog()
                        .iter()
                        .map(|p| json!({"id": p.id, "source": p.source}))
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&items).unwrap());
                }
            }
            Ok(EXIT_OK)
        }
        Command::ListLogics => {
            match format {
                Format::Text => {
                    for name in BUILTIN_NAMES {
                        let m = matrix::builtin(name).unwrap();
                        println!(
                            "{:<18} {} values, signature {}",
                            name,
                            m.value_count(),
                            m.signature()
                        );
                    }
                }
                Format::Json => {
                    let items: Vec<serde_json::Value> = BUILTIN_NAMES
                        .iter()
                        .map(|name| {
                            let m = matrix::builtin(name).unwrap();
                            json!({
                                "name": name,
                                "values": m.value_count(),
                                "signature": m.signature().to_string(),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&items).unwrap());
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn cmd_search(args: SearchArgs, format: Format) -> Result<i32, CliError> {
    let mut spec = match &args.spec {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read '{path}': {e}")))?;
            search::spec_from_json_str(&text).map_err(|e| parse_err(e))?
        }
        None => spec_from_flags(&args)?,
    };
    if args.jobs.is_some() {
        spec.jobs = args.jobs;
    }
    // a full (unpinned) table space at four or more values is past the
    // practical ceiling; require pinning or an explicit override
    let unpinned_binary = (spec.signature.and && spec.fixed_tables.and.is_none())
        || (spec.signature.or && spec.fixed_tables.or.is_none())
        || (spec.signature.imp && spec.fixed_tables.imp.is_none());
    if spec.n >= 4 && unpinned_binary && !args.force {
        return Err(usage(
            "searching an unpinned binary table at 4+ values is infeasible; \
             pin tables (fixed_tables / --fixed-from) or pass --force",
        ));
    }
    let result = search::search(&spec).map_err(|e| usage(e.to_string()))?;
    let docs: Vec<matrix::LogicDocument> = result
        .matrices
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let mut named = m.clone();
            named.name = format!("search-{i}");
            matrix::save(&named)
        })
        .collect();
    match format {
        Format::Text => {
            println!(
                "found {} matrices ({} enumerated, {} subtrees pruned, {:?}{})",
                result.matrices.len(),
                result.enumerated,
                result.pruned,
                result.elapsed,
                if result.truncated { ", truncated" } else { "" }
            );
            for d in &docs {
                println!("{}", serde_json::to_string(d).unwrap());
            }
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "stats": {
                        "found": result.matrices.len(),
                        "enumerated": result.enumerated,
                        "pruned": result.pruned,
                        "elapsed_ms": result.elapsed.as_millis() as u64,
                        "truncated": result.truncated,
                    },
                    "matrices": docs,
                }))
                .unwrap()
            );
        }
    }
    Ok(EXIT_OK)
}

fn spec_from_flags(args: &SearchArgs) -> Result<search::SearchSpec, CliError> {
    let n = args
        .values
        .ok_or_else(|| usage("pass --values (or --spec FILE)"))?;
    let signature_names: Vec<String> = args
        .signature
        .as_deref()
        .ok_or_else(|| usage("pass --signature (or --spec FILE)"))?
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    let signature =
        search::signature_from_names(&signature_names).map_err(|e| usage(e.to_string()))?;
    let mut spec = search::SearchSpec::new(n, signature);
    if let Some(d) = &args.designated {
        let mut options = Vec::new();
        for group in d.split(';') {
            let mut mask = vec![false; n];
            for idx in group.split(',').filter(|s| !s.trim().is_empty()) {
                let v: usize = idx
                    .trim()
                    .parse()
                    .map_err(|_| usage(format!("bad designated index '{idx}'")))?;
                if v >= n {
                    return Err(usage(format!("designated index {v} out of range")));
                }
                mask[v] = true;
            }
            options.push(mask);
        }
        spec.designated_options = Some(options);
    }
    spec.require_valid = args.require_valid.clone();
    spec.require_invalid = args.require_invalid.clone();
    spec.require_rules_preserving = args.require_rules.clone();
    for s in &args.require_unsat {
        spec.require_unsat.push(parse_schema(s).map_err(|e| parse_err(e))?);
    }
    for s in &args.require_sat {
        spec.require_sat.push(parse_schema(s).map_err(|e| parse_err(e))?);
    }
    spec.bot_undesignated = args.bot_undesignated;
    if let Some(d) = args.dedupe {
        spec.dedupe_isomorphic = d;
    }
    spec.limit = args.limit;
    spec.prune = !args.no_prune;
    if let Some(from) = &args.fixed_from {
        let m = matrix::builtin(from).map_err(|e| usage(e.to_string()))?;
        if m.value_count() != n {
            return Err(usage(format!(
                "--fixed-from '{from}' has {} values, search uses {n}",
                m.value_count()
            )));
        }
        let which: Vec<&str> = args
            .fixed_tables
            .as_deref()
            .ok_or_else(|| usage("--fixed-from needs --fixed-tables"))?
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        for name in which {
            match name {
                "neg" => spec.fixed_tables.neg = m.neg.clone(),
                "and" => spec.fixed_tables.and = m.and.clone(),
                "or" => spec.fixed_tables.or = m.or.clone(),
                "imp" => spec.fixed_tables.imp = m.imp.clone(),
                "bot" => spec.fixed_tables.bot = m.bot,
                "top" => spec.fixed_tables.top = m.top,
                other => return Err(usage(format!("unknown table '{other}'"))),
            }
        }
    }
    spec.validate().map_err(|e| usage(e.to_string()))?;
    Ok(spec)
}
