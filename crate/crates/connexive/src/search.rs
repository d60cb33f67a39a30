//! Exhaustive enumeration of finite matrices over a chosen signature,
//! filtered by principle constraints, with early-abort pruning on partial
//! tables and isomorphism deduplication via a canonical form.
//!
//! Enumeration order is fixed: designated option, then ⊥ value, then ⊤
//! value, then the tables in connective order (neg, and, or, imp),
//! row-major with values ascending. Parallel runs split the space into
//! disjoint prefixes and merge in prefix order, so results and counters do
//! not depend on the worker count.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::{Connectives, Formula, Schema};
use crate::matrix::{all_permutations, relabel, MatrixLogic};
use crate::parser::parse_schema;
use crate::principles::{check_principle, find, Principle, VerdictKind};
use crate::semantics::{for_each_assignment, schema_satisfiable, Assignment};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("invalid search spec: {0}")]
    InvalidSpec(String),
    #[error("unknown principle id '{0}'")]
    UnknownPrinciple(String),
    #[error("principle '{0}' uses connectives outside the search signature")]
    OutsideSignature(String),
}

/// Optional pinning of whole tables or constants; pinned parts are not
/// enumerated.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FixedTables {
    pub neg: Option<Vec<usize>>,
    pub and: Option<Vec<Vec<usize>>>,
    pub or: Option<Vec<Vec<usize>>>,
    pub imp: Option<Vec<Vec<usize>>>,
    pub bot: Option<usize>,
    pub top: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub n: usize,
    pub signature: Connectives,
    /// Candidate designated sets as boolean masks; `None` means every
    /// nonempty proper subset, in ascending bitmask order (bit v = value v).
    pub designated_options: Option<Vec<Vec<bool>>>,
    pub require_valid: Vec<String>,
    pub require_invalid: Vec<String>,
    pub require_unsat: Vec<Schema>,
    pub require_sat: Vec<Schema>,
    pub require_rules_preserving: Vec<String>,
    /// Restrict ⊥ candidates to undesignated values. Designated-⊥
    /// candidates are structurally invalid anyway; disabling this only
    /// makes the enumeration do that filtering the slow way.
    pub bot_undesignated: bool,
    pub dedupe_isomorphic: bool,
    pub limit: Option<usize>,
    pub fixed_tables: FixedTables,
    pub prune: bool,
    pub jobs: Option<usize>,
}

impl SearchSpec {
    /// Defaults: every designated option, no constraints, ⊥ undesignated,
    /// pruning on, isomorphism dedup on from three values up.
    pub fn new(n: usize, signature: Connectives) -> SearchSpec {
        SearchSpec {
            n,
            signature,
            designated_options: None,
            require_valid: Vec::new(),
            require_invalid: Vec::new(),
            require_unsat: Vec::new(),
            require_sat: Vec::new(),
            require_rules_preserving: Vec::new(),
            bot_undesignated: true,
            dedupe_isomorphic: n >= 3,
            limit: None,
            fixed_tables: FixedTables::default(),
            prune: true,
            jobs: None,
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        let n = self.n;
        if n < 2 {
            return Err(SearchError::InvalidSpec("need at least two values".into()));
        }
        for id in self
            .require_valid
            .iter()
            .chain(&self.require_invalid)
            .chain(&self.require_rules_preserving)
        {
            let p = find(id).ok_or_else(|| SearchError::UnknownPrinciple(id.clone()))?;
            if !p.required_connectives().subset_of(&self.signature) {
                return Err(SearchError::OutsideSignature(id.clone()));
            }
        }
        for s in self.require_unsat.iter().chain(&self.require_sat) {
            if !s.connectives().subset_of(&self.signature) {
                return Err(SearchError::OutsideSignature(s.to_string()));
            }
        }
        if let Some(opts) = &self.designated_options {
            if opts.is_empty() {
                return Err(SearchError::InvalidSpec("no designated options".into()));
            }
            for d in opts {
                if d.len() != n {
                    return Err(SearchError::InvalidSpec(
                        "designated mask does not cover the value set".into(),
                    ));
                }
                let k = d.iter().filter(|&&x| x).count();
                if k == 0 || k == n {
                    return Err(SearchError::InvalidSpec(
                        "designated sets must be nonempty proper subsets".into(),
                    ));
                }
            }
        }
        let dims_ok = self.fixed_tables.neg.as_ref().map_or(true, |t| t.len() == n)
            && [
                &self.fixed_tables.and,
                &self.fixed_tables.or,
                &self.fixed_tables.imp,
            ]
            .iter()
            .all(|t| {
                t.as_ref().map_or(true, |rows| {
                    rows.len() == n && rows.iter().all(|r| r.len() == n && r.iter().all(|&v| v < n))
                })
            });
        if !dims_ok {
            return Err(SearchError::InvalidSpec(
                "fixed table dimensions do not match the value count".into(),
            ));
        }
        for (name, fixed, in_sig) in [
            ("neg", self.fixed_tables.neg.is_some(), self.signature.neg),
            ("and", self.fixed_tables.and.is_some(), self.signature.and),
            ("or", self.fixed_tables.or.is_some(), self.signature.or),
            ("imp", self.fixed_tables.imp.is_some(), self.signature.imp),
            ("bot", self.fixed_tables.bot.is_some(), self.signature.bot),
            ("top", self.fixed_tables.top.is_some(), self.signature.top),
        ] {
            if fixed && !in_sig {
                return Err(SearchError::InvalidSpec(format!(
                    "fixed table for '{name}' outside the signature"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    /// Matrices passing every constraint; canonical forms when
    /// `dedupe_isomorphic` is on, raw enumeration forms otherwise.
    pub matrices: Vec<MatrixLogic>,
    /// Complete candidates reached (leaves of the enumeration tree).
    pub enumerated: u64,
    /// Subtrees cut by the partial-table refutation check.
    pub pruned: u64,
    pub elapsed: Duration,
    pub truncated: bool,
}

// ---------------------------------------------------------------------------
// Partial matrices

#[derive(Debug, Clone)]
struct Partial {
    n: usize,
    designated: Vec<bool>,
    neg: Option<Vec<Option<usize>>>,
    and: Option<Vec<Vec<Option<usize>>>>,
    or: Option<Vec<Vec<Option<usize>>>>,
    imp: Option<Vec<Vec<Option<usize>>>>,
    bot: Option<usize>,
    top: Option<usize>,
}

#[derive(Debug, Clone, Copy)]
enum Cell {
    Neg(usize),
    And(usize, usize),
    Or(usize, usize),
    Imp(usize, usize),
}

impl Partial {
    fn set(&mut self, c: Cell, v: Option<usize>) {
        match c {
            Cell::Neg(a) => self.neg.as_mut().unwrap()[a] = v,
            Cell::And(a, b) => self.and.as_mut().unwrap()[a][b] = v,
            Cell::Or(a, b) => self.or.as_mut().unwrap()[a][b] = v,
            Cell::Imp(a, b) => self.imp.as_mut().unwrap()[a][b] = v,
        }
    }

    /// Table-lookup evaluation over a partial matrix; `None` means some
    /// needed entry is not fixed yet.
    fn eval(&self, f: &Formula, a: &Assignment) -> Option<usize> {
        match f {
            Formula::Atom(name) | Formula::Metavar(name) => a.get(name).copied(),
            Formula::Bottom => self.bot,
            Formula::Top => self.top,
            Formula::Neg(x) => self.neg.as_ref().unwrap()[self.eval(x, a)?],
            Formula::And(l, r) => {
                self.and.as_ref().unwrap()[self.eval(l, a)?][self.eval(r, a)?]
            }
            Formula::Or(l, r) => self.or.as_ref().unwrap()[self.eval(l, a)?][self.eval(r, a)?],
            Formula::Imp(l, r) => {
                self.imp.as_ref().unwrap()[self.eval(l, a)?][self.eval(r, a)?]
            }
        }
    }

    fn complete(&self, name: &str) -> MatrixLogic {
        let unwrap_unary =
            |t: &Vec<Option<usize>>| t.iter().map(|v| v.expect("complete")).collect();
        let unwrap_binary = |t: &Vec<Vec<Option<usize>>>| {
            t.iter()
                .map(|row| row.iter().map(|v| v.expect("complete")).collect())
                .collect()
        };
        MatrixLogic {
            name: name.to_string(),
            values: (0..self.n).map(|v| v.to_string()).collect(),
            designated: self.designated.clone(),
            neg: self.neg.as_ref().map(unwrap_unary),
            and: self.and.as_ref().map(unwrap_binary),
            or: self.or.as_ref().map(unwrap_binary),
            imp: self.imp.as_ref().map(unwrap_binary),
            bot: self.bot,
            top: self.top,
        }
    }
}

/// A refuting assignment whose evaluation is already fully determined by
/// the fixed entries.
fn partially_refuted(p: &Partial, schemas: &[(Vec<String>, Schema)]) -> bool {
    schemas.iter().any(|(vars, s)| {
        for_each_assignment(vars, p.n, |a| {
            matches!(p.eval(s, a), Some(v) if !p.designated[v])
        })
        .is_some()
    })
}

// ---------------------------------------------------------------------------
// Enumeration and filtering

struct Ctx<'a> {
    spec: &'a SearchSpec,
    valid: Vec<&'static Principle>,
    invalid: Vec<&'static Principle>,
    rules: Vec<&'static Principle>,
    /// Validity payloads used for pruning, with their sorted leaf names.
    prune_schemas: Vec<(Vec<String>, Schema)>,
}

fn passes(m: &MatrixLogic, ctx: &Ctx) -> bool {
    if m.validate().is_err() {
        return false;
    }
    ctx.valid.iter().all(|p| check_principle(m, p).holds())
        && ctx
            .invalid
            .iter()
            .all(|p| check_principle(m, p).verdict == VerdictKind::Fails)
        && ctx.rules.iter().all(|p| check_principle(m, p).holds())
        && ctx
            .spec
            .require_unsat
            .iter()
            .all(|s| schema_satisfiable(m, s).expect("signature checked").is_none())
        && ctx
            .spec
            .require_sat
            .iter()
            .all(|s| schema_satisfiable(m, s).expect("signature checked").is_some())
}

fn fill(
    p: &mut Partial,
    cells: &[Cell],
    idx: usize,
    ctx: &Ctx,
    out: &mut Vec<MatrixLogic>,
    enumerated: &mut u64,
    pruned: &mut u64,
) {
    if idx == cells.len() {
        *enumerated += 1;
        let m = p.complete("candidate");
        if passes(&m, ctx) {
            out.push(m);
        }
        return;
    }
    let cell = cells[idx];
    for v in 0..p.n {
        p.set(cell, Some(v));
        if ctx.spec.prune && partially_refuted(p, &ctx.prune_schemas) {
            *pruned += 1;
        } else {
            fill(p, cells, idx + 1, ctx, out, enumerated, pruned);
        }
    }
    p.set(cell, None);
}

fn designated_options(spec: &SearchSpec) -> Vec<Vec<bool>> {
    match &spec.designated_options {
        Some(opts) => opts.clone(),
        None => {
            let n = spec.n;
            (1..(1usize << n) - 1)
                .map(|mask| (0..n).map(|v| mask & (1 << v) != 0).collect())
                .collect()
        }
    }
}

fn free_cells(spec: &SearchSpec) -> Vec<Cell> {
    let n = spec.n;
    let mut cells = Vec::new();
    if spec.signature.neg && spec.fixed_tables.neg.is_none() {
        cells.extend((0..n).map(Cell::Neg));
    }
    for (in_sig, fixed, mk) in [
        (
            spec.signature.and,
            spec.fixed_tables.and.is_some(),
            Cell::And as fn(usize, usize) -> Cell,
        ),
        (spec.signature.or, spec.fixed_tables.or.is_some(), Cell::Or),
        (spec.signature.imp, spec.fixed_tables.imp.is_some(), Cell::Imp),
    ] {
        if in_sig && !fixed {
            for a in 0..n {
                for b in 0..n {
                    cells.push(mk(a, b));
                }
            }
        }
    }
    cells
}

fn blank_partial(spec: &SearchSpec, designated: Vec<bool>, bot: Option<usize>, top: Option<usize>) -> Partial {
    let n = spec.n;
    let unary = |fixed: &Option<Vec<usize>>| {
        fixed
            .as_ref()
            .map(|t| t.iter().map(|&v| Some(v)).collect())
            .unwrap_or_else(|| vec![None; n])
    };
    let binary = |fixed: &Option<Vec<Vec<usize>>>| {
        fixed
            .as_ref()
            .map(|t| {
                t.iter()
                    .map(|row| row.iter().map(|&v| Some(v)).collect())
                    .collect()
            })
            .unwrap_or_else(|| vec![vec![None; n]; n])
    };
    Partial {
        n,
        designated,
        neg: spec.signature.neg.then(|| unary(&spec.fixed_tables.neg)),
        and: spec.signature.and.then(|| binary(&spec.fixed_tables.and)),
        or: spec.signature.or.then(|| binary(&spec.fixed_tables.or)),
        imp: spec.signature.imp.then(|| binary(&spec.fixed_tables.imp)),
        bot,
        top,
    }
}

/// A disjoint work unit: a partial matrix with constants chosen and at most
/// the first free cell fixed.
struct Stem {
    partial: Partial,
    start: usize,
}

fn stems(spec: &SearchSpec, cells: &[Cell], ctx: &Ctx, pruned: &mut u64) -> Vec<Stem> {
    let mut out = Vec::new();
    for designated in designated_options(spec) {
        let bot_choices: Vec<Option<usize>> = if !spec.signature.bot {
            vec![None]
        } else if let Some(b) = spec.fixed_tables.bot {
            vec![Some(b)]
        } else {
            (0..spec.n)
                .filter(|&v| !spec.bot_undesignated || !designated[v])
                .map(Some)
                .collect()
        };
        let top_choices: Vec<Option<usize>> = if !spec.signature.top {
            vec![None]
        } else if let Some(t) = spec.fixed_tables.top {
            vec![Some(t)]
        } else {
            (0..spec.n).map(Some).collect()
        };
        for &bot in &bot_choices {
            for &top in &top_choices {
                let base = blank_partial(spec, designated.clone(), bot, top);
                if cells.is_empty() {
                    out.push(Stem {
                        partial: base,
                        start: 0,
                    });
                    continue;
                }
                for v in 0..spec.n {
                    let mut p = base.clone();
                    p.set(cells[0], Some(v));
                    if ctx.spec.prune && partially_refuted(&p, &ctx.prune_schemas) {
                        *pruned += 1;
                    } else {
                        out.push(Stem { partial: p, start: 1 });
                    }
                }
            }
        }
    }
    out
}

fn build_ctx(spec: &SearchSpec) -> Result<Ctx<'_>, SearchError> {
    spec.validate()?;
    let resolve = |ids: &[String]| -> Vec<&'static Principle> {
        ids.iter().map(|id| find(id).expect("validated")).collect()
    };
    let valid = resolve(&spec.require_valid);
    let prune_schemas = valid
        .iter()
        .filter_map(|p| match &p.kind {
            crate::principles::PrincipleKind::Valid(s) => {
                let vars: Vec<String> = s.free_names().into_iter().collect();
                Some((vars, s.clone()))
            }
            _ => None,
        })
        .collect();
    Ok(Ctx {
        spec,
        valid,
        invalid: resolve(&spec.require_invalid),
        rules: resolve(&spec.require_rules_preserving),
        prune_schemas,
    })
}

/// Run the full search: enumerate, filter, deduplicate, truncate.
pub fn search(spec: &SearchSpec) -> Result<SearchResult, SearchError> {
    let started = Instant::now();
    let ctx = build_ctx(spec)?;
    let cells = free_cells(spec);
    let mut stem_pruned = 0u64;
    let work = stems(spec, &cells, &ctx, &mut stem_pruned);

    let run = || -> Vec<(Vec<MatrixLogic>, u64, u64)> {
        work.par_iter()
            .map(|stem| {
                let mut p = stem.partial.clone();
                let mut found = Vec::new();
                let (mut enumerated, mut pruned) = (0u64, 0u64);
                fill(&mut p, &cells, stem.start, &ctx, &mut found, &mut enumerated, &mut pruned);
                (found, enumerated, pruned)
            })
            .collect()
    };
    // par_iter + ordered collect keeps the global enumeration order no
    // matter how many workers run
    let per_stem = match spec.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| SearchError::InvalidSpec(e.to_string()))?
            .install(run),
        None => run(),
    };

    let mut matrices = Vec::new();
    let mut seen = BTreeSet::new();
    let (mut enumerated, mut pruned) = (0u64, stem_pruned);
    for (found, e, pr) in per_stem {
        enumerated += e;
        pruned += pr;
        for m in found {
            if spec.dedupe_isomorphic {
                let canon = canonicalize(&m);
                if seen.insert(encode(&canon)) {
                    matrices.push(canon);
                }
            } else {
                matrices.push(m);
            }
        }
    }
    let mut truncated = false;
    if let Some(limit) = spec.limit {
        if matrices.len() > limit {
            matrices.truncate(limit);
            truncated = true;
        }
    }
    Ok(SearchResult {
        matrices,
        enumerated,
        pruned,
        elapsed: started.elapsed(),
        truncated,
    })
}

/// Enumerate without constraint filtering (structural invariants still
/// apply); honors dedupe and limit.
pub fn enumerate(spec: &SearchSpec) -> Result<Vec<MatrixLogic>, SearchError> {
    let mut bare = spec.clone();
    bare.require_valid.clear();
    bare.require_invalid.clear();
    bare.require_unsat.clear();
    bare.require_sat.clear();
    bare.require_rules_preserving.clear();
    Ok(search(&bare)?.matrices)
}

// ---------------------------------------------------------------------------
// Canonical forms

fn encode(m: &MatrixLogic) -> Vec<i64> {
    let mut key: Vec<i64> = m.designated.iter().map(|&d| d as i64).collect();
    key.push(m.bot.map_or(-1, |v| v as i64));
    key.push(m.top.map_or(-1, |v| v as i64));
    match &m.neg {
        Some(t) => key.extend(t.iter().map(|&v| v as i64)),
        None => key.push(-1),
    }
    for t in [&m.and, &m.or, &m.imp] {
        match t {
            Some(rows) => key.extend(rows.iter().flatten().map(|&v| v as i64)),
            None => key.push(-1),
        }
    }
    key
}

/// Lexicographically least relabeling of the matrix over all value
/// permutations (designated flags, constants and tables travel with the
/// relabeling). Two matrices get the same canonical form exactly when they
/// are isomorphic; labels are normalized to "0".."n-1".
pub fn canonicalize(m: &MatrixLogic) -> MatrixLogic {
    let n = m.value_count();
    let mut best: Option<(Vec<i64>, MatrixLogic)> = None;
    for perm in all_permutations(n) {
        let r = relabel(m, &perm);
        let key = encode(&r);
        if best.as_ref().map_or(true, |(bk, _)| key < *bk) {
            best = Some((key, r));
        }
    }
    let (_, mut canon) = best.expect("at least the identity permutation");
    canon.values = (0..n).map(|v| v.to_string()).collect();
    canon
}

// ---------------------------------------------------------------------------
// Wire format

fn default_true() -> bool {
    true
}

/// JSON mirror of [`SearchSpec`]; schemata and tables in the same notation
/// as logic documents, values as internal indices.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchSpecJson {
    pub values: usize,
    pub signature: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub designated_options: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub require_valid: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub require_invalid: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub require_unsat: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub require_sat: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub require_rules_preserving: Vec<String>,
    #[serde(default = "default_true")]
    pub bot_undesignated: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dedupe_isomorphic: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub limit: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed_tables: Option<FixedTablesJson>,
    #[serde(default = "default_true")]
    pub prune: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixedTablesJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neg: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub and: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub or: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub imp: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bot: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top: Option<usize>,
}

pub fn signature_from_names(names: &[String]) -> Result<Connectives, SearchError> {
    let mut c = Connectives::default();
    for name in names {
        match name.as_str() {
            "neg" => c.neg = true,
            "and" => c.and = true,
            "or" => c.or = true,
            "imp" => c.imp = true,
            "bot" => c.bot = true,
            "top" => c.top = true,
            other => {
                return Err(SearchError::InvalidSpec(format!(
                    "unknown connective '{other}'"
                )))
            }
        }
    }
    Ok(c)
}

pub fn spec_from_json(j: &SearchSpecJson) -> Result<SearchSpec, SearchError> {
    let n = j.values;
    let signature = signature_from_names(&j.signature)?;
    let sch = |s: &String| {
        parse_schema(s).map_err(|e| SearchError::InvalidSpec(format!("schema '{s}': {e}")))
    };
    let spec = SearchSpec {
        n,
        signature,
        designated_options: j.designated_options.as_ref().map(|opts| {
            opts.iter()
                .map(|d| (0..n).map(|v| d.contains(&v)).collect())
                .collect()
        }),
        require_valid: j.require_valid.clone(),
        require_invalid: j.require_invalid.clone(),
        require_unsat: j.require_unsat.iter().map(sch).collect::<Result<_, _>>()?,
        require_sat: j.require_sat.iter().map(sch).collect::<Result<_, _>>()?,
        require_rules_preserving: j.require_rules_preserving.clone(),
        bot_undesignated: j.bot_undesignated,
        dedupe_isomorphic: j.dedupe_isomorphic.unwrap_or(n >= 3),
        limit: j.limit,
        fixed_tables: match &j.fixed_tables {
            None => FixedTables::default(),
            Some(f) => FixedTables {
                neg: f.neg.clone(),
                and: f.and.clone(),
                or: f.or.clone(),
                imp: f.imp.clone(),
                bot: f.bot,
                top: f.top,
            },
        },
        prune: j.prune,
        jobs: j.jobs,
    };
    spec.validate()?;
    Ok(spec)
}

pub fn spec_from_json_str(s: &str) -> Result<SearchSpec, SearchError> {
    let j: SearchSpecJson =
        serde_json::from_str(s).map_err(|e| SearchError::InvalidSpec(e.to_string()))?;
    spec_from_json(&j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{builtin, is_isomorphic};

    fn sig(names: &[&str]) -> Connectives {
        signature_from_names(&names.iter().map(|s| s.to_string()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn sixteen_imp_tables() {
        let mut spec = SearchSpec::new(2, sig(&["imp"]));
        spec.designated_options = Some(vec![vec![false, true]]);
        spec.dedupe_isomorphic = false;
        let result = search(&spec).unwrap();
        assert_eq!(result.enumerated, 16);
        assert_eq!(result.matrices.len(), 16);
        assert_eq!(result.pruned, 0);
    }

    #[test]
    fn classical_found_once_with_dedupe() {
        let mut spec = SearchSpec::new(2, sig(&["neg", "and", "or", "imp", "bot", "top"]));
        spec.dedupe_isomorphic = true;
        let result = search(&spec).unwrap();
        let classical = builtin("classical").unwrap();
        let hits = result
            .matrices
            .iter()
            .filter(|m| is_isomorphic(m, &classical).unwrap().is_some())
            .count();
        assert_eq!(hits, 1);
    }

    #[test]
    fn sa2_matrix_exists_at_three_values() {
        let mut spec = SearchSpec::new(3, sig(&["neg", "imp"]));
        spec.designated_options = Some(vec![vec![true, false, false]]);
        spec.require_valid = vec!["SA2".into()];
        spec.require_invalid = vec!["DNE".into()];
        let result = search(&spec).unwrap();
        assert!(!result.matrices.is_empty());
        assert!(result.pruned > 0);
        // the bundled three-valued matrix satisfies the same constraints
        let sa2 = builtin("sa2_three").unwrap();
        assert!(check_principle(&sa2, find("SA2").unwrap()).holds());
        assert_eq!(
            check_principle(&sa2, find("DNE").unwrap()).verdict,
            VerdictKind::Fails
        );
        // and its canonical form is among the results
        let mut canon = canonicalize(&sa2);
        canon.name = "candidate".into();
        assert!(result.matrices.contains(&canon));
    }

    #[test]
    fn prune_parity_small() {
        let mut spec = SearchSpec::new(2, sig(&["neg", "imp"]));
        spec.require_valid = vec!["BT1".into()];
        spec.dedupe_isomorphic = true;
        let with = search(&spec).unwrap();
        spec.prune = false;
        let without = search(&spec).unwrap();
        assert_eq!(with.matrices, without.matrices);
        assert!(without.pruned == 0);
    }

    #[test]
    fn determinism_across_job_counts() {
        let mut spec = SearchSpec::new(2, sig(&["neg", "imp", "bot"]));
        spec.require_valid = vec!["S_BOT_A1".into()];
        spec.dedupe_isomorphic = true;
        spec.jobs = Some(1);
        let one = search(&spec).unwrap();
        spec.jobs = Some(4);
        let four = search(&spec).unwrap();
        assert_eq!(one.matrices, four.matrices);
        assert_eq!(one.enumerated, four.enumerated);
        assert_eq!(one.pruned, four.pruned);
    }

    #[test]
    fn canonicalize_orbits() {
        let classical = builtin("classical").unwrap();
        let bicond = builtin("classical_bicond").unwrap();
        // idempotent
        let c = canonicalize(&classical);
        assert_eq!(canonicalize(&c), c);
        // relabelings collapse
        let swapped = relabel(&classical, &[1, 0]);
        assert_eq!(canonicalize(&swapped), c);
        // distinct orbits stay distinct
        assert_ne!(canonicalize(&bicond), c);
    }

    #[test]
    fn fixed_tables_pin_the_search() {
        let cc1 = builtin("cc1_bot").unwrap();
        let mut spec = SearchSpec::new(4, sig(&["neg", "imp", "bot"]));
        spec.designated_options = Some(vec![cc1.designated.clone()]);
        spec.fixed_tables.neg = cc1.neg.clone();
        spec.fixed_tables.imp = cc1.imp.clone();
        spec.fixed_tables.bot = cc1.bot;
        spec.dedupe_isomorphic = false;
        let result = search(&spec).unwrap();
        assert_eq!(result.enumerated, 1);
        assert_eq!(result.matrices.len(), 1);
        assert!(check_principle(&result.matrices[0], find("S_BOT_A1").unwrap()).holds());
    }

    #[test]
    fn spec_json_round_trip() {
        let text = r#"{
            "values": 3,
            "signature": ["neg", "imp"],
            "designated_options": [[0]],
            "require_valid": ["SA2"],
            "require_invalid": ["DNE"],
            "limit": 5
        }"#;
        let spec = spec_from_json_str(text).unwrap();
        assert_eq!(spec.n, 3);
        assert!(spec.signature.neg && spec.signature.imp && !spec.signature.and);
        assert_eq!(spec.designated_options, Some(vec![vec![true, false, false]]));
        assert!(spec.dedupe_isomorphic);
        assert_eq!(spec.limit, Some(5));
    }

    #[test]
    fn invalid_specs_rejected() {
        let spec = SearchSpec::new(1, sig(&["imp"]));
        assert!(matches!(spec.validate(), Err(SearchError::InvalidSpec(_))));
        let mut spec = SearchSpec::new(2, sig(&["imp"]));
        spec.require_valid = vec!["AT1".into()];
        assert!(matches!(
            spec.validate(),
            Err(SearchError::OutsideSignature(_))
        ));
        spec.require_valid = vec!["NO_SUCH".into()];
        assert!(matches!(
            spec.validate(),
            Err(SearchError::UnknownPrinciple(_))
        ));
    }
}
