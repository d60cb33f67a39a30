//! Matrix evaluation and the semantic checks behind every principle:
//! schema validity, (co-)satisfiability, rule designation-preservation and
//! entailment.
//!
//! Schema checks quantify over assignments of matrix values to the schema's
//! leaf names (metavariables and atoms alike): atoms range over every value,
//! so value assignments exactly capture the substitution-instance closure.
//! The brute-force oracle in the test suite guards this.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::formula::Formula;
use crate::matrix::MatrixLogic;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("no value assigned to '{0}'")]
    MissingVariable(String),
    #[error("connective '{connective}' is not defined in logic '{logic}'")]
    ConnectiveNotDefined { connective: String, logic: String },
}

/// Map from leaf name (atom or metavariable) to internal matrix value.
pub type Assignment = BTreeMap<String, usize>;

/// Compositional table-lookup evaluation.
pub fn eval(m: &MatrixLogic, f: &Formula, a: &Assignment) -> Result<usize, EvalError> {
    let missing = |c: &str| EvalError::ConnectiveNotDefined {
        connective: c.to_string(),
        logic: m.name.clone(),
    };
    match f {
        Formula::Atom(n) | Formula::Metavar(n) => a
            .get(n)
            .copied()
            .ok_or_else(|| EvalError::MissingVariable(n.clone())),
        Formula::Bottom => m.bot.ok_or_else(|| missing("bot")),
        Formula::Top => m.top.ok_or_else(|| missing("top")),
        Formula::Neg(x) => {
            let v = eval(m, x, a)?;
            Ok(m.neg.as_ref().ok_or_else(|| missing("neg"))?[v])
        }
        Formula::And(l, r) => {
            let (lv, rv) = (eval(m, l, a)?, eval(m, r, a)?);
            Ok(m.and.as_ref().ok_or_else(|| missing("and"))?[lv][rv])
        }
        Formula::Or(l, r) => {
            let (lv, rv) = (eval(m, l, a)?, eval(m, r, a)?);
            Ok(m.or.as_ref().ok_or_else(|| missing("or"))?[lv][rv])
        }
        Formula::Imp(l, r) => {
            let (lv, rv) = (eval(m, l, a)?, eval(m, r, a)?);
            Ok(m.imp.as_ref().ok_or_else(|| missing("imp"))?[lv][rv])
        }
    }
}

/// A refuting or witnessing assignment together with the computed value of
/// the offending formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub assignment: Assignment,
    /// Value of each checked formula under the assignment, in input order.
    pub values: Vec<usize>,
}

impl Counterexample {
    /// Assignment rendered with the matrix display labels.
    pub fn display_assignment(&self, m: &MatrixLogic) -> BTreeMap<String, String> {
        self.assignment
            .iter()
            .map(|(k, &v)| (k.clone(), m.values[v].to_string()))
            .collect()
    }
}

/// Iterate every assignment of matrix values to `vars`, in lexicographic
/// order (first variable most significant, values ascending). The scan is
/// total and ordered, so the first hit is deterministic.
pub fn for_each_assignment<F>(vars: &[String], n: usize, mut f: F) -> Option<Assignment>
where
    F: FnMut(&Assignment) -> bool,
{
    let mut current = vec![0usize; vars.len()];
    loop {
        let a: Assignment = vars
            .iter()
            .cloned()
            .zip(current.iter().copied())
            .collect();
        if f(&a) {
            return Some(a);
        }
        // odometer, last variable fastest
        let mut i = vars.len();
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            current[i] += 1;
            if current[i] < n {
                break;
            }
            current[i] = 0;
        }
    }
}

fn sorted_names(fs: &[&Formula]) -> Vec<String> {
    let mut names = std::collections::BTreeSet::new();
    for f in fs {
        names.extend(f.free_names());
    }
    names.into_iter().collect()
}

/// True iff the schema is designated under every assignment; on failure the
/// minimal-index counterexample under the canonical enumeration order.
pub fn schema_valid(
    m: &MatrixLogic,
    s: &Formula,
) -> Result<Result<(), Counterexample>, EvalError> {
    let vars = sorted_names(&[s]);
    let mut err = None;
    let mut cex = None;
    for_each_assignment(&vars, m.value_count(), |a| {
        match eval(m, s, a) {
            Ok(v) if !m.is_designated(v) => {
                cex = Some(Counterexample {
                    assignment: a.clone(),
                    values: vec![v],
                });
                true
            }
            Ok(_) => false,
            Err(e) => {
                err = Some(e);
                true
            }
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(match cex {
        Some(c) => Err(c),
        None => Ok(()),
    })
}

/// True iff some assignment designates the schema; returns the first
/// witness.
pub fn schema_satisfiable(
    m: &MatrixLogic,
    s: &Formula,
) -> Result<Option<Counterexample>, EvalError> {
    schemata_co_satisfiable(m, &[s.clone()])
}

/// True iff a single assignment designates every schema in the list (shared
/// metavariables are shared across the list).
pub fn schemata_co_satisfiable(
    m: &MatrixLogic,
    ss: &[Formula],
) -> Result<Option<Counterexample>, EvalError> {
    let refs: Vec<&Formula> = ss.iter().collect();
    let vars = sorted_names(&refs);
    let mut err = None;
    let mut witness = None;
    for_each_assignment(&vars, m.value_count(), |a| {
        let mut values = Vec::with_capacity(ss.len());
        for s in ss {
            match eval(m, s, a) {
                Ok(v) => {
                    if !m.is_designated(v) {
                        return false;
                    }
                    values.push(v);
                }
                Err(e) => {
                    err = Some(e);
                    return true;
                }
            }
        }
        witness = Some(Counterexample {
            assignment: a.clone(),
            values,
        });
        true
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(witness)
}

/// True iff under every assignment, all premises designated implies the
/// conclusion designated. A failure reports the assignment with premise and
/// conclusion values (conclusion last).
pub fn rule_preserves_designation(
    m: &MatrixLogic,
    premises: &[Formula],
    conclusion: &Formula,
) -> Result<Result<(), Counterexample>, EvalError> {
    let mut refs: Vec<&Formula> = premises.iter().collect();
    refs.push(conclusion);
    let vars = sorted_names(&refs);
    let mut err = None;
    let mut cex = None;
    for_each_assignment(&vars, m.value_count(), |a| {
        let mut values = Vec::with_capacity(premises.len() + 1);
        for p in premises {
            match eval(m, p, a) {
                Ok(v) => {
                    if !m.is_designated(v) {
                        return false;
                    }
                    values.push(v);
                }
                Err(e) => {
                    err = Some(e);
                    return true;
                }
            }
        }
        match eval(m, conclusion, a) {
            Ok(v) => {
                if m.is_designated(v) {
                    false
                } else {
                    values.push(v);
                    cex = Some(Counterexample {
                        assignment: a.clone(),
                        values,
                    });
                    true
                }
            }
            Err(e) => {
                err = Some(e);
                true
            }
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(match cex {
        Some(c) => Err(c),
        None => Ok(()),
    })
}

/// Matrix consequence: every assignment designating all premises designates
/// the conclusion. Vacuously true when the premises are co-unsatisfiable.
pub fn entails(
    m: &MatrixLogic,
    premises: &[Formula],
    conclusion: &Formula,
) -> Result<bool, EvalError> {
    Ok(rule_preserves_designation(m, premises, conclusion)?.is_ok())
}
