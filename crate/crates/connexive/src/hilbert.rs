//! Hilbert-style proof documents, a line-by-line verifier, and the bundled
//! corpus replaying the triviality and derivability arguments for the
//! superconnexive and super-bot principles.
//!
//! Axioms are schemata instantiated at use, which subsumes uniform
//! substitution for derivations that only substitute into axioms. An
//! explicit substitution rule (substitute into any derived line) is
//! available behind the `sub` rule flag for fidelity experiments; the
//! bundled corpus does not need it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::{imp, neg, substitute, substitute_partial, Formula, Schema, Substitution};
use crate::parser::parse_schema;
use crate::principles::{self, PrincipleKind};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HilbertError {
    #[error("malformed proof document: {0}")]
    Malformed(String),
    #[error("unknown axiom id '{0}'")]
    UnknownAxiom(String),
    #[error("axiom id '{0}' is not a validity schema")]
    NotAnAxiomSchema(String),
    #[error("unknown rule '{0}'")]
    UnknownRule(String),
    #[error("corpus is empty: nothing was checked")]
    EmptyCorpus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RuleId {
    Mp,
    Adj,
    Trans,
    Contra,
    /// Explicit substitution into a derived line.
    Sub,
}

impl RuleId {
    pub fn as_str(&self) -> &'static str {
        match self {
            RuleId::Mp => "mp",
            RuleId::Adj => "adj",
            RuleId::Trans => "trans",
            RuleId::Contra => "contra",
            RuleId::Sub => "sub",
        }
    }

    pub fn from_str(s: &str) -> Result<RuleId, HilbertError> {
        Ok(match s {
            "mp" => RuleId::Mp,
            "adj" => RuleId::Adj,
            "trans" => RuleId::Trans,
            "contra" => RuleId::Contra,
            "sub" => RuleId::Sub,
            other => return Err(HilbertError::UnknownRule(other.to_string())),
        })
    }
}

/// Axioms (catalog ids of validity schemata) and rules a proof may use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemSpec {
    pub axioms: Vec<String>,
    pub rules: Vec<RuleId>,
    pub hypotheses_allowed: bool,
    /// Declared hypothesis schemata. When present, every hypothesis line
    /// must match one of them; when absent (and hypotheses are allowed),
    /// any schema may be assumed.
    pub assumptions: Option<Vec<Schema>>,
}

impl SystemSpec {
    /// Check that every referenced axiom exists in the catalog as a
    /// validity schema.
    pub fn validate(&self) -> Result<(), HilbertError> {
        for id in &self.axioms {
            let p = principles::find(id).ok_or_else(|| HilbertError::UnknownAxiom(id.clone()))?;
            if !matches!(p.kind, PrincipleKind::Valid(_)) {
                return Err(HilbertError::NotAnAxiomSchema(id.clone()));
            }
        }
        Ok(())
    }
}

/// Why a proof line holds. Rule references are 1-based line numbers and
/// must point strictly backwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    Axiom { id: String, subst: Substitution },
    Hypothesis,
    /// Mp(i, j): line j is (line i) -> (this line).
    Mp(usize, usize),
    /// Adj(i, j): this line is (line i) & (line j).
    Adj(usize, usize),
    /// Trans(i, j): lines i, j are X->Y and Y->Z; this line is X->Z.
    Trans(usize, usize),
    /// Contra(i): line i is X->Y; this line is ~Y->~X.
    Contra(usize),
    /// Sub(i): this line is line i under the given substitution.
    Sub { line: usize, subst: Substitution },
}

impl Justification {
    pub fn kind(&self) -> &'static str {
        match self {
            Justification::Axiom { .. } => "axiom",
            Justification::Hypothesis => "hyp",
            Justification::Mp(..) => "mp",
            Justification::Adj(..) => "adj",
            Justification::Trans(..) => "trans",
            Justification::Contra(..) => "contra",
            Justification::Sub { .. } => "sub",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofLine {
    pub schema: Schema,
    pub justification: Justification,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofDocument {
    pub name: String,
    pub system: SystemSpec,
    pub goal: Schema,
    pub lines: Vec<ProofLine>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineVerdict {
    pub line: usize,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub accepted: bool,
    pub lines: Vec<LineVerdict>,
    /// 1-based line number and reason of the first failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<(usize, String)>,
}

/// Verify a proof line by line. The report accepts iff every line verifies
/// and the final line equals the goal.
pub fn verify_proof(p: &ProofDocument) -> VerificationReport {
    let mut lines = Vec::with_capacity(p.lines.len());
    let mut first_failure: Option<(usize, String)> = None;
    if let Err(e) = p.system.validate() {
        return VerificationReport {
            name: p.name.clone(),
            accepted: false,
            lines,
            first_failure: Some((0, e.to_string())),
        };
    }
    for idx in 0..p.lines.len() {
        let number = idx + 1;
        let verdict = match check_line(p, idx) {
            Ok(()) => LineVerdict {
                line: number,
                ok: true,
                reason: None,
            },
            Err(reason) => {
                if first_failure.is_none() {
                    first_failure = Some((number, reason.clone()));
                }
                LineVerdict {
                    line: number,
                    ok: false,
                    reason: Some(reason),
                }
            }
        };
        lines.push(verdict);
    }
    match p.lines.last() {
        None => {
            if first_failure.is_none() {
                first_failure = Some((0, "proof has no lines".into()));
            }
        }
        Some(last) => {
            if last.schema != p.goal && first_failure.is_none() {
                first_failure = Some((
                    p.lines.len(),
                    format!(
                        "final line '{}' does not match goal '{}'",
                        last.schema, p.goal
                    ),
                ));
            }
        }
    }
    VerificationReport {
        name: p.name.clone(),
        accepted: first_failure.is_none(),
        lines,
        first_failure,
    }
}

fn check_line(p: &ProofDocument, idx: usize) -> Result<(), String> {
    let line = &p.lines[idx];
    let earlier = |r: usize| -> Result<&Schema, String> {
        if r == 0 || r > idx {
            Err(format!("bad reference: line {} is not earlier", r))
        } else {
            Ok(&p.lines[r - 1].schema)
        }
    };
    let need_rule = |r: RuleId| -> Result<(), String> {
        if p.system.rules.contains(&r) {
            Ok(())
        } else {
            Err(format!("rule '{}' is not in the system", r.as_str()))
        }
    };
    match &line.justification {
        Justification::Axiom { id, subst } => {
            if !p.system.axioms.iter().any(|a| a == id) {
                return Err(format!("axiom '{id}' is not in the system"));
            }
            let payload = match &principles::find(id).expect("validated").kind {
                PrincipleKind::Valid(s) => s,
                _ => unreachable!("validated as axiom schema"),
            };
            let expected = substitute(payload, subst).map_err(|e| e.to_string())?;
            if expected == line.schema {
                Ok(())
            } else {
                Err(format!(
                    "axiom mismatch: expected '{expected}', got '{}'",
                    line.schema
                ))
            }
        }
        Justification::Hypothesis => {
            if !p.system.hypotheses_allowed {
                return Err("hypothesis in a hypothesis-free system".into());
            }
            match &p.system.assumptions {
                Some(assumed) if !assumed.contains(&line.schema) => Err(format!(
                    "hypothesis '{}' is not among the declared assumptions",
                    line.schema
                )),
                _ => Ok(()),
            }
        }
        Justification::Mp(i, j) => {
            need_rule(RuleId::Mp)?;
            let (minor, major) = (earlier(*i)?, earlier(*j)?);
            if *major == imp(minor.clone(), line.schema.clone()) {
                Ok(())
            } else {
                Err(format!(
                    "mp: line {j} is not '{}'",
                    imp(minor.clone(), line.schema.clone())
                ))
            }
        }
        Justification::Adj(i, j) => {
            need_rule(RuleId::Adj)?;
            let (l, r) = (earlier(*i)?, earlier(*j)?);
            if line.schema == crate::formula::and(l.clone(), r.clone()) {
                Ok(())
            } else {
                Err(format!("adj: line is not the conjunction of lines {i} and {j}"))
            }
        }
        Justification::Trans(i, j) => {
            need_rule(RuleId::Trans)?;
            match (earlier(*i)?, earlier(*j)?) {
                (Formula::Imp(x, y1), Formula::Imp(y2, z)) if y1 == y2 => {
                    if line.schema == imp((**x).clone(), (**z).clone()) {
                        Ok(())
                    } else {
                        Err("trans: conclusion does not chain the referenced lines".into())
                    }
                }
                _ => Err("trans: referenced lines do not compose".into()),
            }
        }
        Justification::Contra(i) => {
            need_rule(RuleId::Contra)?;
            match earlier(*i)? {
                Formula::Imp(x, y) => {
                    if line.schema == imp(neg((**y).clone()), neg((**x).clone())) {
                        Ok(())
                    } else {
                        Err("contra: conclusion is not the contraposition of the referenced line"
                            .into())
                    }
                }
                _ => Err("contra: referenced line is not an implication".into()),
            }
        }
        Justification::Sub { line: i, subst } => {
            need_rule(RuleId::Sub)?;
            let base = earlier(*i)?;
            if line.schema == substitute_partial(base, subst) {
                Ok(())
            } else {
                Err("sub: line is not the referenced line under the substitution".into())
            }
        }
    }
}

/// Summary of verifying a list of documents.
#[derive(Debug, Clone, Serialize)]
pub struct ReplaySummary {
    pub results: Vec<(String, bool)>,
    pub accepted: usize,
    pub total: usize,
}

impl ReplaySummary {
    pub fn all_accepted(&self) -> bool {
        self.accepted == self.total
    }
}

/// Verify every document; errors when the list is empty (a vacuously green
/// replay is reported as failure).
pub fn replay_all(docs: &[ProofDocument]) -> Result<ReplaySummary, HilbertError> {
    if docs.is_empty() {
        return Err(HilbertError::EmptyCorpus);
    }
    let results: Vec<(String, bool)> = docs
        .iter()
        .map(|d| (d.name.clone(), verify_proof(d).accepted))
        .collect();
    let accepted = results.iter().filter(|(_, ok)| *ok).count();
    Ok(ReplaySummary {
        accepted,
        total: results.len(),
        results,
    })
}

// ---------------------------------------------------------------------------
// Wire format

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProofJson {
    pub name: String,
    pub system: SystemJson,
    pub goal: String,
    pub lines: Vec<LineJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemJson {
    pub axioms: Vec<String>,
    pub rules: Vec<String>,
    pub hypotheses: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assumptions: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LineJson {
    pub schema: String,
    pub by: ByJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ByJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axiom_id: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subst: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub refs: Option<Vec<usize>>,
}

fn parse_subst(map: &BTreeMap<String, String>) -> Result<Substitution, HilbertError> {
    map.iter()
        .map(|(k, v)| {
            parse_schema(v)
                .map(|s| (k.clone(), s))
                .map_err(|e| HilbertError::Malformed(format!("substitution for {k}: {e}")))
        })
        .collect()
}

fn render_subst(sub: &Substitution) -> BTreeMap<String, String> {
    sub.iter().map(|(k, v)| (k.clone(), v.to_string())).collect()
}

pub fn from_json(j: &ProofJson) -> Result<ProofDocument, HilbertError> {
    let sch = |s: &str| parse_schema(s).map_err(|e| HilbertError::Malformed(e.to_string()));
    let refs_of = |by: &ByJson, want: usize| -> Result<Vec<usize>, HilbertError> {
        let refs = by.refs.clone().unwrap_or_default();
        if refs.len() != want {
            return Err(HilbertError::Malformed(format!(
                "justification '{}' expects {want} refs, got {}",
                by.kind,
                refs.len()
            )));
        }
        Ok(refs)
    };
    let lines = j
        .lines
        .iter()
        .map(|l| {
            let justification = match l.by.kind.as_str() {
                "axiom" => Justification::Axiom {
                    id: l
                        .by
                        .axiom_id
                        .clone()
                        .ok_or_else(|| HilbertError::Malformed("axiom without axiom_id".into()))?,
                    subst: parse_subst(l.by.subst.as_ref().unwrap_or(&BTreeMap::new()))?,
                },
                "hyp" => Justification::Hypothesis,
                "mp" => {
                    let r = refs_of(&l.by, 2)?;
                    Justification::Mp(r[0], r[1])
                }
                "adj" => {
                    let r = refs_of(&l.by, 2)?;
                    Justification::Adj(r[0], r[1])
                }
                "trans" => {
                    let r = refs_of(&l.by, 2)?;
                    Justification::Trans(r[0], r[1])
                }
                "contra" => {
                    let r = refs_of(&l.by, 1)?;
                    Justification::Contra(r[0])
                }
                "sub" => {
                    let r = refs_of(&l.by, 1)?;
                    Justification::Sub {
                        line: r[0],
                        subst: parse_subst(l.by.subst.as_ref().unwrap_or(&BTreeMap::new()))?,
                    }
                }
                other => {
                    return Err(HilbertError::Malformed(format!(
                        "unknown justification kind '{other}'"
                    )))
                }
            };
            Ok(ProofLine {
                schema: sch(&l.schema)?,
                justification,
            })
        })
        .collect::<Result<Vec<_>, HilbertError>>()?;
    Ok(ProofDocument {
        name: j.name.clone(),
        system: SystemSpec {
            axioms: j.system.axioms.clone(),
            rules: j
                .system
                .rules
                .iter()
                .map(|r| RuleId::from_str(r))
                .collect::<Result<_, _>>()?,
            hypotheses_allowed: j.system.hypotheses,
            assumptions: j
                .system
                .assumptions
                .as_ref()
                .map(|v| v.iter().map(|s| sch(s)).collect::<Result<_, _>>())
                .transpose()?,
        },
        goal: sch(&j.goal)?,
        lines,
    })
}

pub fn to_json(p: &ProofDocument) -> ProofJson {
    ProofJson {
        name: p.name.clone(),
        system: SystemJson {
            axioms: p.system.axioms.clone(),
            rules: p.system.rules.iter().map(|r| r.as_str().to_string()).collect(),
            hypotheses: p.system.hypotheses_allowed,
            assumptions: p
                .system
                .assumptions
                .as_ref()
                .map(|v| v.iter().map(|s| s.to_string()).collect()),
        },
        goal: p.goal.to_string(),
        lines: p
            .lines
            .iter()
            .map(|l| LineJson {
                schema: l.schema.to_string(),
                by: match &l.justification {
                    Justification::Axiom { id, subst } => ByJson {
                        kind: "axiom".into(),
                        axiom_id: Some(id.clone()),
                        subst: if subst.is_empty() {
                            None
                        } else {
                            Some(render_subst(subst))
                        },
                        refs: None,
                    },
                    Justification::Hypothesis => ByJson {
                        kind: "hyp".into(),
                        axiom_id: None,
                        subst: None,
                        refs: None,
                    },
                    Justification::Mp(i, j) => by_refs("mp", vec![*i, *j]),
                    Justification::Adj(i, j) => by_refs("adj", vec![*i, *j]),
                    Justification::Trans(i, j) => by_refs("trans", vec![*i, *j]),
                    Justification::Contra(i) => by_refs("contra", vec![*i]),
                    Justification::Sub { line, subst } => ByJson {
                        kind: "sub".into(),
                        axiom_id: None,
                        subst: Some(render_subst(subst)),
                        refs: Some(vec![*line]),
                    },
                },
            })
            .collect(),
    }
}

fn by_refs(kind: &str, refs: Vec<usize>) -> ByJson {
    ByJson {
        kind: kind.into(),
        axiom_id: None,
        subst: None,
        refs: Some(refs),
    }
}

pub fn from_json_str(s: &str) -> Result<ProofDocument, HilbertError> {
    let j: ProofJson =
        serde_json::from_str(s).map_err(|e| HilbertError::Malformed(e.to_string()))?;
    from_json(&j)
}

pub fn to_json_string(p: &ProofDocument) -> String {
    serde_json::to_string_pretty(&to_json(p)).expect("proof serialization")
}

// ---------------------------------------------------------------------------
// Mutation sweep

/// Canonical single-line mutants: for every line, replace the justification
/// by one of each other kind (refs pinned to line 1). Used to check that
/// the verifier rejects every such corruption of a corpus document.
pub fn justification_mutants(doc: &ProofDocument) -> Vec<ProofDocument> {
    let mut out = Vec::new();
    for (idx, line) in doc.lines.iter().enumerate() {
        let replacements: Vec<Justification> = vec![
            Justification::Axiom {
                id: doc.system.axioms.first().cloned().unwrap_or_default(),
                subst: Substitution::new(),
            },
            Justification::Hypothesis,
            Justification::Mp(1, 1),
            Justification::Adj(1, 1),
            Justification::Trans(1, 1),
            Justification::Contra(1),
        ];
        for repl in replacements {
            if repl.kind() == line.justification.kind() {
                continue;
            }
            let mut mutant = doc.clone();
            mutant.name = format!("{}__mut_l{}_{}", doc.name, idx + 1, repl.kind());
            mutant.lines[idx].justification = repl;
            out.push(mutant);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Bundled corpus

/// Meta-level propositions documented but not replayed as line-by-line
/// objects (their object-level ingredients are in the corpus).
pub struct MetaNote {
    pub name: &'static str,
    pub note: &'static str,
}

pub fn meta_notes() -> &'static [MetaNote] {
    &[
        MetaNote {
            name: "bot_entails_all_with_deduction_theorem",
            note: "bot |= A together with the deduction theorem yields the axiom bot -> A, \
                   which trivializes with S_BOT_A1 and MP; replayed ingredients: the \
                   efq_sbota1_trivial document and the semantic entailment check bot |= A.",
        },
        MetaNote {
            name: "deduction_theorem_proves_bot",
            note: "the deduction theorem derives Weakening, so it proves bot with S_BOT_A2 \
                   and MP; replayed ingredient: the weakening_proves_bot document.",
        },
    ]
}

fn ax(id: &str, binds: &[(&str, &str)]) -> Justification {
    Justification::Axiom {
        id: id.to_string(),
        subst: binds
            .iter()
            .map(|(k, v)| (k.to_string(), parse_schema(v).expect("corpus schema")))
            .collect(),
    }
}

fn mp(i: usize, j: usize) -> Justification {
    Justification::Mp(i, j)
}

fn adj(i: usize, j: usize) -> Justification {
    Justification::Adj(i, j)
}

#[allow(clippy::too_many_arguments)]
fn doc(
    name: &str,
    axioms: &[&str],
    rules: &[RuleId],
    assumptions: Option<&[&str]>,
    goal: &str,
    lines: &[(&str, Justification)],
) -> ProofDocument {
    ProofDocument {
        name: name.to_string(),
        system: SystemSpec {
            axioms: axioms.iter().map(|s| s.to_string()).collect(),
            rules: rules.to_vec(),
            hypotheses_allowed: assumptions.is_some(),
            assumptions: assumptions
                .map(|v| v.iter().map(|s| parse_schema(s).expect("corpus schema")).collect()),
        },
        goal: parse_schema(goal).expect("corpus schema"),
        lines: lines
            .iter()
            .map(|(s, j)| ProofLine {
                schema: parse_schema(s).expect("corpus schema"),
                justification: j.clone(),
            })
            .collect(),
    }
}

/// Every displayed derivation in the source material, as a verifiable
/// document. Triviality goals end in a fresh metavariable (derivability of
/// an arbitrary schema); bot-derivation goals end in `bot`.
pub fn corpus() -> Vec<ProofDocument> {
    use RuleId::*;
    let ecq = "A -> (~A -> A)";
    vec![
        doc(
            "sa1_trivial",
            &["SA1"],
            &[Mp],
            None,
            "B",
            &[
                ("(A -> ~A) -> ~(A -> ~A)", ax("SA1", &[("A", "A"), ("B", "~(A -> ~A)")])),
                ("((A -> ~A) -> ~(A -> ~A)) -> B", ax("SA1", &[("A", "A -> ~A"), ("B", "B")])),
                ("B", mp(1, 2)),
            ],
        ),
        doc(
            "sa2_dne_trans_trivial",
            &["SA2", "DNE"],
            &[Mp, Trans],
            None,
            "B",
            &[
                ("~~(~A -> A) -> (~A -> A)", ax("DNE", &[("A", "~A -> A")])),
                ("(~A -> A) -> ~(~A -> A)", ax("SA2", &[("A", "A"), ("B", "~(~A -> A)")])),
                ("~~(~A -> A) -> ~(~A -> A)", Justification::Trans(1, 2)),
                ("(~~(~A -> A) -> ~(~A -> A)) -> B", ax("SA2", &[("A", "~(~A -> A)"), ("B", "B")])),
                ("B", mp(3, 4)),
            ],
        ),
        doc(
            "sb1_trivial",
            &["SB1"],
            &[Mp],
            None,
            "E",
            &[
                ("(A -> B) -> ((A -> ~B) -> C)", ax("SB1", &[("A", "A"), ("B", "B"), ("C", "C")])),
                (
                    "((A -> B) -> ((A -> ~B) -> C)) -> (((A -> B) -> ~((A -> ~B) -> C)) -> D)",
                    ax("SB1", &[("A", "A -> B"), ("B", "(A -> ~B) -> C"), ("C", "D")]),
                ),
                ("((A -> B) -> ~((A -> ~B) -> C)) -> D", mp(1, 2)),
                (
                    "((A -> B) -> ((A -> ~B) -> C)) -> (((A -> B) -> ~((A -> ~B) -> C)) -> ~D)",
                    ax("SB1", &[("A", "A -> B"), ("B", "(A -> ~B) -> C"), ("C", "~D")]),
                ),
                ("((A -> B) -> ~((A -> ~B) -> C)) -> ~D", mp(1, 4)),
                (
                    "(((A -> B) -> ~((A -> ~B) -> C)) -> D) -> ((((A -> B) -> ~((A -> ~B) -> C)) -> ~D) -> E)",
                    ax("SB1", &[("A", "(A -> B) -> ~((A -> ~B) -> C)"), ("B", "D"), ("C", "E")]),
                ),
                ("(((A -> B) -> ~((A -> ~B) -> C)) -> ~D) -> E", mp(3, 6)),
                ("E", mp(5, 7)),
            ],
        ),
        doc(
            "sb2_dni_trivial",
            &["SB2", "DNI"],
            &[Mp],
            None,
            "(A -> ~A) -> B",
            &[
                (
                    "(A -> ~~A) -> ((A -> ~A) -> B)",
                    ax("SB2", &[("A", "A"), ("B", "~A"), ("C", "B")]),
                ),
                ("A -> ~~A", ax("DNI", &[("A", "A")])),
                ("(A -> ~A) -> B", mp(2, 1)),
            ],
        ),
        doc(
            "efq_sbota1_trivial",
            &["EFQ", "S_BOT_A1"],
            &[Mp],
            None,
            "A",
            &[
                ("bot -> ~bot", ax("EFQ", &[("A", "~bot")])),
                ("(bot -> ~bot) -> bot", ax("S_BOT_A1", &[("A", "bot")])),
                ("bot", mp(1, 2)),
                ("bot -> A", ax("EFQ", &[("A", "A")])),
                ("A", mp(3, 4)),
            ],
        ),
        doc(
            "weakening_proves_bot",
            &["WEAKENING", "S_BOT_A2"],
            &[Mp],
            None,
            "bot",
            &[
                (
                    "((~A -> A) -> bot) -> (~((~A -> A) -> bot) -> ((~A -> A) -> bot))",
                    ax(
                        "WEAKENING",
                        &[("A", "(~A -> A) -> bot"), ("B", "~((~A -> A) -> bot)")],
                    ),
                ),
                ("(~A -> A) -> bot", ax("S_BOT_A2", &[("A", "A")])),
                ("~((~A -> A) -> bot) -> ((~A -> A) -> bot)", mp(2, 1)),
                (
                    "(~((~A -> A) -> bot) -> ((~A -> A) -> bot)) -> bot",
                    ax("S_BOT_A2", &[("A", "(~A -> A) -> bot")]),
                ),
                ("bot", mp(3, 4)),
            ],
        ),
        doc(
            "ecq_arrow_sbotb1_bot",
            &["ECQ_ARROW", "S_BOT_B1"],
            &[Mp],
            None,
            "bot",
            &[
                (ecq, ax("ECQ_ARROW", &[("A", "A"), ("B", "A")])),
                (
                    "(A -> (~A -> A)) -> (~(A -> (~A -> A)) -> B)",
                    ax("ECQ_ARROW", &[("A", ecq), ("B", "B")]),
                ),
                ("~(A -> (~A -> A)) -> B", mp(1, 2)),
                (
                    "(A -> (~A -> A)) -> (~(A -> (~A -> A)) -> ~B)",
                    ax("ECQ_ARROW", &[("A", ecq), ("B", "~B")]),
                ),
                ("~(A -> (~A -> A)) -> ~B", mp(1, 4)),
                (
                    "(~(A -> (~A -> A)) -> B) -> ((~(A -> (~A -> A)) -> ~B) -> bot)",
                    ax("S_BOT_B1", &[("A", "~(A -> (~A -> A))"), ("B", "B")]),
                ),
                ("(~(A -> (~A -> A)) -> ~B) -> bot", mp(3, 6)),
                ("bot", mp(5, 7)),
            ],
        ),
        doc(
            "ecq_arrow_sbotb2_bot",
            &["ECQ_ARROW", "S_BOT_B2"],
            &[Mp],
            None,
            "bot",
            &[
                (ecq, ax("ECQ_ARROW", &[("A", "A"), ("B", "A")])),
                (
                    "(A -> (~A -> A)) -> (~(A -> (~A -> A)) -> ~B)",
                    ax("ECQ_ARROW", &[("A", ecq), ("B", "~B")]),
                ),
                ("~(A -> (~A -> A)) -> ~B", mp(1, 2)),
                (
                    "(A -> (~A -> A)) -> (~(A -> (~A -> A)) -> B)",
                    ax("ECQ_ARROW", &[("A", ecq), ("B", "B")]),
                ),
                ("~(A -> (~A -> A)) -> B", mp(1, 4)),
                (
                    "(~(A -> (~A -> A)) -> ~B) -> ((~(A -> (~A -> A)) -> B) -> bot)",
                    ax("S_BOT_B2", &[("A", "~(A -> (~A -> A))"), ("B", "B")]),
                ),
                ("(~(A -> (~A -> A)) -> B) -> bot", mp(3, 6)),
                ("bot", mp(5, 7)),
            ],
        ),
        doc(
            "a_to_top_bot",
            &["A_TO_TOP", "S_BOT_A2"],
            &[Mp],
            None,
            "bot",
            &[
                ("~top -> top", ax("A_TO_TOP", &[("A", "~top")])),
                ("(~top -> top) -> bot", ax("S_BOT_A2", &[("A", "top")])),
                ("bot", mp(1, 2)),
            ],
        ),
        doc(
            "neg_top_to_a_bot",
            &["NEG_TOP_TO_A", "S_BOT_A2"],
            &[Mp],
            None,
            "bot",
            &[
                ("~top -> top", ax("NEG_TOP_TO_A", &[("A", "top")])),
                ("(~top -> top) -> bot", ax("S_BOT_A2", &[("A", "top")])),
                ("bot", mp(1, 2)),
            ],
        ),
        doc(
            "peirce_bot",
            &["PEIRCE", "S_BOT_A1"],
            &[Mp],
            None,
            "bot",
            &[
                ("(bot -> ~bot) -> bot", ax("S_BOT_A1", &[("A", "bot")])),
                (
                    "((bot -> ~bot) -> bot) -> bot",
                    ax("PEIRCE", &[("A", "bot"), ("B", "~bot")]),
                ),
                ("bot", mp(1, 2)),
            ],
        ),
        doc(
            "conj_elim_sbotb_bot",
            &["CONJ_ELIM1", "CONJ_ELIM2", "S_BOT_B1"],
            &[Mp],
            None,
            "bot",
            &[
                ("(A & ~A) -> A", ax("CONJ_ELIM1", &[("A", "A"), ("B", "~A")])),
                ("(A & ~A) -> ~A", ax("CONJ_ELIM2", &[("A", "A"), ("B", "~A")])),
                (
                    "((A & ~A) -> A) -> (((A & ~A) -> ~A) -> bot)",
                    ax("S_BOT_B1", &[("A", "A & ~A"), ("B", "A")]),
                ),
                ("((A & ~A) -> ~A) -> bot", mp(1, 3)),
                ("bot", mp(2, 4)),
            ],
        ),
        doc(
            "ecq_and_sbota1_bot",
            &["ECQ_AND", "S_BOT_A1"],
            &[Mp],
            None,
            "bot",
            &[
                (
                    "(A & ~A) -> ~(A & ~A)",
                    ax("ECQ_AND", &[("A", "A"), ("B", "~(A & ~A)")]),
                ),
                (
                    "((A & ~A) -> ~(A & ~A)) -> bot",
                    ax("S_BOT_A1", &[("A", "A & ~A")]),
                ),
                ("bot", mp(1, 2)),
            ],
        ),
        doc(
            "ecq_and_via_exportation",
            &["ECQ_AND", "EXPORTATION", "S_BOT_B1"],
            &[Mp],
            None,
            "bot",
            &[
                ("(A & ~A) -> A", ax("ECQ_AND", &[("A", "A"), ("B", "A")])),
                (
                    "((A & ~A) -> A) -> (A -> (~A -> A))",
                    ax("EXPORTATION", &[("A", "A"), ("B", "~A"), ("C", "A")]),
                ),
                (ecq, mp(1, 2)),
                (
                    "((A -> (~A -> A)) & ~(A -> (~A -> A))) -> B",
                    ax("ECQ_AND", &[("A", ecq), ("B", "B")]),
                ),
                (
                    "(((A -> (~A -> A)) & ~(A -> (~A -> A))) -> B) -> ((A -> (~A -> A)) -> (~(A -> (~A -> A)) -> B))",
                    ax("EXPORTATION", &[("A", ecq), ("B", "~(A -> (~A -> A))"), ("C", "B")]),
                ),
                ("(A -> (~A -> A)) -> (~(A -> (~A -> A)) -> B)", mp(4, 5)),
                ("~(A -> (~A -> A)) -> B", mp(3, 6)),
                (
                    "((A -> (~A -> A)) & ~(A -> (~A -> A))) -> ~B",
                    ax("ECQ_AND", &[("A", ecq), ("B", "~B")]),
                ),
                (
                    "(((A -> (~A -> A)) & ~(A -> (~A -> A))) -> ~B) -> ((A -> (~A -> A)) -> (~(A -> (~A -> A)) -> ~B))",
                    ax("EXPORTATION", &[("A", ecq), ("B", "~(A -> (~A -> A))"), ("C", "~B")]),
                ),
                ("(A -> (~A -> A)) -> (~(A -> (~A -> A)) -> ~B)", mp(8, 9)),
                ("~(A -> (~A -> A)) -> ~B", mp(3, 10)),
                (
                    "(~(A -> (~A -> A)) -> B) -> ((~(A -> (~A -> A)) -> ~B) -> bot)",
                    ax("S_BOT_B1", &[("A", "~(A -> (~A -> A))"), ("B", "B")]),
                ),
                ("(~(A -> (~A -> A)) -> ~B) -> bot", mp(7, 12)),
                ("bot", mp(11, 13)),
            ],
        ),
        doc(
            "super_abelard_adj_trivial",
            &["SUPER_ABELARD"],
            &[Mp, Adj],
            None,
            "D",
            &[
                (
                    "((A -> B) & (A -> ~B)) -> C",
                    ax("SUPER_ABELARD", &[("A", "A"), ("B", "B"), ("C", "C")]),
                ),
                (
                    "((A -> B) & (A -> ~B)) -> ~C",
                    ax("SUPER_ABELARD", &[("A", "A"), ("B", "B"), ("C", "~C")]),
                ),
                (
                    "(((A -> B) & (A -> ~B)) -> C) & (((A -> B) & (A -> ~B)) -> ~C)",
                    adj(1, 2),
                ),
                (
                    "((((A -> B) & (A -> ~B)) -> C) & (((A -> B) & (A -> ~B)) -> ~C)) -> D",
                    ax(
                        "SUPER_ABELARD",
                        &[("A", "(A -> B) & (A -> ~B)"), ("B", "C"), ("C", "D")],
                    ),
                ),
                ("D", mp(3, 4)),
            ],
        ),
        doc(
            "efq_adj_sbabelard_trivial",
            &["EFQ", "S_BOT_ABELARD"],
            &[Mp, Adj],
            None,
            "A",
            &[
                ("bot -> A", ax("EFQ", &[("A", "A")])),
                ("bot -> ~A", ax("EFQ", &[("A", "~A")])),
                ("(bot -> A) & (bot -> ~A)", adj(1, 2)),
                (
                    "((bot -> A) & (bot -> ~A)) -> bot",
                    ax("S_BOT_ABELARD", &[("A", "bot"), ("B", "A")]),
                ),
                ("bot", mp(3, 4)),
                ("A", mp(5, 1)),
            ],
        ),
        doc(
            "neg_top_adj_sbabelard_bot",
            &["NEG_TOP_TO_A", "S_BOT_ABELARD"],
            &[Mp, Adj],
            None,
            "bot",
            &[
                ("~top -> A", ax("NEG_TOP_TO_A", &[("A", "A")])),
                ("~top -> ~A", ax("NEG_TOP_TO_A", &[("A", "~A")])),
                ("(~top -> A) & (~top -> ~A)", adj(1, 2)),
                (
                    "((~top -> A) & (~top -> ~A)) -> bot",
                    ax("S_BOT_ABELARD", &[("A", "~top"), ("B", "A")]),
                ),
                ("bot", mp(3, 4)),
            ],
        ),
        doc(
            "conj_elim_adj_sbabelard_bot",
            &["CONJ_ELIM1", "CONJ_ELIM2", "S_BOT_ABELARD"],
            &[Mp, Adj],
            None,
            "bot",
            &[
                ("(A & ~A) -> A", ax("CONJ_ELIM1", &[("A", "A"), ("B", "~A")])),
                ("(A & ~A) -> ~A", ax("CONJ_ELIM2", &[("A", "A"), ("B", "~A")])),
                ("((A & ~A) -> A) & ((A & ~A) -> ~A)", adj(1, 2)),
                (
                    "(((A & ~A) -> A) & ((A & ~A) -> ~A)) -> bot",
                    ax("S_BOT_ABELARD", &[("A", "A & ~A"), ("B", "A")]),
                ),
                ("bot", mp(3, 4)),
            ],
        ),
        doc(
            "a_to_top_adj_sba2_bot",
            &["A_TO_TOP", "S_BOT_ARISTOTLE2"],
            &[Mp, Adj],
            None,
            "bot",
            &[
                ("A -> top", ax("A_TO_TOP", &[("A", "A")])),
                ("~A -> top", ax("A_TO_TOP", &[("A", "~A")])),
                ("(A -> top) & (~A -> top)", adj(1, 2)),
                (
                    "((A -> top) & (~A -> top)) -> bot",
                    ax("S_BOT_ARISTOTLE2", &[("A", "A"), ("B", "top")]),
                ),
                ("bot", mp(3, 4)),
            ],
        ),
        doc(
            "a_to_neg_bot_adj_sba2_bot",
            &["A_TO_NEG_BOT", "S_BOT_ARISTOTLE2"],
            &[Mp, Adj],
            None,
            "bot",
            &[
                ("A -> ~bot", ax("A_TO_NEG_BOT", &[("A", "A")])),
                ("~A -> ~bot", ax("A_TO_NEG_BOT", &[("A", "~A")])),
                ("(A -> ~bot) & (~A -> ~bot)", adj(1, 2)),
                (
                    "((A -> ~bot) & (~A -> ~bot)) -> bot",
                    ax("S_BOT_ARISTOTLE2", &[("A", "A"), ("B", "~bot")]),
                ),
                ("bot", mp(3, 4)),
            ],
        ),
        doc(
            "disj_intro_adj_sba2_bot",
            &["DISJ_INTRO1", "DISJ_INTRO2", "S_BOT_ARISTOTLE2"],
            &[Mp, Adj],
            None,
            "bot",
            &[
                ("A -> (A | ~A)", ax("DISJ_INTRO1", &[("A", "A"), ("B", "~A")])),
                ("~A -> (A | ~A)", ax("DISJ_INTRO2", &[("A", "A"), ("B", "~A")])),
                ("(A -> (A | ~A)) & (~A -> (A | ~A))", adj(1, 2)),
                (
                    "((A -> (A | ~A)) & (~A -> (A | ~A))) -> bot",
                    ax("S_BOT_ARISTOTLE2", &[("A", "A"), ("B", "A | ~A")]),
                ),
                ("bot", mp(3, 4)),
            ],
        ),
        doc(
            "sbota1_to_at1",
            &["S_BOT_A1", "NEG_BOT"],
            &[Mp, Contra],
            None,
            "~(A -> ~A)",
            &[
                ("(A -> ~A) -> bot", ax("S_BOT_A1", &[("A", "A")])),
                ("~bot -> ~(A -> ~A)", Justification::Contra(1)),
                ("~bot", ax("NEG_BOT", &[])),
                ("~(A -> ~A)", mp(3, 2)),
            ],
        ),
        doc(
            "sbota2_to_at2",
            &["S_BOT_A2", "NEG_BOT"],
            &[Mp, Contra],
            None,
            "~(~A -> A)",
            &[
                ("(~A -> A) -> bot", ax("S_BOT_A2", &[("A", "A")])),
                ("~bot -> ~(~A -> A)", Justification::Contra(1)),
                ("~bot", ax("NEG_BOT", &[])),
                ("~(~A -> A)", mp(3, 2)),
            ],
        ),
        doc(
            "sbabelard_to_abelard",
            &["S_BOT_ABELARD", "NEG_BOT"],
            &[Mp, Contra],
            None,
            "~((A -> B) & (A -> ~B))",
            &[
                (
                    "((A -> B) & (A -> ~B)) -> bot",
                    ax("S_BOT_ABELARD", &[("A", "A"), ("B", "B")]),
                ),
                (
                    "~bot -> ~((A -> B) & (A -> ~B))",
                    Justification::Contra(1),
                ),
                ("~bot", ax("NEG_BOT", &[])),
                ("~((A -> B) & (A -> ~B))", mp(3, 2)),
            ],
        ),
        doc(
            "sba2_to_aristotle2",
            &["S_BOT_ARISTOTLE2", "NEG_BOT"],
            &[Mp, Contra],
            None,
            "~((A -> B) & (~A -> B))",
            &[
                (
                    "((A -> B) & (~A -> B)) -> bot",
                    ax("S_BOT_ARISTOTLE2", &[("A", "A"), ("B", "B")]),
                ),
                (
                    "~bot -> ~((A -> B) & (~A -> B))",
                    Justification::Contra(1),
                ),
                ("~bot", ax("NEG_BOT", &[])),
                ("~((A -> B) & (~A -> B))", mp(3, 2)),
            ],
        ),
        doc(
            "sbotb1_to_bt1_rule",
            &["S_BOT_B1", "NEG_BOT"],
            &[Mp, Contra],
            Some(&["A -> B"]),
            "~(A -> ~B)",
            &[
                ("A -> B", Justification::Hypothesis),
                (
                    "(A -> B) -> ((A -> ~B) -> bot)",
                    ax("S_BOT_B1", &[("A", "A"), ("B", "B")]),
                ),
                ("(A -> ~B) -> bot", mp(1, 2)),
                ("~bot -> ~(A -> ~B)", Justification::Contra(3)),
                ("~bot", ax("NEG_BOT", &[])),
                ("~(A -> ~B)", mp(5, 4)),
            ],
        ),
        doc(
            "sbotb2_to_bt2_rule",
            &["S_BOT_B2", "NEG_BOT"],
            &[Mp, Contra],
            Some(&["A -> ~B"]),
            "~(A -> B)",
            &[
                ("A -> ~B", Justification::Hypothesis),
                (
                    "(A -> ~B) -> ((A -> B) -> bot)",
                    ax("S_BOT_B2", &[("A", "A"), ("B", "B")]),
                ),
                ("(A -> B) -> bot", mp(1, 2)),
                ("~bot -> ~(A -> B)", Justification::Contra(3)),
                ("~bot", ax("NEG_BOT", &[])),
                ("~(A -> B)", mp(5, 4)),
            ],
        ),
    ]
}
