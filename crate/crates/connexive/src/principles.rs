//! The named catalog of connexive principles and rules, the per-principle
//! checker, and the connexivity classifier.

use std::collections::BTreeMap;

use once_cell::sync::Lazy;
use serde::Serialize;

use crate::formula::{Connectives, Schema};
use crate::matrix::MatrixLogic;
use crate::parser::parse_schema;
use crate::semantics::{
    rule_preserves_designation, schema_satisfiable, schema_valid, schemata_co_satisfiable,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrincipleKind {
    /// The schema must be designated under every assignment.
    Valid(Schema),
    /// Each schema must have no designating assignment.
    Unsatisfiable(Vec<Schema>),
    /// No single assignment designates all schemata at once.
    CoUnsatisfiable(Vec<Schema>),
    /// Designation-preserving inference rule.
    Rule {
        premises: Vec<Schema>,
        conclusion: Schema,
    },
    /// Uniform substitution. Holds in every matrix: validity quantifies
    /// over all value assignments, which is closed under instantiation.
    Substitution,
}

#[derive(Debug, Clone)]
pub struct Principle {
    pub id: &'static str,
    pub kind: PrincipleKind,
    /// Human-readable pointer into the connexive literature.
    pub source: &'static str,
}

impl Principle {
    /// Connectives the principle needs the matrix to interpret.
    pub fn required_connectives(&self) -> Connectives {
        let mut c = Connectives::default();
        let mut add = |s: &Schema| c = c.union(&s.connectives());
        match &self.kind {
            PrincipleKind::Valid(s) => add(s),
            PrincipleKind::Unsatisfiable(ss) | PrincipleKind::CoUnsatisfiable(ss) => {
                ss.iter().for_each(add)
            }
            PrincipleKind::Rule {
                premises,
                conclusion,
            } => {
                premises.iter().for_each(&mut add);
                add(conclusion);
            }
            PrincipleKind::Substitution => {}
        }
        c
    }
}

fn sch(s: &str) -> Schema {
    parse_schema(s).expect("catalog schema parses")
}

macro_rules! valid {
    ($id:literal, $payload:literal, $source:literal) => {
        Principle {
            id: $id,
            kind: PrincipleKind::Valid(sch($payload)),
            source: $source,
        }
    };
}

static CATALOG: Lazy<Vec<Principle>> = Lazy::new(|| {
    vec![
        // Aristotle and Boethius
        valid!("AT1", "~(A -> ~A)", "Aristotle's thesis, first form"),
        valid!("AT2", "~(~A -> A)", "Aristotle's thesis, second form"),
        valid!("BT1", "(A -> B) -> ~(A -> ~B)", "Boethius' thesis, first form"),
        valid!("BT2", "(A -> ~B) -> ~(A -> B)", "Boethius' thesis, second form"),
        // Kapsner's unsatisfiability requirements
        Principle {
            id: "UNSAT1",
            kind: PrincipleKind::Unsatisfiable(vec![sch("A -> ~A"), sch("~A -> A")]),
            source: "no model satisfies A -> ~A, nor ~A -> A",
        },
        Principle {
            id: "UNSAT2",
            kind: PrincipleKind::CoUnsatisfiable(vec![sch("A -> B"), sch("A -> ~B")]),
            source: "no model satisfies A -> B and A -> ~B simultaneously",
        },
        Principle {
            id: "UNSAT3",
            kind: PrincipleKind::CoUnsatisfiable(vec![sch("A -> B"), sch("~A -> B")]),
            source: "no model satisfies A -> B and ~A -> B simultaneously",
        },
        // Superconnexive forms (trivialize; reported but never required)
        valid!("SA1", "(A -> ~A) -> B", "Super-Aristotle, first form"),
        valid!("SA2", "(~A -> A) -> B", "Super-Aristotle, second form"),
        valid!("SB1", "(A -> B) -> ((A -> ~B) -> C)", "Super-Boethius, first form"),
        valid!("SB2", "(A -> ~B) -> ((A -> B) -> C)", "Super-Boethius, second form"),
        // Super-bot forms
        valid!("S_BOT_A1", "(A -> ~A) -> bot", "Super-Bot-Aristotle, first form"),
        valid!("S_BOT_A2", "(~A -> A) -> bot", "Super-Bot-Aristotle, second form"),
        valid!(
            "S_BOT_B1",
            "(A -> B) -> ((A -> ~B) -> bot)",
            "Super-Bot-Boethius, first form"
        ),
        valid!(
            "S_BOT_B2",
            "(A -> ~B) -> ((A -> B) -> bot)",
            "Super-Bot-Boethius, second form"
        ),
        // Abelard's thesis and Aristotle's second thesis
        valid!("ABELARD", "~((A -> B) & (A -> ~B))", "Abelard's thesis"),
        valid!("ARISTOTLE2", "~((A -> B) & (~A -> B))", "Aristotle's second thesis"),
        valid!("SUPER_ABELARD", "((A -> B) & (A -> ~B)) -> C", "Super-Abelard"),
        valid!(
            "SUPER_ARISTOTLE2",
            "((A -> B) & (~A -> B)) -> C",
            "Super-Aristotle, second thesis"
        ),
        valid!(
            "S_BOT_ABELARD",
            "((A -> B) & (A -> ~B)) -> bot",
            "Super-Bot-Abelard"
        ),
        valid!(
            "S_BOT_ARISTOTLE2",
            "((A -> B) & (~A -> B)) -> bot",
            "Super-Bot-Aristotle, second thesis"
        ),
        // Conditionalized variants of the second-thesis forms
        valid!(
            "COND_SUPER_ARISTOTLE2",
            "(A -> B) -> ((~A -> B) -> C)",
            "conditionalized Super-Aristotle 2nd"
        ),
        valid!(
            "COND_S_BOT_ARISTOTLE2",
            "(A -> B) -> ((~A -> B) -> bot)",
            "conditionalized Super-Bot-Aristotle 2nd"
        ),
        // Explosion family
        valid!("ECQ_AND", "(A & ~A) -> B", "ex contradictione quodlibet, conjunctive form"),
        valid!("ECQ_ARROW", "A -> (~A -> B)", "ex contradictione quodlibet, arrow form"),
        valid!("ECF_AND", "(A & ~A) -> bot", "ex contradictione falsum, conjunctive form"),
        valid!("ECF_ARROW", "A -> (~A -> bot)", "ex contradictione falsum, arrow form"),
        valid!("EFQ", "bot -> A", "ex falso quodlibet"),
        // Auxiliary axioms used by the proof corpus
        valid!("WEAKENING", "A -> (B -> A)", "Weakening"),
        valid!("PEIRCE", "((A -> B) -> A) -> A", "Peirce's law"),
        valid!("DNE", "~~A -> A", "double negation elimination"),
        valid!("DNI", "A -> ~~A", "double negation introduction"),
        valid!(
            "EXPORTATION",
            "((A & B) -> C) -> (A -> (B -> C))",
            "Exportation"
        ),
        valid!("A_TO_TOP", "A -> top", "everything implies top"),
        valid!("NEG_TOP_TO_A", "~top -> A", "negated top implies everything"),
        valid!("A_TO_NEG_BOT", "A -> ~bot", "everything implies not-bot"),
        valid!("NEG_BOT", "~bot", "not-bot as an axiom"),
        valid!("CONJ_ELIM1", "(A & B) -> A", "conjunction elimination, left"),
        valid!("CONJ_ELIM2", "(A & B) -> B", "conjunction elimination, right"),
        valid!("DISJ_INTRO1", "A -> (A | B)", "disjunction introduction, left"),
        valid!("DISJ_INTRO2", "B -> (A | B)", "disjunction introduction, right"),
        // Rules
        Principle {
            id: "MP",
            kind: PrincipleKind::Rule {
                premises: vec![sch("A"), sch("A -> B")],
                conclusion: sch("B"),
            },
            source: "modus ponens",
        },
        Principle {
            id: "SUB",
            kind: PrincipleKind::Substitution,
            source: "uniform substitution",
        },
        Principle {
            id: "ADJ",
            kind: PrincipleKind::Rule {
                premises: vec![sch("A"), sch("B")],
                conclusion: sch("A & B"),
            },
            source: "rule of Adjunction",
        },
        Principle {
            id: "TRANS",
            kind: PrincipleKind::Rule {
                premises: vec![sch("A -> B"), sch("B -> C")],
                conclusion: sch("A -> C"),
            },
            source: "rule of Transitivity",
        },
        Principle {
            id: "CONTRA",
            kind: PrincipleKind::Rule {
                premises: vec![sch("A -> B")],
                conclusion: sch("~B -> ~A"),
            },
            source: "rule of Contraposition",
        },
    ]
});

/// The complete, stable principle catalog.
pub fn catalog() -> &'static [Principle] {
    &CATALOG
}

pub fn find(id: &str) -> Option<&'static Principle> {
    CATALOG.iter().find(|p| p.id == id)
}

/// Per-principle outcome. `NotApplicable` marks principles that mention a
/// connective or constant the matrix does not interpret.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictKind {
    Holds,
    Fails,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub verdict: VerdictKind,
    /// Refuting assignment (for failed validity / preservation) rendered
    /// with display labels.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<BTreeMap<String, String>>,
    /// Witness assignment (for failed unsatisfiability requirements).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<BTreeMap<String, String>>,
    /// For rules: whether the rule is also admissible in the weaker, global
    /// sense (valid premises yield a valid conclusion).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub admissible: Option<bool>,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.verdict == VerdictKind::Holds
    }

    fn of(kind: VerdictKind) -> Verdict {
        Verdict {
            verdict: kind,
            counterexample: None,
            witness: None,
            admissible: None,
        }
    }
}

/// Check one principle against a matrix.
pub fn check_principle(m: &MatrixLogic, p: &Principle) -> Verdict {
    if !p.required_connectives().subset_of(&m.signature()) {
        return Verdict::of(VerdictKind::NotApplicable);
    }
    // connectives are present, so evaluation cannot fail
    match &p.kind {
        PrincipleKind::Valid(s) => match schema_valid(m, s).expect("signature checked") {
            Ok(()) => Verdict::of(VerdictKind::Holds),
            Err(cex) => Verdict {
                counterexample: Some(cex.display_assignment(m)),
                ..Verdict::of(VerdictKind::Fails)
            },
        },
        PrincipleKind::Unsatisfiable(ss) => {
            for s in ss {
                if let Some(w) = schema_satisfiable(m, s).expect("signature checked") {
                    return Verdict {
                        witness: Some(w.display_assignment(m)),
                        ..Verdict::of(VerdictKind::Fails)
                    };
                }
            }
            Verdict::of(VerdictKind::Holds)
        }
        PrincipleKind::CoUnsatisfiable(ss) => {
            match schemata_co_satisfiable(m, ss).expect("signature checked") {
                Some(w) => Verdict {
                    witness: Some(w.display_assignment(m)),
                    ..Verdict::of(VerdictKind::Fails)
                },
                None => Verdict::of(VerdictKind::Holds),
            }
        }
        PrincipleKind::Rule {
            premises,
            conclusion,
        } => {
            let preserving =
                rule_preserves_designation(m, premises, conclusion).expect("signature checked");
            // global admissibility: valid premises force a valid conclusion
            let premises_all_valid = premises
                .iter()
                .all(|s| schema_valid(m, s).expect("signature checked").is_ok());
            let admissible = if premises_all_valid {
                schema_valid(m, conclusion)
                    .expect("signature checked")
                    .is_ok()
            } else {
                true
            };
            match preserving {
                Ok(()) => Verdict {
                    admissible: Some(admissible),
                    ..Verdict::of(VerdictKind::Holds)
                },
                Err(cex) => Verdict {
                    counterexample: Some(cex.display_assignment(m)),
                    admissible: Some(admissible),
                    ..Verdict::of(VerdictKind::Fails)
                },
            }
        }
        PrincipleKind::Substitution => Verdict::of(VerdictKind::Holds),
    }
}

/// Full classification report for a matrix: one verdict per catalog entry
/// plus the derived connexivity labels.
#[derive(Debug, Clone, Serialize)]
pub struct ConnexivityReport {
    pub logic: String,
    pub verdicts: BTreeMap<String, Verdict>,
    pub weakly_connexive: bool,
    pub strongly_connexive: bool,
    pub super_bot_connexive: bool,
    /// Kapsner-strong style label: super-bot principles hold while the
    /// plain Aristotle/Boethius theses do not.
    pub super_bot_without_at_bt: bool,
    pub superconnexive: bool,
}

fn all_hold(verdicts: &BTreeMap<String, Verdict>, ids: &[&str]) -> bool {
    ids.iter().all(|id| verdicts[*id].holds())
}

pub fn classify(m: &MatrixLogic) -> ConnexivityReport {
    let verdicts: BTreeMap<String, Verdict> = catalog()
        .iter()
        .map(|p| (p.id.to_string(), check_principle(m, p)))
        .collect();
    let weakly = all_hold(&verdicts, &["AT1", "AT2", "BT1", "BT2"]);
    let strongly = weakly && all_hold(&verdicts, &["UNSAT1", "UNSAT2"]);
    let super_bot = all_hold(&verdicts, &["S_BOT_A1", "S_BOT_A2", "S_BOT_B1", "S_BOT_B2"]);
    let superconnexive = all_hold(&verdicts, &["SA1", "SA2", "SB1", "SB2"]);
    ConnexivityReport {
        logic: m.name.clone(),
        verdicts,
        super_bot_without_at_bt: super_bot && !weakly,
        weakly_connexive: weakly,
        strongly_connexive: strongly,
        super_bot_connexive: super_bot,
        superconnexive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{builtin, relabel};

    #[test]
    fn catalog_is_well_formed() {
        let mut seen = std::collections::BTreeSet::new();
        for p in catalog() {
            assert!(seen.insert(p.id), "duplicate id {}", p.id);
        }
        // exactly two Aristotle and two Boethius validity schemata
        assert!(find("AT1").is_some() && find("AT2").is_some());
        assert!(find("BT1").is_some() && find("BT2").is_some());
        assert_eq!(
            catalog()
                .iter()
                .filter(|p| p.id.starts_with("AT") || p.id.starts_with("BT"))
                .count(),
            4
        );
    }

    #[test]
    fn catalog_payload_spot_checks() {
        let sbotb1 = find("S_BOT_B1").unwrap();
        match &sbotb1.kind {
            PrincipleKind::Valid(s) => {
                assert_eq!(s.to_string(), "(A -> B) -> ((A -> ~B) -> bot)")
            }
            _ => panic!("wrong kind"),
        }
        match &find("UNSAT3").unwrap().kind {
            PrincipleKind::CoUnsatisfiable(ss) => {
                assert_eq!(ss.len(), 2);
                assert_eq!(ss[0].to_string(), "A -> B");
                assert_eq!(ss[1].to_string(), "~A -> B");
            }
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn check_principle_examples() {
        let cc1 = builtin("cc1_bot").unwrap();
        assert!(check_principle(&cc1, find("AT1").unwrap()).holds());
        let ecf = check_principle(&cc1, find("ECF_ARROW").unwrap());
        assert_eq!(ecf.verdict, VerdictKind::Fails);
        assert!(ecf.counterexample.is_some());

        let ecf3 = builtin("ecf_three").unwrap();
        assert!(check_principle(&ecf3, find("ECF_ARROW").unwrap()).holds());
    }

    #[test]
    fn classify_cc1() {
        let cc1 = builtin("cc1_bot").unwrap();
        let r = classify(&cc1);
        assert!(r.weakly_connexive);
        assert!(r.strongly_connexive);
        assert!(r.super_bot_connexive);
        assert!(!r.superconnexive);
        assert_eq!(r.verdicts["SA1"].verdict, VerdictKind::Fails);
        assert!(!r.super_bot_without_at_bt);
    }

    #[test]
    fn classify_classical() {
        let c = builtin("classical").unwrap();
        let r = classify(&c);
        assert!(!r.weakly_connexive);
        assert_eq!(r.verdicts["AT1"].verdict, VerdictKind::Fails);
        // label implication
        assert!(!r.strongly_connexive);
    }

    #[test]
    fn classify_classical_bicond() {
        let b = builtin("classical_bicond").unwrap();
        let r = classify(&b);
        assert!(r.verdicts["S_BOT_A1"].holds());
    }

    #[test]
    fn missing_connectives_are_not_applicable() {
        let sa2 = builtin("sa2_three").unwrap();
        let r = classify(&sa2);
        assert_eq!(r.verdicts["ABELARD"].verdict, VerdictKind::NotApplicable);
        assert_eq!(r.verdicts["ECF_AND"].verdict, VerdictKind::NotApplicable);
        assert_eq!(r.verdicts["A_TO_TOP"].verdict, VerdictKind::NotApplicable);
        // every catalog id appears exactly once in the report
        assert_eq!(r.verdicts.len(), catalog().len());
    }

    #[test]
    fn classify_invariant_under_relabeling() {
        let cc1 = builtin("cc1_bot").unwrap();
        let shuffled = relabel(&cc1, &[2, 0, 3, 1]);
        let a = classify(&cc1);
        let b = classify(&shuffled);
        for p in catalog() {
            assert_eq!(
                a.verdicts[p.id].verdict, b.verdicts[p.id].verdict,
                "{}",
                p.id
            );
        }
        assert_eq!(a.strongly_connexive, b.strongly_connexive);
    }

    #[test]
    fn sub_rule_always_holds() {
        for name in crate::matrix::BUILTIN_NAMES {
            let m = builtin(name).unwrap();
            assert!(check_principle(&m, find("SUB").unwrap()).holds());
        }
    }

    #[test]
    fn report_serializes_to_schema() {
        let cc1 = builtin("cc1_bot").unwrap();
        let r = classify(&cc1);
        let json = serde_json::to_value(&r).unwrap();
        let v = &json["verdicts"]["SA1"];
        assert_eq!(v["verdict"], "fails");
        assert!(v["counterexample"].is_object());
        assert_eq!(json["verdicts"]["AT1"]["verdict"], "holds");
        let sa2 = builtin("sa2_three").unwrap();
        let j2 = serde_json::to_value(classify(&sa2)).unwrap();
        assert_eq!(j2["verdicts"]["ABELARD"]["verdict"], "not-applicable");
    }
}
