//! Acceptance gate: the ten headline results, each reported on its own
//! line. Run with `--nocapture` to see the lines on success.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};

use connexive::formula::{Connectives, Formula, Substitution};
use connexive::hilbert;
use connexive::matrix::{self, builtin, check_bot_definability, is_isomorphic, MatrixLogic};
use connexive::parser::{parse_formula, parse_schema};
use connexive::principles::{check_principle, classify, find, PrincipleKind, VerdictKind};
use connexive::search::{self, canonicalize, SearchSpec};
use connexive::semantics::{
    entails, eval, for_each_assignment, rule_preserves_designation, schema_satisfiable,
    schema_valid, schemata_co_satisfiable, Assignment,
};
use rand::prelude::*;

fn holds(m: &MatrixLogic, id: &str) -> bool {
    check_principle(m, find(id).expect(id)).holds()
}

fn fails(m: &MatrixLogic, id: &str) -> bool {
    check_principle(m, find(id).expect(id)).verdict == VerdictKind::Fails
}

// 1. CC1 classification: strongly connexive, super-bot connexive, not
//    superconnexive.
fn criterion_1() {
    let cc1 = builtin("cc1_bot").unwrap();
    let report = classify(&cc1);
    for id in ["AT1", "AT2", "BT1", "BT2", "UNSAT1", "UNSAT2"] {
        assert!(holds(&cc1, id), "{id} should hold in cc1_bot");
    }
    for id in ["S_BOT_A1", "S_BOT_A2", "S_BOT_B1", "S_BOT_B2"] {
        assert!(holds(&cc1, id), "{id} should hold in cc1_bot");
    }
    assert!(report.weakly_connexive);
    assert!(report.strongly_connexive);
    assert!(report.super_bot_connexive);
    assert!(fails(&cc1, "SA1"), "SA1 should fail in cc1_bot");
    assert!(!report.superconnexive);
}

// 2. CC1 spot values: (p→q)→(q→p) at p=3,q=1 is 3; ¬(p→p) is constantly 4
//    and coincides with the declared ⊥.
fn criterion_2() {
    let cc1 = builtin("cc1_bot").unwrap();
    let f = parse_formula("(p -> q) -> (q -> p)").unwrap();
    let a: Assignment = [
        ("p".to_string(), cc1.value_of_label("3").unwrap()),
        ("q".to_string(), cc1.value_of_label("1").unwrap()),
    ]
    .into_iter()
    .collect();
    let v = eval(&cc1, &f, &a).unwrap();
    assert_eq!(cc1.label(v), "3");
    assert!(!cc1.is_designated(v));

    let report = check_bot_definability(&cc1).unwrap();
    assert_eq!(report.constant.as_deref(), Some("4"));
    assert_eq!(report.equals_bot, Some(true));
    assert_eq!(cc1.label(eval(&cc1, &Formula::Bottom, &a).unwrap()), "4");
}

// 3. sa2_three: SA2 valid, DNE invalid with minimal counterexample p=0,
//    MP designation-preserving.
fn criterion_3() {
    let m = builtin("sa2_three").unwrap();
    assert!(holds(&m, "SA2"));
    let dne = parse_formula("~~p -> p").unwrap();
    let cex = schema_valid(&m, &dne).unwrap().unwrap_err();
    assert_eq!(
        cex.display_assignment(&m),
        BTreeMap::from([("p".to_string(), "0".to_string())])
    );
    let mp = match &find("MP").unwrap().kind {
        PrincipleKind::Rule {
            premises,
            conclusion,
        } => (premises.clone(), conclusion.clone()),
        _ => panic!("MP is a rule"),
    };
    assert!(rule_preserves_designation(&m, &mp.0, &mp.1)
        .unwrap()
        .is_ok());
}

// 4. Explosion split: cc1_bot has ECF∧ but not ECF→; ecf_three has both
//    together with the four super-bot principles.
fn criterion_4() {
    let cc1 = builtin("cc1_bot").unwrap();
    assert!(holds(&cc1, "ECF_AND"));
    assert!(fails(&cc1, "ECF_ARROW"));
    let ecf = builtin("ecf_three").unwrap();
    for id in ["ECF_ARROW", "ECF_AND", "S_BOT_A1", "S_BOT_A2", "S_BOT_B1", "S_BOT_B2"] {
        assert!(holds(&ecf, id), "{id} should hold in ecf_three");
    }
}

// 5. Proof corpus replay: every bundled document verifies and the
//    single-line justification mutation sweep rejects every mutant.
fn criterion_5() {
    let docs = hilbert::corpus();
    assert_eq!(docs.len(), 27);
    let summary = hilbert::replay_all(&docs).unwrap();
    assert!(summary.all_accepted(), "replay: {:?}", summary.results);
    let mut mutants = 0usize;
    for d in &docs {
        for m in hilbert::justification_mutants(d) {
            assert!(
                !hilbert::verify_proof(&m).accepted,
                "mutant '{}' verified",
                m.name
            );
            mutants += 1;
        }
    }
    assert!(mutants > docs.len(), "sweep generated {mutants} mutants");
}

// 6. Bridge derivations from the super-bot principles to the classical
//    connexive theses verify, and their lines are semantically good in
//    cc1_bot (¬⊥ valid, Contraposition designation-preserving there).
fn criterion_6() {
    let cc1 = builtin("cc1_bot").unwrap();
    assert!(holds(&cc1, "NEG_BOT"));
    assert!(holds(&cc1, "CONTRA"));
    let docs = hilbert::corpus();
    let axiom_only = [
        "sbota1_to_at1",
        "sbota2_to_at2",
        "sbabelard_to_abelard",
        "sba2_to_aristotle2",
    ];
    let with_hypothesis = ["sbotb1_to_bt1_rule", "sbotb2_to_bt2_rule"];
    for name in axiom_only.iter().chain(&with_hypothesis) {
        let d = docs.iter().find(|d| d.name == *name).unwrap();
        assert!(hilbert::verify_proof(d).accepted, "{name} rejected");
        let hyps = d.system.assumptions.clone().unwrap_or_default();
        for (i, line) in d.lines.iter().enumerate() {
            assert!(
                entails(&cc1, &hyps, &line.schema).unwrap(),
                "{name} line {} not semantically good in cc1_bot",
                i + 1
            );
        }
    }
    // the axiom-only proofs use no hypotheses: every line is outright valid
    for name in axiom_only {
        let d = docs.iter().find(|d| d.name == name).unwrap();
        for line in &d.lines {
            assert!(schema_valid(&cc1, &line.schema).unwrap().is_ok());
        }
    }
    // the rule-form documents carry exactly one hypothesis line
    for name in with_hypothesis {
        let d = docs.iter().find(|d| d.name == name).unwrap();
        assert!(d.system.hypotheses_allowed);
        assert_eq!(
            d.lines
                .iter()
                .filter(|l| matches!(l.justification, hilbert::Justification::Hypothesis))
                .count(),
            1
        );
    }
}

// 7. Semantic meta-theorem: with ⊥ undesignated and MP designation-
//    preserving, a valid S⊥A1 forces A→¬A unsatisfiable (and the S⊥A2 /
//    S⊥B analogues). Exhaustive at two values, sampled at three.
fn criterion_7() {
    let mp = match &find("MP").unwrap().kind {
        PrincipleKind::Rule {
            premises,
            conclusion,
        } => (premises.clone(), conclusion.clone()),
        _ => unreachable!(),
    };
    let a_to_na = parse_schema("A -> ~A").unwrap();
    let na_to_a = parse_schema("~A -> A").unwrap();
    let pair_b = vec![parse_schema("A -> B").unwrap(), parse_schema("A -> ~B").unwrap()];
    let check = |m: &MatrixLogic, hits: &mut [u32; 4]| {
        if rule_preserves_designation(m, &mp.0, &mp.1).unwrap().is_err() {
            return;
        }
        let cases: [(&str, bool); 4] = [
            ("S_BOT_A1", schema_satisfiable(m, &a_to_na).unwrap().is_none()),
            ("S_BOT_A2", schema_satisfiable(m, &na_to_a).unwrap().is_none()),
            ("S_BOT_B1", schemata_co_satisfiable(m, &pair_b).unwrap().is_none()),
            ("S_BOT_B2", schemata_co_satisfiable(m, &pair_b).unwrap().is_none()),
        ];
        for (i, (id, unsat)) in cases.iter().enumerate() {
            if holds(m, id) {
                hits[i] += 1;
                assert!(unsat, "{id} valid but target satisfiable in {}", m.name);
            }
        }
    };

    // exhaustive over every 2-valued {neg, imp, bot} matrix
    let mut hits = [0u32; 4];
    for designated in [vec![true, false], vec![false, true]] {
        let bot = designated.iter().position(|&d| !d).unwrap();
        for neg_code in 0..4usize {
            for imp_code in 0..16usize {
                let m = MatrixLogic {
                    name: "meta2".into(),
                    values: vec!["0".into(), "1".into()],
                    designated: designated.clone(),
                    neg: Some(vec![neg_code & 1, (neg_code >> 1) & 1]),
                    and: None,
                    or: None,
                    imp: Some(vec![
                        vec![imp_code & 1, (imp_code >> 1) & 1],
                        vec![(imp_code >> 2) & 1, (imp_code >> 3) & 1],
                    ]),
                    bot: Some(bot),
                    top: None,
                };
                check(&m, &mut hits);
            }
        }
    }
    assert!(hits.iter().all(|&h| h > 0), "premises never met: {hits:?}");

    // sampled at three values, plus the bundled three-valued matrices
    let mut rng = common::rng(0x5b07);
    let sig = Connectives {
        neg: true,
        imp: true,
        bot: true,
        ..Connectives::default()
    };
    let mut hits3 = [0u32; 4];
    for i in 0..10_000 {
        let m = common::random_matrix(&mut rng, 3, sig, &format!("meta3-{i}"));
        check(&m, &mut hits3);
    }
    check(&builtin("ecf_three").unwrap(), &mut hits3);
    assert!(hits3.iter().all(|&h| h > 0), "3-valued premises never met");
}

// 8. Search reproductions: the biconditional-arrow classical matrix is the
//    shape S⊥A1 singles out at two values; adding EFQ + MP-preservation
//    empties the result set. Prune on/off agree exactly.
fn criterion_8() {
    let sig = Connectives {
        neg: true,
        imp: true,
        bot: true,
        ..Connectives::default()
    };
    let mut spec = SearchSpec::new(2, sig);
    spec.require_valid = vec!["S_BOT_A1".into()];
    spec.dedupe_isomorphic = true;
    let found = search::search(&spec).unwrap();
    assert!(!found.matrices.is_empty());

    // the classical matrix with the arrow read as the biconditional,
    // restricted to the searched signature
    let mut bicond = builtin("classical_bicond").unwrap();
    bicond.and = None;
    bicond.or = None;
    bicond.top = None;
    let mut target = canonicalize(&bicond);
    target.name = "candidate".into();
    assert!(
        found.matrices.contains(&target),
        "biconditional-arrow matrix not found"
    );
    assert!(found
        .matrices
        .iter()
        .any(|m| is_isomorphic(m, &bicond).unwrap().is_some()));

    let mut no_prune = spec.clone();
    no_prune.prune = false;
    assert_eq!(search::search(&no_prune).unwrap().matrices, found.matrices);

    let mut trivial = spec.clone();
    trivial.require_valid.push("EFQ".into());
    trivial.require_rules_preserving = vec!["MP".into()];
    let empty = search::search(&trivial).unwrap();
    assert!(empty.matrices.is_empty(), "EFQ + S⊥A1 + MP should be empty");
    let mut trivial_np = trivial.clone();
    trivial_np.prune = false;
    assert_eq!(search::search(&trivial_np).unwrap().matrices, empty.matrices);
}

// 9. Oracle equivalence: metavariable-assignment validity agrees with
//    brute-force substitution-instance validity.
fn criterion_9() {
    let mut rng = common::rng(0x0c1e);
    // instance pool: every formula of depth ≤ 2 over two atoms with ~, ->
    let mut pool: Vec<Formula> = vec![parse_formula("p").unwrap(), parse_formula("q").unwrap()];
    for _ in 0..2 {
        let mut next = pool.clone();
        for f in &pool {
            next.push(Formula::Neg(Box::new(f.clone())));
        }
        for f in &pool {
            for g in &pool {
                next.push(Formula::Imp(Box::new(f.clone()), Box::new(g.clone())));
            }
        }
        next.sort();
        next.dedup();
        pool = next;
    }
    let atoms = ["p".to_string(), "q".to_string()];

    let sig = Connectives {
        neg: true,
        imp: true,
        bot: true,
        ..Connectives::default()
    };
    let leaves = common::metavar_leaves(&["A", "B"]);
    let mut disagreements = 0;
    for i in 0..500 {
        let n = if rng.gen_bool(0.5) { 2 } else { 3 };
        let m = common::random_matrix(&mut rng, n, sig, &format!("oracle-{i}"));
        let schema = common::random_formula(&mut rng, &leaves, sig, 3);

        let fast = schema_valid(&m, &schema).unwrap().is_ok();

        // brute force: every substitution instance must be valid as a
        // ground formula
        let metas: Vec<String> = schema.metavars().into_iter().collect();
        let mut instances_valid = true;
        let mut picks = vec![0usize; metas.len()];
        'outer: loop {
            let sub: Substitution = metas
                .iter()
                .zip(&picks)
                .map(|(k, &i)| (k.clone(), pool[i].clone()))
                .collect();
            let inst = connexive::formula::substitute(&schema, &sub).unwrap();
            let refuted = for_each_assignment(&atoms, n, |a| {
                !m.is_designated(eval(&m, &inst, a).unwrap())
            })
            .is_some();
            if refuted {
                instances_valid = false;
                break;
            }
            let mut k = picks.len();
            loop {
                if k == 0 {
                    break 'outer;
                }
                k -= 1;
                picks[k] += 1;
                if picks[k] < pool.len() {
                    break;
                }
                picks[k] = 0;
            }
        }
        if fast != instances_valid {
            disagreements += 1;
        }
    }
    assert_eq!(disagreements, 0);
}

// 10. Grammar and serialization round trips.
fn criterion_10() {
    let mut rng = common::rng(0x707a);
    let sig = Connectives {
        neg: true,
        and: true,
        or: true,
        imp: true,
        bot: true,
        top: true,
    };
    let leaves = [
        common::atom_leaves(&["p", "q", "r"]),
        common::metavar_leaves(&["A", "B"]),
    ]
    .concat();
    for _ in 0..1000 {
        let f = common::random_formula(&mut rng, &leaves, sig, 8);
        let text = f.to_string();
        assert_eq!(parse_schema(&text).unwrap(), f, "round trip of '{text}'");
    }
    for name in matrix::BUILTIN_NAMES {
        let m = builtin(name).unwrap();
        let text = matrix::save_to_string(&m);
        assert_eq!(matrix::load_logic_from_str(&text).unwrap(), m);
    }
    // eval is insensitive to a serialization round trip
    let cc1 = builtin("cc1_bot").unwrap();
    let reloaded = matrix::load_logic_from_str(&matrix::save_to_string(&cc1)).unwrap();
    let f = parse_formula("~(p -> ~p)").unwrap();
    for v in 0..4 {
        let a: Assignment = [("p".to_string(), v)].into_iter().collect();
        assert_eq!(
            eval(&cc1, &f, &a).unwrap(),
            eval(&reloaded, &f, &a).unwrap()
        );
    }
}

#[test]
fn acceptance_gate() {
    let criteria: Vec<(&str, fn())> = vec![
        ("1 cc1 classification", criterion_1),
        ("2 cc1 spot values", criterion_2),
        ("3 sa2_three results", criterion_3),
        ("4 explosion split", criterion_4),
        ("5 corpus replay + mutation sweep", criterion_5),
        ("6 bridge proofs", criterion_6),
        ("7 semantic meta-theorem", criterion_7),
        ("8 search reproductions", criterion_8),
        ("9 oracle equivalence", criterion_9),
        ("10 round trips", criterion_10),
    ];
    let mut failures = Vec::new();
    for (name, f) in criteria {
        match catch_unwind(AssertUnwindSafe(f)) {
            Ok(()) => println!("acceptance {name}: PASS"),
            Err(_) => {
                println!("acceptance {name}: FAIL");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
