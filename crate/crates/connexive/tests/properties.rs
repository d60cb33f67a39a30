//! Property-based checks for the module-level invariants: grammar round
//! trips, substitution algebra, the negation translation, evaluation under
//! substitution, isomorphism invariance and canonical forms.

mod common;

use std::collections::BTreeSet;

use connexive::formula::{
    match_schema, substitute, substitute_partial, translate_intuitionistic_negation, Connectives,
    Formula, NegationTranslation, Substitution,
};
use connexive::matrix::{builtin, is_isomorphic, relabel, MatrixLogic};
use connexive::parser::parse_schema;
use connexive::principles::classify;
use connexive::search::canonicalize;
use connexive::semantics::{eval, for_each_assignment, Assignment};
use proptest::prelude::*;
use rand::Rng as _;

fn full_sig() -> Connectives {
    Connectives {
        neg: true,
        and: true,
        or: true,
        imp: true,
        bot: true,
        top: true,
    }
}

// proptest strategy for schema trees of depth <= 8
fn arb_formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        prop_oneof![Just("p"), Just("q"), Just("r")].prop_map(|n| Formula::Atom(n.to_string())),
        prop_oneof![Just("A"), Just("B")].prop_map(|n| Formula::Metavar(n.to_string())),
        Just(Formula::Bottom),
        Just(Formula::Top),
    ];
    leaf.prop_recursive(8, 128, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|f| Formula::Neg(Box::new(f))),
            (inner.clone(), inner.clone())
                .prop_map(|(l, r)| Formula::And(Box::new(l), Box::new(r))),
            (inner.clone(), inner.clone())
                .prop_map(|(l, r)| Formula::Or(Box::new(l), Box::new(r))),
            (inner.clone(), inner).prop_map(|(l, r)| Formula::Imp(Box::new(l), Box::new(r))),
        ]
    })
}

proptest! {
    #[test]
    fn parse_render_round_trip(f in arb_formula()) {
        let text = f.to_string();
        prop_assert_eq!(parse_schema(&text).unwrap(), f);
    }

    #[test]
    fn all_mode_translation_eliminates_negation(f in arb_formula()) {
        let t = translate_intuitionistic_negation(&f, NegationTranslation::All);
        prop_assert!(!contains_neg(&t));
        // translating again changes nothing: there is no negation left
        prop_assert_eq!(translate_intuitionistic_negation(&t, NegationTranslation::All), t);
    }
}

fn contains_neg(f: &Formula) -> bool {
    match f {
        Formula::Neg(_) => true,
        Formula::Atom(_) | Formula::Metavar(_) | Formula::Bottom | Formula::Top => false,
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => {
            contains_neg(l) || contains_neg(r)
        }
    }
}

#[test]
fn outer_mode_translation_rewrites_only_the_root() {
    let f = parse_schema("~(A -> ~A)").unwrap();
    let t = translate_intuitionistic_negation(&f, NegationTranslation::Outer);
    assert_eq!(t, parse_schema("(A -> ~A) -> bot").unwrap());
    // non-negated root untouched
    let g = parse_schema("A -> ~B").unwrap();
    assert_eq!(
        translate_intuitionistic_negation(&g, NegationTranslation::Outer),
        g
    );
}

#[test]
fn substitution_composition() {
    let mut rng = common::rng(0xc0de);
    let outer_leaves = common::metavar_leaves(&["A", "B"]);
    let mid_leaves = [common::metavar_leaves(&["C", "D"]), common::atom_leaves(&["p"])].concat();
    let inner_leaves = common::atom_leaves(&["p", "q"]);
    let sig = full_sig();
    for _ in 0..300 {
        let s = common::random_formula(&mut rng, &outer_leaves, sig, 4);
        let sigma: Substitution = ["A", "B"]
            .iter()
            .map(|k| {
                (
                    k.to_string(),
                    common::random_formula(&mut rng, &mid_leaves, sig, 3),
                )
            })
            .collect();
        let tau: Substitution = ["C", "D"]
            .iter()
            .map(|k| {
                (
                    k.to_string(),
                    common::random_formula(&mut rng, &inner_leaves, sig, 3),
                )
            })
            .collect();
        let lhs = substitute_partial(&substitute(&s, &sigma).unwrap(), &tau);
        let rhs = substitute(&s, &sigma.compose(&tau)).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn match_substitute_adjunction() {
    let mut rng = common::rng(0xadf0);
    let schema_leaves = common::metavar_leaves(&["A", "B"]);
    let image_leaves = common::atom_leaves(&["p", "q"]);
    let sig = full_sig();
    for _ in 0..300 {
        let s = common::random_formula(&mut rng, &schema_leaves, sig, 4);
        let sigma: Substitution = ["A", "B"]
            .iter()
            .map(|k| {
                (
                    k.to_string(),
                    common::random_formula(&mut rng, &image_leaves, sig, 3),
                )
            })
            .collect();
        let f = substitute(&s, &sigma).unwrap();
        let found = match_schema(&s, &f).expect("instance must match its schema");
        assert_eq!(substitute(&s, &found).unwrap(), f);
    }
}

#[test]
fn substitution_lemma_for_evaluation() {
    // eval(substitute(s, sigma)) under a equals eval(s) under the derived
    // assignment X -> eval(sigma(X), a)
    let mut rng = common::rng(0x11aa);
    let sig = full_sig();
    let schema_leaves = common::metavar_leaves(&["A", "B"]);
    let image_leaves = common::atom_leaves(&["p", "q"]);
    for i in 0..200 {
        let n = if rng.gen_bool(0.5) { 2 } else { 4 };
        let m = common::random_matrix(&mut rng, n, sig, &format!("sublemma-{i}"));
        let s = common::random_formula(&mut rng, &schema_leaves, sig, 3);
        let sigma: Substitution = ["A", "B"]
            .iter()
            .map(|k| {
                (
                    k.to_string(),
                    common::random_formula(&mut rng, &image_leaves, sig, 2),
                )
            })
            .collect();
        let inst = substitute(&s, &sigma).unwrap();
        let atoms = vec!["p".to_string(), "q".to_string()];
        for_each_assignment(&atoms, n, |a| {
            let derived: Assignment = sigma
                .iter()
                .map(|(k, image)| (k.clone(), eval(&m, image, a).unwrap()))
                .collect();
            assert_eq!(
                eval(&m, &inst, a).unwrap(),
                eval(&m, &s, &derived).unwrap()
            );
            false
        });
    }
}

#[test]
fn classification_is_isomorphism_invariant() {
    let mut rng = common::rng(0x150a);
    for name in ["cc1_bot", "sa2_three", "ecf_three", "classical"] {
        let m = builtin(name).unwrap();
        let n = m.value_count();
        for _ in 0..10 {
            let perm = common::random_permutation(&mut rng, n);
            let r = relabel(&m, &perm);
            let a = classify(&m);
            let b = classify(&r);
            assert_eq!(a.weakly_connexive, b.weakly_connexive);
            assert_eq!(a.strongly_connexive, b.strongly_connexive);
            assert_eq!(a.superconnexive, b.superconnexive);
            assert_eq!(a.super_bot_connexive, b.super_bot_connexive);
            for (id, v) in &a.verdicts {
                assert_eq!(v.verdict, b.verdicts[id].verdict, "{name}/{id}");
            }
        }
    }
}

#[test]
fn canonicalize_idempotent_and_orbit_correct() {
    let mut rng = common::rng(0x0b17);
    let sig = Connectives {
        neg: true,
        imp: true,
        ..Connectives::default()
    };
    // sampled at three values: same orbit iff same canonical form
    for i in 0..150 {
        let m = common::random_matrix(&mut rng, 3, sig, &format!("orbit-{i}"));
        let c = canonicalize(&m);
        assert_eq!(canonicalize(&c), c, "idempotence");
        let r = relabel(&m, &common::random_permutation(&mut rng, 3));
        assert_eq!(canonicalize(&r), c, "orbit collapse");
        let other = common::random_matrix(&mut rng, 3, sig, &format!("other-{i}"));
        let iso = is_isomorphic(&m, &other).unwrap().is_some();
        assert_eq!(canonicalize(&other) == c, iso, "orbit separation");
    }
    // exhaustive at two values over {neg, imp}
    let mut all: Vec<MatrixLogic> = Vec::new();
    for designated in [vec![true, false], vec![false, true]] {
        for neg_code in 0..4usize {
            for imp_code in 0..16usize {
                all.push(MatrixLogic {
                    name: "two".into(),
                    values: vec!["0".into(), "1".into()],
                    designated: designated.clone(),
                    neg: Some(vec![neg_code & 1, (neg_code >> 1) & 1]),
                    and: None,
                    or: None,
                    imp: Some(vec![
                        vec![imp_code & 1, (imp_code >> 1) & 1],
                        vec![(imp_code >> 2) & 1, (imp_code >> 3) & 1],
                    ]),
                    bot: None,
                    top: None,
                });
            }
        }
    }
    let canons: Vec<MatrixLogic> = all.iter().map(canonicalize).collect();
    for i in 0..all.len() {
        for j in (i + 1)..all.len() {
            let iso = is_isomorphic(&all[i], &all[j]).unwrap().is_some();
            assert_eq!(canons[i] == canons[j], iso, "pair ({i},{j})");
        }
    }
    // sanity: the orbit count strictly shrinks the raw count
    let distinct: BTreeSet<Vec<String>> = canons
        .iter()
        .map(|c| {
            vec![
                format!("{:?}", c.designated),
                format!("{:?}", c.neg),
                format!("{:?}", c.imp),
            ]
        })
        .collect();
    assert!(distinct.len() < all.len());
}

#[test]
fn proof_corpus_files_match_bundled_corpus() {
    // the exported proofs/ directory at the repository root stays in sync
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join("proofs");
    let docs = connexive::hilbert::corpus();
    assert!(dir.is_dir(), "proofs/ directory missing");
    let mut files: Vec<_> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    assert_eq!(files.len(), docs.len());
    for doc in &docs {
        let path = dir.join(format!("{}.json", doc.name));
        let text = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {path:?}"));
        let parsed = connexive::hilbert::from_json_str(&text).unwrap();
        assert_eq!(&parsed, doc, "{} drifted from the bundled corpus", doc.name);
        assert_eq!(
            text.trim_end(),
            connexive::hilbert::to_json_string(doc),
            "{} file formatting drifted",
            doc.name
        );
    }
}
