//! Seeded generators shared by the integration test suites.

use connexive::formula::{and, atom, imp, mv, neg, or, Connectives, Formula};
use connexive::matrix::MatrixLogic;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random formula/schema over the given leaves and connectives, depth
/// bounded. Leaves are used verbatim (atoms or metavariables).
pub fn random_formula(
    rng: &mut ChaCha8Rng,
    leaves: &[Formula],
    sig: Connectives,
    depth: usize,
) -> Formula {
    let mut options: Vec<u8> = Vec::new();
    if depth > 0 {
        if sig.neg {
            options.push(1);
        }
        if sig.and {
            options.push(2);
        }
        if sig.or {
            options.push(3);
        }
        if sig.imp {
            options.push(4);
        }
    }
    // bias towards leaves so sizes stay reasonable
    if options.is_empty() || rng.gen_bool(0.35) {
        let mut leaf_pool: Vec<Formula> = leaves.to_vec();
        if sig.bot {
            leaf_pool.push(Formula::Bottom);
        }
        if sig.top {
            leaf_pool.push(Formula::Top);
        }
        return leaf_pool.choose(rng).expect("leaf pool nonempty").clone();
    }
    match options.choose(rng).unwrap() {
        1 => neg(random_formula(rng, leaves, sig, depth - 1)),
        2 => and(
            random_formula(rng, leaves, sig, depth - 1),
            random_formula(rng, leaves, sig, depth - 1),
        ),
        3 => or(
            random_formula(rng, leaves, sig, depth - 1),
            random_formula(rng, leaves, sig, depth - 1),
        ),
        _ => imp(
            random_formula(rng, leaves, sig, depth - 1),
            random_formula(rng, leaves, sig, depth - 1),
        ),
    }
}

pub fn atom_leaves(names: &[&str]) -> Vec<Formula> {
    names.iter().map(|n| atom(n)).collect()
}

pub fn metavar_leaves(names: &[&str]) -> Vec<Formula> {
    names.iter().map(|n| mv(n)).collect()
}

/// Random matrix over the exact signature: random tables, random nonempty
/// proper designated set, ⊥ (when present) a random undesignated value.
pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize, sig: Connectives, name: &str) -> MatrixLogic {
    let designated: Vec<bool> = loop {
        let d: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
        let k = d.iter().filter(|&&x| x).count();
        if k > 0 && k < n {
            break d;
        }
    };
    let unary = |rng: &mut ChaCha8Rng| (0..n).map(|_| rng.gen_range(0..n)).collect::<Vec<_>>();
    let binary = |rng: &mut ChaCha8Rng| {
        (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(0..n)).collect::<Vec<_>>())
            .collect::<Vec<_>>()
    };
    let undesignated: Vec<usize> = (0..n).filter(|&v| !designated[v]).collect();
    MatrixLogic {
        name: name.to_string(),
        values: (0..n).map(|v| v.to_string()).collect(),
        designated: designated.clone(),
        neg: sig.neg.then(|| unary(rng)),
        and: sig.and.then(|| binary(rng)),
        or: sig.or.then(|| binary(rng)),
        imp: sig.imp.then(|| binary(rng)),
        bot: sig.bot.then(|| *undesignated.choose(rng).unwrap()),
        top: sig.top.then(|| rng.gen_range(0..n)),
    }
}

/// Random permutation of 0..n.
#[allow(dead_code)] // not every test target draws permutations
pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
