//! Propositional syntax: the AST shared by concrete formulas and axiom
//! schemata, plus substitution, schema matching and the bottom-based
//! negation translation.
//!
//! Formulas and schemata use one tree type. A schema may contain
//! [`Formula::Metavar`] leaves; a formula is a schema with none (see
//! [`Formula::is_ground`]). This keeps the proof verifier and the semantic
//! checkers uniform.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// Propositional formula / schema tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    /// Propositional variable (lowercase identifier).
    Atom(String),
    /// Schematic letter (single uppercase letter by convention).
    Metavar(String),
    Bottom,
    Top,
    Neg(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
}

/// A formula whose leaves may include metavariables.
pub type Schema = Formula;

pub fn atom(name: &str) -> Formula {
    Formula::Atom(name.to_string())
}

pub fn mv(name: &str) -> Formula {
    Formula::Metavar(name.to_string())
}

pub fn neg(f: Formula) -> Formula {
    Formula::Neg(Box::new(f))
}

pub fn and(l: Formula, r: Formula) -> Formula {
    Formula::And(Box::new(l), Box::new(r))
}

pub fn or(l: Formula, r: Formula) -> Formula {
    Formula::Or(Box::new(l), Box::new(r))
}

pub fn imp(l: Formula, r: Formula) -> Formula {
    Formula::Imp(Box::new(l), Box::new(r))
}

/// Which connectives and constants occur in a formula, or are provided by a
/// matrix. Used to decide whether a principle is applicable to a logic.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Connectives {
    pub neg: bool,
    pub and: bool,
    pub or: bool,
    pub imp: bool,
    pub bot: bool,
    pub top: bool,
}

impl Connectives {
    /// True if every connective required by `self` is available in `other`.
    pub fn subset_of(&self, other: &Connectives) -> bool {
        (!self.neg || other.neg)
            && (!self.and || other.and)
            && (!self.or || other.or)
            && (!self.imp || other.imp)
            && (!self.bot || other.bot)
            && (!self.top || other.top)
    }

    pub fn union(&self, other: &Connectives) -> Connectives {
        Connectives {
            neg: self.neg || other.neg,
            and: self.and || other.and,
            or: self.or || other.or,
            imp: self.imp || other.imp,
            bot: self.bot || other.bot,
            top: self.top || other.top,
        }
    }
}

impl fmt::Display for Connectives {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.neg {
            parts.push("neg");
        }
        if self.and {
            parts.push("and");
        }
        if self.or {
            parts.push("or");
        }
        if self.imp {
            parts.push("imp");
        }
        if self.bot {
            parts.push("bot");
        }
        if self.top {
            parts.push("top");
        }
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl Formula {
    pub fn is_ground(&self) -> bool {
        match self {
            Formula::Metavar(_) => false,
            Formula::Atom(_) | Formula::Bottom | Formula::Top => true,
            Formula::Neg(x) => x.is_ground(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => {
                l.is_ground() && r.is_ground()
            }
        }
    }

    /// Metavariable names, sorted.
    pub fn metavars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_metavars(&mut out);
        out
    }

    fn collect_metavars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Metavar(n) => {
                out.insert(n.clone());
            }
            Formula::Atom(_) | Formula::Bottom | Formula::Top => {}
            Formula::Neg(x) => x.collect_metavars(out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => {
                l.collect_metavars(out);
                r.collect_metavars(out);
            }
        }
    }

    /// All leaf variable names: atoms and metavariables, sorted.
    pub fn free_names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free_names(&mut out);
        out
    }

    fn collect_free_names(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Metavar(n) | Formula::Atom(n) => {
                out.insert(n.clone());
            }
            Formula::Bottom | Formula::Top => {}
            Formula::Neg(x) => x.collect_free_names(out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => {
                l.collect_free_names(out);
                r.collect_free_names(out);
            }
        }
    }

    /// Connectives and constants occurring in the tree.
    pub fn connectives(&self) -> Connectives {
        let mut c = Connectives::default();
        self.collect_connectives(&mut c);
        c
    }

    fn collect_connectives(&self, c: &mut Connectives) {
        match self {
            Formula::Atom(_) | Formula::Metavar(_) => {}
            Formula::Bottom => c.bot = true,
            Formula::Top => c.top = true,
            Formula::Neg(x) => {
                c.neg = true;
                x.collect_connectives(c);
            }
            Formula::And(l, r) => {
                c.and = true;
                l.collect_connectives(c);
                r.collect_connectives(c);
            }
            Formula::Or(l, r) => {
                c.or = true;
                l.collect_connectives(c);
                r.collect_connectives(c);
            }
            Formula::Imp(l, r) => {
                c.imp = true;
                l.collect_connectives(c);
                r.collect_connectives(c);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Metavar(_) | Formula::Bottom | Formula::Top => 0,
            Formula::Neg(x) => 1 + x.depth(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => {
                1 + l.depth().max(r.depth())
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubstError {
    #[error("unbound metavariable: {0}")]
    UnboundMetavar(String),
}

/// Finite map from metavariable names to formulas (or schemata, for
/// schema-level composition).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Substitution {
    bindings: BTreeMap<String, Formula>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(mut self, name: &str, f: Formula) -> Self {
        self.bindings.insert(name.to_string(), f);
        self
    }

    pub fn insert(&mut self, name: &str, f: Formula) {
        self.bindings.insert(name.to_string(), f);
    }

    pub fn get(&self, name: &str) -> Option<&Formula> {
        self.bindings.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Formula)> {
        self.bindings.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    /// Composition `self;other`: apply `other` inside the images of `self`.
    pub fn compose(&self, other: &Substitution) -> Substitution {
        let mut out = Substitution::new();
        for (k, v) in &self.bindings {
            out.bindings
                .insert(k.clone(), substitute_partial(v, other));
        }
        for (k, v) in &other.bindings {
            out.bindings.entry(k.clone()).or_insert_with(|| v.clone());
        }
        out
    }
}

impl FromIterator<(String, Formula)> for Substitution {
    fn from_iter<T: IntoIterator<Item = (String, Formula)>>(iter: T) -> Self {
        Substitution {
            bindings: iter.into_iter().collect(),
        }
    }
}

/// Homomorphic replacement of every metavariable by its image. Errors on a
/// metavariable missing from the substitution.
pub fn substitute(s: &Schema, sub: &Substitution) -> Result<Formula, SubstError> {
    match s {
        Formula::Metavar(n) => sub
            .get(n)
            .cloned()
            .ok_or_else(|| SubstError::UnboundMetavar(n.clone())),
        Formula::Atom(_) | Formula::Bottom | Formula::Top => Ok(s.clone()),
        Formula::Neg(x) => Ok(neg(substitute(x, sub)?)),
        Formula::And(l, r) => Ok(and(substitute(l, sub)?, substitute(r, sub)?)),
        Formula::Or(l, r) => Ok(or(substitute(l, sub)?, substitute(r, sub)?)),
        Formula::Imp(l, r) => Ok(imp(substitute(l, sub)?, substitute(r, sub)?)),
    }
}

/// Like [`substitute`] but leaves unbound metavariables in place.
pub fn substitute_partial(s: &Schema, sub: &Substitution) -> Formula {
    match s {
        Formula::Metavar(n) => sub.get(n).cloned().unwrap_or_else(|| s.clone()),
        Formula::Atom(_) | Formula::Bottom | Formula::Top => s.clone(),
        Formula::Neg(x) => neg(substitute_partial(x, sub)),
        Formula::And(l, r) => and(substitute_partial(l, sub), substitute_partial(r, sub)),
        Formula::Or(l, r) => or(substitute_partial(l, sub), substitute_partial(r, sub)),
        Formula::Imp(l, r) => imp(substitute_partial(l, sub), substitute_partial(r, sub)),
    }
}

/// Syntactic matching: find σ with `substitute(s, σ) = f`. A metavariable
/// occurring twice must map to structurally equal subtrees.
pub fn match_schema(s: &Schema, f: &Formula) -> Option<Substitution> {
    let mut sub = Substitution::new();
    if match_into(s, f, &mut sub) {
        Some(sub)
    } else {
        None
    }
}

fn match_into(s: &Schema, f: &Formula, sub: &mut Substitution) -> bool {
    match (s, f) {
        (Formula::Metavar(n), _) => match sub.get(n) {
            Some(prev) => prev == f,
            None => {
                sub.insert(n, f.clone());
                true
            }
        },
        (Formula::Atom(a), Formula::Atom(b)) => a == b,
        (Formula::Bottom, Formula::Bottom) | (Formula::Top, Formula::Top) => true,
        (Formula::Neg(x), Formula::Neg(y)) => match_into(x, y, sub),
        (Formula::And(a, b), Formula::And(c, d))
        | (Formula::Or(a, b), Formula::Or(c, d))
        | (Formula::Imp(a, b), Formula::Imp(c, d)) => {
            match_into(a, c, sub) && match_into(b, d, sub)
        }
        _ => false,
    }
}

/// How far the intuitionistic reading of negation is pushed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NegationTranslation {
    /// Rewrite every negation, bottom-up: ¬X becomes X' → ⊥.
    All,
    /// Rewrite only a negation at the root, leaving inner ones alone.
    Outer,
}

/// Replace negations by implications into ⊥ per the chosen mode.
pub fn translate_intuitionistic_negation(f: &Formula, mode: NegationTranslation) -> Formula {
    match mode {
        NegationTranslation::All => translate_all(f),
        NegationTranslation::Outer => match f {
            Formula::Neg(x) => imp((**x).clone(), Formula::Bottom),
            _ => f.clone(),
        },
    }
}

fn translate_all(f: &Formula) -> Formula {
    match f {
        Formula::Neg(x) => imp(translate_all(x), Formula::Bottom),
        Formula::Atom(_) | Formula::Metavar(_) | Formula::Bottom | Formula::Top => f.clone(),
        Formula::And(l, r) => and(translate_all(l), translate_all(r)),
        Formula::Or(l, r) => or(translate_all(l), translate_all(r)),
        Formula::Imp(l, r) => imp(translate_all(l), translate_all(r)),
    }
}

// Rendering with minimal parentheses. Precedence: ~ > & > | > ->, with ->
// right-associative and &, | left-associative.
fn prec(f: &Formula) -> u8 {
    match f {
        Formula::Imp(..) => 1,
        Formula::Or(..) => 2,
        Formula::And(..) => 3,
        Formula::Neg(..) => 4,
        _ => 5,
    }
}

fn write_prec(f: &Formula, min: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    if prec(f) < min {
        write!(out, "(")?;
        write_node(f, out)?;
        write!(out, ")")
    } else {
        write_node(f, out)
    }
}

fn write_node(f: &Formula, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    match f {
        Formula::Atom(n) | Formula::Metavar(n) => write!(out, "{n}"),
        Formula::Bottom => write!(out, "bot"),
        Formula::Top => write!(out, "top"),
        Formula::Neg(x) => {
            write!(out, "~")?;
            write_prec(x, 4, out)
        }
        Formula::And(l, r) => {
            write_prec(l, 3, out)?;
            write!(out, " & ")?;
            write_prec(r, 4, out)
        }
        Formula::Or(l, r) => {
            write_prec(l, 2, out)?;
            write!(out, " | ")?;
            write_prec(r, 3, out)
        }
        Formula::Imp(l, r) => {
            write_prec(l, 2, out)?;
            write!(out, " -> ")?;
            // nested implications are parenthesized on the right as well:
            // the grammar reads "A -> B -> C" right-associatively, but the
            // printed form keeps each conditional explicit
            write_prec(r, 2, out)
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_node(self, f)
    }
}
