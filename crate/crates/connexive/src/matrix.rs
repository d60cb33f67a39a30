//! Finite matrix logics: the core type, validation, the bundled logics,
//! a JSON definition format, bottom-definability reporting and isomorphism
//! testing.
//!
//! Values are represented internally as `0..n-1`; the `values` labels are
//! display-only. All reports use the display labels.

use serde::{Deserialize, Serialize};
use std::fmt;

use thiserror::Error;

use crate::formula::Connectives;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("malformed logic document: {0}")]
    Malformed(String),
    #[error("logic must declare at least two values")]
    TooFewValues,
    #[error("duplicate value label '{0}'")]
    DuplicateValue(String),
    #[error("unknown value label '{label}' in {context}")]
    UnknownLabel { context: String, label: String },
    #[error("partial table: {table} row {row}")]
    PartialTable { table: String, row: String },
    #[error("designated set is empty")]
    EmptyDesignated,
    #[error("designated set must be a proper subset of the values")]
    AllDesignated,
    #[error("bot value must not be designated")]
    DesignatedBot,
    #[error("logic declares no connectives")]
    NoConnectives,
    #[error("unknown builtin logic '{0}'")]
    UnknownBuiltin(String),
    #[error("connective signature mismatch: {0} vs {1}")]
    SignatureMismatch(Connectives, Connectives),
}

/// A finite logical matrix: value labels, designated subset, truth tables
/// and optional constants. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixLogic {
    pub name: String,
    pub values: Vec<String>,
    /// designated[v] for internal value v.
    pub designated: Vec<bool>,
    pub neg: Option<Vec<usize>>,
    pub and: Option<Vec<Vec<usize>>>,
    pub or: Option<Vec<Vec<usize>>>,
    pub imp: Option<Vec<Vec<usize>>>,
    pub bot: Option<usize>,
    pub top: Option<usize>,
}

impl MatrixLogic {
    pub fn value_count(&self) -> usize {
        self.values.len()
    }

    pub fn is_designated(&self, v: usize) -> bool {
        self.designated[v]
    }

    pub fn label(&self, v: usize) -> &str {
        &self.values[v]
    }

    pub fn value_of_label(&self, label: &str) -> Option<usize> {
        self.values.iter().position(|l| l == label)
    }

    /// Connectives and constants this matrix interprets.
    pub fn signature(&self) -> Connectives {
        Connectives {
            neg: self.neg.is_some(),
            and: self.and.is_some(),
            or: self.or.is_some(),
            imp: self.imp.is_some(),
            bot: self.bot.is_some(),
            top: self.top.is_some(),
        }
    }

    /// Check every structural invariant; called by `load_logic` and after
    /// search-side construction.
    pub fn validate(&self) -> Result<(), MatrixError> {
        let n = self.value_count();
        if n < 2 {
            return Err(MatrixError::TooFewValues);
        }
        for (i, l) in self.values.iter().enumerate() {
            if self.values[..i].contains(l) {
                return Err(MatrixError::DuplicateValue(l.clone()));
            }
        }
        if self.designated.len() != n {
            return Err(MatrixError::Malformed(
                "designated flags do not cover the value set".into(),
            ));
        }
        let dcount = self.designated.iter().filter(|&&d| d).count();
        if dcount == 0 {
            return Err(MatrixError::EmptyDesignated);
        }
        if dcount == n {
            return Err(MatrixError::AllDesignated);
        }
        if let Some(t) = &self.neg {
            if t.len() != n {
                return Err(MatrixError::PartialTable {
                    table: "neg".into(),
                    row: "-".into(),
                });
            }
            if t.iter().any(|&v| v >= n) {
                return Err(MatrixError::Malformed("neg output out of range".into()));
            }
        }
        for (name, t) in [("and", &self.and), ("or", &self.or), ("imp", &self.imp)] {
            if let Some(rows) = t {
                if rows.len() != n {
                    return Err(MatrixError::PartialTable {
                        table: name.into(),
                        row: self
                            .values
                            .get(rows.len())
                            .cloned()
                            .unwrap_or_else(|| rows.len().to_string()),
                    });
                }
                for (i, row) in rows.iter().enumerate() {
                    if row.len() != n {
                        return Err(MatrixError::PartialTable {
                            table: name.into(),
                            row: self.values[i].clone(),
                        });
                    }
                    if row.iter().any(|&v| v >= n) {
                        return Err(MatrixError::Malformed(format!(
                            "{name} output out of range"
                        )));
                    }
                }
            }
        }
        for c in [self.bot, self.top].into_iter().flatten() {
            if c >= n {
                return Err(MatrixError::Malformed("constant out of range".into()));
            }
        }
        // ⊥ unsatisfiable = never designated
        if let Some(b) = self.bot {
            if self.designated[b] {
                return Err(MatrixError::DesignatedBot);
            }
        }
        if self.neg.is_none()
            && self.and.is_none()
            && self.or.is_none()
            && self.imp.is_none()
            && self.bot.is_none()
            && self.top.is_none()
        {
            return Err(MatrixError::NoConnectives);
        }
        Ok(())
    }
}

/// Serialized form of a [`MatrixLogic`]. Unknown keys are rejected.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct LogicDocument {
    pub name: String,
    pub values: Vec<String>,
    pub designated: Vec<String>,
    pub tables: TablesDocument,
    #[serde(default, skip_serializing_if = "ConstantsDocument::is_empty")]
    pub constants: ConstantsDocument,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct TablesDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neg: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub and: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub or: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub imp: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ConstantsDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bot: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top: Option<String>,
}

impl ConstantsDocument {
    pub fn is_empty(&self) -> bool {
        self.bot.is_none() && self.top.is_none()
    }
}

/// Deserialize and fully validate a logic document.
pub fn load_logic(doc: &LogicDocument) -> Result<MatrixLogic, MatrixError> {
    let values = doc.values.clone();
    let lookup = |context: &str, label: &str| -> Result<usize, MatrixError> {
        values
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| MatrixError::UnknownLabel {
                context: context.to_string(),
                label: label.to_string(),
            })
    };
    let n = values.len();
    let mut designated = vec![false; n];
    for d in &doc.designated {
        designated[lookup("designated", d)?] = true;
    }
    let neg = doc
        .tables
        .neg
        .as_ref()
        .map(|t| {
            if t.len() != n {
                return Err(MatrixError::PartialTable {
                    table: "neg".into(),
                    row: "-".into(),
                });
            }
            t.iter().map(|l| lookup("neg table", l)).collect()
        })
        .transpose()?;
    let binary = |name: &str, t: &Option<Vec<Vec<String>>>| -> Result<Option<Vec<Vec<usize>>>, MatrixError> {
        t.as_ref()
            .map(|rows| {
                if rows.len() != n {
                    return Err(MatrixError::PartialTable {
                        table: name.into(),
                        row: values
                            .get(rows.len())
                            .cloned()
                            .unwrap_or_else(|| rows.len().to_string()),
                    });
                }
                rows.iter()
                    .enumerate()
                    .map(|(i, row)| {
                        if row.len() != n {
                            return Err(MatrixError::PartialTable {
                                table: name.into(),
                                row: values[i].clone(),
                            });
                        }
                        row.iter()
                            .map(|l| lookup(&format!("{name} table"), l))
                            .collect()
                    })
                    .collect()
            })
            .transpose()
    };
    let and = binary("and", &doc.tables.and)?;
    let or = binary("or", &doc.tables.or)?;
    let imp = binary("imp", &doc.tables.imp)?;
    let bot = doc
        .constants
        .bot
        .as_ref()
        .map(|l| lookup("constants", l))
        .transpose()?;
    let top = doc
        .constants
        .top
        .as_ref()
        .map(|l| lookup("constants", l))
        .transpose()?;
    let m = MatrixLogic {
        name: doc.name.clone(),
        values,
        designated,
        neg,
        and,
        or,
        imp,
        bot,
        top,
    };
    m.validate()?;
    Ok(m)
}

/// Serialize back to the document form. `load_logic(save(m)) == m`.
pub fn save(m: &MatrixLogic) -> LogicDocument {
    let lab = |v: &usize| m.values[*v].clone();
    LogicDocument {
        name: m.name.clone(),
        values: m.values.clone(),
        designated: (0..m.value_count())
            .filter(|&v| m.designated[v])
            .map(|v| m.values[v].clone())
            .collect(),
        tables: TablesDocument {
            neg: m.neg.as_ref().map(|t| t.iter().map(lab).collect()),
            and: m
                .and
                .as_ref()
                .map(|t| t.iter().map(|r| r.iter().map(lab).collect()).collect()),
            or: m
                .or
                .as_ref()
                .map(|t| t.iter().map(|r| r.iter().map(lab).collect()).collect()),
            imp: m
                .imp
                .as_ref()
                .map(|t| t.iter().map(|r| r.iter().map(lab).collect()).collect()),
        },
        constants: ConstantsDocument {
            bot: m.bot.map(|v| m.values[v].clone()),
            top: m.top.map(|v| m.values[v].clone()),
        },
    }
}

pub fn load_logic_from_str(s: &str) -> Result<MatrixLogic, MatrixError> {
    let doc: LogicDocument =
        serde_json::from_str(s).map_err(|e| MatrixError::Malformed(e.to_string()))?;
    load_logic(&doc)
}

pub fn save_to_string(m: &MatrixLogic) -> String {
    serde_json::to_string_pretty(&save(m)).expect("logic document serialization")
}

pub const BUILTIN_NAMES: [&str; 5] = [
    "cc1_bot",
    "sa2_three",
    "ecf_three",
    "classical",
    "classical_bicond",
];

/// The bundled connexive matrices, plus two classical references.
pub fn builtin(name: &str) -> Result<MatrixLogic, MatrixError> {
    let m = match name {
        // Angell's four-valued connexive logic with ⊥ constantly 4.
        // Labels 1-4 map to internals 0-3.
        "cc1_bot" => MatrixLogic {
            name: "cc1_bot".into(),
            values: vec!["1".into(), "2".into(), "3".into(), "4".into()],
            designated: vec![true, true, false, false],
            neg: Some(vec![3, 2, 1, 0]),
            and: Some(vec![
                vec![0, 1, 2, 3],
                vec![1, 0, 3, 2],
                vec![2, 3, 2, 3],
                vec![3, 2, 3, 2],
            ]),
            or: None,
            imp: Some(vec![
                vec![0, 3, 2, 3],
                vec![3, 0, 3, 2],
                vec![0, 3, 0, 3],
                vec![3, 0, 3, 0],
            ]),
            bot: Some(3),
            top: None,
        },
        // Three-valued matrix validating SA2 with MP, but not DNE.
        "sa2_three" => MatrixLogic {
            name: "sa2_three".into(),
            values: vec!["1".into(), "i".into(), "0".into()],
            designated: vec![true, false, false],
            neg: Some(vec![1, 0, 0]),
            and: None,
            or: None,
            imp: Some(vec![vec![0, 2, 2], vec![2, 0, 2], vec![0, 0, 0]]),
            bot: None,
            top: None,
        },
        // Three-valued logic where both ECF forms hold together with the
        // super-bot principles. ⊥ = 0: forced if ⊥ is ¬(p→p) and
        // undesignated.
        "ecf_three" => MatrixLogic {
            name: "ecf_three".into(),
            values: vec!["1".into(), "i".into(), "0".into()],
            designated: vec![true, false, false],
            neg: Some(vec![2, 2, 0]),
            and: Some(vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 1]]),
            or: None,
            imp: Some(vec![vec![0, 1, 2], vec![0, 0, 2], vec![2, 2, 0]]),
            bot: Some(2),
            top: None,
        },
        "classical" => MatrixLogic {
            name: "classical".into(),
            values: vec!["0".into(), "1".into()],
            designated: vec![false, true],
            neg: Some(vec![1, 0]),
            and: Some(vec![vec![0, 0], vec![0, 1]]),
            or: Some(vec![vec![0, 1], vec![1, 1]]),
            imp: Some(vec![vec![1, 1], vec![0, 1]]),
            bot: Some(0),
            top: Some(1),
        },
        // Classical values with the arrow read as the biconditional.
        "classical_bicond" => MatrixLogic {
            name: "classical_bicond".into(),
            values: vec!["0".into(), "1".into()],
            designated: vec![false, true],
            neg: Some(vec![1, 0]),
            and: Some(vec![vec![0, 0], vec![0, 1]]),
            or: Some(vec![vec![0, 1], vec![1, 1]]),
            imp: Some(vec![vec![1, 0], vec![0, 1]]),
            bot: Some(0),
            top: Some(1),
        },
        other => return Err(MatrixError::UnknownBuiltin(other.to_string())),
    };
    debug_assert!(m.validate().is_ok());
    Ok(m)
}

/// Report on whether ¬(p→p) denotes a constant, and whether that constant
/// is the declared ⊥.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BotDefinability {
    /// Label of the constant value of ¬(p→p), if it is constant.
    pub constant: Option<String>,
    /// Whether the constant equals the declared bot value. `None` when the
    /// formula is not constant or no bot is declared.
    pub equals_bot: Option<bool>,
}

impl fmt::Display for BotDefinability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.constant {
            None => write!(f, "~(p -> p) is not constant"),
            Some(c) => {
                write!(f, "~(p -> p) is constantly {c}")?;
                match self.equals_bot {
                    Some(true) => write!(f, ", equal to the declared bot"),
                    Some(false) => write!(f, ", different from the declared bot"),
                    None => write!(f, "; no bot declared"),
                }
            }
        }
    }
}

/// Evaluate ¬(p→p) over all assignments to p and compare against bot.
pub fn check_bot_definability(m: &MatrixLogic) -> Result<BotDefinability, MatrixError> {
    let (neg, imp) = match (&m.neg, &m.imp) {
        (Some(n), Some(i)) => (n, i),
        _ => {
            return Err(MatrixError::Malformed(
                "bot definability requires neg and imp tables".into(),
            ))
        }
    };
    let mut seen: Option<usize> = None;
    let mut constant = true;
    for v in 0..m.value_count() {
        let out = neg[imp[v][v]];
        match seen {
            None => seen = Some(out),
            Some(prev) if prev != out => {
                constant = false;
                break;
            }
            _ => {}
        }
    }
    if !constant {
        return Ok(BotDefinability {
            constant: None,
            equals_bot: None,
        });
    }
    let c = seen.expect("at least two values");
    Ok(BotDefinability {
        constant: Some(m.values[c].clone()),
        equals_bot: m.bot.map(|b| b == c),
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute(&mut items, 0, &mut out);
    out
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Relabel a matrix along a value permutation: value v becomes perm[v].
/// Labels are regenerated as "0".."n-1" unless `keep_labels` carries the
/// original label set.
pub fn relabel(m: &MatrixLogic, perm: &[usize]) -> MatrixLogic {
    let n = m.value_count();
    let mut values = vec![String::new(); n];
    let mut designated = vec![false; n];
    for v in 0..n {
        values[perm[v]] = m.values[v].clone();
        designated[perm[v]] = m.designated[v];
    }
    let map_unary = |t: &Vec<usize>| {
        let mut out = vec![0; n];
        for v in 0..n {
            out[perm[v]] = perm[t[v]];
        }
        out
    };
    let map_binary = |t: &Vec<Vec<usize>>| {
        let mut out = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                out[perm[a]][perm[b]] = perm[t[a][b]];
            }
        }
        out
    };
    MatrixLogic {
        name: m.name.clone(),
        values,
        designated,
        neg: m.neg.as_ref().map(map_unary),
        and: m.and.as_ref().map(map_binary),
        or: m.or.as_ref().map(map_binary),
        imp: m.imp.as_ref().map(map_binary),
        bot: m.bot.map(|v| perm[v]),
        top: m.top.map(|v| perm[v]),
    }
}

/// Does `perm` carry m1 onto m2: designated onto designated, constants onto
/// constants, commuting with every table.
fn perm_is_isomorphism(m1: &MatrixLogic, m2: &MatrixLogic, perm: &[usize]) -> bool {
    let n = m1.value_count();
    for v in 0..n {
        if m1.designated[v] != m2.designated[perm[v]] {
            return false;
        }
    }
    match (m1.bot, m2.bot) {
        (Some(a), Some(b)) if perm[a] != b => return false,
        _ => {}
    }
    match (m1.top, m2.top) {
        (Some(a), Some(b)) if perm[a] != b => return false,
        _ => {}
    }
    if let (Some(t1), Some(t2)) = (&m1.neg, &m2.neg) {
        for v in 0..n {
            if perm[t1[v]] != t2[perm[v]] {
                return false;
            }
        }
    }
    for (t1, t2) in [(&m1.and, &m2.and), (&m1.or, &m2.or), (&m1.imp, &m2.imp)] {
        if let (Some(t1), Some(t2)) = (t1, t2) {
            for a in 0..n {
                for b in 0..n {
                    if perm[t1[a][b]] != t2[perm[a]][perm[b]] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Isomorphism test. Returns a witness permutation (internal-value map,
/// m1 value v corresponds to m2 value perm[v]) when the matrices are
/// isomorphic. Errors when the connective signatures differ.
pub fn is_isomorphic(
    m1: &MatrixLogic,
    m2: &MatrixLogic,
) -> Result<Option<Vec<usize>>, MatrixError> {
    if m1.signature() != m2.signature() {
        return Err(MatrixError::SignatureMismatch(
            m1.signature(),
            m2.signature(),
        ));
    }
    if m1.value_count() != m2.value_count() {
        return Ok(None);
    }
    Ok(permutations(m1.value_count())
        .into_iter()
        .find(|p| perm_is_isomorphism(m1, m2, p)))
}

pub(crate) fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    permutations(n)
}
