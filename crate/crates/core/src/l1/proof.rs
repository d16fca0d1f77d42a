//! Hilbert-style proofs and their checker.
//!
//! A proof file holds one JSON object per line:
//!
//! ```text
//! {"formula": "eps(a,b) -> eps(a,a)", "rule": "ax1", "subst": {"a": "a", "b": "b"}}
//! {"formula": "eps(a,a) | ~eps(a,a)", "rule": "taut"}
//! {"formula": "...", "rule": "taut", "skeleton": "p | ~p", "map": {"p": "eps(a,a)"}}
//! {"formula": "...", "rule": "mp", "from": [1, 2]}
//! ```
//!
//! `from: [i, j]` cites earlier lines by 1-based number; line `j` must be
//! `line_i -> formula`. Blank lines are ignored.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::{L1Formula, ModalFormula, PropVar};
use crate::l1::axioms::{AxiomSchema, Substitution};
use crate::l1::taut::{is_propositional_tautology, is_tautology_instance, substitute};
use crate::parse::{parse_l1, parse_modal};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TautologyWitness {
    pub skeleton: ModalFormula,
    pub map: BTreeMap<PropVar, L1Formula>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    Axiom { schema: AxiomSchema, subst: Substitution },
    Tautology { witness: Option<TautologyWitness> },
    /// 1-based line numbers of `x` and `x -> current`.
    ModusPonens { minor: usize, major: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofLine {
    pub formula: L1Formula,
    pub justification: Justification,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HilbertProof {
    pub lines: Vec<ProofLine>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("unknown justification {0:?}")]
    UnknownRule(String),
    #[error("formula does not parse: {0}")]
    Formula(String),
    #[error("not an instance of {schema} under the given substitution")]
    BadAxiom { schema: AxiomSchema },
    #[error("not a tautology instance: {0}")]
    BadTautology(String),
    #[error("line {0} is not an earlier line")]
    BadReference(usize),
    #[error("line {major} is not line {minor} -> this formula")]
    BadModusPonens { minor: usize, major: usize },
    #[error("proof has no lines")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ProofError {
    /// 1-based; 0 for errors about the proof as a whole.
    pub line: usize,
    pub kind: ProofErrorKind,
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct LineJson {
    formula: String,
    rule: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    subst: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    skeleton: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    map: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    from: Option<[usize; 2]>,
}

fn parse_line(line: usize, text: &str) -> Result<ProofLine, ProofError> {
    let err = |kind| ProofError { line, kind };
    let raw: LineJson = serde_json::from_str(text).map_err(|e| err(ProofErrorKind::Malformed(e.to_string())))?;
    let formula = parse_l1(&raw.formula).map_err(|e| err(ProofErrorKind::Formula(e.to_string())))?;
    let justification = match raw.rule.to_ascii_lowercase().as_str() {
        r @ ("ax1" | "ax2" | "ax3") => {
            let schema = match r {
                "ax1" => AxiomSchema::Ax1,
                "ax2" => AxiomSchema::Ax2,
                _ => AxiomSchema::Ax3,
            };
            let raw_subst = raw
                .subst
                .ok_or_else(|| err(ProofErrorKind::Malformed("axiom line needs \"subst\"".into())))?;
            let mut subst = Substitution::new();
            for (k, v) in raw_subst {
                let n = crate::formula::NameVar::new(&v)
                    .map_err(|e| err(ProofErrorKind::Malformed(e.to_string())))?;
                subst.insert(k, n);
            }
            Justification::Axiom { schema, subst }
        }
        "taut" => {
            let witness = match (raw.skeleton, raw.map) {
                (None, None) => None,
                (Some(s), Some(m)) => {
                    let skeleton =
                        parse_modal(&s).map_err(|e| err(ProofErrorKind::Formula(e.to_string())))?;
                    let mut map = BTreeMap::new();
                    for (k, v) in m {
                        let p = PropVar::new(&k).map_err(|e| err(ProofErrorKind::Malformed(e.to_string())))?;
                        let f = parse_l1(&v).map_err(|e| err(ProofErrorKind::Formula(e.to_string())))?;
                        map.insert(p, f);
                    }
                    Some(TautologyWitness { skeleton, map })
                }
                _ => {
                    return Err(err(ProofErrorKind::Malformed(
                        "\"skeleton\" and \"map\" go together".into(),
                    )))
                }
            };
            Justification::Tautology { witness }
        }
        "mp" => {
            let [minor, major] = raw
                .from
                .ok_or_else(|| err(ProofErrorKind::Malformed("modus ponens needs \"from\"".into())))?;
            Justification::ModusPonens { minor, major }
        }
        other => return Err(err(ProofErrorKind::UnknownRule(other.to_string()))),
    };
    Ok(ProofLine { formula, justification })
}

impl HilbertProof {
    /// Reads the JSON-lines format; errors carry the 1-based line number
    /// counted over non-blank lines.
    pub fn parse(text: &str) -> Result<Self, ProofError> {
        let lines = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .enumerate()
            .map(|(i, l)| parse_line(i + 1, l))
            .collect::<Result<_, _>>()?;
        Ok(HilbertProof { lines })
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            let mut raw = LineJson {
                formula: line.formula.to_string(),
                rule: String::new(),
                subst: None,
                skeleton: None,
                map: None,
                from: None,
            };
            match &line.justification {
                Justification::Axiom { schema, subst } => {
                    raw.rule = schema.to_string().to_ascii_lowercase();
                    raw.subst = Some(subst.iter().map(|(k, v)| (k.clone(), v.to_string())).collect());
                }
                Justification::Tautology { witness } => {
                    raw.rule = "taut".into();
                    if let Some(w) = witness {
                        raw.skeleton = Some(w.skeleton.to_string());
                        raw.map = Some(w.map.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect());
                    }
                }
                Justification::ModusPonens { minor, major } => {
                    raw.rule = "mp".into();
                    raw.from = Some([*minor, *major]);
                }
            }
            out.push_str(&serde_json::to_string(&raw).expect("line serializes"));
            out.push('\n');
        }
        out
    }
}

/// Checks every line; on success returns the proved formula (the last line).
pub fn check_proof(proof: &HilbertProof) -> Result<L1Formula, ProofError> {
    for (i, line) in proof.lines.iter().enumerate() {
        let number = i + 1;
        let err = |kind| ProofError { line: number, kind };
        match &line.justification {
            Justification::Axiom { schema, subst } => {
                if schema.instantiate(subst).as_ref() != Some(&line.formula) {
                    return Err(err(ProofErrorKind::BadAxiom { schema: *schema }));
                }
            }
            Justification::Tautology { witness: None } => {
                if !is_tautology_instance(&line.formula) {
                    return Err(err(ProofErrorKind::BadTautology(
                        "atom abstraction is falsifiable".into(),
                    )));
                }
            }
            Justification::Tautology { witness: Some(w) } => {
                match is_propositional_tautology(&w.skeleton) {
                    Some(true) => {}
                    Some(false) => return Err(err(ProofErrorKind::BadTautology("skeleton is falsifiable".into()))),
                    None => return Err(err(ProofErrorKind::BadTautology("skeleton contains a box".into()))),
                }
                if substitute(&w.skeleton, &w.map).as_ref() != Some(&line.formula) {
                    return Err(err(ProofErrorKind::BadTautology(
                        "substituted skeleton differs from the formula".into(),
                    )));
                }
            }
            Justification::ModusPonens { minor, major } => {
                for &r in [minor, major] {
                    if r == 0 || r >= number {
                        return Err(err(ProofErrorKind::BadReference(r)));
                    }
                }
                let expected = L1Formula::implies(proof.lines[minor - 1].formula.clone(), line.formula.clone());
                if proof.lines[major - 1].formula != expected {
                    return Err(err(ProofErrorKind::BadModusPonens {
                        minor: *minor,
                        major: *major,
                    }));
                }
            }
        }
    }
    proof.lines.last().map(|l| l.formula.clone()).ok_or(ProofError {
        line: 0,
        kind: ProofErrorKind::Empty,
    })
}
