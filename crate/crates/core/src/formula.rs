//! Abstract syntax for the two formula languages.
//!
//! [`L1Formula`] is built from epsilon atoms with `~` and `|` as the only
//! primitive connectives; [`ModalFormula`] is built from propositional
//! variables with `~`, `|` and `[]`. Every other connective is a smart
//! constructor that expands into the primitive core, so two formulas are
//! equal exactly when their core trees are equal.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

/// Checks the identifier shape shared by name and propositional variables:
/// `[a-z][a-z0-9_]*`.
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid identifier {0:?}: expected [a-z][a-z0-9_]*")]
pub struct IdentError(pub String);

macro_rules! identifier_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(Arc<str>);

        impl $name {
            pub fn new(id: &str) -> Result<Self, IdentError> {
                if is_identifier(id) {
                    Ok(Self(Arc::from(id)))
                } else {
                    Err(IdentError(id.to_string()))
                }
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl Serialize for $name {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.serialize_str(&self.0)
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                $name::new(&s).map_err(serde::de::Error::custom)
            }
        }
    };
}

identifier_type!(
    /// A name variable of L1 (`a`, `b`, ...).
    NameVar
);
identifier_type!(
    /// A propositional variable of the modal language.
    PropVar
);

/// Formula of the propositional ontology L1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum L1Formula {
    Epsilon(NameVar, NameVar),
    Not(Box<L1Formula>),
    Or(Box<L1Formula>, Box<L1Formula>),
}

/// Propositional modal formula over a single primitive modality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModalFormula {
    Var(PropVar),
    Not(Box<ModalFormula>),
    Or(Box<ModalFormula>, Box<ModalFormula>),
    Box(Box<ModalFormula>),
}

/// The four normal modal logics handled by the provers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LogicId {
    K,
    KT,
    KB,
    KTB,
}

impl LogicId {
    pub const ALL: [LogicId; 4] = [LogicId::K, LogicId::KT, LogicId::KB, LogicId::KTB];

    pub fn reflexive(self) -> bool {
        matches!(self, LogicId::KT | LogicId::KTB)
    }

    pub fn symmetric(self) -> bool {
        matches!(self, LogicId::KB | LogicId::KTB)
    }

    pub fn name(self) -> &'static str {
        match self {
            LogicId::K => "K",
            LogicId::KT => "KT",
            LogicId::KB => "KB",
            LogicId::KTB => "KTB",
        }
    }

    /// Whether every theorem of `self` is a theorem of `other`.
    pub fn contained_in(self, other: LogicId) -> bool {
        (!self.reflexive() || other.reflexive()) && (!self.symmetric() || other.symmetric())
    }
}

impl fmt::Display for LogicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for LogicId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "k" => Ok(LogicId::K),
            "kt" | "t" => Ok(LogicId::KT),
            "kb" | "b" => Ok(LogicId::KB),
            "ktb" | "b_t" => Ok(LogicId::KTB),
            other => Err(format!("unknown logic {other:?} (expected k, kt, kb or ktb)")),
        }
    }
}

impl L1Formula {
    pub fn eps(a: &NameVar, b: &NameVar) -> Self {
        L1Formula::Epsilon(a.clone(), b.clone())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(x: Self) -> Self {
        L1Formula::Not(Box::new(x))
    }

    pub fn or(x: Self, y: Self) -> Self {
        L1Formula::Or(Box::new(x), Box::new(y))
    }

    pub fn and(x: Self, y: Self) -> Self {
        Self::not(Self::or(Self::not(x), Self::not(y)))
    }

    pub fn implies(x: Self, y: Self) -> Self {
        Self::or(Self::not(x), y)
    }

    pub fn iff(x: Self, y: Self) -> Self {
        Self::and(Self::implies(x.clone(), y.clone()), Self::implies(y, x))
    }

    /// Name variables in order of first occurrence.
    pub fn name_vars(&self) -> Vec<NameVar> {
        let mut seen = Vec::new();
        self.visit_atoms(&mut |a, b| {
            for v in [a, b] {
                if !seen.contains(v) {
                    seen.push(v.clone());
                }
            }
        });
        seen
    }

    pub fn visit_atoms<'a>(&'a self, f: &mut impl FnMut(&'a NameVar, &'a NameVar)) {
        match self {
            L1Formula::Epsilon(a, b) => f(a, b),
            L1Formula::Not(x) => x.visit_atoms(f),
            L1Formula::Or(x, y) => {
                x.visit_atoms(f);
                y.visit_atoms(f);
            }
        }
    }

    /// Number of nodes in the primitive (`~`, `|`, atom) tree.
    pub fn core_size(&self) -> usize {
        match self {
            L1Formula::Epsilon(..) => 1,
            L1Formula::Not(x) => 1 + x.core_size(),
            L1Formula::Or(x, y) => 1 + x.core_size() + y.core_size(),
        }
    }

    pub fn rename(&self, f: &impl Fn(&NameVar) -> NameVar) -> Self {
        match self {
            L1Formula::Epsilon(a, b) => L1Formula::Epsilon(f(a), f(b)),
            L1Formula::Not(x) => Self::not(x.rename(f)),
            L1Formula::Or(x, y) => Self::or(x.rename(f), y.rename(f)),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            L1Formula::Epsilon(a, b) => json!({"op": "eps", "args": [a.as_str(), b.as_str()]}),
            L1Formula::Not(x) => json!({"op": "not", "args": [x.to_json()]}),
            L1Formula::Or(x, y) => json!({"op": "or", "args": [x.to_json(), y.to_json()]}),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self, JsonShapeError> {
        let (op, args) = split_op(v)?;
        match (op, args.len()) {
            ("eps", 2) => Ok(L1Formula::Epsilon(
                NameVar::new(str_arg(&args[0])?)?,
                NameVar::new(str_arg(&args[1])?)?,
            )),
            ("not", 1) => Ok(Self::not(Self::from_json(&args[0])?)),
            ("or", 2) => Ok(Self::or(Self::from_json(&args[0])?, Self::from_json(&args[1])?)),
            _ => Err(JsonShapeError::BadNode(op.to_string(), args.len())),
        }
    }
}

impl ModalFormula {
    pub fn var(p: &PropVar) -> Self {
        ModalFormula::Var(p.clone())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(x: Self) -> Self {
        ModalFormula::Not(Box::new(x))
    }

    pub fn or(x: Self, y: Self) -> Self {
        ModalFormula::Or(Box::new(x), Box::new(y))
    }

    pub fn boxed(x: Self) -> Self {
        ModalFormula::Box(Box::new(x))
    }

    pub fn diamond(x: Self) -> Self {
        Self::not(Self::boxed(Self::not(x)))
    }

    pub fn and(x: Self, y: Self) -> Self {
        Self::not(Self::or(Self::not(x), Self::not(y)))
    }

    pub fn implies(x: Self, y: Self) -> Self {
        Self::or(Self::not(x), y)
    }

    pub fn iff(x: Self, y: Self) -> Self {
        Self::and(Self::implies(x.clone(), y.clone()), Self::implies(y, x))
    }

    /// Left-nested conjunction; `None` for an empty iterator.
    pub fn conjunction(items: impl IntoIterator<Item = Self>) -> Option<Self> {
        items.into_iter().reduce(Self::and)
    }

    pub fn prop_vars(&self) -> BTreeSet<PropVar> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<PropVar>) {
        match self {
            ModalFormula::Var(p) => {
                out.insert(p.clone());
            }
            ModalFormula::Not(x) | ModalFormula::Box(x) => x.collect_vars(out),
            ModalFormula::Or(x, y) => {
                x.collect_vars(out);
                y.collect_vars(out);
            }
        }
    }

    pub fn modal_depth(&self) -> usize {
        match self {
            ModalFormula::Var(_) => 0,
            ModalFormula::Not(x) => x.modal_depth(),
            ModalFormula::Box(x) => 1 + x.modal_depth(),
            ModalFormula::Or(x, y) => x.modal_depth().max(y.modal_depth()),
        }
    }

    pub fn core_size(&self) -> usize {
        match self {
            ModalFormula::Var(_) => 1,
            ModalFormula::Not(x) | ModalFormula::Box(x) => 1 + x.core_size(),
            ModalFormula::Or(x, y) => 1 + x.core_size() + y.core_size(),
        }
    }

    pub fn rename(&self, f: &impl Fn(&PropVar) -> PropVar) -> Self {
        match self {
            ModalFormula::Var(p) => ModalFormula::Var(f(p)),
            ModalFormula::Not(x) => Self::not(x.rename(f)),
            ModalFormula::Box(x) => Self::boxed(x.rename(f)),
            ModalFormula::Or(x, y) => Self::or(x.rename(f), y.rename(f)),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            ModalFormula::Var(p) => json!({"op": "var", "args": [p.as_str()]}),
            ModalFormula::Not(x) => json!({"op": "not", "args": [x.to_json()]}),
            ModalFormula::Box(x) => json!({"op": "box", "args": [x.to_json()]}),
            ModalFormula::Or(x, y) => json!({"op": "or", "args": [x.to_json(), y.to_json()]}),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self, JsonShapeError> {
        let (op, args) = split_op(v)?;
        match (op, args.len()) {
            ("var", 1) => Ok(ModalFormula::Var(PropVar::new(str_arg(&args[0])?)?)),
            ("not", 1) => Ok(Self::not(Self::from_json(&args[0])?)),
            ("box", 1) => Ok(Self::boxed(Self::from_json(&args[0])?)),
            ("or", 2) => Ok(Self::or(Self::from_json(&args[0])?, Self::from_json(&args[1])?)),
            _ => Err(JsonShapeError::BadNode(op.to_string(), args.len())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsonShapeError {
    #[error("expected an object with \"op\" and \"args\" fields")]
    NotANode,
    #[error("unknown node {0:?} with {1} argument(s)")]
    BadNode(String, usize),
    #[error("expected a string argument")]
    NotAString,
    #[error(transparent)]
    Ident(#[from] IdentError),
}

fn split_op(v: &Value) -> Result<(&str, &Vec<Value>), JsonShapeError> {
    let op = v.get("op").and_then(Value::as_str).ok_or(JsonShapeError::NotANode)?;
    let args = v.get("args").and_then(Value::as_array).ok_or(JsonShapeError::NotANode)?;
    Ok((op, args))
}

fn str_arg(v: &Value) -> Result<&str, JsonShapeError> {
    v.as_str().ok_or(JsonShapeError::NotAString)
}

macro_rules! json_serde {
    ($ty:ty) => {
        impl Serialize for $ty {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                self.to_json().serialize(s)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let v = Value::deserialize(d)?;
                <$ty>::from_json(&v).map_err(serde::de::Error::custom)
            }
        }
    };
}

json_serde!(L1Formula);
json_serde!(ModalFormula);

/// Structural views shared by both languages, used for subformula closure.
pub trait Children: Sized {
    fn children(&self) -> Vec<&Self>;
}

impl Children for L1Formula {
    fn children(&self) -> Vec<&Self> {
        match self {
            L1Formula::Epsilon(..) => vec![],
            L1Formula::Not(x) => vec![x],
            L1Formula::Or(x, y) => vec![x, y],
        }
    }
}

impl Children for ModalFormula {
    fn children(&self) -> Vec<&Self> {
        match self {
            ModalFormula::Var(_) => vec![],
            ModalFormula::Not(x) | ModalFormula::Box(x) => vec![x],
            ModalFormula::Or(x, y) => vec![x, y],
        }
    }
}

/// Distinct subformulas of the core tree, in left-to-right post-order of
/// first occurrence.
pub fn subformulas<F: Children + Clone + PartialEq>(formula: &F) -> Vec<F> {
    fn walk<F: Children + Clone + PartialEq>(f: &F, out: &mut Vec<F>) {
        for c in f.children() {
            walk(c, out);
        }
        if !out.contains(f) {
            out.push(f.clone());
        }
    }
    let mut out = Vec::new();
    walk(formula, &mut out);
    out
}
