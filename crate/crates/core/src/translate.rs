//! Translations from L1 into the modal language.
//!
//! All three translations commute with `~` and `|`; they differ only in the
//! image of an atom `eps(a,b)`:
//!
//! | kind | image of `eps(a,b)` |
//! |------|---------------------|
//! | `I`  | `p_a & [](p_a <-> p_b)` |
//! | `B`  | `p_a & [](p_a -> p_b) & (p_b -> [](p_b -> p_a))` |
//! | `IM` | `(<>p_a -> p_a) & ([]p_a -> []p_b) & (<>p_b -> p_a)` |
//!
//! Three-conjunct images are nested to the left.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::{L1Formula, ModalFormula, NameVar, PropVar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TranslationKind {
    I,
    B,
    IM,
}

impl TranslationKind {
    pub const ALL: [TranslationKind; 3] = [TranslationKind::I, TranslationKind::B, TranslationKind::IM];

    pub fn name(self) -> &'static str {
        match self {
            TranslationKind::I => "I",
            TranslationKind::B => "B",
            TranslationKind::IM => "IM",
        }
    }

    /// Modal image of the atom `eps(a,b)` given the variables for `a` and `b`.
    pub fn atom_image(self, pa: &PropVar, pb: &PropVar) -> ModalFormula {
        use ModalFormula as M;
        let (a, b) = (M::var(pa), M::var(pb));
        match self {
            TranslationKind::I => M::and(a.clone(), M::boxed(M::iff(a, b))),
            TranslationKind::B => M::and(
                M::and(a.clone(), M::boxed(M::implies(a.clone(), b.clone()))),
                M::implies(b.clone(), M::boxed(M::implies(b, a))),
            ),
            TranslationKind::IM => M::and(
                M::and(
                    M::implies(M::diamond(a.clone()), a.clone()),
                    M::implies(M::boxed(a.clone()), M::boxed(b.clone())),
                ),
                M::implies(M::diamond(b), a),
            ),
        }
    }
}

impl fmt::Display for TranslationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for TranslationKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "i" => Ok(TranslationKind::I),
            "b" => Ok(TranslationKind::B),
            "im" => Ok(TranslationKind::IM),
            other => Err(format!("unknown translation {other:?} (expected i, b or im)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error("name variable {0} has no propositional variable in the map")]
    Unmapped(NameVar),
    #[error("variable map is not injective: {0} and {1} both map to {2}")]
    NotInjective(NameVar, NameVar, PropVar),
}

/// Injective assignment of propositional variables to name variables.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VarMap {
    map: BTreeMap<NameVar, PropVar>,
}

impl VarMap {
    pub fn new(pairs: impl IntoIterator<Item = (NameVar, PropVar)>) -> Result<Self, TranslateError> {
        let mut map = BTreeMap::new();
        let mut back: BTreeMap<PropVar, NameVar> = BTreeMap::new();
        for (n, p) in pairs {
            if let Some(other) = back.get(&p) {
                if *other != n {
                    return Err(TranslateError::NotInjective(other.clone(), n, p));
                }
            }
            back.insert(p.clone(), n.clone());
            map.insert(n, p);
        }
        Ok(VarMap { map })
    }

    pub fn get(&self, n: &NameVar) -> Option<&PropVar> {
        self.map.get(n)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&NameVar, &PropVar)> {
        self.map.iter()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// The decorated variable `p_<name>` for a name variable.
pub fn decorate(n: &NameVar) -> PropVar {
    PropVar::new(&format!("p_{n}")).expect("decorated identifier is well formed")
}

/// Maps every name variable `v` of `formula` to `p_v`.
pub fn default_varmap(formula: &L1Formula) -> VarMap {
    VarMap::new(formula.name_vars().into_iter().map(|n| {
        let p = decorate(&n);
        (n, p)
    }))
    .expect("decoration is injective")
}

pub fn translate(kind: TranslationKind, formula: &L1Formula, map: &VarMap) -> Result<ModalFormula, TranslateError> {
    Ok(match formula {
        L1Formula::Epsilon(a, b) => {
            let pa = map.get(a).ok_or_else(|| TranslateError::Unmapped(a.clone()))?;
            let pb = map.get(b).ok_or_else(|| TranslateError::Unmapped(b.clone()))?;
            kind.atom_image(pa, pb)
        }
        L1Formula::Not(x) => ModalFormula::not(translate(kind, x, map)?),
        L1Formula::Or(x, y) => ModalFormula::or(translate(kind, x, map)?, translate(kind, y, map)?),
    })
}

/// Translation under [`default_varmap`]; cannot fail.
pub fn translate_default(kind: TranslationKind, formula: &L1Formula) -> ModalFormula {
    translate(kind, formula, &default_varmap(formula)).expect("default map covers every name variable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_l1, parse_modal};

    fn l1(s: &str) -> L1Formula {
        parse_l1(s).unwrap()
    }

    fn m(s: &str) -> ModalFormula {
        parse_modal(s).unwrap()
    }

    fn n(s: &str) -> NameVar {
        NameVar::new(s).unwrap()
    }

    #[test]
    fn im_atom() {
        let t = translate_default(TranslationKind::IM, &l1("eps(a,b)"));
        assert_eq!(t, m("(<>p_a -> p_a) & ([]p_a -> []p_b) & (<>p_b -> p_a)"));
        assert_eq!(t.to_string(), "(<>p_a -> p_a) & ([]p_a -> []p_b) & (<>p_b -> p_a)");
    }

    #[test]
    fn im_negated_atom() {
        let t = translate_default(TranslationKind::IM, &l1("~eps(a,b)"));
        assert_eq!(t, ModalFormula::not(translate_default(TranslationKind::IM, &l1("eps(a,b)"))));
    }

    #[test]
    fn b_atom() {
        let t = translate_default(TranslationKind::B, &l1("eps(a,b)"));
        assert_eq!(t, m("p_a & [](p_a -> p_b) & (p_b -> [](p_b -> p_a))"));
    }

    #[test]
    fn i_atom_with_equal_names() {
        let t = translate_default(TranslationKind::I, &l1("eps(a,a)"));
        assert_eq!(t, m("p_a & [](p_a <-> p_a)"));
    }

    #[test]
    fn default_maps() {
        let names = |s: &str| -> Vec<(String, String)> {
            default_varmap(&l1(s)).iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
        };
        assert_eq!(names("eps(a,b)"), vec![("a".into(), "p_a".into()), ("b".into(), "p_b".into())]);
        assert_eq!(names("eps(a,a)"), vec![("a".into(), "p_a".into())]);
        assert_eq!(
            names("eps(a,c) & eps(b,c) -> eps(a,b) | eps(c,c)"),
            vec![("a".into(), "p_a".into()), ("b".into(), "p_b".into()), ("c".into(), "p_c".into())]
        );
    }

    #[test]
    fn unmapped_and_non_injective() {
        let map = VarMap::new([(n("a"), PropVar::new("p").unwrap())]).unwrap();
        assert_eq!(
            translate(TranslationKind::I, &l1("eps(a,b)"), &map),
            Err(TranslateError::Unmapped(n("b")))
        );
        let p = PropVar::new("p").unwrap();
        assert!(matches!(
            VarMap::new([(n("a"), p.clone()), (n("b"), p)]),
            Err(TranslateError::NotInjective(..))
        ));
    }
}
