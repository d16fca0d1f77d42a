//! Negation normal form for modal formulas.
//!
//! The primitive core has no conjunction or diamond, so NNF lives in its own
//! type where negation can only sit on a variable.

use std::fmt;

use crate::formula::{ModalFormula, PropVar};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NnfFormula {
    /// `Lit(p, true)` is `p`, `Lit(p, false)` is `~p`.
    Lit(PropVar, bool),
    And(Box<NnfFormula>, Box<NnfFormula>),
    Or(Box<NnfFormula>, Box<NnfFormula>),
    Box(Box<NnfFormula>),
    Diamond(Box<NnfFormula>),
}

pub fn nnf(formula: &ModalFormula) -> NnfFormula {
    to_nnf(formula, true)
}

fn to_nnf(f: &ModalFormula, positive: bool) -> NnfFormula {
    match f {
        ModalFormula::Var(p) => NnfFormula::Lit(p.clone(), positive),
        ModalFormula::Not(x) => to_nnf(x, !positive),
        ModalFormula::Or(x, y) => {
            let (x, y) = (Box::new(to_nnf(x, positive)), Box::new(to_nnf(y, positive)));
            if positive {
                NnfFormula::Or(x, y)
            } else {
                NnfFormula::And(x, y)
            }
        }
        ModalFormula::Box(x) => {
            let x = Box::new(to_nnf(x, positive));
            if positive {
                NnfFormula::Box(x)
            } else {
                NnfFormula::Diamond(x)
            }
        }
    }
}

impl NnfFormula {
    /// Expands back into the primitive core.
    pub fn to_modal(&self) -> ModalFormula {
        match self {
            NnfFormula::Lit(p, true) => ModalFormula::var(p),
            NnfFormula::Lit(p, false) => ModalFormula::not(ModalFormula::var(p)),
            NnfFormula::And(x, y) => ModalFormula::and(x.to_modal(), y.to_modal()),
            NnfFormula::Or(x, y) => ModalFormula::or(x.to_modal(), y.to_modal()),
            NnfFormula::Box(x) => ModalFormula::boxed(x.to_modal()),
            NnfFormula::Diamond(x) => ModalFormula::diamond(x.to_modal()),
        }
    }

    pub fn negate(&self) -> NnfFormula {
        match self {
            NnfFormula::Lit(p, s) => NnfFormula::Lit(p.clone(), !s),
            NnfFormula::And(x, y) => NnfFormula::Or(Box::new(x.negate()), Box::new(y.negate())),
            NnfFormula::Or(x, y) => NnfFormula::And(Box::new(x.negate()), Box::new(y.negate())),
            NnfFormula::Box(x) => NnfFormula::Diamond(Box::new(x.negate())),
            NnfFormula::Diamond(x) => NnfFormula::Box(Box::new(x.negate())),
        }
    }

    /// Negation occurs only directly on variables; holds for every value of
    /// this type and is kept as a checkable predicate for tests.
    pub fn is_nnf(&self) -> bool {
        match self {
            NnfFormula::Lit(..) => true,
            NnfFormula::And(x, y) | NnfFormula::Or(x, y) => x.is_nnf() && y.is_nnf(),
            NnfFormula::Box(x) | NnfFormula::Diamond(x) => x.is_nnf(),
        }
    }
}

impl fmt::Display for NnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_modal())
    }
}

impl fmt::Debug for NnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Nnf[{self}]")
    }
}
