//! Canonical text output.
//!
//! The printer re-sugars the primitive core: `~(~x | ~y)` prints as
//! `x & y`, `~x | y` as `x -> y`, `~[]~x` as `<>x`, and the expansion of a
//! biconditional as `x <-> y`. Parsing the output expands the sugar back
//! into exactly the same core tree.

use std::fmt;

use crate::formula::{L1Formula, ModalFormula};

/// Primitive structure of a core tree, shared by both languages.
pub trait CoreShape: PartialEq {
    fn as_not(&self) -> Option<&Self>;
    fn as_or(&self) -> Option<(&Self, &Self)>;
    fn as_box(&self) -> Option<&Self>;
    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

impl CoreShape for L1Formula {
    fn as_not(&self) -> Option<&Self> {
        match self {
            L1Formula::Not(x) => Some(x),
            _ => None,
        }
    }

    fn as_or(&self) -> Option<(&Self, &Self)> {
        match self {
            L1Formula::Or(x, y) => Some((x, y)),
            _ => None,
        }
    }

    fn as_box(&self) -> Option<&Self> {
        None
    }

    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            L1Formula::Epsilon(a, b) => write!(f, "eps({a},{b})"),
            _ => unreachable!("not an atom"),
        }
    }
}

impl CoreShape for ModalFormula {
    fn as_not(&self) -> Option<&Self> {
        match self {
            ModalFormula::Not(x) => Some(x),
            _ => None,
        }
    }

    fn as_or(&self) -> Option<(&Self, &Self)> {
        match self {
            ModalFormula::Or(x, y) => Some((x, y)),
            _ => None,
        }
    }

    fn as_box(&self) -> Option<&Self> {
        match self {
            ModalFormula::Box(x) => Some(x),
            _ => None,
        }
    }

    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModalFormula::Var(p) => write!(f, "{p}"),
            _ => unreachable!("not an atom"),
        }
    }
}

/// Top-level connective of a formula as the printer sees it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum View<'a, F> {
    Atom(&'a F),
    Not(&'a F),
    Box(&'a F),
    Diamond(&'a F),
    And(&'a F, &'a F),
    Or(&'a F, &'a F),
    Implies(&'a F, &'a F),
    Iff(&'a F, &'a F),
}

pub fn view<F: CoreShape>(f: &F) -> View<'_, F> {
    if let Some(x) = f.as_not() {
        if let Some((l, r)) = x.as_or() {
            if let (Some(l), Some(r)) = (l.as_not(), r.as_not()) {
                if let (Some((la, lb)), Some((ra, rb))) = (l.as_or(), r.as_or()) {
                    if let (Some(a), Some(b)) = (la.as_not(), ra.as_not()) {
                        if a == rb && lb == b {
                            return View::Iff(a, b);
                        }
                    }
                }
                return View::And(l, r);
            }
        }
        if let Some(inner) = x.as_box().and_then(CoreShape::as_not) {
            return View::Diamond(inner);
        }
        return View::Not(x);
    }
    if let Some((l, r)) = f.as_or() {
        return match l.as_not() {
            Some(a) => View::Implies(a, r),
            None => View::Or(l, r),
        };
    }
    if let Some(x) = f.as_box() {
        return View::Box(x);
    }
    View::Atom(f)
}

/// Node count of the sugared form: atoms plus every printed connective.
/// This is the size measure used by the formula enumerator.
pub fn sugared_size<F: CoreShape>(f: &F) -> usize {
    match view(f) {
        View::Atom(_) => 1,
        View::Not(x) | View::Box(x) | View::Diamond(x) => 1 + sugared_size(x),
        View::And(x, y) | View::Or(x, y) | View::Implies(x, y) | View::Iff(x, y) => {
            1 + sugared_size(x) + sugared_size(y)
        }
    }
}

const PREC_IFF: u8 = 1;
const PREC_IMPLIES: u8 = 2;
const PREC_OR: u8 = 3;
const PREC_AND: u8 = 4;
const PREC_PREFIX: u8 = 5;

fn write_sugared<F: CoreShape>(x: &F, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    // (prec, op, left min, right min) for binary nodes
    let binary = |prec: u8, right_assoc: bool| {
        if right_assoc {
            (prec, prec + 1, prec)
        } else {
            (prec, prec, prec + 1)
        }
    };
    let (prec, op, l, r, lmin, rmin) = match view(x) {
        View::Atom(a) => return a.fmt_atom(f),
        View::Not(y) => return write_prefix("~", y, min, f),
        View::Box(y) => return write_prefix("[]", y, min, f),
        View::Diamond(y) => return write_prefix("<>", y, min, f),
        View::And(l, r) => {
            let (p, lm, rm) = binary(PREC_AND, false);
            (p, " & ", l, r, lm, rm)
        }
        View::Or(l, r) => {
            let (p, lm, rm) = binary(PREC_OR, false);
            (p, " | ", l, r, lm, rm)
        }
        View::Implies(l, r) => {
            let (p, lm, rm) = binary(PREC_IMPLIES, true);
            (p, " -> ", l, r, lm, rm)
        }
        View::Iff(l, r) => {
            let (p, lm, rm) = binary(PREC_IFF, true);
            (p, " <-> ", l, r, lm, rm)
        }
    };
    let paren = prec < min;
    if paren {
        f.write_str("(")?;
    }
    write_sugared(l, lmin, f)?;
    f.write_str(op)?;
    write_sugared(r, rmin, f)?;
    if paren {
        f.write_str(")")?;
    }
    Ok(())
}

fn write_prefix<F: CoreShape>(op: &str, y: &F, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    debug_assert!(min <= PREC_PREFIX);
    let _ = min;
    f.write_str(op)?;
    write_sugared(y, PREC_PREFIX, f)
}

fn write_core<F: CoreShape>(x: &F, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if let Some(y) = x.as_not() {
        f.write_str("~")?;
        write_core(y, PREC_PREFIX, f)
    } else if let Some(y) = x.as_box() {
        f.write_str("[]")?;
        write_core(y, PREC_PREFIX, f)
    } else if let Some((l, r)) = x.as_or() {
        let paren = PREC_OR < min;
        if paren {
            f.write_str("(")?;
        }
        write_core(l, PREC_OR, f)?;
        f.write_str(" | ")?;
        write_core(r, PREC_OR + 1, f)?;
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    } else {
        x.fmt_atom(f)
    }
}

/// Display adapter printing only the primitive connectives (`~`, `|`, `[]`).
pub struct CoreDisplay<'a, F>(pub &'a F);

impl<F: CoreShape> fmt::Display for CoreDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_core(self.0, 0, f)
    }
}

pub fn print_core<F: CoreShape>(x: &F) -> String {
    CoreDisplay(x).to_string()
}

impl fmt::Display for L1Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sugared(self, 0, f)
    }
}

impl fmt::Display for ModalFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sugared(self, 0, f)
    }
}

impl fmt::Debug for L1Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L1[{self}]")
    }
}

impl fmt::Debug for ModalFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{NameVar, PropVar};

    fn e(a: &str, b: &str) -> L1Formula {
        L1Formula::eps(&NameVar::new(a).unwrap(), &NameVar::new(b).unwrap())
    }

    fn p(s: &str) -> ModalFormula {
        ModalFormula::var(&PropVar::new(s).unwrap())
    }

    #[test]
    fn atom() {
        assert_eq!(e("a", "b").to_string(), "eps(a,b)");
    }

    #[test]
    fn negated_disjunction_keeps_parens() {
        let f = L1Formula::not(L1Formula::or(e("a", "b"), e("b", "c")));
        assert_eq!(f.to_string(), "~(eps(a,b) | eps(b,c))");
    }

    #[test]
    fn sugar_and_associativity() {
        let f = ModalFormula::implies(p("p"), ModalFormula::implies(p("q"), p("r")));
        assert_eq!(f.to_string(), "p -> q -> r");
        let g = ModalFormula::implies(ModalFormula::implies(p("p"), p("q")), p("r"));
        assert_eq!(g.to_string(), "(p -> q) -> r");
        let h = ModalFormula::and(ModalFormula::and(p("p"), p("q")), p("r"));
        assert_eq!(h.to_string(), "p & q & r");
        let i = ModalFormula::and(p("p"), ModalFormula::and(p("q"), p("r")));
        assert_eq!(i.to_string(), "p & (q & r)");
        assert_eq!(ModalFormula::iff(p("p"), p("q")).to_string(), "p <-> q");
        assert_eq!(ModalFormula::diamond(ModalFormula::not(p("p"))).to_string(), "<>~p");
        assert_eq!(ModalFormula::boxed(ModalFormula::or(p("p"), p("q"))).to_string(), "[](p | q)");
    }

    #[test]
    fn core_printing() {
        let f = ModalFormula::implies(ModalFormula::diamond(p("p")), p("p"));
        assert_eq!(print_core(&f), "~~[]~p | p");
        let g = L1Formula::and(e("a", "b"), e("b", "c"));
        assert_eq!(print_core(&g), "~(~eps(a,b) | ~eps(b,c))");
    }

    #[test]
    fn sizes() {
        let f = L1Formula::implies(
            L1Formula::and(e("a", "c"), e("b", "c")),
            L1Formula::or(e("a", "b"), e("c", "c")),
        );
        assert_eq!(sugared_size(&f), 7);
        assert_eq!(f.core_size(), 11);
    }
}
