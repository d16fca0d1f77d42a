//! Classical tautology checking for L1 and for propositional skeletons.

use std::collections::BTreeMap;

use crate::formula::{L1Formula, ModalFormula, NameVar, PropVar};

/// More distinct atoms than this are not truth-tabled.
pub const MAX_TABLE_ATOMS: usize = 24;

fn atoms(f: &L1Formula) -> Vec<(NameVar, NameVar)> {
    let mut out: Vec<(NameVar, NameVar)> = Vec::new();
    f.visit_atoms(&mut |a, b| {
        if !out.iter().any(|(x, y)| x == a && y == b) {
            out.push((a.clone(), b.clone()));
        }
    });
    out
}

fn eval_l1(f: &L1Formula, atoms: &[(NameVar, NameVar)], row: u32) -> bool {
    match f {
        L1Formula::Epsilon(a, b) => {
            let i = atoms.iter().position(|(x, y)| x == a && y == b).unwrap();
            (row >> i) & 1 == 1
        }
        L1Formula::Not(x) => !eval_l1(x, atoms, row),
        L1Formula::Or(x, y) => eval_l1(x, atoms, row) || eval_l1(y, atoms, row),
    }
}

/// True when replacing distinct epsilon atoms by distinct propositional
/// letters yields a classical tautology. Returns false past
/// [`MAX_TABLE_ATOMS`].
pub fn is_tautology_instance(f: &L1Formula) -> bool {
    let atoms = atoms(f);
    if atoms.len() > MAX_TABLE_ATOMS {
        return false;
    }
    (0..1u32 << atoms.len()).all(|row| eval_l1(f, &atoms, row))
}

/// Boolean value of a box-free modal formula; `None` if it contains a box.
fn eval_prop(f: &ModalFormula, vars: &[PropVar], row: u32) -> Option<bool> {
    Some(match f {
        ModalFormula::Var(p) => (row >> vars.binary_search(p).unwrap()) & 1 == 1,
        ModalFormula::Not(x) => !eval_prop(x, vars, row)?,
        ModalFormula::Or(x, y) => eval_prop(x, vars, row)? || eval_prop(y, vars, row)?,
        ModalFormula::Box(_) => return None,
    })
}

pub fn is_propositional_tautology(f: &ModalFormula) -> Option<bool> {
    let vars: Vec<PropVar> = f.prop_vars().into_iter().collect();
    if vars.len() > MAX_TABLE_ATOMS {
        return Some(false);
    }
    for row in 0..1u32 << vars.len() {
        if !eval_prop(f, &vars, row)? {
            return Some(false);
        }
    }
    Some(true)
}

/// Replaces each letter of a skeleton by its L1 formula.
pub fn substitute(skeleton: &ModalFormula, map: &BTreeMap<PropVar, L1Formula>) -> Option<L1Formula> {
    Some(match skeleton {
        ModalFormula::Var(p) => map.get(p)?.clone(),
        ModalFormula::Not(x) => L1Formula::not(substitute(x, map)?),
        ModalFormula::Or(x, y) => L1Formula::or(substitute(x, map)?, substitute(y, map)?),
        ModalFormula::Box(_) => return None,
    })
}
