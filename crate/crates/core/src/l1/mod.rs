//! The Hilbert system for L1: axiom matching, proof checking and a
//! theoremhood oracle.
//!
//! [`is_l1_theorem`] decides L1 by proving `B(φ)` in K. Its correctness
//! rests on B being faithful for K, which is assumed here, not proved.

pub mod axioms;
pub mod proof;
pub mod taut;

pub use axioms::{match_axiom, AxiomMatch, AxiomSchema, Substitution};
pub use proof::{check_proof, HilbertProof, Justification, ProofError, ProofErrorKind, ProofLine};
pub use taut::is_tautology_instance;

use std::collections::VecDeque;

use crate::enumerate::{sort_canonical, EnumerateError, Enumerator, Hit};
use crate::formula::{L1Formula, LogicId};
use crate::kripke::KripkeModel;
use crate::tableau::{prove_with, ProveError, ProverConfig, TableauVerdict};
use crate::translate::{translate_default, TranslationKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum L1Verdict {
    Theorem,
    /// A K-model falsifying `B(φ)` at `world`.
    NonTheorem { model: KripkeModel, world: usize },
}

pub fn decide_l1(formula: &L1Formula, config: ProverConfig) -> Result<L1Verdict, ProveError> {
    let image = translate_default(TranslationKind::B, formula);
    Ok(match prove_with(&image, LogicId::K, config)? {
        TableauVerdict::Valid { .. } => L1Verdict::Theorem,
        TableauVerdict::Invalid { model, world } => L1Verdict::NonTheorem { model, world },
    })
}

pub fn is_l1_theorem(formula: &L1Formula) -> Result<bool, ProveError> {
    is_l1_theorem_with(formula, ProverConfig::quiet())
}

pub fn is_l1_theorem_with(formula: &L1Formula, config: ProverConfig) -> Result<bool, ProveError> {
    Ok(matches!(decide_l1(formula, config)?, L1Verdict::Theorem))
}

/// L1 theorems over the first `names` name variables up to `max_size`,
/// by size and then printed form. Sizes are computed one at a time.
pub struct Theorems {
    enumerator: Enumerator,
    mask: u128,
    size: usize,
    pending: VecDeque<(String, Hit)>,
}

impl Iterator for Theorems {
    type Item = L1Formula;

    fn next(&mut self) -> Option<L1Formula> {
        while self.pending.is_empty() && self.size < self.enumerator.max_size() {
            self.size += 1;
            let mask = self.mask;
            let hits = self.enumerator.scan(self.size, |t| t & mask == mask);
            self.pending = sort_canonical(&self.enumerator, hits).into();
        }
        let (_, hit) = self.pending.pop_front()?;
        Some(self.enumerator.formula(&hit))
    }
}

pub fn enumerate_theorems(names: usize, max_size: usize) -> Result<Theorems, EnumerateError> {
    let enumerator = Enumerator::new(names, max_size, &[(TranslationKind::B, LogicId::K)])?;
    let mask = enumerator.mask(TranslationKind::B, LogicId::K)?;
    Ok(Theorems {
        enumerator,
        mask,
        size: 0,
        pending: VecDeque::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::NameVar;
    use crate::parse::parse_l1;

    fn thm(s: &str) -> bool {
        is_l1_theorem(&parse_l1(s).unwrap()).unwrap()
    }

    #[test]
    fn oracle_examples() {
        assert!(thm("eps(a,b) -> eps(a,a)"));
        assert!(!thm("eps(a,c) & eps(b,c) -> eps(a,b) | eps(c,c)"));
        assert!(!thm("eps(a,b)"));
    }

    #[test]
    fn non_theorem_countermodel_is_small() {
        match decide_l1(&parse_l1("eps(a,b)").unwrap(), ProverConfig::quiet()).unwrap() {
            L1Verdict::NonTheorem { model, .. } => assert!(model.worlds() <= 2),
            L1Verdict::Theorem => panic!("eps(a,b) is not a theorem"),
        }
    }

    #[test]
    fn axiom_instances_are_theorems() {
        let names: Vec<NameVar> = ["a", "b", "c"].iter().map(|s| NameVar::new(s).unwrap()).collect();
        for schema in AxiomSchema::EPSILON_SCHEMATA {
            for f in schema.instances(&names) {
                assert!(is_l1_theorem(&f).unwrap(), "{f}");
                assert!(match_axiom(&f).iter().any(|m| m.schema == schema));
            }
        }
    }

    #[test]
    fn small_enumerations() {
        let one: Vec<String> = enumerate_theorems(1, 3).unwrap().map(|f| f.to_string()).collect();
        assert_eq!(one, vec!["eps(a,a) -> eps(a,a)", "eps(a,a) <-> eps(a,a)"]);
        let four: Vec<String> = enumerate_theorems(1, 4).unwrap().map(|f| f.to_string()).collect();
        assert!(four.contains(&"eps(a,a) | ~eps(a,a)".to_string()));
        let names: Vec<NameVar> = ["a", "b", "c"].iter().map(|s| NameVar::new(s).unwrap()).collect();
        let three: std::collections::HashSet<L1Formula> = enumerate_theorems(3, 5).unwrap().collect();
        for schema in AxiomSchema::EPSILON_SCHEMATA {
            for f in schema.instances(&names) {
                assert!(three.contains(&f), "{f}");
            }
        }
        assert_eq!(enumerate_theorems(2, 0).unwrap().count(), 0);
    }

    #[test]
    fn enumeration_agrees_with_the_prover() {
        for f in enumerate_theorems(2, 5).unwrap() {
            assert!(is_l1_theorem(&f).unwrap(), "{f}");
        }
        let e = Enumerator::new(2, 5, &[(TranslationKind::B, LogicId::K)]).unwrap();
        let mask = e.mask(TranslationKind::B, LogicId::K).unwrap();
        for s in 1..=5 {
            for (hit, f) in e.formulas(s) {
                assert_eq!(hit.table & mask == mask, is_l1_theorem(&f).unwrap(), "{f}");
            }
        }
    }

    #[test]
    fn derived_facts() {
        assert!(!thm("eps(a,b) -> eps(b,b)"));
        assert!(thm("eps(a,b) & eps(b,c) -> eps(a,a) & eps(b,b)"));
        assert!(!thm("eps(a,b) & eps(b,c) -> eps(c,c)"));
        assert!(thm("eps(a,b) & eps(b,a) -> eps(a,a) & eps(b,b)"));
        assert!(!thm("eps(a,a)"));
        assert!(!thm("eps(a,b) -> eps(b,a)"));
    }
}
