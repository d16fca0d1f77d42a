//! Propositional ontology L1, its translations into the modal logics
//! K, KT, KB and KTB, and decision procedures for those logics.

pub mod enumerate;
pub mod formula;
pub mod harness;
pub mod kripke;
pub mod l1;
pub mod nnf;
pub mod parse;
pub mod print;
pub mod tableau;
pub mod translate;

pub use formula::{subformulas, L1Formula, LogicId, ModalFormula, NameVar, PropVar};
pub use kripke::{bounded_validity, check_frame, eval, BoundedVerdict, FrameClass, KripkeModel};
pub use nnf::{nnf, NnfFormula};
pub use parse::{parse_l1, parse_modal, ParseError};
pub use tableau::{prove, prove_with, ProveError, ProverConfig, TableauVerdict};
pub use translate::{default_varmap, translate, TranslationKind, VarMap};
