use std::time::Instant;

use serde::Serialize;

use crate::enumerate::{eval_pattern, name_universe, realizable_patterns, sort_canonical, EnumerateError, Enumerator};
use crate::formula::{L1Formula, LogicId};
use crate::harness::replay::Countermodel;
use crate::l1::{is_l1_theorem_with, is_tautology_instance, AxiomSchema};
use crate::tableau::{prove_with, ProverConfig, TableauVerdict};
use crate::translate::{translate_default, TranslationKind};

/// Violations shown in full, with countermodels.
pub const MAX_EXAMPLES: usize = 20;
/// Theorems per size re-proved directly with the tableau.
pub const SAMPLE_PER_SIZE: usize = 25;

#[derive(Debug, Clone, Serialize)]
pub struct SizeRow {
    pub size: usize,
    pub formulas: u64,
    pub theorems: u64,
    pub violations: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub formula: String,
    pub size: usize,
    /// A KTB model falsifying the IM image, from the tableau.
    pub countermodel: Option<Countermodel>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SchemaRow {
    pub schema: AxiomSchema,
    pub instances: usize,
    pub invalid: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClosureRow {
    /// Formulas `A2 -> A1 & A2` for axiom instances `A1`, `A2`.
    pub formulas: usize,
    pub violations: usize,
    pub examples: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SoundnessReport {
    pub names: usize,
    pub max_size: usize,
    pub per_size: Vec<SizeRow>,
    pub formulas: u64,
    pub theorems: u64,
    pub violations: u64,
    pub examples: Vec<Violation>,
    pub axiom_instances: Vec<SchemaRow>,
    pub mp_closure: ClosureRow,
    /// Formulas re-proved directly with the tableau.
    pub cross_checked: usize,
    /// Formulas where the direct proofs disagree with the pattern tables.
    pub disagreements: Vec<String>,
    /// Formulas whose direct proof ran out of budget.
    pub budget_exhausted: Vec<String>,
    pub elapsed_ms: u128,
}

impl SoundnessReport {
    pub fn sound(&self) -> bool {
        self.violations == 0
            && self.mp_closure.violations == 0
            && self.axiom_instances.iter().all(|r| r.invalid.is_empty())
    }
}

fn im_countermodel(f: &L1Formula, config: ProverConfig) -> Result<Option<Countermodel>, crate::tableau::ProveError> {
    let image = translate_default(TranslationKind::IM, f);
    Ok(match prove_with(&image, LogicId::KTB, config)? {
        TableauVerdict::Valid { .. } => None,
        TableauVerdict::Invalid { model, world } => Some(Countermodel {
            logic: LogicId::KTB,
            model,
            world,
            falsifies: image.to_string(),
        }),
    })
}

/// Checks that every L1 theorem within the bounds has a KTB-valid IM image.
pub fn soundness_suite(names: usize, max_size: usize, config: ProverConfig) -> Result<SoundnessReport, EnumerateError> {
    let start = Instant::now();
    let targets = [(TranslationKind::B, LogicId::K), (TranslationKind::IM, LogicId::KTB)];
    let e = Enumerator::new(names, max_size, &targets)?;
    let b = e.mask(TranslationKind::B, LogicId::K)?;
    let im = e.mask(TranslationKind::IM, LogicId::KTB)?;
    let mut report = SoundnessReport {
        names,
        max_size,
        per_size: Vec::new(),
        formulas: 0,
        theorems: 0,
        violations: 0,
        examples: Vec::new(),
        axiom_instances: Vec::new(),
        mp_closure: ClosureRow {
            formulas: 0,
            violations: 0,
            examples: Vec::new(),
        },
        cross_checked: 0,
        disagreements: Vec::new(),
        budget_exhausted: Vec::new(),
        elapsed_ms: 0,
    };
    for size in 1..=max_size {
        let theorems = e.count(size, |t| t & b == b);
        let bad = e.scan(size, |t| t & b == b && t & im != im);
        let row = SizeRow {
            size,
            formulas: e.distinct_formulas(size),
            theorems,
            violations: bad.len() as u64,
        };
        if report.examples.len() < MAX_EXAMPLES && !bad.is_empty() {
            for (text, hit) in sort_canonical(&e, bad).into_iter().take(MAX_EXAMPLES - report.examples.len()) {
                let f = e.formula(&hit);
                let countermodel = match im_countermodel(&f, config) {
                    Ok(cm) => cm,
                    Err(_) => {
                        report.budget_exhausted.push(text.clone());
                        None
                    }
                };
                if countermodel.is_none() || !is_l1_theorem_with(&f, config).unwrap_or(true) {
                    report.disagreements.push(text.clone());
                }
                report.examples.push(Violation {
                    formula: text,
                    size,
                    countermodel,
                });
            }
        }
        // evenly spaced theorems, re-proved on both sides
        let step = (theorems as usize / SAMPLE_PER_SIZE).max(1);
        let sample: Vec<_> = e
            .scan(size, |t| t & b == b)
            .into_iter()
            .step_by(step)
            .take(SAMPLE_PER_SIZE)
            .collect();
        for hit in sample {
            let f = e.formula(&hit);
            let image = translate_default(TranslationKind::IM, &f);
            let direct = (is_l1_theorem_with(&f, config), prove_with(&image, LogicId::KTB, config));
            match direct {
                (Ok(thm), Ok(v)) => {
                    report.cross_checked += 1;
                    if !thm || v.is_valid() != (hit.table & im == im) {
                        report.disagreements.push(f.to_string());
                    }
                }
                _ => report.budget_exhausted.push(f.to_string()),
            }
        }
        report.formulas += row.formulas;
        report.theorems += row.theorems;
        report.violations += row.violations;
        report.per_size.push(row);
    }

    let universe = name_universe(names);
    let im_patterns = realizable_patterns(names, TranslationKind::IM, LogicId::KTB)?;
    let b_patterns = realizable_patterns(names, TranslationKind::B, LogicId::K)?;
    let holds_on = |f: &L1Formula, patterns: &[u32]| patterns.iter().all(|&p| eval_pattern(f, &universe, p) == Some(true));
    let mut axioms = Vec::new();
    for schema in AxiomSchema::EPSILON_SCHEMATA {
        let instances = schema.instances(&universe);
        let mut invalid = Vec::new();
        for f in &instances {
            match im_countermodel(f, config) {
                Ok(Some(_)) => invalid.push(f.to_string()),
                Ok(None) => {}
                Err(_) => report.budget_exhausted.push(f.to_string()),
            }
            if holds_on(f, &im_patterns) != !invalid.contains(&f.to_string()) {
                report.disagreements.push(f.to_string());
            }
        }
        report.axiom_instances.push(SchemaRow {
            schema,
            instances: instances.len(),
            invalid,
        });
        axioms.extend(instances);
    }

    // one round of modus ponens: from A1 and the tautology
    // A1 -> (A2 -> A1 & A2) infer A2 -> A1 & A2
    for a1 in &axioms {
        for a2 in &axioms {
            let conj = L1Formula::and(a1.clone(), a2.clone());
            let taut = L1Formula::implies(a1.clone(), L1Formula::implies(a2.clone(), conj.clone()));
            debug_assert!(is_tautology_instance(&taut));
            let derived = L1Formula::implies(a2.clone(), conj);
            report.mp_closure.formulas += 1;
            if !holds_on(&derived, &b_patterns) {
                report.disagreements.push(derived.to_string());
            } else if !holds_on(&derived, &im_patterns) {
                report.mp_closure.violations += 1;
                if report.mp_closure.examples.len() < MAX_EXAMPLES {
                    report.mp_closure.examples.push(derived.to_string());
                }
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}
