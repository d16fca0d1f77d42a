use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{sort_canonical, EnumerateError, Enumerator};
use crate::formula::{L1Formula, LogicId};
use crate::harness::replay::Countermodel;
use crate::kripke::{check_frame, eval};
use crate::l1::{decide_l1, L1Verdict};
use crate::parse::parse_l1;
use crate::tableau::{prove_with, ProveError, ProverConfig};
use crate::translate::{translate_default, TranslationKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStrategy {
    /// Realizable-pattern tables; candidates are re-proved directly.
    Patterns,
    /// Two tableau calls per formula.
    Direct,
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub kind: TranslationKind,
    pub logic: LogicId,
    pub names: usize,
    pub max_size: usize,
    pub strategy: SearchStrategy,
    pub config: ProverConfig,
}

#[derive(Debug, Clone, Serialize)]
pub struct Candidate {
    pub formula: String,
    pub size: usize,
    /// The image is valid in the searched logic.
    pub image_valid: bool,
    pub l1_theorem: bool,
    /// A K-model falsifying the B image.
    pub countermodel: Option<Countermodel>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub kind: TranslationKind,
    pub logic: LogicId,
    pub names: usize,
    pub max_size: usize,
    pub strategy: SearchStrategy,
    pub scanned: u64,
    pub candidates: Vec<Candidate>,
    /// Every candidate was confirmed by direct proofs.
    pub reverified: bool,
    pub disagreements: Vec<String>,
    pub budget_exhausted: Vec<String>,
    pub elapsed_ms: u128,
}

/// Both sides for one formula: `(image valid, L1 countermodel if any)`.
fn direct(
    f: &L1Formula,
    kind: TranslationKind,
    logic: LogicId,
    config: ProverConfig,
) -> Result<(bool, Option<Countermodel>), ProveError> {
    let image_valid = prove_with(&translate_default(kind, f), logic, config)?.is_valid();
    let countermodel = match decide_l1(f, config)? {
        L1Verdict::Theorem => None,
        L1Verdict::NonTheorem { model, world } => Some(Countermodel {
            logic: LogicId::K,
            model,
            world,
            falsifies: translate_default(TranslationKind::B, f).to_string(),
        }),
    };
    Ok((image_valid, countermodel))
}

fn candidate(f: &L1Formula, size: usize, image_valid: bool, countermodel: Option<Countermodel>) -> Candidate {
    Candidate {
        formula: f.to_string(),
        size,
        image_valid,
        l1_theorem: countermodel.is_none(),
        countermodel,
    }
}

/// Formulas within the bounds whose `kind` image is valid in `logic` but
/// which are not L1 theorems.
pub fn faithfulness_search(opts: SearchOptions) -> Result<SearchReport, EnumerateError> {
    let start = Instant::now();
    let SearchOptions {
        kind,
        logic,
        names,
        max_size,
        strategy,
        config,
    } = opts;
    let e = Enumerator::new(names, max_size, &[(TranslationKind::B, LogicId::K), (kind, logic)])?;
    let mut report = SearchReport {
        kind,
        logic,
        names,
        max_size,
        strategy,
        scanned: 0,
        candidates: Vec::new(),
        reverified: true,
        disagreements: Vec::new(),
        budget_exhausted: Vec::new(),
        elapsed_ms: 0,
    };
    match strategy {
        SearchStrategy::Patterns => {
            let b = e.mask(TranslationKind::B, LogicId::K)?;
            let target = e.mask(kind, logic)?;
            for size in 1..=max_size {
                report.scanned += e.distinct_formulas(size);
                let hits = e.scan(size, |t| t & target == target && t & b != b);
                let checked: Vec<(String, Result<(bool, Option<Countermodel>), ProveError>)> = sort_canonical(&e, hits)
                    .into_par_iter()
                    .map(|(text, hit)| {
                        let f = e.formula(&hit);
                        (text, direct(&f, kind, logic, config))
                    })
                    .collect();
                for (text, outcome) in checked {
                    match outcome {
                        Ok((true, Some(cm))) => {
                            report
                                .candidates
                                .push(candidate(&parse_l1(&text).expect("printed formula parses"), size, true, Some(cm)));
                        }
                        Ok(_) => report.disagreements.push(text),
                        Err(_) => {
                            report.scanned -= 1;
                            report.budget_exhausted.push(text);
                        }
                    }
                }
            }
        }
        SearchStrategy::Direct => {
            for size in 1..=max_size {
                let checked: Vec<(L1Formula, Result<(bool, Option<Countermodel>), ProveError>)> = e
                    .formulas(size)
                    .into_par_iter()
                    .map(|(_, f)| {
                        let outcome = direct(&f, kind, logic, config);
                        (f, outcome)
                    })
                    .collect();
                let mut sorted: Vec<(String, L1Formula, _)> =
                    checked.into_iter().map(|(f, o)| (f.to_string(), f, o)).collect();
                sorted.sort_by(|a, b| a.0.cmp(&b.0));
                for (text, f, outcome) in sorted {
                    match outcome {
                        Ok((valid, cm)) => {
                            report.scanned += 1;
                            if valid && cm.is_some() {
                                report.candidates.push(candidate(&f, size, valid, cm));
                            }
                        }
                        Err(_) => report.budget_exhausted.push(text),
                    }
                }
            }
        }
    }
    for c in &report.candidates {
        let cm = c.countermodel.as_ref().expect("candidates carry a countermodel");
        let b_image = crate::parse::parse_modal(&cm.falsifies).expect("image parses");
        if !check_frame(&cm.model, LogicId::K.into()) || eval(&cm.model, cm.world, &b_image) != Ok(false) {
            report.disagreements.push(c.formula.clone());
        }
    }
    report.reverified = report.disagreements.is_empty();
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

/// The formula given as a counterexample to the faithfulness of I.
pub const PHI_0: &str = "eps(a,c) & eps(b,c) -> eps(a,b) | eps(c,c)";

#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleReport {
    pub formula: String,
    pub i_image: String,
    /// Part (i): the I image is valid in K.
    pub i_valid_in_k: bool,
    /// Part (ii): the formula is not an L1 theorem.
    pub l1_theorem: bool,
    pub countermodel: Option<Countermodel>,
    /// The countermodel is a K-model falsifying the B image under `eval`.
    pub countermodel_checked: bool,
    pub control_formula: String,
    /// The B image of the control is valid in K.
    pub control_valid: bool,
}

impl CounterexampleReport {
    pub fn reproduced(&self) -> bool {
        self.i_valid_in_k && !self.l1_theorem && self.countermodel_checked && self.control_valid
    }
}

#[allow(non_snake_case)]
pub fn reproduce_I_counterexample(config: ProverConfig) -> Result<CounterexampleReport, ProveError> {
    let phi = parse_l1(PHI_0).expect("phi_0 parses");
    let (i_valid_in_k, countermodel) = direct(&phi, TranslationKind::I, LogicId::K, config)?;
    let countermodel_checked = countermodel.as_ref().is_some_and(|cm| {
        check_frame(&cm.model, LogicId::K.into())
            && eval(&cm.model, cm.world, &translate_default(TranslationKind::B, &phi)) == Ok(false)
    });
    let control = parse_l1("eps(a,b) -> eps(a,a)").expect("control parses");
    let control_valid = prove_with(&translate_default(TranslationKind::B, &control), LogicId::K, config)?.is_valid();
    Ok(CounterexampleReport {
        formula: phi.to_string(),
        i_image: translate_default(TranslationKind::I, &phi).to_string(),
        i_valid_in_k,
        l1_theorem: countermodel.is_none(),
        countermodel,
        countermodel_checked,
        control_formula: control.to_string(),
        control_valid,
    })
}
