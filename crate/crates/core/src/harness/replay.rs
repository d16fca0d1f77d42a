//! Step-by-step replay of the soundness argument for the IM translation
//! on the three epsilon axioms.

use serde::Serialize;

use crate::formula::{LogicId, ModalFormula};
use crate::kripke::KripkeModel;
use crate::l1::AxiomSchema;
use crate::parse::{parse_l1, parse_modal};
use crate::tableau::{prove_with, ProveError, ProverConfig, TableauVerdict};
use crate::translate::{translate_default, TranslationKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckMode {
    /// Hypothesis of the case; not checked.
    Assumption,
    /// The conjunction of the dependencies implies the step.
    Implication,
    /// The step is `[]dep` and `dep` is valid on its own.
    Necessitation,
    /// The step is a conjunction of dependency formulas, and follows from them.
    ConjunctionAssembly,
}

#[derive(Debug, Clone)]
pub struct ReplayStep {
    pub id: &'static str,
    pub formula: ModalFormula,
    pub logic: LogicId,
    pub deps: Vec<&'static str>,
    pub mode: CheckMode,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Countermodel {
    pub logic: LogicId,
    pub model: KripkeModel,
    pub world: usize,
    /// The formula the model falsifies.
    pub falsifies: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StepResult {
    pub id: String,
    pub formula: String,
    pub logic: LogicId,
    pub deps: Vec<String>,
    pub mode: CheckMode,
    pub passed: bool,
    pub note: Option<String>,
    pub countermodel: Option<Countermodel>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AssembledResult {
    pub axiom: AxiomSchema,
    pub formula: String,
    pub valid: bool,
    pub countermodel: Option<Countermodel>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReplayReport {
    pub steps: Vec<StepResult>,
    pub assembled: Vec<AssembledResult>,
}

impl ReplayReport {
    /// Numbered steps only; the case assumptions are not counted.
    pub fn numbered(&self) -> impl Iterator<Item = &StepResult> {
        self.steps.iter().filter(|s| s.mode != CheckMode::Assumption)
    }

    pub fn failed_steps(&self) -> Vec<&str> {
        self.numbered().filter(|s| !s.passed).map(|s| s.id.as_str()).collect()
    }

    pub fn all_passed(&self) -> bool {
        self.numbered().all(|s| s.passed) && self.assembled.iter().all(|a| a.valid)
    }
}

fn m(s: &str) -> ModalFormula {
    parse_modal(s).expect("replay formula parses")
}

fn im(s: &str) -> ModalFormula {
    translate_default(TranslationKind::IM, &parse_l1(s).expect("replay formula parses"))
}

/// The numbered steps of the three cases, with their assumptions, in order.
pub fn replay_steps() -> Vec<ReplayStep> {
    use CheckMode::*;
    use LogicId::*;
    let step = |id, formula, logic, deps: &[&'static str], mode| ReplayStep {
        id,
        formula,
        logic,
        deps: deps.to_vec(),
        mode,
    };
    vec![
        // Ax1
        step("*", im("eps(a,b)"), KTB, &[], Assumption),
        step("1.1", m("<>p_a -> p_a"), KTB, &["*"], Implication),
        step("1.2", m("[]p_a -> []p_a"), K, &[], Implication),
        step(
            "1.3",
            m("(<>p_a -> p_a) & ([]p_a -> []p_a) & (<>p_a -> p_a)"),
            KTB,
            &["1.1", "1.2"],
            ConjunctionAssembly,
        ),
        step("1.4", im("eps(a,a)"), KTB, &["1.3"], Implication),
        step("1.5", im("eps(a,b) -> eps(a,a)"), KTB, &["*", "1.4"], Implication),
        // Ax2
        step("**", im("eps(a,b) & eps(b,c)"), KTB, &[], Assumption),
        step("2.1", im("eps(a,b)"), KTB, &["**"], Implication),
        step("2.2", im("eps(b,c)"), KTB, &["**"], Implication),
        step("2.3", m("(<>p_a -> p_a) & ([]p_a -> []p_b) & (<>p_b -> p_a)"), KTB, &["2.1"], Implication),
        step("2.4", m("(<>p_b -> p_b) & ([]p_b -> []p_c) & (<>p_c -> p_b)"), KTB, &["2.2"], Implication),
        step("2.5", m("<>p_a -> p_a"), KTB, &["2.3"], Implication),
        step("2.6", m("[]p_a -> []p_b"), KTB, &["2.3"], Implication),
        step("2.7", m("[]p_b -> []p_c"), KTB, &["2.4"], Implication),
        step("2.8", m("[]p_a -> []p_c"), KTB, &["2.6", "2.7"], Implication),
        step("2.9", m("<>p_b -> p_a"), KTB, &["2.3"], Implication),
        step("2.10", m("[](<>p_b -> p_a)"), KTB, &["2.9"], Necessitation),
        step("2.11", m("[]<>p_b -> []p_a"), K, &["2.10"], Implication),
        step("2.12", m("[]p_a -> p_a"), KT, &[], Implication),
        step("2.13", m("[]<>p_b -> p_a"), KTB, &["2.11", "2.12"], Implication),
        step("2.14", m("p_b -> []<>p_b"), KB, &[], Implication),
        step("2.15", m("<>p_c -> p_b"), KTB, &["2.4"], Implication),
        step("2.16", m("<>p_c -> p_a"), KTB, &["2.13", "2.14", "2.15"], Implication),
        step(
            "2.17",
            m("(<>p_a -> p_a) & ([]p_a -> []p_c) & (<>p_c -> p_a)"),
            KTB,
            &["2.5", "2.8", "2.16"],
            ConjunctionAssembly,
        ),
        step("2.18", im("eps(a,c)"), KTB, &["2.17"], Implication),
        step("2.19", im("eps(a,b) & eps(b,c) -> eps(a,c)"), KTB, &["**", "2.18"], Implication),
        // Ax3
        step("***", im("eps(a,b) & eps(b,c)"), KTB, &[], Assumption),
        step("3.1", im("eps(a,b)"), KTB, &["***"], Implication),
        step("3.2", im("eps(b,c)"), KTB, &["***"], Implication),
        step("3.3", m("(<>p_a -> p_a) & ([]p_a -> []p_b) & (<>p_b -> p_a)"), KTB, &["3.1"], Implication),
        step("3.4", m("(<>p_b -> p_b) & ([]p_b -> []p_c) & (<>p_c -> p_b)"), KTB, &["3.2"], Implication),
        step("3.5", m("<>p_b -> p_b"), KTB, &["3.4"], Implication),
        step("3.6", m("<>p_b -> p_a"), KTB, &["3.3"], Implication),
        step("3.7", m("[](<>p_b -> p_a)"), KTB, &["3.6"], Necessitation),
        step("3.8", m("[]<>p_b -> []p_a"), K, &["3.7"], Implication),
        step("3.9", m("p_b -> []<>p_b"), KB, &[], Implication),
        step("3.10", m("[]p_b -> p_b"), KT, &[], Implication),
        step("3.11", m("[]p_b -> []p_a"), KTB, &["3.8", "3.9", "3.10"], Implication),
        step("3.12", m("<>p_a -> p_a"), KTB, &["3.3"], Implication),
        step("3.13", m("p_a -> []<>p_a"), KB, &[], Implication),
        step("3.14", m("<>p_a -> []<>p_a"), KTB, &["3.12", "3.13"], Implication),
        step("3.15", m("[](<>p_a -> p_a)"), KTB, &["3.12"], Necessitation),
        step("3.16", m("[]<>p_a -> []p_a"), K, &["3.15"], Implication),
        step("3.17", m("<>p_a -> []p_a"), KTB, &["3.14", "3.16"], Implication),
        step("3.18", m("[]p_a -> []p_b"), KTB, &["3.3"], Implication),
        step("3.19", m("<>p_a -> []p_b"), KTB, &["3.17", "3.18"], Implication),
        step("3.20", m("[]p_b -> p_b"), KT, &[], Implication),
        step("3.21", m("<>p_a -> p_b"), KTB, &["3.19", "3.20"], Implication),
        step(
            "3.22",
            m("(<>p_b -> p_b) & ([]p_b -> []p_a) & (<>p_a -> p_b)"),
            KTB,
            &["3.5", "3.11", "3.21"],
            ConjunctionAssembly,
        ),
        step("3.23", im("eps(b,a)"), KTB, &["3.22"], Implication),
        step("3.24", im("eps(a,b) & eps(b,c) -> eps(b,a)"), KTB, &["***", "3.23"], Implication),
    ]
}

/// `None` if valid, otherwise a countermodel.
fn refute(formula: &ModalFormula, logic: LogicId, config: ProverConfig) -> Result<Option<Countermodel>, ProveError> {
    Ok(match prove_with(formula, logic, config)? {
        TableauVerdict::Valid { .. } => None,
        TableauVerdict::Invalid { model, world } => Some(Countermodel {
            logic,
            model,
            world,
            falsifies: formula.to_string(),
        }),
    })
}

fn conjuncts(f: &ModalFormula) -> Vec<&ModalFormula> {
    match crate::print::view(f) {
        crate::print::View::And(x, y) => {
            let mut out = conjuncts(x);
            out.extend(conjuncts(y));
            out
        }
        _ => vec![f],
    }
}

fn check_step(step: &ReplayStep, deps: &[&ModalFormula], config: ProverConfig) -> Result<StepResult, ProveError> {
    let mut result = StepResult {
        id: step.id.to_string(),
        formula: step.formula.to_string(),
        logic: step.logic,
        deps: step.deps.iter().map(|d| d.to_string()).collect(),
        mode: step.mode,
        passed: true,
        note: None,
        countermodel: None,
    };
    let implication = || match ModalFormula::conjunction(deps.iter().map(|&d| d.clone())) {
        Some(c) => ModalFormula::implies(c, step.formula.clone()),
        None => step.formula.clone(),
    };
    match step.mode {
        CheckMode::Assumption => {}
        CheckMode::Implication | CheckMode::ConjunctionAssembly => {
            let goal = implication();
            // the claimed logic first, then KTB when that is stronger
            for logic in [step.logic, LogicId::KTB] {
                if let Some(cm) = refute(&goal, logic, config)? {
                    result.passed = false;
                    result.note = Some(format!("dependencies do not imply the step in {logic}"));
                    result.countermodel = Some(cm);
                    break;
                }
            }
            if result.passed && step.mode == CheckMode::ConjunctionAssembly {
                let parts = conjuncts(&step.formula);
                if let Some(stray) = parts.iter().find(|p| !deps.contains(p)) {
                    result.passed = false;
                    result.note = Some(format!("conjunct {stray} is not a dependency"));
                }
            }
        }
        CheckMode::Necessitation => {
            let premise = deps[0];
            if step.formula != ModalFormula::boxed(premise.clone()) {
                result.passed = false;
                result.note = Some("step is not the necessitation of its premise".into());
            } else if let Some(cm) = refute(premise, step.logic, config)? {
                result.passed = false;
                result.note = Some(format!(
                    "premise ({}) is not valid in {}: it rests on the case assumption, so necessitation does not apply",
                    step.deps[0], step.logic
                ));
                result.countermodel = Some(cm);
            }
        }
    }
    Ok(result)
}

pub fn replay_theorem31() -> Result<ReplayReport, ProveError> {
    replay_theorem31_with(ProverConfig::quiet())
}

pub fn replay_theorem31_with(config: ProverConfig) -> Result<ReplayReport, ProveError> {
    let steps = replay_steps();
    let mut results = Vec::with_capacity(steps.len());
    for (i, step) in steps.iter().enumerate() {
        let deps: Vec<&ModalFormula> = step
            .deps
            .iter()
            .map(|d| {
                &steps[..i]
                    .iter()
                    .rev()
                    .find(|s| s.id == *d)
                    .unwrap_or_else(|| panic!("step {} cites unknown {d}", step.id))
                    .formula
            })
            .collect();
        results.push(check_step(step, &deps, config)?);
    }
    let mut assembled = Vec::new();
    for (axiom, text) in [
        (AxiomSchema::Ax1, "eps(a,b) -> eps(a,a)"),
        (AxiomSchema::Ax2, "eps(a,b) & eps(b,c) -> eps(a,c)"),
        (AxiomSchema::Ax3, "eps(a,b) & eps(b,c) -> eps(b,a)"),
    ] {
        let formula = im(text);
        let countermodel = refute(&formula, LogicId::KTB, config)?;
        assembled.push(AssembledResult {
            axiom,
            formula: formula.to_string(),
            valid: countermodel.is_none(),
            countermodel,
        });
    }
    Ok(ReplayReport {
        steps: results,
        assembled,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kripke::{check_frame, eval};

    #[test]
    fn step_table_is_complete() {
        let steps = replay_steps();
        let numbered: Vec<&str> = steps
            .iter()
            .filter(|s| s.mode != CheckMode::Assumption)
            .map(|s| s.id)
            .collect();
        assert_eq!(numbered.len(), 48);
        for (case, count) in [(1, 5), (2, 19), (3, 24)] {
            for k in 1..=count {
                assert!(numbered.contains(&format!("{case}.{k}").as_str()));
            }
        }
    }

    #[test]
    fn spot_checks() {
        let report = replay_theorem31().unwrap();
        let get = |id: &str| report.steps.iter().find(|s| s.id == id).unwrap();
        assert!(get("1.2").passed && get("1.2").logic == LogicId::K);
        assert!(get("2.12").passed && get("2.12").logic == LogicId::KT);
        assert!(get("3.9").passed && get("3.9").logic == LogicId::KB);
        assert!(report.assembled[0].valid);
        assert!(report.assembled[1].valid);
    }

    #[test]
    fn necessitation_steps_and_ax3_fail_with_real_countermodels() {
        let report = replay_theorem31().unwrap();
        assert_eq!(report.failed_steps(), vec!["2.10", "3.7", "3.15"]);
        assert!(!report.assembled[2].valid);
        let failures = report
            .steps
            .iter()
            .filter_map(|s| s.countermodel.as_ref())
            .chain(report.assembled.iter().filter_map(|a| a.countermodel.as_ref()));
        for cm in failures {
            assert!(check_frame(&cm.model, cm.logic.into()));
            assert!(!eval(&cm.model, cm.world, &m(&cm.falsifies)).unwrap());
        }
    }
}
