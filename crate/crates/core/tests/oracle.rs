mod common;

use common::random_formula;
use l1modal::enumerate::realizable_patterns;
use l1modal::{
    bounded_validity, check_frame, eval, parse_modal, prove_with, BoundedVerdict, LogicId, ModalFormula, ProverConfig,
    TableauVerdict, TranslationKind,
};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn assert_countermodel(f: &ModalFormula, logic: LogicId, verdict: &TableauVerdict) {
    if let TableauVerdict::Invalid { model, world } = verdict {
        assert!(check_frame(model, logic.into()), "{logic}: {f}");
        assert_eq!(eval(model, *world, f), Ok(false), "{logic}: {f}");
    }
}

#[test]
fn tableau_agrees_with_bounded_search() {
    let mut rng = StdRng::seed_from_u64(0x11_6d6f_6461_6c);
    let mut valid = 0;
    for _ in 0..1000 {
        let f = random_formula(&mut rng, 2, 8);
        assert!(f.modal_depth() <= 2);
        for logic in LogicId::ALL {
            let verdict = prove_with(&f, logic, ProverConfig::quiet()).unwrap();
            assert_countermodel(&f, logic, &verdict);
            let bounded = bounded_validity(&f, logic.into(), 4).unwrap();
            if verdict.is_valid() {
                valid += 1;
                assert_eq!(bounded, BoundedVerdict::Valid, "{logic}: {f}");
            }
        }
    }
    // the sample is not all trivial
    assert!(valid > 50 && valid < 3900, "{valid}");
}

#[test]
fn logic_separation_battery() {
    let t = parse_modal("[]p -> p").unwrap();
    let b = parse_modal("p -> []<>p").unwrap();
    let k = parse_modal("[](p -> q) -> []p -> []q").unwrap();
    let expect = [
        (&t, [false, true, false, true]),
        (&b, [false, false, true, true]),
        (&k, [true, true, true, true]),
    ];
    for (f, row) in expect {
        for (logic, want) in LogicId::ALL.into_iter().zip(row) {
            let verdict = prove_with(f, logic, ProverConfig::quiet()).unwrap();
            assert_eq!(verdict.is_valid(), want, "{f} in {logic}");
            assert_countermodel(f, logic, &verdict);
            assert_eq!(bounded_validity(f, logic.into(), 3).unwrap().is_valid(), want, "{f} in {logic}");
        }
    }
}

#[test]
fn countermodels_respect_the_frame_class() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..300 {
        let f = random_formula(&mut rng, 3, 10);
        for logic in LogicId::ALL {
            let verdict = prove_with(&f, logic, ProverConfig::quiet()).unwrap();
            assert_countermodel(&f, logic, &verdict);
        }
    }
}

#[test]
fn realizable_pattern_counts() {
    let count = |kind, logic| realizable_patterns(3, kind, logic).unwrap().len();
    assert_eq!(count(TranslationKind::B, LogicId::K), 36);
    assert_eq!(count(TranslationKind::I, LogicId::K), 33);
    assert_eq!(count(TranslationKind::IM, LogicId::KTB), 35);
    for n in 0..=3 {
        let b = realizable_patterns(n, TranslationKind::B, LogicId::K).unwrap();
        let i = realizable_patterns(n, TranslationKind::I, LogicId::K).unwrap();
        assert!(i.iter().all(|p| b.contains(p)), "n = {n}");
    }
}

#[test]
fn frozen_soundness_and_search_counts() {
    use l1modal::harness::{faithfulness_search, soundness_suite, SearchOptions, SearchStrategy};
    let r = soundness_suite(3, 7, ProverConfig::quiet()).unwrap();
    assert_eq!((r.formulas, r.theorems, r.violations), (2_227_239, 173_340, 9_552));
    assert_eq!(r.mp_closure.violations, 726);
    let invalid: Vec<usize> = r.axiom_instances.iter().map(|a| a.invalid.len()).collect();
    assert_eq!(invalid, [0, 0, 12]);
    assert!(r.disagreements.is_empty());
    let opts = |kind, logic| SearchOptions {
        kind,
        logic,
        names: 3,
        max_size: 7,
        strategy: SearchStrategy::Patterns,
        config: ProverConfig::quiet(),
    };
    let im = faithfulness_search(opts(TranslationKind::IM, LogicId::KTB)).unwrap();
    let i = faithfulness_search(opts(TranslationKind::I, LogicId::K)).unwrap();
    assert_eq!((im.candidates.len(), i.candidates.len()), (9882, 4452));
    assert_eq!(im.scanned, r.formulas);
    assert_eq!(im.candidates[0].formula, "(eps(a,b) -> eps(a,c)) | eps(b,a)");
    assert!(im.reverified && i.reverified);
}
