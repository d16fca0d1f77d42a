mod common;

use std::collections::BTreeSet;

use common::*;
use l1modal::translate::{decorate, translate_default};
use l1modal::{eval, nnf, parse_l1, parse_modal, translate, L1Formula, NameVar, TranslationKind, VarMap};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn l1_print_then_parse_is_identity(f in arb_l1()) {
        prop_assert_eq!(parse_l1(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn modal_print_then_parse_is_identity(f in arb_modal()) {
        prop_assert_eq!(parse_modal(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn core_print_parses_to_the_same_tree(f in arb_modal()) {
        prop_assert_eq!(parse_modal(&l1modal::print::print_core(&f)).unwrap(), f);
    }

    #[test]
    fn translation_commutes_with_connectives(x in arb_l1(), y in arb_l1()) {
        for kind in TranslationKind::ALL {
            let map = VarMap::new(
                L1Formula::or(x.clone(), y.clone()).name_vars().into_iter().map(|n| { let p = decorate(&n); (n, p) }),
            ).unwrap();
            let t = |f: &L1Formula| translate(kind, f, &map).unwrap();
            prop_assert_eq!(t(&L1Formula::not(x.clone())), l1modal::ModalFormula::not(t(&x)));
            prop_assert_eq!(t(&L1Formula::or(x.clone(), y.clone())), l1modal::ModalFormula::or(t(&x), t(&y)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn translated_variables_are_the_images_of_the_names(f in arb_l1()) {
        let expected: BTreeSet<_> = f.name_vars().iter().map(decorate).collect();
        for kind in TranslationKind::ALL {
            prop_assert_eq!(translate_default(kind, &f).prop_vars(), expected.clone());
        }
    }

    #[test]
    fn renaming_commutes_with_translation(f in arb_l1(), shift in 1usize..6) {
        // an injective renaming of the name pool
        let pool = ["a", "b", "c", "d", "x1", "long_name"];
        let rename = |n: &NameVar| {
            let i = pool.iter().position(|p| *p == n.as_str()).unwrap();
            name(&format!("{}_r", pool[(i + shift) % pool.len()]))
        };
        let renamed = f.rename(&rename);
        for kind in TranslationKind::ALL {
            let before = translate_default(kind, &f).rename(&|p: &l1modal::PropVar| {
                let n = name(p.as_str().strip_prefix("p_").unwrap());
                decorate(&rename(&n))
            });
            prop_assert_eq!(translate_default(kind, &renamed), before);
        }
    }

    #[test]
    fn nnf_preserves_truth_everywhere(f in arb_modal_over(vec!["p", "q", "r"], 4), m in arb_small_model()) {
        let g = nnf(&f);
        prop_assert!(g.is_nnf());
        let back = g.to_modal();
        for w in 0..m.worlds() {
            prop_assert_eq!(eval(&m, w, &f).unwrap(), eval(&m, w, &back).unwrap());
        }
    }

    #[test]
    fn l1_formulas_never_contain_modal_syntax(f in arb_l1()) {
        let text = f.to_string();
        prop_assert!(!text.contains("[]") && !text.contains("<>"));
        prop_assert!(parse_modal(&text).is_err());
    }
}
