#![allow(dead_code)]

use l1modal::{KripkeModel, L1Formula, ModalFormula, NameVar, PropVar};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::Rng;

pub fn name(s: &str) -> NameVar {
    NameVar::new(s).unwrap()
}

pub fn prop(s: &str) -> PropVar {
    PropVar::new(s).unwrap()
}

pub fn arb_name() -> impl Strategy<Value = NameVar> {
    prop::sample::select(vec!["a", "b", "c", "d", "x1", "long_name"]).prop_map(name)
}

pub fn arb_l1() -> impl Strategy<Value = L1Formula> {
    let leaf = (arb_name(), arb_name()).prop_map(|(a, b)| L1Formula::eps(&a, &b));
    leaf.prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(L1Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| L1Formula::or(x, y)),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| L1Formula::and(x, y)),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| L1Formula::implies(x, y)),
            (inner.clone(), inner).prop_map(|(x, y)| L1Formula::iff(x, y)),
        ]
    })
}

pub fn arb_modal_over(vars: Vec<&'static str>, depth: u32) -> BoxedStrategy<ModalFormula> {
    let leaf = prop::sample::select(vars.clone()).prop_map(|v| ModalFormula::var(&prop(v)));
    leaf.prop_recursive(depth, 32, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(ModalFormula::not),
            inner.clone().prop_map(ModalFormula::boxed),
            inner.clone().prop_map(ModalFormula::diamond),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| ModalFormula::or(x, y)),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| ModalFormula::and(x, y)),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| ModalFormula::implies(x, y)),
            (inner.clone(), inner).prop_map(|(x, y)| ModalFormula::iff(x, y)),
        ]
    })
    .boxed()
}

pub fn arb_modal() -> BoxedStrategy<ModalFormula> {
    arb_modal_over(vec!["p", "q", "r", "p_a", "p_long"], 5)
}

/// Models with 1 to 3 worlds over `p`, `q`, `r`.
pub fn arb_small_model() -> impl Strategy<Value = KripkeModel> {
    (1usize..=3).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(any::<bool>(), n * n),
            prop::collection::vec(prop::collection::vec(any::<bool>(), n), 3),
        )
            .prop_map(|(n, rel, val)| {
                let pairs = (0..n * n).filter(|&i| rel[i]).map(|i| (i / n, i % n));
                let vals = ["p", "q", "r"].iter().zip(val).map(|(v, bits)| {
                    (prop(v), (0..n).filter(|&w| bits[w]).collect())
                });
                KripkeModel::new(n, pairs, vals).unwrap()
            })
    })
}

/// Random formula over p, q, r with modal depth at most `depth`.
pub fn random_formula(rng: &mut StdRng, depth: usize, size: usize) -> ModalFormula {
    if size == 0 || rng.gen_ratio(1, 4) {
        let v = ["p", "q", "r"][rng.gen_range(0..3)];
        return ModalFormula::var(&prop(v));
    }
    let choice = rng.gen_range(0..if depth > 0 { 7 } else { 5 });
    let half = size / 2;
    match choice {
        0 => ModalFormula::not(random_formula(rng, depth, size - 1)),
        1 => ModalFormula::or(random_formula(rng, depth, half), random_formula(rng, depth, half)),
        2 => ModalFormula::and(random_formula(rng, depth, half), random_formula(rng, depth, half)),
        3 => ModalFormula::implies(random_formula(rng, depth, half), random_formula(rng, depth, half)),
        4 => ModalFormula::iff(random_formula(rng, depth, half), random_formula(rng, depth, half)),
        5 => ModalFormula::boxed(random_formula(rng, depth - 1, size - 1)),
        _ => ModalFormula::diamond(random_formula(rng, depth - 1, size - 1)),
    }
}
