//! Finite Kripke models and the exhaustive small-model oracle.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::{LogicId, ModalFormula, PropVar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KripkeError {
    #[error("unknown world {world} (model has {worlds} worlds)")]
    UnknownWorld { world: usize, worlds: usize },
    #[error("relation pair ({0}, {1}) mentions a world outside the model")]
    RelationOutOfRange(usize, usize),
    #[error("valuation of {0} mentions world {1} outside the model")]
    ValuationOutOfRange(PropVar, usize),
    #[error("a model needs at least one world")]
    Empty,
    #[error("enumeration too large: {0}")]
    TooLarge(String),
}

/// Frame conditions of a logic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameClass {
    pub reflexive: bool,
    pub symmetric: bool,
}

impl From<LogicId> for FrameClass {
    fn from(logic: LogicId) -> Self {
        FrameClass {
            reflexive: logic.reflexive(),
            symmetric: logic.symmetric(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ModelJson", into = "ModelJson")]
pub struct KripkeModel {
    worlds: usize,
    rel: BTreeSet<(usize, usize)>,
    val: BTreeMap<PropVar, BTreeSet<usize>>,
}

#[derive(Serialize, Deserialize)]
struct ModelJson {
    worlds: usize,
    rel: Vec<[usize; 2]>,
    val: BTreeMap<PropVar, Vec<usize>>,
}

impl TryFrom<ModelJson> for KripkeModel {
    type Error = KripkeError;

    fn try_from(j: ModelJson) -> Result<Self, Self::Error> {
        KripkeModel::new(
            j.worlds,
            j.rel.into_iter().map(|[a, b]| (a, b)),
            j.val.into_iter().map(|(p, ws)| (p, ws.into_iter().collect())),
        )
    }
}

impl From<KripkeModel> for ModelJson {
    fn from(m: KripkeModel) -> Self {
        ModelJson {
            worlds: m.worlds,
            rel: m.rel.iter().map(|&(a, b)| [a, b]).collect(),
            val: m.val.into_iter().map(|(p, ws)| (p, ws.into_iter().collect())).collect(),
        }
    }
}

impl KripkeModel {
    pub fn new(
        worlds: usize,
        rel: impl IntoIterator<Item = (usize, usize)>,
        val: impl IntoIterator<Item = (PropVar, BTreeSet<usize>)>,
    ) -> Result<Self, KripkeError> {
        if worlds == 0 {
            return Err(KripkeError::Empty);
        }
        let rel: BTreeSet<_> = rel.into_iter().collect();
        if let Some(&(a, b)) = rel.iter().find(|&&(a, b)| a >= worlds || b >= worlds) {
            return Err(KripkeError::RelationOutOfRange(a, b));
        }
        let mut vmap = BTreeMap::new();
        for (p, ws) in val {
            if let Some(&w) = ws.iter().find(|&&w| w >= worlds) {
                return Err(KripkeError::ValuationOutOfRange(p, w));
            }
            vmap.insert(p, ws);
        }
        Ok(KripkeModel { worlds, rel, val: vmap })
    }

    pub fn worlds(&self) -> usize {
        self.worlds
    }

    pub fn relation(&self) -> &BTreeSet<(usize, usize)> {
        &self.rel
    }

    pub fn valuation(&self) -> &BTreeMap<PropVar, BTreeSet<usize>> {
        &self.val
    }

    pub fn successors(&self, w: usize) -> impl Iterator<Item = usize> + '_ {
        self.rel.range((w, 0)..(w + 1, 0)).map(|&(_, v)| v)
    }

    pub fn holds(&self, p: &PropVar, w: usize) -> bool {
        self.val.get(p).is_some_and(|ws| ws.contains(&w))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("model serializes")
    }
}

pub fn check_frame(m: &KripkeModel, class: FrameClass) -> bool {
    let reflexive = !class.reflexive || (0..m.worlds).all(|w| m.rel.contains(&(w, w)));
    let symmetric = !class.symmetric || m.rel.iter().all(|&(a, b)| m.rel.contains(&(b, a)));
    reflexive && symmetric
}

pub fn eval(m: &KripkeModel, w: usize, formula: &ModalFormula) -> Result<bool, KripkeError> {
    if w >= m.worlds {
        return Err(KripkeError::UnknownWorld { world: w, worlds: m.worlds });
    }
    Ok(eval_at(m, w, formula))
}

fn eval_at(m: &KripkeModel, w: usize, f: &ModalFormula) -> bool {
    match f {
        ModalFormula::Var(p) => m.holds(p, w),
        ModalFormula::Not(x) => !eval_at(m, w, x),
        ModalFormula::Or(x, y) => eval_at(m, w, x) || eval_at(m, w, y),
        ModalFormula::Box(x) => m.successors(w).all(|v| eval_at(m, v, x)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundedVerdict {
    Valid,
    Falsified { model: KripkeModel, world: usize },
}

impl BoundedVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, BoundedVerdict::Valid)
    }
}

/// Largest number of world-relation pairs we are willing to iterate over.
const MAX_FRAME_BITS: usize = 26;
/// Largest number of valuation bits per model (worlds * variables).
const MAX_VALUATION_BITS: usize = 20;
/// Upper bound on frames * valuations.
const MAX_MODELS_LOG2: usize = 34;

/// Exhaustively searches every model over frames in `class` with at most
/// `max_worlds` worlds, valuating only the variables of `formula`.
///
/// Models are visited by world count, then relation bit-vector, then
/// valuation bit-vector, then world; the first falsification in that order
/// is returned regardless of how the work is split across threads.
pub fn bounded_validity(
    formula: &ModalFormula,
    class: FrameClass,
    max_worlds: usize,
) -> Result<BoundedVerdict, KripkeError> {
    if max_worlds == 0 {
        return Err(KripkeError::TooLarge("max_worlds must be at least 1".into()));
    }
    let vars: Vec<PropVar> = formula.prop_vars().into_iter().collect();
    let k = vars.len();
    for n in 1..=max_worlds {
        guard(n, k, class)?;
    }
    for n in 1..=max_worlds {
        if let Some((model, world)) = search_size(formula, &vars, class, n) {
            let falsified = !eval(&model, world, formula).expect("world in range");
            assert!(
                falsified && check_frame(&model, class),
                "bounded search produced a non-falsifying model"
            );
            return Ok(BoundedVerdict::Falsified { model, world });
        }
    }
    Ok(BoundedVerdict::Valid)
}

fn free_relation_bits(n: usize, class: FrameClass) -> usize {
    match (class.reflexive, class.symmetric) {
        (false, false) => n * n,
        (true, false) => n * n - n,
        (false, true) => n * (n + 1) / 2,
        (true, true) => n * (n - 1) / 2,
    }
}

fn guard(n: usize, k: usize, class: FrameClass) -> Result<(), KripkeError> {
    if n * n > MAX_FRAME_BITS {
        return Err(KripkeError::TooLarge(format!("{n} worlds: 2^{} relations", n * n)));
    }
    if n * k > MAX_VALUATION_BITS {
        return Err(KripkeError::TooLarge(format!(
            "{n} worlds x {k} variables: 2^{} valuations",
            n * k
        )));
    }
    let log = free_relation_bits(n, class) + n * k;
    if log > MAX_MODELS_LOG2 {
        return Err(KripkeError::TooLarge(format!("{n} worlds: 2^{log} models")));
    }
    Ok(())
}

fn frame_in_class(r: u64, n: usize, class: FrameClass) -> bool {
    let bit = |i: usize, j: usize| (r >> (i * n + j)) & 1 == 1;
    if class.reflexive && !(0..n).all(|i| bit(i, i)) {
        return false;
    }
    if class.symmetric {
        for i in 0..n {
            for j in (i + 1)..n {
                if bit(i, j) != bit(j, i) {
                    return false;
                }
            }
        }
    }
    true
}

/// Truth sets over all valuations at once: `words` u64 per world, bit `v`
/// set iff the formula holds under valuation index `v`.
struct Sliced {
    n: usize,
    words: usize,
    last_mask: u64,
    /// var_bits[j][w]: valuation indices where variable j holds at world w
    var_bits: Vec<Vec<Vec<u64>>>,
}

impl Sliced {
    fn new(n: usize, k: usize) -> Self {
        let count: u64 = 1 << (n * k);
        let words = count.div_ceil(64) as usize;
        let last_mask = if count % 64 == 0 { u64::MAX } else { (1u64 << (count % 64)) - 1 };
        let mut var_bits = vec![vec![vec![0u64; words]; n]; k];
        for v in 0..count {
            for (j, per_var) in var_bits.iter_mut().enumerate() {
                for (w, bits) in per_var.iter_mut().enumerate() {
                    if (v >> (j * n + w)) & 1 == 1 {
                        bits[(v / 64) as usize] |= 1 << (v % 64);
                    }
                }
            }
        }
        Sliced { n, words, last_mask, var_bits }
    }

    fn ones(&self) -> Vec<u64> {
        let mut v = vec![u64::MAX; self.words];
        *v.last_mut().unwrap() = self.last_mask;
        v
    }

    fn eval(&self, f: &ModalFormula, vars: &[PropVar], succ: &[Vec<usize>]) -> Vec<Vec<u64>> {
        match f {
            ModalFormula::Var(p) => {
                let j = vars.binary_search(p).expect("variable collected from formula");
                self.var_bits[j].clone()
            }
            ModalFormula::Not(x) => {
                let mut t = self.eval(x, vars, succ);
                for per_world in &mut t {
                    for word in per_world.iter_mut() {
                        *word = !*word;
                    }
                    *per_world.last_mut().unwrap() &= self.last_mask;
                }
                t
            }
            ModalFormula::Or(x, y) => {
                let mut t = self.eval(x, vars, succ);
                let u = self.eval(y, vars, succ);
                for (a, b) in t.iter_mut().zip(&u) {
                    for (wa, wb) in a.iter_mut().zip(b) {
                        *wa |= wb;
                    }
                }
                t
            }
            ModalFormula::Box(x) => {
                let t = self.eval(x, vars, succ);
                (0..self.n)
                    .map(|w| {
                        let mut acc = self.ones();
                        for &v in &succ[w] {
                            for (a, b) in acc.iter_mut().zip(&t[v]) {
                                *a &= b;
                            }
                        }
                        acc
                    })
                    .collect()
            }
        }
    }
}

fn search_size(
    formula: &ModalFormula,
    vars: &[PropVar],
    class: FrameClass,
    n: usize,
) -> Option<(KripkeModel, usize)> {
    let sliced = Sliced::new(n, vars.len());
    let relations: u64 = 1 << (n * n);
    (0..relations)
        .into_par_iter()
        .filter(|&r| frame_in_class(r, n, class))
        .find_map_first(|r| {
            let succ: Vec<Vec<usize>> = (0..n)
                .map(|i| (0..n).filter(|&j| (r >> (i * n + j)) & 1 == 1).collect())
                .collect();
            let truth = sliced.eval(formula, vars, &succ);
            // least valuation index with some falsified world, then least world
            let mut best: Option<(u64, usize)> = None;
            for (w, bits) in truth.iter().enumerate() {
                for (i, word) in bits.iter().enumerate() {
                    let mut falsified = !word;
                    if i + 1 == sliced.words {
                        falsified &= sliced.last_mask;
                    }
                    if falsified != 0 {
                        let v = (i * 64) as u64 + falsified.trailing_zeros() as u64;
                        if best.is_none_or(|(bv, _)| v < bv) {
                            best = Some((v, w));
                        }
                        break;
                    }
                }
            }
            best.map(|(v, w)| (r, v, w))
        })
        .map(|(r, v, w)| {
            let rel = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| (r >> (i * n + j)) & 1 == 1);
            let val = vars.iter().enumerate().map(|(j, p)| {
                let ws = (0..n).filter(|&w| (v >> (j * n + w)) & 1 == 1).collect();
                (p.clone(), ws)
            });
            (KripkeModel::new(n, rel, val).expect("enumerated model is well formed"), w)
        })
}
