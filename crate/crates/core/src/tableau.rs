//! Refutation tableaux for K, KT, KB and KTB.
//!
//! The prover negates the input, converts it to NNF and tries to build a
//! model of the result. A branch is a tree of labelled worlds; all rules act
//! on the whole branch:
//!
//! * conjunctions are split in place;
//! * `[]a` at `w` puts `a` into every world accessible from `w`: its
//!   children, its parent when the logic is symmetric, and `w` itself when
//!   it is reflexive;
//! * a disjunction `a | b` with neither side present branches into `a` and
//!   `b, ~a`; a disjunct whose negation is already present is discarded
//!   without branching;
//! * `<>a` with no accessible world containing `a` creates a child world
//!   seeded with `a` and every `c` such that `[]c` is in the parent.
//!
//! Propositional rules run before modal ones; among candidates the
//! smallest formula is chosen first, then the lowest world index, so traces
//! are reproducible. A world whose label equals that of a proper ancestor is
//! blocked and does not create children. Formulas in a world have modal
//! depth at most the input depth minus the world's depth, so the world tree
//! is finite even without blocking.
//!
//! A branch closes only on a complementary literal pair. A saturated open
//! branch is turned into a countermodel, closed under the frame conditions
//! and re-checked with [`crate::kripke::eval`] before it is returned.

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::formula::{LogicId, ModalFormula, PropVar};
use crate::kripke::{check_frame, eval, KripkeModel};
use crate::nnf::{nnf, NnfFormula};

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProverConfig {
    /// Maximum number of tableau nodes (branch states plus created worlds).
    pub node_budget: u64,
    /// Record rule applications for valid verdicts.
    pub trace: bool,
}

impl Default for ProverConfig {
    fn default() -> Self {
        ProverConfig {
            node_budget: DEFAULT_NODE_BUDGET,
            trace: true,
        }
    }
}

impl ProverConfig {
    pub fn quiet() -> Self {
        ProverConfig {
            trace: false,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProveError {
    #[error("node budget of {budget} exhausted")]
    Budget { budget: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// First alternative of a disjunction.
    OrLeft,
    /// Second alternative, with the first one negated.
    OrRight,
    /// New successor world for a diamond.
    NewWorld,
    /// Complementary literals.
    Clash,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub rule: Rule,
    /// Number of disjunction choices above this step.
    pub depth: usize,
    pub world: usize,
    pub formula: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableauVerdict {
    Valid { trace: Vec<TraceStep> },
    Invalid { model: KripkeModel, world: usize },
}

impl TableauVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, TableauVerdict::Valid { .. })
    }
}

type Fid = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Node {
    Lit(u32, bool),
    And(Fid, Fid),
    Or(Fid, Fid),
    Box(Fid),
    Dia(Fid),
}

/// Hash-consed NNF subformulas of the root, closed under negation.
struct Closure {
    nodes: Vec<Node>,
    neg: Vec<Fid>,
    size: Vec<u32>,
    vars: Vec<PropVar>,
    index: HashMap<Node, Fid>,
    ors: FixedBitSet,
    dias: FixedBitSet,
    boxes: FixedBitSet,
}

impl Closure {
    fn build(root: &NnfFormula) -> (Closure, Fid) {
        let mut c = Closure {
            nodes: Vec::new(),
            neg: Vec::new(),
            size: Vec::new(),
            vars: Vec::new(),
            index: HashMap::new(),
            ors: FixedBitSet::new(),
            dias: FixedBitSet::new(),
            boxes: FixedBitSet::new(),
        };
        let mut var_ids = HashMap::new();
        let root_id = c.intern_nnf(root, &mut var_ids);
        let mut neg_of: Vec<Option<Fid>> = Vec::new();
        let mut i = 0;
        while i < c.nodes.len() {
            c.negate(i as Fid, &mut neg_of);
            i += 1;
        }
        c.neg = neg_of.into_iter().map(|n| n.expect("closure is negation closed")).collect();
        let n = c.nodes.len();
        c.ors = FixedBitSet::with_capacity(n);
        c.dias = FixedBitSet::with_capacity(n);
        c.boxes = FixedBitSet::with_capacity(n);
        for (i, node) in c.nodes.iter().enumerate() {
            match node {
                Node::Or(..) => c.ors.insert(i),
                Node::Dia(..) => c.dias.insert(i),
                Node::Box(..) => c.boxes.insert(i),
                _ => {}
            }
        }
        (c, root_id)
    }

    fn intern(&mut self, node: Node) -> Fid {
        if let Some(&id) = self.index.get(&node) {
            return id;
        }
        let size = match node {
            Node::Lit(..) => 1,
            Node::And(a, b) | Node::Or(a, b) => 1 + self.size[a as usize] + self.size[b as usize],
            Node::Box(a) | Node::Dia(a) => 1 + self.size[a as usize],
        };
        let id = self.nodes.len() as Fid;
        self.nodes.push(node);
        self.size.push(size);
        self.index.insert(node, id);
        id
    }

    fn intern_nnf(&mut self, f: &NnfFormula, var_ids: &mut HashMap<PropVar, u32>) -> Fid {
        let node = match f {
            NnfFormula::Lit(p, s) => {
                let next = var_ids.len() as u32;
                let v = *var_ids.entry(p.clone()).or_insert_with(|| {
                    self.vars.push(p.clone());
                    next
                });
                Node::Lit(v, *s)
            }
            NnfFormula::And(a, b) => Node::And(self.intern_nnf(a, var_ids), self.intern_nnf(b, var_ids)),
            NnfFormula::Or(a, b) => Node::Or(self.intern_nnf(a, var_ids), self.intern_nnf(b, var_ids)),
            NnfFormula::Box(a) => Node::Box(self.intern_nnf(a, var_ids)),
            NnfFormula::Diamond(a) => Node::Dia(self.intern_nnf(a, var_ids)),
        };
        self.intern(node)
    }

    fn negate(&mut self, id: Fid, memo: &mut Vec<Option<Fid>>) -> Fid {
        if let Some(Some(n)) = memo.get(id as usize) {
            return *n;
        }
        let node = match self.nodes[id as usize] {
            Node::Lit(v, s) => Node::Lit(v, !s),
            Node::And(a, b) => Node::Or(self.negate(a, memo), self.negate(b, memo)),
            Node::Or(a, b) => Node::And(self.negate(a, memo), self.negate(b, memo)),
            Node::Box(a) => Node::Dia(self.negate(a, memo)),
            Node::Dia(a) => Node::Box(self.negate(a, memo)),
        };
        let n = self.intern(node);
        if memo.len() < self.nodes.len() {
            memo.resize(self.nodes.len(), None);
        }
        memo[id as usize] = Some(n);
        memo[n as usize] = Some(id);
        n
    }

    fn to_nnf(&self, id: Fid) -> NnfFormula {
        match self.nodes[id as usize] {
            Node::Lit(v, s) => NnfFormula::Lit(self.vars[v as usize].clone(), s),
            Node::And(a, b) => NnfFormula::And(Box::new(self.to_nnf(a)), Box::new(self.to_nnf(b))),
            Node::Or(a, b) => NnfFormula::Or(Box::new(self.to_nnf(a)), Box::new(self.to_nnf(b))),
            Node::Box(a) => NnfFormula::Box(Box::new(self.to_nnf(a))),
            Node::Dia(a) => NnfFormula::Diamond(Box::new(self.to_nnf(a))),
        }
    }

    fn render(&self, id: Fid) -> String {
        self.to_nnf(id).to_string()
    }
}

#[derive(Clone)]
struct World {
    label: FixedBitSet,
    parent: Option<usize>,
    children: Vec<usize>,
}

#[derive(Clone)]
struct Branch {
    worlds: Vec<World>,
    depth: usize,
}

struct Clash {
    world: usize,
    literal: Fid,
}

enum Expansion {
    Open,
    Split { world: usize, or: Fid, left: Fid, right: Fid },
}

#[derive(Clone, Copy)]
enum Raw {
    Trace(Rule, usize, usize, Fid),
}

struct Prover<'c> {
    closure: &'c Closure,
    logic: LogicId,
    config: ProverConfig,
    nodes: u64,
    trace: Vec<Raw>,
}

impl<'c> Prover<'c> {
    fn tick(&mut self) -> Result<(), ProveError> {
        self.nodes += 1;
        if self.nodes > self.config.node_budget {
            return Err(ProveError::Budget {
                budget: self.config.node_budget,
            });
        }
        Ok(())
    }

    fn record(&mut self, rule: Rule, depth: usize, world: usize, f: Fid) {
        if self.config.trace {
            self.trace.push(Raw::Trace(rule, depth, world, f));
        }
    }

    fn accessible(&self, br: &Branch, w: usize) -> Vec<usize> {
        let world = &br.worlds[w];
        let mut out = world.children.clone();
        if self.logic.symmetric() {
            out.extend(world.parent);
        }
        if self.logic.reflexive() {
            out.push(w);
        }
        out
    }

    fn add(&self, br: &mut Branch, queue: &mut VecDeque<(usize, Fid)>, w: usize, f: Fid) -> Result<(), Clash> {
        let label = &mut br.worlds[w].label;
        if label.contains(f as usize) {
            return Ok(());
        }
        if let Node::Lit(..) = self.closure.nodes[f as usize] {
            if label.contains(self.closure.neg[f as usize] as usize) {
                return Err(Clash { world: w, literal: f });
            }
        }
        label.insert(f as usize);
        queue.push_back((w, f));
        Ok(())
    }

    fn saturate(&self, br: &mut Branch, queue: &mut VecDeque<(usize, Fid)>) -> Result<(), Clash> {
        while let Some((w, f)) = queue.pop_front() {
            match self.closure.nodes[f as usize] {
                Node::And(a, b) => {
                    self.add(br, queue, w, a)?;
                    self.add(br, queue, w, b)?;
                }
                Node::Box(a) => {
                    for v in self.accessible(br, w) {
                        self.add(br, queue, v, a)?;
                    }
                }
                Node::Lit(..) | Node::Or(..) | Node::Dia(..) => {}
            }
        }
        Ok(())
    }

    fn blocked(&self, br: &Branch, w: usize) -> bool {
        let label = &br.worlds[w].label;
        let mut cur = br.worlds[w].parent;
        while let Some(u) = cur {
            if br.worlds[u].label == *label {
                return true;
            }
            cur = br.worlds[u].parent;
        }
        false
    }

    fn expand(&mut self, br: &mut Branch, queue: &mut VecDeque<(usize, Fid)>) -> Result<Result<Expansion, Clash>, ProveError> {
        let closure = self.closure;
        loop {
            if let Err(c) = self.saturate(br, queue) {
                return Ok(Err(c));
            }

            // disjunctions: unit propagation first, else the smallest split
            let mut split: Option<(u32, usize, Fid, Fid, Fid)> = None;
            let mut unit: Option<(usize, Fid)> = None;
            'scan: for (w, world) in br.worlds.iter().enumerate() {
                let label = &world.label;
                for f in label.intersection(&closure.ors) {
                    let Node::Or(a, b) = closure.nodes[f] else { unreachable!() };
                    if label.contains(a as usize) || label.contains(b as usize) {
                        continue;
                    }
                    let dead_a = label.contains(closure.neg[a as usize] as usize);
                    let dead_b = label.contains(closure.neg[b as usize] as usize);
                    if dead_a || dead_b {
                        unit = Some((w, if dead_a { b } else { a }));
                        break 'scan;
                    }
                    let key = closure.size[f];
                    if split.is_none_or(|(s, sw, sf, _, _)| (key, w, f as Fid) < (s, sw, sf)) {
                        split = Some((key, w, f as Fid, a, b));
                    }
                }
            }
            if let Some((w, f)) = unit {
                if let Err(c) = self.add(br, queue, w, f) {
                    return Ok(Err(c));
                }
                continue;
            }
            if let Some((_, world, or, left, right)) = split {
                return Ok(Ok(Expansion::Split { world, or, left, right }));
            }

            // diamonds: first unsatisfied one in world order, smallest first
            let mut create: Option<(usize, Fid, Fid)> = None;
            for w in 0..br.worlds.len() {
                let label = &br.worlds[w].label;
                let mut best: Option<(u32, Fid, Fid)> = None;
                let access = self.accessible(br, w);
                for f in label.intersection(&closure.dias) {
                    let Node::Dia(a) = closure.nodes[f] else { unreachable!() };
                    if access.iter().any(|&v| br.worlds[v].label.contains(a as usize)) {
                        continue;
                    }
                    let key = (closure.size[f], f as Fid);
                    if best.is_none_or(|(s, bf, _)| key < (s, bf)) {
                        best = Some((key.0, key.1, a));
                    }
                }
                if let Some((_, f, a)) = best {
                    if self.blocked(br, w) {
                        continue;
                    }
                    create = Some((w, f, a));
                    break;
                }
            }
            let Some((w, f, a)) = create else {
                return Ok(Ok(Expansion::Open));
            };
            self.tick()?;
            let child = br.worlds.len();
            br.worlds.push(World {
                label: FixedBitSet::with_capacity(closure.nodes.len()),
                parent: Some(w),
                children: Vec::new(),
            });
            br.worlds[w].children.push(child);
            self.record(Rule::NewWorld, br.depth, child, f);
            let inherited: Vec<Fid> = br.worlds[w]
                .label
                .intersection(&closure.boxes)
                .map(|b| match closure.nodes[b] {
                    Node::Box(c) => c,
                    _ => unreachable!(),
                })
                .collect();
            for c in std::iter::once(a).chain(inherited) {
                if let Err(clash) = self.add(br, queue, child, c) {
                    return Ok(Err(clash));
                }
            }
        }
    }

    fn run(&mut self, root: Fid) -> Result<Option<Branch>, ProveError> {
        let n = self.closure.nodes.len();
        let start = Branch {
            worlds: vec![World {
                label: FixedBitSet::with_capacity(n),
                parent: None,
                children: Vec::new(),
            }],
            depth: 0,
        };
        // (state, formulas to add, split this state is the right alternative of)
        let mut stack: Vec<(Branch, Vec<(usize, Fid)>, Option<(usize, Fid)>)> = vec![(start, vec![(0, root)], None)];
        while let Some((mut br, pending, right_of)) = stack.pop() {
            self.tick()?;
            if let Some((world, or)) = right_of {
                self.record(Rule::OrRight, br.depth, world, or);
            }
            let mut queue = VecDeque::new();
            let mut outcome = Ok(());
            for (w, f) in pending {
                outcome = self.add(&mut br, &mut queue, w, f);
                if outcome.is_err() {
                    break;
                }
            }
            let expansion = match outcome {
                Ok(()) => self.expand(&mut br, &mut queue)?,
                Err(c) => Err(c),
            };
            match expansion {
                Err(clash) => self.record(Rule::Clash, br.depth, clash.world, clash.literal),
                Ok(Expansion::Open) => return Ok(Some(br)),
                Ok(Expansion::Split { world, or, left, right }) => {
                    let depth = br.depth + 1;
                    let mut alt = br.clone();
                    alt.depth = depth;
                    br.depth = depth;
                    let neg_left = self.closure.neg[left as usize];
                    self.record(Rule::OrLeft, depth, world, or);
                    stack.push((alt, vec![(world, right), (world, neg_left)], Some((world, or))));
                    stack.push((br, vec![(world, left)], None));
                }
            }
        }
        Ok(None)
    }

    fn countermodel(&self, br: &Branch) -> KripkeModel {
        let closure = self.closure;
        let mut rel = Vec::new();
        for (v, world) in br.worlds.iter().enumerate() {
            if let Some(u) = world.parent {
                rel.push((u, v));
            }
        }
        for w in 0..br.worlds.len() {
            if !self.blocked(br, w) {
                continue;
            }
            // redirect unsatisfied diamonds to the witnesses of the topmost
            // ancestor with the same label
            let label = &br.worlds[w].label;
            let mut blocker = w;
            let mut cur = br.worlds[w].parent;
            while let Some(u) = cur {
                if br.worlds[u].label == *label {
                    blocker = u;
                }
                cur = br.worlds[u].parent;
            }
            let own = self.accessible(br, w);
            let theirs = self.accessible(br, blocker);
            for f in label.intersection(&closure.dias) {
                let Node::Dia(a) = closure.nodes[f] else { unreachable!() };
                if own.iter().any(|&v| br.worlds[v].label.contains(a as usize)) {
                    continue;
                }
                if let Some(&x) = theirs.iter().find(|&&x| br.worlds[x].label.contains(a as usize)) {
                    rel.push((w, x));
                }
            }
        }
        let n = br.worlds.len();
        if self.logic.reflexive() {
            rel.extend((0..n).map(|w| (w, w)));
        }
        if self.logic.symmetric() {
            let back: Vec<_> = rel.iter().map(|&(a, b)| (b, a)).collect();
            rel.extend(back);
        }
        let val = closure.vars.iter().enumerate().map(|(j, p)| {
            let ws = (0..n)
                .filter(|&w| {
                    let lit = closure.index.get(&Node::Lit(j as u32, true));
                    lit.is_some_and(|&id| br.worlds[w].label.contains(id as usize))
                })
                .collect();
            (p.clone(), ws)
        });
        KripkeModel::new(n, rel, val).expect("extracted model is well formed")
    }
}

/// Decides validity of `formula` in `logic`.
pub fn prove(formula: &ModalFormula, logic: LogicId) -> Result<TableauVerdict, ProveError> {
    prove_with(formula, logic, ProverConfig::default())
}

pub fn prove_with(formula: &ModalFormula, logic: LogicId, config: ProverConfig) -> Result<TableauVerdict, ProveError> {
    let negated = nnf(&ModalFormula::not(formula.clone()));
    let (closure, root) = Closure::build(&negated);
    let mut prover = Prover {
        closure: &closure,
        logic,
        config,
        nodes: 0,
        trace: Vec::new(),
    };
    match prover.run(root)? {
        None => {
            let trace = prover
                .trace
                .iter()
                .map(|&Raw::Trace(rule, depth, world, f)| TraceStep {
                    rule,
                    depth,
                    world,
                    formula: closure.render(f),
                })
                .collect();
            Ok(TableauVerdict::Valid { trace })
        }
        Some(branch) => {
            let model = prover.countermodel(&branch);
            assert!(
                check_frame(&model, logic.into()),
                "countermodel for {formula} violates the {logic} frame conditions"
            );
            assert!(
                !eval(&model, 0, formula).expect("root world exists"),
                "countermodel for {formula} in {logic} does not falsify it"
            );
            Ok(TableauVerdict::Invalid { model, world: 0 })
        }
    }
}

/// `satisfiable(f, L)` iff `f` holds at some world of some model of `L`.
pub fn satisfiable(formula: &ModalFormula, logic: LogicId, config: ProverConfig) -> Result<bool, ProveError> {
    Ok(!prove_with(&ModalFormula::not(formula.clone()), logic, config)?.is_valid())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NecessitationCheck {
    pub premise_valid: bool,
    pub conclusion_valid: bool,
}

impl NecessitationCheck {
    /// Necessitation preserves validity: a valid premise forces a valid
    /// conclusion.
    pub fn closed(&self) -> bool {
        !self.premise_valid || self.conclusion_valid
    }
}

/// Proves both `formula` and `[]formula`.
pub fn prove_necessitation_closure(
    formula: &ModalFormula,
    logic: LogicId,
    config: ProverConfig,
) -> Result<NecessitationCheck, ProveError> {
    let premise_valid = prove_with(formula, logic, config)?.is_valid();
    let conclusion_valid = prove_with(&ModalFormula::boxed(formula.clone()), logic, config)?.is_valid();
    Ok(NecessitationCheck {
        premise_valid,
        conclusion_valid,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_modal;

    fn m(s: &str) -> ModalFormula {
        parse_modal(s).unwrap()
    }

    fn valid(s: &str, logic: LogicId) -> bool {
        prove(&m(s), logic).unwrap().is_valid()
    }

    #[test]
    fn k_axiom() {
        for logic in LogicId::ALL {
            assert!(valid("[](p -> q) -> ([]p -> []q)", logic));
        }
    }

    #[test]
    fn t_axiom_needs_reflexivity() {
        match prove(&m("[]p -> p"), LogicId::K).unwrap() {
            TableauVerdict::Invalid { model, world } => {
                assert!(!eval(&model, world, &m("[]p -> p")).unwrap());
            }
            v => panic!("expected countermodel, got {v:?}"),
        }
        assert!(valid("[]p -> p", LogicId::KT));
        assert!(!valid("[]p -> p", LogicId::KB));
        assert!(valid("[]p -> p", LogicId::KTB));
    }

    #[test]
    fn b_axiom_needs_symmetry() {
        assert!(!valid("p -> []<>p", LogicId::K));
        assert!(!valid("p -> []<>p", LogicId::KT));
        assert!(valid("p -> []<>p", LogicId::KB));
        assert!(valid("p -> []<>p", LogicId::KTB));
    }

    #[test]
    fn im_instance_of_first_axiom() {
        let f = m("(<>p_a -> p_a) & ([]p_a -> []p_b) & (<>p_b -> p_a) -> (<>p_a -> p_a) & ([]p_a -> []p_a) & (<>p_a -> p_a)");
        assert!(prove(&f, LogicId::KTB).unwrap().is_valid());
    }

    #[test]
    fn necessitation() {
        let c = prove_necessitation_closure(&m("p | ~p"), LogicId::K, ProverConfig::quiet()).unwrap();
        assert!(c.premise_valid && c.conclusion_valid);
        let c = prove_necessitation_closure(&m("[]p -> p"), LogicId::KT, ProverConfig::quiet()).unwrap();
        assert!(c.premise_valid && c.conclusion_valid);
        let c = prove_necessitation_closure(&m("<>p_b -> p_a"), LogicId::KTB, ProverConfig::quiet()).unwrap();
        assert!(!c.premise_valid && c.closed());
    }

    #[test]
    fn budget_is_reported() {
        let config = ProverConfig { node_budget: 2, trace: false };
        let f = m("(p | q) & (r | s) & (t | u) -> p");
        assert_eq!(prove_with(&f, LogicId::K, config), Err(ProveError::Budget { budget: 2 }));
    }

    #[test]
    fn trace_is_recorded() {
        let TableauVerdict::Valid { trace } = prove(&m("p | ~p"), LogicId::K).unwrap() else {
            panic!("tautology");
        };
        assert!(trace.iter().any(|s| s.rule == Rule::Clash));
        let TableauVerdict::Valid { trace } = prove(&m("(p & q) | (~p & ~q) | (p & ~q) | (~p & q)"), LogicId::K).unwrap() else {
            panic!("tautology");
        };
        assert!(trace.iter().any(|s| s.rule == Rule::OrLeft));
    }

    #[test]
    fn satisfiability() {
        assert!(satisfiable(&m("p & <>~p"), LogicId::K, ProverConfig::quiet()).unwrap());
        assert!(!satisfiable(&m("p & []~p"), LogicId::KT, ProverConfig::quiet()).unwrap());
        assert!(satisfiable(&m("p & []<>~p & [][]p"), LogicId::KB, ProverConfig::quiet()).unwrap());
        assert!(!satisfiable(&m("<>p & []<>~p & [][]p"), LogicId::KB, ProverConfig::quiet()).unwrap());
    }

    #[test]
    fn deeper_symmetric_interactions() {
        // <>[]p -> p holds on symmetric frames
        assert!(valid("<>[]p -> p", LogicId::KB));
        assert!(!valid("<>[]p -> p", LogicId::KT));
        assert!(valid("<>[][]p -> []p", LogicId::KB));
        assert!(valid("<>[][]p -> p", LogicId::KTB));
        assert!(!valid("<>[][]p -> p", LogicId::KB));
        assert!(!valid("<>[][]p -> p", LogicId::KT));
        // boxes propagated back to a parent reach its other children
        assert!(valid("<>[][]p & <>q -> <>(q & p)", LogicId::KB));
        assert!(!valid("<>[][]p & <>q -> <>(q & p)", LogicId::KT));
    }
}
