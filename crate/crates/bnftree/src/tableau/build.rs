//! Incremental construction of the tableau graph. Conceptually every
//! interior node expands one unmarked non-elementary formula at a time, as
//! [`super::expand`] does; the builder shortcuts the bookkeeping. Forced
//! moves — conjunctive expansions, disjunctions with one consistent branch,
//! and disjunctions already witnessed by the label — are applied in place,
//! so only genuine branch points and fully expanded states materialize.
//! Nodes with the same label and marks are identified; inconsistent nodes
//! are never created. A fully expanded node is a state: its next-time
//! formulae seed one successor per index (plus a single default successor
//! when the clause set has no indices), and the states reachable through
//! the expansion of a seed become its successor states.

use std::collections::{HashMap, VecDeque};

use crate::bnf::{ClauseSet, Index};
use crate::formula::{clause_set_to_formula, Formula};

use super::closure::{Bits, Class, FormulaId, Universe};
use super::{Tableau, TableauState};

enum Saturated {
    /// The label collapsed into a contradiction.
    Dead,
    /// Every non-elementary formula is marked.
    State(Bits, Bits),
    /// A disjunction with two consistent, unwitnessed branches.
    Branch { label: Bits, marked: Bits, first: FormulaId, second: FormulaId },
}

struct Builder {
    universe: Universe,
    nonelementary: Bits,
    states: Vec<(Bits, Bits)>,
    state_ids: HashMap<(Bits, Bits), usize>,
    queue: VecDeque<usize>,
    resolve_memo: HashMap<(Bits, Bits), Vec<usize>>,
}

impl Builder {
    fn new(universe: Universe) -> Builder {
        let mut nonelementary = Bits::empty(universe.words());
        for id in 0..universe.len() as FormulaId {
            if universe.is_nonelementary(id) {
                nonelementary.set(id);
            }
        }
        Builder {
            universe,
            nonelementary,
            states: Vec::new(),
            state_ids: HashMap::new(),
            queue: VecDeque::new(),
            resolve_memo: HashMap::new(),
        }
    }

    /// Adds formulae to a label, rejecting propositional inconsistency.
    fn consistent_extend(&self, base: &Bits, additions: &[FormulaId]) -> Option<Bits> {
        let mut label = base.clone();
        for &id in additions {
            if id == self.universe.false_id {
                return None;
            }
            if let Some(c) = self.universe.complement[id as usize] {
                if label.get(c) {
                    return None;
                }
            }
            label.set(id);
        }
        Some(label)
    }

    /// Runs the expansion until the node dies, becomes a state, or reaches
    /// a genuine two-way branch. The least unmarked non-elementary formula
    /// is always the one resolved, matching the one-step expansion rule.
    fn saturate(&self, mut label: Bits, mut marked: Bits) -> Saturated {
        loop {
            let unmarked = label.minus(&marked);
            let Some(chosen) = unmarked.first_in(&self.nonelementary) else {
                return Saturated::State(label, marked);
            };
            marked.set(chosen);
            match self.universe.class[chosen as usize] {
                Class::Alpha(a, b) => match self.consistent_extend(&label, &[a, b]) {
                    Some(next) => label = next,
                    None => return Saturated::Dead,
                },
                Class::Beta(a, b) => {
                    if label.get(a) || label.get(b) {
                        continue; // already witnessed
                    }
                    let left = self.consistent_extend(&label, &[a]);
                    let right = self.consistent_extend(&label, &[b]);
                    match (left, right) {
                        (None, None) => return Saturated::Dead,
                        (Some(next), None) | (None, Some(next)) => label = next,
                        (Some(_), Some(_)) => {
                            return Saturated::Branch { label, marked, first: a, second: b }
                        }
                    }
                }
                _ => unreachable!("non-elementary mask matches classes"),
            }
        }
    }

    fn intern_state(&mut self, label: Bits, marked: Bits) -> usize {
        let key = (label, marked);
        if let Some(&s) = self.state_ids.get(&key) {
            return s;
        }
        let s = self.states.len();
        self.states.push(key.clone());
        self.state_ids.insert(key, s);
        self.queue.push_back(s);
        s
    }

    /// The states the expansion of a node reaches, deduplicated and sorted.
    fn resolve(&mut self, label: Bits, marked: Bits) -> Vec<usize> {
        let key = (label, marked);
        if let Some(cached) = self.resolve_memo.get(&key) {
            return cached.clone();
        }
        let result = match self.saturate(key.0.clone(), key.1.clone()) {
            Saturated::Dead => Vec::new(),
            Saturated::State(l, m) => vec![self.intern_state(l, m)],
            Saturated::Branch { label, marked, first, second } => {
                let left = self
                    .consistent_extend(&label, &[first])
                    .expect("branch arms are consistent");
                let right = self
                    .consistent_extend(&label, &[second])
                    .expect("branch arms are consistent");
                let mut out = self.resolve(left, marked.clone());
                for s in self.resolve(right, marked) {
                    if !out.contains(&s) {
                        out.push(s);
                    }
                }
                out.sort_unstable();
                out
            }
        };
        self.resolve_memo.insert(key, result.clone());
        result
    }

    /// The successor seeds of a state: every seed carries all `A X` bodies;
    /// each index direction adds the bodies of its `E X` formulae. Clause
    /// sets without indices get one unannotated seed.
    fn state_seeds(&self, s: usize) -> Vec<(Option<usize>, Vec<FormulaId>)> {
        let mut all_next: Vec<FormulaId> = Vec::new();
        let mut per_index: Vec<Vec<FormulaId>> = vec![Vec::new(); self.universe.indices.len()];
        for id in self.states[s].0.iter_ones() {
            match &self.universe.formulas[id as usize] {
                Formula::AllNext(b) => all_next.push(self.universe.ids[b.as_ref()]),
                Formula::ExistsNext(b, ind) => {
                    let pos = self
                        .universe
                        .indices
                        .iter()
                        .position(|j| j == ind)
                        .expect("index collected into the universe");
                    per_index[pos].push(self.universe.ids[b.as_ref()]);
                }
                _ => {}
            }
        }
        if self.universe.indices.is_empty() {
            return vec![(None, all_next)];
        }
        per_index
            .into_iter()
            .enumerate()
            .map(|(pos, mut extra)| {
                let mut seed = all_next.clone();
                seed.append(&mut extra);
                (Some(pos), seed)
            })
            .collect()
    }
}

pub(crate) fn build(cs_aug: &ClauseSet) -> Tableau {
    let f0 = clause_set_to_formula(cs_aug);
    let universe = Universe::build(&f0);
    let indices = universe.indices.clone();
    let default_index = Index::fresh(cs_aug.next_fresh_counter());
    let words = universe.words();
    let root_id = universe.root_id;

    let mut builder = Builder::new(universe);
    let mut root = Bits::empty(words);
    root.set(root_id);
    builder.resolve(root, Bits::empty(words));

    let mut edges: Vec<Vec<(Option<usize>, usize)>> = Vec::new();
    while let Some(s) = builder.queue.pop_front() {
        let empty = Bits::empty(words);
        let mut out = Vec::new();
        for (direction, seed) in builder.state_seeds(s) {
            let Some(label) = builder.consistent_extend(&empty, &seed) else {
                continue;
            };
            for target in builder.resolve(label, empty.clone()) {
                let edge = (direction, target);
                if !out.contains(&edge) {
                    out.push(edge);
                }
            }
        }
        out.sort_unstable();
        if edges.len() <= s {
            edges.resize(s + 1, Vec::new());
        }
        edges[s] = out;
    }
    edges.resize(builder.states.len(), Vec::new());

    let states = builder
        .states
        .into_iter()
        .zip(edges)
        .map(|((label, marked), edges)| TableauState { label, marked, edges })
        .collect();
    Tableau { universe: builder.universe, indices, default_index, states }
}
