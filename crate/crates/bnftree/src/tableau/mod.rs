//! The tableau decision procedure for clause sets: augmentation with
//! eventuality trackers, incremental graph construction over the closure,
//! deletion of states with unfulfillable obligations, the satisfiability
//! verdict, and extraction of automata and models from the reduced graph.

mod build;
mod closure;
mod extract;
mod reduce;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::bnf::{
    renormalize, Clause, ClauseSet, Index, Literal, PathQuantifier, Proposition,
};
use crate::formula::Formula;

pub use closure::gfl_closure;
use closure::{Bits, Universe};

/// One tracked eventuality: a sometime goal, its path quantifier, the index
/// for the existential case, and the fresh proposition that keeps it alive
/// across steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eventuality {
    pub quantifier: PathQuantifier,
    pub goal: Literal,
    pub ind: Option<Index>,
    pub tracker: Proposition,
}

impl Eventuality {
    pub fn formula(&self) -> Formula {
        match (&self.quantifier, &self.ind) {
            (PathQuantifier::All, None) => Formula::lit(&self.goal).all_sometime(),
            (PathQuantifier::Exists, Some(ind)) => {
                Formula::lit(&self.goal).exists_sometime(ind.clone())
            }
            _ => unreachable!("index present iff existential"),
        }
    }
}

/// A clause set together with the tracker clauses for its eventualities.
#[derive(Debug, Clone)]
pub struct Augmented {
    pub clauses: ClauseSet,
    pub eventualities: Vec<Eventuality>,
}

/// Adds, for every sometime clause, the clauses tying its goal to a fresh
/// tracker proposition: the tracker is owed at the root and at every next
/// state where the premise fires, and it keeps re-asserting the goal (along
/// the clause's index, for the existential form) until the goal lands.
pub fn augment(cs: &ClauseSet) -> Augmented {
    let mut counter = cs.next_fresh_counter();
    let mut eventualities: Vec<Eventuality> = Vec::new();
    let mut find_tracker = |quantifier: PathQuantifier,
                            goal: &Literal,
                            ind: Option<&Index>,
                            evs: &mut Vec<Eventuality>|
     -> Proposition {
        if let Some(e) = evs
            .iter()
            .find(|e| e.quantifier == quantifier && &e.goal == goal && e.ind.as_ref() == ind)
        {
            return e.tracker.clone();
        }
        let tracker = Proposition::fresh(counter);
        counter += 1;
        evs.push(Eventuality {
            quantifier,
            goal: goal.clone(),
            ind: ind.cloned(),
            tracker: tracker.clone(),
        });
        evs.last().unwrap().tracker.clone()
    };

    let mut out = cs.clone();
    let mut emitted_step: BTreeSet<Proposition> = BTreeSet::new();
    let push = |out: &mut ClauseSet, c: Clause| {
        if !out.clauses().contains(&c) {
            out.push(c);
        }
    };
    for clause in cs.clauses() {
        let (quantifier, goal, ind) = match clause {
            Clause::ASometime { goal, .. } => (PathQuantifier::All, goal, None),
            Clause::ESometime { goal, ind, .. } => (PathQuantifier::Exists, goal, Some(ind)),
            _ => continue,
        };
        let tracker = find_tracker(quantifier, goal, ind, &mut eventualities);
        let w = Literal::pos(tracker.clone());
        let mut guarded: Vec<Literal> = clause.lhs().iter().map(Literal::complement).collect();
        guarded.push(goal.clone());
        guarded.push(w.clone());
        push(&mut out, Clause::initial(guarded.clone()));
        let step_body = vec![goal.clone(), w.clone()];
        match ind {
            None => {
                if emitted_step.insert(tracker) {
                    push(&mut out, Clause::a_step(vec![w.clone()], step_body));
                }
                push(&mut out, Clause::a_step(vec![], guarded));
            }
            Some(ind) => {
                if emitted_step.insert(tracker) {
                    push(&mut out, Clause::e_step(vec![w.clone()], step_body, ind.clone()));
                }
                push(&mut out, Clause::e_step(vec![], guarded, ind.clone()));
            }
        }
    }
    Augmented { clauses: out, eventualities }
}

/// A label-and-marks pair as plain formula sets.
pub type LabelPair = (BTreeSet<Formula>, BTreeSet<Formula>);

/// Result of one expansion step on an interior node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expansion {
    /// Every non-elementary formula is marked; the node is a state.
    State,
    /// Conjunctive formula: one child, or none when it is inconsistent.
    Alpha { chosen: Formula, child: Option<LabelPair> },
    /// Disjunctive formula: up to two children, inconsistent ones dropped.
    Beta { chosen: Formula, children: [Option<LabelPair>; 2] },
}

/// Applies one expansion step to a node given as explicit formula sets: the
/// structurally least unmarked non-elementary formula is resolved, children
/// failing propositional consistency are dropped.
pub fn expand(label: &BTreeSet<Formula>, marked: &BTreeSet<Formula>) -> Expansion {
    let scratch = Formula::conjoin(label.iter().cloned().collect());
    let u = Universe::build(&scratch);
    let chosen = label
        .iter()
        .find(|f| !marked.contains(*f) && u.is_nonelementary(u.ids[*f]));
    let Some(chosen) = chosen else {
        return Expansion::State;
    };
    let make = |additions: &[&Formula]| -> Option<LabelPair> {
        let mut l = label.clone();
        for f in additions {
            if **f == Formula::False || l.contains(&(*f).clone().neg()) {
                return None;
            }
            l.insert((*f).clone());
        }
        let mut m = marked.clone();
        m.insert(chosen.clone());
        Some((l, m))
    };
    match u.class[u.ids[chosen] as usize] {
        closure::Class::Alpha(a, b) => {
            let (fa, fb) = (&u.formulas[a as usize], &u.formulas[b as usize]);
            Expansion::Alpha { chosen: chosen.clone(), child: make(&[fa, fb]) }
        }
        closure::Class::Beta(a, b) => {
            let (fa, fb) = (&u.formulas[a as usize], &u.formulas[b as usize]);
            Expansion::Beta {
                chosen: chosen.clone(),
                children: [make(&[fa]), make(&[fb])],
            }
        }
        _ => unreachable!("chosen formula is non-elementary"),
    }
}

/// One state of the tableau graph.
#[derive(Debug, Clone)]
pub(crate) struct TableauState {
    pub label: Bits,
    pub marked: Bits,
    /// Out-edges: direction (position into the index list, or the default
    /// direction) and target state.
    pub edges: Vec<(Option<usize>, usize)>,
}

/// The states-only tableau graph: nodes labelled by closure subsets, edges
/// optionally annotated with the index that produced the successor.
#[derive(Debug, Clone)]
pub struct Tableau {
    pub(crate) universe: Universe,
    pub(crate) indices: Vec<Index>,
    pub(crate) default_index: Index,
    pub(crate) states: Vec<TableauState>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("the reduced tableau is empty")]
    EmptyTableau,
    #[error("no state satisfies the initial obligations")]
    NoInitialState,
}

impl Tableau {
    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn label_formulas(&self, state: usize) -> BTreeSet<Formula> {
        self.states[state]
            .label
            .iter_ones()
            .map(|id| self.universe.formulas[id as usize].clone())
            .collect()
    }

    pub fn marked_formulas(&self, state: usize) -> BTreeSet<Formula> {
        self.states[state]
            .marked
            .iter_ones()
            .map(|id| self.universe.formulas[id as usize].clone())
            .collect()
    }

    /// Out-edges of a state with their index annotations resolved.
    pub fn edges(&self, state: usize) -> Vec<(Option<&Index>, usize)> {
        self.states[state]
            .edges
            .iter()
            .map(|&(pos, to)| (pos.map(|p| &self.indices[p]), to))
            .collect()
    }

    /// States whose label carries the full initial formula; these satisfy
    /// every initial clause of the originating set.
    pub fn initial_states(&self) -> Vec<usize> {
        (0..self.states.len())
            .filter(|&s| self.states[s].label.get(self.universe.root_id))
            .collect()
    }

    /// Whether the given eventuality counts as fulfilled at `state` inside
    /// this graph: a universal goal needs a finite witness subgraph that
    /// picks a goal-bound successor in every direction at every step, an
    /// existential one a path of matching index edges to the goal.
    pub fn is_pseudo_fulfilled(
        &self,
        state: usize,
        quantifier: PathQuantifier,
        goal: &Literal,
        ind: Option<&Index>,
    ) -> bool {
        let goal_formula = Formula::lit(goal);
        let Some(&goal_id) = self.universe.ids.get(&goal_formula) else {
            return false;
        };
        match quantifier {
            PathQuantifier::All => reduce::all_paths_reach(self, goal_id).contains(&state),
            PathQuantifier::Exists => {
                let pos = ind.and_then(|i| self.indices.iter().position(|j| j == i));
                match (ind, pos) {
                    (Some(_), Some(p)) => {
                        reduce::index_path_reaches(self, goal_id, p).contains(&state)
                    }
                    (None, _) => false,
                    (Some(_), None) => false,
                }
            }
        }
    }

    /// Plain-text adjacency listing, one block per state.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let initial: BTreeSet<usize> = self.initial_states().into_iter().collect();
        let _ = writeln!(out, "tableau with {} state(s)", self.states.len());
        for i in 0..self.states.len() {
            let tag = if initial.contains(&i) { " [initial]" } else { "" };
            let _ = writeln!(out, "state {i}{tag}:");
            let mut line = String::from("  label:");
            for f in self.label_formulas(i) {
                let _ = write!(line, " {f};");
            }
            let _ = writeln!(out, "{}", line.trim_end_matches(';'));
            for (ind, to) in self.edges(i) {
                match ind {
                    Some(ind) => {
                        let _ = writeln!(out, "  -> {to} <{ind}>");
                    }
                    None => {
                        let _ = writeln!(out, "  -> {to}");
                    }
                }
            }
        }
        out
    }

    /// Applies the deletion rules to a fixpoint and returns the reduced
    /// graph: successor-less states, states with unfulfillable
    /// eventualities, and states missing a witness for an indexed next
    /// obligation all go.
    pub fn reduce(&self) -> Tableau {
        reduce::reduce(self)
    }
}

/// Builds the tableau for an augmented clause set.
pub fn build_tableau(cs_aug: &ClauseSet) -> Tableau {
    build::build(cs_aug)
}

/// Reduces a tableau; free-function form of [`Tableau::reduce`].
pub fn reduce(t: &Tableau) -> Tableau {
    t.reduce()
}

/// The decision procedure end to end: normalize, augment, build, reduce,
/// and report whether some surviving state carries the initial obligations.
pub fn is_satisfiable(cs: &ClauseSet) -> bool {
    let cs = renormalize(cs);
    let aug = augment(&cs);
    let t = build_tableau(&aug.clauses);
    let r = t.reduce();
    !r.initial_states().is_empty()
}

/// Extracts a Büchi tree automaton from a reduced tableau; see
/// [`extract::extract_automaton`].
pub fn extract_automaton(
    rt: &Tableau,
    cs_aug: &ClauseSet,
) -> Result<crate::automata::BuchiTreeAutomaton, TableauError> {
    extract::extract_automaton(rt, cs_aug)
}

/// Extracts a satisfying indexed model from a reduced tableau; see
/// [`extract::extract_model`].
pub fn extract_model(rt: &Tableau) -> Result<crate::model::IndexedModel, TableauError> {
    extract::extract_model(rt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bnf::{normalize, validate_clause_set, RawClause, RawLhs, RawRhs, BoolExpr};
    use crate::model::{check_clause_set, enumerate_models};

    fn p(name: &str) -> Proposition {
        Proposition::new(name).unwrap()
    }

    fn ind(name: &str) -> Index {
        Index::new(name).unwrap()
    }

    fn lit(name: &str) -> Literal {
        Literal::pos(p(name))
    }

    fn nlit(name: &str) -> Literal {
        Literal::neg(p(name))
    }

    #[test]
    fn augment_universal_sometime() {
        let cs = ClauseSet::from_clauses(vec![Clause::a_sometime(vec![lit("p")], lit("q"))]);
        let aug = augment(&cs);
        assert_eq!(aug.eventualities.len(), 1);
        let w = Literal::pos(aug.eventualities[0].tracker.clone());
        let expected = ClauseSet::from_clauses(vec![
            Clause::a_sometime(vec![lit("p")], lit("q")),
            Clause::initial(vec![nlit("p"), lit("q"), w.clone()]),
            Clause::a_step(vec![w.clone()], vec![lit("q"), w.clone()]),
            Clause::a_step(vec![], vec![nlit("p"), lit("q"), w.clone()]),
        ]);
        assert!(aug.clauses.same_clauses(&expected), "got:\n{}", aug.clauses);
        assert!(validate_clause_set(&aug.clauses).is_clean());
    }

    #[test]
    fn augment_existential_sometime() {
        let f = ind("f");
        let cs = ClauseSet::from_clauses(vec![Clause::e_sometime(
            vec![lit("p")],
            lit("q"),
            f.clone(),
        )]);
        let aug = augment(&cs);
        let w = Literal::pos(aug.eventualities[0].tracker.clone());
        let expected = ClauseSet::from_clauses(vec![
            Clause::e_sometime(vec![lit("p")], lit("q"), f.clone()),
            Clause::initial(vec![nlit("p"), lit("q"), w.clone()]),
            Clause::e_step(vec![w.clone()], vec![lit("q"), w.clone()], f.clone()),
            Clause::e_step(vec![], vec![nlit("p"), lit("q"), w.clone()], f),
        ]);
        assert!(aug.clauses.same_clauses(&expected), "got:\n{}", aug.clauses);
    }

    #[test]
    fn augment_without_sometime_clauses_is_identity() {
        let cs = ClauseSet::from_clauses(vec![
            Clause::initial(vec![lit("p")]),
            Clause::a_step(vec![lit("p")], vec![lit("q")]),
        ]);
        let aug = augment(&cs);
        assert_eq!(aug.clauses, cs);
        assert!(aug.eventualities.is_empty());
    }

    #[test]
    fn augment_shares_tracker_for_repeated_eventuality() {
        let f = ind("f");
        let cs = ClauseSet::from_clauses(vec![
            Clause::e_sometime(vec![lit("a")], lit("q"), f.clone()),
            Clause::e_sometime(vec![lit("b")], lit("q"), f.clone()),
            Clause::a_sometime(vec![lit("a")], lit("q")),
        ]);
        let aug = augment(&cs);
        // Same goal under E<f> twice shares one tracker; the A form is its
        // own eventuality.
        assert_eq!(aug.eventualities.len(), 2);
    }

    #[test]
    fn expand_always_formula() {
        let f = Formula::prop(p("p")).all_always();
        let label: BTreeSet<Formula> = [f.clone()].into_iter().collect();
        match expand(&label, &BTreeSet::new()) {
            Expansion::Alpha { chosen, child } => {
                assert_eq!(chosen, f);
                let (l, m) = child.expect("consistent");
                assert!(l.contains(&Formula::prop(p("p"))));
                assert!(l.contains(&f.clone().all_next()));
                assert!(m.contains(&f));
            }
            e => panic!("expected alpha, got {e:?}"),
        }
    }

    #[test]
    fn expand_sometime_formula_branches() {
        let f = Formula::prop(p("p")).all_sometime();
        let label: BTreeSet<Formula> = [f.clone()].into_iter().collect();
        match expand(&label, &BTreeSet::new()) {
            Expansion::Beta { children, .. } => {
                let (l1, _) = children[0].clone().expect("goal branch");
                let (l2, _) = children[1].clone().expect("defer branch");
                assert!(l1.contains(&Formula::prop(p("p"))));
                assert!(l2.contains(&f.clone().all_next()));
            }
            e => panic!("expected beta, got {e:?}"),
        }
    }

    #[test]
    fn expand_tautological_disjunction_keeps_both_children() {
        let f = Formula::prop(p("p")).or(Formula::prop(p("p")).neg());
        let label: BTreeSet<Formula> = [f].into_iter().collect();
        match expand(&label, &BTreeSet::new()) {
            Expansion::Beta { children, .. } => {
                assert!(children[0].is_some());
                assert!(children[1].is_some());
            }
            e => panic!("expected beta, got {e:?}"),
        }
    }

    #[test]
    fn expand_discards_inconsistent_child() {
        let q = Formula::prop(p("q"));
        let f = q.clone().or(Formula::prop(p("x")));
        let mut label: BTreeSet<Formula> = [f].into_iter().collect();
        label.insert(q.clone().neg());
        match expand(&label, &BTreeSet::new()) {
            Expansion::Beta { children, .. } => {
                assert!(children[0].is_none(), "q clashes with ~q");
                assert!(children[1].is_some());
            }
            e => panic!("expected beta, got {e:?}"),
        }
    }

    #[test]
    fn fully_marked_node_is_a_state() {
        let q = Formula::prop(p("q"));
        let label: BTreeSet<Formula> = [q.clone()].into_iter().collect();
        assert_eq!(expand(&label, &BTreeSet::new()), Expansion::State);
    }

    #[test]
    fn tableau_of_simple_fact() {
        let cs = ClauseSet::from_clauses(vec![Clause::initial(vec![lit("p")])]);
        let t = build_tableau(&cs);
        assert!(!t.is_empty());
        let initial = t.initial_states();
        assert_eq!(initial.len(), 1);
        assert!(t.label_formulas(initial[0]).contains(&Formula::prop(p("p"))));
        let r = t.reduce();
        assert!(!r.initial_states().is_empty());
        assert!(is_satisfiable(&cs));
    }

    #[test]
    fn tableau_of_contradiction_is_empty() {
        let cs = ClauseSet::from_clauses(vec![
            Clause::initial(vec![lit("p")]),
            Clause::initial(vec![nlit("p")]),
        ]);
        let t = build_tableau(&cs);
        assert!(t.is_empty());
        assert!(!is_satisfiable(&cs));
    }

    #[test]
    fn unfulfillable_eventuality_is_unsat() {
        // start => p; p => A F q; T => A X (~q); start => ~q.
        let cs = ClauseSet::from_clauses(vec![
            Clause::initial(vec![lit("p")]),
            Clause::a_sometime(vec![lit("p")], lit("q")),
            Clause::a_step(vec![], vec![nlit("q")]),
            Clause::initial(vec![nlit("q")]),
        ]);
        let aug = augment(&cs);
        let t = build_tableau(&aug.clauses);
        assert!(!t.is_empty(), "states exist before reduction");
        let r = t.reduce();
        assert!(r.initial_states().is_empty());
        assert!(!is_satisfiable(&cs));
        // The semantic oracle agrees.
        assert_eq!(enumerate_models(&cs, 3).unwrap(), None);
    }

    #[test]
    fn fulfilled_eventuality_is_sat_and_model_checks() {
        // start => p; p => E F <f> q.
        let raw = vec![
            RawClause::new(RawLhs::Start, RawRhs::Bool(BoolExpr::lit(lit("p")))),
            RawClause::new(
                RawLhs::lit(lit("p")),
                RawRhs::ExistsSometime(BoolExpr::lit(lit("q")), ind("f")),
            ),
        ];
        let cs = normalize(&raw).unwrap();
        assert!(is_satisfiable(&cs));
        let aug = augment(&cs);
        let rt = build_tableau(&aug.clauses).reduce();
        let m = extract_model(&rt).expect("model exists");
        assert!(m.validate().is_clean(), "{}", m.validate());
        assert!(check_clause_set(&m, &cs).unwrap());
        // The f-lasso from the root must hit q.
        let f = Formula::prop(p("q")).exists_sometime(ind("f"));
        assert!(crate::model::holds(&m, m.root, &f).unwrap());
    }

    #[test]
    fn pseudo_fulfillment_zero_length_witness() {
        // start => q; q => A F q: goal already present at the state.
        let cs = ClauseSet::from_clauses(vec![
            Clause::initial(vec![lit("q")]),
            Clause::a_sometime(vec![lit("q")], lit("q")),
        ]);
        let aug = augment(&cs);
        let t = build_tableau(&aug.clauses);
        for s in t.initial_states() {
            assert!(t.is_pseudo_fulfilled(s, PathQuantifier::All, &lit("q"), None));
        }
        assert!(is_satisfiable(&cs));
    }

    #[test]
    fn pseudo_fulfillment_fails_off_goal_cycle() {
        // start => p & u-ish cycle that never reaches q along f.
        let cs = ClauseSet::from_clauses(vec![
            Clause::initial(vec![lit("p")]),
            Clause::e_step(vec![lit("p")], vec![lit("p")], ind("f")),
            Clause::e_sometime(vec![lit("p")], lit("q"), ind("f")),
            Clause::a_step(vec![], vec![nlit("q")]),
            Clause::initial(vec![nlit("q")]),
        ]);
        assert!(!is_satisfiable(&cs));
    }

    #[test]
    fn reduce_is_idempotent_and_order_independent() {
        let raw = vec![
            RawClause::new(RawLhs::Start, RawRhs::Bool(BoolExpr::lit(lit("p")))),
            RawClause::new(
                RawLhs::lit(lit("p")),
                RawRhs::ExistsSometime(BoolExpr::lit(lit("q")), ind("f")),
            ),
            RawClause::new(
                RawLhs::lit(lit("q")),
                RawRhs::AllNext(BoolExpr::lit(nlit("p"))),
            ),
        ];
        let cs = normalize(&raw).unwrap();
        let aug = augment(&cs);
        let t = build_tableau(&aug.clauses);
        let r1 = t.reduce();
        let r2 = r1.reduce();
        assert_eq!(r1.state_count(), r2.state_count());
        // A handful of sweep orders, all agreeing on the survivor count.
        let n = t.state_count();
        let forward: Vec<usize> = (0..n).collect();
        let backward: Vec<usize> = (0..n).rev().collect();
        let stride: Vec<usize> = (0..n).filter(|i| i % 2 == 0).chain((0..n).filter(|i| i % 2 == 1)).collect();
        for order in [forward, backward, stride] {
            let r = reduce::reduce_with_order(&t, &order);
            assert_eq!(r.state_count(), r1.state_count());
            let labels1: Vec<_> = (0..r1.state_count()).map(|s| r1.label_formulas(s)).collect();
            let labels2: Vec<_> = (0..r.state_count()).map(|s| r.label_formulas(s)).collect();
            assert_eq!(labels1, labels2);
        }
    }

    #[test]
    fn extract_automaton_from_simple_fact() {
        let cs = ClauseSet::from_clauses(vec![Clause::initial(vec![lit("p")])]);
        let aug = augment(&cs);
        let rt = build_tableau(&aug.clauses).reduce();
        let a = extract_automaton(&rt, &aug.clauses).expect("non-empty tableau");
        assert!(!a.initial.is_empty());
        assert_eq!(a.accepting.len(), a.state_count());
        assert!(!crate::automata::is_empty(&a));
        assert!(crate::automata::validate_automaton(&a).is_clean());
    }

    #[test]
    fn extract_from_empty_tableau_errors() {
        let cs = ClauseSet::from_clauses(vec![
            Clause::initial(vec![lit("p")]),
            Clause::initial(vec![nlit("p")]),
        ]);
        let aug = augment(&cs);
        let rt = build_tableau(&aug.clauses).reduce();
        assert!(rt.is_empty());
        assert_eq!(extract_model(&rt), Err(TableauError::EmptyTableau));
        assert!(extract_automaton(&rt, &aug.clauses).is_err());
    }

    #[test]
    fn extract_model_of_simple_fact_checks() {
        let cs = ClauseSet::from_clauses(vec![Clause::initial(vec![lit("p")])]);
        let aug = augment(&cs);
        let rt = build_tableau(&aug.clauses).reduce();
        let m = extract_model(&rt).expect("model");
        assert!(check_clause_set(&m, &cs).unwrap());
        assert!(m.valuation[m.root].contains(&p("p")));
    }

    #[test]
    fn two_eventualities_same_index_both_fulfilled() {
        // u holds everywhere and owes both E F <f> a and E F <f> b; the
        // extracted model's single f-path must meet both goals.
        let raw = vec![
            RawClause::new(RawLhs::Start, RawRhs::Bool(BoolExpr::lit(lit("u")))),
            RawClause::new(
                RawLhs::lit(lit("u")),
                RawRhs::AllNext(BoolExpr::lit(lit("u"))),
            ),
            RawClause::new(
                RawLhs::lit(lit("u")),
                RawRhs::ExistsSometime(BoolExpr::lit(lit("a")), ind("f")),
            ),
            RawClause::new(
                RawLhs::lit(lit("u")),
                RawRhs::ExistsSometime(BoolExpr::lit(lit("b")), ind("f")),
            ),
            // a and b never hold together, so no single state fulfils both.
            RawClause::new(
                RawLhs::Conj(vec![lit("a"), lit("b")]),
                RawRhs::Bool(BoolExpr::False),
            ),
        ];
        let cs = normalize(&raw).unwrap();
        assert!(is_satisfiable(&cs));
        let aug = augment(&renormalize(&cs));
        let rt = build_tableau(&aug.clauses).reduce();
        let m = extract_model(&rt).expect("model");
        assert!(m.validate().is_clean(), "{}", m.validate());
        assert!(check_clause_set(&m, &cs).unwrap(), "model fails the clause set");
    }

    #[test]
    fn dump_lists_every_state() {
        let cs = ClauseSet::from_clauses(vec![Clause::initial(vec![lit("p")])]);
        let t = build_tableau(&cs);
        let dump = t.dump();
        for s in 0..t.state_count() {
            assert!(dump.contains(&format!("state {s}")));
        }
    }
}
