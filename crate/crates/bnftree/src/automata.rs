//! Büchi tree automata: the data model, validation, an emptiness decision
//! via a nested fixpoint, and an independent brute-force search for bounded
//! accepting runs in lasso form.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::bnf::{Proposition, ValidationReport};

pub type StateId = usize;

/// An alphabet symbol: the set of propositions it makes true.
pub type Symbol = BTreeSet<Proposition>;

pub fn symbol_of(props: &[Proposition]) -> Symbol {
    props.iter().cloned().collect()
}

/// One entry of the transition function: from `from`, reading `symbol` with
/// branching degree `degree`, the automaton may split into `tuple`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub from: StateId,
    pub symbol: Symbol,
    pub degree: usize,
    pub tuple: Vec<StateId>,
}

/// A Büchi automaton over infinite trees.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BuchiTreeAutomaton {
    pub alphabet: BTreeSet<Symbol>,
    pub degrees: BTreeSet<usize>,
    pub state_names: Vec<String>,
    pub transitions: Vec<Transition>,
    pub initial: BTreeSet<StateId>,
    pub accepting: BTreeSet<StateId>,
}

impl BuchiTreeAutomaton {
    pub fn state_count(&self) -> usize {
        self.state_names.len()
    }

    pub fn state_id(&self, name: &str) -> Option<StateId> {
        self.state_names.iter().position(|n| n == name)
    }

    pub fn transitions_from(&self, s: StateId) -> impl Iterator<Item = &Transition> {
        self.transitions.iter().filter(move |t| t.from == s)
    }

    /// All tuples licensed from `s` reading `symbol` with degree `degree`.
    pub fn delta(&self, s: StateId, symbol: &Symbol, degree: usize) -> Vec<&Vec<StateId>> {
        self.transitions
            .iter()
            .filter(|t| t.from == s && &t.symbol == symbol && t.degree == degree)
            .map(|t| &t.tuple)
            .collect()
    }

    /// Distinct successor states of `s` across all its tuples, ascending.
    pub fn distinct_successors(&self, s: StateId) -> Vec<StateId> {
        let set: BTreeSet<StateId> = self
            .transitions_from(s)
            .flat_map(|t| t.tuple.iter().copied())
            .collect();
        set.into_iter().collect()
    }
}

/// Checks the structural invariants: tuple arities match their degree, all
/// referenced entities are declared, and the state sets are in range. An
/// empty initial set is legal but worth a warning.
pub fn validate_automaton(a: &BuchiTreeAutomaton) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = a.state_count();
    for (i, t) in a.transitions.iter().enumerate() {
        if t.from >= n {
            report.violations.push(format!("transition {i}: unknown source state"));
        }
        if t.tuple.len() != t.degree {
            report.violations.push(format!(
                "transition {i}: tuple of length {} under degree {}",
                t.tuple.len(),
                t.degree
            ));
        }
        if !a.degrees.contains(&t.degree) {
            report
                .violations
                .push(format!("transition {i}: degree {} not declared", t.degree));
        }
        if !a.alphabet.contains(&t.symbol) {
            report.violations.push(format!("transition {i}: symbol not declared"));
        }
        for &c in &t.tuple {
            if c >= n {
                report
                    .violations
                    .push(format!("transition {i}: unknown state in tuple"));
            }
        }
    }
    for &s in a.initial.iter().chain(a.accepting.iter()) {
        if s >= n {
            report.violations.push(format!("state set references unknown state {s}"));
        }
    }
    if a.initial.is_empty() {
        report.warnings.push("no initial state; the language is empty".into());
    }
    report
}

/// Decides language emptiness. A state is *live* when it roots some regular
/// run every branch of which revisits accepting states forever; that set is
/// the nested fixpoint
///
/// ```text
/// V = nu Y. mu Z. { s | exists a tuple from s with every component
///                       in (accepting ∩ Y) ∪ Z }
/// ```
///
/// and the language is nonempty exactly when an initial state is live.
pub fn is_empty(a: &BuchiTreeAutomaton) -> bool {
    let live = live_states(a);
    !a.initial.iter().any(|s| live.contains(s))
}

fn live_states(a: &BuchiTreeAutomaton) -> BTreeSet<StateId> {
    let mut y: BTreeSet<StateId> = (0..a.state_count()).collect();
    loop {
        let accepting_y: BTreeSet<StateId> = a.accepting.intersection(&y).copied().collect();
        let mut z = BTreeSet::new();
        loop {
            let mut grew = false;
            for s in 0..a.state_count() {
                if z.contains(&s) {
                    continue;
                }
                let ok = a.transitions_from(s).any(|t| {
                    t.tuple
                        .iter()
                        .all(|c| accepting_y.contains(c) || z.contains(c))
                });
                if ok {
                    z.insert(s);
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        if z == y {
            return y;
        }
        y = z;
    }
}

/// A finite presentation of an infinite accepting run: a graph whose nodes
/// carry automaton states, where child edges may loop back, and where every
/// cycle reachable from the root passes an accepting label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularRun {
    pub root: usize,
    /// Node label: the automaton state at that node.
    pub labels: Vec<StateId>,
    /// The symbol read and degree chosen at each node.
    pub symbols: Vec<Symbol>,
    pub degrees: Vec<usize>,
    /// Ordered children per node, length matching the degree.
    pub children: Vec<Vec<usize>>,
}

impl RegularRun {
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    /// Audits the run against its automaton: root initial, every node's
    /// choice licensed by delta, every reachable cycle through acceptance.
    pub fn validate(&self, a: &BuchiTreeAutomaton) -> ValidationReport {
        let mut report = ValidationReport::default();
        if self.labels.len() != self.children.len()
            || self.labels.len() != self.symbols.len()
            || self.labels.len() != self.degrees.len()
        {
            report.violations.push("ragged node tables".into());
            return report;
        }
        if !a.initial.contains(&self.labels[self.root]) {
            report.violations.push("root not labelled by an initial state".into());
        }
        for (n, kids) in self.children.iter().enumerate() {
            if kids.len() != self.degrees[n] {
                report
                    .violations
                    .push(format!("node {n}: child count differs from degree"));
                continue;
            }
            let child_labels: Vec<StateId> = kids.iter().map(|&k| self.labels[k]).collect();
            let licensed = a
                .delta(self.labels[n], &self.symbols[n], self.degrees[n])
                .iter()
                .any(|tuple| **tuple == child_labels);
            if !licensed {
                report
                    .violations
                    .push(format!("node {n}: children not licensed by any transition"));
            }
        }
        if self.has_cycle_avoiding_acceptance(a) {
            report
                .violations
                .push("a reachable cycle avoids every accepting state".into());
        }
        report
    }

    fn has_cycle_avoiding_acceptance(&self, a: &BuchiTreeAutomaton) -> bool {
        // Reachable nodes with accepting labels removed must form a DAG.
        let mut reach = vec![false; self.node_count()];
        let mut stack = vec![self.root];
        while let Some(n) = stack.pop() {
            if reach[n] {
                continue;
            }
            reach[n] = true;
            stack.extend(self.children[n].iter().copied());
        }
        let keep: Vec<usize> = (0..self.node_count())
            .filter(|&n| reach[n] && !a.accepting.contains(&self.labels[n]))
            .collect();
        has_cycle(&keep, |n| {
            self.children[n]
                .iter()
                .copied()
                .filter(|&k| reach[k] && !a.accepting.contains(&self.labels[k]))
                .collect()
        })
    }
}

fn has_cycle(nodes: &[usize], succ: impl Fn(usize) -> Vec<usize>) -> bool {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        White,
        Grey,
        Black,
    }
    let max = nodes.iter().copied().max().map_or(0, |m| m + 1);
    let mut mark = vec![Mark::White; max];
    let in_set: BTreeSet<usize> = nodes.iter().copied().collect();
    for &start in nodes {
        if mark[start] != Mark::White {
            continue;
        }
        // Iterative DFS with an explicit exit action.
        let mut stack = vec![(start, false)];
        while let Some((n, done)) = stack.pop() {
            if done {
                mark[n] = Mark::Black;
                continue;
            }
            if mark[n] == Mark::Black {
                continue;
            }
            if mark[n] == Mark::Grey {
                continue;
            }
            mark[n] = Mark::Grey;
            stack.push((n, true));
            for k in succ(n) {
                if !in_set.contains(&k) {
                    continue;
                }
                match mark[k] {
                    Mark::Grey => return true,
                    Mark::White => stack.push((k, false)),
                    Mark::Black => {}
                }
            }
        }
    }
    false
}

/// Exhaustive search for an accepting regular run using at most `max_nodes`
/// nodes. Independent of [`is_empty`]: it enumerates one-tuple-per-state
/// choice functions over the reachable part and audits cycles directly.
/// Memoryless choices suffice because a live state can fix, once and for
/// all, the tuple that witnessed its fixpoint rank.
pub fn find_accepting_run_bounded(
    a: &BuchiTreeAutomaton,
    max_nodes: usize,
) -> Option<RegularRun> {
    assert!(max_nodes >= 1, "max_nodes must be positive");
    let mut initial: Vec<StateId> = a.initial.iter().copied().collect();
    initial.sort_unstable();
    for s0 in initial {
        let mut choices: BTreeMap<StateId, &Transition> = BTreeMap::new();
        if assign(a, s0, &mut choices, max_nodes) {
            return Some(build_run(s0, &choices));
        }
    }
    None
}

/// Backtracking assignment of one transition per reachable state.
fn assign<'a>(
    a: &'a BuchiTreeAutomaton,
    root: StateId,
    choices: &mut BTreeMap<StateId, &'a Transition>,
    max_nodes: usize,
) -> bool {
    // Find the smallest reachable state without a chosen transition.
    let mut reach = BTreeSet::new();
    let mut stack = vec![root];
    while let Some(s) = stack.pop() {
        if !reach.insert(s) {
            continue;
        }
        if let Some(t) = choices.get(&s) {
            stack.extend(t.tuple.iter().copied());
        }
    }
    if reach.len() > max_nodes {
        return false;
    }
    let next = reach.iter().copied().find(|s| !choices.contains_key(s));
    let Some(s) = next else {
        // Fully assigned: accept iff no reachable cycle avoids acceptance.
        let nodes: Vec<StateId> = reach
            .iter()
            .copied()
            .filter(|s| !a.accepting.contains(s))
            .collect();
        return !has_cycle(&nodes, |s| {
            choices[&s]
                .tuple
                .iter()
                .copied()
                .filter(|c| !a.accepting.contains(c))
                .collect()
        });
    };
    for t in a.transitions_from(s) {
        choices.insert(s, t);
        if assign(a, root, choices, max_nodes) {
            return true;
        }
        choices.remove(&s);
    }
    false
}

fn build_run(root: StateId, choices: &BTreeMap<StateId, &Transition>) -> RegularRun {
    let mut ids: BTreeMap<StateId, usize> = BTreeMap::new();
    let mut order = Vec::new();
    let mut stack = vec![root];
    while let Some(s) = stack.pop() {
        if ids.contains_key(&s) {
            continue;
        }
        ids.insert(s, order.len());
        order.push(s);
        stack.extend(choices[&s].tuple.iter().copied());
    }
    let labels = order.clone();
    let symbols = order.iter().map(|s| choices[s].symbol.clone()).collect();
    let degrees = order.iter().map(|s| choices[s].degree).collect();
    let children = order
        .iter()
        .map(|s| choices[s].tuple.iter().map(|c| ids[c]).collect())
        .collect();
    RegularRun { root: 0, labels, symbols, degrees, children }
}

impl fmt::Display for RegularRun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "run with {} node(s), root 0:", self.node_count())?;
        for n in 0..self.node_count() {
            let kids: Vec<String> = self.children[n].iter().map(|k| k.to_string()).collect();
            writeln!(
                f,
                "  node {n}: state {} -> ({})",
                self.labels[n],
                kids.join(", ")
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bnf::Proposition;

    fn p(name: &str) -> Proposition {
        Proposition::new(name).unwrap()
    }

    /// The two-state automaton whose every accepting run keeps revisiting
    /// its accepting state on each branch.
    pub(crate) fn paper_automaton() -> BuchiTreeAutomaton {
        let sp = symbol_of(&[p("p")]);
        let sr = symbol_of(&[p("r")]);
        BuchiTreeAutomaton {
            alphabet: [sp.clone(), sr.clone()].into_iter().collect(),
            degrees: [2].into_iter().collect(),
            state_names: vec!["s0".into(), "s1".into()],
            transitions: vec![
                Transition { from: 0, symbol: sp.clone(), degree: 2, tuple: vec![0, 0] },
                Transition { from: 1, symbol: sp, degree: 2, tuple: vec![0, 0] },
                Transition { from: 0, symbol: sr.clone(), degree: 2, tuple: vec![1, 1] },
                Transition { from: 1, symbol: sr, degree: 2, tuple: vec![1, 1] },
            ],
            initial: [0].into_iter().collect(),
            accepting: [1].into_iter().collect(),
        }
    }

    #[test]
    fn paper_automaton_validates() {
        assert!(validate_automaton(&paper_automaton()).is_clean());
    }

    #[test]
    fn arity_mismatch_flagged() {
        let mut a = paper_automaton();
        a.transitions[0].tuple = vec![0, 0, 0];
        let report = validate_automaton(&a);
        assert!(report
            .violations
            .iter()
            .any(|v| v.contains("tuple of length 3 under degree 2")));
    }

    #[test]
    fn empty_initial_set_warns() {
        let mut a = paper_automaton();
        a.initial.clear();
        let report = validate_automaton(&a);
        assert!(report.is_clean());
        assert!(!report.warnings.is_empty());
        assert!(is_empty(&a));
    }

    #[test]
    fn paper_automaton_nonempty() {
        assert!(!is_empty(&paper_automaton()));
    }

    #[test]
    fn no_accepting_states_is_empty() {
        let mut a = paper_automaton();
        a.accepting.clear();
        assert!(is_empty(&a));
        assert_eq!(find_accepting_run_bounded(&a, 8), None);
    }

    #[test]
    fn minimal_self_loop_run() {
        let sp = symbol_of(&[p("p")]);
        let a = BuchiTreeAutomaton {
            alphabet: [sp.clone()].into_iter().collect(),
            degrees: [1].into_iter().collect(),
            state_names: vec!["s0".into()],
            transitions: vec![Transition { from: 0, symbol: sp, degree: 1, tuple: vec![0] }],
            initial: [0].into_iter().collect(),
            accepting: [0].into_iter().collect(),
        };
        let run = find_accepting_run_bounded(&a, 1).expect("one-node lasso");
        assert_eq!(run.node_count(), 1);
        assert_eq!(run.children[0], vec![0]);
        assert!(run.validate(&a).is_clean());
    }

    #[test]
    fn paper_automaton_run_found_and_audited() {
        let a = paper_automaton();
        let run = find_accepting_run_bounded(&a, 4).expect("accepting run");
        assert!(run.node_count() <= 4);
        assert!(run.validate(&a).is_clean(), "{}", run.validate(&a));
    }

    #[test]
    fn emptiness_needs_reachable_acceptance() {
        // Accepting state exists but sits on a dead branch requirement:
        // from s0 every tuple goes through s1 which loops without acceptance.
        let sp = symbol_of(&[p("p")]);
        let a = BuchiTreeAutomaton {
            alphabet: [sp.clone()].into_iter().collect(),
            degrees: [1, 2].into_iter().collect(),
            state_names: vec!["s0".into(), "s1".into(), "s2".into()],
            transitions: vec![
                Transition { from: 0, symbol: sp.clone(), degree: 2, tuple: vec![1, 2] },
                Transition { from: 1, symbol: sp.clone(), degree: 1, tuple: vec![1] },
                Transition { from: 2, symbol: sp, degree: 1, tuple: vec![2] },
            ],
            initial: [0].into_iter().collect(),
            accepting: [2].into_iter().collect(),
        };
        // Branch through s1 never meets acceptance.
        assert!(is_empty(&a));
        assert_eq!(find_accepting_run_bounded(&a, 6), None);
    }
}
