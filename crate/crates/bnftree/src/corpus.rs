//! Seeded random generators for the test corpora: automata for the
//! emptiness and translation suites, clause sets for the decision-procedure
//! suites, and models plus formulae for the semantic identities. Everything
//! is driven by a caller-supplied ChaCha stream so corpora are reproducible
//! from a seed.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automata::{BuchiTreeAutomaton, Symbol, Transition};
use crate::bnf::{Clause, ClauseSet, Index, Literal, Proposition};
use crate::formula::Formula;
use crate::model::IndexedModel;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn prop(name: &str) -> Proposition {
    Proposition::new(name).expect("generator names are well formed")
}

fn index(name: &str) -> Index {
    Index::new(name).expect("generator names are well formed")
}

/// A fully random automaton with up to `max_states` states: arbitrary
/// tuples, degrees from {1, 2}, one or two symbols, any initial and
/// accepting sets. Used to exercise emptiness against the run-search
/// oracle.
pub fn random_automaton(r: &mut ChaCha8Rng, max_states: usize) -> BuchiTreeAutomaton {
    let n = r.gen_range(1..=max_states);
    let symbols: Vec<Symbol> = {
        let candidates = [
            Symbol::new(),
            [prop("p")].into_iter().collect(),
            [prop("r")].into_iter().collect(),
            [prop("p"), prop("r")].into_iter().collect(),
        ];
        let count = r.gen_range(1..=2);
        let mut picked: Vec<Symbol> = Vec::new();
        while picked.len() < count {
            let s = candidates[r.gen_range(0..candidates.len())].clone();
            if !picked.contains(&s) {
                picked.push(s);
            }
        }
        picked
    };
    let degrees: Vec<usize> = vec![1, 2];
    let mut transitions = Vec::new();
    for s in 0..n {
        for _ in 0..r.gen_range(0..=3) {
            let degree = degrees[r.gen_range(0..degrees.len())];
            let tuple = (0..degree).map(|_| r.gen_range(0..n)).collect();
            transitions.push(Transition {
                from: s,
                symbol: symbols[r.gen_range(0..symbols.len())].clone(),
                degree,
                tuple,
            });
        }
    }
    transitions.sort();
    transitions.dedup();
    let initial = random_subset(r, n, false);
    let accepting = random_subset(r, n, true);
    BuchiTreeAutomaton {
        alphabet: symbols.into_iter().collect(),
        degrees: degrees.into_iter().collect(),
        state_names: (0..n).map(|i| format!("s{i}")).collect(),
        transitions,
        initial,
        accepting,
    }
}

fn random_subset(r: &mut ChaCha8Rng, n: usize, allow_empty: bool) -> BTreeSet<usize> {
    loop {
        let set: BTreeSet<usize> = (0..n).filter(|_| r.gen_bool(0.5)).collect();
        if allow_empty || !set.is_empty() {
            return set;
        }
    }
}

/// A random automaton in the class the clause-set translation captures
/// faithfully: every state owns exactly one transition tuple, the tuple's
/// components agree on acceptance membership, and the symbol read is
/// determined by that class, so accepting and non-accepting states never
/// share a label. Within the class, emptiness varies freely with the cycle
/// structure.
pub fn random_encodable_automaton(r: &mut ChaCha8Rng) -> BuchiTreeAutomaton {
    let n = r.gen_range(1..=3);
    let sym_acc: Symbol = [prop("p")].into_iter().collect();
    let sym_rej: Symbol = [prop("r")].into_iter().collect();
    let accepting = random_subset(r, n, true);
    let mut transitions = Vec::new();
    for s in 0..n {
        let acc_pool: Vec<usize> = accepting.iter().copied().collect();
        let rej_pool: Vec<usize> = (0..n).filter(|x| !accepting.contains(x)).collect();
        let use_acc = if acc_pool.is_empty() {
            false
        } else if rej_pool.is_empty() {
            true
        } else {
            r.gen_bool(0.5)
        };
        let (pool, symbol) = if use_acc {
            (&acc_pool, sym_acc.clone())
        } else {
            (&rej_pool, sym_rej.clone())
        };
        let degree = r.gen_range(1..=2);
        let tuple = (0..degree).map(|_| pool[r.gen_range(0..pool.len())]).collect();
        transitions.push(Transition { from: s, symbol, degree, tuple });
    }
    BuchiTreeAutomaton {
        alphabet: [sym_acc, sym_rej].into_iter().collect(),
        degrees: [1, 2].into_iter().collect(),
        state_names: (0..n).map(|i| format!("s{i}")).collect(),
        transitions,
        initial: random_subset(r, n, false),
        accepting,
    }
}

/// A random strict clause set: up to `max_clauses` clauses over up to six
/// propositions and two indices, mixing all five clause shapes.
pub fn random_clause_set(r: &mut ChaCha8Rng, max_clauses: usize) -> ClauseSet {
    let props: Vec<Proposition> = ["a", "b", "c", "d", "e", "f"]
        .iter()
        .take(r.gen_range(2..=6))
        .map(|s| prop(s))
        .collect();
    let inds = [index("g"), index("h")];
    let ind_count = r.gen_range(1..=2);
    let mut clauses = Vec::new();
    let n = r.gen_range(1..=max_clauses.max(1));
    for _ in 0..n {
        let lits = |r: &mut ChaCha8Rng, lo: usize, hi: usize| -> Vec<Literal> {
            let k = r.gen_range(lo..=hi);
            (0..k)
                .map(|_| {
                    let p = props[r.gen_range(0..props.len())].clone();
                    if r.gen_bool(0.5) {
                        Literal::pos(p)
                    } else {
                        Literal::neg(p)
                    }
                })
                .collect()
        };
        let clause = match r.gen_range(0..100) {
            0..=29 => {
                let rhs = lits(r, 1, 3);
                Clause::initial(rhs)
            }
            30..=54 => {
                let (lhs, rhs) = (lits(r, 0, 2), lits(r, 1, 3));
                Clause::a_step(lhs, rhs)
            }
            55..=74 => {
                let (lhs, rhs) = (lits(r, 0, 2), lits(r, 1, 3));
                let ind = inds[r.gen_range(0..ind_count)].clone();
                Clause::e_step(lhs, rhs, ind)
            }
            75..=89 => {
                let (lhs, goal) = (lits(r, 0, 2), lits(r, 1, 1).pop().unwrap());
                Clause::a_sometime(lhs, goal)
            }
            _ => {
                let (lhs, goal) = (lits(r, 0, 2), lits(r, 1, 1).pop().unwrap());
                let ind = inds[r.gen_range(0..ind_count)].clone();
                Clause::e_sometime(lhs, goal, ind)
            }
        };
        clauses.push(clause);
    }
    crate::bnf::renormalize(&ClauseSet::from_clauses(clauses))
}

/// A random connected indexed model: up to `max_states` states, up to three
/// propositions, one or two indices. Falls back to a ring on the first
/// index when random wiring keeps missing connectivity.
pub fn random_model(r: &mut ChaCha8Rng, max_states: usize) -> IndexedModel {
    let n = r.gen_range(1..=max_states);
    let props: Vec<Proposition> = ["p", "q", "r"]
        .iter()
        .take(r.gen_range(1..=3))
        .map(|s| prop(s))
        .collect();
    let ind_names = [index("f"), index("g")];
    let ind_count = r.gen_range(1..=2);
    for attempt in 0..20 {
        let valuation: Vec<BTreeSet<Proposition>> = (0..n)
            .map(|_| props.iter().filter(|_| r.gen_bool(0.5)).cloned().collect())
            .collect();
        let mut ind_succ = std::collections::BTreeMap::new();
        for ind in ind_names.iter().take(ind_count) {
            let mut f: Vec<usize> = (0..n).map(|_| r.gen_range(0..n)).collect();
            if attempt == 19 && ind == &ind_names[0] {
                // Guarantee connectivity on the last attempt.
                for (i, slot) in f.iter_mut().enumerate() {
                    *slot = (i + 1) % n;
                }
            }
            ind_succ.insert(ind.clone(), f);
        }
        let m = IndexedModel { valuation, ind_succ, root: 0 };
        if m.validate().is_clean() {
            return m;
        }
    }
    unreachable!("ring fallback always validates");
}

/// A random formula over the given propositions and indices, with bounded
/// connective depth.
pub fn random_formula(
    r: &mut ChaCha8Rng,
    props: &[Proposition],
    inds: &[Index],
    depth: usize,
) -> Formula {
    if depth == 0 || r.gen_bool(0.3) {
        return match r.gen_range(0..8) {
            0 => Formula::True,
            1 => Formula::False,
            _ => Formula::prop(props[r.gen_range(0..props.len())].clone()),
        };
    }
    match r.gen_range(0..9) {
        0 => random_formula(r, props, inds, depth - 1).neg(),
        1 => random_formula(r, props, inds, depth - 1)
            .and(random_formula(r, props, inds, depth - 1)),
        2 => random_formula(r, props, inds, depth - 1)
            .or(random_formula(r, props, inds, depth - 1)),
        3 => random_formula(r, props, inds, depth - 1)
            .implies(random_formula(r, props, inds, depth - 1)),
        4 => random_formula(r, props, inds, depth - 1).all_next(),
        5 => random_formula(r, props, inds, depth - 1)
            .exists_next(inds[r.gen_range(0..inds.len())].clone()),
        6 => random_formula(r, props, inds, depth - 1).all_always(),
        7 => random_formula(r, props, inds, depth - 1).all_sometime(),
        _ => random_formula(r, props, inds, depth - 1)
            .exists_sometime(inds[r.gen_range(0..inds.len())].clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::validate_automaton;
    use crate::bnf::validate_clause_set;

    #[test]
    fn generated_automata_validate() {
        let mut r = rng(11);
        for _ in 0..50 {
            let a = random_automaton(&mut r, 4);
            let report = validate_automaton(&a);
            assert!(report.is_clean(), "{report}");
        }
    }

    #[test]
    fn generated_encodable_automata_have_one_tuple_per_state() {
        let mut r = rng(12);
        for _ in 0..50 {
            let a = random_encodable_automaton(&mut r);
            assert!(validate_automaton(&a).is_clean());
            for s in 0..a.state_count() {
                assert_eq!(a.transitions_from(s).count(), 1);
            }
        }
    }

    #[test]
    fn generated_clause_sets_validate() {
        let mut r = rng(13);
        for _ in 0..50 {
            let cs = random_clause_set(&mut r, 8);
            assert!(validate_clause_set(&cs).is_clean());
        }
    }

    #[test]
    fn generated_models_validate() {
        let mut r = rng(14);
        for _ in 0..50 {
            assert!(random_model(&mut r, 4).validate().is_clean());
        }
    }

    #[test]
    fn generation_is_reproducible() {
        let a1 = random_automaton(&mut rng(99), 4);
        let a2 = random_automaton(&mut rng(99), 4);
        assert_eq!(a1, a2);
    }
}
