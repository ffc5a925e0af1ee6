// scratch integration probe
use bnftree::automata::{is_empty, symbol_of, BuchiTreeAutomaton, Transition};
use bnftree::bnf::Proposition;
use bnftree::encode::{characteristic_clause_set_with_labels, LabelMap, TranMode};
use bnftree::tableau::is_satisfiable;
use std::collections::BTreeSet;

fn p(name: &str) -> Proposition { Proposition::new(name).unwrap() }

fn paper_automaton() -> BuchiTreeAutomaton {
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

fn uniform_labels(a: &BuchiTreeAutomaton) -> LabelMap {
    let both: BTreeSet<Proposition> = [p("p"), p("r")].into_iter().collect();
    LabelMap::from_positive_parts(
        a,
        &[("s0".to_string(), both.clone()), ("s1".to_string(), both)].into_iter().collect(),
    ).unwrap()
}

#[test]
fn paper_pipeline_positive() {
    let a = paper_automaton();
    let enc = characteristic_clause_set_with_labels(&a, TranMode::Successor, uniform_labels(&a)).unwrap();
    eprintln!("clauses ({}):\n{}", enc.clauses.len(), enc.clauses);
    let t0 = std::time::Instant::now();
    assert!(!is_empty(&a), "automaton should be non-empty");
    let sat = is_satisfiable(&enc.clauses);
    eprintln!("satisfiability took {:?}", t0.elapsed());
    assert!(sat, "characteristic set should be satisfiable");
}

#[test]
fn paper_pipeline_negative() {
    let mut a = paper_automaton();
    a.accepting.clear();
    let enc = characteristic_clause_set_with_labels(&a, TranMode::Successor, uniform_labels(&a)).unwrap();
    let t0 = std::time::Instant::now();
    assert!(is_empty(&a));
    let sat = is_satisfiable(&enc.clauses);
    eprintln!("unsat check took {:?}", t0.elapsed());
    assert!(!sat, "empty-acceptance variant should be unsatisfiable");
}
