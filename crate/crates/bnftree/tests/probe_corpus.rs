// scratch corpus probe
use bnftree::automata::{find_accepting_run_bounded, is_empty};
use bnftree::corpus::{random_automaton, random_encodable_automaton, rng};
use bnftree::encode::{characteristic_clause_set, TranMode};
use bnftree::tableau::is_satisfiable;

#[test]
fn probe_emptiness_oracle_agreement() {
    let mut r = rng(501);
    let mut empties = 0;
    for i in 0..300 {
        let a = random_automaton(&mut r, 4);
        let fix = is_empty(&a);
        let run = find_accepting_run_bounded(&a, 2 * a.state_count());
        assert_eq!(fix, run.is_none(), "case {i} disagrees:\n{a:?}");
        if fix { empties += 1; }
        if let Some(run) = run {
            assert!(run.validate(&a).is_clean(), "case {i} run invalid");
        }
    }
    eprintln!("emptiness probe: 300 cases, {empties} empty");
}

#[test]
fn probe_theorem1_agreement_successor() {
    let mut r = rng(777);
    let mut empties = 0;
    let mut disagreements = vec![];
    let t0 = std::time::Instant::now();
    for i in 0..120 {
        let a = random_encodable_automaton(&mut r);
        let empty = is_empty(&a);
        if empty { empties += 1; }
        let enc = characteristic_clause_set(&a, TranMode::Successor).expect("class is label-consistent");
        let sat = is_satisfiable(&enc.clauses);
        if empty != !sat {
            disagreements.push(i);
            eprintln!("case {i}: empty={empty} sat={sat}\n{a:?}");
        }
    }
    eprintln!("theorem1 successor probe: 120 cases, {empties} empty, {} disagreements, {:?}", disagreements.len(), t0.elapsed());
    assert!(disagreements.is_empty(), "disagreements at {disagreements:?}");
}

#[test]
fn probe_theorem1_agreement_positional() {
    let mut r = rng(777);
    let mut disagreements = vec![];
    let t0 = std::time::Instant::now();
    for i in 0..120 {
        let a = random_encodable_automaton(&mut r);
        let empty = is_empty(&a);
        let enc = characteristic_clause_set(&a, TranMode::Positional).expect("class is label-consistent");
        let sat = is_satisfiable(&enc.clauses);
        if empty != !sat {
            disagreements.push((i, empty, sat));
        }
    }
    eprintln!("theorem1 positional probe: 120 cases, {} disagreements: {:?}, {:?}", disagreements.len(), disagreements, t0.elapsed());
}
