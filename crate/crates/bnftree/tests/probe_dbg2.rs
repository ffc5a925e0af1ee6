use bnftree::bnf::*;
use bnftree::tableau::{augment, build_tableau};

fn nlit(n: &str) -> Literal { Literal::neg(Proposition::new(n).unwrap()) }
fn ind(n: &str) -> Index { Index::new(n).unwrap() }

#[test]
fn debug_reduction_steps() {
    let cs = renormalize(&ClauseSet::from_clauses(vec![
        Clause::a_sometime(vec![], nlit("b")),
        Clause::e_sometime(vec![], nlit("a"), ind("h")),
        Clause::a_sometime(vec![nlit("b")], Literal::pos(Proposition::new("a").unwrap())),
    ]));
    let aug = augment(&cs);
    let t = build_tableau(&aug.clauses);
    eprintln!("built {} states", t.state_count());
    // Reduce one full tableau; then inspect which states contain which eventualities
    for s in 0..t.state_count() {
        let label = t.label_formulas(s);
        let evs: Vec<String> = label.iter().filter(|f| matches!(f, bnftree::formula::Formula::AllSometime(_) | bnftree::formula::Formula::ExistsSometime(..))).map(|f| f.to_string()).collect();
        let lits: Vec<String> = label.iter().filter(|f| matches!(f, bnftree::formula::Formula::Prop(_) | bnftree::formula::Formula::Not(_))).map(|f| f.to_string()).collect();
        let succ: Vec<usize> = t.edges(s).iter().map(|&(_, to)| to).collect();
        eprintln!("state {s}: lits={lits:?} evs={evs:?} succ={succ:?}");
    }
    for s in 0..t.state_count() {
        for (q, goal, i) in [(PathQuantifier::All, nlit("b"), None), (PathQuantifier::Exists, nlit("a"), Some(ind("h")))] {
            let f = t.is_pseudo_fulfilled(s, q, &goal, i.as_ref());
            if !f { eprintln!("state {s}: NOT fulfilled: {q:?} {goal} {i:?}"); }
        }
    }
}
