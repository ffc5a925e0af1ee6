//! Deletion rules over a built tableau. Three rules run to a fixpoint:
//! successor-less states go; states carrying an eventuality that is not
//! pseudo-fulfilled in the current graph go; states carrying an indexed
//! next obligation without a surviving witness go. The rules only ever
//! delete, so any sweep order reaches the same fixpoint.

use std::collections::BTreeSet;

use crate::formula::Formula;

use super::closure::FormulaId;
use super::{Tableau, TableauState};

/// An eventuality occurring in the universe, pre-resolved for the rules.
struct EvInfo {
    id: FormulaId,
    goal: FormulaId,
    /// `None` for the universal form, index position for the existential.
    index_pos: Option<usize>,
}

/// An indexed next obligation, pre-resolved for rule three.
struct NextInfo {
    id: FormulaId,
    body: FormulaId,
    index_pos: usize,
}

fn eventualities(t: &Tableau) -> Vec<EvInfo> {
    let mut out = Vec::new();
    for (i, f) in t.universe.formulas.iter().enumerate() {
        match f {
            Formula::AllSometime(b) => out.push(EvInfo {
                id: i as FormulaId,
                goal: t.universe.ids[b.as_ref()],
                index_pos: None,
            }),
            Formula::ExistsSometime(b, ind) => out.push(EvInfo {
                id: i as FormulaId,
                goal: t.universe.ids[b.as_ref()],
                index_pos: Some(
                    t.indices.iter().position(|j| j == ind).expect("known index"),
                ),
            }),
            _ => {}
        }
    }
    out
}

fn next_obligations(t: &Tableau) -> Vec<NextInfo> {
    let mut out = Vec::new();
    for (i, f) in t.universe.formulas.iter().enumerate() {
        if let Formula::ExistsNext(b, ind) = f {
            out.push(NextInfo {
                id: i as FormulaId,
                body: t.universe.ids[b.as_ref()],
                index_pos: t.indices.iter().position(|j| j == ind).expect("known index"),
            });
        }
    }
    out
}

/// States that can root a finite witness subgraph whose every terminal
/// carries `goal`. Successors along one direction are alternative futures,
/// so the witness picks one per direction: a state is good when the goal
/// is here, or when every direction still present offers some good
/// successor. Reading it as "all successors good" would delete any state
/// with one procrastinating branch and break completeness.
fn all_paths_reach_alive(t: &Tableau, alive: &[bool], goal: FormulaId) -> Vec<bool> {
    let n = t.states.len();
    let mut good = vec![false; n];
    for s in 0..n {
        if alive[s] && t.states[s].label.get(goal) {
            good[s] = true;
        }
    }
    loop {
        let mut grew = false;
        for s in 0..n {
            if !alive[s] || good[s] {
                continue;
            }
            let mut directions: Vec<Option<usize>> = Vec::new();
            for &(pos, to) in &t.states[s].edges {
                if alive[to] && !directions.contains(&pos) {
                    directions.push(pos);
                }
            }
            let covered = !directions.is_empty()
                && directions.iter().all(|&d| {
                    t.states[s]
                        .edges
                        .iter()
                        .any(|&(pos, to)| pos == d && alive[to] && good[to])
                });
            if covered {
                good[s] = true;
                grew = true;
            }
        }
        if !grew {
            return good;
        }
    }
}

/// States from which some path of `index_pos`-annotated edges (over
/// surviving states) reaches a state containing `goal`.
fn index_path_reaches_alive(
    t: &Tableau,
    alive: &[bool],
    goal: FormulaId,
    index_pos: usize,
) -> Vec<bool> {
    let n = t.states.len();
    let mut good = vec![false; n];
    for s in 0..n {
        if alive[s] && t.states[s].label.get(goal) {
            good[s] = true;
        }
    }
    loop {
        let mut grew = false;
        for s in 0..n {
            if !alive[s] || good[s] {
                continue;
            }
            let reaches = t.states[s]
                .edges
                .iter()
                .any(|&(pos, to)| pos == Some(index_pos) && alive[to] && good[to]);
            if reaches {
                good[s] = true;
                grew = true;
            }
        }
        if !grew {
            return good;
        }
    }
}

pub(crate) fn all_paths_reach(t: &Tableau, goal: FormulaId) -> BTreeSet<usize> {
    let alive = vec![true; t.states.len()];
    all_paths_reach_alive(t, &alive, goal)
        .into_iter()
        .enumerate()
        .filter_map(|(s, g)| g.then_some(s))
        .collect()
}

pub(crate) fn index_path_reaches(t: &Tableau, goal: FormulaId, pos: usize) -> BTreeSet<usize> {
    let alive = vec![true; t.states.len()];
    index_path_reaches_alive(t, &alive, goal, pos)
        .into_iter()
        .enumerate()
        .filter_map(|(s, g)| g.then_some(s))
        .collect()
}

pub(crate) fn reduce(t: &Tableau) -> Tableau {
    let order: Vec<usize> = (0..t.states.len()).collect();
    reduce_with_order(t, &order)
}

/// Reduction with an explicit sweep order. Deletions are monotone, so every
/// order yields the same reduced graph; this entry point exists so tests
/// can exercise that confluence directly.
pub fn reduce_with_order(t: &Tableau, order: &[usize]) -> Tableau {
    let n = t.states.len();
    let mut alive = vec![true; n];
    let evs = eventualities(t);
    let nexts = next_obligations(t);

    loop {
        let mut changed = false;
        // Fulfilment sets recomputed against the current survivors.
        let fulfilled: Vec<Vec<bool>> = evs
            .iter()
            .map(|ev| match ev.index_pos {
                None => all_paths_reach_alive(t, &alive, ev.goal),
                Some(pos) => index_path_reaches_alive(t, &alive, ev.goal, pos),
            })
            .collect();
        for &s in order {
            if !alive[s] {
                continue;
            }
            let has_successor = t.states[s].edges.iter().any(|&(_, to)| alive[to]);
            let unfulfilled = evs.iter().enumerate().any(|(k, ev)| {
                t.states[s].label.get(ev.id) && !fulfilled[k][s]
            });
            let missing_witness = nexts.iter().any(|nx| {
                t.states[s].label.get(nx.id)
                    && !t.states[s].edges.iter().any(|&(pos, to)| {
                        pos == Some(nx.index_pos) && alive[to] && t.states[to].label.get(nx.body)
                    })
            });
            if !has_successor || unfulfilled || missing_witness {
                alive[s] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    // Renumber survivors compactly, preserving order.
    let remap: Vec<Option<usize>> = {
        let mut next = 0;
        alive
            .iter()
            .map(|&a| {
                if a {
                    let i = next;
                    next += 1;
                    Some(i)
                } else {
                    None
                }
            })
            .collect()
    };
    let states = (0..n)
        .filter(|&s| alive[s])
        .map(|s| TableauState {
            label: t.states[s].label.clone(),
            marked: t.states[s].marked.clone(),
            edges: t.states[s]
                .edges
                .iter()
                .filter_map(|&(pos, to)| remap[to].map(|to| (pos, to)))
                .collect(),
        })
        .collect();
    Tableau {
        universe: t.universe.clone(),
        indices: t.indices.clone(),
        default_index: t.default_index.clone(),
        states,
    }
}
