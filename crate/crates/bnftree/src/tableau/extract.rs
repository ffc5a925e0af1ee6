//! Extraction from a reduced tableau: a Büchi tree automaton whose runs
//! unwind the graph, and a finite indexed model witnessing satisfiability.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::automata::{BuchiTreeAutomaton, Symbol, Transition};
use crate::bnf::{free_symbols, ClauseSet, Index, Proposition};
use crate::formula::Formula;
use crate::model::IndexedModel;

use super::closure::FormulaId;
use super::{Tableau, TableauError};

/// Positive propositions of a state's label: its valuation.
fn state_valuation(t: &Tableau, s: usize) -> BTreeSet<Proposition> {
    t.states[s]
        .label
        .iter_ones()
        .filter_map(|id| match &t.universe.formulas[id as usize] {
            Formula::Prop(p) => Some(p.clone()),
            _ => None,
        })
        .collect()
}

/// Per-direction successor lists of a state, in direction order. Directions
/// that lost every successor are omitted.
fn directions(t: &Tableau, s: usize) -> Vec<(Option<usize>, Vec<usize>)> {
    let mut by_dir: BTreeMap<Option<usize>, Vec<usize>> = BTreeMap::new();
    for &(pos, to) in &t.states[s].edges {
        by_dir.entry(pos).or_default().push(to);
    }
    by_dir
        .into_iter()
        .map(|(pos, mut targets)| {
            targets.sort_unstable();
            targets.dedup();
            (pos, targets)
        })
        .collect()
}

/// Builds an automaton from a reduced tableau: states are the tableau
/// states, each reading the symbol of its own valuation; the transition
/// tuples pick one successor per surviving direction; initial states are
/// those satisfying the initial obligations; every state is accepting,
/// fulfilment having already been enforced by the reduction.
pub(crate) fn extract_automaton(
    rt: &Tableau,
    cs_aug: &ClauseSet,
) -> Result<BuchiTreeAutomaton, TableauError> {
    if rt.is_empty() {
        return Err(TableauError::EmptyTableau);
    }
    let (props, _) = free_symbols(cs_aug);
    let n = rt.state_count();

    let symbols: Vec<Symbol> = (0..n)
        .map(|s| {
            state_valuation(rt, s)
                .into_iter()
                .filter(|p| props.contains(p))
                .collect()
        })
        .collect();

    let mut transitions = Vec::new();
    let mut degrees = BTreeSet::new();
    for s in 0..n {
        let dirs = directions(rt, s);
        let degree = dirs.len();
        if degree == 0 {
            continue; // cannot happen in a reduced graph; kept for safety
        }
        degrees.insert(degree);
        // One tuple per choice of a successor in each direction.
        let mut tuples: Vec<Vec<usize>> = vec![vec![]];
        for (_, targets) in &dirs {
            let mut next = Vec::new();
            for tuple in &tuples {
                for &target in targets {
                    let mut t2 = tuple.clone();
                    t2.push(target);
                    next.push(t2);
                }
            }
            tuples = next;
        }
        for tuple in tuples {
            transitions.push(Transition {
                from: s,
                symbol: symbols[s].clone(),
                degree,
                tuple,
            });
        }
    }

    Ok(BuchiTreeAutomaton {
        alphabet: symbols.iter().cloned().collect(),
        degrees,
        state_names: (0..n).map(|i| format!("n{i}")).collect(),
        transitions,
        initial: rt.initial_states().into_iter().collect(),
        accepting: (0..n).collect(),
    })
}

/// One eventuality to schedule during model extraction.
struct Obligation {
    id: FormulaId,
    goal: FormulaId,
    /// `None` for the universal form, an index position for the
    /// existential form.
    index_pos: Option<usize>,
    /// Progress measure per state: steps to the goal along the relevant
    /// witness structure; `usize::MAX` where unreachable.
    rank: Vec<usize>,
}

/// Builds a satisfying model from a reduced tableau. The model walks the
/// graph with a rotating focus over the eventualities that occur anywhere:
/// an owed existential goal is chased along a shortest path of its index's
/// edges, an owed universal goal forces every direction onto successors of
/// strictly smaller witness rank, and everything else routes to the first
/// available successor. Obligations persist in the labels while out of
/// focus, so one full rotation fulfils them all.
pub(crate) fn extract_model(rt: &Tableau) -> Result<IndexedModel, TableauError> {
    if rt.is_empty() {
        return Err(TableauError::EmptyTableau);
    }
    let root_state = *rt
        .initial_states()
        .first()
        .ok_or(TableauError::NoInitialState)?;
    let n = rt.state_count();

    let model_indices: Vec<Index> = if rt.indices.is_empty() {
        vec![rt.default_index.clone()]
    } else {
        rt.indices.clone()
    };

    let mut obligations: Vec<Obligation> = Vec::new();
    for (id, f) in rt.universe.formulas.iter().enumerate() {
        let id = id as FormulaId;
        let occurs = || (0..n).any(|s| rt.states[s].label.get(id));
        match f {
            Formula::AllSometime(body) if occurs() => {
                let goal = rt.universe.ids[body.as_ref()];
                obligations.push(Obligation {
                    id,
                    goal,
                    index_pos: None,
                    rank: universal_ranks(rt, goal),
                });
            }
            Formula::ExistsSometime(body, ind) if occurs() => {
                let goal = rt.universe.ids[body.as_ref()];
                let pos = rt.indices.iter().position(|j| j == ind).expect("known index");
                obligations.push(Obligation {
                    id,
                    goal,
                    index_pos: Some(pos),
                    rank: index_distances(rt, goal, pos),
                });
            }
            _ => {}
        }
    }

    let focus_len = obligations.len().max(1);
    let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
    let mut order: Vec<(usize, usize)> = Vec::new();
    let mut succ: Vec<Vec<usize>> = Vec::new();
    let root_key = (root_state, 0usize);
    ids.insert(root_key, 0);
    order.push(root_key);
    let mut work = vec![root_key];

    while let Some((s, focus)) = work.pop() {
        let pending = obligations.get(focus).filter(|ob| {
            rt.states[s].label.get(ob.id) && !rt.states[s].label.get(ob.goal)
        });
        let next_focus = if pending.is_some() { focus } else { (focus + 1) % focus_len };
        let row: Vec<usize> = (0..model_indices.len())
            .map(|pos| route(rt, s, pos, pending))
            .map(|target| {
                let key = (target, next_focus);
                *ids.entry(key).or_insert_with(|| {
                    order.push(key);
                    work.push(key);
                    order.len() - 1
                })
            })
            .collect();
        let id = ids[&(s, focus)];
        if succ.len() <= id {
            succ.resize(id + 1, Vec::new());
        }
        succ[id] = row;
    }

    let valuation = order.iter().map(|&(s, _)| state_valuation(rt, s)).collect();
    let ind_succ = model_indices
        .iter()
        .enumerate()
        .map(|(pos, ind)| (ind.clone(), succ.iter().map(|row| row[pos]).collect()))
        .collect();
    Ok(IndexedModel { valuation, ind_succ, root: 0 })
}

/// Chooses the successor of `s` along direction `pos`, honouring the
/// focused obligation when it is still owed here.
fn route(rt: &Tableau, s: usize, pos: usize, pending: Option<&Obligation>) -> usize {
    if let Some(ob) = pending {
        let relevant = match ob.index_pos {
            None => true,               // universal: every direction makes progress
            Some(p) => p == pos,        // existential: only its own index
        };
        if relevant {
            let annotation = if rt.indices.is_empty() { None } else { Some(pos) };
            let best = rt.states[s]
                .edges
                .iter()
                .filter(|&&(p, _)| p == annotation)
                .map(|&(_, to)| to)
                .min_by_key(|&to| (ob.rank[to], to));
            match (best, ob.index_pos) {
                (Some(target), Some(_)) => {
                    assert_ne!(
                        ob.rank[target],
                        usize::MAX,
                        "reduction left an unfulfillable eventuality behind"
                    );
                    return target;
                }
                (Some(target), None) if ob.rank[target] < usize::MAX => return target,
                // A direction with no surviving successors carries no owed
                // step obligations; fall through to the default route.
                _ => {}
            }
        }
    }
    first_successor(rt, s, pos, pending)
}

/// First successor along the given direction. A direction with no
/// survivors falls back to the successor another direction would take,
/// which keeps universal chases decreasing on every model edge.
fn first_successor(rt: &Tableau, s: usize, pos: usize, pending: Option<&Obligation>) -> usize {
    let annotation = if rt.indices.is_empty() { None } else { Some(pos) };
    if let Some(to) = rt.states[s]
        .edges
        .iter()
        .filter(|&&(p, _)| p == annotation)
        .map(|&(_, to)| to)
        .min()
    {
        return to;
    }
    // Route the missing direction like the first direction that exists.
    let first_dir = rt.states[s].edges.first().map(|&(p, _)| p).expect("reduced states have successors");
    if let Some(ob) = pending {
        if ob.index_pos.is_none() {
            if let Some(to) = rt.states[s]
                .edges
                .iter()
                .filter(|&&(p, _)| p == first_dir)
                .map(|&(_, to)| to)
                .min_by_key(|&to| (ob.rank[to], to))
            {
                if ob.rank[to] < usize::MAX {
                    return to;
                }
            }
        }
    }
    rt.states[s]
        .edges
        .iter()
        .filter(|&&(p, _)| p == first_dir)
        .map(|&(_, to)| to)
        .min()
        .expect("edge list is nonempty")
}

/// Witness ranks for a universal goal: rank 0 at goal states; a state gets
/// rank `k + 1` when every direction still present offers a successor of
/// rank at most `k`.
fn universal_ranks(rt: &Tableau, goal: FormulaId) -> Vec<usize> {
    let n = rt.state_count();
    let mut rank = vec![usize::MAX; n];
    for s in 0..n {
        if rt.states[s].label.get(goal) {
            rank[s] = 0;
        }
    }
    let mut level = 0;
    loop {
        let mut grew = false;
        for s in 0..n {
            if rank[s] != usize::MAX {
                continue;
            }
            let dirs = directions(rt, s);
            let covered = !dirs.is_empty()
                && dirs
                    .iter()
                    .all(|(_, targets)| targets.iter().any(|&t| rank[t] <= level));
            if covered {
                rank[s] = level + 1;
                grew = true;
            }
        }
        if !grew {
            return rank;
        }
        level += 1;
    }
}

/// Shortest distance from each state to a goal-carrying state along one
/// index's edges.
fn index_distances(rt: &Tableau, goal: FormulaId, pos: usize) -> Vec<usize> {
    let n = rt.state_count();
    let mut dist = vec![usize::MAX; n];
    let mut frontier: Vec<usize> = (0..n)
        .filter(|&s| rt.states[s].label.get(goal))
        .collect();
    for &s in &frontier {
        dist[s] = 0;
    }
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for s in 0..n {
            if dist[s] != usize::MAX {
                continue;
            }
            let steps_in = rt.states[s]
                .edges
                .iter()
                .any(|&(p, to)| p == Some(pos) && frontier.contains(&to));
            if steps_in {
                dist[s] = d;
                next.push(s);
            }
        }
        frontier = next;
    }
    dist
}
