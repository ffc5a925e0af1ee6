//! Finite indexed models and the satisfaction relation. Each index names a
//! total successor function over the states; the plain transition relation
//! is the union of the index graphs. This module is the semantic oracle for
//! the rest of the crate: normalization, encoding, and tableau results are
//! all checked against it.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::bnf::{free_symbols, ClauseSet, Index, Proposition, ValidationReport};
use crate::formula::{clause_set_to_formula, Formula};

pub type ModelStateId = usize;

/// A finite indexed model: valuation per state plus one total successor
/// function per index. State 0 conventions are not baked in; `root` is
/// explicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedModel {
    pub valuation: Vec<BTreeSet<Proposition>>,
    pub ind_succ: BTreeMap<Index, Vec<ModelStateId>>,
    pub root: ModelStateId,
}

impl IndexedModel {
    pub fn state_count(&self) -> usize {
        self.valuation.len()
    }

    fn succ_fn(&self, ind: &Index) -> Result<&Vec<ModelStateId>, ModelError> {
        self.ind_succ
            .get(ind)
            .ok_or_else(|| ModelError::UnknownIndex(ind.clone()))
    }

    /// Successors of `s` across all index functions, deduplicated.
    pub fn successors(&self, s: ModelStateId) -> BTreeSet<ModelStateId> {
        self.ind_succ.values().map(|f| f[s]).collect()
    }

    /// Structural invariants: at least one index (the edge relation must be
    /// serial), total in-range successor functions, and connectivity.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.state_count();
        if n == 0 {
            report.violations.push("model has no states".into());
            return report;
        }
        if self.root >= n {
            report.violations.push("root out of range".into());
        }
        if self.ind_succ.is_empty() {
            report
                .violations
                .push("model has no indices; the edge relation would not be serial".into());
        }
        for (ind, f) in &self.ind_succ {
            if f.len() != n {
                report
                    .violations
                    .push(format!("index `{ind}`: successor function not total"));
            } else if f.iter().any(|&t| t >= n) {
                report
                    .violations
                    .push(format!("index `{ind}`: successor out of range"));
            }
        }
        if report.violations.is_empty() {
            let mut seen = BTreeSet::new();
            let mut stack = vec![self.root];
            while let Some(s) = stack.pop() {
                if seen.insert(s) {
                    stack.extend(self.successors(s));
                }
            }
            if seen.len() != n {
                report
                    .violations
                    .push("not every state is reachable from the root".into());
            }
        }
        report
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("formula mentions index `{0}` absent from the model")]
    UnknownIndex(Index),
}

/// Evaluates a formula at a state. The `A G` and `A F` modalities are
/// computed as fixpoints over the whole state graph; `E F` under an index
/// scans the unique index-iteration lasso.
pub fn holds(m: &IndexedModel, s: ModelStateId, f: &Formula) -> Result<bool, ModelError> {
    Ok(sat_states(m, f)?.contains(&s))
}

/// The set of states where a formula holds.
fn sat_states(m: &IndexedModel, f: &Formula) -> Result<BTreeSet<ModelStateId>, ModelError> {
    let all = || (0..m.state_count()).collect::<BTreeSet<_>>();
    match f {
        Formula::True => Ok(all()),
        Formula::False => Ok(BTreeSet::new()),
        Formula::Start => Ok([m.root].into_iter().collect()),
        Formula::Prop(p) => Ok((0..m.state_count())
            .filter(|&s| m.valuation[s].contains(p))
            .collect()),
        Formula::Not(a) => {
            let sa = sat_states(m, a)?;
            Ok(all().difference(&sa).copied().collect())
        }
        Formula::And(a, b) => {
            let sa = sat_states(m, a)?;
            let sb = sat_states(m, b)?;
            Ok(sa.intersection(&sb).copied().collect())
        }
        Formula::Or(a, b) => {
            let sa = sat_states(m, a)?;
            let sb = sat_states(m, b)?;
            Ok(sa.union(&sb).copied().collect())
        }
        Formula::Implies(a, b) => {
            let sa = sat_states(m, a)?;
            let sb = sat_states(m, b)?;
            Ok((0..m.state_count())
                .filter(|s| !sa.contains(s) || sb.contains(s))
                .collect())
        }
        Formula::AllNext(b) => {
            let sb = sat_states(m, b)?;
            Ok((0..m.state_count())
                .filter(|&s| m.successors(s).iter().all(|t| sb.contains(t)))
                .collect())
        }
        Formula::ExistsNext(b, ind) => {
            let sb = sat_states(m, b)?;
            let f = m.succ_fn(ind)?;
            Ok((0..m.state_count()).filter(|&s| sb.contains(&f[s])).collect())
        }
        Formula::AllAlways(b) => {
            // Greatest fixpoint: start from the states satisfying the body
            // and shrink while some successor escapes.
            let mut z = sat_states(m, b)?;
            loop {
                let keep: BTreeSet<_> = z
                    .iter()
                    .copied()
                    .filter(|&s| m.successors(s).iter().all(|t| z.contains(t)))
                    .collect();
                if keep == z {
                    return Ok(z);
                }
                z = keep;
            }
        }
        Formula::AllSometime(b) => {
            // Least fixpoint: a state is good when the body holds or every
            // successor is already good. Cycles avoiding the body never
            // enter.
            let mut z = sat_states(m, b)?;
            loop {
                let mut grew = false;
                for s in 0..m.state_count() {
                    if z.contains(&s) {
                        continue;
                    }
                    let succ = m.successors(s);
                    if !succ.is_empty() && succ.iter().all(|t| z.contains(t)) {
                        z.insert(s);
                        grew = true;
                    }
                }
                if !grew {
                    return Ok(z);
                }
            }
        }
        Formula::ExistsSometime(b, ind) => {
            let sb = sat_states(m, b)?;
            let f = m.succ_fn(ind)?;
            Ok((0..m.state_count())
                .filter(|&s| {
                    // Walk the unique index-iteration path until it lassos.
                    let mut seen = BTreeSet::new();
                    let mut cur = s;
                    loop {
                        if sb.contains(&cur) {
                            return true;
                        }
                        if !seen.insert(cur) {
                            return false;
                        }
                        cur = f[cur];
                    }
                })
                .collect())
        }
    }
}

/// True when the model satisfies the clause set: the initial part at the
/// root and the global part along every path, which over a connected model
/// means every state.
pub fn check_clause_set(m: &IndexedModel, cs: &ClauseSet) -> Result<bool, ModelError> {
    holds(m, m.root, &clause_set_to_formula(cs))
}

/// Search cost cap for [`enumerate_models`]: the number of fully evaluated
/// candidate models.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    pub checks: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { checks: 2_000_000 }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("model search budget exhausted after {checked} candidates (last size {last_size})")]
    BudgetExceeded { checked: u64, last_size: usize },
}

/// Exhaustively searches for a model with at most `max_states` states,
/// smallest first. Valuations range over the clause set's propositions and
/// successor functions over its indices (one generated index when it has
/// none). Root is state 0; non-root states are kept in sorted valuation
/// order to skip one mirror image of each candidate.
pub fn enumerate_models(
    cs: &ClauseSet,
    max_states: usize,
) -> Result<Option<IndexedModel>, SearchError> {
    enumerate_models_with_budget(cs, max_states, SearchBudget::default())
}

pub fn enumerate_models_with_budget(
    cs: &ClauseSet,
    max_states: usize,
    budget: SearchBudget,
) -> Result<Option<IndexedModel>, SearchError> {
    let (props, mut inds) = free_symbols(cs);
    if inds.is_empty() {
        inds.insert(Index::fresh(cs.next_fresh_counter()));
    }
    let props: Vec<Proposition> = props.into_iter().collect();
    let inds: Vec<Index> = inds.into_iter().collect();
    let formula = clause_set_to_formula(cs);

    // Root-only prune: the initial part evaluated against a candidate root
    // valuation before any successor assignment is enumerated.
    let initial_part = Formula::conjoin(
        cs.initial_clauses()
            .map(|c| match c {
                crate::bnf::Clause::Initial { rhs } => Formula::disj_of(rhs),
                _ => unreachable!(),
            })
            .collect(),
    );

    let mut checked: u64 = 0;
    for n in 1..=max_states {
        let val_bits = props.len() * n;
        if val_bits >= 63 {
            // Out of range for counter-based enumeration; callers keep
            // max_states and proposition counts small.
            continue;
        }
        let mut val_counter: u64 = 0;
        let val_limit: u64 = 1 << val_bits;
        while val_counter < val_limit {
            let valuation = decode_valuation(val_counter, n, &props);
            // Symmetry: require non-root valuations sorted by bit pattern.
            let sorted = (1..n.saturating_sub(1)).all(|s| {
                bits_of(val_counter, s, props.len()) <= bits_of(val_counter, s + 1, props.len())
            });
            if sorted && prop_holds_at_root(&valuation, &initial_part) {
                let per_ind: u64 = (n as u64).pow(n as u32);
                let combos = per_ind.pow(inds.len() as u32);
                for combo in 0..combos {
                    let model = decode_model(combo, n, &inds, &valuation);
                    if !connected(&model) {
                        continue;
                    }
                    checked += 1;
                    if checked > budget.checks {
                        return Err(SearchError::BudgetExceeded {
                            checked: checked - 1,
                            last_size: n,
                        });
                    }
                    if holds(&model, model.root, &formula).expect("indices are total here") {
                        return Ok(Some(model));
                    }
                }
            }
            val_counter += 1;
        }
    }
    Ok(None)
}

fn bits_of(counter: u64, state: usize, width: usize) -> u64 {
    (counter >> (state * width)) & ((1 << width) - 1)
}

fn decode_valuation(counter: u64, n: usize, props: &[Proposition]) -> Vec<BTreeSet<Proposition>> {
    (0..n)
        .map(|s| {
            props
                .iter()
                .enumerate()
                .filter(|(j, _)| counter >> (s * props.len() + j) & 1 == 1)
                .map(|(_, p)| p.clone())
                .collect()
        })
        .collect()
}

fn decode_model(
    combo: u64,
    n: usize,
    inds: &[Index],
    valuation: &[BTreeSet<Proposition>],
) -> IndexedModel {
    let per_ind = (n as u64).pow(n as u32);
    let mut ind_succ = BTreeMap::new();
    for (k, ind) in inds.iter().enumerate() {
        let mut code = combo / per_ind.pow(k as u32) % per_ind;
        let mut f = Vec::with_capacity(n);
        for _ in 0..n {
            f.push((code % n as u64) as usize);
            code /= n as u64;
        }
        ind_succ.insert(ind.clone(), f);
    }
    IndexedModel { valuation: valuation.to_vec(), ind_succ, root: 0 }
}

fn connected(m: &IndexedModel) -> bool {
    let mut seen = BTreeSet::new();
    let mut stack = vec![m.root];
    while let Some(s) = stack.pop() {
        if seen.insert(s) {
            stack.extend(m.successors(s));
        }
    }
    seen.len() == m.state_count()
}

/// Purely propositional pre-check of the initial obligations at the root.
fn prop_holds_at_root(valuation: &[BTreeSet<Proposition>], initial: &Formula) -> bool {
    fn eval(val: &BTreeSet<Proposition>, f: &Formula) -> Option<bool> {
        match f {
            Formula::True => Some(true),
            Formula::False => Some(false),
            Formula::Prop(p) => Some(val.contains(p)),
            Formula::Not(a) => eval(val, a).map(|b| !b),
            Formula::And(a, b) => Some(eval(val, a)? && eval(val, b)?),
            Formula::Or(a, b) => Some(eval(val, a)? || eval(val, b)?),
            Formula::Implies(a, b) => Some(!eval(val, a)? || eval(val, b)?),
            _ => None, // temporal: cannot decide here
        }
    }
    eval(&valuation[0], initial).unwrap_or(true)
}
