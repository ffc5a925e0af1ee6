//! Characteristic clause sets: the translation from a Büchi tree automaton
//! into the clause language. Four blocks are emitted — initial states,
//! transitions, state labelling, and the acceptance condition — then routed
//! through normalization.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::automata::{BuchiTreeAutomaton, StateId};
use crate::bnf::{
    normalize, BoolExpr, Clause, ClauseSet, Index, Literal, Proposition, RawClause, RawLhs,
    RawRhs,
};

/// How transition tuples turn into indexed step clauses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TranMode {
    /// One clause per distinct successor of a state: the successors are
    /// enumerated in a fixed order and assigned consecutive indices. This is
    /// the compact form the worked examples use.
    #[default]
    Successor,
    /// One clause per tuple position: position `k` of every tuple maps to
    /// index `k`, duplicates removed afterwards. Conservative with respect
    /// to the tuple structure.
    Positional,
}

/// The bookkeeping of generated names: state propositions, position
/// indices, label auxiliaries, and the acceptance propositions. All names
/// are chosen fresh with respect to the automaton's own propositions.
#[derive(Debug, Clone)]
pub struct StateEncoding {
    /// `q` proposition per automaton state.
    pub state_prop: Vec<Proposition>,
    /// Index per successor position, `1..=max` needed by the mode.
    pub index_of_position: Vec<Index>,
    /// Label auxiliary per state. States with identical labels share one
    /// proposition, which is what lets equal-labelled states print the way
    /// the worked examples do.
    pub label_aux: BTreeMap<StateId, Proposition>,
    /// Acceptance propositions: `y`, `u`, `l`, `w` and the loop name `z`.
    pub accept_y: Proposition,
    pub accept_u: Proposition,
    pub accept_l: Proposition,
    pub accept_w: Proposition,
    pub loop_z: Proposition,
}

impl StateEncoding {
    /// Builds the name tables for an automaton under a transition mode,
    /// using label sets to pool label auxiliaries.
    fn build(a: &BuchiTreeAutomaton, mode: TranMode, labels: &LabelMap) -> StateEncoding {
        let mut taken: BTreeSet<String> = BTreeSet::new();
        for symbol in &a.alphabet {
            for p in symbol {
                taken.insert(p.name().to_string());
            }
        }
        for (_, lits) in labels.iter() {
            for l in lits {
                taken.insert(l.prop.name().to_string());
            }
        }
        let mut claim = |base: String| -> Proposition {
            let mut name = base;
            while taken.contains(&name) {
                name.push('_');
            }
            taken.insert(name.clone());
            Proposition::raw(name)
        };

        let state_prop = (0..a.state_count())
            .map(|i| claim(format!("q{}", i + 1)))
            .collect();

        let positions = match mode {
            TranMode::Positional => a.degrees.iter().copied().max().unwrap_or(0),
            TranMode::Successor => a
                .degrees
                .iter()
                .copied()
                .max()
                .unwrap_or(0)
                .max(
                    (0..a.state_count())
                        .map(|s| a.distinct_successors(s).len())
                        .max()
                        .unwrap_or(0),
                ),
        };
        // Index names live in their own namespace; the automaton has none.
        let index_of_position = (1..=positions).map(|j| Index::raw(format!("ind{j}"))).collect();

        // Pool label auxiliaries by label content.
        let mut by_label: BTreeMap<Vec<Literal>, Proposition> = BTreeMap::new();
        let mut label_aux = BTreeMap::new();
        let mut counter = 0usize;
        let distinct_labels: BTreeSet<Vec<Literal>> =
            (0..a.state_count()).map(|s| labels.get(s)).collect();
        let single = distinct_labels.len() <= 1;
        for s in 0..a.state_count() {
            let key = labels.get(s);
            let prop = by_label
                .entry(key)
                .or_insert_with(|| {
                    counter += 1;
                    if single {
                        claim("v".to_string())
                    } else {
                        claim(format!("v{counter}"))
                    }
                })
                .clone();
            label_aux.insert(s, prop);
        }

        StateEncoding {
            state_prop,
            index_of_position,
            label_aux,
            accept_y: claim("y".to_string()),
            accept_u: claim("u".to_string()),
            accept_l: claim("l".to_string()),
            accept_w: claim("w".to_string()),
            loop_z: claim("z".to_string()),
        }
    }

    pub fn q(&self, s: StateId) -> Literal {
        Literal::pos(self.state_prop[s].clone())
    }

    pub fn index(&self, position: usize) -> Result<&Index, EncodeError> {
        self.index_of_position
            .get(position - 1)
            .ok_or(EncodeError::DegreeOverflow { position })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EncodeError {
    #[error("the automaton has no initial state; its language is empty")]
    EmptyInitial,
    #[error("tuple position {position} exceeds the available indices")]
    DegreeOverflow { position: usize },
    #[error("state `{state}` is entered under conflicting symbols; no unique label exists")]
    LabelConflict { state: String },
    #[error("label for `{state}` mentions `{prop}` both ways")]
    ContradictoryLabel { state: String, prop: String },
    #[error("labels reference undeclared state `{state}`")]
    UnknownLabelState { state: String },
}

/// A complete literal-valued labelling: per state, a consistent set of
/// label literals over the proposition universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelMap {
    labels: Vec<Vec<Literal>>,
}

impl LabelMap {
    fn get(&self, s: StateId) -> Vec<Literal> {
        self.labels[s].clone()
    }

    fn iter(&self) -> impl Iterator<Item = (StateId, &Vec<Literal>)> {
        self.labels.iter().enumerate()
    }

    /// Labels derived from the transition structure: a state entered while
    /// reading a symbol gets that symbol's propositions positively and the
    /// rest of the universe negatively. States entered under symbols that
    /// disagree have no unique label, which is an error. States never
    /// entered get the all-negative label.
    pub fn from_rule(a: &BuchiTreeAutomaton) -> Result<LabelMap, EncodeError> {
        let universe: BTreeSet<Proposition> =
            a.alphabet.iter().flat_map(|s| s.iter().cloned()).collect();
        let mut per_state: Vec<Option<BTreeSet<Proposition>>> = vec![None; a.state_count()];
        for t in &a.transitions {
            for &target in &t.tuple {
                match &per_state[target] {
                    None => per_state[target] = Some(t.symbol.clone()),
                    Some(prev) if *prev == t.symbol => {}
                    Some(_) => {
                        return Err(EncodeError::LabelConflict {
                            state: a.state_names[target].clone(),
                        })
                    }
                }
            }
        }
        let labels = per_state
            .into_iter()
            .map(|positive| {
                let positive = positive.unwrap_or_default();
                universe
                    .iter()
                    .map(|p| {
                        if positive.contains(p) {
                            Literal::pos(p.clone())
                        } else {
                            Literal::neg(p.clone())
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(LabelMap { labels })
    }

    /// Labels supplied explicitly as the positive part per state; the rest
    /// of the proposition universe is added negatively.
    pub fn from_positive_parts(
        a: &BuchiTreeAutomaton,
        positive: &BTreeMap<String, BTreeSet<Proposition>>,
    ) -> Result<LabelMap, EncodeError> {
        for name in positive.keys() {
            if a.state_id(name).is_none() {
                return Err(EncodeError::UnknownLabelState { state: name.clone() });
            }
        }
        let mut universe: BTreeSet<Proposition> =
            a.alphabet.iter().flat_map(|s| s.iter().cloned()).collect();
        for props in positive.values() {
            universe.extend(props.iter().cloned());
        }
        let labels = (0..a.state_count())
            .map(|s| {
                let pos = positive.get(&a.state_names[s]).cloned().unwrap_or_default();
                universe
                    .iter()
                    .map(|p| {
                        if pos.contains(p) {
                            Literal::pos(p.clone())
                        } else {
                            Literal::neg(p.clone())
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(LabelMap { labels })
    }
}

/// Initial block: the root carries one of the initial-state propositions,
/// and no two of them at once.
pub fn encode_initial(
    a: &BuchiTreeAutomaton,
    enc: &StateEncoding,
) -> Result<Vec<RawClause>, EncodeError> {
    if a.initial.is_empty() {
        return Err(EncodeError::EmptyInitial);
    }
    let mut out = Vec::new();
    let initial: Vec<StateId> = a.initial.iter().copied().collect();
    out.push(RawClause::new(
        RawLhs::Start,
        RawRhs::Bool(BoolExpr::disj(initial.iter().map(|&s| enc.q(s)).collect())),
    ));
    if initial.len() > 1 {
        for &i in &initial {
            let others = BoolExpr::conj(
                initial
                    .iter()
                    .filter(|&&j| j != i)
                    .map(|&j| enc.q(j).complement())
                    .collect(),
            );
            out.push(RawClause::new(
                RawLhs::Start,
                RawRhs::Bool(BoolExpr::lit(enc.q(i).complement()).or(others)),
            ));
        }
    }
    Ok(out)
}

/// Transition block: per-state indexed step clauses, shaped by the mode.
pub fn encode_transitions(
    a: &BuchiTreeAutomaton,
    enc: &StateEncoding,
    mode: TranMode,
) -> Result<Vec<Clause>, EncodeError> {
    let mut out: Vec<Clause> = Vec::new();
    match mode {
        TranMode::Successor => {
            for s in 0..a.state_count() {
                for (pos, succ) in a.distinct_successors(s).into_iter().enumerate() {
                    let ind = enc.index(pos + 1)?.clone();
                    let c = Clause::e_step(vec![enc.q(s)], vec![enc.q(succ)], ind);
                    if !out.contains(&c) {
                        out.push(c);
                    }
                }
            }
        }
        TranMode::Positional => {
            for t in &a.transitions {
                for (k, &target) in t.tuple.iter().enumerate() {
                    let ind = enc.index(k + 1)?.clone();
                    let c = Clause::e_step(vec![enc.q(t.from)], vec![enc.q(target)], ind);
                    if !out.contains(&c) {
                        out.push(c);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Labelling block: the root ties each state proposition to its label, and
/// every later state goes through the pooled label auxiliary.
pub fn encode_labelling(
    a: &BuchiTreeAutomaton,
    enc: &StateEncoding,
    labels: &LabelMap,
) -> Result<Vec<RawClause>, EncodeError> {
    let mut out = Vec::new();
    let mut aux_emitted: BTreeSet<Proposition> = BTreeSet::new();
    for s in 0..a.state_count() {
        let lits = labels.get(s);
        for l in &lits {
            if lits.contains(&l.complement()) {
                return Err(EncodeError::ContradictoryLabel {
                    state: a.state_names[s].clone(),
                    prop: l.prop.name().to_string(),
                });
            }
        }
        let conj = BoolExpr::conj(lits.clone());
        out.push(RawClause::new(
            RawLhs::Start,
            RawRhs::Bool(BoolExpr::lit(enc.q(s).complement()).or(conj.clone())),
        ));
        let v = enc.label_aux[&s].clone();
        out.push(RawClause::new(
            RawLhs::top(),
            RawRhs::AllNext(
                BoolExpr::lit(enc.q(s).complement()).or(BoolExpr::lit(Literal::pos(v.clone()))),
            ),
        ));
        if aux_emitted.insert(v.clone()) {
            out.push(RawClause::new(
                RawLhs::lit(Literal::pos(v)),
                RawRhs::Bool(conj),
            ));
        }
    }
    Ok(out)
}

/// Acceptance block: a loop proposition keeps `u` alive everywhere, and
/// along every index direction `u` keeps demanding a visit to `l`, which is
/// pinned to the accepting-state propositions.
pub fn encode_acceptance(a: &BuchiTreeAutomaton, enc: &StateEncoding) -> Vec<RawClause> {
    let y = Literal::pos(enc.accept_y.clone());
    let u = Literal::pos(enc.accept_u.clone());
    let l = Literal::pos(enc.accept_l.clone());
    let w = Literal::pos(enc.accept_w.clone());
    let mut out = vec![
        RawClause::new(RawLhs::Start, RawRhs::Bool(BoolExpr::lit(y.clone()))),
        RawClause::new(
            RawLhs::lit(y),
            RawRhs::AllAlways {
                body: BoolExpr::lit(u.clone()),
                loop_prop: Some(enc.loop_z.clone()),
            },
        ),
    ];
    for ind in &enc.index_of_position {
        out.push(RawClause::new(
            RawLhs::lit(u.clone()),
            RawRhs::ExistsSometime(BoolExpr::lit(l.clone()), ind.clone()),
        ));
        out.push(RawClause::new(
            RawLhs::lit(l.clone()),
            RawRhs::ExistsNext(BoolExpr::lit(w.clone()), ind.clone()),
        ));
        out.push(RawClause::new(
            RawLhs::lit(w.clone()),
            RawRhs::ExistsSometime(BoolExpr::lit(l.clone()), ind.clone()),
        ));
    }
    // With no accepting states the disjunction collapses and `l` is
    // globally forbidden, which matches the empty language.
    let accepting_disj = BoolExpr::disj(
        std::iter::once(l.complement())
            .chain(a.accepting.iter().map(|&s| enc.q(s)))
            .collect(),
    );
    out.push(RawClause::new(RawLhs::Start, RawRhs::Bool(accepting_disj.clone())));
    out.push(RawClause::new(RawLhs::top(), RawRhs::AllNext(accepting_disj)));
    out
}

/// The full pipeline output: the normalized characteristic clause set plus
/// the name tables used to produce it.
#[derive(Debug, Clone)]
pub struct Encoded {
    pub clauses: ClauseSet,
    pub encoding: StateEncoding,
    pub labels: LabelMap,
}

/// Encodes an automaton with labels derived from the transition structure.
pub fn characteristic_clause_set(
    a: &BuchiTreeAutomaton,
    mode: TranMode,
) -> Result<Encoded, EncodeError> {
    let labels = LabelMap::from_rule(a)?;
    characteristic_clause_set_with_labels(a, mode, labels)
}

/// Encodes an automaton with an explicitly supplied labelling.
pub fn characteristic_clause_set_with_labels(
    a: &BuchiTreeAutomaton,
    mode: TranMode,
    labels: LabelMap,
) -> Result<Encoded, EncodeError> {
    let enc = StateEncoding::build(a, mode, &labels);
    let mut raw = encode_initial(a, &enc)?;
    for c in encode_transitions(a, &enc, mode)? {
        raw.push(RawClause::from(&c));
    }
    raw.extend(encode_labelling(a, &enc, &labels)?);
    raw.extend(encode_acceptance(a, &enc));
    let clauses = normalize(&raw).expect("encoder emits translatable raw clauses");
    Ok(Encoded { clauses, encoding: enc, labels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{symbol_of, Transition};
    use crate::bnf::validate_clause_set;

    fn p(name: &str) -> Proposition {
        Proposition::new(name).unwrap()
    }

    fn lit(name: &str) -> Literal {
        Literal::pos(p(name))
    }

    fn nlit(name: &str) -> Literal {
        Literal::neg(p(name))
    }

    fn ind(name: &str) -> Index {
        Index::new(name).unwrap()
    }

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

    /// The labelling printed in the worked example: both states carry both
    /// propositions.
    fn uniform_labels(a: &BuchiTreeAutomaton) -> LabelMap {
        let both: BTreeSet<Proposition> = [p("p"), p("r")].into_iter().collect();
        LabelMap::from_positive_parts(
            a,
            &[("s0".to_string(), both.clone()), ("s1".to_string(), both)]
                .into_iter()
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn initial_block_single_state() {
        let a = paper_automaton();
        let labels = uniform_labels(&a);
        let enc = StateEncoding::build(&a, TranMode::Successor, &labels);
        let raw = encode_initial(&a, &enc).unwrap();
        let cs = normalize(&raw).unwrap();
        let expected = ClauseSet::from_clauses(vec![Clause::initial(vec![lit("q1")])]);
        assert!(cs.same_clauses(&expected), "got:\n{cs}");
    }

    #[test]
    fn initial_block_two_states_exclusive() {
        let mut a = paper_automaton();
        a.initial = [0, 1].into_iter().collect();
        let labels = uniform_labels(&a);
        let enc = StateEncoding::build(&a, TranMode::Successor, &labels);
        let cs = normalize(&encode_initial(&a, &enc).unwrap()).unwrap();
        let expected = ClauseSet::from_clauses(vec![
            Clause::initial(vec![lit("q1"), lit("q2")]),
            Clause::initial(vec![nlit("q1"), nlit("q2")]),
        ]);
        assert!(cs.same_clauses(&expected), "got:\n{cs}");
    }

    #[test]
    fn empty_initial_is_an_error() {
        let mut a = paper_automaton();
        a.initial.clear();
        let labels = uniform_labels(&a);
        let enc = StateEncoding::build(&a, TranMode::Successor, &labels);
        assert_eq!(encode_initial(&a, &enc), Err(EncodeError::EmptyInitial));
    }

    #[test]
    fn successor_mode_matches_worked_example() {
        let a = paper_automaton();
        let labels = uniform_labels(&a);
        let enc = StateEncoding::build(&a, TranMode::Successor, &labels);
        let got = encode_transitions(&a, &enc, TranMode::Successor).unwrap();
        let expected = vec![
            Clause::e_step(vec![lit("q1")], vec![lit("q1")], ind("ind1")),
            Clause::e_step(vec![lit("q1")], vec![lit("q2")], ind("ind2")),
            Clause::e_step(vec![lit("q2")], vec![lit("q1")], ind("ind1")),
            Clause::e_step(vec![lit("q2")], vec![lit("q2")], ind("ind2")),
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn positional_mode_is_superset_with_eight_clauses() {
        let a = paper_automaton();
        let labels = uniform_labels(&a);
        let enc = StateEncoding::build(&a, TranMode::Positional, &labels);
        let got = encode_transitions(&a, &enc, TranMode::Positional).unwrap();
        // Two states, two tuples each, two positions: eight distinct clauses.
        assert_eq!(got.len(), 8);
        let successor = encode_transitions(&a, &enc, TranMode::Successor).unwrap();
        for c in &successor {
            assert!(got.contains(c), "missing {c}");
        }
    }

    #[test]
    fn single_degree_one_tuple() {
        let sp = symbol_of(&[p("p")]);
        let a = BuchiTreeAutomaton {
            alphabet: [sp.clone()].into_iter().collect(),
            degrees: [1].into_iter().collect(),
            state_names: vec!["s0".into()],
            transitions: vec![Transition { from: 0, symbol: sp, degree: 1, tuple: vec![0] }],
            initial: [0].into_iter().collect(),
            accepting: [0].into_iter().collect(),
        };
        let labels = LabelMap::from_rule(&a).unwrap();
        let enc = StateEncoding::build(&a, TranMode::Successor, &labels);
        let got = encode_transitions(&a, &enc, TranMode::Successor).unwrap();
        assert_eq!(got, vec![Clause::e_step(vec![lit("q1")], vec![lit("q1")], ind("ind1"))]);
    }

    #[test]
    fn rule_labels_of_paper_automaton() {
        // Targets under {p} get {p, ~r}; targets under {r} get {~p, r}.
        let a = paper_automaton();
        let labels = LabelMap::from_rule(&a).unwrap();
        assert_eq!(labels.get(0), vec![lit("p"), nlit("r")]);
        assert_eq!(labels.get(1), vec![nlit("p"), lit("r")]);
    }

    #[test]
    fn label_conflict_detected() {
        // One state entered under both symbols.
        let sp = symbol_of(&[p("p")]);
        let sr = symbol_of(&[p("r")]);
        let a = BuchiTreeAutomaton {
            alphabet: [sp.clone(), sr.clone()].into_iter().collect(),
            degrees: [1].into_iter().collect(),
            state_names: vec!["s0".into(), "s1".into()],
            transitions: vec![
                Transition { from: 0, symbol: sp, degree: 1, tuple: vec![1] },
                Transition { from: 1, symbol: sr, degree: 1, tuple: vec![1] },
            ],
            initial: [0].into_iter().collect(),
            accepting: [1].into_iter().collect(),
        };
        assert!(matches!(
            LabelMap::from_rule(&a),
            Err(EncodeError::LabelConflict { .. })
        ));
    }

    #[test]
    fn unreached_state_gets_all_negative_label() {
        let sp = symbol_of(&[p("p")]);
        let a = BuchiTreeAutomaton {
            alphabet: [sp.clone()].into_iter().collect(),
            degrees: [1].into_iter().collect(),
            state_names: vec!["s0".into(), "s1".into()],
            transitions: vec![Transition { from: 0, symbol: sp, degree: 1, tuple: vec![0] }],
            initial: [0].into_iter().collect(),
            accepting: [0].into_iter().collect(),
        };
        let labels = LabelMap::from_rule(&a).unwrap();
        assert_eq!(labels.get(1), vec![nlit("p")]);
        // start => ~q2 | ~p among the labelling clauses
        let enc = StateEncoding::build(&a, TranMode::Successor, &labels);
        let cs = normalize(&encode_labelling(&a, &enc, &labels).unwrap()).unwrap();
        assert!(cs
            .clauses()
            .iter()
            .any(|c| *c == Clause::initial(vec![nlit("p"), nlit("q2")])));
    }

    #[test]
    fn labelling_block_matches_worked_example() {
        let a = paper_automaton();
        let labels = uniform_labels(&a);
        let enc = StateEncoding::build(&a, TranMode::Successor, &labels);
        let cs = normalize(&encode_labelling(&a, &enc, &labels).unwrap()).unwrap();
        let v = lit("v");
        let expected = ClauseSet::from_clauses(vec![
            Clause::initial(vec![nlit("q1"), lit("p")]),
            Clause::initial(vec![nlit("q1"), lit("r")]),
            Clause::a_step(vec![], vec![nlit("q1"), v.clone()]),
            Clause::initial(vec![nlit("q2"), lit("p")]),
            Clause::initial(vec![nlit("q2"), lit("r")]),
            Clause::a_step(vec![], vec![nlit("q2"), v.clone()]),
            Clause::initial(vec![nlit("v"), lit("p")]),
            Clause::initial(vec![nlit("v"), lit("r")]),
            Clause::a_step(vec![], vec![nlit("v"), lit("p")]),
            Clause::a_step(vec![], vec![nlit("v"), lit("r")]),
        ]);
        assert!(cs.same_clauses(&expected), "got:\n{cs}");
    }

    #[test]
    fn acceptance_block_single_accepting_state() {
        let a = paper_automaton();
        let labels = uniform_labels(&a);
        let enc = StateEncoding::build(&a, TranMode::Successor, &labels);
        let cs = normalize(&encode_acceptance(&a, &enc)).unwrap();
        // start => ~l | q2 pins l to the accepting state's proposition.
        assert!(cs
            .clauses()
            .iter()
            .any(|c| *c == Clause::initial(vec![nlit("l"), lit("q2")])));
        // Loop encoding present with the designated z.
        assert!(cs
            .clauses()
            .iter()
            .any(|c| *c == Clause::a_step(vec![lit("z")], vec![lit("z")])));
        // Sometime clauses for both indices.
        for i in ["ind1", "ind2"] {
            assert!(cs
                .clauses()
                .iter()
                .any(|c| *c == Clause::e_sometime(vec![lit("u")], lit("l"), ind(i))));
        }
    }

    #[test]
    fn acceptance_block_empty_accepting_set() {
        let mut a = paper_automaton();
        a.accepting.clear();
        let labels = uniform_labels(&a);
        let enc = StateEncoding::build(&a, TranMode::Successor, &labels);
        let cs = normalize(&encode_acceptance(&a, &enc)).unwrap();
        assert!(cs.clauses().iter().any(|c| *c == Clause::initial(vec![nlit("l")])));
        assert!(cs
            .clauses()
            .iter()
            .any(|c| *c == Clause::a_step(vec![], vec![nlit("l")])));
    }

    #[test]
    fn characteristic_set_validates_and_name_collisions_avoided() {
        let a = paper_automaton();
        let encoded =
            characteristic_clause_set_with_labels(&a, TranMode::Successor, uniform_labels(&a))
                .unwrap();
        assert!(validate_clause_set(&encoded.clauses).is_clean());

        // An automaton whose alphabet already uses q1/v/y forces mangling.
        let sym = symbol_of(&[p("q1"), p("v"), p("y")]);
        let a2 = BuchiTreeAutomaton {
            alphabet: [sym.clone()].into_iter().collect(),
            degrees: [1].into_iter().collect(),
            state_names: vec!["s0".into()],
            transitions: vec![Transition { from: 0, symbol: sym, degree: 1, tuple: vec![0] }],
            initial: [0].into_iter().collect(),
            accepting: [0].into_iter().collect(),
        };
        let encoded = characteristic_clause_set(&a2, TranMode::Successor).unwrap();
        assert_eq!(encoded.encoding.state_prop[0].name(), "q1_");
        assert_eq!(encoded.encoding.accept_y.name(), "y_");
        assert!(validate_clause_set(&encoded.clauses).is_clean());
    }
}
