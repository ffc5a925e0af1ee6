//! Formulae over the clause language: Boolean connectives plus the basic
//! modalities `A X`, `E X`, `A G`, `A F`, `E F` and the root marker `start`.
//!
//! Clause sets convert into the single formula `In & A G (phi)` where `In`
//! conjoins the right-hand sides of the initial clauses and `phi` conjoins
//! the global clauses. That formula is what the tableau expands and what the
//! model checker evaluates.

use std::fmt;

use crate::bnf::{Clause, ClauseSet, Index, Literal, Proposition};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    True,
    False,
    /// True exactly at the designated root state.
    Start,
    Prop(Proposition),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    AllNext(Box<Formula>),
    ExistsNext(Box<Formula>, Index),
    AllAlways(Box<Formula>),
    AllSometime(Box<Formula>),
    ExistsSometime(Box<Formula>, Index),
}

impl Formula {
    pub fn prop(p: Proposition) -> Self {
        Formula::Prop(p)
    }

    pub fn lit(l: &Literal) -> Self {
        let base = Formula::Prop(l.prop.clone());
        if l.negated {
            Formula::Not(Box::new(base))
        } else {
            base
        }
    }

    /// Negation with the obvious simplifications: double negations unwrap
    /// and constants flip.
    pub fn neg(self) -> Self {
        match self {
            Formula::True => Formula::False,
            Formula::False => Formula::True,
            Formula::Not(inner) => *inner,
            f => Formula::Not(Box::new(f)),
        }
    }

    pub fn and(self, other: Formula) -> Self {
        Formula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Formula) -> Self {
        Formula::Or(Box::new(self), Box::new(other))
    }

    pub fn implies(self, other: Formula) -> Self {
        Formula::Implies(Box::new(self), Box::new(other))
    }

    pub fn all_next(self) -> Self {
        Formula::AllNext(Box::new(self))
    }

    pub fn exists_next(self, ind: Index) -> Self {
        Formula::ExistsNext(Box::new(self), ind)
    }

    pub fn all_always(self) -> Self {
        Formula::AllAlways(Box::new(self))
    }

    pub fn all_sometime(self) -> Self {
        Formula::AllSometime(Box::new(self))
    }

    pub fn exists_sometime(self, ind: Index) -> Self {
        Formula::ExistsSometime(Box::new(self), ind)
    }

    /// Right-folded conjunction; empty input is `T`.
    pub fn conjoin(parts: Vec<Formula>) -> Self {
        parts
            .into_iter()
            .rev()
            .reduce(|acc, f| f.and(acc))
            .unwrap_or(Formula::True)
    }

    /// Right-folded disjunction; empty input is `F_`.
    pub fn disjoin(parts: Vec<Formula>) -> Self {
        parts
            .into_iter()
            .rev()
            .reduce(|acc, f| f.or(acc))
            .unwrap_or(Formula::False)
    }

    pub fn disj_of(lits: &[Literal]) -> Self {
        Formula::disjoin(lits.iter().map(Formula::lit).collect())
    }

    pub fn conj_of(lits: &[Literal]) -> Self {
        Formula::conjoin(lits.iter().map(Formula::lit).collect())
    }
}

/// The formula a single clause contributes to the global part.
pub fn clause_formula(clause: &Clause) -> Formula {
    let body = match clause {
        Clause::Initial { rhs } => return Formula::Start.implies(Formula::disj_of(rhs)),
        Clause::AStep { rhs, .. } => Formula::disj_of(rhs).all_next(),
        Clause::EStep { rhs, ind, .. } => Formula::disj_of(rhs).exists_next(ind.clone()),
        Clause::ASometime { goal, .. } => Formula::lit(goal).all_sometime(),
        Clause::ESometime { goal, ind, .. } => Formula::lit(goal).exists_sometime(ind.clone()),
    };
    let lhs = clause.lhs();
    if lhs.is_empty() {
        body
    } else {
        Formula::conj_of(lhs).implies(body)
    }
}

/// Assembles `In & A G (phi)` from a clause set: `In` conjoins the initial
/// right-hand sides, `phi` the global clauses. Either part defaults to `T`.
pub fn clause_set_to_formula(cs: &ClauseSet) -> Formula {
    let initial = Formula::conjoin(
        cs.initial_clauses()
            .map(|c| match c {
                Clause::Initial { rhs } => Formula::disj_of(rhs),
                _ => unreachable!(),
            })
            .collect(),
    );
    let global = Formula::conjoin(cs.global_clauses().map(clause_formula).collect());
    initial.and(global.all_always())
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::True => f.write_str("T"),
            Formula::False => f.write_str("F_"),
            Formula::Start => f.write_str("start"),
            Formula::Prop(p) => write!(f, "{p}"),
            Formula::Not(a) => match a.as_ref() {
                Formula::Prop(p) => write!(f, "~{p}"),
                inner => write!(f, "~({inner})"),
            },
            Formula::And(a, b) => write!(f, "({a} & {b})"),
            Formula::Or(a, b) => write!(f, "({a} | {b})"),
            Formula::Implies(a, b) => write!(f, "({a} => {b})"),
            Formula::AllNext(a) => write!(f, "A X ({a})"),
            Formula::ExistsNext(a, ind) => write!(f, "E X <{ind}> ({a})"),
            Formula::AllAlways(a) => write!(f, "A G ({a})"),
            Formula::AllSometime(a) => write!(f, "A F ({a})"),
            Formula::ExistsSometime(a, ind) => write!(f, "E F <{ind}> ({a})"),
        }
    }
}
