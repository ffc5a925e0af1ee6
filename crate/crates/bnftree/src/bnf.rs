//! Clausal branching-time normal form: propositions, indices, literals, the
//! five clause shapes, and the normalization from the relaxed "raw" layer
//! into strict clause form.
//!
//! A clause set stands for a conjunction of clauses under an implicit outer
//! `A G`; the outer modality is never represented explicitly.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Prefix for machine-generated propositions and indices. Parsers reject
/// identifiers carrying it, so generated names can never collide with input.
pub const RESERVED_PREFIX: &str = "_g";

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// An atomic proposition, compared by name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Proposition(String);

impl Proposition {
    /// A proposition from user-facing input. Rejects malformed identifiers
    /// and the reserved generated-name prefix.
    pub fn new(name: &str) -> Result<Self, NameError> {
        if !is_identifier(name) {
            return Err(NameError::NotAnIdentifier(name.to_string()));
        }
        if name.starts_with(RESERVED_PREFIX) {
            return Err(NameError::Reserved(name.to_string()));
        }
        Ok(Proposition(name.to_string()))
    }

    /// A generated proposition carrying the reserved prefix.
    pub fn fresh(counter: u32) -> Self {
        Proposition(format!("{RESERVED_PREFIX}{counter}"))
    }

    /// Internal constructor for names already known to be well formed
    /// (encoder-chosen names such as `q1` or `y`).
    pub(crate) fn raw(name: String) -> Self {
        debug_assert!(is_identifier(&name), "bad proposition name {name:?}");
        Proposition(name)
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    pub fn is_reserved(&self) -> bool {
        self.0.starts_with(RESERVED_PREFIX)
    }

    /// The counter embedded in a reserved name, if any.
    pub(crate) fn reserved_counter(&self) -> Option<u32> {
        self.0.strip_prefix(RESERVED_PREFIX)?.parse().ok()
    }
}

impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An index naming a total functional successor relation. `E X` and `E F`
/// clauses carry one to pin down the path context they speak about.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Index(String);

impl Index {
    pub fn new(name: &str) -> Result<Self, NameError> {
        if !is_identifier(name) {
            return Err(NameError::NotAnIdentifier(name.to_string()));
        }
        if name.starts_with(RESERVED_PREFIX) {
            return Err(NameError::Reserved(name.to_string()));
        }
        Ok(Index(name.to_string()))
    }

    pub fn fresh(counter: u32) -> Self {
        Index(format!("{RESERVED_PREFIX}{counter}"))
    }

    pub(crate) fn raw(name: String) -> Self {
        debug_assert!(is_identifier(&name), "bad index name {name:?}");
        Index(name)
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    pub(crate) fn reserved_counter(&self) -> Option<u32> {
        self.0.strip_prefix(RESERVED_PREFIX)?.parse().ok()
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NameError {
    #[error("`{0}` is not a valid identifier")]
    NotAnIdentifier(String),
    #[error("`{0}` uses the reserved generated-name prefix `{RESERVED_PREFIX}`")]
    Reserved(String),
}

/// A proposition or its negation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub prop: Proposition,
    pub negated: bool,
}

impl Literal {
    pub fn pos(prop: Proposition) -> Self {
        Literal { prop, negated: false }
    }

    pub fn neg(prop: Proposition) -> Self {
        Literal { prop, negated: true }
    }

    pub fn complement(&self) -> Self {
        Literal { prop: self.prop.clone(), negated: !self.negated }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "~{}", self.prop)
        } else {
            write!(f, "{}", self.prop)
        }
    }
}

/// Sorts, dedupes, and reports whether the set contains a complementary pair.
fn canonicalize(mut lits: Vec<Literal>) -> (Vec<Literal>, bool) {
    lits.sort();
    lits.dedup();
    let clash = lits
        .iter()
        .any(|l| l.negated && lits.binary_search(&l.complement()).is_ok());
    (lits, clash)
}

/// Path quantifier of a modality: all futures or some future.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PathQuantifier {
    All,
    Exists,
}

impl fmt::Display for PathQuantifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathQuantifier::All => "A",
            PathQuantifier::Exists => "E",
        })
    }
}

/// One strict clause. Left-hand conjunctions and right-hand disjunctions are
/// kept sorted and deduplicated; an empty conjunction reads as `T` and an
/// empty disjunction as `F_`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Clause {
    /// `start => b1 | ... | bk`
    Initial { rhs: Vec<Literal> },
    /// `a1 & ... & al => A X (b1 | ... | bk)`
    AStep { lhs: Vec<Literal>, rhs: Vec<Literal> },
    /// `a1 & ... & al => E X <ind> (b1 | ... | bk)`
    EStep { lhs: Vec<Literal>, rhs: Vec<Literal>, ind: Index },
    /// `a1 & ... & al => A F g`
    ASometime { lhs: Vec<Literal>, goal: Literal },
    /// `a1 & ... & al => E F <ind> g`
    ESometime { lhs: Vec<Literal>, goal: Literal, ind: Index },
}

impl Clause {
    pub fn initial(rhs: Vec<Literal>) -> Self {
        Clause::Initial { rhs: canonicalize(rhs).0 }
    }

    pub fn a_step(lhs: Vec<Literal>, rhs: Vec<Literal>) -> Self {
        Clause::AStep { lhs: canonicalize(lhs).0, rhs: canonicalize(rhs).0 }
    }

    pub fn e_step(lhs: Vec<Literal>, rhs: Vec<Literal>, ind: Index) -> Self {
        Clause::EStep { lhs: canonicalize(lhs).0, rhs: canonicalize(rhs).0, ind }
    }

    pub fn a_sometime(lhs: Vec<Literal>, goal: Literal) -> Self {
        Clause::ASometime { lhs: canonicalize(lhs).0, goal }
    }

    pub fn e_sometime(lhs: Vec<Literal>, goal: Literal, ind: Index) -> Self {
        Clause::ESometime { lhs: canonicalize(lhs).0, goal, ind }
    }

    pub fn lhs(&self) -> &[Literal] {
        match self {
            Clause::Initial { .. } => &[],
            Clause::AStep { lhs, .. }
            | Clause::EStep { lhs, .. }
            | Clause::ASometime { lhs, .. }
            | Clause::ESometime { lhs, .. } => lhs,
        }
    }

    pub fn is_initial(&self) -> bool {
        matches!(self, Clause::Initial { .. })
    }

    /// True when the clause can never constrain anything: a contradictory
    /// left-hand side or a tautological right-hand side.
    fn is_vacuous(&self) -> bool {
        let lhs_clash = canonicalize(self.lhs().to_vec()).1;
        let rhs_taut = match self {
            Clause::Initial { rhs } | Clause::AStep { rhs, .. } | Clause::EStep { rhs, .. } => {
                canonicalize(rhs.to_vec()).1
            }
            Clause::ASometime { .. } | Clause::ESometime { .. } => false,
        };
        lhs_clash || rhs_taut
    }

    fn visit_symbols(&self, props: &mut BTreeSet<Proposition>, inds: &mut BTreeSet<Index>) {
        for l in self.lhs() {
            props.insert(l.prop.clone());
        }
        match self {
            Clause::Initial { rhs } | Clause::AStep { rhs, .. } => {
                for l in rhs {
                    props.insert(l.prop.clone());
                }
            }
            Clause::EStep { rhs, ind, .. } => {
                for l in rhs {
                    props.insert(l.prop.clone());
                }
                inds.insert(ind.clone());
            }
            Clause::ASometime { goal, .. } => {
                props.insert(goal.prop.clone());
            }
            Clause::ESometime { goal, ind, .. } => {
                props.insert(goal.prop.clone());
                inds.insert(ind.clone());
            }
        }
    }
}

fn write_lits(f: &mut fmt::Formatter<'_>, lits: &[Literal], sep: &str, empty: &str) -> fmt::Result {
    if lits.is_empty() {
        return f.write_str(empty);
    }
    for (i, l) in lits.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Clause::Initial { rhs } => {
                f.write_str("start => ")?;
                write_lits(f, rhs, " | ", "F_")
            }
            Clause::AStep { lhs, rhs } => {
                write_lits(f, lhs, " & ", "T")?;
                f.write_str(" => A X (")?;
                write_lits(f, rhs, " | ", "F_")?;
                f.write_str(")")
            }
            Clause::EStep { lhs, rhs, ind } => {
                write_lits(f, lhs, " & ", "T")?;
                write!(f, " => E X <{ind}> (")?;
                write_lits(f, rhs, " | ", "F_")?;
                f.write_str(")")
            }
            Clause::ASometime { lhs, goal } => {
                write_lits(f, lhs, " & ", "T")?;
                write!(f, " => A F {goal}")
            }
            Clause::ESometime { lhs, goal, ind } => {
                write_lits(f, lhs, " & ", "T")?;
                write!(f, " => E F <{ind}> {goal}")
            }
        }
    }
}

/// An ordered multiset of strict clauses. The implicit outer `A G` is not
/// represented; initial clauses speak about the root, all others globally.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ClauseSet {
    clauses: Vec<Clause>,
}

impl ClauseSet {
    pub fn from_clauses(clauses: Vec<Clause>) -> Self {
        ClauseSet { clauses }
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn push(&mut self, clause: Clause) {
        self.clauses.push(clause);
    }

    pub fn initial_clauses(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| c.is_initial())
    }

    pub fn global_clauses(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.is_initial())
    }

    /// First generated-name counter not used by any proposition or index in
    /// the set. Keeps fresh-name generation deterministic and collision free
    /// across repeated transformations.
    pub fn next_fresh_counter(&self) -> u32 {
        let (props, inds) = free_symbols(self);
        let p = props.iter().filter_map(|p| p.reserved_counter()).max();
        let i = inds.iter().filter_map(|i| i.reserved_counter()).max();
        p.max(i).map_or(0, |m| m + 1)
    }

    /// Multiset equality ignoring clause order.
    pub fn same_clauses(&self, other: &ClauseSet) -> bool {
        let mut a = self.clauses.clone();
        let mut b = other.clauses.clone();
        a.sort();
        b.sort();
        a == b
    }
}

impl fmt::Display for ClauseSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A propositional combination of literals, used on the raw side before
/// clause shapes are enforced.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoolExpr {
    True,
    False,
    Lit(Literal),
    Not(Box<BoolExpr>),
    And(Box<BoolExpr>, Box<BoolExpr>),
    Or(Box<BoolExpr>, Box<BoolExpr>),
}

impl BoolExpr {
    pub fn lit(l: Literal) -> Self {
        BoolExpr::Lit(l)
    }

    /// Conjunction of literals; empty reads as `T`.
    pub fn conj(lits: Vec<Literal>) -> Self {
        lits.into_iter()
            .map(BoolExpr::Lit)
            .reduce(|a, b| BoolExpr::And(Box::new(a), Box::new(b)))
            .unwrap_or(BoolExpr::True)
    }

    /// Disjunction of literals; empty reads as `F_`.
    pub fn disj(lits: Vec<Literal>) -> Self {
        lits.into_iter()
            .map(BoolExpr::Lit)
            .reduce(|a, b| BoolExpr::Or(Box::new(a), Box::new(b)))
            .unwrap_or(BoolExpr::False)
    }

    pub fn and(self, other: BoolExpr) -> Self {
        BoolExpr::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: BoolExpr) -> Self {
        BoolExpr::Or(Box::new(self), Box::new(other))
    }

    pub fn negated(self) -> Self {
        BoolExpr::Not(Box::new(self))
    }

    /// The literal this expression is, if it is one.
    pub fn as_literal(&self) -> Option<Literal> {
        match self {
            BoolExpr::Lit(l) => Some(l.clone()),
            BoolExpr::Not(inner) => match inner.as_ref() {
                BoolExpr::Lit(l) => Some(l.complement()),
                _ => None,
            },
            _ => None,
        }
    }

    fn visit_symbols(&self, props: &mut BTreeSet<Proposition>) {
        match self {
            BoolExpr::True | BoolExpr::False => {}
            BoolExpr::Lit(l) => {
                props.insert(l.prop.clone());
            }
            BoolExpr::Not(a) => a.visit_symbols(props),
            BoolExpr::And(a, b) | BoolExpr::Or(a, b) => {
                a.visit_symbols(props);
                b.visit_symbols(props);
            }
        }
    }

    /// Conjunctive normal form: a list of disjunctions of literals.
    /// Tautological disjuncts are dropped; an empty list is `T` and a list
    /// containing an empty disjunct is `F_`-like.
    pub fn cnf(&self) -> Vec<Vec<Literal>> {
        fn nnf(e: &BoolExpr, neg: bool) -> BoolExpr {
            match (e, neg) {
                (BoolExpr::True, false) | (BoolExpr::False, true) => BoolExpr::True,
                (BoolExpr::True, true) | (BoolExpr::False, false) => BoolExpr::False,
                (BoolExpr::Lit(l), false) => BoolExpr::Lit(l.clone()),
                (BoolExpr::Lit(l), true) => BoolExpr::Lit(l.complement()),
                (BoolExpr::Not(a), _) => nnf(a, !neg),
                (BoolExpr::And(a, b), false) | (BoolExpr::Or(a, b), true) => {
                    BoolExpr::And(Box::new(nnf(a, neg)), Box::new(nnf(b, neg)))
                }
                (BoolExpr::Or(a, b), false) | (BoolExpr::And(a, b), true) => {
                    BoolExpr::Or(Box::new(nnf(a, neg)), Box::new(nnf(b, neg)))
                }
            }
        }

        fn go(e: &BoolExpr) -> Vec<Vec<Literal>> {
            match e {
                BoolExpr::True => vec![],
                BoolExpr::False => vec![vec![]],
                BoolExpr::Lit(l) => vec![vec![l.clone()]],
                BoolExpr::And(a, b) => {
                    let mut out = go(a);
                    out.extend(go(b));
                    out
                }
                BoolExpr::Or(a, b) => {
                    let left = go(a);
                    let right = go(b);
                    if left.is_empty() || right.is_empty() {
                        return vec![]; // either side is T
                    }
                    let mut out = Vec::new();
                    for x in &left {
                        for y in &right {
                            let mut d = x.clone();
                            d.extend(y.iter().cloned());
                            out.push(d);
                        }
                    }
                    out
                }
                BoolExpr::Not(_) => unreachable!("nnf removed compound negation"),
            }
        }

        let mut out = Vec::new();
        for disj in go(&nnf(self, false)) {
            let (lits, taut) = canonicalize(disj);
            if !taut {
                out.push(lits);
            }
        }
        out
    }
}

/// Left-hand side of a raw clause.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RawLhs {
    Start,
    /// Conjunction of literals; empty is `T`.
    Conj(Vec<Literal>),
}

impl RawLhs {
    pub fn top() -> Self {
        RawLhs::Conj(vec![])
    }

    pub fn lit(l: Literal) -> Self {
        RawLhs::Conj(vec![l])
    }
}

/// Right-hand side of a raw clause: a propositional body under at most one
/// temporal operator. `A G` bodies trigger the loop encoding in
/// [`normalize`]; an optional designated proposition names the loop.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RawRhs {
    Bool(BoolExpr),
    AllNext(BoolExpr),
    ExistsNext(BoolExpr, Index),
    AllSometime(BoolExpr),
    ExistsSometime(BoolExpr, Index),
    AllAlways { body: BoolExpr, loop_prop: Option<Proposition> },
}

/// A clause before normalization. Strict shape is not enforced here; the
/// invariant is only that temporal operators do not nest.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RawClause {
    pub lhs: RawLhs,
    pub rhs: RawRhs,
}

impl RawClause {
    pub fn new(lhs: RawLhs, rhs: RawRhs) -> Self {
        RawClause { lhs, rhs }
    }

    fn visit_symbols(&self, props: &mut BTreeSet<Proposition>, inds: &mut BTreeSet<Index>) {
        if let RawLhs::Conj(lits) = &self.lhs {
            for l in lits {
                props.insert(l.prop.clone());
            }
        }
        match &self.rhs {
            RawRhs::Bool(b) | RawRhs::AllNext(b) | RawRhs::AllSometime(b) => b.visit_symbols(props),
            RawRhs::ExistsNext(b, ind) | RawRhs::ExistsSometime(b, ind) => {
                b.visit_symbols(props);
                inds.insert(ind.clone());
            }
            RawRhs::AllAlways { body, loop_prop } => {
                body.visit_symbols(props);
                if let Some(p) = loop_prop {
                    props.insert(p.clone());
                }
            }
        }
    }
}

impl From<&Clause> for RawClause {
    fn from(c: &Clause) -> RawClause {
        match c {
            Clause::Initial { rhs } => {
                RawClause::new(RawLhs::Start, RawRhs::Bool(BoolExpr::disj(rhs.clone())))
            }
            Clause::AStep { lhs, rhs } => RawClause::new(
                RawLhs::Conj(lhs.clone()),
                RawRhs::AllNext(BoolExpr::disj(rhs.clone())),
            ),
            Clause::EStep { lhs, rhs, ind } => RawClause::new(
                RawLhs::Conj(lhs.clone()),
                RawRhs::ExistsNext(BoolExpr::disj(rhs.clone()), ind.clone()),
            ),
            Clause::ASometime { lhs, goal } => RawClause::new(
                RawLhs::Conj(lhs.clone()),
                RawRhs::AllSometime(BoolExpr::lit(goal.clone())),
            ),
            Clause::ESometime { lhs, goal, ind } => RawClause::new(
                RawLhs::Conj(lhs.clone()),
                RawRhs::ExistsSometime(BoolExpr::lit(goal.clone()), ind.clone()),
            ),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NormalizeError {
    #[error("malformed raw clause: {0}")]
    MalformedRaw(String),
}

enum Goal {
    Lit(Literal),
    Top,
    Bottom,
}

struct Normalizer {
    out: Vec<Clause>,
    fresh: u32,
}

impl Normalizer {
    fn emit(&mut self, clause: Clause) {
        if !clause.is_vacuous() && !self.out.contains(&clause) {
            self.out.push(clause);
        }
    }

    fn fresh_prop(&mut self) -> Proposition {
        let p = Proposition::fresh(self.fresh);
        self.fresh += 1;
        p
    }

    /// `start => body`, split into one initial clause per CNF conjunct.
    fn emit_initial(&mut self, body: &BoolExpr) {
        for disj in body.cnf() {
            self.emit(Clause::initial(disj));
        }
    }

    /// Global classical clause `ctx => body`: holds at the root and at every
    /// successor state, which together cover the whole model.
    fn emit_global_classical(&mut self, ctx: &[Literal], body: &BoolExpr) {
        let guard: Vec<Literal> = ctx.iter().map(Literal::complement).collect();
        for disj in body.cnf() {
            let mut d = guard.clone();
            d.extend(disj.iter().cloned());
            self.emit(Clause::initial(d.clone()));
            self.emit(Clause::a_step(vec![], d));
        }
    }

    fn goal_literal(body: &BoolExpr) -> Result<Goal, NormalizeError> {
        match body {
            BoolExpr::True => Ok(Goal::Top),
            BoolExpr::False => Ok(Goal::Bottom),
            _ => body.as_literal().map(Goal::Lit).ok_or_else(|| {
                NormalizeError::MalformedRaw("sometime goal must be a literal".into())
            }),
        }
    }

    fn clause(&mut self, raw: &RawClause) -> Result<(), NormalizeError> {
        match (&raw.lhs, &raw.rhs) {
            (RawLhs::Start, RawRhs::Bool(body)) => {
                self.emit_initial(body);
            }
            (RawLhs::Conj(ctx), RawRhs::Bool(body)) => {
                self.emit_global_classical(ctx, body);
            }
            (RawLhs::Start, rhs) => {
                // `start` may not head a temporal clause; bridge through a
                // fresh proposition asserted at the root.
                let g = self.fresh_prop();
                self.emit(Clause::initial(vec![Literal::pos(g.clone())]));
                let bridged = RawClause::new(RawLhs::lit(Literal::pos(g)), rhs.clone());
                self.clause(&bridged)?;
            }
            (RawLhs::Conj(ctx), RawRhs::AllNext(body)) => {
                for disj in body.cnf() {
                    self.emit(Clause::a_step(ctx.clone(), disj));
                }
            }
            (RawLhs::Conj(ctx), RawRhs::ExistsNext(body, ind)) => {
                // The ind successor is unique, so a conjunction under E X
                // splits exactly like one under A X.
                for disj in body.cnf() {
                    self.emit(Clause::e_step(ctx.clone(), disj, ind.clone()));
                }
            }
            (RawLhs::Conj(ctx), RawRhs::AllSometime(body)) => {
                match Self::goal_literal(body)? {
                    Goal::Lit(goal) => self.emit(Clause::a_sometime(ctx.clone(), goal)),
                    Goal::Top => {} // trivially fulfilled
                    Goal::Bottom => self.emit_global_classical(ctx, &BoolExpr::False),
                }
            }
            (RawLhs::Conj(ctx), RawRhs::ExistsSometime(body, ind)) => {
                match Self::goal_literal(body)? {
                    Goal::Lit(goal) => self.emit(Clause::e_sometime(ctx.clone(), goal, ind.clone())),
                    Goal::Top => {}
                    Goal::Bottom => self.emit_global_classical(ctx, &BoolExpr::False),
                }
            }
            (RawLhs::Conj(ctx), RawRhs::AllAlways { body, loop_prop }) => {
                // ctx => A G body unrolls into a self-sustaining loop: the
                // body and a loop proposition hold now and the loop
                // proposition re-asserts both at every next state.
                let z = match loop_prop {
                    Some(p) => p.clone(),
                    None => self.fresh_prop(),
                };
                let z_lit = Literal::pos(z);
                let now = BoolExpr::lit(z_lit.clone()).and(body.clone());
                self.emit_global_classical(ctx, &now);
                for disj in body.cnf() {
                    self.emit(Clause::a_step(vec![z_lit.clone()], disj));
                }
                self.emit(Clause::a_step(vec![z_lit.clone()], vec![z_lit]));
            }
        }
        Ok(())
    }
}

/// Translates raw clauses into a strict clause set. Fresh propositions are
/// numbered deterministically, starting above any generated name already
/// present in the input.
pub fn normalize(raw: &[RawClause]) -> Result<ClauseSet, NormalizeError> {
    let mut props = BTreeSet::new();
    let mut inds = BTreeSet::new();
    for r in raw {
        r.visit_symbols(&mut props, &mut inds);
    }
    let start = props
        .iter()
        .filter_map(|p| p.reserved_counter())
        .chain(inds.iter().filter_map(|i| i.reserved_counter()))
        .max()
        .map_or(0, |m| m + 1);

    let mut n = Normalizer { out: Vec::new(), fresh: start };
    for r in raw {
        n.clause(r)?;
    }
    Ok(ClauseSet::from_clauses(n.out))
}

/// Re-normalizes an existing clause set; the identity on [`normalize`] output
/// up to duplicate removal.
pub fn renormalize(cs: &ClauseSet) -> ClauseSet {
    let raw: Vec<RawClause> = cs.clauses().iter().map(RawClause::from).collect();
    normalize(&raw).expect("strict clauses cannot be malformed")
}

/// Exact inventories of the propositions and indices a clause set mentions.
pub fn free_symbols(cs: &ClauseSet) -> (BTreeSet<Proposition>, BTreeSet<Index>) {
    let mut props = BTreeSet::new();
    let mut inds = BTreeSet::new();
    for c in cs.clauses() {
        c.visit_symbols(&mut props, &mut inds);
    }
    (props, inds)
}

/// Outcome of a validation pass: hard violations plus advisory warnings.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<String>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "violation: {v}")?;
        }
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        Ok(())
    }
}

/// Checks a strict clause set against the clause-shape rules. The typed
/// representation rules most malformations out; what remains is an audit of
/// the canonical-form invariants.
pub fn validate_clause_set(cs: &ClauseSet) -> ValidationReport {
    let mut report = ValidationReport::default();
    for (i, c) in cs.clauses().iter().enumerate() {
        let (lhs_sorted, lhs_clash) = canonicalize(c.lhs().to_vec());
        if lhs_sorted != c.lhs() {
            report
                .violations
                .push(format!("clause {i}: left-hand side not in canonical form"));
        }
        if lhs_clash {
            report
                .violations
                .push(format!("clause {i}: contradictory left-hand side"));
        }
        match c {
            Clause::Initial { rhs } | Clause::AStep { rhs, .. } | Clause::EStep { rhs, .. } => {
                let (rhs_sorted, rhs_taut) = canonicalize(rhs.clone());
                if rhs_sorted != *rhs {
                    report
                        .violations
                        .push(format!("clause {i}: right-hand side not in canonical form"));
                }
                if rhs_taut {
                    report
                        .violations
                        .push(format!("clause {i}: tautological right-hand side"));
                }
                if rhs.is_empty() {
                    report.warnings.push(format!(
                        "clause {i}: empty right-hand side denotes F_ (unsatisfiable constraint)"
                    ));
                }
            }
            Clause::ASometime { .. } | Clause::ESometime { .. } => {}
        }
    }
    report
}

/// Checks raw clauses against the shape rules before normalization. This is
/// where non-clausal inputs (such as a compound sometime goal) surface.
pub fn validate_raw(raw: &[RawClause]) -> ValidationReport {
    let mut report = ValidationReport::default();
    for (i, r) in raw.iter().enumerate() {
        if let RawRhs::AllSometime(body) | RawRhs::ExistsSometime(body, _) = &r.rhs {
            let literal_like = matches!(body, BoolExpr::True | BoolExpr::False)
                || body.as_literal().is_some();
            if !literal_like {
                report
                    .violations
                    .push(format!("clause {i}: sometime goal not a literal"));
            }
        }
    }
    report
}
