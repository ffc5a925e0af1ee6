//! The generalized Fischer-Ladner closure and the interned formula universe
//! the tableau works in. Node labels are bitsets over the closure, so the
//! closure is computed once per run and every formula gets a dense id.

use std::collections::{BTreeSet, HashMap};

use crate::bnf::Index;
use crate::formula::Formula;

/// The least set of formulae containing the input that is closed under
/// subformulae, the next-time unfoldings of the fixpoint modalities, and
/// negation of non-negated members.
pub fn gfl_closure(f0: &Formula) -> BTreeSet<Formula> {
    let mut set: BTreeSet<Formula> = BTreeSet::new();
    let mut work = vec![f0.clone()];
    while let Some(f) = work.pop() {
        if set.contains(&f) {
            continue;
        }
        match &f {
            Formula::True | Formula::False | Formula::Start | Formula::Prop(_) => {}
            Formula::Not(a) => work.push((**a).clone()),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                work.push((**a).clone());
                work.push((**b).clone());
            }
            Formula::AllNext(a) => work.push((**a).clone()),
            Formula::ExistsNext(a, _) => work.push((**a).clone()),
            Formula::AllAlways(a) => {
                work.push((**a).clone());
                work.push(f.clone().all_next());
            }
            Formula::AllSometime(a) => {
                work.push((**a).clone());
                work.push(f.clone().all_next());
            }
            Formula::ExistsSometime(a, ind) => {
                work.push((**a).clone());
                work.push(f.clone().exists_next(ind.clone()));
            }
        }
        if !matches!(f, Formula::Not(_)) {
            work.push(f.clone().neg());
        }
        set.insert(f);
    }
    set
}

pub(crate) type FormulaId = u32;

/// Expansion role of a formula inside tableau labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Class {
    /// Atom-like: constants, propositions, negated propositions, `start`.
    Literal,
    /// Elementary next-time formula; drives the successor construction.
    Next,
    /// Conjunctive: one child label gains both components.
    Alpha(FormulaId, FormulaId),
    /// Disjunctive: two child labels, one component each.
    Beta(FormulaId, FormulaId),
    /// Lives in the closure for completeness but never enters a label
    /// (negations of modalities and similar).
    Inert,
}

/// The closure of one root formula with dense ids, classification, and
/// complement tables. Ids follow the structural order of the formulas, so
/// "least unmarked formula" is well defined and stable.
#[derive(Debug, Clone)]
pub(crate) struct Universe {
    pub formulas: Vec<Formula>,
    pub ids: HashMap<Formula, FormulaId>,
    pub class: Vec<Class>,
    pub complement: Vec<Option<FormulaId>>,
    pub false_id: FormulaId,
    pub root_id: FormulaId,
    /// Sorted indices mentioned anywhere in the universe.
    pub indices: Vec<Index>,
}

impl Universe {
    pub fn build(f0: &Formula) -> Universe {
        let mut set = gfl_closure(f0);
        set.insert(Formula::True);
        set.insert(Formula::False);
        let formulas: Vec<Formula> = set.into_iter().collect();
        let ids: HashMap<Formula, FormulaId> = formulas
            .iter()
            .enumerate()
            .map(|(i, f)| (f.clone(), i as FormulaId))
            .collect();
        let id = |f: &Formula| -> FormulaId {
            *ids.get(f).unwrap_or_else(|| panic!("closure misses {f}"))
        };

        let class = formulas
            .iter()
            .map(|f| match f {
                Formula::True | Formula::False | Formula::Start | Formula::Prop(_) => {
                    Class::Literal
                }
                Formula::AllNext(_) | Formula::ExistsNext(..) => Class::Next,
                Formula::And(a, b) => Class::Alpha(id(a), id(b)),
                Formula::Or(a, b) => Class::Beta(id(a), id(b)),
                Formula::Implies(a, b) => Class::Beta(id(&a.as_ref().clone().neg()), id(b)),
                Formula::AllAlways(a) => Class::Alpha(id(a), id(&f.clone().all_next())),
                Formula::AllSometime(a) => Class::Beta(id(a), id(&f.clone().all_next())),
                Formula::ExistsSometime(a, ind) => {
                    Class::Beta(id(a), id(&f.clone().exists_next(ind.clone())))
                }
                Formula::Not(inner) => match inner.as_ref() {
                    Formula::Prop(_) => Class::Literal,
                    Formula::And(a, b) => Class::Beta(
                        id(&a.as_ref().clone().neg()),
                        id(&b.as_ref().clone().neg()),
                    ),
                    Formula::Or(a, b) => Class::Alpha(
                        id(&a.as_ref().clone().neg()),
                        id(&b.as_ref().clone().neg()),
                    ),
                    Formula::Implies(a, b) => {
                        Class::Alpha(id(a), id(&b.as_ref().clone().neg()))
                    }
                    _ => Class::Inert,
                },
            })
            .collect();

        let complement = formulas
            .iter()
            .map(|f| ids.get(&f.clone().neg()).copied())
            .collect();

        let mut indices: BTreeSet<Index> = BTreeSet::new();
        for f in &formulas {
            if let Formula::ExistsNext(_, ind) | Formula::ExistsSometime(_, ind) = f {
                indices.insert(ind.clone());
            }
        }

        Universe {
            false_id: id(&Formula::False),
            root_id: id(f0),
            class,
            complement,
            ids,
            formulas,
            indices: indices.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn words(&self) -> usize {
        self.len().div_ceil(64)
    }

    pub fn is_nonelementary(&self, id: FormulaId) -> bool {
        matches!(self.class[id as usize], Class::Alpha(..) | Class::Beta(..))
    }
}

/// A label or mark set: a bitset over the universe.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Bits(pub Box<[u64]>);

impl Bits {
    pub fn empty(words: usize) -> Bits {
        Bits(vec![0; words].into_boxed_slice())
    }

    pub fn get(&self, id: FormulaId) -> bool {
        self.0[id as usize / 64] >> (id % 64) & 1 == 1
    }

    pub fn set(&mut self, id: FormulaId) {
        self.0[id as usize / 64] |= 1 << (id % 64);
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = FormulaId> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| {
            let mut rest = bits;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros();
                rest &= rest - 1;
                Some(w as FormulaId * 64 + b)
            })
        })
    }

    /// First set bit that is also set in `mask`, if any.
    pub fn first_in(&self, mask: &Bits) -> Option<FormulaId> {
        for (w, (&a, &m)) in self.0.iter().zip(mask.0.iter()).enumerate() {
            let and = a & m;
            if and != 0 {
                return Some(w as FormulaId * 64 + and.trailing_zeros());
            }
        }
        None
    }

    pub fn minus(&self, other: &Bits) -> Bits {
        Bits(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(&a, &b)| a & !b)
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bnf::{Literal, Proposition};

    fn p(name: &str) -> Formula {
        Formula::prop(Proposition::new(name).unwrap())
    }

    fn ind(name: &str) -> Index {
        Index::new(name).unwrap()
    }

    #[test]
    fn closure_of_smallest_formula() {
        // p & A G (T)
        let f = p("p").and(Formula::True.all_always());
        let c = gfl_closure(&f);
        assert!(c.contains(&f));
        assert!(c.contains(&p("p")));
        assert!(c.contains(&p("p").neg()));
        assert!(c.contains(&Formula::True.all_always()));
        assert!(c.contains(&Formula::True.all_always().all_next()));
    }

    #[test]
    fn closure_contains_exists_sometime_unfolding() {
        let f = p("x").implies(p("q").exists_sometime(ind("f")));
        let c = gfl_closure(&f);
        assert!(c.contains(&p("q").exists_sometime(ind("f")).exists_next(ind("f"))));
    }

    #[test]
    fn closure_is_a_fixpoint() {
        let goal = Formula::lit(&Literal::neg(Proposition::new("q").unwrap()));
        let f = p("p")
            .and(goal.clone().all_sometime())
            .and(p("r").exists_sometime(ind("g")).all_always());
        let c = gfl_closure(&f);
        for g in &c {
            for h in gfl_closure(g) {
                assert!(c.contains(&h), "closure missed {h} from {g}");
            }
        }
    }

    #[test]
    fn universe_classification() {
        let f = p("p").implies(p("q").all_sometime());
        let u = Universe::build(&f);
        let fid = u.ids[&f];
        // The implication resolves into the negated premise or the body.
        match u.class[fid as usize] {
            Class::Beta(a, b) => {
                assert_eq!(u.formulas[a as usize], p("p").neg());
                assert_eq!(u.formulas[b as usize], p("q").all_sometime());
            }
            ref c => panic!("implication classified {c:?}"),
        }
        let af = u.ids[&p("q").all_sometime()];
        match u.class[af as usize] {
            Class::Beta(a, b) => {
                assert_eq!(u.formulas[a as usize], p("q"));
                assert_eq!(u.formulas[b as usize], p("q").all_sometime().all_next());
            }
            ref c => panic!("A F classified {c:?}"),
        }
    }

    #[test]
    fn bits_iteration() {
        let mut b = Bits::empty(2);
        b.set(3);
        b.set(64);
        b.set(127);
        assert_eq!(b.iter_ones().collect::<Vec<_>>(), vec![3, 64, 127]);
        assert!(b.get(64));
        assert!(!b.get(4));
    }
}
