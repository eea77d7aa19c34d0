//! Rule engine that picks a minimum-weight basis admitting a minimum-cost
//! certificate.
//!
//! The engine keeps a minor `M[D, K]` and repeatedly applies the first rule
//! that fires, in the order of [`Rule`]. When no rule fires the remaining
//! view has no extreme elements and any of its minimum-weight bases is taken.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{ElementId, ElementSet, IndependenceOracle, Matroid, Minor, MinorState};
use crate::uncertainty::UncertainInstance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Rule {
    UniqueMaxDelete,
    UniqueMinContract,
    NonTrivialUpperContract,
    NonTrivialLowerDelete,
    TrivialContract,
    TrivialDelete,
    FinalMwbSplit,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One rule firing: what it contracted or deleted and the circuit or
/// cocircuit complement that justifies it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleApplication {
    pub rule: Rule,
    pub contracted: ElementSet,
    pub deleted: ElementSet,
    pub justification: ElementSet,
}

impl RuleApplication {
    fn contract(rule: Rule, e: ElementId, justification: ElementSet) -> Self {
        RuleApplication {
            rule,
            contracted: ElementSet::from([e]),
            deleted: ElementSet::new(),
            justification,
        }
    }

    fn delete(rule: Rule, e: ElementId, justification: ElementSet) -> Self {
        RuleApplication {
            rule,
            contracted: ElementSet::new(),
            deleted: ElementSet::from([e]),
            justification,
        }
    }

    /// The single decided element, or the smallest one for a final split.
    pub fn element(&self) -> ElementId {
        *self
            .contracted
            .iter()
            .chain(self.deleted.iter())
            .min()
            .expect("every application decides an element")
    }

    pub fn apply(&self, state: &mut MinorState) {
        state.contracted.extend(self.contracted.iter().copied());
        state.deleted.extend(self.deleted.iter().copied());
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectionTrace {
    pub start: MinorState,
    pub steps: Vec<RuleApplication>,
    pub state: MinorState,
}

impl SelectionTrace {
    /// Re-applies every step to the start state.
    pub fn replay(&self) -> MinorState {
        let mut st = self.start.clone();
        for step in &self.steps {
            step.apply(&mut st);
        }
        st
    }

    /// One line per step: rule, decided element(s), justification set.
    pub fn lines(&self, m: &Matroid) -> Vec<String> {
        self.steps
            .iter()
            .map(|s| {
                let decided: ElementSet = s.contracted.union(&s.deleted).copied().collect();
                format!(
                    "{} {} {{{}}}",
                    s.rule,
                    m.names_of(&decided).join(","),
                    m.names_of(&s.justification).join(",")
                )
            })
            .collect()
    }
}

/// MWB membership probes for one view, all relative to one greedy basis.
struct Probe<'v, 'a> {
    view: &'v Minor<'a, Matroid>,
    inst: &'a UncertainInstance,
    b0: ElementSet,
}

impl<'v, 'a> Probe<'v, 'a> {
    fn new(view: &'v Minor<'a, Matroid>, inst: &'a UncertainInstance) -> Self {
        let b0 = view.greedy_mwb(|e| inst.weight(e));
        Probe { view, inst, b0 }
    }

    fn w(&self, e: ElementId) -> crate::rational::Rational {
        self.inst.weight(e)
    }

    /// Some MWB of the view containing `e`, if one exists.
    fn mwb_containing(&self, e: ElementId) -> Option<ElementSet> {
        if self.b0.contains(&e) {
            return Some(self.b0.clone());
        }
        let c = self.view.circuit_unchecked(&self.b0, e);
        let f = c.iter().find(|&&f| f != e && self.w(f) == self.w(e))?;
        let mut b = self.b0.clone();
        b.remove(f);
        b.insert(e);
        Some(b)
    }

    /// Some MWB of the view avoiding `e`, if one exists.
    fn mwb_avoiding(&self, e: ElementId) -> Option<ElementSet> {
        if !self.b0.contains(&e) {
            return Some(self.b0.clone());
        }
        let x = self.view.cocircuit_unchecked(&self.b0, e);
        let g = x.iter().find(|&&g| g != e && self.w(g) == self.w(e))?;
        let mut b = self.b0.clone();
        b.remove(&e);
        b.insert(*g);
        Some(b)
    }

    fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.view.ground_set().iter().copied()
    }

    fn unique_max_delete(&self) -> Option<RuleApplication> {
        let e = self
            .elements()
            .find(|&e| self.mwb_containing(e).is_none())?;
        let c = self.view.circuit_unchecked(&self.b0, e);
        Some(RuleApplication::delete(Rule::UniqueMaxDelete, e, c))
    }

    fn unique_min_contract(&self) -> Option<RuleApplication> {
        let e = self.elements().find(|&e| self.mwb_avoiding(e).is_none())?;
        let x = self.view.cocircuit_unchecked(&self.b0, e);
        Some(RuleApplication::contract(Rule::UniqueMinContract, e, x))
    }

    fn nontrivial_upper_contract(&self) -> Option<RuleApplication> {
        let inst = self.inst;
        self.elements().find_map(|e| {
            if inst.is_trivial(e) || !inst.is_extreme_high(e) {
                return None;
            }
            let b = self.mwb_containing(e)?;
            let x = self.view.cocircuit_unchecked(&b, e);
            let chosen = most_expensive(
                inst,
                e,
                x.iter()
                    .copied()
                    .filter(|&g| !inst.is_trivial(g) && inst.upper(g) == inst.weight(e)),
            );
            Some(RuleApplication::contract(
                Rule::NonTrivialUpperContract,
                chosen,
                x,
            ))
        })
    }

    fn nontrivial_lower_delete(&self) -> Option<RuleApplication> {
        let inst = self.inst;
        self.elements().find_map(|e| {
            if inst.is_trivial(e) || !inst.is_extreme_low(e) {
                return None;
            }
            let b = self.mwb_avoiding(e)?;
            let c = self.view.circuit_unchecked(&b, e);
            let chosen = most_expensive(
                inst,
                e,
                c.iter()
                    .copied()
                    .filter(|&g| !inst.is_trivial(g) && inst.lower(g) == inst.weight(e)),
            );
            Some(RuleApplication::delete(
                Rule::NonTrivialLowerDelete,
                chosen,
                c,
            ))
        })
    }

    fn trivial_contract(&self) -> Option<RuleApplication> {
        self.elements().find_map(|e| {
            if !self.inst.is_trivial(e) {
                return None;
            }
            let b = self.mwb_containing(e)?;
            let x = self.view.cocircuit_unchecked(&b, e);
            Some(RuleApplication::contract(Rule::TrivialContract, e, x))
        })
    }

    fn trivial_delete(&self) -> Option<RuleApplication> {
        self.elements().find_map(|e| {
            if !self.inst.is_trivial(e) {
                return None;
            }
            let b = self.mwb_avoiding(e)?;
            let c = self.view.circuit_unchecked(&b, e);
            Some(RuleApplication::delete(Rule::TrivialDelete, e, c))
        })
    }

    fn assumption_holds(&self) -> bool {
        self.nontrivial_upper_contract().is_none() && self.nontrivial_lower_delete().is_none()
    }

    fn final_split(&self) -> Result<RuleApplication> {
        if let Some(e) = self
            .elements()
            .find(|&e| self.inst.is_extreme_low(e) || self.inst.is_extreme_high(e))
        {
            return Err(Error::Invariant(format!(
                "extreme element {} left for the final split",
                self.inst.name(e)
            )));
        }
        let rest = self
            .view
            .ground_set()
            .difference(&self.b0)
            .copied()
            .collect();
        Ok(RuleApplication {
            rule: Rule::FinalMwbSplit,
            contracted: self.b0.clone(),
            deleted: rest,
            justification: self.b0.clone(),
        })
    }

    fn next(&self) -> Result<RuleApplication> {
        let found = self
            .unique_max_delete()
            .or_else(|| self.unique_min_contract())
            .or_else(|| self.nontrivial_upper_contract())
            .or_else(|| self.nontrivial_lower_delete())
            .or_else(|| self.trivial_contract())
            .or_else(|| self.trivial_delete());
        match found {
            Some(a) => Ok(a),
            None => self.final_split(),
        }
    }
}

/// `e` itself when no candidate is strictly more expensive, otherwise the
/// most expensive candidate with the smallest id.
fn most_expensive(
    inst: &UncertainInstance,
    e: ElementId,
    candidates: impl Iterator<Item = ElementId>,
) -> ElementId {
    let mut best = e;
    for g in candidates {
        if inst.cost(g) > inst.cost(best) {
            best = g;
        }
    }
    best
}

fn view<'a>(inst: &'a UncertainInstance, state: &MinorState) -> Result<Minor<'a, Matroid>> {
    Minor::new(inst.matroid(), state.clone())
}

macro_rules! finder {
    ($(#[$doc:meta])* $name:ident, $method:ident) => {
        $(#[$doc])*
        pub fn $name(inst: &UncertainInstance, state: &MinorState) -> Result<Option<RuleApplication>> {
            let v = view(inst, state)?;
            Ok(Probe::new(&v, inst).$method())
        }
    };
}

finder!(
    /// An element of no MWB of the view: the strict maximum of its circuit.
    find_unique_max_delete,
    unique_max_delete
);
finder!(
    /// An element of every MWB of the view: the strict minimum of its cocircuit complement.
    find_unique_min_contract,
    unique_min_contract
);
finder!(
    /// A non-trivial element with `w = U` in some MWB, most expensive among its equals.
    find_nontrivial_upper_contract,
    nontrivial_upper_contract
);
finder!(
    /// A non-trivial element with `w = L` outside some MWB, most expensive among its equals.
    find_nontrivial_lower_delete,
    nontrivial_lower_delete
);

/// A trivial element lying in some MWB of the view.
pub fn find_trivial_contract(
    inst: &UncertainInstance,
    state: &MinorState,
) -> Result<Option<RuleApplication>> {
    let v = view(inst, state)?;
    let p = Probe::new(&v, inst);
    require_assumption(&p)?;
    Ok(p.trivial_contract())
}

/// A trivial element avoided by some MWB of the view.
pub fn find_trivial_delete(
    inst: &UncertainInstance,
    state: &MinorState,
) -> Result<Option<RuleApplication>> {
    let v = view(inst, state)?;
    let p = Probe::new(&v, inst);
    require_assumption(&p)?;
    Ok(p.trivial_delete())
}

fn require_assumption(p: &Probe<'_, '_>) -> Result<()> {
    if p.assumption_holds() {
        Ok(())
    } else {
        Err(Error::contract(
            "trivial rules need a view without non-trivial extreme rule candidates",
        ))
    }
}

/// Runs the engine from `D = K = ∅`.
pub fn run_algorithm1(inst: &UncertainInstance) -> Result<(ElementSet, SelectionTrace)> {
    run_algorithm1_from(inst, MinorState::default())
}

/// Runs the engine from a given compatible start state.
pub fn run_algorithm1_from(
    inst: &UncertainInstance,
    start: MinorState,
) -> Result<(ElementSet, SelectionTrace)> {
    Minor::new(inst.matroid(), start.clone())?;
    let mut state = start.clone();
    let mut steps = Vec::new();
    while state.contracted.len() + state.deleted.len() < inst.len() {
        let v = Minor::new_unchecked(inst.matroid(), state.clone());
        let step = Probe::new(&v, inst).next()?;
        step.apply(&mut state);
        steps.push(step);
    }
    let k = state.contracted.clone();
    if !inst.matroid().is_basis(&k)? {
        return Err(Error::Invariant("rule engine ended without a basis".into()));
    }
    Ok((
        k,
        SelectionTrace {
            start,
            steps,
            state,
        },
    ))
}
