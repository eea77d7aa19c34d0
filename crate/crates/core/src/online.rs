//! Adaptive querying with hidden weights.
//!
//! [`QueryEnvironment`] hides the true weights of an instance and reveals
//! them one query at a time. [`run_promise`] is the adaptive algorithm for a
//! known minimum-weight basis; with unit costs it queries at most twice as
//! many elements as a minimum-cardinality certificate.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matroid::{ElementId, ElementSet, IndependenceOracle, Matroid};
use crate::rational::{format_rational, Rational};
use crate::synthesis::algorithm2;
use crate::uncertainty::{QuerySet, UncertainInstance, UncertaintyArea};

/// Hidden-weight view of an instance. Weights are reachable only through
/// [`QueryEnvironment::query`]; every call is logged.
#[derive(Debug, Clone)]
pub struct QueryEnvironment<'a> {
    inst: &'a UncertainInstance,
    revealed: BTreeMap<ElementId, Rational>,
    order: Vec<ElementId>,
    accesses: Vec<ElementId>,
    spent: Rational,
}

impl<'a> QueryEnvironment<'a> {
    pub fn new(inst: &'a UncertainInstance) -> Self {
        QueryEnvironment {
            inst,
            revealed: BTreeMap::new(),
            order: Vec::new(),
            accesses: Vec::new(),
            spent: Rational::from_integer(0),
        }
    }

    /// Reveals `w_e`. Repeated queries are free and recorded once.
    pub fn query(&mut self, e: ElementId) -> Result<Rational> {
        self.inst.check(e)?;
        self.accesses.push(e);
        if let Some(&w) = self.revealed.get(&e) {
            return Ok(w);
        }
        let w = self.inst.weight(e);
        self.revealed.insert(e, w);
        self.order.push(e);
        self.spent += self.inst.cost(e);
        Ok(w)
    }

    pub fn matroid(&self) -> &'a Matroid {
        self.inst.matroid()
    }

    pub fn ground(&self) -> &'a ElementSet {
        self.inst.ground()
    }

    pub fn area(&self, e: ElementId) -> &'a UncertaintyArea {
        self.inst.area(e)
    }

    pub fn cost(&self, e: ElementId) -> Rational {
        self.inst.cost(e)
    }

    pub fn name(&self, e: ElementId) -> &'a str {
        self.inst.name(e)
    }

    pub fn revealed(&self, e: ElementId) -> Option<Rational> {
        self.revealed.get(&e).copied()
    }

    pub fn is_queried(&self, e: ElementId) -> bool {
        self.revealed.contains_key(&e)
    }

    /// The weight if it was revealed or the area is a single point.
    pub fn known(&self, e: ElementId) -> Option<Rational> {
        self.revealed(e).or_else(|| {
            let a = self.inst.area(e);
            a.is_trivial().then(|| a.lower())
        })
    }

    pub fn is_known(&self, e: ElementId) -> bool {
        self.known(e).is_some()
    }

    pub fn queried(&self) -> ElementSet {
        self.revealed.keys().copied().collect()
    }

    /// Elements in the order they were first queried.
    pub fn query_order(&self) -> &[ElementId] {
        &self.order
    }

    /// Every call to `query`, repeats included.
    pub fn accesses(&self) -> &[ElementId] {
        &self.accesses
    }

    pub fn spent(&self) -> Rational {
        self.spent
    }

    /// `L_e(Q)` for the current query set.
    pub fn lower_now(&self, e: ElementId) -> Rational {
        self.revealed(e).unwrap_or_else(|| self.inst.lower(e))
    }

    /// `U_e(Q)` for the current query set.
    pub fn upper_now(&self, e: ElementId) -> Rational {
        self.revealed(e).unwrap_or_else(|| self.inst.upper(e))
    }

    pub fn query_set(&self) -> QuerySet {
        self.inst.query_set(self.queried())
    }

    /// The same areas and costs with substituted weights; reveals nothing.
    pub fn instance_with_weights(
        &self,
        weight: impl Fn(ElementId) -> Rational,
    ) -> Result<UncertainInstance> {
        self.inst.with_weights(weight)
    }
}

/// Elements queried while handling one non-basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Batch {
    pub element: ElementId,
    pub queried: Vec<ElementId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnlineTrace {
    pub batches: Vec<Batch>,
}

impl OnlineTrace {
    pub fn union(&self) -> ElementSet {
        self.batches
            .iter()
            .flat_map(|b| b.queried.iter().copied())
            .collect()
    }
}

/// Outcome of one pass over a fundamental circuit.
pub(crate) enum CircuitPass {
    Settled,
    /// A queried circuit member is heavier than the non-basis element.
    Heavier,
}

/// Handles the circuit `c` of the non-basis element `e`, querying into `batch`.
/// With `detect_heavier` set, stops as soon as a queried circuit member is
/// revealed to be strictly heavier than `e`.
pub(crate) fn process_circuit(
    env: &mut QueryEnvironment<'_>,
    e: ElementId,
    c: &ElementSet,
    batch: &mut Vec<ElementId>,
    detect_heavier: bool,
) -> Result<CircuitPass> {
    loop {
        let violated = c
            .iter()
            .find(|&&f| f != e && env.upper_now(f) > env.lower_now(e))
            .copied();
        let Some(witness) = violated else {
            return Ok(CircuitPass::Settled);
        };
        let mut progressed = false;
        let l_e = env.lower_now(e);
        let pick = c
            .iter()
            .filter(|&&g| g != e && !env.is_known(g) && env.upper_now(g) > l_e)
            .fold(None::<ElementId>, |best, &g| match best {
                Some(b) if env.upper_now(b) >= env.upper_now(g) => Some(b),
                _ => Some(g),
            });
        if let Some(g) = pick {
            env.query(g)?;
            batch.push(g);
            progressed = true;
        }
        if !env.is_known(e) {
            env.query(e)?;
            batch.push(e);
            progressed = true;
        }
        if detect_heavier {
            let w_e = env.known(e).expect("e was just queried");
            if c.iter()
                .any(|&f| f != e && env.known(f).is_some_and(|w| w > w_e))
            {
                return Ok(CircuitPass::Heavier);
            }
        }
        if !progressed {
            return Err(Error::PromiseViolation(format!(
                "{} has weight {} but circuit member {} has weight {}: the basis is not minimal",
                env.name(e),
                format_rational(&env.lower_now(e)),
                env.name(witness),
                format_rational(&env.upper_now(witness)),
            )));
        }
    }
}

/// The adaptive algorithm for a given minimum-weight basis `b`.
pub fn run_promise(
    env: &mut QueryEnvironment<'_>,
    b: &ElementSet,
) -> Result<(QuerySet, OnlineTrace)> {
    let m = env.matroid();
    m.require_basis(b)?;
    let mut batches = Vec::new();
    for &e in m.ground_set().difference(b) {
        let c = m.circuit_unchecked(b, e);
        let mut batch = Vec::new();
        process_circuit(env, e, &c, &mut batch, false)?;
        batches.push(Batch {
            element: e,
            queried: batch,
        });
    }
    Ok((env.query_set(), OnlineTrace { batches }))
}

/// One row of a competitive-ratio table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompetitiveRow {
    pub queries: usize,
    pub optimum: usize,
    /// `queries / optimum`, and 1 when both are zero.
    pub ratio: Rational,
}

impl CompetitiveRow {
    pub fn new(queries: usize, optimum: usize) -> Self {
        let ratio = if optimum == 0 {
            if queries == 0 {
                Rational::from_integer(1)
            } else {
                Rational::from_integer(queries as i128)
            }
        } else {
            Rational::new(queries as i128, optimum as i128)
        };
        CompetitiveRow {
            queries,
            optimum,
            ratio,
        }
    }

    pub fn within(&self, bound: Rational) -> bool {
        if self.optimum == 0 {
            self.queries == 0
        } else {
            self.ratio <= bound
        }
    }
}

/// Runs the promise algorithm on each basis and compares against the
/// unit-cost optimum.
pub fn competitive_report(
    inst: &UncertainInstance,
    runs: &[ElementSet],
) -> Result<Vec<CompetitiveRow>> {
    let unit = inst.with_unit_costs();
    let optimum = algorithm2(&unit)?.query.elements.len();
    runs.iter()
        .map(|b| {
            let mut env = QueryEnvironment::new(&unit);
            let (q, _) = run_promise(&mut env, b)?;
            Ok(CompetitiveRow::new(q.elements.len(), optimum))
        })
        .collect()
}
