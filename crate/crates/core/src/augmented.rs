//! Querying with predictions: predicted weights or a predicted basis.

use std::collections::BTreeMap;

use crate::certificate::{cut_pairs, first_violation};
use crate::error::{Error, Result};
use crate::matroid::{ElementId, ElementSet, IndependenceOracle, Minor, MinorState};
use crate::online::{process_circuit, Batch, CircuitPass, QueryEnvironment};
use crate::rational::{midpoint, Rational};
use crate::selection::run_algorithm1_from;
use crate::synthesis::{algorithm2, certify_given_basis};
use crate::uncertainty::{QuerySet, UncertainInstance};

/// Predicted weights, each inside its element's area.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightPrediction {
    pub weights: BTreeMap<ElementId, Rational>,
    /// Elements whose raw prediction lay outside the area and was clamped.
    pub clamped: ElementSet,
}

impl WeightPrediction {
    /// Clamps raw predictions into the areas. Every element needs a value.
    pub fn sanitize(inst: &UncertainInstance, raw: &BTreeMap<ElementId, Rational>) -> Result<Self> {
        let mut weights = BTreeMap::new();
        let mut clamped = ElementSet::new();
        for &e in inst.ground() {
            let v = *raw.get(&e).ok_or_else(|| {
                Error::field(
                    format!("predictions.weights.{}", inst.name(e)),
                    "missing prediction",
                )
            })?;
            let c = inst.area(e).clamp(v);
            if c != v {
                clamped.insert(e);
            }
            weights.insert(e, c);
        }
        if let Some(e) = raw.keys().find(|e| !inst.ground().contains(e)) {
            return Err(Error::UnknownElement(e.to_string()));
        }
        Ok(WeightPrediction { weights, clamped })
    }

    /// The true weights, as a perfect prediction.
    pub fn perfect(inst: &UncertainInstance) -> Self {
        WeightPrediction {
            weights: inst.ground().iter().map(|&e| (e, inst.weight(e))).collect(),
            clamped: ElementSet::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightPredictionRun {
    pub query: QuerySet,
    /// The certificate computed under the predicted weights.
    pub predicted_certificate: ElementSet,
    /// Whether the remaining elements had to be queried.
    pub fallback: bool,
    /// A basis verified by the final query set.
    pub basis: ElementSet,
}

/// Queries a minimum-cost certificate for the predicted weights, then
/// everything else if that did not settle the instance.
pub fn run_weight_prediction(
    env: &mut QueryEnvironment<'_>,
    pred: &WeightPrediction,
) -> Result<WeightPredictionRun> {
    let predicted = env.instance_with_weights(|e| pred.weights[&e])?;
    let step1 = algorithm2(&predicted)?.query.elements;
    for &e in &step1 {
        env.query(e)?;
    }
    let (basis, fallback) = match solved_basis(env) {
        Some(b) => (b, false),
        None => {
            for e in env.ground().clone() {
                if !env.is_known(e) {
                    env.query(e)?;
                }
            }
            let b = solved_basis(env).ok_or_else(|| {
                Error::Invariant("querying every element did not settle the instance".into())
            })?;
            (b, true)
        }
    };
    Ok(WeightPredictionRun {
        query: env.query_set(),
        predicted_certificate: step1,
        fallback,
        basis,
    })
}

/// A basis verified by the current query set, if one exists: the greedy
/// basis under midpoints of the current limits is such a basis whenever any
/// basis is.
pub fn solved_basis(env: &QueryEnvironment<'_>) -> Option<ElementSet> {
    let m = env.matroid();
    let b = m.greedy_mwb(|e| midpoint(env.lower_now(e), env.upper_now(e)));
    let pairs = cut_pairs(m, &b);
    let settled = pairs
        .iter()
        .all(|&(e, f)| env.upper_now(e) <= env.lower_now(f));
    settled.then_some(b)
}

/// Drops elements of `raw` to make it independent, then extends it to a
/// basis, both greedily in id order.
pub fn sanitize_basis(inst: &UncertainInstance, raw: &ElementSet) -> Result<ElementSet> {
    let m = inst.matroid();
    m.check_subset(raw)?;
    let mut b = m.max_independent_subset(raw);
    for &e in m.ground_set() {
        if b.insert(e) && !m.independent(&b) {
            b.remove(&e);
        }
    }
    Ok(b)
}

/// Prediction error measures of a predicted basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrorReport {
    pub eta1: usize,
    pub eta2: usize,
    /// Size of the largest fundamental circuit, 0 when the basis is the whole ground set.
    pub c_max: usize,
    /// Non-basis elements whose fundamental circuit is correct.
    pub correct_circuits: ElementSet,
    pub incorrect_circuits: ElementSet,
}

impl ErrorReport {
    /// `min{2(|Q*| + η₁) + η₂·c_max, n}`.
    pub fn bound(&self, q_star: usize, n: usize) -> usize {
        (2 * (q_star + self.eta1) + self.eta2 * self.c_max).min(n)
    }
}

/// Labels every fundamental circuit of `b_hat` correct or incorrect under the
/// true weights. `eta1` is left at zero; see [`compute_eta1`].
pub fn classify_prediction_circuits(
    inst: &UncertainInstance,
    b_hat: &ElementSet,
) -> Result<ErrorReport> {
    let m = inst.matroid();
    m.require_basis(b_hat)?;
    let w = |e: ElementId| inst.weight(e);
    let mut cut_min: BTreeMap<ElementId, Rational> = BTreeMap::new();
    for &f in b_hat {
        let x = m.cocircuit_unchecked(b_hat, f);
        let least = x.iter().map(|&g| w(g)).min().expect("contains f");
        cut_min.insert(f, least);
    }
    let mut report = ErrorReport {
        eta1: 0,
        eta2: 0,
        c_max: 0,
        correct_circuits: ElementSet::new(),
        incorrect_circuits: ElementSet::new(),
    };
    for &e in m.ground_set().difference(b_hat) {
        let c = m.circuit_unchecked(b_hat, e);
        report.c_max = report.c_max.max(c.len());
        let correct = c
            .iter()
            .filter(|&&f| f != e)
            .all(|&f| w(e) >= w(f) && w(f) <= cut_min[&f]);
        if correct {
            report.correct_circuits.insert(e);
        } else {
            report.incorrect_circuits.insert(e);
        }
    }
    report.eta2 = report.incorrect_circuits.len();
    Ok(report)
}

/// Basis elements lying on some correct fundamental circuit.
pub fn trusted_part(
    inst: &UncertainInstance,
    b_hat: &ElementSet,
    report: &ErrorReport,
) -> ElementSet {
    let m = inst.matroid();
    report
        .correct_circuits
        .iter()
        .flat_map(|&e| m.circuit_unchecked(b_hat, e))
        .filter(|f| b_hat.contains(f))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eta1Detail {
    pub eta1: usize,
    pub trusted: ElementSet,
    /// The minimum-weight basis containing `trusted` chosen by the seeded rule engine.
    pub trusted_basis: ElementSet,
    pub trusted_cost: usize,
    pub optimum: usize,
}

/// `η₁ = |Q'| − |Q*|` under unit costs, where `Q'` certifies the basis the
/// rule engine picks when seeded with the trusted part of `b_hat`.
pub fn compute_eta1(inst: &UncertainInstance, b_hat: &ElementSet) -> Result<Eta1Detail> {
    let unit = inst.with_unit_costs();
    let report = classify_prediction_circuits(&unit, b_hat)?;
    let trusted = trusted_part(&unit, b_hat, &report);
    let seed = MinorState::new(ElementSet::new(), trusted.clone());
    let (basis, _) = run_algorithm1_from(&unit, seed)?;
    let trusted_cost = certify_given_basis(&unit, &basis)
        .map_err(|e| Error::Invariant(format!("seeded rule engine: {e}")))?
        .query
        .elements
        .len();
    let optimum = algorithm2(&unit)?.query.elements.len();
    let eta1 = trusted_cost.checked_sub(optimum).ok_or_else(|| {
        Error::Invariant("a seeded certificate is cheaper than the optimum".into())
    })?;
    Ok(Eta1Detail {
        eta1,
        trusted,
        trusted_basis: basis,
        trusted_cost,
        optimum,
    })
}

/// Full error report, `eta1` included.
pub fn error_report(inst: &UncertainInstance, b_hat: &ElementSet) -> Result<ErrorReport> {
    let mut report = classify_prediction_circuits(inst, b_hat)?;
    report.eta1 = compute_eta1(inst, b_hat)?.eta1;
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisPredictionRun {
    pub query: QuerySet,
    /// A minimum-weight basis verified by `query`.
    pub basis: ElementSet,
    pub batches: Vec<Batch>,
    /// Non-basis elements whose whole circuit was queried.
    pub full_circuits: ElementSet,
}

/// The adaptive algorithm driven by a predicted basis. Falls back to querying
/// a whole circuit whenever the prediction is caught not being minimal on it.
pub fn run_basis_prediction(
    env: &mut QueryEnvironment<'_>,
    b_hat: &ElementSet,
) -> Result<BasisPredictionRun> {
    let m = env.matroid();
    m.require_basis(b_hat)?;
    let mut batches = Vec::new();
    let mut full_circuits = ElementSet::new();
    let mut touched = ElementSet::new();
    for &e in m.ground_set().difference(b_hat) {
        let c = m.circuit_unchecked(b_hat, e);
        let mut batch = Vec::new();
        if let CircuitPass::Heavier = process_circuit(env, e, &c, &mut batch, true)? {
            for &g in &c {
                if !env.is_known(g) {
                    env.query(g)?;
                    batch.push(g);
                }
            }
            full_circuits.insert(e);
            touched.extend(c.iter().copied());
        }
        batches.push(Batch {
            element: e,
            queried: batch,
        });
    }
    let deleted: ElementSet = m
        .ground_set()
        .difference(b_hat)
        .filter(|e| !full_circuits.contains(e))
        .copied()
        .collect();
    let contracted: ElementSet = b_hat.difference(&touched).copied().collect();
    let view = Minor::new(m, MinorState::new(deleted, contracted.clone()))?;
    let rest = view.greedy_mwb(|g| {
        env.known(g)
            .expect("every element of the remaining minor is known")
    });
    let mut basis = contracted;
    basis.extend(rest);
    Ok(BasisPredictionRun {
        query: env.query_set(),
        basis,
        batches,
        full_circuits,
    })
}

/// Checks that `q` verifies `b` for `inst`, as an invariant.
pub fn check_verifies(inst: &UncertainInstance, q: &ElementSet, b: &ElementSet) -> Result<()> {
    inst.require_mwb(b)
        .map_err(|e| Error::Invariant(format!("returned basis is not minimal: {e}")))?;
    match first_violation(inst, q, &cut_pairs(inst.matroid(), b)) {
        None => Ok(()),
        Some((e, f)) => Err(Error::Invariant(format!(
            "query set does not verify the basis: ({}, {})",
            inst.name(e),
            inst.name(f)
        ))),
    }
}
