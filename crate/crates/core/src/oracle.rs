//! Exhaustive reference computations for small instances.

use std::collections::BTreeSet;

use crate::certificate::{cut_pairs, first_violation};
use crate::error::{Error, Result};
use crate::matroid::{ElementId, ElementSet, IndependenceOracle, Matroid, Minor, MinorState};
use crate::rational::{int, Rational};
use crate::uncertainty::{ElementData, QuerySet, UncertainInstance, UncertaintyArea};

pub const ALL_BASES_LIMIT: usize = 16;
pub const CERTIFICATE_LIMIT: usize = 12;
/// Upper bound on the number of weight assignments one sampling check may try.
pub const SAMPLING_LIMIT: u64 = 1 << 20;

fn guard(size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::Guard { size, limit })
    } else {
        Ok(())
    }
}

fn subset(ids: &[ElementId], mask: u64) -> ElementSet {
    ids.iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect()
}

/// Every basis, in increasing bitmask order over element ids.
pub fn all_bases<O: IndependenceOracle + ?Sized>(m: &O) -> Result<Vec<ElementSet>> {
    let ids: Vec<ElementId> = m.ground_set().iter().copied().collect();
    guard(ids.len(), ALL_BASES_LIMIT)?;
    let r = m.full_rank();
    Ok((0u64..1 << ids.len())
        .filter(|mask| mask.count_ones() as usize == r)
        .map(|mask| subset(&ids, mask))
        .filter(|s| m.independent(s))
        .collect())
}

/// Every minimum-weight basis under the true weights.
pub fn all_mwbs(inst: &UncertainInstance) -> Result<Vec<ElementSet>> {
    let best = inst.weight_of(&inst.greedy_mwb());
    Ok(all_bases(inst.matroid())?
        .into_iter()
        .filter(|b| inst.weight_of(b) == best)
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub min_cost: Rational,
    /// Every optimal `(Q, B)` pair with `Q` verifying `B`.
    pub optimal_certificates: Vec<(QuerySet, ElementSet)>,
    /// Number of query sets examined.
    pub enumeration_size: usize,
}

/// All subsets ordered by cost, then lexicographically by sorted element ids.
fn subsets_by_cost(inst: &UncertainInstance) -> Vec<(Rational, ElementSet)> {
    let ids: Vec<ElementId> = inst.ground().iter().copied().collect();
    let mut all: Vec<(Rational, ElementSet)> = (0u64..1 << ids.len())
        .map(|mask| {
            let s = subset(&ids, mask);
            (inst.cost_of(&s), s)
        })
        .collect();
    all.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.iter().cmp(b.1.iter())));
    all
}

fn search(inst: &UncertainInstance, bases: &[ElementSet], limit: usize) -> Result<OracleResult> {
    guard(inst.len(), limit)?;
    let pairs: Vec<Vec<(ElementId, ElementId)>> =
        bases.iter().map(|b| cut_pairs(inst.matroid(), b)).collect();
    let mut found: Vec<(QuerySet, ElementSet)> = Vec::new();
    let mut min_cost = None;
    let mut examined = 0;
    for (cost, q) in subsets_by_cost(inst) {
        if min_cost.is_some_and(|c| cost > c) {
            break;
        }
        examined += 1;
        for (b, p) in bases.iter().zip(&pairs) {
            if first_violation(inst, &q, p).is_none() {
                min_cost = Some(cost);
                found.push((inst.query_set(q.clone()), b.clone()));
            }
        }
    }
    Ok(OracleResult {
        min_cost: min_cost
            .ok_or_else(|| Error::Invariant("the full set verifies nothing".into()))?,
        optimal_certificates: found,
        enumeration_size: examined,
    })
}

/// Cheapest query sets verifying some minimum-weight basis.
pub fn min_cost_certificate(inst: &UncertainInstance) -> Result<OracleResult> {
    min_cost_certificate_limited(inst, CERTIFICATE_LIMIT)
}

pub fn min_cost_certificate_limited(
    inst: &UncertainInstance,
    limit: usize,
) -> Result<OracleResult> {
    guard(inst.len(), limit)?;
    search(inst, &all_mwbs(inst)?, limit)
}

/// Cheapest query sets verifying the given basis.
pub fn min_cert_for_basis(inst: &UncertainInstance, b: &ElementSet) -> Result<OracleResult> {
    min_cert_for_basis_limited(inst, b, CERTIFICATE_LIMIT)
}

pub fn min_cert_for_basis_limited(
    inst: &UncertainInstance,
    b: &ElementSet,
    limit: usize,
) -> Result<OracleResult> {
    guard(inst.len(), limit)?;
    inst.require_mwb(b)?;
    search(inst, std::slice::from_ref(b), limit)
}

/// Candidate values of each element for adversarial sampling: closed
/// endpoints, points just inside open endpoints, the true weight and
/// `grid_density` evenly spaced interior points per piece. "Just inside"
/// means closer than any two distinct endpoints or weights of the instance.
pub fn sample_points(inst: &UncertainInstance, grid_density: usize) -> Vec<Vec<Rational>> {
    let mut critical: BTreeSet<Rational> = BTreeSet::new();
    for &e in inst.ground() {
        critical.insert(inst.weight(e));
        for p in inst.area(e).pieces() {
            critical.insert(p.lo);
            critical.insert(p.hi);
        }
    }
    let values: Vec<Rational> = critical.into_iter().collect();
    let gap = values
        .windows(2)
        .map(|w| w[1] - w[0])
        .min()
        .unwrap_or_else(|| int(1));
    let delta = gap / int(4);
    inst.ground()
        .iter()
        .map(|&e| {
            let mut pts: BTreeSet<Rational> = BTreeSet::from([inst.weight(e)]);
            for p in inst.area(e).pieces() {
                pts.insert(if p.lo_open { p.lo + delta } else { p.lo });
                pts.insert(if p.hi_open { p.hi - delta } else { p.hi });
                let len = p.hi - p.lo;
                for k in 1..=grid_density {
                    pts.insert(p.lo + len * int(k as i64) / int(grid_density as i64 + 1));
                }
            }
            debug_assert!(pts.iter().all(|&x| inst.area(e).contains(x)));
            pts.into_iter().collect()
        })
        .collect()
}

/// Visits every combination of per-element choices; stops when `visit`
/// returns false. Returns whether the walk completed.
fn for_each_assignment(
    choices: &[Vec<Rational>],
    mut visit: impl FnMut(&[Rational]) -> bool,
) -> bool {
    let mut idx = vec![0usize; choices.len()];
    let mut current: Vec<Rational> = choices.iter().map(|c| c[0]).collect();
    loop {
        if !visit(&current) {
            return false;
        }
        let mut i = 0;
        loop {
            if i == choices.len() {
                return true;
            }
            idx[i] += 1;
            if idx[i] < choices[i].len() {
                current[i] = choices[i][idx[i]];
                break;
            }
            idx[i] = 0;
            current[i] = choices[i][0];
            i += 1;
        }
    }
}

fn assignment_count(choices: &[Vec<Rational>]) -> u64 {
    choices
        .iter()
        .try_fold(1u64, |acc, c| acc.checked_mul(c.len() as u64))
        .unwrap_or(u64::MAX)
}

/// Whether `b` stays minimal under every sampled assignment consistent with
/// `q`, tested by comparing against a greedy basis.
pub fn verify_by_sampling(
    inst: &UncertainInstance,
    q: &ElementSet,
    b: &ElementSet,
    grid_density: usize,
) -> Result<bool> {
    inst.matroid().check_subset(q)?;
    inst.require_mwb(b)?;
    let points = sample_points(inst, grid_density);
    let choices: Vec<Vec<Rational>> = inst
        .ground()
        .iter()
        .map(|&e| {
            if q.contains(&e) {
                vec![inst.weight(e)]
            } else {
                points[e.index()].clone()
            }
        })
        .collect();
    let count = assignment_count(&choices);
    if count > SAMPLING_LIMIT {
        return Err(Error::Guard {
            size: inst.ground().difference(q).count(),
            limit: SAMPLING_LIMIT.trailing_zeros() as usize,
        });
    }
    let m = inst.matroid();
    Ok(for_each_assignment(&choices, |w| {
        let greedy = m.greedy_mwb(|e| w[e.index()]);
        let total = |s: &ElementSet| s.iter().map(|e| w[e.index()]).sum::<Rational>();
        total(b) <= total(&greedy)
    }))
}

/// Whether querying `q` up front settles every sampled realization: for each
/// sampled weight vector, `q` verifies some minimum-weight basis of it.
pub fn is_universal_certificate(
    inst: &UncertainInstance,
    q: &ElementSet,
    grid_density: usize,
) -> Result<bool> {
    guard(inst.len(), CERTIFICATE_LIMIT)?;
    let choices = sample_points(inst, grid_density);
    if assignment_count(&choices) > SAMPLING_LIMIT {
        return Err(Error::Guard {
            size: inst.len(),
            limit: CERTIFICATE_LIMIT,
        });
    }
    let bases = all_bases(inst.matroid())?;
    let pairs: Vec<_> = bases.iter().map(|b| cut_pairs(inst.matroid(), b)).collect();
    let mut failure = None;
    let complete = for_each_assignment(&choices, |w| {
        let realized = match inst.with_weights(|e| w[e.index()]) {
            Ok(r) => r,
            Err(err) => {
                failure = Some(err);
                return false;
            }
        };
        let best = realized.weight_of(&realized.greedy_mwb());
        bases.iter().zip(&pairs).any(|(b, p)| {
            realized.weight_of(b) == best && first_violation(&realized, q, p).is_none()
        })
    });
    match failure {
        Some(err) => Err(err),
        None => Ok(complete),
    }
}

fn view_without_extremes<'a>(
    inst: &'a UncertainInstance,
    state: &MinorState,
) -> Result<Minor<'a, Matroid>> {
    let view = Minor::new(inst.matroid(), state.clone())?;
    if let Some(&e) = view
        .ground_set()
        .iter()
        .find(|&&e| inst.is_extreme_low(e) || inst.is_extreme_high(e))
    {
        return Err(Error::contract(format!(
            "element {} has an extreme weight",
            inst.name(e)
        )));
    }
    Ok(view)
}

/// Greedy basis of the view under lower limits.
pub fn lower_limit_basis(inst: &UncertainInstance, state: &MinorState) -> Result<ElementSet> {
    let view = view_without_extremes(inst, state)?;
    Ok(view.greedy_by_key(|e| inst.lower(e)))
}

/// An element every certificate of the view must contain, found on the
/// first lower-limit circuit whose non-basis element could be undercut.
pub fn mandatory_element(
    inst: &UncertainInstance,
    state: &MinorState,
    b_l: &ElementSet,
) -> Result<Option<ElementId>> {
    let view = view_without_extremes(inst, state)?;
    view.require_basis(b_l)?;
    let mut outside: Vec<ElementId> = view.ground_set().difference(b_l).copied().collect();
    outside.sort_by_key(|&f| (inst.lower(f), f));
    for f in outside {
        let c = view.circuit_unchecked(b_l, f);
        let rest = || c.iter().copied().filter(|&g| g != f);
        if rest().any(|g| inst.weight(f) < inst.upper(g)) {
            let top = rest()
                .fold(None::<ElementId>, |best, g| match best {
                    Some(b) if inst.upper(b) >= inst.upper(g) => Some(b),
                    _ => Some(g),
                })
                .expect("the condition found a member");
            return Ok(Some(top));
        }
    }
    Ok(None)
}

/// Uniform rank-one instance where adaptive querying costs 1 and querying
/// up front costs `rho`.
pub fn gap_instance(rho: Rational, n: usize) -> Result<UncertainInstance> {
    if rho < int(1) || n < 2 {
        return Err(Error::contract("gap instance needs rho >= 1 and n >= 2"));
    }
    let width = n.to_string().len();
    let names: Vec<String> = (1..=n).map(|i| format!("e{i:0width$}")).collect();
    let m = Matroid::uniform(names.clone(), 1)?;
    let other_cost = (rho - int(1)) / int(n as i64 - 1);
    let first = ElementData::new(UncertaintyArea::closed(int(0), int(2))?, int(0), int(1));
    let other = ElementData::new(UncertaintyArea::closed(int(1), int(3))?, int(2), other_cost);
    UncertainInstance::new(
        m,
        names.iter().enumerate().map(|(i, n)| {
            (
                n.clone(),
                if i == 0 { first.clone() } else { other.clone() },
            )
        }),
    )
}

/// The full ground set as a query set.
pub fn query_everything(inst: &UncertainInstance) -> QuerySet {
    inst.query_set(inst.ground().clone())
}
