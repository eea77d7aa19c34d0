//! Exact certificate checks and counterexample construction.
//!
//! A query set `Q` verifies a minimum-weight basis `B` when `B` stays
//! minimal under every weight assignment that agrees with the true weights on
//! `Q` and lies in the areas elsewhere. Two equivalent exact tests are
//! provided: over cut pairs (the canonical one) and over fundamental circuits.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matroid::{ElementId, ElementSet, IndependenceOracle};
use crate::rational::{midpoint, Rational};
use crate::uncertainty::UncertainInstance;

/// A weight assignment consistent with `Q` under which `cheaper_basis`
/// beats the basis being checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// `(e, f)` with `e` in the basis, `f` able to replace it, and `U_e(Q) > L_f(Q)`.
    pub pair: (ElementId, ElementId),
    pub assignment: BTreeMap<ElementId, Rational>,
    pub cheaper_basis: ElementSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub valid: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn valid() -> Self {
        Verdict {
            valid: true,
            witness: None,
        }
    }
}

/// All `(e, f)` with `e ∈ b` and `f ∈ (E ∖ span(b − e)) − e`.
pub fn cut_pairs<O: IndependenceOracle + ?Sized>(
    m: &O,
    b: &ElementSet,
) -> Vec<(ElementId, ElementId)> {
    let mut pairs = Vec::new();
    for &e in b {
        for f in m.cocircuit_unchecked(b, e) {
            if f != e {
                pairs.push((e, f));
            }
        }
    }
    pairs
}

/// First pair violating `U_e(Q) ≤ L_f(Q)`.
pub fn first_violation(
    inst: &UncertainInstance,
    q: &ElementSet,
    pairs: &[(ElementId, ElementId)],
) -> Option<(ElementId, ElementId)> {
    pairs
        .iter()
        .copied()
        .find(|&(e, f)| inst.upper_after(q, e) > inst.lower_after(q, f))
}

pub fn verifies_cuts(inst: &UncertainInstance, q: &ElementSet, b: &ElementSet) -> Result<Verdict> {
    inst.matroid().check_subset(q)?;
    inst.require_mwb(b)?;
    let pairs = cut_pairs(inst.matroid(), b);
    Ok(match first_violation(inst, q, &pairs) {
        None => Verdict::valid(),
        Some(pair) => invalid(inst, q, b, pair),
    })
}

pub fn verifies_circuits(
    inst: &UncertainInstance,
    q: &ElementSet,
    b: &ElementSet,
) -> Result<Verdict> {
    inst.matroid().check_subset(q)?;
    inst.require_mwb(b)?;
    let m = inst.matroid();
    for &f in m.ground_set().difference(b) {
        let lf = inst.lower_after(q, f);
        for e in m.circuit_unchecked(b, f) {
            if e != f && inst.upper_after(q, e) > lf {
                return Ok(invalid(inst, q, b, (e, f)));
            }
        }
    }
    Ok(Verdict::valid())
}

fn invalid(
    inst: &UncertainInstance,
    q: &ElementSet,
    b: &ElementSet,
    (e, f): (ElementId, ElementId),
) -> Verdict {
    let hi = inst.upper_after(q, e);
    let lo = inst.lower_after(q, f);
    let mid = midpoint(lo, hi);
    let x_e = if q.contains(&e) {
        inst.weight(e)
    } else {
        high_point(inst, e, mid)
    };
    let x_f = if q.contains(&f) {
        inst.weight(f)
    } else {
        low_point(inst, f, mid)
    };
    let mut assignment: BTreeMap<ElementId, Rational> =
        inst.ground().iter().map(|&g| (g, inst.weight(g))).collect();
    assignment.insert(e, x_e);
    assignment.insert(f, x_f);
    let mut cheaper = b.clone();
    cheaper.remove(&e);
    cheaper.insert(f);
    Verdict {
        valid: false,
        witness: Some(Witness {
            pair: (e, f),
            assignment,
            cheaper_basis: cheaper,
        }),
    }
}

/// A point of `A_e` in `(above, U_e]`, equal to `U_e` when it is attained.
fn high_point(inst: &UncertainInstance, e: ElementId, above: Rational) -> Rational {
    let area = inst.area(e);
    if area.attains_upper() {
        return area.upper();
    }
    let top = area.pieces()[area.pieces().len() - 1];
    midpoint(top.lo.max(above), top.hi)
}

/// A point of `A_f` in `[L_f, below)`, equal to `L_f` when it is attained.
fn low_point(inst: &UncertainInstance, f: ElementId, below: Rational) -> Rational {
    let area = inst.area(f);
    if area.attains_lower() {
        return area.lower();
    }
    let bottom = area.pieces()[0];
    midpoint(bottom.lo, bottom.hi.min(below))
}

/// Which exchange property to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExchangeDirection {
    /// `e ∈ B`, `e' ∉ B`, `U_e = U_e' = w_e = w_e'`, `e ∈ C_e'`.
    Upper,
    /// `e ∉ B`, `e' ∈ B`, `L_e = L_e' = w_e = w_e'`, `e' ∈ C_e`.
    Lower,
    /// `e ∈ B`, `e' ∉ B`, `w_e = w_e'`, `B − e + e'` independent, both trivial or queried.
    Trivial,
}

/// Rewrites `(Q, B)` along an exchange and returns `(Q', B')`. When `Q`
/// verifies `B`, the result is checked to verify `B'`.
pub fn exchange_rewrite(
    inst: &UncertainInstance,
    q: &ElementSet,
    b: &ElementSet,
    e: ElementId,
    e_prime: ElementId,
    direction: ExchangeDirection,
) -> Result<(ElementSet, ElementSet)> {
    let m = inst.matroid();
    m.check_subset(q)?;
    m.check_subset(&ElementSet::from([e, e_prime]))?;
    inst.require_mwb(b)?;
    let unmet = |what: &str| Err(Error::contract(format!("exchange precondition: {what}")));
    let (w_e, w_p) = (inst.weight(e), inst.weight(e_prime));
    let (q_new, b_new) = match direction {
        ExchangeDirection::Upper => {
            if !b.contains(&e) || b.contains(&e_prime) {
                return unmet("need e in B and e' outside B");
            }
            if !(inst.upper(e) == w_e && inst.upper(e_prime) == w_e && w_p == w_e) {
                return unmet("need U_e = U_e' = w_e = w_e'");
            }
            if !m.circuit_unchecked(b, e_prime).contains(&e) {
                return unmet("e must lie on the circuit of e'");
            }
            (swap(q, e_prime, e), swap(b, e, e_prime))
        }
        ExchangeDirection::Lower => {
            if b.contains(&e) || !b.contains(&e_prime) {
                return unmet("need e outside B and e' in B");
            }
            if !(inst.lower(e) == w_e && inst.lower(e_prime) == w_e && w_p == w_e) {
                return unmet("need L_e = L_e' = w_e = w_e'");
            }
            if !m.circuit_unchecked(b, e).contains(&e_prime) {
                return unmet("e' must lie on the circuit of e");
            }
            (swap(q, e_prime, e), swap(b, e_prime, e))
        }
        ExchangeDirection::Trivial => {
            if !b.contains(&e) || b.contains(&e_prime) {
                return unmet("need e in B and e' outside B");
            }
            if w_e != w_p {
                return unmet("need w_e = w_e'");
            }
            let b_new = swap(b, e, e_prime);
            if !m.independent(&b_new) {
                return unmet("B - e + e' must be independent");
            }
            let settled = |g: ElementId| inst.is_trivial(g) || q.contains(&g);
            if !settled(e) || !settled(e_prime) {
                return unmet("e and e' must each be trivial or queried");
            }
            (q.clone(), b_new)
        }
    };
    let pairs = cut_pairs(m, b);
    if first_violation(inst, q, &pairs).is_none() {
        let after = cut_pairs(m, &b_new);
        if first_violation(inst, &q_new, &after).is_some() {
            return Err(Error::Invariant(
                "exchange produced a pair that is not a certificate".into(),
            ));
        }
    }
    Ok((q_new, b_new))
}

fn swap(s: &ElementSet, out: ElementId, inn: ElementId) -> ElementSet {
    let mut r = s.clone();
    r.remove(&out);
    r.insert(inn);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::matroid::Matroid;
    use crate::rational::int;
    use crate::uncertainty::{ElementData, UncertaintyArea};

    fn s(inst: &UncertainInstance, names: &[&str]) -> ElementSet {
        inst.matroid().set_of(names).unwrap()
    }

    fn check_witness(inst: &UncertainInstance, q: &ElementSet, b: &ElementSet, v: &Verdict) {
        let w = v.witness.as_ref().unwrap();
        for (&g, &x) in &w.assignment {
            assert!(inst.area(g).contains(x));
            if q.contains(&g) {
                assert_eq!(x, inst.weight(g));
            }
        }
        let total = |set: &ElementSet| set.iter().map(|g| w.assignment[g]).sum::<Rational>();
        assert!(inst.matroid().is_basis(&w.cheaper_basis).unwrap());
        assert!(total(&w.cheaper_basis) < total(b));
    }

    #[test]
    fn fig1_open_examples() {
        let inst = fixtures::fig1_open();
        let b = s(&inst, &["e2", "e3"]);
        assert!(
            verifies_cuts(&inst, &s(&inst, &["e1", "e2", "e3"]), &b)
                .unwrap()
                .valid
        );
        let q = s(&inst, &["e2", "e3"]);
        let v = verifies_cuts(&inst, &q, &b).unwrap();
        assert!(!v.valid);
        let (e2, e1) = (
            inst.matroid().id("e2").unwrap(),
            inst.matroid().id("e1").unwrap(),
        );
        assert_eq!(v.witness.as_ref().unwrap().pair, (e2, e1));
        check_witness(&inst, &q, &b, &v);
    }

    #[test]
    fn fig1_mixed_needs_nothing() {
        let inst = fixtures::fig1_mixed();
        let b = s(&inst, &["e2", "e3"]);
        assert!(verifies_cuts(&inst, &ElementSet::new(), &b).unwrap().valid);
    }

    #[test]
    fn fig2_circuit_examples() {
        let inst = fixtures::fig2();
        let t = s(&inst, &["e1", "e2", "e5"]);
        let t2 = s(&inst, &["e2", "e3", "e5"]);
        let q = s(&inst, &["e3", "e4"]);
        assert!(verifies_circuits(&inst, &q, &t).unwrap().valid);
        let v = verifies_circuits(&inst, &q, &t2).unwrap();
        assert!(!v.valid);
        check_witness(&inst, &q, &t2, &v);
        assert!(
            verifies_circuits(&inst, &s(&inst, &["e1", "e3", "e4"]), &t2)
                .unwrap()
                .valid
        );
        assert!(!verifies_cuts(&inst, &q, &t2).unwrap().valid);
    }

    #[test]
    fn rejects_non_mwb() {
        let inst = fixtures::fig2();
        let heavy = s(&inst, &["e1", "e3", "e4"]);
        assert!(matches!(
            verifies_cuts(&inst, &ElementSet::new(), &heavy),
            Err(Error::Contract(_))
        ));
        let not_basis = s(&inst, &["e1"]);
        assert!(verifies_circuits(&inst, &ElementSet::new(), &not_basis).is_err());
    }

    #[test]
    fn full_query_always_verifies() {
        for inst in [
            fixtures::fig1_open(),
            fixtures::fig1_closed(),
            fixtures::fig2(),
        ] {
            let b = inst.greedy_mwb();
            assert!(verifies_cuts(&inst, inst.ground(), &b).unwrap().valid);
        }
    }

    #[test]
    fn trivial_exchange_on_closed_triangle() {
        let inst = fixtures::fig1_closed();
        let b = s(&inst, &["e2", "e3"]);
        let q = s(&inst, &["e1", "e2", "e3"]);
        let id = |n| inst.matroid().id(n).unwrap();
        let (q2, b2) = exchange_rewrite(
            &inst,
            &q,
            &b,
            id("e2"),
            id("e1"),
            ExchangeDirection::Trivial,
        )
        .unwrap();
        assert_eq!(b2, s(&inst, &["e1", "e3"]));
        assert!(verifies_cuts(&inst, &q2, &b2).unwrap().valid);
    }

    fn parallel_pair() -> UncertainInstance {
        let m = Matroid::graphic(3, [("a", 0, 1), ("b", 0, 1), ("x", 1, 2)]).unwrap();
        let area = UncertaintyArea::closed(int(0), int(2)).unwrap();
        UncertainInstance::new(
            m,
            [
                ("a", ElementData::new(area.clone(), int(2), int(1))),
                ("b", ElementData::new(area.clone(), int(2), int(1))),
                ("x", ElementData::new(area, int(1), int(1))),
            ],
        )
        .unwrap()
    }

    #[test]
    fn upper_exchange_on_parallel_edges() {
        let inst = parallel_pair();
        let b = s(&inst, &["a", "x"]);
        let q = s(&inst, &["b"]);
        assert!(verifies_cuts(&inst, &q, &b).unwrap().valid);
        let id = |n| inst.matroid().id(n).unwrap();
        let (q2, b2) =
            exchange_rewrite(&inst, &q, &b, id("a"), id("b"), ExchangeDirection::Upper).unwrap();
        assert_eq!(q2, s(&inst, &["a"]));
        assert_eq!(b2, s(&inst, &["b", "x"]));
        assert!(verifies_cuts(&inst, &q2, &b2).unwrap().valid);
    }

    #[test]
    fn degenerate_exchange_rejected() {
        let inst = parallel_pair();
        let b = s(&inst, &["a", "x"]);
        let a = inst.matroid().id("a").unwrap();
        for dir in [
            ExchangeDirection::Upper,
            ExchangeDirection::Lower,
            ExchangeDirection::Trivial,
        ] {
            assert!(matches!(
                exchange_rewrite(&inst, &ElementSet::new(), &b, a, a, dir),
                Err(Error::Contract(_))
            ));
        }
    }
}
