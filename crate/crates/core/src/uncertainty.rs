//! Uncertainty areas and uncertain matroid instances.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::matroid::{ElementId, ElementSet, IndependenceOracle, Matroid};
use crate::rational::{format_rational, midpoint, parse_rational, Rational};

/// A bounded interval with open or closed endpoints. A point is `[v,v]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntervalPiece {
    pub lo: Rational,
    pub hi: Rational,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl IntervalPiece {
    pub fn new(lo: Rational, hi: Rational, lo_open: bool, hi_open: bool) -> Result<Self> {
        let piece = IntervalPiece {
            lo,
            hi,
            lo_open,
            hi_open,
        };
        if lo > hi {
            return Err(Error::Parse(format!("interval {piece} has lo > hi")));
        }
        if lo == hi && (lo_open || hi_open) {
            return Err(Error::Parse(format!("interval {piece} is empty")));
        }
        Ok(piece)
    }

    pub fn closed(lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(lo, hi, false, false)
    }

    pub fn open(lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(lo, hi, true, true)
    }

    pub fn point(v: Rational) -> Self {
        IntervalPiece {
            lo: v,
            hi: v,
            lo_open: false,
            hi_open: false,
        }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, v: Rational) -> bool {
        let above = if self.lo_open {
            v > self.lo
        } else {
            v >= self.lo
        };
        let below = if self.hi_open {
            v < self.hi
        } else {
            v <= self.hi
        };
        above && below
    }

    /// Parses `[a,b]`, `(a,b)`, `[a,b)`, `(a,b]` or `{a}`.
    pub fn parse(text: &str) -> Result<Self> {
        let s = text.trim();
        let bad = || Error::Parse(format!("invalid interval {text:?}"));
        if let Some(inner) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            if inner.contains(',') {
                return Err(Error::Parse(format!(
                    "invalid interval {text:?}: write each point as its own piece"
                )));
            }
            return Ok(Self::point(parse_rational(inner)?));
        }
        let lo_open = match s.chars().next() {
            Some('(') => true,
            Some('[') => false,
            _ => return Err(bad()),
        };
        let hi_open = match s.chars().last() {
            Some(')') => true,
            Some(']') => false,
            _ => return Err(bad()),
        };
        let inner = &s[1..s.len() - 1];
        let (lo, hi) = inner.split_once(',').ok_or_else(bad)?;
        Self::new(parse_rational(lo)?, parse_rational(hi)?, lo_open, hi_open)
    }
}

impl fmt::Display for IntervalPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi && !self.lo_open && !self.hi_open {
            return write!(f, "{{{}}}", format_rational(&self.lo));
        }
        write!(
            f,
            "{}{},{}{}",
            if self.lo_open { '(' } else { '[' },
            format_rational(&self.lo),
            format_rational(&self.hi),
            if self.hi_open { ')' } else { ']' }
        )
    }
}

/// A non-empty finite union of bounded intervals, kept sorted, disjoint and
/// with touching pieces merged.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UncertaintyArea {
    pieces: Vec<IntervalPiece>,
}

impl UncertaintyArea {
    pub fn new(pieces: Vec<IntervalPiece>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::Parse("uncertainty area has no pieces".into()));
        }
        Ok(UncertaintyArea {
            pieces: normalize(pieces),
        })
    }

    pub fn point(v: Rational) -> Self {
        UncertaintyArea {
            pieces: vec![IntervalPiece::point(v)],
        }
    }

    pub fn closed(lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(vec![IntervalPiece::closed(lo, hi)?])
    }

    pub fn open(lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(vec![IntervalPiece::open(lo, hi)?])
    }

    /// The two-point area `{lo, hi}`.
    pub fn two_point(lo: Rational, hi: Rational) -> Self {
        UncertaintyArea {
            pieces: normalize(vec![IntervalPiece::point(lo), IntervalPiece::point(hi)]),
        }
    }

    pub fn parse_pieces<S: AsRef<str>>(pieces: &[S]) -> Result<Self> {
        Self::new(
            pieces
                .iter()
                .map(|p| IntervalPiece::parse(p.as_ref()))
                .collect::<Result<_>>()?,
        )
    }

    pub fn pieces(&self) -> &[IntervalPiece] {
        &self.pieces
    }

    pub fn lower(&self) -> Rational {
        self.pieces[0].lo
    }

    pub fn upper(&self) -> Rational {
        self.pieces[self.pieces.len() - 1].hi
    }

    pub fn attains_lower(&self) -> bool {
        !self.pieces[0].lo_open
    }

    pub fn attains_upper(&self) -> bool {
        !self.pieces[self.pieces.len() - 1].hi_open
    }

    pub fn is_trivial(&self) -> bool {
        self.pieces.len() == 1 && self.pieces[0].is_point()
    }

    pub fn contains(&self, v: Rational) -> bool {
        self.pieces.iter().any(|p| p.contains(v))
    }

    /// Nearest member of the area to `v`: `v` itself when contained, else the
    /// nearer endpoint of the nearest piece, falling back to its closed
    /// endpoint or midpoint when that endpoint is open.
    pub fn clamp(&self, v: Rational) -> Rational {
        if self.contains(v) {
            return v;
        }
        let distance = |p: &IntervalPiece| {
            if v < p.lo {
                p.lo - v
            } else {
                v - p.hi
            }
        };
        let piece = self
            .pieces
            .iter()
            .min_by(|a, b| distance(a).cmp(&distance(b)))
            .expect("areas are non-empty");
        let (near, near_open, far, far_open) = if v < piece.lo {
            (piece.lo, piece.lo_open, piece.hi, piece.hi_open)
        } else {
            (piece.hi, piece.hi_open, piece.lo, piece.lo_open)
        };
        if !near_open {
            near
        } else if !far_open {
            far
        } else {
            midpoint(piece.lo, piece.hi)
        }
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.pieces.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for UncertaintyArea {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.to_strings();
        write!(f, "{}", parts.join(" ∪ "))
    }
}

fn normalize(mut pieces: Vec<IntervalPiece>) -> Vec<IntervalPiece> {
    pieces.sort_by(|a, b| a.lo.cmp(&b.lo).then_with(|| a.lo_open.cmp(&b.lo_open)));
    let mut out: Vec<IntervalPiece> = Vec::with_capacity(pieces.len());
    for p in pieces {
        if let Some(last) = out.last_mut() {
            let joins = match last.hi.cmp(&p.lo) {
                Ordering::Greater => true,
                Ordering::Equal => !(last.hi_open && p.lo_open),
                Ordering::Less => false,
            };
            if joins {
                match last.hi.cmp(&p.hi) {
                    Ordering::Less => {
                        last.hi = p.hi;
                        last.hi_open = p.hi_open;
                    }
                    Ordering::Equal => last.hi_open &= p.hi_open,
                    Ordering::Greater => {}
                }
                continue;
            }
        }
        out.push(p);
    }
    out
}

/// Per-element data: area, hidden true weight and query cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementData {
    pub area: UncertaintyArea,
    pub weight: Rational,
    pub cost: Rational,
}

impl ElementData {
    pub fn new(area: UncertaintyArea, weight: Rational, cost: Rational) -> Self {
        ElementData { area, weight, cost }
    }
}

/// A weighted uncertainty matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UncertainInstance {
    matroid: Matroid,
    data: Vec<ElementData>,
}

impl UncertainInstance {
    /// Builds an instance from per-name element data. Every matroid element
    /// must be given exactly once.
    pub fn new<S: AsRef<str>>(
        matroid: Matroid,
        elements: impl IntoIterator<Item = (S, ElementData)>,
    ) -> Result<Self> {
        let mut slots: Vec<Option<ElementData>> = vec![None; matroid.len()];
        for (name, d) in elements {
            let name = name.as_ref();
            let e = matroid.id(name)?;
            if slots[e.index()].is_some() {
                return Err(Error::field(
                    format!("element {name:?}"),
                    "duplicate element id",
                ));
            }
            validate(name, &d)?;
            slots[e.index()] = Some(d);
        }
        let data = slots
            .into_iter()
            .enumerate()
            .map(|(i, d)| {
                d.ok_or_else(|| {
                    Error::field(
                        format!("element {:?}", matroid.names()[i]),
                        "missing area, weight and cost",
                    )
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(UncertainInstance { matroid, data })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn ground(&self) -> &ElementSet {
        self.matroid.ground_set()
    }

    pub fn name(&self, e: ElementId) -> &str {
        self.matroid.name(e)
    }

    pub fn data(&self, e: ElementId) -> &ElementData {
        &self.data[e.index()]
    }

    pub fn area(&self, e: ElementId) -> &UncertaintyArea {
        &self.data[e.index()].area
    }

    pub fn weight(&self, e: ElementId) -> Rational {
        self.data[e.index()].weight
    }

    pub fn cost(&self, e: ElementId) -> Rational {
        self.data[e.index()].cost
    }

    pub fn lower(&self, e: ElementId) -> Rational {
        self.area(e).lower()
    }

    pub fn upper(&self, e: ElementId) -> Rational {
        self.area(e).upper()
    }

    pub fn check(&self, e: ElementId) -> Result<()> {
        if e.index() < self.data.len() {
            Ok(())
        } else {
            Err(Error::UnknownElement(e.to_string()))
        }
    }

    pub fn lower_limit(&self, e: ElementId) -> Result<Rational> {
        self.check(e)?;
        Ok(self.lower(e))
    }

    pub fn upper_limit(&self, e: ElementId) -> Result<Rational> {
        self.check(e)?;
        Ok(self.upper(e))
    }

    pub fn is_trivial(&self, e: ElementId) -> bool {
        self.area(e).is_trivial()
    }

    pub fn is_extreme_low(&self, e: ElementId) -> bool {
        self.weight(e) == self.lower(e)
    }

    pub fn is_extreme_high(&self, e: ElementId) -> bool {
        self.weight(e) == self.upper(e)
    }

    pub fn lower_after(&self, q: &ElementSet, e: ElementId) -> Rational {
        if q.contains(&e) {
            self.weight(e)
        } else {
            self.lower(e)
        }
    }

    pub fn upper_after(&self, q: &ElementSet, e: ElementId) -> Rational {
        if q.contains(&e) {
            self.weight(e)
        } else {
            self.upper(e)
        }
    }

    /// `(L_e(Q), U_e(Q))`.
    pub fn limits_after(&self, q: &ElementSet, e: ElementId) -> Result<(Rational, Rational)> {
        self.check(e)?;
        Ok((self.lower_after(q, e), self.upper_after(q, e)))
    }

    pub fn cost_of(&self, s: &ElementSet) -> Rational {
        s.iter().map(|&e| self.cost(e)).sum()
    }

    pub fn weight_of(&self, s: &ElementSet) -> Rational {
        s.iter().map(|&e| self.weight(e)).sum()
    }

    pub fn query_set(&self, s: ElementSet) -> QuerySet {
        QuerySet {
            total_cost: self.cost_of(&s),
            elements: s,
        }
    }

    pub fn is_unit_cost(&self) -> bool {
        self.data
            .iter()
            .all(|d| d.cost == Rational::from_integer(1))
    }

    /// Same areas and costs with the hidden weights replaced.
    pub fn with_weights(&self, weight: impl Fn(ElementId) -> Rational) -> Result<Self> {
        let mut out = self.clone();
        for (i, d) in out.data.iter_mut().enumerate() {
            d.weight = weight(ElementId(i as u32));
            validate(self.matroid.name(ElementId(i as u32)), d)?;
        }
        Ok(out)
    }

    /// Same instance with every element of `s` made trivial at its weight.
    pub fn with_trivialized(&self, s: &ElementSet) -> Self {
        let mut out = self.clone();
        for &e in s {
            let d = &mut out.data[e.index()];
            d.area = UncertaintyArea::point(d.weight);
        }
        out
    }

    pub fn with_unit_costs(&self) -> Self {
        let mut out = self.clone();
        for d in &mut out.data {
            d.cost = Rational::from_integer(1);
        }
        out
    }

    /// A greedy minimum-weight basis under the true weights.
    pub fn greedy_mwb(&self) -> ElementSet {
        self.matroid.greedy_mwb(|e| self.weight(e))
    }

    /// Fails unless `b` is a basis whose true weight equals the greedy optimum.
    pub fn require_mwb(&self, b: &ElementSet) -> Result<()> {
        self.matroid.require_basis(b)?;
        let best = self.weight_of(&self.greedy_mwb());
        if self.weight_of(b) != best {
            return Err(Error::contract(format!(
                "basis {{{}}} has weight {} but the minimum is {}",
                self.matroid.names_of(b).join(","),
                format_rational(&self.weight_of(b)),
                format_rational(&best)
            )));
        }
        Ok(())
    }
}

fn validate(name: &str, d: &ElementData) -> Result<()> {
    if !d.area.contains(d.weight) {
        return Err(Error::field(
            format!("element {name:?}"),
            format!(
                "weight {} not contained in area {}",
                format_rational(&d.weight),
                d.area
            ),
        ));
    }
    if d.cost < Rational::from_integer(0) {
        return Err(Error::field(
            format!("element {name:?}"),
            format!("negative cost {}", format_rational(&d.cost)),
        ));
    }
    Ok(())
}

/// A set of queried elements with its total cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuerySet {
    pub elements: ElementSet,
    pub total_cost: Rational,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::{frac, int};

    fn area(pieces: &[&str]) -> UncertaintyArea {
        UncertaintyArea::parse_pieces(pieces).unwrap()
    }

    #[test]
    fn limits_of_areas() {
        let two = area(&["{0}", "{1}"]);
        assert_eq!((two.lower(), two.upper()), (int(0), int(1)));
        let half = area(&["(1,2]"]);
        assert_eq!((half.lower(), half.upper()), (int(1), int(2)));
        let pt = area(&["[5,5]"]);
        assert_eq!((pt.lower(), pt.upper()), (int(5), int(5)));
        assert!(pt.is_trivial());
    }

    #[test]
    fn membership() {
        assert!(!area(&["(0,1)"]).contains(int(0)));
        assert!(area(&["[0,1]"]).contains(int(0)));
        assert!(!area(&["{0}", "{1}"]).contains(frac(1, 2)));
        assert!(area(&["{0}", "{1}"]).contains(int(1)));
    }

    #[test]
    fn rejects_bad_pieces() {
        assert!(IntervalPiece::parse("[2,1]").is_err());
        assert!(IntervalPiece::parse("(1,1]").is_err());
        assert!(IntervalPiece::parse("[0,inf)").is_err());
        assert!(matches!(
            IntervalPiece::parse("[0,inf)"),
            Err(Error::Unbounded(_))
        ));
        assert!(IntervalPiece::parse("0,1").is_err());
        assert!(UncertaintyArea::new(vec![]).is_err());
    }

    #[test]
    fn normalization_merges_and_sorts() {
        let a = area(&["[2,3]", "[0,1]", "[1,2)"]);
        assert_eq!(a.to_strings(), vec!["[0,3]"]);
        let b = area(&["(0,1)", "(1,2)"]);
        assert_eq!(b.pieces().len(), 2);
        let c = area(&["(0,1)", "{1}"]);
        assert_eq!(c.to_strings(), vec!["(0,1]"]);
        let d = area(&["[0,5]", "(1,2)"]);
        assert_eq!(d.to_strings(), vec!["[0,5]"]);
        let again = UncertaintyArea::new(a.pieces().to_vec()).unwrap();
        assert_eq!(again, a);
    }

    #[test]
    fn clamp_prefers_closed_endpoints() {
        let a = area(&["(0,1)", "[3,4)"]);
        assert_eq!(a.clamp(frac(1, 2)), frac(1, 2));
        assert_eq!(a.clamp(int(5)), int(3));
        assert_eq!(a.clamp(int(2)), frac(1, 2));
        assert_eq!(a.clamp(int(-1)), frac(1, 2));
        assert_eq!(area(&["[0,1)"]).clamp(int(2)), int(0));
    }

    #[test]
    fn extreme_flags() {
        let closed = fixtures::fig1_closed();
        for &e in closed.ground() {
            assert!(closed.is_extreme_low(e));
        }
        let f2 = fixtures::fig2();
        let e1 = f2.matroid().id("e1").unwrap();
        assert!(f2.is_extreme_high(e1));
        let m = Matroid::uniform(["x"], 1).unwrap();
        let inst = UncertainInstance::new(
            m,
            [("x", ElementData::new(area(&["[5,5]"]), int(5), int(1)))],
        )
        .unwrap();
        let x = ElementId(0);
        assert!(inst.is_trivial(x) && inst.is_extreme_low(x) && inst.is_extreme_high(x));
    }

    #[test]
    fn limits_after_queries() {
        let open = fixtures::fig1_open();
        let e1 = open.matroid().id("e1").unwrap();
        let q = ElementSet::from([e1]);
        assert_eq!(
            open.limits_after(&q, e1).unwrap(),
            (frac(1, 10), frac(1, 10))
        );
        assert_eq!(
            open.limits_after(&ElementSet::new(), e1).unwrap(),
            (int(0), int(1))
        );
        let f2 = fixtures::fig2();
        let e3 = f2.matroid().id("e3").unwrap();
        assert_eq!(
            f2.limits_after(&ElementSet::from([e3]), e3).unwrap(),
            (int(4), int(4))
        );
        assert!(f2.limits_after(&q, ElementId(99)).is_err());
    }

    #[test]
    fn instance_rejects_weight_outside_area() {
        let m = Matroid::uniform(["x"], 1).unwrap();
        let err = UncertainInstance::new(
            m,
            [("x", ElementData::new(area(&["(0,1)"]), int(0), int(1)))],
        );
        assert!(err
            .unwrap_err()
            .to_string()
            .contains("not contained in area"));
    }

    #[test]
    fn instance_requires_every_element() {
        let m = Matroid::uniform(["x", "y"], 1).unwrap();
        let err = UncertainInstance::new(
            m,
            [("x", ElementData::new(area(&["[0,1]"]), int(0), int(1)))],
        );
        assert!(err.is_err());
    }
}
