//! Matroids given by an independence oracle.
//!
//! [`Matroid`] owns the ground set and one of four concrete backends. The
//! derived operations (rank, span, fundamental circuits, cocircuit
//! complements, greedy bases) are provided methods on [`IndependenceOracle`],
//! so they work unchanged on [`Minor`] views.

mod minor;
mod union_find;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

pub use minor::{Minor, MinorState};
pub(crate) use union_find::UnionFind;

/// Position of an element in the lexicographically sorted list of element
/// names. The order of ids is the deterministic tie-break order everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub u32);

impl ElementId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

pub type ElementSet = BTreeSet<ElementId>;

pub trait IndependenceOracle {
    fn ground_set(&self) -> &ElementSet;

    /// Independence test for a set already known to lie in the ground set.
    fn independent(&self, s: &ElementSet) -> bool;

    fn element_name(&self, e: ElementId) -> String {
        e.to_string()
    }

    fn check_subset(&self, s: &ElementSet) -> Result<()> {
        match s.iter().find(|e| !self.ground_set().contains(e)) {
            Some(&e) => Err(Error::UnknownElement(self.element_name(e))),
            None => Ok(()),
        }
    }

    fn is_independent(&self, s: &ElementSet) -> Result<bool> {
        self.check_subset(s)?;
        Ok(self.independent(s))
    }

    /// A maximal independent subset of `s`, built greedily in id order.
    fn max_independent_subset(&self, s: &ElementSet) -> ElementSet {
        let mut acc = ElementSet::new();
        for &e in s {
            acc.insert(e);
            if !self.independent(&acc) {
                acc.remove(&e);
            }
        }
        acc
    }

    fn rank(&self, s: &ElementSet) -> Result<usize> {
        self.check_subset(s)?;
        Ok(self.max_independent_subset(s).len())
    }

    fn full_rank(&self) -> usize {
        self.max_independent_subset(self.ground_set()).len()
    }

    fn span(&self, s: &ElementSet) -> Result<ElementSet> {
        self.check_subset(s)?;
        Ok(self.span_unchecked(s))
    }

    fn span_unchecked(&self, s: &ElementSet) -> ElementSet {
        let mut base = self.max_independent_subset(s);
        let mut out = s.clone();
        for &e in self.ground_set() {
            if s.contains(&e) {
                continue;
            }
            base.insert(e);
            if !self.independent(&base) {
                out.insert(e);
            }
            base.remove(&e);
        }
        out
    }

    fn is_basis(&self, b: &ElementSet) -> Result<bool> {
        self.check_subset(b)?;
        Ok(self.independent(b) && b.len() == self.full_rank())
    }

    fn require_basis(&self, b: &ElementSet) -> Result<()> {
        if self.is_basis(b)? {
            Ok(())
        } else {
            Err(Error::contract("set is not a basis"))
        }
    }

    /// The unique circuit in `b + e`, for a basis `b` and `e` outside it.
    fn fundamental_circuit(&self, b: &ElementSet, e: ElementId) -> Result<ElementSet> {
        self.require_basis(b)?;
        if !self.ground_set().contains(&e) {
            return Err(Error::UnknownElement(self.element_name(e)));
        }
        if b.contains(&e) {
            return Err(Error::contract(format!(
                "{} lies in the basis; it has no fundamental circuit",
                self.element_name(e)
            )));
        }
        Ok(self.circuit_unchecked(b, e))
    }

    fn circuit_unchecked(&self, b: &ElementSet, e: ElementId) -> ElementSet {
        let mut swapped = b.clone();
        swapped.insert(e);
        let mut circuit = ElementSet::from([e]);
        for &f in b {
            swapped.remove(&f);
            if self.independent(&swapped) {
                circuit.insert(f);
            }
            swapped.insert(f);
        }
        circuit
    }

    /// `E ∖ span(b − e)`: every element that can replace `e` in `b`.
    fn cocircuit_complement(&self, b: &ElementSet, e: ElementId) -> Result<ElementSet> {
        self.require_basis(b)?;
        if !b.contains(&e) {
            return Err(Error::contract(format!(
                "{} is not in the basis",
                self.element_name(e)
            )));
        }
        Ok(self.cocircuit_unchecked(b, e))
    }

    fn cocircuit_unchecked(&self, b: &ElementSet, e: ElementId) -> ElementSet {
        let mut rest = b.clone();
        rest.remove(&e);
        let spanned = self.span_unchecked(&rest);
        self.ground_set().difference(&spanned).copied().collect()
    }

    /// Greedy basis over elements sorted by `(key(e), e)`.
    fn greedy_by_key<K: Ord, F: Fn(ElementId) -> K>(&self, key: F) -> ElementSet
    where
        Self: Sized,
    {
        let mut order: Vec<ElementId> = self.ground_set().iter().copied().collect();
        order.sort_by_cached_key(|&e| (key(e), e));
        let mut basis = ElementSet::new();
        for e in order {
            basis.insert(e);
            if !self.independent(&basis) {
                basis.remove(&e);
            }
        }
        basis
    }

    /// Minimum-weight basis, ties processed in id order.
    fn greedy_mwb<F: Fn(ElementId) -> Rational>(&self, weight: F) -> ElementSet
    where
        Self: Sized,
    {
        self.greedy_by_key(weight)
    }
}

pub fn set_weight<F: Fn(ElementId) -> Rational>(s: &ElementSet, weight: F) -> Rational {
    s.iter().map(|&e| weight(e)).sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Backend {
    Graphic {
        vertex_count: usize,
        endpoints: Vec<(usize, usize)>,
    },
    Uniform {
        rank: usize,
    },
    Partition {
        block: Vec<usize>,
        capacity: Vec<usize>,
    },
    Explicit {
        bases: Vec<ElementSet>,
    },
}

/// An immutable matroid over named elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matroid {
    names: Vec<String>,
    index: BTreeMap<String, ElementId>,
    ground: ElementSet,
    backend: Backend,
}

/// Explicit backends are axiom-checked exhaustively up to this size.
pub const EXPLICIT_CHECK_LIMIT: usize = 12;

impl Matroid {
    /// Sorts `names` and returns, for each input position, its element id.
    fn with_names(names: Vec<String>) -> Result<(Self, Vec<ElementId>)> {
        let mut sorted = names.clone();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidMatroid(format!(
                "duplicate element id {:?}",
                w[0]
            )));
        }
        let index: BTreeMap<String, ElementId> = sorted
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), ElementId(i as u32)))
            .collect();
        let positions = names.iter().map(|n| index[n]).collect();
        let m = Matroid {
            ground: (0..sorted.len() as u32).map(ElementId).collect(),
            names: sorted,
            index,
            backend: Backend::Uniform { rank: 0 },
        };
        Ok((m, positions))
    }

    fn permute<T: Clone>(positions: &[ElementId], values: &[T]) -> Vec<T> {
        let mut out = values.to_vec();
        for (i, e) in positions.iter().enumerate() {
            out[e.index()] = values[i].clone();
        }
        out
    }

    /// Graphic matroid; parallel edges and self-loops are allowed.
    pub fn graphic<S: Into<String>>(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (S, usize, usize)>,
    ) -> Result<Self> {
        let (names, ends): (Vec<String>, Vec<(usize, usize)>) = edges
            .into_iter()
            .map(|(n, u, v)| (n.into(), (u, v)))
            .unzip();
        if let Some((i, _)) = ends
            .iter()
            .enumerate()
            .find(|(_, &(u, v))| u >= vertex_count || v >= vertex_count)
        {
            return Err(Error::InvalidMatroid(format!(
                "edge {:?} has an endpoint outside 0..{vertex_count}",
                names[i]
            )));
        }
        let (mut m, pos) = Self::with_names(names)?;
        m.backend = Backend::Graphic {
            vertex_count,
            endpoints: Self::permute(&pos, &ends),
        };
        Ok(m)
    }

    pub fn uniform<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        rank: usize,
    ) -> Result<Self> {
        let (mut m, _) = Self::with_names(names.into_iter().map(Into::into).collect())?;
        m.backend = Backend::Uniform { rank };
        Ok(m)
    }

    /// Partition matroid: each element names its block, each block has a capacity.
    pub fn partition<S: Into<String>>(
        items: impl IntoIterator<Item = (S, usize)>,
        capacity: Vec<usize>,
    ) -> Result<Self> {
        let (names, blocks): (Vec<String>, Vec<usize>) =
            items.into_iter().map(|(n, b)| (n.into(), b)).unzip();
        if let Some(i) = blocks.iter().position(|&b| b >= capacity.len()) {
            return Err(Error::InvalidMatroid(format!(
                "element {:?} refers to block {} but only {} blocks exist",
                names[i],
                blocks[i],
                capacity.len()
            )));
        }
        let (mut m, pos) = Self::with_names(names)?;
        m.backend = Backend::Partition {
            block: Self::permute(&pos, &blocks),
            capacity,
        };
        Ok(m)
    }

    /// Matroid given by its list of bases.
    pub fn explicit<S: Into<String>, T: AsRef<str>>(
        names: impl IntoIterator<Item = S>,
        bases: &[Vec<T>],
    ) -> Result<Self> {
        let (mut m, _) = Self::with_names(names.into_iter().map(Into::into).collect())?;
        let mut listed = Vec::with_capacity(bases.len());
        for b in bases {
            let set = b
                .iter()
                .map(|n| m.id(n.as_ref()))
                .collect::<Result<ElementSet>>()
                .map_err(|e| Error::InvalidMatroid(format!("basis list: {e}")))?;
            if !listed.contains(&set) {
                listed.push(set);
            }
        }
        if listed.is_empty() {
            return Err(Error::InvalidMatroid(
                "explicit matroid needs at least one basis".into(),
            ));
        }
        if listed.iter().any(|b| b.len() != listed[0].len()) {
            return Err(Error::InvalidMatroid("bases differ in cardinality".into()));
        }
        if m.names.len() <= EXPLICIT_CHECK_LIMIT {
            check_basis_exchange(&listed)?;
        }
        m.backend = Backend::Explicit { bases: listed };
        Ok(m)
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn id(&self, name: &str) -> Result<ElementId> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn name(&self, e: ElementId) -> &str {
        &self.names[e.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<ElementSet> {
        names.iter().map(|n| self.id(n.as_ref())).collect()
    }

    pub fn names_of(&self, s: &ElementSet) -> Vec<String> {
        s.iter().map(|&e| self.name(e).to_string()).collect()
    }
}

/// For all bases `B1, B2` and `x ∈ B1 ∖ B2` some `y ∈ B2 ∖ B1` makes
/// `B1 − x + y` a listed basis. Together with non-emptiness this is
/// equivalent to the independence axioms.
fn check_basis_exchange(bases: &[ElementSet]) -> Result<()> {
    let known: BTreeSet<&ElementSet> = bases.iter().collect();
    for b1 in bases {
        for b2 in bases {
            for x in b1.difference(b2) {
                let ok = b2.difference(b1).any(|y| {
                    let mut c = b1.clone();
                    c.remove(x);
                    c.insert(*y);
                    known.contains(&c)
                });
                if !ok {
                    return Err(Error::InvalidMatroid(format!(
                        "basis exchange fails for element {x} between listed bases"
                    )));
                }
            }
        }
    }
    Ok(())
}

impl IndependenceOracle for Matroid {
    fn ground_set(&self) -> &ElementSet {
        &self.ground
    }

    fn element_name(&self, e: ElementId) -> String {
        self.names
            .get(e.index())
            .cloned()
            .unwrap_or_else(|| e.to_string())
    }

    fn independent(&self, s: &ElementSet) -> bool {
        match &self.backend {
            Backend::Graphic {
                vertex_count,
                endpoints,
            } => {
                let mut uf = UnionFind::new(*vertex_count);
                s.iter().all(|e| {
                    let (u, v) = endpoints[e.index()];
                    uf.union(u, v)
                })
            }
            Backend::Uniform { rank } => s.len() <= *rank,
            Backend::Partition { block, capacity } => {
                let mut used = vec![0usize; capacity.len()];
                s.iter().all(|e| {
                    let b = block[e.index()];
                    used[b] += 1;
                    used[b] <= capacity[b]
                })
            }
            Backend::Explicit { bases } => bases.iter().any(|b| s.is_subset(b)),
        }
    }
}
