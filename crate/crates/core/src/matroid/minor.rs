use crate::error::{Error, Result};

use super::{ElementId, ElementSet, IndependenceOracle};

/// Deleted and contracted element sets of a minor.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MinorState {
    pub deleted: ElementSet,
    pub contracted: ElementSet,
}

impl MinorState {
    pub fn new(deleted: ElementSet, contracted: ElementSet) -> Self {
        MinorState {
            deleted,
            contracted,
        }
    }

    pub fn union(&self, other: &MinorState) -> MinorState {
        MinorState {
            deleted: self.deleted.union(&other.deleted).copied().collect(),
            contracted: self.contracted.union(&other.contracted).copied().collect(),
        }
    }

    pub fn is_decided(&self, e: ElementId) -> bool {
        self.deleted.contains(&e) || self.contracted.contains(&e)
    }
}

/// The matroid obtained from `base` by deleting `D` and contracting `K`.
#[derive(Debug, Clone)]
pub struct Minor<'a, O: ?Sized> {
    base: &'a O,
    state: MinorState,
    ground: ElementSet,
}

impl<'a, O: IndependenceOracle + ?Sized> Minor<'a, O> {
    pub fn new(base: &'a O, state: MinorState) -> Result<Self> {
        base.check_subset(&state.deleted)?;
        base.check_subset(&state.contracted)?;
        if let Some(e) = state.deleted.intersection(&state.contracted).next() {
            return Err(Error::contract(format!(
                "{} is both deleted and contracted",
                base.element_name(*e)
            )));
        }
        if !base.independent(&state.contracted) {
            return Err(Error::contract("contracted set is dependent"));
        }
        let kept: ElementSet = base
            .ground_set()
            .difference(&state.deleted)
            .copied()
            .collect();
        if base.max_independent_subset(&kept).len() != base.full_rank() {
            return Err(Error::contract("deleted set lowers the rank"));
        }
        Ok(Self::new_unchecked(base, state))
    }

    pub(crate) fn new_unchecked(base: &'a O, state: MinorState) -> Self {
        let ground = base
            .ground_set()
            .iter()
            .filter(|e| !state.is_decided(**e))
            .copied()
            .collect();
        Minor {
            base,
            state,
            ground,
        }
    }

    pub fn state(&self) -> &MinorState {
        &self.state
    }

    pub fn base(&self) -> &'a O {
        self.base
    }
}

impl<O: IndependenceOracle + ?Sized> IndependenceOracle for Minor<'_, O> {
    fn ground_set(&self) -> &ElementSet {
        &self.ground
    }

    fn element_name(&self, e: ElementId) -> String {
        self.base.element_name(e)
    }

    fn independent(&self, s: &ElementSet) -> bool {
        let mut with_k = s.clone();
        with_k.extend(self.state.contracted.iter().copied());
        self.base.independent(&with_k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::matroid::Matroid;

    #[test]
    fn empty_minor_is_identity() {
        let inst = fixtures::fig2();
        let m = inst.matroid();
        let v = Minor::new(m, MinorState::default()).unwrap();
        assert_eq!(v.ground_set(), m.ground_set());
        assert_eq!(v.full_rank(), m.full_rank());
        let s = m.set_of(&["e1", "e2", "e5"]).unwrap();
        assert_eq!(v.is_independent(&s).unwrap(), m.is_independent(&s).unwrap());
    }

    #[test]
    fn contract_and_delete_in_fig2() {
        let inst = fixtures::fig2();
        let m = inst.matroid();
        let st = MinorState::new(m.set_of(&["e4"]).unwrap(), m.set_of(&["e2"]).unwrap());
        let v = Minor::new(m, st).unwrap();
        assert!(v.is_independent(&m.set_of(&["e1", "e5"]).unwrap()).unwrap());
        assert!(v.is_independent(&m.set_of(&["e4"]).unwrap()).is_err());
    }

    #[test]
    fn contracting_a_basis_leaves_rank_zero() {
        let inst = fixtures::fig2();
        let m = inst.matroid();
        let b = m.set_of(&["e1", "e2", "e5"]).unwrap();
        let v = Minor::new(m, MinorState::new(ElementSet::new(), b)).unwrap();
        assert_eq!(v.full_rank(), 0);
        for &e in v.ground_set() {
            assert!(!v.is_independent(&ElementSet::from([e])).unwrap());
        }
    }

    #[test]
    fn invalid_states_rejected() {
        let m = Matroid::graphic(3, [("a", 0, 1), ("b", 1, 2), ("c", 0, 2)]).unwrap();
        let all = m.ground_set().clone();
        assert!(Minor::new(&m, MinorState::new(ElementSet::new(), all)).is_err());
        let ab = m.set_of(&["a", "b"]).unwrap();
        assert!(Minor::new(&m, MinorState::new(ab.clone(), ElementSet::new())).is_err());
        let a = m.set_of(&["a"]).unwrap();
        assert!(Minor::new(&m, MinorState::new(a.clone(), a)).is_err());
    }
}
