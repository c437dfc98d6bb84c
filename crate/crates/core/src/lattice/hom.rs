use std::sync::Arc;

use super::{FiniteLattice, LatticeError};

/// An element-wise map between two finite lattices.
#[derive(Clone, Debug)]
pub struct LatticeHom {
    source: Arc<FiniteLattice>,
    target: Arc<FiniteLattice>,
    mapping: Vec<usize>,
}

fn same_lattice(a: &Arc<FiniteLattice>, b: &Arc<FiniteLattice>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl LatticeHom {
    pub fn new(
        source: Arc<FiniteLattice>,
        target: Arc<FiniteLattice>,
        mapping: Vec<usize>,
    ) -> Result<Self, LatticeError> {
        if mapping.len() != source.len() {
            return Err(LatticeError::Mismatch(format!(
                "mapping has {} entries for a source of {}",
                mapping.len(),
                source.len()
            )));
        }
        if let Some(&bad) = mapping.iter().find(|&&y| y >= target.len()) {
            return Err(LatticeError::UnknownElement(bad.to_string()));
        }
        Ok(LatticeHom {
            source,
            target,
            mapping,
        })
    }

    pub fn from_fn<F>(
        source: Arc<FiniteLattice>,
        target: Arc<FiniteLattice>,
        f: F,
    ) -> Result<Self, LatticeError>
    where
        F: Fn(usize) -> usize,
    {
        let mapping = source.elements().map(f).collect();
        Self::new(source, target, mapping)
    }

    pub fn identity(lat: Arc<FiniteLattice>) -> Self {
        let mapping = lat.elements().collect();
        LatticeHom {
            source: lat.clone(),
            target: lat,
            mapping,
        }
    }

    /// `S ↦ S ∩ {0, …, n-1}` from the subsets of `{0..n}` to those of
    /// `{0..n-1}`; index `n` is sent to the bottom.
    pub fn truncation(n: u32) -> Result<Self, LatticeError> {
        if n == 0 {
            return Err(LatticeError::Mismatch("no truncation below {0}".into()));
        }
        let source = Arc::new(FiniteLattice::power_set(n)?);
        let target = Arc::new(FiniteLattice::power_set(n - 1)?);
        let keep = (1usize << n) - 1;
        Self::from_fn(source, target, |s| s & keep)
    }

    pub fn source(&self) -> &Arc<FiniteLattice> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteLattice> {
        &self.target
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn apply(&self, x: usize) -> usize {
        self.mapping[x]
    }

    /// Preserves binary joins, the bottom and the top.
    pub fn check_hom(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        if self.apply(s.bottom()) != t.bottom() || self.apply(s.top()) != t.top() {
            return false;
        }
        s.elements().all(|a| {
            s.elements()
                .all(|b| self.apply(s.join(a, b)) == t.join(self.apply(a), self.apply(b)))
        })
    }

    pub fn preserves_meets(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        s.elements().all(|a| {
            s.elements()
                .all(|b| self.apply(s.meet(a, b)) == t.meet(self.apply(a), self.apply(b)))
        })
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.len()];
        for &y in &self.mapping {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// A bijection preserving joins, meets and both bounds.
    pub fn is_isomorphism(&self) -> bool {
        self.source.len() == self.target.len()
            && self.is_surjective()
            && self.check_hom()
            && self.preserves_meets()
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &LatticeHom) -> Result<LatticeHom, LatticeError> {
        if !same_lattice(&inner.target, &self.source) {
            return Err(LatticeError::Mismatch(
                "target of the inner map is not the source of the outer map".into(),
            ));
        }
        let mapping = inner.mapping.iter().map(|&x| self.mapping[x]).collect();
        Ok(LatticeHom {
            source: inner.source.clone(),
            target: self.target.clone(),
            mapping,
        })
    }

    /// Same source, target and element table.
    pub fn same_as(&self, other: &LatticeHom) -> bool {
        same_lattice(&self.source, &other.source)
            && same_lattice(&self.target, &other.target)
            && self.mapping == other.mapping
    }
}

/// Free-function form of [`LatticeHom::compose`]: `f ∘ g`.
pub fn compose_homs(f: &LatticeHom, g: &LatticeHom) -> Result<LatticeHom, LatticeError> {
    f.compose(g)
}
