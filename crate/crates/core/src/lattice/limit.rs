use std::collections::HashMap;
use std::sync::Arc;

use super::{FiniteLattice, LatticeError, LatticeHom};

/// The inverse limit of the truncation tower
/// `2^{0..depth} → 2^{0..depth-1} → … → 2^{0}`, built as the lattice of
/// compatible families.
#[derive(Clone, Debug)]
pub struct InverseLimit {
    depth: u32,
    lattice: Arc<FiniteLattice>,
    families: Vec<Vec<usize>>,
    levels: Vec<Arc<FiniteLattice>>,
    projections: Vec<LatticeHom>,
}

fn family_label(family: &[usize]) -> String {
    let parts: Vec<String> = family
        .iter()
        .map(|&m| {
            let members: Vec<String> = (0..usize::BITS)
                .filter(|i| m & (1 << i) != 0)
                .map(|i| i.to_string())
                .collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    format!("({})", parts.join(" "))
}

impl InverseLimit {
    pub fn new(depth: u32) -> Result<Self, LatticeError> {
        let levels: Vec<Arc<FiniteLattice>> = (0..=depth)
            .map(|k| FiniteLattice::power_set(k).map(Arc::new))
            .collect::<Result<_, _>>()?;

        // Extend compatible families one level at a time, keeping every
        // candidate whose truncation matches the previous component.
        let mut families: Vec<Vec<usize>> = (0..levels[0].len()).map(|s| vec![s]).collect();
        for k in 1..=depth as usize {
            let keep = (1usize << k) - 1;
            let mut next = Vec::new();
            for fam in &families {
                for cand in levels[k].elements() {
                    if cand & keep == fam[k - 1] {
                        let mut ext = fam.clone();
                        ext.push(cand);
                        next.push(ext);
                    }
                }
            }
            families = next;
        }

        let index: HashMap<Vec<usize>, usize> = families
            .iter()
            .enumerate()
            .map(|(i, f)| (f.clone(), i))
            .collect();
        let combine = |a: usize, b: usize, op: fn(usize, usize) -> usize| {
            let fam: Vec<usize> = families[a]
                .iter()
                .zip(&families[b])
                .map(|(&x, &y)| op(x, y))
                .collect();
            index[&fam]
        };
        let labels = families.iter().map(|f| family_label(f)).collect();
        let lattice = FiniteLattice::from_operations(
            labels,
            |a, b| families[a].iter().zip(&families[b]).all(|(&x, &y)| x & !y == 0),
            |a, b| combine(a, b, |x, y| x | y),
            |a, b| combine(a, b, |x, y| x & y),
        )?;
        let lattice = Arc::new(lattice);
        let projections = (0..=depth as usize)
            .map(|k| {
                LatticeHom::from_fn(lattice.clone(), levels[k].clone(), |x| families[x][k])
            })
            .collect::<Result<_, _>>()?;
        Ok(InverseLimit {
            depth,
            lattice,
            families,
            levels,
            projections,
        })
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn lattice(&self) -> &Arc<FiniteLattice> {
        &self.lattice
    }

    /// Components of an element, level 0 first, as subset bitmasks.
    pub fn family(&self, x: usize) -> &[usize] {
        &self.families[x]
    }

    /// Projection onto level `k`.
    pub fn projection(&self, k: u32) -> &LatticeHom {
        &self.projections[k as usize]
    }

    pub fn projections(&self) -> &[LatticeHom] {
        &self.projections
    }

    pub fn level(&self, k: u32) -> &Arc<FiniteLattice> {
        &self.levels[k as usize]
    }

    /// The map sending a compatible family to its top component; the
    /// candidate isomorphism onto `2^{0..depth}`.
    pub fn top_component(&self) -> LatticeHom {
        self.projections[self.depth as usize].clone()
    }

    /// `truncation(k+1) ∘ proj_{k+1} = proj_k` for every level.
    pub fn tower_commutes(&self) -> Result<bool, LatticeError> {
        for k in 1..=self.depth {
            let down = LatticeHom::truncation(k)?;
            let via = down.compose(self.projection(k))?;
            if via.mapping() != self.projection(k - 1).mapping() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The compatible family `(S ∩ {0..k})_k` of a subset `S ⊆ {0..depth}`.
    pub fn family_of(&self, subset_mask: usize) -> Vec<usize> {
        (0..=self.depth as usize)
            .map(|k| subset_mask & ((1usize << (k + 1)) - 1))
            .collect()
    }
}

/// Free-function form: the limit lattice with its projections.
pub fn inverse_limit(depth: u32) -> Result<(Arc<FiniteLattice>, Vec<LatticeHom>), LatticeError> {
    let lim = InverseLimit::new(depth)?;
    Ok((lim.lattice.clone(), lim.projections.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_zero_is_two_element() {
        let lim = InverseLimit::new(0).unwrap();
        assert_eq!(lim.lattice().len(), 2);
        assert!(lim.top_component().is_isomorphism());
    }

    #[test]
    fn depth_three_matches_subsets() {
        let lim = InverseLimit::new(3).unwrap();
        assert_eq!(lim.lattice().len(), 16);
        // every subset of {0..3} appears exactly once, as its truncation family
        for s in 0..16usize {
            let fam = lim.family_of(s);
            let hits = lim
                .lattice()
                .elements()
                .filter(|&x| lim.family(x) == fam.as_slice())
                .count();
            assert_eq!(hits, 1, "subset mask {s}");
        }
        assert!(lim.top_component().is_isomorphism());
        lim.lattice().check_laws().unwrap();
    }

    #[test]
    fn projections_are_homs_and_commute() {
        let lim = InverseLimit::new(4).unwrap();
        assert!(lim.projections().iter().all(LatticeHom::check_hom));
        assert!(lim.tower_commutes().unwrap());
    }
}
