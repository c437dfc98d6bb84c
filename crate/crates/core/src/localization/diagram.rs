use std::collections::HashMap;
use std::sync::Arc;

use serde_json::{json, Value};

use super::{CategoryId, LocalElement, LocalizationError, Localizer};
use crate::class::{certainly_nonzero, normalize, ClassExpr, Generator, NormalForm, Tri};
use crate::lattice::{FinCofSet, FiniteLattice, InverseLimit, LatticeHom};

/// Outcome of checking `L_x ∘ L_y = L_x` on a batch of samples.
#[derive(Clone, Debug)]
pub struct ComposeReport {
    pub x: CategoryId,
    pub y: CategoryId,
    pub order: Tri,
    pub checked: usize,
    pub skipped: Vec<String>,
    pub failures: Vec<String>,
}

impl ComposeReport {
    pub fn verdict(&self) -> Tri {
        if self.order.is_fails() {
            return Tri::fails([format!("⟨{}⟩ ≰ ⟨{}⟩", self.x, self.y)])
                .with(self.order.provenance().to_vec());
        }
        if self.order.is_open() {
            return Tri::open([format!("⟨{}⟩ ≤ ⟨{}⟩ is undecided", self.x, self.y)]);
        }
        if let Some(first) = self.failures.first() {
            Tri::fails([first.clone()])
        } else if self.checked == 0 {
            Tri::open(["no sample could be decided in both models"])
        } else {
            Tri::holds([format!(
                "⟨L_{} L_{} X⟩ = ⟨L_{} X⟩ on {} samples (recomputed)",
                self.x, self.y, self.x, self.checked
            )])
        }
    }
}

/// For `⟨x⟩ ≤ ⟨y⟩`, checks that localizing a sample at `y` and then at `x`
/// gives the same class as localizing at `x` directly.
pub fn check_compose(
    loc: &Localizer,
    x: &ClassExpr,
    y: &ClassExpr,
    samples: &[ClassExpr],
) -> Result<ComposeReport, LocalizationError> {
    let unregistered = || LocalizationError::UnregisteredPair(x.to_string(), y.to_string());
    let cx = CategoryId::for_expr(x).ok_or_else(unregistered)?;
    let cy = CategoryId::for_expr(y).ok_or_else(unregistered)?;
    let order = loc.ambient().leq(x, y);
    let mut report = ComposeReport {
        x: cx,
        y: cy,
        order,
        checked: 0,
        skipped: Vec::new(),
        failures: Vec::new(),
    };
    for s in samples {
        let via_y = loc.localize(cy, s);
        let Some(rep) = loc.representative(cy, &via_y) else {
            report.skipped.push(format!("{s}: {via_y}"));
            continue;
        };
        let composed = loc.localize(cx, &rep);
        let direct = loc.localize(cx, s);
        if composed.is_indeterminate() || direct.is_indeterminate() {
            report.skipped.push(format!("{s}: undecided in {cx}"));
            continue;
        }
        report.checked += 1;
        if !same_image(&composed, &direct) {
            report.failures.push(format!(
                "{s}: through {cy} ({rep}) gives {composed}, directly {direct}"
            ));
        }
    }
    Ok(report)
}

fn same_image(a: &LocalElement, b: &LocalElement) -> bool {
    match (a, b) {
        (
            LocalElement::Quotient { harmonic: ha, .. },
            LocalElement::Quotient { harmonic: hb, .. },
        ) => ha == hb,
        _ => a == b,
    }
}

/// Result of the harmonic / `E(n)` / inverse-limit consistency check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramReport {
    pub depth: u32,
    pub checked: usize,
    pub mismatches: Vec<String>,
    pub tower_commutes: bool,
    pub top_component_iso: bool,
}

impl DiagramReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty() && self.tower_commutes && self.top_component_iso
    }

    pub fn to_json(&self) -> Value {
        json!({
            "depth": self.depth,
            "checked": self.checked,
            "mismatches": self.mismatches,
            "tower_commutes": self.tower_commutes,
            "top_component_iso": self.top_component_iso,
            "ok": self.ok(),
        })
    }
}

fn mask_of(set: &FinCofSet, n: u32) -> usize {
    set.truncate(n).iter().map(|&i| 1usize << i).sum()
}

/// Checks that truncating the harmonic image agrees with the `E(n)` image,
/// that consecutive `E(n)` images are related by the tower map, and that
/// the inverse limit of the tower is `2^{0..depth}`.
pub fn realize_diagram_check(
    loc: &Localizer,
    depth: u32,
) -> Result<DiagramReport, LocalizationError> {
    let mut samples = Vec::new();
    for i in 0..=depth {
        samples.extend([
            Generator::K(i),
            Generator::T(i),
            Generator::F(i),
            Generator::E(i),
        ]);
    }
    let towers: Vec<LatticeHom> = (1..=depth)
        .map(LatticeHom::truncation)
        .collect::<Result<_, _>>()?;
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for g in samples {
        let e = ClassExpr::gen(g);
        let LocalElement::Subset(h) = loc.localize(CategoryId::Harmonic, &e) else {
            mismatches.push(format!("{g}: no harmonic image"));
            continue;
        };
        let mut prev: Option<usize> = None;
        for n in 0..=depth {
            checked += 1;
            let LocalElement::Subset(en) = loc.localize(CategoryId::En(n), &e) else {
                mismatches.push(format!("{g}: no E({n}) image"));
                break;
            };
            let m = mask_of(&en, n);
            if m != mask_of(&h, n) {
                mismatches.push(format!("{g}: E({n}) image {en} ≠ harmonic image {h} ∩ {{0..{n}}}"));
            }
            if let Some(p) = prev {
                if towers[n as usize - 1].apply(m) != p {
                    mismatches.push(format!("{g}: tower map E({n}) → E({}) disagrees", n - 1));
                }
            }
            prev = Some(m);
        }
    }
    let lim = InverseLimit::new(depth)?;
    Ok(DiagramReport {
        depth,
        checked,
        mismatches,
        tower_commutes: lim.tower_commutes()?,
        top_component_iso: lim.top_component().is_isomorphism(),
    })
}

/// A Bousfield lattice recomputed from representative classes: two classes
/// are identified when they are annihilated by the same test objects.
#[derive(Clone, Debug)]
pub struct BuiltLattice {
    pub category: CategoryId,
    pub lattice: Arc<FiniteLattice>,
    pub representatives: Vec<ClassExpr>,
    /// The comparison map onto the category's lattice model.
    pub model_map: LatticeHom,
    /// Elements idempotent under smash.
    pub distributive: Vec<usize>,
    /// Complemented elements of the distributive part.
    pub boolean: Vec<usize>,
    pub dropped: Vec<String>,
}

impl BuiltLattice {
    pub fn model_map_is_iso(&self) -> bool {
        self.model_map.is_isomorphism()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "category": self.category,
            "size": self.lattice.len(),
            "dl_size": self.distributive.len(),
            "ba_size": self.boolean.len(),
            "model_map_iso": self.model_map_is_iso(),
            "elements": self.lattice.labels(),
            "covers": self.lattice.covers(),
        })
    }
}

fn k_joins(n: u32) -> impl Iterator<Item = ClassExpr> {
    (0..1usize << (n + 1)).map(move |mask| {
        let set = FinCofSet::finite((0..=n).filter(|i| mask & (1 << i) != 0));
        NormalForm::k_join(set).to_expr()
    })
}

fn annihilator(
    x: &ClassExpr,
    tests: &[Generator],
    context: Option<Generator>,
) -> Result<Vec<bool>, String> {
    tests
        .iter()
        .map(|&w| {
            let mut e = ClassExpr::smash(w, x.clone());
            if let Some(c) = context {
                e = ClassExpr::smash(e, c);
            }
            let nf = normalize(&e);
            if nf.is_zero() {
                Ok(true)
            } else if certainly_nonzero(&nf).is_some() {
                Ok(false)
            } else {
                Err(format!("{x}: {w} ^ {x} undecided"))
            }
        })
        .collect()
}

/// Recomputes a finite Bousfield lattice from representatives and compares
/// it with the category's lattice model.
pub fn bousfield_lattice(
    loc: &Localizer,
    cat: CategoryId,
    truncation: Option<u32>,
) -> Result<BuiltLattice, LocalizationError> {
    use Generator::*;
    let small = |n: u32| -> Vec<ClassExpr> {
        (0..=n + 1)
            .flat_map(|i| [T(i), F(i), E(i)])
            .map(ClassExpr::gen)
            .collect()
    };
    let (reps, tests, context): (Vec<ClassExpr>, Vec<Generator>, Option<Generator>) = match cat {
        CategoryId::En(n) => (
            k_joins(n).chain(small(n)).collect(),
            (0..=n).map(K).chain([Sphere, HFp, I]).collect(),
            Some(E(n)),
        ),
        CategoryId::Harmonic => {
            let d = truncation.ok_or(LocalizationError::MissingTruncation(cat))?;
            (
                k_joins(d).chain(small(d)).collect(),
                (0..=d).map(K).collect(),
                None,
            )
        }
        CategoryId::Kn(n) => (
            [Zero, Sphere, K(n), T(n), F(n), K(n + 1), E(n), HFp, I]
                .map(ClassExpr::gen)
                .into(),
            vec![Sphere, K(n), HFp, I],
            Some(K(n)),
        ),
        CategoryId::HFpLocal => (
            [Zero, Sphere, HFp, K(0), K(1), F(1), I].map(ClassExpr::gen).into(),
            vec![Sphere, HFp, I, K(1)],
            Some(HFp),
        ),
        CategoryId::ILocal => (
            [Zero, Sphere, I, HFp, K(1), F(1), T(1)].map(ClassExpr::gen).into(),
            vec![Sphere, I, HFp, F(1)],
            Some(I),
        ),
        CategoryId::Ambient | CategoryId::BPLocal => {
            return Err(LocalizationError::NoFiniteModel(cat))
        }
    };

    let mut classes: Vec<(ClassExpr, Vec<bool>)> = Vec::new();
    let mut seen: HashMap<Vec<bool>, usize> = HashMap::new();
    let mut dropped = Vec::new();
    for r in reps {
        match annihilator(&r, &tests, context) {
            Ok(ann) => {
                if !seen.contains_key(&ann) {
                    seen.insert(ann.clone(), classes.len());
                    classes.push((r, ann));
                }
            }
            Err(why) => dropped.push(why),
        }
    }
    let labels = classes.iter().map(|(r, _)| r.to_string()).collect();
    // Larger annihilator means smaller class.
    let lattice = Arc::new(FiniteLattice::from_order(labels, |a, b| {
        classes[b]
            .1
            .iter()
            .zip(&classes[a].1)
            .all(|(&kb, &ka)| !kb || ka)
    })?);

    let target = Arc::new(loc.lattice_of(cat, truncation)?);
    let mapping = classes
        .iter()
        .map(|(r, _)| loc.element_index(cat, &loc.localize(cat, r), truncation))
        .collect::<Result<Vec<_>, _>>()?;
    let model_map = LatticeHom::new(lattice.clone(), target, mapping)?;

    let class_of = |x: &ClassExpr| -> Option<usize> {
        annihilator(x, &tests, context)
            .ok()
            .and_then(|a| seen.get(&a).copied())
    };
    let distributive: Vec<usize> = (0..classes.len())
        .filter(|&i| {
            let r = &classes[i].0;
            class_of(&ClassExpr::smash(r.clone(), r.clone())) == Some(i)
        })
        .collect();
    let boolean = distributive
        .iter()
        .copied()
        .filter(|&x| {
            distributive.iter().any(|&y| {
                lattice.join(x, y) == lattice.top() && lattice.meet(x, y) == lattice.bottom()
            })
        })
        .collect();

    Ok(BuiltLattice {
        category: cat,
        lattice,
        representatives: classes.into_iter().map(|(r, _)| r).collect(),
        model_map,
        distributive,
        boolean,
        dropped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagram_commutes() {
        let loc = Localizer::default();
        for d in 0..5 {
            let r = realize_diagram_check(&loc, d).unwrap();
            assert!(r.ok(), "{r:?}");
        }
    }

    #[test]
    fn built_lattices_match_models() {
        let loc = Localizer::default();
        for n in 0..4 {
            let b = bousfield_lattice(&loc, CategoryId::En(n), None).unwrap();
            assert_eq!(b.lattice.len(), 1 << (n + 1));
            assert!(b.model_map_is_iso());
            assert_eq!(b.distributive.len(), b.lattice.len());
            assert_eq!(b.boolean.len(), b.lattice.len());
        }
        for cat in [CategoryId::Kn(2), CategoryId::HFpLocal, CategoryId::ILocal] {
            let b = bousfield_lattice(&loc, cat, None).unwrap();
            assert_eq!(b.lattice.len(), 2, "{cat}");
            assert!(b.model_map_is_iso());
        }
        let h = bousfield_lattice(&loc, CategoryId::Harmonic, Some(3)).unwrap();
        assert_eq!(h.lattice.len(), 16);
        assert!(h.model_map_is_iso());
    }

    #[test]
    fn compose_examples() {
        use Generator::*;
        let loc = Localizer::default();
        let samples: Vec<ClassExpr> = [Sphere, K(0), K(2), T(1), F(2), E(1), HFp, I, Zero]
            .map(ClassExpr::gen)
            .into();
        let r = check_compose(&loc, &ClassExpr::gen(E(2)), &ClassExpr::gen(Q), &samples).unwrap();
        assert!(r.verdict().is_holds(), "{:?}", r.failures);
        let r = check_compose(&loc, &ClassExpr::gen(K(1)), &ClassExpr::gen(E(3)), &samples)
            .unwrap();
        assert!(r.verdict().is_holds(), "{:?}", r.failures);
        let r = check_compose(&loc, &ClassExpr::gen(I), &ClassExpr::gen(HFp), &samples).unwrap();
        assert!(r.verdict().is_fails());
        let r = check_compose(&loc, &ClassExpr::gen(Q), &ClassExpr::gen(K(1)), &samples).unwrap();
        assert!(r.verdict().is_fails());
        assert!(matches!(
            check_compose(&loc, &ClassExpr::gen(F(1)), &ClassExpr::gen(Q), &samples),
            Err(LocalizationError::UnregisteredPair(..))
        ));
    }
}
