use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use super::{CategoryId, LocalizationError};
use crate::class::{
    certainly_nonzero, normalize, support_bounds, Algebra, Assumptions, ClassExpr, Generator,
    NormalForm, Tri, TriValue,
};
use crate::lattice::{FinCofSet, FiniteLattice};

/// Shape of a category's Bousfield-lattice model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "n", rename_all = "kebab-case")]
pub enum LatticeKind {
    /// Normal forms in the ambient calculus; no finite model.
    SymbolicFragment,
    /// `2^ℕ` through supports.
    PowerSetFinCof,
    /// `2^{0..n}`.
    PowerSetFinite(u32),
    TwoElement,
    /// Only the harmonic quotient is modeled.
    QuotientOnly,
}

/// Cited facts about a category that verdicts are derived from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CategoryFacts {
    /// Whether `L: S → S` itself is a smashing localization.
    pub ambient_smashing: bool,
    pub ambient_smashing_reason: String,
    pub nonzero_compacts: bool,
    pub compacts_reason: String,
    /// Whether the smashing registry lists every smashing localization.
    pub registry_complete: bool,
    pub registry_reason: String,
    /// Whether each `l_n` is smashing on this category.
    pub l_n_smashing: TriValue,
    pub localizing_subcategories: String,
    /// What the lattice model rests on.
    pub lattice_citation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CategoryModel {
    pub id: CategoryId,
    pub lattice_kind: LatticeKind,
    pub zero_test: String,
    pub facts: CategoryFacts,
}

const NO_COMPACTS_NOT_SMASHING: &str = "the category has no nonzero compact objects while L S^0 ≠ 0, \
     and a localization is smashing iff it preserves compactness";

impl CategoryModel {
    pub fn of(id: CategoryId) -> CategoryModel {
        let facts = |smashing: bool,
                     smashing_reason: &str,
                     compacts: bool,
                     compacts_reason: &str,
                     complete: bool,
                     registry_reason: &str,
                     localizing: &str,
                     lattice: String| CategoryFacts {
            ambient_smashing: smashing,
            ambient_smashing_reason: smashing_reason.into(),
            nonzero_compacts: compacts,
            compacts_reason: compacts_reason.into(),
            registry_complete: complete,
            registry_reason: registry_reason.into(),
            l_n_smashing: TriValue::Holds,
            localizing_subcategories: localizing.into(),
            lattice_citation: lattice,
        };
        let (lattice_kind, zero_test, facts) = match id {
            CategoryId::Ambient => (
                LatticeKind::SymbolicFragment,
                "X = 0 iff its normal form is empty".to_string(),
                CategoryFacts {
                    l_n_smashing: TriValue::Holds,
                    ..facts(
                        true,
                        "the identity functor is smashing",
                        true,
                        "the finite spectra are the compact objects",
                        false,
                        "smashing localizations of spectra are not classified",
                        "not classified",
                        "BL(S) is modeled only through the smash-rule calculus".into(),
                    )
                },
            ),
            CategoryId::Harmonic => (
                LatticeKind::PowerSetFinCof,
                "LX = 0 iff X ∧ K(i) = 0 for every i".to_string(),
                facts(
                    false,
                    "harmonic localization is not smashing",
                    false,
                    "there are no nonzero compact objects in the harmonic category",
                    true,
                    "every smashing localization of H is 0, the identity, or some l_n^f",
                    "open whether every localizing subcategory is a Bousfield class",
                    "BL(H) ≅ 2^ℕ via ⟨X⟩ ↦ supp(X) = {i | X∧K(i) ≠ 0}".into(),
                ),
            ),
            CategoryId::En(n) => (
                LatticeKind::PowerSetFinite(n),
                format!("L_{n}X = 0 iff X ∧ K(i) = 0 for every i ≤ {n}"),
                facts(
                    true,
                    "L_n is smashing",
                    true,
                    "each L_nF(i) is compact in the E(n)-local category",
                    true,
                    "every smashing localization of L_n is 0 or L_i = L_i^f for some 0 ≤ i ≤ n",
                    "localizing subcategories correspond to subsets of {0..n}; each is a Bousfield class",
                    format!("BL(L_{n}) ≅ 2^{{0..{n}}} via f_{n}: ⟨X⟩ ↦ {{i ≤ {n} | X∧K(i) ≠ 0}}"),
                ),
            ),
            CategoryId::Kn(n) => (
                LatticeKind::TwoElement,
                format!("L_K({n})X = 0 iff X ∧ K({n}) = 0"),
                facts(
                    false,
                    "L_K(n)S^0 is not compact in the K(n)-local category, and a localization is \
                     smashing iff it preserves compactness",
                    true,
                    "L_K(n)F(n) is compact in the K(n)-local category",
                    true,
                    "there are exactly two smashing localizations on the K(n)-local category",
                    "there are no nonzero proper localizing subcategories",
                    format!("BL(K_{n}) = {{⟨0⟩, ⟨K({n})⟩}}: K({n}) is a skew field object"),
                ),
            ),
            CategoryId::HFpLocal => (
                LatticeKind::TwoElement,
                "L X = 0 iff X ∧ HF_p = 0".to_string(),
                facts(
                    false,
                    NO_COMPACTS_NOT_SMASHING,
                    false,
                    "there are no nonzero compact objects in the HF_p-local category",
                    true,
                    "a two-element Bousfield lattice leaves only the zero and identity functors smashing",
                    "there are localizing subcategories that are not Bousfield classes (cohomological Bousfield classes)",
                    "BL(L_HFp) = {⟨0⟩, ⟨HF_p⟩}: HF_p is a skew field object".into(),
                ),
            ),
            CategoryId::ILocal => (
                LatticeKind::TwoElement,
                "L_I X = 0 iff X ∧ I = 0".to_string(),
                facts(
                    false,
                    NO_COMPACTS_NOT_SMASHING,
                    false,
                    "the I-local category has no nonzero compact objects",
                    true,
                    "a two-element Bousfield lattice leaves only the zero and identity functors smashing",
                    "not classified",
                    "BL(L_I) = {⟨0⟩, ⟨L_I S^0⟩}, with ⟨L_I S^0⟩ ≠ ⟨0⟩ since F(n)∧I ≠ 0".into(),
                ),
            ),
            CategoryId::BPLocal => (
                LatticeKind::QuotientOnly,
                "decided only through the harmonic quotient and cited classification facts"
                    .to_string(),
                facts(
                    false,
                    NO_COMPACTS_NOT_SMASHING,
                    false,
                    "the BP-local category has no nonzero compact objects",
                    false,
                    "finding further smashing localizations on L_BP is open",
                    "not classified",
                    "2^ℵ0 ≤ |BL(L_BP)| ≤ 2^(2^ℵ0); BL(L_BP) surjects onto BL(H) = 2^ℕ".into(),
                ),
            ),
        };
        CategoryModel {
            id,
            lattice_kind,
            zero_test,
            facts,
        }
    }
}

/// The image `⟨L X⟩` of a class in a category's model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalElement {
    Symbolic(NormalForm),
    Subset(FinCofSet),
    Bit(bool),
    Quotient { harmonic: FinCofSet, form: NormalForm },
    /// The zero test could not be decided.
    Indeterminate(String),
}

impl LocalElement {
    pub fn is_indeterminate(&self) -> bool {
        matches!(self, LocalElement::Indeterminate(_))
    }

    pub fn is_bottom(&self) -> bool {
        match self {
            LocalElement::Symbolic(nf) => nf.is_zero(),
            LocalElement::Subset(s) => s.is_empty(),
            LocalElement::Bit(b) => !b,
            LocalElement::Quotient { harmonic, form } => harmonic.is_empty() && form.is_zero(),
            LocalElement::Indeterminate(_) => false,
        }
    }

    /// Join in a concrete model; `None` when the shapes do not combine.
    pub fn join(&self, other: &LocalElement) -> Option<LocalElement> {
        match (self, other) {
            (LocalElement::Subset(a), LocalElement::Subset(b)) => {
                Some(LocalElement::Subset(a.union(b)))
            }
            (LocalElement::Bit(a), LocalElement::Bit(b)) => Some(LocalElement::Bit(*a || *b)),
            _ => None,
        }
    }

    pub fn meet(&self, other: &LocalElement) -> Option<LocalElement> {
        match (self, other) {
            (LocalElement::Subset(a), LocalElement::Subset(b)) => {
                Some(LocalElement::Subset(a.intersect(b)))
            }
            (LocalElement::Bit(a), LocalElement::Bit(b)) => Some(LocalElement::Bit(*a && *b)),
            _ => None,
        }
    }

    /// Order in a concrete model.
    pub fn leq(&self, other: &LocalElement) -> Option<bool> {
        match (self, other) {
            (LocalElement::Subset(a), LocalElement::Subset(b)) => Some(a.is_subset(b)),
            (LocalElement::Bit(a), LocalElement::Bit(b)) => Some(!a || *b),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            LocalElement::Symbolic(nf) => json!({ "symbolic": nf.to_json() }),
            LocalElement::Subset(s) => json!({ "subset": s.to_string() }),
            LocalElement::Bit(b) => json!({ "nonzero": b }),
            LocalElement::Quotient { harmonic, form } => json!({
                "harmonic_image": harmonic.to_string(),
                "form": form.to_json(),
            }),
            LocalElement::Indeterminate(why) => json!({ "indeterminate": why }),
        }
    }
}

impl fmt::Display for LocalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalElement::Symbolic(nf) => write!(f, "{nf}"),
            LocalElement::Subset(s) => write!(f, "{s}"),
            LocalElement::Bit(true) => f.write_str("nonzero"),
            LocalElement::Bit(false) => f.write_str("zero"),
            LocalElement::Quotient { harmonic, form } => {
                write!(f, "{form} (harmonic image {harmonic})")
            }
            LocalElement::Indeterminate(why) => write!(f, "indeterminate: {why}"),
        }
    }
}

pub const BP_LTC_CITATION: &str =
    "LTC1_n, LTC2_n and LTC3_n hold in the BP-local category for all n (cited classification)";

/// Evaluates classes in the modeled categories.
#[derive(Clone, Debug)]
pub struct Localizer {
    ambient: Algebra,
    bp: Algebra,
}

impl Default for Localizer {
    fn default() -> Self {
        Localizer::new(Algebra::default())
    }
}

fn two_element_image(e: &ClassExpr, z: Generator) -> LocalElement {
    let nf = normalize(&ClassExpr::smash(e.clone(), z));
    if nf.is_zero() {
        LocalElement::Bit(false)
    } else if certainly_nonzero(&nf).is_some() {
        LocalElement::Bit(true)
    } else {
        LocalElement::Indeterminate(format!("no rule decides whether {nf} is zero"))
    }
}

fn exact_support(e: &ClassExpr) -> Result<FinCofSet, String> {
    let b = support_bounds(&normalize(e));
    if b.is_exact() {
        Ok(b.lower)
    } else {
        Err(format!("support of {e} only bounded by {} ⊆ supp ⊆ {}", b.lower, b.upper))
    }
}

impl Localizer {
    pub fn new(ambient: Algebra) -> Self {
        let bp = Algebra::new(bp_assumptions(ambient.assumptions()));
        Localizer { ambient, bp }
    }

    pub fn ambient(&self) -> &Algebra {
        &self.ambient
    }

    pub fn model(&self, cat: CategoryId) -> CategoryModel {
        CategoryModel::of(cat)
    }

    pub fn localize(&self, cat: CategoryId, e: &ClassExpr) -> LocalElement {
        match cat {
            CategoryId::Ambient => LocalElement::Symbolic(normalize(e)),
            CategoryId::Harmonic => match exact_support(e) {
                Ok(s) => LocalElement::Subset(s),
                Err(why) => LocalElement::Indeterminate(why),
            },
            CategoryId::En(n) => match exact_support(e) {
                Ok(s) => LocalElement::Subset(s.intersect(&FinCofSet::range_to(n))),
                Err(why) => LocalElement::Indeterminate(why),
            },
            CategoryId::Kn(n) => two_element_image(e, Generator::K(n)),
            CategoryId::HFpLocal => two_element_image(e, Generator::HFp),
            CategoryId::ILocal => two_element_image(e, Generator::I),
            CategoryId::BPLocal => match exact_support(e) {
                Ok(harmonic) => LocalElement::Quotient {
                    harmonic,
                    form: normalize(e),
                },
                Err(why) => LocalElement::Indeterminate(why),
            },
        }
    }

    pub fn eq_local(&self, cat: CategoryId, a: &ClassExpr, b: &ClassExpr) -> Tri {
        match cat {
            CategoryId::Ambient => self.ambient.eq(a, b),
            CategoryId::BPLocal => self.eq_bp(a, b),
            _ => self.compare(cat, a, b, |x, y| Some(x == y), "="),
        }
    }

    pub fn leq_local(&self, cat: CategoryId, a: &ClassExpr, b: &ClassExpr) -> Tri {
        match cat {
            CategoryId::Ambient => self.ambient.leq(a, b),
            CategoryId::BPLocal => {
                let (x, y) = (self.localize(cat, a), self.localize(cat, b));
                if let (
                    LocalElement::Quotient { harmonic: ha, .. },
                    LocalElement::Quotient { harmonic: hb, .. },
                ) = (&x, &y)
                {
                    if !ha.is_subset(hb) {
                        return Tri::fails([
                            format!("harmonic images {ha} ⊄ {hb}"),
                            quotient_citation(),
                        ]);
                    }
                }
                let t = self.bp.leq(a, b);
                if t.is_holds() {
                    t.with([local_transfer_citation()])
                } else {
                    Tri::open([format!(
                        "⟨{a}⟩ ≤ ⟨{b}⟩ is not determined by the BP-local model"
                    )])
                }
            }
            _ => self.compare(cat, a, b, LocalElement::leq, "≤"),
        }
    }

    fn compare(
        &self,
        cat: CategoryId,
        a: &ClassExpr,
        b: &ClassExpr,
        rel: impl Fn(&LocalElement, &LocalElement) -> Option<bool>,
        sym: &str,
    ) -> Tri {
        let x = self.localize(cat, a);
        let y = self.localize(cat, b);
        let cite = CategoryModel::of(cat).facts.lattice_citation;
        match rel(&x, &y) {
            Some(true) => Tri::holds([
                format!("images in the {cat} model: {x} {sym} {y} (recomputed)"),
                cite,
            ]),
            Some(false) => Tri::fails([
                format!("images in the {cat} model: {x} {sym} {y} is false (recomputed)"),
                cite,
            ]),
            None => Tri::open([format!("image undecided in the {cat} model: {x} vs {y}")]),
        }
    }

    fn eq_bp(&self, a: &ClassExpr, b: &ClassExpr) -> Tri {
        let x = self.localize(CategoryId::BPLocal, a);
        let y = self.localize(CategoryId::BPLocal, b);
        if let (
            LocalElement::Quotient { harmonic: ha, .. },
            LocalElement::Quotient { harmonic: hb, .. },
        ) = (&x, &y)
        {
            if ha != hb {
                return Tri::fails([
                    format!("harmonic images differ: {ha} vs {hb}"),
                    quotient_citation(),
                ]);
            }
        }
        let t = self.bp.eq(a, b);
        if t.is_holds() {
            return t.with([local_transfer_citation()]);
        }
        Tri::open([format!(
            "harmonic images agree but ⟨{a}⟩ = ⟨{b}⟩ is not determined by the BP-local model"
        )])
    }

    /// The finite lattice model; the harmonic model needs a truncation depth.
    pub fn lattice_of(
        &self,
        cat: CategoryId,
        truncation: Option<u32>,
    ) -> Result<FiniteLattice, LocalizationError> {
        match cat {
            CategoryId::En(n) => Ok(FiniteLattice::power_set(n)?),
            CategoryId::Harmonic => {
                let d = truncation.ok_or(LocalizationError::MissingTruncation(cat))?;
                Ok(FiniteLattice::power_set(d)?)
            }
            CategoryId::Kn(n) => Ok(FiniteLattice::two_element("⟨0⟩", &format!("⟨K({n})⟩"))),
            CategoryId::HFpLocal => Ok(FiniteLattice::two_element("⟨0⟩", "⟨HFp⟩")),
            CategoryId::ILocal => Ok(FiniteLattice::two_element("⟨0⟩", "⟨L_I S⟩")),
            CategoryId::Ambient | CategoryId::BPLocal => {
                Err(LocalizationError::NoFiniteModel(cat))
            }
        }
    }

    /// Position of a model element inside [`Localizer::lattice_of`].
    pub fn element_index(
        &self,
        cat: CategoryId,
        elem: &LocalElement,
        truncation: Option<u32>,
    ) -> Result<usize, LocalizationError> {
        let bound = match cat {
            CategoryId::En(n) => n,
            CategoryId::Harmonic => truncation.ok_or(LocalizationError::MissingTruncation(cat))?,
            _ => 0,
        };
        match elem {
            LocalElement::Subset(s) => Ok(s.truncate(bound).iter().map(|i| 1usize << i).sum()),
            LocalElement::Bit(b) => Ok(usize::from(*b)),
            other => Err(LocalizationError::NotAModelElement(other.to_string())),
        }
    }

    /// A class whose image is `elem`, for pushing an image into another
    /// model. Tops of two-element models are represented by the unit.
    pub fn representative(&self, cat: CategoryId, elem: &LocalElement) -> Option<ClassExpr> {
        match elem {
            LocalElement::Symbolic(nf) => Some(nf.to_expr()),
            LocalElement::Subset(s) => Some(NormalForm::k_join(s.clone()).to_expr()),
            LocalElement::Bit(false) => Some(ClassExpr::zero()),
            LocalElement::Bit(true) => match cat {
                CategoryId::Kn(n) => Some(ClassExpr::gen(Generator::K(n))),
                _ => Some(ClassExpr::sphere()),
            },
            LocalElement::Quotient { form, .. } => Some(form.to_expr()),
            LocalElement::Indeterminate(_) => None,
        }
    }
}

fn quotient_citation() -> String {
    "⟨Q⟩ ≤ ⟨BP⟩, so ⟨L_BP X⟩ ↦ ⟨L_Q X⟩ is a lattice map BL(L_BP) → BL(H) = 2^ℕ".into()
}

fn local_transfer_citation() -> String {
    "⟨X⟩ ↦ ⟨L X⟩ is an order-preserving lattice map, so relations in BL(S) hold locally".into()
}

/// Ambient assumptions extended by the BP-local classification.
pub fn bp_assumptions(base: &Assumptions) -> Assumptions {
    base.clone().with(FinCofSet::all(), BP_LTC_CITATION)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn g(x: Generator) -> ClassExpr {
        ClassExpr::gen(x)
    }

    #[test]
    fn localize_examples() {
        let loc = Localizer::default();
        assert_eq!(
            loc.localize(CategoryId::Harmonic, &g(T(3))),
            LocalElement::Subset(FinCofSet::singleton(3))
        );
        assert_eq!(
            loc.localize(CategoryId::En(2), &g(F(1))),
            LocalElement::Subset(FinCofSet::finite([1, 2]))
        );
        assert_eq!(loc.localize(CategoryId::Kn(4), &g(T(4))), LocalElement::Bit(true));
        assert_eq!(loc.localize(CategoryId::HFpLocal, &g(K(7))), LocalElement::Bit(false));
        assert_eq!(loc.localize(CategoryId::ILocal, &g(T(2))), LocalElement::Bit(false));
        assert!(loc
            .localize(CategoryId::HFpLocal, &g(BP))
            .is_indeterminate());
    }

    #[test]
    fn eq_local_examples() {
        let loc = Localizer::default();
        assert!(loc.eq_local(CategoryId::Harmonic, &g(T(2)), &g(K(2))).is_holds());
        assert!(loc.eq_local(CategoryId::Ambient, &g(T(2)), &g(K(2))).is_open());
        let a = ClassExpr::wedge(T(1), T(2));
        let b = ClassExpr::wedge(K(1), K(2));
        let t = loc.eq_local(CategoryId::BPLocal, &a, &b);
        assert!(t.is_holds());
        assert!(t.provenance().iter().any(|p| p == BP_LTC_CITATION));
        assert!(loc.eq_local(CategoryId::BPLocal, &g(K(1)), &g(K(2))).is_fails());
        assert!(loc.eq_local(CategoryId::BPLocal, &g(BP), &g(Sphere)).is_open());
    }

    #[test]
    fn lattice_sizes() {
        let loc = Localizer::default();
        assert_eq!(loc.lattice_of(CategoryId::En(2), None).unwrap().len(), 8);
        assert_eq!(loc.lattice_of(CategoryId::Kn(5), None).unwrap().len(), 2);
        assert_eq!(loc.lattice_of(CategoryId::ILocal, None).unwrap().len(), 2);
        assert!(matches!(
            loc.lattice_of(CategoryId::Harmonic, None),
            Err(LocalizationError::MissingTruncation(_))
        ));
        assert!(loc.lattice_of(CategoryId::BPLocal, None).is_err());
        assert!(loc.lattice_of(CategoryId::Ambient, None).is_err());
    }
}
