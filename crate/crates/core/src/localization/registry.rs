use serde::Serialize;
use serde_json::{json, Value};

use super::{CategoryId, CategoryModel, LocalElement, LocalizationError, Localizer};
use crate::class::{ClassExpr, Generator, Tri};
use crate::lattice::FinCofSet;

/// Default largest index listed for an infinite registry.
pub const DEFAULT_CAP: u32 = 16;

/// What the acyclic subcategory of a smashing localization is generated by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Generation {
    CompactSet,
    StronglyDualizableSet,
    Unknown,
}

/// A smashing localization `L` with `⟨acyclic⟩ ∧ ⟨local⟩ = 0` and
/// `⟨acyclic⟩ ∨ ⟨local⟩ = ⟨S⟩` in its category.
#[derive(Clone, Debug, PartialEq)]
pub struct SmashingRecord {
    pub name: String,
    pub category: CategoryId,
    pub acyclic_class: ClassExpr,
    pub local_unit_class: ClassExpr,
    pub generated_by: Generation,
    pub citation: String,
}

impl SmashingRecord {
    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "category": self.category,
            "acyclic_class": self.acyclic_class.to_string(),
            "local_unit_class": self.local_unit_class.to_string(),
            "generated_by": self.generated_by,
            "citation": self.citation,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SmashingRegistry {
    pub category: CategoryId,
    pub records: Vec<SmashingRecord>,
    /// The classification lists every smashing localization.
    pub complete: bool,
    /// An infinite family was cut off at the cap.
    pub truncated: bool,
    pub note: String,
}

impl SmashingRegistry {
    pub fn to_json(&self) -> Value {
        json!({
            "category": self.category,
            "complete": self.complete,
            "truncated": self.truncated,
            "note": self.note,
            "records": self.records.iter().map(SmashingRecord::to_json).collect::<Vec<_>>(),
        })
    }
}

fn record(
    cat: CategoryId,
    name: impl Into<String>,
    acyclic: ClassExpr,
    local: ClassExpr,
    generated_by: Generation,
    citation: impl Into<String>,
) -> SmashingRecord {
    SmashingRecord {
        name: name.into(),
        category: cat,
        acyclic_class: acyclic,
        local_unit_class: local,
        generated_by,
        citation: citation.into(),
    }
}

fn zero_record(cat: CategoryId, by: Generation, citation: &str) -> SmashingRecord {
    record(cat, "zero", ClassExpr::sphere(), ClassExpr::zero(), by, citation)
}

fn identity_record(cat: CategoryId) -> SmashingRecord {
    record(
        cat,
        "identity",
        ClassExpr::zero(),
        ClassExpr::sphere(),
        Generation::CompactSet,
        "the identity has no nonzero acyclics, generated by the empty set of compacts",
    )
}

const UNIT_SD: &str = "the acyclics are the whole category, generated by the unit, which is \
                       strongly dualizable but not compact";

/// The smashing localizations of a category, as far as they are classified.
pub fn smashing_registry(cat: CategoryId, cap: u32) -> SmashingRegistry {
    let model = CategoryModel::of(cat);
    let mut records = Vec::new();
    let mut truncated = false;
    match cat {
        CategoryId::Ambient => {}
        CategoryId::Harmonic => {
            records.push(zero_record(cat, Generation::StronglyDualizableSet, UNIT_SD));
            records.push(identity_record(cat));
            for n in 0..=cap {
                records.push(record(
                    cat,
                    format!("l_{n}^f"),
                    ClassExpr::gen(Generator::F(n + 1)),
                    ClassExpr::telescope_join(n),
                    Generation::StronglyDualizableSet,
                    format!("acyclics generated by L_Q F({}), strongly dualizable", n + 1),
                ));
            }
            truncated = true;
        }
        CategoryId::En(n) => {
            records.push(zero_record(
                cat,
                Generation::CompactSet,
                "the unit L_n S^0 is compact since L_n is smashing",
            ));
            for i in 0..n {
                records.push(record(
                    cat,
                    format!("L_{i}"),
                    ClassExpr::gen(Generator::F(i + 1)),
                    ClassExpr::gen(Generator::E(i)),
                    Generation::CompactSet,
                    format!("acyclics generated by the compact L_{n}F({})", i + 1),
                ));
            }
            records.push(SmashingRecord {
                name: format!("identity (L_{n})"),
                ..identity_record(cat)
            });
        }
        CategoryId::Kn(n) => {
            records.push(zero_record(
                cat,
                Generation::CompactSet,
                &format!("the whole category is generated by the compact L_K({n})F({n})"),
            ));
            records.push(identity_record(cat));
        }
        CategoryId::HFpLocal | CategoryId::ILocal => {
            records.push(zero_record(cat, Generation::StronglyDualizableSet, UNIT_SD));
            records.push(identity_record(cat));
        }
        CategoryId::BPLocal => {
            records.push(zero_record(cat, Generation::StronglyDualizableSet, UNIT_SD));
            records.push(identity_record(cat));
            for n in 0..=cap {
                records.push(record(
                    cat,
                    format!("L_{n}"),
                    ClassExpr::gen(Generator::F(n + 1)),
                    ClassExpr::telescope_join(n),
                    Generation::StronglyDualizableSet,
                    format!("acyclics generated by L_BP F({}), strongly dualizable", n + 1),
                ));
            }
            truncated = true;
        }
    }
    SmashingRegistry {
        category: cat,
        records,
        complete: model.facts.registry_complete,
        truncated,
        note: model.facts.registry_reason,
    }
}

fn model_top(cat: CategoryId) -> Option<LocalElement> {
    match cat {
        CategoryId::Harmonic | CategoryId::BPLocal => Some(LocalElement::Subset(FinCofSet::all())),
        CategoryId::En(n) => Some(LocalElement::Subset(FinCofSet::range_to(n))),
        CategoryId::Kn(_) | CategoryId::HFpLocal | CategoryId::ILocal => {
            Some(LocalElement::Bit(true))
        }
        CategoryId::Ambient => None,
    }
}

/// Image of a class in the category's concrete model. The BP-local
/// category is read through its harmonic quotient.
fn concrete_image(
    loc: &Localizer,
    cat: CategoryId,
    e: &ClassExpr,
) -> Result<LocalElement, LocalizationError> {
    match loc.localize(cat, e) {
        LocalElement::Quotient { harmonic, .. } => Ok(LocalElement::Subset(harmonic)),
        LocalElement::Indeterminate(why) => Err(LocalizationError::Indeterminate(why)),
        LocalElement::Symbolic(_) => Err(LocalizationError::NoFiniteModel(cat)),
        other => Ok(other),
    }
}

/// Checks that the acyclic and local classes of a record are complements.
pub fn verify_complemented_pair(
    loc: &Localizer,
    rec: &SmashingRecord,
) -> Result<bool, LocalizationError> {
    let cat = rec.category;
    let top = model_top(cat).ok_or(LocalizationError::NoFiniteModel(cat))?;
    let a = concrete_image(loc, cat, &rec.acyclic_class)?;
    let l = concrete_image(loc, cat, &rec.local_unit_class)?;
    let meet_bottom = a.meet(&l).is_some_and(|m| m.is_bottom());
    let join_top = a.join(&l).is_some_and(|j| j == top);
    Ok(meet_bottom && join_top)
}

/// Whether every smashing localization is generated by compacts.
pub fn gsc_verdict(loc: &Localizer, reg: &SmashingRegistry) -> Tri {
    verdict(loc, reg, |g| g == Generation::CompactSet, true)
}

/// Whether every smashing localization is generated by strongly
/// dualizable objects.
pub fn sdgsc_verdict(loc: &Localizer, reg: &SmashingRegistry) -> Tri {
    verdict(
        loc,
        reg,
        |g| matches!(g, Generation::CompactSet | Generation::StronglyDualizableSet),
        false,
    )
}

fn verdict(
    loc: &Localizer,
    reg: &SmashingRegistry,
    accept: impl Fn(Generation) -> bool,
    compact_only: bool,
) -> Tri {
    let cat = reg.category;
    if cat == CategoryId::Ambient {
        return Tri::open(["smashing localizations of the ambient category are not classified"]);
    }
    let model = CategoryModel::of(cat);
    if compact_only && !model.facts.nonzero_compacts {
        let witness = reg.records.iter().find(|r| {
            concrete_image(loc, cat, &r.acyclic_class).is_ok_and(|img| !img.is_bottom())
        });
        if let Some(r) = witness {
            return Tri::fails([
                model.facts.compacts_reason.clone(),
                format!(
                    "the smashing localization {} has nonzero acyclics, which no set of compacts generates",
                    r.name
                ),
            ]);
        }
    }
    if let Some(bad) = reg.records.iter().find(|r| !accept(r.generated_by)) {
        return Tri::open([format!(
            "generation of the acyclics of {} is not established",
            bad.name
        )]);
    }
    if !reg.complete {
        return Tri::open([format!("registry incomplete: {}", reg.note)]);
    }
    let what = if compact_only {
        "compact objects"
    } else {
        "strongly dualizable objects"
    };
    let mut prov = vec![
        reg.note.clone(),
        format!("every listed smashing localization has acyclics generated by {what} (recomputed)"),
    ];
    if reg.truncated {
        prov.push("the infinite family is uniform in n".into());
    }
    Tri::holds(prov)
}
