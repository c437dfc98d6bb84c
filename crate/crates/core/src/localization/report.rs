use std::fmt::Write;

use serde_json::{json, Value};

use super::{
    bousfield_lattice, gsc_verdict, sdgsc_verdict, smashing_registry, verify_complemented_pair,
    BuiltLattice, CategoryId, CategoryModel, Localizer, SmashingRegistry,
};
use crate::class::Tri;
use crate::lattice::to_dot;

/// Everything known about one localized category.
#[derive(Clone, Debug)]
pub struct CategoryReport {
    pub model: CategoryModel,
    pub registry: SmashingRegistry,
    pub pairs_verified: Vec<(String, bool)>,
    pub gsc: Tri,
    pub sdgsc: Tri,
    pub lattice: Option<BuiltLattice>,
}

/// Builds the report; `truncation` bounds the harmonic lattice.
pub fn category_report(
    loc: &Localizer,
    cat: CategoryId,
    cap: u32,
    truncation: Option<u32>,
) -> CategoryReport {
    let registry = smashing_registry(cat, cap);
    let pairs_verified = registry
        .records
        .iter()
        .map(|r| {
            (
                r.name.clone(),
                verify_complemented_pair(loc, r).unwrap_or(false),
            )
        })
        .collect();
    CategoryReport {
        model: CategoryModel::of(cat),
        gsc: gsc_verdict(loc, &registry),
        sdgsc: sdgsc_verdict(loc, &registry),
        lattice: bousfield_lattice(loc, cat, truncation).ok(),
        registry,
        pairs_verified,
    }
}

fn tri_json(t: &Tri) -> Value {
    json!({ "value": t.value().to_string(), "provenance": t.provenance() })
}

impl CategoryReport {
    pub fn to_json(&self) -> Value {
        json!({
            "category": self.model.id,
            "model": self.model,
            "registry": self.registry.to_json(),
            "pairs_verified": self.pairs_verified
                .iter()
                .map(|(n, ok)| json!({ "name": n, "complemented": ok }))
                .collect::<Vec<_>>(),
            "gsc": tri_json(&self.gsc),
            "sdgsc": tri_json(&self.sdgsc),
            "lattice": self.lattice.as_ref().map(BuiltLattice::to_json),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let f = &self.model.facts;
        let _ = writeln!(out, "category: {}", self.model.id);
        let _ = writeln!(out, "zero test: {}", self.model.zero_test);
        let _ = writeln!(out, "lattice: {}", f.lattice_citation);
        let _ = writeln!(
            out,
            "ambient smashing: {} ({})",
            f.ambient_smashing, f.ambient_smashing_reason
        );
        let _ = writeln!(out, "nonzero compacts: {} ({})", f.nonzero_compacts, f.compacts_reason);
        let _ = writeln!(out, "localizing subcategories: {}", f.localizing_subcategories);
        let _ = writeln!(
            out,
            "smashing registry ({}{}): {}",
            if self.registry.complete { "complete" } else { "incomplete" },
            if self.registry.truncated { ", truncated" } else { "" },
            self.registry.note
        );
        for (rec, (_, ok)) in self.registry.records.iter().zip(&self.pairs_verified) {
            let _ = writeln!(
                out,
                "  {:<14} acyclic {:<8} local {:<24} {:?}{}",
                rec.name,
                rec.acyclic_class.to_string(),
                rec.local_unit_class.to_string(),
                rec.generated_by,
                if *ok { "" } else { "  [pair unverified]" }
            );
        }
        let _ = writeln!(out, "GSC: {}", self.gsc);
        let _ = writeln!(out, "SDGSC: {}", self.sdgsc);
        if let Some(b) = &self.lattice {
            let _ = writeln!(
                out,
                "BL: {} elements, DL: {}, BA: {}, model map iso: {}",
                b.lattice.len(),
                b.distributive.len(),
                b.boolean.len(),
                b.model_map_is_iso()
            );
        }
        out
    }

    pub fn to_dot(&self) -> Option<String> {
        self.lattice
            .as_ref()
            .map(|b| to_dot(&b.lattice, &format!("BL_{}", self.model.id)))
    }
}
