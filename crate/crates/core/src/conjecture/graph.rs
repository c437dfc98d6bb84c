use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write;

use serde_json::{json, Value};

use super::{
    derive_tc1_from_tc2, derive_tc2_from_tc1s, ConjectureEngine, ConjectureId, Derivation,
    LTC1_LTC3_CITATION, LTC3_LTC1_CITATION, TC1_TC3_CITATION, TRANSPORT_CITATION,
};
use crate::class::TriValue;
use crate::localization::{CategoryId, CategoryModel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    /// `L: S → S` is a smashing localization.
    LSmashing,
}

impl Condition {
    pub fn label(self) -> &'static str {
        match self {
            Condition::LSmashing => "L smashing",
        }
    }

    pub fn satisfied_in(self, cat: CategoryId) -> bool {
        match self {
            Condition::LSmashing => CategoryModel::of(cat).facts.ambient_smashing,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    MechanizedDerivation(Derivation),
    CitedTheorem(String),
}

/// `from_1 ∧ … ∧ from_k ⇒ to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicationEdge {
    pub from: Vec<ConjectureId>,
    pub to: ConjectureId,
    pub justification: Justification,
    pub condition: Option<Condition>,
}

impl ImplicationEdge {
    fn cited(from: ConjectureId, to: ConjectureId, theorem: &str) -> Self {
        ImplicationEdge {
            from: vec![from],
            to,
            justification: Justification::CitedTheorem(theorem.into()),
            condition: None,
        }
    }

    fn when(mut self, c: Condition) -> Self {
        self.condition = Some(c);
        self
    }

    /// Whether the edge may be used in its category.
    pub fn applies(&self) -> bool {
        self.condition
            .is_none_or(|c| c.satisfied_in(self.to.category()))
    }

    pub fn label(&self) -> String {
        let base = match &self.justification {
            Justification::MechanizedDerivation(_) => "derived".to_string(),
            Justification::CitedTheorem(t) => t.clone(),
        };
        match self.condition {
            Some(c) => format!("{base} [if {}]", c.label()),
            None => base,
        }
    }

    pub fn to_json(&self) -> Value {
        let just = match &self.justification {
            Justification::MechanizedDerivation(d) => json!({ "derivation": d.to_json() }),
            Justification::CitedTheorem(t) => json!({ "citation": t }),
        };
        json!({
            "from": self.from,
            "to": self.to,
            "justification": just,
            "condition": self.condition.map(Condition::label),
        })
    }
}

pub const GSC_SDGSC_CITATION: &str = "GSC ⇔ SDGSC (cited theorem)";
pub const GSC_TC2_CITATION: &str = "GSC implies TC2_n for all n (cited theorem)";
pub const LOCAL_GSC_CITATION: &str =
    "on L with L: S → S smashing, GSC ⇔ SDGSC ⇒ LTC2_n for all n (cited theorem)";
pub const SPECULATIVE_NOTE: &str = "excluded: SDGSC ⇒ LTC2_n on L without L smashing; \
     it would need l_n to be smashing on every L, which is only conjectured";

#[derive(Clone, Debug)]
pub struct ImplicationGraph {
    pub max_n: u32,
    pub edges: Vec<ImplicationEdge>,
    pub notes: Vec<String>,
}

fn tc_family_edges(
    max_n: u32,
    cat: CategoryId,
    derivations: &HashMap<(u32, u32), Derivation>,
    out: &mut Vec<ImplicationEdge>,
) {
    let one = |n| match cat {
        CategoryId::Ambient => ConjectureId::tc1(n),
        _ => ConjectureId::ltc1(n, cat),
    };
    let two = |n| match cat {
        CategoryId::Ambient => ConjectureId::tc2(n),
        _ => ConjectureId::ltc2(n, cat),
    };
    for n in 0..=max_n {
        for i in 0..=n {
            out.push(ImplicationEdge {
                from: vec![two(n)],
                to: one(i),
                justification: Justification::MechanizedDerivation(derivations[&(n, i)].clone()),
                condition: None,
            });
        }
        let all: Vec<u32> = (0..=n).collect();
        out.push(ImplicationEdge {
            from: all.iter().map(|&i| one(i)).collect(),
            to: two(n),
            justification: Justification::MechanizedDerivation(
                derive_tc2_from_tc1s(n, &all).expect("complete hypotheses"),
            ),
            condition: None,
        });
    }
}

/// The implication graph among the variants with index at most `max_n`,
/// in the ambient category and every shipped localized category.
pub fn implication_graph(max_n: u32) -> ImplicationGraph {
    let mut cats = vec![CategoryId::Ambient];
    cats.extend(CategoryId::shipped(max_n));
    implication_graph_for(max_n, &cats)
}

pub fn implication_graph_for(max_n: u32, cats: &[CategoryId]) -> ImplicationGraph {
    let mut derivations = HashMap::new();
    for n in 0..=max_n {
        for i in 0..=n {
            derivations.insert(
                (n, i),
                derive_tc1_from_tc2(n, i).expect("i ≤ n"),
            );
        }
    }
    let mut edges = Vec::new();
    for &cat in cats {
        tc_family_edges(max_n, cat, &derivations, &mut edges);
        let gsc = ConjectureId::gsc(cat);
        let sdgsc = ConjectureId::sdgsc(cat);
        if cat == CategoryId::Ambient {
            for n in 0..=max_n {
                let (t1, t3) = (ConjectureId::tc1(n), ConjectureId::tc3(n));
                edges.push(ImplicationEdge::cited(t1, t3, TC1_TC3_CITATION));
                edges.push(ImplicationEdge::cited(t3, t1, TC1_TC3_CITATION));
                edges.push(ImplicationEdge::cited(gsc, ConjectureId::tc2(n), GSC_TC2_CITATION));
            }
            edges.push(ImplicationEdge::cited(gsc, sdgsc, GSC_SDGSC_CITATION));
            edges.push(ImplicationEdge::cited(sdgsc, gsc, GSC_SDGSC_CITATION));
            continue;
        }
        for n in 0..=max_n {
            let (l1, l2, l3) = (
                ConjectureId::ltc1(n, cat),
                ConjectureId::ltc2(n, cat),
                ConjectureId::ltc3(n, cat),
            );
            edges.push(ImplicationEdge::cited(ConjectureId::tc1(n), l1, TRANSPORT_CITATION));
            edges.push(ImplicationEdge::cited(ConjectureId::tc2(n), l2, TRANSPORT_CITATION));
            edges.push(ImplicationEdge::cited(l1, l3, LTC1_LTC3_CITATION));
            edges.push(
                ImplicationEdge::cited(l3, l1, LTC3_LTC1_CITATION).when(Condition::LSmashing),
            );
            edges.push(
                ImplicationEdge::cited(gsc, l2, LOCAL_GSC_CITATION).when(Condition::LSmashing),
            );
        }
        edges.push(ImplicationEdge::cited(gsc, sdgsc, LOCAL_GSC_CITATION).when(Condition::LSmashing));
        edges.push(ImplicationEdge::cited(sdgsc, gsc, LOCAL_GSC_CITATION).when(Condition::LSmashing));
    }
    ImplicationGraph {
        max_n,
        edges,
        notes: vec![SPECULATIVE_NOTE.to_string()],
    }
}

/// Result of propagating verdicts along the graph.
#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub seeded: usize,
    pub derived: usize,
    pub facts: BTreeMap<ConjectureId, TriValue>,
    pub contradictions: Vec<String>,
}

impl ClosureReport {
    pub fn consistent(&self) -> bool {
        self.contradictions.is_empty()
    }
}

impl ImplicationGraph {
    pub fn nodes(&self) -> BTreeSet<ConjectureId> {
        self.edges
            .iter()
            .flat_map(|e| e.from.iter().copied().chain([e.to]))
            .collect()
    }

    /// Seeds every decided verdict of the engine, then applies the usable
    /// edges forwards (Holds) and backwards (Fails) until nothing changes.
    /// With `ignore_conditions` every conditioned edge is used as well.
    pub fn closure(&self, engine: &ConjectureEngine, ignore_conditions: bool) -> ClosureReport {
        let mut facts = BTreeMap::new();
        for c in self.nodes() {
            let v = engine.evaluate(c).value();
            if v != TriValue::Open {
                facts.insert(c, v);
            }
        }
        let seeded = facts.len();
        let mut contradictions = Vec::new();
        let usable: Vec<&ImplicationEdge> = self
            .edges
            .iter()
            .filter(|e| ignore_conditions || e.applies())
            .collect();
        let mut set = |facts: &mut BTreeMap<ConjectureId, TriValue>,
                       c: ConjectureId,
                       v: TriValue,
                       why: &ImplicationEdge|
         -> bool {
            match facts.get(&c) {
                Some(&old) if old == v => false,
                Some(&old) => {
                    contradictions.push(format!("{c}: {old} but {v} via {}", why.label()));
                    false
                }
                None => {
                    facts.insert(c, v);
                    true
                }
            }
        };
        loop {
            let mut changed = false;
            for e in &usable {
                let all_hold = e
                    .from
                    .iter()
                    .all(|c| facts.get(c) == Some(&TriValue::Holds));
                if all_hold {
                    changed |= set(&mut facts, e.to, TriValue::Holds, e);
                }
                if facts.get(&e.to) == Some(&TriValue::Fails) {
                    let [single] = e.from.as_slice() else {
                        let pending: Vec<_> = e
                            .from
                            .iter()
                            .filter(|c| facts.get(c) != Some(&TriValue::Holds))
                            .collect();
                        if let [only] = pending.as_slice() {
                            changed |= set(&mut facts, **only, TriValue::Fails, e);
                        }
                        continue;
                    };
                    changed |= set(&mut facts, *single, TriValue::Fails, e);
                }
            }
            if !changed {
                break;
            }
        }
        contradictions.sort();
        contradictions.dedup();
        ClosureReport {
            seeded,
            derived: facts.len() - seeded,
            facts,
            contradictions,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "max_n": self.max_n,
            "notes": self.notes,
            "edges": self.edges.iter().map(ImplicationEdge::to_json).collect::<Vec<_>>(),
        })
    }

    /// Labeled digraph; conjunctive premises meet at a point node.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph implications {\n  rankdir=LR;\n");
        for c in self.nodes() {
            let _ = writeln!(out, "  \"{c}\";");
        }
        for (k, e) in self.edges.iter().enumerate() {
            let label = e.label().replace('"', "\\\"");
            let style = if e.condition.is_some() { ", style=dashed" } else { "" };
            if let [single] = e.from.as_slice() {
                let _ = writeln!(out, "  \"{single}\" -> \"{}\" [label=\"{label}\"{style}];", e.to);
            } else {
                let _ = writeln!(out, "  and{k} [shape=point];");
                for f in &e.from {
                    let _ = writeln!(out, "  \"{f}\" -> and{k} [arrowhead=none];");
                }
                let _ = writeln!(out, "  and{k} -> \"{}\" [label=\"{label}\"{style}];", e.to);
            }
        }
        for note in &self.notes {
            let _ = writeln!(out, "  // {note}");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_examples() {
        let g = implication_graph(3);
        let e = g
            .edges
            .iter()
            .find(|e| e.from == [ConjectureId::tc2(3)] && e.to == ConjectureId::tc1(1))
            .unwrap();
        let Justification::MechanizedDerivation(d) = &e.justification else {
            panic!("expected a derivation")
        };
        d.replay().unwrap();
        for n in 0..=3 {
            assert!(g.edges.iter().any(|e| e.from == [ConjectureId::gsc(CategoryId::Ambient)]
                && e.to == ConjectureId::tc2(n)));
        }
        assert!(g.notes.iter().any(|n| n.starts_with("excluded")));
    }

    #[test]
    fn closure_is_consistent_and_conditions_matter() {
        let g = implication_graph(4);
        let engine = ConjectureEngine::default();
        let r = g.closure(&engine, false);
        assert!(r.consistent(), "{:?}", r.contradictions);
        let r = g.closure(&engine, true);
        assert!(!r.consistent());
    }
}
