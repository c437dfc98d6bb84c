use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use super::{derive_tc2_from_tc1s, ConjectureError, ConjectureId, Derivation, Family, Statement};
use crate::class::{Algebra, Assumptions, Tri, TriValue};
use crate::localization::{
    gsc_verdict, sdgsc_verdict, smashing_registry, CategoryId, CategoryModel, Localizer,
    BP_LTC_CITATION, DEFAULT_CAP,
};

pub const TC1_TC3_CITATION: &str = "TC1_n ⇔ TC3_n (cited theorem)";
pub const LTC1_LTC3_CITATION: &str = "LTC1_n ⇒ LTC3_n in every localized category (cited theorem)";
pub const LTC3_LTC1_CITATION: &str =
    "LTC3_n ⇒ LTC1_n when L: S → S is smashing (cited theorem)";
pub const TRANSPORT_CITATION: &str =
    "⟨X⟩ ↦ ⟨LX⟩ is an order-preserving lattice map BL(S) → BL(L), so TC_n on S gives LTC_n on L";
pub const TC2_TC1_CITATION: &str = "TC2_n holds iff TC1_i holds for all i ≤ n";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Decided by the engine from the models and rule table.
    Recomputed,
    /// Rests on a seeded, cited fact.
    Cited,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Recomputed => "recomputed",
            Mode::Cited => "cited",
        })
    }
}

/// How a verdict was reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Trace {
    /// An equality compared in the category's model.
    Local {
        category: CategoryId,
        lhs: String,
        rhs: String,
    },
    Seed,
    Derived(Derivation),
    /// Resolved from other verdicts through a theorem edge.
    Edge {
        theorem: String,
        from: Vec<ConjectureId>,
    },
    /// Read off the smashing registry.
    Registry(CategoryId),
}

impl Trace {
    pub fn to_json(&self) -> Value {
        match self {
            Trace::Local { category, lhs, rhs } => {
                json!({ "local": { "category": category, "lhs": lhs, "rhs": rhs } })
            }
            Trace::Seed => json!("seed"),
            Trace::Derived(d) => json!({ "derivation": d.to_json() }),
            Trace::Edge { theorem, from } => json!({ "edge": { "theorem": theorem, "from": from } }),
            Trace::Registry(c) => json!({ "registry": c }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub tri: Tri,
    pub mode: Mode,
    pub trace: Trace,
}

impl Verdict {
    pub fn value(&self) -> TriValue {
        self.tri.value()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "value": self.tri.value().to_string(),
            "mode": self.mode,
            "provenance": self.tri.provenance(),
            "trace": self.trace.to_json(),
        })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.tri.value(), self.mode)?;
        for p in self.tri.provenance() {
            write!(f, "\n  - {p}")?;
        }
        Ok(())
    }
}

/// Evaluates conjecture variants over the category models.
#[derive(Clone, Debug, Default)]
pub struct ConjectureEngine {
    localizer: Localizer,
}

impl ConjectureEngine {
    pub fn new(localizer: Localizer) -> Self {
        ConjectureEngine { localizer }
    }

    /// An engine whose ambient facts are `assumptions` instead of the seeds.
    pub fn with_assumptions(assumptions: Assumptions) -> Self {
        Self::new(Localizer::new(Algebra::new(assumptions)))
    }

    pub fn localizer(&self) -> &Localizer {
        &self.localizer
    }

    pub fn evaluate(&self, c: ConjectureId) -> Verdict {
        let cat = c.category();
        let n = c.index().unwrap_or(0);
        match c.family() {
            Family::TC1 | Family::LTC1 if cat == CategoryId::Ambient => self.tc1(n),
            Family::TC2 | Family::LTC2 if cat == CategoryId::Ambient => self.tc2(n),
            Family::TC3 | Family::LTC3 if cat == CategoryId::Ambient => {
                let v = self.tc1(n);
                self.through_edge(v, ConjectureId::tc1(n), TC1_TC3_CITATION)
            }
            Family::LTC1 | Family::LTC2 => self.local_equality(c),
            Family::LTC3 => {
                let src = ConjectureId::ltc1(n, cat);
                let v = self.evaluate(src);
                let converse = CategoryModel::of(cat).facts.ambient_smashing;
                match v.value() {
                    TriValue::Holds => self.through_edge(v, src, LTC1_LTC3_CITATION),
                    TriValue::Fails if converse => {
                        self.through_edge(v, src, LTC3_LTC1_CITATION)
                    }
                    _ => Verdict {
                        tri: Tri::open([format!(
                            "{src} is {} and no theorem edge decides {c}",
                            v.value()
                        )]),
                        mode: v.mode,
                        trace: Trace::Edge {
                            theorem: LTC1_LTC3_CITATION.into(),
                            from: vec![src],
                        },
                    },
                }
            }
            Family::GSC | Family::SDGSC => {
                let reg = smashing_registry(cat, DEFAULT_CAP);
                let tri = if c.family() == Family::GSC {
                    gsc_verdict(&self.localizer, &reg)
                } else {
                    sdgsc_verdict(&self.localizer, &reg)
                };
                Verdict {
                    tri,
                    mode: Mode::Recomputed,
                    trace: Trace::Registry(cat),
                }
            }
            // Ambient-only families were handled above.
            Family::TC1 | Family::TC2 | Family::TC3 => unreachable!("ambient family {c}"),
        }
    }

    fn through_edge(
        &self,
        src: Verdict,
        from: ConjectureId,
        theorem: &str,
    ) -> Verdict {
        let tri = match src.value() {
            TriValue::Open => Tri::open([format!("{from} is open; {theorem}")]),
            _ => {
                let mut prov = vec![format!("{from} is {}", src.value())];
                prov.extend(src.tri.provenance().iter().cloned());
                prov.push(theorem.to_string());
                if src.value() == TriValue::Holds {
                    Tri::holds(prov)
                } else {
                    Tri::fails(prov)
                }
            }
        };
        Verdict {
            tri,
            mode: src.mode,
            trace: Trace::Edge {
                theorem: theorem.into(),
                from: vec![from],
            },
        }
    }

    fn tc1(&self, n: u32) -> Verdict {
        let Statement::LatticeEquality { a, b, .. } = ConjectureId::tc1(n).statement() else {
            unreachable!()
        };
        let tri = self.localizer.ambient().eq(&a, &b);
        let cited = self.localizer.ambient().assumptions().citation_for(n).is_some();
        Verdict {
            mode: if tri.is_holds() && cited {
                Mode::Cited
            } else {
                Mode::Recomputed
            },
            trace: if tri.is_holds() && cited {
                Trace::Seed
            } else {
                Trace::Local {
                    category: CategoryId::Ambient,
                    lhs: a.to_string(),
                    rhs: b.to_string(),
                }
            },
            tri,
        }
    }

    fn tc2(&self, n: u32) -> Verdict {
        let parts: Vec<(u32, Verdict)> = (0..=n).map(|i| (i, self.tc1(i))).collect();
        if let Some((i, v)) = parts.iter().find(|(_, v)| v.value() == TriValue::Fails) {
            let mut prov = vec![format!("TC1_{i} fails")];
            prov.extend(v.tri.provenance().iter().cloned());
            prov.push(TC2_TC1_CITATION.into());
            return Verdict {
                tri: Tri::fails(prov),
                mode: v.mode,
                trace: Trace::Edge {
                    theorem: TC2_TC1_CITATION.into(),
                    from: vec![ConjectureId::tc1(*i)],
                },
            };
        }
        if let Some((i, _)) = parts.iter().find(|(_, v)| v.value() == TriValue::Open) {
            return Verdict {
                tri: Tri::open([format!("TC1_{i} is open; {TC2_TC1_CITATION}")]),
                mode: Mode::Recomputed,
                trace: Trace::Edge {
                    theorem: TC2_TC1_CITATION.into(),
                    from: vec![ConjectureId::tc1(*i)],
                },
            };
        }
        let all: Vec<u32> = (0..=n).collect();
        let derivation = derive_tc2_from_tc1s(n, &all).expect("all hypotheses present");
        let mut prov: Vec<String> = parts
            .iter()
            .flat_map(|(_, v)| v.tri.provenance().iter().cloned())
            .collect();
        prov.push(format!("joined TC1_0 … TC1_{n} (derived)"));
        Verdict {
            tri: Tri::holds(prov),
            mode: Mode::Recomputed,
            trace: Trace::Derived(derivation),
        }
    }

    fn local_equality(&self, c: ConjectureId) -> Verdict {
        let Statement::LatticeEquality { a, b, category } = c.statement() else {
            unreachable!("{c} is an equality")
        };
        let tri = self.localizer.eq_local(category, &a, &b);
        let seeds = self.localizer.ambient().assumptions();
        let cited = tri.provenance().iter().any(|p| {
            p == BP_LTC_CITATION || seeds.entries().iter().any(|a| a.citation == *p)
        });
        Verdict {
            tri,
            mode: if cited { Mode::Cited } else { Mode::Recomputed },
            trace: Trace::Local {
                category,
                lhs: a.to_string(),
                rhs: b.to_string(),
            },
        }
    }

    /// Re-evaluates `c` and checks that it reproduces `v`, replaying any
    /// derivation it carries.
    pub fn replay(&self, c: ConjectureId, v: &Verdict) -> Result<(), ConjectureError> {
        if let Trace::Derived(d) = &v.trace {
            d.replay()?;
        }
        let again = self.evaluate(c);
        if &again != v {
            return Err(ConjectureError::Derivation(format!(
                "{c} re-evaluated to {}",
                again.value()
            )));
        }
        Ok(())
    }

    /// Pushes an ambient `TC1_n` or `TC2_n` that holds into `target`.
    pub fn transport(&self, c: ConjectureId, target: CategoryId) -> Result<Verdict, ConjectureError> {
        if !matches!(c.family(), Family::TC1 | Family::TC2) || c.category() != CategoryId::Ambient {
            return Err(ConjectureError::NotTransportable(c.to_string()));
        }
        let v = self.evaluate(c);
        if v.value() != TriValue::Holds {
            return Err(ConjectureError::Refused {
                conjecture: c.to_string(),
                value: v.value(),
            });
        }
        let n = c.index().unwrap_or(0);
        let to = if c.family() == Family::TC1 {
            ConjectureId::ltc1(n, target)
        } else {
            ConjectureId::ltc2(n, target)
        };
        let mut prov = vec![format!("{c} holds in the ambient category")];
        prov.extend(v.tri.provenance().iter().cloned());
        prov.push(TRANSPORT_CITATION.into());
        prov.push(format!("hence {to}"));
        Ok(Verdict {
            tri: Tri::holds(prov),
            mode: Mode::Cited,
            trace: Trace::Edge {
                theorem: TRANSPORT_CITATION.into(),
                from: vec![c],
            },
        })
    }
}
