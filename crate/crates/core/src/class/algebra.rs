use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::normal::{normalize_logged, Monomial, NormalForm, RuleLog};
use super::{ClassExpr, Generator, RuleId, Tri};
use crate::lattice::FinCofSet;

/// Indices `n` at which `⟨T(n)⟩ = ⟨K(n)⟩` is taken as given, with the
/// reason.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assumption {
    pub indices: FinCofSet,
    pub citation: String,
}

/// The fact set decision procedures may use beyond the rule table.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assumptions {
    entries: Vec<Assumption>,
}

pub const TC1_ZERO_CITATION: &str = "TC1_0 holds: ⟨T(0)⟩ = ⟨K(0)⟩ (rational case, known)";
pub const TC1_ONE_CITATION: &str =
    "TC1_1 holds: ⟨T(1)⟩ = ⟨K(1)⟩, known for n = 1 when p = 2 and p > 2";

impl Assumptions {
    pub fn none() -> Self {
        Assumptions::default()
    }

    /// The known cases of the telescope conjecture, n = 0 and n = 1.
    pub fn seeded() -> Self {
        Assumptions::none()
            .with(FinCofSet::singleton(0), TC1_ZERO_CITATION)
            .with(FinCofSet::singleton(1), TC1_ONE_CITATION)
    }

    pub fn with(mut self, indices: FinCofSet, citation: impl Into<String>) -> Self {
        self.entries.push(Assumption {
            indices,
            citation: citation.into(),
        });
        self
    }

    pub fn entries(&self) -> &[Assumption] {
        &self.entries
    }

    /// All indices covered by some entry.
    pub fn indices(&self) -> FinCofSet {
        self.entries
            .iter()
            .fold(FinCofSet::empty(), |acc, a| acc.union(&a.indices))
    }

    /// The first citation covering `n`.
    pub fn citation_for(&self, n: u32) -> Option<&str> {
        self.entries
            .iter()
            .find(|a| a.indices.contains(n))
            .map(|a| a.citation.as_str())
    }
}

/// `lower ⊆ supp ⊆ upper`.
///
/// Every generator's interaction with each K(i) is decided by the rule
/// table, so the two bounds coincide on every normal form built here; both
/// are kept so callers never rely on that.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportBounds {
    pub lower: FinCofSet,
    pub upper: FinCofSet,
}

impl SupportBounds {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

fn rule_citations(log: &RuleLog) -> Vec<String> {
    log.iter().map(|r| r.citation()).collect()
}

/// Decision procedures for equality and order of Bousfield classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    assumptions: Assumptions,
}

impl Default for Algebra {
    fn default() -> Self {
        Algebra::new(Assumptions::seeded())
    }
}

impl Algebra {
    pub fn new(assumptions: Assumptions) -> Self {
        Algebra { assumptions }
    }

    pub fn assumptions(&self) -> &Assumptions {
        &self.assumptions
    }

    /// Normal form after rewriting `T(n)` to `K(n)` for assumed indices;
    /// the citations of the assumptions actually used are returned too.
    pub fn assumed_form(&self, e: &ClassExpr, log: &mut RuleLog) -> (NormalForm, Vec<String>) {
        let mut used: BTreeSet<u32> = BTreeSet::new();
        let rewritten = e.map_generators(&|g| match g {
            Generator::T(n) if self.assumptions.citation_for(n).is_some() => {
                ClassExpr::gen(Generator::K(n))
            }
            g => ClassExpr::gen(g),
        });
        for g in e.generators() {
            if let Generator::T(n) = g {
                if self.assumptions.citation_for(n).is_some() {
                    used.insert(n);
                }
            }
        }
        let mut cites: Vec<String> = Vec::new();
        for n in used {
            let c = self.assumptions.citation_for(n).unwrap_or_default().to_string();
            if !cites.contains(&c) {
                cites.push(c);
            }
        }
        (normalize_logged(&rewritten, log), cites)
    }

    pub fn support(&self, e: &ClassExpr) -> SupportBounds {
        let nf = normalize_logged(e, &mut RuleLog::new());
        support_bounds(&nf)
    }

    /// A reason `nf ≠ ⟨0⟩` follows from stated facts, if one is known.
    pub fn certainly_nonzero(&self, nf: &NormalForm) -> Option<String> {
        certainly_nonzero(nf)
    }

    pub fn is_zero(&self, e: &ClassExpr) -> Tri {
        let mut log = RuleLog::new();
        let (nf, cites) = self.assumed_form(e, &mut log);
        if nf.is_zero() {
            return Tri::holds(rule_citations(&log)).with(cites);
        }
        match certainly_nonzero(&nf) {
            Some(why) => Tri::fails([why]).with(cites),
            None => Tri::open([format!("no rule decides whether {nf} is ⟨0⟩")]),
        }
    }

    pub fn eq(&self, a: &ClassExpr, b: &ClassExpr) -> Tri {
        let mut log = RuleLog::new();
        let na = normalize_logged(a, &mut log);
        let nb = normalize_logged(b, &mut log);
        if na == nb {
            let mut prov = vec![format!("normal forms coincide: {na}")];
            prov.extend(rule_citations(&log));
            return Tri::holds(prov);
        }
        let mut log = RuleLog::new();
        let (sa, ca) = self.assumed_form(a, &mut log);
        let (sb, cb) = self.assumed_form(b, &mut log);
        if sa == sb {
            let mut prov: Vec<String> = ca;
            prov.extend(cb.into_iter().filter(|c| !prov.contains(c)).collect::<Vec<_>>());
            prov.push(format!("normal forms coincide under assumptions: {sa}"));
            prov.extend(rule_citations(&log));
            return Tri::holds(prov);
        }
        let ab = self.leq(a, b);
        let ba = self.leq(b, a);
        match (ab.value(), ba.value()) {
            (_, _) if ab.is_fails() => ab,
            (_, _) if ba.is_fails() => ba,
            (super::TriValue::Holds, super::TriValue::Holds) => ab.with(ba.provenance().to_vec()),
            _ => Tri::open([format!(
                "no rule or witness decides ⟨{a}⟩ = ⟨{b}⟩"
            )]),
        }
    }

    pub fn leq(&self, a: &ClassExpr, b: &ClassExpr) -> Tri {
        let mut log = RuleLog::new();
        let na = normalize_logged(a, &mut log);
        let nb = normalize_logged(b, &mut log);
        let mut order = RuleLog::new();
        if na.leq_logged(&nb, &mut order) {
            return Tri::holds(order_provenance(&na, &nb, &order));
        }
        let mut log = RuleLog::new();
        let (sa, ca) = self.assumed_form(a, &mut log);
        let (sb, cb) = self.assumed_form(b, &mut log);
        let mut assumed = ca;
        assumed.extend(cb.into_iter().filter(|c| !assumed.contains(c)).collect::<Vec<_>>());
        let mut order = RuleLog::new();
        if sa.leq_logged(&sb, &mut order) {
            return Tri::holds(order_provenance(&sa, &sb, &order)).with(assumed);
        }
        if let Some(w) = separating_witness(&sa, &sb) {
            return Tri::fails(w).with(assumed);
        }
        Tri::open([format!("no rule or witness decides ⟨{a}⟩ ≤ ⟨{b}⟩")])
    }

    /// Nonzero with `e ∧ e = 0`.
    pub fn is_square_zero(&self, e: &ClassExpr) -> Tri {
        let zero = ClassExpr::zero();
        let square = self.eq(&ClassExpr::smash(e.clone(), e.clone()), &zero);
        let nonzero = !self.eq(e, &zero);
        if nonzero.is_fails() {
            return Tri::fails(["⟨0⟩ is excluded from square-zero objects by definition"])
                .with(nonzero.provenance().to_vec());
        }
        square.and(nonzero)
    }

    /// `⟨e ∧ e⟩ = ⟨e⟩`.
    pub fn in_dl(&self, e: &ClassExpr) -> Tri {
        self.eq(&ClassExpr::smash(e.clone(), e.clone()), e)
    }
}

fn order_provenance(a: &NormalForm, b: &NormalForm, order: &RuleLog) -> Vec<String> {
    let mut prov = vec![format!("each join term of {a} lies below {b}")];
    prov.extend(rule_citations(order));
    prov
}

pub fn support_bounds(nf: &NormalForm) -> SupportBounds {
    // lower: indices certified by K(i) ∧ term reducing to K(i) ≠ 0
    let lower = nf
        .monomials()
        .iter()
        .fold(nf.k_family().clone(), |acc, m| acc.union(&m.k_support()));
    // upper: indices where no factor forces K(i) ∧ term = 0
    let upper = nf.monomials().iter().fold(nf.k_family().clone(), |acc, m| {
        let possible = m
            .factors()
            .iter()
            .fold(FinCofSet::all(), |s, g| s.intersect(&g.support()));
        acc.union(&possible)
    });
    SupportBounds { lower, upper }
}

fn monomial_nonzero(m: &Monomial) -> Option<String> {
    if m.is_unit() {
        return Some("S^0 ≠ 0".into());
    }
    if let Some(i) = m.k_support().least() {
        return Some(format!("K({i}) ∧ {m} = K({i}) ≠ 0 ({})", RuleId::OrderKBelow.name()));
    }
    match m.factors() {
        [Generator::HFp] => return Some("HF_p is a nonzero ring spectrum".into()),
        [Generator::I] => return Some("I ≠ 0 since F(n)∧I ≠ 0 for all n".into()),
        _ => {}
    }
    let f = m.factors().iter().find_map(|g| match g {
        Generator::F(n) => Some(*n),
        _ => None,
    });
    let base: Vec<Generator> = match f {
        Some(n) => vec![Generator::F(n), Generator::I],
        None => vec![Generator::I],
    };
    let base = Monomial::from_factors(&base, &mut RuleLog::new())?;
    if base.leq(m, &mut RuleLog::new()) {
        return Some(format!("F(n)∧I ≠ 0 for all n, and ⟨{base}⟩ ≤ ⟨{m}⟩"));
    }
    None
}

pub fn certainly_nonzero(nf: &NormalForm) -> Option<String> {
    if let Some(i) = nf.k_family().least() {
        return Some(format!("K({i}) ≠ 0"));
    }
    nf.monomials().iter().find_map(monomial_nonzero)
}

fn witness_candidates(a: &NormalForm, b: &NormalForm) -> Vec<Generator> {
    let mut out = Vec::new();
    let diff = support_bounds(a).lower.difference(&support_bounds(b).upper);
    if let Some(i) = diff.least() {
        out.push(Generator::K(i));
    }
    out.extend([Generator::Sphere, Generator::HFp, Generator::I, Generator::BP]);
    let mut indices: BTreeSet<u32> = BTreeSet::new();
    for nf in [a, b] {
        for m in nf.monomials() {
            indices.extend(m.factors().iter().filter_map(|g| g.index()));
        }
        if let Some(set) = nf.k_family().members() {
            indices.extend(set.iter().copied());
        } else {
            indices.extend(nf.k_family().complement().elements().iter().copied());
        }
    }
    for n in indices.into_iter().take(16) {
        out.extend([Generator::K(n), Generator::T(n), Generator::F(n)]);
    }
    out
}

/// A generator `W` with `W ∧ b = 0` and `W ∧ a` certainly nonzero.
fn separating_witness(a: &NormalForm, b: &NormalForm) -> Option<Vec<String>> {
    for w in witness_candidates(a, b) {
        let mut log = RuleLog::new();
        let wn = NormalForm::generator(w, &mut log);
        if !wn.smash_logged(b, &mut log).is_zero() {
            continue;
        }
        let wa = wn.smash_logged(a, &mut RuleLog::new());
        if let Some(why) = certainly_nonzero(&wa) {
            let mut prov = vec![format!(
                "witness {w}: {w} ∧ ({b}) = 0 while {w} ∧ ({a}) ≠ 0"
            )];
            prov.push(why);
            prov.extend(rule_citations(&log));
            return Some(prov);
        }
    }
    None
}
