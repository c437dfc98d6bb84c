use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use super::rules::{saturate, RuleId};
use super::{ClassExpr, Generator};
use crate::lattice::FinCofSet;

/// Rules consulted while building a normal form or deciding an order.
pub type RuleLog = BTreeSet<RuleId>;

/// A saturated smash product of generators drawn from `F(n ≥ 1)`, `T(n)`,
/// `BP`, `HFp` and `I`. The empty product is `S^0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    factors: Vec<Generator>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialStatus {
    KnownAtom(Generator),
    Opaque,
}

fn atom_leq(a: Generator, b: Generator, log: &mut RuleLog) -> bool {
    use Generator::*;
    if a == b {
        return true;
    }
    let rule = match (a, b) {
        (T(n), F(m)) if m <= n => RuleId::OrderTF,
        (F(m), F(n)) if m >= n => RuleId::OrderFF,
        (I, HFp) => RuleId::OrderIHFp,
        _ => return false,
    };
    log.insert(rule);
    true
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial {
            factors: Vec::new(),
        }
    }

    /// Saturates `factors`; `None` when the product is ⟨0⟩.
    pub(crate) fn from_factors(factors: &[Generator], log: &mut RuleLog) -> Option<Self> {
        let sat = saturate(factors);
        log.extend(sat.trace.iter().copied());
        sat.factors.map(|mut fs| {
            fs.retain(|g| *g != Generator::Sphere);
            Monomial { factors: fs }
        })
    }

    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn status(&self) -> MonomialStatus {
        match self.factors.as_slice() {
            [] => MonomialStatus::KnownAtom(Generator::Sphere),
            [g] => MonomialStatus::KnownAtom(*g),
            _ => MonomialStatus::Opaque,
        }
    }

    /// `{i | K(i) ∧ m = K(i)}`: the intersection of the factor supports.
    pub fn k_support(&self) -> FinCofSet {
        self.factors
            .iter()
            .fold(FinCofSet::all(), |acc, g| acc.intersect(&g.support()))
    }

    /// Rule-certain `self ≤ other`: every factor of `other` lies above some
    /// factor of `self`.
    pub fn leq(&self, other: &Monomial, log: &mut RuleLog) -> bool {
        if other.is_unit() {
            log.insert(RuleId::OrderBounds);
            return true;
        }
        let mut local = RuleLog::new();
        let ok = other
            .factors
            .iter()
            .all(|&b| self.factors.iter().any(|&a| atom_leq(a, b, &mut local)));
        if ok {
            if self.factors.len() > other.factors.len() {
                local.insert(RuleId::OrderSmashMonotone);
            }
            log.extend(local);
        }
        ok
    }

    pub fn to_expr(&self) -> ClassExpr {
        ClassExpr::smash_all(self.factors.iter().copied())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_expr())
    }
}

/// Canonical join form: a family of Morava K-theories plus a set of
/// monomials, absorption-reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    k_family: FinCofSet,
    monomials: BTreeSet<Monomial>,
}

impl NormalForm {
    pub fn zero() -> Self {
        NormalForm {
            k_family: FinCofSet::empty(),
            monomials: BTreeSet::new(),
        }
    }

    pub fn unit() -> Self {
        NormalForm {
            k_family: FinCofSet::empty(),
            monomials: [Monomial::unit()].into_iter().collect(),
        }
    }

    /// `⋁_{i ∈ set} K(i)`.
    pub fn k_join(set: FinCofSet) -> Self {
        NormalForm {
            k_family: set,
            monomials: BTreeSet::new(),
        }
    }

    pub fn generator(g: Generator, log: &mut RuleLog) -> Self {
        match g {
            Generator::Zero => NormalForm::zero(),
            Generator::Sphere => NormalForm::unit(),
            Generator::F(0) => {
                log.insert(RuleId::FZeroIsSphere);
                NormalForm::unit()
            }
            Generator::K(n) => NormalForm::k_join(FinCofSet::singleton(n)),
            Generator::E(n) => {
                log.insert(RuleId::ExpandE);
                NormalForm::k_join(FinCofSet::range_to(n))
            }
            Generator::Q => {
                log.insert(RuleId::ExpandQ);
                NormalForm::k_join(FinCofSet::all())
            }
            g => NormalForm {
                k_family: FinCofSet::empty(),
                monomials: [Monomial { factors: vec![g] }].into_iter().collect(),
            },
        }
    }

    pub fn k_family(&self) -> &FinCofSet {
        &self.k_family
    }

    pub fn monomials(&self) -> &BTreeSet<Monomial> {
        &self.monomials
    }

    pub fn is_zero(&self) -> bool {
        self.k_family.is_empty() && self.monomials.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.k_family.is_empty()
            && self.monomials.len() == 1
            && self.monomials.iter().all(Monomial::is_unit)
    }

    /// `{i | K(i) ∧ self ≠ 0}`, read off the rule table.
    pub fn k_support(&self) -> FinCofSet {
        self.monomials
            .iter()
            .fold(self.k_family.clone(), |acc, m| acc.union(&m.k_support()))
    }

    pub fn smash_logged(&self, other: &NormalForm, log: &mut RuleLog) -> NormalForm {
        if self.is_zero() || other.is_zero() {
            log.insert(RuleId::ZeroAnnihilates);
            return NormalForm::zero();
        }
        if self.monomials.len() + usize::from(!self.k_family.is_empty()) > 1
            || other.monomials.len() + usize::from(!other.k_family.is_empty()) > 1
        {
            log.insert(RuleId::Distribute);
        }
        let mut k = self.k_family.intersect(&other.k_family);
        if !self.k_family.is_empty() && !other.k_family.is_empty() {
            log.insert(RuleId::SmashKK);
        }
        for (ks, ms) in [
            (&self.k_family, &other.monomials),
            (&other.k_family, &self.monomials),
        ] {
            if ks.is_empty() {
                continue;
            }
            for m in ms {
                k = k.union(&ks.intersect(&m.k_support()));
                log_k_interaction(m, log);
            }
        }
        let mut monomials = BTreeSet::new();
        for a in &self.monomials {
            for b in &other.monomials {
                let mut fs = a.factors.clone();
                fs.extend_from_slice(&b.factors);
                if let Some(m) = Monomial::from_factors(&fs, log) {
                    monomials.insert(m);
                }
            }
        }
        NormalForm {
            k_family: k,
            monomials,
        }
        .absorb(log)
    }

    pub fn wedge_logged(&self, other: &NormalForm, log: &mut RuleLog) -> NormalForm {
        let mut monomials = self.monomials.clone();
        monomials.extend(other.monomials.iter().cloned());
        NormalForm {
            k_family: self.k_family.union(&other.k_family),
            monomials,
        }
        .absorb(log)
    }

    /// Drops every join term that is rule-certainly below another one.
    fn absorb(self, log: &mut RuleLog) -> NormalForm {
        if self.monomials.iter().any(Monomial::is_unit) {
            if !self.is_unit() {
                log.insert(RuleId::Absorb);
                log.insert(RuleId::OrderBounds);
            }
            return NormalForm::unit();
        }
        let cover = self
            .monomials
            .iter()
            .fold(FinCofSet::empty(), |acc, m| acc.union(&m.k_support()));
        let k_family = self.k_family.difference(&cover);
        let mut removed = k_family != self.k_family;
        if removed {
            log.insert(RuleId::OrderKBelow);
        }
        let mut keep = BTreeSet::new();
        for m in &self.monomials {
            let dominated = self.monomials.iter().any(|other| {
                if other == m {
                    return false;
                }
                let mut scratch = RuleLog::new();
                if !m.leq(other, &mut scratch) {
                    return false;
                }
                let strict = !other.leq(m, &mut RuleLog::new());
                if strict || other < m {
                    log.extend(scratch);
                    true
                } else {
                    false
                }
            });
            if dominated {
                removed = true;
            } else {
                keep.insert(m.clone());
            }
        }
        if removed {
            log.insert(RuleId::Absorb);
        }
        NormalForm {
            k_family,
            monomials: keep,
        }
    }

    /// Rule-certain `self ≤ other`.
    pub fn leq_logged(&self, other: &NormalForm, log: &mut RuleLog) -> bool {
        if self.is_zero() || other.monomials.iter().any(Monomial::is_unit) {
            log.insert(RuleId::OrderBounds);
            return true;
        }
        let mut local = RuleLog::new();
        let cover = other
            .monomials
            .iter()
            .fold(other.k_family.clone(), |acc, m| acc.union(&m.k_support()));
        if !self.k_family.is_subset(&cover) {
            return false;
        }
        if !self.k_family.is_subset(&other.k_family) {
            local.insert(RuleId::OrderKBelow);
            for m in &other.monomials {
                if !self.k_family.intersect(&m.k_support()).is_empty() {
                    log_k_interaction(m, &mut local);
                }
            }
        }
        for m in &self.monomials {
            if !other.monomials.iter().any(|o| m.leq(o, &mut local)) {
                return false;
            }
        }
        log.extend(local);
        true
    }

    /// The normal form as an expression; normalizing it returns `self`.
    ///
    /// A cofinite K-family `ℕ∖X` is written `Q ^ F(max X + 1)` joined with
    /// the missing low K(i).
    pub fn to_expr(&self) -> ClassExpr {
        let mut terms: Vec<ClassExpr> = Vec::new();
        match self.k_family.members() {
            Some(set) => terms.extend(set.iter().map(|&i| ClassExpr::gen(Generator::K(i)))),
            None => {
                let excluded = self.k_family.complement();
                match excluded.elements().iter().next_back() {
                    None => terms.push(ClassExpr::gen(Generator::Q)),
                    Some(&top) => {
                        terms.extend(
                            (0..top)
                                .filter(|&i| self.k_family.contains(i))
                                .map(|i| ClassExpr::gen(Generator::K(i))),
                        );
                        terms.push(ClassExpr::smash(Generator::Q, Generator::F(top + 1)));
                    }
                }
            }
        }
        terms.extend(self.monomials.iter().map(Monomial::to_expr));
        ClassExpr::wedge_all(terms)
    }

    /// Canonical JSON: the K-family and the sorted monomials as sorted
    /// factor lists.
    pub fn to_json(&self) -> Value {
        let monomials: Vec<Vec<String>> = self
            .monomials
            .iter()
            .map(|m| m.factors.iter().map(|g| g.to_string()).collect())
            .collect();
        json!({
            "k_family": self.k_family.to_string(),
            "monomials": monomials,
            "text": self.to_string(),
            "zero": self.is_zero(),
        })
    }
}

fn log_k_interaction(m: &Monomial, log: &mut RuleLog) {
    for g in &m.factors {
        log.insert(match g {
            Generator::F(_) => RuleId::SmashFK,
            Generator::T(_) => RuleId::SmashTK,
            Generator::BP => RuleId::SmashKBP,
            Generator::HFp => RuleId::SmashKHFp,
            Generator::I => RuleId::SmashKI,
            _ => RuleId::SphereUnit,
        });
    }
    if m.is_unit() {
        log.insert(RuleId::SphereUnit);
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_expr())
    }
}

pub fn normalize_logged(e: &ClassExpr, log: &mut RuleLog) -> NormalForm {
    match e {
        ClassExpr::Gen(g) => NormalForm::generator(*g, log),
        ClassExpr::Smash(a, b) => {
            let a = normalize_logged(a, log);
            let b = normalize_logged(b, log);
            a.smash_logged(&b, log)
        }
        ClassExpr::Wedge(a, b) => {
            let a = normalize_logged(a, log);
            let b = normalize_logged(b, log);
            a.wedge_logged(&b, log)
        }
    }
}

pub fn normalize(e: &ClassExpr) -> NormalForm {
    normalize_logged(e, &mut RuleLog::new())
}

/// Normal form together with every rule consulted.
pub fn normalize_traced(e: &ClassExpr) -> (NormalForm, RuleLog) {
    let mut log = RuleLog::new();
    let nf = normalize_logged(e, &mut log);
    (nf, log)
}

pub fn smash(a: &NormalForm, b: &NormalForm) -> NormalForm {
    a.smash_logged(b, &mut RuleLog::new())
}

pub fn wedge(a: &NormalForm, b: &NormalForm) -> NormalForm {
    a.wedge_logged(b, &mut RuleLog::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn nf(e: ClassExpr) -> NormalForm {
        normalize(&e)
    }

    fn g(x: Generator) -> ClassExpr {
        ClassExpr::gen(x)
    }

    #[test]
    fn smash_examples() {
        assert!(nf(ClassExpr::smash(T(2), K(3))).is_zero());
        assert_eq!(nf(ClassExpr::smash(Sphere, F(4))), nf(g(F(4))));
        assert_eq!(nf(ClassExpr::smash(E(2), T(1))), nf(g(K(1))));
        assert_eq!(nf(ClassExpr::smash(F(3), T(5))), nf(g(T(5))));
        assert!(nf(ClassExpr::smash(I, I)).is_zero());
        assert!(nf(ClassExpr::smash(BP, I)).is_zero());
        let lhs = nf(ClassExpr::wedge(K(1), K(2)));
        assert_eq!(smash(&lhs, &nf(g(T(2)))), nf(g(K(2))));
        assert!(smash(&nf(g(F(2))), &NormalForm::zero()).is_zero());
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(nf(ClassExpr::wedge(K(1), K(1))), nf(g(K(1))));
        let e = nf(ClassExpr::wedge(K(1), E(2)));
        assert_eq!(e.k_family(), &FinCofSet::finite([0, 1, 2]));
        assert!(e.monomials().is_empty());
        assert_eq!(nf(ClassExpr::wedge(T(0), Zero)), nf(g(T(0))));
    }

    #[test]
    fn absorption_by_order() {
        assert_eq!(nf(ClassExpr::wedge(F(1), F(3))), nf(g(F(1))));
        assert_eq!(nf(ClassExpr::wedge(T(4), F(2))), nf(g(F(2))));
        assert_eq!(nf(ClassExpr::wedge(K(3), F(2))), nf(g(F(2))));
        assert_eq!(nf(ClassExpr::wedge(I, HFp)), nf(g(HFp)));
        assert!(nf(ClassExpr::wedge(BP, F(0))).is_unit());
    }

    #[test]
    fn opaque_products_survive() {
        let e = nf(ClassExpr::smash(BP, F(2)));
        assert_eq!(e.monomials().len(), 1);
        let m = e.monomials().iter().next().unwrap();
        assert_eq!(m.status(), MonomialStatus::Opaque);
        assert_eq!(e.k_support(), FinCofSet::at_least(2));
    }

    #[test]
    fn to_expr_round_trips() {
        for e in [
            g(Q),
            ClassExpr::smash(Q, F(3)),
            ClassExpr::wedge(ClassExpr::smash(Q, F(3)), K(1)),
            ClassExpr::wedge(ClassExpr::smash(BP, HFp), E(1)),
            g(Zero),
            g(Sphere),
        ] {
            let n = nf(e);
            assert_eq!(normalize(&n.to_expr()), n, "{n}");
        }
    }

    #[test]
    fn cofinite_family_text() {
        let n = nf(ClassExpr::wedge(ClassExpr::smash(Q, F(3)), K(1)));
        assert_eq!(n.to_string(), "K(1) v Q ^ F(3)");
        assert_eq!(n.k_family(), &FinCofSet::cofinite([0, 2]));
    }

    #[test]
    fn traced_rules() {
        let (_, log) = normalize_traced(&ClassExpr::smash(E(2), T(1)));
        assert!(log.contains(&RuleId::ExpandE));
        assert!(log.contains(&RuleId::SmashTK));
    }

    #[test]
    fn json_is_canonical() {
        let a = nf(ClassExpr::wedge(ClassExpr::smash(HFp, BP), F(2)));
        let b = nf(ClassExpr::wedge(F(2), ClassExpr::smash(BP, HFp)));
        assert_eq!(a.to_json().to_string(), b.to_json().to_string());
        assert_eq!(a.to_json()["monomials"], json!([["F(2)"], ["BP", "HFp"]]));
    }
}
