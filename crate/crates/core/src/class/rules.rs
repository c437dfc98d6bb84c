//! The smash-rule table and its saturation engine.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Generator;

/// Identifies one fact used during normalization or an order decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleId {
    ZeroAnnihilates,
    SphereUnit,
    FZeroIsSphere,
    SmashFF,
    SmashFT,
    SmashFK,
    SmashTT,
    SmashTK,
    SmashKK,
    SmashKBP,
    SmashKHFp,
    SmashTHFp,
    SmashTI,
    SmashKI,
    SmashBPI,
    SmashII,
    SmashHFpI,
    RingIdempotent,
    ExpandE,
    ExpandQ,
    KJoinPair,
    Distribute,
    Absorb,
    OrderBounds,
    OrderTF,
    OrderFF,
    OrderIHFp,
    OrderSmashMonotone,
    OrderKBelow,
}

impl RuleId {
    pub const ALL: [RuleId; 29] = [
        RuleId::ZeroAnnihilates,
        RuleId::SphereUnit,
        RuleId::FZeroIsSphere,
        RuleId::SmashFF,
        RuleId::SmashFT,
        RuleId::SmashFK,
        RuleId::SmashTT,
        RuleId::SmashTK,
        RuleId::SmashKK,
        RuleId::SmashKBP,
        RuleId::SmashKHFp,
        RuleId::SmashTHFp,
        RuleId::SmashTI,
        RuleId::SmashKI,
        RuleId::SmashBPI,
        RuleId::SmashII,
        RuleId::SmashHFpI,
        RuleId::RingIdempotent,
        RuleId::ExpandE,
        RuleId::ExpandQ,
        RuleId::KJoinPair,
        RuleId::Distribute,
        RuleId::Absorb,
        RuleId::OrderBounds,
        RuleId::OrderTF,
        RuleId::OrderFF,
        RuleId::OrderIHFp,
        RuleId::OrderSmashMonotone,
        RuleId::OrderKBelow,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::ZeroAnnihilates => "zero",
            RuleId::SphereUnit => "unit",
            RuleId::FZeroIsSphere => "type-0",
            RuleId::SmashFF => "F^F",
            RuleId::SmashFT => "F^T",
            RuleId::SmashFK => "F^K",
            RuleId::SmashTT => "T^T",
            RuleId::SmashTK => "T^K",
            RuleId::SmashKK => "K^K",
            RuleId::SmashKBP => "K^BP",
            RuleId::SmashKHFp => "K^HFp",
            RuleId::SmashTHFp => "T^HFp",
            RuleId::SmashTI => "T^I",
            RuleId::SmashKI => "K^I",
            RuleId::SmashBPI => "BP^I",
            RuleId::SmashII => "I^I",
            RuleId::SmashHFpI => "HFp^I",
            RuleId::RingIdempotent => "ring",
            RuleId::ExpandE => "expand-E",
            RuleId::ExpandQ => "expand-Q",
            RuleId::KJoinPair => "K-join",
            RuleId::Distribute => "distribute",
            RuleId::Absorb => "absorb",
            RuleId::OrderBounds => "bounds",
            RuleId::OrderTF => "T<=F",
            RuleId::OrderFF => "F<=F",
            RuleId::OrderIHFp => "I<=HFp",
            RuleId::OrderSmashMonotone => "smash-monotone",
            RuleId::OrderKBelow => "K-below",
        }
    }

    /// The mathematical statement the rule applies.
    pub fn statement(self) -> &'static str {
        match self {
            RuleId::ZeroAnnihilates => "⟨0⟩∧⟨X⟩ = ⟨0⟩",
            RuleId::SphereUnit => "⟨S^0⟩∧⟨X⟩ = ⟨X⟩",
            RuleId::FZeroIsSphere => "⟨F(0)⟩ = ⟨S^0⟩ (a type 0 finite spectrum generates all finite spectra)",
            RuleId::SmashFF => "⟨F(m)∧F(n)⟩ = ⟨F(max(m,n))⟩",
            RuleId::SmashFT => "⟨F(m)∧T(n)⟩ = ⟨T(n)⟩ for m ≤ n, ⟨0⟩ for m > n",
            RuleId::SmashFK => "⟨F(m)∧K(n)⟩ = ⟨K(n)⟩ for m ≤ n, ⟨0⟩ for m > n",
            RuleId::SmashTT => "⟨T(n)∧T(n)⟩ = ⟨T(n)⟩, ⟨T(m)∧T(n)⟩ = ⟨0⟩ for m ≠ n",
            RuleId::SmashTK => "⟨T(n)∧K(n)⟩ = ⟨K(n)⟩, ⟨T(m)∧K(n)⟩ = ⟨0⟩ for m ≠ n",
            RuleId::SmashKK => "⟨K(n)∧K(n)⟩ = ⟨K(n)⟩, ⟨K(m)∧K(n)⟩ = ⟨0⟩ for m ≠ n",
            RuleId::SmashKBP => "⟨K(n)∧BP⟩ = ⟨K(n)⟩ (K(n) is a BP-module)",
            RuleId::SmashKHFp => "K(n)∧HF_p = 0",
            RuleId::SmashTHFp => "T(n)∧HF_p = 0",
            RuleId::SmashTI => "T(n)∧I = 0",
            RuleId::SmashKI => "K(n)∧I = 0",
            RuleId::SmashBPI => "BP∧I = 0",
            RuleId::SmashII => "I∧I = 0",
            RuleId::SmashHFpI => "HF_p∧I = 0",
            RuleId::RingIdempotent => "a ring spectrum R is a retract of R∧R, so ⟨R∧R⟩ = ⟨R⟩",
            RuleId::ExpandE => "⟨E(n)⟩ = ⟨K(0)∨⋯∨K(n)⟩",
            RuleId::ExpandQ => "⟨Q⟩ = ⋁_i ⟨K(i)⟩",
            RuleId::KJoinPair => "pairs with E(n) or Q evaluated through their K(i) expansions",
            RuleId::Distribute => "smash distributes over wedge",
            RuleId::Absorb => "⟨X⟩∨⟨Y⟩ = ⟨Y⟩ when ⟨X⟩ ≤ ⟨Y⟩",
            RuleId::OrderBounds => "⟨0⟩ ≤ ⟨X⟩ ≤ ⟨S^0⟩",
            RuleId::OrderTF => "⟨T(n)⟩ ≤ ⟨F(m)⟩ for m ≤ n",
            RuleId::OrderFF => "⟨F(m)⟩ ≤ ⟨F(n)⟩ iff m ≥ n",
            RuleId::OrderIHFp => "⟨I⟩ ≤ ⟨HF_p⟩",
            RuleId::OrderSmashMonotone => "⟨X∧Y⟩ ≤ ⟨X⟩ and smash is monotone in each variable",
            RuleId::OrderKBelow => "⟨K(i)⟩ = ⟨K(i)∧X⟩ ≤ ⟨X⟩ whenever K(i)∧X reduces to K(i)",
        }
    }

    /// Rules that are consequences of stated facts rather than quotations
    /// of them.
    pub fn is_derived(self) -> bool {
        matches!(
            self,
            RuleId::SmashFF | RuleId::SmashKBP | RuleId::FZeroIsSphere | RuleId::KJoinPair
        )
    }

    /// Citation string for provenance lists.
    pub fn citation(self) -> String {
        let tag = if self.is_derived() { " [derived]" } else { "" };
        format!("{}: {}{}", self.name(), self.statement(), tag)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of reducing a factor pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reduct {
    Zero,
    Gen(Generator),
}

/// Looks up the pair table. `None` means the pair is irreducible.
pub fn reduce_pair(a: Generator, b: Generator) -> Option<(Reduct, RuleId)> {
    use Generator::*;
    use Reduct::Zero as Z;

    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    let g = Reduct::Gen;
    let hit = |cond: bool, keep: Generator, rule: RuleId| {
        Some((if cond { g(keep) } else { Z }, rule))
    };
    match (a, b) {
        (Zero, _) => Some((Z, RuleId::ZeroAnnihilates)),
        (Sphere, x) => Some((g(x), RuleId::SphereUnit)),
        (F(m), F(n)) => Some((g(F(m.max(n))), RuleId::SmashFF)),
        (F(m), T(n)) => hit(m <= n, T(n), RuleId::SmashFT),
        (F(m), K(n)) => hit(m <= n, K(n), RuleId::SmashFK),
        (T(m), T(n)) => hit(m == n, T(n), RuleId::SmashTT),
        (T(m), K(n)) => hit(m == n, K(n), RuleId::SmashTK),
        (T(m), E(n)) => hit(m <= n, K(m), RuleId::KJoinPair),
        (T(m), Q) => Some((g(K(m)), RuleId::KJoinPair)),
        (T(_), HFp) => Some((Z, RuleId::SmashTHFp)),
        (T(_), I) => Some((Z, RuleId::SmashTI)),
        (K(m), K(n)) => hit(m == n, K(n), RuleId::SmashKK),
        (K(m), E(n)) => hit(m <= n, K(m), RuleId::KJoinPair),
        (K(m), Q) => Some((g(K(m)), RuleId::KJoinPair)),
        (K(m), BP) => Some((g(K(m)), RuleId::SmashKBP)),
        (K(_), HFp) => Some((Z, RuleId::SmashKHFp)),
        (K(_), I) => Some((Z, RuleId::SmashKI)),
        (E(m), E(n)) if m == n => Some((g(E(n)), RuleId::RingIdempotent)),
        (E(m), E(n)) => Some((g(E(m.min(n))), RuleId::KJoinPair)),
        (E(n), Q) | (E(n), BP) => Some((g(E(n)), RuleId::KJoinPair)),
        (E(_), HFp) | (E(_), I) => Some((Z, RuleId::KJoinPair)),
        (Q, Q) | (Q, BP) => Some((g(Q), RuleId::KJoinPair)),
        (Q, HFp) | (Q, I) => Some((Z, RuleId::KJoinPair)),
        (BP, BP) => Some((g(BP), RuleId::RingIdempotent)),
        (BP, I) => Some((Z, RuleId::SmashBPI)),
        (HFp, HFp) => Some((g(HFp), RuleId::RingIdempotent)),
        (HFp, I) => Some((Z, RuleId::SmashHFpI)),
        (I, I) => Some((Z, RuleId::SmashII)),
        _ => None,
    }
}

/// Result of saturating a product of factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Saturated {
    /// Sorted surviving factors, or `None` when the product is ⟨0⟩.
    pub factors: Option<Vec<Generator>>,
    /// Rules in application order.
    pub trace: Vec<RuleId>,
}

/// Applies the pair table to a fixpoint. Factors are kept sorted and the
/// leftmost reducible pair `(i, j)` in lexicographic order is rewritten
/// first.
pub fn saturate(factors: &[Generator]) -> Saturated {
    let mut fs: Vec<Generator> = factors.to_vec();
    fs.sort();
    let mut trace = Vec::new();
    'outer: loop {
        for i in 0..fs.len() {
            for j in i + 1..fs.len() {
                if let Some((red, rule)) = reduce_pair(fs[i], fs[j]) {
                    trace.push(rule);
                    match red {
                        Reduct::Zero => {
                            return Saturated {
                                factors: None,
                                trace,
                            }
                        }
                        Reduct::Gen(g) => {
                            fs.remove(j);
                            fs[i] = g;
                            fs.sort();
                            continue 'outer;
                        }
                    }
                }
            }
        }
        break;
    }
    if fs == [Generator::Zero] {
        return Saturated {
            factors: None,
            trace,
        };
    }
    Saturated {
        factors: Some(fs),
        trace,
    }
}

/// Every saturated result reachable by choosing reducible pairs in any
/// order. A confluent table yields exactly one.
pub fn saturate_all_orders(factors: &[Generator]) -> BTreeSet<Option<Vec<Generator>>> {
    fn explore(
        fs: Vec<Generator>,
        memo: &mut HashMap<Vec<Generator>, BTreeSet<Option<Vec<Generator>>>>,
    ) -> BTreeSet<Option<Vec<Generator>>> {
        if let Some(hit) = memo.get(&fs) {
            return hit.clone();
        }
        let mut out = BTreeSet::new();
        let mut stuck = true;
        for i in 0..fs.len() {
            for j in i + 1..fs.len() {
                if let Some((red, _)) = reduce_pair(fs[i], fs[j]) {
                    stuck = false;
                    match red {
                        Reduct::Zero => {
                            out.insert(None);
                        }
                        Reduct::Gen(g) => {
                            let mut next = fs.clone();
                            next.remove(j);
                            next[i] = g;
                            next.sort();
                            out.extend(explore(next, memo));
                        }
                    }
                }
            }
        }
        if stuck {
            out.insert(if fs == [Generator::Zero] {
                None
            } else {
                Some(fs.clone())
            });
        }
        memo.insert(fs, out.clone());
        out
    }
    let mut fs = factors.to_vec();
    fs.sort();
    explore(fs, &mut HashMap::new())
}
