use std::fmt;

use serde_json::{json, Value};

use super::ConjectureError;
use crate::class::{normalize_traced, ClassExpr, Generator, RuleLog};

/// `⟨lhs⟩ = ⟨rhs⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub lhs: ClassExpr,
    pub rhs: ClassExpr,
}

impl Equation {
    pub fn new(lhs: impl Into<ClassExpr>, rhs: impl Into<ClassExpr>) -> Self {
        Equation {
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}⟩ = ⟨{}⟩", self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepKind {
    Hypothesis,
    /// Smash both sides of one premise with a generator on the left.
    SmashCongruence(Generator),
    /// Join the premises side by side.
    JoinCongruence,
    /// Replace both sides of one premise by their normal forms.
    Normalize,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepKind::Hypothesis => f.write_str("hypothesis"),
            StepKind::SmashCongruence(g) => write!(f, "smash with {g}"),
            StepKind::JoinCongruence => f.write_str("join"),
            StepKind::Normalize => f.write_str("normalize"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub kind: StepKind,
    /// Indices of earlier steps.
    pub premises: Vec<usize>,
    pub result: Equation,
    pub lhs_rules: RuleLog,
    pub rhs_rules: RuleLog,
}

/// A replayable equational derivation; the last step is the conclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub steps: Vec<Step>,
}

fn rule_names(log: &RuleLog) -> Vec<&'static str> {
    log.iter().map(|r| r.name()).collect()
}

impl Derivation {
    pub fn hypotheses(&self) -> impl Iterator<Item = &Equation> {
        self.steps
            .iter()
            .filter(|s| s.kind == StepKind::Hypothesis)
            .map(|s| &s.result)
    }

    pub fn conclusion(&self) -> &Equation {
        &self.steps.last().expect("derivations are never empty").result
    }

    /// Every rule the normalization steps used.
    pub fn rules(&self) -> RuleLog {
        self.steps
            .iter()
            .flat_map(|s| s.lhs_rules.iter().chain(&s.rhs_rules))
            .copied()
            .collect()
    }

    /// Rechecks each step against its premises and the rule table.
    pub fn replay(&self) -> Result<(), ConjectureError> {
        if self.steps.is_empty() {
            return Err(ConjectureError::Replay(0, "empty derivation".into()));
        }
        for (k, step) in self.steps.iter().enumerate() {
            let bad = |why: String| Err(ConjectureError::Replay(k, why));
            if step.premises.iter().any(|&p| p >= k) {
                return bad("premise does not precede the step".into());
            }
            let prem: Vec<&Equation> = step.premises.iter().map(|&p| &self.steps[p].result).collect();
            let mut lhs_rules = RuleLog::new();
            let mut rhs_rules = RuleLog::new();
            let expected = match &step.kind {
                StepKind::Hypothesis => {
                    if !prem.is_empty() {
                        return bad("hypotheses take no premises".into());
                    }
                    step.result.clone()
                }
                StepKind::SmashCongruence(g) => {
                    let [p] = prem.as_slice() else {
                        return bad("smash congruence takes one premise".into());
                    };
                    Equation::new(
                        ClassExpr::smash(*g, p.lhs.clone()),
                        ClassExpr::smash(*g, p.rhs.clone()),
                    )
                }
                StepKind::JoinCongruence => {
                    if prem.is_empty() {
                        return bad("join congruence needs premises".into());
                    }
                    Equation::new(
                        ClassExpr::wedge_all(prem.iter().map(|p| p.lhs.clone())),
                        ClassExpr::wedge_all(prem.iter().map(|p| p.rhs.clone())),
                    )
                }
                StepKind::Normalize => {
                    let [p] = prem.as_slice() else {
                        return bad("normalization takes one premise".into());
                    };
                    let (l, lr) = normalize_traced(&p.lhs);
                    let (r, rr) = normalize_traced(&p.rhs);
                    lhs_rules = lr;
                    rhs_rules = rr;
                    Equation::new(l.to_expr(), r.to_expr())
                }
            };
            if expected != step.result {
                return bad(format!("expected {expected}, recorded {}", step.result));
            }
            if lhs_rules != step.lhs_rules || rhs_rules != step.rhs_rules {
                return bad("recorded rule citations differ from the rule table".into());
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.steps
                .iter()
                .enumerate()
                .map(|(k, s)| {
                    json!({
                        "step": k,
                        "kind": s.kind.to_string(),
                        "premises": s.premises,
                        "result": s.result.to_string(),
                        "lhs_rules": rule_names(&s.lhs_rules),
                        "rhs_rules": rule_names(&s.rhs_rules),
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.steps.iter().enumerate() {
            write!(f, "{k:>3}. {}  [{}", s.result, s.kind)?;
            if !s.premises.is_empty() {
                let ps: Vec<String> = s.premises.iter().map(|p| p.to_string()).collect();
                write!(f, " of {}", ps.join(", "))?;
            }
            f.write_str("]")?;
            for (side, log) in [("left", &s.lhs_rules), ("right", &s.rhs_rules)] {
                if !log.is_empty() {
                    write!(f, "\n       {side}: {}", rule_names(log).join(", "))?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

struct Builder {
    steps: Vec<Step>,
}

impl Builder {
    fn push(&mut self, kind: StepKind, premises: Vec<usize>, result: Equation) -> usize {
        self.push_logged(kind, premises, result, RuleLog::new(), RuleLog::new())
    }

    fn push_logged(
        &mut self,
        kind: StepKind,
        premises: Vec<usize>,
        result: Equation,
        lhs_rules: RuleLog,
        rhs_rules: RuleLog,
    ) -> usize {
        self.steps.push(Step {
            kind,
            premises,
            result,
            lhs_rules,
            rhs_rules,
        });
        self.steps.len() - 1
    }
}

/// From `⟨T(0) ∨ … ∨ T(n)⟩ = ⟨K(0) ∨ … ∨ K(n)⟩`, smash with `T(i)` and
/// normalize to reach `⟨T(i)⟩ = ⟨K(i)⟩`.
pub fn derive_tc1_from_tc2(n: u32, i: u32) -> Result<Derivation, ConjectureError> {
    if i > n {
        return Err(ConjectureError::IndexOutOfRange { i, n });
    }
    let mut b = Builder { steps: Vec::new() };
    let h = b.push(
        StepKind::Hypothesis,
        vec![],
        Equation::new(ClassExpr::telescope_join(n), ClassExpr::k_join(n)),
    );
    let t = Generator::T(i);
    let s = b.push(
        StepKind::SmashCongruence(t),
        vec![h],
        Equation::new(
            ClassExpr::smash(t, ClassExpr::telescope_join(n)),
            ClassExpr::smash(t, ClassExpr::k_join(n)),
        ),
    );
    let (l, lr) = normalize_traced(&b.steps[s].result.lhs);
    let (r, rr) = normalize_traced(&b.steps[s].result.rhs);
    let target = Equation::new(Generator::T(i), Generator::K(i));
    let result = Equation::new(l.to_expr(), r.to_expr());
    if result != target {
        return Err(ConjectureError::Derivation(format!(
            "normalization reached {result}, not {target}"
        )));
    }
    b.push_logged(StepKind::Normalize, vec![s], result, lr, rr);
    Ok(Derivation { steps: b.steps })
}

/// From `⟨T(i)⟩ = ⟨K(i)⟩` for every `i ≤ n`, join to reach
/// `⟨T(0) ∨ … ∨ T(n)⟩ = ⟨K(0) ∨ … ∨ K(n)⟩`.
pub fn derive_tc2_from_tc1s(n: u32, hypotheses: &[u32]) -> Result<Derivation, ConjectureError> {
    let missing: Vec<u32> = (0..=n).filter(|i| !hypotheses.contains(i)).collect();
    if !missing.is_empty() {
        return Err(ConjectureError::IncompleteHypotheses { n, missing });
    }
    let mut b = Builder { steps: Vec::new() };
    let hyps: Vec<usize> = (0..=n)
        .map(|i| {
            b.push(
                StepKind::Hypothesis,
                vec![],
                Equation::new(Generator::T(i), Generator::K(i)),
            )
        })
        .collect();
    b.push(
        StepKind::JoinCongruence,
        hyps,
        Equation::new(ClassExpr::telescope_join(n), ClassExpr::k_join(n)),
    );
    Ok(Derivation { steps: b.steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::RuleId;

    #[test]
    fn tc1_from_tc2_examples() {
        let d = derive_tc1_from_tc2(3, 1).unwrap();
        assert_eq!(d.conclusion(), &Equation::new(Generator::T(1), Generator::K(1)));
        let last = d.steps.last().unwrap();
        assert!(last.lhs_rules.contains(&RuleId::SmashTT));
        assert!(last.rhs_rules.contains(&RuleId::SmashTK));
        d.replay().unwrap();
        derive_tc1_from_tc2(0, 0).unwrap().replay().unwrap();
        derive_tc1_from_tc2(5, 5).unwrap().replay().unwrap();
        assert!(matches!(
            derive_tc1_from_tc2(2, 3),
            Err(ConjectureError::IndexOutOfRange { i: 3, n: 2 })
        ));
    }

    #[test]
    fn tc2_from_tc1s_examples() {
        let d = derive_tc2_from_tc1s(2, &[0, 1, 2]).unwrap();
        assert_eq!(d.hypotheses().count(), 3);
        d.replay().unwrap();
        assert_eq!(derive_tc2_from_tc1s(0, &[0]).unwrap().steps.len(), 2);
        assert!(matches!(
            derive_tc2_from_tc1s(4, &[0, 1, 2, 4]),
            Err(ConjectureError::IncompleteHypotheses { missing, .. }) if missing == vec![3]
        ));
    }

    #[test]
    fn tampered_trace_is_rejected() {
        let mut d = derive_tc1_from_tc2(3, 2).unwrap();
        d.steps[2].lhs_rules.insert(RuleId::SmashFF);
        assert!(d.replay().is_err());
        let mut d = derive_tc1_from_tc2(3, 2).unwrap();
        d.steps[2].result.rhs = ClassExpr::gen(Generator::K(3));
        assert!(d.replay().is_err());
    }
}
