use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriValue {
    Holds,
    Fails,
    Open,
}

impl fmt::Display for TriValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriValue::Holds => "HOLDS",
            TriValue::Fails => "FAILS",
            TriValue::Open => "OPEN",
        })
    }
}

/// A three-valued verdict with the facts that support it.
///
/// `Holds` and `Fails` always carry at least one provenance entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tri {
    value: TriValue,
    provenance: Vec<String>,
}

impl Tri {
    fn decided(value: TriValue, provenance: Vec<String>) -> Self {
        assert!(
            !provenance.is_empty(),
            "a decided verdict needs at least one provenance entry"
        );
        Tri { value, provenance }
    }

    pub fn holds<S: Into<String>>(provenance: impl IntoIterator<Item = S>) -> Self {
        Self::decided(TriValue::Holds, provenance.into_iter().map(Into::into).collect())
    }

    pub fn fails<S: Into<String>>(provenance: impl IntoIterator<Item = S>) -> Self {
        Self::decided(TriValue::Fails, provenance.into_iter().map(Into::into).collect())
    }

    pub fn open<S: Into<String>>(notes: impl IntoIterator<Item = S>) -> Self {
        Tri {
            value: TriValue::Open,
            provenance: notes.into_iter().map(Into::into).collect(),
        }
    }

    pub fn value(&self) -> TriValue {
        self.value
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    pub fn is_holds(&self) -> bool {
        self.value == TriValue::Holds
    }

    pub fn is_fails(&self) -> bool {
        self.value == TriValue::Fails
    }

    pub fn is_open(&self) -> bool {
        self.value == TriValue::Open
    }

    /// Appends provenance entries, keeping order and dropping repeats.
    pub fn with<S: Into<String>>(mut self, more: impl IntoIterator<Item = S>) -> Self {
        for p in more {
            let p = p.into();
            if !self.provenance.contains(&p) {
                self.provenance.push(p);
            }
        }
        self
    }

    /// Kleene conjunction; a `Fails` operand supplies the provenance.
    pub fn and(self, other: Tri) -> Tri {
        match (self.value, other.value) {
            (TriValue::Fails, _) => self,
            (_, TriValue::Fails) => other,
            (TriValue::Holds, TriValue::Holds) => self.with(other.provenance),
            (TriValue::Open, _) => self.with(other.provenance),
            (_, TriValue::Open) => other.with(self.provenance),
        }
    }

    /// Kleene disjunction; a `Holds` operand supplies the provenance.
    pub fn or(self, other: Tri) -> Tri {
        !(!self).and(!other)
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)?;
        for p in &self.provenance {
            write!(f, "\n  - {p}")?;
        }
        Ok(())
    }
}

/// Kleene negation.
impl std::ops::Not for Tri {
    type Output = Tri;

    fn not(self) -> Tri {
        let value = match self.value {
            TriValue::Holds => TriValue::Fails,
            TriValue::Fails => TriValue::Holds,
            TriValue::Open => TriValue::Open,
        };
        Tri {
            value,
            provenance: self.provenance,
        }
    }
}
