use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::lattice::FinCofSet;

/// A named Bousfield class.
///
/// The derived ordering (variant rank first, then index) is the canonical
/// factor order used by normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// ⟨0⟩.
    Zero,
    /// ⟨S^0⟩, the top class.
    Sphere,
    /// A generic finite spectrum of type n.
    F(u32),
    /// The telescope of a v_n self-map on a type n spectrum.
    T(u32),
    /// Morava K-theory.
    K(u32),
    /// Johnson–Wilson E(n), with ⟨E(n)⟩ = ⟨K(0) ∨ … ∨ K(n)⟩.
    E(u32),
    /// The wedge of all Morava K-theories.
    Q,
    BP,
    HFp,
    /// The Brown–Comenetz dual of the sphere.
    I,
}

impl Generator {
    pub fn index(self) -> Option<u32> {
        match self {
            Generator::F(n) | Generator::T(n) | Generator::K(n) | Generator::E(n) => Some(n),
            _ => None,
        }
    }

    /// `{i | g ∧ K(i) ≠ 0}`.
    pub fn support(self) -> FinCofSet {
        match self {
            Generator::Zero | Generator::HFp | Generator::I => FinCofSet::empty(),
            Generator::Sphere | Generator::Q | Generator::BP => FinCofSet::all(),
            Generator::F(n) => FinCofSet::at_least(n),
            Generator::T(n) | Generator::K(n) => FinCofSet::singleton(n),
            Generator::E(n) => FinCofSet::range_to(n),
        }
    }

    /// Every generator in the fixed alphabet whose index (if any) is below
    /// `bound`.
    pub fn alphabet(bound: u32) -> Vec<Generator> {
        let mut out = vec![
            Generator::Zero,
            Generator::Sphere,
            Generator::Q,
            Generator::BP,
            Generator::HFp,
            Generator::I,
        ];
        for n in 0..bound {
            out.extend([
                Generator::F(n),
                Generator::T(n),
                Generator::K(n),
                Generator::E(n),
            ]);
        }
        out.sort();
        out
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Zero => f.write_str("0"),
            Generator::Sphere => f.write_str("S"),
            Generator::F(n) => write!(f, "F({n})"),
            Generator::T(n) => write!(f, "T({n})"),
            Generator::K(n) => write!(f, "K({n})"),
            Generator::E(n) => write!(f, "E({n})"),
            Generator::Q => f.write_str("Q"),
            Generator::BP => f.write_str("BP"),
            Generator::HFp => f.write_str("HFp"),
            Generator::I => f.write_str("I"),
        }
    }
}

/// Text that is not a generator name.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a generator: {0:?}")]
pub struct GeneratorParseError(pub String);

impl FromStr for Generator {
    type Err = GeneratorParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let simple = match t {
            "0" => Some(Generator::Zero),
            "S" => Some(Generator::Sphere),
            "Q" => Some(Generator::Q),
            "BP" => Some(Generator::BP),
            "HFp" => Some(Generator::HFp),
            "I" => Some(Generator::I),
            _ => None,
        };
        if let Some(g) = simple {
            return Ok(g);
        }
        let err = || GeneratorParseError(s.to_string());
        let (head, rest) = t.split_at(t.char_indices().nth(1).map_or(t.len(), |(i, _)| i));
        let inner = rest
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(err)?;
        let n: u32 = inner.trim().parse().map_err(|_| err())?;
        match head {
            "F" => Ok(Generator::F(n)),
            "T" => Ok(Generator::T(n)),
            "K" => Ok(Generator::K(n)),
            "E" => Ok(Generator::E(n)),
            _ => Err(err()),
        }
    }
}

impl Serialize for Generator {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Generator {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_kind_then_index() {
        let mut gens = vec![
            Generator::I,
            Generator::K(1),
            Generator::F(3),
            Generator::K(0),
            Generator::Sphere,
        ];
        gens.sort();
        assert_eq!(
            gens,
            vec![
                Generator::Sphere,
                Generator::F(3),
                Generator::K(0),
                Generator::K(1),
                Generator::I
            ]
        );
    }

    #[test]
    fn text_round_trip() {
        for g in Generator::alphabet(3) {
            assert_eq!(g.to_string().parse::<Generator>().unwrap(), g);
        }
        assert!("F(x)".parse::<Generator>().is_err());
        assert!("X(1)".parse::<Generator>().is_err());
        let json = serde_json::to_string(&Generator::K(2)).unwrap();
        assert_eq!(json, "\"K(2)\"");
    }

    #[test]
    fn supports() {
        assert_eq!(Generator::E(2).support(), FinCofSet::finite([0, 1, 2]));
        assert_eq!(Generator::F(2).support(), FinCofSet::cofinite([0, 1]));
        assert!(Generator::HFp.support().is_empty());
    }
}
