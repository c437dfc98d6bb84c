use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::class::{ClassExpr, Generator};

/// A modeled localized category, named by the class it localizes at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CategoryId {
    /// The p-local stable homotopy category itself.
    Ambient,
    /// Localization at `Q = ⋁ K(i)`.
    Harmonic,
    En(u32),
    Kn(u32),
    HFpLocal,
    ILocal,
    BPLocal,
}

impl CategoryId {
    /// The localizing class, when there is one.
    pub fn localizing_class(self) -> Option<Generator> {
        match self {
            CategoryId::Ambient => None,
            CategoryId::Harmonic => Some(Generator::Q),
            CategoryId::En(n) => Some(Generator::E(n)),
            CategoryId::Kn(n) => Some(Generator::K(n)),
            CategoryId::HFpLocal => Some(Generator::HFp),
            CategoryId::ILocal => Some(Generator::I),
            CategoryId::BPLocal => Some(Generator::BP),
        }
    }

    /// The category obtained by localizing at a single generator.
    pub fn for_generator(g: Generator) -> Option<CategoryId> {
        match g {
            Generator::Sphere => Some(CategoryId::Ambient),
            Generator::Q => Some(CategoryId::Harmonic),
            Generator::E(n) => Some(CategoryId::En(n)),
            Generator::K(n) => Some(CategoryId::Kn(n)),
            Generator::HFp => Some(CategoryId::HFpLocal),
            Generator::I => Some(CategoryId::ILocal),
            Generator::BP => Some(CategoryId::BPLocal),
            _ => None,
        }
    }

    pub fn for_expr(e: &ClassExpr) -> Option<CategoryId> {
        e.as_generator().and_then(Self::for_generator)
    }

    /// Harmonic, E(0..=max_n), K(0..=max_n), HFp, I and BP.
    pub fn shipped(max_n: u32) -> Vec<CategoryId> {
        let mut out = vec![CategoryId::Harmonic];
        out.extend((0..=max_n).map(CategoryId::En));
        out.extend((0..=max_n).map(CategoryId::Kn));
        out.extend([CategoryId::HFpLocal, CategoryId::ILocal, CategoryId::BPLocal]);
        out
    }
}

impl fmt::Display for CategoryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CategoryId::Ambient => f.write_str("ambient"),
            CategoryId::Harmonic => f.write_str("harmonic"),
            CategoryId::En(n) => write!(f, "E({n})"),
            CategoryId::Kn(n) => write!(f, "K({n})"),
            CategoryId::HFpLocal => f.write_str("HFp"),
            CategoryId::ILocal => f.write_str("I"),
            CategoryId::BPLocal => f.write_str("BP"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown category {0:?} (expected ambient, harmonic, E(n), K(n), HFp, I or BP)")]
pub struct CategoryParseError(pub String);

impl FromStr for CategoryId {
    type Err = CategoryParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let lower = t.to_ascii_lowercase();
        let named = match lower.as_str() {
            "ambient" | "s" | "spectra" => Some(CategoryId::Ambient),
            "harmonic" | "h" | "q" => Some(CategoryId::Harmonic),
            "hfp" | "hfp-local" => Some(CategoryId::HFpLocal),
            "i" | "i-local" => Some(CategoryId::ILocal),
            "bp" | "bp-local" => Some(CategoryId::BPLocal),
            _ => None,
        };
        if let Some(c) = named {
            return Ok(c);
        }
        let err = || CategoryParseError(s.to_string());
        let body = lower.strip_suffix("-local").unwrap_or(&lower);
        let (kind, rest) = if let Some(r) = body.strip_prefix("en") {
            ('e', r)
        } else if let Some(r) = body.strip_prefix("kn") {
            ('k', r)
        } else if let Some(r) = body.strip_prefix('e') {
            ('e', r)
        } else if let Some(r) = body.strip_prefix('k') {
            ('k', r)
        } else {
            return Err(err());
        };
        let digits = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(rest);
        let n: u32 = digits.parse().map_err(|_| err())?;
        Ok(if kind == 'e' {
            CategoryId::En(n)
        } else {
            CategoryId::Kn(n)
        })
    }
}

impl Serialize for CategoryId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CategoryId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
