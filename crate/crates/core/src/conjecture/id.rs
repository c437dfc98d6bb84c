use std::fmt;

use serde::{Serialize, Serializer};

use super::ConjectureError;
use crate::class::{ClassExpr, Generator};
use crate::localization::CategoryId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    TC1,
    TC2,
    TC3,
    LTC1,
    LTC2,
    LTC3,
    GSC,
    SDGSC,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::TC1,
        Family::TC2,
        Family::TC3,
        Family::LTC1,
        Family::LTC2,
        Family::LTC3,
        Family::GSC,
        Family::SDGSC,
    ];

    pub fn is_indexed(self) -> bool {
        !matches!(self, Family::GSC | Family::SDGSC)
    }

    pub fn is_ambient_only(self) -> bool {
        matches!(self, Family::TC1 | Family::TC2 | Family::TC3)
    }

    /// The localized family with the same statement.
    pub fn localized(self) -> Family {
        match self {
            Family::TC1 => Family::LTC1,
            Family::TC2 => Family::LTC2,
            Family::TC3 => Family::LTC3,
            f => f,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One telescope-conjecture variant, at an index, in a category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConjectureId {
    family: Family,
    index: Option<u32>,
    category: CategoryId,
}

impl ConjectureId {
    pub fn new(
        family: Family,
        index: Option<u32>,
        category: CategoryId,
    ) -> Result<Self, ConjectureError> {
        if family.is_indexed() != index.is_some() {
            return Err(ConjectureError::Malformed(format!(
                "{family} {} an index",
                if family.is_indexed() { "needs" } else { "takes no" }
            )));
        }
        if family.is_ambient_only() && category != CategoryId::Ambient {
            return Err(ConjectureError::Malformed(format!(
                "{family} lives in the ambient category, not {category}"
            )));
        }
        Ok(ConjectureId {
            family,
            index,
            category,
        })
    }

    fn make(family: Family, index: Option<u32>, category: CategoryId) -> Self {
        ConjectureId {
            family,
            index,
            category,
        }
    }

    pub fn tc1(n: u32) -> Self {
        Self::make(Family::TC1, Some(n), CategoryId::Ambient)
    }

    pub fn tc2(n: u32) -> Self {
        Self::make(Family::TC2, Some(n), CategoryId::Ambient)
    }

    pub fn tc3(n: u32) -> Self {
        Self::make(Family::TC3, Some(n), CategoryId::Ambient)
    }

    pub fn ltc1(n: u32, cat: CategoryId) -> Self {
        Self::make(Family::LTC1, Some(n), cat)
    }

    pub fn ltc2(n: u32, cat: CategoryId) -> Self {
        Self::make(Family::LTC2, Some(n), cat)
    }

    pub fn ltc3(n: u32, cat: CategoryId) -> Self {
        Self::make(Family::LTC3, Some(n), cat)
    }

    pub fn gsc(cat: CategoryId) -> Self {
        Self::make(Family::GSC, None, cat)
    }

    pub fn sdgsc(cat: CategoryId) -> Self {
        Self::make(Family::SDGSC, None, cat)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> Option<u32> {
        self.index
    }

    pub fn category(&self) -> CategoryId {
        self.category
    }

    /// The variant's statement.
    pub fn statement(&self) -> Statement {
        let n = self.index.unwrap_or(0);
        match self.family {
            Family::TC1 | Family::LTC1 => Statement::LatticeEquality {
                a: ClassExpr::gen(Generator::T(n)),
                b: ClassExpr::gen(Generator::K(n)),
                category: self.category,
            },
            Family::TC2 | Family::LTC2 => Statement::LatticeEquality {
                a: ClassExpr::telescope_join(n),
                b: ClassExpr::k_join(n),
                category: self.category,
            },
            Family::TC3 | Family::LTC3 => Statement::Flag(format!(
                "for X of type {n} with v_{n} self-map f: ⟨L(f^-1 X)⟩ = ⟨l_{n} LX⟩"
            )),
            Family::GSC => Statement::Flag(
                "every smashing localization is generated by a set of compact objects".into(),
            ),
            Family::SDGSC => Statement::Flag(
                "every smashing localization is generated by a set of strongly dualizable objects"
                    .into(),
            ),
        }
    }
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        if let Some(n) = self.index {
            write!(f, "_{n}")?;
        }
        if self.category != CategoryId::Ambient {
            write!(f, "@{}", self.category)?;
        }
        Ok(())
    }
}

impl Serialize for ConjectureId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// What a conjecture asserts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statement {
    /// `⟨La⟩ = ⟨Lb⟩` in the category's Bousfield lattice.
    LatticeEquality {
        a: ClassExpr,
        b: ClassExpr,
        category: CategoryId,
    },
    /// An object-level statement, decided only through theorem edges.
    Flag(String),
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::LatticeEquality { a, b, category } => {
                write!(f, "⟨L{a}⟩ = ⟨L{b}⟩ in {category}")
            }
            Statement::Flag(s) => f.write_str(s),
        }
    }
}
