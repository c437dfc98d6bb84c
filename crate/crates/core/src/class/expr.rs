use std::fmt;

use serde::{Deserialize, Serialize};

use super::Generator;

/// A Bousfield-class expression: generators combined by smash (`^`) and
/// wedge (`v`). Binary in the tree; normalization treats both operators as
/// associative and commutative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassExpr {
    Gen(Generator),
    Smash(Box<ClassExpr>, Box<ClassExpr>),
    Wedge(Box<ClassExpr>, Box<ClassExpr>),
}

impl From<Generator> for ClassExpr {
    fn from(g: Generator) -> Self {
        ClassExpr::Gen(g)
    }
}

impl ClassExpr {
    pub fn gen(g: Generator) -> Self {
        ClassExpr::Gen(g)
    }

    pub fn zero() -> Self {
        ClassExpr::Gen(Generator::Zero)
    }

    pub fn sphere() -> Self {
        ClassExpr::Gen(Generator::Sphere)
    }

    pub fn smash(a: impl Into<ClassExpr>, b: impl Into<ClassExpr>) -> Self {
        ClassExpr::Smash(Box::new(a.into()), Box::new(b.into()))
    }

    pub fn wedge(a: impl Into<ClassExpr>, b: impl Into<ClassExpr>) -> Self {
        ClassExpr::Wedge(Box::new(a.into()), Box::new(b.into()))
    }

    /// Left-associated wedge of the items; `0` when empty.
    pub fn wedge_all<I>(items: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<ClassExpr>,
    {
        items
            .into_iter()
            .map(Into::into)
            .reduce(ClassExpr::wedge)
            .unwrap_or_else(ClassExpr::zero)
    }

    /// Left-associated smash of the items; `S` when empty.
    pub fn smash_all<I>(items: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<ClassExpr>,
    {
        items
            .into_iter()
            .map(Into::into)
            .reduce(ClassExpr::smash)
            .unwrap_or_else(ClassExpr::sphere)
    }

    /// `T(0) ∨ … ∨ T(n)`.
    pub fn telescope_join(n: u32) -> Self {
        Self::wedge_all((0..=n).map(Generator::T))
    }

    /// `K(0) ∨ … ∨ K(n)`.
    pub fn k_join(n: u32) -> Self {
        Self::wedge_all((0..=n).map(Generator::K))
    }

    /// Replaces every generator by `f(generator)`.
    pub fn map_generators<F>(&self, f: &F) -> ClassExpr
    where
        F: Fn(Generator) -> ClassExpr,
    {
        match self {
            ClassExpr::Gen(g) => f(*g),
            ClassExpr::Smash(a, b) => ClassExpr::smash(a.map_generators(f), b.map_generators(f)),
            ClassExpr::Wedge(a, b) => ClassExpr::wedge(a.map_generators(f), b.map_generators(f)),
        }
    }

    pub fn generators(&self) -> Vec<Generator> {
        let mut out = Vec::new();
        self.collect_generators(&mut out);
        out
    }

    fn collect_generators(&self, out: &mut Vec<Generator>) {
        match self {
            ClassExpr::Gen(g) => out.push(*g),
            ClassExpr::Smash(a, b) | ClassExpr::Wedge(a, b) => {
                a.collect_generators(out);
                b.collect_generators(out);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            ClassExpr::Gen(_) => 0,
            ClassExpr::Smash(a, b) | ClassExpr::Wedge(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    pub fn as_generator(&self) -> Option<Generator> {
        match self {
            ClassExpr::Gen(g) => Some(*g),
            _ => None,
        }
    }
}

// Printing mirrors the surface grammar: `^` binds tighter than `v` and both
// parse left-associatively, so a right operand of the same operator needs
// parentheses to survive a re-parse.
impl fmt::Display for ClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassExpr::Gen(g) => write!(f, "{g}"),
            ClassExpr::Wedge(a, b) => {
                write!(f, "{a} v ")?;
                if matches!(**b, ClassExpr::Wedge(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            ClassExpr::Smash(a, b) => {
                if matches!(**a, ClassExpr::Wedge(..)) {
                    write!(f, "({a})")?;
                } else {
                    write!(f, "{a}")?;
                }
                f.write_str(" ^ ")?;
                if matches!(**b, ClassExpr::Gen(_)) {
                    write!(f, "{b}")
                } else {
                    write!(f, "({b})")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn display_respects_precedence() {
        let e = ClassExpr::wedge(K(0), ClassExpr::smash(K(1), F(2)));
        assert_eq!(e.to_string(), "K(0) v K(1) ^ F(2)");
        let e = ClassExpr::smash(ClassExpr::wedge(K(0), K(1)), F(2));
        assert_eq!(e.to_string(), "(K(0) v K(1)) ^ F(2)");
        let e = ClassExpr::wedge(K(0), ClassExpr::wedge(K(1), K(2)));
        assert_eq!(e.to_string(), "K(0) v (K(1) v K(2))");
    }

    #[test]
    fn joins() {
        assert_eq!(ClassExpr::telescope_join(1).to_string(), "T(0) v T(1)");
        assert_eq!(ClassExpr::wedge_all(Vec::<Generator>::new()), ClassExpr::zero());
    }
}
