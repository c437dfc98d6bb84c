#![allow(dead_code)]

use std::collections::BTreeSet;

use bousfield_core::conjecture::{ConjectureId, Family, Mode};
use bousfield_core::localization::CategoryId;
use bousfield_core::{ClassExpr, TriValue};
use proptest::prelude::*;

pub use bousfield_core::Generator::{self, *};

pub fn g(x: Generator) -> ClassExpr {
    ClassExpr::gen(x)
}

pub fn sm(a: impl Into<ClassExpr>, b: impl Into<ClassExpr>) -> ClassExpr {
    ClassExpr::smash(a, b)
}

pub fn wd(a: impl Into<ClassExpr>, b: impl Into<ClassExpr>) -> ClassExpr {
    ClassExpr::wedge(a, b)
}

pub fn generator(bound: u32) -> impl Strategy<Value = Generator> {
    prop_oneof![
        Just(Zero),
        Just(Sphere),
        Just(Q),
        Just(BP),
        Just(HFp),
        Just(I),
        (0..bound).prop_map(F),
        (0..bound).prop_map(T),
        (0..bound).prop_map(K),
        (0..bound).prop_map(E),
    ]
}

/// Generators whose supports are exact, so every harmonic image is decided.
pub fn chromatic(bound: u32) -> impl Strategy<Value = Generator> {
    prop_oneof![
        Just(Zero),
        Just(Sphere),
        Just(Q),
        (0..bound).prop_map(F),
        (0..bound).prop_map(T),
        (0..bound).prop_map(K),
        (0..bound).prop_map(E),
    ]
}

pub fn tree(leaf: BoxedStrategy<Generator>, depth: u32) -> impl Strategy<Value = ClassExpr> {
    leaf.prop_map(ClassExpr::gen).prop_recursive(depth, 48, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ClassExpr::smash(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| ClassExpr::wedge(a, b)),
        ]
    })
}

pub fn expr() -> impl Strategy<Value = ClassExpr> {
    tree(generator(8).boxed(), 6)
}

pub fn chromatic_expr() -> impl Strategy<Value = ClassExpr> {
    tree(chromatic(8).boxed(), 5)
}

/// Support of a single generator, `{i | g ∧ K(i) ≠ 0}`, over indices < `bound`.
pub fn gen_support(x: Generator, bound: u32) -> BTreeSet<u32> {
    (0..bound)
        .filter(|&i| match x {
            Zero | HFp | I => false,
            Sphere | Q | BP => true,
            F(n) => i >= n,
            T(n) | K(n) => i == n,
            E(n) => i <= n,
        })
        .collect()
}

/// Support by structural recursion: K(i) is a field, so supports
/// intersect under smash and unite under wedge.
pub fn support_oracle(e: &ClassExpr, bound: u32) -> BTreeSet<u32> {
    match e {
        ClassExpr::Gen(x) => gen_support(*x, bound),
        ClassExpr::Smash(a, b) => support_oracle(a, bound)
            .intersection(&support_oracle(b, bound))
            .copied()
            .collect(),
        ClassExpr::Wedge(a, b) => support_oracle(a, bound)
            .union(&support_oracle(b, bound))
            .copied()
            .collect(),
    }
}

/// Flattens a tree into the multiset of smash monomials it distributes to.
pub fn distribute(e: &ClassExpr) -> Vec<Vec<Generator>> {
    match e {
        ClassExpr::Gen(x) => vec![vec![*x]],
        ClassExpr::Wedge(a, b) => {
            let mut out = distribute(a);
            out.extend(distribute(b));
            out
        }
        ClassExpr::Smash(a, b) => {
            let (l, r) = (distribute(a), distribute(b));
            let mut out = Vec::new();
            for x in &l {
                for y in &r {
                    let mut m = x.clone();
                    m.extend(y);
                    out.push(m);
                }
            }
            out
        }
    }
}

/// Rebuilds an expression from its leaves in a different shape: reverses
/// operands and reassociates to the right.
pub fn reshape(e: &ClassExpr) -> ClassExpr {
    fn collect(e: &ClassExpr, smash: bool, out: &mut Vec<ClassExpr>) {
        match (e, smash) {
            (ClassExpr::Smash(a, b), true) | (ClassExpr::Wedge(a, b), false) => {
                collect(a, smash, out);
                collect(b, smash, out);
            }
            _ => out.push(reshape(e)),
        }
    }
    let smash = match e {
        ClassExpr::Gen(_) => return e.clone(),
        ClassExpr::Smash(..) => true,
        ClassExpr::Wedge(..) => false,
    };
    let mut parts = Vec::new();
    collect(e, smash, &mut parts);
    let mut it = parts.into_iter();
    let mut acc = it.next().expect("at least two operands");
    for p in it {
        acc = if smash {
            ClassExpr::smash(p, acc)
        } else {
            ClassExpr::wedge(p, acc)
        };
    }
    acc
}

/// The stated product of two generators from {F, T, K}: `None` is ⟨0⟩.
/// `F ∧ F` is only pinned when the indices agree.
pub fn product(a: Generator, b: Generator) -> Option<Option<Generator>> {
    let zero_unless = |cond: bool, x: Generator| Some(if cond { Some(x) } else { None });
    match (a, b) {
        (F(m), F(n)) if m == n => Some(Some(F(n))),
        (F(_), F(_)) => None,
        (F(m), T(n)) | (T(n), F(m)) => zero_unless(m <= n, T(n)),
        (T(m), T(n)) => zero_unless(m == n, T(n)),
        (F(m), K(n)) | (K(n), F(m)) => zero_unless(m <= n, K(n)),
        (T(m), K(n)) | (K(n), T(m)) => zero_unless(m == n, K(n)),
        (K(m), K(n)) => zero_unless(m == n, K(n)),
        _ => None,
    }
}

/// Expected cells, transcribed independently of the library.
pub fn expected(c: ConjectureId) -> (TriValue, Option<Mode>) {
    let cat = c.category();
    match c.family() {
        Family::LTC1 | Family::LTC2 | Family::LTC3 => (
            TriValue::Holds,
            Some(if cat == CategoryId::BPLocal { Mode::Cited } else { Mode::Recomputed }),
        ),
        Family::GSC if matches!(cat, CategoryId::En(_) | CategoryId::Kn(_)) => (TriValue::Holds, None),
        Family::GSC => (TriValue::Fails, None),
        Family::SDGSC if cat == CategoryId::BPLocal => (TriValue::Open, None),
        Family::SDGSC => (TriValue::Holds, None),
        f => panic!("{f:?} has no table cell"),
    }
}

