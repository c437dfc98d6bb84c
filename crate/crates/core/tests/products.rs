mod common;

use bousfield_core::class::{support_bounds, Algebra};
use bousfield_core::lattice::FinCofSet;
use bousfield_core::{normalize, ClassExpr, NormalForm, TriValue};
use common::*;

const N: u32 = 8;

fn as_nf(x: Option<Generator>) -> NormalForm {
    normalize(&g(x.unwrap_or(Zero)))
}

#[test]
fn products_all_indices() {
    let alg = Algebra::default();
    let mut checked = 0;
    for m in 0..=N {
        for n in 0..=N {
            for (a, b) in [
                (F(m), F(n)),
                (F(m), T(n)),
                (T(m), T(n)),
                (F(m), K(n)),
                (T(m), K(n)),
                (K(m), K(n)),
            ] {
                let got = normalize(&sm(a, b));
                match product(a, b) {
                    Some(want) => {
                        assert_eq!(got, as_nf(want), "{a} ^ {b}");
                        let want_expr = g(want.unwrap_or(Zero));
                        assert_eq!(alg.eq(&sm(a, b), &want_expr).value(), TriValue::Holds);
                        assert_eq!(normalize(&sm(b, a)), got, "{b} ^ {a}");
                    }
                    None => {
                        assert_eq!(alg.is_zero(&sm(a, b)).value(), TriValue::Fails, "{a} ^ {b}");
                    }
                }
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 6 * 81);
}

#[test]
fn orders_all_indices() {
    let alg = Algebra::default();
    for m in 0..=N {
        for n in 0..=N {
            let want = if m >= n { TriValue::Holds } else { TriValue::Fails };
            assert_eq!(alg.leq(&g(F(m)), &g(F(n))).value(), want, "F({m}) ≤ F({n})");
            if m <= n {
                assert!(alg.leq(&g(K(n)), &g(F(m))).is_holds(), "K({n}) ≤ F({m})");
                assert!(alg.leq(&g(T(n)), &g(F(m))).is_holds(), "T({n}) ≤ F({m})");
            }
            if m != n {
                assert!(alg.leq(&g(K(n)), &g(T(m))).is_fails(), "K({n}) ≤ T({m})");
                assert!(alg.leq(&g(K(n)), &g(K(m))).is_fails(), "K({n}) ≤ K({m})");
            }
        }
        assert!(alg.leq(&g(K(m)), &g(T(m))).is_holds());
        assert!(alg.in_dl(&g(F(m))).is_holds());
    }
}

#[test]
fn normalize_examples() {
    assert!(normalize(&sm(T(2), K(3))).is_zero());
    assert_eq!(normalize(&sm(Sphere, F(4))), normalize(&g(F(4))));
    assert_eq!(normalize(&sm(E(2), T(1))), normalize(&g(K(1))));
    assert_eq!(normalize(&sm(F(3), T(5))), normalize(&g(T(5))));
    assert!(normalize(&sm(I, I)).is_zero());
}

#[test]
fn e_expansion_matches_full_distribution() {
    // E(n) ∧ X by brute force: expand E(n) to its K-join, distribute, and
    // keep the nonzero stated products.
    for n in 0..=5 {
        for x in (0..=6).flat_map(|i| [F(i), T(i), K(i)]) {
            let kept: Vec<Generator> = (0..=n)
                .filter_map(|i| product(K(i), x).expect("pinned product"))
                .collect();
            let want = normalize(&ClassExpr::wedge_all(kept));
            assert_eq!(normalize(&sm(E(n), x)), want, "E({n}) ^ {x}");
        }
    }
}

#[test]
fn smash_and_wedge_examples() {
    use bousfield_core::class::{smash, wedge};
    let k12 = normalize(&wd(K(1), K(2)));
    assert_eq!(smash(&k12, &normalize(&g(T(2)))), normalize(&g(K(2))));
    let x = normalize(&sm(F(2), BP));
    assert!(smash(&x, &NormalForm::zero()).is_zero());
    assert!(normalize(&sm(BP, I)).is_zero());

    let k1 = normalize(&g(K(1)));
    assert_eq!(wedge(&k1, &k1), k1);
    assert_eq!(
        wedge(&k1, &normalize(&g(E(2)))),
        normalize(&wd(wd(K(0), K(1)), K(2)))
    );
    assert_eq!(wedge(&normalize(&g(T(0))), &NormalForm::zero()), normalize(&g(T(0))));
}

#[test]
fn support_examples() {
    let b = support_bounds(&normalize(&g(E(2))));
    assert_eq!(b.lower, FinCofSet::finite([0, 1, 2]));
    assert_eq!(b.upper, b.lower);
    let b = support_bounds(&normalize(&g(HFp)));
    assert!(b.lower.is_empty() && b.upper.is_empty());
    let b = support_bounds(&normalize(&g(F(2))));
    assert_eq!(b.lower, FinCofSet::cofinite([0, 1]));
    assert_eq!(b.upper, b.lower);
}

#[test]
fn eq_leq_examples() {
    let alg = Algebra::default();
    assert!(alg.eq(&g(T(1)), &g(K(1))).is_holds());
    assert!(alg.eq(&g(T(2)), &g(K(2))).is_open());
    assert!(alg.eq(&sm(I, I), &g(Zero)).is_holds());
    assert!(alg.leq(&g(K(5)), &g(F(3))).is_holds());
    let t = alg.leq(&g(F(1)), &g(F(3)));
    assert!(t.is_fails());
    assert!(t.provenance().iter().any(|p| p.contains("K(1)") || p.contains("K(2)")));
    assert!(alg.leq(&g(I), &g(HFp)).is_holds());
    assert!(alg.leq(&g(T(3)), &g(K(3))).is_open());
}

#[test]
fn square_zero_and_dl_examples() {
    let alg = Algebra::default();
    assert!(alg.is_square_zero(&g(I)).is_holds());
    assert!(alg.is_square_zero(&g(K(3))).is_fails());
    assert!(alg.is_square_zero(&g(Zero)).is_fails());
    assert!(alg.in_dl(&g(HFp)).is_holds());
    assert!(alg.in_dl(&g(I)).is_fails());
    assert!(alg.in_dl(&g(F(2))).is_holds());
}

#[test]
fn decided_verdicts_carry_provenance() {
    let alg = Algebra::default();
    let pool: Vec<ClassExpr> = Generator::alphabet(4).into_iter().map(g).collect();
    for a in &pool {
        for b in &pool {
            for t in [alg.eq(a, b), alg.leq(a, b)] {
                if !t.is_open() {
                    assert!(!t.provenance().is_empty(), "{a} vs {b}");
                }
            }
        }
    }
}
