mod common;

use common::*;
use initforms::fuzz::{instance_rng, random_poly};
use initforms::poly::{algebraically_independent, parse_poly};
use initforms::{AlgebraHom, Exponent, QPoly};
use proptest::prelude::*;
use rand::Rng;

fn poly_strategy(nvars: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec((prop::collection::vec(0u32..4, nvars), -9i64..=9, 1i64..=4), 0..8).prop_map(
        move |terms| {
            QPoly::from_terms(
                nvars,
                terms.into_iter().map(|(e, num, den)| (Exponent::new(e), q(num) / q(den))),
            )
            .unwrap()
        },
    )
}

fn any_poly() -> impl Strategy<Value = QPoly> {
    (1usize..=4).prop_flat_map(poly_strategy)
}

fn triple() -> impl Strategy<Value = (QPoly, QPoly, QPoly)> {
    (1usize..=3).prop_flat_map(|n| (poly_strategy(n), poly_strategy(n), poly_strategy(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn print_then_parse_is_identity(f in any_poly()) {
        let text = f.to_string();
        prop_assert_eq!(parse_poly(&text, f.nvars()).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms((f, g, h) in triple()) {
        let n = f.nvars();
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f + &QPoly::zero(n), f.clone());
        prop_assert_eq!(&f * &QPoly::one(n), f.clone());
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn substitution_is_a_homomorphism((f, g, _h) in triple(), seed in 0u64..1000) {
        let n = f.nvars();
        let mut rng = instance_rng(seed, 0);
        let m = rng.gen_range(1..=3);
        let images = (0..n).map(|_| random_poly(&mut rng, m, 2, 3)).collect();
        let hom = AlgebraHom::from_polys(m, images).unwrap();
        let s = |p: &QPoly| hom.substitute(p).unwrap().as_poly().unwrap();
        prop_assert_eq!(s(&(&f + &g)), &s(&f) + &s(&g));
        prop_assert_eq!(s(&(&f * &g)), &s(&f) * &s(&g));
        prop_assert_eq!(s(&QPoly::one(n)), QPoly::one(m));
    }
}

#[test]
fn exact_division_agrees_with_undetermined_coefficients() {
    let mut divisible = 0;
    for i in 0..300 {
        let mut rng = instance_rng(0xd1, i);
        let n = rng.gen_range(1..=3);
        let g = random_poly(&mut rng, n, 2, 3);
        let f = if rng.gen_bool(0.5) {
            &g * &random_poly(&mut rng, n, 2, 3)
        } else {
            random_poly(&mut rng, n, 4, 5)
        };
        let expected = divides_by_undetermined(&g, &f);
        let got = f.exact_div(&g).unwrap();
        assert_eq!(got.is_some(), expected, "g = {g}, f = {f}");
        if let Some(quot) = got {
            assert_eq!(&quot * &g, f);
            divisible += 1;
        }
    }
    assert!(divisible > 100);
}

#[test]
fn independence_agrees_with_annihilator_search() {
    for i in 0..150 {
        let mut rng = instance_rng(0x1dea, i);
        let n = rng.gen_range(1..=3);
        let k = rng.gen_range(1..=n);
        let mut ps: Vec<QPoly> = (0..k).map(|_| random_poly(&mut rng, n, 2, 3)).collect();
        let constructed_dependent = k >= 2 && rng.gen_bool(0.4);
        if constructed_dependent {
            // p_k = r(p_1, .., p_{k-1}) with deg r <= 3
            let r = random_poly(&mut rng, k - 1, 3, 3);
            ps[k - 1] = r.compose(&ps[..k - 1]).unwrap();
        }
        let independent = algebraically_independent(&ps).unwrap();
        let annihilated = has_annihilator(&ps, 3);
        if annihilated {
            assert!(!independent, "{ps:?} has a relation but was reported independent");
        }
        if constructed_dependent {
            assert!(annihilated && !independent, "{ps:?}");
        }
    }
    // triangular families are independent and have no relation
    for i in 0..50 {
        let mut rng = instance_rng(0x7a1, i);
        let n = rng.gen_range(1..=3);
        let ps: Vec<QPoly> = (0..n)
            .map(|j| {
                let mut f = QPoly::var(n, j);
                if j + 1 < n {
                    let tail = random_poly(&mut rng, n - j - 1, 2, 2);
                    let later: Vec<QPoly> = (j + 1..n).map(|t| QPoly::var(n, t)).collect();
                    f = &f + &tail.compose(&later).unwrap();
                }
                f
            })
            .collect();
        assert!(algebraically_independent(&ps).unwrap(), "{ps:?}");
        assert!(!has_annihilator(&ps, 3), "{ps:?}");
    }
}

#[test]
fn dependent_without_screen_luck() {
    // the Jacobian vanishes identically, so the screen and every minor fail
    let ps = vec![p("x1 + x2", 3), p("x1^2 + 2*x1*x2 + x2^2", 3)];
    assert!(!algebraically_independent(&ps).unwrap());
    assert!(has_annihilator(&ps, 2));
}
