mod common;

use std::cmp::Ordering;

use common::*;
use initforms::fuzz::{instance_rng, random_family, random_poly, random_weight};
use initforms::weights::{check_sum_initial, initial_form, wdeg};
use initforms::{DegValue, QGroupElem, Status};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn product_law_and_idempotence() {
    for i in 0..1000 {
        let mut rng = instance_rng(0x9e, i);
        let n = rng.gen_range(1..=4);
        let d = rng.gen_range(1..=2);
        let f = random_poly(&mut rng, n, 3, 12);
        let g = random_poly(&mut rng, n, 3, 12);
        let w = random_weight(&mut rng, n, d);
        let fw = initial_form(&f, &w).unwrap();
        let gw = initial_form(&g, &w).unwrap();
        assert_eq!(initial_form(&(&f * &g), &w).unwrap(), &fw * &gw, "f = {f}, g = {g}, w = {w:?}");
        assert_eq!(initial_form(&fw, &w).unwrap(), fw);
        let (df, dg) = (wdeg(&f, &w).unwrap(), wdeg(&g, &w).unwrap());
        assert_eq!(wdeg(&(&f * &g), &w).unwrap(), df.try_add(&dg).unwrap());
    }
}

#[test]
fn initial_form_matches_naive_scan() {
    for i in 0..500 {
        let mut rng = instance_rng(0x5ca, i);
        let n = rng.gen_range(1..=4);
        let f = random_poly(&mut rng, n, 4, 8);
        let d = rng.gen_range(1..=3);
        let w = random_weight(&mut rng, n, d);
        let (deg, init) = naive_initial(&f, &weight_rows(&w)).unwrap();
        assert_eq!(wdeg(&f, &w).unwrap(), DegValue::Finite(QGroupElem::new(deg)));
        assert_eq!(initial_form(&f, &w).unwrap(), init);
    }
}

#[test]
fn sum_initial_classification() {
    let (mut verified, mut cancelling) = (0, 0);
    for i in 0..500 {
        let mut rng = instance_rng(0x22, i);
        let (fs, w) = random_family(&mut rng);
        let rows = weight_rows(&w);
        let tops: Vec<_> = fs.iter().map(|f| naive_initial(f, &rows).unwrap()).collect();
        let delta = tops.iter().map(|(d, _)| d.clone()).max().unwrap();
        let mut top_sum = initforms::QPoly::zero(fs[0].nvars());
        for (d, init) in &tops {
            if *d == delta {
                top_sum = &top_sum + init;
            }
        }
        let expected = if top_sum.is_zero() { Status::HypothesisFails } else { Status::Verified };
        let r = check_sum_initial(&fs, &w).unwrap();
        assert_eq!(r.status, expected, "{fs:?} {w:?}");
        if expected == Status::Verified {
            let total = fs.iter().fold(initforms::QPoly::zero(fs[0].nvars()), |a, f| &a + f);
            assert_eq!(naive_initial(&total, &rows).unwrap().1, top_sum);
            verified += 1;
        } else {
            cancelling += 1;
        }
    }
    assert!(verified > 0 && cancelling > 0);
}

fn elem(dim: usize) -> impl Strategy<Value = QGroupElem> {
    prop::collection::vec((-20i64..=20, 1i64..=3), dim)
        .prop_map(|v| QGroupElem::new(v.into_iter().map(|(a, b)| q(a) / q(b)).collect()))
}

fn triple() -> impl Strategy<Value = (QGroupElem, QGroupElem, QGroupElem)> {
    (1usize..=3).prop_flat_map(|d| (elem(d), elem(d), elem(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn ordered_group_axioms((a, b, c) in triple()) {
        // totality and antisymmetry
        let ab = a.try_cmp(&b).unwrap();
        prop_assert_eq!(ab.reverse(), b.try_cmp(&a).unwrap());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        // transitivity
        if a <= b && b <= c {
            prop_assert!(a <= c);
        }
        // translation invariance
        prop_assert_eq!(a.try_add(&c).unwrap().try_cmp(&b.try_add(&c).unwrap()).unwrap(), ab);
        // group laws
        prop_assert_eq!(a.try_add(&b).unwrap(), b.try_add(&a).unwrap());
        prop_assert!(a.try_add(&a.neg()).unwrap().is_zero());
        prop_assert_eq!(a.try_sub(&b).unwrap().try_add(&b).unwrap(), a.clone());
    }
}

#[test]
fn minus_infinity_is_absorbing_and_least() {
    let w = initforms::QWeight::from_ints(&[1, 2]);
    let zero = wdeg(&initforms::QPoly::zero(2), &w).unwrap();
    assert_eq!(zero, DegValue::MinusInfinity);
    let one = wdeg(&initforms::QPoly::one(2), &w).unwrap();
    assert!(zero < one);
    assert_eq!(zero.try_add(&one).unwrap(), DegValue::MinusInfinity);
}
