mod common;

use common::*;
use initforms::fuzz::{instance_rng, random_point_set, random_poly};
use initforms::newton::{hull_vertices, intruders, is_intruder, support};
use rand::Rng;

#[test]
fn lp_vertices_match_caratheodory() {
    for i in 0..300 {
        let mut rng = instance_rng(0x4011, i);
        let dim = rng.gen_range(1..=4);
        let ps = random_point_set(&mut rng, dim, 12, 3);
        let points: Vec<Vec<u32>> = ps.iter().map(|e| e.entries().to_vec()).collect();
        let certs = hull_vertices::<Q>(&ps).unwrap();
        let mut got: Vec<Vec<u32>> = certs.iter().map(|c| c.vertex.entries().to_vec()).collect();
        got.sort();
        let mut expected = vertices_bruteforce(&points);
        expected.sort();
        assert_eq!(got, expected, "{points:?}");
        for c in &certs {
            // c·v >= c·p + margin for every other point p, by direct arithmetic
            let dot = |p: &[u32]| c.weight.iter().zip(p).fold(q(0), |s, (a, &b)| s + a * q(b as i64));
            let at = dot(c.vertex.entries());
            assert!(c.margin > q(0));
            for pt in &points {
                if pt.as_slice() != c.vertex.entries() {
                    assert!(at >= dot(pt) + c.margin.clone(), "{points:?}");
                }
            }
        }
    }
}

#[test]
fn intruders_are_vertices_without_zero_coordinates() {
    for i in 0..200 {
        let mut rng = instance_rng(0x1a7, i);
        let n = rng.gen_range(1..=3);
        let f = random_poly(&mut rng, n, 3, 6);
        let points: Vec<Vec<u32>> = support(&f).iter().map(|e| e.entries().to_vec()).collect();
        let mut expected: Vec<Vec<u32>> =
            vertices_bruteforce(&points).into_iter().filter(|v| v.iter().all(|&c| c > 0)).collect();
        expected.sort();
        let mut got: Vec<Vec<u32>> = intruders(&f).unwrap().iter().map(|e| e.entries().to_vec()).collect();
        got.sort();
        assert_eq!(got, expected, "f = {f}");
        for v in intruders(&f).unwrap() {
            assert!(is_intruder(&v));
        }
    }
}
