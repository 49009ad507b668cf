use proptest::prelude::*;
use semistab::arith::primes_up_to;
use semistab::elliptic::{same_splitting_field_evidence, Cubic, PointCount};
use semistab::Curve;

fn curves() -> [(&'static str, Curve); 3] {
    [
        ("X0(11)", Curve::from_coeffs([0, -1, 1, -10, -20]).unwrap()),
        ("121D", Curve::from_coeffs([0, -1, 1, -7, 10]).unwrap()),
        ("49A", Curve::from_coeffs([1, -1, 0, -2, -1]).unwrap()),
    ]
}

#[test]
fn hasse_bound_below_1000() {
    for (name, e) in curves() {
        for q in primes_up_to(1000) {
            if let PointCount::Good { a, .. } = e.count_points(q).unwrap() {
                assert!(a * a <= 4 * q as i64, "{name} at {q}: a = {a}");
            }
        }
    }
}

#[test]
fn fast_and_naive_counts_agree_below_200() {
    for (_, e) in curves() {
        for q in primes_up_to(200) {
            let count = match e.count_points(q).unwrap() {
                PointCount::Good { count, .. } | PointCount::Bad { count, .. } => count,
            };
            assert_eq!(count, e.count_points_naive(q).unwrap());
        }
    }
}

#[test]
fn conductor_49_curve() {
    let e = &curves()[2].1;
    assert_eq!(e.conductor_exponent(7), Ok(2));
    assert!(e.two_division_cubic().has_rational_root());
}

#[test]
fn two_torsion_cubics_of_the_level_11_curves() {
    let [(_, x011), (_, e121), _] = curves();
    let target = Cubic::from_i64([1, 1, 1, -1]).unwrap();
    for e in [&x011, &e121] {
        let ev = same_splitting_field_evidence(&e.two_division_cubic(), &target, 2000).unwrap();
        assert!(ev.pass, "{ev:?}");
    }
}

proptest! {
    #[test]
    fn counts_invariant_under_coordinate_change(r in -5i64..5, s in -5i64..5, t in -5i64..5, qi in 2usize..40) {
        let q = primes_up_to(200)[qi];
        for (_, e) in curves() {
            let f = e.change_coordinates(r, s, t).unwrap();
            prop_assert_eq!(e.count_points(q).unwrap(), f.count_points(q).unwrap());
        }
    }
}
