use proptest::prelude::*;
use semistab::discbounds::{
    budget, cyclotomic_conductors, cyclotomic_rd_closed_form, degree_bound, rd_from_conductors, rd_tower, DegreeBound,
    Mode, OdlyzkoTable,
};
use semistab::Radical;

fn r(s: &str) -> Radical {
    s.parse().unwrap()
}

#[test]
fn cyclotomic_rd_matches_closed_form_up_to_200() {
    for m in 1..=200u64 {
        if m % 4 == 2 {
            continue;
        }
        let via_characters = rd_from_conductors(&cyclotomic_conductors(m).unwrap()).unwrap();
        assert_eq!(via_characters, cyclotomic_rd_closed_form(m).unwrap(), "m = {m}");
    }
}

#[test]
fn bundled_table_is_monotone() {
    let t = OdlyzkoTable::bundled();
    for w in t.rows().windows(2) {
        assert!(w[0].0 < w[1].0);
        assert!(w[0].1 <= w[1].1);
    }
}

#[test]
fn exhausted_beyond_last_row() {
    let t = OdlyzkoTable::parse("2 1.5\n3 2.0\n").unwrap();
    assert_eq!(degree_bound(&t, &r("3")), DegreeBound::Exhausted);
    assert_eq!(degree_bound(&t, &r("2")), DegreeBound::AtMost(2));
}

#[test]
fn budgets_for_the_six_pairs() {
    let cases = [
        (2, 3, Mode::Tame, "2 * 3^3/2"),
        (3, 2, Mode::Tame, "2^2 * 3"),
        (5, 2, Mode::Tame, "2^2 * 5"),
        (7, 3, Mode::Semistable, "3^3/2 * 7^2/3"),
        (13, 2, Mode::Semistable, "2^2 * 13^1/2"),
        (11, 2, Mode::Semistable, "2^2 * 11^1/2"),
    ];
    for (l, p, mode, want) in cases {
        assert_eq!(budget(l, p, mode).unwrap().value, r(want), "({l},{p})");
    }
}

fn small_radical() -> impl Strategy<Value = Radical> {
    prop::collection::vec((prop::sample::select(vec![2i64, 3, 5, 7, 13]), 0i64..12, 1i64..6), 1..3).prop_map(|fs| {
        Radical::from_factors(fs.into_iter().map(|(p, n, d)| (p, num_rational::Ratio::new(n, d)))).unwrap()
    })
}

proptest! {
    #[test]
    fn tower_of_relative_degree_one_is_identity(base in small_radical(), deg in 1u64..40) {
        prop_assert_eq!(rd_tower(&base, deg, 1, &Radical::one()).unwrap(), base);
    }

    #[test]
    fn degree_bound_is_monotone(a in small_radical(), b in small_radical()) {
        let t = OdlyzkoTable::bundled();
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        match (degree_bound(&t, &lo), degree_bound(&t, &hi)) {
            (DegreeBound::AtMost(x), DegreeBound::AtMost(y)) => prop_assert!(x <= y),
            (DegreeBound::Exhausted, bh) => prop_assert_eq!(bh, DegreeBound::Exhausted),
            _ => {}
        }
    }
}
