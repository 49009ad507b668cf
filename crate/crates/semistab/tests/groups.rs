use proptest::prelude::*;
use semistab::groups::{
    center_cyclic_implies_abelian_check, deduction_chain_check, standard_deductions, taussky_check, Condition,
    DeductionConstraints, GroupCatalog, GroupError, Perm, PermutationGroup, CLASS_COUNTS,
};

fn catalog() -> GroupCatalog {
    GroupCatalog::bundled()
}

#[test]
fn catalog_class_counts() {
    let c = catalog();
    assert_eq!(c.class_counts(), CLASS_COUNTS.to_vec());
    assert_eq!(c.entries().len(), 42);
}

#[test]
fn catalog_rejects_transcription_errors() {
    let text = "1;1;C1;()\n2;1;C2;(1 2)\n";
    assert!(matches!(text.parse::<GroupCatalog>(), Err(GroupError::ClassCount { order: 3, .. })));
    let wrong_order = "4;1;C4;(1 2 3)\n";
    assert!(matches!(wrong_order.parse::<GroupCatalog>(), Err(GroupError::OrderMismatch { .. })));
    let bundled = include_str!("../data/groups16.txt");
    // replacing C4xC4 by a second copy of C16 duplicates a fingerprint
    let dup = bundled.replace(
        &bundled.lines().find(|l| l.starts_with("16;2;")).unwrap().to_string(),
        &bundled.lines().find(|l| l.starts_with("16;1;")).unwrap().replace("16;1;C16", "16;2;C16bis"),
    );
    assert!(matches!(dup.parse::<GroupCatalog>(), Err(GroupError::DuplicateFingerprint { .. })));
    assert!(matches!("x;1;C1;()".parse::<GroupCatalog>(), Err(GroupError::Parse { line: 1, .. })));
}

#[test]
fn derived_series_examples() {
    let c = catalog();
    let orders = |label: &str| -> Vec<usize> {
        c.get(label).unwrap().group.derived_series().iter().map(|h| h.order()).collect()
    };
    assert_eq!(orders("S3"), vec![6, 3, 1]);
    assert_eq!(orders("C4"), vec![4, 1]);
    assert_eq!(orders("Q8"), vec![8, 2, 1]);
    assert_eq!(orders("A4"), vec![12, 4, 1]);
    assert_eq!(orders("C1"), vec![1]);
}

#[test]
fn center_cyclic_lemma_has_no_counterexample() {
    let verdicts = center_cyclic_implies_abelian_check(&catalog());
    assert_eq!(verdicts.len(), 42);
    assert!(verdicts.iter().all(|v| v.pass));
    let d8 = verdicts.iter().find(|v| v.label == "D8").unwrap();
    assert!(!d8.applicable);
    let c6 = verdicts.iter().find(|v| v.label == "C6").unwrap();
    assert!(c6.applicable && c6.pass);
}

#[test]
fn taussky_holds_for_small_two_groups() {
    let verdicts = taussky_check(&catalog());
    assert!(verdicts.iter().all(|v| v.pass));
    let applicable: Vec<&str> = verdicts.iter().filter(|v| v.applicable).map(|v| v.label.as_str()).collect();
    for label in ["D8", "Q8", "D16", "SD16", "Q16", "C2xC2"] {
        assert!(applicable.contains(&label), "{label} should be in scope");
    }
    assert!(!applicable.contains(&"C16"));
}

#[test]
fn standard_deductions_find_no_counterexample() {
    let c = catalog();
    for d in standard_deductions() {
        let v = deduction_chain_check(&c, &d);
        assert!(v.pass(), "{}: {:?}", d.name, v.counterexample);
        assert!(!v.unsatisfiable(), "{} matched no group", d.name);
    }
}

#[test]
fn deduction_scan_reports_counterexamples_and_unsatisfiable_sets() {
    let c = catalog();
    let false_claim = DeductionConstraints {
        name: "every group of order 6 is abelian".into(),
        hypotheses: vec![Condition::OrderAtMost { term: 0, bound: 6 }],
        conclusion: vec![Condition::Abelian { term: 0 }],
    };
    assert_eq!(deduction_chain_check(&c, &false_claim).counterexample.as_deref(), Some("S3"));
    let empty = DeductionConstraints {
        name: "non-abelian of order at most 5".into(),
        hypotheses: vec![
            Condition::OrderAtMost { term: 0, bound: 5 },
            Condition::Central { inner: 1, outer: 0 },
            Condition::Metacyclic { term: 0 },
        ],
        conclusion: vec![Condition::Abelian { term: 0 }],
    };
    let v = deduction_chain_check(&c, &empty);
    assert!(v.pass());
    let impossible = DeductionConstraints {
        name: "trivial yet order above 1".into(),
        hypotheses: vec![
            Condition::Trivial { term: 0 },
            Condition::Cyclic { term: 1 },
            Condition::QuotientOrderAtMost { term: 0, bound: 0 },
        ],
        conclusion: vec![],
    };
    assert!(deduction_chain_check(&c, &impossible).unsatisfiable());
}

#[test]
fn center_and_quotient_orders_multiply() {
    for e in catalog().entries() {
        let g = &e.group;
        let z = g.center();
        assert_eq!(z.order() * g.quotient(&z).order(), g.order(), "{}", e.label);
        if g.is_abelian() {
            assert_eq!(g.derived_series().len(), if g.is_trivial() { 1 } else { 2 });
        }
    }
}

fn s_n_perm(images: &[usize]) -> Perm {
    Perm::from_images(images.iter().map(|&x| x as u16).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_subgroups_of_s6(a in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle(),
                               b in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle()) {
        let g = PermutationGroup::new(6, vec![s_n_perm(&a), s_n_perm(&b)]).unwrap();
        prop_assert_eq!(720 % g.order(), 0);
        let series = g.derived_series();
        for w in series.windows(2) {
            prop_assert!(w[1].is_normal_in(&w[0]));
            prop_assert_eq!(w[0].order() % w[1].order(), 0);
            prop_assert!(w[0].quotient(&w[1]).is_abelian());
        }
        let z = g.center();
        prop_assert_eq!(z.order() * g.quotient(&z).order(), g.order());
        if g.quotient(&z).is_cyclic() {
            prop_assert!(g.is_abelian());
        }
    }
}
