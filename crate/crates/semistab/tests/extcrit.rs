use proptest::prelude::*;
use semistab::arith::{is_prime, primes_up_to};
use semistab::extcrit::{ext_dimension, ext_dimension_congruence, local_kernel_dimension};

#[test]
fn six_pairs_have_trivial_ext() {
    for (l, p) in [(2, 3), (3, 2), (5, 2), (7, 3), (13, 2), (11, 2)] {
        assert_eq!(ext_dimension(l, p).unwrap().dimension, 0, "({l},{p})");
    }
}

#[test]
fn small_nontrivial_examples() {
    assert_eq!(ext_dimension(7, 2).unwrap().dimension, 1);
    assert_eq!(ext_dimension(17, 3).unwrap().dimension, 1);
    assert_eq!(ext_dimension(11, 5).unwrap().dimension, 1);
    assert_eq!(local_kernel_dimension(17, 2).unwrap().dimension, 1);
}

proptest! {
    #[test]
    fn routes_agree(l in prop::sample::select(primes_up_to(1000)), p in prop::sample::select(primes_up_to(1000))) {
        prop_assume!(l != p);
        let d = ext_dimension(l, p).unwrap().dimension;
        prop_assert!(d <= 1);
        prop_assert_eq!(d, ext_dimension_congruence(l, p).unwrap().dimension);
        if p <= 3 {
            prop_assert_eq!(d, local_kernel_dimension(l, p).unwrap().dimension);
        }
    }

    #[test]
    fn rejects_equal_or_composite(n in 2u64..500) {
        prop_assert!(ext_dimension(n, n).is_err());
        if !is_prime(n) {
            prop_assert!(ext_dimension(n, primes_up_to(10)[0]).is_err());
        }
    }
}
