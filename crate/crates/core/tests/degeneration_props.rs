use partdeg::algebra::{int, rank_exact, ExactMatrix};
use partdeg::degeneration::{cert_zoo, factor_corank_one, rectify_full_rank_partial, verify_cert};
use partdeg::random;
use partdeg::tensor::MapTriple;
use proptest::prelude::*;

fn invertible_triple(dims: [usize; 3], seed: u64) -> MapTriple {
    let mut rng = random::rng(seed);
    let [a, b, c] = dims.map(|n| random::invertible(&mut rng, n, 3).0);
    MapTriple::new(a, b, c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn post_compose_keeps_approximation_degree(q in 2usize..=5, seed in any::<u64>()) {
        let cert = cert_zoo::strassen_cert(q).unwrap();
        let before = verify_cert(&cert).unwrap();
        let r = invertible_triple(cert.target.dims(), seed);
        let moved = cert.post_compose(&r).unwrap();
        let after = verify_cert(&moved).unwrap();
        prop_assert_eq!(after.d, before.d);
        prop_assert_eq!(moved.target, partdeg::tensor::apply_restriction(&r, &cert.target).unwrap());
    }

    #[test]
    fn rectified_partials_verify(r in 2usize..=4, seed in any::<u64>()) {
        let cert = cert_zoo::random_partial(r, seed).unwrap();
        prop_assert!(verify_cert(&cert).is_ok());
        prop_assert!(rectify_full_rank_partial(&cert).unwrap().verify());
    }

    #[test]
    fn corank_one_factorization_reproduces_input(r in 2usize..=5, seed in any::<u64>(), zero_col in proptest::option::of(0usize..5)) {
        let mut rng = random::rng(seed);
        let mut a = random::matrix(&mut rng, r - 1, r, 3);
        if let Some(c) = zero_col.filter(|&c| c < r) {
            a = ExactMatrix::from_fn(r - 1, r, |i, j| if j == c { int(0) } else { a.get(i, j).clone() });
        }
        prop_assume!(rank_exact(&a) == r - 1);
        let f = factor_corank_one(&a).unwrap();
        prop_assert_eq!(f.product(), a);
        prop_assert!((1..=r).contains(&f.q));
    }
}
