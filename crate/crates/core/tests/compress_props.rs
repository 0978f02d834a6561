use partdeg::algebra::{int, rank_exact, ExactMatrix};
use partdeg::compress::{
    canonical_trace_rep, check_zero_block, compress_transfer, projector_cert, verify_compress_cert, verify_trace_rep, TraceMode,
};
use partdeg::degeneration::RestrictionCert;
use partdeg::random;
use partdeg::tensor::{apply_restriction, conciseness, zoo, MapTriple, Tensor3};
use proptest::prelude::*;

fn rank_limited(rng: &mut random::SeededRng, n: usize, r: usize) -> ExactMatrix {
    loop {
        let m = random::matrix(rng, n, r, 3).matmul(&random::matrix(rng, r, n, 3)).unwrap();
        if rank_exact(&m) == r {
            return m;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn zero_blocks_give_projector_certificates(
        dims in (1usize..=4, 1usize..=4, 1usize..=4),
        a in (0usize..=4, 0usize..=4, 0usize..=4),
        seed in any::<u64>(),
    ) {
        let dims = [dims.0, dims.1, dims.2];
        let a = [a.0.min(dims[0]), a.1.min(dims[1]), a.2.min(dims[2])];
        let mut rng = random::rng(seed);
        let t = Tensor3::from_fn(dims, |i, j, k| {
            let inside = i > dims[0] - a[0] && j > dims[1] - a[1] && k > dims[2] - a[2];
            if inside { int(0) } else { random::small_int(&mut rng, 2) }
        });
        prop_assert!(check_zero_block(&t, a).unwrap());
        prop_assert!(verify_compress_cert(&t, &projector_cert(dims, a).unwrap()));
    }

    #[test]
    fn transfer_keeps_ranks(seed in any::<u64>()) {
        let s = zoo::compressible_233(seed);
        prop_assume!(conciseness(&s).0);
        let cert_s = projector_cert(s.dims(), [2, 3, 3]).unwrap();
        prop_assert!(verify_compress_cert(&s, &cert_s));
        // T = S ⊕ extra coordinates restricts back to S by projection
        let mut rng = random::rng(seed ^ 1);
        let big = [4, 5, 5];
        let t = Tensor3::from_fn(big, |i, j, k| {
            if i <= 3 && j <= 4 && k <= 4 { s.get(i, j, k).clone() } else if i > 3 && j > 4 && k > 4 { random::small_int(&mut rng, 2) } else { int(0) }
        });
        let proj = |v: usize, u: usize| ExactMatrix::from_fn(v, u, |r, c| int((r == c) as i64));
        let maps = MapTriple::new(proj(3, 4), proj(4, 5), proj(4, 5));
        prop_assert_eq!(apply_restriction(&maps, &t).unwrap(), s.clone());
        let r = RestrictionCert::new(t.clone(), s, maps).unwrap();
        let moved = compress_transfer(&cert_s, &r).unwrap();
        prop_assert_eq!(moved.ranks, [2, 3, 3]);
        prop_assert!(verify_compress_cert(&t, &moved));
    }
}

#[test]
fn matrix_unit_traces_represent_mamu() {
    for m in 1..=4 {
        for n in 1..=4 {
            for p in 1..=4 {
                let rep = canonical_trace_rep(m, n, p);
                assert!(verify_trace_rep(&zoo::mamu(m, n, p).unwrap(), &rep, TraceMode::Exact).unwrap(), "⟨{m},{n},{p}⟩");
            }
        }
    }
}

#[test]
fn mamu_222_is_not_233_compressible() {
    let t = zoo::mamu(2, 2, 2).unwrap();
    let mut rng = random::rng(0);
    for _ in 0..200 {
        let maps = MapTriple::new(rank_limited(&mut rng, 4, 2), rank_limited(&mut rng, 4, 3), rank_limited(&mut rng, 4, 3));
        assert!(!apply_restriction(&maps, &t).unwrap().is_zero());
    }
}
