use partdeg::orbits::{dense_orbit_test, orbit_dimension, pencil_normalize, prehom_test, GroupSpec};
use partdeg::random;
use partdeg::tensor::{apply_restriction, zoo, MapTriple};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn orbit_dimension_is_translation_invariant(seed in any::<u64>(), translate in any::<u64>()) {
        let t = zoo::compressible_233(seed);
        let mut rng = random::rng(translate);
        let [a, b, c] = t.dims().map(|n| random::invertible(&mut rng, n, 3).0);
        let moved = apply_restriction(&MapTriple::new(a, b, c), &t).unwrap();
        for g in [GroupSpec::full(), GroupSpec::last_two()] {
            prop_assert_eq!(orbit_dimension(&moved, &g), orbit_dimension(&t, &g));
        }
    }

    #[test]
    fn pencils_in_the_dense_orbit_normalize(m in 1usize..=4, seed in any::<u64>()) {
        let (i1, i2) = zoo::canonical_pencil_slices(m);
        let mut rng = random::rng(seed);
        let (b, _) = random::invertible(&mut rng, m, 3);
        let (c, _) = random::invertible(&mut rng, m + 1, 3);
        let p1 = b.matmul(&i1).unwrap().matmul(&c).unwrap();
        let p2 = b.matmul(&i2).unwrap().matmul(&c).unwrap();
        let (nb, nc) = pencil_normalize(&p1, &p2).expect("translate of the canonical pencil");
        prop_assert_eq!(nb.matmul(&p1).unwrap().matmul(&nc).unwrap(), i1);
        prop_assert_eq!(nb.matmul(&p2).unwrap().matmul(&nc).unwrap(), i2);
    }
}

#[test]
fn dense_orbits_only_in_prehomogeneous_formats() {
    let mut zoo_tensors = vec![zoo::w(), zoo::rvb(), zoo::unit(2), zoo::mamu(2, 2, 2).unwrap()];
    zoo_tensors.extend((1..=4).map(|m| zoo::canonical_pencil(m).unwrap()));
    zoo_tensors.extend((2..=5).map(|q| zoo::strassen(q).unwrap()));
    for (u1, u2, u3) in [(2, 2, 3), (2, 3, 5), (3, 2, 5), (3, 3, 7)] {
        zoo_tensors.push(zoo::prehom_witness(u1, u2, u3).unwrap());
    }
    let mut dense = 0;
    for t in &zoo_tensors {
        let [u1, u2, u3] = t.dims();
        if u1 >= 2 && dense_orbit_test(t) {
            dense += 1;
            assert!(prehom_test(u1, u2, u3).unwrap(), "{:?}", t.dims());
        }
    }
    assert!(dense >= 4);
}
