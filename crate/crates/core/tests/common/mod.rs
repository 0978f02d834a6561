#![allow(dead_code)]

use partdeg::algebra::{int, rat, EpsPoly, ExactMatrix, MultiPoly, Rational, Ring};
use partdeg::tensor::Tensor3;
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

pub fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = ExactMatrix<Rational>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-3i64..=3, r * c).prop_map(move |v| ExactMatrix::new(r, c, v.into_iter().map(int).collect()).unwrap())
    })
}

pub fn square(n: usize) -> impl Strategy<Value = ExactMatrix<Rational>> {
    proptest::collection::vec(-3i64..=3, n * n).prop_map(move |v| ExactMatrix::new(n, n, v.into_iter().map(int).collect()).unwrap())
}

pub fn tensor_of(dims: [usize; 3]) -> impl Strategy<Value = Tensor3> {
    proptest::collection::vec(prop_oneof![3 => Just(0i64), 2 => -2i64..=2], dims[0] * dims[1] * dims[2])
        .prop_map(move |v| Tensor3::from_entries(dims, v.into_iter().map(int).collect()).unwrap())
}

pub fn tensor(max: usize) -> impl Strategy<Value = Tensor3> {
    (1..=max, 1..=max, 1..=max).prop_flat_map(|(a, b, c)| tensor_of([a, b, c]))
}

pub fn eps_poly() -> impl Strategy<Value = EpsPoly> {
    proptest::collection::vec((0u32..4, rational()), 0..4).prop_map(EpsPoly::from_terms)
}

/// Sparse polynomial in `vars` variables with up to four terms of degree ≤ 2 per variable.
pub fn multi_poly(vars: usize) -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((proptest::collection::vec(0u32..3, vars), -3i64..=3), 0..4).prop_map(|terms| {
        let mut p = MultiPoly::zero();
        for (exps, c) in terms {
            p.add_assign(&MultiPoly::term(partdeg::algebra::Monomial::from_exponents(exps), int(c)));
        }
        p
    })
}

/// `n×n` matrix with affine-linear entries in `vars` variables.
pub fn linear_matrix(n: usize, vars: usize) -> impl Strategy<Value = ExactMatrix<MultiPoly>> {
    proptest::collection::vec(proptest::collection::vec(-2i64..=2, vars + 1), n * n).prop_map(move |entries| {
        let polys = entries
            .into_iter()
            .map(|cs| {
                let mut p = MultiPoly::constant(int(cs[0]));
                for (v, c) in cs[1..].iter().enumerate() {
                    p.add_assign(&MultiPoly::var(v).scale(&int(*c)));
                }
                p
            })
            .collect();
        ExactMatrix::new(n, n, polys).unwrap()
    })
}
