//! Exact scalars, polynomials and matrix algebra.

mod elimination;
mod eps_poly;
mod matrix;
mod multi_poly;
mod scalar;

pub use elimination::{
    det_exact, det_poly, generic_rank, inverse, nullspace, rank_exact, rank_factorization, rref,
    solve_exact, solve_matrix, uniform_rank_at_least,
};
pub use eps_poly::EpsPoly;
pub use matrix::ExactMatrix;
pub use multi_poly::{Monomial, MultiPoly};
pub use scalar::{format_rational, int, parse_rational, rat, Rational, Ring};
