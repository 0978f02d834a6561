//! Degeneration certificates for the named examples.

use rand::Rng;

use super::{apply_poly_maps, DegenCert, PolyMapTriple};
use crate::algebra::{int, inverse, nullspace, EpsPoly, ExactMatrix, Rational, Ring};
use crate::random;
use crate::error::{Error, Result};
use crate::tensor::{zoo, MapTriple};

fn eps_matrix(rows: usize, cols: usize, f: impl Fn(usize, usize) -> EpsPoly) -> ExactMatrix<EpsPoly> {
    ExactMatrix::from_fn(rows, cols, f)
}

fn c(n: i64) -> EpsPoly {
    EpsPoly::constant(int(n))
}

/// `⟨2⟩ ⊵ W` through `(e₁ + εe₂)^{⊗3} − e₁^{⊗3}`: `d = 1`, `e = 2`, no constant map.
pub fn w_cert() -> DegenCert {
    let first = |sign: i64| {
        eps_matrix(2, 2, move |r, col| match (r, col) {
            (0, 0) => c(1),
            (1, 0) => EpsPoly::eps(),
            (0, 1) => c(sign),
            _ => EpsPoly::zero(),
        })
    };
    DegenCert {
        source: zoo::unit(2),
        target: zoo::w(),
        maps: PolyMapTriple::new(MapTriple::new(first(-1), first(1), first(1)), None),
        claimed_d: 1,
        claimed_e: 2,
    }
}

/// `⟨q⟩ ⊵ Str_q` with constant `A₁ : e_i ↦ e_i (i < q), e_q ↦ −Σ e_i` and
/// `A₂ = A₃ : e_i ↦ e_q + εe_i (i < q), e_q ↦ e_q`.
pub fn strassen_cert(q: usize) -> Result<DegenCert> {
    let target = zoo::strassen(q)?;
    let a1 = eps_matrix(q - 1, q, |r, col| if col == q - 1 { c(-1) } else if r == col { c(1) } else { EpsPoly::zero() });
    let a2 = eps_matrix(q, q, |r, col| {
        if r == q - 1 {
            c(1)
        } else if r == col {
            EpsPoly::eps()
        } else {
            EpsPoly::zero()
        }
    });
    Ok(DegenCert {
        source: zoo::unit(q),
        target,
        maps: PolyMapTriple::new(MapTriple::new(a1, a2.clone(), a2), Some(1)),
        claimed_d: 1,
        claimed_e: 1,
    })
}

/// Upper bidiagonal `m×m` matrix with `1, …, m` on the diagonal and ones above.
pub fn bidiagonal(m: usize) -> ExactMatrix<Rational> {
    ExactMatrix::from_fn(m, m, |r, col| {
        if r == col {
            int(r as i64 + 1)
        } else if r + 1 == col {
            int(1)
        } else {
            int(0)
        }
    })
}

/// Eigenvector matrix `P` with `M = P·diag(1, …, m)·P⁻¹` for [`bidiagonal`].
pub fn bidiagonal_eigenvectors(m: usize) -> ExactMatrix<Rational> {
    let bm = bidiagonal(m);
    let columns: Vec<Vec<Rational>> = (1..=m as i64)
        .map(|l| {
            let shifted = bm.sub(&ExactMatrix::identity(m).scale(&int(l))).expect("square");
            nullspace(&shifted).remove(0)
        })
        .collect();
    ExactMatrix::from_columns(m, &columns)
}

/// `⟨m⟩ ⊵ S_{k,m}` with `d = e = 1`.
///
/// `A₁ : e_i ↦ e₁ + i·e₂` is constant and reaches `[id, diag(1..m)]`; the
/// eigenvector matrix `P` of the bidiagonal `M` conjugates this to `[id, M]`,
/// and `A₂ = diag(1^{k−1}, ε^{m−k+1})·P`, `A₃ = diag(ε^k, 1^{m−k})·P^{−T}` keep
/// exactly the entries of `S_{k,m}` at order `ε`.
pub fn pencil_cert(k: usize, m: usize) -> Result<DegenCert> {
    let target = zoo::s_km(k, m)?;
    let a1 = eps_matrix(2, m, |r, col| if r == 0 { c(1) } else { c(col as i64 + 1) });
    let p = bidiagonal_eigenvectors(m);
    let p_inv_t = inverse(&p).ok_or_else(|| Error::Verification("eigenvectors are dependent".into()))?.transpose();
    let scale = |x: &Rational, eps: bool| if eps { EpsPoly::monomial(1, x.clone()) } else { EpsPoly::constant(x.clone()) };
    let a2 = eps_matrix(m, m, |r, col| scale(p.get(r, col), r + 1 >= k));
    let a3 = eps_matrix(m, m, |r, col| scale(p_inv_t.get(r, col), r < k));
    Ok(DegenCert {
        source: zoo::unit(m),
        target,
        maps: PolyMapTriple::new(MapTriple::new(a1, a2, a3), Some(1)),
        claimed_d: 1,
        claimed_e: 1,
    })
}

/// Seeded partial degeneration of `⟨r⟩` with an invertible constant `A₁`.
///
/// Column `i` of `A₂(ε)` and `A₃(ε)` is `ε^{a_i}(x₀ + εx₁)` and
/// `ε^{b_i}(y₀ + εy₁)` with random `a_i, b_i ∈ {0, 1}`; the target is the
/// lowest nonzero coefficient of the result.
pub fn random_partial(r: usize, seed: u64) -> Result<DegenCert> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be positive".into()));
    }
    let mut rng = random::rng(seed);
    let (a1, _) = random::invertible(&mut rng, r, 3);
    let v2 = r + rng.gen_range(0..=1);
    let v3 = r + rng.gen_range(0..=1);
    let leg = |rows: usize, rng: &mut random::SeededRng| {
        let mut cols = Vec::with_capacity(r);
        for _ in 0..r {
            let shift: u32 = rng.gen_range(0..=1);
            let x0: Vec<Rational> = (0..rows).map(|_| random::nonzero_int(rng, 3)).collect();
            let x1: Vec<Rational> = (0..rows).map(|_| random::small_int(rng, 3)).collect();
            cols.push(
                x0.into_iter()
                    .zip(x1)
                    .map(|(a, b)| EpsPoly::from_terms([(shift, a), (shift + 1, b)]))
                    .collect::<Vec<_>>(),
            );
        }
        ExactMatrix::from_fn(rows, r, |row, col| cols[col][row].clone())
    };
    let a2 = leg(v2, &mut rng);
    let a3 = leg(v3, &mut rng);
    let maps = PolyMapTriple::new(MapTriple::new(a1.to_eps(), a2, a3), Some(1));
    let source = zoo::unit(r);
    let image = apply_poly_maps(&maps, &source)?;
    let d = image.valuation().ok_or_else(|| Error::Verification("maps send ⟨r⟩ to zero".into()))?;
    let top = image.degree().unwrap_or(d);
    Ok(DegenCert { target: image.coeff(d), source, maps, claimed_d: d, claimed_e: top - d })
}

/// Names: `w`, `strassen q`, `pencil k m`, `prop333` and `random-partial r` (seeded).
pub fn by_name(name: &str, params: &[usize], seed: u64) -> Result<DegenCert> {
    let arity = |n: usize| -> Result<()> {
        if params.len() == n {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("{name} takes {n} parameter(s), got {}", params.len())))
        }
    };
    match name {
        "w" => arity(0).map(|_| w_cert()),
        "strassen" => arity(1).and_then(|_| strassen_cert(params[0])),
        "pencil" => arity(2).and_then(|_| pencil_cert(params[0], params[1])),
        "prop333" => arity(0).and_then(|_| crate::compress::prop333_cert(&zoo::prop333(seed))),
        "random-partial" => arity(1).and_then(|_| random_partial(params[0], seed)),
        _ => Err(Error::InvalidParameter(format!("unknown certificate {name:?}"))),
    }
}
