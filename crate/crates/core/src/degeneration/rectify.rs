use super::{verify_cert, DegenCert, RestrictionCert};
use crate::algebra::{int, nullspace, rank_exact, EpsPoly, ExactMatrix, Rational, Ring};
use crate::error::{Error, Result};
use crate::tensor::{zoo, MapTriple};

/// Turns a partial degeneration of `⟨r⟩` whose constant map `A₁` has full
/// column rank `r` into a restriction `⟨r⟩ ≥ S`.
///
/// Each column pair contributes `M_i`, the `ε^d` coefficient of
/// `A₂(ε)e_i ⊗ A₃(ε)e_i`; it is a limit of rank-one matrices, so it factors as
/// `b_i ⊗ c_i` and the maps `(A₁, [b_i], [c_i])` realize the target.
pub fn rectify_full_rank_partial(cert: &DegenCert) -> Result<RestrictionCert> {
    let r = cert.source.dims()[0];
    if cert.source != zoo::unit(r) {
        return Err(Error::Precondition("source must be a unit tensor".into()));
    }
    if cert.maps.constant_slot != Some(1) || !cert.maps.maps.maps[0].is_constant() {
        return Err(Error::Precondition("first map must be declared and be constant".into()));
    }
    let a1 = cert.maps.maps.maps[0].coeff(0);
    if rank_exact(&a1) != r {
        return Err(Error::Precondition(format!("constant map has rank {} < {r}", rank_exact(&a1))));
    }
    let report = verify_cert(cert).map_err(|f| Error::Precondition(f.to_string()))?;
    let [_, a2, a3] = &cert.maps.maps.maps;
    let (v2, v3) = (a2.rows(), a3.rows());
    let mut b = ExactMatrix::zeros(v2, r);
    let mut c = ExactMatrix::zeros(v3, r);
    for i in 0..r {
        let m = limit_slice(&a2.col(i), &a3.col(i), report.d);
        if rank_exact(&m) > 1 {
            return Err(Error::Verification(format!("limit slice {} has rank above one", i + 1)));
        }
        if let Some((bi, ci)) = rank_one_factor(&m) {
            for (row, x) in bi.into_iter().enumerate() {
                b.set(row, i, x);
            }
            for (row, x) in ci.into_iter().enumerate() {
                c.set(row, i, x);
            }
        }
    }
    RestrictionCert::new(cert.source.clone(), cert.target.clone(), MapTriple::new(a1, b, c))
}

/// Coefficient of `ε^d` in `x(ε) ⊗ y(ε)`.
pub(crate) fn limit_slice(x: &[EpsPoly], y: &[EpsPoly], d: u32) -> ExactMatrix<Rational> {
    ExactMatrix::from_fn(x.len(), y.len(), |r, c| x[r].mul(&y[c]).coeff(d))
}

/// `M = b ⊗ c` with `b` the first nonzero column of `M`; `None` for `M = 0`.
pub(crate) fn rank_one_factor(m: &ExactMatrix<Rational>) -> Option<(Vec<Rational>, Vec<Rational>)> {
    let col = (0..m.cols()).find(|&c| m.col(c).iter().any(|x| !Ring::is_zero(x)))?;
    let b = m.col(col);
    let r0 = b.iter().position(|x| !Ring::is_zero(x))?;
    let c = m.row(r0).iter().map(|x| x / &b[r0]).collect();
    Some((b, c))
}

/// `A₁ = A · M_q · D · P` for a corank-one `(r−1)×r` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorankOneFactorization {
    /// Invertible `(r−1)×(r−1)`.
    pub a: ExactMatrix<Rational>,
    /// `e_i ↦ e_i` for `i < r`, `e_r ↦ e₁ + ⋯ + e_{q−1}`.
    pub m_q: ExactMatrix<Rational>,
    /// Diagonal `r×r`.
    pub d: ExactMatrix<Rational>,
    /// Permutation `r×r`.
    pub p: ExactMatrix<Rational>,
    pub q: usize,
}

impl CorankOneFactorization {
    pub fn product(&self) -> ExactMatrix<Rational> {
        self.a
            .matmul(&self.m_q)
            .and_then(|x| x.matmul(&self.d))
            .and_then(|x| x.matmul(&self.p))
            .expect("factor shapes agree")
    }
}

/// Factors a rank-`(r−1)` map `A₁ : ℂ^r → ℂ^{r−1}`.
///
/// The kernel vector `n` singles out the dependent column (the largest index in
/// its support) and `q = |supp n|`. The permutation sends the other support
/// columns to positions `1..q−1` in increasing order, the columns outside the
/// support to `q..r−1`, and the dependent column to `r`. `q = 1` happens exactly
/// when `A₁` has a zero column.
pub fn factor_corank_one(a1: &ExactMatrix<Rational>) -> Result<CorankOneFactorization> {
    let r = a1.cols();
    if r < 2 || a1.rows() != r - 1 {
        return Err(Error::Dimension(format!("expected an (r−1)×r matrix, got {:?}", a1.shape())));
    }
    if rank_exact(a1) != r - 1 {
        return Err(Error::Precondition(format!("rank {} differs from r−1 = {}", rank_exact(a1), r - 1)));
    }
    let kernel = nullspace(a1);
    let n = &kernel[0];
    let support: Vec<usize> = (0..r).filter(|&i| !Ring::is_zero(&n[i])).collect();
    let dep = *support.last().expect("kernel vector is nonzero");
    let q = support.len();
    let mut order: Vec<usize> = support[..q - 1].to_vec();
    order.extend((0..r).filter(|i| !support.contains(i)));
    order.push(dep);
    // A₁e_dep = Σ λ_j A₁e_{s_j}
    let lambdas: Vec<Rational> = support[..q - 1].iter().map(|&s| -(&n[s] / &n[dep])).collect();
    let a = ExactMatrix::from_fn(r - 1, r - 1, |row, i| {
        let x = a1.get(row, order[i]).clone();
        if i < q - 1 { x * &lambdas[i] } else { x }
    });
    let m_q = ExactMatrix::from_fn(r - 1, r, |row, c| {
        if c == r - 1 {
            if row < q - 1 { int(1) } else { int(0) }
        } else if row == c {
            int(1)
        } else {
            int(0)
        }
    });
    let d = ExactMatrix::from_fn(r, r, |row, c| match (row == c, row < q - 1) {
        (true, true) => lambdas[row].recip(),
        (true, false) => int(1),
        _ => int(0),
    });
    let p = ExactMatrix::from_fn(r, r, |row, c| if order[row] == c { int(1) } else { int(0) });
    Ok(CorankOneFactorization { a, m_q, d, p, q })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_case_has_q_one() {
        let a1 = ExactMatrix::from_ints(&[&[1, 0, 0], &[0, 1, 0]]);
        let f = factor_corank_one(&a1).unwrap();
        assert_eq!(f.q, 1);
        assert_eq!(f.d, ExactMatrix::identity(3));
        assert_eq!(f.p, ExactMatrix::identity(3));
        assert_eq!(f.product(), a1);
    }

    #[test]
    fn strassen_map() {
        let a1 = ExactMatrix::from_ints(&[&[1, 0, 0, -1], &[0, 1, 0, -1], &[0, 0, 1, -1]]);
        let f = factor_corank_one(&a1).unwrap();
        assert_eq!(f.q, 4);
        assert_eq!(f.d, ExactMatrix::diag(&[int(-1), int(-1), int(-1), int(1)]));
        assert_eq!(f.p, ExactMatrix::identity(4));
        assert_eq!(f.product(), a1);
    }

    #[test]
    fn shuffled_columns() {
        // e₁, e₃, e₂, −e₁−e₂: the column e₃ lies outside the dependency
        let a1 = ExactMatrix::from_ints(&[&[1, 0, 0, -1], &[0, 0, 1, -1], &[0, 1, 0, 0]]);
        let f = factor_corank_one(&a1).unwrap();
        assert_eq!(f.q, 3);
        assert_eq!(f.product(), a1);
        let swap = ExactMatrix::from_ints(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
        assert_eq!(f.p, swap);
    }

    #[test]
    fn wrong_rank_is_rejected() {
        assert!(factor_corank_one(&ExactMatrix::from_ints(&[&[1, 1, 0], &[2, 2, 0]])).is_err());
    }
}
