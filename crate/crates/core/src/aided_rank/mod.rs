//! Aided rank `R^{■p}`: spanning certificates for upper bounds, the
//! substitution method and determinant obstructions for lower bounds.

mod cw;
mod substitution;

pub use cw::{cw2_formula, cw2_upper_cert, cw_formula, cw_lower_bound, cw_upper_cert, row_bands, CwLowerReport};
pub use substitution::{specialize_from_cert, substitution_step, PivotRecord, SubstitutionState};

use std::fmt;

use crate::algebra::{det_poly, int, rank_exact, solve_exact, ExactMatrix, MultiPoly, Rational, Ring};
use crate::error::{Error, Result};
use crate::tensor::{flatten, kron, pencil_direct_sum, Tensor3};

/// Matrices of rank at most `p` whose span contains every axis-1 slice of the
/// target; row `i` of `coefficients` writes slice `i` in them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningCert {
    pub target: Tensor3,
    pub p: usize,
    pub matrices: Vec<ExactMatrix<Rational>>,
    pub coefficients: ExactMatrix<Rational>,
}

impl SpanningCert {
    /// Solves for the coefficients; `None` if some slice is outside the span.
    pub fn from_matrices(target: &Tensor3, p: usize, matrices: Vec<ExactMatrix<Rational>>) -> Option<Self> {
        let [u1, _, _] = target.dims();
        let columns: Vec<Vec<Rational>> = matrices.iter().map(|m| m.entries().to_vec()).collect();
        let width = target.len() / u1.max(1);
        let basis = ExactMatrix::from_columns(width, &columns);
        let mut rows = Vec::with_capacity(u1);
        for i in 1..=u1 {
            rows.push(solve_exact(&basis, target.slice(1, i).entries())?);
        }
        let coefficients = if rows.is_empty() { ExactMatrix::zeros(0, matrices.len()) } else { ExactMatrix::from_rows(rows) };
        Some(Self { target: target.clone(), p, matrices, coefficients })
    }

    pub fn size(&self) -> usize {
        self.matrices.len()
    }

    /// The same matrices read as a certificate for a larger aiding rank.
    pub fn with_p(&self, p: usize) -> Self {
        Self { p, ..self.clone() }
    }

    /// Certificate for `T ⊠ S` at aiding rank `p·p'` from the Kronecker
    /// products of the matrices and of the coefficient tables.
    pub fn kron(&self, other: &Self) -> Self {
        let mut matrices = Vec::with_capacity(self.size() * other.size());
        for a in &self.matrices {
            for b in &other.matrices {
                matrices.push(a.kron(b));
            }
        }
        Self {
            target: kron(&self.target, &other.target),
            p: self.p * other.p,
            matrices,
            coefficients: self.coefficients.kron(&other.coefficients),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanningFailure {
    Shape(String),
    RankTooLarge { index: usize, rank: usize, p: usize },
    SliceMismatch { slice: usize },
}

impl fmt::Display for SpanningFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpanningFailure::Shape(s) => write!(f, "shape mismatch: {s}"),
            SpanningFailure::RankTooLarge { index, rank, p } => write!(f, "matrix {index} has rank {rank} > {p}"),
            SpanningFailure::SliceMismatch { slice } => write!(f, "slice {slice} is not the stated combination"),
        }
    }
}

pub fn check_spanning_cert(cert: &SpanningCert) -> std::result::Result<(), SpanningFailure> {
    let [u1, u2, u3] = cert.target.dims();
    let r = cert.matrices.len();
    if cert.coefficients.shape() != (u1, r) {
        return Err(SpanningFailure::Shape(format!("coefficients {:?}, expected {:?}", cert.coefficients.shape(), (u1, r))));
    }
    for (index, m) in cert.matrices.iter().enumerate() {
        if m.shape() != (u2, u3) {
            return Err(SpanningFailure::Shape(format!("matrix {} is {:?}, expected {:?}", index + 1, m.shape(), (u2, u3))));
        }
        let rank = rank_exact(m);
        if rank > cert.p {
            return Err(SpanningFailure::RankTooLarge { index: index + 1, rank, p: cert.p });
        }
    }
    for i in 1..=u1 {
        let mut sum = ExactMatrix::zeros(u2, u3);
        for (j, m) in cert.matrices.iter().enumerate() {
            sum = sum.add(&m.scale(cert.coefficients.get(i - 1, j))).expect("shapes checked");
        }
        if sum != cert.target.slice(1, i) {
            return Err(SpanningFailure::SliceMismatch { slice: i });
        }
    }
    Ok(())
}

/// Certifies `R^{■p}(target) ≤ size`.
pub fn verify_spanning_cert(cert: &SpanningCert) -> bool {
    check_spanning_cert(cert).is_ok()
}

/// Dimension of the span of the axis-1 slices; no fewer matrices can span it,
/// whatever their rank.
pub fn conciseness_lower_bound(s: &Tensor3) -> usize {
    flatten(s, 1).rank()
}

/// `det(Σ x_i M_i)` over the axis-1 slices, variable `i−1` for slice `i`.
pub fn generic_slice_determinant(s: &Tensor3) -> Result<MultiPoly> {
    let [u1, u2, u3] = s.dims();
    if u2 != u3 {
        return Err(Error::Dimension(format!("slices are {u2}×{u3}, not square")));
    }
    let generic = ExactMatrix::from_fn(u2, u3, |r, c| {
        let mut e = MultiPoly::zero();
        for i in 0..u1 {
            let x = s.get(i + 1, r + 1, c + 1);
            if !Ring::is_zero(x) {
                e.add_assign(&MultiPoly::var(i).scale(x));
            }
        }
        e
    });
    Ok(det_poly(&generic))
}

/// True when `R^{■p}(S) > u₁` follows from the determinant of the generic slice
/// being `c·x^n` for a single variable `x` and `p < n`: every matrix of rank
/// below `n` in the slice span has `x = 0`, and a spanning set of `u₁` matrices
/// must lie inside that span.
pub fn min_rank_obstruction(s: &Tensor3, p: usize) -> Result<bool> {
    let [u1, n, _] = s.dims();
    if conciseness_lower_bound(s) != u1 {
        return Err(Error::Precondition("slices are linearly dependent".into()));
    }
    let det = generic_slice_determinant(s)?;
    Ok(p < n && det.as_pure_power().is_some_and(|(_, e, _)| e as usize == n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundSource {
    FlatteningRank,
    SpanningCert,
    PencilSum,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankLedgerEntry {
    pub id: String,
    pub lower: Option<(usize, BoundSource)>,
    pub upper: Option<(usize, BoundSource)>,
}

impl RankLedgerEntry {
    pub fn consistent(&self) -> bool {
        match (self.lower, self.upper) {
            (Some((l, _)), Some((u, _))) => l <= u,
            _ => true,
        }
    }
}

/// Ledger entry for a single tensor: the largest flattening rank below and,
/// if given and valid, a `p = 1` spanning certificate above.
pub fn rank_ledger_entry(id: &str, t: &Tensor3, upper: Option<&SpanningCert>) -> Result<RankLedgerEntry> {
    let lower = (1..=3).map(|a| flatten(t, a).rank()).max().unwrap_or(0);
    let upper = match upper {
        Some(c) if c.p == 1 && &c.target == t && verify_spanning_cert(c) => Some((c.size(), BoundSource::SpanningCert)),
        Some(_) => return Err(Error::Verification(format!("upper certificate for {id} is not a valid rank decomposition"))),
        None => None,
    };
    Ok(RankLedgerEntry { id: id.into(), lower: Some((lower, BoundSource::FlatteningRank)), upper })
}

/// Rank bounds for the block-diagonal sum of two pencils, where ranks add.
pub fn rank_ledger_pencil(t1: &Tensor3, t2: &Tensor3, b1: &RankLedgerEntry, b2: &RankLedgerEntry) -> Result<RankLedgerEntry> {
    pencil_direct_sum(t1, t2)?;
    let sum = |a: Option<(usize, BoundSource)>, b: Option<(usize, BoundSource)>| Some((a?.0 + b?.0, BoundSource::PencilSum));
    Ok(RankLedgerEntry { id: format!("{} ⊕ {}", b1.id, b2.id), lower: sum(b1.lower, b2.lower), upper: sum(b1.upper, b2.upper) })
}

/// Matrix units on the support of the slices: a crude rank decomposition.
pub fn support_cert(t: &Tensor3) -> SpanningCert {
    let [_, u2, u3] = t.dims();
    let mut cells: Vec<(usize, usize)> = t.nonzeros().map(|([_, j, k], _)| (j - 1, k - 1)).collect();
    cells.sort_unstable();
    cells.dedup();
    let matrices = cells.iter().map(|&(a, b)| ExactMatrix::from_fn(u2, u3, |r, c| int((r == a && c == b) as i64))).collect();
    SpanningCert::from_matrices(t, 1, matrices).expect("matrix units span the support")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::zoo;

    fn unit_matrix(n: usize, a: usize, b: usize) -> ExactMatrix<Rational> {
        ExactMatrix::from_fn(n, n, |r, c| int((r == a && c == b) as i64))
    }

    #[test]
    fn w_spanned_by_two_matrices_of_rank_two() {
        let anti = ExactMatrix::from_ints(&[&[0, 1], &[1, 0]]);
        let cert = SpanningCert::from_matrices(&zoo::w(), 2, vec![anti, unit_matrix(2, 0, 0)]).unwrap();
        assert!(verify_spanning_cert(&cert));
        assert!(!verify_spanning_cert(&cert.with_p(1)));
    }

    #[test]
    fn kronecker_powers_of_the_w_certificate() {
        let anti = ExactMatrix::from_ints(&[&[0, 1], &[1, 0]]);
        let one = SpanningCert::from_matrices(&zoo::w(), 2, vec![anti, unit_matrix(2, 0, 0)]).unwrap();
        let mut cert = one.clone();
        for k in 2..=3 {
            cert = cert.kron(&one);
            assert!(verify_spanning_cert(&cert), "k = {k}");
            assert_eq!((cert.size(), cert.p), (1 << k, 1 << k));
        }
    }

    #[test]
    fn unit_tensor_decomposition() {
        for r in 1..=4 {
            let mats = (0..r).map(|i| unit_matrix(r, i, i)).collect();
            assert!(verify_spanning_cert(&SpanningCert::from_matrices(&zoo::unit(r), 1, mats).unwrap()));
        }
    }

    #[test]
    fn w_is_not_spanned_by_two_rank_one_matrices() {
        let w = zoo::w();
        let e = |v: [i64; 2]| v.to_vec();
        let rank_one = |a: Vec<i64>, b: Vec<i64>| ExactMatrix::from_fn(2, 2, |r, c| int(a[r] * b[c]));
        let vectors = [e([1, 0]), e([0, 1]), e([1, 1]), e([1, -1]), e([2, 1])];
        for a in &vectors {
            for b in &vectors {
                for c in &vectors {
                    for d in &vectors {
                        let mats = vec![rank_one(a.clone(), b.clone()), rank_one(c.clone(), d.clone())];
                        if let Some(cert) = SpanningCert::from_matrices(&w, 1, mats) {
                            assert!(!verify_spanning_cert(&cert));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn failures_are_reported() {
        let w = zoo::w();
        let mut cert = SpanningCert::from_matrices(&w, 2, vec![ExactMatrix::from_ints(&[&[0, 1], &[1, 0]]), unit_matrix(2, 0, 0)]).unwrap();
        cert.coefficients.set(0, 0, int(2));
        assert_eq!(check_spanning_cert(&cert), Err(SpanningFailure::SliceMismatch { slice: 1 }));
        assert!(SpanningCert::from_matrices(&w, 2, vec![unit_matrix(2, 0, 0)]).is_none());
    }

    #[test]
    fn lower_bounds_from_slice_span() {
        assert_eq!(conciseness_lower_bound(&zoo::cw(3).unwrap()), 5);
        let w2 = kron(&zoo::w(), &zoo::w());
        assert_eq!(conciseness_lower_bound(&w2), 4);
        assert_eq!(conciseness_lower_bound(&Tensor3::zeros([2, 2, 2])), 0);
    }

    #[test]
    fn w_powers_have_the_obstruction() {
        let mut t = zoo::w();
        for k in 1..=3 {
            let n = 1 << k;
            assert!(min_rank_obstruction(&t, n - 1).unwrap(), "k = {k}");
            assert!(!min_rank_obstruction(&t, n).unwrap());
            t = kron(&t, &zoo::w());
        }
        assert!(!min_rank_obstruction(&zoo::unit(2), 1).unwrap());
        let degenerate = Tensor3::from_int_entries([2, 2, 2], &[([1, 1, 1], 1)]);
        assert!(matches!(min_rank_obstruction(&degenerate, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn pencil_ledger() {
        let (k, m) = (2, 4);
        let (a, b) = (zoo::s_block1(k).unwrap(), zoo::s_block2(k, m).unwrap());
        let ea = rank_ledger_entry("S1", &a, Some(&support_cert(&a))).unwrap();
        let eb = rank_ledger_entry("S2", &b, Some(&support_cert(&b))).unwrap();
        assert_eq!((ea.lower.unwrap().0, eb.lower.unwrap().0), (2, 3));
        let sum = rank_ledger_pencil(&a, &b, &ea, &eb).unwrap();
        assert_eq!(sum.lower, Some((m + 1, BoundSource::PencilSum)));
        assert!(sum.consistent());
        let (a, b) = (zoo::s_block1(3).unwrap(), zoo::s_block2(3, 5).unwrap());
        let sum = rank_ledger_pencil(&a, &b, &rank_ledger_entry("a", &a, None).unwrap(), &rank_ledger_entry("b", &b, None).unwrap()).unwrap();
        assert_eq!(sum.lower.unwrap().0, 6);
        assert!(rank_ledger_pencil(&zoo::unit(3), &a, &sum, &sum).is_err());
        let one = Tensor3::from_int_entries([2, 1, 1], &[([1, 1, 1], 1)]);
        let e1 = rank_ledger_entry("1", &one, Some(&support_cert(&one))).unwrap();
        let two = rank_ledger_pencil(&one, &one, &e1, &e1).unwrap();
        assert_eq!((two.lower.unwrap().0, two.upper.unwrap().0), (2, 2));
    }
}
