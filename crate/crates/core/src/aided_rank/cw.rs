use super::substitution::{substitution_step, PivotRecord, SubstitutionState};
use super::{verify_spanning_cert, SpanningCert};
use crate::algebra::{int, uniform_rank_at_least, ExactMatrix, Rational};
use crate::error::{Error, Result};
use crate::tensor::{kron, zoo};

/// `q + 1 + ⌈(q+2)/p⌉`.
pub fn cw_formula(q: usize, p: usize) -> usize {
    q + 1 + (q + 2).div_ceil(p)
}

/// `q² + 4q + 3 + ⌈(q+2)²/p²⌉`, an upper bound for `R^{■p²}(CW_q^{⊠2})`.
pub fn cw2_formula(q: usize, p: usize) -> usize {
    q * q + 4 * q + 3 + ((q + 2) * (q + 2)).div_ceil(p * p)
}

/// Contiguous bands of `p` rows; each band keeps its rows and zeroes the rest,
/// so it has rank at most `p` and the bands sum to `m`.
pub fn row_bands(m: &ExactMatrix<Rational>, p: usize) -> Vec<ExactMatrix<Rational>> {
    (0..m.rows().div_ceil(p))
        .map(|b| ExactMatrix::from_fn(m.rows(), m.cols(), |r, c| if r / p == b { m.get(r, c).clone() } else { int(0) }))
        .collect()
}

fn need_p(p: usize) -> Result<()> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!("aiding rank p = {p} < 2")));
    }
    Ok(())
}

/// `coefficients[i][j] = 1` for each `j` in `columns[i]`.
fn indicator(columns: &[Vec<usize>], width: usize) -> ExactMatrix<Rational> {
    ExactMatrix::from_fn(columns.len(), width, |i, j| int(columns[i].contains(&j) as i64))
}

/// `q + 1 + ⌈(q+2)/p⌉` matrices: the slices at `e_{q+1}, …, e₁` (ranks 1 and
/// 2) and row bands of the full-rank slice at `e₀`.
pub fn cw_upper_cert(q: usize, p: usize) -> Result<SpanningCert> {
    need_p(p)?;
    let t = zoo::cw(q)?;
    let mut matrices: Vec<_> = (2..=q + 2).map(|l| t.slice(1, l)).collect();
    let bands = row_bands(&t.slice(1, 1), p);
    let first: Vec<usize> = (q + 1..q + 1 + bands.len()).collect();
    matrices.extend(bands);
    let mut columns = vec![first];
    columns.extend((0..=q).map(|j| vec![j]));
    let cert = SpanningCert { coefficients: indicator(&columns, matrices.len()), target: t, p, matrices };
    debug_assert!(verify_spanning_cert(&cert));
    Ok(cert)
}

/// Spanning set for `CW_q^{⊠2}` at aiding rank `p²`: every slice except the one
/// at `e₀⊗e₀` (ranks at most `2(q+2)`), and row bands of that one.
pub fn cw2_upper_cert(q: usize, p: usize) -> Result<SpanningCert> {
    need_p(p)?;
    if p * p < 2 * (q + 2) {
        return Err(Error::InvalidParameter(format!("need p² ≥ 2(q+2), got p = {p}, q = {q}")));
    }
    let c = zoo::cw(q)?;
    let t = kron(&c, &c);
    let n = t.dims()[0];
    let mut matrices: Vec<_> = (2..=n).map(|l| t.slice(1, l)).collect();
    let bands = row_bands(&t.slice(1, 1), p * p);
    let first: Vec<usize> = (n - 1..n - 1 + bands.len()).collect();
    matrices.extend(bands);
    let mut columns = vec![first];
    columns.extend((0..n - 1).map(|j| vec![j]));
    Ok(SpanningCert { coefficients: indicator(&columns, matrices.len()), target: t, p: p * p, matrices })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CwLowerReport {
    pub q: usize,
    pub p: usize,
    pub steps: Vec<PivotRecord>,
    /// The last remaining slice has rank `q + 2` for every value of the λ's.
    pub residual_full_rank: bool,
    pub bound: usize,
}

/// Eliminates the slices at `e_{q+1}, e_q, …, e₁` in turn. Every pivot must be
/// nowhere zero and of rank at most `p` for all values of the λ's, and the
/// residual at `e₀` must keep rank `q + 2` everywhere; then
/// `R^{■p}(CW_q) ≥ q + 1 + ⌈(q+2)/p⌉`.
pub fn cw_lower_bound(q: usize, p: usize) -> Result<CwLowerReport> {
    need_p(p)?;
    let mut state = SubstitutionState::new(&zoo::cw(q)?);
    for label in (2..=q + 2).rev() {
        state = substitution_step(&state, label, p)?;
        let rec = state.log.last().expect("one step taken");
        if !(rec.rank_at_most_p && rec.nonvanishing) {
            return Err(Error::Verification(format!("pivot {label} is not uniformly of rank ≤ {p}")));
        }
    }
    let residual_full_rank = uniform_rank_at_least(&state.slices[0], q + 2);
    if !residual_full_rank {
        return Err(Error::Verification("residual slice is not uniformly of full rank".into()));
    }
    Ok(CwLowerReport { q, p, steps: state.log, residual_full_rank, bound: q + 1 + (q + 2).div_ceil(p) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aided_rank::conciseness_lower_bound;
    use crate::algebra::rank_exact;

    #[test]
    fn formula_values() {
        assert_eq!(cw_formula(2, 2), 5);
        assert_eq!(cw_formula(3, 5), 5);
        assert_eq!(cw_formula(5, 7), 7);
        assert_eq!(cw_formula(11, 6), 15);
        assert_eq!(cw_formula(11, 7), 14);
        assert_eq!(cw2_formula(2, 3), 17);
        assert_eq!(cw2_formula(11, 6), 173);
    }

    #[test]
    fn bands_split_rank() {
        let m = ExactMatrix::identity(5);
        let b = row_bands(&m, 2);
        assert_eq!(b.len(), 3);
        assert!(b.iter().all(|x| rank_exact(x) <= 2));
        let sum = b.iter().skip(1).fold(b[0].clone(), |acc, x| acc.add(x).unwrap());
        assert_eq!(sum, m);
    }

    #[test]
    fn upper_certificates_verify() {
        for (q, p) in [(2, 2), (5, 7), (1, 2), (3, 4)] {
            let c = cw_upper_cert(q, p).unwrap();
            assert!(verify_spanning_cert(&c));
            assert_eq!(c.size(), cw_formula(q, p));
            assert!(c.size() >= conciseness_lower_bound(&c.target));
        }
        let c = cw2_upper_cert(2, 3).unwrap();
        assert!(verify_spanning_cert(&c));
        assert_eq!(c.size(), 17);
        assert!(cw2_upper_cert(2, 2).is_err());
        assert!(cw_upper_cert(2, 1).is_err());
    }

    #[test]
    fn lower_matches_upper() {
        for q in 2..=4 {
            for p in 2..=q + 2 {
                let r = cw_lower_bound(q, p).unwrap();
                assert_eq!(r.bound, cw_upper_cert(q, p).unwrap().size(), "q = {q}, p = {p}");
                assert_eq!(r.steps.len(), q + 1);
            }
        }
    }

    #[test]
    fn smallest_case() {
        assert_eq!(cw_lower_bound(1, 2).unwrap().bound, 4);
        assert_eq!(cw_upper_cert(1, 2).unwrap().size(), 4);
    }
}
