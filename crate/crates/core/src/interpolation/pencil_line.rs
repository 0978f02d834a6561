use super::interleave;
use crate::algebra::{int, inverse, ExactMatrix, Rational};
use crate::degeneration::RestrictionCert;
use crate::error::{Error, Result};
use crate::orbits::{dense_orbit_test, pencil_normalize};
use crate::tensor::{aid, apply_restriction, MapTriple, Tensor3};

const SCAN_LIMIT: u32 = 100;

/// Restriction `T^{■c+1} ≥ S` for `S = Σ_j λ_j (id⊗g₂⁽ʲ⁾⊗g₃⁽ʲ⁾)T` with maps
/// `id`, `Σ λ_j g₂⁽ʲ⁾⊗e_j^*` and `Σ g₃⁽ʲ⁾⊗e_j^*`.
pub fn span_interpolation(
    t: &Tensor3,
    witnesses: &[(ExactMatrix<Rational>, ExactMatrix<Rational>)],
    lambdas: &[Rational],
    s: &Tensor3,
) -> Result<RestrictionCert> {
    if witnesses.is_empty() || witnesses.len() != lambdas.len() {
        return Err(Error::InvalidParameter(format!("{} witnesses against {} coefficients", witnesses.len(), lambdas.len())));
    }
    let [u1, _, _] = t.dims();
    let mut sum = Tensor3::zeros(s.dims());
    for ((g2, g3), l) in witnesses.iter().zip(lambdas) {
        let moved = apply_restriction(&MapTriple::new(ExactMatrix::identity(u1), g2.clone(), g3.clone()), t)?;
        sum = sum.add(&moved.scale(l))?;
    }
    if &sum != s {
        return Err(Error::Verification("the combination of the witnesses does not reproduce the target".into()));
    }
    let twos: Vec<_> = witnesses.iter().zip(lambdas).map(|((g2, _), l)| g2.scale(l)).collect();
    let threes: Vec<_> = witnesses.iter().map(|(_, g3)| g3.clone()).collect();
    let maps = MapTriple::new(ExactMatrix::identity(u1), interleave(&twos), interleave(&threes));
    RestrictionCert::new(aid(t, witnesses.len())?, s.clone(), maps)
}

/// Two points of the line `L(ε) = T + ε(S − T)` in the dense orbit of `T`,
/// with `S = λ₀T + λ₁L(ε₀)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilLine {
    /// `None` when `S = T`, which needs only one witness.
    pub eps0: Option<u32>,
    pub witnesses: Vec<(ExactMatrix<Rational>, ExactMatrix<Rational>)>,
    pub lambdas: Vec<Rational>,
}

fn slices(t: &Tensor3) -> (ExactMatrix<Rational>, ExactMatrix<Rational>) {
    (t.slice(1, 1), t.slice(1, 2))
}

/// Scans `ε₀ = 1, 2, …, 100` for a point `L(ε₀)` in the dense orbit and
/// builds the group elements carrying `T` there from the normal forms of both.
pub fn pencil_line_two_points(t: &Tensor3, s: &Tensor3) -> Result<PencilLine> {
    let [u1, m, n] = t.dims();
    if u1 != 2 || n != m + 1 || s.dims() != t.dims() || !dense_orbit_test(t) {
        return Err(Error::Precondition("T must be a dense-orbit pencil in ℂ²⊗ℂ^m⊗ℂ^{m+1} of the shape of S".into()));
    }
    if s == t {
        return Ok(PencilLine {
            eps0: None,
            witnesses: vec![(ExactMatrix::identity(m), ExactMatrix::identity(n))],
            lambdas: vec![int(1)],
        });
    }
    let (t1, t2) = slices(t);
    let (bt, ct) = pencil_normalize(&t1, &t2).ok_or_else(|| Error::Verification("dense pencil failed to normalize".into()))?;
    let diff = s.sub(t)?;
    for e0 in 1..=SCAN_LIMIT {
        let e = int(e0 as i64);
        let l = t.add(&diff.scale(&e))?;
        let (l1, l2) = slices(&l);
        let Some((bl, cl)) = pencil_normalize(&l1, &l2) else { continue };
        // slices of L are bl⁻¹·B_T·P_i·C_T·cl⁻¹
        let g2 = inverse(&bl).expect("invertible").matmul(&bt)?;
        let g3 = ct.matmul(&inverse(&cl).expect("invertible"))?.transpose();
        return Ok(PencilLine {
            eps0: Some(e0),
            witnesses: vec![(ExactMatrix::identity(m), ExactMatrix::identity(n)), (g2, g3)],
            lambdas: vec![(&e - int(1)) / &e, int(1) / &e],
        });
    }
    Err(Error::Precondition(format!("no point of the line within ε₀ ≤ {SCAN_LIMIT} has a dense orbit")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random;
    use crate::tensor::zoo;

    #[test]
    fn single_witness_is_trivial() {
        let w = zoo::w();
        let c = span_interpolation(&w, &[(ExactMatrix::identity(2), ExactMatrix::identity(2))], &[int(1)], &w).unwrap();
        assert_eq!(c.source, w);
    }

    #[test]
    fn wrong_coefficient_is_rejected() {
        let t = zoo::canonical_pencil(2).unwrap();
        let s = zoo::prehom_witness(2, 2, 3).unwrap();
        let mut line = pencil_line_two_points(&t, &s).unwrap();
        line.lambdas[0] += int(1);
        assert!(span_interpolation(&t, &line.witnesses, &line.lambdas, &s).is_err());
    }

    #[test]
    fn line_through_witness() {
        let t = zoo::canonical_pencil(2).unwrap();
        let s = zoo::prehom_witness(2, 2, 3).unwrap();
        let line = pencil_line_two_points(&t, &s).unwrap();
        assert!(line.eps0.unwrap() <= 3);
        let c = span_interpolation(&t, &line.witnesses, &line.lambdas, &s).unwrap();
        assert_eq!(c.source, aid(&t, 2).unwrap());
        let same = pencil_line_two_points(&t, &t).unwrap();
        assert_eq!((same.eps0, same.lambdas.len()), (None, 1));
    }

    #[test]
    fn random_targets_for_canonical_pencil() {
        let t = zoo::canonical_pencil(3).unwrap();
        let mut rng = random::rng(11);
        for _ in 0..5 {
            let s = Tensor3::from_fn([2, 3, 4], |_, _, _| random::small_int(&mut rng, 5));
            let line = pencil_line_two_points(&t, &s).unwrap();
            assert!(span_interpolation(&t, &line.witnesses, &line.lambdas, &s).is_ok());
        }
    }

    #[test]
    fn non_dense_start_is_rejected() {
        let s = zoo::prehom_witness(2, 2, 3).unwrap();
        assert!(matches!(pencil_line_two_points(&s, &s), Err(Error::Precondition(_))));
    }
}
