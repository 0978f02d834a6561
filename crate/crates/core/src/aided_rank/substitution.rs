use super::{verify_spanning_cert, SpanningCert};
use crate::algebra::{generic_rank, ExactMatrix, MultiPoly, Rational, Ring};
use crate::error::{Error, Result};
use crate::tensor::Tensor3;

/// One elimination: the pivot slice and the indeterminates introduced for the
/// other slices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotRecord {
    /// 1-based index of the pivot among the original slices.
    pub label: usize,
    /// Rank of the pivot at most `p` for every value of the earlier λ's.
    pub rank_at_most_p: bool,
    /// Some entry of the pivot is a nonzero constant, so it never vanishes.
    pub nonvanishing: bool,
    /// `(label, variable)` for each remaining slice `M_j − λ·M_pivot`.
    pub lambdas: Vec<(usize, usize)>,
}

/// Remaining slices, polynomial in the λ's introduced so far.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionState {
    pub slices: Vec<ExactMatrix<MultiPoly>>,
    pub labels: Vec<usize>,
    pub log: Vec<PivotRecord>,
    pub vars: usize,
}

impl SubstitutionState {
    pub fn new(s: &Tensor3) -> Self {
        let u1 = s.dims()[0];
        Self {
            slices: (1..=u1).map(|i| s.slice(1, i).to_multi()).collect(),
            labels: (1..=u1).collect(),
            log: Vec::new(),
            vars: 0,
        }
    }

    pub fn steps(&self) -> usize {
        self.log.len()
    }

    /// Slices at a point of the λ's (indexed by variable).
    pub fn eval(&self, point: &[Rational]) -> Vec<ExactMatrix<Rational>> {
        self.slices.iter().map(|m| m.eval(point)).collect()
    }
}

/// Replaces every other slice `M_j` by `M_j − λ_j M_pivot` with fresh `λ_j`.
pub fn substitution_step(state: &SubstitutionState, pivot: usize, p: usize) -> Result<SubstitutionState> {
    let pos = state
        .labels
        .iter()
        .position(|&l| l == pivot)
        .ok_or_else(|| Error::InvalidParameter(format!("slice {pivot} is not among the remaining slices")))?;
    let m = &state.slices[pos];
    if m.is_zero() {
        return Err(Error::Precondition(format!("pivot slice {pivot} is zero")));
    }
    let nonvanishing = m.entries().iter().any(|e| e.as_constant().is_some_and(|c| !Ring::is_zero(&c)));
    let mut next = SubstitutionState { slices: Vec::new(), labels: Vec::new(), log: state.log.clone(), vars: state.vars };
    let mut lambdas = Vec::new();
    for (j, (s, &l)) in state.slices.iter().zip(&state.labels).enumerate() {
        if j == pos {
            continue;
        }
        let lambda = MultiPoly::var(next.vars);
        lambdas.push((l, next.vars));
        next.vars += 1;
        next.slices.push(s.sub(&m.map(|x| x.mul(&lambda))).expect("equal shapes"));
        next.labels.push(l);
    }
    next.log.push(PivotRecord { label: pivot, rank_at_most_p: generic_rank(m) <= p, nonvanishing, lambdas });
    Ok(next)
}

/// The specialization behind the first half of the substitution method: with
/// `μ` the coefficients of a spanning certificate and `X_{j₀}` a matrix used by
/// the pivot, `λ_j = μ_{j,j₀}/μ_{pivot,j₀}` makes the remaining slices
/// `M_j − λ_j M_pivot` a combination of the other matrices.
///
/// Returns the λ's (in slice order, pivot skipped), the reduced tensor and its
/// certificate with one matrix fewer.
pub fn specialize_from_cert(cert: &SpanningCert, pivot: usize) -> Result<(Vec<Rational>, Tensor3, SpanningCert)> {
    let [u1, u2, u3] = cert.target.dims();
    if !(1..=u1).contains(&pivot) || !verify_spanning_cert(cert) {
        return Err(Error::Precondition("pivot out of range or certificate invalid".into()));
    }
    let mu = &cert.coefficients;
    let pi = pivot - 1;
    let j0 = (0..cert.size())
        .find(|&j| !Ring::is_zero(mu.get(pi, j)))
        .ok_or_else(|| Error::Precondition(format!("pivot slice {pivot} is zero")))?;
    let others: Vec<usize> = (0..u1).filter(|&i| i != pi).collect();
    let lambdas: Vec<Rational> = others.iter().map(|&i| mu.get(i, j0) / mu.get(pi, j0)).collect();
    let pivot_slice = cert.target.slice(1, pivot);
    let slices: Vec<_> = others
        .iter()
        .zip(&lambdas)
        .map(|(&i, l)| cert.target.slice(1, i + 1).sub(&pivot_slice.scale(l)).expect("equal shapes"))
        .collect();
    let reduced = if slices.is_empty() { Tensor3::zeros([0, u2, u3]) } else { Tensor3::from_slices(&slices)? };
    let keep: Vec<usize> = (0..cert.size()).filter(|&j| j != j0).collect();
    let coefficients = ExactMatrix::from_fn(others.len(), keep.len(), |r, c| {
        mu.get(others[r], keep[c]) - &lambdas[r] * mu.get(pi, keep[c])
    });
    let out = SpanningCert {
        target: reduced.clone(),
        p: cert.p,
        matrices: keep.iter().map(|&j| cert.matrices[j].clone()).collect(),
        coefficients,
    };
    if !verify_spanning_cert(&out) {
        return Err(Error::Verification("specialized certificate does not verify".into()));
    }
    Ok((lambdas, reduced, out))
}
