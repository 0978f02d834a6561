//! Compressibility certificates, trace representations of restrictions of
//! matrix multiplication tensors, and the `3×4×4` honest partial degeneration.

mod trace;

pub use trace::{
    canonical_trace_rep, prop333_cert, prop333_package, prop333_trace_rep, trace_rep_to_cert, verify_trace_rep,
    Honesty, Prop333Report, TraceMode, TraceRep,
};

use crate::algebra::{int, rank_exact, ExactMatrix};
use crate::degeneration::RestrictionCert;
use crate::error::{Error, Result};
use crate::tensor::{apply_restriction, conciseness, MapTriple, Tensor3};

/// Endomorphisms `A_i` of `U_i` of ranks `a_i` with `(A₁⊗A₂⊗A₃)T = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressCert {
    pub maps: MapTriple,
    pub ranks: [usize; 3],
}

impl CompressCert {
    /// All three ranks zero: verifies for every tensor and says nothing.
    pub fn is_degenerate(&self) -> bool {
        self.ranks == [0, 0, 0]
    }
}

/// True iff `T` vanishes on the corner block of the last `a_j` coordinates of
/// every factor.
pub fn check_zero_block(t: &Tensor3, a: [usize; 3]) -> Result<bool> {
    let u = t.dims();
    if (0..3).any(|i| a[i] > u[i]) {
        return Err(Error::InvalidParameter(format!("block {a:?} larger than {u:?}")));
    }
    Ok(t.nonzeros().all(|(ix, _)| (0..3).any(|j| ix[j] <= u[j] - a[j])))
}

pub fn verify_compress_cert(t: &Tensor3, cert: &CompressCert) -> bool {
    let square = cert.maps.maps.iter().zip(t.dims()).all(|(m, u)| m.shape() == (u, u));
    square
        && (0..3).all(|i| rank_exact(&cert.maps.maps[i]) == cert.ranks[i])
        && apply_restriction(&cert.maps, t).is_ok_and(|s| s.is_zero())
}

/// Coordinate projectors onto the last `a_i` basis vectors of each factor.
pub fn projector_cert(dims: [usize; 3], a: [usize; 3]) -> Result<CompressCert> {
    if (0..3).any(|i| a[i] > dims[i]) {
        return Err(Error::InvalidParameter(format!("block {a:?} larger than {dims:?}")));
    }
    let proj = |u: usize, k: usize| ExactMatrix::from_fn(u, u, |r, c| int((r == c && r >= u - k) as i64));
    Ok(CompressCert {
        maps: MapTriple::new(proj(dims[0], a[0]), proj(dims[1], a[1]), proj(dims[2], a[2])),
        ranks: a,
    })
}

/// Carries a compressibility certificate of a concise `S` back along `T ≥ S`.
///
/// With `S = (M₁⊗M₂⊗M₃)T` and `J_i` the embedding of `V_i` as the first `v_i`
/// coordinates of `U_i`, the maps `J_i A_i M_i` annihilate `T`; conciseness of
/// `S` makes each `M_i` surjective, so the ranks are unchanged.
pub fn compress_transfer(cert_s: &CompressCert, restriction: &RestrictionCert) -> Result<CompressCert> {
    if !conciseness(&restriction.target).0 {
        return Err(Error::Precondition("target of the restriction is not concise".into()));
    }
    if !restriction.verify() {
        return Err(Error::Verification("restriction does not verify".into()));
    }
    let u = restriction.source.dims();
    let v = restriction.target.dims();
    let mut maps = Vec::with_capacity(3);
    for i in 0..3 {
        let j = ExactMatrix::from_fn(u[i], v[i], |r, c| int((r == c) as i64));
        maps.push(j.matmul(&cert_s.maps.maps[i])?.matmul(&restriction.maps.maps[i])?);
    }
    let [a1, a2, a3]: [ExactMatrix; 3] = maps.try_into().expect("three maps");
    let out = CompressCert { maps: MapTriple::new(a1, a2, a3), ranks: cert_s.ranks };
    if !verify_compress_cert(&restriction.source, &out) {
        return Err(Error::Verification("transferred certificate does not verify".into()));
    }
    Ok(out)
}
