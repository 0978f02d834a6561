use super::{zoo, MapTriple, Tensor3};
use crate::algebra::{ExactMatrix, Rational, Ring};
use crate::error::{Error, Result};

/// Kronecker product `T ⊠ S`. The composite index of `(i, j)` on an axis is
/// `(i−1)·v + j`, where `v` is the size of that axis of `S`.
pub fn kron<S: Ring>(t: &Tensor3<S>, s: &Tensor3<S>) -> Tensor3<S> {
    let [u1, u2, u3] = t.dims();
    let [v1, v2, v3] = s.dims();
    let mut out = Tensor3::zeros([u1 * v1, u2 * v2, u3 * v3]);
    for ([a, b, c], x) in t.nonzeros() {
        for ([d, e, f], y) in s.nonzeros() {
            out.set((a - 1) * v1 + d, (b - 1) * v2 + e, (c - 1) * v3 + f, x.mul(y));
        }
    }
    out
}

/// Block-diagonal direct sum `T ⊕ S`.
pub fn direct_sum<S: Ring>(t: &Tensor3<S>, s: &Tensor3<S>) -> Result<Tensor3<S>> {
    if t.is_empty() || s.is_empty() {
        return Err(Error::Dimension("direct sum with an empty factor".into()));
    }
    let [u1, u2, u3] = t.dims();
    let [v1, v2, v3] = s.dims();
    let mut out = Tensor3::zeros([u1 + v1, u2 + v2, u3 + v3]);
    for ([a, b, c], x) in t.nonzeros() {
        out.set(a, b, c, x.clone());
    }
    for ([a, b, c], x) in s.nonzeros() {
        out.set(u1 + a, u2 + b, u3 + c, x.clone());
    }
    Ok(out)
}

/// Direct sum of two matrix pencils: both slices become block diagonal while
/// the pencil axis stays 2-dimensional.
pub fn pencil_direct_sum<S: Ring>(p: &Tensor3<S>, q: &Tensor3<S>) -> Result<Tensor3<S>> {
    if p.dims()[0] != 2 || q.dims()[0] != 2 {
        return Err(Error::Precondition(format!(
            "pencils need first dimension 2, got {:?} and {:?}",
            p.dims(),
            q.dims()
        )));
    }
    let slices = [1, 2].map(|k| p.slice(1, k).block_diag(&q.slice(1, k)));
    Tensor3::from_slices(&slices)
}

/// The aided tensor `T ⊠ ⟨1,1,p⟩`.
pub fn aid(t: &Tensor3<Rational>, p: usize) -> Result<Tensor3<Rational>> {
    if p == 0 {
        return Err(Error::InvalidParameter("aiding rank must be at least 1".into()));
    }
    Ok(kron(t, &zoo::mamu(1, 1, p)?))
}

/// Applies `a` (shape `v × u_axis`) to one factor.
pub fn mode_product<S: Ring>(t: &Tensor3<S>, axis: usize, a: &ExactMatrix<S>) -> Result<Tensor3<S>> {
    let mut dims = t.dims();
    if !(1..=3).contains(&axis) || a.cols() != dims[axis - 1] {
        return Err(Error::Dimension(format!(
            "map of shape {:?} on axis {axis} of a {:?} tensor",
            a.shape(),
            t.dims()
        )));
    }
    dims[axis - 1] = a.rows();
    let mut out = Tensor3::zeros(dims);
    for (ix, x) in t.nonzeros() {
        let src = ix[axis - 1] - 1;
        for r in 0..a.rows() {
            let coef = a.get(r, src);
            if coef.is_zero() {
                continue;
            }
            let mut jx = ix;
            jx[axis - 1] = r + 1;
            out.add_at(jx[0], jx[1], jx[2], &coef.mul(x));
        }
    }
    Ok(out)
}

/// `(A₁ ⊗ A₂ ⊗ A₃) T`.
pub fn apply_restriction<S: Ring>(maps: &MapTriple<S>, t: &Tensor3<S>) -> Result<Tensor3<S>> {
    if maps.source_dims() != t.dims() {
        return Err(Error::Dimension(format!(
            "maps expect source {:?}, tensor has {:?}",
            maps.source_dims(),
            t.dims()
        )));
    }
    let t = mode_product(t, 1, &maps.maps[0])?;
    let t = mode_product(&t, 2, &maps.maps[1])?;
    mode_product(&t, 3, &maps.maps[2])
}

/// Cyclic rotation of the factors: `rotate(T)_{i₂ i₃ i₁} = T_{i₁ i₂ i₃}`.
pub fn rotate<S: Ring>(t: &Tensor3<S>) -> Tensor3<S> {
    let [u1, u2, u3] = t.dims();
    Tensor3::from_fn([u2, u3, u1], |b, c, a| t.get(a, b, c).clone())
}
