//! Dense order-3 tensors, their combinators, flattenings and named examples.

mod flatten;
mod ops;
pub mod zoo;

pub use flatten::{conciseness, flatten, flattening_ranks, Flattening};
pub use ops::{aid, apply_restriction, direct_sum, kron, mode_product, pencil_direct_sum, rotate};

use crate::algebra::{EpsPoly, ExactMatrix, MultiPoly, Rational, Ring};
use crate::error::{Error, Result};

/// Dense tensor in `U₁⊗U₂⊗U₃`. Public coordinates are 1-based, matching the
/// `e₁, e₂, …` basis notation; storage is row-major in `(i₁, i₂, i₃)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor3<S: Ring = Rational> {
    dims: [usize; 3],
    entries: Vec<S>,
}

impl<S: Ring> Tensor3<S> {
    pub fn zeros(dims: [usize; 3]) -> Self {
        Self { dims, entries: vec![S::zero(); dims[0] * dims[1] * dims[2]] }
    }

    pub fn from_entries(dims: [usize; 3], entries: Vec<S>) -> Result<Self> {
        if entries.len() != dims[0] * dims[1] * dims[2] {
            return Err(Error::Dimension(format!("{} entries for dims {dims:?}", entries.len())));
        }
        Ok(Self { dims, entries })
    }

    /// Builds from a function of 1-based coordinates.
    pub fn from_fn(dims: [usize; 3], mut f: impl FnMut(usize, usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(dims[0] * dims[1] * dims[2]);
        for a in 1..=dims[0] {
            for b in 1..=dims[1] {
                for c in 1..=dims[2] {
                    entries.push(f(a, b, c));
                }
            }
        }
        Self { dims, entries }
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        assert!(
            (1..=self.dims[0]).contains(&i) && (1..=self.dims[1]).contains(&j) && (1..=self.dims[2]).contains(&k),
            "index ({i},{j},{k}) outside {:?}",
            self.dims
        );
        ((i - 1) * self.dims[1] + (j - 1)) * self.dims[2] + (k - 1)
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &S {
        &self.entries[self.offset(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: S) {
        let o = self.offset(i, j, k);
        self.entries[o] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, v: &S) {
        let o = self.offset(i, j, k);
        self.entries[o].add_assign(v);
    }

    /// Nonzero entries with 1-based coordinates, in storage order.
    pub fn nonzeros(&self) -> impl Iterator<Item = ([usize; 3], &S)> {
        let [_, u2, u3] = self.dims;
        self.entries.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(o, v)| {
            ([o / (u2 * u3) + 1, (o / u3) % u2 + 1, o % u3 + 1], v)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(S::is_zero)
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> Tensor3<T> {
        Tensor3 { dims: self.dims, entries: self.entries.iter().map(f).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dims != other.dims {
            return Err(Error::Dimension(format!("{:?} + {:?}", self.dims, other.dims)));
        }
        Ok(Self { dims: self.dims, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.dims != other.dims {
            return Err(Error::Dimension(format!("{:?} - {:?}", self.dims, other.dims)));
        }
        Ok(Self { dims: self.dims, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.sub(b)).collect() })
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|x| x.mul(s))
    }

    /// Slice `i` (1-based) along `axis`: for axis 1 the `u₂×u₃` matrix
    /// `T(i, ·, ·)`, for axis 2 the `u₁×u₃` matrix `T(·, i, ·)`, for axis 3 the
    /// `u₁×u₂` matrix `T(·, ·, i)`.
    pub fn slice(&self, axis: usize, i: usize) -> ExactMatrix<S> {
        let [u1, u2, u3] = self.dims;
        match axis {
            1 => ExactMatrix::from_fn(u2, u3, |r, c| self.get(i, r + 1, c + 1).clone()),
            2 => ExactMatrix::from_fn(u1, u3, |r, c| self.get(r + 1, i, c + 1).clone()),
            3 => ExactMatrix::from_fn(u1, u2, |r, c| self.get(r + 1, c + 1, i).clone()),
            _ => panic!("axis must be 1, 2 or 3"),
        }
    }

    /// `Σ_i e_i ⊗ slices[i]` with axis-1 slices of equal shape.
    pub fn from_slices(slices: &[ExactMatrix<S>]) -> Result<Self> {
        let Some(first) = slices.first() else {
            return Err(Error::Dimension("no slices".into()));
        };
        let (r, c) = first.shape();
        if slices.iter().any(|s| s.shape() != (r, c)) {
            return Err(Error::Dimension("slices differ in shape".into()));
        }
        Ok(Self::from_fn([slices.len(), r, c], |i, j, k| slices[i - 1].get(j - 1, k - 1).clone()))
    }
}

impl Tensor3<Rational> {
    /// Tensor with the listed 1-based coordinates set to integer values.
    pub fn from_int_entries(dims: [usize; 3], entries: &[([usize; 3], i64)]) -> Self {
        let mut t = Self::zeros(dims);
        for &([i, j, k], v) in entries {
            t.add_at(i, j, k, &crate::algebra::int(v));
        }
        t
    }

    pub fn to_eps(&self) -> Tensor3<EpsPoly> {
        self.map(|x| EpsPoly::constant(x.clone()))
    }

    pub fn to_multi(&self) -> Tensor3<MultiPoly> {
        self.map(|x| MultiPoly::constant(x.clone()))
    }
}

impl Tensor3<EpsPoly> {
    /// Coefficient tensor of `ε^k`.
    pub fn coeff(&self, k: u32) -> Tensor3<Rational> {
        self.map(|p| p.coeff(k))
    }

    pub fn valuation(&self) -> Option<u32> {
        self.entries.iter().filter_map(EpsPoly::valuation).min()
    }

    pub fn degree(&self) -> Option<u32> {
        self.entries.iter().filter_map(EpsPoly::degree).max()
    }
}

/// Three linear maps `A_i : U_i → V_i`, stored as `v_i × u_i` matrices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MapTriple<S: Ring = Rational> {
    pub maps: [ExactMatrix<S>; 3],
}

impl<S: Ring> MapTriple<S> {
    pub fn new(a1: ExactMatrix<S>, a2: ExactMatrix<S>, a3: ExactMatrix<S>) -> Self {
        Self { maps: [a1, a2, a3] }
    }

    pub fn identity(dims: [usize; 3]) -> Self {
        Self::new(ExactMatrix::identity(dims[0]), ExactMatrix::identity(dims[1]), ExactMatrix::identity(dims[2]))
    }

    pub fn source_dims(&self) -> [usize; 3] {
        [self.maps[0].cols(), self.maps[1].cols(), self.maps[2].cols()]
    }

    pub fn target_dims(&self) -> [usize; 3] {
        [self.maps[0].rows(), self.maps[1].rows(), self.maps[2].rows()]
    }

    /// `(A₁B₁, A₂B₂, A₃B₃)`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        Ok(Self::new(
            self.maps[0].matmul(&other.maps[0])?,
            self.maps[1].matmul(&other.maps[1])?,
            self.maps[2].matmul(&other.maps[2])?,
        ))
    }
}

impl MapTriple<Rational> {
    pub fn to_eps(&self) -> MapTriple<EpsPoly> {
        MapTriple { maps: self.maps.clone().map(|m| m.to_eps()) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn nonzero_coordinates_are_one_based() {
        let t = Tensor3::from_int_entries([2, 3, 4], &[([2, 3, 4], 5), ([1, 2, 1], -1)]);
        let nz: Vec<_> = t.nonzeros().map(|(ix, v)| (ix, v.clone())).collect();
        assert_eq!(nz, vec![([1, 2, 1], int(-1)), ([2, 3, 4], int(5))]);
    }

    #[test]
    fn slices_round_trip() {
        let t = Tensor3::from_fn([2, 3, 2], |i, j, k| int((i * 100 + j * 10 + k) as i64));
        let slices: Vec<_> = (1..=2).map(|i| t.slice(1, i)).collect();
        assert_eq!(Tensor3::from_slices(&slices).unwrap(), t);
        assert_eq!(t.slice(3, 2).get(1, 2), &int(232));
    }
}
