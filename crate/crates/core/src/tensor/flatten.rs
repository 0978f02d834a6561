use super::Tensor3;
use crate::algebra::{rank_exact, ExactMatrix, Rational};

/// One flattening of a tensor. Row `i` of `matrix` is the vectorization of
/// `slices[i]`; the column order is `(i₂, i₃)` for axis 1, `(i₁, i₃)` for axis 2
/// and `(i₁, i₂)` for axis 3, last index fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flattening {
    pub axis: usize,
    pub matrix: ExactMatrix<Rational>,
    pub slices: Vec<ExactMatrix<Rational>>,
}

impl Flattening {
    pub fn rank(&self) -> usize {
        rank_exact(&self.matrix)
    }
}

/// Panics unless `axis ∈ {1, 2, 3}`.
pub fn flatten(t: &Tensor3<Rational>, axis: usize) -> Flattening {
    assert!((1..=3).contains(&axis), "axis must be 1, 2 or 3");
    let slices: Vec<_> = (1..=t.dims()[axis - 1]).map(|i| t.slice(axis, i)).collect();
    let width = t.len() / t.dims()[axis - 1].max(1);
    let matrix = ExactMatrix::from_fn(slices.len(), width, |r, c| slices[r].entries()[c].clone());
    Flattening { axis, matrix, slices }
}

pub fn flattening_ranks(t: &Tensor3<Rational>) -> [usize; 3] {
    [1, 2, 3].map(|a| flatten(t, a).rank())
}

/// Whether all three flattenings are injective, together with their ranks.
pub fn conciseness(t: &Tensor3<Rational>) -> (bool, [usize; 3]) {
    let r = flattening_ranks(t);
    (r == t.dims(), r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::tensor::zoo;

    #[test]
    fn w_slices() {
        let f = flatten(&zoo::w(), 1);
        assert_eq!(f.slices[0], ExactMatrix::from_ints(&[&[0, 1], &[1, 0]]));
        assert_eq!(f.slices[1], ExactMatrix::from_ints(&[&[1, 0], &[0, 0]]));
        assert_eq!(f.rank(), 2);
        assert_eq!(conciseness(&zoo::w()), (true, [2, 2, 2]));
    }

    #[test]
    fn degenerate_examples() {
        let t = Tensor3::from_int_entries([2, 2, 2], &[([1, 1, 1], 1)]);
        assert_eq!(conciseness(&t), (false, [1, 1, 1]));
        assert_eq!(conciseness(&zoo::unit(3)), (true, [3, 3, 3]));
        assert_eq!(flatten(&zoo::unit(3), 2).matrix.get(1, 4), &int(1));
    }
}
