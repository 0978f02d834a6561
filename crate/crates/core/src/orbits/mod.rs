//! Prehomogeneity, orbit dimensions through the rank of the differential of
//! the group action, and normalization of dense matrix pencils.

use crate::algebra::{int, inverse, nullspace, rank_exact, ExactMatrix, Rational};
use crate::error::{Error, Result};
use crate::tensor::{mode_product, zoo, Tensor3};

/// Factors whose general linear groups act, as a sorted set of `1..=3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec(Vec<usize>);

impl GroupSpec {
    pub fn new(factors: &[usize]) -> Result<Self> {
        let mut f = factors.to_vec();
        f.sort_unstable();
        f.dedup();
        if f.is_empty() || f.iter().any(|k| !(1..=3).contains(k)) {
            return Err(Error::InvalidParameter(format!("group factors must be a nonempty subset of 1..=3, got {factors:?}")));
        }
        Ok(Self(f))
    }

    pub fn full() -> Self {
        Self(vec![1, 2, 3])
    }

    /// `GL(U₂) × GL(U₃)`.
    pub fn last_two() -> Self {
        Self(vec![2, 3])
    }

    pub fn factors(&self) -> &[usize] {
        &self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub group: GroupSpec,
    pub dimension: usize,
    pub is_dense: bool,
}

/// Arithmetic form of `u₃ > λ(u₁)u₂` with `λ(u₁) = (u₁ + √(u₁² − 4))/2`, after
/// sorting the last two dimensions.
pub fn prehom_test(u1: usize, u2: usize, u3: usize) -> Result<bool> {
    if u1 < 2 {
        return Err(Error::InvalidParameter(format!("u₁ = {u1} < 2")));
    }
    let (a, b) = (u2.min(u3) as i128, u2.max(u3) as i128);
    let u1 = u1 as i128;
    Ok(2 * b > u1 * a && b * b - u1 * a * b + a * a > 0)
}

/// Matrix of the differential of `(g_k) ↦ (…⊗g_k⊗…)T` at the identity: one
/// column per matrix unit `E_{ab}` of each acting factor, row-major.
pub fn differential_matrix(t: &Tensor3, group: &GroupSpec) -> ExactMatrix<Rational> {
    let dims = t.dims();
    let mut columns = Vec::new();
    for &k in group.factors() {
        let u = dims[k - 1];
        for a in 0..u {
            for b in 0..u {
                let e = ExactMatrix::from_fn(u, u, |r, c| int((r == a && c == b) as i64));
                columns.push(mode_product(t, k, &e).expect("square factor map").entries().to_vec());
            }
        }
    }
    ExactMatrix::from_columns(t.len(), &columns)
}

pub fn orbit_dimension(t: &Tensor3, group: &GroupSpec) -> usize {
    rank_exact(&differential_matrix(t, group))
}

pub fn orbit_report(t: &Tensor3, group: &GroupSpec) -> OrbitReport {
    let dimension = orbit_dimension(t, group);
    OrbitReport { group: group.clone(), dimension, is_dense: dimension == t.len() }
}

/// Whether the `GL(U₂) × GL(U₃)` orbit of `T` is open.
pub fn dense_orbit_test(t: &Tensor3) -> bool {
    !t.is_empty() && orbit_dimension(t, &GroupSpec::last_two()) == t.len()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerCheck {
    pub dims: [usize; 3],
    /// `u₃² + (u₁ − 1) + p(u₂ − p)` with `p = u₁u₂ − u₃`.
    pub formula: usize,
    pub computed: usize,
    /// `u₁u₂u₃ − computed`.
    pub gap: usize,
    pub witness_dense: bool,
    pub space_prehomogeneous: bool,
}

impl StabilizerCheck {
    pub fn holds(&self) -> bool {
        self.formula == self.computed && self.gap > 0 && !self.witness_dense && self.space_prehomogeneous
    }
}

/// Compares the orbit dimension of the concise non-dense witness against the
/// closed formula from its stabilizer.
pub fn stabilizer_crosscheck(u1: usize, u2: usize, u3: usize) -> Result<StabilizerCheck> {
    if u2 > u3 || !prehom_test(u1, u2, u3)? || u3 >= u1 * u2 {
        return Err(Error::Precondition(format!("({u1}, {u2}, {u3}) is outside λ(u₁)u₂ < u₃ < u₁u₂")));
    }
    let s = zoo::prehom_witness(u1, u2, u3)?;
    let p = u1 * u2 - u3;
    let formula = u3 * u3 + (u1 - 1) + p * (u2 - p);
    let computed = orbit_dimension(&s, &GroupSpec::full());
    Ok(StabilizerCheck {
        dims: [u1, u2, u3],
        formula,
        computed,
        gap: s.len() - computed,
        witness_dense: dense_orbit_test(&s),
        space_prehomogeneous: true,
    })
}

/// Invertible `B` (`m×m`) and `C` (`(m+1)×(m+1)`) with `B·P₁·C = I₁` and
/// `B·P₂·C = I₂` for the canonical pencil `[I₁, I₂]`, or `None` when the
/// pencil is not in its orbit.
///
/// The columns `c₁, …, c_{m+1}` of `C` solve the chain `P₂c₁ = 0`,
/// `P₁c_j = P₂c_{j+1}`, `P₁c_{m+1} = 0`, whose solution space is a line exactly
/// for pencils in the dense orbit; then `B⁻¹ = P₁·[c₁ … c_m]`.
pub fn pencil_normalize(
    p1: &ExactMatrix<Rational>,
    p2: &ExactMatrix<Rational>,
) -> Option<(ExactMatrix<Rational>, ExactMatrix<Rational>)> {
    let m = p1.rows();
    let n = m + 1;
    if m == 0 || p1.shape() != (m, n) || p2.shape() != (m, n) {
        return None;
    }
    // unknowns: c_j occupies columns j·n .. (j+1)·n
    let mut system = ExactMatrix::zeros(m * (m + 2), n * n);
    let mut put = |row: usize, block: usize, p: &ExactMatrix<Rational>, sign: i64| {
        for r in 0..m {
            for c in 0..n {
                system.set(row + r, block * n + c, p.get(r, c).clone() * int(sign));
            }
        }
    };
    put(0, 0, p2, 1);
    for j in 0..m {
        put((j + 1) * m, j, p1, 1);
        put((j + 1) * m, j + 1, p2, -1);
    }
    put((m + 1) * m, m, p1, 1);
    let kernel = nullspace(&system);
    if kernel.len() != 1 {
        return None;
    }
    let v = &kernel[0];
    let c = ExactMatrix::from_fn(n, n, |r, j| v[j * n + r].clone());
    inverse(&c)?;
    let first: Vec<usize> = (0..m).collect();
    let rows: Vec<usize> = (0..n).collect();
    let b_inv = p1.matmul(&c.submatrix(&rows, &first)).ok()?;
    let b = inverse(&b_inv)?;
    let (i1, i2) = zoo::canonical_pencil_slices(m);
    let check = |p: &ExactMatrix<Rational>, i: &ExactMatrix<Rational>| b.matmul(p).and_then(|x| x.matmul(&c)).is_ok_and(|x| &x == i);
    (check(p1, &i1) && check(p2, &i2)).then_some((b, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random;

    #[test]
    fn prehomogeneity_examples() {
        for m in 1..6 {
            assert!(prehom_test(2, m, m + 1).unwrap());
            assert!(prehom_test(2, m + 2, m).unwrap());
            assert!(!prehom_test(2, m, m).unwrap());
        }
        assert!(prehom_test(3, 3, 8).unwrap());
        assert!(!prehom_test(3, 3, 7).unwrap());
        assert!(prehom_test(1, 2, 3).is_err());
    }

    #[test]
    fn canonical_pencils_are_dense() {
        for m in 2..=5 {
            assert!(dense_orbit_test(&zoo::canonical_pencil(m).unwrap()));
        }
        assert!(!dense_orbit_test(&Tensor3::zeros([2, 3, 4])));
        assert_eq!(orbit_dimension(&zoo::canonical_pencil(3).unwrap(), &GroupSpec::last_two()), 24);
    }

    #[test]
    fn compressible_orbit_has_dimension_37() {
        for seed in 0..5 {
            assert_eq!(orbit_dimension(&zoo::compressible_233(seed), &GroupSpec::full()), 37, "seed {seed}");
        }
    }

    #[test]
    fn stabilizer_formula() {
        for (dims, want) in [([3, 3, 8], 68), ([2, 2, 3], 11), ([2, 3, 4], 19)] {
            let r = stabilizer_crosscheck(dims[0], dims[1], dims[2]).unwrap();
            assert_eq!((r.formula, r.computed), (want, want));
            assert!(r.holds());
        }
        assert!(stabilizer_crosscheck(3, 3, 7).is_err());
        assert!(stabilizer_crosscheck(2, 2, 4).is_err());
    }

    #[test]
    fn normalize_translates() {
        let (i1, i2) = zoo::canonical_pencil_slices(3);
        let (b, c) = pencil_normalize(&i1, &i2).unwrap();
        assert_eq!((b, c), (ExactMatrix::identity(3), ExactMatrix::identity(4)));
        let mut rng = random::rng(7);
        for m in 1..=4 {
            let (i1, i2) = zoo::canonical_pencil_slices(m);
            let (b0, _) = random::invertible(&mut rng, m, 3);
            let (c0, _) = random::invertible(&mut rng, m + 1, 3);
            let p1 = b0.matmul(&i1).unwrap().matmul(&c0).unwrap();
            let p2 = b0.matmul(&i2).unwrap().matmul(&c0).unwrap();
            let (b, c) = pencil_normalize(&p1, &p2).unwrap();
            assert_eq!(b.matmul(&p1).unwrap().matmul(&c).unwrap(), i1);
            assert_eq!(b.matmul(&p2).unwrap().matmul(&c).unwrap(), i2);
        }
    }

    #[test]
    fn normalize_rejects() {
        let id = ExactMatrix::identity(3);
        assert!(pencil_normalize(&id, &id).is_none());
        let (s1, s2) = (zoo::s_km(2, 3).unwrap().slice(1, 1), zoo::s_km(2, 3).unwrap().slice(1, 2));
        assert!(pencil_normalize(&s1, &s2).is_none());
        let (i1, _) = zoo::canonical_pencil_slices(3);
        assert!(pencil_normalize(&i1, &ExactMatrix::zeros(3, 4)).is_none());
    }
}
