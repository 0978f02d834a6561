use num_bigint::BigInt;
use num_traits::Zero;

use super::matrix::ExactMatrix;
use super::multi_poly::MultiPoly;
use super::scalar::{denominator_lcm, Rational, Ring};

/// Integral domain in which fraction-free elimination can run.
trait BareissDomain: Clone {
    fn nonzero(&self) -> bool;
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Self;
    fn div_exact(&self, by: &Self) -> Self;
    fn negate(&self) -> Self;
    fn zero_elem() -> Self;
}

impl BareissDomain for BigInt {
    fn nonzero(&self) -> bool {
        !Zero::is_zero(self)
    }
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        a * b - c * d
    }
    fn div_exact(&self, by: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % by)));
        self / by
    }
    fn negate(&self) -> Self {
        -self
    }
    fn zero_elem() -> Self {
        Zero::zero()
    }
}

impl BareissDomain for MultiPoly {
    fn nonzero(&self) -> bool {
        !Ring::is_zero(self)
    }
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        Ring::sub(&Ring::mul(a, b), &Ring::mul(c, d))
    }
    fn div_exact(&self, by: &Self) -> Self {
        MultiPoly::div_exact(self, by).expect("Bareiss division is exact")
    }
    fn negate(&self) -> Self {
        Ring::neg(self)
    }
    fn zero_elem() -> Self {
        Ring::zero()
    }
}

/// Fraction-free elimination on a row-major grid. Returns the rank and, for square
/// input, the determinant (last pivot with the sign of the row swaps).
fn bareiss<D: BareissDomain>(mut a: Vec<Vec<D>>, cols: usize, one: D) -> (usize, Option<D>) {
    let rows = a.len();
    let mut prev = one;
    let mut rank = 0;
    let mut negated = false;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| a[r][c].nonzero()) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            negated = !negated;
        }
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = D::cross(&a[rank][c], &a[r][k], &a[r][c], &a[rank][k]);
                a[r][k] = v.div_exact(&prev);
            }
        }
        for row in a.iter_mut().skip(rank + 1) {
            row[c] = D::zero_elem();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    let det = (rows == cols).then(|| {
        if rank < rows {
            None
        } else {
            Some(if negated { prev.negate() } else { prev })
        }
    });
    (rank, det.flatten())
}

fn integer_rows(m: &ExactMatrix<Rational>) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|r| {
            let row = m.row(r);
            let l = denominator_lcm(&row);
            row.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect()
}

/// Rank over ℚ, by clearing row denominators and running integer Bareiss.
pub fn rank_exact(m: &ExactMatrix<Rational>) -> usize {
    bareiss(integer_rows(m), m.cols(), BigInt::from(1)).0
}

/// Rank over the fraction field of the polynomial ring, i.e. the rank at a
/// Zariski-generic point.
pub fn generic_rank(m: &ExactMatrix<MultiPoly>) -> usize {
    let rows = (0..m.rows()).map(|r| m.row(r)).collect();
    bareiss(rows, m.cols(), MultiPoly::one()).0
}

/// Determinant of a square polynomial matrix. Panics if not square.
pub fn det_poly(m: &ExactMatrix<MultiPoly>) -> MultiPoly {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    if m.rows() == 0 {
        return MultiPoly::one();
    }
    let rows = (0..m.rows()).map(|r| m.row(r)).collect();
    bareiss(rows, m.cols(), MultiPoly::one()).1.unwrap_or_default()
}

/// Determinant over ℚ. Panics if not square.
pub fn det_exact(m: &ExactMatrix<Rational>) -> Rational {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    if m.rows() == 0 {
        return Ring::one();
    }
    let scale: BigInt = (0..m.rows()).map(|r| denominator_lcm(&m.row(r))).product();
    let d = bareiss(integer_rows(m), m.cols(), BigInt::from(1)).1.unwrap_or_default();
    Rational::new(d, scale)
}

/// True when some `s×s` minor of `m` is a nonzero constant, which certifies
/// `rank m(λ) ≥ s` at every parameter value. Minors are visited in lex order of
/// (row subset, column subset). Sound but incomplete.
pub fn uniform_rank_at_least(m: &ExactMatrix<MultiPoly>, s: usize) -> bool {
    if s == 0 {
        return true;
    }
    if s > m.rows().min(m.cols()) {
        return false;
    }
    let row_sets = subsets(m.rows(), s);
    let col_sets = subsets(m.cols(), s);
    row_sets.iter().any(|rs| {
        col_sets.iter().any(|cs| {
            let d = det_poly(&m.submatrix(rs, cs));
            d.as_constant().is_some_and(|c| !Ring::is_zero(&c))
        })
    })
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Reduced row echelon form and the pivot columns.
pub fn rref(m: &ExactMatrix<Rational>) -> (ExactMatrix<Rational>, Vec<usize>) {
    let (rows, cols) = m.shape();
    let mut a: Vec<Vec<Rational>> = (0..rows).map(|r| m.row(r)).collect();
    let mut pivots = Vec::new();
    let mut r0 = 0;
    for c in 0..cols {
        if r0 == rows {
            break;
        }
        let Some(p) = (r0..rows).find(|&r| !Ring::is_zero(&a[r][c])) else {
            continue;
        };
        a.swap(p, r0);
        let inv = a[r0][c].recip();
        for x in a[r0].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r0].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == r0 || Ring::is_zero(&row[c]) {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
        pivots.push(c);
        r0 += 1;
    }
    (ExactMatrix::from_fn(rows, cols, |r, c| a[r][c].clone()), pivots)
}

/// Some `x` with `A x = b`, free variables set to zero; `None` if inconsistent.
pub fn solve_exact(a: &ExactMatrix<Rational>, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length");
    let aug = a.hstack(&ExactMatrix::from_columns(a.rows(), &[b.to_vec()])).ok()?;
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&a.cols()) {
        return None;
    }
    let mut x = vec![<Rational as Ring>::zero(); a.cols()];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r.get(i, a.cols()).clone();
    }
    Some(x)
}

/// Solves `A X = B` column by column.
pub fn solve_matrix(a: &ExactMatrix<Rational>, b: &ExactMatrix<Rational>) -> Option<ExactMatrix<Rational>> {
    let cols: Option<Vec<Vec<Rational>>> = (0..b.cols()).map(|c| solve_exact(a, &b.col(c))).collect();
    Some(ExactMatrix::from_columns(a.cols(), &cols?))
}

/// Basis of the right nullspace; each basis vector has a single free variable set to 1.
pub fn nullspace(m: &ExactMatrix<Rational>) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![<Rational as Ring>::zero(); m.cols()];
            v[f] = Ring::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            v
        })
        .collect()
}

pub fn inverse(m: &ExactMatrix<Rational>) -> Option<ExactMatrix<Rational>> {
    if m.rows() != m.cols() {
        return None;
    }
    let n = m.rows();
    let aug = m.hstack(&ExactMatrix::identity(n)).ok()?;
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    let rows: Vec<usize> = (0..n).collect();
    Some(r.submatrix(&rows, &cols))
}

/// `A = P Q` with `P` of full column rank and `Q` of full row rank (the pivot
/// columns of `A` and the nonzero rows of its RREF).
pub fn rank_factorization(
    m: &ExactMatrix<Rational>,
) -> (ExactMatrix<Rational>, ExactMatrix<Rational>) {
    let (r, pivots) = rref(m);
    let rows: Vec<usize> = (0..m.rows()).collect();
    let p = m.submatrix(&rows, &pivots);
    let q_rows: Vec<usize> = (0..pivots.len()).collect();
    let all_cols: Vec<usize> = (0..m.cols()).collect();
    (p, r.submatrix(&q_rows, &all_cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn mp(rows: &[&[MultiPoly]]) -> ExactMatrix<MultiPoly> {
        ExactMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect())
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank_exact(&ExactMatrix::identity(2)), 2);
        assert_eq!(rank_exact(&ExactMatrix::from_ints(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_exact(&ExactMatrix::zeros(3, 2)), 0);
        let m = ExactMatrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(3, 2), int(1)]]);
        assert_eq!(rank_exact(&m), 1);
    }

    #[test]
    fn determinants() {
        let m = ExactMatrix::from_ints(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(det_exact(&m), int(-2));
        let h = ExactMatrix::from_rows(vec![vec![rat(1, 2), int(1)], vec![int(1), rat(1, 3)]]);
        assert_eq!(det_exact(&h), rat(-5, 6));
    }

    #[test]
    fn generic_rank_examples() {
        let l = MultiPoly::var(0);
        let one = MultiPoly::one();
        assert_eq!(generic_rank(&mp(&[&[l.clone(), one.clone()], &[one.clone(), l.clone()]])), 2);
        assert_eq!(generic_rank(&mp(&[&[l.clone(), l.clone()], &[l.clone(), l.clone()]])), 1);
        let d = det_poly(&mp(&[&[l.clone(), one.clone()], &[one.clone(), l.clone()]]));
        assert_eq!(d, l.mul(&l).sub(&one));
    }

    #[test]
    fn uniform_rank_examples() {
        let l = MultiPoly::var(0);
        let z = MultiPoly::zero();
        let diag = mp(&[&[l.clone(), z.clone()], &[z.clone(), l.clone()]]);
        assert!(!uniform_rank_at_least(&diag, 2));
        assert!(uniform_rank_at_least(&diag, 0));
        let anti = ExactMatrix::from_fn(4, 4, |r, c| match r + c {
            3 => MultiPoly::one(),
            s if s < 3 => MultiPoly::var(r * 4 + c),
            _ => MultiPoly::zero(),
        });
        assert!(uniform_rank_at_least(&anti, 4));
    }

    #[test]
    fn solving() {
        let i3 = ExactMatrix::identity(3);
        assert_eq!(solve_exact(&i3, &[int(1), int(2), int(3)]), Some(vec![int(1), int(2), int(3)]));
        let a = ExactMatrix::from_ints(&[&[1, 1]]);
        assert_eq!(solve_exact(&a, &[int(5)]), Some(vec![int(5), int(0)]));
        let b = ExactMatrix::from_ints(&[&[1], &[1]]);
        assert_eq!(solve_exact(&b, &[int(1), int(2)]), None);
    }

    #[test]
    fn nullspace_and_inverse() {
        let a = ExactMatrix::from_ints(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.mul_vec(v).unwrap().iter().all(Ring::is_zero));
        }
        let m = ExactMatrix::from_ints(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(m.matmul(&inv).unwrap(), ExactMatrix::identity(2));
        assert!(inverse(&a).is_none());
    }

    #[test]
    fn rank_factorization_reassembles() {
        let a = ExactMatrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let (p, q) = rank_factorization(&a);
        assert_eq!(p.cols(), 2);
        assert_eq!(p.matmul(&q).unwrap(), a);
    }
}
