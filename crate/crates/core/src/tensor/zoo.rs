//! Named tensors.

use super::{pencil_direct_sum, Tensor3};
use crate::algebra::{int, ExactMatrix, Rational};
use crate::error::{Error, Result};
use crate::random::{self, nonzero_int};

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.to_string()))
    }
}

/// The unit tensor `⟨r⟩ = Σ e_i⊗e_i⊗e_i`.
pub fn unit(r: usize) -> Tensor3 {
    Tensor3::from_fn([r, r, r], |i, j, k| if i == j && j == k { int(1) } else { int(0) })
}

/// `W = e₂⊗e₁⊗e₁ + e₁⊗e₂⊗e₁ + e₁⊗e₁⊗e₂`.
pub fn w() -> Tensor3 {
    Tensor3::from_int_entries([2, 2, 2], &[([2, 1, 1], 1), ([1, 2, 1], 1), ([1, 1, 2], 1)])
}

/// `Str_q = Σ_{i<q} e_i⊗e_i⊗e_q + e_i⊗e_q⊗e_i` in `ℂ^{q−1}⊗ℂ^q⊗ℂ^q`.
pub fn strassen(q: usize) -> Result<Tensor3> {
    need(q >= 2, "Strassen tensor needs q ≥ 2")?;
    let mut t = Tensor3::zeros([q - 1, q, q]);
    for i in 1..q {
        t.set(i, i, q, int(1));
        t.set(i, q, i, int(1));
    }
    Ok(t)
}

/// `Str_q` with the basis vectors `e₁` and `e_q` swapped in factors 2 and 3, so
/// that every entry with both `j ≥ 2` and `k ≥ 2` vanishes.
pub fn strassen_aligned(q: usize) -> Result<Tensor3> {
    let s = strassen(q)?;
    let swap = |x: usize| if x == 1 { q } else if x == q { 1 } else { x };
    Ok(Tensor3::from_fn(s.dims(), |i, j, k| s.get(i, swap(j), swap(k)).clone()))
}

/// Matrix multiplication tensor `⟨m,n,p⟩ = Σ e_{ij}⊗e_{jk}⊗e_{ki}` with
/// `e_{ij}` at index `(i−1)n+j`, `e_{jk}` at `(j−1)p+k` and `e_{ki}` at `(k−1)m+i`.
pub fn mamu(m: usize, n: usize, p: usize) -> Result<Tensor3> {
    need(m >= 1 && n >= 1 && p >= 1, "matrix multiplication tensor needs m, n, p ≥ 1")?;
    let mut t = Tensor3::zeros([m * n, n * p, p * m]);
    for i in 1..=m {
        for j in 1..=n {
            for k in 1..=p {
                t.set((i - 1) * n + j, (j - 1) * p + k, (k - 1) * m + i, int(1));
            }
        }
    }
    Ok(t)
}

/// Slice matrix `M(x₀,…,x_{q+1})` of the CW tensor at a basis vector `e_a`
/// (`a ∈ 0..=q+1`), in the 0-based CW basis.
fn cw_slice(q: usize, a: usize) -> ExactMatrix<Rational> {
    let n = q + 2;
    let mut m = ExactMatrix::zeros(n, n);
    if a == 0 {
        for i in 1..=q {
            m.set(i, i, int(1));
        }
        m.set(0, q + 1, int(1));
        m.set(q + 1, 0, int(1));
    } else if a == q + 1 {
        m.set(0, 0, int(1));
    } else {
        m.set(0, a, int(1));
        m.set(a, 0, int(1));
    }
    m
}

/// The `q`-th Coppersmith–Winograd tensor in `(ℂ^{q+2})^{⊗3}`. The CW basis
/// vector `e_a` (`a = 0, …, q+1`) sits at 1-based index `a+1`.
pub fn cw(q: usize) -> Result<Tensor3> {
    need(q >= 1, "CW tensor needs q ≥ 1")?;
    let slices: Vec<_> = (0..q + 2).map(|a| cw_slice(q, a)).collect();
    Tensor3::from_slices(&slices)
}

/// `H_q = Σ_{i<q} e_i⊗(e_i⊗e_i + e_q⊗e_q)`.
pub fn h(q: usize) -> Result<Tensor3> {
    need(q >= 2, "H_q needs q ≥ 2")?;
    let mut t = Tensor3::zeros([q - 1, q, q]);
    for i in 1..q {
        t.set(i, i, i, int(1));
        t.set(i, q, q, int(1));
    }
    Ok(t)
}

/// Pencil tensor `e₁⊗P₁ + e₂⊗P₂`.
pub fn pencil(p1: &ExactMatrix<Rational>, p2: &ExactMatrix<Rational>) -> Result<Tensor3> {
    Tensor3::from_slices(&[p1.clone(), p2.clone()])
}

/// The dense-orbit pencil `[I₁, I₂]` in `ℂ²⊗ℂ^m⊗ℂ^{m+1}` with `I₁ = [id | 0]`
/// and `I₂ = [0 | id]`.
pub fn canonical_pencil(m: usize) -> Result<Tensor3> {
    need(m >= 1, "canonical pencil needs m ≥ 1")?;
    let (i1, i2) = canonical_pencil_slices(m);
    pencil(&i1, &i2)
}

pub fn canonical_pencil_slices(m: usize) -> (ExactMatrix<Rational>, ExactMatrix<Rational>) {
    let i1 = ExactMatrix::from_fn(m, m + 1, |r, c| if r == c { int(1) } else { int(0) });
    let i2 = ExactMatrix::from_fn(m, m + 1, |r, c| if r + 1 == c { int(1) } else { int(0) });
    (i1, i2)
}

/// First block of `S_{k,m}`: the `(k−1)×k` pencil `[(id_{k−1}, 0), J₁]` with
/// `J₁` carrying `1, …, k−1` on the diagonal and ones above it.
pub fn s_block1(k: usize) -> Result<Tensor3> {
    need(k >= 2, "first pencil block needs k ≥ 2")?;
    let a = ExactMatrix::from_fn(k - 1, k, |r, c| if r == c { int(1) } else { int(0) });
    let j1 = ExactMatrix::from_fn(k - 1, k, |r, c| {
        if r == c {
            int(r as i64 + 1)
        } else if r + 1 == c {
            int(1)
        } else {
            int(0)
        }
    });
    pencil(&a, &j1)
}

/// Second block of `S_{k,m}`: the `(m−k+1)×(m−k)` pencil `[(0; id_{m−k}), J₂]`
/// with ones on the diagonal of `J₂` and `k+1, …, m` below it.
pub fn s_block2(k: usize, m: usize) -> Result<Tensor3> {
    need(k >= 1 && m > k, "second pencil block needs m > k")?;
    let a = ExactMatrix::from_fn(m - k + 1, m - k, |r, c| if r == c + 1 { int(1) } else { int(0) });
    let j2 = ExactMatrix::from_fn(m - k + 1, m - k, |r, c| {
        if r == c {
            int(1)
        } else if r == c + 1 {
            int((k + c + 1) as i64)
        } else {
            int(0)
        }
    });
    pencil(&a, &j2)
}

/// The pencil `S_{k,m}`, a partial degeneration of `⟨m⟩` of rank at least `m+1`.
pub fn s_km(k: usize, m: usize) -> Result<Tensor3> {
    need(1 < k && k < m, "S_{k,m} needs 1 < k < m")?;
    pencil_direct_sum(&s_block1(k)?, &s_block2(k, m)?)
}

/// Concise tensor whose orbit under all three general linear groups is not
/// dense, for `λ(u₁)u₂ < u₃ < u₁u₂`. With `p = u₁u₂ − u₃`, the first `u₁−1`
/// slices are full `u₂`-row staircases and the last has `u₂ − p` rows.
pub fn prehom_witness(u1: usize, u2: usize, u3: usize) -> Result<Tensor3> {
    need(u1 >= 2 && u2 >= 1, "witness needs u₁ ≥ 2, u₂ ≥ 1")?;
    need(u3 < u1 * u2 && u3 + u2 > u1 * u2, "witness needs (u₁−1)u₂ < u₃ < u₁u₂")?;
    let p = u1 * u2 - u3;
    let mut t = Tensor3::zeros([u1, u2, u3]);
    for i in 1..u1 {
        for j in 1..=u2 {
            t.set(i, j, (i - 1) * u2 + j, int(1));
        }
    }
    for j in 1..=u2 - p {
        t.set(u1, j, (u1 - 1) * u2 + j, int(1));
    }
    Ok(t)
}

/// Seeded `3×4×4` tensor with nonzero integer entries in `[−9, 9]` wherever
/// `j = 1` or `k = 1`, and zero whenever both `j ≥ 2` and `k ≥ 2`.
pub fn prop333(seed: u64) -> Tensor3 {
    let mut rng = random::rng(seed);
    Tensor3::from_fn([3, 4, 4], |_, j, k| if j == 1 || k == 1 { nonzero_int(&mut rng, 9) } else { int(0) })
}

/// Seeded `3×4×4` tensor that is `(2,3,3)`-compressible: slice 1 is fully
/// random, slices 2 and 3 are supported on their first row and column.
pub fn compressible_233(seed: u64) -> Tensor3 {
    let mut rng = random::rng(seed);
    Tensor3::from_fn([3, 4, 4], |i, j, k| {
        if i == 1 || j == 1 || k == 1 {
            nonzero_int(&mut rng, 9)
        } else {
            int(0)
        }
    })
}

/// `e₁∧e₂∧e₃ + e₃⊗e₃⊗e₃`.
pub fn rvb() -> Tensor3 {
    let perms = [([1, 2, 3], 1), ([2, 3, 1], 1), ([3, 1, 2], 1), ([2, 1, 3], -1), ([1, 3, 2], -1), ([3, 2, 1], -1)];
    let mut entries = perms.to_vec();
    entries.push(([3, 3, 3], 1));
    Tensor3::from_int_entries([3, 3, 3], &entries)
}

/// Looks a tensor up by name. Names and parameter lists:
/// `unit r`, `w`, `strassen q`, `strassen-aligned q`, `mamu m n p`, `cw q`,
/// `h q`, `canonical-pencil m`, `s-km k m`, `prehom-witness u1 u2 u3`,
/// `prop333` (seeded), `compressible-233` (seeded), `rvb`.
pub fn by_name(name: &str, params: &[usize], seed: u64) -> Result<Tensor3> {
    let arity = |n: usize| -> Result<()> {
        if params.len() == n {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("{name} takes {n} parameter(s), got {}", params.len())))
        }
    };
    match name {
        "unit" => arity(1).and_then(|_| need(params[0] >= 1, "unit needs r ≥ 1")).map(|_| unit(params[0])),
        "w" => arity(0).map(|_| w()),
        "strassen" => arity(1).and_then(|_| strassen(params[0])),
        "strassen-aligned" => arity(1).and_then(|_| strassen_aligned(params[0])),
        "mamu" => arity(3).and_then(|_| mamu(params[0], params[1], params[2])),
        "cw" => arity(1).and_then(|_| cw(params[0])),
        "h" => arity(1).and_then(|_| h(params[0])),
        "canonical-pencil" => arity(1).and_then(|_| canonical_pencil(params[0])),
        "s-km" => arity(2).and_then(|_| s_km(params[0], params[1])),
        "prehom-witness" => arity(3).and_then(|_| prehom_witness(params[0], params[1], params[2])),
        "prop333" => arity(0).map(|_| prop333(seed)),
        "compressible-233" => arity(0).map(|_| compressible_233(seed)),
        "rvb" => arity(0).map(|_| rvb()),
        _ => Err(Error::InvalidParameter(format!("unknown tensor {name:?}"))),
    }
}

/// Slices of the pencil `[id_m, diag(1, …, m)]` reached from `⟨m⟩`.
pub fn diag_pencil_slices(m: usize) -> (ExactMatrix<Rational>, ExactMatrix<Rational>) {
    let d: Vec<Rational> = (1..=m as i64).map(int).collect();
    (ExactMatrix::identity(m), ExactMatrix::diag(&d))
}
