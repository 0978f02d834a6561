//! Turning degenerations and partial degenerations into restrictions from a
//! Kronecker product with a unit tensor or with an aiding matrix.

mod pencil_line;

pub use pencil_line::{pencil_line_two_points, span_interpolation, PencilLine};

use crate::algebra::{int, inverse, rank_factorization, EpsPoly, ExactMatrix, Rational};
use crate::degeneration::{verify_cert, DegenCert, RestrictionCert};
use crate::error::{Error, Result};
use crate::tensor::{aid, flatten, kron, zoo, MapTriple, Tensor3};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    UnitE,
    Unit2d,
    AidedD,
    AidedE,
    Teleport,
    Span,
}

/// Nodes `α_j` and weights `μ_j = ∏_{m≠j} α_m/(α_m − α_j)`, so that
/// `q(0) = Σ μ_j q(α_j)` for every polynomial `q` of degree below the number of nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpolationPlan {
    pub method: Method,
    pub nodes: Vec<Rational>,
    pub weights: Vec<Rational>,
}

impl InterpolationPlan {
    /// Nodes `1, 2, …, count`.
    pub fn consecutive(method: Method, count: usize) -> Self {
        let nodes: Vec<Rational> = (1..=count as i64).map(int).collect();
        let weights = (0..count)
            .map(|j| {
                let mut w = int(1);
                for (m, am) in nodes.iter().enumerate() {
                    if m != j {
                        w *= am / (am - &nodes[j]);
                    }
                }
                w
            })
            .collect();
        Self { method, nodes, weights }
    }
}

/// `Σ_l mats[l] ⊗ e_l^*`: a `v × (u·p)` matrix whose column `(j−1)p + l` is
/// column `j` of `mats[l]`.
pub(crate) fn interleave(mats: &[ExactMatrix<Rational>]) -> ExactMatrix<Rational> {
    let p = mats.len();
    let (v, u) = mats[0].shape();
    ExactMatrix::from_fn(v, u * p, |r, c| mats[c % p].get(r, c / p).clone())
}

fn checked(cert: &DegenCert) -> Result<(u32, u32)> {
    verify_cert(cert).map(|r| (r.d, r.e)).map_err(|f| Error::Verification(f.to_string()))
}

fn power(x: &Rational, k: u32) -> Rational {
    (0..k).fold(int(1), |acc, _| acc * x)
}

fn lagrange_maps(maps: &[ExactMatrix<EpsPoly>; 3], plan: &InterpolationPlan, d: u32, weighted: usize) -> [ExactMatrix<Rational>; 3] {
    std::array::from_fn(|slot| {
        let mats: Vec<_> = plan
            .nodes
            .iter()
            .zip(&plan.weights)
            .map(|(a, mu)| {
                let m = maps[slot].eval(a);
                if slot == weighted { m.scale(&(mu / power(a, d))) } else { m }
            })
            .collect();
        interleave(&mats)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitVariant {
    /// `T ⊠ ⟨e+1⟩ ≥ S`.
    E,
    /// `T ⊠ ⟨2d+1⟩ ≥ S`.
    TwoD,
}

/// Restriction from `T ⊠ ⟨n⟩` by evaluating all three maps at `n` nodes.
///
/// For the `2d` variant the maps are first truncated to degree `d`, which keeps
/// the coefficient of `ε^d` and bounds the error degree by `2d`.
pub fn unit_interpolation(cert: &DegenCert, variant: UnitVariant) -> Result<RestrictionCert> {
    let (d, e) = checked(cert)?;
    let (maps, count, method) = match variant {
        UnitVariant::E => (cert.maps.clone(), e as usize + 1, Method::UnitE),
        UnitVariant::TwoD => (cert.maps.truncate(d), 2 * d as usize + 1, Method::Unit2d),
    };
    let plan = InterpolationPlan::consecutive(method, count);
    let [m1, m2, m3] = lagrange_maps(&maps.maps.maps, &plan, d, 0);
    RestrictionCert::new(kron(&cert.source, &zoo::unit(count)), cert.target.clone(), MapTriple::new(m1, m2, m3))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AidedVariant {
    /// `T^{■d+1} ≥ S` from the coefficients of `A₂` and `A₃` up to degree `d`.
    D,
    /// `T^{■e+1} ≥ S` by Lagrange interpolation on the two moving legs.
    E,
}

/// Restriction from `T^{■p}` for a partial degeneration (first map constant).
pub fn aided_interpolation(cert: &DegenCert, variant: AidedVariant) -> Result<RestrictionCert> {
    if cert.maps.constant_slot != Some(1) {
        return Err(Error::Precondition("not a partial degeneration: the first map is not declared constant".into()));
    }
    let (d, e) = checked(cert)?;
    let [a1, a2, a3] = &cert.maps.maps.maps;
    let a1 = a1.coeff(0);
    let (p, m2, m3) = match variant {
        AidedVariant::D => {
            let two: Vec<_> = (0..=d).map(|i| a2.coeff(i)).collect();
            let three: Vec<_> = (0..=d).map(|i| a3.coeff(d - i)).collect();
            (d as usize + 1, interleave(&two), interleave(&three))
        }
        AidedVariant::E => {
            let plan = InterpolationPlan::consecutive(Method::AidedE, e as usize + 1);
            let [_, m2, m3] = lagrange_maps(&cert.maps.maps.maps, &plan, d, 1);
            (plan.nodes.len(), m2, m3)
        }
    };
    RestrictionCert::new(aid(&cert.source, p)?, cert.target.clone(), MapTriple::new(a1, m2, m3))
}

/// Re-embeds a restriction from `T^{■p}` as one from `T^{■p'}`, `p' ≥ p`, by
/// ignoring the extra aiding coordinates.
pub fn pad_aiding(cert: &RestrictionCert, t: &Tensor3, p: usize, p_new: usize) -> Result<RestrictionCert> {
    if p_new < p || cert.source != aid(t, p)? {
        return Err(Error::Precondition(format!("source is not T^■{p} or {p_new} < {p}")));
    }
    let [m1, m2, m3] = &cert.maps.maps;
    let pad = |m: &ExactMatrix<Rational>| {
        ExactMatrix::from_fn(m.rows(), m.cols() / p * p_new, |r, c| {
            if c % p_new < p { m.get(r, c / p_new * p + c % p_new).clone() } else { int(0) }
        })
    };
    RestrictionCert::new(aid(t, p_new)?, cert.target.clone(), MapTriple::new(m1.clone(), pad(m2), pad(m3)))
}

/// Restriction `T^{■u₃v₃} ≥ S` through the bipartite flattenings
/// `U₁ ⊗ (U₂⊗U₃)` and `V₁ ⊗ (V₂⊗V₃)`, or `None` when the first has smaller
/// matrix rank (then `T` does not even degenerate to `S`).
pub fn teleport_restriction(t: &Tensor3, s: &Tensor3) -> Result<Option<RestrictionCert>> {
    let [u1, u2, u3] = t.dims();
    let [v1, v2, v3] = s.dims();
    let tt = flatten(t, 1).matrix;
    let st = flatten(s, 1).matrix;
    let (pt, qt) = rank_factorization(&tt);
    let (ps, qs) = rank_factorization(&st);
    let (r, rs) = (pt.cols(), ps.cols());
    if rs > r {
        return Ok(None);
    }
    let (x, y) = if rs == 0 {
        (ExactMatrix::zeros(v1, u1), ExactMatrix::zeros(u2 * u3, v2 * v3))
    } else {
        let pt_t = pt.transpose();
        let left = inverse(&pt_t.matmul(&pt)?).expect("full column rank").matmul(&pt_t)?;
        let qt_t = qt.transpose();
        let right = qt_t.matmul(&inverse(&qt.matmul(&qt_t)?).expect("full row rank"))?;
        let e = ExactMatrix::from_fn(rs, r, |a, b| int((a == b) as i64));
        (ps.matmul(&e)?.matmul(&left)?, right.matmul(&e.transpose())?.matmul(&qs)?)
    };
    let p = u3 * v3;
    let m2 = ExactMatrix::from_fn(v2, u2 * p, |jp, col| {
        let (j, l) = (col / p, col % p);
        let (a, c) = (l / v3, l % v3);
        y.get(j * u3 + a, jp * v3 + c).clone()
    });
    let m3 = ExactMatrix::from_fn(v3, u3 * p, |kp, col| {
        let (k, l) = (col / p, col % p);
        int((l / v3 == k && l % v3 == kp) as i64)
    });
    RestrictionCert::new(aid(t, p)?, s.clone(), MapTriple::new(x, m2, m3)).map(Some)
}
