//! Degeneration certificates: ε-polynomial map triples, their verification
//! and the constructions built on top of them.

pub mod cert_zoo;
pub(crate) mod rectify;

pub use rectify::{factor_corank_one, rectify_full_rank_partial, CorankOneFactorization};

use std::fmt;

use crate::algebra::{rank_exact, EpsPoly};
use crate::error::{Error, Result};
use crate::tensor::{apply_restriction, MapTriple, Tensor3};

/// Three ε-polynomial maps, one of which may be declared constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMapTriple {
    pub maps: MapTriple<EpsPoly>,
    /// 1-based factor whose map is declared independent of ε.
    pub constant_slot: Option<usize>,
}

impl PolyMapTriple {
    pub fn new(maps: MapTriple<EpsPoly>, constant_slot: Option<usize>) -> Self {
        Self { maps, constant_slot }
    }

    /// The maps truncated to ε-degree at most `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> Self {
        Self { maps: MapTriple { maps: self.maps.maps.clone().map(|m| m.truncate(max_degree)) }, constant_slot: self.constant_slot }
    }
}

/// A claimed degeneration `T ⊵ S` with degrees at most `(claimed_d, claimed_e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenCert {
    pub source: Tensor3,
    pub target: Tensor3,
    pub maps: PolyMapTriple,
    pub claimed_d: u32,
    pub claimed_e: u32,
}

impl DegenCert {
    /// Post-composes with constant maps `r`, giving a certificate for `r(target)`.
    pub fn post_compose(&self, r: &MapTriple) -> Result<DegenCert> {
        let maps = r.to_eps().compose(&self.maps.maps)?;
        Ok(DegenCert {
            source: self.source.clone(),
            target: apply_restriction(r, &self.target)?,
            maps: PolyMapTriple::new(maps, self.maps.constant_slot),
            claimed_d: self.claimed_d,
            claimed_e: self.claimed_e,
        })
    }
}

/// An exact restriction `T ≥ S` by constant maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionCert {
    pub source: Tensor3,
    pub target: Tensor3,
    pub maps: MapTriple,
}

impl RestrictionCert {
    /// Checks `(A₁⊗A₂⊗A₃)source = target` before returning.
    pub fn new(source: Tensor3, target: Tensor3, maps: MapTriple) -> Result<Self> {
        let cert = Self { source, target, maps };
        if !cert.verify() {
            return Err(Error::Verification("maps do not carry the source onto the target".into()));
        }
        Ok(cert)
    }

    pub fn verify(&self) -> bool {
        apply_restriction(&self.maps, &self.source).is_ok_and(|s| s == self.target)
    }
}

/// Outcome of a successful certificate check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertReport {
    pub d: u32,
    pub e: u32,
    pub is_partial: bool,
    pub rank_a1: usize,
}

/// Why a certificate was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertFailure {
    Shape(String),
    ConstantSlot { slot: usize },
    ZeroExpansion,
    LeadingMismatch { d: u32 },
    DegreeMismatch { d: u32, e: u32, claimed_d: u32, claimed_e: u32 },
}

impl fmt::Display for CertFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertFailure::Shape(s) => write!(f, "shape mismatch: {s}"),
            CertFailure::ConstantSlot { slot } => write!(f, "map {slot} is declared constant but depends on ε"),
            CertFailure::ZeroExpansion => write!(f, "the maps send the source to zero"),
            CertFailure::LeadingMismatch { d } => write!(f, "coefficient of ε^{d} differs from the target"),
            CertFailure::DegreeMismatch { d, e, claimed_d, claimed_e } => {
                write!(f, "degree mismatch: found (d={d}, e={e}), claimed at most (d={claimed_d}, e={claimed_e})")
            }
        }
    }
}

/// `(A₁(ε)⊗A₂(ε)⊗A₃(ε)) T`, untruncated.
pub fn apply_poly_maps(maps: &PolyMapTriple, t: &Tensor3) -> Result<Tensor3<EpsPoly>> {
    apply_restriction(&maps.maps, &t.to_eps())
}

/// Approximation degree `d` and error degree `e` of an expansion against `s`.
pub fn extract_degrees(p: &Tensor3<EpsPoly>, s: &Tensor3) -> std::result::Result<(u32, u32), CertFailure> {
    if p.dims() != s.dims() {
        return Err(CertFailure::Shape(format!("expansion {:?} against target {:?}", p.dims(), s.dims())));
    }
    let (Some(d), Some(top)) = (p.valuation(), p.degree()) else {
        return Err(CertFailure::ZeroExpansion);
    };
    if &p.coeff(d) != s {
        return Err(CertFailure::LeadingMismatch { d });
    }
    Ok((d, top - d))
}

pub fn verify_cert(cert: &DegenCert) -> std::result::Result<CertReport, CertFailure> {
    let maps = &cert.maps.maps;
    if maps.source_dims() != cert.source.dims() || maps.target_dims() != cert.target.dims() {
        return Err(CertFailure::Shape(format!(
            "maps {:?}→{:?}, certificate {:?}→{:?}",
            maps.source_dims(),
            maps.target_dims(),
            cert.source.dims(),
            cert.target.dims()
        )));
    }
    if let Some(slot) = cert.maps.constant_slot {
        if !(1..=3).contains(&slot) {
            return Err(CertFailure::Shape(format!("constant slot {slot} out of range")));
        }
        if !maps.maps[slot - 1].is_constant() {
            return Err(CertFailure::ConstantSlot { slot });
        }
    }
    let p = apply_poly_maps(&cert.maps, &cert.source).map_err(|e| CertFailure::Shape(e.to_string()))?;
    let (d, e) = extract_degrees(&p, &cert.target)?;
    if d > cert.claimed_d || e > cert.claimed_e {
        return Err(CertFailure::DegreeMismatch { d, e, claimed_d: cert.claimed_d, claimed_e: cert.claimed_e });
    }
    Ok(CertReport {
        d,
        e,
        is_partial: cert.maps.constant_slot == Some(1),
        rank_a1: rank_exact(&maps.maps[0].coeff(0)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::zoo;

    #[test]
    fn identity_maps_give_constant_expansion() {
        let w = zoo::w();
        let maps = PolyMapTriple::new(MapTriple::identity([2, 2, 2]).to_eps(), Some(1));
        let p = apply_poly_maps(&maps, &w).unwrap();
        assert_eq!(p.degree(), Some(0));
        assert_eq!(extract_degrees(&p, &w), Ok((0, 0)));
    }

    #[test]
    fn zero_map_gives_zero_expansion() {
        let mut maps = MapTriple::identity([2, 2, 2]).to_eps();
        maps.maps[1] = crate::algebra::ExactMatrix::zeros(2, 2);
        let p = apply_poly_maps(&PolyMapTriple::new(maps, None), &zoo::w()).unwrap();
        assert!(p.is_zero());
        assert_eq!(extract_degrees(&p, &zoo::w()), Err(CertFailure::ZeroExpansion));
    }
}
