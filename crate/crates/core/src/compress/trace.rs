use super::check_zero_block;
use crate::algebra::{int, rank_exact, EpsPoly, ExactMatrix, Rational, Ring};
use crate::degeneration::{apply_poly_maps, verify_cert, DegenCert, PolyMapTriple};
use crate::error::{Error, Result};
use crate::tensor::{conciseness, zoo, MapTriple, Tensor3};

/// Matrices with `S_{ijk} = trace(α_i β_j γ_k)` (possibly up to higher order in ε);
/// `α_i` is `m×n`, `β_j` is `n×p`, `γ_k` is `p×m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRep {
    pub alphas: Vec<ExactMatrix<EpsPoly>>,
    pub betas: Vec<ExactMatrix<EpsPoly>>,
    pub gammas: Vec<ExactMatrix<EpsPoly>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceMode {
    /// `S_{ijk} = trace(α_i β_j γ_k)` with everything constant.
    Exact,
    /// `ε^d S_{ijk} ≡ trace(α_i β_j γ_k)` modulo `ε^{d+1}`.
    ModEps { d: u32 },
}

impl TraceRep {
    /// `(m, n, p)`, checking that all shapes agree.
    pub fn format(&self) -> Result<(usize, usize, usize)> {
        let a = self.alphas.first().ok_or_else(|| Error::Dimension("no α matrices".into()))?;
        let (m, n) = a.shape();
        let p = self.betas.first().map_or(0, |b| b.cols());
        let ok = self.alphas.iter().all(|x| x.shape() == (m, n))
            && self.betas.iter().all(|x| x.shape() == (n, p))
            && self.gammas.iter().all(|x| x.shape() == (p, m))
            && !self.betas.is_empty()
            && !self.gammas.is_empty();
        if ok {
            Ok((m, n, p))
        } else {
            Err(Error::Dimension("trace representation shapes disagree".into()))
        }
    }

    pub fn dims(&self) -> [usize; 3] {
        [self.alphas.len(), self.betas.len(), self.gammas.len()]
    }

    pub fn alphas_constant(&self) -> bool {
        self.alphas.iter().all(ExactMatrix::is_constant)
    }
}

fn trace3(a: &ExactMatrix<EpsPoly>, b: &ExactMatrix<EpsPoly>, c: &ExactMatrix<EpsPoly>) -> EpsPoly {
    let abc = a.matmul(b).and_then(|x| x.matmul(c)).expect("shapes checked");
    let mut t = EpsPoly::zero();
    for i in 0..abc.rows() {
        t.add_assign(abc.get(i, i));
    }
    t
}

pub fn verify_trace_rep(s: &Tensor3, rep: &TraceRep, mode: TraceMode) -> Result<bool> {
    rep.format()?;
    if rep.dims() != s.dims() {
        return Err(Error::Dimension(format!("representation of {:?} against tensor {:?}", rep.dims(), s.dims())));
    }
    let [v1, v2, v3] = s.dims();
    for i in 1..=v1 {
        for j in 1..=v2 {
            for k in 1..=v3 {
                let t = trace3(&rep.alphas[i - 1], &rep.betas[j - 1], &rep.gammas[k - 1]);
                let want = s.get(i, j, k);
                let ok = match mode {
                    TraceMode::Exact => t.is_constant() && &t.coeff(0) == want,
                    TraceMode::ModEps { d } => (0..d).all(|l| Ring::is_zero(&t.coeff(l))) && &t.coeff(d) == want,
                };
                if !ok {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The representation of `⟨m,n,p⟩` by matrix units: `α` runs over `E_{ij}`,
/// `β` over `E_{jk}`, `γ` over `E_{ki}`, in the index order of [`zoo::mamu`].
pub fn canonical_trace_rep(m: usize, n: usize, p: usize) -> TraceRep {
    let unit = |rows: usize, cols: usize, idx: usize| {
        ExactMatrix::from_fn(rows, cols, |r, c| EpsPoly::constant(int((r * cols + c == idx) as i64)))
    };
    TraceRep {
        alphas: (0..m * n).map(|x| unit(m, n, x)).collect(),
        betas: (0..n * p).map(|x| unit(n, p, x)).collect(),
        gammas: (0..p * m).map(|x| unit(p, m, x)).collect(),
    }
}

/// Degeneration certificate from `⟨m,n,p⟩` whose maps have rows `vec(α_a)`,
/// `vec(β_b)` and `vec(γ_c)`. The first map is declared constant when every
/// `α` is; the claimed error degree is the one the maps actually produce.
pub fn trace_rep_to_cert(s: &Tensor3, rep: &TraceRep, d: u32) -> Result<DegenCert> {
    let (m, n, p) = rep.format()?;
    let rows = |mats: &[ExactMatrix<EpsPoly>], width: usize| {
        ExactMatrix::from_fn(mats.len(), width, |r, c| mats[r].entries()[c].clone())
    };
    let maps = MapTriple::new(rows(&rep.alphas, m * n), rows(&rep.betas, n * p), rows(&rep.gammas, p * m));
    let slot = rep.alphas_constant().then_some(1);
    let maps = PolyMapTriple::new(maps, slot);
    let source = zoo::mamu(m, n, p)?;
    let top = apply_poly_maps(&maps, &source)?.degree().unwrap_or(d);
    Ok(DegenCert { source, target: s.clone(), maps, claimed_d: d, claimed_e: top.saturating_sub(d) })
}

/// Matrices for a `3×4×4` tensor with `S_{ijk} = 0` whenever `j, k ≥ 2`.
///
/// The off-diagonal entries of `β₁` carry a factor `ε`; without it the
/// products `α₁β₁γ_k` pick up spurious order-`ε` terms for `k ≥ 2`.
pub fn prop333_trace_rep(s: &Tensor3) -> Result<TraceRep> {
    if s.dims() != [3, 4, 4] {
        return Err(Error::Dimension(format!("expected a 3×4×4 tensor, got {:?}", s.dims())));
    }
    let x = |i, j, k| s.get(i, j, k).clone();
    let c = |v: i64| EpsPoly::constant(int(v));
    let e = |v: Rational| EpsPoly::monomial(1, v);
    let z = EpsPoly::zero;
    let m2 = |a: EpsPoly, b: EpsPoly, cc: EpsPoly, d: EpsPoly| ExactMatrix::from_rows(vec![vec![a, b], vec![cc, d]]);
    let alphas = vec![m2(c(1), z(), z(), c(-1)), m2(z(), z(), c(1), z()), m2(z(), c(1), z(), z())];
    let beta1 = m2(e(x(1, 1, 1) - int(1)).add(&c(1)), e(x(2, 1, 1)), e(x(3, 1, 1)), c(1));
    let mut betas = vec![beta1];
    for j in [2, 3] {
        betas.push(m2(e(x(1, j, 1)), e(x(2, j, 1)), e(x(3, j, 1)), z()));
    }
    betas.push(m2(z(), e(x(2, 4, 1)), e(x(3, 4, 1)), e(-x(1, 4, 1))));
    let mut gammas = vec![m2(e(int(1)).add(&c(1)), z(), z(), c(1))];
    for k in [2, 3] {
        gammas.push(m2(e(x(1, 1, k)), e(x(2, 1, k)), e(x(3, 1, k)), z()));
    }
    gammas.push(m2(z(), e(x(2, 1, 4)), e(x(3, 1, 4)), e(-x(1, 1, 4))));
    Ok(TraceRep { alphas, betas, gammas })
}

/// Partial degeneration `⟨2,2,2⟩ ⊵ S` built from [`prop333_trace_rep`].
pub fn prop333_cert(s: &Tensor3) -> Result<DegenCert> {
    trace_rep_to_cert(s, &prop333_trace_rep(s)?, 1)
}

/// Why `⟨2,2,2⟩ ≱ S`. Not decided algorithmically: a concise tensor that is
/// `(3,3,3)`-compressible is in particular `(2,3,3)`-compressible, a property
/// that passes from a concise restriction back to its source, and `⟨2,2,2⟩` is
/// not `(2,3,3)`-compressible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Honesty {
    ProvenByCompressibility,
    NotEstablished,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prop333Report {
    pub concise: bool,
    pub zero_block: bool,
    pub trace_identity: bool,
    pub cert_ok: bool,
    pub d: Option<u32>,
    pub e: Option<u32>,
    pub is_partial: bool,
    pub alpha_rank: usize,
    pub honesty: Honesty,
}

impl Prop333Report {
    pub fn all_passed(&self) -> bool {
        self.concise
            && self.zero_block
            && self.trace_identity
            && self.cert_ok
            && self.d == Some(1)
            && self.is_partial
            && self.honesty == Honesty::ProvenByCompressibility
    }
}

/// Runs every check on a `3×4×4` tensor expected to carry the `(3,3,3)` zero block.
pub fn prop333_package(s: &Tensor3) -> Result<Prop333Report> {
    let concise = conciseness(s).0;
    let zero_block = check_zero_block(s, [3, 3, 3])?;
    let rep = prop333_trace_rep(s)?;
    let trace_identity = verify_trace_rep(s, &rep, TraceMode::ModEps { d: 1 })?;
    let cert = trace_rep_to_cert(s, &rep, 1)?;
    let report = verify_cert(&cert);
    let honesty = if concise && zero_block { Honesty::ProvenByCompressibility } else { Honesty::NotEstablished };
    Ok(Prop333Report {
        concise,
        zero_block,
        trace_identity,
        cert_ok: report.is_ok(),
        d: report.as_ref().ok().map(|r| r.d),
        e: report.as_ref().ok().map(|r| r.e),
        is_partial: report.as_ref().is_ok_and(|r| r.is_partial),
        alpha_rank: rank_exact(&cert.maps.maps.maps[0].coeff(0)),
        honesty,
    })
}
