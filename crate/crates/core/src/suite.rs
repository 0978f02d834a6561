//! The acceptance battery: eleven criteria, each a list of exact checks.
//!
//! Criteria run on separate threads; the report lists them in order and is a
//! pure function of the seed.

use crate::aided_rank::{
    cw2_formula, cw2_upper_cert, cw_formula, cw_lower_bound, cw_upper_cert, min_rank_obstruction, rank_ledger_entry,
    rank_ledger_pencil, verify_spanning_cert, SpanningCert,
};
use crate::algebra::{generic_rank, int, rank_exact, ExactMatrix, MultiPoly, Rational, Ring};
use crate::compress::prop333_package;
use crate::degeneration::rectify::limit_slice;
use crate::degeneration::{cert_zoo, rectify_full_rank_partial, verify_cert, DegenCert};
use crate::interpolation::{aided_interpolation, teleport_restriction, unit_interpolation, AidedVariant, UnitVariant};
use crate::io::{cert_from_json, cert_to_json, tensor_from_json, tensor_to_json, Certificate};
use crate::orbits::{dense_orbit_test, orbit_dimension, stabilizer_crosscheck, GroupSpec};
use crate::random;
use crate::tensor::{aid, direct_sum, flattening_ranks, kron, zoo, Tensor3};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub label: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Criterion {
    pub id: usize,
    pub title: &'static str,
    pub checks: Vec<CheckLine>,
}

impl Criterion {
    fn new(id: usize, title: &'static str) -> Self {
        Self { id, title, checks: Vec::new() }
    }

    fn check(&mut self, label: impl Into<String>, passed: bool) {
        self.checks.push(CheckLine { label: label.into(), passed });
    }

    /// Records an error as a failed check.
    fn attempt(&mut self, label: impl Into<String>, f: impl FnOnce() -> crate::Result<bool>) {
        let label = label.into();
        match f() {
            Ok(ok) => self.check(label, ok),
            Err(e) => self.check(format!("{label}: {e}"), false),
        }
    }

    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub seed: u64,
    pub criteria: Vec<Criterion>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.criteria.iter().all(Criterion::passed)
    }
}

pub const CRITERIA: usize = 11;

fn report_of(cert: &DegenCert) -> Option<(u32, u32, bool, usize)> {
    verify_cert(cert).ok().map(|r| (r.d, r.e, r.is_partial, r.rank_a1))
}

fn w_degeneration() -> Criterion {
    let mut c = Criterion::new(1, "W degeneration and unit interpolation");
    let cert = cert_zoo::w_cert();
    c.check("w cert: d = 1, e = 2", report_of(&cert).is_some_and(|(d, e, _, _)| (d, e) == (1, 2)));
    c.attempt("⟨2⟩⊠⟨3⟩ ≥ W", || {
        let r = unit_interpolation(&cert, UnitVariant::E)?;
        Ok(r.verify() && r.source == kron(&zoo::unit(2), &zoo::unit(3)) && r.target == zoo::w())
    });
    c
}

fn strassen() -> Criterion {
    let mut c = Criterion::new(2, "Strassen partial degenerations and aided interpolation");
    for q in 3..=6 {
        c.attempt(format!("q = {q}: d = 1, partial, rank A₁ = {}", q - 1), || {
            let cert = cert_zoo::strassen_cert(q)?;
            Ok(report_of(&cert).is_some_and(|(d, _, partial, rank)| d == 1 && partial && rank == q - 1))
        });
        c.attempt(format!("q = {q}: ⟨{q}⟩^■2 ≥ Str_{q}"), || {
            let r = aided_interpolation(&cert_zoo::strassen_cert(q)?, AidedVariant::D)?;
            Ok(r.verify() && r.source == aid(&zoo::unit(q), 2)? && r.target == zoo::strassen(q)?)
        });
    }
    c
}

fn compressible_package(seed: u64) -> Criterion {
    let mut c = Criterion::new(3, "Honest partial degeneration of a 3×4×4 tensor");
    for s in seed + 1..=seed + 5 {
        c.attempt(format!("seed {s}: five checks"), || Ok(prop333_package(&zoo::prop333(s))?.all_passed()));
    }
    c
}

fn rectifier(seed: u64) -> Criterion {
    let mut c = Criterion::new(4, "Full-rank partial degenerations of unit tensors rectify");
    for n in 0..20u64 {
        let r = 2 + n as usize % 4;
        c.attempt(format!("r = {r}, seed {}", seed * 100 + n), || {
            let cert = cert_zoo::random_partial(r, seed * 100 + n)?;
            let restriction = rectify_full_rank_partial(&cert)?;
            let d = verify_cert(&cert).map_err(|f| crate::Error::Verification(f.to_string()))?.d;
            let [_, a2, a3] = &cert.maps.maps.maps;
            let slices_rank_one = (0..r).all(|i| rank_exact(&limit_slice(&a2.col(i), &a3.col(i), d)) <= 1);
            Ok(restriction.verify() && slices_rank_one)
        });
    }
    c
}

fn w_powers() -> Criterion {
    let mut c = Criterion::new(5, "Aided rank of Kronecker powers of W");
    let anti = ExactMatrix::from_ints(&[&[0, 1], &[1, 0]]);
    let corner = ExactMatrix::from_ints(&[&[1, 0], &[0, 0]]);
    let Some(base) = SpanningCert::from_matrices(&zoo::w(), 2, vec![anti, corner]) else {
        c.check("W spanning certificate", false);
        return c;
    };
    let mut cert = base.clone();
    for k in 1..=3usize {
        let n = 1 << k;
        let t = cert.target.clone();
        c.attempt(format!("k = {k}: obstruction for p < {n}"), || {
            let mut all = true;
            for p in 1..n {
                all &= min_rank_obstruction(&t, p)?;
            }
            Ok(all)
        });
        c.check(format!("k = {k}: {n} matrices of rank ≤ {n} span"), verify_spanning_cert(&cert) && cert.size() == n && cert.p == n);
        cert = cert.kron(&base);
    }
    c
}

fn coppersmith_winograd() -> Criterion {
    let mut c = Criterion::new(6, "Coppersmith-Winograd lower and upper bounds agree");
    for q in 2..=5 {
        for p in 2..=q + 2 {
            c.attempt(format!("q = {q}, p = {p}: {}", cw_formula(q, p)), || {
                let lower = cw_lower_bound(q, p)?.bound;
                let upper = cw_upper_cert(q, p)?;
                Ok(verify_spanning_cert(&upper) && lower == upper.size() && lower == cw_formula(q, p))
            });
        }
    }
    c
}

fn cw_squared() -> Criterion {
    let mut c = Criterion::new(7, "Coppersmith-Winograd squared");
    c.attempt("q = 2, p = 3: 17 matrices", || {
        let cert = cw2_upper_cert(2, 3)?;
        Ok(verify_spanning_cert(&cert) && cert.size() == 17)
    });
    c.check("q = 11, p = 6: 173 ≤ 196", cw2_formula(11, 6) == 173 && 173 <= 14 * 14);
    c
}

fn orbit_dimensions(seed: u64) -> Criterion {
    let mut c = Criterion::new(8, "Orbit dimensions");
    c.check(
        format!("compressible 3×4×4 (seed {seed}): 37"),
        orbit_dimension(&zoo::compressible_233(seed), &GroupSpec::full()) == 37,
    );
    for m in 2..=5 {
        c.attempt(format!("canonical pencil m = {m} is dense"), || Ok(dense_orbit_test(&zoo::canonical_pencil(m)?)));
    }
    for (u1, u2, u3) in [(2, 2, 3), (2, 3, 4), (3, 3, 8)] {
        c.attempt(format!("stabilizer formula at ({u1}, {u2}, {u3})"), || Ok(stabilizer_crosscheck(u1, u2, u3)?.holds()));
    }
    c
}

fn pencil_ledger() -> Criterion {
    let mut c = Criterion::new(9, "Rank of the pencils S_{k,m}");
    for (k, m) in [(2, 4), (2, 5), (3, 5)] {
        c.attempt(format!("(k, m) = ({k}, {m}): rank ≥ {}", m + 1), || {
            let (a, b) = (zoo::s_block1(k)?, zoo::s_block2(k, m)?);
            let ea = rank_ledger_entry("block 1", &a, None)?;
            let eb = rank_ledger_entry("block 2", &b, None)?;
            Ok(rank_ledger_pencil(&a, &b, &ea, &eb)?.lower.is_some_and(|(l, _)| l == m + 1))
        });
        c.attempt(format!("(k, m) = ({k}, {m}): ⟨{m}⟩ partially degenerates with d = 1"), || {
            let cert = cert_zoo::pencil_cert(k, m)?;
            Ok(cert.source == zoo::unit(m) && report_of(&cert).is_some_and(|(d, _, partial, _)| d == 1 && partial))
        });
    }
    c
}

fn interpolation_coherence(seed: u64) -> Criterion {
    let mut c = Criterion::new(10, "Interpolation of every partial certificate");
    let mut certs: Vec<(String, crate::Result<DegenCert>)> = Vec::new();
    for q in 3..=6 {
        certs.push((format!("strassen {q}"), cert_zoo::strassen_cert(q)));
    }
    for (k, m) in [(2, 4), (2, 5), (3, 5)] {
        certs.push((format!("pencil {k} {m}"), cert_zoo::pencil_cert(k, m)));
    }
    for s in seed + 1..=seed + 5 {
        certs.push((format!("3×4×4 seed {s}"), crate::compress::prop333_cert(&zoo::prop333(s))));
    }
    for (name, cert) in certs {
        c.attempt(format!("{name}: T^■(e+1) ≥ S"), || {
            let cert = cert?;
            let e = verify_cert(&cert).map_err(|f| crate::Error::Verification(f.to_string()))?.e;
            let r = aided_interpolation(&cert, AidedVariant::E)?;
            Ok(r.verify() && r.source == aid(&cert.source, e as usize + 1)?)
        });
    }
    c.attempt("⟨2⟩^■4 ≥ W", || {
        let r = teleport_restriction(&zoo::unit(2), &zoo::w())?;
        Ok(r.is_some_and(|r| r.verify() && r.source == aid(&zoo::unit(2), 4).expect("p > 0")))
    });
    c
}

fn random_tensor(rng: &mut random::SeededRng) -> Tensor3 {
    use rand::Rng;
    let dims = [rng.gen_range(1..=3), rng.gen_range(1..=3), rng.gen_range(1..=3)];
    let sparse = rng.gen_bool(0.5);
    Tensor3::from_fn(dims, |_, _, _| if sparse && rng.gen_bool(0.6) { int(0) } else { random::small_int(rng, 2) })
}

/// `A(x)·B(x)` with linear entries in `vars` variables and inner size `k`.
fn random_poly_product(rng: &mut random::SeededRng, n: usize, k: usize, vars: usize) -> ExactMatrix<MultiPoly> {
    let mut linear = |rows: usize, cols: usize| {
        ExactMatrix::from_fn(rows, cols, |_, _| {
            let mut e = MultiPoly::from_rational(random::small_int(rng, 2));
            for v in 0..vars {
                e.add_assign(&MultiPoly::var(v).scale(&random::small_int(rng, 2)));
            }
            e
        })
    };
    let a = linear(n, k);
    let b = linear(k, n);
    a.matmul(&b).expect("inner sizes agree")
}

fn property_suites(seed: u64) -> Criterion {
    let mut c = Criterion::new(11, "Property suites");
    let mut rng = random::rng(seed);
    let mut kron_ok = true;
    let mut sum_ok = true;
    for _ in 0..50 {
        let (t, s) = (random_tensor(&mut rng), random_tensor(&mut rng));
        let (rt, rs) = (flattening_ranks(&t), flattening_ranks(&s));
        kron_ok &= flattening_ranks(&kron(&t, &s)) == std::array::from_fn(|a| rt[a] * rs[a]);
        sum_ok &= flattening_ranks(&direct_sum(&t, &s).expect("any shapes")) == std::array::from_fn(|a| rt[a] + rs[a]);
    }
    c.check("flattening ranks multiply under ⊠ (50 pairs)", kron_ok);
    c.check("flattening ranks add under ⊕ (50 pairs)", sum_ok);
    let mut eval_ok = true;
    for n in 0..10 {
        let m = random_poly_product(&mut rng, 3 + n % 2, 1 + n % 3, 2);
        let g = generic_rank(&m);
        let ranks: Vec<usize> = (0..20)
            .map(|_| {
                let point: Vec<Rational> = (0..2).map(|_| random::small_int(&mut rng, 50)).collect();
                rank_exact(&m.eval(&point))
            })
            .collect();
        eval_ok &= ranks.iter().all(|&r| r <= g) && ranks.iter().max() == Some(&g);
    }
    c.check("generic rank equals the largest of 20 evaluations (10 matrices)", eval_ok);
    let mut trip_ok = true;
    for _ in 0..20 {
        let t = random_tensor(&mut rng);
        let s = tensor_to_json(&t);
        trip_ok &= tensor_from_json(&s).is_ok_and(|back| back == t && tensor_to_json(&back) == s);
    }
    for cert in [cert_zoo::w_cert(), cert_zoo::strassen_cert(4).expect("q ≥ 2")] {
        let s = cert_to_json(&Certificate::Degeneration(cert));
        trip_ok &= cert_from_json(&s).is_ok_and(|back| cert_to_json(&back) == s);
    }
    c.check("serialization round trips byte for byte", trip_ok);
    c
}

/// Runs one criterion (1-based).
pub fn run_criterion(id: usize, seed: u64) -> Option<Criterion> {
    Some(match id {
        1 => w_degeneration(),
        2 => strassen(),
        3 => compressible_package(seed),
        4 => rectifier(seed),
        5 => w_powers(),
        6 => coppersmith_winograd(),
        7 => cw_squared(),
        8 => orbit_dimensions(seed),
        9 => pencil_ledger(),
        10 => interpolation_coherence(seed),
        11 => property_suites(seed),
        _ => return None,
    })
}

pub fn run_suite(seed: u64) -> SuiteReport {
    let criteria = std::thread::scope(|scope| {
        let handles: Vec<_> =
            (1..=CRITERIA).map(|id| scope.spawn(move || run_criterion(id, seed).expect("id in range"))).collect();
        handles.into_iter().map(|h| h.join().expect("criterion thread panicked")).collect()
    });
    SuiteReport { seed, criteria }
}
