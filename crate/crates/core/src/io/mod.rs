//! JSON files for tensors and certificates.
//!
//! Output is byte-deterministic: keys are sorted, rationals are written in
//! lowest terms with a positive denominator, tensor entries are listed in
//! index order and zero entries are omitted. Loading is strict and rejects
//! anything the writer would not produce.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::aided_rank::{check_spanning_cert, SpanningCert};
use crate::algebra::{format_rational, parse_rational, EpsPoly, ExactMatrix, Rational, Ring};
use crate::compress::{verify_compress_cert, verify_trace_rep, CompressCert, TraceMode, TraceRep};
use crate::degeneration::{verify_cert, DegenCert, PolyMapTriple, RestrictionCert};
use crate::error::{Error, Result};
use crate::tensor::{MapTriple, Tensor3};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryFile {
    pub i: [usize; 3],
    pub v: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorFile {
    pub dims: [usize; 3],
    pub entries: Vec<EntryFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

/// Entries are sparse polynomials in ε: `[[degree, "coefficient"], …]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyMatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Vec<(u32, String)>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum CertFile {
    Restriction {
        source: TensorFile,
        target: TensorFile,
        maps: [MatrixFile; 3],
    },
    Degeneration {
        source: TensorFile,
        target: TensorFile,
        maps: [PolyMatrixFile; 3],
        constant_slot: Option<usize>,
        d: u32,
        e: u32,
    },
    Spanning {
        target: TensorFile,
        p: usize,
        r: usize,
        matrices: Vec<MatrixFile>,
        coefficients: MatrixFile,
    },
    Compress {
        tensor: TensorFile,
        maps: [MatrixFile; 3],
        ranks: [usize; 3],
    },
    Trace {
        target: TensorFile,
        alphas: Vec<PolyMatrixFile>,
        betas: Vec<PolyMatrixFile>,
        gammas: Vec<PolyMatrixFile>,
        d: Option<u32>,
    },
}

/// Every certificate kind the files can hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Restriction(RestrictionCert),
    Degeneration(DegenCert),
    Spanning(SpanningCert),
    Compress { tensor: Tensor3, cert: CompressCert },
    /// `d = None` asks for an exact identity, `Some(d)` for one modulo `ε^{d+1}`.
    Trace { target: Tensor3, rep: TraceRep, d: Option<u32> },
}

/// Result of checking a certificate: pass/fail plus named report fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub kind: &'static str,
    pub ok: bool,
    pub fields: Vec<(String, String)>,
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Restriction(_) => "restriction",
            Certificate::Degeneration(_) => "degeneration",
            Certificate::Spanning(_) => "spanning",
            Certificate::Compress { .. } => "compress",
            Certificate::Trace { .. } => "trace",
        }
    }

    pub fn verify(&self) -> Verdict {
        let kind = self.kind();
        let field = |k: &str, v: String| (k.to_string(), v);
        let (ok, fields) = match self {
            Certificate::Restriction(c) => (c.verify(), vec![]),
            Certificate::Degeneration(c) => match verify_cert(c) {
                Ok(r) => (
                    true,
                    vec![
                        field("d", r.d.to_string()),
                        field("e", r.e.to_string()),
                        field("partial", r.is_partial.to_string()),
                        field("rank_A1", r.rank_a1.to_string()),
                    ],
                ),
                Err(f) => (false, vec![field("reason", f.to_string())]),
            },
            Certificate::Spanning(c) => match check_spanning_cert(c) {
                Ok(()) => (true, vec![field("p", c.p.to_string()), field("r", c.size().to_string())]),
                Err(f) => (false, vec![field("reason", f.to_string())]),
            },
            Certificate::Compress { tensor, cert } => (
                verify_compress_cert(tensor, cert),
                vec![field("ranks", format!("{:?}", cert.ranks)), field("degenerate", cert.is_degenerate().to_string())],
            ),
            Certificate::Trace { target, rep, d } => {
                let mode = d.map_or(TraceMode::Exact, |d| TraceMode::ModEps { d });
                match verify_trace_rep(target, rep, mode) {
                    Ok(ok) => (ok, vec![]),
                    Err(e) => (false, vec![field("reason", e.to_string())]),
                }
            }
        };
        Verdict { kind, ok, fields }
    }
}

fn at(path: &str, e: Error) -> Error {
    match e {
        Error::Parse(m) => Error::Parse(format!("{path}: {m}")),
        Error::Dimension(m) => Error::Dimension(format!("{path}: {m}")),
        other => other,
    }
}

impl TensorFile {
    pub fn from_tensor(t: &Tensor3) -> Self {
        TensorFile {
            dims: t.dims(),
            entries: t.nonzeros().map(|(i, v)| EntryFile { i, v: format_rational(v) }).collect(),
        }
    }

    /// Entries must be nonzero, inside `dims` and strictly increasing in index order.
    pub fn to_tensor(&self) -> Result<Tensor3> {
        let mut t = Tensor3::zeros(self.dims);
        let mut last: Option<[usize; 3]> = None;
        for (n, e) in self.entries.iter().enumerate() {
            let path = format!("entries[{n}]");
            if e.i.iter().zip(self.dims).any(|(&x, d)| x == 0 || x > d) {
                return Err(Error::Parse(format!("{path}.i: index {:?} outside dims {:?}", e.i, self.dims)));
            }
            if last.is_some_and(|l| l >= e.i) {
                return Err(Error::Parse(format!("{path}.i: index {:?} duplicated or out of order", e.i)));
            }
            let v = parse_rational(&e.v).map_err(|x| at(&format!("{path}.v"), x))?;
            if Ring::is_zero(&v) {
                return Err(Error::Parse(format!("{path}.v: explicit zero entry")));
            }
            t.set(e.i[0], e.i[1], e.i[2], v);
            last = Some(e.i);
        }
        Ok(t)
    }
}

impl MatrixFile {
    pub fn from_matrix(m: &ExactMatrix<Rational>) -> Self {
        MatrixFile {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows()).map(|r| m.row(r).iter().map(format_rational).collect()).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<ExactMatrix<Rational>> {
        check_shape(self.rows, self.cols, &self.entries)?;
        let mut out = Vec::with_capacity(self.rows * self.cols);
        for (r, row) in self.entries.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                out.push(parse_rational(v).map_err(|e| at(&format!("entries[{r}][{c}]"), e))?);
            }
        }
        ExactMatrix::new(self.rows, self.cols, out)
    }
}

impl PolyMatrixFile {
    pub fn from_matrix(m: &ExactMatrix<EpsPoly>) -> Self {
        let poly = |p: &EpsPoly| p.terms().map(|(d, c)| (d, format_rational(c))).collect();
        PolyMatrixFile {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows()).map(|r| (0..m.cols()).map(|c| poly(m.get(r, c))).collect()).collect(),
        }
    }

    /// Terms must have strictly increasing degrees and nonzero coefficients.
    pub fn to_matrix(&self) -> Result<ExactMatrix<EpsPoly>> {
        check_shape(self.rows, self.cols, &self.entries)?;
        let mut out = Vec::with_capacity(self.rows * self.cols);
        for (r, row) in self.entries.iter().enumerate() {
            for (c, terms) in row.iter().enumerate() {
                let path = format!("entries[{r}][{c}]");
                let mut parsed = Vec::with_capacity(terms.len());
                for (n, (d, v)) in terms.iter().enumerate() {
                    let v = parse_rational(v).map_err(|e| at(&format!("{path}[{n}]"), e))?;
                    if Ring::is_zero(&v) || (n > 0 && terms[n - 1].0 >= *d) {
                        return Err(Error::Parse(format!("{path}[{n}]: zero or out-of-order term")));
                    }
                    parsed.push((*d, v));
                }
                out.push(EpsPoly::from_terms(parsed));
            }
        }
        ExactMatrix::new(self.rows, self.cols, out)
    }
}

fn check_shape<T>(rows: usize, cols: usize, entries: &[Vec<T>]) -> Result<()> {
    if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
        return Err(Error::Dimension(format!("entries do not form a {rows}×{cols} array")));
    }
    Ok(())
}

fn maps_file(m: &MapTriple) -> [MatrixFile; 3] {
    m.maps.each_ref().map(MatrixFile::from_matrix)
}

fn maps_from(files: &[MatrixFile; 3]) -> Result<MapTriple> {
    let [a, b, c] = files;
    let parse = |n: usize, f: &MatrixFile| f.to_matrix().map_err(|e| at(&format!("maps[{n}]"), e));
    Ok(MapTriple::new(parse(0, a)?, parse(1, b)?, parse(2, c)?))
}

fn poly_list(files: &[PolyMatrixFile], name: &str) -> Result<Vec<ExactMatrix<EpsPoly>>> {
    files.iter().enumerate().map(|(n, f)| f.to_matrix().map_err(|e| at(&format!("{name}[{n}]"), e))).collect()
}

fn tensor_at(f: &TensorFile, name: &str) -> Result<Tensor3> {
    f.to_tensor().map_err(|e| at(name, e))
}

impl CertFile {
    pub fn from_certificate(c: &Certificate) -> Self {
        let tf = TensorFile::from_tensor;
        let polys = |ms: &[ExactMatrix<EpsPoly>]| ms.iter().map(PolyMatrixFile::from_matrix).collect();
        match c {
            Certificate::Restriction(c) => {
                CertFile::Restriction { source: tf(&c.source), target: tf(&c.target), maps: maps_file(&c.maps) }
            }
            Certificate::Degeneration(c) => CertFile::Degeneration {
                source: tf(&c.source),
                target: tf(&c.target),
                maps: c.maps.maps.maps.each_ref().map(PolyMatrixFile::from_matrix),
                constant_slot: c.maps.constant_slot,
                d: c.claimed_d,
                e: c.claimed_e,
            },
            Certificate::Spanning(c) => CertFile::Spanning {
                target: tf(&c.target),
                p: c.p,
                r: c.size(),
                matrices: c.matrices.iter().map(MatrixFile::from_matrix).collect(),
                coefficients: MatrixFile::from_matrix(&c.coefficients),
            },
            Certificate::Compress { tensor, cert } => {
                CertFile::Compress { tensor: tf(tensor), maps: maps_file(&cert.maps), ranks: cert.ranks }
            }
            Certificate::Trace { target, rep, d } => CertFile::Trace {
                target: tf(target),
                alphas: polys(&rep.alphas),
                betas: polys(&rep.betas),
                gammas: polys(&rep.gammas),
                d: *d,
            },
        }
    }

    /// Parses the payload. Shape problems that a verifier would report are
    /// left to [`Certificate::verify`]; only malformed data is rejected here.
    pub fn to_certificate(&self) -> Result<Certificate> {
        Ok(match self {
            CertFile::Restriction { source, target, maps } => Certificate::Restriction(RestrictionCert {
                source: tensor_at(source, "source")?,
                target: tensor_at(target, "target")?,
                maps: maps_from(maps)?,
            }),
            CertFile::Degeneration { source, target, maps, constant_slot, d, e } => {
                if constant_slot.is_some_and(|s| !(1..=3).contains(&s)) {
                    return Err(Error::Parse(format!("constant_slot: {constant_slot:?} is not 1, 2 or 3")));
                }
                let [a, b, c] = maps;
                let parse = |n: usize, f: &PolyMatrixFile| f.to_matrix().map_err(|x| at(&format!("maps[{n}]"), x));
                let maps = MapTriple::new(parse(0, a)?, parse(1, b)?, parse(2, c)?);
                Certificate::Degeneration(DegenCert {
                    source: tensor_at(source, "source")?,
                    target: tensor_at(target, "target")?,
                    maps: PolyMapTriple::new(maps, *constant_slot),
                    claimed_d: *d,
                    claimed_e: *e,
                })
            }
            CertFile::Spanning { target, p, r, matrices, coefficients } => {
                if *r != matrices.len() {
                    return Err(Error::Parse(format!("r: {r} but {} matrices", matrices.len())));
                }
                let matrices = matrices
                    .iter()
                    .enumerate()
                    .map(|(n, m)| m.to_matrix().map_err(|e| at(&format!("matrices[{n}]"), e)))
                    .collect::<Result<_>>()?;
                Certificate::Spanning(SpanningCert {
                    target: tensor_at(target, "target")?,
                    p: *p,
                    matrices,
                    coefficients: coefficients.to_matrix().map_err(|e| at("coefficients", e))?,
                })
            }
            CertFile::Compress { tensor, maps, ranks } => Certificate::Compress {
                tensor: tensor_at(tensor, "tensor")?,
                cert: CompressCert { maps: maps_from(maps)?, ranks: *ranks },
            },
            CertFile::Trace { target, alphas, betas, gammas, d } => Certificate::Trace {
                target: tensor_at(target, "target")?,
                rep: TraceRep {
                    alphas: poly_list(alphas, "alphas")?,
                    betas: poly_list(betas, "betas")?,
                    gammas: poly_list(gammas, "gammas")?,
                },
                d: *d,
            },
        })
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    // serde_json::Value keeps object keys in a BTreeMap
    let v = serde_json::to_value(value)?;
    Ok(serde_json::to_string_pretty(&v)? + "\n")
}

pub fn tensor_to_json(t: &Tensor3) -> String {
    to_canonical_json(&TensorFile::from_tensor(t)).expect("tensor files always serialize")
}

pub fn tensor_from_json(s: &str) -> Result<Tensor3> {
    serde_json::from_str::<TensorFile>(s)?.to_tensor()
}

pub fn cert_to_json(c: &Certificate) -> String {
    to_canonical_json(&CertFile::from_certificate(c)).expect("certificate files always serialize")
}

pub fn cert_from_json(s: &str) -> Result<Certificate> {
    serde_json::from_str::<CertFile>(s)?.to_certificate()
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn located(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        Error::Dimension(m) => Error::Dimension(format!("{}: {m}", path.display())),
        other => other,
    }
}

pub fn load_tensor(path: impl AsRef<Path>) -> Result<Tensor3> {
    let path = path.as_ref();
    tensor_from_json(&read(path)?).map_err(|e| located(path, e))
}

pub fn save_tensor(path: impl AsRef<Path>, t: &Tensor3) -> Result<()> {
    Ok(std::fs::write(path, tensor_to_json(t))?)
}

pub fn load_cert(path: impl AsRef<Path>) -> Result<Certificate> {
    let path = path.as_ref();
    cert_from_json(&read(path)?).map_err(|e| located(path, e))
}

pub fn save_cert(path: impl AsRef<Path>, c: &Certificate) -> Result<()> {
    Ok(std::fs::write(path, cert_to_json(c))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use crate::degeneration::cert_zoo;
    use crate::tensor::zoo;

    #[test]
    fn tensor_round_trip_is_byte_identical() {
        let mut t = zoo::cw(2).unwrap();
        t.set(1, 2, 3, rat(-7, 3));
        let s = tensor_to_json(&t);
        let back = tensor_from_json(&s).unwrap();
        assert_eq!(back, t);
        assert_eq!(tensor_to_json(&back), s);
    }

    #[test]
    fn keys_are_sorted() {
        let s = tensor_to_json(&zoo::w());
        assert!(s.find("\"dims\"").unwrap() < s.find("\"entries\"").unwrap());
        assert!(s.contains("\"v\": \"1\""));
    }

    #[test]
    fn strict_entries() {
        let bad = r#"{"dims":[2,2,2],"entries":[{"i":[1,1,1],"v":"2/4"}]}"#;
        let err = tensor_from_json(bad).unwrap_err().to_string();
        assert!(err.contains("entries[0].v") && err.contains("non-canonical"), "{err}");
        let dup = r#"{"dims":[2,2,2],"entries":[{"i":[1,1,1],"v":"1"},{"i":[1,1,1],"v":"1"}]}"#;
        assert!(tensor_from_json(dup).is_err());
        let out = r#"{"dims":[2,2,2],"entries":[{"i":[3,1,1],"v":"1"}]}"#;
        assert!(tensor_from_json(out).is_err());
        let zero = r#"{"dims":[2,2,2],"entries":[{"i":[1,1,1],"v":"0"}]}"#;
        assert!(tensor_from_json(zero).is_err());
        let extra = r#"{"dims":[2,2,2],"entries":[],"x":1}"#;
        assert!(tensor_from_json(extra).is_err());
        let syntax = "{\"dims\":[2,2,2],\n\"entries\":[";
        assert!(tensor_from_json(syntax).unwrap_err().to_string().contains("line 2"));
    }

    #[test]
    fn every_kind_round_trips() {
        let w = zoo::w();
        let certs = vec![
            Certificate::Degeneration(cert_zoo::strassen_cert(4).unwrap()),
            Certificate::Restriction(
                RestrictionCert::new(w.clone(), w.clone(), MapTriple::identity(w.dims())).unwrap(),
            ),
            Certificate::Spanning(crate::aided_rank::cw_upper_cert(2, 2).unwrap()),
            Certificate::Compress {
                tensor: zoo::compressible_233(0),
                cert: crate::compress::projector_cert([3, 4, 4], [2, 3, 3]).unwrap(),
            },
            Certificate::Trace {
                target: zoo::mamu(1, 2, 1).unwrap(),
                rep: crate::compress::canonical_trace_rep(1, 2, 1),
                d: None,
            },
        ];
        for c in certs {
            assert!(c.verify().ok, "{}", c.kind());
            let s = cert_to_json(&c);
            let back = cert_from_json(&s).unwrap();
            assert_eq!(back, c);
            assert_eq!(cert_to_json(&back), s);
        }
    }

    #[test]
    fn degeneration_report_fields() {
        let v = Certificate::Degeneration(cert_zoo::strassen_cert(4).unwrap()).verify();
        let get = |k: &str| v.fields.iter().find(|(a, _)| a == k).map(|(_, b)| b.clone()).unwrap();
        assert_eq!((get("d"), get("e"), get("partial"), get("rank_A1")), ("1".into(), "1".into(), "true".into(), "3".into()));
    }

    #[test]
    fn tampered_certificate_fails() {
        let mut c = cert_zoo::w_cert();
        c.target.set(1, 1, 1, int(5));
        let s = cert_to_json(&Certificate::Degeneration(c));
        assert!(!cert_from_json(&s).unwrap().verify().ok);
        let wrong_r = s.replace("\"kind\": \"degeneration\"", "\"kind\": \"spanning\"");
        assert!(cert_from_json(&wrong_r).is_err());
    }
}
