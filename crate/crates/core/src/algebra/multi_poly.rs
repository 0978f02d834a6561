use std::collections::BTreeMap;
use std::fmt;

use super::scalar::{format_rational, Rational, Ring};

/// Exponent vector indexed by indeterminate number, trailing zeros trimmed.
///
/// With trimming, the derived `Ord` on the vector coincides with the
/// lexicographic monomial order on the zero-padded vectors, so the last key of
/// a sorted map is the lex-leading monomial.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(index: usize) -> Self {
        let mut e = vec![0; index + 1];
        e[index] = 1;
        Self(e)
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Self(exps)
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        Self((0..n).map(|i| self.exponent(i) + other.exponent(i)).collect())
    }

    fn divides(&self, other: &Self) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, divisor: &Self) -> Self {
        debug_assert!(divisor.divides(self));
        Self::from_exponents(
            (0..self.0.len())
                .map(|i| self.exponent(i) - divisor.exponent(i))
                .collect(),
        )
    }
}

/// Multivariate polynomial over the rationals in indeterminates `x_0, x_1, …`
/// addressed by index. Zero coefficients are never stored. The names attached
/// to the indices live with whoever introduced them (see
/// [`SubstitutionState`](crate::aided_rank::SubstitutionState)).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(index: usize) -> Self {
        Self::term(Monomial::var(index), Ring::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !Ring::is_zero(&c) {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Number of indeterminate slots touched (one past the highest index used).
    pub fn arity(&self) -> usize {
        self.terms.keys().map(|m| m.0.len()).max().unwrap_or(0)
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Ring::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// `Some((var, exponent, coefficient))` when the polynomial is `c · x_var^exponent`
    /// with `exponent ≥ 1`.
    pub fn as_pure_power(&self) -> Option<(usize, u32, Rational)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        let support: Vec<usize> = (0..m.0.len()).filter(|&i| m.0[i] > 0).collect();
        match support.as_slice() {
            [v] => Some((*v, m.0[*v], c.clone())),
            _ => None,
        }
    }

    /// Evaluates at `point`; indeterminates beyond `point.len()` are taken as zero.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut total: Rational = Ring::zero();
        'terms: for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match point.get(i) {
                    Some(x) => {
                        for _ in 0..e {
                            v *= x;
                        }
                    }
                    None => continue 'terms,
                }
            }
            total += v;
        }
        total
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if Ring::is_zero(c) {
            return Self::default();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / divisor`, or `None` if `divisor` does not divide `self`
    /// (or is zero). Uses lex-leading-term reduction, which never gets stuck on an
    /// exact division.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lm, lc) = divisor.leading()?;
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let mut rem = self.clone();
        let mut quot = Self::default();
        while let Some((rm, rc)) = rem.leading() {
            if !lm.divides(rm) {
                return None;
            }
            let t = Self::term(rm.div(lm), rc / lc);
            rem = rem.sub(&t.mul(divisor));
            quot.add_assign(&t);
        }
        Some(quot)
    }

    fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc * c))
                .collect(),
        }
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(Ring::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }
    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let entry = out.terms.entry(m.clone()).or_insert_with(Ring::zero);
            *entry -= c;
            if Ring::is_zero(entry) {
                out.terms.remove(m);
            }
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut acc = Self::default();
        for (m, c) in &other.terms {
            acc.add_assign(&self.mul_term(m, c));
        }
        acc
    }
    fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
    fn from_rational(r: Rational) -> Self {
        Self::constant(r)
    }
    fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            let entry = self.terms.entry(m.clone()).or_insert_with(Ring::zero);
            *entry += c;
            if Ring::is_zero(entry) {
                self.terms.remove(m);
            }
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let mut s = format_rational(c);
                for (i, &e) in m.0.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => s.push_str(&format!("·x{i}")),
                        _ => s.push_str(&format!("·x{i}^{e}")),
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(i)
    }

    #[test]
    fn lex_order_matches_padded_comparison() {
        let a = Monomial::from_exponents(vec![0, 1]);
        let b = Monomial::from_exponents(vec![0, 0, 1]);
        let c = Monomial::from_exponents(vec![1]);
        assert!(a > b);
        assert!(c > a);
        assert!(Monomial::from_exponents(vec![1, 1]) > c);
    }

    #[test]
    fn exact_division_recovers_factor() {
        // (x0 + 2 x1)(x0 x2 − 3) / (x0 + 2 x1)
        let f = x(0).add(&x(1).scale(&int(2)));
        let g = x(0).mul(&x(2)).sub(&MultiPoly::constant(int(3)));
        let prod = f.mul(&g);
        assert_eq!(prod.div_exact(&f), Some(g.clone()));
        assert_eq!(prod.div_exact(&g), Some(f));
        assert_eq!(x(0).div_exact(&x(1)), None);
        assert_eq!(x(0).add(&MultiPoly::one()).div_exact(&x(0)), None);
    }

    #[test]
    fn pure_power_detection() {
        let p = x(3).mul(&x(3)).scale(&rat(-1, 2));
        assert_eq!(p.as_pure_power(), Some((3, 2, rat(-1, 2))));
        assert_eq!(x(0).mul(&x(1)).as_pure_power(), None);
        assert_eq!(MultiPoly::constant(int(4)).as_pure_power(), None);
    }

    #[test]
    fn evaluation_defaults_missing_to_zero() {
        let p = x(0).mul(&x(1)).add(&x(0));
        assert_eq!(p.eval(&[int(2), int(3)]), int(8));
        assert_eq!(p.eval(&[int(2)]), int(2));
    }
}
