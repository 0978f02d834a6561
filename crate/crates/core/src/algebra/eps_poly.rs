use std::collections::BTreeMap;
use std::fmt;

use super::scalar::{format_rational, Rational, Ring};

/// Univariate polynomial in the degeneration parameter ε with exact rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct EpsPoly {
    coeffs: BTreeMap<u32, Rational>,
}

impl EpsPoly {
    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    /// `c · ε^degree`.
    pub fn monomial(degree: u32, c: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !Ring::is_zero(&c) {
            coeffs.insert(degree, c);
        }
        Self { coeffs }
    }

    /// ε itself.
    pub fn eps() -> Self {
        Self::monomial(1, Ring::one())
    }

    /// Builds from `(degree, coefficient)` pairs; repeated degrees are summed.
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, Rational)>) -> Self {
        let mut coeffs: BTreeMap<u32, Rational> = BTreeMap::new();
        for (d, c) in terms {
            *coeffs.entry(d).or_insert_with(Ring::zero) += c;
        }
        coeffs.retain(|_, c| !Ring::is_zero(c));
        Self { coeffs }
    }

    /// Highest degree with a nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Lowest degree with a nonzero coefficient; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    pub fn coeff(&self, degree: u32) -> Rational {
        self.coeffs.get(&degree).cloned().unwrap_or_else(Ring::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn is_constant(&self) -> bool {
        self.degree().is_none_or(|d| d == 0)
    }

    /// Drops every term of degree above `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> Self {
        Self {
            coeffs: self
                .coeffs
                .range(..=max_degree)
                .map(|(d, c)| (*d, c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        // Horner over the dense range of degrees.
        let Some(top) = self.degree() else {
            return Ring::zero();
        };
        let mut acc: Rational = Ring::zero();
        for d in (0..=top).rev() {
            acc = acc * at + self.coeff(d);
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if Ring::is_zero(c) {
            return Self::default();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(d, v)| (*d, v * c)).collect(),
        }
    }
}

impl Ring for EpsPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(Ring::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        let mut coeffs: BTreeMap<u32, Rational> = BTreeMap::new();
        for (da, a) in &self.coeffs {
            for (db, b) in &other.coeffs {
                *coeffs.entry(da + db).or_insert_with(Ring::zero) += a * b;
            }
        }
        coeffs.retain(|_, c| !Ring::is_zero(c));
        Self { coeffs }
    }
    fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, -c)).collect(),
        }
    }
    fn from_rational(r: Rational) -> Self {
        Self::constant(r)
    }
    fn add_assign(&mut self, other: &Self) {
        for (d, c) in &other.coeffs {
            let entry = self.coeffs.entry(*d).or_insert_with(Ring::zero);
            *entry += c;
            if Ring::is_zero(entry) {
                self.coeffs.remove(d);
            }
        }
    }
}

impl fmt::Display for EpsPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(d, c)| match d {
                0 => format_rational(c),
                1 => format!("{}·ε", format_rational(c)),
                _ => format!("{}·ε^{d}", format_rational(c)),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn p(terms: &[(u32, i64)]) -> EpsPoly {
        EpsPoly::from_terms(terms.iter().map(|&(d, c)| (d, int(c))))
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        let z = EpsPoly::zero();
        assert_eq!(z.degree(), None);
        assert_eq!(z.valuation(), None);
        assert_eq!(p(&[(2, 1), (2, -1)]), z);
    }

    #[test]
    fn product_and_degrees() {
        // (1 + ε)(ε − ε²) = ε − ε³
        let a = p(&[(0, 1), (1, 1)]);
        let b = p(&[(1, 1), (2, -1)]);
        let prod = a.mul(&b);
        assert_eq!(prod, p(&[(1, 1), (3, -1)]));
        assert_eq!(prod.valuation(), Some(1));
        assert_eq!(prod.degree(), Some(3));
        assert_eq!(prod.eval(&rat(1, 2)), rat(3, 8));
    }

    #[test]
    fn truncation_keeps_low_terms() {
        let a = p(&[(0, 2), (1, 3), (4, 5)]);
        assert_eq!(a.truncate(1), p(&[(0, 2), (1, 3)]));
        assert!(a.truncate(0).is_constant());
    }
}
