use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// Exact rational scalar. Always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Commutative ring operations shared by every matrix/tensor entry type.
///
/// Implemented for [`Rational`], [`EpsPoly`](super::EpsPoly) and
/// [`MultiPoly`](super::MultiPoly).
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(r: Rational) -> Self;

    fn add_assign(&mut self, other: &Self) {
        *self = Ring::add(self, other);
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
}

/// Canonical text form: `"n"` for integers, `"n/d"` otherwise (lowest terms, `d > 1`).
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the canonical text form. Anything [`format_rational`] would not
/// produce (`"2/4"`, `"3/1"`, `"1/-2"`, `"+1"`, `"-0"`) is rejected.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = parse_int(num).ok_or_else(bad)?;
    let denom = match den {
        Some(d) => parse_int(d).ok_or_else(bad)?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    let value = Rational::new(numer.clone(), denom.clone());
    if value.numer() != &numer || value.denom() != &denom || format_rational(&value) != s {
        return Err(Error::Parse(format!("non-canonical rational {s:?}")));
    }
    Ok(value)
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    let v: BigInt = s.parse().ok()?;
    if s.starts_with('-') && v.is_zero() {
        return None;
    }
    Some(v)
}

/// Least common multiple of the denominators of `values` (1 for an empty slice).
pub(crate) fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}
