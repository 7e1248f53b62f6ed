//! Coefficient rings for [`super::Series`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational coefficient.
pub type Rational = BigRational;

/// Build a rational from a numerator and a nonzero denominator.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Build an integral rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Coefficient ring of a series. All operations are exact.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: Rational) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    /// Multiplicative inverse, when one exists in the ring.
    fn inverse(&self) -> Option<Self>;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }

    /// Square root with a positive leading part, when one exists.
    fn sqrt(&self) -> Option<Self> {
        None
    }
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let root = |n: &BigInt| {
        let s = n.sqrt();
        (&s * &s == *n).then_some(s)
    };
    Some(Rational::new(root(r.numer())?, root(r.denom())?))
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn sqrt(&self) -> Option<Self> {
        rational_sqrt(self)
    }
}

/// Laurent polynomial in the formal variable `u = e^{iz}`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Laurent {
    terms: BTreeMap<i64, Rational>,
}

impl Laurent {
    pub fn monomial(degree: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !Zero::is_zero(&c) {
            terms.insert(degree, c);
        }
        Laurent { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(iter: I) -> Self {
        let mut out = Laurent::default();
        for (k, c) in iter {
            out.accumulate(k, &c);
        }
        out
    }

    fn accumulate(&mut self, k: i64, c: &Rational) {
        let slot = self.terms.entry(k).or_insert_with(<Rational as Zero>::zero);
        *slot += c;
        if Zero::is_zero(slot) {
            self.terms.remove(&k);
        }
    }

    pub fn coefficient(&self, degree: i64) -> Rational {
        self.terms.get(&degree).cloned().unwrap_or_else(<Rational as Zero>::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn degree_range(&self) -> Option<(i64, i64)> {
        Some((*self.terms.keys().next()?, *self.terms.keys().next_back()?))
    }

    /// `u ↦ u^m`.
    pub fn compose_power(&self, m: i64) -> Self {
        Laurent::from_terms(self.terms.iter().map(|(k, c)| (k * m, c.clone())))
    }

    /// `u ↦ -u`.
    pub fn flip_sign(&self) -> Self {
        Laurent::from_terms(self.terms.iter().map(|(k, c)| (*k, if k % 2 == 0 { c.clone() } else { -c })))
    }

    /// `u ↦ u^{-1}`.
    pub fn reflect(&self) -> Self {
        self.compose_power(-1)
    }

    /// Parity shared by every degree, if any.
    pub fn parity(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|k| k.rem_euclid(2));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (*k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "u^{k}")?,
                (_, false) => write!(f, "{mag}*u^{k}")?,
            }
        }
        Ok(())
    }
}

impl Coeff for Laurent {
    fn zero() -> Self {
        Laurent::default()
    }
    fn one() -> Self {
        Laurent::monomial(0, <Rational as One>::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_rational(r: Rational) -> Self {
        Laurent::monomial(0, r)
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }
    fn add_assign(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.accumulate(*k, c);
        }
    }
    fn neg(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Laurent::default();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.accumulate(a + b, &(ca * cb));
            }
        }
        out
    }
    fn scale(&self, r: &Rational) -> Self {
        if Zero::is_zero(r) {
            return Laurent::default();
        }
        Laurent { terms: self.terms.iter().map(|(k, c)| (*k, c * r)).collect() }
    }
    /// Only monomials are units in the Laurent ring.
    fn inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, c) = self.terms.iter().next()?;
        Some(Laurent::monomial(-k, c.recip()))
    }
}

/// Element `a + b√D` of the real quadratic field `ℚ(√D)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quadratic<const D: i64> {
    pub rational: Rational,
    pub surd: Rational,
}

impl<const D: i64> Quadratic<D> {
    pub fn new(rational: Rational, surd: Rational) -> Self {
        Quadratic { rational, surd }
    }

    /// `√D` itself.
    pub fn root() -> Self {
        Quadratic::new(<Rational as Zero>::zero(), <Rational as One>::one())
    }

    pub fn conjugate(&self) -> Self {
        Quadratic::new(self.rational.clone(), -&self.surd)
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.rational.to_f64().unwrap_or(f64::NAN) + self.surd.to_f64().unwrap_or(f64::NAN) * (D as f64).sqrt()
    }
}

impl<const D: i64> fmt::Display for Quadratic<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (Zero::is_zero(&self.rational), Zero::is_zero(&self.surd)) {
            (_, true) => write!(f, "{}", self.rational),
            (true, false) => write!(f, "{}*sqrt({D})", self.surd),
            (false, false) => write!(f, "{} + {}*sqrt({D})", self.rational, self.surd),
        }
    }
}

impl<const D: i64> Coeff for Quadratic<D> {
    fn zero() -> Self {
        Quadratic::new(<Rational as Zero>::zero(), <Rational as Zero>::zero())
    }
    fn one() -> Self {
        Quadratic::new(<Rational as One>::one(), <Rational as Zero>::zero())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.rational) && Zero::is_zero(&self.surd)
    }
    fn from_rational(r: Rational) -> Self {
        Quadratic::new(r, <Rational as Zero>::zero())
    }
    fn add(&self, other: &Self) -> Self {
        Quadratic::new(&self.rational + &other.rational, &self.surd + &other.surd)
    }
    fn add_assign(&mut self, other: &Self) {
        self.rational += &other.rational;
        self.surd += &other.surd;
    }
    fn neg(&self) -> Self {
        Quadratic::new(-&self.rational, -&self.surd)
    }
    fn mul(&self, other: &Self) -> Self {
        let d = Rational::from_integer(BigInt::from(D));
        Quadratic::new(
            &self.rational * &other.rational + &self.surd * &other.surd * d,
            &self.rational * &other.surd + &self.surd * &other.rational,
        )
    }
    fn scale(&self, r: &Rational) -> Self {
        Quadratic::new(&self.rational * r, &self.surd * r)
    }
    fn inverse(&self) -> Option<Self> {
        let d = Rational::from_integer(BigInt::from(D));
        let norm = &self.rational * &self.rational - &self.surd * &self.surd * d;
        if Zero::is_zero(&norm) {
            return None;
        }
        Some(self.conjugate().scale(&norm.recip()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_square_roots() {
        assert_eq!(rat(9, 4).sqrt(), Some(rat(3, 2)));
        assert_eq!(rat(2, 1).sqrt(), None);
        assert_eq!(rat(-4, 1).sqrt(), None);
    }

    #[test]
    fn laurent_ring() {
        let a = Laurent::from_terms([(1, int(1)), (-1, int(-1))]);
        let sq = a.mul(&a);
        assert_eq!(sq, Laurent::from_terms([(2, int(1)), (0, int(-2)), (-2, int(1))]));
        assert_eq!(a.inverse(), None);
        let m = Laurent::monomial(3, rat(2, 3));
        assert_eq!(m.mul(&m.inverse().unwrap()), Laurent::one());
        assert_eq!(a.flip_sign(), a.neg());
        assert_eq!(a.parity(), Some(1));
        assert_eq!(a.to_string(), "-u^-1 + u^1");
    }

    #[test]
    fn golden_ratio_field() {
        type Q5 = Quadratic<5>;
        let phi = Q5::new(rat(1, 2), rat(1, 2));
        // φ² = φ + 1
        assert_eq!(phi.mul(&phi), phi.add(&Q5::one()));
        assert_eq!(phi.mul(&phi.inverse().unwrap()), Q5::one());
        assert!((phi.to_f64() - 1.618_033_988_749_895).abs() < 1e-15);
    }
}
