//! Truncated generalized power series in the nome `q = e^{2πiτ}`.
//!
//! A [`Series`] stores finitely many terms `c·q^e` with exact rational
//! exponents, together with the exclusive bound `order` below which every
//! coefficient is known. Operations track that bound pessimistically, so an
//! equality check never claims more than both operands actually determine.
//!
//! The coefficient ring is a type parameter:
//!
//! - [`QSeries`]: rational coefficients
//! - [`LaurentSeries`]: Laurent polynomials in `u = e^{iz}`
//! - [`Series<Quadratic<D>>`](Quadratic): coefficients in `ℚ(√D)`
//!
//! Mixing kinds is a type error; [`QSeries::to_laurent`] promotes explicitly.

mod coeff;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

pub use coeff::{int, rat, Coeff, Laurent, Quadratic, Rational};

/// Exact rational exponent of `q`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QExp(Ratio<i64>);

impl QExp {
    pub const ZERO: QExp = QExp(Ratio::new_raw(0, 1));
    pub const ONE: QExp = QExp(Ratio::new_raw(1, 1));

    pub fn new(numer: i64, denom: i64) -> Self {
        QExp(Ratio::new(numer, denom))
    }

    pub fn int(n: i64) -> Self {
        QExp(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn to_rational(&self) -> Rational {
        rat(self.numer(), self.denom())
    }

    /// Smallest integer `≥ self`.
    pub fn ceil(&self) -> i64 {
        self.0.ceil().to_integer()
    }

    /// Largest integer `≤ self`.
    pub fn floor(&self) -> i64 {
        self.0.floor().to_integer()
    }
}

impl fmt::Display for QExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for QExp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("bad rational {s:?}: {e}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let d = parse(d)?;
                if d == 0 {
                    return Err(format!("bad rational {s:?}: zero denominator"));
                }
                Ok(QExp::new(parse(n)?, d))
            }
            None => Ok(QExp::int(parse(s)?)),
        }
    }
}

impl From<i64> for QExp {
    fn from(n: i64) -> Self {
        QExp::int(n)
    }
}

impl Add for QExp {
    type Output = QExp;
    fn add(self, o: QExp) -> QExp {
        QExp(self.0 + o.0)
    }
}

impl Sub for QExp {
    type Output = QExp;
    fn sub(self, o: QExp) -> QExp {
        QExp(self.0 - o.0)
    }
}

impl Mul for QExp {
    type Output = QExp;
    fn mul(self, o: QExp) -> QExp {
        QExp(self.0 * o.0)
    }
}

impl Mul<i64> for QExp {
    type Output = QExp;
    fn mul(self, o: i64) -> QExp {
        QExp(self.0 * o)
    }
}

impl Neg for QExp {
    type Output = QExp;
    fn neg(self) -> QExp {
        QExp(-self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("coefficient of q^{exponent} lies beyond the known order {order}")]
    BeyondOrder { exponent: QExp, order: QExp },
    #[error("series vanishes to its known order")]
    Zero,
    #[error("leading coefficient {0} is not invertible")]
    NotInvertible(String),
    #[error("leading coefficient {0} has no square root in the coefficient ring")]
    NotSquare(String),
    #[error("q -> -q needs integer exponents, found q^{0}")]
    FractionalExponent(QExp),
    #[error("scale factor {0} must be positive")]
    NonPositiveScale(QExp),
    #[error("{0}")]
    Unsupported(String),
}

/// Outcome of comparing two series term by term.
#[derive(Debug, Clone, PartialEq)]
pub enum EqualityOutcome<C> {
    /// Every coefficient below `up_to` agrees.
    Equal { up_to: QExp },
    /// First exponent where the two sides differ.
    Mismatch { exponent: QExp, left: C, right: C },
}

impl<C> EqualityOutcome<C> {
    pub fn is_equal(&self) -> bool {
        matches!(self, EqualityOutcome::Equal { .. })
    }
}

/// Truncated series `Σ c_e q^e` with all coefficients below `order` known.
#[derive(Clone, PartialEq, Debug)]
pub struct Series<C> {
    terms: BTreeMap<QExp, C>,
    order: QExp,
}

pub type QSeries = Series<Rational>;
pub type LaurentSeries = Series<Laurent>;

impl<C: Coeff> Series<C> {
    /// The zero series, known below `order`.
    pub fn zero(order: QExp) -> Self {
        Series { terms: BTreeMap::new(), order }
    }

    pub fn constant(c: C, order: QExp) -> Self {
        Self::monomial(c, QExp::ZERO, order)
    }

    pub fn one(order: QExp) -> Self {
        Self::constant(C::one(), order)
    }

    /// `c·q^e`, known below `order`.
    pub fn monomial(c: C, e: QExp, order: QExp) -> Self {
        Self::from_terms([(e, c)], order)
    }

    /// Collect terms, summing repeated exponents and dropping those at or
    /// beyond `order`.
    pub fn from_terms<I: IntoIterator<Item = (QExp, C)>>(iter: I, order: QExp) -> Self {
        let mut terms: BTreeMap<QExp, C> = BTreeMap::new();
        for (e, c) in iter {
            if e >= order || c.is_zero() {
                continue;
            }
            match terms.get_mut(&e) {
                Some(slot) => slot.add_assign(&c),
                None => {
                    terms.insert(e, c);
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Series { terms, order }
    }

    pub fn order(&self) -> QExp {
        self.order
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (QExp, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Exponent of the first nonzero term.
    pub fn valuation(&self) -> Option<QExp> {
        self.terms.keys().next().copied()
    }

    pub fn leading(&self) -> Option<(QExp, &C)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    /// Valuation, or the known order for a series that vanishes identically.
    fn effective_valuation(&self) -> QExp {
        self.valuation().unwrap_or(self.order)
    }

    /// Coefficient of `q^e`; an error when `e` is not below the known order.
    pub fn coefficient(&self, e: QExp) -> Result<C, SeriesError> {
        if e >= self.order {
            return Err(SeriesError::BeyondOrder { exponent: e, order: self.order });
        }
        Ok(self.terms.get(&e).cloned().unwrap_or_else(C::zero))
    }

    /// Drop everything at or beyond `order` (never raises the known order).
    pub fn truncate(&self, order: QExp) -> Self {
        let order = order.min(self.order);
        Series { terms: self.terms.range(..order).map(|(e, c)| (*e, c.clone())).collect(), order }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        Series::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))), self.order)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map_coeffs(|c| c.scale(r))
    }

    pub fn mul_coeff(&self, k: &C) -> Self {
        self.map_coeffs(|c| c.mul(k))
    }

    /// Multiply by `q^e`.
    pub fn shift(&self, e: QExp) -> Self {
        Series { terms: self.terms.iter().map(|(x, c)| (*x + e, c.clone())).collect(), order: self.order + e }
    }

    /// `τ ↦ cτ`: every exponent (and the known order) is multiplied by `c`.
    pub fn scale_tau(&self, c: QExp) -> Result<Self, SeriesError> {
        if c <= QExp::ZERO {
            return Err(SeriesError::NonPositiveScale(c));
        }
        Ok(Series { terms: self.terms.iter().map(|(e, x)| (*e * c, x.clone())).collect(), order: self.order * c })
    }

    /// `q ↦ -q`, defined when every exponent is an integer.
    pub fn negate_q(&self) -> Result<Self, SeriesError> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if !e.is_integer() {
                return Err(SeriesError::FractionalExponent(*e));
            }
            terms.insert(*e, if e.numer() % 2 == 0 { c.clone() } else { c.neg() });
        }
        Ok(Series { terms, order: self.order })
    }

    /// Multiply by `1 + s·q^f` with `f > 0`, in place of a full product.
    pub fn mul_binomial(&self, s: &C, f: QExp) -> Self {
        debug_assert!(f > QExp::ZERO);
        let mut terms = self.terms.clone();
        for (e, c) in self.terms.range(..self.order - f) {
            let e = *e + f;
            let add = c.mul(s);
            match terms.get_mut(&e) {
                Some(slot) => slot.add_assign(&add),
                None => {
                    terms.insert(e, add);
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Series { terms, order: self.order }
    }

    /// Multiplicative inverse. The known order drops by twice the valuation.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let (v, c0) = self.leading().ok_or(SeriesError::Zero)?;
        let c0inv = c0.inverse().ok_or_else(|| SeriesError::NotInvertible(c0.to_string()))?;
        let rel_order = self.order - v;
        let support: Vec<(QExp, &C)> = self.terms().skip(1).map(|(e, c)| (e - v, c)).collect();

        let mut out: BTreeMap<QExp, C> = BTreeMap::new();
        out.insert(QExp::ZERO, c0inv.clone());
        let mut pending: BTreeSet<QExp> = support.iter().map(|(f, _)| *f).take_while(|f| *f < rel_order).collect();
        while let Some(e) = pending.pop_first() {
            let mut acc = C::zero();
            for (f, af) in &support {
                if *f > e {
                    break;
                }
                if let Some(b) = out.get(&(e - *f)) {
                    acc.add_assign(&af.mul(b));
                }
            }
            let be = acc.mul(&c0inv).neg();
            if be.is_zero() {
                continue;
            }
            out.insert(e, be);
            for (f, _) in &support {
                let next = e + *f;
                if next >= rel_order {
                    break;
                }
                pending.insert(next);
            }
        }
        Ok(Series { terms: out.into_iter().map(|(e, c)| (e - v, c)).collect(), order: rel_order - v })
    }

    /// Integer power by repeated squaring; negative powers go through [`Self::invert`].
    pub fn pow(&self, k: i64) -> Result<Self, SeriesError> {
        if k < 0 {
            return self.invert()?.pow(-k);
        }
        if k == 0 {
            let rel = self.order - self.effective_valuation();
            return Ok(Self::one(rel));
        }
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        let mut k = k as u64;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => &a * &base,
                    None => base.clone(),
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = &base * &base;
        }
        Ok(acc.expect("k > 0"))
    }

    /// Square root with positive leading coefficient. The known order drops
    /// by half the valuation.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        let (v, c0) = self.leading().ok_or(SeriesError::Zero)?;
        let b0 = c0.sqrt().ok_or_else(|| SeriesError::NotSquare(c0.to_string()))?;
        let two_b0_inv = b0.add(&b0).inverse().ok_or_else(|| SeriesError::NotInvertible(b0.to_string()))?;
        let rel_order = self.order - v;
        let a: BTreeMap<QExp, C> = self.terms().skip(1).map(|(e, c)| (e - v, c.clone())).collect();

        let mut out: BTreeMap<QExp, C> = BTreeMap::new();
        let mut pending: BTreeSet<QExp> = a.keys().copied().filter(|e| *e < rel_order).collect();
        while let Some(e) = pending.pop_first() {
            let mut acc = a.get(&e).cloned().unwrap_or_else(C::zero);
            for (g, bg) in out.range(..e) {
                if let Some(bh) = out.get(&(e - *g)) {
                    acc = acc.sub(&bg.mul(bh));
                }
            }
            let be = acc.mul(&two_b0_inv);
            if be.is_zero() {
                continue;
            }
            let mut fresh: Vec<QExp> = a.keys().map(|f| e + *f).collect();
            fresh.extend(out.keys().map(|g| e + *g));
            fresh.push(e + e);
            out.insert(e, be);
            pending.extend(fresh.into_iter().filter(|x| *x < rel_order));
        }
        out.insert(QExp::ZERO, b0);
        let half = QExp::new(v.numer(), 2 * v.denom());
        Ok(Series { terms: out.into_iter().map(|(e, c)| (e + half, c)).collect(), order: rel_order + half })
    }

    /// Formal derivative in `q`: `q^e ↦ e·q^{e-1}`.
    pub fn derivative(&self) -> Self {
        Series::from_terms(
            self.terms.iter().map(|(e, c)| (*e - QExp::ONE, c.scale(&e.to_rational()))),
            self.order - QExp::ONE,
        )
    }

    /// Formal antiderivative without constant term; fails on a `q^{-1}` term.
    pub fn integral(&self) -> Result<Self, SeriesError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let k = *e + QExp::ONE;
            if k == QExp::ZERO {
                return Err(SeriesError::Unsupported("integral of q^-1".into()));
            }
            terms.push((k, c.scale(&k.to_rational().recip())));
        }
        Ok(Series::from_terms(terms, self.order + QExp::ONE))
    }

    /// `log` of a series with constant term 1 and otherwise positive exponents.
    pub fn log(&self) -> Result<Self, SeriesError> {
        match self.leading() {
            Some((v, c)) if v == QExp::ZERO && *c == C::one() => {}
            _ => return Err(SeriesError::Unsupported("log needs constant term 1".into())),
        }
        (&self.derivative() * &self.invert()?).integral()
    }

    /// Compare coefficients below the jointly known order.
    pub fn compare(&self, other: &Self) -> EqualityOutcome<C> {
        let bound = self.order.min(other.order);
        let exps: BTreeSet<QExp> =
            self.terms.range(..bound).chain(other.terms.range(..bound)).map(|(e, _)| *e).collect();
        for e in exps {
            let l = self.terms.get(&e).cloned().unwrap_or_else(C::zero);
            let r = other.terms.get(&e).cloned().unwrap_or_else(C::zero);
            if l != r {
                return EqualityOutcome::Mismatch { exponent: e, left: l, right: r };
            }
        }
        EqualityOutcome::Equal { up_to: bound }
    }
}

impl QSeries {
    /// Promote to the Laurent kind with constant coefficients.
    pub fn to_laurent(&self) -> LaurentSeries {
        self.map_coeffs(|c| Laurent::monomial(0, c.clone()))
    }

    /// Embed into `ℚ(√D)`.
    pub fn to_quadratic<const D: i64>(&self) -> Series<Quadratic<D>> {
        self.map_coeffs(|c| Quadratic::<D>::from_rational(c.clone()))
    }

    /// `"e: c"` pairs joined by commas, as printed by the command line.
    pub fn to_listing(&self) -> String {
        self.terms.iter().map(|(e, c)| format!("{e}: {c}")).collect::<Vec<_>>().join(", ")
    }
}

impl LaurentSeries {
    /// Apply a map to every Laurent coefficient (`u ↦ -u`, `u ↦ u^m`, ...).
    pub fn map_u(&self, f: impl Fn(&Laurent) -> Laurent) -> Self {
        self.map_coeffs(f)
    }

    /// Multiply by `u^k`.
    pub fn shift_u(&self, k: i64) -> Self {
        self.mul_coeff(&Laurent::monomial(k, int(1)))
    }
}

impl<C: Coeff> fmt::Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*q^{e}")?;
        }
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order)
    }
}

impl<C: Coeff> Add for &Series<C> {
    type Output = Series<C>;
    fn add(self, o: &Series<C>) -> Series<C> {
        let order = self.order.min(o.order);
        let mut terms: BTreeMap<QExp, C> = self.terms.range(..order).map(|(e, c)| (*e, c.clone())).collect();
        for (e, c) in o.terms.range(..order) {
            match terms.get_mut(e) {
                Some(slot) => slot.add_assign(c),
                None => {
                    terms.insert(*e, c.clone());
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Series { terms, order }
    }
}

impl<C: Coeff> Neg for &Series<C> {
    type Output = Series<C>;
    fn neg(self) -> Series<C> {
        self.map_coeffs(|c| c.neg())
    }
}

impl<C: Coeff> Sub for &Series<C> {
    type Output = Series<C>;
    fn sub(self, o: &Series<C>) -> Series<C> {
        self + &(-o)
    }
}

impl<C: Coeff> Mul for &Series<C> {
    type Output = Series<C>;
    fn mul(self, o: &Series<C>) -> Series<C> {
        let va = self.effective_valuation();
        let vb = o.effective_valuation();
        let order = (self.order + vb).min(o.order + va);
        let mut acc: HashMap<QExp, C> = HashMap::new();
        for (ea, ca) in &self.terms {
            if *ea + vb >= order {
                break;
            }
            for (eb, cb) in &o.terms {
                let e = *ea + *eb;
                if e >= order {
                    break;
                }
                let p = ca.mul(cb);
                match acc.get_mut(&e) {
                    Some(slot) => slot.add_assign(&p),
                    None => {
                        acc.insert(e, p);
                    }
                }
            }
        }
        Series { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(), order }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr for Series<C> {
            type Output = Series<C>;
            fn $m(self, o: Series<C>) -> Series<C> {
                (&self).$m(&o)
            }
        }
        impl<C: Coeff> $tr<&Series<C>> for Series<C> {
            type Output = Series<C>;
            fn $m(self, o: &Series<C>) -> Series<C> {
                (&self).$m(o)
            }
        }
        impl<C: Coeff> $tr<Series<C>> for &Series<C> {
            type Output = Series<C>;
            fn $m(self, o: Series<C>) -> Series<C> {
                self.$m(&o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff> Neg for Series<C> {
    type Output = Series<C>;
    fn neg(self) -> Series<C> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64, d: i64) -> QExp {
        QExp::new(e, d)
    }

    fn poly(coeffs: &[i64], order: i64) -> QSeries {
        QSeries::from_terms(coeffs.iter().enumerate().map(|(i, c)| (QExp::int(i as i64), int(*c))), QExp::int(order))
    }

    #[test]
    fn addition() {
        assert_eq!(poly(&[1, -1], 10) + poly(&[0, 1], 10), poly(&[1], 10));
        let eta_head = QSeries::monomial(int(1), q(1, 24), QExp::int(5));
        assert_eq!(&eta_head + &eta_head, QSeries::monomial(int(2), q(1, 24), QExp::int(5)));
        let u = |k| Laurent::monomial(k, int(1));
        let a = LaurentSeries::from_terms([(QExp::ZERO, Laurent::one()), (QExp::ONE, u(1))], QExp::int(4));
        let b = LaurentSeries::from_terms([(QExp::ZERO, Laurent::one()), (QExp::ONE, u(-1))], QExp::int(4));
        let expect = LaurentSeries::from_terms(
            [(QExp::ZERO, Laurent::from_rational(int(2))), (QExp::ONE, u(1).add(&u(-1)))],
            QExp::int(4),
        );
        assert_eq!(a + b, expect);
    }

    #[test]
    fn multiplication() {
        assert_eq!(poly(&[1, -1], 10) * poly(&[1, 1], 10), poly(&[1, 0, -1], 10));
        let p = poly(&[1, -1], 10) * poly(&[1, 0, -1], 10) * poly(&[1, 0, 0, -1], 10);
        assert_eq!(p, poly(&[1, -1, -1, 0, 1, 1, -1], 10));
        let h = QSeries::monomial(int(1), q(1, 8), QExp::int(3));
        assert_eq!((&h * &h).valuation(), Some(q(1, 4)));
    }

    #[test]
    fn powers_and_inverses() {
        assert_eq!(poly(&[1, 1], 10).pow(3).unwrap(), poly(&[1, 3, 3, 1], 10));
        assert_eq!(poly(&[1, -1], 4).pow(-1).unwrap(), poly(&[1, 1, 1, 1], 4));
        assert_eq!(poly(&[1, -1], 3).invert().unwrap(), poly(&[1, 1, 1], 3));
        let m = QSeries::monomial(int(1), q(1, 24), QExp::int(2));
        assert_eq!(m.invert().unwrap().valuation(), Some(q(-1, 24)));
        // 2 q^{1/8} (1 - q), known to relative order 3
        let a = QSeries::from_terms([(q(1, 8), int(2)), (q(9, 8), int(-2))], q(25, 8));
        let inv = a.invert().unwrap();
        let expect =
            QSeries::from_terms([(q(-1, 8), rat(1, 2)), (q(7, 8), rat(1, 2)), (q(15, 8), rat(1, 2))], q(23, 8));
        assert_eq!(inv, expect);
        assert_eq!(QSeries::zero(QExp::ONE).invert(), Err(SeriesError::Zero));
        let lin =
            LaurentSeries::from_terms([(QExp::ZERO, Laurent::from_terms([(1, int(1)), (-1, int(-1))]))], QExp::ONE);
        assert!(matches!(lin.invert(), Err(SeriesError::NotInvertible(_))));
    }

    #[test]
    fn square_roots() {
        assert_eq!(poly(&[1, 2, 1], 10).sqrt().unwrap(), poly(&[1, 1], 10));
        let s = QSeries::monomial(int(4), q(1, 4), QExp::int(2)).sqrt().unwrap();
        assert_eq!(s.leading(), Some((q(1, 8), &int(2))));
        assert!(matches!(poly(&[2, 1], 5).sqrt(), Err(SeriesError::NotSquare(_))));
    }

    #[test]
    fn coefficient_access() {
        let p = poly(&[1, 2], 3);
        assert_eq!(p.coefficient(QExp::ONE), Ok(int(2)));
        assert_eq!(p.coefficient(QExp::int(2)), Ok(int(0)));
        assert!(p.coefficient(QExp::int(3)).is_err());
    }

    #[test]
    fn comparison() {
        let a = poly(&[1, -1, -1], 30);
        let b = &a + &QSeries::monomial(int(1), QExp::ONE, QExp::int(30));
        match a.compare(&b) {
            EqualityOutcome::Mismatch { exponent, .. } => assert_eq!(exponent, QExp::ONE),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(a.compare(&a.truncate(QExp::int(7))), EqualityOutcome::Equal { up_to: QExp::int(7) });
    }

    #[test]
    fn q_negation_and_log() {
        assert_eq!(poly(&[1, 1, 1], 5).negate_q().unwrap(), poly(&[1, -1, 1], 5));
        let frac = QSeries::monomial(int(1), q(1, 2), QExp::int(2));
        assert!(frac.negate_q().is_err());
        // log(1/(1-q)) = Σ q^n / n
        let l = poly(&[1, -1], 6).invert().unwrap().log().unwrap();
        let expect = QSeries::from_terms((1..6).map(|n| (QExp::int(n), rat(1, n))), QExp::int(6));
        assert_eq!(l, expect);
    }

    #[test]
    fn exponent_parsing() {
        assert_eq!("25/24".parse::<QExp>(), Ok(q(25, 24)));
        assert_eq!("-3".parse::<QExp>(), Ok(QExp::int(-3)));
        assert!("1/0".parse::<QExp>().is_err());
        assert_eq!(q(50, 48).to_string(), "25/24");
    }
}
