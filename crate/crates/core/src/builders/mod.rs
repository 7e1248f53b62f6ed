//! Constructors for the named functions as exact truncated series.
//!
//! Every builder takes `order`, the exclusive bound on exponents it must get
//! right, and (where meaningful) a positive rational `c` standing for the
//! substitution `τ ↦ cτ`.

pub mod bivariate;

use num_bigint::BigInt;

use crate::arith::{bernoulli, kronecker};
use crate::series::{int, Coeff, QExp, QSeries, Quadratic, Rational, Series, SeriesError};

pub use bivariate::{theta_bivariate, Bivariate, Phase};

/// Nullwert selector for [`theta_null`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NullKind {
    /// `θ1'(0|τ)`, returned as `2η³`.
    Theta1Prime,
    Theta2,
    Theta3,
    Theta4,
}

/// Eisenstein series selector for [`eisenstein`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Eisenstein {
    L,
    M,
    N,
    /// `E_{2k}` through Bernoulli numbers, `1 ≤ k ≤ 15`.
    E(u32),
}

/// `Σ (exponent, coefficient)` collected into a series known below `order`.
pub fn sum_terms<I: IntoIterator<Item = (QExp, Rational)>>(iter: I, order: QExp) -> QSeries {
    QSeries::from_terms(iter, order)
}

/// `∏_{n≥0} (1 + s·q^{start + n·step})^power`, known below `order`.
pub fn qprod(order: QExp, start: QExp, step: QExp, s: i64, power: i64) -> Result<QSeries, SeriesError> {
    assert!(start > QExp::ZERO && step > QExp::ZERO, "product exponents must be positive");
    let mut acc = QSeries::one(order);
    let sign = int(s);
    let mut e = start;
    while e < order {
        acc = acc.mul_binomial(&sign, e);
        e = e + step;
    }
    acc.pow(power)
}

/// `(q^c; q^c)_∞ = ∏_{n≥1} (1 - q^{cn})`.
pub fn euler_product(order: QExp, c: QExp) -> QSeries {
    qprod(order, c, c, -1, 1).expect("positive power")
}

/// `η(cτ) = q^{c/24} ∏ (1 - q^{cn})`.
pub fn eta(order: QExp, c: QExp) -> QSeries {
    let lead = c * QExp::new(1, 24);
    euler_product(order - lead, c).shift(lead)
}

/// `η(cτ)^k` for any integer `k`, with enough working precision that the
/// result is known below `order`.
pub fn eta_pow(order: QExp, c: QExp, k: i64) -> QSeries {
    let lead = c * QExp::new(k, 24);
    let base = euler_product(order - lead, c);
    base.pow(k).expect("constant term 1 is invertible").shift(lead)
}

/// Theta nullwerte at `cτ` from their defining sums.
pub fn theta_null(kind: NullKind, order: QExp, c: QExp) -> QSeries {
    match kind {
        NullKind::Theta1Prime => eta_pow(order, c, 3).scale(&int(2)),
        NullKind::Theta2 => {
            let mut terms = Vec::new();
            let mut k: i64 = 1;
            loop {
                let e = c * QExp::new(k * k, 8);
                if e >= order {
                    break;
                }
                terms.push((e, int(2)));
                k += 2;
            }
            sum_terms(terms, order)
        }
        NullKind::Theta3 | NullKind::Theta4 => {
            let alternate = kind == NullKind::Theta4;
            let mut terms = vec![(QExp::ZERO, int(1))];
            let mut n: i64 = 1;
            loop {
                let e = c * QExp::new(n * n, 2);
                if e >= order {
                    break;
                }
                let sign = if alternate && n % 2 == 1 { -2 } else { 2 };
                terms.push((e, int(sign)));
                n += 1;
            }
            sum_terms(terms, order)
        }
    }
}

/// `θ1'(0|cτ)` from the differentiated defining sum `2Σ(-1)^n (2n+1) q^{(2n+1)²/8}`.
pub fn theta1_prime_series(order: QExp, c: QExp) -> QSeries {
    let mut terms = Vec::new();
    let mut n: i64 = 0;
    loop {
        let k = 2 * n + 1;
        let e = c * QExp::new(k * k, 8);
        if e >= order {
            break;
        }
        terms.push((e, int(if n % 2 == 0 { 2 * k } else { -2 * k })));
        n += 1;
    }
    sum_terms(terms, order)
}

/// Arithmetic function attached to a Lambert sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Character {
    Trivial,
    /// `n ↦ (a|n)`.
    Top(i64),
    /// `n ↦ (n|m)`.
    Bottom(i64),
}

impl Character {
    pub fn value(&self, n: i64) -> i64 {
        match *self {
            Character::Trivial => 1,
            Character::Top(a) => i64::from(kronecker(a, n).unwrap_or(0)),
            Character::Bottom(m) => i64::from(kronecker(n, m).unwrap_or(0)),
        }
    }
}

/// Shape of the denominator `1 ∓ (±q^d)^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Denominator {
    /// `1 - q^{dn}`
    Minus,
    /// `1 + q^{dn}`
    Plus,
    /// `1 - (-q^d)^n`
    MinusAlternating,
    /// `1 + (-q^d)^n`
    PlusAlternating,
}

/// `Σ_{n≥1} χ(n)·n^s·(-1)^{n·alt}·q^{cn} / (1 ∓ (±q^d)^n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LambertSpec {
    pub character: Character,
    pub weight: u32,
    pub numerator: QExp,
    pub step: i64,
    pub denominator: Denominator,
    pub alternating: bool,
}

impl LambertSpec {
    /// `Σ χ(n) q^n / (1 - q^n)`.
    pub fn new(character: Character) -> Self {
        LambertSpec {
            character,
            weight: 0,
            numerator: QExp::ONE,
            step: 1,
            denominator: Denominator::Minus,
            alternating: false,
        }
    }

    pub fn weight(mut self, s: u32) -> Self {
        self.weight = s;
        self
    }

    pub fn numerator(mut self, c: QExp) -> Self {
        self.numerator = c;
        self
    }

    pub fn denominator(mut self, step: i64, kind: Denominator) -> Self {
        self.step = step;
        self.denominator = kind;
        self
    }

    pub fn alternating(mut self) -> Self {
        self.alternating = true;
        self
    }

    /// Sign `σ_n` in the geometric ratio `σ_n q^{dn}` of the denominator.
    fn ratio_sign(&self, n: i64) -> i64 {
        let odd = n % 2 != 0;
        match self.denominator {
            Denominator::Minus => 1,
            Denominator::Plus => -1,
            Denominator::MinusAlternating => {
                if odd {
                    -1
                } else {
                    1
                }
            }
            Denominator::PlusAlternating => {
                if odd {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

/// Expand a Lambert sum by running over `n` and the geometric index together,
/// i.e. over divisor pairs of each exponent.
pub fn lambert(spec: &LambertSpec, order: QExp) -> QSeries {
    assert!(spec.numerator > QExp::ZERO && spec.step > 0, "Lambert sums need positive exponents");
    let mut terms = Vec::new();
    let mut n: i64 = 1;
    while spec.numerator * n < order {
        let chi = spec.character.value(n);
        if chi != 0 {
            let mut base = BigInt::from(chi) * BigInt::from(n).pow(spec.weight);
            if spec.alternating && n % 2 != 0 {
                base = -base;
            }
            let sigma = spec.ratio_sign(n);
            let mut e = spec.numerator * n;
            let mut sign: i64 = 1;
            while e < order {
                terms.push((e, Rational::from_integer(&base * sign)));
                e = e + QExp::int(spec.step * n);
                sign *= sigma;
            }
        }
        n += 1;
    }
    sum_terms(terms, order)
}

/// `L`, `M`, `N`, or `E_{2k}` at `cτ`.
pub fn eisenstein(which: Eisenstein, order: QExp, c: QExp) -> QSeries {
    let (weight, factor) = match which {
        Eisenstein::L => (1, int(-24)),
        Eisenstein::M => (3, int(240)),
        Eisenstein::N => (5, int(-504)),
        Eisenstein::E(k) => {
            assert!((1..=15).contains(&k), "E_2k is provided for 1 ≤ k ≤ 15");
            let b = bernoulli(2 * k as usize);
            (2 * k - 1, -Rational::from_integer(BigInt::from(4 * k)) / b)
        }
    };
    let unscaled = order * QExp::new(c.denom(), c.numer());
    let sum = lambert(&LambertSpec::new(Character::Trivial).weight(weight), unscaled);
    let e = &QSeries::one(unscaled) + &sum.scale(&factor);
    e.scale_tau(c).expect("positive scale")
}

/// `φ(q^c) = Σ_{n∈ℤ} q^{cn²}`.
pub fn phi(order: QExp, c: QExp) -> QSeries {
    let mut terms = vec![(QExp::ZERO, int(1))];
    let mut n: i64 = 1;
    while c * (n * n) < order {
        terms.push((c * (n * n), int(2)));
        n += 1;
    }
    sum_terms(terms, order)
}

/// `ψ(q^c) = Σ_{n≥0} q^{cn(n+1)/2}`.
pub fn psi(order: QExp, c: QExp) -> QSeries {
    let mut terms = Vec::new();
    let mut n: i64 = 0;
    while c * QExp::new(n * (n + 1), 2) < order {
        terms.push((c * QExp::new(n * (n + 1), 2), int(1)));
        n += 1;
    }
    sum_terms(terms, order)
}

/// `a(cτ) = 1 + 6Σ (n|3) q^{cn}/(1 - q^{cn})`.
pub fn glaisher_a(order: QExp, c: QExp) -> QSeries {
    let unscaled = order * QExp::new(c.denom(), c.numer());
    let sum = lambert(&LambertSpec::new(Character::Bottom(3)), unscaled);
    (&QSeries::one(unscaled) + &sum.scale(&int(6))).scale_tau(c).expect("positive scale")
}

/// Rogers–Ramanujan continued fraction from its product,
/// `q^{1/5} ∏ (1-q^{5n-1})(1-q^{5n-4}) / ((1-q^{5n-2})(1-q^{5n-3}))`.
pub fn rrcf(order: QExp) -> QSeries {
    let lead = QExp::new(1, 5);
    let work = order - lead;
    let five = QExp::int(5);
    let num = qprod(work, QExp::int(1), five, -1, 1).unwrap() * qprod(work, QExp::int(4), five, -1, 1).unwrap();
    let den = qprod(work, QExp::int(2), five, -1, 1).unwrap() * qprod(work, QExp::int(3), five, -1, 1).unwrap();
    (num * den.invert().expect("constant term 1")).shift(lead)
}

/// `∏_{n≥1} (1 - t·q^n + q^{2n})` over `ℚ(√D)`, where `t = 2cos(2x)` for the
/// point `z = x` of a product expansion of `θ1`.
pub fn cosine_product<const D: i64>(t: &Quadratic<D>, order: QExp) -> Series<Quadratic<D>> {
    let mut acc = Series::<Quadratic<D>>::one(order);
    let mut n: i64 = 1;
    while QExp::int(n) < order {
        let factor = Series::from_terms(
            [(QExp::ZERO, Quadratic::one()), (QExp::int(n), t.neg()), (QExp::int(2 * n), Quadratic::one())],
            order,
        );
        acc = &acc * &factor;
        n += 1;
    }
    acc
}

/// The golden ratio in `ℚ(√5)`.
pub fn golden() -> Quadratic<5> {
    Quadratic::new(Rational::new(1.into(), 2.into()), Rational::new(1.into(), 2.into()))
}

/// `θ1(2π/5|τ) / θ1(π/5|τ)` over `ℚ(√5)`.
///
/// From the product form the `q^{1/8}(q;q)_∞` factors cancel, leaving
/// `(sin 2π/5 / sin π/5)·P_2/P_1` with `sin 2π/5 / sin π/5` the golden ratio
/// and `P_k = ∏(1 - 2cos(2kπ/5) q^n + q^{2n})`.
pub fn theta1_fifths_ratio(order: QExp) -> Result<Series<Quadratic<5>>, SeriesError> {
    let (p1, p2) = fifth_cosine_products(order);
    Ok((&p2 * &p1.invert()?).mul_coeff(&golden()))
}

/// `(P_1, P_2)` with `2cos(2π/5) = (√5-1)/2` and `2cos(4π/5) = -(√5+1)/2`.
pub fn fifth_cosine_products(order: QExp) -> (Series<Quadratic<5>>, Series<Quadratic<5>>) {
    let half = Rational::new(1.into(), 2.into());
    let t1 = Quadratic::<5>::new(-half.clone(), half.clone());
    let t2 = Quadratic::<5>::new(-half.clone(), -half);
    (cosine_product(&t1, order), cosine_product(&t2, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn o(n: i64) -> QExp {
        QExp::int(n)
    }

    fn coeffs(s: &QSeries, upto: i64) -> Vec<Rational> {
        (0..=upto).map(|n| s.coefficient(QExp::int(n)).unwrap()).collect()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn eta_leading_terms() {
        let e = eta(o(3), QExp::ONE);
        let listing: Vec<(QExp, Rational)> = e.terms().take(3).map(|(x, c)| (x, c.clone())).collect();
        assert_eq!(
            listing,
            vec![(QExp::new(1, 24), int(1)), (QExp::new(25, 24), int(-1)), (QExp::new(49, 24), int(-1))]
        );
        assert_eq!(eta(o(3), o(25)).valuation(), Some(QExp::new(25, 24)));
        assert_eq!(eta(o(3), QExp::new(1, 5)).valuation(), Some(QExp::new(1, 120)));
        // η^24 = q - 24q^2 + 252q^3 - ...
        let delta = eta_pow(o(4), QExp::ONE, 24);
        assert_eq!(coeffs(&delta, 3), ints(&[0, 1, -24, 252]));
    }

    #[test]
    fn theta_nullwerte() {
        let t2 = theta_null(NullKind::Theta2, o(4), QExp::ONE);
        let expect =
            sum_terms([(QExp::new(1, 8), int(2)), (QExp::new(9, 8), int(2)), (QExp::new(25, 8), int(2))], o(4));
        assert_eq!(t2, expect);
        let t3 = theta_null(NullKind::Theta3, o(5), QExp::ONE);
        let expect = sum_terms(
            [(QExp::ZERO, int(1)), (QExp::new(1, 2), int(2)), (o(2), int(2)), (QExp::new(9, 2), int(2))],
            o(5),
        );
        assert_eq!(t3, expect);
        let tp = theta_null(NullKind::Theta1Prime, o(2), QExp::ONE);
        assert_eq!(tp.leading(), Some((QExp::new(1, 8), &int(2))));
    }

    #[test]
    fn eisenstein_heads() {
        let l = eisenstein(Eisenstein::L, o(4), QExp::ONE);
        assert_eq!(coeffs(&l, 3), ints(&[1, -24, -72, -96]));
        let m = eisenstein(Eisenstein::M, o(3), QExp::ONE);
        assert_eq!(m.coefficient(o(2)).unwrap(), int(2160));
        assert_eq!(eisenstein(Eisenstein::E(1), o(30), QExp::ONE), eisenstein(Eisenstein::L, o(30), QExp::ONE));
        assert_eq!(eisenstein(Eisenstein::E(3), o(30), QExp::ONE), eisenstein(Eisenstein::N, o(30), QExp::ONE));
        let l9 = eisenstein(Eisenstein::L, o(20), o(9));
        assert_eq!(l9.coefficient(o(9)).unwrap(), int(-24));
        assert_eq!(l9.coefficient(o(18)).unwrap(), int(-72));
        assert_eq!(l9.coefficient(o(10)).unwrap(), int(0));
        // E_12 has denominator 691 in its q-coefficients.
        let e12 = eisenstein(Eisenstein::E(6), o(2), QExp::ONE);
        assert_eq!(e12.coefficient(QExp::ONE).unwrap(), rat(65520, 691));
    }

    #[test]
    fn lambert_examples() {
        let a = glaisher_a(o(4), QExp::ONE);
        assert_eq!(coeffs(&a, 3), ints(&[1, 6, 0, 6]));
        let chi4 = lambert(&LambertSpec::new(Character::Top(-4)), o(6));
        assert_eq!(chi4.coefficient(o(5)).unwrap(), int(2));
        let legendre =
            lambert(&LambertSpec::new(Character::Trivial).weight(3).denominator(2, Denominator::Minus), o(4));
        assert_eq!(coeffs(&legendre, 3), ints(&[0, 1, 8, 28]));
    }

    #[test]
    fn phi_and_psi() {
        assert_eq!(coeffs(&phi(o(10), QExp::ONE), 9), ints(&[1, 2, 0, 0, 2, 0, 0, 0, 0, 2]));
        assert_eq!(coeffs(&psi(o(11), QExp::ONE), 10), ints(&[1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1]));
        assert_eq!(phi(o(10), o(7)).coefficient(o(7)).unwrap(), int(2));
    }

    #[test]
    fn continued_fraction_head() {
        // R = q^{1/5}(1 - q + q^2 - q^4 + q^5 - ...)
        let r = rrcf(o(3)).shift(QExp::new(-1, 5));
        assert_eq!(coeffs(&r, 2), ints(&[1, -1, 1]));
    }

    #[test]
    fn golden_ratio_quotient() {
        let ratio = theta1_fifths_ratio(o(4)).unwrap();
        let lead = ratio.coefficient(QExp::ZERO).unwrap();
        assert_eq!(lead, golden());
    }
}
