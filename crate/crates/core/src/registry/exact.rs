//! Identities between τ-only objects, compared coefficient by coefficient.

use super::{Check, ExactPair, Record, Side};
use crate::arith::kronecker;
use crate::builders::{
    self, eisenstein, euler_product, fifth_cosine_products, golden, lambert, qprod, rrcf, sum_terms,
    theta1_fifths_ratio, theta1_prime_series, theta_null, Character, Denominator, Eisenstein, LambertSpec, NullKind,
};
use crate::series::{int, rat, Coeff, QExp, QSeries, Quadratic, Rational, Series, SeriesError};

use Side::{Dsl, Golden as G, Rational as R};

type Q5 = Quadratic<5>;
type Res = Result<QSeries, SeriesError>;
type GRes = Result<Series<Q5>, SeriesError>;

fn pair(label: &'static str, lhs: Side, rhs: Side) -> ExactPair {
    ExactPair { label, lhs, rhs }
}

#[allow(clippy::too_many_arguments)]
fn rec(
    id: &'static str,
    section: &'static str,
    label: &'static str,
    anchor: Option<&'static str>,
    note: Option<&'static str>,
    order: i64,
    pairs: Vec<ExactPair>,
) -> Record {
    Record { id, section, paper_label: label, anchor, note, check: Check::Exact { order, evidence: false, pairs } }
}

fn lam(spec: LambertSpec, o: QExp) -> QSeries {
    lambert(&spec, o)
}

/// `c0 + Σ cᵢ·(Lambert sum)ᵢ`.
fn affine(o: QExp, c0: i64, parts: &[(i64, LambertSpec)]) -> QSeries {
    parts.iter().fold(QSeries::constant(int(c0), o), |acc, (c, spec)| &acc + &lam(*spec, o).scale(&int(*c)))
}

fn sigma(weight: u32) -> LambertSpec {
    LambertSpec::new(Character::Trivial).weight(weight)
}

fn scaled_sigma(weight: u32, d: i64) -> LambertSpec {
    sigma(weight).numerator(QExp::int(d)).denominator(d, Denominator::Minus)
}

/// `Σ χ(n) nʷ (q^{n} − q^{2n}) / (1 − q^{3n})`, i.e. the denominator `1 + qⁿ + q²ⁿ`.
fn cubic_lambert(ch: Character, weight: u32, o: QExp) -> QSeries {
    let base = LambertSpec::new(ch).weight(weight).denominator(3, Denominator::Minus);
    &lam(base, o) - &lam(base.numerator(QExp::int(2)), o)
}

fn cos_fraction(k: i64, d: i64) -> Rational {
    // cos(2πk/d) for d ∈ {1, 2, 3, 4, 6}
    let g = num_integer::gcd(k.rem_euclid(d), d);
    let (k, d) = (k.rem_euclid(d) / g, d / g);
    match (k, d) {
        (0, _) => int(1),
        (_, 2) => int(-1),
        (_, 3) => rat(-1, 2),
        (_, 4) => int(0),
        (_, 6) => rat(1, 2),
        _ => unreachable!("cos(2π·{k}/{d}) is not tabulated"),
    }
}

/// `Σ c(n) nʷ q^{an} / (1 − q^{dn})` for an arbitrary rational weight `c`.
fn weighted_lambert(o: QExp, weight: u32, a: i64, d: i64, c: impl Fn(i64) -> Rational) -> QSeries {
    let mut terms = Vec::new();
    let mut n = 1;
    while QExp::int(a * n) < o {
        let w = c(n) * int(n.pow(weight));
        if !Coeff::is_zero(&w) {
            let mut e = a * n;
            while QExp::int(e) < o {
                terms.push((QExp::int(e), w.clone()));
                e += d * n;
            }
        }
        n += 1;
    }
    sum_terms(terms, o)
}

// ------------------------------------------------------------- basics

fn pentagonal_sum(o: QExp) -> Res {
    let mut terms = Vec::new();
    let mut n: i64 = 1;
    while QExp::new(n * n, 24) < o {
        let k = kronecker(12, n).unwrap_or(0);
        if k != 0 {
            terms.push((QExp::new(n * n, 24), int(i64::from(k))));
        }
        n += 1;
    }
    Ok(sum_terms(terms, o))
}

fn glaisher_lambert(o: QExp) -> Res {
    // a = −2 + 3(1+q)/(1−q) + 6Σ (q^{4n} − q^{2n}) / (1 − q^{3n})
    let geometric = QSeries::from_terms((1..).map(QExp::int).take_while(|e| *e < o).map(|e| (e, int(6))), o);
    let base = LambertSpec::new(Character::Trivial).denominator(3, Denominator::Minus);
    let sum = &lam(base.numerator(QExp::int(4)), o) - &lam(base.numerator(QExp::int(2)), o);
    Ok(&(&QSeries::constant(int(1), o) + &geometric) + &sum.scale(&int(6)))
}

// ------------------------------------------------------ squares, triangles

fn chi4_lambert(o: QExp) -> Res {
    Ok(affine(o, 1, &[(4, LambertSpec::new(Character::Top(-4)))]))
}

/// `Σ_{n≥0} (−1)ⁿ sₙ q^{n(n+1)/2}` with `sₙ = √2·sin((2n+1)π/4)`, so that
/// `θ1⁴(π/4|τ) = 4q^{1/2}·(this)⁴`.
fn theta1_quarter_core(o: QExp) -> QSeries {
    let mut terms = Vec::new();
    let mut n: i64 = 0;
    while QExp::new(n * (n + 1), 2) < o {
        let s = if n % 4 < 2 { 1 } else { -1 };
        let sign = if n % 2 == 0 { 1 } else { -1 };
        terms.push((QExp::new(n * (n + 1), 2), int(s * sign)));
        n += 1;
    }
    sum_terms(terms, o)
}

fn logd_theta1_quarter(o: QExp) -> Res {
    let t2 = theta_null(NullKind::Theta2, o, QExp::ONE);
    let t1p = theta1_prime_series(o, QExp::ONE);
    let core = theta1_quarter_core(o).pow(4)?.shift(QExp::new(1, 2)).scale(&int(16));
    Ok(&(&t2.pow(3)? * &t1p) * &core.invert()?)
}

fn quarter_product(o: QExp) -> Res {
    Ok(&qprod(o, QExp::int(2), QExp::int(2), -1, 2)? * &qprod(o, QExp::ONE, QExp::int(2), 1, 4)?)
}

/// `Σ_{n≥0} (−1)ⁿ qⁿ / (1 − q^{2n+1})`.
fn alternating_odd_lambert(o: QExp) -> Res {
    let mut terms = Vec::new();
    let mut n: i64 = 0;
    while QExp::int(n) < o {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let mut e = n;
        while QExp::int(e) < o {
            terms.push((QExp::int(e), int(sign)));
            e += 2 * n + 1;
        }
        n += 1;
    }
    Ok(sum_terms(terms, o))
}

fn triangular_product(o: QExp) -> Res {
    let h = QExp::new(1, 2);
    let p = &qprod(o - h, QExp::int(2), QExp::int(2), -1, 2)? * &qprod(o - h, QExp::int(2), QExp::int(2), 1, 4)?;
    Ok(p.shift(h).scale(&int(4)))
}

fn logd_theta4_quarter(o: QExp) -> Res {
    let spec = LambertSpec::new(Character::Top(-4)).numerator(QExp::new(1, 2));
    Ok(lam(spec, o).scale(&int(4)))
}

fn triangular_lambert(o: QExp) -> Res {
    let h = QExp::new(1, 2);
    Ok(alternating_odd_lambert(o - h)?.shift(h).scale(&int(4)))
}

fn eight_square_rhs(o: QExp) -> Res {
    Ok(affine(o, 1, &[(16, sigma(3).denominator(1, Denominator::MinusAlternating))]))
}

fn legendre_rhs(o: QExp) -> Res {
    Ok(lam(sigma(3).denominator(2, Denominator::Minus), o))
}

fn four_square_rhs(o: QExp) -> Res {
    Ok(affine(o, 1, &[(8, sigma(1)), (-32, scaled_sigma(1, 4))]))
}

// ------------------------------------------------------------ characters

fn ram_cubic_lhs(o: QExp) -> Res {
    Ok(cubic_lambert(Character::Trivial, 2, o))
}

fn carlitz_lhs(o: QExp) -> Res {
    Ok(affine(o, 1, &[(-9, LambertSpec::new(Character::Bottom(3)).weight(2))]))
}

fn chi3_lhs(o: QExp) -> Res {
    Ok(cubic_lambert(Character::Bottom(3), 1, o))
}

fn kron12_lhs(o: QExp) -> Res {
    Ok(affine(o, 1, &[(-1, LambertSpec::new(Character::Top(12)).weight(1))]))
}

fn a_squared_rhs(o: QExp) -> Res {
    Ok(affine(o, 1, &[(12, sigma(1)), (-36, scaled_sigma(1, 3))]))
}

fn chi7_square_lhs(o: QExp) -> Res {
    affine(o, 1, &[(2, LambertSpec::new(Character::Bottom(7)))]).pow(2)
}

fn chi7_square_rhs(o: QExp) -> Res {
    Ok(affine(o, 1, &[(4, sigma(1)), (-28, scaled_sigma(1, 7))]))
}

fn chi5_lhs(o: QExp) -> Res {
    Ok(lam(LambertSpec::new(Character::Bottom(5)).denominator(2, Denominator::Plus), o))
}

fn phi_phi7_rhs(o: QExp) -> Res {
    Ok(affine(o, 1, &[(2, LambertSpec::new(Character::Bottom(7)).denominator(1, Denominator::MinusAlternating))]))
}

fn phi3_phi_lhs(o: QExp) -> Res {
    Ok(affine(o, 1, &[(-2, LambertSpec::new(Character::Bottom(3)).denominator(1, Denominator::MinusAlternating))]))
}

fn psi_psi7_rhs(o: QExp) -> Res {
    Ok(lam(LambertSpec::new(Character::Bottom(7)).denominator(2, Denominator::Minus), o))
}

// ------------------------------------ specializations of the tangent identity

fn tangent_quarter_lhs(o: QExp) -> Res {
    Ok(affine(o, 1, &[(-4, LambertSpec::new(Character::Top(-4)).denominator(1, Denominator::Plus))]))
}

/// `∏ ((1 − qⁿ)/(1 + qⁿ))^k`.
fn ratio_product(o: QExp, k: i64) -> Res {
    Ok(&qprod(o, QExp::ONE, QExp::ONE, -1, k)? * &qprod(o, QExp::ONE, QExp::ONE, 1, -k)?)
}

fn quarter_ratio_product(o: QExp) -> Res {
    ratio_product(o, 2)
}

fn tangent_quarter_negated(o: QExp) -> Res {
    tangent_quarter_lhs(o)?.negate_q()
}

fn tangent_sixth_lhs(o: QExp) -> Res {
    Ok(affine(o, 1, &[(2, LambertSpec::new(Character::Bottom(3)).denominator(1, Denominator::Plus).alternating())]))
}

fn sixth_product(o: QExp) -> Res {
    // ∏ (1 + qⁿ + q²ⁿ)(1 − qⁿ)² / ((1 − qⁿ + q²ⁿ)(1 + qⁿ)²) = ∏ (1−q³ⁿ)(1−qⁿ) / ((1+q³ⁿ)(1+qⁿ))
    let three = QExp::int(3);
    let num = &qprod(o, three, three, -1, 1)? * &qprod(o, QExp::ONE, QExp::ONE, -1, 1)?;
    let den = &qprod(o, three, three, 1, 1)? * &qprod(o, QExp::ONE, QExp::ONE, 1, 1)?;
    Ok(&num * &den.invert()?)
}

fn tangent_sixth_negated(o: QExp) -> Res {
    tangent_sixth_lhs(o)?.negate_q()
}

fn printed_phi_phi3(o: QExp) -> Res {
    Ok(affine(o, 1, &[(2, LambertSpec::new(Character::Bottom(3)).denominator(1, Denominator::PlusAlternating))]))
}

fn tangent_half_lhs(o: QExp) -> Res {
    Ok(affine(o, 1, &[(8, sigma(1).denominator(1, Denominator::Plus).alternating())]))
}

fn half_ratio_product(o: QExp) -> Res {
    ratio_product(o, 4)
}

fn tangent_half_negated(o: QExp) -> Res {
    tangent_half_lhs(o)?.negate_q()
}

fn four_square_plus_rhs(o: QExp) -> Res {
    Ok(affine(o, 1, &[(8, sigma(1).denominator(1, Denominator::PlusAlternating))]))
}

// --------------------------------------------------------- conjecture

fn log_character_sum(o: QExp) -> GRes {
    let mut terms = Vec::new();
    let mut n: i64 = 1;
    while QExp::int(n) < o {
        let k = kronecker(n, 5).unwrap_or(0);
        if k != 0 {
            terms.push((QExp::int(n), Q5::from_rational(rat(i64::from(k), n))));
        }
        n += 1;
    }
    Ok(Series::from_terms(terms, o))
}

fn log_quadratic_quotient(o: QExp) -> GRes {
    let g = golden();
    let quad = |t: Q5| Series::from_terms([(QExp::ZERO, Q5::one()), (QExp::ONE, t), (QExp::int(2), Q5::one())], o);
    let diff = &quad(g.clone()).log()? - &quad(g.conjugate()).log()?;
    Ok(diff.mul_coeff(&Q5::new(int(0), rat(1, 5))))
}

// ------------------------------------------------- continued fraction

fn rrcf_level1(o: QExp) -> Res {
    let r = rrcf(o);
    Ok(&r.invert()? - &r)
}

fn rrcf_level5(o: QExp) -> Res {
    let r5 = rrcf(o).pow(5)?;
    Ok(&r5.invert()? - &r5)
}

fn ratio_minus_inverse(o: QExp) -> GRes {
    let r = theta1_fifths_ratio(o)?;
    Ok(&r - &r.invert()?)
}

fn ratio_plus_inverse(o: QExp) -> GRes {
    let r = theta1_fifths_ratio(o)?;
    Ok(&r + &r.invert()?)
}

fn ratio_fifth_power(o: QExp) -> GRes {
    let r5 = theta1_fifths_ratio(o)?.pow(5)?;
    Ok(&r5 - &r5.invert()?)
}

fn binomial_in_ratio(o: QExp) -> GRes {
    // a⁵ − b⁵ = (a−b)⁵ + 5ab(a−b)³ + 5(ab)²(a−b) with a = ratio, b = 1/ratio
    let x = ratio_minus_inverse(o)?;
    let five = Q5::from_rational(int(5));
    Ok(&(&x.pow(5)? + &x.pow(3)?.mul_coeff(&five)) + &x.mul_coeff(&five))
}

fn products_cross_check(o: QExp) -> GRes {
    // θ1(π/5)θ1(2π/5) = √5 η η(5), so P₁P₂ ∏(1−qⁿ)² = η(5)/η(1) · q^{-1/6}·(q;q)²... compared as P₁P₂(q;q)³ = (q⁵;q⁵)·(q;q)⁰·…
    let (p1, p2) = fifth_cosine_products(o);
    let e = euler_product(o, QExp::ONE).to_quadratic::<5>();
    Ok(&(&p1 * &p2) * &e.pow(2)?)
}

fn products_cross_check_rhs(o: QExp) -> GRes {
    // sin(π/5)sin(2π/5) = √5/4, so 4q^{1/4} sin sin P₁P₂(q;q)² = √5 q^{1/4}(q;q)(q⁵;q⁵)
    Ok((&euler_product(o, QExp::ONE) * &euler_product(o, QExp::int(5))).to_quadratic::<5>())
}

fn gauss_theta_sum(o: QExp) -> Res {
    let mut terms = Vec::new();
    let bound = (o.to_f64() * 24.0).sqrt() as i64 / 6 + 2;
    for n in -bound..=bound {
        let e = QExp::new((6 * n + 1) * (6 * n + 1), 24);
        let k = kronecker(n + 1, 5).unwrap_or(0);
        if e < o && k != 0 {
            let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
            terms.push((e, int(sign * i64::from(k))));
        }
    }
    Ok(sum_terms(terms, o))
}

fn gauss_theta_square(o: QExp) -> Res {
    gauss_theta_sum(o)?.pow(2)
}

fn gauss_eta_radicand(o: QExp) -> Res {
    let e1 = builders::eta(o, QExp::ONE);
    let e25 = builders::eta(o, QExp::int(25));
    Ok(&(&e1.pow(2)? + &(&e1 * &e25).scale(&int(2))) + &e25.pow(2)?.scale(&int(5)))
}

fn gauss_eta_root(o: QExp) -> Res {
    gauss_eta_radicand(o)?.sqrt()
}

fn gauss_sum_over_eta(o: QExp) -> GRes {
    let s = &gauss_theta_sum(o)? * &builders::eta(o, QExp::ONE).invert()?;
    Ok(s.to_quadratic::<5>().mul_coeff(&Q5::root()))
}

// ------------------------------------------------------- degree three

/// `Σ_{n∈ℤ} (−1)ⁿ (2n+1)ᵏ q^{c·n(n+1)/2}`.
fn odd_power_theta(o: QExp, k: u32, c: QExp) -> QSeries {
    let mut terms = Vec::new();
    let mut n: i64 = 0;
    while c * QExp::new(n * (n + 1), 2) < o {
        for m in [n, -n - 1] {
            let sign = if m.rem_euclid(2) == 0 { 1 } else { -1 };
            terms.push((c * QExp::new(m * (m + 1), 2), int(sign * (2 * m + 1).pow(k))));
        }
        n += 1;
    }
    sum_terms(terms, o)
}

fn eta10_lhs(o: QExp) -> Res {
    Ok(euler_product(o, QExp::ONE).pow(10)?.scale(&int(32)))
}

fn eta10_rhs(o: QExp) -> Res {
    let (three, third) = (QExp::int(3), QExp::new(1, 3));
    let a3 = odd_power_theta(o, 3, three);
    let a1 = odd_power_theta(o, 1, three);
    let b1 = odd_power_theta(o, 1, third);
    let b3 = odd_power_theta(o, 3, third);
    Ok(&(&a3 * &b1).scale(&int(9)) - &(&a1 * &b3))
}

// --------------------------------------------------------- degree six

fn null(k: NullKind, o: QExp, c: i64) -> QSeries {
    theta_null(k, o, QExp::int(c))
}

/// `θ³(c₁τ)/θ(c₂τ)` for one nullwert kind.
fn cube_over(k: NullKind, o: QExp, c1: i64, c2: i64) -> Res {
    Ok(&null(k, o, c1).pow(3)? * &null(k, o, c2).invert()?)
}

fn squared_two_root(a: QSeries, b: QSeries, c: QSeries) -> Res {
    // √A − √B = √C  ⇔  (A + B − C)² = 4AB on the positive branch
    Ok(&(&a + &b) - &c).and_then(|s| s.pow(2)).map(|s| &s - &(&a * &b).scale(&int(4)))
}

fn deg3_sqrt_a_poly(o: QExp) -> Res {
    use NullKind::*;
    squared_two_root(cube_over(Theta4, o, 3, 1)?, cube_over(Theta2, o, 3, 1)?, cube_over(Theta3, o, 3, 1)?)
}

fn deg3_sqrt_b_poly(o: QExp) -> Res {
    use NullKind::*;
    squared_two_root(cube_over(Theta2, o, 1, 3)?, cube_over(Theta4, o, 1, 3)?, cube_over(Theta3, o, 1, 3)?)
}

fn zero(o: QExp) -> Res {
    Ok(QSeries::zero(o))
}

fn deg3_sqrt_a_lhs(o: QExp) -> Res {
    use NullKind::*;
    Ok(&cube_over(Theta4, o, 3, 1)?.sqrt()? - &cube_over(Theta2, o, 3, 1)?.sqrt()?)
}

fn deg3_sqrt_a_rhs(o: QExp) -> Res {
    cube_over(NullKind::Theta3, o, 3, 1)?.sqrt()
}

fn deg3_sqrt_b_lhs(o: QExp) -> Res {
    use NullKind::*;
    Ok(&cube_over(Theta2, o, 1, 3)?.sqrt()? - &cube_over(Theta4, o, 1, 3)?.sqrt()?)
}

fn deg3_sqrt_b_rhs(o: QExp) -> Res {
    cube_over(NullKind::Theta3, o, 1, 3)?.sqrt()
}

/// `θ(c₁τ)/θ(c₂τ)` for each nullwert kind, in the order θ2, θ3, θ4.
fn null_quotients(o: QExp, c1: i64, c2: i64) -> Result<[QSeries; 3], SeriesError> {
    use NullKind::*;
    let q = |k| Ok::<_, SeriesError>(&null(k, o, c1) * &null(k, o, c2).invert()?);
    Ok([q(Theta2)?, q(Theta3)?, q(Theta4)?])
}

fn eta_cube_quotient(o: QExp, c1: i64, c2: i64, k: i64) -> Res {
    let e1 = builders::eta_pow(o, QExp::int(c1), 3);
    let e2 = builders::eta_pow(o, QExp::int(c2), -3);
    Ok((&e1 * &e2).scale(&int(k * k)))
}

fn three_root_poly(a: &QSeries, b: &QSeries, c: &QSeries, d: &QSeries) -> Res {
    // √A − √B + √C = √D  ⇒  64ABCD = (4BD + 4AC − (A + C − B − D)²)²
    let s = &(&(a + c) - b) - d;
    let inner = &(&(b * d) + &(a * c)).scale(&int(4)) - &s.pow(2)?;
    Ok(&inner.pow(2)? - &(&(a * b) * &(c * d)).scale(&int(64)))
}

fn deg9_x_poly(o: QExp) -> Res {
    let [a, b, c] = null_quotients(o, 1, 9)?;
    three_root_poly(&a, &b, &c, &eta_cube_quotient(o, 1, 9, 1)?)
}

fn deg9_xi_poly(o: QExp) -> Res {
    let [a, b, c] = null_quotients(o, 9, 1)?;
    three_root_poly(&a, &b, &c, &eta_cube_quotient(o, 9, 1, 3)?)
}

fn three_root_sum(o: QExp, c1: i64, c2: i64) -> Res {
    let [a, b, c] = null_quotients(o, c1, c2)?;
    Ok(&(&a.sqrt()? - &b.sqrt()?) + &c.sqrt()?)
}

fn deg9_x_lhs(o: QExp) -> Res {
    three_root_sum(o, 1, 9)
}

fn deg9_x_rhs(o: QExp) -> Res {
    eta_cube_quotient(o, 1, 9, 1)?.sqrt()
}

fn deg9_xi_lhs(o: QExp) -> Res {
    three_root_sum(o, 9, 1)
}

fn deg9_xi_rhs(o: QExp) -> Res {
    eta_cube_quotient(o, 9, 1, 3)?.sqrt()
}

fn mixed5_lhs(o: QExp) -> Res {
    use NullKind::*;
    let r = |k| (&null(k, o, 1).pow(5)? * &null(k, o, 3)).sqrt();
    Ok(&(&r(Theta2)? + &r(Theta3)?) - &r(Theta4)?)
}

fn mixed5_rhs(o: QExp) -> Res {
    let q = &builders::eta_pow(o, QExp::int(3), 9) * &builders::eta_pow(o, QExp::ONE, -3);
    Ok(q.sqrt()?.scale(&int(18)))
}

// ------------------------------------------------- limit applications

fn cos_weight<const P: i64, const D: i64>(n: i64) -> Rational {
    cos_fraction(n * P, D)
}

fn ramanujan_cos_lhs<const P: i64, const D: i64>(o: QExp) -> Res {
    // 1 − 24Σ n q²ⁿ/(1−q²ⁿ) + 24Σ n qⁿ/(1−q²ⁿ) cos 2nu, u = πP/D
    let base = &QSeries::one(o) - &weighted_lambert(o, 1, 2, 2, |_| int(1)).scale(&int(24));
    (&base + &weighted_lambert(o, 1, 1, 2, cos_weight::<P, D>).scale(&int(24))).pow(2)
}

fn ramanujan_cos_rhs<const P: i64, const D: i64>(o: QExp) -> Res {
    let base = &QSeries::one(o) + &weighted_lambert(o, 3, 2, 2, |_| int(1)).scale(&int(240));
    Ok(&base + &weighted_lambert(o, 3, 1, 2, cos_weight::<P, D>).scale(&int(48)))
}

// --------------------------------------------------------------- catalog

pub(super) fn records() -> Vec<Record> {
    let mut v = vec![
        rec(
            "euler_pentagonal",
            "quintuple",
            "newf:eqn4",
            Some("Euler's pentagonal number theorem"),
            None,
            100,
            vec![pair("eta as a character sum", Dsl("eta"), R(pentagonal_sum))],
        ),
        rec(
            "jacobi_quartic_null",
            "preliminaries",
            "jabel:eqn32",
            Some("Jacobi's quartic theta function identity"),
            None,
            50,
            vec![pair("quartic", Dsl("theta3^4"), Dsl("theta2^4 + theta4^4"))],
        ),
        rec(
            "theta1prime_2eta3",
            "preliminaries",
            "jabel:eqn18",
            None,
            None,
            30,
            vec![pair("derivative at 0", Dsl("theta1p"), Dsl("2*eta^3"))],
        ),
        rec(
            "eisenstein_defs",
            "preliminaries",
            "jabel:eqn8",
            None,
            Some("Bernoulli-number normalization against the L, M, N sums, plus E8 = M², E10 = MN, 691·E12 = 441M³ + 250N²"),
            100,
            vec![
                pair("E2 = L", R(|o| Ok(eisenstein(Eisenstein::E(1), o, QExp::ONE))), R(|o| Ok(affine(o, 1, &[(-24, sigma(1))])))),
                pair("E4 = M", R(|o| Ok(eisenstein(Eisenstein::E(2), o, QExp::ONE))), R(|o| Ok(affine(o, 1, &[(240, sigma(3))])))),
                pair("E6 = N", R(|o| Ok(eisenstein(Eisenstein::E(3), o, QExp::ONE))), R(|o| Ok(affine(o, 1, &[(-504, sigma(5))])))),
                pair("E8 = M^2", R(|o| Ok(eisenstein(Eisenstein::E(4), o, QExp::ONE))), Dsl("E4^2")),
                pair("E10 = MN", R(|o| Ok(eisenstein(Eisenstein::E(5), o, QExp::ONE))), Dsl("E4*E6")),
                pair(
                    "691 E12",
                    R(|o| Ok(eisenstein(Eisenstein::E(6), o, QExp::ONE).scale(&int(691)))),
                    Dsl("441*E4^3 + 250*E6^2"),
                ),
            ],
        ),
        rec(
            "glaisher_a_lambert",
            "preliminaries",
            "jabel:eqn34",
            None,
            Some("second form, from the log-derivative of θ1 at πτ with modulus 3τ"),
            100,
            vec![pair("a(τ)", Dsl("a"), R(glaisher_lambert))],
        ),
        rec(
            "two_square",
            "quintuple",
            "jacsquare:eqn4",
            Some("as a sum of two squares"),
            None,
            100,
            vec![pair("phi^2", Dsl("phi^2"), R(chi4_lambert))],
        ),
        rec(
            "two_square_logd",
            "quintuple",
            "jacsquare:eqn8/9/10",
            None,
            None,
            60,
            vec![
                pair("theta quotient = product", R(logd_theta1_quarter), R(quarter_product)),
                pair("product = Lambert sum", R(quarter_product), R(chi4_lambert)),
            ],
        ),
        rec(
            "two_triangular",
            "quintuple",
            "jacsquare:eqn11/13/14/15",
            None,
            Some("the log-derivative at π/4 is taken of θ4, the form the derivation supports; θ4(π/4|τ) = θ4(0|4τ)"),
            60,
            vec![
                pair("psi(q^2)^2", Dsl("psi(2)^2"), R(alternating_odd_lambert)),
                pair("theta quotient = product", Dsl("theta2^3*theta1p/(4*theta4(4)^4)"), R(triangular_product)),
                pair("product = psi", R(triangular_product), Dsl("4*q(1/2)*psi(2)^2")),
                pair("log-derivative series", R(logd_theta4_quarter), R(triangular_lambert)),
            ],
        ),
        rec(
            "eight_square",
            "quintuple",
            "KR:eqn20",
            Some("sums of eight squares"),
            None,
            100,
            vec![pair("phi^8", Dsl("phi^8"), R(eight_square_rhs))],
        ),
        rec(
            "legendre_psi8",
            "quintuple",
            "addKR:eqn5",
            Some("due to Legendre"),
            None,
            100,
            vec![pair("q psi^8", Dsl("q(1)*psi^8"), R(legendre_rhs))],
        ),
        rec(
            "jacobi_four_square",
            "master-applications",
            "liuthm",
            Some("Jacobi four-square identity"),
            Some("unnumbered identity following the specialization f = θ1²(4z|4τ)"),
            100,
            vec![pair("phi^4", Dsl("phi^4"), R(four_square_rhs))],
        ),
        rec(
            "ram_cubic",
            "quintuple",
            "ramcar:eqn3",
            Some("$\\frac{\\eta^9(3\\tau)}{\\eta^3(\\tau)}$"),
            None,
            60,
            vec![pair("cubic Lambert sum", R(ram_cubic_lhs), Dsl("eta(3)^9/eta^3"))],
        ),
        rec(
            "carlitz",
            "quintuple",
            "ramcar:eqn4",
            Some("Carlitz's identity"),
            None,
            60,
            vec![pair("character sum", R(carlitz_lhs), Dsl("eta^9/eta(3)^3"))],
        ),
        rec(
            "chi3_eta",
            "quintuple",
            "ramcar:eqn5",
            None,
            None,
            60,
            vec![pair("character sum", R(chi3_lhs), Dsl("eta^3*eta(9)^3/eta(3)^2"))],
        ),
        rec(
            "kron12_eta",
            "quintuple",
            "ramcar:eqn6",
            None,
            Some("erratum: the Lambert sum enters with coefficient 1, not 12"),
            60,
            vec![pair("character sum", R(kron12_lhs), Dsl("eta*eta(3)*eta(4)^2*eta(6)^2/eta(12)^2"))],
        ),
        rec(
            "a_squared",
            "quintuple",
            "Gauss:eqn5",
            None,
            None,
            100,
            vec![pair("a^2", Dsl("a^2"), R(a_squared_rhs))],
        ),
        rec(
            "chi7_squared",
            "quintuple",
            "Gauss:eqn6",
            None,
            None,
            100,
            vec![pair("square", R(chi7_square_lhs), R(chi7_square_rhs))],
        ),
        rec(
            "chi5_eta4",
            "quintuple",
            "JF:eqn6a",
            None,
            None,
            60,
            vec![pair("character sum", R(chi5_lhs), Dsl("eta*eta(2)*eta(10)*eta(20)/(eta(4)*eta(5))"))],
        ),
        rec(
            "phi_phi7",
            "quintuple",
            "KR:eqn18",
            None,
            None,
            100,
            vec![pair("phi phi(7)", Dsl("phi*phi(7)"), R(phi_phi7_rhs))],
        ),
        rec(
            "phi3_phi",
            "quintuple",
            "KR:eqn21",
            None,
            None,
            100,
            vec![pair("quotient", R(phi3_phi_lhs), Dsl("phi(3)^3/phi"))],
        ),
        rec(
            "psi_psi7",
            "quintuple",
            "addKR:eqn4",
            None,
            None,
            100,
            vec![pair("q psi psi(7)", Dsl("q(1)*psi*psi(7)"), R(psi_psi7_rhs))],
        ),
        rec(
            "two_square_alt",
            "quintuple",
            "LJ:eqn1",
            Some("$1-4(\\tan z)$"),
            Some("z = π/4, then q ↦ −q"),
            100,
            vec![
                pair("z = pi/4", R(tangent_quarter_lhs), R(quarter_ratio_product)),
                pair("q -> -q", R(tangent_quarter_negated), Dsl("phi^2")),
            ],
        ),
        rec(
            "phi_phi3",
            "quintuple",
            "LJ:eqn1",
            Some("$1-4(\\tan z)$"),
            Some("z = π/6, then q ↦ −q"),
            100,
            vec![
                pair("z = pi/6", R(tangent_sixth_lhs), R(sixth_product)),
                pair("q -> -q", R(tangent_sixth_negated), Dsl("phi*phi(3)")),
                pair("Lambert form", R(tangent_sixth_negated), R(printed_phi_phi3)),
            ],
        ),
        rec(
            "four_square_alt",
            "quintuple",
            "LJ:eqn1",
            Some("$1-4(\\tan z)$"),
            Some("limit z → π/2, then q ↦ −q"),
            100,
            vec![
                pair("z -> pi/2", R(tangent_half_lhs), R(half_ratio_product)),
                pair("q -> -q", R(tangent_half_negated), Dsl("phi^4")),
                pair("Lambert form", Dsl("phi^4"), R(four_square_plus_rhs)),
            ],
        ),
        Record {
            id: "conjecture_log",
            section: "quintuple",
            paper_label: "conj:eqn1",
            anchor: Some("When $q \\to 1$"),
            note: Some("power series in x over Q(√5); agreement to finite order is evidence, not proof"),
            check: Check::Exact {
                order: 30,
                evidence: true,
                pairs: vec![pair("x-series", G(log_character_sum), G(log_quadratic_quotient))],
            },
        },
        rec(
            "rrcf_eta_level1",
            "continued-fraction",
            "rrc:eqn15",
            None,
            None,
            30,
            vec![pair("1/R - R", R(rrcf_level1), Dsl("1 + eta(1/5)/eta(5)"))],
        ),
        rec(
            "rrcf_eta_level5",
            "continued-fraction",
            "rrc:eqn19",
            Some("$R^{-5}(\\tau)-R^5(\\tau)=11+$"),
            None,
            30,
            vec![pair("R^-5 - R^5", R(rrcf_level5), Dsl("11 + eta^6/eta(5)^6"))],
        ),
        rec(
            "rrcf_binomial",
            "continued-fraction",
            "rrc:eqn20/21",
            None,
            None,
            30,
            vec![
                pair("eta form", Dsl("11 + 125*eta(5)^6/eta^6"), Dsl("(1 + 5*eta(25)/eta)^5 + 5*(1 + 5*eta(25)/eta)^3 + 5*(1 + 5*eta(25)/eta)")),
                pair("binomial in the theta ratio", G(ratio_fifth_power), G(binomial_in_ratio)),
            ],
        ),
        rec(
            "kiepert_deg5",
            "continued-fraction",
            "rrc:eqn22",
            Some("modular equation of degree five"),
            None,
            30,
            vec![pair(
                "quintic in eta(25)/eta",
                Dsl("eta(25)/eta + 5*(eta(25)/eta)^2 + 15*(eta(25)/eta)^3 + 25*(eta(25)/eta)^4 + 25*(eta(25)/eta)^5"),
                Dsl("eta(5)^6/eta^6"),
            )],
        ),
        rec(
            "theta15_quotient",
            "continued-fraction",
            "rrc:eqn13",
            None,
            Some("θ1(2π/5|τ)/θ1(π/5|τ) expanded over Q(√5) from the product form"),
            30,
            vec![
                pair("ratio - 1/ratio", G(ratio_minus_inverse), G(|o| Ok(expand_dsl("1 + 5*eta(25)/eta", o)?.to_quadratic::<5>()))),
                pair("product at pi/5 and 2pi/5", G(products_cross_check), G(products_cross_check_rhs)),
            ],
        ),
        rec(
            "theta15_quintic",
            "continued-fraction",
            "rrc:eqn17",
            Some("curious identity"),
            None,
            30,
            vec![pair("fifth powers", G(ratio_fifth_power), G(|o| Ok(expand_dsl("11 + 125*eta(5)^6/eta^6", o)?.to_quadratic::<5>())))],
        ),
        rec(
            "gauss_sqrt_sq",
            "continued-fraction",
            "rrc:eqn28/29",
            None,
            Some("checked in squared form; the root is also compared on the branch with positive leading coefficient"),
            30,
            vec![
                pair("squared", R(gauss_theta_square), R(gauss_eta_radicand)),
                pair("root", R(gauss_theta_sum), R(gauss_eta_root)),
                pair("ratio + 1/ratio", G(ratio_plus_inverse), G(gauss_sum_over_eta)),
            ],
        ),
        rec(
            "eta10",
            "degree-three",
            "liu:eqn12",
            Some("$32\\prod_{n=1}^\\infty (1-q^n)^{10}$"),
            Some("first of the two identities carrying this label"),
            60,
            vec![pair("tenth power", R(eta10_lhs), R(eta10_rhs))],
        ),
    ];
    v.extend(degree_six());
    v.extend(eisenstein_applications());
    v
}

fn expand_dsl(src: &str, o: QExp) -> Result<QSeries, SeriesError> {
    let e = crate::expr::parse(src).map_err(|e| SeriesError::Unsupported(e.to_string()))?;
    crate::expr::expand(&e, o).map_err(|e| SeriesError::Unsupported(e.to_string()))
}

fn degree_six() -> Vec<Record> {
    let s = "degree-six";
    vec![
        rec(
            "deg3_mod_a",
            s,
            "addliu:eqn4",
            Some("modular equations of Ramanujan"),
            None,
            30,
            vec![pair(
                "squares of quotients",
                Dsl("(theta2/theta2(3))^2 - (theta3/theta3(3))^2 + (theta4/theta4(3))^2"),
                Dsl("eta^6/eta(3)^6"),
            )],
        ),
        rec(
            "deg3_mod_b",
            s,
            "addliu:eqn5",
            Some("modular equations of Ramanujan"),
            None,
            30,
            vec![pair(
                "squares of quotients",
                Dsl("(theta2(3)/theta2)^2 - (theta3(3)/theta3)^2 + (theta4(3)/theta4)^2"),
                Dsl("9*eta(3)^6/eta^6"),
            )],
        ),
        rec(
            "legendre_theta3",
            s,
            "addliu:eqn8",
            Some("Legendre identity"),
            None,
            50,
            vec![pair("products", Dsl("theta2*theta2(3) + theta4*theta4(3)"), Dsl("theta3*theta3(3)"))],
        ),
        rec(
            "deg3_sqrt_a",
            s,
            "addliu:eqn10",
            None,
            Some("√A − √B = √C checked as (A + B − C)² = 4AB, and on the positive branch of the series root"),
            30,
            vec![pair("squared form", R(deg3_sqrt_a_poly), R(zero)), pair("roots", R(deg3_sqrt_a_lhs), R(deg3_sqrt_a_rhs))],
        ),
        rec(
            "deg3_sqrt_b",
            s,
            "addliu:eqn11",
            None,
            Some(
                "erratum: the θ2 and θ4 terms trade places, √(θ2³/θ2(3τ)) − √(θ4³/θ4(3τ)) = √(θ3³/θ3(3τ)); checked in squared form and on the positive branch",
            ),
            30,
            vec![pair("squared form", R(deg3_sqrt_b_poly), R(zero)), pair("roots", R(deg3_sqrt_b_lhs), R(deg3_sqrt_b_rhs))],
        ),
        rec(
            "deg9_sqrt_x",
            s,
            "addliu:eqn13",
            None,
            Some("√A − √B + √C = √D checked as 64ABCD = (4BD + 4AC − (A + C − B − D)²)², and on the positive branch"),
            30,
            vec![pair("squared form", R(deg9_x_poly), R(zero)), pair("roots", R(deg9_x_lhs), R(deg9_x_rhs))],
        ),
        rec(
            "deg9_sqrt_xi",
            s,
            "addliu:eqn14",
            None,
            Some("√A − √B + √C = √D checked as 64ABCD = (4BD + 4AC − (A + C − B − D)²)², and on the positive branch"),
            30,
            vec![pair("squared form", R(deg9_xi_poly), R(zero)), pair("roots", R(deg9_xi_lhs), R(deg9_xi_rhs))],
        ),
        rec(
            "theta_mixed5",
            s,
            "addliu:eqn15",
            None,
            Some("series square roots on the branch with positive leading coefficient"),
            30,
            vec![pair("roots", R(mixed5_lhs), R(mixed5_rhs))],
        ),
        rec(
            "theta3_triples",
            s,
            "addliu:eqn17/18",
            None,
            None,
            30,
            vec![
                pair("3 theta2 theta2(3)", Dsl("3*theta2*theta2(3)"), Dsl("theta3^3/theta3(3) - theta4^3/theta4(3)")),
                pair("3 theta3 theta3(3)", Dsl("3*theta3*theta3(3)"), Dsl("theta2^3/theta2(3) - theta4^3/theta4(3)")),
                pair("3 theta4 theta4(3)", Dsl("3*theta4*theta4(3)"), Dsl("theta2^3/theta2(3) - theta3^3/theta3(3)")),
                pair("theta2 theta2(3)", Dsl("theta2*theta2(3)"), Dsl("theta4(3)^3/theta4 - theta3(3)^3/theta3")),
                pair("theta3 theta3(3)", Dsl("theta3*theta3(3)"), Dsl("theta4(3)^3/theta4 - theta2(3)^3/theta2")),
                pair("theta4 theta4(3)", Dsl("theta4*theta4(3)"), Dsl("theta3(3)^3/theta3 - theta2(3)^3/theta2")),
            ],
        ),
        rec(
            "theta7_quotients",
            s,
            "addliu:eqn20/21",
            None,
            Some("the second identity is the first of two carrying the label addliu:eqn21"),
            30,
            vec![
                pair(
                    "7 over 3",
                    Dsl("theta2(7)/theta2(3) - theta3(7)/theta3(3) + theta4(7)/theta4(3)"),
                    Dsl("7*eta(7)^3/(3*eta(3)^3) - 4*eta^3*eta(21)/(3*eta(3)^4)"),
                ),
                pair(
                    "3 over 7",
                    Dsl("theta2(3)/theta2(7) - theta3(3)/theta3(7) + theta4(3)/theta4(7)"),
                    Dsl("eta(3)^3/eta(7)^3 - 4*eta*eta(21)^3/eta(7)^4"),
                ),
            ],
        ),
        rec(
            "theta21_quotients",
            s,
            "addliu:eqn23/21",
            None,
            Some("the second identity is the second of two carrying the label addliu:eqn21"),
            30,
            vec![
                pair(
                    "1 over 21",
                    Dsl("theta2/theta2(21) - theta3/theta3(21) + theta4/theta4(21)"),
                    Dsl("4*eta(3)*eta(7)^3/(3*eta(21)^4) - eta^3/(3*eta(21)^3)"),
                ),
                pair(
                    "21 over 1",
                    Dsl("theta2(21)/theta2 - theta3(21)/theta3 + theta4(21)/theta4"),
                    Dsl("4*eta(3)^3*eta(7)/eta^4 - 7*eta(21)^3/eta^3"),
                ),
            ],
        ),
    ]
}

fn eisenstein_applications() -> Vec<Record> {
    let (lim, app) = ("limit-applications", "master-applications");
    vec![
        rec(
            "eisen_L3",
            app,
            "deg8:eqn13",
            None,
            None,
            30,
            vec![pair(
                "limit x -> 0",
                Dsl("(3*E2(3) - E2)/2"),
                Dsl("4*eta^3*eta(3)^3*(1/(theta2*theta2(3)) - 1/(theta3*theta3(3)) + 1/(theta4*theta4(3)))"),
            )],
        ),
        rec(
            "theta5_eta_a",
            app,
            "deg8:eqn8",
            None,
            None,
            30,
            vec![pair("quotients", Dsl("theta2(5)/theta2 - theta3(5)/theta3 + theta4(5)/theta4"), Dsl("5*eta(5)^3/eta^3"))],
        ),
        rec(
            "theta5_eta_b",
            app,
            "deg8:eqn9",
            Some("$\\frac{\\eta^3(\\tau)}{\\eta^3(5\\tau)}$"),
            None,
            30,
            vec![pair("quotients", Dsl("theta2/theta2(5) - theta3/theta3(5) + theta4/theta4(5)"), Dsl("eta^3/eta(5)^3"))],
        ),
        rec(
            "theta5_ninth_a",
            app,
            "deg8:eqn10",
            None,
            None,
            30,
            vec![pair(
                "ninth powers",
                Dsl("theta2^9/theta2(5) - theta3^9/theta3(5) + theta4^9/theta4(5)"),
                Dsl("2500*eta*eta(5)^7 + 220*eta^7*eta(5)"),
            )],
        ),
        rec(
            "theta5_ninth_b",
            app,
            "deg8:eqn11",
            None,
            None,
            30,
            vec![pair(
                "ninth powers",
                Dsl("theta2(5)^9/theta2 - theta3(5)^9/theta3 + theta4(5)^9/theta4"),
                Dsl("44*eta*eta(5)^7 + 4*eta^7*eta(5)"),
            )],
        ),
        rec(
            "eisen_7L7_a",
            app,
            "newliu:eqn3",
            Some("$7L(7\\tau)-L(\\tau)$"),
            None,
            30,
            vec![pair(
                "level 7",
                Dsl("(7*E2(7) - E2)/6"),
                Dsl("theta1p^3/(49*theta1p(7))*(theta2(7)/theta2^3 - theta3(7)/theta3^3 + theta4(7)/theta4^3)"),
            )],
        ),
        rec(
            "eisen_7L7_b",
            app,
            "newliu:eqn4",
            Some("$7L(7\\tau)-L(\\tau)$"),
            None,
            30,
            vec![pair(
                "level 7",
                Dsl("(7*E2(7) - E2)/6"),
                Dsl("theta1p(7)^3/theta1p*(theta2/theta2(7)^3 - theta3/theta3(7)^3 + theta4/theta4(7)^3)"),
            )],
        ),
        rec(
            "eisen_5_3",
            app,
            "newliu:eqn5/6",
            None,
            Some("erratum in the second identity: the denominator is θ1'(3τ)θ1'(5τ)"),
            30,
            vec![
                pair(
                    "levels 3 and 5",
                    Dsl("25*E2(5) + 9*E2(3) - 8*E2"),
                    Dsl("2*theta1p^4/(5*theta1p(3)*theta1p(5))*(theta2(3)*theta2(5)/theta2^4 - theta3(3)*theta3(5)/theta3^4 + theta4(3)*theta4(5)/theta4^4)"),
                ),
                pair(
                    "level 15",
                    Dsl("(8*E2(15) - E2(3) - E2(5))/6"),
                    Dsl("theta1p(15)^4/(theta1p(3)*theta1p(5))*(theta2(3)*theta2(5)/theta2(15)^4 - theta3(3)*theta3(5)/theta3(15)^4 + theta4(3)*theta4(5)/theta4(15)^4)"),
                ),
            ],
        ),
        rec(
            "eisen_3L3_a",
            app,
            "newliu:eqn7",
            None,
            None,
            30,
            vec![pair(
                "level 3",
                Dsl("(3*E2(3) - E2)/2"),
                Dsl("theta1p^5/(81*theta1p(3)^3)*(theta2(3)^3/theta2^5 - theta3(3)^3/theta3^5 + theta4(3)^3/theta4^5)"),
            )],
        ),
        rec(
            "eisen_3L3_b",
            app,
            "newliu:eqn8",
            None,
            None,
            30,
            vec![pair(
                "level 3",
                Dsl("(3*E2(3) - E2)/2"),
                Dsl("theta1p(3)^5/theta1p^3*(theta2^3/theta2(3)^5 - theta3^3/theta3(3)^5 + theta4^3/theta4(3)^5)"),
            )],
        ),
        rec(
            "eisen_sq_9",
            lim,
            "Ei:eqn6",
            Some("$(9L(9\\tau)-L(\\tau))^2$"),
            None,
            30,
            vec![pair(
                "level 9",
                Dsl("(9*E2(9) - E2)^2 + (42*E4(9) - 2*E4)/5"),
                Dsl("72*theta1p(9)^5/theta1p*(theta2/theta2(9)^5 - theta3/theta3(9)^5 + theta4/theta4(9)^5)"),
            )],
        ),
        rec(
            "eisen_sq_9b",
            lim,
            "Ei:eqn8",
            None,
            None,
            30,
            vec![pair(
                "level 9",
                Dsl("405*(9*E2(9) - E2)^2 + 42*E4 - 13122*E4(9)"),
                Dsl("40*theta1p^5/theta1p(9)*(theta2(9)/theta2^5 - theta3(9)/theta3^5 + theta4(9)/theta4^5)"),
            )],
        ),
        rec(
            "eisen_sq_5",
            lim,
            "Ei:eqn10",
            None,
            Some("the value at (π+πτ)/2 in the derivation uses θ3, not θ2"),
            30,
            vec![pair(
                "level 5",
                Dsl("125*(E2 - 5*E2(5))^2 + 11*E4 - 625*E4(5)"),
                Dsl("18*theta1p^6/(5*theta1p(5)^2)*(theta2(5)^2/theta2^6 - theta3(5)^2/theta3^6 + theta4(5)^2/theta4^6)"),
            )],
        ),
        rec(
            "eisen_139",
            lim,
            "Ei:eqn12",
            None,
            None,
            30,
            vec![pair(
                "levels 3 and 9",
                Dsl("5*(E2 - 6*E2(3) + 9*E2(9))^2 - E4 + 12*E4(3) - 81*E4(9)"),
                Dsl("10*theta1p(3)^8/(theta1p^2*theta1p(9)^2)*(theta2^2*theta2(9)^2/theta2(3)^8 - theta3^2*theta3(9)^2/theta3(3)^8 + theta4^2*theta4(9)^2/theta4(3)^8)"),
            )],
        ),
        rec(
            "eisen_5_25",
            lim,
            "Ei:eqn15",
            None,
            None,
            30,
            vec![pair(
                "levels 5 and 25",
                Dsl("5*(10*E2(5) - E2 - 25*E2(25))^2 + 44*E4(5) - 2*E4 - 1250*E4(25)"),
                Dsl("72*theta1p(5)^6/(theta1p*theta1p(25))*(theta2*theta2(25)/theta2(5)^6 - theta3*theta3(25)/theta3(5)^6 + theta4*theta4(25)/theta4(5)^6)"),
            )],
        ),
        rec(
            "eisen_3_7_21",
            lim,
            "Ei:eqn16",
            None,
            Some("erratum: the M-term of weight 44 is M(21τ), not M(5τ)"),
            30,
            vec![pair(
                "levels 3, 7 and 21",
                Dsl("5*(10*E2(21) - E2(3) - E2(7))^2 + 44*E4(21) - 2*E4(3) - 2*E4(7)"),
                Dsl("360*theta1p(21)^6/(theta1p(3)*theta1p(7))*(theta2(3)*theta2(7)/theta2(21)^6 - theta3(3)*theta3(7)/theta3(21)^6 + theta4(3)*theta4(7)/theta4(21)^6)"),
            )],
        ),
        rec(
            "eisen_15",
            lim,
            "Ei:eqn17",
            None,
            None,
            30,
            vec![pair(
                "levels 3, 5 and 15",
                Dsl("5*(7*E2(15) + E2(3) + E2(5) - E2)^2 + 38*E4(15) + 2*E4(5) + 2*E4(3) - 2*E4"),
                Dsl("360*theta1p(15)^3*theta1p(3)*theta1p(5)/theta1p*(theta2/(theta2(3)*theta2(5)*theta2(15)^3) - theta3/(theta3(3)*theta3(5)*theta3(15)^3) + theta4/(theta4(3)*theta4(5)*theta4(15)^3))"),
            )],
        ),
        rec(
            "eisen_3_quartic",
            "limit-applications",
            "Eisenram:eqn1",
            None,
            Some("erratum: the right side carries the factor 5/9"),
            30,
            vec![pair(
                "level 3",
                Dsl("90*(E2 - 3*E2(3))^2 + 6*E4 - 81*E4(3)"),
                Dsl("5*theta1p^8/(9*theta1p(3)^4)*(theta2(3)^4/theta2^8 - theta3(3)^4/theta3^8 + theta4(3)^4/theta4^8)"),
            )],
        ),
        rec(
            "ei_cos_free",
            lim,
            "Ei:eqn4b",
            None,
            Some("erratum: the q²ⁿ Lambert sum on the left carries the factor n and a minus sign; checked at u = 0, π/2, π/3, π/4, π/6"),
            60,
            vec![
                pair("u = 0", R(ramanujan_cos_lhs::<0, 1>), R(ramanujan_cos_rhs::<0, 1>)),
                pair("u = pi/2", R(ramanujan_cos_lhs::<1, 2>), R(ramanujan_cos_rhs::<1, 2>)),
                pair("u = pi/3", R(ramanujan_cos_lhs::<1, 3>), R(ramanujan_cos_rhs::<1, 3>)),
                pair("u = pi/4", R(ramanujan_cos_lhs::<1, 4>), R(ramanujan_cos_rhs::<1, 4>)),
                pair("u = pi/6", R(ramanujan_cos_lhs::<1, 6>), R(ramanujan_cos_rhs::<1, 6>)),
            ],
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosine_table() {
        assert_eq!(cos_fraction(0, 4), int(1));
        assert_eq!(cos_fraction(1, 4), int(0));
        assert_eq!(cos_fraction(2, 4), int(-1));
        assert_eq!(cos_fraction(4, 6), rat(-1, 2));
        assert_eq!(cos_fraction(-1, 6), rat(1, 2));
    }

    #[test]
    fn quarter_core_matches_theta1_product() {
        // θ1(π/4)/(√2 q^{1/8}) = Σ (−1)ⁿ sₙ q^{n(n+1)/2} = ∏(1−qⁿ)(1+q^{2n})
        let o = QExp::int(20);
        let product = &euler_product(o, QExp::ONE) * &qprod(o, QExp::int(2), QExp::int(2), 1, 1).unwrap();
        assert!(theta1_quarter_core(o).compare(&product).is_equal());
    }
}
