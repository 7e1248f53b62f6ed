//! Double-precision complex evaluation at a point `(z, τ)` with `Im τ > 0`.
//!
//! Theta functions are evaluated from their defining sums after moving `z`
//! into the strip `|Im z| ≤ π Im τ / 4`: whole periods are removed with the
//! quasi-periodicity factors and a remaining half period `πτ/2` swaps
//! `θ1 ↔ θ4`, `θ2 ↔ θ3`. Log-derivatives follow the same reduction with
//! their additive constants.

use std::f64::consts::PI;

use num_complex::Complex64;
use thiserror::Error;

use crate::builders::{Character, Denominator, LambertSpec};
use crate::series::{Laurent, LaurentSeries, QSeries, Quadratic, Series};

pub type C64 = Complex64;

pub const I: C64 = C64::new(0.0, 1.0);

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericError {
    #[error("τ = {0} is not in the upper half-plane")]
    NotUpperHalfPlane(C64),
    #[error("|Im z| = {im} exceeds the convergence margin {limit} of the θ{j} sum")]
    ConvergenceMargin { j: u8, im: f64, limit: f64 },
    #[error("{what} did not reach tolerance within {cap} terms")]
    TermCap { what: &'static str, cap: usize },
    #[error("z = {z} lies within {margin} of a zero of {what}")]
    NearZero { what: String, z: C64, margin: f64 },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("{0}")]
    Domain(String),
}

/// A point `(z, τ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalPoint {
    pub z: C64,
    pub tau: C64,
}

impl EvalPoint {
    pub fn new(z: C64, tau: C64) -> Self {
        EvalPoint { z, tau }
    }
}

/// Convergence and comparison policy.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalConfig {
    pub term_cap: usize,
    pub term_tolerance: f64,
    pub comparison_tolerance: f64,
    pub lattice_margin: f64,
    pub seed: u64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { term_cap: 200, term_tolerance: 1e-18, comparison_tolerance: 1e-9, lattice_margin: 0.15, seed: 42 }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<(), NumericError> {
        if self.term_cap < 16 {
            return Err(NumericError::InvalidConfig(format!("term_cap {} < 16", self.term_cap)));
        }
        let positive = [self.term_tolerance, self.comparison_tolerance, self.lattice_margin];
        if positive.iter().any(|t| t.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater)) {
            return Err(NumericError::InvalidConfig("tolerances and margin must be positive".into()));
        }
        Ok(())
    }
}

/// Values of `℘` at the half periods `π/2`, `πτ/2`, `(π+πτ)/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HalfPeriodValues {
    pub e1: C64,
    pub e2: C64,
    pub e3: C64,
}

fn check_tau(tau: C64) -> Result<(), NumericError> {
    if tau.im > 0.0 && tau.is_finite() {
        Ok(())
    } else {
        Err(NumericError::NotUpperHalfPlane(tau))
    }
}

/// `q^r = exp(2πiτr)`, with no root extraction.
pub fn qpow(tau: C64, r: f64) -> C64 {
    (2.0 * PI * I * tau * r).exp()
}

/// Sum `term(n)` for `n = start, start+1, …` until eight consecutive terms
/// fall below the relative tolerance (characters vanish on residue classes,
/// so single small terms prove nothing).
pub fn sum_series(
    cfg: &EvalConfig,
    what: &'static str,
    start: i64,
    mut term: impl FnMut(i64) -> C64,
) -> Result<C64, NumericError> {
    let mut sum = C64::new(0.0, 0.0);
    let mut quiet = 0;
    let mut scale: f64 = 0.0;
    for k in 0..cfg.term_cap as i64 {
        let t = term(start + k);
        sum += t;
        scale = scale.max(t.norm());
        if t.norm() <= cfg.term_tolerance * sum.norm().max(scale * 1e-300) || t.norm() == 0.0 && scale == 0.0 {
            quiet += 1;
            if quiet >= 8 {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(NumericError::TermCap { what, cap: cfg.term_cap })
}

/// `∏_{n≥start} (1 + factor(n))`, stopping once `|factor(n)|` is negligible.
fn product_series(
    cfg: &EvalConfig,
    what: &'static str,
    start: i64,
    mut factor: impl FnMut(i64) -> C64,
) -> Result<C64, NumericError> {
    let mut prod = C64::new(1.0, 0.0);
    let mut quiet = 0;
    for k in 0..cfg.term_cap as i64 {
        let f = factor(start + k);
        prod *= C64::new(1.0, 0.0) + f;
        if f.norm() <= cfg.term_tolerance {
            quiet += 1;
            if quiet >= 8 {
                return Ok(prod);
            }
        } else {
            quiet = 0;
        }
    }
    Err(NumericError::TermCap { what, cap: cfg.term_cap })
}

/// Quasi-period data: `θ_j(z + π) = s_j θ_j(z)` and `θ_j(z + πτ) = ε_j e^{-i(2z+πτ)} θ_j(z)`.
fn period_signs(j: u8) -> (f64, f64) {
    match j {
        1 => (-1.0, -1.0),
        2 => (-1.0, 1.0),
        3 => (1.0, 1.0),
        _ => (1.0, -1.0),
    }
}

/// Partner under `z ↦ z + πτ/2`, with the prefactor being `c·q^{-1/8}e^{-iz}`.
fn half_shift_partner(j: u8) -> (u8, C64) {
    match j {
        1 => (4, I),
        4 => (1, I),
        2 => (3, C64::new(1.0, 0.0)),
        _ => (2, C64::new(1.0, 0.0)),
    }
}

/// `z = w + k·πτ + h·πτ/2 + m·π` with `|Im w| ≤ π Im τ / 4` and `|Re w| ≤ π/2`.
struct Reduction {
    k: i64,
    h: bool,
    m: i64,
    /// `z - kπτ`
    v: C64,
    /// `v - hπτ/2`, before removing the `mπ`
    w: C64,
    /// fully reduced point
    w0: C64,
}

fn reduce(z: C64, tau: C64) -> Reduction {
    let k2 = (z.im / (PI * tau.im / 2.0)).round() as i64;
    let k = k2.div_euclid(2);
    let h = k2.rem_euclid(2) == 1;
    let v = z - PI * tau * k as f64;
    let w = if h { v - PI * tau / 2.0 } else { v };
    let m = (w.re / PI).round() as i64;
    let w0 = w - PI * m as f64;
    Reduction { k, h, m, v, w, w0 }
}

/// The defining sum of `θ_j` at a point already inside the convergence strip.
pub fn theta_series(j: u8, z: C64, tau: C64, cfg: &EvalConfig) -> Result<C64, NumericError> {
    check_tau(tau)?;
    let limit = 0.45 * PI * tau.im;
    if z.im.abs() >= limit {
        return Err(NumericError::ConvergenceMargin { j, im: z.im.abs(), limit });
    }
    match j {
        1 | 2 => {
            let s = sum_series(cfg, "theta sum", 0, |n| {
                let k = (2 * n + 1) as f64;
                let q = qpow(tau, k * k / 8.0);
                if j == 1 {
                    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                    q * (z * k).sin() * sign
                } else {
                    q * (z * k).cos()
                }
            })?;
            Ok(s * 2.0)
        }
        3 | 4 => {
            let s = sum_series(cfg, "theta sum", 1, |n| {
                let sign = if j == 4 && n % 2 == 1 { -1.0 } else { 1.0 };
                qpow(tau, (n * n) as f64 / 2.0) * (z * (2 * n) as f64).cos() * sign
            })?;
            Ok(C64::new(1.0, 0.0) + s * 2.0)
        }
        _ => Err(NumericError::Domain(format!("no theta function θ{j}"))),
    }
}

/// `θ_j(z|τ)` for `j ∈ {1,2,3,4}` at any point.
pub fn theta(j: u8, p: EvalPoint, cfg: &EvalConfig) -> Result<C64, NumericError> {
    check_tau(p.tau)?;
    if !(1..=4).contains(&j) {
        return Err(NumericError::Domain(format!("no theta function θ{j}")));
    }
    let tau = p.tau;
    let r = reduce(p.z, tau);
    let (_, eps) = period_signs(j);
    let k = r.k as f64;
    let mut factor =
        C64::new(eps.powi(r.k.rem_euclid(2) as i32), 0.0) * (-I * (r.v * (2.0 * k) + PI * tau * k * k)).exp();
    let mut jj = j;
    if r.h {
        let (partner, c) = half_shift_partner(j);
        factor *= c * qpow(tau, -1.0 / 8.0) * (-I * r.w).exp();
        jj = partner;
    }
    let (s, _) = period_signs(jj);
    if r.m.rem_euclid(2) == 1 {
        factor *= s;
    }
    Ok(factor * theta_series(jj, r.w0, tau, cfg)?)
}

/// `θ_j(z | c·τ)` for a real positive scale `c`.
pub fn theta_at(j: u8, z: C64, tau: C64, cfg: &EvalConfig) -> Result<C64, NumericError> {
    theta(j, EvalPoint::new(z, tau), cfg)
}

/// `η(τ) = e^{πiτ/12} ∏ (1 - q^n)`.
pub fn eta(tau: C64, cfg: &EvalConfig) -> Result<C64, NumericError> {
    check_tau(tau)?;
    let q = qpow(tau, 1.0);
    let mut qn = C64::new(1.0, 0.0);
    let prod = product_series(cfg, "eta product", 1, |_| {
        qn *= q;
        -qn
    })?;
    Ok(qpow(tau, 1.0 / 24.0) * prod)
}

/// `θ1'(0|τ) = 2η³(τ)`.
pub fn theta1_prime0(tau: C64, cfg: &EvalConfig) -> Result<C64, NumericError> {
    Ok(eta(tau, cfg)?.powi(3) * 2.0)
}

/// Points `offset + Λ` where `θ_j` vanishes, `Λ = πℤ + πτℤ`.
fn zero_offset(j: u8, tau: C64) -> C64 {
    match j {
        1 => C64::new(0.0, 0.0),
        2 => C64::new(PI / 2.0, 0.0),
        3 => (PI + PI * tau) / 2.0,
        _ => PI * tau / 2.0,
    }
}

/// Distance from `z` to the translate `offset + Λ`.
pub fn lattice_distance(z: C64, offset: C64, tau: C64) -> f64 {
    let d = z - offset;
    let b = d.im / (PI * tau.im);
    let a = (d.re - b * PI * tau.re) / PI;
    let (a0, b0) = (a.floor() as i64, b.floor() as i64);
    let mut best = f64::INFINITY;
    for da in 0..=1 {
        for db in 0..=1 {
            let p = PI * (a0 + da) as f64 + PI * tau * (b0 + db) as f64;
            best = best.min((d - p).norm());
        }
    }
    best
}

/// Distance from `z` to the half-lattice `Λ/2`.
pub fn half_lattice_distance(z: C64, tau: C64) -> f64 {
    (1..=4u8).map(|j| lattice_distance(z, zero_offset(j, tau), tau)).fold(f64::INFINITY, f64::min)
}

fn guard_zero(j: u8, p: EvalPoint, cfg: &EvalConfig) -> Result<(), NumericError> {
    if lattice_distance(p.z, zero_offset(j, p.tau), p.tau) < cfg.lattice_margin {
        return Err(NumericError::NearZero { what: format!("θ{j}"), z: p.z, margin: cfg.lattice_margin });
    }
    Ok(())
}

/// `d^k/dz^k cot z` for `k = 0..=3`.
fn cot_derivative(z: C64, k: u8) -> C64 {
    let cot = z.cos() / z.sin();
    let csc2 = C64::new(1.0, 0.0) / (z.sin() * z.sin());
    match k {
        0 => cot,
        1 => -csc2,
        2 => csc2 * cot * 2.0,
        _ => -(csc2 * cot * cot * 4.0 + csc2 * csc2 * 2.0),
    }
}

/// `d^k/dz^k sin(2nz) = (2n)^k sin(2nz + kπ/2)`.
fn sin_derivative(n: i64, z: C64, k: u8) -> C64 {
    let w = (2 * n) as f64;
    (z * w + PI / 2.0 * f64::from(k)).sin() * w.powi(i32::from(k))
}

/// Trigonometric expansion of `(log θ_j)^{(order)}` at a reduced point.
fn logd_series(j: u8, order: u8, z: C64, tau: C64, cfg: &EvalConfig) -> Result<C64, NumericError> {
    let d = order - 1;
    let principal = match j {
        1 => cot_derivative(z, d),
        // -tan z = cot(z + π/2)
        2 => cot_derivative(z + PI / 2.0, d),
        _ => C64::new(0.0, 0.0),
    };
    let tail = sum_series(cfg, "log-derivative sum", 1, |n| {
        let qn = qpow(tau, n as f64);
        let coeff = match j {
            1 => qn / (C64::new(1.0, 0.0) - qn),
            2 => qn * if n % 2 == 0 { 1.0 } else { -1.0 } / (C64::new(1.0, 0.0) - qn),
            3 => qpow(tau, n as f64 / 2.0) * if n % 2 == 0 { 1.0 } else { -1.0 } / (C64::new(1.0, 0.0) - qn),
            _ => qpow(tau, n as f64 / 2.0) / (C64::new(1.0, 0.0) - qn),
        };
        coeff * sin_derivative(n, z, d)
    })?;
    Ok(principal + tail * 4.0)
}

/// `(log θ_j)^{(order)}(z|τ)` for `order ∈ {1,2,3,4}`.
pub fn logd_theta(j: u8, order: u8, p: EvalPoint, cfg: &EvalConfig) -> Result<C64, NumericError> {
    check_tau(p.tau)?;
    if !(1..=4).contains(&order) || !(1..=4).contains(&j) {
        return Err(NumericError::Domain(format!("log-derivative order {order} of θ{j}")));
    }
    guard_zero(j, p, cfg)?;
    let r = reduce(p.z, p.tau);
    let mut extra = C64::new(0.0, 0.0);
    if order == 1 {
        // (log θ)'(v + kπτ) = (log θ)'(v) - 2ik ; (log θ)'(w + πτ/2) = (log θ*)'(w) - i
        extra -= I * (2 * r.k) as f64;
        if r.h {
            extra -= I;
        }
    }
    let jj = if r.h { half_shift_partner(j).0 } else { j };
    Ok(extra + logd_series(jj, order, r.w0, p.tau, cfg)?)
}

/// Eisenstein series selector for numeric evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EisensteinKind {
    L,
    M,
    N,
}

/// `L`, `M` or `N` at `τ` from their Lambert sums.
pub fn eisenstein(which: EisensteinKind, tau: C64, cfg: &EvalConfig) -> Result<C64, NumericError> {
    check_tau(tau)?;
    let (s, c) = match which {
        EisensteinKind::L => (1, -24.0),
        EisensteinKind::M => (3, 240.0),
        EisensteinKind::N => (5, -504.0),
    };
    Ok(C64::new(1.0, 0.0) + lambert(&LambertSpec::new(Character::Trivial).weight(s), tau, cfg)? * c)
}

/// Numeric value of the same Lambert sum that [`crate::builders::lambert`] expands.
pub fn lambert(spec: &LambertSpec, tau: C64, cfg: &EvalConfig) -> Result<C64, NumericError> {
    check_tau(tau)?;
    let c = spec.numerator.to_f64();
    let d = spec.step as f64;
    sum_series(cfg, "Lambert sum", 1, |n| {
        let chi = spec.character.value(n) as f64;
        if chi == 0.0 {
            return C64::new(0.0, 0.0);
        }
        let odd = n % 2 != 0;
        let mut num = qpow(tau, c * n as f64) * chi * (n as f64).powi(spec.weight as i32);
        if spec.alternating && odd {
            num = -num;
        }
        let qd = qpow(tau, d * n as f64);
        let den = match spec.denominator {
            Denominator::Minus => C64::new(1.0, 0.0) - qd,
            Denominator::Plus => C64::new(1.0, 0.0) + qd,
            Denominator::MinusAlternating => C64::new(1.0, 0.0) - if odd { -qd } else { qd },
            Denominator::PlusAlternating => C64::new(1.0, 0.0) + if odd { -qd } else { qd },
        };
        num / den
    })
}

/// `℘(z|τ) = -(log θ1)''(z) - L/3`.
pub fn wp(p: EvalPoint, cfg: &EvalConfig) -> Result<C64, NumericError> {
    Ok(-logd_theta(1, 2, p, cfg)? - eisenstein(EisensteinKind::L, p.tau, cfg)? / 3.0)
}

/// `℘'(z|τ) = -(log θ1)'''(z)`.
pub fn wp_prime(p: EvalPoint, cfg: &EvalConfig) -> Result<C64, NumericError> {
    Ok(-logd_theta(1, 3, p, cfg)?)
}

pub fn half_periods(tau: C64, cfg: &EvalConfig) -> Result<HalfPeriodValues, NumericError> {
    let at = |z: C64| wp(EvalPoint::new(z, tau), cfg);
    Ok(HalfPeriodValues { e1: at(C64::new(PI / 2.0, 0.0))?, e2: at(PI * tau / 2.0)?, e3: at((PI + PI * tau) / 2.0)? })
}

/// Rogers–Ramanujan continued fraction from its product.
pub fn rrcf(tau: C64, cfg: &EvalConfig) -> Result<C64, NumericError> {
    check_tau(tau)?;
    let one = C64::new(1.0, 0.0);
    let prod = product_series(cfg, "continued fraction product", 1, |n| {
        let f = |k: i64| one - qpow(tau, (5 * n - k) as f64);
        f(1) * f(4) / (f(2) * f(3)) - one
    })?;
    Ok(qpow(tau, 0.2) * prod)
}

/// Radical values of `R` at `τ = i`, `√5·i` and `i/√5`, the three points
/// with classical closed forms; `None` elsewhere.
pub fn rrcf_closed_form(tau: C64) -> Option<f64> {
    let r5 = 5f64.sqrt();
    let golden = (1.0 + r5) / 2.0;
    // fifth root of 5^{3/4}((√5 − 1)/2)^{5/2} − 1
    let x = (5f64.powf(0.75) * ((r5 - 1.0) / 2.0).powf(2.5) - 1.0).powf(0.2);
    let at = |t: f64| (tau - C64::new(0.0, t)).norm() < 1e-12;
    if at(1.0) {
        Some(((5.0 + r5) / 2.0).sqrt() - golden)
    } else if at(r5) {
        Some(r5 / (1.0 + x) - golden)
    } else if at(1.0 / r5) {
        Some(golden * x)
    } else {
        None
    }
}

/// `a(τ) = 1 + 6Σ (n|3) q^n / (1 - q^n)`.
pub fn glaisher_a(tau: C64, cfg: &EvalConfig) -> Result<C64, NumericError> {
    Ok(C64::new(1.0, 0.0) + lambert(&LambertSpec::new(Character::Bottom(3)), tau, cfg)? * 6.0)
}

/// Principal `√(-iτ)`, equal to `1` at `τ = i`.
pub fn sqrt_minus_i_tau(tau: C64) -> C64 {
    (-I * tau).sqrt()
}

/// Evaluate a rational series at the nome of `τ`.
pub fn eval_series(s: &QSeries, tau: C64) -> C64 {
    s.terms().map(|(e, c)| qpow(tau, e.to_f64()) * num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN)).sum()
}

/// Evaluate a `ℚ(√D)` series at the nome of `τ`.
pub fn eval_quadratic_series<const D: i64>(s: &Series<Quadratic<D>>, tau: C64) -> C64 {
    s.terms().map(|(e, c)| qpow(tau, e.to_f64()) * c.to_f64()).sum()
}

/// Evaluate a Laurent series at `u = e^{iz}` and the nome of `τ`.
pub fn eval_laurent_series(s: &LaurentSeries, z: C64, tau: C64) -> C64 {
    let laurent = |c: &Laurent| -> C64 {
        c.terms().map(|(k, x)| (I * z * k as f64).exp() * num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)).sum()
    };
    s.terms().map(|(e, c)| qpow(tau, e.to_f64()) * laurent(c)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn qpow_values() {
        assert_eq!(qpow(I, 0.0), c(1.0, 0.0));
        assert!((qpow(I, 0.5) - c((-PI).exp(), 0.0)).norm() < 1e-16);
        let tau = c(0.3, 1.1);
        assert!((qpow(tau, 0.3) * qpow(tau, 0.45) - qpow(tau, 0.75)).norm() < 1e-15);
    }

    #[test]
    fn theta_values() {
        let p = EvalPoint::new(c(0.0, 0.0), c(0.1, 1.0));
        assert_eq!(theta(1, p, &cfg()).unwrap(), c(0.0, 0.0));
        let t3 = theta(3, EvalPoint::new(c(0.0, 0.0), c(0.0, 2.0)), &cfg()).unwrap();
        assert!((t3.re - 1.003_734_9).abs() < 1e-7);
        assert!(theta(5, p, &cfg()).is_err());
        assert!(theta_series(1, c(0.0, 3.0), c(0.0, 1.0), &cfg()).is_err());
    }

    #[test]
    fn reduction_agrees_with_raw_sums() {
        let tau = c(0.2, 1.3);
        for z in [c(0.3, 0.7), c(-2.1, -1.2), c(4.0, 0.1)] {
            for j in 1..=4u8 {
                let reduced = theta(j, EvalPoint::new(z, tau), &cfg()).unwrap();
                let raw = theta_series(j, z, tau, &cfg()).unwrap();
                assert!((reduced - raw).norm() < 1e-12 * (1.0 + raw.norm()), "θ{j}({z})");
            }
        }
    }

    #[test]
    fn eta_at_i() {
        let e = eta(I, &cfg()).unwrap();
        assert!((e.re - 0.768_225_4).abs() < 1e-7);
        let tau = c(0.0, 1.3);
        let lhs = eta(-1.0 / tau, &cfg()).unwrap();
        assert!((lhs - sqrt_minus_i_tau(tau) * eta(tau, &cfg()).unwrap()).norm() < 1e-12);
    }

    #[test]
    fn continued_fraction_at_i() {
        let r = rrcf(I, &cfg()).unwrap();
        let s5 = 5f64.sqrt();
        let closed = ((5.0 + s5) / 2.0).sqrt() - (1.0 + s5) / 2.0;
        assert!((r.re - closed).abs() < 1e-12);
        assert!((r.re - 0.284_079_043_8).abs() < 1e-10);
    }

    #[test]
    fn half_period_values_sum_to_zero() {
        let h = half_periods(c(0.15, 1.2), &cfg()).unwrap();
        assert!((h.e1 + h.e2 + h.e3).norm() < 1e-9);
    }

    #[test]
    fn near_zero_is_rejected() {
        let p = EvalPoint::new(c(0.01, 0.0), I);
        assert!(matches!(logd_theta(1, 1, p, &cfg()), Err(NumericError::NearZero { .. })));
        assert!(logd_theta(4, 1, p, &cfg()).is_ok());
    }

    #[test]
    fn config_validation() {
        assert!(cfg().validate().is_ok());
        assert!(EvalConfig { term_cap: 4, ..cfg() }.validate().is_err());
        assert!(EvalConfig { lattice_margin: 0.0, ..cfg() }.validate().is_err());
    }
}
