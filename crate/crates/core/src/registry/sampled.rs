//! Identities in `z` (and `τ`) checked at seeded complex sample points.

use std::f64::consts::PI;

use super::{master, Check, NumericCheck, Record, Sample};
use crate::numeric::{
    eisenstein, eta, half_lattice_distance, half_periods, qpow, sqrt_minus_i_tau, theta, theta1_prime0, wp, wp_prime,
    EisensteinKind, EvalConfig, EvalPoint, NumericError, C64, I,
};

pub(super) type Pairs = Result<Vec<(C64, C64)>, NumericError>;

pub(super) const ONE: C64 = C64::new(1.0, 0.0);
pub(super) const ZERO: C64 = C64::new(0.0, 0.0);

pub(super) fn rec(
    id: &'static str,
    section: &'static str,
    label: &'static str,
    anchor: Option<&'static str>,
    note: Option<&'static str>,
    eval: NumericCheck,
) -> Record {
    Record { id, section, paper_label: label, anchor, note, check: Check::Numeric { samples: 5, eval } }
}

pub(super) fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// `θ_j(z | τ)`.
pub(super) fn th(j: u8, z: C64, tau: C64, cfg: &EvalConfig) -> Result<C64, NumericError> {
    theta(j, EvalPoint::new(z, tau), cfg)
}

/// `θ_j(0 | τ)`.
pub(super) fn null(j: u8, tau: C64, cfg: &EvalConfig) -> Result<C64, NumericError> {
    th(j, ZERO, tau, cfg)
}

/// Reject points within the configured margin of the half-period lattice,
/// where the quotients below have poles or zeros.
pub(super) fn away(points: &[C64], tau: C64, cfg: &EvalConfig) -> Result<(), NumericError> {
    for &z in points {
        if half_lattice_distance(z, tau) < cfg.lattice_margin {
            return Err(NumericError::NearZero { what: "half-period lattice".into(), z, margin: cfg.lattice_margin });
        }
    }
    Ok(())
}

pub(super) fn lmn(tau: C64, cfg: &EvalConfig) -> Result<(C64, C64, C64), NumericError> {
    Ok((
        eisenstein(EisensteinKind::L, tau, cfg)?,
        eisenstein(EisensteinKind::M, tau, cfg)?,
        eisenstein(EisensteinKind::N, tau, cfg)?,
    ))
}

// ------------------------------------------------------------ Weierstrass

fn sigma_addition(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let (x, y, tau) = (s.z[0], s.z[1], s.tau);
    away(&[x, y, x + y, x - y], tau, cfg)?;
    let lhs = wp(EvalPoint::new(x, tau), cfg)? - wp(EvalPoint::new(y, tau), cfg)?;
    let rhs = -theta1_prime0(tau, cfg)?.powi(2) * th(1, x + y, tau, cfg)? * th(1, x - y, tau, cfg)?
        / (th(1, x, tau, cfg)?.powi(2) * th(1, y, tau, cfg)?.powi(2));
    Ok(vec![(lhs, rhs)])
}

fn wp_prime_theta(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let (x, tau) = (s.z[0], s.tau);
    away(&[x], tau, cfg)?;
    let rhs = -theta1_prime0(tau, cfg)?.powi(3) * th(1, x * 2.0, tau, cfg)? / th(1, x, tau, cfg)?.powi(4);
    Ok(vec![(wp_prime(EvalPoint::new(x, tau), cfg)?, rhs)])
}

fn wp_factored(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let (z, tau) = (s.z[0], s.tau);
    away(&[z], tau, cfg)?;
    let p = EvalPoint::new(z, tau);
    let e = half_periods(tau, cfg)?;
    let w = wp(p, cfg)?;
    Ok(vec![(wp_prime(p, cfg)?.powi(2), (w - e.e1) * (w - e.e2) * (w - e.e3) * 4.0)])
}

fn wp_cubic(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let (z, tau) = (s.z[0], s.tau);
    away(&[z], tau, cfg)?;
    let p = EvalPoint::new(z, tau);
    let (_, m, n) = lmn(tau, cfg)?;
    let w = wp(p, cfg)?;
    Ok(vec![(wp_prime(p, cfg)?.powi(2), w.powi(3) * 4.0 - m * w * (4.0 / 3.0) - n * (8.0 / 27.0))])
}

fn wp_laurent(s: &Sample, cfg: &EvalConfig) -> Pairs {
    // |z| between 0.05 and 0.1: the O(z⁸) remainder stays below 1e−11
    let z = C64::from_polar(0.05 + 0.05 * s.u[0], 2.0 * PI * s.u[1]);
    let tau = s.tau;
    // the default pole margin would reject every point this close to 0
    let near = EvalConfig { lattice_margin: 0.01, ..*cfg };
    let (_, m, n) = lmn(tau, cfg)?;
    let g2 = m * (4.0 / 3.0);
    let lhs = wp(EvalPoint::new(z, tau), &near)? - ONE / (z * z);
    let rhs = m * z.powi(2) / 15.0 + n * z.powi(4) * (2.0 / 189.0) + g2 * g2 * z.powi(6) / 1200.0;
    Ok(vec![(lhs, rhs)])
}

fn jacobi_abstruse(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let tau = s.tau;
    let u = [s.z[0], s.z[1], s.z[2], -(s.z[0] + s.z[1] + s.z[2])];
    let prod = |j: u8| -> Result<C64, NumericError> { u.iter().try_fold(ONE, |acc, &x| Ok(acc * th(j, x, tau, cfg)?)) };
    Ok(vec![(prod(2)? + prod(4)?, prod(1)? + prod(3)?)])
}

// --------------------------------------------------- multiplication formulas

fn multiplication_z(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let (z, tau) = (s.z[0], s.tau);
    let mut out = Vec::new();
    for n in [3i32, 5, 7] {
        let nf = f64::from(n);
        let ratio = eta(tau, cfg)?.powi(n) / eta(tau * nf, cfg)?;
        for j in 1..=4u8 {
            let mut lhs = th(j, z, tau, cfg)?;
            for k in 1..=(n - 1) / 2 {
                let a = c(f64::from(k) * PI / nf);
                lhs *= th(j, a + z, tau, cfg)? * th(j, a - z, tau, cfg)?;
            }
            out.push((lhs, ratio * th(j, z * nf, tau * nf, cfg)?));
        }
    }
    Ok(out)
}

fn multiplication_tau(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let (z, tau) = (s.z[0], s.tau);
    let mut out = Vec::new();
    for n in [3i32, 5, 7] {
        let nf = f64::from(n);
        let pre = qpow(tau, (1.0 - nf * nf) / (24.0 * nf)) * eta(tau, cfg)?.powi(n) / eta(tau / nf, cfg)?;
        for j in 1..=4u8 {
            let mut lhs = th(j, z, tau, cfg)?;
            for k in 1..=(n - 1) / 2 {
                let a = PI * tau * f64::from(k) / nf;
                lhs *= th(j, z + a, tau, cfg)? * th(j, z - a, tau, cfg)?;
            }
            out.push((lhs, pre * th(j, z, tau / nf, cfg)?));
        }
    }
    Ok(out)
}

// ------------------------------------------------- imaginary transformation

fn imaginary_all(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let (z, tau) = (s.z[0], s.tau);
    let t = -ONE / tau;
    let root = sqrt_minus_i_tau(tau);
    let gauss = (I * z * z / (PI * tau)).exp();
    let w = z / tau;
    let mut out = vec![
        (th(1, w, t, cfg)?, -I * root * gauss * th(1, z, tau, cfg)?),
        (th(2, w, t, cfg)?, root * gauss * th(4, z, tau, cfg)?),
        (th(4, w, t, cfg)?, root * gauss * th(2, z, tau, cfg)?),
        (th(3, w, t, cfg)?, root * gauss * th(3, z, tau, cfg)?),
        (theta1_prime0(t, cfg)?, -I * tau * root * theta1_prime0(tau, cfg)?),
        (null(2, t, cfg)?, root * null(4, tau, cfg)?),
        (null(4, t, cfg)?, root * null(2, tau, cfg)?),
        (null(3, t, cfg)?, root * null(3, tau, cfg)?),
        (eta(t, cfg)?, root * eta(tau, cfg)?),
    ];
    let l = |x| eisenstein(EisensteinKind::L, x, cfg);
    out.push((l(t)?, -tau * I * 6.0 / PI + tau * tau * l(tau)?));
    Ok(out)
}

pub(super) fn records() -> Vec<Record> {
    let pre = "preliminaries";
    let mut master_degree8 = rec(
        "master_degree8",
        pre,
        "jabel:eqn23",
        None,
        Some("f(z) = ∏ θ1(z+sₖ)θ1(z−sₖ) over four sampled shifts"),
        master::degree8_check,
    );
    master_degree8.check = Check::Numeric { samples: 20, eval: master::degree8_check };
    let mut master_limit = rec(
        "master_limit",
        pre,
        "jabel:eqn24",
        None,
        Some("f(z) = ∏ θ1(z+sₖ)θ1(z−sₖ); (log f)⁽ᵏ⁾(0) = 2Σ (log θ1)⁽ᵏ⁾(sₖ) for even k"),
        master::limit_check,
    );
    master_limit.check = Check::Numeric { samples: 20, eval: master::limit_check };
    vec![
        master_degree8,
        master_limit,
        rec("sigma_addition", pre, "jabel:eqn25", None, None, sigma_addition),
        rec("wp_prime_theta", pre, "jabel:eqn26", Some("equivalent to the Weierstrass identity"), None, wp_prime_theta),
        rec("wp_factored", pre, "jabel:eqn28", Some("one of the most fundamental properties"), None, wp_factored),
        rec("wp_cubic", pre, "jabel:eqn30", None, None, wp_cubic),
        rec(
            "wp_laurent_corrected",
            pre,
            "jabel:eqn29",
            None,
            Some(
                "erratum: the coefficients are M/15 and 2N/189; checked with the z⁶ term g₂²/1200 at 0.05 ≤ |z| ≤ 0.1",
            ),
            wp_laurent,
        ),
        rec(
            "jacobi_abstruse",
            pre,
            "jabel:eqn31",
            Some("integral multiple of $\\pi$"),
            Some("holds under u₁ + u₂ + u₃ + u₄ = 0; the fourth argument is determined by the other three"),
            jacobi_abstruse,
        ),
        rec("multiplication_z", pre, "jabel:eqn16", None, Some("n = 3, 5, 7 and j = 1..4"), multiplication_z),
        rec("multiplication_tau", pre, "jabel:eqn17", None, Some("n = 3, 5, 7 and j = 1..4"), multiplication_tau),
        rec("imaginary_all", pre, "jabel:eqn19/20/21/22", None, None, imaginary_all),
    ]
}
