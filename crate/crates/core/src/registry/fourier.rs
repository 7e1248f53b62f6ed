//! Lambert-type Fourier expansions in `z` against theta quotients.

use std::f64::consts::PI;

use super::sampled::{away, c, null, rec, th, Pairs, ONE, ZERO};
use super::{Record, Sample};
use crate::arith::{gauss_sum, kronecker};
use crate::numeric::{
    eisenstein, eta, glaisher_a, logd_theta, qpow, sum_series, theta1_prime0, wp, wp_prime, EisensteinKind, EvalConfig,
    EvalPoint, NumericError, C64, I,
};

type Value = Result<C64, NumericError>;

/// `Σ_{n≥1} term(n)`.
fn fsum(cfg: &EvalConfig, mut term: impl FnMut(f64) -> C64) -> Value {
    sum_series(cfg, "Fourier series", 1, |n| term(n as f64))
}

/// `Σ_{n≥0} term(n)`.
fn fsum0(cfg: &EvalConfig, mut term: impl FnMut(f64) -> C64) -> Value {
    sum_series(cfg, "Fourier series", 0, |n| term(n as f64))
}

fn kr(a: f64, n: f64) -> f64 {
    f64::from(kronecker(a as i64, n as i64).unwrap_or(0))
}

fn ld(j: u8, k: u8, z: C64, tau: C64, cfg: &EvalConfig) -> Value {
    logd_theta(j, k, EvalPoint::new(z, tau), cfg)
}

/// `∏ (1−qⁿ)/(1+qⁿ) = η²(τ)/η(2τ)`.
fn ratio_product(tau: C64, cfg: &EvalConfig) -> Value {
    Ok(eta(tau, cfg)?.powi(2) / eta(tau * 2.0, cfg)?)
}

fn cot(z: C64) -> C64 {
    z.cos() / z.sin()
}

// ------------------------------------------------------------- degree three

fn deg3_family(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let (x, y, u, tau) = (s.z[0], s.z[1], s.z[2], s.tau);
    let t = |j: u8, z: C64| th(j, z, tau, cfg);
    let t3 = |j: u8, z: C64| th(j, z, tau * 3.0, cfg);
    let t2 = |j: u8, z: C64| th(j, z, tau * 2.0, cfg);
    let diff = |n: f64| (x * 2.0 * n).cos() - (y * 2.0 * n).cos();
    let q = |r: f64| qpow(tau, r);
    let (e1, e3) = (eta(tau, cfg)?, eta(tau * 3.0, cfg)?);
    let cross = t(1, x + y)? * t(1, x - y)?;
    let four = t(1, x)? * t(1, y)? * cross;
    let mut out = Vec::new();

    let lhs = x.sin() / (x * 3.0).sin() - y.sin() / (y * 3.0).sin()
        + fsum(cfg, |n| q(n) / (ONE - q(n)) * kr(n, 3.0) * diff(n))? * 2.0;
    out.push((lhs, e3.powi(3) * four / (e1.powi(3) * t3(1, x * 3.0)? * t3(1, y * 3.0)?)));

    let lhs = fsum(cfg, |n| q(n / 2.0) / (ONE - q(n)) * diff(n) * (u * 2.0 * n).sin())?;
    let rhs = -e1.powi(3) * t(1, u * 2.0)? * cross / (t(4, x + u)? * t(4, x - u)? * t(4, y + u)? * t(4, y - u)? * 4.0);
    out.push((lhs, rhs));

    // printed without the 1/2 on the right
    let lhs = fsum(cfg, |n| q(n / 2.0) / (ONE - q(n)) * kr(-4.0, n) * diff(n))? * 4.0;
    let rhs = -null(2, tau, cfg)?.powi(2) * cross / (t2(3, x * 2.0)? * t2(3, y * 2.0)? * 2.0);
    out.push((lhs, rhs));

    let lhs = fsum(cfg, |n| q(n) / (ONE + q(n) + q(2.0 * n)) * diff(n))?;
    let rhs =
        -e1.powi(3) * t3(1, x)? * t3(1, y)? * t3(1, x + y)? * t3(1, x - y)? / (e3.powi(3) * t(1, x)? * t(1, y)? * 2.0);
    out.push((lhs, rhs));

    let lhs = ONE / (x * 2.0).cos() - ONE / (y * 2.0).cos()
        + fsum(cfg, |n| q(n) / (ONE - q(n)) * kr(-4.0, n) * diff(n))? * 4.0;
    let rhs = null(2, tau, cfg)?.powi(2) * cross / (t2(2, x * 2.0)? * t2(2, y * 2.0)? * 2.0);
    out.push((lhs, rhs));

    let third = c(PI / 3.0);
    let cubes = |w: C64| -> Value { Ok(t(1, w + third)?.powi(3) + t(1, w - third)?.powi(3)) };
    let lhs = cubes(x)? * t3(1, y * 3.0)? - cubes(y)? * t3(1, x * 3.0)?;
    out.push((lhs, e3.powi(3) / e1.powi(3) * four * 3.0));

    let lhs = cubes(x)? - t(1, x)?.powi(3);
    out.push((lhs, glaisher_a(tau, cfg)? * t3(1, x * 3.0)? * 3.0));

    let lhs = e1.powi(2) * (t3(1, y * 3.0)? * th(1, x, tau / 3.0, cfg)? - t3(1, x * 3.0)? * th(1, y, tau / 3.0, cfg)?);
    out.push((lhs, four));
    Ok(out)
}

// --------------------------------------------------------- characters mod m

fn kiepert_dirichlet(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let tau = s.tau;
    let euler = eta(tau, cfg)? * qpow(tau, -1.0 / 24.0);
    let mut out = Vec::new();
    for m in [5.0, 13.0] {
        let mut lhs = ZERO;
        for k in 1..=((m as i64 - 1) / 2) {
            let k = k as f64;
            lhs += th(1, c(4.0 * k * PI / m), tau, cfg)? / th(1, c(2.0 * k * PI / m), tau, cfg)? * kr(k, m);
        }
        let sign = |n: f64| if n as i64 % 2 == 0 { 1.0 } else { -1.0 };
        let plus = fsum0(cfg, |n| qpow(tau, n * (3.0 * n + 1.0) / 2.0) * sign(n) * kr(6.0 * n + 1.0, m))?;
        let minus = fsum(cfg, |n| qpow(tau, n * (3.0 * n - 1.0) / 2.0) * sign(n) * kr(1.0 - 6.0 * n, m))?;
        out.push((euler * lhs, (plus + minus) * m.sqrt()));
    }
    Ok(out)
}

fn gauss_sums(_: &Sample, _: &EvalConfig) -> Pairs {
    let mut out = Vec::new();
    for m in [5i64, 13, 17] {
        let root = (m as f64).sqrt();
        let unit = match ((m - 1) * (m - 1) / 4) % 4 {
            0 => ONE,
            1 => I,
            2 => -ONE,
            _ => -I,
        };
        for h in 1..=6i64 {
            let chi = kr(h as f64, m as f64);
            out.push((gauss_sum(m, h), unit * chi * root));
            let half: f64 =
                (1..=(m - 1) / 2).map(|k| kr(k as f64, m as f64) * (2.0 * PI * (k * h) as f64 / m as f64).cos()).sum();
            out.push((c(half), c(chi * root / 2.0)));
        }
    }
    Ok(out)
}

fn rr_deg5(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let (z, tau) = (s.z[0], s.tau);
    let q = |r: f64| qpow(tau, r);
    let (e1, e5) = (eta(tau, cfg)?, eta(tau * 5.0, cfg)?);
    let sine = |n: f64| (z * 2.0 * n).sin();
    let lhs = z.sin() * (z * 2.0).sin() / (z * 5.0).sin() - fsum(cfg, |n| q(n) / (ONE - q(n)) * kr(n, 5.0) * sine(n))?;
    let rhs =
        e5.powi(2) * th(1, z, tau, cfg)? * th(1, z * 2.0, tau, cfg)? / (e1 * th(1, z * 5.0, tau * 5.0, cfg)? * 2.0);
    let lhs2 = fsum(cfg, |n| (q(n) - q(2.0 * n) - q(3.0 * n) + q(4.0 * n)) / (ONE - q(5.0 * n)) * sine(n))?;
    let rhs2 =
        e1.powi(2) * th(1, z, tau * 5.0, cfg)? * th(1, z * 2.0, tau * 5.0, cfg)? / (e5 * th(1, z, tau, cfg)? * 2.0);
    Ok(vec![(lhs, rhs), (lhs2, rhs2)])
}

fn ramcar_z(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let (z, tau) = (s.z[0], s.tau);
    away(&[z], tau, cfg)?;
    let q = |r: f64| qpow(tau, r);
    let sine = |n: f64| (z * 2.0 * n).sin();
    let t1 = |w: C64, t: C64| th(1, w, t, cfg);
    let lhs = fsum(cfg, |n| q(n) * n / (ONE + q(n) + q(2.0 * n)) * sine(n))?;
    let rhs =
        eta(tau, cfg)?.powi(3) * t1(z * 2.0, tau * 3.0)? * t1(z, tau * 3.0)?.powi(2) / (t1(z, tau)?.powi(2) * 2.0);
    let lhs2 = z.sin().powi(2) * (z * 2.0).sin() / (z * 3.0).sin().powi(2)
        - fsum(cfg, |n| q(n) * n / (ONE - q(n)) * kr(n, 3.0) * sine(n))?;
    let rhs2 = eta(tau * 3.0, cfg)?.powi(3) * t1(z, tau)?.powi(2) * t1(z * 2.0, tau)?
        / (t1(z * 3.0, tau * 3.0)?.powi(2) * 2.0);
    Ok(vec![(lhs, rhs), (lhs2, rhs2)])
}

fn wp_addition(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let (x, y, tau) = (s.z[0], s.z[1], s.tau);
    away(&[x, y, x + y, x - y], tau, cfg)?;
    let p = |z: C64| wp(EvalPoint::new(z, tau), cfg);
    let dp = |z: C64| wp_prime(EvalPoint::new(z, tau), cfg);
    let q = |r: f64| qpow(tau, r);
    let three = p(x)? + p(y)? + p(x + y)?;
    let logs = ld(1, 1, x, tau, cfg)? + ld(1, 1, y, tau, cfg)? - ld(1, 1, x + y, tau, cfg)?;
    let sines = |n: f64| (x * 2.0 * n).sin() + (y * 2.0 * n).sin() - ((x + y) * 2.0 * n).sin();
    let cosines = |n: f64| (x * 2.0 * n).cos() + (y * 2.0 * n).cos() + ((x + y) * 2.0 * n).cos();
    let series = cot(x) + cot(y) - cot(x + y) + fsum(cfg, |n| q(n) / (ONE - q(n)) * sines(n))? * 4.0;
    let expanded =
        -eisenstein(EisensteinKind::L, tau, cfg)? + 3.0 + cot(x).powi(2) + cot(y).powi(2) + cot(x + y).powi(2)
            - fsum(cfg, |n| q(n) * n / (ONE - q(n)) * cosines(n))? * 8.0;
    let chord = ((dp(x)? - dp(y)?) / (p(x)? - p(y)?)).powi(2) / 4.0;
    Ok(vec![(logs.powi(2), three), (series.powi(2), expanded), (three, chord)])
}

// ------------------------------------------------------ quotients of theta

fn shen_fourier(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let (x, y, z, tau) = (s.z[0], s.z[1], s.z[2], s.tau);
    away(&[x, y, x * 2.0, y * 2.0], tau, cfg)?;
    let t = |j: u8, w: C64| th(j, w, tau, cfg);
    let t2 = |j: u8, w: C64| th(j, w, tau * 2.0, cfg);
    let q = |r: f64| qpow(tau, r);
    let p2 = ratio_product(tau, cfg)?.powi(2);
    let v2 = null(2, tau, cfg)?;
    let mut out = Vec::new();

    let both = |f: &dyn Fn(C64) -> Value| -> Value { Ok(f(x)? + f(y)?) };
    let r1 = p2 * t2(1, x + y)? * t2(4, x - y)? * 2.0 / (t(1, x)? * t(1, y)?);
    out.push((both(&|w| Ok(ld(1, 1, w, tau * 2.0, cfg)? - ld(4, 1, w, tau * 2.0, cfg)?))?, r1));
    let sines = |n: f64| (x * 2.0 * n).sin() + (y * 2.0 * n).sin();
    out.push((cot(x) + cot(y) - fsum(cfg, |n| q(n) / (ONE + q(n)) * sines(n))? * 4.0, r1));

    let lhs = ONE + fsum(cfg, |n| q(n / 2.0) / (ONE + q(n)) * ((x * 2.0 * n).cos() + (y * 2.0 * n).cos()))? * 2.0;
    out.push((lhs, p2 * t2(4, x + y)? * t2(4, x - y)? / (t(4, x)? * t(4, y)?)));
    let lhs = fsum(cfg, |n| q(n / 2.0) / (ONE + q(n)) * ((x * 2.0 * n).cos() - (y * 2.0 * n).cos()))?;
    out.push((lhs, -p2 * t2(1, x + y)? * t2(1, x - y)? / (t(4, x)? * t(4, y)? * 2.0)));

    // denominator printed as θ1(x|2τ)θ2(y|2τ)
    let half = both(&|w| Ok(ld(1, 1, w / 2.0, tau, cfg)? - ld(2, 1, w / 2.0, tau, cfg)?))?;
    let r9 = v2.powi(2) * t(1, (x + y) / 2.0)? * t(2, (x - y) / 2.0)? / (t2(1, x)? * t2(1, y)?);
    out.push((half, r9));
    let odd = |n: f64| {
        ((x * (2.0 * n + 1.0)).sin() + (y * (2.0 * n + 1.0)).sin()) * q(2.0 * n + 1.0) / (ONE - q(2.0 * n + 1.0))
    };
    out.push((ONE / x.sin() + ONE / y.sin() + fsum0(cfg, odd)? * 4.0, r9 / 2.0));

    let r12 = v2.powi(2) * t(1, x + y)? * t(2, x - y)? / (t2(4, x * 2.0)? * t2(4, y * 2.0)?);
    out.push((both(&|w| Ok(ld(4, 1, w, tau, cfg)? - ld(3, 1, w, tau, cfg)?))?, r12));
    let odd2 = |n: f64| {
        let k = 2.0 * n + 1.0;
        ((x * 2.0 * k).sin() + (y * 2.0 * k).sin()) * q(n + 0.5) / (ONE - q(k))
    };
    out.push((fsum0(cfg, odd2)?, r12 / 8.0));

    let quarter = c(PI / 4.0);
    let t1 = |w: C64| t(1, w);
    let lhs = t1(z + x + quarter)? * t1(z - x + quarter)? * t1(z + y + quarter)? * t1(z - y + quarter)?
        - t1(z - x - quarter)? * t1(z + x - quarter)? * t1(z - y - quarter)? * t1(z + y - quarter)?;
    out.push((lhs, v2 * t(2, x + y)? * t(2, x - y)? * t1(z * 2.0)?));

    // second denominator printed as θ2(2y|τ)
    let lhs = ONE / (x * 2.0).cos()
        + ONE / (y * 2.0).cos()
        + fsum(cfg, |n| q(n) / (ONE - q(n)) * kr(-4.0, n) * ((x * 2.0 * n).cos() + (y * 2.0 * n).cos()))? * 4.0;
    let rhs = v2.powi(2) * t(2, x + y)? * t(2, x - y)? / (t2(2, x * 2.0)? * t2(2, y * 2.0)? * 2.0);
    out.push((lhs, rhs));
    Ok(out)
}

fn jacobi_quotients(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let (x, tau) = (s.z[0], s.tau);
    away(&[x, x * 2.0], tau, cfg)?;
    let t = |j: u8, w: C64| th(j, w, tau, cfg);
    let t2 = |j: u8, w: C64| th(j, w, tau * 2.0, cfg);
    let q = |r: f64| qpow(tau, r);
    let p2 = ratio_product(tau, cfg)?.powi(2);
    let v2sq = null(2, tau, cfg)?.powi(2);
    let lhs4 = cot(x) - fsum(cfg, |n| q(n) / (ONE + q(n)) * (x * 2.0 * n).sin())? * 4.0;
    // printed with coefficient 2
    let lhs8 = ONE + fsum(cfg, |n| q(n / 2.0) / (ONE + q(n)) * (x * 2.0 * n).cos())? * 4.0;
    let odd = |n: f64| q(2.0 * n + 1.0) / (ONE - q(2.0 * n + 1.0)) * (x * (2.0 * n + 1.0)).sin();
    let lhs10 = ONE / x.sin() + fsum0(cfg, odd)? * 4.0;
    let jac = fsum0(cfg, |n| q(n + 0.5) / (ONE - q(2.0 * n + 1.0)) * (x * (2.0 * n + 1.0)).sin())? * 8.0;
    Ok(vec![
        (lhs4, p2 * t(2, x)? / t(1, x)?),
        (lhs8, p2 * t(3, x)? / t(4, x)?),
        (lhs10, v2sq * t2(4, x)? / (t2(1, x)? * 2.0)),
        (jac, v2sq * t2(1, x)? / t2(4, x)?),
    ])
}

/// Four points with zero sum: three sampled, the fourth fixed by them.
fn zero_sum(s: &Sample) -> [C64; 4] {
    [s.z[0], s.z[1], s.z[2], -(s.z[0] + s.z[1] + s.z[2])]
}

fn kjr(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let tau = s.tau;
    let w = zero_sum(s);
    let (z, x, y, u) = (s.z[3], s.z[4], s.z[5], s.z[6]);
    away(&[x, y, x + y, u, u * 3.0], tau, cfg)?;
    let t = |j: u8, v: C64| th(j, v, tau, cfg);
    let q = |r: f64| qpow(tau, r);
    let alt = |n: f64| if n as i64 % 2 == 0 { q(n) } else { -q(n) };
    let prime = theta1_prime0(tau, cfg)?;
    let pairs = t(1, w[0] + w[1])? * t(1, w[0] + w[2])? * t(1, w[0] + w[3])?;
    let shifted = |sign: f64| -> Value { w.iter().try_fold(ONE, |acc, &v| Ok(acc * t(2, z + v * sign)?)) };
    let mut out = vec![(shifted(-1.0)? - shifted(1.0)?, pairs * t(1, z * 2.0)?)];

    let mut logs = ZERO;
    let mut den = ONE;
    for &v in &w {
        logs += ld(2, 1, v, tau, cfg)?;
        den *= t(2, v)?;
    }
    out.push((logs, -prime * pairs / den));

    // printed with the first power of the product
    let sines = |n: f64| (x * 2.0 * n).sin() + (y * 2.0 * n).sin() - ((x + y) * 2.0 * n).sin();
    let lhs = x.tan() + y.tan() - (x + y).tan() - fsum(cfg, |n| alt(n) / (ONE - q(n)) * sines(n))? * 4.0;
    let rhs =
        -ratio_product(tau, cfg)?.powi(2) * t(1, x)? * t(1, y)? * t(1, x + y)? / (t(2, x)? * t(2, y)? * t(2, x + y)?);
    out.push((lhs, rhs));

    let lhs = (u * 3.0).tan() - u.tan() * 3.0
        + fsum(cfg, |n| alt(n) / (ONE - q(n)) * ((u * 2.0 * n).sin() * 3.0 - (u * 6.0 * n).sin()))? * 4.0;
    out.push((lhs, prime * t(1, u * 2.0)?.powi(3) / (t(2, u * 3.0)? * t(2, u)?.powi(3))));
    Ok(out)
}

fn addkl(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let tau = s.tau;
    let w = zero_sum(s);
    let (x, y) = (s.z[4], s.z[5]);
    let t = |j: u8, v: C64| th(j, v, tau, cfg);
    let q = |r: f64| qpow(tau, r);
    let prime = theta1_prime0(tau, cfg)?;
    let mut logs = ZERO;
    let mut den = ONE;
    for &v in &w {
        logs += ld(4, 1, v, tau, cfg)?;
        den *= t(4, v)?;
    }
    let rhs = -prime * t(1, w[0] + w[1])? * t(1, w[0] + w[2])? * t(1, w[0] + w[3])? / den;
    let series = fsum(cfg, |n| q(n / 2.0) / (ONE - q(n)) * w.iter().map(|v| (v * 2.0 * n).sin()).sum::<C64>())? * 4.0;
    let sines = |n: f64| (x * 2.0 * n).sin() + (y * 2.0 * n).sin() - ((x + y) * 2.0 * n).sin();
    let lhs3 = fsum(cfg, |n| q(n / 2.0) / (ONE - q(n)) * sines(n))? * 4.0;
    let rhs3 = prime * t(1, x)? * t(1, y)? * t(1, x + y)? / (null(4, tau, cfg)? * t(4, x)? * t(4, y)? * t(4, x + y)?);
    Ok(vec![(logs, rhs), (series, rhs), (lhs3, rhs3)])
}

fn lambert_jacobi(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let (z, tau) = (s.z[0], s.tau);
    let q = |r: f64| qpow(tau, r);
    let lhs = ONE - z.tan() * fsum(cfg, |n| q(n) / (ONE + q(n)) * (z * 2.0 * n).sin())? * 4.0;
    let c2 = (z * 2.0).cos();
    let mut rhs = ONE;
    for n in 1..=cfg.term_cap {
        let qn = q(n as f64);
        let factor = (ONE + qn * c2 * 2.0 + qn * qn) * (ONE - qn).powi(2)
            / ((ONE - qn * c2 * 2.0 + qn * qn) * (ONE + qn).powi(2));
        rhs *= factor;
        if (factor - ONE).norm() < cfg.term_tolerance {
            return Ok(vec![(lhs, rhs)]);
        }
    }
    Err(NumericError::TermCap { what: "product", cap: cfg.term_cap })
}

// ------------------------------------------------- Ramanujan trigonometric

fn ram_trig(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let (x, u, tau) = (s.z[0], s.z[1], s.tau);
    away(&[x], tau, cfg)?;
    let q = |r: f64| qpow(tau, r);
    let l = eisenstein(EisensteinKind::L, tau, cfg)?;
    let m = eisenstein(EisensteinKind::M, tau, cfg)?;
    let a = cot(x).powi(2) / 8.0 + 1.0 / 12.0;
    let lhs = (a + fsum(cfg, |n| q(n) * n / (ONE - q(n)) * (ONE - (x * 2.0 * n).cos()))?).powi(2);
    let rhs = a * a + fsum(cfg, |n| q(n) * n.powi(3) / (ONE - q(n)) * ((x * 2.0 * n).cos() + 5.0))? / 12.0;
    let mut out = vec![(lhs, rhs)];
    for j in [1u8, 4] {
        let lhs = (l + ld(j, 2, x, tau, cfg)? * 3.0).powi(2);
        out.push((lhs, m - ld(j, 4, x, tau, cfg)? * 1.5));
    }
    // printed as 1 + 24Σ q²ⁿ/(1−q²ⁿ) + …
    let cos = |n: f64| (u * 2.0 * n).cos();
    let lhs = ONE - fsum(cfg, |n| q(2.0 * n) * n / (ONE - q(2.0 * n)))? * 24.0
        + fsum(cfg, |n| q(n) * n / (ONE - q(2.0 * n)) * cos(n))? * 24.0;
    let rhs = ONE
        + fsum(cfg, |n| q(2.0 * n) * n.powi(3) / (ONE - q(2.0 * n)))? * 240.0
        + fsum(cfg, |n| q(n) * n.powi(3) / (ONE - q(2.0 * n)) * cos(n))? * 48.0;
    out.push((lhs.powi(2), rhs));
    Ok(out)
}

pub(super) fn records() -> Vec<Record> {
    let quint = "quintuple";
    vec![
        rec(
            "deg3_family",
            "degree-three",
            "liu:eqn4/5/6/7/8/9/10/11",
            Some("two odd entire functions of degree $3$"),
            Some("erratum: the (−4|n) expansion with q^{n/2} needs a factor 1/2 on the right"),
            deg3_family,
        ),
        rec("kiepert_dirichlet", "preliminaries", "jabel:eqn43", Some("$m\\equiv 1 \\pmod 4$"), Some("m = 5, 13"), kiepert_dirichlet),
        rec("gauss_sums", quint, "dg:eqn1/2", None, Some("m = 5, 13, 17 and h = 1..6"), gauss_sums),
        rec("rr_deg5", quint, "RLiu:eqn1/2", Some("Legendre symbol modulo $p$"), None, rr_deg5),
        rec("ramcar_z", quint, "ramcar:eqn1/2", None, None, ramcar_z),
        rec("wp_addition", quint, "Gauss:eqn2/3/4", Some("$x\\not \\equiv 0 \\pmod \\Lambda$"), None, wp_addition),
        rec(
            "shen_fourier",
            quint,
            "JF:eqn1/2/5/6/9/10/12/13/16+JFourierthm:n6",
            None,
            Some("erratum: the log-derivative form needs θ1(x|2τ)θ1(y|2τ) below; the cosecant-sum theorem needs θ2(2y|2τ)"),
            shen_fourier,
        ),
        rec(
            "jacobi_quotients",
            quint,
            "JF:eqn4/8/10a+unnumbered",
            None,
            Some("erratum: the θ3/θ4 cosine expansion has coefficient 4, not 2"),
            jacobi_quotients,
        ),
        rec(
            "kjr",
            quint,
            "KR:eqn15/16/17/19",
            Some("Suppose that $s+t+u+v$"),
            Some("erratum: the tangent addition needs the squared product ∏((1−qⁿ)/(1+qⁿ))²"),
            kjr,
        ),
        rec("addkl", quint, "addKR:eqn1/2/3", None, None, addkl),
        rec("lambert_jacobi", quint, "LJ:eqn1", Some("$1-4(\\tan z)$"), None, lambert_jacobi),
        rec(
            "ram_trig",
            "limit-applications",
            "Ei:eqn1/4/4a/4b",
            Some("first appeared in Ramanujan's paper"),
            Some("erratum: the squared expansion holds as (1 − 24Σ nq²ⁿ/(1−q²ⁿ) + 24Σ nqⁿcos 2nu/(1−q²ⁿ))²"),
            ram_trig,
        ),
    ]
}
