//! Addition-type theta relations, the continued-fraction family and the
//! applications of the degree-6 and degree-8 theorems.

use std::f64::consts::PI;

use super::master::Degree8TestFunction;
use super::sampled::{away, c, null, rec, th, Pairs, ONE, ZERO};
use super::{Record, Sample};
use crate::numeric::{
    eta, logd_theta, qpow, rrcf, rrcf_closed_form, theta1_prime0, EvalConfig, EvalPoint, NumericError, C64, I,
};

type Value = Result<C64, NumericError>;

fn weierstrass_3term(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let (x, y, u, v, tau) = (s.z[0], s.z[1], s.z[2], s.z[3], s.tau);
    let t = |w: C64| th(1, w, tau, cfg);
    let lhs = t(x - u)? * t(x + u)? * t(y - v)? * t(y + v)? - t(y - u)? * t(y + u)? * t(x - v)? * t(x + v)?;
    Ok(vec![(lhs, t(u + v)? * t(u - v)? * t(x - y)? * t(x + y)?)])
}

/// Shifts `(r_k, s_k)` whose sums `r`, `s` are integers.
const RATIONAL_SHIFTS: [([f64; 4], [f64; 4]); 3] = [
    ([0.0; 4], [0.0; 4]),
    ([1.0 / 3.0, 1.0 / 3.0, -1.0 / 6.0, 0.5], [0.5, 0.25, 0.25, 0.0]),
    ([0.5, 0.5, 0.0, 0.0], [0.0, 0.0, 0.0, 1.0]),
];

fn general_fourier(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let tau = s.tau;
    let u = [s.z[0], s.z[1], s.z[2], -(s.z[0] + s.z[1] + s.z[2])];
    let t1 = |w: C64| th(1, w, tau, cfg);
    let prime = theta1_prime0(tau, cfg)?;
    let mut out = Vec::new();
    for (rs, ss) in RATIONAL_SHIFTS {
        let r: f64 = rs.iter().sum();
        let w: Vec<C64> = (0..4).map(|k| u[k] + PI * tau * rs[k] + PI * ss[k]).collect();
        away(&w, tau, cfg)?;
        let mut lhs = I * 2.0 * r;
        for &wk in &w {
            lhs += logd_theta(1, 1, EvalPoint::new(wk, tau), cfg)?;
        }
        // printed with θ4(w_k) below
        let mut rhs = (I * 2.0 * r * w[0]).exp() * prime / t1(w[0])?;
        for &wk in &w[1..] {
            rhs *= t1(w[0] + wk)? / t1(wk)?;
        }
        out.push((lhs, rhs));
    }
    Ok(out)
}

// ------------------------------------------------------- continued fraction

/// `f(w+a) − f(w−a)`.
fn gap(f: &dyn Fn(C64) -> Value, a: f64, w: C64) -> Value {
    Ok(f(w + a)? - f(w - a)?)
}

/// `D(x, π/5)D(y, 2π/5) − D(y, π/5)D(x, 2π/5)` for `D(w, a) = f(w+a) − f(w−a)`.
fn fifth_determinant(f: &dyn Fn(C64) -> Value, x: C64, y: C64) -> Value {
    let (a, b) = (PI / 5.0, 2.0 * PI / 5.0);
    Ok(gap(f, a, x)? * gap(f, b, y)? - gap(f, a, y)? * gap(f, b, x)?)
}

fn rrc_deg6_family(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let (x, y, tau) = (s.z[0], s.z[1], s.tau);
    let t5 = tau * 5.0;
    let t1 = |w: C64, t: C64| th(1, w, t, cfg);
    away(&[x, y], tau, cfg)?;
    let core = |t: C64| -> Value {
        Ok(t1(x + y, t)? * t1(x - y, t)? * t1(x * 2.0, t)? * t1(y * 2.0, t)? / (t1(x, t)? * t1(y, t)?))
    };
    let (e1, e5) = (eta(tau, cfg)?, eta(t5, cfg)?);
    let mut out = Vec::new();

    out.push((fifth_determinant(&|w| t1(w, tau), x, y)?, core(t5)? * 5.0));
    out.push((fifth_determinant(&|w| t1(w, tau / 5.0), x, y)?, core(tau)? * 5.0));

    let h = |k: f64, z: C64| -> Value {
        Ok((I * 2.0 * k * z).exp() * t1(z * 5.0 + PI * tau * k, t5)?
            - (-I * 2.0 * k * z).exp() * t1(z * 5.0 - PI * tau * k, t5)?)
    };
    // printed without the q^{1/2}
    let lhs = qpow(tau, 0.5) * (h(1.0, x)? * h(2.0, y)? - h(1.0, y)? * h(2.0, x)?);
    out.push((lhs, core(tau)?));

    let fifth = fifth_determinant(&|w| Ok(t1(w, tau)?.powi(5)), x, y)?;
    out.push((fifth, (e1.powi(4) * e5.powi(4) * 250.0 + e5.powi(10) / e1.powi(2) * 3125.0) * core(tau)?));

    let k = |k: f64, z: C64| -> Value {
        Ok((I * 2.0 * k * z).exp() * t1(z + PI * tau * k, t5)?.powi(5)
            - (-I * 2.0 * k * z).exp() * t1(z - PI * tau * k, t5)?.powi(5))
    };
    let lhs = qpow(tau, 2.5) * (k(1.0, x)? * k(2.0, y)? - k(1.0, y)? * k(2.0, x)?);
    out.push((lhs, (e1.powi(4) * e5.powi(4) * 10.0 + e1.powi(10) / e5.powi(2)) * core(t5)?));
    Ok(out)
}

fn rrc_trig(s: &Sample, _: &EvalConfig) -> Pairs {
    let (x, y) = (s.z[0], s.z[1]);
    let s5 = |w: C64| Ok(w.sin().powi(5));
    let lhs = fifth_determinant(&s5, x, y)?;
    Ok(vec![(lhs, x.cos() * y.cos() * (x + y).sin() * (x - y).sin() * (125.0 / 32.0))])
}

fn rrcf_values(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let golden = (1.0 + 5f64.sqrt()) / 2.0;
    let product = c((5.0 + 5f64.sqrt()) / 2.0);
    let mut out = Vec::new();
    for alpha in [2.0, 3.0, s.tau.im] {
        let lhs = (rrcf(C64::new(0.0, alpha), cfg)? + golden) * (rrcf(C64::new(0.0, 1.0 / alpha), cfg)? + golden);
        out.push((lhs, product));
    }
    for tau in [I, I / 5f64.sqrt(), I * 5f64.sqrt()] {
        let exact =
            rrcf_closed_form(tau).ok_or_else(|| NumericError::Domain(format!("no closed form at τ = {tau}")))?;
        out.push((rrcf(tau, cfg)?, c(exact)));
    }
    Ok(out)
}

// ----------------------------------------------------------------- degree 6

/// `∏ θ1(z+cₖ) + ∏ θ1(−z+cₖ)` over six shifts with zero sum.
fn degree6(shifts: &[C64; 6], z: C64, tau: C64, cfg: &EvalConfig) -> Value {
    let mut plus = ONE;
    let mut minus = ONE;
    for &s in shifts {
        plus *= th(1, z + s, tau, cfg)?;
        minus *= th(1, s - z, tau, cfg)?;
    }
    Ok(plus + minus)
}

fn legendre_deg6(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let tau = s.tau;
    let t3 = tau * 3.0;
    let t7 = tau * 7.0;
    let (x, y) = (s.z[5], s.z[6]);
    away(&[x, x * 2.0], tau, cfg)?;
    let t = |j: u8, w: C64| th(j, w, tau, cfg);
    let at = |j: u8, w: C64, tt: C64| th(j, w, tt, cfg);
    let nul = |j: u8, tt: C64| null(j, tt, cfg);
    let (e1, e3) = (eta(tau, cfg)?, eta(t3, cfg)?);
    let mut out = Vec::new();

    let mut shifts = [ZERO; 6];
    shifts[..5].copy_from_slice(&s.z[..5]);
    shifts[5] = -s.z[..5].iter().sum::<C64>();
    let f = |z: C64| degree6(&shifts, z, tau, cfg);
    let q34 = qpow(tau, 0.75);
    let lhs = f(x)? * 4.0 / t(1, x * 2.0)?.powi(2);
    let rhs = f(ZERO)? / t(1, x)?.powi(2) + f(c(PI / 2.0))? / t(2, x)?.powi(2)
        - q34 * f((PI + PI * tau) / 2.0)? / t(3, x)?.powi(2)
        - q34 * f(PI * tau / 2.0)? / t(4, x)?.powi(2);
    out.push((lhs, rhs));

    out.push((t(2, x)?.powi(4) + t(4, x)?.powi(4), t(1, x)?.powi(4) + t(3, x)?.powi(4)));

    let lhs = t(2, y)?.powi(2) / at(2, x, t3)?.powi(2) - t(3, y)?.powi(2) / at(3, x, t3)?.powi(2)
        + t(4, y)?.powi(2) / at(4, x, t3)?.powi(2);
    let rhs =
        t(1, y)?.powi(2) / at(1, x, t3)?.powi(2) + t(1, x - y)? * t(1, x + y)? * 4.0 / at(1, x * 2.0, t3)?.powi(2);
    out.push((lhs, rhs));

    let mut lhs = ZERO;
    for (j, sign) in [(1u8, 1.0), (2, 1.0), (3, -1.0), (4, 1.0)] {
        lhs += t(j, y)?.powi(2) * at(j, x * 3.0, t3)? / t(j, x)? * sign;
    }
    out.push((lhs, -t(1, x - y)? * t(1, x + y)? * e3.powi(3) / e1.powi(3) * 6.0));

    let lhs = t(1, x)? * at(1, x * 3.0, t3)? + t(2, x)? * at(2, x * 3.0, t3)? + t(4, x)? * at(4, x * 3.0, t3)?;
    out.push((lhs, t(3, x)? * at(3, x * 3.0, t3)?));

    let mut lhs = ZERO;
    for (j, sign) in [(2u8, 1.0), (3, -1.0), (4, 1.0)] {
        lhs += t(j, y)?.powi(2) * nul(j, t3)? / nul(j, tau)? * sign;
    }
    out.push((lhs, t(1, y)?.powi(2) * e3.powi(3) / e1.powi(3) * 3.0));

    let (p1, p7) = (theta1_prime0(tau, cfg)?, theta1_prime0(t7, cfg)?);
    let mut lhs = p7 * 7.0 / (p1 * t(1, x)?.powi(2));
    for (j, sign) in [(2u8, -1.0), (3, 1.0), (4, -1.0)] {
        lhs += nul(j, t7)? / (nul(j, tau)? * t(j, x)?.powi(2)) * sign;
    }
    out.push((lhs, at(1, x * 7.0, t7)? * 4.0 / (t(1, x)? * t(1, x * 2.0)?.powi(2))));

    let mut lhs = p1 / (p7 * at(1, x, t7)?.powi(2));
    for (j, sign) in [(2u8, 1.0), (3, -1.0), (4, 1.0)] {
        lhs += nul(j, tau)? / (nul(j, t7)? * at(j, x, t7)?.powi(2)) * sign;
    }
    out.push((lhs, t(1, x)? * 4.0 / (at(1, x, t7)? * at(1, x * 2.0, t7)?.powi(2))));
    Ok(out)
}

// ----------------------------------------------------------------- degree 8

fn test_function(s: &Sample) -> Degree8TestFunction {
    Degree8TestFunction { shifts: [s.z[0], s.z[1], s.z[2], s.z[3]] }
}

/// `f` at `0, π/2, (π+πτ)/2, πτ/2`.
fn half_values(f: &Degree8TestFunction, tau: C64, cfg: &EvalConfig) -> Result<[C64; 4], NumericError> {
    Ok([
        f.eval(ZERO, tau, cfg)?,
        f.eval(c(PI / 2.0), tau, cfg)?,
        f.eval((PI + PI * tau) / 2.0, tau, cfg)?,
        f.eval(PI * tau / 2.0, tau, cfg)?,
    ])
}

fn deg8_app(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let tau = s.tau;
    let t5 = tau * 5.0;
    let f = test_function(s);
    let x = s.z[4];
    away(&[x, x * 2.0, x * 3.0], tau, cfg)?;
    let t1 = |w: C64, t: C64| th(1, w, t, cfg);
    let nul = |j: u8, t: C64| null(j, t, cfg);
    let (e1, e5) = (eta(tau, cfg)?, eta(t5, cfg)?);
    let q = qpow(tau, 1.0);
    let (a, b) = (c(PI / 5.0), c(2.0 * PI / 5.0));
    let mut out = Vec::new();

    let [f0, f2, f3, f4] = half_values(&f, tau, cfg)?;
    let lhs = f.eval(b, tau, cfg)? * 4.0 / t1(a, tau)?.powi(2) - f.eval(a, tau, cfg)? * 4.0 / t1(b, tau)?.powi(2);
    let bracket = -f0 * e1.powi(3) / (e5.powi(3) * 5.0) + f2 * nul(2, tau)? / nul(2, t5)?
        - q * f3 * nul(3, tau)? / nul(3, t5)?
        + q * f4 * nul(4, tau)? / nul(4, t5)?;
    out.push((lhs, e5.powi(2) / e1.powi(4) * 5f64.sqrt() * bracket));

    let [g0, g2, g3, g4] = half_values(&f, t5, cfg)?;
    let lhs = qpow(tau, 3.0) * f.eval(PI * tau * 2.0, t5, cfg)? * 4.0 / t1(PI * tau, t5)?.powi(2)
        - f.eval(PI * tau, t5, cfg)? * 4.0 / t1(PI * tau * 2.0, t5)?.powi(2);
    let q5 = qpow(tau, 5.0);
    let bracket = -g0 * e5.powi(3) / e1.powi(3) + g2 * nul(2, t5)? / nul(2, tau)?
        - q5 * g3 * nul(3, t5)? / nul(3, tau)?
        + q5 * g4 * nul(4, t5)? / nul(4, tau)?;
    out.push((lhs, -e1.powi(2) / e5.powi(4) * bracket));

    let t3 = tau * 3.0;
    let mut lhs = ZERO;
    for (j, sign) in [(2u8, 1.0), (3, -1.0), (4, 1.0)] {
        lhs += nul(j, tau)? / (nul(j, t3)? * th(j, x, tau, cfg)?.powi(2)) * sign;
    }
    let rhs = t1(x * 3.0, tau)? * 4.0 / (t1(x * 2.0, tau)?.powi(2) * t1(x * 3.0, t3)?)
        - e1.powi(3) / (eta(t3, cfg)?.powi(3) * t1(x, tau)?.powi(2));
    out.push((lhs, rhs));
    Ok(out)
}

fn liuthm_z(s: &Sample, cfg: &EvalConfig) -> Pairs {
    let tau = s.tau;
    let f = test_function(s);
    let x = s.z[4];
    let mut points = vec![x, x * 2.0];
    for sh in f.shifts {
        points.extend([x + sh, x - sh]);
    }
    away(&points, tau, cfg)?;
    let ld = |w: C64| logd_theta(1, 1, EvalPoint::new(w, tau), cfg);
    let t = |j: u8, w: C64| th(j, w, tau, cfg);
    let mut lhs = -ld(x * 2.0)? * 4.0;
    for sh in f.shifts {
        lhs += ld(x + sh)? + ld(x - sh)?;
    }
    let [f0, f2, f3, f4] = half_values(&f, tau, cfg)?;
    let q = qpow(tau, 1.0);
    let bracket =
        -f0 / t(1, x)?.powi(4) + f2 / t(2, x)?.powi(4) - q * f3 / t(3, x)?.powi(4) + q * f4 / t(4, x)?.powi(4);
    let rhs = theta1_prime0(tau, cfg)? * t(1, x * 2.0)?.powi(3) / (f.eval(x, tau, cfg)? * 4.0) * bracket;
    Ok(vec![(lhs, rhs)])
}

pub(super) fn records() -> Vec<Record> {
    let cf = "continued-fraction";
    let master = "master-applications";
    vec![
        rec(
            "weierstrass_3term",
            "degree-three",
            "liu:eqn12",
            None,
            Some("the second identity carrying this label; the first is the eta10 record"),
            weierstrass_3term,
        ),
        rec(
            "general_fourier",
            "quintuple",
            "JFourierthm:n7",
            None,
            Some("erratum: the denominators are θ1(u_k + r_kπτ + s_kπ), not θ4; three rational shift patterns"),
            general_fourier,
        ),
        rec(
            "rrc_deg6_family",
            cf,
            "rrc:eqn9/11/14/16/18",
            Some("two entire functions of degree $6$"),
            Some("erratum: the H-function form carries a factor q^{1/2} on the left"),
            rrc_deg6_family,
        ),
        rec("rrc_trig", cf, "rrc:eqn27", None, None, rrc_trig),
        rec(
            "rrcf_values",
            cf,
            "rrc:eqn23/24/25/26",
            None,
            Some("αβ = 1 at α = 2, 3 and α = Im τ of the sample; radical values at τ = i, i/√5, √5·i"),
            rrcf_values,
        ),
        rec(
            "legendre_deg6",
            "degree-six",
            "addliu:eqn1/2/3/6/7/16/19/22",
            Some("beautiful theta function identity"),
            Some("F(z) = ∏ θ1(z+cₖ) + ∏ θ1(cₖ−z) over six sampled shifts with zero sum"),
            legendre_deg6,
        ),
        rec(
            "deg8_app",
            master,
            "deg8:eqn1/4/12",
            None,
            Some("f(z) = ∏ θ1(z+sₖ)θ1(z−sₖ) over four sampled shifts"),
            deg8_app,
        ),
        rec(
            "liuthm_z",
            master,
            "newliu:eqn2",
            Some("Dividing both sides of \\reff{jabel:eqn23} by $y-x$"),
            Some("f(z) = ∏ θ1(z+sₖ)θ1(z−sₖ) over four sampled shifts"),
            liuthm_z,
        ),
    ]
}
