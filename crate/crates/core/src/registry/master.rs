//! The two master theorems, exercised on explicit degree-8 functions.
//!
//! Any even entire `f` with `f(z) = f(z+π) = q⁴e^{16iz}f(z+πτ)` works; the
//! test family is `f(z) = ∏ₖ θ1(z+sₖ)θ1(z−sₖ)` over four shifts, whose
//! log-derivatives at `0` reduce to those of `θ1` at the shifts.

use std::f64::consts::PI;

use super::{find, run_numeric, CheckError, Sample, Status, Verdict};
use crate::numeric::{
    eisenstein, half_lattice_distance, lattice_distance, logd_theta, qpow, theta, theta1_prime0, EisensteinKind,
    EvalConfig, EvalPoint, NumericError, C64,
};

/// Minimum distance of every shift from the zero lattice of `θ1` in the limit form.
pub const SHIFT_MARGIN: f64 = 0.3;

/// `∏ θ1(z+sₖ)θ1(z−sₖ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Degree8TestFunction {
    pub shifts: [C64; 4],
}

impl Degree8TestFunction {
    pub fn eval(&self, z: C64, tau: C64, cfg: &EvalConfig) -> Result<C64, NumericError> {
        let mut acc = C64::new(1.0, 0.0);
        for s in self.shifts {
            acc *= theta(1, EvalPoint::new(z + s, tau), cfg)? * theta(1, EvalPoint::new(z - s, tau), cfg)?;
        }
        Ok(acc)
    }

    /// `(log f)^{(k)}(0)` for even `k`, as `2Σ (log θ1)^{(k)}(sₖ)`.
    pub fn log_derivative_at_zero(&self, k: u8, tau: C64, cfg: &EvalConfig) -> Result<C64, NumericError> {
        if k % 2 != 0 {
            return Err(NumericError::Domain(format!("odd log-derivative order {k} of an even function")));
        }
        let mut acc = C64::new(0.0, 0.0);
        for s in self.shifts {
            acc += logd_theta(1, k, EvalPoint::new(s, tau), cfg)?;
        }
        Ok(acc * 2.0)
    }

    /// Values at `0, π/2, (π+πτ)/2, πτ/2`.
    fn half_period_values(&self, tau: C64, cfg: &EvalConfig) -> Result<[C64; 4], NumericError> {
        Ok([
            self.eval(C64::new(0.0, 0.0), tau, cfg)?,
            self.eval(C64::new(PI / 2.0, 0.0), tau, cfg)?,
            self.eval((PI + PI * tau) / 2.0, tau, cfg)?,
            self.eval(PI * tau / 2.0, tau, cfg)?,
        ])
    }
}

fn near(what: &str, z: C64, margin: f64) -> NumericError {
    NumericError::NearZero { what: what.to_string(), z, margin }
}

/// Both sides of the two-variable master identity at `(x, y)`.
///
/// `theta3_weight` multiplies the `q` in front of the `θ3` term; any value
/// other than `1` should break the identity.
pub fn degree8_sides(
    f: &Degree8TestFunction,
    x: C64,
    y: C64,
    tau: C64,
    theta3_weight: f64,
    cfg: &EvalConfig,
) -> Result<(C64, C64), NumericError> {
    let m = cfg.lattice_margin;
    for (w, what) in [(x, "x"), (y, "y"), (x + y, "x + y"), (x - y, "x - y")] {
        if half_lattice_distance(w, tau) < m {
            return Err(near(what, w, m));
        }
    }
    let th = |j: u8, z: C64| theta(j, EvalPoint::new(z, tau), cfg);
    let q = qpow(tau, 1.0);
    let [f0, f2, f3, f4] = f.half_period_values(tau, cfg)?;
    let lhs =
        f.eval(x, tau, cfg)? * 4.0 / th(1, x * 2.0)?.powi(2) - f.eval(y, tau, cfg)? * 4.0 / th(1, y * 2.0)?.powi(2);
    let pair = |j: u8| -> Result<C64, NumericError> { Ok(th(j, x)?.powi(2) * th(j, y)?.powi(2)) };
    let bracket = -f0 / pair(1)? + f2 / pair(2)? - q * theta3_weight * f3 / pair(3)? + q * f4 / pair(4)?;
    let rhs = th(1, x + y)? * th(1, x - y)? * bracket;
    Ok((lhs, rhs))
}

/// Both sides of the limiting master identity, in `L`, `M` and the
/// nullwerte.
pub fn limit_sides(
    f: &Degree8TestFunction,
    tau: C64,
    theta3_weight: f64,
    cfg: &EvalConfig,
) -> Result<(C64, C64), NumericError> {
    for s in f.shifts {
        if lattice_distance(s, C64::new(0.0, 0.0), tau) < SHIFT_MARGIN {
            return Err(near("shift", s, SHIFT_MARGIN));
        }
    }
    let l = eisenstein(EisensteinKind::L, tau, cfg)?;
    let m = eisenstein(EisensteinKind::M, tau, cfg)?;
    let d2 = f.log_derivative_at_zero(2, tau, cfg)?;
    let d4 = f.log_derivative_at_zero(4, tau, cfg)?;
    let lhs = (l * 8.0 + d2 * 3.0).powi(2) + m * 8.0 + d4 * 3.0;

    let null = |j: u8| theta(j, EvalPoint::new(C64::new(0.0, 0.0), tau), cfg);
    let q = qpow(tau, 1.0);
    let [f0, f2, f3, f4] = f.half_period_values(tau, cfg)?;
    let bracket = f2 / null(2)?.powi(4) - q * theta3_weight * f3 / null(3)?.powi(4) + q * f4 / null(4)?.powi(4);
    let rhs = theta1_prime0(tau, cfg)?.powi(4) * 72.0 / f0 * bracket;
    Ok((lhs, rhs))
}

fn degree8_instance(s: &Sample, cfg: &EvalConfig, weight: f64) -> Result<Vec<(C64, C64)>, NumericError> {
    let f = Degree8TestFunction { shifts: [s.z[0], s.z[1], s.z[2], s.z[3]] };
    Ok(vec![degree8_sides(&f, s.z[4], s.z[5], s.tau, weight, cfg)?])
}

fn limit_instance(s: &Sample, cfg: &EvalConfig, weight: f64) -> Result<Vec<(C64, C64)>, NumericError> {
    let f = Degree8TestFunction { shifts: [s.z[0], s.z[1], s.z[2], s.z[3]] };
    Ok(vec![limit_sides(&f, s.tau, weight, cfg)?])
}

pub(super) fn degree8_check(s: &Sample, cfg: &EvalConfig) -> Result<Vec<(C64, C64)>, NumericError> {
    degree8_instance(s, cfg, 1.0)
}

pub(super) fn limit_check(s: &Sample, cfg: &EvalConfig) -> Result<Vec<(C64, C64)>, NumericError> {
    limit_instance(s, cfg, 1.0)
}

fn verdict(id: &str, samples: usize, cfg: &EvalConfig, check: &super::DynCheck<'_>) -> Result<Verdict, CheckError> {
    cfg.validate()?;
    let record = find(id).ok_or_else(|| CheckError::UnknownId(id.to_string()))?;
    let start = std::time::Instant::now();
    let residual = run_numeric(id, check, samples, false, cfg)?;
    Ok(Verdict {
        id: id.to_string(),
        mode: record.mode(),
        status: if residual <= cfg.comparison_tolerance { Status::Pass } else { Status::Fail },
        order: None,
        samples: Some(samples),
        max_abs_residual: Some(residual),
        mismatch: None,
        elapsed_ms: start.elapsed().as_millis() as u64,
        paper_label: record.paper_label.to_string(),
        note: record.note.map(str::to_string),
    })
}

/// Run the two-variable master identity over `samples` seeded
/// configurations, with the `θ3` coefficient scaled by `theta3_weight`.
pub fn verify_master_degree8(samples: usize, theta3_weight: f64, cfg: &EvalConfig) -> Result<Verdict, CheckError> {
    verdict("master_degree8", samples, cfg, &|s, c| degree8_instance(s, c, theta3_weight))
}

/// Same for the limiting identity.
pub fn verify_master_limit(samples: usize, theta3_weight: f64, cfg: &EvalConfig) -> Result<Verdict, CheckError> {
    verdict("master_limit", samples, cfg, &|s, c| limit_instance(s, c, theta3_weight))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_function() -> Degree8TestFunction {
        Degree8TestFunction {
            shifts: [C64::new(0.4, 0.1), C64::new(-0.9, 0.05), C64::new(1.3, -0.2), C64::new(0.7, 0.2)],
        }
    }

    #[test]
    fn test_function_has_the_required_symmetries() {
        let cfg = EvalConfig::default();
        let f = sample_function();
        let tau = C64::new(0.1, 1.1);
        let z = C64::new(0.3, 0.12);
        let v = f.eval(z, tau, &cfg).unwrap();
        let even = f.eval(-z, tau, &cfg).unwrap();
        let period = f.eval(z + PI, tau, &cfg).unwrap();
        let quasi = qpow(tau, 4.0) * (C64::new(0.0, 16.0) * z).exp() * f.eval(z + PI * tau, tau, &cfg).unwrap();
        for w in [even, period, quasi] {
            assert!((w - v).norm() <= 1e-10 * v.norm().max(1.0));
        }
    }

    #[test]
    fn both_forms_hold_at_a_fixed_point() {
        let cfg = EvalConfig::default();
        let f = sample_function();
        let tau = C64::new(-0.2, 1.2);
        let (l, r) = degree8_sides(&f, C64::new(0.5, 0.1), C64::new(-0.8, 0.05), tau, 1.0, &cfg).unwrap();
        assert!(super::super::scaled_residual(l, r) < 1e-10);
        let (l, r) = limit_sides(&f, tau, 1.0, &cfg).unwrap();
        assert!(super::super::scaled_residual(l, r) < 1e-9);
        let (l, r) = limit_sides(&f, tau, 1.01, &cfg).unwrap();
        assert!(super::super::scaled_residual(l, r) > 1e-6);
    }
}
