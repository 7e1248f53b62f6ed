//! Acceptance run: one line per criterion, nonzero exit on any failure.
//!
//! Oracles here are computed independently of the library: divisor counts and
//! representation numbers by enumeration, Legendre symbols by Euler's
//! criterion, closed forms from their radicals, derivatives by finite
//! differences.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use qtheta::builders::{phi, psi};
use qtheta::numeric::{
    eisenstein, eta, logd_theta, rrcf, sqrt_minus_i_tau, theta, wp, wp_prime, EisensteinKind, EvalConfig, EvalPoint,
    C64, I,
};
use qtheta::registry::{
    registry, scaled_residual, verify_all, verify_identity, verify_master_degree8, verify_master_limit, Filter, Mode,
    Overrides, Status,
};
use qtheta::QExp;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

struct Harness {
    failures: usize,
}

impl Harness {
    fn run(&mut self, n: u32, name: &str, limit: Option<Duration>, check: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(detail), Some(l)) if took > l => Err(format!("{detail}; took {took:.2?}, limit {l:.2?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS {n:>2} {name}: {detail} ({took:.2?})"),
            Err(detail) => {
                self.failures += 1;
                println!("FAIL {n:>2} {name}: {detail} ({took:.2?})");
            }
        }
    }
}

fn cfg() -> EvalConfig {
    EvalConfig { seed: 42, ..EvalConfig::default() }
}

fn secs(s: f64) -> Option<Duration> {
    Some(Duration::from_secs_f64(s))
}

fn exact_at(id: &str, order: i64) -> Outcome {
    let overrides = Overrides { order: Some(order), ..Overrides::default() };
    let v = verify_identity(id, &overrides, &cfg()).map_err(|e| e.to_string())?;
    if v.status == Status::Pass && v.order == Some(order) {
        Ok(format!("{id} equal through order {order}"))
    } else {
        Err(format!("{id}: status {} at order {:?}, mismatch {:?}", v.status, v.order, v.mismatch))
    }
}

fn divisors_mod4(n: u64) -> (i64, i64) {
    let (mut d1, mut d3) = (0, 0);
    for d in 1..=n {
        if n % d == 0 {
            match d % 4 {
                1 => d1 += 1,
                3 => d3 += 1,
                _ => {}
            }
        }
    }
    (d1, d3)
}

fn coefficient(s: &qtheta::QSeries, n: i64) -> Result<String, String> {
    s.coefficient(QExp::int(n)).map(|c| c.to_string()).map_err(|e| e.to_string())
}

fn two_squares() -> Outcome {
    let p = phi(QExp::int(501), QExp::int(1));
    let square = &p * &p;
    for n in 1..=500i64 {
        let (d1, d3) = divisors_mod4(n as u64);
        let got = coefficient(&square, n)?;
        if got != (4 * (d1 - d3)).to_string() {
            return Err(format!("q^{n}: φ² gives {got}, 4(d1 - d3) = {}", 4 * (d1 - d3)));
        }
        if n <= 200 {
            let r = (-15i64..=15).flat_map(|a| (-15i64..=15).map(move |b| a * a + b * b)).filter(|&s| s == n).count();
            if got != r.to_string() {
                return Err(format!("q^{n}: φ² gives {got}, enumeration {r}"));
            }
        }
    }
    exact_at("r2_counts", 500)?;
    Ok("φ² = 4(d1 - d3) for n ≤ 500, = r2 by enumeration for n ≤ 200".into())
}

fn two_triangulars() -> Outcome {
    let p = psi(QExp::int(301), QExp::int(1));
    let square = &p * &p;
    for n in 0..=300i64 {
        let (d1, d3) = divisors_mod4(4 * n as u64 + 1);
        let got = coefficient(&square, n)?;
        let t = (0i64..=25)
            .flat_map(|a| (0i64..=25).map(move |b| a * (a + 1) / 2 + b * (b + 1) / 2))
            .filter(|&s| s == n)
            .count();
        if got != (d1 - d3).to_string() || got != t.to_string() {
            return Err(format!("q^{n}: ψ² gives {got}, d1 - d3 = {}, enumeration {t}", d1 - d3));
        }
    }
    exact_at("t2_counts", 300)?;
    Ok("ψ² = d1(4n+1) - d3(4n+1) = t2 by enumeration for n ≤ 300".into())
}

fn master(limit: bool, samples: usize, tol: f64) -> Outcome {
    let cfg = EvalConfig { comparison_tolerance: tol, ..cfg() };
    let v = if limit { verify_master_limit(samples, 1.0, &cfg) } else { verify_master_degree8(samples, 1.0, &cfg) }
        .map_err(|e| e.to_string())?;
    let r = v.max_abs_residual.unwrap_or(f64::INFINITY);
    if v.status == Status::Pass && v.samples == Some(samples) && r <= tol {
        Ok(format!("{samples} configurations, max residual {r:.2e}"))
    } else {
        Err(format!("status {}, samples {:?}, max residual {r:.2e}", v.status, v.samples))
    }
}

fn seeded_taus(count: usize, salt: u64) -> Vec<C64> {
    let mut rng = ChaCha8Rng::seed_from_u64(42 ^ salt);
    (0..count).map(|_| C64::new(rng.gen_range(-0.45..0.45), rng.gen_range(0.8..1.6))).collect()
}

fn imaginary_transforms() -> Outcome {
    let cfg = cfg();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst: f64 = 0.0;
    for tau in seeded_taus(10, 1) {
        let z = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-0.2..0.2));
        let inv = -1.0 / tau;
        let root = sqrt_minus_i_tau(tau);
        let factor = root * (I * z * z / (PI * tau)).exp();
        let th = |j: u8, w: C64, t: C64| theta(j, EvalPoint::new(w, t), &cfg).map_err(|e| e.to_string());
        let pairs = [
            (th(1, z / tau, inv)?, -I * factor * th(1, z, tau)?),
            (th(2, z / tau, inv)?, factor * th(4, z, tau)?),
            (th(3, z / tau, inv)?, factor * th(3, z, tau)?),
            (th(4, z / tau, inv)?, factor * th(2, z, tau)?),
            (eta(inv, &cfg).map_err(|e| e.to_string())?, root * eta(tau, &cfg).map_err(|e| e.to_string())?),
            (
                eisenstein(EisensteinKind::L, inv, &cfg).map_err(|e| e.to_string())?,
                -6.0 * tau * I / PI
                    + tau * tau * eisenstein(EisensteinKind::L, tau, &cfg).map_err(|e| e.to_string())?,
            ),
        ];
        for (k, (a, b)) in pairs.iter().enumerate() {
            let r = scaled_residual(*a, *b);
            worst = worst.max(r);
            if r > 1e-9 {
                return Err(format!("transform {k} at τ = {tau}: residual {r:.2e}"));
            }
        }
    }
    Ok(format!("θ1..θ4, η, L at 10 τ values, max residual {worst:.2e}"))
}

fn continued_fraction() -> Outcome {
    let cfg = cfg();
    let r = |tau: C64| rrcf(tau, &cfg).map_err(|e| e.to_string());
    let r5 = 5f64.sqrt();
    let golden = (1.0 + r5) / 2.0;
    let at_i = ((5.0 + r5) / 2.0).sqrt() - golden;
    let d = (r(I)? - at_i).norm();
    if d > 1e-10 {
        return Err(format!("R(i) off by {d:.2e}"));
    }
    let mut worst: f64 = 0.0;
    for (a, b) in [(2.0, 0.5), (3.0, 1.0 / 3.0)] {
        let prod = (r(C64::new(0.0, a))? + golden) * (r(C64::new(0.0, b))? + golden);
        let e = (prod - (5.0 + r5) / 2.0).norm();
        worst = worst.max(e);
        if e > 1e-9 {
            return Err(format!("reciprocal product at ({a}, {b}) off by {e:.2e}"));
        }
    }
    let x = (5f64.powf(0.75) * ((r5 - 1.0) / 2.0).powf(2.5) - 1.0).powf(0.2);
    let e25 = (r(I / r5)? - golden * x).norm();
    let e26 = (r(I * r5)? - (r5 / (1.0 + x) - golden)).norm();
    if e25 > 1e-8 || e26 > 1e-8 {
        return Err(format!("closed forms off by {e25:.2e} and {e26:.2e}"));
    }
    Ok(format!(
        "R(i) within {d:.1e}, reciprocal products within {worst:.1e}, R(i/√5) and R(√5 i) within {:.1e}",
        e25.max(e26)
    ))
}

fn legendre(h: i64, p: i64) -> i64 {
    let mut acc = 1i64;
    let mut base = h.rem_euclid(p);
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if acc == p - 1 {
        -1
    } else {
        acc
    }
}

fn gauss_sums() -> Outcome {
    let mut worst: f64 = 0.0;
    for m in [5i64, 13, 17] {
        for h in 1..=6i64 {
            let chi = legendre(h, m) as f64;
            let got = qtheta::arith::gauss_sum(m, h);
            let want = C64::new(chi * (m as f64).sqrt(), 0.0);
            let e = (got - want).norm();
            worst = worst.max(e);
            if e > 1e-10 {
                return Err(format!("m = {m}, h = {h}: {got} vs {want}"));
            }
        }
    }
    Ok(format!("m ∈ {{5, 13, 17}}, h ≤ 6, max error {worst:.1e}"))
}

fn derivatives() -> Outcome {
    let cfg = cfg();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let h = 1e-5;
    let mut worst: f64 = 0.0;
    let mut done = 0;
    while done < 20 {
        let tau = C64::new(rng.gen_range(-0.45..0.45), rng.gen_range(0.8..1.6));
        let z = C64::new(rng.gen_range(-1.5..1.5), rng.gen_range(-0.25..0.25));
        let j = 1 + (done % 4) as u8;
        let Ok(exact) = logd_theta(j, 1, EvalPoint::new(z, tau), &cfg) else { continue };
        let th = |w: C64| theta(j, EvalPoint::new(w, tau), &cfg).map_err(|e| e.to_string());
        let fd = (th(z + h)? / th(z - h)?).ln() / (2.0 * h);
        let rel = (exact - fd).norm() / exact.norm().max(1.0);
        worst = worst.max(rel);
        if rel > 1e-6 {
            return Err(format!("θ{j} at z = {z}, τ = {tau}: relative error {rel:.2e}"));
        }
        done += 1;
    }
    let mut cubic: f64 = 0.0;
    for tau in seeded_taus(20, 2) {
        let z = C64::new(rng.gen_range(0.3..1.2), rng.gen_range(-0.25..0.25));
        let p = EvalPoint::new(z, tau);
        let (w, dw) = (wp(p, &cfg).map_err(|e| e.to_string())?, wp_prime(p, &cfg).map_err(|e| e.to_string())?);
        let m = eisenstein(EisensteinKind::M, tau, &cfg).map_err(|e| e.to_string())?;
        let n = eisenstein(EisensteinKind::N, tau, &cfg).map_err(|e| e.to_string())?;
        let r = scaled_residual(dw * dw, 4.0 * w * w * w - 4.0 / 3.0 * m * w - 8.0 / 27.0 * n);
        cubic = cubic.max(r);
    }
    if cubic > 1e-8 {
        return Err(format!("℘ cubic residual {cubic:.2e}"));
    }
    Ok(format!("log-derivative vs finite difference max {worst:.1e} at 20 points; ℘ cubic residual {cubic:.1e}"))
}

fn full_run() -> Outcome {
    let run = || verify_all(&Filter::all(), &Overrides::default(), &cfg()).without_timings();
    let first = run();
    let second = run();
    let mut bad = Vec::new();
    for row in &first.results {
        let want = if row.id == "conjecture_log" { Status::Evidence } else { Status::Pass };
        if row.status != want {
            bad.push(format!("{} is {}", row.id, row.status));
        }
    }
    if first.results.len() != registry().len() {
        bad.push(format!("{} results for {} records", first.results.len(), registry().len()));
    }
    if first.to_json() != second.to_json() {
        bad.push("reports differ between runs".into());
    }
    if bad.is_empty() {
        Ok(format!("{} records succeed, report byte-stable", first.results.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn mutations() -> Outcome {
    let overrides = Overrides { mutate: true, ..Overrides::default() };
    let mut seen = Vec::new();
    for mode in [Mode::ExactQ, Mode::ExactBivariate, Mode::Numeric, Mode::Arithmetic] {
        let report = verify_all(&Filter::mode(mode), &overrides, &cfg());
        if report.results.is_empty() {
            return Err(format!("no {mode} records"));
        }
        if let Some(row) = report.results.iter().find(|r| r.status != Status::Fail) {
            return Err(format!("mutated {} ({mode}) reported {}", row.id, row.status));
        }
        seen.push(format!("{mode} {}", report.results.len()));
    }
    for (name, v) in [
        ("master_degree8", verify_master_degree8(5, 1.01, &cfg())),
        ("master_limit", verify_master_limit(5, 1.01, &cfg())),
    ] {
        let v = v.map_err(|e| e.to_string())?;
        if v.status != Status::Fail {
            return Err(format!("{name} with θ3 weight 1.01 reported {}", v.status));
        }
    }
    Ok(format!("every mutated record fails ({}); master weight 1.01 fails", seen.join(", ")))
}

fn main() -> ExitCode {
    let mut h = Harness { failures: 0 };
    h.run(1, "euler_pentagonal at order 100", secs(1.0), || exact_at("euler_pentagonal", 100));
    h.run(2, "jacobi_quartic_null at order 50", secs(1.0), || exact_at("jacobi_quartic_null", 50));
    h.run(3, "two squares", secs(5.0), two_squares);
    h.run(4, "two triangular numbers", secs(5.0), two_triangulars);
    for id in ["eight_square", "legendre_psi8"] {
        h.run(5, &format!("{id} at order 200"), secs(5.0), || exact_at(id, 200));
    }
    for id in ["rrcf_eta_level1", "rrcf_eta_level5", "kiepert_deg5"] {
        h.run(6, &format!("{id} at order 30"), secs(2.0), || exact_at(id, 30));
    }
    for id in ["triple_product", "quintuple_kiepert"] {
        h.run(7, &format!("{id} at order 25"), secs(3.0), || exact_at(id, 25));
    }
    h.run(8, "master degree-8 identity", secs(5.0), || master(false, 20, 1e-9));
    h.run(9, "master limit identity", secs(3.0), || master(true, 10, 1e-8));
    h.run(10, "imaginary transformations", None, imaginary_transforms);
    h.run(11, "continued fraction values", None, continued_fraction);
    h.run(12, "Gauss sums", None, gauss_sums);
    h.run(13, "derivative checks", None, derivatives);
    h.run(14, "full verification, seed 42", secs(60.0), full_run);
    h.run(15, "mutation controls", None, mutations);
    if h.failures == 0 {
        println!("all acceptance criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("{} acceptance check(s) failed", h.failures);
        ExitCode::FAILURE
    }
}
