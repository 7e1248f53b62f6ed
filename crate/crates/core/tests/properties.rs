//! Property tests for the series algebra, numeric evaluation and arithmetic
//! helpers.

use std::f64::consts::PI;

use proptest::prelude::*;
use qtheta::arith::{kronecker, rep_squares_table};
use qtheta::builders::eta;
use qtheta::numeric::{
    eisenstein, eta as nv_eta, eval_series, half_periods, qpow, theta, wp, EisensteinKind, EvalConfig, EvalPoint, C64,
};
use qtheta::registry::{record_rng, scaled_residual, verify_identity, Overrides, Status};
use qtheta::series::{int, Series};
use qtheta::{QExp, QSeries};
use rand::Rng;

const ORDER: i64 = 14;

fn series(coeffs: &[i64], unit: bool) -> QSeries {
    let terms = coeffs.iter().enumerate().map(|(k, &c)| {
        let c = if unit && k == 0 { 1 } else { c };
        (QExp::int(k as i64), int(c))
    });
    Series::from_terms(terms, QExp::int(ORDER))
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, ORDER as usize)
}

fn equal(a: &QSeries, b: &QSeries) -> bool {
    a.compare(b).is_equal()
}

fn tau() -> impl Strategy<Value = C64> {
    (-0.45f64..0.45, 0.8f64..1.6).prop_map(|(re, im)| C64::new(re, im))
}

fn point() -> impl Strategy<Value = C64> {
    (-1.5f64..1.5, -0.25f64..0.25).prop_map(|(re, im)| C64::new(re, im))
}

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative_and_commutative(a in coeffs(), b in coeffs(), c in coeffs()) {
        let (a, b, c) = (series(&a, false), series(&b, false), series(&c, false));
        prop_assert!(equal(&(&(&a * &b) * &c), &(&a * &(&b * &c))));
        prop_assert!(equal(&(&a * &b), &(&b * &a)));
    }

    #[test]
    fn multiplication_matches_schoolbook_convolution(a in coeffs(), b in coeffs()) {
        let product = &series(&a, false) * &series(&b, false);
        for n in 0..ORDER as usize {
            let want: i64 = (0..=n).map(|k| a[k] * b[n - k]).sum();
            prop_assert_eq!(product.coefficient(QExp::int(n as i64)).unwrap(), int(want));
        }
    }

    #[test]
    fn inverse_is_two_sided(a in coeffs()) {
        let a = series(&a, true);
        let inv = a.invert().unwrap();
        prop_assert!(equal(&(&a * &inv), &Series::one(QExp::int(ORDER))));
    }

    #[test]
    fn powers_agree_with_repeated_products(a in coeffs(), k in 0i64..5) {
        let a = series(&a, true);
        let mut acc = Series::one(QExp::int(ORDER));
        for _ in 0..k {
            acc = &acc * &a;
        }
        prop_assert!(equal(&a.pow(k).unwrap(), &acc));
        let inv = a.invert().unwrap();
        prop_assert!(equal(&a.pow(-k).unwrap(), &inv.pow(k).unwrap()));
    }

    #[test]
    fn square_root_squares_back(a in coeffs()) {
        let a = series(&a, true);
        let r = a.sqrt().unwrap();
        prop_assert!(equal(&(&r * &r), &a));
    }

    #[test]
    fn log_turns_products_into_sums(a in coeffs(), b in coeffs()) {
        let (a, b) = (series(&a, true), series(&b, true));
        let lhs = (&a * &b).log().unwrap();
        let rhs = &a.log().unwrap() + &b.log().unwrap();
        prop_assert!(equal(&lhs, &rhs));
    }

    #[test]
    fn derivative_obeys_leibniz(a in coeffs(), b in coeffs()) {
        let (a, b) = (series(&a, false), series(&b, false));
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
        prop_assert!(equal(&lhs, &rhs));
    }

    #[test]
    fn theta_quasi_periodicity(z in point(), t in tau()) {
        let c = cfg();
        let th = |j: u8, w: C64| theta(j, EvalPoint::new(w, t), &c).unwrap();
        let shift = qpow(t, -0.5) * (C64::new(0.0, -2.0) * z).exp();
        let pi_tau = t * PI;
        prop_assert!(scaled_residual(th(1, z + PI), -th(1, z)) < 1e-11);
        prop_assert!(scaled_residual(th(1, z + pi_tau), -shift * th(1, z)) < 1e-11);
        prop_assert!(scaled_residual(th(2, z + pi_tau), shift * th(2, z)) < 1e-11);
        prop_assert!(scaled_residual(th(3, z + pi_tau), shift * th(3, z)) < 1e-11);
        prop_assert!(scaled_residual(th(4, z + pi_tau), -shift * th(4, z)) < 1e-11);
        prop_assert!(scaled_residual(th(1, z + PI / 2.0), th(2, z)) < 1e-11);
        prop_assert!(scaled_residual(th(4, z + PI / 2.0), th(3, z)) < 1e-11);
    }

    #[test]
    fn jacobi_quartic_relation(t in tau()) {
        let c = cfg();
        let n = |j: u8| theta(j, EvalPoint::new(C64::new(0.0, 0.0), t), &c).unwrap().powi(4);
        prop_assert!(scaled_residual(n(3), n(2) + n(4)) < 1e-12);
    }

    #[test]
    fn exact_eta_matches_numeric_eta(t in tau()) {
        let exact = eval_series(&eta(QExp::int(80), QExp::int(1)), t);
        let numeric = nv_eta(t, &cfg()).unwrap();
        prop_assert!((exact - numeric).norm() < 1e-12);
    }

    #[test]
    fn m_is_real_and_at_least_one_on_the_imaginary_axis(y in 0.8f64..3.0) {
        let m = eisenstein(EisensteinKind::M, C64::new(0.0, y), &cfg()).unwrap();
        prop_assert!(m.im.abs() < 1e-12 && m.re >= 1.0);
    }

    #[test]
    fn wp_is_even_and_half_period_values_sum_to_zero(z in point(), t in tau()) {
        prop_assume!(z.norm() > 0.3);
        let c = cfg();
        if let (Ok(a), Ok(b)) = (wp(EvalPoint::new(z, t), &c), wp(EvalPoint::new(-z, t), &c)) {
            prop_assert!(scaled_residual(a, b) < 1e-10);
        }
        let e = half_periods(t, &c).unwrap();
        prop_assert!(scaled_residual(e.e1 + e.e2 + e.e3, C64::new(0.0, 0.0)) < 1e-10);
    }

    #[test]
    fn kronecker_is_multiplicative(a in -60i64..60, b in -60i64..60, m in 1i64..40, n in 1i64..40) {
        let k = |x: i64, y: i64| i64::from(kronecker(x, y).unwrap());
        prop_assert_eq!(k(a * b, n), k(a, n) * k(b, n));
        prop_assert_eq!(k(a, m * n), k(a, m) * k(a, n));
    }

    #[test]
    fn exact_records_pass_at_every_order(order in 1i64..60) {
        let overrides = Overrides { order: Some(order), ..Overrides::default() };
        for id in ["euler_pentagonal", "jacobi_quartic_null", "theta1prime_2eta3"] {
            let v = verify_identity(id, &overrides, &cfg()).unwrap();
            prop_assert_eq!(v.status, Status::Pass);
            prop_assert_eq!(v.order, Some(order));
        }
    }

    #[test]
    fn numeric_verdicts_depend_only_on_the_seed(seed in any::<u64>()) {
        let c = EvalConfig { seed, ..cfg() };
        let first = verify_identity("sigma_addition", &Overrides::default(), &c).unwrap();
        let second = verify_identity("sigma_addition", &Overrides::default(), &c).unwrap();
        prop_assert_eq!(first.max_abs_residual, second.max_abs_residual);
        let draw = |id: &str| record_rng(id, seed).gen::<u64>();
        prop_assert_eq!(draw("wp_cubic"), draw("wp_cubic"));
        prop_assert_ne!(draw("wp_cubic"), draw("wp_factored"));
    }
}

#[test]
fn square_representations_match_enumeration() {
    for k in 1..=4usize {
        let table = rep_squares_table(60, k).unwrap();
        let mut count = vec![0u64; 61];
        let side = 8i64;
        let mut idx = vec![-side; k];
        loop {
            let s: i64 = idx.iter().map(|x| x * x).sum();
            if s <= 60 {
                count[s as usize] += 1;
            }
            let mut pos = 0;
            while pos < k && idx[pos] == side {
                idx[pos] = -side;
                pos += 1;
            }
            if pos == k {
                break;
            }
            idx[pos] += 1;
        }
        assert_eq!(table, count, "r_{k}");
    }
}
