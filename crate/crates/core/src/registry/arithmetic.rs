//! Series coefficients against divisor-sum formulas and brute-force counts.

use num_bigint::BigInt;

use super::{Check, CheckError, Record};
use crate::arith::{divisor_class_count, oracle_poly_mul, rep_squares_table, rep_triangular_table, sigma, DensePoly};
use crate::builders::{euler_product, phi, psi};
use crate::series::{int, QExp, QSeries, Rational};

type Tables = Result<Vec<(&'static str, Vec<Rational>, Vec<Rational>)>, CheckError>;

fn rec(
    id: &'static str,
    label: &'static str,
    anchor: Option<&'static str>,
    range: usize,
    build: super::ArithmeticCheck,
) -> Record {
    Record {
        id,
        section: "quintuple",
        paper_label: label,
        anchor,
        note: None,
        check: Check::Arithmetic { range, build },
    }
}

/// Coefficients of `q⁰ … q^n`.
fn coefficients(s: &QSeries, n: usize) -> Result<Vec<Rational>, CheckError> {
    (0..=n).map(|k| Ok(s.coefficient(QExp::int(k as i64))?)).collect()
}

fn counts(v: Vec<u64>) -> Vec<Rational> {
    v.into_iter().map(|c| Rational::from_integer(BigInt::from(c))).collect()
}

fn big(b: BigInt) -> Rational {
    Rational::from_integer(b)
}

fn order(n: usize) -> QExp {
    QExp::int(n as i64 + 1)
}

fn r2(n: usize) -> Tables {
    let series = coefficients(&phi(order(n), QExp::ONE).pow(2)?, n)?;
    let mut formula = vec![int(1)];
    for m in 1..=n as u64 {
        let d1 = divisor_class_count(m, 1, 4)? as i64;
        let d3 = divisor_class_count(m, 3, 4)? as i64;
        formula.push(int(4 * (d1 - d3)));
    }
    let brute = counts(rep_squares_table(n, 2)?);
    Ok(vec![("phi^2 vs 4(d1 - d3)", series.clone(), formula), ("phi^2 vs enumeration", series, brute)])
}

fn t2(n: usize) -> Tables {
    let series = coefficients(&psi(order(n), QExp::ONE).pow(2)?, n)?;
    let mut formula = Vec::new();
    for m in 0..=n as u64 {
        let d1 = divisor_class_count(4 * m + 1, 1, 4)? as i64;
        let d3 = divisor_class_count(4 * m + 1, 3, 4)? as i64;
        formula.push(int(d1 - d3));
    }
    let brute = counts(rep_triangular_table(n, 2)?);
    Ok(vec![("psi^2 vs d1(4n+1) - d3(4n+1)", series.clone(), formula), ("psi^2 vs enumeration", series, brute)])
}

fn r4(n: usize) -> Tables {
    let series = coefficients(&phi(order(n), QExp::ONE).pow(4)?, n)?;
    let mut formula = vec![int(1)];
    for m in 1..=n as i64 {
        let s: i64 = (1..=m).filter(|d| m % d == 0 && d % 4 != 0).sum();
        formula.push(int(8 * s));
    }
    let brute = counts(rep_squares_table(n, 4)?);
    Ok(vec![
        ("phi^4 vs 8 sum of d, 4 not dividing d", series.clone(), formula),
        ("phi^4 vs enumeration", series, brute),
    ])
}

fn r8(n: usize) -> Tables {
    let series = coefficients(&phi(order(n), QExp::ONE).pow(8)?, n)?;
    let mut formula = vec![int(1)];
    for m in 1..=n as i64 {
        let s: i64 = (1..=m).filter(|d| m % d == 0).map(|d| if (m + d) % 2 == 0 { d.pow(3) } else { -d.pow(3) }).sum();
        formula.push(int(16 * s));
    }
    let brute = counts(rep_squares_table(n, 8)?);
    // σ₃ cross-check of the sign pattern: r₈(n) = 16σ₃(n) for odd n
    for m in (1..=n).step_by(2) {
        if formula[m] != big(sigma(m as u64, 3) * 16) {
            return Err(CheckError::Invalid(format!("r8 formula disagrees with 16σ3 at odd n = {m}")));
        }
    }
    Ok(vec![("phi^8 vs 16 sum (-1)^(n+d) d^3", series.clone(), formula), ("phi^8 vs enumeration", series, brute)])
}

fn pentagonal(n: usize) -> Tables {
    let series = coefficients(&euler_product(order(n), QExp::ONE), n)?;
    let mut poly = DensePoly::binomial(n, 0, 0);
    for k in 1..=n {
        poly = oracle_poly_mul(&poly, &DensePoly::binomial(n, k, -1));
    }
    let product: Vec<Rational> = poly.coeffs.into_iter().map(big).collect();
    let mut signs = vec![int(0); n + 1];
    let mut k: i64 = 0;
    loop {
        let mut hit = false;
        for m in [k, -k] {
            let e = m * (3 * m - 1) / 2;
            if (0..=n as i64).contains(&e) {
                signs[e as usize] = int(if k % 2 == 0 { 1 } else { -1 });
                hit = true;
            }
        }
        if !hit && k > 0 {
            break;
        }
        k += 1;
    }
    Ok(vec![("product vs dense oracle", series.clone(), product), ("product vs pentagonal signs", series, signs)])
}

pub(super) fn records() -> Vec<Record> {
    vec![
        rec("r2_counts", "jacsquare:eqn4", Some("as a sum of two squares"), 500, r2),
        rec("t2_counts", "jacsquare:eqn11", None, 300, t2),
        rec("r4_counts", "liuthm", Some("Jacobi four-square identity"), 200, r4),
        rec("r8_counts", "KR:eqn20", Some("sums of eight squares"), 100, r8),
        rec("pentagonal_signs", "newf:eqn4", Some("Euler's pentagonal number theorem"), 200, pentagonal),
    ]
}
