//! Brute-force number theory. Everything here is deliberately naive so it
//! can serve as an oracle for the series engine: nothing in this module
//! calls into [`crate::series`].

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("kronecker symbol (0|0) is undefined")]
    ZeroZero,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}

/// Kronecker symbol `(a|n)`, with the usual supplements at `n = 2` and `n = -1`.
pub fn kronecker(a: i64, n: i64) -> Result<i8, ArithError> {
    if a == 0 && n == 0 {
        return Err(ArithError::ZeroZero);
    }
    if n == 0 {
        return Ok(if a == 1 || a == -1 { 1 } else { 0 });
    }
    let mut result: i8 = 1;
    let mut n = n;
    if n < 0 {
        n = -n;
        if a < 0 {
            result = -result;
        }
    }
    let twos = n.trailing_zeros();
    if twos > 0 {
        if a % 2 == 0 {
            return Ok(0);
        }
        n >>= twos;
        let r = a.rem_euclid(8);
        if twos % 2 == 1 && (r == 3 || r == 5) {
            result = -result;
        }
    }
    Ok(result * jacobi(a, n))
}

/// Jacobi symbol for odd positive `n`.
fn jacobi(a: i64, n: i64) -> i8 {
    debug_assert!(n > 0 && n % 2 == 1);
    let mut a = a.rem_euclid(n);
    let mut n = n;
    let mut result: i8 = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

const BERNOULLI_TABLE: usize = 96;

fn bernoulli_table() -> &'static [BigRational] {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| bernoulli_upto(BERNOULLI_TABLE))
}

fn bernoulli_upto(len: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(len);
    for m in 0..len {
        if m == 0 {
            b.push(BigRational::one());
            continue;
        }
        // sum_{k=0}^{m} C(m+1, k) B_k = 0
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// Bernoulli number `B_k` with `B_1 = -1/2`.
pub fn bernoulli(k: usize) -> BigRational {
    let table = bernoulli_table();
    if k < table.len() {
        table[k].clone()
    } else {
        bernoulli_upto(k + 1).pop().expect("nonempty")
    }
}

/// Number of divisors `d` of `n` with `d ≡ k (mod modulus)`.
pub fn divisor_class_count(n: u64, k: u64, modulus: u64) -> Result<u64, ArithError> {
    if n < 1 {
        return Err(ArithError::OutOfRange(format!("n = {n} must be positive")));
    }
    if modulus == 0 {
        return Err(ArithError::OutOfRange("modulus must be positive".into()));
    }
    Ok((1..=n).filter(|d| n % d == 0 && d % modulus == k % modulus).count() as u64)
}

/// Divisor power sum `σ_k(n)`.
pub fn sigma(n: u64, k: u32) -> BigInt {
    let mut acc = BigInt::zero();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            acc += BigInt::from(d).pow(k);
            let e = n / d;
            if e != d {
                acc += BigInt::from(e).pow(k);
            }
        }
        d += 1;
    }
    acc
}

fn check_k(k: usize) -> Result<(), ArithError> {
    if (1..=8).contains(&k) {
        Ok(())
    } else {
        Err(ArithError::OutOfRange(format!("k = {k} must lie in 1..=8")))
    }
}

fn count_squares(n: u64, k: usize) -> u64 {
    if k == 0 {
        return u64::from(n == 0);
    }
    let mut total = 0;
    let mut x: u64 = 0;
    while x * x <= n {
        let sub = count_squares(n - x * x, k - 1);
        total += if x == 0 { sub } else { 2 * sub };
        x += 1;
    }
    total
}

fn count_triangular(n: u64, k: usize) -> u64 {
    if k == 0 {
        return u64::from(n == 0);
    }
    let mut total = 0;
    let mut m: u64 = 0;
    while m * (m + 1) / 2 <= n {
        total += count_triangular(n - m * (m + 1) / 2, k - 1);
        m += 1;
    }
    total
}

/// Convolve `k` copies of a one-variable indicator array up to `max_n`.
fn convolve_powers(base: &[u64], k: usize) -> Vec<u64> {
    let len = base.len();
    let mut acc = vec![0u64; len];
    acc[0] = 1;
    for _ in 0..k {
        let mut next = vec![0u64; len];
        for (i, &a) in acc.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in base[..len - i].iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    acc
}

/// `r_k(n)` for `0 ≤ n ≤ max_n`, by convolving the one-square array `k` times.
pub fn rep_squares_table(max_n: usize, k: usize) -> Result<Vec<u64>, ArithError> {
    check_k(k)?;
    let mut base = vec![0u64; max_n + 1];
    let mut x = 0usize;
    while x * x <= max_n {
        base[x * x] += if x == 0 { 1 } else { 2 };
        x += 1;
    }
    Ok(convolve_powers(&base, k))
}

/// `t_k(n)` for `0 ≤ n ≤ max_n`, by convolving the one-triangle array `k` times.
pub fn rep_triangular_table(max_n: usize, k: usize) -> Result<Vec<u64>, ArithError> {
    check_k(k)?;
    let mut base = vec![0u64; max_n + 1];
    let mut m = 0usize;
    while m * (m + 1) / 2 <= max_n {
        base[m * (m + 1) / 2] += 1;
        m += 1;
    }
    Ok(convolve_powers(&base, k))
}

/// Number of ways to write `n` as an ordered sum of `k` signed squares.
///
/// Up to four squares the count is a direct lattice enumeration; above that
/// it is read off the convolution table.
pub fn rep_squares(n: u64, k: usize) -> Result<u64, ArithError> {
    check_k(k)?;
    if k <= 4 {
        Ok(count_squares(n, k))
    } else {
        Ok(rep_squares_table(n as usize, k)?[n as usize])
    }
}

/// Number of ways to write `n` as an ordered sum of `k` triangular numbers.
pub fn rep_triangular(n: u64, k: usize) -> Result<u64, ArithError> {
    check_k(k)?;
    if k <= 4 {
        Ok(count_triangular(n, k))
    } else {
        Ok(rep_triangular_table(n as usize, k)?[n as usize])
    }
}

/// Dense integer polynomial in `q`, truncated: index `i` holds the
/// coefficient of `q^i` and the length is `order + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensePoly {
    pub coeffs: Vec<BigInt>,
}

impl DensePoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        DensePoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        DensePoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 + sign·q^k`, padded to the given order.
    pub fn binomial(order: usize, k: usize, sign: i64) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::one();
        if k <= order {
            coeffs[k] += BigInt::from(sign);
        }
        DensePoly { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

/// Schoolbook product, truncated to the shorter operand.
pub fn oracle_poly_mul(a: &DensePoly, b: &DensePoly) -> DensePoly {
    let len = a.coeffs.len().min(b.coeffs.len());
    let mut out = vec![BigInt::zero(); len];
    for i in 0..len {
        if a.coeffs[i].is_zero() {
            continue;
        }
        for j in 0..len - i {
            out[i + j] += &a.coeffs[i] * &b.coeffs[j];
        }
    }
    DensePoly { coeffs: out }
}

/// `Σ_{k=1}^{m-1} (k|m) e^{2πikh/m}`.
pub fn gauss_sum(m: i64, h: i64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 1..m {
        let chi = f64::from(kronecker(k, m).unwrap_or(0));
        if chi != 0.0 {
            let angle = 2.0 * std::f64::consts::PI * ((k * h).rem_euclid(m)) as f64 / m as f64;
            acc += Complex64::from_polar(chi, angle);
        }
    }
    acc
}

/// `n` is a perfect square (as a non-negative integer).
pub fn is_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker(1, 9), Ok(1));
        assert_eq!(kronecker(2, 5), Ok(-1));
        assert_eq!(kronecker(12, 7), Ok(-1));
        assert_eq!(kronecker(0, 0), Err(ArithError::ZeroZero));
        // (-4|n) is the nontrivial character mod 4.
        let chi: Vec<i8> = (1..=8).map(|n| kronecker(-4, n).unwrap()).collect();
        assert_eq!(chi, vec![1, 0, -1, 0, 1, 0, -1, 0]);
        // (12|n) is supported on n ≡ ±1 mod 6 with sign by n mod 12.
        let chi: Vec<i8> = [1, 5, 7, 11, 2, 3].iter().map(|&n| kronecker(12, n).unwrap()).collect();
        assert_eq!(chi, vec![1, -1, -1, 1, 0, 0]);
    }

    #[test]
    fn legendre_matches_euler_criterion() {
        for p in [3i64, 5, 7, 11, 13, 17] {
            for a in 0..p {
                let e = num_bigint::BigInt::from(a).modpow(&BigInt::from((p - 1) / 2), &BigInt::from(p));
                let expected = if a == 0 {
                    0
                } else if e == BigInt::one() {
                    1
                } else {
                    -1
                };
                assert_eq!(kronecker(a, p).unwrap(), expected, "({a}|{p})");
            }
        }
    }

    #[test]
    fn bernoulli_examples() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(bernoulli(0), r(1, 1));
        assert_eq!(bernoulli(1), r(-1, 2));
        assert_eq!(bernoulli(2), r(1, 6));
        assert_eq!(bernoulli(3), r(0, 1));
        assert_eq!(bernoulli(4), r(-1, 30));
        assert_eq!(bernoulli(12), r(-691, 2730));
        assert_eq!(bernoulli(30), r(8615841276005, 14322));
        assert_eq!(bernoulli(100), bernoulli_upto(101)[100]);
    }

    #[test]
    fn divisor_counts() {
        assert_eq!(divisor_class_count(5, 1, 4), Ok(2));
        assert_eq!(divisor_class_count(9, 3, 4), Ok(1));
        assert_eq!(divisor_class_count(1, 1, 4), Ok(1));
        assert!(divisor_class_count(0, 1, 4).is_err());
        assert_eq!(sigma(12, 1), BigInt::from(28));
        assert_eq!(sigma(2, 3), BigInt::from(9));
    }

    #[test]
    fn representation_counts() {
        assert_eq!(rep_squares(5, 2), Ok(8));
        assert_eq!(rep_squares(9, 2), Ok(4));
        assert_eq!(rep_triangular(3, 2), Ok(2));
        assert_eq!(rep_squares(1, 8), Ok(16));
        assert!(rep_squares(1, 9).is_err());
        assert!(rep_triangular(1, 0).is_err());
        let table = rep_squares_table(60, 3).unwrap();
        for n in 0..=60u64 {
            assert_eq!(table[n as usize], count_squares(n, 3));
        }
        let table = rep_triangular_table(60, 4).unwrap();
        for n in 0..=60u64 {
            assert_eq!(table[n as usize], count_triangular(n, 4));
        }
    }

    #[test]
    fn poly_mul_examples() {
        let a = DensePoly::from_i64(&[1, -1, 0, 0]);
        let b = DensePoly::from_i64(&[1, 1, 1, 0]);
        assert_eq!(oracle_poly_mul(&a, &b), DensePoly::from_i64(&[1, 0, 0, -1]));
    }

    #[test]
    fn gauss_sum_values() {
        for m in [5, 13, 17] {
            for h in 1..=6 {
                let g = gauss_sum(m, h);
                let expect = f64::from(kronecker(h, m).unwrap()) * (m as f64).sqrt();
                assert!((g - Complex64::new(expect, 0.0)).norm() < 1e-10);
            }
        }
    }
}
