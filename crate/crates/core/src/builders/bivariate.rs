//! Theta functions as series in `q` with Laurent coefficients in `u = e^{iz}`.
//!
//! `θ1` carries a factor `-i`, so bivariate values are stored as
//! `i^phase · series` with rational Laurent coefficients.

use crate::series::{int, EqualityOutcome, Laurent, LaurentSeries, QExp, QSeries, Rational, SeriesError};

/// Power of `i` multiplying a series, kept modulo 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn new(k: i64) -> Self {
        Phase(k.rem_euclid(4) as u8)
    }

    pub fn power(self) -> u8 {
        self.0
    }

    fn plus(self, o: Phase) -> Phase {
        Phase((self.0 + o.0) % 4)
    }
}

/// `i^phase · series`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bivariate {
    phase: Phase,
    series: LaurentSeries,
}

impl Bivariate {
    pub fn new(phase: Phase, series: LaurentSeries) -> Self {
        Bivariate { phase, series }
    }

    pub fn real(series: LaurentSeries) -> Self {
        Bivariate::new(Phase::ONE, series)
    }

    pub fn from_q(series: &QSeries) -> Self {
        Bivariate::real(series.to_laurent())
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn series(&self) -> &LaurentSeries {
        &self.series
    }

    pub fn order(&self) -> QExp {
        self.series.order()
    }

    pub fn truncate(&self, order: QExp) -> Bivariate {
        Bivariate::new(self.phase, self.series.truncate(order))
    }

    /// Rewrite with phase `target`, when it differs from the current phase by a sign.
    fn aligned(&self, target: Phase) -> Result<LaurentSeries, SeriesError> {
        match (4 + target.0 - self.phase.0) % 4 {
            0 => Ok(self.series.clone()),
            2 => Ok(-&self.series),
            _ => Err(SeriesError::Unsupported(format!(
                "cannot combine i^{} and i^{} parts with rational coefficients",
                self.phase.0, target.0
            ))),
        }
    }

    pub fn add(&self, o: &Bivariate) -> Result<Bivariate, SeriesError> {
        Ok(Bivariate::new(self.phase, &self.series + &o.aligned(self.phase)?))
    }

    pub fn sub(&self, o: &Bivariate) -> Result<Bivariate, SeriesError> {
        Ok(Bivariate::new(self.phase, &self.series - &o.aligned(self.phase)?))
    }

    pub fn mul(&self, o: &Bivariate) -> Bivariate {
        Bivariate::new(self.phase.plus(o.phase), &self.series * &o.series)
    }

    pub fn neg(&self) -> Bivariate {
        Bivariate::new(self.phase, -&self.series)
    }

    pub fn times_i(&self, k: i64) -> Bivariate {
        Bivariate::new(self.phase.plus(Phase::new(k)), self.series.clone())
    }

    pub fn scale(&self, r: &Rational) -> Bivariate {
        Bivariate::new(self.phase, self.series.scale(r))
    }

    /// Multiply by `q^e u^k`.
    pub fn monomial_shift(&self, e: QExp, k: i64) -> Bivariate {
        Bivariate::new(self.phase, self.series.shift(e).shift_u(k))
    }

    pub fn invert(&self) -> Result<Bivariate, SeriesError> {
        Ok(Bivariate::new(Phase::new(-i64::from(self.phase.0)), self.series.invert()?))
    }

    /// `z ↦ z + π`, i.e. `u ↦ -u`.
    pub fn shift_z_by_pi(&self) -> Bivariate {
        Bivariate::new(self.phase, self.series.map_u(Laurent::flip_sign))
    }

    /// `z ↦ z + π/2`, i.e. `u ↦ iu`. Needs every `u`-degree to share one parity
    /// so the factor `i^k` splits into a global phase and a sign.
    pub fn shift_z_by_half_pi(&self) -> Result<Bivariate, SeriesError> {
        let mut parity = None;
        for (_, c) in self.series.terms() {
            match (parity, c.parity()) {
                (_, None) => {}
                (None, p) => parity = p,
                (Some(a), Some(b)) if a == b => {}
                _ => return Err(SeriesError::Unsupported("mixed u-degree parity".into())),
            }
        }
        let parity = parity.unwrap_or(0);
        let sign = |k: i64| if ((k - parity) / 2).rem_euclid(2) == 0 { int(1) } else { int(-1) };
        let series = self.series.map_u(|c| Laurent::from_terms(c.terms().map(|(k, x)| (k, x * sign(k)))));
        Ok(Bivariate::new(self.phase.plus(Phase::new(parity)), series))
    }

    pub fn compare(&self, o: &Bivariate) -> Result<EqualityOutcome<Laurent>, SeriesError> {
        Ok(self.series.compare(&o.aligned(self.phase)?))
    }
}

/// `θ_j(m·z + r·πτ | c·τ)` as a bivariate series known below `order`.
///
/// With `k` running over odd integers (j = 1, 2) or even integers (j = 3, 4)
/// the defining sums read `Σ ε_k q^{c k²/8 + r k/2} u^{m k}`, where the
/// `πτ` shift contributes `e^{ikrπτ} = q^{rk/2}`.
pub fn theta_bivariate(j: u8, order: QExp, c: QExp, m: i64, r: QExp) -> Result<Bivariate, SeriesError> {
    if !(1..=4).contains(&j) {
        return Err(SeriesError::Unsupported(format!("no theta function θ{j}")));
    }
    if c <= QExp::ZERO {
        return Err(SeriesError::NonPositiveScale(c));
    }
    let odd = j <= 2;
    let exponent = |k: i64| c * QExp::new(k * k, 8) + r * QExp::new(k, 2);
    // Beyond |k| > bound the exponent exceeds `order`.
    let (cf, rf, of) = (c.to_f64(), r.to_f64().abs(), order.to_f64());
    let bound = ((rf / 2.0 + (rf * rf / 4.0 + cf * of.max(0.0) / 2.0).sqrt()) / (cf / 4.0)).ceil() as i64 + 4;
    let mut terms = Vec::new();
    for k in -bound..=bound {
        if (k.rem_euclid(2) == 1) != odd {
            continue;
        }
        let e = exponent(k);
        if e >= order {
            continue;
        }
        let sign = match j {
            1 => {
                if ((k - 1) / 2).rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                }
            }
            4 => {
                if (k / 2).rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                }
            }
            _ => 1,
        };
        terms.push((e, Laurent::monomial(m * k, int(sign))));
    }
    let phase = if j == 1 { Phase::MINUS_I } else { Phase::ONE };
    Ok(Bivariate::new(phase, LaurentSeries::from_terms(terms, order)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta1_head() {
        let t = theta_bivariate(1, QExp::int(2), QExp::ONE, 1, QExp::ZERO).unwrap();
        assert_eq!(t.phase(), Phase::MINUS_I);
        let (e, c) = t.series().leading().unwrap();
        assert_eq!(e, QExp::new(1, 8));
        assert_eq!(*c, Laurent::from_terms([(1, int(1)), (-1, int(-1))]));
    }

    #[test]
    fn half_pi_shift_takes_theta1_to_theta2() {
        let order = QExp::int(12);
        let t1 = theta_bivariate(1, order, QExp::ONE, 1, QExp::ZERO).unwrap();
        let t2 = theta_bivariate(2, order, QExp::ONE, 1, QExp::ZERO).unwrap();
        assert!(t1.shift_z_by_half_pi().unwrap().compare(&t2).unwrap().is_equal());
    }

    #[test]
    fn mixed_phases_do_not_add() {
        let order = QExp::int(3);
        let t1 = theta_bivariate(1, order, QExp::ONE, 1, QExp::ZERO).unwrap();
        let t3 = theta_bivariate(3, order, QExp::ONE, 1, QExp::ZERO).unwrap();
        assert!(t1.add(&t3).is_err());
        assert!(t1.add(&t1.times_i(2)).unwrap().series().is_empty());
    }
}
