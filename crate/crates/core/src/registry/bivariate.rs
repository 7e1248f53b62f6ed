//! Identities in `q` and `u = e^{iz}`, compared as exact bivariate series.

use super::{Check, Record};
use crate::arith::kronecker;
use crate::builders::{eta, euler_product, theta_bivariate, Bivariate, Phase};
use crate::series::{int, Laurent, LaurentSeries, QExp, SeriesError};

type Instances = Result<Vec<(&'static str, Bivariate, Bivariate)>, SeriesError>;

fn rec(
    id: &'static str,
    label: &'static str,
    anchor: Option<&'static str>,
    note: Option<&'static str>,
    build: super::BivariateBuild,
) -> Record {
    Record { id, section: "quintuple", paper_label: label, anchor, note, check: Check::Bivariate { order: 25, build } }
}

fn theta(j: u8, o: QExp, m: i64) -> Result<Bivariate, SeriesError> {
    theta_bivariate(j, o, QExp::ONE, m, QExp::ZERO)
}

fn laurent(terms: &[(i64, i64)]) -> Laurent {
    Laurent::from_terms(terms.iter().map(|&(k, c)| (k, int(c))))
}

/// `Σ_{n∈ℤ} (−1)ⁿ q^{n(n−1)/2} uⁿ`.
fn triple_sum(o: QExp) -> LaurentSeries {
    let bound = (2.0 * o.to_f64().max(0.0)).sqrt() as i64 + 2;
    let terms = (-bound..=bound).filter_map(|n| {
        let e = QExp::new(n * (n - 1), 2);
        let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
        (e < o).then(|| (e, Laurent::monomial(n, int(sign))))
    });
    LaurentSeries::from_terms(terms, o)
}

/// `pre · ∏_{n≥1} (1 − qⁿ)(1 + s·q^{n−δ}u²)(1 + s·q^{n−δ}u⁻²)`.
fn jacobi_product(o: QExp, pre: Laurent, s: i64, delta: QExp) -> LaurentSeries {
    let mut p = LaurentSeries::constant(pre, o);
    let mut n = 1;
    while QExp::int(n) - delta < o {
        let f = QExp::int(n);
        if f < o {
            p = p.mul_binomial(&laurent(&[(0, -1)]), f);
        }
        p = p.mul_binomial(&laurent(&[(2, s)]), f - delta);
        p = p.mul_binomial(&laurent(&[(-2, s)]), f - delta);
        n += 1;
    }
    p
}

fn triple_product(o: QExp) -> Instances {
    let mut lhs = LaurentSeries::constant(laurent(&[(0, 1), (1, -1)]), o);
    for n in (1..).map(QExp::int).take_while(|e| *e < o) {
        lhs = lhs.mul_binomial(&laurent(&[(0, -1)]), n);
        lhs = lhs.mul_binomial(&laurent(&[(1, -1)]), n);
        lhs = lhs.mul_binomial(&laurent(&[(-1, -1)]), n);
    }
    Ok(vec![("product = sum", Bivariate::real(lhs), Bivariate::real(triple_sum(o)))])
}

fn theta_products(o: QExp) -> Instances {
    let eighth = QExp::new(1, 8);
    let half = QExp::new(1, 2);
    let t1 =
        Bivariate::new(Phase::MINUS_I, jacobi_product(o, laurent(&[(1, 1), (-1, -1)]), -1, QExp::ZERO).shift(eighth));
    let t2 = Bivariate::real(jacobi_product(o, laurent(&[(1, 1), (-1, 1)]), 1, QExp::ZERO).shift(eighth));
    let t3 = Bivariate::real(jacobi_product(o, laurent(&[(0, 1)]), 1, half));
    let t4 = Bivariate::real(jacobi_product(o, laurent(&[(0, 1)]), -1, half));
    Ok(vec![
        ("theta1", theta(1, o, 1)?, t1),
        ("theta2", theta(2, o, 1)?, t2),
        ("theta3", theta(3, o, 1)?, t3),
        ("theta4", theta(4, o, 1)?, t4),
    ])
}

/// `Σ_{n∈ℤ} (−1)ⁿ q^{n(3n+1)/2} (u^{6n+1} + u^{−6n−1})`.
fn quintuple_sum(o: QExp) -> LaurentSeries {
    let mut terms = Vec::new();
    let bound = (o.to_f64().max(0.0) * 2.0 / 3.0).sqrt() as i64 + 2;
    for n in -bound..=bound {
        let e = QExp::new(n * (3 * n + 1), 2);
        if e < o {
            let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
            terms.push((e, laurent(&[(6 * n + 1, sign), (-6 * n - 1, sign)])));
        }
    }
    LaurentSeries::from_terms(terms, o)
}

fn euler(o: QExp) -> Bivariate {
    Bivariate::from_q(&euler_product(o, QExp::ONE))
}

fn quintuple_kiepert(o: QExp) -> Instances {
    let lhs = Bivariate::real(quintuple_sum(o)).mul(&theta(1, o, 1)?);
    let rhs = euler(o).mul(&theta(1, o, 2)?);
    Ok(vec![("cosine sum times theta1(z)", lhs, rhs)])
}

fn quintuple_exp(o: QExp) -> Instances {
    let pi_tau = |j, c, m, r| theta_bivariate(j, o, QExp::int(c), m, QExp::int(r));
    let difference = |j, c, m| -> Result<Bivariate, SeriesError> {
        pi_tau(j, c, m, 1)?.monomial_shift(QExp::ZERO, 2).sub(&pi_tau(j, c, m, -1)?.monomial_shift(QExp::ZERO, -2))
    };
    let cubic = difference(1, 3, 3)?;
    let minus_eighth = -QExp::new(1, 8);
    let product_side = euler(o).mul(&theta(1, o, 2)?).times_i(1).monomial_shift(minus_eighth, 0);
    let sum_side = Bivariate::real(quintuple_sum(o)).times_i(1).monomial_shift(minus_eighth, 0);
    let quartic = difference(3, 4, 4)?;
    let theta1_double = theta(1, o, 2)?.times_i(1).monomial_shift(minus_eighth, 0);
    Ok(vec![
        ("exponential form, product", cubic.mul(&theta(1, o, 1)?), product_side),
        ("exponential form, sum", cubic, sum_side),
        ("theta3 at modulus 4", quartic, theta1_double),
    ])
}

fn quintuple_newform(o: QExp) -> Instances {
    let mut terms = Vec::new();
    let mut n: i64 = 1;
    while QExp::new(n * n, 24) < o {
        let k = i64::from(kronecker(12, n).unwrap_or(0));
        if k != 0 {
            terms.push((QExp::new(n * n, 24), laurent(&[(n, k), (-n, k)])));
        }
        n += 1;
    }
    let character_sum = Bivariate::real(LaurentSeries::from_terms(terms, o));
    let eta_theta = Bivariate::from_q(&eta(o, QExp::ONE)).mul(&theta(1, o, 2)?);

    // θ1(z ± 2π/3 | τ/3): the difference keeps u^k with weight 2i·sin(2πk/3) = i√3·(k|3)
    let third = theta_bivariate(1, o, QExp::new(1, 3), 1, QExp::ZERO)?;
    let twisted = third.series().map_u(|c| {
        Laurent::from_terms(c.terms().map(|(k, x)| (k, x * int(i64::from(kronecker(k.rem_euclid(3), 3).unwrap_or(0))))))
    });
    // −i · i · (twisted) = twisted, with √3 divided out
    let shifted_difference = Bivariate::real(twisted);
    Ok(vec![
        ("character sum", character_sum.mul(&theta(1, o, 1)?), eta_theta.clone()),
        ("shifted difference over sqrt 3", shifted_difference.mul(&theta(1, o, 1)?), eta_theta),
    ])
}

fn quasi_periodicity(o: QExp) -> Instances {
    let half = QExp::new(1, 2);
    let eighth = QExp::new(1, 8);
    let t: Vec<Bivariate> = (1..=4).map(|j| theta(j, o, 1)).collect::<Result<_, _>>()?;
    let at = |j: u8, r: QExp| theta_bivariate(j, o, QExp::ONE, 1, r);
    let mut out = Vec::new();
    for (j, label, flips) in
        [(1u8, "theta1(z+pi)", true), (2, "theta2(z+pi)", true), (3, "theta3(z+pi)", false), (4, "theta4(z+pi)", false)]
    {
        let lhs = t[usize::from(j - 1)].shift_z_by_pi();
        let rhs = if flips { t[usize::from(j - 1)].neg() } else { t[usize::from(j - 1)].clone() };
        out.push((label, lhs, rhs));
    }
    for (j, label, sign) in [
        (1u8, "theta1(z+pi tau)", -1),
        (2, "theta2(z+pi tau)", 1),
        (3, "theta3(z+pi tau)", 1),
        (4, "theta4(z+pi tau)", -1),
    ] {
        let shifted = at(j, QExp::ONE)?.monomial_shift(half, 2).scale(&int(sign));
        out.push((label, shifted, t[usize::from(j - 1)].clone()));
    }
    out.push(("theta1(z+pi/2)", t[0].shift_z_by_half_pi()?, t[1].clone()));
    out.push(("theta1(z+pi tau/2)", at(1, half)?, t[3].times_i(1).monomial_shift(-eighth, -1)));
    out.push(("theta1(z+(pi+pi tau)/2)", at(1, half)?.shift_z_by_half_pi()?, t[2].monomial_shift(-eighth, -1)));
    Ok(out)
}

pub(super) fn records() -> Vec<Record> {
    vec![
        rec("triple_product", "jabel:eqn3", Some("Jacobi triple product identity"), None, triple_product),
        rec("theta_products", "jabel:eqn4/infiniteprod", None, Some("product forms of θ1 through θ4"), theta_products),
        rec(
            "quintuple_kiepert",
            "KL:eqn2",
            Some("quintuple product identity"),
            Some("both sides multiplied by θ1(z|τ)"),
            quintuple_kiepert,
        ),
        rec(
            "quintuple_exp",
            "KL:eqn4/5/14",
            None,
            Some("the product form is multiplied through by θ1(z|τ)"),
            quintuple_exp,
        ),
        rec(
            "quintuple_newform",
            "newf:eqn1/2",
            None,
            Some("both sides multiplied by θ1(z|τ); the shifted difference is divided by √3"),
            quintuple_newform,
        ),
        rec("quasi_periodicity", "halfperiods", None, Some("shifts by π, πτ and the half periods"), quasi_periodicity),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triple_sum_has_no_repeats() {
        let s = triple_sum(QExp::int(4));
        // 1 − u at q⁰, −u⁻¹ + u² at q¹, u⁻²... at q³
        assert_eq!(s.coefficient(QExp::ZERO).unwrap(), laurent(&[(0, 1), (1, -1)]));
        assert_eq!(s.coefficient(QExp::ONE).unwrap(), laurent(&[(-1, -1), (2, 1)]));
    }
}
