//! Generating-function identities, checked as truncated power series in `t`.
//!
//! `Q_n` is `P_n` with the leading constant `C(i) = B^m [S^(i)]_m` of the
//! second hypergeometric form stripped, so that for `n = ml + i`
//! `Q_n = x^i 1F(-m; S^(i); -x^l/B)` (continuous) and
//! `Q_n = psi_i 1+lF(-m, Delta(l; -x+i); S^(i); (-1)^{l+1} l^l / B)` (discrete).

use std::f64::consts::PI;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{self, int, ComplexF, Rational};
use crate::hypergeom::{self, HypParams, ParamSplit};
use crate::operator;
use crate::par::Exec;
use crate::poly::Poly;
use crate::report::Report;
use crate::series::TruncatedSeries;
use crate::spec::{Kind, SystemSpec};

type Rs = TruncatedSeries<Rational>;

fn factorial(n: usize) -> Rational {
    Rational::from_integer(exact::factorial(n))
}

fn degenerate(split: &ParamSplit) -> Option<Error> {
    split
        .s_hat
        .iter()
        .find(|b| exact::pochhammer(b, split.m).is_zero())
        .map(|b| Error::DegenerateNormalization {
            param: b.clone(),
            m: split.m,
        })
}

/// `C(i)` for `n`, rejecting a vanishing constant.
pub fn normalizing_constant(spec: &SystemSpec, n: usize) -> Result<Rational> {
    let split = hypergeom::param_split(spec, n)?;
    match degenerate(&split) {
        Some(e) => Err(e),
        None => Ok(split.c),
    }
}

/// `Q_n = P_n / C(i)` in the natural basis.
pub fn normalize_q(spec: &SystemSpec, n: usize) -> Result<Poly> {
    let c = normalizing_constant(spec, n)?;
    Ok(operator::build_p(spec, n).scale(&c.recip()))
}

/// `Q_n(x)` for `n <= n_max`.
pub fn q_values(spec: &SystemSpec, x: &Rational, n_max: usize, exec: Exec) -> Result<Vec<Rational>> {
    let family = operator::build_family(spec, n_max, exec);
    family
        .iter()
        .enumerate()
        .map(|(n, p)| Ok(p.eval(x) / normalizing_constant(spec, n)?))
        .collect()
}

fn compare(report: &mut Report, what: &str, lhs: &Rs, rhs: &Rs) {
    if let Some(k) = lhs.first_difference(rhs) {
        report.violation(format!(
            "{what}: coefficient of t^{k} differs: {} vs {}",
            lhs.coeff(k),
            rhs.coeff(k)
        ));
    }
}

fn t_series(order: usize) -> Rs {
    Rs::monomial(order, 1, Rational::one())
}

/// Both sides of `sum_m t^m/m! p+1Fq(-m, (a); (b); u) = e^t pFq((a); (b); -u t)`.
pub fn exp_identity_sides(upper: &[Rational], lower: &[Rational], u: &Rational, order: usize) -> Result<(Rs, Rs)> {
    let mut lhs = Vec::with_capacity(order + 1);
    for m in 0..=order {
        let mut up = vec![int(-(m as i64))];
        up.extend_from_slice(upper);
        let f = hypergeom::pfq_terminating(&HypParams::new(up, lower.to_vec()), m)?;
        lhs.push(f.eval(u) / factorial(m));
    }
    let lhs = Rs::new(order, lhs);
    let inner = t_series(order).scale(&-u);
    let f = Rs::hypergeometric(&HypParams::new(upper.to_vec(), lower.to_vec()), &inner)?;
    let rhs = t_series(order).exp().mul(&f);
    Ok((lhs, rhs))
}

/// `sum_m t^m/m! 1Fq(-m; b; u) = e^t 0Fq(-; b; -u t)` through order `order`.
pub fn gf_exp_check(lower: &[Rational], u: &Rational, order: usize) -> Result<Report> {
    gf_exp_check_general(&[], lower, u, order)
}

/// The exponential identity with additional upper parameters.
pub fn gf_exp_check_general(upper: &[Rational], lower: &[Rational], u: &Rational, order: usize) -> Result<Report> {
    let mut report = Report::new("gf-exp")
        .param("upper", join(upper))
        .param("lower", join(lower))
        .param("u", u)
        .with_order(order);
    let (lhs, rhs) = exp_identity_sides(upper, lower, u, order)?;
    compare(&mut report, "exponential identity", &lhs, &rhs);
    Ok(report)
}

/// Both sides of
/// `sum_n p+1F_{q+1}(-n, (a); 1, (b); u) t^n = 1/(1-t) pFq((a); (b); -u t/(1-t))`.
pub fn srivastava_sides(upper: &[Rational], lower: &[Rational], u: &Rational, order: usize) -> Result<(Rs, Rs)> {
    let mut lhs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut up = vec![int(-(n as i64))];
        up.extend_from_slice(upper);
        let mut low = vec![Rational::one()];
        low.extend_from_slice(lower);
        lhs.push(hypergeom::pfq_terminating(&HypParams::new(up, low), n)?.eval(u));
    }
    let lhs = Rs::new(order, lhs);
    let geo = t_series(order).geometric();
    let inner = t_series(order).mul(&geo).scale(&-u);
    let f = Rs::hypergeometric(&HypParams::new(upper.to_vec(), lower.to_vec()), &inner)?;
    Ok((lhs, geo.mul(&f)))
}

/// The `a = 0` Srivastava-type identity through order `order`.
pub fn srivastava_check(upper: &[Rational], lower: &[Rational], u: &Rational, order: usize) -> Result<Report> {
    let mut report = Report::new("gf-srivastava")
        .param("upper", join(upper))
        .param("lower", join(lower))
        .param("u", u)
        .with_order(order);
    let (lhs, rhs) = srivastava_sides(upper, lower, u, order)?;
    compare(&mut report, "rational identity", &lhs, &rhs);
    Ok(report)
}

fn join(v: &[Rational]) -> String {
    format!("[{}]", v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(","))
}

fn require(spec: &SystemSpec, kind: Kind, i: usize) -> Result<()> {
    spec.require_pure_power()?;
    if spec.kind() != kind {
        return Err(Error::WrongKind {
            expected: kind.as_str(),
        });
    }
    if i >= spec.l() {
        return Err(Error::Precondition(format!("residue class {i} needs i < l = {}", spec.l())));
    }
    Ok(())
}

/// `sum_{ml+i <= order} t^{ml+i} weight(m) Q_{ml+i}(x)`.
fn class_series(qv: &[Rational], l: usize, i: usize, order: usize, weight: impl Fn(usize) -> Rational) -> Rs {
    Rs::from_fn(order, |n| {
        if n % l == i {
            &qv[n] * weight(n / l)
        } else {
            Rational::zero()
        }
    })
}

/// Lifts a series in `T = t^l` to `prefactor t^i F(t^l)`.
fn lift(f: &Rs, l: usize, i: usize, prefactor: &Rational, order: usize) -> Rs {
    f.substitute_power(l, order).shift(i).scale(prefactor)
}

fn class_order(order: usize, l: usize, i: usize) -> usize {
    order.saturating_sub(i) / l
}

/// `(t x)^i e^{t^l} 0F(-; S^(i); x^l t^l / B)`.
pub fn phi_series(spec: &SystemSpec, i: usize, x: &Rational, order: usize) -> Result<Rs> {
    require(spec, Kind::Continuous, i)?;
    let l = spec.l();
    if i > order {
        return Ok(Rs::zero(order));
    }
    let split = hypergeom::param_split(spec, i)?;
    let mo = class_order(order, l, i);
    let t = t_series(mo);
    let arg = t.scale(&(exact::pow(x, l) / &split.b));
    let f = Rs::hypergeometric(&HypParams::new(vec![], split.s_hat.clone()), &arg)?;
    Ok(lift(&t.exp().mul(&f), l, i, &exact::pow(x, i), order))
}

/// `(t x)^i / (1 - t^l) 1F(1; S^(i); (x^l/B) t^l / (1 - t^l))`.
pub fn rational_series(spec: &SystemSpec, i: usize, x: &Rational, order: usize) -> Result<Rs> {
    require(spec, Kind::Continuous, i)?;
    let l = spec.l();
    if i > order {
        return Ok(Rs::zero(order));
    }
    let split = hypergeom::param_split(spec, i)?;
    let mo = class_order(order, l, i);
    let t = t_series(mo);
    let geo = t.geometric();
    let arg = t.mul(&geo).scale(&(exact::pow(x, l) / &split.b));
    let f = Rs::hypergeometric(&HypParams::new(vec![Rational::one()], split.s_hat.clone()), &arg)?;
    Ok(lift(&geo.mul(&f), l, i, &exact::pow(x, i), order))
}

/// `sum_m t^{ml+i} Q_{ml+i}(x) / m! = Phi_i(x, t)` through order `order`.
pub fn gf_phi_check(spec: &SystemSpec, i: usize, x: &Rational, order: usize) -> Result<Report> {
    let rhs = phi_series(spec, i, x, order)?;
    let qv = q_values(spec, x, order, Exec::Sequential)?;
    let lhs = class_series(&qv, spec.l(), i, order, |m| factorial(m).recip());
    let mut report = gf_report("gf-phi", spec, Some(i), x, order);
    compare(&mut report, "Phi_i", &lhs, &rhs);
    Ok(report)
}

/// `sum_m t^{ml+i} Q_{ml+i}(x) = G_i(x, t)` through order `order`.
pub fn gf_rational_check(spec: &SystemSpec, i: usize, x: &Rational, order: usize) -> Result<Report> {
    let rhs = rational_series(spec, i, x, order)?;
    let qv = q_values(spec, x, order, Exec::Sequential)?;
    let lhs = class_series(&qv, spec.l(), i, order, |_| Rational::one());
    let mut report = gf_report("gf-rational", spec, Some(i), x, order);
    compare(&mut report, "G_i", &lhs, &rhs);
    Ok(report)
}

/// Whole-family forms: `sum_n t^n Q_n(x) / floor(n/l)! = sum_i Phi_i` and
/// `sum_n t^n Q_n(x) = sum_i G_i`.
pub fn gf_total_check(spec: &SystemSpec, x: &Rational, order: usize) -> Result<Report> {
    require(spec, Kind::Continuous, 0)?;
    let l = spec.l();
    let qv = q_values(spec, x, order, Exec::Sequential)?;
    let mut phi = Rs::zero(order);
    let mut rat = Rs::zero(order);
    for i in 0..l {
        phi = phi.add(&phi_series(spec, i, x, order)?);
        rat = rat.add(&rational_series(spec, i, x, order)?);
    }
    let lhs_phi = Rs::from_fn(order, |n| &qv[n] / factorial(n / l));
    let lhs_rat = Rs::new(order, qv.clone());
    let mut report = gf_report("gf-total", spec, None, x, order);
    compare(&mut report, "sum_i Phi_i", &lhs_phi, &phi);
    compare(&mut report, "sum_i G_i", &lhs_rat, &rat);
    Ok(report)
}

/// `l = 1` forms built directly from `alpha + 1`:
/// `sum t^n Q_n / n! = e^t 0F_d(-; (alpha+1); x t / B)` and
/// `sum t^n Q_n = 1/(1-t) 1F_d(1; (alpha+1); x t / (B (1-t)))`, `B = tau rho`.
pub fn gf_l1_check(spec: &SystemSpec, x: &Rational, order: usize) -> Result<Report> {
    require(spec, Kind::Continuous, 0)?;
    if spec.l() != 1 {
        return Err(Error::Precondition("needs q(G) = tau G".into()));
    }
    let b = spec.require_pure_power()? * spec.rho();
    let lower: Vec<Rational> = spec.alphas().iter().map(|a| a + Rational::one()).collect();
    let qv = q_values(spec, x, order, Exec::Sequential)?;
    let t = t_series(order);
    let geo = t.geometric();
    let exp_rhs = t
        .exp()
        .mul(&Rs::hypergeometric(&HypParams::new(vec![], lower.clone()), &t.scale(&(x / &b)))?);
    let rat_rhs = geo.mul(&Rs::hypergeometric(
        &HypParams::new(vec![Rational::one()], lower),
        &t.mul(&geo).scale(&(x / &b)),
    )?);
    let mut report = gf_report("gf-l1", spec, None, x, order);
    compare(&mut report, "exponential", &Rs::from_fn(order, |n| &qv[n] / factorial(n)), &exp_rhs);
    compare(&mut report, "rational", &Rs::new(order, qv), &rat_rhs);
    Ok(report)
}

fn gf_report(check: &str, spec: &SystemSpec, i: Option<usize>, x: &Rational, order: usize) -> Report {
    let r = Report::new(check).param("spec", spec.label()).param("x", x).with_order(order);
    match i {
        Some(i) => r.param("i", i),
        None => r,
    }
}

/// Discrete generating functions for residue class `i`, with
/// `z = (-1)^{l+1} l^l / B`:
/// `sum_m t^{ml+i} Q_{ml+i}(x)/m! = psi_i(x) t^i e^{t^l} lF(Delta(l; -x+i); S^(i); -z t^l)` and
/// `sum_m t^{ml+i} Q_{ml+i}(x) = psi_i(x) t^i/(1-t^l) l+1F(Delta(l; -x+i), 1; S^(i); -z t^l/(1-t^l))`.
pub fn gf_disc_checks(spec: &SystemSpec, i: usize, x: &Rational, order: usize) -> Result<Report> {
    require(spec, Kind::Discrete, i)?;
    let l = spec.l();
    let mut report = gf_report("gf-discrete", spec, Some(i), x, order);
    if i > order {
        return Ok(report);
    }
    let split = hypergeom::param_split(spec, i)?;
    let mut z = exact::pow(&int(l as i64), l) / &split.b;
    if l % 2 == 0 {
        z = -z;
    }
    let upper = hypergeom::delta_vec(l, &(int(i as i64) - x));
    let psi_i = Poly::basis_element(crate::poly::Basis::FallingFactorial, i).eval(x);
    let mo = class_order(order, l, i);
    let t = t_series(mo);
    let geo = t.geometric();
    let f_exp = Rs::hypergeometric(&HypParams::new(upper.clone(), split.s_hat.clone()), &t.scale(&-&z))?;
    let mut upper1 = upper;
    upper1.push(Rational::one());
    let f_rat = Rs::hypergeometric(&HypParams::new(upper1, split.s_hat.clone()), &t.mul(&geo).scale(&-&z))?;
    let phi = lift(&t.exp().mul(&f_exp), l, i, &psi_i, order);
    let g = lift(&geo.mul(&f_rat), l, i, &psi_i, order);
    let qv = q_values(spec, x, order, Exec::Sequential)?;
    compare(
        &mut report,
        "Phi_i",
        &class_series(&qv, l, i, order, |m| factorial(m).recip()),
        &phi,
    );
    compare(&mut report, "G_i", &class_series(&qv, l, i, order, |_| Rational::one()), &g);
    Ok(report)
}

/// Discrete `l = 1` forms built from `alpha + 1`, `B = tau rho`:
/// `sum t^n Q_n/n! = e^t 1F_d(-x; (alpha+1); -t/B)` and
/// `sum t^n Q_n = 1/(1-t) 2F_d(-x, 1; (alpha+1); -t/(B(1-t)))`.
pub fn gf_disc_l1_check(spec: &SystemSpec, x: &Rational, order: usize) -> Result<Report> {
    require(spec, Kind::Discrete, 0)?;
    if spec.l() != 1 {
        return Err(Error::Precondition("needs q(G) = tau G".into()));
    }
    let b = spec.require_pure_power()? * spec.rho();
    let lower: Vec<Rational> = spec.alphas().iter().map(|a| a + Rational::one()).collect();
    let qv = q_values(spec, x, order, Exec::Sequential)?;
    let t = t_series(order);
    let geo = t.geometric();
    let exp_rhs = t.exp().mul(&Rs::hypergeometric(
        &HypParams::new(vec![-x], lower.clone()),
        &t.scale(&-b.recip()),
    )?);
    let rat_rhs = geo.mul(&Rs::hypergeometric(
        &HypParams::new(vec![-x, Rational::one()], lower),
        &t.mul(&geo).scale(&-b.recip()),
    )?);
    let mut report = gf_report("gf-discrete-l1", spec, None, x, order);
    compare(&mut report, "exponential", &Rs::from_fn(order, |n| &qv[n] / factorial(n)), &exp_rhs);
    compare(&mut report, "rational", &Rs::new(order, qv), &rat_rhs);
    Ok(report)
}

/// Argument scale used for the normalized polynomials
/// `Q_n = x^i 1F(-m; S^(i); (x/w)^l)` in the spot check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArgConvention {
    /// `w = (-1)^{d+1} eta`.
    Eta,
    /// `w = (-1)^{d+1} eta rho`.
    EtaRho,
}

/// Complex-float check of `sum_m t^{ml+i} Q_{ml+i}(x)/m! = (tx)^i e^{t^l} 0F(S^(i); (xt)^l)`
/// where `Q` uses the argument `(x/w)^l` and `eta` is taken complex with
/// `((-1)^{d+1} eta)^l = -1`.
pub fn gf_normalized_spot_check(spec: &SystemSpec, i: usize, x: f64, t: f64, convention: ArgConvention) -> Result<Report> {
    require(spec, Kind::Continuous, i)?;
    let l = spec.l();
    let split = hypergeom::param_split(spec, i)?;
    let mut w = ComplexF::cis(PI / l as f64);
    if convention == ArgConvention::EtaRho {
        w = w * exact::to_f64(spec.rho());
    }
    let xc = ComplexF::real(x)?;
    let z = (xc / w).powi(l as i32);
    let mut lhs = ComplexF::ZERO;
    let mut weight = 1.0f64;
    for m in 0..200usize {
        if m > 0 {
            weight /= m as f64;
        }
        let f = hypergeom::pfq_terminating(&HypParams::new(vec![int(-(m as i64))], split.s_hat.clone()), m)?;
        let q = f.eval_c(z) * xc.powi(i as i32);
        let term = q * (t.powi((m * l + i) as i32) * weight);
        lhs = lhs + term;
        if m > 8 && term.abs() < 1e-18 * lhs.abs().max(1e-300) {
            break;
        }
    }
    let tl = t.powi(l as i32);
    let arg = ComplexF::real((x * t).powi(l as i32))?;
    let rhs = hypergeom::pfq_partial_sum(&[], &split.s_hat, arg, 1e-17, 10_000)
        * ComplexF::real((t * x).powi(i as i32) * tl.exp())?;
    let dev = (lhs - rhs).abs();
    let mut report = Report::new("gf-normalized-spot")
        .param("spec", spec.label())
        .param("i", i)
        .param("x", x)
        .param("t", t)
        .param("convention", format!("{convention:?}"));
    report.deviation(dev);
    if dev > 1e-10 * rhs.abs().max(1.0) {
        report.violation(format!("lhs {lhs} vs rhs {rhs}"));
    }
    Ok(report)
}

/// `Q_n(x) = sum_j binom(n, j) gamma_j x^j` with `gamma_j = j! [x^j] 0F_d(-; (alpha+1); x/B)`
/// for `l = 1` continuous families.
pub fn jensen_check(spec: &SystemSpec, n_max: usize) -> Result<Report> {
    require(spec, Kind::Continuous, 0)?;
    if spec.l() != 1 {
        return Err(Error::Precondition("needs q(G) = tau G".into()));
    }
    let b = spec.require_pure_power()? * spec.rho();
    let lower: Vec<Rational> = spec.alphas().iter().map(|a| a + Rational::one()).collect();
    let phi = hypergeom::pfq_coefficients(&HypParams::new(vec![], lower), n_max)?;
    let gamma: Vec<Rational> = phi
        .iter()
        .enumerate()
        .map(|(j, c)| c * factorial(j) / exact::pow(&b, j))
        .collect();
    let mut report = Report::new("jensen").param("spec", spec.label()).param("n_max", n_max);
    for n in 0..=n_max {
        let q = normalize_q(spec, n)?;
        let expected = Poly::new(
            crate::poly::Basis::Monomial,
            (0..=n)
                .map(|j| Rational::from_integer(exact::binomial(n, j)) * &gamma[j])
                .collect(),
        );
        if q != expected {
            report.violation(format!("n={n}: Q_n = {q}, Jensen form {expected}"));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::poly::Basis;

    fn cont(alphas: Vec<Rational>, rho: Rational, tau: Rational, l: usize) -> SystemSpec {
        SystemSpec::pure_power(Kind::Continuous, alphas, rho, tau, l).unwrap()
    }

    #[test]
    fn normalization_examples() {
        let shift = cont(vec![], int(1), int(1), 1);
        assert_eq!(normalize_q(&shift, 3).unwrap(), Poly::from_ints(Basis::Monomial, &[1, 3, 3, 1]));
        let h = cont(vec![], int(1), rat(-1, 2), 2);
        for m in 0..6 {
            assert_eq!(normalize_q(&h, 2 * m).unwrap().eval(&int(0)), int(1));
        }
        let lag = cont(vec![int(0)], int(1), int(1), 1);
        assert_eq!(
            normalize_q(&lag, 2).unwrap(),
            Poly::new(Basis::Monomial, vec![int(1), int(2), rat(1, 2)])
        );
        let bad = cont(vec![int(-2)], int(1), int(1), 1);
        assert!(matches!(
            normalize_q(&bad, 3),
            Err(Error::DegenerateNormalization { .. })
        ));
    }

    #[test]
    fn exponential_identity_examples() {
        assert!(gf_exp_check(&[], &rat(3, 7), 10).unwrap().passed());
        assert!(gf_exp_check(&[rat(1, 2)], &int(1), 12).unwrap().passed());
        let (lhs, _) = exp_identity_sides(&[], &[], &int(0), 6).unwrap();
        assert_eq!(lhs, t_series(6).exp());
        assert!(gf_exp_check_general(&[rat(-5, 3)], &[rat(2, 7), rat(1, 3)], &rat(-4, 5), 10).unwrap().passed());
    }

    #[test]
    fn srivastava_examples() {
        let u = rat(2, 3);
        assert!(srivastava_check(&[], &[], &u, 15).unwrap().passed());
        // Classical Laguerre generating function e^{-ut/(1-t)}/(1-t).
        let (lhs, _) = srivastava_sides(&[], &[], &u, 10).unwrap();
        let t = t_series(10);
        let geo = t.geometric();
        assert_eq!(lhs, geo.mul(&t.mul(&geo).scale(&-&u).exp()));
        // The plus-sign variant does not hold.
        assert_ne!(lhs, geo.mul(&t.mul(&geo).scale(&u).exp()));
        let (lhs0, _) = srivastava_sides(&[], &[], &int(0), 8).unwrap();
        assert_eq!(lhs0, t_series(8).geometric());
        assert!(srivastava_check(&[], &[rat(1, 2)], &int(1), 12).unwrap().passed());
    }

    #[test]
    fn family_generating_functions() {
        let shift = cont(vec![], int(1), int(1), 1);
        assert!(gf_phi_check(&shift, 0, &int(1), 10).unwrap().passed());
        let h = cont(vec![], int(1), rat(-1, 2), 2);
        for i in 0..2 {
            assert!(gf_phi_check(&h, i, &int(1), 14).unwrap().passed());
            assert!(gf_rational_check(&h, i, &rat(2, 3), 14).unwrap().passed());
        }
        assert!(gf_total_check(&h, &rat(-3, 2), 13).unwrap().passed());
        let lag = cont(vec![int(0)], int(1), int(1), 1);
        assert!(gf_rational_check(&lag, 0, &int(1), 12).unwrap().passed());
        assert!(gf_l1_check(&lag, &rat(5, 4), 15).unwrap().passed());
        let cubic = cont(vec![rat(1, 3)], rat(-1, 2), rat(2, 5), 3);
        assert!(gf_total_check(&cubic, &rat(3, 4), 13).unwrap().passed());
    }

    #[test]
    fn discrete_generating_functions() {
        let charlier = SystemSpec::pure_power(Kind::Discrete, vec![], rat(3, 2), int(1), 1).unwrap();
        for x in [int(0), int(2), rat(-1, 3)] {
            assert!(gf_disc_checks(&charlier, 0, &x, 10).unwrap().passed());
            assert!(gf_disc_l1_check(&charlier, &x, 10).unwrap().passed());
        }
        let d2 = SystemSpec::pure_power(Kind::Discrete, vec![], int(1), int(1), 2).unwrap();
        for i in 0..2 {
            assert!(gf_disc_checks(&d2, i, &int(3), 10).unwrap().passed());
        }
    }

    #[test]
    fn spot_check_conventions() {
        let s = cont(vec![rat(1, 3)], int(2), int(1), 2);
        assert!(gf_normalized_spot_check(&s, 0, 0.7, 0.4, ArgConvention::Eta).unwrap().passed());
        assert!(gf_normalized_spot_check(&s, 1, 0.7, 0.4, ArgConvention::Eta).unwrap().passed());
        assert!(!gf_normalized_spot_check(&s, 0, 0.7, 0.4, ArgConvention::EtaRho).unwrap().passed());
    }

    #[test]
    fn jensen_examples() {
        let lag = cont(vec![rat(1, 2)], rat(-1, 3), int(2), 1);
        assert!(jensen_check(&lag, 20).unwrap().passed());
        let d2 = cont(vec![rat(1, 2), rat(-2, 3)], int(1), int(1), 1);
        assert!(jensen_check(&d2, 15).unwrap().passed());
    }
}
