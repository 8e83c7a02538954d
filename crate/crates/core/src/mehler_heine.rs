//! Scaled limits of the normalized continuous families.
//!
//! With `B = 1` (`tau = 1`, `rho l^{d+1} = 1`) and `n = m l + i`,
//! `m^{i/l} Q_n(x / m^{1/l}) -> x^i 0F(-; S^(i); x^l)`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{self, int, ComplexF, Rational};
use crate::genfun;
use crate::hypergeom;
use crate::par::Exec;
use crate::report::Report;
use crate::spec::{Kind, SystemSpec};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MhConfig {
    /// Bound on the deviation at the largest index.
    pub tol: f64,
    /// Number of trailing indices over which deviations must strictly decrease.
    pub tail: usize,
}

impl Default for MhConfig {
    fn default() -> Self {
        MhConfig { tol: 1e-2, tail: 3 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MhReport {
    pub report: Report,
    pub x: f64,
    pub i: usize,
    pub indices: Vec<usize>,
    pub values: Vec<f64>,
    pub limit: f64,
    pub deviations: Vec<f64>,
    /// `deviation * index` per index, roughly constant under first-order decay.
    pub scaled_deviations: Vec<f64>,
}

/// The same roots with `tau = 1` and `rho = 1 / l^{d+1}`, so that `B = 1`.
pub fn mh_companion(spec: &SystemSpec) -> Result<SystemSpec> {
    let l = spec.l();
    let rho = exact::pow(&int(l as i64), spec.d() + 1).recip();
    SystemSpec::pure_power(Kind::Continuous, spec.alphas().to_vec(), rho, Rational::one(), l)
}

fn require_normalized(spec: &SystemSpec) -> Result<()> {
    if spec.kind() != Kind::Continuous {
        return Err(Error::WrongKind {
            expected: Kind::Continuous.as_str(),
        });
    }
    let b = hypergeom::param_split(spec, 0)?.b;
    if !b.is_one() {
        return Err(Error::Precondition(format!(
            "needs tau = 1 and rho l^(d+1) = 1, got argument scale {b}"
        )));
    }
    Ok(())
}

/// `m^{i/l} Q_{ml+i}(x / m^{1/l}) = x^i sum_k c_{i+lk} (x^l/m)^k`, evaluated exactly.
fn scaled_value(spec: &SystemSpec, x: &Rational, i: usize, m: usize) -> Result<f64> {
    let l = spec.l();
    let n = m * l + i;
    let q = genfun::normalize_q(spec, n)?;
    let y = exact::pow(x, l) / int(m as i64);
    let mut acc = Rational::zero();
    let mut k = m + 1;
    while k > 0 {
        k -= 1;
        acc = acc * &y + q.coeff(i + l * k);
    }
    Ok(exact::to_f64(&(acc * exact::pow(x, i))))
}

fn limit_value(spec: &SystemSpec, x: &Rational, i: usize) -> Result<f64> {
    let split = hypergeom::param_split(spec, i)?;
    let l = spec.l();
    let xf = exact::to_f64(x);
    let z = ComplexF::real(xf.powi(l as i32))?;
    let f = hypergeom::pfq_partial_sum(&[], &split.s_hat, z, 1e-15, 100_000);
    Ok(f.re() * xf.powi(i as i32))
}

fn assess(check: &str, spec: &SystemSpec, x: &Rational, i: usize, indices: &[usize], values: Vec<f64>, limit: f64, cfg: MhConfig) -> MhReport {
    let deviations: Vec<f64> = values.iter().map(|v| (v - limit).abs()).collect();
    let mut report = Report::new(check)
        .param("spec", spec.label())
        .param("x", x)
        .param("i", i)
        .param("tol", cfg.tol)
        .param("tail", cfg.tail);
    if let Some(&last) = deviations.last() {
        report.deviation(last);
        if !(last < cfg.tol) {
            report.violation(format!("final deviation {last:e} is not below {:e}", cfg.tol));
        }
    } else {
        report.violation("no indices");
    }
    let start = deviations.len().saturating_sub(cfg.tail);
    for k in start..deviations.len().saturating_sub(1) {
        let (a, b) = (deviations[k], deviations[k + 1]);
        if !(b < a || b == 0.0) {
            report.violation(format!(
                "deviation does not decrease from index {} ({a:e}) to {} ({b:e})",
                indices[k],
                indices[k + 1]
            ));
        }
    }
    let scaled_deviations = deviations.iter().zip(indices).map(|(d, &n)| d * n as f64).collect();
    MhReport {
        report,
        x: exact::to_f64(x),
        i,
        indices: indices.to_vec(),
        values,
        limit,
        deviations,
        scaled_deviations,
    }
}

/// `Q_n(x/n) -> 0F_d(-; (alpha+1); x)` for `q(G) = G` with `rho = 1`.
pub fn mh_l1_check(spec: &SystemSpec, x: &Rational, n_list: &[usize], cfg: MhConfig, exec: Exec) -> Result<MhReport> {
    require_normalized(spec)?;
    if spec.l() != 1 {
        return Err(Error::Precondition("needs q(G) = G".into()));
    }
    let values = exec.map(n_list, |&n| scaled_value(spec, x, 0, n));
    let values = values.into_iter().collect::<Result<Vec<_>>>()?;
    let limit = limit_value(spec, x, 0)?;
    Ok(assess("mehler-heine-l1", spec, x, 0, n_list, values, limit, cfg))
}

/// `m^{i/l} Q_{ml+i}(x/m^{1/l}) -> x^i 0F(-; S^(i); x^l)` for `q(G) = G^l`.
pub fn mh_power_check(spec: &SystemSpec, x: &Rational, i: usize, m_list: &[usize], cfg: MhConfig, exec: Exec) -> Result<MhReport> {
    require_normalized(spec)?;
    if i >= spec.l() {
        return Err(Error::Precondition(format!("residue class {i} needs i < l = {}", spec.l())));
    }
    let values = exec.map(m_list, |&m| scaled_value(spec, x, i, m));
    let values = values.into_iter().collect::<Result<Vec<_>>>()?;
    let limit = limit_value(spec, x, i)?;
    Ok(assess("mehler-heine-power", spec, x, i, m_list, values, limit, cfg))
}
