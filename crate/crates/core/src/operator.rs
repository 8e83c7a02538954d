//! The lowering operator `G = R(H) d/dx` (or `R(H) Delta`) through its action
//! on the basis `psi_n`, the families `P_n = exp(q(G)) psi_n`, the operator
//! `L = q'(G) G + H` and the Hahn derivative system.

use num_traits::{One, Zero};

use crate::error::Result;
use crate::exact::{self, int, Rational};
use crate::par::Exec;
use crate::poly::{Basis, Poly};
use crate::report::Report;
use crate::spec::SystemSpec;

/// `c` with `G psi_n = c psi_{n-1}`, i.e. `n R(n-1)`; zero for `n = 0`.
pub fn g_step(spec: &SystemSpec, n: usize) -> Rational {
    if n == 0 {
        return Rational::zero();
    }
    int(n as i64) * spec.r_at(&int(n as i64 - 1))
}

/// Coefficient of `psi_{n-k}` in `G^k psi_n`, by iterating `g_step`.
pub fn g_power_coeff(spec: &SystemSpec, n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    (0..k).fold(Rational::one(), |acc, s| acc * g_step(spec, n - s))
}

/// Coefficient of `psi_{n-lj}` in `G^{lj} psi_n` with `l = spec.l()`.
pub fn gl_power_coeff(spec: &SystemSpec, n: usize, j: usize) -> Rational {
    g_power_coeff(spec, n, spec.l() * j)
}

/// Closed form of [`gl_power_coeff`]:
/// `eta^{lj} (-1)^{lj(d+1)} prod_{k<=d+1} prod_{r<l} ((-n - alpha_k + r)/l)_j`
/// with `alpha_{d+1} = 0`.
pub fn gl_power_coeff_closed(spec: &SystemSpec, n: usize, j: usize) -> Rational {
    let l = spec.l();
    let d = spec.d();
    let ln = int(l as i64);
    let mut acc = exact::pow(&spec.eta(), l * j);
    if (l * j * (d + 1)) % 2 == 1 {
        acc = -acc;
    }
    let minus_n = int(-(n as i64));
    let zero = Rational::zero();
    for alpha in spec.alphas().iter().chain(std::iter::once(&zero)) {
        for r in 0..l {
            let p = (&minus_n - alpha + int(r as i64)) / &ln;
            acc *= exact::pochhammer(&p, j);
        }
    }
    acc
}

/// A strictly degree-lowering map on `span{psi_0, ..., psi_N}`, stored as the
/// image of each basis element.
#[derive(Clone, Debug)]
pub struct LoweringOp {
    rows: Vec<Vec<(usize, Rational)>>,
}

impl LoweringOp {
    /// `sum_k w_k G^k` where `weights[k-1] = w_k`, on degrees `0..=n_max`.
    pub fn polynomial_in_g(spec: &SystemSpec, weights: &[Rational], n_max: usize) -> Self {
        let steps: Vec<Rational> = (0..=n_max).map(|n| g_step(spec, n)).collect();
        let rows = (0..=n_max)
            .map(|n| {
                let mut row = Vec::new();
                let mut coeff = Rational::one();
                for (k, w) in weights.iter().enumerate() {
                    let k = k + 1;
                    if k > n {
                        break;
                    }
                    coeff *= &steps[n - k + 1];
                    if coeff.is_zero() {
                        break;
                    }
                    if !w.is_zero() {
                        row.push((n - k, w * &coeff));
                    }
                }
                row
            })
            .collect();
        LoweringOp { rows }
    }

    /// `G` itself.
    pub fn g(spec: &SystemSpec, n_max: usize) -> Self {
        Self::polynomial_in_g(spec, &[Rational::one()], n_max)
    }

    /// `q(G)`.
    pub fn q_of_g(spec: &SystemSpec, n_max: usize) -> Self {
        Self::polynomial_in_g(spec, spec.q(), n_max)
    }

    /// `q'(G) G = sum_k k c_k G^k`.
    pub fn q_prime_g_times_g(spec: &SystemSpec, n_max: usize) -> Self {
        let weights: Vec<Rational> = spec
            .q()
            .iter()
            .enumerate()
            .map(|(k, c)| c * int(k as i64 + 1))
            .collect();
        Self::polynomial_in_g(spec, &weights, n_max)
    }

    pub fn max_degree(&self) -> usize {
        self.rows.len() - 1
    }

    /// `(target degree, coefficient)` pairs of the image of `psi_n`.
    pub fn image(&self, n: usize) -> &[(usize, Rational)] {
        &self.rows[n]
    }

    /// Applies the map to a coefficient vector (index = basis degree).
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert!(v.len() <= self.rows.len(), "vector exceeds operator range");
        let mut out = vec![Rational::zero(); v.len()];
        for (n, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (target, w) in &self.rows[n] {
                out[*target] += c * w;
            }
        }
        while out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        out
    }
}

/// `exp(op) psi_n` by the terminating series `sum_j op^j psi_n / j!`.
fn exp_on_basis(op: &LoweringOp, basis: Basis, n: usize) -> Poly {
    let mut term = vec![Rational::zero(); n + 1];
    term[n] = Rational::one();
    let mut sum = term.clone();
    let mut j = 0i64;
    loop {
        j += 1;
        term = op.apply(&term);
        if term.is_empty() {
            break;
        }
        let inv = Rational::new(1.into(), j.into());
        for (k, c) in term.iter_mut().enumerate() {
            if !c.is_zero() {
                *c *= &inv;
                sum[k] += &*c;
            }
        }
    }
    Poly::new(basis, sum)
}

/// `P_n = exp(q(G)) psi_n`, monic of degree `n` in the natural basis of the spec.
pub fn build_p(spec: &SystemSpec, n: usize) -> Poly {
    let op = LoweringOp::q_of_g(spec, n);
    exp_on_basis(&op, spec.natural_basis(), n)
}

/// `P_0, ..., P_{n_max}` sharing one assembled operator.
pub fn build_family(spec: &SystemSpec, n_max: usize, exec: Exec) -> Vec<Poly> {
    let op = LoweringOp::q_of_g(spec, n_max);
    let basis = spec.natural_basis();
    let indices: Vec<usize> = (0..=n_max).collect();
    exec.map(&indices, |&n| exp_on_basis(&op, basis, n))
}

/// `L p = q'(G) G p + H p`; `H psi_n = n psi_n` in both bases.
pub fn apply_l(spec: &SystemSpec, p: &Poly) -> Result<Poly> {
    p.require_basis(spec.natural_basis())?;
    let Some(deg) = p.degree() else {
        return Ok(p.clone());
    };
    let op = LoweringOp::q_prime_g_times_g(spec, deg);
    let mut out = op.apply(p.coeffs());
    out.resize(deg + 1, Rational::zero());
    for (n, c) in p.coeffs().iter().enumerate() {
        out[n] += c * int(n as i64);
    }
    Ok(Poly::new(p.basis(), out))
}

/// Asserts `L P_n = n P_n` for `n <= n_max`.
pub fn eigen_check(spec: &SystemSpec, n_max: usize, exec: Exec) -> Report {
    eigen_check_with_operator(spec, spec, n_max, exec)
}

/// Like [`eigen_check`] but builds the family from `family` and applies the
/// operator `L` of `operator`. Both specs must share the natural basis.
pub fn eigen_check_with_operator(family: &SystemSpec, operator: &SystemSpec, n_max: usize, exec: Exec) -> Report {
    let mut report = Report::new("eigen").param("spec", family.label()).param("n_max", n_max);
    let polys = build_family(family, n_max, exec);
    let indices: Vec<usize> = (0..=n_max).collect();
    let results = exec.map(&indices, |&n| {
        let p = &polys[n];
        match apply_l(operator, p) {
            Ok(lp) => (lp == p.scale(&int(n as i64))).then_some(()).ok_or_else(|| {
                format!("n={n}: L P_n - n P_n = {}", lp.sub(&p.scale(&int(n as i64))))
            }),
            Err(e) => Err(format!("n={n}: {e}")),
        }
    });
    for r in results {
        if let Err(msg) = r {
            report.violation(msg);
        }
    }
    report
}

/// Asserts `D P_n / n = P^{shift}_{n-1}` for `1 <= n <= n_max`, where `D` is
/// the derivative (continuous) or forward difference (discrete) and the
/// shifted family uses `R(H+1)`.
pub fn hahn_check(spec: &SystemSpec, n_max: usize, exec: Exec) -> Report {
    let mut report = Report::new("hahn").param("spec", spec.label()).param("n_max", n_max);
    if n_max == 0 {
        report.note("nothing to check for n_max = 0");
        return report;
    }
    let shifted = spec.hahn_shift();
    let polys = build_family(spec, n_max, exec);
    let targets = build_family(&shifted, n_max - 1, exec);
    let indices: Vec<usize> = (1..=n_max).collect();
    let results = exec.map(&indices, |&n| {
        let lhs = polys[n].diff().scale(&Rational::new(1.into(), (n as i64).into()));
        (lhs == targets[n - 1])
            .then_some(())
            .ok_or_else(|| format!("n={n}: D P_n / n = {lhs}, shifted P_(n-1) = {}", targets[n - 1]))
    });
    for r in results {
        if let Err(msg) = r {
            report.violation(msg);
        }
    }
    report
}

/// The smallest `k >= 1` such that some `alpha_j = -k`, if any.
pub fn negative_integer_root(spec: &SystemSpec) -> Option<usize> {
    spec.alphas()
        .iter()
        .filter(|a| a.is_integer() && *a < &Rational::zero())
        .map(|a| (-a).to_integer().try_into().unwrap_or(usize::MAX))
        .min()
}

/// Asserts the literal finite-system statement `P_n = psi_n` for
/// `k <= n <= n_max`, where `alpha_j = -k` is a negative integer root.
pub fn degeneration_check(spec: &SystemSpec, n_max: usize, exec: Exec) -> Report {
    let mut report = Report::new("degeneration").param("spec", spec.label()).param("n_max", n_max);
    let Some(k) = negative_integer_root(spec) else {
        return Report::skipped("degeneration", "no alpha is a negative integer");
    };
    let basis = spec.natural_basis();
    for (n, p) in build_family(spec, n_max, exec).into_iter().enumerate().skip(k) {
        let psi = Poly::basis_element(basis, n);
        if p != psi {
            report.violation(format!("n={n}: P_n - psi_n = {}", p.sub(&psi)));
        }
    }
    report
}

/// Asserts the invariant-subspace form of the finite-system remark: when
/// `alpha_j = -k`, `G psi_k = 0`, so for `n >= k` every `P_n` lies in
/// `span{psi_k, ..., psi_n}` while `P_0, ..., P_{k-1}` stay in `span{psi_0, ..., psi_{k-1}}`.
pub fn invariant_subspace_check(spec: &SystemSpec, n_max: usize, exec: Exec) -> Report {
    let mut report = Report::new("invariant-subspace").param("spec", spec.label()).param("n_max", n_max);
    let Some(k) = negative_integer_root(spec) else {
        return Report::skipped("invariant-subspace", "no alpha is a negative integer");
    };
    if !g_step(spec, k).is_zero() {
        report.violation(format!("G psi_{k} is nonzero"));
    }
    for (n, p) in build_family(spec, n_max, exec).into_iter().enumerate().skip(k) {
        if p.lowest_index().is_some_and(|low| low < k) {
            report.violation(format!("n={n}: P_n has a psi_j component with j < {k}"));
        }
    }
    report
}
