//! Finite-band recurrences `x P_n = P_{n+1} + sum_j gamma_j(n) P_{n-j}`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{self, int, Rational};
use crate::operator;
use crate::par::Exec;
use crate::poly::{Basis, Poly};
use crate::report::Report;
use crate::spec::{Kind, SystemSpec};

/// Coefficients `c_k` with `p = sum_k c_k family[k]`, by descending
/// elimination against the monic family.
pub fn expand_with_family(family: &[Poly], p: &Poly) -> Result<Vec<Rational>> {
    let Some(deg) = p.degree() else {
        return Ok(Vec::new());
    };
    if deg >= family.len() {
        return Err(Error::Precondition(format!(
            "degree {deg} exceeds the {} family members supplied",
            family.len()
        )));
    }
    let basis = family[0].basis();
    let mut rest = p.to_basis(basis);
    let mut out = vec![Rational::zero(); deg + 1];
    for k in (0..=deg).rev() {
        let c = rest.coeff(k);
        if !c.is_zero() {
            rest = rest.sub(&family[k].scale(&c));
            out[k] = c;
        }
    }
    debug_assert!(rest.is_zero());
    Ok(out)
}

/// [`expand_with_family`] against `P_0, ..., P_deg` of `spec`.
pub fn expand_in_family(spec: &SystemSpec, p: &Poly) -> Result<Vec<Rational>> {
    p.require_basis(spec.natural_basis())?;
    let deg = p.degree().unwrap_or(0);
    let family = operator::build_family(spec, deg, Exec::Sequential);
    expand_with_family(&family, p)
}

/// `gamma_j(n)` for `j = 0..=n` from a family holding at least `P_0..P_{n+1}`.
pub fn recurrence_row_from(family: &[Poly], n: usize) -> Result<Vec<Rational>> {
    let xp = family[n].mul_by_x();
    let mut c = expand_with_family(family, &xp)?;
    if c.len() != n + 2 || !c[n + 1].is_one() {
        return Err(Error::Precondition(format!("x P_{n} does not have unit P_{} coefficient", n + 1)));
    }
    c.truncate(n + 1);
    c.reverse();
    Ok(c)
}

/// `(gamma_0(n), ..., gamma_n(n))`; `gamma_j` multiplies `P_{n-j}`.
pub fn recurrence_row(spec: &SystemSpec, n: usize) -> Result<Vec<Rational>> {
    let family = operator::build_family(spec, n + 1, Exec::Sequential);
    recurrence_row_from(&family, n)
}

/// Band `J` claimed for the family: `ld + l - 1`, or `l` for discrete `d = 0`.
pub fn claimed_band(spec: &SystemSpec) -> usize {
    let (l, d) = (spec.l(), spec.d());
    if spec.kind() == Kind::Discrete && d == 0 {
        l
    } else {
        l * d + l - 1
    }
}

/// Recurrence rows truncated to the claimed band.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandRecurrence {
    pub band: usize,
    /// `rows[n][j] = gamma_j(n)` for `j <= min(band, n)`.
    pub rows: Vec<Vec<Rational>>,
    /// Largest `j` with a nonzero `gamma_j(n)` over all rows.
    pub observed_band: Option<usize>,
    /// `(n, j)` pairs with `j > band` and `gamma_j(n) != 0`.
    pub out_of_band: Vec<(usize, usize)>,
}

pub fn band_recurrence(spec: &SystemSpec, n_max: usize, exec: Exec) -> Result<BandRecurrence> {
    let band = claimed_band(spec);
    let family = operator::build_family(spec, n_max + 1, exec);
    let indices: Vec<usize> = (0..=n_max).collect();
    let full = exec
        .map(&indices, |&n| recurrence_row_from(&family, n))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let mut observed_band = None;
    let mut out_of_band = Vec::new();
    for (n, row) in full.iter().enumerate() {
        for (j, g) in row.iter().enumerate() {
            if !g.is_zero() {
                observed_band = observed_band.max(Some(j));
                if j > band {
                    out_of_band.push((n, j));
                }
            }
        }
    }
    let rows = full
        .into_iter()
        .map(|mut r| {
            r.truncate(band + 1);
            r
        })
        .collect();
    Ok(BandRecurrence {
        band,
        rows,
        observed_band,
        out_of_band,
    })
}

/// Asserts `gamma_j(n) = 0` for `j` beyond the claimed band and `n <= n_max`.
pub fn bandwidth_check(spec: &SystemSpec, n_max: usize, exec: Exec) -> Report {
    let mut report = Report::new("recurrence").param("spec", spec.label()).param("n_max", n_max);
    match band_recurrence(spec, n_max, exec) {
        Ok(rec) => {
            report = report.param("claimed_band", rec.band);
            for (n, j) in &rec.out_of_band {
                report.violation(format!("n={n}: gamma_{j}(n) is nonzero beyond band {}", rec.band));
            }
            match rec.observed_band {
                Some(b) => report.note(format!("observed band {b}")),
                None => report.note("all gamma_j vanish"),
            }
        }
        Err(e) => report.violation(e.to_string()),
    }
    report
}

/// `gamma_{l-1}(n) = -tau rho^l l n(n-1)...(n-l+2)` for continuous `d = 0`,
/// `q = tau G^l`; every other `gamma_j` vanishes.
pub fn gould_hopper_expected(spec: &SystemSpec, n: usize) -> Result<Vec<Rational>> {
    let tau = spec.require_pure_power()?;
    if spec.kind() != Kind::Continuous || spec.d() != 0 {
        return Err(Error::Precondition("closed recurrence needs a continuous d = 0 family".into()));
    }
    let l = spec.l();
    let mut row = vec![Rational::zero(); n + 1];
    if l - 1 <= n {
        let falling = (0..l - 1).fold(Rational::one(), |acc, s| acc * int(n as i64 - s as i64));
        row[l - 1] = -(tau * exact::pow(spec.rho(), l) * int(l as i64) * falling);
    }
    Ok(row)
}

/// Compares extracted rows with [`gould_hopper_expected`].
pub fn gould_hopper_check(spec: &SystemSpec, n_max: usize, exec: Exec) -> Report {
    let mut report = Report::new("recurrence-closed-form").param("spec", spec.label()).param("n_max", n_max);
    let family = operator::build_family(spec, n_max + 1, exec);
    for n in 0..=n_max {
        let expected = match gould_hopper_expected(spec, n) {
            Ok(e) => e,
            Err(e) => return Report::skipped("recurrence-closed-form", e.to_string()),
        };
        match recurrence_row_from(&family, n) {
            Ok(row) if row == expected => {}
            Ok(row) => report.violation(format!(
                "n={n}: extracted [{}], expected [{}]",
                join(&row),
                join(&expected)
            )),
            Err(e) => report.violation(format!("n={n}: {e}")),
        }
    }
    report
}

fn join(v: &[Rational]) -> String {
    v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",")
}

/// Interpolating polynomial in `n` through the given points (Newton form,
/// returned in the monomial basis).
pub fn interpolate(points: &[(i64, Rational)]) -> Poly {
    let xs: Vec<Rational> = points.iter().map(|(n, _)| int(*n)).collect();
    let mut dd: Vec<Rational> = points.iter().map(|(_, v)| v.clone()).collect();
    for level in 1..dd.len() {
        for k in (level..dd.len()).rev() {
            dd[k] = (&dd[k] - &dd[k - 1]) / (&xs[k] - &xs[k - level]);
        }
    }
    let mut acc = Poly::zero(Basis::Monomial);
    for k in (0..dd.len()).rev() {
        // acc = acc * (n - x_k) + dd[k]
        acc = acc.mul_by_x().sub(&acc.scale(&xs[k])).add(&Poly::constant(Basis::Monomial, dd[k].clone()));
    }
    acc
}

/// Observed polynomial dependence of one `gamma_j` column on `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaFit {
    pub j: usize,
    pub poly: Poly,
    /// Number of held-out rows the fit was re-verified on.
    pub held_out: usize,
}

/// Smallest-degree polynomial in `n` reproducing `gamma_j(n)` for
/// `n = j..rows.len()-1`, accepted only if at least two points beyond those
/// used for interpolation agree. Reported, not asserted.
pub fn fit_gamma(rows: &[Vec<Rational>], j: usize) -> Option<GammaFit> {
    let points: Vec<(i64, Rational)> = rows
        .iter()
        .enumerate()
        .filter(|(n, row)| *n >= j && j < row.len())
        .map(|(n, row)| (n as i64, row[j].clone()))
        .collect();
    for used in 1..points.len().saturating_sub(1) {
        let poly = interpolate(&points[..used]);
        if points[used..].iter().all(|(n, v)| &poly.eval(&int(*n)) == v) {
            return Some(GammaFit {
                j,
                poly,
                held_out: points.len() - used,
            });
        }
    }
    None
}
