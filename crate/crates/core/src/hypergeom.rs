//! Terminating generalized hypergeometric series, the residue-class parameter
//! sets `S(i)`, `S^(i)`, and the hypergeometric representations of the
//! pure-power families `q(G) = tau G^l`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{self, int, ComplexF, Rational};
use crate::operator;
use crate::par::Exec;
use crate::poly::{Basis, Poly};
use crate::report::Report;
use crate::spec::{Kind, SystemSpec};

/// `Delta(l; lam) = (lam/l, (lam+1)/l, ..., (lam+l-1)/l)`.
pub fn delta_vec(l: usize, lam: &Rational) -> Vec<Rational> {
    assert!(l >= 1, "Delta(l; lam) needs l >= 1");
    let ln = int(l as i64);
    (0..l).map(|r| (lam + int(r as i64)) / &ln).collect()
}

/// `l^{lj} prod_{r<l} ((x+r)/l)_j`, which equals `(x)_{lj}`.
pub fn block_pochhammer(x: &Rational, l: usize, j: usize) -> Rational {
    let scale = exact::pow(&int(l as i64), l * j);
    delta_vec(l, x)
        .iter()
        .fold(scale, |acc, p| acc * exact::pochhammer(p, j))
}

/// Right side of `(-n-mu)_j = (-1)^j (mu+1)_n / (mu+1)_{n-j}`.
pub fn pochhammer_reflect(mu: &Rational, n: usize, j: usize) -> Result<Rational> {
    if j > n {
        return Err(Error::Precondition(format!("reflection needs j <= n, got j={j}, n={n}")));
    }
    let one = Rational::one();
    let den = exact::pochhammer(&(mu + &one), n - j);
    if den.is_zero() {
        return Err(Error::Precondition(format!("({})_{} vanishes", mu + &one, n - j)));
    }
    let v = exact::pochhammer(&(mu + &one), n) / den;
    Ok(if j % 2 == 1 { -v } else { v })
}

/// Upper and lower parameters of `pFq`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypParams {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
}

impl HypParams {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>) -> Self {
        HypParams { upper, lower }
    }
}

/// Coefficients `[upper]_j / ([lower]_j j!)` of `z^j` for `j <= n_terms`.
/// The vector is shorter when an upper parameter terminates the series; a
/// lower parameter reaching zero first is an error.
pub fn pfq_coefficients(params: &HypParams, n_terms: usize) -> Result<Vec<Rational>> {
    let mut out = vec![Rational::one()];
    let mut term = Rational::one();
    for j in 0..n_terms {
        let jr = int(j as i64);
        let num = params
            .upper
            .iter()
            .fold(Rational::one(), |acc, a| acc * (a + &jr));
        if num.is_zero() {
            break;
        }
        let mut den = int(j as i64 + 1);
        for (index, b) in params.lower.iter().enumerate() {
            let f = b + &jr;
            if f.is_zero() {
                return Err(Error::LowerParameterExhausted {
                    index,
                    param: b.clone(),
                    term: j + 1,
                });
            }
            den *= f;
        }
        term = term * num / den;
        out.push(term.clone());
    }
    Ok(out)
}

/// `sum_{j <= n_terms} [upper]_j / [lower]_j z^j / j!` as a polynomial in `z`.
pub fn pfq_terminating(params: &HypParams, n_terms: usize) -> Result<Poly> {
    Ok(Poly::new(Basis::Monomial, pfq_coefficients(params, n_terms)?))
}

/// `x^prefix * pFq(params; scale * x^power)` as a monomial-basis polynomial.
/// Terms with a negative exponent must vanish.
pub fn pfq_in_power(params: &HypParams, scale: &Rational, power: i64, prefix: usize, n_terms: usize) -> Result<Poly> {
    let coeffs = pfq_coefficients(params, n_terms)?;
    let mut out: Vec<Rational> = Vec::new();
    let mut z = Rational::one();
    for (j, c) in coeffs.iter().enumerate() {
        let value = c * &z;
        z *= scale;
        if value.is_zero() {
            continue;
        }
        let e = prefix as i64 + power * j as i64;
        if e < 0 {
            return Err(Error::NonPolynomialTerm { term: j });
        }
        let e = e as usize;
        if out.len() <= e {
            out.resize(e + 1, Rational::zero());
        }
        out[e] += value;
    }
    Ok(Poly::new(Basis::Monomial, out))
}

/// Floating partial sum of `pFq(upper; lower; z)`, stopping once the next
/// term is below `rel_tol` times the running sum (or the series terminates).
/// Summation order is fixed, so results are reproducible.
pub fn pfq_partial_sum(upper: &[Rational], lower: &[Rational], z: ComplexF, rel_tol: f64, max_terms: usize) -> ComplexF {
    let up: Vec<f64> = upper.iter().map(exact::to_f64).collect();
    let low: Vec<f64> = lower.iter().map(exact::to_f64).collect();
    let mut sum = ComplexF::ONE;
    let mut term = ComplexF::ONE;
    for j in 0..max_terms {
        let jf = j as f64;
        let num: f64 = up.iter().map(|a| a + jf).product();
        if num == 0.0 {
            break;
        }
        let den: f64 = low.iter().map(|b| b + jf).product::<f64>() * (jf + 1.0);
        term = term * z * (num / den);
        sum = sum + term;
        if term.abs() <= rel_tol * sum.abs() {
            break;
        }
    }
    sum
}

/// A hypergeometric parameter that is constant or affine in `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Param {
    Const(Rational),
    /// `slope * x + offset`.
    Affine { slope: Rational, offset: Rational },
}

impl Param {
    fn shifted(&self, j: usize) -> Param {
        match self {
            Param::Const(c) => Param::Const(c + int(j as i64)),
            Param::Affine { slope, offset } => Param::Affine {
                slope: slope.clone(),
                offset: offset + int(j as i64),
            },
        }
    }
}

/// `seed * sum_j [upper]_j / [lower]_j z^j / j!` where parameters may be affine
/// in `x`. Each term is kept as an exact polynomial: affine lower factors must
/// divide the running term. Stops when the term vanishes or after `n_terms`.
pub fn pfq_symbolic(upper: &[Param], lower: &[Param], z: &Rational, seed: &Poly, n_terms: usize) -> Result<Poly> {
    let mut term = seed.to_monomial();
    let mut sum = term.clone();
    for j in 0..n_terms {
        let mut next = term.scale(&(z / int(j as i64 + 1)));
        for p in upper {
            match p.shifted(j) {
                Param::Const(c) => next = next.scale(&c),
                Param::Affine { slope, offset } => {
                    next = next.mul_by_x().scale(&slope).add(&next.scale(&offset));
                }
            }
        }
        if next.is_zero() {
            break;
        }
        for (index, p) in lower.iter().enumerate() {
            match p.shifted(j) {
                Param::Const(c) => {
                    if c.is_zero() {
                        return Err(Error::LowerParameterExhausted {
                            index,
                            param: match p {
                                Param::Const(b) => b.clone(),
                                Param::Affine { offset, .. } => offset.clone(),
                            },
                            term: j + 1,
                        });
                    }
                    next = next.scale(&c.recip());
                }
                Param::Affine { slope, offset } => {
                    let (quotient, remainder) = next.div_linear(&slope, &offset);
                    if !remainder.is_zero() {
                        return Err(Error::NonPolynomialTerm { term: j + 1 });
                    }
                    next = quotient;
                }
            }
        }
        sum = sum.add(&next);
        term = next;
    }
    Ok(sum)
}

/// Residue-class data for `n = m l + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSplit {
    pub i: usize,
    pub m: usize,
    /// `S_{k,r}(i) = (alpha_k + i - r)/l + 1` at index `(k-1) l + r`, `k = 1..d+1`, `alpha_{d+1} = 0`.
    pub s: Vec<Rational>,
    /// `s` without the entry at `(d, r = i)`, which equals 1.
    pub s_hat: Vec<Rational>,
    /// Positions of `s_hat` inside `s`.
    pub index_set: Vec<usize>,
    /// `B = tau eta^l`, the argument scale of the second forms.
    pub b: Rational,
    /// `C(i) = B^m [s_hat]_m`, the leading constant of the second forms.
    pub c: Rational,
}

/// Parameter sets for a residue class; `n` only fixes `i` and `m`.
pub fn param_split(spec: &SystemSpec, n: usize) -> Result<ParamSplit> {
    let tau = spec.require_pure_power()?;
    let l = spec.l();
    let d = spec.d();
    let (m, i) = (n / l, n % l);
    let ln = int(l as i64);
    let zero = Rational::zero();
    let mut s = Vec::with_capacity((d + 1) * l);
    for alpha in spec.alphas().iter().chain(std::iter::once(&zero)) {
        for r in 0..l {
            s.push((alpha + int(i as i64) - int(r as i64)) / &ln + Rational::one());
        }
    }
    let removed = d * l + i;
    debug_assert!(s[removed].is_one());
    let index_set: Vec<usize> = (0..s.len()).filter(|&k| k != removed).collect();
    let s_hat: Vec<Rational> = index_set.iter().map(|&k| s[k].clone()).collect();
    let b = tau * exact::pow(&spec.eta(), l);
    let c = exact::pow(&b, m) * exact::pochhammer_product(&s_hat, m);
    Ok(ParamSplit {
        i,
        m,
        s,
        s_hat,
        index_set,
        b,
        c,
    })
}

fn require_kind(spec: &SystemSpec, kind: Kind) -> Result<()> {
    if spec.kind() == kind {
        Ok(())
    } else {
        Err(Error::WrongKind {
            expected: kind.as_str(),
        })
    }
}

/// `Delta(l; -n - alpha_k)` blocks for `k = 1..d+1` with `alpha_{d+1} = 0`.
fn first_form_upper(spec: &SystemSpec, n: usize) -> Vec<Rational> {
    let zero = Rational::zero();
    let minus_n = int(-(n as i64));
    spec.alphas()
        .iter()
        .chain(std::iter::once(&zero))
        .flat_map(|a| delta_vec(spec.l(), &(&minus_n - a)))
        .collect()
}

/// `P_n = x^n F(Delta(l; -n-alpha) blocks; -; A / x^l)` with
/// `A = tau (-1)^{l(d+1)} eta^l`.
pub fn rep_cont_power_first(spec: &SystemSpec, n: usize) -> Result<Poly> {
    require_kind(spec, Kind::Continuous)?;
    let tau = spec.require_pure_power()?;
    let l = spec.l();
    let mut a = tau * exact::pow(&spec.eta(), l);
    if (l * (spec.d() + 1)) % 2 == 1 {
        a = -a;
    }
    let params = HypParams::new(first_form_upper(spec, n), vec![]);
    pfq_in_power(&params, &a, -(l as i64), n, n)
}

/// `P_n = C(i) x^i 1F_{ld+l-1}(-m; S^(i); -x^l / B)`.
pub fn rep_cont_power_second(spec: &SystemSpec, n: usize) -> Result<Poly> {
    require_kind(spec, Kind::Continuous)?;
    let split = param_split(spec, n)?;
    let params = HypParams::new(vec![int(-(split.m as i64))], split.s_hat.clone());
    let arg = -split.b.recip();
    Ok(pfq_in_power(&params, &arg, spec.l() as i64, split.i, split.m)?.scale(&split.c))
}

/// The same family through `2F_{ld+l-1}(-m, 1; S(i); -x^l / B)`.
pub fn rep_cont_2f(spec: &SystemSpec, n: usize) -> Result<Poly> {
    require_kind(spec, Kind::Continuous)?;
    let split = param_split(spec, n)?;
    let params = HypParams::new(vec![int(-(split.m as i64)), Rational::one()], split.s.clone());
    let arg = -split.b.recip();
    Ok(pfq_in_power(&params, &arg, spec.l() as i64, split.i, split.m)?.scale(&split.c))
}

/// One residue-class family: `P_{ml+i}(x) = scale^m x^i P^child_m(x^l / scale)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySplit {
    pub i: usize,
    pub child: SystemSpec,
    pub scale: Rational,
    pub power: usize,
}

impl FamilySplit {
    /// `scale^m x^i P^child_m(x^l / scale)`.
    pub fn member(&self, m: usize) -> Poly {
        let child = operator::build_p(&self.child, m);
        child
            .substitute_power(&self.scale.recip(), self.power)
            .shift(self.i)
            .scale(&exact::pow(&self.scale, m))
    }
}

/// The `l` continuous `l = 1` families hidden in a pure-power family; child
/// `i` has `alpha = {S_beta(i) - 1 : beta in I}`, `rho = 1`, `q = G`.
pub fn split_families(spec: &SystemSpec) -> Result<Vec<FamilySplit>> {
    require_kind(spec, Kind::Continuous)?;
    (0..spec.l())
        .map(|i| {
            let split = param_split(spec, i)?;
            let alphas = split.s_hat.iter().map(|s| s - Rational::one()).collect();
            let child = SystemSpec::new(Kind::Continuous, alphas, Rational::one(), vec![Rational::one()])?;
            Ok(FamilySplit {
                i,
                child,
                scale: split.b,
                power: spec.l(),
            })
        })
        .collect()
}

/// Asserts `P_{ml+i} = FamilySplit::member(m)` for every class and `m <= m_max`.
pub fn split_check(spec: &SystemSpec, m_max: usize) -> Report {
    let mut report = Report::new("split-families").param("spec", spec.label()).param("m_max", m_max);
    let splits = match split_families(spec) {
        Ok(s) => s,
        Err(e) => return Report::skipped("split-families", e.to_string()),
    };
    let l = spec.l();
    let parent = operator::build_family(spec, m_max * l + l - 1, Exec::Sequential);
    for f in &splits {
        for m in 0..=m_max {
            let n = m * l + f.i;
            if f.member(m) != parent[n] {
                report.violation(format!("n={n}: split family member differs from P_n"));
            }
        }
    }
    report
}

/// `(x - n + 1 + r)/l`-type affine block `Delta(l; x + offset)`.
fn affine_delta(l: usize, slope_sign: i64, offset: &Rational) -> Vec<Param> {
    let ln = int(l as i64);
    (0..l)
        .map(|r| Param::Affine {
            slope: int(slope_sign) / &ln,
            offset: (offset + int(r as i64)) / &ln,
        })
        .collect()
}

/// `P_n = psi_n F(Delta(l; -n-alpha) blocks; Delta(l; x-n+1); tau eta_1^l)`,
/// with the lower parameters cleared against `psi_n` term by term.
pub fn rep_disc_power_first(spec: &SystemSpec, n: usize) -> Result<Poly> {
    require_kind(spec, Kind::Discrete)?;
    let tau = spec.require_pure_power()?;
    let l = spec.l();
    let upper: Vec<Param> = first_form_upper(spec, n).into_iter().map(Param::Const).collect();
    let lower = affine_delta(l, 1, &int(1 - n as i64));
    let z = tau * exact::pow(&spec.eta1(), l);
    let seed = Poly::basis_element(Basis::FallingFactorial, n);
    Ok(pfq_symbolic(&upper, &lower, &z, &seed, n)?.to_falling())
}

/// `P_n = C(i) psi_i F(-m, Delta(l; -x+i); S^(i); (-1)^{l+1} l^l / B)`.
pub fn rep_disc_power_second(spec: &SystemSpec, n: usize) -> Result<Poly> {
    require_kind(spec, Kind::Discrete)?;
    let split = param_split(spec, n)?;
    let l = spec.l();
    let mut upper = vec![Param::Const(int(-(split.m as i64)))];
    upper.extend(affine_delta(l, -1, &int(split.i as i64)));
    let lower: Vec<Param> = split.s_hat.iter().cloned().map(Param::Const).collect();
    let mut z = exact::pow(&int(l as i64), l) / &split.b;
    if l % 2 == 0 {
        z = -z;
    }
    let seed = Poly::basis_element(Basis::FallingFactorial, split.i);
    Ok(pfq_symbolic(&upper, &lower, &z, &seed, split.m)?
        .scale(&split.c)
        .to_falling())
}

fn require_l1(spec: &SystemSpec) -> Result<()> {
    if spec.l() == 1 {
        Ok(())
    } else {
        Err(Error::Precondition("this representation needs q(G) = tau G".into()))
    }
}

/// `l = 1` discrete first form `psi_n F(-n, (-n-alpha); x-n+1; (-1)^{d+1} tau rho)`.
pub fn rep_disc_first(spec: &SystemSpec, n: usize) -> Result<Poly> {
    require_l1(spec)?;
    rep_disc_power_first(spec, n)
}

/// `l = 1` discrete second form `B^n [alpha+1]_n 2F_d(-n, -x; (alpha+1); 1/B)`, `B = tau rho`.
pub fn rep_disc_second(spec: &SystemSpec, n: usize) -> Result<Poly> {
    require_l1(spec)?;
    rep_disc_power_second(spec, n)
}

/// Named representation routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Representation {
    ContPowerFirst,
    ContPowerSecond,
    Cont2F,
    DiscFirst,
    DiscSecond,
    DiscPowerFirst,
    DiscPowerSecond,
}

impl Representation {
    pub const ALL: [Representation; 7] = [
        Representation::ContPowerFirst,
        Representation::ContPowerSecond,
        Representation::Cont2F,
        Representation::DiscFirst,
        Representation::DiscSecond,
        Representation::DiscPowerFirst,
        Representation::DiscPowerSecond,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Representation::ContPowerFirst => "cont-power-first",
            Representation::ContPowerSecond => "cont-power-second",
            Representation::Cont2F => "cont-2f",
            Representation::DiscFirst => "disc-first",
            Representation::DiscSecond => "disc-second",
            Representation::DiscPowerFirst => "disc-power-first",
            Representation::DiscPowerSecond => "disc-power-second",
        }
    }

    pub fn compute(self, spec: &SystemSpec, n: usize) -> Result<Poly> {
        match self {
            Representation::ContPowerFirst => rep_cont_power_first(spec, n),
            Representation::ContPowerSecond => rep_cont_power_second(spec, n),
            Representation::Cont2F => rep_cont_2f(spec, n),
            Representation::DiscFirst => rep_disc_first(spec, n),
            Representation::DiscSecond => rep_disc_second(spec, n),
            Representation::DiscPowerFirst => rep_disc_power_first(spec, n),
            Representation::DiscPowerSecond => rep_disc_power_second(spec, n),
        }
    }

    /// Whether the routine's structural preconditions hold for `spec`.
    pub fn applies_to(self, spec: &SystemSpec) -> bool {
        if !spec.is_pure_power() {
            return false;
        }
        match self {
            Representation::ContPowerFirst | Representation::ContPowerSecond | Representation::Cont2F => {
                spec.kind() == Kind::Continuous
            }
            Representation::DiscFirst | Representation::DiscSecond => {
                spec.kind() == Kind::Discrete && spec.l() == 1
            }
            Representation::DiscPowerFirst | Representation::DiscPowerSecond => spec.kind() == Kind::Discrete,
        }
    }

    /// Second forms divide by `(S^_beta)_j`; they are admissible for `n` when no
    /// lower parameter reaches zero within `m` terms.
    pub fn admissible(self, spec: &SystemSpec, n: usize) -> bool {
        match self {
            Representation::ContPowerFirst | Representation::DiscFirst | Representation::DiscPowerFirst => true,
            _ => param_split(spec, n).is_ok_and(|s| {
                s.s_hat
                    .iter()
                    .all(|b| !exact::is_nonpositive_integer(b) || (-b).to_integer() >= (s.m as i64).into())
            }),
        }
    }
}

/// Compares every applicable representation with `build_p` for `n <= n_max`.
/// Inadmissible `(representation, n)` pairs are listed in the notes.
pub fn representation_check(spec: &SystemSpec, n_max: usize, exec: Exec) -> Report {
    let reps: Vec<Representation> = Representation::ALL
        .into_iter()
        .filter(|r| r.applies_to(spec))
        .collect();
    if reps.is_empty() {
        return Report::skipped(
            "hypergeom",
            "hypergeometric representations need a pure power q(G) = tau G^l",
        );
    }
    let mut report = Report::new("hypergeom").param("spec", spec.label()).param("n_max", n_max);
    let family = operator::build_family(spec, n_max, exec);
    let jobs: Vec<(Representation, usize)> = reps
        .iter()
        .flat_map(|&r| (0..=n_max).map(move |n| (r, n)))
        .collect();
    let results = exec.map(&jobs, |&(r, n)| {
        if !r.admissible(spec, n) {
            return Ok(Some(format!("{} n={n}: lower parameter is a nonpositive integer", r.name())));
        }
        match r.compute(spec, n) {
            Ok(p) if p == family[n] => Ok(None),
            Ok(p) => Err(format!("{} n={n}: representation {p} differs from P_n = {}", r.name(), family[n])),
            Err(e) => Err(format!("{} n={n}: {e}", r.name())),
        }
    });
    let mut skipped = 0usize;
    for r in results {
        match r {
            Ok(None) => {}
            Ok(Some(_)) => skipped += 1,
            Err(msg) => report.violation(msg),
        }
    }
    if skipped > 0 {
        report.note(format!("{skipped} inadmissible (representation, n) pairs not evaluated"));
    }
    report.note(format!(
        "representations: {}",
        reps.iter().map(|r| r.name()).collect::<Vec<_>>().join(",")
    ));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::operator::build_p;
    use proptest::prelude::*;

    fn mono(c: &[i64]) -> Poly {
        Poly::from_ints(Basis::Monomial, c)
    }

    fn hermite() -> SystemSpec {
        SystemSpec::pure_power(Kind::Continuous, vec![], int(1), rat(-1, 2), 2).unwrap()
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_vec(1, &rat(3, 5)), vec![rat(3, 5)]);
        assert_eq!(delta_vec(2, &int(-4)), vec![int(-2), rat(-3, 2)]);
        assert_eq!(delta_vec(3, &int(1)), vec![rat(1, 3), rat(2, 3), int(1)]);
    }

    #[test]
    fn pfq_examples() {
        let p = pfq_terminating(&HypParams::new(vec![int(-2)], vec![int(1)]), 10).unwrap();
        assert_eq!(p, Poly::new(Basis::Monomial, vec![int(1), int(-2), rat(1, 2)]));
        let p = pfq_terminating(&HypParams::new(vec![int(-1), int(5)], vec![]), 10).unwrap();
        assert_eq!(p, mono(&[1, -5]));
        let err = pfq_terminating(&HypParams::new(vec![int(-3)], vec![int(-2)]), 10).unwrap_err();
        assert_eq!(
            err,
            Error::LowerParameterExhausted {
                index: 0,
                param: int(-2),
                term: 3
            }
        );
    }

    #[test]
    fn split_examples() {
        let h = hermite();
        let even = param_split(&h, 8).unwrap();
        assert_eq!((even.m, even.i), (4, 0));
        assert_eq!(even.s, vec![int(1), rat(1, 2)]);
        assert_eq!(even.s_hat, vec![rat(1, 2)]);
        assert_eq!(param_split(&h, 9).unwrap().s_hat, vec![rat(3, 2)]);
        let a = rat(2, 7);
        let lag = SystemSpec::pure_power(Kind::Continuous, vec![a.clone()], int(1), int(1), 1).unwrap();
        let s = param_split(&lag, 5).unwrap();
        assert_eq!(s.s, vec![&a + int(1), int(1)]);
        assert_eq!(s.s_hat, vec![&a + int(1)]);
        let cubic = SystemSpec::pure_power(Kind::Continuous, vec![rat(1, 3), rat(-1, 5)], int(2), int(1), 3).unwrap();
        let s = param_split(&cubic, 7).unwrap();
        assert_eq!(s.s.len(), 9);
        assert_eq!(s.s_hat.len(), 8);
        assert!(param_split(&SystemSpec::new(Kind::Continuous, vec![], int(1), vec![int(1), int(1)]).unwrap(), 3).is_err());
    }

    #[test]
    fn continuous_examples() {
        let h = hermite();
        assert_eq!(rep_cont_power_first(&h, 4).unwrap(), mono(&[3, 0, -6, 0, 1]));
        assert_eq!(rep_cont_power_first(&h, 0).unwrap(), mono(&[1]));
        assert_eq!(rep_cont_2f(&h, 3).unwrap(), mono(&[0, -3, 0, 1]));
        for n in 0..=20 {
            assert_eq!(rep_cont_power_second(&h, n).unwrap(), build_p(&h, n), "n={n}");
        }
        let lag = SystemSpec::pure_power(Kind::Continuous, vec![int(0)], int(1), int(1), 1).unwrap();
        assert_eq!(rep_cont_power_second(&lag, 1).unwrap(), mono(&[1, 1]));
        assert_eq!(rep_cont_power_second(&lag, 0).unwrap(), mono(&[1]));
    }

    #[test]
    fn hermite_splits_into_half_integer_laguerre() {
        let fams = split_families(&hermite()).unwrap();
        assert_eq!(fams[0].child.alphas(), &[rat(-1, 2)]);
        assert_eq!(fams[1].child.alphas(), &[rat(1, 2)]);
        assert!(split_check(&hermite(), 8).passed());
        let s = SystemSpec::pure_power(Kind::Continuous, vec![rat(1, 3)], int(1), int(1), 2).unwrap();
        assert!(split_check(&s, 6).passed());
        let lag = SystemSpec::pure_power(Kind::Continuous, vec![rat(3, 4)], int(1), int(1), 1).unwrap();
        let fams = split_families(&lag).unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].child.alphas(), lag.alphas());
    }

    #[test]
    fn discrete_examples() {
        let rho = rat(5, 3);
        let charlier = SystemSpec::pure_power(Kind::Discrete, vec![], rho.clone(), int(1), 1).unwrap();
        let expected = Poly::new(Basis::FallingFactorial, vec![rho, int(1)]);
        assert_eq!(rep_disc_first(&charlier, 1).unwrap(), expected);
        assert_eq!(rep_disc_second(&charlier, 1).unwrap(), expected);
        let s = SystemSpec::pure_power(Kind::Discrete, vec![rat(1, 2)], int(1), int(1), 1).unwrap();
        for n in 0..=12 {
            let a = rep_disc_first(&s, n).unwrap();
            assert_eq!(a, rep_disc_second(&s, n).unwrap());
            assert_eq!(a, build_p(&s, n));
        }
        let gh = SystemSpec::pure_power(Kind::Discrete, vec![], int(1), int(1), 2).unwrap();
        for n in 0..=10 {
            assert_eq!(rep_disc_power_first(&gh, n).unwrap(), build_p(&gh, n));
            assert_eq!(rep_disc_power_second(&gh, n).unwrap(), build_p(&gh, n));
        }
        assert!(rep_disc_first(&gh, 2).is_err());
    }

    #[test]
    fn reflection_examples() {
        assert_eq!(pochhammer_reflect(&int(0), 3, 2).unwrap(), exact::pochhammer(&int(-3), 2));
        let mu = rat(1, 2);
        assert_eq!(
            pochhammer_reflect(&mu, 4, 4).unwrap(),
            exact::pochhammer(&(int(-4) - &mu), 4)
        );
        assert_eq!(pochhammer_reflect(&mu, 4, 0).unwrap(), int(1));
        assert!(pochhammer_reflect(&mu, 2, 3).is_err());
    }

    #[test]
    fn full_check_on_mixed_specs() {
        let specs = [
            SystemSpec::pure_power(Kind::Continuous, vec![rat(1, 3), rat(-2, 5)], rat(-1, 2), rat(3, 2), 3).unwrap(),
            SystemSpec::pure_power(Kind::Discrete, vec![rat(1, 3), rat(-2, 5)], rat(-1, 2), rat(3, 2), 2).unwrap(),
        ];
        for s in &specs {
            let r = representation_check(s, 14, Exec::Parallel);
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn inadmissible_second_form_is_skipped() {
        // S^(0) contains alpha + 1 = -1: the second form is refused once m >= 2.
        let s = SystemSpec::pure_power(Kind::Continuous, vec![int(-2)], int(1), int(1), 1).unwrap();
        assert!(rep_cont_power_second(&s, 3).is_err());
        let r = representation_check(&s, 6, Exec::Sequential);
        assert!(r.passed(), "{r:?}");
        assert!(!r.notes.is_empty());
    }

    proptest! {
        #[test]
        fn block_pochhammer_identity(p in -30i64..30, q in 1i64..6, l in 1usize..5, j in 0usize..9) {
            let x = rat(p, q);
            prop_assert_eq!(block_pochhammer(&x, l, j), exact::pochhammer(&x, l * j));
        }

        #[test]
        fn padding_with_matched_pair(a in -8i64..0, b in 1i64..9, mu in 1i64..9, mq in 1i64..4) {
            let base = HypParams::new(vec![int(a)], vec![rat(b, 3)]);
            let mut padded = base.clone();
            padded.upper.push(rat(mu, mq));
            padded.lower.push(rat(mu, mq));
            prop_assert_eq!(pfq_terminating(&base, 12).unwrap(), pfq_terminating(&padded, 12).unwrap());
        }

        #[test]
        fn reflection_identity(p in -20i64..20, q in 2i64..6, n in 0usize..10, j in 0usize..10) {
            prop_assume!(j <= n);
            let mu = rat(p, q);
            let rhs = pochhammer_reflect(&mu, n, j);
            prop_assume!(rhs.is_ok());
            prop_assert_eq!(rhs.unwrap(), exact::pochhammer(&(int(-(n as i64)) - &mu), j));
        }
    }
}
