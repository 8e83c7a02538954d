//! Seeded parameter grids and batch runs of the per-family checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{int, rat, Rational};
use crate::hypergeom;
use crate::operator;
use crate::par::Exec;
use crate::recurrence;
use crate::report::Report;
use crate::spec::{Kind, SystemSpec};

pub const DEFAULT_SEED: u64 = 0x6768_6831;

const DENOMINATORS: [i64; 5] = [2, 3, 4, 5, 7];

/// A non-integer `p/q` with `q` in `{2, 3, 4, 5, 7}` and `|p/q| < 3`.
pub fn random_fraction(rng: &mut impl Rng) -> Rational {
    loop {
        let q = DENOMINATORS[rng.random_range(0..DENOMINATORS.len())];
        let p = rng.random_range(-3 * q + 1..3 * q);
        if p % q != 0 {
            return rat(p, q);
        }
    }
}

/// `{continuous, discrete} x d in {0,1,2} x l in {1,2,3} x 3 draws x rho in {1, -1/2}`.
/// Each draw fixes the roots and `tau`; the first draw uses `tau = 1`.
pub fn grid(seed: u64) -> Vec<SystemSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for kind in [Kind::Continuous, Kind::Discrete] {
        for d in 0..3 {
            for l in 1..=3 {
                for draw in 0..3 {
                    let alphas: Vec<Rational> = (0..d).map(|_| random_fraction(&mut rng)).collect();
                    let tau = if draw == 0 { int(1) } else { random_fraction(&mut rng) };
                    for rho in [int(1), rat(-1, 2)] {
                        out.push(
                            SystemSpec::pure_power(kind, alphas.clone(), rho, tau.clone(), l)
                                .expect("grid parameters are valid"),
                        );
                    }
                }
            }
        }
    }
    out
}

/// Families whose `q` has two nonzero coefficients.
pub fn general_q_specs() -> Vec<SystemSpec> {
    vec![
        SystemSpec::new(Kind::Continuous, vec![rat(1, 2)], int(1), vec![int(1), rat(1, 3)]),
        SystemSpec::new(Kind::Discrete, vec![], int(2), vec![rat(1, 2), int(0), int(-1)]),
        SystemSpec::new(Kind::Continuous, vec![rat(-1, 3), rat(2, 5)], rat(-1, 2), vec![int(0), int(1), rat(3, 4)]),
    ]
    .into_iter()
    .map(|s| s.expect("fixed parameters are valid"))
    .collect()
}

/// Runs `check` on every spec, distributing specs through `exec`.
pub fn run<F>(specs: &[SystemSpec], exec: Exec, check: F) -> Vec<Report>
where
    F: Fn(&SystemSpec) -> Report + Sync + Send,
{
    exec.map(specs, check)
}

pub fn representation_sweep(specs: &[SystemSpec], n_max: usize, exec: Exec) -> Vec<Report> {
    run(specs, exec, |s| hypergeom::representation_check(s, n_max, Exec::Sequential))
}

pub fn eigen_sweep(specs: &[SystemSpec], n_max: usize, exec: Exec) -> Vec<Report> {
    run(specs, exec, |s| operator::eigen_check(s, n_max, Exec::Sequential))
}

pub fn hahn_sweep(specs: &[SystemSpec], n_max: usize, exec: Exec) -> Vec<Report> {
    run(specs, exec, |s| operator::hahn_check(s, n_max, Exec::Sequential))
}

pub fn bandwidth_sweep(specs: &[SystemSpec], n_max: usize, exec: Exec) -> Vec<Report> {
    run(specs, exec, |s| recurrence::bandwidth_check(s, n_max, Exec::Sequential))
}
