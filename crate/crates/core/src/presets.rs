//! Named families, selected by strings of the form `name key=value ...`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{self, int, Rational};
use crate::spec::{Kind, SystemSpec};

pub struct Preset {
    pub name: &'static str,
    pub summary: &'static str,
    /// Accepted keys with their default values.
    pub keys: &'static [(&'static str, &'static str)],
    build: fn(&Args) -> Result<SystemSpec>,
}

impl Preset {
    pub fn build_default(&self) -> Result<SystemSpec> {
        (self.build)(&Args::default())
    }
}

#[derive(Default)]
struct Args(BTreeMap<String, String>);

impl Args {
    fn rational(&self, key: &'static str, default: &str) -> Result<Rational> {
        let text = self.0.get(key).map(String::as_str).unwrap_or(default);
        exact::parse_rational(text, key)
    }

    fn positive(&self, key: &'static str, default: usize) -> Result<usize> {
        match self.0.get(key) {
            None => Ok(default),
            Some(text) => match text.parse::<usize>() {
                Ok(v) if v > 0 => Ok(v),
                _ => Err(Error::InvalidSpec {
                    field: key,
                    message: format!("{key} must be a positive integer, got {text:?}"),
                }),
            },
        }
    }
}

fn hermite(_: &Args) -> Result<SystemSpec> {
    SystemSpec::new(Kind::Continuous, vec![], int(1), vec![int(0), Rational::new((-1).into(), 2.into())])
}

fn laguerre(a: &Args) -> Result<SystemSpec> {
    SystemSpec::new(Kind::Continuous, vec![a.rational("alpha", "0")?], int(1), vec![int(1)])
}

fn gould_hopper(a: &Args) -> Result<SystemSpec> {
    SystemSpec::pure_power(Kind::Continuous, vec![], int(1), a.rational("tau", "1")?, a.positive("l", 3)?)
}

fn discrete_gould_hopper(a: &Args) -> Result<SystemSpec> {
    SystemSpec::pure_power(Kind::Discrete, vec![], int(1), a.rational("tau", "1")?, a.positive("l", 3)?)
}

fn konhauser_toscano(a: &Args) -> Result<SystemSpec> {
    let l = a.positive("l", 2)?;
    let alpha = a.rational("alpha", "0")?;
    let ln = int(l as i64);
    let alphas = (1..=l).map(|s| (&alpha + int(s as i64)) / &ln - Rational::one()).collect();
    SystemSpec::new(Kind::Continuous, alphas, int(1), vec![int(1)])
}

fn charlier(a: &Args) -> Result<SystemSpec> {
    SystemSpec::new(Kind::Discrete, vec![], a.rational("rho", "1")?, vec![int(1)])
}

fn meixner(a: &Args) -> Result<SystemSpec> {
    let beta = a.rational("beta", "1")?;
    let c = a.rational("c", "1/2")?;
    if c.is_zero() || c.is_one() {
        return Err(Error::InvalidSpec {
            field: "c",
            message: "c must differ from 0 and 1".into(),
        });
    }
    let rho = &c / (&c - Rational::one());
    SystemSpec::new(Kind::Discrete, vec![beta - Rational::one()], rho, vec![int(1)])
}

fn intro_example(a: &Args) -> Result<SystemSpec> {
    let l = a.positive("l", 3)?;
    SystemSpec::pure_power(Kind::Continuous, vec![], int(1), -int(l as i64).recip(), l)
}

pub const PRESETS: &[Preset] = &[
    Preset {
        name: "hermite",
        summary: "G = d/dx, q(G) = -G^2/2",
        keys: &[],
        build: hermite,
    },
    Preset {
        name: "laguerre",
        summary: "G = (x d/dx + alpha + 1) d/dx, q(G) = G",
        keys: &[("alpha", "0")],
        build: laguerre,
    },
    Preset {
        name: "gould-hopper",
        summary: "G = d/dx, q(G) = tau G^l",
        keys: &[("l", "3"), ("tau", "1")],
        build: gould_hopper,
    },
    Preset {
        name: "konhauser-toscano",
        summary: "R(H) = prod_{s=1..l} (H + (alpha+s)/l), q(G) = G",
        keys: &[("l", "2"), ("alpha", "0")],
        build: konhauser_toscano,
    },
    Preset {
        name: "charlier",
        summary: "discrete, R(H) = rho, q(G) = G",
        keys: &[("rho", "1")],
        build: charlier,
    },
    Preset {
        name: "meixner",
        summary: "discrete, R(H) = c/(c-1) (H + beta), q(G) = G",
        keys: &[("beta", "1"), ("c", "1/2")],
        build: meixner,
    },
    Preset {
        name: "intro-example",
        summary: "G = d/dx, q(G) = -G^l/l",
        keys: &[("l", "3")],
        build: intro_example,
    },
    Preset {
        name: "discrete-gould-hopper",
        summary: "discrete, R(H) = 1, q(G) = tau G^l",
        keys: &[("l", "3"), ("tau", "1")],
        build: discrete_gould_hopper,
    },
];

pub fn find(name: &str) -> Result<&'static Preset> {
    PRESETS
        .iter()
        .find(|p| p.name == name)
        .ok_or_else(|| Error::UnknownPreset(name.to_string()))
}

/// Builds a spec from `name key=value ...`.
pub fn resolve(text: &str) -> Result<SystemSpec> {
    let mut words = text.split_whitespace();
    let name = words.next().ok_or_else(|| Error::UnknownPreset(String::new()))?;
    let preset = find(name)?;
    let mut args = Args::default();
    for word in words {
        let (key, value) = word.split_once('=').ok_or_else(|| Error::InvalidSpec {
            field: "preset",
            message: format!("expected key=value, got {word:?}"),
        })?;
        if !preset.keys.iter().any(|(k, _)| *k == key) {
            return Err(Error::InvalidSpec {
                field: "preset",
                message: format!("preset {name} has no parameter {key:?}"),
            });
        }
        args.0.insert(key.to_string(), value.to_string());
    }
    (preset.build)(&args)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::operator;
    use crate::poly::{Basis, Poly};

    #[test]
    fn every_default_builds() {
        for p in PRESETS {
            assert!(p.build_default().is_ok(), "{}", p.name);
            assert_eq!(resolve(p.name).unwrap(), p.build_default().unwrap());
        }
    }

    #[test]
    fn hermite_document() {
        let s = resolve("hermite").unwrap();
        assert_eq!(s.kind(), Kind::Continuous);
        assert_eq!(s.d(), 0);
        assert_eq!(s.q(), &[int(0), rat(-1, 2)]);
        assert_eq!(operator::build_p(&s, 4), Poly::from_ints(Basis::Monomial, &[3, 0, -6, 0, 1]));
    }

    #[test]
    fn parameterized_presets() {
        assert_eq!(resolve("konhauser-toscano l=2 alpha=0").unwrap().alphas(), &[rat(-1, 2), int(0)]);
        let gh = resolve("gould-hopper l=3 tau=2").unwrap();
        assert_eq!(operator::build_p(&gh, 3), Poly::from_ints(Basis::Monomial, &[12, 0, 0, 1]));
        let m = resolve("meixner beta=2 c=1/3").unwrap();
        assert_eq!(m.rho(), &rat(-1, 2));
        assert_eq!(m.alphas(), &[int(1)]);
        assert_eq!(resolve("laguerre alpha=1/2").unwrap().alphas(), &[rat(1, 2)]);
    }

    #[test]
    fn bad_input() {
        assert!(matches!(resolve("nope"), Err(Error::UnknownPreset(_))));
        assert!(resolve("laguerre beta=1").is_err());
        assert!(resolve("laguerre alpha").is_err());
        assert!(resolve("gould-hopper l=0").is_err());
        assert!(resolve("meixner c=1").is_err());
        assert!(resolve("charlier rho=0/1").unwrap_err().to_string().contains("rho must be nonzero"));
    }
}
