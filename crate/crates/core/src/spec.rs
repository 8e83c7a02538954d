//! Description of one generalized Gould-Hopper family and its text document.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::poly::Basis;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// `G = R(H) d/dx` acting on monomials.
    Continuous,
    /// `G = R(H) Delta` acting on falling factorials.
    Discrete,
}

impl Kind {
    pub fn natural_basis(self) -> Basis {
        match self {
            Kind::Continuous => Basis::Monomial,
            Kind::Discrete => Basis::FallingFactorial,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Continuous => "continuous",
            Kind::Discrete => "discrete",
        }
    }
}

/// `R(H) = rho * prod_j (H + alpha_j + 1)` and `q(G) = sum_k c_k G^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemSpec {
    kind: Kind,
    alphas: Vec<Rational>,
    rho: Rational,
    q: Vec<Rational>,
}

impl SystemSpec {
    /// `q[k-1]` holds the coefficient of `G^k`; the last entry must be nonzero.
    pub fn new(kind: Kind, alphas: Vec<Rational>, rho: Rational, q: Vec<Rational>) -> Result<Self> {
        if rho.is_zero() {
            return Err(Error::InvalidSpec {
                field: "rho",
                message: "rho must be nonzero".into(),
            });
        }
        if q.is_empty() {
            return Err(Error::InvalidSpec {
                field: "q",
                message: "q must have degree at least 1".into(),
            });
        }
        if q.last().is_some_and(|c| c.is_zero()) {
            return Err(Error::InvalidSpec {
                field: "q",
                message: "leading coefficient of q must be nonzero".into(),
            });
        }
        Ok(SystemSpec { kind, alphas, rho, q })
    }

    /// `q(G) = tau * G^l`.
    pub fn pure_power(kind: Kind, alphas: Vec<Rational>, rho: Rational, tau: Rational, l: usize) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidSpec {
                field: "q",
                message: "q must have degree at least 1".into(),
            });
        }
        let mut q = vec![Rational::zero(); l];
        q[l - 1] = tau;
        Self::new(kind, alphas, rho, q)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn alphas(&self) -> &[Rational] {
        &self.alphas
    }

    pub fn rho(&self) -> &Rational {
        &self.rho
    }

    pub fn q(&self) -> &[Rational] {
        &self.q
    }

    pub fn natural_basis(&self) -> Basis {
        self.kind.natural_basis()
    }

    /// Degree of `R`.
    pub fn d(&self) -> usize {
        self.alphas.len()
    }

    /// Degree of `q`.
    pub fn l(&self) -> usize {
        self.q.len()
    }

    pub fn is_pure_power(&self) -> bool {
        self.q[..self.q.len() - 1].iter().all(|c| c.is_zero())
    }

    /// `tau` of `q = tau G^l`, if `q` is a pure power.
    pub fn tau(&self) -> Option<&Rational> {
        self.is_pure_power().then(|| self.q.last().unwrap())
    }

    pub fn require_pure_power(&self) -> Result<&Rational> {
        self.tau().ok_or(Error::NotPurePower)
    }

    /// `eta = l^(d+1) rho`.
    pub fn eta(&self) -> Rational {
        exact::pow(&exact::int(self.l() as i64), self.d() + 1) * &self.rho
    }

    /// `eta_1 = (-1)^((d+1) l) eta / l`.
    pub fn eta1(&self) -> Rational {
        let v = self.eta() / exact::int(self.l() as i64);
        if ((self.d() + 1) * self.l()) % 2 == 1 {
            -v
        } else {
            v
        }
    }

    /// `R(h) = rho * prod (h + alpha_j + 1)`.
    pub fn r_at(&self, h: &Rational) -> Rational {
        self.alphas
            .iter()
            .fold(self.rho.clone(), |acc, a| acc * (h + a + Rational::one()))
    }

    /// The same family with `R(H)` replaced by `R(H+1)`.
    pub fn hahn_shift(&self) -> SystemSpec {
        SystemSpec {
            kind: self.kind,
            alphas: self.alphas.iter().map(|a| a + Rational::one()).collect(),
            rho: self.rho.clone(),
            q: self.q.clone(),
        }
    }

    pub fn with_rho(&self, rho: Rational) -> Result<SystemSpec> {
        SystemSpec::new(self.kind, self.alphas.clone(), rho, self.q.clone())
    }

    pub fn to_document(&self) -> SpecDocument {
        SpecDocument {
            kind: self.kind.as_str().to_string(),
            alphas: self.alphas.iter().map(exact::format_rational).collect(),
            rho: exact::format_rational(&self.rho),
            q: self.q.iter().map(exact::format_rational).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("spec document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SpecDocument = serde_json::from_str(text).map_err(|e| Error::InvalidSpec {
            field: "document",
            message: e.to_string(),
        })?;
        doc.to_spec()
    }

    /// A short human-readable label.
    pub fn label(&self) -> String {
        let alphas: Vec<String> = self.alphas.iter().map(exact::format_rational).collect();
        let q: Vec<String> = self.q.iter().map(exact::format_rational).collect();
        format!(
            "{} alphas=[{}] rho={} q=[{}]",
            self.kind.as_str(),
            alphas.join(","),
            self.rho,
            q.join(",")
        )
    }
}

/// Serialized form: every scalar is an exact rational string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub kind: String,
    pub alphas: Vec<String>,
    pub rho: String,
    pub q: Vec<String>,
}

impl SpecDocument {
    pub fn to_spec(&self) -> Result<SystemSpec> {
        let kind = match self.kind.as_str() {
            "continuous" => Kind::Continuous,
            "discrete" => Kind::Discrete,
            other => {
                return Err(Error::InvalidSpec {
                    field: "kind",
                    message: format!("kind must be \"continuous\" or \"discrete\", got {other:?}"),
                })
            }
        };
        let alphas = self
            .alphas
            .iter()
            .enumerate()
            .map(|(i, s)| exact::parse_rational(s, &format!("alphas[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        let rho = exact::parse_rational(&self.rho, "rho")?;
        let q = self
            .q
            .iter()
            .enumerate()
            .map(|(i, s)| exact::parse_rational(s, &format!("q[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        SystemSpec::new(kind, alphas, rho, q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn derived_quantities() {
        let s = SystemSpec::pure_power(Kind::Continuous, vec![rat(1, 2)], int(3), int(1), 2).unwrap();
        assert_eq!(s.d(), 1);
        assert_eq!(s.l(), 2);
        assert_eq!(s.eta(), int(12));
        // (d+1) l = 4 is even
        assert_eq!(s.eta1(), int(6));
        let t = SystemSpec::pure_power(Kind::Discrete, vec![], int(2), int(1), 3).unwrap();
        assert_eq!(t.eta(), int(6));
        assert_eq!(t.eta1(), int(-2));
        assert_eq!(s.r_at(&int(1)), int(3) * rat(5, 2));
    }

    #[test]
    fn invariants_rejected() {
        let err = SystemSpec::new(Kind::Continuous, vec![], int(0), vec![int(1)]).unwrap_err();
        assert_eq!(err.to_string(), "rho: rho must be nonzero");
        assert!(SystemSpec::new(Kind::Continuous, vec![], int(1), vec![]).is_err());
        assert!(SystemSpec::new(Kind::Continuous, vec![], int(1), vec![int(1), int(0)]).is_err());
    }

    #[test]
    fn hahn_shift_examples() {
        let s = SystemSpec::new(Kind::Continuous, vec![int(0)], int(1), vec![int(1)]).unwrap();
        assert_eq!(s.hahn_shift().alphas(), &[int(1)]);
        let h = SystemSpec::new(Kind::Continuous, vec![], int(1), vec![int(0), rat(-1, 2)]).unwrap();
        assert_eq!(h.hahn_shift(), h);
        let m = SystemSpec::new(Kind::Discrete, vec![rat(1, 2), rat(-1, 3)], int(1), vec![int(1)]).unwrap();
        assert_eq!(m.hahn_shift().alphas(), &[rat(3, 2), rat(2, 3)]);
    }

    #[test]
    fn document_round_trip() {
        let s = SystemSpec::new(
            Kind::Discrete,
            vec![rat(-7, 3), int(4)],
            rat(-1, 2),
            vec![rat(2, 5), int(0), int(-3)],
        )
        .unwrap();
        let text = s.to_json();
        assert_eq!(SystemSpec::from_json(&text).unwrap(), s);
        assert!(text.contains("\"-7/3\""));
    }

    #[test]
    fn malformed_documents_name_the_field() {
        let bad_rho = r#"{"kind":"continuous","alphas":[],"rho":"0/1","q":["1"]}"#;
        assert!(SystemSpec::from_json(bad_rho).unwrap_err().to_string().contains("rho must be nonzero"));
        let bad_kind = r#"{"kind":"weird","alphas":[],"rho":"1","q":["1"]}"#;
        assert!(SystemSpec::from_json(bad_kind).unwrap_err().to_string().starts_with("kind"));
        let bad_alpha = r#"{"kind":"discrete","alphas":["1/x"],"rho":"1","q":["1"]}"#;
        assert!(SystemSpec::from_json(bad_alpha).unwrap_err().to_string().contains("alphas[0]"));
    }
}
