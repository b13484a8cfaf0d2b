use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::{MpMatrix, MpVector};
use crate::tropical::validate_target;

/// Error norm: a finite order `p` or the max norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Norm {
    Lp(f64),
    Inf,
}

impl Norm {
    pub fn order(self) -> Option<f64> {
        match self {
            Norm::Lp(p) => Some(p),
            Norm::Inf => None,
        }
    }

    fn validate(self) -> Result<()> {
        if let Norm::Lp(p) = self {
            if !(p.is_finite() && p > 0.0) {
                return Err(Error::invalid(format!(
                    "norm order must be finite and > 0, got {p}"
                )));
            }
            if p < 1.0 {
                log::warn!("norm order p = {p} < 1 is a quasi-norm; results are experimental");
            }
        }
        Ok(())
    }
}

impl fmt::Display for Norm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Norm::Lp(p) => write!(f, "{p}"),
            Norm::Inf => f.write_str("inf"),
        }
    }
}

impl FromStr for Norm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") {
            return Ok(Norm::Inf);
        }
        let p: f64 = t
            .parse()
            .map_err(|_| Error::invalid(format!("bad norm order {t:?}")))?;
        let norm = Norm::Lp(p);
        norm.validate()?;
        Ok(norm)
    }
}

impl Serialize for Norm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Norm::Lp(p) => s.serialize_f64(*p),
            Norm::Inf => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Norm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(p) => Ok(Norm::Lp(p)),
            Raw::Str(s) if s.eq_ignore_ascii_case("inf") => Ok(Norm::Inf),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("bad norm {s:?}"))),
        }
    }
}

/// Error budget, stored in the form it was given.
///
/// `Epsilon` bounds `‖r‖_p^p`; `Theta` bounds `‖r‖_p`, so `ε = θ^p`. For the
/// max norm both mean the same bound on `‖r‖_∞ / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Budget {
    Epsilon(f64),
    Theta(f64),
}

impl Budget {
    pub fn theta(self, norm: Norm) -> f64 {
        match (self, norm) {
            (Budget::Theta(t), _) => t,
            (Budget::Epsilon(e), Norm::Lp(p)) => e.powf(1.0 / p),
            (Budget::Epsilon(e), Norm::Inf) => e,
        }
    }

    pub fn epsilon(self, norm: Norm) -> f64 {
        match (self, norm) {
            (Budget::Epsilon(e), _) => e,
            (Budget::Theta(t), Norm::Lp(p)) => t.powf(p),
            (Budget::Theta(t), Norm::Inf) => t,
        }
    }

    /// `ln ε`, without forming `θ^p`.
    pub fn ln_epsilon(self, norm: Norm) -> f64 {
        match (self, norm) {
            (Budget::Epsilon(e), _) => e.ln(),
            (Budget::Theta(t), Norm::Lp(p)) => p * t.ln(),
            (Budget::Theta(t), Norm::Inf) => t.ln(),
        }
    }

    fn validate(self) -> Result<()> {
        let v = match self {
            Budget::Epsilon(v) | Budget::Theta(v) => v,
        };
        if !(v.is_finite() && v >= 0.0) {
            return Err(Error::invalid(format!(
                "budget must be finite and >= 0, got {v}"
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Estimator {
    /// Sparse greatest lower estimate: greedy support, lateness kept.
    Sgle,
    /// SGLE shifted up by half its max residual.
    Smmae,
}

impl fmt::Display for Estimator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Estimator::Sgle => "sgle",
            Estimator::Smmae => "smmae",
        })
    }
}

impl FromStr for Estimator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sgle" => Ok(Estimator::Sgle),
            "smmae" => Ok(Estimator::Smmae),
            other => Err(Error::invalid(format!("unknown estimator {other:?}"))),
        }
    }
}

/// Norm, budget and estimator, independent of the data.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Objective {
    pub norm: Norm,
    pub budget: Budget,
    pub estimator: Estimator,
}

impl Objective {
    pub fn new(norm: Norm, budget: Budget, estimator: Estimator) -> Result<Self> {
        norm.validate()?;
        budget.validate()?;
        Ok(Objective {
            norm,
            budget,
            estimator,
        })
    }

    pub fn theta(&self) -> f64 {
        self.budget.theta(self.norm)
    }
}

/// A sparse max-plus approximation problem `A ⊞ x ≈ b`.
#[derive(Debug, Clone, PartialEq)]
pub struct FitProblem {
    a: MpMatrix,
    b: MpVector,
    objective: Objective,
}

impl FitProblem {
    pub fn new(a: MpMatrix, b: MpVector, objective: Objective) -> Result<Self> {
        if a.rows() != b.len() {
            return Err(Error::shape(format!(
                "matrix has {} rows but target has {} entries",
                a.rows(),
                b.len()
            )));
        }
        validate_target(&b)?;
        objective.norm.validate()?;
        objective.budget.validate()?;
        Ok(FitProblem { a, b, objective })
    }

    pub fn matrix(&self) -> &MpMatrix {
        &self.a
    }

    pub fn target(&self) -> &MpVector {
        &self.b
    }

    pub fn objective(&self) -> Objective {
        self.objective
    }

    pub fn norm(&self) -> Norm {
        self.objective.norm
    }

    pub fn budget(&self) -> Budget {
        self.objective.budget
    }

    pub fn estimator(&self) -> Estimator {
        self.objective.estimator
    }

    pub fn theta(&self) -> f64 {
        self.objective.theta()
    }

    pub fn with_objective(&self, objective: Objective) -> FitProblem {
        FitProblem {
            a: self.a.clone(),
            b: self.b.clone(),
            objective,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_conversion() {
        let b = Budget::Theta(2.0);
        assert_eq!(b.epsilon(Norm::Lp(3.0)), 8.0);
        assert_eq!(Budget::Epsilon(8.0).theta(Norm::Lp(3.0)), 2.0);
        assert_eq!(Budget::Epsilon(2.5).theta(Norm::Inf), 2.5);
        assert!((Budget::Theta(5.0).ln_epsilon(Norm::Lp(150.0)) - 150.0 * 5f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_objectives() {
        assert!(Objective::new(Norm::Lp(0.0), Budget::Theta(1.0), Estimator::Sgle).is_err());
        assert!(
            Objective::new(Norm::Lp(f64::INFINITY), Budget::Theta(1.0), Estimator::Sgle).is_err()
        );
        assert!(Objective::new(Norm::Lp(2.0), Budget::Theta(-1.0), Estimator::Sgle).is_err());
        assert!(Objective::new(Norm::Lp(0.3), Budget::Epsilon(360.0), Estimator::Sgle).is_ok());
    }

    #[test]
    fn parse_norm_and_estimator() {
        assert_eq!("inf".parse::<Norm>().unwrap(), Norm::Inf);
        assert_eq!("150".parse::<Norm>().unwrap(), Norm::Lp(150.0));
        assert!("-1".parse::<Norm>().is_err());
        assert_eq!("SMMAE".parse::<Estimator>().unwrap(), Estimator::Smmae);
        assert!("mmae".parse::<Estimator>().is_err());
    }

    #[test]
    fn problem_validates_shapes() {
        let a = MpMatrix::from_rows(&[[0.0, 1.0]]).unwrap();
        let obj = Objective::new(Norm::Lp(1.0), Budget::Theta(1.0), Estimator::Sgle).unwrap();
        let b = MpVector::from_f64(&[1.0, 2.0]).unwrap();
        assert!(matches!(
            FitProblem::new(a.clone(), b, obj),
            Err(Error::Shape(_))
        ));
        let b = MpVector::from_f64(&[f64::INFINITY]).unwrap();
        assert!(matches!(
            FitProblem::new(a, b, obj),
            Err(Error::NonFiniteTarget { .. })
        ));
    }
}
