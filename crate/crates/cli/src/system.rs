//! The JSON input format.

use serde::{Deserialize, Serialize};
use sgb_core::rational::{format_rational, parse_rational};
use sgb_core::{LatticePoint, LaurentPolynomial, MonomialOrder};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: String,
    pub exp: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OrderSpec {
    /// `"lex-default"`, `"lex"` or `"grevlex"`.
    Named(String),
    /// Exponent forms, one row per form.
    Matrix { matrix: Vec<Vec<i64>> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    pub variables: Vec<String>,
    pub polynomials: Vec<Vec<Term>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<OrderSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<Vec<u32>>,
    /// Explicit polytope family, each given by its generators.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polytopes: Option<Vec<Vec<Vec<i64>>>>,
    /// Multidegree of each polynomial over `polytopes`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<Vec<u32>>>,
}

impl SystemFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let file: SystemFile = serde_json::from_str(text).map_err(|e| CliError::Json(e.to_string()))?;
        file.validate()?;
        Ok(file)
    }

    fn validate(&self) -> Result<(), CliError> {
        let n = self.variables.len();
        if n == 0 {
            return Err(CliError::Input("at least one variable is required".into()));
        }
        for (i, name) in self.variables.iter().enumerate() {
            if self.variables[..i].contains(name) {
                return Err(CliError::Input(format!("variable {name:?} is declared twice")));
            }
        }
        for (i, p) in self.polynomials.iter().enumerate() {
            for t in p {
                if t.exp.len() != n {
                    return Err(CliError::Dimension(format!(
                        "polynomial {}: exponent {:?} has {} entries for {n} variables",
                        i + 1,
                        t.exp,
                        t.exp.len()
                    )));
                }
            }
        }
        if let Some(polys) = &self.polytopes {
            for (i, q) in polys.iter().enumerate() {
                if q.iter().any(|g| g.len() != n) {
                    return Err(CliError::Dimension(format!(
                        "polytope {}: generators must have {n} coordinates",
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn laurent_polynomials(&self) -> Result<Vec<LaurentPolynomial>, CliError> {
        self.polynomials
            .iter()
            .enumerate()
            .map(|(i, terms)| {
                let mut p = LaurentPolynomial::zero();
                for t in terms {
                    let c = parse_rational(&t.coeff)
                        .map_err(|_| CliError::Input(format!("polynomial {}: bad coefficient {:?}", i + 1, t.coeff)))?;
                    p.add_term(LatticePoint::new(t.exp.clone()), c);
                }
                if p.is_zero() {
                    return Err(CliError::Input(format!("polynomial {} is zero", i + 1)));
                }
                Ok(p)
            })
            .collect()
    }

    pub fn variable_index(&self, name: &str) -> Result<usize, CliError> {
        self.variables
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| CliError::Input(format!("unknown variable {name:?}")))
    }
}

/// Terms in descending order under `order`.
pub fn encode(p: &LaurentPolynomial, order: &MonomialOrder) -> Vec<Term> {
    p.sorted_terms(order)
        .into_iter()
        .map(|(a, c)| Term {
            coeff: format_rational(c),
            exp: a.coords().to_vec(),
        })
        .collect()
}

/// A bare system (variables and polynomials only).
pub fn system_of(variables: &[String], polys: &[LaurentPolynomial], order: &MonomialOrder) -> SystemFile {
    SystemFile {
        variables: variables.to_vec(),
        polynomials: polys.iter().map(|p| encode(p, order)).collect(),
        order: None,
        degree: None,
        polytopes: None,
        degrees: None,
    }
}
