//! The JSON arrangement file.
//!
//! ```json
//! {
//!   "field": {"type": "extension", "minpoly": [-2, 0, 1], "symbol": "r"},
//!   "variables": ["x", "y", "z"],
//!   "hyperplanes": [[1, 0, 0], [1, "-r", 0], [0, 1, -1]],
//!   "eta": {"degree": 2, "coefficients": {"x^2": 1, "y^2": 1, "z^2": 1}}
//! }
//! ```
//!
//! Coefficients are integers or strings such as `"1/2"` or `"r + 1"`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use starr_core::arr::Arrangement;
use starr_core::poly::{parse_polynomial, Monomial, Polynomial};
use starr_core::scalar::{Field, FieldDescriptor, Scalar};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed JSON at line {line}, column {column}: {msg}")]
    Json { line: usize, column: usize, msg: String },
    #[error("{at}: {msg}")]
    Invalid { at: String, msg: String },
}

fn invalid(at: impl Into<String>, msg: impl ToString) -> FileError {
    FileError::Invalid { at: at.into(), msg: msg.to_string() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Extension { minpoly: Vec<Coeff>, symbol: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

impl Coeff {
    pub fn from_scalar(s: &Scalar) -> Coeff {
        let text = s.to_string();
        text.parse().map_or(Coeff::Text(text), Coeff::Int)
    }

    fn to_scalar(&self, field: &Field, at: &str) -> Result<Scalar, FileError> {
        match self {
            Coeff::Int(n) => Ok(Scalar::from_int(*n)),
            Coeff::Text(s) => {
                let p = parse_polynomial(s, &[], field).map_err(|e| invalid(at, e))?;
                Ok(p.constant_term())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaFile {
    pub degree: u32,
    /// Monomial (e.g. `"x^2"`, `"y*z"`) to coefficient.
    pub coefficients: BTreeMap<String, Coeff>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementFile {
    pub field: FieldSpec,
    pub variables: Vec<String>,
    pub hyperplanes: Vec<Vec<Coeff>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<EtaFile>,
}

impl ArrangementFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        serde_json::from_str(text).map_err(|e| FileError::Json { line: e.line(), column: e.column(), msg: e.to_string() })
    }

    pub fn read(path: &Path) -> Result<Self, FileError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| FileError::Io { path: path.display().to_string(), source })?;
        Self::parse(&text)
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn field(&self) -> Result<Field, FileError> {
        match &self.field {
            FieldSpec::Rational => Ok(Field::Rational),
            FieldSpec::Extension { minpoly, symbol } => {
                let coeffs = minpoly
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        let s = c.to_scalar(&Field::Rational, &format!("field.minpoly[{i}]"))?;
                        s.as_rational().cloned().ok_or_else(|| invalid("field.minpoly", "rational coefficients expected"))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let desc = FieldDescriptor::new(coeffs, symbol.clone()).map_err(|e| invalid("field", e))?;
                Ok(Field::extension(desc))
            }
        }
    }

    /// The arrangement and, if present, `eta`.
    pub fn to_arrangement(&self) -> Result<(Arrangement, Option<Polynomial>), FileError> {
        let field = self.field()?;
        if self.variables.is_empty() {
            return Err(invalid("variables", "at least one variable is required"));
        }
        let mut forms = Vec::with_capacity(self.hyperplanes.len());
        for (i, h) in self.hyperplanes.iter().enumerate() {
            if h.len() != self.variables.len() {
                return Err(invalid(
                    format!("hyperplanes[{i}]"),
                    format!("{} coefficients for {} variables", h.len(), self.variables.len()),
                ));
            }
            let row = h
                .iter()
                .enumerate()
                .map(|(j, c)| c.to_scalar(&field, &format!("hyperplanes[{i}][{j}]")))
                .collect::<Result<Vec<_>, _>>()?;
            if row.iter().all(Scalar::is_zero) {
                return Err(invalid(format!("hyperplanes[{i}]"), "zero form"));
            }
            forms.push(row);
        }
        let a = Arrangement::with_names(field.clone(), self.variables.clone(), &forms).map_err(|e| invalid("hyperplanes", e))?;
        let eta = match &self.eta {
            None => None,
            Some(e) => Some(parse_eta(e, &self.variables, &field)?),
        };
        Ok((a, eta))
    }

    pub fn from_arrangement(a: &Arrangement, eta: Option<&Polynomial>) -> Self {
        let field = match a.field() {
            Field::Rational => FieldSpec::Rational,
            Field::Extension(d) => FieldSpec::Extension {
                minpoly: d.minpoly().iter().map(|q| Coeff::from_scalar(&Scalar::from_rational(q.clone()))).collect(),
                symbol: d.symbol().to_string(),
            },
        };
        let hyperplanes = a.hyperplanes().iter().map(|h| h.coeffs().iter().map(Coeff::from_scalar).collect()).collect();
        let eta = eta.map(|p| EtaFile {
            degree: p.degree().unwrap_or(0),
            coefficients: p
                .terms()
                .iter()
                .map(|(m, c)| (monomial_key(m, a.names()), Coeff::from_scalar(c)))
                .collect(),
        });
        ArrangementFile { field, variables: a.names().to_vec(), hyperplanes, eta }
    }
}

fn monomial_key(m: &Monomial, names: &[String]) -> String {
    Polynomial::monomial(*m, Scalar::one()).display_with(names).to_string()
}

fn parse_eta(e: &EtaFile, names: &[String], field: &Field) -> Result<Polynomial, FileError> {
    let n = names.len();
    let mut eta = Polynomial::zero(n);
    for (key, c) in &e.coefficients {
        let at = format!("eta.coefficients[{key:?}]");
        let m = parse_polynomial(key, names, field).map_err(|err| invalid(&at, err))?;
        if m.len() != 1 {
            return Err(invalid(&at, "key must be a single monomial"));
        }
        eta = &eta + &m.scale(&c.to_scalar(field, &at)?);
    }
    if eta.is_zero() || !eta.is_homogeneous() || eta.degree() != Some(e.degree) {
        return Err(invalid("eta", format!("not a nonzero homogeneous polynomial of degree {}", e.degree)));
    }
    Ok(eta)
}

#[cfg(test)]
mod tests {
    use super::*;

    const NOTSPLIT: &str = r#"{
        "field": {"type": "extension", "minpoly": [-2, 0, 1], "symbol": "r"},
        "variables": ["x", "y", "z"],
        "hyperplanes": [[1, 0, 0], [1, -1, 0], [1, 1, 0], [1, "-r", 0], [1, "r", 0], [0, 1, -1], [0, 0, 1]],
        "eta": {"degree": 2, "coefficients": {"x^2": 1, "y^2": 1, "z^2": 1}}
    }"#;

    #[test]
    fn parses_extension_file() {
        let f = ArrangementFile::parse(NOTSPLIT).unwrap();
        let (a, eta) = f.to_arrangement().unwrap();
        assert_eq!(a.len(), 7);
        assert_eq!(eta.unwrap().len(), 3);
        let back = ArrangementFile::parse(&f.render()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn errors_carry_locations() {
        let bad = NOTSPLIT.replace("[0, 0, 1]]", "[0, 0]]");
        let err = ArrangementFile::parse(&bad).unwrap().to_arrangement().unwrap_err();
        assert!(err.to_string().starts_with("hyperplanes[6]"), "{err}");
        let err = ArrangementFile::parse("{\"field\": ").unwrap_err();
        assert!(matches!(err, FileError::Json { line: 1, .. }));
        let bad = NOTSPLIT.replace("\"-r\"", "\"-q\"");
        let err = ArrangementFile::parse(&bad).unwrap().to_arrangement().unwrap_err();
        assert!(err.to_string().starts_with("hyperplanes[3][1]"), "{err}");
    }
}
