//! The space-description file format (JSON).
//!
//! ```json
//! {
//!   "algebra": { "family": "sl", "params": [2] },
//!   "subalgebra": { "basis": [[["0", "1"], ["1", "0"]]] },
//!   "options": { "tmax": 50, "samples": 5, "seed": 0 }
//! }
//! ```
//!
//! * `algebra` is either `{"family": "sl"|"so"|"sp", "params": [...]}`,
//!   `{"family": "product", "factors": [algebra, ...]}`, or
//!   `{"basis": [matrix, ...]}`. `sl` takes `[n]`, `so` takes `[p, q]`, and
//!   `sp` takes `[n]` for `sp(2n)`.
//! * `subalgebra` is `{"basis": [matrix, ...]}`,
//!   `{"symmetric_involution": matrix, "kind": "conjugation"|"form"}` (fixed
//!   points of `X ↦ JXJ⁻¹` or `X ↦ −JXᵀJ⁻¹`; `kind` defaults to
//!   `conjugation`), or the string `"diagonal"` for products of equal
//!   factors.
//! * `cartan` (list of matrices) and `seed` (list of rationals, coordinates
//!   of a regular element of 𝔞) are optional for families and `cartan` is
//!   required for an explicit basis.
//! * A matrix is a list of rows; every entry is a rational string `"p/q"`.
//!
//! Emitting a parsed description and parsing it again gives an identical
//! description.

use std::fmt;

use serde::de::{self, MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactalg::{format_rational, parse_rational, Matrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Q(pub Rational);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text)
            .map(Q)
            .map_err(|_| de::Error::custom(format!("malformed rational {text:?}")))
    }
}

/// A square matrix of rational strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixSpec(pub Matrix);

impl Serialize for MatrixSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Q>> = (0..self.0.rows())
            .map(|i| self.0.row(i).iter().cloned().map(Q).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MatrixSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<Q>>::deserialize(d)?;
        let n = rows.len();
        if n == 0 {
            return Err(de::Error::custom("empty matrix"));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(de::Error::custom(format!(
                "matrix is not square: {n} rows but a row of length {}",
                r.len()
            )));
        }
        let vectors: Vec<Vec<Rational>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(|q| q.0).collect())
            .collect();
        Ok(MatrixSpec(
            Matrix::from_rows(n, &vectors).map_err(de::Error::custom)?,
        ))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Sl,
    So,
    Sp,
    Product,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub factors: Vec<AlgebraSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<MatrixSpec>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InvolutionKindSpec {
    #[default]
    Conjugation,
    Form,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubalgebraSpec {
    Basis(Vec<MatrixSpec>),
    Involution {
        matrix: MatrixSpec,
        kind: InvolutionKindSpec,
    },
    Diagonal,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SubalgebraObject {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<MatrixSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    symmetric_involution: Option<MatrixSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kind: Option<InvolutionKindSpec>,
}

impl Serialize for SubalgebraSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            SubalgebraSpec::Diagonal => s.serialize_str("diagonal"),
            SubalgebraSpec::Basis(b) => SubalgebraObject {
                basis: Some(b.clone()),
                symmetric_involution: None,
                kind: None,
            }
            .serialize(s),
            SubalgebraSpec::Involution { matrix, kind } => SubalgebraObject {
                basis: None,
                symmetric_involution: Some(matrix.clone()),
                kind: Some(*kind),
            }
            .serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for SubalgebraSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = SubalgebraSpec;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("\"diagonal\" or a subalgebra object")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Self::Value, E> {
                match v {
                    "diagonal" => Ok(SubalgebraSpec::Diagonal),
                    other => Err(E::custom(format!("unknown named subalgebra {other:?}"))),
                }
            }

            fn visit_map<A: MapAccess<'de>>(self, map: A) -> Result<Self::Value, A::Error> {
                let obj =
                    SubalgebraObject::deserialize(de::value::MapAccessDeserializer::new(map))?;
                match (obj.basis, obj.symmetric_involution) {
                    (Some(b), None) if obj.kind.is_none() => Ok(SubalgebraSpec::Basis(b)),
                    (None, Some(m)) => Ok(SubalgebraSpec::Involution {
                        matrix: m,
                        kind: obj.kind.unwrap_or_default(),
                    }),
                    _ => Err(de::Error::custom(
                        "subalgebra needs exactly one of `basis` or `symmetric_involution`",
                    )),
                }
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tmax: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub converged_threshold: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diverged_threshold: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDescription {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub algebra: AlgebraSpec,
    pub subalgebra: SubalgebraSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan: Option<Vec<MatrixSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<Vec<Q>>,
    #[serde(default, skip_serializing_if = "is_default")]
    pub options: Options,
}

fn is_default(o: &Options) -> bool {
    *o == Options::default()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

pub fn parse_space(text: &str) -> Result<SpaceDescription, ParseError> {
    serde_json::from_str(text).map_err(|e| ParseError {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn emit_space(desc: &SpaceDescription) -> String {
    serde_json::to_string_pretty(desc).expect("descriptions always serialize")
}
