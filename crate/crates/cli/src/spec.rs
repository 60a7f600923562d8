//! Surface-spec documents.
//!
//! A spec is one of
//!
//! ```json
//! {"gram": [[0, 1], [1, 0]], "euler": [2, 2], "label": "E_{1,1}"}
//! {"builder": "s2xs2", "params": [1, 1]}
//! {"sum": [spec, spec, ...]}
//! ```
//!
//! Integers may be JSON numbers or decimal strings; strings are required
//! for values outside the `i64`/`u64` range.

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use seifert_core::{IntegralLattice, SeifertSurfaceModel};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceSpec {
    Explicit {
        gram: Vec<Vec<BigInt>>,
        euler: Vec<BigInt>,
        label: Option<String>,
    },
    Builder {
        builder: Builder,
        params: Vec<BigInt>,
    },
    Sum(Vec<SurfaceSpec>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builder {
    S2xS2,
    Cp2,
    Cp2Bar,
    Kummer,
    P,
    Q,
}

impl Builder {
    fn parse(name: &str) -> Option<Builder> {
        Some(match name {
            "s2xs2" => Builder::S2xS2,
            "cp2" => Builder::Cp2,
            "cp2bar" => Builder::Cp2Bar,
            "kummer" => Builder::Kummer,
            "p" => Builder::P,
            "q" => Builder::Q,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Builder::S2xS2 => "s2xs2",
            Builder::Cp2 => "cp2",
            Builder::Cp2Bar => "cp2bar",
            Builder::Kummer => "kummer",
            Builder::P => "p",
            Builder::Q => "q",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Builder::S2xS2 | Builder::Kummer => 2,
            Builder::Cp2 | Builder::Cp2Bar => 1,
            Builder::P | Builder::Q => 0,
        }
    }
}

/// Malformed spec document (bad JSON, wrong shape, wrong arity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecError(pub String);

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for SpecError {}

fn err<T>(msg: impl Into<String>) -> Result<T, SpecError> {
    Err(SpecError(msg.into()))
}

/// Reads a JSON integer: a number in `i64`/`u64` range or a decimal string.
pub fn json_int(v: &Value) -> Result<BigInt, SpecError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                err(format!(
                    "{n} is not an integer in range; write large values as decimal strings"
                ))
            }
        }
        Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| SpecError(format!("{s:?} is not a decimal integer"))),
        other => err(format!("expected an integer, found {other}")),
    }
}

fn int_list(v: &Value, what: &str) -> Result<Vec<BigInt>, SpecError> {
    match v {
        Value::Array(xs) => xs.iter().map(json_int).collect(),
        _ => err(format!("{what} must be an array of integers")),
    }
}

impl SurfaceSpec {
    pub fn parse_str(text: &str) -> Result<SurfaceSpec, SpecError> {
        let v: Value = serde_json::from_str(text).map_err(|e| SpecError(format!("invalid JSON: {e}")))?;
        SurfaceSpec::from_value(&v)
    }

    pub fn read(path: &Path) -> Result<SurfaceSpec, SpecError> {
        let text =
            std::fs::read_to_string(path).map_err(|e| SpecError(format!("cannot read {}: {e}", path.display())))?;
        SurfaceSpec::parse_str(&text)
    }

    pub fn from_value(v: &Value) -> Result<SurfaceSpec, SpecError> {
        let Value::Object(obj) = v else {
            return err("a surface spec must be a JSON object");
        };
        if let Some(parts) = obj.get("sum") {
            let Value::Array(parts) = parts else {
                return err("\"sum\" must be an array of specs");
            };
            if parts.is_empty() {
                return err("\"sum\" needs at least one summand");
            }
            return Ok(SurfaceSpec::Sum(
                parts.iter().map(SurfaceSpec::from_value).collect::<Result<_, _>>()?,
            ));
        }
        if let Some(name) = obj.get("builder") {
            let Some(builder) = name.as_str().and_then(Builder::parse) else {
                return err(format!(
                    "unknown builder {name}; expected one of s2xs2, cp2, cp2bar, kummer, p, q"
                ));
            };
            let params = match obj.get("params") {
                Some(p) => int_list(p, "\"params\"")?,
                None => Vec::new(),
            };
            if params.len() != builder.arity() {
                return err(format!(
                    "builder {} takes {} parameter(s), got {}",
                    builder.name(),
                    builder.arity(),
                    params.len()
                ));
            }
            return Ok(SurfaceSpec::Builder { builder, params });
        }
        if let Some(gram) = obj.get("gram") {
            let Value::Array(rows) = gram else {
                return err("\"gram\" must be an array of rows");
            };
            let gram = rows
                .iter()
                .map(|r| int_list(r, "each gram row"))
                .collect::<Result<_, _>>()?;
            let euler = match obj.get("euler") {
                Some(e) => int_list(e, "\"euler\"")?,
                None => return err("an explicit spec needs \"euler\""),
            };
            let label = match obj.get("label") {
                None | Some(Value::Null) => None,
                Some(Value::String(s)) => Some(s.clone()),
                Some(_) => return err("\"label\" must be a string"),
            };
            return Ok(SurfaceSpec::Explicit { gram, euler, label });
        }
        err("a surface spec needs one of \"gram\", \"builder\" or \"sum\"")
    }

    /// Builds and validates the model.
    pub fn build(&self) -> Result<SeifertSurfaceModel, seifert_core::Error> {
        match self {
            SurfaceSpec::Explicit { gram, euler, label } => {
                let form = IntegralLattice::from_gram(gram.clone())?;
                SeifertSurfaceModel::new(form, euler.clone(), label.clone().unwrap_or_else(|| "custom".into()))
            }
            SurfaceSpec::Builder { builder, params } => {
                let p = |i: usize| params[i].clone();
                Ok(match builder {
                    Builder::S2xS2 => SeifertSurfaceModel::s2xs2(p(0), p(1)),
                    Builder::Cp2 => SeifertSurfaceModel::cp2(p(0)),
                    Builder::Cp2Bar => SeifertSurfaceModel::cp2bar(p(0)),
                    Builder::Kummer => SeifertSurfaceModel::kummer(p(0), p(1)),
                    Builder::P => SeifertSurfaceModel::p_block(),
                    Builder::Q => SeifertSurfaceModel::q_block(),
                })
            }
            SurfaceSpec::Sum(parts) => {
                let mut iter = parts.iter();
                let mut acc = iter.next().expect("non-empty sum").build()?;
                for part in iter {
                    acc = acc.boundary_connected_sum(&part.build()?);
                }
                Ok(acc)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_shapes() {
        let s = SurfaceSpec::parse_str(r#"{"builder":"s2xs2","params":[1,1]}"#).unwrap();
        assert_eq!(s.build().unwrap().haefliger_invariant(), BigInt::from(1));

        let s = SurfaceSpec::parse_str(r#"{"gram":[[0,1],[1,0]],"euler":["2","2"],"label":"E11"}"#).unwrap();
        let m = s.build().unwrap();
        assert_eq!(m.label(), "E11");
        assert_eq!(m.hopf_invariant(), BigInt::from(-8));

        let s = SurfaceSpec::parse_str(r#"{"sum":[{"builder":"p"},{"builder":"q","params":[]}]}"#).unwrap();
        let m = s.build().unwrap();
        assert_eq!((m.rank(), m.signature()), (2, 0));
    }

    #[test]
    fn big_values_as_strings() {
        let s = SurfaceSpec::parse_str(r#"{"builder":"s2xs2","params":["100000000000000000000","3"]}"#).unwrap();
        let expected: BigInt = "300000000000000000000".parse().unwrap();
        assert_eq!(s.build().unwrap().haefliger_invariant(), expected);
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "not json",
            "[1,2]",
            r#"{"builder":"torus","params":[]}"#,
            r#"{"builder":"cp2","params":[1,2]}"#,
            r#"{"gram":[[1]]}"#,
            r#"{"gram":[[1.5]],"euler":[1]}"#,
            r#"{"gram":[[1]],"euler":[1],"label":3}"#,
            r#"{"sum":[]}"#,
            r#"{"euler":[1]}"#,
            r#"{"builder":"cp2","params":[1e40]}"#,
        ] {
            assert!(SurfaceSpec::parse_str(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn validation_is_separate_from_parsing() {
        let s = SurfaceSpec::parse_str(r#"{"gram":[[1]],"euler":[2]}"#).unwrap();
        assert_eq!(
            s.build().unwrap_err(),
            seifert_core::Error::NotCharacteristic { index: 0 }
        );
    }
}
