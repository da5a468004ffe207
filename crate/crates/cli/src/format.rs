//! JSON file formats for sequences and lattices.
//!
//! Integers of magnitude above `2^53` are written as decimal strings; either
//! form is accepted on input.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use limag::integers::IntMatrix;
use limag::lattice::LatticeCode;
use limag::sequences::{AbelianGroup, BhSequence};
use limag::CodeParams;

use crate::CliError;

const SAFE_MAGNITUDE: u128 = 1 << 53;

/// Unsigned integer with the string fallback.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct U(pub u128);

/// Signed integer with the string fallback.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct I(pub i128);

impl Serialize for U {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0 <= SAFE_MAGNITUDE {
            s.serialize_u64(self.0 as u64)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

impl Serialize for I {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.unsigned_abs() <= SAFE_MAGNITUDE {
            s.serialize_i64(self.0 as i64)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

struct IntVisitor<T>(std::marker::PhantomData<T>);

impl<T> Visitor<'_> for IntVisitor<T>
where
    T: TryFrom<i128> + TryFrom<u128> + std::str::FromStr,
{
    type Value = T;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<T, E> {
        self.visit_i128(v as i128)
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<T, E> {
        self.visit_u128(v as u128)
    }

    fn visit_i128<E: de::Error>(self, v: i128) -> Result<T, E> {
        T::try_from(v).map_err(|_| E::custom(format!("integer {v} out of range")))
    }

    fn visit_u128<E: de::Error>(self, v: u128) -> Result<T, E> {
        T::try_from(v).map_err(|_| E::custom(format!("integer {v} out of range")))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<T, E> {
        Err(E::custom(format!("expected an integer, got {v} (write large values as strings)")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<T, E> {
        v.trim().parse().map_err(|_| E::custom(format!("{v:?} is not a decimal integer")))
    }
}

impl<'de> Deserialize<'de> for U {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(IntVisitor::<u128>(Default::default())).map(U)
    }
}

impl<'de> Deserialize<'de> for I {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(IntVisitor::<i128>(Default::default())).map(I)
    }
}

pub fn us(v: &[u128]) -> Vec<U> {
    v.iter().copied().map(U).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupJson {
    pub factors: Vec<U>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SequenceJson {
    pub group: GroupJson,
    pub elements: Vec<Vec<U>>,
    pub t: usize,
    pub ell: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeJson {
    /// Basis vectors as rows.
    pub generator: Vec<Vec<I>>,
    pub t: usize,
    pub ell: u64,
}

impl SequenceJson {
    pub fn from_seq(seq: &BhSequence) -> Self {
        SequenceJson {
            group: GroupJson { factors: us(seq.group().factors()) },
            elements: seq.elements().iter().map(|e| us(e.coords())).collect(),
            t: seq.t(),
            ell: seq.ell(),
        }
    }

    pub fn to_seq(&self) -> Result<BhSequence, CliError> {
        let group = AbelianGroup::new(self.group.factors.iter().map(|u| u.0).collect())?;
        let elements = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, e)| {
                group
                    .element(e.iter().map(|u| u.0).collect())
                    .map_err(|err| CliError::Input { location: format!("elements[{i}]"), message: err.to_string() })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BhSequence::new(group, elements, self.t, self.ell)?)
    }
}

impl LatticeJson {
    pub fn from_lattice(lat: &LatticeCode) -> Self {
        let p = lat.params();
        LatticeJson {
            generator: lat.hnf_basis().to_rows().into_iter().map(|r| r.into_iter().map(I).collect()).collect(),
            t: p.t(),
            ell: p.ell(),
        }
    }

    pub fn to_lattice(&self) -> Result<LatticeCode, CliError> {
        let n = self.generator.len();
        if let Some(i) = self.generator.iter().position(|r| r.len() != n) {
            return Err(CliError::Input {
                location: format!("generator[{i}]"),
                message: format!("expected {n} entries, got {}", self.generator[i].len()),
            });
        }
        let rows: Vec<Vec<i128>> = self.generator.iter().map(|r| r.iter().map(|x| x.0).collect()).collect();
        let g = IntMatrix::from_rows(&rows)?;
        Ok(LatticeCode::new(g, CodeParams::new(n, self.t, self.ell)?)?)
    }
}

/// A parsed code file of either kind.
pub enum CodeFile {
    Sequence(BhSequence),
    Lattice(LatticeCode),
}

impl CodeFile {
    /// Applies `t`/`ell` overrides.
    pub fn with_params(self, t: Option<usize>, ell: Option<u64>) -> Result<Self, CliError> {
        Ok(match self {
            CodeFile::Sequence(s) => {
                let (t, ell) = (t.unwrap_or(s.t()), ell.unwrap_or(s.ell()));
                CodeFile::Sequence(s.with_params(t, ell)?)
            }
            CodeFile::Lattice(l) => {
                let p = l.params();
                let p = CodeParams::new(p.n(), t.unwrap_or(p.t()), ell.unwrap_or(p.ell()))?;
                CodeFile::Lattice(l.with_params(p)?)
            }
        })
    }
}

fn syntax_error(name: &str, e: serde_json::Error) -> CliError {
    CliError::Input { location: format!("{name}:{}:{}", e.line(), e.column()), message: e.to_string() }
}

/// Parses a sequence or lattice document, told apart by its `group` or
/// `generator` key. Other keys (such as the manifest) are ignored.
pub fn parse_code(name: &str, text: &str) -> Result<CodeFile, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| syntax_error(name, e))?;
    let obj = value.as_object().ok_or_else(|| CliError::Input {
        location: name.to_string(),
        message: "top-level value must be an object".into(),
    })?;
    let located = |e: CliError| match e {
        CliError::Input { location, message } => CliError::Input { location: format!("{name}: {location}"), message },
        other => other,
    };
    match (obj.contains_key("group"), obj.contains_key("generator")) {
        (true, false) => {
            let s: SequenceJson = serde_json::from_str(text).map_err(|e| syntax_error(name, e))?;
            Ok(CodeFile::Sequence(s.to_seq().map_err(located)?))
        }
        (false, true) => {
            let l: LatticeJson = serde_json::from_str(text).map_err(|e| syntax_error(name, e))?;
            Ok(CodeFile::Lattice(l.to_lattice().map_err(located)?))
        }
        _ => Err(CliError::Input {
            location: name.to_string(),
            message: "expected exactly one of the keys \"group\" (sequence) or \"generator\" (lattice)".into(),
        }),
    }
}

/// Comma-separated nonnegative integers, e.g. `2,1,0`.
pub fn parse_word(s: &str) -> Result<Vec<u64>, CliError> {
    s.split(',')
        .enumerate()
        .map(|(i, part)| {
            part.trim().parse().map_err(|_| CliError::Input {
                location: format!("word position {i}"),
                message: format!("{part:?} is not a nonnegative integer"),
            })
        })
        .collect()
}
