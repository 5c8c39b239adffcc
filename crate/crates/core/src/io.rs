//! JSON fixtures.
//!
//! Three shapes are accepted:
//!
//! ```text
//! {"dim": d, "conductor": [..], "small_elements": [[..], ..]}
//! {"dim": 1, "generators": [..]}
//! {"product": ["a.json", "b.json", ..]}
//! ```
//!
//! Product paths are relative to the directory of the file naming them.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::IoError;
use crate::lattice::Point;
use crate::semigroup::{GoodSemigroup, Membership, NumericalSemigroup};

#[derive(Serialize, Deserialize)]
struct Explicit {
    dim: usize,
    conductor: Point,
    small_elements: Vec<Point>,
}

#[derive(Serialize, Deserialize)]
struct Generated {
    dim: usize,
    generators: Vec<i64>,
}

/// A parsed fixture before products are resolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fixture {
    Explicit(GoodSemigroup),
    Numerical(NumericalSemigroup),
    Product(Vec<PathBuf>),
}

fn schema(path: &str, msg: impl Into<String>) -> IoError {
    IoError::Schema { path: path.to_string(), msg: msg.into() }
}

fn parse_error(path: &str, e: serde_json::Error) -> IoError {
    IoError::Parse { path: path.to_string(), line: e.line(), column: e.column(), msg: e.to_string() }
}

/// Parses one fixture; `path` is only used in messages.
pub fn parse_fixture(text: &str, path: &str) -> Result<Fixture, IoError> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_error(path, e))?;
    let obj = v.as_object().ok_or_else(|| schema(path, "top level must be an object"))?;
    let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    keys.sort_unstable();
    let sem = |source| IoError::Semigroup { path: path.to_string(), source };
    match keys.as_slice() {
        ["conductor", "dim", "small_elements"] => {
            let x: Explicit = serde_json::from_value(v).map_err(|e| schema(path, e.to_string()))?;
            if x.conductor.dim() != x.dim {
                return Err(schema(path, format!("conductor has dimension {}, dim is {}", x.conductor.dim(), x.dim)));
            }
            Ok(Fixture::Explicit(GoodSemigroup::from_small_elements(x.conductor, x.small_elements).map_err(sem)?))
        }
        ["dim", "generators"] => {
            let x: Generated = serde_json::from_value(v).map_err(|e| schema(path, e.to_string()))?;
            if x.dim != 1 {
                return Err(schema(path, "generators require dim 1"));
            }
            Ok(Fixture::Numerical(NumericalSemigroup::new(&x.generators).map_err(sem)?))
        }
        ["product"] => {
            let parts = obj["product"]
                .as_array()
                .filter(|a| !a.is_empty())
                .ok_or_else(|| schema(path, "product must be a nonempty array of paths"))?;
            parts
                .iter()
                .map(|p| p.as_str().map(PathBuf::from).ok_or_else(|| schema(path, "product entries must be strings")))
                .collect::<Result<_, _>>()
                .map(Fixture::Product)
        }
        _ => Err(schema(path, format!("unexpected keys {keys:?}"))),
    }
}

/// Reads a fixture file and resolves products recursively.
pub fn load_semigroup(path: impl AsRef<Path>) -> Result<GoodSemigroup, IoError> {
    let path = path.as_ref();
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read { path: name.clone(), source })?;
    match parse_fixture(&text, &name)? {
        Fixture::Explicit(s) => Ok(s),
        Fixture::Numerical(n) => Ok(n.as_good()),
        Fixture::Product(parts) => {
            let dir = path.parent().unwrap_or(Path::new("."));
            let mut acc: Option<GoodSemigroup> = None;
            for p in parts {
                let s = load_semigroup(dir.join(p))?;
                acc = Some(match acc {
                    None => s,
                    Some(a) => GoodSemigroup::direct_product(&a, &s)
                        .map_err(|source| IoError::Semigroup { path: name.clone(), source })?,
                });
            }
            Ok(acc.expect("nonempty product"))
        }
    }
}

/// Explicit form of any semigroup.
pub fn emit_semigroup(s: &GoodSemigroup) -> String {
    let x = Explicit {
        dim: s.dim(),
        conductor: s.conductor().clone(),
        small_elements: s.small_elements().iter().cloned().collect(),
    };
    serde_json::to_string(&x).expect("serializable")
}

pub fn emit_numerical(n: &NumericalSemigroup) -> String {
    serde_json::to_string(&Generated { dim: 1, generators: n.generators().to_vec() }).expect("serializable")
}
