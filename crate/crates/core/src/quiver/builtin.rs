use std::fmt;
use std::str::FromStr;

use super::Quiver;
use crate::error::{Error, Result};

/// The named example quivers.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Builtin {
    /// Vertices `e, z`; arrows `a1..an: e → z`.
    Kronecker(usize),
    /// Sink `e`, sources `f1..fn`; arrows `ai: fi → e`.
    Subspace(usize),
    /// Vertices `v1..vn`; arrows `ai: vi → v(i+1)`.
    LinearA(usize),
    /// `A_∞` truncated at the given support bound.
    AInfinity(usize),
}

impl Builtin {
    pub fn build(self) -> Result<Quiver> {
        match self {
            Builtin::Kronecker(n) => {
                if n < 1 {
                    return Err(Error::OutOfRange("kronecker needs n >= 1".into()));
                }
                let arrows: Vec<(String, String, String)> = (1..=n)
                    .map(|i| (format!("a{i}"), "e".into(), "z".into()))
                    .collect();
                Quiver::finite(&["e".to_string(), "z".to_string()], &arrows)
            }
            Builtin::Subspace(n) => {
                if n < 1 {
                    return Err(Error::OutOfRange("subspace needs n >= 1".into()));
                }
                let vertices: Vec<String> = std::iter::once("e".to_string())
                    .chain((1..=n).map(|i| format!("f{i}")))
                    .collect();
                let arrows: Vec<(String, String, String)> = (1..=n)
                    .map(|i| (format!("a{i}"), format!("f{i}"), "e".into()))
                    .collect();
                Quiver::finite(&vertices, &arrows)
            }
            Builtin::LinearA(n) => {
                if n < 2 {
                    return Err(Error::OutOfRange("linearA needs n >= 2".into()));
                }
                let vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
                let arrows: Vec<(String, String, String)> = (1..n)
                    .map(|i| (format!("a{i}"), format!("v{i}"), format!("v{}", i + 1)))
                    .collect();
                Quiver::finite(&vertices, &arrows)
            }
            Builtin::AInfinity(bound) => Quiver::ainfinity(bound),
        }
    }
}

/// Parses `kronecker:3`, `subspace:2`, `linearA:4`, `ainfinity:12`.
impl FromStr for Builtin {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::Document(format!("builtin `{s}` needs the form name:N")))?;
        let n: usize = arg
            .trim()
            .parse()
            .map_err(|_| Error::Document(format!("bad builtin parameter `{arg}`")))?;
        match name.trim().to_ascii_lowercase().as_str() {
            "kronecker" => Ok(Builtin::Kronecker(n)),
            "subspace" => Ok(Builtin::Subspace(n)),
            "lineara" | "a" => Ok(Builtin::LinearA(n)),
            "ainfinity" | "ainf" => Ok(Builtin::AInfinity(n)),
            other => Err(Error::Document(format!("unknown builtin quiver `{other}`"))),
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Kronecker(n) => write!(f, "kronecker:{n}"),
            Builtin::Subspace(n) => write!(f, "subspace:{n}"),
            Builtin::LinearA(n) => write!(f, "linearA:{n}"),
            Builtin::AInfinity(n) => write!(f, "ainfinity:{n}"),
        }
    }
}
