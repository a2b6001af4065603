//! The weight-descriptor mini-language, e.g. `lenexp(beta=2)` or
//! `sun1(inner=lenexp(beta=2))`. Names and keys are case-insensitive.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A named weight family with its parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum WeightDescriptor {
    /// `d_π^α` on SU(n).
    Dim { alpha: f64 },
    /// `(1 + λ₁)^α` on SU(n).
    LenPoly { alpha: f64 },
    /// `β^{λ₁}` on SU(n).
    LenExp { beta: f64 },
    /// `β^{√(n(n+2))}` on SU(2).
    LapExp { beta: f64 },
    /// `(1 + n(n+2))^m` on SU(2).
    LapPoly { m: u32 },
    /// Torus-extended weight on SU(n) from `∏ β_j^{|x_j|}` on `ℤ^{n−1}`.
    Torus { betas: Vec<f64> },
    /// Weight on SU(n) extended from a central weight on SU(n−1).
    Sun1 { inner: Box<WeightDescriptor> },
    /// `∏ β_j^{|x_j|}` on `ℝᵏ` or `ℤᵏ`.
    AbelExp { betas: Vec<f64> },
    /// `β^{‖x‖}` on `ℝᵏ`.
    AbelRadial { beta: f64 },
    /// `exp(t √(n² + r²))` on the dual of E(2).
    E2Lap { t: f64 },
    /// `∏ exp(|x_j| / log(e + |x_j|))`.
    Shilov,
    /// `∏ (1 + |x_j|)^s`.
    PolyW { s: f64 },
}

impl WeightDescriptor {
    /// Short family name as used in the mini-language.
    pub fn family(&self) -> &'static str {
        match self {
            Self::Dim { .. } => "dim",
            Self::LenPoly { .. } => "lenpoly",
            Self::LenExp { .. } => "lenexp",
            Self::LapExp { .. } => "lapexp",
            Self::LapPoly { .. } => "lappoly",
            Self::Torus { .. } => "torus",
            Self::Sun1 { .. } => "sun1",
            Self::AbelExp { .. } => "abelexp",
            Self::AbelRadial { .. } => "abelradial",
            Self::E2Lap { .. } => "e2lap",
            Self::Shilov => "shilov",
            Self::PolyW { .. } => "polyw",
        }
    }

    /// Checks parameter ranges: `α ≥ 0`, `β ≥ 1`, `m ≥ 1`, `t > 0`, `s ≥ 0`.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        let check_beta = |b: f64| {
            if b.is_finite() && b >= 1.0 {
                Ok(())
            } else {
                bad(format!("{}: beta must be >= 1, got {b}", self.family()))
            }
        };
        match self {
            Self::Dim { alpha } | Self::LenPoly { alpha } => {
                if !(alpha.is_finite() && *alpha >= 0.0) {
                    return bad(format!("{}: alpha must be >= 0, got {alpha}", self.family()));
                }
            }
            Self::LenExp { beta } | Self::LapExp { beta } | Self::AbelRadial { beta } => check_beta(*beta)?,
            Self::LapPoly { m } => {
                if *m < 1 {
                    return bad("lappoly: m must be >= 1".into());
                }
            }
            Self::Torus { betas } | Self::AbelExp { betas } => {
                if betas.is_empty() {
                    return bad(format!("{}: at least one beta is required", self.family()));
                }
                betas.iter().try_for_each(|&b| check_beta(b))?;
            }
            Self::Sun1 { inner } => {
                inner.validate()?;
                if !inner.is_su_central() {
                    return bad(format!("sun1: inner family `{}` is not central on SU(n)", inner.family()));
                }
            }
            Self::E2Lap { t } => {
                if !(t.is_finite() && *t > 0.0) {
                    return bad(format!("e2lap: t must be > 0, got {t}"));
                }
            }
            Self::Shilov => {}
            Self::PolyW { s } => {
                if !(s.is_finite() && *s >= 0.0) {
                    return bad(format!("polyw: s must be >= 0, got {s}"));
                }
            }
        }
        Ok(())
    }

    /// Whether the family is a central (scalar per irreducible) weight on SU(n).
    pub fn is_su_central(&self) -> bool {
        matches!(
            self,
            Self::Dim { .. } | Self::LenPoly { .. } | Self::LenExp { .. } | Self::LapExp { .. } | Self::LapPoly { .. }
        )
    }
}

impl fmt::Display for WeightDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let betas = |betas: &[f64]| {
            betas
                .iter()
                .enumerate()
                .map(|(i, b)| format!("beta{}={b}", i + 1))
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Self::Dim { alpha } => write!(f, "dim(alpha={alpha})"),
            Self::LenPoly { alpha } => write!(f, "lenpoly(alpha={alpha})"),
            Self::LenExp { beta } => write!(f, "lenexp(beta={beta})"),
            Self::LapExp { beta } => write!(f, "lapexp(beta={beta})"),
            Self::LapPoly { m } => write!(f, "lappoly(m={m})"),
            Self::Torus { betas: b } => write!(f, "torus({})", betas(b)),
            Self::Sun1 { inner } => write!(f, "sun1(inner={inner})"),
            Self::AbelExp { betas: b } => write!(f, "abelexp({})", betas(b)),
            Self::AbelRadial { beta } => write!(f, "abelradial(beta={beta})"),
            Self::E2Lap { t } => write!(f, "e2lap(t={t})"),
            Self::Shilov => write!(f, "shilov()"),
            Self::PolyW { s } => write!(f, "polyw(s={s})"),
        }
    }
}

enum Value {
    Number(f64),
    Nested(WeightDescriptor),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl fmt::Display) -> Result<T> {
        Err(Error::Parse(format!("{msg} at offset {}", self.pos)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an identifier");
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).to_ascii_lowercase())
    }

    fn value(&mut self) -> Result<Value> {
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() && !self.looks_numeric() => Ok(Value::Nested(self.descriptor()?)),
            Some(_) => {
                let start = self.pos;
                while self.pos < self.src.len() && !matches!(self.src[self.pos], b',' | b')') {
                    self.pos += 1;
                }
                let text = String::from_utf8_lossy(&self.src[start..self.pos]).trim().to_string();
                match text.parse::<f64>() {
                    Ok(v) => Ok(Value::Number(v)),
                    Err(_) => {
                        self.pos = start;
                        self.err(format!("`{text}` is not a number"))
                    }
                }
            }
            None => self.err("expected a value"),
        }
    }

    fn looks_numeric(&self) -> bool {
        let rest = String::from_utf8_lossy(&self.src[self.pos..]).to_ascii_lowercase();
        rest.starts_with("inf") || rest.starts_with("nan")
    }

    fn descriptor(&mut self) -> Result<WeightDescriptor> {
        let name = self.ident()?;
        self.expect(b'(')?;
        let mut args: Vec<(String, Value)> = Vec::new();
        if self.peek() != Some(b')') {
            loop {
                let key = self.ident()?;
                self.expect(b'=')?;
                let v = self.value()?;
                if args.iter().any(|(k, _)| *k == key) {
                    return self.err(format!("duplicate key `{key}`"));
                }
                args.push((key, v));
                if self.peek() == Some(b',') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        self.expect(b')')?;
        build(&name, args)
    }
}

fn take_num(name: &str, args: &mut Vec<(String, Value)>, key: &str) -> Result<f64> {
    match args.iter().position(|(k, _)| k == key) {
        Some(i) => match args.remove(i).1 {
            Value::Number(v) => Ok(v),
            Value::Nested(_) => Err(Error::Parse(format!("{name}: `{key}` must be a number"))),
        },
        None => Err(Error::Parse(format!("{name}: missing key `{key}`"))),
    }
}

fn build(name: &str, mut args: Vec<(String, Value)>) -> Result<WeightDescriptor> {
    let d = match name {
        "dim" => WeightDescriptor::Dim { alpha: take_num(name, &mut args, "alpha")? },
        "lenpoly" => WeightDescriptor::LenPoly { alpha: take_num(name, &mut args, "alpha")? },
        "lenexp" => WeightDescriptor::LenExp { beta: take_num(name, &mut args, "beta")? },
        "lapexp" => WeightDescriptor::LapExp { beta: take_num(name, &mut args, "beta")? },
        "lappoly" => {
            let m = take_num(name, &mut args, "m")?;
            if m.fract() != 0.0 || m < 1.0 || m > u32::MAX as f64 {
                return Err(Error::Parse(format!("lappoly: m must be a positive integer, got {m}")));
            }
            WeightDescriptor::LapPoly { m: m as u32 }
        }
        "torus" | "abelexp" => {
            let mut betas = Vec::new();
            for i in 1.. {
                let key = format!("beta{i}");
                if !args.iter().any(|(k, _)| *k == key) {
                    break;
                }
                betas.push(take_num(name, &mut args, &key)?);
            }
            if name == "torus" {
                WeightDescriptor::Torus { betas }
            } else {
                WeightDescriptor::AbelExp { betas }
            }
        }
        "sun1" => match args.iter().position(|(k, _)| k == "inner") {
            Some(i) => match args.remove(i).1 {
                Value::Nested(inner) => WeightDescriptor::Sun1 { inner: Box::new(inner) },
                Value::Number(_) => return Err(Error::Parse("sun1: `inner` must be a descriptor".into())),
            },
            None => return Err(Error::Parse("sun1: missing key `inner`".into())),
        },
        "abelradial" => WeightDescriptor::AbelRadial { beta: take_num(name, &mut args, "beta")? },
        "e2lap" => WeightDescriptor::E2Lap { t: take_num(name, &mut args, "t")? },
        "shilov" => WeightDescriptor::Shilov,
        "polyw" => WeightDescriptor::PolyW { s: take_num(name, &mut args, "s")? },
        other => return Err(Error::Parse(format!("unknown weight family `{other}`"))),
    };
    if let Some((k, _)) = args.first() {
        return Err(Error::Parse(format!("{name}: unexpected key `{k}`")));
    }
    d.validate()?;
    Ok(d)
}

impl FromStr for WeightDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let d = p.descriptor()?;
        if p.peek().is_some() {
            return p.err("trailing input");
        }
        Ok(d)
    }
}
