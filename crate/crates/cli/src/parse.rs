//! Group names, complex literals and point syntax.

use beurling::linalg::CMatrix;
use num_complex::Complex64;
use std::fmt;
use std::str::FromStr;

/// Group selector on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    /// `su<n>`, `n ≥ 2`.
    Su(usize),
    /// `heis`.
    Heis,
    /// `rheis`.
    RHeis,
    /// `e2`.
    E2,
    /// `z<k>`: the lattice `ℤᵏ`, whose dual is the torus.
    Z(usize),
}

impl FromStr for Group {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.to_ascii_lowercase();
        let rank = |rest: &str, min: usize| -> Result<usize, String> {
            match rest.parse::<usize>() {
                Ok(n) if n >= min => Ok(n),
                _ => Err(format!("bad group `{s}`")),
            }
        };
        match s.as_str() {
            "heis" => Ok(Group::Heis),
            "rheis" => Ok(Group::RHeis),
            "e2" => Ok(Group::E2),
            _ if s.starts_with("su") => Ok(Group::Su(rank(&s[2..], 2)?)),
            _ if s.starts_with('z') => Ok(Group::Z(rank(&s[1..], 1)?)),
            _ => Err(format!("unknown group `{s}` (expected su<n>, heis, rheis, e2 or z<k>)")),
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Su(n) => write!(f, "su{n}"),
            Group::Heis => f.write_str("heis"),
            Group::RHeis => f.write_str("rheis"),
            Group::E2 => f.write_str("e2"),
            Group::Z(k) => write!(f, "z{k}"),
        }
    }
}

fn real(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("bad number `{s}`"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("non-finite number `{s}`"))
    }
}

/// `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`, or `e^w` with `w` one of those.
pub fn complex(s: &str) -> Result<Complex64, String> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("e^") {
        let w = complex(rest.trim_start_matches('(').trim_end_matches(')'))?;
        let v = w.exp();
        return if v.is_finite() { Ok(v) } else { Err(format!("`{s}` overflows")) };
    }
    if s.is_empty() {
        return Err("empty complex literal".into());
    }
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex64::new(real(s)?, 0.0));
    };
    // split `a±b` at the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |t: &str| -> Result<f64, String> {
        match t {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => real(t),
        }
    };
    match split {
        Some(k) => Ok(Complex64::new(real(&body[..k])?, imag(&body[k..])?)),
        None => Ok(Complex64::new(0.0, imag(body)?)),
    }
}

pub fn complex_list(s: &str) -> Result<Vec<Complex64>, String> {
    s.split(',').map(complex).collect()
}

pub fn u32_list(s: &str) -> Result<Vec<u32>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| format!("bad non-negative integer `{t}`")))
        .collect()
}

pub fn f64_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',').map(|t| real(t.trim())).collect()
}

/// A point of `SL(n, ℂ)`: `diag:x1,...,xn` or `mat:r1c1,r1c2;r2c1,r2c2`.
#[derive(Clone, Debug, PartialEq)]
pub enum SuPoint {
    Diag(Vec<Complex64>),
    Dense(CMatrix),
}

impl SuPoint {
    pub fn parse(s: &str, n: usize) -> Result<Self, String> {
        if let Some(rest) = s.strip_prefix("diag:") {
            let e = complex_list(rest)?;
            if e.len() != n {
                return Err(format!("expected {n} diagonal entries, got {}", e.len()));
            }
            Ok(SuPoint::Diag(e))
        } else if let Some(rest) = s.strip_prefix("mat:") {
            let rows: Vec<Vec<Complex64>> = rest.split(';').map(complex_list).collect::<Result<_, _>>()?;
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(format!("expected a {n}x{n} matrix"));
            }
            Ok(SuPoint::Dense(CMatrix::from_fn(n, n, |i, j| rows[i][j])))
        } else {
            Err(format!("point `{s}` must start with `diag:` or `mat:`"))
        }
    }

    pub fn matrix(&self) -> CMatrix {
        match self {
            SuPoint::Diag(e) => CMatrix::from_fn(e.len(), e.len(), |i, j| if i == j { e[i] } else { Complex64::new(0.0, 0.0) }),
            SuPoint::Dense(m) => m.clone(),
        }
    }
}

/// Reduced Heisenberg labels: `pi^n`, `pi^0`, `chi(r,s)`.
pub fn rheis_label(s: &str) -> Result<beurling::heis::RHeisLabel, String> {
    use beurling::heis::RHeisLabel;
    let t = s.trim().to_ascii_lowercase();
    if let Some(n) = t.strip_prefix("pi^") {
        let n: i64 = n.parse().map_err(|_| format!("bad label `{s}`"))?;
        return Ok(if n == 0 { RHeisLabel::Aggregate } else { RHeisLabel::Discrete(n) });
    }
    if let Some(body) = t.strip_prefix("chi(").and_then(|b| b.strip_suffix(')')) {
        let v = f64_list(body)?;
        if let [r, s] = v[..] {
            return Ok(RHeisLabel::Character { r, s });
        }
    }
    Err(format!("bad label `{s}` (expected pi^n or chi(r,s))"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn complex_literals() {
        assert_eq!(complex("1.5").unwrap(), c(1.5, 0.0));
        assert_eq!(complex("0.5i").unwrap(), c(0.0, 0.5));
        assert_eq!(complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(complex("1-2i").unwrap(), c(1.0, -2.0));
        assert_eq!(complex("1e-3+2e+1i").unwrap(), c(1e-3, 20.0));
        assert_eq!(complex("e^0").unwrap(), c(1.0, 0.0));
        assert!((complex("e^0.5").unwrap() - c(0.5f64.exp(), 0.0)).norm() < 1e-15);
        for bad in ["", "x", "1+", "e^", "inf", "1+2j"] {
            assert!(complex(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn groups_and_points() {
        assert_eq!("SU3".parse::<Group>().unwrap(), Group::Su(3));
        assert_eq!("z2".parse::<Group>().unwrap(), Group::Z(2));
        assert!("su1".parse::<Group>().is_err());
        assert!(SuPoint::parse("diag:1,2", 3).is_err());
        let m = SuPoint::parse("mat:1,i;0,1", 2).unwrap().matrix();
        assert_eq!(m[(0, 1)], c(0.0, 1.0));
    }
}
