use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

/// An exponent `p` in `[1, ∞]`.
///
/// Infinity is a separate variant so that `1/∞ = 0` holds exactly rather
/// than as a consequence of float division.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    Finite(f64),
    Infinite,
}

impl Exponent {
    pub fn finite(p: f64) -> Result<Self> {
        if !(p >= 1.0) || !p.is_finite() {
            return domain(format!("exponent must be a finite value >= 1, got {p}"));
        }
        Ok(Exponent::Finite(p))
    }

    /// `1/p`, with `1/∞ = 0`.
    pub fn recip(self) -> f64 {
        match self {
            Exponent::Finite(p) => 1.0 / p,
            Exponent::Infinite => 0.0,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Exponent::Infinite)
    }

    pub fn as_finite(self) -> Option<f64> {
        match self {
            Exponent::Finite(p) => Some(p),
            Exponent::Infinite => None,
        }
    }

    /// Same as [`Exponent::as_finite`] but with a domain error naming the caller.
    pub fn require_finite(self, what: &str) -> Result<f64> {
        self.as_finite()
            .ok_or_else(|| Error::Domain(format!("{what} requires a finite exponent")))
    }

    /// `f64::INFINITY` for the infinite variant.
    pub fn to_f64(self) -> f64 {
        self.as_finite().unwrap_or(f64::INFINITY)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(p) => write!(f, "{p}"),
            Exponent::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "∞" => Ok(Exponent::Infinite),
            other => {
                let p: f64 = other
                    .parse()
                    .map_err(|_| Error::Domain(format!("cannot parse exponent {s:?}")))?;
                if p == f64::INFINITY {
                    return Ok(Exponent::Infinite);
                }
                Exponent::finite(p)
            }
        }
    }
}

/// Dyson index of the matrix field: real, complex or quaternion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Beta {
    One,
    Two,
    Four,
}

impl Beta {
    pub const ALL: [Beta; 3] = [Beta::One, Beta::Two, Beta::Four];

    pub fn value(self) -> f64 {
        self.as_u32() as f64
    }

    pub fn as_u32(self) -> u32 {
        match self {
            Beta::One => 1,
            Beta::Two => 2,
            Beta::Four => 4,
        }
    }
}

impl TryFrom<u32> for Beta {
    type Error = Error;

    fn try_from(b: u32) -> Result<Self> {
        match b {
            1 => Ok(Beta::One),
            2 => Ok(Beta::Two),
            4 => Ok(Beta::Four),
            _ => domain(format!("beta must be 1, 2 or 4, got {b}")),
        }
    }
}

impl fmt::Display for Beta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u32())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse() {
        assert_eq!("inf".parse::<Exponent>().unwrap(), Exponent::Infinite);
        assert_eq!("2.5".parse::<Exponent>().unwrap(), Exponent::Finite(2.5));
        assert!("0.5".parse::<Exponent>().is_err());
        assert!("abc".parse::<Exponent>().is_err());
        assert_eq!(Exponent::Infinite.recip(), 0.0);
    }

    #[test]
    fn beta_values() {
        assert_eq!(Beta::try_from(4).unwrap(), Beta::Four);
        assert!(Beta::try_from(3).is_err());
    }
}
