//! Fujiki constants and the degree identity for a generically 2:1 pullback.

use alloc::string::ToString;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FujikiVariety {
    Og6s,
    Og6,
    /// Hilbert-scheme type `K3^[3]`.
    K3n3,
}

impl FromStr for FujikiVariety {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "OG6S" => Ok(FujikiVariety::Og6s),
            "OG6" => Ok(FujikiVariety::Og6),
            "K3_3" | "K3[3]" => Ok(FujikiVariety::K3n3),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// Fujiki constant `c` and half dimension `n`: `∫ α²ⁿ = c · q(α)ⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FujikiData {
    pub constant: BigRational,
    pub half_dim: u32,
}

impl FujikiData {
    /// `c · qⁿ`, the top self-intersection of a class of square `q`.
    pub fn top_power(&self, q: &BigRational) -> BigRational {
        &self.constant * Pow::pow(q, self.half_dim)
    }
}

pub fn fujiki(variety: FujikiVariety) -> FujikiData {
    let (c, n) = match variety {
        // the constant is unchanged by the symplectic resolution
        FujikiVariety::Og6s | FujikiVariety::Og6 => (60, 3),
        FujikiVariety::K3n3 => (15, 3),
    };
    FujikiData {
        constant: BigRational::from_integer(BigInt::from(c)),
        half_dim: n,
    }
}

pub fn fujiki_top_power(data: &FujikiData, q: &BigRational) -> BigRational {
    data.top_power(q)
}

/// Checks `c_Y · (2q)³ = 2 · c_K · q³` for a class of square `q` on the
/// singular variety, whose pullback along a generically 2:1 map has square
/// `2q`.
pub fn pullback_scaling_check(q: &BigRational) -> bool {
    let doubled = q * BigRational::from_integer(BigInt::from(2));
    let upstairs = fujiki(FujikiVariety::K3n3).top_power(&doubled);
    let downstairs = fujiki(FujikiVariety::Og6s).top_power(q) * BigRational::from_integer(BigInt::from(2));
    upstairs == downstairs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn constants() {
        assert_eq!(fujiki(FujikiVariety::Og6s).constant, rat(60, 1));
        assert_eq!(fujiki(FujikiVariety::Og6).constant, rat(60, 1));
        assert_eq!(fujiki(FujikiVariety::K3n3).constant, rat(15, 1));
        assert_eq!("k3_3".parse::<FujikiVariety>(), Ok(FujikiVariety::K3n3));
        assert!(matches!("OG10".parse::<FujikiVariety>(), Err(Error::UnknownName(_))));
    }

    #[test]
    fn top_powers() {
        assert_eq!(fujiki_top_power(&fujiki(FujikiVariety::Og6s), &rat(1, 1)), rat(60, 1));
        assert_eq!(fujiki_top_power(&fujiki(FujikiVariety::K3n3), &rat(2, 1)), rat(120, 1));
        assert_eq!(fujiki_top_power(&fujiki(FujikiVariety::Og6s), &rat(0, 1)), rat(0, 1));
    }

    #[test]
    fn pullback_identity() {
        for q in [rat(1, 1), rat(0, 1), rat(7, 3), rat(-5, 2)] {
            assert!(pullback_scaling_check(&q));
        }
        // both sides at q = 1 are 120
        assert_eq!(fujiki(FujikiVariety::K3n3).top_power(&rat(2, 1)), rat(120, 1));
        assert_eq!(fujiki(FujikiVariety::Og6s).top_power(&rat(1, 1)) * rat(2, 1), rat(120, 1));
    }
}
