//! Mukai vectors `v = (r, l, s)` with pairing `v² = l² − 2rs`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Lattice, LatticeVector};

/// A Mukai vector whose middle component lives in a declared even
/// Néron-Severi lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MukaiVector {
    pub r: BigInt,
    pub l: LatticeVector,
    pub s: BigInt,
    ns: Lattice,
}

impl MukaiVector {
    pub fn new(r: BigInt, l: LatticeVector, s: BigInt, ns: Lattice) -> Result<Self> {
        if !ns.is_even() {
            return Err(Error::OddLattice);
        }
        if l.len() != ns.rank() {
            return Err(Error::DimensionMismatch {
                expected: ns.rank(),
                found: l.len(),
            });
        }
        Ok(MukaiVector { r, l, s, ns })
    }

    /// Builds `(r, l, s)` from `l²` alone: `l` generates the rank-one
    /// lattice `[l²]`, or is zero in `[2]` when `l² = 0`.
    pub fn from_square(r: BigInt, l_square: BigInt, s: BigInt) -> Result<Self> {
        if l_square.is_zero() {
            let ns = Lattice::rank_one(2)?;
            return MukaiVector::new(r, LatticeVector::zero(1), s, ns);
        }
        let ns = Lattice::rank_one(l_square)?;
        MukaiVector::new(r, LatticeVector::new(alloc::vec![BigInt::one()]), s, ns)
    }

    pub fn ns_lattice(&self) -> &Lattice {
        &self.ns
    }

    /// `l² − 2rs`.
    pub fn square(&self) -> BigInt {
        self.ns.square(&self.l).expect("rank checked on construction") - BigInt::from(2) * &self.r * &self.s
    }

    /// `v / 2` when every component is even.
    pub fn half(&self) -> Option<MukaiVector> {
        let two = BigInt::from(2);
        let all_even = self.r.is_even() && self.s.is_even() && self.l.coords().iter().all(Integer::is_even);
        all_even.then(|| MukaiVector {
            r: &self.r / &two,
            l: LatticeVector::new(self.l.coords().iter().map(|c| c / &two).collect()),
            s: &self.s / &two,
            ns: self.ns.clone(),
        })
    }

    pub fn is_primitive(&self) -> bool {
        let g = self
            .l
            .coords()
            .iter()
            .fold(self.r.gcd(&self.s), |g, c| g.gcd(c));
        g.is_one()
    }

    /// Expected dimension `v² − 2` when `v = 2w` with `w` primitive and
    /// `w² = 2`, the condition for a singular moduli space of `OG6S` type.
    pub fn og6s_dimension(&self) -> Option<BigInt> {
        let w = self.half()?;
        (w.is_primitive() && w.square() == BigInt::from(2)).then(|| self.square() - 2)
    }

    pub fn is_og6s(&self) -> bool {
        self.og6s_dimension().is_some()
    }
}

pub fn mukai_square(v: &MukaiVector) -> BigInt {
    v.square()
}

pub fn is_og6s_mukai(v: &MukaiVector) -> bool {
    v.is_og6s()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mv(r: i64, lsq: i64, s: i64) -> MukaiVector {
        MukaiVector::from_square(r.into(), lsq.into(), s.into()).unwrap()
    }

    #[test]
    fn squares() {
        assert_eq!(mukai_square(&mv(2, 0, -2)), BigInt::from(8));
        assert_eq!(mukai_square(&mv(1, 0, -1)), BigInt::from(2));
        assert_eq!(mukai_square(&mv(0, 10, 0)), BigInt::from(10));
        assert_eq!(mukai_square(&mv(0, 0, 1)), BigInt::zero());
    }

    #[test]
    fn og6s_admissibility() {
        let v = mv(2, 0, -2);
        assert!(is_og6s_mukai(&v));
        assert_eq!(v.og6s_dimension(), Some(BigInt::from(6)));
        assert!(!is_og6s_mukai(&mv(1, 0, -1)));
        // w = (2, 0, -1) has w² = 4
        assert!(!is_og6s_mukai(&mv(4, 0, -2)));

        // v = 2·(0, h, 1) with h² = 2 in NS = [2]
        let ns = Lattice::rank_one(2).unwrap();
        let v = MukaiVector::new(0.into(), LatticeVector::from_i64s(&[2]), 2.into(), ns.clone()).unwrap();
        assert_eq!(v.og6s_dimension(), Some(BigInt::from(6)));
        // 2·(0, 2h, 1) is not OG6S type: w² = 8
        let v = MukaiVector::new(0.into(), LatticeVector::from_i64s(&[4]), 2.into(), ns).unwrap();
        assert!(!v.is_og6s());
    }

    #[test]
    fn declared_lattice_checks() {
        assert_eq!(MukaiVector::from_square(1.into(), 3.into(), 0.into()), Err(Error::OddLattice));
        let ns = Lattice::rank_one(4).unwrap();
        assert!(matches!(
            MukaiVector::new(0.into(), LatticeVector::from_i64s(&[1, 0]), 0.into(), ns),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
