//! Named lattices, polarization types and witness classes.
//!
//! Catalog bases are fixed: `OG6S = U³ ⊕ [−2]` has basis
//! `e₁, f₁, e₂, f₂, e₃, f₃, σ` and `OG6 = U³ ⊕ [−2]²` has basis
//! `e₁, f₁, e₂, f₂, e₃, f₃, σ₁, σ₂`. The rank-two sublattice
//! `diag(2, −2)` used by the divisibility-two witnesses sits inside these
//! bases as `h ↦ e₁ + f₁`, `b ↦ σ` (or `σ₁`), and the extra class of the
//! smooth case is `σ₂`.

use alloc::string::ToString;
use alloc::vec;
use core::fmt;
use core::str::FromStr;

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lattice::{Lattice, LatticeVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NamedLattice {
    /// `U³ ⊕ [−2]`, rank 7.
    Og6s,
    /// `U³ ⊕ [−2] ⊕ [−2]`, rank 8.
    Og6,
    U,
    E8Minus,
    /// `U⁴`, the Mukai lattice `H⁰ ⊕ H² ⊕ H⁴` of an abelian surface.
    MukaiAbelian,
}

impl NamedLattice {
    pub const ALL: [NamedLattice; 5] = [
        NamedLattice::Og6s,
        NamedLattice::Og6,
        NamedLattice::U,
        NamedLattice::E8Minus,
        NamedLattice::MukaiAbelian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedLattice::Og6s => "OG6S",
            NamedLattice::Og6 => "OG6",
            NamedLattice::U => "U",
            NamedLattice::E8Minus => "E8_MINUS",
            NamedLattice::MukaiAbelian => "MUKAI_ABELIAN",
        }
    }

    pub fn lattice(self) -> Lattice {
        let u = Lattice::hyperbolic_plane();
        let minus2 = Lattice::rank_one(-2).expect("[-2] is non-degenerate");
        let u3 = u.direct_sum(&u).direct_sum(&u);
        let l = match self {
            NamedLattice::Og6s => u3.direct_sum(&minus2),
            NamedLattice::Og6 => u3.direct_sum(&minus2).direct_sum(&minus2),
            NamedLattice::U => u,
            NamedLattice::E8Minus => Lattice::e8().twist(-1).expect("nonzero twist"),
            NamedLattice::MukaiAbelian => u3.direct_sum(&u),
        };
        l.with_label(self.name())
    }
}

impl FromStr for NamedLattice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        NamedLattice::ALL
            .into_iter()
            .find(|n| n.name() == key)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

impl fmt::Display for NamedLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Looks up a catalog lattice by name (case-insensitive).
pub fn named_lattice(name: &str) -> Result<Lattice> {
    Ok(name.parse::<NamedLattice>()?.lattice())
}

/// Deformation type of the polarized varieties whose components we count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DeformationType {
    /// Singular type, lattice `OG6S`.
    Og6s,
    /// Smooth type, lattice `OG6`.
    Og6Smooth,
}

impl DeformationType {
    pub fn name(self) -> &'static str {
        match self {
            DeformationType::Og6s => "OG6S",
            DeformationType::Og6Smooth => "OG6_SMOOTH",
        }
    }

    pub fn catalog_lattice(self) -> NamedLattice {
        match self {
            DeformationType::Og6s => NamedLattice::Og6s,
            DeformationType::Og6Smooth => NamedLattice::Og6,
        }
    }

    pub fn is_feasible(self, d: u64, e: u32) -> bool {
        match self {
            DeformationType::Og6s => og6s_feasible(d, e),
            DeformationType::Og6Smooth => og6_smooth_feasible(d, e),
        }
    }

    pub fn witness(self, d: u64, e: u32) -> Result<Witness> {
        match self {
            DeformationType::Og6s => witness_og6s(d, e),
            DeformationType::Og6Smooth => witness_og6_smooth(d, e),
        }
    }
}

impl FromStr for DeformationType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().replace('-', "_").as_str() {
            "OG6S" => Ok(DeformationType::Og6s),
            "OG6" | "OG6_SMOOTH" => Ok(DeformationType::Og6Smooth),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

impl fmt::Display for DeformationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A connected component of the polarized moduli space: degree `2d` and
/// divisibility `e`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolarizationType {
    deformation_type: DeformationType,
    half_degree: u64,
    divisibility: u32,
}

impl PolarizationType {
    pub fn new(deformation_type: DeformationType, degree: u64, divisibility: u32) -> Result<Self> {
        if degree == 0 || !degree.is_multiple_of(2) {
            return Err(Error::InvalidPolarization("degree must be even and positive"));
        }
        // every primitive vector of OG6S or OG6 has divisibility 1 or 2,
        // the exponent of the discriminant group
        if !matches!(divisibility, 1 | 2) {
            return Err(Error::InvalidPolarization("divisibility must be 1 or 2"));
        }
        Ok(PolarizationType {
            deformation_type,
            half_degree: degree / 2,
            divisibility,
        })
    }

    pub fn deformation_type(&self) -> DeformationType {
        self.deformation_type
    }

    /// `2d`.
    pub fn degree(&self) -> u64 {
        2 * self.half_degree
    }

    /// `d`.
    pub fn half_degree(&self) -> u64 {
        self.half_degree
    }

    pub fn divisibility(&self) -> u32 {
        self.divisibility
    }

    pub fn is_feasible(&self) -> bool {
        self.deformation_type.is_feasible(self.half_degree, self.divisibility)
    }
}

/// Whether a class of square `2d` and divisibility `e` exists in `OG6S`.
///
/// Divisibility one is always realized. Divisibility two forces
/// `q([h/2]) = d/2 mod 2Z` to be a nonzero value of the discriminant form,
/// and the only one is `3/2`, so `d ≡ 3 mod 4`.
pub fn og6s_feasible(d: u64, e: u32) -> bool {
    match e {
        1 => d >= 1,
        2 => d % 4 == 3,
        _ => false,
    }
}

/// Whether a class of square `2d` and divisibility `e` exists in `OG6`.
///
/// The nonzero discriminant values are `1` and `3/2`, so divisibility two
/// needs `d ≡ 2` or `3 mod 4`.
pub fn og6_smooth_feasible(d: u64, e: u32) -> bool {
    match e {
        1 => d >= 1,
        2 => matches!(d % 4, 2 | 3),
        _ => false,
    }
}

/// How a witness relates to an effective divisor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Effectivity {
    Effective,
    TwiceEffective,
}

impl Effectivity {
    pub fn name(self) -> &'static str {
        match self {
            Effectivity::Effective => "EFFECTIVE",
            Effectivity::TwiceEffective => "TWICE_EFFECTIVE",
        }
    }
}

/// Which formula produced a witness.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Construction {
    /// `e₁ + d·f₁`, the image of a degree-`2d` polarization.
    Hyperbolic,
    /// `αₙ = (n+1)(e₁+f₁) + n·σ`, `n` odd.
    Alpha { n: u64 },
    /// `βₙ = (n+1)(e₁+f₁) + n·σ₁ + σ₂`, `n` odd.
    Beta { n: u64 },
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::Hyperbolic => f.write_str("e1+d*f1"),
            Construction::Alpha { n } => write!(f, "alpha_{n}"),
            Construction::Beta { n } => write!(f, "beta_{n}"),
        }
    }
}

/// A class in a catalog lattice realizing a polarization type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub polarization: PolarizationType,
    pub vector: LatticeVector,
    /// Recomputed from the Gram matrix.
    pub square: BigInt,
    /// Recomputed from the Gram matrix.
    pub divisibility: BigInt,
    pub construction: Construction,
    pub effectivity: Effectivity,
}

fn infeasible(lattice: &'static str, d: u64, e: u32) -> Error {
    Error::Infeasible {
        lattice,
        degree: BigInt::from(d) * 2,
        divisibility: e,
    }
}

fn certify(
    deformation_type: DeformationType,
    d: u64,
    e: u32,
    coords: Vec<BigInt>,
    construction: Construction,
    effectivity: Effectivity,
) -> Witness {
    let lattice = deformation_type.catalog_lattice().lattice();
    let vector = LatticeVector::new(coords);
    let square = lattice.square(&vector).expect("catalog rank");
    let divisibility = lattice.divisibility(&vector).expect("witness is nonzero");
    assert_eq!(square, BigInt::from(d) * 2, "witness square");
    assert_eq!(divisibility, BigInt::from(e), "witness divisibility");
    Witness {
        polarization: PolarizationType::new(deformation_type, 2 * d, e).expect("feasible type"),
        vector,
        square,
        divisibility,
        construction,
        effectivity,
    }
}

fn hyperbolic_coords(rank: usize, d: u64) -> Vec<BigInt> {
    let mut c = vec![BigInt::from(0); rank];
    c[0] = BigInt::one();
    c[1] = BigInt::from(d);
    c
}

// (n+1)(e₁+f₁) + n·b with b at `sigma`
fn alpha_coords(rank: usize, sigma: usize, n: u64) -> Vec<BigInt> {
    let mut c = vec![BigInt::from(0); rank];
    c[0] = BigInt::from(n) + 1;
    c[1] = BigInt::from(n) + 1;
    c[sigma] = BigInt::from(n);
    c
}

/// A class of square `2d` and divisibility `e` in `OG6S`.
pub fn witness_og6s(d: u64, e: u32) -> Result<Witness> {
    if !og6s_feasible(d, e) {
        return Err(infeasible("OG6S", d, e));
    }
    let dt = DeformationType::Og6s;
    Ok(if e == 1 {
        certify(dt, d, e, hyperbolic_coords(7, d), Construction::Hyperbolic, Effectivity::Effective)
    } else {
        // d = 2n + 1 with n odd
        let n = (d - 1) / 2;
        certify(
            dt,
            d,
            e,
            alpha_coords(7, 6, n),
            Construction::Alpha { n },
            Effectivity::TwiceEffective,
        )
    })
}

/// A class of square `2d` and divisibility `e` in `OG6`.
pub fn witness_og6_smooth(d: u64, e: u32) -> Result<Witness> {
    if !og6_smooth_feasible(d, e) {
        return Err(infeasible("OG6", d, e));
    }
    let dt = DeformationType::Og6Smooth;
    Ok(match (e, d % 4) {
        (1, _) => certify(dt, d, e, hyperbolic_coords(8, d), Construction::Hyperbolic, Effectivity::Effective),
        (_, 3) => {
            let n = (d - 1) / 2;
            certify(
                dt,
                d,
                e,
                alpha_coords(8, 6, n),
                Construction::Alpha { n },
                Effectivity::TwiceEffective,
            )
        }
        _ => {
            // d = 2n with n odd
            let n = d / 2;
            let mut c = alpha_coords(8, 6, n);
            c[7] = BigInt::one();
            certify(dt, d, e, c, Construction::Beta { n }, Effectivity::TwiceEffective)
        }
    })
}

/// One witness per feasible `(2d, e)` with `d ≤ d_max`: divisibility one
/// rows first, then divisibility two, each by increasing `d`.
pub fn components(deformation_type: DeformationType, d_max: u64) -> Vec<Witness> {
    [1u32, 2]
        .into_iter()
        .flat_map(|e| (1..=d_max).map(move |d| (d, e)))
        .filter(|&(d, e)| deformation_type.is_feasible(d, e))
        .map(|(d, e)| deformation_type.witness(d, e).expect("feasible"))
        .collect()
}
