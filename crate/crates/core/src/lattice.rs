//! Lattices as explicit Gram data, and vectors in a fixed basis.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{congruence_diagonalize, det_exact, IntMatrix};

/// An integral lattice: a non-degenerate symmetric Gram matrix in a fixed
/// basis.
///
/// Alongside the Gram matrix a lattice records where certified hyperbolic
/// planes sit in its basis. The record comes from construction
/// (`U` atoms and direct sums), never from searching for embeddings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    gram: IntMatrix,
    // start index `i` of each certified U with basis (e, f) = (b_i, b_{i+1})
    hyperbolic_planes: Vec<usize>,
    label: Option<String>,
}

impl Lattice {
    /// Validates a Gram matrix as a lattice.
    pub fn new(gram: IntMatrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if det_exact(&gram)?.is_zero() {
            return Err(Error::Degenerate);
        }
        Ok(Lattice {
            gram,
            hyperbolic_planes: Vec::new(),
            label: None,
        })
    }

    /// The rank-zero lattice, neutral for [`Lattice::direct_sum`].
    pub fn zero() -> Self {
        Lattice {
            gram: IntMatrix::zeros(0, 0),
            hyperbolic_planes: Vec::new(),
            label: None,
        }
    }

    /// The hyperbolic plane `U` with Gram `[[0, 1], [1, 0]]`.
    pub fn hyperbolic_plane() -> Self {
        Lattice {
            gram: IntMatrix::from_rows(&[[0, 1], [1, 0]]),
            hyperbolic_planes: vec![0],
            label: None,
        }
    }

    /// The rank-one lattice `[n]`.
    pub fn rank_one(n: impl Into<BigInt>) -> Result<Self> {
        Lattice::new(IntMatrix::diagonal(&[n.into()]))
    }

    /// `A1 = [2]`.
    pub fn a1() -> Self {
        Lattice::rank_one(2).expect("[2] is non-degenerate")
    }

    /// Positive-definite `E8` from the Cartan matrix, Bourbaki labelling:
    /// the chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
    pub fn e8() -> Self {
        const EDGES: [(usize, usize); 7] = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
        let gram = IntMatrix::from_fn(8, 8, |i, j| {
            if i == j {
                BigInt::from(2)
            } else if EDGES.contains(&(i, j)) || EDGES.contains(&(j, i)) {
                BigInt::from(-1)
            } else {
                BigInt::zero()
            }
        });
        Lattice::new(gram).expect("E8 is unimodular")
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn det(&self) -> BigInt {
        det_exact(&self.gram).expect("Gram matrices are square")
    }

    /// Number of certified hyperbolic-plane summands.
    pub fn known_u_summands(&self) -> usize {
        self.hyperbolic_planes.len()
    }

    /// Basis index of the `e` vector of each certified hyperbolic plane.
    pub fn hyperbolic_planes(&self) -> &[usize] {
        &self.hyperbolic_planes
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Orthogonal direct sum; the basis of `other` follows that of `self`.
    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        let shift = self.rank();
        let hyperbolic_planes = self
            .hyperbolic_planes
            .iter()
            .copied()
            .chain(other.hyperbolic_planes.iter().map(|i| i + shift))
            .collect();
        Lattice {
            gram: self.gram.block_diag(&other.gram),
            hyperbolic_planes,
            label: None,
        }
    }

    /// The lattice `L(n)` with every pairing multiplied by `n`.
    pub fn twist(&self, n: impl Into<BigInt>) -> Result<Lattice> {
        let n = n.into();
        if n.is_zero() {
            return Err(Error::ZeroTwist);
        }
        if n.is_one() {
            return Ok(self.clone());
        }
        Ok(Lattice {
            gram: self.gram.scale(&n),
            hyperbolic_planes: Vec::new(),
            label: None,
        })
    }

    /// Signature `(positive, negative)`.
    pub fn signature(&self) -> (usize, usize) {
        let inertia = congruence_diagonalize(&self.gram)
            .expect("Gram matrices are symmetric")
            .inertia();
        debug_assert_eq!(inertia.zero, 0);
        (inertia.positive, inertia.negative)
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram[(i, i)].is_even())
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    fn check_dim(&self, v: &LatticeVector) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// The bilinear form `uᵀ·G·v`.
    pub fn pair(&self, u: &LatticeVector, v: &LatticeVector) -> Result<BigInt> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        Ok(u.0.iter().zip(self.gram.mul_vec(&v.0)).map(|(a, b)| a * b).sum())
    }

    pub fn square(&self, v: &LatticeVector) -> Result<BigInt> {
        self.pair(v, v)
    }

    /// Pairings of `v` with every basis vector, i.e. `G·v`.
    pub fn pairings(&self, v: &LatticeVector) -> Result<Vec<BigInt>> {
        self.check_dim(v)?;
        Ok(self.gram.mul_vec(&v.0))
    }

    /// Positive generator of the ideal `(v, L) ⊆ Z`.
    pub fn divisibility(&self, v: &LatticeVector) -> Result<BigInt> {
        self.check_dim(v)?;
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(gcd_all(&self.gram.mul_vec(&v.0)))
    }

    /// All vectors with `|coordinate| ≤ coord_bound` and the given square,
    /// in increasing lexicographic order of coordinates.
    pub fn vectors_with_square(&self, s: &BigInt, coord_bound: u32) -> Vec<LatticeVector> {
        let r = self.rank();
        let b = i64::from(coord_bound);
        let mut current = vec![-b; r];
        let mut out = Vec::new();
        loop {
            let v = LatticeVector::from_i64s(&current);
            if &self.square(&v).expect("dimension matches") == s {
                out.push(v);
            }
            // odometer step, last coordinate fastest
            let mut i = r;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if current[i] < b {
                    current[i] += 1;
                    break;
                }
                current[i] = -b;
            }
        }
    }
}

fn gcd_all(xs: &[BigInt]) -> BigInt {
    xs.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Integer coordinates of a lattice vector in the lattice's basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector(Vec<BigInt>);

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticeVector(coords)
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        LatticeVector(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        LatticeVector(vec![BigInt::zero(); rank])
    }

    /// The `i`-th basis vector of a rank-`rank` lattice.
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut v = Self::zero(rank);
        v.0[i] = BigInt::one();
        v
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        LatticeVector(self.0.iter().map(|x| x * k).collect())
    }

    /// gcd of the coordinates (0 for the zero vector).
    pub fn content(&self) -> BigInt {
        gcd_all(&self.0)
    }

    /// Splits `v = content · v₀` with `v₀` primitive.
    pub fn primitive_part(&self) -> Result<(BigInt, LatticeVector)> {
        let c = self.content();
        if c.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok((c.clone(), LatticeVector(self.0.iter().map(|x| x / &c).collect())))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }
}

impl Add<&LatticeVector> for &LatticeVector {
    type Output = LatticeVector;

    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        assert_eq!(self.len(), rhs.len(), "dimension mismatch");
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&LatticeVector> for &LatticeVector {
    type Output = LatticeVector;

    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        assert_eq!(self.len(), rhs.len(), "dimension mismatch");
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;

    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|x| -x).collect())
    }
}

/// Comma-separated coordinates, e.g. `2,2,0,0,0,0,1`.
impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for LatticeVector {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        s.split(',')
            .map(|c| c.trim().parse::<BigInt>())
            .collect::<core::result::Result<Vec<_>, _>>()
            .map(LatticeVector)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn v(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64s(c)
    }

    fn og6s() -> Lattice {
        let u = Lattice::hyperbolic_plane();
        u.direct_sum(&u)
            .direct_sum(&u)
            .direct_sum(&Lattice::rank_one(-2).unwrap())
    }

    #[test]
    fn construction_errors() {
        assert!(Lattice::rank_one(-2).is_ok());
        assert_eq!(
            Lattice::new(IntMatrix::from_rows(&[[1, 1], [1, 1]])),
            Err(Error::Degenerate)
        );
        assert_eq!(
            Lattice::new(IntMatrix::from_rows(&[[0, 1], [2, 0]])),
            Err(Error::NotSymmetric)
        );
        assert_eq!(Lattice::hyperbolic_plane().det(), BigInt::from(-1));
        assert_eq!(Lattice::e8().det(), BigInt::one());
        assert!(Lattice::e8().is_even());
        assert_eq!(Lattice::e8().signature(), (8, 0));
    }

    #[test]
    fn direct_sums_and_twists() {
        let l = og6s();
        assert_eq!(l.rank(), 7);
        assert_eq!(l.det(), BigInt::from(2));
        assert_eq!(l.known_u_summands(), 3);
        assert_eq!(l.hyperbolic_planes(), &[0, 2, 4]);
        assert_eq!(l.direct_sum(&Lattice::zero()), l);

        let m2 = Lattice::rank_one(-2).unwrap();
        let d = m2.direct_sum(&m2);
        assert_eq!((d.rank(), d.det()), (2, BigInt::from(4)));

        assert_eq!(m2.twist(-1).unwrap().gram(), &IntMatrix::from_rows(&[[2]]));
        assert_eq!(l.twist(1).unwrap(), l);
        let t = l.twist(2).unwrap();
        assert!(t.is_even());
        assert_eq!(t.det(), BigInt::from(256));
        assert_eq!(t.known_u_summands(), 0);
        assert_eq!(l.twist(0), Err(Error::ZeroTwist));
    }

    #[test]
    fn signatures() {
        assert_eq!(og6s().signature(), (3, 4));
        let og6 = og6s().direct_sum(&Lattice::rank_one(-2).unwrap());
        assert_eq!(og6.signature(), (3, 5));
        assert_eq!(Lattice::hyperbolic_plane().signature(), (1, 1));
        assert_eq!(og6s().twist(-1).unwrap().signature(), (4, 3));
    }

    #[test]
    fn evenness() {
        assert!(Lattice::rank_one(-2).unwrap().is_even());
        assert!(!Lattice::rank_one(1).unwrap().is_even());
        assert!(og6s().is_even());
    }

    #[test]
    fn pairings_and_squares() {
        let u = Lattice::hyperbolic_plane();
        assert_eq!(u.pair(&v(&[1, 0]), &v(&[0, 1])).unwrap(), BigInt::one());
        assert_eq!(u.square(&v(&[1, 0])).unwrap(), BigInt::zero());
        assert_eq!(og6s().square(&v(&[0, 0, 0, 0, 0, 0, 1])).unwrap(), BigInt::from(-2));

        let h = Lattice::new(IntMatrix::from_rows(&[[2, 0], [0, -2]])).unwrap();
        for n in [1i64, 3, 5, 11] {
            assert_eq!(h.square(&v(&[n + 1, n])).unwrap(), BigInt::from(4 * n + 2));
        }
        assert_eq!(
            u.pair(&v(&[1, 0]), &v(&[1])),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn divisibilities() {
        let l = og6s();
        assert_eq!(l.divisibility(&v(&[0, 0, 0, 0, 0, 0, 1])).unwrap(), BigInt::from(2));
        for d in [1i64, 2, 7, 40] {
            assert_eq!(l.divisibility(&v(&[1, d, 0, 0, 0, 0, 0])).unwrap(), BigInt::one());
        }
        for n in [1i64, 3, 5, 7] {
            let alpha = v(&[n + 1, n + 1, 0, 0, 0, 0, n]);
            assert_eq!(l.divisibility(&alpha).unwrap(), BigInt::from(2));
        }
        assert_eq!(l.divisibility(&LatticeVector::zero(7)), Err(Error::ZeroVector));
    }

    #[test]
    fn primitive_parts() {
        let (c, p) = v(&[2, 4]).primitive_part().unwrap();
        assert_eq!((c, p), (BigInt::from(2), v(&[1, 2])));
        let e = v(&[1, 0, 0]);
        assert_eq!(e.primitive_part().unwrap(), (BigInt::one(), e.clone()));
        let alpha1 = v(&[2, 2, 0, 0, 0, 0, 1]);
        let (c, p) = alpha1.scale(&BigInt::from(2)).primitive_part().unwrap();
        assert_eq!((c, p), (BigInt::from(2), alpha1));
        assert_eq!(LatticeVector::zero(3).primitive_part(), Err(Error::ZeroVector));
    }

    #[test]
    fn bounded_enumeration() {
        let u = Lattice::hyperbolic_plane();
        let iso = u.vectors_with_square(&BigInt::zero(), 1);
        for w in [[0, 0], [1, 0], [-1, 0], [0, 1], [0, -1]] {
            assert!(iso.contains(&v(&w)));
        }
        assert_eq!(iso.len(), 5);

        let m2 = Lattice::rank_one(-2).unwrap();
        assert_eq!(m2.vectors_with_square(&BigInt::from(-2), 1), vec![v(&[-1]), v(&[1])]);

        // exhaustive scan of the 7x7 box for 2x² - 2y² = 6
        let h = Lattice::new(IntMatrix::from_rows(&[[2, 0], [0, -2]])).unwrap();
        let found = h.vectors_with_square(&BigInt::from(6), 3);
        let mut expected = Vec::new();
        for x in -3i64..=3 {
            for y in -3i64..=3 {
                if 2 * x * x - 2 * y * y == 6 {
                    expected.push(v(&[x, y]));
                }
            }
        }
        assert_eq!(found, expected);
        assert!(found.contains(&v(&[2, 1])) && found.contains(&v(&[-2, -1])));
    }

    #[test]
    fn vector_text_round_trip() {
        let w = v(&[2, -2, 0, 13]);
        assert_eq!(w.to_string(), "2,-2,0,13");
        assert_eq!("2, -2,0 ,13".parse::<LatticeVector>().unwrap(), w);
        assert!("1,,2".parse::<LatticeVector>().is_err());
    }
}
