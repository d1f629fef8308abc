//! Dual lattices, discriminant groups `A_L = L∨/L` and the discriminant
//! quadratic form `q: A_L → Q/2Z` of an even lattice.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Lattice, LatticeVector};
use crate::linalg::{rat_inverse, smith_normal_form, IntMatrix, RatMatrix};

/// A rational number modulo `2Z`, kept as its representative in `[0, 2)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QmodTwoZ(BigRational);

impl QmodTwoZ {
    pub fn new(r: BigRational) -> Self {
        QmodTwoZ(reduce_mod(r, 2))
    }

    pub fn zero() -> Self {
        QmodTwoZ(BigRational::zero())
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::new(BigRational::new(numer.into(), denom.into()))
    }

    /// The representative in `[0, 2)`.
    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Multiplication by an integer, well defined on `Q/2Z`.
    pub fn times(&self, k: &BigInt) -> Self {
        Self::new(&self.0 * BigRational::from_integer(k.clone()))
    }
}

impl Add for &QmodTwoZ {
    type Output = QmodTwoZ;

    fn add(self, rhs: &QmodTwoZ) -> QmodTwoZ {
        QmodTwoZ::new(&self.0 + &rhs.0)
    }
}

impl fmt::Display for QmodTwoZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Reduces `r` into `[0, m)`.
fn reduce_mod(r: BigRational, m: i64) -> BigRational {
    let m = BigRational::from_integer(m.into());
    let q = (&r / &m).floor();
    r - q * m
}

/// Dual basis of `L` in the coordinates of the original basis: the columns
/// of `G⁻¹`.
pub fn dual_basis(lattice: &Lattice) -> RatMatrix {
    rat_inverse(lattice.gram()).expect("lattices are non-degenerate")
}

/// The finite abelian group `L∨/L` with chosen generator lifts.
///
/// Invariant factors come from the Smith form `U·G·V = D`: generator `i`
/// lifts to `V·eᵢ / dᵢ ∈ L∨`, and a dual vector `x` has class coordinates
/// `(U·G·x)ᵢ mod dᵢ`. Only factors greater than one are kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantGroup {
    invariant_factors: Vec<BigInt>,
    generators: Vec<Vec<BigRational>>,
    // rows of U for the retained factors
    coordinate_rows: Vec<Vec<BigInt>>,
    gram: IntMatrix,
    pairing_matrix: Vec<Vec<BigRational>>,
    generator_squares: Option<Vec<QmodTwoZ>>,
}

impl DiscriminantGroup {
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    /// Generator lifts in `L∨`, as rational coordinates in the basis of `L`.
    pub fn generators(&self) -> &[Vec<BigRational>] {
        &self.generators
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }

    /// Least common multiple of the invariant factors.
    pub fn exponent(&self) -> BigInt {
        self.invariant_factors.iter().fold(BigInt::one(), |acc, d| acc.lcm(d))
    }

    /// The induced bilinear form `b(gᵢ, gⱼ) ∈ Q/Z`, reduced into `[0, 1)`.
    pub fn pairing_matrix(&self) -> &[Vec<BigRational>] {
        &self.pairing_matrix
    }

    /// `q(gᵢ)` for each generator, present only for even lattices.
    pub fn generator_squares(&self) -> Option<&[QmodTwoZ]> {
        self.generator_squares.as_deref()
    }

    /// The discriminant form in the generator basis: `q(gᵢ) ∈ Q/2Z` on the
    /// diagonal and `b(gᵢ, gⱼ) ∈ Q/Z` off it. Only for even lattices.
    pub fn form_matrix(&self) -> Option<Vec<Vec<BigRational>>> {
        let squares = self.generator_squares.as_ref()?;
        Some(
            self.pairing_matrix
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    let mut row = row.clone();
                    row[i] = squares[i].value().clone();
                    row
                })
                .collect(),
        )
    }

    /// Class coordinates of a dual vector, each reduced modulo its factor.
    pub fn class_of(&self, x: &[BigRational]) -> Result<Vec<BigInt>> {
        let gx = dual_pairings(&self.gram, x)?;
        Ok(self
            .coordinate_rows
            .iter()
            .zip(&self.invariant_factors)
            .map(|(row, d)| {
                let c: BigInt = row.iter().zip(&gx).map(|(a, b)| a * b).sum();
                c.mod_floor(d)
            })
            .collect())
    }

    /// Class of `v / div(v)` for a nonzero lattice vector `v`.
    pub fn class_of_vector(&self, lattice: &Lattice, v: &LatticeVector) -> Result<Vec<BigInt>> {
        self.class_of(&normalized(lattice, v)?)
    }

    /// A lift in `L∨` of the class with the given coordinates.
    pub fn lift(&self, coords: &[BigInt]) -> Vec<BigRational> {
        let r = self.gram.rows();
        let mut x = alloc::vec![BigRational::zero(); r];
        for (c, g) in coords.iter().zip(&self.generators) {
            let c = BigRational::from_integer(c.clone());
            for (xi, gi) in x.iter_mut().zip(g) {
                *xi += &c * gi;
            }
        }
        x
    }

    /// Every element of the group as class coordinates, in lexicographic
    /// order.
    pub fn elements(&self) -> Vec<Vec<BigInt>> {
        let mut out = alloc::vec![Vec::new()];
        for d in &self.invariant_factors {
            let mut next = Vec::new();
            for prefix in &out {
                let mut c = BigInt::zero();
                while &c < d {
                    let mut e = prefix.clone();
                    e.push(c.clone());
                    next.push(e);
                    c += 1;
                }
            }
            out = next;
        }
        out
    }
}

/// `G·x`, which must be integral for `x ∈ L∨`.
fn dual_pairings(gram: &IntMatrix, x: &[BigRational]) -> Result<Vec<BigInt>> {
    if x.len() != gram.rows() {
        return Err(Error::DimensionMismatch {
            expected: gram.rows(),
            found: x.len(),
        });
    }
    (0..gram.rows())
        .map(|i| {
            let s: BigRational = gram
                .row(i)
                .iter()
                .zip(x)
                .map(|(g, xi)| BigRational::from_integer(g.clone()) * xi)
                .sum();
            if s.is_integer() {
                Ok(s.to_integer())
            } else {
                Err(Error::NotInDual)
            }
        })
        .collect()
}

fn rational_pair(gram: &IntMatrix, x: &[BigRational], y: &[BigRational]) -> BigRational {
    let mut acc = BigRational::zero();
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if !gram[(i, j)].is_zero() {
                acc += xi * yj * BigRational::from_integer(gram[(i, j)].clone());
            }
        }
    }
    acc
}

/// `v / div(v)` as a rational vector.
fn normalized(lattice: &Lattice, v: &LatticeVector) -> Result<Vec<BigRational>> {
    let t = lattice.divisibility(v)?;
    Ok(v.coords()
        .iter()
        .map(|c| BigRational::new(c.clone(), t.clone()))
        .collect())
}

/// Computes `A_L` via the Smith normal form of the Gram matrix.
pub fn discriminant_group(lattice: &Lattice) -> DiscriminantGroup {
    let gram = lattice.gram().clone();
    let snf = smith_normal_form(&gram);
    let mut invariant_factors = Vec::new();
    let mut generators: Vec<Vec<BigRational>> = Vec::new();
    let mut coordinate_rows = Vec::new();
    for (i, d) in snf.invariant_factors().into_iter().enumerate() {
        debug_assert!(!d.is_zero(), "lattices are non-degenerate");
        if d.is_one() {
            continue;
        }
        generators.push(
            snf.right
                .column(i)
                .into_iter()
                .map(|c| BigRational::new(c, d.clone()))
                .collect(),
        );
        coordinate_rows.push(snf.left.row(i).to_vec());
        invariant_factors.push(d);
    }

    let pairing_matrix = generators
        .iter()
        .map(|x| {
            generators
                .iter()
                .map(|y| reduce_mod(rational_pair(&gram, x, y), 1))
                .collect()
        })
        .collect();
    let generator_squares = lattice.is_even().then(|| {
        generators
            .iter()
            .map(|x| QmodTwoZ::new(rational_pair(&gram, x, x)))
            .collect()
    });

    DiscriminantGroup {
        invariant_factors,
        generators,
        coordinate_rows,
        gram,
        pairing_matrix,
        generator_squares,
    }
}

/// `q(x) = xᵀ·G·x mod 2Z` for a dual vector `x` of an even lattice.
pub fn disc_quadratic_value(lattice: &Lattice, x: &[BigRational]) -> Result<QmodTwoZ> {
    if !lattice.is_even() {
        return Err(Error::OddLattice);
    }
    dual_pairings(lattice.gram(), x)?;
    Ok(QmodTwoZ::new(rational_pair(lattice.gram(), x, x)))
}

/// Coordinates of `[v / div(v)]` in the generators of `A_L`.
pub fn disc_class(lattice: &Lattice, v: &LatticeVector) -> Result<Vec<BigInt>> {
    discriminant_group(lattice).class_of_vector(lattice, v)
}

/// `q([v / div(v)])`, which equals `v² / div(v)² mod 2Z`.
pub fn disc_class_value(lattice: &Lattice, v: &LatticeVector) -> Result<QmodTwoZ> {
    disc_quadratic_value(lattice, &normalized(lattice, v)?)
}

/// Whether every listed class coordinate is zero.
pub fn is_zero_class(coords: &[BigInt]) -> bool {
    coords.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_lattice_expr;
    use alloc::string::ToString;
    use num_traits::Signed;

    fn q(n: i64, d: i64) -> QmodTwoZ {
        QmodTwoZ::from_ratio(n, d)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn v(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64s(c)
    }

    #[test]
    fn q_mod_two_reduction() {
        assert_eq!(q(-1, 2), q(3, 2));
        assert_eq!(q(4, 1), QmodTwoZ::zero());
        assert_eq!(q(7, 3).value(), &rat(1, 3));
        assert_eq!(&q(3, 2) + &q(3, 2), q(1, 1));
        assert_eq!(q(3, 2).times(&BigInt::from(3)), q(1, 2));
        assert_eq!(q(3, 2).to_string(), "3/2");
    }

    #[test]
    fn dual_bases() {
        let u = parse_lattice_expr("U").unwrap();
        assert_eq!(dual_basis(&u), u.gram().to_rational());
        let m2 = parse_lattice_expr("[-2]").unwrap();
        assert_eq!(dual_basis(&m2)[(0, 0)], rat(-1, 2));
        let h = Lattice::new(IntMatrix::from_rows(&[[2, 0], [0, -2]])).unwrap();
        let d = dual_basis(&h);
        assert_eq!(h.gram().to_rational().mul(&d), RatMatrix::identity(2));
        assert_eq!((d[(0, 0)].clone(), d[(1, 1)].clone()), (rat(1, 2), rat(-1, 2)));
    }

    #[test]
    fn groups_of_catalog_lattices() {
        let u3 = parse_lattice_expr("U+U+U").unwrap();
        let a = discriminant_group(&u3);
        assert!(a.is_trivial() && a.is_cyclic());
        assert_eq!(a.order(), BigInt::one());

        let og6s = parse_lattice_expr("U+U+U+[-2]").unwrap();
        let a = discriminant_group(&og6s);
        assert_eq!(a.invariant_factors(), &[BigInt::from(2)]);
        assert!(a.is_cyclic());
        assert_eq!(a.generator_squares().unwrap(), &[q(3, 2)]);
        // the lift is ±σ/2
        let g = &a.generators()[0];
        assert!(g[..6].iter().all(Zero::is_zero));
        assert_eq!(g[6].abs(), rat(1, 2));

        let og6 = parse_lattice_expr("U+U+U+[-2]+[-2]").unwrap();
        let a = discriminant_group(&og6);
        assert_eq!(a.invariant_factors(), &[BigInt::from(2), BigInt::from(2)]);
        assert!(!a.is_cyclic());
        assert_eq!(
            a.form_matrix().unwrap(),
            alloc::vec![alloc::vec![rat(3, 2), rat(0, 1)], alloc::vec![rat(0, 1), rat(3, 2)]]
        );
        assert_eq!(a.exponent(), BigInt::from(2));
    }

    #[test]
    fn quadratic_values() {
        let og6s = parse_lattice_expr("U+U+U+[-2]").unwrap();
        let half_sigma: Vec<_> = (0..7).map(|i| if i == 6 { rat(1, 2) } else { rat(0, 1) }).collect();
        assert_eq!(disc_quadratic_value(&og6s, &half_sigma).unwrap(), q(3, 2));
        assert_eq!(disc_quadratic_value(&og6s, &alloc::vec![rat(0, 1); 7]).unwrap(), QmodTwoZ::zero());

        let not_dual: Vec<_> = (0..7).map(|i| if i == 0 { rat(1, 2) } else { rat(0, 1) }).collect();
        assert_eq!(disc_quadratic_value(&og6s, &not_dual), Err(Error::NotInDual));

        let odd = parse_lattice_expr("U+[1]").unwrap();
        assert_eq!(disc_quadratic_value(&odd, &alloc::vec![rat(0, 1); 3]), Err(Error::OddLattice));
    }

    #[test]
    fn classes_of_vectors() {
        let og6s = parse_lattice_expr("U+U+U+[-2]").unwrap();
        let a = discriminant_group(&og6s);
        let sigma = v(&[0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(a.class_of_vector(&og6s, &sigma).unwrap(), alloc::vec![BigInt::one()]);
        assert_eq!(a.class_of_vector(&og6s, &v(&[1, 1, 0, 0, 0, 0, 0])).unwrap(), alloc::vec![BigInt::zero()]);
        for n in [1i64, 3, 5, 9] {
            let alpha = v(&[n + 1, n + 1, 0, 0, 0, 0, n]);
            assert_eq!(a.class_of_vector(&og6s, &alpha).unwrap(), alloc::vec![BigInt::one()]);
            assert_eq!(disc_class_value(&og6s, &alpha).unwrap(), q(3, 2));
        }
        assert_eq!(disc_class(&og6s, &LatticeVector::zero(7)), Err(Error::ZeroVector));
    }

    #[test]
    fn enumerated_values_of_og6() {
        let og6 = parse_lattice_expr("U+U+U+[-2]+[-2]").unwrap();
        let a = discriminant_group(&og6);
        let mut values: Vec<_> = a
            .elements()
            .iter()
            .map(|c| disc_quadratic_value(&og6, &a.lift(c)).unwrap())
            .collect();
        values.sort();
        values.dedup();
        assert_eq!(values, alloc::vec![QmodTwoZ::zero(), q(1, 1), q(3, 2)]);
    }
}
