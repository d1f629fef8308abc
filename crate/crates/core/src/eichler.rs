//! Eichler transvections and orbit classification of lattice vectors.
//!
//! For an even lattice containing two orthogonal hyperbolic planes and with
//! cyclic discriminant group, two primitive vectors lie in the same orbit
//! under transvections exactly when they have the same square and the same
//! divisibility. [`same_orbit`] decides orbit questions with that criterion;
//! [`OrbitExplorer`] searches for explicit transvection words and serves as
//! an independent check.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::discriminant::{disc_class_value, discriminant_group, QmodTwoZ};
use crate::error::{Error, NotApplicable, Result};
use crate::lattice::{Lattice, LatticeVector};

/// The Eichler transvection `t(e, a)` for isotropic `e` and `a ⊥ e`:
///
/// `t(x) = x − (a,x)·e + (e,x)·a − ½(a,a)·(e,x)·e`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transvection {
    e: LatticeVector,
    a: LatticeVector,
}

impl Transvection {
    pub fn new(lattice: &Lattice, e: LatticeVector, a: LatticeVector) -> Result<Self> {
        if !lattice.square(&e)?.is_zero() {
            return Err(Error::InvalidTransvection("e is not isotropic"));
        }
        if !lattice.pair(&e, &a)?.is_zero() {
            return Err(Error::InvalidTransvection("a is not orthogonal to e"));
        }
        Ok(Transvection { e, a })
    }

    pub fn isotropic(&self) -> &LatticeVector {
        &self.e
    }

    pub fn shift(&self) -> &LatticeVector {
        &self.a
    }

    /// The inverse transvection `t(e, −a)`.
    pub fn inverse(&self) -> Self {
        Transvection {
            e: self.e.clone(),
            a: -&self.a,
        }
    }
}

/// Applies a transvection to `x`. The lattice must be even so that
/// `½(a,a)` is an integer.
pub fn apply_transvection(lattice: &Lattice, t: &Transvection, x: &LatticeVector) -> Result<LatticeVector> {
    if !lattice.is_even() {
        return Err(Error::OddLattice);
    }
    let (e, a) = (&t.e, &t.a);
    if !lattice.square(e)?.is_zero() {
        return Err(Error::InvalidTransvection("e is not isotropic"));
    }
    if !lattice.pair(e, a)?.is_zero() {
        return Err(Error::InvalidTransvection("a is not orthogonal to e"));
    }
    let ax = lattice.pair(a, x)?;
    let ex = lattice.pair(e, x)?;
    let half_aa = lattice.square(a)? / 2;
    let shifted: BigInt = ax + &half_aa * &ex;
    let e_coeff = -shifted;
    Ok(&(x + &e.scale(&e_coeff)) + &a.scale(&ex))
}

/// The orbit fingerprint of a nonzero vector: content, then square,
/// divisibility and discriminant value of the primitive part.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitInvariant {
    pub content: BigInt,
    pub square: BigInt,
    pub divisibility: BigInt,
    pub disc_value: QmodTwoZ,
}

pub fn orbit_invariant(lattice: &Lattice, v: &LatticeVector) -> Result<OrbitInvariant> {
    if !lattice.is_even() {
        return Err(Error::OddLattice);
    }
    let (content, primitive) = v.primitive_part()?;
    Ok(OrbitInvariant {
        content,
        square: lattice.square(&primitive)?,
        divisibility: lattice.divisibility(&primitive)?,
        disc_value: disc_class_value(lattice, &primitive)?,
    })
}

/// Checks the hypotheses of the Eichler criterion for `lattice`.
pub fn criterion_applies(lattice: &Lattice) -> Result<(), NotApplicable> {
    if !lattice.is_even() {
        return Err(NotApplicable::NotEven);
    }
    if lattice.known_u_summands() < 2 {
        return Err(NotApplicable::InsufficientHyperbolicPlanes {
            certified: lattice.known_u_summands(),
        });
    }
    if !discriminant_group(lattice).is_cyclic() {
        return Err(NotApplicable::NonCyclicDiscriminant);
    }
    Ok(())
}

/// Decides whether `u` and `v` lie in the same transvection orbit.
///
/// Primitive vectors are compared by square and divisibility. Non-primitive
/// vectors must share their content, after which their primitive parts are
/// compared.
pub fn same_orbit(lattice: &Lattice, u: &LatticeVector, v: &LatticeVector) -> Result<bool> {
    criterion_applies(lattice).map_err(Error::CriterionNotApplicable)?;
    let (cu, pu) = u.primitive_part()?;
    let (cv, pv) = v.primitive_part()?;
    if cu != cv {
        return Ok(false);
    }
    Ok(lattice.square(&pu)? == lattice.square(&pv)?
        && lattice.divisibility(&pu)? == lattice.divisibility(&pv)?)
}

/// Breadth-first search over a fixed, finite set of transvections.
///
/// The generating set is `t(e, a)` for every nonzero isotropic `e`
/// supported on the certified hyperbolic planes with coordinates in
/// `{−1, 0, 1}`, and every `a` with coordinates in `{−1, 0, 1}` orthogonal to
/// `e`. Generators acting identically are merged; the set is closed under
/// inverses. Search states are exact coordinate tuples, and any state with a
/// coordinate above the bound is pruned.
#[derive(Clone, Debug)]
pub struct OrbitExplorer {
    rank: usize,
    generator_count: usize,
    families: Vec<Family>,
}

// All kept generators sharing one isotropic vector.
#[derive(Clone, Debug)]
struct Family {
    e: Vec<i64>,
    ge: Vec<i64>,
    shifts: Vec<Shift>,
}

#[derive(Clone, Debug)]
struct Shift {
    a: Vec<i64>,
    ga: Vec<i64>,
    half_aa: i64,
}

/// BFS result: every reached state with its depth.
pub type Reached = BTreeMap<LatticeVector, usize>;

fn small(xs: &[BigInt]) -> Result<Vec<i64>> {
    xs.iter().map(|x| x.to_i64().ok_or(Error::OracleRange)).collect()
}

fn dot(u: &[i64], v: &[i64]) -> Option<i128> {
    u.iter()
        .zip(v)
        .try_fold(0i128, |acc, (a, b)| acc.checked_add(i128::from(*a) * i128::from(*b)))
}

impl OrbitExplorer {
    pub fn new(lattice: &Lattice) -> Result<Self> {
        if !lattice.is_even() {
            return Err(Error::OddLattice);
        }
        let rank = lattice.rank();
        let support: Vec<usize> = lattice
            .hyperbolic_planes()
            .iter()
            .flat_map(|&i| [i, i + 1])
            .collect();

        let isotropic: Vec<LatticeVector> = unit_box(support.len())
            .into_iter()
            .map(|c| {
                let mut e = vec![0i64; rank];
                for (&pos, x) in support.iter().zip(c) {
                    e[pos] = x;
                }
                LatticeVector::from_i64s(&e)
            })
            .filter(|e| !e.is_zero() && lattice.square(e).expect("rank matches").is_zero())
            .collect();
        let shifts: Vec<LatticeVector> = unit_box(rank)
            .into_iter()
            .map(|c| LatticeVector::from_i64s(&c))
            .collect();

        let gram = lattice.gram();
        let mut seen = BTreeSet::new();
        let mut families = Vec::new();
        for e in &isotropic {
            let ge = gram.mul_vec(e.coords());
            let mut family = Family {
                e: small(e.coords())?,
                ge: small(&ge)?,
                shifts: Vec::new(),
            };
            for a in &shifts {
                if !lattice.pair(e, a).expect("rank matches").is_zero() {
                    continue;
                }
                let ga = gram.mul_vec(a.coords());
                let half_aa: BigInt = lattice.square(a).expect("rank matches") / 2;
                // the matrix I − e·(Ga)ᵀ + a·(Ge)ᵀ − ½(a,a)·e·(Ge)ᵀ identifies
                // the group element
                let mut m = Vec::with_capacity(rank * rank);
                let mut identity = true;
                for i in 0..rank {
                    for j in 0..rank {
                        let ei = &e.coords()[i];
                        let x: BigInt = &a.coords()[i] * &ge[j] - ei * &ga[j] - ei * &half_aa * &ge[j];
                        identity &= x.is_zero();
                        m.push(x);
                    }
                }
                if identity || !seen.insert(m) {
                    continue;
                }
                family.shifts.push(Shift {
                    a: small(a.coords())?,
                    ga: small(&ga)?,
                    half_aa: half_aa.to_i64().ok_or(Error::OracleRange)?,
                });
            }
            if !family.shifts.is_empty() {
                families.push(family);
            }
        }
        Ok(OrbitExplorer {
            rank,
            generator_count: seen.len(),
            families,
        })
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    /// The generating transvections, one per distinct group element.
    pub fn generators(&self) -> impl Iterator<Item = Transvection> + '_ {
        self.families.iter().flat_map(|f| {
            f.shifts.iter().map(move |s| Transvection {
                e: LatticeVector::from_i64s(&f.e),
                a: LatticeVector::from_i64s(&s.a),
            })
        })
    }

    /// All states reachable from `start` within `max_depth` steps without
    /// leaving the coordinate box, with their BFS depth.
    pub fn explore(&self, start: &LatticeVector, coord_bound: u32, max_depth: usize) -> Reached {
        let Some(s) = self.to_state(start) else {
            return BTreeMap::new();
        };
        self.bfs(s, i64::from(coord_bound), max_depth, None)
            .0
            .into_iter()
            .map(|(k, d)| (LatticeVector::from_i64s(&k), d))
            .collect()
    }

    /// Length of the shortest transvection word from `u` to `v` within the
    /// budget, or `None` when the search finds none.
    pub fn distance(&self, u: &LatticeVector, v: &LatticeVector, coord_bound: u32, max_depth: usize) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        let bound = i64::from(coord_bound);
        let (s, t) = (self.to_state(u)?, self.to_state(v)?);
        if [&s, &t].iter().any(|x| x.iter().any(|c| c.abs() > bound)) {
            return None;
        }
        self.bfs(s, bound, max_depth, Some(&t)).1
    }

    fn to_state(&self, v: &LatticeVector) -> Option<Vec<i64>> {
        if v.len() != self.rank {
            return None;
        }
        v.coords().iter().map(ToPrimitive::to_i64).collect()
    }

    /// Images of `x` under every generator that stay inside the box.
    fn neighbours(&self, x: &[i64], bound: i64, out: &mut Vec<Vec<i64>>) {
        let mut coefficients = Vec::new();
        for f in &self.families {
            let ex = dot(&f.ge, x);
            if ex == Some(0) {
                // t(x) = x − (a,x)·e depends on a only through (a,x)
                coefficients.clear();
                for s in &f.shifts {
                    match dot(&s.ga, x) {
                        Some(ax) => coefficients.push(ax),
                        None => exact_image(f, s, x, bound, out),
                    }
                }
                coefficients.sort_unstable();
                coefficients.dedup();
                for &c in &coefficients {
                    // with no `a` term an overflow means a coordinate far
                    // outside the box
                    if c != 0 {
                        push_in_box(x, c, &f.e, 0, &[], bound, out);
                    }
                }
                continue;
            }
            for s in &f.shifts {
                let c = ex.and_then(|ex| {
                    let c = dot(&s.ga, x)?.checked_add(i128::from(s.half_aa).checked_mul(ex)?)?;
                    Some((c, ex))
                });
                match c {
                    Some((c, ex)) if push_in_box(x, c, &f.e, ex, &s.a, bound, out) => {}
                    Some(_) | None => exact_image(f, s, x, bound, out),
                }
            }
        }
    }

    fn bfs(
        &self,
        start: Vec<i64>,
        bound: i64,
        max_depth: usize,
        target: Option<&[i64]>,
    ) -> (BTreeMap<Vec<i64>, usize>, Option<usize>) {
        let mut seen = BTreeMap::new();
        let mut queue = VecDeque::new();
        let mut next = Vec::new();
        seen.insert(start.clone(), 0);
        queue.push_back((start, 0usize));
        while let Some((x, depth)) = queue.pop_front() {
            if depth == max_depth {
                continue;
            }
            next.clear();
            self.neighbours(&x, bound, &mut next);
            for y in next.drain(..) {
                if seen.contains_key(&y) {
                    continue;
                }
                if target == Some(y.as_slice()) {
                    seen.insert(y, depth + 1);
                    return (seen, Some(depth + 1));
                }
                seen.insert(y.clone(), depth + 1);
                queue.push_back((y, depth + 1));
            }
        }
        (seen, None)
    }
}

/// Pushes `x − c·e + k·a` when every coordinate lies within the bound.
/// Returns `false` only on `i128` overflow, leaving the case to
/// [`exact_image`].
fn push_in_box(x: &[i64], c: i128, e: &[i64], k: i128, a: &[i64], bound: i64, out: &mut Vec<Vec<i64>>) -> bool {
    let bound = i128::from(bound);
    let mut y = Vec::with_capacity(x.len());
    for (i, &xi) in x.iter().enumerate() {
        let v = c
            .checked_mul(i128::from(e[i]))
            .and_then(|ce| i128::from(xi).checked_sub(ce))
            .and_then(|v| match a.get(i) {
                Some(&ai) => k.checked_mul(i128::from(ai)).and_then(|ka| v.checked_add(ka)),
                None => Some(v),
            });
        match v {
            None => return false,
            Some(v) if v.abs() > bound => return true,
            Some(v) => y.push(v as i64),
        }
    }
    out.push(y);
    true
}

/// `t(e, a)·x` in `BigInt`, pushed when it lies within the bound.
fn exact_image(f: &Family, s: &Shift, x: &[i64], bound: i64, out: &mut Vec<Vec<i64>>) {
    let pair = |u: &[i64]| -> BigInt { u.iter().zip(x).map(|(a, b)| BigInt::from(*a) * b).sum() };
    let ex = pair(&f.ge);
    let c = pair(&s.ga) + BigInt::from(s.half_aa) * &ex;
    let y: Option<Vec<i64>> = x
        .iter()
        .enumerate()
        .map(|(i, &xi)| {
            let yi = BigInt::from(xi) - &c * f.e[i] + &ex * s.a[i];
            yi.to_i64().filter(|v| v.abs() <= bound)
        })
        .collect();
    if let Some(y) = y {
        out.push(y);
    }
}

/// All vectors in `{−1, 0, 1}^n`, lexicographic.
fn unit_box(n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                [-1, 0, 1].into_iter().map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

/// Searches for a transvection word taking `u` to `v`. `false` only means
/// no word was found within the budget.
pub fn orbit_bfs_oracle(
    lattice: &Lattice,
    u: &LatticeVector,
    v: &LatticeVector,
    coord_bound: u32,
    max_depth: usize,
) -> Result<bool> {
    if u == v {
        return Ok(true);
    }
    let explorer = OrbitExplorer::new(lattice)?;
    Ok(explorer.distance(u, v, coord_bound, max_depth).is_some())
}

/// Whether `div(v)` divides the exponent of `A_L`, which holds for every
/// primitive `v` since `[v / div(v)]` has order exactly `div(v)`.
pub fn divides_exponent(lattice: &Lattice, v: &LatticeVector) -> Result<bool> {
    let exp = discriminant_group(lattice).exponent();
    Ok(exp.is_multiple_of(&lattice.divisibility(v)?))
}
