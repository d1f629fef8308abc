//! Exact arithmetic for even integral lattices.
//!
//! Lattices are explicit Gram matrices over arbitrary-precision integers.
//! On top of them the crate computes discriminant groups and discriminant
//! quadratic forms, divisibilities, Eichler-criterion orbit decisions, and
//! the catalog of hyperkähler lattices `U³ ⊕ [−2]` and `U³ ⊕ [−2]²` with
//! their polarization-type feasibility laws and witness classes.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod catalog;
pub mod discriminant;
pub mod eichler;
pub mod error;
pub mod expr;
pub mod fujiki;
pub mod lattice;
pub mod linalg;
pub mod mukai;

pub use catalog::{
    components, named_lattice, og6_smooth_feasible, og6s_feasible, witness_og6_smooth, witness_og6s,
    DeformationType, NamedLattice, PolarizationType, Witness,
};
pub use discriminant::{disc_class, disc_quadratic_value, discriminant_group, dual_basis, DiscriminantGroup, QmodTwoZ};
pub use eichler::{
    apply_transvection, orbit_bfs_oracle, orbit_invariant, same_orbit, OrbitExplorer, OrbitInvariant, Transvection,
};
pub use error::{Error, NotApplicable, ParseError, Result};
pub use expr::{parse_lattice_expr, LatticeExpr};
pub use lattice::{Lattice, LatticeVector};
pub use linalg::{IntMatrix, RatMatrix};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
