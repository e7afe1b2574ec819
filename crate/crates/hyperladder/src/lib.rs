//! Exact ladder-operator algebra for hypergeometric-type equations.
//!
//! The central object is the equation `sigma(s) y'' + tau(s) y' + lambda y = 0`
//! with `deg sigma <= 2` and `deg tau = 1`. For the four classical weight
//! families (hypergeometric, Jacobi, Laguerre, Hermite) the crate provides:
//!
//! * exact rational construction of the polynomial solutions and their
//!   associated functions `Phi_{l,m} = kappa^m d^m/ds^m Phi_l`, `kappa = sqrt(sigma)`,
//! * raising/lowering operators that connect neighbouring `m` sectors, with
//!   the factorization and shape-invariance identities checkable in exact
//!   arithmetic,
//! * the weighted-`L^2` layer: Gauss quadrature generated from the family's
//!   own recurrence, orthogonality and norm ladders, creation/annihilation
//!   operators on basis coefficients and their commutator algebra,
//! * coherent states for the annihilation operator of each `m` sector,
//! * the change of variable to Schroedinger form: superpotentials, partner
//!   potentials and bound-state wavefunctions, plus a Numerov shooting solver
//!   used as an independent spectral check.
//!
//! All structural identities are carried out over arbitrary-precision
//! rationals; floating point enters only at quadrature, coherent-state and
//! grid-sampling boundaries.

pub mod acceptance;
pub mod coherent;
pub mod error;
pub mod family;
pub mod hilbert;
pub mod ladder;
pub mod polynomial;
pub mod rational;
pub mod schrodinger;

pub use error::{Error, Result};
pub use family::{FamilyConfig, FamilyName, FamilySpec, Normalization};
pub use polynomial::Polynomial;
pub use rational::Rational;
