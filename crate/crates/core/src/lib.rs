//! Exact K-stability invariants for blow-ups `Y = Bl_{B_inf} P_V(L ⊕ O_V)`.
//!
//! The numeric core (polynomials, divisor classes, Zariski pieces and the
//! S/β invariants) is generic over [`Scalar`]. Exact answers use
//! [`Rational`]; `f64` instantiations are handy for cross-checks.

pub mod catalog;
pub mod error;
pub mod geometry;
pub mod invariants;
pub mod math;
pub mod poly;
pub mod refinement;
pub mod report;
pub mod scalar;
pub mod zariski;

pub use error::{Error, Result};
pub use geometry::{ClassPoly, Construction, DerivedClasses};
pub use invariants::{Classification, InvariantReport};
pub use poly::Polynomial;
pub use scalar::Scalar;
pub use zariski::{HorizontalDivisor, ProfilePiece, Segment};

/// Arbitrary-precision exact rational; the scalar for every reported value.
pub type Rational = num_rational::BigRational;
/// Dense polynomial in the Zariski parameter `t` with exact coefficients.
pub type Poly = Polynomial<Rational>;
/// Divisor class with exact polynomial coefficients.
pub type RationalClass = ClassPoly<Rational>;
/// Exact construction parameters.
pub type RationalConstruction = Construction<Rational>;

/// Floating-point twins, used by oracles and quick sweeps.
pub type PolyF64 = Polynomial<f64>;
pub type ConstructionF64 = Construction<f64>;
