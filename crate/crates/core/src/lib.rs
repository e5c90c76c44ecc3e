//! Exact rational geometry for line transversals of pairwise intersecting
//! convex sets.
//!
//! The geometry is generic over [`kernel::Field`]; the aliases below fix the
//! exact rational scalar used by the predicates, generators and the CLI.

pub mod error;
pub mod kernel;
pub mod poly2;
pub mod caps;
pub mod lines3;
pub mod polytope3;
pub mod transversal;
pub mod harness;

pub use error::{Error, Result};

pub type Scalar = num_rational::BigRational;
pub type Point2 = kernel::Point2<Scalar>;
pub type Point3 = kernel::Point3<Scalar>;
pub type Line2 = kernel::Line2<Scalar>;
pub type VLine2 = kernel::VLine2<Scalar>;
pub type Line3 = kernel::Line3<Scalar>;
pub type AnyLine3 = kernel::AnyLine3<Scalar>;
pub type Plane3 = kernel::Plane3<Scalar>;
pub type OrientedPlane3 = kernel::OrientedPlane3<Scalar>;
pub type Polytope3 = polytope3::Polytope3<Scalar>;
pub type ConvexPoly2 = poly2::ConvexPoly2<Scalar>;
