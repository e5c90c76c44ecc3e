//! Convex polygons and the structure of strictly 2-intersecting triples.

pub mod four;
pub mod hole;
pub mod polygon;
pub mod triple;

pub use four::{check_lemma_4sets, mutually_tangent, FourSetsHypothesis, FourSetsOutcome};
pub use hole::{hole_region, HoleDescriptor};
pub use polygon::{hull2, intersect_all, poly_intersect2, ConvexPoly2, HalfPlane};
pub use triple::{
    analyze_triple, family_class2, triple_category, triple_orientation, Category, FamilyClass, PairIdx,
    TripleAnalysis,
};
