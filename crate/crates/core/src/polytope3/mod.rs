//! Convex polytopes in space: joins, separation and tangents.

pub mod join;
pub mod polytope;
pub mod tangent;

pub use join::{common_point3, join_points, separates_sets, vertical_join, vertical_segment_witness};
pub use polytope::{HalfSpace3, Polytope3};
pub use tangent::{
    common_tangent_lines2, common_tangent_planes3, is_good_family3, line_meets, line_polytope_interval,
    polytopes_meet, GoodFamilyCert, OrientedLine2, Tangents,
};
