//! Exact scalars, primitive types, predicates and the Ramsey-style search.

pub(crate) mod fast;
pub mod geom;
pub mod predicates;
pub mod ramsey;
pub mod scalar;

pub use geom::{cross3, dot3, AnyLine3, Line2, Line3, OrientedPlane3, Plane3, Point2, Point3, VLine2};
pub use predicates::{
    cross2, line2_intersect, orient2, project, project_line, segments_intersect, side_of_line,
    side_of_plane, Orientation, Side,
};
pub use ramsey::{monochromatic_subset, monochromatic_subset_of_color, monochromatic_subset_shared, DEFAULT_BUDGET};
pub use scalar::{parse_rational, Field};
