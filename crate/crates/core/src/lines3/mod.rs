//! Lines in space: the above/below relation, monotone sequences and separating planes.

pub mod frame;
pub mod monotone;
pub mod separate;

pub use frame::{
    frame_rotation, generic_rotation, pair_frame, pi_plane, relation, rotate_line, separates_lines, unrotate_plane,
    vertical_points, LinePairFrame, Relation,
};
pub use monotone::{classify_triple3, find_separating_quad, is_monotone, Direction, Monotonicity, TripleType, TripleType3};
pub use separate::{
    all_pairs, best_separating_plane, best_separating_plane_pairs, pair_segments, pi_candidates, separate_general,
    separated_pairs, Candidates, GeneralSeparation, SeparationResult,
};
