//! Stabbing searches, the three-set construction and the full pipeline.

pub mod pipeline;
pub mod stab;
pub mod three;

pub use pipeline::{
    compactify, prepare_plane_stage, run_pipeline, strict2_subfamily, PipelineConfig, PlaneStage, Stage,
    TransversalReport,
};
pub use stab::{best_line_in_plane, cross_section, deepest_point2, depth_candidates, line_crossing_count3, PlaneChart};
pub use three::{check_realization3, project_onto, three_crossing_line, Lemma3setsTrace, PairTrace};
