//! Caps and cups, realizations, and their extraction from planar families.

pub mod chains;
pub mod realization;
pub mod realize;

pub use chains::{
    check_generic_lines, is_cap_lines, is_cap_points, is_cup_lines, is_cup_points, longest_cap_or_cup,
    longest_cap_or_cup_brute, ChainKind,
};
pub use realization::{check_realization2, chord, order_and_check, Realization2, RealizationFailure};
pub use realize::{eight_color, extract_realizable, realize_case1, realize_case2, Color8};
