//! Instance generators, verification suites, JSON and SVG output.

pub mod gen2;
pub mod gen3;
pub mod instance;
pub mod json;
pub mod suites;
pub mod svg;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use gen2::{gen_cap_family2, gen_flower2};
pub use gen3::{gen_monotone_lines3, gen_paraboloid, gen_strict2_family3};
pub use instance::{Instance, Sets};
pub use svg::{render_svg, SvgOptions};
pub use suites::{suite_names, verify_suite, SuiteFailure, SuiteReport};

/// Search budget: `TLAB_BUDGET` when set to a number, the default otherwise.
pub fn budget() -> u64 {
    std::env::var("TLAB_BUDGET").ok().and_then(|v| v.parse().ok()).unwrap_or(crate::kernel::DEFAULT_BUDGET)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed of trial `i` under a base seed (SplitMix64 finalizer over a counter).
pub fn split_seed(seed: u64, i: u64) -> u64 {
    let mut z = seed ^ i.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
