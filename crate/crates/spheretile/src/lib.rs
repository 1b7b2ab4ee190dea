//! Edge-to-edge tilings of the sphere by congruent triangles, allowing
//! "half vertices" where a corner meets the interior of another tile's edge.
//!
//! The crate derives the admissible vertex combinations for a given corner,
//! checks counting identities, matches edge length patterns, computes the
//! spherical geometry of the triangle and builds and verifies explicit
//! tilings.

pub mod angles;
pub mod cli;
pub mod counting;
pub mod edges;
pub mod geometry;
pub mod tiling;
pub mod vertices;
