//! Checks that the rotated pyramids tessellate the cube and that the
//! cuboids `D_n[i]` tile the simplex, exactly where possible and by seeded
//! sampling elsewhere.

mod monte_carlo;
mod regions;
pub mod sampling;
mod tessellation;
mod tiling;

pub use monte_carlo::{mc_estimate, mc_volume, MCEstimate};
pub use regions::{
    assign_region, pyramid_equals_region, region_membership, region_vertices, Region,
};
pub use tessellation::{verify_tessellation, TessellationReport};
pub use tiling::{verify_cuboid_tiling, TilingReport};

/// `4·sqrt(K·p·(1-p))`, the allowed deviation of a binomial count from `K·p`.
pub fn binomial_tolerance(samples: u64, p: f64) -> f64 {
    4.0 * (samples as f64 * p * (1.0 - p)).sqrt()
}
