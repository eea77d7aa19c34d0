//! Shared inputs for the benchmarks.

use matverify::generate::{generate, CostProfile, MatroidProfile, Profile};
use matverify::UncertainInstance;

/// A seeded random graph instance with `edges` edges on `vertices` vertices.
pub fn graphic(seed: u64, vertices: usize, edges: usize) -> UncertainInstance {
    let profile =
        Profile::new(MatroidProfile::Graphic { vertices, edges }).costs(CostProfile::Random);
    generate(seed, &profile).expect("graphic profiles with vertices are feasible")
}

/// A seeded random uniform-matroid instance.
pub fn uniform(seed: u64, n: usize, rank: usize) -> UncertainInstance {
    let profile = Profile::new(MatroidProfile::Uniform { n, rank }).costs(CostProfile::Random);
    generate(seed, &profile).expect("rank does not exceed n")
}
