//! Benchmark fixtures: seeded random codes of fixed shapes.

use lincode_core::{FieldSpec, GeneratorMatrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A random full-rank `[n,k]_q` code, the same for every call with the same
/// arguments.
pub fn random_code(q: u32, k: usize, n: usize, seed: u64) -> GeneratorMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((q as u64) << 32) ^ ((k as u64) << 16) ^ n as u64);
    GeneratorMatrix::random(FieldSpec::new(q).expect("supported field"), k, n, &mut rng).expect("valid shape")
}

/// Shapes for the minimum-weight benchmarks as (q, k, n).
pub const MINWT_SHAPES: &[(u32, usize, usize)] = &[(2, 12, 24), (2, 16, 32), (3, 8, 16), (4, 6, 15), (9, 4, 12)];

/// Shapes for the extension benchmarks as (q, k, n, m).
pub const EXTEND_SHAPES: &[(u32, usize, usize, usize)] =
    &[(2, 8, 16, 1), (3, 4, 10, 1), (4, 3, 8, 1), (3, 3, 6, 2), (4, 3, 7, 2)];
