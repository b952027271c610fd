//! Shared inputs for the criterion benchmarks.

use cyclotope::Tope;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Dimensions exercised by the spectrum benchmarks.
pub const DIMENSIONS: [usize; 4] = [64, 256, 1024, 2048];

/// A reproducible random tope of dimension `t`.
pub fn seeded_tope(t: usize, seed: u64) -> Tope {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let signs = (0..t)
        .map(|_| if rng.gen::<bool>() { 1 } else { -1 })
        .collect();
    Tope::new(signs).expect("t >= 3")
}
