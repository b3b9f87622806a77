//! Seeded generator; every random choice in the library goes through it so
//! that results are a pure function of their inputs.

use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

pub type Rng = ChaCha8Rng;

pub fn seeded(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
