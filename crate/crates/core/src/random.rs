//! Seeded random frameworks for property tests and sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::af::ArgumentationFramework;

/// Each ordered pair, self-pairs included, becomes an attack with
/// probability `edge_prob`. Labels are `a0`, `a1`, ...
pub fn random_framework(n_args: usize, edge_prob: f64, seed: u64) -> ArgumentationFramework {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = edge_prob.clamp(0.0, 1.0);
    let labels = (0..n_args).map(|i| format!("a{i}")).collect();
    let mut attacks = Vec::new();
    for a in 0..n_args {
        for b in 0..n_args {
            if rng.gen_bool(p) {
                attacks.push((a, b));
            }
        }
    }
    ArgumentationFramework::new(labels, attacks).expect("generated labels are unique")
}

/// A deterministic corpus: sizes cycle through `1..=max_args` and edge
/// densities through a fixed ladder.
pub fn corpus(count: usize, max_args: usize, seed: u64) -> Vec<ArgumentationFramework> {
    const DENSITIES: [f64; 4] = [0.15, 0.25, 0.35, 0.5];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_args.max(1));
            let p = DENSITIES[rng.gen_range(0..DENSITIES.len())];
            random_framework(n, p, rng.gen())
        })
        .collect()
}
