//! Seed derivation. Every random choice in the crate draws from a ChaCha8
//! stream seeded by `derive_seed(root, stream, index)`, so a single root
//! seed fixes all output.

use crate::arith::splitmix64;

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv1a(label: &str) -> u64 {
    label
        .bytes()
        .fold(FNV_OFFSET, |h, b| (h ^ b as u64).wrapping_mul(FNV_PRIME))
}

/// Child seed for item `index` of the named `stream`.
pub fn derive_seed(root: u64, stream: &str, index: u64) -> u64 {
    splitmix64(splitmix64(root ^ fnv1a(stream)) ^ index)
}
