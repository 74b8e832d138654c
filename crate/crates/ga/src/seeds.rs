//! Stable per-case seeds: the first eight bytes of SHA-256 over the master
//! seed and the case key, so a case replays the same samples regardless of
//! which other cases run or in what order.

use sha2::{Digest, Sha256};

/// Seed for one case, derived from the master seed and a key such as
/// `"equivalence/(2,0,1)/A01"`.
pub fn case_seed(master: u64, key: &str) -> u64 {
    let mut h = Sha256::new();
    h.update(master.to_le_bytes());
    h.update(key.as_bytes());
    let digest = h.finalize();
    u64::from_le_bytes(digest[..8].try_into().expect("digest has 32 bytes"))
}

/// Seed of sample `index` within a case.
pub fn sample_seed(case: u64, index: usize) -> u64 {
    case_seed(case, &index.to_string())
}
