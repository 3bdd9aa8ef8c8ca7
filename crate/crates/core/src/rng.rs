//! Seeded randomness. Every random choice flows from an explicit generator;
//! sub-generators are derived from a parent seed and a label by hashing, so
//! the order in which parallel tasks run never changes their draws.

use crate::linalg::Scalar;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

pub type EpwRng = ChaCha8Rng;

/// Range of the integer entries drawn by `rand_int`.
pub const ENTRY_BOUND: i64 = 10;

pub fn seeded(seed: u64) -> EpwRng {
    sub_rng(seed, "root")
}

pub fn sub_rng(seed: u64, label: &str) -> EpwRng {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(label.as_bytes());
    let digest: [u8; 32] = h.finalize().into();
    ChaCha8Rng::from_seed(digest)
}

/// Derive a child seed from an existing generator.
pub fn fork(rng: &mut EpwRng, label: &str) -> EpwRng {
    let s: u64 = rng.gen();
    sub_rng(s, label)
}

pub fn rand_int(rng: &mut EpwRng) -> i64 {
    rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND)
}

pub fn rand_scalar(rng: &mut EpwRng) -> Scalar {
    Scalar::from_integer(BigInt::from(rand_int(rng)))
}

pub fn rand_vec(rng: &mut EpwRng, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| rand_scalar(rng)).collect()
}

/// Random vector that is not identically zero.
pub fn rand_nonzero_vec(rng: &mut EpwRng, n: usize) -> Vec<Scalar> {
    loop {
        let v = rand_vec(rng, n);
        if v.iter().any(|x| !num_traits::Zero::is_zero(x)) {
            return v;
        }
    }
}

pub fn digest_hex(bytes: &[u8]) -> String {
    let d = Sha256::digest(bytes);
    d.iter().map(|b| format!("{b:02x}")).collect()
}
