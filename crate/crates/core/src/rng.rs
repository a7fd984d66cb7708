//! Seeded pseudo-random numbers for instance generation.
//!
//! The generator is xoshiro256** with its 256-bit state expanded from the
//! 64-bit seed by SplitMix64 (the reference seeding procedure). All derived
//! draws are defined here so that other implementations can replay them:
//!
//! * `uniform()`: `(next_u64() >> 11) * 2^-53`, in `[0, 1)`.
//! * `uniform_in(lo, hi)`: `lo + (hi - lo) * uniform()`.
//! * `below(n)`: `next_u64() % n`, redrawn while the raw value is at or above
//!   the largest multiple of `n` that fits in 64 bits.
//! * `bernoulli(p)`: `uniform() < p`.
//! * `gaussian_like()`: `(u1 + u2 + u3 + u4 - 2) * sqrt(3)` with four
//!   successive `uniform()` draws (unit variance, bounded support).

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

#[derive(Debug, Clone)]
pub struct Rng(Xoshiro256StarStar);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Self(Xoshiro256StarStar::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Uniform integer in `0..n`. Panics if `n == 0`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "below(0)");
        let zone = u64::MAX - u64::MAX % n;
        loop {
            let r = self.next_u64();
            if r < zone {
                return r % n;
            }
        }
    }

    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.uniform() < p
    }

    pub fn gaussian_like(&mut self) -> f64 {
        let s: f64 = (0..4).map(|_| self.uniform()).sum();
        (s - 2.0) * 3f64.sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = Rng::new(42);
        let mut b = Rng::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        assert_ne!(Rng::new(1).next_u64(), Rng::new(2).next_u64());
    }

    #[test]
    fn draws_stay_in_range() {
        let mut r = Rng::new(7);
        for _ in 0..10_000 {
            let u = r.uniform();
            assert!((0.0..1.0).contains(&u));
            assert!(r.below(6) < 6);
            let g = r.gaussian_like();
            assert!(g.abs() <= 2.0 * 3f64.sqrt());
        }
        assert!(!r.bernoulli(0.0));
        assert!(r.bernoulli(1.0));
    }
}
