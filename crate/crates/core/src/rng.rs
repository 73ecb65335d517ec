//! Seeded random number generation with a fixed, portable algorithm.
//!
//! Weight initialization and the random network generator must be
//! reproducible bit-for-bit across platforms and languages, so this module
//! pins splitmix64 rather than delegating to a library generator whose
//! stream might change between versions.

/// The splitmix64 output scramble applied to `x + GOLDEN`.
pub fn mix(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Sub-seed for the node at `preorder` within a tree whose node carries
/// `seed`. Fixed formula; part of the deterministic-weights contract.
pub fn node_seed(seed: u64, preorder: u64) -> u64 {
    mix(seed ^ mix(preorder))
}

/// splitmix64 stream.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [-1, 1): the high 53 bits of the next output as a binary
    /// fraction, scaled and shifted. Exact in f64.
    pub fn next_signed_unit(&mut self) -> f64 {
        let frac = (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
        2.0 * frac - 1.0
    }

    /// Uniform integer in [0, n). n must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        self.next_u64() % n
    }

    /// Uniform integer in [lo, hi] inclusive.
    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        debug_assert!(lo <= hi);
        lo + self.below(hi - lo + 1)
    }

    /// True with probability `num`/`den`.
    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stream_is_deterministic() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn signed_unit_range() {
        let mut r = SplitMix64::new(7);
        for _ in 0..1000 {
            let v = r.next_signed_unit();
            assert!((-1.0..1.0).contains(&v));
        }
    }

    #[test]
    fn node_seeds_differ_by_index() {
        assert_ne!(node_seed(5, 0), node_seed(5, 1));
        assert_ne!(node_seed(5, 0), node_seed(6, 0));
    }
}
