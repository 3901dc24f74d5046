//! SplitMix64, the fixed pseudo-random generator behind every seeded trial.
//!
//! The generator is pinned to a single published algorithm (Steele, Lea &
//! Flood's SplitMix64: an additive 64-bit counter followed by a two-round
//! multiply-xorshift finalizer) so that identical seeds replay identical
//! trial streams on every platform.

/// Seeded 64-bit generator with a fixed algorithm.
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

    /// Uniform-ish value in `0..bound`; `bound` must be positive. The modulo
    /// bias is irrelevant at the tiny bounds used for instance generation.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        self.next_u64() % bound
    }

    /// Inclusive range helper for small instance parameters.
    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        debug_assert!(lo <= hi);
        lo + self.below(hi - lo + 1)
    }

    pub fn chance(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }
}
