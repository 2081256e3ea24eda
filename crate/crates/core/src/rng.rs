//! Deterministic random numbers for every stochastic step in the pipeline.
//!
//! The generator is SplitMix64 (Steele, Lea & Flood's `splitmix64` update):
//! a 64-bit counter advanced by the golden-ratio constant, hashed through
//! two xor-multiply rounds. It is seedable, platform-independent, and the
//! integer stream is bitwise reproducible, which is what the corpus
//! synthesis, loss traces, parameter init, dropout masks and evaluation
//! all key off.
//!
//! Independent streams (training vs evaluation traces, dropout vs init,
//! ...) are derived with [`derive_seed`] under distinct [`streams`] tags so
//! they never alias.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

#[inline]
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// SplitMix64 generator state.
#[derive(Debug, Clone)]
pub struct Rng {
    state: u64,
    cached_normal: Option<f64>,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng {
            state: seed,
            cached_normal: None,
        }
    }

    /// Next raw 64-bit output.
    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix64(self.state)
    }

    /// Uniform in [0, 1) with 53 random mantissa bits.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [lo, hi).
    #[inline]
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Uniform integer in [0, n). n must be > 0.
    #[inline]
    pub fn below(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        // 53-bit uniform scaled; bias is negligible for the corpus sizes here.
        (self.next_f64() * n as f64) as usize % n
    }

    /// Standard normal via Box-Muller; pairs are cached so draws stay on
    /// the deterministic stream.
    pub fn normal(&mut self) -> f64 {
        if let Some(z) = self.cached_normal.take() {
            return z;
        }
        // Guard against ln(0).
        let u1 = loop {
            let u = self.next_f64();
            if u > 0.0 {
                break u;
            }
        };
        let u2 = self.next_f64();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = 2.0 * std::f64::consts::PI * u2;
        self.cached_normal = Some(r * theta.sin());
        r * theta.cos()
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}

/// Deterministically derive a sub-seed from a base seed and a stream tag
/// plus arbitrary indices. Distinct tags give statistically independent
/// streams.
pub fn derive_seed(base: u64, tag: u64, indices: &[u64]) -> u64 {
    let mut s = mix64(base ^ tag.wrapping_mul(GOLDEN));
    for &ix in indices {
        s = mix64(s.wrapping_add(GOLDEN) ^ ix.wrapping_mul(0xD134_2543_DE82_EF95));
    }
    s
}

/// Stream tags for the seed namespaces used across the pipeline.
pub mod streams {
    /// Loss traces drawn during training example construction.
    pub const TRAIN_TRACE: u64 = 0x01;
    /// Random crop offsets during training.
    pub const TRAIN_CROP: u64 = 0x02;
    /// Parameter initialization.
    pub const INIT: u64 = 0x03;
    /// Dropout masks.
    pub const DROPOUT: u64 = 0x04;
    /// Validation traces/crops (fixed per clip so epochs are comparable).
    pub const VALIDATION: u64 = 0x05;
    /// Evaluation traces; disjoint from all training namespaces.
    pub const EVAL_TRACE: u64 = 0x06;
    /// Corpus synthesis.
    pub const CORPUS: u64 = 0x07;
    /// Train/validation/test split shuffling.
    pub const SPLIT: u64 = 0x08;
    /// Griffin-Lim random phase init.
    pub const PHASE: u64 = 0x09;
    /// Batch composition / example order.
    pub const BATCH: u64 = 0x0A;
}
