//! Seeded random and quasi-random point sources.
//!
//! All randomness in the crate flows from a single 64-bit seed through named
//! substreams of a counter-based generator (ChaCha12), so every analysis is
//! reproducible and batch work can be split at deterministic offsets. A
//! Sobol' low-discrepancy source is available behind the same interface for
//! quasi-Monte Carlo runs.

use alloc::vec;
use alloc::vec::Vec;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::special::norm_inv_cdf;

/// Named substreams of the master seed. Each analysis stage draws from its
/// own stream so that, e.g., changing the importance-sampling budget does not
/// perturb the experimental design.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Substream {
    Sampling,
    Design,
    ImportanceSampling,
    Ga,
    Test,
}

impl Substream {
    fn id(self) -> u64 {
        match self {
            Substream::Sampling => 1,
            Substream::Design => 2,
            Substream::ImportanceSampling => 3,
            Substream::Ga => 4,
            Substream::Test => 99,
        }
    }
}

/// Counter-based generator for one substream of a master seed.
pub fn substream_rng(seed: u64, stream: Substream) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(stream.id());
    rng
}

/// Uniform draw on the open interval (0,1): a 53-bit mantissa offset by half
/// an ulp so that 0 and 1 are never produced.
#[inline]
pub fn uniform_open01(rng: &mut impl RngCore) -> f64 {
    ((rng.next_u64() >> 11) as f64 + 0.5) * (1.0 / 9007199254740992.0)
}

/// Standard normal draw by inversion (one uniform per variate, which keeps
/// substreams seekable).
#[inline]
pub fn standard_normal(rng: &mut impl RngCore) -> f64 {
    norm_inv_cdf(uniform_open01(rng))
}

/// A source of points in the open unit hypercube (0,1)^dim.
///
/// Sources are sequential but seekable: `seek(k)` positions the source so the
/// next point returned is point `k` of the sequence, which lets batch
/// consumers split work at fixed offsets without changing the stream.
pub trait UniformSource {
    fn dim(&self) -> usize;
    fn next_point(&mut self, out: &mut [f64]);
    fn seek(&mut self, index: u64);
}

/// Pseudo-random source backed by a ChaCha12 substream.
pub struct PseudoSource {
    rng: ChaCha12Rng,
    dim: usize,
}

impl PseudoSource {
    pub fn new(seed: u64, stream: Substream, dim: usize) -> Self {
        PseudoSource { rng: substream_rng(seed, stream), dim }
    }
}

impl UniformSource for PseudoSource {
    fn dim(&self) -> usize {
        self.dim
    }

    fn next_point(&mut self, out: &mut [f64]) {
        debug_assert_eq!(out.len(), self.dim);
        for u in out.iter_mut() {
            *u = uniform_open01(&mut self.rng);
        }
    }

    fn seek(&mut self, index: u64) {
        // One uniform consumes one u64 = two 32-bit ChaCha words.
        let words = index as u128 * 2 * self.dim as u128;
        self.rng.set_word_pos(words);
    }
}

/// Largest dimension with embedded Sobol' direction numbers.
pub const SOBOL_MAX_DIM: usize = 10;

// Primitive-polynomial degrees, coefficients and initial direction numbers
// for dimensions 2..=10 (Joe & Kuo, new-joe-kuo-6 table); dimension 1 is the
// van der Corput sequence in base 2.
const SOBOL_S: [u32; 9] = [1, 2, 3, 3, 4, 4, 5, 5, 5];
const SOBOL_A: [u32; 9] = [0, 1, 1, 2, 1, 4, 2, 4, 7];
const SOBOL_M: [&[u32]; 9] = [
    &[1],
    &[1, 3],
    &[1, 3, 1],
    &[1, 1, 1],
    &[1, 1, 3, 3],
    &[1, 3, 5, 13],
    &[1, 1, 5, 5, 17],
    &[1, 1, 5, 5, 5],
    &[1, 1, 7, 11, 19],
];

const SOBOL_BITS: usize = 32;

/// Sobol' low-discrepancy source (31-bit accuracy, up to [`SOBOL_MAX_DIM`]
/// dimensions). Point 0 of the raw sequence is the origin and is skipped;
/// coordinates are offset by half a cell so they stay inside (0,1).
pub struct SobolSource {
    dim: usize,
    // direction[j][k]: direction integer k of coordinate j, scaled to 2^32
    direction: Vec<[u32; SOBOL_BITS]>,
    state: Vec<u32>,
    index: u64,
}

impl SobolSource {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 || dim > SOBOL_MAX_DIM {
            return Err(Error::Domain(alloc::format!(
                "Sobol source supports 1..={SOBOL_MAX_DIM} dimensions, got {dim}"
            )));
        }
        let mut direction = Vec::with_capacity(dim);
        for j in 0..dim {
            let mut v = [0u32; SOBOL_BITS];
            if j == 0 {
                for (k, vk) in v.iter_mut().enumerate() {
                    *vk = 1u32 << (31 - k);
                }
            } else {
                let s = SOBOL_S[j - 1] as usize;
                let a = SOBOL_A[j - 1];
                let m = SOBOL_M[j - 1];
                for k in 0..s.min(SOBOL_BITS) {
                    v[k] = m[k] << (31 - k);
                }
                for k in s..SOBOL_BITS {
                    let mut value = v[k - s] ^ (v[k - s] >> s);
                    for l in 1..s {
                        if (a >> (s - 1 - l)) & 1 == 1 {
                            value ^= v[k - l];
                        }
                    }
                    v[k] = value;
                }
            }
            direction.push(v);
        }
        let mut src = SobolSource {
            dim,
            direction,
            state: vec![0; dim],
            index: 0,
        };
        src.seek(0);
        Ok(src)
    }

    /// Recomputes the raw state for sequence index `i` from the Gray code of
    /// `i` (used by `seek`; iteration advances incrementally).
    fn state_at(&self, i: u64) -> Vec<u32> {
        let gray = i ^ (i >> 1);
        let mut state = vec![0u32; self.dim];
        for bit in 0..SOBOL_BITS.min(64) {
            if (gray >> bit) & 1 == 1 {
                for (j, s) in state.iter_mut().enumerate() {
                    *s ^= self.direction[j][bit];
                }
            }
        }
        state
    }
}

impl UniformSource for SobolSource {
    fn dim(&self) -> usize {
        self.dim
    }

    fn next_point(&mut self, out: &mut [f64]) {
        debug_assert_eq!(out.len(), self.dim);
        // Advance from raw index `index` to `index + 1`: flip the direction
        // numbers of the lowest zero bit of the current raw index.
        let c = self.index.trailing_ones() as usize;
        assert!(c < SOBOL_BITS, "Sobol sequence exhausted (2^32 points)");
        for (j, s) in self.state.iter_mut().enumerate() {
            *s ^= self.direction[j][c];
        }
        self.index += 1;
        for (j, u) in out.iter_mut().enumerate() {
            *u = (self.state[j] as f64 + 0.5) * (1.0 / 4294967296.0);
        }
    }

    fn seek(&mut self, index: u64) {
        // Point k of the source is raw Sobol index k + 1 (origin skipped).
        self.index = index;
        self.state = self.state_at(index);
    }
}
