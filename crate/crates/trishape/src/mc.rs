//! The uniform-measure Monte Carlo oracle.
//!
//! Shapes are sampled directly in spherical coordinates — cos(theta) uniform
//! on [-1, 1], phi uniform on [0, 2 pi) — which is the rotation-invariant
//! area measure on the shape sphere; the poles carry probability zero.
//! Predicates consume the maximal angle through the exact reconstruct path,
//! keeping the oracle independent of the closed-form angle law it is used to
//! check.
//!
//! Randomness comes from a small counter-based generator: draw i of stream
//! `seed` is the avalanche mix of `seed + (i+1) * GOLDEN_GAMMA` (the i-th
//! output of the well-known splitmix64 sequence). Sample i consumes the
//! fixed counters 2i and 2i+1, so estimates are bitwise identical for a
//! given (n, seed) regardless of chunking or thread count. Conformance
//! vectors live in this module's tests and in `tests/rng_vectors.rs`.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

use crate::angle::max_angle_from_shape;
use crate::shape::{ClusterId, ShapeCoords};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;
const TWO_PI_3: f64 = 2.0 * FRAC_PI_3;

#[inline]
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The `counter`-th 64-bit draw of stream `seed`.
#[inline]
pub fn draw(seed: u64, counter: u64) -> u64 {
    mix64(seed.wrapping_add(counter.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA)))
}

#[inline]
fn unit_f64(bits: u64) -> f64 {
    // 53 high bits into [0, 1).
    (bits >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Seedable counter-based generator; stateless draws are exposed through
/// [`draw`] for deterministic splitting.
#[derive(Clone, Copy, Debug)]
pub struct CounterRng {
    seed: u64,
    counter: u64,
}

impl CounterRng {
    pub fn new(seed: u64) -> Self {
        CounterRng { seed, counter: 0 }
    }

    pub fn with_counter(seed: u64, counter: u64) -> Self {
        CounterRng { seed, counter }
    }

    pub fn next_u64(&mut self) -> u64 {
        let v = draw(self.seed, self.counter);
        self.counter += 1;
        v
    }

    /// Uniform on [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        unit_f64(self.next_u64())
    }

    /// Uniform on [lo, hi).
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

/// Monte Carlo run configuration. Identical (n, seed, chunk) give bitwise
/// identical estimates under any execution parallelism; with the per-sample
/// counter scheme the chunk size only sets the work batch granularity.
#[derive(Clone, Copy, Debug)]
pub struct McConfig {
    pub n: u64,
    pub seed: u64,
    pub chunk: u64,
}

impl Default for McConfig {
    fn default() -> Self {
        McConfig {
            n: 1_000_000,
            seed: 0,
            chunk: 65_536,
        }
    }
}

impl McConfig {
    pub fn new(n: u64, seed: u64) -> Self {
        McConfig {
            n,
            seed,
            chunk: 65_536,
        }
    }
}

/// A frequency estimate with its binomial standard error.
#[derive(Clone, Debug, PartialEq)]
pub struct McEstimate {
    pub p_hat: f64,
    pub stderr: f64,
    pub n: u64,
    pub hits: u64,
    pub predicate: String,
}

/// Deterministic `index`-th sample of stream `seed`: cos(theta) = 1 - 2 u,
/// phi = 2 pi v, from counters 2 index and 2 index + 1.
pub fn shape_at(seed: u64, index: u64) -> ShapeCoords {
    let u = unit_f64(draw(seed, 2 * index));
    let v = unit_f64(draw(seed, 2 * index + 1));
    // u in [0,1) puts cos(theta) in (-1, 1], so the binary-collision pole is
    // never produced.
    let cos_theta = 1.0 - 2.0 * u;
    let theta = cos_theta.clamp(-1.0, 1.0).acos();
    let phi = 2.0 * PI * v;
    ShapeCoords::new(theta, if phi > PI { phi - 2.0 * PI } else { phi }, ClusterId::C1)
}

/// Draws one uniform shape, consuming two values from `rng`.
pub fn sample_uniform_shape(rng: &mut CounterRng) -> ShapeCoords {
    let u = rng.next_f64();
    let v = rng.next_f64();
    let cos_theta = 1.0 - 2.0 * u;
    let phi = 2.0 * PI * v;
    ShapeCoords::new(
        cos_theta.clamp(-1.0, 1.0).acos(),
        if phi > PI { phi - 2.0 * PI } else { phi },
        ClusterId::C1,
    )
}

fn count_chunk<F: Fn(&ShapeCoords) -> bool>(seed: u64, lo: u64, hi: u64, pred: &F) -> u64 {
    let mut hits = 0u64;
    for i in lo..hi {
        if pred(&shape_at(seed, i)) {
            hits += 1;
        }
    }
    hits
}

fn finish(hits: u64, cfg: &McConfig, predicate: &str) -> McEstimate {
    let n = cfg.n;
    let p_hat = hits as f64 / n as f64;
    McEstimate {
        p_hat,
        stderr: (p_hat * (1.0 - p_hat) / n as f64).sqrt(),
        n,
        hits,
        predicate: predicate.to_owned(),
    }
}

fn chunk_ranges(cfg: &McConfig) -> Vec<(u64, u64)> {
    let chunk = cfg.chunk.max(1);
    let mut out = Vec::with_capacity((cfg.n / chunk + 1) as usize);
    let mut lo = 0;
    while lo < cfg.n {
        let hi = (lo + chunk).min(cfg.n);
        out.push((lo, hi));
        lo = hi;
    }
    out
}

/// Unbiased frequency estimate of `pred` under the uniform shape measure.
/// Chunks run in parallel when the `parallel` feature is enabled; the hit
/// counts are integers, so the reduction is exact in any order.
pub fn estimate<F>(cfg: &McConfig, predicate: &str, pred: F) -> McEstimate
where
    F: Fn(&ShapeCoords) -> bool + Sync,
{
    #[cfg(feature = "parallel")]
    let hits: u64 = chunk_ranges(cfg)
        .par_iter()
        .map(|&(lo, hi)| count_chunk(cfg.seed, lo, hi, &pred))
        .sum();
    #[cfg(not(feature = "parallel"))]
    let hits: u64 = chunk_ranges(cfg)
        .iter()
        .map(|&(lo, hi)| count_chunk(cfg.seed, lo, hi, &pred))
        .sum();
    finish(hits, cfg, predicate)
}

/// Always-sequential variant, for determinism checks and benchmarks.
pub fn estimate_sequential<F>(cfg: &McConfig, predicate: &str, pred: F) -> McEstimate
where
    F: Fn(&ShapeCoords) -> bool,
{
    let hits: u64 = chunk_ranges(cfg)
        .iter()
        .map(|&(lo, hi)| count_chunk(cfg.seed, lo, hi, &pred))
        .sum();
    finish(hits, cfg, predicate)
}

fn alpha_max_of(s: &ShapeCoords) -> f64 {
    max_angle_from_shape(s)
        .expect("uniformly sampled shapes have defined angles")
        .alpha_max
}

/// alpha_max > pi/2.
pub fn obtuse(s: &ShapeCoords) -> bool {
    alpha_max_of(s) > FRAC_PI_2
}

/// alpha_max > alpha.
pub fn alpha_obtuse(s: &ShapeCoords, alpha: f64) -> bool {
    alpha_max_of(s) > alpha
}

/// alpha_max >= 2pi/3: the Fermat point sits at the obtuse vertex.
pub fn fermat_obtuse(s: &ShapeCoords) -> bool {
    alpha_max_of(s) >= TWO_PI_3
}

/// |alpha_max - pi/2| < eps, a band around the separatrix.
pub fn right_band(s: &ShapeCoords, eps: f64) -> bool {
    (alpha_max_of(s) - FRAC_PI_2).abs() < eps
}

/// Cluster k's apex angle exceeds pi/2.
pub fn cluster_obtuse(s: &ShapeCoords, k: ClusterId) -> bool {
    let m = max_angle_from_shape(s).expect("sampled shapes have defined angles");
    m.alpha_max > FRAC_PI_2 && m.achieving.contains(&k)
}

pub fn predicate_name_alpha(alpha: f64) -> String {
    format!("alpha_obtuse({alpha})")
}
