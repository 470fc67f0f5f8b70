use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{capacity, Result};
use crate::model::{find_violating_triangle, pair_count, Color, MetricColoring, Params};

/// Sampler generator: ChaCha8 from `rand_chacha` 0.3, seeded with
/// `seed_from_u64`, colors drawn with `gen_range(1..=r)` one pair at a time
/// in row-major order. Changing any of this changes every batch.
pub type SamplerRng = ChaCha8Rng;

#[derive(Debug, Clone, Copy)]
pub struct SampleConfig {
    /// Minimum estimated acceptance rate `(m(r)/r)^C(n,2)`.
    pub acceptance_floor: f64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig { acceptance_floor: 1e-6 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleBatch {
    pub seed: u64,
    pub r: u32,
    pub n: usize,
    pub attempts: u64,
    pub samples: Vec<MetricColoring>,
}

pub fn sample_uniform(r: u32, n: usize, count: usize, seed: u64) -> Result<SampleBatch> {
    sample_uniform_with(r, n, count, seed, &SampleConfig::default())
}

/// Uniform samples from `M_r(n)` by rejection from `[r]^C(n,2)`.
pub fn sample_uniform_with(r: u32, n: usize, count: usize, seed: u64, cfg: &SampleConfig) -> Result<SampleBatch> {
    let params = Params::new(r, n)?;
    let rate = (params.m() as f64 / r as f64).powi(pair_count(n) as i32);
    if rate < cfg.acceptance_floor {
        return capacity(format!(
            "estimated acceptance rate {rate:.3e} for r = {r}, n = {n} is below the floor {:.3e}; use exact enumeration",
            cfg.acceptance_floor
        ));
    }
    let mut rng = SamplerRng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(count);
    let mut attempts = 0u64;
    while samples.len() < count {
        attempts += 1;
        let g = draw(&mut rng, params, 1);
        if find_violating_triangle(&g).is_none() {
            samples.push(g);
        }
    }
    Ok(SampleBatch {
        seed,
        r,
        n,
        attempts,
        samples,
    })
}

/// One coloring with i.i.d. uniform colors in `[floor, r]`.
pub(crate) fn draw(rng: &mut SamplerRng, params: Params, floor: Color) -> MetricColoring {
    let d = (0..params.pairs()).map(|_| rng.gen_range(floor..=params.r())).collect();
    MetricColoring::from_raw(params, d)
}

/// Uniform draw from `C_r(n)` for even `r`: i.i.d. colors in `[r/2, r]`.
pub(crate) fn draw_even_cr(rng: &mut SamplerRng, params: Params) -> MetricColoring {
    debug_assert!(params.r() % 2 == 0);
    draw(rng, params, params.r() / 2)
}
