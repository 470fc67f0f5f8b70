use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::search::{fold_leaves, SearchConfig};
use crate::error::Result;
use crate::exec::Exec;
use crate::model::{pair_count, Color, MetricColoring, Params};
use crate::structure::{hub_class, is_cr_member_raw, nearest_cr_distance_with, HubClass, NearestConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatsMode {
    Exact,
    Sampled { samples: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy)]
pub struct StatsConfig {
    pub mode: StatsMode,
    /// Hub threshold for the `A_r(n, ε)` predicate.
    pub epsilon: Ratio<u64>,
    /// Mean nearest-`C_r` distance is reported only up to this `n` for odd `r`.
    pub nearest_max_n: usize,
    pub search: SearchConfig,
}

impl Default for StatsConfig {
    fn default() -> Self {
        StatsConfig {
            mode: StatsMode::Exact,
            epsilon: Ratio::new(1, 4),
            nearest_max_n: 5,
            search: SearchConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructureStats {
    pub r: u32,
    pub n: usize,
    pub mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// `|M_r(n)|` in exact mode, the number of samples otherwise.
    #[serde(serialize_with = "crate::bigfmt::big")]
    pub population: BigUint,
    #[serde(serialize_with = "crate::bigfmt::big")]
    pub cr_count: BigUint,
    #[serde(serialize_with = "crate::bigfmt::ratio")]
    pub cr_fraction: Ratio<BigUint>,
    /// Pair counts per color `1..=r`, summed over the population.
    #[serde(serialize_with = "crate::bigfmt::big_list")]
    pub distance_histogram: Vec<BigUint>,
    pub epsilon: String,
    #[serde(serialize_with = "crate::bigfmt::ratio")]
    pub a_fraction: Ratio<BigUint>,
    #[serde(serialize_with = "crate::bigfmt::ratio")]
    pub a_prime_fraction: Ratio<BigUint>,
    #[serde(serialize_with = "crate::bigfmt::opt_ratio")]
    pub mean_nearest_distance: Option<Ratio<BigUint>>,
    /// `log_m(r) |M_r(n)| - C(n,2)` (exact mode only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub log_excess: Option<f64>,
}

#[derive(Default)]
struct Acc {
    total: u128,
    cr: u128,
    hist: Vec<u128>,
    a: u128,
    a_prime: u128,
    nearest: u128,
    scratch: Vec<usize>,
}

impl Acc {
    fn new(r: Color) -> Self {
        Acc {
            hist: vec![0; r as usize],
            ..Default::default()
        }
    }

    fn add(&mut self, params: Params, d: &[Color], cfg: &StatsConfig, with_nearest: bool) -> Result<()> {
        self.total += 1;
        if is_cr_member_raw(params.r(), params.n(), d, &mut self.scratch) {
            self.cr += 1;
        }
        for &c in d {
            self.hist[c as usize - 1] += 1;
        }
        let g = MetricColoring::from_raw(params, d.to_vec());
        match hub_class(&g, cfg.epsilon)? {
            HubClass::A => self.a += 1,
            HubClass::APrime => self.a_prime += 1,
            HubClass::Neither => {}
        }
        if with_nearest {
            let near = nearest_cr_distance_with(
                &g,
                &NearestConfig {
                    max_n: cfg.nearest_max_n.max(params.n()),
                    exec: Exec::Serial,
                },
            )?;
            self.nearest += near.distance as u128;
        }
        Ok(())
    }

    fn merge(&mut self, o: Acc) {
        self.total += o.total;
        self.cr += o.cr;
        self.a += o.a;
        self.a_prime += o.a_prime;
        self.nearest += o.nearest;
        for (h, x) in self.hist.iter_mut().zip(o.hist) {
            *h += x;
        }
    }
}

/// Structural profile of `M_r(n)`, exact or from uniform samples.
pub fn structure_stats(r: u32, n: usize, cfg: &StatsConfig) -> Result<StructureStats> {
    let params = Params::new(r, n)?;
    let with_nearest = params.r() % 2 == 0 || n <= cfg.nearest_max_n;
    let mut acc = Acc::new(params.r());
    let seed = match cfg.mode {
        StatsMode::Exact => {
            let shards = fold_leaves(
                params,
                1,
                &cfg.search,
                || (Acc::new(params.r()), None),
                |(acc, err), d, lo, hi| {
                    if err.is_some() {
                        return;
                    }
                    let last = d.len().wrapping_sub(1);
                    for v in lo..=hi {
                        if !d.is_empty() {
                            d[last] = v;
                        }
                        if let Err(e) = acc.add(params, d, cfg, with_nearest) {
                            *err = Some(e);
                            return;
                        }
                        if d.is_empty() {
                            break;
                        }
                    }
                },
            )?;
            for (a, err) in shards {
                if let Some(e) = err {
                    return Err(e);
                }
                acc.merge(a);
            }
            None
        }
        StatsMode::Sampled { samples, seed } => {
            let batch = super::sample::sample_uniform(r, n, samples, seed)?;
            for g in &batch.samples {
                acc.add(params, g.dist(), cfg, with_nearest)?;
            }
            Some(seed)
        }
    };
    let total = BigUint::from(acc.total);
    let frac = |x: u128| {
        if acc.total == 0 {
            Ratio::from_integer(BigUint::zero())
        } else {
            Ratio::new(BigUint::from(x), total.clone())
        }
    };
    let log_excess = matches!(cfg.mode, StatsMode::Exact).then(|| {
        let m = params.m() as f64;
        total.to_f64().unwrap_or(f64::INFINITY).ln() / m.ln() - pair_count(n) as f64
    });
    Ok(StructureStats {
        r,
        n,
        mode: if seed.is_some() { "sampled" } else { "exact" },
        seed,
        cr_count: BigUint::from(acc.cr),
        cr_fraction: frac(acc.cr),
        distance_histogram: acc.hist.iter().map(|&h| BigUint::from(h)).collect(),
        epsilon: cfg.epsilon.to_string(),
        a_fraction: frac(acc.a),
        a_prime_fraction: frac(acc.a_prime),
        mean_nearest_distance: with_nearest.then(|| frac(acc.nearest)),
        log_excess,
        population: total,
    })
}
