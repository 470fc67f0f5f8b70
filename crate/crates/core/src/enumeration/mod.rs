//! Exact counting, streaming enumeration, sampling and statistics for
//! `M_r(n)` and `C_r(n)`.

mod matching;
mod sample;
pub mod search;
mod stats;

use std::time::Instant;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::Pow;
use serde::Serialize;

use crate::error::Result;
use crate::model::{pair_count, MetricColoring, Params};
use crate::structure::is_cr_member_raw;

pub use matching::{a_s_members, matching_family_count, matchings, MatchingCount};
pub(crate) use sample::draw_even_cr;
pub use sample::{sample_uniform, sample_uniform_with, SampleBatch, SampleConfig, SamplerRng};
pub use search::{brute_force_count, MetricStream, SearchConfig};
pub use stats::{structure_stats, StatsConfig, StatsMode, StructureStats};

/// `|M_r(n)|`.
pub fn count_metric(r: u32, n: usize) -> Result<BigUint> {
    count_metric_with(r, n, &SearchConfig::default())
}

pub fn count_metric_with(r: u32, n: usize, cfg: &SearchConfig) -> Result<BigUint> {
    let params = Params::new(r, n)?;
    search::count_with_floor(params, 1, cfg).map(BigUint::from)
}

/// `m(r)^C(n,2)`, the trivial lower bound and the exact size of `C_r(n)` for even `r`.
pub fn lower_bound(r: u32, n: usize) -> Result<BigUint> {
    let params = Params::new(r, n)?;
    Ok(Pow::pow(BigUint::from(params.m() as u32), pair_count(n)))
}

/// `|C_r(n)|`: closed form for even `r`, membership-filtered search for odd `r`.
pub fn count_cr(r: u32, n: usize) -> Result<BigUint> {
    count_cr_with(r, n, &SearchConfig::default())
}

pub fn count_cr_with(r: u32, n: usize, cfg: &SearchConfig) -> Result<BigUint> {
    let params = Params::new(r, n)?;
    if params.r() % 2 == 0 {
        return lower_bound(r, n);
    }
    count_cr_enumerated(params, cfg).map(BigUint::from)
}

/// Count `C_r(n)` by enumerating metric colorings above the `C_r` floor and
/// filtering by membership. Valid for both parities.
pub(crate) fn count_cr_enumerated(params: Params, cfg: &SearchConfig) -> Result<u128> {
    let r = params.r();
    let n = params.n();
    let floor = if r % 2 == 0 { r / 2 } else { (r - 1) / 2 }.max(1);
    let shards = search::fold_leaves(
        params,
        floor,
        cfg,
        || (0u128, Vec::new()),
        |(count, scratch), d, lo, hi| {
            if d.is_empty() {
                *count += 1;
                return;
            }
            let last = d.len() - 1;
            for v in lo..=hi {
                d[last] = v;
                if is_cr_member_raw(r, n, d, scratch) {
                    *count += 1;
                }
            }
        },
    )?;
    Ok(shards.into_iter().map(|(c, _)| c).sum())
}

/// Every member of `C_r(n)` in lexicographic order of the distance vector.
pub fn enumerate_cr(r: u32, n: usize) -> Result<Vec<MetricColoring>> {
    enumerate_cr_with(r, n, &SearchConfig::default())
}

pub fn enumerate_cr_with(r: u32, n: usize, cfg: &SearchConfig) -> Result<Vec<MetricColoring>> {
    let params = Params::new(r, n)?;
    let rc = params.r();
    let floor = if rc % 2 == 0 { rc / 2 } else { (rc - 1) / 2 }.max(1);
    let shards = search::fold_leaves(
        params,
        floor,
        cfg,
        || (Vec::new(), Vec::new()),
        |(out, scratch), d, lo, hi| {
            if d.is_empty() {
                out.push(MetricColoring::from_raw(params, Vec::new()));
                return;
            }
            let last = d.len() - 1;
            for v in lo..=hi {
                d[last] = v;
                if is_cr_member_raw(rc, n, d, scratch) {
                    out.push(MetricColoring::from_raw(params, d.to_vec()));
                }
            }
        },
    )?;
    Ok(shards.into_iter().flat_map(|(v, _)| v).collect())
}

/// Streams `M_r(n)` in lexicographic order of the distance vector.
pub fn enumerate_metric(r: u32, n: usize) -> Result<impl Iterator<Item = MetricColoring>> {
    let params = Params::new(r, n)?;
    Ok(MetricStream::new(params).map(move |d| MetricColoring::from_raw(params, d)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub r: u32,
    pub n: usize,
    #[serde(serialize_with = "crate::bigfmt::big")]
    pub m_count: BigUint,
    #[serde(serialize_with = "crate::bigfmt::big")]
    pub c_count: BigUint,
    #[serde(serialize_with = "crate::bigfmt::big")]
    pub lower_bound: BigUint,
    #[serde(serialize_with = "crate::bigfmt::ratio")]
    pub ratio_c_over_m: Ratio<BigUint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CountReport {
    pub const CSV_HEADER: [&'static str; 6] = ["r", "n", "m_count", "c_count", "ratio", "elapsed_ms"];

    pub fn csv_row(&self) -> [String; 6] {
        [
            self.r.to_string(),
            self.n.to_string(),
            self.m_count.to_string(),
            self.c_count.to_string(),
            crate::bigfmt::to_decimal(&self.ratio_c_over_m, 12),
            self.elapsed_ms.map(|e| e.to_string()).unwrap_or_default(),
        ]
    }
}

pub fn count_report(r: u32, n: usize, cfg: &SearchConfig) -> Result<CountReport> {
    let start = Instant::now();
    let m_count = count_metric_with(r, n, cfg)?;
    let c_count = count_cr_with(r, n, cfg)?;
    let lower_bound = lower_bound(r, n)?;
    Ok(CountReport {
        r,
        n,
        ratio_c_over_m: Ratio::new(c_count.clone(), m_count.clone()),
        m_count,
        c_count,
        lower_bound,
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
    })
}
