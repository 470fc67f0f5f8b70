//! Exhaustive application of the injection over `C_r(n)`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Pow};
use serde::Serialize;

use super::injection::{inject_f, DCase};
use crate::enumeration::{count_metric_with, enumerate_cr_with, SearchConfig};
use crate::error::{domain, Error, Result};
use crate::model::{delta, EditSet, Params};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PreimageReport {
    pub r: u32,
    pub n: usize,
    #[serde(serialize_with = "crate::bigfmt::big")]
    pub cr_count: BigUint,
    #[serde(serialize_with = "crate::bigfmt::big")]
    pub m_count: BigUint,
    pub d1: usize,
    pub d2: usize,
    pub d3: usize,
    /// Members of `C_r(n)` that fit no case.
    pub unsupported: usize,
    /// Outputs failing `f(G) ∈ M_r(n) \ C_r(n)`.
    pub postcondition_failures: usize,
    pub distinct_outputs: usize,
    pub max_preimage: usize,
    #[serde(serialize_with = "crate::bigfmt::ratio")]
    pub mean_preimage: Ratio<BigUint>,
    /// `log_r` of the trivial preimage bound `r^(65 r²)`.
    pub preimage_bound_exponent: u64,
    /// Largest `|∪ Δ(f(G), G)|` over an output's `D1` preimages.
    pub max_d1_edit_union: usize,
    /// `C(4 + 8r, 2)`.
    pub d1_edit_bound: usize,
    /// `|C_r(n)| · r^(66r²) <= (r^(66r²) - 1) · |M_r(n)|`, exactly.
    pub final_bound_holds: bool,
}

/// Apply `f` to every member of `C_r(n)` and summarize the preimage structure.
pub fn preimage_analysis(r: u32, n: usize, cfg: &SearchConfig) -> Result<PreimageReport> {
    let params = Params::new(r, n)?;
    if r % 2 == 0 {
        return domain("the injection is defined for odd r only");
    }
    if n < 4 {
        return domain(format!("the injection needs n >= 4, got {n}"));
    }
    let members = enumerate_cr_with(r, n, cfg)?;
    let traces = cfg.exec.map(members.clone(), |g| inject_f(&g));
    let mut counts = [0usize; 3];
    let mut unsupported = 0;
    let mut failures = 0;
    let mut buckets: BTreeMap<Vec<u8>, (usize, EditSet)> = BTreeMap::new();
    for (g, t) in members.iter().zip(traces) {
        match t {
            Ok(t) => {
                let slot = match t.case {
                    DCase::D1 => 0,
                    DCase::D2 => 1,
                    DCase::D3 => 2,
                };
                counts[slot] += 1;
                let entry = buckets
                    .entry(t.output.dist().to_vec())
                    .or_insert_with(|| (0, EditSet::default()));
                entry.0 += 1;
                if t.case == DCase::D1 {
                    entry.1 = entry.1.union(&delta(&t.output, g)?);
                }
            }
            Err(Error::Unsupported(_)) => unsupported += 1,
            Err(Error::Invariant(_)) => failures += 1,
            Err(e) => return Err(e),
        }
    }
    let classified: usize = counts.iter().sum();
    let max_preimage = buckets.values().map(|b| b.0).max().unwrap_or(0);
    let mean_preimage = if buckets.is_empty() {
        Ratio::from_integer(BigUint::default())
    } else {
        Ratio::new(BigUint::from(classified), BigUint::from(buckets.len()))
    };
    let cr_count = BigUint::from(members.len());
    let m_count = count_metric_with(r, n, cfg)?;
    let big_r = BigUint::from(r);
    let power: BigUint = Pow::pow(&big_r, 66 * r * r);
    let final_bound_holds = &cr_count * &power <= (&power - BigUint::one()) * &m_count;
    Ok(PreimageReport {
        r,
        n: params.n(),
        cr_count,
        m_count,
        d1: counts[0],
        d2: counts[1],
        d3: counts[2],
        unsupported,
        postcondition_failures: failures,
        distinct_outputs: buckets.len(),
        max_preimage,
        mean_preimage,
        preimage_bound_exponent: 65 * (r as u64) * (r as u64),
        max_d1_edit_union: buckets.values().map(|b| b.1.len()).max().unwrap_or(0),
        d1_edit_bound: {
            let k = 4 + 8 * r as usize;
            k * (k - 1) / 2
        },
        final_bound_holds,
    })
}
