//! Extension axioms `σ_{A'/A}` and their empirical probabilities.

use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::enumeration::{sample_uniform_with, SampleConfig};
use crate::error::{domain, Result};
use crate::exec::Exec;
use crate::model::{MetricColoring, Params};

/// Every ordered copy of `base` extends by one vertex to a copy of `extended`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "AxiomRepr")]
pub struct ExtensionAxiom {
    base: MetricColoring,
    extended: MetricColoring,
}

#[derive(Deserialize)]
struct AxiomRepr {
    base: MetricColoring,
    extended: MetricColoring,
}

impl TryFrom<AxiomRepr> for ExtensionAxiom {
    type Error = crate::Error;

    fn try_from(a: AxiomRepr) -> Result<Self> {
        ExtensionAxiom::new(a.base, a.extended)
    }
}

impl ExtensionAxiom {
    pub fn new(base: MetricColoring, extended: MetricColoring) -> Result<Self> {
        let k = base.n();
        if k < 2 {
            return domain(format!("extension axioms need k >= 2, got {k}"));
        }
        if extended.n() != k + 1 || extended.r() != base.r() {
            return domain("the extension must add exactly one vertex with the same r");
        }
        let prefix: Vec<usize> = (0..k).collect();
        if extended.induced(&prefix)? != base {
            return domain("the extension does not restrict to the base on its first k vertices");
        }
        if !extended.is_metric() {
            return domain("the extension is not metric");
        }
        Ok(ExtensionAxiom { base, extended })
    }

    /// `A`: `d(1, 2) = 3`; `A'`: the new vertex at distance 2 from both (r = 4).
    pub fn three_to_two_two() -> Self {
        let base = MetricColoring::from_parts(4, 2, vec![3]).unwrap();
        let extended = MetricColoring::from_parts(4, 3, vec![3, 2, 2]).unwrap();
        ExtensionAxiom::new(base, extended).unwrap()
    }

    pub fn base(&self) -> &MetricColoring {
        &self.base
    }

    pub fn extended(&self) -> &MetricColoring {
        &self.extended
    }

    pub fn k(&self) -> usize {
        self.base.n()
    }

    pub fn r(&self) -> u32 {
        self.base.r() as u32
    }
}

/// First ordered tuple (lexicographic) realizing `A` with no extension, if any.
pub fn find_extension_failure(ax: &ExtensionAxiom, g: &MetricColoring) -> Option<Vec<usize>> {
    let k = ax.k();
    if g.n() < k {
        return None;
    }
    let mut tuple = Vec::with_capacity(k);
    let mut used = vec![false; g.n()];
    fn rec(ax: &ExtensionAxiom, g: &MetricColoring, tuple: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let k = ax.k();
        if tuple.len() == k {
            let ext = ax.extended();
            let found = (0..g.n())
                .filter(|&y| !used[y])
                .any(|y| (0..k).all(|i| g.get(tuple[i], y) == ext.get(i, k)));
            return !found;
        }
        let pos = tuple.len();
        for v in 0..g.n() {
            if used[v] || (0..pos).any(|i| g.get(tuple[i], v) != ax.base().get(i, pos)) {
                continue;
            }
            used[v] = true;
            tuple.push(v);
            if rec(ax, g, tuple, used) {
                return true;
            }
            tuple.pop();
            used[v] = false;
        }
        false
    }
    rec(ax, g, &mut tuple, &mut used).then_some(tuple)
}

/// Whether `g` satisfies `σ_{A'/A}`; vacuously true when `g` has fewer than `k` vertices.
pub fn eval_extension_axiom(ax: &ExtensionAxiom, g: &MetricColoring) -> Result<bool> {
    if g.r() != ax.base().r() {
        return domain(format!("axiom has r = {}, coloring has r = {}", ax.r(), g.r()));
    }
    Ok(find_extension_failure(ax, g).is_none())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Uniform on `M_r(n)` via rejection sampling.
    Metric,
    /// Uniform on `C_r(n)` for even `r`: independent colors in `[r/2, r]`.
    Cr,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MuPoint {
    pub n: usize,
    pub samples: usize,
    pub successes: usize,
    pub estimate: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MuCurve {
    pub family: Family,
    pub seed: u64,
    pub points: Vec<MuPoint>,
}

impl MuCurve {
    pub const CSV_HEADER: [&'static str; 5] = ["n", "estimate", "ci_low", "ci_high", "samples"];

    pub fn csv_rows(&self) -> Vec<[String; 5]> {
        self.points
            .iter()
            .map(|p| {
                [
                    p.n.to_string(),
                    format!("{:.6}", p.estimate),
                    format!("{:.6}", p.ci_low),
                    format!("{:.6}", p.ci_high),
                    p.samples.to_string(),
                ]
            })
            .collect()
    }
}

const Z95: f64 = 1.959964;

/// Wilson score interval at 95%.
pub fn wilson_interval(successes: usize, total: usize) -> (f64, f64) {
    if total == 0 {
        return (0.0, 1.0);
    }
    let n = total as f64;
    let p = successes as f64 / n;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = Z95 / denom * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// Fraction of sampled structures satisfying the axiom, for each `n`.
///
/// Each `n` draws from its own generator derived from `(seed, n)`, so the
/// curve does not depend on the execution mode.
pub fn empirical_mu(
    ax: &ExtensionAxiom,
    family: Family,
    ns: &[usize],
    samples: usize,
    seed: u64,
    exec: Exec,
) -> Result<MuCurve> {
    let r = ax.r();
    if family == Family::Cr && r % 2 != 0 {
        return domain("direct sampling of C_r(n) is available for even r only");
    }
    for &n in ns {
        Params::new(r, n)?;
    }
    let results = exec.map(ns.to_vec(), |n| -> Result<MuPoint> {
        let params = Params::new(r, n)?;
        let graphs: Vec<MetricColoring> = match family {
            Family::Cr => {
                let mut rng = crate::enumeration::SamplerRng::seed_from_u64(seed);
                rng.set_stream(n as u64);
                (0..samples)
                    .map(|_| crate::enumeration::draw_even_cr(&mut rng, params))
                    .collect()
            }
            Family::Metric => {
                let per_n = seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
                sample_uniform_with(r, n, samples, per_n, &SampleConfig::default())?.samples
            }
        };
        let successes = graphs.iter().filter(|g| find_extension_failure(ax, g).is_none()).count();
        let (ci_low, ci_high) = wilson_interval(successes, samples);
        Ok(MuPoint {
            n,
            samples,
            successes,
            estimate: if samples == 0 { 0.0 } else { successes as f64 / samples as f64 },
            ci_low,
            ci_high,
        })
    });
    Ok(MuCurve {
        family,
        seed,
        points: results.into_iter().collect::<Result<_>>()?,
    })
}
