//! Free amalgamation of two colorings over a shared set.
//!
//! The result lives on `A`'s vertices `0..|A|` followed by `B`'s non-shared
//! vertices in increasing order.

use serde::Serialize;

use crate::enumeration::enumerate_metric;
use crate::error::{domain, Result};
use crate::exec::Exec;
use crate::model::{Color, MetricColoring, Params};
use crate::one_based;
use crate::verdict::{Counterexample, LemmaVerdict};

/// How a cross pair `(x, y)`, `x` only in `A` and `y` only in `B`, is colored
/// in the `M_r` amalgam.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MrRule {
    /// `min_c min(r, d_A(x, c) + d_B(c, y))`: the shortest-path completion.
    #[default]
    Min,
    /// `max_c min(r, d_A(x, c) + d_B(c, y))`.
    Max,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Amalgam {
    pub result: MetricColoring,
    /// Image of each vertex of `A` in the result.
    #[serde(serialize_with = "one_based::vertices")]
    pub embed_a: Vec<usize>,
    /// Image of each vertex of `B` in the result.
    #[serde(serialize_with = "one_based::vertices")]
    pub embed_b: Vec<usize>,
}

impl Amalgam {
    /// Both factors embed isometrically.
    pub fn embeddings_are_isometric(&self, a: &MetricColoring, b: &MetricColoring) -> bool {
        let iso = |g: &MetricColoring, e: &[usize]| {
            crate::model::pairs(g.n()).all(|(i, j)| self.result.get(e[i], e[j]) == g.get(i, j))
        };
        iso(a, &self.embed_a) && iso(b, &self.embed_b)
    }
}

/// Validate `shared` as a partial bijection `A -> B` on which the colorings agree,
/// and lay out the union.
fn layout(a: &MetricColoring, b: &MetricColoring, shared: &[(usize, usize)]) -> Result<(Params, Vec<usize>, Vec<bool>)> {
    if a.r() != b.r() {
        return domain(format!("factors have different r: {} and {}", a.r(), b.r()));
    }
    let mut a_used = vec![false; a.n()];
    let mut b_to_a: Vec<Option<usize>> = vec![None; b.n()];
    for &(x, y) in shared {
        if x >= a.n() || y >= b.n() {
            return domain(format!("shared pair ({}, {}) out of range", x + 1, y + 1));
        }
        if a_used[x] || b_to_a[y].is_some() {
            return domain("shared correspondence is not injective");
        }
        a_used[x] = true;
        b_to_a[y] = Some(x);
    }
    for (i, &(x1, y1)) in shared.iter().enumerate() {
        for &(x2, y2) in &shared[i + 1..] {
            if a.get(x1, x2) != b.get(y1, y2) {
                return domain(format!(
                    "A and B disagree on the shared pair ({}, {})",
                    x1 + 1,
                    x2 + 1
                ));
            }
        }
    }
    let mut embed_b = Vec::with_capacity(b.n());
    let mut next = a.n();
    let mut b_only = vec![false; b.n()];
    for y in 0..b.n() {
        match b_to_a[y] {
            Some(x) => embed_b.push(x),
            None => {
                embed_b.push(next);
                b_only[y] = true;
                next += 1;
            }
        }
    }
    Ok((Params::new(a.r() as u32, next)?, embed_b, b_only))
}

fn build(
    a: &MetricColoring,
    b: &MetricColoring,
    params: Params,
    embed_b: Vec<usize>,
    b_only: &[bool],
    mut cross: impl FnMut(usize, usize) -> Color,
) -> Amalgam {
    let n = params.n();
    let mut d = vec![0 as Color; params.pairs()];
    let mut set = |i: usize, j: usize, c: Color| d[crate::model::pair_index(n, i, j)] = c;
    for (i, j) in crate::model::pairs(a.n()) {
        set(i, j, a.get(i, j));
    }
    for (i, j) in crate::model::pairs(b.n()) {
        if b_only[i] || b_only[j] {
            set(embed_b[i], embed_b[j], b.get(i, j));
        }
    }
    for x in 0..a.n() {
        for y in (0..b.n()).filter(|&y| b_only[y]) {
            if embed_b.contains(&x) {
                continue;
            }
            set(x, embed_b[y], cross(x, y));
        }
    }
    Amalgam {
        result: MetricColoring::from_raw(params, d),
        embed_a: (0..a.n()).collect(),
        embed_b,
    }
}

/// Amalgam in `C_r` for even `r`: cross pairs get color `r`.
pub fn amalgamate_cr(a: &MetricColoring, b: &MetricColoring, shared: &[(usize, usize)]) -> Result<Amalgam> {
    if a.r() % 2 != 0 {
        return domain("the C_r amalgam is defined for even r");
    }
    let half = a.r() / 2;
    if a.dist().iter().chain(b.dist()).any(|&c| c < half) {
        return domain(format!("a factor has a distance below r/2 = {half}"));
    }
    let (params, embed_b, b_only) = layout(a, b, shared)?;
    let r = a.r();
    Ok(build(a, b, params, embed_b, &b_only, |_, _| r))
}

/// Amalgam in `M_r` with truncated addition through the shared set.
pub fn amalgamate_mr(a: &MetricColoring, b: &MetricColoring, shared: &[(usize, usize)]) -> Result<Amalgam> {
    amalgamate_mr_with(a, b, shared, MrRule::Min)
}

pub fn amalgamate_mr_with(a: &MetricColoring, b: &MetricColoring, shared: &[(usize, usize)], rule: MrRule) -> Result<Amalgam> {
    if shared.is_empty() {
        return domain("the M_r amalgam needs a nonempty shared set");
    }
    if !a.is_metric() || !b.is_metric() {
        return domain("both factors must be metric");
    }
    let (params, embed_b, b_only) = layout(a, b, shared)?;
    let r = a.r();
    let out = build(a, b, params, embed_b, &b_only, |x, y| {
        let via = shared.iter().map(|&(ca, cb)| r.min(a.get(x, ca) + b.get(cb, y)));
        match rule {
            MrRule::Min => via.min(),
            MrRule::Max => via.max(),
        }
        .expect("shared set is nonempty")
    });
    debug_assert!(rule == MrRule::Max || out.result.is_metric());
    Ok(out)
}

/// Every injective partial map `0..a -> 0..b` as `(a_vertex, b_vertex)` pairs.
fn correspondences(a: usize, b: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(x: usize, a: usize, used: &mut [bool], cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if x == a {
            out.push(cur.clone());
            return;
        }
        rec(x + 1, a, used, cur, out);
        for y in 0..used.len() {
            if !used[y] {
                used[y] = true;
                cur.push((x, y));
                rec(x + 1, a, used, cur, out);
                cur.pop();
                used[y] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(0, a, &mut vec![false; b], &mut Vec::new(), &mut out);
    out
}

pub const MAX_AMALGAM_R: u32 = 6;
pub const MAX_AMALGAM_FACTOR: usize = 3;

/// Exhaustive soundness check: every `M_r` amalgam of factors on at most
/// `max_factor` vertices, over every nonempty shared set on which they agree,
/// is metric and embeds both factors.
pub fn check_amalgam_mr(r: u32, max_factor: usize, rule: MrRule, exec: Exec) -> Result<LemmaVerdict> {
    if !(1..=MAX_AMALGAM_R).contains(&r) {
        return domain(format!("amalgam check supports 1 <= r <= {MAX_AMALGAM_R}, got {r}"));
    }
    if !(1..=MAX_AMALGAM_FACTOR).contains(&max_factor) {
        return domain(format!("amalgam check supports factors of 1..={MAX_AMALGAM_FACTOR} vertices, got {max_factor}"));
    }
    let mut factors = Vec::new();
    for n in 1..=max_factor {
        factors.extend(enumerate_metric(r, n)?);
    }
    let shards = exec.map(factors.clone(), |a| {
        let mut checked = 0u64;
        for b in &factors {
            for s in correspondences(a.n(), b.n()) {
                if s.is_empty() {
                    continue;
                }
                let Ok(out) = amalgamate_mr_with(&a, b, &s, rule) else {
                    // A and B disagree on the shared set
                    continue;
                };
                checked += 1;
                if !out.result.is_metric() || !out.embeddings_are_isometric(&a, b) {
                    let cx = Counterexample::Amalgam { a: a.clone(), b: b.clone(), shared: s, result: out.result };
                    return (checked, Some(cx));
                }
            }
        }
        (checked, None)
    });
    Ok(LemmaVerdict::merge(
        "amalgam-mr",
        format!("M_{r} factors on at most {max_factor} vertices, nonempty shared sets"),
        shards,
    ))
}
