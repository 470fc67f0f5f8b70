//! The weight `W(R)` of a metric `r`-graph, enumeration of small metric
//! `r`-graphs, and exhaustive checks of the color-set lemmas.
//!
//! All arithmetic here is exact (big integers); rational bounds are cleared
//! of denominators before comparing.

use num_bigint::BigUint;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::error::{capacity, domain, Result};
use crate::exec::Exec;
use crate::model::{pair_count, pair_index, pairs, Color, ColorSet, ColorSetGraph, Params, MAX_SET_COLORS};
use crate::partitions::for_each_rgs;
use crate::verdict::{Counterexample, LemmaVerdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightProfile {
    #[serde(serialize_with = "crate::bigfmt::big")]
    pub weight: BigUint,
    /// Pairs with `f > m(r)`.
    pub a_count: usize,
    /// Pairs with `f < m(r)`.
    pub b_count: usize,
    pub f_values: Vec<u32>,
}

pub fn f_value(set: ColorSet) -> u32 {
    (set.len() as u32).max(1)
}

pub fn weight_profile(g: &ColorSetGraph) -> WeightProfile {
    let m = g.params().m() as u32;
    let f_values: Vec<u32> = g.colors().iter().map(|&c| f_value(c)).collect();
    let weight = f_values.iter().fold(BigUint::one(), |acc, &f| acc * f);
    WeightProfile {
        weight,
        a_count: f_values.iter().filter(|&&f| f > m).count(),
        b_count: f_values.iter().filter(|&&f| f < m).count(),
        f_values,
    }
}

/// Limit on `r * C(t, 2)`, the number of free bits in an exhaustive `r`-graph search.
#[derive(Debug, Clone, Copy)]
pub struct EnumBudget {
    pub max_bits: usize,
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget { max_bits: 24 }
    }
}

fn check_budget(r: u32, t: usize, budget: EnumBudget) -> Result<Params> {
    if t < 2 {
        return domain(format!("metric r-graph enumeration needs t >= 2, got {t}"));
    }
    if r > MAX_SET_COLORS as u32 {
        return domain(format!("color sets support r <= {MAX_SET_COLORS}"));
    }
    let bits = r as usize * pair_count(t);
    if bits > budget.max_bits {
        return capacity(format!(
            "r * C(t, 2) = {bits} exceeds the enumeration budget of {} bits",
            budget.max_bits
        ));
    }
    Params::new(r, t)
}

/// Streams every metric `r`-graph on `[t]` (no choice of colors forms a
/// violating triangle), in lexicographic order of the bitmask vector.
pub struct MetricRGraphs {
    params: Params,
    /// Triangles closed by each pair: the two earlier pairs `(z, x), (z, y)`.
    closers: Vec<Vec<(usize, usize)>>,
    colors: Vec<ColorSet>,
    allowed: Vec<ColorSet>,
    fixed: usize,
    depth: usize,
    started: bool,
    done: bool,
}

impl MetricRGraphs {
    fn new(params: Params, prefix: &[ColorSet]) -> Self {
        let n = params.n();
        let closers = pairs(n)
            .map(|(x, y)| (0..x).map(|z| (pair_index(n, z, x), pair_index(n, z, y))).collect())
            .collect();
        let mut colors = vec![ColorSet::EMPTY; params.pairs()];
        colors[..prefix.len()].copy_from_slice(prefix);
        MetricRGraphs {
            params,
            closers,
            colors,
            allowed: vec![ColorSet::EMPTY; params.pairs()],
            fixed: prefix.len(),
            depth: prefix.len(),
            started: false,
            done: false,
        }
    }

    fn window(&self, p: usize) -> ColorSet {
        let r = self.params.r();
        self.closers[p].iter().fold(ColorSet::full(r), |acc, &(a, b)| {
            acc.intersect(self.colors[a].triangle_window(self.colors[b], r))
        })
    }

    /// Advance to the next complete assignment; false when exhausted.
    fn advance(&mut self) -> bool {
        let total = self.params.pairs();
        if !self.started {
            self.started = true;
            // a fixed prefix must itself be consistent
            if (0..self.fixed).any(|p| !self.colors[p].is_subset(self.window(p))) {
                return false;
            }
            if total == self.fixed {
                return true;
            }
            self.depth = self.fixed;
            self.allowed[self.depth] = self.window(self.depth);
            self.colors[self.depth] = ColorSet::EMPTY;
        } else {
            loop {
                if self.depth == self.fixed || total == self.fixed {
                    return false;
                }
                let p = self.depth - 1;
                let (cur, mask) = (self.colors[p].bits(), self.allowed[p].bits());
                if cur != mask {
                    self.colors[p] = ColorSet::from_bits(((cur | !mask).wrapping_add(1)) & mask);
                    break;
                }
                self.depth -= 1;
            }
            self.depth -= 1;
        }
        // descend, always taking the smallest (empty) subset
        self.depth += 1;
        while self.depth < total {
            self.allowed[self.depth] = self.window(self.depth);
            self.colors[self.depth] = ColorSet::EMPTY;
            self.depth += 1;
        }
        true
    }
}

impl Iterator for MetricRGraphs {
    type Item = ColorSetGraph;

    fn next(&mut self) -> Option<ColorSetGraph> {
        if self.done {
            return None;
        }
        if self.advance() {
            Some(ColorSetGraph::from_raw(self.params, self.colors.clone()))
        } else {
            self.done = true;
            None
        }
    }
}

pub fn enumerate_metric_rgraphs(r: u32, t: usize) -> Result<MetricRGraphs> {
    enumerate_metric_rgraphs_with(r, t, EnumBudget::default())
}

pub fn enumerate_metric_rgraphs_with(r: u32, t: usize, budget: EnumBudget) -> Result<MetricRGraphs> {
    let params = check_budget(r, t, budget)?;
    Ok(MetricRGraphs::new(params, &[]))
}

/// Shards of the search: one per color set of the first pair.
fn shards(params: Params) -> Vec<ColorSet> {
    ColorSet::full(params.r()).subsets().collect()
}

fn for_each_in_shard(params: Params, first: ColorSet) -> MetricRGraphs {
    MetricRGraphs::new(params, &[first])
}

/// `W(R) <= m^(C(t,2)+t+5) * ((m²-1)/m²)^a_R` for every metric `r`-graph on `[t]`.
pub fn check_weight_bound(r: u32, t: usize) -> Result<LemmaVerdict> {
    check_weight_bound_with(r, t, EnumBudget::default(), Exec::default())
}

pub fn weight_bound_holds(g: &ColorSetGraph) -> bool {
    let t = g.t() as u32;
    let m = BigUint::from(g.params().m() as u32);
    let prof = weight_profile(g);
    let a = prof.a_count as u32;
    let exp = t * (t - 1) / 2 + t + 5;
    let m2 = &m * &m;
    let lhs = prof.weight * Pow::pow(&m2, a);
    let rhs = Pow::pow(&m, exp) * Pow::pow(&(m2 - 1u32), a);
    lhs <= rhs
}

pub fn check_weight_bound_with(r: u32, t: usize, budget: EnumBudget, exec: Exec) -> Result<LemmaVerdict> {
    if t < 3 {
        return domain(format!("the weight bound is stated for t >= 3, got {t}"));
    }
    let params = check_budget(r, t, budget)?;
    let results = exec.map(shards(params), |first| {
        let mut checked = 0u64;
        for g in for_each_in_shard(params, first) {
            checked += 1;
            if !weight_bound_holds(&g) {
                return (checked, Some(g));
            }
        }
        (checked, None)
    });
    let shards = results
        .into_iter()
        .map(|(c, g)| {
            (
                c,
                g.map(|graph| {
                    assert!(graph.is_metric() && !weight_bound_holds(&graph));
                    Counterexample::RGraph {
                        graph,
                        labeling: None,
                    }
                }),
            )
        })
        .collect();
    Ok(LemmaVerdict::merge(
        "weight-bound",
        format!("all metric {r}-graphs on {t} vertices"),
        shards,
    ))
}

fn has_violating_triple(a: ColorSet, b: ColorSet, c: ColorSet, r: Color) -> bool {
    !c.is_subset(a.triangle_window(b, r))
}

/// Direct triple loop, used to re-verify counterexamples independently of the window calculus.
fn has_violating_triple_brute(a: ColorSet, b: ColorSet, c: ColorSet) -> bool {
    a.iter().any(|x| {
        b.iter().any(|y| {
            c.iter()
                .any(|z| crate::model::is_violating_triple(x as u32, y as u32, z as u32))
        })
    })
}

const MAX_SUBSET_R: u32 = 8;

fn check_subset_r(r: u32, limit: u32) -> Result<Color> {
    if r < 3 {
        return domain(format!("r must be at least 3, got {r}"));
    }
    if r > limit {
        return capacity(format!("exhaustive subset-triple search supports r <= {limit}, got {r}"));
    }
    Ok(r as Color)
}

/// Do `(A, B, C)` meet the hypotheses of the size lemma?
pub fn size_lemma_hypotheses(r: Color, a: ColorSet, b: ColorSet, c: ColorSet) -> bool {
    let m = crate::model::m(r) as i64;
    let (la, lb, lc) = (a.len() as i64, b.len() as i64, c.len() as i64);
    if lc == 0 || !(la >= lb && lb >= lc && la > m && lb >= m) {
        return false;
    }
    let (x, y) = (la - m, lb - m);
    let bonus = if r % 2 == 1 { 2 } else { 0 };
    lc >= (m - x - y + bonus).max(1)
}

/// Every `(A, B, C)` meeting the size hypotheses contains a violating triple.
pub fn check_size_lemma(r: u32) -> Result<LemmaVerdict> {
    check_size_lemma_with(r, MAX_SUBSET_R, Exec::default())
}

pub fn check_size_lemma_with(r: u32, limit: u32, exec: Exec) -> Result<LemmaVerdict> {
    let r = check_subset_r(r, limit)?;
    let m = crate::model::m(r) as usize;
    let sets: Vec<ColorSet> = ColorSet::full(r).subsets().filter(|s| !s.is_empty()).collect();
    let big: Vec<ColorSet> = sets.iter().copied().filter(|a| a.len() > m).collect();
    let results = exec.map(big, |a| {
        let mut checked = 0u64;
        for &b in sets.iter().filter(|b| b.len() >= m && b.len() <= a.len()) {
            for &c in &sets {
                if !size_lemma_hypotheses(r, a, b, c) {
                    continue;
                }
                checked += 1;
                if !has_violating_triple(a, b, c, r) {
                    return (checked, Some((a, b, c)));
                }
            }
        }
        (checked, None)
    });
    let shards = results
        .into_iter()
        .map(|(n, cx)| {
            (
                n,
                cx.map(|(a, b, c)| {
                    assert!(size_lemma_hypotheses(r, a, b, c) && !has_violating_triple_brute(a, b, c));
                    Counterexample::SubsetTriple { a, b, c }
                }),
            )
        })
        .collect();
    Ok(LemmaVerdict::merge(
        "size-lemma",
        format!("subset triples of [{r}] meeting the size hypotheses"),
        shards,
    ))
}

/// The shapes allowed for three metric-compatible color sets of size `m(r)`.
pub fn triangle_classification_holds(r: Color, a: ColorSet, b: ColorSet, c: ColorSet) -> bool {
    let m = crate::model::m(r) as u32;
    let ri = r as u32;
    if r % 2 == 0 {
        let target = ColorSet::interval(m - 1, ri, r);
        return a == target && b == target && c == target;
    }
    let low = ColorSet::interval(m - 1, ri - 1, r);
    let high = ColorSet::interval(m, ri, r);
    let wide = ColorSet::interval(m - 1, ri, r);
    if a == low && b == low && c == low {
        return true;
    }
    // case (b): the odd one out may be any of the three
    [(a, b, c), (a, c, b), (b, c, a)]
        .iter()
        .any(|&(d, f, e)| d == high && f == high && e.is_subset(wide))
}

pub fn check_triangle_classification(r: u32) -> Result<LemmaVerdict> {
    check_triangle_classification_with(r, MAX_SUBSET_R, Exec::default())
}

pub fn check_triangle_classification_with(r: u32, limit: u32, exec: Exec) -> Result<LemmaVerdict> {
    let r = check_subset_r(r, limit)?;
    let m = crate::model::m(r) as usize;
    let sets: Vec<ColorSet> = ColorSet::full(r).subsets().filter(|s| s.len() == m).collect();
    let results = exec.map(sets.clone(), |a| {
        let mut checked = 0u64;
        for &b in &sets {
            let window = a.triangle_window(b, r);
            for &c in &sets {
                if !c.is_subset(window) {
                    continue;
                }
                checked += 1;
                if !triangle_classification_holds(r, a, b, c) {
                    return (checked, Some((a, b, c)));
                }
            }
        }
        (checked, None)
    });
    let shards = results
        .into_iter()
        .map(|(n, cx)| {
            (
                n,
                cx.map(|(a, b, c)| {
                    assert!(!has_violating_triple_brute(a, b, c) && !triangle_classification_holds(r, a, b, c));
                    Counterexample::SubsetTriple { a, b, c }
                }),
            )
        })
        .collect();
    Ok(LemmaVerdict::merge(
        "triangle-class",
        format!("triples of {m}-subsets of [{r}] without a violating triple"),
        shards,
    ))
}

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// For a labeling `(u, v, w)` of a 3-vertex graph: does the hypothesis apply, and does the conclusion hold?
fn importantcor_at(g: &ColorSetGraph, [u, v, w]: [usize; 3]) -> (bool, bool) {
    let m = g.params().m() as u32;
    let f = |x: usize, y: usize| f_value(g.get(x, y));
    let (fuv, fvw, fuw) = (f(u, v), f(v, w), f(u, w));
    if !(fuv >= fvw && fvw > m) {
        return (false, true);
    }
    let bound = m * m - 1;
    (true, fuw < m && (fuv * fuw).max(fvw * fuw) <= bound)
}

/// On every metric `r`-graph on 3 vertices: two multiplicities above `m(r)` force the third below it.
pub fn check_importantcor(r: u32) -> Result<LemmaVerdict> {
    check_importantcor_with(r, 6, Exec::default())
}

pub fn check_importantcor_with(r: u32, limit: u32, exec: Exec) -> Result<LemmaVerdict> {
    check_subset_r(r, limit)?;
    let params = check_budget(r, 3, EnumBudget { max_bits: 3 * limit as usize })?;
    let results = exec.map(shards(params), |first| {
        let mut checked = 0u64;
        for g in for_each_in_shard(params, first) {
            for perm in PERMUTATIONS {
                let (applies, holds) = importantcor_at(&g, perm);
                if applies {
                    checked += 1;
                    if !holds {
                        return (checked, Some((g, perm)));
                    }
                }
            }
        }
        (checked, None)
    });
    let shards = results
        .into_iter()
        .map(|(n, cx)| {
            (
                n,
                cx.map(|(graph, perm)| {
                    assert!(graph.is_metric() && importantcor_at(&graph, perm) == (true, false));
                    Counterexample::RGraph {
                        graph,
                        labeling: Some(perm.to_vec()),
                    }
                }),
            )
        })
        .collect();
    Ok(LemmaVerdict::merge(
        "importantcor",
        format!("labeled metric {r}-graphs on 3 vertices with f(u,v) >= f(v,w) > m(r)"),
        shards,
    ))
}

/// Triangle classification restated on metric 3-vertex `r`-graphs whose pairs all have `f = m(r)`.
pub fn check_keycor(r: u32) -> Result<LemmaVerdict> {
    check_subset_r(r, MAX_SUBSET_R)?;
    let params = check_budget(r, 3, EnumBudget { max_bits: 24 })?;
    let m = params.m() as u32;
    let mut checked = 0u64;
    let mut cx = None;
    for g in MetricRGraphs::new(params, &[]) {
        if g.colors().iter().all(|&c| f_value(c) == m) {
            checked += 1;
            let (a, b, c) = (g.get(0, 1), g.get(0, 2), g.get(1, 2));
            if !triangle_classification_holds(params.r(), a, b, c) {
                cx = Some(Counterexample::RGraph {
                    graph: g,
                    labeling: None,
                });
                break;
            }
        }
    }
    Ok(LemmaVerdict::merge(
        "keycor",
        format!("metric {r}-graphs on 3 vertices with every f = m(r)"),
        vec![(checked, cx)],
    ))
}

/// Every member of `C~_r(t)`: full intervals per pair (even `r`), or the
/// partition pattern for each set partition of `[t]` (odd `r`).
pub fn tilde_cr_graphs(r: u32, t: usize) -> Result<Vec<ColorSetGraph>> {
    let params = Params::new(r, t)?;
    if params.r() > MAX_SET_COLORS {
        return domain(format!("color sets support r <= {MAX_SET_COLORS}"));
    }
    let rc = params.r();
    if rc % 2 == 0 {
        let full = ColorSet::interval(r / 2, r, rc);
        return Ok(vec![ColorSetGraph::from_raw(params, vec![full; params.pairs()])]);
    }
    let within = ColorSet::interval((r - 1) / 2, r - 1, rc);
    let across = ColorSet::interval((r + 1) / 2, r, rc);
    let mut out = Vec::new();
    for_each_rgs(t, |a, _| {
        let colors = pairs(t)
            .map(|(i, j)| if a[i] == a[j] { within } else { across })
            .collect();
        out.push(ColorSetGraph::from_raw(params, colors));
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(r: Color, v: &[&[Color]]) -> ColorSetGraph {
        let t = match v.len() {
            1 => 2,
            3 => 3,
            6 => 4,
            _ => panic!(),
        };
        ColorSetGraph::new(
            Params::new(r as u32, t).unwrap(),
            v.iter().map(|c| ColorSet::from_colors(c.iter().copied())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn weight_examples() {
        let g = sets(3, &[&[1, 2], &[1, 2], &[1, 2]]);
        assert_eq!(weight_profile(&g).weight, BigUint::from(8u32));
        let g = sets(3, &[&[1], &[2], &[3]]);
        assert_eq!(weight_profile(&g).weight, BigUint::one());
        let p = weight_profile(&sets(3, &[&[1, 2, 3], &[2], &[2]]));
        assert_eq!((p.weight, p.a_count, p.b_count), (BigUint::from(3u32), 1, 2));
        // empty sets weigh 1
        let p = weight_profile(&sets(3, &[&[], &[2, 3], &[]]));
        assert_eq!(p.f_values, vec![1, 2, 1]);
    }

    #[test]
    fn enumeration_t2_is_every_subset() {
        let all: Vec<_> = enumerate_metric_rgraphs(3, 2).unwrap().collect();
        assert_eq!(all.len(), 8);
        let bits: Vec<u32> = all.iter().map(|g| g.colors()[0].bits()).collect();
        assert_eq!(bits, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn enumeration_matches_definition_t3() {
        let fast: Vec<_> = enumerate_metric_rgraphs(3, 3).unwrap().collect();
        let params = Params::new(3, 3).unwrap();
        let mut brute = Vec::new();
        for a in 0..8u32 {
            for b in 0..8u32 {
                for c in 0..8u32 {
                    let g = ColorSetGraph::from_raw(
                        params,
                        vec![ColorSet::from_bits(a), ColorSet::from_bits(b), ColorSet::from_bits(c)],
                    );
                    if g.is_metric() {
                        brute.push(g);
                    }
                }
            }
        }
        assert_eq!(fast, brute);
        assert!(fast.iter().all(|g| g.is_metric()));
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(enumerate_metric_rgraphs(5, 4), Err(crate::Error::Capacity(_))));
        assert!(matches!(enumerate_metric_rgraphs(3, 1), Err(crate::Error::Domain(_))));
    }

    #[test]
    fn size_lemma_r3_instance() {
        let full = ColorSet::full(3);
        let c = ColorSet::from_colors([1, 2]);
        assert!(size_lemma_hypotheses(3, full, full, c));
        assert!(has_violating_triple_brute(full, full, c));
    }

    #[test]
    fn classification_examples() {
        let v = check_triangle_classification(4).unwrap();
        assert!(v.holds());
        assert_eq!(v.checked, 1);
        let b = ColorSet::from_colors([2, 3]);
        let c = ColorSet::from_colors([1, 2]);
        assert!(!has_violating_triple_brute(b, b, c));
        assert!(triangle_classification_holds(3, b, b, c));
    }

    #[test]
    fn importantcor_r3_worked_case() {
        // c(uv) = c(vw) = [3] leaves only c(uw) within {2} (or empty)
        let full = ColorSet::full(3);
        let window = full.triangle_window(full, 3);
        assert_eq!(window, ColorSet::from_colors([2]));
        let g = sets(3, &[&[1, 2, 3], &[2], &[1, 2, 3]]);
        assert!(g.is_metric());
        assert_eq!(importantcor_at(&g, [0, 1, 2]), (true, true));
    }

    #[test]
    fn tilde_cr_is_metric_with_extremal_weight() {
        for r in [3u32, 4, 5, 6] {
            for t in 2..=4 {
                let m = crate::model::m_of(r).unwrap();
                for g in tilde_cr_graphs(r, t).unwrap() {
                    assert!(g.is_metric());
                    let p = weight_profile(&g);
                    assert!(p.f_values.iter().all(|&f| f == m));
                    assert_eq!(p.weight, BigUint::from(m).pow(pair_count(t) as u32));
                }
            }
        }
    }
}
