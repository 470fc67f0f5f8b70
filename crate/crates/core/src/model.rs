//! Edge-colored complete graphs and the triangle calculus.
//!
//! A coloring of the pairs of `[n]` with colors `1..=r` is stored as a flat
//! vector in row-major upper-triangular order `(0,1), (0,2), ..., (n-2,n-1)`.
//! Vertices are 0-based in the Rust API; colors are 1-based everywhere.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

pub type Color = u8;

/// Largest `r` a [`ColorSet`] can hold.
pub const MAX_SET_COLORS: u8 = 32;

/// `m(r) = ceil((r + 1) / 2)`, the size of the largest metric subset of `[r]`.
pub fn m_of(r: u32) -> Result<u32> {
    if r < 3 {
        return domain(format!("m(r) needs r >= 3, got {r}"));
    }
    Ok((r + 2) / 2)
}

pub(crate) fn m(r: Color) -> Color {
    (r + 2) / 2
}

/// True iff `|i - j| <= k <= i + j` fails.
pub fn is_violating_triple(i: u32, j: u32, k: u32) -> bool {
    !(i.abs_diff(j) <= k && k <= i + j)
}

/// True iff the three values satisfy all three triangle inequalities.
pub fn is_metric_triangle(i: u32, j: u32, k: u32) -> bool {
    i <= j + k && j <= i + k && k <= i + j
}

#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the pair `{i, j}` in row-major upper-triangular order.
#[inline]
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i != j && i < n && j < n);
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

/// All pairs of `[n]` in storage order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> + Clone {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    r: Color,
    n: usize,
}

impl Params {
    pub fn new(r: u32, n: usize) -> Result<Self> {
        if r < 3 {
            return domain(format!("r must be at least 3, got {r}"));
        }
        if r > Color::MAX as u32 {
            return domain(format!("r must fit in a byte, got {r}"));
        }
        if n < 1 {
            return domain("n must be at least 1");
        }
        Ok(Params { r: r as Color, n })
    }

    pub fn r(&self) -> Color {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> Color {
        m(self.r)
    }

    pub fn pairs(&self) -> usize {
        pair_count(self.n)
    }
}

/// A simple complete `r`-graph on `[n]`: one distance per pair.
///
/// The triangle inequality is *not* a type invariant; use
/// [`MetricColoring::is_metric`] for membership in `M_r(n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ColoringRepr", into = "ColoringRepr")]
pub struct MetricColoring {
    params: Params,
    dist: Vec<Color>,
}

#[derive(Serialize, Deserialize)]
struct ColoringRepr {
    r: u32,
    n: usize,
    d: Vec<u32>,
}

impl TryFrom<ColoringRepr> for MetricColoring {
    type Error = Error;

    fn try_from(repr: ColoringRepr) -> Result<Self> {
        let params = Params::new(repr.r, repr.n)?;
        let mut dist = Vec::with_capacity(repr.d.len());
        for c in repr.d {
            if c == 0 || c > params.r as u32 {
                return domain(format!("distance {c} outside [1, {}]", params.r));
            }
            dist.push(c as Color);
        }
        MetricColoring::new(params, dist)
    }
}

impl From<MetricColoring> for ColoringRepr {
    fn from(g: MetricColoring) -> Self {
        ColoringRepr {
            r: g.params.r as u32,
            n: g.params.n,
            d: g.dist.into_iter().map(u32::from).collect(),
        }
    }
}

impl MetricColoring {
    pub fn new(params: Params, dist: Vec<Color>) -> Result<Self> {
        if dist.len() != params.pairs() {
            return domain(format!(
                "expected {} distances for n = {}, got {}",
                params.pairs(),
                params.n,
                dist.len()
            ));
        }
        if let Some(&c) = dist.iter().find(|&&c| c == 0 || c > params.r) {
            return domain(format!("distance {c} outside [1, {}]", params.r));
        }
        Ok(MetricColoring { params, dist })
    }

    /// Build from raw parts; `r` and `n` are validated as in [`Params::new`].
    pub fn from_parts(r: u32, n: usize, dist: Vec<Color>) -> Result<Self> {
        Self::new(Params::new(r, n)?, dist)
    }

    pub fn from_fn(params: Params, mut f: impl FnMut(usize, usize) -> Color) -> Result<Self> {
        let dist = pairs(params.n).map(|(i, j)| f(i, j)).collect();
        Self::new(params, dist)
    }

    pub fn constant(params: Params, c: Color) -> Result<Self> {
        Self::new(params, vec![c; params.pairs()])
    }

    pub(crate) fn from_raw(params: Params, dist: Vec<Color>) -> Self {
        debug_assert_eq!(dist.len(), params.pairs());
        MetricColoring { params, dist }
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn r(&self) -> Color {
        self.params.r
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn dist(&self) -> &[Color] {
        &self.dist
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Color {
        self.dist[pair_index(self.params.n, i, j)]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, c: Color) {
        let idx = pair_index(self.params.n, i, j);
        self.dist[idx] = c;
    }

    /// A copy with the given pairs recolored.
    pub fn recolor(
        &self,
        edits: impl IntoIterator<Item = ((usize, usize), Color)>,
    ) -> Result<Self> {
        let mut out = self.clone();
        for ((i, j), c) in edits {
            if i == j || i >= self.n() || j >= self.n() {
                return domain(format!("invalid pair ({i}, {j}) for n = {}", self.n()));
            }
            if c == 0 || c > self.r() {
                return domain(format!("distance {c} outside [1, {}]", self.r()));
            }
            out.set(i, j, c);
        }
        Ok(out)
    }

    /// The induced coloring on `vertices`, relabeled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let params = Params::new(self.r() as u32, vertices.len())?;
        Self::from_fn(params, |a, b| self.get(vertices[a], vertices[b]))
    }

    pub fn is_metric(&self) -> bool {
        find_violating_triangle(self).is_none()
    }
}

impl fmt::Debug for MetricColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MetricColoring(r={}, n={}, d={:?})", self.r(), self.n(), self.dist)
    }
}

/// Lexicographically first triple `x < y < z` whose distances are not a metric triangle.
pub fn find_violating_triangle(g: &MetricColoring) -> Option<[usize; 3]> {
    let n = g.n();
    for x in 0..n {
        for y in x + 1..n {
            let a = g.get(x, y) as u32;
            for z in y + 1..n {
                if !is_metric_triangle(a, g.get(x, z) as u32, g.get(y, z) as u32) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

/// A subset of `[r]` stored as a bitmask (bit `c - 1` for color `c`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColorSet(u32);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn from_bits(bits: u32) -> Self {
        ColorSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn singleton(c: Color) -> Self {
        debug_assert!((1..=MAX_SET_COLORS).contains(&c));
        ColorSet(1 << (c - 1))
    }

    /// `[lo, hi]` clipped to `[1, r]`; empty when `lo > hi`.
    pub fn interval(lo: u32, hi: u32, r: Color) -> Self {
        let lo = lo.max(1);
        let hi = hi.min(r as u32);
        if lo > hi {
            return ColorSet::EMPTY;
        }
        let upper = if hi >= 32 { u32::MAX } else { (1u32 << hi) - 1 };
        ColorSet(upper & !((1u32 << (lo - 1)) - 1))
    }

    pub fn full(r: Color) -> Self {
        Self::interval(1, r as u32, r)
    }

    pub fn from_colors(colors: impl IntoIterator<Item = Color>) -> Self {
        ColorSet(colors.into_iter().fold(0, |acc, c| acc | (1 << (c - 1))))
    }

    pub fn contains(self, c: Color) -> bool {
        (1..=MAX_SET_COLORS).contains(&c) && self.0 & (1 << (c - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersect(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn min(self) -> Option<Color> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Color + 1)
    }

    pub fn max(self) -> Option<Color> {
        (self.0 != 0).then(|| (32 - self.0.leading_zeros()) as Color)
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let c = bits.trailing_zeros() as Color + 1;
            bits &= bits - 1;
            Some(c)
        })
    }

    /// Colors `c` such that `(a, b, c)` is a metric triangle for every
    /// `a` in `self` and `b` in `other`.
    pub fn triangle_window(self, other: ColorSet, r: Color) -> ColorSet {
        let mut acc = ColorSet::full(r);
        for a in self.iter() {
            for b in other.iter() {
                acc = acc.intersect(ColorSet::interval(
                    a.abs_diff(b) as u32,
                    a as u32 + b as u32,
                    r,
                ));
            }
        }
        acc
    }

    /// Every subset of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = ColorSet> {
        let mask = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some(((cur | !mask).wrapping_add(1)) & mask)
            };
            Some(ColorSet(cur))
        })
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ColorSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ColorSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let colors = Vec::<u32>::deserialize(d)?;
        let mut bits = 0u32;
        for c in colors {
            if c == 0 || c > MAX_SET_COLORS as u32 {
                return Err(serde::de::Error::custom(format!("color {c} out of range")));
            }
            bits |= 1 << (c - 1);
        }
        Ok(ColorSet(bits))
    }
}

/// True iff `set` contains no violating triple, i.e. `set^3` is all metric.
pub fn is_metric_set(r: Color, set: ColorSet) -> Result<bool> {
    if set.is_empty() {
        return domain("metric-set test needs a nonempty color set");
    }
    if !set.is_subset(ColorSet::full(r)) {
        return domain(format!("color set {set:?} not contained in [1, {r}]"));
    }
    Ok(set.is_subset(set.triangle_window(set, r)))
}

/// A general `r`-graph: each pair of `[t]` carries a (possibly empty) subset of `[r]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SetGraphRepr", into = "SetGraphRepr")]
pub struct ColorSetGraph {
    params: Params,
    colors: Vec<ColorSet>,
}

#[derive(Serialize, Deserialize)]
struct SetGraphRepr {
    r: u32,
    n: usize,
    c: Vec<ColorSet>,
}

impl TryFrom<SetGraphRepr> for ColorSetGraph {
    type Error = Error;

    fn try_from(repr: SetGraphRepr) -> Result<Self> {
        ColorSetGraph::new(Params::new(repr.r, repr.n)?, repr.c)
    }
}

impl From<ColorSetGraph> for SetGraphRepr {
    fn from(g: ColorSetGraph) -> Self {
        SetGraphRepr {
            r: g.params.r as u32,
            n: g.params.n,
            c: g.colors,
        }
    }
}

impl ColorSetGraph {
    pub fn new(params: Params, colors: Vec<ColorSet>) -> Result<Self> {
        if params.r > MAX_SET_COLORS {
            return domain(format!("color sets support r <= {MAX_SET_COLORS}"));
        }
        if colors.len() != params.pairs() {
            return domain(format!(
                "expected {} color sets, got {}",
                params.pairs(),
                colors.len()
            ));
        }
        let full = ColorSet::full(params.r);
        if let Some(c) = colors.iter().find(|c| !c.is_subset(full)) {
            return domain(format!("color set {c:?} not contained in [1, {}]", params.r));
        }
        Ok(ColorSetGraph { params, colors })
    }

    pub(crate) fn from_raw(params: Params, colors: Vec<ColorSet>) -> Self {
        ColorSetGraph { params, colors }
    }

    /// The simple complete graph with singleton color sets.
    pub fn from_coloring(g: &MetricColoring) -> Self {
        ColorSetGraph {
            params: g.params(),
            colors: g.dist().iter().map(|&c| ColorSet::singleton(c)).collect(),
        }
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn r(&self) -> Color {
        self.params.r
    }

    pub fn t(&self) -> usize {
        self.params.n
    }

    pub fn colors(&self) -> &[ColorSet] {
        &self.colors
    }

    pub fn get(&self, i: usize, j: usize) -> ColorSet {
        self.colors[pair_index(self.params.n, i, j)]
    }

    /// First triple `x < y < z` admitting a violating choice of colors.
    pub fn find_violating_triangle(&self) -> Option<[usize; 3]> {
        let (n, r) = (self.t(), self.r());
        for x in 0..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    let window = self.get(x, y).triangle_window(self.get(x, z), r);
                    if !self.get(y, z).is_subset(window) {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    pub fn is_metric(&self) -> bool {
        self.find_violating_triangle().is_none()
    }
}

impl fmt::Debug for ColorSetGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColorSetGraph(r={}, t={}, c={:?})", self.r(), self.t(), self.colors)
    }
}

/// `Δ(G, G')`: the set of pairs on which two colorings differ.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EditSet(BTreeSet<(usize, usize)>);

impl EditSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.0.contains(&(i.min(j), i.max(j)))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }

    pub fn union(&self, other: &EditSet) -> EditSet {
        EditSet(self.0.union(&other.0).copied().collect())
    }
}

impl FromIterator<(usize, usize)> for EditSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        EditSet(iter.into_iter().map(|(i, j)| (i.min(j), i.max(j))).collect())
    }
}

impl Serialize for EditSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|&(i, j)| [i + 1, j + 1]))
    }
}

fn same_params(g: &MetricColoring, h: &MetricColoring) -> Result<()> {
    if g.params() != h.params() {
        return domain(format!(
            "parameter mismatch: (r={}, n={}) vs (r={}, n={})",
            g.r(),
            g.n(),
            h.r(),
            h.n()
        ));
    }
    Ok(())
}

pub fn delta(g: &MetricColoring, h: &MetricColoring) -> Result<EditSet> {
    same_params(g, h)?;
    Ok(pairs(g.n())
        .zip(g.dist().iter().zip(h.dist()))
        .filter(|(_, (a, b))| a != b)
        .map(|(p, _)| p)
        .collect())
}

/// `|Δ(G, G')| <= δ n²`, compared exactly.
pub fn is_delta_close(g: &MetricColoring, h: &MetricColoring, delta_frac: Ratio<u64>) -> Result<bool> {
    let edits = delta(g, h)?.len() as u128;
    let n2 = (g.n() * g.n()) as u128;
    Ok(edits * (*delta_frac.denom() as u128) <= (*delta_frac.numer() as u128) * n2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(r: u32, n: usize, d: &[Color]) -> MetricColoring {
        MetricColoring::from_parts(r, n, d.to_vec()).unwrap()
    }

    #[test]
    fn m_of_values() {
        assert_eq!(m_of(3).unwrap(), 2);
        assert_eq!(m_of(4).unwrap(), 3);
        assert_eq!(m_of(5).unwrap(), 3);
        assert!(matches!(m_of(2), Err(Error::Domain(_))));
    }

    #[test]
    fn m_squared_minus_one_at_least_r() {
        for r in 3..=64 {
            let m = m_of(r).unwrap();
            assert!(m * m > r, "r = {r}");
        }
    }

    #[test]
    fn triples() {
        assert!(is_violating_triple(1, 1, 3));
        assert!(!is_violating_triple(2, 2, 4));
        assert!(!is_violating_triple(3, 1, 2));
        assert!(is_metric_triangle(1, 2, 3));
        assert!(!is_metric_triangle(1, 1, 3));
        assert!(is_metric_triangle(2, 2, 2));
    }

    #[test]
    fn rotation_equivalence_exhaustive() {
        for r in 3..=6u32 {
            for i in 1..=2 * r {
                for j in 1..=2 * r {
                    for k in 1..=2 * r {
                        let any_rotation = is_violating_triple(i, j, k)
                            || is_violating_triple(j, k, i)
                            || is_violating_triple(k, i, j);
                        assert_eq!(any_rotation, !is_metric_triangle(i, j, k));
                        for (a, b, c) in [(i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)] {
                            assert_eq!(is_metric_triangle(i, j, k), is_metric_triangle(a, b, c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pair_index_is_row_major() {
        let n = 5;
        for (idx, (i, j)) in pairs(n).enumerate() {
            assert_eq!(pair_index(n, i, j), idx);
            assert_eq!(pair_index(n, j, i), idx);
        }
        assert_eq!(pairs(n).count(), pair_count(n));
    }

    #[test]
    fn violating_triangle_examples() {
        assert_eq!(find_violating_triangle(&col(3, 3, &[1, 1, 3])), Some([0, 1, 2]));
        assert_eq!(find_violating_triangle(&col(4, 3, &[2, 2, 4])), None);
        assert_eq!(find_violating_triangle(&col(3, 4, &[2; 6])), None);
    }

    #[test]
    fn metric_set_examples() {
        assert!(is_metric_set(4, ColorSet::from_colors([2, 3, 4])).unwrap());
        assert!(!is_metric_set(3, ColorSet::from_colors([1, 3])).unwrap());
        assert!(is_metric_set(3, ColorSet::from_colors([2])).unwrap());
        assert!(matches!(is_metric_set(3, ColorSet::EMPTY), Err(Error::Domain(_))));
    }

    #[test]
    fn metric_set_bruteforce_and_size_bound() {
        for r in 3..=10u8 {
            let m = m(r) as usize;
            for set in ColorSet::full(r).subsets().filter(|s| !s.is_empty()) {
                let brute = set.iter().all(|a| {
                    set.iter().all(|b| {
                        set.iter()
                            .all(|c| !is_violating_triple(a as u32, b as u32, c as u32))
                    })
                });
                let fast = is_metric_set(r, set).unwrap();
                assert_eq!(brute, fast, "r = {r}, set = {set:?}");
                if fast {
                    assert!(set.len() <= m, "r = {r}, set = {set:?}");
                }
            }
            let ri = r as u32;
            if r % 2 == 0 {
                assert!(is_metric_set(r, ColorSet::interval(ri / 2, ri, r)).unwrap());
            } else {
                assert!(is_metric_set(r, ColorSet::interval((ri - 1) / 2, ri - 1, r)).unwrap());
                assert!(is_metric_set(r, ColorSet::interval((ri + 1) / 2, ri, r)).unwrap());
            }
        }
    }

    #[test]
    fn delta_examples() {
        let g = col(3, 3, &[2, 2, 2]);
        assert!(delta(&g, &g).unwrap().is_empty());
        let d = delta(&g, &col(3, 3, &[2, 2, 3])).unwrap();
        assert_eq!(d.iter().collect::<Vec<_>>(), vec![(1, 2)]);
        let d = delta(&col(3, 3, &[1, 2, 3]), &col(3, 3, &[3, 2, 1])).unwrap();
        assert_eq!(d.iter().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert!(delta(&g, &col(4, 3, &[2, 2, 2])).is_err());
    }

    #[test]
    fn delta_closeness_examples() {
        let g = col(3, 3, &[2, 2, 2]);
        assert!(is_delta_close(&g, &g, Ratio::new(0, 1)).unwrap());
        assert!(is_delta_close(&g, &col(3, 3, &[2, 2, 3]), Ratio::new(1, 9)).unwrap());
        assert!(!is_delta_close(&g, &col(3, 3, &[2, 3, 3]), Ratio::new(1, 9)).unwrap());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let g = col(3, 3, &[1, 2, 3]);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"r":3,"n":3,"d":[1,2,3]}"#);
        assert_eq!(serde_json::from_str::<MetricColoring>(&s).unwrap(), g);
        assert!(serde_json::from_str::<MetricColoring>(r#"{"r":3,"n":3,"d":[1,2,4]}"#).is_err());
        assert!(serde_json::from_str::<MetricColoring>(r#"{"r":3,"n":3,"d":[1,2]}"#).is_err());

        let sg = ColorSetGraph::new(
            Params::new(3, 3).unwrap(),
            vec![ColorSet::from_colors([1, 2]), ColorSet::EMPTY, ColorSet::from_colors([3])],
        )
        .unwrap();
        let s = serde_json::to_string(&sg).unwrap();
        assert_eq!(s, r#"{"r":3,"n":3,"c":[[1,2],[],[3]]}"#);
        assert_eq!(serde_json::from_str::<ColorSetGraph>(&s).unwrap(), sg);
    }

    #[test]
    fn color_set_helpers() {
        let s = ColorSet::interval(2, 4, 5);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![2, 3, 4]);
        assert_eq!(s.min(), Some(2));
        assert_eq!(s.max(), Some(4));
        assert_eq!(ColorSet::interval(0, 40, 32).len(), 32);
        assert_eq!(ColorSet::full(3).subsets().count(), 8);
        assert!(ColorSet::interval(3, 2, 5).is_empty());
    }
}
