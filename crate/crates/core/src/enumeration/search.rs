//! Depth-first search over distance vectors with interval propagation.
//!
//! Pairs are assigned in row-major order, values in ascending order. Each
//! unassigned pair carries an interval `[lo, hi]`; assigning `d(x, y) = v`
//! narrows the third pair of every triangle whose other pair is already
//! assigned to `[|v - d|, v + d]`. Triangle constraints are exactly interval
//! constraints, so every leaf reached is a metric coloring.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use crate::error::{capacity, domain, Result};
use crate::exec::Exec;
use crate::model::{pair_count, pair_index, pairs, Color, Params};

#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    /// Maximum number of search nodes (value assignments) before giving up.
    pub node_budget: u64,
    /// Number of leading pairs fixed per parallel task.
    pub split_depth: usize,
    pub exec: Exec,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: 500_000_000,
            split_depth: 4,
            exec: Exec::default(),
        }
    }
}

impl SearchConfig {
    pub fn serial() -> Self {
        SearchConfig {
            exec: Exec::Serial,
            ..Self::default()
        }
    }
}

/// Precomputed triangle structure for `n` vertices.
#[derive(Debug)]
pub(crate) struct Layout {
    pub params: Params,
    /// For pair `p`: `(other, third)` where assigning `p` and `other`
    /// (with `other < p`) constrains `third > p`.
    links: Vec<Vec<(usize, usize)>>,
}

impl Layout {
    pub fn new(params: Params) -> Self {
        let n = params.n();
        let mut links = vec![Vec::new(); params.pairs()];
        for (p, (x, y)) in pairs(n).enumerate() {
            for z in (0..n).filter(|&z| z != x && z != y) {
                let (a, b) = (pair_index(n, x, z), pair_index(n, y, z));
                if a < p && b > p {
                    links[p].push((a, b));
                } else if b < p && a > p {
                    links[p].push((b, a));
                }
            }
        }
        Layout { params, links }
    }
}

struct Budget<'a> {
    used: &'a AtomicU64,
    limit: u64,
    aborted: &'a AtomicBool,
    local: u64,
}

impl Budget<'_> {
    const FLUSH: u64 = 4096;

    #[inline]
    fn tick(&mut self) -> bool {
        self.local += 1;
        if self.local == Self::FLUSH {
            self.flush()
        } else {
            true
        }
    }

    fn flush(&mut self) -> bool {
        let total = self.used.fetch_add(self.local, Ordering::Relaxed) + self.local;
        self.local = 0;
        if total > self.limit {
            self.aborted.store(true, Ordering::Relaxed);
        }
        !self.aborted.load(Ordering::Relaxed)
    }
}

/// Mutable search state: assigned values, intervals and an undo trail.
struct State<'a> {
    layout: &'a Layout,
    dist: Vec<Color>,
    lo: Vec<Color>,
    hi: Vec<Color>,
    trail: Vec<(usize, Color, Color)>,
}

impl<'a> State<'a> {
    fn new(layout: &'a Layout, floor: Color) -> Self {
        let k = layout.params.pairs();
        let r = layout.params.r();
        State {
            layout,
            dist: vec![0; k],
            lo: vec![floor; k],
            hi: vec![r; k],
            trail: Vec::new(),
        }
    }

    /// Assign `v` to pair `p` and propagate; false (with state restored) on a wipe-out.
    fn assign(&mut self, p: usize, v: Color) -> bool {
        let mark = self.trail.len();
        self.dist[p] = v;
        for &(other, third) in &self.layout.links[p] {
            let d = self.dist[other];
            let lo = v.abs_diff(d);
            let hi = v.saturating_add(d);
            let (old_lo, old_hi) = (self.lo[third], self.hi[third]);
            let (new_lo, new_hi) = (old_lo.max(lo), old_hi.min(hi));
            if new_lo > new_hi {
                self.undo(mark);
                return false;
            }
            if (new_lo, new_hi) != (old_lo, old_hi) {
                self.trail.push((third, old_lo, old_hi));
                self.lo[third] = new_lo;
                self.hi[third] = new_hi;
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (p, lo, hi) = self.trail.pop().unwrap();
            self.lo[p] = lo;
            self.hi[p] = hi;
        }
    }

    /// Visit every completion from pair `p` on. `leaf` receives the vector with
    /// the last pair unset plus its admissible interval.
    fn dfs<F: FnMut(&mut [Color], Color, Color)>(&mut self, p: usize, budget: &mut Budget, leaf: &mut F) -> bool {
        let last = self.dist.len() - 1;
        if p == last {
            if !budget.tick() {
                return false;
            }
            let (lo, hi) = (self.lo[p], self.hi[p]);
            leaf(&mut self.dist, lo, hi);
            return true;
        }
        for v in self.lo[p]..=self.hi[p] {
            if !budget.tick() {
                return false;
            }
            let mark = self.trail.len();
            if self.assign(p, v) {
                if !self.dfs(p + 1, budget, leaf) {
                    return false;
                }
                self.undo(mark);
            }
        }
        true
    }
}

/// Every consistent assignment of the first `depth` pairs, in lexicographic order.
fn prefixes(layout: &Layout, floor: Color, depth: usize) -> Vec<Vec<Color>> {
    fn rec(st: &mut State, p: usize, depth: usize, out: &mut Vec<Vec<Color>>) {
        if p == depth {
            out.push(st.dist[..depth].to_vec());
            return;
        }
        for v in st.lo[p]..=st.hi[p] {
            let mark = st.trail.len();
            if st.assign(p, v) {
                rec(st, p + 1, depth, out);
                st.undo(mark);
            }
        }
    }
    let mut st = State::new(layout, floor);
    let mut out = Vec::new();
    rec(&mut st, 0, depth, &mut out);
    out
}

/// Run the search, folding leaves into one accumulator per task; accumulators
/// are returned in lexicographic task order.
///
/// `floor` is the smallest admissible color for every pair.
pub(crate) fn fold_leaves<A, I, F>(params: Params, floor: Color, cfg: &SearchConfig, init: I, leaf: F) -> Result<Vec<A>>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &mut [Color], Color, Color) + Sync + Send,
{
    if floor < 1 || floor > params.r() {
        return domain(format!("color floor {floor} outside [1, {}]", params.r()));
    }
    let k = params.pairs();
    if k == 0 {
        let mut acc = init();
        // the single empty coloring; the interval is reported as [1, 1]
        leaf(&mut acc, &mut [], 1, 1);
        return Ok(vec![acc]);
    }
    let layout = Layout::new(params);
    let depth = cfg.split_depth.min(k - 1);
    let tasks = prefixes(&layout, floor, depth);
    let used = AtomicU64::new(0);
    let aborted = AtomicBool::new(false);
    let results = cfg.exec.map(tasks, |prefix| {
        let mut acc = init();
        if aborted.load(Ordering::Relaxed) {
            return acc;
        }
        let mut st = State::new(&layout, floor);
        for (p, &v) in prefix.iter().enumerate() {
            let ok = st.assign(p, v);
            debug_assert!(ok);
        }
        let mut budget = Budget {
            used: &used,
            limit: cfg.node_budget,
            aborted: &aborted,
            local: 0,
        };
        let mut f = |d: &mut [Color], lo: Color, hi: Color| leaf(&mut acc, d, lo, hi);
        if st.dfs(depth, &mut budget, &mut f) {
            budget.flush();
        }
        acc
    });
    if aborted.load(Ordering::Relaxed) {
        return capacity(format!(
            "search for r = {}, n = {} exceeded the node budget of {}",
            params.r(),
            params.n(),
            cfg.node_budget
        ));
    }
    Ok(results)
}

/// Number of metric colorings with every color in `[floor, r]`.
pub(crate) fn count_with_floor(params: Params, floor: Color, cfg: &SearchConfig) -> Result<u128> {
    let shards = fold_leaves(params, floor, cfg, || 0u128, |acc, _, lo, hi| {
        *acc += (hi - lo) as u128 + 1;
    })?;
    Ok(shards.into_iter().sum())
}

/// Lazily walks the metric colorings in lexicographic order.
pub struct MetricStream {
    layout: Box<Layout>,
    dist: Vec<Color>,
    lo: Vec<Color>,
    hi: Vec<Color>,
    /// Trail length before each pair's assignment.
    marks: Vec<usize>,
    trail: Vec<(usize, Color, Color)>,
    depth: usize,
    started: bool,
    done: bool,
}

impl MetricStream {
    pub(crate) fn new(params: Params) -> Self {
        let k = params.pairs();
        MetricStream {
            layout: Box::new(Layout::new(params)),
            dist: vec![0; k],
            lo: vec![1; k],
            hi: vec![params.r(); k],
            marks: vec![0; k],
            trail: Vec::new(),
            depth: 0,
            started: false,
            done: false,
        }
    }

    pub fn params(&self) -> Params {
        self.layout.params
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (p, lo, hi) = self.trail.pop().unwrap();
            self.lo[p] = lo;
            self.hi[p] = hi;
        }
    }

    fn try_assign(&mut self, p: usize, v: Color) -> bool {
        let mark = self.trail.len();
        self.marks[p] = mark;
        self.dist[p] = v;
        for &(other, third) in &self.layout.links[p] {
            let d = self.dist[other];
            let (lo, hi) = (v.abs_diff(d), v.saturating_add(d));
            let (old_lo, old_hi) = (self.lo[third], self.hi[third]);
            let (new_lo, new_hi) = (old_lo.max(lo), old_hi.min(hi));
            if new_lo > new_hi {
                self.undo(mark);
                return false;
            }
            if (new_lo, new_hi) != (old_lo, old_hi) {
                self.trail.push((third, old_lo, old_hi));
                self.lo[third] = new_lo;
                self.hi[third] = new_hi;
            }
        }
        true
    }

    /// Assign the smallest feasible value `>= from` at pair `p`.
    fn place(&mut self, p: usize, from: Color) -> bool {
        let mut v = from.max(self.lo[p]);
        while v <= self.hi[p] {
            if self.try_assign(p, v) {
                return true;
            }
            v += 1;
        }
        false
    }

    fn advance(&mut self) -> bool {
        let k = self.dist.len();
        if k == 0 {
            let first = !self.started;
            self.started = true;
            return first;
        }
        let mut p;
        let mut from;
        if !self.started {
            self.started = true;
            p = 0;
            from = 1;
        } else {
            p = k - 1;
            let mark = self.marks[p];
            self.undo(mark);
            from = self.dist[p] + 1;
        }
        loop {
            if self.place(p, from) {
                if p + 1 == k {
                    self.depth = k;
                    return true;
                }
                p += 1;
                from = 1;
            } else {
                if p == 0 {
                    return false;
                }
                p -= 1;
                let mark = self.marks[p];
                self.undo(mark);
                from = self.dist[p] + 1;
            }
        }
    }
}

impl Iterator for MetricStream {
    type Item = Vec<Color>;

    fn next(&mut self) -> Option<Vec<Color>> {
        if self.done {
            return None;
        }
        if self.advance() {
            Some(self.dist.clone())
        } else {
            self.done = true;
            None
        }
    }
}

/// Plain `r^C(n,2)` brute force, kept for cross-checks on tiny instances.
pub fn brute_force_count(r: u32, n: usize) -> Result<u64> {
    let params = Params::new(r, n)?;
    let k = pair_count(n);
    let total = (r as u64).checked_pow(k as u32).filter(|&t| t <= 50_000_000);
    let Some(total) = total else {
        return capacity(format!("brute force over {r}^{k} colorings is too large"));
    };
    let mut d = vec![1 as Color; k];
    let mut count = 0;
    for _ in 0..total {
        if crate::model::MetricColoring::from_raw(params, d.clone()).is_metric() {
            count += 1;
        }
        for c in d.iter_mut().rev() {
            if *c < params.r() {
                *c += 1;
                break;
            }
            *c = 1;
        }
    }
    Ok(count)
}
