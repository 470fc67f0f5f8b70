//! Structural classes: `C_r(n)` membership, component decompositions, bad
//! cycles, distance to `C_r(n)`, and the low-color hub predicate.
//!
//! Throughout, a *component* is a maximal vertex set connected by pairs of
//! color exactly `m(r) - 1`.

use std::cmp::Ordering;
use std::collections::VecDeque;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{capacity, domain, Result};
use crate::exec::Exec;
use crate::model::{pairs, Color, MetricColoring};
use crate::one_based;
use crate::partitions::{blocks_of, for_each_rgs_with_prefix, rgs_prefixes};

/// The `<_*` order on disjoint nonempty vertex sets: smaller first, then smaller minimum.
///
/// Both slices must be sorted ascending.
pub fn star_cmp(a: &[usize], b: &[usize]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.first().cmp(&b.first()))
}

/// Components of `g` restricted to `vertices` under `color`-edges, sorted by `<_*`.
pub fn components_by_color(g: &MetricColoring, vertices: &[usize], color: Color) -> Vec<Vec<usize>> {
    let mut seen = vec![false; vertices.len()];
    let mut comps = Vec::new();
    for start in 0..vertices.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![vertices[start]];
        let mut queue = VecDeque::from([start]);
        while let Some(a) = queue.pop_front() {
            for b in 0..vertices.len() {
                if !seen[b] && g.get(vertices[a], vertices[b]) == color {
                    seen[b] = true;
                    comp.push(vertices[b]);
                    queue.push_back(b);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps.sort_by(|a, b| star_cmp(a, b));
    comps
}

/// The canonically ordered component decomposition of a coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentDecomposition {
    #[serde(serialize_with = "one_based::blocks")]
    components: Vec<Vec<usize>>,
    large_threshold: usize,
}

impl ComponentDecomposition {
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn large_threshold(&self) -> usize {
        self.large_threshold
    }

    pub fn is_large(&self, idx: usize) -> bool {
        self.components[idx].len() >= self.large_threshold
    }

    pub fn small_count(&self) -> usize {
        (0..self.components.len()).filter(|&i| !self.is_large(i)).count()
    }

    pub fn large_count(&self) -> usize {
        self.components.len() - self.small_count()
    }

    /// Index of the `<_*`-least large component.
    pub fn minimal_large_index(&self) -> Option<usize> {
        (0..self.components.len()).find(|&i| self.is_large(i))
    }
}

/// Components of `G` under `(m(r) - 1)`-colored pairs; "large" means at least `2r` vertices.
pub fn component_decomposition(g: &MetricColoring) -> ComponentDecomposition {
    let all: Vec<usize> = (0..g.n()).collect();
    induced_decomposition(g, &all)
}

/// The decomposition of the induced coloring `G[vertices]`, in original labels.
pub fn induced_decomposition(g: &MetricColoring, vertices: &[usize]) -> ComponentDecomposition {
    ComponentDecomposition {
        components: components_by_color(g, vertices, g.params().m() - 1),
        large_threshold: 2 * g.r() as usize,
    }
}

/// `ML(G)`: the `<_*`-least component with at least `2r` vertices.
pub fn minimal_large_component(d: &ComponentDecomposition) -> Option<&[usize]> {
    d.minimal_large_index().map(|i| d.components[i].as_slice())
}

/// A path of `(m(r) - 1)`-colored pairs whose endpoints are at distance `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BadCycle {
    #[serde(serialize_with = "one_based::vertices")]
    cycle: Vec<usize>,
    k: usize,
    k_at_least_4: bool,
}

impl BadCycle {
    fn new(cycle: Vec<usize>) -> Self {
        let k = cycle.len();
        BadCycle {
            cycle,
            k,
            k_at_least_4: k >= 4,
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.cycle
    }

    pub fn len(&self) -> usize {
        self.k
    }

    pub fn is_empty(&self) -> bool {
        self.k == 0
    }

    /// Whether the cycle is long enough for the non-membership argument (`k >= 4`).
    pub fn is_long(&self) -> bool {
        self.k_at_least_4
    }

    /// Check the defining conditions against `g`.
    pub fn is_valid_in(&self, g: &MetricColoring) -> bool {
        let c = &self.cycle;
        let link = g.params().m() - 1;
        let mut sorted = c.clone();
        sorted.sort_unstable();
        sorted.dedup();
        c.len() >= 2
            && sorted.len() == c.len()
            && c.iter().all(|&v| v < g.n())
            && c.windows(2).all(|w| g.get(w[0], w[1]) == link)
            && g.get(c[0], c[c.len() - 1]) == g.r()
    }
}

/// Lexicographically least shortest path from `u` to `v` along `color`-edges.
fn shortest_path(g: &MetricColoring, u: usize, v: usize, color: Color) -> Option<Vec<usize>> {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    dist[v] = 0;
    let mut queue = VecDeque::from([v]);
    while let Some(a) = queue.pop_front() {
        for b in 0..n {
            if b != a && dist[b] == usize::MAX && g.get(a, b) == color {
                dist[b] = dist[a] + 1;
                queue.push_back(b);
            }
        }
    }
    if dist[u] == usize::MAX {
        return None;
    }
    let mut path = vec![u];
    let mut cur = u;
    while cur != v {
        cur = (0..n)
            .find(|&b| b != cur && g.get(cur, b) == color && dist[b] + 1 == dist[cur])
            .expect("BFS layers are consistent");
        path.push(cur);
    }
    Some(path)
}

/// The shortest (then lexicographically least) bad cycle, if any.
pub fn find_bad_cycle(g: &MetricColoring) -> Option<BadCycle> {
    let link = g.params().m() - 1;
    let mut best: Option<Vec<usize>> = None;
    for comp in component_decomposition(g).components() {
        for (a, &u) in comp.iter().enumerate() {
            for &v in &comp[a + 1..] {
                if g.get(u, v) != g.r() {
                    continue;
                }
                let path = shortest_path(g, u, v, link).expect("same component");
                let better = match &best {
                    None => true,
                    Some(b) => (path.len(), &path) < (b.len(), b),
                };
                if better {
                    best = Some(path);
                }
            }
        }
    }
    best.map(BadCycle::new)
}

/// Why a coloring is not in `C_r(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// A pair whose distance is below the admissible range.
    LowPair {
        #[serde(serialize_with = "one_based::pair")]
        pair: (usize, usize),
        color: Color,
    },
    BadCycle(BadCycle),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrMembershipCertificate {
    pub member: bool,
    /// Witnessing partition; produced for odd `r` members only.
    #[serde(
        serialize_with = "one_based::opt_blocks",
        skip_serializing_if = "Option::is_none"
    )]
    pub partition: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
}

/// Admissible distance ranges `(within part, across parts)` for odd `r`.
fn odd_ranges(r: Color) -> ((Color, Color), (Color, Color)) {
    let m = (r + 1) / 2;
    ((m - 1, r - 1), (m, r))
}

impl CrMembershipCertificate {
    /// Re-check the certificate against `g` straight from the class definition.
    pub fn verify(&self, g: &MetricColoring) -> bool {
        let r = g.r();
        match (self.member, &self.partition, &self.violation) {
            (true, None, None) if r % 2 == 0 => g.dist().iter().all(|&c| c >= r / 2),
            (true, Some(parts), None) if r % 2 == 1 => partition_witnesses(g, parts),
            (false, None, Some(Violation::LowPair { pair, color })) => {
                let floor = if r % 2 == 0 { r / 2 } else { (r - 1) / 2 };
                pair.0 < pair.1 && pair.1 < g.n() && g.get(pair.0, pair.1) == *color && *color < floor
            }
            (false, None, Some(Violation::BadCycle(c))) => r % 2 == 1 && c.is_valid_in(g),
            _ => false,
        }
    }
}

/// Does `parts` witness odd-`r` membership of `g`?
pub fn partition_witnesses(g: &MetricColoring, parts: &[Vec<usize>]) -> bool {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    for (b, part) in parts.iter().enumerate() {
        for &v in part {
            if v >= n || label[v] != usize::MAX {
                return false;
            }
            label[v] = b;
        }
    }
    if label.contains(&usize::MAX) {
        return false;
    }
    let (within, across) = odd_ranges(g.r());
    pairs(n).all(|(i, j)| {
        let (lo, hi) = if label[i] == label[j] { within } else { across };
        (lo..=hi).contains(&g.get(i, j))
    })
}

/// Decide membership in `C_r(n)` with a checkable certificate.
///
/// For odd `r` a coloring is a member iff every distance is at least
/// `(r-1)/2` and no component contains a pair at distance `r`; the
/// components themselves are then the witnessing partition.
pub fn cr_membership(g: &MetricColoring) -> CrMembershipCertificate {
    let r = g.r();
    let floor = if r % 2 == 0 { r / 2 } else { (r - 1) / 2 };
    if let Some((pair, &color)) = pairs(g.n()).zip(g.dist()).find(|(_, &c)| c < floor) {
        return CrMembershipCertificate {
            member: false,
            partition: None,
            violation: Some(Violation::LowPair { pair, color }),
        };
    }
    if r % 2 == 0 {
        return CrMembershipCertificate {
            member: true,
            partition: None,
            violation: None,
        };
    }
    match find_bad_cycle(g) {
        Some(cycle) => CrMembershipCertificate {
            member: false,
            partition: None,
            violation: Some(Violation::BadCycle(cycle)),
        },
        None => CrMembershipCertificate {
            member: true,
            partition: Some(component_decomposition(g).components().to_vec()),
            violation: None,
        },
    }
}

/// Allocation-light membership test on a raw distance vector, used by the counters.
pub(crate) fn is_cr_member_raw(r: Color, n: usize, dist: &[Color], scratch: &mut Vec<usize>) -> bool {
    if r % 2 == 0 {
        return dist.iter().all(|&c| c >= r / 2);
    }
    let link = (r - 1) / 2;
    if dist.iter().any(|&c| c < link) {
        return false;
    }
    scratch.clear();
    scratch.extend(0..n);
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (idx, (i, j)) in pairs(n).enumerate() {
        if dist[idx] == link {
            let (a, b) = (find(scratch, i), find(scratch, j));
            if a != b {
                scratch[a] = b;
            }
        }
    }
    for (idx, (i, j)) in pairs(n).enumerate() {
        if dist[idx] == r && find(scratch, i) == find(scratch, j) {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, Copy)]
pub struct NearestConfig {
    /// Largest `n` for which odd-`r` partition enumeration is attempted.
    pub max_n: usize,
    pub exec: Exec,
}

impl Default for NearestConfig {
    fn default() -> Self {
        NearestConfig {
            max_n: 10,
            exec: Exec::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NearestCr {
    pub distance: usize,
    pub witness: MetricColoring,
    /// The partition the witness is built on (odd `r` only).
    #[serde(
        serialize_with = "one_based::opt_blocks",
        skip_serializing_if = "Option::is_none"
    )]
    pub partition: Option<Vec<Vec<usize>>>,
}

pub fn nearest_cr_distance(g: &MetricColoring) -> Result<NearestCr> {
    nearest_cr_distance_with(g, &NearestConfig::default())
}

/// `min |Δ(G, G')|` over `G'` in `C_r(n)`, with a minimizing `G'`.
pub fn nearest_cr_distance_with(g: &MetricColoring, cfg: &NearestConfig) -> Result<NearestCr> {
    let (r, n) = (g.r(), g.n());
    if r % 2 == 0 {
        let half = r / 2;
        let mut witness = g.clone();
        let mut distance = 0;
        for (i, j) in pairs(n) {
            if g.get(i, j) < half {
                witness.set(i, j, half);
                distance += 1;
            }
        }
        return Ok(NearestCr {
            distance,
            witness,
            partition: None,
        });
    }
    if n > cfg.max_n {
        return capacity(format!(
            "nearest C_r search enumerates set partitions; n = {n} exceeds the limit {}",
            cfg.max_n
        ));
    }
    let (within, across) = odd_ranges(r);
    let cost_of = |a: &[u8]| {
        pairs(n)
            .zip(g.dist())
            .filter(|&((i, j), &c)| {
                let (lo, hi) = if a[i] == a[j] { within } else { across };
                !(lo..=hi).contains(&c)
            })
            .count()
    };
    let prefixes = rgs_prefixes(n.min(5));
    let bests = cfg.exec.map(prefixes, |prefix| {
        let mut best: Option<(usize, Vec<u8>)> = None;
        for_each_rgs_with_prefix(n, &prefix, |a, _| {
            let cost = cost_of(a);
            if best.as_ref().is_none_or(|(b, _)| cost < *b) {
                best = Some((cost, a.to_vec()));
            }
        });
        best.expect("every prefix has at least one completion")
    });
    let (distance, rgs) = bests
        .into_iter()
        .reduce(|acc, x| if x.0 < acc.0 { x } else { acc })
        .expect("n >= 1");
    let fix = (r + 1) / 2;
    let mut witness = g.clone();
    for (i, j) in pairs(n) {
        let (lo, hi) = if rgs[i] == rgs[j] { within } else { across };
        if !(lo..=hi).contains(&g.get(i, j)) {
            witness.set(i, j, fix);
        }
    }
    Ok(NearestCr {
        distance,
        witness,
        partition: Some(blocks_of(&rgs)),
    })
}

fn check_epsilon(eps: Ratio<u64>) -> Result<()> {
    if *eps.numer() == 0 || eps > Ratio::from_integer(1) {
        return domain(format!("epsilon must lie in (0, 1], got {eps}"));
    }
    Ok(())
}

/// First `(x, l)` (by vertex, then color) with `l <= m(r) - 2` and
/// `|{y : d(x, y) = l}| >= εn`.
pub fn low_color_hub(g: &MetricColoring, eps: Ratio<u64>) -> Result<Option<(usize, Color)>> {
    check_epsilon(eps)?;
    let (n, top) = (g.n(), g.params().m().saturating_sub(2));
    let threshold_num = *eps.numer() as u128 * n as u128;
    let den = *eps.denom() as u128;
    for x in 0..n {
        let mut counts = vec![0u128; top as usize + 1];
        for y in (0..n).filter(|&y| y != x) {
            let c = g.get(x, y);
            if c <= top {
                counts[c as usize] += 1;
            }
        }
        for l in 1..=top {
            if counts[l as usize] * den >= threshold_num {
                return Ok(Some((x, l)));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HubClass {
    /// Some vertex has at least `εn` neighbours in a low color.
    A,
    /// No such vertex, but some pair still uses a low color.
    APrime,
    Neither,
}

pub fn hub_class(g: &MetricColoring, eps: Ratio<u64>) -> Result<HubClass> {
    if low_color_hub(g, eps)?.is_some() {
        return Ok(HubClass::A);
    }
    let top = g.params().m().saturating_sub(2);
    Ok(if g.dist().iter().any(|&c| c <= top) {
        HubClass::APrime
    } else {
        HubClass::Neither
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(r: u32, n: usize, d: &[Color]) -> MetricColoring {
        MetricColoring::from_parts(r, n, d.to_vec()).unwrap()
    }

    #[test]
    fn decomposition_examples() {
        // r = 3, n = 4, d(1,2) = 1, everything else 2
        let g = col(3, 4, &[1, 2, 2, 2, 2, 2]);
        assert_eq!(
            component_decomposition(&g).components(),
            &[vec![2], vec![3], vec![0, 1]]
        );
        let g = col(4, 3, &[3, 3, 3]);
        assert_eq!(
            component_decomposition(&g).components(),
            &[vec![0], vec![1], vec![2]]
        );
        let g = col(3, 3, &[1, 1, 1]);
        assert_eq!(component_decomposition(&g).components(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn minimal_large_examples() {
        let g = col(3, 4, &[1; 6]);
        assert!(minimal_large_component(&component_decomposition(&g)).is_none());

        // n = 7: vertices 0..6 chained by 1-edges, vertex 6 isolated at distance 3
        let params = crate::model::Params::new(3, 7).unwrap();
        let g = MetricColoring::from_fn(params, |i, j| if j == 6 { 3 } else if j == i + 1 { 1 } else { 2 })
            .unwrap();
        let d = component_decomposition(&g);
        assert_eq!(minimal_large_component(&d), Some(&[0, 1, 2, 3, 4, 5][..]));

        // n = 13: components {0..5} and {6..12}
        let params = crate::model::Params::new(3, 13).unwrap();
        let g = MetricColoring::from_fn(params, |i, j| {
            if (i < 6) != (j < 6) {
                3
            } else if j == i + 1 {
                1
            } else {
                2
            }
        })
        .unwrap();
        let d = component_decomposition(&g);
        assert_eq!(d.components().len(), 2);
        assert_eq!(minimal_large_component(&d).unwrap().len(), 6);
    }

    #[test]
    fn bad_cycle_examples() {
        let g = col(3, 3, &[1, 3, 1]);
        let c = find_bad_cycle(&g).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2]);
        assert!(c.is_valid_in(&g));
        assert!(!c.is_long());
        assert!(find_bad_cycle(&col(3, 3, &[1, 2, 2])).is_none());
    }

    #[test]
    fn membership_examples() {
        let cert = cr_membership(&col(4, 3, &[2, 3, 4]));
        assert!(cert.member && cert.verify(&col(4, 3, &[2, 3, 4])));

        let g = col(3, 3, &[1, 1, 3]);
        let cert = cr_membership(&g);
        assert!(!cert.member);
        match &cert.violation {
            Some(Violation::BadCycle(c)) => {
                // the path must run through the 1-edges, so vertex 1 sits in the middle
                assert_eq!(c.vertices(), &[1, 0, 2]);
                assert!(c.is_valid_in(&g));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(cert.verify(&g));

        let g = col(3, 3, &[2, 2, 3]);
        let cert = cr_membership(&g);
        assert!(cert.member);
        assert_eq!(cert.partition.as_deref(), Some(&[vec![0], vec![1], vec![2]][..]));
        assert!(cert.verify(&g));
    }

    #[test]
    fn low_pair_witness() {
        let g = col(4, 3, &[1, 3, 3]);
        let cert = cr_membership(&g);
        assert_eq!(
            cert.violation,
            Some(Violation::LowPair {
                pair: (0, 1),
                color: 1
            })
        );
        assert!(cert.verify(&g));
    }

    #[test]
    fn nearest_examples() {
        let g = col(4, 3, &[2, 3, 4]);
        let near = nearest_cr_distance(&g).unwrap();
        assert_eq!((near.distance, &near.witness), (0, &g));

        let near = nearest_cr_distance(&col(4, 3, &[1, 3, 3])).unwrap();
        assert_eq!(near.distance, 1);
        assert_eq!(near.witness, col(4, 3, &[2, 3, 3]));

        let g = col(3, 3, &[1, 1, 3]);
        let near = nearest_cr_distance(&g).unwrap();
        assert_eq!(near.distance, 1);
        assert!(cr_membership(&near.witness).member);
        assert_eq!(crate::model::delta(&g, &near.witness).unwrap().len(), 1);
    }

    #[test]
    fn nearest_capacity() {
        let params = crate::model::Params::new(3, 11).unwrap();
        let g = MetricColoring::constant(params, 2).unwrap();
        let cfg = NearestConfig::default();
        assert!(matches!(
            nearest_cr_distance_with(&g, &cfg),
            Err(crate::Error::Capacity(_))
        ));
    }

    #[test]
    fn hub_examples() {
        let g = col(4, 3, &[1, 1, 4]);
        assert_eq!(low_color_hub(&g, Ratio::new(1, 3)).unwrap(), Some((0, 1)));
        assert_eq!(hub_class(&g, Ratio::new(1, 3)).unwrap(), HubClass::A);
        let g = col(4, 3, &[2, 3, 4]);
        assert_eq!(low_color_hub(&g, Ratio::new(1, 3)).unwrap(), None);
        let g = col(3, 3, &[1, 1, 1]);
        assert_eq!(low_color_hub(&g, Ratio::new(1, 100)).unwrap(), None);
        assert!(low_color_hub(&g, Ratio::new(0, 1)).is_err());
        // one low pair, ε too large for a hub
        let g = col(6, 4, &[1, 4, 4, 4, 4, 4]);
        assert_eq!(hub_class(&g, Ratio::new(1, 2)).unwrap(), HubClass::APrime);
    }

    #[test]
    fn star_order_is_strict_total() {
        let sets = [vec![3], vec![1], vec![0, 4], vec![2, 5], vec![6, 7, 8]];
        for a in &sets {
            assert_eq!(star_cmp(a, a), Ordering::Equal);
            for b in &sets {
                if a != b {
                    assert_ne!(star_cmp(a, b), Ordering::Equal);
                    assert_eq!(star_cmp(a, b), star_cmp(b, a).reverse());
                }
            }
        }
    }
}
