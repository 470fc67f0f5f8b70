use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use crate::error::{domain, Result};
use crate::model::{pair_count, pair_index, Color, MetricColoring, Params};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingCount {
    /// Matchings of `K_n`, the empty one included.
    #[serde(serialize_with = "crate::bigfmt::big")]
    pub matchings: BigUint,
    /// `Σ_S |A(S)| = Σ_S m(r)^(C(n,2) - |S|)`.
    #[serde(serialize_with = "crate::bigfmt::big")]
    pub total: BigUint,
}

fn odd_params(r: u32, n: usize) -> Result<Params> {
    let params = Params::new(r, n)?;
    if r % 2 == 0 {
        return domain(format!("the matching construction needs odd r, got {r}"));
    }
    if n < 2 {
        return domain(format!("the matching construction needs n >= 2, got {n}"));
    }
    Ok(params)
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

pub fn matching_family_count(r: u32, n: usize) -> Result<MatchingCount> {
    let params = odd_params(r, n)?;
    let m = BigUint::from(params.m() as u32);
    let total_pairs = pair_count(n);
    let mut matchings = BigUint::zero();
    let mut total = BigUint::zero();
    let mut double_fact = BigUint::one();
    for k in 0..=n / 2 {
        if k > 0 {
            double_fact *= 2 * k - 1;
        }
        let with_k = binomial(n, 2 * k) * &double_fact;
        total += &with_k * Pow::pow(&m, total_pairs - k);
        matchings += with_k;
    }
    Ok(MatchingCount { matchings, total })
}

/// Every matching of `K_n` as a sorted list of pairs, in lexicographic order.
pub fn matchings(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(n: usize, from: usize, used: &mut Vec<bool>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        out.push(cur.clone());
        for i in from..n {
            if used[i] {
                continue;
            }
            for j in i + 1..n {
                if used[j] {
                    continue;
                }
                used[i] = true;
                used[j] = true;
                cur.push((i, j));
                rec(n, i + 1, used, cur, out);
                cur.pop();
                used[i] = false;
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, 0, &mut vec![false; n], &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The members of `A(S)`: color `m(r) - 1` exactly on `S`, any color in `[m(r), r]` elsewhere.
pub fn a_s_members(r: u32, n: usize, s: &[(usize, usize)]) -> Result<impl Iterator<Item = MetricColoring>> {
    let params = odd_params(r, n)?;
    let mut seen = vec![false; n];
    let mut on_s = vec![false; params.pairs()];
    for &(i, j) in s {
        if i >= n || j >= n || i == j {
            return domain(format!("pair ({}, {}) is not a pair of [{n}]", i + 1, j + 1));
        }
        if seen[i] || seen[j] {
            return domain("S is not a matching");
        }
        seen[i] = true;
        seen[j] = true;
        on_s[pair_index(n, i, j)] = true;
    }
    let m = params.m();
    let rc = params.r();
    let mut cur: Option<Vec<Color>> = Some(on_s.iter().map(|&b| if b { m - 1 } else { m }).collect());
    Ok(std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        let mut carried = true;
        for (p, c) in next.iter_mut().enumerate().rev() {
            if on_s[p] {
                continue;
            }
            if *c < rc {
                *c += 1;
                carried = false;
                break;
            }
            *c = m;
        }
        cur = (!carried).then_some(next);
        Some(MetricColoring::from_raw(params, out))
    }))
}
