//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the search engine or the structural code under test.

#![allow(dead_code)]

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

pub fn idx(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    pairs(n).iter().position(|&p| p == (i, j)).unwrap()
}

pub fn is_metric(n: usize, d: &[u8]) -> bool {
    let g = |i: usize, j: usize| d[idx(n, i, j)] as i32;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let (x, y, z) = (g(a, b), g(a, c), g(b, c));
                if x > y + z || y > x + z || z > x + y {
                    return false;
                }
            }
        }
    }
    true
}

/// Every vector in `[lo, r]^k`, in lexicographic order.
pub fn all_vectors(k: usize, lo: u8, r: u8) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=r).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn brute_metric(r: u8, n: usize) -> Vec<Vec<u8>> {
    all_vectors(n * (n - 1) / 2, 1, r)
        .into_iter()
        .filter(|d| is_metric(n, d))
        .collect()
}

/// All set partitions of `0..n` as block labels.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(a: &mut Vec<usize>, n: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if a.len() == n {
            out.push(a.clone());
            return;
        }
        for b in 0..=max {
            a.push(b);
            rec(a, n, max.max(b + 1), out);
            a.pop();
        }
    }
    rec(&mut Vec::new(), n, 0, &mut out);
    out
}

/// Membership in `C_r(n)` straight from the definition.
pub fn in_cr_by_definition(r: u8, n: usize, d: &[u8]) -> bool {
    if r % 2 == 0 {
        return d.iter().all(|&c| c >= r / 2);
    }
    let ps = pairs(n);
    partitions(n).iter().any(|blk| {
        ps.iter().enumerate().all(|(k, &(i, j))| {
            let (lo, hi) = if blk[i] == blk[j] { ((r - 1) / 2, r - 1) } else { ((r + 1) / 2, r) };
            (lo..=hi).contains(&d[k])
        })
    })
}
