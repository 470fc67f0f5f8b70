//! Set partitions of `[n]` as restricted growth strings.
//!
//! A string `a` with `a[0] = 0` and `a[i] <= 1 + max(a[..i])` labels each
//! element with its block. Strings are produced in lexicographic order, which
//! is also the tie-break order used by partition searches.

use num_bigint::BigUint;

/// Visit every restricted growth string of length `n` extending `prefix`.
///
/// The callback sees the full string and the number of blocks.
pub fn for_each_rgs_with_prefix(n: usize, prefix: &[u8], mut f: impl FnMut(&[u8], usize)) {
    assert!(prefix.len() <= n);
    let mut a = vec![0u8; n];
    a[..prefix.len()].copy_from_slice(prefix);
    let blocks = prefix.iter().map(|&b| b as usize + 1).max().unwrap_or(0);
    if n == 0 {
        f(&a, 0);
        return;
    }
    rec(&mut a, prefix.len(), blocks, &mut f);
}

fn rec(a: &mut [u8], pos: usize, blocks: usize, f: &mut impl FnMut(&[u8], usize)) {
    if pos == a.len() {
        f(a, blocks);
        return;
    }
    let limit = if pos == 0 { 0 } else { blocks };
    for b in 0..=limit {
        a[pos] = b as u8;
        rec(a, pos + 1, blocks.max(b + 1), f);
    }
}

pub fn for_each_rgs(n: usize, f: impl FnMut(&[u8], usize)) {
    for_each_rgs_with_prefix(n, &[], f)
}

/// All restricted growth strings of length `len`, in lexicographic order.
pub fn rgs_prefixes(len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for_each_rgs(len, |a, _| out.push(a.to_vec()));
    out
}

/// Blocks of the partition encoded by `a`, each sorted, ordered by first element.
pub fn blocks_of(a: &[u8]) -> Vec<Vec<usize>> {
    let count = a.iter().map(|&b| b as usize + 1).max().unwrap_or(0);
    let mut blocks = vec![Vec::new(); count];
    for (i, &b) in a.iter().enumerate() {
        blocks[b as usize].push(i);
    }
    blocks
}

/// The Bell number `B(n)`, via the Bell triangle.
pub fn bell(n: usize) -> BigUint {
    let mut row = vec![BigUint::from(1u32)];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().unwrap().clone());
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0].clone()
}
