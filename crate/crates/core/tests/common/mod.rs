//! Helpers shared by several integration test targets.
#![allow(dead_code)]

use qkflag::flags::FlagShape;

/// Every shape `I ⊆ {1..max_step}` (nonempty), inside `ℂ^{max_step+1}`.
pub fn all_shapes(max_step: u32) -> Vec<FlagShape> {
    (1u32..1 << max_step)
        .map(|mask| {
            let dims = (1..=max_step).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            FlagShape::new(dims, max_step + 1).unwrap()
        })
        .collect()
}

/// Every degree vector of length `m` with entries summing to at most `total`.
pub fn degree_vectors(m: usize, total: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut stack = vec![Vec::new()];
    while let Some(v) = stack.pop() {
        if v.len() == m {
            out.push(v);
            continue;
        }
        let used: u64 = v.iter().sum();
        for x in 0..=total - used {
            let mut w = v.clone();
            w.push(x);
            stack.push(w);
        }
    }
    out.sort();
    out
}

pub fn golden(n: u32) -> String {
    std::fs::read_to_string(format!("{}/tests/data/golden_n{n}.json", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

/// `C(n,k)` by Pascal's rule, as an independent oracle.
pub fn pascal(n: usize, k: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row.get(k).copied().unwrap_or(0)
}

/// `Σ (-1)^r` over ordered decompositions of `(a,b)` into `r` nonzero parts,
/// by explicit recursive enumeration.
pub fn signed_compositions(a: u64, b: u64) -> i64 {
    if a == 0 && b == 0 {
        return 1;
    }
    let mut s = 0;
    for x in 0..=a {
        for y in 0..=b {
            if x + y > 0 {
                s -= signed_compositions(a - x, b - y);
            }
        }
    }
    s
}
