use alloc::vec::Vec;

use crate::{ElementSet, FiniteGroup};

/// Invariant factors `d1 | d2 | ...` of an abelian subgroup, e.g. `[2, 4]`
/// for `Z2 x Z4` and `[6]` for `Z6`. The trivial group gives `[]`.
/// Only meaningful when the members of `h` commute.
pub fn abelian_invariants(g: &FiniteGroup, h: &ElementSet) -> Vec<usize> {
    let n = h.len();
    let mut prime_parts: Vec<Vec<usize>> = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            // c[k] = #{x in h : x^(p^k) = 1}, so log_p c[k] - log_p c[k-1]
            // counts the cyclic factors of exponent at least k.
            let mut logs = alloc::vec![0u32];
            let mut pk = 1usize;
            loop {
                pk *= p;
                let c = h.iter().filter(|&x| g.pow(x, pk as i64) == 0).count();
                let l = ilog(c, p);
                if l == *logs.last().unwrap() {
                    break;
                }
                logs.push(l);
            }
            let at_least: Vec<u32> = logs.windows(2).map(|w| w[1] - w[0]).collect();
            let mut factors = Vec::new();
            for (k, &cnt) in at_least.iter().enumerate() {
                let next = at_least.get(k + 1).copied().unwrap_or(0);
                for _ in 0..cnt - next {
                    factors.push(p.pow(k as u32 + 1));
                }
            }
            factors.sort_unstable_by(|a, b| b.cmp(a));
            prime_parts.push(factors);
        }
        p += 1;
    }
    // Combine the largest p-parts into the largest invariant factor, and so on.
    let len = prime_parts.iter().map(Vec::len).max().unwrap_or(0);
    let mut out: Vec<usize> = (0..len)
        .map(|i| {
            prime_parts
                .iter()
                .map(|f| f.get(i).copied().unwrap_or(1))
                .product()
        })
        .collect();
    out.reverse();
    out
}

fn ilog(mut c: usize, p: usize) -> u32 {
    let mut l = 0;
    while c > 1 {
        c /= p;
        l += 1;
    }
    l
}
