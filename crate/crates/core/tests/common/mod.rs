#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use superdual_core::rational::qf;
use superdual_core::{classify_supqm, Grading, RepLabel};

/// Proper partitions (last entry zero) of the given length with entries ≤ max.
pub fn partitions(len: usize, max: u32) -> Vec<Vec<u32>> {
    fn rec(pre: &mut Vec<u32>, len: usize, max: u32, out: &mut Vec<Vec<u32>>) {
        if pre.len() + 1 == len {
            let mut v = pre.clone();
            v.push(0);
            out.push(v);
            return;
        }
        let hi = pre.last().copied().unwrap_or(max);
        for x in 0..=hi {
            pre.push(x);
            rec(pre, len, max, out);
            pre.pop();
        }
    }
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), len, max, &mut out);
    out
}

/// Every Kac–Dynkin path of su(p,|m|q): fermions placed anywhere, the p
/// bosons before the q bosons.
pub fn lattice_paths(p: usize, m: usize, q: usize) -> Vec<Grading> {
    let n = p + m + q;
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let mut bos = 0;
        let blocks: Vec<(usize, u8, u8)> = (0..n)
            .map(|i| {
                if mask >> i & 1 == 1 {
                    (1, 1, 1)
                } else {
                    bos += 1;
                    if bos <= p {
                        (1, 0, 0)
                    } else {
                        (1, 0, 1)
                    }
                }
            })
            .collect();
        out.push(Grading::from_blocks(&blocks).unwrap());
    }
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_partition(rng: &mut ChaCha8Rng, len: usize, max: u32) -> Vec<u32> {
    if len == 0 {
        return vec![];
    }
    let mut v: Vec<u32> = (0..len - 1).map(|_| rng.gen_range(0..=max)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v.push(0);
    v
}

/// A random valid label with `p + m + q ≤ max_total`; β's have denominators ≤ 3.
pub fn random_label(rng: &mut ChaCha8Rng, max_total: usize) -> RepLabel {
    loop {
        let tot = rng.gen_range(2..=max_total);
        let m = rng.gen_range(0..tot);
        let p = rng.gen_range(0..=tot - m);
        let q = tot - m - p;
        let mut beta = |on: bool| {
            if !on {
                return qf(0, 1);
            }
            let den = rng.gen_range(1..=3i64);
            qf(rng.gen_range(0..=4 * den), den)
        };
        let (bl, br) = (beta(p > 0), beta(q > 0));
        let (ml, t, mr) = (random_partition(rng, p, 3), random_partition(rng, m, 3), random_partition(rng, q, 3));
        if let Ok(l) = RepLabel::new(p, q, m, ml, t, mr, bl, br) {
            return l;
        }
    }
}

pub fn random_unitary_label(rng: &mut ChaCha8Rng, max_total: usize) -> RepLabel {
    loop {
        let l = random_label(rng, max_total);
        if classify_supqm(&l).is_unitary() {
            return l;
        }
    }
}
