//! The oscillator module generated from a `U_0` highest vector, sliced by
//! weight, with its Fock Gram matrices.

use std::collections::{BTreeMap, VecDeque};

use num_traits::{One, Zero};

use super::fock::{apply_generator, inner_product, FockState, FockVector, OscillatorSpec};
use super::induced::SliceReport;
use super::linalg::ldl_scan;
use crate::error::Result;
use crate::rational::Q;

#[derive(Debug, Clone)]
pub struct OscSlice {
    pub level: usize,
    pub weight: Vec<i64>,
    pub vectors: Vec<FockVector>,
}

#[derive(Default)]
struct Echelon {
    rows: Vec<(FockState, FockVector)>,
}

impl Echelon {
    /// Reduce `v`; if independent, store it and return true.
    fn insert(&mut self, v: &FockVector) -> bool {
        let mut r = v.clone();
        for (piv, row) in &self.rows {
            let a = match r.get(piv) {
                Some(a) => a.clone(),
                None => continue,
            };
            for (s, c) in row {
                let e = r.entry(s.clone()).or_insert_with(Q::zero);
                *e -= &a * c;
                if e.is_zero() {
                    r.remove(s);
                }
            }
        }
        let Some((piv, lead)) = r.iter().next_back().map(|(s, c)| (s.clone(), c.clone())) else {
            return false;
        };
        let inv = Q::one() / lead;
        let row: FockVector = r.into_iter().map(|(s, c)| (s, c * &inv)).collect();
        self.rows.push((piv, row));
        true
    }
}

fn height(spec: &OscillatorSpec, i: usize) -> usize {
    if i < spec.p {
        0
    } else if i < spec.p + spec.m {
        1
    } else {
        2
    }
}

/// Span of all lowering words applied to `v`, through level `cutoff`.
pub fn oscillator_module(spec: &OscillatorSpec, v: &FockVector, cutoff: usize) -> Vec<OscSlice> {
    let n = spec.n();
    let zero = vec![0i64; n];
    let mut slices: BTreeMap<(usize, Vec<i64>), (Echelon, Vec<FockVector>)> = BTreeMap::new();
    let mut queue = VecDeque::new();
    let e0 = slices.entry((0, zero.clone())).or_default();
    e0.0.insert(v);
    e0.1.push(v.clone());
    queue.push_back((0usize, zero, v.clone()));
    while let Some((lvl, wt, vec)) = queue.pop_front() {
        for i in 0..n {
            for j in 0..i {
                let dl = height(spec, i) - height(spec, j);
                if lvl + dl > cutoff {
                    continue;
                }
                let img = apply_generator(spec, i, j, &vec);
                if img.is_empty() {
                    continue;
                }
                let mut w2 = wt.clone();
                w2[i] += 1;
                w2[j] -= 1;
                let key = (lvl + dl, w2.clone());
                let ent = slices.entry(key).or_default();
                if ent.0.insert(&img) {
                    ent.1.push(img.clone());
                    queue.push_back((lvl + dl, w2, img));
                }
            }
        }
    }
    slices.into_iter().map(|((level, weight), (_, vectors))| OscSlice { level, weight, vectors }).collect()
}

/// Fock Gram scan per slice: dimension and kernel (there should be none).
pub fn oscillator_gram(spec: &OscillatorSpec, slices: &[OscSlice]) -> Result<Vec<(SliceReport, bool)>> {
    let mut out = Vec::new();
    for s in slices {
        let k = s.vectors.len();
        let mut g = vec![vec![Q::zero(); k]; k];
        for a in 0..k {
            for b in a..k {
                let x = inner_product(spec, &s.vectors[a], &s.vectors[b])?;
                g[a][b] = x.clone();
                g[b][a] = x;
            }
        }
        let scan = ldl_scan(&g);
        let definite = scan.is_positive_definite();
        out.push((SliceReport { level: s.level, weight: s.weight.clone(), dim: k, kernel_dim: scan.kernel_dim() }, definite));
    }
    Ok(out)
}
