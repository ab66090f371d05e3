//! Exact Gram–Schmidt / LDL scan of a symmetric rational matrix.

use num_traits::{One, Signed, Zero};

use crate::rational::Q;

/// Outcome of scanning one Gram block in basis order.
#[derive(Debug, Clone)]
pub struct LdlScan {
    pub dim: usize,
    pub positive: usize,
    /// coordinates of null vectors found (only a true kernel if `negative` is `None`)
    pub kernel: Vec<Vec<Q>>,
    /// first vector of negative norm, with that norm
    pub negative: Option<(Vec<Q>, Q)>,
}

impl LdlScan {
    pub fn kernel_dim(&self) -> usize {
        self.kernel.len()
    }

    pub fn is_positive_definite(&self) -> bool {
        self.negative.is_none() && self.kernel.is_empty()
    }
}

fn dot(g: &[Vec<Q>], a: &[Q], b: &[Q]) -> Q {
    let mut s = Q::zero();
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() && !g[i][j].is_zero() {
                s += ai * bj * &g[i][j];
            }
        }
    }
    s
}

fn mat_vec(g: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    g.iter()
        .map(|row| {
            row.iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).fold(Q::zero(), |s, (a, b)| s + a * b)
        })
        .collect()
}

/// Orthogonalise the basis vectors in order and stop at the first negative
/// direction. Zero pivots are kept as candidate null vectors; a later vector
/// pairing nonzero with one of them yields the witness `v − s r` with
/// `s = (‖v‖² + 1)/(2⟨v,r⟩)`, whose norm is exactly −1.
pub fn ldl_scan(g: &[Vec<Q>]) -> LdlScan {
    let n = g.len();
    // (vector, G·vector, norm)
    let mut pivots: Vec<(Vec<Q>, Vec<Q>, Q)> = Vec::new();
    let mut nulls: Vec<(Vec<Q>, Vec<Q>)> = Vec::new();
    for i in 0..n {
        let mut v = vec![Q::zero(); n];
        v[i] = Q::one();
        let mut norm = g[i][i].clone();
        for (r, gr, d) in &pivots {
            let c = &gr[i];
            if c.is_zero() {
                continue;
            }
            let s = c / d;
            norm -= &s * c;
            for (vk, rk) in v.iter_mut().zip(r) {
                if !rk.is_zero() {
                    *vk -= &s * rk;
                }
            }
        }
        if let Some((r, gr)) = nulls.iter().find(|(_, gr)| !gr[i].is_zero()) {
            let c = &gr[i];
            let s = (&norm + Q::one()) / (Q::from_integer(2.into()) * c);
            let w: Vec<Q> = v.iter().zip(r).map(|(a, b)| a - &s * b).collect();
            let wn = dot(g, &w, &w);
            debug_assert!(wn.is_negative());
            return LdlScan { dim: n, positive: pivots.len(), kernel: nulls.into_iter().map(|x| x.0).collect(), negative: Some((w, wn)) };
        }
        if norm.is_negative() {
            return LdlScan { dim: n, positive: pivots.len(), kernel: nulls.into_iter().map(|x| x.0).collect(), negative: Some((v, norm)) };
        }
        let gv = mat_vec(g, &v);
        if norm.is_zero() {
            nulls.push((v, gv));
        } else {
            pivots.push((v, gv, norm));
        }
    }
    LdlScan { dim: n, positive: pivots.len(), kernel: nulls.into_iter().map(|x| x.0).collect(), negative: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn definite_semidefinite_indefinite() {
        let pd = ldl_scan(&m(&[&[2, 1], &[1, 2]]));
        assert!(pd.is_positive_definite());
        let psd = ldl_scan(&m(&[&[1, 1], &[1, 1]]));
        assert!(psd.negative.is_none());
        assert_eq!(psd.kernel, vec![vec![q(-1), q(1)]]);
        let ind = ldl_scan(&m(&[&[0, 1], &[1, 0]]));
        let (w, n) = ind.negative.unwrap();
        assert_eq!(n, q(-1));
        assert_eq!(dot(&m(&[&[0, 1], &[1, 0]]), &w, &w), q(-1));
    }
}
