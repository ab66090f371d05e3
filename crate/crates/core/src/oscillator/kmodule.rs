//! Finite-dimensional gl(n) irreps realised on polynomials in an `n × n`
//! matrix of commuting variables, with the compact (Fock) Hermitian form.

use std::collections::{BTreeMap, VecDeque};

use num_traits::{One, Zero};

use super::poly::{minor, Poly};
use crate::error::{Error, Result};
use crate::rational::{to_i64, Q};

/// Sparse column: `(row, coefficient)`.
pub type SparseCol = Vec<(usize, Q)>;

#[derive(Debug, Clone)]
struct Echelon {
    rows: Vec<(Vec<u16>, Poly, Vec<(usize, Q)>)>,
}

impl Echelon {
    /// `f = Σ c_k b_k + residual`.
    fn reduce(&self, f: &Poly) -> (Poly, BTreeMap<usize, Q>) {
        let mut r = f.clone();
        let mut coords: BTreeMap<usize, Q> = BTreeMap::new();
        for (piv, row, combo) in &self.rows {
            let a = r.coeff(piv);
            if a.is_zero() {
                continue;
            }
            r.add_scaled(row, &-&a);
            for (k, c) in combo {
                let e = coords.entry(*k).or_insert_with(Q::zero);
                *e += &a * c;
            }
        }
        coords.retain(|_, v| !v.is_zero());
        (r, coords)
    }
}

#[derive(Debug, Clone)]
pub struct GlIrrep {
    pub n: usize,
    pub highest: Vec<Q>,
    /// weight of each basis vector
    pub weights: Vec<Vec<Q>>,
    /// `e[i][j][k]` is the image of basis vector `k` under `E_ij`
    pub e: Vec<Vec<Vec<SparseCol>>>,
    /// Gram matrix, normalised so the highest vector has norm 1
    pub gram: Vec<Vec<Q>>,
}

impl GlIrrep {
    /// Irrep with the given dominant highest weight (integral differences).
    pub fn new(highest: &[Q]) -> Result<GlIrrep> {
        let n = highest.len();
        if n == 0 {
            return Ok(GlIrrep { n, highest: vec![], weights: vec![vec![]], e: vec![], gram: vec![vec![Q::one()]] });
        }
        let kappa = highest[n - 1].clone();
        let mut lam = Vec::with_capacity(n);
        for h in highest {
            let d = to_i64(&(h - &kappa)).ok_or_else(|| Error::Invalid("non-integral weight differences".into()))?;
            lam.push(d);
        }
        if lam.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid("highest weight is not dominant".into()));
        }
        let nv = n * n;
        let var = |r: usize, c: usize| r * n + c;
        let mut hw = Poly::one(nv);
        for y in 1..n {
            let k = (lam[y - 1] - lam[y]) as u32;
            if k > 0 {
                let rows: Vec<usize> = (0..y).collect();
                hw = hw.mul(&minor(nv, &rows, &rows, var).pow(k));
            }
        }
        let deg_of = |f: &Poly| -> Vec<i64> {
            let (e, _) = f.terms.iter().next().expect("nonzero");
            (0..n).map(|r| (0..n).map(|c| e[var(r, c)] as i64).sum()).collect()
        };
        let mut basis: Vec<Poly> = Vec::new();
        let mut wt: Vec<Vec<i64>> = Vec::new();
        let mut spaces: BTreeMap<Vec<i64>, Echelon> = BTreeMap::new();
        let mut queue = VecDeque::new();
        let insert = |f: Poly, basis: &mut Vec<Poly>, wt: &mut Vec<Vec<i64>>, spaces: &mut BTreeMap<Vec<i64>, Echelon>| -> Option<usize> {
            if f.is_zero() {
                return None;
            }
            let w = deg_of(&f);
            let sp = spaces.entry(w.clone()).or_insert_with(|| Echelon { rows: vec![] });
            let (res, coords) = sp.reduce(&f);
            if res.is_zero() {
                return None;
            }
            let k = basis.len();
            let (piv, lead) = {
                let (p, c) = res.leading().expect("nonzero");
                (p.clone(), c.clone())
            };
            let inv = Q::one() / &lead;
            let mut combo: Vec<(usize, Q)> = coords.into_iter().map(|(i, c)| (i, -c * &inv)).collect();
            combo.push((k, inv.clone()));
            sp.rows.push((piv, res.scale(&inv), combo));
            basis.push(f);
            wt.push(w);
            Some(k)
        };
        let k0 = insert(hw, &mut basis, &mut wt, &mut spaces).expect("highest vector");
        queue.push_back(k0);
        while let Some(k) = queue.pop_front() {
            for i in 0..n - 1 {
                let f = basis[k].polarise(n, i + 1, i);
                if let Some(kk) = insert(f, &mut basis, &mut wt, &mut spaces) {
                    queue.push_back(kk);
                }
            }
        }
        let dim = basis.len();
        let mut e = vec![vec![vec![Vec::new(); dim]; n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..dim {
                    let f = basis[k].polarise(n, i, j);
                    let mut col: SparseCol = Vec::new();
                    if !f.is_zero() {
                        let w = deg_of(&f);
                        let (res, coords) = spaces[&w].reduce(&f);
                        assert!(res.is_zero(), "module not closed under E_ij");
                        col = coords.into_iter().collect();
                    }
                    if i == j && !kappa.is_zero() {
                        match col.iter_mut().find(|(r, _)| *r == k) {
                            Some(entry) => entry.1 += &kappa,
                            None => col.push((k, kappa.clone())),
                        }
                        col.retain(|(_, c)| !c.is_zero());
                    }
                    e[i][j][k] = col;
                }
            }
        }
        let n0 = basis[0].fock_pair(&basis[0]);
        let mut gram = vec![vec![Q::zero(); dim]; dim];
        for a in 0..dim {
            for b in a..dim {
                if wt[a] == wt[b] {
                    let v = basis[a].fock_pair(&basis[b]) / &n0;
                    gram[a][b] = v.clone();
                    gram[b][a] = v;
                }
            }
        }
        let weights = wt.iter().map(|w| w.iter().map(|&x| Q::from_integer(x.into()) + &kappa).collect()).collect();
        Ok(GlIrrep { n, highest: highest.to_vec(), weights, e, gram })
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }
}

/// The K-type `U_0`: an outer tensor product of irreps of consecutive
/// diagonal blocks of gl(N).
#[derive(Debug, Clone)]
pub struct KModule {
    pub blocks: Vec<GlIrrep>,
    offsets: Vec<usize>,
    strides: Vec<usize>,
}

impl KModule {
    pub fn new(blocks: Vec<GlIrrep>) -> KModule {
        let mut offsets = Vec::new();
        let mut o = 0;
        for b in &blocks {
            offsets.push(o);
            o += b.n;
        }
        let mut strides = vec![1; blocks.len()];
        for k in (0..blocks.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * blocks[k + 1].dim();
        }
        KModule { blocks, offsets, strides }
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(GlIrrep::dim).product()
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.n).sum()
    }

    fn split(&self, u: usize) -> Vec<usize> {
        self.blocks.iter().zip(&self.strides).map(|(b, s)| (u / s) % b.dim()).collect()
    }

    fn locate(&self, i: usize) -> (usize, usize) {
        let k = self.offsets.iter().rposition(|&o| o <= i).expect("index in range");
        (k, i - self.offsets[k])
    }

    pub fn weight(&self, u: usize) -> Vec<Q> {
        self.split(u).iter().zip(&self.blocks).flat_map(|(&l, b)| b.weights[l].clone()).collect()
    }

    /// `E_ij · u` for `i, j` in the same block; `None` if they are not.
    pub fn act(&self, i: usize, j: usize, u: usize) -> Option<SparseCol> {
        let (bi, li) = self.locate(i);
        let (bj, lj) = self.locate(j);
        if bi != bj {
            return None;
        }
        let parts = self.split(u);
        let s = self.strides[bi];
        let base = u - parts[bi] * s;
        Some(self.blocks[bi].e[li][lj][parts[bi]].iter().map(|(r, c)| (base + r * s, c.clone())).collect())
    }

    pub fn gram(&self, u: usize, v: usize) -> Q {
        let (a, b) = (self.split(u), self.split(v));
        let mut g = Q::one();
        for (k, blk) in self.blocks.iter().enumerate() {
            g *= &blk.gram[a[k]][b[k]];
            if g.is_zero() {
                break;
            }
        }
        g
    }
}
