//! The module `U(g⁻) ⊗ U_0` induced from a K-type, with its contravariant
//! form computed by moving one lowering letter at a time across the pairing.
//!
//! Indices follow the `su(p,|m|q)` order: `B = 0..p`, `F = p..p+m`,
//! `A = p+m..p+m+q`. Lowering letters are `Y = E_{αβ̇}` (even),
//! `X = E_{fβ̇}` and `Z = E_{αf}` (odd). A PBW word is stored as
//! `Y^y X^x Z^z` with the odd letters in ascending bit order.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_traits::{One, Zero};
use serde::Serialize;

use super::kmodule::{GlIrrep, KModule};
use super::linalg::ldl_scan;
use crate::algebra_core::{FundamentalWeight, Grading};
use crate::classify::RepLabel;
use crate::diagrams::{realize, Strategy};
use crate::error::{Error, Result};
use crate::rational::{fmt_q, Q};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Kind {
    B,
    F,
    A,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Word {
    y: Vec<u8>,
    x: u32,
    z: u32,
}

impl Word {
    fn empty(p: usize, q: usize) -> Word {
        Word { y: vec![0; p * q], x: 0, z: 0 }
    }

    fn is_empty(&self) -> bool {
        self.x == 0 && self.z == 0 && self.y.iter().all(|&k| k == 0)
    }

    fn level(&self) -> usize {
        self.x.count_ones() as usize + self.z.count_ones() as usize + 2 * self.y.iter().map(|&k| k as usize).sum::<usize>()
    }
}

pub type Vector = BTreeMap<u64, Q>;

/// `su(p,|m|q)` weight of a label (also for compact labels, which have no
/// lattice path of their own).
fn label_weight(label: &RepLabel) -> Result<Vec<Q>> {
    Ok(realize(label, Strategy::MinimalP, true)?.supmq_weight()?.m)
}

fn add(v: &mut Vector, k: u64, c: Q) {
    if c.is_zero() {
        return;
    }
    let e = v.entry(k).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        v.remove(&k);
    }
}

pub struct InducedModule {
    p: usize,
    m: usize,
    q: usize,
    pub u0: KModule,
    sub_weight: Vec<Q>,
    words: Vec<Word>,
    ids: HashMap<Word, u32>,
    act_memo: HashMap<(u8, u8, u64), Rc<Vector>>,
    gram_memo: HashMap<(u64, u64), Q>,
}

fn key(w: u32, u: usize) -> u64 {
    ((w as u64) << 32) | u as u64
}

fn unkey(k: u64) -> (u32, usize) {
    ((k >> 32) as u32, (k & 0xffff_ffff) as usize)
}

impl InducedModule {
    /// `weight` is a K-dominant weight in the `su(p,|m|q)` grading.
    pub fn new(p: usize, m: usize, q: usize, weight: &[Q]) -> Result<InducedModule> {
        if weight.len() != p + m + q {
            return Err(Error::Dims("weight length differs from p+m+q".into()));
        }
        if m * p > 32 || m * q > 32 {
            return Err(Error::Dims("too many odd lowering operators".into()));
        }
        let blocks = vec![
            GlIrrep::new(&weight[..p])?,
            GlIrrep::new(&weight[p..p + m])?,
            GlIrrep::new(&weight[p + m..])?,
        ];
        let u0 = KModule::new(blocks);
        let mut me = InducedModule {
            p,
            m,
            q,
            u0,
            sub_weight: weight.to_vec(),
            words: vec![],
            ids: HashMap::new(),
            act_memo: HashMap::new(),
            gram_memo: HashMap::new(),
        };
        me.intern(Word::empty(p, q));
        Ok(me)
    }

    pub fn from_label(label: &RepLabel) -> Result<InducedModule> {
        InducedModule::new(label.p, label.m, label.q, &label_weight(label)?)
    }

    fn n(&self) -> usize {
        self.p + self.m + self.q
    }

    fn kind(&self, i: usize) -> Kind {
        if i < self.p {
            Kind::B
        } else if i < self.p + self.m {
            Kind::F
        } else {
            Kind::A
        }
    }

    fn parity(&self, i: usize) -> u8 {
        (self.kind(i) == Kind::F) as u8
    }

    fn cpar(&self, i: usize) -> u8 {
        (self.kind(i) != Kind::B) as u8
    }

    fn intern(&mut self, w: Word) -> u32 {
        if let Some(&id) = self.ids.get(&w) {
            return id;
        }
        let id = self.words.len() as u32;
        self.ids.insert(w.clone(), id);
        self.words.push(w);
        id
    }

    pub fn word(&self, k: u64) -> &Word {
        &self.words[unkey(k).0 as usize]
    }

    // letter (i, j) of a lowering generator and its slot in the word
    fn y_idx(&self, i: usize, j: usize) -> usize {
        (i - self.p - self.m) * self.p + j
    }
    fn x_bit(&self, i: usize, j: usize) -> u32 {
        ((i - self.p) * self.p + j) as u32
    }

    fn is_lowering(&self, i: usize, j: usize) -> bool {
        matches!((self.kind(i), self.kind(j)), (Kind::A, Kind::B) | (Kind::F, Kind::B) | (Kind::A, Kind::F))
    }

    fn is_k(&self, i: usize, j: usize) -> bool {
        self.kind(i) == self.kind(j)
    }

    /// First letter and the remaining word.
    fn split_first(&self, w: &Word) -> ((usize, usize), Word) {
        let mut r = w.clone();
        if let Some(pos) = w.y.iter().position(|&k| k > 0) {
            r.y[pos] -= 1;
            let (a, b) = (pos / self.p, pos % self.p);
            return ((self.p + self.m + a, b), r);
        }
        if w.x != 0 {
            let b = w.x.trailing_zeros();
            r.x &= !(1 << b);
            let (f, bd) = (b as usize / self.p, b as usize % self.p);
            return ((self.p + f, bd), r);
        }
        let b = w.z.trailing_zeros();
        r.z &= !(1 << b);
        let (a, f) = (b as usize / self.m, b as usize % self.m);
        ((self.p + self.m + a, self.p + f), r)
    }

    /// `E_ij · word` for a lowering letter, as signed PBW words.
    fn left_mul_word(&self, i: usize, j: usize, w: &Word) -> Vec<(Word, i64)> {
        match (self.kind(i), self.kind(j)) {
            (Kind::A, Kind::B) => {
                let mut r = w.clone();
                r.y[self.y_idx(i, j)] += 1;
                vec![(r, 1)]
            }
            (Kind::F, Kind::B) => {
                let b = self.x_bit(i, j);
                if w.x & (1 << b) != 0 {
                    return vec![];
                }
                let sign = if (w.x & ((1 << b) - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
                let mut r = w.clone();
                r.x |= 1 << b;
                vec![(r, sign)]
            }
            (Kind::A, Kind::F) => self.z_past_x(i - self.p - self.m, j - self.p, w.x, w),
            _ => unreachable!("not a lowering letter"),
        }
    }

    /// `Z_{αc} X^{xbits} Z^{z} Y^{y}` reordered; `xbits ⊆ w.x` is what remains to pass.
    fn z_past_x(&self, alpha: usize, c: usize, xbits: u32, w: &Word) -> Vec<(Word, i64)> {
        if xbits == 0 {
            let b = (alpha * self.m + c) as u32;
            if w.z & (1 << b) != 0 {
                return vec![];
            }
            let sign = if (w.z & ((1 << b) - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
            let mut r = w.clone();
            r.x = 0;
            r.z |= 1 << b;
            return vec![(r, sign)];
        }
        let b = xbits.trailing_zeros();
        let rest = xbits & !(1 << b);
        let (f, bd) = (b as usize / self.p, b as usize % self.p);
        let mut out = Vec::new();
        if f == c {
            // [Z_{αc}, X_{cβ̇}} = Y_{αβ̇}
            let mut r = w.clone();
            r.x = rest;
            r.y[alpha * self.p + bd] += 1;
            out.push((r, 1));
        }
        for (mut r, s) in self.z_past_x(alpha, c, rest, w) {
            r.x |= 1 << b;
            out.push((r, -s));
        }
        out
    }

    fn left_mul(&mut self, i: usize, j: usize, v: &Vector) -> Vector {
        let mut out = Vector::new();
        for (&k, c) in v {
            let (wid, u) = unkey(k);
            let w = self.words[wid as usize].clone();
            let terms = self.left_mul_word(i, j, &w);
            for (r, s) in terms {
                let id = self.intern(r);
                add(&mut out, key(id, u), c * Q::from_integer(s.into()));
            }
        }
        out
    }

    /// Super bracket `[E_ij, E_kl}` as a list of `(coefficient, (a, b))`.
    fn bracket(&self, i: usize, j: usize, k: usize, l: usize) -> Vec<(i64, (usize, usize))> {
        let mut out = Vec::new();
        if j == k {
            out.push((1, (i, l)));
        }
        if l == i {
            let s = (self.parity(i) + self.parity(j)) * (self.parity(k) + self.parity(l));
            out.push((if s % 2 == 0 { -1 } else { 1 }, (k, j)));
        }
        out
    }

    /// `E_ij` applied to a basis element.
    pub fn act(&mut self, i: usize, j: usize, k: u64) -> Rc<Vector> {
        if let Some(v) = self.act_memo.get(&(i as u8, j as u8, k)) {
            return v.clone();
        }
        let (wid, u) = unkey(k);
        let w = self.words[wid as usize].clone();
        let res: Vector = if self.is_lowering(i, j) {
            self.left_mul(i, j, &[(k, Q::one())].into())
        } else if w.is_empty() {
            let mut out = Vector::new();
            if self.is_k(i, j) {
                for (r, c) in self.u0.act(i, j, u).expect("same block") {
                    add(&mut out, key(wid, r), c);
                }
            }
            out
        } else {
            let ((i1, j1), rest) = self.split_first(&w);
            let rid = self.intern(rest);
            let rk = key(rid, u);
            let mut out = Vector::new();
            for (c, (a, b)) in self.bracket(i, j, i1, j1) {
                let v = self.act(a, b, rk);
                for (kk, x) in v.iter() {
                    add(&mut out, *kk, x * Q::from_integer(c.into()));
                }
            }
            let inner = self.act(i, j, rk);
            let s = (self.parity(i) + self.parity(j)) * (self.parity(i1) + self.parity(j1));
            let moved = self.left_mul(i1, j1, &inner);
            for (kk, x) in moved {
                add(&mut out, kk, if s % 2 == 0 { x } else { -x });
            }
            out
        };
        let rc = Rc::new(res);
        self.act_memo.insert((i as u8, j as u8, k), rc.clone());
        rc
    }

    /// Contravariant pairing of two basis elements, with
    /// `E_ij^* = (−1)^{c_i+c_j} E_ji`.
    pub fn gram(&mut self, a: u64, b: u64) -> Q {
        if let Some(g) = self.gram_memo.get(&(a, b)) {
            return g.clone();
        }
        let (wa, ua) = unkey(a);
        let (wb, ub) = unkey(b);
        let word_a = self.words[wa as usize].clone();
        let g = if word_a.is_empty() {
            if self.words[wb as usize].is_empty() {
                self.u0.gram(ua, ub)
            } else {
                Q::zero()
            }
        } else {
            let ((i1, j1), rest) = self.split_first(&word_a);
            let rk = key(self.intern(rest), ua);
            let v = self.act(j1, i1, b);
            let mut s = Q::zero();
            for (kk, c) in v.iter() {
                s += c * self.gram(rk, *kk);
            }
            if (self.cpar(i1) + self.cpar(j1)) % 2 == 1 {
                -s
            } else {
                s
            }
        };
        self.gram_memo.insert((a, b), g.clone());
        g
    }

    /// Pairing of two vectors.
    pub fn gram_vec(&mut self, u: &Vector, v: &Vector) -> Q {
        let mut s = Q::zero();
        for (a, x) in u {
            for (b, y) in v {
                let g = self.gram(*a, *b);
                if !g.is_zero() {
                    s += x * y * g;
                }
            }
        }
        s
    }

    /// Apply a product of generators, rightmost first.
    pub fn apply(&mut self, ops: &[(usize, usize)], v: &Vector) -> Vector {
        let mut cur = v.clone();
        for &(i, j) in ops.iter().rev() {
            let mut next = Vector::new();
            for (k, c) in &cur {
                let img = self.act(i, j, *k);
                for (kk, x) in img.iter() {
                    add(&mut next, *kk, c * x);
                }
            }
            cur = next;
        }
        cur
    }

    pub fn highest(&self) -> Vector {
        [(key(0, 0), Q::one())].into()
    }

    fn lowering_letters(&self) -> Vec<(usize, usize, usize)> {
        // (i, j, level contribution)
        let (p, m, n) = (self.p, self.m, self.n());
        let mut out = Vec::new();
        for i in p + m..n {
            for j in 0..p {
                out.push((i, j, 2));
            }
        }
        for i in p..p + m {
            for j in 0..p {
                out.push((i, j, 1));
            }
        }
        for i in p + m..n {
            for j in p..p + m {
                out.push((i, j, 1));
            }
        }
        out
    }

    /// All PBW words of level ≤ `cutoff`.
    fn words_up_to(&mut self, cutoff: usize) -> Vec<u32> {
        let (p, m, q) = (self.p, self.m, self.q);
        let ny = p * q;
        let mut ys: Vec<Vec<u8>> = vec![vec![0; ny]];
        // multisets of Y letters with 2·|y| ≤ cutoff
        for idx in 0..ny {
            let mut next = Vec::new();
            for y in &ys {
                let used: usize = y.iter().map(|&k| k as usize).sum();
                let mut k = 0;
                while 2 * (used + k) <= cutoff {
                    let mut y2 = y.clone();
                    y2[idx] = k as u8;
                    next.push(y2);
                    k += 1;
                }
            }
            ys = next;
        }
        let subsets = |nbits: usize, max: usize| -> Vec<u32> {
            (0u64..(1u64 << nbits)).filter(|s| s.count_ones() as usize <= max).map(|s| s as u32).collect()
        };
        let xs = subsets(m * p, cutoff);
        let zs = subsets(m * q, cutoff);
        let mut out = Vec::new();
        for y in &ys {
            let ly: usize = 2 * y.iter().map(|&k| k as usize).sum::<usize>();
            for &x in &xs {
                let lx = ly + x.count_ones() as usize;
                if lx > cutoff {
                    continue;
                }
                for &z in &zs {
                    if lx + z.count_ones() as usize <= cutoff {
                        out.push(self.intern(Word { y: y.clone(), x, z }));
                    }
                }
            }
        }
        out
    }

    fn word_weight(&self, w: &Word) -> Vec<i64> {
        let n = self.n();
        let mut wt = vec![0i64; n];
        let (p, m) = (self.p, self.m);
        for (pos, &k) in w.y.iter().enumerate() {
            wt[p + m + pos / p] += k as i64;
            wt[pos % p] -= k as i64;
        }
        for b in 0..32 {
            if w.x & (1 << b) != 0 {
                wt[p + b / p] += 1;
                wt[b % p] -= 1;
            }
            if w.z & (1 << b) != 0 {
                wt[p + m + b / m] += 1;
                wt[p + b % m] -= 1;
            }
        }
        wt
    }

    /// Basis keys grouped by weight offset from the highest weight.
    pub fn slices(&mut self, cutoff: usize) -> BTreeMap<(usize, Vec<i64>), Vec<u64>> {
        let words = self.words_up_to(cutoff);
        let u0w: Vec<Vec<i64>> = (0..self.u0.dim())
            .map(|u| {
                self.u0
                    .weight(u)
                    .iter()
                    .zip(&self.sub_weight)
                    .map(|(a, b)| crate::rational::to_i64(&(a - b)).expect("integral offsets"))
                    .collect()
            })
            .collect();
        let mut out: BTreeMap<(usize, Vec<i64>), Vec<u64>> = BTreeMap::new();
        for wid in words {
            let w = self.words[wid as usize].clone();
            let ww = self.word_weight(&w);
            for (u, uw) in u0w.iter().enumerate() {
                let total: Vec<i64> = ww.iter().zip(uw).map(|(a, b)| a + b).collect();
                out.entry((w.level(), total)).or_default().push(key(wid, u));
            }
        }
        out
    }

    pub fn describe(&self, k: u64) -> String {
        let (wid, u) = unkey(k);
        let w = &self.words[wid as usize];
        let mut parts = Vec::new();
        let (p, m) = (self.p, self.m);
        for (pos, &c) in w.y.iter().enumerate() {
            for _ in 0..c {
                parts.push(format!("E{},{}", p + m + pos / p + 1, pos % p + 1));
            }
        }
        for b in 0..32usize {
            if w.x & (1 << b) != 0 {
                parts.push(format!("E{},{}", p + b / p + 1, b % p + 1));
            }
        }
        for b in 0..32usize {
            if w.z & (1 << b) != 0 {
                parts.push(format!("E{},{}", p + m + b / m + 1, p + b % m + 1));
            }
        }
        parts.push(format!("u{u}"));
        parts.join(" ")
    }

    pub fn letters(&self) -> Vec<(usize, usize)> {
        self.lowering_letters().into_iter().map(|(i, j, _)| (i, j)).collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SliceReport {
    pub level: usize,
    /// offset from the highest weight
    pub weight: Vec<i64>,
    pub dim: usize,
    pub kernel_dim: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct NegativeWitness {
    pub level: usize,
    pub weight: Vec<i64>,
    /// `(PBW word ⊗ U_0 basis vector, coefficient)`
    pub vector: Vec<(String, String)>,
    pub norm: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct GramReport {
    pub cutoff: usize,
    pub positive_definite: bool,
    pub positive_semidefinite: bool,
    pub slices: Vec<SliceReport>,
    pub negative_witness: Option<NegativeWitness>,
}

impl GramReport {
    pub fn kernel_total(&self) -> usize {
        self.slices.iter().map(|s| s.kernel_dim).sum()
    }
}

/// Exact positivity scan of the induced module through level `cutoff`.
pub fn gram_positivity_weight(p: usize, m: usize, q: usize, weight: &[Q], cutoff: usize) -> Result<GramReport> {
    let mut md = InducedModule::new(p, m, q, weight)?;
    let slices = md.slices(cutoff);
    let mut reports = Vec::new();
    let mut witness = None;
    for ((level, wt), keys) in slices {
        let n = keys.len();
        let mut g = vec![vec![Q::zero(); n]; n];
        for a in 0..n {
            for b in a..n {
                let x = md.gram(keys[a], keys[b]);
                g[a][b] = x.clone();
                g[b][a] = x;
            }
        }
        let scan = ldl_scan(&g);
        reports.push(SliceReport { level, weight: wt.clone(), dim: n, kernel_dim: scan.kernel_dim() });
        if let Some((v, norm)) = scan.negative {
            let vector = keys
                .iter()
                .zip(&v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (md.describe(*k), fmt_q(c)))
                .collect();
            witness = Some(NegativeWitness { level, weight: wt, vector, norm: fmt_q(&norm) });
            break;
        }
    }
    let semi = witness.is_none();
    let pd = semi && reports.iter().all(|s| s.kernel_dim == 0);
    Ok(GramReport { cutoff, positive_definite: pd, positive_semidefinite: semi, slices: reports, negative_witness: witness })
}

pub fn gram_positivity(label: &RepLabel, cutoff: usize) -> Result<GramReport> {
    let w = label_weight(label)?;
    gram_positivity_weight(label.p, label.m, label.q, &w, cutoff)
}

pub fn gram_positivity_fundamental(w: &FundamentalWeight, p: usize, m: usize, q: usize, cutoff: usize) -> Result<GramReport> {
    if w.grading != Grading::supmq(p, m, q)? {
        return Err(Error::Misuse("weight must be given in the su(p,|m|q) grading".into()));
    }
    gram_positivity_weight(p, m, q, &w.m, cutoff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    #[test]
    fn form_is_symmetric() {
        // su(1,1|1) with a generic weight
        let w = vec![qf(-5, 2), q(1), qf(1, 2)];
        let mut md = InducedModule::new(1, 1, 1, &w).unwrap();
        let sl = md.slices(4);
        for keys in sl.values() {
            for &a in keys {
                for &b in keys {
                    assert_eq!(md.gram(a, b), md.gram(b, a));
                }
            }
        }
    }

    #[test]
    fn su11_discrete_series() {
        // weight [−β; 0]: norms of Y^k are k!·β(β+1)⋯(β+k−1)
        let r = gram_positivity_weight(1, 0, 1, &[qf(-3, 2), q(0)], 4).unwrap();
        assert!(r.positive_definite);
        let r = gram_positivity_weight(1, 0, 1, &[q(0), q(0)], 2).unwrap();
        assert!(r.positive_semidefinite && !r.positive_definite);
        let r = gram_positivity_weight(1, 0, 1, &[qf(1, 2), q(0)], 2).unwrap();
        assert!(r.negative_witness.is_some());
    }
}
