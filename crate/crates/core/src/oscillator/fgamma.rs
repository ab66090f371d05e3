//! The deformed module `F_γ` of one square `n × n` block of bosonic
//! oscillators, where the determinant may act at a non-integer power.
//!
//! A state is a monomial `x^e` times `t^k` with `t` standing for `det^{γ+k}`.
//! Normal form uses `det − t` as a Gröbner basis with leading term the
//! diagonal product `D = x_{11}⋯x_{nn}`: no stored monomial is divisible by `D`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{permutations, Poly};
use crate::algebra_core::Partition;
use crate::error::{Error, Result};
use crate::rational::{factorial, q, Q};

/// `(exponents of x_{rk} at r·n + k, t-power)`.
pub type Local = (Vec<u16>, i32);
pub type LVec = BTreeMap<Local, Q>;

pub fn ladd(v: &mut LVec, s: Local, c: Q) {
    if c.is_zero() {
        return;
    }
    match v.entry(s) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

type ApplyKey = (Vec<u16>, i32, Local);

#[derive(Debug)]
pub struct GammaBlock {
    pub n: usize,
    pub gamma: Q,
    perms: Vec<(Vec<usize>, i64)>,
    det_pows: RefCell<Vec<(Poly, Q)>>,
    apply_memo: RefCell<HashMap<ApplyKey, Rc<LVec>>>,
}

impl Clone for GammaBlock {
    fn clone(&self) -> GammaBlock {
        GammaBlock::new(self.n, self.gamma.clone())
    }
}

impl GammaBlock {
    pub fn new(n: usize, gamma: Q) -> GammaBlock {
        GammaBlock { n, gamma, perms: permutations(n), det_pows: RefCell::new(vec![]), apply_memo: RefCell::new(HashMap::new()) }
    }

    fn idx(&self, r: usize, k: usize) -> usize {
        r * self.n + k
    }

    pub fn is_normal(&self, e: &[u16]) -> bool {
        self.n == 0 || (0..self.n).any(|k| e[self.idx(k, k)] == 0)
    }

    pub fn normalize_into(&self, e: Vec<u16>, t: i32, c: Q, out: &mut LVec) {
        if self.is_normal(&e) {
            ladd(out, (e, t), c);
            return;
        }
        let n = self.n;
        let mut e2 = e;
        for k in 0..n {
            e2[k * n + k] -= 1;
        }
        for (perm, sign) in &self.perms {
            if perm.iter().enumerate().all(|(k, &r)| k == r) {
                continue;
            }
            let mut e3 = e2.clone();
            for (k, &r) in perm.iter().enumerate() {
                e3[r * n + k] += 1;
            }
            self.normalize_into(e3, t, -&c * q(*sign), out);
        }
        self.normalize_into(e2, t + 1, c, out);
    }

    /// Multiplication by `x_{rk}`.
    pub fn raise(&self, r: usize, k: usize, s: &Local, c: &Q, out: &mut LVec) {
        let mut e = s.0.clone();
        e[self.idx(r, k)] += 1;
        self.normalize_into(e, s.1, c.clone(), out);
    }

    /// `a_{rk} = ∂/∂x_{rk} + (∂det/∂x_{rk})(γ/t + ∂/∂t)`; on `x^e t^m` the
    /// second part gives `(γ+m)·cofactor·x^e·t^{m−1}`.
    pub fn lower(&self, r: usize, k: usize, s: &Local, c: &Q, out: &mut LVec) {
        let i = self.idx(r, k);
        let ex = s.0[i];
        if ex > 0 {
            let mut e = s.0.clone();
            e[i] -= 1;
            ladd(out, (e, s.1), c * q(ex as i64));
        }
        let g = &self.gamma + q(s.1 as i64);
        if g.is_zero() {
            return;
        }
        let n = self.n;
        for (perm, sign) in &self.perms {
            if perm[k] != r {
                continue;
            }
            let mut e = s.0.clone();
            for (j, &rr) in perm.iter().enumerate() {
                if j != k {
                    e[rr * n + j] += 1;
                }
            }
            self.normalize_into(e, s.1 - 1, c * &g * q(*sign), out);
        }
    }

    pub fn lower_vec(&self, r: usize, k: usize, v: &LVec) -> LVec {
        let mut out = LVec::new();
        for (s, c) in v {
            self.lower(r, k, s, c, &mut out);
        }
        out
    }

    pub fn raise_vec(&self, r: usize, k: usize, v: &LVec) -> LVec {
        let mut out = LVec::new();
        for (s, c) in v {
            self.raise(r, k, s, c, &mut out);
        }
        out
    }

    /// `Δ = det(a)`; the lowerings commute so the order is immaterial.
    pub fn delta(&self, v: &LVec) -> LVec {
        let mut out = LVec::new();
        for (perm, sign) in &self.perms {
            let mut cur = v.clone();
            for (k, &r) in perm.iter().enumerate() {
                cur = self.lower_vec(r, k, &cur);
            }
            for (s, c) in cur {
                ladd(&mut out, s, c * q(*sign));
            }
        }
        out
    }

    /// `Δ† = det(x)`: on normal forms just `t ↦ t+1`.
    pub fn delta_dagger(&self, v: &LVec) -> LVec {
        v.iter().map(|((e, t), c)| ((e.clone(), t + 1), c.clone())).collect()
    }

    /// Polynomial in the block variables applied to `t^m`, in normal form.
    pub fn poly_state(&self, f: &Poly, m: i32) -> LVec {
        let mut out = LVec::new();
        for (e, c) in &f.terms {
            self.normalize_into(e.clone(), m, c.clone(), &mut out);
        }
        out
    }

    fn det_pow(&self, k: usize) -> (Poly, Q) {
        let mut cache = self.det_pows.borrow_mut();
        let nv = self.n * self.n;
        if cache.is_empty() {
            cache.push((Poly::one(nv), Q::one()));
        }
        while cache.len() <= k {
            let det = super::poly::minor(nv, &(0..self.n).collect::<Vec<_>>(), &(0..self.n).collect::<Vec<_>>(), |r, c| r * self.n + c);
            let next = cache.last().expect("seeded").0.mul(&det);
            let norm = next.fock_pair(&next);
            cache.push((next, norm));
        }
        cache[k].clone()
    }

    /// Projection onto `t^0`: `φ(h t^{−k}) = ⟨det^k, h⟩ / ‖det^k‖²`.
    fn phi(&self, s: &Local) -> Q {
        let (e, t) = s;
        if *t > 0 {
            return Q::zero();
        }
        if *t == 0 {
            return if e.iter().all(|&x| x == 0) { Q::one() } else { Q::zero() };
        }
        let (d, norm) = self.det_pow((-t) as usize);
        let c = d.coeff(e);
        if c.is_zero() {
            return Q::zero();
        }
        let w: BigInt = e.iter().map(|&x| factorial(x as u32)).product();
        c * Q::from_integer(w) / norm
    }

    /// `Δ^{tk} a^{e} ▷ g`.
    fn apply_adjoint(&self, e: &[u16], tk: i32, g: &Local) -> Rc<LVec> {
        let key = (e.to_vec(), tk, g.clone());
        if let Some(v) = self.apply_memo.borrow().get(&key) {
            return v.clone();
        }
        let res = if tk > 0 {
            let inner = self.apply_adjoint(e, tk - 1, g);
            self.delta(&inner)
        } else if let Some(i) = e.iter().position(|&x| x > 0) {
            let mut e2 = e.to_vec();
            e2[i] -= 1;
            let inner = self.apply_adjoint(&e2, 0, g);
            self.lower_vec(i / self.n, i % self.n, &inner)
        } else {
            [(g.clone(), Q::one())].into()
        };
        let rc = Rc::new(res);
        self.apply_memo.borrow_mut().insert(key, rc.clone());
        rc
    }

    /// The invariant form; at least one argument must lie in `F^{0+}`.
    pub fn pair(&self, a: &Local, b: &Local) -> Result<Q> {
        let (a, b) = if a.1 >= 0 {
            (a, b)
        } else if b.1 >= 0 {
            (b, a)
        } else {
            return Err(Error::Misuse("inner product needs one argument with t-power >= 0".into()));
        };
        let v = self.apply_adjoint(&a.0, a.1, b);
        Ok(v.iter().fold(Q::zero(), |s, (st, c)| s + c * self.phi(st)))
    }

    pub fn pair_vec(&self, u: &LVec, v: &LVec) -> Result<Q> {
        let mut s = Q::zero();
        for (a, x) in u {
            for (b, y) in v {
                s += x * y * self.pair(a, b)?;
            }
        }
        Ok(s)
    }

    /// Normal-form basis of `F^{0+}` with `deg x + n·t ≤ cutoff`.
    pub fn basis(&self, cutoff: usize) -> Vec<Local> {
        let nv = self.n * self.n;
        let mut out = Vec::new();
        for e in exponent_vectors(nv, cutoff) {
            if !self.is_normal(&e) {
                continue;
            }
            let d: usize = e.iter().map(|&x| x as usize).sum();
            let mut t = 0;
            while d + self.n * t <= cutoff {
                out.push((e.clone(), t as i32));
                t += 1;
                if self.n == 0 {
                    break;
                }
            }
        }
        out.sort_by_key(|(e, t)| (e.iter().map(|&x| x as usize).sum::<usize>() + self.n * *t as usize, *t, e.clone()));
        out
    }

    /// Leading-minor product `∏_y det_{y×y}^{μ_y − μ_{y+1}}` times `t^m`.
    pub fn minor_state(&self, mu: &Partition, m: i32) -> LVec {
        let nv = self.n * self.n;
        let mut f = Poly::one(nv);
        for y in 1..=self.n {
            let k = mu.get(y - 1) - mu.get(y);
            if k > 0 {
                let rows: Vec<usize> = (0..y).collect();
                f = f.mul(&super::poly::minor(nv, &rows, &rows, |r, c| r * self.n + c).pow(k));
            }
        }
        self.poly_state(&f, m)
    }
}

/// All exponent vectors of length `n` with total degree ≤ `cutoff`.
pub fn exponent_vectors(n: usize, cutoff: usize) -> Vec<Vec<u16>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for e in &out {
            let used: usize = e.iter().map(|&x: &u16| x as usize).sum();
            for k in 0..=(cutoff - used) {
                let mut e2 = e.clone();
                e2.push(k as u16);
                next.push(e2);
            }
        }
        out = next;
    }
    out
}

/// `∏_{i=1}^{P} (μ̂_i + γ + n + 1)` with shifted weights `μ̂_i = μ_i + P − i`.
pub fn capelli_norm_factor(mu: &Partition, gamma: &Q, n: i64, colours: usize) -> Result<Q> {
    if mu.height() > colours {
        return Err(Error::Invalid("partition taller than the number of colours".into()));
    }
    Ok((1..=colours).fold(Q::one(), |acc, i| {
        acc * (q(mu.get(i - 1) as i64 + (colours - i) as i64 + n + 1) + gamma)
    }))
}

/// `Δ†Δ` equals the column-ordered `det(E_ij + (P−i)δ_ij)` with
/// `E_ij = Σ_A x_{iA} a_{jA}`, checked on every basis state of degree ≤ cutoff.
pub fn capelli_identity_check(colours: usize, gamma: &Q, cutoff: usize) -> bool {
    let blk = GammaBlock::new(colours, gamma.clone());
    let p = colours;
    let e_op = |i: usize, j: usize, v: &LVec| -> LVec {
        let mut out = LVec::new();
        for a in 0..p {
            let low = blk.lower_vec(j, a, v);
            for (s, c) in blk.raise_vec(i, a, &low) {
                ladd(&mut out, s, c);
            }
        }
        if i == j {
            let shift = q((p - 1 - i) as i64);
            for (s, c) in v {
                ladd(&mut out, s.clone(), c * &shift);
            }
        }
        out
    };
    for s in blk.basis(cutoff) {
        let v: LVec = [(s, Q::one())].into();
        let lhs = blk.delta_dagger(&blk.delta(&v));
        let mut rhs = LVec::new();
        for (perm, sign) in permutations(p) {
            // column order: M_{σ(1)1} ⋯ M_{σ(P)P}, rightmost applied first
            let mut cur = v.clone();
            for k in (0..p).rev() {
                cur = e_op(perm[k], k, &cur);
            }
            for (st, c) in cur {
                ladd(&mut rhs, st, c * q(sign));
            }
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    #[test]
    fn delta_on_reference_state() {
        let b = GammaBlock::new(2, qf(1, 2));
        let v = b.delta(&[((vec![0; 4], 0), Q::one())].into());
        let expect: LVec = [((vec![0; 4], -1), qf(3, 4))].into();
        assert_eq!(v, expect);
    }

    #[test]
    fn norms_of_t() {
        let g = qf(1, 3);
        let b = GammaBlock::new(2, g.clone());
        let t1 = (vec![0; 4], 1);
        assert_eq!(b.pair(&t1, &t1).unwrap(), (&g + q(2)) * (&g + q(1)));
        let plain = GammaBlock::new(2, Q::zero());
        assert_eq!(plain.pair(&t1, &t1).unwrap(), q(2));
    }

    #[test]
    fn capelli_small() {
        assert!(capelli_identity_check(2, &Q::zero(), 3));
        assert!(capelli_identity_check(2, &qf(1, 2), 3));
    }
}
