//! Explicit oscillator realisation of su(p,q|m) on a (deformed) Fock space.
//!
//! `E_ij = Σ_C ψ†_{iC} ψ_{jC}` with `ψ_B = b†`, `ψ†_B = −b`, `ψ_F = f`,
//! `ψ†_F = f†`, `ψ_A = a`, `ψ†_A = a†`. Bosonic creation operators are
//! multiplication by `x`; deformed blocks act as in [`GammaBlock`].

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::fgamma::{exponent_vectors, GammaBlock, LVec, Local};
use super::poly::{minor, Poly};
use crate::algebra_core::{FundamentalWeight, Grading};
use crate::diagrams::{realize, NonCompactYoungDiagram, Realization, Strategy};
use crate::classify::RepLabel;
use crate::error::{Error, Result};
use crate::rational::{fmt_q, q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Species {
    /// dotted bosons `b`
    B,
    F,
    /// undotted bosons `a`
    A,
}

/// One oscillator: species, flavour, colour and creation/annihilation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Osc {
    pub species: Species,
    pub flavour: usize,
    pub colour: usize,
    pub creation: bool,
}

#[derive(Debug, Clone)]
pub struct OscillatorSpec {
    pub p: usize,
    pub m: usize,
    pub q: usize,
    pub colours: usize,
    /// colours of the deformed `b` block, if any
    pub b_delta: Option<Vec<usize>>,
    /// colours of the deformed `a` block, if any
    pub a_delta: Option<Vec<usize>>,
    left: Option<GammaBlock>,
    right: Option<GammaBlock>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FockState {
    pub t_l: i32,
    pub t_r: i32,
    /// `b` modes at `α̇·P + C`, then `a` modes at `p·P + α·P + C`
    pub bos: Vec<u16>,
    /// fermion `(a, C)` at bit `a·P + C`
    pub ferm: u64,
}

pub type FockVector = BTreeMap<FockState, Q>;

fn fadd(v: &mut FockVector, s: FockState, c: Q) {
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

impl OscillatorSpec {
    pub fn new(p: usize, m: usize, q_: usize, colours: usize) -> OscillatorSpec {
        OscillatorSpec { p, m, q: q_, colours, b_delta: None, a_delta: None, left: None, right: None }
    }

    /// Deform the `b` block on the given `p` colours.
    pub fn with_left(mut self, gamma: Q, colours: Vec<usize>) -> Result<OscillatorSpec> {
        if colours.len() != self.p || colours.iter().any(|&c| c >= self.colours) {
            return Err(Error::Inadmissible("deformed b block must be p x p".into()));
        }
        self.left = Some(GammaBlock::new(self.p, gamma));
        self.b_delta = Some(colours);
        Ok(self)
    }

    /// Deform the `a` block on the given `q` colours.
    pub fn with_right(mut self, gamma: Q, colours: Vec<usize>) -> Result<OscillatorSpec> {
        if colours.len() != self.q || colours.iter().any(|&c| c >= self.colours) {
            return Err(Error::Inadmissible("deformed a block must be q x q".into()));
        }
        self.right = Some(GammaBlock::new(self.q, gamma));
        self.a_delta = Some(colours);
        Ok(self)
    }

    pub fn gamma_l(&self) -> Q {
        self.left.as_ref().map(|b| b.gamma.clone()).unwrap_or_else(Q::zero)
    }

    pub fn gamma_r(&self) -> Q {
        self.right.as_ref().map(|b| b.gamma.clone()).unwrap_or_else(Q::zero)
    }

    pub fn n(&self) -> usize {
        self.p + self.m + self.q
    }

    fn nbos(&self) -> usize {
        (self.p + self.q) * self.colours
    }

    pub fn vacuum(&self) -> FockState {
        FockState { t_l: 0, t_r: 0, bos: vec![0; self.nbos()], ferm: 0 }
    }

    fn mode(&self, s: Species, flavour: usize, colour: usize) -> usize {
        match s {
            Species::B => flavour * self.colours + colour,
            Species::A => (self.p + flavour) * self.colours + colour,
            Species::F => unreachable!("fermions have no bosonic mode"),
        }
    }

    /// Block, row and column of a bosonic mode inside a deformed block.
    fn block_of(&self, s: Species, flavour: usize, colour: usize) -> Option<(bool, usize, usize)> {
        let (cols, left) = match s {
            Species::B => (self.b_delta.as_ref()?, true),
            Species::A => (self.a_delta.as_ref()?, false),
            Species::F => return None,
        };
        cols.iter().position(|&c| c == colour).map(|k| (left, flavour, k))
    }

    fn block(&self, left: bool) -> &GammaBlock {
        if left {
            self.left.as_ref().expect("left block")
        } else {
            self.right.as_ref().expect("right block")
        }
    }

    fn block_modes(&self, left: bool) -> Vec<usize> {
        let (s, cols, n) = if left {
            (Species::B, self.b_delta.as_ref().expect("left block"), self.p)
        } else {
            (Species::A, self.a_delta.as_ref().expect("right block"), self.q)
        };
        let mut v = Vec::with_capacity(n * n);
        for r in 0..n {
            for &c in cols {
                v.push(self.mode(s, r, c));
            }
        }
        v
    }

    fn extract(&self, st: &FockState, left: bool) -> Local {
        let e = self.block_modes(left).iter().map(|&i| st.bos[i]).collect();
        (e, if left { st.t_l } else { st.t_r })
    }

    fn insert(&self, st: &FockState, left: bool, loc: &Local) -> FockState {
        let mut s = st.clone();
        for (k, &i) in self.block_modes(left).iter().enumerate() {
            s.bos[i] = loc.0[k];
        }
        if left {
            s.t_l = loc.1;
        } else {
            s.t_r = loc.1;
        }
        s
    }

    fn lift(&self, st: &FockState, left: bool, v: LVec, c: &Q, out: &mut FockVector) {
        for (loc, x) in v {
            fadd(out, self.insert(st, left, &loc), x * c);
        }
    }

    /// Total excitation degree; a deformed `t` counts as `n` quanta.
    pub fn degree(&self, st: &FockState) -> i64 {
        let b: i64 = st.bos.iter().map(|&x| x as i64).sum();
        b + st.ferm.count_ones() as i64 + self.p as i64 * st.t_l as i64 + self.q as i64 * st.t_r as i64
    }

    fn normalize(&self, st: FockState, c: Q, out: &mut FockVector) {
        let mut cur: FockVector = [(st, c)].into();
        for left in [true, false] {
            if (left && self.left.is_none()) || (!left && self.right.is_none()) {
                continue;
            }
            let blk = self.block(left);
            let mut next = FockVector::new();
            for (s, x) in cur {
                let (e, t) = self.extract(&s, left);
                let mut lv = LVec::new();
                blk.normalize_into(e, t, Q::one(), &mut lv);
                self.lift(&s, left, lv, &x, &mut next);
            }
            cur = next;
        }
        for (s, x) in cur {
            fadd(out, s, x);
        }
    }
}

fn fsign(bits: u64, b: u32) -> Q {
    if (bits & ((1u64 << b) - 1)).count_ones() % 2 == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

/// Action of a single oscillator on a Fock state.
pub fn deformed_action(spec: &OscillatorSpec, o: Osc, st: &FockState) -> FockVector {
    let mut out = FockVector::new();
    act_into(spec, o, st, &Q::one(), &mut out);
    out
}

fn act_into(spec: &OscillatorSpec, o: Osc, st: &FockState, c: &Q, out: &mut FockVector) {
    match o.species {
        Species::F => {
            let b = (o.flavour * spec.colours + o.colour) as u32;
            let occupied = st.ferm & (1u64 << b) != 0;
            if occupied == o.creation {
                return;
            }
            let mut s = st.clone();
            s.ferm ^= 1u64 << b;
            fadd(out, s, c * fsign(st.ferm, b));
        }
        sp => {
            if let Some((left, r, k)) = spec.block_of(sp, o.flavour, o.colour) {
                let blk = spec.block(left);
                let loc = spec.extract(st, left);
                let mut lv = LVec::new();
                if o.creation {
                    blk.raise(r, k, &loc, &Q::one(), &mut lv);
                } else {
                    blk.lower(r, k, &loc, &Q::one(), &mut lv);
                }
                spec.lift(st, left, lv, c, out);
            } else {
                let i = spec.mode(sp, o.flavour, o.colour);
                let mut s = st.clone();
                if o.creation {
                    s.bos[i] += 1;
                    spec.normalize(s, c.clone(), out);
                } else if s.bos[i] > 0 {
                    let e = s.bos[i];
                    s.bos[i] -= 1;
                    fadd(out, s, c * q(e as i64));
                }
            }
        }
    }
}

pub fn act_vec(spec: &OscillatorSpec, o: Osc, v: &FockVector) -> FockVector {
    let mut out = FockVector::new();
    for (s, c) in v {
        act_into(spec, o, s, c, &mut out);
    }
    out
}

fn species_of(spec: &OscillatorSpec, i: usize) -> (Species, usize) {
    if i < spec.p {
        (Species::B, i)
    } else if i < spec.p + spec.m {
        (Species::F, i - spec.p)
    } else {
        (Species::A, i - spec.p - spec.m)
    }
}

/// `E_ij` on a vector; indices in `su(p,|m|q)` order.
pub fn apply_generator(spec: &OscillatorSpec, i: usize, j: usize, v: &FockVector) -> FockVector {
    let (si, fi) = species_of(spec, i);
    let (sj, fj) = species_of(spec, j);
    let mut out = FockVector::new();
    for c in 0..spec.colours {
        // ψ_j: creation for B, annihilation otherwise
        let psi = Osc { species: sj, flavour: fj, colour: c, creation: sj == Species::B };
        let mid = act_vec(spec, psi, v);
        if mid.is_empty() {
            continue;
        }
        let psi_dag = Osc { species: si, flavour: fi, colour: c, creation: si != Species::B };
        let img = act_vec(spec, psi_dag, &mid);
        let sign = if si == Species::B { -Q::one() } else { Q::one() };
        for (s, x) in img {
            fadd(&mut out, s, x * &sign);
        }
    }
    out
}

/// Product of generators, rightmost applied first.
pub fn apply_word(spec: &OscillatorSpec, ops: &[(usize, usize)], v: &FockVector) -> FockVector {
    ops.iter().rev().fold(v.clone(), |acc, &(i, j)| apply_generator(spec, i, j, &acc))
}

/// Invariant inner product; blocks pair through [`GammaBlock::pair`].
pub fn inner_product(spec: &OscillatorSpec, u: &FockVector, v: &FockVector) -> Result<Q> {
    let mut s = Q::zero();
    for (a, x) in u {
        for (b, y) in v {
            let g = state_pair(spec, a, b)?;
            if !g.is_zero() {
                s += x * y * g;
            }
        }
    }
    Ok(s)
}

fn state_pair(spec: &OscillatorSpec, a: &FockState, b: &FockState) -> Result<Q> {
    if a.ferm != b.ferm {
        return Ok(Q::zero());
    }
    let mut skip = vec![false; a.bos.len()];
    let mut g = Q::one();
    for left in [true, false] {
        if (left && spec.left.is_none()) || (!left && spec.right.is_none()) {
            continue;
        }
        for i in spec.block_modes(left) {
            skip[i] = true;
        }
    }
    for i in 0..a.bos.len() {
        if skip[i] {
            continue;
        }
        if a.bos[i] != b.bos[i] {
            return Ok(Q::zero());
        }
        g *= Q::from_integer(crate::rational::factorial(a.bos[i] as u32));
    }
    for left in [true, false] {
        if (left && spec.left.is_none()) || (!left && spec.right.is_none()) {
            continue;
        }
        let blk = spec.block(left);
        g *= blk.pair(&spec.extract(a, left), &spec.extract(b, left))?;
        if g.is_zero() {
            break;
        }
    }
    Ok(g)
}

/// Sparse matrix of a generator on the truncated basis.
#[derive(Debug, Clone)]
pub struct GeneratorMatrix {
    pub basis: Vec<FockState>,
    /// column `k` is the image of `basis[k]`, restricted to the basis
    pub columns: Vec<Vec<(usize, Q)>>,
    /// columns whose image left the truncated basis
    pub overflow: Vec<bool>,
}

/// Normal-form basis of degree ≤ cutoff, ordered by (degree, t-powers, exponents).
pub fn fock_basis(spec: &OscillatorSpec, cutoff: usize) -> Vec<FockState> {
    let nb = spec.nbos();
    let nf = spec.m * spec.colours;
    let mut out = Vec::new();
    let tl_max = if spec.left.is_some() && spec.p > 0 { cutoff / spec.p } else { 0 };
    let tr_max = if spec.right.is_some() && spec.q > 0 { cutoff / spec.q } else { 0 };
    let bos_all = exponent_vectors(nb, cutoff);
    for fbits in 0u64..(1u64 << nf) {
        let fd = fbits.count_ones() as usize;
        if fd > cutoff {
            continue;
        }
        for tl in 0..=tl_max {
            for tr in 0..=tr_max {
                let base = fd + spec.p * tl + spec.q * tr;
                if base > cutoff {
                    continue;
                }
                for e in &bos_all {
                    let d: usize = e.iter().map(|&x| x as usize).sum();
                    if base + d > cutoff {
                        continue;
                    }
                    let st = FockState { t_l: tl as i32, t_r: tr as i32, bos: e.clone(), ferm: fbits };
                    let normal = [true, false].iter().all(|&left| {
                        if (left && spec.left.is_none()) || (!left && spec.right.is_none()) {
                            return true;
                        }
                        spec.block(left).is_normal(&spec.extract(&st, left).0)
                    });
                    if normal {
                        out.push(st);
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| (spec.degree(a), a).cmp(&(spec.degree(b), b)));
    out
}

pub fn generator_matrix(spec: &OscillatorSpec, i: usize, j: usize, cutoff: usize) -> GeneratorMatrix {
    let basis = fock_basis(spec, cutoff);
    let index: BTreeMap<&FockState, usize> = basis.iter().enumerate().map(|(k, s)| (s, k)).collect();
    let mut columns = Vec::with_capacity(basis.len());
    let mut overflow = Vec::with_capacity(basis.len());
    for s in &basis {
        let img = apply_generator(spec, i, j, &[(s.clone(), Q::one())].into());
        let mut col = Vec::new();
        let mut over = false;
        for (t, c) in img {
            match index.get(&t) {
                Some(&k) => col.push((k, c)),
                None => over = true,
            }
        }
        columns.push(col);
        overflow.push(over);
    }
    GeneratorMatrix { basis, columns, overflow }
}

/// Check `[E_ij, E_kl} = δ_jk E_il − (−1)^{|ij||kl|} δ_li E_kj` for all
/// generator pairs on every basis state of degree ≤ cutoff. Returns the
/// first failing quadruple.
pub fn check_commutators(spec: &OscillatorSpec, cutoff: usize) -> Option<(usize, usize, usize, usize)> {
    let n = spec.n();
    let par = |i: usize| (i >= spec.p && i < spec.p + spec.m) as usize;
    let basis = fock_basis(spec, cutoff);
    for (i, j, k, l) in itertools_quad(n) {
        let odd = (par(i) + par(j)) * (par(k) + par(l)) % 2 == 1;
        for s in &basis {
            let v: FockVector = [(s.clone(), Q::one())].into();
            let mut lhs = apply_word(spec, &[(i, j), (k, l)], &v);
            let sign = if odd { Q::one() } else { -Q::one() };
            for (st, c) in apply_word(spec, &[(k, l), (i, j)], &v) {
                fadd(&mut lhs, st, c * &sign);
            }
            let mut rhs = FockVector::new();
            if j == k {
                for (st, c) in apply_generator(spec, i, l, &v) {
                    fadd(&mut rhs, st, c);
                }
            }
            if l == i {
                for (st, c) in apply_generator(spec, k, j, &v) {
                    fadd(&mut rhs, st, if odd { c } else { -c });
                }
            }
            if lhs != rhs {
                return Some((i, j, k, l));
            }
        }
    }
    None
}

fn itertools_quad(n: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut v = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    v.push((i, j, k, l));
                }
            }
        }
    }
    v
}

/// Result of checking a highest-weight candidate.
#[derive(Debug, Clone, Serialize)]
pub struct HwsCheck {
    pub weights: Option<FundamentalWeight>,
    pub raised_to_zero: bool,
    /// first raising generator `(i, j)` (1-based) that does not annihilate
    pub failing: Option<(usize, usize)>,
}

/// Apply every `E_ij` with `i < j` and read the Cartan eigenvalues.
pub fn verify_hws(spec: &OscillatorSpec, v: &FockVector) -> Result<HwsCheck> {
    if v.is_empty() {
        return Err(Error::Invalid("zero vector".into()));
    }
    let n = spec.n();
    for i in 0..n {
        for j in i + 1..n {
            if !apply_generator(spec, i, j, v).is_empty() {
                return Ok(HwsCheck { weights: None, raised_to_zero: false, failing: Some((i + 1, j + 1)) });
            }
        }
    }
    let (s0, c0) = v.iter().next().expect("nonempty");
    let mut m = Vec::with_capacity(n);
    for i in 0..n {
        let img = apply_generator(spec, i, i, v);
        let lam = img.get(s0).cloned().unwrap_or_else(Q::zero) / c0;
        let proportional = img.len() <= v.len()
            && v.iter().all(|(s, c)| img.get(s).cloned().unwrap_or_else(Q::zero) == c * &lam);
        if !proportional {
            return Err(Error::Inconsistent(format!("E_{0}{0} does not act diagonally", i + 1)));
        }
        m.push(lam);
    }
    let g = Grading::supmq(spec.p, spec.m, spec.q)?;
    Ok(HwsCheck { weights: Some(FundamentalWeight::new(g, m)?), raised_to_zero: true, failing: None })
}

/// Multiply a state by a polynomial in creation operators of one bosonic species.
fn apply_poly(spec: &OscillatorSpec, s: Species, f: &Poly, v: &FockVector) -> FockVector {
    let nflav = if s == Species::B { spec.p } else { spec.q };
    let mut out = FockVector::new();
    for (e, c) in &f.terms {
        let mut cur = v.clone();
        for fl in 0..nflav {
            for col in 0..spec.colours {
                for _ in 0..e[fl * spec.colours + col] {
                    cur = act_vec(spec, Osc { species: s, flavour: fl, colour: col, creation: true }, &cur);
                }
            }
        }
        for (st, x) in cur {
            fadd(&mut out, st, x * c);
        }
    }
    out
}

fn creation(spec: &OscillatorSpec, s: Species, flavour: usize, colour: usize, v: &FockVector) -> FockVector {
    act_vec(spec, Osc { species: s, flavour, colour, creation: true }, v)
}

/// Oscillator spec and `U_0` highest vector for a realised label.
///
/// Colours: `F_Δ = 0..|F_Δ|` (all fermions), `A ⊆ F_Δ` from colour 0, the
/// `τ` columns next, then the `b` colours; for `m = 0` the `a` colours come
/// first and the `b` colours right after.
pub fn build_u0(label: &RepLabel, r: &Realization) -> Result<(OscillatorSpec, FockVector)> {
    let d = realize(label, Strategy::Explicit(r.clone()), false)?;
    build_u0_diagram(&d)
}

pub fn build_u0_diagram(d: &NonCompactYoungDiagram) -> Result<(OscillatorSpec, FockVector)> {
    d.check_admissible()?;
    let l = &d.label;
    let r = &d.realization;
    let (p, m, q_) = (l.p, l.m, l.q);
    let colours = r.colours as usize;
    let fdelta = r.fdelta as usize;
    let tau1 = l.tau.first() as usize;
    let na = d.a_delta();
    let nb = d.b_delta();
    let a_cols: Vec<usize> = (0..na).collect();
    let b_start = if m == 0 { na } else { fdelta + tau1 };
    let b_cols: Vec<usize> = (b_start..b_start + nb).collect();
    let mut spec = OscillatorSpec::new(p, m, q_, colours);
    if !r.gamma_r.is_zero() {
        spec = spec.with_right(r.gamma_r.clone(), a_cols.clone())?;
    }
    if !r.gamma_l.is_zero() {
        spec = spec.with_left(r.gamma_l.clone(), b_cols.clone())?;
    }
    let mut v: FockVector = [(spec.vacuum(), Q::one())].into();
    for c in 0..fdelta {
        for a in 0..m {
            v = creation(&spec, Species::F, a, c, &v);
        }
    }
    for k in 0..tau1 {
        let len = l.tau.parts().iter().filter(|&&t| t as usize > k).count();
        for a in 0..len {
            v = creation(&spec, Species::F, a, fdelta + k, &v);
        }
    }
    let nva = q_ * colours;
    for y in 1..=d.label.h_r() {
        let k = l.mu_r.get(y - 1) - l.mu_r.get(y);
        if k == 0 {
            continue;
        }
        let rows: Vec<usize> = (0..y).collect();
        let f = minor(nva, &rows, &a_cols[..y], |fl, c| fl * colours + c).pow(k);
        v = apply_poly(&spec, Species::A, &f, &v);
    }
    let nvb = p * colours;
    for y in 1..=d.label.h_l() {
        let k = l.mu_l.get(y - 1) - l.mu_l.get(y);
        if k == 0 {
            continue;
        }
        let rows: Vec<usize> = (0..y).map(|i| p - 1 - i).collect();
        let f = minor(nvb, &rows, &b_cols[..y], |fl, c| fl * colours + c).pow(k);
        v = apply_poly(&spec, Species::B, &f, &v);
    }
    if v.is_empty() {
        return Err(Error::Inconsistent("highest vector vanished".into()));
    }
    Ok((spec, v))
}

/// Eigenvalue of `½(N_a − N_b)` on a HWS of an su(2,2) sector.
pub fn helicity(spec: &OscillatorSpec, v: &FockVector) -> Result<Q> {
    let chk = verify_hws(spec, v)?;
    let w = chk.weights.ok_or_else(|| Error::Invalid("not a highest-weight state".into()))?;
    // N_a = Σ E_αα, N_b = −Σ E_α̇α̇ − pP
    let na: Q = w.m[spec.p + spec.m..].iter().sum();
    let nb: Q = -w.m[..spec.p].iter().sum::<Q>() - q((spec.p * spec.colours) as i64);
    Ok((na - nb) / q(2))
}

/// Whether `det_{αβ̇} E_{αβ̇}` vanishes on the truncated module (needs p = q = 2).
pub fn is_massless(spec: &OscillatorSpec, cutoff: usize) -> Result<bool> {
    if spec.p != 2 || spec.q != 2 {
        return Err(Error::Dims("masslessness is defined for the su(2,2) sector".into()));
    }
    let a0 = spec.p + spec.m;
    let (a1, a2) = (a0, a0 + 1);
    for s in fock_basis(spec, cutoff) {
        let v: FockVector = [(s, Q::one())].into();
        let mut d = apply_word(spec, &[(a1, 0), (a2, 1)], &v);
        for (st, c) in apply_word(spec, &[(a1, 1), (a2, 0)], &v) {
            fadd(&mut d, st, -c);
        }
        if !d.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Human-readable state, e.g. `f(1,1) a(1,1)^2 t_R^0`.
pub fn describe_state(spec: &OscillatorSpec, s: &FockState) -> String {
    let mut parts = Vec::new();
    for a in 0..spec.m {
        for c in 0..spec.colours {
            if s.ferm & (1 << (a * spec.colours + c)) != 0 {
                parts.push(format!("f({},{})", a + 1, c + 1));
            }
        }
    }
    for (sp, name, nfl) in [(Species::A, "a", spec.q), (Species::B, "b", spec.p)] {
        for fl in 0..nfl {
            for c in 0..spec.colours {
                let e = s.bos[spec.mode(sp, fl, c)];
                if e == 1 {
                    parts.push(format!("{name}({},{})", fl + 1, c + 1));
                } else if e > 1 {
                    parts.push(format!("{name}({},{})^{e}", fl + 1, c + 1));
                }
            }
        }
    }
    if spec.left.is_some() {
        parts.push(format!("tL^{}", s.t_l));
    }
    if spec.right.is_some() {
        parts.push(format!("tR^{}", s.t_r));
    }
    if parts.is_empty() {
        "|0>".into()
    } else {
        parts.join(" ")
    }
}

pub fn describe_vector(spec: &OscillatorSpec, v: &FockVector) -> String {
    v.iter().map(|(s, c)| format!("{}·{}", fmt_q(c), describe_state(spec, s))).collect::<Vec<_>>().join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su2_and_su11_algebra() {
        assert_eq!(check_commutators(&OscillatorSpec::new(0, 0, 2, 1), 4), None);
        assert_eq!(check_commutators(&OscillatorSpec::new(0, 1, 1, 1), 3), None);
        let s = OscillatorSpec::new(1, 1, 1, 1);
        let m = generator_matrix(&s, 1, 2, 3);
        let sq: Vec<_> = m
            .basis
            .iter()
            .map(|b| apply_word(&s, &[(1, 2), (1, 2)], &[(b.clone(), Q::one())].into()))
            .collect();
        assert!(sq.iter().all(|v| v.is_empty()));
    }

    #[test]
    fn deformed_commutators() {
        let s = OscillatorSpec::new(1, 1, 1, 1).with_right(crate::rational::qf(-1, 2), vec![0]).unwrap();
        assert_eq!(check_commutators(&s, 3), None);
        let s = OscillatorSpec::new(0, 0, 2, 2).with_right(crate::rational::qf(1, 3), vec![0, 1]).unwrap();
        assert_eq!(check_commutators(&s, 3), None);
    }
}
