//! Non-compact Young diagrams and their relatives.
//!
//! Geometry: the hook corner sits at the origin. Fermionic column `a ∈ 1..=m`
//! covers `x ∈ [a−1, a]` between `y = top_a − P` and `y = top_a` with
//! `top_a = |F_Δ| + τ_a`. Right row `k ∈ 1..=q` covers `y ∈ [k−1, k]` and
//! reaches `μ_R^k + γ_R` beyond `x = m`. Left row `j ∈ 1..=p` covers
//! `y ∈ [−j, −j+1]` and reaches `μ_L^j + γ_L` to the left of `x = 0`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra_core::{FundamentalWeight, Grading, IndexKind, Partition, SuperShape};
use crate::classify::RepLabel;
use crate::duality::{build_weight_lattice, path_of, plaquette_check, Step};
use crate::error::{Error, Result};
use crate::rational::{fmt_q, q, Q};

/// Colour bookkeeping of an oscillator realization.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Realization {
    #[serde(rename = "gamma_L", with = "crate::rational::serde_q")]
    pub gamma_l: Q,
    #[serde(rename = "gamma_R", with = "crate::rational::serde_q")]
    pub gamma_r: Q,
    /// |F_Δ|
    pub fdelta: i64,
    /// number of colours
    #[serde(rename = "P")]
    pub colours: i64,
}

impl Realization {
    pub fn new(gamma_l: Q, gamma_r: Q, fdelta: i64, colours: i64) -> Realization {
        Realization { gamma_l, gamma_r, fdelta, colours }
    }

    /// Undeformed realization with `P` colours.
    pub fn plain(fdelta: i64, colours: i64) -> Realization {
        Realization::new(Q::zero(), Q::zero(), fdelta, colours)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NonCompactYoungDiagram {
    #[serde(flatten)]
    pub label: RepLabel,
    #[serde(flatten)]
    pub realization: Realization,
}

impl NonCompactYoungDiagram {
    pub fn p(&self) -> usize {
        self.label.p
    }

    pub fn q(&self) -> usize {
        self.label.q
    }

    pub fn m(&self) -> usize {
        self.label.m
    }

    pub fn colours(&self) -> i64 {
        self.realization.colours
    }

    /// |A_Δ|: colours carrying the right deformation.
    pub fn a_delta(&self) -> usize {
        if self.realization.gamma_r.is_zero() {
            self.label.h_r()
        } else {
            self.label.q
        }
    }

    /// |B_Δ|: colours carrying the left deformation.
    pub fn b_delta(&self) -> usize {
        if self.realization.gamma_l.is_zero() {
            self.label.h_l()
        } else {
            self.label.p
        }
    }

    pub fn tops(&self) -> Vec<i64> {
        self.label.tau.parts().iter().map(|&t| self.realization.fdelta + t as i64).collect()
    }

    pub fn lowers(&self) -> Vec<i64> {
        self.tops().iter().map(|t| t - self.realization.colours).collect()
    }

    /// `μ_R^k + γ_R`.
    pub fn right_rows(&self) -> Vec<Q> {
        self.label.mu_r.parts().iter().map(|&x| q(x as i64) + &self.realization.gamma_r).collect()
    }

    /// `μ_L^j + γ_L`.
    pub fn left_rows(&self) -> Vec<Q> {
        self.label.mu_l.parts().iter().map(|&x| q(x as i64) + &self.realization.gamma_l).collect()
    }

    /// β's implied by the realization; must reproduce the label.
    fn implied_betas(&self) -> (Q, Q) {
        implied_betas(self.p(), self.q(), self.m(), &self.label.tau, &self.realization)
    }

    /// Realization invariants: γ > −1, disjoint colour sets fit into P.
    pub fn check_admissible(&self) -> Result<()> {
        let r = &self.realization;
        let minus_one = q(-1);
        if r.gamma_l <= minus_one || r.gamma_r <= minus_one {
            return Err(Error::Inadmissible("gamma must exceed -1".into()));
        }
        if r.fdelta < 0 || r.colours < 0 {
            return Err(Error::Inadmissible("negative colour count".into()));
        }
        if (self.q() == 0 && !r.gamma_r.is_zero()) || (self.p() == 0 && !r.gamma_l.is_zero()) {
            return Err(Error::Inadmissible("deformation on an empty bosonic block".into()));
        }
        let (a, b) = (self.a_delta() as i64, self.b_delta() as i64);
        if self.m() == 0 {
            if a + b > r.colours {
                return Err(Error::Inadmissible(format!("|A|+|B| = {} exceeds P = {}", a + b, r.colours)));
            }
            return Ok(());
        }
        if a > r.fdelta {
            return Err(Error::Inadmissible(format!("|A_Δ| = {a} exceeds |F_Δ| = {}", r.fdelta)));
        }
        let tau1 = self.label.tau.first() as i64;
        if r.fdelta + tau1 + b > r.colours {
            return Err(Error::Inadmissible(format!(
                "|F_Δ| + τ_1 + |B_Δ| = {} exceeds P = {}",
                r.fdelta + tau1 + b,
                r.colours
            )));
        }
        Ok(())
    }

    fn check_label_consistent(&self) -> Result<()> {
        let (bl, br) = self.implied_betas();
        if bl != self.label.beta_l || br != self.label.beta_r {
            return Err(Error::Inadmissible(format!(
                "realization gives (beta_L, beta_R) = ({}, {}), label has ({}, {})",
                fmt_q(&bl),
                fmt_q(&br),
                fmt_q(&self.label.beta_l),
                fmt_q(&self.label.beta_r)
            )));
        }
        Ok(())
    }

    /// Weight in the natural `su(p,|m|q)` grading:
    /// `[−μ_L^rev − P − γ_L ; |F_Δ| + τ ; μ_R + γ_R]`.
    pub fn supmq_weight(&self) -> Result<FundamentalWeight> {
        let g = self.label.grading()?;
        let mut m = Vec::with_capacity(g.len());
        let pq = q(self.colours());
        for x in self.left_rows().iter().rev() {
            m.push(-x - &pq);
        }
        for t in self.tops() {
            m.push(q(t));
        }
        m.extend(self.right_rows());
        FundamentalWeight::new(g, m)
    }
}

fn implied_betas(p: usize, q_: usize, m: usize, tau: &Partition, r: &Realization) -> (Q, Q) {
    if m == 0 {
        if p == 0 || q_ == 0 {
            return (Q::zero(), Q::zero());
        }
        return (Q::zero(), q(r.colours) + &r.gamma_l + &r.gamma_r);
    }
    let br = if q_ > 0 { &r.gamma_r + q(r.fdelta) } else { Q::zero() };
    let bl = if p > 0 { &r.gamma_l + q(r.colours - r.fdelta - tau.first() as i64) } else { Q::zero() };
    (bl, br)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strategy {
    /// γ's in (−1, 0], smallest |F_Δ| then smallest P.
    MinimalP,
    Explicit(Realization),
}

fn ceil_i64(x: &Q) -> i64 {
    x.ceil().to_integer().to_i64().expect("beta fits in i64")
}

/// Attach a realization to a label. With `allow_nonunitary` the colour
/// constraints are skipped so that lattices of non-unitary labels can be built.
pub fn realize(label: &RepLabel, strategy: Strategy, allow_nonunitary: bool) -> Result<NonCompactYoungDiagram> {
    label.validate()?;
    let r = match strategy {
        Strategy::Explicit(r) => r,
        Strategy::MinimalP => minimal_realization(label, allow_nonunitary)?,
    };
    let d = NonCompactYoungDiagram { label: label.clone(), realization: r };
    d.check_label_consistent()?;
    if !allow_nonunitary {
        d.check_admissible()?;
    }
    Ok(d)
}

fn minimal_realization(label: &RepLabel, allow: bool) -> Result<Realization> {
    let (p, q_, m) = (label.p, label.q, label.m);
    let tau1 = label.tau.first() as i64;
    if m == 0 {
        if p == 0 || q_ == 0 {
            // compact: enough colours for the covariant or contravariant diagram
            return Ok(Realization::plain(0, label.h_l().max(label.h_r()) as i64));
        }
        let beta = label.beta();
        let (hl, hr) = (label.h_l() as i64, label.h_r() as i64);
        if beta.is_integer() {
            let pp = ceil_i64(&beta);
            if pp >= hl + hr || allow {
                return Ok(Realization::plain(0, pp.max(0)));
            }
            return Err(Error::Inadmissible(format!("beta = {} below h_L + h_R", fmt_q(&beta))));
        }
        let pp = ceil_i64(&beta);
        let g = &beta - q(pp);
        if q_ as i64 + hl <= pp || allow {
            return Ok(Realization::new(Q::zero(), g, 0, pp.max(0)));
        }
        if p as i64 + hr <= pp {
            return Ok(Realization::new(g, Q::zero(), 0, pp));
        }
        return Err(Error::Inadmissible(format!("no colour layout for beta = {}", fmt_q(&beta))));
    }
    let (fdelta, gamma_r) = if q_ > 0 {
        let mut f = ceil_i64(&label.beta_r);
        if allow {
            f = f.max(0);
        }
        (f, &label.beta_r - q(f))
    } else {
        (0, Q::zero())
    };
    let (colours, gamma_l) = if p > 0 {
        let c = ceil_i64(&label.beta_l);
        (c + fdelta + tau1, &label.beta_l - q(c))
    } else {
        (fdelta + tau1, Q::zero())
    };
    Ok(Realization::new(gamma_l, gamma_r, fdelta, colours))
}

/// Walk the path of `g` across the diagram and read one weight entry per segment.
pub fn read_weight(d: &NonCompactYoungDiagram, g: &Grading) -> Result<FundamentalWeight> {
    let (shape, steps) = path_of(g)?;
    if (shape.p, shape.q, shape.m) != (d.p(), d.q(), d.m()) {
        return Err(Error::Dims(format!(
            "grading has (p,q,m)=({},{},{}), diagram ({},{},{})",
            shape.p,
            shape.q,
            shape.m,
            d.p(),
            d.q(),
            d.m()
        )));
    }
    let tops = d.tops();
    let lowers = d.lowers();
    let right = d.right_rows();
    let left = d.left_rows();
    let r = &d.realization;
    let int_r = r.gamma_r.is_integer();
    let int_l = r.gamma_l.is_integer();
    let pp = q(r.colours);
    let p = d.p() as i64;
    let (mut x, mut y) = (0usize, -p);
    let mut out = Vec::with_capacity(steps.len());
    for st in steps {
        match st {
            Step::H => {
                let (top, low) = (tops[x], lowers[x]);
                let lam = if y >= 0 {
                    if int_r {
                        (top - y).max(0)
                    } else {
                        top - y
                    }
                } else if int_l {
                    top - y.max(low)
                } else {
                    top - y
                };
                out.push(q(lam));
                x += 1;
            }
            Step::V => {
                if y >= 0 {
                    let k = (y + 1) as usize;
                    let cover = if int_r {
                        tops[x..].iter().filter(|&&t| t >= k as i64).count()
                    } else {
                        tops.len() - x
                    };
                    out.push(q(cover as i64) + &right[k - 1]);
                } else {
                    let j = (-y) as usize;
                    let cover = if int_l {
                        lowers[..x].iter().filter(|&&l| l <= -(j as i64)).count()
                    } else {
                        x
                    };
                    out.push(-&pp - &left[j - 1] - q(cover as i64));
                }
                y += 1;
            }
        }
    }
    debug_assert!(shape.kinds.iter().filter(|k| **k != IndexKind::F).count() == d.p() + d.q());
    FundamentalWeight::new(g.clone(), out)
}

fn moved(d: &NonCompactYoungDiagram, dl: i64, dr: i64, df: i64, dp: i64) -> Result<NonCompactYoungDiagram> {
    let r = &d.realization;
    let out = NonCompactYoungDiagram {
        label: d.label.clone(),
        realization: Realization::new(
            &r.gamma_l + q(dl),
            &r.gamma_r + q(dr),
            r.fdelta + df,
            r.colours + dp,
        ),
    };
    out.check_label_consistent()?;
    out.check_admissible()
        .map_err(|e| Error::Inadmissible(format!("move not permitted: {e}")))?;
    Ok(out)
}

/// `(γ_L, P) ↦ (γ_L − 1, P + 1)`.
pub fn iso_move_lower(d: &NonCompactYoungDiagram) -> Result<NonCompactYoungDiagram> {
    moved(d, -1, 0, 0, 1)
}

/// `(γ_R, |F_Δ|, P) ↦ (γ_R − 1, |F_Δ| + 1, P + 1)`.
pub fn iso_move_upper(d: &NonCompactYoungDiagram) -> Result<NonCompactYoungDiagram> {
    moved(d, 0, -1, 1, 1)
}

pub fn iso_move_lower_inverse(d: &NonCompactYoungDiagram) -> Result<NonCompactYoungDiagram> {
    moved(d, 1, 0, 0, -1)
}

pub fn iso_move_upper_inverse(d: &NonCompactYoungDiagram) -> Result<NonCompactYoungDiagram> {
    moved(d, 0, 1, -1, -1)
}

/// Staircase profile `U(c)` of the column `x ∈ [c−1, c]`; the lower boundary is `U − P`.
/// `U(c) = P` for `c < offset` and `U(c) = 0` beyond the stored window.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtendedYoungDiagram {
    #[serde(rename = "P")]
    pub colours: i64,
    pub offset: i64,
    pub upper: Vec<i64>,
}

impl ExtendedYoungDiagram {
    fn normalized(colours: i64, offset: i64, upper: Vec<i64>) -> ExtendedYoungDiagram {
        if colours == 0 {
            return ExtendedYoungDiagram { colours, offset: 0, upper: Vec::new() };
        }
        let lead = upper.iter().take_while(|&&u| u == colours).count();
        let mut rest = upper[lead..].to_vec();
        while rest.last() == Some(&0) {
            rest.pop();
        }
        ExtendedYoungDiagram { colours, offset: offset + lead as i64, upper: rest }
    }

    pub fn upper_at(&self, c: i64) -> i64 {
        if c < self.offset {
            self.colours
        } else {
            self.upper.get((c - self.offset) as usize).copied().unwrap_or(0)
        }
    }

    pub fn lower_at(&self, c: i64) -> i64 {
        self.upper_at(c) - self.colours
    }

    fn right_end(&self) -> i64 {
        self.offset + self.upper.len() as i64
    }
}

fn int_gamma(g: &Q, side: &str) -> Result<i64> {
    if !g.is_integer() || g.is_negative() {
        return Err(Error::Invalid(format!("extension needs integer gamma_{side} >= 0, got {}", fmt_q(g))));
    }
    Ok(g.to_integer().to_i64().expect("small gamma"))
}

pub fn extend(d: &NonCompactYoungDiagram) -> Result<ExtendedYoungDiagram> {
    let gl = int_gamma(&d.realization.gamma_l, "L")?;
    let gr = int_gamma(&d.realization.gamma_r, "R")?;
    let left: Vec<i64> = d.label.mu_l.parts().iter().map(|&x| x as i64 + gl).collect();
    let right: Vec<i64> = d.label.mu_r.parts().iter().map(|&x| x as i64 + gr).collect();
    let pp = d.colours();
    let m = d.m() as i64;
    let lmax = left.first().copied().unwrap_or(0);
    let rmax = right.first().copied().unwrap_or(0);
    let tops = d.tops();
    let lo = 1 - lmax;
    let hi = m + rmax;
    let upper: Vec<i64> = (lo..=hi)
        .map(|c| {
            if c <= 0 {
                pp - left.iter().filter(|&&l| l >= 1 - c).count() as i64
            } else if c <= m {
                tops[(c - 1) as usize]
            } else {
                right.iter().filter(|&&l| l >= c - m).count() as i64
            }
        })
        .collect();
    if upper.windows(2).any(|w| w[0] < w[1]) || upper.first().is_some_and(|&u| u > pp) {
        return Err(Error::Invalid("diagram boundaries are not a staircase".into()));
    }
    Ok(ExtendedYoungDiagram::normalized(pp, lo, upper))
}

/// Assemble a diagram from its boundary data.
fn assemble(
    p: usize,
    q_: usize,
    m: usize,
    tops: &[i64],
    right: &[Q],
    left: &[Q],
    colours: i64,
) -> Result<NonCompactYoungDiagram> {
    let fdelta = tops.last().copied().unwrap_or(0);
    let mut tau = Vec::with_capacity(m);
    for t in tops {
        let v = t - fdelta;
        if v < 0 {
            return Err(Error::Invalid("column tops must weakly decrease".into()));
        }
        tau.push(v as u32);
    }
    let gamma_r = right.last().cloned().unwrap_or_else(Q::zero);
    let gamma_l = left.last().cloned().unwrap_or_else(Q::zero);
    let mu_r = Partition::from_rationals(&right.iter().map(|x| x - &gamma_r).collect::<Vec<_>>())?;
    let mu_l = Partition::from_rationals(&left.iter().map(|x| x - &gamma_l).collect::<Vec<_>>())?;
    let r = Realization::new(gamma_l, gamma_r, if m == 0 { 0 } else { fdelta }, colours);
    let tau = Partition::new(tau)?;
    let (beta_l, beta_r) = implied_betas(p, q_, m, &tau, &r);
    let label = RepLabel { p, q: q_, m, mu_l, tau, mu_r, beta_l, beta_r };
    label.validate()?;
    Ok(NonCompactYoungDiagram { label, realization: r })
}

/// Cut the extended diagram with the `(p, q, m)` hook at the origin.
pub fn carve(e: &ExtendedYoungDiagram, p: usize, q_: usize, m: usize) -> Result<NonCompactYoungDiagram> {
    let mi = m as i64;
    let pp = e.colours;
    for c in (mi + 1)..=e.right_end().max(mi + 1) {
        if e.upper_at(c) > q_ as i64 {
            return Err(Error::Invalid(format!("column {c} rises above the q = {q_} rows of the hook")));
        }
    }
    for c in e.offset.min(0)..=0 {
        if pp - e.upper_at(c) > p as i64 {
            return Err(Error::Invalid(format!("column {c} drops below the p = {p} rows of the hook")));
        }
    }
    let tops: Vec<i64> = (1..=mi).map(|c| e.upper_at(c)).collect();
    let right: Vec<Q> = (1..=q_ as i64)
        .map(|k| q((mi + 1..=e.right_end().max(mi)).filter(|&c| e.upper_at(c) >= k).count() as i64))
        .collect();
    let left: Vec<Q> = (1..=p as i64)
        .map(|j| q((e.offset.min(0)..=0).filter(|&c| pp - e.upper_at(c) >= j).count() as i64))
        .collect();
    assemble(p, q_, m, &tops, &right, &left, pp)
}

/// Columns left of the split are stored as depths of the lower boundary,
/// those right of it as heights of the upper boundary.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct THookDiagram {
    pub p: usize,
    pub q: usize,
    pub m: usize,
    pub split: usize,
    /// `P − top_a` for `a ≤ split`
    pub lower_depths: Vec<i64>,
    /// `top_a` for `a > split`
    pub upper_tops: Vec<i64>,
    #[serde(with = "crate::rational::serde_q_vec")]
    pub right_rows: Vec<Q>,
    #[serde(with = "crate::rational::serde_q_vec")]
    pub left_rows: Vec<Q>,
}

pub fn to_thook(d: &NonCompactYoungDiagram, split: usize) -> Result<THookDiagram> {
    if split > d.m() {
        return Err(Error::Invalid(format!("split {split} outside 0..={}", d.m())));
    }
    let tops = d.tops();
    Ok(THookDiagram {
        p: d.p(),
        q: d.q(),
        m: d.m(),
        split,
        lower_depths: tops[..split].iter().map(|t| d.colours() - t).collect(),
        upper_tops: tops[split..].to_vec(),
        right_rows: d.right_rows(),
        left_rows: d.left_rows(),
    })
}

pub fn from_thook(t: &THookDiagram, colours: i64) -> Result<NonCompactYoungDiagram> {
    let mut tops: Vec<i64> = t.lower_depths.iter().map(|dpt| colours - dpt).collect();
    tops.extend_from_slice(&t.upper_tops);
    if tops.len() != t.m {
        return Err(Error::Dims("T-hook column count differs from m".into()));
    }
    assemble(t.p, t.q, t.m, &tops, &t.right_rows, &t.left_rows, colours)
}

/// Compact diagram on the `(q, m)` fat hook with the shortening plaquettes shaded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FatHook {
    pub q: usize,
    pub m: usize,
    pub tau: Partition,
    pub mu: Partition,
    #[serde(with = "crate::rational::serde_q")]
    pub beta_r: Q,
    pub tops: Vec<i64>,
    #[serde(with = "crate::rational::serde_q_vec")]
    pub rows: Vec<Q>,
    /// `(column a, row k)`, both from 1
    pub shaded: Vec<(usize, usize)>,
}

pub fn fat_hook(tau: &Partition, mu: &Partition, beta_r: &Q, q_: usize, m: usize) -> Result<FatHook> {
    let label = RepLabel {
        p: 0,
        q: q_,
        m,
        mu_l: Partition::empty(0),
        tau: tau.clone(),
        mu_r: mu.clone(),
        beta_l: Q::zero(),
        beta_r: beta_r.clone(),
    };
    let d = realize(&label, Strategy::MinimalP, true)?;
    let shaded = if m > 0 && q_ > 0 {
        let lat = build_weight_lattice(&d.supmq_weight()?)?;
        plaquette_check(&lat).zeros.iter().map(|&(x, y)| (x + 1, y + 1)).collect()
    } else {
        Vec::new()
    };
    Ok(FatHook {
        q: q_,
        m,
        tau: tau.clone(),
        mu: mu.clone(),
        beta_r: beta_r.clone(),
        tops: d.tops(),
        rows: d.right_rows(),
        shaded,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

/// Cells of a drawing: `(c, r)` is the unit square `[c−1, c] × [r−1, r]`.
struct Canvas {
    /// filled fraction in (0, 1]; partial cells of right rows are anchored left,
    /// those of left rows anchored right
    cells: Vec<((i64, i64), Q, bool)>,
    shaded: BTreeSet<(i64, i64)>,
}

impl Canvas {
    fn add_row(&mut self, r: i64, start: i64, len: &Q, rightwards: bool) {
        if !len.is_positive() {
            return;
        }
        let n = len.ceil().to_integer().to_i64().expect("row length fits");
        for i in 0..n {
            let frac = (len - q(i)).min(q(1));
            let c = if rightwards { start + 1 + i } else { start - i };
            self.cells.push(((c, r), frac, rightwards));
        }
    }

    fn bounds(&self) -> Option<(i64, i64, i64, i64)> {
        let keys = self.cells.iter().map(|(k, _, _)| *k).chain(self.shaded.iter().copied());
        let mut b: Option<(i64, i64, i64, i64)> = None;
        for (c, r) in keys {
            b = Some(match b {
                None => (c, c, r, r),
                Some((c0, c1, r0, r1)) => (c0.min(c), c1.max(c), r0.min(r), r1.max(r)),
            });
        }
        b
    }

    fn occupied(&self) -> std::collections::BTreeMap<(i64, i64), (Q, bool, bool)> {
        let mut map = std::collections::BTreeMap::new();
        for (k, f, dir) in &self.cells {
            map.insert(*k, (f.clone(), *dir, false));
        }
        for k in &self.shaded {
            map.entry(*k).or_insert((q(1), true, true)).2 = true;
        }
        map
    }

    fn ascii(&self) -> String {
        let Some((c0, c1, r0, r1)) = self.bounds() else {
            return String::new();
        };
        let occ = self.occupied();
        let ncol = (c1 - c0 + 1) as usize;
        let nrow = (r1 - r0 + 1) as usize;
        // cell (i, j): canvas row i from the top, column j from the left
        let filled = |i: i64, j: i64| -> bool {
            if i < 0 || j < 0 || i >= nrow as i64 || j >= ncol as i64 {
                return false;
            }
            occ.contains_key(&(c0 + j, r1 - i))
        };
        let mut out = String::new();
        for vi in 0..=nrow as i64 {
            // border line
            let mut line = String::new();
            for vj in 0..=ncol as i64 {
                let up = filled(vi - 1, vj - 1) || filled(vi - 1, vj);
                let down = filled(vi, vj - 1) || filled(vi, vj);
                let left = filled(vi - 1, vj - 1) || filled(vi, vj - 1);
                let right = filled(vi - 1, vj) || filled(vi, vj);
                line.push(junction(up, down, left, right));
                if vj < ncol as i64 {
                    let h = filled(vi - 1, vj) || filled(vi, vj);
                    line.push_str(if h { "───" } else { "   " });
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
            if vi == nrow as i64 {
                break;
            }
            let mut line = String::new();
            for vj in 0..=ncol as i64 {
                let v = filled(vi, vj - 1) || filled(vi, vj);
                line.push(if v { '│' } else { ' ' });
                if vj < ncol as i64 {
                    let body = match occ.get(&(c0 + vj, r1 - vi)) {
                        None => "   ",
                        Some((_, _, true)) => "░░░",
                        Some((f, _, false)) if *f < q(1) => " · ",
                        Some(_) => "   ",
                    };
                    line.push_str(body);
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    fn svg(&self) -> String {
        const CELL: i64 = 10;
        let Some((c0, c1, r0, r1)) = self.bounds() else {
            return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\"></svg>\n".into();
        };
        let w = (c1 - c0 + 1) * CELL;
        let h = (r1 - r0 + 1) * CELL;
        let mut out = String::new();
        let _ = writeln!(out, "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">");
        for ((c, r), (frac, rightwards, shaded)) in self.occupied() {
            let x = (c - c0) * CELL;
            let y = (r1 - r) * CELL;
            let width = crate::rational::to_f64(&(frac * q(CELL)));
            let xs = if rightwards { x as f64 } else { x as f64 + CELL as f64 - width };
            let fill = if shaded { "#bbbbbb" } else { "#9ecae1" };
            let _ = writeln!(
                out,
                "  <rect x=\"{xs}\" y=\"{y}\" width=\"{width}\" height=\"{CELL}\" fill=\"{fill}\" stroke=\"#000000\" stroke-width=\"0.5\"/>"
            );
        }
        out.push_str("</svg>\n");
        out
    }
}

fn junction(up: bool, down: bool, left: bool, right: bool) -> char {
    match (up, down, left, right) {
        (false, false, false, false) => ' ',
        (true, true, true, true) => '┼',
        (true, true, true, false) => '┤',
        (true, true, false, true) => '├',
        (true, false, true, true) => '┴',
        (false, true, true, true) => '┬',
        (true, false, true, false) => '┘',
        (true, false, false, true) => '└',
        (false, true, true, false) => '┐',
        (false, true, false, true) => '┌',
        (true, true, false, false) | (true, false, false, false) | (false, true, false, false) => '│',
        (false, false, true, true) | (false, false, true, false) | (false, false, false, true) => '─',
    }
}

fn diagram_canvas(d: &NonCompactYoungDiagram) -> Canvas {
    let mut cv = Canvas { cells: Vec::new(), shaded: BTreeSet::new() };
    for (a, (top, low)) in d.tops().iter().zip(d.lowers()).enumerate() {
        for r in (low + 1)..=*top {
            cv.cells.push(((a as i64 + 1, r), q(1), true));
        }
    }
    let m = d.m() as i64;
    for (k, len) in d.right_rows().iter().enumerate() {
        cv.add_row(k as i64 + 1, m, len, true);
    }
    for (j, len) in d.left_rows().iter().enumerate() {
        cv.add_row(-(j as i64), 0, len, false);
    }
    cv
}

fn fat_hook_canvas(f: &FatHook) -> Canvas {
    let mut cv = Canvas { cells: Vec::new(), shaded: BTreeSet::new() };
    for (a, top) in f.tops.iter().enumerate() {
        for r in 1..=*top {
            cv.cells.push(((a as i64 + 1, r), q(1), true));
        }
    }
    for (k, len) in f.rows.iter().enumerate() {
        cv.add_row(k as i64 + 1, f.m as i64, len, true);
    }
    for &(a, k) in &f.shaded {
        cv.shaded.insert((a as i64, k as i64));
    }
    cv
}

pub fn render(d: &NonCompactYoungDiagram, format: RenderFormat) -> String {
    let cv = diagram_canvas(d);
    match format {
        RenderFormat::Ascii => cv.ascii(),
        RenderFormat::Svg => cv.svg(),
    }
}

pub fn render_fat_hook(f: &FatHook, format: RenderFormat) -> String {
    let cv = fat_hook_canvas(f);
    match format {
        RenderFormat::Ascii => cv.ascii(),
        RenderFormat::Svg => cv.svg(),
    }
}

/// Supmq-grading sanity helper used by callers that only hold a shape.
pub fn shape_matches(d: &NonCompactYoungDiagram, g: &Grading) -> bool {
    SuperShape::of(g).is_ok_and(|s| (s.p, s.q, s.m) == (d.p(), d.q(), d.m()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::parse_grading;

    fn label(p: usize, q_: usize, m: usize, ml: &[u32], t: &[u32], mr: &[u32], bl: Q, br: Q) -> RepLabel {
        RepLabel::new(p, q_, m, ml.to_vec(), t.to_vec(), mr.to_vec(), bl, br).unwrap()
    }

    #[test]
    fn minimal_realizations() {
        let ym = label(2, 2, 4, &[0, 0], &[1, 1, 0, 0], &[0, 0], q(0), q(0));
        let d = realize(&ym, Strategy::MinimalP, false).unwrap();
        assert_eq!(d.realization, Realization::plain(0, 1));
        let g = crate::rational::qf(-1, 2);
        let chiral = label(2, 2, 4, &[0, 0], &[0, 0, 0, 0], &[3, 0], q(0), q(2) + &g);
        let d = realize(&chiral, Strategy::MinimalP, false).unwrap();
        assert_eq!(d.realization, Realization::new(q(0), g.clone(), 2, 2));
        let p4 = label(2, 2, 4, &[1, 0], &[0, 0, 0, 0], &[2, 0], q(2) + &g, q(2) + &g);
        let d = realize(&p4, Strategy::MinimalP, false).unwrap();
        assert_eq!((d.realization.fdelta, d.realization.colours), (2, 4));
    }

    #[test]
    fn yang_mills_read_off() {
        let ym = label(2, 2, 4, &[0, 0], &[1, 1, 0, 0], &[0, 0], q(0), q(0));
        let d = realize(&ym, Strategy::MinimalP, false).unwrap();
        let w = read_weight(&d, &parse_grading("su(2,2|4)").unwrap()).unwrap();
        assert_eq!(w.m, [-1, -1, 2, 0, 0, 0, 0, 0].iter().map(|&x| q(x)).collect::<Vec<_>>());
        let e = extend(&d).unwrap();
        let small = carve(&e, 1, 1, 2).unwrap();
        assert_eq!(small.label.compact(), "[0,0,0;0,1]");
        assert_eq!(carve(&e, 2, 2, 4).unwrap(), d);
    }

    #[test]
    fn lower_move_example() {
        let l = label(1, 2, 2, &[0], &[0, 0], &[0, 0], crate::rational::qf(3, 2), q(2));
        let d = realize(&l, Strategy::Explicit(Realization::new(crate::rational::qf(1, 2), q(0), 2, 3)), false).unwrap();
        let moved = iso_move_lower(&d).unwrap();
        assert_eq!(moved.realization, Realization::new(crate::rational::qf(-1, 2), q(0), 2, 4));
        assert_eq!(iso_move_lower_inverse(&moved).unwrap(), d);
        assert!(iso_move_upper(&d).is_err());
    }
}
