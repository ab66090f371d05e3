//! Odd reflections between adjacent indices, the lattice of weights over all
//! Kac–Dynkin paths, and the plaquette sign constraints.
//!
//! Lattice coordinates: fermionic columns `x ∈ 0..m`, bosonic rows `y ∈ 0..p+q`
//! counted from the bottom. The lowest `p` rows belong to the bosons whose
//! c-parity differs from the fermions'. A path starts at `(0,0)`; a fermion
//! index is a step right, a boson index a step up.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra_core::{FundamentalWeight, Grading, IndexKind, SuperShape};
use crate::error::{Error, Result};
use crate::rational::Q;

/// Apply the odd reflection at node `node` (between indices `node` and `node+1`).
///
/// The two entries swap places. Unless they sum to zero, the entry that moves
/// earlier gains one and the entry that moves later loses one.
pub fn duality_step(w: &FundamentalWeight, node: usize) -> Result<FundamentalWeight> {
    let g = &w.grading;
    if node + 1 >= g.len() {
        return Err(Error::Invalid(format!("node {node} out of range for length {}", g.len())));
    }
    if g.p(node) == g.p(node + 1) {
        return Err(Error::NotFermionic(node));
    }
    let x = &w.m[node];
    let y = &w.m[node + 1];
    let mut m = w.m.clone();
    if (x + y).is_zero() {
        m[node] = y.clone();
        m[node + 1] = x.clone();
    } else {
        m[node] = y + Q::from_integer(1.into());
        m[node + 1] = x - Q::from_integer(1.into());
    }
    FundamentalWeight::new(g.swapped(node), m)
}

/// `(left ν, top λ) ↦ (bottom λ, right ν)` across one plaquette.
fn forward(left: &Q, top: &Q) -> (Q, Q) {
    if (left + top).is_zero() {
        (top.clone(), left.clone())
    } else {
        (top + Q::from_integer(1.into()), left - Q::from_integer(1.into()))
    }
}

/// Inverse of [`forward`]; the edge sum is preserved so the branch is recoverable.
fn backward(bottom: &Q, right: &Q) -> (Q, Q) {
    if (bottom + right).is_zero() {
        (right.clone(), bottom.clone())
    } else {
        (right + Q::from_integer(1.into()), bottom - Q::from_integer(1.into()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightLattice {
    pub p: usize,
    pub q: usize,
    pub m: usize,
    /// `h[y][x]`: λ on the horizontal edge of column `x` at height `y`, `y ∈ 0..=p+q`.
    #[serde(with = "q_matrix")]
    pub h: Vec<Vec<Q>>,
    /// `v[y][x]`: ν on the vertical edge of row `y` at abscissa `x`, `x ∈ 0..=m`.
    #[serde(with = "q_matrix")]
    pub v: Vec<Vec<Q>>,
}

mod q_matrix {
    use super::Q;
    use crate::rational::{fmt_q, parse_q};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(rows: &[Vec<Q>], s: S) -> Result<S::Ok, S::Error> {
        let txt: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(fmt_q).collect()).collect();
        txt.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Q>>, D::Error> {
        let txt: Vec<Vec<String>> = Vec::deserialize(d)?;
        txt.iter()
            .map(|r| r.iter().map(|x| parse_q(x).map_err(serde::de::Error::custom)).collect())
            .collect()
    }
}

impl WeightLattice {
    pub fn rows(&self) -> usize {
        self.p + self.q
    }

    /// `λ + ν` of a plaquette read on its top and left edges.
    pub fn plaquette_sum(&self, x: usize, y: usize) -> Q {
        &self.h[y + 1][x] + &self.v[y][x]
    }

    /// Whether the plaquette satisfies the duality rule.
    pub fn plaquette_consistent(&self, x: usize, y: usize) -> bool {
        let (b, r) = forward(&self.v[y][x], &self.h[y + 1][x]);
        b == self.h[y][x] && r == self.v[y][x + 1]
    }
}

/// Horizontal (fermion) or vertical (boson) step of a lattice path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    H,
    V,
}

/// Path shape of a grading: dims and steps. Rejected unless every
/// lower-row boson precedes every upper-row boson.
pub fn path_of(g: &Grading) -> Result<(SuperShape, Vec<Step>)> {
    let shape = SuperShape::of(g)?;
    if !shape.is_lattice_path() {
        return Err(Error::NotAPath(format!("{g}: bosons of the two c-classes interleave")));
    }
    let steps = shape.kinds.iter().map(|k| if *k == IndexKind::F { Step::H } else { Step::V }).collect();
    Ok((shape, steps))
}

struct Partial {
    rows: usize,
    m: usize,
    h: Vec<Vec<Option<Q>>>,
    v: Vec<Vec<Option<Q>>>,
}

impl Partial {
    fn set(slot: &mut Option<Q>, val: Q, what: &str) -> Result<bool> {
        match slot {
            Some(old) if *old != val => Err(Error::Inconsistent(format!("{what}: {old} vs {val}"))),
            Some(_) => Ok(false),
            None => {
                *slot = Some(val);
                Ok(true)
            }
        }
    }

    /// Derive the missing edges of plaquette `(x,y)` if possible; returns whether anything changed.
    fn relax(&mut self, x: usize, y: usize) -> Result<bool> {
        let left = self.v[y][x].clone();
        let top = self.h[y + 1][x].clone();
        let bottom = self.h[y][x].clone();
        let right = self.v[y][x + 1].clone();
        let mut changed = false;
        if let (Some(l), Some(t)) = (&left, &top) {
            let (b, r) = forward(l, t);
            changed |= Self::set(&mut self.h[y][x], b, "bottom edge")?;
            changed |= Self::set(&mut self.v[y][x + 1], r, "right edge")?;
        } else if let (Some(b), Some(r)) = (&bottom, &right) {
            let (l, t) = backward(b, r);
            changed |= Self::set(&mut self.v[y][x], l, "left edge")?;
            changed |= Self::set(&mut self.h[y + 1][x], t, "top edge")?;
        }
        Ok(changed)
    }
}

/// Build the full lattice by propagating odd reflections from `w`'s own path.
/// All lattice-path gradings of su(p,|m|q): fermions anywhere, the `p`
/// bosons (c even) before the `q` bosons (c odd).
pub fn lattice_gradings(p: usize, m: usize, q: usize) -> Vec<Grading> {
    let n = p + m + q;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let mut seen = 0;
        let blocks: Vec<(usize, u8, u8)> = (0..n)
            .map(|i| {
                if mask >> i & 1 == 1 {
                    (1, 1, 1)
                } else {
                    seen += 1;
                    (1, 0, u8::from(seen > p))
                }
            })
            .collect();
        out.push(Grading::from_blocks(&blocks).expect("unit blocks always form a grading"));
    }
    out
}

pub fn build_weight_lattice(w: &FundamentalWeight) -> Result<WeightLattice> {
    build_weight_lattice_with_order(w, None)
}

/// As [`build_weight_lattice`], visiting plaquettes in the given order
/// (a permutation of `0..m·(p+q)`, plaquette `x + m·y`).
pub fn build_weight_lattice_with_order(w: &FundamentalWeight, order: Option<&[usize]>) -> Result<WeightLattice> {
    let (shape, steps) = path_of(&w.grading)?;
    let (p, q, m) = (shape.p, shape.q, shape.m);
    let rows = p + q;
    let mut part = Partial { rows, m, h: vec![vec![None; m]; rows + 1], v: vec![vec![None; m + 1]; rows] };
    let (mut x, mut y) = (0usize, 0usize);
    for (val, st) in w.m.iter().zip(&steps) {
        match st {
            Step::H => {
                part.h[y][x] = Some(val.clone());
                x += 1;
            }
            Step::V => {
                part.v[y][x] = Some(val.clone());
                y += 1;
            }
        }
    }
    let default: Vec<usize> = (0..m * rows).collect();
    let order = order.unwrap_or(&default);
    if order.len() != m * rows || !crate::algebra_core::is_permutation(order, m * rows) {
        return Err(Error::Invalid("plaquette order must be a permutation".into()));
    }
    loop {
        let mut changed = false;
        for &k in order {
            changed |= part.relax(k % m, k / m)?;
        }
        if !changed {
            break;
        }
    }
    let unwrap = |rows: Vec<Vec<Option<Q>>>| -> Result<Vec<Vec<Q>>> {
        rows.into_iter()
            .map(|r| r.into_iter().map(|e| e.ok_or_else(|| Error::Inconsistent("unreached edge".into()))).collect())
            .collect()
    };
    let lat = WeightLattice { p, q, m, h: unwrap(part.h)?, v: unwrap(part.v)? };
    debug_assert_eq!(part.rows * part.m, rows * m);
    for yy in 0..rows {
        for xx in 0..m {
            if !lat.plaquette_consistent(xx, yy) {
                return Err(Error::Inconsistent(format!("plaquette ({xx},{yy}) violates the duality rule")));
            }
        }
    }
    Ok(lat)
}

/// Read the weight along the path of `target`.
pub fn weight_in_grading(lat: &WeightLattice, target: &Grading) -> Result<FundamentalWeight> {
    let (shape, steps) = path_of(target)?;
    if (shape.p, shape.q, shape.m) != (lat.p, lat.q, lat.m) {
        return Err(Error::Dims(format!(
            "target has (p,q,m)=({},{},{}), lattice ({},{},{})",
            shape.p, shape.q, shape.m, lat.p, lat.q, lat.m
        )));
    }
    let (mut x, mut y) = (0usize, 0usize);
    let mut m = Vec::with_capacity(steps.len());
    for st in steps {
        match st {
            Step::H => {
                m.push(lat.h[y][x].clone());
                x += 1;
            }
            Step::V => {
                m.push(lat.v[y][x].clone());
                y += 1;
            }
        }
    }
    FundamentalWeight::new(target.clone(), m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaquetteReport {
    pub p: usize,
    pub q: usize,
    pub m: usize,
    /// `signs[y][x]` ∈ {−1, 0, 1}: sign of `±(λ+ν)`, negative on the lower `p` rows.
    pub signs: Vec<Vec<i8>>,
    /// `(x, y)` of plaquettes with sign −1.
    pub violations: Vec<(usize, usize)>,
    /// `(x, y)` of plaquettes with `λ + ν = 0`.
    pub zeros: Vec<(usize, usize)>,
}

impl PlaquetteReport {
    pub fn is_unitary(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn is_short(&self) -> bool {
        !self.zeros.is_empty()
    }

    /// Rows printed top to bottom (upper block first).
    pub fn sign_matrix_text(&self) -> String {
        let mut out = String::new();
        for row in self.signs.iter().rev() {
            let cells: Vec<&str> = row.iter().map(|s| match s {
                1 => "+",
                -1 => "-",
                _ => "0",
            })
            .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

pub fn plaquette_check(lat: &WeightLattice) -> PlaquetteReport {
    let rows = lat.rows();
    let mut signs = vec![vec![0i8; lat.m]; rows];
    let mut violations = Vec::new();
    let mut zeros = Vec::new();
    for (y, row) in signs.iter_mut().enumerate() {
        for (x, cell) in row.iter_mut().enumerate() {
            let mut s = lat.plaquette_sum(x, y);
            if y < lat.p {
                s = -s;
            }
            *cell = if s.is_zero() {
                zeros.push((x, y));
                0
            } else if s.is_positive() {
                1
            } else {
                violations.push((x, y));
                -1
            };
        }
    }
    PlaquetteReport { p: lat.p, q: lat.q, m: lat.m, signs, violations, zeros }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::parse_grading;
    use crate::rational::q;

    fn w(g: &str, m: &[i64]) -> FundamentalWeight {
        FundamentalWeight::new(parse_grading(g).unwrap(), m.iter().map(|&x| q(x)).collect()).unwrap()
    }

    #[test]
    fn step_rules() {
        // boson then fermion, (ν, λ) = (0, 3)
        let a = w("su(1|1)", &[0, 3]);
        let b = duality_step(&a, 0).unwrap();
        assert_eq!(b.m, vec![q(4), q(-1)]);
        assert_eq!(duality_step(&b, 0).unwrap(), a);
        let z = w("su(1|1)", &[-2, 2]);
        assert_eq!(duality_step(&z, 0).unwrap().m, vec![q(2), q(-2)]);
        assert_eq!(duality_step(&w("su(2)", &[1, 0]), 0), Err(Error::NotFermionic(0)));
    }

    #[test]
    fn yang_mills_transport() {
        let src = w("su(2,|4|2)", &[-1, -1, 1, 1, 0, 0, 0, 0]);
        let lat = build_weight_lattice(&src).unwrap();
        let dist = weight_in_grading(&lat, &parse_grading("su(2,2|4)").unwrap()).unwrap();
        assert_eq!(dist.m, [-1, -1, 2, 0, 0, 0, 0, 0].iter().map(|&x| q(x)).collect::<Vec<_>>());
        assert_eq!(weight_in_grading(&lat, &src.grading).unwrap(), src);
    }
}
