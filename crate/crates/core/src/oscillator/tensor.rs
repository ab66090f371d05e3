//! Tensor products of K-types by weight-multiplicity peeling.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::kmodule::GlIrrep;
use crate::classify::{label_from_weight, RepLabel};
use crate::algebra_core::FundamentalWeight;
use crate::diagrams::NonCompactYoungDiagram;
use crate::error::{Error, Result};
use crate::rational::Q;

type Character = BTreeMap<Vec<Q>, i64>;

fn character(highest: &[Q]) -> Result<Character> {
    let r = GlIrrep::new(highest)?;
    let mut ch = Character::new();
    for w in r.weights {
        *ch.entry(w).or_default() += 1;
    }
    Ok(ch)
}

/// Irreducible constituents `(highest weight, multiplicity)` of a gl(n)
/// tensor product, lexicographically highest first.
pub fn gl_tensor(h1: &[Q], h2: &[Q]) -> Result<Vec<(Vec<Q>, i64)>> {
    if h1.len() != h2.len() {
        return Err(Error::Dims("blocks of different rank".into()));
    }
    if h1.is_empty() {
        return Ok(vec![(vec![], 1)]);
    }
    let (c1, c2) = (character(h1)?, character(h2)?);
    let mut prod = Character::new();
    for (w1, m1) in &c1 {
        for (w2, m2) in &c2 {
            let w: Vec<Q> = w1.iter().zip(w2).map(|(a, b)| a + b).collect();
            *prod.entry(w).or_default() += m1 * m2;
        }
    }
    let mut out = Vec::new();
    loop {
        prod.retain(|_, m| *m != 0);
        let Some((top, &mult)) = prod.iter().next_back() else { break };
        if mult < 0 {
            return Err(Error::Inconsistent("negative multiplicity while peeling".into()));
        }
        let top = top.clone();
        for (w, m) in character(&top)? {
            *prod.entry(w).or_default() -= m * mult;
        }
        out.push((top, mult));
    }
    Ok(out)
}

/// Decompose `U_0 ⊗ U_0'` of two realised multiplets into irreducible
/// K-types; each is the lowest K-type of an irreducible multiplet in the
/// tensor product. Labels are listed with multiplicity.
pub fn tensor_decompose(a: &NonCompactYoungDiagram, b: &NonCompactYoungDiagram) -> Result<Vec<RepLabel>> {
    let (la, lb) = (&a.label, &b.label);
    if (la.p, la.m, la.q) != (lb.p, lb.m, lb.q) {
        return Err(Error::Dims("factors belong to different algebras".into()));
    }
    let (ra, rb) = (&a.realization, &b.realization);
    if (!ra.gamma_l.is_zero() && !rb.gamma_l.is_zero()) || (!ra.gamma_r.is_zero() && !rb.gamma_r.is_zero()) {
        return Err(Error::Misuse("both factors carry a continuous deformation on the same side".into()));
    }
    let (wa, wb) = (a.supmq_weight()?, b.supmq_weight()?);
    let (p, m) = (la.p, la.m);
    let cut = |w: &FundamentalWeight, lo: usize, hi: usize| w.m[lo..hi].to_vec();
    let n = wa.m.len();
    let blocks = [(0, p), (p, p + m), (p + m, n)];
    let parts: Vec<Vec<(Vec<Q>, i64)>> =
        blocks.iter().map(|&(lo, hi)| gl_tensor(&cut(&wa, lo, hi), &cut(&wb, lo, hi))).collect::<Result<_>>()?;
    let mut out = Vec::new();
    // fermionic block first, matching the tables
    for (wf, mf) in &parts[1] {
        for (wl, ml) in &parts[0] {
            for (wr, mr) in &parts[2] {
                let mut w = wl.clone();
                w.extend(wf.iter().cloned());
                w.extend(wr.iter().cloned());
                let label = label_from_weight(&FundamentalWeight::new(wa.grading.clone(), w)?)?;
                for _ in 0..mf * ml * mr {
                    out.push(label.clone());
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn su2_clebsch_gordan() {
        let r = gl_tensor(&[q(2), q(0)], &[q(1), q(0)]).unwrap();
        assert_eq!(r, vec![(vec![q(3), q(0)], 1), (vec![q(2), q(1)], 1)]);
        let r = gl_tensor(&[q(1), q(0), q(0), q(0)], &[q(1), q(1), q(1), q(0)]).unwrap();
        assert_eq!(r.len(), 2);
    }
}
