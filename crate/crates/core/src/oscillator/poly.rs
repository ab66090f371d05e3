//! Sparse multivariate polynomials with rational coefficients, used for
//! compact-group modules and oscillator minors.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{factorial, Q};

pub type Exps = Vec<u16>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    pub nvars: usize,
    pub terms: BTreeMap<Exps, Q>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Poly {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Poly {
        Poly::monomial(vec![0; nvars], Q::one())
    }

    pub fn monomial(e: Exps, c: Q) -> Poly {
        let nvars = e.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Poly { nvars, terms }
    }

    pub fn var(nvars: usize, i: usize) -> Poly {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly::monomial(e, Q::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Exps, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Poly, c: &Q) {
        for (e, x) in &other.terms {
            self.add_term(e.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Q) -> Poly {
        let mut out = Poly::zero(self.nvars);
        out.add_scaled(self, c);
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exps = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::one(self.nvars), |acc, _| acc.mul(self))
    }

    pub fn mul_var(&self, i: usize) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e[i] += 1;
                (e, c.clone())
            })
            .collect();
        Poly { nvars: self.nvars, terms }
    }

    pub fn diff(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                out.add_term(e2, c * Q::from_integer(BigInt::from(e[i])));
            }
        }
        out
    }

    /// `Σ_C x_{iC} ∂_{jC}` on a polynomial in an `n × cols` matrix of variables.
    pub fn polarise(&self, cols: usize, i: usize, j: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for c in 0..cols {
            let d = self.diff(j * cols + c);
            out.add_scaled(&d.mul_var(i * cols + c), &Q::one());
        }
        out
    }

    /// Fock pairing `⟨x^a, x^b⟩ = δ_ab ∏ a_k!`.
    pub fn fock_pair(&self, other: &Poly) -> Q {
        let mut s = Q::zero();
        for (e, c) in &self.terms {
            if let Some(d) = other.terms.get(e) {
                let w: BigInt = e.iter().map(|&k| factorial(k as u32)).product();
                s += c * d * Q::from_integer(w);
            }
        }
        s
    }

    pub fn leading(&self) -> Option<(&Exps, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, e: &Exps) -> Q {
        self.terms.get(e).cloned().unwrap_or_else(Q::zero)
    }
}

/// All permutations of `0..n` with their signs (small `n` only).
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        let n = used.len();
        if cur.len() == n {
            out.push((cur.clone(), sign));
            return;
        }
        for i in 0..n {
            if used[i] {
                continue;
            }
            // inversions contributed by placing i after the current prefix
            let inv = cur.iter().filter(|&&c| c > i).count();
            used[i] = true;
            cur.push(i);
            rec(cur, used, if inv % 2 == 0 { sign } else { -sign }, out);
            cur.pop();
            used[i] = false;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], 1, &mut out);
    out
}

/// Determinant of the matrix of variables `var(rows[k], cols[l])`.
pub fn minor(nvars: usize, rows: &[usize], cols: &[usize], var: impl Fn(usize, usize) -> usize) -> Poly {
    let mut out = Poly::zero(nvars);
    for (perm, sign) in permutations(rows.len()) {
        let mut e = vec![0u16; nvars];
        for (k, &s) in perm.iter().enumerate() {
            e[var(rows[s], cols[k])] += 1;
        }
        out.add_term(e, Q::from_integer(BigInt::from(sign)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn minors_and_norms() {
        let d = minor(4, &[0, 1], &[0, 1], |r, c| r * 2 + c);
        assert_eq!(d.terms.len(), 2);
        assert_eq!(d.fock_pair(&d), q(2));
        assert_eq!(permutations(3).iter().map(|p| p.1).sum::<i64>(), 0);
        let x = Poly::var(1, 0).pow(3);
        assert_eq!(x.diff(0).coeff(&vec![2]), q(3));
    }
}
