//! Unitarity predicates on grading-invariant labels, and the passage
//! between labels and fundamental weights.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra_core::{FundamentalWeight, Grading, Partition, SuperShape};
use crate::diagrams::{realize, Strategy};
use crate::duality::{build_weight_lattice, weight_in_grading};
use crate::error::{Error, Result};
use crate::rational::{fmt_q, q, Q};

/// `[μ_L, τ, μ_R; β_L, β_R]`. For `m = 0` the single β lives in `beta_R`
/// and `beta_L = 0`; `beta_L = 0` when `p = 0` and `beta_R = 0` when `q = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepLabel {
    pub p: usize,
    pub q: usize,
    pub m: usize,
    #[serde(rename = "mu_L")]
    pub mu_l: Partition,
    pub tau: Partition,
    #[serde(rename = "mu_R")]
    pub mu_r: Partition,
    #[serde(rename = "beta_L", with = "crate::rational::serde_q")]
    pub beta_l: Q,
    #[serde(rename = "beta_R", with = "crate::rational::serde_q")]
    pub beta_r: Q,
}

impl RepLabel {
    pub fn new(p: usize, q: usize, m: usize, mu_l: Vec<u32>, tau: Vec<u32>, mu_r: Vec<u32>, beta_l: Q, beta_r: Q) -> Result<RepLabel> {
        let l = RepLabel {
            p,
            q,
            m,
            mu_l: Partition::new(mu_l)?,
            tau: Partition::new(tau)?,
            mu_r: Partition::new(mu_r)?,
            beta_l,
            beta_r,
        };
        l.validate()?;
        Ok(l)
    }

    pub fn trivial(p: usize, q: usize, m: usize) -> RepLabel {
        RepLabel {
            p,
            q,
            m,
            mu_l: Partition::empty(p),
            tau: Partition::empty(m),
            mu_r: Partition::empty(q),
            beta_l: Q::zero(),
            beta_r: Q::zero(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let check = |name: &str, part: &Partition, len: usize| -> Result<()> {
            if part.len() != len {
                return Err(Error::Dims(format!("{name} has {} entries, expected {len}", part.len())));
            }
            if !part.is_proper() {
                return Err(Error::Invalid(format!("{name} = {part} must end with 0")));
            }
            Ok(())
        };
        check("mu_L", &self.mu_l, self.p)?;
        check("tau", &self.tau, self.m)?;
        check("mu_R", &self.mu_r, self.q)?;
        if self.p + self.q + self.m < 2 {
            return Err(Error::Dims("p + q + m must be at least 2".into()));
        }
        if self.p + self.q == 0 {
            return Err(Error::Dims("a label needs at least one bosonic index".into()));
        }
        if (self.p == 0 || self.m == 0) && !self.beta_l.is_zero() {
            return Err(Error::Invalid("beta_L must be 0 when p = 0 or m = 0".into()));
        }
        if self.q == 0 && !self.beta_r.is_zero() && self.m > 0 {
            return Err(Error::Invalid("beta_R must be 0 when q = 0".into()));
        }
        if self.m == 0 && (self.p == 0 || self.q == 0) && !self.beta_r.is_zero() {
            return Err(Error::Invalid("a compact su(n) label carries no beta".into()));
        }
        Ok(())
    }

    /// `β = β_L + β_R` of the purely bosonic case.
    pub fn beta(&self) -> Q {
        &self.beta_l + &self.beta_r
    }

    pub fn h_l(&self) -> usize {
        self.mu_l.height()
    }

    pub fn h_r(&self) -> usize {
        self.mu_r.height()
    }

    /// Natural grading `su(p,|m|q)` of the label.
    pub fn grading(&self) -> Result<Grading> {
        Grading::supmq(self.p, self.m, self.q)
    }

    /// Label written with the partitions' last (vanishing) entry dropped, e.g. `[0,110,0;0,0]`.
    pub fn compact(&self) -> String {
        format!(
            "[{},{},{};{},{}]",
            compact_partition(&self.mu_l),
            compact_partition(&self.tau),
            compact_partition(&self.mu_r),
            fmt_q(&self.beta_l),
            fmt_q(&self.beta_r)
        )
    }
}

fn compact_partition(part: &Partition) -> String {
    let parts = part.parts();
    if parts.len() <= 1 {
        return "0".into();
    }
    let body = &parts[..parts.len() - 1];
    if body.len() == 1 {
        body[0].to_string()
    } else if body.iter().all(|&x| x < 10) {
        body.iter().map(|x| x.to_string()).collect()
    } else {
        let s: Vec<String> = body.iter().map(|x| x.to_string()).collect();
        format!("({})", s.join(","))
    }
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    NonUnitary,
    UnitaryLong,
    UnitaryShort,
}

impl Status {
    pub fn is_unitary(self) -> bool {
        !matches!(self, Status::NonUnitary)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
    /// the bosonic β of su(p,q)
    Total,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WitnessKind {
    /// β below the height bound
    BelowHeight,
    /// β non-integer inside the discrete window
    NotInteger,
    /// β sits on an integer point of the discrete window (short)
    Saturated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub side: Side,
    #[serde(with = "crate::rational::serde_q")]
    pub beta: Q,
    /// the bound that is violated or saturated
    #[serde(with = "crate::rational::serde_q")]
    pub bound: Q,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::Left => "beta_L",
            Side::Right => "beta_R",
            Side::Total => "beta",
        };
        let (b, k) = (fmt_q(&self.beta), fmt_q(&self.bound));
        match self.kind {
            WitnessKind::BelowHeight => write!(f, "{side} = {b} < {k}"),
            WitnessKind::NotInteger => write!(f, "{side} = {b} is not an integer but <= {k}"),
            WitnessKind::Saturated => write!(f, "{side} = {b} is an integer <= {k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub witnesses: Vec<Witness>,
}

impl Verdict {
    pub fn is_unitary(&self) -> bool {
        self.status.is_unitary()
    }

    fn from_witnesses(witnesses: Vec<Witness>) -> Verdict {
        let bad: Vec<Witness> = witnesses
            .iter()
            .filter(|w| w.kind != WitnessKind::Saturated)
            .cloned()
            .collect();
        if !bad.is_empty() {
            Verdict { status: Status::NonUnitary, witnesses: bad }
        } else if witnesses.is_empty() {
            Verdict { status: Status::UnitaryLong, witnesses }
        } else {
            Verdict { status: Status::UnitaryShort, witnesses }
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.status)
    }
}

/// One-sided test: `β ≥ h`, and β integral when `β ≤ window`.
/// `short_possible` says whether an integer point in the window is a shortening.
fn side_witnesses(beta: &Q, height: usize, window: i64, side: Side, short_possible: bool) -> Vec<Witness> {
    let h = q(height as i64);
    let win = q(window);
    if beta < &h {
        return vec![Witness { kind: WitnessKind::BelowHeight, side, beta: beta.clone(), bound: h }];
    }
    if beta <= &win {
        if !beta.is_integer() {
            return vec![Witness { kind: WitnessKind::NotInteger, side, beta: beta.clone(), bound: win }];
        }
        if short_possible {
            return vec![Witness { kind: WitnessKind::Saturated, side, beta: beta.clone(), bound: win }];
        }
    }
    Vec::new()
}

/// su(p,q): unitary iff `β ≥ h_L + h_R`, and β integral whenever
/// `β ≤ min(p + h_R, q + h_L) − 1`. Integer points of that window are short.
pub fn classify_supq(mu_l: &Partition, mu_r: &Partition, beta: &Q, p: usize, q_: usize) -> Verdict {
    let (hl, hr) = (mu_l.height(), mu_r.height());
    let window = ((p + hr).min(q_ + hl)) as i64 - 1;
    Verdict::from_witnesses(side_witnesses(beta, hl + hr, window, Side::Total, true))
}

/// Finite-dimensional su(m|q) with covariant oscillators: unitary iff
/// `β_R ≥ h_μ` and β_R integral when `β_R ≤ q − 1`.
pub fn classify_covariant(tau: &Partition, mu: &Partition, beta_r: &Q, q_: usize, m: usize) -> Verdict {
    let _ = tau;
    Verdict::from_witnesses(side_witnesses(beta_r, mu.height(), q_ as i64 - 1, Side::Right, q_ > 0 && m > 0))
}

/// Mirror of [`classify_covariant`] for contravariant oscillators.
pub fn classify_contravariant(tau: &Partition, mu: &Partition, beta_l: &Q, p: usize, m: usize) -> Verdict {
    let _ = tau;
    Verdict::from_witnesses(side_witnesses(beta_l, mu.height(), p as i64 - 1, Side::Left, p > 0 && m > 0))
}

/// su(p,q|m): the right condition on β_R and the left one on β_L.
pub fn classify_supqm(label: &RepLabel) -> Verdict {
    if label.m == 0 {
        if label.p == 0 || label.q == 0 {
            return Verdict { status: Status::UnitaryLong, witnesses: Vec::new() };
        }
        return classify_supq(&label.mu_l, &label.mu_r, &label.beta(), label.p, label.q);
    }
    let mut w = Vec::new();
    if label.q > 0 {
        w.extend(side_witnesses(&label.beta_r, label.h_r(), label.q as i64 - 1, Side::Right, true));
    }
    if label.p > 0 {
        w.extend(side_witnesses(&label.beta_l, label.h_l(), label.p as i64 - 1, Side::Left, true));
    }
    Verdict::from_witnesses(w)
}

/// su(2,2) in terms of spins and energy: β = E0 − j_L − j_R.
pub fn mack_classify(j_l: &Q, j_r: &Q, e0: &Q) -> Verdict {
    let two = q(2);
    let beta = e0 - j_l - j_r;
    let nl = (j_l * &two).to_integer();
    let nr = (j_r * &two).to_integer();
    let mu_l = Partition::from_rationals(&[Q::from_integer(nl), Q::zero()]).expect("spin is a nonnegative half-integer");
    let mu_r = Partition::from_rationals(&[Q::from_integer(nr), Q::zero()]).expect("spin is a nonnegative half-integer");
    classify_supq(&mu_l, &mu_r, &beta, 2, 2)
}

/// `−|μ_L| + |τ| + |μ_R| − p(β_L + τ_1) + q β_R`; vanishes iff the
/// representation descends to psu(p,q|p+q).
pub fn psu_central_charge(label: &RepLabel) -> Result<Q> {
    if label.m != label.p + label.q {
        return Err(Error::Dims(format!("psu needs m = p + q, got m={} p={} q={}", label.m, label.p, label.q)));
    }
    let size = |x: &Partition| q(x.size() as i64);
    let tau1 = q(label.tau.first() as i64);
    Ok(-size(&label.mu_l) + size(&label.tau) + size(&label.mu_r) - q(label.p as i64) * (&label.beta_l + tau1)
        + q(label.q as i64) * &label.beta_r)
}

/// Differences `x_0 − x_i` style extraction into a partition.
fn partition_of(xs: Vec<Q>, what: &str) -> Result<Partition> {
    Partition::from_rationals(&xs).map_err(|e| Error::Invalid(format!("{what}: {e}")))
}

/// Label of a highest weight. Weights in other lattice-path gradings are
/// first transported to `su(p,|m|q)`.
pub fn label_from_weight(w: &FundamentalWeight) -> Result<RepLabel> {
    let shape = SuperShape::of(&w.grading)?;
    let w = if shape.is_supmq() {
        w.clone()
    } else {
        let lat = build_weight_lattice(w)?;
        weight_in_grading(&lat, &Grading::supmq(shape.p, shape.m, shape.q)?)?
    };
    let (p, q_, m) = (shape.p, shape.q, shape.m);
    let nu_l: Vec<Q> = w.m[..p].to_vec();
    let lam: Vec<Q> = w.m[p..p + m].to_vec();
    let nu_r: Vec<Q> = w.m[p + m..].to_vec();
    let mu_l = partition_of((1..=p).map(|j| &nu_l[0] - &nu_l[p - j]).collect(), "mu_L")?;
    let tau = partition_of(lam.iter().map(|x| x - &lam[m.max(1) - 1]).collect(), "tau")?;
    let mu_r = partition_of(nu_r.iter().map(|x| x - &nu_r[q_.max(1) - 1]).collect(), "mu_R")?;
    let tau = if m == 0 { Partition::empty(0) } else { tau };
    let mu_r = if q_ == 0 { Partition::empty(0) } else { mu_r };
    let (beta_l, beta_r) = if m == 0 {
        if p == 0 || q_ == 0 {
            (Q::zero(), Q::zero())
        } else {
            (Q::zero(), &nu_r[q_ - 1] - &nu_l[0])
        }
    } else {
        let bl = if p > 0 { -&nu_l[0] - &lam[0] } else { Q::zero() };
        let br = if q_ > 0 { &lam[m - 1] + &nu_r[q_ - 1] } else { Q::zero() };
        (bl, br)
    };
    let label = RepLabel { p, q: q_, m, mu_l, tau, mu_r, beta_l, beta_r };
    label.validate()?;
    Ok(label)
}

/// Realise the label with the minimal realization and read its weight in `target`.
pub fn weight_from_label(label: &RepLabel, target: &Grading, allow_nonunitary: bool) -> Result<FundamentalWeight> {
    let shape = SuperShape::of(target)?;
    if (shape.p, shape.q, shape.m) != (label.p, label.q, label.m) {
        return Err(Error::Dims(format!(
            "target has (p,q,m)=({},{},{}), label ({},{},{})",
            shape.p, shape.q, shape.m, label.p, label.q, label.m
        )));
    }
    let d = realize(label, Strategy::MinimalP, allow_nonunitary)?;
    let src = d.supmq_weight()?;
    if shape.is_supmq() && src.grading == *target {
        return Ok(src);
    }
    let lat = build_weight_lattice(&src)?;
    weight_in_grading(&lat, target)
}

/// `n/2`.
pub fn half(n: i64) -> Q {
    Q::new(n.into(), 2.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn fig4_verdicts() {
        let tau = part(&[1, 0]);
        let mu = part(&[3, 1, 0, 0]);
        let got: Vec<Status> = [2, 4, 5, 6, 7]
            .iter()
            .map(|&b| classify_covariant(&tau, &mu, &half(b), 4, 2).status)
            .collect();
        use Status::*;
        assert_eq!(got, vec![NonUnitary, UnitaryShort, NonUnitary, UnitaryShort, UnitaryLong]);
    }

    #[test]
    fn supq_examples() {
        let e = part(&[0, 0]);
        assert_eq!(classify_supq(&e, &e, &half(1), 2, 2).status, Status::NonUnitary);
        assert!(classify_supq(&part(&[1, 0]), &part(&[1, 0]), &q(2), 2, 2).is_unitary());
        assert!(classify_supq(&e, &e, &q(0), 2, 2).is_unitary());
    }

    #[test]
    fn central_charge() {
        let l = RepLabel::new(2, 2, 4, vec![0, 0], vec![1, 0, 0, 0], vec![0, 0], q(0), q(0)).unwrap();
        assert_eq!(psu_central_charge(&l).unwrap(), q(-1));
    }
}
