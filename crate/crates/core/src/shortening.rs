//! Monomial shortenings read off from weights, BPS fractions and the
//! Dolan–Osborn names of su(2,2|4) multiplets.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::classify::RepLabel;
use crate::diagrams::{realize, NonCompactYoungDiagram, Strategy};
use crate::error::{Error, Result};
use crate::rational::{fmt_q, q, qf, Q};

/// Minimal monomial length per fermionic column and side; `None` means no
/// monomial shortening.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShorteningProfile {
    /// lowering by `E_{α a}` (towards the `q` block)
    pub upper: Vec<Option<u32>>,
    /// lowering by `E_{a β̇}` (towards the `p` block)
    pub lower: Vec<Option<u32>>,
}

impl ShorteningProfile {
    pub fn is_short(&self) -> bool {
        self.upper.iter().chain(&self.lower).any(Option::is_some)
    }

    fn count(side: &[Option<u32>], r: u32) -> usize {
        side.iter().filter(|x| **x == Some(r)).count()
    }
}

/// Shortening profile of a realised diagram.
pub fn profile_of(d: &NonCompactYoungDiagram) -> ShorteningProfile {
    let tops = d.tops();
    let (p, q_) = (d.p() as i64, d.q() as i64);
    let r = &d.realization;
    let upper = tops
        .iter()
        .map(|&t| {
            let k = t + 1;
            (r.gamma_r.is_zero() && k <= q_ && d.label.mu_r.get((k - 1) as usize) == 0).then_some(k as u32)
        })
        .collect();
    let lower = tops
        .iter()
        .map(|&t| {
            let j = d.colours() - t + 1;
            (r.gamma_l.is_zero() && j >= 1 && j <= p && d.label.mu_l.get((j - 1) as usize) == 0).then_some(j as u32)
        })
        .collect();
    ShorteningProfile { upper, lower }
}

pub fn shortening_profile(label: &RepLabel) -> Result<ShorteningProfile> {
    Ok(profile_of(&realize(label, Strategy::MinimalP, false)?))
}

fn require_224(d: &NonCompactYoungDiagram) -> Result<()> {
    if (d.p(), d.q(), d.m()) != (2, 2, 4) {
        return Err(Error::Dims(format!("expected su(2,2|4), got (p,q,m)=({},{},{})", d.p(), d.q(), d.m())));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BpsFractions {
    #[serde(with = "crate::rational::serde_q")]
    pub s: Q,
    #[serde(with = "crate::rational::serde_q")]
    pub s_bar: Q,
    #[serde(with = "crate::rational::serde_q")]
    pub t: Q,
    #[serde(with = "crate::rational::serde_q")]
    pub t_bar: Q,
}

/// `s̄, t̄` count columns shortened by one or two upper lowerings,
/// `s, t` the same on the lower side; all divided by 4.
pub fn bps_type_22_4(d: &NonCompactYoungDiagram) -> Result<BpsFractions> {
    require_224(d)?;
    let pr = profile_of(d);
    let f = |n: usize| qf(n as i64, 4);
    Ok(BpsFractions {
        s: f(ShorteningProfile::count(&pr.lower, 1)),
        s_bar: f(ShorteningProfile::count(&pr.upper, 1)),
        t: f(ShorteningProfile::count(&pr.lower, 2)),
        t_bar: f(ShorteningProfile::count(&pr.upper, 2)),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DoClass {
    A,
    B,
    C,
    D,
    Dbar,
    /// one side short, the other long
    OneSided,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DolanOsbornLabel {
    pub class: DoClass,
    pub dynkin: [i64; 3],
    #[serde(with = "crate::rational::serde_q_vec")]
    pub spins: Vec<Q>,
    #[serde(with = "crate::rational::serde_q")]
    pub dimension: Q,
    /// left and right fractions shown as superscript (zero for long sides)
    #[serde(with = "crate::rational::serde_q_vec")]
    pub fractions: Vec<Q>,
}

impl fmt::Display for DolanOsbornLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.class {
            DoClass::A => "A",
            DoClass::B => "B",
            DoClass::C => "C",
            DoClass::D => "D",
            DoClass::Dbar => "Dbar",
            DoClass::OneSided => "S",
        };
        let [k, p, q_] = self.dynkin;
        write!(f, "{name}[{k},{p},{q_}]({},{})", fmt_q(&self.spins[0]), fmt_q(&self.spins[1]))?;
        if self.class != DoClass::A {
            write!(f, "^({},{})", fmt_q(&self.fractions[0]), fmt_q(&self.fractions[1]))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum SideKind {
    Bps,
    Semi,
    Long,
}

pub fn dolan_osborn(d: &NonCompactYoungDiagram) -> Result<DolanOsbornLabel> {
    let b = bps_type_22_4(d)?;
    let kind = |bps: &Q, semi: &Q| {
        if !bps.is_zero() {
            SideKind::Bps
        } else if !semi.is_zero() {
            SideKind::Semi
        } else {
            SideKind::Long
        }
    };
    let left = kind(&b.s, &b.t);
    let right = kind(&b.s_bar, &b.t_bar);
    let frac = |k: SideKind, bps: &Q, semi: &Q| match k {
        SideKind::Bps => bps.clone(),
        SideKind::Semi => semi.clone(),
        SideKind::Long => Q::zero(),
    };
    let class = match (left, right) {
        (SideKind::Long, SideKind::Long) => DoClass::A,
        (SideKind::Bps, SideKind::Bps) => DoClass::B,
        (SideKind::Semi, SideKind::Semi) => DoClass::C,
        (SideKind::Bps, SideKind::Semi) => DoClass::D,
        (SideKind::Semi, SideKind::Bps) => DoClass::Dbar,
        _ => DoClass::OneSided,
    };
    let lam = d.tops();
    let nl = d.label.mu_l.first() as i64;
    let nr = d.label.mu_r.first() as i64;
    let r = &d.realization;
    Ok(DolanOsbornLabel {
        class,
        dynkin: [lam[0] - lam[1], lam[1] - lam[2], lam[2] - lam[3]],
        spins: vec![qf(nl, 2), qf(nr, 2)],
        dimension: qf(nl + nr, 2) + &r.gamma_l + &r.gamma_r + q(r.colours),
        fractions: vec![frac(left, &b.s, &b.t), frac(right, &b.s_bar, &b.t_bar)],
    })
}

/// Whether the short multiplet can join a long one as the coupling is switched on.
pub fn can_recombine(d: &NonCompactYoungDiagram) -> Result<bool> {
    let dl = dolan_osborn(d)?;
    if dl.class == DoClass::A {
        return Err(Error::Misuse("recombination is defined for short multiplets only".into()));
    }
    let lam = d.tops();
    Ok(lam[3] != 0 || lam[2] > 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::Realization;

    fn diag(tau: &[u32], fdelta: i64, colours: i64, br: i64, bl: i64) -> NonCompactYoungDiagram {
        let l = RepLabel::new(2, 2, 4, vec![0, 0], tau.to_vec(), vec![0, 0], q(bl), q(br)).unwrap();
        realize(&l, Strategy::Explicit(Realization::plain(fdelta, colours)), false).unwrap()
    }

    #[test]
    fn konishi_members() {
        let c = diag(&[0, 0, 0, 0], 1, 2, 1, 1);
        assert_eq!(dolan_osborn(&c).unwrap().to_string(), "C[0,0,0](0,0)^(1,1)");
        let dm = diag(&[2, 0, 0, 0], 1, 3, 1, 0);
        assert_eq!(dolan_osborn(&dm).unwrap().to_string(), "D[2,0,0](0,0)^(1/4,3/4)");
        let db = diag(&[2, 2, 2, 0], 0, 3, 0, 1);
        assert_eq!(dolan_osborn(&db).unwrap().to_string(), "Dbar[0,0,2](0,0)^(3/4,1/4)");
        let b = diag(&[4, 2, 2, 0], 0, 4, 0, 0);
        assert_eq!(dolan_osborn(&b).unwrap().to_string(), "B[2,0,2](0,0)^(1/4,1/4)");
        for d in [&c, &dm, &db, &b] {
            assert!(can_recombine(d).unwrap());
        }
    }
}
