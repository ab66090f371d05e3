//! Doubleton multiplets of su(2,2|4) and their two-colour tensor products,
//! regenerated from explicit oscillator states.
//!
//! Table 1 lists the one-colour highest vectors with their weights, labels
//! and BPS fractions; Tables 2–7 tensor a fixed second-colour state with each
//! one-colour state. Parametric rows of Table 1 are fitted symbolically from
//! several exact evaluations; Tables 2–7 are produced at given `(m, n)`.

use std::fmt::Write as _;

use num_traits::One;
use serde::Serialize;

use crate::classify::{label_from_weight, RepLabel};
use crate::diagrams::{realize, NonCompactYoungDiagram, Realization, Strategy};
use crate::error::{Error, Result};
use crate::oscillator::fock::{act_vec, verify_hws, FockVector, Osc, OscillatorSpec, Species};
use crate::oscillator::tensor::tensor_decompose;
use crate::algebra_core::{FundamentalWeight, Partition};
use crate::rational::{fmt_q, q, to_i64, Q};
use crate::shortening::bps_type_22_4;

/// One-colour highest vectors of su(2,|4|2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Doubleton {
    Vacuum,
    F1,
    F2,
    F3,
    /// `(a†)^k Δ_f† |0⟩`
    A(u32),
    /// `(b†)^k |0⟩`
    B(u32),
}

impl Doubleton {
    fn name(self, var: &str, colour: Option<u8>) -> String {
        let ket = match colour {
            Some(c) => format!("|0>_{c}"),
            None => "|0>".into(),
        };
        let f = ["f†_a", "f†_b", "f†_c"];
        match self {
            Doubleton::Vacuum => ket,
            Doubleton::F1 => format!("{} {ket}", f[0]),
            Doubleton::F2 => format!("{} {ket}", f[..2].join(" ")),
            Doubleton::F3 => format!("{} {ket}", f[..3].join(" ")),
            Doubleton::A(_) => format!("(a†)^{var} Δ†_f {ket}"),
            Doubleton::B(_) => format!("(b†)^{var} {ket}"),
        }
    }

    fn with(self, k: u32) -> Doubleton {
        match self {
            Doubleton::A(_) => Doubleton::A(k),
            Doubleton::B(_) => Doubleton::B(k),
            d => d,
        }
    }
}

/// The explicit one-colour state: fermions of flavours 1.., `a†` of
/// flavour 1, `b†` of flavour 2 (the highest dotted flavour).
pub fn doubleton_state(d: Doubleton) -> (OscillatorSpec, FockVector) {
    let spec = OscillatorSpec::new(2, 4, 2, 1);
    let mut v: FockVector = [(spec.vacuum(), Q::one())].into();
    let cr = |s: Species, flavour: usize, v: &FockVector| act_vec(&spec, Osc { species: s, flavour, colour: 0, creation: true }, v);
    let nf = match d {
        Doubleton::Vacuum | Doubleton::B(_) => 0,
        Doubleton::F1 => 1,
        Doubleton::F2 => 2,
        Doubleton::F3 => 3,
        Doubleton::A(_) => 4,
    };
    for a in 0..nf {
        v = cr(Species::F, a, &v);
    }
    match d {
        Doubleton::A(k) => (0..k).for_each(|_| v = cr(Species::A, 0, &v)),
        Doubleton::B(k) => (0..k).for_each(|_| v = cr(Species::B, 1, &v)),
        _ => {}
    }
    (spec, v)
}

/// Weight read off the oscillator state, and the realised diagram.
pub fn doubleton(d: Doubleton) -> Result<(FundamentalWeight, NonCompactYoungDiagram)> {
    let (spec, v) = doubleton_state(d);
    let chk = verify_hws(&spec, &v)?;
    let w = chk.weights.ok_or_else(|| Error::Inconsistent("doubleton state is not highest".into()))?;
    let label = label_from_weight(&w)?;
    let fdelta = to_i64(&w.m[5]).ok_or_else(|| Error::Inconsistent("non-integral fermion weight".into()))?;
    let diag = realize(&label, Strategy::Explicit(Realization::plain(fdelta, 1)), false)?;
    Ok((w, diag))
}

#[derive(Debug, Clone, Serialize)]
pub struct Table {
    pub number: usize,
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# Table {}: {}", self.number, self.title);
        let _ = writeln!(s, "{}", self.header.join(" | "));
        for r in &self.rows {
            let _ = writeln!(s, "{}", r.join(" | "));
        }
        s
    }
}

/// `a + b·var` with integer coefficients, e.g. `m`, `-(1+n)`, `2+n`.
fn affine(a: i64, b: i64, var: &str) -> String {
    if b == 0 {
        return a.to_string();
    }
    if b < 0 {
        return format!("-({})", affine(-a, -b, var));
    }
    let term = if b == 1 { var.to_string() } else { format!("{b}{var}") };
    match a.cmp(&0) {
        std::cmp::Ordering::Equal => term,
        std::cmp::Ordering::Greater => format!("{a}+{term}"),
        std::cmp::Ordering::Less => format!("{term}{a}"),
    }
}

/// Fit each entry as affine in `k` from values at `k = 1, 2` and confirm at `k = 3`.
fn fit(values: &[Vec<Q>], var: &str) -> Result<Vec<String>> {
    let n = values[0].len();
    (0..n)
        .map(|i| {
            let (v1, v2, v3) = (&values[0][i], &values[1][i], &values[2][i]);
            let b = v2 - v1;
            let a = v1 - &b;
            if &a + &b * q(3) != *v3 {
                return Err(Error::Inconsistent("entry is not affine in the parameter".into()));
            }
            match (to_i64(&a), to_i64(&b)) {
                (Some(a), Some(b)) => Ok(affine(a, b, var)),
                _ => Err(Error::Inconsistent("non-integral parametric entry".into())),
            }
        })
        .collect()
}

fn weight_text(entries: &[String]) -> String {
    format!("[{},{};{};{},{}]", entries[0], entries[1], entries[2..6].join(","), entries[6], entries[7])
}

fn compact_part(entries: &[String]) -> String {
    if entries.len() <= 1 {
        return "0".into();
    }
    let body = &entries[..entries.len() - 1];
    if body.len() == 1 {
        body[0].clone()
    } else if body.iter().all(|e| e.chars().count() == 1) {
        body.concat()
    } else {
        format!("({})", body.join(","))
    }
}

fn label_entries(l: &RepLabel) -> Vec<Q> {
    let ps = |p: &Partition| p.parts().iter().map(|&x| q(x as i64)).collect::<Vec<_>>();
    let mut v = ps(&l.mu_l);
    v.extend(ps(&l.tau));
    v.extend(ps(&l.mu_r));
    v.push(l.beta_l.clone());
    v.push(l.beta_r.clone());
    v
}

fn label_text(l: &RepLabel, entries: &[String]) -> String {
    let (a, b) = (l.mu_l.len(), l.tau.len());
    let c = l.mu_r.len();
    format!(
        "[{},{},{};{},{}]",
        compact_part(&entries[..a]),
        compact_part(&entries[a..a + b]),
        compact_part(&entries[a + b..a + b + c]),
        entries[a + b + c],
        entries[a + b + c + 1]
    )
}

fn table1_row(d: Doubleton) -> Result<Vec<String>> {
    let var = if matches!(d, Doubleton::A(_)) { "m" } else { "n" };
    let parametric = matches!(d, Doubleton::A(_) | Doubleton::B(_));
    let (weight, label, bps) = if parametric {
        let mut ws = Vec::new();
        let mut ls = Vec::new();
        let mut bpss = Vec::new();
        for k in 1..=3 {
            let (w, diag) = doubleton(d.with(k))?;
            let b = bps_type_22_4(&diag)?;
            ws.push(w.m.clone());
            ls.push(label_entries(&diag.label));
            bpss.push((b.s, b.s_bar));
        }
        if bpss.iter().any(|b| *b != bpss[0]) {
            return Err(Error::Inconsistent("BPS fractions depend on the parameter".into()));
        }
        let (_, diag) = doubleton(d.with(1))?;
        (weight_text(&fit(&ws, var)?), label_text(&diag.label, &fit(&ls, var)?), bpss[0].clone())
    } else {
        let (w, diag) = doubleton(d)?;
        let b = bps_type_22_4(&diag)?;
        let we: Vec<String> = w.m.iter().map(fmt_q).collect();
        (weight_text(&we), diag.label.compact(), (b.s, b.s_bar))
    };
    Ok(vec![d.name(var, None), weight, label, format!("({},{})", fmt_q(&bps.0), fmt_q(&bps.1))])
}

fn one_colour() -> [Doubleton; 6] {
    [Doubleton::Vacuum, Doubleton::F1, Doubleton::F2, Doubleton::F3, Doubleton::A(1), Doubleton::B(1)]
}

pub fn table1() -> Result<Table> {
    let rows = one_colour().iter().map(|&d| table1_row(d)).collect::<Result<Vec<_>>>()?;
    Ok(Table {
        number: 1,
        title: "one-colour highest vectors of su(2,|4|2)".into(),
        header: ["HWS", "[E_11,...,E_88]", "[mu_L,tau,mu_R;beta_L,beta_R]", "BPS"].iter().map(|s| s.to_string()).collect(),
        rows,
    })
}

/// Second-colour state of Tables 2–7.
pub fn second_colour(number: usize, m: u32, n: u32) -> Result<Doubleton> {
    Ok(match number {
        2 => Doubleton::Vacuum,
        3 => Doubleton::F1,
        4 => Doubleton::F2,
        5 => Doubleton::F3,
        6 => Doubleton::A(m),
        7 => Doubleton::B(n),
        _ => return Err(Error::Invalid(format!("no table {number}"))),
    })
}

/// First-colour exponents: Tables 2–5 use `(a†)^m`, `(b†)^n`; Table 6 uses
/// `(a†)^n`, `(b†)^n`; Table 7 uses `(a†)^m`, `(b†)^m`.
fn first_colour(number: usize, m: u32, n: u32) -> [(Doubleton, &'static str); 6] {
    let (ka, va, kb, vb) = match number {
        6 => (n, "n", n, "n"),
        7 => (m, "m", m, "m"),
        _ => (m, "m", n, "n"),
    };
    [
        (Doubleton::Vacuum, ""),
        (Doubleton::F1, ""),
        (Doubleton::F2, ""),
        (Doubleton::F3, ""),
        (Doubleton::A(ka), va),
        (Doubleton::B(kb), vb),
    ]
}

/// Labels in the tensor product of two one-colour multiplets.
pub fn two_colour(second: Doubleton, first: Doubleton) -> Result<Vec<RepLabel>> {
    let (_, d2) = doubleton(second)?;
    let (_, d1) = doubleton(first)?;
    tensor_decompose(&d2, &d1)
}

/// Tables 2–7 at the given exponents.
pub fn table_two_colour(number: usize, m: u32, n: u32) -> Result<Table> {
    let second = second_colour(number, m, n)?;
    let var2 = if number == 6 { "m" } else { "n" };
    let mut rows = Vec::new();
    for (first, var) in first_colour(number, m, n) {
        let labels = two_colour(second, first)?;
        let cell = labels.iter().map(RepLabel::compact).collect::<Vec<_>>().join(" + ");
        rows.push(vec![first.name(var, Some(1)), cell]);
    }
    Ok(Table {
        number,
        title: format!("{} tensored with one-colour states, m={m}, n={n}", second.name(var2, Some(2))),
        header: vec!["HWS (first colour)".into(), "[mu_L,tau,mu_R;beta_L,beta_R]".into()],
        rows,
    })
}

pub fn table(number: usize, m: u32, n: u32) -> Result<Table> {
    if number == 1 {
        table1()
    } else {
        table_two_colour(number, m, n)
    }
}
