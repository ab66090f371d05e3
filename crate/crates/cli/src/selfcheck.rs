//! Bounded equivalence sweeps: the classification theorems against the
//! plaquette rule on every lattice path, and against the exact Gram scan.

use anyhow::Result;
use rayon::prelude::*;
use serde::Serialize;
use superdual_core::oscillator::gram_positivity;
use superdual_core::rational::qf;
use superdual_core::{
    build_weight_lattice, classify_supqm, lattice_gradings, plaquette_check, weight_from_label, RepLabel, Status,
};

#[derive(Debug, Serialize)]
pub struct Summary {
    pub labels: usize,
    pub gradings: usize,
    pub gram_labels: usize,
    /// non-unitary labels whose negative norm lies above the cutoff
    pub gram_inconclusive: usize,
    pub disagreements: Vec<String>,
}

impl Summary {
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "plaquette: {} labels over {} gradings\ngram: {} labels, {} inconclusive below the cutoff\n",
            self.labels, self.gradings, self.gram_labels, self.gram_inconclusive
        );
        if self.disagreements.is_empty() {
            s.push_str("all agree\n");
        } else {
            s.push_str(&format!("{} disagreements\n", self.disagreements.len()));
            for d in &self.disagreements {
                s.push_str(&format!("  {d}\n"));
            }
        }
        s
    }
}

fn partitions(len: usize, max: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = vec![vec![0]];
    for _ in 1..len {
        out = out
            .into_iter()
            .flat_map(|v| (v[0]..=max).map(move |x| [vec![x], v.clone()].concat()))
            .collect();
    }
    out
}

/// Labels with `p + q + m ≤ max_total`, `m ≥ 1`, entries ≤ `max_part`, β ∈ {0, 1/2, …, max_beta}.
fn grid(max_total: usize, max_part: u32, max_beta: i64) -> Vec<RepLabel> {
    let mut out = Vec::new();
    for tot in 2..=max_total {
        for m in 1..tot {
            for p in 0..=tot - m {
                let q_ = tot - m - p;
                for ml in partitions(p, max_part) {
                    for t in partitions(m, max_part) {
                        for mr in partitions(q_, max_part) {
                            for bl in 0..=2 * max_beta {
                                for br in 0..=2 * max_beta {
                                    if (p == 0 && bl > 0) || (q_ == 0 && br > 0) {
                                        continue;
                                    }
                                    let l = RepLabel::new(p, q_, m, ml.clone(), t.clone(), mr.clone(), qf(bl, 2), qf(br, 2));
                                    out.extend(l.ok());
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn plaquette_disagreements(l: &RepLabel) -> Result<(usize, Vec<String>)> {
    let v = classify_supqm(l);
    let paths = lattice_gradings(l.p, l.m, l.q);
    let mut bad = Vec::new();
    for g in &paths {
        let lat = build_weight_lattice(&weight_from_label(l, g, true)?)?;
        let r = plaquette_check(&lat);
        if v.is_unitary() != r.is_unitary() || (v.status == Status::UnitaryShort) != (r.is_unitary() && r.is_short()) {
            bad.push(format!("plaquette {l} in {g}: {:?}", v.status));
        }
    }
    Ok((paths.len(), bad))
}

/// `None` when a non-unitary label shows no negative norm below the cutoff.
fn gram_disagreement(l: &RepLabel, cutoff: usize) -> Result<Option<Option<String>>> {
    let v = classify_supqm(l);
    let rep = gram_positivity(l, cutoff)?;
    let ok = match v.status {
        Status::UnitaryLong => rep.positive_definite,
        Status::UnitaryShort => rep.positive_semidefinite && rep.kernel_total() > 0,
        Status::NonUnitary if rep.positive_semidefinite => return Ok(None),
        Status::NonUnitary => true,
    };
    Ok(Some((!ok).then(|| format!("gram {l}: {:?}", v.status))))
}

pub fn run(max_total: usize, cutoff: usize) -> Result<Summary> {
    let labels = grid(max_total, 2, 3);
    let plaq: Vec<(usize, Vec<String>)> = labels.par_iter().map(plaquette_disagreements).collect::<Result<_>>()?;
    let small = grid(max_total.min(4), 1, 2);
    let gram: Vec<Option<Option<String>>> = small.par_iter().map(|l| gram_disagreement(l, cutoff)).collect::<Result<_>>()?;
    let mut disagreements: Vec<String> = plaq.iter().flat_map(|p| p.1.iter().cloned()).collect();
    disagreements.extend(gram.iter().flatten().flatten().cloned());
    Ok(Summary {
        labels: labels.len(),
        gradings: plaq.iter().map(|p| p.0).sum(),
        gram_labels: small.len(),
        gram_inconclusive: gram.iter().filter(|g| g.is_none()).count(),
        disagreements,
    })
}
