//! `superdual`: unitarity, duality, diagrams and oscillator checks for su(p,q|m).
//!
//! Exit codes: 0 ok or unitary, 3 non-unitary, 2 usage error, 4 internal inconsistency.

mod input;
mod selfcheck;

use std::fs;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use superdual_core::oscillator::gram_positivity;
use superdual_core::tables::table;
use superdual_core::{
    bps_type_22_4, build_weight_lattice, can_recombine, classify_supqm, dolan_osborn, fmt_q, plaquette_check,
    psu_central_charge, read_weight, realize, render, weight_from_label, NonCompactYoungDiagram,
    Realization, RenderFormat, Status, Strategy,
};

const OK: u8 = 0;
const USAGE: u8 = 2;
const NON_UNITARY: u8 = 3;
const INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(name = "superdual", version, about = "Exact unitarity and duality checks for highest-weight representations of su(p,q|m)")]
struct Cli {
    /// Output format; `ascii` is accepted as an alias of `text`
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    #[value(alias = "ascii")]
    Text,
    Json,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Decide unitarity of a label (file, `-` for stdin, or inline JSON)
    Classify {
        #[arg(long)]
        label: String,
    },
    /// Highest weight of a label in a given grading
    Weight {
        #[arg(long)]
        label: String,
        /// Target grading, e.g. "su(2,2|4)"; defaults to su(p,|m|q)
        #[arg(long)]
        grading: Option<String>,
        /// Also emit weights of non-unitary labels
        #[arg(long)]
        allow_nonunitary: bool,
    },
    /// Weight lattice and plaquette signs of a weight
    Lattice {
        /// Weight object, or a bare entry array together with --grading
        #[arg(long, conflicts_with = "label")]
        weight: Option<String>,
        /// Build the weight from a label in --grading (default su(p,|m|q))
        #[arg(long)]
        label: Option<String>,
        #[arg(long)]
        grading: Option<String>,
    },
    /// Render the non-compact Young diagram of a label or diagram
    Diagram {
        #[arg(long)]
        label: String,
        /// Also read the weight off the diagram along this grading's path
        #[arg(long)]
        grading: Option<String>,
    },
    /// Shortening profile and, for su(2,2|4), the Dolan–Osborn label
    Shorten {
        #[arg(long)]
        label: String,
        /// Number of colours (keeps the minimal |F_Δ| and deformations)
        #[arg(long = "P")]
        colours: Option<i64>,
    },
    /// Dolan–Osborn label of an su(2,2|4) multiplet
    DoLabel {
        #[arg(long)]
        label: String,
    },
    /// Exact Gram scan of the induced module through a level cutoff
    Verify {
        #[arg(long)]
        label: String,
        #[arg(long, default_value_t = 4)]
        cutoff: usize,
    },
    /// Regenerate the doubleton tables
    Tables {
        /// 1: one-colour states; 2..7: two-colour tensor products
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=7))]
        table: u8,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Compare the text output with a golden file; exit 4 on mismatch
        #[arg(long)]
        diff: Option<String>,
    },
    /// Decompose the tensor product of two multiplets
    Tensor {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Plaquette ⇔ theorem and Gram ⇔ theorem sweeps on a bounded grid
    Selfcheck {
        /// Largest p + q + m in the plaquette sweep
        #[arg(long, default_value_t = 4)]
        max_total: usize,
        /// Level cutoff of the Gram sweep
        #[arg(long, default_value_t = 3)]
        cutoff: usize,
    },
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value)?),
        _ => print!("{}", text()),
    }
    Ok(())
}

fn status_code(s: Status) -> u8 {
    if s.is_unitary() {
        OK
    } else {
        NON_UNITARY
    }
}

fn is_224(d: &NonCompactYoungDiagram) -> bool {
    (d.p(), d.q(), d.m()) == (2, 2, 4)
}

fn run(cli: Cli) -> Result<u8> {
    let fmt = cli.format;
    match cli.command {
        Command::Classify { label } => {
            let l = input::label(&label)?;
            let v = classify_supqm(&l);
            let mut headline = format!("{:?}", v.status);
            let mut bps = None;
            if v.is_unitary() && (l.p, l.q, l.m) == (2, 2, 4) {
                let d = realize(&l, Strategy::MinimalP, false)?;
                let b = bps_type_22_4(&d)?;
                if v.status == Status::UnitaryShort {
                    headline.push_str(&format!(" ({},{})-BPS", fmt_q(&b.s), fmt_q(&b.s_bar)));
                }
                bps = Some(b);
            }
            let body = json!({ "label": l, "verdict": v, "bps": bps });
            emit(fmt, &body, || {
                let mut s = format!("{headline}\n");
                for w in &v.witnesses {
                    s.push_str(&format!("  {w}\n"));
                }
                s
            })?;
            Ok(status_code(v.status))
        }
        Command::Weight { label, grading, allow_nonunitary } => {
            let l = input::label(&label)?;
            let g = match grading {
                Some(g) => input::grading(&g)?,
                None => l.grading()?,
            };
            let w = weight_from_label(&l, &g, allow_nonunitary)?;
            emit(fmt, &w, || format!("{}\n", input::weight_text(&w)))?;
            Ok(OK)
        }
        Command::Lattice { weight, label, grading } => {
            let w = match (weight, label) {
                (Some(w), _) => input::weight(&w, grading.as_deref())?,
                (None, Some(l)) => {
                    let l = input::label(&l)?;
                    let g = match grading {
                        Some(g) => input::grading(&g)?,
                        None => l.grading()?,
                    };
                    weight_from_label(&l, &g, true)?
                }
                (None, None) => bail!("lattice needs --weight or --label"),
            };
            let lat = build_weight_lattice(&w)?;
            let rep = plaquette_check(&lat);
            let code = if rep.is_unitary() { OK } else { NON_UNITARY };
            let body = json!({ "weight": w, "lattice": lat, "plaquettes": rep });
            emit(fmt, &body, || {
                let pts = |v: &[(usize, usize)]| v.iter().map(|(x, y)| format!("({x},{y})")).collect::<Vec<_>>().join(" ");
                format!(
                    "{}\nviolations: {}\nzeros: {}\n",
                    rep.sign_matrix_text().trim_end(),
                    pts(&rep.violations),
                    pts(&rep.zeros)
                )
            })?;
            Ok(code)
        }
        Command::Diagram { label, grading } => {
            let d = input::diagram(&label, false)?;
            let read = match grading {
                Some(g) => Some(read_weight(&d, &input::grading(&g)?)?),
                None => None,
            };
            match fmt {
                Format::Svg => print!("{}", render(&d, RenderFormat::Svg)),
                Format::Json => println!("{}", serde_json::to_string_pretty(&json!({ "diagram": d, "weight": read }))?),
                Format::Text => {
                    print!("{}", render(&d, RenderFormat::Ascii));
                    if let Some(w) = &read {
                        println!("{}", input::weight_text(w));
                    }
                }
            }
            Ok(OK)
        }
        Command::Shorten { label, colours } => {
            let mut d = input::diagram(&label, false)?;
            if let Some(p) = colours {
                let r = &d.realization;
                let r = Realization::new(r.gamma_l.clone(), r.gamma_r.clone(), r.fdelta, p);
                d = realize(&d.label, Strategy::Explicit(r), false)?;
            }
            let prof = superdual_core::shortening::profile_of(&d);
            let dl = if is_224(&d) { Some(dolan_osborn(&d)?) } else { None };
            let body = json!({ "diagram": d, "profile": prof, "dolan_osborn": dl.as_ref().map(|x| x.to_string()) });
            emit(fmt, &body, || {
                let side = |v: &[Option<u32>]| {
                    v.iter().map(|x| x.map_or("-".to_string(), |r| r.to_string())).collect::<Vec<_>>().join(" ")
                };
                let mut s = format!("upper: {}\nlower: {}\n", side(&prof.upper), side(&prof.lower));
                if let Some(dl) = &dl {
                    s.push_str(&format!("{dl}\n"));
                }
                s
            })?;
            Ok(OK)
        }
        Command::DoLabel { label } => {
            let d = input::diagram(&label, false)?;
            let dl = dolan_osborn(&d)?;
            let z = psu_central_charge(&d.label)?;
            let recombines = if dl.class == superdual_core::DoClass::A { None } else { Some(can_recombine(&d)?) };
            let body = json!({ "label": dl.to_string(), "structure": dl, "central_charge": fmt_q(&z), "can_recombine": recombines });
            emit(fmt, &body, || format!("{dl}\n"))?;
            Ok(OK)
        }
        Command::Verify { label, cutoff } => {
            let l = input::label(&label)?;
            let v = classify_supqm(&l);
            let rep = gram_positivity(&l, cutoff)?;
            let agrees = match v.status {
                Status::UnitaryLong => rep.positive_definite,
                Status::UnitaryShort => rep.positive_semidefinite,
                // a negative norm may sit above the cutoff
                Status::NonUnitary => true,
            };
            let body = json!({ "verdict": v, "gram": rep, "agrees": agrees });
            emit(fmt, &body, || {
                let mut s = format!("{:?}\n", v.status);
                for sl in &rep.slices {
                    let w: Vec<String> = sl.weight.iter().map(|x| x.to_string()).collect();
                    s.push_str(&format!("level {} [{}] dim {} kernel {}\n", sl.level, w.join(","), sl.dim, sl.kernel_dim));
                }
                if let Some(nw) = &rep.negative_witness {
                    s.push_str(&format!("negative norm {} at level {}\n", nw.norm, nw.level));
                    for (word, c) in &nw.vector {
                        s.push_str(&format!("  {c} {word}\n"));
                    }
                }
                s
            })?;
            if !agrees {
                eprintln!("Gram scan contradicts the classification");
                return Ok(INTERNAL);
            }
            Ok(if rep.positive_semidefinite { OK } else { NON_UNITARY })
        }
        Command::Tables { table: number, m, n, diff } => {
            let t = table(number as usize, m, n)?;
            let text = t.to_text();
            emit(fmt, &t, || text.clone())?;
            if let Some(path) = diff {
                let golden = fs::read_to_string(&path)?;
                if golden != text {
                    let line = golden.lines().zip(text.lines()).position(|(a, b)| a != b);
                    let line = line.unwrap_or_else(|| golden.lines().count().min(text.lines().count()));
                    eprintln!("{path}: differs from the regenerated table at line {}", line + 1);
                    return Ok(INTERNAL);
                }
            }
            Ok(OK)
        }
        Command::Tensor { left, right } => {
            let a = input::diagram(&left, false)?;
            let b = input::diagram(&right, false)?;
            let labels = superdual_core::oscillator::tensor_decompose(&a, &b)?;
            emit(fmt, &labels, || labels.iter().map(|l| format!("{l}\n")).collect())?;
            Ok(OK)
        }
        Command::Selfcheck { max_total, cutoff } => {
            let s = selfcheck::run(max_total, cutoff)?;
            emit(fmt, &s, || s.to_text())?;
            Ok(if s.disagreements.is_empty() { OK } else { INTERNAL })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let internal = matches!(e.downcast_ref::<superdual_core::Error>(), Some(superdual_core::Error::Inconsistent(_)));
            ExitCode::from(if internal { INTERNAL } else { USAGE })
        }
    }
}
