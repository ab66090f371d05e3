//! Unitary highest-weight representations of su(p,q|m): gradings and
//! duality, the classification theorems, non-compact Young diagrams,
//! shortening structure, and an exact oscillator/Gram oracle.
//!
//! Every number is an exact rational ([`Q`]); verdicts never depend on a tolerance.

pub mod algebra_core;
pub mod classify;
pub mod diagrams;
pub mod duality;
pub mod error;
pub mod oscillator;
pub mod rational;
pub mod shortening;
pub mod tables;

pub use algebra_core::{
    admits_nontrivial_unitary, canonical_form, dynkin_from_fundamental, extended_diagram, node_kinds, outer_dual,
    parse_grading, render_grading, signature, Block, DynkinWeight, ExtendedDiagram, FundamentalWeight, Grading,
    IndexKind, NodeKind, Parity, Partition, RealFormName, RealFormSignature, Slot, SuperShape,
};
pub use classify::{
    classify_contravariant, classify_covariant, classify_supq, classify_supqm, label_from_weight, mack_classify,
    psu_central_charge, weight_from_label, RepLabel, Side, Status, Verdict, Witness, WitnessKind,
};
pub use diagrams::{
    carve, extend, fat_hook, from_thook, iso_move_lower, iso_move_upper, read_weight, realize, render, to_thook,
    ExtendedYoungDiagram, FatHook, NonCompactYoungDiagram, Realization, RenderFormat, Strategy, THookDiagram,
};
pub use duality::{
    build_weight_lattice, build_weight_lattice_with_order, lattice_gradings, duality_step, plaquette_check, weight_in_grading,
    PlaquetteReport, WeightLattice,
};
pub use error::{Error, Result};
pub use rational::{fmt_q, parse_q, Q};
pub use shortening::{
    bps_type_22_4, can_recombine, dolan_osborn, shortening_profile, BpsFractions, DolanOsbornLabel, DoClass,
    ShorteningProfile,
};
