//! Exact oscillator and Gram oracle.
//!
//! Two independent constructions live here: the explicit (deformed) Fock
//! realisation and the abstract module induced from a K-type. Both use exact
//! rationals throughout.

pub mod fgamma;
pub mod fock;
pub mod induced;
pub mod kmodule;
pub mod linalg;
pub mod module;
pub mod poly;
pub mod tensor;

pub use fgamma::{capelli_identity_check, capelli_norm_factor, GammaBlock};
pub use fock::{
    apply_generator, build_u0, check_commutators, deformed_action, fock_basis, generator_matrix, helicity, inner_product,
    is_massless, verify_hws, FockState, FockVector, GeneratorMatrix, HwsCheck, Osc, OscillatorSpec, Species,
};
pub use induced::{gram_positivity, gram_positivity_weight, GramReport, InducedModule, NegativeWitness, SliceReport, Vector};
pub use kmodule::{GlIrrep, KModule};
pub use module::{oscillator_gram, oscillator_module, OscSlice};
pub use linalg::{ldl_scan, LdlScan};
pub use tensor::{gl_tensor, tensor_decompose};
