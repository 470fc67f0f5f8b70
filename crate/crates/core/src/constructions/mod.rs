//! Explicit constructions: amalgamation, the gadget `H`, the injection `f`,
//! and extension axioms.

mod amalgam;
mod axiom;
mod injection;
mod preimage;

pub use amalgam::{
    amalgamate_cr, amalgamate_mr, amalgamate_mr_with, check_amalgam_mr, Amalgam, MrRule, MAX_AMALGAM_FACTOR, MAX_AMALGAM_R,
};
pub use axiom::{
    empirical_mu, eval_extension_axiom, find_extension_failure, wilson_interval, ExtensionAxiom, Family, MuCurve,
    MuPoint,
};
pub use injection::{classify_d_case, gadget_h, inject_f, DCase, InjectionTrace};
pub use preimage::{preimage_analysis, PreimageReport};
