//! Finite commutative rings, ideal lattices, amalgamated algebras along an
//! ideal, and mechanical deciders for the arithmetical / Gaussian / Prüfer
//! property ladder, with exact p-local instances for the cases finite rings
//! cannot reach.
//!
//! Everything is immutable after construction and every operation is pure,
//! so values can be shared freely across threads.

pub mod amalgam;
pub mod classify;
pub mod corpus;
pub mod error;
pub mod exact;
pub mod hom;
pub mod ideal;
pub mod plocal;
pub mod prufer;
pub mod ring;
pub mod rmodule;

/// Order cap for exhaustive enumerations (ideal lattices, classifiers,
/// property deciders).
pub const ENUMERATION_CAP: usize = 256;

pub use amalgam::{
    locality_transfer_check, make_amalgamation, make_duplication, max_spectrum_pattern,
    quotient_iso_check, zero_divisor_formula_check, zero_divisor_formula_rhs, AmalgamRing,
};
pub use classify::{classify, classify_with_lattice, is_torsion_module, local_decomposition, ClassifiedRing};
pub use error::{CoreError, Result};
pub use exact::{
    divides_in_duplication, duplication_pruefer_check, ideal_scaling_condition,
    idealization_instance_check, integer_amalgam_zero_divisor_check, pruefer_witness_search,
    DuplicationElement, IdealExp,
};
pub use hom::{canonical_zmod_hom, hom_by, identity_hom, make_hom, RingHom};
pub use ideal::{
    all_ideals, colon_ideal, content, ideal_closure, ideal_combine, is_invertible, Ideal,
    IdealCombine,
};
pub use plocal::PLocalRational;
pub use prufer::{
    check_hierarchy, check_hierarchy_with_lattice, gaussian_content_oracle, gaussian_lift_check,
    gaussian_pair_verdict, is_arithmetical, is_arithmetical_with_lattice, is_gaussian,
    is_pruefer_finite, PropertyReport,
};
pub use ring::{
    find_ring_isomorphism, make_product, make_quotient, make_zmod, verify_ring_axioms, Elem,
    FiniteRing,
};
pub use rmodule::{make_trivial_extension, module_quotient, module_self, ModuleOverRing};
