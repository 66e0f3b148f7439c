//! Desk-scale workbench for Borel-fixed ideals, generic-initial-ideal rewriting,
//! Groebner bases over prime fields, surface divisor arithmetic and liaison
//! bookkeeping for degree-11 rational curves.

pub mod audit;
pub mod monomial;
pub mod enumeration;
pub mod groebner;
pub mod liaison;
pub mod report;
pub mod rewriting;
pub mod surface;

pub use monomial::{
    borel_closure, graded_profile, is_borel_fixed, is_saturated, one_dim_degree_genus, point_cohomology,
    regularity, GradedProfile, Monomial, MonomialError, MonomialIdeal,
};
pub use rewriting::{
    apply_rule, cone_genus, curve_genus, ideal_of, rewrite_tally, tree_of, GeneratorTree, RewriteEvent,
    RewriteHistory, RuleFamily, StaircaseP3,
};
pub use groebner::{
    groebner_basis, implicitize, macaulay_check, solve_syzygy_constraints, syzygy_splitting_type, BinaryForm,
    Fixture, GroebnerBasis, GroebnerError, ImplicitOptions, Implicitization, PrimeField, Ring, SparsePolynomial,
    TermOrder,
};
pub use audit::{full_audit, run_audit, AuditCase, AuditError, AuditReport, CaseRecord, Contribution, Provenance, Verdict};
pub use enumeration::{nonproblematic, rtb_strata, ConstraintSet, SplittingType};
pub use liaison::{koszul_chi, liaison_residual_chi, RationalPolynomial};
pub use report::ReportDocument;
pub use surface::{DivisorClass, SurfaceError, SurfaceModel};
