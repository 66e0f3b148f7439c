//! Groebner bases over `Z/p`, implicitization of rational curves, and syzygies of binary forms.

pub mod binary;
pub mod buchberger;
pub mod field;
pub mod fixtures;
pub mod implicit;
pub mod linalg;
pub mod poly;
pub mod syzygy;

use thiserror::Error;

pub use binary::{common_factor_degree, parse_param_file, BinaryForm};
pub use buchberger::{groebner_basis, interreduce, is_groebner_basis, is_reduced, normal_form, GbOptions, GbStats, GroebnerBasis};
pub use field::{PrimeField, DEFAULT_MODULUS};
pub use fixtures::Fixture;
pub use implicit::{evaluation_profile, image_degree_genus, implicitize, macaulay_check, EvaluationProfile, ImplicitOptions, Implicitization, MacaulayCheck};
pub use linalg::Matrix;
pub use poly::{Ring, SparsePolynomial, Term, TermOrder};
pub use syzygy::{
    common_scalar, parse_relation, render_forms, solve_syzygy_constraints, syzygy_dimension_oracle, syzygy_splitting_type, Relation, SyzygyRecord,
    SyzygySolution,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("form is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("no forms given")]
    NoForms,
    #[error("forms have different degrees {0:?}")]
    DegreeMismatch(Vec<u32>),
    #[error("all forms are proportional; the image is a point")]
    Proportional,
    #[error("forms share a common factor of degree {0}; the map has base points")]
    BasePoints(usize),
    #[error("expected {expected} forms, got {got}")]
    FormCount { expected: usize, got: usize },
    #[error("relation refers to f_{index} but only {count} forms are unknown")]
    FormIndex { index: usize, count: usize },
    #[error("relation {0} mixes coefficient degrees")]
    InconsistentRelation(usize),
    #[error("syzygy module is not free of the expected rank: {0}")]
    Syzygy(String),
    #[error(transparent)]
    Monomial(#[from] crate::monomial::MonomialError),
}
