//! Generalised eigenproblems and commuting symmetric matrices.

pub mod commute;
pub mod geneig;

pub use commute::{commute_symmetric, verify_commute, CommutingFamily};
pub use geneig::{
    expand_support, geneig_check_lambda, geneig_necessary, geneig_reduce, geneig_trivial_checks, geneig_witness,
    lambda_candidates, GenEigReport, Reduction, Verdict,
};
