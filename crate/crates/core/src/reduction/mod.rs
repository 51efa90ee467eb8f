//! Polynomial reduction from 3-SAT: a formula is satisfiable exactly when
//! its graph has double Roman bondage number 1.

mod checks;
mod cnf;
mod gadget;

pub use checks::{
    certificate_from_assignment, deletion_certificate, verify_reduction, Check, DeletionAudit, DeletionCertificate,
    Pattern, ReductionReport, Status, VerifyOptions, MAX_VERIFY_CLAUSES, MAX_VERIFY_VARS,
};
pub use cnf::{parse_dimacs_cnf, sat_bruteforce, Clause, CnfFormula, Literal, MAX_SAT_VARS};
pub use gadget::{build_reduction, ReductionGraph, VertexRole};
