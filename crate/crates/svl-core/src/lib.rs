//! Verification toolchain for SVL, a small Ada-flavoured contract language.
//!
//! The pipeline mirrors how a deductive verifier is deployed in practice:
//! sources are parsed and resolved ([`syntax`], [`sem`]), checked for
//! dimensional consistency ([`dims`]), lowered to verification conditions
//! ([`vcgen`]), discharged by a budgeted interval solver ([`solver`]),
//! summarized into an assumption dependency graph ([`assumptions`]) and a
//! tabular report ([`report`]), and finally screened by a registry of audit
//! rules that look for proof-masking patterns ([`audit`]). A ground-truth
//! interpreter ([`oracle`]) executes the same programs with every
//! language-defined check enabled, so analysis verdicts can be compared with
//! what actually happens on the target.

pub mod assumptions;
pub mod audit;
pub mod dims;
pub mod fp;
pub mod loc;
pub mod logic;
pub mod oracle;
pub mod pipeline;
pub mod report;
pub mod sem;
pub mod solver;
pub mod syntax;
pub mod target;
pub mod vcgen;

pub use loc::{Diagnostic, Loc, SourceUnit};
pub use target::TargetConfig;
