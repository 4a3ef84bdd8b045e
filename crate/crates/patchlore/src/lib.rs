//! Mailing-list review mining, rule-backed patch validation, and
//! ground-truth coverage scoring.
//!
//! The crate is organized around the life cycle of a patch proposal:
//!
//! - [`corpus`] ingests mbox archives, reconstructs discussion threads,
//!   parses unified diffs out of patch mails, and computes mailing-list
//!   statistics.
//! - [`llmgate`] is a provider-agnostic completion gateway with prompt
//!   templating, structured-output parsing, and deterministic
//!   record/replay for tests.
//! - [`rulegen`] distills review discussions into a consolidated rule set
//!   (extract, filter, categorize, consolidate) with full provenance.
//! - [`rulestore`] persists and queries rule-set snapshots.
//! - [`codectx`] builds a lexical symbol index over a source tree and
//!   retrieves the definitions, comments, and call paths relevant to a
//!   patch.
//! - [`validate`] runs the four-stage validation pipeline that turns a
//!   patch series plus a rule set into a reference-backed issue report.
//! - [`gcseval`] scores any issue-generating system against ground-truth
//!   fix patches (coverage scores, confidence thresholding, Cohen's
//!   kappa).
//! - [`config`] holds the run configuration shared by the CLI commands.

pub mod codectx;
pub mod config;
pub mod corpus;
pub mod gcseval;
pub mod llmgate;
pub mod rulegen;
pub mod rulestore;
pub mod validate;
