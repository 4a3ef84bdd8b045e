//! Ground-truth coverage scoring for issue-generating systems.
//!
//! Given a dataset of (buggy patch, fix patch) pairs, the harness asks a
//! candidate system for issues on the buggy patch, derives four judgment
//! criteria from the fix patch, has a verifier judge every issue against
//! every criterion, and aggregates the judgments into coverage scores:
//!
//! - `wcs` — per-criterion weighted confidence, `(confidence / 100) * match`.
//! - `score_rationale` — mean over issues of the mean over the four
//!   criteria (one verifier pass).
//! - `gcs` — best-of-N maximum over runs of the K-vote average of
//!   rationale scores.
//! - `h_gcs` — same aggregation, but each rationale contributes its
//!   best-covered issue instead of the issue mean.
//! - `final_score` — candidate coverage divided by the ground truth's
//!   coverage of itself.
//!
//! [`kappa`] adds Cohen's kappa for verifier-vs-human agreement audits.

mod criteria;
mod harness;
mod judge;
mod kappa;
mod score;

pub use criteria::{criteria_cache_key, generate_criteria, CriteriaSet, Criterion, CriterionKind};
pub use harness::{
    evaluate_pair, evaluate_pairs, ground_truth_issue, read_pairs_file, write_aggregate_csv,
    write_results_jsonl, EvalHarness, PairOutcome, PairSpec, RunAudit, SystemUnderEval,
};
pub use judge::{judge_issues, JudgeOutcome};
pub use kappa::{cohens_kappa, KappaResult};
pub use score::{
    apply_confidence_threshold, final_score, gcs, h_gcs, score_rationale,
    score_rationale_highest, wcs, CriterionJudgment, CriterionJudgments, EvalConfig,
    IssueJudgment, Rationale, RunJudgments, ScoreBundle,
};

use thiserror::Error;

/// Errors produced while scoring or orchestrating an evaluation.
#[derive(Debug, Error)]
pub enum EvalError {
    #[error("label sequences differ in length ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("need at least 2 paired labels, got {0}")]
    TooFewLabels(usize),

    #[error("chance agreement is 1 (both raters constant); kappa is undefined")]
    DegenerateMarginals,

    #[error("ground-truth coverage is zero; final score is undefined")]
    DegenerateGroundTruth,

    #[error("expected {expected} runs, got {got}")]
    RaggedRuns { expected: usize, got: usize },

    #[error("run {run} has {got} rationales, expected {expected}")]
    RaggedRationales {
        run: usize,
        expected: usize,
        got: usize,
    },

    #[error("run {run}, rationale {rationale}: judgments cover {got} issues, expected {expected}")]
    MissingJudgments {
        run: usize,
        rationale: usize,
        expected: usize,
        got: usize,
    },

    #[error("invalid evaluation config: {0}")]
    Config(String),

    #[error("fix patch has an empty commit message; cannot derive criteria")]
    EmptyCommitMessage,

    #[error("criterion judgment out of range: {0}")]
    JudgmentOutOfRange(String),

    #[error("pair references unknown message-id {0}")]
    UnknownMessage(String),

    #[error("message {0} does not parse as a patch")]
    NotAPatch(String),

    #[error("malformed pairs file at line {line}: {reason}")]
    PairsFile { line: usize, reason: String },

    #[error(transparent)]
    Gateway(#[from] crate::llmgate::GatewayError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
