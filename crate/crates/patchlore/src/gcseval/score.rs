//! Pure score arithmetic: weighted confidence, rationale scores, coverage
//! aggregation, and confidence thresholding.
//!
//! All accumulation uses pairwise summation in double precision, and every
//! mean is clamped into the [min, max] range of its inputs so that the
//! mathematical invariants (scores in [0, 1], max >= mean, vote-order
//! independence) hold bit-for-bit, not just approximately.

use serde::{Deserialize, Serialize};

use super::EvalError;

/// One verifier verdict for a single criterion on a single issue.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionJudgment {
    /// Whether the verifier answered "yes" to the criterion question.
    pub matched: bool,
    /// Self-reported confidence, an integer in [1, 100].
    pub confidence: u8,
    /// Free-form reasoning recorded for audit.
    pub reason: String,
}

impl CriterionJudgment {
    pub fn new(matched: bool, confidence: u8, reason: impl Into<String>) -> Self {
        Self {
            matched,
            confidence,
            reason: reason.into(),
        }
    }

    pub fn validate(&self) -> Result<(), EvalError> {
        if self.confidence < 1 || self.confidence > 100 {
            return Err(EvalError::JudgmentOutOfRange(format!(
                "confidence {} outside [1, 100]",
                self.confidence
            )));
        }
        Ok(())
    }
}

/// The four per-issue criterion judgments, one per criterion kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionJudgments {
    pub root_cause: CriterionJudgment,
    pub code_location: CriterionJudgment,
    pub fixing_strategy: CriterionJudgment,
    pub keyword_overlap: CriterionJudgment,
}

impl CriterionJudgments {
    pub fn as_array(&self) -> [&CriterionJudgment; 4] {
        [
            &self.root_cause,
            &self.code_location,
            &self.fixing_strategy,
            &self.keyword_overlap,
        ]
    }

    fn map(&self, f: impl Fn(&CriterionJudgment) -> CriterionJudgment) -> Self {
        Self {
            root_cause: f(&self.root_cause),
            code_location: f(&self.code_location),
            fixing_strategy: f(&self.fixing_strategy),
            keyword_overlap: f(&self.keyword_overlap),
        }
    }
}

/// The verifier's verdicts for one issue within one rationale.
///
/// The overall match/confidence fields are recorded for audit but do not
/// enter the score arithmetic, which averages only per-criterion values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IssueJudgment {
    pub overall_match: bool,
    pub overall_confidence: u8,
    pub criteria: CriterionJudgments,
}

/// One CoT-verification pass covering every issue of a run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rationale {
    /// 1-based vote index within the run (1 <= k <= K).
    pub vote: usize,
    pub issues: Vec<IssueJudgment>,
}

/// The K rationales judging one candidate issue set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunJudgments {
    pub rationales: Vec<Rationale>,
}

/// Evaluation shape: best-of-N, K-vote averaging, and the optional
/// confidence threshold (0 disables).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalConfig {
    pub n: usize,
    pub k: usize,
    pub confidence_threshold: u8,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            n: 10,
            k: 3,
            confidence_threshold: 0,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<(), EvalError> {
        if self.n < 1 {
            return Err(EvalError::Config("N must be >= 1".into()));
        }
        if self.k < 1 {
            return Err(EvalError::Config("K must be >= 1".into()));
        }
        if self.confidence_threshold > 100 {
            return Err(EvalError::Config(format!(
                "confidence threshold {} outside [0, 100]",
                self.confidence_threshold
            )));
        }
        Ok(())
    }
}

/// Aggregate scores for one (buggy, fix) pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreBundle {
    pub gcs: f64,
    pub h_gcs: f64,
    pub gcs_ground_truth: f64,
    pub final_score: f64,
}

impl ScoreBundle {
    pub fn new(
        gcs: f64,
        h_gcs: f64,
        gcs_ground_truth: f64,
        final_score: f64,
    ) -> Result<Self, EvalError> {
        if h_gcs < gcs {
            return Err(EvalError::Config(format!(
                "h_gcs {h_gcs} below gcs {gcs}; aggregation is inconsistent"
            )));
        }
        Ok(Self {
            gcs,
            h_gcs,
            gcs_ground_truth,
            final_score,
        })
    }
}

/// Pairwise (cascade) summation; deterministic and low-error.
fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let (lo, hi) = values.split_at(n / 2);
            pairwise_sum(lo) + pairwise_sum(hi)
        }
    }
}

/// Mean clamped into the [min, max] range of its inputs.
///
/// The clamp makes `max >= mean` and range containment exact in floating
/// point. Empty input scores 0 (no issues means no coverage).
fn bounded_mean(values: &[f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &v in values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    (pairwise_sum(values) / values.len() as f64).clamp(lo, hi)
}

/// Mean over vote scores, invariant under permutation of the votes.
///
/// Sorting before summation makes the result independent of rationale
/// order even at the level of floating-point rounding.
fn vote_mean(values: &[f64]) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("scores are never NaN"));
    bounded_mean(&sorted)
}

/// Weighted confidence score for one criterion judgment.
pub fn wcs(judgment: &CriterionJudgment) -> f64 {
    let b = if judgment.matched { 1.0 } else { 0.0 };
    (judgment.confidence as f64 / 100.0) * b
}

fn issue_score(issue: &IssueJudgment) -> f64 {
    let scores: Vec<f64> = issue.criteria.as_array().iter().map(|j| wcs(j)).collect();
    bounded_mean(&scores)
}

fn rationale_issue_scores(
    issue_count: usize,
    run: usize,
    vote: usize,
    rationale: &Rationale,
) -> Result<Vec<f64>, EvalError> {
    if rationale.issues.len() != issue_count {
        return Err(EvalError::MissingJudgments {
            run,
            rationale: vote,
            expected: issue_count,
            got: rationale.issues.len(),
        });
    }
    Ok(rationale.issues.iter().map(issue_score).collect())
}

/// Score of one rationale: mean over issues of the per-issue criterion mean.
pub fn score_rationale(issue_count: usize, rationale: &Rationale) -> Result<f64, EvalError> {
    let scores = rationale_issue_scores(issue_count, 0, rationale.vote, rationale)?;
    Ok(bounded_mean(&scores))
}

/// Highest-coverage variant: the rationale contributes its best-covered
/// issue instead of the mean over issues.
pub fn score_rationale_highest(
    issue_count: usize,
    rationale: &Rationale,
) -> Result<f64, EvalError> {
    let scores = rationale_issue_scores(issue_count, 0, rationale.vote, rationale)?;
    Ok(scores.iter().copied().fold(0.0, f64::max))
}

fn aggregate(
    issue_counts: &[usize],
    runs: &[RunJudgments],
    config: &EvalConfig,
    highest: bool,
) -> Result<f64, EvalError> {
    config.validate()?;
    if runs.len() != config.n || issue_counts.len() != runs.len() {
        return Err(EvalError::RaggedRuns {
            expected: config.n,
            got: runs.len().min(issue_counts.len()),
        });
    }
    let mut best = 0.0f64;
    for (run_idx, (run, &issue_count)) in runs.iter().zip(issue_counts).enumerate() {
        if run.rationales.len() != config.k {
            return Err(EvalError::RaggedRationales {
                run: run_idx,
                expected: config.k,
                got: run.rationales.len(),
            });
        }
        let mut vote_scores = Vec::with_capacity(config.k);
        for rationale in &run.rationales {
            let scores =
                rationale_issue_scores(issue_count, run_idx, rationale.vote, rationale)?;
            let score = if highest {
                scores.iter().copied().fold(0.0, f64::max)
            } else {
                bounded_mean(&scores)
            };
            vote_scores.push(score);
        }
        best = best.max(vote_mean(&vote_scores));
    }
    Ok(best)
}

/// Ground-truth coverage score: best-of-N maximum over runs of the K-vote
/// average of rationale scores.
pub fn gcs(
    issue_counts: &[usize],
    runs: &[RunJudgments],
    config: &EvalConfig,
) -> Result<f64, EvalError> {
    aggregate(issue_counts, runs, config, false)
}

/// Highest-coverage variant of [`gcs`]; reports how well the single
/// best-covered issue of each rationale tracks the ground truth.
pub fn h_gcs(
    issue_counts: &[usize],
    runs: &[RunJudgments],
    config: &EvalConfig,
) -> Result<f64, EvalError> {
    aggregate(issue_counts, runs, config, true)
}

/// Ratio of candidate coverage to the ground truth's self-coverage.
pub fn final_score(gcs_system: f64, gcs_ground_truth: f64) -> Result<f64, EvalError> {
    if gcs_ground_truth <= 0.0 {
        return Err(EvalError::DegenerateGroundTruth);
    }
    Ok(gcs_system / gcs_ground_truth)
}

/// Zero out every criterion judgment whose confidence falls below `tau`
/// (treated as a "no" match). `tau == 0` is the identity.
pub fn apply_confidence_threshold(runs: &[RunJudgments], tau: u8) -> Vec<RunJudgments> {
    runs.iter()
        .map(|run| RunJudgments {
            rationales: run
                .rationales
                .iter()
                .map(|rationale| Rationale {
                    vote: rationale.vote,
                    issues: rationale
                        .issues
                        .iter()
                        .map(|issue| IssueJudgment {
                            overall_match: issue.overall_match,
                            overall_confidence: issue.overall_confidence,
                            criteria: issue.criteria.map(|j| CriterionJudgment {
                                matched: j.matched && j.confidence >= tau,
                                confidence: j.confidence,
                                reason: j.reason.clone(),
                            }),
                        })
                        .collect(),
                })
                .collect(),
        })
        .collect()
}
