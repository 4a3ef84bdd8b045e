//! Cohen's kappa for verifier-vs-human agreement on binary judgments.

use serde::{Deserialize, Serialize};

use super::EvalError;

/// Kappa with its large-sample 95% confidence interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KappaResult {
    pub kappa: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub standard_error: f64,
    pub observed_agreement: f64,
    pub chance_agreement: f64,
    pub n: usize,
}

/// Cohen's kappa between two binary raters.
///
/// `kappa = (p_o - p_e) / (1 - p_e)` with chance agreement from the
/// marginal products. The confidence interval uses the asymptotic
/// standard error `sqrt(p_o (1 - p_o) / (n (1 - p_e)^2))`, clipped to
/// [-1, 1].
pub fn cohens_kappa(human: &[bool], verifier: &[bool]) -> Result<KappaResult, EvalError> {
    if human.len() != verifier.len() {
        return Err(EvalError::LengthMismatch {
            left: human.len(),
            right: verifier.len(),
        });
    }
    if human.len() < 2 {
        return Err(EvalError::TooFewLabels(human.len()));
    }
    let n = human.len();
    let agree = human
        .iter()
        .zip(verifier)
        .filter(|(h, v)| h == v)
        .count();
    let human_yes = human.iter().filter(|&&h| h).count();
    let verifier_yes = verifier.iter().filter(|&&v| v).count();

    // Degeneracy check in integers: p_e == 1 exactly when
    // yes_h * yes_v + no_h * no_v == n^2.
    let n2 = (n as u128) * (n as u128);
    let chance_num = (human_yes as u128) * (verifier_yes as u128)
        + ((n - human_yes) as u128) * ((n - verifier_yes) as u128);
    if chance_num == n2 {
        return Err(EvalError::DegenerateMarginals);
    }

    let nf = n as f64;
    let p_o = agree as f64 / nf;
    let p_e = (human_yes as f64 * verifier_yes as f64
        + (n - human_yes) as f64 * (n - verifier_yes) as f64)
        / (nf * nf);
    let kappa = (p_o - p_e) / (1.0 - p_e);
    let se = (p_o * (1.0 - p_o) / (nf * (1.0 - p_e) * (1.0 - p_e))).sqrt();
    let half = 1.96 * se;
    Ok(KappaResult {
        kappa,
        ci_low: (kappa - half).max(-1.0),
        ci_high: (kappa + half).min(1.0),
        standard_error: se,
        observed_agreement: p_o,
        chance_agreement: p_e,
        n,
    })
}

/// Expand a 2x2 confusion matrix into paired label vectors
/// (human first, verifier second).
pub fn labels_from_confusion(
    true_pos: usize,
    false_pos: usize,
    false_neg: usize,
    true_neg: usize,
) -> (Vec<bool>, Vec<bool>) {
    let mut human = Vec::new();
    let mut verifier = Vec::new();
    for _ in 0..true_pos {
        human.push(true);
        verifier.push(true);
    }
    for _ in 0..false_pos {
        human.push(false);
        verifier.push(true);
    }
    for _ in 0..false_neg {
        human.push(true);
        verifier.push(false);
    }
    for _ in 0..true_neg {
        human.push(false);
        verifier.push(false);
    }
    (human, verifier)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_agreement_on_mixed_labels_is_one() {
        let labels = vec![true, false, true, true, false];
        let k = cohens_kappa(&labels, &labels).unwrap();
        assert_eq!(k.kappa, 1.0);
    }

    #[test]
    fn verifier_audit_confusion_matrix() {
        // 39 agreed-yes, 2 verifier-only yes, 1 human-only yes, 38 agreed-no.
        let (human, verifier) = labels_from_confusion(39, 2, 1, 38);
        let k = cohens_kappa(&human, &verifier).unwrap();
        assert!((k.kappa - 0.925).abs() < 1e-3, "kappa {}", k.kappa);
        assert!((k.observed_agreement - 0.9625).abs() < 1e-12);
        assert!((k.chance_agreement - 0.5).abs() < 1e-12);
        assert!((k.ci_low - 0.842).abs() < 1e-3, "ci_low {}", k.ci_low);
        assert_eq!(k.ci_high, 1.0, "upper end clips to 1");
    }

    #[test]
    fn chance_level_agreement_is_zero() {
        // 50/50 marginals with p_o = 0.5.
        let (human, verifier) = labels_from_confusion(1, 1, 1, 1);
        let k = cohens_kappa(&human, &verifier).unwrap();
        assert_eq!(k.kappa, 0.0);
    }

    #[test]
    fn constant_raters_are_degenerate() {
        let human = vec![true, true, true];
        let verifier = vec![true, true, true];
        assert!(matches!(
            cohens_kappa(&human, &verifier),
            Err(EvalError::DegenerateMarginals)
        ));
    }

    #[test]
    fn length_mismatch_rejected() {
        assert!(matches!(
            cohens_kappa(&[true, false], &[true]),
            Err(EvalError::LengthMismatch { .. })
        ));
        assert!(matches!(
            cohens_kappa(&[true], &[true]),
            Err(EvalError::TooFewLabels(1))
        ));
    }
}
