//! Labeled-corpus evaluation: confusion counts against human plagiarism
//! labels, recall/precision/F-measure, threshold sweeps, and Cohen's kappa
//! for annotator agreement.
//!
//! Each corpus record pairs one reference sentence with its corresponding
//! candidate sentence; scoring compares exactly those pairs (not the full
//! cross product).

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{score_pair, MethodConfig};
use crate::error::{Error, Result};
use crate::preprocess::preprocess_sentence;
use crate::wordnet::WordNetDb;

/// One human-labeled sentence pair.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LabeledPair {
    pub id: String,
    pub reference: String,
    pub candidate: String,
    pub label: bool,
}

/// Parse a JSON-Lines corpus; ids must be unique and all fields present.
pub fn parse_corpus(text: &str, file_name: &str) -> Result<Vec<LabeledPair>> {
    let mut pairs = Vec::new();
    let mut seen = HashSet::new();
    for (line_no, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let pair: LabeledPair = serde_json::from_str(line).map_err(|e| Error::Parse {
            file: file_name.to_string(),
            line: line_no + 1,
            msg: e.to_string(),
        })?;
        if !seen.insert(pair.id.clone()) {
            return Err(Error::DuplicateId(pair.id));
        }
        pairs.push(pair);
    }
    Ok(pairs)
}

/// Load a JSON-Lines corpus from disk.
pub fn load_corpus(path: &Path) -> Result<Vec<LabeledPair>> {
    let text = fs::read_to_string(path)?;
    parse_corpus(&text, &path.display().to_string())
}

/// TP/FP/TN/FN tally over one labeled corpus.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfusionCounts {
    pub true_pos: usize,
    pub false_pos: usize,
    pub true_neg: usize,
    pub false_neg: usize,
}

impl ConfusionCounts {
    pub fn total(&self) -> usize {
        self.true_pos + self.false_pos + self.true_neg + self.false_neg
    }
}

/// How a score is compared against the threshold.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub enum Thresholding {
    /// Positive iff score is strictly greater than the threshold.
    #[default]
    Strict,
    /// Positive iff score >= threshold.
    Inclusive,
}

/// Strict threshold classification: positive iff `score > threshold`.
pub fn classify(score: f64, threshold: f64) -> bool {
    score > threshold
}

pub fn classify_with(score: f64, threshold: f64, mode: Thresholding) -> bool {
    match mode {
        Thresholding::Strict => score > threshold,
        Thresholding::Inclusive => score >= threshold,
    }
}

/// Score each pair's reference against its own candidate. Scores are
/// reusable across thresholds.
pub fn score_corpus(
    cfg: &MethodConfig,
    corpus: &[LabeledPair],
    db: Option<&WordNetDb>,
) -> Result<Vec<f64>> {
    cfg.validate()?;
    if cfg.needs_wordnet() && db.is_none() {
        return Err(Error::MissingLexicon);
    }
    corpus
        .par_iter()
        .map(|pair| {
            let reference = preprocess_sentence(&pair.reference, &cfg.preprocess, db)?;
            let candidate = preprocess_sentence(&pair.candidate, &cfg.preprocess, db)?;
            Ok(score_pair(cfg, &reference, &candidate, db)?.f)
        })
        .collect()
}

fn tally(
    scores: &[f64],
    corpus: &[LabeledPair],
    threshold: f64,
    mode: Thresholding,
) -> ConfusionCounts {
    let mut counts = ConfusionCounts::default();
    for (score, pair) in scores.iter().zip(corpus) {
        match (classify_with(*score, threshold, mode), pair.label) {
            (true, true) => counts.true_pos += 1,
            (true, false) => counts.false_pos += 1,
            (false, false) => counts.true_neg += 1,
            (false, true) => counts.false_neg += 1,
        }
    }
    counts
}

/// Confusion counts for one method configuration at its threshold.
pub fn confusion(
    cfg: &MethodConfig,
    corpus: &[LabeledPair],
    db: Option<&WordNetDb>,
    mode: Thresholding,
) -> Result<ConfusionCounts> {
    let scores = score_corpus(cfg, corpus, db)?;
    Ok(tally(&scores, corpus, cfg.threshold, mode))
}

/// Recall, precision and F-measure from confusion counts; any zero
/// denominator yields 0.
pub fn prf(counts: &ConfusionCounts) -> (f64, f64, f64) {
    let recall = div(counts.true_pos, counts.true_pos + counts.false_neg);
    let precision = div(counts.true_pos, counts.true_pos + counts.false_pos);
    let f = if recall + precision == 0.0 {
        0.0
    } else {
        2.0 * recall * precision / (recall + precision)
    };
    (recall, precision, f)
}

fn div(num: usize, den: usize) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

/// One threshold's worth of a sweep.
#[derive(Copy, Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub threshold: f64,
    pub counts: ConfusionCounts,
    pub recall: f64,
    pub precision: f64,
    pub f: f64,
}

/// Evaluate the corpus at several thresholds, scoring each pair once.
pub fn sweep(
    cfg: &MethodConfig,
    corpus: &[LabeledPair],
    thresholds: &[f64],
    db: Option<&WordNetDb>,
    mode: Thresholding,
) -> Result<Vec<SweepRow>> {
    for t in thresholds {
        if !(0.0..=1.0).contains(t) {
            return Err(Error::InvalidThreshold(*t));
        }
    }
    let scores = score_corpus(cfg, corpus, db)?;
    Ok(thresholds
        .iter()
        .map(|&threshold| {
            let counts = tally(&scores, corpus, threshold, mode);
            let (recall, precision, f) = prf(&counts);
            SweepRow {
                threshold,
                counts,
                recall,
                precision,
                f,
            }
        })
        .collect())
}

/// Two-rater, two-category Cohen's kappa. When chance agreement is 1 (both
/// raters constant and identical) kappa is defined as 1; a constant rater
/// disagreeing anywhere yields 0 through the ordinary formula.
pub fn cohen_kappa(a: &[bool], b: &[bool]) -> Result<f64> {
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    let n = a.len() as f64;
    let agreements = a.iter().zip(b).filter(|(x, y)| x == y).count() as f64;
    let a_pos = a.iter().filter(|x| **x).count() as f64;
    let b_pos = b.iter().filter(|x| **x).count() as f64;
    let observed = agreements / n;
    let expected = (a_pos / n) * (b_pos / n) + (1.0 - a_pos / n) * (1.0 - b_pos / n);
    if (1.0 - expected).abs() < 1e-12 {
        return Ok(if agreements as usize == a.len() {
            1.0
        } else {
            0.0
        });
    }
    Ok((observed - expected) / (1.0 - expected))
}
