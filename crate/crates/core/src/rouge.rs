//! ROUGE-style sentence scorers: clipped n-gram co-occurrence, longest
//! common subsequence, and skip-bigram statistics.
//!
//! Each scorer produces recall against the reference sentence, precision
//! against the candidate sentence, and their harmonic mean F. Matching
//! contributions are clipped: an n-gram counts at most as often as it occurs
//! in the sentence where it is rarer, so a candidate repeating one reference
//! word cannot inflate precision.
//!
//! The core functions are generic over the match key so the same machinery
//! serves plain surface/stem matching and (key, POS) matching.

use std::collections::HashMap;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::preprocess::Sentence;

/// Default maximum number of tokens allowed between the two members of a
/// skip-bigram. Recovered by sweeping d against the golden Example 1
/// skip-bigram score; see the acceptance suite.
pub const DEFAULT_SKIP_DISTANCE: usize = 4;

/// n-grams of one sentence with their occurrence counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NGramMultiset<K: Eq + Hash> {
    n: usize,
    counts: HashMap<Vec<K>, usize>,
}

impl<K: Eq + Hash> NGramMultiset<K> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &HashMap<Vec<K>, usize> {
        &self.counts
    }

    /// Sum of all occurrence counts (`max(0, len - n + 1)` for a sliding
    /// window over a sentence of length `len`).
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

/// Recall / precision / F-measure triple, all in [0, 1].
#[derive(Copy, Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SimilarityScore {
    pub recall: f64,
    pub precision: f64,
    pub f: f64,
}

impl SimilarityScore {
    pub const ZERO: SimilarityScore = SimilarityScore {
        recall: 0.0,
        precision: 0.0,
        f: 0.0,
    };

    /// Harmonic-mean F from recall and precision; 0 when both are 0.
    pub fn from_ratios(recall: f64, precision: f64) -> SimilarityScore {
        let f = if recall + precision == 0.0 {
            0.0
        } else {
            2.0 * recall * precision / (recall + precision)
        };
        SimilarityScore {
            recall,
            precision,
            f,
        }
    }

    /// Score from a shared count and the two denominators. A zero
    /// denominator zeroes that component.
    pub fn from_counts(overlap: usize, ref_total: usize, cand_total: usize) -> SimilarityScore {
        let recall = ratio(overlap as f64, ref_total as f64);
        let precision = ratio(overlap as f64, cand_total as f64);
        SimilarityScore::from_ratios(recall, precision)
    }

    /// Numerator over explicit sentence lengths, for similarity-sum scorers.
    pub fn from_sum(numerator: f64, ref_len: usize, cand_len: usize) -> SimilarityScore {
        let recall = ratio(numerator, ref_len as f64);
        let precision = ratio(numerator, cand_len as f64);
        SimilarityScore::from_ratios(recall, precision)
    }
}

fn ratio(num: f64, den: f64) -> f64 {
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}

/// Skip-bigram configuration: the maximum skip distance d.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SkipConfig {
    pub distance: usize,
}

impl Default for SkipConfig {
    fn default() -> Self {
        SkipConfig {
            distance: DEFAULT_SKIP_DISTANCE,
        }
    }
}

impl SkipConfig {
    pub fn new(distance: usize) -> SkipConfig {
        SkipConfig { distance }
    }
}

/// Count consecutive n-token windows with multiplicity. A sequence shorter
/// than n yields an empty multiset.
pub fn ngram_multiset_keys<K: Eq + Hash + Clone>(keys: &[K], n: usize) -> Result<NGramMultiset<K>> {
    if n < 1 {
        return Err(Error::InvalidN(n));
    }
    let mut counts = HashMap::new();
    if keys.len() >= n {
        for window in keys.windows(n) {
            *counts.entry(window.to_vec()).or_insert(0) += 1;
        }
    }
    Ok(NGramMultiset { n, counts })
}

/// N-gram multiset of a preprocessed sentence (stem-or-surface keys).
pub fn ngram_multiset(s: &Sentence, n: usize) -> Result<NGramMultiset<String>> {
    let keys: Vec<String> = s.keys().into_iter().map(str::to_string).collect();
    ngram_multiset_keys(&keys, n)
}

/// Clipped overlap: for every n-gram present in both multisets, the smaller
/// of its two occurrence counts.
pub fn clipped_overlap<K: Eq + Hash>(
    reference: &NGramMultiset<K>,
    candidate: &NGramMultiset<K>,
) -> Result<usize> {
    if reference.n != candidate.n {
        return Err(Error::MismatchedN(reference.n, candidate.n));
    }
    Ok(reference
        .counts
        .iter()
        .filter_map(|(gram, count)| candidate.counts.get(gram).map(|c| (*count).min(*c)))
        .sum())
}

/// N-gram recall/precision/F over key sequences.
pub fn ngram_score_keys<K: Eq + Hash + Clone>(
    ref_keys: &[K],
    cand_keys: &[K],
    n: usize,
) -> Result<SimilarityScore> {
    let ref_grams = ngram_multiset_keys(ref_keys, n)?;
    let cand_grams = ngram_multiset_keys(cand_keys, n)?;
    let overlap = clipped_overlap(&ref_grams, &cand_grams)?;
    Ok(SimilarityScore::from_counts(
        overlap,
        ref_grams.total(),
        cand_grams.total(),
    ))
}

/// N-gram score of a sentence pair.
pub fn ngram_score(
    reference: &Sentence,
    candidate: &Sentence,
    n: usize,
) -> Result<SimilarityScore> {
    ngram_score_keys(&reference.keys(), &candidate.keys(), n)
}

/// Length of the longest common subsequence: matched keys must appear in
/// the same order in both sequences but need not be consecutive.
pub fn lcs_length_keys<K: PartialEq>(a: &[K], b: &[K]) -> usize {
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    // One-row DP over the shorter side.
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut row = vec![0usize; short.len() + 1];
    for item in long {
        let mut prev_diag = 0;
        for (j, s) in short.iter().enumerate() {
            let tmp = row[j + 1];
            row[j + 1] = if item == s {
                prev_diag + 1
            } else {
                row[j + 1].max(row[j])
            };
            prev_diag = tmp;
        }
    }
    row[short.len()]
}

/// LCS length of a sentence pair.
pub fn lcs_length(reference: &Sentence, candidate: &Sentence) -> usize {
    lcs_length_keys(&reference.keys(), &candidate.keys())
}

/// LCS recall/precision/F: LCS length over the two sentence lengths.
pub fn lcs_score(reference: &Sentence, candidate: &Sentence) -> SimilarityScore {
    let lcs = lcs_length(reference, candidate);
    SimilarityScore::from_counts(lcs, reference.len(), candidate.len())
}

/// Every ordered in-sequence pair (w_i, w_j) with at most `cfg.distance`
/// tokens between them, counted with multiplicity.
pub fn skip_bigrams_keys<K: Eq + Hash + Clone>(keys: &[K], cfg: SkipConfig) -> NGramMultiset<K> {
    let mut counts = HashMap::new();
    for i in 0..keys.len() {
        let last = (i + cfg.distance + 1).min(keys.len() - 1);
        for j in (i + 1)..=last {
            *counts
                .entry(vec![keys[i].clone(), keys[j].clone()])
                .or_insert(0) += 1;
        }
    }
    NGramMultiset { n: 2, counts }
}

/// Skip-bigram multiset of a sentence.
pub fn skip_bigrams(s: &Sentence, cfg: SkipConfig) -> NGramMultiset<String> {
    let keys: Vec<String> = s.keys().into_iter().map(str::to_string).collect();
    skip_bigrams_keys(&keys, cfg)
}

/// Number of skip-bigrams a sentence of `len` tokens produces: the closed
/// form (len-d-1)(d+1) + d(d+1)/2 for long sentences; for len <= d+1 every
/// ordered pair is within distance, so it is C(len, 2).
pub fn skip_denominator(len: usize, cfg: SkipConfig) -> usize {
    let d = cfg.distance;
    if len <= d + 1 {
        len * len.saturating_sub(1) / 2
    } else {
        (len - d - 1) * (d + 1) + d * (d + 1) / 2
    }
}

/// Skip-bigram recall/precision/F: clipped skip-bigram overlap over each
/// side's skip-bigram count.
pub fn skip_score(reference: &Sentence, candidate: &Sentence, cfg: SkipConfig) -> SimilarityScore {
    let ref_keys = reference.keys();
    let cand_keys = candidate.keys();
    skip_score_keys(&ref_keys, &cand_keys, cfg)
}

/// Skip-bigram score over key sequences.
pub fn skip_score_keys<K: Eq + Hash + Clone>(
    ref_keys: &[K],
    cand_keys: &[K],
    cfg: SkipConfig,
) -> SimilarityScore {
    let ref_grams = skip_bigrams_keys(ref_keys, cfg);
    let cand_grams = skip_bigrams_keys(cand_keys, cfg);
    let overlap = clipped_overlap(&ref_grams, &cand_grams).expect("skip-bigrams share n = 2");
    SimilarityScore::from_counts(
        overlap,
        skip_denominator(ref_keys.len(), cfg),
        skip_denominator(cand_keys.len(), cfg),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::preprocess::{preprocess_sentence, PreprocessConfig, Setting};

    fn sentence(raw: &str) -> Sentence {
        preprocess_sentence(raw, &PreprocessConfig::new(Setting::NoPre), None).unwrap()
    }

    fn counts_of(ms: &NGramMultiset<String>) -> Vec<(String, usize)> {
        let mut v: Vec<(String, usize)> =
            ms.counts().iter().map(|(g, c)| (g.join(" "), *c)).collect();
        v.sort();
        v
    }

    #[test]
    fn unigram_multiset_counts() {
        let ms = ngram_multiset(&sentence("the cat is on the mat"), 1).unwrap();
        assert_eq!(
            counts_of(&ms),
            vec![
                ("cat".into(), 1),
                ("is".into(), 1),
                ("mat".into(), 1),
                ("on".into(), 1),
                ("the".into(), 2),
            ]
        );
        assert_eq!(ms.total(), 6);
    }

    #[test]
    fn ngram_multiset_short_sentence_is_empty() {
        let ms = ngram_multiset(&sentence("a b"), 3).unwrap();
        assert!(ms.is_empty());
        assert_eq!(ms.total(), 0);
    }

    #[test]
    fn ngram_multiset_sliding_window_multiplicity() {
        let ms = ngram_multiset(&sentence("a a a"), 2).unwrap();
        assert_eq!(counts_of(&ms), vec![("a a".into(), 2)]);
    }

    #[test]
    fn ngram_multiset_rejects_zero_n() {
        assert!(matches!(
            ngram_multiset(&sentence("a"), 0),
            Err(Error::InvalidN(0))
        ));
    }

    #[test]
    fn clipping_limits_repeated_words() {
        let reference = ngram_multiset(&sentence("the cat is on the mat"), 1).unwrap();
        let candidate = ngram_multiset(&sentence("the the the the the the the"), 1).unwrap();
        assert_eq!(clipped_overlap(&reference, &candidate).unwrap(), 2);
    }

    #[test]
    fn clipped_overlap_identity_and_disjoint() {
        let a = ngram_multiset(&sentence("x y x"), 1).unwrap();
        assert_eq!(clipped_overlap(&a, &a).unwrap(), 3);
        let b = ngram_multiset(&sentence("p q"), 1).unwrap();
        assert_eq!(clipped_overlap(&a, &b).unwrap(), 0);
    }

    #[test]
    fn clipped_overlap_mismatched_n() {
        let a = ngram_multiset(&sentence("a b"), 1).unwrap();
        let b = ngram_multiset(&sentence("a b"), 2).unwrap();
        assert!(matches!(
            clipped_overlap(&a, &b),
            Err(Error::MismatchedN(1, 2))
        ));
    }

    #[test]
    fn clipped_precision_example() {
        let score = ngram_score(
            &sentence("the cat is on the mat"),
            &sentence("the the the the the the the"),
            1,
        )
        .unwrap();
        assert!((score.precision - 2.0 / 7.0).abs() < 1e-12);
        assert!((score.recall - 2.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn ngram_score_identity() {
        let s = sentence("one two three four");
        let score = ngram_score(&s, &s, 1).unwrap();
        assert_eq!(score.recall, 1.0);
        assert_eq!(score.precision, 1.0);
        assert_eq!(score.f, 1.0);
    }

    #[test]
    fn lcs_skipping_and_in_sequence_rules() {
        let reference = sentence("police killed the gunman");
        assert_eq!(
            lcs_length(&reference, &sentence("police kill the gunman")),
            3
        );
        assert_eq!(
            lcs_length(&reference, &sentence("the gunman kill police")),
            2
        );
    }

    #[test]
    fn lcs_identity_and_disjoint() {
        let s = sentence("a b c d e");
        assert_eq!(lcs_length(&s, &s), 5);
        assert_eq!(lcs_length(&s, &sentence("x y z")), 0);
        assert_eq!(lcs_score(&s, &sentence("x y z")), SimilarityScore::ZERO);
    }

    #[test]
    fn lcs_score_fig3_candidate() {
        let score = lcs_score(
            &sentence("police killed the gunman"),
            &sentence("police kill the gunman"),
        );
        assert!((score.recall - 0.75).abs() < 1e-12);
        assert!((score.precision - 0.75).abs() < 1e-12);
        assert!((score.f - 0.75).abs() < 1e-12);
    }

    #[test]
    fn skip_bigram_formation_d2() {
        let ms = skip_bigrams(&sentence("andy eats an apple"), SkipConfig::new(2));
        assert_eq!(
            counts_of(&ms),
            vec![
                ("an apple".into(), 1),
                ("andy an".into(), 1),
                ("andy apple".into(), 1),
                ("andy eats".into(), 1),
                ("eats an".into(), 1),
                ("eats apple".into(), 1),
            ]
        );
        assert_eq!(ms.total(), 6);
    }

    #[test]
    fn skip_bigram_single_token_empty() {
        assert!(skip_bigrams(&sentence("alone"), SkipConfig::new(4)).is_empty());
    }

    #[test]
    fn skip_bigram_d0_is_consecutive() {
        let ms = skip_bigrams(&sentence("a b c"), SkipConfig::new(0));
        assert_eq!(counts_of(&ms), vec![("a b".into(), 1), ("b c".into(), 1)]);
    }

    #[test]
    fn skip_denominator_values() {
        assert_eq!(skip_denominator(4, SkipConfig::new(2)), 6);
        assert_eq!(skip_denominator(1, SkipConfig::new(7)), 0);
        assert_eq!(skip_denominator(0, SkipConfig::new(2)), 0);
        assert_eq!(skip_denominator(10, SkipConfig::new(4)), 35);
        // Short-sentence fallback equals the all-pairs count.
        assert_eq!(skip_denominator(3, SkipConfig::new(5)), 3);
    }

    #[test]
    fn skip_score_identity_and_disjoint() {
        let s = sentence("a b c d");
        let identity = skip_score(&s, &s, SkipConfig::default());
        assert_eq!(identity.f, 1.0);
        let disjoint = skip_score(&s, &sentence("x y z"), SkipConfig::default());
        assert_eq!(disjoint, SimilarityScore::ZERO);
    }

    #[test]
    fn f_is_zero_when_both_components_zero() {
        let score = SimilarityScore::from_ratios(0.0, 0.0);
        assert_eq!(score.f, 0.0);
    }

    #[test]
    fn empty_sentences_score_zero() {
        let empty = sentence("");
        let other = sentence("a b");
        assert_eq!(
            ngram_score(&empty, &other, 1).unwrap(),
            SimilarityScore::ZERO
        );
        assert_eq!(lcs_score(&empty, &other), SimilarityScore::ZERO);
        assert_eq!(
            skip_score(&empty, &other, SkipConfig::default()),
            SimilarityScore::ZERO
        );
    }
}
