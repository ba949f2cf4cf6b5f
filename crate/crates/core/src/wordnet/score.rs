//! Synonym- and relationship-based similarity over WordNet.
//!
//! Words match exactly, through shared synset membership (Jaccard overlap
//! of synonym sets, taking the best synset pair), or through hypernym /
//! hyponym links up to three levels deep with a weight per depth. Sentence
//! scores sum per-word similarities with clipping: each candidate token can
//! be matched at most as often as it occurs.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::preprocess::{Sentence, Token};
use crate::rouge::SimilarityScore;

use super::{Synset, SynsetId, WnPos, WordNetDb};

/// Relationship lookups stop after this many links.
pub const MAX_RELATION_DEPTH: usize = 3;

/// Weight applied to a relationship found at each depth 0..=3.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct DepthWeights {
    weights: [f64; MAX_RELATION_DEPTH + 1],
}

impl Default for DepthWeights {
    fn default() -> Self {
        DepthWeights {
            weights: [1.0, 0.85, 0.5, 0.2],
        }
    }
}

impl DepthWeights {
    /// Weights must start at 1.0 and be non-increasing.
    pub fn new(weights: [f64; MAX_RELATION_DEPTH + 1]) -> Result<DepthWeights> {
        if weights[0] != 1.0 || weights.windows(2).any(|w| w[1] > w[0]) || weights[3] < 0.0 {
            return Err(Error::InvalidDepthWeights);
        }
        Ok(DepthWeights { weights })
    }

    pub fn weight(&self, depth: usize) -> f64 {
        self.weights.get(depth).copied().unwrap_or(0.0)
    }
}

/// Which way the relationship runs, seen from the first synset.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum RelationDirection {
    Hypernym,
    Hyponym,
}

/// Jaccard coefficient of the two synsets' lemma sets.
pub fn jaccard_synsets(a: &Synset, b: &Synset) -> f64 {
    let set_a: HashSet<&str> = a.lemmas.iter().map(String::as_str).collect();
    let set_b: HashSet<&str> = b.lemmas.iter().map(String::as_str).collect();
    let intersection = set_a.intersection(&set_b).count();
    let union = set_a.union(&set_b).count();
    if union == 0 {
        0.0
    } else {
        intersection as f64 / union as f64
    }
}

fn directed_depth<F>(start: SynsetId, goal: SynsetId, max_depth: usize, next: F) -> Option<usize>
where
    F: Fn(SynsetId) -> Vec<SynsetId>,
{
    let mut visited: HashSet<SynsetId> = HashSet::from([start]);
    let mut frontier = vec![start];
    for depth in 1..=max_depth {
        let mut next_frontier = Vec::new();
        for id in frontier {
            for linked in next(id) {
                if linked == goal {
                    return Some(depth);
                }
                if visited.insert(linked) {
                    next_frontier.push(linked);
                }
            }
        }
        if next_frontier.is_empty() {
            return None;
        }
        frontier = next_frontier;
    }
    None
}

/// Minimum number of hypernym or hyponym links from `a` to `b`, up to
/// `max_depth`; depth 0 means the same synset. Ties prefer `Hypernym`.
pub fn relation_depth(
    db: &WordNetDb,
    a: SynsetId,
    b: SynsetId,
    max_depth: usize,
) -> Option<(RelationDirection, usize)> {
    if a == b {
        return Some((RelationDirection::Hypernym, 0));
    }
    let up = directed_depth(a, b, max_depth, |id| {
        db.synset(id)
            .map(|s| s.hypernyms.clone())
            .unwrap_or_default()
    });
    let down = directed_depth(a, b, max_depth, |id| db.hyponyms(id).to_vec());
    match (up, down) {
        (Some(u), Some(d)) if d < u => Some((RelationDirection::Hyponym, d)),
        (Some(u), _) => Some((RelationDirection::Hypernym, u)),
        (None, Some(d)) => Some((RelationDirection::Hyponym, d)),
        (None, None) => None,
    }
}

/// All synsets a token can reach through morphy under its own POS.
fn token_synsets(db: &WordNetDb, token: &Token) -> Vec<SynsetId> {
    let Some(pos) = WnPos::from_pos_tag(token.pos_or_other()) else {
        return Vec::new();
    };
    let mut ids = Vec::new();
    for lemma in db.morphy(&token.surface, pos) {
        for id in db.synsets_for(&lemma, pos) {
            if !ids.contains(id) {
                ids.push(*id);
            }
        }
    }
    ids
}

fn exact_match(w1: &Token, w2: &Token) -> bool {
    w1.surface == w2.surface && w1.pos_or_other() == w2.pos_or_other()
}

/// Word-to-word synonym similarity: 1.0 on an exact (surface, POS) match,
/// otherwise the best Jaccard coefficient over all synset pairs of the two
/// words. Words without usable synsets score 0.
pub fn syn_word_sim(db: &WordNetDb, w1: &Token, w2: &Token) -> f64 {
    if exact_match(w1, w2) {
        return 1.0;
    }
    let ids1 = token_synsets(db, w1);
    if ids1.is_empty() {
        return 0.0;
    }
    let ids2 = token_synsets(db, w2);
    if ids2.is_empty() {
        return 0.0;
    }
    let mut best = 0.0f64;
    for id1 in &ids1 {
        for id2 in &ids2 {
            if id1 == id2 {
                return 1.0;
            }
            let (Some(s1), Some(s2)) = (db.synset(*id1), db.synset(*id2)) else {
                continue;
            };
            best = best.max(jaccard_synsets(s1, s2));
        }
    }
    best
}

/// Word-to-word relationship similarity: the depth weight of the closest
/// hypernym/hyponym relationship over all synset pairs; 1.0 on exact match;
/// 0 when nothing is related within [`MAX_RELATION_DEPTH`].
pub fn rs_word(db: &WordNetDb, w1: &Token, w2: &Token, weights: &DepthWeights) -> f64 {
    if exact_match(w1, w2) {
        return 1.0;
    }
    let ids1 = token_synsets(db, w1);
    if ids1.is_empty() {
        return 0.0;
    }
    let ids2 = token_synsets(db, w2);
    if ids2.is_empty() {
        return 0.0;
    }
    let mut best = 0.0f64;
    for id1 in &ids1 {
        for id2 in &ids2 {
            if let Some((_, depth)) = relation_depth(db, *id1, *id2, MAX_RELATION_DEPTH) {
                best = best.max(weights.weight(depth));
                if best == 1.0 {
                    return 1.0;
                }
            }
        }
    }
    best
}

fn unique_tokens(s: &Sentence) -> Vec<&Token> {
    let mut seen: Vec<&Token> = Vec::new();
    for token in &s.tokens {
        if !seen.iter().any(|t| exact_match(t, token)) {
            seen.push(token);
        }
    }
    seen
}

/// Best synonym similarity between a word and any unique token of a
/// sentence.
pub fn syn_word_sentence(db: &WordNetDb, w: &Token, s: &Sentence) -> f64 {
    unique_tokens(s)
        .into_iter()
        .map(|t| syn_word_sim(db, w, t))
        .fold(0.0, f64::max)
}

/// Best relationship similarity between a word and any unique token of a
/// sentence.
pub fn rs_word_sentence(db: &WordNetDb, w: &Token, s: &Sentence, weights: &DepthWeights) -> f64 {
    unique_tokens(s)
        .into_iter()
        .map(|t| rs_word(db, w, t, weights))
        .fold(0.0, f64::max)
}

/// Clipped similarity sum: reference tokens claim candidate tokens in
/// descending order of their best similarity; each candidate token type can
/// be consumed at most as many times as it occurs. This generalizes clipped
/// n-gram counting to fractional similarities.
fn clipped_similarity_sum<F>(reference: &Sentence, candidate: &Sentence, sim: F) -> f64
where
    F: Fn(&Token, &Token) -> f64,
{
    // Candidate token types with capacities.
    let mut types: Vec<(&Token, usize)> = Vec::new();
    for token in &candidate.tokens {
        match types.iter_mut().find(|(t, _)| exact_match(t, token)) {
            Some((_, count)) => *count += 1,
            None => types.push((token, 1)),
        }
    }
    if types.is_empty() || reference.is_empty() {
        return 0.0;
    }

    // Similarities once per (reference type, candidate type).
    let mut ref_types: Vec<&Token> = Vec::new();
    let type_of: Vec<usize> = reference
        .tokens
        .iter()
        .map(
            |token| match ref_types.iter().position(|t| exact_match(t, token)) {
                Some(i) => i,
                None => {
                    ref_types.push(token);
                    ref_types.len() - 1
                }
            },
        )
        .collect();
    let sims: Vec<Vec<f64>> = ref_types
        .iter()
        .map(|rt| types.iter().map(|(ct, _)| sim(rt, ct)).collect())
        .collect();

    let best = |i: usize| -> f64 { sims[type_of[i]].iter().copied().fold(0.0, f64::max) };
    let mut order: Vec<usize> = (0..reference.tokens.len()).collect();
    order.sort_by(|&x, &y| best(y).total_cmp(&best(x)).then(x.cmp(&y)));

    let mut capacity: Vec<usize> = types.iter().map(|(_, c)| *c).collect();
    let mut total = 0.0;
    for i in order {
        let row = &sims[type_of[i]];
        let mut best_value = 0.0;
        let mut best_slot = None;
        for (j, value) in row.iter().enumerate() {
            if capacity[j] > 0 && *value > best_value {
                best_value = *value;
                best_slot = Some(j);
            }
        }
        if let Some(j) = best_slot {
            total += best_value;
            capacity[j] -= 1;
        }
    }
    total
}

fn check_not_stemmed(reference: &Sentence, candidate: &Sentence) -> Result<()> {
    if reference.is_stemmed() || candidate.is_stemmed() {
        return Err(Error::StemmingIncompatible);
    }
    Ok(())
}

/// Synonym-based sentence score: clipped sum of per-word synonym
/// similarities over the two sentence lengths.
pub fn syn_score(
    db: &WordNetDb,
    reference: &Sentence,
    candidate: &Sentence,
) -> Result<SimilarityScore> {
    check_not_stemmed(reference, candidate)?;
    let numerator = clipped_similarity_sum(reference, candidate, |a, b| syn_word_sim(db, a, b));
    Ok(SimilarityScore::from_sum(
        numerator,
        reference.len(),
        candidate.len(),
    ))
}

/// Relationship-based sentence score: like [`syn_score`] with depth-weighted
/// hypernym/hyponym similarities.
pub fn rs_score(
    db: &WordNetDb,
    reference: &Sentence,
    candidate: &Sentence,
    weights: &DepthWeights,
) -> Result<SimilarityScore> {
    check_not_stemmed(reference, candidate)?;
    let numerator = clipped_similarity_sum(reference, candidate, |a, b| rs_word(db, a, b, weights));
    Ok(SimilarityScore::from_sum(
        numerator,
        reference.len(),
        candidate.len(),
    ))
}
