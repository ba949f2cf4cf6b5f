//! Method dispatch, document cross-comparison, and the recommended
//! per-method settings.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::classify;
use crate::preprocess::{preprocess_document, PreprocessConfig, Sentence, Setting};
use crate::rouge::{self, SimilarityScore, SkipConfig};
use crate::wordnet::{self, DepthWeights, WordNetDb};

/// The nine scoring methods.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MethodId {
    Unigram,
    Bigram,
    Trigram,
    FourGram,
    Lcs,
    SkipBigram,
    UnigramPos,
    Synonyms,
    Relationship,
}

impl MethodId {
    pub const ALL: [MethodId; 9] = [
        MethodId::Unigram,
        MethodId::Bigram,
        MethodId::Trigram,
        MethodId::FourGram,
        MethodId::Lcs,
        MethodId::SkipBigram,
        MethodId::UnigramPos,
        MethodId::Synonyms,
        MethodId::Relationship,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MethodId::Unigram => "unigram",
            MethodId::Bigram => "bigram",
            MethodId::Trigram => "trigram",
            MethodId::FourGram => "4-gram",
            MethodId::Lcs => "lcs",
            MethodId::SkipBigram => "skip-bigram",
            MethodId::UnigramPos => "unigram-pos",
            MethodId::Synonyms => "synonyms",
            MethodId::Relationship => "relationship",
        }
    }

    pub fn parse(s: &str) -> Option<MethodId> {
        match s.to_ascii_lowercase().as_str() {
            "unigram" => Some(MethodId::Unigram),
            "bigram" => Some(MethodId::Bigram),
            "trigram" => Some(MethodId::Trigram),
            "4-gram" | "4gram" | "fourgram" => Some(MethodId::FourGram),
            "lcs" => Some(MethodId::Lcs),
            "skip-bigram" | "skipbigram" | "skip2" => Some(MethodId::SkipBigram),
            "unigram-pos" | "unigrampos" | "unigram-with-pos" => Some(MethodId::UnigramPos),
            "synonyms" | "synonym" => Some(MethodId::Synonyms),
            "relationship" | "relation" => Some(MethodId::Relationship),
            _ => None,
        }
    }

    /// Methods that match on (token, POS) pairs or look words up in the
    /// lexicon; their input must be tagged.
    pub fn requires_pos(self) -> bool {
        matches!(
            self,
            MethodId::UnigramPos | MethodId::Synonyms | MethodId::Relationship
        )
    }

    /// WordNet cannot recognize Porter stems, so the lexicon-backed methods
    /// reject stemmed input.
    pub fn forbids_stemming(self) -> bool {
        matches!(self, MethodId::Synonyms | MethodId::Relationship)
    }

    /// Methods whose scoring itself consults the database.
    pub fn uses_wordnet(self) -> bool {
        matches!(self, MethodId::Synonyms | MethodId::Relationship)
    }

    fn ngram_order(self) -> Option<usize> {
        match self {
            MethodId::Unigram => Some(1),
            MethodId::Bigram => Some(2),
            MethodId::Trigram => Some(3),
            MethodId::FourGram => Some(4),
            _ => None,
        }
    }
}

impl std::fmt::Display for MethodId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Everything needed to score a pair with one method.
#[derive(Clone, Debug)]
pub struct MethodConfig {
    pub method: MethodId,
    pub preprocess: PreprocessConfig,
    pub threshold: f64,
    pub skip: SkipConfig,
    pub depth_weights: DepthWeights,
}

impl MethodConfig {
    pub fn new(method: MethodId, preprocess: PreprocessConfig, threshold: f64) -> MethodConfig {
        MethodConfig {
            method,
            preprocess,
            threshold,
            skip: SkipConfig::default(),
            depth_weights: DepthWeights::default(),
        }
    }

    /// Configuration from the recommended settings table. `UnigramPos` is
    /// not one of the recommended rows and falls back to the unigram row.
    pub fn recommended(method: MethodId) -> MethodConfig {
        let (setting, threshold) = recommended_settings()
            .iter()
            .find(|row| row.method == method)
            .map(|row| (row.setting, row.threshold))
            .unwrap_or((Setting::Sw, 0.6));
        let mut preprocess = PreprocessConfig::new(setting);
        if method.requires_pos() {
            preprocess.tag_pos = true;
        }
        MethodConfig::new(method, preprocess, threshold)
    }

    /// Reject invalid method/preprocessing combinations before any work.
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.threshold) {
            return Err(Error::InvalidThreshold(self.threshold));
        }
        if self.method.forbids_stemming() && self.preprocess.apply_stemming {
            return Err(Error::InvalidCombination {
                method: self.method.name().to_string(),
                setting: "stemming".to_string(),
            });
        }
        if self.method.requires_pos() && !(self.preprocess.tag_pos || self.preprocess.pretagged) {
            return Err(Error::InvalidCombination {
                method: self.method.name().to_string(),
                setting: "untagged input".to_string(),
            });
        }
        Ok(())
    }

    /// Whether scoring under this configuration needs a loaded database.
    pub fn needs_wordnet(&self) -> bool {
        self.method.uses_wordnet() || (self.preprocess.tag_pos && !self.preprocess.pretagged)
    }
}

/// One row of the recommended settings table.
#[derive(Copy, Clone, Debug, PartialEq, Serialize)]
pub struct RecommendedSetting {
    pub method: MethodId,
    pub setting: Setting,
    pub threshold: f64,
}

impl Serialize for MethodId {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// The eight recommended (setting, threshold) rows.
pub fn recommended_settings() -> [RecommendedSetting; 8] {
    use MethodId::*;
    use Setting::*;
    [
        RecommendedSetting {
            method: Unigram,
            setting: Sw,
            threshold: 0.6,
        },
        RecommendedSetting {
            method: Bigram,
            setting: NoPre,
            threshold: 0.4,
        },
        RecommendedSetting {
            method: Trigram,
            setting: Sm,
            threshold: 0.3,
        },
        RecommendedSetting {
            method: FourGram,
            setting: Sw,
            threshold: 0.3,
        },
        RecommendedSetting {
            method: SkipBigram,
            setting: SwSm,
            threshold: 0.3,
        },
        RecommendedSetting {
            method: Lcs,
            setting: SwSm,
            threshold: 0.5,
        },
        RecommendedSetting {
            method: Synonyms,
            setting: Sw,
            threshold: 0.6,
        },
        RecommendedSetting {
            method: Relationship,
            setting: Sw,
            threshold: 0.7,
        },
    ]
}

/// Score one preprocessed sentence pair with the configured method.
///
/// The sentences must have been preprocessed under `cfg.preprocess`; this
/// function only validates the combination and dispatches.
pub fn score_pair(
    cfg: &MethodConfig,
    reference: &Sentence,
    candidate: &Sentence,
    db: Option<&WordNetDb>,
) -> Result<SimilarityScore> {
    cfg.validate()?;
    if cfg.method.uses_wordnet() && db.is_none() {
        return Err(Error::MissingLexicon);
    }
    match cfg.method {
        MethodId::Unigram | MethodId::Bigram | MethodId::Trigram | MethodId::FourGram => {
            let n = cfg.method.ngram_order().expect("n-gram method");
            rouge::ngram_score(reference, candidate, n)
        }
        MethodId::Lcs => Ok(rouge::lcs_score(reference, candidate)),
        MethodId::SkipBigram => Ok(rouge::skip_score(reference, candidate, cfg.skip)),
        MethodId::UnigramPos => {
            rouge::ngram_score_keys(&reference.pos_keys(), &candidate.pos_keys(), 1)
        }
        MethodId::Synonyms => wordnet::syn_score(db.expect("checked"), reference, candidate),
        MethodId::Relationship => wordnet::rs_score(
            db.expect("checked"),
            reference,
            candidate,
            &cfg.depth_weights,
        ),
    }
}

/// One scored candidate for a reference sentence.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatchEntry {
    pub cand_index: usize,
    pub r: f64,
    pub p: f64,
    pub f: f64,
    pub flagged: bool,
}

/// Ranked matches for one reference sentence.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RefMatches {
    pub ref_index: usize,
    pub matches: Vec<MatchEntry>,
}

/// Cross-comparison result for one method.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MethodReport {
    pub method: String,
    pub threshold: f64,
    pub rows: Vec<RefMatches>,
}

/// Compare every reference sentence with every candidate sentence (M x N)
/// under each method configuration.
///
/// Per reference sentence the report ranks candidates by F descending with
/// candidate-index ties ascending, keeping the top `top_k` plus every pair
/// whose F exceeds the threshold (flagged pairs always rank first, so the
/// list is a prefix of the full ranking).
pub fn compare_documents(
    cfgs: &[MethodConfig],
    ref_sentences: &[String],
    cand_sentences: &[String],
    top_k: usize,
    db: Option<&WordNetDb>,
) -> Result<Vec<MethodReport>> {
    for cfg in cfgs {
        cfg.validate()?;
        if cfg.needs_wordnet() && db.is_none() {
            return Err(Error::MissingLexicon);
        }
    }
    let mut reports = Vec::with_capacity(cfgs.len());
    for cfg in cfgs {
        let reference = preprocess_document(ref_sentences, &cfg.preprocess, db)?;
        let candidate = preprocess_document(cand_sentences, &cfg.preprocess, db)?;
        let rows = if reference.is_empty() || candidate.is_empty() {
            Vec::new()
        } else {
            reference
                .sentences
                .par_iter()
                .enumerate()
                .map(|(ref_index, ref_sentence)| {
                    let mut scored: Vec<MatchEntry> = candidate
                        .sentences
                        .iter()
                        .enumerate()
                        .map(|(cand_index, cand_sentence)| {
                            let score = score_pair(cfg, ref_sentence, cand_sentence, db)?;
                            Ok(MatchEntry {
                                cand_index,
                                r: score.recall,
                                p: score.precision,
                                f: score.f,
                                flagged: classify(score.f, cfg.threshold),
                            })
                        })
                        .collect::<Result<_>>()?;
                    scored
                        .sort_by(|a, b| b.f.total_cmp(&a.f).then(a.cand_index.cmp(&b.cand_index)));
                    let flagged = scored.iter().filter(|m| m.flagged).count();
                    scored.truncate(top_k.max(flagged));
                    Ok(RefMatches {
                        ref_index,
                        matches: scored,
                    })
                })
                .collect::<Result<_>>()?
        };
        reports.push(MethodReport {
            method: cfg.method.name().to_string(),
            threshold: cfg.threshold,
            rows,
        });
    }
    Ok(reports)
}
