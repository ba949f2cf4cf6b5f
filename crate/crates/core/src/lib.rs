//! Sentence-level text similarity for plagiarism screening.
//!
//! The crate scores a candidate sentence against a reference sentence with
//! nine methods: clipped n-gram co-occurrence (unigram through 4-gram, with
//! an optional POS-tagged unigram variant), longest common subsequence,
//! skip-bigram statistics, and two WordNet-backed measures (synonym overlap
//! and hypernym/hyponym relationship depth). Each method yields a
//! recall/precision/F triple; a pair is flagged as suspected plagiarism when
//! F exceeds a per-method threshold.
//!
//! Modules:
//!
//! * [`preprocess`] — tokenization, POS tagging, stopword removal, Porter
//!   stemming, under the four settings `none`, `sw`, `sm`, `sw+sm`.
//! * [`rouge`] — the three ROUGE-style scorers over preprocessed sentences.
//! * [`wordnet`] — Princeton-format database loader, morphy, and the
//!   synonym/relationship measures.
//! * [`engine`] — method dispatch, document cross-comparison, recommended
//!   settings.
//! * [`eval`] — labeled-corpus evaluation: confusion counts, P/R/F,
//!   threshold sweeps, Cohen's kappa.

pub mod engine;
pub mod error;
pub mod eval;
pub mod preprocess;
pub mod rouge;
pub mod wordnet;

pub use error::{Error, Result};
pub use rouge::SimilarityScore;
