//! Text preprocessing pipeline.
//!
//! Six steps, applied in this order and individually switchable:
//! tokenization, punctuation removal, lowercase conversion, POS tagging,
//! stopword removal, Porter stemming. The four (stopwords, stemming)
//! combinations are the settings `sw+sm`, `sw`, `sm` and `none`.

mod porter;

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::wordnet::{WnPos, WordNetDb};

pub use porter::porter_stem;

/// The SMART English stopword list shipped with the crate (571 words).
pub const DEFAULT_STOPWORDS: &str = include_str!("../../data/stopwords.txt");

/// Coarse part-of-speech category. The first four mirror WordNet's word
/// classes; everything else is `Other`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PosTag {
    Noun,
    Verb,
    Adj,
    Adv,
    Other,
}

impl PosTag {
    pub fn as_str(self) -> &'static str {
        match self {
            PosTag::Noun => "NOUN",
            PosTag::Verb => "VERB",
            PosTag::Adj => "ADJ",
            PosTag::Adv => "ADV",
            PosTag::Other => "OTHER",
        }
    }

    pub fn parse(s: &str) -> Option<PosTag> {
        match s.to_ascii_uppercase().as_str() {
            "NOUN" => Some(PosTag::Noun),
            "VERB" => Some(PosTag::Verb),
            "ADJ" => Some(PosTag::Adj),
            "ADV" => Some(PosTag::Adv),
            "OTHER" => Some(PosTag::Other),
            _ => None,
        }
    }
}

/// One word after tokenization: lowercase surface form, optional coarse POS
/// tag, optional Porter stem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub pos: Option<PosTag>,
    pub stem: Option<String>,
}

impl Token {
    pub fn new(surface: impl Into<String>) -> Token {
        Token {
            surface: surface.into(),
            pos: None,
            stem: None,
        }
    }

    pub fn with_pos(surface: impl Into<String>, pos: PosTag) -> Token {
        Token {
            surface: surface.into(),
            pos: Some(pos),
            stem: None,
        }
    }

    /// The string downstream scorers compare on: the stem when stemming was
    /// applied, the surface form otherwise.
    pub fn match_key(&self) -> &str {
        self.stem.as_deref().unwrap_or(&self.surface)
    }

    /// POS for matching purposes; untagged tokens count as `Other`.
    pub fn pos_or_other(&self) -> PosTag {
        self.pos.unwrap_or(PosTag::Other)
    }
}

/// An ordered token list plus the raw text it came from.
#[derive(Clone, Debug, Default)]
pub struct Sentence {
    pub raw: String,
    pub tokens: Vec<Token>,
}

impl Sentence {
    /// Token count after preprocessing (the lengths p and q that score
    /// denominators divide by).
    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Match keys in token order.
    pub fn keys(&self) -> Vec<&str> {
        self.tokens.iter().map(Token::match_key).collect()
    }

    /// (match key, POS) pairs in token order, for POS-sensitive matching.
    pub fn pos_keys(&self) -> Vec<(&str, PosTag)> {
        self.tokens
            .iter()
            .map(|t| (t.match_key(), t.pos_or_other()))
            .collect()
    }

    pub fn is_stemmed(&self) -> bool {
        self.tokens.iter().any(|t| t.stem.is_some())
    }
}

/// An ordered list of sentences.
#[derive(Clone, Debug, Default)]
pub struct Document {
    pub sentences: Vec<Sentence>,
}

impl Document {
    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }
}

/// How raw text is cut into sentences.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SplitMode {
    /// Split after `.` `!` `?` followed by whitespace or end of input.
    Terminator,
    /// One sentence per line.
    Line,
}

/// The four preprocessing settings.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Setting {
    /// Neither stopword removal nor stemming ("No Pre").
    NoPre,
    /// Stopword removal only.
    Sw,
    /// Stemming only.
    Sm,
    /// Stopword removal and stemming.
    SwSm,
}

impl Setting {
    pub fn as_str(self) -> &'static str {
        match self {
            Setting::NoPre => "none",
            Setting::Sw => "sw",
            Setting::Sm => "sm",
            Setting::SwSm => "sw+sm",
        }
    }

    pub fn parse(s: &str) -> Option<Setting> {
        match s.to_ascii_lowercase().as_str() {
            "none" | "nopre" | "no-pre" => Some(Setting::NoPre),
            "sw" => Some(Setting::Sw),
            "sm" => Some(Setting::Sm),
            "sw+sm" | "swsm" | "sw-sm" => Some(Setting::SwSm),
            _ => None,
        }
    }

    pub fn removes_stopwords(self) -> bool {
        matches!(self, Setting::Sw | Setting::SwSm)
    }

    pub fn applies_stemming(self) -> bool {
        matches!(self, Setting::Sm | Setting::SwSm)
    }
}

impl std::fmt::Display for Setting {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl serde::Serialize for Setting {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Pipeline switches plus the stopword list to filter against.
#[derive(Clone, Debug)]
pub struct PreprocessConfig {
    pub remove_stopwords: bool,
    pub apply_stemming: bool,
    pub tag_pos: bool,
    /// Input tokens carry their own `surface_POS` tags; no tagger is run.
    pub pretagged: bool,
    pub stopwords: HashSet<String>,
}

impl PreprocessConfig {
    pub fn new(setting: Setting) -> PreprocessConfig {
        PreprocessConfig {
            remove_stopwords: setting.removes_stopwords(),
            apply_stemming: setting.applies_stemming(),
            tag_pos: false,
            pretagged: false,
            stopwords: default_stopwords(),
        }
    }

    pub fn setting(&self) -> Setting {
        match (self.remove_stopwords, self.apply_stemming) {
            (false, false) => Setting::NoPre,
            (true, false) => Setting::Sw,
            (false, true) => Setting::Sm,
            (true, true) => Setting::SwSm,
        }
    }

    pub fn with_pos_tagging(mut self) -> PreprocessConfig {
        self.tag_pos = true;
        self
    }

    pub fn with_pretagged(mut self) -> PreprocessConfig {
        self.pretagged = true;
        self
    }

    pub fn with_stopwords(mut self, stopwords: HashSet<String>) -> PreprocessConfig {
        self.stopwords = stopwords;
        self
    }
}

impl Default for PreprocessConfig {
    fn default() -> Self {
        PreprocessConfig::new(Setting::NoPre)
    }
}

/// Parse a stopword file: one lowercase word per line, `#` starts a comment.
pub fn parse_stopwords(text: &str) -> HashSet<String> {
    text.lines()
        .map(|line| line.split('#').next().unwrap_or("").trim())
        .filter(|w| !w.is_empty())
        .map(str::to_string)
        .collect()
}

/// The shipped SMART stopword list as a set.
pub fn default_stopwords() -> HashSet<String> {
    parse_stopwords(DEFAULT_STOPWORDS)
}

/// Cut raw text into sentence strings. Empty segments are dropped.
pub fn split_sentences(text: &str, mode: SplitMode) -> Vec<String> {
    match mode {
        SplitMode::Line => text
            .lines()
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::to_string)
            .collect(),
        SplitMode::Terminator => {
            let mut out = Vec::new();
            let mut current = String::new();
            let mut chars = text.chars().peekable();
            while let Some(c) = chars.next() {
                current.push(c);
                if matches!(c, '.' | '!' | '?') {
                    let at_boundary = chars.peek().is_none_or(|next| next.is_whitespace());
                    if at_boundary {
                        let segment = current.trim();
                        if !segment.is_empty() {
                            out.push(segment.to_string());
                        }
                        current.clear();
                    }
                }
            }
            let tail = current.trim();
            if !tail.is_empty() {
                out.push(tail.to_string());
            }
            out
        }
    }
}

fn clean_word(word: &str) -> String {
    let lowered = word.to_lowercase();
    let chars: Vec<char> = lowered.chars().collect();
    chars
        .iter()
        .enumerate()
        .filter(|(i, c)| {
            c.is_alphanumeric()
                || (**c == '\''
                    && *i > 0
                    && *i + 1 < chars.len()
                    && chars[i - 1].is_alphanumeric()
                    && chars[i + 1].is_alphanumeric())
        })
        .map(|(_, c)| *c)
        .collect()
}

/// Whitespace tokenization with punctuation removal and case folding.
/// Word-internal apostrophes survive; tokens that clean to nothing are
/// dropped.
pub fn tokenize(raw: &str) -> Vec<Token> {
    raw.split_whitespace()
        .filter_map(|word| {
            let surface = clean_word(word);
            (!surface.is_empty()).then(|| Token::new(surface))
        })
        .collect()
}

/// Tokenize `surface_POS` input. Words without a recognized `_POS` suffix
/// are tagged `Other`.
pub fn tokenize_pretagged(raw: &str) -> Vec<Token> {
    raw.split_whitespace()
        .filter_map(|word| {
            let (head, pos) = match word.rsplit_once('_') {
                Some((head, tag)) => match PosTag::parse(tag) {
                    Some(pos) => (head, pos),
                    None => (word, PosTag::Other),
                },
                None => (word, PosTag::Other),
            };
            let surface = clean_word(head);
            (!surface.is_empty()).then(|| Token::with_pos(surface, pos))
        })
        .collect()
}

/// Lexicon-based tagger: pick the WordNet category in which the token (after
/// morphy) has the most synsets; ties resolve NOUN > VERB > ADJ > ADV; words
/// absent from the lexicon become `Other`. Already-tagged tokens are left
/// alone.
pub fn pos_tag(tokens: &mut [Token], db: &WordNetDb) {
    for token in tokens.iter_mut() {
        if token.pos.is_none() {
            token.pos = Some(lexicon_tag(&token.surface, db));
        }
    }
}

fn lexicon_tag(surface: &str, db: &WordNetDb) -> PosTag {
    let mut best = PosTag::Other;
    let mut best_count = 0usize;
    for pos in WnPos::ALL {
        let mut ids = HashSet::new();
        for lemma in db.morphy(surface, pos) {
            ids.extend(db.synsets_for(&lemma, pos).iter().copied());
        }
        if ids.len() > best_count {
            best_count = ids.len();
            best = pos.into();
        }
    }
    best
}

/// Order-preserving filter on surface-form membership in the stopword set.
pub fn remove_stopwords(tokens: Vec<Token>, stopwords: &HashSet<String>) -> Vec<Token> {
    tokens
        .into_iter()
        .filter(|t| !stopwords.contains(&t.surface))
        .collect()
}

/// Run the full pipeline on one raw sentence.
pub fn preprocess_sentence(
    raw: &str,
    config: &PreprocessConfig,
    db: Option<&WordNetDb>,
) -> Result<Sentence> {
    let mut tokens = if config.pretagged {
        tokenize_pretagged(raw)
    } else {
        tokenize(raw)
    };
    if config.tag_pos && !config.pretagged {
        let db = db.ok_or(Error::MissingLexicon)?;
        pos_tag(&mut tokens, db);
    }
    if config.remove_stopwords {
        tokens = remove_stopwords(tokens, &config.stopwords);
    }
    if config.apply_stemming {
        for token in &mut tokens {
            token.stem = Some(porter_stem(&token.surface));
        }
    }
    Ok(Sentence {
        raw: raw.to_string(),
        tokens,
    })
}

/// Preprocess a list of raw sentences into a document.
pub fn preprocess_document(
    raws: &[String],
    config: &PreprocessConfig,
    db: Option<&WordNetDb>,
) -> Result<Document> {
    let sentences = raws
        .iter()
        .map(|raw| preprocess_sentence(raw, config, db))
        .collect::<Result<Vec<_>>>()?;
    Ok(Document { sentences })
}
