//! Princeton WordNet database: loading, morphological lookup, and the
//! synonym- and relationship-based word similarity measures.
//!
//! The loader reads the standard distribution files `data.{noun,verb,adj,adv}`,
//! `index.{noun,verb,adj,adv}` and `{noun,verb,adj,adv}.exc`. Only lemma
//! lists and `@` (hypernym) pointers are retained; the hyponym relation is
//! the built reverse index. The database is immutable after load and can be
//! shared freely across threads.

mod morphy;
mod score;

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::preprocess::PosTag;

pub use score::{
    jaccard_synsets, relation_depth, rs_score, rs_word, rs_word_sentence, syn_score,
    syn_word_sentence, syn_word_sim, DepthWeights, RelationDirection, MAX_RELATION_DEPTH,
};

/// The four WordNet word classes. Adjective satellites fold into `Adj`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WnPos {
    Noun,
    Verb,
    Adj,
    Adv,
}

impl WnPos {
    pub const ALL: [WnPos; 4] = [WnPos::Noun, WnPos::Verb, WnPos::Adj, WnPos::Adv];

    fn file_suffix(self) -> &'static str {
        match self {
            WnPos::Noun => "noun",
            WnPos::Verb => "verb",
            WnPos::Adj => "adj",
            WnPos::Adv => "adv",
        }
    }

    fn slot(self) -> usize {
        match self {
            WnPos::Noun => 0,
            WnPos::Verb => 1,
            WnPos::Adj => 2,
            WnPos::Adv => 3,
        }
    }

    fn from_marker(s: &str) -> Option<WnPos> {
        match s {
            "n" => Some(WnPos::Noun),
            "v" => Some(WnPos::Verb),
            "a" | "s" => Some(WnPos::Adj),
            "r" => Some(WnPos::Adv),
            _ => None,
        }
    }

    /// Coarse tag to WordNet class; `Other` has no class.
    pub fn from_pos_tag(tag: PosTag) -> Option<WnPos> {
        match tag {
            PosTag::Noun => Some(WnPos::Noun),
            PosTag::Verb => Some(WnPos::Verb),
            PosTag::Adj => Some(WnPos::Adj),
            PosTag::Adv => Some(WnPos::Adv),
            PosTag::Other => None,
        }
    }
}

impl From<WnPos> for PosTag {
    fn from(pos: WnPos) -> PosTag {
        match pos {
            WnPos::Noun => PosTag::Noun,
            WnPos::Verb => PosTag::Verb,
            WnPos::Adj => PosTag::Adj,
            WnPos::Adv => PosTag::Adv,
        }
    }
}

/// Synset identity: byte offset in its data file plus the word class.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SynsetId {
    pub offset: u32,
    pub pos: WnPos,
}

/// A set of synonymous lemmas expressing one concept.
#[derive(Clone, Debug)]
pub struct Synset {
    pub id: SynsetId,
    /// Lowercase lemmas in file order; multiword lemmas keep underscores.
    pub lemmas: Vec<String>,
    /// Direct hypernym synsets (`@` pointers).
    pub hypernyms: Vec<SynsetId>,
}

/// Immutable lexical database.
#[derive(Debug)]
pub struct WordNetDb {
    synsets: HashMap<SynsetId, Synset>,
    /// Per word class: lemma -> synset ids in sense order.
    index: [HashMap<String, Vec<SynsetId>>; 4],
    /// Per word class: inflected form -> base lemmas.
    exceptions: [HashMap<String, Vec<String>>; 4],
    /// Reverse of the hypernym relation.
    hyponyms: HashMap<SynsetId, Vec<SynsetId>>,
}

/// Load a Princeton-format database from a directory.
pub fn load_wordnet(dir: &Path) -> Result<WordNetDb> {
    WordNetDb::load(dir)
}

impl WordNetDb {
    pub fn load(dir: &Path) -> Result<WordNetDb> {
        let mut db = WordNetDb {
            synsets: HashMap::new(),
            index: Default::default(),
            exceptions: Default::default(),
            hyponyms: HashMap::new(),
        };
        for pos in WnPos::ALL {
            let suffix = pos.file_suffix();
            db.parse_data(&read_db_file(dir, &format!("data.{suffix}"))?, pos)?;
            db.parse_index(&read_db_file(dir, &format!("index.{suffix}"))?, pos)?;
            db.parse_exceptions(&read_db_file(dir, &format!("{suffix}.exc"))?, pos)?;
        }
        db.link()?;
        Ok(db)
    }

    pub fn synset(&self, id: SynsetId) -> Option<&Synset> {
        self.synsets.get(&id)
    }

    pub fn synset_count(&self) -> usize {
        self.synsets.len()
    }

    /// Synset ids for an exact lemma, in sense order.
    pub fn synsets_for(&self, lemma: &str, pos: WnPos) -> &[SynsetId] {
        self.index[pos.slot()]
            .get(lemma)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn contains(&self, lemma: &str, pos: WnPos) -> bool {
        self.index[pos.slot()].contains_key(lemma)
    }

    pub(crate) fn exception_bases(&self, form: &str, pos: WnPos) -> Option<&[String]> {
        self.exceptions[pos.slot()].get(form).map(Vec::as_slice)
    }

    /// Direct hyponyms (reverse hypernym links).
    pub fn hyponyms(&self, id: SynsetId) -> &[SynsetId] {
        self.hyponyms.get(&id).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Base lemmas of an inflected form that exist in the index; the form
    /// itself is included when indexed.
    pub fn morphy(&self, form: &str, pos: WnPos) -> Vec<String> {
        morphy::morphy(self, form, pos)
    }

    fn parse_data(&mut self, file: &FileText, pos: WnPos) -> Result<()> {
        for (line_no, line) in data_lines(file) {
            let err = |msg: &str| parse_error(file, line_no, msg);
            let mut fields = line.split_whitespace();
            let mut next = |what: &str| {
                fields
                    .next()
                    .ok_or_else(|| parse_error(file, line_no, &format!("missing {what}")))
            };

            let offset: u32 = next("synset offset")?
                .parse()
                .map_err(|_| err("bad synset offset"))?;
            let _lex_filenum = next("lex filenum")?;
            let ss_type = next("synset type")?;
            let line_pos = WnPos::from_marker(ss_type).ok_or_else(|| err("bad synset type"))?;
            if line_pos != pos {
                return Err(err("synset type does not match file"));
            }
            let word_count = usize::from_str_radix(next("word count")?, 16)
                .map_err(|_| err("bad word count"))?;
            if word_count == 0 {
                return Err(err("synset has no words"));
            }
            let mut lemmas = Vec::with_capacity(word_count);
            for _ in 0..word_count {
                lemmas.push(normalize_lemma(next("lemma")?));
                let _lex_id = next("lex id")?;
            }
            let pointer_count: usize = next("pointer count")?
                .parse()
                .map_err(|_| err("bad pointer count"))?;
            let mut hypernyms = Vec::new();
            for _ in 0..pointer_count {
                let symbol = next("pointer symbol")?;
                let target_offset: u32 = next("pointer offset")?
                    .parse()
                    .map_err(|_| err("bad pointer offset"))?;
                let target_pos = WnPos::from_marker(next("pointer pos")?)
                    .ok_or_else(|| err("bad pointer pos"))?;
                let _source_target = next("pointer source/target")?;
                if symbol == "@" {
                    hypernyms.push(SynsetId {
                        offset: target_offset,
                        pos: target_pos,
                    });
                }
            }
            // Verb frames and the gloss are not used.
            let id = SynsetId { offset, pos };
            self.synsets.insert(
                id,
                Synset {
                    id,
                    lemmas,
                    hypernyms,
                },
            );
        }
        Ok(())
    }

    fn parse_index(&mut self, file: &FileText, pos: WnPos) -> Result<()> {
        for (line_no, line) in data_lines(file) {
            let err = |msg: &str| parse_error(file, line_no, msg);
            let mut fields = line.split_whitespace();
            let mut next = |what: &str| {
                fields
                    .next()
                    .ok_or_else(|| parse_error(file, line_no, &format!("missing {what}")))
            };

            let lemma = next("lemma")?.to_lowercase();
            let line_pos = WnPos::from_marker(next("pos")?).ok_or_else(|| err("bad pos marker"))?;
            if line_pos != pos {
                return Err(err("pos marker does not match file"));
            }
            let synset_count: usize = next("synset count")?
                .parse()
                .map_err(|_| err("bad synset count"))?;
            let pointer_count: usize = next("pointer count")?
                .parse()
                .map_err(|_| err("bad pointer count"))?;
            for _ in 0..pointer_count {
                next("pointer symbol")?;
            }
            let _sense_count = next("sense count")?;
            let _tagsense_count = next("tagsense count")?;
            let mut ids = Vec::with_capacity(synset_count);
            for _ in 0..synset_count {
                let offset: u32 = next("synset offset")?
                    .parse()
                    .map_err(|_| err("bad synset offset"))?;
                ids.push(SynsetId { offset, pos });
            }
            self.index[pos.slot()].insert(lemma, ids);
        }
        Ok(())
    }

    fn parse_exceptions(&mut self, file: &FileText, pos: WnPos) -> Result<()> {
        for (line_no, line) in data_lines(file) {
            let mut fields = line.split_whitespace();
            let form = fields
                .next()
                .ok_or_else(|| parse_error(file, line_no, "missing inflected form"))?
                .to_lowercase();
            let bases: Vec<String> = fields.map(str::to_lowercase).collect();
            if bases.is_empty() {
                return Err(parse_error(file, line_no, "exception has no base form"));
            }
            self.exceptions[pos.slot()]
                .entry(form)
                .or_default()
                .extend(bases);
        }
        Ok(())
    }

    /// Build the hyponym reverse index and check referential integrity.
    fn link(&mut self) -> Result<()> {
        for synset in self.synsets.values() {
            for hypernym in &synset.hypernyms {
                if !self.synsets.contains_key(hypernym) {
                    return Err(Error::Parse {
                        file: format!("data.{}", synset.id.pos.file_suffix()),
                        line: 0,
                        msg: format!(
                            "synset {:08} has dangling hypernym {:08}",
                            synset.id.offset, hypernym.offset
                        ),
                    });
                }
            }
        }
        let mut hyponyms: HashMap<SynsetId, Vec<SynsetId>> = HashMap::new();
        for synset in self.synsets.values() {
            for hypernym in &synset.hypernyms {
                hyponyms.entry(*hypernym).or_default().push(synset.id);
            }
        }
        for list in hyponyms.values_mut() {
            list.sort();
        }
        self.hyponyms = hyponyms;

        for (slot, per_pos) in self.index.iter().enumerate() {
            for (lemma, ids) in per_pos {
                for id in ids {
                    if !self.synsets.contains_key(id) {
                        return Err(Error::Parse {
                            file: format!("index.{}", WnPos::ALL[slot].file_suffix()),
                            line: 0,
                            msg: format!(
                                "lemma {lemma} references missing synset {:08}",
                                id.offset
                            ),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

struct FileText {
    name: String,
    text: String,
}

fn read_db_file(dir: &Path, name: &str) -> Result<FileText> {
    let path = dir.join(name);
    match fs::read_to_string(&path) {
        Ok(text) => Ok(FileText {
            name: name.to_string(),
            text,
        }),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Err(Error::MissingFile(path)),
        Err(e) => Err(e.into()),
    }
}

/// Content lines with 1-based numbers; the license header (lines starting
/// with a space) and blank lines are skipped.
fn data_lines(file: &FileText) -> impl Iterator<Item = (usize, &str)> {
    file.text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with(' '))
}

fn parse_error(file: &FileText, line: usize, msg: &str) -> Error {
    Error::Parse {
        file: file.name.clone(),
        line,
        msg: msg.to_string(),
    }
}

/// Lowercase and strip the adjective syntax marker, e.g. `galore(ip)`.
fn normalize_lemma(raw: &str) -> String {
    let stripped = match raw.find('(') {
        Some(open) if raw.ends_with(')') => &raw[..open],
        _ => raw,
    };
    stripped.to_lowercase()
}
