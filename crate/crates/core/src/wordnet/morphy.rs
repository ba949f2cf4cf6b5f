//! Morphological reduction of inflected forms to indexed base lemmas:
//! exception-list lookup first, then the standard detachment suffix rules,
//! keeping only results present in the index.

use super::{WnPos, WordNetDb};

const NOUN_RULES: &[(&str, &str)] = &[
    ("s", ""),
    ("ses", "s"),
    ("ves", "f"),
    ("xes", "x"),
    ("zes", "z"),
    ("ches", "ch"),
    ("shes", "sh"),
    ("men", "man"),
    ("ies", "y"),
];

const VERB_RULES: &[(&str, &str)] = &[
    ("s", ""),
    ("ies", "y"),
    ("es", "e"),
    ("es", ""),
    ("ed", "e"),
    ("ed", ""),
    ("ing", "e"),
    ("ing", ""),
];

const ADJ_RULES: &[(&str, &str)] = &[("er", ""), ("est", ""), ("er", "e"), ("est", "e")];

const ADV_RULES: &[(&str, &str)] = &[];

fn rules(pos: WnPos) -> &'static [(&'static str, &'static str)] {
    match pos {
        WnPos::Noun => NOUN_RULES,
        WnPos::Verb => VERB_RULES,
        WnPos::Adj => ADJ_RULES,
        WnPos::Adv => ADV_RULES,
    }
}

fn apply_rules(forms: &[String], pos: WnPos) -> Vec<String> {
    let mut out = Vec::new();
    for form in forms {
        for (suffix, replacement) in rules(pos) {
            if let Some(stripped) = form.strip_suffix(suffix) {
                out.push(format!("{stripped}{replacement}"));
            }
        }
    }
    out
}

fn keep_indexed(db: &WordNetDb, pos: WnPos, forms: &[String]) -> Vec<String> {
    let mut seen = Vec::new();
    for form in forms {
        if db.contains(form, pos) && !seen.contains(form) {
            seen.push(form.clone());
        }
    }
    seen
}

pub(super) fn morphy(db: &WordNetDb, form: &str, pos: WnPos) -> Vec<String> {
    let form = form.to_lowercase();

    if let Some(bases) = db.exception_bases(&form, pos) {
        let mut candidates = vec![form.clone()];
        candidates.extend(bases.iter().cloned());
        return keep_indexed(db, pos, &candidates);
    }

    let mut forms = apply_rules(std::slice::from_ref(&form), pos);
    let mut candidates = vec![form.clone()];
    candidates.extend(forms.iter().cloned());
    let results = keep_indexed(db, pos, &candidates);
    if !results.is_empty() {
        return results;
    }

    // Keep detaching until something surfaces in the index.
    while !forms.is_empty() {
        forms = apply_rules(&forms, pos);
        let results = keep_indexed(db, pos, &forms);
        if !results.is_empty() {
            return results;
        }
    }
    Vec::new()
}
