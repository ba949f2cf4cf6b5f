//! C ABI for the simrouge text-similarity engine.
//!
//! The API uses opaque handles and status codes. A loaded WordNet database
//! is returned as a `*mut SimrougeWordnet` and freed with
//! [`simrouge_wordnet_free`]; every fallible call returns a
//! [`SimrougeStatus`] and writes its result through out-pointers. The last
//! failure's message is kept per thread and can be read with
//! [`simrouge_last_error_message`].
//!
//! The generated header lands in `include/simrouge.h`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::ptr;

use simrouge::engine::{score_pair, MethodConfig, MethodId};
use simrouge::error::Error;
use simrouge::eval::{classify, cohen_kappa};
use simrouge::preprocess::{preprocess_sentence, Setting};
use simrouge::wordnet::WordNetDb;

/// Outcome of an API call.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SimrougeStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Unknown method/setting name or invalid combination.
    InvalidConfig = 3,
    /// The method needs a WordNet database and none was supplied.
    MissingLexicon = 4,
    /// File system or database parse failure.
    IoError = 5,
}

/// Recall / precision / F-measure triple, each in [0, 1].
#[repr(C)]
#[derive(Copy, Clone, Debug, Default, PartialEq)]
pub struct SimrougeScore {
    pub recall: f64,
    pub precision: f64,
    pub f: f64,
}

/// Opaque handle to a loaded WordNet database.
pub struct SimrougeWordnet {
    db: WordNetDb,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let stored = CString::new(message)
        .unwrap_or_else(|_| CString::new("error message contained NUL").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(stored));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn fail(status: SimrougeStatus, message: impl Into<String>) -> SimrougeStatus {
    set_last_error(message.into());
    status
}

fn status_of(err: &Error) -> SimrougeStatus {
    match err {
        Error::MissingLexicon => SimrougeStatus::MissingLexicon,
        Error::InvalidN(_)
        | Error::MismatchedN(_, _)
        | Error::InvalidCombination { .. }
        | Error::StemmingIncompatible
        | Error::InvalidThreshold(_)
        | Error::InvalidDepthWeights => SimrougeStatus::InvalidConfig,
        Error::MissingFile(_)
        | Error::Parse { .. }
        | Error::DuplicateId(_)
        | Error::LengthMismatch(_, _)
        | Error::Io(_) => SimrougeStatus::IoError,
    }
}

/// # Safety
/// `ptr` must be null or a valid NUL-terminated string.
unsafe fn utf8_arg<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, SimrougeStatus> {
    if ptr.is_null() {
        return Err(fail(
            SimrougeStatus::NullArgument,
            format!("{what} must not be null"),
        ));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| fail(SimrougeStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn simrouge_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message describing the current thread's most recent failure, or null.
/// The pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn simrouge_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map(|s| s.as_ptr())
            .unwrap_or(ptr::null())
    })
}

/// Load a WordNet database from a directory containing the standard
/// `data.*` / `index.*` / `*.exc` files. On success writes a handle to
/// `out_db`; free it with [`simrouge_wordnet_free`].
///
/// # Safety
/// `dir` must be a valid NUL-terminated string and `out_db` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn simrouge_wordnet_load(
    dir: *const c_char,
    out_db: *mut *mut SimrougeWordnet,
) -> SimrougeStatus {
    if out_db.is_null() {
        return fail(SimrougeStatus::NullArgument, "out_db must not be null");
    }
    let dir = match utf8_arg(dir, "dir") {
        Ok(s) => s,
        Err(status) => return status,
    };
    match WordNetDb::load(Path::new(dir)) {
        Ok(db) => {
            clear_last_error();
            *out_db = Box::into_raw(Box::new(SimrougeWordnet { db }));
            SimrougeStatus::Ok
        }
        Err(e) => fail(status_of(&e), e.to_string()),
    }
}

/// Free a database handle. Null is a no-op.
///
/// # Safety
/// `db` must be null or a pointer returned by [`simrouge_wordnet_load`]
/// that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn simrouge_wordnet_free(db: *mut SimrougeWordnet) {
    if !db.is_null() {
        drop(Box::from_raw(db));
    }
}

/// Number of synsets in a loaded database (0 for null).
///
/// # Safety
/// `db` must be null or a live handle from [`simrouge_wordnet_load`].
#[no_mangle]
pub unsafe extern "C" fn simrouge_wordnet_synset_count(db: *const SimrougeWordnet) -> usize {
    if db.is_null() {
        0
    } else {
        (*db).db.synset_count()
    }
}

/// Score a candidate sentence against a reference sentence.
///
/// `method` is one of unigram, bigram, trigram, 4-gram, lcs, skip-bigram,
/// unigram-pos, synonyms, relationship; `preprocess` is none, sw, sm or
/// sw+sm. `skip_distance` applies to skip-bigram. When `pretagged` is true
/// the input tokens carry `surface_POS` tags. `db` may be null for methods
/// that do not consult WordNet. The score lands in `out_score`;
/// `out_flagged` (nullable) receives whether F exceeds `threshold`.
///
/// # Safety
/// String arguments must be valid NUL-terminated strings; `out_score` must
/// be a valid pointer; `db` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn simrouge_score_pair(
    method: *const c_char,
    preprocess: *const c_char,
    threshold: f64,
    skip_distance: usize,
    pretagged: bool,
    db: *const SimrougeWordnet,
    ref_text: *const c_char,
    cand_text: *const c_char,
    out_score: *mut SimrougeScore,
    out_flagged: *mut bool,
) -> SimrougeStatus {
    if out_score.is_null() {
        return fail(SimrougeStatus::NullArgument, "out_score must not be null");
    }
    let (method, preprocess, ref_text, cand_text) = match (
        utf8_arg(method, "method"),
        utf8_arg(preprocess, "preprocess"),
        utf8_arg(ref_text, "ref_text"),
        utf8_arg(cand_text, "cand_text"),
    ) {
        (Ok(m), Ok(p), Ok(r), Ok(c)) => (m, p, r, c),
        (Err(s), _, _, _) | (_, Err(s), _, _) | (_, _, Err(s), _) | (_, _, _, Err(s)) => return s,
    };
    let Some(method) = MethodId::parse(method) else {
        return fail(
            SimrougeStatus::InvalidConfig,
            format!("unknown method: {method}"),
        );
    };
    let Some(setting) = Setting::parse(preprocess) else {
        return fail(
            SimrougeStatus::InvalidConfig,
            format!("unknown preprocess setting: {preprocess}"),
        );
    };
    let mut cfg = MethodConfig::recommended(method);
    cfg.preprocess.remove_stopwords = setting.removes_stopwords();
    cfg.preprocess.apply_stemming = setting.applies_stemming();
    cfg.threshold = threshold;
    cfg.skip.distance = skip_distance;
    if pretagged {
        cfg.preprocess.pretagged = true;
        cfg.preprocess.tag_pos = true;
    }
    if let Err(e) = cfg.validate() {
        return fail(status_of(&e), e.to_string());
    }
    let db = if db.is_null() { None } else { Some(&(*db).db) };
    if cfg.needs_wordnet() && db.is_none() {
        return fail(
            SimrougeStatus::MissingLexicon,
            format!("method {} needs a WordNet database", cfg.method),
        );
    }
    let run = || -> Result<SimrougeScore, Error> {
        let reference = preprocess_sentence(ref_text, &cfg.preprocess, db)?;
        let candidate = preprocess_sentence(cand_text, &cfg.preprocess, db)?;
        let score = score_pair(&cfg, &reference, &candidate, db)?;
        Ok(SimrougeScore {
            recall: score.recall,
            precision: score.precision,
            f: score.f,
        })
    };
    match run() {
        Ok(score) => {
            clear_last_error();
            *out_score = score;
            if !out_flagged.is_null() {
                *out_flagged = classify(score.f, threshold);
            }
            SimrougeStatus::Ok
        }
        Err(e) => fail(status_of(&e), e.to_string()),
    }
}

/// Cohen's kappa between two equal-length boolean annotation arrays.
///
/// # Safety
/// `a` and `b` must point to `len` readable booleans; `out_kappa` must be
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn simrouge_cohen_kappa(
    a: *const bool,
    b: *const bool,
    len: usize,
    out_kappa: *mut f64,
) -> SimrougeStatus {
    if a.is_null() || b.is_null() || out_kappa.is_null() {
        return fail(SimrougeStatus::NullArgument, "null argument to kappa");
    }
    let a = std::slice::from_raw_parts(a, len);
    let b = std::slice::from_raw_parts(b, len);
    match cohen_kappa(a, b) {
        Ok(kappa) => {
            clear_last_error();
            *out_kappa = kappa;
            SimrougeStatus::Ok
        }
        Err(e) => fail(SimrougeStatus::InvalidConfig, e.to_string()),
    }
}
