//! Command-line front end: pair scoring, document comparison, threshold
//! sweeps, annotator agreement, and the recommended-settings table.
//!
//! Exit codes: 0 success, 1 I/O or data error, 2 configuration error.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use simrouge::engine::{
    compare_documents, recommended_settings, score_pair, MethodConfig, MethodId, MethodReport,
};
use simrouge::error::Error;
use simrouge::eval::{classify_with, cohen_kappa, load_corpus, sweep, Thresholding};
use simrouge::preprocess::{
    parse_stopwords, preprocess_sentence, split_sentences, Setting, SplitMode,
};
use simrouge::wordnet::{load_wordnet, WordNetDb};

/// Environment variable consulted when --wordnet-dir is not given.
const WORDNET_DIR_ENV: &str = "SIMROUGE_WORDNET_DIR";

#[derive(Parser)]
#[command(
    name = "simrouge",
    version,
    about = "Sentence-level text similarity and plagiarism screening",
    long_about = "Scores candidate text against reference text with clipped n-gram \
                  co-occurrence, LCS, skip-bigram and WordNet-based measures, and \
                  evaluates labeled corpora with threshold sweeps."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Tsv,
    Human,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SentenceMode {
    Terminator,
    Line,
}

#[derive(Args)]
struct ScoringOpts {
    /// Preprocessing setting: none, sw, sm or sw+sm.
    #[arg(long, default_value = "none")]
    preprocess: String,

    /// Flagging threshold in [0,1]. Defaults to the method's recommended
    /// threshold (unigram-pos mirrors unigram's 0.6).
    #[arg(long)]
    threshold: Option<f64>,

    /// Skip distance for the skip-bigram method.
    #[arg(long, value_name = "N")]
    d: Option<usize>,

    /// Directory with the WordNet database files (falls back to
    /// SIMROUGE_WORDNET_DIR).
    #[arg(long, value_name = "DIR")]
    wordnet_dir: Option<PathBuf>,

    /// Input tokens carry their own tags as surface_POS
    /// (POS in NOUN, VERB, ADJ, ADV, OTHER).
    #[arg(long)]
    pretagged: bool,

    /// Replace the built-in stopword list with one from a file
    /// (one word per line, # comments).
    #[arg(long, value_name = "FILE")]
    stopwords: Option<PathBuf>,

    /// Flag scores equal to the threshold as well (default is strictly
    /// greater).
    #[arg(long)]
    inclusive: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Score one reference/candidate sentence pair with one method.
    Pair {
        /// Reference sentence text.
        ref_text: String,
        /// Candidate sentence text.
        cand_text: String,
        /// Scoring method (unigram, bigram, trigram, 4-gram, lcs,
        /// skip-bigram, unigram-pos, synonyms, relationship).
        #[arg(long)]
        method: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[command(flatten)]
        opts: ScoringOpts,
    },
    /// Compare every reference sentence with every candidate sentence.
    Compare {
        /// File with the reference document.
        ref_file: PathBuf,
        /// File with the candidate document.
        cand_file: PathBuf,
        /// Comma-separated methods to run.
        #[arg(long, value_delimiter = ',', default_value = "unigram")]
        methods: Vec<String>,
        /// Matches reported per reference sentence.
        #[arg(long, default_value_t = 5)]
        top_k: usize,
        /// How files are cut into sentences.
        #[arg(long, value_enum, default_value_t = SentenceMode::Terminator)]
        sentence_mode: SentenceMode,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[command(flatten)]
        opts: ScoringOpts,
    },
    /// Sweep thresholds over a labeled JSON-Lines corpus.
    Sweep {
        /// Corpus file: one {"id","reference","candidate","label"} object
        /// per line.
        corpus: PathBuf,
        /// Scoring method.
        #[arg(long)]
        method: String,
        /// Comma-separated threshold list ("0.5,0.6") or start:end:step
        /// range ("0.0:1.0:0.1"). Default 0.0:1.0:0.1.
        #[arg(long)]
        thresholds: Option<String>,
        #[command(flatten)]
        opts: ScoringOpts,
    },
    /// Cohen's kappa between two annotation files (TSV: id<TAB>label).
    Kappa { annot_a: PathBuf, annot_b: PathBuf },
    /// Print the recommended (setting, threshold) table.
    Settings {
        #[arg(long, value_enum, default_value_t = OutputFormat::Human)]
        format: OutputFormat,
    },
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn config(message: impl Into<String>) -> CliError {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    fn io(message: impl Into<String>) -> CliError {
        CliError {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> CliError {
        let code = match err {
            Error::InvalidN(_)
            | Error::MismatchedN(_, _)
            | Error::MissingLexicon
            | Error::InvalidCombination { .. }
            | Error::StemmingIncompatible
            | Error::InvalidThreshold(_)
            | Error::InvalidDepthWeights => 2,
            Error::MissingFile(_)
            | Error::Parse { .. }
            | Error::DuplicateId(_)
            | Error::LengthMismatch(_, _)
            | Error::Io(_) => 1,
        };
        CliError {
            code,
            message: err.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("simrouge: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Pair {
            ref_text,
            cand_text,
            method,
            format,
            opts,
        } => cmd_pair(&ref_text, &cand_text, &method, format, &opts),
        Command::Compare {
            ref_file,
            cand_file,
            methods,
            top_k,
            sentence_mode,
            format,
            opts,
        } => cmd_compare(
            &ref_file,
            &cand_file,
            &methods,
            top_k,
            sentence_mode,
            format,
            &opts,
        ),
        Command::Sweep {
            corpus,
            method,
            thresholds,
            opts,
        } => cmd_sweep(&corpus, &method, thresholds.as_deref(), &opts),
        Command::Kappa { annot_a, annot_b } => cmd_kappa(&annot_a, &annot_b),
        Command::Settings { format } => cmd_settings(format),
    }
}

/// Build a MethodConfig from flags; defaults come from the recommended
/// settings table.
fn build_config(method_name: &str, opts: &ScoringOpts) -> Result<MethodConfig, CliError> {
    let method = MethodId::parse(method_name)
        .ok_or_else(|| CliError::config(format!("unknown method: {method_name}")))?;
    let mut cfg = MethodConfig::recommended(method);
    let setting = Setting::parse(&opts.preprocess).ok_or_else(|| {
        CliError::config(format!("unknown preprocess setting: {}", opts.preprocess))
    })?;
    cfg.preprocess.remove_stopwords = setting.removes_stopwords();
    cfg.preprocess.apply_stemming = setting.applies_stemming();
    if let Some(threshold) = opts.threshold {
        cfg.threshold = threshold;
    }
    if let Some(d) = opts.d {
        cfg.skip.distance = d;
    }
    if opts.pretagged {
        cfg.preprocess.pretagged = true;
        cfg.preprocess.tag_pos = true;
    }
    if let Some(path) = &opts.stopwords {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::io(format!("{}: {e}", path.display())))?;
        cfg.preprocess.stopwords = parse_stopwords(&text);
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Load WordNet when the configuration calls for it.
fn load_db_if_needed(
    cfg: &MethodConfig,
    opts: &ScoringOpts,
) -> Result<Option<WordNetDb>, CliError> {
    if !cfg.needs_wordnet() {
        return Ok(None);
    }
    let dir = opts
        .wordnet_dir
        .clone()
        .or_else(|| std::env::var_os(WORDNET_DIR_ENV).map(PathBuf::from))
        .ok_or_else(|| {
            CliError::config(format!(
                "method {} needs WordNet; pass --wordnet-dir or set {}",
                cfg.method, WORDNET_DIR_ENV
            ))
        })?;
    Ok(Some(load_wordnet(&dir)?))
}

fn thresholding(opts: &ScoringOpts) -> Thresholding {
    if opts.inclusive {
        Thresholding::Inclusive
    } else {
        Thresholding::Strict
    }
}

fn round4(x: f64) -> f64 {
    (x * 10_000.0).round() / 10_000.0
}

/// Write command output through one buffered handle. A downstream consumer
/// closing the pipe early ends the process quietly instead of erroring.
fn emit<F>(body: F) -> Result<(), CliError>
where
    F: FnOnce(&mut dyn Write) -> std::io::Result<()>,
{
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    match body(&mut out).and_then(|()| out.flush()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(CliError::io(e.to_string())),
    }
}

fn cmd_pair(
    ref_text: &str,
    cand_text: &str,
    method: &str,
    format: OutputFormat,
    opts: &ScoringOpts,
) -> Result<(), CliError> {
    let cfg = build_config(method, opts)?;
    let db = load_db_if_needed(&cfg, opts)?;
    let reference = preprocess_sentence(ref_text, &cfg.preprocess, db.as_ref())?;
    let candidate = preprocess_sentence(cand_text, &cfg.preprocess, db.as_ref())?;
    let score = score_pair(&cfg, &reference, &candidate, db.as_ref())?;
    let flagged = classify_with(score.f, cfg.threshold, thresholding(opts));
    match format {
        OutputFormat::Json => {
            let value = serde_json::json!({
                "method": cfg.method.name(),
                "r": round4(score.recall),
                "p": round4(score.precision),
                "f": round4(score.f),
                "threshold": cfg.threshold,
                "flagged": flagged,
            });
            println!("{value}");
        }
        OutputFormat::Tsv => {
            println!("method\tr\tp\tf\tflagged");
            println!(
                "{}\t{:.4}\t{:.4}\t{:.4}\t{}",
                cfg.method, score.recall, score.precision, score.f, flagged
            );
        }
        OutputFormat::Human => {
            println!(
                "{}: R={:.2} P={:.2} F={:.2} (threshold {:.2}) -> {}",
                cfg.method,
                score.recall,
                score.precision,
                score.f,
                cfg.threshold,
                if flagged { "flagged" } else { "clear" }
            );
        }
    }
    Ok(())
}

fn read_sentences(path: &Path, mode: SentenceMode) -> Result<Vec<String>, CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError::io(format!("{}: {e}", path.display())))?;
    let split = match mode {
        SentenceMode::Terminator => SplitMode::Terminator,
        SentenceMode::Line => SplitMode::Line,
    };
    Ok(split_sentences(&text, split))
}

fn round_report(reports: &mut [MethodReport]) {
    for report in reports {
        for row in &mut report.rows {
            for entry in &mut row.matches {
                entry.r = round4(entry.r);
                entry.p = round4(entry.p);
                entry.f = round4(entry.f);
            }
        }
    }
}

fn cmd_compare(
    ref_file: &Path,
    cand_file: &Path,
    methods: &[String],
    top_k: usize,
    sentence_mode: SentenceMode,
    format: OutputFormat,
    opts: &ScoringOpts,
) -> Result<(), CliError> {
    if top_k == 0 {
        return Err(CliError::config("--top-k must be at least 1"));
    }
    let cfgs = methods
        .iter()
        .map(|m| build_config(m, opts))
        .collect::<Result<Vec<_>, _>>()?;
    let db = cfgs
        .iter()
        .find(|cfg| cfg.needs_wordnet())
        .map(|cfg| load_db_if_needed(cfg, opts))
        .transpose()?
        .flatten();
    let ref_sentences = read_sentences(ref_file, sentence_mode)?;
    let cand_sentences = read_sentences(cand_file, sentence_mode)?;
    let mut reports =
        compare_documents(&cfgs, &ref_sentences, &cand_sentences, top_k, db.as_ref())?;
    round_report(&mut reports);
    match format {
        OutputFormat::Json => {
            let map: BTreeMap<&str, &Vec<simrouge::engine::RefMatches>> = reports
                .iter()
                .map(|report| (report.method.as_str(), &report.rows))
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&map).expect("serializable")
            );
        }
        OutputFormat::Tsv | OutputFormat::Human => {
            println!("method\tref_index\tcand_index\tr\tp\tf\tflagged");
            for report in &reports {
                for row in &report.rows {
                    for entry in &row.matches {
                        println!(
                            "{}\t{}\t{}\t{:.4}\t{:.4}\t{:.4}\t{}",
                            report.method,
                            row.ref_index,
                            entry.cand_index,
                            entry.r,
                            entry.p,
                            entry.f,
                            entry.flagged
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn parse_thresholds(spec: Option<&str>) -> Result<Vec<f64>, CliError> {
    let Some(spec) = spec else {
        return Ok((0..=10).map(|i| i as f64 / 10.0).collect());
    };
    let parse_one = |s: &str| -> Result<f64, CliError> {
        s.trim()
            .parse::<f64>()
            .map_err(|_| CliError::config(format!("bad threshold: {s}")))
    };
    let values: Vec<f64> = if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(CliError::config("range must be start:end:step"));
        }
        let (start, end, step) = (
            parse_one(parts[0])?,
            parse_one(parts[1])?,
            parse_one(parts[2])?,
        );
        if step <= 0.0 {
            return Err(CliError::config("range step must be positive"));
        }
        let mut out = Vec::new();
        let mut i = 0usize;
        loop {
            let t = start + step * i as f64;
            if t > end + 1e-9 {
                break;
            }
            out.push((t * 1e9).round() / 1e9);
            i += 1;
        }
        out
    } else {
        spec.split(',')
            .map(parse_one)
            .collect::<Result<Vec<_>, _>>()?
    };
    if values.is_empty() {
        return Err(CliError::config("no thresholds given"));
    }
    let sorted = values.windows(2).all(|w| w[0] <= w[1]);
    if !sorted {
        return Err(CliError::config("thresholds must be ascending"));
    }
    Ok(values)
}

fn cmd_sweep(
    corpus_path: &Path,
    method: &str,
    thresholds: Option<&str>,
    opts: &ScoringOpts,
) -> Result<(), CliError> {
    let cfg = build_config(method, opts)?;
    let thresholds = parse_thresholds(thresholds)?;
    let db = load_db_if_needed(&cfg, opts)?;
    let corpus = load_corpus(corpus_path)?;
    let rows = sweep(&cfg, &corpus, &thresholds, db.as_ref(), thresholding(opts))?;
    println!("threshold\tTP\tFP\tTN\tFN\tR\tP\tF");
    for row in rows {
        println!(
            "{:.2}\t{}\t{}\t{}\t{}\t{:.4}\t{:.4}\t{:.4}",
            row.threshold,
            row.counts.true_pos,
            row.counts.false_pos,
            row.counts.true_neg,
            row.counts.false_neg,
            row.recall,
            row.precision,
            row.f
        );
    }
    Ok(())
}

/// Read an annotation TSV (id<TAB>label). An optional "id\tlabel" header is
/// skipped; labels are true/false or 1/0.
fn read_annotations(path: &Path) -> Result<Vec<(String, bool)>, CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError::io(format!("{}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split('\t');
        let id = fields.next().unwrap_or("").trim().to_string();
        let label_text = fields.next().unwrap_or("").trim();
        if line_no == 0 && id == "id" && label_text == "label" {
            continue;
        }
        let label = match label_text.to_ascii_lowercase().as_str() {
            "true" | "1" | "yes" => true,
            "false" | "0" | "no" => false,
            other => {
                return Err(CliError::io(format!(
                    "{}:{}: bad label: {other}",
                    path.display(),
                    line_no + 1
                )))
            }
        };
        out.push((id, label));
    }
    Ok(out)
}

fn cmd_kappa(path_a: &Path, path_b: &Path) -> Result<(), CliError> {
    let map_a: BTreeMap<String, bool> = read_annotations(path_a)?.into_iter().collect();
    let map_b: BTreeMap<String, bool> = read_annotations(path_b)?.into_iter().collect();
    if map_a.len() != map_b.len() || map_a.keys().any(|id| !map_b.contains_key(id)) {
        return Err(CliError::io("annotation files do not cover the same ids"));
    }
    let a: Vec<bool> = map_a.values().copied().collect();
    let b: Vec<bool> = map_a.keys().map(|id| map_b[id]).collect();
    let kappa = cohen_kappa(&a, &b)?;
    println!("{kappa:.3}");
    Ok(())
}

fn cmd_settings(format: OutputFormat) -> Result<(), CliError> {
    let table = recommended_settings();
    match format {
        OutputFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&table).expect("serializable")
            );
        }
        OutputFormat::Tsv => {
            println!("method\tsetting\tthreshold");
            for row in table {
                println!("{}\t{}\t{}", row.method, row.setting, row.threshold);
            }
        }
        OutputFormat::Human => {
            println!("{:<14} {:<8} threshold", "method", "setting");
            for row in table {
                println!(
                    "{:<14} {:<8} {}",
                    row.method.name(),
                    row.setting.as_str(),
                    row.threshold
                );
            }
        }
    }
    Ok(())
}
