//! Command line surface for the hint pipeline.
//!
//! Exit codes: 0 success, 1 domain error (bad data, failed parse,
//! validation violations), 2 usage error (clap). Diagnostics go to stderr;
//! stdout carries exactly one artifact per input record, in input order.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use hintgen::clauser::{question_to_clause, ClauseOptions};
use hintgen::composer::{
    compose_full, compose_rsb, compose_tb, Hint, HintBundle, HintMode, PatternInventory,
    PatternPicker, PatternStrategy, StartPattern,
};
use hintgen::dataset::{
    emit_pretraining, emit_seq2seq, read_records_from_path, split_dataset, write_records,
    SplitSpec,
};
use hintgen::lexicon::{Lexicon, Stopwords, VerbTable};
use hintgen::metrics::{score_corpus, ScorePair};
use hintgen::qbank::{retrieve_related, QuestionBank};
use hintgen::qparse::{parse_question, Question};
use hintgen::validate::{Validator, ValidatorConfig};

#[derive(Parser)]
#[command(
    name = "hintgen",
    version,
    about = "Turn a question and its related questions into a voice-friendly follow-on hint"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for record-parallel subcommands (output order is
    /// preserved regardless).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Tb,
    Rsb,
    Full,
}

impl From<ModeArg> for HintMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Tb => HintMode::Tb,
            ModeArg::Rsb => HintMode::Rsb,
            ModeArg::Full => HintMode::Full,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConjArg {
    Or,
    And,
}

#[derive(Args)]
struct PatternArgs {
    /// Start-pattern index (fixed strategy).
    #[arg(long, default_value_t = 0)]
    pattern: usize,
    /// Cycle through the inventory instead of using a fixed index.
    #[arg(long, conflicts_with = "seed")]
    round_robin: bool,
    /// Seeded pattern selection; no wall-clock entropy is ever used.
    #[arg(long)]
    seed: Option<u64>,
}

impl PatternArgs {
    fn strategy(&self) -> PatternStrategy {
        if let Some(seed) = self.seed {
            PatternStrategy::Seeded(seed)
        } else if self.round_robin {
            PatternStrategy::RoundRobin
        } else {
            PatternStrategy::Fixed(self.pattern)
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse questions (one per line) into structural analyses (JSON lines).
    Parse {
        /// Input file; stdin when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Convert questions (one per line) into content clauses.
    Clause {
        #[arg(long)]
        input: Option<PathBuf>,
        /// Keep first-person pronouns instead of shifting to second person.
        #[arg(long)]
        no_person_shift: bool,
        /// Move the copula to clause-final position in copular questions.
        #[arg(long)]
        embedded_inversion: bool,
    },
    /// Compose hints from bundle records, one hint per line.
    Hint {
        #[arg(long)]
        bundles: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[command(flatten)]
        pattern: PatternArgs,
        #[arg(long, value_enum, default_value_t = ConjArg::Or)]
        conj: ConjArg,
    },
    /// Validate hints against their bundles; exit 1 on any violation.
    Validate {
        #[arg(long)]
        bundles: PathBuf,
        /// Pre-composed hint texts, one per line, paired with bundles by
        /// line number. When omitted, hints are composed with --mode.
        #[arg(long)]
        hints: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ModeArg::Full)]
        mode: ModeArg,
        #[command(flatten)]
        pattern: PatternArgs,
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Score candidate hints against references (line-aligned files).
    Score {
        #[arg(long)]
        candidates: PathBuf,
        #[arg(long)]
        references: PathBuf,
        /// Also write the tab-separated report to a file.
        #[arg(long)]
        tsv: Option<PathBuf>,
        /// Also write the structured report (one JSON record per pair).
        #[arg(long)]
        jsonl: Option<PathBuf>,
    },
    /// Retrieve related questions for a bank record.
    Retrieve {
        #[arg(long)]
        bank: PathBuf,
        /// Question id of the query record.
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Shuffle and split bundle records into train/dev/test files.
    Split {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
        /// Comma-separated train,dev,test ratios.
        #[arg(long, default_value = "0.6,0.1,0.3")]
        ratios: String,
        #[arg(long)]
        seed: u64,
    },
    /// Emit seq2seq training lines.
    Emit {
        #[arg(long)]
        bundles: PathBuf,
        /// Emit single-question reported-speech pairs instead of the
        /// question-set encoding.
        #[arg(long)]
        pretrain: bool,
        /// Append the gold hint after a tab when present.
        #[arg(long)]
        with_targets: bool,
        #[command(flatten)]
        pattern: PatternArgs,
    },
    /// Measure full-pipeline hint latency over the bundle corpus.
    Bench {
        #[arg(long)]
        bundles: PathBuf,
        /// Cycle the corpus until at least this many hints are timed.
        #[arg(long, default_value_t = 1000)]
        min_bundles: usize,
        #[command(flatten)]
        pattern: PatternArgs,
    },
}

fn env_path(var: &str) -> Option<PathBuf> {
    std::env::var_os(var).map(PathBuf::from)
}

fn load_lexicon() -> Result<Lexicon> {
    let mut lexicon = match env_path("HINTGEN_AUX_LEXICON") {
        Some(p) => Lexicon::with_aux_from_path(&p)
            .with_context(|| format!("loading auxiliary lexicon from {}", p.display()))?,
        None => Lexicon::builtin(),
    };
    if let Some(p) = env_path("HINTGEN_VERBS") {
        lexicon = lexicon.with_verbs(
            VerbTable::from_path(&p)
                .with_context(|| format!("loading verb table from {}", p.display()))?,
        );
    }
    Ok(lexicon)
}

fn load_inventory() -> Result<PatternInventory> {
    match env_path("HINTGEN_PATTERNS") {
        Some(p) => PatternInventory::from_path(&p)
            .with_context(|| format!("loading start patterns from {}", p.display())),
        None => Ok(PatternInventory::builtin()),
    }
}

fn load_stopwords() -> Result<Stopwords> {
    match env_path("HINTGEN_STOPWORDS") {
        Some(p) => Stopwords::from_path(&p)
            .with_context(|| format!("loading stopwords from {}", p.display())),
        None => Ok(Stopwords::builtin()),
    }
}

fn read_lines(path: Option<&Path>) -> Result<Vec<String>> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p)
            .with_context(|| format!("reading {}", p.display()))?,
        None => {
            let mut buf = String::new();
            std::io::stdin().lock().read_to_string(&mut buf)?;
            buf
        }
    };
    Ok(text.lines().map(str::to_string).collect())
}

fn questions_from_lines(lines: &[String]) -> Result<Vec<Question>> {
    lines
        .iter()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            Question::new(format!("q{}", i + 1), l.clone())
                .map_err(|e| anyhow!("line {}: {e}", i + 1))
        })
        .collect()
}

fn pick_patterns(
    inventory: &PatternInventory,
    args: &PatternArgs,
    n: usize,
) -> Result<Vec<StartPattern>> {
    let mut picker = PatternPicker::new(inventory, args.strategy());
    (0..n).map(|_| Ok(picker.next_pattern()?)).collect()
}

fn compose(
    bundle: &HintBundle,
    mode: HintMode,
    pattern: &StartPattern,
    conj: &str,
    lexicon: &Lexicon,
) -> Result<Hint> {
    let hint = match mode {
        HintMode::Tb => compose_tb(bundle, pattern),
        HintMode::Rsb => compose_rsb(bundle, pattern, lexicon)
            .with_context(|| format!("bundle {}", bundle.id))?,
        HintMode::Full => compose_full(bundle, pattern, conj, lexicon)
            .with_context(|| format!("bundle {}", bundle.id))?,
    };
    Ok(hint)
}

fn run() -> Result<bool> {
    let cli = Cli::parse();
    if cli.jobs == 0 {
        bail!("--jobs must be at least 1");
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build_global()
        .ok();

    let mut stdout = std::io::stdout().lock();
    match cli.command {
        Command::Parse { input } => {
            let lexicon = load_lexicon()?;
            let questions = questions_from_lines(&read_lines(input.as_deref())?)?;
            for q in &questions {
                let parsed = parse_question(q, &lexicon)?;
                let spans = |r: &std::ops::Range<usize>| {
                    q.tokens[r.clone()]
                        .iter()
                        .map(|t| t.surface.clone())
                        .collect::<Vec<_>>()
                };
                let record = serde_json::json!({
                    "id": parsed.source.id,
                    "kind": parsed.kind,
                    "inversion": parsed.inversion,
                    "wh_phrase": spans(&parsed.wh_phrase),
                    "auxiliary": parsed.auxiliary.as_ref().map(|a| a.surface.clone()),
                    "subject": spans(&parsed.subject),
                    "main_verb": parsed.main_verb.map(|i| q.tokens[i].surface.clone()),
                    "remainder": spans(&parsed.remainder),
                });
                writeln!(stdout, "{record}")?;
            }
        }
        Command::Clause {
            input,
            no_person_shift,
            embedded_inversion,
        } => {
            let lexicon = load_lexicon()?;
            let opts = ClauseOptions {
                person_shift: !no_person_shift,
                embedded_inversion,
            };
            for q in questions_from_lines(&read_lines(input.as_deref())?)? {
                let clause = question_to_clause(&q, &lexicon, &opts)?;
                writeln!(stdout, "{}", clause.text())?;
            }
        }
        Command::Hint {
            bundles,
            mode,
            pattern,
            conj,
        } => {
            let lexicon = load_lexicon()?;
            let inventory = load_inventory()?;
            let bundles = read_records_from_path(&bundles)?;
            let patterns = pick_patterns(&inventory, &pattern, bundles.len())?;
            let conj = match conj {
                ConjArg::Or => "or",
                ConjArg::And => "and",
            };
            let mode: HintMode = mode.into();
            let hints: Vec<Result<Hint>> = bundles
                .par_iter()
                .zip(patterns.par_iter())
                .map(|(bundle, pat)| compose(bundle, mode, pat, conj, &lexicon))
                .collect();
            for hint in hints {
                writeln!(stdout, "{}", hint?.text)?;
            }
        }
        Command::Validate {
            bundles,
            hints,
            mode,
            pattern,
            config,
        } => {
            let lexicon = load_lexicon()?;
            let inventory = load_inventory()?;
            let stopwords = load_stopwords()?;
            let cfg = match config.or_else(|| env_path("HINTGEN_VALIDATOR_CONFIG")) {
                Some(p) => ValidatorConfig::from_path(&p)
                    .with_context(|| format!("loading validator config from {}", p.display()))?,
                None => ValidatorConfig::default(),
            };
            let validator =
                Validator::with_resources(cfg, inventory.clone(), stopwords, lexicon.clone());
            let bundles = read_records_from_path(&bundles)?;
            let hint_list: Vec<Hint> = match hints {
                Some(path) => {
                    let lines = read_lines(Some(&path))?;
                    if lines.len() != bundles.len() {
                        bail!(
                            "{} hints for {} bundles; files must be line-aligned",
                            lines.len(),
                            bundles.len()
                        );
                    }
                    lines
                        .iter()
                        .zip(&bundles)
                        .map(|(text, bundle)| {
                            Hint::from_text(
                                text.clone(),
                                &inventory,
                                bundle.related.iter().map(|q| q.id.clone()).collect(),
                                HintMode::Full,
                            )
                        })
                        .collect()
                }
                None => {
                    let patterns = pick_patterns(&inventory, &pattern, bundles.len())?;
                    let mode: HintMode = mode.into();
                    bundles
                        .par_iter()
                        .zip(patterns.par_iter())
                        .map(|(b, p)| compose(b, mode, p, "or", &lexicon))
                        .collect::<Result<Vec<_>>>()?
                }
            };
            let mut any = false;
            for (bundle, hint) in bundles.iter().zip(&hint_list) {
                let violations = validator.validate_hint(hint, bundle);
                if violations.is_empty() {
                    writeln!(stdout, "{}\tOK", bundle.id)?;
                } else {
                    any = true;
                    let details: Vec<String> = violations
                        .iter()
                        .map(|v| format!("{}: {}", v.code, v.detail))
                        .collect();
                    writeln!(stdout, "{}\t{}", bundle.id, details.join("; "))?;
                }
            }
            return Ok(!any);
        }
        Command::Score {
            candidates,
            references,
            tsv,
            jsonl,
        } => {
            let cand = read_lines(Some(&candidates))?;
            let refs = read_lines(Some(&references))?;
            if cand.len() != refs.len() {
                bail!(
                    "{} candidates vs {} references; files must be line-aligned",
                    cand.len(),
                    refs.len()
                );
            }
            let pairs: Vec<ScorePair> = cand
                .into_iter()
                .zip(refs)
                .enumerate()
                .map(|(i, (candidate, reference))| ScorePair {
                    id: (i + 1).to_string(),
                    candidate,
                    reference,
                })
                .collect();
            let report = score_corpus(&pairs)?;
            report.write_tsv(&mut stdout)?;
            if let Some(path) = tsv {
                report.write_tsv(std::fs::File::create(path)?)?;
            }
            if let Some(path) = jsonl {
                report.write_jsonl(std::fs::File::create(path)?)?;
            }
        }
        Command::Retrieve { bank, id, k } => {
            if k == 0 || k > 3 {
                bail!("--k must lie in 1..=3");
            }
            let bank = QuestionBank::from_path(&bank)?;
            let query = bank
                .get_by_id(&id)
                .ok_or_else(|| anyhow!("no bank record with id {id:?}"))?;
            for record in retrieve_related(&bank, query, k)? {
                writeln!(
                    stdout,
                    "{}\t{}\t{}\t{}\t{}",
                    record.question.id,
                    record.question.text,
                    record.entity,
                    record.domain,
                    record.topic
                )?;
            }
        }
        Command::Split {
            input,
            out_dir,
            ratios,
            seed,
        } => {
            let parts: Vec<f64> = ratios
                .split(',')
                .map(|p| p.trim().parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .with_context(|| format!("parsing --ratios {ratios:?}"))?;
            if parts.len() != 3 {
                bail!("--ratios needs exactly three comma-separated numbers");
            }
            let spec = SplitSpec::new((parts[0], parts[1], parts[2]), seed)?;
            let bundles = read_records_from_path(&input)?;
            let (train, dev, test) = split_dataset(bundles, &spec)?;
            std::fs::create_dir_all(&out_dir)?;
            for (name, subset) in [("train", &train), ("dev", &dev), ("test", &test)] {
                let path = out_dir.join(format!("{name}.jsonl"));
                write_records(subset, std::fs::File::create(&path)?)?;
            }
            writeln!(stdout, "train={} dev={} test={}", train.len(), dev.len(), test.len())?;
        }
        Command::Emit {
            bundles,
            pretrain,
            with_targets,
            pattern,
        } => {
            let lexicon = load_lexicon()?;
            let bundles = read_records_from_path(&bundles)?;
            if pretrain {
                let inventory = load_inventory()?;
                let pat = inventory.get(pattern.pattern)?.clone();
                emit_pretraining(&bundles, &pat, &lexicon, &mut stdout)?;
            } else {
                emit_seq2seq(&bundles, with_targets, &mut stdout)?;
            }
        }
        Command::Bench {
            bundles,
            min_bundles,
            pattern,
        } => {
            let lexicon = load_lexicon()?;
            let inventory = load_inventory()?;
            let pat = inventory.get(pattern.pattern)?.clone();
            let corpus = read_records_from_path(&bundles)?;
            if corpus.is_empty() {
                bail!("bundle corpus is empty");
            }
            let mut timings_ms: Vec<f64> = Vec::with_capacity(min_bundles);
            // warm up allocator and caches on one pass
            for bundle in corpus.iter().take(50) {
                compose_full(bundle, &pat, "or", &lexicon)?;
            }
            let mut i = 0usize;
            while timings_ms.len() < min_bundles {
                let bundle = &corpus[i % corpus.len()];
                let start = Instant::now();
                let hint = compose_full(bundle, &pat, "or", &lexicon)?;
                let elapsed = start.elapsed().as_secs_f64() * 1e3;
                std::hint::black_box(hint);
                timings_ms.push(elapsed);
                i += 1;
            }
            timings_ms.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let pct = |q: f64| {
                let rank = ((q * timings_ms.len() as f64).ceil() as usize).max(1);
                timings_ms[rank - 1]
            };
            let mean: f64 = timings_ms.iter().sum::<f64>() / timings_ms.len() as f64;
            writeln!(
                stdout,
                "bundles={} mean_ms={:.4} p50_ms={:.4} p95_ms={:.4} p99_ms={:.4} max_ms={:.4}",
                timings_ms.len(),
                mean,
                pct(0.50),
                pct(0.95),
                pct(0.99),
                timings_ms[timings_ms.len() - 1]
            )?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            // a closed stdout (e.g. piping into head) is not an error
            if let Some(io) = e.downcast_ref::<std::io::Error>() {
                if io.kind() == std::io::ErrorKind::BrokenPipe {
                    return ExitCode::SUCCESS;
                }
            }
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
