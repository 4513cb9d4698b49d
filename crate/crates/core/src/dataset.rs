//! Dataset records, deterministic splits and seq2seq emission.
//!
//! Records are line-delimited JSON with the fields
//! `{id, domain, question, related, entity{canonical, aliases,
//! gender_number}, gold?}`. Reading tokenizes every question; writing
//! round-trips to a canonical byte form.

use std::io::{BufRead, Write};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::anaphora::{EntityRef, GenderNumber};
use crate::clauser::{question_to_clause, ClauseOptions};
use crate::composer::{encode_seq2seq_input, HintBundle, StartPattern};
use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::qbank::is_known_domain;
use crate::qparse::Question;

/// On-disk shape of one record.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawRecord {
    id: String,
    domain: String,
    question: String,
    related: Vec<String>,
    entity: RawEntity,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gold: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawEntity {
    canonical: String,
    #[serde(default)]
    aliases: Vec<String>,
    #[serde(default)]
    gender_number: GenderNumber,
}

/// Split ratios plus the shuffle seed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SplitSpec {
    pub ratios: (f64, f64, f64),
    pub seed: u64,
}

impl SplitSpec {
    pub fn new(ratios: (f64, f64, f64), seed: u64) -> Result<Self> {
        let (train, dev, test) = ratios;
        let each_ok = |r: f64| r > 0.0 && r < 1.0;
        if !each_ok(train) || !each_ok(dev) || !each_ok(test) {
            return Err(Error::MalformedRecord {
                line: 0,
                reason: format!("split ratios must lie in (0, 1): {ratios:?}"),
            });
        }
        if (train + dev + test - 1.0).abs() > 1e-9 {
            return Err(Error::MalformedRecord {
                line: 0,
                reason: format!("split ratios must sum to 1.0: {ratios:?}"),
            });
        }
        Ok(Self { ratios, seed })
    }
}

fn bundle_from_raw(raw: RawRecord, line: usize) -> Result<HintBundle> {
    let bad = |reason: String| Error::MalformedRecord { line, reason };
    if raw.related.is_empty() || raw.related.len() > 3 {
        return Err(bad(format!(
            "record {}: expected 1..=3 related questions, got {}",
            raw.id,
            raw.related.len()
        )));
    }
    if !is_known_domain(&raw.domain) {
        return Err(bad(format!("record {}: unknown domain {:?}", raw.id, raw.domain)));
    }
    let q = Question::new(format!("{}.q", raw.id), raw.question)
        .map_err(|e| bad(format!("record {}: {e}", raw.id)))?;
    let related: Vec<Question> = raw
        .related
        .iter()
        .enumerate()
        .map(|(i, text)| {
            Question::new(format!("{}.r{i}", raw.id), text.clone())
                .map_err(|e| bad(format!("record {}: related {i}: {e}", raw.id)))
        })
        .collect::<Result<_>>()?;
    let entity = EntityRef::new(
        raw.entity.canonical,
        raw.entity.aliases,
        raw.entity.gender_number,
        raw.domain.clone(),
    );
    HintBundle::new(raw.id, q, related, entity, raw.gold, raw.domain)
        .map_err(|e| bad(e.to_string()))
}

fn raw_from_bundle(bundle: &HintBundle) -> RawRecord {
    RawRecord {
        id: bundle.id.clone(),
        domain: bundle.domain.clone(),
        question: bundle.q.text.clone(),
        related: bundle.related.iter().map(|q| q.text.clone()).collect(),
        entity: RawEntity {
            canonical: bundle.entity.canonical.clone(),
            aliases: bundle.entity.aliases.clone(),
            gender_number: bundle.entity.gender_number,
        },
        gold: bundle.gold.clone(),
    }
}

/// Reads line-delimited records, rejecting invalid ones with their line
/// number.
pub fn read_records<R: BufRead>(reader: R) -> Result<Vec<HintBundle>> {
    let mut bundles = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let raw: RawRecord = serde_json::from_str(&line).map_err(|e| Error::MalformedRecord {
            line: i + 1,
            reason: e.to_string(),
        })?;
        bundles.push(bundle_from_raw(raw, i + 1)?);
    }
    Ok(bundles)
}

pub fn read_records_from_path(path: &std::path::Path) -> Result<Vec<HintBundle>> {
    let file = std::fs::File::open(path)?;
    read_records(std::io::BufReader::new(file))
}

/// Writes records in canonical form; write(read(x)) is a fixed point.
pub fn write_records<W: Write>(bundles: &[HintBundle], mut w: W) -> Result<()> {
    for bundle in bundles {
        let line = serde_json::to_string(&raw_from_bundle(bundle)).expect("record serializes");
        writeln!(w, "{line}")?;
    }
    Ok(())
}

/// Seeded shuffle followed by a contiguous partition. Sizes are
/// floor(n * ratio) with the remainder assigned to the test split.
pub fn split_dataset(
    bundles: Vec<HintBundle>,
    spec: &SplitSpec,
) -> Result<(Vec<HintBundle>, Vec<HintBundle>, Vec<HintBundle>)> {
    const MIN_RECORDS: usize = 10;
    let n = bundles.len();
    if n < MIN_RECORDS {
        return Err(Error::TooFewRecords {
            got: n,
            need: MIN_RECORDS,
        });
    }
    let mut shuffled = bundles;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    shuffled.shuffle(&mut rng);

    let train_len = (n as f64 * spec.ratios.0).floor() as usize;
    let dev_len = (n as f64 * spec.ratios.1).floor() as usize;
    let test: Vec<HintBundle> = shuffled.split_off(train_len + dev_len);
    let dev: Vec<HintBundle> = shuffled.split_off(train_len);
    Ok((shuffled, dev, test))
}

/// Emits one fine-tuning line per bundle: the `[SEP]`-joined encoder input
/// and, when requested and present, a tab plus the gold hint.
pub fn emit_seq2seq<W: Write>(bundles: &[HintBundle], with_targets: bool, mut w: W) -> Result<()> {
    for bundle in bundles {
        let input = encode_seq2seq_input(bundle);
        match (&bundle.gold, with_targets) {
            (Some(gold), true) => writeln!(w, "{input}\t{gold}")?,
            _ => writeln!(w, "{input}")?,
        }
    }
    Ok(())
}

/// Emits reported-speech pretraining pairs: each related question on its
/// own line as `question<TAB>pattern + clause + "."`.
pub fn emit_pretraining<W: Write>(
    bundles: &[HintBundle],
    pattern: &StartPattern,
    lexicon: &Lexicon,
    mut w: W,
) -> Result<()> {
    let opts = ClauseOptions::default();
    for bundle in bundles {
        for q in &bundle.related {
            let clause = question_to_clause(q, lexicon, &opts)?;
            writeln!(w, "{}\t{} {}.", q.text, pattern.text, clause.text())?;
        }
    }
    Ok(())
}
