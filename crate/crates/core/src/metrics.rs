//! N-gram evaluation: BLEU-1..4, ROUGE-1..4, and corpus-level reports.
//!
//! The metrics tokenizer is deliberately separate from the question
//! tokenizer: it lowercases and strips all punctuation, so metric behavior
//! is isolated from parser decisions. Sentence BLEU uses add-one smoothing
//! on zero-count precisions; corpus BLEU pools n-gram counts and the
//! brevity penalty over all pairs. ROUGE is reported as recall.

use std::collections::HashMap;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Lowercased word tokens with punctuation characters removed.
pub fn metric_tokens(text: &str) -> Vec<String> {
    text.split_whitespace()
        .filter_map(|w| {
            let cleaned: String = w
                .chars()
                .filter(|c| c.is_alphanumeric())
                .flat_map(|c| c.to_lowercase())
                .collect();
            if cleaned.is_empty() {
                None
            } else {
                Some(cleaned)
            }
        })
        .collect()
}

/// Smoothing for sentence-level BLEU.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Smoothing {
    None,
    /// Add 1 to numerator and denominator of zero-count precisions.
    AddOne,
}

fn ngram_counts(tokens: &[String], n: usize) -> HashMap<String, usize> {
    let mut counts = HashMap::new();
    if tokens.len() >= n {
        for window in tokens.windows(n) {
            *counts.entry(window.join(" ")).or_insert(0) += 1;
        }
    }
    counts
}

/// Clipped matches and candidate total for order-k n-grams.
fn clipped_matches(
    candidate: &[String],
    references: &[Vec<String>],
    k: usize,
) -> (usize, usize) {
    let cand = ngram_counts(candidate, k);
    let total: usize = cand.values().sum();
    let refs: Vec<HashMap<String, usize>> =
        references.iter().map(|r| ngram_counts(r, k)).collect();
    let matched = cand
        .iter()
        .map(|(gram, &c)| {
            let clip = refs.iter().filter_map(|r| r.get(gram)).max().copied().unwrap_or(0);
            c.min(clip)
        })
        .sum();
    (matched, total)
}

/// Reference length closest to the candidate length (ties to the shorter).
fn closest_ref_len(cand_len: usize, references: &[Vec<String>]) -> usize {
    references
        .iter()
        .map(|r| r.len())
        .min_by_key(|&len| (len.abs_diff(cand_len), len))
        .unwrap_or(0)
}

fn brevity_penalty(cand_len: usize, ref_len: usize) -> f64 {
    if cand_len >= ref_len {
        1.0
    } else {
        (1.0 - ref_len as f64 / cand_len as f64).exp()
    }
}

fn geometric_mean_bleu(precisions: &[f64], bp: f64) -> f64 {
    if precisions.iter().any(|&p| p <= 0.0) {
        return 0.0;
    }
    let log_sum: f64 = precisions.iter().map(|p| p.ln()).sum();
    bp * (log_sum / precisions.len() as f64).exp()
}

/// BLEU-n: geometric mean of modified k-gram precisions for k = 1..n,
/// times the brevity penalty.
pub fn bleu_n(candidate: &str, references: &[&str], n: usize, smoothing: Smoothing) -> Result<f64> {
    assert!((1..=4).contains(&n), "n must lie in 1..=4");
    let cand = metric_tokens(candidate);
    let refs: Vec<Vec<String>> = references.iter().map(|r| metric_tokens(r)).collect();
    if cand.is_empty() || refs.is_empty() || refs.iter().any(|r| r.is_empty()) {
        return Err(Error::EmptyInput);
    }
    let mut precisions = Vec::with_capacity(n);
    for k in 1..=n {
        let (matched, total) = clipped_matches(&cand, &refs, k);
        let p = match smoothing {
            Smoothing::AddOne if matched == 0 => (matched + 1) as f64 / (total + 1) as f64,
            _ if total == 0 => 0.0,
            _ => matched as f64 / total as f64,
        };
        precisions.push(p);
    }
    let bp = brevity_penalty(cand.len(), closest_ref_len(cand.len(), &refs));
    Ok(geometric_mean_bleu(&precisions, bp))
}

/// ROUGE-n recall: clipped n-gram intersection over reference n-grams.
pub fn rouge_n(candidate: &str, reference: &str, n: usize) -> Result<f64> {
    assert!((1..=4).contains(&n), "n must lie in 1..=4");
    let cand = metric_tokens(candidate);
    let refr = metric_tokens(reference);
    if cand.is_empty() || refr.is_empty() {
        return Err(Error::EmptyInput);
    }
    if refr.len() < n {
        return Err(Error::UndefinedForShortText { n, len: refr.len() });
    }
    let ref_counts = ngram_counts(&refr, n);
    let cand_counts = ngram_counts(&cand, n);
    let matched: usize = ref_counts
        .iter()
        .map(|(gram, &r)| r.min(cand_counts.get(gram).copied().unwrap_or(0)))
        .sum();
    let total: usize = ref_counts.values().sum();
    Ok(matched as f64 / total as f64)
}

/// One candidate/reference pair to score.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScorePair {
    pub id: String,
    pub candidate: String,
    pub reference: String,
}

/// Sentence-level scores for one pair. ROUGE entries are absent when the
/// reference is shorter than n tokens.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairScore {
    pub id: String,
    pub bleu: [f64; 4],
    pub rouge: [Option<f64>; 4],
    /// Reserved for externally computed semantic scores.
    pub semantic: Option<f64>,
}

/// Corpus-level aggregates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusScore {
    /// Pooled n-gram counts with pooled brevity penalty.
    pub bleu: [f64; 4],
    /// Macro-average of defined per-pair recalls.
    pub rouge: [Option<f64>; 4],
    pub semantic: Option<f64>,
}

/// Candidate length bookkeeping (character counts).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusCounts {
    pub pairs: usize,
    pub mean_chars: f64,
    pub stddev_chars: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreReport {
    pub per_pair: Vec<PairScore>,
    pub corpus: CorpusScore,
    pub counts: CorpusCounts,
}

/// Scores a corpus of candidate/reference pairs.
pub fn score_corpus(pairs: &[ScorePair]) -> Result<ScoreReport> {
    if pairs.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut per_pair = Vec::with_capacity(pairs.len());
    let mut pooled_matched = [0usize; 4];
    let mut pooled_total = [0usize; 4];
    let mut pooled_cand_len = 0usize;
    let mut pooled_ref_len = 0usize;

    for pair in pairs {
        let mut bleu = [0.0; 4];
        for (i, b) in bleu.iter_mut().enumerate() {
            *b = bleu_n(&pair.candidate, &[&pair.reference], i + 1, Smoothing::AddOne)?;
        }
        let mut rouge = [None; 4];
        for (i, r) in rouge.iter_mut().enumerate() {
            *r = match rouge_n(&pair.candidate, &pair.reference, i + 1) {
                Ok(v) => Some(v),
                Err(Error::UndefinedForShortText { .. }) => None,
                Err(e) => return Err(e),
            };
        }
        per_pair.push(PairScore {
            id: pair.id.clone(),
            bleu,
            rouge,
            semantic: None,
        });

        let cand = metric_tokens(&pair.candidate);
        let refr = metric_tokens(&pair.reference);
        for k in 1..=4 {
            let (m, t) = clipped_matches(&cand, std::slice::from_ref(&refr), k);
            pooled_matched[k - 1] += m;
            pooled_total[k - 1] += t;
        }
        pooled_cand_len += cand.len();
        pooled_ref_len += refr.len();
    }

    let bp = brevity_penalty(pooled_cand_len, pooled_ref_len);
    let pooled_p: Vec<f64> = (0..4)
        .map(|k| {
            if pooled_total[k] == 0 {
                0.0
            } else {
                pooled_matched[k] as f64 / pooled_total[k] as f64
            }
        })
        .collect();
    let mut corpus_bleu = [0.0; 4];
    for (n, b) in corpus_bleu.iter_mut().enumerate() {
        *b = geometric_mean_bleu(&pooled_p[..=n], bp);
    }

    let mut corpus_rouge = [None; 4];
    for (k, cr) in corpus_rouge.iter_mut().enumerate() {
        let defined: Vec<f64> = per_pair.iter().filter_map(|p| p.rouge[k]).collect();
        if !defined.is_empty() {
            *cr = Some(defined.iter().sum::<f64>() / defined.len() as f64);
        }
    }

    let lens: Vec<f64> = pairs
        .iter()
        .map(|p| p.candidate.chars().count() as f64)
        .collect();
    let mean = lens.iter().sum::<f64>() / lens.len() as f64;
    let variance = lens.iter().map(|l| (l - mean).powi(2)).sum::<f64>() / lens.len() as f64;

    Ok(ScoreReport {
        per_pair,
        corpus: CorpusScore {
            bleu: corpus_bleu,
            rouge: corpus_rouge,
            semantic: None,
        },
        counts: CorpusCounts {
            pairs: pairs.len(),
            mean_chars: mean,
            stddev_chars: variance.sqrt(),
        },
    })
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.6}")).unwrap_or_default()
}

impl ScoreReport {
    /// Tab-separated table: header, one row per pair, a corpus row, and a
    /// counts row. Formatting is fixed so golden comparisons are byte-exact.
    pub fn write_tsv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(
            w,
            "id\tbleu1\tbleu2\tbleu3\tbleu4\trouge1\trouge2\trouge3\trouge4\tsemantic"
        )?;
        for p in &self.per_pair {
            writeln!(
                w,
                "{}\t{:.6}\t{:.6}\t{:.6}\t{:.6}\t{}\t{}\t{}\t{}\t{}",
                p.id,
                p.bleu[0],
                p.bleu[1],
                p.bleu[2],
                p.bleu[3],
                fmt_opt(p.rouge[0]),
                fmt_opt(p.rouge[1]),
                fmt_opt(p.rouge[2]),
                fmt_opt(p.rouge[3]),
                fmt_opt(p.semantic),
            )?;
        }
        writeln!(
            w,
            "corpus\t{:.6}\t{:.6}\t{:.6}\t{:.6}\t{}\t{}\t{}\t{}\t{}",
            self.corpus.bleu[0],
            self.corpus.bleu[1],
            self.corpus.bleu[2],
            self.corpus.bleu[3],
            fmt_opt(self.corpus.rouge[0]),
            fmt_opt(self.corpus.rouge[1]),
            fmt_opt(self.corpus.rouge[2]),
            fmt_opt(self.corpus.rouge[3]),
            fmt_opt(self.corpus.semantic),
        )?;
        writeln!(
            w,
            "counts\tpairs={}\tmean_chars={:.2}\tstddev_chars={:.2}",
            self.counts.pairs, self.counts.mean_chars, self.counts.stddev_chars
        )?;
        Ok(())
    }

    /// Structured emission: one JSON record per pair plus a corpus record.
    pub fn write_jsonl<W: Write>(&self, mut w: W) -> Result<()> {
        for p in &self.per_pair {
            let line = serde_json::to_string(p).expect("pair score serializes");
            writeln!(w, "{line}")?;
        }
        #[derive(Serialize)]
        struct CorpusRecord<'a> {
            id: &'a str,
            corpus: &'a CorpusScore,
            counts: &'a CorpusCounts,
        }
        let line = serde_json::to_string(&CorpusRecord {
            id: "corpus",
            corpus: &self.corpus,
            counts: &self.counts,
        })
        .expect("corpus score serializes");
        writeln!(w, "{line}")?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_scores_one() {
        let h = "you may want to know how much money cristiano ronaldo earns";
        for n in 1..=4 {
            assert_eq!(bleu_n(h, &[h], n, Smoothing::None).unwrap(), 1.0);
            assert_eq!(rouge_n(h, h, n).unwrap(), 1.0);
        }
    }

    #[test]
    fn unigram_precision_hand_count() {
        // 4 of 5 unigrams match; equal lengths, so BP = 1.
        let got = bleu_n("you can ask a b", &["you can ask a c"], 1, Smoothing::None).unwrap();
        assert!((got - 0.8).abs() < 1e-12);
        let got = rouge_n("you can ask a b", "you can ask a c", 1).unwrap();
        assert!((got - 0.8).abs() < 1e-12);
    }

    #[test]
    fn disjoint_texts_score_zero() {
        assert_eq!(
            bleu_n("a b c", &["x y z"], 1, Smoothing::None).unwrap(),
            0.0
        );
        assert_eq!(rouge_n("a b c", "x y z", 1).unwrap(), 0.0);
    }

    #[test]
    fn brevity_penalty_applies_when_candidate_is_short() {
        // p1 = 1, c = 3, r = 6 -> BLEU = exp(1 - 2) = e^-1
        let got = bleu_n("the cat sat", &["the cat sat on the mat"], 1, Smoothing::None).unwrap();
        assert!((got - (-1.0f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn clipping_limits_repeated_ngrams() {
        let got = bleu_n("a a a a", &["a a"], 1, Smoothing::None).unwrap();
        assert!((got - 0.5).abs() < 1e-12);
    }

    #[test]
    fn rouge_is_undefined_for_short_references() {
        assert!(matches!(
            rouge_n("a b c d", "a b c", 4),
            Err(Error::UndefinedForShortText { n: 4, len: 3 })
        ));
    }

    #[test]
    fn add_one_smoothing_only_touches_zero_counts() {
        // p1 = (0+1)/(3+1), p2 = (0+1)/(2+1), BP = 1
        let got = bleu_n("a b c", &["x y z"], 2, Smoothing::AddOne).unwrap();
        let expected = (0.25f64 * (1.0 / 3.0)).sqrt();
        assert!((got - expected).abs() < 1e-12);
        // non-zero counts stay raw
        let got = bleu_n("you can ask a b", &["you can ask a c"], 1, Smoothing::AddOne).unwrap();
        assert!((got - 0.8).abs() < 1e-12);
    }

    #[test]
    fn casing_is_normalized() {
        let a = bleu_n("You CAN Ask", &["you can ask"], 1, Smoothing::None).unwrap();
        assert_eq!(a, 1.0);
        assert_eq!(rouge_n("YOU can ask", "you CAN ask", 2).unwrap(), 1.0);
    }

    #[test]
    fn single_pair_corpus_matches_per_pair_rouge() {
        let pairs = vec![ScorePair {
            id: "1".into(),
            candidate: "you can ask a b".into(),
            reference: "you can ask a c".into(),
        }];
        let report = score_corpus(&pairs).unwrap();
        assert_eq!(report.counts.pairs, 1);
        assert_eq!(report.corpus.rouge, report.per_pair[0].rouge);
    }

    #[test]
    fn identical_corpus_scores_one() {
        let pairs: Vec<ScorePair> = (0..5)
            .map(|i| ScorePair {
                id: format!("{i}"),
                candidate: "you may want to know what horses eat in the winter".into(),
                reference: "you may want to know what horses eat in the winter".into(),
            })
            .collect();
        let report = score_corpus(&pairs).unwrap();
        for n in 0..4 {
            assert_eq!(report.corpus.bleu[n], 1.0);
            assert_eq!(report.corpus.rouge[n], Some(1.0));
            for p in &report.per_pair {
                assert_eq!(p.bleu[n], 1.0);
            }
        }
        assert_eq!(report.counts.stddev_chars, 0.0);
    }

    #[test]
    fn empty_corpus_is_an_error() {
        assert!(matches!(score_corpus(&[]), Err(Error::EmptyCorpus)));
    }

    proptest! {
        #[test]
        fn corpus_scores_are_permutation_invariant(seed in 0u64..1000) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut pairs: Vec<ScorePair> = (0..6)
                .map(|i| ScorePair {
                    id: format!("{i}"),
                    candidate: format!("the quick brown fox number {i} jumps over the lazy dog"),
                    reference: format!("a quick brown fox number {i} jumped over a sleepy dog"),
                })
                .collect();
            let before = score_corpus(&pairs).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            pairs.shuffle(&mut rng);
            let after = score_corpus(&pairs).unwrap();
            for k in 0..4 {
                prop_assert!((before.corpus.bleu[k] - after.corpus.bleu[k]).abs() < 1e-12);
                let (a, b) = (before.corpus.rouge[k], after.corpus.rouge[k]);
                prop_assert_eq!(a.is_some(), b.is_some());
                if let (Some(a), Some(b)) = (a, b) {
                    prop_assert!((a - b).abs() < 1e-12);
                }
            }
            prop_assert_eq!(before.counts.pairs, after.counts.pairs);
            prop_assert!((before.counts.mean_chars - after.counts.mean_chars).abs() < 1e-9);
            prop_assert!((before.counts.stddev_chars - after.counts.stddev_chars).abs() < 1e-9);
        }

        #[test]
        fn appending_reference_ngram_never_decreases_rouge(
            cand in proptest::collection::vec("[ab]{1,3}", 4..10),
            refr in proptest::collection::vec("[ab]{1,3}", 4..10),
            n in 1usize..=2,
        ) {
            let reference = refr.join(" ");
            let base = rouge_n(&cand.join(" "), &reference, n).unwrap();
            // extend the candidate with the reference's first n tokens
            let mut extended = cand.clone();
            extended.extend(refr.iter().take(n).cloned());
            let more = rouge_n(&extended.join(" "), &reference, n).unwrap();
            prop_assert!(more >= base - 1e-12);
        }

        #[test]
        fn bleu1_equals_unigram_precision_for_equal_lengths(
            cand in proptest::collection::vec("[abc]", 3..8),
        ) {
            // reference = same length, all "a"
            let reference = vec!["a".to_string(); cand.len()].join(" ");
            let candidate = cand.join(" ");
            let got = bleu_n(&candidate, &[&reference], 1, Smoothing::None).unwrap();
            let a_count = cand.iter().filter(|t| t.as_str() == "a").count();
            let clip = a_count.min(cand.len());
            let expected = clip as f64 / cand.len() as f64;
            prop_assert!((got - expected).abs() < 1e-12);
        }
    }
}
