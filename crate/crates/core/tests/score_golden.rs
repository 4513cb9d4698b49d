//! Corpus scoring pinned two ways: against a naive test-local oracle
//! (independent implementation of the same metric definitions) and
//! against a frozen golden report file, byte-exact.
//!
//! Regenerate the golden after an intentional format change with
//! `HINTGEN_UPDATE_GOLDENS=1 cargo test -p hintgen --test score_golden`.

use std::collections::BTreeMap;
use std::path::PathBuf;

use hintgen::composer::{compose_tb, PatternInventory};
use hintgen::dataset::read_records_from_path;
use hintgen::metrics::{score_corpus, ScorePair};

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn tb_vs_gold_pairs() -> Vec<ScorePair> {
    let bundles = read_records_from_path(&fixtures().join("bundles.jsonl")).unwrap();
    let inventory = PatternInventory::builtin();
    let pattern = inventory.get(0).unwrap();
    bundles
        .iter()
        .take(20)
        .map(|b| ScorePair {
            id: b.id.clone(),
            candidate: compose_tb(b, pattern).text,
            reference: b.gold.clone().expect("fixture bundles carry gold hints"),
        })
        .collect()
}

// ---- independent oracle ------------------------------------------------

fn oracle_tokens(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    for word in text.split_whitespace() {
        let mut cleaned = String::new();
        for c in word.chars() {
            if c.is_alphanumeric() {
                for lower in c.to_lowercase() {
                    cleaned.push(lower);
                }
            }
        }
        if !cleaned.is_empty() {
            tokens.push(cleaned);
        }
    }
    tokens
}

fn oracle_ngrams(tokens: &[String], n: usize) -> BTreeMap<String, usize> {
    let mut grams = BTreeMap::new();
    if tokens.len() < n {
        return grams;
    }
    for start in 0..=tokens.len() - n {
        let gram = tokens[start..start + n].join("\u{1f}");
        *grams.entry(gram).or_insert(0) += 1;
    }
    grams
}

fn oracle_overlap(cand: &BTreeMap<String, usize>, refr: &BTreeMap<String, usize>) -> usize {
    let mut matched = 0;
    for (gram, c) in cand {
        if let Some(r) = refr.get(gram) {
            matched += (*c).min(*r);
        }
    }
    matched
}

fn oracle_sentence_bleu(candidate: &str, reference: &str, n: usize) -> f64 {
    let cand = oracle_tokens(candidate);
    let refr = oracle_tokens(reference);
    let mut product = 1.0f64;
    for k in 1..=n {
        let cand_grams = oracle_ngrams(&cand, k);
        let total: usize = cand_grams.values().sum();
        let matched = oracle_overlap(&cand_grams, &oracle_ngrams(&refr, k));
        let p = if matched == 0 {
            (matched as f64 + 1.0) / (total as f64 + 1.0)
        } else {
            matched as f64 / total as f64
        };
        if p == 0.0 {
            return 0.0;
        }
        product *= p;
    }
    let bp = if cand.len() < refr.len() {
        (1.0 - refr.len() as f64 / cand.len() as f64).exp()
    } else {
        1.0
    };
    bp * product.powf(1.0 / n as f64)
}

fn oracle_rouge(candidate: &str, reference: &str, n: usize) -> Option<f64> {
    let cand = oracle_tokens(candidate);
    let refr = oracle_tokens(reference);
    if refr.len() < n {
        return None;
    }
    let ref_grams = oracle_ngrams(&refr, n);
    let total: usize = ref_grams.values().sum();
    let matched = oracle_overlap(&oracle_ngrams(&cand, n), &ref_grams);
    Some(matched as f64 / total as f64)
}

fn oracle_corpus_bleu(pairs: &[ScorePair], n: usize) -> f64 {
    let mut matched = vec![0usize; n];
    let mut totals = vec![0usize; n];
    let mut cand_len = 0usize;
    let mut ref_len = 0usize;
    for pair in pairs {
        let cand = oracle_tokens(&pair.candidate);
        let refr = oracle_tokens(&pair.reference);
        for k in 1..=n {
            let cand_grams = oracle_ngrams(&cand, k);
            totals[k - 1] += cand_grams.values().sum::<usize>();
            matched[k - 1] += oracle_overlap(&cand_grams, &oracle_ngrams(&refr, k));
        }
        cand_len += cand.len();
        ref_len += refr.len();
    }
    let mut product = 1.0f64;
    for k in 0..n {
        if totals[k] == 0 || matched[k] == 0 {
            return 0.0;
        }
        product *= matched[k] as f64 / totals[k] as f64;
    }
    let bp = if cand_len < ref_len {
        (1.0 - ref_len as f64 / cand_len as f64).exp()
    } else {
        1.0
    };
    bp * product.powf(1.0 / n as f64)
}

// ---- tests ---------------------------------------------------------------

#[test]
fn report_agrees_with_independent_oracle() {
    let pairs = tb_vs_gold_pairs();
    let report = score_corpus(&pairs).unwrap();
    let tol = 1e-12;

    for (pair, scored) in pairs.iter().zip(&report.per_pair) {
        for n in 1..=4 {
            let expected = oracle_sentence_bleu(&pair.candidate, &pair.reference, n);
            assert!(
                (scored.bleu[n - 1] - expected).abs() < tol,
                "{} bleu{n}: {} vs oracle {expected}",
                pair.id,
                scored.bleu[n - 1]
            );
            let expected = oracle_rouge(&pair.candidate, &pair.reference, n);
            match (scored.rouge[n - 1], expected) {
                (Some(got), Some(want)) => assert!(
                    (got - want).abs() < tol,
                    "{} rouge{n}: {got} vs oracle {want}",
                    pair.id
                ),
                (got, want) => assert_eq!(got.is_some(), want.is_some()),
            }
        }
    }

    for n in 1..=4 {
        let expected = oracle_corpus_bleu(&pairs, n);
        assert!(
            (report.corpus.bleu[n - 1] - expected).abs() < tol,
            "corpus bleu{n}: {} vs oracle {expected}",
            report.corpus.bleu[n - 1]
        );
        let defined: Vec<f64> = pairs
            .iter()
            .filter_map(|p| oracle_rouge(&p.candidate, &p.reference, n))
            .collect();
        let expected = defined.iter().sum::<f64>() / defined.len() as f64;
        assert!((report.corpus.rouge[n - 1].unwrap() - expected).abs() < tol);
    }

    let lens: Vec<f64> = pairs
        .iter()
        .map(|p| p.candidate.chars().count() as f64)
        .collect();
    let mean = lens.iter().sum::<f64>() / lens.len() as f64;
    let var = lens.iter().map(|l| (l - mean) * (l - mean)).sum::<f64>() / lens.len() as f64;
    assert!((report.counts.mean_chars - mean).abs() < tol);
    assert!((report.counts.stddev_chars - var.sqrt()).abs() < 1e-9);
}

#[test]
fn report_matches_frozen_golden_bytes() {
    let pairs = tb_vs_gold_pairs();
    let report = score_corpus(&pairs).unwrap();
    let mut bytes = Vec::new();
    report.write_tsv(&mut bytes).unwrap();

    let golden_path = fixtures().join("golden/score_tb_vs_gold.tsv");
    if std::env::var_os("HINTGEN_UPDATE_GOLDENS").is_some() {
        std::fs::write(&golden_path, &bytes).unwrap();
        panic!("golden regenerated at {}; rerun without HINTGEN_UPDATE_GOLDENS", golden_path.display());
    }
    let golden = std::fs::read(&golden_path)
        .expect("golden score report present (regenerate with HINTGEN_UPDATE_GOLDENS=1)");
    assert_eq!(
        bytes, golden,
        "score report bytes diverge from the frozen golden"
    );
}
