use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use hintgen::clauser::{question_to_clause, ClauseOptions};
use hintgen::composer::{compose_full, compose_tb, PatternInventory};
use hintgen::lexicon::Lexicon;
use hintgen::metrics::{score_corpus, ScorePair};
use hintgen::qparse::{parse_question, Question};
use hintgen::validate::{Validator, ValidatorConfig};
use hintgen_bench::fixture_bundles;

fn bench_parse(c: &mut Criterion) {
    let lexicon = Lexicon::builtin();
    let q = Question::new("b", "how many children does Cristiano Ronaldo have?").unwrap();
    c.bench_function("parse_question", |b| {
        b.iter(|| parse_question(black_box(&q), &lexicon).unwrap())
    });
}

fn bench_clause(c: &mut Criterion) {
    let lexicon = Lexicon::builtin();
    let opts = ClauseOptions::default();
    let q = Question::new("b", "Did Samuel Adams plan the Boston Tea Party?").unwrap();
    c.bench_function("question_to_clause", |b| {
        b.iter(|| question_to_clause(black_box(&q), &lexicon, &opts).unwrap())
    });
}

fn bench_full_hint(c: &mut Criterion) {
    let lexicon = Lexicon::builtin();
    let inventory = PatternInventory::builtin();
    let pattern = inventory.get(0).unwrap();
    let bundles = fixture_bundles();
    let mut i = 0;
    c.bench_function("compose_full_hint", |b| {
        b.iter(|| {
            let bundle = &bundles[i % bundles.len()];
            i += 1;
            compose_full(black_box(bundle), pattern, "or", &lexicon).unwrap()
        })
    });
}

fn bench_validate(c: &mut Criterion) {
    let lexicon = Lexicon::builtin();
    let inventory = PatternInventory::builtin();
    let pattern = inventory.get(0).unwrap();
    let validator = Validator::new(ValidatorConfig::default());
    let bundles = fixture_bundles();
    let hints: Vec<_> = bundles
        .iter()
        .map(|b| compose_full(b, pattern, "or", &lexicon).unwrap())
        .collect();
    let mut i = 0;
    c.bench_function("validate_hint", |b| {
        b.iter(|| {
            let k = i % bundles.len();
            i += 1;
            validator.validate_hint(black_box(&hints[k]), &bundles[k])
        })
    });
}

fn bench_score(c: &mut Criterion) {
    let inventory = PatternInventory::builtin();
    let pattern = inventory.get(0).unwrap();
    let pairs: Vec<ScorePair> = fixture_bundles()
        .iter()
        .filter_map(|b| {
            b.gold.as_ref().map(|gold| ScorePair {
                id: b.id.clone(),
                candidate: compose_tb(b, pattern).text,
                reference: gold.clone(),
            })
        })
        .collect();
    c.bench_function("score_corpus_60_pairs", |b| {
        b.iter(|| score_corpus(black_box(&pairs)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_parse,
    bench_clause,
    bench_full_hint,
    bench_validate,
    bench_score
);
criterion_main!(benches);
