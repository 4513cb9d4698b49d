//! Mechanical hint validation and the automated question-coverage proxy.
//!
//! Violations are data, not errors: a hint that fails a check yields a
//! populated violation list, never an `Err`.

use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::composer::{Hint, HintBundle, HintMode, PatternInventory};
use crate::error::{Error, Result};
use crate::lexicon::{is_wh_word, Lexicon, Stopwords};
use crate::metrics::metric_tokens;
use crate::qparse::Question;

/// Thresholds and switches for `validate_hint`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidatorConfig {
    /// Minimum hint length in characters.
    pub min_chars: usize,
    /// Maximum hint length as a factor of the summed related-question
    /// length in characters.
    pub max_chars_factor: f64,
    /// Optional absolute word-count bounds (disabled when absent).
    pub min_words: Option<usize>,
    pub max_words: Option<usize>,
    /// Minimum TF-cosine similarity between the hint and its questions.
    pub similarity_threshold: f64,
    /// Per-question content-word recall needed to count as covered.
    pub coverage_recall_threshold: f64,
    pub require_pattern: bool,
    pub require_entity: bool,
    pub require_anaphora: bool,
}

impl Default for ValidatorConfig {
    fn default() -> Self {
        Self {
            min_chars: 70,
            max_chars_factor: 1.25,
            min_words: None,
            max_words: None,
            similarity_threshold: 0.35,
            coverage_recall_threshold: 0.6,
            require_pattern: true,
            require_entity: true,
            require_anaphora: true,
        }
    }
}

impl ValidatorConfig {
    /// Reads a `key=value` file mirroring the config fields. Unknown keys
    /// are rejected; omitted keys keep their defaults.
    pub fn from_path(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn parse(text: &str) -> Result<Self> {
        fn parse_val<T: std::str::FromStr>(key: &str, value: &str, line: usize) -> Result<T> {
            value.parse().map_err(|_| Error::BadResource {
                name: "validator config".into(),
                line,
                reason: format!("bad value for {key}: {value:?}"),
            })
        }
        let mut cfg = Self::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |reason: String| Error::BadResource {
                name: "validator config".into(),
                line: i + 1,
                reason,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad("expected key=value".into()))?;
            let (key, value) = (key.trim(), value.trim());
            let ln = i + 1;
            match key {
                "min_chars" => cfg.min_chars = parse_val(key, value, ln)?,
                "max_chars_factor" => cfg.max_chars_factor = parse_val(key, value, ln)?,
                "min_words" => cfg.min_words = Some(parse_val(key, value, ln)?),
                "max_words" => cfg.max_words = Some(parse_val(key, value, ln)?),
                "similarity_threshold" => cfg.similarity_threshold = parse_val(key, value, ln)?,
                "coverage_recall_threshold" => {
                    cfg.coverage_recall_threshold = parse_val(key, value, ln)?
                }
                "require_pattern" => cfg.require_pattern = parse_val(key, value, ln)?,
                "require_entity" => cfg.require_entity = parse_val(key, value, ln)?,
                "require_anaphora" => cfg.require_anaphora = parse_val(key, value, ln)?,
                other => return Err(bad(format!("unknown key {other:?}"))),
            }
        }
        if !(0.0..=1.0).contains(&cfg.similarity_threshold)
            || !(0.0..=1.0).contains(&cfg.coverage_recall_threshold)
        {
            return Err(Error::BadResource {
                name: "validator config".into(),
                line: 0,
                reason: "thresholds must lie in [0, 1]".into(),
            });
        }
        Ok(cfg)
    }
}

/// Why a hint failed a check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ViolationCode {
    MinLength,
    MaxLength,
    NoStartPattern,
    NoEntity,
    NoAnaphora,
    LowSimilarity,
    MissingQuestion(String),
    NotEnglishChars,
}

impl std::fmt::Display for ViolationCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ViolationCode::MissingQuestion(id) => write!(f, "MissingQuestion({id})"),
            other => write!(f, "{other:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub code: ViolationCode,
    pub detail: String,
}

/// Per-question coverage result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Coverage {
    pub id: String,
    pub covered: bool,
    pub recall: f64,
}

/// TF-cosine similarity over lowercased word tokens.
/// Symmetric, bounded in [0, 1], and 1 iff the TF vectors are parallel.
pub fn similarity(a: &str, b: &str) -> Result<f64> {
    let ta = metric_tokens(a);
    let tb = metric_tokens(b);
    if ta.is_empty() || tb.is_empty() {
        return Err(Error::EmptyInput);
    }
    fn count(tokens: &[String]) -> std::collections::HashMap<&str, f64> {
        let mut m = std::collections::HashMap::new();
        for t in tokens {
            *m.entry(t.as_str()).or_default() += 1.0;
        }
        m
    }
    let ca = count(&ta);
    let cb = count(&tb);
    let dot: f64 = ca
        .iter()
        .filter_map(|(k, v)| cb.get(k).map(|w| v * w))
        .sum();
    if dot == 0.0 {
        return Ok(0.0); // avoids the empty sum's negative zero
    }
    let na: f64 = ca.values().map(|v| v * v).sum::<f64>().sqrt();
    let nb: f64 = cb.values().map(|v| v * v).sum::<f64>().sqrt();
    Ok(dot / (na * nb))
}

/// Shared context for the validator checks.
pub struct Validator {
    pub cfg: ValidatorConfig,
    inventory: PatternInventory,
    stopwords: Stopwords,
    lexicon: Lexicon,
}

/// Pronouns that signal anaphora when they appear after the first clause.
const ANAPHORA_MARKERS: [&str; 12] = [
    "he", "she", "it", "they", "his", "her", "its", "their", "him", "them", "you", "your",
];

impl Validator {
    pub fn new(cfg: ValidatorConfig) -> Self {
        Self {
            cfg,
            inventory: PatternInventory::builtin(),
            stopwords: Stopwords::builtin(),
            lexicon: Lexicon::builtin(),
        }
    }

    pub fn with_resources(
        cfg: ValidatorConfig,
        inventory: PatternInventory,
        stopwords: Stopwords,
        lexicon: Lexicon,
    ) -> Self {
        Self {
            cfg,
            inventory,
            stopwords,
            lexicon,
        }
    }

    /// Content words of a question: metric tokens minus stopwords,
    /// wh-words and auxiliaries. Distinct-word (set) semantics.
    fn content_words(&self, text: &str) -> HashSet<String> {
        metric_tokens(text)
            .into_iter()
            .filter(|t| {
                !self.stopwords.contains(t) && !is_wh_word(t) && !self.lexicon.is_aux(t)
            })
            .collect()
    }

    /// Per-question content-word recall against the hint text. A content
    /// word that belongs to the entity counts as present when the hint
    /// carries the entity verbatim or as a pronoun.
    pub fn coverage_check(
        &self,
        hint: &Hint,
        related: &[Question],
        entity: Option<&crate::anaphora::EntityRef>,
    ) -> Vec<Coverage> {
        let hint_words: HashSet<String> = metric_tokens(&hint.text).into_iter().collect();
        let entity_tokens: HashSet<String> = entity
            .map(|e| {
                e.aliases
                    .iter()
                    .flat_map(|a| metric_tokens(a))
                    .collect()
            })
            .unwrap_or_default();
        let pronouns: Vec<&str> = entity
            .map(|e| {
                let g = e.gender_number;
                vec![
                    g.subject_pronoun(),
                    g.object_pronoun(),
                    g.possessive(),
                    "you",
                    "your",
                ]
            })
            .unwrap_or_default();
        let pronoun_in_hint = pronouns.iter().any(|p| hint_words.contains(*p));

        let strip_possessive = |w: &str| -> String {
            w.strip_suffix("s").unwrap_or(w).to_string()
        };

        related
            .iter()
            .map(|q| {
                let content = self.content_words(&q.text);
                if content.is_empty() {
                    return Coverage {
                        id: q.id.clone(),
                        covered: true,
                        recall: 1.0,
                    };
                }
                let present = content
                    .iter()
                    .filter(|w| {
                        if hint_words.contains(*w) {
                            return true;
                        }
                        // Entity word replaced by a pronoun still counts.
                        let is_entity_word = entity_tokens.contains(*w)
                            || entity_tokens.contains(&strip_possessive(w));
                        is_entity_word && pronoun_in_hint
                    })
                    .count();
                let recall = present as f64 / content.len() as f64;
                Coverage {
                    id: q.id.clone(),
                    covered: recall >= self.cfg.coverage_recall_threshold,
                    recall,
                }
            })
            .collect()
    }

    /// Runs every enabled check; an empty list means the hint passes.
    pub fn validate_hint(&self, hint: &Hint, bundle: &HintBundle) -> Vec<Violation> {
        let cfg = &self.cfg;
        let mut violations = Vec::new();

        if hint.char_len < cfg.min_chars {
            violations.push(Violation {
                code: ViolationCode::MinLength,
                detail: format!("{} chars < minimum {}", hint.char_len, cfg.min_chars),
            });
        }
        let input_chars: usize = bundle.related.iter().map(|q| q.text.chars().count()).sum();
        let max_chars = cfg.max_chars_factor * input_chars as f64;
        if hint.char_len as f64 > max_chars {
            violations.push(Violation {
                code: ViolationCode::MaxLength,
                detail: format!(
                    "{} chars > {:.1} ({} input chars x {})",
                    hint.char_len, max_chars, input_chars, cfg.max_chars_factor
                ),
            });
        }
        if let Some(min_words) = cfg.min_words {
            if hint.word_len < min_words {
                violations.push(Violation {
                    code: ViolationCode::MinLength,
                    detail: format!("{} words < minimum {}", hint.word_len, min_words),
                });
            }
        }
        if let Some(max_words) = cfg.max_words {
            if hint.word_len > max_words {
                violations.push(Violation {
                    code: ViolationCode::MaxLength,
                    detail: format!("{} words > maximum {}", hint.word_len, max_words),
                });
            }
        }

        if cfg.require_pattern
            && !self.inventory.iter().any(|p| hint.text.starts_with(&p.text))
        {
            violations.push(Violation {
                code: ViolationCode::NoStartPattern,
                detail: "hint does not open with a known start pattern".into(),
            });
        }

        if cfg.require_entity {
            let lower = hint.text.to_lowercase();
            let found = bundle
                .entity
                .aliases
                .iter()
                .any(|a| !a.trim().is_empty() && lower.contains(&a.to_lowercase()));
            if !found {
                violations.push(Violation {
                    code: ViolationCode::NoEntity,
                    detail: format!("no alias of {:?} in hint", bundle.entity.canonical),
                });
            }
        }

        // Anaphora is only promised by full-pipeline hints over bundles
        // that mention the entity at least twice.
        if cfg.require_anaphora
            && hint.mode == HintMode::Full
            && bundle.related.len() >= 2
            && self.input_mention_count(bundle) >= 2
            && !self.has_anaphora_after_first_clause(hint)
        {
            violations.push(Violation {
                code: ViolationCode::NoAnaphora,
                detail: "no pronoun after the first clause".into(),
            });
        }

        let joined: String = bundle
            .related
            .iter()
            .map(|q| q.text.as_str())
            .collect::<Vec<_>>()
            .join(" ");
        if let Ok(sim) = similarity(&hint.text, &joined) {
            if sim < cfg.similarity_threshold {
                violations.push(Violation {
                    code: ViolationCode::LowSimilarity,
                    detail: format!("similarity {sim:.3} < {}", cfg.similarity_threshold),
                });
            }
        }

        for cov in self.coverage_check(hint, &bundle.related, Some(&bundle.entity)) {
            if !cov.covered {
                violations.push(Violation {
                    code: ViolationCode::MissingQuestion(cov.id.clone()),
                    detail: format!("recall {:.3} < {}", cov.recall, cfg.coverage_recall_threshold),
                });
            }
        }

        let alphabetic: Vec<char> = hint.text.chars().filter(|c| c.is_alphabetic()).collect();
        if !alphabetic.is_empty() {
            let ascii = alphabetic.iter().filter(|c| c.is_ascii_alphabetic()).count();
            let ratio = ascii as f64 / alphabetic.len() as f64;
            if ratio < 0.9 {
                violations.push(Violation {
                    code: ViolationCode::NotEnglishChars,
                    detail: format!("ASCII-letter ratio {ratio:.2} < 0.90"),
                });
            }
        }

        violations
    }

    fn input_mention_count(&self, bundle: &HintBundle) -> usize {
        let mut count = 0;
        for q in &bundle.related {
            let lower = q.text.to_lowercase();
            if bundle
                .entity
                .aliases
                .iter()
                .any(|a| !a.trim().is_empty() && lower.contains(&a.to_lowercase()))
            {
                count += 1;
            }
        }
        count
    }

    fn has_anaphora_after_first_clause(&self, hint: &Hint) -> bool {
        let after_first = match hint.text.find(',') {
            Some(i) => &hint.text[i + 1..],
            None => return false,
        };
        metric_tokens(after_first)
            .iter()
            .any(|t| ANAPHORA_MARKERS.contains(&t.as_str()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anaphora::{EntityRef, GenderNumber};
    use crate::composer::{compose_full, compose_rsb, compose_tb, PatternInventory};

    fn ronaldo_bundle() -> HintBundle {
        let q = Question::new("b1.q", "Who is Cristiano Ronaldo?").unwrap();
        let related = vec![
            Question::new("b1.r0", "how much money does Cristiano Ronaldo earn?").unwrap(),
            Question::new("b1.r1", "how many children does Cristiano Ronaldo have?").unwrap(),
            Question::new("b1.r2", "who is the mother of Cristiano Ronaldos child?").unwrap(),
        ];
        let entity = EntityRef::new(
            "Cristiano Ronaldo",
            vec!["Cristiano Ronaldo".into(), "Ronaldo".into()],
            GenderNumber::Masculine,
            "Athlete",
        );
        HintBundle::new("b1", q, related, entity, None, "Athlete").unwrap()
    }

    #[test]
    fn full_pipeline_hint_passes_default_validation() {
        let bundle = ronaldo_bundle();
        let inv = PatternInventory::builtin();
        let lex = Lexicon::builtin();
        let validator = Validator::new(ValidatorConfig::default());
        for hint in [
            compose_tb(&bundle, inv.get(0).unwrap()),
            compose_rsb(&bundle, inv.get(0).unwrap(), &lex).unwrap(),
            compose_full(&bundle, inv.get(0).unwrap(), "or", &lex).unwrap(),
        ] {
            let violations = validator.validate_hint(&hint, &bundle);
            assert!(violations.is_empty(), "{:?}: {violations:?}", hint.mode);
        }
    }

    #[test]
    fn short_hint_trips_min_length() {
        let bundle = ronaldo_bundle();
        let inv = PatternInventory::builtin();
        let mut hint = compose_tb(&bundle, inv.get(0).unwrap());
        hint.text.truncate(50);
        hint.char_len = hint.text.chars().count();
        hint.word_len = hint.text.split_whitespace().count();
        let validator = Validator::new(ValidatorConfig::default());
        let violations = validator.validate_hint(&hint, &bundle);
        assert!(violations.iter().any(|v| v.code == ViolationCode::MinLength));
    }

    #[test]
    fn deleting_entity_trips_no_entity() {
        let bundle = ronaldo_bundle();
        let inv = PatternInventory::builtin();
        let lex = Lexicon::builtin();
        let mut hint = compose_full(&bundle, inv.get(0).unwrap(), "or", &lex).unwrap();
        hint.text = hint.text.replace("Cristiano Ronaldo", "the player");
        hint.char_len = hint.text.chars().count();
        let validator = Validator::new(ValidatorConfig::default());
        let violations = validator.validate_hint(&hint, &bundle);
        assert!(violations.iter().any(|v| v.code == ViolationCode::NoEntity));
    }

    #[test]
    fn full_hint_without_pronouns_trips_no_anaphora() {
        let bundle = ronaldo_bundle();
        let inv = PatternInventory::builtin();
        let lex = Lexicon::builtin();
        // An RSB text labeled as FULL simulates a pipeline that skipped
        // the anaphora stage.
        let rsb = compose_rsb(&bundle, inv.get(0).unwrap(), &lex).unwrap();
        let mut fake_full = rsb.clone();
        fake_full.mode = HintMode::Full;
        let validator = Validator::new(ValidatorConfig::default());
        let violations = validator.validate_hint(&fake_full, &bundle);
        assert!(violations.iter().any(|v| v.code == ViolationCode::NoAnaphora));
        // The genuine RSB hint is exempt from the anaphora requirement.
        assert!(validator.validate_hint(&rsb, &bundle).is_empty());
    }

    #[test]
    fn oversized_hint_trips_max_length() {
        let bundle = ronaldo_bundle();
        let inv = PatternInventory::builtin();
        let mut hint = compose_tb(&bundle, inv.get(0).unwrap());
        let padding = " with many extra trailing words".repeat(8);
        hint.text = format!("{}{}", hint.text, padding);
        hint.char_len = hint.text.chars().count();
        hint.word_len = hint.text.split_whitespace().count();
        let validator = Validator::new(ValidatorConfig::default());
        let violations = validator.validate_hint(&hint, &bundle);
        assert!(violations.iter().any(|v| v.code == ViolationCode::MaxLength));
    }

    #[test]
    fn word_bounds_report_through_length_codes() {
        let bundle = ronaldo_bundle();
        let inv = PatternInventory::builtin();
        let hint = compose_tb(&bundle, inv.get(0).unwrap());
        let strict_words = Validator::new(ValidatorConfig {
            min_words: Some(500),
            ..ValidatorConfig::default()
        });
        let violations = strict_words.validate_hint(&hint, &bundle);
        assert!(violations.iter().any(|v| v.code == ViolationCode::MinLength
            && v.detail.contains("words")));
        let tight_words = Validator::new(ValidatorConfig {
            max_words: Some(3),
            ..ValidatorConfig::default()
        });
        let violations = tight_words.validate_hint(&hint, &bundle);
        assert!(violations.iter().any(|v| v.code == ViolationCode::MaxLength
            && v.detail.contains("words")));
    }

    #[test]
    fn unknown_opening_trips_no_start_pattern() {
        let bundle = ronaldo_bundle();
        let inv = PatternInventory::builtin();
        let mut hint = compose_tb(&bundle, inv.get(0).unwrap());
        hint.text = hint.text.replace("You may want to know", "Here is a thing about");
        let validator = Validator::new(ValidatorConfig::default());
        let violations = validator.validate_hint(&hint, &bundle);
        assert!(violations
            .iter()
            .any(|v| v.code == ViolationCode::NoStartPattern));
    }

    #[test]
    fn off_topic_hint_trips_low_similarity() {
        let bundle = ronaldo_bundle();
        let inv = PatternInventory::builtin();
        let mut hint = compose_tb(&bundle, inv.get(0).unwrap());
        hint.text = format!(
            "{} whether Cristiano Ronaldo likes rainy Tuesday afternoons in quiet little \
             mountain villages near cold northern lakes full of sleepy grey fish",
            hint.pattern.text
        );
        hint.char_len = hint.text.chars().count();
        hint.word_len = hint.text.split_whitespace().count();
        let validator = Validator::new(ValidatorConfig::default());
        let violations = validator.validate_hint(&hint, &bundle);
        assert!(
            violations
                .iter()
                .any(|v| v.code == ViolationCode::LowSimilarity),
            "{violations:?}"
        );
    }

    #[test]
    fn non_ascii_text_trips_language_check() {
        let bundle = ronaldo_bundle();
        let inv = PatternInventory::builtin();
        let mut hint = compose_tb(&bundle, inv.get(0).unwrap());
        hint.text = format!("{} Это подсказка на русском языке про Криштиану Роналду и его детей", hint.pattern.text);
        hint.char_len = hint.text.chars().count();
        let validator = Validator::new(ValidatorConfig::default());
        let violations = validator.validate_hint(&hint, &bundle);
        assert!(violations.iter().any(|v| v.code == ViolationCode::NotEnglishChars));
    }

    #[test]
    fn omitted_question_is_reported_missing() {
        let bundle = ronaldo_bundle();
        let inv = PatternInventory::builtin();
        let lex = Lexicon::builtin();
        // compose from only the first two questions, validate against all three
        let mut small = bundle.clone();
        small.related.truncate(2);
        let hint = compose_full(&small, inv.get(0).unwrap(), "or", &lex).unwrap();
        let validator = Validator::new(ValidatorConfig::default());
        let violations = validator.validate_hint(&hint, &bundle);
        assert!(violations
            .iter()
            .any(|v| v.code == ViolationCode::MissingQuestion("b1.r2".into())));
    }

    #[test]
    fn similarity_identity_and_orthogonality() {
        assert!((similarity("a b c", "a b c").unwrap() - 1.0).abs() < 1e-12);
        assert!((similarity("a b c", "x y z").unwrap() - 0.0).abs() < 1e-12);
        let got = similarity("a b c", "a b d").unwrap();
        assert!((got - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn similarity_rejects_empty() {
        assert!(matches!(similarity("", "a"), Err(Error::EmptyInput)));
        assert!(matches!(similarity("?!", "a"), Err(Error::EmptyInput)));
    }

    #[test]
    fn config_file_round_trip() {
        let cfg = ValidatorConfig::parse(
            "min_chars=50\nmax_chars_factor=2.0\nrequire_anaphora=false\n",
        )
        .unwrap();
        assert_eq!(cfg.min_chars, 50);
        assert_eq!(cfg.max_chars_factor, 2.0);
        assert!(!cfg.require_anaphora);
        assert!(cfg.require_pattern);
        assert!(ValidatorConfig::parse("nope=1").is_err());
        assert!(ValidatorConfig::parse("similarity_threshold=1.5").is_err());
    }

    proptest::proptest! {
        #[test]
        fn similarity_is_symmetric_and_bounded(
            a in proptest::collection::vec("[abcd]{1,4}", 1..10),
            b in proptest::collection::vec("[abcd]{1,4}", 1..10),
        ) {
            let (a, b) = (a.join(" "), b.join(" "));
            let ab = similarity(&a, &b).unwrap();
            let ba = similarity(&b, &a).unwrap();
            proptest::prop_assert!((ab - ba).abs() < 1e-12);
            proptest::prop_assert!((0.0..=1.0 + 1e-12).contains(&ab));
            // parallel TF vectors score exactly 1
            let doubled = format!("{a} {a}");
            let self_sim = similarity(&a, &doubled).unwrap();
            proptest::prop_assert!((self_sim - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn loosening_thresholds_never_adds_violations() {
        let bundle = ronaldo_bundle();
        let inv = PatternInventory::builtin();
        let strict = Validator::new(ValidatorConfig {
            min_chars: 400,
            max_chars_factor: 0.5,
            similarity_threshold: 0.99,
            coverage_recall_threshold: 0.99,
            ..ValidatorConfig::default()
        });
        let loose = Validator::new(ValidatorConfig::default());
        let hint = compose_tb(&bundle, inv.get(0).unwrap());
        let strict_codes: Vec<_> = strict
            .validate_hint(&hint, &bundle)
            .into_iter()
            .map(|v| v.code)
            .collect();
        let loose_codes: Vec<_> = loose
            .validate_hint(&hint, &bundle)
            .into_iter()
            .map(|v| v.code)
            .collect();
        for code in &loose_codes {
            assert!(strict_codes.contains(code), "loosening added {code:?}");
        }
        assert!(loose_codes.is_empty());
    }
}
