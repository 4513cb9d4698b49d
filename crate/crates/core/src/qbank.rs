//! Question bank: (question, entity, domain, topic) records with
//! topic assignment and related-question retrieval.
//!
//! Retrieval returns questions about the same entity covering different
//! topics, one per topic, ranked by how frequent each topic is in the
//! whole bank. Entity identity is always explicit in the records; the
//! module never guesses it.

use std::collections::HashMap;
use std::io::BufRead;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lexicon::Stopwords;
use crate::qparse::Question;

/// The closed set of domains a bank record may carry.
pub const DOMAINS: [&str; 9] = [
    "Animal",
    "Athlete",
    "Food",
    "Holiday",
    "Place",
    "Politician",
    "Technology",
    "Wearables",
    "Video Game",
];

pub fn is_known_domain(domain: &str) -> bool {
    DOMAINS.contains(&domain)
}

/// A predicate-style topic label ("birth place") with its bank frequency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopicLabel {
    pub name: String,
    pub frequency: usize,
}

/// One bank record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuestionBankRecord {
    pub question: Question,
    pub entity: String,
    pub domain: String,
    pub topic: String,
}

/// Immutable-after-load collection of bank records.
#[derive(Debug, Clone)]
pub struct QuestionBank {
    records: Vec<QuestionBankRecord>,
    by_id: HashMap<String, usize>,
    by_entity: HashMap<String, Vec<usize>>,
    topic_freq: HashMap<String, usize>,
}

impl QuestionBank {
    pub fn new(records: Vec<QuestionBankRecord>) -> Self {
        let mut by_id = HashMap::new();
        let mut by_entity: HashMap<String, Vec<usize>> = HashMap::new();
        let mut topic_freq: HashMap<String, usize> = HashMap::new();
        for (i, r) in records.iter().enumerate() {
            by_id.insert(r.question.id.clone(), i);
            by_entity.entry(r.entity.clone()).or_default().push(i);
            *topic_freq.entry(r.topic.clone()).or_insert(0) += 1;
        }
        Self {
            records,
            by_id,
            by_entity,
            topic_freq,
        }
    }

    /// Loads `id<TAB>text<TAB>entity<TAB>domain<TAB>topic` lines.
    pub fn from_path(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::from_reader(std::io::BufReader::new(file))
    }

    pub fn from_reader<R: BufRead>(reader: R) -> Result<Self> {
        let mut records = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            let bad = |reason: String| Error::MalformedRecord {
                line: i + 1,
                reason,
            };
            if fields.len() != 5 {
                return Err(bad(format!(
                    "expected 5 tab-separated fields, got {}",
                    fields.len()
                )));
            }
            if !is_known_domain(fields[3]) {
                return Err(bad(format!("unknown domain {:?}", fields[3])));
            }
            if fields[4].trim().is_empty() {
                return Err(bad("empty topic".into()));
            }
            let question = Question::new(fields[0], fields[1])
                .map_err(|e| bad(format!("bad question text: {e}")))?;
            records.push(QuestionBankRecord {
                question,
                entity: fields[2].to_string(),
                domain: fields[3].to_string(),
                topic: fields[4].to_string(),
            });
        }
        Ok(Self::new(records))
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn records(&self) -> &[QuestionBankRecord] {
        &self.records
    }

    pub fn get_by_id(&self, id: &str) -> Option<&QuestionBankRecord> {
        self.by_id.get(id).map(|&i| &self.records[i])
    }

    pub fn topic_frequency(&self, topic: &str) -> usize {
        self.topic_freq.get(topic).copied().unwrap_or(0)
    }
}

/// Light stemmer for topic matching: a tiny irregular map, then suffix
/// stripping (s/es/ed/ing) with trailing double-consonant collapse.
/// A stated stand-in for embedding similarity, not real morphology.
pub fn light_stem(word: &str) -> String {
    let w = word.to_lowercase();
    match w.as_str() {
        "born" => return "birth".into(),
        "die" | "dies" | "died" | "dying" => return "death".into(),
        "children" => return "child".into(),
        _ => {}
    }
    let sibilant_final =
        |s: &str| s.ends_with(['s', 'x', 'z']) || s.ends_with("ch") || s.ends_with("sh");
    let stripped: String = if let Some(s) = w.strip_suffix("ing").filter(|s| s.len() >= 3) {
        s.to_string()
    } else if let Some(s) = w.strip_suffix("ied").filter(|s| s.len() >= 2) {
        format!("{s}y") // studied -> study
    } else if let Some(s) = w.strip_suffix("ies").filter(|s| s.len() >= 2) {
        format!("{s}y") // cities -> city
    } else if let Some(s) = w.strip_suffix("ed").filter(|s| s.len() >= 3) {
        s.to_string()
    } else if let Some(s) = w
        .strip_suffix("es")
        .filter(|s| s.len() >= 3 && sibilant_final(s))
    {
        s.to_string() // watches -> watch, but places -> place via plain -s
    } else if let Some(s) = w.strip_suffix('s').filter(|s| s.len() >= 3 && !s.ends_with('s')) {
        s.to_string()
    } else {
        w.clone()
    };
    let chars: Vec<char> = stripped.chars().collect();
    let n = chars.len();
    if n >= 3 && chars[n - 1] == chars[n - 2] && !matches!(chars[n - 1], 'a' | 'e' | 'i' | 'o' | 'u')
    {
        chars[..n - 1].iter().collect()
    } else {
        stripped
    }
}

fn stemmed_content_words(text: &str, stopwords: &Stopwords) -> Vec<String> {
    crate::metrics::metric_tokens(text)
        .into_iter()
        .filter(|t| !stopwords.contains(t))
        .map(|t| light_stem(&t))
        .collect()
}

fn tf_cosine(a: &[String], b: &[String]) -> f64 {
    if a.is_empty() || b.is_empty() {
        return 0.0;
    }
    fn count(tokens: &[String]) -> HashMap<&str, f64> {
        let mut m = HashMap::new();
        for t in tokens {
            *m.entry(t.as_str()).or_default() += 1.0;
        }
        m
    }
    let ca = count(a);
    let cb = count(b);
    let dot: f64 = ca
        .iter()
        .filter_map(|(k, v)| cb.get(k).map(|w| v * w))
        .sum();
    if dot == 0.0 {
        return 0.0; // avoids the empty sum's negative zero
    }
    let na: f64 = ca.values().map(|v| v * v).sum::<f64>().sqrt();
    let nb: f64 = cb.values().map(|v| v * v).sum::<f64>().sqrt();
    dot / (na * nb)
}

/// Assigns the best-matching topic, or None when every candidate falls
/// below the threshold. Ties break to the lexicographically smaller name.
pub fn assign_topic<'a>(
    question: &Question,
    candidate_topics: &'a [TopicLabel],
    threshold: f64,
    stopwords: &Stopwords,
) -> Option<&'a TopicLabel> {
    let q_words = stemmed_content_words(&question.text, stopwords);
    let mut best: Option<(&TopicLabel, f64)> = None;
    for topic in candidate_topics {
        let t_words = stemmed_content_words(&topic.name, stopwords);
        let sim = tf_cosine(&q_words, &t_words);
        let better = match best {
            None => true,
            Some((b, s)) => sim > s || (sim == s && topic.name < b.name),
        };
        if better {
            best = Some((topic, sim));
        }
    }
    best.filter(|(_, s)| *s >= threshold).map(|(t, _)| t)
}

/// Retrieves up to `k` related records: same entity, different topic, at
/// most one per topic (the earliest record in bank order), topics ranked
/// by descending bank frequency with name ties ascending.
pub fn retrieve_related<'a>(
    bank: &'a QuestionBank,
    query: &QuestionBankRecord,
    k: usize,
) -> Result<Vec<&'a QuestionBankRecord>> {
    assert!(k >= 1, "k must be at least 1");
    let indices = bank
        .by_entity
        .get(&query.entity)
        .ok_or_else(|| Error::EntityNotInBank(query.entity.clone()))?;

    // earliest record per distinct topic, excluding the query's topic
    let mut per_topic: HashMap<&str, usize> = HashMap::new();
    for &i in indices {
        let r = &bank.records[i];
        if r.topic == query.topic || r.question.id == query.question.id {
            continue;
        }
        per_topic.entry(r.topic.as_str()).or_insert(i);
    }

    let mut topics: Vec<(&str, usize)> = per_topic.into_iter().collect();
    topics.sort_by(|(ta, _), (tb, _)| {
        bank.topic_frequency(tb)
            .cmp(&bank.topic_frequency(ta))
            .then_with(|| ta.cmp(tb))
    });

    Ok(topics
        .into_iter()
        .take(k)
        .map(|(_, i)| &bank.records[i])
        .collect())
}
