//! Hint assembly: start patterns, the two deterministic baselines, and the
//! full rule pipeline (clauses + anaphora + coordination).

use std::path::Path;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::anaphora::{apply_anaphora, EntityRef};
use crate::clauser::{question_to_clause, ClauseOptions, ContentClause};
use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::qparse::Question;

const BUILTIN_PATTERNS: &str = include_str!("../data/patterns.txt");

/// Verb slot of a start pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerbSlot {
    Ask,
    AlsoAsk,
    BeInterested,
    AlsoBeInterested,
}

/// Modal slot of a start pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ModalSlot {
    Can,
    May,
    Might,
    Could,
}

/// An action-oriented main clause opening a hint
/// ("You may want to know ...").
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StartPattern {
    pub text: String,
    pub verb_slot: VerbSlot,
    pub modal_slot: ModalSlot,
}

impl StartPattern {
    /// Derives the slots from the pattern text itself. Lines must read
    /// "You <modal> ..." with the modal drawn from can/may/might/could.
    fn parse(line: &str) -> Option<Self> {
        let text = line.trim();
        let mut words = text.split_whitespace();
        if !words.next()?.eq_ignore_ascii_case("you") {
            return None;
        }
        let modal_slot = match words.next()?.to_lowercase().as_str() {
            "can" => ModalSlot::Can,
            "may" => ModalSlot::May,
            "might" => ModalSlot::Might,
            "could" => ModalSlot::Could,
            _ => return None,
        };
        let rest = text.to_lowercase();
        let also = rest.contains(" also ");
        let interested = rest.contains("interested");
        let verb_slot = match (also, interested) {
            (false, false) => VerbSlot::Ask,
            (true, false) => VerbSlot::AlsoAsk,
            (false, true) => VerbSlot::BeInterested,
            (true, true) => VerbSlot::AlsoBeInterested,
        };
        Some(Self {
            text: text.to_string(),
            verb_slot,
            modal_slot,
        })
    }
}

/// Fixed, index-addressable inventory of start patterns.
#[derive(Debug, Clone)]
pub struct PatternInventory {
    patterns: Vec<StartPattern>,
}

impl PatternInventory {
    pub fn builtin() -> Self {
        Self::parse(BUILTIN_PATTERNS).expect("builtin pattern inventory is valid")
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut patterns = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            match StartPattern::parse(line) {
                Some(p) => patterns.push(p),
                None => {
                    return Err(Error::BadResource {
                        name: "start patterns".into(),
                        line: i + 1,
                        reason: format!("not a start pattern: {line:?}"),
                    })
                }
            }
        }
        if patterns.is_empty() {
            return Err(Error::BadResource {
                name: "start patterns".into(),
                line: 0,
                reason: "empty inventory".into(),
            });
        }
        Ok(Self { patterns })
    }

    pub fn get(&self, index: usize) -> Result<&StartPattern> {
        self.patterns.get(index).ok_or(Error::NoSuchPattern(index))
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &StartPattern> {
        self.patterns.iter()
    }
}

/// Pattern selection strategy. All choices are deterministic given the
/// strategy and the call sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternStrategy {
    Fixed(usize),
    RoundRobin,
    Seeded(u64),
}

/// Stateful chooser; `next` is deterministic in construction + call count.
pub struct PatternPicker<'a> {
    inventory: &'a PatternInventory,
    strategy: PatternStrategy,
    calls: usize,
    rng: Option<ChaCha8Rng>,
}

impl<'a> PatternPicker<'a> {
    pub fn new(inventory: &'a PatternInventory, strategy: PatternStrategy) -> Self {
        let rng = match strategy {
            PatternStrategy::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        Self {
            inventory,
            strategy,
            calls: 0,
            rng,
        }
    }

    pub fn next_pattern(&mut self) -> Result<StartPattern> {
        let idx = match self.strategy {
            PatternStrategy::Fixed(i) => i,
            PatternStrategy::RoundRobin => self.calls % self.inventory.len(),
            PatternStrategy::Seeded(_) => {
                let rng = self.rng.as_mut().expect("seeded picker has rng");
                rng.gen_range(0..self.inventory.len())
            }
        };
        self.calls += 1;
        self.inventory.get(idx).cloned()
    }
}

/// One-shot pattern choice (round-robin over a single call picks index 0).
pub fn choose_start_pattern(
    inventory: &PatternInventory,
    strategy: PatternStrategy,
) -> Result<StartPattern> {
    PatternPicker::new(inventory, strategy).next_pattern()
}

/// Hint construction mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HintMode {
    /// Verbatim question concatenation.
    Tb,
    /// Reported-speech clauses, no anaphora.
    Rsb,
    /// Clauses + anaphora + coordination.
    Full,
}

impl std::fmt::Display for HintMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HintMode::Tb => write!(f, "tb"),
            HintMode::Rsb => write!(f, "rsb"),
            HintMode::Full => write!(f, "full"),
        }
    }
}

/// A synthesized hint with its bookkeeping.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Hint {
    pub text: String,
    pub pattern: StartPattern,
    /// Source ids of the related questions in composed order.
    pub clause_order: Vec<String>,
    pub char_len: usize,
    pub word_len: usize,
    pub mode: HintMode,
}

impl Hint {
    fn new(text: String, pattern: StartPattern, clause_order: Vec<String>, mode: HintMode) -> Self {
        debug_assert!(text.starts_with(&pattern.text));
        let char_len = text.chars().count();
        let word_len = text.split_whitespace().count();
        Self {
            text,
            pattern,
            clause_order,
            char_len,
            word_len,
            mode,
        }
    }

    /// Wraps external hint text so it can be validated like a composed
    /// hint. The start pattern is detected by longest matching prefix;
    /// text that opens with no known pattern keeps inventory slot 0 and
    /// will fail the pattern check downstream.
    pub fn from_text(
        text: String,
        inventory: &PatternInventory,
        clause_order: Vec<String>,
        mode: HintMode,
    ) -> Self {
        let pattern = inventory
            .iter()
            .filter(|p| text.starts_with(&p.text))
            .max_by_key(|p| p.text.len())
            .cloned()
            .unwrap_or_else(|| inventory.get(0).expect("inventory is non-empty").clone());
        let char_len = text.chars().count();
        let word_len = text.split_whitespace().count();
        Self {
            text,
            pattern,
            clause_order,
            char_len,
            word_len,
            mode,
        }
    }
}

/// An input question with its related questions, subject entity and an
/// optional reference hint.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HintBundle {
    pub id: String,
    pub q: Question,
    pub related: Vec<Question>,
    pub entity: EntityRef,
    pub gold: Option<String>,
    pub domain: String,
}

impl HintBundle {
    pub fn new(
        id: impl Into<String>,
        q: Question,
        related: Vec<Question>,
        entity: EntityRef,
        gold: Option<String>,
        domain: impl Into<String>,
    ) -> Result<Self> {
        let id = id.into();
        if related.is_empty() || related.len() > 3 {
            return Err(Error::MalformedRecord {
                line: 0,
                reason: format!("bundle {id}: expected 1..=3 related questions, got {}", related.len()),
            });
        }
        if related.iter().any(|r| r.id == q.id) {
            return Err(Error::MalformedRecord {
                line: 0,
                reason: format!("bundle {id}: input question id duplicated in related"),
            });
        }
        Ok(Self {
            id,
            q,
            related,
            entity,
            gold,
            domain: domain.into(),
        })
    }
}

fn strip_terminal_punct(text: &str) -> &str {
    text.trim_end().trim_end_matches(['?', '.', '!']).trim_end()
}

/// Template baseline: start pattern + related questions verbatim, joined
/// by ", or"; declarative terminal punctuation. Needs no parsing.
pub fn compose_tb(bundle: &HintBundle, pattern: &StartPattern) -> Hint {
    let parts: Vec<&str> = bundle
        .related
        .iter()
        .map(|q| strip_terminal_punct(&q.text))
        .collect();
    let text = format!("{} {}.", pattern.text, parts.join(", or "));
    Hint::new(
        text,
        pattern.clone(),
        bundle.related.iter().map(|q| q.id.clone()).collect(),
        HintMode::Tb,
    )
}

fn clauses_for(bundle: &HintBundle, lexicon: &Lexicon) -> Result<Vec<ContentClause>> {
    let opts = ClauseOptions::default(); // person shift on
    bundle
        .related
        .iter()
        .map(|q| question_to_clause(q, lexicon, &opts))
        .collect()
}

fn join_clauses(clauses: &[ContentClause], conj: &str) -> String {
    let texts: Vec<String> = clauses.iter().map(|c| c.text()).collect();
    match texts.len() {
        0 => String::new(),
        1 => texts[0].clone(),
        n => {
            let mut out = String::new();
            for (i, t) in texts.iter().enumerate() {
                if i == 0 {
                    out.push_str(t);
                } else if i == n - 1 {
                    out.push_str(&format!(", {conj} {t}"));
                } else {
                    out.push_str(&format!(", or {t}"));
                }
            }
            out
        }
    }
}

/// Reported-speech baseline: every related question becomes a content
/// clause (person shift on); no anaphora. Fails atomically if any question
/// does not parse.
pub fn compose_rsb(bundle: &HintBundle, pattern: &StartPattern, lexicon: &Lexicon) -> Result<Hint> {
    let clauses = clauses_for(bundle, lexicon)?;
    let text = format!("{} {}.", pattern.text, join_clauses(&clauses, "or"));
    Ok(Hint::new(
        text,
        pattern.clone(),
        bundle.related.iter().map(|q| q.id.clone()).collect(),
        HintMode::Rsb,
    ))
}

/// Full rule pipeline: clauses, anaphora against the bundle entity, then
/// coordination with `conj` before the final clause.
pub fn compose_full(
    bundle: &HintBundle,
    pattern: &StartPattern,
    conj: &str,
    lexicon: &Lexicon,
) -> Result<Hint> {
    let clauses = apply_anaphora(&clauses_for(bundle, lexicon)?, &bundle.entity, lexicon);
    let text = format!("{} {}.", pattern.text, join_clauses(&clauses, conj));
    Ok(Hint::new(
        text,
        pattern.clone(),
        bundle.related.iter().map(|q| q.id.clone()).collect(),
        HintMode::Full,
    ))
}

/// Encoder input for sequence-to-sequence training: the input question and
/// its related questions joined by the literal separator `[SEP]`.
pub fn encode_seq2seq_input(bundle: &HintBundle) -> String {
    let mut parts = vec![bundle.q.text.as_str()];
    parts.extend(bundle.related.iter().map(|q| q.text.as_str()));
    parts.join(" [SEP] ")
}
