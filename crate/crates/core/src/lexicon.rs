//! Closed-class word lists driving the parser and the morphology engine.
//!
//! Three plain-text resources are bundled into the binary and can be
//! overridden from files of the same format:
//!
//! * auxiliary lexicon — `lexeme<TAB>class<TAB>tense<TAB>person-number`,
//!   classes `do-aux`, `be`, `modal`, `have-aux`
//! * verb table — `lemma<TAB>3sg<TAB>past`, one verb per line
//! * stopword list — one token per line

use std::collections::{HashMap, HashSet};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const BUILTIN_AUXILIARIES: &str = include_str!("../data/auxiliaries.tsv");
const BUILTIN_VERBS: &str = include_str!("../data/verbs.tsv");
const BUILTIN_STOPWORDS: &str = include_str!("../data/stopwords.txt");

/// Wh-words that can open an interrogative.
pub const WH_WORDS: [&str; 9] = [
    "who", "what", "when", "where", "why", "which", "whose", "whom", "how",
];

/// Determiners used as noun-phrase boundary markers by the heuristics.
pub const DETERMINERS: [&str; 13] = [
    "the", "a", "an", "this", "that", "these", "those", "my", "your", "his", "her", "its", "their",
];

pub fn is_wh_word(token: &str) -> bool {
    WH_WORDS.contains(&token.to_lowercase().as_str())
}

pub fn is_determiner(token: &str) -> bool {
    DETERMINERS.contains(&token.to_lowercase().as_str())
}

/// Auxiliary class from the lexicon file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AuxClass {
    DoAux,
    Be,
    Modal,
    HaveAux,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Tense {
    Present,
    Past,
    Base,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PersonNumber {
    FirstSingular,
    ThirdSingular,
    Plural,
    Any,
}

/// One auxiliary lexeme with its features.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuxEntry {
    pub surface: String,
    pub class: AuxClass,
    pub tense: Tense,
    pub person_number: PersonNumber,
}

/// Inflection target for a verb form. The closed set mirrors what
/// do-support can encode: `do` -> base, `does` -> 3sg present, `did` -> past.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerbTarget {
    Base,
    ThirdSingularPresent,
    Past,
}

/// Verb table: lemma -> (3sg, past) plus a reverse index from any listed
/// surface form back to (lemma, target).
#[derive(Debug, Clone)]
pub struct VerbTable {
    forms: HashMap<String, (String, String)>,
    reverse: HashMap<String, (String, VerbTarget)>,
}

impl VerbTable {
    pub fn builtin() -> Self {
        Self::from_str(BUILTIN_VERBS, "builtin verbs").expect("builtin verb table is valid")
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_str(&text, &path.display().to_string())
    }

    pub fn from_str(text: &str, name: &str) -> Result<Self> {
        let mut forms = HashMap::new();
        let mut reverse = HashMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 3 {
                return Err(Error::BadResource {
                    name: name.to_string(),
                    line: i + 1,
                    reason: format!("expected 3 tab-separated fields, got {}", fields.len()),
                });
            }
            let (lemma, third, past) = (
                fields[0].to_lowercase(),
                fields[1].to_lowercase(),
                fields[2].to_lowercase(),
            );
            // Base form wins reverse-lookup conflicts (e.g. "read" past == base).
            reverse
                .entry(past.clone())
                .or_insert((lemma.clone(), VerbTarget::Past));
            reverse
                .entry(third.clone())
                .or_insert((lemma.clone(), VerbTarget::ThirdSingularPresent));
            reverse.insert(lemma.clone(), (lemma.clone(), VerbTarget::Base));
            forms.insert(lemma, (third, past));
        }
        Ok(Self { forms, reverse })
    }

    pub fn lookup(&self, lemma: &str) -> Option<(&str, &str)> {
        self.forms
            .get(lemma)
            .map(|(t, p)| (t.as_str(), p.as_str()))
    }

    /// Maps any listed surface form back to its lemma and target.
    pub fn classify_form(&self, surface: &str) -> Option<(&str, VerbTarget)> {
        self.reverse
            .get(&surface.to_lowercase())
            .map(|(l, t)| (l.as_str(), *t))
    }

    pub fn is_known_form(&self, surface: &str) -> bool {
        self.reverse.contains_key(&surface.to_lowercase())
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }
}

/// Auxiliary lexicon plus verb table; everything `parse_question` needs.
#[derive(Debug, Clone)]
pub struct Lexicon {
    aux: HashMap<String, AuxEntry>,
    pub verbs: VerbTable,
}

impl Lexicon {
    pub fn builtin() -> Self {
        Self {
            aux: parse_aux(BUILTIN_AUXILIARIES, "builtin auxiliaries")
                .expect("builtin auxiliary lexicon is valid"),
            verbs: VerbTable::builtin(),
        }
    }

    /// Builtin verb table with an auxiliary lexicon loaded from `path`.
    pub fn with_aux_from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Ok(Self {
            aux: parse_aux(&text, &path.display().to_string())?,
            verbs: VerbTable::builtin(),
        })
    }

    pub fn with_verbs(mut self, verbs: VerbTable) -> Self {
        self.verbs = verbs;
        self
    }

    pub fn aux_entry(&self, token: &str) -> Option<&AuxEntry> {
        self.aux.get(&token.to_lowercase())
    }

    pub fn is_aux(&self, token: &str) -> bool {
        self.aux.contains_key(&token.to_lowercase())
    }
}

fn parse_aux(text: &str, name: &str) -> Result<HashMap<String, AuxEntry>> {
    let mut map = HashMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 4 {
            return Err(Error::BadResource {
                name: name.to_string(),
                line: i + 1,
                reason: format!("expected 4 tab-separated fields, got {}", fields.len()),
            });
        }
        let bad = |reason: String| Error::BadResource {
            name: name.to_string(),
            line: i + 1,
            reason,
        };
        let class = match fields[1] {
            "do-aux" => AuxClass::DoAux,
            "be" => AuxClass::Be,
            "modal" => AuxClass::Modal,
            "have-aux" => AuxClass::HaveAux,
            other => return Err(bad(format!("unknown class {other:?}"))),
        };
        let tense = match fields[2] {
            "present" => Tense::Present,
            "past" => Tense::Past,
            "base" => Tense::Base,
            other => return Err(bad(format!("unknown tense {other:?}"))),
        };
        let person_number = match fields[3] {
            "1sg" => PersonNumber::FirstSingular,
            "3sg" => PersonNumber::ThirdSingular,
            "plural" => PersonNumber::Plural,
            "any" => PersonNumber::Any,
            other => return Err(bad(format!("unknown person-number {other:?}"))),
        };
        let surface = fields[0].to_lowercase();
        map.insert(
            surface.clone(),
            AuxEntry {
                surface,
                class,
                tense,
                person_number,
            },
        );
    }
    Ok(map)
}

/// Stopword list used for content-word extraction.
#[derive(Debug, Clone)]
pub struct Stopwords {
    words: HashSet<String>,
}

impl Stopwords {
    pub fn builtin() -> Self {
        Self::parse(BUILTIN_STOPWORDS)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        Ok(Self::parse(&std::fs::read_to_string(path)?))
    }

    pub fn parse(text: &str) -> Self {
        Self {
            words: text
                .lines()
                .map(|l| l.trim().to_lowercase())
                .filter(|l| !l.is_empty())
                .collect(),
        }
    }

    pub fn contains(&self, token: &str) -> bool {
        self.words.contains(&token.to_lowercase())
    }
}
