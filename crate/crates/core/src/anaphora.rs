//! Entity mention detection and pronoun substitution across clauses.
//!
//! The first mention of the subject entity stays verbatim; every later
//! mention is replaced by the pronoun or possessive matching the entity's
//! grammatical gender/number. Aliases come from the dataset record and are
//! never derived automatically.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::clauser::ContentClause;
use crate::lexicon::Lexicon;

/// Grammatical gender/number of an entity, driving pronoun choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum GenderNumber {
    Masculine,
    Feminine,
    #[default]
    Neuter,
    Plural,
}

impl GenderNumber {
    pub fn subject_pronoun(self) -> &'static str {
        match self {
            Self::Masculine => "he",
            Self::Feminine => "she",
            Self::Neuter => "it",
            Self::Plural => "they",
        }
    }

    pub fn object_pronoun(self) -> &'static str {
        match self {
            Self::Masculine => "him",
            Self::Feminine => "her",
            Self::Neuter => "it",
            Self::Plural => "them",
        }
    }

    pub fn possessive(self) -> &'static str {
        match self {
            Self::Masculine => "his",
            Self::Feminine => "her",
            Self::Neuter => "its",
            Self::Plural => "their",
        }
    }
}

/// The subject entity with its aliases.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntityRef {
    pub id: String,
    pub canonical: String,
    /// Includes `canonical`. Determined variants ("the corgi") may be
    /// listed so the determiner is replaced together with the noun.
    pub aliases: Vec<String>,
    pub gender_number: GenderNumber,
    /// Domain label carried along from the dataset record.
    pub domain: String,
}

impl EntityRef {
    pub fn new(
        canonical: impl Into<String>,
        aliases: Vec<String>,
        gender_number: GenderNumber,
        domain: impl Into<String>,
    ) -> Self {
        let canonical = canonical.into();
        let mut aliases = aliases;
        if !aliases.iter().any(|a| a.eq_ignore_ascii_case(&canonical)) {
            aliases.insert(0, canonical.clone());
        }
        Self {
            id: canonical.to_lowercase(),
            canonical,
            aliases,
            gender_number,
            domain: domain.into(),
        }
    }

    /// Tokenized aliases, longest first, each flagged as proper-noun when
    /// its last word is capitalized (fused-s possessives only apply there).
    fn alias_token_lists(&self) -> Vec<(Vec<String>, bool)> {
        let mut lists: Vec<(Vec<String>, bool)> = self
            .aliases
            .iter()
            .filter(|a| !a.trim().is_empty())
            .map(|a| {
                let proper = a
                    .split_whitespace()
                    .last()
                    .is_some_and(|w| w.chars().next().is_some_and(|c| c.is_uppercase()));
                (
                    a.split_whitespace().map(|t| t.to_lowercase()).collect(),
                    proper,
                )
            })
            .collect();
        // Longest alias wins at a position.
        lists.sort_by_key(|(l, _)| std::cmp::Reverse(l.len()));
        lists.dedup();
        lists
    }
}

/// One detected mention of the entity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MentionSpan {
    pub clause_index: usize,
    pub token_span: Range<usize>,
    pub surface: String,
    /// Trailing possessive marker on the last token ('s, s', or a fused
    /// "s" on a capitalized alias, as in "Ronaldos").
    pub possessive: bool,
}

/// How the final alias token may differ from the listed form.
fn match_last_token(token: &str, alias_token: &str, proper_noun: bool) -> Option<bool> {
    let t = token.to_lowercase();
    if t == *alias_token {
        return Some(false);
    }
    if let Some(stripped) = t.strip_suffix("'s") {
        if stripped == alias_token {
            return Some(true);
        }
    }
    if let Some(stripped) = t.strip_suffix('\'') {
        if stripped == alias_token && alias_token.ends_with('s') {
            return Some(true);
        }
    }
    // Fused possessive ("Ronaldos") only for proper-noun aliases; a bare
    // trailing s on a common noun is a plural, not a possessive.
    if proper_noun {
        if let Some(stripped) = t.strip_suffix('s') {
            if stripped == alias_token {
                return Some(true);
            }
        }
    }
    None
}

/// Finds all maximal alias matches across the clauses, in document order.
pub fn find_mentions(clauses: &[ContentClause], entity: &EntityRef) -> Vec<MentionSpan> {
    let alias_lists = entity.alias_token_lists();
    let mut mentions = Vec::new();
    for (ci, clause) in clauses.iter().enumerate() {
        let lower: Vec<String> = clause.body.iter().map(|t| t.to_lowercase()).collect();
        let mut pos = 0;
        'outer: while pos < lower.len() {
            for (alias, proper) in &alias_lists {
                let n = alias.len();
                if pos + n > lower.len() {
                    continue;
                }
                if lower[pos..pos + n - 1] != alias[..n - 1] {
                    continue;
                }
                if let Some(possessive) =
                    match_last_token(&clause.body[pos + n - 1], &alias[n - 1], *proper)
                {
                    mentions.push(MentionSpan {
                        clause_index: ci,
                        token_span: pos..pos + n,
                        surface: clause.body[pos..pos + n].join(" "),
                        possessive,
                    });
                    pos += n;
                    continue 'outer;
                }
            }
            pos += 1;
        }
    }
    mentions
}

/// True when the token after the mention is a finite verb or auxiliary,
/// i.e. the mention sits in subject position.
fn is_subject_position(clause: &ContentClause, span: &Range<usize>, lexicon: &Lexicon) -> bool {
    match clause.body.get(span.end) {
        Some(next) => lexicon.is_aux(next) || lexicon.verbs.is_known_form(next),
        None => false,
    }
}

/// Replaces every mention after the first with the appropriate pronoun.
/// Identity transform when the entity is mentioned at most once.
pub fn apply_anaphora(
    clauses: &[ContentClause],
    entity: &EntityRef,
    lexicon: &Lexicon,
) -> Vec<ContentClause> {
    let mentions = find_mentions(clauses, entity);
    let mut out: Vec<ContentClause> = clauses.to_vec();
    let mut replacements: Vec<Vec<(Range<usize>, String)>> = vec![Vec::new(); clauses.len()];

    for (k, mention) in mentions.iter().enumerate() {
        if k == 0 {
            // First mention in document order stays verbatim.
            out[mention.clause_index]
                .mentions
                .push((mention.token_span.clone(), entity.id.clone()));
            continue;
        }
        let replacement = if mention.possessive {
            entity.gender_number.possessive()
        } else if is_subject_position(&clauses[mention.clause_index], &mention.token_span, lexicon)
        {
            entity.gender_number.subject_pronoun()
        } else {
            entity.gender_number.object_pronoun()
        };
        replacements[mention.clause_index]
            .push((mention.token_span.clone(), replacement.to_string()));
    }

    // Right-to-left so earlier spans stay valid within a clause.
    for (ci, reps) in replacements.iter().enumerate() {
        for (span, rep) in reps.iter().rev() {
            out[ci].body.splice(span.clone(), std::iter::once(rep.clone()));
        }
    }
    out
}
