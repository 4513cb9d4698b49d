//! Direct question -> interrogative content clause, and back.
//!
//! The forward transform undoes subject-auxiliary inversion and re-inflects
//! do-supported verbs ("Did X plan Y?" -> "if X planned Y"). The inverse
//! transform reconstructs the direct question from a clause body and exists
//! so round-trip properties can be checked on whole corpora.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lexicon::{is_determiner, AuxClass, Lexicon, PersonNumber, Tense, VerbTable, VerbTarget};
use crate::qparse::{parse_question, Inversion, ParsedQuestion, Question, QuestionKind};

/// A subordinate interrogative content clause.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContentClause {
    /// "if" for polar questions, empty for wh-questions.
    pub introducer: String,
    pub body: Vec<String>,
    /// Entity mentions annotated by the anaphora pass: (token range, entity id).
    pub mentions: Vec<(std::ops::Range<usize>, String)>,
    pub source_id: String,
}

impl ContentClause {
    /// Clause rendered as text: introducer, space, body tokens joined by
    /// single spaces.
    pub fn text(&self) -> String {
        let body = self.body.join(" ");
        if self.introducer.is_empty() {
            body
        } else {
            format!("{} {}", self.introducer, body)
        }
    }
}

/// A verb lemma with its inflection target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerbForm {
    pub lemma: String,
    pub target: VerbTarget,
}

/// Options for clause construction.
#[derive(Debug, Clone, Copy)]
pub struct ClauseOptions {
    /// Map first-person pronouns to second person (i -> you, my -> your, ...).
    pub person_shift: bool,
    /// Move the copula to clause-final position ("what X is") instead of
    /// passing copular questions through unchanged.
    pub embedded_inversion: bool,
}

impl Default for ClauseOptions {
    fn default() -> Self {
        Self {
            person_shift: true,
            embedded_inversion: false,
        }
    }
}

/// Stems where the final consonant is not doubled before -ed
/// (final syllable unstressed).
const NO_DOUBLE: [&str; 14] = [
    "visit", "enter", "open", "happen", "offer", "order", "suffer", "answer", "listen", "travel",
    "wonder", "cover", "consider", "deliver",
];

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

/// Surface realization of a verb form. Irregulars come from the exception
/// table; everything else follows the regular spelling rules. Total: any
/// lowercase alphabetic lemma yields a form.
pub fn reinflect(form: &VerbForm, table: &VerbTable) -> String {
    let lemma = form.lemma.as_str();
    match form.target {
        VerbTarget::Base => lemma.to_string(),
        VerbTarget::ThirdSingularPresent => {
            if let Some((third, _)) = table.lookup(lemma) {
                return third.to_string();
            }
            let chars: Vec<char> = lemma.chars().collect();
            let n = chars.len();
            if lemma.ends_with('s')
                || lemma.ends_with('x')
                || lemma.ends_with('z')
                || lemma.ends_with("ch")
                || lemma.ends_with("sh")
            {
                format!("{lemma}es")
            } else if n >= 2 && chars[n - 1] == 'y' && !is_vowel(chars[n - 2]) {
                format!("{}ies", &lemma[..lemma.len() - 1])
            } else {
                format!("{lemma}s")
            }
        }
        VerbTarget::Past => {
            if let Some((_, past)) = table.lookup(lemma) {
                return past.to_string();
            }
            let chars: Vec<char> = lemma.chars().collect();
            let n = chars.len();
            if lemma.ends_with('e') {
                format!("{lemma}d")
            } else if n >= 2 && chars[n - 1] == 'y' && !is_vowel(chars[n - 2]) {
                format!("{}ied", &lemma[..lemma.len() - 1])
            } else if n >= 2
                && !is_vowel(chars[n - 1])
                && !matches!(chars[n - 1], 'w' | 'x' | 'y')
                && is_vowel(chars[n - 2])
                && (n < 3 || !is_vowel(chars[n - 3]))
                && !NO_DOUBLE.contains(&lemma)
            {
                format!("{}{}ed", lemma, chars[n - 1])
            } else {
                format!("{lemma}ed")
            }
        }
    }
}

/// do/does/did implied by the verb target (used when re-inserting
/// do-support).
fn do_aux_for(target: VerbTarget) -> &'static str {
    match target {
        VerbTarget::Base => "do",
        VerbTarget::ThirdSingularPresent => "does",
        VerbTarget::Past => "did",
    }
}

fn aux_verb_target(tense: Tense, pn: PersonNumber) -> VerbTarget {
    match tense {
        Tense::Past => VerbTarget::Past,
        Tense::Present | Tense::Base => match pn {
            PersonNumber::ThirdSingular => VerbTarget::ThirdSingularPresent,
            _ => VerbTarget::Base,
        },
    }
}

fn person_shift_token(token: &str) -> Option<&'static str> {
    match token.to_lowercase().as_str() {
        "i" => Some("you"),
        "my" => Some("your"),
        "me" => Some("you"),
        "mine" => Some("yours"),
        "am" => Some("are"),
        _ => None,
    }
}

/// Applies the first-person -> second-person map in place.
pub fn apply_person_shift(tokens: &mut [String]) {
    for t in tokens.iter_mut() {
        if let Some(sub) = person_shift_token(t) {
            *t = sub.to_string();
        }
    }
}

/// Converts a parsed question into its content clause.
pub fn to_content_clause(
    pq: &ParsedQuestion,
    lexicon: &Lexicon,
    opts: &ClauseOptions,
) -> ContentClause {
    let tokens = &pq.source.tokens;
    let surface = |i: usize| tokens[i].surface.clone();
    let span = |r: &std::ops::Range<usize>| -> Vec<String> {
        tokens[r.clone()].iter().map(|t| t.surface.clone()).collect()
    };
    // The question-initial token is always a closed-class word (wh or
    // auxiliary); it loses its sentence capitalization inside the clause.
    let decap = |mut v: Vec<String>, original_index: usize| -> Vec<String> {
        if original_index == 0 {
            if let Some(first) = v.first_mut() {
                *first = first.to_lowercase();
            }
        }
        v
    };

    let mut body: Vec<String>;
    let introducer = if pq.kind == QuestionKind::YesNo { "if" } else { "" };

    match (pq.kind, pq.inversion) {
        (QuestionKind::YesNo, Inversion::DoSupport) => {
            let aux = pq.auxiliary.as_ref().expect("do-support has auxiliary");
            let verb_idx = pq.main_verb.expect("do-support has main verb");
            let form = VerbForm {
                lemma: surface(verb_idx).to_lowercase(),
                target: aux_verb_target(aux.tense, aux.person_number),
            };
            body = span(&pq.subject);
            body.push(reinflect(&form, &lexicon.verbs));
            body.extend(span(&pq.remainder));
        }
        (QuestionKind::YesNo, _) => {
            // Fronted modal/have/be moves back after the subject.
            let aux_idx = pq.aux_index.expect("fronted auxiliary present");
            body = span(&pq.subject);
            body.push(surface(aux_idx).to_lowercase());
            body.extend(span(&pq.remainder));
        }
        (QuestionKind::Wh, Inversion::DoSupport) => {
            let aux = pq.auxiliary.as_ref().expect("do-support has auxiliary");
            let verb_idx = pq.main_verb.expect("do-support has main verb");
            let form = VerbForm {
                lemma: surface(verb_idx).to_lowercase(),
                target: aux_verb_target(aux.tense, aux.person_number),
            };
            body = decap(span(&pq.wh_phrase), 0);
            body.extend(span(&pq.subject));
            body.push(reinflect(&form, &lexicon.verbs));
            body.extend(span(&pq.remainder));
        }
        (QuestionKind::Wh, Inversion::AuxInversion) => {
            let aux_idx = pq.aux_index.expect("fronted auxiliary present");
            body = decap(span(&pq.wh_phrase), 0);
            body.extend(span(&pq.subject));
            body.push(surface(aux_idx).to_lowercase());
            body.extend(span(&pq.remainder));
        }
        (QuestionKind::Wh, Inversion::Copula) => {
            if opts.embedded_inversion {
                let aux_idx = pq.aux_index.expect("copula present");
                body = decap(span(&pq.wh_phrase), 0);
                body.extend(span(&pq.remainder));
                body.push(surface(aux_idx).to_lowercase());
            } else {
                // Source order preserved, terminal punctuation dropped.
                body = decap(
                    (0..pq.content_len()).map(surface).collect::<Vec<_>>(),
                    0,
                );
            }
        }
        (QuestionKind::Wh, Inversion::SubjectWh) => {
            body = decap((0..pq.content_len()).map(surface).collect::<Vec<_>>(), 0);
        }
    }

    if opts.person_shift {
        apply_person_shift(&mut body);
    }

    ContentClause {
        introducer: introducer.to_string(),
        body,
        mentions: Vec::new(),
        source_id: pq.source.id.clone(),
    }
}

/// Parses and converts in one step.
pub fn question_to_clause(q: &Question, lexicon: &Lexicon, opts: &ClauseOptions) -> Result<ContentClause> {
    Ok(to_content_clause(&parse_question(q, lexicon)?, lexicon, opts))
}

fn capitalize_first(s: &str) -> String {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) => c.to_uppercase().collect::<String>() + chars.as_str(),
        None => String::new(),
    }
}

fn starts_uppercase(s: &str) -> bool {
    s.chars().next().is_some_and(|c| c.is_uppercase())
}

/// What an inverted-clause scan found at a token.
enum BodyHit {
    FrontableAux,
    MainVerb(String, VerbTarget),
}

/// Classifies body token `i` for inversion. Have-forms count as auxiliaries
/// only when followed by a participle-like table form; do-forms inside a
/// body are always the lexical verb "do"; be-forms and modals always front.
fn classify_body_token(body: &[String], i: usize, lexicon: &Lexicon) -> Option<BodyHit> {
    let token = body[i].to_lowercase();
    if let Some(entry) = lexicon.aux_entry(&token) {
        match entry.class {
            AuxClass::Modal | AuxClass::Be => return Some(BodyHit::FrontableAux),
            AuxClass::HaveAux => {
                let followed_by_participle = body
                    .get(i + 1)
                    .and_then(|t| lexicon.verbs.classify_form(t))
                    .is_some_and(|(_, target)| target == VerbTarget::Past)
                    || body
                        .get(i + 1)
                        .is_some_and(|t| matches!(t.to_lowercase().as_str(), "been" | "had"));
                if followed_by_participle {
                    return Some(BodyHit::FrontableAux);
                }
                let (lemma, target) = lexicon.verbs.classify_form(&token)?;
                return Some(BodyHit::MainVerb(lemma.to_string(), target));
            }
            AuxClass::DoAux => {
                let (lemma, target) = lexicon.verbs.classify_form(&token)?;
                return Some(BodyHit::MainVerb(lemma.to_string(), target));
            }
        }
    }
    if let Some((lemma, target)) = lexicon.verbs.classify_form(&token) {
        if i > 0 && is_determiner(&body[i - 1]) {
            return None; // a subject cannot end in a bare determiner
        }
        return Some(BodyHit::MainVerb(lemma.to_string(), target));
    }
    None
}

/// Scans `range` for the first token that can carry the inversion.
fn scan_body(body: &[String], range: std::ops::Range<usize>, lexicon: &Lexicon) -> Option<(usize, BodyHit)> {
    for i in range {
        if let Some(hit) = classify_body_token(body, i, lexicon) {
            return Some((i, hit));
        }
    }
    None
}

fn is_personal_pronoun(token: &str) -> bool {
    matches!(
        token.to_lowercase().as_str(),
        "i" | "you" | "he" | "she" | "it" | "we" | "they"
    )
}

/// Wh-phrase extent inside a clause body. Mirrors the parser's patterns;
/// extensible phrases stop at the first capitalized token, determiner,
/// personal pronoun, auxiliary or verb form.
fn body_wh_end(body: &[String], lexicon: &Lexicon) -> usize {
    let lower: Vec<String> = body.iter().map(|t| t.to_lowercase()).collect();
    let (pattern_end, extensible) = match lower[0].as_str() {
        "how" if body.len() > 1 => match lower[1].as_str() {
            "many" | "much" => (2, true),
            "long" | "old" | "far" => (2, false),
            _ => (1, false),
        },
        "what" if body.len() > 2 && lower[1] == "kind" && lower[2] == "of" => (3, true),
        "which" => (1, true),
        _ => (1, false),
    };
    if !extensible {
        return pattern_end.min(body.len());
    }
    let mut end = pattern_end;
    while end < body.len() {
        let t = &body[end];
        if starts_uppercase(t)
            || is_determiner(t)
            || is_personal_pronoun(t)
            || lexicon.is_aux(t)
            || lexicon.verbs.is_known_form(t)
        {
            break;
        }
        end += 1;
    }
    end
}

/// Reconstructs the direct question a content clause came from.
///
/// The clause must have been produced with person shift disabled.
/// Copula and subject-wh clauses pass through (re-capitalize, re-attach
/// the question mark); anything ambiguous is reported, never guessed.
pub fn invert_clause(clause: &ContentClause, lexicon: &Lexicon) -> Result<Question> {
    let body = &clause.body;
    if body.is_empty() {
        return Err(Error::NonInvertible("empty clause body".into()));
    }

    let ordered: Vec<String> = if clause.introducer.is_empty() {
        let wh_end = body_wh_end(body, lexicon);
        if !crate::lexicon::is_wh_word(&body[0]) {
            return Err(Error::NonInvertible(format!(
                "wh-clause does not start with a wh-word: {:?}",
                body[0]
            )));
        }
        match scan_body(body, wh_end..body.len(), lexicon) {
            // Verb or copula immediately after the wh-phrase: the original
            // question had no inversion (subject-wh) or keeps copular order.
            Some((i, _)) if i == wh_end => body.clone(),
            Some((i, BodyHit::FrontableAux)) => {
                let mut q: Vec<String> = body[..wh_end].to_vec();
                q.push(body[i].clone());
                q.extend(body[wh_end..i].iter().cloned());
                q.extend(body[i + 1..].iter().cloned());
                q
            }
            Some((i, BodyHit::MainVerb(lemma, target))) => {
                let mut q: Vec<String> = body[..wh_end].to_vec();
                q.push(do_aux_for(target).to_string());
                q.extend(body[wh_end..i].iter().cloned());
                q.push(lemma);
                q.extend(body[i + 1..].iter().cloned());
                q
            }
            None => {
                return Err(Error::NonInvertible(format!(
                    "no verb or auxiliary found in wh-clause {:?}",
                    clause.text()
                )))
            }
        }
    } else {
        // Polar clause: subject must be non-empty, so scan from index 1.
        match scan_body(body, 1..body.len(), lexicon) {
            Some((i, BodyHit::FrontableAux)) => {
                let mut q: Vec<String> = vec![body[i].clone()];
                q.extend(body[..i].iter().cloned());
                q.extend(body[i + 1..].iter().cloned());
                q
            }
            Some((i, BodyHit::MainVerb(lemma, target))) => {
                let mut q: Vec<String> = vec![do_aux_for(target).to_string()];
                q.extend(body[..i].iter().cloned());
                q.push(lemma);
                q.extend(body[i + 1..].iter().cloned());
                q
            }
            None => {
                return Err(Error::NonInvertible(format!(
                    "no verb or auxiliary found in polar clause {:?}",
                    clause.text()
                )))
            }
        }
    };

    let mut text = ordered.join(" ");
    text = capitalize_first(&text);
    text.push('?');
    Question::new(format!("{}~inverted", clause.source_id), text)
}
