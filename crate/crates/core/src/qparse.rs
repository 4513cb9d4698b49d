//! Tokenization and structural analysis of English questions.
//!
//! The parser classifies a question into one inversion class
//! (do-support, auxiliary inversion, copula, subject-wh) and isolates the
//! token spans the clause builder needs. Anything it cannot identify with
//! confidence is refused with a typed error; it never guesses.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lexicon::{is_determiner, is_wh_word, AuxClass, AuxEntry, Lexicon};

/// One surface token with its character offset into the source text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    /// Offset in characters (not bytes) from the start of the text.
    pub start: usize,
}

/// A raw question: id, text and its token sequence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Question {
    pub id: String,
    pub text: String,
    pub tokens: Vec<Token>,
}

impl Question {
    pub fn new(id: impl Into<String>, text: impl Into<String>) -> Result<Self> {
        let text = text.into();
        let tokens = tokenize(&text)?;
        Ok(Self {
            id: id.into(),
            text,
            tokens,
        })
    }

    pub fn surfaces(&self) -> Vec<&str> {
        self.tokens.iter().map(|t| t.surface.as_str()).collect()
    }
}

/// Splits on whitespace, detaching sentence-final punctuation (`?` `.` `!`)
/// as separate tokens. Internal apostrophes stay inside their token and
/// surface case is preserved.
pub fn tokenize(text: &str) -> Result<Vec<Token>> {
    if text.trim().is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut tokens = Vec::new();
    let mut chunk = String::new();
    let mut chunk_start = 0usize;
    let mut pos = 0usize; // character offset

    let flush = |chunk: &mut String, start: usize, tokens: &mut Vec<Token>| {
        if chunk.is_empty() {
            return;
        }
        // Peel trailing ? . ! characters off the chunk, each its own token.
        let chars: Vec<char> = chunk.chars().collect();
        let mut word_len = chars.len();
        while word_len > 0 && matches!(chars[word_len - 1], '?' | '.' | '!') {
            word_len -= 1;
        }
        if word_len > 0 {
            tokens.push(Token {
                surface: chars[..word_len].iter().collect(),
                start,
            });
        }
        for (i, c) in chars[word_len..].iter().enumerate() {
            tokens.push(Token {
                surface: c.to_string(),
                start: start + word_len + i,
            });
        }
        chunk.clear();
    };

    for c in text.chars() {
        if c.is_whitespace() {
            flush(&mut chunk, chunk_start, &mut tokens);
        } else {
            if chunk.is_empty() {
                chunk_start = pos;
            }
            chunk.push(c);
        }
        pos += 1;
    }
    flush(&mut chunk, chunk_start, &mut tokens);
    Ok(tokens)
}

/// Question kind: polar (yes/no) or wh-question.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuestionKind {
    YesNo,
    Wh,
}

/// How the question realizes interrogative syntax.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Inversion {
    /// Fronted modal/have auxiliary: "Can a dog eat peanuts?"
    AuxInversion,
    /// Fronted do/does/did with the lexical verb in base form.
    DoSupport,
    /// Fronted form of "be": "What is the largest horse?"
    Copula,
    /// The wh-phrase is the subject; no inversion: "Who planned it?"
    SubjectWh,
}

/// Structured analysis of one question. Spans index into `source.tokens`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParsedQuestion {
    pub source: Question,
    pub kind: QuestionKind,
    /// Empty iff kind is YesNo.
    pub wh_phrase: Range<usize>,
    pub inversion: Inversion,
    /// Absent iff inversion is SubjectWh.
    pub auxiliary: Option<AuxEntry>,
    /// Token index of the fronted auxiliary, when present.
    pub aux_index: Option<usize>,
    pub subject: Range<usize>,
    /// Token index of the lexical verb; present iff inversion is DoSupport.
    pub main_verb: Option<usize>,
    /// Everything after the verb/subject material, excluding terminal punctuation.
    pub remainder: Range<usize>,
}

impl ParsedQuestion {
    pub fn span_surfaces(&self, span: &Range<usize>) -> Vec<&str> {
        self.source.tokens[span.clone()]
            .iter()
            .map(|t| t.surface.as_str())
            .collect()
    }

    /// Token count excluding trailing punctuation tokens.
    pub fn content_len(&self) -> usize {
        content_end(&self.source.tokens)
    }
}

fn is_punct_token(t: &Token) -> bool {
    matches!(t.surface.as_str(), "?" | "." | "!")
}

fn content_end(tokens: &[Token]) -> usize {
    let mut end = tokens.len();
    while end > 0 && is_punct_token(&tokens[end - 1]) {
        end -= 1;
    }
    end
}

fn starts_uppercase(s: &str) -> bool {
    s.chars().next().is_some_and(|c| c.is_uppercase())
}

/// Scans for the first token classifiable as a lexical verb or auxiliary;
/// bounds the subject after a fronted modal/have. A verb candidate directly
/// after a determiner is skipped: a subject may not end in a bare
/// determiner.
fn scan_verb_or_aux(tokens: &[Token], range: Range<usize>, lexicon: &Lexicon) -> Option<usize> {
    for i in range {
        let surface = tokens[i].surface.as_str();
        if lexicon.is_aux(surface) {
            return Some(i);
        }
        if lexicon.verbs.is_known_form(surface) {
            if i > 0 && is_determiner(&tokens[i - 1].surface) {
                continue;
            }
            return Some(i);
        }
    }
    None
}

/// Scans for the lexical verb of a do-supported question. Have/do forms in
/// range are the main verb (the auxiliary slot is already taken); a be-form
/// or modal before any verb makes the structure unidentifiable.
fn scan_main_verb(tokens: &[Token], range: Range<usize>, lexicon: &Lexicon) -> Option<usize> {
    for i in range {
        let surface = tokens[i].surface.as_str();
        if lexicon.verbs.is_known_form(surface) {
            if i > 0 && is_determiner(&tokens[i - 1].surface) {
                continue;
            }
            return Some(i);
        }
        if let Some(entry) = lexicon.aux_entry(surface) {
            if matches!(entry.class, AuxClass::Be | AuxClass::Modal) {
                return None;
            }
        }
    }
    None
}

/// Wh-phrase extent starting at token 0. Returns the end of the fixed
/// pattern part; `extensible` says whether the phrase may grow rightwards
/// until the fronted auxiliary ("how many children does ...").
fn wh_pattern(tokens: &[Token], end: usize) -> (usize, bool) {
    let lower: Vec<String> = tokens[..end].iter().map(|t| t.surface.to_lowercase()).collect();
    match lower[0].as_str() {
        "how" if end > 1 => match lower[1].as_str() {
            "many" | "much" => (2, true),
            "long" | "old" | "far" => (2, false),
            _ => (1, false),
        },
        "what" if end > 2 && lower[1] == "kind" && lower[2] == "of" => (3, true),
        "which" => (1, true),
        _ => (1, false),
    }
}

/// Parses a tokenized question into its structural analysis.
pub fn parse_question(q: &Question, lexicon: &Lexicon) -> Result<ParsedQuestion> {
    let tokens = &q.tokens;
    let end = content_end(tokens);
    if end == 0 {
        return Err(Error::NotAQuestion(q.id.clone()));
    }
    let refuse = |reason: &str| Error::UnsupportedStructure {
        id: q.id.clone(),
        reason: reason.to_string(),
    };

    let first = tokens[0].surface.as_str();
    if is_wh_word(first) {
        let (pattern_end, extensible) = wh_pattern(tokens, end);
        // Find the fronted auxiliary: directly after the wh-phrase, or for
        // extensible phrases ("how many X"), after the extension.
        let mut aux_idx = None;
        for (i, token) in tokens.iter().enumerate().take(end).skip(pattern_end) {
            if lexicon.is_aux(&token.surface) {
                aux_idx = Some(i);
                break;
            }
            if !extensible {
                break;
            }
        }
        let wh_end = match aux_idx {
            Some(a) if extensible => a,
            _ => pattern_end,
        };

        match aux_idx {
            Some(a) if a == wh_end || extensible => {
                let aux = lexicon.aux_entry(&tokens[a].surface).unwrap().clone();
                match aux.class {
                    AuxClass::DoAux => {
                        let verb = scan_main_verb(tokens, a + 1..end, lexicon)
                            .ok_or_else(|| refuse("no lexical verb after do-support auxiliary"))?;
                        if verb == a + 1 {
                            return Err(refuse("do-support with empty subject"));
                        }
                        Ok(ParsedQuestion {
                            source: q.clone(),
                            kind: QuestionKind::Wh,
                            wh_phrase: 0..a,
                            inversion: Inversion::DoSupport,
                            auxiliary: Some(aux),
                            aux_index: Some(a),
                            subject: a + 1..verb,
                            main_verb: Some(verb),
                            remainder: verb + 1..end,
                        })
                    }
                    AuxClass::Be => Ok(ParsedQuestion {
                        source: q.clone(),
                        kind: QuestionKind::Wh,
                        wh_phrase: 0..a,
                        inversion: Inversion::Copula,
                        auxiliary: Some(aux),
                        aux_index: Some(a),
                        // Copular subjects are not isolated; the clause
                        // passes through in source order.
                        subject: a..a,
                        main_verb: None,
                        remainder: a + 1..end,
                    }),
                    AuxClass::Modal | AuxClass::HaveAux => {
                        match scan_verb_or_aux(tokens, a + 1..end, lexicon) {
                            Some(v) if v > a + 1 => Ok(ParsedQuestion {
                                source: q.clone(),
                                kind: QuestionKind::Wh,
                                wh_phrase: 0..a,
                                inversion: Inversion::AuxInversion,
                                auxiliary: Some(aux),
                                aux_index: Some(a),
                                subject: a + 1..v,
                                main_verb: None,
                                remainder: v..end,
                            }),
                            // Auxiliary right after the wh-phrase with no
                            // subject in between: wh-subject, no inversion
                            // ("what can happen?").
                            Some(_) => Ok(subject_wh(q, 0..pattern_end, end)),
                            None => Err(refuse("no verb after fronted auxiliary")),
                        }
                    }
                }
            }
            _ => {
                // No fronted auxiliary: wh-subject question if a lexical
                // verb follows the wh-phrase.
                match scan_verb_or_aux(tokens, pattern_end..end, lexicon) {
                    Some(v) if !lexicon.is_aux(&tokens[v].surface) => {
                        Ok(subject_wh(q, 0..pattern_end, end))
                    }
                    _ => Err(refuse("wh-question without identifiable auxiliary or verb")),
                }
            }
        }
    } else if let Some(aux) = lexicon.aux_entry(first).cloned() {
        // Polar question with fronted auxiliary.
        match aux.class {
            AuxClass::DoAux => {
                let verb = scan_main_verb(tokens, 1..end, lexicon)
                    .ok_or_else(|| refuse("no lexical verb after do-support auxiliary"))?;
                if verb == 1 {
                    return Err(refuse("do-support with empty subject"));
                }
                Ok(ParsedQuestion {
                    source: q.clone(),
                    kind: QuestionKind::YesNo,
                    wh_phrase: 0..0,
                    inversion: Inversion::DoSupport,
                    auxiliary: Some(aux),
                    aux_index: Some(0),
                    subject: 1..verb,
                    main_verb: Some(verb),
                    remainder: verb + 1..end,
                })
            }
            AuxClass::Be => {
                let subject_end = copula_subject_end(tokens, 1..end)
                    .ok_or_else(|| refuse("cannot bound the copular subject"))?;
                Ok(ParsedQuestion {
                    source: q.clone(),
                    kind: QuestionKind::YesNo,
                    wh_phrase: 0..0,
                    inversion: Inversion::Copula,
                    auxiliary: Some(aux),
                    aux_index: Some(0),
                    subject: 1..subject_end,
                    main_verb: None,
                    remainder: subject_end..end,
                })
            }
            AuxClass::Modal | AuxClass::HaveAux => {
                let v = scan_verb_or_aux(tokens, 1..end, lexicon)
                    .ok_or_else(|| refuse("no verb after fronted auxiliary"))?;
                if v == 1 {
                    return Err(refuse("fronted auxiliary with empty subject"));
                }
                Ok(ParsedQuestion {
                    source: q.clone(),
                    kind: QuestionKind::YesNo,
                    wh_phrase: 0..0,
                    inversion: Inversion::AuxInversion,
                    auxiliary: Some(aux),
                    aux_index: Some(0),
                    subject: 1..v,
                    main_verb: None,
                    remainder: v..end,
                })
            }
        }
    } else {
        Err(Error::NotAQuestion(q.id.clone()))
    }
}

fn subject_wh(q: &Question, wh: Range<usize>, end: usize) -> ParsedQuestion {
    let wh_end = wh.end;
    ParsedQuestion {
        source: q.clone(),
        kind: QuestionKind::Wh,
        wh_phrase: wh,
        inversion: Inversion::SubjectWh,
        auxiliary: None,
        aux_index: None,
        subject: wh_end..wh_end,
        main_verb: None,
        remainder: wh_end..end,
    }
}

/// Subject extent for a polar copular question ("Is the horse fast?").
/// Capitalized run (optionally determiner-led), else determiner plus one
/// token, else one token. Returns None when nothing is left for the
/// predicate.
fn copula_subject_end(tokens: &[Token], range: Range<usize>) -> Option<usize> {
    if range.is_empty() {
        return None;
    }
    let start = range.start;
    let first = tokens[start].surface.as_str();
    let cap_run = |from: usize| {
        let mut i = from;
        while i < range.end && starts_uppercase(&tokens[i].surface) {
            i += 1;
        }
        i
    };
    let end = if starts_uppercase(first) {
        cap_run(start + 1)
    } else if is_determiner(first) {
        if start + 1 < range.end && starts_uppercase(&tokens[start + 1].surface) {
            cap_run(start + 2)
        } else {
            start + 2
        }
    } else {
        start + 1
    };
    if end < range.end {
        Some(end)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> Question {
        Question::new("t", text).unwrap()
    }

    fn parse(text: &str) -> ParsedQuestion {
        parse_question(&q(text), &Lexicon::builtin()).unwrap()
    }

    #[test]
    fn tokenize_detaches_terminal_punctuation() {
        let toks = tokenize("Did Samuel Adams plan the Boston Tea Party?").unwrap();
        let surfaces: Vec<&str> = toks.iter().map(|t| t.surface.as_str()).collect();
        assert_eq!(
            surfaces,
            ["Did", "Samuel", "Adams", "plan", "the", "Boston", "Tea", "Party", "?"]
        );
    }

    #[test]
    fn tokenize_keeps_internal_apostrophes() {
        let toks = tokenize("who is cristiano ronaldo's real wife?").unwrap();
        let surfaces: Vec<&str> = toks.iter().map(|t| t.surface.as_str()).collect();
        assert_eq!(
            surfaces,
            ["who", "is", "cristiano", "ronaldo's", "real", "wife", "?"]
        );
    }

    #[test]
    fn tokenize_single_token() {
        let toks = tokenize("Hi").unwrap();
        assert_eq!(toks.len(), 1);
        assert_eq!(toks[0].surface, "Hi");
        assert_eq!(toks[0].start, 0);
    }

    #[test]
    fn tokenize_rejects_blank() {
        assert!(matches!(tokenize("   "), Err(Error::EmptyInput)));
    }

    #[test]
    fn tokenize_offsets_point_into_text() {
        let text = "Did  Samuel Adams plan it?";
        let toks = tokenize(text).unwrap();
        let chars: Vec<char> = text.chars().collect();
        for t in &toks {
            let got: String = chars[t.start..t.start + t.surface.chars().count()]
                .iter()
                .collect();
            assert_eq!(got, t.surface);
        }
    }

    #[test]
    fn parses_yesno_do_support() {
        let pq = parse("Did Samuel Adams plan the Boston Tea Party?");
        assert_eq!(pq.kind, QuestionKind::YesNo);
        assert_eq!(pq.inversion, Inversion::DoSupport);
        let aux = pq.auxiliary.as_ref().unwrap();
        assert_eq!(aux.surface, "did");
        assert_eq!(pq.span_surfaces(&pq.subject), ["Samuel", "Adams"]);
        assert_eq!(pq.source.tokens[pq.main_verb.unwrap()].surface, "plan");
        assert_eq!(
            pq.span_surfaces(&pq.remainder),
            ["the", "Boston", "Tea", "Party"]
        );
    }

    #[test]
    fn parses_wh_do_support_with_extended_phrase() {
        let pq = parse("how many children does Cristiano Ronaldo have?");
        assert_eq!(pq.kind, QuestionKind::Wh);
        assert_eq!(pq.inversion, Inversion::DoSupport);
        assert_eq!(pq.span_surfaces(&pq.wh_phrase), ["how", "many", "children"]);
        assert_eq!(pq.span_surfaces(&pq.subject), ["Cristiano", "Ronaldo"]);
        assert_eq!(pq.source.tokens[pq.main_verb.unwrap()].surface, "have");
        assert!(pq.remainder.is_empty());
    }

    #[test]
    fn parses_wh_copula_without_isolating_subject() {
        let pq = parse("What is the largest horse that is alive?");
        assert_eq!(pq.kind, QuestionKind::Wh);
        assert_eq!(pq.inversion, Inversion::Copula);
        assert_eq!(pq.auxiliary.as_ref().unwrap().surface, "is");
        assert!(pq.subject.is_empty());
    }

    #[test]
    fn parses_subject_wh_without_auxiliary() {
        let pq = parse("Who planned the Boston Tea Party?");
        assert_eq!(pq.kind, QuestionKind::Wh);
        assert_eq!(pq.inversion, Inversion::SubjectWh);
        assert!(pq.auxiliary.is_none());
    }

    #[test]
    fn parses_modal_inversion_with_lowercase_subject() {
        let pq = parse("can i unlock my iphone even if i am still paying for it?");
        assert_eq!(pq.kind, QuestionKind::YesNo);
        assert_eq!(pq.inversion, Inversion::AuxInversion);
        assert_eq!(pq.span_surfaces(&pq.subject), ["i"]);
        assert_eq!(pq.span_surfaces(&pq.remainder)[0], "unlock");
    }

    #[test]
    fn aux_in_passive_remainder_bounds_subject() {
        let pq = parse("Will the ceremony be held outside?");
        assert_eq!(pq.span_surfaces(&pq.subject), ["the", "ceremony"]);
        assert_eq!(pq.span_surfaces(&pq.remainder), ["be", "held", "outside"]);
    }

    #[test]
    fn wh_subject_with_modal_is_subject_wh() {
        let pq = parse("What can happen?");
        assert_eq!(pq.inversion, Inversion::SubjectWh);
        assert!(pq.auxiliary.is_none());
    }

    #[test]
    fn statement_is_refused_as_not_a_question() {
        let err = parse_question(&q("Hi"), &Lexicon::builtin()).unwrap_err();
        assert!(matches!(err, Error::NotAQuestion(_)));
    }

    #[test]
    fn unidentifiable_verb_slot_is_refused() {
        // "blorp" is not in the verb table, so the subject/verb split
        // cannot be identified.
        let err = parse_question(&q("Did the machine blorp loudly?"), &Lexicon::builtin())
            .unwrap_err();
        assert!(matches!(err, Error::UnsupportedStructure { .. }));
    }

    #[test]
    fn spans_are_disjoint_and_in_bounds() {
        for text in [
            "Did Samuel Adams plan the Boston Tea Party?",
            "how many children does Cristiano Ronaldo have?",
            "What is the largest horse that is alive?",
            "Who planned the Boston Tea Party?",
            "can i unlock my iphone even if i am still paying for it?",
        ] {
            let pq = parse(text);
            let n = pq.source.tokens.len();
            for span in [&pq.wh_phrase, &pq.subject, &pq.remainder] {
                assert!(span.start <= span.end && span.end <= n, "{text}");
            }
            let spans = [&pq.wh_phrase, &pq.subject, &pq.remainder];
            for (i, a) in spans.iter().enumerate() {
                for b in spans.iter().skip(i + 1) {
                    assert!(
                        a.end <= b.start || b.end <= a.start || a.is_empty() || b.is_empty(),
                        "overlap in {text}"
                    );
                }
            }
        }
    }

    #[test]
    fn determinism() {
        let a = parse("Where does the word horse come from?");
        let b = parse("Where does the word horse come from?");
        assert_eq!(a, b);
    }

    proptest::proptest! {
        // Joining tokens with single spaces (punctuation reattached
        // without one) reproduces the whitespace-normalized input.
        #[test]
        fn offsets_are_sound_for_arbitrary_text(
            words in proptest::collection::vec("[A-Za-z']{1,8}[?.!]{0,2}", 1..12),
        ) {
            let text = words.join(" ");
            let tokens = tokenize(&text).unwrap();
            let mut rebuilt = String::new();
            for (i, t) in tokens.iter().enumerate() {
                let punct = matches!(t.surface.as_str(), "?" | "." | "!");
                if i > 0 && !punct {
                    rebuilt.push(' ');
                }
                rebuilt.push_str(&t.surface);
            }
            let normalized = text.split_whitespace().collect::<Vec<_>>().join(" ");
            proptest::prop_assert_eq!(rebuilt, normalized);
        }
    }
}
