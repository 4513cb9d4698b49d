//! Rule-based generation of voice-friendly follow-on question hints.
//!
//! Given a user question and up to three related questions, the pipeline
//! parses each question, rewrites it as an interrogative content clause,
//! replaces repeated entity mentions with pronouns, and coordinates the
//! clauses under an action-oriented start pattern ("You may want to know
//! ..."). The crate also ships the two deterministic baselines (verbatim
//! template concatenation and reported-speech concatenation), mechanical
//! hint validators, a related-question bank with topic-based retrieval,
//! dataset split/emission tooling, and a BLEU/ROUGE evaluation harness.

pub mod anaphora;
pub mod clauser;
pub mod composer;
pub mod dataset;
pub mod error;
pub mod lexicon;
pub mod metrics;
pub mod qbank;
pub mod qparse;
pub mod validate;

pub use error::{Error, Result};
