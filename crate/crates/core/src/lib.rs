//! Word reversing for positive group presentations.
//!
//! Reversing rewrites a signed word `u^-1 v` into `v' u'^-1` using the
//! relations of a presentation. This crate implements right and left
//! reversing, the closure of the letters under complements, the cube
//! conditions together with completion, and the monoid and group
//! properties that follow from completeness.

pub mod analysis;
pub mod closure;
pub mod completeness;
pub mod corpus;
pub mod dot;
pub mod engine;
pub mod error;
pub mod oracle;
pub mod parse;
pub mod presentation;
pub mod report;
pub mod word;

pub use error::{ParseError, ParseErrorKind, PresentationError, TraceError, WordError};
pub use parse::{parse_document, parse_presentation, serialize, Document};
pub use presentation::{Presentation, Relation};
pub use word::{Alphabet, Letter, PositiveWord, SignedLetter, SignedWord};
