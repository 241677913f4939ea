//! Fuzzy Petri nets for computing with words.
//!
//! Transitions are labeled by words, i.e. fuzzy subsets of a finite symbol
//! alphabet. Tokens carry possibility degrees and move by max-min firing. The
//! crate covers:
//!
//! - [`fuzzyset`]: finite fuzzy sets and the min/max degree lattice;
//! - [`net`]: fuzzy Petri nets, firing, reachability and input-arc weights;
//! - [`cw`]: word-labeled nets and the fuzzy language they accept;
//! - [`reasoner`]: the Mamdani rule base of a net and max-min inference;
//! - [`extend`](mod@extend): extending a net to new words by fuzzy reasoning;
//! - [`automaton`]: fuzzy automata over words and conversions to and from nets;
//! - [`format`](mod@format) and [`dot`]: the text file format and Graphviz export.

pub mod automaton;
pub mod cw;
pub mod dot;
pub mod error;
pub mod extend;
pub mod format;
pub mod fuzzyset;
pub mod net;
pub mod reasoner;

pub use automaton::{facw_to_fpncw, fpncw_to_facw, Facw};
pub use cw::{Alphabet, Fpncw, Word, WordString, DEFAULT_ORACLE_DEPTH};
pub use error::{Error, Result};
pub use extend::{extend, FpnCmw, Origin};
pub use format::{FormatError, Model};
pub use fuzzyset::{Degree, FuzzySet, Universe};
pub use net::{Fpn, Marking, PlaceId, Transition, TransitionId, Violation, WeightedFpn};
pub use reasoner::{gmp, infer, matching_rules, GeneralRule, Rule, RuleBase};
