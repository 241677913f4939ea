//! Word-labeled fuzzy Petri nets and the fuzzy languages they accept.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fuzzyset::{join_all, Degree, FuzzySet, Universe};
use crate::net::{Fpn, Marking, TransitionId};

/// Longest string [`Fpncw::accept_oracle`] enumerates by default.
pub const DEFAULT_ORACLE_DEPTH: usize = 6;

/// A named fuzzy subset of the symbol alphabet.
#[derive(Debug, Clone, PartialEq)]
pub struct Word {
    pub name: String,
    pub meaning: FuzzySet,
}

impl Word {
    pub fn new(name: impl Into<String>, meaning: FuzzySet) -> Self {
        Word {
            name: name.into(),
            meaning,
        }
    }
}

/// A finite set of words over one symbol universe. Words are identified by name.
#[derive(Debug, Clone, PartialEq)]
pub struct Alphabet {
    symbols: Arc<Universe>,
    words: Vec<Word>,
    index: HashMap<String, usize>,
}

impl Alphabet {
    pub fn new(symbols: Arc<Universe>, words: Vec<Word>) -> Result<Self> {
        let mut index = HashMap::with_capacity(words.len());
        for (i, w) in words.iter().enumerate() {
            if w.meaning.universe().as_ref() != symbols.as_ref() {
                return Err(Error::UniverseMismatch);
            }
            if index.insert(w.name.clone(), i).is_some() {
                return Err(Error::DuplicateName(w.name.clone()));
            }
        }
        Ok(Alphabet {
            symbols,
            words,
            index,
        })
    }

    pub fn symbols(&self) -> &Arc<Universe> {
        &self.symbols
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.words[i]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn get(&self, name: &str) -> Option<&Word> {
        self.position(name).map(|i| &self.words[i])
    }

    /// Word indices for every name in `s`.
    pub fn resolve(&self, s: &WordString) -> Result<Vec<usize>> {
        s.0.iter()
            .map(|n| self.position(n).ok_or_else(|| Error::UnknownWord(n.clone())))
            .collect()
    }

    /// Appends words, rejecting names already present.
    pub fn extended(&self, more: &[Word]) -> Result<Alphabet> {
        let mut words = self.words.clone();
        words.extend_from_slice(more);
        Alphabet::new(self.symbols.clone(), words)
    }

    /// Every string of exactly `len` words, in lexicographic alphabet order.
    pub fn strings_of_len(&self, len: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..self.words.len()).map(move |w| {
                        let mut s = prefix.clone();
                        s.push(w);
                        s
                    })
                })
                .collect();
        }
        out
    }

    pub fn string_of(&self, indices: &[usize]) -> WordString {
        WordString(indices.iter().map(|&i| self.words[i].name.clone()).collect())
    }
}

/// A finite sequence of word names; the empty string is `ε`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct WordString(pub Vec<String>);

impl WordString {
    pub fn empty() -> Self {
        WordString(Vec::new())
    }

    /// Splits on whitespace, so `"M S"` is the two-word string `M·S`.
    pub fn parse(text: &str) -> Self {
        WordString(text.split_whitespace().map(str::to_string).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for WordString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("ε")
        } else {
            f.write_str(&self.0.join(" "))
        }
    }
}

/// A fuzzy Petri net with a final marking and a word label on every transition.
#[derive(Debug, Clone, PartialEq)]
pub struct Fpncw {
    net: Fpn,
    final_marking: Marking,
    alphabet: Alphabet,
    labels: Vec<usize>,
}

impl Fpncw {
    pub fn new<S: AsRef<str>>(
        net: Fpn,
        final_marking: Marking,
        alphabet: Alphabet,
        labels: &[S],
    ) -> Result<Self> {
        let labels = labels
            .iter()
            .map(|n| {
                let n = n.as_ref();
                alphabet
                    .position(n)
                    .ok_or_else(|| Error::UnknownWord(n.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(net, final_marking, alphabet, labels)
    }

    pub fn from_indices(
        net: Fpn,
        final_marking: Marking,
        alphabet: Alphabet,
        labels: Vec<usize>,
    ) -> Result<Self> {
        if labels.len() != net.transitions().len() {
            return Err(Error::Invalid(format!(
                "{} labels for {} transitions",
                labels.len(),
                net.transitions().len()
            )));
        }
        if labels.iter().any(|&w| w >= alphabet.len()) {
            return Err(Error::Invalid("label index out of range".into()));
        }
        if final_marking.len() != net.place_count() {
            return Err(Error::LengthMismatch {
                expected: net.place_count(),
                found: final_marking.len(),
            });
        }
        Ok(Fpncw {
            net,
            final_marking,
            alphabet,
            labels,
        })
    }

    pub fn net(&self) -> &Fpn {
        &self.net
    }

    pub fn final_marking(&self) -> &Marking {
        &self.final_marking
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Word index labeling `t`.
    pub fn label_index(&self, t: TransitionId) -> usize {
        self.labels[t.0]
    }

    pub fn label(&self, t: TransitionId) -> &Word {
        self.alphabet.word(self.labels[t.0])
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Transitions labeled with word index `w`, in declaration order.
    pub fn transitions_labeled(&self, w: usize) -> impl Iterator<Item = TransitionId> + '_ {
        self.net
            .transition_ids()
            .filter(move |t| self.labels[t.0] == w)
    }

    pub fn label_of_seq(&self, seq: &[TransitionId]) -> Result<WordString> {
        seq.iter()
            .map(|&t| {
                self.net.transition(t)?;
                Ok(self.label(t).name.clone())
            })
            .collect::<Result<Vec<_>>>()
            .map(WordString)
    }

    /// Distinct markings `f(M0, t)` over all defined sequences `t` labeled `s`.
    pub fn frontier(&self, s: &WordString) -> Result<Vec<Marking>> {
        let word_ids = self.alphabet.resolve(s)?;
        Ok(self.frontier_indices(&word_ids))
    }

    pub(crate) fn frontier_indices(&self, word_ids: &[usize]) -> Vec<Marking> {
        let mut frontier = vec![self.net.initial_marking().clone()];
        for &w in word_ids {
            frontier = self.step(&frontier, w);
            if frontier.is_empty() {
                break;
            }
        }
        frontier
    }

    fn step(&self, frontier: &[Marking], w: usize) -> Vec<Marking> {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for m in frontier {
            for t in self.transitions_labeled(w) {
                if let Some(m2) = self.net.try_fire(m, t) {
                    if seen.insert(m2.clone()) {
                        next.push(m2);
                    }
                }
            }
        }
        next
    }

    fn degree_of(&self, frontier: &[Marking]) -> Degree {
        join_all(frontier.iter().map(|m| m.overlap(&self.final_marking)))
    }

    /// Degree to which `s` is accepted:
    /// `height[(∪ f(M0, t)) ∩ M1]` over defined sequences `t` labeled `s`.
    pub fn accept(&self, s: &WordString) -> Result<Degree> {
        Ok(self.degree_of(&self.frontier(s)?))
    }

    /// Brute-force acceptance over all `|T|^|s|` transition sequences.
    pub fn accept_oracle(&self, s: &WordString, depth_bound: usize) -> Result<Degree> {
        if s.len() > depth_bound {
            return Err(Error::DepthBoundExceeded {
                len: s.len(),
                bound: depth_bound,
            });
        }
        let target = self.alphabet.resolve(s)?;
        let n = self.net.transitions().len();
        let mut best = Degree::ZERO;
        let mut seq = vec![0usize; target.len()];
        if n == 0 && !target.is_empty() {
            return Ok(best);
        }
        let mut ids = vec![TransitionId(0); target.len()];
        loop {
            // A sequence whose k-th label is wrong is skipped together with
            // every sequence sharing its first k+1 transitions.
            let mismatch = (0..seq.len()).find(|&k| self.labels[seq[k]] != target[k]);
            if mismatch.is_none() {
                for (id, &i) in ids.iter_mut().zip(&seq) {
                    *id = TransitionId(i);
                }
                if let Some(m) = self.net.fire_seq(self.net.initial_marking(), &ids)? {
                    best = best.max(m.overlap(&self.final_marking));
                }
            }
            // Odometer increment over T^|s|.
            let mut k = match mismatch {
                Some(k) => {
                    seq[k + 1..].iter_mut().for_each(|i| *i = 0);
                    k + 1
                }
                None => seq.len(),
            };
            loop {
                if k == 0 {
                    return Ok(best);
                }
                k -= 1;
                seq[k] += 1;
                if seq[k] < n {
                    break;
                }
                seq[k] = 0;
            }
        }
    }

    /// Acceptance degree of every string of length at most `max_len`,
    /// shortest first, then in alphabet order.
    pub fn language_table(&self, max_len: usize) -> Vec<(WordString, Degree)> {
        let mut table = Vec::new();
        let mut layer = vec![(Vec::<usize>::new(), vec![self.net.initial_marking().clone()])];
        for len in 0..=max_len {
            for (s, frontier) in &layer {
                table.push((self.alphabet.string_of(s), self.degree_of(frontier)));
            }
            if len == max_len {
                break;
            }
            layer = layer
                .iter()
                .flat_map(|(s, frontier)| {
                    (0..self.alphabet.len()).map(move |w| {
                        let mut s2 = s.clone();
                        s2.push(w);
                        (s2, self.step(frontier, w))
                    })
                })
                .collect();
        }
        table
    }
}
