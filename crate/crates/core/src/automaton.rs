//! Fuzzy automata over words, and language-preserving conversions between
//! automata and word-labeled nets.

use std::sync::Arc;

use crate::cw::{Alphabet, Fpncw, WordString};
use crate::error::{Error, Result};
use crate::fuzzyset::{meet_all, Degree, FuzzySet, Universe};
use crate::net::{Fpn, Marking, PlaceId, Transition, DEFAULT_REACHABILITY_BUDGET};

/// Markings attached to automaton states built from a net's reachable set.
#[derive(Debug, Clone, PartialEq)]
pub struct StateMarkings {
    pub places: Arc<Universe>,
    pub markings: Vec<Marking>,
}

/// A fuzzy automaton `(Q, Σ̃, δ, q0, F)` with a fuzzy transition function.
#[derive(Debug, Clone, PartialEq)]
pub struct Facw {
    states: Arc<Universe>,
    alphabet: Alphabet,
    /// `delta[q][w]` is the fuzzy successor set of state `q` under word `w`.
    delta: Vec<Vec<FuzzySet>>,
    initial: usize,
    finals: FuzzySet,
    markings: Option<StateMarkings>,
}

impl Facw {
    /// An automaton with no transitions yet.
    pub fn new(states: Arc<Universe>, alphabet: Alphabet, initial: &str, finals: FuzzySet) -> Result<Self> {
        let initial = states
            .position(initial)
            .ok_or_else(|| Error::UnknownState(initial.to_string()))?;
        if finals.universe().as_ref() != states.as_ref() {
            return Err(Error::UniverseMismatch);
        }
        let empty = FuzzySet::empty(states.clone());
        let delta = vec![vec![empty; alphabet.len()]; states.len()];
        Ok(Facw {
            states,
            alphabet,
            delta,
            initial,
            finals,
            markings: None,
        })
    }

    pub fn states(&self) -> &Arc<Universe> {
        &self.states
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn finals(&self) -> &FuzzySet {
        &self.finals
    }

    pub fn state_markings(&self) -> Option<&StateMarkings> {
        self.markings.as_ref()
    }

    pub fn set_state_markings(&mut self, markings: StateMarkings) -> Result<()> {
        if markings.markings.len() != self.states.len()
            || markings.markings.iter().any(|m| m.len() != markings.places.len())
        {
            return Err(Error::Invalid("state markings do not match the states".into()));
        }
        self.markings = Some(markings);
        Ok(())
    }

    /// `δ(q, w)` by state and word index.
    pub fn delta(&self, state: usize, word: usize) -> &FuzzySet {
        &self.delta[state][word]
    }

    pub fn set_delta(&mut self, state: usize, word: usize, successors: FuzzySet) -> Result<()> {
        if state >= self.states.len() || word >= self.alphabet.len() {
            return Err(Error::Invalid("state or word index out of range".into()));
        }
        if successors.universe().as_ref() != self.states.as_ref() {
            return Err(Error::UniverseMismatch);
        }
        self.delta[state][word] = successors;
        Ok(())
    }

    /// Name-based form of [`Facw::set_delta`].
    pub fn set_transition(&mut self, from: &str, word: &str, to: &[(&str, f64)]) -> Result<()> {
        let state = self
            .states
            .position(from)
            .ok_or_else(|| Error::UnknownState(from.to_string()))?;
        let w = self
            .alphabet
            .position(word)
            .ok_or_else(|| Error::UnknownWord(word.to_string()))?;
        let successors = FuzzySet::from_pairs(self.states.clone(), to).map_err(|e| match e {
            Error::UnknownSymbol(s) => Error::UnknownState(s),
            other => other,
        })?;
        self.set_delta(state, w, successors)
    }

    /// Extended transition function:
    /// `δ(p, ε) = 1/p`, `δ(p, S·W) = ∪_q [δ(p, S)(q) · δ(q, W)]`.
    pub fn delta_ext(&self, from: usize, s: &WordString) -> Result<FuzzySet> {
        let words = self.alphabet.resolve(s)?;
        Ok(self.delta_ext_indices(from, &words))
    }

    fn delta_ext_indices(&self, from: usize, words: &[usize]) -> FuzzySet {
        let mut current = FuzzySet::singleton(self.states.clone(), from);
        for &w in words {
            current = self.step(&current, w);
        }
        current
    }

    fn step(&self, current: &FuzzySet, w: usize) -> FuzzySet {
        let mut next = FuzzySet::empty(self.states.clone());
        for q in current.support() {
            next = next
                .union(&self.delta[q][w].scale(current.grade(q)))
                .expect("all successor sets share the state universe");
        }
        next
    }

    /// `L(S) = height(δ(q0, S) ∩ F)`.
    pub fn accept(&self, s: &WordString) -> Result<Degree> {
        self.delta_ext(self.initial, s)?.overlap(&self.finals)
    }

    /// Acceptance degree of every string of length at most `max_len`.
    pub fn language_table(&self, max_len: usize) -> Vec<(WordString, Degree)> {
        let mut table = Vec::new();
        let start = FuzzySet::singleton(self.states.clone(), self.initial);
        let mut layer = vec![(Vec::<usize>::new(), start)];
        for len in 0..=max_len {
            for (s, reached) in &layer {
                let degree = reached.overlap(&self.finals).expect("same universe");
                table.push((self.alphabet.string_of(s), degree));
            }
            if len == max_len {
                break;
            }
            layer = layer
                .iter()
                .flat_map(|(s, reached)| {
                    (0..self.alphabet.len()).map(move |w| {
                        let mut s2 = s.clone();
                        s2.push(w);
                        (s2, self.step(reached, w))
                    })
                })
                .collect();
        }
        table
    }

    /// Every positive `δ(q, W)(q')` as `(q, W, q', degree)`, ordered by state,
    /// then word, then target.
    pub fn positive_transitions(&self) -> Vec<(usize, usize, usize, Degree)> {
        let mut out = Vec::new();
        for q in 0..self.states.len() {
            for w in 0..self.alphabet.len() {
                for q2 in self.delta[q][w].support() {
                    out.push((q, w, q2, self.delta[q][w].grade(q2)));
                }
            }
        }
        out
    }
}

/// Net name of the transition simulating `δ(q, W)(q') > 0`.
pub fn triple_name(from: &str, word: &str, to: &str) -> String {
    format!("t({from},{word},{to})")
}

/// Builds a net with one place per state and one transition per positive
/// triple `δ(q, W)(q') > 0`. Every transition uses the smallest positive
/// degree of the whole automaton as its threshold.
pub fn facw_to_fpncw(m: &Facw) -> Result<Fpncw> {
    let triples = m.positive_transitions();
    if triples.is_empty() {
        return Err(Error::NoPositiveDelta);
    }
    let alpha = meet_all(triples.iter().map(|t| t.3));
    let states = m.states();
    let words = m.alphabet();
    let transitions = triples
        .iter()
        .map(|&(q, w, q2, degree)| {
            Transition::new(
                triple_name(states.name(q), &words.word(w).name, states.name(q2)),
                alpha,
                vec![PlaceId(q)],
                vec![(PlaceId(q2), degree)],
            )
        })
        .collect();
    let mut initial = vec![Degree::ZERO; states.len()];
    initial[m.initial()] = Degree::ONE;
    let initial = Marking::new(initial);
    let net = Fpn::new(states.clone(), transitions, initial)?;
    let final_marking = Marking::new(m.finals().grades().to_vec());
    let labels = triples.iter().map(|t| t.1).collect();
    Fpncw::from_indices(net, final_marking, words.clone(), labels)
}

/// Builds a crisp automaton whose states are the reachable markings of `n`,
/// named `q0, q1, …` in breadth-first order, with `F(q) = height(q ∩ M1)`.
pub fn fpncw_to_facw(n: &Fpncw) -> Result<Facw> {
    let graph = n.net().reachability_graph(DEFAULT_REACHABILITY_BUDGET)?;
    let states = Universe::shared((0..graph.markings.len()).map(|i| format!("q{i}")))?;
    let finals = FuzzySet::from_grades(
        states.clone(),
        graph
            .markings
            .iter()
            .map(|q| q.overlap(n.final_marking()))
            .collect(),
    )?;
    let mut m = Facw::new(states.clone(), n.alphabet().clone(), "q0", finals)?;
    let mut grades = vec![vec![vec![Degree::ZERO; states.len()]; n.alphabet().len()]; states.len()];
    for &(from, t, to) in &graph.edges {
        grades[from][n.label_index(t)][to] = Degree::ONE;
    }
    for (q, per_word) in grades.into_iter().enumerate() {
        for (w, g) in per_word.into_iter().enumerate() {
            m.set_delta(q, w, FuzzySet::from_grades(states.clone(), g)?)?;
        }
    }
    m.set_state_markings(StateMarkings {
        places: n.net().places().clone(),
        markings: graph.markings,
    })?;
    Ok(m)
}
