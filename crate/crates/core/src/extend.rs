//! Extending a word-labeled net to new words by fuzzy reasoning.
//!
//! For every rule group and every new word, the rules whose labels overlap the
//! word are combined into one new transition. It keeps the group's input
//! places, takes the largest threshold among the contributing transitions,
//! and gets the inferred distribution as its output truth values. Original
//! transitions are never touched, so the result contains the input net as a
//! full subnet.

use std::fmt::Write as _;

use crate::cw::{Fpncw, Word};
use crate::error::{Error, Result};
use crate::fuzzyset::{join_all, Degree};
use crate::net::{Fpn, Marking, PlaceId, Transition, TransitionId};
use crate::reasoner::{infer, matching_rules, RuleBase};

/// Where a synthesized transition came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Origin {
    /// Zero-based rule group index.
    pub group: usize,
    /// Zero-based index among the new words.
    pub word: usize,
    /// Contributing original transitions, in declaration order.
    pub rules: Vec<TransitionId>,
}

/// An extended net: original transitions first, synthesized ones after,
/// original words first, new words after.
#[derive(Debug, Clone, PartialEq)]
pub struct FpnCmw {
    net: Fpncw,
    origins: Vec<Option<Origin>>,
    base_words: usize,
}

/// Name given to the transition synthesized for group `group` and new word `word`
/// (both zero-based).
pub fn new_transition_name(group: usize, word: usize) -> String {
    format!("t'_{}_{}", group + 1, word + 1)
}

impl FpnCmw {
    pub fn new(net: Fpncw, origins: Vec<Option<Origin>>, base_words: usize) -> Result<Self> {
        let transitions = net.net().transitions().len();
        if origins.len() != transitions {
            return Err(Error::Invalid(format!(
                "{} origins for {} transitions",
                origins.len(),
                transitions
            )));
        }
        if base_words > net.alphabet().len() {
            return Err(Error::Invalid("more base words than words".into()));
        }
        let base_transitions = origins.iter().take_while(|o| o.is_none()).count();
        for origin in &origins[base_transitions..] {
            let Some(origin) = origin else {
                return Err(Error::Invalid(
                    "original transitions must precede synthesized ones".into(),
                ));
            };
            if origin.rules.is_empty() {
                return Err(Error::Invalid("synthesized transition without rules".into()));
            }
            if origin.rules.iter().any(|t| t.0 >= base_transitions) {
                return Err(Error::Invalid(
                    "synthesized transition refers to a non-original rule".into(),
                ));
            }
        }
        Ok(FpnCmw {
            net,
            origins,
            base_words,
        })
    }

    pub fn net(&self) -> &Fpncw {
        &self.net
    }

    pub fn into_net(self) -> Fpncw {
        self.net
    }

    pub fn origins(&self) -> &[Option<Origin>] {
        &self.origins
    }

    pub fn origin(&self, t: TransitionId) -> Option<&Origin> {
        self.origins.get(t.0).and_then(Option::as_ref)
    }

    pub fn base_word_count(&self) -> usize {
        self.base_words
    }

    pub fn base_transition_count(&self) -> usize {
        self.origins.iter().filter(|o| o.is_none()).count()
    }

    /// Names of the words added by the extension.
    pub fn new_words(&self) -> &[Word] {
        &self.net.alphabet().words()[self.base_words..]
    }

    /// The subnet spanned by the original transitions and words.
    pub fn original(&self) -> Fpncw {
        let n = &self.net;
        let keep = self.base_transition_count();
        let fpn = Fpn::new(
            n.net().places().clone(),
            n.net().transitions()[..keep].to_vec(),
            n.net().initial_marking().clone(),
        )
        .expect("prefix of a valid net");
        let alphabet = crate::cw::Alphabet::new(
            n.alphabet().symbols().clone(),
            n.alphabet().words()[..self.base_words].to_vec(),
        )
        .expect("prefix of a valid alphabet");
        Fpncw::from_indices(
            fpn,
            n.final_marking().clone(),
            alphabet,
            n.labels()[..keep].to_vec(),
        )
        .expect("original labels name original words")
    }

    /// Checks the firing identity relating the extended net to the original one.
    ///
    /// For an original transition the extended firing must equal the original
    /// firing. For a synthesized `t'` with contributing transitions `t_s` and
    /// `h_s = height(l(t_s) ∩ l(t'))`, each place `p` must satisfy
    /// `f'(M, t')(p) = [M(p) ∨] ∨_s [h_s ∧ f(M, t_s)(p)]`, where `M(p)` is
    /// joined only for places outside `I'(t')`.
    ///
    /// Returns [`Error::TransitionDisabled`] when `t'` cannot fire at `m`.
    pub fn check_extension_identity(&self, m: &Marking, t: TransitionId) -> Result<bool> {
        let extended = self.net.net();
        let lhs = extended.fire(m, t)?;
        let original = self.original();
        let base = original.net();
        let Some(origin) = self.origin(t) else {
            return Ok(base.fire(m, t).is_ok_and(|rhs| rhs == lhs));
        };
        let new_label = &self.net.label(t).meaning;
        let mut contributions = Vec::with_capacity(origin.rules.len());
        for &s in &origin.rules {
            let Some(fired) = base.try_fire(m, s) else {
                // Definedness must carry over to every contributing transition.
                return Ok(false);
            };
            let h = original.label(s).meaning.overlap(new_label)?;
            contributions.push((h, fired));
        }
        let tr = extended.transition(t)?;
        let rhs: Vec<Degree> = (0..m.len())
            .map(|k| {
                let joined = join_all(contributions.iter().map(|&(h, ref f)| h.min(f.degrees()[k])));
                if tr.is_input(PlaceId(k)) {
                    joined
                } else {
                    m.degrees()[k].max(joined)
                }
            })
            .collect();
        Ok(Marking::new(rhs) == lhs)
    }

    /// Human-readable provenance of every synthesized transition.
    pub fn explanation(&self) -> String {
        let mut out = String::new();
        let net = self.net.net();
        for (i, origin) in self.origins.iter().enumerate() {
            let Some(origin) = origin else { continue };
            let t = TransitionId(i);
            let tr = &net.transitions()[i];
            let label = self.net.label(t);
            let _ = writeln!(
                out,
                "{} (group {}, word {}) alpha={}",
                tr.name(),
                origin.group + 1,
                label.name,
                tr.alpha()
            );
            for &s in &origin.rules {
                let source = self.net.label(s);
                let h = source
                    .meaning
                    .overlap(&label.meaning)
                    .unwrap_or(Degree::ZERO);
                let _ = writeln!(
                    out,
                    "  {} [{}]: height({} ∩ {}) = {}, alpha={}",
                    net.transitions()[s.0].name(),
                    source.name,
                    source.name,
                    label.name,
                    h,
                    net.transitions()[s.0].alpha()
                );
            }
        }
        out
    }
}

/// Extends `n` with `new_words`, synthesizing one transition per rule group
/// and new word that some rule of the group matches.
pub fn extend(n: &Fpncw, new_words: &[Word]) -> Result<FpnCmw> {
    let alphabet = n.alphabet().extended(new_words)?;
    let base_words = n.alphabet().len();
    let rule_base = RuleBase::from_net(n);
    let net = n.net();

    let mut transitions: Vec<Transition> = net.transitions().to_vec();
    let mut labels: Vec<usize> = n.labels().to_vec();
    let mut origins: Vec<Option<Origin>> = vec![None; transitions.len()];

    for group in 0..rule_base.group_count() {
        let rules = rule_base.group(group);
        for (j, word) in new_words.iter().enumerate() {
            let matched = matching_rules(&rules, &word.meaning)?;
            if matched.is_empty() {
                continue;
            }
            let distribution = infer(&matched, &word.meaning)?;
            let outputs: Vec<(PlaceId, Degree)> = (0..net.place_count())
                .filter(|&p| matched.iter().any(|r| r.consequent.grade(p).is_positive()))
                .map(|p| (PlaceId(p), distribution.grade(p)))
                .collect();
            let alpha = join_all(
                matched
                    .iter()
                    .map(|r| net.transitions()[r.source.0].alpha()),
            );
            transitions.push(Transition::new(
                new_transition_name(group, j),
                alpha,
                rule_base.group_places(group).to_vec(),
                outputs,
            ));
            labels.push(base_words + j);
            origins.push(Some(Origin {
                group,
                word: j,
                rules: matched.iter().map(|r| r.source).collect(),
            }));
        }
    }

    let fpn = Fpn::new(
        net.places().clone(),
        transitions,
        net.initial_marking().clone(),
    )?;
    let extended = Fpncw::from_indices(fpn, n.final_marking().clone(), alphabet, labels)?;
    FpnCmw::new(extended, origins, base_words)
}
