//! Mamdani rule bases extracted from word-labeled nets, and max-min inference.
//!
//! Each transition `t` yields one rule: if every input place holds a full
//! token and the transition label is `l(t)`, the next-state distribution is
//! `D_t = Σ β(t, p)/p`. Rules sharing an antecedent place set form a group.

use std::fmt;
use std::sync::Arc;

use crate::cw::{Fpncw, Word};
use crate::error::{Error, Result};
use crate::fuzzyset::{join_all, meet_all, Degree, FuzzySet, Universe};
use crate::net::{PlaceId, TransitionId};

#[derive(Debug, Clone, PartialEq)]
pub struct Rule {
    pub source: TransitionId,
    pub source_name: String,
    /// `I(t)`, sorted by place order.
    pub antecedents: Vec<PlaceId>,
    pub label: Word,
    /// `D_t` over the places.
    pub consequent: FuzzySet,
}

impl Rule {
    /// The same rule in general IF-THEN form: one singleton antecedent per
    /// input place followed by the label.
    pub fn to_general(&self) -> GeneralRule {
        let places = self.consequent.universe().clone();
        let mut antecedents: Vec<FuzzySet> = self
            .antecedents
            .iter()
            .map(|p| FuzzySet::singleton(places.clone(), p.0))
            .collect();
        antecedents.push(self.label.meaning.clone());
        GeneralRule {
            antecedents,
            consequent: self.consequent.clone(),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let places = self.consequent.universe();
        write!(f, "R_{}: IF ", self.source_name)?;
        for p in &self.antecedents {
            let name = places.name(p.0);
            write!(f, "{name} is 1/{name} AND ")?;
        }
        write!(
            f,
            "label of transition is {}, THEN next state distribution is D_{} = {}",
            self.label.name, self.source_name, self.consequent
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RuleBase {
    places: Arc<Universe>,
    rules: Vec<Rule>,
    groups: Vec<Vec<usize>>,
}

impl RuleBase {
    /// One rule per transition, grouped by identical input place sets.
    /// Groups are ordered by their first transition.
    pub fn from_net(n: &Fpncw) -> Self {
        let net = n.net();
        let places = net.places().clone();
        let mut rules: Vec<Rule> = Vec::with_capacity(net.transitions().len());
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for (i, t) in net.transitions().iter().enumerate() {
            let mut grades = vec![Degree::ZERO; places.len()];
            for &(p, beta) in t.outputs() {
                grades[p.0] = beta;
            }
            let consequent = FuzzySet::from_grades(places.clone(), grades)
                .expect("one grade per place");
            let rule = Rule {
                source: TransitionId(i),
                source_name: t.name().to_string(),
                antecedents: t.inputs().to_vec(),
                label: n.label(TransitionId(i)).clone(),
                consequent,
            };
            match groups
                .iter_mut()
                .find(|g| rules[g[0]].antecedents == rule.antecedents)
            {
                Some(g) => g.push(i),
                None => groups.push(vec![i]),
            }
            rules.push(rule);
        }
        RuleBase {
            places,
            rules,
            groups,
        }
    }

    pub fn places(&self) -> &Arc<Universe> {
        &self.places
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn group_count(&self) -> usize {
        self.groups.len()
    }

    /// Rules of group `i`, in transition order.
    pub fn group(&self, i: usize) -> Vec<&Rule> {
        self.groups[i].iter().map(|&r| &self.rules[r]).collect()
    }

    /// Shared antecedent places of group `i`.
    pub fn group_places(&self, i: usize) -> &[PlaceId] {
        &self.rules[self.groups[i][0]].antecedents
    }
}

impl fmt::Display for RuleBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, group) in self.groups.iter().enumerate() {
            let places: Vec<&str> = self
                .group_places(i)
                .iter()
                .map(|p| self.places.name(p.0))
                .collect();
            writeln!(f, "group {} {{{}}}", i + 1, places.join(", "))?;
            for &r in group {
                writeln!(f, "  {}", self.rules[r])?;
            }
        }
        Ok(())
    }
}

/// Rules of `group` whose label overlaps `word` with positive height.
pub fn matching_rules<'a>(group: &[&'a Rule], word: &FuzzySet) -> Result<Vec<&'a Rule>> {
    let mut out = Vec::new();
    for &r in group {
        if r.label.meaning.overlap(word)?.is_positive() {
            out.push(r);
        }
    }
    Ok(out)
}

/// Conclusion distribution for the fact "every antecedent place holds a full
/// token and the label is `word`":
/// `D(p) = ∨_s [height(l(t_s) ∩ word) ∧ D_{t_s}(p)]`.
pub fn infer(rules: &[&Rule], word: &FuzzySet) -> Result<FuzzySet> {
    let first = rules.first().ok_or(Error::EmptyRuleSet)?;
    if rules.iter().any(|r| r.antecedents != first.antecedents) {
        return Err(Error::RuleGroupMismatch);
    }
    let strengths = rules
        .iter()
        .map(|r| r.label.meaning.overlap(word))
        .collect::<Result<Vec<_>>>()?;
    let places = first.consequent.universe().clone();
    let grades = (0..places.len())
        .map(|p| {
            join_all(
                rules
                    .iter()
                    .zip(&strengths)
                    .map(|(r, &h)| h.min(r.consequent.grade(p))),
            )
        })
        .collect();
    FuzzySet::from_grades(places, grades)
}

/// `IF x_1 is A_1 AND … AND x_q is A_q THEN y is B`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralRule {
    pub antecedents: Vec<FuzzySet>,
    pub consequent: FuzzySet,
}

/// Generalized modus ponens with Mamdani max-min implication:
/// `B'(y) = ∨_i ∧_j ∨_{x_j} [A_ij(x_j) ∧ A'_j(x_j) ∧ B_i(y)]`.
pub fn gmp(rules: &[GeneralRule], facts: &[FuzzySet]) -> Result<FuzzySet> {
    let first = rules.first().ok_or(Error::EmptyRuleSet)?;
    let out_universe = first.consequent.universe().clone();
    for r in rules {
        if r.antecedents.len() != facts.len() {
            return Err(Error::ArityMismatch {
                expected: r.antecedents.len(),
                found: facts.len(),
            });
        }
        if r.consequent.universe().as_ref() != out_universe.as_ref() {
            return Err(Error::UniverseMismatch);
        }
        for (a, fact) in r.antecedents.iter().zip(facts) {
            if a.universe().as_ref() != fact.universe().as_ref() {
                return Err(Error::UniverseMismatch);
            }
        }
    }
    let grades = (0..out_universe.len())
        .map(|y| {
            join_all(rules.iter().map(|r| {
                let b = r.consequent.grade(y);
                meet_all(r.antecedents.iter().zip(facts).map(|(a, fact)| {
                    join_all(
                        (0..a.universe().len()).map(|x| a.grade(x).min(fact.grade(x)).min(b)),
                    )
                }))
            }))
        })
        .collect();
    FuzzySet::from_grades(out_universe, grades)
}

/// Facts `1/p` for each place in `places`, followed by `word`.
pub fn singleton_facts(universe: &Arc<Universe>, places: &[PlaceId], word: &FuzzySet) -> Vec<FuzzySet> {
    let mut facts: Vec<FuzzySet> = places
        .iter()
        .map(|p| FuzzySet::singleton(universe.clone(), p.0))
        .collect();
    facts.push(word.clone());
    facts
}
