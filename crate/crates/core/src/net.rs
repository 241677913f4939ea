//! Fuzzy Petri nets: structure, enabledness, max-min firing and reachability.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fuzzyset::{join_all, meet_all, Degree, Universe};

/// Default cap on the number of distinct markings explored by [`Fpn::reachability_graph`].
pub const DEFAULT_REACHABILITY_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaceId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TransitionId(pub usize);

/// A fuzzy marking: one degree per place, in place declaration order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Marking(Vec<Degree>);

impl Marking {
    pub fn new(degrees: Vec<Degree>) -> Self {
        Marking(degrees)
    }

    pub fn zeros(len: usize) -> Self {
        Marking(vec![Degree::ZERO; len])
    }

    pub fn from_values(values: &[f64]) -> Result<Self> {
        values
            .iter()
            .map(|&v| Degree::new(v))
            .collect::<Result<Vec<_>>>()
            .map(Marking)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degrees(&self) -> &[Degree] {
        &self.0
    }

    pub fn get(&self, place: PlaceId) -> Degree {
        self.0[place.0]
    }

    pub fn values(&self) -> Vec<f64> {
        self.0.iter().map(|d| d.value()).collect()
    }

    /// Pointwise minimum; both markings must have the same length.
    pub fn intersect(&self, other: &Marking) -> Marking {
        debug_assert_eq!(self.len(), other.len());
        Marking(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn height(&self) -> Degree {
        join_all(self.0.iter().copied())
    }

    /// `height(self ∩ other)`.
    pub fn overlap(&self, other: &Marking) -> Degree {
        join_all(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)))
    }
}

impl fmt::Debug for Marking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Bracketed vector, e.g. `[0.9, 1, 0, 0, 0]`.
impl fmt::Display for Marking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("]")
    }
}

/// Accepts `[0.9, 1, 0]`, `0.9,1,0` or `0.9 1 0`.
impl FromStr for Marking {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner.strip_prefix('[').unwrap_or(inner);
        let inner = inner.strip_suffix(']').unwrap_or(inner);
        inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|tok| !tok.is_empty())
            .map(|tok| {
                let v: f64 = tok
                    .parse()
                    .map_err(|_| Error::Invalid(format!("not a number: `{tok}`")))?;
                Degree::new(v)
            })
            .collect::<Result<Vec<_>>>()
            .map(Marking)
    }
}

/// One transition with its threshold, input places and weighted output arcs.
#[derive(Debug, Clone, PartialEq)]
pub struct Transition {
    name: String,
    alpha: Degree,
    inputs: Vec<PlaceId>,
    outputs: Vec<(PlaceId, Degree)>,
}

impl Transition {
    pub fn new(
        name: impl Into<String>,
        alpha: Degree,
        mut inputs: Vec<PlaceId>,
        mut outputs: Vec<(PlaceId, Degree)>,
    ) -> Self {
        inputs.sort();
        outputs.sort_by_key(|&(p, _)| p);
        Transition {
            name: name.into(),
            alpha,
            inputs,
            outputs,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alpha(&self) -> Degree {
        self.alpha
    }

    /// Input places, sorted by declaration order.
    pub fn inputs(&self) -> &[PlaceId] {
        &self.inputs
    }

    /// Output arcs with their truth values, sorted by place.
    pub fn outputs(&self) -> &[(PlaceId, Degree)] {
        &self.outputs
    }

    pub fn is_input(&self, place: PlaceId) -> bool {
        self.inputs.binary_search(&place).is_ok()
    }

    /// `β(t, p)`, or `None` when `(t, p)` is not an output arc.
    pub fn beta(&self, place: PlaceId) -> Option<Degree> {
        self.outputs
            .binary_search_by_key(&place, |&(p, _)| p)
            .ok()
            .map(|i| self.outputs[i].1)
    }
}

/// A structural problem reported by [`Fpn::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    AlphaOutOfRange { transition: String },
    BetaOutOfRange { transition: String, place: String },
    WeightOutOfRange { place: String, transition: String },
    IsolatedPlace { place: String },
    IsolatedTransition { transition: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::AlphaOutOfRange { transition } => {
                write!(f, "alpha out of (0,1] at transition {transition}")
            }
            Violation::BetaOutOfRange { transition, place } => {
                write!(f, "beta out of (0,1] on arc {transition} -> {place}")
            }
            Violation::WeightOutOfRange { place, transition } => {
                write!(f, "weight out of (0,1] on arc {place} -> {transition}")
            }
            Violation::IsolatedPlace { place } => write!(f, "isolated place {place}"),
            Violation::IsolatedTransition { transition } => {
                write!(f, "isolated transition {transition}")
            }
        }
    }
}

/// A fuzzy Petri net `(P, T, I, O, α, β, M0)`.
#[derive(Debug, Clone)]
pub struct Fpn {
    places: Arc<Universe>,
    transitions: Vec<Transition>,
    transition_index: HashMap<String, usize>,
    initial: Marking,
}

impl PartialEq for Fpn {
    fn eq(&self, other: &Self) -> bool {
        self.places == other.places
            && self.transitions == other.transitions
            && self.initial == other.initial
    }
}

impl Fpn {
    pub fn new(places: Arc<Universe>, transitions: Vec<Transition>, initial: Marking) -> Result<Self> {
        if initial.len() != places.len() {
            return Err(Error::LengthMismatch {
                expected: places.len(),
                found: initial.len(),
            });
        }
        let mut transition_index = HashMap::with_capacity(transitions.len());
        for (i, t) in transitions.iter().enumerate() {
            if transition_index.insert(t.name.clone(), i).is_some() {
                return Err(Error::DuplicateName(t.name.clone()));
            }
            let in_range = |p: PlaceId| p.0 < places.len();
            if !t.inputs.iter().all(|&p| in_range(p))
                || !t.outputs.iter().all(|&(p, _)| in_range(p))
            {
                return Err(Error::Invalid(format!(
                    "transition {} refers to a place index out of range",
                    t.name
                )));
            }
            if t.inputs.windows(2).any(|w| w[0] == w[1])
                || t.outputs.windows(2).any(|w| w[0].0 == w[1].0)
            {
                return Err(Error::Invalid(format!(
                    "transition {} has a duplicate arc",
                    t.name
                )));
            }
        }
        Ok(Fpn {
            places,
            transitions,
            transition_index,
            initial,
        })
    }

    pub fn builder<I, S>(places: I) -> FpnBuilder
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        FpnBuilder::new(places)
    }

    pub fn places(&self) -> &Arc<Universe> {
        &self.places
    }

    pub fn place_count(&self) -> usize {
        self.places.len()
    }

    pub fn place_name(&self, place: PlaceId) -> &str {
        self.places.name(place.0)
    }

    pub fn place_id(&self, name: &str) -> Result<PlaceId> {
        self.places
            .position(name)
            .map(PlaceId)
            .ok_or_else(|| Error::UnknownPlace(name.to_string()))
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn transition_ids(&self) -> impl Iterator<Item = TransitionId> {
        (0..self.transitions.len()).map(TransitionId)
    }

    pub fn transition_id(&self, name: &str) -> Result<TransitionId> {
        self.transition_index
            .get(name)
            .map(|&i| TransitionId(i))
            .ok_or_else(|| Error::UnknownTransition(name.to_string()))
    }

    pub fn transition(&self, t: TransitionId) -> Result<&Transition> {
        self.transitions
            .get(t.0)
            .ok_or_else(|| Error::UnknownTransition(format!("#{}", t.0)))
    }

    /// Resolves a whitespace-separated list of transition names.
    pub fn parse_sequence(&self, text: &str) -> Result<Vec<TransitionId>> {
        text.split_whitespace()
            .map(|name| self.transition_id(name))
            .collect()
    }

    pub fn initial_marking(&self) -> &Marking {
        &self.initial
    }

    pub fn parse_marking(&self, text: &str) -> Result<Marking> {
        let m: Marking = text.parse()?;
        self.check_marking(&m)?;
        Ok(m)
    }

    fn check_marking(&self, m: &Marking) -> Result<()> {
        if m.len() == self.places.len() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.places.len(),
                found: m.len(),
            })
        }
    }

    /// Reports every structural constraint the net violates.
    pub fn validate(&self) -> Vec<Violation> {
        let mut violations = Vec::new();
        let mut touched = vec![false; self.places.len()];
        for t in &self.transitions {
            if !t.alpha.is_positive() {
                violations.push(Violation::AlphaOutOfRange {
                    transition: t.name.clone(),
                });
            }
            for &(p, beta) in &t.outputs {
                if !beta.is_positive() {
                    violations.push(Violation::BetaOutOfRange {
                        transition: t.name.clone(),
                        place: self.place_name(p).to_string(),
                    });
                }
                touched[p.0] = true;
            }
            for &p in &t.inputs {
                touched[p.0] = true;
            }
            if t.inputs.is_empty() && t.outputs.is_empty() {
                violations.push(Violation::IsolatedTransition {
                    transition: t.name.clone(),
                });
            }
        }
        for (i, &hit) in touched.iter().enumerate() {
            if !hit {
                violations.push(Violation::IsolatedPlace {
                    place: self.places.name(i).to_string(),
                });
            }
        }
        violations
    }

    fn mu_of(&self, m: &Marking, t: &Transition) -> Degree {
        meet_all(t.inputs.iter().map(|&p| m.get(p)))
    }

    /// `μ_{M,t}`: the least degree among the input places of `t` (1 when it has none).
    pub fn mu(&self, m: &Marking, t: TransitionId) -> Result<Degree> {
        let tr = self.transition(t)?;
        self.check_marking(m)?;
        Ok(self.mu_of(m, tr))
    }

    pub fn is_enabled(&self, m: &Marking, t: TransitionId) -> Result<bool> {
        let tr = self.transition(t)?;
        self.check_marking(m)?;
        Ok(self.mu_of(m, tr) >= tr.alpha)
    }

    pub fn enabled(&self, m: &Marking) -> Result<Vec<TransitionId>> {
        self.check_marking(m)?;
        Ok(self
            .transition_ids()
            .filter(|&t| {
                let tr = &self.transitions[t.0];
                self.mu_of(m, tr) >= tr.alpha
            })
            .collect())
    }

    /// Fires `t` at `m`, or `None` if `t` is not enabled there.
    pub(crate) fn try_fire(&self, m: &Marking, t: TransitionId) -> Option<Marking> {
        let tr = &self.transitions[t.0];
        let mu = self.mu_of(m, tr);
        if mu < tr.alpha {
            return None;
        }
        let mut next = m.0.clone();
        for &p in &tr.inputs {
            next[p.0] = Degree::ZERO;
        }
        for &(p, beta) in &tr.outputs {
            let gained = mu.min(beta);
            next[p.0] = if tr.is_input(p) {
                gained
            } else {
                next[p.0].max(gained)
            };
        }
        Some(Marking(next))
    }

    /// The state transition function: fires one enabled transition.
    ///
    /// Input places lose their token; output places receive `μ ∧ β`, joined
    /// with the old degree unless the place was also an input.
    pub fn fire(&self, m: &Marking, t: TransitionId) -> Result<Marking> {
        let tr = self.transition(t)?;
        self.check_marking(m)?;
        self.try_fire(m, t)
            .ok_or_else(|| Error::TransitionDisabled(tr.name.clone()))
    }

    /// Fires a sequence left to right; `Ok(None)` as soon as a step is disabled.
    pub fn fire_seq(&self, m: &Marking, seq: &[TransitionId]) -> Result<Option<Marking>> {
        self.check_marking(m)?;
        for &t in seq {
            self.transition(t)?;
        }
        let mut current = m.clone();
        for &t in seq {
            match self.try_fire(&current, t) {
                Some(next) => current = next,
                None => return Ok(None),
            }
        }
        Ok(Some(current))
    }

    /// All markings reachable from `M0`, in breadth-first discovery order.
    pub fn reachable(&self) -> Result<Vec<Marking>> {
        Ok(self.reachability_graph(DEFAULT_REACHABILITY_BUDGET)?.markings)
    }

    pub fn reachability_graph(&self, budget: usize) -> Result<ReachabilityGraph> {
        let mut index: HashMap<Marking, usize> = HashMap::new();
        let mut markings = vec![self.initial.clone()];
        let mut edges = Vec::new();
        index.insert(self.initial.clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(from) = queue.pop_front() {
            for t in self.transition_ids() {
                let Some(next) = self.try_fire(&markings[from], t) else {
                    continue;
                };
                let to = match index.get(&next) {
                    Some(&i) => i,
                    None => {
                        if markings.len() >= budget {
                            return Err(Error::ReachabilityBudgetExceeded(budget));
                        }
                        let i = markings.len();
                        index.insert(next.clone(), i);
                        markings.push(next);
                        queue.push_back(i);
                        i
                    }
                };
                edges.push((from, t, to));
            }
        }
        Ok(ReachabilityGraph { markings, edges })
    }

    /// Same net with a different initial marking.
    pub fn with_initial(&self, initial: Marking) -> Result<Fpn> {
        self.check_marking(&initial)?;
        let mut net = self.clone();
        net.initial = initial;
        Ok(net)
    }
}

/// Reachable markings (index 0 is `M0`) and the firing edges between them.
#[derive(Debug, Clone)]
pub struct ReachabilityGraph {
    pub markings: Vec<Marking>,
    pub edges: Vec<(usize, TransitionId, usize)>,
}

/// Name-based construction helper for [`Fpn`].
pub struct FpnBuilder {
    places: Result<Arc<Universe>>,
    transitions: Vec<Transition>,
    initial: Option<Vec<f64>>,
    error: Option<Error>,
}

impl FpnBuilder {
    pub fn new<I, S>(places: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        FpnBuilder {
            places: Universe::shared(places),
            transitions: Vec::new(),
            initial: None,
            error: None,
        }
    }

    fn resolve(&self, name: &str) -> Result<PlaceId> {
        let places = self.places.as_ref().map_err(Clone::clone)?;
        places
            .position(name)
            .map(PlaceId)
            .ok_or_else(|| Error::UnknownPlace(name.to_string()))
    }

    pub fn transition(
        mut self,
        name: &str,
        alpha: f64,
        inputs: &[&str],
        outputs: &[(&str, f64)],
    ) -> Self {
        let built = (|| -> Result<Transition> {
            let inputs = inputs
                .iter()
                .map(|p| self.resolve(p))
                .collect::<Result<Vec<_>>>()?;
            let outputs = outputs
                .iter()
                .map(|&(p, beta)| Ok((self.resolve(p)?, Degree::new(beta)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(Transition::new(name, Degree::new(alpha)?, inputs, outputs))
        })();
        match built {
            Ok(t) => self.transitions.push(t),
            Err(e) => {
                self.error.get_or_insert(e);
            }
        }
        self
    }

    pub fn initial(mut self, values: &[f64]) -> Self {
        self.initial = Some(values.to_vec());
        self
    }

    pub fn build(self) -> Result<Fpn> {
        if let Some(e) = self.error {
            return Err(e);
        }
        let places = self.places?;
        let initial = match self.initial {
            Some(v) => Marking::from_values(&v)?,
            None => Marking::zeros(places.len()),
        };
        Fpn::new(places, self.transitions, initial)
    }
}

/// A fuzzy Petri net with an extra truth value `w` on every input arc.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedFpn {
    net: Fpn,
    /// `weights[t][k]` belongs to the arc `(inputs(t)[k], t)`.
    weights: Vec<Vec<Degree>>,
}

impl WeightedFpn {
    pub fn new(net: Fpn, weights: Vec<Vec<Degree>>) -> Result<Self> {
        if weights.len() != net.transitions.len() {
            return Err(Error::LengthMismatch {
                expected: net.transitions.len(),
                found: weights.len(),
            });
        }
        for (t, w) in net.transitions.iter().zip(&weights) {
            if w.len() != t.inputs.len() {
                return Err(Error::LengthMismatch {
                    expected: t.inputs.len(),
                    found: w.len(),
                });
            }
        }
        Ok(WeightedFpn { net, weights })
    }

    /// Every input arc weighted 1; same transition function as `net`.
    pub fn from_fpn(net: Fpn) -> Self {
        let weights = net
            .transitions
            .iter()
            .map(|t| vec![Degree::ONE; t.inputs.len()])
            .collect();
        WeightedFpn { net, weights }
    }

    pub fn net(&self) -> &Fpn {
        &self.net
    }

    pub fn weights(&self, t: TransitionId) -> &[Degree] {
        &self.weights[t.0]
    }

    pub fn weight(&self, place: PlaceId, t: TransitionId) -> Option<Degree> {
        let tr = &self.net.transitions[t.0];
        tr.inputs
            .binary_search(&place)
            .ok()
            .map(|k| self.weights[t.0][k])
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut violations = self.net.validate();
        for (t, w) in self.net.transitions.iter().zip(&self.weights) {
            for (&p, &weight) in t.inputs.iter().zip(w) {
                if !weight.is_positive() {
                    violations.push(Violation::WeightOutOfRange {
                        place: self.net.place_name(p).to_string(),
                        transition: t.name.clone(),
                    });
                }
            }
        }
        violations
    }

    /// Firing under the weighted semantics, evaluated directly from `w` and `β`.
    pub fn fire(&self, m: &Marking, t: TransitionId) -> Result<Marking> {
        let tr = self.net.transition(t)?;
        self.net.check_marking(m)?;
        let mu = self.net.mu_of(m, tr);
        if mu < tr.alpha {
            return Err(Error::TransitionDisabled(tr.name.clone()));
        }
        let inflow = meet_all(self.weights[t.0].iter().copied());
        let next = (0..m.len())
            .map(|k| {
                let p = PlaceId(k);
                let gained = tr.beta(p).map_or(Degree::ZERO, |b| mu.min(inflow).min(b));
                if !tr.is_input(p) {
                    m.get(p).max(gained)
                } else {
                    gained
                }
            })
            .collect();
        Ok(Marking(next))
    }

    /// Folds the input weights into `β`: `β_w(t, p) = (∧_k w(p_k, t)) ∧ β(t, p)`.
    pub fn normalize(&self) -> Fpn {
        let transitions = self
            .net
            .transitions
            .iter()
            .zip(&self.weights)
            .map(|(t, w)| {
                let inflow = meet_all(w.iter().copied());
                Transition {
                    outputs: t.outputs.iter().map(|&(p, b)| (p, inflow.min(b))).collect(),
                    ..t.clone()
                }
            })
            .collect();
        Fpn {
            transitions,
            ..self.net.clone()
        }
    }
}
