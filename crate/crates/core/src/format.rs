//! Text format for models.
//!
//! Every model is a TOML document with a `kind` and a `schema_version`.
//! Parsing goes through the `toml` crate; serialization is hand-written so
//! that output is canonical (declaration order, shortest round-trip decimals,
//! zero memberships omitted) and `serialize(parse(text)) == text` for any
//! canonically written file.
//!
//! ```toml
//! kind = "fpncw"
//! schema_version = 1
//! places = ["p1", "p2", "p3"]
//! symbols = ["1", "2"]
//! m0 = [1, 0, 0]
//! m1 = [0, 0, 1]
//!
//! [[transition]]
//! name = "t1"
//! alpha = 0.5
//! label = "W"
//! inputs = ["p1"]
//! outputs = { p2 = 0.9, p3 = 0.4 }
//!
//! [[word]]
//! name = "W"
//! meaning = { 1 = 1, 2 = 0.3 }
//! ```

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::sync::Arc;

use serde::Deserialize;

use crate::automaton::{Facw, StateMarkings};
use crate::cw::{Alphabet, Fpncw, Word};
use crate::error::Error;
use crate::extend::{FpnCmw, Origin};
use crate::fuzzyset::{Degree, FuzzySet, Universe};
use crate::net::{Fpn, Marking, PlaceId, Transition, TransitionId, WeightedFpn};

pub const SCHEMA_VERSION: u32 = 1;

/// A parsed model file.
#[derive(Debug, Clone, PartialEq)]
pub enum Model {
    Fpn(Fpn),
    WeightedFpn(WeightedFpn),
    Fpncw(Fpncw),
    Fpncmw(FpnCmw),
    Facw(Facw),
    Words(Alphabet),
}

impl Model {
    pub fn kind(&self) -> &'static str {
        match self {
            Model::Fpn(_) => "fpn",
            Model::WeightedFpn(_) => "weighted-fpn",
            Model::Fpncw(_) => "fpncw",
            Model::Fpncmw(_) => "fpncmw",
            Model::Facw(_) => "facw",
            Model::Words(_) => "words",
        }
    }
}

/// A parse or validation failure, with the line or field it refers to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    pub location: String,
    pub message: String,
}

impl FormatError {
    fn at(location: impl Into<String>, message: impl Into<String>) -> Self {
        FormatError {
            location: location.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

impl std::error::Error for FormatError {}

type Parsed<T> = std::result::Result<T, FormatError>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDoc {
    kind: String,
    schema_version: u32,
    places: Option<Vec<String>>,
    symbols: Option<Vec<String>>,
    states: Option<Vec<String>>,
    initial: Option<String>,
    m0: Option<Vec<f64>>,
    m1: Option<Vec<f64>>,
    #[serde(rename = "final")]
    finals: Option<BTreeMap<String, f64>>,
    extended_words: Option<Vec<String>>,
    state_places: Option<Vec<String>>,
    state_markings: Option<Vec<Vec<f64>>>,
    #[serde(default)]
    transition: Vec<RawTransition>,
    #[serde(default)]
    word: Vec<RawWord>,
    #[serde(default)]
    delta: Vec<RawDelta>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTransition {
    name: String,
    alpha: f64,
    label: Option<String>,
    #[serde(default)]
    inputs: Vec<String>,
    #[serde(default)]
    outputs: BTreeMap<String, f64>,
    weights: Option<BTreeMap<String, f64>>,
    origin: Option<RawOrigin>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOrigin {
    group: usize,
    word: usize,
    rules: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWord {
    name: String,
    #[serde(default)]
    meaning: BTreeMap<String, f64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDelta {
    from: String,
    word: String,
    #[serde(default)]
    to: BTreeMap<String, f64>,
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, col)
}

fn degree(value: f64, location: &str) -> Parsed<Degree> {
    Degree::new(value).map_err(|_| {
        FormatError::at(location, format!("degree out of range [0,1]: {value}"))
    })
}

/// Thresholds, arc truth values and weights must lie in `(0, 1]`.
fn positive_degree(value: f64, location: &str) -> Parsed<Degree> {
    let d = degree(value, location)?;
    if d.is_positive() {
        Ok(d)
    } else {
        Err(FormatError::at(
            location,
            format!("degree out of range (0,1]: {value}"),
        ))
    }
}

fn universe(names: Vec<String>, location: &str) -> Parsed<Arc<Universe>> {
    Universe::shared(names).map_err(|e| FormatError::at(location, e.to_string()))
}

fn require<T>(value: Option<T>, kind: &str, field: &str) -> Parsed<T> {
    value.ok_or_else(|| FormatError::at(field, format!("required for kind `{kind}`")))
}

fn forbid<T>(value: &Option<T>, kind: &str, field: &str) -> Parsed<()> {
    match value {
        Some(_) => Err(FormatError::at(
            field,
            format!("not allowed for kind `{kind}`"),
        )),
        None => Ok(()),
    }
}

fn marking(values: &[f64], len: usize, location: &str) -> Parsed<Marking> {
    if values.len() != len {
        return Err(FormatError::at(
            location,
            format!("expected {len} entries, found {}", values.len()),
        ));
    }
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| degree(v, &format!("{location}[{i}]")))
        .collect::<Parsed<Vec<_>>>()
        .map(Marking::new)
}

fn fuzzy_set(
    universe: &Arc<Universe>,
    map: &BTreeMap<String, f64>,
    location: &str,
    what: &str,
) -> Parsed<FuzzySet> {
    let mut grades = vec![Degree::ZERO; universe.len()];
    for (name, &v) in map {
        let loc = format!("{location}.{name}");
        let i = universe
            .position(name)
            .ok_or_else(|| FormatError::at(&loc, format!("unknown {what} `{name}`")))?;
        grades[i] = degree(v, &loc)?;
    }
    Ok(FuzzySet::from_grades(universe.clone(), grades).expect("one grade per element"))
}

fn words(symbols: &Arc<Universe>, raw: &[RawWord]) -> Parsed<Alphabet> {
    let mut list = Vec::with_capacity(raw.len());
    for (i, w) in raw.iter().enumerate() {
        let loc = format!("word[{i}] ({})", w.name);
        let meaning = fuzzy_set(symbols, &w.meaning, &format!("{loc}.meaning"), "symbol")?;
        list.push(Word::new(w.name.clone(), meaning));
    }
    Alphabet::new(symbols.clone(), list).map_err(|e| FormatError::at("word", e.to_string()))
}

struct NetParts {
    net: Fpn,
    weights: Vec<Vec<Degree>>,
    labels: Vec<Option<String>>,
    origins: Vec<Option<RawOrigin>>,
}

fn net_parts(raw: &mut RawDoc, kind: &str) -> Parsed<NetParts> {
    let places = universe(require(raw.places.take(), kind, "places")?, "places")?;
    let m0 = marking(&require(raw.m0.take(), kind, "m0")?, places.len(), "m0")?;
    let mut transitions = Vec::with_capacity(raw.transition.len());
    let mut weights = Vec::new();
    let mut labels = Vec::new();
    let mut origins = Vec::new();
    for (i, t) in raw.transition.drain(..).enumerate() {
        let loc = format!("transition[{i}] ({})", t.name);
        let alpha = positive_degree(t.alpha, &format!("{loc}.alpha"))?;
        let place = |name: &str, field: &str| {
            places.position(name).map(PlaceId).ok_or_else(|| {
                FormatError::at(format!("{loc}.{field}.{name}"), format!("unknown place `{name}`"))
            })
        };
        let inputs = t
            .inputs
            .iter()
            .map(|p| place(p, "inputs"))
            .collect::<Parsed<Vec<_>>>()?;
        let mut outputs = Vec::with_capacity(t.outputs.len());
        for (p, &beta) in &t.outputs {
            let id = place(p, "outputs")?;
            outputs.push((id, positive_degree(beta, &format!("{loc}.outputs.{p}"))?));
        }
        let transition = Transition::new(t.name.clone(), alpha, inputs, outputs);
        if let Some(w) = &t.weights {
            let mut per_input = Vec::with_capacity(transition.inputs().len());
            for &p in transition.inputs() {
                let name = places.name(p.0);
                let v = w.get(name).ok_or_else(|| {
                    FormatError::at(format!("{loc}.weights"), format!("missing weight for `{name}`"))
                })?;
                per_input.push(positive_degree(*v, &format!("{loc}.weights.{name}"))?);
            }
            if let Some(extra) = w.keys().find(|k| !t.inputs.contains(k)) {
                return Err(FormatError::at(
                    format!("{loc}.weights.{extra}"),
                    "weight on a place that is not an input",
                ));
            }
            weights.push(per_input);
        } else if kind == "weighted-fpn" {
            return Err(FormatError::at(format!("{loc}.weights"), "required for kind `weighted-fpn`"));
        }
        if kind != "weighted-fpn" {
            forbid(&t.weights, kind, &format!("{loc}.weights"))?;
        }
        if kind == "fpn" || kind == "weighted-fpn" {
            forbid(&t.label, kind, &format!("{loc}.label"))?;
        } else if t.label.is_none() {
            return Err(FormatError::at(format!("{loc}.label"), "every transition needs a label"));
        }
        if kind != "fpncmw" {
            forbid(&t.origin, kind, &format!("{loc}.origin"))?;
        }
        labels.push(t.label);
        origins.push(t.origin);
        transitions.push(transition);
    }
    let net = Fpn::new(places, transitions, m0).map_err(|e| FormatError::at("transition", e.to_string()))?;
    Ok(NetParts {
        net,
        weights,
        labels,
        origins,
    })
}

fn labeled_net(raw: &mut RawDoc, kind: &str) -> Parsed<(Fpncw, Vec<Option<RawOrigin>>)> {
    let symbols = universe(require(raw.symbols.take(), kind, "symbols")?, "symbols")?;
    let alphabet = words(&symbols, &raw.word)?;
    let m1_values = require(raw.m1.take(), kind, "m1")?;
    let parts = net_parts(raw, kind)?;
    let m1 = marking(&m1_values, parts.net.place_count(), "m1")?;
    let mut labels = Vec::with_capacity(parts.labels.len());
    for (i, label) in parts.labels.iter().enumerate() {
        let label = label.as_deref().expect("checked above");
        let w = alphabet.position(label).ok_or_else(|| {
            FormatError::at(
                format!("transition[{i}].label"),
                format!("unknown word `{label}`"),
            )
        })?;
        labels.push(w);
    }
    let n = Fpncw::from_indices(parts.net, m1, alphabet, labels)
        .map_err(|e| FormatError::at("transition", e.to_string()))?;
    Ok((n, parts.origins))
}

fn automaton(raw: &mut RawDoc) -> Parsed<Facw> {
    let kind = "facw";
    let states = universe(require(raw.states.take(), kind, "states")?, "states")?;
    let symbols = universe(require(raw.symbols.take(), kind, "symbols")?, "symbols")?;
    let alphabet = words(&symbols, &raw.word)?;
    let finals = fuzzy_set(&states, &require(raw.finals.take(), kind, "final")?, "final", "state")?;
    let initial = require(raw.initial.take(), kind, "initial")?;
    let mut m = Facw::new(states.clone(), alphabet, &initial, finals)
        .map_err(|e| FormatError::at("initial", e.to_string()))?;
    let mut seen = std::collections::HashSet::new();
    for (i, d) in raw.delta.iter().enumerate() {
        let loc = format!("delta[{i}]");
        let from = states.position(&d.from).ok_or_else(|| {
            FormatError::at(format!("{loc}.from"), format!("unknown state `{}`", d.from))
        })?;
        let w = m.alphabet().position(&d.word).ok_or_else(|| {
            FormatError::at(format!("{loc}.word"), format!("unknown word `{}`", d.word))
        })?;
        if !seen.insert((from, w)) {
            return Err(FormatError::at(&loc, "duplicate (from, word) entry"));
        }
        let to = fuzzy_set(&states, &d.to, &format!("{loc}.to"), "state")?;
        m.set_delta(from, w, to).expect("indices checked");
    }
    match (raw.state_places.take(), raw.state_markings.take()) {
        (None, None) => {}
        (Some(places), Some(rows)) => {
            let places = universe(places, "state_places")?;
            if rows.len() != states.len() {
                return Err(FormatError::at(
                    "state_markings",
                    format!("expected {} rows, found {}", states.len(), rows.len()),
                ));
            }
            let markings = rows
                .iter()
                .enumerate()
                .map(|(i, r)| marking(r, places.len(), &format!("state_markings[{i}]")))
                .collect::<Parsed<Vec<_>>>()?;
            m.set_state_markings(StateMarkings { places, markings })
                .map_err(|e| FormatError::at("state_markings", e.to_string()))?;
        }
        _ => {
            return Err(FormatError::at(
                "state_markings",
                "state_places and state_markings must be given together",
            ))
        }
    }
    Ok(m)
}

/// Parses a model document.
pub fn parse(text: &str) -> Parsed<Model> {
    let mut raw: RawDoc = toml::from_str(text).map_err(|e| {
        let location = match e.span() {
            Some(span) => {
                let (line, col) = line_col(text, span.start);
                format!("line {line}, column {col}")
            }
            None => "document".to_string(),
        };
        FormatError::at(location, e.message().trim().to_string())
    })?;
    if raw.schema_version != SCHEMA_VERSION {
        return Err(FormatError::at(
            "schema_version",
            format!("unsupported version {}", raw.schema_version),
        ));
    }
    let kind = raw.kind.clone();
    let kind = kind.as_str();
    let is_net = matches!(kind, "fpn" | "weighted-fpn" | "fpncw" | "fpncmw");
    if is_net {
        forbid(&raw.states, kind, "states")?;
        forbid(&raw.initial, kind, "initial")?;
        forbid(&raw.finals, kind, "final")?;
        forbid(&raw.state_places, kind, "state_places")?;
        forbid(&raw.state_markings, kind, "state_markings")?;
        if !raw.delta.is_empty() {
            return Err(FormatError::at("delta", format!("not allowed for kind `{kind}`")));
        }
    }
    if kind != "fpncmw" {
        forbid(&raw.extended_words, kind, "extended_words")?;
    }
    let model = match kind {
        "fpn" | "weighted-fpn" => {
            forbid(&raw.symbols, kind, "symbols")?;
            forbid(&raw.m1, kind, "m1")?;
            if !raw.word.is_empty() {
                return Err(FormatError::at("word", format!("not allowed for kind `{kind}`")));
            }
            let parts = net_parts(&mut raw, kind)?;
            if kind == "fpn" {
                Model::Fpn(parts.net)
            } else {
                let w = WeightedFpn::new(parts.net, parts.weights)
                    .map_err(|e| FormatError::at("transition", e.to_string()))?;
                Model::WeightedFpn(w)
            }
        }
        "fpncw" => Model::Fpncw(labeled_net(&mut raw, kind)?.0),
        "fpncmw" => {
            let extended = require(raw.extended_words.take(), kind, "extended_words")?;
            let (n, raw_origins) = labeled_net(&mut raw, kind)?;
            let base_words = n.alphabet().len().checked_sub(extended.len()).ok_or_else(|| {
                FormatError::at("extended_words", "more extended words than words")
            })?;
            let suffix: Vec<&str> = n.alphabet().words()[base_words..]
                .iter()
                .map(|w| w.name.as_str())
                .collect();
            if suffix != extended.iter().map(String::as_str).collect::<Vec<_>>() {
                return Err(FormatError::at(
                    "extended_words",
                    "must list the last words of the alphabet, in order",
                ));
            }
            let mut origins = Vec::with_capacity(raw_origins.len());
            for (i, o) in raw_origins.into_iter().enumerate() {
                let Some(o) = o else {
                    origins.push(None);
                    continue;
                };
                let loc = format!("transition[{i}].origin");
                if o.group == 0 || o.word == 0 || o.word > extended.len() {
                    return Err(FormatError::at(&loc, "group and word are 1-based indices"));
                }
                let rules = o
                    .rules
                    .iter()
                    .map(|name| {
                        n.net().transition_id(name).map_err(|_| {
                            FormatError::at(
                                format!("{loc}.rules"),
                                format!("unknown transition `{name}`"),
                            )
                        })
                    })
                    .collect::<Parsed<Vec<TransitionId>>>()?;
                origins.push(Some(Origin {
                    group: o.group - 1,
                    word: o.word - 1,
                    rules,
                }));
            }
            Model::Fpncmw(
                FpnCmw::new(n, origins, base_words)
                    .map_err(|e| FormatError::at("transition", e.to_string()))?,
            )
        }
        "facw" => {
            forbid(&raw.places, kind, "places")?;
            forbid(&raw.m0, kind, "m0")?;
            forbid(&raw.m1, kind, "m1")?;
            if !raw.transition.is_empty() {
                return Err(FormatError::at("transition", "not allowed for kind `facw`"));
            }
            Model::Facw(automaton(&mut raw)?)
        }
        "words" => {
            forbid(&raw.places, kind, "places")?;
            forbid(&raw.m0, kind, "m0")?;
            forbid(&raw.m1, kind, "m1")?;
            forbid(&raw.states, kind, "states")?;
            if !raw.transition.is_empty() || !raw.delta.is_empty() {
                return Err(FormatError::at("transition", "not allowed for kind `words`"));
            }
            let symbols = universe(require(raw.symbols.take(), kind, "symbols")?, "symbols")?;
            Model::Words(words(&symbols, &raw.word)?)
        }
        other => {
            return Err(FormatError::at("kind", format!("unknown kind `{other}`")));
        }
    };
    Ok(model)
}

impl From<FormatError> for Error {
    fn from(e: FormatError) -> Self {
        Error::Invalid(e.to_string())
    }
}

fn is_bare_key(s: &str) -> bool {
    !s.is_empty()
        && s
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if c.is_control() => {
                let _ = write!(out, "\\u{:04X}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn key(s: &str) -> String {
    if is_bare_key(s) {
        s.to_string()
    } else {
        quote(s)
    }
}

fn string_list<S: AsRef<str>>(items: &[S]) -> String {
    let parts: Vec<String> = items.iter().map(|s| quote(s.as_ref())).collect();
    format!("[{}]", parts.join(", "))
}

fn degree_list(degrees: &[Degree]) -> String {
    let parts: Vec<String> = degrees.iter().map(Degree::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn inline_map<'a>(entries: impl IntoIterator<Item = (&'a str, Degree)>) -> String {
    let parts: Vec<String> = entries
        .into_iter()
        .map(|(k, d)| format!("{} = {}", key(k), d))
        .collect();
    if parts.is_empty() {
        "{}".to_string()
    } else {
        format!("{{ {} }}", parts.join(", "))
    }
}

fn set_map(set: &FuzzySet) -> String {
    inline_map(
        set.support()
            .into_iter()
            .map(|i| (set.universe().name(i), set.grade(i))),
    )
}

fn header(out: &mut String, kind: &str) {
    let _ = writeln!(out, "kind = {}", quote(kind));
    let _ = writeln!(out, "schema_version = {SCHEMA_VERSION}");
}

fn write_words(out: &mut String, alphabet: &Alphabet) {
    for w in alphabet.words() {
        let _ = writeln!(out, "\n[[word]]");
        let _ = writeln!(out, "name = {}", quote(&w.name));
        let _ = writeln!(out, "meaning = {}", set_map(&w.meaning));
    }
}

struct NetView<'a> {
    net: &'a Fpn,
    weights: Option<&'a WeightedFpn>,
    labeled: Option<&'a Fpncw>,
    origins: Option<&'a FpnCmw>,
}

fn write_net(out: &mut String, kind: &str, v: NetView<'_>) {
    let net = v.net;
    header(out, kind);
    let _ = writeln!(out, "places = {}", string_list(net.places().symbols()));
    if let Some(n) = v.labeled {
        let _ = writeln!(out, "symbols = {}", string_list(n.alphabet().symbols().symbols()));
    }
    let _ = writeln!(out, "m0 = {}", degree_list(net.initial_marking().degrees()));
    if let Some(n) = v.labeled {
        let _ = writeln!(out, "m1 = {}", degree_list(n.final_marking().degrees()));
    }
    if let Some(ext) = v.origins {
        let names: Vec<&str> = ext.new_words().iter().map(|w| w.name.as_str()).collect();
        let _ = writeln!(out, "extended_words = {}", string_list(&names));
    }
    for (i, t) in net.transitions().iter().enumerate() {
        let id = TransitionId(i);
        let _ = writeln!(out, "\n[[transition]]");
        let _ = writeln!(out, "name = {}", quote(t.name()));
        let _ = writeln!(out, "alpha = {}", t.alpha());
        if let Some(n) = v.labeled {
            let _ = writeln!(out, "label = {}", quote(&n.label(id).name));
        }
        let inputs: Vec<&str> = t.inputs().iter().map(|&p| net.place_name(p)).collect();
        let _ = writeln!(out, "inputs = {}", string_list(&inputs));
        let _ = writeln!(
            out,
            "outputs = {}",
            inline_map(t.outputs().iter().map(|&(p, b)| (net.place_name(p), b)))
        );
        if let Some(w) = v.weights {
            let _ = writeln!(
                out,
                "weights = {}",
                inline_map(
                    t.inputs()
                        .iter()
                        .zip(w.weights(id))
                        .map(|(&p, &d)| (net.place_name(p), d))
                )
            );
        }
        if let Some(origin) = v.origins.and_then(|e| e.origin(id)) {
            let rules: Vec<&str> = origin
                .rules
                .iter()
                .map(|&r| net.transitions()[r.0].name())
                .collect();
            let _ = writeln!(
                out,
                "origin = {{ group = {}, word = {}, rules = {} }}",
                origin.group + 1,
                origin.word + 1,
                string_list(&rules)
            );
        }
    }
    if let Some(n) = v.labeled {
        write_words(out, n.alphabet());
    }
}

fn write_facw(out: &mut String, m: &Facw) {
    header(out, "facw");
    let states = m.states();
    let _ = writeln!(out, "states = {}", string_list(states.symbols()));
    let _ = writeln!(out, "initial = {}", quote(states.name(m.initial())));
    let _ = writeln!(out, "symbols = {}", string_list(m.alphabet().symbols().symbols()));
    let _ = writeln!(out, "final = {}", set_map(m.finals()));
    if let Some(sm) = m.state_markings() {
        let _ = writeln!(out, "state_places = {}", string_list(sm.places.symbols()));
        let rows: Vec<String> = sm.markings.iter().map(|mk| degree_list(mk.degrees())).collect();
        let _ = writeln!(out, "state_markings = [{}]", rows.join(", "));
    }
    for q in 0..states.len() {
        for w in 0..m.alphabet().len() {
            let to = m.delta(q, w);
            if to.is_empty() {
                continue;
            }
            let _ = writeln!(out, "\n[[delta]]");
            let _ = writeln!(out, "from = {}", quote(states.name(q)));
            let _ = writeln!(out, "word = {}", quote(&m.alphabet().word(w).name));
            let _ = writeln!(out, "to = {}", set_map(to));
        }
    }
    write_words(out, m.alphabet());
}

/// Canonical text for a model.
pub fn serialize(model: &Model) -> String {
    let mut out = String::new();
    match model {
        Model::Fpn(net) => write_net(
            &mut out,
            "fpn",
            NetView {
                net,
                weights: None,
                labeled: None,
                origins: None,
            },
        ),
        Model::WeightedFpn(w) => write_net(
            &mut out,
            "weighted-fpn",
            NetView {
                net: w.net(),
                weights: Some(w),
                labeled: None,
                origins: None,
            },
        ),
        Model::Fpncw(n) => write_net(
            &mut out,
            "fpncw",
            NetView {
                net: n.net(),
                weights: None,
                labeled: Some(n),
                origins: None,
            },
        ),
        Model::Fpncmw(ext) => write_net(
            &mut out,
            "fpncmw",
            NetView {
                net: ext.net().net(),
                weights: None,
                labeled: Some(ext.net()),
                origins: Some(ext),
            },
        ),
        Model::Facw(m) => write_facw(&mut out, m),
        Model::Words(a) => {
            header(&mut out, "words");
            let _ = writeln!(out, "symbols = {}", string_list(a.symbols().symbols()));
            write_words(&mut out, a);
        }
    }
    out
}
