//! Seeded generators and an independent classical token game, shared by the
//! integration tests and the acceptance suite.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};
use std::path::PathBuf;
use std::sync::Arc;

use fpncw::format::{self, Model};
use fpncw::{
    Alphabet, Degree, Facw, FuzzySet, Fpn, Fpncw, Marking, PlaceId, Transition, Universe, Word,
    WordString,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A degree from {0.1, ..., 1.0}.
pub fn grid(rng: &mut StdRng) -> f64 {
    rng.gen_range(1..=10) as f64 / 10.0
}

/// Like [`grid`] but zero about 40% of the time.
pub fn grid0(rng: &mut StdRng) -> f64 {
    if rng.gen_bool(0.4) {
        0.0
    } else {
        grid(rng)
    }
}

fn d(v: f64) -> Degree {
    Degree::new(v).unwrap()
}

pub fn subset(rng: &mut StdRng, n: usize, min: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
    while out.len() < min {
        let extra = rng.gen_range(0..n);
        if !out.contains(&extra) {
            out.push(extra);
        }
    }
    out.sort();
    out
}

pub fn symbols(rng: &mut StdRng) -> Arc<Universe> {
    let n = rng.gen_range(3..=5);
    Universe::shared((1..=n).map(|i| i.to_string())).unwrap()
}

pub fn words(rng: &mut StdRng, sigma: &Arc<Universe>, count: usize, prefix: &str) -> Vec<Word> {
    (0..count)
        .map(|i| {
            let grades = (0..sigma.len()).map(|_| d(grid0(rng))).collect();
            Word::new(
                format!("{prefix}{}", i + 1),
                FuzzySet::from_grades(sigma.clone(), grades).unwrap(),
            )
        })
        .collect()
}

/// A labeled net with at most five places and four transitions. Most
/// transitions draw their input set from a pool of two, so rule groups with
/// several members are common.
pub fn fpncw(rng: &mut StdRng) -> Fpncw {
    let np = rng.gen_range(2..=5);
    let places = Universe::shared((1..=np).map(|i| format!("p{i}"))).unwrap();
    let sigma = symbols(rng);
    let nw = rng.gen_range(1..=3);
    let alphabet = Alphabet::new(sigma.clone(), words(rng, &sigma, nw, "W")).unwrap();
    let pool: Vec<Vec<usize>> = (0..2).map(|_| subset(rng, np, 1)).collect();
    let nt = rng.gen_range(1..=4);
    let mut transitions = Vec::with_capacity(nt);
    for i in 0..nt {
        let inputs = if rng.gen_bool(0.85) {
            pool[rng.gen_range(0..2)].clone()
        } else {
            subset(rng, np, 0)
        };
        let outputs = subset(rng, np, 1)
            .into_iter()
            .map(|p| (PlaceId(p), d(grid(rng))))
            .collect();
        transitions.push(Transition::new(
            format!("t{}", i + 1),
            d(grid(rng)),
            inputs.into_iter().map(PlaceId).collect(),
            outputs,
        ));
    }
    let m0 = (0..np)
        .map(|p| {
            if pool[0].contains(&p) && rng.gen_bool(0.8) {
                d(grid(rng))
            } else {
                d(grid0(rng))
            }
        })
        .collect();
    let m1 = Marking::new((0..np).map(|_| d(grid0(rng))).collect());
    let net = Fpn::new(places, transitions, Marking::new(m0)).unwrap();
    let labels = (0..nt).map(|_| rng.gen_range(0..nw)).collect();
    Fpncw::from_indices(net, m1, alphabet, labels).unwrap()
}

/// Up to two new words over the net's symbols.
pub fn new_words(rng: &mut StdRng, n: &Fpncw) -> Vec<Word> {
    let k = rng.gen_range(1..=2);
    words(rng, n.alphabet().symbols(), k, "N")
}

/// An automaton with at most four states and three words, and at least one
/// positive transition degree.
pub fn facw(rng: &mut StdRng) -> Facw {
    let nq = rng.gen_range(1..=4);
    let states = Universe::shared((0..nq).map(|i| format!("q{i}"))).unwrap();
    let sigma = symbols(rng);
    let nw = rng.gen_range(1..=3);
    let alphabet = Alphabet::new(sigma.clone(), words(rng, &sigma, nw, "W")).unwrap();
    let finals = FuzzySet::from_grades(
        states.clone(),
        (0..nq).map(|_| d(grid0(rng))).collect(),
    )
    .unwrap();
    let mut m = Facw::new(states.clone(), alphabet, "q0", finals).unwrap();
    let mut any = false;
    for q in 0..nq {
        for w in 0..nw {
            let grades: Vec<Degree> = (0..nq)
                .map(|_| if rng.gen_bool(0.35) { d(grid(rng)) } else { Degree::ZERO })
                .collect();
            any |= grades.iter().any(|g| g.is_positive());
            m.set_delta(q, w, FuzzySet::from_grades(states.clone(), grades).unwrap())
                .unwrap();
        }
    }
    if !any {
        let to = FuzzySet::from_grades(
            states.clone(),
            (0..nq).map(|r| if r == 0 { d(grid(rng)) } else { Degree::ZERO }).collect(),
        )
        .unwrap();
        m.set_delta(0, 0, to).unwrap();
    }
    m
}

/// Every string over `alphabet` of length at most `max_len`.
pub fn strings(alphabet: &Alphabet, max_len: usize) -> Vec<WordString> {
    (0..=max_len)
        .flat_map(|len| alphabet.strings_of_len(len))
        .map(|s| alphabet.string_of(&s))
        .collect()
}

/// A classical net: places hold token counts, transitions have unit arcs.
#[derive(Debug, Clone)]
pub struct TokenNet {
    pub places: usize,
    pub pre: Vec<Vec<usize>>,
    pub post: Vec<Vec<usize>>,
    pub m0: Vec<u32>,
}

impl TokenNet {
    pub fn enabled(&self, m: &[u32], t: usize) -> bool {
        self.pre[t].iter().all(|&p| m[p] >= 1)
    }

    pub fn fire(&self, m: &[u32], t: usize) -> Vec<u32> {
        let mut next = m.to_vec();
        for &p in &self.pre[t] {
            next[p] -= 1;
        }
        for &p in &self.post[t] {
            next[p] += 1;
        }
        next
    }

    /// Reachable markings in breadth-first order, or `None` if some
    /// reachable marking puts two tokens in a place.
    pub fn safe_reachable(&self) -> Option<Vec<Vec<u32>>> {
        let mut seen = HashSet::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::from([self.m0.clone()]);
        seen.insert(self.m0.clone());
        while let Some(m) = queue.pop_front() {
            if m.iter().any(|&c| c > 1) {
                return None;
            }
            for t in 0..self.pre.len() {
                if self.enabled(&m, t) {
                    let next = self.fire(&m, t);
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
            order.push(m);
        }
        Some(order)
    }

    /// The same net with every threshold and arc truth value equal to 1.
    pub fn to_fpn(&self) -> Fpn {
        let places = Universe::shared((1..=self.places).map(|i| format!("p{i}"))).unwrap();
        let transitions = self
            .pre
            .iter()
            .zip(&self.post)
            .enumerate()
            .map(|(i, (pre, post))| {
                Transition::new(
                    format!("t{}", i + 1),
                    Degree::ONE,
                    pre.iter().copied().map(PlaceId).collect(),
                    post.iter().map(|&p| (PlaceId(p), Degree::ONE)).collect(),
                )
            })
            .collect();
        let m0 = Marking::new(
            self.m0
                .iter()
                .map(|&c| if c > 0 { Degree::ONE } else { Degree::ZERO })
                .collect(),
        );
        Fpn::new(places, transitions, m0).unwrap()
    }
}

fn distinct(rng: &mut StdRng, n: usize, k: usize) -> Vec<usize> {
    let mut out = Vec::new();
    while out.len() < k.min(n) {
        let x = rng.gen_range(0..n);
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out.sort();
    out
}

pub fn token_net(rng: &mut StdRng) -> TokenNet {
    let places = rng.gen_range(2..=5);
    let nt = rng.gen_range(1..=4);
    let mut pre = Vec::with_capacity(nt);
    let mut post = Vec::with_capacity(nt);
    for _ in 0..nt {
        let k = rng.gen_range(1..=2);
        let p = distinct(rng, places, k);
        // Token-conserving transitions keep many nets safe and live.
        let size = if rng.gen_bool(0.5) { p.len() } else { rng.gen_range(1..=2) };
        pre.push(p);
        post.push(distinct(rng, places, size));
    }
    TokenNet {
        places,
        pre,
        post,
        m0: (0..places).map(|_| u32::from(rng.gen_bool(0.5))).collect(),
    }
}

/// Draws random nets until one is safe under the classical token game and
/// can fire at least once.
pub fn safe_token_net(rng: &mut StdRng) -> (TokenNet, Vec<Vec<u32>>) {
    loop {
        let net = token_net(rng);
        if let Some(reach) = net.safe_reachable() {
            if reach.len() > 1 {
                return (net, reach);
            }
        }
    }
}

pub fn as_counts(m: &Marking) -> Vec<u32> {
    m.degrees()
        .iter()
        .map(|d| {
            assert!(d.value() == 0.0 || d.value() == 1.0, "non-boolean degree {d}");
            u32::from(d.value() == 1.0)
        })
        .collect()
}

pub fn models_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../models")
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(models_dir().join(name)).unwrap()
}

pub fn fixture(name: &str) -> Model {
    format::parse(&fixture_text(name)).unwrap()
}

pub fn fixture_fpncw(name: &str) -> Fpncw {
    match fixture(name) {
        Model::Fpncw(n) => n,
        Model::Fpncmw(e) => e.into_net(),
        other => panic!("{name} is a {}", other.kind()),
    }
}

pub fn fixture_facw(name: &str) -> Facw {
    match fixture(name) {
        Model::Facw(m) => m,
        other => panic!("{name} is a {}", other.kind()),
    }
}

pub const FIXTURES: [&str; 8] = [
    "example1.toml",
    "example3.toml",
    "example4.toml",
    "example5-words.toml",
    "example6.toml",
    "example7.toml",
    "example8.toml",
    "example9.toml",
];

/// Labeled-net fixtures.
pub const NET_FIXTURES: [&str; 3] = ["example4.toml", "example6.toml", "example8.toml"];

/// Automaton fixtures.
pub const FACW_FIXTURES: [&str; 2] = ["example7.toml", "example9.toml"];
