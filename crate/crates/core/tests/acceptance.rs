//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::collections::HashSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use fpncw::format::Model;
use fpncw::reasoner::RuleBase;
use fpncw::{
    extend, facw_to_fpncw, fpncw_to_facw, infer, Degree, FuzzySet, Fpncw, Marking, PlaceId,
    TransitionId, Word, WordString, DEFAULT_ORACLE_DEPTH,
};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn marking(values: &[f64]) -> Marking {
    Marking::from_values(values).unwrap()
}

fn ws(s: &str) -> WordString {
    WordString::parse(s)
}

fn example1() -> fpncw::Fpn {
    match fixture("example1.toml") {
        Model::Fpn(n) => n,
        other => panic!("example1 is a {}", other.kind()),
    }
}

fn firing_fixture() -> Outcome {
    let net = example1();
    let m0 = net.initial_marking().clone();
    let expected = [
        ("t1", [0.0, 0.0, 0.9, 0.2, 0.0]),
        ("t2", [0.0, 0.0, 0.1, 0.9, 0.1]),
        ("t3", [0.0, 0.0, 0.0, 0.2, 0.9]),
    ];
    for (t, values) in expected {
        let got = net.fire(&m0, net.transition_id(t).unwrap()).map_err(|e| e.to_string())?;
        ensure!(got == marking(&values), "fire {t} gave {got}");
    }
    Ok("t1, t2, t3 from M0".into())
}

fn reachability_fixture() -> Outcome {
    let got = example1().reachable().map_err(|e| e.to_string())?;
    let expected = [
        marking(&[0.9, 1.0, 0.0, 0.0, 0.0]),
        marking(&[0.0, 0.0, 0.9, 0.2, 0.0]),
        marking(&[0.0, 0.0, 0.1, 0.9, 0.1]),
        marking(&[0.0, 0.0, 0.0, 0.2, 0.9]),
    ];
    ensure!(got.len() == 4, "{} reachable markings", got.len());
    let got: HashSet<_> = got.into_iter().collect();
    let expected: HashSet<_> = expected.into_iter().collect();
    ensure!(got == expected, "reachable set {got:?}");
    Ok("four markings, no extras".into())
}

fn language_fixture() -> Outcome {
    let n = fixture_fpncw("example4.toml");
    let accept = |s: &str| n.accept(&ws(s)).unwrap().value();
    let oracle = |s: &str| n.accept_oracle(&ws(s), DEFAULT_ORACLE_DEPTH).unwrap().value();
    ensure!(accept("M") == 0.9, "accept(M) = {}", accept("M"));
    ensure!(accept("M S") == 0.0, "accept(M S) = {}", accept("M S"));
    ensure!(oracle("L") == 0.2, "oracle(L) = {}", oracle("L"));
    ensure!(oracle("S") == 0.4, "oracle(S) = {}", oracle("S"));
    Ok("M=0.9, M S=0, oracle L=0.2, S=0.4".into())
}

/// Square-root hedge of each base word, rounded to two decimals.
fn hedged_words(n: &Fpncw) -> Vec<Word> {
    n.alphabet()
        .words()
        .iter()
        .map(|w| {
            let grades = (0..w.meaning.universe().len())
                .map(|x| {
                    let v = (w.meaning.grade(x).value().sqrt() * 100.0).round() / 100.0;
                    Degree::new(v).unwrap()
                })
                .collect();
            Word::new(
                format!("{}'", w.name),
                FuzzySet::from_grades(w.meaning.universe().clone(), grades).unwrap(),
            )
        })
        .collect()
}

fn inference_fixture() -> Outcome {
    let n = fixture_fpncw("example4.toml");
    let words = hedged_words(&n);
    let Model::Words(file_words) = fixture("example5-words.toml") else {
        return Err("example5-words.toml is not a word list".into());
    };
    ensure!(
        file_words.words() == words.as_slice(),
        "word file differs from the computed hedges"
    );
    let base = RuleBase::from_net(&n);
    ensure!(base.group_count() == 1, "{} rule groups", base.group_count());
    let places = n.net().places().clone();
    let expected = [
        ("L'", [("p3", 0.9), ("p4", 0.32), ("p5", 0.1)]),
        ("M'", [("p3", 0.45), ("p4", 0.9), ("p5", 0.45)]),
        ("S'", [("p3", 0.1), ("p4", 0.32), ("p5", 0.9)]),
    ];
    for ((name, pairs), word) in expected.iter().zip(&words) {
        ensure!(word.name == *name, "word order {}", word.name);
        let d = infer(&base.group(0), &word.meaning).map_err(|e| e.to_string())?;
        let want = FuzzySet::from_pairs(places.clone(), pairs).unwrap();
        ensure!(d == want, "D_{name} = {d}");
    }
    Ok("D_L', D_M', D_S'".into())
}

fn extension_fixture() -> Outcome {
    let n = fixture_fpncw("example4.toml");
    let ext = extend(&n, &hedged_words(&n)).map_err(|e| e.to_string())?;
    let net = ext.net().net();
    let names: Vec<&str> = net.transitions().iter().map(|t| t.name()).collect();
    ensure!(
        names == ["t1", "t2", "t3", "t'_1_1", "t'_1_2", "t'_1_3"],
        "transitions {names:?}"
    );
    let alphas = [0.8, 0.5, 0.2, 0.8, 0.8, 0.8];
    let labels = ["L", "M", "S", "L'", "M'", "S'"];
    let betas: [&[(&str, f64)]; 6] = [
        &[("p3", 0.9), ("p4", 0.2)],
        &[("p3", 0.1), ("p4", 0.9), ("p5", 0.1)],
        &[("p4", 0.2), ("p5", 0.9)],
        &[("p3", 0.9), ("p4", 0.32), ("p5", 0.1)],
        &[("p3", 0.45), ("p4", 0.9), ("p5", 0.45)],
        &[("p3", 0.1), ("p4", 0.32), ("p5", 0.9)],
    ];
    let mut checked = 0;
    for (i, t) in net.transitions().iter().enumerate() {
        ensure!(t.alpha().value() == alphas[i], "alpha({}) = {}", t.name(), t.alpha());
        let label = &ext.net().label(TransitionId(i)).name;
        ensure!(label == labels[i], "label({}) = {label}", t.name());
        let inputs: Vec<&str> = t.inputs().iter().map(|&p| net.place_name(p)).collect();
        ensure!(inputs == ["p1", "p2"], "inputs({}) = {inputs:?}", t.name());
        let outputs: Vec<(&str, f64)> = t
            .outputs()
            .iter()
            .map(|&(p, b)| (net.place_name(p), b.value()))
            .collect();
        ensure!(outputs == betas[i], "beta({}) = {outputs:?}", t.name());
        checked += outputs.len();
    }
    Ok(format!("6 alphas, {checked} betas"))
}

fn weighted_fixture() -> Outcome {
    let Model::WeightedFpn(w) = fixture("example3.toml") else {
        return Err("example3.toml is not a weighted net".into());
    };
    let plain = example1();
    let normalized = w.normalize();
    ensure!(normalized == plain, "normalized net differs from example 1");
    let mut betas = 0;
    for (a, b) in normalized.transitions().iter().zip(plain.transitions()) {
        ensure!(a.outputs() == b.outputs(), "beta of {}", a.name());
        betas += a.outputs().len();
    }
    ensure!(betas == 7, "{betas} betas");
    let m0 = w.net().initial_marking();
    for i in 0..3 {
        let t = TransitionId(i);
        let tr = &w.net().transitions()[i];
        // Weighted equation evaluated on raw values.
        let mu = tr
            .inputs()
            .iter()
            .map(|&p| m0.get(p).value())
            .fold(1.0, f64::min);
        let inflow = w.weights(t).iter().map(|d| d.value()).fold(1.0, f64::min);
        let expected: Vec<f64> = (0..m0.len())
            .map(|k| {
                let gained = tr
                    .beta(PlaceId(k))
                    .map_or(0.0, |b| mu.min(inflow).min(b.value()));
                if tr.is_input(PlaceId(k)) {
                    gained
                } else {
                    m0.get(PlaceId(k)).value().max(gained)
                }
            })
            .collect();
        let direct = w.fire(m0, t).map_err(|e| e.to_string())?;
        let folded = normalized.fire(m0, t).map_err(|e| e.to_string())?;
        ensure!(direct == folded, "{}: {direct} vs {folded}", tr.name());
        ensure!(direct.values() == expected, "{}: {direct}", tr.name());
    }
    Ok("7 betas, 3 firings".into())
}

fn conversion_fixture() -> Outcome {
    let n = fixture_fpncw("example4.toml");
    let a = fpncw_to_facw(&n).map_err(|e| e.to_string())?;
    ensure!(a.states().len() == 4, "{} states", a.states().len());
    let finals: Vec<f64> = (0..4).map(|q| a.finals().grade(q).value()).collect();
    ensure!(finals == [0.0, 0.2, 0.9, 0.4], "F = {finals:?}");
    let m = a.accept(&ws("M")).map_err(|e| e.to_string())?;
    ensure!(m.value() == 0.9, "accept(M) = {m}");

    let net = facw_to_fpncw(&fixture_facw("example7.toml")).map_err(|e| e.to_string())?;
    let names: HashSet<String> = net
        .net()
        .transitions()
        .iter()
        .map(|t| t.name().to_string())
        .collect();
    let expected: HashSet<String> = [
        "010", "011", "021", "022", "110", "121", "112", "122", "210", "211", "221", "222",
    ]
    .iter()
    .map(|ijk| {
        let c: Vec<char> = ijk.chars().collect();
        format!("t(q{},W{},q{})", c[0], c[1], c[2])
    })
    .collect();
    ensure!(names == expected, "transitions {names:?}");
    ensure!(
        net.net().transitions().iter().all(|t| t.alpha().value() == 0.1),
        "non-uniform alpha"
    );
    ensure!(*net.net().initial_marking() == marking(&[1.0, 0.0, 0.0]), "M0");
    ensure!(*net.final_marking() == marking(&[0.1, 0.7, 1.0]), "M1");
    Ok("4 states, 12 transitions".into())
}

struct Corpus {
    nets: Vec<Fpncw>,
    extended: Vec<fpncw::FpnCmw>,
}

fn corpus() -> Corpus {
    let mut r = rng(0x5eed_0001);
    let mut nets = Vec::new();
    let mut extended = Vec::new();
    for _ in 0..120 {
        let n = fpncw(&mut r);
        let words = new_words(&mut r, &n);
        extended.push(extend(&n, &words).unwrap());
        nets.push(n);
    }
    Corpus { nets, extended }
}

fn faithfulness(c: &Corpus) -> Outcome {
    let mut strings_checked = 0;
    let mut new_transitions = 0;
    for (n, ext) in c.nets.iter().zip(&c.extended) {
        new_transitions += ext.net().net().transitions().len() - n.net().transitions().len();
        for s in strings(n.alphabet(), 3) {
            let a = n.accept(&s).map_err(|e| e.to_string())?;
            let b = ext.net().accept(&s).map_err(|e| e.to_string())?;
            ensure!(a == b, "string {s}: {a} vs {b}");
            strings_checked += 1;
        }
    }
    ensure!(new_transitions > 0, "corpus never synthesizes a transition");
    Ok(format!(
        "{} nets, {strings_checked} strings, {new_transitions} new transitions",
        c.nets.len()
    ))
}

fn extension_identity(c: &Corpus) -> Outcome {
    let mut defined = 0;
    let mut on_new = 0;
    let ext6 = match fixture("example6.toml") {
        Model::Fpncmw(e) => e,
        other => return Err(format!("example6 is a {}", other.kind())),
    };
    for ext in c.extended.iter().chain(std::iter::once(&ext6)) {
        let net = ext.net().net();
        for m in net.reachable().map_err(|e| e.to_string())? {
            for t in net.transition_ids() {
                match ext.check_extension_identity(&m, t) {
                    Ok(true) => {
                        defined += 1;
                        on_new += usize::from(ext.origin(t).is_some());
                    }
                    Ok(false) => {
                        return Err(format!("{} fails at {m}", net.transitions()[t.0].name()))
                    }
                    Err(fpncw::Error::TransitionDisabled(_)) => {}
                    Err(e) => return Err(e.to_string()),
                }
            }
        }
    }
    ensure!(on_new > 0, "no defined pair on a new transition");
    Ok(format!("{defined} defined pairs, {on_new} on new transitions"))
}

fn round_trips() -> Outcome {
    let mut r = rng(0x5eed_0002);
    let mut facws: Vec<_> = (0..100).map(|_| facw(&mut r)).collect();
    facws.extend(FACW_FIXTURES.iter().map(|f| fixture_facw(f)));
    let mut compared = 0;
    for m in &facws {
        let n = facw_to_fpncw(m).map_err(|e| e.to_string())?;
        for s in strings(m.alphabet(), 4) {
            let a = m.accept(&s).map_err(|e| e.to_string())?;
            let b = n.accept(&s).map_err(|e| e.to_string())?;
            let o = n.accept_oracle(&s, 4).map_err(|e| e.to_string())?;
            ensure!(a == b && b == o, "automaton to net, {s}: {a} {b} {o}");
            compared += 1;
        }
    }
    let mut nets: Vec<_> = (0..100).map(|_| fpncw(&mut r)).collect();
    nets.extend(NET_FIXTURES.iter().map(|f| fixture_fpncw(f)));
    for n in &nets {
        let m = fpncw_to_facw(n).map_err(|e| e.to_string())?;
        for s in strings(n.alphabet(), 4) {
            let a = n.accept(&s).map_err(|e| e.to_string())?;
            let b = m.accept(&s).map_err(|e| e.to_string())?;
            let o = n.accept_oracle(&s, 4).map_err(|e| e.to_string())?;
            ensure!(a == b && a == o, "net to automaton, {s}: {a} {b} {o}");
            compared += 1;
        }
    }
    Ok(format!(
        "{} automata, {} nets, {compared} strings",
        facws.len(),
        nets.len()
    ))
}

fn safe_net_reduction() -> Outcome {
    let mut r = rng(0x5eed_0003);
    let mut steps = 0;
    for _ in 0..60 {
        let (classical, reach) = safe_token_net(&mut r);
        let net = classical.to_fpn();
        let fuzzy: Vec<Vec<u32>> = net
            .reachable()
            .map_err(|e| e.to_string())?
            .iter()
            .map(as_counts)
            .collect();
        let a: HashSet<_> = fuzzy.iter().cloned().collect();
        let b: HashSet<_> = reach.iter().cloned().collect();
        ensure!(fuzzy.len() == reach.len() && a == b, "reachable sets differ for {classical:?}");
        for m in &reach {
            let fm = net.with_initial(marking(
                &m.iter().map(|&c| f64::from(c)).collect::<Vec<_>>(),
            ))
            .map_err(|e| e.to_string())?;
            let fm0 = fm.initial_marking();
            for t in 0..classical.pre.len() {
                let id = TransitionId(t);
                let enabled = net.is_enabled(fm0, id).map_err(|e| e.to_string())?;
                ensure!(enabled == classical.enabled(m, t), "enabledness of t{t} at {m:?}");
                if enabled {
                    let next = net.fire(fm0, id).map_err(|e| e.to_string())?;
                    ensure!(as_counts(&next) == classical.fire(m, t), "firing t{t} at {m:?}");
                    steps += 1;
                }
            }
        }
    }
    Ok(format!("60 safe nets, {steps} firing steps"))
}

fn oracle_agreement(c: &Corpus) -> Outcome {
    let mut nets: Vec<&Fpncw> = c.nets.iter().collect();
    let fixtures: Vec<Fpncw> = NET_FIXTURES.iter().map(|f| fixture_fpncw(f)).collect();
    nets.extend(&fixtures);
    let mut compared = 0;
    for n in &nets {
        for s in strings(n.alphabet(), 4) {
            let a = n.accept(&s).map_err(|e| e.to_string())?;
            let o = n.accept_oracle(&s, 4).map_err(|e| e.to_string())?;
            ensure!(a == o, "string {s}: {a} vs oracle {o}");
            compared += 1;
        }
    }
    Ok(format!("{} nets, {compared} strings", nets.len()))
}

fn main() -> ExitCode {
    // Failures are reported on the criterion line, not as a panic trace.
    panic::set_hook(Box::new(|_| {}));
    let corpus = corpus();
    let criteria: Vec<Criterion> = vec![
        ("firing fixture", Box::new(firing_fixture)),
        ("reachability fixture", Box::new(reachability_fixture)),
        ("language fixture", Box::new(language_fixture)),
        ("inference fixture", Box::new(inference_fixture)),
        ("extension fixture", Box::new(extension_fixture)),
        ("weighted-net fixture", Box::new(weighted_fixture)),
        ("conversion fixture", Box::new(conversion_fixture)),
        ("faithfulness", Box::new(|| faithfulness(&corpus))),
        ("extension identity", Box::new(|| extension_identity(&corpus))),
        ("conversion round trips", Box::new(round_trips)),
        ("safe-net reduction", Box::new(safe_net_reduction)),
        ("oracle agreement", Box::new(|| oracle_agreement(&corpus))),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({ms} ms)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
