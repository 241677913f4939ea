//! Graphviz export.
//!
//! Places are circles carrying their initial degree (a filled dot when
//! positive); places with a positive final degree get a double border.
//! Transitions are boxes annotated with their threshold and, for labeled
//! nets, their word. Output arcs carry their truth values.

use std::fmt::Write as _;

use crate::automaton::Facw;
use crate::cw::Fpncw;
use crate::fuzzyset::Degree;
use crate::net::{Fpn, TransitionId};

fn id(s: &str) -> String {
    let mut out = String::from("\"");
    for c in s.chars() {
        if c == '"' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

fn net_dot(net: &Fpn, labeled: Option<&Fpncw>) -> String {
    let mut out = String::from("digraph fpn {\n  rankdir=LR;\n");
    let m0 = net.initial_marking();
    for (i, name) in net.places().symbols().iter().enumerate() {
        let d = m0.degrees()[i];
        let mut label = name.clone();
        if d.is_positive() {
            let _ = write!(label, "\\n\u{25cf} {d}");
        }
        let mut shape = "circle";
        if let Some(n) = labeled {
            let f = n.final_marking().degrees()[i];
            if f.is_positive() {
                shape = "doublecircle";
                let _ = write!(label, "\\nM1={f}");
            }
        }
        let _ = writeln!(
            out,
            "  {} [shape={shape}, label={}];",
            id(&format!("p:{name}")),
            id(&label)
        );
    }
    for (i, t) in net.transitions().iter().enumerate() {
        let mut label = format!("{}\\nα={}", t.name(), t.alpha());
        if let Some(n) = labeled {
            let _ = write!(label, "\\n{}", n.label(TransitionId(i)).name);
        }
        let tid = id(&format!("t:{}", t.name()));
        let _ = writeln!(out, "  {tid} [shape=box, label={}];", id(&label));
        for &p in t.inputs() {
            let _ = writeln!(out, "  {} -> {tid};", id(&format!("p:{}", net.place_name(p))));
        }
        for &(p, beta) in t.outputs() {
            let _ = writeln!(
                out,
                "  {tid} -> {} [label={}];",
                id(&format!("p:{}", net.place_name(p))),
                id(&beta.to_string())
            );
        }
    }
    out.push_str("}\n");
    out
}

pub fn fpn_to_dot(net: &Fpn) -> String {
    net_dot(net, None)
}

pub fn fpncw_to_dot(n: &Fpncw) -> String {
    net_dot(n.net(), Some(n))
}

/// States are boxes labeled `q|F(q)`; arcs are labeled `W|degree`.
pub fn facw_to_dot(m: &Facw) -> String {
    let mut out = String::from("digraph facw {\n  rankdir=LR;\n");
    let states = m.states();
    let _ = writeln!(out, "  start [shape=point];");
    let _ = writeln!(out, "  start -> {};", id(states.name(m.initial())));
    for q in 0..states.len() {
        let f: Degree = m.finals().grade(q);
        let _ = writeln!(
            out,
            "  {} [shape=box, label={}];",
            id(states.name(q)),
            id(&format!("{}|{f}", states.name(q)))
        );
    }
    for q in 0..states.len() {
        for w in 0..m.alphabet().len() {
            let to = m.delta(q, w);
            for r in to.support() {
                let _ = writeln!(
                    out,
                    "  {} -> {} [label={}];",
                    id(states.name(q)),
                    id(states.name(r)),
                    id(&format!("{}|{}", m.alphabet().word(w).name, to.grade(r)))
                );
            }
        }
    }
    out.push_str("}\n");
    out
}
