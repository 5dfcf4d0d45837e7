use std::fmt::Write;

use crate::automaton::{Acceptance, Automaton};

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering. Edges are labeled with the letter and, for parity
/// automata, the priority; other conditions list set memberships.
pub fn to_dot(aut: &Automaton) -> String {
    let dts = &aut.dts;
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "digraph automaton {{").unwrap();
    writeln!(w, "  rankdir=LR;").unwrap();
    writeln!(w, "  init [shape=point];").unwrap();
    writeln!(w, "  init -> {};", dts.initial()).unwrap();
    for q in dts.states() {
        writeln!(w, "  {q} [label=\"{}\"];", escape(&dts.display_name(q))).unwrap();
    }
    for t in dts.transitions() {
        let letter = dts.alphabet().letter_name(t.letter);
        let acc = match &aut.acceptance {
            Acceptance::Parity(pr) => pr
                .get(t.source, t.letter)
                .map_or(String::new(), |p| format!(" {p}")),
            Acceptance::Rabin(pairs) | Acceptance::Streett(pairs) => {
                let mut m = Vec::new();
                for (i, p) in pairs.iter().enumerate() {
                    if p.fin.contains(t.source, t.letter) {
                        m.push(format!("F{}", i + 1));
                    }
                    if p.inf.contains(t.source, t.letter) {
                        m.push(format!("I{}", i + 1));
                    }
                }
                if m.is_empty() { String::new() } else { format!(" {}", m.join(",")) }
            }
            Acceptance::GeneralizedRabin(pairs) => {
                let mut m = Vec::new();
                for (i, p) in pairs.iter().enumerate() {
                    if p.fin.contains(t.source, t.letter) {
                        m.push(format!("F{}", i + 1));
                    }
                    for (j, s) in p.infs.iter().enumerate() {
                        if s.contains(t.source, t.letter) {
                            m.push(format!("I{}^{}", i + 1, j + 1));
                        }
                    }
                }
                if m.is_empty() { String::new() } else { format!(" {}", m.join(",")) }
            }
        };
        writeln!(
            w,
            "  {} -> {} [label=\"{}{}\"];",
            t.source,
            t.target,
            escape(&letter),
            acc
        )
        .unwrap();
    }
    writeln!(w, "}}").unwrap();
    out
}
