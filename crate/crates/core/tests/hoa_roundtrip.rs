mod common;

use common::{load, validate_hoa};
use iar::automaton::{to_state_based, Automaton};
use iar::bench::{random_dgra, random_dra, random_dsa, GenParams};
use iar::hoa::{parse_hoa, to_dot, to_hoa, to_hoa_with, EmitOptions};
use iar::iar::{iar_default, IarOptions};
use iar::star::iar_star;
use proptest::prelude::*;

fn roundtrip(aut: &Automaton) {
    let doc = to_hoa(aut);
    validate_hoa(&doc).unwrap_or_else(|e| panic!("{e}\n{doc}"));
    let back = parse_hoa(&doc).unwrap_or_else(|e| panic!("{e}\n{doc}"));
    assert_eq!(&back, aut, "{doc}");
}

#[test]
fn examples_roundtrip() {
    for name in ["fig1.hoa", "fig2.hoa", "fig3.hoa", "streett.hoa", "gen_rabin.hoa"] {
        let aut = load(name);
        roundtrip(&aut);
        if let Ok(out) = iar_default(&aut) {
            roundtrip(&out.automaton);
        }
    }
}

#[test]
fn state_based_output_roundtrips() {
    let star = iar_star(&load("fig1.hoa"), &IarOptions::default()).unwrap().automaton;
    let sb = to_state_based(&star).unwrap();
    let opts = EmitOptions { name: Some("sb".into()), state_based: true };
    let doc = to_hoa_with(&sb, &opts).unwrap();
    assert!(doc.contains("state-acc"));
    validate_hoa(&doc).unwrap();
    assert_eq!(parse_hoa(&doc).unwrap(), sb);
    // transition-based automata with mixed outgoing priorities are refused
    assert!(to_hoa_with(&star, &opts).is_err());
}

#[test]
fn dot_lists_every_edge() {
    let out = iar_default(&load("fig1.hoa")).unwrap().automaton;
    let dot = to_dot(&out);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 10 + 1);
    assert!(dot.contains("label=\"p,12\""));
    assert!(dot.contains("[label=\"!b 4\"]"));
}

#[test]
fn validator_rejects_broken_documents() {
    let doc = to_hoa(&load("fig1.hoa"));
    assert!(validate_hoa(&doc.replace("--END--", "")).is_err());
    assert!(validate_hoa(&doc.replace("{0 3}", "{0 9}")).is_err());
    assert!(validate_hoa(&doc.replace("Start: 0", "Start: 0\nStart: 1")).is_err());
}

fn params(seed: u64) -> GenParams {
    GenParams {
        states: 1..=8,
        pairs: 0..=3,
        aps: 2,
        density: 0.4,
        acc_probability: 0.3,
        seed,
        count: 1,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_automata_roundtrip(seed in any::<u64>()) {
        let p = params(seed);
        let dra = random_dra(&p, 0);
        roundtrip(&dra);
        roundtrip(&random_dgra(&p, 3, 0));
        roundtrip(&random_dsa(&p, 0));
        let star = iar_star(&dra, &IarOptions::default()).unwrap().automaton;
        roundtrip(&star);
        roundtrip(&to_state_based(&star).unwrap());
    }
}
