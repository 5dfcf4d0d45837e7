//! Random automata and size statistics for comparing the constructions.
//!
//! Every instance is drawn from its own ChaCha8 stream: the generator key is
//! the 64-bit seed (expanded by `SeedableRng::seed_from_u64`) and the stream
//! id is `tag << 48 | index`, with tag 0 for [`random_dra`], 1 for
//! [`random_strongly_connected_dra`], 2 for [`random_dgra`] and 3 for
//! [`random_dsa`]. Instances are therefore independent of each other and of
//! the order in which they are generated.

use std::fmt;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::automaton::{
    scc_decompose, to_state_based, Acceptance, Alphabet, Automaton, Dts, GenRabinPair, RabinPair,
    TransitionSet,
};
use crate::error::{Error, Result};
use crate::iar::{iar, IarOptions, Permutation};
use crate::star::iar_star;

#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    pub states: RangeInclusive<usize>,
    pub pairs: RangeInclusive<usize>,
    pub aps: usize,
    /// Probability that a free (state, letter) slot gets a transition.
    pub density: f64,
    /// Probability that a transition joins a given acceptance set.
    pub acc_probability: f64,
    pub seed: u64,
    pub count: usize,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            states: 5..=15,
            pairs: 2..=3,
            aps: 1,
            density: 0.05,
            acc_probability: 0.2,
            seed: 0,
            count: 100,
        }
    }
}

impl GenParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Invalid(m.to_string()));
        if self.states.is_empty() || *self.states.start() == 0 {
            return bad("state range must be nonempty and positive");
        }
        if self.pairs.is_empty() {
            return bad("pair range must be nonempty");
        }
        if !(0.0..=1.0).contains(&self.density) || !(0.0..=1.0).contains(&self.acc_probability) {
            return bad("probabilities must lie in [0, 1]");
        }
        Alphabet::with_aps(self.aps).map(|_| ())
    }
}

fn rng_for(params: &GenParams, tag: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    rng.set_stream(tag << 48 | index as u64);
    rng
}

/// Transitions: a random spanning tree from state 0 makes every state
/// reachable, then every free slot is filled with probability `density`.
fn random_dts(params: &GenParams, n: usize, rng: &mut ChaCha8Rng) -> Dts {
    let alphabet = Alphabet::with_aps(params.aps).expect("validated");
    let sigma = alphabet.size();
    let mut dts = Dts::new(n, alphabet, 0).expect("n > 0");
    for q in 1..n {
        let free: Vec<(usize, usize)> = (0..q)
            .flat_map(|p| (0..sigma).map(move |a| (p, a)))
            .filter(|&(p, a)| !dts.has_transition(p, a))
            .collect();
        let &(p, a) = free.choose(rng).expect("the newest state has free slots");
        dts.add_transition(p, a, q).expect("free slot");
    }
    fill(&mut dts, params.density, rng);
    dts
}

fn fill(dts: &mut Dts, density: f64, rng: &mut ChaCha8Rng) {
    let n = dts.num_states();
    for q in 0..n {
        for a in dts.alphabet().letters() {
            if !dts.has_transition(q, a) && rng.gen_bool(density) {
                let t = rng.gen_range(0..n);
                dts.add_transition(q, a, t).expect("free slot");
            }
        }
    }
}

fn random_set(dts: &Dts, p: f64, rng: &mut ChaCha8Rng) -> TransitionSet {
    dts.transitions()
        .filter(|_| rng.gen_bool(p))
        .map(|t| t.key())
        .collect()
}

fn random_pairs(dts: &Dts, k: usize, p: f64, rng: &mut ChaCha8Rng) -> Vec<RabinPair> {
    (0..k)
        .map(|_| {
            let fin = random_set(dts, p, rng);
            let inf = random_set(dts, p, rng);
            RabinPair::new(fin, inf)
        })
        .collect()
}

/// Random deterministic Rabin automaton number `index`.
pub fn random_dra(params: &GenParams, index: usize) -> Automaton {
    let mut rng = rng_for(params, 0, index);
    let n = rng.gen_range(params.states.clone());
    let k = rng.gen_range(params.pairs.clone());
    let dts = random_dts(params, n, &mut rng);
    let pairs = random_pairs(&dts, k, params.acc_probability, &mut rng);
    Automaton::new(dts, Acceptance::Rabin(pairs)).expect("generated automaton is valid")
}

/// Random Rabin automaton whose states form one SCC: a random cycle through
/// all states, then free slots filled as in [`random_dra`].
pub fn random_strongly_connected_dra(params: &GenParams, index: usize) -> Automaton {
    let mut rng = rng_for(params, 1, index);
    let n = rng.gen_range(params.states.clone());
    let k = rng.gen_range(params.pairs.clone());
    let alphabet = Alphabet::with_aps(params.aps).expect("validated");
    let sigma = alphabet.size();
    let mut dts = Dts::new(n, alphabet, 0).expect("n > 0");
    let mut order: Vec<usize> = (1..n).collect();
    order.shuffle(&mut rng);
    order.insert(0, 0);
    for i in 0..n {
        let a = rng.gen_range(0..sigma);
        dts.add_transition(order[i], a, order[(i + 1) % n]).expect("one edge per state");
    }
    fill(&mut dts, params.density, &mut rng);
    let pairs = random_pairs(&dts, k, params.acc_probability, &mut rng);
    Automaton::new(dts, Acceptance::Rabin(pairs)).expect("generated automaton is valid")
}

/// Random generalized Rabin automaton; every pair gets between 0 and
/// `max_infs` required sets.
pub fn random_dgra(params: &GenParams, max_infs: usize, index: usize) -> Automaton {
    let mut rng = rng_for(params, 2, index);
    let n = rng.gen_range(params.states.clone());
    let k = rng.gen_range(params.pairs.clone());
    let dts = random_dts(params, n, &mut rng);
    let p = params.acc_probability;
    let pairs = (0..k)
        .map(|_| {
            let fin = random_set(&dts, p, &mut rng);
            let l = rng.gen_range(0..=max_infs);
            let infs = (0..l).map(|_| random_set(&dts, p, &mut rng)).collect();
            GenRabinPair { fin, infs }
        })
        .collect();
    Automaton::new(dts, Acceptance::GeneralizedRabin(pairs)).expect("generated automaton is valid")
}

/// Random Streett automaton.
pub fn random_dsa(params: &GenParams, index: usize) -> Automaton {
    let mut rng = rng_for(params, 3, index);
    let n = rng.gen_range(params.states.clone());
    let k = rng.gen_range(params.pairs.clone());
    let dts = random_dts(params, n, &mut rng);
    let pairs = random_pairs(&dts, k, params.acc_probability, &mut rng);
    Automaton::new(dts, Acceptance::Streett(pairs)).expect("generated automaton is valid")
}

/// A translation compared by the benchmark.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BenchMode {
    Iar,
    IarStar,
    IarPreferExisting,
    /// IAR* followed by conversion to state-based acceptance.
    SbOutput,
}

impl BenchMode {
    pub const ALL: [BenchMode; 4] = [
        BenchMode::Iar,
        BenchMode::IarStar,
        BenchMode::IarPreferExisting,
        BenchMode::SbOutput,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BenchMode::Iar => "iar",
            BenchMode::IarStar => "iar-star",
            BenchMode::IarPreferExisting => "iar-prefer-existing",
            BenchMode::SbOutput => "sb-output",
        }
    }

    pub fn run(self, aut: &Automaton, budget: usize) -> Result<Automaton> {
        let opts = IarOptions {
            state_budget: budget,
            prefer_existing: self == BenchMode::IarPreferExisting,
            ..IarOptions::default()
        };
        let k = aut.rabin_pairs()?.len();
        match self {
            BenchMode::Iar | BenchMode::IarPreferExisting => {
                Ok(iar(aut, &Permutation::identity(k), &opts)?.automaton)
            }
            BenchMode::IarStar => Ok(iar_star(aut, &opts)?.automaton),
            BenchMode::SbOutput => to_state_based(&iar_star(aut, &opts)?.automaton),
        }
    }
}

impl fmt::Display for BenchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BenchMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown mode {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    BudgetExceeded,
    Error(String),
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Ok => f.write_str("ok"),
            Outcome::BudgetExceeded => f.write_str("budget-exceeded"),
            Outcome::Error(_) => f.write_str("error"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StatRecord {
    pub instance: usize,
    pub mode: String,
    pub states: usize,
    pub sccs: usize,
    /// Largest priority, or the number of acceptance sets for other conditions.
    pub max_priority: usize,
    pub time_ms: f64,
    pub outcome: Outcome,
}

impl StatRecord {
    pub const CSV_HEADER: &'static str = "instance,mode,states,sccs,max_priority,time_ms,outcome";

    pub fn csv_row(&self, with_time: bool) -> String {
        let time = if with_time { format!("{:.3}", self.time_ms) } else { String::new() };
        format!(
            "{},{},{},{},{},{},{}",
            self.instance, self.mode, self.states, self.sccs, self.max_priority, time, self.outcome
        )
    }
}

/// Runs `translate` and measures its result.
pub fn collect_stats(
    instance: usize,
    tag: &str,
    translate: impl FnOnce() -> Result<Automaton>,
) -> StatRecord {
    let start = Instant::now();
    let result = translate();
    let time_ms = start.elapsed().as_secs_f64() * 1e3;
    stat_record(instance, tag, &result, time_ms)
}

/// Record for an already computed translation result.
pub fn stat_record(instance: usize, tag: &str, result: &Result<Automaton>, time_ms: f64) -> StatRecord {
    let mut rec = StatRecord {
        instance,
        mode: tag.to_string(),
        states: 0,
        sccs: 0,
        max_priority: 0,
        time_ms,
        outcome: Outcome::Ok,
    };
    match result {
        Ok(aut) => {
            rec.states = aut.num_states();
            rec.sccs = scc_decompose(&aut.dts).len();
            rec.max_priority = aut.max_priority();
        }
        Err(Error::BudgetExceeded(_)) => rec.outcome = Outcome::BudgetExceeded,
        Err(e) => rec.outcome = Outcome::Error(e.to_string()),
    }
    rec
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModeSummary {
    pub mode: BenchMode,
    /// Means over the instances on which every mode succeeded.
    pub mean_states: f64,
    pub mean_sccs: f64,
    /// Share of those instances where this mode is among the smallest (ties
    /// count for every tied mode).
    pub smallest_pct: f64,
    pub failures: usize,
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub records: Vec<StatRecord>,
    pub summary: Vec<ModeSummary>,
    /// Instances on which every mode succeeded.
    pub compared: usize,
}

pub fn run_benchmark(params: &GenParams, modes: &[BenchMode], budget: usize) -> Result<BenchReport> {
    params.validate()?;
    let per_instance: Vec<Vec<StatRecord>> = (0..params.count)
        .into_par_iter()
        .map(|i| {
            let aut = random_dra(params, i);
            modes
                .iter()
                .map(|&m| collect_stats(i, m.name(), || m.run(&aut, budget)))
                .collect()
        })
        .collect();

    let ok_rows: Vec<&Vec<StatRecord>> = per_instance
        .iter()
        .filter(|rs| rs.iter().all(|r| r.outcome == Outcome::Ok))
        .collect();
    let compared = ok_rows.len();
    let summary = modes
        .iter()
        .enumerate()
        .map(|(j, &mode)| {
            let mean = |f: &dyn Fn(&StatRecord) -> usize| {
                if compared == 0 {
                    0.0
                } else {
                    ok_rows.iter().map(|rs| f(&rs[j]) as f64).sum::<f64>() / compared as f64
                }
            };
            let smallest = ok_rows
                .iter()
                .filter(|rs| rs[j].states == rs.iter().map(|r| r.states).min().expect("modes"))
                .count();
            ModeSummary {
                mode,
                mean_states: mean(&|r| r.states),
                mean_sccs: mean(&|r| r.sccs),
                smallest_pct: if compared == 0 { 0.0 } else { 100.0 * smallest as f64 / compared as f64 },
                failures: per_instance.iter().filter(|rs| rs[j].outcome != Outcome::Ok).count(),
            }
        })
        .collect();
    Ok(BenchReport {
        records: per_instance.into_iter().flatten().collect(),
        summary,
        compared,
    })
}

/// Writes the records as CSV followed by a commented summary block.
pub fn write_csv(report: &BenchReport, mut w: impl Write, with_time: bool) -> io::Result<()> {
    writeln!(w, "{}", StatRecord::CSV_HEADER)?;
    for r in &report.records {
        writeln!(w, "{}", r.csv_row(with_time))?;
    }
    writeln!(w, "# compared_instances {}", report.compared)?;
    for s in &report.summary {
        writeln!(w, "# mean_states mode={} {:.3}", s.mode, s.mean_states)?;
        writeln!(w, "# mean_sccs mode={} {:.3}", s.mode, s.mean_sccs)?;
        writeln!(w, "# smallest_pct mode={} {:.1}", s.mode, s.smallest_pct)?;
        writeln!(w, "# failures mode={} {}", s.mode, s.failures)?;
    }
    Ok(())
}
