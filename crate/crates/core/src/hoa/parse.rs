use std::collections::BTreeSet;

use super::lexer::{err, tokenize, Tok, Token};
use crate::automaton::{
    to_transition_based, Acceptance, Alphabet, Automaton, Dts, GenRabinPair, Letter, Priorities,
    RabinPair, StateId, TransitionSet, MAX_APS,
};
use crate::error::{Error, HoaError, Result};

/// Acceptance formula over set indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Cond {
    True,
    False,
    Fin(usize),
    Inf(usize),
    And(Box<Cond>, Box<Cond>),
    Or(Box<Cond>, Box<Cond>),
}

impl Cond {
    pub(crate) fn eval(&self, inf: &BTreeSet<usize>) -> bool {
        match self {
            Cond::True => true,
            Cond::False => false,
            Cond::Fin(s) => !inf.contains(s),
            Cond::Inf(s) => inf.contains(s),
            Cond::And(a, b) => a.eval(inf) && b.eval(inf),
            Cond::Or(a, b) => a.eval(inf) || b.eval(inf),
        }
    }

    fn sets(&self, out: &mut BTreeSet<usize>) {
        match self {
            Cond::Fin(s) | Cond::Inf(s) => {
                out.insert(*s);
            }
            Cond::And(a, b) | Cond::Or(a, b) => {
                a.sets(out);
                b.sets(out);
            }
            Cond::True | Cond::False => {}
        }
    }

    fn conjuncts<'a>(&'a self, out: &mut Vec<&'a Cond>) {
        match self {
            Cond::And(a, b) => {
                a.conjuncts(out);
                b.conjuncts(out);
            }
            other => out.push(other),
        }
    }

    fn disjuncts<'a>(&'a self, out: &mut Vec<&'a Cond>) {
        match self {
            Cond::Or(a, b) => {
                a.disjuncts(out);
                b.disjuncts(out);
            }
            other => out.push(other),
        }
    }
}

/// Boolean label over AP indices.
#[derive(Debug, Clone)]
enum Label {
    True,
    False,
    Ap(usize),
    Not(Box<Label>),
    And(Box<Label>, Box<Label>),
    Or(Box<Label>, Box<Label>),
}

impl Label {
    fn eval(&self, letter: Letter) -> bool {
        match self {
            Label::True => true,
            Label::False => false,
            Label::Ap(i) => letter >> i & 1 == 1,
            Label::Not(l) => !l.eval(letter),
            Label::And(a, b) => a.eval(letter) && b.eval(letter),
            Label::Or(a, b) => a.eval(letter) || b.eval(letter),
        }
    }
}

#[derive(Debug, Clone, Default)]
struct AccName {
    name: String,
    params: Vec<String>,
}

struct Edge {
    label: Option<Label>,
    target: usize,
    marks: Vec<usize>,
    line: usize,
    column: usize,
}

struct StateDecl {
    id: usize,
    name: Option<String>,
    marks: Vec<usize>,
    edges: Vec<Edge>,
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn here(&self) -> (usize, usize) {
        let t = &self.toks[self.pos];
        (t.line, t.column)
    }

    fn error(&self, message: impl Into<String>) -> HoaError {
        let (l, c) = self.here();
        err(l, c, message)
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect_punct(&mut self, c: char) -> Result<(), HoaError> {
        if *self.peek() == Tok::Punct(c) {
            self.next();
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn int(&mut self) -> Result<usize, HoaError> {
        match self.peek() {
            Tok::Int(n) => {
                let n = *n;
                self.next();
                Ok(n)
            }
            _ => Err(self.error("expected an integer")),
        }
    }

    fn string(&mut self) -> Result<String, HoaError> {
        match self.peek() {
            Tok::Str(s) => {
                let s = s.clone();
                self.next();
                Ok(s)
            }
            _ => Err(self.error("expected a string")),
        }
    }

    fn ident(&mut self) -> Result<String, HoaError> {
        match self.peek() {
            Tok::Ident(s) => {
                let s = s.clone();
                self.next();
                Ok(s)
            }
            _ => Err(self.error("expected an identifier")),
        }
    }

    /// Header or body start: anything that ends the current header item.
    fn at_item_end(&self) -> bool {
        matches!(self.peek(), Tok::Header(_) | Tok::Body | Tok::End | Tok::Eof)
    }

    fn cond(&mut self) -> Result<Cond, HoaError> {
        let mut left = self.cond_and()?;
        while *self.peek() == Tok::Punct('|') {
            self.next();
            let right = self.cond_and()?;
            left = Cond::Or(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn cond_and(&mut self) -> Result<Cond, HoaError> {
        let mut left = self.cond_atom()?;
        while *self.peek() == Tok::Punct('&') {
            self.next();
            let right = self.cond_atom()?;
            left = Cond::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn cond_atom(&mut self) -> Result<Cond, HoaError> {
        match self.peek().clone() {
            Tok::Punct('(') => {
                self.next();
                let c = self.cond()?;
                self.expect_punct(')')?;
                Ok(c)
            }
            Tok::Ident(s) if s == "t" => {
                self.next();
                Ok(Cond::True)
            }
            Tok::Ident(s) if s == "f" => {
                self.next();
                Ok(Cond::False)
            }
            Tok::Ident(s) if s == "Fin" || s == "Inf" => {
                self.next();
                self.expect_punct('(')?;
                if *self.peek() == Tok::Punct('!') {
                    return Err(self.error("complemented acceptance sets are not supported"));
                }
                let n = self.int()?;
                self.expect_punct(')')?;
                Ok(if s == "Fin" { Cond::Fin(n) } else { Cond::Inf(n) })
            }
            _ => Err(self.error("expected an acceptance condition")),
        }
    }

    fn label(&mut self, aps: usize) -> Result<Label, HoaError> {
        let mut left = self.label_and(aps)?;
        while *self.peek() == Tok::Punct('|') {
            self.next();
            let right = self.label_and(aps)?;
            left = Label::Or(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn label_and(&mut self, aps: usize) -> Result<Label, HoaError> {
        let mut left = self.label_atom(aps)?;
        while *self.peek() == Tok::Punct('&') {
            self.next();
            let right = self.label_atom(aps)?;
            left = Label::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn label_atom(&mut self, aps: usize) -> Result<Label, HoaError> {
        match self.peek().clone() {
            Tok::Punct('!') => {
                self.next();
                Ok(Label::Not(Box::new(self.label_atom(aps)?)))
            }
            Tok::Punct('(') => {
                self.next();
                let l = self.label(aps)?;
                self.expect_punct(')')?;
                Ok(l)
            }
            Tok::Ident(s) if s == "t" => {
                self.next();
                Ok(Label::True)
            }
            Tok::Ident(s) if s == "f" => {
                self.next();
                Ok(Label::False)
            }
            Tok::Int(n) => {
                if n >= aps {
                    return Err(self.error(format!("atomic proposition {n} is not declared")));
                }
                self.next();
                Ok(Label::Ap(n))
            }
            Tok::Alias(_) => Err(self.error("aliases are not supported")),
            _ => Err(self.error("expected a label expression")),
        }
    }

    fn marks(&mut self) -> Result<Vec<usize>, HoaError> {
        let mut out = Vec::new();
        if *self.peek() == Tok::Punct('{') {
            self.next();
            while *self.peek() != Tok::Punct('}') {
                out.push(self.int()?);
            }
            self.next();
        }
        Ok(out)
    }
}

/// Parses a deterministic automaton in the HOA format.
pub fn parse_hoa(text: &str) -> Result<Automaton> {
    parse_inner(text).map_err(|e| match e {
        Inner::Hoa(h) => Error::Hoa(h),
        Inner::Other(e) => e,
    })
}

enum Inner {
    Hoa(HoaError),
    Other(Error),
}

impl From<HoaError> for Inner {
    fn from(e: HoaError) -> Self {
        Inner::Hoa(e)
    }
}

fn parse_inner(text: &str) -> Result<Automaton, Inner> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
    };

    match p.next() {
        Tok::Header(h) if h == "HOA" => {
            let v = p.ident()?;
            if v != "v1" {
                return Err(p.error(format!("unsupported HOA version {v}")).into());
            }
        }
        _ => return Err(err(1, 1, "document must start with 'HOA:'").into()),
    }

    let mut states: Option<usize> = None;
    let mut start: Option<usize> = None;
    let mut aps: Option<Vec<String>> = None;
    let mut acc_name: Option<AccName> = None;
    let mut acceptance: Option<(usize, Cond, (usize, usize))> = None;

    loop {
        let (line, column) = p.here();
        match p.next() {
            Tok::Body => break,
            Tok::Header(h) => match h.as_str() {
                "States" => states = Some(p.int()?),
                "Start" => {
                    if start.is_some() {
                        return Err(err(line, column, "multiple initial states are not supported").into());
                    }
                    start = Some(p.int()?);
                    if *p.peek() == Tok::Punct('&') {
                        return Err(p.error("universal branching is not supported").into());
                    }
                }
                "AP" => {
                    let n = p.int()?;
                    if n > MAX_APS {
                        return Err(err(line, column, format!("at most {MAX_APS} atomic propositions")).into());
                    }
                    let names = (0..n).map(|_| p.string()).collect::<Result<Vec<_>, _>>()?;
                    aps = Some(names);
                }
                "acc-name" => {
                    let name = p.ident()?;
                    let mut params = Vec::new();
                    while !p.at_item_end() {
                        params.push(match p.next() {
                            Tok::Ident(s) => s,
                            Tok::Int(n) => n.to_string(),
                            _ => return Err(p.error("bad acc-name parameter").into()),
                        });
                    }
                    acc_name = Some(AccName { name, params });
                }
                "Acceptance" => {
                    let n = p.int()?;
                    let pos = p.here();
                    acceptance = Some((n, p.cond()?, pos));
                }
                "Alias" => return Err(err(line, column, "aliases are not supported").into()),
                _ => {
                    // properties, name, tool, and unknown items
                    while !p.at_item_end() {
                        p.next();
                    }
                }
            },
            Tok::Eof => return Err(err(line, column, "missing --BODY--").into()),
            _ => return Err(err(line, column, "expected a header item").into()),
        }
    }

    let aps = aps.unwrap_or_default();
    let ap_count = aps.len();
    let (set_count, cond, cond_pos) = acceptance.ok_or_else(|| p.error("missing Acceptance header"))?;
    let mut used = BTreeSet::new();
    cond.sets(&mut used);
    if let Some(&bad) = used.iter().find(|&&s| s >= set_count) {
        return Err(err(cond_pos.0, cond_pos.1, format!("acceptance set {bad} is not declared")).into());
    }

    let mut decls: Vec<StateDecl> = Vec::new();
    loop {
        let (line, column) = p.here();
        match p.next() {
            Tok::End => break,
            Tok::Header(h) if h == "State" => {
                if *p.peek() == Tok::Punct('[') {
                    return Err(p.error("state labels are not supported").into());
                }
                let id = p.int()?;
                let name = match p.peek() {
                    Tok::Str(_) => Some(p.string()?),
                    _ => None,
                };
                let marks = p.marks()?;
                let mut edges = Vec::new();
                while !matches!(p.peek(), Tok::Header(_) | Tok::End | Tok::Eof) {
                    let (line, column) = p.here();
                    let label = if *p.peek() == Tok::Punct('[') {
                        p.next();
                        let l = p.label(ap_count)?;
                        p.expect_punct(']')?;
                        Some(l)
                    } else {
                        None
                    };
                    let target = p.int()?;
                    if *p.peek() == Tok::Punct('&') {
                        return Err(p.error("universal branching is not supported").into());
                    }
                    let marks = p.marks()?;
                    edges.push(Edge { label, target, marks, line, column });
                }
                decls.push(StateDecl { id, name, marks, edges });
            }
            Tok::Eof => return Err(err(line, column, "missing --END--").into()),
            _ => return Err(err(line, column, "expected 'State:'").into()),
        }
    }

    let max_ref = decls
        .iter()
        .flat_map(|d| std::iter::once(d.id).chain(d.edges.iter().map(|e| e.target)))
        .chain(start)
        .max();
    let n = match states {
        Some(n) => {
            if let Some(m) = max_ref.filter(|&m| m >= n) {
                return Err(p.error(format!("state {m} exceeds declared state count {n}")).into());
            }
            n
        }
        None => max_ref.map_or(0, |m| m + 1),
    };
    let initial = start.ok_or_else(|| err(1, 1, "missing Start header"))?;

    let alphabet = Alphabet::new(aps).map_err(Inner::Other)?;
    let mut dts = Dts::new(n, alphabet, initial).map_err(Inner::Other)?;
    let mut trans_marks: Vec<(StateId, Letter, Vec<usize>)> = Vec::new();
    let mut state_marks = vec![BTreeSet::new(); n];
    let mut seen = vec![false; n];
    for d in &decls {
        if std::mem::replace(&mut seen[d.id], true) {
            return Err(p.error(format!("state {} is declared twice", d.id)).into());
        }
        if let Some(name) = &d.name {
            dts.set_name(d.id, name.clone());
        }
        check_marks(&d.marks, set_count, &p)?;
        state_marks[d.id].extend(d.marks.iter().copied());
        let implicit = d.edges.iter().all(|e| e.label.is_none());
        if !implicit && d.edges.iter().any(|e| e.label.is_none()) {
            return Err(p.error(format!("state {} mixes labeled and unlabeled edges", d.id)).into());
        }
        if implicit && !d.edges.is_empty() && d.edges.len() != 1 << ap_count {
            return Err(p.error(format!("state {} has {} implicit edges", d.id, d.edges.len())).into());
        }
        for (i, e) in d.edges.iter().enumerate() {
            check_marks(&e.marks, set_count, &p)?;
            let letters: Vec<Letter> = match &e.label {
                None => vec![i],
                Some(l) => (0..1usize << ap_count).filter(|&a| l.eval(a)).collect(),
            };
            for a in letters {
                if dts.has_transition(d.id, a) {
                    let msg = format!("nondeterministic: state {} has two edges on one letter", d.id);
                    return Err(err(e.line, e.column, msg).into());
                }
                dts.add_transition(d.id, a, e.target).map_err(Inner::Other)?;
                trans_marks.push((d.id, a, e.marks.clone()));
            }
        }
    }

    let mut sets = to_transition_based(&dts, &state_marks, set_count);
    for (q, a, marks) in &trans_marks {
        for &m in marks {
            sets[m].insert(*q, *a);
        }
    }
    let marks_of = |q: StateId, a: Letter| -> Vec<usize> {
        (0..set_count).filter(|&m| sets[m].contains(q, a)).collect()
    };
    let acceptance = build_acceptance(acc_name.as_ref(), &cond, &sets, &dts, &marks_of)
        .map_err(|m| Inner::Hoa(err(cond_pos.0, cond_pos.1, m)))?;
    Automaton::new(dts, acceptance).map_err(Inner::Other)
}

fn check_marks(marks: &[usize], set_count: usize, p: &Parser) -> Result<(), HoaError> {
    match marks.iter().find(|&&m| m >= set_count) {
        Some(m) => Err(p.error(format!("acceptance set {m} is not declared"))),
        None => Ok(()),
    }
}

fn build_acceptance(
    acc_name: Option<&AccName>,
    cond: &Cond,
    sets: &[TransitionSet],
    dts: &Dts,
    marks_of: &dyn Fn(StateId, Letter) -> Vec<usize>,
) -> Result<Acceptance, String> {
    let set = |i: usize| sets[i].clone();
    let name = acc_name.map(|a| a.name.as_str());
    match name {
        Some("parity") => parity(acc_name.expect("named"), cond, dts, marks_of),
        Some("Streett") => streett(cond, &set).ok_or_else(|| "not a Streett condition".to_string()),
        Some("generalized-Rabin") => {
            let clauses = dnf(cond)?;
            Ok(Acceptance::GeneralizedRabin(gen_pairs(&clauses, &set)))
        }
        Some("Rabin") => {
            let clauses = dnf(cond)?;
            rabin(&clauses, &set).ok_or_else(|| "not a Rabin condition".to_string())
        }
        _ => {
            let mut conj = Vec::new();
            cond.conjuncts(&mut conj);
            if conj.len() > 1 {
                if let Some(s) = streett(cond, &set) {
                    return Ok(s);
                }
            }
            let clauses = dnf(cond)?;
            Ok(rabin(&clauses, &set)
                .unwrap_or_else(|| Acceptance::GeneralizedRabin(gen_pairs(&clauses, &set))))
        }
    }
}

/// Disjunctive normal form: each clause is (Fin sets, Inf sets).
type Clause = (Vec<usize>, Vec<usize>);

fn dnf(cond: &Cond) -> Result<Vec<Clause>, String> {
    const LIMIT: usize = 1 << 12;
    Ok(match cond {
        Cond::True => vec![(vec![], vec![])],
        Cond::False => vec![],
        Cond::Fin(s) => vec![(vec![*s], vec![])],
        Cond::Inf(s) => vec![(vec![], vec![*s])],
        Cond::Or(a, b) => {
            let mut out = dnf(a)?;
            out.extend(dnf(b)?);
            out
        }
        Cond::And(a, b) => {
            let (x, y) = (dnf(a)?, dnf(b)?);
            if x.len() * y.len() > LIMIT {
                return Err("acceptance condition is too large".into());
            }
            let mut out = Vec::new();
            for (f1, i1) in &x {
                for (f2, i2) in &y {
                    let fin = f1.iter().chain(f2).copied().collect();
                    let inf = i1.iter().chain(i2).copied().collect();
                    out.push((fin, inf));
                }
            }
            out
        }
    })
}

fn union(indices: &[usize], set: &dyn Fn(usize) -> TransitionSet) -> TransitionSet {
    let mut out = TransitionSet::new();
    for &i in indices {
        out.union_with(&set(i));
    }
    out
}

fn rabin(clauses: &[Clause], set: &dyn Fn(usize) -> TransitionSet) -> Option<Acceptance> {
    if clauses.len() == 1 && clauses[0].0.is_empty() && clauses[0].1.is_empty() {
        // `t`: one pair that is always satisfied on an infinite run
        return None;
    }
    clauses
        .iter()
        .map(|(fin, inf)| (inf.len() == 1).then(|| RabinPair::new(union(fin, set), set(inf[0]))))
        .collect::<Option<Vec<_>>>()
        .map(Acceptance::Rabin)
}

fn gen_pairs(clauses: &[Clause], set: &dyn Fn(usize) -> TransitionSet) -> Vec<GenRabinPair> {
    clauses
        .iter()
        .map(|(fin, inf)| GenRabinPair {
            fin: union(fin, set),
            infs: inf.iter().map(|&i| set(i)).collect(),
        })
        .collect()
}

/// Conjunction of `Fin(i) | Inf(f)` disjunctions, or `t`.
fn streett(cond: &Cond, set: &dyn Fn(usize) -> TransitionSet) -> Option<Acceptance> {
    if *cond == Cond::True {
        return Some(Acceptance::Streett(Vec::new()));
    }
    let mut conj = Vec::new();
    cond.conjuncts(&mut conj);
    let mut pairs = Vec::new();
    for c in conj {
        let mut dis = Vec::new();
        c.disjuncts(&mut dis);
        let (mut fins, mut infs) = (Vec::new(), Vec::new());
        for d in dis {
            match d {
                Cond::Fin(s) => fins.push(*s),
                Cond::Inf(s) => infs.push(*s),
                _ => return None,
            }
        }
        if fins.len() != 1 || infs.len() != 1 {
            return None;
        }
        pairs.push(RabinPair::new(set(infs[0]), set(fins[0])));
    }
    Some(Acceptance::Streett(pairs))
}

/// Converts any parity variant to max-even priorities.
fn parity(
    acc: &AccName,
    cond: &Cond,
    dts: &Dts,
    marks_of: &dyn Fn(StateId, Letter) -> Vec<usize>,
) -> Result<Acceptance, String> {
    let bad = || format!("bad parity parameters {:?}", acc.params);
    if acc.params.len() != 3 {
        return Err(bad());
    }
    let max = match acc.params[0].as_str() {
        "max" => true,
        "min" => false,
        _ => return Err(bad()),
    };
    let even = match acc.params[1].as_str() {
        "even" => true,
        "odd" => false,
        _ => return Err(bad()),
    };
    let colors: usize = acc.params[2].parse().map_err(|_| bad())?;

    let colored: Vec<((StateId, Letter), Option<usize>)> = dts
        .transitions()
        .map(|t| {
            let m = marks_of(t.source, t.letter);
            let c = if max { m.into_iter().max() } else { m.into_iter().min() };
            (t.key(), c)
        })
        .collect();
    if colored.iter().any(|(_, c)| c.is_some_and(|c| c >= colors)) {
        return Err("mark exceeds declared colour count".into());
    }
    let top = colored.iter().filter_map(|(_, c)| *c).max().unwrap_or(0);
    // to max-even: a colour `c` becomes `c` (max even), `c + 1` (max odd),
    // `n - c` with `n` of the colour's winning parity (min variants)
    let n = if (top % 2 == 0) == even { top } else { top + 1 };
    let convert = |c: usize| -> u32 {
        match (max, even) {
            (true, true) => c as u32,
            (true, false) => c as u32 + 1,
            (false, _) => (n - c) as u32,
        }
    };
    let mut pr = Priorities::new();
    let lowest = colored.iter().filter_map(|(_, c)| c.map(convert)).min();
    let unmarked_ok = cond.eval(&BTreeSet::new());
    let unmarked = if unmarked_ok { 0 } else { 1 };
    let shift = match lowest {
        Some(l) if colored.iter().any(|(_, c)| c.is_none()) && l <= unmarked => 2,
        _ => 0,
    };
    for ((q, a), c) in colored {
        pr.set(q, a, c.map_or(unmarked, |c| convert(c) + shift));
    }
    Ok(Acceptance::Parity(pr))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{accepts_lasso, LassoWord};

    const FIG1: &str = r#"HOA: v1
name: "fig1"
States: 3
Start: 0
AP: 1 "b"
acc-name: Rabin 2
Acceptance: 4 (Fin(0) & Inf(1)) | (Fin(2) & Inf(3))
properties: trans-labels explicit-labels trans-acc deterministic
--BODY--
State: 0 "p"
[!0] 0 {0 3}
[0] 1 {0}
State: 1 "q"
[!0] 0 {2}
[0] 2 {2}
State: 2 "r"
[!0] 1
[0] 2 {1}
--END--
"#;

    #[test]
    fn parses_rabin() {
        let aut = parse_hoa(FIG1).unwrap();
        assert_eq!(aut.num_states(), 3);
        let pairs = aut.rabin_pairs().unwrap();
        assert_eq!(pairs.len(), 2);
        assert!(pairs[0].fin.contains(0, 0) && pairs[0].fin.contains(0, 1));
        assert!(pairs[1].inf.contains(0, 0));
        assert_eq!(aut.dts.name(2), Some("r"));
    }

    #[test]
    fn inferred_kinds() {
        let doc = |acc: &str| {
            let marks = if acc.starts_with('0') { "" } else { "{0}" };
            format!("HOA: v1 States: 1 Start: 0 AP: 0 Acceptance: {acc} --BODY-- State: 0 [t] 0 {marks} --END--")
        };
        let kind = |acc: &str| parse_hoa(&doc(acc)).unwrap().acceptance.kind();
        use crate::error::AcceptanceKind::*;
        assert_eq!(kind("1 Inf(0)"), Rabin);
        assert_eq!(kind("1 Fin(0)"), GeneralizedRabin);
        assert_eq!(kind("2 (Fin(0)|Inf(1)) & (Fin(1)|Inf(0))"), Streett);
        assert_eq!(kind("2 Fin(0) & Inf(1) & Inf(0)"), GeneralizedRabin);
        assert_eq!(kind("0 f"), Rabin);
        let t = parse_hoa(&doc("1 t")).unwrap();
        assert!(accepts_lasso(&t, &LassoWord::new(vec![], vec![0]).unwrap()));
    }

    #[test]
    fn parity_variants_agree() {
        // loop on letter 0 with colour 1, loop on letter 1 with colour 2
        let doc = |name: &str| {
            format!(
                "HOA: v1 States: 1 Start: 0 AP: 1 \"a\" acc-name: parity {name} 3 Acceptance: 3 t \
                 --BODY-- State: 0 [!0] 0 {{1}} [0] 0 {{2}} --END--"
            )
        };
        let w = |c: &[usize]| LassoWord::new(vec![], c.to_vec()).unwrap();
        for (name, a, ab) in [
            ("max even", false, true),
            ("max odd", true, false),
            ("min even", false, false),
            ("min odd", true, true),
        ] {
            let aut = parse_hoa(&doc(name)).unwrap();
            assert_eq!(accepts_lasso(&aut, &w(&[0])), a, "{name} on a");
            assert_eq!(accepts_lasso(&aut, &w(&[0, 1])), ab, "{name} on ab");
        }
    }

    #[test]
    fn unmarked_parity_transitions() {
        let doc = "HOA: v1 States: 1 Start: 0 AP: 1 \"a\" acc-name: parity max even 2 \
                   Acceptance: 2 Fin(1) & Inf(0) --BODY-- State: 0 [!0] 0 [0] 0 {0} --END--";
        let aut = parse_hoa(doc).unwrap();
        let w = |c: &[usize]| LassoWord::new(vec![], c.to_vec()).unwrap();
        assert!(!accepts_lasso(&aut, &w(&[0])));
        assert!(accepts_lasso(&aut, &w(&[0, 1])));
    }

    #[test]
    fn implicit_labels_and_state_marks() {
        let doc = "HOA: v1 States: 2 Start: 0 AP: 1 \"a\" Acceptance: 1 Inf(0) \
                   --BODY-- State: 0 {0} 0 1 State: 1 1 1 --END--";
        let aut = parse_hoa(doc).unwrap();
        assert_eq!(aut.dts.succ(0, 1), Some(1));
        assert!(aut.rabin_pairs().unwrap()[0].inf.contains(0, 1));
    }

    fn hoa_err(doc: &str) -> HoaError {
        match parse_hoa(doc) {
            Err(Error::Hoa(e)) => e,
            other => panic!("expected HOA error, got {other:?}"),
        }
    }

    #[test]
    fn rejections() {
        let e = hoa_err("HOA: v1 States: 1 Start: 0 Acceptance: 1 Inf(3) --BODY-- --END--");
        assert!(e.message.contains("not declared"));
        assert!(hoa_err("HOA: v1 Start: 0 Start: 1 Acceptance: 0 t --BODY-- --END--")
            .message
            .contains("multiple"));
        assert!(hoa_err("HOA: v1 Start: 0&1 Acceptance: 0 t --BODY-- --END--")
            .message
            .contains("universal"));
        assert!(hoa_err("HOA: v1 Start: 0 AP: 1 \"a\" Acceptance: 0 t --BODY-- State: 0 [t] 0 [0] 0 --END--")
            .message
            .contains("nondeterministic"));
        assert!(hoa_err("HOA: v1 Start: 0 Alias: @a 0 Acceptance: 0 t --BODY-- --END--")
            .message
            .contains("aliases"));
        assert!(hoa_err("HOA: v1 Start: 0 AP: 1 \"a\" Acceptance: 0 t --BODY-- State: [0] 0 --END--")
            .message
            .contains("state labels"));
        assert!(hoa_err("HOA: v1 Start: 0 Acceptance: 1 Inf(0) --BODY-- State: 0 [t] 0 {2} --END--")
            .message
            .contains("not declared"));
        let e = hoa_err("HOA: v1\nStates: 1\nStart: 0\nAcceptance: 0 t\n--BODY--\nState: 0 [t] 0 [t] 0\n--END--");
        assert_eq!(e.line, 6);
        assert!(hoa_err("HOA: v2 --BODY-- --END--").message.contains("version"));
    }
}
