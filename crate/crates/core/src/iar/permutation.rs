use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Ordering of Rabin pair indices, the "appearance record". Pair indices and
/// positions are 0-based internally; `Display` prints 1-based indices the way
/// they are usually written (`<1,2>` as `12`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation((0..k).collect())
    }

    /// The empty permutation.
    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    /// Builds from a 0-based order, checking it is a bijection on `0..len`.
    pub fn from_order(order: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; order.len()];
        for &i in &order {
            if i >= order.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!("{order:?} is not a permutation")));
            }
        }
        Ok(Permutation(order))
    }

    /// Builds from 1-based pair indices, e.g. `[3, 1, 2]`.
    pub fn from_one_based(order: &[usize]) -> Result<Self> {
        if order.contains(&0) {
            return Err(Error::InvalidPermutation("pair indices start at 1".into()));
        }
        Permutation::from_order(order.iter().map(|i| i - 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.0
    }

    /// Pair index at `position`.
    pub fn at(&self, position: usize) -> usize {
        self.0[position]
    }

    /// Position of pair `index`.
    pub fn position_of(&self, index: usize) -> usize {
        self.0
            .iter()
            .position(|&i| i == index)
            .expect("index belongs to the permutation")
    }

    /// Indices of `visited` in the order of their current positions.
    fn visited_block(&self, visited: &[usize]) -> Result<Vec<usize>> {
        let k = self.len();
        if let Some(&bad) = visited.iter().find(|&&i| i >= k) {
            return Err(Error::PairOutOfRange { index: bad, pairs: k });
        }
        Ok(self.0.iter().copied().filter(|i| visited.contains(i)).collect())
    }

    /// Moves the `visited` indices to the front, ordered by their previous
    /// positions; the rest keep their relative order.
    ///
    /// Note: the closed form usually printed for this update,
    /// `pi'(j) = i_j` for `j <= n` and `pi(j - n + |{i in Move | i <= j}|)`
    /// otherwise, puts positions where pair indices belong and miscounts the
    /// tail. This is the stable move-to-front it is meant to describe.
    pub fn move_to_front(&self, visited: &[usize]) -> Result<Permutation> {
        let block = self.visited_block(visited)?;
        Ok(self.with_front(&block))
    }

    /// Every way of moving `visited` to the front, the front block ranging
    /// over all of its orderings in lexicographic order of previous positions.
    /// The first entry equals [`Permutation::move_to_front`].
    pub fn move_to_front_all(&self, visited: &[usize]) -> Result<Vec<Permutation>> {
        let block = self.visited_block(visited)?;
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..block.len()).collect();
        loop {
            let front: Vec<usize> = idx.iter().map(|&j| block[j]).collect();
            out.push(self.with_front(&front));
            if !next_permutation(&mut idx) {
                return Ok(out);
            }
        }
    }

    fn with_front(&self, front: &[usize]) -> Permutation {
        let mut order = front.to_vec();
        order.extend(self.0.iter().copied().filter(|i| !front.contains(i)));
        Permutation(order)
    }

    /// All permutations of `0..k` in lexicographic order.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (0..k).collect();
        let mut out = vec![Permutation(cur.clone())];
        while next_permutation(&mut cur) {
            out.push(Permutation(cur.clone()));
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Writes 1-based indices, concatenated when all fit in one digit.
pub(crate) fn write_indices(f: &mut impl fmt::Write, order: &[usize]) -> fmt::Result {
    let compact = order.iter().all(|&i| i < 9);
    for (n, &i) in order.iter().enumerate() {
        if n > 0 && !compact {
            f.write_char('.')?;
        }
        write!(f, "{}", i + 1)?;
    }
    Ok(())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_indices(f, &self.0)
    }
}

/// Parses comma-separated 1-based indices (`3,1,2`).
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Permutation::empty());
        }
        let order = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad index {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_one_based(&order)
    }
}
