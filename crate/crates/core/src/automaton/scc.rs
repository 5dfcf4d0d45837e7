use super::dts::{Dts, StateId};

/// Strongly connected components of the reachable part of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccDecomposition {
    /// Components in reverse topological order (sinks first). Each component
    /// is sorted ascending.
    pub sccs: Vec<Vec<StateId>>,
    /// Component index per state; `None` for unreachable states.
    pub scc_of: Vec<Option<usize>>,
}

impl SccDecomposition {
    pub fn len(&self) -> usize {
        self.sccs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sccs.is_empty()
    }

    pub fn same(&self, a: StateId, b: StateId) -> bool {
        self.scc_of[a].is_some() && self.scc_of[a] == self.scc_of[b]
    }
}

/// Iterative Tarjan over the nodes reachable from `roots`.
pub fn tarjan<F, I>(num_nodes: usize, roots: &[usize], mut succ: F) -> SccDecomposition
where
    F: FnMut(usize) -> I,
    I: IntoIterator<Item = usize>,
{
    const UNVISITED: usize = usize::MAX;
    let mut index = vec![UNVISITED; num_nodes];
    let mut low = vec![0; num_nodes];
    let mut on_stack = vec![false; num_nodes];
    let mut stack = Vec::new();
    let mut sccs = Vec::new();
    let mut scc_of = vec![None; num_nodes];
    let mut counter = 0;
    // (node, its successor list, next successor to look at)
    let mut call: Vec<(usize, Vec<usize>, usize)> = Vec::new();

    for &root in roots {
        if index[root] != UNVISITED {
            continue;
        }
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        call.push((root, succ(root).into_iter().collect(), 0));

        while let Some(frame) = call.last_mut() {
            let v = frame.0;
            if frame.2 < frame.1.len() {
                let w = frame.1[frame.2];
                frame.2 += 1;
                if index[w] == UNVISITED {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, succ(w).into_iter().collect(), 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(parent) = call.last() {
                let p = parent.0;
                low[p] = low[p].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    scc_of[w] = Some(sccs.len());
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                sccs.push(comp);
            }
        }
    }
    SccDecomposition { sccs, scc_of }
}

/// SCCs of the states reachable from the initial state.
pub fn scc_decompose(dts: &Dts) -> SccDecomposition {
    tarjan(dts.num_states(), &[dts.initial()], |q| {
        dts.outgoing(q).map(|t| t.target).collect::<Vec<_>>()
    })
}

/// A component is transient when it is a single state without a self-loop.
pub fn is_transient(scc: &[StateId], dts: &Dts) -> bool {
    match scc {
        [q] => dts.outgoing(*q).all(|t| t.target != *q),
        _ => false,
    }
}

/// Components with no edge leaving them.
pub fn bottom_sccs<F, I>(dec: &SccDecomposition, mut succ: F) -> Vec<usize>
where
    F: FnMut(usize) -> I,
    I: IntoIterator<Item = usize>,
{
    (0..dec.sccs.len())
        .filter(|&c| {
            dec.sccs[c]
                .iter()
                .all(|&v| succ(v).into_iter().all(|w| dec.scc_of[w] == Some(c)))
        })
        .collect()
}
