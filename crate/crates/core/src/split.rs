//! Minimal dominating sets of split graphs.
//!
//! With the independent side `S` inclusion-wise maximal, a minimal dominating
//! set `D` is determined by `X = D ∩ C`: `D = X ∪ (S \ N(X))`, and `X` ranges
//! over the subsets of the clique in which every member keeps a private
//! neighbor in `S`. That family is closed under taking subsets, so a binary
//! backtrack over `C` never needs lookahead.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::stream::SolutionStream;

/// Partition of a split graph into an independent side and a clique side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    graph: Arc<Graph>,
    s: VertexSet,
    c: VertexSet,
}

impl SplitPartition {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn independent(&self) -> &VertexSet {
        &self.s
    }

    pub fn clique(&self) -> &VertexSet {
        &self.c
    }

    /// Checks the full set of invariants, including maximality of `S`.
    pub fn is_valid(&self) -> bool {
        is_split_partition(&self.graph, &self.s, &self.c)
            && self
                .c
                .iter()
                .all(|x| self.graph.neighbors(x).iter().any(|&u| self.s.contains(u)))
    }
}

fn is_split_partition(g: &Graph, s: &VertexSet, c: &VertexSet) -> bool {
    s.is_disjoint(c)
        && s.len() + c.len() == g.n()
        && g.check_set(&s.union(c)).is_ok()
        && g.is_independent(s)
        && g.is_clique(c)
}

/// Moves clique vertices without a neighbor in `s` to the independent side,
/// in increasing index order, until `s` is maximal.
pub fn maximalize_split(
    g: impl Into<Arc<Graph>>,
    s: VertexSet,
    c: VertexSet,
) -> Result<SplitPartition> {
    let graph = g.into();
    if !is_split_partition(&graph, &s, &c) {
        return Err(Error::Input(
            "not a partition into an independent set and a clique".into(),
        ));
    }
    let mut s = s;
    let mut c = c;
    let candidates: Vec<Vertex> = c.iter().collect();
    for x in candidates {
        if graph.neighbors(x).iter().all(|&u| !s.contains(u)) {
            c.remove(x);
            s.insert(x);
        }
    }
    Ok(SplitPartition { graph, s, c })
}

/// Streams `D(H)` in binary-counter order of `D ∩ C` (lowest clique index
/// most significant, "exclude" before "include").
pub fn enumerate_split_mds(sp: &SplitPartition) -> SolutionStream {
    let sp = Arc::new(sp.clone());
    SolutionStream::new(move || Box::new(SplitCursor::new(Arc::clone(&sp))))
}

struct SplitCursor {
    sp: Arc<SplitPartition>,
    clique: Vec<Vertex>,
    chosen: Vec<bool>,
    started: bool,
    done: bool,
}

impl SplitCursor {
    fn new(sp: Arc<SplitPartition>) -> Self {
        let clique: Vec<Vertex> = sp.c.iter().collect();
        let chosen = vec![false; clique.len()];
        SplitCursor {
            sp,
            clique,
            chosen,
            started: false,
            done: false,
        }
    }

    /// Whether every member of `x` has a private neighbor in `S` w.r.t. `x`.
    fn feasible(&self, x: &[Vertex]) -> bool {
        let g = &self.sp.graph;
        let mut cnt = vec![0u32; g.n()];
        for &v in x {
            for &u in g.neighbors(v) {
                cnt[u] += 1;
            }
        }
        x.iter().all(|&v| {
            g.neighbors(v)
                .iter()
                .any(|&u| cnt[u] == 1 && self.sp.s.contains(u))
        })
    }

    fn current(&self) -> VertexSet {
        let g = &self.sp.graph;
        let x: VertexSet = self
            .clique
            .iter()
            .zip(&self.chosen)
            .filter_map(|(&v, &on)| on.then_some(v))
            .collect();
        let covered = g.open_neighborhood(&x);
        x.union(&self.sp.s.difference(&covered))
    }

    /// Advance to the next feasible choice vector in counter order.
    fn advance(&mut self) -> bool {
        let k = self.clique.len();
        for j in (0..k).rev() {
            if self.chosen[j] {
                continue;
            }
            let mut trial: Vec<Vertex> = (0..j)
                .filter(|&t| self.chosen[t])
                .map(|t| self.clique[t])
                .collect();
            trial.push(self.clique[j]);
            if self.feasible(&trial) {
                self.chosen[j] = true;
                for t in j + 1..k {
                    self.chosen[t] = false;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for SplitCursor {
    type Item = Result<VertexSet>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(Ok(self.current()));
        }
        if self.advance() {
            Some(Ok(self.current()))
        } else {
            self.done = true;
            None
        }
    }
}
