//! Peelings: nested prescribed sets obtained by repeatedly stripping the
//! closed neighborhood of the smallest remaining vertex.

use crate::graph::{BicoloredGraph, Graph, Vertex, VertexSet};

/// Levels `V_0 ⊂ … ⊂ V_p` and vertex sequence `v_1, …, v_p`.
///
/// `levels[i]` is `V_i` and `vertex_sequence[i - 1]` is `v_i`. Every vertex
/// of the prescribed set records the first level containing it, so level
/// membership is a constant-time lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Peeling {
    levels: Vec<VertexSet>,
    vertex_sequence: Vec<Vertex>,
    entry_level: Vec<Option<usize>>,
}

impl Peeling {
    /// Assembles a peeling from raw parts without validating it.
    pub fn from_parts(levels: Vec<VertexSet>, vertex_sequence: Vec<Vertex>, n: usize) -> Self {
        let mut entry_level = vec![None; n];
        for (i, level) in levels.iter().enumerate().rev() {
            for v in level {
                if v < n {
                    entry_level[v] = Some(i);
                }
            }
        }
        Peeling {
            levels,
            vertex_sequence,
            entry_level,
        }
    }

    /// Number of peeling steps `p`.
    pub fn depth(&self) -> usize {
        self.vertex_sequence.len()
    }

    pub fn levels(&self) -> &[VertexSet] {
        &self.levels
    }

    pub fn level(&self, i: usize) -> &VertexSet {
        &self.levels[i]
    }

    pub fn vertex_sequence(&self) -> &[Vertex] {
        &self.vertex_sequence
    }

    /// `v_i` for `1 ≤ i ≤ p`.
    pub fn vertex(&self, i: usize) -> Vertex {
        self.vertex_sequence[i - 1]
    }

    /// Whether `y ∈ V_i`.
    pub fn in_level(&self, y: Vertex, i: usize) -> bool {
        matches!(self.entry_level.get(y), Some(Some(l)) if *l <= i)
    }
}

/// Peels `A` by always removing `N[v]` for the smallest remaining `v`.
pub fn compute_peeling(bg: &BicoloredGraph) -> Peeling {
    let g = bg.graph();
    let mut current = bg.prescribed().clone();
    let mut levels = vec![current.clone()];
    let mut sequence = Vec::new();
    while let Some(&v) = current.as_slice().first() {
        current = current.difference(&g.closed_neighbors(v));
        sequence.push(v);
        levels.push(current.clone());
    }
    levels.reverse();
    sequence.reverse();
    Peeling::from_parts(levels, sequence, g.n())
}

/// Checks every peeling invariant against `bg`.
pub fn validate_peeling(bg: &BicoloredGraph, p: &Peeling) -> bool {
    let g: &Graph = bg.graph();
    let depth = p.vertex_sequence.len();
    if p.levels.len() != depth + 1 {
        return false;
    }
    if !p.levels[0].is_empty() || &p.levels[depth] != bg.prescribed() {
        return false;
    }
    for i in 1..=depth {
        let v = p.vertex_sequence[i - 1];
        if v >= g.n() || !p.levels[i].contains(v) {
            return false;
        }
        if p.levels[i].difference(&g.closed_neighbors(v)) != p.levels[i - 1] {
            return false;
        }
    }
    p.entry_level.len() == g.n()
        && (0..g.n()).all(|y| {
            let first = p.levels.iter().position(|l| l.contains(y));
            first == p.entry_level[y]
        })
}
