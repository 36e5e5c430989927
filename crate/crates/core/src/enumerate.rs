//! Top-level enumerators of minimal dominating sets, one per graph class,
//! and maximal independent sets.

use std::sync::Arc;

use crate::error::{Error, GraphClass, Result};
use crate::extensions::{
    extensions_diamond_free, extensions_general, extensions_paw_free, extensions_triangle_free,
    Recurse,
};
use crate::graph::{
    find_diamond, find_paw, find_triangle, BicoloredGraph, Graph, Vertex, VertexSet,
};
use crate::ordered::{enumerate_ordered_with, ExtensionContext, ExtensionProvider, Probe};
use crate::stream::{SolutionStream, Solutions};

fn violation(class: GraphClass, witness: &[Vertex]) -> Error {
    Error::ClassViolation {
        class,
        witness: witness.to_vec(),
    }
}

/// Requires `G[A]` to be triangle-free.
pub fn enum_mds_triangle_free(bg: &BicoloredGraph) -> Result<SolutionStream> {
    enum_mds_triangle_free_with(bg, None)
}

pub fn enum_mds_triangle_free_with(
    bg: &BicoloredGraph,
    probe: Option<Arc<dyn Probe>>,
) -> Result<SolutionStream> {
    if let Some(t) = find_triangle(bg.graph(), bg.prescribed()) {
        return Err(violation(GraphClass::TriangleFree, &t));
    }
    let provider: Arc<dyn ExtensionProvider> = Arc::new(extensions_triangle_free);
    Ok(enumerate_ordered_with(bg, provider, probe))
}

/// Knobs for [`enum_mds_general_with`].
#[derive(Clone, Default)]
pub struct GeneralOptions {
    /// Observes the outermost ordered generation only.
    pub probe: Option<Arc<dyn Probe>>,
    /// Switch to the triangle-free enumerator on sub-instances whose
    /// prescribed set induces no triangle.
    pub triangle_free_base: bool,
}

/// Works on every bicolored graph. Recursion goes through sub-instances
/// whose prescribed set sits in a neighborhood, so its clique number drops
/// at every step and bottoms out at `A = ∅`.
pub fn enum_mds_general(bg: &BicoloredGraph) -> SolutionStream {
    enum_mds_general_with(bg, GeneralOptions::default())
}

pub fn enum_mds_general_with(bg: &BicoloredGraph, opts: GeneralOptions) -> SolutionStream {
    let base = opts.triangle_free_base;
    if base && find_triangle(bg.graph(), bg.prescribed()).is_none() {
        return enum_mds_triangle_free_with(bg, opts.probe).expect("checked triangle-free");
    }
    let recurse: Recurse = Arc::new(move |g: &Arc<Graph>, b: VertexSet| {
        let sub = BicoloredGraph::new(Arc::clone(g), b)?;
        Ok(enum_mds_general_with(
            &sub,
            GeneralOptions {
                probe: None,
                triangle_free_base: base,
            },
        ))
    });
    let provider: Arc<dyn ExtensionProvider> = Arc::new(move |ctx: ExtensionContext| {
        Ok(extensions_general(ctx, Arc::clone(&recurse))?.dedup())
    });
    enumerate_ordered_with(bg, provider, opts.probe)
}

/// Requires the whole graph to be diamond-free.
pub fn enum_mds_diamond_free(bg: &BicoloredGraph) -> Result<SolutionStream> {
    enum_mds_diamond_free_with(bg, None)
}

pub fn enum_mds_diamond_free_with(
    bg: &BicoloredGraph,
    probe: Option<Arc<dyn Probe>>,
) -> Result<SolutionStream> {
    if let Some(d) = find_diamond(bg.graph()) {
        return Err(violation(GraphClass::DiamondFree, &d));
    }
    let provider: Arc<dyn ExtensionProvider> =
        Arc::new(|ctx: ExtensionContext| Ok(extensions_diamond_free(ctx)?.dedup()));
    Ok(enumerate_ordered_with(bg, provider, probe))
}

/// Requires the whole graph to be paw-free.
pub fn enum_mds_paw_free(bg: &BicoloredGraph) -> Result<SolutionStream> {
    enum_mds_paw_free_with(bg, None)
}

pub fn enum_mds_paw_free_with(
    bg: &BicoloredGraph,
    probe: Option<Arc<dyn Probe>>,
) -> Result<SolutionStream> {
    if let Some(p) = find_paw(bg.graph()) {
        return Err(violation(GraphClass::PawFree, &p));
    }
    let provider: Arc<dyn ExtensionProvider> = Arc::new(extensions_paw_free);
    Ok(enumerate_ordered_with(bg, provider, probe))
}

/// Maximal independent sets by a prefix tree: the sets of `G[{0..j}]` are
/// the nodes at depth `j`, and the parent of a set containing `j - 1`
/// is the greedy completion of the rest inside the shorter prefix.
pub fn enum_maximal_independent_sets(g: &Graph) -> SolutionStream {
    let g = Arc::new(g.clone());
    SolutionStream::new(move || {
        Box::new(MisWalk {
            g: Arc::clone(&g),
            stack: vec![(0, VertexSet::new())],
        }) as Solutions
    })
}

struct MisWalk {
    g: Arc<Graph>,
    // nodes still to expand, with their prefix length
    stack: Vec<(usize, VertexSet)>,
}

impl MisWalk {
    /// Greedy completion of `t` to a maximal independent set of `G[{0..j}]`.
    fn complete(&self, t: &VertexSet, j: usize) -> VertexSet {
        let mut out = t.clone();
        for x in 0..j {
            if !out.contains(x) && !self.g.neighbors(x).iter().any(|&y| out.contains(y)) {
                out.insert(x);
            }
        }
        out
    }

    fn is_maximal(&self, t: &VertexSet, j: usize) -> bool {
        (0..j).all(|x| t.contains(x) || self.g.neighbors(x).iter().any(|&y| t.contains(y)))
    }
}

impl Iterator for MisWalk {
    type Item = Result<VertexSet>;

    fn next(&mut self) -> Option<Self::Item> {
        while let Some((j, set)) = self.stack.pop() {
            if j == self.g.n() {
                return Some(Ok(set));
            }
            let v = j;
            let hits = set.intersection(&self.g.open_neighbors(v));
            if hits.is_empty() {
                self.stack.push((j + 1, set.with(v)));
                continue;
            }
            let swapped = set.difference(&hits).with(v);
            if self.is_maximal(&swapped, j + 1) && self.complete(&swapped.without(v), j) == set {
                self.stack.push((j + 1, swapped));
            }
            self.stack.push((j + 1, set));
        }
        None
    }
}

/// `D(G)` as maximal independent sets plus, for every edge `uv`, the
/// solutions of `G(V \ N[{u, v}])` extended by `u` and `v`. The whole stream
/// is deduplicated; before that, an extended set is kept only at the
/// smallest edge it induces.
pub fn enum_mds_kt_plus_k2(g: &Graph) -> SolutionStream {
    let g = Arc::new(g.clone());
    let phase_one = enum_maximal_independent_sets(&g);
    let raw = SolutionStream::new(move || {
        let g = Arc::clone(&g);
        let all = g.vertices();
        let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
        let phase_two = edges.into_iter().flat_map(move |(u, v)| {
            let g = Arc::clone(&g);
            let all = all.clone();
            let pair = VertexSet::from([u, v]);
            let a_uv = all.difference(&g.closed_nbhd(&pair));
            let sub = BicoloredGraph::new(Arc::clone(&g), a_uv).expect("in range");
            enum_mds_general(&sub).start().filter_map(move |d| {
                let d = match d {
                    Ok(d) => d,
                    Err(e) => return Some(Err(e)),
                };
                let x = d.union(&pair);
                (g.minimally_dominates(&all, &x) && first_edge(&g, &x) == Some((u, v)))
                    .then_some(Ok(x))
            })
        });
        Box::new(phase_one.start().chain(phase_two)) as Solutions
    });
    raw.dedup()
}

fn first_edge(g: &Graph, x: &VertexSet) -> Option<(Vertex, Vertex)> {
    let s = x.as_slice();
    for (k, &a) in s.iter().enumerate() {
        for &b in &s[k + 1..] {
            if g.is_adjacent(a, b) {
                return Some((a, b));
            }
        }
    }
    None
}
