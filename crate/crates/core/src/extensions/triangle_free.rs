use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::ordered::ExtensionContext;
use crate::split::{enumerate_split_mds, maximalize_split, SplitPartition};
use crate::stream::{SolutionStream, Solutions};

/// The split graph `H` on `S ∪ C`, `C = N(S) \ {v_{i+1}}` completed into a
/// clique, over local indices. `origin[k]` is the vertex of `G` behind local
/// vertex `k`.
#[derive(Clone, Debug)]
pub struct AuxSplitGraph {
    pub split: SplitPartition,
    pub origin: Vec<Vertex>,
}

impl AuxSplitGraph {
    pub fn to_original(&self, local: &VertexSet) -> VertexSet {
        local.iter().map(|k| self.origin[k]).collect()
    }
}

/// Builds `H`. Only needs `S` to be independent in `G`.
pub fn build_aux_split_graph(ctx: &ExtensionContext) -> Result<AuxSplitGraph> {
    let g = &ctx.graph;
    if !g.is_independent(&ctx.s) {
        return Err(Error::contract(format!(
            "S = {:?} is not independent around v = {}",
            ctx.s, ctx.next
        )));
    }
    let c = g.open_neighborhood(&ctx.s).without(ctx.next);
    let origin: Vec<Vertex> = ctx.s.union(&c).iter().collect();
    let local = |v: Vertex| origin.binary_search(&v).expect("vertex of H");
    let mut edges = Vec::new();
    for s in &ctx.s {
        for &u in g.neighbors(s) {
            if c.contains(u) {
                edges.push((local(s), local(u)));
            }
        }
    }
    let cs: Vec<Vertex> = c.iter().map(local).collect();
    for (k, &a) in cs.iter().enumerate() {
        for &b in &cs[k + 1..] {
            edges.push((a, b));
        }
    }
    let h = Graph::new(origin.len(), &edges)?;
    let s_local: VertexSet = ctx.s.iter().map(local).collect();
    let c_local: VertexSet = cs.into_iter().collect();
    let split = maximalize_split(h, s_local, c_local)?;
    Ok(AuxSplitGraph { split, origin })
}

/// Emits `C(D*, i)` without repetition, assuming `S` is independent.
///
/// Candidates come from `{v} ∪ D(H) ∪ {D ∪ {u}}`. An augmented set is kept
/// only when `u` has `v` as its sole private neighbor in the residual; such a
/// `u` is unique per solution and never occurs in a member of `D(H)`, so each
/// solution is produced once.
pub fn extensions_triangle_free(ctx: ExtensionContext) -> Result<SolutionStream> {
    let aux = Arc::new(build_aux_split_graph(&ctx)?);
    let ctx = Arc::new(ctx);
    Ok(SolutionStream::new(move || {
        Box::new(TriangleFreeCursor {
            split_stream: enumerate_split_mds(&aux.split),
            ctx: Arc::clone(&ctx),
            aux: Arc::clone(&aux),
            phase: Phase::Center,
            cursor: None,
            base: None,
            augment: Vec::new(),
            split_count: 0,
            emitted: 0,
        }) as Solutions
    }))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Phase {
    Center,
    Split,
    Augmented,
    Done,
}

struct TriangleFreeCursor {
    ctx: Arc<ExtensionContext>,
    aux: Arc<AuxSplitGraph>,
    split_stream: SolutionStream,
    phase: Phase,
    cursor: Option<Solutions>,
    base: Option<VertexSet>,
    // pending augmentation vertices for `base`, reversed
    augment: Vec<Vertex>,
    split_count: usize,
    emitted: usize,
}

impl TriangleFreeCursor {
    /// `x = d ∪ {u}` is a candidate and `u` privately dominates exactly `v`.
    fn accepts_augmented(&self, x: &VertexSet, u: Vertex) -> bool {
        let ctx = &self.ctx;
        if !ctx.accepts(x) {
            return false;
        }
        let g = &ctx.graph;
        let cnt = g.domination_counts(x);
        std::iter::once(u)
            .chain(g.neighbors(u).iter().copied())
            .filter(|&y| cnt[y] == 1 && ctx.residual.contains(y))
            .all(|y| y == ctx.next)
    }

    fn finish(&mut self) {
        self.phase = Phase::Done;
        if let Some(probe) = &self.ctx.probe {
            probe.split_graph(self.ctx.graph.n(), self.split_count, self.emitted);
        }
    }

    fn step(&mut self) -> Option<Result<VertexSet>> {
        loop {
            match self.phase {
                Phase::Center => {
                    self.phase = Phase::Split;
                    self.cursor = Some(self.split_stream.start());
                    let x = VertexSet::singleton(self.ctx.next);
                    if self.ctx.accepts(&x) {
                        return Some(Ok(x));
                    }
                }
                Phase::Split => match self.cursor.as_mut().and_then(Iterator::next) {
                    Some(Ok(local)) => {
                        self.split_count += 1;
                        let x = self.aux.to_original(&local);
                        if self.ctx.accepts(&x) {
                            return Some(Ok(x));
                        }
                    }
                    Some(Err(e)) => return Some(Err(e)),
                    None => {
                        if self.ctx.next_dominated() {
                            self.finish();
                        } else {
                            self.phase = Phase::Augmented;
                            self.cursor = Some(self.split_stream.start());
                        }
                    }
                },
                Phase::Augmented => {
                    if let Some(u) = self.augment.pop() {
                        let d = self.base.as_ref().expect("base set");
                        let x = d.with(u);
                        if self.accepts_augmented(&x, u) {
                            return Some(Ok(x));
                        }
                        continue;
                    }
                    match self.cursor.as_mut().and_then(Iterator::next) {
                        Some(Ok(local)) => {
                            let d = self.aux.to_original(&local);
                            let g = &self.ctx.graph;
                            self.augment = g
                                .neighbors(self.ctx.next)
                                .iter()
                                .rev()
                                .copied()
                                .filter(|&u| !d.contains(u))
                                .collect();
                            self.base = Some(d);
                        }
                        Some(Err(e)) => return Some(Err(e)),
                        None => self.finish(),
                    }
                }
                Phase::Done => return None,
            }
        }
    }
}

impl Iterator for TriangleFreeCursor {
    type Item = Result<VertexSet>;

    fn next(&mut self) -> Option<Self::Item> {
        let item = self.step();
        if matches!(item, Some(Ok(_))) {
            self.emitted += 1;
        }
        item
    }
}
