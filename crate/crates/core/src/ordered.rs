//! Ordered generation over a peeling.
//!
//! Minimal dominating sets of consecutive peeling levels form a tree: the
//! parent of `D ∈ D(G, V_{i+1})` is obtained by greedily dropping members
//! without a private neighbor in `V_i`. The leaves at depth `p` are exactly
//! `D(G, A)`. The engine walks this tree depth-first, asking an
//! [`ExtensionProvider`] for the candidate extensions of each node and keeping
//! one paused candidate cursor per tree level.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{BicoloredGraph, Graph, Vertex, VertexSet};
use crate::peeling::{compute_peeling, Peeling};
use crate::stream::{SolutionStream, Solutions};

/// Observation hooks for instrumented runs. All methods default to no-ops.
pub trait Probe: Send + Sync {
    /// A tree node `(D, level)` was reached; leaves are reported at level `p`.
    fn node(&self, _level: usize, _d: &VertexSet) {}

    /// The candidate cursor of `(d_star, level)` ran dry after `produced` items.
    fn extensions_exhausted(&self, _level: usize, _d_star: &VertexSet, _produced: usize) {}

    /// A split-graph based provider finished one node: `split_solutions` is
    /// `|D(H)|` and `extensions` the number of candidate extensions emitted.
    fn split_graph(&self, _n: usize, _split_solutions: usize, _extensions: usize) {}
}

/// Everything a provider needs to enumerate `C(D*, i) = D(G, V_{i+1} \ N[D*])`.
#[derive(Clone)]
pub struct ExtensionContext {
    pub graph: Arc<Graph>,
    pub peeling: Arc<Peeling>,
    /// `i`, in `[0, p - 1]`.
    pub level: usize,
    pub d_star: VertexSet,
    /// `v_{i+1}`.
    pub next: Vertex,
    /// `V_{i+1} \ N[D*]`, the set every candidate must minimally dominate.
    pub residual: VertexSet,
    /// `S = V_{i+1} \ (N[D*] ∪ {v_{i+1}})`.
    pub s: VertexSet,
    pub probe: Option<Arc<dyn Probe>>,
}

impl ExtensionContext {
    pub fn new(
        graph: Arc<Graph>,
        peeling: Arc<Peeling>,
        level: usize,
        d_star: VertexSet,
    ) -> Result<Self> {
        if level >= peeling.depth() {
            return Err(Error::Input(format!(
                "level {level} outside [0, {})",
                peeling.depth()
            )));
        }
        let next = peeling.vertex(level + 1);
        let residual = peeling
            .level(level + 1)
            .difference(&graph.closed_nbhd(&d_star));
        let s = residual.without(next);
        let ctx = ExtensionContext {
            graph,
            peeling,
            level,
            d_star,
            next,
            residual,
            s,
            probe: None,
        };
        if !ctx.s.iter().all(|x| ctx.graph.is_adjacent(ctx.next, x)) {
            return Err(Error::contract(format!(
                "{:?} does not dominate V_{}",
                ctx.d_star, ctx.level
            )));
        }
        Ok(ctx)
    }

    /// Whether `v_{i+1} ∈ N[D*]`.
    pub fn next_dominated(&self) -> bool {
        !self.residual.contains(self.next)
    }

    /// Membership test for `C(D*, i)`.
    pub fn accepts(&self, x: &VertexSet) -> bool {
        self.graph.minimally_dominates(&self.residual, x)
    }
}

/// Produces the candidate extensions of a tree node as a restartable stream.
pub trait ExtensionProvider: Send + Sync {
    fn candidates(&self, ctx: ExtensionContext) -> Result<SolutionStream>;
}

impl<F> ExtensionProvider for F
where
    F: Fn(ExtensionContext) -> Result<SolutionStream> + Send + Sync,
{
    fn candidates(&self, ctx: ExtensionContext) -> Result<SolutionStream> {
        self(ctx)
    }
}

fn check_level(p: &Peeling, i: usize) -> Result<()> {
    if i == 0 || i > p.depth() {
        return Err(Error::Input(format!(
            "level {i} outside [1, {}]",
            p.depth()
        )));
    }
    Ok(())
}

/// Greedy parent computation, assuming `d ∈ D(G, V_i)`.
///
/// Scanning once in increasing order suffices: dropping a vertex only
/// lowers domination counts, so vertices already kept never lose a private
/// neighbor.
pub(crate) fn parent_set(g: &Graph, p: &Peeling, d: &VertexSet, i: usize) -> VertexSet {
    let below = i - 1;
    let mut cnt = g.domination_counts(d);
    let mut kept = Vec::with_capacity(d.len());
    for x in d {
        let has_private = std::iter::once(x)
            .chain(g.neighbors(x).iter().copied())
            .any(|y| cnt[y] == 1 && p.in_level(y, below));
        if has_private {
            kept.push(x);
        } else {
            cnt[x] -= 1;
            for &y in g.neighbors(x) {
                cnt[y] -= 1;
            }
        }
    }
    VertexSet::from_sorted(kept)
}

/// `parent(D, i) = (D*, i - 1)`.
pub fn parent(
    bg: &BicoloredGraph,
    p: &Peeling,
    d: &VertexSet,
    i: usize,
) -> Result<(VertexSet, usize)> {
    check_level(p, i)?;
    let g = bg.graph();
    g.check_set(d)?;
    if !g.minimally_dominates(p.level(i), d) {
        return Err(Error::contract(format!(
            "{d:?} is not a minimal dominating set of V_{i}"
        )));
    }
    Ok((parent_set(g, p, d, i), i - 1))
}

fn is_child(g: &Graph, p: &Peeling, d_child: &VertexSet, i: usize, d_star: &VertexSet) -> bool {
    g.minimally_dominates(p.level(i), d_child) && &parent_set(g, p, d_child, i) == d_star
}

/// True iff `d_child ∈ D(G, V_i)` and `parent(d_child, i) = (d_star, i - 1)`.
pub fn check_parent(
    bg: &BicoloredGraph,
    p: &Peeling,
    d_child: &VertexSet,
    i: usize,
    d_star: &VertexSet,
) -> bool {
    if i == 0 || i > p.depth() || bg.graph().check_set(d_child).is_err() {
        return false;
    }
    is_child(bg.graph(), p, d_child, i, d_star)
}

/// Enumerates `D(G, A)` by depth-first search of the parent tree.
pub fn enumerate_ordered(bg: &BicoloredGraph, ext: Arc<dyn ExtensionProvider>) -> SolutionStream {
    enumerate_ordered_with(bg, ext, None)
}

pub fn enumerate_ordered_with(
    bg: &BicoloredGraph,
    ext: Arc<dyn ExtensionProvider>,
    probe: Option<Arc<dyn Probe>>,
) -> SolutionStream {
    if bg.prescribed().is_empty() {
        if let Some(probe) = &probe {
            let probe = Arc::clone(probe);
            return SolutionStream::new(move || {
                probe.node(0, &VertexSet::new());
                Box::new(std::iter::once(Ok(VertexSet::new())))
            });
        }
        return SolutionStream::single(VertexSet::new());
    }
    let graph = Arc::clone(bg.shared_graph());
    let peeling = Arc::new(compute_peeling(bg));
    SolutionStream::new(move || {
        Box::new(TreeWalk {
            graph: Arc::clone(&graph),
            peeling: Arc::clone(&peeling),
            provider: Arc::clone(&ext),
            probe: probe.clone(),
            stack: Vec::new(),
            started: false,
            failed: false,
        }) as Solutions
    })
}

struct Frame {
    level: usize,
    d_star: VertexSet,
    cursor: Solutions,
    produced: usize,
}

struct TreeWalk {
    graph: Arc<Graph>,
    peeling: Arc<Peeling>,
    provider: Arc<dyn ExtensionProvider>,
    probe: Option<Arc<dyn Probe>>,
    stack: Vec<Frame>,
    started: bool,
    failed: bool,
}

impl TreeWalk {
    fn push(&mut self, level: usize, d_star: VertexSet) -> Result<()> {
        if let Some(probe) = &self.probe {
            probe.node(level, &d_star);
        }
        let mut ctx = ExtensionContext::new(
            Arc::clone(&self.graph),
            Arc::clone(&self.peeling),
            level,
            d_star.clone(),
        )?;
        ctx.probe = self.probe.clone();
        let cursor = self.provider.candidates(ctx)?.start();
        self.stack.push(Frame {
            level,
            d_star,
            cursor,
            produced: 0,
        });
        Ok(())
    }

    fn step(&mut self) -> Option<Result<VertexSet>> {
        if !self.started {
            self.started = true;
            if let Err(e) = self.push(0, VertexSet::new()) {
                return Some(Err(e));
            }
        }
        let depth = self.peeling.depth();
        loop {
            let top = self.stack.last_mut()?;
            let x = match top.cursor.next() {
                None => {
                    let frame = self.stack.pop().expect("non-empty stack");
                    if let Some(probe) = &self.probe {
                        probe.extensions_exhausted(frame.level, &frame.d_star, frame.produced);
                    }
                    continue;
                }
                Some(Err(e)) => return Some(Err(e)),
                Some(Ok(x)) => x,
            };
            top.produced += 1;
            let child_level = top.level + 1;
            let child = top.d_star.union(&x);
            if !is_child(&self.graph, &self.peeling, &child, child_level, &top.d_star) {
                continue;
            }
            if child_level == depth {
                if let Some(probe) = &self.probe {
                    probe.node(child_level, &child);
                }
                return Some(Ok(child));
            }
            if let Err(e) = self.push(child_level, child) {
                return Some(Err(e));
            }
        }
    }
}

impl Iterator for TreeWalk {
    type Item = Result<VertexSet>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        let item = self.step();
        if matches!(item, Some(Err(_))) {
            self.failed = true;
        }
        item
    }
}
