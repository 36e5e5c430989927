use std::sync::Arc;

use crate::error::{Error, Result};
use crate::extensions::general::{extensions_general, Recurse};
use crate::graph::{BicoloredGraph, Graph, Vertex, VertexSet};
use crate::ordered::{enumerate_ordered, ExtensionContext, ExtensionProvider};
use crate::stream::{SolutionStream, Solutions};

fn diamond_contract(witness: [Vertex; 4]) -> Error {
    let mut w = witness;
    w.sort_unstable();
    Error::contract(format!("vertices {w:?} induce a diamond"))
}

/// `D(G, K)` for a clique `K ⊆ N(center)` of a diamond-free graph.
///
/// Solutions are `{center}`, the singletons of `N(center)` touching `K`
/// (which are complete to `K`), and one private outside neighbor per member
/// of `K`, taken from `N(x) \ N[center]`. The outside neighborhoods are
/// pairwise disjoint, so the product has no repeats.
pub fn clique_mds(g: &Arc<Graph>, k: VertexSet, center: Vertex) -> Result<SolutionStream> {
    g.check_set(&k)?;
    g.check_vertex(center)?;
    if k.is_empty() {
        return Ok(SolutionStream::single(VertexSet::new()));
    }
    let around = g.closed_neighbors(center);
    if k.contains(center) || !k.is_subset(&around) || !g.is_clique(&k) {
        return Err(Error::contract(format!(
            "{k:?} is not a clique inside N({center})"
        )));
    }
    let mut singles = vec![VertexSet::singleton(center)];
    for &u in g.neighbors(center) {
        if !k.contains(u) && !k.iter().any(|x| g.is_adjacent(u, x)) {
            continue;
        }
        if let Some(miss) = k.iter().find(|&x| x != u && !g.is_adjacent(u, x)) {
            let hit = k.iter().find(|&x| g.is_adjacent(u, x)).expect("touches K");
            return Err(diamond_contract([center, u, hit, miss]));
        }
        singles.push(VertexSet::singleton(u));
    }
    let mut owner: Vec<Option<Vertex>> = vec![None; g.n()];
    let mut factors = Vec::with_capacity(k.len());
    for x in &k {
        let outside: Vec<Vertex> = g
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&y| !around.contains(y))
            .collect();
        for &y in &outside {
            if let Some(other) = owner[y] {
                return Err(diamond_contract([center, other, x, y]));
            }
            owner[y] = Some(x);
        }
        factors.push(outside);
    }
    let singles = Arc::new(singles);
    let factors = Arc::new(factors);
    Ok(SolutionStream::new(move || {
        let singles = Arc::clone(&singles);
        let product = Product::new(Arc::clone(&factors));
        Box::new(
            (0..singles.len())
                .map(move |j| Ok(singles[j].clone()))
                .chain(product),
        ) as Solutions
    }))
}

/// Odometer over one choice per factor, last factor fastest.
struct Product {
    factors: Arc<Vec<Vec<Vertex>>>,
    digits: Vec<usize>,
    done: bool,
}

impl Product {
    fn new(factors: Arc<Vec<Vec<Vertex>>>) -> Self {
        let done = factors.iter().any(Vec::is_empty);
        let digits = vec![0; factors.len()];
        Product {
            factors,
            digits,
            done,
        }
    }
}

impl Iterator for Product {
    type Item = Result<VertexSet>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let out: VertexSet = self
            .digits
            .iter()
            .zip(self.factors.iter())
            .map(|(&d, f)| f[d])
            .collect();
        self.done = true;
        for j in (0..self.digits.len()).rev() {
            self.digits[j] += 1;
            if self.digits[j] < self.factors[j].len() {
                self.done = false;
                break;
            }
            self.digits[j] = 0;
        }
        Some(Ok(out))
    }
}

/// `D(G, W)` for `W ⊆ N(center)` in a diamond-free graph, where `G[W]` is a
/// disjoint union of cliques. Runs its own ordered generation whose every
/// sub-instance is a single clique handled by [`clique_mds`].
pub fn cluster_mds(g: &Arc<Graph>, w: VertexSet, center: Vertex) -> Result<SolutionStream> {
    let bg = BicoloredGraph::new(Arc::clone(g), w)?;
    let recurse: Recurse = Arc::new(move |g: &Arc<Graph>, k: VertexSet| clique_mds(g, k, center));
    let provider: Arc<dyn ExtensionProvider> = Arc::new(move |ctx: ExtensionContext| {
        Ok(extensions_general(ctx, Arc::clone(&recurse))?.dedup())
    });
    Ok(enumerate_ordered(&bg, provider))
}

/// Emits `C(D*, i)` for a diamond-free graph, possibly with repetitions.
pub fn extensions_diamond_free(ctx: ExtensionContext) -> Result<SolutionStream> {
    let center = ctx.next;
    let recurse: Recurse = Arc::new(move |g: &Arc<Graph>, w: VertexSet| cluster_mds(g, w, center));
    extensions_general(ctx, recurse)
}
