//! Candidate-extension providers, one per graph class.

mod diamond_free;
mod general;
mod paw_free;
mod triangle_free;

pub use diamond_free::{clique_mds, cluster_mds, extensions_diamond_free};
pub use general::{extensions_general, Recurse};
pub use paw_free::extensions_paw_free;
pub use triangle_free::{build_aux_split_graph, extensions_triangle_free, AuxSplitGraph};

#[cfg(test)]
pub(crate) mod testing {
    use std::collections::BTreeSet;
    use std::sync::Arc;

    use crate::graph::{BicoloredGraph, Graph, VertexSet};
    use crate::oracle::oracle_mds;
    use crate::ordered::ExtensionContext;
    use crate::peeling::compute_peeling;
    use crate::stream::SolutionStream;

    /// Every tree node `(D*, i)` of the full peeling of `bg`, found by brute
    /// force over `D(G, V_i)`.
    pub(crate) fn all_contexts(bg: &BicoloredGraph) -> Vec<ExtensionContext> {
        let peeling = Arc::new(compute_peeling(bg));
        let graph = Arc::clone(bg.shared_graph());
        let mut out = Vec::new();
        for i in 0..peeling.depth() {
            let level = BicoloredGraph::new(Arc::clone(&graph), peeling.level(i).clone()).unwrap();
            for d_star in oracle_mds(&level).unwrap() {
                out.push(
                    ExtensionContext::new(Arc::clone(&graph), Arc::clone(&peeling), i, d_star)
                        .unwrap(),
                );
            }
        }
        out
    }

    /// `C(D*, i)` from the oracle.
    pub(crate) fn truth(ctx: &ExtensionContext) -> BTreeSet<VertexSet> {
        let bg = BicoloredGraph::new(Arc::clone(&ctx.graph), ctx.residual.clone()).unwrap();
        oracle_mds(&bg).unwrap().into_iter().collect()
    }

    /// Collects a stream, optionally failing on repeats.
    pub(crate) fn collect(s: &SolutionStream, distinct: bool) -> BTreeSet<VertexSet> {
        let v = s.collect_vec().unwrap();
        let len = v.len();
        let out: BTreeSet<_> = v.into_iter().collect();
        if distinct {
            assert_eq!(out.len(), len, "repeated candidate");
        }
        out
    }

    pub(crate) fn random_graph(rng: &mut impl rand::Rng, n: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).unwrap()
    }
}
