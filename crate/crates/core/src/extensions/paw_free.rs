use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::extensions::triangle_free::extensions_triangle_free;
use crate::graph::{find_quadruple, is_paw, Graph, Vertex, VertexSet};
use crate::ordered::ExtensionContext;
use crate::stream::{SolutionStream, Solutions};

fn paw_contract(g: &Graph, within: &VertexSet, what: &str) -> Error {
    match find_quadruple(g, within, is_paw) {
        Some(w) => Error::contract(format!("{what}: vertices {w:?} induce a paw")),
        None => Error::contract(what.to_string()),
    }
}

/// Parts of `G[s]` when it is complete multipartite, i.e. the connected
/// components of its complement, each of which must be independent in `G`.
fn multipartition(g: &Graph, s: &VertexSet) -> Option<Vec<VertexSet>> {
    let members = s.as_slice();
    let mut part = vec![usize::MAX; members.len()];
    let mut parts = Vec::new();
    for start in 0..members.len() {
        if part[start] != usize::MAX {
            continue;
        }
        let id = parts.len();
        part[start] = id;
        let mut queue = vec![start];
        let mut found = Vec::new();
        while let Some(k) = queue.pop() {
            found.push(members[k]);
            for j in 0..members.len() {
                if part[j] == usize::MAX && !g.is_adjacent(members[k], members[j]) {
                    part[j] = id;
                    queue.push(j);
                }
            }
        }
        let p: VertexSet = found.into_iter().collect();
        if !g.is_independent(&p) {
            return None;
        }
        parts.push(p);
    }
    Some(parts)
}

/// Emits `C(D*, i)` for a paw-free graph without repetition.
///
/// An edgeless `S` is handed to the split-graph provider. Otherwise `G[S]` is
/// complete multipartite and every candidate is one of its parts or has at
/// most two members (three if `v_{i+1}` is undominated), so a bounded subset
/// scan over `N[residual]` followed by the membership test suffices.
pub fn extensions_paw_free(ctx: ExtensionContext) -> Result<SolutionStream> {
    let g = Arc::clone(&ctx.graph);
    if g.is_independent(&ctx.s) {
        return extensions_triangle_free(ctx);
    }
    let around = ctx.s.with(ctx.next);
    let parts = multipartition(&g, &ctx.s)
        .ok_or_else(|| paw_contract(&g, &around, "neighborhood is not complete multipartite"))?;
    for u in g.open_neighborhood(&ctx.s) {
        if u == ctx.next || g.is_adjacent(u, ctx.next) {
            continue;
        }
        if !ctx.s.iter().all(|x| g.is_adjacent(u, x)) {
            return Err(paw_contract(
                &g,
                &around.with(u),
                &format!("{u} sees only part of S"),
            ));
        }
    }
    let max_size = if ctx.next_dominated() { 2 } else { 3 };
    let pool: Vec<Vertex> = g.closed_nbhd(&ctx.residual).into_vec();
    let parts = Arc::new(parts);
    let pool = Arc::new(pool);
    let ctx = Arc::new(ctx);
    Ok(SolutionStream::new(move || {
        let whole = {
            let ctx = Arc::clone(&ctx);
            (0..parts.len())
                .map({
                    let parts = Arc::clone(&parts);
                    move |j| parts[j].clone()
                })
                .filter(move |x| ctx.accepts(x))
        };
        let small = {
            let ctx = Arc::clone(&ctx);
            let parts = Arc::clone(&parts);
            let pool = Arc::clone(&pool);
            (1..=max_size)
                .flat_map(move |k| pool.as_ref().clone().into_iter().combinations(k))
                .map(VertexSet::from)
                .filter(move |x| !parts.contains(x) && ctx.accepts(x))
        };
        Box::new(whole.chain(small).map(Ok)) as Solutions
    }))
}
