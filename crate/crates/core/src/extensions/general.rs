use std::sync::Arc;

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::ordered::ExtensionContext;
use crate::stream::{SolutionStream, Solutions};

/// Enumerator of `D(G, B)` for prescribed sets `B ⊆ S`, used to close the
/// recursion between the engine and its providers.
pub type Recurse = Arc<dyn Fn(&Arc<Graph>, VertexSet) -> Result<SolutionStream> + Send + Sync>;

/// Emits `C(D*, i)` for any graph, possibly with repetitions.
///
/// If `v_{i+1}` is already dominated the candidates are exactly `D(G, S)`.
/// Otherwise every candidate has the form `Q ∪ {w}` with `w ∈ N[v_{i+1}]` and
/// `Q ∈ D(G, S \ N[w])`; each candidate shows up at most `|N[v_{i+1}]|` times.
pub fn extensions_general(ctx: ExtensionContext, recurse: Recurse) -> Result<SolutionStream> {
    if ctx.next_dominated() {
        return recurse(&ctx.graph, ctx.s.clone());
    }
    let ctx = Arc::new(ctx);
    Ok(SolutionStream::new(move || {
        let ctx = Arc::clone(&ctx);
        let recurse = Arc::clone(&recurse);
        let pivots = ctx.graph.closed_neighbors(ctx.next).into_vec();
        Box::new(pivots.into_iter().flat_map(move |w| {
            let ctx = Arc::clone(&ctx);
            let inner: Solutions =
                match recurse(&ctx.graph, ctx.s.difference(&ctx.graph.closed_neighbors(w))) {
                    Ok(stream) => stream.start(),
                    Err(e) => Box::new(std::iter::once(Err(e))),
                };
            inner.filter_map(move |q| match q {
                Ok(q) => {
                    let x = q.with(w);
                    ctx.accepts(&x).then_some(Ok(x))
                }
                Err(e) => Some(Err(e)),
            })
        })) as Solutions
    }))
}
