use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, GraphClass, Result};
use crate::graph::{detect_classes, find_triangle, Graph, Vertex};

/// Attempts granted to [`random_rejection`] before giving up.
pub const REJECTION_BUDGET: usize = 100_000;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Input(format!("edge probability {p} outside [0, 1]")));
    }
    Ok(())
}

fn build(n: usize, edges: Vec<(Vertex, Vertex)>) -> Graph {
    Graph::new(n, &edges).expect("generated edges are valid")
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_p(p)?;
    let mut r = rng(seed);
    Ok(gnp_with(&mut r, n, p))
}

fn gnp_with(r: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    build(n, edges)
}

/// Random two-sided graph: each vertex picks a side, cross pairs become
/// edges with probability `p`.
pub fn random_bipartite(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_p(p)?;
    let mut r = rng(seed);
    let side: Vec<bool> = (0..n).map(|_| r.gen_bool(0.5)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && r.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(build(n, edges))
}

/// Random split graph: a random half forms a clique, the rest is
/// independent, cross pairs are edges with probability `p`.
pub fn random_split(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_p(p)?;
    let mut r = rng(seed);
    let in_clique: Vec<bool> = (0..n).map(|_| r.gen_bool(0.5)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let both = in_clique[u] && in_clique[v];
            let cross = in_clique[u] != in_clique[v];
            if both || (cross && r.gen_bool(p)) {
                edges.push((u, v));
            }
        }
    }
    Ok(build(n, edges))
}

fn owners(sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .enumerate()
        .flat_map(|(k, &s)| std::iter::repeat_n(k, s))
        .collect()
}

/// Parts of the given sizes, all cross pairs adjacent.
pub fn complete_multipartite(sizes: &[usize]) -> Graph {
    let owner = owners(sizes);
    let n = owner.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if owner[u] != owner[v] {
                edges.push((u, v));
            }
        }
    }
    build(n, edges)
}

/// Vertex-disjoint cliques of the given sizes.
pub fn disjoint_cliques(sizes: &[usize]) -> Graph {
    let owner = owners(sizes);
    let n = owner.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if owner[u] == owner[v] {
                edges.push((u, v));
            }
        }
    }
    build(n, edges)
}

pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    complete_multipartite(&[p, q])
}

/// `K_{1,m}` with center `0`.
pub fn star(m: usize) -> Graph {
    build(m + 1, (1..=m).map(|v| (0, v)).collect())
}

fn in_class(g: &Graph, class: GraphClass) -> bool {
    match class {
        GraphClass::TriangleFree => find_triangle(g, &g.vertices()).is_none(),
        GraphClass::DiamondFree => detect_classes(g).diamond_free,
        GraphClass::PawFree => detect_classes(g).paw_free,
    }
}

/// Resamples `G(n, p)` until it avoids the forbidden subgraph of `class`.
pub fn random_rejection(class: GraphClass, n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_p(p)?;
    let mut r = rng(seed);
    for _ in 0..REJECTION_BUDGET {
        let g = gnp_with(&mut r, n, p);
        if in_class(&g, class) {
            return Ok(g);
        }
    }
    Err(Error::RejectionBudget {
        attempts: REJECTION_BUDGET,
    })
}

fn parse_class(s: &str) -> Result<GraphClass> {
    match s {
        "triangle-free" | "triangle_free" => Ok(GraphClass::TriangleFree),
        "diamond-free" | "diamond_free" => Ok(GraphClass::DiamondFree),
        "paw-free" | "paw_free" => Ok(GraphClass::PawFree),
        other => Err(Error::Input(format!("unknown graph class `{other}`"))),
    }
}

/// Generator selected by a `KIND:PARAMS` string, for instance
/// `random_bipartite:8,0.5`, `complete_multipartite:2,2,3`,
/// `random_rejection:paw-free,9,0.4`, `gnp:10,0.3`, `star:20`.
pub fn generate(recipe: &str, seed: u64) -> Result<Graph> {
    let (kind, params) = recipe.split_once(':').unwrap_or((recipe, ""));
    let args: Vec<&str> = params
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let bad = || Error::Input(format!("bad parameters for `{kind}`: `{params}`"));
    let int = |s: &str| s.parse::<usize>().map_err(|_| bad());
    let float = |s: &str| s.parse::<f64>().map_err(|_| bad());
    let sizes = || args.iter().map(|s| int(s)).collect::<Result<Vec<_>>>();
    match (kind, args.as_slice()) {
        ("random_bipartite", [n, p]) => random_bipartite(int(n)?, float(p)?, seed),
        ("random_split", [n, p]) => random_split(int(n)?, float(p)?, seed),
        ("gnp", [n, p]) => gnp(int(n)?, float(p)?, seed),
        ("complete_multipartite", [_, ..]) => Ok(complete_multipartite(&sizes()?)),
        ("disjoint_cliques", [_, ..]) => Ok(disjoint_cliques(&sizes()?)),
        ("complete_bipartite", [p, q]) => Ok(complete_bipartite(int(p)?, int(q)?)),
        ("star", [m]) => Ok(star(int(m)?)),
        ("random_rejection", [class, n, p]) => {
            random_rejection(parse_class(class)?, int(n)?, float(p)?, seed)
        }
        (
            "random_bipartite"
            | "random_split"
            | "gnp"
            | "complete_multipartite"
            | "disjoint_cliques"
            | "complete_bipartite"
            | "star"
            | "random_rejection",
            _,
        ) => Err(bad()),
        _ => Err(Error::Input(format!("unknown generator `{kind}`"))),
    }
}
