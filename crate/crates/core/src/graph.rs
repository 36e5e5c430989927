//! Simple undirected graphs over dense vertex indices, vertex sets, and the
//! domination predicates everything else is built on.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, GraphClass, Result};

pub type Vertex = usize;

/// Sorted, duplicate-free set of vertex indices.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(vec![v])
    }

    /// Wraps a vector that is already strictly increasing.
    pub(crate) fn from_sorted(members: Vec<Vertex>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn range(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn max(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn with(&self, v: Vertex) -> Self {
        let mut out = self.clone();
        out.insert(v);
        out
    }

    pub fn without(&self, v: Vertex) -> Self {
        let mut out = self.clone();
        out.remove(v);
        out
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        VertexSet(out)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        VertexSet(out)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len());
        let mut j = 0;
        for &x in a {
            while j < b.len() && b[j] < x {
                j += 1;
            }
            if j < b.len() && b[j] == x {
                continue;
            }
            out.push(x);
        }
        VertexSet(out)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        let b = &other.0;
        let mut j = 0;
        for &x in &self.0 {
            while j < b.len() && b[j] < x {
                j += 1;
            }
            if j == b.len() || b[j] != x {
                return false;
            }
        }
        true
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.intersection(other).is_empty()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(v: [Vertex; N]) -> Self {
        v.into_iter().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = std::vec::IntoIter<Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Immutable simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are collapsed.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph { adj }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::new(n, &edges).expect("cycle edges are valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(self.n())
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn check_set(&self, x: &VertexSet) -> Result<()> {
        match x.max() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    pub fn open_neighbors(&self, v: Vertex) -> VertexSet {
        VertexSet::from_sorted(self.adj[v].clone())
    }

    pub fn closed_neighbors(&self, v: Vertex) -> VertexSet {
        let list = &self.adj[v];
        let mut out = Vec::with_capacity(list.len() + 1);
        let pos = list.partition_point(|&u| u < v);
        out.extend_from_slice(&list[..pos]);
        out.push(v);
        out.extend_from_slice(&list[pos..]);
        VertexSet::from_sorted(out)
    }

    /// `N[X]`, assuming `x` is in range.
    pub(crate) fn closed_nbhd(&self, x: &VertexSet) -> VertexSet {
        let mut mark = vec![false; self.n()];
        for v in x {
            mark[v] = true;
            for &u in &self.adj[v] {
                mark[u] = true;
            }
        }
        mark_to_set(&mark)
    }

    /// `N(X) = N[X] \ X`.
    pub fn open_neighborhood(&self, x: &VertexSet) -> VertexSet {
        self.closed_nbhd(x).difference(x)
    }

    /// Number of members of `d` in `N[y]`, for every vertex `y`.
    pub(crate) fn domination_counts(&self, d: &VertexSet) -> Vec<u32> {
        let mut cnt = vec![0u32; self.n()];
        for x in d {
            cnt[x] += 1;
            for &y in &self.adj[x] {
                cnt[y] += 1;
            }
        }
        cnt
    }

    /// Minimal domination of `a` by `d`, both assumed in range.
    pub(crate) fn minimally_dominates(&self, a: &VertexSet, d: &VertexSet) -> bool {
        let cnt = self.domination_counts(d);
        if !a.iter().all(|y| cnt[y] > 0) {
            return false;
        }
        let mut in_a = vec![false; self.n()];
        for y in a {
            in_a[y] = true;
        }
        d.iter().all(|x| {
            (in_a[x] && cnt[x] == 1) || self.adj[x].iter().any(|&y| in_a[y] && cnt[y] == 1)
        })
    }

    pub fn is_independent(&self, x: &VertexSet) -> bool {
        x.iter()
            .all(|v| self.adj[v].iter().all(|&u| !x.contains(u)))
    }

    pub fn is_clique(&self, x: &VertexSet) -> bool {
        let s = x.as_slice();
        s.iter()
            .enumerate()
            .all(|(k, &u)| s[k + 1..].iter().all(|&v| self.is_adjacent(u, v)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &edges)
            .finish()
    }
}

pub(crate) fn mark_to_set(mark: &[bool]) -> VertexSet {
    VertexSet::from_sorted(
        mark.iter()
            .enumerate()
            .filter_map(|(v, &m)| m.then_some(v))
            .collect(),
    )
}

/// A graph together with the prescribed set `A` that has to be dominated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicoloredGraph {
    graph: Arc<Graph>,
    prescribed: VertexSet,
}

impl BicoloredGraph {
    pub fn new(graph: impl Into<Arc<Graph>>, prescribed: VertexSet) -> Result<Self> {
        let graph = graph.into();
        graph.check_set(&prescribed)?;
        Ok(BicoloredGraph { graph, prescribed })
    }

    /// Prescribed set `A = V(G)`.
    pub fn full(graph: impl Into<Arc<Graph>>) -> Self {
        let graph = graph.into();
        let prescribed = graph.vertices();
        BicoloredGraph { graph, prescribed }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn shared_graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn prescribed(&self) -> &VertexSet {
        &self.prescribed
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

/// `N[X] = ⋃_{x∈X} N[x]`.
pub fn closed_neighborhood(g: &Graph, x: &VertexSet) -> Result<VertexSet> {
    g.check_set(x)?;
    Ok(g.closed_nbhd(x))
}

/// Vertices dominated by `x` and by no other member of `s`; `x` may be its
/// own private neighbor.
pub fn private_neighbors(g: &Graph, s: &VertexSet, x: Vertex) -> Result<VertexSet> {
    g.check_set(s)?;
    g.check_vertex(x)?;
    if !s.contains(x) {
        return Err(Error::NotAMember { vertex: x });
    }
    let others = g.closed_nbhd(&s.without(x));
    Ok(g.closed_neighbors(x).difference(&others))
}

/// True iff `d` dominates `a` and every member of `d` has a private
/// neighbor inside `a`.
pub fn is_minimal_dominating(g: &Graph, a: &VertexSet, d: &VertexSet) -> Result<bool> {
    g.check_set(a)?;
    g.check_set(d)?;
    Ok(g.minimally_dominates(a, d))
}

/// Result of the exhaustive forbidden-subgraph scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub triangle_free: bool,
    pub diamond_free: bool,
    pub paw_free: bool,
    pub triangle: Option<[Vertex; 3]>,
    pub diamond: Option<[Vertex; 4]>,
    pub paw: Option<[Vertex; 4]>,
}

impl ClassReport {
    pub fn witness(&self, class: GraphClass) -> Option<Vec<Vertex>> {
        match class {
            GraphClass::TriangleFree => self.triangle.map(|w| w.to_vec()),
            GraphClass::DiamondFree => self.diamond.map(|w| w.to_vec()),
            GraphClass::PawFree => self.paw.map(|w| w.to_vec()),
        }
    }
}

/// First triangle (lexicographically) with all three vertices in `within`.
pub fn find_triangle(g: &Graph, within: &VertexSet) -> Option<[Vertex; 3]> {
    let s = within.as_slice();
    for (i, &a) in s.iter().enumerate() {
        for (j, &b) in s.iter().enumerate().skip(i + 1) {
            if !g.is_adjacent(a, b) {
                continue;
            }
            for &c in &s[j + 1..] {
                if g.is_adjacent(a, c) && g.is_adjacent(b, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

fn induced_edges(g: &Graph, q: &[Vertex; 4]) -> [usize; 4] {
    let mut deg = [0usize; 4];
    for i in 0..4 {
        for j in i + 1..4 {
            if g.is_adjacent(q[i], q[j]) {
                deg[i] += 1;
                deg[j] += 1;
            }
        }
    }
    deg
}

fn is_diamond(deg: &[usize; 4]) -> bool {
    deg.iter().sum::<usize>() == 10
}

pub(crate) fn is_paw(deg: &[usize; 4]) -> bool {
    // four edges on four vertices: either C4 or the paw, which has a leaf
    deg.iter().sum::<usize>() == 8 && deg.contains(&1)
}

/// Scan all 4-subsets of `within` (lexicographically) for one satisfying `pred`.
pub(crate) fn find_quadruple(
    g: &Graph,
    within: &VertexSet,
    pred: impl Fn(&[usize; 4]) -> bool,
) -> Option<[Vertex; 4]> {
    let s = within.as_slice();
    let m = s.len();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                for d in c + 1..m {
                    let q = [s[a], s[b], s[c], s[d]];
                    if pred(&induced_edges(g, &q)) {
                        return Some(q);
                    }
                }
            }
        }
    }
    None
}

pub fn find_diamond(g: &Graph) -> Option<[Vertex; 4]> {
    find_quadruple(g, &g.vertices(), is_diamond)
}

pub fn find_paw(g: &Graph) -> Option<[Vertex; 4]> {
    find_quadruple(g, &g.vertices(), is_paw)
}

/// Exhaustive triangle / diamond / paw scan over all 3- and 4-subsets.
pub fn detect_classes(g: &Graph) -> ClassReport {
    let triangle = find_triangle(g, &g.vertices());
    let diamond = find_diamond(g);
    let paw = find_paw(g);
    ClassReport {
        triangle_free: triangle.is_none(),
        diamond_free: diamond.is_none(),
        paw_free: paw.is_none(),
        triangle,
        diamond,
        paw,
    }
}
