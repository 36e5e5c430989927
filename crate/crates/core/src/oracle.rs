//! Brute-force ground truth over all vertex subsets.

use crate::error::{Error, Result};
use crate::graph::{BicoloredGraph, Graph, Vertex, VertexSet};

/// Largest graph the subset scans accept.
pub const ORACLE_CAP: usize = 22;

/// Walks every superset of `fixed` inside `fixed ∪ free` in reflected Gray
/// code order, keeping domination counts up to date with one flip per step.
/// `visit` returns `false` to stop early.
fn gray_scan(
    g: &Graph,
    a: &VertexSet,
    fixed: &VertexSet,
    free: &[Vertex],
    mut visit: impl FnMut(&[bool], &[u32]) -> bool,
) {
    let n = g.n();
    let mut in_a = vec![false; n];
    for y in a {
        in_a[y] = true;
    }
    let mut member = vec![false; n];
    let mut cnt = vec![0u32; n];
    let mut undominated = a.len();
    let flip = |v: Vertex, member: &mut [bool], cnt: &mut [u32], undominated: &mut usize| {
        let add = !member[v];
        member[v] = add;
        for y in std::iter::once(v).chain(g.neighbors(v).iter().copied()) {
            if add {
                if cnt[y] == 0 && in_a[y] {
                    *undominated -= 1;
                }
                cnt[y] += 1;
            } else {
                cnt[y] -= 1;
                if cnt[y] == 0 && in_a[y] {
                    *undominated += 1;
                }
            }
        }
    };
    for v in fixed {
        flip(v, &mut member, &mut cnt, &mut undominated);
    }
    let minimal = |member: &[bool], cnt: &[u32]| {
        (0..n).filter(|&x| member[x]).all(|x| {
            (in_a[x] && cnt[x] == 1) || g.neighbors(x).iter().any(|&y| in_a[y] && cnt[y] == 1)
        })
    };
    let total: u64 = 1 << free.len();
    for step in 0..total {
        if step > 0 {
            let bit = step.trailing_zeros() as usize;
            flip(free[bit], &mut member, &mut cnt, &mut undominated);
        }
        if undominated == 0 && minimal(&member, &cnt) && !visit(&member, &cnt) {
            return;
        }
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::OracleCap { n, cap });
    }
    Ok(())
}

/// `D(G, A)` by exhaustive search, sorted.
pub fn oracle_mds(bg: &BicoloredGraph) -> Result<Vec<VertexSet>> {
    oracle_mds_with_cap(bg, ORACLE_CAP)
}

pub fn oracle_mds_with_cap(bg: &BicoloredGraph, cap: usize) -> Result<Vec<VertexSet>> {
    let g = bg.graph();
    check_cap(g.n(), cap)?;
    let free: Vec<Vertex> = g.vertices().iter().collect();
    let mut out = Vec::new();
    gray_scan(g, bg.prescribed(), &VertexSet::new(), &free, |member, _| {
        out.push(
            member
                .iter()
                .enumerate()
                .filter_map(|(v, &m)| m.then_some(v))
                .collect(),
        );
        true
    });
    out.sort();
    Ok(out)
}

/// Whether some minimal dominating set of `g` contains `a`.
pub fn oracle_extension(g: &Graph, a: &VertexSet) -> Result<bool> {
    oracle_extension_with_cap(g, a, ORACLE_CAP)
}

/// Only the `2^(n - |a|)` supersets of `a` are visited.
pub fn oracle_extension_with_cap(g: &Graph, a: &VertexSet, cap: usize) -> Result<bool> {
    g.check_set(a)?;
    check_cap(g.n(), cap)?;
    let free: Vec<Vertex> = g.vertices().difference(a).iter().collect();
    let mut found = false;
    gray_scan(g, &g.vertices(), a, &free, |_, _| {
        found = true;
        false
    });
    Ok(found)
}
