use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// A CNF formula over variables `1..=var_count`; literals are nonzero
/// integers whose sign is the polarity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    var_count: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(var_count: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for (j, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::Input(format!("clause {} is empty", j + 1)));
            }
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > var_count {
                    return Err(Error::Input(format!(
                        "literal {lit} outside 1..={var_count}"
                    )));
                }
            }
        }
        Ok(CnfFormula { var_count, clauses })
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// Tries all `2^var_count` assignments.
    pub fn is_satisfiable(&self) -> bool {
        assert!(self.var_count < 32, "brute force limited to 31 variables");
        (0u32..1 << self.var_count).any(|assignment| {
            self.clauses.iter().all(|c| {
                c.iter().any(|&lit| {
                    let value = assignment >> (lit.unsigned_abs() - 1) & 1 == 1;
                    value == (lit > 0)
                })
            })
        })
    }
}

/// DIMACS CNF: `p cnf vars clauses`, then clauses terminated by `0`.
pub fn parse_dimacs_cnf(text: &str) -> Result<CnfFormula> {
    let mut vars: Option<usize> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') || l.starts_with('%') {
            continue;
        }
        if l.starts_with('p') {
            let toks: Vec<&str> = l.split_whitespace().collect();
            match toks.as_slice() {
                ["p", "cnf", v, _] if vars.is_none() => {
                    vars = Some(v.parse().map_err(|_| Error::Parse {
                        line,
                        message: format!("bad variable count `{v}`"),
                    })?);
                }
                _ => {
                    return Err(Error::Parse {
                        line,
                        message: format!("bad problem line `{l}`"),
                    })
                }
            }
            continue;
        }
        if vars.is_none() {
            return Err(Error::Parse {
                line,
                message: "clause before the problem line".into(),
            });
        }
        for tok in l.split_whitespace() {
            let lit: i32 = tok.parse().map_err(|_| Error::Parse {
                line,
                message: format!("bad literal `{tok}`"),
            })?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    if !current.is_empty() {
        clauses.push(current);
    }
    let vars = vars.ok_or_else(|| Error::Input("missing `p cnf` line".into()))?;
    CnfFormula::new(vars, clauses)
}

/// A graph, a set `A` that must lie inside some minimal dominating set, and a
/// role name per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionInstance {
    pub graph: Graph,
    pub forced: VertexSet,
    pub labels: Vec<String>,
}

/// Builds the extension instance that is feasible iff `f` is satisfiable.
///
/// Vertices: `x_i`, `~x_i` for every variable, then `neg_i`, then one `y_j`
/// per clause, then the path `u v w z`. `y_j` sees `u` and its literals,
/// `neg_i` sees both literals of variable `i`, and the forced set is every
/// `neg_i` together with `v` and `w`.
pub fn sat_to_extension_instance(f: &CnfFormula) -> ExtensionInstance {
    let n = f.var_count();
    let m = f.clauses().len();
    let literal = |lit: i32| -> Vertex {
        let i = lit.unsigned_abs() as usize - 1;
        2 * i + usize::from(lit < 0)
    };
    let neg = |i: usize| 2 * n + i;
    let clause = |j: usize| 3 * n + j;
    let (u, v, w, z) = (3 * n + m, 3 * n + m + 1, 3 * n + m + 2, 3 * n + m + 3);
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((neg(i), 2 * i));
        edges.push((neg(i), 2 * i + 1));
    }
    for (j, c) in f.clauses().iter().enumerate() {
        edges.push((clause(j), u));
        for &lit in c {
            edges.push((clause(j), literal(lit)));
        }
    }
    edges.extend([(u, v), (v, w), (w, z)]);
    let graph = Graph::new(3 * n + m + 4, &edges).expect("indices in range");
    let mut labels = Vec::with_capacity(graph.n());
    for i in 1..=n {
        labels.push(format!("x{i}"));
        labels.push(format!("~x{i}"));
    }
    labels.extend((1..=n).map(|i| format!("neg{i}")));
    labels.extend((1..=m).map(|j| format!("y{j}")));
    labels.extend(["u", "v", "w", "z"].map(String::from));
    let forced = (0..n).map(neg).chain([v, w]).collect();
    ExtensionInstance {
        graph,
        forced,
        labels,
    }
}
