//! Reading and writing graphs, CNF formulas and solutions, plus instance
//! generators.

mod cnf;
mod generate;
mod text;

pub use cnf::{parse_dimacs_cnf, sat_to_extension_instance, CnfFormula, ExtensionInstance};
pub use generate::{
    complete_bipartite, complete_multipartite, disjoint_cliques, generate, gnp, random_bipartite,
    random_rejection, random_split, star, REJECTION_BUDGET,
};
pub use text::{
    format_solution, parse_graph, parse_label_set, serialize_graph, GraphFormat, ParsedGraph,
};
