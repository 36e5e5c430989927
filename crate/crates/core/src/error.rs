use std::fmt;

use thiserror::Error;

use crate::graph::Vertex;

/// Forbidden induced subgraphs recognised by the class checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    TriangleFree,
    DiamondFree,
    PawFree,
}

impl GraphClass {
    pub fn forbidden(&self) -> &'static str {
        match self {
            GraphClass::TriangleFree => "triangle",
            GraphClass::DiamondFree => "diamond",
            GraphClass::PawFree => "paw",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GraphClass::TriangleFree => "triangle-free",
            GraphClass::DiamondFree => "diamond-free",
            GraphClass::PawFree => "paw-free",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),

    #[error("vertex {vertex} is not a member of the set")]
    NotAMember { vertex: Vertex },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is not {class}: vertices {witness:?} induce a {}", class.forbidden())]
    ClassViolation {
        class: GraphClass,
        witness: Vec<Vertex>,
    },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("replayed stream diverged at output {position}: inner stream is not deterministic")]
    Nondeterministic { position: usize },

    #[error("brute force refused: {n} vertices exceeds the cap of {cap}")]
    OracleCap { n: usize, cap: usize },

    #[error("generator gave up after {attempts} attempts")]
    RejectionBudget { attempts: usize },
}

impl Error {
    /// True for errors caused by malformed or out-of-scope user input.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::VertexOutOfRange { .. }
                | Error::SelfLoop(_)
                | Error::NotAMember { .. }
                | Error::Input(_)
                | Error::Parse { .. }
                | Error::OracleCap { .. }
                | Error::RejectionBudget { .. }
        )
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
