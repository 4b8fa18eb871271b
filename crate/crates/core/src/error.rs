use thiserror::Error;

/// Errors produced by constructors and partial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The triple (n, m, d) does not describe a generic singularity in range.
    #[error("invalid singularity parameters: {0}")]
    InvalidParams(String),

    /// A c-matrix failed the bounds, monotonicity or admissibility conditions.
    #[error("invalid c-matrix: {0}")]
    InvalidCMatrix(String),

    /// A height vector is not a valid (dn,dm)-Dyck path.
    #[error("invalid Dyck path: {0}")]
    InvalidPath(String),

    /// A generator vector is not a valid 0-normalized Γ-semimodule.
    #[error("invalid semimodule: {0}")]
    InvalidSemimodule(String),

    /// A box coordinate lies outside the Young diagram.
    #[error("box ({x},{y}) is not in the diagram")]
    BoxNotInDiagram { x: i64, y: i64 },

    /// An element required to lie in the semimodule does not.
    #[error("{0} is not in the semimodule")]
    NotInSemimodule(i64),
}
