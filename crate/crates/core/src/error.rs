use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polynomials live over different variable registries")]
    RegistryMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not divisible by the given linear form")]
    NotDivisible,
    #[error("divisor must be a nonzero homogeneous linear form")]
    NotLinear,
    #[error("generator is not homogeneous")]
    Inhomogeneous,
    #[error("degree {found} exceeds the supported maximum {max}")]
    DegreeTooHigh { found: u32, max: u32 },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("matrix is not in sp(2n)")]
    NotSymplectic,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("partition {0} is not an admissible symplectic Jordan type")]
    NotInPn(String),
    #[error("partition {0} has odd parts, so it does not label a component")]
    NotEven(String),
    #[error("linear system has no solution: {0}")]
    Infeasible(String),
    #[error("action on the zero-weight vector is not scalar")]
    NotScalar,
    #[error("point does not satisfy the defining equations")]
    NotOnScheme,
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("resource guard: {0}")]
    ResourceGuard(String),
    #[error("parse error: {0}")]
    Parse(String),
}
