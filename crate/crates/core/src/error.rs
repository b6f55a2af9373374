use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid dimensions gl({m}|{n}): both blocks must be nonempty and m + n <= {max}")]
    InvalidDims { m: usize, n: usize, max: usize },
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("elements belong to different algebras gl({0}|{1}) and gl({2}|{3})")]
    DimsMismatch(usize, usize, usize, usize),
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("matrix sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("constant term is not an invertible scalar")]
    NonInvertibleConstant,
    #[error("constant term must equal 1")]
    ConstantNotOne,
    #[error("constant term of the matrix must be the identity")]
    ConstantNotIdentity,
    #[error("quasideterminant |X|_{{{i},{j}}} undefined: entry ({j},{i}) of the inverse has no invertible constant term")]
    UndefinedQuasideterminant { i: usize, j: usize },
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("parse error: {0}")]
    Parse(String),
}
