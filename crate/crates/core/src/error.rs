use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown Lie type `{0}`")]
    UnknownType(String),
    #[error("unsupported group `{0}`: expected one of F4, E6, E7, E8")]
    UnsupportedGroup(String),
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("weight has {got} coordinates, rank is {rank}")]
    WrongLength { got: usize, rank: usize },
    #[error("Galois index {k} is not coprime to conductor {n}")]
    NotCoprime { k: i64, n: u64 },
    #[error("cannot parse cyclotomic number `{0}`")]
    BadCyclotomic(String),
    #[error("malformed torus point: {0}")]
    MalformedPoint(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("table `{name}` fails validation: {}", .violations.join("; "))]
    Invalid { name: String, violations: Vec<String> },
    #[error("no Weyl module data for {group} with high weight {weight:?}")]
    NoWeylData { group: String, weight: Vec<i64> },
    #[error("{0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
