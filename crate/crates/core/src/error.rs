use thiserror::Error;

use crate::kernel::GradeParams;

/// Errors raised while reading framework files.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: duplicate argument label `{label}`")]
    DuplicateLabel { line: usize, label: String },
    #[error("line {line}: attack references unknown label `{label}`")]
    UnknownLabel { line: usize, label: String },
    #[error("line {line}: missing `#` separator between nodes and edges")]
    MissingSeparator { line: usize },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid argument label `{0}`")]
    InvalidLabel(String),
    #[error("duplicate argument label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown argument `{0}`")]
    UnknownArgument(String),
    #[error("attack ({0}, {1}) refers to an argument index out of range")]
    AttackOutOfRange(usize, usize),
    #[error("grade parameters must be positive, got l={l} m={m} n={n}")]
    ZeroGrade { l: usize, m: usize, n: usize },
    #[error("framework has {args} arguments, enumeration bound is {bound}")]
    TooLarge { args: usize, bound: usize },
    #[error("start set is not self-defended under d_{m}{n}")]
    NotExpandable { m: usize, n: usize },
    #[error("start set is not admissible under {0}")]
    NotAdmissible(GradeParams),
    #[error("start set does not reach every argument through attack paths")]
    NotReaching,
    #[error("no {0}-complete extension contains the start set")]
    NoCompleteSuperset(GradeParams),
    #[error("invalid permutation of {0} arguments")]
    InvalidPermutation(usize),
    #[error("knowledge base: {0}")]
    Formula(String),
    #[error("{atoms} atoms exceed the truth-table bound of {bound}")]
    AtomBound { atoms: usize, bound: usize },
    #[error("{count} formulas exceed the knowledge base bound of {bound}")]
    KnowledgeBaseTooLarge { count: usize, bound: usize },
    #[error("{count} generated arguments exceed the bound of {bound}")]
    TooManyArguments { count: usize, bound: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
