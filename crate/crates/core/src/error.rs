use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A closure or enumeration grew past its cap. The generated object may be infinite.
    #[error("closure exceeded cap of {0} elements")]
    CapExceeded(usize),
    #[error("action is not a homomorphism into automorphisms: {0}")]
    ActionNotAutomorphism(String),
    #[error("greedy partition failed: {0}")]
    PartitionFailed(String),
    #[error("no central-membership oracle for {0}")]
    PredicateUnavailable(String),
    #[error("action is not transitive")]
    NotTransitive,
    #[error("unknown group family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("bad group spec: {0}")]
    BadSpec(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("element does not belong to the group: {0}")]
    BadElement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
