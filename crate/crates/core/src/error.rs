use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size limit exceeded for {what}: {value} > {limit}")]
    SizeLimit {
        what: &'static str,
        value: u128,
        limit: u128,
    },

    #[error("invalid input: {0}")]
    Input(String),

    /// Torsion and rigidity computations are only meaningful for even rank.
    #[error("rank r = {0} is odd; this computation requires an even rank r >= 2")]
    OddRank(usize),

    #[error("not a virtual character: inner product with {label} is {value}")]
    NotVirtualCharacter { label: String, value: String },

    /// A consistency check failed. Always a bug, never a property of the input.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub(crate) fn check_cap(what: &'static str, value: u128, limit: u128) -> Result<()> {
        if value > limit {
            Err(Error::SizeLimit { what, value, limit })
        } else {
            Ok(())
        }
    }
}
