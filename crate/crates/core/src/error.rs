use thiserror::Error;

use crate::picard::DivisorClass;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Caller supplied data outside an operation's domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A polarization sits on the boundary of the ample cone (nef, not ample).
    #[error("polarization {0} lies on the boundary of the ample cone")]
    BoundaryPolarization(DivisorClass),

    /// A polarization lies on a wall, so chamber data is undefined there.
    #[error("polarization {polarization} lies on the wall cut out by {xi}")]
    OnWall {
        polarization: DivisorClass,
        xi: DivisorClass,
    },

    /// An internal identity failed; this always indicates a formula bug.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }

    /// True for errors caused by a broken invariant rather than bad input.
    pub fn is_consistency(&self) -> bool {
        matches!(self, Error::Consistency(_))
    }
}
