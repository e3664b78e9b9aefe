use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation (zero element,
    /// composite where a prime is required, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("matrix is rank deficient")]
    RankDeficient,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// `inner` is not contained in `outer`: its coordinates are not integral.
    #[error("not a sublattice: non-integral coordinates")]
    NotSublattice,

    #[error("incommensurate: {0}")]
    Incommensurate(String),

    #[error("not orthogonal: {0}")]
    NotOrthogonal(String),

    #[error("quaternion is not primitive; reduce it with make_primitive first")]
    NotPrimitive,

    #[error("quaternion pair is not admissible: {0}")]
    NotAdmissible(String),

    /// The handle cannot be evaluated by the requested route.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A resource cap was hit. Enumerations attach a resume token.
    #[error("resource cap of {cap} exceeded{}", .resume.as_ref().map(|t| format!("; resume with {t}")).unwrap_or_default())]
    CapExceeded { cap: u64, resume: Option<String> },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
