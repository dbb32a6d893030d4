use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("logarithm of zero")]
    ZeroArgument,
    #[error("point outside the unit disk (|z| = {modulus})")]
    OutsideDisk { modulus: f64 },
    #[error("evaluation point within {distance:e} of a pole")]
    NearPole { distance: f64 },
    #[error("parameter is ill-conditioned ({what} = {value:e})")]
    IllConditioned { what: &'static str, value: f64 },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("quadrature tolerance not met after {evaluations} evaluations")]
    ToleranceNotMet { evaluations: usize },
    #[error("non-finite value produced by {0}")]
    NonFinite(&'static str),
}

impl Error {
    pub(crate) fn bad(msg: impl Into<String>) -> Self {
        Error::BadParameter(msg.into())
    }
}
