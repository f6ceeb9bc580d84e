use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The argument sits on (or numerically too close to) a pole.
    #[error("pole: {0}")]
    Pole(String),

    /// A kernel produced NaN or an infinity at a quadrature node. This is a
    /// bug in the kernel's domain handling, never a convergence issue.
    #[error("non-finite integrand value in kernel `{kernel}` at {variable} = {at:e}")]
    NonFiniteIntegrand {
        kernel: &'static str,
        variable: &'static str,
        at: f64,
    },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
