use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rational {0:?}: expected \"p/q\", an integer or a decimal")]
    MalformedRational(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("dangling cube reference {0:?}")]
    DanglingCube(String),

    #[error("invalid presentation: {0}")]
    Structure(String),

    #[error("{op}: {reason}")]
    Precondition { op: &'static str, reason: String },

    #[error("{0} is not closed under faces")]
    NotFaceClosed(String),

    #[error(
        "{op}: complex has {components} components, but the construction needs a connected space"
    )]
    Disconnected { op: &'static str, components: usize },

    #[error(
        "{op}: loop is not strictly increasing (height stays at 0 on an interval of positive length); \
         apply make_increasing first"
    )]
    HeightPlateau { op: &'static str },

    #[error("{op}: excursion crosses height 0 {count} times, expected at most one")]
    MultipleCrossings { op: &'static str, count: usize },

    #[error("{0}: integer overflow")]
    Overflow(&'static str),
}

impl Error {
    pub(crate) fn pre(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Precondition { op, reason: reason.into() }
    }

    /// Input that could not be parsed into a well formed value, as opposed to
    /// a well formed value that violates an operation's precondition.
    pub fn is_malformed(&self) -> bool {
        matches!(
            self,
            Error::MalformedRational(_)
                | Error::Malformed(_)
                | Error::DanglingCube(_)
                | Error::Structure(_)
        )
    }
}
