use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {letter} is outside an alphabet of size {size}")]
    LetterOutOfRange { letter: u32, size: usize },

    #[error("alphabet mismatch: expected {expected} letters, found {found}")]
    AlphabetMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("image of letter {letter} has no factorization into code images")]
    NoFactorization { letter: u32 },

    #[error("image of letter {letter} has more than one factorization into code images")]
    AmbiguousFactorization { letter: u32 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("language horizon {have} is too short, at least {need} is required")]
    Horizon { have: usize, need: usize },

    #[error("level {level}: {source}")]
    AtLevel { level: usize, source: Box<Error> },
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    /// Whether the error can be fixed by rerunning with a larger horizon.
    pub fn is_horizon(&self) -> bool {
        match self {
            Error::Horizon { .. } => true,
            Error::AtLevel { source, .. } => source.is_horizon(),
            _ => false,
        }
    }

    /// The horizon that would have been enough, if this is a horizon error.
    pub fn needed_horizon(&self) -> Option<usize> {
        match self {
            Error::Horizon { need, .. } => Some(*need),
            Error::AtLevel { source, .. } => source.needed_horizon(),
            _ => None,
        }
    }

    pub fn at_level(self, level: usize) -> Self {
        Error::AtLevel { level, source: Box::new(self) }
    }
}
