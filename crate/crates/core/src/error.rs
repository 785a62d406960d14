use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid structure: {0}")]
    Invalid(String),

    #[error("invalid vertex reference {0}")]
    BadVertex(String),

    #[error("invalid block id {0}")]
    BadBlock(String),

    #[error("resource limit exceeded: {what} = {requested} > bound {bound} (raise the bound or pass --force)")]
    Resource {
        what: &'static str,
        requested: usize,
        bound: usize,
    },

    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Fails fast when `requested` exceeds `bound`.
pub fn guard(what: &'static str, requested: usize, bound: usize) -> Result<()> {
    if requested > bound {
        Err(Error::Resource {
            what,
            requested,
            bound,
        })
    } else {
        Ok(())
    }
}
