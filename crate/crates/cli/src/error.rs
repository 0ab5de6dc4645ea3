use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Core(#[from] lincode_core::Error),
    #[error("extension columns are over GF({columns}) but the code is over GF({code})")]
    FieldMismatch { code: u32, columns: u32 },
    #[error("invalid LINCODE_THREADS: {0}")]
    Threads(String),
}

impl CliError {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        CliError::Parse { line, message: message.into() }
    }

    /// Process exit status: 2 when a resource limit stopped the computation,
    /// 1 for every other failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(lincode_core::Error::ResourceLimit(_)) => 2,
            _ => 1,
        }
    }
}
