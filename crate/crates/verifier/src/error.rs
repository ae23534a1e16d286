use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("unknown suite `{0}` (see --list-suites)")]
    UnknownSuite(String),
    #[error("invalid value for `{key}`: {reason}")]
    InvalidConfig { key: String, reason: String },
    #[error("config file line {line}: {reason}")]
    ConfigSyntax { line: usize, reason: String },
    #[error("could not access {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("suite `{suite}` hit an algebra error: {source}")]
    Algebra {
        suite: &'static str,
        #[source]
        source: octoweak_core::Error,
    },
}
