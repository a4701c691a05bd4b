use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph is disconnected; distances are undefined")]
    Disconnected,

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("order {0} is outside the built-in enumerator range 1..=8; generate a graph6 file externally and scan it with --graph6")]
    OrderOutOfRange(usize),

    #[error("structural classification found neither a family nor a forbidden witness for {graph6}")]
    Contradiction { graph6: String },

    #[error("{path}:{line}: {source}")]
    Input {
        path: String,
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
