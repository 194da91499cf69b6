use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MvdError {
    /// Malformed arguments or violated preconditions.
    #[error("input error: {0}")]
    Input(String),
    /// A text file did not follow its format.
    #[error("format error (line {line}): {message}")]
    Format { line: usize, message: String },
    /// The quantity is not defined for this input.
    #[error("domain error: {0}")]
    Domain(String),
    /// The instance is larger than the configured exhaustive-search cap.
    #[error("capacity exceeded: {what} has order {n}, cap is {cap}")]
    Capacity { what: String, n: usize, cap: usize },
    /// A stored coloring is not an MVD-coloring of its graph.
    #[error("integrity error: no monochromatic cut separates {x} and {y}")]
    Integrity { x: String, y: String },
    /// Reading or writing a file failed.
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    /// The graph has more than one component.
    #[error("graph is disconnected: {}", format_components(.components))]
    Disconnected { components: Vec<Vec<String>> },
}

fn format_components(components: &[Vec<String>]) -> String {
    components
        .iter()
        .map(|c| format!("{{{}}}", c.join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

pub type Result<T> = std::result::Result<T, MvdError>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(MvdError::Input(msg.into()))
}
