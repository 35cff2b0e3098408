use std::ops::Range;
use std::path::PathBuf;

use ncr_core::Condition;

/// 1-based line and column of a byte offset in `src`.
pub fn locate(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let line_start = before.rfind('\n').map_or(0, |i| i + 1);
    let column = before[line_start..].chars().count() + 1;
    (line, column)
}

/// Where in an input file an error was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Location {
    pub source: String,
    pub line: usize,
    pub column: usize,
}

impl Location {
    pub fn new(source: &str, src: &str, span: Range<usize>) -> Self {
        let (line, column) = locate(src, span.start);
        Location { source: source.to_owned(), line, column }
    }
}

impl std::fmt::Display for Location {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}:{}", self.source, self.line, self.column)
    }
}

fn join_conditions(failed: &[Condition]) -> String {
    failed.iter().map(|c| c.label()).collect::<Vec<_>>().join(", ")
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{at}: parse error: {message}")]
    Parse { at: Location, message: String },

    #[error("{at}: unknown name `{name}`")]
    UnknownName { at: Location, name: String },

    #[error("{at}: dimension mismatch: expected {expected} entries, found {found}")]
    DimensionMismatch { at: Location, expected: usize, found: usize },

    #[error("size limit exceeded: {parameter} = {value}, maximum is {limit}")]
    SizeLimitExceeded { parameter: &'static str, value: i64, limit: i64 },

    #[error("pair `{pair}` is not admissible: {} failed", join_conditions(.failed))]
    NotAdmissible { pair: String, failed: Vec<Condition> },

    #[error("{0}")]
    Usage(String),

    #[error("cannot read {}: {source}", .path.display())]
    Read { path: PathBuf, source: std::io::Error },

    #[error("cannot write {}: {source}", .path.display())]
    Write { path: PathBuf, source: std::io::Error },

    #[error(transparent)]
    Core(#[from] ncr_core::Error),
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_and_column() {
        let src = "a = 1\nbé = \"x\"\n";
        assert_eq!(locate(src, 0), (1, 1));
        assert_eq!(locate(src, 6), (2, 1));
        assert_eq!(locate(src, src.find('=').unwrap()), (1, 3));
        let second_eq = src.rfind('=').unwrap();
        assert_eq!(locate(src, second_eq), (2, 4));
    }
}
