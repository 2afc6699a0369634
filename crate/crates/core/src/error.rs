use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `2g - 2 + n <= 0`: no moduli space of stable curves exists.
    #[error("unstable (g, n) = ({g}, {n}): need 2g - 2 + n > 0")]
    Unstable { g: i64, n: i64 },

    #[error(
        "unsupported Hodge index: λ_{k} at genus {g}; supported domain is k = 0, k = g, \
         or g <= 1 (ELSV evaluation is therefore limited to g <= 1)"
    )]
    UnsupportedHodgeIndex { g: u32, k: u32 },

    #[error(
        "unsupported Hodge index in term {term} at genus {g} (λ_{k}); supported domain is k = 0, k = g, \
         or g <= 1"
    )]
    UnsupportedTerm { term: String, g: u32, k: u32 },

    #[error(
        "ELSV evaluation needs stable (g, n) = ({g}, {n}): 2g - 2 + n > 0, so n >= 3 in genus 0"
    )]
    ElsvUnstable { g: u32, n: usize },

    #[error("invalid stable graph: {}", .0.join("; "))]
    InvalidGraph(Vec<String>),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("no such cover count: transposition count r = {0} is negative")]
    NegativeBranchCount(i64),

    #[error("size cap exceeded: {0}")]
    CapExceeded(String),

    #[error("single Hurwitz only: cut-and-join does not accept a second partition")]
    SingleHurwitzOnly,

    #[error("singular interpolation system: rank {rank} < {unknowns} unknowns; supply more or better-spread lattice points")]
    SingularSystem { rank: usize, unknowns: usize },

    #[error("sample data is not polynomial of total degree <= {0}")]
    InconsistentSystem(u32),

    #[error("no generator classification for dimension {0}; available for dimensions 0..=6 only")]
    ClassificationUnavailable(u32),

    #[error("cache parse error at line {line}: {reason}")]
    CacheParse { line: usize, reason: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors that describe a mathematical domain this crate
    /// deliberately does not cover, as opposed to malformed input.
    pub fn is_unsupported_domain(&self) -> bool {
        matches!(
            self,
            Error::UnsupportedHodgeIndex { .. }
                | Error::UnsupportedTerm { .. }
                | Error::CapExceeded(_)
                | Error::ClassificationUnavailable(_)
                | Error::SingleHurwitzOnly
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
