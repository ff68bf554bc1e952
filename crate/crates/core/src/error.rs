use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("groupoid order must be at least 1")]
    EmptyCarrier,

    #[error("order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("table has {rows} rows but order {order}")]
    RowCount { rows: usize, order: usize },

    #[error("row {row} has {cols} entries but order {order}")]
    ColumnCount {
        row: usize,
        cols: usize,
        order: usize,
    },

    #[error("table entry ({row},{col}) = {value} is not an element index below {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },

    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),

    #[error("element index {index} out of range for order {order}")]
    ElementOutOfRange { index: usize, order: usize },

    #[error("subset bound to order {subset} used with a groupoid of order {groupoid}")]
    OrderMismatch { subset: usize, groupoid: usize },

    #[error("ideal predicates require a nonempty subset")]
    EmptySubset,

    #[error("input is not an abelian group: {0}")]
    NotAbelianGroup(String),

    #[error("grade {0} is outside [0,1]")]
    GradeOutOfRange(String),

    #[error("k = {0} is outside [0,1)")]
    KOutOfRange(String),

    #[error("level threshold must be strictly positive")]
    ZeroThreshold,

    #[error("cannot parse {0:?} as an exact rational")]
    BadRational(String),

    #[error("{0} has no pointwise (fuzzy point) definition")]
    NoPointwiseForm(String),

    #[error("unknown ideal kind {0:?}")]
    UnknownKind(String),

    #[error("unknown statement id {0:?}")]
    UnknownStatement(String),

    #[error("grade grid must be nonempty")]
    EmptyGrid,

    #[error("groupoid has no left identity")]
    NotUnitary,

    #[error("element {0} is not intra-regular")]
    NotIntraRegular(usize),

    #[error("checkpoint: {0}")]
    Checkpoint(String),
}
