use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("operand is empty")]
    EmptyOperand,

    /// The two operands share a point with equal value and equal series,
    /// so they are not two disjoint objects.
    #[error("operands overlap as objects at {point}")]
    Overlap { point: String },

    #[error("value sources intersect at {value}")]
    ValueSourcesIntersect { value: String },

    #[error("operand is not closed")]
    NotClosed,

    #[error("segment endpoints out of order: {lo} > {hi}")]
    InvertedSegment { lo: String, hi: String },

    #[error("segments with series {series} overlap on ({lo}, {hi})")]
    SameSeriesOverlap {
        series: String,
        lo: String,
        hi: String,
    },

    #[error("cut position {position} is not strictly inside the value projection [{lo}, {hi}]")]
    CutOutOfRange {
        position: String,
        lo: String,
        hi: String,
    },

    #[error("disordered cut needs at least two points at {position}, found {multiplicity}")]
    NotDisorderedAt {
        position: String,
        multiplicity: usize,
    },

    #[error("not an order-respecting cut: left reaches {left} but right starts at {right}")]
    UnorderedCut { left: String, right: String },

    /// Neither side of the cut owns the values strictly between `gap_lo` and
    /// `gap_hi`; a connected projection never produces this.
    #[error("fourth-type cut: no point of either side lies in the gap ({gap_lo}, {gap_hi})")]
    FourthType { gap_lo: String, gap_hi: String },

    #[error("continuity equivalence applies to all-doubled sets; segment {segment} is single")]
    OutsideDoubledScope { segment: String },

    #[error("phase {tag:?} needs at least two breakpoints")]
    ShortPhase { tag: String },

    #[error("phase {tag:?} parameters must strictly increase")]
    NonIncreasingParameters { tag: String },

    #[error("trajectory has no phases")]
    EmptyTrajectory,

    #[error("phase {next:?} starts at parameter {start} but phase {prev:?} ends at {end}")]
    NotAbutting {
        prev: String,
        next: String,
        end: String,
        start: String,
    },

    #[error("series parameter {param} is not strictly inside ({lo}, {hi})")]
    ParameterOutOfRange {
        param: String,
        lo: String,
        hi: String,
    },
}
