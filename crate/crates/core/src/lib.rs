//! Exact tagged point sets.
//!
//! Points carry a value (position) and a series (belonging). Equal-value
//! points from different series coexist, which makes contact between
//! disjoint closed sets expressible: two objects touch when they share a
//! value. On top of that the crate provides exact set distance, Dedekind-type
//! cuts of tagged segment unions, gap-freeness and contact-everywhere
//! continuity checks, and piecewise-linear motion trajectories.
//!
//! All types are generic over an exact [`Scalar`]; the defaults use
//! arbitrary-precision rationals.

pub mod error;
pub mod line;
pub mod metric;
pub mod scalar;
pub mod tagged;
pub mod trajectory;

pub use error::{Error, Result};
pub use line::{
    cantor_continuous, classify_cut, classify_sides, cut, poincare_continuous, split,
    verify_continuity_equivalence, CantorVerdict, ContinuityEquivalence, CutMode, CutResult,
    CutSide, CutType, Interval, Mode, PoincareVerdict, TaggedLineSet, TaggedSegment,
};
pub use metric::{
    check_disjoint, check_positive_distance, in_contact, point_distance_sq, set_distance_sq,
    value_sources_intersect, verify_contact_equivalence, Cell, ContactEquivalence, Span,
    SquaredDistance, TaggedObject,
};
pub use scalar::{format_rational, parse_rational, sqrt_decimal, Scalar};
pub use tagged::{make_point, relate, FiniteTaggedSet, Relation, SeriesTag, TaggedPoint, Value};
pub use trajectory::{
    build_trajectory, phase_contact, ApexReport, Breakpoint, ContactReport, Junction,
    MotionEntry, Phase, SeriesCut, Trajectory,
};

/// Arbitrary-precision rational, the default scalar.
pub type Rational = num_rational::BigRational;
/// Fixed-width rational; arithmetic panics on overflow.
pub type Rational64 = num_rational::Rational64;

pub type Point = TaggedPoint<Rational>;
pub type PointSet = FiniteTaggedSet<Rational>;
pub type LineSet = TaggedLineSet<Rational>;
pub type Segment = TaggedSegment<Rational>;
pub type Path = Trajectory<Rational>;

pub type Point64 = TaggedPoint<Rational64>;
pub type PointSet64 = FiniteTaggedSet<Rational64>;
pub type LineSet64 = TaggedLineSet<Rational64>;
pub type Segment64 = TaggedSegment<Rational64>;
pub type Path64 = Trajectory<Rational64>;
