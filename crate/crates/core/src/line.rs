//! Tagged segment unions on the line: projection, boundary, Dedekind-type
//! cuts and the two continuity checks.
//!
//! A [`TaggedSegment`] in [`Mode::Doubled`] hosts two points at every
//! position, tagged `series` and `series'`, the lower copy sorting first.
//! A connected union of doubled segments is the bounded-window model of a
//! continuum that is in contact everywhere.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::metric::{Cell, Span, TaggedObject};
use crate::scalar::Scalar;
use crate::tagged::{FiniteTaggedSet, SeriesTag, TaggedPoint, Value};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    Single,
    Doubled,
}

/// Closed segment `[lo, hi]` of tagged points.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TaggedSegment<S = Rational> {
    lo: S,
    hi: S,
    series: SeriesTag<S>,
    mode: Mode,
}

impl<S: Scalar> TaggedSegment<S> {
    pub fn new(lo: S, hi: S, series: SeriesTag<S>, mode: Mode) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvertedSegment {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(Self {
            lo,
            hi,
            series,
            mode,
        })
    }

    pub fn single(lo: S, hi: S, series: SeriesTag<S>) -> Result<Self> {
        Self::new(lo, hi, series, Mode::Single)
    }

    pub fn doubled(lo: S, hi: S, series: SeriesTag<S>) -> Result<Self> {
        Self::new(lo, hi, series, Mode::Doubled)
    }

    pub fn lo(&self) -> &S {
        &self.lo
    }

    pub fn hi(&self) -> &S {
        &self.hi
    }

    pub fn series(&self) -> &SeriesTag<S> {
        &self.series
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn contains(&self, x: &S) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    /// Series tags of the points at each position, lowest first.
    pub fn copies(&self) -> Vec<SeriesTag<S>> {
        match self.mode {
            Mode::Single => vec![self.series.clone()],
            Mode::Doubled => vec![self.series.clone(), self.series.primed()],
        }
    }

    fn cells(&self) -> impl Iterator<Item = Cell<S>> + '_ {
        self.copies().into_iter().map(|series| Cell {
            spans: vec![Span::closed(self.lo.clone(), self.hi.clone())],
            series,
        })
    }
}

impl<S: Scalar> fmt::Display for TaggedSegment<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]_{}", self.lo, self.hi, self.series)?;
        if self.mode == Mode::Doubled {
            write!(f, " (doubled)")?;
        }
        Ok(())
    }
}

/// Closed interval of values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval<S = Rational> {
    pub lo: S,
    pub hi: S,
}

impl<S: Scalar> fmt::Display for Interval<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Finite union of tagged segments, sorted by `(lo, hi, series)`.
///
/// Segments sharing a point tag may touch but not overlap; segments with
/// different tags overlap freely.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TaggedLineSet<S = Rational> {
    segments: Vec<TaggedSegment<S>>,
}

impl<S: Scalar> TaggedLineSet<S> {
    pub fn new(segments: impl IntoIterator<Item = TaggedSegment<S>>) -> Result<Self> {
        let mut segments: Vec<_> = segments.into_iter().collect();
        segments.sort();
        segments.dedup();

        let mut cells: Vec<(SeriesTag<S>, S, S)> = segments
            .iter()
            .flat_map(|s| {
                s.copies()
                    .into_iter()
                    .map(|tag| (tag, s.lo.clone(), s.hi.clone()))
            })
            .collect();
        cells.sort();
        for w in cells.windows(2) {
            let ((tag_a, _, hi_a), (tag_b, lo_b, hi_b)) = (&w[0], &w[1]);
            // Sorted by lo within a tag, so the previous cell has the
            // largest hi unless an overlap was already reported.
            if tag_a == tag_b && lo_b < hi_a {
                return Err(Error::SameSeriesOverlap {
                    series: tag_a.to_string(),
                    lo: lo_b.to_string(),
                    hi: hi_a.clone().min(hi_b.clone()).to_string(),
                });
            }
        }
        Ok(Self { segments })
    }

    pub fn segments(&self) -> &[TaggedSegment<S>] {
        &self.segments
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn is_all_doubled(&self) -> bool {
        self.segments.iter().all(|s| s.mode == Mode::Doubled)
    }

    /// Smallest interval containing the value projection.
    pub fn hull(&self) -> Option<Interval<S>> {
        let lo = self.segments.iter().map(|s| &s.lo).min()?;
        let hi = self.segments.iter().map(|s| &s.hi).max()?;
        Some(Interval {
            lo: lo.clone(),
            hi: hi.clone(),
        })
    }

    /// Union of the segments' value ranges as disjoint closed intervals in
    /// ascending order. Touching ranges merge.
    pub fn value_projection(&self) -> Vec<Interval<S>> {
        let mut merged: Vec<Interval<S>> = Vec::new();
        // segments are sorted by lo
        for s in &self.segments {
            match merged.last_mut() {
                Some(last) if s.lo <= last.hi => {
                    if s.hi > last.hi {
                        last.hi = s.hi.clone();
                    }
                }
                _ => merged.push(Interval {
                    lo: s.lo.clone(),
                    hi: s.hi.clone(),
                }),
            }
        }
        merged
    }

    /// Distinct series tags of the points at value `x`.
    pub fn tags_at(&self, x: &S) -> BTreeSet<SeriesTag<S>> {
        self.segments
            .iter()
            .filter(|s| s.contains(x))
            .flat_map(TaggedSegment::copies)
            .collect()
    }

    /// Number of distinct tagged points at value `x`.
    pub fn multiplicity_at(&self, x: &S) -> usize {
        self.tags_at(x).len()
    }

    /// Boundary points. Points of different series are told apart, so a
    /// point is on the boundary when its value is an endpoint of the merged
    /// range of its own series: where two tags meet, both points are
    /// boundary points. Both copies of a doubled segment are reported.
    pub fn boundary(&self) -> FiniteTaggedSet<S> {
        let mut ranges: Vec<(SeriesTag<S>, S, S)> = self
            .segments
            .iter()
            .flat_map(|s| {
                s.copies()
                    .into_iter()
                    .map(|tag| (tag, s.lo.clone(), s.hi.clone()))
            })
            .collect();
        ranges.sort();
        let mut merged: Vec<(SeriesTag<S>, S, S)> = Vec::new();
        for (tag, lo, hi) in ranges {
            match merged.last_mut() {
                Some((t, _, last_hi)) if *t == tag && lo <= *last_hi => {
                    if hi > *last_hi {
                        *last_hi = hi;
                    }
                }
                _ => merged.push((tag, lo, hi)),
            }
        }
        let points = merged.into_iter().flat_map(|(tag, lo, hi)| {
            [
                TaggedPoint::new(Value::scalar(lo), tag.clone()),
                TaggedPoint::new(Value::scalar(hi), tag),
            ]
        });
        FiniteTaggedSet::new(1, points).expect("one-dimensional points")
    }
}

impl<S: Scalar> TaggedObject<S> for TaggedLineSet<S> {
    fn dimension(&self) -> usize {
        1
    }

    fn cells(&self) -> Vec<Cell<S>> {
        self.segments.iter().flat_map(TaggedSegment::cells).collect()
    }
}

impl<S: Scalar> fmt::Display for TaggedLineSet<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.segments.iter().enumerate() {
            if i > 0 {
                write!(f, " ∪ ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Where the points sitting exactly at the cut position go.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CutMode {
    /// All of them join the left side.
    LeftClosed,
    /// All of them join the right side.
    RightClosed,
    /// The lower-ordered half joins the left side and the rest the right,
    /// so both sides own a point at the position.
    Disordered,
}

/// The three realisable Dedekind-type cut shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CutType {
    /// Left has a largest value point, right has no smallest.
    Type1,
    /// Left has no largest value point, right has a smallest.
    Type2,
    /// Both extremes exist and share a value: a disordered cut.
    Type3,
}

impl fmt::Display for CutType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CutType::Type1 => "Type1",
            CutType::Type2 => "Type2",
            CutType::Type3 => "Type3",
        };
        f.write_str(name)
    }
}

/// One side of a cut: one-dimensional cells that may be open at the cut.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CutSide<S = Rational> {
    pieces: Vec<Cell<S>>,
}

impl<S: Scalar> CutSide<S> {
    pub fn new(pieces: Vec<Cell<S>>) -> Self {
        debug_assert!(pieces.iter().all(|c| c.spans.len() == 1));
        Self { pieces }
    }

    pub fn pieces(&self) -> &[Cell<S>] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn contains(&self, point: &TaggedPoint<S>) -> bool {
        let [x] = point.value().coords() else {
            return false;
        };
        self.pieces
            .iter()
            .any(|c| c.series == *point.series() && c.spans[0].contains(x))
    }

    fn supremum(&self) -> Option<&S> {
        self.pieces.iter().map(|c| &c.spans[0].hi).max()
    }

    fn infimum(&self) -> Option<&S> {
        self.pieces.iter().map(|c| &c.spans[0].lo).min()
    }

    /// A point of greatest value, if the supremum is attained. Among several
    /// points at that value the highest series is returned.
    pub fn largest_value_point(&self) -> Option<TaggedPoint<S>> {
        let sup = self.supremum()?;
        self.pieces
            .iter()
            .filter(|c| c.spans[0].hi == *sup && c.spans[0].hi_closed)
            .map(|c| &c.series)
            .max()
            .map(|tag| TaggedPoint::new(Value::scalar(sup.clone()), tag.clone()))
    }

    /// A point of least value, if the infimum is attained. Among several
    /// points at that value the lowest series is returned.
    pub fn smallest_value_point(&self) -> Option<TaggedPoint<S>> {
        let inf = self.infimum()?;
        self.pieces
            .iter()
            .filter(|c| c.spans[0].lo == *inf && c.spans[0].lo_closed)
            .map(|c| &c.series)
            .min()
            .map(|tag| TaggedPoint::new(Value::scalar(inf.clone()), tag.clone()))
    }
}

impl<S: Scalar> TaggedObject<S> for CutSide<S> {
    fn dimension(&self) -> usize {
        1
    }

    fn cells(&self) -> Vec<Cell<S>> {
        self.pieces.clone()
    }
}

impl<S: Scalar> fmt::Display for CutSide<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.pieces.iter().enumerate() {
            if i > 0 {
                write!(f, " ∪ ")?;
            }
            let s = &c.spans[0];
            let open = if s.lo_closed { '[' } else { '(' };
            let close = if s.hi_closed { ']' } else { ')' };
            write!(f, "{open}{}, {}{close}_{}", s.lo, s.hi, c.series)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CutResult<S = Rational> {
    pub position: S,
    pub left: CutSide<S>,
    pub right: CutSide<S>,
    pub cut_type: CutType,
}

/// Partitions `z` at `position` without classifying the result.
///
/// Points below the position go left, points above go right, and points at
/// the position are placed according to `mode`. The position must lie
/// strictly between the smallest and largest value of `z`; it may fall in
/// a gap of a disconnected projection, which [`classify_sides`] rejects.
pub fn split<S: Scalar>(
    z: &TaggedLineSet<S>,
    position: &S,
    mode: CutMode,
) -> Result<(CutSide<S>, CutSide<S>)> {
    let hull = z.hull().ok_or(Error::EmptyOperand)?;
    if *position <= hull.lo || *position >= hull.hi {
        return Err(Error::CutOutOfRange {
            position: position.to_string(),
            lo: hull.lo.to_string(),
            hi: hull.hi.to_string(),
        });
    }

    let at_position = z.tags_at(position);
    let goes_left: BTreeSet<SeriesTag<S>> = match mode {
        CutMode::LeftClosed => at_position,
        CutMode::RightClosed => BTreeSet::new(),
        CutMode::Disordered => {
            if at_position.len() < 2 {
                return Err(Error::NotDisorderedAt {
                    position: position.to_string(),
                    multiplicity: at_position.len(),
                });
            }
            let half = at_position.len().div_ceil(2);
            at_position.into_iter().take(half).collect()
        }
    };

    let mut left = Vec::new();
    let mut right = Vec::new();
    for cell in z.cells() {
        let span = &cell.spans[0];
        let in_left = goes_left.contains(&cell.series);
        let left_mask = Span {
            lo: span.lo.clone().min(position.clone()),
            hi: position.clone(),
            lo_closed: true,
            hi_closed: in_left,
        };
        let right_mask = Span {
            lo: position.clone(),
            hi: span.hi.clone().max(position.clone()),
            lo_closed: !in_left,
            hi_closed: true,
        };
        if let Some(part) = span.intersect(&left_mask) {
            left.push(Cell {
                spans: vec![part],
                series: cell.series.clone(),
            });
        }
        if let Some(part) = span.intersect(&right_mask) {
            right.push(Cell {
                spans: vec![part],
                series: cell.series,
            });
        }
    }
    Ok((CutSide::new(left), CutSide::new(right)))
}

/// Classifies a partition by which extreme points exist.
///
/// When no point of either side lies between the left supremum and the
/// right infimum, or when neither extreme is attained, the partition is the
/// impossible fourth configuration and [`Error::FourthType`] names the gap.
pub fn classify_sides<S: Scalar>(left: &CutSide<S>, right: &CutSide<S>) -> Result<CutType> {
    let (Some(sup), Some(inf)) = (left.supremum(), right.infimum()) else {
        return Err(Error::EmptyOperand);
    };
    if sup > inf {
        return Err(Error::UnorderedCut {
            left: sup.to_string(),
            right: inf.to_string(),
        });
    }
    let fourth = || Error::FourthType {
        gap_lo: sup.to_string(),
        gap_hi: inf.to_string(),
    };
    if sup < inf {
        return Err(fourth());
    }
    match (
        left.largest_value_point().is_some(),
        right.smallest_value_point().is_some(),
    ) {
        (true, false) => Ok(CutType::Type1),
        (false, true) => Ok(CutType::Type2),
        (true, true) => Ok(CutType::Type3),
        (false, false) => Err(fourth()),
    }
}

/// Recomputes the type of a cut from its sides, ignoring the stored type.
pub fn classify_cut<S: Scalar>(result: &CutResult<S>) -> Result<CutType> {
    classify_sides(&result.left, &result.right)
}

/// Dedekind-type cut of `z` at `position`.
pub fn cut<S: Scalar>(z: &TaggedLineSet<S>, position: &S, mode: CutMode) -> Result<CutResult<S>> {
    let (left, right) = split(z, position, mode)?;
    let cut_type = classify_sides(&left, &right)?;
    Ok(CutResult {
        position: position.clone(),
        left,
        right,
        cut_type,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CantorVerdict<S = Rational> {
    pub continuous: bool,
    /// Leftmost open gap `(lo, hi)` of the projection.
    pub gap: Option<(S, S)>,
}

/// Gap-freeness: the value projection is a single closed interval.
pub fn cantor_continuous<S: Scalar>(z: &TaggedLineSet<S>) -> Result<CantorVerdict<S>> {
    let projection = z.value_projection();
    if projection.is_empty() {
        return Err(Error::EmptyOperand);
    }
    let gap = projection
        .windows(2)
        .next()
        .map(|w| (w[0].hi.clone(), w[1].lo.clone()));
    Ok(CantorVerdict {
        continuous: gap.is_none(),
        gap,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareVerdict<S = Rational> {
    pub continuous: bool,
    /// A position whose canonical disordered cut is not in contact.
    pub counterexample: Option<S>,
}

/// Contact everywhere: the projection has no gap and every interior
/// position hosts at least two points, so the disordered cut at any
/// position leaves equal-value points on both sides.
///
/// Multiplicity only changes at segment endpoints, so it suffices to test
/// each interior endpoint and the midpoint between consecutive endpoints.
pub fn poincare_continuous<S: Scalar>(z: &TaggedLineSet<S>) -> Result<PoincareVerdict<S>> {
    let cantor = cantor_continuous(z)?;
    if let Some((lo, hi)) = cantor.gap {
        return Ok(PoincareVerdict {
            continuous: false,
            counterexample: Some(S::midpoint(&lo, &hi)),
        });
    }

    let endpoints: Vec<S> = z
        .segments()
        .iter()
        .flat_map(|s| [s.lo().clone(), s.hi().clone()])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut probes = Vec::new();
    for (i, e) in endpoints.iter().enumerate() {
        if i > 0 {
            probes.push(S::midpoint(&endpoints[i - 1], e));
            if i + 1 < endpoints.len() {
                probes.push(e.clone());
            }
        }
    }
    let counterexample = probes.into_iter().find(|x| z.multiplicity_at(x) < 2);
    Ok(PoincareVerdict {
        continuous: counterexample.is_none(),
        counterexample,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContinuityEquivalence {
    pub cantor: bool,
    pub poincare: bool,
    pub equivalent: bool,
}

/// Computes both continuity notions on an all-doubled set and reports
/// whether they agree.
pub fn verify_continuity_equivalence<S: Scalar>(
    z: &TaggedLineSet<S>,
) -> Result<ContinuityEquivalence> {
    if let Some(s) = z.segments().iter().find(|s| s.mode() == Mode::Single) {
        return Err(Error::OutsideDoubledScope {
            segment: s.to_string(),
        });
    }
    let cantor = cantor_continuous(z)?.continuous;
    let poincare = poincare_continuous(z)?.continuous;
    Ok(ContinuityEquivalence {
        cantor,
        poincare,
        equivalent: cantor == poincare,
    })
}
