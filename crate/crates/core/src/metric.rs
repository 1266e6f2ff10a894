//! Exact distance and the contact predicate.
//!
//! Distances are carried squared so they stay rational. Every supported set
//! representation is a finite union of [`Cell`]s: axis-aligned boxes of
//! values sharing one series tag. A finite point is a degenerate box, a
//! segment is a 1-D box, and one side of a cut may have an open end.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{sqrt_decimal, Scalar};
use crate::tagged::{relate, FiniteTaggedSet, SeriesTag, TaggedPoint, Value};
use crate::Rational;

/// A range of one coordinate. Each end is either included or excluded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Span<S = Rational> {
    pub lo: S,
    pub hi: S,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl<S: Scalar> Span<S> {
    pub fn closed(lo: S, hi: S) -> Self {
        debug_assert!(lo <= hi);
        Self {
            lo,
            hi,
            lo_closed: true,
            hi_closed: true,
        }
    }

    pub fn point(x: S) -> Self {
        Self::closed(x.clone(), x)
    }

    pub fn is_closed(&self) -> bool {
        self.lo_closed && self.hi_closed
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi || (self.lo == self.hi && !self.is_closed())
    }

    pub fn contains(&self, x: &S) -> bool {
        let above = if self.lo_closed { *x >= self.lo } else { *x > self.lo };
        let below = if self.hi_closed { *x <= self.hi } else { *x < self.hi };
        above && below
    }

    /// Common part of two spans, if nonempty.
    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let (lo, lo_closed) = match self.lo.cmp(&other.lo) {
            std::cmp::Ordering::Greater => (self.lo.clone(), self.lo_closed),
            std::cmp::Ordering::Less => (other.lo.clone(), other.lo_closed),
            std::cmp::Ordering::Equal => (self.lo.clone(), self.lo_closed && other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.cmp(&other.hi) {
            std::cmp::Ordering::Less => (self.hi.clone(), self.hi_closed),
            std::cmp::Ordering::Greater => (other.hi.clone(), other.hi_closed),
            std::cmp::Ordering::Equal => (self.hi.clone(), self.hi_closed && other.hi_closed),
        };
        let span = Self {
            lo,
            hi,
            lo_closed,
            hi_closed,
        };
        (!span.is_empty()).then_some(span)
    }

    /// Infimum of `|x - y|` over members of the two spans.
    pub fn gap(&self, other: &Self) -> S {
        let zero = S::zero();
        let right = other.lo.clone() - self.hi.clone();
        let left = self.lo.clone() - other.hi.clone();
        zero.max(right).max(left)
    }

    /// Some member of a nonempty span; the low end when it is included.
    pub fn pick(&self) -> S {
        if self.lo_closed {
            self.lo.clone()
        } else if self.hi_closed {
            self.hi.clone()
        } else {
            S::midpoint(&self.lo, &self.hi)
        }
    }
}

/// A box of values whose points all carry `series`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cell<S = Rational> {
    pub spans: Vec<Span<S>>,
    pub series: SeriesTag<S>,
}

impl<S: Scalar> Cell<S> {
    pub fn from_point(point: &TaggedPoint<S>) -> Self {
        Self {
            spans: point.value().coords().iter().cloned().map(Span::point).collect(),
            series: point.series().clone(),
        }
    }

    pub fn is_closed(&self) -> bool {
        self.spans.iter().all(Span::is_closed)
    }

    /// Common box of two cells, ignoring series.
    fn meet(&self, other: &Self) -> Option<Vec<Span<S>>> {
        self.spans
            .iter()
            .zip(&other.spans)
            .map(|(a, b)| a.intersect(b))
            .collect()
    }

    fn gap_sq(&self, other: &Self) -> S {
        self.spans
            .iter()
            .zip(&other.spans)
            .map(|(a, b)| {
                let g = a.gap(b);
                g.clone() * g
            })
            .fold(S::zero(), |acc, x| acc + x)
    }
}

fn pick_value<S: Scalar>(spans: &[Span<S>]) -> Value<S> {
    Value::from_coords_unchecked(spans.iter().map(Span::pick).collect())
}

/// A tagged point set that can be decomposed into cells.
pub trait TaggedObject<S: Scalar> {
    fn dimension(&self) -> usize;

    fn cells(&self) -> Vec<Cell<S>>;
}

impl<S: Scalar> TaggedObject<S> for FiniteTaggedSet<S> {
    fn dimension(&self) -> usize {
        FiniteTaggedSet::dimension(self)
    }

    fn cells(&self) -> Vec<Cell<S>> {
        self.iter().map(Cell::from_point).collect()
    }
}

/// Squared Euclidean distance between values.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SquaredDistance<S = Rational>(S);

impl<S: Scalar> SquaredDistance<S> {
    pub fn value(&self) -> &S {
        &self.0
    }

    pub fn into_inner(self) -> S {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The distance itself as a truncated decimal string.
    pub fn approx(&self, digits: u32) -> String {
        sqrt_decimal(&self.0, digits)
    }
}

impl<S: Scalar> fmt::Display for SquaredDistance<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn point_distance_sq<S: Scalar>(
    u: &TaggedPoint<S>,
    v: &TaggedPoint<S>,
) -> Result<SquaredDistance<S>> {
    check_dimensions(u.dimension(), v.dimension())?;
    let sum = u
        .value()
        .coords()
        .iter()
        .zip(v.value().coords())
        .map(|(a, b)| {
            let d = a.clone() - b.clone();
            d.clone() * d
        })
        .fold(S::zero(), |acc, x| acc + x);
    Ok(SquaredDistance(sum))
}

fn check_dimensions(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

type CellPair<S> = (Vec<Cell<S>>, Vec<Cell<S>>);

fn nonempty_cells<S: Scalar, A, B>(a: &A, b: &B) -> Result<CellPair<S>>
where
    A: TaggedObject<S> + ?Sized,
    B: TaggedObject<S> + ?Sized,
{
    check_dimensions(a.dimension(), b.dimension())?;
    let (ca, cb) = (a.cells(), b.cells());
    if ca.is_empty() || cb.is_empty() {
        return Err(Error::EmptyOperand);
    }
    Ok((ca, cb))
}

/// Infimum of squared pairwise distance. Attained whenever both operands
/// are closed, which holds for finite sets and segment unions.
pub fn set_distance_sq<S, A, B>(a: &A, b: &B) -> Result<SquaredDistance<S>>
where
    S: Scalar,
    A: TaggedObject<S> + ?Sized,
    B: TaggedObject<S> + ?Sized,
{
    let (ca, cb) = nonempty_cells(a, b)?;
    let min = ca
        .iter()
        .flat_map(|x| cb.iter().map(move |y| x.gap_sq(y)))
        .min()
        .expect("both operands nonempty");
    Ok(SquaredDistance(min))
}

/// Fails with [`Error::Overlap`] when some point belongs to both operands.
pub fn check_disjoint<S, A, B>(a: &A, b: &B) -> Result<()>
where
    S: Scalar,
    A: TaggedObject<S> + ?Sized,
    B: TaggedObject<S> + ?Sized,
{
    let (ca, cb) = nonempty_cells(a, b)?;
    for x in &ca {
        for y in cb.iter().filter(|y| y.series == x.series) {
            if let Some(common) = x.meet(y) {
                let point = TaggedPoint::new(pick_value(&common), x.series.clone());
                return Err(Error::Overlap {
                    point: point.to_string(),
                });
            }
        }
    }
    Ok(())
}

/// Whether two disjoint objects are in contact: some point of `a` and some
/// point of `b` share a value. Returns such a pair when they are.
pub fn in_contact<S, A, B>(a: &A, b: &B) -> Result<Option<(TaggedPoint<S>, TaggedPoint<S>)>>
where
    S: Scalar,
    A: TaggedObject<S> + ?Sized,
    B: TaggedObject<S> + ?Sized,
{
    check_disjoint(a, b)?;
    let (ca, cb) = (a.cells(), b.cells());
    for x in &ca {
        for y in &cb {
            if let Some(common) = x.meet(y) {
                let value = pick_value(&common);
                return Ok(Some((
                    TaggedPoint::new(value.clone(), x.series.clone()),
                    TaggedPoint::new(value, y.series.clone()),
                )));
            }
        }
    }
    Ok(None)
}

/// Whether the value sources of `a` and `b` share a value. Decided by
/// endpoint comparisons alone, without constructing points or distances.
pub fn value_sources_intersect<S, A, B>(a: &A, b: &B) -> Result<bool>
where
    S: Scalar,
    A: TaggedObject<S> + ?Sized,
    B: TaggedObject<S> + ?Sized,
{
    let (ca, cb) = nonempty_cells(a, b)?;
    let overlaps = |x: &Span<S>, y: &Span<S>| {
        let lo_ok = x.lo < y.hi || (x.lo == y.hi && x.lo_closed && y.hi_closed);
        let hi_ok = y.lo < x.hi || (y.lo == x.hi && y.lo_closed && x.hi_closed);
        lo_ok && hi_ok
    };
    Ok(ca.iter().any(|x| {
        cb.iter()
            .any(|y| x.spans.iter().zip(&y.spans).all(|(s, t)| overlaps(s, t)))
    }))
}

/// The three equivalent characterisations of contact, each computed on its
/// own.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContactEquivalence {
    pub contact: bool,
    pub value_intersect: bool,
    pub zero_distance: bool,
    pub consistent: bool,
}

/// Computes contact, value-source intersection and zero distance separately
/// and reports whether they agree. Operands must be disjoint and closed.
pub fn verify_contact_equivalence<S, A, B>(a: &A, b: &B) -> Result<ContactEquivalence>
where
    S: Scalar,
    A: TaggedObject<S> + ?Sized,
    B: TaggedObject<S> + ?Sized,
{
    let (ca, cb) = nonempty_cells(a, b)?;
    if !ca.iter().chain(&cb).all(Cell::is_closed) {
        return Err(Error::NotClosed);
    }
    let contact = match in_contact(a, b)? {
        Some((u, v)) => {
            let r = relate(&u, &v)?;
            r.equal_value && !r.equal
        }
        None => false,
    };
    let value_intersect = value_sources_intersect(a, b)?;
    let zero_distance = set_distance_sq(a, b)?.is_zero();
    Ok(ContactEquivalence {
        contact,
        value_intersect,
        zero_distance,
        consistent: contact == value_intersect && value_intersect == zero_distance,
    })
}

/// For operands with disjoint value sources, whether their distance is
/// strictly positive. Every supported representation is bounded, so the
/// boundedness requirement holds structurally.
pub fn check_positive_distance<S, A, B>(a: &A, b: &B) -> Result<bool>
where
    S: Scalar,
    A: TaggedObject<S> + ?Sized,
    B: TaggedObject<S> + ?Sized,
{
    if value_sources_intersect(a, b)? {
        let (ca, cb) = (a.cells(), b.cells());
        let value = ca
            .iter()
            .flat_map(|x| cb.iter().filter_map(move |y| x.meet(y)))
            .map(|common| pick_value(&common).to_string())
            .next()
            .unwrap_or_default();
        return Err(Error::ValueSourcesIntersect { value });
    }
    Ok(!set_distance_sq(a, b)?.is_zero())
}
