//! Tagged points and finite tagged sets.
//!
//! A tagged point pairs a *value* (its position) with a *series* (the ordered
//! label saying which source it belongs to). Two points are equal only when
//! both parts agree, so equal-value points from different sources survive a
//! union instead of collapsing into one.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;


use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::Rational;

/// Coordinates of a point. Lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Value<S = Rational>(Vec<S>);

impl<S: Scalar> Value<S> {
    pub fn new(coords: Vec<S>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(Self(coords))
    }

    /// A one-dimensional value.
    pub fn scalar(x: S) -> Self {
        Self(vec![x])
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.0
    }

    pub(crate) fn from_coords_unchecked(coords: Vec<S>) -> Self {
        debug_assert!(!coords.is_empty());
        Self(coords)
    }
}

impl<S: Scalar> fmt::Display for Value<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [x] = self.0.as_slice() {
            return write!(f, "{x}");
        }
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Ordered belonging label. Compares by `ordinal`, then by `label`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeriesTag<S = Rational> {
    pub ordinal: S,
    pub label: String,
}

impl<S: Scalar> SeriesTag<S> {
    pub fn new(ordinal: S, label: impl Into<String>) -> Self {
        Self {
            ordinal,
            label: label.into(),
        }
    }

    /// Tag with ordinal zero; order among such tags is by label.
    pub fn named(label: impl Into<String>) -> Self {
        Self::new(S::zero(), label)
    }

    /// The upper copy of a doubled position. Sorts after `self` because the
    /// label only gains a suffix.
    pub fn primed(&self) -> Self {
        Self::new(self.ordinal.clone(), format!("{}'", self.label))
    }
}

impl<S: Scalar> fmt::Display for SeriesTag<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ordinal.is_zero() {
            write!(f, "{}", self.label)
        } else {
            write!(f, "{}@{}", self.label, self.ordinal)
        }
    }
}

/// A value together with its series. Sorted by value first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TaggedPoint<S = Rational> {
    value: Value<S>,
    series: SeriesTag<S>,
}

impl<S: Scalar> TaggedPoint<S> {
    pub fn new(value: Value<S>, series: SeriesTag<S>) -> Self {
        Self { value, series }
    }

    pub fn value(&self) -> &Value<S> {
        &self.value
    }

    pub fn series(&self) -> &SeriesTag<S> {
        &self.series
    }

    pub fn dimension(&self) -> usize {
        self.value.dimension()
    }
}

impl<S: Scalar> fmt::Display for TaggedPoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.value, self.series)
    }
}

pub fn make_point<S: Scalar>(value: Value<S>, series: SeriesTag<S>) -> TaggedPoint<S> {
    TaggedPoint::new(value, series)
}

/// How two tagged points compare.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Relation {
    pub equal_value: bool,
    pub equal_series: bool,
    pub equal: bool,
}

pub fn relate<S: Scalar>(u: &TaggedPoint<S>, v: &TaggedPoint<S>) -> Result<Relation> {
    if u.dimension() != v.dimension() {
        return Err(Error::DimensionMismatch {
            expected: u.dimension(),
            found: v.dimension(),
        });
    }
    let equal_value = u.value == v.value;
    let equal_series = u.series == v.series;
    Ok(Relation {
        equal_value,
        equal_series,
        equal: equal_value && equal_series,
    })
}

/// A finite set of tagged points of one dimension, stored sorted by
/// `(value, series)` without duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteTaggedSet<S = Rational> {
    dimension: usize,
    points: Vec<TaggedPoint<S>>,
}

impl<S: Scalar> FiniteTaggedSet<S> {
    pub fn new(dimension: usize, points: impl IntoIterator<Item = TaggedPoint<S>>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::ZeroDimension);
        }
        let points: BTreeSet<_> = points.into_iter().collect();
        if let Some(bad) = points.iter().find(|p| p.dimension() != dimension) {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                found: bad.dimension(),
            });
        }
        Ok(Self {
            dimension,
            points: points.into_iter().collect(),
        })
    }

    pub fn empty(dimension: usize) -> Result<Self> {
        Self::new(dimension, [])
    }

    pub(crate) fn from_sorted_unchecked(dimension: usize, points: Vec<TaggedPoint<S>>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        Self { dimension, points }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[TaggedPoint<S>] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, TaggedPoint<S>> {
        self.points.iter()
    }

    pub fn contains(&self, point: &TaggedPoint<S>) -> bool {
        self.points.binary_search(point).is_ok()
    }

    /// The distinct values occurring in the set.
    pub fn value_source(&self) -> BTreeSet<&Value<S>> {
        self.points.iter().map(|p| &p.value).collect()
    }

    /// The distinct series occurring in the set.
    pub fn series_source(&self) -> BTreeSet<&SeriesTag<S>> {
        self.points.iter().map(|p| &p.series).collect()
    }

    /// Union that keeps every point's belonging. Only points equal in both
    /// value and series merge.
    pub fn superpose(&self, other: &Self) -> Result<Self> {
        if self.dimension != other.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                found: other.dimension,
            });
        }
        Self::new(
            self.dimension,
            self.points.iter().chain(other.points.iter()).cloned(),
        )
    }

    /// Two distinct points sharing a value, if any exist.
    pub fn disorder_witness(&self) -> Option<(&TaggedPoint<S>, &TaggedPoint<S>)> {
        // Sorted by value first, so equal values are adjacent.
        self.points
            .windows(2)
            .find(|w| w[0].value == w[1].value)
            .map(|w| (&w[0], &w[1]))
    }

    pub fn is_disordered(&self) -> bool {
        self.disorder_witness().is_some()
    }

    /// True iff the pairs `(value, series)` form a one-to-one correspondence
    /// between the value source and the series source.
    pub fn is_ordered_bijective(&self) -> bool {
        let mut by_value: BTreeMap<&Value<S>, &SeriesTag<S>> = BTreeMap::new();
        let mut by_series: BTreeMap<&SeriesTag<S>, &Value<S>> = BTreeMap::new();
        for p in &self.points {
            if by_value.insert(&p.value, &p.series).is_some()
                || by_series.insert(&p.series, &p.value).is_some()
            {
                return false;
            }
        }
        true
    }

    /// Partition into equal-value classes, in value order.
    pub fn value_classes(&self) -> Vec<Self> {
        self.classes_by(|p| p.value.clone())
    }

    /// Partition into equal-series classes, in series order.
    pub fn series_classes(&self) -> Vec<Self> {
        self.classes_by(|p| p.series.clone())
    }

    fn classes_by<K: Ord>(&self, key: impl Fn(&TaggedPoint<S>) -> K) -> Vec<Self> {
        let mut groups: BTreeMap<K, Vec<TaggedPoint<S>>> = BTreeMap::new();
        for p in &self.points {
            groups.entry(key(p)).or_default().push(p.clone());
        }
        groups
            .into_values()
            .map(|points| Self::from_sorted_unchecked(self.dimension, points))
            .collect()
    }
}

impl<'a, S: Scalar> IntoIterator for &'a FiniteTaggedSet<S> {
    type Item = &'a TaggedPoint<S>;
    type IntoIter = std::slice::Iter<'a, TaggedPoint<S>>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

impl<S: Scalar> fmt::Display for FiniteTaggedSet<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}
