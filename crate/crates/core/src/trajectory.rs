//! Motion trajectories as tagged point sets.
//!
//! A [`Phase`] maps an ordered series parameter to a 1-D position by a
//! piecewise-linear path with rational breakpoints. The point of phase
//! `tag` at parameter `t` has value `path(t)` and series `(t, tag)`, so the
//! end of one phase and the start of the next are two points with equal
//! series parameter but different tags.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tagged::{FiniteTaggedSet, SeriesTag, TaggedPoint, Value};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Breakpoint<S = Rational> {
    pub param: S,
    pub position: S,
}

impl<S: Scalar> Breakpoint<S> {
    pub fn new(param: S, position: S) -> Self {
        Self { param, position }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Phase<S = Rational> {
    tag: String,
    breakpoints: Vec<Breakpoint<S>>,
}

impl<S: Scalar> Phase<S> {
    pub fn new(tag: impl Into<String>, breakpoints: Vec<Breakpoint<S>>) -> Result<Self> {
        let tag = tag.into();
        if breakpoints.len() < 2 {
            return Err(Error::ShortPhase { tag });
        }
        if breakpoints.windows(2).any(|w| w[0].param >= w[1].param) {
            return Err(Error::NonIncreasingParameters { tag });
        }
        Ok(Self { tag, breakpoints })
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn breakpoints(&self) -> &[Breakpoint<S>] {
        &self.breakpoints
    }

    pub fn param_lo(&self) -> &S {
        &self.breakpoints[0].param
    }

    pub fn param_hi(&self) -> &S {
        &self.breakpoints[self.breakpoints.len() - 1].param
    }

    pub fn start_position(&self) -> &S {
        &self.breakpoints[0].position
    }

    pub fn end_position(&self) -> &S {
        &self.breakpoints[self.breakpoints.len() - 1].position
    }

    pub fn series_at(&self, param: S) -> SeriesTag<S> {
        SeriesTag::new(param, self.tag.clone())
    }

    pub fn piece_count(&self) -> usize {
        self.breakpoints.len() - 1
    }

    fn pieces(&self) -> impl Iterator<Item = (&Breakpoint<S>, &Breakpoint<S>)> {
        self.breakpoints.windows(2).map(|w| (&w[0], &w[1]))
    }

    /// Position at `param`, or `None` outside the phase's parameter range.
    pub fn position_at(&self, param: &S) -> Option<S> {
        if param < self.param_lo() || param > self.param_hi() {
            return None;
        }
        self.pieces()
            .find(|(a, b)| *param <= b.param && *param >= a.param)
            .map(|(a, b)| interpolate(a, b, param))
    }

    pub fn point_at(&self, param: &S) -> Option<TaggedPoint<S>> {
        let position = self.position_at(param)?;
        Some(TaggedPoint::new(
            Value::scalar(position),
            self.series_at(param.clone()),
        ))
    }

    pub fn start_point(&self) -> TaggedPoint<S> {
        self.point_at(&self.param_lo().clone())
            .expect("start lies in range")
    }

    pub fn end_point(&self) -> TaggedPoint<S> {
        self.point_at(&self.param_hi().clone())
            .expect("end lies in range")
    }

    /// Parameters at which the path reaches `position`, ascending. A piece
    /// that stays at `position` contributes its two endpoints.
    pub fn params_at_position(&self, position: &S) -> BTreeSet<S> {
        let mut params = BTreeSet::new();
        for (a, b) in self.pieces() {
            if a.position == b.position {
                if a.position == *position {
                    params.insert(a.param.clone());
                    params.insert(b.param.clone());
                }
                continue;
            }
            let (lo, hi) = if a.position < b.position {
                (&a.position, &b.position)
            } else {
                (&b.position, &a.position)
            };
            if position >= lo && position <= hi {
                let t = a.param.clone()
                    + (position.clone() - a.position.clone()) * (b.param.clone() - a.param.clone())
                        / (b.position.clone() - a.position.clone());
                params.insert(t);
            }
        }
        params
    }

    /// The part of the phase with parameters in `[lo, hi]`.
    pub fn restrict(&self, lo: &S, hi: &S) -> Result<Self> {
        let out_of_range = |param: &S| Error::ParameterOutOfRange {
            param: param.to_string(),
            lo: self.param_lo().to_string(),
            hi: self.param_hi().to_string(),
        };
        let start = self.position_at(lo).ok_or_else(|| out_of_range(lo))?;
        let end = self.position_at(hi).ok_or_else(|| out_of_range(hi))?;
        let mut breakpoints = vec![Breakpoint::new(lo.clone(), start)];
        breakpoints.extend(
            self.breakpoints
                .iter()
                .filter(|b| b.param > *lo && b.param < *hi)
                .cloned(),
        );
        breakpoints.push(Breakpoint::new(hi.clone(), end));
        Self::new(self.tag.clone(), breakpoints)
    }
}

fn interpolate<S: Scalar>(a: &Breakpoint<S>, b: &Breakpoint<S>, param: &S) -> S {
    if *param == a.param {
        return a.position.clone();
    }
    if *param == b.param {
        return b.position.clone();
    }
    a.position.clone()
        + (b.position.clone() - a.position.clone()) * (param.clone() - a.param.clone())
            / (b.param.clone() - a.param.clone())
}

/// Two phases meet when one's end and the other's start share a parameter.
/// The junction is in contact when they also share a position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Junction<S = Rational> {
    /// Index of the phase ending here.
    pub index: usize,
    pub param: S,
    pub from_tag: String,
    pub to_tag: String,
    pub end_position: S,
    pub start_position: S,
    pub in_contact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactReport<S = Rational> {
    pub junctions: Vec<Junction<S>>,
}

impl<S: Scalar> ContactReport<S> {
    /// Every junction in contact (vacuously true without junctions).
    pub fn in_contact_everywhere(&self) -> bool {
        self.junctions.iter().all(|j| j.in_contact)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Trajectory<S = Rational> {
    phases: Vec<Phase<S>>,
}

/// Which phases own the highest position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApexReport<S = Rational> {
    pub apex: S,
    pub fiber: FiniteTaggedSet<S>,
    /// Tags of the phases attaining the apex, in trajectory order.
    pub phases: Vec<String>,
}

/// Division of a trajectory at a series parameter into a closed "before"
/// and a closed "after" part, each owning a point at the parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesCut<S = Rational> {
    pub param: S,
    pub before: Trajectory<S>,
    pub after: Trajectory<S>,
    /// Last point of `before`.
    pub s: TaggedPoint<S>,
    /// First point of `after`.
    pub t: TaggedPoint<S>,
}

impl<S: Scalar> SeriesCut<S> {
    /// Whether the motion keeps its position across the cut.
    pub fn position_continuous(&self) -> bool {
        self.s.value() == self.t.value()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MotionEntry<S = Rational> {
    /// Position moves along one linear piece while the series advances.
    ValueChange {
        tag: String,
        from_param: S,
        to_param: S,
        from: S,
        to: S,
    },
    /// The series switches phase at a fixed parameter.
    SeriesChange {
        param: S,
        from_tag: String,
        to_tag: String,
        from_position: S,
        to_position: S,
    },
}

impl<S: Scalar> fmt::Display for MotionEntry<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MotionEntry::ValueChange { tag, from, to, .. } if from == to => {
                write!(f, "no value change under {tag} (position {from})")
            }
            MotionEntry::ValueChange { tag, from, to, .. } => {
                write!(f, "value {from} → {to} under {tag}")
            }
            MotionEntry::SeriesChange {
                from_tag,
                to_tag,
                from_position,
                to_position,
                ..
            } if from_position == to_position => {
                write!(f, "series {from_tag} → {to_tag} at {from_position}")
            }
            MotionEntry::SeriesChange {
                from_tag,
                to_tag,
                from_position,
                to_position,
                ..
            } => write!(
                f,
                "series {from_tag} → {to_tag} with jump {from_position} → {to_position}"
            ),
        }
    }
}

impl<S: Scalar> Trajectory<S> {
    /// Phases must abut: each phase starts at the parameter where the
    /// previous one ends. Positions may jump; see [`Trajectory::contact_report`].
    pub fn new(phases: Vec<Phase<S>>) -> Result<Self> {
        if phases.is_empty() {
            return Err(Error::EmptyTrajectory);
        }
        for w in phases.windows(2) {
            if w[0].param_hi() != w[1].param_lo() {
                return Err(Error::NotAbutting {
                    prev: w[0].tag.clone(),
                    next: w[1].tag.clone(),
                    end: w[0].param_hi().to_string(),
                    start: w[1].param_lo().to_string(),
                });
            }
        }
        Ok(Self { phases })
    }

    pub fn phases(&self) -> &[Phase<S>] {
        &self.phases
    }

    pub fn param_lo(&self) -> &S {
        self.phases[0].param_lo()
    }

    pub fn param_hi(&self) -> &S {
        self.phases[self.phases.len() - 1].param_hi()
    }

    pub fn junctions(&self) -> Vec<Junction<S>> {
        self.phases
            .windows(2)
            .enumerate()
            .map(|(index, w)| Junction {
                index,
                param: w[0].param_hi().clone(),
                from_tag: w[0].tag.clone(),
                to_tag: w[1].tag.clone(),
                end_position: w[0].end_position().clone(),
                start_position: w[1].start_position().clone(),
                in_contact: w[0].end_position() == w[1].start_position(),
            })
            .collect()
    }

    pub fn contact_report(&self) -> ContactReport<S> {
        ContactReport {
            junctions: self.junctions(),
        }
    }

    /// All tagged points of the trajectory at position `x`.
    pub fn value_fiber(&self, x: &S) -> FiniteTaggedSet<S> {
        let points = self.phases.iter().flat_map(|phase| {
            phase.params_at_position(x).into_iter().map(move |t| {
                TaggedPoint::new(Value::scalar(x.clone()), phase.series_at(t))
            })
        });
        FiniteTaggedSet::new(1, points).expect("one-dimensional points")
    }

    /// Highest position reached and every phase owning it.
    pub fn apex_query(&self) -> ApexReport<S> {
        // a piecewise-linear path peaks at a breakpoint
        let apex = self
            .phases
            .iter()
            .flat_map(|p| p.breakpoints.iter().map(|b| &b.position))
            .max()
            .expect("phases have breakpoints")
            .clone();
        let fiber = self.value_fiber(&apex);
        let owners: BTreeSet<&str> = fiber.iter().map(|p| p.series().label.as_str()).collect();
        let mut phases: Vec<String> = Vec::new();
        for p in &self.phases {
            if owners.contains(p.tag()) && !phases.iter().any(|t| t == p.tag()) {
                phases.push(p.tag.clone());
            }
        }
        ApexReport {
            apex,
            fiber,
            phases,
        }
    }

    /// Splits at series parameter `y`, strictly inside the parameter range.
    pub fn series_cut(&self, y: &S) -> Result<SeriesCut<S>> {
        if y <= self.param_lo() || y >= self.param_hi() {
            return Err(Error::ParameterOutOfRange {
                param: y.to_string(),
                lo: self.param_lo().to_string(),
                hi: self.param_hi().to_string(),
            });
        }
        if let Some(k) = self.phases.iter().position(|p| p.param_hi() == y) {
            // a junction, since y is below the final parameter
            let before = Trajectory::new(self.phases[..=k].to_vec())?;
            let after = Trajectory::new(self.phases[k + 1..].to_vec())?;
            return Ok(SeriesCut {
                param: y.clone(),
                s: self.phases[k].end_point(),
                t: self.phases[k + 1].start_point(),
                before,
                after,
            });
        }
        let k = self
            .phases
            .iter()
            .position(|p| p.param_lo() < y && y < p.param_hi())
            .expect("abutting phases cover the range");
        let phase = &self.phases[k];
        let head = phase.restrict(phase.param_lo(), y)?;
        let tail = phase.restrict(y, phase.param_hi())?;
        let mut before = self.phases[..k].to_vec();
        before.push(head);
        let mut after = vec![tail];
        after.extend_from_slice(&self.phases[k + 1..]);
        let point = phase.point_at(y).expect("y inside phase");
        Ok(SeriesCut {
            param: y.clone(),
            before: Trajectory::new(before)?,
            after: Trajectory::new(after)?,
            s: point.clone(),
            t: point,
        })
    }

    /// Value changes along each linear piece interleaved with a series
    /// change at each junction.
    pub fn describe_motion(&self) -> Vec<MotionEntry<S>> {
        let mut entries = Vec::new();
        for (i, phase) in self.phases.iter().enumerate() {
            if i > 0 {
                let prev = &self.phases[i - 1];
                entries.push(MotionEntry::SeriesChange {
                    param: phase.param_lo().clone(),
                    from_tag: prev.tag.clone(),
                    to_tag: phase.tag.clone(),
                    from_position: prev.end_position().clone(),
                    to_position: phase.start_position().clone(),
                });
            }
            for (a, b) in phase.pieces() {
                entries.push(MotionEntry::ValueChange {
                    tag: phase.tag.clone(),
                    from_param: a.param.clone(),
                    to_param: b.param.clone(),
                    from: a.position.clone(),
                    to: b.position.clone(),
                });
            }
        }
        entries
    }
}

/// Checks phase ordering and reports contact at every junction.
pub fn build_trajectory<S: Scalar>(phases: Vec<Phase<S>>) -> Result<(Trajectory<S>, ContactReport<S>)> {
    let trajectory = Trajectory::new(phases)?;
    let report = trajectory.contact_report();
    Ok((trajectory, report))
}

/// A pair of equal-value points, one from each phase, at the highest
/// position both phases reach; `None` when their position ranges are
/// disjoint.
pub fn phase_contact<S: Scalar>(a: &Phase<S>, b: &Phase<S>) -> Option<(TaggedPoint<S>, TaggedPoint<S>)> {
    let range = |x: &Breakpoint<S>, y: &Breakpoint<S>| {
        if x.position <= y.position {
            (x.position.clone(), y.position.clone())
        } else {
            (y.position.clone(), x.position.clone())
        }
    };
    let mut best: Option<S> = None;
    for (a0, a1) in a.pieces() {
        let (alo, ahi) = range(a0, a1);
        for (b0, b1) in b.pieces() {
            let (blo, bhi) = range(b0, b1);
            let top = ahi.clone().min(bhi);
            if top >= alo.clone().max(blo) && best.as_ref().is_none_or(|m| top > *m) {
                best = Some(top);
            }
        }
    }
    let value = best?;
    let ta = a.params_at_position(&value).into_iter().next_back()?;
    let tb = b.params_at_position(&value).into_iter().next()?;
    Some((
        TaggedPoint::new(Value::scalar(value.clone()), a.series_at(ta)),
        TaggedPoint::new(Value::scalar(value), b.series_at(tb)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn phase(tag: &str, pts: &[(i64, i64)]) -> Phase {
        Phase::new(
            tag,
            pts.iter()
                .map(|&(t, x)| Breakpoint::new(q(t, 1), q(x, 1)))
                .collect(),
        )
        .unwrap()
    }

    fn ball() -> Trajectory {
        Trajectory::new(vec![
            phase("up", &[(0, 0), (1, 10)]),
            phase("down", &[(1, 10), (2, 0)]),
        ])
        .unwrap()
    }

    fn at(x: BigRational, t: BigRational, tag: &str) -> TaggedPoint {
        TaggedPoint::new(Value::scalar(x), SeriesTag::new(t, tag))
    }

    #[test]
    fn phase_validation() {
        assert!(matches!(
            Phase::new("x", vec![Breakpoint::new(q(0, 1), q(0, 1))]),
            Err(Error::ShortPhase { .. })
        ));
        assert!(matches!(
            Phase::new(
                "x",
                vec![
                    Breakpoint::new(q(1, 1), q(0, 1)),
                    Breakpoint::new(q(1, 1), q(2, 1))
                ]
            ),
            Err(Error::NonIncreasingParameters { .. })
        ));
        assert_eq!(
            Trajectory::<BigRational>::new(vec![]),
            Err(Error::EmptyTrajectory)
        );
        assert!(matches!(
            Trajectory::new(vec![phase("a", &[(0, 0), (1, 1)]), phase("b", &[(2, 1), (3, 0)])]),
            Err(Error::NotAbutting { .. })
        ));
    }

    #[test]
    fn ball_junction_in_contact() {
        let (_, report) = build_trajectory(ball().phases().to_vec()).unwrap();
        assert_eq!(report.junctions.len(), 1);
        let j = &report.junctions[0];
        assert!(j.in_contact);
        assert_eq!(j.end_position, q(10, 1));
        assert!(report.in_contact_everywhere());

        let (_, report) = build_trajectory(vec![phase("up", &[(0, 0), (1, 10)])]).unwrap();
        assert!(report.junctions.is_empty() && report.in_contact_everywhere());

        let (_, report) = build_trajectory(vec![
            phase("up", &[(0, 0), (1, 10)]),
            phase("down", &[(1, 9), (2, 0)]),
        ])
        .unwrap();
        assert!(!report.junctions[0].in_contact);
    }

    #[test]
    fn fibers() {
        let t = ball();
        let apex = t.value_fiber(&q(10, 1));
        assert_eq!(
            apex.points(),
            &[at(q(10, 1), q(1, 1), "down"), at(q(10, 1), q(1, 1), "up")]
        );
        let mid = t.value_fiber(&q(5, 1));
        assert_eq!(
            mid.points(),
            &[at(q(5, 1), q(1, 2), "up"), at(q(5, 1), q(3, 2), "down")]
        );
        assert!(t.value_fiber(&q(11, 1)).is_empty());
    }

    #[test]
    fn apex_of_ball_and_ascent() {
        let r = ball().apex_query();
        assert_eq!(r.apex, q(10, 1));
        assert_eq!(r.phases, vec!["up", "down"]);
        assert_eq!(r.fiber.len(), 2);

        let ascent = Trajectory::new(vec![phase("up", &[(0, 0), (1, 3), (2, 7)])]).unwrap();
        let r = ascent.apex_query();
        assert_eq!(r.phases, vec!["up"]);
        assert_eq!(r.fiber.len(), 1);
    }

    #[test]
    fn plateau_apex_reports_piece_endpoints() {
        let t = Trajectory::new(vec![
            phase("up", &[(0, 0), (1, 10)]),
            phase("plateau", &[(1, 10), (2, 10)]),
            phase("down", &[(2, 10), (3, 0)]),
        ])
        .unwrap();
        let r = t.apex_query();
        assert_eq!(r.phases, vec!["up", "plateau", "down"]);
        assert_eq!(r.fiber.len(), 4);
    }

    #[test]
    fn series_cuts() {
        let t = ball();
        let c = t.series_cut(&q(1, 1)).unwrap();
        assert_eq!(c.s, at(q(10, 1), q(1, 1), "up"));
        assert_eq!(c.t, at(q(10, 1), q(1, 1), "down"));
        assert!(c.position_continuous());
        assert_eq!(c.before.phases().len(), 1);
        assert_eq!(c.after.phases().len(), 1);

        let c = t.series_cut(&q(1, 2)).unwrap();
        assert_eq!(c.s.value(), c.t.value());
        assert_eq!(c.s.value().coords(), &[q(5, 1)]);
        assert_eq!(c.before.param_hi(), &q(1, 2));
        assert_eq!(c.after.param_lo(), &q(1, 2));
        assert_eq!(c.after.phases().len(), 2);

        let jump = Trajectory::new(vec![
            phase("up", &[(0, 0), (1, 10)]),
            phase("down", &[(1, 9), (2, 0)]),
        ])
        .unwrap();
        let c = jump.series_cut(&q(1, 1)).unwrap();
        assert_eq!(c.s.value().coords(), &[q(10, 1)]);
        assert_eq!(c.t.value().coords(), &[q(9, 1)]);
        assert!(!c.position_continuous());

        for y in [q(0, 1), q(2, 1), q(5, 1)] {
            assert!(matches!(t.series_cut(&y), Err(Error::ParameterOutOfRange { .. })));
        }
    }

    #[test]
    fn motion_description() {
        let entries = ball().describe_motion();
        let text: Vec<String> = entries.iter().map(ToString::to_string).collect();
        assert_eq!(
            text,
            vec![
                "value 0 → 10 under up",
                "series up → down at 10",
                "value 10 → 0 under down"
            ]
        );

        let still = Trajectory::new(vec![phase("rest", &[(0, 5), (1, 5)])]).unwrap();
        let text: Vec<String> = still.describe_motion().iter().map(ToString::to_string).collect();
        assert_eq!(text, vec!["no value change under rest (position 5)"]);
    }

    #[test]
    fn phase_contact_picks_the_apex() {
        let t = ball();
        let (a, b) = phase_contact(&t.phases()[0], &t.phases()[1]).unwrap();
        assert_eq!(a, at(q(10, 1), q(1, 1), "up"));
        assert_eq!(b, at(q(10, 1), q(1, 1), "down"));

        let low = phase("low", &[(0, 0), (1, 1)]);
        let high = phase("high", &[(1, 5), (2, 6)]);
        assert!(phase_contact(&low, &high).is_none());
    }

    #[test]
    fn restrict_interpolates() {
        let p = phase("up", &[(0, 0), (2, 4), (4, 4)]);
        let r = p.restrict(&q(1, 1), &q(3, 1)).unwrap();
        assert_eq!(
            r.breakpoints(),
            &[
                Breakpoint::new(q(1, 1), q(2, 1)),
                Breakpoint::new(q(2, 1), q(4, 1)),
                Breakpoint::new(q(3, 1), q(4, 1))
            ]
        );
        assert!(p.restrict(&q(-1, 1), &q(1, 1)).is_err());
    }
}
