#![allow(dead_code)]

use disordered::{
    Breakpoint, FiniteTaggedSet, LineSet, Mode, Path, Phase, Point, PointSet, Rational, SeriesTag,
    TaggedSegment, Trajectory, Value,
};
use proptest::prelude::*;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Rationals with denominators up to 16.
pub fn rational() -> impl Strategy<Value = Rational> {
    (-32i64..=32, 1i64..=16).prop_map(|(n, d)| q(n, d))
}

/// Values on a coarse grid so that collisions are common.
pub fn grid_rational() -> impl Strategy<Value = Rational> {
    (-3i64..=3, 1i64..=2).prop_map(|(n, d)| q(n, d))
}

pub fn tag() -> impl Strategy<Value = SeriesTag> {
    (0i64..=2, prop::sample::select(vec!["A", "B", "C"]))
        .prop_map(|(o, l)| SeriesTag::new(q(o, 1), l))
}

pub fn point(dim: usize) -> impl Strategy<Value = Point> {
    (prop::collection::vec(grid_rational(), dim), tag())
        .prop_map(|(c, t)| Point::new(Value::new(c).unwrap(), t))
}

pub fn point_set(dim: usize, max: usize) -> impl Strategy<Value = PointSet> {
    prop::collection::vec(point(dim), 1..=max)
        .prop_map(move |pts| FiniteTaggedSet::new(dim, pts).unwrap())
}

/// A point set whose every series label starts with `prefix`, so two sets
/// built with different prefixes are disjoint as objects.
pub fn labelled_set(dim: usize, max: usize, prefix: &'static str) -> impl Strategy<Value = PointSet> {
    point_set(dim, max).prop_map(move |s| {
        let pts = s.iter().map(|p| {
            Point::new(
                p.value().clone(),
                SeriesTag::new(p.series().ordinal.clone(), format!("{prefix}{}", p.series().label)),
            )
        });
        FiniteTaggedSet::new(dim, pts).unwrap()
    })
}

fn mode(doubled: bool) -> Mode {
    if doubled {
        Mode::Doubled
    } else {
        Mode::Single
    }
}

/// Sorted distinct breakpoints `x0 < x1 < ... < xk` starting at `origin`.
fn breakpoints(origin: Rational, steps: Vec<Rational>) -> Vec<Rational> {
    let mut xs = vec![origin];
    for s in steps {
        let last = xs.last().unwrap().clone();
        xs.push(last + s);
    }
    xs
}

fn step() -> impl Strategy<Value = Rational> {
    (1i64..=16, 1i64..=8).prop_map(|(n, d)| q(n, d))
}

/// Connected segment union: consecutive segments touch, plus optional
/// overlapping segments with fresh tags. `doubled` forces every segment's
/// mode when set.
pub fn window(prefix: &'static str, doubled: Option<bool>) -> impl Strategy<Value = LineSet> {
    (
        rational(),
        prop::collection::vec((step(), any::<bool>()), 1..=4),
        prop::collection::vec((any::<prop::sample::Index>(), any::<prop::sample::Index>(), any::<bool>()), 0..=2),
    )
        .prop_map(move |(origin, steps, extras)| {
            let xs = breakpoints(origin, steps.iter().map(|s| s.0.clone()).collect());
            let mut segs = Vec::new();
            for (i, w) in xs.windows(2).enumerate() {
                let m = mode(doubled.unwrap_or(steps[i].1));
                segs.push(
                    TaggedSegment::new(
                        w[0].clone(),
                        w[1].clone(),
                        SeriesTag::named(format!("{prefix}{i}")),
                        m,
                    )
                    .unwrap(),
                );
            }
            for (j, (a, b, d)) in extras.into_iter().enumerate() {
                let (i, k) = (a.index(xs.len()), b.index(xs.len()));
                let (lo, hi) = (xs[i.min(k)].clone(), xs[i.max(k)].clone());
                let m = mode(doubled.unwrap_or(d));
                segs.push(
                    TaggedSegment::new(lo, hi, SeriesTag::named(format!("{prefix}x{j}")), m).unwrap(),
                );
            }
            LineSet::new(segs).unwrap()
        })
}

/// Two connected windows separated by a positive gap.
pub fn gapped(doubled: Option<bool>) -> impl Strategy<Value = (LineSet, Rational, Rational)> {
    (window("L", doubled), window("R", doubled), step()).prop_map(|(left, right, gap)| {
        let lhull = left.hull().unwrap();
        let rhull = right.hull().unwrap();
        let shift = lhull.hi.clone() + gap - rhull.lo.clone();
        let moved = right.segments().iter().map(|s| {
            TaggedSegment::new(
                s.lo().clone() + shift.clone(),
                s.hi().clone() + shift.clone(),
                s.series().clone(),
                s.mode(),
            )
            .unwrap()
        });
        let all: Vec<_> = left.segments().iter().cloned().chain(moved).collect();
        let gap_lo = lhull.hi;
        let gap_hi = rhull.lo + shift;
        (LineSet::new(all).unwrap(), gap_lo, gap_hi)
    })
}

/// A position strictly inside `[lo, hi]`, chosen by `frac` in (0, 1).
pub fn interior(lo: &Rational, hi: &Rational, frac: &Rational) -> Rational {
    lo.clone() + (hi.clone() - lo.clone()) * frac.clone()
}

pub fn fraction() -> impl Strategy<Value = Rational> {
    (1i64..=15, 16i64..=16).prop_map(|(n, d)| q(n, d))
}

/// A fraction that sometimes lands on a segment endpoint of a window.
pub fn position_in(z: &LineSet, pick: prop::sample::Index, frac: &Rational) -> Rational {
    let hull = z.hull().unwrap();
    let mut endpoints: Vec<Rational> = z
        .segments()
        .iter()
        .flat_map(|s| [s.lo().clone(), s.hi().clone()])
        .filter(|x| *x > hull.lo && *x < hull.hi)
        .collect();
    endpoints.sort();
    endpoints.dedup();
    let choice = pick.index(endpoints.len() + 1);
    if choice < endpoints.len() {
        endpoints[choice].clone()
    } else {
        interior(&hull.lo, &hull.hi, frac)
    }
}

/// A trajectory with integer breakpoints and no constant pieces. Each piece
/// spans 1 to 3 parameter units and moves 1 to 5 position units, so every
/// crossing of an integer position has a parameter on the 1/60 grid.
/// With `jumps`, a phase may start away from where the previous one ended.
pub fn path(jumps: bool) -> impl Strategy<Value = Path> {
    let piece = (1i64..=3, 1i64..=5, any::<bool>());
    let phase = prop::collection::vec(piece, 1..=3);
    (
        -5i64..=5,
        prop::collection::vec((phase, if jumps { -2i64..=2 } else { 0i64..=0 }), 1..=3),
    )
        .prop_map(|(start, phases)| {
            let (mut t, mut x) = (0i64, start);
            let mut out = Vec::new();
            for (i, (pieces, jump)) in phases.into_iter().enumerate() {
                if i > 0 {
                    x += jump;
                }
                let mut bps = vec![Breakpoint::new(q(t, 1), q(x, 1))];
                for (dt, dx, up) in pieces {
                    t += dt;
                    x += if up { dx } else { -dx };
                    bps.push(Breakpoint::new(q(t, 1), q(x, 1)));
                }
                out.push(Phase::new(format!("p{i}"), bps).unwrap());
            }
            Trajectory::new(out).unwrap()
        })
}
