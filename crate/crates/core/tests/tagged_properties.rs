mod common;

use common::*;
use disordered::{relate, FiniteTaggedSet, Point, PointSet, Rational64, SeriesTag, TaggedPoint, Value};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All-pairs scan for two distinct equal-value points.
fn brute_disordered(s: &PointSet) -> bool {
    let pts = s.points();
    (0..pts.len()).any(|i| {
        (0..pts.len()).any(|j| {
            let r = relate(&pts[i], &pts[j]).unwrap();
            i != j && r.equal_value && !r.equal
        })
    })
}

/// Union-find over pairwise `relate` equal-value links.
fn union_find_classes(s: &PointSet) -> Vec<Vec<Point>> {
    let pts = s.points();
    let mut parent: Vec<usize> = (0..pts.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for i in 0..pts.len() {
        for j in 0..pts.len() {
            if relate(&pts[i], &pts[j]).unwrap().equal_value {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<Point>> = Default::default();
    for (i, p) in pts.iter().enumerate() {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(p.clone());
    }
    let mut out: Vec<Vec<Point>> = groups.into_values().collect();
    out.sort();
    out
}

#[test]
fn disorder_matches_brute_force_on_grid() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        // 50 points on a 5-value grid, every tag distinct
        let pts = (0..50).map(|i| {
            Point::new(
                Value::scalar(q(rng.gen_range(0..5), 1)),
                SeriesTag::named(format!("t{i}")),
            )
        });
        let s = FiniteTaggedSet::new(1, pts).unwrap();
        assert_eq!(s.is_disordered(), brute_disordered(&s));
        assert!(s.is_disordered());
    }
    for _ in 0..200 {
        let n = rng.gen_range(1..=5);
        let mut values: Vec<i64> = (0..5).collect();
        for i in (1..values.len()).rev() {
            values.swap(i, rng.gen_range(0..=i));
        }
        let pts = values[..n]
            .iter()
            .enumerate()
            .map(|(i, &v)| Point::new(Value::scalar(q(v, 1)), SeriesTag::named(format!("t{i}"))));
        let s = FiniteTaggedSet::new(1, pts).unwrap();
        assert!(!s.is_disordered());
        assert_eq!(s.is_disordered(), brute_disordered(&s));
    }
}

#[test]
fn value_classes_match_union_find() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let pts = (0..30).map(|_| {
            Point::new(
                Value::new(vec![q(rng.gen_range(0..3), 1), q(rng.gen_range(0..3), 2)]).unwrap(),
                SeriesTag::named(["A", "B", "C", "D"][rng.gen_range(0..4)]),
            )
        });
        let s = FiniteTaggedSet::new(2, pts).unwrap();
        let mut ours: Vec<Vec<Point>> = s.value_classes().iter().map(|c| c.points().to_vec()).collect();
        ours.sort();
        assert_eq!(ours, union_find_classes(&s));
    }
}

#[test]
fn ordered_bijection_oracle() {
    // explicit check over the pair relation: a function both ways
    fn brute(s: &PointSet) -> bool {
        let pts = s.points();
        pts.iter().all(|u| {
            pts.iter().all(|v| {
                let r = relate(u, v).unwrap();
                r.equal_value == r.equal_series
            })
        })
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..500 {
        let n = rng.gen_range(1..6);
        let pts = (0..n).map(|_| {
            Point::new(
                Value::scalar(q(rng.gen_range(0..3), 1)),
                SeriesTag::named(["A", "B", "C"][rng.gen_range(0..3)]),
            )
        });
        let s = FiniteTaggedSet::new(1, pts).unwrap();
        assert_eq!(s.is_ordered_bijective(), brute(&s), "{s}");
    }
}

#[test]
fn works_over_fixed_width_rationals() {
    let p = |x: i64, t: &str| {
        TaggedPoint::new(Value::scalar(Rational64::from_integer(x)), SeriesTag::named(t))
    };
    let a = FiniteTaggedSet::new(1, [p(1, "A"), p(2, "A"), p(3, "A")]).unwrap();
    let b = FiniteTaggedSet::new(1, [p(2, "B"), p(3, "B"), p(4, "B")]).unwrap();
    let ab = a.superpose(&b).unwrap();
    assert_eq!(ab.len(), 6);
    assert!(ab.is_disordered());
}

proptest! {
    #[test]
    fn equal_value_and_series_are_equivalences(u in point(2), v in point(2), w in point(2)) {
        for rel in [|r: disordered::Relation| r.equal_value, |r: disordered::Relation| r.equal_series] {
            let uv = rel(relate(&u, &v).unwrap());
            let vu = rel(relate(&v, &u).unwrap());
            let vw = rel(relate(&v, &w).unwrap());
            let uw = rel(relate(&u, &w).unwrap());
            prop_assert!(rel(relate(&u, &u).unwrap()));
            prop_assert_eq!(uv, vu);
            prop_assert!(!(uv && vw) || uw);
        }
    }

    #[test]
    fn disorder_witness_is_unequal_equal_value(s in point_set(1, 12)) {
        if let Some((u, v)) = s.disorder_witness() {
            let r = relate(u, v).unwrap();
            prop_assert!(r.equal_value && !r.equal);
        }
        prop_assert_eq!(s.is_disordered(), brute_disordered(&s));
    }

    #[test]
    fn superpose_cardinality(a in labelled_set(2, 10, "a"), b in labelled_set(2, 10, "b")) {
        prop_assert_eq!(a.superpose(&b).unwrap().len(), a.len() + b.len());
    }

    #[test]
    fn superpose_counts_shared_points_once(a in point_set(1, 10), b in point_set(1, 10)) {
        let shared = a.iter().filter(|p| b.contains(p)).count();
        prop_assert_eq!(a.superpose(&b).unwrap().len(), a.len() + b.len() - shared);
    }

    #[test]
    fn classes_partition_the_set(s in point_set(2, 15)) {
        for classes in [s.value_classes(), s.series_classes()] {
            let total: usize = classes.iter().map(|c| c.len()).sum();
            prop_assert_eq!(total, s.len());
            prop_assert!(classes.iter().all(|c| !c.is_empty()));
            let mut merged = FiniteTaggedSet::empty(2).unwrap();
            for c in &classes {
                merged = merged.superpose(c).unwrap();
            }
            prop_assert_eq!(merged, s.clone());
        }
    }

    #[test]
    fn bijective_sets_are_not_disordered(s in point_set(1, 8)) {
        if s.is_ordered_bijective() {
            prop_assert!(!s.is_disordered());
        }
    }
}
