//! The four subcommands. Each returns a [`Report`] on success; a
//! [`CliError`] means the command could not run at all.

use std::path::Path as FsPath;

use disordered::{
    cantor_continuous, cut, in_contact, parse_rational, poincare_continuous, set_distance_sq,
    verify_contact_equivalence, verify_continuity_equivalence, CutMode, Error, LineSet, Path,
    PointSet, Rational, TaggedObject, TaggedPoint,
};

use crate::document::{parse, Body, Document};
use crate::error::CliError;
use crate::report::{Report, Status};

/// Combining low line, used to mark a value: `a̲` is the value of point `a`.
const UNDERLINE: char = '\u{332}';

pub fn load(path: &FsPath) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text)
}

fn rational_arg(flag: &str, text: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|_| CliError::Usage(format!("{flag}: {text:?} is not a rational \"num/den\"")))
}

fn wrong_kind(command: &str, doc: &Document, wanted: &str) -> CliError {
    CliError::Usage(format!(
        "{command} needs a {wanted} document, {:?} is a {}",
        doc.name,
        doc.kind()
    ))
}

fn valued(name: char) -> String {
    format!("{name}{UNDERLINE}")
}

// check

pub fn check(doc: &Document) -> Result<Report, CliError> {
    let mut report = Report::new("check");
    report.summary(format!("{} ({})", doc.name, doc.kind()));
    match &doc.body {
        Body::FiniteSet(set) => check_finite(set, &mut report),
        Body::LineSet(z) => check_line(z, &mut report)?,
        Body::Trajectory(path) => check_trajectory(path, &mut report),
    }
    Ok(report)
}

fn check_finite(set: &PointSet, report: &mut Report) {
    report.push(
        "well-formed",
        Status::Pass,
        format!("{} points in dimension {}", set.len(), set.dimension()),
    );
    match set.disorder_witness() {
        Some((u, v)) => report.push("disorder", Status::Warn, format!("{u} and {v} share a value")),
        None => report.push("disorder", Status::Pass, "no two points share a value"),
    };
}

fn check_line(z: &LineSet, report: &mut Report) -> Result<(), CliError> {
    let cantor = cantor_continuous(z)?;
    match &cantor.gap {
        None => {
            let hull = z.hull().expect("nonempty");
            report.push("cantor", Status::Pass, format!("value projection {hull} has no gap"))
        }
        Some((lo, hi)) => report.push("cantor", Status::Fail, format!("gap ({lo}, {hi})")),
    };
    let poincare = poincare_continuous(z)?;
    match &poincare.counterexample {
        None => report.push("poincare", Status::Pass, "every interior disordered cut is in contact"),
        Some(x) => report.push("poincare", Status::Fail, format!("no cut in contact at {x}")),
    };
    match verify_continuity_equivalence(z) {
        Ok(eq) if eq.equivalent => report.push(
            "continuity-equivalence",
            Status::Pass,
            format!("cantor = poincare = {}", eq.cantor),
        ),
        Ok(eq) => report.push(
            "continuity-equivalence",
            Status::Fail,
            format!("cantor = {}, poincare = {}", eq.cantor, eq.poincare),
        ),
        Err(Error::OutsideDoubledScope { segment }) => report.push(
            "continuity-equivalence",
            Status::Warn,
            format!("not applicable: {segment} is single"),
        ),
        Err(e) => return Err(e.into()),
    };
    Ok(())
}

fn check_trajectory(path: &Path, report: &mut Report) {
    report.push(
        "phases",
        Status::Pass,
        format!(
            "{} phases over parameters [{}, {}]",
            path.phases().len(),
            path.param_lo(),
            path.param_hi()
        ),
    );
    let phases = path.phases();
    for j in path.junctions() {
        let name = format!("junction {} → {}", j.from_tag, j.to_tag);
        let end = phases[j.index].end_point();
        let start = phases[j.index + 1].start_point();
        if j.in_contact {
            report.push(name, Status::Pass, format!("{end} ~ {start}"));
        } else {
            report.push(
                name,
                Status::Fail,
                format!("jump {} → {} at {}", j.end_position, j.start_position, j.param),
            );
        }
    }
}

// cut

pub fn cut_at(doc: &Document, at: &str, mode: CutMode) -> Result<Report, CliError> {
    let Body::LineSet(z) = &doc.body else {
        return Err(wrong_kind("cut", doc, "line_set"));
    };
    let c = rational_arg("--at", at)?;
    let mut report = Report::new("cut");
    let result = match cut(z, &c, mode) {
        Ok(r) => r,
        Err(e @ (Error::FourthType { .. } | Error::NotDisorderedAt { .. })) => {
            report.summary(format!("no cut at {c}"));
            report.push("cut-type", Status::Fail, e.to_string());
            return Ok(report);
        }
        Err(e @ Error::CutOutOfRange { .. }) => return Err(CliError::Usage(e.to_string())),
        Err(e) => return Err(e.into()),
    };

    let a = result.left.largest_value_point();
    let b = result.right.smallest_value_point();
    let (ua, ub) = (valued('a'), valued('b'));
    let values = match (&a, &b) {
        (Some(a), Some(b)) if a.value() == b.value() => format!("{ua} = {ub} = {}", a.value()),
        (Some(a), Some(b)) => format!("{ua} = {}, {ub} = {}", a.value(), b.value()),
        (Some(a), None) => format!("{ua} = {}; {ub} not attained", a.value()),
        (None, Some(b)) => format!("{ua} not attained; {ub} = {}", b.value()),
        (None, None) => format!("{ua}, {ub} not attained"),
    };
    let mut line = format!("{}; {values}", result.cut_type);
    if let (Some(a), Some(b)) = (&a, &b) {
        line.push_str(if a == b { "; a = b" } else { "; a ≠ b" });
    }
    report.summary(line);
    report.push("cut-type", Status::Pass, result.cut_type.to_string());
    report.push("left", Status::Pass, result.left.to_string());
    report.push("right", Status::Pass, result.right.to_string());
    if let (Some(a), Some(b)) = (&a, &b) {
        report.push("extremes", Status::Pass, format!("a = {a}, b = {b}"));
    }
    match in_contact(&result.left, &result.right)? {
        Some((u, v)) => report.push("contact", Status::Pass, format!("{u} ~ {v}")),
        None => report.push("contact", Status::Pass, "sides not in contact"),
    };
    Ok(report)
}

// distance

fn operand(doc: &Document) -> Result<&dyn TaggedObject<Rational>, CliError> {
    match &doc.body {
        Body::FiniteSet(set) => Ok(set),
        Body::LineSet(z) => Ok(z),
        Body::Trajectory(_) => Err(wrong_kind("distance", doc, "finite_set or line_set")),
    }
}

pub fn distance(a: &Document, b: &Document) -> Result<Report, CliError> {
    let (x, y) = (operand(a)?, operand(b)?);
    if x.dimension() != y.dimension() {
        return Err(CliError::Usage(format!(
            "dimension mismatch: {:?} has dimension {}, {:?} has dimension {}",
            a.name,
            x.dimension(),
            b.name,
            y.dimension()
        )));
    }
    let usage = |e: Error| match e {
        Error::Overlap { .. } | Error::EmptyOperand => CliError::Usage(e.to_string()),
        e => e.into(),
    };
    let d = set_distance_sq(x, y).map_err(usage)?;
    let witness = in_contact(x, y).map_err(usage)?;
    let eq = verify_contact_equivalence(x, y).map_err(usage)?;

    let mut report = Report::new("distance");
    let mut line = format!("distance² = {d}; ");
    line.push_str(if witness.is_some() { "in contact" } else { "not in contact" });
    line.push_str(if eq.consistent {
        "; contact equivalence consistent"
    } else {
        "; contact equivalence INCONSISTENT"
    });
    report.summary(line);
    report.push(
        "distance",
        Status::Pass,
        format!("distance² = {d}, distance ≈ {}", d.approx(6)),
    );
    match &witness {
        Some((u, v)) => report.push("contact", Status::Pass, format!("{u} ~ {v}")),
        None => report.push("contact", Status::Pass, "not in contact"),
    };
    report.push(
        "contact-equivalence",
        if eq.consistent { Status::Pass } else { Status::Fail },
        format!(
            "contact = {}, value intersection = {}, zero distance = {}",
            eq.contact, eq.value_intersect, eq.zero_distance
        ),
    );
    Ok(report)
}

// fiber

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiberQuery {
    Value(String),
    Series(String),
    Apex,
}

fn pair(p: &TaggedPoint<Rational>) -> String {
    format!("({}, {})", p.value(), p.series())
}

fn plural(n: usize) -> String {
    if n == 1 {
        "1 point".to_string()
    } else {
        format!("{n} points")
    }
}

pub fn fiber(doc: &Document, query: &FiberQuery) -> Result<Report, CliError> {
    let Body::Trajectory(path) = &doc.body else {
        return Err(wrong_kind("fiber", doc, "trajectory"));
    };
    let mut report = Report::new("fiber");
    match query {
        FiberQuery::Value(text) => {
            let x = rational_arg("--value", text)?;
            let fiber = path.value_fiber(&x);
            let listing: Vec<String> = fiber.iter().map(pair).collect();
            if fiber.is_empty() {
                report.summary("no points");
                report.push("value-fiber", Status::Pass, format!("nothing at value {x}"));
            } else {
                report.summary(format!("{} at value {x}", plural(fiber.len())));
                report.push("value-fiber", Status::Pass, listing.join(", "));
            }
        }
        FiberQuery::Series(text) => {
            let y = rational_arg("--series", text)?;
            let split = path.series_cut(&y).map_err(|e| CliError::Usage(e.to_string()))?;
            let (us, ut) = (valued('s'), valued('t'));
            let values = if split.position_continuous() {
                format!("{us} = {ut} = {}", split.s.value())
            } else {
                format!("{us} = {}, {ut} = {}", split.s.value(), split.t.value())
            };
            report.summary(format!("s_# = t_# = {y}; {values}"));
            report.push(
                "series-cut",
                Status::Pass,
                format!(
                    "before [{}, {y}], after [{y}, {}]",
                    path.param_lo(),
                    path.param_hi()
                ),
            );
            report.push("endpoints", Status::Pass, format!("s = {}, t = {}", split.s, split.t));
            if split.position_continuous() {
                report.push("position", Status::Pass, "no value change across the cut");
            } else {
                report.push(
                    "position",
                    Status::Warn,
                    format!("value jumps {} → {}", split.s.value(), split.t.value()),
                );
            }
        }
        FiberQuery::Apex => {
            let apex = path.apex_query();
            report.summary(format!(
                "apex {} belongs to phases: {} ({})",
                apex.apex,
                apex.phases.join(", "),
                plural(apex.fiber.len())
            ));
            let listing: Vec<String> = apex.fiber.iter().map(pair).collect();
            report.push("apex-fiber", Status::Pass, listing.join(", "));
            let contact = path.contact_report();
            report.push(
                "junction-contact",
                if contact.in_contact_everywhere() { Status::Pass } else { Status::Fail },
                match contact.junctions.len() {
                    1 => "1 junction".to_string(),
                    n => format!("{n} junctions"),
                },
            );
        }
    }
    Ok(report)
}
