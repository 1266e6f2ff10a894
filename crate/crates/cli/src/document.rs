//! JSON description files.
//!
//! Rationals travel as `"num/den"` strings so that nothing is rounded on the
//! way in or out. Serialization is canonical: parsing a file written by
//! [`serialize`] and writing it again reproduces it byte for byte.

use std::fmt;

use disordered::{
    format_rational, parse_rational, Breakpoint, LineSet, Mode, Path, Phase, Point, PointSet,
    Rational, Segment, SeriesTag, Value,
};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    FiniteSet,
    LineSet,
    Trajectory,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::FiniteSet => "finite_set",
            Kind::LineSet => "line_set",
            Kind::Trajectory => "trajectory",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    FiniteSet(PointSet),
    LineSet(LineSet),
    Trajectory(Path),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub name: String,
    pub description: Option<String>,
    pub body: Body,
}

impl Document {
    pub fn kind(&self) -> Kind {
        match self.body {
            Body::FiniteSet(_) => Kind::FiniteSet,
            Body::LineSet(_) => Kind::LineSet,
            Body::Trajectory(_) => Kind::Trajectory,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Q(Rational);

impl Serialize for Q {
    fn serialize<Ser: Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map(Q).map_err(de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSeries {
    ordinal: Q,
    label: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoint {
    coords: Vec<Q>,
    series: RawSeries,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSegment {
    lo: Q,
    hi: Q,
    series: RawSeries,
    mode: RawMode,
}

#[derive(Clone, Copy, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum RawMode {
    Single,
    Doubled,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPhase {
    tag: String,
    breakpoints: Vec<(Q, Q)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    format: u32,
    kind: Kind,
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dimension: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    points: Option<Vec<RawPoint>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    segments: Option<Vec<RawSegment>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    phases: Option<Vec<RawPhase>>,
}

fn series_in(raw: RawSeries) -> SeriesTag {
    SeriesTag::new(raw.ordinal.0, raw.label)
}

fn series_out(tag: &SeriesTag) -> RawSeries {
    RawSeries {
        ordinal: Q(tag.ordinal.clone()),
        label: tag.label.clone(),
    }
}

fn invalid(message: impl Into<String>) -> CliError {
    CliError::Invalid(message.into())
}

/// Parses a document; syntax errors carry the line and column.
pub fn parse(text: &str) -> Result<Document, CliError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if raw.format != FORMAT_VERSION {
        return Err(invalid(format!(
            "unsupported format {}, expected {FORMAT_VERSION}",
            raw.format
        )));
    }
    let present = [
        ("points", raw.points.is_some(), Kind::FiniteSet),
        ("segments", raw.segments.is_some(), Kind::LineSet),
        ("phases", raw.phases.is_some(), Kind::Trajectory),
    ];
    for (field, is_set, owner) in present {
        if is_set && owner != raw.kind {
            return Err(invalid(format!("field {field:?} does not belong to kind {}", raw.kind)));
        }
    }
    if raw.dimension.is_some() && raw.kind != Kind::FiniteSet {
        return Err(invalid(format!("field \"dimension\" does not belong to kind {}", raw.kind)));
    }

    let body = match raw.kind {
        Kind::FiniteSet => {
            let points = raw.points.ok_or_else(|| invalid("finite_set needs \"points\""))?;
            let dimension = match raw.dimension {
                Some(d) => d,
                None => points
                    .first()
                    .map(|p| p.coords.len())
                    .ok_or_else(|| invalid("empty finite_set needs \"dimension\""))?,
            };
            let points = points
                .into_iter()
                .map(|p| {
                    let value = Value::new(p.coords.into_iter().map(|q| q.0).collect())?;
                    Ok(Point::new(value, series_in(p.series)))
                })
                .collect::<disordered::Result<Vec<_>>>()?;
            Body::FiniteSet(PointSet::new(dimension, points)?)
        }
        Kind::LineSet => {
            let segments = raw.segments.ok_or_else(|| invalid("line_set needs \"segments\""))?;
            let segments = segments
                .into_iter()
                .map(|s| {
                    let mode = match s.mode {
                        RawMode::Single => Mode::Single,
                        RawMode::Doubled => Mode::Doubled,
                    };
                    Segment::new(s.lo.0, s.hi.0, series_in(s.series), mode)
                })
                .collect::<disordered::Result<Vec<_>>>()?;
            Body::LineSet(LineSet::new(segments)?)
        }
        Kind::Trajectory => {
            let phases = raw.phases.ok_or_else(|| invalid("trajectory needs \"phases\""))?;
            let phases = phases
                .into_iter()
                .map(|p| {
                    let bps = p
                        .breakpoints
                        .into_iter()
                        .map(|(t, x)| Breakpoint::new(t.0, x.0))
                        .collect();
                    Phase::new(p.tag, bps)
                })
                .collect::<disordered::Result<Vec<_>>>()?;
            Body::Trajectory(Path::new(phases)?)
        }
    };
    Ok(Document {
        name: raw.name,
        description: raw.description,
        body,
    })
}

/// Canonical pretty JSON with a trailing newline.
pub fn serialize(doc: &Document) -> String {
    let mut raw = RawDocument {
        format: FORMAT_VERSION,
        kind: doc.kind(),
        name: doc.name.clone(),
        description: doc.description.clone(),
        dimension: None,
        points: None,
        segments: None,
        phases: None,
    };
    match &doc.body {
        Body::FiniteSet(set) => {
            raw.dimension = Some(set.dimension());
            raw.points = Some(
                set.iter()
                    .map(|p| RawPoint {
                        coords: p.value().coords().iter().cloned().map(Q).collect(),
                        series: series_out(p.series()),
                    })
                    .collect(),
            );
        }
        Body::LineSet(z) => {
            raw.segments = Some(
                z.segments()
                    .iter()
                    .map(|s| RawSegment {
                        lo: Q(s.lo().clone()),
                        hi: Q(s.hi().clone()),
                        series: series_out(s.series()),
                        mode: match s.mode() {
                            Mode::Single => RawMode::Single,
                            Mode::Doubled => RawMode::Doubled,
                        },
                    })
                    .collect(),
            );
        }
        Body::Trajectory(path) => {
            raw.phases = Some(
                path.phases()
                    .iter()
                    .map(|p| RawPhase {
                        tag: p.tag().to_string(),
                        breakpoints: p
                            .breakpoints()
                            .iter()
                            .map(|b| (Q(b.param.clone()), Q(b.position.clone())))
                            .collect(),
                    })
                    .collect(),
            );
        }
    }
    let mut text = serde_json::to_string_pretty(&raw).expect("documents always serialize");
    text.push('\n');
    text
}
