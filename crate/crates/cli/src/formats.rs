//! Point-set and Segre tuple files.
//!
//! Both are JSON with a `schema_version` field. Coordinates are strings
//! holding exact rationals, `"p"` or `"p/q"`:
//!
//! ```json
//! { "schema_version": 1, "n": 2,
//!   "points": [ { "coords": ["1", "0", "0"] },
//!               { "coords": ["1", "1/2", "-3"], "kind": "double" } ] }
//! ```
//!
//! ```json
//! { "schema_version": 1, "shape": [1, 1],
//!   "points": [ [["1", "2"], ["0", "1"]], [["1", "-1"], ["1", "1"]] ] }
//! ```

use std::fmt;

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};
use terracini_core::segre::{SegreError, SegrePoint};
use terracini_core::{ConditionsError, PointKind, ProjPoint, Scalar};

pub const SCHEMA_VERSION: u32 = 1;

/// A rational written as `"p/q"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rat(pub Scalar);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map(Rat).map_err(de::Error::custom)
    }
}

pub fn parse_rational(s: &str) -> Result<Scalar, String> {
    let t = s.trim();
    if t.is_empty() || t.contains(char::is_whitespace) {
        return Err(format!("invalid rational {s:?}"));
    }
    if t.ends_with("/0") && t.rsplit('/').next().is_some_and(|q| q.trim_start_matches('0').is_empty()) {
        return Err(format!("zero denominator in {s:?}"));
    }
    t.parse::<Scalar>().map_err(|_| format!("invalid rational {s:?}"))
}

pub fn rat_strings(coords: &[Scalar]) -> Vec<String> {
    coords.iter().map(ToString::to_string).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum KindJson {
    Reduced,
    Double,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointJson {
    coords: Vec<Rat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kind: Option<KindJson>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointSetJson {
    schema_version: u32,
    n: usize,
    points: Vec<PointJson>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    pub n: usize,
    pub points: Vec<ProjPoint>,
    pub kinds: Vec<PointKind>,
}

impl PointSet {
    pub fn reduced(n: usize, points: Vec<ProjPoint>) -> Self {
        let kinds = vec![PointKind::Reduced; points.len()];
        PointSet { n, points, kinds }
    }
}

#[derive(Debug)]
pub enum FormatError {
    Json { line: usize, column: usize, message: String },
    Version(u32),
    Dimension { point: usize, expected: usize, got: usize },
    Point { point: usize, message: String },
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Json { line, column, message } => write!(f, "line {line}, column {column}: {message}"),
            FormatError::Version(v) => write!(f, "unsupported schema_version {v}, expected {SCHEMA_VERSION}"),
            FormatError::Dimension { point, expected, got } => {
                write!(f, "point {point}: expected {expected} coordinates, got {got}")
            }
            FormatError::Point { point, message } => write!(f, "point {point}: {message}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        let full = e.to_string();
        let message = match full.rfind(" at line ") {
            Some(i) => full[..i].to_string(),
            None => full,
        };
        FormatError::Json {
            line: e.line(),
            column: e.column(),
            message,
        }
    }
}

fn point_error(point: usize, e: ConditionsError) -> FormatError {
    FormatError::Point {
        point,
        message: e.to_string(),
    }
}

pub fn parse_point_set(text: &str) -> Result<PointSet, FormatError> {
    let raw: PointSetJson = serde_json::from_str(text)?;
    if raw.schema_version != SCHEMA_VERSION {
        return Err(FormatError::Version(raw.schema_version));
    }
    let mut points = Vec::with_capacity(raw.points.len());
    let mut kinds = Vec::with_capacity(raw.points.len());
    for (i, p) in raw.points.into_iter().enumerate() {
        if p.coords.len() != raw.n + 1 {
            return Err(FormatError::Dimension {
                point: i,
                expected: raw.n + 1,
                got: p.coords.len(),
            });
        }
        let q = ProjPoint::new(p.coords.into_iter().map(|r| r.0).collect()).map_err(|e| point_error(i, e))?;
        if let Some(j) = points.iter().position(|x| *x == q) {
            return Err(point_error(i, ConditionsError::DuplicatePoint { first: j, second: i }));
        }
        points.push(q);
        kinds.push(match p.kind {
            Some(KindJson::Double) => PointKind::Double,
            _ => PointKind::Reduced,
        });
    }
    Ok(PointSet { n: raw.n, points, kinds })
}

pub fn write_point_set(set: &PointSet) -> String {
    let raw = PointSetJson {
        schema_version: SCHEMA_VERSION,
        n: set.n,
        points: set
            .points
            .iter()
            .zip(&set.kinds)
            .map(|(p, k)| PointJson {
                coords: p.coords().iter().cloned().map(Rat).collect(),
                kind: match k {
                    PointKind::Reduced => None,
                    PointKind::Double => Some(KindJson::Double),
                },
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&raw).expect("serializable");
    s.push('\n');
    s
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SegreJson {
    schema_version: u32,
    shape: Vec<usize>,
    points: Vec<Vec<Vec<Rat>>>,
}

pub fn parse_segre(text: &str) -> Result<Vec<SegrePoint>, FormatError> {
    let raw: SegreJson = serde_json::from_str(text)?;
    if raw.schema_version != SCHEMA_VERSION {
        return Err(FormatError::Version(raw.schema_version));
    }
    raw.points
        .into_iter()
        .enumerate()
        .map(|(i, factors)| {
            let got: Vec<usize> = factors.iter().map(|f| f.len().saturating_sub(1)).collect();
            if got != raw.shape {
                return Err(FormatError::Point {
                    point: i,
                    message: format!("factor dimensions {got:?} do not match shape {:?}", raw.shape),
                });
            }
            SegrePoint::from_coords(factors.into_iter().map(|f| f.into_iter().map(|r| r.0).collect()).collect())
                .map_err(|e| match e {
                    SegreError::ZeroFactor { factor, .. } => FormatError::Point {
                        point: i,
                        message: format!("factor {factor} is zero"),
                    },
                    other => FormatError::Point {
                        point: i,
                        message: other.to_string(),
                    },
                })
        })
        .collect()
}

pub fn write_segre(points: &[SegrePoint]) -> String {
    let raw = SegreJson {
        schema_version: SCHEMA_VERSION,
        shape: points.first().map(SegrePoint::shape).unwrap_or_default(),
        points: points
            .iter()
            .map(|p| {
                p.factors()
                    .iter()
                    .map(|f| f.coords().iter().cloned().map(Rat).collect())
                    .collect()
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&raw).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3/6").unwrap().to_string(), "1/2");
        assert_eq!(parse_rational("-4").unwrap().to_string(), "-4");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/ 2").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn point_set_round_trip() {
        let text = r#"{"schema_version":1,"n":2,"points":[{"coords":["2","1","0"]},{"coords":["0","3/4","-1"],"kind":"double"}]}"#;
        let set = parse_point_set(text).unwrap();
        assert_eq!(set.points[0].to_string(), "(1:1/2:0)");
        assert_eq!(set.kinds[1], PointKind::Double);
        assert_eq!(parse_point_set(&write_point_set(&set)).unwrap(), set);
    }

    #[test]
    fn diagnostics() {
        let bad = "{\n \"schema_version\": 1,\n \"n\": 2,\n \"points\": [\n  {\"coords\": [\"1\", \"1/0\", \"2\"]}\n ]\n}";
        match parse_point_set(bad) {
            Err(FormatError::Json { line, message, .. }) => {
                assert_eq!(line, 5);
                assert!(message.contains("zero denominator"), "{message}");
            }
            other => panic!("{other:?}"),
        }
        let short = r#"{"schema_version":1,"n":2,"points":[{"coords":["1","2"]}]}"#;
        assert!(matches!(parse_point_set(short), Err(FormatError::Dimension { point: 0, expected: 3, got: 2 })));
        let zero = r#"{"schema_version":1,"n":1,"points":[{"coords":["0","0"]}]}"#;
        assert!(matches!(parse_point_set(zero), Err(FormatError::Point { point: 0, .. })));
        let dup = r#"{"schema_version":1,"n":1,"points":[{"coords":["1","2"]},{"coords":["2","4"]}]}"#;
        assert!(matches!(parse_point_set(dup), Err(FormatError::Point { point: 1, .. })));
        let v2 = r#"{"schema_version":2,"n":1,"points":[]}"#;
        assert!(matches!(parse_point_set(v2), Err(FormatError::Version(2))));
    }

    #[test]
    fn segre_round_trip() {
        let text = r#"{"schema_version":1,"shape":[1,2],"points":[[["1","2"],["0","1","5/3"]],[["3","1"],["1","1","1"]]]}"#;
        let pts = parse_segre(text).unwrap();
        assert_eq!(pts.len(), 2);
        assert_eq!(parse_segre(&write_segre(&pts)).unwrap(), pts);
        let zero = r#"{"schema_version":1,"shape":[1],"points":[[["0","0"]]]}"#;
        assert!(matches!(parse_segre(zero), Err(FormatError::Point { point: 0, .. })));
        let shape = r#"{"schema_version":1,"shape":[1],"points":[[["1","0","0"]]]}"#;
        assert!(parse_segre(shape).is_err());
    }
}
