//! Reading configurations from JSON or CSV.
//!
//! JSON: `{"dimension": d, "points": [[c, …], …]}` where each coordinate is
//! a JSON integer or a string holding an integer, a decimal, or `p/q`.
//!
//! CSV: one point per row, `d` columns, optional header row, `#` comments.
//!
//! Errors carry the 1-based line (and column for JSON) of the offending
//! input. Repeated points are rejected.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use serde::de::{self, DeserializeSeed, Deserializer, MapAccess, SeqAccess, Visitor};

use super::scalar::{parse_scalar, ExactScalar};
use super::Configuration;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub message: String,
}

impl InputError {
    fn at_line(line: usize, message: impl Into<String>) -> Self {
        InputError {
            line: Some(line),
            column: None,
            message: message.into(),
        }
    }

    fn general(message: impl Into<String>) -> Self {
        InputError {
            line: None,
            column: None,
            message: message.into(),
        }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.line, self.column) {
            (Some(l), Some(c)) => write!(f, "line {l}, column {c}: {}", self.message),
            (Some(l), None) => write!(f, "line {l}: {}", self.message),
            _ => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for InputError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    Json,
    Csv,
}

impl InputFormat {
    /// By extension, falling back to sniffing for a leading `{`.
    pub fn detect(path: &Path, text: &str) -> Self {
        match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
            Some("json") => InputFormat::Json,
            Some("csv") => InputFormat::Csv,
            _ if text.trim_start().starts_with('{') => InputFormat::Json,
            _ => InputFormat::Csv,
        }
    }
}

/// Parsed coordinates before any genericity work.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    pub dimension: usize,
    pub points: Vec<Vec<ExactScalar>>,
}

impl PointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn into_configuration(self) -> Result<Configuration, InputError> {
        Configuration::new(self.dimension, self.points).map_err(|e| InputError::general(e.to_string()))
    }
}

pub fn read_points(path: &Path) -> Result<PointSet, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError::general(format!("cannot read {}: {e}", path.display())))?;
    match InputFormat::detect(path, &text) {
        InputFormat::Json => parse_json_points(&text),
        InputFormat::Csv => parse_csv_points(&text),
    }
}

pub fn load_configuration(path: &Path) -> Result<Configuration, InputError> {
    read_points(path)?.into_configuration()
}

struct Coordinate(ExactScalar);

impl<'de> de::Deserialize<'de> for Coordinate {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Coordinate;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a string holding an integer, decimal or p/q ratio")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Coordinate, E> {
                Ok(Coordinate(ExactScalar::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Coordinate, E> {
                Ok(Coordinate(ExactScalar::from_integer(v.into())))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Coordinate, E> {
                Err(E::custom(format!(
                    "{v} is not an exact integer; write decimals as strings, e.g. \"{v}\""
                )))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Coordinate, E> {
                parse_scalar(v).map(Coordinate).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

/// Deserializes the point list, checking row lengths and repeats as it goes
/// so that errors point at the offending row.
struct PointsSeed {
    dimension: Option<usize>,
}

impl<'de> DeserializeSeed<'de> for PointsSeed {
    type Value = Vec<Vec<ExactScalar>>;

    fn deserialize<D: Deserializer<'de>>(self, d: D) -> Result<Self::Value, D::Error> {
        d.deserialize_seq(self)
    }
}

impl<'de> Visitor<'de> for PointsSeed {
    type Value = Vec<Vec<ExactScalar>>;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a list of points")
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
        let mut points: Vec<Vec<ExactScalar>> = Vec::new();
        let mut seen: HashMap<Vec<ExactScalar>, usize> = HashMap::new();
        let mut width = self.dimension;
        loop {
            let seed = RowSeed {
                index: points.len(),
                width,
                seen: &seen,
            };
            let Some(row) = seq.next_element_seed(seed)? else {
                break;
            };
            width = Some(row.len());
            seen.insert(row.clone(), points.len());
            points.push(row);
        }
        Ok(points)
    }
}

/// One point. Validation happens before the closing bracket is left behind,
/// so reported positions stay on the row's own line.
struct RowSeed<'a> {
    index: usize,
    width: Option<usize>,
    seen: &'a HashMap<Vec<ExactScalar>, usize>,
}

impl<'de> DeserializeSeed<'de> for RowSeed<'_> {
    type Value = Vec<ExactScalar>;

    fn deserialize<D: Deserializer<'de>>(self, d: D) -> Result<Self::Value, D::Error> {
        d.deserialize_seq(self)
    }
}

impl<'de> Visitor<'de> for RowSeed<'_> {
    type Value = Vec<ExactScalar>;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a point given as a list of coordinates")
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
        let i = self.index;
        let mut row = Vec::new();
        while let Some(c) = seq.next_element::<Coordinate>()? {
            row.push(c.0);
            if let Some(w) = self.width.filter(|&w| row.len() > w) {
                return Err(de::Error::custom(format!(
                    "point {i} has more than {w} coordinates"
                )));
            }
        }
        if let Some(w) = self.width.filter(|&w| row.len() != w) {
            return Err(de::Error::custom(format!(
                "point {i} has {} coordinates, expected {w}",
                row.len()
            )));
        }
        if let Some(&j) = self.seen.get(&row) {
            return Err(de::Error::custom(format!("point {i} repeats point {j}")));
        }
        Ok(row)
    }
}

struct RawConfig {
    dimension: usize,
    points: Vec<Vec<ExactScalar>>,
}

impl<'de> de::Deserialize<'de> for RawConfig {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = RawConfig;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object with \"dimension\" and \"points\"")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<RawConfig, A::Error> {
                let mut dimension: Option<usize> = None;
                let mut points: Option<Vec<Vec<ExactScalar>>> = None;
                while let Some(key) = map.next_key::<String>()? {
                    match key.as_str() {
                        "dimension" => {
                            if dimension.is_some() {
                                return Err(de::Error::duplicate_field("dimension"));
                            }
                            let d: usize = map.next_value()?;
                            if d == 0 {
                                return Err(de::Error::custom("dimension must be at least 1"));
                            }
                            if let Some(w) = points.as_ref().and_then(|p| p.first()).map(Vec::len) {
                                if w != d {
                                    return Err(de::Error::custom(format!(
                                        "dimension {d} does not match points with {w} coordinates"
                                    )));
                                }
                            }
                            dimension = Some(d);
                        }
                        "points" => {
                            if points.is_some() {
                                return Err(de::Error::duplicate_field("points"));
                            }
                            points = Some(map.next_value_seed(PointsSeed { dimension })?);
                        }
                        other => return Err(de::Error::unknown_field(other, &["dimension", "points"])),
                    }
                }
                let dimension = dimension.ok_or_else(|| de::Error::missing_field("dimension"))?;
                let points = points.ok_or_else(|| de::Error::missing_field("points"))?;
                if points.is_empty() {
                    return Err(de::Error::custom("no points"));
                }
                Ok(RawConfig { dimension, points })
            }
        }
        d.deserialize_map(V)
    }
}

pub fn parse_json(text: &str) -> Result<Configuration, InputError> {
    parse_json_points(text)?.into_configuration()
}

pub fn parse_json_points(text: &str) -> Result<PointSet, InputError> {
    let raw: RawConfig = serde_json::from_str(text).map_err(|e| InputError {
        line: Some(e.line()),
        column: Some(e.column()),
        message: strip_position(&e.to_string()),
    })?;
    Ok(PointSet {
        dimension: raw.dimension,
        points: raw.points,
    })
}

/// serde_json appends " at line L column C"; the position is kept separately.
fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

pub fn parse_csv(text: &str) -> Result<Configuration, InputError> {
    parse_csv_points(text)?.into_configuration()
}

pub fn parse_csv_points(text: &str) -> Result<PointSet, InputError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());

    let mut points: Vec<Vec<ExactScalar>> = Vec::new();
    let mut lines: Vec<usize> = Vec::new();
    let mut seen: HashMap<Vec<ExactScalar>, usize> = HashMap::new();
    let mut first = true;
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            InputError::at_line(line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        let parsed: Vec<Result<ExactScalar, String>> = record.iter().map(parse_scalar).collect();
        if std::mem::take(&mut first) && parsed.iter().all(Result::is_err) {
            continue; // header
        }
        let mut row = Vec::with_capacity(parsed.len());
        for (col, v) in parsed.into_iter().enumerate() {
            row.push(v.map_err(|m| InputError::at_line(line, format!("field {}: {m}", col + 1)))?);
        }
        if let Some(w) = points.first().map(Vec::len) {
            if row.len() != w {
                return Err(InputError::at_line(
                    line,
                    format!("{} fields, expected {w}", row.len()),
                ));
            }
        }
        if let Some(&j) = seen.get(&row) {
            return Err(InputError::at_line(
                line,
                format!("repeats the point on line {}", lines[j]),
            ));
        }
        seen.insert(row.clone(), points.len());
        points.push(row);
        lines.push(line);
    }
    let Some(dimension) = points.first().map(Vec::len) else {
        return Err(InputError::general("no points"));
    };
    Ok(PointSet { dimension, points })
}

/// JSON text for a configuration, coordinates as exact strings.
pub fn to_json(config: &Configuration) -> String {
    let points: Vec<Vec<String>> = config
        .points()
        .iter()
        .map(|p| p.iter().map(super::scalar::format_scalar).collect())
        .collect();
    serde_json::json!({ "dimension": config.dimension(), "points": points }).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Genericity;

    #[test]
    fn json_forms() {
        let c = parse_json(r#"{"dimension": 2, "points": [[0, 0], ["1.5", "-2/3"], [1, "7"]]}"#).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.points()[1][0], parse_scalar("3/2").unwrap());
        assert_eq!(c.points()[1][1], parse_scalar("-2/3").unwrap());
        let c = parse_json(r#"{"points": [[0], [1]], "dimension": 1}"#).unwrap();
        assert_eq!(c.dimension(), 1);
    }

    #[test]
    fn json_errors_have_lines() {
        let text = "{\"dimension\": 2,\n \"points\": [\n  [0, 0],\n  [1, \"x\"]\n ]}";
        let e = parse_json(text).unwrap_err();
        assert_eq!(e.line, Some(4), "{e}");

        let text = "{\"dimension\": 2,\n \"points\": [\n  [0, 0],\n  [1, 2, 3]\n ]}";
        let e = parse_json(text).unwrap_err();
        assert_eq!(e.line, Some(4), "{e}");

        let text = "{\"dimension\": 2,\n \"points\": [\n  [0, 0],\n  [1, 1],\n  [0, \"0.0\"]\n ]}";
        let e = parse_json(text).unwrap_err();
        assert_eq!(e.line, Some(5), "{e}");
        assert!(e.message.contains("repeats point 0"), "{e}");

        let text = "{\"dimension\": 2,\n \"points\": [[0, 1.5]]}";
        let e = parse_json(text).unwrap_err();
        assert_eq!(e.line, Some(2), "{e}");

        let text = "{\"points\": [[0, 1]],\n \"dimension\": 3}";
        let e = parse_json(text).unwrap_err();
        assert_eq!(e.line, Some(2), "{e}");

        assert!(parse_json("{\"dimension\": 2}").is_err());
        assert!(parse_json("{\"dimension\": 2, \"points\": []}").is_err());
        assert!(parse_json("{\"dimension\": 0, \"points\": [[]]}").is_err());
    }

    #[test]
    fn csv_forms() {
        let c = parse_csv("x,y\n0,0\n1,0\n# comment\n\n0.5,1/3\n").unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.dimension(), 2);
        let c = parse_csv("0\n1\n2\n").unwrap();
        assert_eq!(c.dimension(), 1);
    }

    #[test]
    fn csv_errors_have_lines() {
        let e = parse_csv("x,y\n0,0\n1,zz\n").unwrap_err();
        assert_eq!(e.line, Some(3), "{e}");
        let e = parse_csv("0,0\n1,1\n2\n").unwrap_err();
        assert_eq!(e.line, Some(3), "{e}");
        let e = parse_csv("0,0\n1,1\n0.0,0/5\n").unwrap_err();
        assert_eq!(e.line, Some(3), "{e}");
        assert!(e.message.contains("line 1"), "{e}");
        assert!(parse_csv("x,y\n").is_err());
    }

    #[test]
    fn non_generic_input_parses() {
        let c = parse_csv("0,0\n1,0\n2,0\n").unwrap();
        assert_eq!(c.genericity(), &Genericity::Degenerate { witness: vec![0, 1, 2] });
    }

    #[test]
    fn json_writer_round_trip() {
        let c = parse_json(r#"{"dimension": 2, "points": [[0, 0], ["1.5", "-2/3"], [1, "7"]]}"#).unwrap();
        assert_eq!(parse_json(&to_json(&c)).unwrap(), c);
    }
}
