//! JSON instance files.
//!
//! ```json
//! {
//!   "name": "two players",
//!   "players": 2, "periods": 2,
//!   "demand":     [[1, 2], [0, 3]],
//!   "production": [[1, "3/2"], [2, 1]],
//!   "holding":    [[1], [1]],
//!   "backlog":    [["1/2"], [1]]
//! }
//! ```
//!
//! Matrices have one row per player. Cost entries are integers or strings
//! `p`, `±p/q` with `q > 0`. Holding and backlog rows carry `periods − 1`
//! entries; rows with `periods` entries are accepted and their last entry
//! is dropped with a warning.

use std::fmt;
use std::path::Path;

use pigame_core::{parse_rational, Error as CoreError, PiInstance, Rational};
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

/// An exact cost entry: a JSON integer or a rational string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalField(pub Rational);

impl Serialize for RationalField {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for RationalField {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = RationalField;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a string \"p/q\" with q > 0")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<RationalField, E> {
                Ok(RationalField(Rational::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<RationalField, E> {
                Ok(RationalField(Rational::from_integer(v.into())))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<RationalField, E> {
                Err(E::custom(format_args!(
                    "floating-point value {v} not allowed; write it as a string \"p/q\""
                )))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<RationalField, E> {
                parse_rational(v).map(RationalField).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
    pub players: usize,
    pub periods: usize,
    pub demand: Vec<Vec<u64>>,
    pub production: Vec<Vec<RationalField>>,
    pub holding: Vec<Vec<RationalField>>,
    pub backlog: Vec<Vec<RationalField>>,
}

#[derive(Debug, thiserror::Error)]
pub enum InstanceError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{field}: {message} (line {line}, column {column})")]
    Json {
        field: String,
        message: String,
        line: usize,
        column: usize,
    },
    #[error("{field}: {message}")]
    Shape { field: String, message: String },
}

/// A parsed instance with the file's metadata and any warnings raised.
#[derive(Debug, Clone)]
pub struct LoadedInstance {
    pub instance: PiInstance,
    pub name: Option<String>,
    pub notes: Option<String>,
    pub warnings: Vec<String>,
}

fn shape(field: impl Into<String>, message: impl Into<String>) -> InstanceError {
    InstanceError::Shape {
        field: field.into(),
        message: message.into(),
    }
}

pub fn parse_instance(text: &str) -> Result<LoadedInstance, InstanceError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let file: InstanceFile = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        InstanceError::Json {
            field: if path == "." { "document".into() } else { path },
            message: strip_position(&inner.to_string()),
            line: inner.line(),
            column: inner.column(),
        }
    })?;
    file.into_instance()
}

pub fn load_instance(path: &Path) -> Result<LoadedInstance, InstanceError> {
    let text = std::fs::read_to_string(path).map_err(|source| InstanceError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_instance(&text)
}

// serde_json appends " at line L column C"; the position is reported separately.
fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(k) => message[..k].to_string(),
        None => message.to_string(),
    }
}

fn check_matrix<T>(
    field: &str,
    rows: &[Vec<T>],
    players: usize,
    widths: &[usize],
) -> Result<(), InstanceError> {
    if rows.len() != players {
        return Err(shape(
            field,
            format!(
                "expected {players} rows (one per player), found {}",
                rows.len()
            ),
        ));
    }
    for (i, row) in rows.iter().enumerate() {
        if !widths.contains(&row.len()) {
            let want = widths
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" or ");
            return Err(shape(
                format!("{field}[{i}]"),
                format!("expected {want} entries, found {}", row.len()),
            ));
        }
    }
    Ok(())
}

fn unwrap_rows(rows: Vec<Vec<RationalField>>, width: usize) -> Vec<Vec<Rational>> {
    rows.into_iter()
        .map(|r| r.into_iter().take(width).map(|v| v.0).collect())
        .collect()
}

impl InstanceFile {
    pub fn into_instance(self) -> Result<LoadedInstance, InstanceError> {
        let (n, t) = (self.players, self.periods);
        if n == 0 {
            return Err(shape("players", "must be at least 1"));
        }
        if t == 0 {
            return Err(shape("periods", "must be at least 1"));
        }
        check_matrix("demand", &self.demand, n, &[t])?;
        check_matrix("production", &self.production, n, &[t])?;
        let mut warnings = Vec::new();
        for (field, rows) in [("holding", &self.holding), ("backlog", &self.backlog)] {
            check_matrix(field, rows, n, &[t - 1, t])?;
            if let Some(i) = rows.iter().position(|r| r.len() == t) {
                warnings.push(format!(
                    "{field}[{i}] has {t} entries; the last period's {field} cost is unused and was dropped"
                ));
            }
        }
        let instance = PiInstance::new(
            self.demand,
            unwrap_rows(self.production, t),
            unwrap_rows(self.holding, t - 1),
            unwrap_rows(self.backlog, t - 1),
        )
        .map_err(|e| match e {
            CoreError::NegativeCost {
                what,
                player,
                period,
            } => shape(
                format!("{what}[{player}][{period}]"),
                "must be non-negative",
            ),
            CoreError::TooManyPlayers { players, cap } => shape(
                "players",
                format!("{players} exceeds the largest supported count {cap}"),
            ),
            other => shape("document", other.to_string()),
        })?;
        Ok(LoadedInstance {
            instance,
            name: self.name,
            notes: self.notes,
            warnings,
        })
    }

    pub fn from_instance(instance: &PiInstance, name: Option<String>) -> Self {
        let wrap = |rows: &[Vec<Rational>]| {
            rows.iter()
                .map(|r| r.iter().cloned().map(RationalField).collect())
                .collect()
        };
        InstanceFile {
            name,
            notes: None,
            players: instance.players(),
            periods: instance.periods(),
            demand: instance.demand().to_vec(),
            production: wrap(instance.production()),
            holding: wrap(instance.holding()),
            backlog: wrap(instance.backlog()),
        }
    }
}
