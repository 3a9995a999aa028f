//! The polygon file format: a small JSON document.
//!
//! ```json
//! {"vertices": [[3, 0], [0, 3], [-3, 0], [0, -3], [3, 0]], "closed": true}
//! ```
//!
//! Each coordinate is either a JSON integer or a rational written as a
//! `"p/q"` string. Floating-point numbers are rejected outright: every value
//! in this crate is exact, and a `0.1` in a source document has no exact
//! meaning. Write `"1/10"` instead.
//!
//! `"closed"` is optional. When `true`, the parser appends a copy of the
//! first vertex if the last does not already equal it, normalizing to the
//! explicit closed form; when `false` or absent, the vertex list is taken
//! literally (it may still be explicitly closed). [`polygon_to_json`] always
//! emits the explicit form plus the flag, and the two functions round-trip:
//! parsing an emitted document reproduces the polygon exactly.

use crate::error::{Error, Result};
use crate::kernel::{Rat, Vec2};
use crate::polygon::Polygon;
use serde_json::{Map, Value};

fn parse_coord(value: &Value, vertex: usize) -> Result<Rat> {
    match value {
        Value::Number(n) => n.as_i64().map(Rat::from).ok_or_else(|| {
            Error::Parse(format!(
                "vertex {vertex}: coordinate {n} is not an exact integer; \
                 write rationals as \"p/q\" strings"
            ))
        }),
        Value::String(s) => {
            s.parse::<Rat>().map_err(|e| Error::Parse(format!("vertex {vertex}: {e}")))
        }
        other => Err(Error::Parse(format!(
            "vertex {vertex}: coordinate must be an integer or a \"p/q\" string, got {other}"
        ))),
    }
}

/// Parses a polygon document. See the module docs for the format.
pub fn parse_polygon(text: &str) -> Result<Polygon> {
    let doc: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| Error::Parse("document must be a JSON object".to_string()))?;

    let vertices = obj
        .get("vertices")
        .ok_or_else(|| Error::Parse("missing \"vertices\" field".to_string()))?
        .as_array()
        .ok_or_else(|| Error::Parse("\"vertices\" must be an array".to_string()))?;

    let close = match obj.get("closed") {
        None => false,
        Some(Value::Bool(b)) => *b,
        Some(other) => {
            return Err(Error::Parse(format!("\"closed\" must be a boolean, got {other}")))
        }
    };

    let mut points = Vec::with_capacity(vertices.len() + 1);
    for (i, pair) in vertices.iter().enumerate() {
        let coords = pair
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::Parse(format!("vertex {i} must be an [x, y] pair")))?;
        points.push(Vec2::new(parse_coord(&coords[0], i)?, parse_coord(&coords[1], i)?));
    }

    if close {
        match points.first() {
            Some(first) if points.len() == 1 || points.last() != points.first() => {
                let first = first.clone();
                points.push(first);
            }
            _ => {}
        }
    }
    Polygon::new(points)
}

fn coord_value(r: &Rat) -> Value {
    if r.is_integer() {
        if let Some(i) = r.to_i64() {
            return Value::from(i);
        }
    }
    Value::from(r.to_string())
}

/// Serializes a polygon to the document format, explicit closing vertex and
/// all. Integer coordinates are emitted as JSON integers (falling back to
/// strings beyond 64 bits), other rationals as `"p/q"` strings. Output is
/// deterministic, and [`parse_polygon`] reproduces the input exactly.
pub fn polygon_to_json(p: &Polygon) -> String {
    let vertices: Vec<Value> = p
        .vertices()
        .iter()
        .map(|v| Value::from(vec![coord_value(&v.x), coord_value(&v.y)]))
        .collect();
    // Alphabetical insertion keeps the bytes identical whether serde_json
    // stores objects sorted or in insertion order.
    let mut doc = Map::new();
    doc.insert("closed".to_string(), Value::from(p.is_closed()));
    doc.insert("vertices".to_string(), Value::from(vertices));
    Value::from(doc).to_string()
}
