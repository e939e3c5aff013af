//! JSON forms of games, weights, subspaces, decompositions and reports.
//!
//! Input numbers may be integers, decimal literals (read exactly) or strings
//! `"p/q"`. On output, integers are plain JSON numbers and other rationals
//! are `"p/q"` strings.

use std::str::FromStr;

use serde::Deserialize;
use serde_json::{json, Number, Value};

use crate::classes::Classification;
use crate::compat::{CompatReport, TheoremReport};
use crate::error::{Error, Result};
use crate::game::{Game, GameSpace};
use crate::inner::InnerProduct;
use crate::matrix::RationalMatrix;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::scheme::Decomposition;
use crate::subspace::Subspace;

fn format_err(e: serde_json::Error) -> Error {
    Error::Format(e.to_string())
}

pub fn rational_from_value(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(n) => parse_rational(&n.to_string()),
        Value::String(s) => parse_rational(s),
        other => Err(Error::Format(format!("expected a number or \"p/q\" string, got {other}"))),
    }
}

pub fn rational_to_value(r: &Rational) -> Value {
    if r.is_integer() {
        Value::Number(Number::from_str(&r.numer().to_string()).expect("integer literal"))
    } else {
        Value::String(format_rational(r))
    }
}

fn rationals_to_values(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_to_value).collect())
}

fn parse_rows(rows: &[Vec<Value>]) -> Result<Vec<Vec<Rational>>> {
    rows.iter()
        .map(|r| r.iter().map(rational_from_value).collect())
        .collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GameDoc {
    players: usize,
    strategies: Vec<usize>,
    payoffs: Vec<Vec<Value>>,
}

pub fn space_to_json(space: &GameSpace) -> Value {
    json!({ "players": space.n(), "strategies": space.ks() })
}

pub fn game_from_value(v: Value) -> Result<Game> {
    let doc: GameDoc = serde_json::from_value(v).map_err(format_err)?;
    if doc.players != doc.strategies.len() {
        return Err(Error::Format(format!(
            "\"players\" is {} but {} strategy counts were given",
            doc.players,
            doc.strategies.len()
        )));
    }
    let space = GameSpace::new(doc.strategies)?;
    Game::from_table(&space, parse_rows(&doc.payoffs)?)
}

pub fn game_from_str(text: &str) -> Result<Game> {
    game_from_value(serde_json::from_str(text).map_err(format_err)?)
}

pub fn game_to_json(g: &Game) -> Value {
    let space = g.space();
    json!({
        "players": space.n(),
        "strategies": space.ks(),
        "payoffs": g.to_table().iter().map(|r| rationals_to_values(r)).collect::<Vec<_>>(),
    })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WeightDoc {
    Preset { preset: String },
    Matrix { dim: usize, q: Vec<Vec<Value>> },
}

/// Reads a weight document for `space`. `label` names a custom matrix in reports.
pub fn weight_from_str(space: &GameSpace, text: &str, label: &str) -> Result<InnerProduct> {
    let doc: WeightDoc = serde_json::from_str(text).map_err(format_err)?;
    match doc {
        WeightDoc::Preset { preset } => preset_weight(space, &preset),
        WeightDoc::Matrix { dim, q } => {
            if dim != space.dim() || q.len() != dim {
                return Err(Error::Shape(format!(
                    "weight matrix declares dim {dim} with {} rows; {space} has dimension {}",
                    q.len(),
                    space.dim()
                )));
            }
            let q = RationalMatrix::from_rows(parse_rows(&q)?)?;
            InnerProduct::custom(space, q, label)
        }
    }
}

pub fn preset_weight(space: &GameSpace, name: &str) -> Result<InnerProduct> {
    match name {
        "standard" => Ok(InnerProduct::standard(space)),
        "candogan" => Ok(InnerProduct::candogan(space)),
        other => Err(Error::Unknown {
            kind: "weight preset",
            name: other.to_string(),
        }),
    }
}

pub fn weight_to_json(ip: &InnerProduct) -> Value {
    let q = ip.matrix();
    json!({
        "dim": q.rows(),
        "q": q.to_rows().iter().map(|r| rationals_to_values(r)).collect::<Vec<_>>(),
    })
}

/// `{ "space", "dimension", "basis" }`, basis as a list of columns with
/// every entry a rational string.
pub fn subspace_to_json(s: &Subspace) -> Value {
    let basis: Vec<Value> = s
        .basis()
        .columns()
        .iter()
        .map(|c| Value::Array(c.iter().map(|x| Value::String(format_rational(x))).collect()))
        .collect();
    json!({
        "space": space_to_json(s.space()),
        "dimension": s.dimension(),
        "basis": basis,
    })
}

#[derive(Deserialize)]
struct SpaceDoc {
    players: usize,
    strategies: Vec<usize>,
}

#[derive(Deserialize)]
struct SubspaceDoc {
    space: SpaceDoc,
    dimension: usize,
    basis: Vec<Vec<Value>>,
}

pub fn subspace_from_str(text: &str) -> Result<Subspace> {
    let doc: SubspaceDoc = serde_json::from_str(text).map_err(format_err)?;
    if doc.space.players != doc.space.strategies.len() {
        return Err(Error::Format("player count disagrees with strategies".into()));
    }
    let space = GameSpace::new(doc.space.strategies)?;
    let columns = parse_rows(&doc.basis)?;
    if columns.iter().any(|c| c.len() != space.dim()) {
        return Err(Error::Shape("basis column has the wrong length".into()));
    }
    let s = Subspace::from_spanning(&space, &RationalMatrix::from_columns(space.dim(), &columns))?;
    if s.dimension() != doc.dimension {
        return Err(Error::Format(format!(
            "declared dimension {} but basis spans {}",
            doc.dimension,
            s.dimension()
        )));
    }
    Ok(s)
}

pub fn decomposition_to_json(d: &Decomposition) -> Value {
    json!({
        "scheme": d.scheme.name(),
        "inner": d.inner,
        "parts": d.labels,
        "components": d.components.iter().map(game_to_json).collect::<Vec<_>>(),
        "orthogonal": d.orthogonal,
    })
}

pub fn compat_to_json(r: &CompatReport) -> Value {
    json!({
        "scheme": r.scheme,
        "weight": r.weight,
        "compatible": r.compatible,
        "compatible_leading_parts": r.compatible_leading,
        "violations": r.violations.iter().map(|v| json!({
            "part": v.part,
            "label": v.label,
            "column": v.column,
            "direction": v.direction.to_string(),
        })).collect::<Vec<_>>(),
    })
}

pub fn theorem_report_to_json(r: &TheoremReport) -> Value {
    let mut out = compat_to_json(&r.compat);
    let obj = out.as_object_mut().expect("object");
    obj.insert("orthogonal_standard".into(), r.orthogonal_standard.into());
    obj.insert("orthogonal_weighted".into(), r.orthogonal_weighted.into());
    obj.insert(
        "agreement".into(),
        json!({
            "trials": r.agreement.trials,
            "seed": r.agreement.seed,
            "all_equal": r.agreement.all_equal,
            "mismatched_trials": r.agreement.mismatched_trials,
            "witness": r.agreement.witness.as_ref().map(game_to_json),
        }),
    );
    obj.insert("common_decomposition".into(), r.common_decomposition.into());
    obj.insert("theorem_holds".into(), r.holds.into());
    out
}

pub fn classification_to_json(c: &Classification) -> Value {
    json!({
        "classes": c.classes.iter().map(|c| c.name()).collect::<Vec<_>>(),
        "potential_function": c.potential.as_deref().map(rationals_to_values),
        "symmetric_skipped": c.symmetric_skipped,
    })
}
