//! The JSON instance format: one self-describing file shape for every k,
//! with an optional custom filtration and an optional snake-diagram section.
//!
//! Matrices are arrays of rows of strings ("2/3" over the rationals, decimal
//! integers over GF(p)); shapes are always derivable from the declared cell
//! or space dimensions, so zero-row and zero-column matrices round-trip.
//! Unknown keys are rejected, and every matrix is shape-checked against the
//! declared dimensions before any computation starts. Serialization is
//! canonical: parsing a rendered instance reproduces it byte for byte.

use crate::error::Error;
use crate::field::FieldSpec;
use crate::filtration::FilteredComplex;
use crate::matrix::Matrix;
use crate::polycomplex::{MultiDegree, Polycomplex, TotalComplex};
use crate::snake::SnakeDiagram;
use crate::subspace::Subspace;
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
struct FieldJson {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
struct CellJson {
    deg: Vec<usize>,
    dim: usize,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
struct DiffJson {
    i: usize,
    from: Vec<usize>,
    matrix: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
struct FiltrationLevelJson {
    p: usize,
    n: usize,
    span: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
struct SnakeDimsJson {
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    e: usize,
    f: usize,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
struct SnakeJson {
    dims: SnakeDimsJson,
    alpha: Vec<Vec<String>>,
    beta: Vec<Vec<String>>,
    gamma: Vec<Vec<String>>,
    ab: Vec<Vec<String>>,
    bc: Vec<Vec<String>>,
    de: Vec<Vec<String>>,
    ef: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
struct InstanceJson {
    schema_version: String,
    field: FieldJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cells: Option<Vec<CellJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    diff: Option<Vec<DiffJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    filtration: Option<Vec<FiltrationLevelJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    snake: Option<SnakeJson>,
}

/// Custom filtration data from an instance file, to be realized on the total
/// complex of the instance's polycomplex.
#[derive(Clone, Debug)]
pub struct FiltrationOverride {
    levels: Vec<(usize, usize, Vec<Vec<String>>)>,
}

/// A fully validated instance: either a polycomplex or a snake diagram.
#[derive(Clone, Debug)]
pub enum InstanceContent {
    Poly(Polycomplex),
    Snake(SnakeDiagram),
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub field: FieldSpec,
    pub content: InstanceContent,
    pub filtration_override: Option<FiltrationOverride>,
}

impl Instance {
    pub fn polycomplex(&self) -> Result<&Polycomplex, Error> {
        match &self.content {
            InstanceContent::Poly(v) => Ok(v),
            InstanceContent::Snake(_) => Err(Error::Parse(
                "this instance holds a snake diagram, not a polycomplex".into(),
            )),
        }
    }

    pub fn snake_diagram(&self) -> Result<&SnakeDiagram, Error> {
        match &self.content {
            InstanceContent::Snake(s) => Ok(s),
            InstanceContent::Poly(_) => Err(Error::Parse(
                "this instance holds a polycomplex, not a snake diagram".into(),
            )),
        }
    }

    /// Realizes the file's custom filtration on a total complex. Level 0 is
    /// always the full space; missing intermediate levels repeat the previous
    /// one.
    pub fn custom_filtration(&self, t: &TotalComplex) -> Result<Option<FilteredComplex>, Error> {
        let Some(over) = &self.filtration_override else {
            return Ok(None);
        };
        let complex = t.underlying().clone();
        let field = complex.field();
        let n_window = complex.dims().len();
        let mut given: Vec<Vec<Option<Subspace>>> = vec![Vec::new(); n_window];
        for (p, n, span) in &over.levels {
            if *p == 0 {
                return Err(Error::Parse(
                    "filtration level 0 is implicitly the full space; start overrides at p = 1"
                        .into(),
                ));
            }
            if *n >= n_window {
                return Err(Error::Parse(format!(
                    "filtration level references degree {n} outside the support window"
                )));
            }
            let ambient = complex.dims()[*n];
            let mut cols = Matrix::zero(field, ambient, span.len());
            for (j, vector) in span.iter().enumerate() {
                if vector.len() != ambient {
                    return Err(Error::Parse(format!(
                        "filtration generator for (p = {p}, n = {n}) has {} coordinates, expected {ambient}",
                        vector.len()
                    )));
                }
                for (i, text) in vector.iter().enumerate() {
                    cols.set(i, j, field.parse(text)?);
                }
            }
            let chain = &mut given[*n];
            if chain.len() <= *p {
                chain.resize(*p + 1, None);
            }
            chain[*p] = Some(Subspace::from_columns(&cols));
        }
        let levels: Vec<Vec<Subspace>> = (0..n_window)
            .map(|n| {
                let ambient = complex.dims()[n];
                let mut chain = vec![Subspace::full(field, ambient)];
                for p in 1..given[n].len() {
                    let level = match &given[n][p] {
                        Some(s) => s.clone(),
                        None => chain[p - 1].clone(),
                    };
                    chain.push(level);
                }
                chain
            })
            .collect();
        let fc = FilteredComplex::new(complex, levels)?;
        fc.validate()?;
        Ok(Some(fc))
    }
}

fn parse_field(json: &FieldJson) -> Result<FieldSpec, Error> {
    match json.kind.as_str() {
        "prime" => {
            let p = json
                .p
                .ok_or_else(|| Error::Parse("field of kind \"prime\" needs \"p\"".into()))?;
            Ok(FieldSpec::prime(p)?)
        }
        "rational" => {
            if json.p.is_some() {
                return Err(Error::Parse("field of kind \"rational\" takes no \"p\"".into()));
            }
            Ok(FieldSpec::rationals())
        }
        other => Err(Error::Parse(format!(
            "unknown field kind {other:?}; expected \"prime\" or \"rational\""
        ))),
    }
}

fn parse_matrix(
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: &[Vec<String>],
    what: &str,
) -> Result<Matrix, Error> {
    if data.len() != rows {
        return Err(Error::Parse(format!(
            "{what}: expected {rows} rows, got {}",
            data.len()
        )));
    }
    let mut m = Matrix::zero(field, rows, cols);
    for (i, row) in data.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::Parse(format!(
                "{what}: row {i} has {} entries, expected {cols}",
                row.len()
            )));
        }
        for (j, text) in row.iter().enumerate() {
            m.set(i, j, field.parse(text)?);
        }
    }
    Ok(m)
}

fn matrix_to_json(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.entry(i, j).to_string()).collect())
        .collect()
}

/// Parses and fully validates an instance string. Structural problems,
/// shape mismatches and axiom violations are reported as distinct errors.
pub fn parse_instance_str(text: &str) -> Result<Instance, Error> {
    let json: InstanceJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("malformed instance: {e}")))?;
    if json.schema_version != "1" {
        return Err(Error::Parse(format!(
            "unsupported schema_version {:?}",
            json.schema_version
        )));
    }
    let field = parse_field(&json.field)?;

    if let Some(snake) = &json.snake {
        if json.cells.is_some() || json.diff.is_some() || json.k.is_some() {
            return Err(Error::Parse(
                "an instance holds either a snake section or cells/diff, not both".into(),
            ));
        }
        let d = &snake.dims;
        let diagram = SnakeDiagram::new(
            field,
            parse_matrix(field, d.d, d.a, &snake.alpha, "alpha")?,
            parse_matrix(field, d.e, d.b, &snake.beta, "beta")?,
            parse_matrix(field, d.f, d.c, &snake.gamma, "gamma")?,
            parse_matrix(field, d.b, d.a, &snake.ab, "ab")?,
            parse_matrix(field, d.c, d.b, &snake.bc, "bc")?,
            parse_matrix(field, d.e, d.d, &snake.de, "de")?,
            parse_matrix(field, d.f, d.e, &snake.ef, "ef")?,
        )?;
        diagram.validate()?;
        return Ok(Instance {
            field,
            content: InstanceContent::Snake(diagram),
            filtration_override: None,
        });
    }

    let k = json
        .k
        .ok_or_else(|| Error::Parse("instance needs \"k\" (or a \"snake\" section)".into()))?;
    if k == 0 {
        return Err(Error::Parse("k must be at least 1".into()));
    }
    let cells = json.cells.unwrap_or_default();
    let mut cell_list = Vec::with_capacity(cells.len());
    for cell in &cells {
        if cell.deg.len() != k {
            return Err(Error::Parse(format!(
                "cell degree {:?} has {} coordinates, expected k = {k}",
                cell.deg,
                cell.deg.len()
            )));
        }
        cell_list.push((MultiDegree::new(cell.deg.clone()), cell.dim));
    }
    let dim_of = |deg: &[usize]| -> usize {
        cell_list
            .iter()
            .find(|(d, _)| d.coords() == deg)
            .map_or(0, |(_, dim)| *dim)
    };
    let mut diffs = Vec::new();
    for diff in json.diff.unwrap_or_default() {
        if diff.from.len() != k {
            return Err(Error::Parse(format!(
                "differential source {:?} has {} coordinates, expected k = {k}",
                diff.from,
                diff.from.len()
            )));
        }
        if diff.i == 0 || diff.i > k {
            return Err(Error::Parse(format!(
                "differential index {} out of range 1..={k}",
                diff.i
            )));
        }
        let mut target = diff.from.clone();
        target[diff.i - 1] += 1;
        let rows = dim_of(&target);
        let cols = dim_of(&diff.from);
        let what = format!("matrix for d{} at {:?}", diff.i, diff.from);
        let matrix = parse_matrix(field, rows, cols, &diff.matrix, &what)?;
        diffs.push((diff.i, MultiDegree::new(diff.from), matrix));
    }
    let poly = Polycomplex::new(k, field, cell_list, diffs)?;
    poly.validate()?;
    let filtration_override = json.filtration.map(|levels| FiltrationOverride {
        levels: levels.into_iter().map(|l| (l.p, l.n, l.span)).collect(),
    });
    Ok(Instance {
        field,
        content: InstanceContent::Poly(poly),
        filtration_override,
    })
}

pub fn parse_instance(path: impl AsRef<Path>) -> Result<Instance, Error> {
    let text = std::fs::read_to_string(path.as_ref())?;
    parse_instance_str(&text)
}

/// Canonical serialization: cells sorted by degree, differentials by
/// (direction, source), matrices in canonical scalar text form.
pub fn render_instance(instance: &Instance) -> String {
    let field = match instance.field.characteristic() {
        Some(p) => FieldJson {
            kind: "prime".into(),
            p: Some(p),
        },
        None => FieldJson {
            kind: "rational".into(),
            p: None,
        },
    };
    let json = match &instance.content {
        InstanceContent::Poly(v) => {
            let cells: Vec<CellJson> = v
                .dims()
                .iter()
                .map(|(deg, &dim)| CellJson {
                    deg: deg.coords().to_vec(),
                    dim,
                })
                .collect();
            let mut diffs: Vec<DiffJson> = v
                .stored_diffs()
                .map(|(i, from, m)| DiffJson {
                    i,
                    from: from.coords().to_vec(),
                    matrix: matrix_to_json(m),
                })
                .collect();
            diffs.sort_by(|a, b| (a.i, &a.from).cmp(&(b.i, &b.from)));
            InstanceJson {
                schema_version: "1".into(),
                field,
                k: Some(v.k()),
                cells: Some(cells),
                diff: Some(diffs),
                filtration: instance.filtration_override.as_ref().map(|over| {
                    let mut levels: Vec<FiltrationLevelJson> = over
                        .levels
                        .iter()
                        .map(|(p, n, span)| FiltrationLevelJson {
                            p: *p,
                            n: *n,
                            span: span.clone(),
                        })
                        .collect();
                    levels.sort_by_key(|l| (l.n, l.p));
                    levels
                }),
                snake: None,
            }
        }
        InstanceContent::Snake(s) => {
            let [a, b, c, d, e, f] = s.dims();
            InstanceJson {
                schema_version: "1".into(),
                field,
                k: None,
                cells: None,
                diff: None,
                filtration: None,
                snake: Some(SnakeJson {
                    dims: SnakeDimsJson { a, b, c, d, e, f },
                    alpha: matrix_to_json(s.alpha()),
                    beta: matrix_to_json(s.beta()),
                    gamma: matrix_to_json(s.gamma()),
                    ab: matrix_to_json(s.bottom_ab()),
                    bc: matrix_to_json(s.bottom_bc()),
                    de: matrix_to_json(s.top_de()),
                    ef: matrix_to_json(s.top_ef()),
                }),
            }
        }
    };
    serde_json::to_string_pretty(&json).expect("instance serialization cannot fail") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_one_complex_parses() {
        let text = r#"{
            "schema_version": "1",
            "field": {"kind": "prime", "p": 2},
            "k": 1,
            "cells": [{"deg": [0], "dim": 1}]
        }"#;
        let instance = parse_instance_str(text).unwrap();
        let v = instance.polycomplex().unwrap();
        assert_eq!(v.k(), 1);
        assert_eq!(v.dims().len(), 1);
    }

    #[test]
    fn omitted_matrices_are_zero_maps() {
        let text = r#"{
            "schema_version": "1",
            "field": {"kind": "rational"},
            "k": 2,
            "cells": [{"deg": [0,0], "dim": 2}, {"deg": [1,0], "dim": 1}]
        }"#;
        let instance = parse_instance_str(text).unwrap();
        let v = instance.polycomplex().unwrap();
        assert!(v.partial(1, &MultiDegree::new(vec![0, 0])).is_zero());
    }

    #[test]
    fn axiom_violations_are_reported_with_location() {
        // ∂₁∂₂ + ∂₂∂₁ ≠ 0 over GF(3)
        let text = r#"{
            "schema_version": "1",
            "field": {"kind": "prime", "p": 3},
            "k": 2,
            "cells": [
                {"deg": [0,0], "dim": 1}, {"deg": [1,0], "dim": 1},
                {"deg": [0,1], "dim": 1}, {"deg": [1,1], "dim": 1}
            ],
            "diff": [
                {"i": 1, "from": [0,0], "matrix": [["1"]]},
                {"i": 1, "from": [0,1], "matrix": [["1"]]},
                {"i": 2, "from": [0,0], "matrix": [["1"]]},
                {"i": 2, "from": [1,0], "matrix": [["1"]]}
            ]
        }"#;
        let err = parse_instance_str(text).unwrap_err();
        let message = err.to_string();
        assert!(message.contains("(1, 2, (0,0))"), "got: {message}");
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let text = r#"{
            "schema_version": "1",
            "field": {"kind": "prime", "p": 2},
            "k": 1,
            "cells": [{"deg": [0], "dim": 1}],
            "surprise": true
        }"#;
        assert!(matches!(
            parse_instance_str(text).unwrap_err(),
            Error::Parse(_)
        ));
    }

    #[test]
    fn shape_mismatch_is_a_distinct_error() {
        let text = r#"{
            "schema_version": "1",
            "field": {"kind": "prime", "p": 2},
            "k": 1,
            "cells": [{"deg": [0], "dim": 2}, {"deg": [1], "dim": 1}],
            "diff": [{"i": 1, "from": [0], "matrix": [["1"]]}]
        }"#;
        let err = parse_instance_str(text).unwrap_err();
        assert!(err.to_string().contains("row 0 has 1 entries, expected 2"));
    }

    #[test]
    fn round_trip_is_canonical() {
        let mut rng = crate::generate::seeded(50);
        for k in 1..=3usize {
            let v = crate::generate::random_polycomplex(
                &mut rng,
                FieldSpec::prime(5).unwrap(),
                k,
                2,
                2,
            );
            let instance = Instance {
                field: v.field(),
                content: InstanceContent::Poly(v),
                filtration_override: None,
            };
            let rendered = render_instance(&instance);
            let reparsed = parse_instance_str(&rendered).unwrap();
            assert_eq!(render_instance(&reparsed), rendered);
        }
        // snake instances round-trip too
        let s = crate::generate::random_snake_diagram(&mut rng, FieldSpec::rationals(), 3);
        let instance = Instance {
            field: s.field(),
            content: InstanceContent::Snake(s),
            filtration_override: None,
        };
        let rendered = render_instance(&instance);
        let reparsed = parse_instance_str(&rendered).unwrap();
        assert_eq!(render_instance(&reparsed), rendered);
    }

    #[test]
    fn custom_filtrations_are_validated() {
        let text = r#"{
            "schema_version": "1",
            "field": {"kind": "prime", "p": 2},
            "k": 1,
            "cells": [{"deg": [0], "dim": 2}],
            "filtration": [{"p": 1, "n": 0, "span": [["1", "0"]]}]
        }"#;
        let instance = parse_instance_str(text).unwrap();
        let t = instance.polycomplex().unwrap().totalize();
        let fc = instance.custom_filtration(&t).unwrap().unwrap();
        fc.validate().unwrap();
        assert_eq!(fc.filt(1, 0).dim(), 1);
        // level 2 and beyond repeat the last stored level
        assert_eq!(fc.filt(2, 0).dim(), 1);
    }
}
