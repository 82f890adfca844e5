//! JSON serialization for algebras, modules, and counterexample-candidate
//! certificates, plus parsing of the short text specs used by the
//! command-line tools.
//!
//! Scalars are written in their canonical text form (`"3"`, `"-2/7"`); on
//! input, plain JSON integers are accepted as well.  An algebra can be
//! given either in full structure-constant form or as a preset reference.

use std::path::Path;

use serde_json::{json, Map, Value};

use crate::algebra::{preset_algebra, Algebra};
use crate::error::{Error, Result};
use crate::gorenstein::Candidate;
use crate::linalg::{FieldSpec, Matrix, Scalar};
use crate::modrep::{Module, Side};

fn scalar_to_json(s: &Scalar) -> Value {
    Value::String(s.render())
}

fn scalar_from_json(field: FieldSpec, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(t) => Scalar::parse(field, t),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Scalar::from_int(field, i))
            } else {
                Err(Error::Parse(format!("non-integer numeric scalar {n}")))
            }
        }
        other => Err(Error::Parse(format!("expected a scalar, got {other}"))),
    }
}

fn field_to_json(f: FieldSpec) -> Value {
    match f {
        FieldSpec::Rationals => Value::String("Q".into()),
        FieldSpec::Prime(p) => json!({ "Fp": p }),
    }
}

/// Parses a field description: `"Q"` or `{"Fp": p}`.
pub fn field_from_json(v: &Value) -> Result<FieldSpec> {
    match v {
        Value::String(s) if s == "Q" => Ok(FieldSpec::Rationals),
        Value::Object(map) => match map.get("Fp") {
            Some(Value::Number(n)) => {
                let p = n
                    .as_u64()
                    .ok_or_else(|| Error::Parse(format!("bad prime {n}")))?;
                let f = FieldSpec::Prime(p);
                f.validate()?;
                Ok(f)
            }
            _ => Err(Error::Parse("field object needs an integer `Fp`".into())),
        },
        other => Err(Error::Parse(format!(
            "expected \"Q\" or {{\"Fp\": p}}, got {other}"
        ))),
    }
}

/// Parses a field spec string: `Q`, `q`, or a prime number.
pub fn parse_field_spec(s: &str) -> Result<FieldSpec> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Rationals);
    }
    let p: u64 = t
        .parse()
        .map_err(|_| Error::Parse(format!("field must be `Q` or a prime, got {t:?}")))?;
    let f = FieldSpec::Prime(p);
    f.validate()?;
    Ok(f)
}

fn column_to_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|r| scalar_to_json(&m.get(r, 0))).collect())
}

fn column_from_json(field: FieldSpec, v: &Value, dim: usize) -> Result<Matrix> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected a vector, got {v}")))?;
    if arr.len() != dim {
        return Err(Error::Parse(format!(
            "vector has length {}, expected {}",
            arr.len(),
            dim
        )));
    }
    let mut out = Matrix::zero(field, dim, 1);
    for (r, entry) in arr.iter().enumerate() {
        out.set(r, 0, scalar_from_json(field, entry)?);
    }
    Ok(out)
}

fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| {
                Value::Array((0..m.cols()).map(|c| scalar_to_json(&m.get(r, c))).collect())
            })
            .collect(),
    )
}

fn matrix_from_json(field: FieldSpec, v: &Value, rows: usize, cols: usize) -> Result<Matrix> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected a matrix, got {v}")))?;
    if arr.len() != rows {
        return Err(Error::Parse(format!(
            "matrix has {} rows, expected {}",
            arr.len(),
            rows
        )));
    }
    let mut out = Matrix::zero(field, rows, cols);
    for (r, row) in arr.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Parse("matrix row is not an array".into()))?;
        if row.len() != cols {
            return Err(Error::Parse(format!(
                "matrix row {} has {} entries, expected {}",
                r,
                row.len(),
                cols
            )));
        }
        for (c, entry) in row.iter().enumerate() {
            out.set(r, c, scalar_from_json(field, entry)?);
        }
    }
    Ok(out)
}

/// Serializes an algebra in full structure-constant form.
pub fn algebra_to_json(a: &Algebra) -> Value {
    let dim = a.dim();
    let mul: Vec<Value> = (0..dim)
        .map(|i| {
            Value::Array(
                (0..dim)
                    .map(|j| column_to_json(&a.basis_product(i, j)))
                    .collect(),
            )
        })
        .collect();
    let idempotents: Vec<Value> = (0..a.num_idempotents())
        .map(|i| column_to_json(a.idempotent(i)))
        .collect();
    let rad = a.radical_basis();
    let radical: Vec<Value> = (0..rad.cols()).map(|c| column_to_json(&rad.column(c))).collect();
    json!({
        "field": field_to_json(a.field()),
        "dim": dim,
        "name": a.name(),
        "labels": a.labels(),
        "unit": column_to_json(a.unit()),
        "mul": mul,
        "idempotents": idempotents,
        "radical": radical,
    })
}

fn get<'a>(map: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    map.get(key)
        .ok_or_else(|| Error::Parse(format!("missing key `{key}`")))
}

/// Rebuilds an algebra from JSON: either a preset reference
/// (`{"field": ..., "preset": name, "n": k?}`) or full structure-constant
/// form.  The preset name `k_x_mod_xn` is accepted as an alias for the
/// truncated polynomial family.
pub fn algebra_from_json(v: &Value) -> Result<Algebra> {
    let map = v
        .as_object()
        .ok_or_else(|| Error::Parse("algebra must be a JSON object".into()))?;
    let field = field_from_json(get(map, "field")?)?;
    if let Some(preset) = map.get("preset") {
        let name = preset
            .as_str()
            .ok_or_else(|| Error::Parse("preset name must be a string".into()))?;
        let name = if name == "k_x_mod_xn" { "kxn" } else { name };
        let n = match map.get("n") {
            None | Some(Value::Null) => None,
            Some(Value::Number(k)) => Some(
                k.as_u64()
                    .ok_or_else(|| Error::Parse(format!("bad preset order {k}")))?
                    as usize,
            ),
            Some(other) => return Err(Error::Parse(format!("bad preset order {other}"))),
        };
        return preset_algebra(field, name, n);
    }

    let dim = get(map, "dim")?
        .as_u64()
        .ok_or_else(|| Error::Parse("`dim` must be an integer".into()))? as usize;
    let labels: Vec<String> = match map.get("labels") {
        Some(Value::Array(arr)) => arr
            .iter()
            .map(|l| {
                l.as_str()
                    .map(str::to_owned)
                    .ok_or_else(|| Error::Parse("labels must be strings".into()))
            })
            .collect::<Result<_>>()?,
        None => (0..dim).map(|i| format!("b{i}")).collect(),
        Some(other) => return Err(Error::Parse(format!("bad labels {other}"))),
    };
    if labels.len() != dim {
        return Err(Error::Parse(format!(
            "{} labels for dimension {}",
            labels.len(),
            dim
        )));
    }
    let name = match map.get("name") {
        Some(Value::String(s)) => s.clone(),
        _ => "loaded".to_string(),
    };
    let unit = column_from_json(field, get(map, "unit")?, dim)?;
    let mul_arr = get(map, "mul")?
        .as_array()
        .ok_or_else(|| Error::Parse("`mul` must be an array".into()))?;
    if mul_arr.len() != dim {
        return Err(Error::Parse(format!(
            "`mul` has {} rows, expected {}",
            mul_arr.len(),
            dim
        )));
    }
    let mut mul = Vec::with_capacity(dim);
    for row in mul_arr {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Parse("`mul` row is not an array".into()))?;
        if row.len() != dim {
            return Err(Error::Parse(format!(
                "`mul` row has {} entries, expected {}",
                row.len(),
                dim
            )));
        }
        let mut out_row = Vec::with_capacity(dim);
        for entry in row {
            out_row.push(column_from_json(field, entry, dim)?);
        }
        mul.push(out_row);
    }
    let idempotents = get(map, "idempotents")?
        .as_array()
        .ok_or_else(|| Error::Parse("`idempotents` must be an array".into()))?
        .iter()
        .map(|e| column_from_json(field, e, dim))
        .collect::<Result<Vec<_>>>()?;
    let rad_cols = get(map, "radical")?
        .as_array()
        .ok_or_else(|| Error::Parse("`radical` must be an array".into()))?
        .iter()
        .map(|c| column_from_json(field, c, dim))
        .collect::<Result<Vec<_>>>()?;
    let radical = if rad_cols.is_empty() {
        Matrix::zero(field, dim, 0)
    } else {
        Matrix::hstack(&rad_cols.iter().collect::<Vec<_>>())
    };
    Algebra::new(field, labels, name, unit, &mul, idempotents, radical)
}

/// Serializes a module together with its algebra.
pub fn module_to_json(m: &Module) -> Value {
    json!({
        "algebra": algebra_to_json(&m.base_algebra()),
        "side": match m.side() { Side::Left => "left", Side::Right => "right" },
        "dim": m.dim(),
        "label": m.label(),
        "action": m.actions().iter().map(matrix_to_json).collect::<Vec<_>>(),
    })
}

fn side_from_json(v: &Value) -> Result<Side> {
    match v.as_str() {
        Some("left") => Ok(Side::Left),
        Some("right") => Ok(Side::Right),
        other => Err(Error::Parse(format!(
            "side must be \"left\" or \"right\", got {other:?}"
        ))),
    }
}

/// Rebuilds a module from JSON produced by [`module_to_json`], re-running
/// the full verification chain on both the algebra and the action.
pub fn module_from_json(v: &Value) -> Result<Module> {
    let map = v
        .as_object()
        .ok_or_else(|| Error::Parse("module must be a JSON object".into()))?;
    let algebra = algebra_from_json(get(map, "algebra")?)?;
    module_from_json_over(&algebra, v)
}

/// Rebuilds a module from JSON over an already-loaded algebra; the JSON's
/// own `algebra` entry, when present, must describe the same structure.
pub fn module_from_json_over(a: &Algebra, v: &Value) -> Result<Module> {
    let map = v
        .as_object()
        .ok_or_else(|| Error::Parse("module must be a JSON object".into()))?;
    if let Some(alg) = map.get("algebra") {
        let other = algebra_from_json(alg)?;
        if !other.same_structure(a) {
            return Err(Error::AlgebraMismatch(
                "module file is over a different algebra".into(),
            ));
        }
    }
    let side = side_from_json(get(map, "side")?)?;
    let dim = get(map, "dim")?
        .as_u64()
        .ok_or_else(|| Error::Parse("`dim` must be an integer".into()))? as usize;
    let label = match map.get("label") {
        Some(Value::String(s)) => s.clone(),
        _ => "loaded".to_string(),
    };
    let action_arr = get(map, "action")?
        .as_array()
        .ok_or_else(|| Error::Parse("`action` must be an array".into()))?;
    if action_arr.len() != a.dim() {
        return Err(Error::Parse(format!(
            "`action` has {} matrices, expected {}",
            action_arr.len(),
            a.dim()
        )));
    }
    let action = action_arr
        .iter()
        .map(|entry| matrix_from_json(a.field(), entry, dim, dim))
        .collect::<Result<Vec<_>>>()?;
    Module::new_over(a, side, action, label)
}

/// Serializes a counterexample candidate; the embedded module (and its
/// algebra) make the certificate self-contained.
pub fn candidate_to_json(c: &Candidate) -> Value {
    json!({
        "rung": c.rung,
        "bound": c.bound,
        "witness": c.witness,
        "caveat": c.caveat,
        "module": module_to_json(&c.module),
    })
}

/// Rebuilds a candidate certificate, re-verifying the embedded algebra and
/// module structure.
pub fn candidate_from_json(v: &Value) -> Result<Candidate> {
    let map = v
        .as_object()
        .ok_or_else(|| Error::Parse("candidate must be a JSON object".into()))?;
    Ok(Candidate {
        rung: get(map, "rung")?
            .as_str()
            .ok_or_else(|| Error::Parse("`rung` must be a string".into()))?
            .to_string(),
        bound: get(map, "bound")?
            .as_u64()
            .ok_or_else(|| Error::Parse("`bound` must be an integer".into()))? as usize,
        witness: get(map, "witness")?
            .as_str()
            .unwrap_or_default()
            .to_string(),
        caveat: get(map, "caveat")?.as_str().unwrap_or_default().to_string(),
        module: module_from_json(get(map, "module")?)?,
    })
}

/// Loads an algebra from a JSON file.
pub fn load_algebra(path: &Path) -> Result<Algebra> {
    let text = std::fs::read_to_string(path)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    algebra_from_json(&v)
}

/// Saves an algebra as pretty-printed JSON.
pub fn save_algebra(a: &Algebra, path: &Path) -> Result<()> {
    let text = serde_json::to_string_pretty(&algebra_to_json(a)).expect("value serializes");
    std::fs::write(path, text + "\n")?;
    Ok(())
}

/// Loads a module (with its algebra) from a JSON file.
pub fn load_module(path: &Path) -> Result<Module> {
    let text = std::fs::read_to_string(path)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    module_from_json(&v)
}

/// Saves a module as pretty-printed JSON.
pub fn save_module(m: &Module, path: &Path) -> Result<()> {
    let text = serde_json::to_string_pretty(&module_to_json(m)).expect("value serializes");
    std::fs::write(path, text + "\n")?;
    Ok(())
}

/// Resolves an algebra spec: `preset:NAME` (e.g. `preset:kx3`, with the
/// alias `preset:k_x_mod_xn:N`), or a path to a JSON file.
pub fn parse_algebra_spec(field: FieldSpec, spec: &str) -> Result<Algebra> {
    if let Some(rest) = spec.strip_prefix("preset:") {
        let (name, n) = match rest.split_once(':') {
            Some((name, n_str)) => {
                let n = n_str
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad preset order {n_str:?}")))?;
                (name, Some(n))
            }
            None => (rest, None),
        };
        let name = if name == "k_x_mod_xn" { "kxn" } else { name };
        return preset_algebra(field, name, n);
    }
    load_algebra(Path::new(spec))
}

/// Resolves a module spec over a loaded algebra: `regular`, `zero`,
/// `simple:i`, `projective:i` (indices are 1-based), each optionally
/// prefixed with `right:` (or `left:`), or a path to a JSON file.
pub fn parse_module_spec(a: &Algebra, spec: &str) -> Result<Module> {
    let (side, rest) = if let Some(r) = spec.strip_prefix("right:") {
        (Side::Right, r)
    } else if let Some(r) = spec.strip_prefix("left:") {
        (Side::Left, r)
    } else {
        (Side::Left, spec)
    };
    let indexed = |body: &str| -> Result<usize> {
        let i: usize = body
            .parse()
            .map_err(|_| Error::Parse(format!("bad module index {body:?}")))?;
        if i == 0 || i > a.num_idempotents() {
            return Err(Error::Parse(format!(
                "module index {} out of range 1..={}",
                i,
                a.num_idempotents()
            )));
        }
        Ok(i - 1)
    };
    match rest {
        "regular" => Ok(Module::regular(a, side)),
        "zero" => Ok(Module::zero(a, side)),
        _ => {
            if let Some(body) = rest.strip_prefix("simple:") {
                return Ok(Module::simple(a, side, indexed(body)?));
            }
            if let Some(body) = rest.strip_prefix("projective:") {
                return Ok(Module::projective(a, side, indexed(body)?));
            }
            if side != Side::Left {
                return Err(Error::Parse(
                    "side prefixes only apply to named module presets, not files".into(),
                ));
            }
            let m = load_module(Path::new(rest))?;
            if !m.base_algebra().same_structure(a) {
                return Err(Error::AlgebraMismatch(
                    "module file is over a different algebra".into(),
                ));
            }
            Ok(m)
        }
    }
}
