//! JSON encoding of groups, homomorphisms and CRT-modules.
//!
//! Integers are written as JSON numbers when they fit in 64 bits and as
//! decimal strings otherwise; both forms are accepted on input.

use serde_json::{json, Map, Value};

use crate::crt::{CrtModule, Op, Part, WINDOW};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::zlinalg::{FinAbGroup, GroupHom, Matrix};

fn int_to_json<S: Scalar>(x: &S) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn int_from_json<S: Scalar>(v: &Value) -> Result<S> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(S::from_int)
            .ok_or_else(|| Error::Parse(format!("not an integer: {n}"))),
        Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("not an integer: {s:?}"))),
        other => Err(Error::Parse(format!("expected an integer, got {other}"))),
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::Parse(format!("{what}: expected an array")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
}

/// `{"torsion":[...],"rank":n}`.
pub fn group_to_json<S: Scalar>(g: &FinAbGroup<S>) -> Value {
    json!({
        "torsion": g.torsion().iter().map(int_to_json).collect::<Vec<_>>(),
        "rank": g.rank(),
    })
}

pub fn group_from_json<S: Scalar>(v: &Value) -> Result<FinAbGroup<S>> {
    let torsion = array(field(v, "torsion")?, "torsion")?
        .iter()
        .map(int_from_json)
        .collect::<Result<Vec<S>>>()?;
    let rank = field(v, "rank")?
        .as_u64()
        .ok_or_else(|| Error::Parse("rank must be a non-negative integer".into()))? as usize;
    FinAbGroup::new(torsion, rank)
}

fn matrix_to_json<S: Scalar>(m: &Matrix<S>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(int_to_json).collect()))
            .collect(),
    )
}

fn matrix_from_json<S: Scalar>(v: &Value, rows: usize, cols: usize) -> Result<Matrix<S>> {
    let rs = array(v, "matrix")?;
    if rs.len() != rows {
        return Err(Error::Shape(format!("matrix has {} rows, expected {rows}", rs.len())));
    }
    let mut out = Vec::with_capacity(rows);
    for r in rs {
        let r = array(r, "matrix row")?;
        if r.len() != cols {
            return Err(Error::Shape(format!("matrix row has {} entries, expected {cols}", r.len())));
        }
        out.push(r.iter().map(int_from_json).collect::<Result<Vec<S>>>()?);
    }
    Ok(Matrix::from_rows(out, cols))
}

/// `{"dom":…,"cod":…,"matrix":[[...]]}`.
pub fn hom_to_json<S: Scalar>(h: &GroupHom<S>) -> Value {
    json!({
        "dom": group_to_json(h.domain()),
        "cod": group_to_json(h.codomain()),
        "matrix": matrix_to_json(h.matrix()),
    })
}

pub fn hom_from_json<S: Scalar>(v: &Value) -> Result<GroupHom<S>> {
    let dom: FinAbGroup<S> = group_from_json(field(v, "dom")?)?;
    let cod: FinAbGroup<S> = group_from_json(field(v, "cod")?)?;
    let m = matrix_from_json(field(v, "matrix")?, cod.ngens(), dom.ngens())?;
    GroupHom::new(dom, cod, m)
}

const PART_KEYS: [&str; 3] = ["MO", "MU", "MT"];

/// `{"MO":[8 groups],"MU":[…],"MT":[…],"ops":{"c":[8 homs],…}}`.
pub fn module_to_json<S: Scalar>(m: &CrtModule<S>) -> Value {
    let mut obj = Map::new();
    for p in Part::ALL {
        obj.insert(
            PART_KEYS[p.index()].to_string(),
            Value::Array(m.part(p).iter().map(group_to_json).collect()),
        );
    }
    let mut ops = Map::new();
    for op in Op::ALL {
        ops.insert(
            op.name().to_string(),
            Value::Array((0..WINDOW as i64).map(|n| hom_to_json(m.op(op, n))).collect()),
        );
    }
    obj.insert("ops".to_string(), Value::Object(ops));
    Value::Object(obj)
}

pub fn module_from_json<S: Scalar>(v: &Value) -> Result<CrtModule<S>> {
    let mut groups: [Vec<FinAbGroup<S>>; 3] = Default::default();
    for p in Part::ALL {
        let key = PART_KEYS[p.index()];
        let gs = array(field(v, key)?, key)?;
        if gs.len() != WINDOW {
            return Err(Error::Shape(format!("{key} must list 8 groups")));
        }
        groups[p.index()] = gs.iter().map(group_from_json).collect::<Result<_>>()?;
    }
    let ops_v = field(v, "ops")?;
    let mut homs = Vec::new();
    for op in Op::ALL {
        let fam = array(field(ops_v, op.name())?, op.name())?;
        if fam.len() != WINDOW {
            return Err(Error::Shape(format!("ops.{} must list 8 maps", op.name())));
        }
        homs.push(fam.iter().map(hom_from_json).collect::<Result<Vec<_>>>()?);
    }
    CrtModule::from_homs(groups, homs)
}
