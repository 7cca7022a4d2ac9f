//! Canonical JSON wire format shared by the library and the CLI.
//!
//! Writers are deterministic: object keys appear in a fixed documented
//! order, rationals serialize as exact `"p"` or `"p/q"` strings, and zero
//! terms are omitted where the format allows it. Parsers are strict:
//! unknown keys, wrong JSON shapes, and malformed rationals all fail with
//! [`Error::Parse`].
//!
//! Formats:
//! - multivector — `{"blades": {<key>: <rational>}}`, key `"1"` for the
//!   scalar blade, otherwise `"e"` + index characters `1,2,3,o,i` in
//!   ascending order (`"i"` is the vector at infinity); zero coefficients
//!   omitted, keys emitted in ascending blade-mask order;
//! - four-quaternion — `{"q0": [w,x,y,z], "q1": …, "q2": …, "q3": …}` with
//!   rational strings; writers always emit all four keys, parsers treat a
//!   missing key as zero;
//! - rational polynomial — bare array of rational strings, ascending degree;
//! - rotor polynomial — `{"coeffs": [<fourquat>, …]}`, ascending degree;
//! - motion — `{"blade": {"a": <multivector>, "b": <multivector>}}` or
//!   `{"direction": <fourquat>}`;
//! - factorization list — `[{"quadratics": [<poly>, …], "factors":
//!   [<fourquat>, …], "kinds": [<motion name or null>, …]}, …]`.

use serde_json::{json, Map, Value};

use crate::dorst::{
    line_normalize, motion_from_blade, motion_from_direction, Blade2, DorstMotion, MotionType,
    TrajectorySample,
};
use crate::error::Error;
use crate::fourquat::FourQuat;
use crate::geometry::VectorKind;
use crate::multivector::{blade_key, parse_blade_key, Multivector};
use crate::quaternion::Quaternion;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::realpoly::RealPoly;
use crate::rotorpoly::{Factorization, RotorPoly};
use crate::study::{StudyResidual, GENERATOR_LABELS};

// ---------------------------------------------------------------------------
// strict-shape helpers

fn as_object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>, Error> {
    v.as_object()
        .ok_or_else(|| Error::Parse(format!("{what} must be a JSON object")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a [Value], Error> {
    v.as_array()
        .map(Vec::as_slice)
        .ok_or_else(|| Error::Parse(format!("{what} must be a JSON array")))
}

fn as_str<'a>(v: &'a Value, what: &str) -> Result<&'a str, Error> {
    v.as_str()
        .ok_or_else(|| Error::Parse(format!("{what} must be a JSON string")))
}

fn reject_unknown_keys(
    obj: &Map<String, Value>,
    allowed: &[&str],
    what: &str,
) -> Result<(), Error> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(Error::Parse(format!("unknown key {key:?} in {what}")));
        }
    }
    Ok(())
}

fn rational_from_json(v: &Value, what: &str) -> Result<Rational, Error> {
    parse_rational(as_str(v, what)?)
}

fn rational_to_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

// ---------------------------------------------------------------------------
// multivector

/// Serializes a multivector as `{"blades": {...}}` with keys in ascending
/// blade-mask order and zero coefficients omitted.
pub fn mv_to_json(m: &Multivector) -> Value {
    let mut blades = Map::new();
    for (mask, c) in m.iter() {
        blades.insert(blade_key(mask), rational_to_json(c));
    }
    json!({ "blades": blades })
}

/// Parses the multivector format; omitted blades are zero.
pub fn mv_from_json(v: &Value) -> Result<Multivector, Error> {
    let obj = as_object(v, "multivector")?;
    reject_unknown_keys(obj, &["blades"], "multivector")?;
    let blades = obj
        .get("blades")
        .ok_or_else(|| Error::Parse("multivector is missing the \"blades\" key".into()))?;
    let blades = as_object(blades, "\"blades\"")?;
    let mut pairs = Vec::with_capacity(blades.len());
    for (key, val) in blades {
        let mask = parse_blade_key(key)?;
        pairs.push((mask, rational_from_json(val, &format!("blade {key:?}"))?));
    }
    Ok(Multivector::from_pairs(pairs))
}

// ---------------------------------------------------------------------------
// quaternions and four-quaternions

fn quat_to_json(q: &Quaternion) -> Value {
    Value::Array(vec![
        rational_to_json(&q.w),
        rational_to_json(&q.x),
        rational_to_json(&q.y),
        rational_to_json(&q.z),
    ])
}

fn quat_from_json(v: &Value, what: &str) -> Result<Quaternion, Error> {
    let arr = as_array(v, what)?;
    if arr.len() != 4 {
        return Err(Error::Parse(format!(
            "{what} must be an array of 4 rational strings [w,x,y,z]"
        )));
    }
    Ok(Quaternion::new(
        rational_from_json(&arr[0], what)?,
        rational_from_json(&arr[1], what)?,
        rational_from_json(&arr[2], what)?,
        rational_from_json(&arr[3], what)?,
    ))
}

const FQ_KEYS: [&str; 4] = ["q0", "q1", "q2", "q3"];

/// Serializes a four-quaternion; all four keys are always present.
pub fn fourquat_to_json(f: &FourQuat) -> Value {
    json!({
        "q0": quat_to_json(&f.q0),
        "q1": quat_to_json(&f.q1),
        "q2": quat_to_json(&f.q2),
        "q3": quat_to_json(&f.q3),
    })
}

/// Parses the four-quaternion format; missing keys are zero.
pub fn fourquat_from_json(v: &Value) -> Result<FourQuat, Error> {
    let obj = as_object(v, "four-quaternion")?;
    reject_unknown_keys(obj, &FQ_KEYS, "four-quaternion")?;
    let mut parts = [
        Quaternion::zero(),
        Quaternion::zero(),
        Quaternion::zero(),
        Quaternion::zero(),
    ];
    for (slot, key) in FQ_KEYS.iter().enumerate() {
        if let Some(val) = obj.get(*key) {
            parts[slot] = quat_from_json(val, &format!("\"{key}\""))?;
        }
    }
    let [q0, q1, q2, q3] = parts;
    Ok(FourQuat::new(q0, q1, q2, q3))
}

/// One parsed even element, in whichever of the two formats it arrived.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    Multivector(Multivector),
    FourQuat(FourQuat),
}

/// Auto-detects a multivector (`"blades"` key) vs a four-quaternion
/// (`"q0"`…`"q3"` keys). An object with neither is rejected as ambiguous.
pub fn element_from_json(v: &Value) -> Result<Element, Error> {
    let obj = as_object(v, "element")?;
    if obj.contains_key("blades") {
        return Ok(Element::Multivector(mv_from_json(v)?));
    }
    if FQ_KEYS.iter().any(|k| obj.contains_key(*k)) {
        return Ok(Element::FourQuat(fourquat_from_json(v)?));
    }
    Err(Error::Parse(
        "element must carry a \"blades\" key (multivector) or \"q0\"…\"q3\" keys (four-quaternion)"
            .into(),
    ))
}

// ---------------------------------------------------------------------------
// polynomials

/// Serializes a rational polynomial as a bare array of rational strings,
/// ascending degree.
pub fn realpoly_to_json(p: &RealPoly) -> Value {
    Value::Array(p.coeffs().iter().map(rational_to_json).collect())
}

/// Parses the rational-polynomial format (trailing zeros are trimmed).
pub fn realpoly_from_json(v: &Value) -> Result<RealPoly, Error> {
    let arr = as_array(v, "rational polynomial")?;
    let coeffs = arr
        .iter()
        .map(|c| rational_from_json(c, "polynomial coefficient"))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RealPoly::new(coeffs))
}

/// Serializes a rotor polynomial as `{"coeffs": [...]}`, ascending degree.
pub fn rotorpoly_to_json(p: &RotorPoly) -> Value {
    let coeffs: Vec<Value> = p.coeffs().iter().map(fourquat_to_json).collect();
    json!({ "coeffs": coeffs })
}

/// Parses the rotor-polynomial format (trailing zeros are trimmed).
pub fn rotorpoly_from_json(v: &Value) -> Result<RotorPoly, Error> {
    let obj = as_object(v, "rotor polynomial")?;
    reject_unknown_keys(obj, &["coeffs"], "rotor polynomial")?;
    let coeffs = obj
        .get("coeffs")
        .ok_or_else(|| Error::Parse("rotor polynomial is missing the \"coeffs\" key".into()))?;
    let coeffs = as_array(coeffs, "\"coeffs\"")?
        .iter()
        .map(fourquat_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RotorPoly::new(coeffs))
}

// ---------------------------------------------------------------------------
// motions

/// Serializes a motion by its stored blade: `{"blade": {"a": …, "b": …}}`.
/// The output re-parses (via [`motion_from_json`]) to a motion with the
/// identical direction, blade, kind, and branch.
pub fn motion_to_json(m: &DorstMotion) -> Value {
    blade_to_json(&m.blade)
}

/// Serializes a 2-blade in the motion format.
pub fn blade_to_json(b: &Blade2) -> Value {
    json!({ "blade": { "a": mv_to_json(&b.a), "b": mv_to_json(&b.b) } })
}

/// Parses either motion format and builds the motion, validating the line
/// conditions (grade-1 factors, nonzero wedge, direction on the variety).
pub fn motion_from_json(v: &Value) -> Result<DorstMotion, Error> {
    let obj = as_object(v, "motion")?;
    reject_unknown_keys(obj, &["blade", "direction"], "motion")?;
    match (obj.get("blade"), obj.get("direction")) {
        (Some(blade), None) => {
            let blade = as_object(blade, "\"blade\"")?;
            reject_unknown_keys(blade, &["a", "b"], "\"blade\"")?;
            let missing = |k: &str| Error::Parse(format!("\"blade\" is missing the {k:?} key"));
            let a = mv_from_json(blade.get("a").ok_or_else(|| missing("a"))?)?;
            let b = mv_from_json(blade.get("b").ok_or_else(|| missing("b"))?)?;
            motion_from_blade(&a, &b)
        }
        (None, Some(direction)) => {
            let q = fourquat_from_json(direction)?;
            Ok(motion_from_direction(line_normalize(&q)?))
        }
        _ => Err(Error::Parse(
            "motion must carry exactly one of the keys \"blade\" and \"direction\"".into(),
        )),
    }
}

// ---------------------------------------------------------------------------
// classification output

/// Serializes the ten variety generators as an array of labeled rational
/// strings, in the fixed order of [`GENERATOR_LABELS`].
pub fn residual_to_json(r: &StudyResidual) -> Value {
    let entries: Vec<Value> = GENERATOR_LABELS
        .iter()
        .zip(r.values())
        .map(|(label, value)| json!({ "label": label, "value": rational_to_json(value) }))
        .collect();
    Value::Array(entries)
}

fn coords_to_json(x: &[Rational; 3]) -> Value {
    Value::Array(x.iter().map(rational_to_json).collect())
}

/// Serializes a classified grade-1 vector with its stable `"tag"` plus the
/// per-kind geometric fields.
pub fn vector_kind_to_json(k: &VectorKind) -> Value {
    match k {
        VectorKind::FinitePoint { center, weight } => json!({
            "tag": k.tag(),
            "center": coords_to_json(center),
            "weight": rational_to_json(weight),
        }),
        VectorKind::RealSphere { center, radius_sq, weight }
        | VectorKind::ImaginarySphere { center, radius_sq, weight } => json!({
            "tag": k.tag(),
            "center": coords_to_json(center),
            "radius_sq": rational_to_json(radius_sq),
            "weight": rational_to_json(weight),
        }),
        VectorKind::Plane { normal, offset } => json!({
            "tag": k.tag(),
            "normal": coords_to_json(normal),
            "offset": rational_to_json(offset),
        }),
        VectorKind::PointAtInfinity { weight } => json!({
            "tag": k.tag(),
            "weight": rational_to_json(weight),
        }),
    }
}

/// Serializes a classification outcome; failures (e.g. a zero or non-vector
/// image) become `{"tag": "invalid", "error": <code>}`.
pub fn kind_result_to_json(r: &Result<VectorKind, Error>) -> Value {
    match r {
        Ok(kind) => vector_kind_to_json(kind),
        Err(e) => json!({ "tag": "invalid", "error": e.code() }),
    }
}

/// Serializes trajectory samples as a list of `{"t", "image", "kind"}`.
pub fn samples_to_json(samples: &[TrajectorySample]) -> Value {
    let entries: Vec<Value> = samples
        .iter()
        .map(|s| {
            json!({
                "t": rational_to_json(&s.t),
                "image": mv_to_json(&s.image),
                "kind": kind_result_to_json(&s.kind),
            })
        })
        .collect();
    Value::Array(entries)
}

// ---------------------------------------------------------------------------
// factorizations

fn motion_type_from_name(name: &str) -> Result<MotionType, Error> {
    for kind in [
        MotionType::ConformalRotation,
        MotionType::EuclideanRotation,
        MotionType::Transversion,
        MotionType::Translation,
        MotionType::ConformalScaling,
        MotionType::UniformScaling,
    ] {
        if kind.name() == name {
            return Ok(kind);
        }
    }
    Err(Error::Parse(format!("unknown motion kind {name:?}")))
}

/// Serializes a factorization list: one entry per ordering, each with its
/// quadratic sequence, ordered factors, and per-factor motion kinds
/// (`null` for constant factors).
pub fn factorizations_to_json(fs: &[Factorization]) -> Value {
    let entries: Vec<Value> = fs
        .iter()
        .map(|f| {
            let quadratics: Vec<Value> = f.quadratics.iter().map(realpoly_to_json).collect();
            let factors: Vec<Value> = f.factors.iter().map(fourquat_to_json).collect();
            let kinds: Vec<Value> = f
                .kinds
                .iter()
                .map(|k| match k {
                    Some(kind) => Value::String(kind.name().to_string()),
                    None => Value::Null,
                })
                .collect();
            json!({ "quadratics": quadratics, "factors": factors, "kinds": kinds })
        })
        .collect();
    Value::Array(entries)
}

/// Parses a factorization list back into values (inverse of
/// [`factorizations_to_json`]).
pub fn factorizations_from_json(v: &Value) -> Result<Vec<Factorization>, Error> {
    let entries = as_array(v, "factorization list")?;
    let mut out = Vec::with_capacity(entries.len());
    for entry in entries {
        let obj = as_object(entry, "factorization")?;
        reject_unknown_keys(obj, &["quadratics", "factors", "kinds"], "factorization")?;
        let field = |k: &str| {
            obj.get(k)
                .ok_or_else(|| Error::Parse(format!("factorization is missing the {k:?} key")))
        };
        let quadratics = as_array(field("quadratics")?, "\"quadratics\"")?
            .iter()
            .map(realpoly_from_json)
            .collect::<Result<Vec<_>, _>>()?;
        let factors = as_array(field("factors")?, "\"factors\"")?
            .iter()
            .map(fourquat_from_json)
            .collect::<Result<Vec<_>, _>>()?;
        let kinds = as_array(field("kinds")?, "\"kinds\"")?
            .iter()
            .map(|k| match k {
                Value::Null => Ok(None),
                other => Ok(Some(motion_type_from_name(as_str(other, "motion kind")?)?)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if kinds.len() != factors.len() {
            return Err(Error::Parse(
                "factorization \"kinds\" and \"factors\" must have equal length".into(),
            ));
        }
        out.push(Factorization { factors, quadratics, kinds });
    }
    Ok(out)
}
