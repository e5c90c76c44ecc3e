//! JSON encodings with scalars as canonical rational strings.

use serde_json::{json, Value};

use crate::caps::Realization2;
use crate::error::{Error, Result};
use crate::kernel::parse_rational;
use crate::{AnyLine3, ConvexPoly2, Line2, Line3, Plane3, Point2, Point3, Polytope3, Scalar};

fn bad(what: &str) -> Error {
    Error::Parse(format!("malformed {what}"))
}

pub fn scalar(v: &Scalar) -> Value {
    Value::String(v.to_string())
}

pub fn parse_scalar(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => parse_rational(s).ok_or_else(|| Error::Parse(format!("bad rational `{s}`"))),
        Value::Number(n) if n.is_i64() => Ok(Scalar::from_integer(n.as_i64().expect("i64").into())),
        _ => Err(bad("scalar")),
    }
}

fn scalars<const N: usize>(v: &Value, what: &str) -> Result<[Scalar; N]> {
    let arr = v.as_array().filter(|a| a.len() == N).ok_or_else(|| bad(what))?;
    let vals: Vec<Scalar> = arr.iter().map(parse_scalar).collect::<Result<_>>()?;
    vals.try_into().map_err(|_| bad(what))
}

pub fn point2(p: &Point2) -> Value {
    json!([scalar(&p.x), scalar(&p.y)])
}

pub fn parse_point2(v: &Value) -> Result<Point2> {
    let [x, y] = scalars::<2>(v, "point")?;
    Ok(Point2::new(x, y))
}

pub fn point3(p: &Point3) -> Value {
    json!([scalar(&p.x), scalar(&p.y), scalar(&p.z)])
}

pub fn parse_point3(v: &Value) -> Result<Point3> {
    let [x, y, z] = scalars::<3>(v, "point")?;
    Ok(Point3::new(x, y, z))
}

pub fn line3(l: &Line3) -> Value {
    json!({"base": point3(&l.base), "dir": l.dir.iter().map(scalar).collect::<Vec<_>>()})
}

pub fn any_line3(l: &AnyLine3) -> Value {
    json!({"base": point3(&l.base), "dir": l.dir.iter().map(scalar).collect::<Vec<_>>()})
}

pub fn parse_line3(v: &Value) -> Result<Line3> {
    let base = parse_point3(v.get("base").ok_or_else(|| bad("line"))?)?;
    let dir = scalars::<3>(v.get("dir").ok_or_else(|| bad("line"))?, "direction")?;
    Line3::new(base, dir)
}

pub fn parse_any_line3(v: &Value) -> Result<AnyLine3> {
    let base = parse_point3(v.get("base").ok_or_else(|| bad("line"))?)?;
    let dir = scalars::<3>(v.get("dir").ok_or_else(|| bad("line"))?, "direction")?;
    AnyLine3::new(base, dir)
}

pub fn line2(l: &Line2) -> Value {
    json!({"slope": scalar(&l.slope), "intercept": scalar(&l.intercept)})
}

pub fn parse_line2(v: &Value) -> Result<Line2> {
    let f = |k: &str| parse_scalar(v.get(k).ok_or_else(|| bad("planar line"))?);
    Ok(Line2::new(f("slope")?, f("intercept")?))
}

pub fn plane3(h: &Plane3) -> Value {
    json!({"coef": h.coef.iter().map(scalar).collect::<Vec<_>>()})
}

pub fn parse_plane3(v: &Value) -> Result<Plane3> {
    let [a, b, c, d] = scalars::<4>(v.get("coef").ok_or_else(|| bad("plane"))?, "plane")?;
    Plane3::new(a, b, c, d)
}

pub fn polygon(p: &ConvexPoly2) -> Value {
    json!({"vertices": p.vertices().iter().map(point2).collect::<Vec<_>>()})
}

pub fn parse_polygon(v: &Value) -> Result<ConvexPoly2> {
    let vs = v.get("vertices").and_then(Value::as_array).ok_or_else(|| bad("polygon"))?;
    let pts: Vec<Point2> = vs.iter().map(parse_point2).collect::<Result<_>>()?;
    ConvexPoly2::from_vertices(pts)
}

pub fn polytope(p: &Polytope3) -> Value {
    json!({"vertices": p.vertices().iter().map(point3).collect::<Vec<_>>(), "dim": p.dim()})
}

pub fn parse_polytope(v: &Value) -> Result<Polytope3> {
    let vs = v.get("vertices").and_then(Value::as_array).ok_or_else(|| bad("polytope"))?;
    if vs.is_empty() {
        return Err(bad("polytope"));
    }
    let pts: Vec<Point3> = vs.iter().map(parse_point3).collect::<Result<_>>()?;
    Ok(Polytope3::hull(&pts))
}

pub fn realization(r: &Realization2<Scalar>, ids: &[String]) -> Value {
    json!({
        "kind": r.kind,
        "lines": r.lines.iter().map(line2).collect::<Vec<_>>(),
        "set_ids": r.set_ids.iter().map(|&i| ids[i].clone()).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Field;

    #[test]
    fn round_trips() {
        let p = Point3::new(Scalar::frac(-3, 7), Scalar::int(2), Scalar::frac(1, 2));
        assert_eq!(parse_point3(&point3(&p)).unwrap(), p);
        let l = Line3::new(p.clone(), [Scalar::int(2), Scalar::int(4), Scalar::int(-6)]).unwrap();
        assert_eq!(parse_line3(&line3(&l)).unwrap(), l);
        let h = Plane3::new(Scalar::int(1), Scalar::int(2), Scalar::int(3), Scalar::frac(5, 3)).unwrap();
        assert_eq!(parse_plane3(&plane3(&h)).unwrap(), h);
        assert_eq!(plane3(&Plane3::horizontal(Scalar::int(2))), json!({"coef": ["0", "0", "1", "2"]}));
        assert!(parse_scalar(&json!("1/0")).is_err());
    }
}
