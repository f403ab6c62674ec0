//! JSON wire formats. Rationals travel as strings (`"p/q"`, integers or
//! finite decimals on input, lowest-terms `"p/q"` on output), cubes by name.
//!
//! Complex:
//! `{"basepoint":"v","cubes":[{"id":"e","dim":1,"faces":{"d0_1":{"base":"v","degens":[]},..}}]}`
//!
//! Path:
//! `{"segments":[{"kind":"star","dur":"1/2"},{"kind":"track","dur":"2","h":["-1","1"],"cube":"e","c0":["1/4"],"c1":["1/4"]}]}`
//! with an optional `"start"` point for paths of length zero.
//!
//! Point of `|B|`: `{"cube":"e","coords":["1/3"]}`; point of the suspension:
//! `"*"` or `{"h":"0","cube":"e","coords":["1/3"]}`.
//!
//! Word: a list of points, or for `X'` also `{"interval":"1/2"}` letters.

use std::collections::BTreeMap;

use num_traits::Signed;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cubical::{CubicalSet, Presentation, RawCube, RawFace, RealizationPoint};
use crate::error::{Error, Result};
use crate::james::{JamesWord, XPrimeLetter};
use crate::path::{MoorePath, Segment, SegmentBody, Suspension, SuspensionPoint, Track};
use crate::rational::{self, Rational};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexJson {
    basepoint: String,
    cubes: Vec<CubeJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CubeJson {
    id: String,
    dim: usize,
    #[serde(default)]
    faces: BTreeMap<String, FaceJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FaceJson {
    base: String,
    #[serde(default)]
    degens: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PathJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    start: Option<Value>,
    segments: Vec<SegmentJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum SegmentJson {
    Star { dur: String },
    Track { dur: String, h: [String; 2], cube: String, c0: Vec<String>, c1: Vec<String> },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointJson {
    cube: String,
    coords: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HeightPointJson {
    h: String,
    cube: String,
    coords: Vec<String>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum LetterJson {
    Point(PointJson),
    Interval { interval: String },
}

fn malformed(e: serde_json::Error) -> Error {
    Error::Malformed(e.to_string())
}

fn from_value<T: serde::de::DeserializeOwned>(v: &Value) -> Result<T> {
    T::deserialize(v).map_err(malformed)
}

fn parse_face_key(key: &str) -> Option<(usize, u8)> {
    let rest = key.strip_prefix('d')?;
    let (eps, i) = rest.split_once('_')?;
    let eps: u8 = eps.parse().ok()?;
    let i: usize = i.parse().ok()?;
    (eps <= 1).then_some((i, eps))
}

fn rationals(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| rational::parse(s)).collect()
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational::format).collect()
}

pub fn complex_from_value(v: &Value) -> Result<CubicalSet> {
    let c: ComplexJson = from_value(v)?;
    let mut cubes = Vec::with_capacity(c.cubes.len());
    for cube in c.cubes {
        let mut faces = BTreeMap::new();
        for (key, f) in cube.faces {
            let k = parse_face_key(&key)
                .ok_or_else(|| Error::Malformed(format!("face key {key:?} of {:?} is not d<0|1>_<i>", cube.id)))?;
            faces.insert(k, RawFace { base: f.base, degens: f.degens });
        }
        cubes.push(RawCube { name: cube.id, dim: cube.dim, faces });
    }
    CubicalSet::from_presentation(&Presentation { basepoint: c.basepoint, cubes })
}

pub fn parse_complex(text: &str) -> Result<CubicalSet> {
    complex_from_value(&serde_json::from_str(text).map_err(malformed)?)
}

pub fn complex_to_value(b: &CubicalSet) -> Value {
    let p = b.to_presentation();
    let cubes = p
        .cubes
        .into_iter()
        .map(|c| CubeJson {
            id: c.name,
            dim: c.dim,
            faces: c
                .faces
                .into_iter()
                .map(|((i, eps), f)| (format!("d{eps}_{i}"), FaceJson { base: f.base, degens: f.degens }))
                .collect(),
        })
        .collect();
    serde_json::to_value(ComplexJson { basepoint: p.basepoint, cubes }).expect("serializable")
}

/// A point of `|B|`, normalized.
pub fn point_from_value(b: &CubicalSet, v: &Value) -> Result<RealizationPoint> {
    let p: PointJson = from_value(v)?;
    point_from_parts(b, &p.cube, &p.coords)
}

fn point_from_parts(b: &CubicalSet, cube: &str, coords: &[String]) -> Result<RealizationPoint> {
    let id = b.lookup(cube)?;
    let coords = rationals(coords)?;
    b.normalize_point(id, &coords).map_err(|e| Error::Malformed(e.to_string()))
}

pub fn point_to_value(b: &CubicalSet, x: &RealizationPoint) -> Value {
    serde_json::to_value(PointJson { cube: b.name(x.cube).to_string(), coords: strings(&x.coords) }).expect("serializable")
}

pub fn suspension_point_from_value(s: &Suspension, v: &Value) -> Result<SuspensionPoint> {
    if v.as_str() == Some("*") {
        return Ok(SuspensionPoint::Star);
    }
    let p: HeightPointJson = from_value(v)?;
    let h = rational::parse(&p.h)?;
    if h.abs() > rational::one() {
        return Err(Error::Malformed(format!("height {h} outside [-1,1]")));
    }
    Ok(s.point(h, point_from_parts(s.base(), &p.cube, &p.coords)?))
}

pub fn suspension_point_to_value(s: &Suspension, p: &SuspensionPoint) -> Value {
    match p {
        SuspensionPoint::Star => Value::String("*".into()),
        SuspensionPoint::Interior { h, x } => serde_json::to_value(HeightPointJson {
            h: rational::format(h),
            cube: s.base().name(x.cube).to_string(),
            coords: strings(&x.coords),
        })
        .expect("serializable"),
    }
}

pub fn path_from_value(s: &Suspension, v: &Value) -> Result<MoorePath> {
    let p: PathJson = from_value(v)?;
    let b = s.base();
    let mut segs = Vec::with_capacity(p.segments.len());
    for seg in p.segments {
        segs.push(match seg {
            SegmentJson::Star { dur } => Segment::star(rational::parse(&dur)?),
            SegmentJson::Track { dur, h, cube, c0, c1 } => Segment::track(
                rational::parse(&dur)?,
                Track {
                    h0: rational::parse(&h[0])?,
                    h1: rational::parse(&h[1])?,
                    cube: b.lookup(&cube)?,
                    c0: rationals(&c0)?,
                    c1: rationals(&c1)?,
                },
            ),
        });
    }
    let start = p.start.as_ref().map(|v| suspension_point_from_value(s, v)).transpose()?;
    s.path(start, segs)
}

pub fn parse_path(s: &Suspension, text: &str) -> Result<MoorePath> {
    path_from_value(s, &serde_json::from_str(text).map_err(malformed)?)
}

pub fn path_to_value(s: &Suspension, path: &MoorePath) -> Value {
    let b = s.base();
    let segments = path
        .segments()
        .iter()
        .map(|seg| {
            let dur = rational::format(&seg.duration);
            match &seg.body {
                SegmentBody::Star => SegmentJson::Star { dur },
                SegmentBody::Track(t) => SegmentJson::Track {
                    dur,
                    h: [rational::format(&t.h0), rational::format(&t.h1)],
                    cube: b.name(t.cube).to_string(),
                    c0: strings(&t.c0),
                    c1: strings(&t.c1),
                },
            }
        })
        .collect();
    let start = (path.segments().is_empty() && !path.start().is_star())
        .then(|| suspension_point_to_value(s, path.start()));
    serde_json::to_value(PathJson { start, segments }).expect("serializable")
}

pub fn word_from_value(b: &CubicalSet, v: &Value) -> Result<JamesWord> {
    let letters: Vec<Value> = from_value(v)?;
    let points = letters.iter().map(|l| point_from_value(b, l)).collect::<Result<Vec<_>>>()?;
    Ok(JamesWord::reduce(b, points))
}

pub fn word_to_value(b: &CubicalSet, w: &JamesWord) -> Value {
    Value::Array(w.letters().iter().map(|x| point_to_value(b, x)).collect())
}

pub fn xprime_word_from_value(b: &CubicalSet, v: &Value) -> Result<Vec<XPrimeLetter>> {
    let letters: Vec<LetterJson> = from_value(v)?;
    letters
        .into_iter()
        .map(|l| match l {
            LetterJson::Point(p) => Ok(XPrimeLetter::Point(point_from_parts(b, &p.cube, &p.coords)?)),
            LetterJson::Interval { interval } => {
                let t = rational::parse(&interval)?;
                if !rational::in_unit_interval(&t) {
                    return Err(Error::Malformed(format!("interval letter {t} outside [0,1]")));
                }
                Ok(XPrimeLetter::Interval(t))
            }
        })
        .collect()
}

/// Reads a JSON document.
pub fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(malformed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubical::standard::{circle, torus, wedge_of_circles};
    use crate::rational::{frac, int};
    use serde_json::json;

    const CIRCLE: &str = r#"{"basepoint":"v","cubes":[{"id":"v","dim":0,"faces":{}},{"id":"e","dim":1,"faces":{"d0_1":{"base":"v","degens":[]},"d1_1":{"base":"v","degens":[]}}}]}"#;

    #[test]
    fn complex_round_trip() {
        let c = parse_complex(CIRCLE).unwrap();
        assert_eq!(c, circle());
        assert_eq!(serde_json::to_string(&complex_to_value(&c)).unwrap(), CIRCLE);
        for b in [torus(), wedge_of_circles()] {
            let v = complex_to_value(&b);
            assert_eq!(complex_to_value(&complex_from_value(&v).unwrap()), v);
        }
    }

    #[test]
    fn complex_errors() {
        let dangling = CIRCLE.replace(r#""d1_1":{"base":"v""#, r#""d1_1":{"base":"w""#);
        assert_eq!(parse_complex(&dangling), Err(Error::DanglingCube("w".into())));
        let badkey = CIRCLE.replace("d1_1", "d2_1");
        assert!(parse_complex(&badkey).unwrap_err().is_malformed());
        assert!(parse_complex("{").unwrap_err().is_malformed());
        let implicit = r#"{"basepoint":"v","cubes":[{"id":"e","dim":1,"faces":{"d0_1":{"base":"v"},"d1_1":{"base":"v"}}}]}"#;
        assert_eq!(parse_complex(implicit).unwrap().counts(), vec![1, 1]);
    }

    #[test]
    fn path_round_trip() {
        let s = Suspension::new(circle());
        let text = r#"{"segments":[{"kind":"star","dur":"1/2"},{"kind":"track","dur":"2","h":["-1","1"],"cube":"e","c0":["1/4"],"c1":["1/4"]}]}"#;
        let p = parse_path(&s, text).unwrap();
        assert_eq!(p.duration(), frac(5, 2));
        assert_eq!(serde_json::to_string(&path_to_value(&s, &p)).unwrap(), text);
        // decimals are accepted and normalized
        let dec = text.replace("\"1/4\"", "\"0.25\"");
        assert_eq!(parse_path(&s, &dec).unwrap(), p);
        let bad = text.replace("\"1/4\"]", "\"1/0\"]");
        assert!(matches!(parse_path(&s, &bad), Err(Error::MalformedRational(_))));
        let gap = text.replace("\"-1\",\"1\"", "\"-1/2\",\"1\"");
        assert!(parse_path(&s, &gap).unwrap_err().is_malformed());
    }

    #[test]
    fn zero_length_paths_keep_their_point() {
        let s = Suspension::new(circle());
        let x = s.base().normalize_point(s.base().id("e").unwrap(), &[frac(1, 3)]).unwrap();
        let p = s.restrict(&s.beta_loop(&x).unwrap(), &int(1), &int(1)).unwrap();
        let v = path_to_value(&s, &p);
        assert_eq!(v, json!({"start":{"h":"0","cube":"e","coords":["1/3"]},"segments":[]}));
        assert_eq!(path_from_value(&s, &v).unwrap(), p);
    }

    #[test]
    fn words() {
        let b = wedge_of_circles();
        let v = json!([{"cube":"e","coords":["1/3"]},{"cube":"v","coords":[]},{"cube":"f","coords":["1"]}]);
        let w = word_from_value(&b, &v).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(word_to_value(&b, &w), json!([{"cube":"e","coords":["1/3"]}]));
        let xp = json!([{"interval":"1/2"},{"cube":"f","coords":["2/3"]}]);
        let l = xprime_word_from_value(&b, &xp).unwrap();
        assert_eq!(l[0], XPrimeLetter::Interval(frac(1, 2)));
        assert!(xprime_word_from_value(&b, &json!([{"interval":"3/2"}])).unwrap_err().is_malformed());
        assert!(word_from_value(&b, &json!([{"cube":"e","coords":["2"]}])).unwrap_err().is_malformed());
        assert!(word_from_value(&b, &json!([{"cube":"g","coords":["1/2"]}])).unwrap_err().is_malformed());
    }
}
