//! JSON scene documents: `{"A":[x,y],"B":[x,y],"C":[x,y]}` plus optional
//! `"P"`, `"triad"`, `"theta"` and `"options"`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{DirectedAngle, Point, Tolerance};
use crate::triangle::Triangle;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneOptions {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub angle_eps: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub length_eps_rel: Option<f64>,
}

impl SceneOptions {
    fn is_empty(&self) -> bool {
        self.angle_eps.is_none() && self.length_eps_rel.is_none()
    }

    pub fn tolerance(&self) -> Result<Tolerance> {
        let d = Tolerance::default();
        let angle = self.angle_eps.unwrap_or(d.angle_eps);
        let length = self.length_eps_rel.unwrap_or(d.length_eps_rel);
        if !(angle > 0.0 && length > 0.0 && angle.is_finite() && length.is_finite()) {
            return Err(Error::InvalidScene("tolerances must be positive and finite".into()));
        }
        Ok(Tolerance::new(angle, length))
    }
}

/// Wire form of a scene, as written in the file.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneSpec {
    #[serde(rename = "A")]
    pub a: [f64; 2],
    #[serde(rename = "B")]
    pub b: [f64; 2],
    #[serde(rename = "C")]
    pub c: [f64; 2],
    #[serde(rename = "P", skip_serializing_if = "Option::is_none", default)]
    pub p: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub triad: Option<[f64; 3]>,
    /// Radians.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub theta: Option<f64>,
    #[serde(skip_serializing_if = "SceneOptions::is_empty", default)]
    pub options: SceneOptions,
}

/// A validated scene.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scene {
    pub triangle: Triangle,
    pub point: Option<Point>,
    pub triad: Option<[f64; 3]>,
    pub theta: Option<DirectedAngle>,
    pub options: SceneOptions,
}

fn point(xy: [f64; 2], name: &str) -> Result<Point> {
    if xy.iter().all(|v| v.is_finite()) {
        Ok(Point::new(xy[0], xy[1]))
    } else {
        Err(Error::InvalidScene(format!("coordinates of {name} are not finite")))
    }
}

impl SceneSpec {
    pub fn validate(&self) -> Result<Scene> {
        let tol = self.options.tolerance()?;
        let triangle = Triangle::with_tolerance(point(self.a, "A")?, point(self.b, "B")?, point(self.c, "C")?, tol)?;
        let p = self.p.map(|xy| point(xy, "P")).transpose()?;
        if let Some(t) = self.triad {
            if !t.iter().all(|v| v.is_finite()) {
                return Err(Error::NonFiniteParameter);
            }
        }
        let theta = match self.theta {
            Some(th) if !th.is_finite() => return Err(Error::ThetaOutOfRange(th)),
            Some(th) => Some(DirectedAngle::new(th)),
            None => None,
        };
        Ok(Scene { triangle, point: p, triad: self.triad, theta, options: self.options })
    }
}

impl Scene {
    pub fn new(triangle: Triangle) -> Scene {
        Scene { triangle, point: None, triad: None, theta: None, options: SceneOptions::default() }
    }

    pub fn to_spec(&self) -> SceneSpec {
        let xy = |p: Point| [p.x, p.y];
        let [a, b, c] = self.triangle.vertices();
        SceneSpec {
            a: xy(a),
            b: xy(b),
            c: xy(c),
            p: self.point.map(xy),
            triad: self.triad,
            theta: self.theta.map(DirectedAngle::radians),
            options: self.options,
        }
    }
}

/// Parses and validates a scene document.
pub fn parse_scene(json: &str) -> Result<Scene> {
    let spec: SceneSpec = serde_json::from_str(json).map_err(|e| Error::InvalidScene(e.to_string()))?;
    spec.validate()
}

pub fn emit_scene(scene: &Scene) -> String {
    serde_json::to_string_pretty(&scene.to_spec()).expect("scene serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRI: &str = r#"{"A":[0,0],"B":[4,0],"C":[0,3]}"#;

    #[test]
    fn minimal_scene() {
        let s = parse_scene(TRI).unwrap();
        assert_eq!(s.triangle.b(), Point::new(4.0, 0.0));
        assert!(s.point.is_none() && s.triad.is_none() && s.theta.is_none());
    }

    #[test]
    fn full_scene_round_trips() {
        let doc = r#"{"A":[0,0],"B":[4,0],"C":[1,3],"P":[1.5,1.0],"triad":[0.3,0.3,0.3],"theta":0.25,
                      "options":{"angle_eps":1e-10}}"#;
        let s = parse_scene(doc).unwrap();
        let once = emit_scene(&s);
        let again = parse_scene(&once).unwrap();
        assert_eq!(s, again);
        assert_eq!(once, emit_scene(&again));
    }

    #[test]
    fn rejects_unknown_fields() {
        let err = parse_scene(r#"{"A":[0,0],"B":[4,0],"C":[0,3],"Q":[1,1]}"#).unwrap_err();
        assert!(matches!(err, Error::InvalidScene(_)));
        let err = parse_scene(r#"{"A":[0,0],"B":[4,0],"C":[0,3],"options":{"digits":3}}"#).unwrap_err();
        assert!(matches!(err, Error::InvalidScene(_)));
    }

    #[test]
    fn rejects_degenerate_triangle() {
        let err = parse_scene(r#"{"A":[0,0],"B":[1,1],"C":[2,2]}"#).unwrap_err();
        assert_eq!(err, Error::DegenerateTriangle);
    }

    #[test]
    fn rejects_missing_vertex() {
        assert!(matches!(parse_scene(r#"{"A":[0,0],"B":[1,1]}"#), Err(Error::InvalidScene(_))));
    }
}
