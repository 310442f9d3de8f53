//! JSON records and the CSV polyline format. Field order is fixed by the
//! struct definitions; floats serialize as shortest round-trip decimals, so
//! identical inputs produce byte-identical output.

use serde::Serialize;

use trishape::angle::max_angle_from_shape;
use trishape::euclid::{AngleSet, DegeneracyKind, Trichotomy};
use trishape::flow::MaxAngleContour;
use trishape::shape::{embed, global_embed, special_catalog, ShapeCoords};

#[derive(Serialize)]
pub struct AngleOut {
    pub rad: f64,
    pub deg: f64,
}

impl AngleOut {
    pub fn new(rad: f64) -> Self {
        AngleOut {
            rad,
            deg: rad.to_degrees(),
        }
    }
}

#[derive(Serialize)]
pub struct ShapeCoordsOut {
    pub cluster: u8,
    pub theta: f64,
    /// Null at the poles, where the azimuth is undefined.
    pub phi: Option<f64>,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl ShapeCoordsOut {
    /// Own-frame coordinates with the shared cluster-1 frame embedding.
    pub fn new(s: &ShapeCoords) -> Self {
        let g = global_embed(s);
        ShapeCoordsOut {
            cluster: s.cluster.index(),
            theta: s.theta,
            phi: s.phi_defined.then_some(s.phi),
            x: g.x,
            y: g.y,
            z: g.z,
        }
    }
}

#[derive(Serialize)]
pub struct AnglesOut {
    pub at_a: AngleOut,
    pub at_b: AngleOut,
    pub at_c: AngleOut,
}

impl AnglesOut {
    pub fn new(a: &AngleSet) -> Self {
        AnglesOut {
            at_a: AngleOut::new(a.at_a),
            at_b: AngleOut::new(a.at_b),
            at_c: AngleOut::new(a.at_c),
        }
    }
}

#[derive(Serialize)]
pub struct MaxAngleOut {
    pub rad: f64,
    pub deg: f64,
    pub vertices: Vec<String>,
}

#[derive(Serialize)]
pub struct AlphaClassOut {
    pub alpha: AngleOut,
    pub class: String,
}

#[derive(Serialize)]
pub struct ClassifyOut {
    pub degeneracy: String,
    pub angles: AnglesOut,
    pub max_angle: MaxAngleOut,
    pub right_class: String,
    pub fermat_class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_class: Option<AlphaClassOut>,
    pub shape_coords: Vec<ShapeCoordsOut>,
}

pub fn degeneracy_str(d: DegeneracyKind) -> String {
    match d {
        DegeneracyKind::Nondegenerate => "nondegenerate".into(),
        DegeneracyKind::Collinear => "collinear".into(),
        DegeneracyKind::BinaryCollision(pair) => format!("binary_collision({pair})"),
        DegeneracyKind::TripleCollision => "triple_collision".into(),
    }
}

pub fn trichotomy_str(t: Trichotomy) -> String {
    t.to_string()
}

#[derive(Serialize)]
pub struct ProbOut {
    pub alpha: AngleOut,
    pub method: String,
    pub p: f64,
    pub error_estimate: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub area_steradians: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Serialize)]
pub struct ContourSampleOut {
    pub theta: f64,
    pub phi: Option<f64>,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

#[derive(Serialize)]
pub struct ContourArcOut {
    pub arc_id: usize,
    pub cluster: u8,
    pub hemisphere: String,
    pub samples: Vec<ContourSampleOut>,
}

#[derive(Serialize)]
pub struct ContourOut {
    pub alpha: AngleOut,
    pub resolution: usize,
    pub arcs: Vec<ContourArcOut>,
    pub cusps: Vec<ShapeCoordsOut>,
    pub excluded_limit_points: Vec<ShapeCoordsOut>,
}

impl ContourOut {
    pub fn new(contour: &MaxAngleContour, resolution: usize) -> Self {
        let arcs = contour
            .arcs
            .iter()
            .enumerate()
            .map(|(arc_id, arc)| ContourArcOut {
                arc_id,
                cluster: arc.cluster.index(),
                hemisphere: arc.hemisphere.as_str().to_string(),
                samples: arc
                    .samples
                    .iter()
                    .map(|s| {
                        let g = global_embed(s);
                        ContourSampleOut {
                            theta: s.theta,
                            phi: s.phi_defined.then_some(s.phi),
                            x: g.x,
                            y: g.y,
                            z: g.z,
                        }
                    })
                    .collect(),
            })
            .collect();
        ContourOut {
            alpha: AngleOut::new(contour.alpha),
            resolution,
            arcs,
            cusps: contour.cusps.iter().map(ShapeCoordsOut::new).collect(),
            excluded_limit_points: contour
                .excluded_limit_points
                .iter()
                .map(ShapeCoordsOut::new)
                .collect(),
        }
    }
}

/// CSV polylines: `arc_id,cluster,hemisphere,theta,phi,x,y,z` with theta and
/// phi in the arc's own cluster frame (phi = 0 at poles by convention) and
/// x,y,z the shared cluster-1 embedding.
pub fn contour_csv(contour: &MaxAngleContour) -> String {
    let mut out = String::from("arc_id,cluster,hemisphere,theta,phi,x,y,z\n");
    for (arc_id, arc) in contour.arcs.iter().enumerate() {
        for s in &arc.samples {
            let g = global_embed(s);
            out.push_str(&format!(
                "{arc_id},{},{},{},{},{},{},{}\n",
                arc.cluster.index(),
                arc.hemisphere.as_str(),
                s.theta,
                s.phi,
                g.x,
                g.y,
                g.z
            ));
        }
    }
    out
}

#[derive(Serialize)]
pub struct SpecialPointOut {
    pub tag: String,
    pub theta: f64,
    pub phi: Option<f64>,
    pub embedded: [f64; 3],
}

#[derive(Serialize)]
pub struct SpecialPointsOut {
    pub frame: String,
    pub points: Vec<SpecialPointOut>,
}

pub fn special_points_out() -> SpecialPointsOut {
    let points = special_catalog()
        .into_iter()
        .map(|(tag, s)| {
            let v = embed(&s);
            SpecialPointOut {
                tag: tag.to_string(),
                theta: s.theta,
                phi: s.phi_defined.then_some(s.phi),
                embedded: [v.x, v.y, v.z],
            }
        })
        .collect();
    SpecialPointsOut {
        frame: "cluster-1".into(),
        points,
    }
}

#[derive(Serialize)]
pub struct ErrorOut {
    pub error: String,
    pub kind: String,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

/// Maximal-angle field as plain strings, shared by classify and reports.
pub fn max_angle_achievers(s: &ShapeCoords) -> Vec<String> {
    max_angle_from_shape(s)
        .map(|m| m.achieving.iter().map(|k| k.to_string()).collect())
        .unwrap_or_default()
}
