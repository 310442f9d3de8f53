//! The shape-space angle law.
//!
//! With V = sqrt(3) R = sqrt(3) tan(theta/2), the apex angle alpha of the
//! chosen cluster satisfies cot(alpha) = (V^2 - 1) / (2 V |sin phi|). V = 1
//! exactly on the rightness cap theta = pi/3, which is why right triangles
//! fill three equal cap-circles. The exact path through `reconstruct` plus
//! planar angles is authoritative; the closed-form law is a checked
//! secondary route.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

use crate::error::{Error, Result};
use crate::euclid::{self, DegeneracyKind, ANGLE_TOL};
use crate::shape::{reconstruct, relabel, ClusterId, ShapeCoords};

/// Azimuthal radius of the caps of obtuseness.
pub const RIGHT_CAP_THETA: f64 = FRAC_PI_3;

pub(crate) const SQRT_3: f64 = 1.732_050_807_568_877_2_f64;

/// The rescaled stereographic radius V = sqrt(3) tan(theta/2).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vvar {
    pub v: f64,
}

/// A constant-angle label alpha together with k = cot(alpha).
/// k = 0 iff alpha = pi/2; k < 0 iff alpha is obtuse.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConstantK {
    pub alpha: f64,
    pub k: f64,
}

impl ConstantK {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < PI) {
            return Err(Error::AlphaDomain {
                alpha,
                domain: "cot(alpha) requires alpha in (0, pi)",
            });
        }
        let k = if alpha == FRAC_PI_2 {
            0.0
        } else {
            alpha.cos() / alpha.sin()
        };
        Ok(ConstantK { alpha, k })
    }
}

/// Evaluation of the maximal-angle field at one shape.
#[derive(Clone, Debug, PartialEq)]
pub struct MaxAngleField {
    pub alpha_max: f64,
    pub achieving: Vec<ClusterId>,
}

/// Position relative to the three caps of obtuseness.
#[derive(Clone, Debug, PartialEq)]
pub enum CapMembership {
    InsideObtuseCap(ClusterId),
    OnCapCircle(Vec<ClusterId>),
    AcuteRegion,
}

/// V = sqrt(3) tan(theta/2) for theta in [0, pi).
pub fn v_of_theta(theta: f64) -> Result<Vvar> {
    if !(0.0..PI).contains(&theta) {
        return Err(Error::VDivergesAtPole);
    }
    Ok(Vvar {
        v: SQRT_3 * (theta * 0.5).tan(),
    })
}

fn check_defined(s: &ShapeCoords) -> Result<()> {
    if s.is_pole() {
        return Err(Error::PhiUndefinedAtPole);
    }
    Ok(())
}

/// The planar angle at the cluster's apex vertex, via the canonical
/// representative and planar angle measurement.
pub fn apex_angle_from_shape(s: &ShapeCoords) -> Result<f64> {
    check_defined(s)?;
    let tri = reconstruct(s);
    match euclid::degeneracy(&tri) {
        DegeneracyKind::Nondegenerate => {}
        DegeneracyKind::Collinear => return Err(Error::CollinearApexAngle),
        DegeneracyKind::BinaryCollision(_) | DegeneracyKind::TripleCollision => {
            return Err(Error::AngleUndefinedAtCollision)
        }
    }
    let angles = euclid::vertex_angles(&tri)?;
    Ok(angles.get(s.cluster.apex()))
}

/// The cot-law route to the same apex angle,
/// alpha = atan2(2 V |sin phi|, V^2 - 1). |sin phi| makes both hemispheres
/// yield the geometric angle. Must agree with `apex_angle_from_shape` within
/// 1e-9; kept as a cross-check of the closed form.
pub fn apex_angle_cot_law(s: &ShapeCoords) -> Result<f64> {
    check_defined(s)?;
    let sp = s.phi.sin().abs();
    if sp == 0.0 {
        return Err(Error::CollinearApexAngle);
    }
    let v = v_of_theta(s.theta)?.v;
    Ok((2.0 * v * sp).atan2(v * v - 1.0))
}

/// Maximal angle of the reconstructed triangle over the three clusters, with
/// the achieving cluster set. Collinear non-collision shapes return pi at
/// the middle vertex; binary collisions are undefined.
pub fn max_angle_from_shape(s: &ShapeCoords) -> Result<MaxAngleField> {
    if s.is_pole() && s.theta > FRAC_PI_2 {
        return Err(Error::AngleUndefinedAtCollision);
    }
    let tri = reconstruct(s);
    let angles = euclid::vertex_angles(&tri)?;
    let m = euclid::max_angle(&angles);
    let achieving = ClusterId::ALL
        .into_iter()
        .filter(|k| (angles.get(k.apex()) - m.value).abs() <= ANGLE_TOL)
        .collect();
    Ok(MaxAngleField {
        alpha_max: m.value,
        achieving,
    })
}

/// Which cap of obtuseness (if any) contains the shape: inside cap k iff
/// theta_k < pi/3, on the circle within 1e-9, acute otherwise.
pub fn right_cap_membership(s: &ShapeCoords) -> Result<CapMembership> {
    let mut on_circle = Vec::new();
    let mut inside = None;
    for k in ClusterId::ALL {
        let theta_k = if k == s.cluster {
            s.theta
        } else {
            relabel(s, k)?.theta
        };
        if (theta_k - RIGHT_CAP_THETA).abs() <= ANGLE_TOL {
            on_circle.push(k);
        } else if theta_k < RIGHT_CAP_THETA {
            inside = Some(k);
        }
    }
    Ok(if !on_circle.is_empty() {
        CapMembership::OnCapCircle(on_circle)
    } else if let Some(k) = inside {
        CapMembership::InsideObtuseCap(k)
    } else {
        CapMembership::AcuteRegion
    })
}
