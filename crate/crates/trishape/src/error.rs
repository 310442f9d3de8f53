use thiserror::Error;

use crate::euclid::VertexPair;

/// Errors produced by the geometry, shape-space, and quadrature layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex coordinates must be finite")]
    NonFiniteInput,

    #[error("binary collision: vertices {0} coincide")]
    BinaryCollision(VertexPair),

    #[error("triple collision: all three vertices coincide")]
    TripleCollision,

    #[error("degenerate triangle: {0}")]
    DegenerateTriangle(&'static str),

    #[error("angles are undefined at a binary-collision shape")]
    AngleUndefinedAtCollision,

    #[error("apex angle is degenerate (0 or pi) on the collinearity circle")]
    CollinearApexAngle,

    #[error("phi is undefined at the poles theta = 0, pi")]
    PhiUndefinedAtPole,

    #[error("V = sqrt(3) tan(theta/2) diverges at theta = pi")]
    VDivergesAtPole,

    #[error("alpha = {alpha} outside domain: {domain}")]
    AlphaDomain { alpha: f64, domain: &'static str },

    #[error("k = cot(alpha) = 0 at alpha = pi/2; the curve is the cap theta = pi/3")]
    RightAngleCap,

    #[error("no constant-angle curve at this theta: arcsin argument {arg} exceeds 1")]
    NoCurveAtTheta { arg: f64 },

    #[error("quadrature depth exhausted: best estimate {value} with error estimate {error_estimate}")]
    DepthExhausted { value: f64, error_estimate: f64 },

    #[error("probe location must be E, Ebar, or one of the B points")]
    UnsupportedProbeLocation,

    #[error("method {method} is incompatible with alpha = {alpha}: {reason}")]
    MethodIncompatible {
        method: &'static str,
        alpha: f64,
        reason: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
