//! Triangle shapes on Kendall's shape sphere.
//!
//! The similarity classes of labeled planar triangles form a round 2-sphere.
//! This crate maps triangles to spherical coordinates and back, evaluates
//! the apex-angle law, traces the maximal-angle flow (constant-angle curves,
//! cusps, the separatrix of kissing cap-circles of rightness, critical
//! points), and computes alpha-obtuse areas and probabilities by adaptive
//! quadrature, cross-validated against a deterministic Monte Carlo oracle on
//! the uniform shape measure.
//!
//! Modules follow the pipeline order:
//!
//! * [`euclid`] — labeled planar triangles, angles, degeneracies, Fermat
//!   point;
//! * [`shape`] — Jacobi vectors, shape coordinates, reconstruction,
//!   relabeling, special shapes;
//! * [`angle`] — the apex-angle law and cap membership;
//! * [`flow`] — constant-angle curves, maximal-angle contours, separatrix,
//!   critical-point probes;
//! * [`measure`] — cap areas, the literal closed-form integral, region
//!   quadrature, probabilities;
//! * [`mc`] — counter-based RNG and the uniform-measure estimator.
//!
//! With the default `parallel` feature the Monte Carlo estimator fans
//! chunks out over rayon; disabling it falls back to an identical
//! sequential path (estimates are bitwise equal either way).

pub mod angle;
pub mod error;
pub mod euclid;
pub mod flow;
pub mod mc;
pub mod measure;
pub mod shape;

pub use error::{Error, Result};
pub use euclid::{
    classify_alpha, classify_fermat, degeneracy, fermat_point, max_angle, side_lengths,
    vertex_angles, AngleSet, DegeneracyKind, FermatLocation, FermatResult, MaxAngle,
    PlanarTriangle, Point2, Trichotomy, VertexLabel, VertexPair,
};
pub use shape::{
    embed, global_embed, jacobi, mass_weight, reconstruct, relabel, shape_coords, special_point,
    ClusterId, JacobiVectors, MassWeightedJacobi, ShapeCoords, ShapeVector, SpecialShape,
};
