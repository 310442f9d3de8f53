//! Planar ("shape-in-space") triangle geometry.
//!
//! Triangles are labeled: the vertices A, B, C are fixed identities and
//! permutation is always an explicit operation. This module provides side
//! lengths, vertex angles, degeneracy detection, the maximal angle with its
//! classification against a threshold, and the Fermat point.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Absolute tolerance (radians) for angle-classification comparisons.
pub const ANGLE_TOL: f64 = 1e-9;

/// Relative tolerance for degeneracy detection: parallelogram area against
/// squared diameter, pair separation against diameter.
pub const DEGENERACY_TOL: f64 = 1e-12;

const TWO_PI_3: f64 = 2.0 * std::f64::consts::FRAC_PI_3;

/// A point of the Euclidean plane, dimensionless Cartesian coordinates.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn dot(self, rhs: Point2) -> f64 {
        self.x * rhs.x + self.y * rhs.y
    }

    /// z-component of the 3-D cross product of two in-plane vectors.
    pub fn cross(self, rhs: Point2) -> f64 {
        self.x * rhs.y - self.y * rhs.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, rhs: Point2) -> f64 {
        (self - rhs).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, s: f64) -> Point2 {
        Point2::new(self.x * s, self.y * s)
    }
}

impl Div<f64> for Point2 {
    type Output = Point2;
    fn div(self, s: f64) -> Point2 {
        Point2::new(self.x / s, self.y / s)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

/// Vertex labels. The labels are part of a triangle's identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexLabel {
    A,
    B,
    C,
}

impl VertexLabel {
    pub const ALL: [VertexLabel; 3] = [VertexLabel::A, VertexLabel::B, VertexLabel::C];
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::A => write!(f, "A"),
            VertexLabel::B => write!(f, "B"),
            VertexLabel::C => write!(f, "C"),
        }
    }
}

/// An unordered pair of vertex labels, used to report collisions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexPair {
    AB,
    BC,
    CA,
}

impl fmt::Display for VertexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexPair::AB => write!(f, "AB"),
            VertexPair::BC => write!(f, "BC"),
            VertexPair::CA => write!(f, "CA"),
        }
    }
}

/// A labeled planar triangle given by its three vertex positions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlanarTriangle {
    pub a: Point2,
    pub b: Point2,
    pub c: Point2,
}

impl PlanarTriangle {
    /// Builds a triangle, rejecting non-finite coordinates.
    pub fn new(a: Point2, b: Point2, c: Point2) -> Result<Self> {
        if a.is_finite() && b.is_finite() && c.is_finite() {
            Ok(PlanarTriangle { a, b, c })
        } else {
            Err(Error::NonFiniteInput)
        }
    }

    pub fn from_coords(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> Result<Self> {
        Self::new(
            Point2::new(a.0, a.1),
            Point2::new(b.0, b.1),
            Point2::new(c.0, c.1),
        )
    }

    pub fn vertex(&self, label: VertexLabel) -> Point2 {
        match label {
            VertexLabel::A => self.a,
            VertexLabel::B => self.b,
            VertexLabel::C => self.c,
        }
    }

    /// Largest pairwise vertex distance.
    pub fn diameter(&self) -> f64 {
        self.a
            .distance(self.b)
            .max(self.b.distance(self.c))
            .max(self.c.distance(self.a))
    }

    pub fn centroid(&self) -> Point2 {
        (self.a + self.b + self.c) / 3.0
    }
}

/// The three vertex angles of a triangle, in radians.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AngleSet {
    pub at_a: f64,
    pub at_b: f64,
    pub at_c: f64,
}

impl AngleSet {
    pub fn get(&self, v: VertexLabel) -> f64 {
        match v {
            VertexLabel::A => self.at_a,
            VertexLabel::B => self.at_b,
            VertexLabel::C => self.at_c,
        }
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.at_a, self.at_b, self.at_c]
    }
}

/// The maximal vertex angle. Ties carry every tied label; isosceles shapes
/// are common downstream, so consumers must not assume a unique argmax.
#[derive(Clone, Debug, PartialEq)]
pub struct MaxAngle {
    pub value: f64,
    pub vertices: Vec<VertexLabel>,
}

/// Trichotomy of the maximal angle against a threshold alpha.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trichotomy {
    Acute,
    Critical,
    Obtuse,
}

impl fmt::Display for Trichotomy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Trichotomy::Acute => write!(f, "acute"),
            Trichotomy::Critical => write!(f, "critical"),
            Trichotomy::Obtuse => write!(f, "obtuse"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FermatLocation {
    Interior,
    AtVertex(VertexLabel),
}

/// The point minimizing the summed distances to the three vertices.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FermatResult {
    pub point: Point2,
    pub total_distance: f64,
    pub location: FermatLocation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegeneracyKind {
    Nondegenerate,
    Collinear,
    BinaryCollision(VertexPair),
    TripleCollision,
}

/// Isosceles classification by the distinct ("apex") angle against the equal
/// pair: `Tall` when the distinct angle is the largest, `Flat` when the equal
/// pair is. Tall meridians host the flow's stationary points, flat meridians
/// its cusps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoscelesKind {
    Tall,
    Flat,
    Equilateral,
}

/// Side lengths opposite A, B, C (that is |BC|, |CA|, |AB|).
pub fn side_lengths(tri: &PlanarTriangle) -> (f64, f64, f64) {
    (
        tri.b.distance(tri.c),
        tri.c.distance(tri.a),
        tri.a.distance(tri.b),
    )
}

/// Classifies the triangle's degeneracy using the relative tolerance policy.
pub fn degeneracy(tri: &PlanarTriangle) -> DegeneracyKind {
    let diam = tri.diameter();
    if diam == 0.0 {
        return DegeneracyKind::TripleCollision;
    }
    let tol = DEGENERACY_TOL * diam;
    if tri.a.distance(tri.b) <= tol {
        return DegeneracyKind::BinaryCollision(VertexPair::AB);
    }
    if tri.b.distance(tri.c) <= tol {
        return DegeneracyKind::BinaryCollision(VertexPair::BC);
    }
    if tri.c.distance(tri.a) <= tol {
        return DegeneracyKind::BinaryCollision(VertexPair::CA);
    }
    let area2 = (tri.b - tri.a).cross(tri.c - tri.a).abs();
    if area2 <= DEGENERACY_TOL * diam * diam {
        DegeneracyKind::Collinear
    } else {
        DegeneracyKind::Nondegenerate
    }
}

// Two-argument arctangent on normalized edge vectors; well conditioned near
// 0 and pi where arccos of the cosine rule is not.
fn angle_at(p: Point2, q: Point2, r: Point2) -> f64 {
    let u = q - p;
    let v = r - p;
    let (nu, nv) = (u.norm(), v.norm());
    let u = u / nu;
    let v = v / nv;
    u.cross(v).abs().atan2(u.dot(v))
}

/// Vertex angles of a non-collision triangle. Collinear non-coincident input
/// yields angles {0, 0, pi} exactly, the straight angle at the middle vertex.
pub fn vertex_angles(tri: &PlanarTriangle) -> Result<AngleSet> {
    let collinear = match degeneracy(tri) {
        DegeneracyKind::TripleCollision => return Err(Error::TripleCollision),
        DegeneracyKind::BinaryCollision(pair) => return Err(Error::BinaryCollision(pair)),
        DegeneracyKind::Collinear => true,
        DegeneracyKind::Nondegenerate => false,
    };
    let mut angles = AngleSet {
        at_a: angle_at(tri.a, tri.b, tri.c),
        at_b: angle_at(tri.b, tri.c, tri.a),
        at_c: angle_at(tri.c, tri.a, tri.b),
    };
    if collinear {
        let middle = max_angle(&angles).vertices[0];
        for v in VertexLabel::ALL {
            let snapped = if v == middle { std::f64::consts::PI } else { 0.0 };
            match v {
                VertexLabel::A => angles.at_a = snapped,
                VertexLabel::B => angles.at_b = snapped,
                VertexLabel::C => angles.at_c = snapped,
            }
        }
    }
    Ok(angles)
}

/// The maximal angle and the set of vertices attaining it (within tolerance).
pub fn max_angle(angles: &AngleSet) -> MaxAngle {
    let value = angles.at_a.max(angles.at_b).max(angles.at_c);
    let vertices = VertexLabel::ALL
        .into_iter()
        .filter(|&v| (angles.get(v) - value).abs() <= ANGLE_TOL)
        .collect();
    MaxAngle { value, vertices }
}

/// Trichotomy of the maximal angle against `alpha` in [pi/3, pi].
pub fn classify_alpha(angles: &AngleSet, alpha: f64) -> Result<Trichotomy> {
    if !(std::f64::consts::FRAC_PI_3 - ANGLE_TOL..=std::f64::consts::PI + ANGLE_TOL)
        .contains(&alpha)
    {
        return Err(Error::AlphaDomain {
            alpha,
            domain: "classification threshold must lie in [pi/3, pi]",
        });
    }
    let m = max_angle(angles).value;
    Ok(if m < alpha - ANGLE_TOL {
        Trichotomy::Acute
    } else if m > alpha + ANGLE_TOL {
        Trichotomy::Obtuse
    } else {
        Trichotomy::Critical
    })
}

/// Fermat trichotomy: the threshold is 2pi/3.
pub fn classify_fermat(angles: &AngleSet) -> Trichotomy {
    classify_alpha(angles, TWO_PI_3).expect("2pi/3 is in range")
}

/// Classifies an isosceles angle set; `None` when no two angles are equal
/// within tolerance.
pub fn isosceles_kind(angles: &AngleSet) -> Option<IsoscelesKind> {
    let [a, b, c] = angles.as_array();
    let eq = |x: f64, y: f64| (x - y).abs() <= ANGLE_TOL;
    if eq(a, b) && eq(b, c) {
        return Some(IsoscelesKind::Equilateral);
    }
    // (equal pair, distinct angle)
    let (pair, apex) = if eq(a, b) {
        (a.min(b), c)
    } else if eq(b, c) {
        (b.min(c), a)
    } else if eq(c, a) {
        (c.min(a), b)
    } else {
        return None;
    };
    Some(if apex > pair {
        IsoscelesKind::Tall
    } else {
        IsoscelesKind::Flat
    })
}

fn distance_sum(p: Point2, tri: &PlanarTriangle) -> f64 {
    p.distance(tri.a) + p.distance(tri.b) + p.distance(tri.c)
}

// Weiszfeld fixed-point iteration from the centroid, with step damping when
// an update fails to decrease the objective.
fn weiszfeld(tri: &PlanarTriangle) -> Point2 {
    let diam = tri.diameter();
    let stop = 1e-12 * diam;
    let floor = 1e-30 * diam;
    let vertices = [tri.a, tri.b, tri.c];
    let mut y = tri.centroid();
    let mut f = distance_sum(y, tri);
    for _ in 0..10_000 {
        let mut num = Point2::default();
        let mut den = 0.0;
        for v in vertices {
            let d = y.distance(v).max(floor);
            num = num + v / d;
            den += 1.0 / d;
        }
        let mut target = num / den;
        let mut step = target - y;
        let mut f_new = distance_sum(target, tri);
        // Damp only genuine ascents; near convergence f differences are
        // rounding noise and must not shrink the step.
        let mut halvings = 0;
        while f_new > f * (1.0 + 1e-14) && halvings < 40 {
            step = step * 0.5;
            target = y + step;
            f_new = distance_sum(target, tri);
            halvings += 1;
        }
        let moved = step.norm();
        y = target;
        f = f_new;
        if moved < stop {
            break;
        }
    }
    y
}

/// The Fermat point of a nondegenerate triangle.
///
/// When the maximal angle reaches 2pi/3 the minimizer sits at that vertex;
/// otherwise it is the interior point from which each pair of vertices
/// subtends 2pi/3, found by damped Weiszfeld iteration.
pub fn fermat_point(tri: &PlanarTriangle) -> Result<FermatResult> {
    match degeneracy(tri) {
        DegeneracyKind::Nondegenerate => {}
        DegeneracyKind::TripleCollision => return Err(Error::TripleCollision),
        DegeneracyKind::BinaryCollision(pair) => return Err(Error::BinaryCollision(pair)),
        DegeneracyKind::Collinear => {
            return Err(Error::DegenerateTriangle(
                "Fermat point is not unique for collinear input",
            ))
        }
    }
    let angles = vertex_angles(tri)?;
    let m = max_angle(&angles);
    if m.value >= TWO_PI_3 - ANGLE_TOL {
        let v = m.vertices[0];
        let point = tri.vertex(v);
        return Ok(FermatResult {
            point,
            total_distance: distance_sum(point, tri),
            location: FermatLocation::AtVertex(v),
        });
    }
    let point = weiszfeld(tri);
    Ok(FermatResult {
        point,
        total_distance: distance_sum(point, tri),
        location: FermatLocation::Interior,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};

    const SQRT_2: f64 = std::f64::consts::SQRT_2;

    fn equilateral() -> PlanarTriangle {
        PlanarTriangle::from_coords((0.0, 3f64.sqrt()), (-1.0, 0.0), (1.0, 0.0)).unwrap()
    }

    fn right_isosceles() -> PlanarTriangle {
        PlanarTriangle::from_coords((0.0, 1.0), (-1.0, 0.0), (1.0, 0.0)).unwrap()
    }

    /// Isosceles with apex angle 3pi/4 at A.
    fn obtuse_3pi4() -> PlanarTriangle {
        let half = (3.0 * PI / 8.0).tan();
        PlanarTriangle::from_coords((0.0, 1.0), (-half, 0.0), (half, 0.0)).unwrap()
    }

    #[test]
    fn side_lengths_examples() {
        let tri =
            PlanarTriangle::from_coords((0.0, 3f64.sqrt()), (-1.0, 0.0), (1.0, 0.0)).unwrap();
        let (a, b, c) = side_lengths(&tri);
        assert!((a - 2.0).abs() < 1e-12);
        assert!((b - 2.0).abs() < 1e-12 && (c - 2.0).abs() < 1e-12);

        let (a, b, c) = side_lengths(&right_isosceles());
        assert!((a - 2.0).abs() < 1e-12);
        assert!((b - SQRT_2).abs() < 1e-12);
        assert!((c - SQRT_2).abs() < 1e-12);

        let tri = PlanarTriangle::from_coords((0.0, 0.0), (0.0, 0.0), (1.0, 0.0)).unwrap();
        let (a, b, c) = side_lengths(&tri);
        assert_eq!((a, b, c), (1.0, 1.0, 0.0));
    }

    #[test]
    fn vertex_angles_examples() {
        let ang = vertex_angles(&equilateral()).unwrap();
        for v in ang.as_array() {
            assert!((v - FRAC_PI_3).abs() < 1e-12);
        }

        let ang = vertex_angles(&right_isosceles()).unwrap();
        assert!((ang.at_a - FRAC_PI_2).abs() < 1e-12);
        assert!((ang.at_b - FRAC_PI_4).abs() < 1e-12);
        assert!((ang.at_c - FRAC_PI_4).abs() < 1e-12);

        let tri = PlanarTriangle::from_coords((0.0, 0.0), (0.0, 0.0), (1.0, 0.0)).unwrap();
        assert_eq!(
            vertex_angles(&tri),
            Err(Error::BinaryCollision(VertexPair::AB))
        );
    }

    #[test]
    fn collinear_angles_are_0_0_pi() {
        let tri = PlanarTriangle::from_coords((0.0, 0.0), (-1.0, 0.0), (1.0, 0.0)).unwrap();
        let ang = vertex_angles(&tri).unwrap();
        assert_eq!(ang.at_a, PI);
        assert_eq!(ang.at_b, 0.0);
        assert_eq!(ang.at_c, 0.0);
    }

    #[test]
    fn max_angle_examples() {
        let m = max_angle(&AngleSet {
            at_a: FRAC_PI_3,
            at_b: FRAC_PI_3,
            at_c: FRAC_PI_3,
        });
        assert!((m.value - FRAC_PI_3).abs() < 1e-12);
        assert_eq!(m.vertices, VertexLabel::ALL.to_vec());

        let m = max_angle(&AngleSet {
            at_a: FRAC_PI_2,
            at_b: FRAC_PI_4,
            at_c: FRAC_PI_4,
        });
        assert_eq!(m.vertices, vec![VertexLabel::A]);

        let m = max_angle(&AngleSet {
            at_a: 2.0 * FRAC_PI_3,
            at_b: PI / 6.0,
            at_c: PI / 6.0,
        });
        assert!((m.value - 2.0 * FRAC_PI_3).abs() < 1e-12);
        assert_eq!(m.vertices, vec![VertexLabel::A]);
    }

    #[test]
    fn classification_examples() {
        let eq = vertex_angles(&equilateral()).unwrap();
        assert_eq!(classify_alpha(&eq, FRAC_PI_2).unwrap(), Trichotomy::Acute);
        assert_eq!(classify_fermat(&eq), Trichotomy::Acute);

        let ri = vertex_angles(&right_isosceles()).unwrap();
        assert_eq!(
            classify_alpha(&ri, FRAC_PI_2).unwrap(),
            Trichotomy::Critical
        );

        let tall = AngleSet {
            at_a: 2.0 * FRAC_PI_3,
            at_b: PI / 6.0,
            at_c: PI / 6.0,
        };
        assert_eq!(
            classify_alpha(&tall, FRAC_PI_2).unwrap(),
            Trichotomy::Obtuse
        );
        assert_eq!(classify_fermat(&tall), Trichotomy::Critical);

        let wide = AngleSet {
            at_a: 3.0 * PI / 4.0,
            at_b: PI / 8.0,
            at_c: PI / 8.0,
        };
        assert_eq!(classify_fermat(&wide), Trichotomy::Obtuse);

        assert!(classify_alpha(&eq, 0.1).is_err());
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy(&equilateral()), DegeneracyKind::Nondegenerate);
        let col = PlanarTriangle::from_coords((0.0, 0.0), (-1.0, 0.0), (1.0, 0.0)).unwrap();
        assert_eq!(degeneracy(&col), DegeneracyKind::Collinear);
        let ab = PlanarTriangle::from_coords((0.5, 0.5), (0.5, 0.5), (1.0, 0.0)).unwrap();
        assert_eq!(
            degeneracy(&ab),
            DegeneracyKind::BinaryCollision(VertexPair::AB)
        );
        let all = PlanarTriangle::from_coords((2.0, 2.0), (2.0, 2.0), (2.0, 2.0)).unwrap();
        assert_eq!(degeneracy(&all), DegeneracyKind::TripleCollision);
    }

    #[test]
    fn fermat_equilateral_is_centroid() {
        let tri = equilateral();
        let f = fermat_point(&tri).unwrap();
        assert_eq!(f.location, FermatLocation::Interior);
        assert!(f.point.distance(tri.centroid()) < 1e-10);
    }

    #[test]
    fn fermat_obtuse_sits_at_vertex() {
        let tri = obtuse_3pi4();
        let f = fermat_point(&tri).unwrap();
        assert_eq!(f.location, FermatLocation::AtVertex(VertexLabel::A));
        assert_eq!(f.point, tri.a);
    }

    #[test]
    fn fermat_right_isosceles_interior_point() {
        // Symmetry puts the minimizer on the y axis where
        // d/dy [ (1 - y) + 2 sqrt(1 + y^2) ] = 0 gives y = 1/sqrt(3).
        let f = fermat_point(&right_isosceles()).unwrap();
        assert_eq!(f.location, FermatLocation::Interior);
        assert!(f.point.x.abs() < 1e-10);
        assert!((f.point.y - 1.0 / 3f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn isosceles_kind_splits_by_distinct_angle() {
        // Distinct angle largest: tall.
        let tall = AngleSet {
            at_a: 2.0,
            at_b: (PI - 2.0) / 2.0,
            at_c: (PI - 2.0) / 2.0,
        };
        assert_eq!(isosceles_kind(&tall), Some(IsoscelesKind::Tall));
        // Equal pair largest: flat.
        let flat = AngleSet {
            at_a: 0.5,
            at_b: (PI - 0.5) / 2.0,
            at_c: (PI - 0.5) / 2.0,
        };
        assert_eq!(isosceles_kind(&flat), Some(IsoscelesKind::Flat));
        let eq = AngleSet {
            at_a: FRAC_PI_3,
            at_b: FRAC_PI_3,
            at_c: FRAC_PI_3,
        };
        assert_eq!(isosceles_kind(&eq), Some(IsoscelesKind::Equilateral));
        let scalene = AngleSet {
            at_a: 0.4,
            at_b: 1.0,
            at_c: PI - 1.4,
        };
        assert_eq!(isosceles_kind(&scalene), None);
    }
}
