//! The coordinate pipeline from labeled planar triangles to points of the
//! shape sphere: relative Jacobi vectors, mass weighting, the spherical
//! coordinates (theta, phi) of a cluster, the inverse reconstruction, cluster
//! relabeling, the Cartesian embedding, and the catalog of special shapes.
//!
//! A *cluster* is a choice of base pair plus apex vertex. Cluster k's apex is
//! vertex k (1 = A, 2 = B, 3 = C); its Jacobi vectors are the base separation
//! R1 and the apex-to-base-midpoint vector R2, cycled from
//! R1 = qC - qB, R2 = qA - (qB + qC)/2.
//!
//! In the resulting spherical coordinates theta = 2 arctan(rho2/rho1) the
//! cluster's uniform collinear shape U sits at the north pole theta = 0 and
//! the base pair's binary collision B at the south pole theta = pi. phi is
//! the signed angle from rho1 to rho2 (counterclockwise positive), so
//! positively oriented triangles occupy phi > 0 and reflection negates phi.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};
use std::fmt;

use crate::error::{Error, Result};
use crate::euclid::{PlanarTriangle, Point2, VertexLabel};

/// Cluster masses for the two Jacobi vectors, mu1 = 1/2 and mu2 = 2/3.
pub const MU1: f64 = 0.5;
pub const MU2: f64 = 2.0 / 3.0;

/// Pole detection threshold on |rho| relative to the other Jacobi magnitude.
const POLE_EPS: f64 = 0.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClusterId {
    C1,
    C2,
    C3,
}

impl ClusterId {
    pub const ALL: [ClusterId; 3] = [ClusterId::C1, ClusterId::C2, ClusterId::C3];

    pub fn index(self) -> u8 {
        match self {
            ClusterId::C1 => 1,
            ClusterId::C2 => 2,
            ClusterId::C3 => 3,
        }
    }

    pub fn from_index(i: u8) -> Option<ClusterId> {
        match i {
            1 => Some(ClusterId::C1),
            2 => Some(ClusterId::C2),
            3 => Some(ClusterId::C3),
            _ => None,
        }
    }

    /// Cyclic successor: C1 -> C2 -> C3 -> C1.
    pub fn succ(self) -> ClusterId {
        match self {
            ClusterId::C1 => ClusterId::C2,
            ClusterId::C2 => ClusterId::C3,
            ClusterId::C3 => ClusterId::C1,
        }
    }

    pub fn apex(self) -> VertexLabel {
        match self {
            ClusterId::C1 => VertexLabel::A,
            ClusterId::C2 => VertexLabel::B,
            ClusterId::C3 => VertexLabel::C,
        }
    }

    /// Ordered base pair (from, to): R1 = q_to - q_from.
    pub fn base(self) -> (VertexLabel, VertexLabel) {
        match self {
            ClusterId::C1 => (VertexLabel::B, VertexLabel::C),
            ClusterId::C2 => (VertexLabel::C, VertexLabel::A),
            ClusterId::C3 => (VertexLabel::A, VertexLabel::B),
        }
    }
}

impl fmt::Display for ClusterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// Relative Jacobi vectors of one cluster: base separation R1 and the
/// apex-to-midpoint vector R2. Translation invariant by construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacobiVectors {
    pub r1: Point2,
    pub r2: Point2,
    pub cluster: ClusterId,
}

/// Mass-weighted Jacobi vectors rho_i = sqrt(mu_i) R_i.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MassWeightedJacobi {
    pub rho1: Point2,
    pub rho2: Point2,
    pub cluster: ClusterId,
}

/// A point of the shape sphere in one cluster's spherical coordinates.
///
/// theta lies in [0, pi] measured from the cluster's U pole; phi lies in
/// (-pi, pi] and is undefined at the poles (`phi_defined` is false there and
/// phi is stored as 0 by convention).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ShapeCoords {
    pub theta: f64,
    pub phi: f64,
    pub phi_defined: bool,
    pub cluster: ClusterId,
}

impl ShapeCoords {
    pub fn new(theta: f64, phi: f64, cluster: ClusterId) -> Self {
        ShapeCoords {
            theta,
            phi: normalize_phi(phi),
            phi_defined: true,
            cluster,
        }
    }

    pub fn pole(theta: f64, cluster: ClusterId) -> Self {
        ShapeCoords {
            theta,
            phi: 0.0,
            phi_defined: false,
            cluster,
        }
    }

    pub fn is_pole(&self) -> bool {
        !self.phi_defined
    }

    /// The Legendre variable X = cos theta.
    pub fn x(&self) -> f64 {
        self.theta.cos()
    }
}

/// Unit vector embedding of the shape sphere,
/// (sin theta cos phi, sin theta sin phi, cos theta).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ShapeVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl ShapeVector {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        ShapeVector { x, y, z }
    }

    pub fn dot(self, rhs: ShapeVector) -> f64 {
        self.x * rhs.x + self.y * rhs.y + self.z * rhs.z
    }

    pub fn cross(self, rhs: ShapeVector) -> ShapeVector {
        ShapeVector::new(
            self.y * rhs.z - self.z * rhs.y,
            self.z * rhs.x - self.x * rhs.z,
            self.x * rhs.y - self.y * rhs.x,
        )
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn scale(self, s: f64) -> ShapeVector {
        ShapeVector::new(self.x * s, self.y * s, self.z * s)
    }

    pub fn add(self, rhs: ShapeVector) -> ShapeVector {
        ShapeVector::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }

    pub fn normalized(self) -> ShapeVector {
        self.scale(1.0 / self.norm())
    }

    /// Euclidean (chordal) distance.
    pub fn distance(self, rhs: ShapeVector) -> f64 {
        ((self.x - rhs.x).powi(2) + (self.y - rhs.y).powi(2) + (self.z - rhs.z).powi(2)).sqrt()
    }

    /// Geodesic (great-circle) distance between unit vectors.
    pub fn geodesic(self, rhs: ShapeVector) -> f64 {
        self.cross(rhs).norm().atan2(self.dot(rhs))
    }

    /// Rotation about the y axis (the E-Ebar axis) by `delta`.
    pub fn rotate_y(self, delta: f64) -> ShapeVector {
        let (s, c) = delta.sin_cos();
        ShapeVector::new(self.x * c + self.z * s, self.y, -self.x * s + self.z * c)
    }
}

/// The distinguished shapes: equilateral orientations E / Ebar, binary
/// collisions B(k), uniform collinear shapes U(k), and the collinear shapes
/// H(k) halfway along the arc between B(k) and U(k).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialShape {
    E,
    Ebar,
    B(ClusterId),
    U(ClusterId),
    H(ClusterId),
}

impl SpecialShape {
    pub const ALL: [SpecialShape; 11] = [
        SpecialShape::E,
        SpecialShape::Ebar,
        SpecialShape::B(ClusterId::C1),
        SpecialShape::B(ClusterId::C2),
        SpecialShape::B(ClusterId::C3),
        SpecialShape::U(ClusterId::C1),
        SpecialShape::U(ClusterId::C2),
        SpecialShape::U(ClusterId::C3),
        SpecialShape::H(ClusterId::C1),
        SpecialShape::H(ClusterId::C2),
        SpecialShape::H(ClusterId::C3),
    ];
}

impl fmt::Display for SpecialShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialShape::E => write!(f, "E"),
            SpecialShape::Ebar => write!(f, "Ebar"),
            SpecialShape::B(k) => write!(f, "B{}", k),
            SpecialShape::U(k) => write!(f, "U{}", k),
            SpecialShape::H(k) => write!(f, "H{}", k),
        }
    }
}

fn normalize_phi(phi: f64) -> f64 {
    let mut p = phi;
    if p <= -PI {
        p += 2.0 * PI;
    } else if p > PI {
        p -= 2.0 * PI;
    }
    if p == 0.0 {
        p = 0.0; // collapse -0.0
    }
    p
}

/// Relative Jacobi vectors of `cluster`.
pub fn jacobi(tri: &PlanarTriangle, cluster: ClusterId) -> JacobiVectors {
    let (from, to) = cluster.base();
    let apex = cluster.apex();
    let (qf, qt, qa) = (tri.vertex(from), tri.vertex(to), tri.vertex(apex));
    JacobiVectors {
        r1: qt - qf,
        r2: qa - (qf + qt) * 0.5,
        cluster,
    }
}

/// Mass weighting rho1 = R1/sqrt(2), rho2 = sqrt(2/3) R2.
pub fn mass_weight(j: &JacobiVectors) -> MassWeightedJacobi {
    MassWeightedJacobi {
        rho1: j.r1 * MU1.sqrt(),
        rho2: j.r2 * MU2.sqrt(),
        cluster: j.cluster,
    }
}

/// Shape coordinates of `tri` relative to `cluster`:
/// theta = 2 arctan(|rho2|/|rho1|) and phi the signed angle from rho1 to
/// rho2. Similarity invariant; reflection negates phi.
pub fn shape_coords(tri: &PlanarTriangle, cluster: ClusterId) -> Result<ShapeCoords> {
    let mw = mass_weight(&jacobi(tri, cluster));
    let n1 = mw.rho1.norm();
    let n2 = mw.rho2.norm();
    if n1 <= POLE_EPS && n2 <= POLE_EPS {
        return Err(Error::TripleCollision);
    }
    if n1 <= POLE_EPS {
        return Ok(ShapeCoords::pole(PI, cluster));
    }
    if n2 <= POLE_EPS {
        return Ok(ShapeCoords::pole(0.0, cluster));
    }
    let theta = 2.0 * (n2 / n1).atan();
    let phi = mw.rho1.cross(mw.rho2).atan2(mw.rho1.dot(mw.rho2));
    Ok(ShapeCoords::new(theta, phi, cluster))
}

/// Canonical planar representative of a shape-sphere point.
///
/// The representative fixes the mass-weighted base vector rho1 = (1, 0), so
/// the base vertices sit at -R1/2 and +R1/2 = -/+ (1/sqrt(2), 0) about the
/// origin and the apex at R2 = sqrt(3/2) tan(theta/2) (cos phi, sin phi).
/// At the B pole (theta = pi) the base pair collapses to the origin and the
/// apex is placed at (sqrt(3/2), 0) instead.
pub fn reconstruct(s: &ShapeCoords) -> PlanarTriangle {
    let (from, to, apex) = {
        let (f, t) = s.cluster.base();
        (f, t, s.cluster.apex())
    };
    let mut v = [Point2::default(); 3];
    let idx = |label: VertexLabel| match label {
        VertexLabel::A => 0usize,
        VertexLabel::B => 1,
        VertexLabel::C => 2,
    };
    if s.theta >= PI {
        v[idx(from)] = Point2::default();
        v[idx(to)] = Point2::default();
        v[idx(apex)] = Point2::new((1.5f64).sqrt(), 0.0);
    } else {
        let half = 0.5 / MU1.sqrt();
        let r = (s.theta * 0.5).tan();
        let scale = r / MU2.sqrt();
        v[idx(from)] = Point2::new(-half, 0.0);
        v[idx(to)] = Point2::new(half, 0.0);
        v[idx(apex)] = Point2::new(scale * s.phi.cos(), scale * s.phi.sin());
    }
    PlanarTriangle {
        a: v[0],
        b: v[1],
        c: v[2],
    }
}

/// Re-expresses a shape in another cluster's coordinates, via the canonical
/// representative. Equivalent to a +/- 2pi/3 rotation of the embedded vector
/// about the E-Ebar axis.
pub fn relabel(s: &ShapeCoords, to: ClusterId) -> Result<ShapeCoords> {
    shape_coords(&reconstruct(s), to)
}

/// Rotation form of `relabel`; kept as an independent cross-check and for
/// cheap global-frame conversions.
pub fn relabel_rotation(s: &ShapeCoords, to: ClusterId) -> ShapeCoords {
    coords_in_cluster(global_embed(s), to)
}

/// Cartesian embedding of the coordinate numbers (cluster blind). Poles map
/// with phi := 0.
pub fn embed(s: &ShapeCoords) -> ShapeVector {
    let (st, ct) = s.theta.sin_cos();
    let (sp, cp) = if s.phi_defined {
        s.phi.sin_cos()
    } else {
        (0.0, 1.0)
    };
    ShapeVector::new(st * cp, st * sp, ct)
}

/// Embedding into the shared cluster-1 frame: cluster k's coordinates are
/// rotated by -(k-1) 2pi/3 about the E-Ebar (y) axis.
pub fn global_embed(s: &ShapeCoords) -> ShapeVector {
    let delta = -f64::from(s.cluster.index() - 1) * 2.0 * FRAC_PI_3;
    embed(s).rotate_y(delta)
}

/// Coordinates of an embedded point read in `cluster`'s frame.
pub fn coords_in_cluster(global: ShapeVector, cluster: ClusterId) -> ShapeCoords {
    let delta = f64::from(cluster.index() - 1) * 2.0 * FRAC_PI_3;
    let v = global.rotate_y(delta);
    let theta = v.z.clamp(-1.0, 1.0).acos();
    if v.x.hypot(v.y) < 1e-14 {
        ShapeCoords::pole(if v.z > 0.0 { 0.0 } else { PI }, cluster)
    } else {
        ShapeCoords::new(theta, v.y.atan2(v.x), cluster)
    }
}

/// Cluster-1 coordinates of an embedded point.
pub fn coords_from_global(global: ShapeVector) -> ShapeCoords {
    coords_in_cluster(global, ClusterId::C1)
}

/// Catalog position of a special shape, in cluster-1 coordinates.
///
/// E and Ebar are pinned at (pi/2, +/- pi/2); U(1), B(1) are the cluster-1
/// poles; B(2), B(3) follow from the base-pair collision substitution. The
/// remaining U and H points are constructed in their own cluster frame and
/// relabeled.
pub fn special_point(tag: SpecialShape) -> ShapeCoords {
    match tag {
        SpecialShape::E => ShapeCoords::new(FRAC_PI_2, FRAC_PI_2, ClusterId::C1),
        SpecialShape::Ebar => ShapeCoords::new(FRAC_PI_2, -FRAC_PI_2, ClusterId::C1),
        SpecialShape::U(ClusterId::C1) => ShapeCoords::pole(0.0, ClusterId::C1),
        SpecialShape::B(ClusterId::C1) => ShapeCoords::pole(PI, ClusterId::C1),
        SpecialShape::B(ClusterId::C2) => ShapeCoords::new(FRAC_PI_3, 0.0, ClusterId::C1),
        SpecialShape::B(ClusterId::C3) => ShapeCoords::new(FRAC_PI_3, PI, ClusterId::C1),
        SpecialShape::U(k) => relabel(&ShapeCoords::pole(0.0, k), ClusterId::C1)
            .expect("uniform collinear shape is not a triple collision"),
        SpecialShape::H(ClusterId::C1) => ShapeCoords::new(FRAC_PI_2, 0.0, ClusterId::C1),
        SpecialShape::H(k) => relabel(&ShapeCoords::new(FRAC_PI_2, 0.0, k), ClusterId::C1)
            .expect("H is not a triple collision"),
    }
}

/// All special shapes with their cluster-1 coordinates.
pub fn special_catalog() -> Vec<(SpecialShape, ShapeCoords)> {
    SpecialShape::ALL
        .into_iter()
        .map(|tag| (tag, special_point(tag)))
        .collect()
}
