//! The maximal-angle flow: constant-angle curves, maximal-angle contours
//! with cusp truncation, the separatrix of kissing cap-circles, critical
//! point probes, and symmetry checks.
//!
//! Curves are parameterized by phi. Solving the cot law as a quadratic in V,
//! V^2 - 2 k sin(phi) V - 1 = 0, gives the unique positive root
//! V+ = k s + sqrt(k^2 s^2 + 1) with s = |sin phi|; the root product is -1,
//! so theta(phi) = 2 arctan(V+/sqrt(3)) is single valued. The arcsin form in
//! the Legendre variable X = cos theta is retained in `phi_of_theta` as a
//! consistency check where it is defined.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

use crate::angle::{max_angle_from_shape, ConstantK, SQRT_3};
use crate::error::{Error, Result};
use crate::euclid;
use crate::shape::{
    coords_from_global, global_embed, special_point, ClusterId, ShapeCoords, ShapeVector,
    SpecialShape,
};

/// Default samples per hemisphere arc, cosine-clustered toward endpoints.
pub const DEFAULT_ARC_SAMPLES: usize = 512;

const ALPHA_EPS: f64 = 1e-12;
const TWO_PI_3: f64 = 2.0 * FRAC_PI_3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hemisphere {
    Upper,
    Lower,
    /// Arcs not confined to one hemisphere: the cap-circles at alpha = pi/2
    /// and the collinearity equator at alpha = pi.
    Full,
}

impl Hemisphere {
    pub fn as_str(self) -> &'static str {
        match self {
            Hemisphere::Upper => "upper",
            Hemisphere::Lower => "lower",
            Hemisphere::Full => "full",
        }
    }
}

/// Endpoint annotations for constant-angle curves. `BPointExcluded` marks a
/// binary-collision limit that is not part of the curve;
/// `TallIsoscelesTurning` and `Pole` describe endpoints of branch-split
/// representations (unused by the phi parameterization, which has no
/// turning); the alpha = pi/2 circle keeps its B points and carries no flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndpointFlag {
    BPointExcluded,
    TallIsoscelesTurning,
    Pole,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurveSample {
    pub theta: f64,
    pub phi: f64,
    /// Legendre variable X = cos theta.
    pub x: f64,
}

/// One hemisphere branch of a constant-angle curve, in the cluster's own
/// coordinates.
#[derive(Clone, Debug)]
pub struct ConstantAngleCurve {
    pub alpha: f64,
    pub cluster: ClusterId,
    pub hemisphere: Hemisphere,
    pub samples: Vec<CurveSample>,
    pub endpoint_flags: [Option<EndpointFlag>; 2],
}

/// One arc of a maximal-angle contour. Samples are in the arc's own cluster
/// frame (`ShapeCoords.cluster` records provenance); use `global_embed` for
/// the shared cluster-1 picture.
#[derive(Clone, Debug)]
pub struct ContourArc {
    pub cluster: ClusterId,
    pub hemisphere: Hemisphere,
    pub samples: Vec<ShapeCoords>,
}

/// The level set of the maximal angle at one alpha. Cusps and excluded limit
/// points are reported in cluster-1 coordinates.
#[derive(Clone, Debug)]
pub struct MaxAngleContour {
    pub alpha: f64,
    pub arcs: Vec<ContourArc>,
    pub cusps: Vec<ShapeCoords>,
    pub excluded_limit_points: Vec<ShapeCoords>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CriticalKind {
    Centre,
    KissingNode,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RingSample {
    pub bearing: f64,
    pub alpha_max: f64,
}

/// Ring probe of a critical point: the alpha_max profile at fixed geodesic
/// radius, plus where the ring crosses the rightness circles.
#[derive(Clone, Debug)]
pub struct CriticalPointReport {
    pub location: ShapeCoords,
    pub kind: CriticalKind,
    pub ring: Vec<RingSample>,
    /// Bearings at which the ring crosses each cluster's cap-circle.
    pub cap_crossings: Vec<(ClusterId, f64)>,
    pub separatrix_crossings: usize,
}

/// Stationary points dtheta/dphi = 0 of a contour's arcs. The alpha = pi/2
/// contour is constant-theta and reported as degenerate instead.
#[derive(Clone, Debug)]
pub struct StationaryPoints {
    pub degenerate_constant_theta: bool,
    pub points: Vec<ShapeCoords>,
}

/// Hausdorff distances of a contour against its images under the flow's
/// symmetries: the equatorial reflection phi -> -phi and the +/- 2pi/3
/// relabel rotations about the E-Ebar axis.
#[derive(Clone, Copy, Debug)]
pub struct SymmetryReport {
    pub reflection_hausdorff: f64,
    pub rotation_hausdorff: [f64; 2],
}

impl SymmetryReport {
    pub fn max(&self) -> f64 {
        self.reflection_hausdorff
            .max(self.rotation_hausdorff[0])
            .max(self.rotation_hausdorff[1])
    }
}

/// The positive quadratic root V+ for k = cot(alpha) and s = |sin phi|.
/// Rationalized for k < 0 to avoid cancellation as alpha approaches pi.
fn v_plus(k: f64, s: f64) -> f64 {
    let d = (k * k * s * s + 1.0).sqrt();
    if k >= 0.0 {
        k * s + d
    } else {
        1.0 / (d - k * s)
    }
}

fn theta_from_v(v: f64) -> f64 {
    2.0 * (v / SQRT_3).atan()
}

fn check_curve_alpha(alpha: f64) -> Result<ConstantK> {
    if !(alpha > FRAC_PI_3 && alpha < PI) {
        return Err(Error::AlphaDomain {
            alpha,
            domain: "constant-angle curves exist for alpha in (pi/3, pi)",
        });
    }
    ConstantK::new(alpha)
}

/// theta of the constant-angle curve at a given phi;
/// theta = 2 arctan(V+ / sqrt(3)). Single valued on (0, pi).
pub fn theta_of_phi(alpha: f64, phi: f64) -> Result<f64> {
    let k = check_curve_alpha(alpha)?;
    Ok(theta_from_v(v_plus(k.k, phi.sin().abs())))
}

/// The arcsin form: phi = arcsin((1 - 2X) / (sqrt(3) k sqrt(1 - X^2))) on
/// the principal branch. Defined only for k != 0 and |argument| <= 1.
pub fn phi_of_theta(alpha: f64, theta: f64) -> Result<f64> {
    let k = check_curve_alpha(alpha)?;
    if k.k == 0.0 {
        return Err(Error::RightAngleCap);
    }
    let x = theta.cos();
    let arg = (1.0 - 2.0 * x) / (SQRT_3 * k.k * (1.0 - x * x).sqrt());
    if arg.abs() > 1.0 + 1e-12 {
        return Err(Error::NoCurveAtTheta { arg });
    }
    Ok(arg.clamp(-1.0, 1.0).asin())
}

/// Cosine-clustered nodes on the open interval (a, b).
fn open_cosine_nodes(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|j| {
            let t = (j as f64 + 0.5) / n as f64;
            a + (b - a) * 0.5 * (1.0 - (PI * t).cos())
        })
        .collect()
}

/// Cosine-clustered nodes on the closed interval [a, b].
fn closed_cosine_nodes(a: f64, b: f64, n: usize) -> Vec<f64> {
    let m = (n.max(2) - 1) as f64;
    (0..n.max(2))
        .map(|j| {
            let t = j as f64 / m;
            a + (b - a) * 0.5 * (1.0 - (PI * t).cos())
        })
        .collect()
}

/// One hemisphere branch of the constant-angle curve of `cluster`.
///
/// For alpha != pi/2 the branch spans phi in (0, pi) (mirrored for the lower
/// hemisphere) and both endpoints are excluded B limit points. For
/// alpha = pi/2 the branch is the closed cap-circle theta = pi/3 including
/// its B points.
pub fn constant_angle_curve(
    alpha: f64,
    cluster: ClusterId,
    hemisphere: Hemisphere,
    n: usize,
) -> Result<ConstantAngleCurve> {
    let k = check_curve_alpha(alpha)?;
    if n < 2 {
        return Err(Error::AlphaDomain {
            alpha,
            domain: "need at least 2 samples",
        });
    }
    let mirror = hemisphere == Hemisphere::Lower;
    let (phis, flags): (Vec<f64>, [Option<EndpointFlag>; 2]) = if k.k == 0.0 {
        (closed_cosine_nodes(0.0, PI, n), [None, None])
    } else {
        (
            open_cosine_nodes(0.0, PI, n),
            [Some(EndpointFlag::BPointExcluded); 2],
        )
    };
    let samples = phis
        .into_iter()
        .map(|phi| {
            let theta = theta_from_v(v_plus(k.k, phi.sin().abs()));
            CurveSample {
                theta,
                phi: if mirror { -phi } else { phi },
                x: theta.cos(),
            }
        })
        .collect();
    Ok(ConstantAngleCurve {
        alpha,
        cluster,
        hemisphere,
        samples,
        endpoint_flags: flags,
    })
}

/// Upper-hemisphere branch, the default orientation.
pub fn sample_constant_angle_curve(
    alpha: f64,
    cluster: ClusterId,
    n: usize,
) -> Result<ConstantAngleCurve> {
    constant_angle_curve(alpha, cluster, Hemisphere::Upper, n)
}

/// phi of the cusp adjacent to the phi -> 0 end of an acute upper arc: the
/// parameter at which the base-`to` vertex's angle equals alpha. Bisection
/// to 1e-12 in phi; the reconstruct-and-measure oracle drives the
/// bracketing function.
fn cusp_phi(alpha: f64) -> f64 {
    let k = ConstantK::new(alpha).expect("acute alpha in range");
    let g = |phi: f64| -> f64 {
        let theta = theta_from_v(v_plus(k.k, phi.sin()));
        let s = ShapeCoords::new(theta, phi, ClusterId::C1);
        let angles = euclid::vertex_angles(&crate::shape::reconstruct(&s))
            .expect("interior curve points are not collisions");
        angles.at_c - alpha
    };
    let (mut lo, mut hi) = (1e-9, FRAC_PI_2);
    debug_assert!(g(lo) > 0.0 && g(hi) < 0.0);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn b_points() -> [ShapeCoords; 3] {
    [
        special_point(SpecialShape::B(ClusterId::C1)),
        special_point(SpecialShape::B(ClusterId::C2)),
        special_point(SpecialShape::B(ClusterId::C3)),
    ]
}

/// Assembles the maximal-angle level set at `alpha` with `n` samples per
/// arc.
///
/// alpha = pi/3 collapses to the two equilateral point orbits; acute alpha
/// yields six cusped arcs truncated on the flat-isosceles meridians;
/// alpha = pi/2 yields the three kissing cap-circles; obtuse alpha yields
/// three disjoint loops with their B limit points excluded; alpha = pi is
/// the collinearity equator minus its three punctures.
pub fn assemble_max_angle_contour(alpha: f64, n: usize) -> Result<MaxAngleContour> {
    if !(FRAC_PI_3 - ALPHA_EPS..=PI + ALPHA_EPS).contains(&alpha) {
        return Err(Error::AlphaDomain {
            alpha,
            domain: "maximal angle lies in [pi/3, pi]",
        });
    }

    if (alpha - FRAC_PI_3).abs() <= ALPHA_EPS {
        // Degenerate point orbits E and Ebar.
        let arcs = vec![
            ContourArc {
                cluster: ClusterId::C1,
                hemisphere: Hemisphere::Upper,
                samples: vec![special_point(SpecialShape::E)],
            },
            ContourArc {
                cluster: ClusterId::C1,
                hemisphere: Hemisphere::Lower,
                samples: vec![special_point(SpecialShape::Ebar)],
            },
        ];
        return Ok(MaxAngleContour {
            alpha,
            arcs,
            cusps: Vec::new(),
            excluded_limit_points: Vec::new(),
        });
    }

    if (alpha - PI).abs() <= ALPHA_EPS {
        return Ok(collinearity_equator_contour(alpha, n));
    }

    if (alpha - FRAC_PI_2).abs() <= ALPHA_EPS {
        // The separatrix: three full cap-circles, B points included.
        let mut arcs = Vec::new();
        for cluster in ClusterId::ALL {
            let samples = (0..=n)
                .map(|j| {
                    let phi = -PI + 2.0 * PI * j as f64 / n as f64;
                    ShapeCoords::new(FRAC_PI_3, phi, cluster)
                })
                .collect();
            arcs.push(ContourArc {
                cluster,
                hemisphere: Hemisphere::Full,
                samples,
            });
        }
        return Ok(MaxAngleContour {
            alpha,
            arcs,
            cusps: Vec::new(),
            excluded_limit_points: Vec::new(),
        });
    }

    let k = ConstantK::new(alpha)?;
    let mut arcs = Vec::new();
    let mut cusps = Vec::new();
    let mut excluded = Vec::new();

    if alpha < FRAC_PI_2 {
        // Acute: truncate each branch where a second angle overtakes alpha.
        let phi_c = cusp_phi(alpha);
        let nodes = closed_cosine_nodes(phi_c, PI - phi_c, n);
        for cluster in ClusterId::ALL {
            for hemisphere in [Hemisphere::Upper, Hemisphere::Lower] {
                let mirror = hemisphere == Hemisphere::Lower;
                let samples = nodes
                    .iter()
                    .map(|&phi| {
                        let theta = theta_from_v(v_plus(k.k, phi.sin()));
                        ShapeCoords::new(theta, if mirror { -phi } else { phi }, cluster)
                    })
                    .collect();
                arcs.push(ContourArc {
                    cluster,
                    hemisphere,
                    samples,
                });
            }
        }
        // Three cusps per hemisphere: the rotation orbit of the cluster-1
        // cusp at phi_c, mirrored below the equator.
        let theta_c = theta_from_v(v_plus(k.k, phi_c.sin()));
        let seed = global_embed(&ShapeCoords::new(theta_c, phi_c, ClusterId::C1));
        for j in 0..3 {
            let up = seed.rotate_y(f64::from(j) * TWO_PI_3);
            cusps.push(coords_from_global(up));
            cusps.push(coords_from_global(ShapeVector::new(up.x, -up.y, up.z)));
        }
    } else {
        // Obtuse: three disjoint loops, open at the B limit points.
        let nodes = open_cosine_nodes(0.0, PI, n);
        for cluster in ClusterId::ALL {
            for hemisphere in [Hemisphere::Upper, Hemisphere::Lower] {
                let mirror = hemisphere == Hemisphere::Lower;
                let samples = nodes
                    .iter()
                    .map(|&phi| {
                        let theta = theta_from_v(v_plus(k.k, phi.sin()));
                        ShapeCoords::new(theta, if mirror { -phi } else { phi }, cluster)
                    })
                    .collect();
                arcs.push(ContourArc {
                    cluster,
                    hemisphere,
                    samples,
                });
            }
        }
        excluded = b_points().to_vec();
    }

    Ok(MaxAngleContour {
        alpha,
        arcs,
        cusps,
        excluded_limit_points: excluded,
    })
}

/// The alpha = pi limit: the collinearity circle minus the three B
/// punctures. Arc k passes through U(k), where vertex k sits between the
/// other two and holds the straight angle.
fn collinearity_equator_contour(alpha: f64, n: usize) -> MaxAngleContour {
    let mut arcs = Vec::new();
    for cluster in ClusterId::ALL {
        // Own-frame position angle along the collinear circle, psi in
        // (-pi/3, pi/3) between the adjacent punctures, through the U pole.
        let samples = open_cosine_nodes(-FRAC_PI_3, FRAC_PI_3, n)
            .into_iter()
            .map(|psi| {
                if psi.abs() < 1e-15 {
                    ShapeCoords::pole(0.0, cluster)
                } else if psi > 0.0 {
                    ShapeCoords::new(psi, 0.0, cluster)
                } else {
                    ShapeCoords::new(-psi, PI, cluster)
                }
            })
            .collect();
        arcs.push(ContourArc {
            cluster,
            hemisphere: Hemisphere::Full,
            samples,
        });
    }
    MaxAngleContour {
        alpha,
        arcs,
        cusps: Vec::new(),
        excluded_limit_points: b_points().to_vec(),
    }
}

/// The alpha = pi/2 contour: the three kissing cap-circles of rightness.
pub fn separatrix() -> MaxAngleContour {
    assemble_max_angle_contour(FRAC_PI_2, DEFAULT_ARC_SAMPLES)
        .expect("pi/2 is in the contour domain")
}

/// Pairwise kissing points of the separatrix circles: circles i and j are
/// tangent at the normalized sum of their cap axes, which is the B point of
/// the remaining cluster.
pub fn separatrix_kissing_points() -> Vec<(ClusterId, ClusterId, ShapeCoords)> {
    let axis = |k: ClusterId| global_embed(&ShapeCoords::pole(0.0, k));
    let mut out = Vec::new();
    for (i, j) in [
        (ClusterId::C1, ClusterId::C2),
        (ClusterId::C2, ClusterId::C3),
        (ClusterId::C3, ClusterId::C1),
    ] {
        let p = axis(i).add(axis(j)).normalized();
        out.push((i, j, coords_from_global(p)));
    }
    out
}

fn catalog_match(location: &ShapeCoords) -> Option<(SpecialShape, CriticalKind)> {
    let g = global_embed(location);
    let candidates = [
        (SpecialShape::E, CriticalKind::Centre),
        (SpecialShape::Ebar, CriticalKind::Centre),
        (SpecialShape::B(ClusterId::C1), CriticalKind::KissingNode),
        (SpecialShape::B(ClusterId::C2), CriticalKind::KissingNode),
        (SpecialShape::B(ClusterId::C3), CriticalKind::KissingNode),
    ];
    candidates
        .into_iter()
        .find(|(tag, _)| global_embed(&special_point(*tag)).distance(g) < 1e-9)
}

fn theta_in_cluster(global: ShapeVector, cluster: ClusterId) -> f64 {
    let delta = f64::from(cluster.index() - 1) * TWO_PI_3;
    global.rotate_y(delta).z.clamp(-1.0, 1.0).acos()
}

/// Probes a critical point with a ring of `m` bearings at geodesic radius
/// `epsilon`.
///
/// Centres (E, Ebar) report the alpha_max profile, which exceeds pi/3 at
/// every bearing. Kissing nodes (the B points) additionally report where the
/// ring crosses the two cap-circles through the point; no linear
/// classification is asserted for them.
pub fn probe_critical_point(
    location: &ShapeCoords,
    epsilon: f64,
    m: usize,
) -> Result<CriticalPointReport> {
    let (_, kind) = catalog_match(location).ok_or(Error::UnsupportedProbeLocation)?;
    let g = global_embed(location);
    // Tangent bases chosen so the E and Ebar rings are bearing-for-bearing
    // mirror images.
    let (u, w) = match kind {
        CriticalKind::Centre => (
            ShapeVector::new(1.0, 0.0, 0.0),
            ShapeVector::new(0.0, 0.0, 1.0),
        ),
        CriticalKind::KissingNode => {
            let e = ShapeVector::new(0.0, 1.0, 0.0);
            (e, g.cross(e).normalized())
        }
    };
    let (se, ce) = epsilon.sin_cos();
    let ring_point = |bearing: f64| -> ShapeVector {
        let (sb, cb) = bearing.sin_cos();
        g.scale(ce).add(u.scale(se * cb)).add(w.scale(se * sb))
    };

    let mut ring = Vec::with_capacity(m);
    for i in 0..m {
        let bearing = 2.0 * PI * i as f64 / m as f64;
        let coords = coords_from_global(ring_point(bearing));
        let alpha_max = max_angle_from_shape(&coords)?.alpha_max;
        ring.push(RingSample { bearing, alpha_max });
    }

    // Crossings of each cap-circle, located by sign change + bisection of
    // theta_k - pi/3 around the ring. Counting per circle keeps the roots
    // well separated even though the two circles are tangent at B.
    let mut cap_crossings = Vec::new();
    let scan = 1440.max(m);
    for cluster in ClusterId::ALL {
        let f = |b: f64| theta_in_cluster(ring_point(b), cluster) - FRAC_PI_3;
        let mut prev = f(0.0);
        for i in 1..=scan {
            let b = 2.0 * PI * i as f64 / scan as f64;
            let cur = f(b);
            if prev == 0.0 || prev.signum() != cur.signum() {
                let (mut lo, mut hi) = (2.0 * PI * (i - 1) as f64 / scan as f64, b);
                for _ in 0..60 {
                    let mid = 0.5 * (lo + hi);
                    if f(lo).signum() == f(mid).signum() {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                cap_crossings.push((cluster, 0.5 * (lo + hi)));
            }
            prev = cur;
        }
    }
    cap_crossings.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap());
    let separatrix_crossings = cap_crossings.len();

    Ok(CriticalPointReport {
        location: *location,
        kind,
        ring,
        cap_crossings,
        separatrix_crossings,
    })
}

/// Locates dtheta/dphi = 0 along the contour's phi-parameterized arcs by
/// bisecting the analytic derivative of V+; V+ is symmetric in sin(phi), so
/// the roots sit on the tall-isosceles meridians phi = +/- pi/2.
pub fn stationary_points(contour: &MaxAngleContour) -> StationaryPoints {
    if (contour.alpha - FRAC_PI_2).abs() <= ALPHA_EPS {
        return StationaryPoints {
            degenerate_constant_theta: true,
            points: Vec::new(),
        };
    }
    let mut points = Vec::new();
    let Ok(k) = check_curve_alpha(contour.alpha) else {
        return StationaryPoints {
            degenerate_constant_theta: false,
            points,
        };
    };
    // dV+/dphi up to a positive factor: cos(phi) for the upper branch.
    let dv = |phi: f64| {
        let s = phi.sin();
        phi.cos() * (1.0 + k.k * s.abs() / (k.k * k.k * s * s + 1.0).sqrt()) * s.signum()
    };
    for arc in &contour.arcs {
        if arc.hemisphere == Hemisphere::Full || arc.samples.len() < 2 {
            continue;
        }
        let (mut lo, mut hi) = (
            arc.samples.first().unwrap().phi,
            arc.samples.last().unwrap().phi,
        );
        if lo > hi {
            std::mem::swap(&mut lo, &mut hi);
        }
        let target = if arc.hemisphere == Hemisphere::Upper {
            FRAC_PI_2
        } else {
            -FRAC_PI_2
        };
        if !(lo < target && target < hi) {
            continue;
        }
        if dv(lo).signum() == dv(hi).signum() {
            continue;
        }
        let (mut a, mut b) = (lo, hi);
        while b - a > 1e-12 {
            let mid = 0.5 * (a + b);
            if dv(a).signum() == dv(mid).signum() {
                a = mid;
            } else {
                b = mid;
            }
        }
        let phi = 0.5 * (a + b);
        let theta = theta_from_v(v_plus(k.k, phi.sin().abs()));
        points.push(ShapeCoords::new(theta, phi, arc.cluster));
    }
    StationaryPoints {
        degenerate_constant_theta: false,
        points,
    }
}

fn contour_cloud(contour: &MaxAngleContour) -> Vec<ShapeVector> {
    contour
        .arcs
        .iter()
        .flat_map(|arc| arc.samples.iter().map(global_embed))
        .collect()
}

fn hausdorff(a: &[ShapeVector], b: &[ShapeVector]) -> f64 {
    let directed = |xs: &[ShapeVector], ys: &[ShapeVector]| {
        xs.iter()
            .map(|x| {
                ys.iter()
                    .map(|y| x.distance(*y))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    directed(a, b).max(directed(b, a))
}

/// Verifies the contour's invariance under the equatorial reflection and the
/// +/- 2pi/3 relabel rotations, as point sets.
pub fn symmetry_check(contour: &MaxAngleContour) -> SymmetryReport {
    let cloud = contour_cloud(contour);
    let reflected: Vec<ShapeVector> = cloud
        .iter()
        .map(|v| ShapeVector::new(v.x, -v.y, v.z))
        .collect();
    let rot_plus: Vec<ShapeVector> = cloud.iter().map(|v| v.rotate_y(TWO_PI_3)).collect();
    let rot_minus: Vec<ShapeVector> = cloud.iter().map(|v| v.rotate_y(-TWO_PI_3)).collect();
    SymmetryReport {
        reflection_hausdorff: hausdorff(&reflected, &cloud),
        rotation_hausdorff: [hausdorff(&rot_plus, &cloud), hausdorff(&rot_minus, &cloud)],
    }
}

/// Hausdorff distance of the contour against its image under an arbitrary
/// composition of the reflection (optional) and a rotation by
/// `rotations` * 2pi/3.
pub fn symmetry_hausdorff_under(contour: &MaxAngleContour, rotations: u8, reflect: bool) -> f64 {
    let cloud = contour_cloud(contour);
    let image: Vec<ShapeVector> = cloud
        .iter()
        .map(|v| {
            let v = if reflect {
                ShapeVector::new(v.x, -v.y, v.z)
            } else {
                *v
            };
            v.rotate_y(f64::from(rotations) * TWO_PI_3)
        })
        .collect();
    hausdorff(&image, &cloud)
}
