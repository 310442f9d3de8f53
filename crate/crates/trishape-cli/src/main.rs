//! `trishape` — classify labeled triangles, trace the maximal-angle flow on
//! the shape sphere, and compute alpha-obtuse areas and probabilities.

mod output;
mod report;
mod svg;

use std::f64::consts::{FRAC_PI_3, PI};
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use trishape::euclid::{self, PlanarTriangle, Point2};
use trishape::flow::{assemble_max_angle_contour, DEFAULT_ARC_SAMPLES};
use trishape::mc::McConfig;
use trishape::measure::{self, ProbMethod};
use trishape::shape::{shape_coords, ClusterId};

use output::{
    contour_csv, degeneracy_str, special_points_out, to_json, AlphaClassOut, AngleOut, AnglesOut,
    ClassifyOut, ContourOut, ErrorOut, MaxAngleOut, ProbOut, ShapeCoordsOut,
};
use svg::SvgOptions;

/// Accepts radians by default; the suffixes `deg` and `rad` select units
/// explicitly, e.g. `--alpha 120deg` or `--alpha 2.0943951`.
fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim();
    let parse_num = |v: &str| {
        v.trim()
            .parse::<f64>()
            .map_err(|e| format!("invalid angle '{s}': {e}"))
    };
    if let Some(d) = t.strip_suffix("deg") {
        Ok(parse_num(d)?.to_radians())
    } else if let Some(r) = t.strip_suffix("rad") {
        parse_num(r)
    } else {
        parse_num(t)
    }
}

fn parse_point(s: &str) -> Result<Point2, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected 'x,y', got '{s}'"));
    }
    let x = parts[0]
        .trim()
        .parse::<f64>()
        .map_err(|e| format!("invalid coordinate '{s}': {e}"))?;
    let y = parts[1]
        .trim()
        .parse::<f64>()
        .map_err(|e| format!("invalid coordinate '{s}': {e}"))?;
    Ok(Point2::new(x, y))
}

fn parse_view(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected 'x,y,z', got '{s}'"));
    }
    let mut v = [0.0; 3];
    for (slot, p) in v.iter_mut().zip(&parts) {
        *slot = p
            .trim()
            .parse::<f64>()
            .map_err(|e| format!("invalid view axis '{s}': {e}"))?;
    }
    if v.iter().all(|c| *c == 0.0) {
        return Err("view axis must be nonzero".into());
    }
    Ok(v)
}

#[derive(Parser)]
#[command(
    name = "trishape",
    version,
    about = "Triangles on Kendall's shape sphere: classification, maximal-angle flow, probabilities"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a triangle: angles, maximal angle, right/Fermat/alpha
    /// classes, and shape coordinates for all three clusters.
    Classify(ClassifyArgs),
    /// Emit the maximal-angle contour at one alpha as JSON, CSV, or SVG.
    Contour(ContourArgs),
    /// Render the maximal-angle flow over the sphere as an SVG figure.
    FlowSvg(FlowSvgArgs),
    /// Probability that the maximal angle exceeds alpha, by the chosen
    /// method.
    Prob(ProbArgs),
    /// Recompute the published reference values and report pass/fail rows.
    PaperCheck(PaperCheckArgs),
    /// The catalog of special shapes in cluster-1 coordinates.
    SpecialPoints(SpecialPointsArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Three vertices A B C as x,y pairs.
    #[arg(long, num_args = 3, value_parser = parse_point, allow_hyphen_values = true, conflicts_with = "sides")]
    vertices: Option<Vec<Point2>>,
    /// Three side lengths a b c (opposite A, B, C).
    #[arg(long, num_args = 3)]
    sides: Option<Vec<f64>>,
    /// Optional threshold for an alpha classification.
    #[arg(long, value_parser = parse_angle)]
    alpha: Option<f64>,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Args)]
struct ContourArgs {
    /// Maximal angle in [60deg, 180deg].
    #[arg(long, value_parser = parse_angle)]
    alpha: f64,
    /// Samples per arc.
    #[arg(long, default_value_t = DEFAULT_ARC_SAMPLES)]
    resolution: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// View axis for SVG output.
    #[arg(long, value_parser = parse_view, allow_hyphen_values = true, default_value = "0,1,0")]
    view: [f64; 3],
    /// SVG width and height in pixels.
    #[arg(long, default_value_t = 600)]
    size: u32,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct FlowSvgArgs {
    /// Contour levels to draw (repeatable). Defaults to
    /// {75, 90, 105, 120, 150} degrees when omitted.
    #[arg(long, value_parser = parse_angle)]
    alpha: Vec<f64>,
    /// Draw only the sphere, separatrix and special points.
    #[arg(long, conflicts_with = "alpha")]
    no_contours: bool,
    #[arg(long, value_parser = parse_view, allow_hyphen_values = true, default_value = "0,1,0")]
    view: [f64; 3],
    #[arg(long, default_value_t = 600)]
    size: u32,
    #[arg(long, default_value_t = DEFAULT_ARC_SAMPLES)]
    resolution: usize,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Region quadrature of {apex angle >= alpha} (alpha >= 90deg).
    Region,
    /// The literal closed-form integral (alpha in [120deg, 180deg]).
    PaperLiteral,
    /// Monte Carlo on the uniform shape measure (any alpha above 60deg).
    Mc,
    /// The closed-form cap value (alpha = 90deg only).
    Cap,
}

#[derive(Args)]
struct ProbArgs {
    #[arg(long, value_parser = parse_angle)]
    alpha: f64,
    #[arg(long, value_enum, default_value_t = MethodArg::Region)]
    method: MethodArg,
    /// Monte Carlo sample count.
    #[arg(long, default_value_t = 1_000_000)]
    n: u64,
    /// Monte Carlo seed; falls back to TRISHAPE_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct PaperCheckArgs {
    #[arg(long, default_value_t = 1_000_000)]
    n: u64,
    #[arg(long)]
    seed: Option<u64>,
    /// Write the JSON report here in addition to the stdout table.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct SpecialPointsArgs {
    #[arg(long)]
    out: Option<String>,
}

enum AppError {
    /// Invalid geometry or an argument outside a method's domain: exit 2
    /// with an error record on stdout.
    Domain(String),
    /// Environment failures: exit 1 with a message on stderr.
    Internal(String),
}

impl From<trishape::Error> for AppError {
    fn from(e: trishape::Error) -> Self {
        AppError::Domain(e.to_string())
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Internal(e.to_string())
    }
}

fn seed_or_env(seed: Option<u64>) -> u64 {
    seed.or_else(|| {
        std::env::var("TRISHAPE_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(0)
}

/// Writes to stdout, treating a closed pipe as success so that piping into
/// `head` is quiet.
fn write_stdout(content: &str) -> Result<(), AppError> {
    use std::io::Write;
    match std::io::stdout().write_all(content.as_bytes()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(e.into()),
    }
}

fn emit(out: Option<&str>, content: &str) -> Result<(), AppError> {
    match out {
        Some(path) => fs::write(path, content)?,
        None => write_stdout(content)?,
    }
    Ok(())
}

/// Places B = (0,0), C = (a,0) and A in the upper half plane.
fn triangle_from_sides(sides: &[f64]) -> Result<PlanarTriangle, AppError> {
    let (a, b, c) = (sides[0], sides[1], sides[2]);
    if !(a.is_finite() && b.is_finite() && c.is_finite()) || a < 0.0 || b < 0.0 || c < 0.0 {
        return Err(AppError::Domain(
            "side lengths must be finite and non-negative".into(),
        ));
    }
    let eps = 1e-12 * a.max(b).max(c);
    if a + b < c - eps || b + c < a - eps || c + a < b - eps {
        return Err(AppError::Domain(format!(
            "side lengths ({a}, {b}, {c}) violate the triangle inequality"
        )));
    }
    if a == 0.0 && b == 0.0 && c == 0.0 {
        return Err(AppError::Domain("all side lengths are zero".into()));
    }
    // Angle at B from the cosine rule; collinear (degenerate) inputs land on
    // cos = +/- 1 and reconstruct exactly on the axis.
    let cos_b = if a * c == 0.0 {
        1.0
    } else {
        ((a * a + c * c - b * b) / (2.0 * a * c)).clamp(-1.0, 1.0)
    };
    let sin_b = (1.0 - cos_b * cos_b).max(0.0).sqrt();
    PlanarTriangle::new(
        Point2::new(c * cos_b, c * sin_b),
        Point2::new(0.0, 0.0),
        Point2::new(a, 0.0),
    )
    .map_err(|e| AppError::Domain(e.to_string()))
}

fn cmd_classify(args: &ClassifyArgs) -> Result<(), AppError> {
    let tri = match (&args.vertices, &args.sides) {
        (Some(v), None) => PlanarTriangle::new(v[0], v[1], v[2])
            .map_err(|e| AppError::Domain(e.to_string()))?,
        (None, Some(s)) => triangle_from_sides(s)?,
        _ => {
            return Err(AppError::Domain(
                "provide exactly one of --vertices or --sides".into(),
            ))
        }
    };
    let deg = euclid::degeneracy(&tri);
    let angles = euclid::vertex_angles(&tri)?;
    let max = euclid::max_angle(&angles);
    let right = euclid::classify_alpha(&angles, std::f64::consts::FRAC_PI_2)?;
    let fermat = euclid::classify_fermat(&angles);
    let alpha_class = match args.alpha {
        Some(alpha) => Some(AlphaClassOut {
            alpha: AngleOut::new(alpha),
            class: output::trichotomy_str(euclid::classify_alpha(&angles, alpha)?),
        }),
        None => None,
    };
    let mut coords = Vec::new();
    for k in ClusterId::ALL {
        coords.push(ShapeCoordsOut::new(&shape_coords(&tri, k)?));
    }
    let record = ClassifyOut {
        degeneracy: degeneracy_str(deg),
        angles: AnglesOut::new(&angles),
        max_angle: MaxAngleOut {
            rad: max.value,
            deg: max.value.to_degrees(),
            vertices: max.vertices.iter().map(|v| v.to_string()).collect(),
        },
        right_class: output::trichotomy_str(right),
        fermat_class: output::trichotomy_str(fermat),
        alpha_class,
        shape_coords: coords,
    };
    emit(args.out.as_deref(), &to_json(&record))
}

fn cmd_contour(args: &ContourArgs) -> Result<(), AppError> {
    let contour = assemble_max_angle_contour(args.alpha, args.resolution)?;
    let content = match args.format {
        Format::Json => to_json(&ContourOut::new(&contour, args.resolution)),
        Format::Csv => contour_csv(&contour),
        Format::Svg => {
            let opts = SvgOptions {
                size: args.size,
                view: args.view,
                resolution: args.resolution,
            };
            svg::render_contour(&contour, &opts)
        }
    };
    emit(args.out.as_deref(), &content)
}

fn cmd_flow_svg(args: &FlowSvgArgs) -> Result<(), AppError> {
    let default_alphas: Vec<f64> = [75.0f64, 90.0, 105.0, 120.0, 150.0]
        .iter()
        .map(|d| d.to_radians())
        .collect();
    let alphas: &[f64] = if args.no_contours {
        &[]
    } else if args.alpha.is_empty() {
        &default_alphas
    } else {
        &args.alpha
    };
    for &alpha in alphas {
        if !(FRAC_PI_3 - 1e-12..=PI + 1e-12).contains(&alpha) {
            return Err(AppError::Domain(format!(
                "alpha = {alpha} outside [pi/3, pi]"
            )));
        }
    }
    let opts = SvgOptions {
        size: args.size,
        view: args.view,
        resolution: args.resolution,
    };
    let content = svg::render_flow(alphas, &opts)?;
    emit(args.out.as_deref(), &content)
}

fn cmd_prob(args: &ProbArgs) -> Result<(), AppError> {
    let method = match args.method {
        MethodArg::Region => ProbMethod::RegionQuadrature,
        MethodArg::PaperLiteral => ProbMethod::PaperLiteralIntegral,
        MethodArg::Mc => ProbMethod::MonteCarlo,
        MethodArg::Cap => ProbMethod::CapClosedForm,
    };
    let seed = seed_or_env(args.seed);
    let cfg = McConfig::new(args.n, seed);
    let result = measure::prob_alpha_obtuse(args.alpha, method, Some(&cfg))?;
    let area = match method {
        ProbMethod::RegionQuadrature => Some(measure::region_area(args.alpha)?.value),
        ProbMethod::PaperLiteralIntegral => Some(measure::paper_literal_area(args.alpha)?.value),
        _ => None,
    };
    let record = ProbOut {
        alpha: AngleOut::new(args.alpha),
        method: result.method.as_str().to_string(),
        p: result.p,
        error_estimate: result.error_estimate,
        area_steradians: area,
        n: (method == ProbMethod::MonteCarlo).then_some(args.n),
        seed: (method == ProbMethod::MonteCarlo).then_some(seed),
    };
    emit(args.out.as_deref(), &to_json(&record))
}

fn cmd_paper_check(args: &PaperCheckArgs) -> Result<bool, AppError> {
    let seed = seed_or_env(args.seed);
    let report = report::run(args.n, seed)?;
    write_stdout(&report::format_table(&report))?;
    if let Some(path) = &args.out {
        fs::write(path, to_json(&report))?;
    }
    Ok(report.failed == 0)
}

fn run(cli: Cli) -> Result<bool, AppError> {
    match &cli.cmd {
        Cmd::Classify(args) => cmd_classify(args).map(|()| true),
        Cmd::Contour(args) => cmd_contour(args).map(|()| true),
        Cmd::FlowSvg(args) => cmd_flow_svg(args).map(|()| true),
        Cmd::Prob(args) => cmd_prob(args).map(|()| true),
        Cmd::PaperCheck(args) => cmd_paper_check(args),
        Cmd::SpecialPoints(args) => {
            emit(args.out.as_deref(), &to_json(&special_points_out())).map(|()| true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(AppError::Domain(message)) => {
            let _ = write_stdout(&to_json(&ErrorOut {
                error: message,
                kind: "domain".into(),
            }));
            ExitCode::from(2)
        }
        Err(AppError::Internal(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
