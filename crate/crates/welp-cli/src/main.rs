//! Command-line front end for the exact lattice-polygon toolkit.
//!
//! Every subcommand parses a polygon document (or generates one), runs one
//! family of checks, and prints a machine-readable JSON report, or a plain
//! table under `--human`. One exit-code convention holds throughout:
//!
//! * 0: every check passed (or the command only reports, never judges);
//! * 1: a mathematical check failed;
//! * 2: the input could not be used (parse error, unreadable file, violated
//!   precondition, bad flag).
//!
//! All exact values print in canonical `p/q` form and re-parse to identical
//! values; floats appear only in the explicitly approximate euclidean
//! cross-checks.

mod render;

use std::fmt;
use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use welp_core::{
    area_edge, axiom_samples, check_ang_axioms, check_dang_axioms, classify, farey_sunburst,
    figure_eight, oblique_square, parse_polygon, pick_report, polygon_to_json,
    random_closed_polygon, random_simple_polygon, rectangle, turning_angles, welp, welp_edge,
    AngleTurns, AxiomReport, Error as CoreError, IntegerPolygon, LatticeBox, LatticeVec, PointKind,
    Polygon, Rat, Seed, TheoremStatus,
};

use render::{render_svg, RenderSpec, DEFAULT_PALETTE};

/// Tolerance for the floating-point euclidean measure in the axiom harness.
const ANG_TOLERANCE: f64 = 1e-9;

#[derive(Parser)]
#[command(
    name = "welp",
    version,
    about = "Exact checks on lattice polygons: areas, winding sums, lattice counts, turning angles"
)]
struct Cli {
    /// Print tables meant for people instead of JSON documents
    #[arg(long, global = true)]
    human: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Signed area of a polygon from the trapezoid edge sum
    Area {
        /// Polygon document; use "-" for standard input
        file: PathBuf,
    },
    /// Both area identities: the winding sum and the lattice-count formula
    Pick {
        /// Polygon document; use "-" for standard input
        file: PathBuf,
        /// Sum windings over a centered box of this radius (at least the
        /// default covering radius; smaller values are rejected)
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        box_radius: Option<i64>,
        /// Reverse a negatively oriented polygon before checking
        #[arg(long)]
        normalize_orientation: bool,
    },
    /// Locate one lattice point relative to a simple polygon
    #[command(allow_negative_numbers = true)]
    Classify {
        /// Polygon document; use "-" for standard input
        file: PathBuf,
        /// x coordinate of the lattice point
        x: i64,
        /// y coordinate of the lattice point
        y: i64,
    },
    /// Turning angles, interior angles, and the turning number
    Hopf {
        /// Polygon document; use "-" for standard input
        file: PathBuf,
        /// Report on any closed polygon, even self-intersecting or reversed
        /// ones; the turning-number check becomes a flag instead of a verdict
        #[arg(long)]
        permissive: bool,
    },
    /// Per-edge comparison of the winding sum against the area sum
    Welp {
        /// Polygon document; use "-" for standard input
        file: PathBuf,
        /// Sum windings over a centered box of this radius (at least the
        /// default covering radius; smaller values are rejected)
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        box_radius: Option<i64>,
    },
    /// Run an angle measure through its defining axioms on seeded samples
    Axioms {
        /// Which measure to test
        #[arg(long, value_enum)]
        measure: Measure,
        /// Number of seeded samples (at least 1)
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u32).range(1..))]
        samples: u32,
        /// Seed for the sample stream
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Emit a generated polygon as a polygon document
    Gen {
        #[command(subcommand)]
        shape: Shape,
        /// Write to this file instead of standard output
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Draw the polygon and its lattice classification as a standalone SVG
    Render {
        /// Polygon document; use "-" for standard input
        file: PathBuf,
        /// Write to this file instead of standard output
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Pixels per lattice unit
        #[arg(long, default_value_t = 32, value_parser = clap::value_parser!(i64).range(1..=1024))]
        cell: i64,
        /// Extra lattice cells drawn around the bounding box
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(i64).range(0..=64))]
        margin: i64,
        /// Leave out the coordinate grid
        #[arg(long)]
        no_grid: bool,
        /// Polygon stroke width in pixels
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(i64).range(1..=64))]
        stroke: i64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Measure {
    /// Exact discrete measure counting signed vertical-axis crossings
    Dang,
    /// Floating-point euclidean measure, checked within a small tolerance
    Ang,
}

#[derive(Subcommand)]
enum Shape {
    /// Axis-aligned a-by-b rectangle with one corner at the origin
    Rectangle { a: i64, b: i64 },
    /// Square with vertices (3,0), (0,3), (-3,0), (0,-3)
    Oblique,
    /// Corner-only polygon through the primitive vectors of max norm <= m
    Farey { m: i64 },
    /// Self-intersecting quadrilateral with windings of both signs
    Eight,
    /// Star-shaped simple polygon with k seeded vertices from {-r..r}^2
    RandomSimple {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: i64,
    },
    /// Closed polygon through k seeded points, self-intersections allowed
    RandomClosed {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: i64,
    },
}

/// Anything that stops a command before its checks can finish.
enum Failure {
    Core(CoreError),
    Io { path: PathBuf, source: std::io::Error },
    Usage(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Io { path, source } => write!(f, "{}: {source}", path.display()),
            Failure::Usage(msg) => f.write_str(msg),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Failure {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> ExitCode {
        match self {
            // A broken internal invariant is a failed mathematical check
            // surfacing, not unusable input.
            Failure::Core(CoreError::Internal(_)) => ExitCode::from(1),
            _ => ExitCode::from(2),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(failure) => {
            eprintln!("error: {failure}");
            failure.exit_code()
        }
    }
}

/// Dispatches one subcommand; `Ok(passed)` says whether every check held.
fn run(cli: &Cli) -> Result<bool, Failure> {
    match &cli.command {
        Command::Area { file } => cmd_area(file, cli.human),
        Command::Pick { file, box_radius, normalize_orientation } => {
            cmd_pick(file, *box_radius, *normalize_orientation, cli.human)
        }
        Command::Classify { file, x, y } => cmd_classify(file, *x, *y, cli.human),
        Command::Hopf { file, permissive } => cmd_hopf(file, *permissive, cli.human),
        Command::Welp { file, box_radius } => cmd_welp(file, *box_radius, cli.human),
        Command::Axioms { measure, samples, seed } => {
            cmd_axioms(*measure, *samples, *seed, cli.human)
        }
        Command::Gen { shape, output } => cmd_gen(shape, output.as_deref()),
        Command::Render { file, output, cell, margin, no_grid, stroke } => {
            cmd_render(file, output.as_deref(), *cell, *margin, !*no_grid, *stroke)
        }
    }
}

fn read_polygon(path: &Path) -> Result<Polygon, Failure> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|source| Failure::Io { path: path.to_path_buf(), source })?;
        buf
    } else {
        fs::read_to_string(path)
            .map_err(|source| Failure::Io { path: path.to_path_buf(), source })?
    };
    parse_polygon(&text).map_err(Failure::Core)
}

fn write_output(path: Option<&Path>, content: &str) -> Result<(), Failure> {
    match path {
        Some(p) => {
            fs::write(p, content).map_err(|source| Failure::Io { path: p.to_path_buf(), source })
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// Rejects box radii smaller than the covering radius: the winding sum only
/// has finite support inside a box that contains every vertex, so shrinking
/// would silently drop nonzero terms.
fn validated_radius(p: &IntegerPolygon, requested: Option<i64>) -> Result<Option<i64>, Failure> {
    if let Some(r) = requested {
        let needed = LatticeBox::covering(p).radius();
        if r < needed {
            return Err(Failure::Usage(format!(
                "box radius {r} does not cover the vertices; the smallest usable radius \
                 is {needed}, and shrinking below it is rejected"
            )));
        }
    }
    Ok(requested)
}

fn emit_json<T: Serialize>(doc: &T) {
    println!("{}", serde_json::to_string(doc).expect("reports always serialize"));
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "FAILS"
    }
}

fn join_turns(values: &[AngleTurns]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct AreaReport {
    area: Rat,
    closed: bool,
    simple: Option<bool>,
    positively_oriented: Option<bool>,
}

fn cmd_area(file: &Path, human: bool) -> Result<bool, Failure> {
    let p = read_polygon(file)?;
    let closed = p.is_closed();
    let report = AreaReport {
        area: p.area(),
        closed,
        simple: if closed { Some(p.is_simple()?) } else { None },
        positively_oriented: if closed { Some(p.is_positively_oriented()) } else { None },
    };
    if !closed {
        eprintln!("warning: polygon is not closed; reporting the edge sum of the open path");
    }
    if human {
        println!("area: {}", report.area);
        println!("closed: {}", report.closed);
        match report.simple {
            Some(s) => println!("simple: {s}"),
            None => println!("simple: n/a (open path)"),
        }
        match report.positively_oriented {
            Some(o) => println!("positively oriented: {o}"),
            None => println!("positively oriented: n/a (open path)"),
        }
    } else {
        emit_json(&report);
    }
    Ok(true)
}

fn cmd_pick(
    file: &Path,
    box_radius: Option<i64>,
    normalize_orientation: bool,
    human: bool,
) -> Result<bool, Failure> {
    let mut p = read_polygon(file)?;
    if normalize_orientation {
        p = p.normalize_positive()?;
    }
    let ip = p.to_integer()?;
    let radius = validated_radius(&ip, box_radius)?;
    let report = pick_report(&ip, radius)?;

    if human {
        println!("area: {}", report.area);
        println!("welp: {}", report.welp);
        match report.interior {
            Some(i) => println!("interior points: {i}"),
            None => println!("interior points: n/a"),
        }
        match report.boundary {
            Some(j) => println!("boundary points: {j}"),
            None => println!("boundary points: n/a"),
        }
        println!("area = welp: {}", verdict(report.lemma_holds));
        let theorem = match report.theorem {
            TheoremStatus::Holds => "holds",
            TheoremStatus::Fails => "FAILS",
            TheoremStatus::NotApplicable => {
                "not applicable (needs a simple, positively oriented polygon)"
            }
        };
        println!("area = interior + boundary/2 - 1: {theorem}");
        println!("box radius: {}", report.box_radius);
    } else {
        emit_json(&report);
    }
    Ok(report.lemma_holds && report.theorem != TheoremStatus::Fails)
}

#[derive(Serialize)]
struct ClassifyReport {
    point: [i64; 2],
    kind: &'static str,
    index: Option<usize>,
    winding: Rat,
}

fn cmd_classify(file: &Path, x: i64, y: i64, human: bool) -> Result<bool, Failure> {
    let p = read_polygon(file)?;
    let ip = p.to_integer()?;
    let class = classify(&ip, LatticeVec::new(x, y))?;
    let (kind, index) = match class.kind {
        PointKind::Exterior => ("exterior", None),
        PointKind::Interior => ("interior", None),
        PointKind::OnEdge(i) => ("on_edge", Some(i)),
        PointKind::AtVertex(i) => ("at_vertex", Some(i)),
    };
    if human {
        match class.kind {
            PointKind::Exterior => println!("Exterior {}", class.winding),
            PointKind::Interior => println!("Interior {}", class.winding),
            PointKind::OnEdge(i) => println!("OnEdge {} (edge {i})", class.winding),
            PointKind::AtVertex(i) => println!("AtVertex {} (vertex {i})", class.winding),
        }
    } else {
        emit_json(&ClassifyReport { point: [x, y], kind, index, winding: class.winding });
    }
    Ok(true)
}

#[derive(Serialize)]
struct HopfReport {
    vertices: usize,
    alphas: Vec<AngleTurns>,
    betas: Vec<AngleTurns>,
    umlaufzahl: AngleTurns,
    beta_sum: AngleTurns,
    expected_beta_sum: AngleTurns,
    umlaufsatz: bool,
}

fn cmd_hopf(file: &Path, permissive: bool, human: bool) -> Result<bool, Failure> {
    let p = read_polygon(file)?;
    if !permissive {
        if !p.is_simple()? {
            return Err(CoreError::NotSimple.into());
        }
        if !p.is_positively_oriented() {
            return Err(CoreError::NotPositivelyOriented.into());
        }
    }
    let profile = turning_angles(&p)?;
    let n = profile.len();
    let expected_beta_sum = AngleTurns::from_turns(Rat::new(n as i64, 2) - Rat::one());
    let beta_sum = profile.beta_sum();
    let umlaufsatz =
        profile.umlaufzahl == AngleTurns::from_turns(Rat::one()) && beta_sum == expected_beta_sum;
    let report = HopfReport {
        vertices: n,
        alphas: profile.alphas,
        betas: profile.betas,
        umlaufzahl: profile.umlaufzahl,
        beta_sum,
        expected_beta_sum,
        umlaufsatz,
    };

    if human {
        println!("distinct vertices: {}", report.vertices);
        println!("alpha (turning angles): {}", join_turns(&report.alphas));
        println!("beta (interior angles): {}", join_turns(&report.betas));
        println!("umlaufzahl (sum of alphas): {}", report.umlaufzahl);
        println!("sum of betas: {} (expected {})", report.beta_sum, report.expected_beta_sum);
        println!("turning number theorem: {}", verdict(report.umlaufsatz));
    } else {
        emit_json(&report);
    }
    Ok(if permissive { true } else { report.umlaufsatz })
}

#[derive(Serialize)]
struct EdgeRow {
    edge: usize,
    from: [i64; 2],
    to: [i64; 2],
    welp_edge: Rat,
    area_edge: Rat,
    equal: bool,
}

#[derive(Serialize)]
struct WelpReport {
    box_radius: i64,
    edges: Vec<EdgeRow>,
    welp: Rat,
    area: Rat,
    lemma_holds: bool,
}

fn cmd_welp(file: &Path, box_radius: Option<i64>, human: bool) -> Result<bool, Failure> {
    let p = read_polygon(file)?;
    let ip = p.to_integer()?;
    if !ip.is_closed() {
        return Err(CoreError::NotClosed.into());
    }
    let radius = validated_radius(&ip, box_radius)?;
    let b = LatticeBox::new(LatticeBox::covering(&ip).radius().max(radius.unwrap_or(0)));

    let mut edges = Vec::new();
    for (i, (u, v)) in ip.edges().enumerate() {
        let w = welp_edge(u, v, &b)?;
        let a = area_edge(&u.to_vec2(), &v.to_vec2());
        let equal = w == a;
        edges.push(EdgeRow {
            edge: i,
            from: [u.x, u.y],
            to: [v.x, v.y],
            welp_edge: w,
            area_edge: a,
            equal,
        });
    }
    let total_welp = welp(&ip, &b)?;
    let area = ip.area();
    let lemma_holds = total_welp == area;
    let report = WelpReport { box_radius: b.radius(), edges, welp: total_welp, area, lemma_holds };

    if human {
        println!("box radius: {}", report.box_radius);
        for row in &report.edges {
            println!(
                "edge {}: ({}, {}) -> ({}, {})  welp {}  area {}  {}",
                row.edge,
                row.from[0],
                row.from[1],
                row.to[0],
                row.to[1],
                row.welp_edge,
                row.area_edge,
                if row.equal { "equal" } else { "DIFFER" }
            );
        }
        println!("total welp: {}", report.welp);
        println!("total area: {}", report.area);
        println!("area = welp: {}", verdict(report.lemma_holds));
    } else {
        emit_json(&report);
    }
    Ok(report.lemma_holds && report.edges.iter().all(|r| r.equal))
}

#[derive(Serialize)]
struct AxiomsReport {
    measure: &'static str,
    seed: u64,
    samples: u32,
    tolerance: Option<f64>,
    report: AxiomReport,
}

fn cmd_axioms(measure: Measure, samples: u32, seed: u64, human: bool) -> Result<bool, Failure> {
    let set = axiom_samples(Seed(seed), samples as usize);
    let (name, tolerance, report) = match measure {
        Measure::Dang => ("dang", None, check_dang_axioms(&set)),
        Measure::Ang => ("ang", Some(ANG_TOLERANCE), check_ang_axioms(&set, ANG_TOLERANCE)),
    };
    let passed = report.all_pass();
    let doc = AxiomsReport { measure: name, seed, samples, tolerance, report };

    if human {
        println!("measure: {}", doc.measure);
        println!("seed: {}", doc.seed);
        println!("samples: {}", doc.samples);
        if let Some(t) = doc.tolerance {
            println!("tolerance: {t:e}");
        }
        println!("scaling: {}", doc.report.scaling);
        println!("symmetry: {}", doc.report.symmetry);
        println!("addition: {}", doc.report.addition);
        println!("normalization: {}", doc.report.normalization);
        println!("degenerate samples: {}", doc.report.degenerate.len());
        println!("samples checked: {}", doc.report.samples_checked);
        println!("verdict: {}", if passed { "all axioms hold" } else { "VIOLATION" });
    } else {
        emit_json(&doc);
    }
    Ok(passed)
}

fn cmd_gen(shape: &Shape, output: Option<&Path>) -> Result<bool, Failure> {
    let ip = match shape {
        Shape::Rectangle { a, b } => rectangle(*a, *b)?,
        Shape::Oblique => oblique_square(),
        Shape::Farey { m } => farey_sunburst(*m)?,
        Shape::Eight => figure_eight(),
        Shape::RandomSimple { seed, k, r } => random_simple_polygon(Seed(*seed), *k, *r)?,
        Shape::RandomClosed { seed, k, r } => random_closed_polygon(Seed(*seed), *k, *r)?,
    };
    let doc = polygon_to_json(&ip.to_polygon());
    write_output(output, &(doc + "\n"))?;
    Ok(true)
}

fn cmd_render(
    file: &Path,
    output: Option<&Path>,
    cell: i64,
    margin: i64,
    show_grid: bool,
    stroke: i64,
) -> Result<bool, Failure> {
    let p = read_polygon(file)?;
    let spec = RenderSpec::new(cell, margin, show_grid, DEFAULT_PALETTE, stroke)
        .map_err(Failure::Usage)?;
    let svg = render_svg(&p, &spec)?;
    write_output(output, &svg)?;
    Ok(true)
}
