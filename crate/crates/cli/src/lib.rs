//! Command-line front end. [`run`] takes the argument vector and returns the
//! exit status with everything that would be printed, so it can be tested
//! without spawning a process.

mod args;
mod report;

use std::fmt::Write as _;
use std::fs;

use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;

use miquel_core::centers::{self, CenterKind};
use miquel_core::chains::{self, ThetaSchedule};
use miquel_core::figure::{self, Element};
use miquel_core::miquel::{self, Pedal};
use miquel_core::scene::{self, Scene};
use miquel_core::verify;
use miquel_core::{DirectedAngle, Error, Point, Triad, Triangle, Vertex};

use args::{Cli, Command, SceneArgs};

pub const EXIT_OK: i32 = 0;
pub const EXIT_GEOMETRY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Geometry(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Geometry(e)
    }
}

type CmdResult = Result<Outcome, Failure>;

fn ok(stdout: String) -> Outcome {
    Outcome { code: EXIT_OK, stdout, stderr: String::new() }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ok(text),
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(Failure::Usage(msg)) => {
            Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
        }
        Err(Failure::Geometry(e)) => {
            Outcome { code: EXIT_GEOMETRY, stdout: String::new(), stderr: format!("error: {}: {e}\n", e.name()) }
        }
    }
}

fn dispatch(cmd: Command) -> CmdResult {
    match cmd {
        Command::Centers(s) => cmd_centers(&s),
        Command::Classify(s) => cmd_classify(&s),
        Command::Miquel(s) => cmd_miquel(&s),
        Command::Family { scene, thetas } => cmd_family(&scene, &thetas),
        Command::Chain { scene, steps, thetas } => cmd_chain(&scene, steps, &thetas),
        Command::Verify { suite, seed, trials, list, json } => cmd_verify(&suite, seed, trials, list, json),
        Command::Figure { scene, elements, vertex, out } => cmd_figure(&scene, &elements, &vertex, out.as_deref()),
    }
}

fn load_scene(args: &SceneArgs) -> Result<Scene, Failure> {
    let text = fs::read_to_string(&args.input)
        .map_err(|e| Failure::Usage(format!("--in {}: {e}", args.input.display())))?;
    let mut scene = match scene::parse_scene(&text) {
        Ok(s) => s,
        Err(Error::InvalidScene(msg)) => {
            return Err(Failure::Usage(format!("--in {}: {msg}", args.input.display())))
        }
        Err(e) => return Err(e.into()),
    };
    if let Some([x, y]) = args.point {
        scene.point = Some(Point::new(x, y));
    }
    if args.triad.is_some() {
        scene.triad = args.triad;
    }
    if let Some(th) = args.theta {
        scene.theta = Some(DirectedAngle::new(th));
    }
    Ok(scene)
}

fn require_point(scene: &Scene, cmd: &str) -> Result<Point, Failure> {
    scene.point.ok_or_else(|| Failure::Usage(format!("{cmd} needs --point x,y or \"P\" in the scene")))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn num(v: f64) -> String {
    let s = format!("{v:.12}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        format!("{:.12}", 0.0)
    } else {
        s
    }
}

fn pt(p: Point) -> String {
    format!("({}, {})", num(p.x), num(p.y))
}

fn degrees(t: &Triangle) -> String {
    let [a, b, c] = t.angles().map(f64::to_degrees);
    format!("{a:.9}° {b:.9}° {c:.9}°")
}

#[derive(Serialize)]
struct NamedPoint {
    label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    location: Option<Point>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'static str>,
}

#[derive(Serialize)]
struct CatalogLine {
    label: String,
    location: Point,
    similarity: String,
    orientation: Option<miquel::Orientation>,
    inside_circumcircle: bool,
}

#[derive(Serialize)]
struct CentersDoc {
    centers: Vec<NamedPoint>,
    catalog: Option<Vec<CatalogLine>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    catalog_unavailable: Option<&'static str>,
}

fn cmd_centers(args: &SceneArgs) -> CmdResult {
    let scene = load_scene(args)?;
    let t = scene.triangle;
    let mut kinds = vec![CenterKind::Circumcenter, CenterKind::Orthocenter, CenterKind::Centroid, CenterKind::Incenter];
    kinds.extend(Vertex::ALL.map(CenterKind::Excenter));
    kinds.extend([CenterKind::FirstBrocard, CenterKind::SecondBrocard]);
    kinds.extend(Vertex::ALL.map(CenterKind::SPoint));
    kinds.extend(Vertex::ALL.map(CenterKind::MPoint));
    let named: Vec<NamedPoint> = kinds
        .into_iter()
        .map(|k| match centers::center(&t, k) {
            Ok(p) => NamedPoint { label: k.label(), location: Some(p), error: None },
            Err(e) => NamedPoint { label: k.label(), location: None, error: Some(e.name()) },
        })
        .collect();
    let (catalog, catalog_unavailable) = match centers::eleven_point_catalog(&t) {
        Ok(entries) => {
            let mut lines = Vec::new();
            for e in entries {
                let xyz = miquel::feet_triangle(&t, e.location)?;
                let orientation = miquel::classify_similarity(&t, &xyz, 1e-7)
                    .into_iter()
                    .find(|c| c.permutation == e.expected_similarity)
                    .map(|c| c.orientation);
                lines.push(CatalogLine {
                    label: e.kind.label(),
                    location: e.location,
                    similarity: e.expected_similarity.to_string(),
                    orientation,
                    inside_circumcircle: e.inside_circumcircle,
                });
            }
            (Some(lines), None)
        }
        Err(e) => (None, Some(e.name())),
    };
    let doc = CentersDoc { centers: named, catalog, catalog_unavailable };
    if args.json {
        return Ok(ok(json(&doc)));
    }
    let mut out = String::new();
    for n in &doc.centers {
        match (n.location, n.error) {
            (Some(p), _) => writeln!(out, "{:<6} {}", n.label, pt(p)).unwrap(),
            (None, e) => writeln!(out, "{:<6} undefined ({})", n.label, e.unwrap_or("")).unwrap(),
        }
    }
    match (&doc.catalog, doc.catalog_unavailable) {
        (Some(lines), _) => {
            writeln!(out, "\npoints with Miquel triangle similar to the host:").unwrap();
            for l in lines {
                let orient = match l.orientation {
                    Some(miquel::Orientation::Direct) => "direct",
                    Some(miquel::Orientation::Inverse) => "inverse",
                    None => "unmatched",
                };
                writeln!(out, "{:<6} {}  {}  {orient}", l.label, pt(l.location), l.similarity).unwrap();
            }
        }
        (None, e) => writeln!(out, "\nno eleven-point catalog ({})", e.unwrap_or("")).unwrap(),
    }
    Ok(ok(out))
}

#[derive(Serialize)]
struct Similar {
    permutation: String,
    orientation: miquel::Orientation,
    ratio: f64,
    residual: f64,
}

#[derive(Serialize)]
struct ClassifyDoc {
    point: Point,
    role: String,
    on_side_line: bool,
    on_circumcircle: bool,
    host: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    miquel_triangle: Option<[Point; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    simson_deviation: Option<f64>,
    similar_to_host: Vec<Similar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    miquel_contains_point: Option<&'static str>,
}

fn containment_name(c: miquel_core::Containment) -> &'static str {
    match c {
        miquel_core::Containment::Inside => "inside",
        miquel_core::Containment::Outside => "outside",
        miquel_core::Containment::OnBoundary => "boundary",
    }
}

fn cmd_classify(args: &SceneArgs) -> CmdResult {
    let scene = load_scene(args)?;
    let t = scene.triangle;
    let p = require_point(&scene, "classify")?;
    let role = miquel::detect_special_role(&t, p, 1e-6);
    let on_circumcircle = t.on_circumcircle(p, miquel::SIMSON_BAND);
    let mut doc = ClassifyDoc {
        point: p,
        role: role.to_string(),
        on_side_line: t.on_side_line(p),
        on_circumcircle,
        host: containment_name(miquel_core::triangle_contains(&t, p)),
        miquel_triangle: None,
        simson_deviation: None,
        similar_to_host: Vec::new(),
        miquel_contains_point: None,
    };
    let xyz = if on_circumcircle {
        let feet = miquel::pedal_feet(&t, p);
        doc.miquel_triangle = Some(feet);
        if let Ok(Pedal::Simson(line)) = miquel::pedal_triad(&t, p) {
            doc.simson_deviation = Some(line.deviation());
        }
        None
    } else {
        // the feet triangle also covers points on a side line
        let xyz = miquel::feet_triangle(&t, p)?;
        doc.miquel_triangle = Some(xyz.vertices());
        doc.miquel_contains_point = Some(containment_name(miquel_core::triangle_contains(&xyz, p)));
        doc.similar_to_host = miquel::classify_similarity(&t, &xyz, 1e-7)
            .into_iter()
            .map(|c| Similar {
                permutation: c.permutation.to_string(),
                orientation: c.orientation,
                ratio: c.ratio,
                residual: c.residual,
            })
            .collect();
        Some(xyz)
    };
    if args.json {
        return Ok(ok(json(&doc)));
    }
    let mut out = String::new();
    let summary = match (xyz.is_some(), doc.similar_to_host.first()) {
        (false, _) => "pedal feet collinear (Simson line)".to_string(),
        (true, Some(s)) => format!("Miquel triangle similar to host, permutation {}", s.permutation),
        (true, None) => "Miquel triangle not similar to host".to_string(),
    };
    writeln!(out, "{}; {summary}", doc.role).unwrap();
    writeln!(out, "point          {}", pt(p)).unwrap();
    writeln!(out, "in host        {}", doc.host).unwrap();
    if let Some([x, y, z]) = doc.miquel_triangle {
        writeln!(out, "X Y Z          {} {} {}", pt(x), pt(y), pt(z)).unwrap();
    }
    if let Some(xyz) = xyz {
        writeln!(out, "angles         {}", degrees(&xyz)).unwrap();
    }
    if let Some(c) = doc.miquel_contains_point {
        writeln!(out, "in XYZ         {c}").unwrap();
    }
    if let Some(d) = doc.simson_deviation {
        writeln!(out, "collinearity   {d:.3e}").unwrap();
    }
    for s in &doc.similar_to_host {
        let o = match s.orientation {
            miquel::Orientation::Direct => "direct",
            miquel::Orientation::Inverse => "inverse",
        };
        writeln!(out, "similar        {} {o} ratio {} residual {:.3e}", s.permutation, num(s.ratio), s.residual)
            .unwrap();
    }
    Ok(ok(out))
}

#[derive(Serialize)]
struct MiquelDoc {
    triad: [f64; 3],
    points: [Point; 3],
    miquel_point: Point,
    residual: f64,
    relative_residual: f64,
    tangent: bool,
    circles: [miquel_core::Circle; 3],
}

fn cmd_miquel(args: &SceneArgs) -> CmdResult {
    let scene = load_scene(args)?;
    let t = scene.triangle;
    let [u, v, w] = scene
        .triad
        .ok_or_else(|| Failure::Usage("miquel needs --triad u,v,w or \"triad\" in the scene".into()))?;
    let triad = Triad::new(t, u, v, w)?;
    let m = miquel::miquel_point(&triad)?;
    let doc = MiquelDoc {
        triad: triad.params(),
        points: triad.points(),
        miquel_point: m.point,
        residual: m.residual,
        relative_residual: m.residual / t.circumradius(),
        tangent: m.tangent,
        circles: m.circles,
    };
    if args.json {
        return Ok(ok(json(&doc)));
    }
    let mut out = String::new();
    writeln!(out, "miquel point   {}", pt(m.point)).unwrap();
    writeln!(out, "residual       {:.3e} ({:.3e} R)", m.residual, doc.relative_residual).unwrap();
    for (v, p) in Vertex::ALL.into_iter().zip(doc.points) {
        writeln!(out, "{}              {}", v.miquel_letter(), pt(p)).unwrap();
    }
    for (name, c) in ["AYZ", "BZX", "CXY"].into_iter().zip(m.circles) {
        writeln!(out, "circle {name}     center {} radius {}", pt(c.center), num(c.radius)).unwrap();
    }
    if m.tangent {
        writeln!(out, "circles AYZ and BZX are tangent at Z").unwrap();
    }
    Ok(ok(out))
}

#[derive(Serialize)]
struct FamilyMember {
    theta: f64,
    points: [Point; 3],
    angles_deg: [f64; 3],
    ratio_to_pedal: f64,
    miquel_point_error: f64,
}

fn cmd_family(args: &SceneArgs, thetas: &[f64]) -> CmdResult {
    let scene = load_scene(args)?;
    let t = scene.triangle;
    let p = require_point(&scene, "family")?;
    let list: Vec<f64> = if !thetas.is_empty() {
        thetas.to_vec()
    } else {
        vec![scene.theta.map(DirectedAngle::radians).unwrap_or(0.0)]
    };
    let pedal = miquel::pedal_triangle(&t, p)?;
    let mut members = Vec::new();
    for th in list {
        let triad = miquel::family_member(&t, p, DirectedAngle::new(th))?;
        let xyz = triad.triangle()?;
        let m = miquel::miquel_point(&triad)?;
        members.push(FamilyMember {
            theta: DirectedAngle::new(th).radians(),
            points: triad.points(),
            angles_deg: xyz.angles().map(f64::to_degrees),
            ratio_to_pedal: xyz.side(Vertex::A) / pedal.side(Vertex::A),
            miquel_point_error: m.point.distance(p),
        });
    }
    if args.json {
        return Ok(ok(json(&members)));
    }
    let mut out = String::new();
    writeln!(out, "point {}", pt(p)).unwrap();
    for m in &members {
        let [a, b, c] = m.angles_deg;
        writeln!(out, "theta {}", num(m.theta)).unwrap();
        writeln!(out, "  X Y Z    {} {} {}", pt(m.points[0]), pt(m.points[1]), pt(m.points[2])).unwrap();
        writeln!(out, "  angles   {a:.9}° {b:.9}° {c:.9}°").unwrap();
        writeln!(out, "  ratio    {}", num(m.ratio_to_pedal)).unwrap();
        writeln!(out, "  P error  {:.3e}", m.miquel_point_error).unwrap();
    }
    Ok(ok(out))
}

#[derive(Serialize)]
struct ChainDoc {
    point: Point,
    thetas: Vec<f64>,
    triangles: Vec<[Point; 3]>,
    roles: Vec<String>,
    similarity_to_seed: Vec<f64>,
    mod3: chains::Mod3Report,
}

fn cmd_chain(args: &SceneArgs, steps: usize, thetas: &[f64]) -> CmdResult {
    let scene = load_scene(args)?;
    let t = scene.triangle;
    let p = require_point(&scene, "chain")?;
    if steps == 0 {
        return Err(Failure::Usage("--steps must be at least 1".into()));
    }
    let schedule = if !thetas.is_empty() {
        ThetaSchedule::PerStep(thetas.iter().map(|&th| DirectedAngle::new(th)).collect())
    } else {
        match scene.theta {
            Some(th) => ThetaSchedule::Constant(th),
            None => ThetaSchedule::Pedal,
        }
    };
    let rec = chains::iterate_chain(&t, p, steps, &schedule)?;
    let doc = ChainDoc {
        point: p,
        thetas: rec.thetas.iter().map(|th| th.radians()).collect(),
        triangles: rec.triangles.iter().map(Triangle::vertices).collect(),
        roles: rec.roles.iter().map(ToString::to_string).collect(),
        similarity_to_seed: chains::similarity_to_seed(&rec),
        mod3: chains::check_mod3_similarity(&rec, 1e-6),
    };
    if args.json {
        return Ok(ok(json(&doc)));
    }
    let mut out = String::new();
    writeln!(out, "point {}", pt(p)).unwrap();
    for (k, tri) in rec.triangles.iter().enumerate() {
        let seed = doc.similarity_to_seed[k];
        let mark = if seed < 1e-6 { "similar to seed" } else { "" };
        writeln!(out, "step {k:<2} {:<16} {}  {mark}", doc.roles[k], degrees(tri)).unwrap();
    }
    let verdict = if doc.mod3.holds { "holds" } else { "fails" };
    writeln!(out, "mod-3 similarity {verdict} (max residual {:.3e})", doc.mod3.max_residual).unwrap();
    for a in &doc.mod3.accidental {
        writeln!(out, "  steps {} and {} also similar", a.i, a.j).unwrap();
    }
    Ok(ok(out))
}

fn cmd_verify(suite: &str, seed: u64, trials: Option<usize>, list: bool, as_json: bool) -> CmdResult {
    if list {
        let mut out = String::new();
        for s in verify::suites() {
            writeln!(out, "{:<20} {:>5}  {}", s.name, s.default_trials, s.summary).unwrap();
        }
        return Ok(ok(out));
    }
    if trials == Some(0) {
        return Err(Failure::Usage("--trials must be at least 1".into()));
    }
    let run = verify::run_suite(suite, seed, trials)
        .map_err(|_| Failure::Usage(format!("--suite {suite:?} is not a registered suite (try --list)")))?;
    let stdout = if as_json { json(&run) } else { report::render_run(&run) };
    let mut stderr = String::new();
    for r in &run.reports {
        writeln!(stderr, "{}: {:.3} s", r.suite, r.duration.as_secs_f64()).unwrap();
    }
    writeln!(stderr, "total: {:.3} s", run.duration.as_secs_f64()).unwrap();
    let code = if run.passed { EXIT_OK } else { EXIT_VERIFY_FAILED };
    Ok(Outcome { code, stdout, stderr })
}

fn cmd_figure(args: &SceneArgs, names: &[String], vertex: &str, out: Option<&std::path::Path>) -> CmdResult {
    let v = Vertex::parse(vertex).ok_or_else(|| Failure::Usage(format!("--vertex {vertex:?}: expected A, B or C")))?;
    let mut elements = Vec::new();
    for name in names.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        let el = Element::parse(name, v).ok_or_else(|| Failure::Usage(format!("--elements: unknown element {name:?}")))?;
        elements.push(el);
    }
    let scene = load_scene(args)?;
    let svg = figure::render_figure(&scene, &elements)?;
    match out {
        Some(path) => {
            fs::write(path, &svg).map_err(|e| Failure::Usage(format!("--out {}: {e}", path.display())))?;
            Ok(ok(String::new()))
        }
        None => Ok(ok(svg)),
    }
}
