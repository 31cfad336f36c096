use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use miquel_core::verify::DEFAULT_SEED;

#[derive(Debug, Parser)]
#[command(name = "miquel", version, about = "Miquel points, pedal triangles and triangle centers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Named centers of the triangle and, when defined, the eleven-point catalog.
    Centers(SceneArgs),
    /// Role of a point and the shape of its Miquel (pedal) triangle.
    Classify(SceneArgs),
    /// Miquel point of a triad given by side parameters.
    Miquel(SceneArgs),
    /// Members of the Miquel family of a point.
    Family {
        #[command(flatten)]
        scene: SceneArgs,
        /// Comma-separated rotation angles in radians.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        thetas: Vec<f64>,
    },
    /// Iterated Miquel triangles with a fixed point.
    Chain {
        #[command(flatten)]
        scene: SceneArgs,
        #[arg(long, default_value_t = 3)]
        steps: usize,
        /// Per-step rotation angles (radians); missing steps use the pedal triangle.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        thetas: Vec<f64>,
    },
    /// Randomized verification suites.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, env = "MIQUEL_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Trials per suite (defaults differ per suite).
        #[arg(long)]
        trials: Option<usize>,
        /// List the registered suites and exit.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
    /// SVG figure of the scene.
    Figure {
        #[command(flatten)]
        scene: SceneArgs,
        /// Comma-separated: triangle, circumcircle, miquel-circles, centers, pedal, simson, m-construction.
        #[arg(long, value_delimiter = ',')]
        elements: Vec<String>,
        /// Vertex for m-construction.
        #[arg(long, default_value = "A")]
        vertex: String,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct SceneArgs {
    /// Scene file, `{"A":[x,y],"B":[x,y],"C":[x,y]}` with optional P, triad, theta.
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,
    /// Point P as `x,y`, overriding the scene.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_pair)]
    pub point: Option<[f64; 2]>,
    /// Triad parameters as `u,v,w`, overriding the scene.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_triple)]
    pub triad: Option<[f64; 3]>,
    /// Rotation angle in radians, overriding the scene.
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<f64>,
    /// Machine-readable JSON output.
    #[arg(long)]
    pub json: bool,
}

fn parse_list<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!("expected {N} comma-separated numbers, got {}", parts.len()));
    }
    let mut out = [0.0; N];
    for (slot, part) in out.iter_mut().zip(&parts) {
        let v: f64 = part.parse().map_err(|_| format!("{part:?} is not a number"))?;
        if !v.is_finite() {
            return Err(format!("{part:?} is not finite"));
        }
        *slot = v;
    }
    Ok(out)
}

fn parse_pair(s: &str) -> Result<[f64; 2], String> {
    parse_list::<2>(s)
}

fn parse_triple(s: &str) -> Result<[f64; 3], String> {
    parse_list::<3>(s)
}
