//! Iterated Miquel triangles with a fixed point.
//!
//! Step `k` takes a member of the Miquel family of `P` relative to triangle
//! `k` and uses its triad as triangle `k + 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{DirectedAngle, Point};
use crate::miquel::{self, MiquelResult, SimilarityClass, SpecialRole, Triad, SIMSON_BAND};
use crate::triangle::Triangle;

pub const DEFAULT_STEP_CAP: usize = 12;

/// Per-step rotation of the Miquel family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThetaSchedule {
    /// Pedal triangle at every step.
    Pedal,
    Constant(DirectedAngle),
    PerStep(Vec<DirectedAngle>),
}

impl ThetaSchedule {
    pub fn theta(&self, step: usize) -> DirectedAngle {
        match self {
            ThetaSchedule::Pedal => DirectedAngle::ZERO,
            ThetaSchedule::Constant(t) => *t,
            ThetaSchedule::PerStep(v) => v.get(step).copied().unwrap_or(DirectedAngle::ZERO),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainOptions {
    pub step_cap: usize,
    /// Relative tolerance (times each step's circumradius) for role detection.
    pub role_tol: f64,
}

impl Default for ChainOptions {
    fn default() -> Self {
        ChainOptions { step_cap: DEFAULT_STEP_CAP, role_tol: 1e-6 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainStep {
    pub triad: Triad,
    pub miquel: MiquelResult,
}

/// Immutable record of an iterated chain.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainRecord {
    pub point: Point,
    pub thetas: Vec<DirectedAngle>,
    /// `k + 1` triangles; triangle `i + 1` is the triad triangle of step `i`.
    pub triangles: Vec<Triangle>,
    pub steps: Vec<ChainStep>,
    /// Role of the fixed point in each triangle.
    pub roles: Vec<SpecialRole>,
}

impl ChainRecord {
    pub fn seed(&self) -> &Triangle {
        &self.triangles[0]
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

pub fn iterate_chain(t0: &Triangle, p: Point, k: usize, thetas: &ThetaSchedule) -> Result<ChainRecord> {
    iterate_chain_with(t0, p, k, thetas, ChainOptions::default())
}

pub fn iterate_chain_with(
    t0: &Triangle,
    p: Point,
    k: usize,
    thetas: &ThetaSchedule,
    opts: ChainOptions,
) -> Result<ChainRecord> {
    if k > opts.step_cap {
        return Err(Error::TooManySteps { requested: k, cap: opts.step_cap });
    }
    let mut triangles = vec![*t0];
    let mut steps = Vec::with_capacity(k);
    let mut used = Vec::with_capacity(k);
    for step in 0..k {
        let wrap = |e: Error| Error::DegenerateStep { step, reason: Box::new(e) };
        let t = triangles[step];
        if t.on_side_line(p) {
            return Err(wrap(Error::OnSideLine(p)));
        }
        if t.on_circumcircle(p, SIMSON_BAND) {
            return Err(wrap(Error::OnCircumcircle(p)));
        }
        let theta = thetas.theta(step);
        let triad = miquel::family_member(&t, p, theta).map_err(wrap)?;
        let result = miquel::miquel_point(&triad).map_err(wrap)?;
        let next = triad.triangle().map_err(wrap)?;
        used.push(theta);
        steps.push(ChainStep { triad, miquel: result });
        triangles.push(next);
    }
    let roles = triangles.iter().map(|t| miquel::detect_special_role(t, p, opts.role_tol)).collect();
    Ok(ChainRecord { point: p, thetas: used, triangles, steps, roles })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairSimilarity {
    pub i: usize,
    pub j: usize,
    /// Smallest angle mismatch over all correspondences.
    pub residual: f64,
    pub similar: bool,
    pub best: Option<SimilarityClass>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Mod3Report {
    /// Pairs with `i ≡ j (mod 3)`.
    pub same_class: Vec<PairSimilarity>,
    /// Cross-class pairs that happen to be similar.
    pub accidental: Vec<PairSimilarity>,
    pub holds: bool,
    pub max_residual: f64,
}

fn pair(t: &[Triangle], i: usize, j: usize, angle_tol: f64) -> PairSimilarity {
    let residual = miquel::similarity_residual(&t[i], &t[j]);
    let best = miquel::classify_similarity(&t[i], &t[j], angle_tol).into_iter().next();
    PairSimilarity { i, j, residual, similar: residual < angle_tol, best }
}

/// Checks that triangles whose indices agree modulo 3 are similar.
pub fn check_mod3_similarity(rec: &ChainRecord, angle_tol: f64) -> Mod3Report {
    let t = &rec.triangles;
    let mut same_class = Vec::new();
    let mut accidental = Vec::new();
    for j in 0..t.len() {
        for i in 0..j {
            let p = pair(t, i, j, angle_tol);
            if (j - i) % 3 == 0 {
                same_class.push(p);
            } else if p.similar {
                accidental.push(p);
            }
        }
    }
    let holds = same_class.iter().all(|p| p.similar);
    let max_residual = same_class.iter().map(|p| p.residual).fold(0.0, f64::max);
    Mod3Report { same_class, accidental, holds, max_residual }
}

/// Residual of each triangle's similarity to the seed.
pub fn similarity_to_seed(rec: &ChainRecord) -> Vec<f64> {
    rec.triangles.iter().map(|t| miquel::similarity_residual(rec.seed(), t)).collect()
}

/// Roles of the fixed point along a chain; one entry per triangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoleCycle(pub Vec<SpecialRole>);

impl RoleCycle {
    /// Whether the sequence matches `pattern` repeated, entry by entry.
    pub fn follows(&self, pattern: &[fn(&SpecialRole) -> bool]) -> bool {
        self.0.iter().enumerate().all(|(i, r)| pattern[i % pattern.len()](r))
    }
}

pub fn detect_role_cycle(rec: &ChainRecord) -> RoleCycle {
    RoleCycle(rec.roles.clone())
}
