//! Multi-horoball configurations on the ideal vertices of a simplex:
//! admissibility, density, the extremal-configuration search, transition
//! sweeps and rational density fractions.

pub mod fractions;
mod optimize;
mod sweep;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::catalog::CoxeterSimplex;
use crate::error::{Error, Result};
use crate::horoball::{facet_tangent_horoball, piece_volume, Horoball};
use crate::lorentz::PointKind;

pub use fractions::{Fit, Fraction};
pub use optimize::{greedy_fixpoint, optimize, InflationOrder, OptimizeOptions, Optimum, PivotSummary};
pub use sweep::{sweep, transition_volume, DensityCurve, SweepSample};

/// Fixpoint tolerance on levels, relative.
pub const FIXPOINT_TOL: f64 = 1e-12;
/// Pass cap for the inflation fixpoint.
pub const MAX_PASSES: usize = 200;
/// Gap below which two balls (or a ball and its facet) count as touching.
pub const TANGENCY_TOL: f64 = 1e-9;

/// Horoballs keyed by the index of the ideal vertex they sit on.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct HoroballConfig {
    pub balls: BTreeMap<usize, Horoball>,
}

impl HoroballConfig {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds balls at the given vertices from type parameters `s`.
    pub fn from_s(simplex: &CoxeterSimplex, params: &[(usize, f64)], tol: f64) -> Result<Self> {
        let mut c = HoroballConfig::new();
        for &(i, s) in params {
            c.insert(i, Horoball::from_s(simplex.vertex(i)?, s, tol)?);
        }
        Ok(c)
    }

    pub fn insert(&mut self, vertex: usize, ball: Horoball) {
        self.balls.insert(vertex, ball);
    }

    pub fn get(&self, vertex: usize) -> Option<&Horoball> {
        self.balls.get(&vertex)
    }

    pub fn len(&self) -> usize {
        self.balls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.balls.is_empty()
    }

    pub fn levels(&self) -> Vec<(usize, f64)> {
        self.balls.iter().map(|(&i, b)| (i, b.level())).collect()
    }

    /// Same vertices and levels within `rel` relative tolerance.
    pub fn same_levels(&self, other: &HoroballConfig, rel: f64) -> bool {
        self.balls.len() == other.balls.len()
            && self
                .balls
                .iter()
                .zip(&other.balls)
                .all(|((i, a), (j, b))| i == j && (a.level() - b.level()).abs() <= rel * a.level().max(b.level()))
    }
}

/// Level at `B(c_i, c_j)²/(4 t_i)`: the ball at `c_j` touching a ball of
/// level `t_i` at `c_i`.
pub(crate) fn tangent_level(ci: &Horoball, cj: &Horoball) -> f64 {
    let beta = ci.center().bform(cj.center()).expect("same dimension");
    beta * beta / (4.0 * ci.level())
}

/// Hyperbolic gap between two horospheres along the edge joining their
/// centres; negative when the balls overlap.
pub fn pair_gap(a: &Horoball, b: &Horoball) -> f64 {
    let beta = a.center().bform(b.center()).expect("same dimension");
    (beta.abs() / (2.0 * (a.level() * b.level()).sqrt())).ln()
}

/// Hyperbolic distance the ball can still grow before crossing its facet;
/// negative when it already protrudes.
pub fn facet_gap(ball: &Horoball, max: &Horoball) -> f64 {
    0.5 * (max.level() / ball.level()).ln()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum Violation {
    NotIdeal { vertex: usize },
    WrongCenter { vertex: usize },
    Facet { vertex: usize, excess: f64 },
    Overlap { i: usize, j: usize, depth: f64 },
    Geometry { vertex: usize, message: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotIdeal { vertex } => write!(f, "vertex A{vertex} is not ideal"),
            Violation::WrongCenter { vertex } => write!(f, "ball {vertex} is not centred at A{vertex}"),
            Violation::Facet { vertex, excess } => {
                write!(f, "facet u{vertex}: ball B{vertex} protrudes by {excess:.3e}")
            }
            Violation::Overlap { i, j, depth } => write!(f, "pair ({i},{j}): balls overlap by {depth:.3e}"),
            Violation::Geometry { vertex, message } => write!(f, "vertex A{vertex}: {message}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Admissibility {
    pub violations: Vec<Violation>,
    /// Pairs whose horospheres touch.
    pub tangent_pairs: Vec<(usize, usize)>,
    /// Balls touching their opposite facet.
    pub facet_contacts: Vec<usize>,
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn is_tangent(&self, i: usize, j: usize) -> bool {
        self.tangent_pairs.contains(&(i.min(j), i.max(j)))
    }
}

/// Checks every ball against its facet and every pair against overlap.
pub fn admissible(simplex: &CoxeterSimplex, config: &HoroballConfig, tol: f64) -> Admissibility {
    let mut out = Admissibility::default();
    for (&i, ball) in &config.balls {
        let vertex = match simplex.vertex(i) {
            Ok(v) => v,
            Err(e) => {
                out.violations.push(Violation::Geometry { vertex: i, message: e.to_string() });
                continue;
            }
        };
        if vertex.classify(tol) != PointKind::Ideal {
            out.violations.push(Violation::NotIdeal { vertex: i });
            continue;
        }
        if !vertex.projectively_eq(ball.center(), tol) {
            out.violations.push(Violation::WrongCenter { vertex: i });
            continue;
        }
        match facet_tangent_horoball(simplex, i, tol) {
            Ok(max) => {
                let gap = facet_gap(ball, &max);
                if gap < -TANGENCY_TOL {
                    out.violations.push(Violation::Facet { vertex: i, excess: -gap });
                } else if gap < TANGENCY_TOL {
                    out.facet_contacts.push(i);
                }
            }
            Err(e) => out.violations.push(Violation::Geometry { vertex: i, message: e.to_string() }),
        }
    }
    let balls: Vec<_> = config.balls.iter().collect();
    for (a, (&i, bi)) in balls.iter().enumerate() {
        for (&j, bj) in &balls[a + 1..] {
            let gap = pair_gap(bi, bj);
            if gap < -TANGENCY_TOL {
                out.violations.push(Violation::Overlap { i, j, depth: -gap });
            } else if gap < TANGENCY_TOL {
                out.tangent_pairs.push((i, j));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BallReport {
    pub vertex: usize,
    pub level: f64,
    pub s: f64,
    pub piece_volume: f64,
    /// `piece_volume / simplex volume / density`, fitted by a small fraction.
    pub fraction: Option<Fraction>,
    pub fraction_residual: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TraceStep {
    pub vertex: usize,
    pub s: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PackingReport {
    pub witt: String,
    /// Vertex whose ball was fixed first, when the report comes from the optimizer.
    pub pivot: Option<usize>,
    pub config: HoroballConfig,
    pub balls: Vec<BallReport>,
    pub simplex_volume: f64,
    pub density: f64,
    pub tangent_pairs: Vec<(usize, usize)>,
    pub facet_contacts: Vec<usize>,
    pub trace: Vec<TraceStep>,
}

impl PackingReport {
    pub fn piece_volumes(&self) -> Vec<f64> {
        self.balls.iter().map(|b| b.piece_volume).collect()
    }

    pub fn fractions(&self) -> Vec<Option<Fraction>> {
        self.balls.iter().map(|b| b.fraction).collect()
    }

    /// Fitted fractions sorted in decreasing order, if every ball has one.
    pub fn sorted_fractions(&self) -> Option<Vec<Fraction>> {
        let mut v: Vec<Fraction> = self.fractions().into_iter().collect::<Option<_>>()?;
        v.sort_by(|a, b| b.cmp(a));
        Some(v)
    }

    pub fn s_of(&self, vertex: usize) -> Option<f64> {
        self.config.get(vertex).map(Horoball::s)
    }
}

/// Per-ball shares `δ_i/δ` fitted to small fractions.
pub fn fit_fractions(report: &mut PackingReport) {
    let total: f64 = report.balls.iter().map(|b| b.piece_volume).sum();
    for b in &mut report.balls {
        let (q, r) = fractions::fit(b.piece_volume / total);
        b.fraction = q;
        b.fraction_residual = r;
    }
}

/// Simplex volume as an `f64`, from the exact descriptor.
pub fn simplex_volume(simplex: &CoxeterSimplex) -> Result<f64> {
    Ok(simplex.exact_volume(crate::catalog::GEOMETRY_DIGITS)?.to_f64())
}

pub(crate) fn density_with_volume(
    simplex: &CoxeterSimplex,
    config: &HoroballConfig,
    volume: f64,
    tol: f64,
) -> Result<PackingReport> {
    let adm = admissible(simplex, config, tol);
    if !adm.is_admissible() {
        return Err(Error::Inadmissible(adm.violations.iter().map(ToString::to_string).collect()));
    }
    let mut balls = Vec::with_capacity(config.len());
    for (&i, b) in &config.balls {
        balls.push(BallReport {
            vertex: i,
            level: b.level(),
            s: b.s(),
            piece_volume: piece_volume(simplex, i, b, tol)?,
            fraction: None,
            fraction_residual: f64::NAN,
        });
    }
    let total: f64 = balls.iter().map(|b| b.piece_volume).sum();
    let mut report = PackingReport {
        witt: simplex.witt.clone(),
        pivot: None,
        config: config.clone(),
        balls,
        simplex_volume: volume,
        density: total / volume,
        tangent_pairs: adm.tangent_pairs,
        facet_contacts: adm.facet_contacts,
        trace: Vec::new(),
    };
    fit_fractions(&mut report);
    Ok(report)
}

/// Density of an admissible configuration.
pub fn density(simplex: &CoxeterSimplex, config: &HoroballConfig, tol: f64) -> Result<PackingReport> {
    if config.is_empty() {
        return Err(Error::Domain("configuration has no horoballs".into()));
    }
    density_with_volume(simplex, config, simplex_volume(simplex)?, tol)
}
