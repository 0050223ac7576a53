//! Transition between extremal configurations: shrink the pivot ball by `x`
//! and let the balls touching it grow by the same amount.

use serde::Serialize;

use super::{
    admissible, density_with_volume, facet_gap, optimize, pair_gap, simplex_volume, HoroballConfig, OptimizeOptions,
    TANGENCY_TOL,
};
use crate::catalog::CoxeterSimplex;
use crate::error::{Error, Result};
use crate::horoball::facet_tangent_horoball;

/// Two-ball total `V0·e^{−(n−1)x} + V1·e^{(n−1)x}` as the contact point
/// slides by `x`.
pub fn transition_volume(v0: f64, v1: f64, x: f64, n: usize) -> Result<f64> {
    if !(v0 > 0.0 && v1 > 0.0) {
        return Err(Error::Domain(format!("volumes must be positive, got {v0} and {v1}")));
    }
    if n < 2 {
        return Err(Error::Domain(format!("dimension must be at least 2, got {n}")));
    }
    let a = (n - 1) as f64 * x;
    Ok(v0 * (-a).exp() + v1 * a.exp())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SweepSample {
    pub x: f64,
    pub delta: f64,
    pub total_volume: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityCurve {
    pub witt: String,
    pub pivot: usize,
    /// Balls tangent to the pivot; they grow as it shrinks.
    pub coupled: Vec<usize>,
    /// Balls left unchanged.
    pub fixed: Vec<usize>,
    pub x_max: f64,
    pub samples: Vec<SweepSample>,
    /// Piece volumes at `x = 0`.
    pub pivot_volume: f64,
    pub coupled_volume: f64,
    pub fixed_volume: f64,
    /// Smallest density on `[0, x_max]`, located by golden-section search.
    pub minimum: SweepSample,
}

impl DensityCurve {
    pub fn start(&self) -> &SweepSample {
        self.samples.first().expect("nonempty")
    }

    pub fn end(&self) -> &SweepSample {
        self.samples.last().expect("nonempty")
    }

    pub fn interior_max(&self) -> f64 {
        let k = self.samples.len();
        self.samples[1..k - 1].iter().map(|s| s.delta).fold(f64::NEG_INFINITY, f64::max)
    }
}

fn config_at(base: &HoroballConfig, pivot: usize, coupled: &[usize], x: f64) -> HoroballConfig {
    let mut c = base.clone();
    let shrunk = base.get(pivot).expect("pivot ball").grown(-x);
    c.insert(pivot, shrunk);
    for &v in coupled {
        c.insert(v, base.get(v).expect("coupled ball").grown(x));
    }
    c
}

/// Samples the density at `grid + 1` evenly spaced shifts on `[0, x_max]`,
/// starting from the optimizer's configuration for `pivot`.
pub fn sweep(simplex: &CoxeterSimplex, pivot: usize, grid: usize, tol: f64) -> Result<DensityCurve> {
    if !simplex.is_ideal(pivot) {
        return Err(Error::Domain(format!("pivot A{pivot} is not an ideal vertex of {}", simplex.witt)));
    }
    if simplex.ideal_count() < 2 {
        return Err(Error::Domain(format!("{} has a single cusp; there is nothing to sweep", simplex.witt)));
    }
    if grid < 2 {
        return Err(Error::Domain("grid needs at least 2 intervals".into()));
    }
    let opts = OptimizeOptions { tol, ..OptimizeOptions::default() };
    let opt = optimize(simplex, &opts)?;
    let base = opt.report_for_pivot(pivot).expect("every ideal vertex is a pivot").config.clone();
    let adm = admissible(simplex, &base, tol);
    let coupled: Vec<usize> = base.balls.keys().copied().filter(|&v| v != pivot && adm.is_tangent(pivot, v)).collect();
    let fixed: Vec<usize> = base.balls.keys().copied().filter(|&v| v != pivot && !coupled.contains(&v)).collect();
    if coupled.is_empty() {
        return Err(Error::Domain(format!("no ball touches the pivot A{pivot}; no transition family")));
    }

    let mut x_max = f64::INFINITY;
    for &c in &coupled {
        let bc = base.get(c).expect("coupled ball");
        x_max = x_max.min(facet_gap(bc, &facet_tangent_horoball(simplex, c, tol)?));
        for &f in &fixed {
            x_max = x_max.min(pair_gap(bc, base.get(f).expect("fixed ball")));
        }
        for &d in coupled.iter().filter(|&&d| d > c) {
            x_max = x_max.min(pair_gap(bc, base.get(d).expect("coupled ball")) / 2.0);
        }
    }
    if x_max <= TANGENCY_TOL {
        return Err(Error::Domain(format!("pivot A{pivot} admits no transition (x_max = {x_max:e})")));
    }
    // Land exactly on the far tangency, not a hair past it.
    let x_max = x_max * (1.0 - 1e-14);

    let volume = simplex_volume(simplex)?;
    let eval = |x: f64| -> Result<SweepSample> {
        let r = density_with_volume(simplex, &config_at(&base, pivot, &coupled, x), volume, tol)?;
        let total: f64 = r.balls.iter().map(|b| b.piece_volume).sum();
        Ok(SweepSample { x, delta: r.density, total_volume: total })
    };
    let samples = (0..=grid).map(|k| eval(x_max * k as f64 / grid as f64)).collect::<Result<Vec<_>>>()?;

    let start = density_with_volume(simplex, &base, volume, tol)?;
    let part =
        |vs: &[usize]| -> f64 { start.balls.iter().filter(|b| vs.contains(&b.vertex)).map(|b| b.piece_volume).sum() };

    // Golden-section search for the minimum.
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut lo, mut hi) = (0.0, x_max);
    let mut m1 = eval(hi - phi * (hi - lo))?;
    let mut m2 = eval(lo + phi * (hi - lo))?;
    while hi - lo > 1e-12 * x_max.max(1.0) {
        if m1.delta < m2.delta {
            hi = m2.x;
            m2 = m1;
            m1 = eval(hi - phi * (hi - lo))?;
        } else {
            lo = m1.x;
            m1 = m2;
            m2 = eval(lo + phi * (hi - lo))?;
        }
    }
    let mut minimum = if m1.delta < m2.delta { m1 } else { m2 };
    for s in [samples[0], samples[grid]] {
        if s.delta < minimum.delta {
            minimum = s;
        }
    }

    Ok(DensityCurve {
        witt: simplex.witt.clone(),
        pivot,
        pivot_volume: part(&[pivot]),
        coupled_volume: part(&coupled),
        fixed_volume: part(&fixed),
        coupled,
        fixed,
        x_max,
        samples,
        minimum,
    })
}
