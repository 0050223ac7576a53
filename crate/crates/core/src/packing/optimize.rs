//! Extremal configurations: fix one ball at its facet limit, then inflate the
//! others one at a time as far as the facets and the already placed balls
//! allow.
//!
//! A single inflation order is not enough: for the totally asymptotic
//! simplex different orders reach different fixpoints. `optimize` therefore
//! tries every order of the non-pivot balls and keeps the densest fixpoint
//! per pivot.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use super::{
    density_with_volume, simplex_volume, tangent_level, HoroballConfig, PackingReport, TraceStep, FIXPOINT_TOL,
    MAX_PASSES,
};
use crate::catalog::CoxeterSimplex;
use crate::error::{Error, Result};
use crate::horoball::{facet_tangent_horoball, Horoball};

/// Base order in which vertices (and permutations) are enumerated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum InflationOrder {
    #[default]
    Ascending,
    Descending,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct OptimizeOptions {
    pub order: InflationOrder,
    /// Try every inflation order; otherwise only the base order.
    pub exhaustive: bool,
    pub tol: f64,
}

impl Default for OptimizeOptions {
    fn default() -> Self {
        OptimizeOptions { order: InflationOrder::Ascending, exhaustive: true, tol: crate::lorentz::DEFAULT_TOL }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PivotSummary {
    pub pivot: usize,
    /// Distinct fixpoints reached from this pivot over all tried orders.
    pub fixpoints: usize,
    pub density: f64,
    /// Index into [`Optimum::reports`].
    pub report: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Optimum {
    pub witt: String,
    /// Distinct extremal configurations, in order of first pivot.
    pub reports: Vec<PackingReport>,
    pub pivots: Vec<PivotSummary>,
    pub density: f64,
}

impl Optimum {
    pub fn best(&self) -> &PackingReport {
        self.reports.iter().max_by(|a, b| a.density.total_cmp(&b.density)).expect("at least one report")
    }

    pub fn report_for_pivot(&self, pivot: usize) -> Option<&PackingReport> {
        self.pivots.iter().find(|p| p.pivot == pivot).map(|p| &self.reports[p.report])
    }
}

fn facet_limits(simplex: &CoxeterSimplex, tol: f64) -> Result<BTreeMap<usize, Horoball>> {
    simplex.ideal_vertices().into_iter().map(|i| Ok((i, facet_tangent_horoball(simplex, i, tol)?))).collect()
}

fn greedy_with_limits(
    limits: &BTreeMap<usize, Horoball>,
    pivot: usize,
    order: &[usize],
) -> Result<(HoroballConfig, Vec<TraceStep>)> {
    let mut config = HoroballConfig::new();
    let pivot_ball = limits.get(&pivot).ok_or_else(|| Error::Domain(format!("pivot A{pivot} is not ideal")))?;
    config.insert(pivot, pivot_ball.clone());
    let mut trace = vec![TraceStep { vertex: pivot, s: pivot_ball.s() }];
    for _ in 0..MAX_PASSES {
        let mut changed = false;
        for &v in order.iter().filter(|&&v| v != pivot) {
            let max = limits.get(&v).ok_or_else(|| Error::Domain(format!("vertex A{v} is not ideal")))?;
            let mut level = max.level();
            for (&u, bu) in &config.balls {
                if u != v {
                    level = level.min(tangent_level(bu, max));
                }
            }
            let stale = match config.get(v) {
                None => true,
                Some(b) => (b.level() - level).abs() > FIXPOINT_TOL * level,
            };
            if stale {
                let ball = max.with_level(level);
                trace.push(TraceStep { vertex: v, s: ball.s() });
                config.insert(v, ball);
                changed = true;
            }
        }
        if !changed {
            return Ok((config, trace));
        }
    }
    Err(Error::Convergence(MAX_PASSES))
}

/// Pivot at its facet limit, then inflate the balls in `order`, repeating
/// passes until no level changes.
pub fn greedy_fixpoint(
    simplex: &CoxeterSimplex,
    pivot: usize,
    order: &[usize],
    tol: f64,
) -> Result<(HoroballConfig, Vec<TraceStep>)> {
    greedy_with_limits(&facet_limits(simplex, tol)?, pivot, order)
}

fn level_cmp(a: &HoroballConfig, b: &HoroballConfig) -> Ordering {
    for ((_, x), (_, y)) in a.balls.iter().zip(&b.balls) {
        match x.level().total_cmp(&y.level()) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

/// Densest first; equal densities are ordered by level vector so the choice
/// does not depend on enumeration order.
fn better(a: &PackingReport, b: &PackingReport) -> bool {
    let rel = 1e-12 * a.density.max(b.density);
    if (a.density - b.density).abs() > rel {
        return a.density > b.density;
    }
    level_cmp(&a.config, &b.config) == Ordering::Greater
}

pub fn optimize(simplex: &CoxeterSimplex, opts: &OptimizeOptions) -> Result<Optimum> {
    let mut ideal = simplex.ideal_vertices();
    if ideal.is_empty() {
        return Err(Error::Domain(format!("{} has no ideal vertex", simplex.witt)));
    }
    if opts.order == InflationOrder::Descending {
        ideal.reverse();
    }
    let tol = opts.tol;
    let limits = facet_limits(simplex, tol)?;
    let volume = simplex_volume(simplex)?;

    let mut reports: Vec<PackingReport> = Vec::new();
    let mut pivots = Vec::new();
    let mut pivot_order = ideal.clone();
    pivot_order.sort_unstable();
    for &pivot in &pivot_order {
        let rest: Vec<usize> = ideal.iter().copied().filter(|&v| v != pivot).collect();
        let orders: Vec<Vec<usize>> =
            if opts.exhaustive { rest.iter().copied().permutations(rest.len()).collect() } else { vec![rest.clone()] };
        let mut seen: Vec<PackingReport> = Vec::new();
        for order in orders {
            let (config, trace) = greedy_with_limits(&limits, pivot, &order)?;
            if seen.iter().any(|r| r.config.same_levels(&config, 1e-10)) {
                continue;
            }
            let mut report = density_with_volume(simplex, &config, volume, tol)?;
            report.pivot = Some(pivot);
            report.trace = trace;
            seen.push(report);
        }
        let fixpoints = seen.len();
        let best = seen.into_iter().reduce(|a, b| if better(&b, &a) { b } else { a }).expect("at least one order");
        let density = best.density;
        let index = match reports.iter().position(|r| r.config.same_levels(&best.config, 1e-10)) {
            Some(i) => i,
            None => {
                reports.push(best);
                reports.len() - 1
            }
        };
        pivots.push(PivotSummary { pivot, fixpoints, density, report: index });
    }
    let density = reports.iter().map(|r| r.density).fold(f64::NEG_INFINITY, f64::max);
    Ok(Optimum { witt: simplex.witt.clone(), reports, pivots, density })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;
    use crate::lorentz::DEFAULT_TOL as TOL;

    #[test]
    fn x5_two_classes() {
        let x5 = builtin("X5").unwrap();
        let opt = optimize(&x5, &OptimizeOptions::default()).unwrap();
        assert_eq!(opt.reports.len(), 2);
        let a = opt.report_for_pivot(0).unwrap();
        assert!((a.s_of(0).unwrap()).abs() < 1e-12);
        assert!((a.s_of(5).unwrap() - 0.6).abs() < 1e-12);
        let b = opt.report_for_pivot(5).unwrap();
        assert!((b.s_of(0).unwrap() - 1.0 / 3.0).abs() < 1e-12);
        assert!((b.s_of(5).unwrap() - 1.0 / 3.0).abs() < 1e-12);
        assert!((a.density - b.density).abs() < 1e-12);
    }

    #[test]
    fn single_cusp_has_one_report() {
        let u5 = builtin("U5").unwrap();
        let opt = optimize(&u5, &OptimizeOptions::default()).unwrap();
        assert_eq!(opt.reports.len(), 1);
        assert_eq!(opt.pivots.len(), 1);
    }

    #[test]
    fn greedy_trace_starts_with_pivot() {
        let n5 = builtin("N5").unwrap();
        let (config, trace) = greedy_fixpoint(&n5, 5, &[0, 2], TOL).unwrap();
        assert_eq!(trace[0].vertex, 5);
        assert!((config.get(0).unwrap().s() - 1.0 / 3.0).abs() < 1e-12);
        assert!((config.get(2).unwrap().s() - 7.0 / 9.0).abs() < 1e-12);
    }

    #[test]
    fn non_ideal_pivot_rejected() {
        let u5 = builtin("U5").unwrap();
        assert!(greedy_fixpoint(&u5, 1, &[], TOL).is_err());
    }
}
