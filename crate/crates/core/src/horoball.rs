//! Horoballs as level sets of `p ↦ ⟨p,c⟩² / (−⟨p,p⟩)` for an ideal centre `c`
//! (affinely normalized). A ball is `{p : level(p) ≤ t}`: the level tends to 0
//! at the cusp, so a larger `t` means a larger ball.
//!
//! For the centre `(1,0,…,0,1)` the boundary crosses the model axis at
//! `(1,0,…,0,s)` with `t = (1−s)/(1+s)`. Growing a ball by hyperbolic
//! distance `x` multiplies `t` by `e^{2x}`.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::catalog::CoxeterSimplex;
use crate::error::{Error, Result};
use crate::lorentz::{distance, foot, PointKind, ProjectivePoint};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Horoball {
    center: ProjectivePoint,
    level: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Membership {
    Inside,
    Boundary,
    Outside,
}

/// Level ↔ type parameter.
pub fn level_from_s(s: f64) -> Result<f64> {
    if !(s > -1.0 && s < 1.0) {
        return Err(Error::Domain(format!("type parameter {s} outside (-1, 1)")));
    }
    Ok((1.0 - s) / (1.0 + s))
}

pub fn s_from_level(t: f64) -> f64 {
    (1.0 - t) / (1.0 + t)
}

fn ideal_center(center: &ProjectivePoint, tol: f64) -> Result<ProjectivePoint> {
    if center.classify(tol) != PointKind::Ideal {
        return Err(Error::Domain(format!("horoball centre must be ideal, got {}", center.classify(tol))));
    }
    center.affine().ok_or_else(|| Error::Domain("ideal centre at affine infinity".into()))
}

fn proper_affine(p: &ProjectivePoint, tol: f64) -> Result<ProjectivePoint> {
    if p.classify(tol) != PointKind::Proper {
        return Err(Error::Domain(format!("expected a proper point, got {}", p.classify(tol))));
    }
    Ok(p.affine().expect("proper points have nonzero timelike coordinate"))
}

impl Horoball {
    pub fn new(center: &ProjectivePoint, level: f64, tol: f64) -> Result<Self> {
        if !(level.is_finite() && level > 0.0) {
            return Err(Error::Domain(format!("horoball level must be positive, got {level}")));
        }
        Ok(Horoball { center: ideal_center(center, tol)?, level })
    }

    pub fn from_s(center: &ProjectivePoint, s: f64, tol: f64) -> Result<Self> {
        Horoball::new(center, level_from_s(s)?, tol)
    }

    pub fn center(&self) -> &ProjectivePoint {
        &self.center
    }

    pub fn level(&self) -> f64 {
        self.level
    }

    /// Type parameter `s = (1−t)/(1+t)`.
    pub fn s(&self) -> f64 {
        s_from_level(self.level)
    }

    /// The ball grown by hyperbolic distance `x` (shrunk for negative `x`).
    pub fn grown(&self, x: f64) -> Self {
        Horoball { center: self.center.clone(), level: self.level * (2.0 * x).exp() }
    }

    pub fn with_level(&self, level: f64) -> Self {
        Horoball { center: self.center.clone(), level }
    }

    /// Where the boundary crosses the line from the centre through the model
    /// origin: `(1, s·ĉ)` with `ĉ` the spatial part of the centre.
    pub fn axis_point(&self) -> ProjectivePoint {
        let s = self.s();
        let mut coords: Vec<f64> = self.center.coords().iter().map(|c| s * c).collect();
        coords[0] = 1.0;
        ProjectivePoint::new(coords).expect("nonzero")
    }

    /// Level of a proper point with respect to this centre.
    pub fn level_of(&self, p: &ProjectivePoint, tol: f64) -> Result<f64> {
        let p = proper_affine(p, tol)?;
        let pc = p.bform(&self.center)?;
        Ok(pc * pc / -p.self_product())
    }

    pub fn membership(&self, p: &ProjectivePoint, tol: f64) -> Result<Membership> {
        let f = self.level_of(p, tol)?;
        Ok(if (f - self.level).abs() <= tol * self.level.max(f) {
            Membership::Boundary
        } else if f < self.level {
            Membership::Inside
        } else {
            Membership::Outside
        })
    }
}

/// The horoball at `center` whose boundary passes through `p`.
pub fn horoball_through(center: &ProjectivePoint, p: &ProjectivePoint, tol: f64) -> Result<Horoball> {
    let c = ideal_center(center, tol)?;
    let p = proper_affine(p, tol)?;
    let pc = p.bform(&c)?;
    if pc == 0.0 {
        return Err(Error::Geometry("point is orthogonal to the centre".into()));
    }
    Horoball::new(&c, pc * pc / -p.self_product(), tol)
}

/// Where the boundary of `b` meets the edge from its centre towards `a`.
///
/// With `h = λc + a` and `⟨c,c⟩ = 0` the boundary condition is linear in λ,
/// so there is a single candidate; it lies on the edge iff λ ≥ 0, i.e. `a`
/// is not strictly inside the ball.
pub fn edge_intersection(b: &Horoball, a: &ProjectivePoint, tol: f64) -> Result<ProjectivePoint> {
    if a.projectively_eq(&b.center, tol) {
        return Err(Error::Domain("edge endpoint coincides with the horoball centre".into()));
    }
    let a = a.affine().ok_or_else(|| Error::Domain("edge endpoint at affine infinity".into()))?;
    let ac = a.bform(&b.center)?;
    if ac.abs() <= tol {
        return Err(Error::Geometry("edge is orthogonal to the centre".into()));
    }
    let lambda = -(ac * ac / b.level + a.self_product()) / (2.0 * ac);
    if lambda < -tol {
        return Err(Error::Geometry(format!("edge endpoint lies inside the horoball (λ = {lambda:e})")));
    }
    let lambda = lambda.max(0.0);
    let coords = b.center.coords().iter().zip(a.coords()).map(|(c, x)| (lambda * c + x) / (lambda + 1.0)).collect();
    ProjectivePoint::new(coords)
}

/// Largest horoball at ideal vertex `i` that stays inside the half-space of
/// the opposite facet: it touches that facet at the foot of `A_i`.
pub fn facet_tangent_horoball(s: &CoxeterSimplex, i: usize, tol: f64) -> Result<Horoball> {
    let a = s.vertex(i)?;
    if a.classify(tol) != PointKind::Ideal {
        return Err(Error::Domain(format!("vertex A{i} of {} is not ideal", s.witt)));
    }
    let f = foot(a, s.form(i)?)?;
    if f.classify(tol) != PointKind::Proper {
        return Err(Error::Geometry(format!("foot of A{i} on u{i} is {}", f.classify(tol))));
    }
    horoball_through(a, &f, tol)
}

/// The horoball at `A_j` tangent to `fixed` (centred at `A_i`) along the edge
/// `A_iA_j`.
pub fn mutual_tangent_horoball(
    s: &CoxeterSimplex,
    (i, fixed): (usize, &Horoball),
    j: usize,
    tol: f64,
) -> Result<Horoball> {
    if i == j {
        return Err(Error::Domain("tangency needs two distinct vertices".into()));
    }
    let aj = s.vertex(j)?;
    if aj.classify(tol) != PointKind::Ideal {
        return Err(Error::Domain(format!("vertex A{j} of {} is not ideal", s.witt)));
    }
    if !s.vertex(i)?.projectively_eq(fixed.center(), tol) {
        return Err(Error::Domain(format!("horoball is not centred at A{i}")));
    }
    let t = edge_intersection(fixed, aj, tol)?;
    horoball_through(aj, &t, tol)
}

/// Horocyclic arc length over a chord of hyperbolic length `x`.
pub fn horospheric_arc(x: f64) -> Result<f64> {
    if x < 0.0 || x.is_nan() {
        return Err(Error::Domain(format!("arc needs a nonnegative chord, got {x}")));
    }
    Ok(2.0 * (x / 2.0).sinh())
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|v| v as f64).product()
}

/// Euclidean `k`-volume from the `(k+1)×(k+1)` matrix of edge lengths.
pub fn cayley_menger_volume(lengths: &DMatrix<f64>, k: usize, tol: f64) -> Result<f64> {
    let m = k + 1;
    if lengths.nrows() != m || lengths.ncols() != m {
        return Err(Error::Dimension { expected: m, found: lengths.nrows() });
    }
    let max = lengths.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()));
    for i in 0..m {
        if lengths[(i, i)].abs() > tol * max.max(1.0) {
            return Err(Error::Domain(format!("nonzero diagonal length at {i}")));
        }
        for j in 0..m {
            let v = lengths[(i, j)];
            if v.is_nan() || v < 0.0 {
                return Err(Error::Domain(format!("negative length at ({i},{j})")));
            }
            if (v - lengths[(j, i)]).abs() > tol * max.max(1.0) {
                return Err(Error::Domain(format!("length matrix not symmetric at ({i},{j})")));
            }
        }
    }
    if max == 0.0 {
        return Ok(0.0);
    }
    // Work with lengths scaled to max 1 and undo the scaling at the end.
    let mut cm = DMatrix::<f64>::zeros(m + 1, m + 1);
    for i in 0..m {
        cm[(0, i + 1)] = 1.0;
        cm[(i + 1, 0)] = 1.0;
        for j in 0..m {
            let l = lengths[(i, j)] / max;
            cm[(i + 1, j + 1)] = l * l;
        }
    }
    let sign = if (k + 1).is_multiple_of(2) { 1.0 } else { -1.0 };
    let v2 = sign * cm.determinant() / (2f64.powi(k as i32) * factorial(k).powi(2));
    if v2 < -tol {
        return Err(Error::NonEmbeddable(v2));
    }
    if v2 <= 0.0 {
        return Ok(0.0);
    }
    Ok(v2.sqrt() * max.powi(k as i32))
}

/// The horospheric simplex cut out of a horosphere by the edges at its centre.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HorosphericSimplex {
    pub vertex: usize,
    pub points: Vec<ProjectivePoint>,
    pub chords: Vec<Vec<f64>>,
    pub lengths: Vec<Vec<f64>>,
    pub area: f64,
}

pub fn horospheric_simplex(s: &CoxeterSimplex, i: usize, b: &Horoball, tol: f64) -> Result<HorosphericSimplex> {
    let a = s.vertex(i)?;
    if !a.projectively_eq(b.center(), tol) {
        return Err(Error::Domain(format!("horoball is not centred at A{i}")));
    }
    let points =
        (0..=s.dim).filter(|&j| j != i).map(|j| edge_intersection(b, s.vertex(j)?, tol)).collect::<Result<Vec<_>>>()?;
    let k = points.len();
    let mut chords = vec![vec![0.0; k]; k];
    let mut lengths = DMatrix::<f64>::zeros(k, k);
    for p in 0..k {
        for q in p + 1..k {
            let l = distance(&points[p], &points[q], tol)?;
            let arc = horospheric_arc(l)?;
            chords[p][q] = l;
            chords[q][p] = l;
            lengths[(p, q)] = arc;
            lengths[(q, p)] = arc;
        }
    }
    let area = cayley_menger_volume(&lengths, k - 1, tol)?;
    let lengths = (0..k).map(|p| (0..k).map(|q| lengths[(p, q)]).collect()).collect();
    Ok(HorosphericSimplex { vertex: i, points, chords, lengths, area })
}

/// Volume of `b ∩ simplex` for a ball at ideal vertex `i`: the horospheric
/// `(n−1)`-volume divided by `n−1`.
pub fn piece_volume(s: &CoxeterSimplex, i: usize, b: &Horoball, tol: f64) -> Result<f64> {
    let h = horospheric_simplex(s, i, b, tol)?;
    Ok(h.area / (s.dim - 1) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;
    use crate::lorentz::DEFAULT_TOL as TOL;
    use approx::assert_relative_eq;

    fn pt(v: &[f64]) -> ProjectivePoint {
        ProjectivePoint::new(v.to_vec()).unwrap()
    }

    fn cusp() -> ProjectivePoint {
        pt(&[1.0, 0.0, 0.0, 0.0, 0.0, 1.0])
    }

    #[test]
    fn through_examples() {
        let b = horoball_through(&cusp(), &ProjectivePoint::origin(5), TOL).unwrap();
        assert_relative_eq!(b.level(), 1.0, epsilon = 1e-15);
        assert_relative_eq!(b.s(), 0.0, epsilon = 1e-15);
        let b = horoball_through(&cusp(), &pt(&[1.0, 0.0, 0.0, 0.0, 0.0, 1.0 / 3.0]), TOL).unwrap();
        assert_relative_eq!(b.level(), 0.5, epsilon = 1e-15);
        assert_relative_eq!(b.s(), 1.0 / 3.0, epsilon = 1e-15);
        assert!(horoball_through(&cusp(), &cusp(), TOL).is_err());
    }

    #[test]
    fn boundary_matches_paraboloid_equation() {
        // 2·x⁵ + 4·(x⁵ − 1/2)² = 1 in affine coordinates (with the other
        // coordinates zero) has x⁵ = 0 on the boundary of the s = 0 ball.
        let b = Horoball::from_s(&cusp(), 0.0, TOL).unwrap();
        let x5: f64 = 0.0;
        assert_relative_eq!(2.0 * x5 + 4.0 * (x5 - 0.5).powi(2), 1.0);
        assert_eq!(b.membership(&pt(&[1.0, 0.0, 0.0, 0.0, 0.0, x5]), TOL).unwrap(), Membership::Boundary);
    }

    #[test]
    fn membership_examples() {
        let b = Horoball::from_s(&cusp(), 0.0, TOL).unwrap();
        assert_eq!(b.membership(&ProjectivePoint::origin(5), TOL).unwrap(), Membership::Boundary);
        assert_eq!(b.membership(&pt(&[1.0, 0.0, 0.0, 0.0, 0.0, 0.5]), TOL).unwrap(), Membership::Inside);
        assert_eq!(b.membership(&pt(&[1.0, 0.0, 0.0, 0.0, 0.0, -0.5]), TOL).unwrap(), Membership::Outside);
        assert!(b.membership(&cusp(), TOL).is_err());
    }

    #[test]
    fn level_grows_with_ball() {
        assert!(level_from_s(-0.1).unwrap() > level_from_s(0.0).unwrap());
        assert!(level_from_s(1.0).is_err());
        let b = Horoball::from_s(&cusp(), 0.2, TOL).unwrap();
        assert_relative_eq!(b.grown(0.3).level(), b.level() * 0.6f64.exp(), epsilon = 1e-15);
    }

    #[test]
    fn u5_edge_points() {
        let u5 = builtin("U5").unwrap();
        let b = facet_tangent_horoball(&u5, 0, TOL).unwrap();
        let h1 = edge_intersection(&b, u5.vertex(1).unwrap(), TOL).unwrap();
        let h2 = edge_intersection(&b, u5.vertex(2).unwrap(), TOL).unwrap();
        for (got, want) in h1.coords().iter().zip([1.0, 0.0, 0.0, 0.0, 0.0, 0.0]) {
            assert!((got - want).abs() < 1e-12);
        }
        for (got, want) in h2.coords().iter().zip([1.0, 4.0 / 9.0, 0.0, 0.0, 0.0, 1.0 / 9.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn edge_inside_ball_is_rejected() {
        let b = Horoball::from_s(&cusp(), -0.5, TOL).unwrap();
        assert!(matches!(edge_intersection(&b, &ProjectivePoint::origin(5), TOL), Err(Error::Geometry(_))));
    }

    #[test]
    fn arc_examples() {
        assert_eq!(horospheric_arc(0.0).unwrap(), 0.0);
        let x = 1e-6;
        assert!((horospheric_arc(x).unwrap() / x - 1.0).abs() < 1e-9);
        assert_relative_eq!(horospheric_arc(2.0 * 0.5f64.asinh()).unwrap(), 1.0, epsilon = 1e-15);
        assert!(horospheric_arc(-1.0).is_err());
    }

    #[test]
    fn regular_simplex_volume() {
        let l = DMatrix::from_fn(5, 5, |i, j| if i == j { 0.0 } else { 1.0 });
        assert_relative_eq!(cayley_menger_volume(&l, 4, TOL).unwrap(), 5f64.sqrt() / 96.0, max_relative = 1e-12);
        let tri = DMatrix::from_row_slice(3, 3, &[0.0, 3.0, 4.0, 3.0, 0.0, 5.0, 4.0, 5.0, 0.0]);
        assert_relative_eq!(cayley_menger_volume(&tri, 2, TOL).unwrap(), 6.0, max_relative = 1e-12);
    }

    #[test]
    fn degenerate_and_invalid_lengths() {
        let mut l = DMatrix::from_fn(5, 5, |i, j| if i == j { 0.0 } else { 1.0 });
        l[(0, 1)] = 0.0;
        l[(1, 0)] = 0.0;
        assert_eq!(cayley_menger_volume(&l, 4, TOL).unwrap(), 0.0);
        let tri = DMatrix::from_row_slice(3, 3, &[0.0, 1.0, 5.0, 1.0, 0.0, 1.0, 5.0, 1.0, 0.0]);
        assert!(matches!(cayley_menger_volume(&tri, 2, TOL), Err(Error::NonEmbeddable(_))));
        let asym = DMatrix::from_row_slice(3, 3, &[0.0, 1.0, 1.0, 2.0, 0.0, 1.0, 1.0, 1.0, 0.0]);
        assert!(matches!(cayley_menger_volume(&asym, 2, TOL), Err(Error::Domain(_))));
    }

    #[test]
    fn piece_scaling_law() {
        let u5 = builtin("U5").unwrap();
        let b = facet_tangent_horoball(&u5, 0, TOL).unwrap();
        let v0 = piece_volume(&u5, 0, &b, TOL).unwrap();
        let v1 = piece_volume(&u5, 0, &b.grown(-0.1), TOL).unwrap();
        assert_relative_eq!(v1 / v0, (-0.4f64).exp(), max_relative = 1e-9);
    }

    #[test]
    fn tangency_closed_form_and_symmetry() {
        let x5 = builtin("X5").unwrap();
        let b0 = Horoball::from_s(x5.vertex(0).unwrap(), 0.0, TOL).unwrap();
        let b5 = mutual_tangent_horoball(&x5, (0, &b0), 5, TOL).unwrap();
        assert_relative_eq!(b5.s(), 0.6, epsilon = 1e-12);
        let beta = b0.center().bform(b5.center()).unwrap();
        assert_relative_eq!(b5.level(), beta * beta / (4.0 * b0.level()), max_relative = 1e-12);
        let back = mutual_tangent_horoball(&x5, (5, &b5), 0, TOL).unwrap();
        assert_relative_eq!(back.level(), b0.level(), max_relative = 1e-10);
    }
}
