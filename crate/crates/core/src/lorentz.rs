//! Linear algebra in signature (1, n): the bilinear form, point and form
//! classification, distances, perpendicular feet and Gram matrices.
//!
//! Points are homogeneous column vectors (index 0 timelike). Forms are
//! covectors; a point `x` lies on the hyperplane of `u` iff the plain
//! contraction `x·u` vanishes. Nothing is normalized on construction.

use std::fmt;

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default relative tolerance for classification and incidence.
pub const DEFAULT_TOL: f64 = 1e-9;

/// `−x⁰y⁰ + Σ xⁱyⁱ`.
pub fn bform(x: &[f64], y: &[f64]) -> Result<f64> {
    check_len(x, y)?;
    Ok(lorentz_dot(x, y))
}

fn lorentz_dot(x: &[f64], y: &[f64]) -> f64 {
    -x[0] * y[0] + x[1..].iter().zip(&y[1..]).map(|(a, b)| a * b).sum::<f64>()
}

fn euclid_dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn check_len(x: &[f64], y: &[f64]) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::Dimension { expected: x.len(), found: y.len() });
    }
    if x.len() < 3 {
        return Err(Error::Dimension { expected: 3, found: x.len() });
    }
    Ok(())
}

fn check_vector(v: &[f64], what: &str) -> Result<()> {
    if v.len() < 3 {
        return Err(Error::Dimension { expected: 3, found: v.len() });
    }
    if v.iter().any(|c| !c.is_finite()) {
        return Err(Error::InvalidPoint(format!("{what} has a non-finite coordinate")));
    }
    if v.iter().all(|&c| c == 0.0) {
        return Err(Error::InvalidPoint(format!("{what} is the zero vector")));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PointKind {
    Proper,
    Ideal,
    Outer,
}

impl fmt::Display for PointKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PointKind::Proper => "proper",
            PointKind::Ideal => "ideal",
            PointKind::Outer => "outer",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProjectivePoint {
    coords: Vec<f64>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        check_vector(&coords, "point")?;
        Ok(ProjectivePoint { coords })
    }

    /// The model centre `(1, 0, …, 0)` of H^n.
    pub fn origin(n: usize) -> Self {
        let mut coords = vec![0.0; n + 1];
        coords[0] = 1.0;
        ProjectivePoint { coords }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        ProjectivePoint::new(self.coords.iter().map(|c| c * lambda).collect())
    }

    /// Representative with `coords[0] = 1`, if the point is not at affine infinity.
    pub fn affine(&self) -> Option<Self> {
        let w = self.coords[0];
        (w != 0.0).then(|| ProjectivePoint { coords: self.coords.iter().map(|c| c / w).collect() })
    }

    pub fn self_product(&self) -> f64 {
        lorentz_dot(&self.coords, &self.coords)
    }

    pub fn euclid_norm_sq(&self) -> f64 {
        euclid_dot(&self.coords, &self.coords)
    }

    pub fn bform(&self, other: &ProjectivePoint) -> Result<f64> {
        bform(&self.coords, &other.coords)
    }

    pub fn classify(&self, tol: f64) -> PointKind {
        let q = self.self_product();
        let scale = tol * self.euclid_norm_sq();
        if q < -scale {
            PointKind::Proper
        } else if q.abs() <= scale {
            PointKind::Ideal
        } else {
            PointKind::Outer
        }
    }

    /// True when both represent the same projective point within `tol`.
    pub fn projectively_eq(&self, other: &ProjectivePoint, tol: f64) -> bool {
        if self.coords.len() != other.coords.len() {
            return false;
        }
        let (a, b) = (&self.coords, &other.coords);
        let na = euclid_dot(a, a).sqrt();
        let nb = euclid_dot(b, b).sqrt();
        let cos = euclid_dot(a, b) / (na * nb);
        1.0 - cos.abs() <= tol
    }

    /// Pole-polar map: the covector `y ↦ ⟨self, y⟩`.
    pub fn polar(&self) -> HyperplaneForm {
        HyperplaneForm { coeffs: raise(&self.coords) }
    }
}

/// Flips the timelike component. Maps a point to the covector of its polar
/// and a covector to its signature-raised vector.
fn raise(v: &[f64]) -> Vec<f64> {
    let mut out = v.to_vec();
    out[0] = -out[0];
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HyperplaneForm {
    coeffs: Vec<f64>,
}

impl HyperplaneForm {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        check_vector(&coeffs, "form")?;
        Ok(HyperplaneForm { coeffs })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        HyperplaneForm::new(self.coeffs.iter().map(|c| c * lambda).collect())
    }

    pub fn negated(&self) -> Self {
        HyperplaneForm { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Product under the dual form, which has the same signature.
    pub fn self_product(&self) -> f64 {
        lorentz_dot(&self.coeffs, &self.coeffs)
    }

    pub fn product(&self, other: &HyperplaneForm) -> Result<f64> {
        bform(&self.coeffs, &other.coeffs)
    }

    /// Unit representative (self-product 1); only spacelike forms qualify.
    pub fn normalized(&self) -> Result<Self> {
        let q = self.self_product();
        if q <= DEFAULT_TOL * euclid_dot(&self.coeffs, &self.coeffs) {
            return Err(Error::DegenerateForm(format!("form {:?} has non-positive self-product {q:e}", self.coeffs)));
        }
        let k = q.sqrt();
        Ok(HyperplaneForm { coeffs: self.coeffs.iter().map(|c| c / k).collect() })
    }

    /// The plain contraction `x·u`.
    pub fn eval(&self, p: &ProjectivePoint) -> Result<f64> {
        check_len(&self.coeffs, p.coords())?;
        Ok(euclid_dot(&self.coeffs, p.coords()))
    }

    /// Scale-free incidence residual `|x·u| / (‖x‖ ‖u‖)`.
    pub fn incidence_residual(&self, p: &ProjectivePoint) -> Result<f64> {
        let v = self.eval(p)?;
        Ok(v.abs() / (p.euclid_norm_sq().sqrt() * euclid_dot(&self.coeffs, &self.coeffs).sqrt()))
    }

    pub fn raised(&self) -> Vec<f64> {
        raise(&self.coeffs)
    }
}

/// Hyperbolic distance between two proper points.
pub fn distance(x: &ProjectivePoint, y: &ProjectivePoint, tol: f64) -> Result<f64> {
    for p in [x, y] {
        if p.classify(tol) != PointKind::Proper {
            return Err(Error::Domain(format!("distance needs proper points, got {} point", p.classify(tol))));
        }
    }
    // |⟨x,y⟩| so that either point may be represented with x⁰ < 0.
    let xy = x.bform(y)?;
    let arg = xy.abs() / (x.self_product() * y.self_product()).sqrt();
    if arg.is_nan() || arg < 1.0 - tol {
        return Err(Error::NumericDomain(format!("arccosh argument {arg} below 1")));
    }
    Ok(arg.max(1.0).acosh())
}

/// Perpendicular foot of `x` on the hyperplane of `u`.
pub fn foot(x: &ProjectivePoint, u: &HyperplaneForm) -> Result<ProjectivePoint> {
    let uu = u.self_product();
    let scale = euclid_dot(u.coeffs(), u.coeffs());
    if uu.abs() <= DEFAULT_TOL * scale {
        return Err(Error::DegenerateForm("lightlike form has no perpendicular foot".into()));
    }
    let k = u.eval(x)? / uu;
    let sharp = u.raised();
    ProjectivePoint::new(x.coords().iter().zip(&sharp).map(|(a, b)| a - k * b).collect())
}

/// Pole-polar map on points.
pub fn polar(p: &ProjectivePoint) -> HyperplaneForm {
    p.polar()
}

/// Weight of a Coxeter diagram edge: dihedral angle `π/k`, or parallel walls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Weight {
    Finite(u32),
    Infinite,
}

impl Weight {
    /// Expected Gram entry `−cos(π/k)`, `−1` for parallel walls.
    pub fn gram_entry(self) -> f64 {
        match self {
            Weight::Finite(2) => 0.0,
            Weight::Finite(k) => -(std::f64::consts::PI / f64::from(k)).cos(),
            Weight::Infinite => -1.0,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Finite(k) => write!(f, "{k}"),
            Weight::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GramMatrix {
    entries: DMatrix<f64>,
}

/// Counts of negative, zero and positive eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub negative: usize,
    pub zero: usize,
    pub positive: usize,
}

impl GramMatrix {
    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[(i, j)]
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = SymmetricEigen::new(self.entries.clone()).eigenvalues.iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    pub fn signature(&self, tol: f64) -> Signature {
        let ev = self.eigenvalues();
        let scale = ev.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
        let mut sig = Signature { negative: 0, zero: 0, positive: 0 };
        for v in ev {
            if v < -tol * scale {
                sig.negative += 1;
            } else if v > tol * scale {
                sig.positive += 1;
            } else {
                sig.zero += 1;
            }
        }
        sig
    }

    /// Hyperbolic simplex signature: one negative and `n` positive eigenvalues.
    pub fn is_hyperbolic(&self, tol: f64) -> bool {
        let s = self.signature(tol);
        s.negative == 1 && s.zero == 0 && s.positive == self.size() - 1
    }
}

/// Gram matrix of the unit-normalized forms.
pub fn gram(forms: &[HyperplaneForm]) -> Result<GramMatrix> {
    let unit = forms.iter().map(HyperplaneForm::normalized).collect::<Result<Vec<_>>>()?;
    let k = unit.len();
    let mut entries = DMatrix::<f64>::identity(k, k);
    for i in 0..k {
        for j in i + 1..k {
            let v = unit[i].product(&unit[j])?;
            entries[(i, j)] = v;
            entries[(j, i)] = v;
        }
    }
    Ok(GramMatrix { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn p(v: &[f64]) -> ProjectivePoint {
        ProjectivePoint::new(v.to_vec()).unwrap()
    }

    fn u(v: &[f64]) -> HyperplaneForm {
        HyperplaneForm::new(v.to_vec()).unwrap()
    }

    #[test]
    fn bform_examples() {
        let a = [1.0, 0.0, 0.0, 0.0, 0.0, 1.0];
        let o = [1.0, 0.0, 0.0, 0.0, 0.0, 0.0];
        assert_eq!(bform(&a, &a).unwrap(), 0.0);
        assert_eq!(bform(&o, &o).unwrap(), -1.0);
        assert_eq!(bform(&a, &o).unwrap(), -1.0);
        assert!(matches!(bform(&a, &o[..5]), Err(Error::Dimension { .. })));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(p(&[1.0, 0.0, 0.0, 0.0, 0.0, 1.0]).classify(DEFAULT_TOL), PointKind::Ideal);
        assert_eq!(p(&[1.0, 0.0, 0.0, 0.0, 0.0, 0.0]).classify(DEFAULT_TOL), PointKind::Proper);
        assert_eq!(p(&[1.0, 0.0, 0.0, 0.0, 0.0, 2.0]).classify(DEFAULT_TOL), PointKind::Outer);
        assert!(matches!(ProjectivePoint::new(vec![0.0; 6]), Err(Error::InvalidPoint(_))));
    }

    #[test]
    fn distance_examples() {
        let o = ProjectivePoint::origin(5);
        assert_eq!(distance(&o, &o, DEFAULT_TOL).unwrap(), 0.0);
        let d = distance(&o, &p(&[1.0, 0.0, 0.0, 0.0, 0.0, 1.0 / 3.0]), DEFAULT_TOL).unwrap();
        assert_relative_eq!(d, (1.0_f64 / 3.0).atanh(), epsilon = 1e-14);
        let h2 = p(&[1.0, 4.0 / 9.0, 0.0, 0.0, 0.0, 1.0 / 9.0]);
        assert_relative_eq!(distance(&o, &h2, DEFAULT_TOL).unwrap(), (9.0_f64 / 8.0).acosh(), epsilon = 1e-14);
        let flipped = h2.scaled(-2.0).unwrap();
        assert_relative_eq!(distance(&o, &flipped, DEFAULT_TOL).unwrap(), (9.0_f64 / 8.0).acosh(), epsilon = 1e-14);
        let ideal = p(&[1.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        assert!(matches!(distance(&o, &ideal, DEFAULT_TOL), Err(Error::Domain(_))));
    }

    #[test]
    fn foot_examples() {
        let a0 = p(&[1.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        let u0 = u(&[0.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        let f = foot(&a0, &u0).unwrap();
        assert!(f.projectively_eq(&ProjectivePoint::origin(5), 1e-15));
        let already = p(&[1.0, 0.2, 0.0, 0.0, 0.0, 0.0]);
        assert!(foot(&already, &u0).unwrap().projectively_eq(&already, 1e-15));
        let light = u(&[1.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        assert!(matches!(foot(&a0, &light), Err(Error::DegenerateForm(_))));
    }

    #[test]
    fn polar_examples() {
        let pol = polar(&ProjectivePoint::origin(5));
        assert_eq!(pol.coeffs(), &[-1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let ideal = p(&[1.0, 0.0, 0.6, 0.0, 0.8, 0.0]);
        assert!(polar(&ideal).eval(&ideal).unwrap().abs() < 1e-15);
    }

    #[test]
    fn gram_single_and_scaled() {
        let g = gram(&[u(&[0.0, 0.0, 3.0])]).unwrap();
        assert_eq!(g.get(0, 0), 1.0);
        let a = gram(&[u(&[0.0, 1.0, 0.0]), u(&[0.0, -0.5, 3f64.sqrt() / 2.0])]).unwrap();
        let b = gram(&[u(&[0.0, 1.0 / 24.0, 0.0]), u(&[0.0, -12.0, 12.0 * 3f64.sqrt()])]).unwrap();
        assert_relative_eq!(a.get(0, 1), -0.5, epsilon = 1e-15);
        assert_relative_eq!(a.get(0, 1), b.get(0, 1), epsilon = 1e-15);
        assert!(matches!(gram(&[u(&[1.0, 1.0, 0.0])]), Err(Error::DegenerateForm(_))));
    }

    #[test]
    fn weight_entries() {
        assert_eq!(Weight::Finite(2).gram_entry(), 0.0);
        assert_relative_eq!(Weight::Finite(3).gram_entry(), -0.5, epsilon = 1e-15);
        assert_relative_eq!(Weight::Finite(4).gram_entry(), -(0.5f64.sqrt()), epsilon = 1e-15);
        assert_eq!(Weight::Infinite.gram_entry(), -1.0);
    }
}
