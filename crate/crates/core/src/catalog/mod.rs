//! The twelve asymptotic Coxeter simplices of H⁵, plus ingestion of user
//! simplices, structural verification and exact volumes.

mod builtin;
mod format;
pub mod special;
mod verify;

use std::fmt;
use std::sync::OnceLock;

use crate::algexpr::AlgExpr;
use crate::error::{Error, Result};
use crate::lorentz::{HyperplaneForm, ProjectivePoint, Weight};
use crate::real::Real;

pub use builtin::{builtin, builtin_symbols, builtins};
pub use format::{load, load_str, serialize};
pub use special::{dirichlet_l, dirichlet_l_series, legendre_symbol, zeta, zeta_series, SeriesValue};
pub use verify::{verify, Check, VerificationReport};

/// Digits used when turning exact coordinates into `f64` geometry.
pub const GEOMETRY_DIGITS: u32 = 30;

#[derive(Clone, Debug, PartialEq)]
pub enum VolumeDescriptor {
    /// `coef · ζ(k)`
    Zeta { k: u32, coef: AlgExpr },
    /// `coef · L(s, (·/d))`
    Dirichlet { s: u32, d: u32, coef: AlgExpr },
    /// A decimal with no known closed form.
    Literal(String),
}

impl VolumeDescriptor {
    pub fn eval(&self, digits: u32) -> Result<Real> {
        match self {
            VolumeDescriptor::Zeta { k, coef } => Ok(coef.eval(digits)? * special::zeta(*k, digits)?),
            VolumeDescriptor::Dirichlet { s, d, coef } => {
                Ok(coef.eval(digits)? * special::dirichlet_l(*s, *d, digits)?)
            }
            VolumeDescriptor::Literal(text) => Real::parse_decimal(text, digits),
        }
    }
}

impl fmt::Display for VolumeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // `p/q·ζ(3)` reads better as `p·ζ(3)/q`.
        let scaled = |f: &mut fmt::Formatter<'_>, coef: &AlgExpr, name: String| match coef {
            AlgExpr::Div(num, den) if num.precedence() >= 2 => write!(f, "{num}·{name}/{den}"),
            other if other.precedence() >= 2 => write!(f, "{other}·{name}"),
            other => write!(f, "({other})·{name}"),
        };
        match self {
            VolumeDescriptor::Zeta { k, coef } => scaled(f, coef, format!("ζ({k})")),
            VolumeDescriptor::Dirichlet { s, d, coef } => scaled(f, coef, format!("L({s},{d})")),
            VolumeDescriptor::Literal(text) => f.write_str(text),
        }
    }
}

/// Coxeter diagram as a sorted edge list; missing pairs have weight 2.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Diagram {
    edges: Vec<(usize, usize, Weight)>,
}

impl Diagram {
    pub fn new(edges: impl IntoIterator<Item = (usize, usize, Weight)>) -> Self {
        let mut edges: Vec<_> = edges.into_iter().map(|(i, j, w)| (i.min(j), i.max(j), w)).collect();
        edges.sort();
        Diagram { edges }
    }

    pub fn edges(&self) -> &[(usize, usize, Weight)] {
        &self.edges
    }

    pub fn weight(&self, i: usize, j: usize) -> Weight {
        let key = (i.min(j), i.max(j));
        self.edges.iter().find(|(a, b, _)| (*a, *b) == key).map_or(Weight::Finite(2), |e| e.2)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|(i, j, w)| format!("{i}-{j}:{w}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Numeric realization of a simplex.
#[derive(Clone, Debug, PartialEq)]
pub struct Geometry {
    pub vertices: Vec<ProjectivePoint>,
    pub forms: Vec<HyperplaneForm>,
}

#[derive(Clone, Debug)]
pub struct CoxeterSimplex {
    pub witt: String,
    pub coxeter_symbol: String,
    pub dim: usize,
    pub vertices: Vec<Vec<AlgExpr>>,
    pub ideal: Vec<bool>,
    pub forms: Vec<Vec<AlgExpr>>,
    pub diagram: Diagram,
    pub volume: Option<VolumeDescriptor>,
    geometry: OnceLock<Result<Geometry>>,
}

impl PartialEq for CoxeterSimplex {
    fn eq(&self, other: &Self) -> bool {
        self.witt == other.witt
            && self.coxeter_symbol == other.coxeter_symbol
            && self.dim == other.dim
            && self.vertices == other.vertices
            && self.ideal == other.ideal
            && self.forms == other.forms
            && self.diagram == other.diagram
            && self.volume == other.volume
    }
}

impl CoxeterSimplex {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        witt: impl Into<String>,
        coxeter_symbol: impl Into<String>,
        dim: usize,
        vertices: Vec<Vec<AlgExpr>>,
        ideal: Vec<bool>,
        forms: Vec<Vec<AlgExpr>>,
        diagram: Diagram,
        volume: Option<VolumeDescriptor>,
    ) -> Self {
        CoxeterSimplex {
            witt: witt.into(),
            coxeter_symbol: coxeter_symbol.into(),
            dim,
            vertices,
            ideal,
            forms,
            diagram,
            volume,
            geometry: OnceLock::new(),
        }
    }

    /// Number of vertices flagged ideal.
    pub fn ideal_count(&self) -> usize {
        self.ideal.iter().filter(|&&b| b).count()
    }

    pub fn ideal_vertices(&self) -> Vec<usize> {
        (0..self.ideal.len()).filter(|&i| self.ideal[i]).collect()
    }

    pub fn is_ideal(&self, i: usize) -> bool {
        self.ideal.get(i).copied().unwrap_or(false)
    }

    /// Evaluated coordinates; computed once and then shared.
    pub fn geometry(&self) -> Result<&Geometry> {
        self.geometry.get_or_init(|| self.realize()).as_ref().map_err(Clone::clone)
    }

    fn realize(&self) -> Result<Geometry> {
        let eval_row = |row: &Vec<AlgExpr>| -> Result<Vec<f64>> {
            row.iter().map(|e| Ok(e.eval(GEOMETRY_DIGITS)?.to_f64())).collect()
        };
        let vertices = self.vertices.iter().map(|r| ProjectivePoint::new(eval_row(r)?)).collect::<Result<Vec<_>>>()?;
        let forms = self.forms.iter().map(|r| HyperplaneForm::new(eval_row(r)?)).collect::<Result<Vec<_>>>()?;
        Ok(Geometry { vertices, forms })
    }

    pub fn vertex(&self, i: usize) -> Result<&ProjectivePoint> {
        self.geometry()?.vertices.get(i).ok_or_else(|| Error::Domain(format!("{} has no vertex {i}", self.witt)))
    }

    pub fn form(&self, i: usize) -> Result<&HyperplaneForm> {
        self.geometry()?.forms.get(i).ok_or_else(|| Error::Domain(format!("{} has no form {i}", self.witt)))
    }

    /// The simplex with form `i` replaced by its negative.
    pub fn with_flipped_form(&self, i: usize) -> Self {
        let mut out = self.clone();
        out.forms[i] = out.forms[i].iter().map(|e| AlgExpr::Neg(Box::new(e.clone()))).collect();
        out.geometry = OnceLock::new();
        out
    }

    pub fn exact_volume(&self, digits: u32) -> Result<Real> {
        exact_volume(self, digits)
    }
}

/// Evaluates the simplex's volume descriptor.
pub fn exact_volume(s: &CoxeterSimplex, digits: u32) -> Result<Real> {
    let v = s.volume.as_ref().ok_or_else(|| Error::Domain(format!("{} has no volume descriptor", s.witt)))?;
    let value = v.eval(digits)?;
    if value.is_negative() || value.is_zero() {
        return Err(Error::Domain(format!("{} volume evaluates to a non-positive number", s.witt)));
    }
    Ok(value)
}
