use serde::Serialize;

use crate::catalog::CoxeterSimplex;
use crate::lorentz::{gram, PointKind};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Largest residual seen by the check (0 when not applicable).
    pub residual: f64,
    pub details: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub witt: String,
    pub tol: f64,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn failed(name: &'static str, detail: String) -> Check {
    Check { name, passed: false, residual: f64::NAN, details: vec![detail] }
}

/// Runs the structural checks: vertex classes against the ideal flags,
/// vertex/form incidence, Gram matrix against the diagram, Gram signature and
/// sign of the off-diagonal entries. Never fails; problems become report
/// entries.
pub fn verify(s: &CoxeterSimplex, tol: f64) -> VerificationReport {
    let mut checks = Vec::new();
    let geo = match s.geometry() {
        Ok(g) => g,
        Err(e) => {
            checks.push(failed("evaluate", format!("coordinates do not evaluate: {e}")));
            return VerificationReport { witt: s.witt.clone(), tol, checks };
        }
    };
    let n = s.dim;
    let (verts, forms) = (&geo.vertices, &geo.forms);

    // (a) classification
    let mut c = Check { name: "classification", passed: true, residual: 0.0, details: vec![] };
    for (i, v) in verts.iter().enumerate() {
        let kind = v.classify(tol);
        let want = if s.ideal[i] { PointKind::Ideal } else { PointKind::Proper };
        if s.ideal[i] {
            c.residual = c.residual.max(v.self_product().abs() / v.euclid_norm_sq());
        }
        if kind != want {
            c.passed = false;
            c.details.push(format!("vertex A{i} is {kind}, flagged {want}"));
        }
    }
    checks.push(c);

    // (b) incidence
    let mut c = Check { name: "incidence", passed: true, residual: 0.0, details: vec![] };
    for (i, v) in verts.iter().enumerate() {
        for (j, u) in forms.iter().enumerate() {
            if i == j {
                continue;
            }
            match u.incidence_residual(v) {
                Ok(r) => {
                    c.residual = c.residual.max(r);
                    if r.is_nan() || r >= tol {
                        c.passed = false;
                        c.details.push(format!("A{i}·u{j} residual {r:e}"));
                    }
                }
                Err(e) => {
                    c.passed = false;
                    c.details.push(format!("A{i}·u{j}: {e}"));
                }
            }
        }
    }
    checks.push(c);

    let g = match gram(forms) {
        Ok(g) => g,
        Err(e) => {
            checks.push(failed("gram", e.to_string()));
            return VerificationReport { witt: s.witt.clone(), tol, checks };
        }
    };

    // (c) Gram against diagram
    let mut c = Check { name: "gram", passed: true, residual: 0.0, details: vec![] };
    for i in 0..=n {
        for j in i + 1..=n {
            let want = s.diagram.weight(i, j).gram_entry();
            let r = (g.get(i, j) - want).abs();
            c.residual = c.residual.max(r);
            if r >= tol {
                c.passed = false;
                c.details.push(format!(
                    "entry ({i},{j}) = {:.12}, diagram weight {} wants {want:.12}",
                    g.get(i, j),
                    s.diagram.weight(i, j)
                ));
            }
        }
    }
    checks.push(c);

    // (d) signature
    let sig = g.signature(tol);
    let ok = g.is_hyperbolic(tol);
    checks.push(Check {
        name: "signature",
        passed: ok,
        residual: g.eigenvalues().iter().fold(f64::INFINITY, |m, v| m.min(v.abs())),
        details: if ok {
            vec![]
        } else {
            vec![format!(
                "eigenvalue signs: {} negative, {} zero, {} positive; want 1 negative, {n} positive",
                sig.negative, sig.zero, sig.positive
            )]
        },
    });

    // (e) acute angles
    let mut c = Check { name: "off-diagonal", passed: true, residual: 0.0, details: vec![] };
    for i in 0..=n {
        for j in i + 1..=n {
            let v = g.get(i, j);
            if v > tol {
                c.passed = false;
                c.residual = c.residual.max(v);
                c.details.push(format!("positive entry ({i},{j}) = {v:.12}"));
            }
        }
    }
    checks.push(c);

    VerificationReport { witt: s.witt.clone(), tol, checks }
}
