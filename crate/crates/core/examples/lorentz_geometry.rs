// Points, distances and hyperplane feet in the projective model.

use horopack::lorentz::{distance, foot, PointKind, ProjectivePoint, DEFAULT_TOL};

pub fn run() -> horopack::Result<()> {
    let o = ProjectivePoint::origin(5);
    let p = ProjectivePoint::new(vec![1.0, 0.5, 0.0, 0.0, 0.0, 0.0])?;
    let cusp = ProjectivePoint::new(vec![1.0, 0.0, 0.0, 0.0, 0.0, 1.0])?;
    assert_eq!(cusp.classify(DEFAULT_TOL), PointKind::Ideal);

    let d = distance(&o, &p, DEFAULT_TOL)?;
    println!("d(o, p) = {d:.12}  (artanh 1/2 = {:.12})", 0.5f64.atanh());

    // Same point, different representative.
    let q = p.scaled(-3.0)?;
    println!("rescaled distance   = {:.12}", distance(&o, &q, DEFAULT_TOL)?);

    let plane = horopack::lorentz::HyperplaneForm::new(vec![0.0, 1.0, 0.0, 0.0, 0.0, 0.0])?;
    let f = foot(&p, &plane)?;
    println!("foot of p on x1 = 0: {:?}", f.affine().expect("proper").coords());
    Ok(())
}

#[allow(dead_code)]
fn main() -> horopack::Result<()> {
    run()
}
