// The maximal horoball at the ideal vertex of a simply asymptotic simplex:
// where it cuts the edges and how much of the simplex it fills.

use horopack::catalog::builtin;
use horopack::horoball::{edge_intersection, facet_tangent_horoball, horospheric_simplex, piece_volume};
use horopack::lorentz::DEFAULT_TOL;
use horopack::packing::simplex_volume;

pub fn run() -> horopack::Result<()> {
    for name in ["U5", "S5", "Q5", "P5"] {
        let s = builtin(name)?;
        let ball = facet_tangent_horoball(&s, 0, DEFAULT_TOL)?;
        println!("{name}: s0 = {:.3}", ball.s());
        for j in 1..=5 {
            let h = edge_intersection(&ball, s.vertex(j)?, DEFAULT_TOL)?;
            let c: Vec<String> = h.affine().expect("proper").coords()[1..].iter().map(|x| format!("{x:8.5}")).collect();
            println!("  H{j} = ({})", c.join(", "));
        }
        let area = horospheric_simplex(&s, 0, &ball, DEFAULT_TOL)?.area;
        let piece = piece_volume(&s, 0, &ball, DEFAULT_TOL)?;
        println!("  area {area:.10}  piece {piece:.10}  density {:.8}", piece / simplex_volume(&s)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> horopack::Result<()> {
    run()
}
