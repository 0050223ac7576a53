// Read a simplex from catalog text and evaluate a hand-made configuration.

use horopack::catalog::{builtin, load_str, serialize, verify};
use horopack::lorentz::DEFAULT_TOL;
use horopack::packing::{admissible, density, HoroballConfig};

pub fn run() -> horopack::Result<()> {
    let text = serialize(&builtin("X5")?);
    println!("{}", text.lines().take(4).collect::<Vec<_>>().join("\n"));
    let s = load_str(&text)?;
    assert!(verify(&s, 1e-9).passed());

    let ok = HoroballConfig::from_s(&s, &[(0, 0.2), (5, 0.7)], DEFAULT_TOL)?;
    let report = density(&s, &ok, DEFAULT_TOL)?;
    println!("s0 = 0.2, s5 = 0.7: density {:.8}", report.density);

    let overlapping = HoroballConfig::from_s(&s, &[(0, 0.0), (5, 0.3)], DEFAULT_TOL)?;
    for v in admissible(&s, &overlapping, DEFAULT_TOL).violations {
        println!("rejected: {v}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> horopack::Result<()> {
    run()
}
