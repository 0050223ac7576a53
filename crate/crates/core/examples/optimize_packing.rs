// Optimal multi-horoball configurations and their rational density shares.

use horopack::catalog::builtin;
use horopack::packing::{optimize, OptimizeOptions};

pub fn run() -> horopack::Result<()> {
    for name in ["X5", "N5", "O5", "UR5"] {
        let opt = optimize(&builtin(name)?, &OptimizeOptions::default())?;
        println!("{name}: δ_opt = {:.8}", opt.density);
        for r in &opt.reports {
            let params: Vec<String> = r.balls.iter().map(|b| format!("s{}={:.6}", b.vertex, b.s)).collect();
            let shares: Vec<String> = r.fractions().iter().map(|f| f.map_or("?".into(), |q| q.to_string())).collect();
            println!(
                "  pivot A{}: δ = {:.8}  [{}]  shares ({})",
                r.pivot.unwrap_or(0),
                r.density,
                params.join(" "),
                shares.join(", ")
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> horopack::Result<()> {
    run()
}
