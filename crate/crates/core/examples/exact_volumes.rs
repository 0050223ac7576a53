// Exact constants and simplex volumes at high precision.

use horopack::algexpr::AlgExpr;
use horopack::catalog::{builtin, dirichlet_l_series, zeta_series};

pub fn run() -> horopack::Result<()> {
    let s0 = AlgExpr::parse("(73-36*sqrt(2))/161")?;
    println!("{s0} = {}", s0.eval(40)?.to_decimal(35));

    let z = zeta_series(3, 50, 60)?;
    println!("zeta(3)  = {}  (± {:.1e})", z.value.to_decimal(50), z.tail_bound.to_f64());
    let l = dirichlet_l_series(3, 5, 50, 60)?;
    println!("L(3,5)   = {}  (± {:.1e})", l.value.to_decimal(50), l.tail_bound.to_f64());

    for name in ["U5", "P5", "UR5"] {
        let s = builtin(name)?;
        let descr = s.volume.as_ref().map(ToString::to_string).unwrap_or_default();
        println!("vol({name}) = {descr} = {}", s.exact_volume(50)?.to_decimal(40));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> horopack::Result<()> {
    run()
}
