//! Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any
//! fails. Runs without the libtest harness so the lines always show.

use std::process::ExitCode;

use nalgebra::{DMatrix, SymmetricEigen};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use horopack::catalog::{builtin, builtins, dirichlet_l_series, verify, zeta_series, CoxeterSimplex};
use horopack::horoball::{
    edge_intersection, facet_tangent_horoball, horospheric_simplex, mutual_tangent_horoball, piece_volume, Horoball,
};
use horopack::lorentz::{distance, foot, gram, HyperplaneForm, ProjectivePoint, DEFAULT_TOL as TOL};
use horopack::packing::{
    admissible, optimize, simplex_volume, sweep, transition_volume, Fraction, HoroballConfig, InflationOrder,
    OptimizeOptions, Optimum, PackingReport,
};

type Outcome = Result<String, String>;
type Classes = &'static [&'static [(i64, i64)]];

fn check(ok: bool, what: impl Into<String>) -> Outcome {
    if ok {
        Ok(what.into())
    } else {
        Err(what.into())
    }
}

fn all(parts: Vec<Outcome>) -> Outcome {
    let mut good = Vec::new();
    for p in parts {
        good.push(p?);
    }
    Ok(good.join("; "))
}

fn sx(name: &str) -> CoxeterSimplex {
    builtin(name).unwrap()
}

fn best(name: &str) -> Optimum {
    optimize(&sx(name), &OptimizeOptions::default()).unwrap()
}

fn max_ball(s: &CoxeterSimplex, i: usize) -> Horoball {
    facet_tangent_horoball(s, i, TOL).unwrap()
}

fn near(got: f64, want: f64, tol: f64, label: &str) -> Outcome {
    check((got - want).abs() <= tol, format!("{label} = {got:.12} (want {want:.12} ± {tol:e})"))
}

fn c1_densities() -> Outcome {
    let mut parts = Vec::new();
    for s in builtins() {
        let want = match s.witt.as_str() {
            "P5" => 0.56151,
            "AU5" => 0.50108,
            _ => 0.59421,
        };
        let got = optimize(&s, &OptimizeOptions::default()).unwrap().density;
        parts.push(near(got, want, 1e-4, &format!("δ({})", s.witt)));
    }
    all(parts)
}

fn c2_pieces() -> Outcome {
    let parts = [("U5", 0.00010), ("S5", 0.00032), ("Q5", 0.00065), ("P5", 0.00116)]
        .iter()
        .map(|&(name, want)| {
            let s = sx(name);
            let v = piece_volume(&s, 0, &max_ball(&s, 0), TOL).unwrap();
            near(v, want, 1e-5, &format!("piece({name})"))
        })
        .collect();
    all(parts)
}

/// Classical multidimensional scaling: embed from distances, then take the
/// parallelotope determinant.
fn mds_volume(l: &[Vec<f64>]) -> f64 {
    let m = l.len();
    let d2 = DMatrix::from_fn(m, m, |i, j| l[i][j] * l[i][j]);
    let j = DMatrix::identity(m, m) - DMatrix::from_element(m, m, 1.0 / m as f64);
    let b = -0.5 * &j * d2 * &j;
    let eig = SymmetricEigen::new(b);
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &c| eig.eigenvalues[c].total_cmp(&eig.eigenvalues[a]));
    let k = m - 1;
    let x = DMatrix::from_fn(m, k, |p, q| {
        let idx = order[q];
        eig.eigenvectors[(p, idx)] * eig.eigenvalues[idx].max(0.0).sqrt()
    });
    let edges = DMatrix::from_fn(k, k, |p, q| x[(p + 1, q)] - x[(0, q)]);
    let fact: f64 = (1..=k).map(|i| i as f64).product();
    edges.determinant().abs() / fact
}

fn c3_area() -> Outcome {
    let u5 = sx("U5");
    let h = horospheric_simplex(&u5, 0, &max_ball(&u5, 0), TOL).unwrap();
    let oracle = mds_volume(&h.lengths);
    let rel = (h.area - oracle).abs() / oracle;
    all(vec![
        near(h.area, 0.00043, 1e-5, "A(U5)"),
        check(rel <= 1e-8, format!("MDS oracle {oracle:.12e}, relative gap {rel:.1e}")),
    ])
}

fn c4_parameters() -> Outcome {
    let from = |s: &CoxeterSimplex, i: usize, si: f64, j: usize| {
        let b = Horoball::from_s(s.vertex(i).unwrap(), si, TOL).unwrap();
        mutual_tangent_horoball(s, (i, &b), j, TOL).unwrap().s()
    };
    let max_s = |s: &CoxeterSimplex, i: usize| max_ball(s, i).s();
    let x5 = sx("X5");
    let n5 = sx("N5");
    let au5 = sx("AU5");
    let o5 = sx("O5");
    let ur5 = sx("UR5");
    let e = 1e-9;
    all(vec![
        near(from(&x5, 0, 0.0, 5), 3.0 / 5.0, e, "X5 s0=0 ⟹ s5"),
        near(from(&x5, 5, 1.0 / 3.0, 0), 1.0 / 3.0, e, "X5 s5=1/3 ⟹ s0"),
        near(max_s(&n5, 0), 0.0, e, "N5 max s0"),
        near(from(&n5, 0, 0.0, 2), 3.0 / 5.0, e, "N5 s0=0 ⟹ s2"),
        near(from(&n5, 0, 0.0, 5), 3.0 / 5.0, e, "N5 s0=0 ⟹ s5"),
        near(from(&n5, 5, 1.0 / 3.0, 0), 1.0 / 3.0, e, "N5 s5=1/3 ⟹ s0"),
        near(from(&n5, 5, 1.0 / 3.0, 2), 7.0 / 9.0, e, "N5 s5=1/3 ⟹ s2"),
        near(max_s(&au5, 0), (73.0 - 36.0 * 2f64.sqrt()) / 161.0, e, "AU5 max s0"),
        near(max_s(&o5, 0), 1.0 / 5.0, e, "O5 max s0"),
        near(max_ball(&o5, 1).axis_point().coords()[5], 5.0 / 7.0, e, "O5 max s1 (axis x⁵)"),
        near(max_s(&o5, 5), 13.0 / 19.0, e, "O5 max s5"),
        near(max_s(&ur5, 0), 1.0 / 17.0, e, "UR5 max s0"),
        near(max_s(&ur5, 2), 133.0 / 205.0, e, "UR5 max s2"),
    ])
}

fn c5_intersections() -> Outcome {
    let r2 = 2f64.sqrt();
    let r3 = 3f64.sqrt();
    let r6 = 6f64.sqrt();
    let r23 = (2.0f64 / 3.0).sqrt();
    let r52 = (5.0f64 / 2.0).sqrt();
    let r32 = (3.0f64 / 2.0).sqrt();
    let table: [(&str, [[f64; 5]; 5]); 4] = [
        (
            "U5",
            [
                [0.0, 0.0, 0.0, 0.0, 0.0],
                [4.0 / 9.0, 0.0, 0.0, 0.0, 1.0 / 9.0],
                [3.0 / 7.0, r3 / 7.0, 0.0, 0.0, 1.0 / 7.0],
                [8.0 / 19.0, 8.0 / (19.0 * r3), 4.0 / 19.0 * r23, 0.0, 3.0 / 19.0],
                [2.0 / 5.0, 2.0 / (5.0 * r3), r23 / 5.0, r2 / 5.0, 1.0 / 5.0],
            ],
        ),
        (
            "S5",
            [
                [0.0, 0.0, 0.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, 2.0 * r2 / 5.0, 1.0 / 5.0],
                [0.0, 0.0, 2.0 * r6 / 19.0, 6.0 * r2 / 19.0, 3.0 / 19.0],
                [0.0, 4.0 / (9.0 * r3), 2.0 / 9.0 * r23, 2.0 * r2 / 9.0, 1.0 / 9.0],
                [2.0 / 5.0, 2.0 / (5.0 * r3), r23 / 5.0, r2 / 5.0, 1.0 / 5.0],
            ],
        ),
        (
            "Q5",
            [
                [0.0, 0.0, 0.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, -4.0 / 9.0, 1.0 / 9.0],
                [0.0, 0.0, 2.0 / 5.0, -2.0 / 5.0, 1.0 / 5.0],
                [0.0, -2.0 / 5.0, 0.0, -2.0 / 5.0, 1.0 / 5.0],
                [-2.0 / 5.0, 0.0, 0.0, -2.0 / 5.0, 1.0 / 5.0],
            ],
        ),
        (
            "P5",
            [
                [0.0, 0.0, 0.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, r52 / 3.0, 1.0 / 6.0],
                [0.0, 0.0, 5.0 / 13.0 * r32, 3.0 / 13.0 * r52, 3.0 / 13.0],
                [0.0, 10.0 / (13.0 * r3), 5.0 / 13.0 * r23, 10f64.sqrt() / 13.0, 3.0 / 13.0],
                [5.0 / 12.0, 5.0 / (12.0 * r3), 5.0 / (12.0 * r6), r52 / 12.0, 1.0 / 6.0],
            ],
        ),
    ];
    let mut worst: f64 = 0.0;
    let mut parts = Vec::new();
    for (name, rows) in table {
        let s = sx(name);
        let b = max_ball(&s, 0);
        for (k, want) in rows.iter().enumerate() {
            let h = edge_intersection(&b, s.vertex(k + 1).unwrap(), TOL).unwrap().affine().unwrap();
            let err = h.coords()[1..].iter().zip(want).map(|(g, w)| (g - w).abs()).fold(0.0, f64::max);
            worst = worst.max(err);
            if err > 1e-9 {
                parts.push(Err(format!("{name} H{} off by {err:e}: {:?}", k + 1, h.coords())));
            }
        }
    }
    parts.push(check(worst <= 1e-9, format!("20 points, worst coordinate error {worst:.1e}")));
    all(parts)
}

fn frac_vec(v: &[(i64, i64)]) -> Vec<Fraction> {
    let mut f: Vec<Fraction> = v.iter().map(|&(p, q)| Fraction::new(p, q)).collect();
    f.sort_by(|a, b| b.cmp(a));
    f
}

fn show(v: &[Fraction]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn c6_fractions() -> Outcome {
    let expected: [(&str, Classes); 7] = [
        ("X5", &[&[(4, 5), (1, 5)]]),
        ("R5", &[&[(2, 5), (3, 5)]]),
        ("N5", &[&[(2, 5), (2, 5), (1, 5)], &[(4, 5), (1, 10), (1, 10)]]),
        ("M5", &[&[(4, 5), (1, 10), (1, 20), (1, 20)]]),
        ("L5", &[&[(4, 5), (1, 20), (1, 20), (1, 20), (1, 20)]]),
        ("O5", &[&[(3, 5), (1, 5), (1, 5)], &[(4, 5), (3, 20), (1, 20)]]),
        (
            "UR5",
            &[
                &[(3, 5), (3, 20), (1, 10), (1, 10), (1, 40), (1, 40)],
                &[(2, 5), (2, 5), (3, 20), (3, 80), (1, 160), (1, 160)],
            ],
        ),
    ];
    let mut parts = Vec::new();
    let mut classes = 0;
    for (name, vectors) in expected {
        let opt = best(name);
        let got: Vec<Vec<Fraction>> = opt.reports.iter().filter_map(PackingReport::sorted_fractions).collect();
        for v in vectors {
            let want = frac_vec(v);
            classes += 1;
            parts.push(check(
                got.contains(&want),
                format!(
                    "{name} ({}) among [{}]",
                    show(&want),
                    got.iter().map(|g| show(g)).collect::<Vec<_>>().join(" | ")
                ),
            ));
        }
    }
    parts.push(Ok(format!("{classes} multi-ball classes found")));
    all(parts)
}

fn c7_sweep() -> Outcome {
    let x5 = sx("X5");
    let curve = sweep(&x5, 0, 200, TOL).unwrap();
    let mut worst: f64 = 0.0;
    for p in &curve.samples {
        let law = curve.pivot_volume * (-4.0 * p.x).exp() + curve.coupled_volume * (4.0 * p.x).exp();
        worst = worst.max((p.total_volume - law).abs() / law);
        let via = transition_volume(curve.pivot_volume, curve.coupled_volume, p.x, 5).unwrap();
        worst = worst.max((via - law).abs() / law);
    }
    let delta = best("X5").density;
    all(vec![
        near(curve.pivot_volume, 0.00043, 1e-5, "V0"),
        near(curve.coupled_volume, 0.00010, 1e-5, "V5"),
        check(worst <= 1e-8, format!("transition law, worst relative error {worst:.1e}")),
        near(curve.start().delta, curve.end().delta, 1e-8, "δ(x_max) vs δ(0)"),
        near(curve.minimum.x, 2f64.ln() / 4.0, 1e-6, "argmin"),
        near(curve.minimum.delta, 0.8 * delta, 1e-6, "min δ"),
    ])
}

fn c8_structure() -> Outcome {
    let mut parts = Vec::new();
    for s in builtins() {
        let r = verify(&s, 1e-9);
        let failed: Vec<String> = r.failures().map(|c| c.name.to_string()).collect();
        parts.push(check(
            r.passed(),
            format!("{} verify {}", s.witt, if failed.is_empty() { "ok".into() } else { failed.join(",") }),
        ));
    }
    let edges = [
        ("S5", "U5", 3),
        ("Q5", "S5", 2),
        ("X5", "U5", 5),
        ("R5", "U5", 10),
        ("N5", "X5", 6),
        ("M5", "N5", 2),
        ("L5", "M5", 2),
        ("O5", "R5", 2),
        ("UR5", "O5", 8),
        ("N5", "R5", 3),
        ("M5", "O5", 3),
        ("N5", "S5", 10),
        ("L5", "Q5", 20),
        ("O5", "X5", 4),
    ];
    let mut worst: f64 = 0.0;
    for (a, b, k) in edges {
        let va = sx(a).exact_volume(30).unwrap();
        let vb = sx(b).exact_volume(30).unwrap();
        let ratio = va.checked_div(&vb).unwrap().to_f64();
        let rel = (ratio - k as f64).abs() / k as f64;
        worst = worst.max(rel);
        parts.push(check(rel <= 1e-10, format!("{a}/{b} = {ratio:.12}")));
    }
    parts.push(Ok(format!("14 volume ratios, worst relative error {worst:.1e}")));
    all(parts)
}

fn c9_series() -> Outcome {
    let mut parts = Vec::new();
    for (terms, digits) in [(20, 30), (40, 30), (60, 50)] {
        let a = zeta_series(3, terms, digits).unwrap();
        let b = zeta_series(3, 2 * terms, digits).unwrap();
        let gap = (&a.value - &b.value).abs();
        parts.push(check(gap <= &a.tail_bound + &b.tail_bound, format!("ζ(3) n={terms}: gap {:.1e}", gap.to_f64())));
        let a = dirichlet_l_series(3, 5, terms, digits).unwrap();
        let b = dirichlet_l_series(3, 5, 2 * terms, digits).unwrap();
        let gap = (&a.value - &b.value).abs();
        parts.push(check(gap <= &a.tail_bound + &b.tail_bound, format!("L(3,5) n={terms}: gap {:.1e}", gap.to_f64())));
    }
    let u5 = sx("U5");
    let quick = simplex_volume(&u5).unwrap();
    let precise = u5.exact_volume(60).unwrap().to_f64();
    let rel = (quick - precise).abs() / precise;
    parts.push(check(rel <= 1e-9, format!("vol(U5) = {quick:.10e}, relative gap {rel:.1e}")));
    all(parts)
}

fn random_point() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-0.44f64..0.44, 5).prop_map(|mut v| {
        v.insert(0, 1.0);
        v
    })
}

fn c10_properties() -> Outcome {
    let mut parts = Vec::new();

    let forms: Vec<HyperplaneForm> = sx("N5").geometry().unwrap().forms.clone();
    let base_gram = gram(&forms).unwrap();
    let mut runner = TestRunner::new(Config { cases: 1000, failure_persistence: None, ..Config::default() });
    let scaling = runner.run(
        &(random_point(), random_point(), 0.01f64..100.0, prop::bool::ANY, 0usize..6),
        |(p, q, lambda, flip, k)| {
            let lambda = if flip { -lambda } else { lambda };
            let p = ProjectivePoint::new(p).unwrap();
            let q = ProjectivePoint::new(q).unwrap();
            let ps = p.scaled(lambda).unwrap();
            prop_assert_eq!(p.classify(TOL), ps.classify(TOL));
            let d = distance(&p, &q, TOL).unwrap();
            let ds = distance(&ps, &q, TOL).unwrap();
            prop_assert!((d - ds).abs() <= 1e-9 * (1.0 + d));
            let f = foot(&p, &forms[k]).unwrap();
            let fs = foot(&ps, &forms[k].scaled(lambda).unwrap()).unwrap();
            prop_assert!(f.projectively_eq(&fs, 1e-9));
            let mut scaled = forms.clone();
            scaled[k] = scaled[k].scaled(lambda.abs()).unwrap();
            let g = gram(&scaled).unwrap();
            for i in 0..6 {
                for j in 0..6 {
                    prop_assert!((g.get(i, j) - base_gram.get(i, j)).abs() <= 1e-12);
                }
            }
            Ok(())
        },
    );
    parts.push(check(
        scaling.is_ok(),
        format!("1000 rescalings: {}", scaling.err().map_or("invariant".into(), |e| e.to_string())),
    ));

    for s in builtins() {
        let up = optimize(&s, &OptimizeOptions { order: InflationOrder::Ascending, ..Default::default() }).unwrap();
        let down = optimize(&s, &OptimizeOptions { order: InflationOrder::Descending, ..Default::default() }).unwrap();
        let same = up.best().config.same_levels(&down.best().config, 1e-10)
            && (up.density - down.density).abs() <= 1e-10 * up.density;
        parts.push(check(same, format!("{} order independent", s.witt)));

        let cfg = &up.best().config;
        let mut rejected = 0;
        for (&v, ball) in &cfg.balls {
            let mut inflated: HoroballConfig = cfg.clone();
            inflated.insert(v, ball.grown(1e-3));
            if !admissible(&s, &inflated, TOL).is_admissible() {
                rejected += 1;
            }
        }
        parts.push(check(rejected == cfg.len(), format!("{} rejects {rejected}/{} inflated balls", s.witt, cfg.len())));
    }
    all(parts)
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("optimal densities", c1_densities),
        ("maximal piece volumes", c2_pieces),
        ("horospheric area", c3_area),
        ("exact maximal parameters", c4_parameters),
        ("edge intersection points", c5_intersections),
        ("density fractions", c6_fractions),
        ("transition law", c7_sweep),
        ("structural verification", c8_structure),
        ("special functions", c9_series),
        ("property suites", c10_properties),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", k + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
