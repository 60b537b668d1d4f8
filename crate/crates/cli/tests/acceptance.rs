//! Acceptance criteria 1-11. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::f64::consts::PI;
use std::process::{Command, ExitCode};

use rand::Rng;
use sgdl_core::balance::{
    closed_form_det, det_exact, det_float, forest_det, is_balanced_switching, DetValue,
};
use sgdl_core::distance::{associated_complete, distance_table, DistanceKind};
use sgdl_core::generate::{
    generate, random_connected, random_connected_weighted, seeded_rng, GraphKind, SignSpec,
};
use sgdl_core::io::{parse_edge_list, serialize_signed};
use sgdl_core::laplacian::{distance_laplacian_from_table, incidence_matrix, weighted_laplacian};
use sgdl_core::spectra::{
    formula_vs_eigensolver_report, spectral_deviation, sym_eig, transmission_regular_shift_check,
    unsigned_distance_laplacian,
};
use sgdl_core::verify::{run_all, VerifyOptions};
use sgdl_core::{Orientation, SignedGraph, SwitchingFunction, WeightedSignedGraph};

type Outcome = Result<String, String>;

/// Least eigenvalue of L^max and L^min seen by any criterion.
struct Psd {
    min: f64,
    checked: usize,
}

impl Psd {
    fn observe(&mut self, g: &SignedGraph) {
        let t = distance_table(g).unwrap();
        for kind in [DistanceKind::Max, DistanceKind::Min] {
            let s = sym_eig(&distance_laplacian_from_table(&t, kind).unwrap()).unwrap();
            self.min = self.min.min(s.min().unwrap());
            self.checked += 1;
        }
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Criterion 2 and 6 share this graph family.
fn balance_suite() -> Vec<SignedGraph> {
    let mut rng = seeded_rng(2);
    (0..500)
        .map(|i| {
            let n = 1 + i % 8;
            let density = rng.gen_range(0.2..0.9);
            if i % 2 == 0 {
                let base = random_connected(&mut rng, n, density, 0.0);
                base.switch(&SwitchingFunction::random(n, &mut rng))
                    .unwrap()
            } else {
                random_connected(&mut rng, n, density, 0.5)
            }
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let mut rng = seeded_rng(1);
    let mut largest = 0usize;
    for i in 0..200 {
        let n = 1 + i % 6;
        let density = rng.gen_range(0.2..0.9);
        let g = random_connected_weighted(&mut rng, n, density, 0.5, 5);
        let det = det_exact(&weighted_laplacian(&g)).map_err(|e| e.to_string())?;
        let sum = forest_det(&g).map_err(|e| e.to_string())?;
        ensure(sum == DetValue::Exact(det.clone()), || {
            format!("instance {i}: det {det} vs forest sum {sum}")
        })?;
        largest = largest.max(g.edge_count());
    }
    Ok(format!(
        "200 graphs, n <= 6, weights 1..5, up to {largest} edges, det == forest sum exactly"
    ))
}

fn criterion_2(graphs: &[SignedGraph], psd: &mut Psd) -> Outcome {
    let mut balanced = 0;
    for (i, g) in graphs.iter().enumerate() {
        let sw = is_balanced_switching(g).unwrap().balanced;
        let t = distance_table(g).unwrap();
        let dmax =
            det_exact(&distance_laplacian_from_table(&t, DistanceKind::Max).unwrap()).unwrap();
        let dmin =
            det_exact(&distance_laplacian_from_table(&t, DistanceKind::Min).unwrap()).unwrap();
        let pm = t.is_compatible()
            && det_exact(&distance_laplacian_from_table(&t, DistanceKind::Pm).unwrap())
                .unwrap()
                .to_string()
                == "0";
        let verdicts = [sw, dmax.to_string() == "0", dmin.to_string() == "0", pm];
        ensure(verdicts.iter().all(|&v| v == sw), || {
            format!("instance {i}: verdicts {verdicts:?}")
        })?;
        balanced += sw as usize;
        psd.observe(g);
    }
    Ok(format!(
        "500 graphs, n <= 8, {balanced} balanced, 0 disagreements"
    ))
}

fn criterion_3() -> Outcome {
    let g = generate(GraphKind::Cycle, 3, &SignSpec::AllNegative, 0).unwrap();
    let l = distance_laplacian_from_table(&distance_table(&g).unwrap(), DistanceKind::Pm).unwrap();
    let det = det_exact(&l).unwrap();
    ensure(det.to_string() == "4", || format!("det {det}"))?;
    let s = sym_eig(&l).unwrap();
    let dev = s
        .eigenvalues
        .iter()
        .zip([1.0, 1.0, 4.0])
        .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
    ensure(dev <= 1e-9, || format!("eigenvalues {:?}", s.eigenvalues))?;
    Ok(format!("det = 4, eigenvalues (1,1,4), deviation {dev:.1e}"))
}

fn criterion_4() -> Outcome {
    let g = SignedGraph::from_triples(4, &[(0, 1, -1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]).unwrap();
    let t = distance_table(&g).unwrap();
    let mut parts = Vec::new();
    for (kind, name) in [(DistanceKind::Max, "max"), (DistanceKind::Min, "min")] {
        let det = det_exact(&distance_laplacian_from_table(&t, kind).unwrap()).unwrap();
        let k = associated_complete(&g, &t, kind).unwrap();
        let sum = forest_det(&k).unwrap();
        ensure(
            det.to_string() == "84" && sum == DetValue::Exact(det.clone()),
            || format!("{name}: det {det}, forest sum {sum}"),
        )?;
        parts.push(format!("det L^{name} = {det} = forest sum"));
    }
    Ok(parts.join(", "))
}

fn criterion_5() -> Outcome {
    let base = SignedGraph::from_triples(3, &[(0, 1, -1), (1, 2, 1), (0, 2, 1)]).unwrap();
    let g = WeightedSignedGraph::new(base, vec![2.0, 3.0, 5.0]).unwrap();
    let l = weighted_laplacian(&g);
    let cf = closed_form_det(&g).ok_or("no closed form")?.value;
    let exact = det_exact(&l).unwrap();
    let float = det_float(&l).value;
    let forest = forest_det(&g).unwrap();
    let ok = cf.to_string() == "120"
        && exact.to_string() == "120"
        && (float - 120.0).abs() <= 1e-6
        && forest.to_string() == "120";
    ensure(ok, || {
        format!("closed form {cf}, exact {exact}, float {float}, forest {forest}")
    })?;
    Ok(format!(
        "closed form 120, Bareiss 120, LU {float}, forest sum 120"
    ))
}

fn criterion_6(graphs: &[SignedGraph]) -> Outcome {
    let mut rng = seeded_rng(6);
    let mut checks = 0;
    for (i, g) in graphs.iter().enumerate() {
        let w = (0..g.edge_count())
            .map(|_| rng.gen_range(1..=5) as f64)
            .collect();
        let wg = WeightedSignedGraph::new(g.clone(), w).unwrap();
        let l = weighted_laplacian(&wg);
        for _ in 0..3 {
            let o = Orientation::random(g, &mut rng);
            let hht = incidence_matrix(&wg, &o).unwrap().gram().unwrap();
            ensure(hht == l, || format!("instance {i}: HH^T != L"))?;
            checks += 1;
        }
    }
    Ok(format!(
        "{} graphs x 3 orientations = {checks} exact factorizations",
        graphs.len()
    ))
}

fn criterion_7(psd: &mut Psd) -> Outcome {
    let mut rng = seeded_rng(7);
    let mut worst = 0.0f64;
    for i in 0..100 {
        let n = 1 + i % 8;
        let density = rng.gen_range(0.2..0.9);
        let base = random_connected(&mut rng, n, density, 0.0);
        let g = base
            .switch(&SwitchingFunction::random(n, &mut rng))
            .unwrap();
        let t = distance_table(&g).unwrap();
        ensure(t.is_compatible(), || {
            format!("instance {i}: balanced but incompatible")
        })?;
        let lpm = distance_laplacian_from_table(&t, DistanceKind::Pm).unwrap();
        let dev = spectral_deviation(&lpm, &unsigned_distance_laplacian(&base).unwrap()).unwrap();
        ensure(dev <= 1e-8, || format!("instance {i}: deviation {dev:e}"))?;
        worst = worst.max(dev);
        psd.observe(&g);
    }
    Ok(format!(
        "100 balanced graphs, n <= 8, max deviation {worst:.1e}"
    ))
}

fn criterion_8(psd: &mut Psd) -> Outcome {
    let mut worst = 0.0f64;
    for n in 3..=12usize {
        let k = (n / 2) as u64;
        let expected = if n % 2 == 1 { k * (k + 1) } else { k * k };
        for spec in [SignSpec::AllPositive, SignSpec::AllNegative] {
            let g = generate(GraphKind::Cycle, n, &spec, 0).unwrap();
            for kind in [DistanceKind::Max, DistanceKind::Min] {
                let r = transmission_regular_shift_check(&g, kind).unwrap();
                ensure(r.t == Some(expected), || {
                    format!("C{n}: t = {:?}, expected {expected}", r.t)
                })?;
                ensure(r.max_deviation <= 1e-8, || {
                    format!("C{n} {spec:?}: deviation {:e}", r.max_deviation)
                })?;
                worst = worst.max(r.max_deviation);
            }
            psd.observe(&g);
        }
    }
    Ok(format!(
        "C3..C12, both signatures, t as expected, max deviation {worst:.1e}"
    ))
}

fn criterion_9(psd: &mut Psd) -> Outcome {
    let mut opts = VerifyOptions::new(6, 9);
    opts.instances = Some(40);
    for r in run_all(&opts).map_err(|e| e.to_string())? {
        if let Some(m) = r.min_eigenvalue {
            psd.min = psd.min.min(m);
        }
        ensure(r.passed, || format!("{r}"))?;
    }
    ensure(psd.min >= -1e-9, || {
        format!("least eigenvalue {:e}", psd.min)
    })?;
    Ok(format!(
        "{} spectra here plus every verify suite, least eigenvalue {:.1e}",
        psd.checked, psd.min
    ))
}

fn criterion_10() -> Outcome {
    let ks: Vec<u32> = (1..=7).collect();
    let report = formula_vs_eigensolver_report(&ks).map_err(|e| e.to_string())?;
    ensure(report.rows.len() == 7, || "missing rows".into())?;
    let mut worst = 0.0f64;
    for row in &report.rows {
        let n = row.n;
        ensure(row.numeric.len() == n && row.formula.len() == n, || {
            format!("k = {}: short row", row.k)
        })?;
        ensure(row.max_deviation.is_finite(), || {
            format!("k = {}: deviation not finite", row.k)
        })?;
        // circulant check of the numeric side: first row entries (-1)^d d
        let k = row.k as f64;
        let mut circ: Vec<f64> = (0..n)
            .map(|m| {
                k * (k + 1.0)
                    - (1..n)
                        .map(|j| {
                            let d = j.min(n - j);
                            let c = if d % 2 == 0 { d as f64 } else { -(d as f64) };
                            c * (2.0 * PI * (j * m) as f64 / n as f64).cos()
                        })
                        .sum::<f64>()
            })
            .collect();
        circ.sort_by(f64::total_cmp);
        for (a, b) in circ.iter().zip(&row.numeric) {
            worst = worst.max((a - b).abs());
        }
    }
    ensure(worst <= 1e-8, || {
        format!("numeric side off circulant values by {worst:e}")
    })?;
    print!("{}", report.to_markdown());
    let agree = report
        .rows
        .iter()
        .filter(|r| r.max_deviation <= 1e-8)
        .count();
    Ok(format!(
        "table for k = 1..7 generated, numeric side within {worst:.1e} of circulant values, \
         closed form agrees on {agree} of 7 rows (reported, not required)"
    ))
}

fn sgdl(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_sgdl"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn criterion_11() -> Outcome {
    let specs = [
        "cycle:3:allneg",
        "cycle:7:neg=1-2,4-5",
        "path:5:+-+-",
        "complete:5:allpos",
        "random:6:p=0.5:seed=7",
        "random:12:p=0.3:d=0.4:seed=11",
    ];
    for spec in specs {
        let (c1, a) = sgdl(&["gen", spec])?;
        let (c2, b) = sgdl(&["gen", spec])?;
        ensure(c1 == 0 && c2 == 0 && a == b, || {
            format!("gen {spec} not deterministic")
        })?;
        let text = String::from_utf8(a).unwrap();
        let g = parse_edge_list(&text).map_err(|e| e.to_string())?;
        ensure(serialize_signed(g.graph()) == text, || {
            format!("{spec}: round trip changed bytes")
        })?;
    }
    let args = [
        "verify",
        "all",
        "--n",
        "5",
        "--seed",
        "3",
        "--instances",
        "25",
    ];
    let (c1, a) = sgdl(&args)?;
    let (c2, b) = sgdl(&args)?;
    ensure(c1 == 0 && c2 == 0, || format!("verify exited {c1}/{c2}"))?;
    ensure(a == b, || "verify output differs between runs".into())?;
    Ok(format!(
        "{} generator specs byte-stable, verify all deterministic under a fixed seed",
        specs.len()
    ))
}

fn main() -> ExitCode {
    let graphs = balance_suite();
    let mut psd = Psd {
        min: f64::INFINITY,
        checked: 0,
    };
    let results: Vec<(u32, Outcome)> = vec![
        (1, criterion_1()),
        (2, criterion_2(&graphs, &mut psd)),
        (3, criterion_3()),
        (4, criterion_4()),
        (5, criterion_5()),
        (6, criterion_6(&graphs)),
        (7, criterion_7(&mut psd)),
        (8, criterion_8(&mut psd)),
        (9, criterion_9(&mut psd)),
        (10, criterion_10()),
        (11, criterion_11()),
    ];
    let mut failed = 0;
    for (n, r) in &results {
        match r {
            Ok(msg) => println!("PASS criterion {n}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {n}: {msg}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
