//! Acceptance criteria, one `[PASS]`/`[FAIL]` line each. Exits nonzero if any
//! criterion fails.

use std::process::Command;
use std::time::Instant;

use foliage_core::bounds;
use foliage_core::chern::{euler_char, CompleteIntersectionSpec, FoliationDegree};
use foliage_core::identities::{self, CiGrid, WronskiGrid};
use foliage_core::invariants::{
    polar_classes_severi_todd, polar_classes_via_chern, sing_count_wronski,
};
use foliage_core::verifier::{self, invariance_certificate, parse_poly, SolveOptions, AFFINE};
use foliage_core::BigInt;

struct Outcome {
    pass: bool,
    details: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self {
            pass: true,
            details: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.pass &= ok;
        self.details.push(format!(
            "{} {}",
            if ok { "ok  " } else { "FAIL" },
            what.into()
        ));
    }
}

fn spec(n: u32, ds: &[u32]) -> CompleteIntersectionSpec {
    CompleteIntersectionSpec::new(n, ds.to_vec()).unwrap()
}

fn deg(d: i64) -> FoliationDegree {
    FoliationDegree::new(d).unwrap()
}

fn identity_line(o: &mut Outcome, c: &identities::IdentityCheck) {
    let sample = c
        .violations
        .first()
        .map(|v| format!(", e.g. {v}"))
        .unwrap_or_default();
    o.check(
        c.passed(),
        format!(
            "{}: {} checked, {} violations{sample}",
            c.name,
            c.checked,
            c.violations.len()
        ),
    );
}

fn c1_euler() -> Outcome {
    let mut o = Outcome::new();
    for (n, ds, want) in [(3, vec![2, 2], 0), (3, vec![2], 4), (3, vec![3], 9)] {
        let s = spec(n, &ds);
        let chi = euler_char(&s);
        o.check(
            chi == BigInt::from(want),
            format!("chi({s}) = {chi}, expected {want}"),
        );
    }
    o
}

fn c2_three_forms() -> Outcome {
    let mut o = Outcome::new();
    let grid = CiGrid::default();
    identity_line(&mut o, &identities::check_three_forms(&grid));
    let bad = identities::nonpositive_counts(&grid);
    let total = grid.specs().len() * grid.degrees().count();
    let sample: Vec<String> = bad
        .iter()
        .take(3)
        .map(|(s, d, n)| format!("{s} d={d}: N={n}"))
        .collect();
    o.check(
        bad.is_empty(),
        format!(
            "N > 0 on the grid: {} of {total} points have N <= 0 (e.g. {})",
            bad.len(),
            sample.join("; ")
        ),
    );
    o
}

fn c3_example2() -> Outcome {
    let mut o = Outcome::new();
    let ex = verifier::example2();
    let n = sing_count_wronski(&ex.spec, deg(2));
    o.check(n == BigInt::from(4), format!("formula N = {n} at d = 2"));
    match verifier::verify_example(&ex, &SolveOptions::default()) {
        Ok(r) => {
            let nondeg = r.solve.points.iter().filter(|p| p.nondegenerate).count();
            o.check(
                r.solve.count() == 4 && r.all_nondegenerate(),
                format!(
                    "solver: {} singular points on V, {} nondegenerate, {} where V itself is singular",
                    r.solve.count(),
                    nondeg,
                    r.solve.count() - r.smooth_count()
                ),
            );
            o.check(
                r.solve.max_residual() < 1e-10,
                format!("max residual {:.2e}", r.solve.max_residual()),
            );
            o.check(
                r.certificate
                    .verify(&ex.field, &ex.equations)
                    .unwrap_or(false),
                "invariance certificate re-multiplies exactly",
            );
        }
        Err(e) => o.check(false, format!("verification error: {e}")),
    }
    let min = bounds::theorem2_min_degree(&ex.spec);
    o.check(
        min == Ok(2),
        format!("theorem2_min_degree = {min:?}, d = 2"),
    );
    o
}

fn c4_example1() -> Outcome {
    let mut o = Outcome::new();
    let ex = verifier::example1(1, 3).unwrap();
    let n = sing_count_wronski(&ex.spec, deg(2));
    o.check(n == BigInt::from(3), format!("formula N = {n} at d = 2"));
    match verifier::verify_example(&ex, &SolveOptions::default()) {
        Ok(r) => {
            o.check(
                r.solve.count() == 3,
                format!("solver found {} points", r.solve.count()),
            );
            let mut omegas = Vec::new();
            let mut all_on_curve = true;
            for p in &r.solve.points {
                let z1 = p.coords[0] / p.coords[2];
                let z2 = p.coords[1] / p.coords[2];
                all_on_curve &= z1.norm() < 1e-9 && (z2.powu(3) + 1.0).norm() < 1e-9;
                omegas.push(z2);
            }
            let distinct = omegas
                .iter()
                .enumerate()
                .all(|(i, a)| omegas[i + 1..].iter().all(|b| (a - b).norm() > 1e-3));
            o.check(
                all_on_curve && distinct,
                "points are (0, w) for the three distinct roots of w^3 = -1",
            );
            o.check(
                r.all_nondegenerate() && r.solve.max_residual() < 1e-10,
                format!("nondegenerate, max residual {:.2e}", r.solve.max_residual()),
            );
        }
        Err(e) => o.check(false, format!("verification error: {e}")),
    }
    let alpha = bounds::alpha(&ex.spec).unwrap();
    o.check(
        alpha == foliage_core::BigRational::from_integer(2.into()),
        format!("alpha = {alpha} = d"),
    );
    match invariance_certificate(&ex.field, &ex.equations) {
        Ok(c) => {
            let want = parse_poly("3*z2^2", 2, AFFINE).unwrap();
            o.check(
                c.cofactors == vec![vec![want]]
                    && c.verify(&ex.field, &ex.equations).unwrap_or(false),
                "certificate A = 3 z2^2",
            );
        }
        Err(e) => o.check(false, format!("certificate error: {e}")),
    }
    o
}

fn c5_identities() -> Outcome {
    let mut o = Outcome::new();
    let wg = WronskiGrid::default();
    for c in [
        identities::check_gap_monotone(&wg),
        identities::check_log_concavity(&wg),
        identities::check_ratio_minimizer(&wg),
        identities::check_todd(&wg),
        identities::check_reduction(&wg),
        identities::check_stifel(wg.max_degree),
        identities::check_lefschetz(&CiGrid::default()),
    ] {
        identity_line(&mut o, &c);
    }
    o
}

fn c6_sandwich() -> Outcome {
    let mut o = Outcome::new();
    let grid = CiGrid {
        min_entry: 2,
        ..CiGrid::default()
    };
    identity_line(&mut o, &identities::check_sandwich(&grid));
    identity_line(&mut o, &identities::check_small_degree_nonpositive(&grid));
    o
}

fn c7_hypersurface_polar() -> Outcome {
    let mut o = Outcome::new();
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 2..=8u32 {
        for d1 in 1..=6u32 {
            let s = spec(n, &[d1]);
            let want: Vec<BigInt> = (0..=s.dim())
                .map(|j| BigInt::from(d1) * num_pow(d1 as i64 - 1, j))
                .collect();
            let a = polar_classes_severi_todd(&s);
            let b = polar_classes_via_chern(&s);
            checked += 1;
            if a.as_slice() != want.as_slice() || b.as_slice() != want.as_slice() {
                bad.push(s.to_string());
            }
        }
    }
    o.check(
        bad.is_empty(),
        format!(
            "rho_j = d1 (d1-1)^j by both routes: {checked} hypersurfaces, {} mismatches",
            bad.len()
        ),
    );
    o
}

fn num_pow(b: i64, e: u32) -> BigInt {
    BigInt::from(b).pow(e)
}

fn c8_determinism() -> Outcome {
    let mut o = Outcome::new();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_foliage"))
            .args(["verify-example", "2", "--format", "json", "--seed", "0"])
            .output()
            .expect("run foliage")
    };
    let a = run();
    let b = run();
    o.check(
        !a.stdout.is_empty() && a.stdout == b.stdout,
        format!("two runs byte-identical ({} bytes)", a.stdout.len()),
    );
    o
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("1 Euler characteristics", c1_euler),
        ("2 three-form agreement and positivity", c2_three_forms),
        ("3 Example 2 end-to-end", c3_example2),
        ("4 Example 1 end-to-end", c4_example1),
        ("5 symmetric-function and section identities", c5_identities),
        (
            "6 alpha-beta sandwich and small-degree nonpositivity",
            c6_sandwich,
        ),
        ("7 hypersurface polar classes", c7_hypersurface_polar),
        ("8 determinism of verify-example 2", c8_determinism),
    ];
    let start = Instant::now();
    let mut failed = Vec::new();
    for (name, f) in criteria {
        let t = Instant::now();
        let o = f();
        println!(
            "[{}] criterion {name} ({:.1}s)",
            if o.pass { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64()
        );
        for d in &o.details {
            println!("       {d}");
        }
        if !o.pass {
            failed.push(name);
        }
    }
    println!(
        "{} of 8 criteria passed in {:.1}s",
        8 - failed.len(),
        start.elapsed().as_secs_f64()
    );
    if !failed.is_empty() {
        println!("failed: {}", failed.join(", "));
        std::process::exit(1);
    }
}
