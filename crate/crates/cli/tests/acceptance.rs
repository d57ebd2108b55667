//! Acceptance gate: one pass/fail line per criterion.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use bezout_core::scalar::{rat, rat_frac};
use bezout_core::verify::{random_coprime_pair, random_line, resultant_oracle, Verdict};
use bezout_core::{
    bezout_check, factor_nf, factor_q, intersection_cycle, line_point, on_curve, parse_poly,
    property_harness, unpack, Cycle, GaloisCycle, HPoly, NfElem, NfPoly, NumberField, QPoly, UPoly,
};
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CUSP: &str = "y^2*z-x^3";
const NODE: &str = "y^2*z-x^2*(x+z)";
const EX2_A: &str =
    "(y-z)x^5+(y^2-y*z)x^4+(y^3-y^2z)x^3+(-y^2z^2+y*z^3)x^2+(-y^3z^2+y^2z^3)x-y^4z^2+y^3z^3";
const EX2_B: &str = "(y^2-2z^2)x^2+(y^3-2y*z^2)x+y^4-y^2z^2-2z^4";

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn h(s: &str) -> HPoly {
    HPoly::new(parse_poly(s).unwrap()).unwrap()
}

fn q(c: &[i64]) -> QPoly {
    UPoly::from_ints(c)
}

fn c1(hs: &str, g: &[i64]) -> GaloisCycle {
    GaloisCycle::canonical_c1_xy(&parse_poly(hs).unwrap(), &q(g)).unwrap()
}

fn c0(f: &[i64]) -> GaloisCycle {
    GaloisCycle::c0(&q(f)).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn membership(a: &HPoly, b: &HPoly, c: &Cycle) -> Result<(), String> {
    for (gc, _) in c.iter() {
        ensure(on_curve(a, gc) && on_curve(b, gc), || {
            format!("{gc} not on both of {a}, {b}")
        })?;
    }
    Ok(())
}

fn example_one() -> Outcome {
    let t = Instant::now();
    let c = intersection_cycle(&h(CUSP), &h(NODE)).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    let expected: Cycle = [(c1("x", &[0, 1]), 4), (c0(&[0, 1]), 5)]
        .into_iter()
        .collect();
    ensure(c == expected, || format!("got {c}"))?;
    ensure(c.size().ok() == Some(9) && bezout_check(&c, 3, 3), || {
        "size is not 9".into()
    })?;
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{c}, size 9, {elapsed:.2?}"))
}

fn example_two() -> Outcome {
    let t = Instant::now();
    let c = intersection_cycle(&h(EX2_A), &h(EX2_B)).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    let expected: Cycle = [
        (GaloisCycle::PInf, 2),
        (c0(&[1, 1, 1]), 2),
        (c1("x^2+x+2", &[-1, 1]), 1),
        (c1("x+y", &[1, 0, 1]), 1),
        (c1("x-y^3", &[1, 0, 0, 0, 1]), 1),
        (c1("x^3-y", &[-2, 0, 1]), 1),
        (c1("x^2+y*x+2", &[-2, 0, 1]), 1),
    ]
    .into_iter()
    .collect();
    ensure(c == expected, || format!("got {c}"))?;
    ensure(c.size().ok() == Some(24) && bezout_check(&c, 6, 4), || {
        "size is not 24".into()
    })?;
    ensure(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("7 terms, size 24, {elapsed:.2?}"))
}

fn random_pairs() -> Vec<(HPoly, HPoly)> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    (0..50).map(|_| random_coprime_pair(&mut rng, 4)).collect()
}

fn bezout_property() -> Outcome {
    let t = Instant::now();
    for (a, b) in random_pairs() {
        let c = intersection_cycle(&a, &b).map_err(|e| format!("{a}, {b}: {e}"))?;
        ensure(c.all_positive(), || {
            format!("{a}, {b}: negative coefficient in {c}")
        })?;
        ensure(bezout_check(&c, a.degree(), b.degree()), || {
            format!("{a}, {b}: size of {c}")
        })?;
    }
    let elapsed = t.elapsed();
    ensure(elapsed < Duration::from_secs(120), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("50/50 pairs, {elapsed:.2?}"))
}

fn harness() -> Outcome {
    let report = property_harness(25, 3, 4);
    let needed = ["symmetry", "additivity", "shift", "scalar"];
    for name in needed {
        let check = report
            .check(name)
            .ok_or_else(|| format!("no {name} check"))?;
        ensure(check.total >= 25, || {
            format!("{name}: only {} instances", check.total)
        })?;
    }
    ensure(report.all_passed(), || report.to_string())?;
    let counts: Vec<String> = report
        .checks
        .iter()
        .map(|c| format!("{} {}/{}", c.name, c.passed, c.total))
        .collect();
    Ok(counts.join(", "))
}

fn membership_all() -> Outcome {
    let mut pairs = vec![(h(CUSP), h(NODE)), (h(EX2_A), h(EX2_B))];
    pairs.extend(random_pairs());
    let mut cycles = 0;
    for (a, b) in &pairs {
        let c = intersection_cycle(a, b).map_err(|e| e.to_string())?;
        membership(a, b, &c)?;
        cycles += c.len();
    }
    let report = property_harness(25, 3, 5);
    let check = report.check("membership").ok_or("no membership check")?;
    ensure(check.passed == check.total, || report.to_string())?;
    Ok(format!(
        "{cycles} Galois cycles on {} pairs, harness {}/{}",
        pairs.len(),
        check.passed,
        check.total
    ))
}

fn oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for seed in 0..20 {
        let (a, b) = random_coprime_pair(&mut rng, 3);
        let r = resultant_oracle(&a, &b, seed).map_err(|e| e.to_string())?;
        ensure(r.verdict == Verdict::Pass, || {
            format!("{a}, {b}: {:?}", r.verdict)
        })?;
    }
    let r = resultant_oracle(&h(CUSP), &h(NODE), 0).map_err(|e| e.to_string())?;
    ensure(r.verdict == Verdict::Pass, || format!("{:?}", r.verdict))?;
    let (ez, fac) = r.resultant.ok_or("no resultant")?;
    ensure(ez == 5 && fac.factors == vec![(q(&[0, 1]), 4)], || {
        format!("z^{ez} {:?}", fac.factors)
    })?;
    Ok("20/20 random pairs; cusp/node resultant c*y^4*z^5".into())
}

fn factorization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let small = |rng: &mut ChaCha8Rng| rat_frac(rng.gen_range(-9..=9), rng.gen_range(1..=3));
    for _ in 0..200 {
        let mut f = QPoly::constant(rat(rng.gen_range(1..=5)));
        let mut budget = rng.gen_range(1..=8);
        while budget > 0 {
            let d = rng.gen_range(1..=budget.min(4));
            let mut c: Vec<_> = (0..d).map(|_| small(&mut rng)).collect();
            c.push(rat(1));
            f = f * QPoly::new(c);
            budget -= d;
        }
        ensure(factor_q(&f).expand() == f, || format!("{f} over Q"))?;
    }
    let moduli: [&[i64]; 4] = [
        &[-2, 0, 1],
        &[-2, 0, 0, 1],
        &[1, 0, 0, 0, 1],
        &[-1, -1, 0, 1],
    ];
    for i in 0..200 {
        let k = NumberField::new(q(moduli[i % moduli.len()])).map_err(|e| e.to_string())?;
        let mut f = NfPoly::new(vec![NfElem::rational(rat(1))]);
        let mut budget = rng.gen_range(1..=6);
        while budget > 0 {
            let d = rng.gen_range(1..=budget.min(3));
            let mut c: Vec<NfElem> = (0..d)
                .map(|_| {
                    k.elem(QPoly::new(
                        (0..k.degree()).map(|_| small(&mut rng)).collect(),
                    ))
                })
                .collect();
            c.push(NfElem::rational(rat(1)));
            f = f * NfPoly::new(c);
            budget -= d;
        }
        ensure(factor_nf(&f, &k).expand() == f, || {
            format!("degree {} over Q[t]/({})", f.deg(), k.modulus())
        })?;
    }
    let k = NumberField::new(q(&[-2, 0, 1])).map_err(|e| e.to_string())?;
    let one = || NfElem::rational(rat(1));
    let zero = || NfElem::rational(rat(0));
    let f = NfPoly::new(vec![one(), zero(), zero(), zero(), one()]);
    let fac = factor_nf(&f, &k);
    ensure(
        fac.factors.len() == 2 && fac.factors.iter().all(|(g, m)| g.deg() == 2 && *m == 1),
        || format!("x^4+1 over Q(sqrt 2): {} factors", fac.factors.len()),
    )?;
    Ok("200/200 over Q, 200/200 over number fields; x^4+1 = two quadratics over Q(sqrt 2)".into())
}

fn unpacking() -> Outcome {
    let (a, b) = (h(EX2_A), h(EX2_B));
    let cycle = Cycle::single(c1("x^3-y", &[-2, 0, 1]), 1);
    let points = unpack(&cycle, 30, Some((&a, &b))).map_err(|e| e.to_string())?;
    ensure(points.len() == 6, || format!("{} points", points.len()))?;
    let (r, s) = (2f64.powf(1.0 / 6.0), 2f64.sqrt());
    let mut expected = Vec::new();
    for k in 0..3 {
        let w = Complex::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / 3.0);
        expected.push((w * r, Complex::new(s, 0.0)));
        expected.push((-w * r, Complex::new(-s, 0.0)));
    }
    let mut worst = 0f64;
    for p in &points {
        let i = expected
            .iter()
            .position(|(x, y)| (p.x - x).norm() < 1e-10 && (p.y - y).norm() < 1e-10)
            .ok_or_else(|| format!("unexpected point ({}, {})", p.x, p.y))?;
        expected.remove(i);
        let [ra, rb] = p.residuals.ok_or("no residuals")?;
        ensure(ra < 1e-8 && rb < 1e-8, || {
            format!("residuals {ra:e}, {rb:e}")
        })?;
        worst = worst.max(ra).max(rb);
    }
    Ok(format!("6 points within 1e-10, max residual {worst:.1e}"))
}

fn lines() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut done = 0;
    while done < 100 {
        let (l1, l2) = (random_line(&mut rng), random_line(&mut rng));
        let Ok(p) = line_point(&l1, &l2) else {
            continue;
        };
        let (h1, h2) = (l1.to_hpoly(), l2.to_hpoly());
        let at = [&p.coords[0], &p.coords[1], &p.coords[2]];
        ensure(
            h1.poly().eval(at) == rat(0) && h2.poly().eval(at) == rat(0),
            || format!("{p:?} off the lines"),
        )?;
        let c = intersection_cycle(&h1, &h2).map_err(|e| e.to_string())?;
        ensure(c == Cycle::single(p.to_cycle(), 1), || {
            format!("{h1}, {h2}: {c}")
        })?;
        done += 1;
    }
    Ok("100/100 line pairs meet once with multiplicity 1".into())
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_bezout"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!(
            "bezout {args:?} exited {}: {}",
            out.status,
            String::from_utf8_lossy(&out.stderr)
        )
    })?;
    Ok(out.stdout)
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn cli_golden() -> Outcome {
    let cases: [(&str, &[&str]); 4] = [
        ("example1.txt", &["intersect", CUSP, NODE]),
        ("example1.json", &["intersect", CUSP, NODE, "--json"]),
        ("example2.txt", &["intersect", EX2_A, EX2_B]),
        ("example2.json", &["intersect", EX2_A, EX2_B, "--json"]),
    ];
    for (file, args) in cases {
        let first = run_cli(args)?;
        ensure(run_cli(args)? == first, || {
            format!("{file}: output differs between runs")
        })?;
        let want = std::fs::read(golden(file)).map_err(|e| format!("{file}: {e}"))?;
        ensure(first == want, || {
            format!("{file}: output differs from golden file")
        })?;
    }
    let dir = std::env::temp_dir().join(format!("bezout-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    for (slice, mult) in [("z=1", 4), ("y=1", 5)] {
        let path = dir.join(format!("slice-{}.svg", &slice[..1]));
        let path_s = path.to_string_lossy().into_owned();
        let args = ["plot", CUSP, NODE, "--slice", slice, "--out", &path_s];
        let msg = String::from_utf8_lossy(&run_cli(&args)?).into_owned();
        let svg = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        run_cli(&args)?;
        ensure(
            std::fs::read_to_string(&path).map_err(|e| e.to_string())? == svg,
            || format!("{slice}: SVG differs between runs"),
        )?;
        let markers = svg.matches("<circle").count();
        ensure(
            markers == 1 && svg.contains(&format!(">{mult}</text>")),
            || format!("{slice}: {markers} markers; {msg}"),
        )?;
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok("4 golden outputs byte-stable; SVG markers 4 (z=1) and 5 (y=1)".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("cusp/node example", example_one),
        ("sextic/quartic example", example_two),
        ("Bezout count on 50 random pairs", bezout_property),
        ("cycle identities harness", harness),
        ("membership of every Galois cycle", membership_all),
        ("resultant oracle", oracle),
        ("factorization round trips", factorization),
        ("numeric unpacking", unpacking),
        ("line pairs", lines),
        ("CLI golden outputs", cli_golden),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = t.elapsed();
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {name}: {detail} [{elapsed:.2?}]",
                i + 1
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
