//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs without the libtest harness so the lines always print.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pio_core::algebra::{cyclotomic, divisors, poly_gcd, resultant, IntPoly};
use pio_core::classifier::{classify, ClassKind, Classification};
use pio_core::degeneracy::{is_cyclotomic_product, strip_unit_root, unity_orders};
use pio_core::evaluator::{bench_compare, eval_pio, EvalMethod};
use pio_core::powersum::{growth_report, power_sum, verify_powersum, zero_scan, ComplexEnclosure, Dyadic, Interval};
use pio_core::recurrence::RecurrenceSpec;

/// Fixed once; the random corpus is whatever this seed produces.
const SEED: u64 = 20261019;
const RANDOM_SPECS: usize = 50;

type Outcome = Result<String, String>;

fn f1() -> RecurrenceSpec {
    RecurrenceSpec::from_i64s(&[-9, 45, -89, 85, -35, -1, 5], &[-1, 30, 75, 410, 615, 2742, 2387]).unwrap()
}

fn fib() -> RecurrenceSpec {
    RecurrenceSpec::from_i64s(&[1, 1], &[1, 1]).unwrap()
}

/// Random specs with k in 1..=5 and every integer in [-9, 9], a_0 != 0.
fn random_specs() -> Vec<(String, RecurrenceSpec)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..RANDOM_SPECS)
        .map(|i| {
            let k = rng.gen_range(1..=5usize);
            let mut coeffs: Vec<i64> = (0..k).map(|_| rng.gen_range(-9..=9)).collect();
            while coeffs[0] == 0 {
                coeffs[0] = rng.gen_range(-9..=9);
            }
            let initial: Vec<i64> = (0..k).map(|_| rng.gen_range(-9..=9)).collect();
            let name = format!("random#{i} a={coeffs:?} f={initial:?}");
            (name, RecurrenceSpec::from_i64s(&coeffs, &initial).unwrap())
        })
        .collect()
}

fn crafted_specs() -> Vec<(String, RecurrenceSpec)> {
    vec![
        ("f1".into(), f1()),
        // x^2 + 1: roots +-i
        ("rotation".into(), RecurrenceSpec::from_i64s(&[-1, 0], &[1, 0]).unwrap()),
        // x^2 - x + 1 = Phi_6
        ("phi6".into(), RecurrenceSpec::from_i64s(&[-1, 1], &[1, 1]).unwrap()),
        ("zero".into(), RecurrenceSpec::zero()),
    ]
}

fn corpus() -> Vec<(String, RecurrenceSpec)> {
    let mut all = crafted_specs();
    all.extend(random_specs());
    all
}

fn classify_all(corpus: &[(String, RecurrenceSpec)]) -> Result<Vec<(String, Classification)>, String> {
    corpus
        .iter()
        .map(|(name, s)| classify(s).map(|c| (name.clone(), c)).map_err(|e| format!("{name}: {e}")))
        .collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let cls = classify(&f1()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let x: Vec<u64> = cls.polynomial_residues().into_iter().collect();
    let want = pio_core::algebra::RatPoly::new(
        [0, -2, 0, 0, 1].iter().map(|&c| BigRational::from_integer(c.into())).collect(),
    );
    let odd_ok = cls.classes[0].poly.as_ref() == Some(&want);
    let even_ok = cls.classes[1].kind == ClassKind::Exponential;
    if cls.modulus() == 2 && x == [1] && odd_ok && even_ok && elapsed < Duration::from_secs(5) {
        Ok(format!("m=2, X={{1}}, q(n)=n^4-2n, even class exponential, {:.3}s", elapsed.as_secs_f64()))
    } else {
        Err(format!("m={}, X={x:?}, odd ok {odd_ok}, even ok {even_ok}, {elapsed:?}", cls.modulus()))
    }
}

fn criterion_2(classified: &[(String, Classification)]) -> Outcome {
    let start = Instant::now();
    let limit = 2000u64;
    let mut checked = 0u64;
    for (name, cls) in classified {
        let oracle = cls.spec.terms(limit as usize);
        // terms() runs the same forward iteration as eval_simple
        if cls.spec.eval_simple(limit).map_err(|e| e.to_string())? != oracle[limit as usize - 1] {
            return Err(format!("{name}: terms and eval_simple disagree"));
        }
        for n in 1..=limit {
            let got = eval_pio(cls, &BigUint::from(n), EvalMethod::Auto).map_err(|e| format!("{name} n={n}: {e}"))?;
            if got != oracle[n as usize - 1] {
                return Err(format!("{name}: mismatch at n={n}"));
            }
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(300) {
        return Err(format!("zero mismatches but took {:.1}s", elapsed.as_secs_f64()));
    }
    Ok(format!(
        "{} specs, {checked} values, zero mismatches, {:.1}s",
        classified.len(),
        elapsed.as_secs_f64()
    ))
}

/// Least-squares slope of ln(time) against ln(ln n).
fn fit_exponent(points: &[(f64, f64)]) -> f64 {
    let xs: Vec<f64> = points.iter().map(|(n, _)| n.ln().ln()).collect();
    let ys: Vec<f64> = points.iter().map(|(_, t)| t.ln()).collect();
    let mx = xs.iter().sum::<f64>() / xs.len() as f64;
    let my = ys.iter().sum::<f64>() / ys.len() as f64;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

fn criterion_3() -> Outcome {
    let cls = classify(&f1()).map_err(|e| e.to_string())?;
    let mut points = Vec::new();
    for e in [3u32, 6, 9, 12] {
        let n = BigUint::from(10u32).pow(e) + BigUint::one();
        let start = Instant::now();
        eval_pio(&cls, &n, EvalMethod::Auto).map_err(|e| e.to_string())?;
        let first = start.elapsed();
        if first >= Duration::from_secs(1) {
            return Err(format!("n=10^{e}+1 took {first:?}"));
        }
        // minimum over repeats damps scheduler noise in the fit
        let best = (0..200)
            .map(|_| {
                let s = Instant::now();
                eval_pio(&cls, &n, EvalMethod::Auto).unwrap();
                s.elapsed()
            })
            .min()
            .unwrap();
        points.push((10f64.powi(e as i32) + 1.0, best.as_secs_f64().max(1e-9)));
    }
    let slope = fit_exponent(&points);

    let budget = Duration::from_secs(2);
    let n6 = BigUint::from(1_000_001u32);
    let report = bench_compare(&cls, &[n6], budget).map_err(|e| e.to_string())?;
    let row = &report.rows[0];
    let auto = points[1].1;
    let simple_note = match row.simple_time {
        Some(t) if t.as_secs_f64() >= 100.0 * auto => format!("simple {:.3}s", t.as_secs_f64()),
        Some(t) => return Err(format!("simple only {:.1}x slower", t.as_secs_f64() / auto)),
        None if budget.as_secs_f64() >= 100.0 * auto => format!("simple skipped after {}s budget", budget.as_secs()),
        None => return Err("simple skipped but auto too slow to claim 100x".into()),
    };
    if slope > 4.0 {
        return Err(format!("fit exponent {slope:.2} > 4"));
    }
    let times: Vec<String> = points.iter().map(|(_, t)| format!("{:.1}us", t * 1e6)).collect();
    Ok(format!("auto times {}, fit exponent {slope:.2}, {simple_note}", times.join("/")))
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

fn criterion_4(classified: &[(String, Classification)]) -> Outcome {
    let mut violations = Vec::new();
    for (name, cls) in classified {
        let kmin = cls.minimal.order() as u64;
        let m = BigUint::from(cls.modulus());
        if !(factorial(kmin * kmin) % &m).is_zero() {
            violations.push(format!("{name}: m={m} does not divide ({kmin}^2)!"));
        }
        for class in &cls.classes {
            let (rest, _) = strip_unit_root(&class.section.char_poly());
            if rest.is_constant() {
                continue;
            }
            let deg = rest.degree().unwrap_or(0);
            let orders = unity_orders(&rest, deg).map_err(|e| e.to_string())?;
            if !orders.is_empty() || is_cyclotomic_product(&rest) {
                violations.push(format!("{name}: residue {} keeps roots of unity of orders {orders:?}", class.residue));
            }
        }
    }
    if violations.is_empty() {
        Ok(format!("{} specs, zero violations", classified.len()))
    } else {
        Err(format!("{} violation(s): {}", violations.len(), violations.join("; ")))
    }
}

fn criterion_5(classified: &[(String, Classification)]) -> Outcome {
    let mut classes = 0;
    for (name, cls) in classified {
        let m = cls.modulus();
        let kmin = cls.minimal.order();
        let values = cls.spec.terms(2000);
        for class in cls.classes.iter().filter(|c| c.kind == ClassKind::Polynomial) {
            let q = class.poly.as_ref().ok_or(format!("{name}: polynomial class without q"))?;
            let deg = q.degree().unwrap_or(0);
            if q.degree().is_some() && deg >= kmin {
                return Err(format!("{name}: residue {} has deg q = {deg} >= k_min = {kmin}", class.residue));
            }
            let members: Vec<u64> = (class.residue..=2000).step_by(m as usize).collect();
            let needed = (deg + 1) + (2 * deg + 2);
            if members.len() < needed {
                return Err(format!("{name}: only {} members below 2000", members.len()));
            }
            for n in members {
                let v = q.eval(&BigRational::from_integer(n.into()));
                if v != BigRational::from_integer(values[n as usize - 1].clone()) {
                    return Err(format!("{name}: q disagrees at n={n}"));
                }
            }
            classes += 1;
        }
    }
    Ok(format!("{classes} polynomial classes verified, deg q < k_min throughout"))
}

fn five_c_squared_is_one(c: &ComplexEnclosure) -> bool {
    let sq = c.re.sqr(256).mul(&Interval::from_int(5), 256);
    sq.contains(&Dyadic::one()) && c.im.contains_zero()
}

fn criterion_6(corpus: &[(String, RecurrenceSpec)]) -> Outcome {
    for (name, spec) in corpus {
        let s = power_sum(spec, 128).map_err(|e| format!("{name}: {e}"))?;
        let n = 2 * spec.order().max(1) as u64;
        verify_powersum(&s, n).map_err(|e| format!("{name}: {e}"))?;
    }
    let s = power_sum(&fib(), 128).map_err(|e| e.to_string())?;
    let ok = s.terms.len() == 2
        && s.terms.iter().all(|t| {
            five_c_squared_is_one(&t.coeffs[0]) && t.coeffs[0].width() <= Dyadic::pow2(-10)
        });
    if !ok {
        return Err("Fibonacci coefficients do not enclose +-1/sqrt(5) to 10 bits".into());
    }
    Ok(format!("{} specs verified at N=2k, p=128; Fibonacci +-1/sqrt5 enclosed", corpus.len()))
}

fn criterion_7() -> Outcome {
    let golden = ((1.0 + 5f64.sqrt()) / 2.0).ln();
    let r = growth_report(&classify(&fib()).map_err(|e| e.to_string())?, 2000).map_err(|e| e.to_string())?;
    let fib_row = r.rows.first().ok_or("no exponential class for Fibonacci")?;
    let r = growth_report(&classify(&f1()).map_err(|e| e.to_string())?, 2000).map_err(|e| e.to_string())?;
    let f1_row = r.rows.iter().find(|row| row.residue == 2).ok_or("no even class row")?;
    let mut lines = Vec::new();
    for (row, oracle, label) in [(fib_row, golden, "fib"), (f1_row, 3f64.ln(), "f1 even")] {
        let emp = row.empirical.ok_or(format!("{label}: f(n) = 0"))?;
        let certified = row.log_c_lo <= oracle && oracle <= row.log_c_hi;
        let rel = (emp - oracle).abs() / oracle;
        if row.index != 2000 || !certified || !row.within_tolerance || rel > 0.05 {
            return Err(format!("{label}: {row}"));
        }
        lines.push(format!("{label} {emp:.4} vs {oracle:.4} ({:.2}%)", rel * 100.0));
    }
    Ok(lines.join(", "))
}

fn criterion_8() -> Outcome {
    let quad = RecurrenceSpec::from_i64s(&[1, -3, 3], &[2, 0, 0]).unwrap();
    let zeros: Vec<u64> = zero_scan(&classify(&quad).map_err(|e| e.to_string())?, 1000)
        .iter()
        .map(|z| z.index)
        .collect();
    let fib_zeros = zero_scan(&classify(&fib()).map_err(|e| e.to_string())?, 1000);
    if zeros == [2, 3] && fib_zeros.is_empty() {
        Ok("(n-2)(n-3) -> {2, 3}; Fibonacci -> none".into())
    } else {
        Err(format!("quadratic zeros {zeros:?}, Fibonacci zeros {}", fib_zeros.len()))
    }
}

fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> IntPoly {
    loop {
        let d = rng.gen_range(1..=max_deg);
        let p = IntPoly::new((0..=d).map(|_| BigInt::from(rng.gen_range(-5..=5))).collect());
        if p.degree().is_some_and(|d| d > 0) {
            return p;
        }
    }
}

fn criterion_9() -> Outcome {
    for n in 1..=100u64 {
        let prod = divisors(n).into_iter().fold(IntPoly::one(), |acc, d| &acc * &cyclotomic(d));
        let mut target = vec![BigInt::zero(); n as usize + 1];
        target[0] = BigInt::from(-1);
        target[n as usize] = BigInt::one();
        if prod != IntPoly::new(target) {
            return Err(format!("product of Phi_d over d | {n} is not x^{n} - 1"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x9);
    let mut shared = 0;
    for i in 0..200 {
        let (mut p, mut q) = (random_poly(&mut rng, 5), random_poly(&mut rng, 5));
        if i % 2 == 0 {
            let common = random_poly(&mut rng, 2);
            p = &p * &common;
            q = &q * &common;
        }
        let res = resultant(&p, &q).map_err(|e| e.to_string())?;
        let g = poly_gcd(&p, &q).map_err(|e| e.to_string())?;
        let nonconstant = !g.is_constant();
        shared += usize::from(nonconstant);
        if res.is_zero() != nonconstant {
            return Err(format!("pair {i}: Res = {res}, gcd = {g}"));
        }
    }
    Ok(format!("Phi identity for N <= 100; 200 pairs coupled ({shared} with a common factor)"))
}

fn main() -> ExitCode {
    let corpus = corpus();
    let classified = classify_all(&corpus);
    let with_corpus = |f: fn(&[(String, Classification)]) -> Outcome| match &classified {
        Ok(c) => f(c),
        Err(e) => Err(format!("classification failed: {e}")),
    };
    let results: Vec<(&str, Outcome)> = vec![
        ("f1 reproduction", criterion_1()),
        ("oracle equivalence", with_corpus(criterion_2)),
        ("PIO scaling", criterion_3()),
        ("modulus soundness", with_corpus(criterion_4)),
        ("interpolation verification", with_corpus(criterion_5)),
        ("power-sum containment", criterion_6(&corpus)),
        ("growth diagnostics", criterion_7()),
        ("zero scan", criterion_8()),
        ("exact-algebra suite", criterion_9()),
    ];
    let mut failed = BTreeSet::new();
    for (i, (label, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {} ({label}): PASS - {detail}", i + 1),
            Err(detail) => {
                println!("criterion {} ({label}): FAIL - {detail}", i + 1);
                failed.insert(i + 1);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 9 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}");
        ExitCode::FAILURE
    }
}
