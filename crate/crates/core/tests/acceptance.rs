//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any fails. All arithmetic is exact, so every comparison
//! is an equality; the only tolerances are the wall-clock budgets.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use cyclounits::classify::{self, scan_orders, Classification, PeriodicSet};
use cyclounits::cyclo::{cyclotomic, cyclotomic_mobius, divisors, euler_phi, phi_is_pm1};
use cyclounits::poly::{bezout_witness, mult_matrix_det, resultant, verify_certificate, Witness};
use cyclounits::unitcheck::{defines_unit_on_order, defines_units_on_roots};
use cyclounits::{IntPoly, Limits};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

/// Id, name, check, wall-clock budget in seconds.
type Criterion = (&'static str, &'static str, fn() -> Outcome, Option<u64>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn phi(m: u64) -> IntPoly {
    cyclotomic(m).unwrap()
}

fn prod(ms: &[u64]) -> IntPoly {
    ms.iter().fold(IntPoly::one(), |acc, &m| &acc * &phi(m))
}

fn set(modulus: u64, residues: &[u64]) -> PeriodicSet {
    PeriodicSet {
        modulus,
        residues: residues.to_vec(),
    }
}

/// 1. Φ_m(a) = ±1 table against direct evaluation, m ≤ 300, a ∈ [−10, 10].
fn phi_value_table() -> Outcome {
    let mut checked = 0;
    for m in 1..=300u64 {
        let p = phi(m);
        for a in -10i64..=10 {
            let value = p.evaluate_i64(a);
            let class = phi_is_pm1(m, a).unwrap();
            ensure!(
                class.value_is_plus_one == (value == BigInt::one()),
                "m={m} a={a}: table +1={} but Φ_m(a)={value}",
                class.value_is_plus_one
            );
            ensure!(
                class.value_is_minus_one == (value == -BigInt::one()),
                "m={m} a={a}: table -1={} but Φ_m(a)={value}",
                class.value_is_minus_one
            );
            checked += 1;
        }
    }
    Ok(format!("{checked} (m, a) pairs"))
}

/// 2. Resultant verdict for Φ_m on n-th roots of a equals the prediction
///    from Φ_d(a) = ±1, d = m / gcd(n, m).
fn cyclotomic_criterion() -> Outcome {
    let mut checked = 0;
    let mut units = 0;
    for m in 1..=60u64 {
        let p = phi(m);
        for n in 1..=60u64 {
            let d = m / n.gcd(&m);
            for a in [-3i64, -2, -1, 1, 2, 3] {
                let predicted = phi_is_pm1(d, a).unwrap().is_pm1();
                let actual = defines_units_on_roots(&p, n, a, false).unwrap().is_unit;
                ensure!(predicted == actual, "m={m} n={n} a={a}: table {predicted}, resultant {actual}");
                checked += 1;
                units += actual as usize;
            }
        }
    }
    Ok(format!("{checked} instances, {units} units"))
}

fn generic_corpus() -> Vec<IntPoly> {
    let x = IntPoly::x();
    vec![
        phi(6),
        prod(&[10, 12]),
        &x * &phi(6).pow(2),
        phi(10),
        phi(12),
        phi(14),
        phi(15),
        phi(18),
        phi(20),
        phi(21),
        -phi(24),
        phi(30),
        prod(&[6, 10]),
        prod(&[6, 15, 35]),
        x.pow(3) * phi(28),
        -(&x * &prod(&[12, 18])),
        phi(36).pow(2),
        prod(&[22, 26]),
        x.pow(2) * prod(&[6, 6, 10]),
        phi(42),
        &x * &phi(10),
    ]
}

/// 3. Generic polynomials are units on every order ≤ 500 coprime to D;
///    Φ4, Φ2, Φ9 are units on no order ≤ 200.
fn generic_evidence() -> Outcome {
    let corpus = generic_corpus();
    ensure!(corpus.len() >= 20, "corpus has {} polynomials", corpus.len());
    let mut checked = 0;
    for f in &corpus {
        let v = classify::is_generic(f).unwrap();
        ensure!(v.generic, "{f} not generic: {:?}", v.offenders);
        let d = v.modulus.unwrap();
        for n in (1..=500u64).filter(|n| n.gcd(&d) == 1) {
            ensure!(defines_unit_on_order(f, n).unwrap().is_unit, "{f} fails on order {n} (D={d})");
            checked += 1;
        }
    }
    for m in [4u64, 2, 9] {
        let v = classify::is_generic(&phi(m)).unwrap();
        ensure!(!v.generic, "Φ{m} reported generic");
        for n in 1..=200 {
            ensure!(!defines_unit_on_order(&phi(m), n).unwrap().is_unit, "Φ{m} unit on order {n}");
        }
    }
    Ok(format!("{} generic polynomials, {checked} coprime orders; Φ4, Φ2, Φ9 never units", corpus.len()))
}

/// 4. Infinite/empty classification in each of the four a-cases, residues
///    cross-validated against per-n resultants up to n = 200.
fn infinitude_cases() -> Outcome {
    let cases: [(&str, IntPoly, i64, Classification); 5] = [
        ("Φ6, a=1", phi(6), 1, Classification::Infinite(set(6, &[1, 5]))),
        ("Φ6, a=-1", phi(6), -1, Classification::Infinite(set(6, &[2, 4]))),
        ("Φ2, a=-2", phi(2), -2, Classification::Infinite(set(2, &[1]))),
        ("Φ2·Φ4, a=-2", prod(&[2, 4]), -2, Classification::Empty),
        ("Φ3·Φ4, a=2", prod(&[3, 4]), 2, Classification::Infinite(set(12, &[0]))),
    ];
    let limits = Limits::default();
    for (name, f, a, expected) in cases {
        let got = classify::classify_roots(&f, a, 200).unwrap();
        ensure!(got == expected, "{name}: got {got:?}, expected {expected:?}");
        let scanned = scan_orders(&f, a, 200, &limits).unwrap();
        let from_residues = match &got {
            Classification::Infinite(s) => s.members_up_to(200),
            _ => Vec::new(),
        };
        ensure!(scanned == from_residues, "{name}: residues disagree with resultant scan");
    }
    Ok("5 cases, residues match resultants for n ≤ 200".into())
}

/// 5. Finite unit sets for X−2 and X²−X−1 (a = 1), scanned to 1000 within
///    30 s each, never exceeding the count bound.
fn finite_sets() -> Outcome {
    let cases = [
        (IntPoly::from_i64s(&[-2, 1]), vec![1u64], 1029),
        (IntPoly::from_i64s(&[-1, -1, 1]), vec![1, 2], 147),
    ];
    let mut notes = Vec::new();
    for (f, members, bound) in cases {
        let start = Instant::now();
        let got = classify::classify_roots(&f, 1, 1000).unwrap();
        let elapsed = start.elapsed();
        ensure!(elapsed < Duration::from_secs(30), "{f}: scan took {elapsed:?}");
        let Classification::Finite { bound: b, members: found, exhaustive, scan_limit } = got else {
            return Err(format!("{f}: expected Finite, got {got:?}"));
        };
        ensure!(b == BigInt::from(bound), "{f}: bound {b}, expected {bound}");
        ensure!(found == members, "{f}: members {found:?}, expected {members:?}");
        ensure!(!exhaustive && scan_limit == 1000, "{f}: bad scan metadata");
        ensure!(BigInt::from(found.len()) <= b, "{f}: count exceeds bound");
        notes.push(format!("{f} in {:.2}s", elapsed.as_secs_f64()));
    }
    Ok(notes.join(", "))
}

/// 6. |Res(X^n − a, f)| = |det(multiplication by f)| on 500 random instances.
fn oracle_equivalence() -> Outcome {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xacce_0006);
    let mut exact_sign = 0;
    for i in 0..500 {
        let deg = rng.gen_range(0..=6);
        let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-20..=20)).collect();
        let mut f = IntPoly::from_i64s(&coeffs);
        if f.is_zero() {
            f = IntPoly::one();
        }
        let n = rng.gen_range(1..=12u64);
        let a = loop {
            let a = rng.gen_range(-5..=5i64);
            if a != 0 {
                break a;
            }
        };
        let res = resultant(&IntPoly::binomial(n as usize, &BigInt::from(a)), &f).unwrap();
        let det = mult_matrix_det(&f, n, a).unwrap();
        ensure!(res.abs() == det.abs(), "instance {i}: f={f} n={n} a={a}: res {res}, det {det}");
        exact_sign += (res == det) as usize;
    }
    Ok(format!("500 instances, {exact_sign} with identical sign"))
}

/// 7. Certificates verify with deg p < n and deg q < deg f whenever the
///    verdict is a unit; otherwise NotAUnit with |resultant| ≠ 1.
fn certificate_suite() -> Outcome {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xacce_0007);
    let mut polys: Vec<IntPoly> = (1..=30).map(phi).collect();
    polys.extend([prod(&[10, 12]), &IntPoly::x() * &phi(6).pow(2), IntPoly::from_i64s(&[-1, -1, 1])]);
    for _ in 0..40 {
        let deg = rng.gen_range(0..=4);
        let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-3..=3)).collect();
        let f = IntPoly::from_i64s(&coeffs);
        if !f.is_zero() {
            polys.push(f);
        }
    }
    let (mut units, mut non_units) = (0, 0);
    for f in &polys {
        for n in 1..=20u64 {
            for a in [-2i64, -1, 1, 2] {
                let verdict = defines_units_on_roots(f, n, a, true).unwrap();
                let witness = bezout_witness(f, n, a).unwrap();
                match (&verdict.certificate, witness) {
                    (Some(c), Witness::Certificate(w)) => {
                        ensure!(verdict.is_unit, "{f} n={n} a={a}: certificate on non-unit");
                        ensure!(verify_certificate(f, c) && verify_certificate(f, &w), "{f} n={n} a={a}: bad certificate");
                        ensure!(c.p.degree().is_none_or(|d| d < n as usize), "{f} n={n} a={a}: deg p");
                        ensure!(c.q.degree().is_none_or(|d| d < f.degree().unwrap()), "{f} n={n} a={a}: deg q");
                        units += 1;
                    }
                    (None, Witness::NotAUnit { resultant }) => {
                        ensure!(!verdict.is_unit, "{f} n={n} a={a}: unit without certificate");
                        ensure!(!resultant.abs().is_one(), "{f} n={n} a={a}: NotAUnit with |res| = 1");
                        non_units += 1;
                    }
                    _ => return Err(format!("{f} n={n} a={a}: verdict and witness disagree")),
                }
            }
        }
    }
    Ok(format!("{units} certified units, {non_units} rejected non-units"))
}

/// 8. Two constructions of Φ_m agree, deg Φ_m = φ(m), ∏_{d|m} Φ_d = X^m − 1,
///    all for m ≤ 200; Φ105 has X^7 coefficient −2.
fn cyclotomic_engine() -> Outcome {
    for m in 1..=200u64 {
        let p = phi(m);
        ensure!(p == cyclotomic_mobius(m).unwrap(), "Φ{m}: constructions differ");
        ensure!(p.degree() == Some(euler_phi(m).unwrap() as usize), "Φ{m}: degree");
        let product = divisors(m).unwrap().into_iter().fold(IntPoly::one(), |acc, d| &acc * &phi(d));
        ensure!(product == IntPoly::binomial(m as usize, &BigInt::one()), "∏ Φ_d ≠ X^{m} − 1");
    }
    let c7 = phi(105).coeff(7);
    ensure!(c7 == BigInt::from(-2), "Φ105 X^7 coefficient is {c7}");
    Ok("m ≤ 200, Φ105[x^7] = -2".into())
}

/// 9. Documented CLI invocations byte-for-byte, plus exit codes.
fn cli_contract() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_cyclounits");
    let run = |args: &[&str]| {
        let out = Command::new(bin).args(args).output().unwrap();
        (out.status.code(), String::from_utf8(out.stdout).unwrap(), out.stderr)
    };
    let golden: [(&[&str], &str); 3] = [
        (&["check", "--n", "5", "--a", "1", "x^2-x+1"], "unit=true n=5 a=1 resultant=1\n"),
        (&["generic", "x^2+1"], "generic=false offenders=4\n"),
        (&["classify", "--a", "-2", "x+1"], "class=infinite modulus=2 residues=1\n"),
    ];
    for (args, expected) in golden {
        let (code, out, _) = run(args);
        ensure!(code == Some(0) && out == expected, "{args:?}: exit {code:?}, output {out:?}");
    }
    let errors: [(&[&str], i32); 4] = [
        (&["check", "--n", "5", "--a", "0", "x+1"], 2),
        (&["check", "--n", "5", "--a", "1", "0"], 2),
        (&["check", "--n", "5", "--a", "1", "x^-1"], 1),
        (&["check", "--n", "5", "--a", "1", "(x+"], 1),
    ];
    for (args, expected) in errors {
        let (code, out, err) = run(args);
        ensure!(code == Some(expected), "{args:?}: exit {code:?}, expected {expected}");
        ensure!(out.is_empty() && !err.is_empty(), "{args:?}: diagnostics on wrong stream");
    }
    Ok("3 golden invocations, 4 error exits".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1", "Φ_m(a) = ±1 table, both directions", phi_value_table, Some(10)),
        ("AC2", "cyclotomic unit criterion vs resultants", cyclotomic_criterion, Some(60)),
        ("AC3", "generic units on coprime orders", generic_evidence, None),
        ("AC4", "infinitude case coverage", infinitude_cases, None),
        ("AC5", "finite unit sets and count bound", finite_sets, None),
        ("AC6", "resultant vs determinant oracle", oracle_equivalence, None),
        ("AC7", "Bezout certificate suite", certificate_suite, None),
        ("AC8", "cyclotomic engine", cyclotomic_engine, None),
        ("AC9", "CLI golden fixtures and exit codes", cli_contract, None),
    ];
    let mut failed = 0;
    for (id, name, check, budget) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        let outcome = match (outcome, budget) {
            (Ok(_), Some(limit)) if secs >= limit as f64 => {
                Err(format!("took {secs:.2}s, budget {limit}s"))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("[PASS] {id} {name}: {detail} ({secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id} {name}: {why} ({secs:.2}s)");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
