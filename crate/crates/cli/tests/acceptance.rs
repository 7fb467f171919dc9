//! Acceptance gate: one check per shipped guarantee, each printed as a
//! single pass/fail line (visible with `--nocapture`). The checks cover
//! the exact height identity, monotonicity, unit-circle exclusion,
//! coronal fixtures and powers, stretch-factor consistency, PSL(2,Z)
//! round trips, four-punctured-sphere realizability, byte-level CLI
//! determinism, and the palindromic sampling experiment.

use std::fmt::Write as _;
use std::process::Command;
use std::time::{Duration, Instant};

use coronal_core::{
    coronal_power_check, coronal_verdict, count_unit_circle_roots, dehn_twist_word_to_lr, lr_word,
    lr_word_with_conjugator, random_admissible_word, random_intersection, random_rational_vector,
    reconstruct, run_recip, run_scan, BigInt, BigRational, HeightForm, IntPolynomial, LRWord,
    ModelSurface, PSL2ZElement, ScanConfig, ScanRecord, TrialRng,
};
use num_traits::{One, Zero};

type Verdict = Result<String, String>;

fn rat(num: i64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn tol() -> BigRational {
    rat(1, 1_000_000_000_000)
}

/// Criterion 1: h(Q_i v) - h(v) = |Q_i v - v|^2 exactly, on 1,000 random
/// (Ω, i, v) with n+m <= 8 and entry numerators/denominators <= 100.
fn c1_height_identity() -> Verdict {
    let start = Instant::now();
    for trial in 0..1000u64 {
        let mut rng = TrialRng::new(0xA1, trial);
        let ix = random_intersection(&mut rng, 8, 5, false).map_err(|e| e.to_string())?;
        let index = 1 + rng.below(ix.dim() as u64) as usize;
        let v = random_rational_vector(&mut rng, ix.dim(), 100);
        let residual = HeightForm::new(&ix)
            .height_identity_residual(index, &v)
            .map_err(|e| e.to_string())?;
        if !residual.is_zero() {
            return Err(format!(
                "nonzero residual {residual} at trial {trial} (index {index})"
            ));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(10) {
        return Err(format!("exceeded 10s budget: {elapsed:.2?}"));
    }
    Ok(format!("1000 exact-zero residuals in {elapsed:.2?}"))
}

/// Criterion 2: h(Mv) >= h(v) for 1,000 random admissible words, with
/// equality exactly when Mv = v; the fixed side is recomputed through the
/// word matrix as a second route.
fn c2_monotonicity() -> Verdict {
    let mut equalities = 0u32;
    for trial in 0..1000u64 {
        let mut rng = TrialRng::new(0xA2, trial);
        let ix = random_intersection(&mut rng, 8, 3, true).map_err(|e| e.to_string())?;
        let word = random_admissible_word(&mut rng, ix.dim(), 20).map_err(|e| e.to_string())?;
        // Trial 0 checks the equality branch with a kernel vector; the
        // 3-chain has (1,-1,0) in the kernel of Ω, so every twist fixes it.
        let (ix, word, v) = if trial == 0 {
            let chain = coronal_core::IntersectionMatrix::new_strict(
                2,
                1,
                coronal_core::IntMatrix::from_i64(3, 3, &[0, 0, 1, 0, 0, 1, 1, 1, 0]),
            )
            .map_err(|e| e.to_string())?;
            let w: coronal_core::TwistWord = "1,2,3"
                .parse()
                .map_err(|e: coronal_core::CoreError| e.to_string())?;
            let v = vec![BigRational::one(), -BigRational::one(), BigRational::zero()];
            (chain, w, v)
        } else {
            let v = random_rational_vector(&mut rng, ix.dim(), 50);
            (ix, word, v)
        };
        let form = HeightForm::new(&ix);
        let check = form
            .monotonicity_check(&word, &v)
            .map_err(|e| e.to_string())?;
        if !check.satisfies_monotonicity() {
            return Err(format!("monotonicity violated at trial {trial}"));
        }
        // Independent fixed-point route: multiply by the word matrix.
        let m = ix.word_matrix(&word).map_err(|e| e.to_string())?;
        let fixed_by_matrix = (0..ix.dim()).all(|i| {
            let mut acc = BigRational::zero();
            for (j, vj) in v.iter().enumerate() {
                acc += BigRational::from_integer(m[(i, j)].clone()) * vj;
            }
            acc == v[i]
        });
        if fixed_by_matrix != check.fixed {
            return Err(format!("fixed-point routes disagree at trial {trial}"));
        }
        if (check.h_after == check.h_before) != check.fixed {
            return Err(format!("equality without fixed vector at trial {trial}"));
        }
        if check.fixed {
            equalities += 1;
        }
    }
    if equalities == 0 {
        return Err("equality branch never exercised".into());
    }
    Ok(format!("1000 words, {equalities} exact equality case(s)"))
}

/// Criterion 3: certified unit-circle exclusion on 1,000 random
/// (Ω, admissible word) pairs with n+m <= 8, |word| <= 20, inside 5
/// minutes, by exact Sturm counting.
fn c3_unit_circle_exclusion() -> Result<(Vec<ScanRecord>, String), String> {
    let start = Instant::now();
    let config = ScanConfig {
        seed: 0xA3,
        trials: 1000,
        max_dim: 8,
        max_word_len: 20,
        max_intersection: 3,
        strict_mode: true,
        tolerance: tol(),
    };
    let result = run_scan(&config, true).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if result.failed() {
        return Err(format!(
            "{} certificate violations",
            result.summary.violations_found
        ));
    }
    for r in &result.records {
        if r.roots_at_minus_one != 0 || r.conjugate_pairs_on_circle != 0 {
            return Err(format!(
                "circle eigenvalue other than 1 at trial {}",
                r.trial
            ));
        }
        if !r.word.is_admissible(r.omega.dim()) || r.word.len() > 20 || r.omega.dim() > 8 {
            return Err(format!("sampled outside bounds at trial {}", r.trial));
        }
    }
    if elapsed > Duration::from_secs(300) {
        return Err(format!("exceeded 5min budget: {elapsed:.2?}"));
    }
    let msg = format!(
        "1000 certificates clean in {elapsed:.2?}, max on-circle count {}",
        result.summary.max_on_circle
    );
    Ok((result.records, msg))
}

/// Criterion 4: fixture verdicts with isolated stretch factors.
fn c4_coronal_fixtures() -> Verdict {
    struct Fixture {
        coeffs: &'static [i64],
        expected: bool,
        root: Option<(f64, usize)>,
    }
    let width_bound = rat(1, 1_000_000_000);
    let cases = [
        Fixture {
            coeffs: &[1, -1, -1, -1, 1],
            expected: true,
            root: Some((1.7220838057390422, 2)),
        },
        Fixture {
            coeffs: &[1, -2, 0, -2, 1],
            expected: true,
            root: Some((2.2966302628865383, 2)),
        },
        Fixture {
            coeffs: &[1, -3, 1],
            expected: false,
            root: None,
        },
    ];
    for Fixture {
        coeffs,
        expected,
        root,
    } in cases
    {
        let p = IntPolynomial::from_i64(coeffs);
        let verdict = coronal_verdict(&p, &tol()).map_err(|e| e.to_string())?;
        if verdict.coronal != expected {
            return Err(format!(
                "{p}: coronal = {}, expected {expected}",
                verdict.coronal
            ));
        }
        if let Some((lambda, on_circle)) = root {
            if verdict.on_circle_count != on_circle {
                return Err(format!(
                    "{p}: {} conjugates on the circle, expected {on_circle}",
                    verdict.on_circle_count
                ));
            }
            if verdict.lambda_interval.width() > width_bound {
                return Err(format!("{p}: interval wider than 1e-9"));
            }
            let mid = verdict.lambda_interval.midpoint_f64();
            if (mid - lambda).abs() > 1e-9 {
                return Err(format!("{p}: interval at {mid}, expected near {lambda}"));
            }
        }
    }
    Ok("3 fixtures, intervals within 1e-9".into())
}

/// Criterion 5: coronality of powers for k in {2, 3, 5}.
fn c5_powers() -> Verdict {
    for k in [2u32, 3, 5] {
        for coeffs in [&[1i64, -1, -1, -1, 1][..], &[1, -2, 0, -2, 1][..]] {
            let p = IntPolynomial::from_i64(coeffs);
            let (base, power) = coronal_power_check(&p, k, &tol()).map_err(|e| e.to_string())?;
            if !base.coronal || !power.coronal {
                return Err(format!(
                    "{p} power {k}: expected coronal for base and power"
                ));
            }
        }
        let golden = IntPolynomial::from_i64(&[1, -3, 1]);
        let (base, power) = coronal_power_check(&golden, k, &tol()).map_err(|e| e.to_string())?;
        if base.coronal || power.coronal {
            return Err(format!("{golden} power {k}: expected not coronal"));
        }
    }
    Ok("k in {2,3,5} for both quartics and the quadratic".into())
}

/// Criterion 6: no characteristic polynomial from the scan is coronal.
fn c6_main_theorem_consistency(records: &[ScanRecord]) -> Verdict {
    for r in records {
        let verdict = coronal_verdict(&r.char_poly, &tol()).map_err(|e| e.to_string())?;
        if verdict.coronal {
            return Err(format!(
                "trial {}: coronal characteristic polynomial {}",
                r.trial, r.char_poly
            ));
        }
    }
    Ok(format!(
        "{} stretch-factor polynomials, none coronal",
        records.len()
    ))
}

/// Criterion 7: reconstruct(lr_word(g)) = g for 1,000 positive mixed
/// words of length <= 30, plus cyclic invariance under conjugation.
fn c7_farey_round_trip() -> Verdict {
    for trial in 0..1000u64 {
        let mut rng = TrialRng::new(0xA7, trial);
        let len = 2 + rng.below(29) as usize;
        let mut letters: Vec<char> = (0..len - 2)
            .map(|_| if rng.below(2) == 0 { 'L' } else { 'R' })
            .collect();
        // Plant one of each so the word is mixed (hence hyperbolic).
        letters.insert(rng.below(letters.len() as u64 + 1) as usize, 'L');
        letters.insert(rng.below(letters.len() as u64 + 1) as usize, 'R');
        let word = LRWord::new(&letters.iter().collect::<String>()).map_err(|e| e.to_string())?;

        let g = reconstruct(&word);
        let peeled = lr_word(&g).map_err(|e| e.to_string())?;
        if peeled.as_str() != word.as_str() {
            return Err(format!("trial {trial}: {word} peeled to {peeled}"));
        }

        // Conjugate by a short random element and compare cyclic classes.
        let mut u = PSL2ZElement::identity();
        for _ in 0..rng.below(8) {
            let step = match rng.below(4) {
                0 => PSL2ZElement::l(),
                1 => PSL2ZElement::r(),
                2 => PSL2ZElement::l().inverse(),
                _ => PSL2ZElement::r().inverse(),
            };
            u = u.mul(&step);
        }
        let conjugated = u.mul(&g).mul(&u.inverse());
        let dec = lr_word_with_conjugator(&conjugated).map_err(|e| e.to_string())?;
        if dec.word.canonical_rotation().as_str() != word.canonical_rotation().as_str() {
            return Err(format!(
                "trial {trial}: conjugation changed the cycle to {}",
                dec.word
            ));
        }
        let rebuilt = dec
            .conjugator
            .mul(&dec.word.matrix())
            .mul(&dec.conjugator.inverse());
        if rebuilt != conjugated {
            return Err(format!(
                "trial {trial}: conjugator does not rebuild the input"
            ));
        }
    }
    Ok("1000 exact round trips with conjugation invariance".into())
}

/// Criterion 8: realizability of twist-word images on the
/// four-punctured sphere, with rotation and power invariance.
fn c8_four_punctured_sphere() -> Verdict {
    let rotations = |w: &str| -> Vec<String> {
        (0..w.len())
            .map(|k| format!("{}{}", &w[k..], &w[..k]))
            .collect()
    };
    let check_invariance = |w: &LRWord, expected: bool| -> Result<(), String> {
        for rot in rotations(w.as_str()) {
            let r = LRWord::new(&rot).map_err(|e| e.to_string())?;
            if r.four_puncture_realizable() != expected {
                return Err(format!("rotation {rot} of {w} flipped the verdict"));
            }
        }
        for k in 2..=3usize {
            let p = LRWord::new(&w.as_str().repeat(k)).map_err(|e| e.to_string())?;
            if p.four_puncture_realizable() != expected {
                return Err(format!("power {k} of {w} flipped the verdict"));
            }
        }
        Ok(())
    };

    for trial in 0..200u64 {
        let mut rng = TrialRng::new(0xA8, trial);
        let len = 2 + rng.below(11) as usize;
        let mut letters: Vec<usize> = (0..len - 2).map(|_| 1 + rng.below(2) as usize).collect();
        letters.insert(rng.below(letters.len() as u64 + 1) as usize, 1);
        letters.insert(rng.below(letters.len() as u64 + 1) as usize, 2);
        let word = coronal_core::TwistWord::new(letters);
        let image = dehn_twist_word_to_lr(&word, ModelSurface::FourPuncturedSphere)
            .map_err(|e| e.to_string())?;
        if !image.four_puncture_realizable() {
            return Err(format!("trial {trial}: image {image} not realizable"));
        }
        check_invariance(&image, true)?;
    }
    for fixture in ["RL", "RRRLL"] {
        let w = LRWord::new(fixture).map_err(|e| e.to_string())?;
        if w.four_puncture_realizable() {
            return Err(format!("{fixture} should not be realizable"));
        }
        check_invariance(&w, false)?;
    }
    Ok("200 images realizable, fixtures rejected, invariances hold".into())
}

/// Criterion 9: scan and recip output files are byte-identical across
/// repeat runs and across serial vs parallel execution.
fn c9_cli_determinism() -> Verdict {
    let dir = std::env::temp_dir();
    let unique = format!("coronal-acceptance-{}", std::process::id());
    let run = |name: &str, args: &[&str], parallel: bool| -> Result<Vec<Vec<u8>>, String> {
        let path = dir.join(format!("{unique}-{name}.json"));
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_coronal"));
        cmd.args(args).arg("--out").arg(&path);
        if parallel {
            cmd.arg("--parallel");
        }
        let out = cmd.output().map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("{name}: {}", String::from_utf8_lossy(&out.stderr)));
        }
        let mut files = vec![std::fs::read(&path).map_err(|e| e.to_string())?];
        let csv = path.with_extension("csv");
        if csv.exists() {
            files.push(std::fs::read(&csv).map_err(|e| e.to_string())?);
            let _ = std::fs::remove_file(&csv);
        }
        let _ = std::fs::remove_file(&path);
        Ok(files)
    };

    let scan_args = [
        "scan",
        "--seed",
        "42",
        "--trials",
        "40",
        "--max-dim",
        "6",
        "--max-word-len",
        "12",
        "--strict",
    ];
    let a = run("scan-a", &scan_args, false)?;
    let b = run("scan-b", &scan_args, false)?;
    let c = run("scan-c", &scan_args, true)?;
    if a != b || a != c {
        return Err("scan outputs differ across runs or execution modes".into());
    }

    let recip_args = [
        "recip",
        "--degree",
        "8",
        "--bound",
        "3",
        "--samples",
        "500",
        "--seed",
        "9",
    ];
    let d = run("recip-a", &recip_args, false)?;
    let e = run("recip-b", &recip_args, false)?;
    let f = run("recip-c", &recip_args, true)?;
    if d != e || d != f {
        return Err("recip outputs differ across runs or execution modes".into());
    }
    Ok("scan and recip byte-identical (rerun and parallel)".into())
}

/// Criterion 10: the sampling experiment runs 10,000 degree-10 samples
/// inside 60 s and reports a fraction; the exhaustive degree-2 case
/// reports exactly 1, cross-checked by direct enumeration.
fn c10_recip_experiment() -> Verdict {
    let start = Instant::now();
    let result = run_recip(10, 3, 10_000, 314159, false).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        return Err(format!("exceeded 60s budget: {elapsed:.2?}"));
    }
    if result.with_circle_root > result.samples {
        return Err("fraction above 1".into());
    }

    // All valid (a0, a1) with a0 in {-1,1}, a1 in {-1,0,1}: every such
    // quadratic palindrome has its conjugate pair on the circle.
    let mut enumerated = 0u32;
    for a0 in [-1i64, 1] {
        for a1 in [-1i64, 0, 1] {
            let p = IntPolynomial::from_i64(&[a0, a1, a0]);
            let count = count_unit_circle_roots(&p).map_err(|e| e.to_string())?;
            if count.total_distinct == 0 {
                return Err(format!("{p} has no circle root"));
            }
            enumerated += 1;
        }
    }
    if enumerated != 6 {
        return Err("degree-2 enumeration incomplete".into());
    }
    let sampled = run_recip(2, 1, 729, 1, false).map_err(|e| e.to_string())?;
    if sampled.fraction != "1" {
        return Err(format!(
            "degree-2 fraction {} instead of 1",
            sampled.fraction
        ));
    }
    Ok(format!(
        "10000 degree-10 samples in {elapsed:.2?}, fraction {}; degree-2 fraction exactly 1",
        result.fraction
    ))
}

#[test]
fn acceptance_criteria() {
    let mut failures: Vec<String> = Vec::new();
    let mut report = String::new();

    let mut record = |name: &str, verdict: Verdict| {
        let line = match verdict {
            Ok(detail) => format!("criterion {name}: PASS ({detail})"),
            Err(detail) => {
                let line = format!("criterion {name}: FAIL ({detail})");
                failures.push(line.clone());
                line
            }
        };
        println!("{line}");
        writeln!(report, "{line}").unwrap();
    };

    record("1 (height identity)", c1_height_identity());
    record("2 (monotonicity)", c2_monotonicity());
    let records = match c3_unit_circle_exclusion() {
        Ok((records, msg)) => {
            record("3 (unit-circle exclusion)", Ok(msg));
            records
        }
        Err(e) => {
            record("3 (unit-circle exclusion)", Err(e));
            Vec::new()
        }
    };
    record("4 (coronal fixtures)", c4_coronal_fixtures());
    record("5 (coronal powers)", c5_powers());
    if records.is_empty() {
        record(
            "6 (stretch factors not coronal)",
            Err("no scan records available".into()),
        );
    } else {
        record(
            "6 (stretch factors not coronal)",
            c6_main_theorem_consistency(&records),
        );
    }
    record("7 (LR word round trip)", c7_farey_round_trip());
    record("8 (four-punctured sphere)", c8_four_punctured_sphere());
    record("9 (output determinism)", c9_cli_determinism());
    record("10 (palindromic sampling)", c10_recip_experiment());

    assert!(failures.is_empty(), "\n{report}");
}
