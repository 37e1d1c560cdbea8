//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

use std::time::{Duration, Instant};

use ulrich_core::ci::{self, CIConfig, Reason, Verdict};
use ulrich_core::closed_forms;
use ulrich_core::report::Report;
use ulrich_core::symfunc::{expand_direct, sample_symmetric, verify_tf2_bis, verify_tf2_table};
use ulrich_core::ulrich::{
    build_f, decreasing_tuples, verify_cg_induction, verify_cg_scan, verify_gl1, verify_gl2, verify_gl4,
    verify_tf0, verify_tf1, RM_PAIRS,
};
use ulrich_core::{Rational, Result};

type Criterion = fn() -> Result<Outcome>;

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Outcome { passed, detail: detail.into() }
    }
}

/// Folds a batch of reports into a pass flag and a short failure note.
fn all_pass(reports: &[Report]) -> (bool, String) {
    match reports.iter().find(|r| !r.passed()) {
        None => {
            let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
            (true, format!("{} reports, {checks} checks", reports.len()))
        }
        Some(r) => (false, format!("{} {} failed: {:?}", r.lemma, r.parameters, r.witness)),
    }
}

fn within(elapsed: Duration, limit: Duration) -> bool {
    elapsed < limit
}

fn tf2_products() -> Result<Outcome> {
    let start = Instant::now();
    let reports = (4..=8).map(verify_tf2_table).collect::<Result<Vec<_>>>()?;
    let elapsed = start.elapsed();
    let (ok, detail) = all_pass(&reports);
    let per = reports.iter().all(|r| r.checks.len() == 13);
    Ok(Outcome::new(
        ok && per && within(elapsed, Duration::from_secs(1)),
        format!("{detail}; {elapsed:.2?} (limit 1s)"),
    ))
}

fn tf2_substitutions() -> Result<Outcome> {
    let reports = (5..=8)
        .map(|s| verify_tf2_bis(s, &sample_symmetric(s, 100, 1000 + s as u64)))
        .collect::<Result<Vec<_>>>()?;
    let (ok, detail) = all_pass(&reports);
    Ok(Outcome::new(ok, format!("{detail}; 100 random samples per s")))
}

fn tf0_tf1() -> Result<Outcome> {
    let mut reports = Vec::new();
    for s in 1..=6 {
        reports.push(verify_tf0(s)?);
        reports.push(verify_tf1(s)?);
    }
    let start = Instant::now();
    reports.push(verify_tf0(7)?);
    reports.push(verify_tf1(7)?);
    let elapsed = start.elapsed();
    let (ok, detail) = all_pass(&reports);
    Ok(Outcome::new(
        ok && within(elapsed, Duration::from_secs(30)),
        format!("{detail}; s = 7 in {elapsed:.2?} (limit 30s)"),
    ))
}

fn gl1() -> Result<Outcome> {
    let reports = (4..=8).map(verify_gl1).collect::<Result<Vec<_>>>()?;
    let (ok, detail) = all_pass(&reports);
    // constant terms of the s = 4 quotients, recomputed from the built functions
    let forms = [closed_forms::F_2_0, closed_forms::F_3_0, closed_forms::F_3_1];
    let mut constants = Vec::new();
    for ((r, m), form) in RM_PAIRS.into_iter().zip(forms) {
        let quotient = build_f(4, r, m)?.divide_all_vars()?.scale(&form.prefactor().recip()?);
        constants.push(expand_direct(&quotient)?.coeffs[11].clone());
    }
    let want = [27861, 681768, 865128].map(Rational::from);
    let consts_ok = constants == want;
    let shown: Vec<String> = constants.iter().map(Rational::to_string).collect();
    Ok(Outcome::new(ok && consts_ok, format!("{detail}; s = 4 constants {}", shown.join(", "))))
}

fn gl2() -> Result<Outcome> {
    let reports = (4..=8).map(verify_gl2).collect::<Result<Vec<_>>>()?;
    let (ok, detail) = all_pass(&reports);
    Ok(Outcome::new(ok, detail))
}

fn gl4() -> Result<Outcome> {
    let reports = (4..=8).map(verify_gl4).collect::<Result<Vec<_>>>()?;
    let (ok, detail) = all_pass(&reports);
    Ok(Outcome::new(ok, detail))
}

fn cg() -> Result<Outcome> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(4).build().expect("thread pool");
    let start = Instant::now();
    let scan = pool.install(|| verify_cg_scan(6, 6, &[8, 9]))?;
    let elapsed = start.elapsed();
    let mut reports = vec![scan];
    for s in 2..=6 {
        for b in [8, 9] {
            reports.push(verify_cg_induction(s, b, 6)?);
        }
    }
    let tuples = reports[0].summary["tuples_checked"].as_u64().unwrap_or(0);
    let (ok, detail) = all_pass(&reports);
    Ok(Outcome::new(
        ok && tuples > 0 && within(elapsed, Duration::from_secs(10)),
        format!("{detail}; {tuples} tuples scanned in {elapsed:.2?} (limit 10s)"),
    ))
}

fn cross_routes() -> Result<Outcome> {
    let mut compared = 0;
    let mut failure = None;
    for s in 1..=5 {
        let fs: Vec<_> = RM_PAIRS.iter().map(|&(r, m)| build_f(s, r, m)).collect::<Result<_>>()?;
        for t in decreasing_tuples(s, 4) {
            if t.iter().product::<i64>() < 2 {
                continue;
            }
            for r in [2, 3] {
                let cfg = CIConfig::new(4, t.clone(), r)?;
                if ci::deg_z(&cfg) != ci::deg_z_general(&cfg) {
                    failure.get_or_insert(format!("deg at {t:?}, r = {r}"));
                }
                compared += 1;
            }
            for (&(r, m), f) in RM_PAIRS.iter().zip(&fs) {
                let cfg = CIConfig::new(4, t.clone(), r)?;
                if ci::parity_obstruction(&cfg) {
                    continue;
                }
                if ci::chi_oz(&cfg, m)? != f.eval_int(&t)? {
                    failure.get_or_insert(format!("chi at {t:?}, r = {r}, m = {m}"));
                }
                compared += 1;
            }
        }
    }
    Ok(match failure {
        None => Outcome::new(true, format!("{compared} comparisons")),
        Some(f) => Outcome::new(false, format!("mismatch: {f}")),
    })
}

fn certifier() -> Result<Outcome> {
    let mut failures = Vec::new();
    let quadric = ci::certify(&CIConfig::new(4, vec![2], 2)?)?;
    if quadric.verdict != Verdict::Excluded {
        failures.push("quadric fourfold, r = 2".to_string());
    }
    for r in [2, 3] {
        if ci::certify(&CIConfig::new(4, vec![2, 2], r)?)?.verdict != Verdict::Excluded {
            failures.push(format!("(2,2) fourfold, r = {r}"));
        }
    }
    let mut count = 0;
    for n in 4..=8 {
        for s in 1..=4 {
            for t in decreasing_tuples(s, 5) {
                if t.iter().any(|&d| d < 2) || (n == 4 && (t == [2] || t == [2, 2])) {
                    continue;
                }
                for r in [2, 3] {
                    let cert = ci::certify(&CIConfig::new(n, t.clone(), r)?)?;
                    count += 1;
                    let positive = cert.witnesses.first().is_some_and(|w| w.value.is_positive());
                    if cert.verdict != Verdict::NonExistence || !positive {
                        failures.push(format!("n = {n}, {t:?}, r = {r}"));
                    }
                }
            }
        }
    }
    for n in 5..=8 {
        let cert = ci::certify(&CIConfig::new(n, vec![2], 2)?)?;
        let ok = cert.reason == Reason::QPositivity && cert.witnesses[0].value == Rational::from(180);
        if !ok {
            failures.push(format!("witness at n = {n}, (2), r = 2"));
        }
    }
    Ok(Outcome::new(
        failures.is_empty(),
        if failures.is_empty() {
            format!("{count} certificates plus exceptions; witness 180 for the quadric with n >= 5")
        } else {
            format!("failed: {}", failures.join("; "))
        },
    ))
}

fn hypersurface_count() -> Result<Outcome> {
    let mut failures = Vec::new();
    for d in 2..=30 {
        if ci::hyper3_dimension_check(3, d)?.contradiction != (d >= 6) {
            failures.push(format!("n = 3, d = {d}"));
        }
        if ci::hyper3_dimension_check(4, d)?.contradiction != (d >= 3) {
            failures.push(format!("n = 4, d = {d}"));
        }
    }
    let edge = ci::hyper3_dimension_check(4, 2)?;
    if (edge.lhs, edge.rhs) != (23, 23) {
        failures.push(format!("(4, 2) gives {} vs {}", edge.lhs, edge.rhs));
    }
    for n in 2..=4 {
        for d in 2..=10 {
            let res = ci::hypersurface_resolution(n, d)?;
            let want = Rational::from((2 * d - 1) * ((n + 2) * (d - 1) - 2 * d + 1));
            if res.h0_ideal != Rational::from(2 * d - 1)
                || res.h0_normal != want
                || res.h0_normal_closed != want
            {
                failures.push(format!("resolution at n = {n}, d = {d}"));
            }
        }
    }
    Ok(Outcome::new(
        failures.is_empty(),
        if failures.is_empty() {
            "thresholds n = 3: d >= 6, n = 4: d >= 3; (4,2) at 23 = 23".into()
        } else {
            failures.join("; ")
        },
    ))
}

fn hilbert_difference() -> Result<Outcome> {
    let mut failures = Vec::new();
    for d in 2..=10 {
        let want = Rational::frac(d * (2 * d - 1) * (d - 1), 6);
        if ci::deg_z(&CIConfig::new(4, vec![d], 2)?) != want {
            failures.push(format!("deg at d = {d}"));
        }
        for m in [-5, 0, 7, 40] {
            if ci::hypersurface_hilb_difference(4, d, 2, m)? != want {
                failures.push(format!("difference at d = {d}, m = {m}"));
            }
        }
    }
    Ok(Outcome::new(
        failures.is_empty(),
        if failures.is_empty() { "d = 2..10".into() } else { failures.join("; ") },
    ))
}

fn main() {
    let criteria: [(&str, Criterion); 11] = [
        ("products of monomial symmetric functions, s = 4..8", tf2_products),
        ("substitution identities and expansion methods, s = 5..8", tf2_substitutions),
        ("symmetry, divisibility and restriction of f, s = 1..7", tf0_tf1),
        ("expansion coefficients of f/x1..xs, s = 4..8", gl1),
        ("derived expansions g4, delta, h, k, c, chi', s = 4..8", gl2),
        ("Noether gaps equal m_1s*q/4320 and m_1s*q/3840, s = 4..8", gl4),
        ("positivity scan and induction for q_{s,8}, q_{s,9}", cg),
        ("degree and Euler characteristic cross-routes", cross_routes),
        ("certifier verdicts and witnesses", certifier),
        ("hypersurface dimension count and resolution", hypersurface_count),
        ("second difference of the Hilbert polynomial", hilbert_difference),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run().unwrap_or_else(|e| Outcome::new(false, format!("error: {e}")));
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        if !outcome.passed {
            failed += 1;
        }
        println!("criterion {:>2}: {status}  {name}  [{}; {:.2?}]", i + 1, outcome.detail, start.elapsed());
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
