use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use ulrich_core::ci::{self, CIConfig, Certificate, Verdict};
use ulrich_core::report::Report;
use ulrich_core::symfunc::{sample_symmetric, verify_tf2_bis, verify_tf2_table};
use ulrich_core::ulrich::{
    decreasing_tuples, q_value, scan_q, verify_cg_induction, verify_cg_scan, verify_gl1, verify_gl2,
    verify_gl4, verify_tf0, verify_tf1,
};
use ulrich_core::Rational;

use crate::range::IntRange;

/// What a subcommand produced: the structured result, its text rendering and
/// the exit code.
pub struct Outcome {
    pub result: Value,
    pub text: String,
    pub exit: u8,
}

/// Input the command rejected; maps to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<Outcome, UsageError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Tf0,
    Tf1,
    Tf2,
    Tf2bis,
    Gl1,
    Gl2,
    Gl4,
    Cg,
}

impl Suite {
    const EACH: [Suite; 8] =
        [Suite::Tf0, Suite::Tf1, Suite::Tf2, Suite::Tf2bis, Suite::Gl1, Suite::Gl2, Suite::Gl4, Suite::Cg];

    fn name(self) -> String {
        clap::ValueEnum::to_possible_value(&self).map_or_else(String::new, |v| v.get_name().to_string())
    }

    /// Smallest admissible `s` and the default upper bound.
    fn s_bounds(self) -> (i64, i64) {
        match self {
            Suite::Tf0 | Suite::Tf1 | Suite::Gl2 => (1, 6),
            Suite::Tf2 | Suite::Gl1 | Suite::Gl4 => (4, 6),
            Suite::Tf2bis => (5, 6),
            Suite::Cg | Suite::All => (2, 6),
        }
    }
}

pub struct VerifyArgs {
    pub suite: Suite,
    pub s: Option<IntRange>,
    pub s_max: Option<i64>,
    pub d_max: i64,
    pub samples: usize,
    pub seed: u64,
}

pub fn verify(args: &VerifyArgs) -> CmdResult {
    const S_LIMIT: i64 = 11;
    if let Some(r) = args.s {
        if r.end > S_LIMIT {
            return Err(UsageError(format!("s up to {S_LIMIT} supported, got {r}")));
        }
    }
    if args.d_max < 2 {
        return Err(UsageError("--d-max must be at least 2".into()));
    }
    let suites: Vec<Suite> = match args.suite {
        Suite::All => Suite::EACH.to_vec(),
        one => vec![one],
    };
    let mut reports: Vec<Report> = Vec::new();
    for suite in suites {
        let (lo, hi) = suite.s_bounds();
        if suite == Suite::Cg {
            let s_max = args.s_max.or(args.s.map(|r| r.end)).unwrap_or(hi);
            if !(2..=S_LIMIT).contains(&s_max) {
                return Err(UsageError(format!("--s-max must lie in 2..{S_LIMIT}, got {s_max}")));
            }
            reports.push(verify_cg_scan(s_max as usize, args.d_max, &[8, 9])?);
            for s in 2..=s_max as usize {
                for b in [8, 9] {
                    reports.push(verify_cg_induction(s, b, args.d_max)?);
                }
            }
            continue;
        }
        let range = match args.s {
            Some(r) if args.suite != Suite::All => {
                if r.start < lo {
                    return Err(UsageError(format!("suite {} needs s >= {lo}, got {r}", suite.name())));
                }
                r
            }
            Some(r) => match r.clamp(lo, S_LIMIT) {
                Some(c) => c,
                None => continue,
            },
            None => IntRange::new(lo, hi),
        };
        for s in range.iter().map(|s| s as usize) {
            reports.push(match suite {
                Suite::Tf0 => verify_tf0(s)?,
                Suite::Tf1 => verify_tf1(s)?,
                Suite::Tf2 => verify_tf2_table(s)?,
                Suite::Tf2bis => {
                    verify_tf2_bis(s, &sample_symmetric(s, args.samples, args.seed.wrapping_add(s as u64)))?
                }
                Suite::Gl1 => verify_gl1(s)?,
                Suite::Gl2 => verify_gl2(s)?,
                Suite::Gl4 => verify_gl4(s)?,
                Suite::Cg | Suite::All => unreachable!(),
            });
        }
    }

    let all_pass = reports.iter().all(Report::passed);
    let mut text = String::new();
    for r in &reports {
        let _ = writeln!(
            text,
            "{:<14} {:<28} {}/{} {}",
            r.lemma,
            r.parameters.to_string(),
            r.passed_count(),
            r.checks.len(),
            if r.passed() { "PASS" } else { "FAIL" }
        );
        if let Some(w) = &r.witness {
            let _ = writeln!(text, "    first failure: {w}");
        }
        if let Some(t) = r.summary.get("tuples_checked") {
            let _ = writeln!(text, "    tuples checked: {t}");
        }
    }
    let _ = writeln!(text, "{}", if all_pass { "all identities hold" } else { "some identities FAILED" });
    Ok(Outcome {
        result: json!({ "suite": args.suite, "passed": all_pass, "reports": reports }),
        text,
        exit: if all_pass { 0 } else { 1 },
    })
}

#[derive(Serialize)]
struct InvariantRow {
    m: i64,
    chi_ox: Rational,
    chi_oz: Option<Rational>,
    chi_oz_general: Option<Rational>,
    chi_e: Rational,
}

pub fn invariants(cfg: &CIConfig, m_range: Option<IntRange>) -> CmdResult {
    let m_range = m_range.unwrap_or(IntRange::new(-cfg.n, cfg.n));
    let u = ci::det_twist(cfg);
    let parity = ci::parity_obstruction(cfg);
    let deg = ci::deg_z(cfg);
    let deg_general = ci::deg_z_general(cfg);
    let e = ci::c2e_coeff(cfg);
    let rows: Vec<InvariantRow> = m_range
        .iter()
        .map(|m| InvariantRow {
            m,
            chi_ox: ci::chi_ox(cfg, m),
            chi_oz: ci::chi_oz(cfg, m).ok(),
            chi_oz_general: ci::chi_oz_general(cfg, m).ok(),
            chi_e: ci::chi_e(cfg, m),
        })
        .collect();
    let ulrich_vanishing = (1..=cfg.n).all(|p| ci::chi_e(cfg, -p).is_zero());
    let ideal_checks = ci::ideal_sheaf_checks(cfg).ok();
    let surface = match (cfg.n, cfg.r, parity) {
        (4, 2, false) => ci::rank2_surface_data(cfg).ok(),
        (4, 3, false) => ci::rank3_surface_data(cfg).ok(),
        _ => None,
    };

    let mut text = String::new();
    let _ = writeln!(text, "X: n = {}, degrees = {:?}, r = {}", cfg.n, cfg.degrees, cfg.r);
    let _ =
        writeln!(text, "d = {}, S = {}, S' = {}, i_X = {}", cfg.d(), cfg.sum(), cfg.pair_sum(), cfg.index());
    let _ = writeln!(text, "K_X = {} H", ci::canonical_coeff(cfg));
    let _ = writeln!(text, "c2(X) = {} H^2", ci::c2x_coeff(cfg));
    if parity {
        let _ = writeln!(text, "u = {u}  (not integral: parity obstruction, c1(E) is not a multiple of H)");
    } else {
        let _ = writeln!(text, "u = {u}");
    }
    let _ = writeln!(text, "deg Z = {deg}  (general codimension-2 formula: {deg_general})");
    let _ = writeln!(text, "e = {}{}", e.e, if e.integral { "" } else { "  (non-integral)" });
    let _ = writeln!(
        text,
        "{:>5} {:>16} {:>16} {:>16} {:>16}",
        "m", "chi(O_X(m))", "chi(O_Z(m))", "(via J_Z)", "chi(E(m))"
    );
    let show = |v: &Option<Rational>| v.as_ref().map_or("-".to_string(), Rational::to_string);
    for row in &rows {
        let _ = writeln!(
            text,
            "{:>5} {:>16} {:>16} {:>16} {:>16}",
            row.m,
            row.chi_ox.to_string(),
            show(&row.chi_oz),
            show(&row.chi_oz_general),
            row.chi_e.to_string()
        );
    }
    let _ = writeln!(text, "chi(E(-p)) = 0 for p = 1..{}: {}", cfg.n, ulrich_vanishing);
    if let Some(checks) = &ideal_checks {
        let ok = checks.iter().all(ci::IdealCheck::holds);
        let _ = writeln!(text, "(-1)^(n-1) chi(J_Z(D-pH)) = (r-1) chi(K_X+pH) for p = 1..{}: {ok}", cfg.n);
    }
    if let Some(s) = &surface {
        let _ = writeln!(text, "surface Z: K_Z.H = {}, K_Z^2 = {}, c2(Z) = {}", s.kz_h, s.kz_sq, s.c2z);
        let _ = writeln!(
            text,
            "Noether chi = {}, Hilbert chi = {}, difference = {} (q witness {})",
            s.chi_noether, s.chi_hilb, s.difference, s.q_witness
        );
    }

    let result = json!({
        "input": cfg,
        "d": cfg.d(),
        "sum": cfg.sum(),
        "pair_sum": cfg.pair_sum(),
        "index": cfg.index(),
        "canonical_coeff": ci::canonical_coeff(cfg),
        "c2x_coeff": ci::c2x_coeff(cfg),
        "u": u,
        "parity_obstruction": parity,
        "deg_z": deg,
        "deg_z_general": deg_general,
        "c2e": e,
        "table": rows,
        "ulrich_vanishing": ulrich_vanishing,
        "ideal_sheaf_checks": ideal_checks,
        "surface": surface,
    });
    Ok(Outcome { result, text, exit: 0 })
}

fn cert_exit(cert: &Certificate) -> u8 {
    match cert.verdict {
        Verdict::NonExistence | Verdict::Excluded => 0,
        Verdict::Inconclusive => 1,
    }
}

fn cert_text(cert: &Certificate, out: &mut String) {
    let verdict = serde_json::to_value(cert.verdict).unwrap_or_default();
    let reason = serde_json::to_value(cert.reason).unwrap_or_default();
    let _ = writeln!(
        out,
        "n = {}, degrees = {:?}, r = {}: {} ({})",
        cert.input.n,
        cert.input.degrees,
        cert.input.r,
        verdict.as_str().unwrap_or("?"),
        reason.as_str().unwrap_or("?")
    );
    for w in &cert.witnesses {
        let _ = writeln!(out, "    witness {} = {}  [{}]", w.name, w.value, w.violates);
    }
    for h in &cert.hypotheses {
        let _ = writeln!(out, "    assuming: {h}");
    }
}

pub fn certify(cfg: &CIConfig, pad: usize) -> CmdResult {
    let cert = ci::certify_padded(cfg, pad)?;
    let mut text = String::new();
    cert_text(&cert, &mut text);
    Ok(Outcome { exit: cert_exit(&cert), result: serde_json::to_value(&cert)?, text })
}

/// Certifies every input; exit 2 if any input is invalid, else 1 if any is
/// inconclusive, else 0.
pub fn certify_batch(cfgs: &[CIConfig]) -> CmdResult {
    let results = ci::certify_batch(cfgs);
    let mut text = String::new();
    let mut exit = 0u8;
    let mut docs = Vec::with_capacity(results.len());
    for (cfg, res) in cfgs.iter().zip(results) {
        match res {
            Ok(cert) => {
                cert_text(&cert, &mut text);
                exit = exit.max(cert_exit(&cert));
                docs.push(serde_json::to_value(&cert)?);
            }
            Err(e) => {
                let _ = writeln!(
                    text,
                    "n = {}, degrees = {:?}, r = {}: invalid input: {e}",
                    cfg.n, cfg.degrees, cfg.r
                );
                exit = 2;
                docs.push(json!({ "input": cfg, "error": e.to_string() }));
            }
        }
    }
    Ok(Outcome { result: json!({ "certificates": docs }), text, exit })
}

pub fn hypersurface(n: i64, d: i64) -> CmdResult {
    let check = ci::hyper3_dimension_check(n, d)?;
    let res = ci::hypersurface_resolution(n, d)?;
    let cert = ci::certify_hypersurface_rank2(n, d)?;
    let deg = ci::deg_z(&CIConfig::new(n, vec![d], 2)?);
    let diff = ci::hypersurface_hilb_difference(n, d, (n - 2) as u32, 0)?;

    let mut text = String::new();
    let _ = writeln!(
        text,
        "resolution: S(-{})^{} <- S(-{})^{} <- S(-{})",
        res.generator_degree, res.generators, res.syzygy_degree, res.syzygies, res.socle_degree
    );
    let _ = writeln!(text, "h0(J_Z(d-1)) = {}", res.h0_ideal);
    let _ = writeln!(text, "h0(O_Z(d-1)) = {} (closed form {})", res.h0_oz, res.h0_oz_closed);
    let _ = writeln!(text, "h0(N_Z) = {} (closed form {})", res.h0_normal, res.h0_normal_closed);
    let _ = writeln!(
        text,
        "difference of order {} of the Hilbert polynomial = {} (deg Z = {})",
        n - 2,
        diff,
        deg
    );
    let _ = writeln!(
        text,
        "dimension count: {} vs {}{}",
        check.lhs,
        check.rhs,
        if check.contradiction { "  (contradiction)" } else { "" }
    );
    cert_text(&cert, &mut text);
    let result = json!({
        "n": n,
        "d": d,
        "resolution": res,
        "hilbert_difference": diff,
        "deg_z": deg,
        "dimension_check": check,
        "certificate": cert,
    });
    Ok(Outcome { exit: cert_exit(&cert), result, text })
}

pub struct ScanArgs {
    pub s_min: usize,
    pub s_max: usize,
    pub d_max: i64,
    pub bs: Vec<i64>,
    pub list: bool,
}

#[derive(Serialize)]
struct TupleValue {
    b: i64,
    degrees: Vec<i64>,
    q: i64,
}

pub fn scan(args: &ScanArgs) -> CmdResult {
    if args.s_min < 1 || args.s_min > args.s_max || args.s_max > 11 {
        return Err(UsageError(format!(
            "need 1 <= s-min <= s-max <= 11, got {}..{}",
            args.s_min, args.s_max
        )));
    }
    if args.d_max < 1 {
        return Err(UsageError("--d-max must be positive".into()));
    }
    if args.bs.is_empty() {
        return Err(UsageError("--b needs at least one value".into()));
    }
    let rows = scan_q(args.s_min..=args.s_max, args.d_max, &args.bs)?;
    let ok = rows.iter().all(|r| r.violations.is_empty() && r.all_ones_q == 0);
    let total: usize = rows.iter().map(|r| r.tuples).sum();

    let listing: Option<Vec<TupleValue>> = args.list.then(|| {
        args.bs
            .iter()
            .flat_map(|&b| (args.s_min..=args.s_max).map(move |s| (b, s)))
            .flat_map(|(b, s)| decreasing_tuples(s, args.d_max).into_iter().map(move |t| (b, t)))
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|(b, t)| TupleValue { q: q_value(b, &t), b, degrees: t })
            .collect()
    });

    let mut text = String::new();
    let _ =
        writeln!(text, "{:>3} {:>3} {:>8} {:>10} {:>24} {:>6}", "b", "s", "tuples", "min q", "at", "q(1s)");
    for r in &rows {
        let _ = writeln!(
            text,
            "{:>3} {:>3} {:>8} {:>10} {:>24} {:>6}",
            r.b,
            r.s,
            r.tuples,
            r.min_q.map_or("-".into(), |v| v.to_string()),
            r.argmin.as_ref().map_or("-".into(), |t| format!("{t:?}")),
            r.all_ones_q
        );
        for v in &r.violations {
            let _ = writeln!(text, "    non-positive at {v:?}");
        }
    }
    if let Some(list) = &listing {
        for t in list {
            let ones = if t.degrees.iter().all(|&x| x == 1) { "  (all ones, excluded)" } else { "" };
            let _ = writeln!(text, "q_{{{},{}}}{:?} = {}{ones}", t.degrees.len(), t.b, t.degrees, t.q);
        }
    }
    let _ = writeln!(text, "{total} tuples with product >= 2 checked; the all-ones tuple is excluded");
    let _ = writeln!(text, "{}", if ok { "q > 0 on every tuple" } else { "non-positive values found" });
    let result = json!({
        "s_min": args.s_min,
        "s_max": args.s_max,
        "d_max": args.d_max,
        "b": args.bs,
        "tuples_checked": total,
        "passed": ok,
        "rows": rows,
        "listing": listing,
    });
    Ok(Outcome { result, text, exit: if ok { 0 } else { 1 } })
}
