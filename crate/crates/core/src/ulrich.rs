//! Construction of the symmetric functions `a_s`, `b_s`, `f_{s,r,m}`, the
//! derived functions `g_{4,s}, δ_s, h_s, k_s, c_s, χ'_s`, the obstruction
//! polynomial `q_{s,b}`, and the verifiers that check their identities.
//!
//! Everything here is built from the defining formulas. The reference closed
//! forms in [`crate::closed_forms`] are only read by the verifiers.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde_json::json;

use crate::arith::{binom_int, binom_poly, Rational};
use crate::closed_forms::{self, ClosedForm};
use crate::error::{Error, Result};
use crate::poly::{MultiPoly, MAX_VARS};
use crate::report::{Check, Report};
use crate::symfunc::{basis, expand_direct, expand_via_restriction, monomial_sym, reconstruct, Partition};

/// The `(r, m)` pairs with reference expansions.
pub const RM_PAIRS: [(i64, i64); 3] = [(2, 0), (3, 0), (3, 1)];

fn check_s(s: usize) -> Result<()> {
    if s == 0 || s > MAX_VARS {
        return Err(Error::Domain(format!("s = {s} outside 1..={MAX_VARS}")));
    }
    Ok(())
}

fn m_of(parts: &[u32], s: usize) -> MultiPoly {
    monomial_sym(&Partition::new(parts.to_vec()).expect("valid partition"), s)
}

/// `y·py + z·pz + c` in two variables.
fn linear2(py: &Rational, pz: &Rational, c: &Rational) -> MultiPoly {
    (&MultiPoly::var(2, 0).scale(py) + &MultiPoly::var(2, 1).scale(pz)).add_constant(c)
}

/// `a_s` at the twist `T = β·(x1+…+xs) + γ`:
///
/// `binom(T+s+4, s+4) + Σ_{k=1..s} (-1)^{k+s} Σ_{|I|=k} binom(x_I - T - 1, s+4)`.
///
/// For a subset `I` the argument is `(1-β)·y - β·z - (γ+1)` with `y` the sum
/// over `I` and `z` the sum over its complement. That binomial is expanded once
/// in `(y, z)`, substituted with `I = {1..k}`, and then summed over the orbit of
/// `k`-subsets.
pub fn build_a_twisted(s: usize, beta: &Rational, gamma: &Rational) -> Result<MultiPoly> {
    check_s(s)?;
    let top = s as i64 + 4;
    let x = MultiPoly::sum_of_vars(s);

    let lead =
        binom_poly(&MultiPoly::var(1, 0).scale(beta).add_constant(&(gamma + &Rational::from(top))), top)?;
    let mut out = lead.compose(&[x])?;

    let one = Rational::one();
    let subset_binom = binom_poly(&linear2(&(&one - beta), &-beta, &-(gamma + &one)), top)?;
    for k in 1..=s {
        let mut y = MultiPoly::zero(s);
        let mut z = MultiPoly::zero(s);
        for i in 0..s {
            if i < k {
                y = &y + &MultiPoly::var(s, i);
            } else {
                z = &z + &MultiPoly::var(s, i);
            }
        }
        let block = subset_binom.compose(&[y, z])?;
        let mut orbit = block.orbit_sum(k)?;
        if (k + s) % 2 == 1 {
            orbit.scale_in_place(&Rational::from(-1));
        }
        out.add_assign(&orbit)?;
    }
    Ok(out)
}

/// `a_s(m, x1, …, xs)`; at integer degrees this is `χ(O_X(m))`.
pub fn build_a(s: usize, m: i64) -> Result<MultiPoly> {
    build_a_twisted(s, &Rational::zero(), &Rational::from(m))
}

/// `b_s = -r·x1⋯xs·binom((r/2)(Σx - s) - m - 1, 4)`.
pub fn build_b(s: usize, r: i64, m: i64) -> Result<MultiPoly> {
    check_s(s)?;
    let alpha = Rational::frac(r, 2);
    let arg = MultiPoly::sum_of_vars(s)
        .scale(&alpha)
        .add_constant(&(-(&alpha * &Rational::from(s as i64)) - Rational::from(m + 1)));
    let bin = binom_poly(&arg, 4)?;
    Ok(MultiPoly::product_of_vars(s).mul(&bin)?.scale(&Rational::from(-r)))
}

fn build_f_uncached(s: usize, r: i64, m: i64) -> Result<MultiPoly> {
    let alpha = Rational::frac(r, 2);
    let untwisted = build_a(s, m)?;
    // m - (r/2)(Σx - s) = -(r/2)·Σx + (m + (r/2)s)
    let gamma = Rational::from(m) + &alpha * &Rational::from(s as i64);
    let twisted = build_a_twisted(s, &-&alpha, &gamma)?;
    let mut out = untwisted;
    out.add_assign(&twisted.scale(&Rational::from(r - 1)))?;
    out.add_assign(&build_b(s, r, m)?)?;
    Ok(out)
}

type Builder = fn(usize) -> Result<MultiPoly>;

type FCache = Mutex<HashMap<(usize, i64, i64), Arc<MultiPoly>>>;

fn f_cache() -> &'static FCache {
    static CACHE: OnceLock<FCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `f_{s,r,m} = a_s(m) + (r-1)·a_s(m - (r/2)(Σx - s)) + b_s`.
///
/// Results are memoized per `(s, r, m)`; two threads asking for the same key
/// at once may both compute it.
pub fn build_f(s: usize, r: i64, m: i64) -> Result<Arc<MultiPoly>> {
    check_s(s)?;
    if r < 2 {
        return Err(Error::Domain(format!("rank r = {r} must be at least 2")));
    }
    if let Some(hit) = f_cache().lock().expect("cache lock").get(&(s, r, m)) {
        return Ok(Arc::clone(hit));
    }
    let f = Arc::new(build_f_uncached(s, r, m)?);
    f_cache().lock().expect("cache lock").insert((s, r, m), Arc::clone(&f));
    Ok(f)
}

fn m1(s: usize) -> MultiPoly {
    MultiPoly::sum_of_vars(s)
}

fn m11(s: usize) -> MultiPoly {
    m_of(&[1, 1], s)
}

/// Sum of `coeff · m1^i · m11^j · s^k` over `(coeff, i, j, k)`.
fn poly_in_m1_m11(s: usize, terms: &[(i64, u32, u32, u32)]) -> Result<MultiPoly> {
    let (a, b) = (m1(s), m11(s));
    let sv = Rational::from(s as i64);
    let mut out = MultiPoly::zero(s);
    for &(c, i, j, k) in terms {
        let t = a.pow(i)?.mul(&b.pow(j)?)?.scale(&(Rational::from(c) * sv.pow(k)));
        out.add_assign(&t)?;
    }
    Ok(out)
}

pub fn build_g4(s: usize) -> Result<MultiPoly> {
    check_s(s)?;
    let bracket = poly_in_m1_m11(
        s,
        &[
            (45, 0, 0, 4),
            (-180, 1, 0, 3),
            (288, 2, 0, 2),
            (-216, 3, 0, 1),
            (64, 4, 0, 0),
            (198, 0, 0, 3),
            (-612, 1, 0, 2),
            (-36, 0, 1, 2),
            (700, 2, 0, 1),
            (72, 1, 1, 1),
            (-288, 3, 0, 0),
            (-40, 2, 1, 0),
            (181, 0, 0, 2),
            (-432, 1, 0, 1),
            (-140, 0, 1, 1),
            (336, 2, 0, 0),
            (144, 1, 1, 0),
            (4, 0, 2, 0),
            (-84, 0, 0, 1),
            (-168, 0, 1, 0),
        ],
    )?;
    Ok(MultiPoly::product_of_vars(s).mul(&bracket)?.scale(&Rational::frac(5, 1728)))
}

pub fn build_delta(s: usize) -> Result<MultiPoly> {
    check_s(s)?;
    let bracket =
        poly_in_m1_m11(s, &[(7, 2, 0, 0), (-12, 1, 0, 1), (-2, 0, 1, 0), (6, 0, 0, 2), (-1, 0, 0, 1)])?;
    Ok(MultiPoly::product_of_vars(s).mul(&bracket)?.scale(&Rational::frac(1, 8)))
}

/// `h_s = -2 f_{s,3,1} + 2 f_{s,3,0} + δ_s`.
pub fn build_h(s: usize) -> Result<MultiPoly> {
    let f31 = build_f(s, 3, 1)?;
    let f30 = build_f(s, 3, 0)?;
    let two = Rational::from(2);
    let mut out = f30.scale(&two);
    out.add_assign(&f31.scale(&-&two))?;
    out.add_assign(&build_delta(s)?)?;
    Ok(out)
}

/// `m1 - s - 2`.
fn shifted_m1(s: usize) -> MultiPoly {
    m1(s).add_constant(&Rational::from(-(s as i64) - 2))
}

/// `k_s = 5(m1 - s - 2) h_s - (25/4)(m1 - s - 2)^2 δ_s`.
pub fn build_k(s: usize) -> Result<MultiPoly> {
    let w = shifted_m1(s);
    let h = build_h(s)?;
    let delta = build_delta(s)?;
    let first = w.mul(&h)?.scale(&Rational::from(5));
    let second = w.pow(2)?.mul(&delta)?.scale(&Rational::frac(-25, 4));
    first.add(&second)
}

/// `c_s = (4m1 - 4s - 5) h_s - (1/8)[49m1² - 8(13s+20)m1 + 6m11 + 52s² + 163s + 120] δ_s`.
pub fn build_c(s: usize) -> Result<MultiPoly> {
    let si = s as i64;
    let lin = m1(s).scale(&Rational::from(4)).add_constant(&Rational::from(-4 * si - 5));
    let quad = poly_in_m1_m11(s, &[(49, 2, 0, 0), (-8 * (13 * si + 20), 1, 0, 0), (6, 0, 1, 0)])?
        .add_constant(&Rational::from(52 * si * si + 163 * si + 120));
    let h = build_h(s)?;
    let delta = build_delta(s)?;
    let first = lin.mul(&h)?;
    let second = quad.mul(&delta)?.scale(&Rational::frac(-1, 8));
    first.add(&second)
}

/// `χ'_s = (k_s + c_s) / 12`.
pub fn build_chi_prime(s: usize) -> Result<MultiPoly> {
    Ok(build_k(s)?.add(&build_c(s)?)?.scale(&Rational::frac(1, 12)))
}

/// `q_{s,b} = b·m4 + 10·m22 - 10s·m2 + s(5s - b + 5)`.
pub fn build_q(s: usize, b: i64) -> Result<MultiPoly> {
    check_s(s)?;
    let si = s as i64;
    let mut out = m_of(&[4], s).scale(&Rational::from(b));
    out.add_assign(&m_of(&[2, 2], s).scale(&Rational::from(10)))?;
    out.add_assign(&m_of(&[2], s).scale(&Rational::from(-10 * si)))?;
    Ok(out.add_constant(&Rational::from(si * (5 * si - b + 5))))
}

/// Integer evaluation of `q_{s,b}` straight from power sums, used by the scan.
pub fn q_value(b: i64, d: &[i64]) -> i64 {
    let s = d.len() as i64;
    let p2: i64 = d.iter().map(|v| v * v).sum();
    let p4: i64 = d.iter().map(|v| v.pow(4)).sum();
    // m22 = (p2² - p4) / 2
    b * p4 + 5 * (p2 * p2 - p4) - 10 * s * p2 + s * (5 * s - b + 5)
}

fn rm_label(r: i64, m: i64) -> String {
    format!("f_{{s,{r},{m}}}")
}

/// Symmetry of `f_{s,r,m}` and `f_{s,r,m}|_{x_{k+1}=…=x_s=1} = f_{k,r,m}` for all `k < s`.
pub fn verify_tf0(s: usize) -> Result<Report> {
    check_s(s)?;
    let mut report = Report::new("tf0", json!({ "s": s }));
    for (r, m) in RM_PAIRS {
        let f = build_f(s, r, m)?;
        report.push(Check::new(format!("{} symmetric", rm_label(r, m)), f.is_symmetric()));
        for k in 1..s {
            let restricted = f.substitute_ones(k)?;
            let fk = build_f(k, r, m)?;
            report.push(Check::new(format!("{} restricts to k={k}", rm_label(r, m)), restricted == *fk));
        }
    }
    Ok(report)
}

/// Divisibility of `f_{s,r,m}` by `x1⋯xs`.
pub fn verify_tf1(s: usize) -> Result<Report> {
    check_s(s)?;
    let mut report = Report::new("tf1", json!({ "s": s }));
    for (r, m) in RM_PAIRS {
        let f = build_f(s, r, m)?;
        let ok = f.divide_all_vars().is_ok();
        report.push(Check::new(format!("x1..x{s} divides {}", rm_label(r, m)), ok));
    }
    Ok(report)
}

/// `built / (prefactor · x1⋯xs)`.
fn bracket_of(built: &MultiPoly, form: &ClosedForm) -> Result<MultiPoly> {
    Ok(built.divide_all_vars()?.scale(&form.prefactor().recip()?))
}

fn coeff_mismatches(got: &[Rational; 12], want: &[Rational; 12]) -> Vec<String> {
    let names = basis();
    got.iter()
        .zip(want)
        .enumerate()
        .filter(|(_, (g, w))| g != w)
        .map(|(i, (g, w))| format!("{}: got {g}, expected {w}", names[i]))
        .collect()
}

/// Matches the basis expansion of `bracket` against `form` at `s`. For `s < 4`
/// the basis is degenerate, so the comparison is between polynomials.
fn match_closed_form(
    report: &mut Report,
    label: &str,
    bracket: &MultiPoly,
    form: &ClosedForm,
    s: usize,
) -> Result<()> {
    let want = form.coeffs(s as i64);
    if s >= 4 {
        let got = expand_direct(bracket)?;
        let bad = coeff_mismatches(&got.coeffs, &want);
        report.push(match bad.first() {
            None => Check::new(format!("{label} coefficients"), true),
            Some(first) => Check::with_detail(format!("{label} coefficients"), false, first.clone()),
        });
        if s >= 5 {
            let via = expand_via_restriction(bracket)?;
            report.push(Check::new(format!("{label} restriction expansion agrees"), via == got));
        }
    }
    report.push(Check::new(format!("{label} reconstruction"), reconstruct(&want, s) == *bracket));
    Ok(())
}

/// The twelve expansion coefficients of `f_{s,r,m} / x1⋯xs` against the
/// reference closed forms, plus the four-variable integer tables at `s = 4`.
pub fn verify_gl1(s: usize) -> Result<Report> {
    if s < 4 {
        return Err(Error::Domain(format!("gl1 needs s >= 4, got {s}")));
    }
    let mut report = Report::new("gl1", json!({ "s": s }));
    let forms = [
        (2, 0, closed_forms::F_2_0, closed_forms::P4_2_0),
        (3, 0, closed_forms::F_3_0, closed_forms::P4_3_0),
        (3, 1, closed_forms::F_3_1, closed_forms::P4_3_1),
    ];
    for (r, m, form, table) in forms {
        let f = build_f(s, r, m)?;
        let bracket = bracket_of(&f, &form)?;
        match_closed_form(&mut report, &rm_label(r, m), &bracket, &form, s)?;
        if s == 4 {
            let got = expand_direct(&bracket)?;
            let want = table.map(Rational::from);
            report.push(Check::new(format!("{} four-variable table", rm_label(r, m)), got.coeffs == want));
        }
    }
    Ok(report)
}

/// The six derived functions, built from their definitions, against their
/// reference expansions.
pub fn verify_gl2(s: usize) -> Result<Report> {
    check_s(s)?;
    let mut report = Report::new("gl2", json!({ "s": s, "degenerate_basis": s < 4 }));
    let builders: [(ClosedForm, Builder); 6] = [
        (closed_forms::G4, build_g4),
        (closed_forms::DELTA, build_delta),
        (closed_forms::H, build_h),
        (closed_forms::K, build_k),
        (closed_forms::C, build_c),
        (closed_forms::CHI_PRIME, build_chi_prime),
    ];
    for (form, build) in builders {
        let built = build(s)?;
        let bracket = bracket_of(&built, &form)?;
        match_closed_form(&mut report, form.name, &bracket, &form, s)?;
    }
    Ok(report)
}

/// `g_{4,s} - f_{s,2,0} = x1⋯xs·q_{s,8}/4320` and `χ'_s - f_{s,3,0} = x1⋯xs·q_{s,9}/3840`.
pub fn verify_gl4(s: usize) -> Result<Report> {
    if s < 4 {
        return Err(Error::Domain(format!("gl4 needs s >= 4, got {s}")));
    }
    let mut report = Report::new("gl4", json!({ "s": s }));
    let prod = MultiPoly::product_of_vars(s);

    let lhs1 = build_g4(s)?.sub(&*build_f(s, 2, 0)?)?;
    let rhs1 = prod.mul(&build_q(s, 8)?)?.scale(&Rational::frac(1, 4320));
    report.push(Check::new("g_{4,s} - f_{s,2,0} = m_{1^s} q_{s,8} / 4320", lhs1 == rhs1));

    let lhs2 = build_chi_prime(s)?.sub(&*build_f(s, 3, 0)?)?;
    let rhs2 = prod.mul(&build_q(s, 9)?)?.scale(&Rational::frac(1, 3840));
    report.push(Check::new("chi'_s - f_{s,3,0} = m_{1^s} q_{s,9} / 3840", lhs2 == rhs2));
    Ok(report)
}

/// Weakly decreasing tuples `d_max >= d1 >= … >= ds >= 1`.
pub fn decreasing_tuples(s: usize, d_max: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(s);
    fn rec(s: usize, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for v in (1..=hi).rev() {
            cur.push(v);
            rec(s, v, cur, out);
            cur.pop();
        }
    }
    rec(s, d_max, &mut cur, &mut out);
    out
}

/// Per-`(b, s)` outcome of the positivity scan.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ScanRow {
    pub b: i64,
    pub s: usize,
    pub tuples: usize,
    pub min_q: Option<i64>,
    pub argmin: Option<Vec<i64>>,
    pub all_ones_q: i64,
    pub violations: Vec<Vec<i64>>,
}

/// Scans `q_{s,b}` over weakly decreasing tuples. `all_ones` is skipped in the
/// positivity count but its value is recorded. Rows come back ordered by `(b, s)`.
pub fn scan_q(s_range: std::ops::RangeInclusive<usize>, d_max: i64, bs: &[i64]) -> Result<Vec<ScanRow>> {
    let keys: Vec<(i64, usize)> = bs.iter().flat_map(|&b| s_range.clone().map(move |s| (b, s))).collect();
    keys.into_par_iter()
        .map(|(b, s)| {
            check_s(s)?;
            let q = build_q(s, b)?;
            let tuples = decreasing_tuples(s, d_max);
            let values: Vec<(Vec<i64>, i64)> = tuples
                .into_par_iter()
                .map(|t| {
                    let v = q.eval_int(&t)?;
                    let v = v.to_i64().ok_or_else(|| Error::Domain("q value overflows i64".into()))?;
                    Ok((t, v))
                })
                .collect::<Result<_>>()?;
            let mut row = ScanRow {
                b,
                s,
                tuples: 0,
                min_q: None,
                argmin: None,
                all_ones_q: q.eval_int(&vec![1; s])?.to_i64().unwrap_or(i64::MAX),
                violations: Vec::new(),
            };
            for (t, v) in values {
                if t.iter().all(|&x| x == 1) {
                    continue;
                }
                row.tuples += 1;
                if row.min_q.is_none_or(|cur| v < cur) {
                    row.min_q = Some(v);
                    row.argmin = Some(t.clone());
                }
                if v <= 0 {
                    row.violations.push(t);
                }
            }
            Ok(row)
        })
        .collect()
}

/// Positivity of `q_{s,b}` on every tuple with `Π d_i >= 2`, and vanishing at
/// the all-ones tuple, for `s` in `2..=s_max`.
pub fn verify_cg_scan(s_max: usize, d_max: i64, bs: &[i64]) -> Result<Report> {
    if s_max < 2 || d_max < 2 {
        return Err(Error::Domain("scan needs s_max >= 2 and d_max >= 2".into()));
    }
    let mut report = Report::new("cg", json!({ "s_max": s_max, "d_max": d_max, "b": bs }));
    let rows = scan_q(2..=s_max, d_max, bs)?;
    let mut total = 0;
    for row in &rows {
        total += row.tuples;
        let detail = match row.violations.first() {
            Some(t) => format!("q <= 0 at {t:?}"),
            None => format!("{} tuples, min q = {:?} at {:?}", row.tuples, row.min_q, row.argmin),
        };
        report.push(Check::with_detail(
            format!("q_{{{},{}}} > 0", row.s, row.b),
            row.violations.is_empty(),
            detail,
        ));
        report.push(Check::new(format!("q_{{{},{}}}(1,...,1) = 0", row.s, row.b), row.all_ones_q == 0));
    }
    report.summary = json!({ "tuples_checked": total, "rows": rows });
    Ok(report)
}

/// Recursion `q_{s+1,b} = q_{s,b} + r_b(x_{s+1})`, `r_b(1) = 0` as a polynomial
/// in `m2`, the derivative bound on sampled data, and the all-ones branch.
pub fn verify_cg_induction(s: usize, b: i64, d_max: i64) -> Result<Report> {
    if s < 2 || s + 1 > MAX_VARS {
        return Err(Error::Domain(format!("induction step needs 2 <= s < {MAX_VARS}, got {s}")));
    }
    let mut report = Report::new("cg-induction", json!({ "s": s, "b": b }));
    let si = s as i64;
    let n = s + 1;

    let t = MultiPoly::var(n, s);
    let m2 = m_of(&[2], s).extend_vars(n)?;
    let bracket = m2.add_constant(&Rational::from(-si - 1));
    let mut step = t.pow(4)?.scale(&Rational::from(b));
    step.add_assign(&t.pow(2)?.mul(&bracket)?.scale(&Rational::from(10)))?;
    step.add_assign(&m2.scale(&Rational::from(-10)))?;
    let step = step.add_constant(&Rational::from(10 * si - b + 10));
    let lhs = build_q(n, b)?;
    let rhs = build_q(s, b)?.extend_vars(n)?.add(&step)?;
    report.push(Check::new("q_{s+1,b} = q_{s,b} + r_b(x_{s+1})", lhs == rhs));

    // r_b in (M, t) with M standing for m2(d).
    let big_m = MultiPoly::var(2, 0);
    let tt = MultiPoly::var(2, 1);
    let mut r = tt.pow(4)?.scale(&Rational::from(b));
    r.add_assign(&tt.pow(2)?.mul(&big_m.add_constant(&Rational::from(-si - 1)))?.scale(&Rational::from(10)))?;
    r.add_assign(&big_m.scale(&Rational::from(-10)))?;
    let r = r.add_constant(&Rational::from(10 * si - b + 10));
    report.push(Check::new("r_b(1) = 0", r.substitute_ones(1)?.is_zero()));

    let mut derivative_ok = true;
    let mut witness = None;
    for d in decreasing_tuples(s, d_max) {
        if d.iter().all(|&v| v == 1) {
            continue;
        }
        let m2v: i64 = d.iter().map(|v| v * v).sum();
        for tv in 1..=d_max.max(2) {
            let dr = 4 * b * tv.pow(3) + 20 * tv * (m2v - si - 1);
            if m2v < si + 1 || dr <= 0 {
                derivative_ok = false;
                witness.get_or_insert(format!("d = {d:?}, t = {tv}"));
            }
        }
    }
    report.push(match witness {
        None => Check::new("r_b'(t) > 0 for t >= 1 on sampled tuples", derivative_ok),
        Some(w) => Check::with_detail("r_b'(t) > 0 for t >= 1 on sampled tuples", false, w),
    });

    let ones_branch = (2..=d_max.max(2)).all(|d| b * d.pow(4) - 10 * d * d - b + 10 > 0);
    report.push(Check::new("r_b(d) > 0 for d >= 2 when d_1..d_s = 1", ones_branch));
    Ok(report)
}

/// `χ(O_X(m))` at integer degrees by direct binomial sums, independent of [`build_a`].
pub fn a_value(degrees: &[i64], m: i64) -> Result<Rational> {
    let s = degrees.len();
    let top = s as i64 + 4;
    let mut total = binom_int(m + top, top)?;
    for k in 1..=s {
        for subset in crate::poly::k_subsets(s, k) {
            let sum: i64 = subset.iter().map(|&i| degrees[i]).sum();
            let term = binom_int(sum - m - 1, top)?;
            if (k + s).is_multiple_of(2) {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(p: &MultiPoly, pt: &[i64]) -> Rational {
        p.eval_int(pt).unwrap()
    }

    #[test]
    fn a_examples() {
        assert_eq!(ev(&build_a(1, 0).unwrap(), &[3]), Rational::one());
        let expected = binom_int(12, 5).unwrap() - binom_int(8, 5).unwrap();
        assert_eq!(ev(&build_a(1, 7).unwrap(), &[4]), expected);
        assert!(build_a(3, 1).unwrap().is_symmetric());
    }

    #[test]
    fn a_matches_direct_sum() {
        for s in 1..=4 {
            let a = build_a(s, 2).unwrap();
            for d in decreasing_tuples(s, 3) {
                assert_eq!(ev(&a, &d), a_value(&d, 2).unwrap(), "{d:?}");
            }
        }
    }

    #[test]
    fn f_is_divisible_and_restricts() {
        let f5 = build_f(5, 2, 0).unwrap();
        assert!(f5.divide_all_vars().is_ok());
        let f6 = build_f(6, 3, 1).unwrap();
        assert_eq!(f6.substitute_ones(4).unwrap(), *build_f(4, 3, 1).unwrap());
    }

    #[test]
    fn q_examples() {
        let q48 = build_q(4, 8).unwrap();
        assert_eq!(ev(&q48, &[1, 1, 1, 1]), Rational::zero());
        assert_eq!(ev(&q48, &[2, 1, 1, 1]), Rational::from(90));
        assert_eq!(ev(&build_q(2, 9).unwrap(), &[2, 2]), Rational::from(300));
        for s in 3..=8 {
            assert_eq!(ev(&build_q(s, 8).unwrap(), &vec![1; s]), Rational::zero());
        }
        assert_eq!(q_value(8, &[2, 1, 1, 1]), 90);
    }

    #[test]
    fn delta_expansion_at_five() {
        let delta = build_delta(5).unwrap();
        let inner = delta.divide_all_vars().unwrap().scale(&Rational::from(8));
        let e = expand_direct(&inner).unwrap();
        let want: [i64; 4] = [7, 12, -60, 145];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(e.coeffs[8 + i], Rational::from(*w));
        }
    }

    #[test]
    fn g4_and_f20_agree_at_all_ones() {
        let ones = [1, 1, 1, 1];
        assert_eq!(ev(&build_g4(4).unwrap(), &ones), ev(&build_f(4, 2, 0).unwrap(), &ones));
    }

    #[test]
    fn gl4_identity_value_at_2111() {
        let diff = build_g4(4).unwrap().sub(&build_f(4, 2, 0).unwrap()).unwrap();
        assert_eq!(ev(&diff, &[2, 1, 1, 1]), Rational::frac(1, 24));
    }

    #[test]
    fn small_verifiers_pass() {
        for s in 1..=4 {
            assert!(verify_tf0(s).unwrap().passed());
            assert!(verify_tf1(s).unwrap().passed());
        }
        assert!(verify_gl1(4).unwrap().passed());
        assert!(verify_gl4(4).unwrap().passed());
        let r = verify_gl2(4).unwrap();
        assert!(r.passed(), "{:?}", r.witness);
    }

    #[test]
    fn induction_step() {
        for b in [8, 9] {
            let r = verify_cg_induction(3, b, 6).unwrap();
            assert!(r.passed(), "{:?}", r.witness);
        }
        assert_eq!(8 * 16 - 40 - 8 + 10, 90);
    }

    #[test]
    fn small_scan() {
        let r = verify_cg_scan(3, 4, &[8, 9]).unwrap();
        assert!(r.passed(), "{:?}", r.witness);
        let rows = scan_q(5..=5, 2, &[9]).unwrap();
        assert!(rows[0].min_q.unwrap() > 0);
    }

    #[test]
    fn tuples_are_weakly_decreasing() {
        let t = decreasing_tuples(3, 3);
        assert_eq!(t.len(), 10);
        assert!(t.iter().all(|v| v.windows(2).all(|w| w[0] >= w[1])));
    }
}
