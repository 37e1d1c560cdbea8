//! Numerical invariants of Ulrich bundles and their associated subvarieties on
//! smooth complete intersections, the non-existence certifier, and the
//! hypersurface dimension count.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{binom_int, Rational};
use crate::error::{Error, Result};
use crate::poly::k_subsets;
use crate::ulrich::q_value;

/// `X ⊂ P^{n+s}` cut out by hypersurfaces of the given degrees, with a
/// candidate bundle rank `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CIConfig {
    pub n: i64,
    pub degrees: Vec<i64>,
    pub r: i64,
}

impl CIConfig {
    /// Requires `n >= 2`, every degree `>= 1`, total degree `>= 2`, `r >= 1`.
    pub fn new(n: i64, degrees: Vec<i64>, r: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput(format!("dimension n = {n} must be at least 2")));
        }
        if degrees.is_empty() {
            return Err(Error::InvalidInput("at least one degree is required".into()));
        }
        if let Some(bad) = degrees.iter().find(|&&d| d < 1) {
            return Err(Error::InvalidInput(format!("degree {bad} must be positive")));
        }
        if r < 1 {
            return Err(Error::InvalidInput(format!("rank r = {r} must be positive")));
        }
        let cfg = CIConfig { n, degrees, r };
        if cfg.d() < 2 {
            return Err(Error::InvalidInput("total degree d must be at least 2".into()));
        }
        Ok(cfg)
    }

    pub fn s(&self) -> i64 {
        self.degrees.len() as i64
    }

    /// `S = Σ d_i`.
    pub fn sum(&self) -> i64 {
        self.degrees.iter().sum()
    }

    /// `S' = Σ_{i<j} d_i d_j`.
    pub fn pair_sum(&self) -> i64 {
        let s = self.sum();
        let sq: i64 = self.degrees.iter().map(|d| d * d).sum();
        (s * s - sq) / 2
    }

    /// `d = Π d_i`.
    pub fn d(&self) -> i64 {
        self.degrees.iter().product()
    }

    /// `i_X` with `-K_X = i_X H`.
    pub fn index(&self) -> i64 {
        self.n + self.s() + 1 - self.sum()
    }

    /// The same variety with degree-1 equations appended until there are `s`.
    pub fn padded(&self, s: usize) -> CIConfig {
        let mut degrees = self.degrees.clone();
        while degrees.len() < s {
            degrees.push(1);
        }
        CIConfig { n: self.n, degrees, r: self.r }
    }

    fn with_n(&self, n: i64) -> CIConfig {
        CIConfig { n, degrees: self.degrees.clone(), r: self.r }
    }
}

fn q(v: i64) -> Rational {
    Rational::from(v)
}

fn binom(ell: i64, m: i64) -> Rational {
    binom_int(ell, m).expect("non-negative lower index")
}

/// `K_X = (S - s - n - 1) H`.
pub fn canonical_coeff(cfg: &CIConfig) -> i64 {
    cfg.sum() - cfg.s() - cfg.n - 1
}

/// `c_2(X) = [C(n+s+1, 2) + S(S-s-n-1) - S'] H^2`.
pub fn c2x_coeff(cfg: &CIConfig) -> Rational {
    binom(cfg.n + cfg.s() + 1, 2) + q(cfg.sum() * canonical_coeff(cfg) - cfg.pair_sum())
}

/// `u` with `c_1(E) = u H`, namely `r(S - s)/2`.
pub fn det_twist(cfg: &CIConfig) -> Rational {
    Rational::frac(cfg.r * (cfg.sum() - cfg.s()), 2)
}

/// True when `r(S - s)` is odd, so `c_1(E)` is not an integral multiple of `H`.
pub fn parity_obstruction(cfg: &CIConfig) -> bool {
    (cfg.r * (cfg.sum() - cfg.s())) % 2 != 0
}

fn integral_twist(cfg: &CIConfig) -> Result<i64> {
    let u = det_twist(cfg);
    u.to_i64().filter(|_| u.is_integer()).ok_or_else(|| Error::Parity(u.to_string()))
}

/// `deg Z = (rd/24)[(3r-2)S² - 6(r-1)sS + 3(r-1)s² - s - 2S']`.
pub fn deg_z(cfg: &CIConfig) -> Rational {
    let (r, s, big_s) = (cfg.r, cfg.s(), cfg.sum());
    let bracket =
        (3 * r - 2) * big_s * big_s - 6 * (r - 1) * s * big_s + 3 * (r - 1) * s * s - s - 2 * cfg.pair_sum();
    Rational::frac(r * cfg.d() * bracket, 24)
}

/// `deg Z` from the general codimension-two formula
/// `½D²H^{n-2} - ½DK_XH^{n-2} - (rd/24)(3n²+5n+2) + (r/12)(K_X² + c_2(X))H^{n-2}`
/// with `D = uH`, `K_X = kH`.
pub fn deg_z_general(cfg: &CIConfig) -> Rational {
    let d = q(cfg.d());
    let u = det_twist(cfg);
    let k = q(canonical_coeff(cfg));
    let r = q(cfg.r);
    let n = cfg.n;
    let half = Rational::frac(1, 2);
    let twelfth = Rational::frac(1, 12);
    let body = &half * &(&u * &u) - &half * &(&u * &k) - &r * &Rational::frac(3 * n * n + 5 * n + 2, 24)
        + &twelfth * &(&r * &(&k * &k))
        + &twelfth * &(&r * &c2x_coeff(cfg));
    &d * &body
}

/// `χ(O_X(m)) = Σ_I (-1)^{|I|} C(m - d_I + n + s, n + s)` from the Koszul complex.
pub fn chi_ox(cfg: &CIConfig, m: i64) -> Rational {
    let big_n = cfg.n + cfg.s();
    let s = cfg.degrees.len();
    let mut total = binom(m + big_n, big_n);
    for k in 1..=s {
        for subset in k_subsets(s, k) {
            let d_i: i64 = subset.iter().map(|&i| cfg.degrees[i]).sum();
            let term = binom(m - d_i + big_n, big_n);
            if k % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    total
}

/// `χ(O_Z(m))` by the closed complete-intersection formula.
pub fn chi_oz(cfg: &CIConfig, m: i64) -> Result<Rational> {
    let u = integral_twist(cfg)?;
    let (n, s, r, d) = (cfg.n, cfg.s(), cfg.r, cfg.d());
    let big_n = n + s;
    let sign = |e: i64| if e.rem_euclid(2) == 0 { q(1) } else { q(-1) };
    let mut total = binom(m + big_n, big_n);
    total += sign(n + 1) * q(r * d) * binom(u - m - 1, n);
    total += sign(n + s) * q(r - 1) * binom(u - m - 1, big_n);
    let sc = cfg.degrees.len();
    for k in 1..=sc {
        let sg = sign(k as i64 + n + s);
        for subset in k_subsets(sc, k) {
            let d_i: i64 = subset.iter().map(|&i| cfg.degrees[i]).sum();
            let inner = binom(d_i - m - 1, big_n) + q(r - 1) * binom(d_i + u - m - 1, big_n);
            total += &sg * &inner;
        }
    }
    Ok(total)
}

/// `χ(O_Z(m)) = χ(O_X(m)) - rd·C(m-u+n, n) + (r-1)·χ(O_X(m-u))`, from the
/// sequence `0 → O_X^{r-1} → E → J_Z(D) → 0`.
pub fn chi_oz_general(cfg: &CIConfig, m: i64) -> Result<Rational> {
    let u = integral_twist(cfg)?;
    Ok(chi_ox(cfg, m) - q(cfg.r * cfg.d()) * binom(m - u + cfg.n, cfg.n) + q(cfg.r - 1) * chi_ox(cfg, m - u))
}

/// `χ(E(m)) = rd·C(m+n, n)` for an Ulrich bundle.
pub fn chi_e(cfg: &CIConfig, m: i64) -> Rational {
    q(cfg.r * cfg.d()) * binom(m + cfg.n, cfg.n)
}

/// One row of `(-1)^{n-1} χ(J_Z(D - pH)) = (r-1) χ(K_X + pH)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdealCheck {
    pub p: i64,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl IdealCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The identity above for `p = 1..=n`, with `χ(J_Z(m)) = χ(O_X(m)) - χ(O_Z(m))`.
pub fn ideal_sheaf_checks(cfg: &CIConfig) -> Result<Vec<IdealCheck>> {
    let u = integral_twist(cfg)?;
    let k = canonical_coeff(cfg);
    let sign = if (cfg.n - 1) % 2 == 0 { q(1) } else { q(-1) };
    (1..=cfg.n)
        .map(|p| {
            let m = u - p;
            let ideal = chi_ox(cfg, m) - chi_oz(cfg, m)?;
            Ok(IdealCheck { p, lhs: &sign * &ideal, rhs: q(cfg.r - 1) * chi_ox(cfg, k + p) })
        })
        .collect()
}

/// `c_2(E) = e H²`, `e = deg Z / d`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SecondChern {
    pub e: Rational,
    pub integral: bool,
}

pub fn c2e_coeff(cfg: &CIConfig) -> SecondChern {
    let e = deg_z(cfg) * Rational::frac(1, cfg.d());
    SecondChern { integral: e.is_integer(), e }
}

/// Surface invariants of `Z` when `n = 4`, compared through Noether's formula.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceData {
    pub deg: Rational,
    pub kz_h: Rational,
    pub kz_sq: Rational,
    pub c2z: Rational,
    /// `(K_Z² + c_2(Z)) / 12`.
    pub chi_noether: Rational,
    /// `χ(O_Z)` from the Hilbert polynomial.
    pub chi_hilb: Rational,
    /// `chi_noether - chi_hilb`.
    pub difference: Rational,
    /// `d·q_{s,b}(d_1, …, d_s) / denominator`, expected to equal `difference`.
    pub q_witness: Rational,
}

fn require(cfg: &CIConfig, n: i64, r: i64) -> Result<()> {
    if cfg.n != n || cfg.r != r {
        return Err(Error::InvalidInput(format!(
            "expected n = {n}, r = {r}; got n = {}, r = {}",
            cfg.n, cfg.r
        )));
    }
    Ok(())
}

/// `r = 2`: `K_Z = (2S-2s-5)H_Z` and the closed form for `c_2(Z)`.
pub fn rank2_surface_data(cfg: &CIConfig) -> Result<SurfaceData> {
    require(cfg, 4, 2)?;
    let (s, big_s, sp) = (cfg.s(), cfg.sum(), cfg.pair_sum());
    let deg = deg_z(cfg);
    let kc = q(2 * big_s - 2 * s - 5);
    let kz_h = &kc * &deg;
    let kz_sq = &(&kc * &kc) * &deg;
    let c2_bracket = 120 + 115 * s + 27 * s * s - 120 * big_s - 54 * s * big_s + 32 * big_s * big_s - 10 * sp;
    let c2z = Rational::frac(c2_bracket, 12) * &deg;
    surface_record(cfg, deg, kz_h, kz_sq, c2z, 8, 4320)
}

/// `c_2(Z)` for `r = 2` from `c(T_Z) = c(T_X)|_Z / c(E|_Z)`:
/// `[c_2(X) + k·u + u² - e]·deg Z`.
pub fn rank2_c2z_from_normal_bundle(cfg: &CIConfig) -> Result<Rational> {
    require(cfg, 4, 2)?;
    let u = det_twist(cfg);
    let k = q(canonical_coeff(cfg));
    let body = c2x_coeff(cfg) + &k * &u + &u * &u - c2e_coeff(cfg).e;
    Ok(body * deg_z(cfg))
}

/// `r = 3`: `K_Z·H` by Riemann–Roch, `K_Z²` from the vanishing square
/// `[K_Z - (5/2)(S-s-2)H_Z]² = 0`, and `c_2(Z)` from the rank-3 formula.
pub fn rank3_surface_data(cfg: &CIConfig) -> Result<SurfaceData> {
    require(cfg, 4, 3)?;
    let (n, s, big_s, sp) = (cfg.n, cfg.s(), cfg.sum(), cfg.pair_sum());
    let deg = deg_z(cfg);
    let kz_h = q(-2) * chi_oz(cfg, 1)? + q(2) * chi_oz(cfg, 0)? + deg.clone();
    let w = q(big_s - s - 2);
    let kz_sq = q(5) * &w * &kz_h - Rational::frac(25, 4) * &w * &w * &deg;
    let bracket = 49 * big_s * big_s - 104 * s * big_s - 32 * (n + 1) * big_s
        + 52 * s * s
        + 32 * n * s
        + 35 * s
        + 4 * n * n
        + 12 * n
        + 8
        + 6 * sp;
    let c2z = Rational::frac(-bracket, 8) * &deg + q(4 * big_s - 4 * s - n - 1) * &kz_h;
    surface_record(cfg, deg, kz_h, kz_sq, c2z, 9, 3840)
}

fn surface_record(
    cfg: &CIConfig,
    deg: Rational,
    kz_h: Rational,
    kz_sq: Rational,
    c2z: Rational,
    b: i64,
    denominator: i64,
) -> Result<SurfaceData> {
    let chi_noether = (&kz_sq + &c2z) * Rational::frac(1, 12);
    let chi_hilb = chi_oz(cfg, 0)?;
    let difference = &chi_noether - &chi_hilb;
    let q_witness = Rational::frac(cfg.d() * q_value(b, &cfg.degrees), denominator);
    Ok(SurfaceData { deg, kz_h, kz_sq, c2z, chi_noether, chi_hilb, difference, q_witness })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    NonExistence,
    Excluded,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    /// No line bundle is Ulrich away from a linear space.
    LineBundle,
    ParityObstruction,
    QPositivity,
    QuadricException,
    Type22Exception,
    HypersurfaceDimensionCount,
    OutOfHypotheses,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub name: String,
    pub value: Rational,
    /// The relation the value would have to satisfy if a bundle existed.
    pub violates: String,
}

impl Witness {
    fn new(name: &str, value: Rational, violates: &str) -> Self {
        Witness { name: name.into(), value, violates: violates.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub input: CIConfig,
    pub verdict: Verdict,
    pub reason: Reason,
    pub witnesses: Vec<Witness>,
    pub hypotheses: Vec<String>,
    pub tool_version: String,
}

const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

impl Certificate {
    fn new(input: &CIConfig, verdict: Verdict, reason: Reason) -> Self {
        Certificate {
            input: input.clone(),
            verdict,
            reason,
            witnesses: Vec::new(),
            hypotheses: Vec::new(),
            tool_version: TOOL_VERSION.into(),
        }
    }
}

/// Decides whether `X` can carry an Ulrich bundle of rank `r <= 3`, following
/// the reduction to a fourfold section and the `q_{s,b}` positivity argument.
/// Equations are padded with degree-1 entries up to `s = max(c, 4)`.
pub fn certify(cfg: &CIConfig) -> Result<Certificate> {
    certify_padded(cfg, 4)
}

/// As [`certify`], padding up to at least `min_s` equations.
pub fn certify_padded(cfg: &CIConfig, min_s: usize) -> Result<Certificate> {
    if cfg.n < 4 {
        return Err(Error::InvalidInput(format!("certify needs n >= 4, got {}", cfg.n)));
    }
    if cfg.degrees.iter().any(|&d| d < 2) {
        return Err(Error::InvalidInput("every degree must be at least 2".into()));
    }
    if min_s < 4 {
        return Err(Error::InvalidInput("padding target must be at least 4".into()));
    }
    let mut sorted = cfg.degrees.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));

    if cfg.r >= 4 {
        let mut cert = Certificate::new(cfg, Verdict::Inconclusive, Reason::OutOfHypotheses);
        cert.hypotheses.push("the argument covers ranks r <= 3 only".into());
        return Ok(cert);
    }
    if cfg.r == 1 {
        let mut cert = Certificate::new(cfg, Verdict::NonExistence, Reason::LineBundle);
        cert.witnesses.push(Witness::new("d", q(cfg.d()), "an Ulrich line bundle forces d = 1"));
        return Ok(cert);
    }
    if cfg.n == 4 && sorted == [2] && cfg.r == 2 {
        let mut cert = Certificate::new(cfg, Verdict::Excluded, Reason::QuadricException);
        cert.hypotheses.push("the quadric fourfold carries rank-2 Ulrich bundles (spinor bundles)".into());
        return Ok(cert);
    }
    if cfg.n == 4 && sorted == [2, 2] {
        let mut cert = Certificate::new(cfg, Verdict::Excluded, Reason::Type22Exception);
        cert.hypotheses.push("fourfolds of type (2,2) lie outside the very-general hypothesis".into());
        return Ok(cert);
    }

    let mut hypotheses = Vec::new();
    if cfg.n == 4 {
        hypotheses.push("X is very general in its family (Noether-Lefschetz)".to_string());
    } else {
        hypotheses.push(format!(
            "an Ulrich bundle restricts to an Ulrich bundle on a 4-dimensional linear section (n = {} reduced to 4)",
            cfg.n
        ));
    }
    let s = cfg.degrees.len().max(min_s);
    let four = cfg.with_n(4).padded(s);
    if s > cfg.degrees.len() {
        hypotheses.push(format!("degrees padded with 1's to s = {s}"));
    }

    let b = if cfg.r == 2 { 8 } else { 9 };
    let dq = q(four.d() * q_value(b, &four.degrees));
    let parity = parity_obstruction(&four);
    let (verdict, reason) = match (parity, dq.is_positive()) {
        (true, _) => (Verdict::NonExistence, Reason::ParityObstruction),
        (false, true) => (Verdict::NonExistence, Reason::QPositivity),
        (false, false) => (Verdict::Inconclusive, Reason::QPositivity),
    };
    let mut cert = Certificate::new(cfg, verdict, reason);
    let q_witness = Witness::new(&format!("d*q_{{{s},{b}}}"), dq, "Noether's formula forces d*q = 0");
    let parity_witness = Witness::new("r(S-s)/2", det_twist(&four), "c_1(E) = uH needs u integral");
    if reason == Reason::ParityObstruction {
        cert.witnesses.push(parity_witness);
        cert.witnesses.push(q_witness);
    } else {
        cert.witnesses.push(q_witness);
        if parity {
            cert.witnesses.push(parity_witness);
        } else {
            let data = if cfg.r == 2 { rank2_surface_data(&four)? } else { rank3_surface_data(&four)? };
            cert.witnesses.push(Witness::new(
                "chi_noether - chi_hilbert",
                data.difference,
                "both compute chi(O_Z) of the associated surface",
            ));
        }
    }
    let e = c2e_coeff(&four);
    if !e.integral {
        cert.witnesses.push(Witness::new("e", e.e, "c_2(E) = eH^2 needs e integral"));
    }
    cert.hypotheses = hypotheses;
    Ok(cert)
}

/// Certifies every input in parallel; results keep the input order.
pub fn certify_batch(cfgs: &[CIConfig]) -> Vec<Result<Certificate>> {
    cfgs.par_iter().map(certify).collect()
}

/// `h^0(O_{P^k}(t))`, zero for negative twists.
pub fn h0_projective(k: i64, t: i64) -> Rational {
    if t < 0 {
        Rational::zero()
    } else {
        binom(t + k, k)
    }
}

/// Hilbert polynomial of the codimension-2 locus in `P^{n+1}`:
/// `C(m+n+1, n+1) - (2d-1)C(m-d+n+1, n) - C(m-2d+n+2, n+1)`.
pub fn hypersurface_hilb(n: i64, d: i64, m: i64) -> Result<Rational> {
    hyper_domain(n, d)?;
    Ok(binom(m + n + 1, n + 1) - q(2 * d - 1) * binom(m - d + n + 1, n) - binom(m - 2 * d + n + 2, n + 1))
}

/// Forward difference of order `order` of the Hilbert polynomial at `m`.
pub fn hypersurface_hilb_difference(n: i64, d: i64, order: u32, m: i64) -> Result<Rational> {
    let mut total = Rational::zero();
    for j in 0..=order as i64 {
        let c = binom(order as i64, j);
        let term = c * hypersurface_hilb(n, d, m + j)?;
        if (order as i64 - j) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// Hilbert function on `P^3` for `n = 2`:
/// `h^0(O_{P^3}(m)) - (2d-1)h^0(O_{P^2}(m-d+1)) - h^0(O_{P^3}(m-2d+1))`.
pub fn hypersurface_hilb_function_surface(d: i64, m: i64) -> Result<Rational> {
    hyper_domain(2, d)?;
    Ok(h0_projective(3, m) - q(2 * d - 1) * h0_projective(2, m - d + 1) - h0_projective(3, m - 2 * d + 1))
}

fn hyper_domain(n: i64, d: i64) -> Result<()> {
    if n < 2 || d < 2 {
        return Err(Error::Domain(format!("need n >= 2 and d >= 2, got n = {n}, d = {d}")));
    }
    Ok(())
}

/// Minimal free resolution
/// `0 → S(-(2d-1)) → S(-d)^{2d-1} → S(-(d-1))^{2d-1} → I_Z → 0`
/// and the section counts it determines.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Resolution {
    pub generator_degree: i64,
    pub generators: i64,
    pub syzygy_degree: i64,
    pub syzygies: i64,
    pub socle_degree: i64,
    /// `h^0(J_Z(d-1))` read off the resolution.
    pub h0_ideal: Rational,
    /// `h^0(O_Z(d-1)) = h^0(O_P(d-1)) - h^0(J_Z(d-1))`.
    pub h0_oz: Rational,
    /// `h^0(O_Z(d-1))` in closed form, `C(d+n, n+1) - 2d + 1`.
    pub h0_oz_closed: Rational,
    /// `h^0(N_Z)` assembled from the resolution data.
    pub h0_normal: Rational,
    /// `(2d-1)[(n+2)(d-1) - 2d + 1]`.
    pub h0_normal_closed: Rational,
}

pub fn hypersurface_resolution(n: i64, d: i64) -> Result<Resolution> {
    hyper_domain(n, d)?;
    let k = n + 1;
    let g = 2 * d - 1;
    let t = d - 1;
    let h0_ideal = q(g) * h0_projective(k, t - (d - 1)) - q(g) * h0_projective(k, t - d)
        + h0_projective(k, t - (2 * d - 1));
    let h0_oz = h0_projective(k, t) - h0_ideal.clone();
    let h0_oz_closed = binom(d + n, n + 1) - q(2 * d - 1);
    let h0_normal = q(g) * &h0_oz + binom(g, 2) * binom(n + 2, n + 1) - q(g) * binom(d + n, n + 1);
    let h0_normal_closed = q(g * ((n + 2) * (d - 1) - 2 * d + 1));
    Ok(Resolution {
        generator_degree: d - 1,
        generators: g,
        syzygy_degree: d,
        syzygies: g,
        socle_degree: 2 * d - 1,
        h0_ideal,
        h0_oz,
        h0_oz_closed,
        h0_normal,
        h0_normal_closed,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionCheck {
    pub n: i64,
    pub d: i64,
    /// `dim U_{d,n} + 2d - 1 = C(d+n+1, n+1) - 1 + 2d - 1`.
    pub lhs: i64,
    /// `nd(2d-1) - 1`.
    pub rhs: i64,
    pub contradiction: bool,
}

/// Parameter count for rank-2 Ulrich bundles on general hypersurfaces,
/// `n ∈ {2, 3, 4}`.
pub fn hyper3_dimension_check(n: i64, d: i64) -> Result<DimensionCheck> {
    if !(2..=4).contains(&n) || d < 2 {
        return Err(Error::Domain(format!("need n in 2..=4 and d >= 2, got n = {n}, d = {d}")));
    }
    let lhs = binom(d + n + 1, n + 1).to_i64().expect("small binomial") - 1 + 2 * d - 1;
    let rhs = n * d * (2 * d - 1) - 1;
    Ok(DimensionCheck { n, d, lhs, rhs, contradiction: lhs > rhs })
}

/// Rank-2 certificate for a hypersurface of dimension `n ∈ {2, 3, 4}` from the
/// dimension count. `n = 2` additionally needs `d >= 16`, where the count is
/// paired with the Noether–Lefschetz argument.
pub fn certify_hypersurface_rank2(n: i64, d: i64) -> Result<Certificate> {
    let check = hyper3_dimension_check(n, d)?;
    let input = CIConfig::new(n, vec![d], 2)?;
    let applies = check.contradiction && (n != 2 || d >= 16);
    let verdict = if applies { Verdict::NonExistence } else { Verdict::Inconclusive };
    let mut cert = Certificate::new(&input, verdict, Reason::HypersurfaceDimensionCount);
    cert.witnesses.push(Witness::new(
        "dim U + 2d - 1 - (nd(2d-1) - 1)",
        q(check.lhs - check.rhs),
        "a dominating family of Ulrich subvarieties needs this <= 0",
    ));
    cert.hypotheses.push(match n {
        2 => "X is very general (Pic X = ZH)".to_string(),
        _ => "X is general in its linear system".to_string(),
    });
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: i64, degrees: &[i64], r: i64) -> CIConfig {
        CIConfig::new(n, degrees.to_vec(), r).unwrap()
    }

    #[test]
    fn canonical_and_c2x() {
        assert_eq!(canonical_coeff(&cfg(4, &[2], 2)), -4);
        assert_eq!(canonical_coeff(&cfg(4, &[2, 2], 2)), -3);
        assert_eq!(c2x_coeff(&cfg(4, &[2], 2)), q(7));
        assert_eq!(c2x_coeff(&cfg(4, &[2, 2], 2)), q(5));
        let c = cfg(4, &[3, 2], 2);
        assert_eq!(canonical_coeff(&c), canonical_coeff(&c.padded(6)));
    }

    #[test]
    fn twist_and_parity() {
        assert!(parity_obstruction(&cfg(4, &[4], 3)));
        assert_eq!(det_twist(&cfg(4, &[4], 3)), Rational::frac(9, 2));
        assert!(!parity_obstruction(&cfg(4, &[5, 3], 2)));
        assert_eq!(det_twist(&cfg(4, &[2, 2], 3)), q(3));
        assert!(matches!(chi_oz(&cfg(4, &[4], 3), 0), Err(Error::Parity(_))));
    }

    #[test]
    fn degree_examples_and_routes() {
        assert_eq!(deg_z(&cfg(4, &[2], 2)), q(1));
        assert_eq!(deg_z(&cfg(4, &[3], 2)), q(5));
        for degrees in [vec![2], vec![3, 2], vec![2, 2, 2], vec![4, 3, 1]] {
            for r in 2..=4 {
                for n in 3..=6 {
                    let c = cfg(n, &degrees, r);
                    assert_eq!(deg_z(&c), deg_z_general(&c), "{c:?}");
                }
            }
        }
    }

    #[test]
    fn chi_values() {
        assert_eq!(chi_ox(&cfg(4, &[2], 2), 0), q(1));
        assert_eq!(chi_e(&cfg(4, &[2], 2), 0), q(4));
        for p in 1..=4 {
            assert!(chi_e(&cfg(4, &[3], 2), -p).is_zero());
        }
        let c = cfg(5, &[3, 2], 2);
        for m in -3..=5 {
            assert_eq!(chi_oz(&c, m).unwrap(), chi_oz_general(&c, m).unwrap());
        }
        assert!(ideal_sheaf_checks(&c).unwrap().iter().all(IdealCheck::holds));
    }

    #[test]
    fn second_chern_examples() {
        assert_eq!(c2e_coeff(&cfg(4, &[2], 2)).e, Rational::frac(1, 2));
        assert_eq!(c2e_coeff(&cfg(4, &[3], 2)).e, Rational::frac(5, 3));
        assert_eq!(c2e_coeff(&cfg(4, &[2, 2], 3)).e, Rational::frac(15, 4));
        let c = cfg(4, &[3, 2], 2);
        assert_eq!(c2e_coeff(&c), c2e_coeff(&c.padded(5)));
    }

    #[test]
    fn rank2_quadric_witness() {
        let data = rank2_surface_data(&cfg(4, &[2, 1, 1, 1], 2)).unwrap();
        assert_eq!(data.difference, Rational::frac(1, 24));
        assert_eq!(data.q_witness, data.difference);
        assert_eq!(data.c2z, rank2_c2z_from_normal_bundle(&cfg(4, &[2, 1, 1, 1], 2)).unwrap());
    }

    #[test]
    fn rank3_witness() {
        let data = rank3_surface_data(&cfg(4, &[3, 1, 1, 1], 3)).unwrap();
        assert!(data.difference.is_positive());
        assert_eq!(data.q_witness, data.difference);
    }

    #[test]
    fn certify_examples() {
        let c = certify(&cfg(5, &[2], 2)).unwrap();
        assert_eq!(c.verdict, Verdict::NonExistence);
        assert_eq!(c.witnesses[0].value, q(180));
        assert_eq!(certify(&cfg(4, &[2], 2)).unwrap().reason, Reason::QuadricException);
        assert_eq!(certify(&cfg(4, &[2, 2], 2)).unwrap().verdict, Verdict::Excluded);
        assert_eq!(certify(&cfg(6, &[2, 3], 3)).unwrap().verdict, Verdict::NonExistence);
        assert!(certify(&cfg(4, &[2, 1], 2)).is_err());
        assert!(certify(&cfg(3, &[2], 2)).is_err());
        assert_eq!(certify(&cfg(4, &[3], 4)).unwrap().verdict, Verdict::Inconclusive);
        assert_eq!(certify(&cfg(4, &[3], 1)).unwrap().reason, Reason::LineBundle);
    }

    #[test]
    fn hypersurface_numbers() {
        for d in 2..=10 {
            let res = hypersurface_resolution(3, d).unwrap();
            assert_eq!(res.h0_ideal, q(2 * d - 1));
            assert_eq!(res.h0_oz, res.h0_oz_closed);
            assert_eq!(res.h0_normal, res.h0_normal_closed);
            let want = Rational::frac(d * (2 * d - 1) * (d - 1), 6);
            assert_eq!(hypersurface_hilb_difference(4, d, 2, 50).unwrap(), want);
        }
        assert_eq!(hypersurface_resolution(3, 6).unwrap().h0_normal_closed, q(154));
        let h = hyper3_dimension_check(4, 3).unwrap();
        assert_eq!((h.lhs, h.rhs, h.contradiction), (60, 59, true));
        let h = hyper3_dimension_check(4, 2).unwrap();
        assert_eq!((h.lhs, h.rhs, h.contradiction), (23, 23, false));
        let h = hyper3_dimension_check(3, 6).unwrap();
        assert_eq!((h.lhs, h.rhs), (220, 197));
        assert!(!hyper3_dimension_check(3, 5).unwrap().contradiction);
        assert_eq!(hypersurface_hilb_function_surface(5, 4).unwrap(), binom(7, 3) - q(9));
    }
}
