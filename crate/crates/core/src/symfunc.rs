//! Monomial symmetric polynomials and expansions in the twelve-element basis of
//! symmetric polynomials of degree at most four.

use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::arith::{binom_int, Rational};
use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly};
use crate::report::{Check, Report};

/// Weakly decreasing tuple of positive parts. The empty partition indexes the
/// constant polynomial `1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput("partition parts must be weakly decreasing".into()));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `{1, …, 1}` with `k` parts.
    pub fn ones(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        write!(f, "m")?;
        for p in &self.0 {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn part(parts: &[u32]) -> Partition {
    Partition(parts.to_vec())
}

/// Next lexicographic permutation in place; `false` once the last one is reached.
fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `m_λ(s)`: the sum of all distinct monomials whose exponent multiset is `λ`.
/// Zero when `λ` has more parts than there are variables.
pub fn monomial_sym(lambda: &Partition, s: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(s);
    if lambda.len() > s {
        return out;
    }
    let mut exps = vec![0u32; s];
    exps[..lambda.len()].copy_from_slice(lambda.parts());
    exps.sort_unstable();
    loop {
        let m = Monomial::from_exponents(&exps).expect("partition exponents fit");
        out.add_term(m, Rational::one());
        if !next_permutation(&mut exps) {
            break;
        }
    }
    out
}

/// The ordered basis `{m4, m31, m22, m211, m1111, m3, m21, m111, m2, m11, m1, 1}`.
pub fn basis() -> [Partition; 12] {
    [
        part(&[4]),
        part(&[3, 1]),
        part(&[2, 2]),
        part(&[2, 1, 1]),
        part(&[1, 1, 1, 1]),
        part(&[3]),
        part(&[2, 1]),
        part(&[1, 1, 1]),
        part(&[2]),
        part(&[1, 1]),
        part(&[1]),
        Partition::empty(),
    ]
}

/// Coordinates of a symmetric polynomial of degree at most four in
/// [`basis()`]. Only meaningful for `s >= 4`, where the basis is independent.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymExpansion {
    pub s: usize,
    pub coeffs: [Rational; 12],
}

impl SymExpansion {
    pub fn new(s: usize, coeffs: [Rational; 12]) -> Result<Self> {
        if s < 4 {
            return Err(Error::Domain(format!("basis expansions need s >= 4, got {s}")));
        }
        Ok(SymExpansion { s, coeffs })
    }

    /// `Σ a_i · basis_i(s)`.
    pub fn reconstruct(&self) -> MultiPoly {
        reconstruct(&self.coeffs, self.s)
    }

    pub fn scale(&self, c: &Rational) -> SymExpansion {
        SymExpansion { s: self.s, coeffs: self.coeffs.clone().map(|a| a * c) }
    }
}

impl fmt::Debug for SymExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = basis();
        write!(f, "SymExpansion[s={}](", self.s)?;
        let mut first = true;
        for (a, lam) in self.coeffs.iter().zip(b.iter()) {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{a}·{lam}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

/// `Σ coeffs_i · basis_i(s)` for any `s >= 1`. For `s < 4` the long
/// partitions contribute zero.
pub fn reconstruct(coeffs: &[Rational; 12], s: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(s);
    for (a, lam) in coeffs.iter().zip(basis().iter()) {
        if !a.is_zero() {
            out.add_assign(&monomial_sym(lam, s).scale(a)).expect("same s");
        }
    }
    out
}

/// `count` symmetric polynomials of degree at most 4 in `s` variables with
/// random small rational coordinates in the monomial basis, reproducible from `seed`.
pub fn sample_symmetric(s: usize, count: usize, seed: u64) -> Vec<MultiPoly> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let coeffs: [Rational; 12] =
                std::array::from_fn(|_| Rational::frac(rng.random_range(-50..=50), rng.random_range(1..=12)));
            reconstruct(&coeffs, s)
        })
        .collect()
}

fn check_expandable(g: &MultiPoly) -> Result<()> {
    if g.nvars() < 4 {
        return Err(Error::Domain(format!("basis expansions need s >= 4, got {}", g.nvars())));
    }
    if let Some(d) = g.total_degree() {
        if d > 4 {
            return Err(Error::DegreeTooHigh(d));
        }
    }
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(())
}

fn leading_exponents(lambda: &Partition, s: usize) -> Vec<u32> {
    let mut e = vec![0u32; s];
    e[..lambda.len()].copy_from_slice(lambda.parts());
    e
}

/// Expansion by leading-monomial peeling: the coefficient of `x^λ` is the
/// coefficient of `m_λ`; subtracting each term must leave an exact zero.
pub fn expand_direct(g: &MultiPoly) -> Result<SymExpansion> {
    check_expandable(g)?;
    let s = g.nvars();
    let mut residual = g.clone();
    let mut coeffs: [Rational; 12] = Default::default();
    for (slot, lam) in coeffs.iter_mut().zip(basis().iter()) {
        let a = residual.coefficient_of(&leading_exponents(lam, s));
        if !a.is_zero() {
            residual = residual.sub(&monomial_sym(lam, s).scale(&a))?;
        }
        *slot = a;
    }
    if !residual.is_zero() {
        return Err(Error::Residual);
    }
    SymExpansion::new(s, coeffs)
}

fn c(n: i64, k: i64) -> Rational {
    binom_int(n, k).expect("non-negative bottom index")
}

/// Coefficients of `G(x1, x2, x3, x4, 1, …, 1)` in the four-variable basis,
/// given the coefficients `a` of `G` in `s` variables.
pub fn restriction_coeffs(a: &[Rational; 12], s: usize) -> [Rational; 12] {
    let t = Rational::from(s as i64 - 4);
    let t = &t;
    let (c2, c3, c4) = (c(s as i64 - 4, 2), c(s as i64 - 4, 3), c(s as i64 - 4, 4));
    let two = Rational::from(2);
    let three = Rational::from(3);
    [
        a[0].clone(),
        a[1].clone(),
        a[2].clone(),
        a[3].clone(),
        a[4].clone(),
        &a[5] + t * &a[1],
        &a[6] + t * &a[3],
        &a[7] + t * &a[4],
        &a[8] + t * (&a[2] + &a[6]) + &c2 * &a[3],
        &a[9] + t * (&a[3] + &a[7]) + &c2 * &a[4],
        &a[10] + t * (&a[1] + &a[6] + &a[9]) + &c2 * (&two * &a[3] + &a[7]) + &c3 * &a[4],
        &a[11]
            + t * (&a[0] + &a[5] + &a[8] + &a[10])
            + &c2 * (&two * &a[1] + &a[2] + &two * &a[6] + &a[9])
            + &c3 * (&three * &a[3] + &a[7])
            + &c4 * &a[4],
    ]
}

/// Inverts [`restriction_coeffs`]: the system is triangular, solved top-down.
pub fn solve_restriction(b: &[Rational; 12], s: usize) -> [Rational; 12] {
    let t = Rational::from(s as i64 - 4);
    let t = &t;
    let (c2, c3, c4) = (c(s as i64 - 4, 2), c(s as i64 - 4, 3), c(s as i64 - 4, 4));
    let two = Rational::from(2);
    let three = Rational::from(3);
    let a1 = b[0].clone();
    let a2 = b[1].clone();
    let a3 = b[2].clone();
    let a4 = b[3].clone();
    let a5 = b[4].clone();
    let a6 = &b[5] - t * &a2;
    let a7 = &b[6] - t * &a4;
    let a8 = &b[7] - t * &a5;
    let a9 = &b[8] - t * (&a3 + &a7) - &c2 * &a4;
    let a10 = &b[9] - t * (&a4 + &a8) - &c2 * &a5;
    let a11 = &b[10] - t * (&a2 + &a7 + &a10) - &c2 * (&two * &a4 + &a8) - &c3 * &a5;
    let a12 = &b[11]
        - t * (&a1 + &a6 + &a9 + &a11)
        - &c2 * (&two * &a2 + &a3 + &two * &a7 + &a10)
        - &c3 * (&three * &a4 + &a8)
        - &c4 * &a5;
    [a1, a2, a3, a4, a5, a6, a7, a8, a9, a10, a11, a12]
}

/// Expansion through the four-variable restriction: substitute
/// `x5 = … = xs = 1`, expand in four variables, and solve the triangular
/// restriction system. For `s = 4` this is [`expand_direct`].
pub fn expand_via_restriction(g: &MultiPoly) -> Result<SymExpansion> {
    check_expandable(g)?;
    let s = g.nvars();
    if s == 4 {
        return expand_direct(g);
    }
    let restricted = expand_direct(&g.substitute_ones(4)?)?;
    let coeffs = solve_restriction(&restricted.coeffs, s);
    let exp = SymExpansion::new(s, coeffs)?;
    if exp.reconstruct() != *g {
        return Err(Error::Residual);
    }
    Ok(exp)
}

fn m(parts: &[u32], s: usize) -> MultiPoly {
    monomial_sym(&part(parts), s)
}

type Side = (&'static str, Vec<&'static [u32]>, Vec<(i64, &'static [u32])>);

/// The thirteen product identities among monomial symmetric polynomials:
/// a product of `m_λ`'s on the left and an integer combination on the right.
fn tf2_identities() -> Vec<Side> {
    vec![
        ("(1) m1^2", vec![&[1], &[1]], vec![(1, &[2]), (2, &[1, 1])]),
        ("(2) m1^3", vec![&[1], &[1], &[1]], vec![(1, &[3]), (3, &[2, 1]), (6, &[1, 1, 1])]),
        (
            "(3) m1^4",
            vec![&[1], &[1], &[1], &[1]],
            vec![(1, &[4]), (4, &[3, 1]), (6, &[2, 2]), (12, &[2, 1, 1]), (24, &[1, 1, 1, 1])],
        ),
        ("(4) m1*m11", vec![&[1], &[1, 1]], vec![(1, &[2, 1]), (3, &[1, 1, 1])]),
        (
            "(5) m1^2*m11",
            vec![&[1], &[1], &[1, 1]],
            vec![(1, &[3, 1]), (2, &[2, 2]), (5, &[2, 1, 1]), (12, &[1, 1, 1, 1])],
        ),
        ("(6) m11^2", vec![&[1, 1], &[1, 1]], vec![(1, &[2, 2]), (2, &[2, 1, 1]), (6, &[1, 1, 1, 1])]),
        ("(7) m1*m3", vec![&[1], &[3]], vec![(1, &[4]), (1, &[3, 1])]),
        ("(8) m1*m21", vec![&[1], &[2, 1]], vec![(1, &[3, 1]), (2, &[2, 2]), (2, &[2, 1, 1])]),
        ("(9) m1*m111", vec![&[1], &[1, 1, 1]], vec![(1, &[2, 1, 1]), (4, &[1, 1, 1, 1])]),
        ("(10) m1*m2", vec![&[1], &[2]], vec![(1, &[3]), (1, &[2, 1])]),
        (
            "(11) m1^2*m2",
            vec![&[1], &[1], &[2]],
            vec![(1, &[4]), (2, &[3, 1]), (2, &[2, 2]), (2, &[2, 1, 1])],
        ),
        ("(12) m2^2", vec![&[2], &[2]], vec![(1, &[4]), (2, &[2, 2])]),
        ("(13) m2*m11", vec![&[2], &[1, 1]], vec![(1, &[3, 1]), (1, &[2, 1, 1])]),
    ]
}

/// Builds both sides of every product identity in `s` variables and compares
/// them exactly.
pub fn verify_tf2_table(s: usize) -> Result<Report> {
    if s < 4 {
        return Err(Error::Domain(format!("tf2 table needs s >= 4, got {s}")));
    }
    let mut report = Report::new("tf2", serde_json::json!({ "s": s }));
    for (label, lhs, rhs) in tf2_identities() {
        let left = lhs.iter().fold(MultiPoly::one(s), |acc, p| &acc * &m(p, s));
        let mut right = MultiPoly::zero(s);
        for (coef, p) in rhs {
            right.add_assign(&m(p, s).scale(&Rational::from(coef)))?;
        }
        report.push(Check::new(label, left == right));
    }
    Ok(report)
}

/// Substitution identities for `m_λ(s)(x1, x2, x3, x4, 1, …, 1)` in terms of
/// four-variable monomial symmetric polynomials, plus the full restriction
/// formula on a supplied symmetric polynomial.
pub fn verify_tf2_bis(s: usize, samples: &[MultiPoly]) -> Result<Report> {
    if s < 5 {
        return Err(Error::Domain(format!("restriction identities need s >= 5, got {s}")));
    }
    let mut report = Report::new("tf2-bis", serde_json::json!({ "s": s, "samples": samples.len() }));
    let t = s as i64 - 4;
    let restrict = |parts: &[u32]| m(parts, s).substitute_ones(4).expect("s >= 4");
    let m4 = |parts: &[u32]| m(parts, 4);
    let k = |v: i64| Rational::from(v);
    let one4 = MultiPoly::one(4);

    for i in 1..=4u32 {
        let rhs = m4(&[i]).add_constant(&k(t));
        report.push(Check::new(format!("m{i}(s) restriction"), restrict(&[i]) == rhs));
    }
    for i in 1..=4usize {
        let mut rhs = MultiPoly::zero(4);
        for j in 0..=i {
            let lower = if i == j { one4.clone() } else { monomial_sym(&Partition::ones(i - j), 4) };
            rhs.add_assign(&lower.scale(&c(t, j as i64)))?;
        }
        report.push(Check::new(format!("m_1^{i}(s) restriction"), restrict(&vec![1; i]) == rhs));
    }
    let combo = |terms: &[(Rational, MultiPoly)]| {
        terms.iter().fold(MultiPoly::zero(4), |acc, (a, p)| &acc + &p.scale(a))
    };
    let m31 =
        combo(&[(k(1), m4(&[3, 1])), (k(t), m4(&[3])), (k(t), m4(&[1])), (k(t * (t - 1)), one4.clone())]);
    report.push(Check::new("m31(s) restriction", restrict(&[3, 1]) == m31));
    let m22 = combo(&[(k(1), m4(&[2, 2])), (k(t), m4(&[2])), (c(t, 2), one4.clone())]);
    report.push(Check::new("m22(s) restriction", restrict(&[2, 2]) == m22));
    let m211 = combo(&[
        (k(1), m4(&[2, 1, 1])),
        (k(t), m4(&[2, 1])),
        (c(t, 2), m4(&[2])),
        (k(t), m4(&[1, 1])),
        (k(t * (t - 1)), m4(&[1])),
        (k(t) * c(t - 1, 2), one4.clone()),
    ]);
    report.push(Check::new("m211(s) restriction", restrict(&[2, 1, 1]) == m211));
    let m21 =
        combo(&[(k(1), m4(&[2, 1])), (k(t), m4(&[2])), (k(t), m4(&[1])), (k(t * (t - 1)), one4.clone())]);
    report.push(Check::new("m21(s) restriction", restrict(&[2, 1]) == m21));

    for (idx, g) in samples.iter().enumerate() {
        let ok = (|| -> Result<bool> {
            let full = expand_direct(g)?;
            let four = expand_direct(&g.substitute_ones(4)?)?;
            let forward = restriction_coeffs(&full.coeffs, s) == four.coeffs;
            let inverse = expand_via_restriction(g)? == full;
            Ok(forward && inverse)
        })()
        .unwrap_or(false);
        report.push(Check::new(format!("restriction formula on sample {idx}"), ok));
    }
    Ok(report)
}
