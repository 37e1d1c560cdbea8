//! Sparse multivariate polynomials over [`Rational`] in a fixed variable set
//! `x1, …, xs`.
//!
//! The term map never stores a zero coefficient, so two polynomials are equal
//! exactly when their term maps are equal. Iteration for printing uses
//! lexicographic order on exponent vectors, highest first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::Rational;
use crate::error::{Error, Result};

/// Largest supported number of variables.
pub const MAX_VARS: usize = 12;

/// Exponent vector. Entries past the owning polynomial's `nvars` are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial([u8; MAX_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; MAX_VARS]);

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVars(exps.len()));
        }
        let mut m = [0u8; MAX_VARS];
        for (slot, &e) in m.iter_mut().zip(exps) {
            *slot = u8::try_from(e).map_err(|_| Error::ExponentOverflow)?;
        }
        Ok(Monomial(m))
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> u32 {
        self.0[var] as u32
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Variable `i` moved to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut out = Monomial::ONE;
        for (i, &target) in perm.iter().enumerate() {
            out.0[target] = self.0[i];
        }
        out
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.0[..nvars].iter().map(|&e| e as u32).collect()
    }

    fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut out = [0u8; MAX_VARS];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(&other.0)) {
            *o = a.checked_add(*b).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial(out))
    }

    fn with_exponent(mut self, var: usize, e: u8) -> Monomial {
        self.0[var] = e;
        self
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: FxHashMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!((1..=MAX_VARS).contains(&nvars), "nvars must lie in 1..={MAX_VARS}, got {nvars}");
        MultiPoly { nvars, terms: FxHashMap::default() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = MultiPoly::zero(nvars);
        p.add_term(Monomial::ONE, c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, Rational::one())
    }

    /// The variable `x_{index+1}` (zero-based index).
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index {index} out of range for {nvars} variables");
        let mut p = MultiPoly::zero(nvars);
        p.add_term(Monomial::ONE.with_exponent(index, 1), Rational::one());
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        if nvars == 0 || nvars > MAX_VARS {
            return Err(Error::TooManyVars(nvars));
        }
        let mut p = MultiPoly::zero(nvars);
        for (exps, c) in terms {
            if exps.len() != nvars {
                return Err(Error::Dimension { expected: nvars, got: exps.len() });
            }
            p.add_term(Monomial::from_exponents(&exps)?, c);
        }
        Ok(p)
    }

    /// Sum of all variables.
    pub fn sum_of_vars(nvars: usize) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for i in 0..nvars {
            p.add_term(Monomial::ONE.with_exponent(i, 1), Rational::one());
        }
        p
    }

    /// Product of all variables, the monomial `x1⋯xs`.
    pub fn product_of_vars(nvars: usize) -> Self {
        let mut m = Monomial::ONE;
        for i in 0..nvars {
            m = m.with_exponent(i, 1);
        }
        let mut p = MultiPoly::zero(nvars);
        p.add_term(m, Rational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of nonzero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms in canonical order: lexicographic on exponent vectors, highest first.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_unstable_by(|a, b| b.0.cmp(a.0));
        v
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Adds `c·m`, pruning the entry if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    fn add_term_ref(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    fn check_dims(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension { expected: self.nvars, got: other.nvars });
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_dims(other)?;
        let (mut big, small) =
            if self.len() >= other.len() { (self.clone(), other) } else { (other.clone(), self) };
        for (m, c) in &small.terms {
            big.add_term_ref(*m, c);
        }
        Ok(big)
    }

    pub fn add_assign(&mut self, other: &MultiPoly) -> Result<()> {
        self.check_dims(other)?;
        for (m, c) in &other.terms {
            self.add_term_ref(*m, c);
        }
        Ok(())
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_dims(other)?;
        let mut out = MultiPoly::zero(self.nvars);
        out.terms.reserve(self.len().max(other.len()));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.checked_mul(mb)?, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Result<MultiPoly> {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..exp {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        let mut out = self.clone();
        out.scale_in_place(c);
        out
    }

    pub fn scale_in_place(&mut self, c: &Rational) {
        if c.is_zero() {
            self.terms.clear();
            return;
        }
        for v in self.terms.values_mut() {
            *v *= c;
        }
    }

    pub fn add_constant(&self, c: &Rational) -> MultiPoly {
        let mut out = self.clone();
        out.add_term_ref(Monomial::ONE, c);
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::Dimension { expected: self.nvars, got: point.len() });
        }
        let max_deg: Vec<u32> =
            (0..self.nvars).map(|i| self.terms.keys().map(|m| m.exponent(i)).max().unwrap_or(0)).collect();
        let powers: Vec<Vec<Rational>> = point
            .iter()
            .zip(&max_deg)
            .map(|(x, &d)| {
                let mut v = Vec::with_capacity(d as usize + 1);
                v.push(Rational::one());
                for k in 1..=d as usize {
                    let next = &v[k - 1] * x;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, pw) in powers.iter().enumerate() {
                let e = m.exponent(i) as usize;
                if e > 0 {
                    t *= &pw[e];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Evaluation at an integer point.
    pub fn eval_int(&self, point: &[i64]) -> Result<Rational> {
        let pt: Vec<Rational> = point.iter().map(|&v| Rational::from(v)).collect();
        self.eval(&pt)
    }

    /// Sets `x_{k+1} = … = x_s = 1`, returning a polynomial in `k` variables.
    pub fn substitute_ones(&self, k: usize) -> Result<MultiPoly> {
        if k == 0 || k > self.nvars {
            return Err(Error::Domain(format!("substitute_ones: k = {k} outside 1..={}", self.nvars)));
        }
        let mut out = MultiPoly::zero(k);
        for (m, c) in &self.terms {
            let mut reduced = *m;
            for i in k..MAX_VARS {
                reduced.0[i] = 0;
            }
            out.add_term_ref(reduced, c);
        }
        Ok(out)
    }

    /// Quotient by `x1⋯xs`. Fails with [`Error::NotDivisible`] if some term
    /// misses a variable, which makes this the divisibility test as well.
    pub fn divide_all_vars(&self) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut q = *m;
            for i in 0..self.nvars {
                if q.0[i] == 0 {
                    return Err(Error::NotDivisible);
                }
                q.0[i] -= 1;
            }
            out.terms.insert(q, c.clone());
        }
        Ok(out)
    }

    /// Stored coefficient of `x^exps`, or zero.
    ///
    /// Panics if `exps.len() != nvars`.
    pub fn coefficient_of(&self, exps: &[u32]) -> Rational {
        assert_eq!(exps.len(), self.nvars, "exponent vector length must equal nvars");
        match Monomial::from_exponents(exps) {
            Ok(m) => self.terms.get(&m).cloned().unwrap_or_else(Rational::zero),
            Err(_) => Rational::zero(),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Renames variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> MultiPoly {
        assert_eq!(perm.len(), self.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        out.terms.reserve(self.len());
        for (m, c) in &self.terms {
            out.terms.insert(m.permuted(perm), c.clone());
        }
        out
    }

    /// Substitutes `x_i -> subs[i]`. The result lives in the variable set of
    /// the substituted polynomials.
    pub fn compose(&self, subs: &[MultiPoly]) -> Result<MultiPoly> {
        if subs.len() != self.nvars {
            return Err(Error::Dimension { expected: self.nvars, got: subs.len() });
        }
        let target = subs.first().map(MultiPoly::nvars).unwrap_or(1);
        if let Some(bad) = subs.iter().find(|p| p.nvars != target) {
            return Err(Error::Dimension { expected: target, got: bad.nvars });
        }
        if let Some(fast) = self.compose_scaled(subs, target) {
            return Ok(fast);
        }
        let mut powers: Vec<Vec<MultiPoly>> = Vec::with_capacity(self.nvars);
        for (i, sub) in subs.iter().enumerate() {
            let top = self.terms.keys().map(|m| m.exponent(i)).max().unwrap_or(0);
            let mut row = vec![MultiPoly::one(target)];
            for e in 1..=top as usize {
                let next = row[e - 1].mul(sub)?;
                row.push(next);
            }
            powers.push(row);
        }
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(target, c.clone());
            for (i, row) in powers.iter().enumerate() {
                let e = m.exponent(i) as usize;
                if e > 0 {
                    term = term.mul(&row[e])?;
                }
            }
            out.add_assign(&term)?;
        }
        Ok(out)
    }

    /// [`MultiPoly::compose`] over a common denominator in `i128`, for
    /// integer substitutions. `None` means the fast path does not apply.
    fn compose_scaled(&self, subs: &[MultiPoly], target: usize) -> Option<MultiPoly> {
        type IntTerms = Vec<(Monomial, i128)>;
        let (den, scaled) = self.scaled_terms()?;
        let mut powers: Vec<Vec<IntTerms>> = Vec::with_capacity(self.nvars);
        let mut out_degree = 0u32;
        for (i, sub) in subs.iter().enumerate() {
            let mut base: IntTerms = Vec::with_capacity(sub.len());
            for (m, c) in &sub.terms {
                if !c.is_integer() {
                    return None;
                }
                base.push((*m, num_traits::ToPrimitive::to_i128(c.numer())?));
            }
            let top = self.terms.keys().map(|m| m.exponent(i)).max().unwrap_or(0);
            let mut row: Vec<IntTerms> = vec![vec![(Monomial::ONE, 1)]];
            for e in 1..=top as usize {
                let mut acc: FxHashMap<Monomial, i128> = FxHashMap::default();
                for (ma, ca) in &row[e - 1] {
                    for (mb, cb) in &base {
                        let slot = acc.entry(ma.checked_mul(mb).ok()?).or_insert(0);
                        *slot = slot.checked_add(ca.checked_mul(*cb)?)?;
                    }
                }
                row.push(acc.into_iter().filter(|(_, c)| *c != 0).collect());
            }
            powers.push(row);
        }
        for (m, _) in &scaled {
            let mut d = 0u32;
            for (i, sub) in subs.iter().enumerate() {
                d += m.exponent(i) * sub.total_degree().unwrap_or(0);
            }
            out_degree = out_degree.max(d);
        }
        let index = DenseIndex::new(target, out_degree)?;
        let mut acc = vec![0i128; index.len()];
        for (m, c) in &scaled {
            let mut partial: IntTerms = vec![(Monomial::ONE, *c)];
            for (i, row) in powers.iter().enumerate() {
                let e = m.exponent(i) as usize;
                if e == 0 {
                    continue;
                }
                let mut next = Vec::with_capacity(partial.len() * row[e].len());
                for (ma, ca) in &partial {
                    for (mb, cb) in &row[e] {
                        next.push((ma.checked_mul(mb).ok()?, ca.checked_mul(*cb)?));
                    }
                }
                partial = next;
            }
            for (mm, v) in partial {
                let slot = &mut acc[index.rank(&mm)];
                *slot = slot.checked_add(v)?;
            }
        }
        let mut out = MultiPoly::zero(target);
        for (m, v) in index.monomials().into_iter().zip(acc) {
            if v != 0 {
                out.terms.insert(m, Rational::new(v, den).expect("nonzero denominator"));
            }
        }
        Some(out)
    }

    /// Coefficients times their common denominator, if everything fits in `i128`.
    fn scaled_terms(&self) -> Option<(i128, Vec<(Monomial, i128)>)> {
        use num_integer::Integer;
        use num_traits::ToPrimitive;

        let denom = self.terms.values().fold(num_bigint::BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let den = denom.to_i128()?;
        let mut scaled = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            scaled.push((*m, (c.numer() * (&denom / c.denom())).to_i128()?));
        }
        Some((den, scaled))
    }

    /// `Σ_I σ_I(self)` over all `k`-subsets `I` of the variables, where `σ_I`
    /// sends the first `k` variables onto `I` and the rest, in order, onto the
    /// complement.
    ///
    /// Accumulates over a common denominator in `i128` and only falls back to
    /// rational accumulation if that overflows.
    pub fn orbit_sum(&self, k: usize) -> Result<MultiPoly> {
        if k > self.nvars {
            return Err(Error::Domain(format!("orbit_sum: k = {k} exceeds {} variables", self.nvars)));
        }
        let perms: Vec<Vec<usize>> = k_subsets(self.nvars, k)
            .into_iter()
            .map(|subset| {
                let mut perm = subset.clone();
                perm.extend((0..self.nvars).filter(|v| !subset.contains(v)));
                perm
            })
            .collect();
        if let Some(fast) = self.orbit_sum_scaled(&perms) {
            return Ok(fast);
        }
        let mut out = MultiPoly::zero(self.nvars);
        for perm in &perms {
            for (m, c) in &self.terms {
                out.add_term_ref(m.permuted(perm), c);
            }
        }
        Ok(out)
    }

    fn orbit_sum_scaled(&self, perms: &[Vec<usize>]) -> Option<MultiPoly> {
        let (den, scaled) = self.scaled_terms()?;
        let mut out = MultiPoly::zero(self.nvars);
        let degree = self.total_degree().unwrap_or(0);
        if let Some(index) = DenseIndex::new(self.nvars, degree) {
            let mut acc = vec![0i128; index.len()];
            for perm in perms {
                for (m, v) in &scaled {
                    let slot = &mut acc[index.rank(&m.permuted(perm))];
                    *slot = slot.checked_add(*v)?;
                }
            }
            for (m, v) in index.monomials().into_iter().zip(acc) {
                if v != 0 {
                    out.terms.insert(m, Rational::new(v, den).expect("nonzero denominator"));
                }
            }
            return Some(out);
        }
        let mut acc: FxHashMap<Monomial, i128> = FxHashMap::default();
        acc.reserve(self.len() * 2);
        for perm in perms {
            for (m, v) in &scaled {
                let slot = acc.entry(m.permuted(perm)).or_insert(0);
                *slot = slot.checked_add(*v)?;
            }
        }
        out.terms.reserve(acc.len());
        for (m, v) in acc {
            if v != 0 {
                out.terms.insert(m, Rational::new(v, den).expect("nonzero denominator"));
            }
        }
        Some(out)
    }

    /// Invariance under the transposition `x1 ↔ x2` and the cycle
    /// `x1 → x2 → … → xs → x1`, which together generate the symmetric group.
    pub fn is_symmetric(&self) -> bool {
        let s = self.nvars;
        if s == 1 {
            return true;
        }
        let mut swap: Vec<usize> = (0..s).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (0..s).map(|i| (i + 1) % s).collect();
        self.permute_vars(&swap) == *self && self.permute_vars(&cycle) == *self
    }

    /// The same polynomial viewed in `nvars` variables, `nvars >= self.nvars()`.
    pub fn extend_vars(&self, nvars: usize) -> Result<MultiPoly> {
        if nvars < self.nvars || nvars > MAX_VARS {
            return Err(Error::Domain(format!("cannot embed {} variables into {nvars}", self.nvars)));
        }
        Ok(MultiPoly { nvars, terms: self.terms.clone() })
    }

    /// Parses the textual form produced by `Display`, in `nvars` variables.
    pub fn parse(text: &str, nvars: usize) -> Result<MultiPoly> {
        let parsed = parse_terms(text)?;
        let needed = parsed.iter().map(|(e, _)| e.len()).max().unwrap_or(0);
        if needed > nvars {
            return Err(Error::Dimension { expected: nvars, got: needed });
        }
        let mut p = MultiPoly::zero(nvars);
        for (exps, c) in parsed {
            p.add_term(Monomial::from_exponents(&exps)?, c);
        }
        Ok(p)
    }
}

fn parse_terms(text: &str) -> Result<Vec<(Vec<u32>, Rational)>> {
    let bad = |msg: &str| Error::Parse(format!("{msg} in `{text}`"));
    let text = text.trim();
    if text.is_empty() {
        return Err(bad("empty polynomial"));
    }
    let mut out = Vec::new();
    for term in text.split(" + ") {
        let term = term.trim();
        let mut coeff = Rational::one();
        let mut exps: Vec<u32> = Vec::new();
        for (idx, factor) in term.split('*').enumerate() {
            let factor = factor.trim();
            if let Some(rest) = factor.strip_prefix('x') {
                let (var, exp) = match rest.split_once('^') {
                    Some((v, e)) => (v, e.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                    None => (rest, 1),
                };
                let var: usize = var.parse().map_err(|_| bad("bad variable index"))?;
                if var == 0 {
                    return Err(bad("variables are numbered from x1"));
                }
                if exps.len() < var {
                    exps.resize(var, 0);
                }
                exps[var - 1] += exp;
            } else if idx == 0 {
                coeff = factor.parse()?;
            } else {
                return Err(bad("coefficient must come first"));
            }
        }
        out.push((exps, coeff));
    }
    Ok(out)
}

impl FromStr for MultiPoly {
    type Err = Error;

    /// Parses with as many variables as the highest index mentioned (at least one).
    fn from_str(s: &str) -> Result<Self> {
        let parsed = parse_terms(s)?;
        let nvars = parsed.iter().map(|(e, _)| e.len()).max().unwrap_or(0).max(1);
        MultiPoly::parse(s, nvars)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            let factors: Vec<String> = (0..self.nvars)
                .filter(|&i| m.exponent(i) > 0)
                .map(|i| format!("x{}^{}", i + 1, m.exponent(i)))
                .collect();
            if !factors.is_empty() {
                write!(f, " * {}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRecord {
    nvars: usize,
    poly: String,
}

/// Serialized as `{"nvars": n, "poly": "<canonical text>"}`.
impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRecord { nvars: self.nvars, poly: self.to_string() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rec = PolyRecord::deserialize(deserializer)?;
        MultiPoly::parse(&rec.poly, rec.nvars).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.nvars, self)
    }
}

// Operator forms panic on a variable-count mismatch; use the named methods to
// get a `Result` instead.
impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::add(self, rhs).expect("operand variable counts differ")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::sub(self, rhs).expect("operand variable counts differ")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::mul(self, rhs).expect("operand variable counts differ")
    }
}

impl Mul<&Rational> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &Rational) -> MultiPoly {
        self.scale(rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&Rational::from(-1))
    }
}

/// Dense ranking of all monomials of total degree `<= degree` in `nvars`
/// variables, ordered lexicographically by exponent vector.
struct DenseIndex {
    nvars: usize,
    degree: usize,
    // offsets[(i * (degree + 1) + budget) * (degree + 1) + e]
    offsets: Vec<usize>,
    len: usize,
}

impl DenseIndex {
    const MAX_LEN: usize = 1 << 22;

    fn new(nvars: usize, degree: u32) -> Option<Self> {
        let degree = degree as usize;
        let count = |n: usize, b: usize| -> Option<usize> {
            let mut c: u128 = 1;
            for i in 1..=n as u128 {
                c = c * (b as u128 + i) / i;
            }
            usize::try_from(c).ok()
        };
        let len = count(nvars, degree)?;
        if len > Self::MAX_LEN {
            return None;
        }
        let w = degree + 1;
        let mut offsets = vec![0usize; nvars * w * w];
        for i in 0..nvars {
            let rest = nvars - i - 1;
            for budget in 0..=degree {
                let mut acc = 0;
                for e in 0..=budget {
                    offsets[(i * w + budget) * w + e] = acc;
                    acc += count(rest, budget - e)?;
                }
            }
        }
        Some(DenseIndex { nvars, degree, offsets, len })
    }

    fn len(&self) -> usize {
        self.len
    }

    fn rank(&self, m: &Monomial) -> usize {
        let w = self.degree + 1;
        let mut budget = self.degree;
        let mut r = 0;
        for i in 0..self.nvars {
            let e = m.0[i] as usize;
            r += self.offsets[(i * w + budget) * w + e];
            budget -= e;
        }
        r
    }

    fn monomials(&self) -> Vec<Monomial> {
        fn rec(i: usize, budget: usize, cur: &mut Monomial, n: usize, out: &mut Vec<Monomial>) {
            if i == n {
                out.push(*cur);
                return;
            }
            for e in 0..=budget {
                cur.0[i] = e as u8;
                rec(i + 1, budget - e, cur, n, out);
            }
            cur.0[i] = 0;
        }
        let mut out = Vec::with_capacity(self.len);
        rec(0, self.degree, &mut Monomial([0; MAX_VARS]), self.nvars, &mut out);
        out
    }
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            break;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}
