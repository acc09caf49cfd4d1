//! Sparse multivariate polynomials with arbitrary-precision integer coefficients.
//!
//! Variables are positions in a problem's declared variable list. Every
//! polynomial carries the number of variables it is defined over and stores
//! its terms sorted by descending graded-lexicographic order, so the first
//! term is the leading term.

pub(crate) mod dense;
mod gcd;
mod resultant;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;
use thiserror::Error;

pub use gcd::{content_primitive, gcd, squarefree_part};
pub use resultant::{discriminant, resultant};

/// Index of a variable within a problem's declared variable list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("undefined tdeg: zero polynomial")]
    UndefinedTotalDegree,
    #[error("{0}: zero polynomial argument")]
    ZeroArgument(&'static str),
    #[error("polynomial is not univariate in the requested variable")]
    NotUnivariate,
}

/// Exponent vector, one entry per declared variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, v: Var) -> Self {
        let mut m = Self::one(nvars);
        m.0[v.0] = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.get(v.0).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn contains(&self, v: Var) -> bool {
        self.exponent(v) > 0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect())
    }

    fn with_exponent(&self, v: Var, e: u32) -> Monomial {
        let mut m = self.clone();
        m.0[v.0] = e;
        m
    }
}

/// Graded lexicographic order: total degree first, then exponents compared
/// from the lowest variable index.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    nvars: usize,
    /// Descending monomial order, no zero coefficients.
    terms: Vec<(Monomial, BigInt)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: Vec::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial { nvars, terms: vec![(Monomial::one(nvars), c)] }
    }

    pub fn var(nvars: usize, v: Var) -> Self {
        assert!(v.0 < nvars, "variable index {} out of range for {nvars} variables", v.0);
        Polynomial { nvars, terms: vec![(Monomial::var(nvars, v), BigInt::one())] }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.0.len(), nvars, "monomial arity mismatch");
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(nvars, acc)
    }

    fn from_map(nvars: usize, acc: BTreeMap<Monomial, BigInt>) -> Self {
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for nonzero constants and for zero.
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn contains(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.contains(v))
    }

    /// Variables with a positive exponent somewhere in the polynomial.
    pub fn variables(&self) -> Vec<Var> {
        (0..self.nvars).map(Var).filter(|&v| self.contains(v)).collect()
    }

    /// Degree in `v`; `-1` for the zero polynomial.
    pub fn degree(&self, v: Var) -> i64 {
        if self.is_zero() {
            return -1;
        }
        self.terms.iter().map(|(m, _)| m.exponent(v) as i64).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> Result<u32, PolyError> {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .ok_or(PolyError::UndefinedTotalDegree)
    }

    pub fn leading_term(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.first()
    }

    /// Coefficients in `v` from the leading power down to `v^0`.
    pub fn coefficients(&self, v: Var) -> Vec<Polynomial> {
        let mut asc = self.univariate_coeffs(v);
        asc.reverse();
        asc
    }

    /// Leading coefficient in `v`; zero for the zero polynomial.
    pub fn lcoeff(&self, v: Var) -> Polynomial {
        self.univariate_coeffs(v).pop().unwrap_or_else(|| Polynomial::zero(self.nvars))
    }

    /// Coefficients in `v` in ascending power order; empty for zero.
    pub(crate) fn univariate_coeffs(&self, v: Var) -> Vec<Polynomial> {
        let d = self.degree(v);
        if d < 0 {
            return Vec::new();
        }
        let mut buckets: Vec<Vec<(Monomial, BigInt)>> = vec![Vec::new(); d as usize + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(v) as usize;
            buckets[e].push((m.with_exponent(v, 0), c.clone()));
        }
        buckets
            .into_iter()
            .map(|ts| {
                // Removing one exponent can reorder terms, so rebuild.
                Polynomial::from_terms(self.nvars, ts)
            })
            .collect()
    }

    /// Inverse of `univariate_coeffs`: `sum coeffs[i] * v^i`.
    pub(crate) fn from_univariate(nvars: usize, v: Var, coeffs: &[Polynomial]) -> Polynomial {
        let terms = coeffs.iter().enumerate().flat_map(|(i, c)| {
            c.terms.iter().map(move |(m, k)| (m.with_exponent(v, m.exponent(v) + i as u32), k.clone()))
        });
        Polynomial::from_terms(nvars, terms)
    }

    pub fn derivative(&self, v: Var) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| m.contains(v)).map(|(m, c)| {
            let e = m.exponent(v);
            (m.with_exponent(v, e - 1), c * BigInt::from(e))
        });
        Polynomial::from_terms(self.nvars, terms)
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Gcd of the integer coefficients (nonnegative).
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact division by an integer; `None` if some coefficient is not divisible.
    pub fn div_integer(&self, k: &BigInt) -> Option<Polynomial> {
        if k.is_zero() {
            return None;
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            terms.push((m.clone(), q));
        }
        Some(Polynomial { nvars: self.nvars, terms })
    }

    /// Exact division; `None` when `divisor` does not divide `self` in Z[vars].
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Polynomial::zero(self.nvars));
        }
        if let Some(k) = divisor.constant_value() {
            return self.div_integer(&k);
        }
        let (lm, lc) = divisor.leading_term().expect("nonzero");
        let mut rem: BTreeMap<Monomial, BigInt> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.iter().next_back() {
            if !lm.divides(m) {
                return None;
            }
            let (qc, r) = c.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            let qm = m.div(lm);
            for (dm, dc) in &divisor.terms {
                let key = dm.mul(&qm);
                let entry = rem.entry(key.clone()).or_insert_with(BigInt::zero);
                *entry -= dc * &qc;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.push((qm, qc));
        }
        // Quotient terms were produced in descending order.
        Some(Polynomial { nvars: self.nvars, terms: quot })
    }

    /// Sign of the leading coefficient under graded-lex order; 0 for zero.
    pub fn leading_sign(&self) -> i32 {
        match self.terms.first() {
            Some((_, c)) if c.is_negative() => -1,
            Some(_) => 1,
            None => 0,
        }
    }

    /// Multiplies by -1 if needed so the leading coefficient is positive.
    pub fn sign_normalized(&self) -> Polynomial {
        if self.leading_sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Integer-primitive, sign-normalized associate.
    pub fn primitive_normalized(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.integer_content();
        let p = self.div_integer(&c).expect("content divides");
        p.sign_normalized()
    }

    /// Substitutes an integer for `v`.
    pub fn eval(&self, v: Var, value: &BigInt) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            let e = m.exponent(v);
            (m.with_exponent(v, 0), c * value.pow(e))
        });
        Polynomial::from_terms(self.nvars, terms)
    }

    /// Rewrites variable indices through `map` (old index -> new index) into
    /// a polynomial over `new_nvars` variables.
    pub fn remap(&self, map: &[Var], new_nvars: usize) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps: SmallVec<[u32; 4]> = SmallVec::from_elem(0, new_nvars);
            for (old, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    exps[map[old].0] += e;
                }
            }
            (Monomial(exps), c.clone())
        });
        Polynomial::from_terms(new_nvars, terms)
    }

    /// Sum of the total degrees of all monomials.
    pub fn sum_of_total_degrees(&self) -> u64 {
        self.terms.iter().map(|(m, _)| m.total_degree() as u64).sum()
    }

    pub fn display<'a, S: AsRef<str>>(&'a self, names: &'a [S]) -> PolyDisplay<'a, S> {
        PolyDisplay { poly: self, names }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial arity mismatch");
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (a, b) = (&self.terms[i], &rhs.terms[j]);
            match a.0.cmp(&b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.1 + &b.1;
                    if !c.is_zero() {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&rhs.terms[j..]);
        Polynomial { nvars: self.nvars, terms: out }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for t in &mut self.terms {
            t.1 = -std::mem::take(&mut t.1);
        }
        self
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial arity mismatch");
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        if let Some(k) = rhs.constant_value() {
            return self.scale(&k);
        }
        if let Some(k) = self.constant_value() {
            return rhs.scale(&k);
        }
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let e = acc.entry(ma.mul(mb)).or_insert_with(BigInt::zero);
                *e += ca * cb;
            }
        }
        Polynomial::from_map(self.nvars, acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

pub struct PolyDisplay<'a, S> {
    poly: &'a Polynomial,
    names: &'a [S],
}

impl<S: AsRef<str>> fmt::Display for PolyDisplay<'_, S> {
    /// Terms in descending graded-lex order with explicit `*` and `^`,
    /// unit coefficients elided: `x^2*y-3*z+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.poly.terms.iter().enumerate() {
            if c.is_negative() {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let mag = c.abs();
            let mut first = true;
            if !mag.is_one() || m.is_one() {
                write!(f, "{mag}")?;
                first = false;
            }
            for (idx, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                match self.names.get(idx) {
                    Some(n) => write!(f, "{}", n.as_ref())?,
                    None => write!(f, "v{idx}")?,
                }
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
