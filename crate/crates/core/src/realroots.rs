//! Distinct real root counting for univariate integer polynomials by Sturm
//! sequences, with fraction-free remainders.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::poly::dense::{deriv, from_dense, positive, prem_positive, primitive, squarefree, to_dense, Dense};
use crate::poly::{Polynomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("zero polynomial has no finite root count")]
    ZeroPolynomial,
    #[error("polynomial is not univariate in the requested variable")]
    NotUnivariate,
}

fn dense_of(f: &Polynomial, v: Var) -> Result<Dense, RootError> {
    if f.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    to_dense(f, v).ok_or(RootError::NotUnivariate)
}

/// A Sturm sequence in one designated variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    pub var: Var,
    pub seq: Vec<Polynomial>,
}

fn chain_dense(a: &[BigInt]) -> Vec<Dense> {
    let p0 = squarefree(a);
    let p1 = deriv(&p0);
    let mut seq = vec![p0];
    if p1.is_empty() {
        return seq;
    }
    seq.push(p1);
    loop {
        let n = seq.len();
        let r = prem_positive(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        let next: Dense = primitive(r).into_iter().map(|c| -c).collect();
        let done = next.len() == 1;
        seq.push(next);
        if done {
            break;
        }
    }
    seq
}

/// Sturm sequence of the squarefree part of `f`: the part itself, its
/// derivative, then negated remainders scaled by positive factors.
pub fn sturm_chain(f: &Polynomial, v: Var) -> Result<SturmChain, RootError> {
    let a = dense_of(f, v)?;
    let seq = chain_dense(&a).iter().map(|d| from_dense(f.nvars(), v, d)).collect();
    Ok(SturmChain { var: v, seq })
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut n = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

fn sign(c: &BigInt) -> i32 {
    if c.is_negative() {
        -1
    } else if c.is_zero() {
        0
    } else {
        1
    }
}

/// Count from the Sturm chain of `a`.
fn count_dense(a: &[BigInt]) -> usize {
    let seq = chain_dense(a);
    let at_pos = sign_changes(seq.iter().map(|p| sign(p.last().expect("nonzero"))));
    let at_neg = sign_changes(seq.iter().map(|p| {
        let s = sign(p.last().expect("nonzero"));
        if (p.len() - 1) % 2 == 1 {
            -s
        } else {
            s
        }
    }));
    at_neg - at_pos
}

/// Above this degree counts use Descartes bisection instead of the Sturm
/// chain, whose coefficients grow too fast.
pub const STURM_MAX_DEGREE: usize = 24;

/// Number of distinct real roots of `f`, univariate in `v`.
pub fn count_real_roots(f: &Polynomial, v: Var) -> Result<usize, RootError> {
    Ok(count_squarefree(&squarefree(&dense_of(f, v)?)))
}

fn count_squarefree(a: &[BigInt]) -> usize {
    if a.len() <= STURM_MAX_DEGREE + 1 {
        count_dense(a)
    } else {
        descartes_count(a)
    }
}

/// Distinct real roots of a squarefree polynomial by Descartes' rule of
/// signs with bisection, counting positive and negative roots separately.
pub(crate) fn descartes_count(a: &[BigInt]) -> usize {
    let mut a = a.to_vec();
    let mut zero = 0;
    while a.first().is_some_and(|c| c.is_zero()) {
        a.remove(0);
        zero = 1;
    }
    let neg: Dense = a.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect();
    zero + positive_roots(&a) + positive_roots(&neg)
}

fn positive_roots(a: &[BigInt]) -> usize {
    if a.len() < 2 {
        return 0;
    }
    let n = a.len() - 1;
    let lead = a[n].bits() as i64;
    // Fujiwara: every root is below 2 max |a_{n-i} / a_n|^(1/i) <= 2^k.
    let k = (1..=n)
        .filter(|&i| !a[n - i].is_zero())
        .map(|i| 1 + ((a[n - i].bits() as i64 - lead + 1).max(0) as u64).div_ceil(i as u64) as i64)
        .max()
        .unwrap_or(0)
        .max(1) as usize;
    let scaled: Dense = a.iter().enumerate().map(|(i, c)| c << (i * k)).collect();
    unit_interval_roots(shrink(scaled))
}

/// Divides out the largest power of two common to all coefficients.
fn shrink(mut a: Dense) -> Dense {
    if let Some(t) = a.iter().filter_map(|c| c.trailing_zeros()).min() {
        if t > 0 {
            a.iter_mut().for_each(|c| *c >>= t);
        }
    }
    a
}

fn taylor_shift_one(a: &mut [BigInt]) {
    let n = a.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = a[j + 1].clone();
            a[j] += t;
        }
    }
}

fn variations(a: &[BigInt]) -> usize {
    sign_changes(a.iter().map(sign))
}

/// Upper bound on the roots in (0, 1), exact when 0 or 1.
fn descartes_unit(a: &[BigInt]) -> usize {
    let mut r: Dense = a.iter().rev().cloned().collect();
    taylor_shift_one(&mut r);
    variations(&r)
}

/// Roots of a squarefree polynomial in the open interval (0, 1).
fn unit_interval_roots(a: Dense) -> usize {
    match descartes_unit(&a) {
        0 => 0,
        1 => 1,
        _ => {
            let n = a.len() - 1;
            // left(x) = 2^n a(x/2) covers (0, 1/2); right(x) = left(x + 1) covers (1/2, 1).
            let left: Dense = shrink(a.iter().enumerate().map(|(i, c)| c << (n - i)).collect());
            let mut right = left.clone();
            taylor_shift_one(&mut right);
            let mid = usize::from(right[0].is_zero());
            if mid == 1 {
                right.remove(0);
            }
            unit_interval_roots(left) + mid + unit_interval_roots(right)
        }
    }
}

/// Sum of the distinct real root counts over the set, after deduplicating
/// members with the same squarefree part. Roots shared between different
/// members are counted once per member.
pub fn ndrr<'a>(set: impl IntoIterator<Item = &'a Polynomial>, v: Var) -> Result<usize, RootError> {
    let mut seen = BTreeSet::new();
    let mut total = 0;
    for f in set {
        if f.is_zero() {
            return Err(RootError::ZeroPolynomial);
        }
        let d = positive(squarefree(&dense_of(f, v)?));
        if !seen.contains(&d) {
            total += count_squarefree(&d);
            seen.insert(d);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_str;

    const X: Var = Var(0);

    fn uni(text: &str) -> Polynomial {
        let p = parse_str(&format!("vars: x\nqff: {text} = 0")).unwrap();
        p.qffs[0].constraints[0].poly().clone()
    }

    fn dense(f: &Polynomial) -> Dense {
        dense_of(f, X).unwrap()
    }

    /// Compare chains up to positive scaling of each entry.
    fn assert_chain(f: &str, expected: &[&str]) {
        let c = sturm_chain(&uni(f), X).unwrap();
        assert_eq!(c.seq.len(), expected.len(), "chain {:?}", c.seq);
        for (got, want) in c.seq.iter().zip(expected) {
            let g = dense(got);
            let w = dense(&uni_signed(want));
            assert_eq!(primitive(g.clone()), primitive(w.clone()), "{f}: entry");
            assert_eq!(g.last().unwrap().is_negative(), w.last().unwrap().is_negative());
        }
    }

    /// Keep the sign as written (parse normalizes it away).
    fn uni_signed(text: &str) -> Polynomial {
        let (neg, body) = match text.strip_prefix("neg ") {
            Some(b) => (true, b),
            None => (false, text),
        };
        let p = uni(body);
        if neg {
            -p
        } else {
            p
        }
    }

    #[test]
    fn chains() {
        assert_chain("x^2 - 2", &["x^2 - 2", "2*x", "2"]);
        assert_chain("x^2 + 1", &["x^2 + 1", "2*x", "neg 1"]);
        assert_chain("x - 5", &["x - 5", "1"]);
    }

    #[test]
    fn counts() {
        assert_eq!(count_real_roots(&uni("x^3 - x"), X), Ok(3));
        assert_eq!(count_real_roots(&uni("x^2 + 1"), X), Ok(0));
        assert_eq!(count_real_roots(&uni("x^5 - 3*x + 1"), X), Ok(3));
        assert_eq!(count_real_roots(&uni("(x-1)^2*(x+2)"), X), Ok(2));
        assert_eq!(count_real_roots(&uni("7"), X), Ok(0));
        assert_eq!(count_real_roots(&uni("-(x-1)*(x-2)*(x-3)*(x^2+1)"), X), Ok(3));
    }

    #[test]
    fn errors() {
        assert_eq!(count_real_roots(&Polynomial::zero(1), X), Err(RootError::ZeroPolynomial));
        let p = parse_str("vars: x, y\nqff: x*y = 1").unwrap();
        assert_eq!(count_real_roots(p.qffs[0].constraints[0].poly(), X), Err(RootError::NotUnivariate));
    }

    #[test]
    fn descartes_agrees_with_sturm() {
        for text in ["x^3 - x", "x^2 + 1", "x^5 - 3*x + 1", "(x-1)*(x-2)*(x-3)*(x-4)*(x-5)*(x+7)", "x*(4*x^2 - 1)", "x^7 - 2", "(x^2-2)*(x^2-3)*(x^2-5)", "1000*x^2 - 2001*x + 1001"] {
            let d = squarefree(&dense(&uni(text)));
            assert_eq!(descartes_count(&d), count_dense(&d), "{text}");
        }
    }

    #[test]
    fn ndrr_sums_per_polynomial() {
        let a = [uni("x^2 - 2"), uni("x^2 + 1")];
        assert_eq!(ndrr(&a, X), Ok(2));
        assert_eq!(ndrr(&[], X), Ok(0));
        let b = [uni("x^3 - x"), uni("x - 1")];
        assert_eq!(ndrr(&b, X), Ok(4));
    }
}
