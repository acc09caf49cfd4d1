//! Dense univariate integer polynomials, ascending coefficients with no
//! trailing zeros.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Polynomial, Var};

pub(crate) type Dense = Vec<BigInt>;

/// Coefficients of `f` in `v`; `None` if another variable occurs.
pub(crate) fn to_dense(f: &Polynomial, v: Var) -> Option<Dense> {
    let mut out = vec![BigInt::zero(); f.degree(v).max(0) as usize + 1];
    for (m, c) in f.terms() {
        if m.exponents().iter().enumerate().any(|(i, &e)| i != v.0 && e > 0) {
            return None;
        }
        out[m.exponent(v) as usize] = c.clone();
    }
    trim(&mut out);
    Some(out)
}

pub(crate) fn from_dense(nvars: usize, v: Var, a: &[BigInt]) -> Polynomial {
    Polynomial::from_terms(
        nvars,
        a.iter().enumerate().map(|(i, c)| {
            let mut e = vec![0u32; nvars];
            e[v.0] = i as u32;
            (Monomial::from_exponents(&e), c.clone())
        }),
    )
}

pub(crate) fn trim(a: &mut Dense) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

pub(crate) fn deriv(a: &[BigInt]) -> Dense {
    let mut d: Dense = a.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    trim(&mut d);
    d
}

pub(crate) fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides by the positive integer content.
pub(crate) fn primitive(mut a: Dense) -> Dense {
    let g = content(&a);
    if !g.is_zero() && !g.is_one() {
        for c in a.iter_mut() {
            *c /= &g;
        }
    }
    a
}

fn negate(a: &mut Dense) {
    for c in a.iter_mut() {
        *c = -std::mem::take(c);
    }
}

/// Makes the leading coefficient positive.
pub(crate) fn positive(mut a: Dense) -> Dense {
    if a.last().is_some_and(|c| c.is_negative()) {
        negate(&mut a);
    }
    a
}

/// Remainder of `|lc(b)|^(deg a - deg b + 1) * a` by `b`: a positive multiple
/// of the true remainder, so signs are preserved.
pub(crate) fn prem_positive(a: &[BigInt], b: &[BigInt]) -> Dense {
    let mut r: Dense = a.to_vec();
    if r.len() < b.len() {
        return r;
    }
    let lb = b.last().expect("nonzero divisor").clone();
    let total = (a.len() - b.len() + 1) as u32;
    let mut steps = 0u32;
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let t = r.last().expect("nonempty").clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &t * bc;
        }
        r.pop();
        trim(&mut r);
        steps += 1;
    }
    // Early exit skipped some multiplications by lb; restore lb^total.
    if steps < total {
        let s = lb.pow(total - steps);
        for c in r.iter_mut() {
            *c *= &s;
        }
    }
    if lb.is_negative() && total % 2 == 1 {
        negate(&mut r);
    }
    r
}

/// `a / b` if `b` divides `a` exactly over the integers.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Dense> {
    if b.is_empty() {
        return None;
    }
    if a.len() < b.len() {
        return if a.is_empty() { Some(Vec::new()) } else { None };
    }
    let lb = b.last().expect("nonempty");
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let (qc, rem) = r.last().expect("nonempty").div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &qc * bc;
        }
        q[shift] = qc;
        r.pop();
        trim(&mut r);
    }
    r.is_empty().then_some(q)
}

fn max_norm(a: &[BigInt]) -> BigInt {
    a.iter().map(|c| c.abs()).max().unwrap_or_default()
}

fn eval(a: &[BigInt], x: &BigInt) -> BigInt {
    a.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Heuristic gcd of primitive inputs: evaluate at a large integer, take the
/// integer gcd and read its balanced base-xi digits back as a polynomial.
/// Accepted only if it divides both inputs, which makes it the gcd.
fn heu_gcd(a: &[BigInt], b: &[BigInt]) -> Option<Dense> {
    let mut xi = max_norm(a).min(max_norm(b)) * 2 + 29;
    for _ in 0..6 {
        let mut g = eval(a, &xi).gcd(&eval(b, &xi));
        if !g.is_zero() {
            let half = &xi / 2;
            let mut digits = Vec::new();
            while !g.is_zero() {
                let mut r = g.mod_floor(&xi);
                if r > half {
                    r -= &xi;
                }
                g = (g - &r) / &xi;
                digits.push(r);
            }
            trim(&mut digits);
            let cand = positive(primitive(digits));
            if !cand.is_empty() && div_exact(a, &cand).is_some() && div_exact(b, &cand).is_some() {
                return Some(cand);
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

/// Euclid on primitive remainders.
fn prs_gcd(a: &[BigInt], b: &[BigInt]) -> Dense {
    let (mut a, mut b) = if a.len() >= b.len() { (a.to_vec(), b.to_vec()) } else { (b.to_vec(), a.to_vec()) };
    while !b.is_empty() {
        let r = prem_positive(&a, &b);
        a = b;
        b = primitive(r);
    }
    positive(a)
}

/// Gcd of the primitive parts, primitive with positive leading coefficient.
pub(crate) fn gcd_primitive(a: &[BigInt], b: &[BigInt]) -> Dense {
    if a.is_empty() {
        return positive(primitive(b.to_vec()));
    }
    if b.is_empty() {
        return positive(primitive(a.to_vec()));
    }
    let a = primitive(a.to_vec());
    let b = primitive(b.to_vec());
    if a.len() == 1 || b.len() == 1 {
        return vec![BigInt::one()];
    }
    heu_gcd(&a, &b).unwrap_or_else(|| prs_gcd(&a, &b))
}

/// Primitive squarefree part with positive leading coefficient.
pub(crate) fn squarefree(a: &[BigInt]) -> Dense {
    let d = deriv(a);
    if d.is_empty() {
        return positive(primitive(a.to_vec()));
    }
    let g = gcd_primitive(a, &d);
    let p = positive(primitive(a.to_vec()));
    positive(div_exact(&p, &g).expect("gcd divides"))
}
