//! Multivariate gcd over the integers, contents and squarefree parts.
//!
//! The gcd recurses on the highest-indexed variable present, splitting off
//! contents and running a subresultant PRS on the primitive parts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::dense::{from_dense, gcd_primitive, squarefree, to_dense};
use super::resultant::{lc, prem, udeg, Upoly};
use super::{PolyError, Polynomial, Var};

/// Greatest common divisor in Z[vars], sign-normalized, integer content included.
///
/// `gcd(0, 0)` is an error.
pub fn gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, PolyError> {
    if f.is_zero() && g.is_zero() {
        return Err(PolyError::ZeroArgument("gcd"));
    }
    Ok(gcd_inner(f, g))
}

fn main_var(f: &Polynomial, g: &Polynomial) -> Option<Var> {
    (0..f.nvars()).rev().map(Var).find(|&v| f.contains(v) || g.contains(v))
}

fn gcd_inner(f: &Polynomial, g: &Polynomial) -> Polynomial {
    if f.is_zero() {
        return g.sign_normalized();
    }
    if g.is_zero() {
        return f.sign_normalized();
    }
    let Some(v) = main_var(f, g) else {
        let a = f.constant_value().expect("constant");
        let b = g.constant_value().expect("constant");
        return Polynomial::constant(f.nvars(), a.gcd(&b));
    };
    if let (Some(a), Some(b)) = (to_dense(f, v), to_dense(g, v)) {
        let c = f.integer_content().gcd(&g.integer_content());
        return from_dense(f.nvars(), v, &gcd_primitive(&a, &b)).scale(&c);
    }
    if !f.contains(v) {
        return gcd_inner(f, &content_in(g, v));
    }
    if !g.contains(v) {
        return gcd_inner(&content_in(f, v), g);
    }
    let cf = content_in(f, v);
    let cg = content_in(g, v);
    let c = gcd_inner(&cf, &cg);
    let pf = f.exact_div(&cf).expect("content divides");
    let pg = g.exact_div(&cg).expect("content divides");
    if coprime_in(&pf, &pg, v) {
        return c;
    }
    let last = prs_last(pf.univariate_coeffs(v), pg.univariate_coeffs(v), f.nvars());
    if udeg(&last) == 0 {
        return c;
    }
    let r = Polynomial::from_univariate(f.nvars(), v, &last);
    let pr = r.exact_div(&content_in(&r, v)).expect("content divides");
    (&c * &pr).sign_normalized()
}

/// Last nonzero member of the subresultant PRS of two nonzero polynomials.
fn prs_last(mut a: Upoly, mut b: Upoly, nvars: usize) -> Upoly {
    if udeg(&a) < udeg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = Polynomial::one(nvars);
    let mut h = Polynomial::one(nvars);
    loop {
        if udeg(&b) == 0 {
            return b;
        }
        let delta = udeg(&a) - udeg(&b);
        let r = prem(&a, &b);
        if r.is_empty() {
            return b;
        }
        let divisor = &g * &h.pow(delta as u32);
        a = b;
        b = r.iter().map(|c| c.exact_div(&divisor).expect("exact")).collect();
        g = lc(&a).clone();
        h = if delta == 0 {
            h
        } else if delta == 1 {
            g.clone()
        } else {
            g.pow(delta as u32).exact_div(&h.pow((delta - 1) as u32)).expect("exact")
        };
    }
}

/// Modulus for the coprimality certificate, the Mersenne prime 2^61 - 1.
const P: u64 = (1 << 61) - 1;

fn mulp(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn modp(c: &BigInt) -> u64 {
    c.mod_floor(&BigInt::from(P)).to_u64().expect("reduced")
}

fn powp(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulp(r, b);
        }
        b = mulp(b, b);
        e >>= 1;
    }
    r
}

/// Dense image of `f` in Z_p[v] after substituting `point` for the other variables.
fn image(f: &Polynomial, v: Var, point: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; f.degree(v).max(0) as usize + 1];
    for (m, c) in f.terms() {
        let mut t = modp(c);
        for (w, &e) in m.exponents().iter().enumerate() {
            if w != v.0 && e > 0 {
                t = mulp(t, powp(point[w], e as u64));
            }
        }
        let slot = &mut out[m.exponent(v) as usize];
        *slot = (*slot + t) % P;
    }
    out
}

fn trim_p(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Degree of the gcd over Z_p; `None` if both are zero.
fn gcd_degree_p(mut a: Vec<u64>, mut b: Vec<u64>) -> Option<usize> {
    trim_p(&mut a);
    trim_p(&mut b);
    while !b.is_empty() {
        let inv = powp(*b.last().expect("nonempty"), P - 2);
        while a.len() >= b.len() {
            let q = mulp(*a.last().expect("nonempty"), inv);
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                a[i + shift] = (a[i + shift] + P - mulp(q, bc)) % P;
            }
            trim_p(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().checked_sub(1)
}

/// True only if gcd(f, g) has degree 0 in `v`. With the leading coefficient
/// of `f` nonzero at the point, any common factor involving `v` survives
/// in the modular image with its full degree, so a constant image gcd is a
/// certificate. A false answer proves nothing.
fn coprime_in(f: &Polynomial, g: &Polynomial, v: Var) -> bool {
    if f.degree(v) <= 0 || g.degree(v) <= 0 {
        return f.degree(v) <= 0 || g.degree(v) <= 0;
    }
    let n = f.nvars();
    for attempt in 0..3u64 {
        let point: Vec<u64> = (0..n as u64).map(|w| (1_000_003 * (attempt + 1) + 7919 * w * w + 104_729 * w) % P).collect();
        let a = image(f, v, &point);
        if a.last() == Some(&0) {
            continue;
        }
        if gcd_degree_p(a, image(g, v, &point)) == Some(0) {
            return true;
        }
    }
    false
}

/// Gcd of the coefficients of `f` in `v`, sign-normalized.
fn content_in(f: &Polynomial, v: Var) -> Polynomial {
    let mut acc = Polynomial::zero(f.nvars());
    for c in f.univariate_coeffs(v).iter().rev() {
        if c.is_zero() {
            continue;
        }
        acc = gcd_inner(&acc, c);
        if acc.constant_value().is_some_and(|k| k == 1.into()) {
            break;
        }
    }
    acc
}

/// Splits `f` into its content in `v` (gcd of its `v`-coefficients,
/// sign-normalized) and the cofactor, so that `content * primitive == f`.
pub fn content_primitive(f: &Polynomial, v: Var) -> Result<(Polynomial, Polynomial), PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroArgument("content_primitive"));
    }
    let c = content_in(f, v);
    let p = f.exact_div(&c).expect("content divides");
    Ok((c, p))
}

/// Product of the distinct non-constant factors of `f`, integer-primitive and
/// sign-normalized. Nonzero constants map to 1.
pub fn squarefree_part(f: &Polynomial) -> Result<Polynomial, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroArgument("squarefree_part"));
    }
    Ok(squarefree_inner(f))
}

fn squarefree_inner(f: &Polynomial) -> Polynomial {
    let Some(v) = (0..f.nvars()).map(Var).find(|&v| f.contains(v)) else {
        return Polynomial::one(f.nvars());
    };
    if let Some(a) = to_dense(f, v) {
        return from_dense(f.nvars(), v, &squarefree(&a));
    }
    let c = content_in(f, v);
    let p = f.exact_div(&c).expect("content divides");
    let dp = p.derivative(v);
    if coprime_in(&p, &dp, v) {
        return (&squarefree_inner(&c) * &p).primitive_normalized();
    }
    // Every factor of a primitive polynomial involves v, so dividing out the
    // gcd with the v-derivative leaves each factor exactly once.
    let d = gcd_inner(&p, &dp);
    let sp = p.exact_div(&d).expect("gcd divides").primitive_normalized();
    let rest = squarefree_inner(&c);
    (&rest * &sp).primitive_normalized()
}
