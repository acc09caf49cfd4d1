//! Resultants and discriminants by the subresultant pseudo-remainder sequence.
//!
//! Polynomials are viewed as univariate in a main variable with coefficients
//! in the remaining variables (`Vec<Polynomial>`, ascending powers, the main
//! variable's exponent zeroed in every coefficient).

use super::{PolyError, Polynomial, Var};

pub(crate) type Upoly = Vec<Polynomial>;

pub(crate) fn udeg(a: &Upoly) -> i64 {
    a.len() as i64 - 1
}

pub(crate) fn lc(a: &Upoly) -> &Polynomial {
    a.last().expect("nonzero univariate polynomial")
}

fn trim(a: &mut Upoly) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

/// `lc(b)^(deg a - deg b + 1) * a  mod  b`.
pub(crate) fn prem(a: &Upoly, b: &Upoly) -> Upoly {
    let db = udeg(b);
    debug_assert!(db >= 0);
    let mut r = a.clone();
    if udeg(&r) < db {
        return r;
    }
    let lb = lc(b).clone();
    let mut e = udeg(a) - db + 1;
    while udeg(&r) >= db {
        let shift = (udeg(&r) - db) as usize;
        let t = lc(&r).clone();
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            let k = i + shift;
            r[k] = &r[k] - &(&t * bc);
        }
        debug_assert!(r.last().is_none_or(|c| c.is_zero()));
        r.pop();
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let s = lb.pow(e as u32);
        for c in r.iter_mut() {
            *c = &*c * &s;
        }
    }
    r
}

fn exact(a: &Polynomial, b: &Polynomial) -> Polynomial {
    a.exact_div(b).expect("subresultant division is exact")
}

/// `h^(1-delta) * g^delta`, exact for `delta >= 1`.
fn next_h(h: &Polynomial, g: &Polynomial, delta: i64) -> Polynomial {
    if delta == 0 {
        return h.clone();
    }
    let num = g.pow(delta as u32);
    if delta == 1 {
        num
    } else {
        exact(&num, &h.pow((delta - 1) as u32))
    }
}

/// Resultant of univariate polynomials over Z[others], both nonzero.
pub(crate) fn uresultant(a: &Upoly, b: &Upoly, nvars: usize) -> Polynomial {
    let (da, db) = (udeg(a), udeg(b));
    if da == 0 && db == 0 {
        return Polynomial::one(nvars);
    }
    if db == 0 {
        return b[0].pow(da as u32);
    }
    if da == 0 {
        return a[0].pow(db as u32);
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut negate = false;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        if da % 2 == 1 && db % 2 == 1 {
            negate = true;
        }
    }
    let mut g = Polynomial::one(nvars);
    let mut h = Polynomial::one(nvars);
    loop {
        let (da, db) = (udeg(&a), udeg(&b));
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = prem(&a, &b);
        a = b;
        if r.is_empty() {
            return Polynomial::zero(nvars);
        }
        let divisor = &g * &h.pow(delta as u32);
        b = r.iter().map(|c| exact(c, &divisor)).collect();
        g = lc(&a).clone();
        h = next_h(&h, &g, delta);
        if udeg(&b) == 0 {
            break;
        }
    }
    let da = udeg(&a);
    let num = lc(&b).pow(da as u32);
    let res = if da <= 1 { num } else { exact(&num, &h.pow((da - 1) as u32)) };
    if negate {
        -res
    } else {
        res
    }
}

/// Resultant of `f` and `g` with respect to `v`.
///
/// Two `v`-free arguments give the constant 1; a single `v`-free argument `c`
/// gives `c^deg` of the other.
pub fn resultant(f: &Polynomial, g: &Polynomial, v: Var) -> Result<Polynomial, PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroArgument("resultant"));
    }
    let a = f.univariate_coeffs(v);
    let b = g.univariate_coeffs(v);
    Ok(uresultant(&a, &b, f.nvars()))
}

/// Discriminant of `f` with respect to `v`; the constant 1 when `deg_v f < 2`.
pub fn discriminant(f: &Polynomial, v: Var) -> Polynomial {
    let d = f.degree(v);
    if d < 2 {
        return Polynomial::one(f.nvars());
    }
    let res = resultant(f, &f.derivative(v), v).expect("nonzero arguments");
    let q = exact(&res, &f.lcoeff(v));
    if (d * (d - 1) / 2) % 2 == 1 {
        -q
    } else {
        q
    }
}
