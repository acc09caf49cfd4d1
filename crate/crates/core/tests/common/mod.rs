//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's resultant, Sturm or Descartes code.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use cadorder::formula::{Constraint, Problem, Qff, Relop};
use cadorder::generator::{generate_corpus, CorpusEntry, GenParams};
use cadorder::poly::{content_primitive, squarefree_part, Monomial, Polynomial, Var};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const LABELS: [&str; 6] = ["00", "10", "20", "11", "12", "22"];

/// Ten problems per system type at a size that keeps exhaustive searches
/// cheap.
pub fn small_corpus(per_type: usize, seed: u64) -> Vec<CorpusEntry> {
    let labels: Vec<String> = LABELS.iter().map(|s| s.to_string()).collect();
    let params = GenParams { seed, max_tdeg: 2, terms: 3, ..GenParams::default() };
    generate_corpus(&labels, per_type, &params).expect("valid labels")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random polynomial in `nvars` variables with degree at most `main_deg` in
/// `Var(0)` and at most `other_deg` in the others.
pub fn random_poly(r: &mut ChaCha8Rng, nvars: usize, main_deg: u32, other_deg: u32, terms: usize, bound: i64) -> Polynomial {
    loop {
        let ts: Vec<(Monomial, BigInt)> = (0..terms)
            .map(|_| {
                let e: Vec<u32> =
                    (0..nvars).map(|i| r.random_range(0..=if i == 0 { main_deg } else { other_deg })).collect();
                (Monomial::from_exponents(&e), BigInt::from(r.random_range(-bound..=bound)))
            })
            .collect();
        let f = Polynomial::from_terms(nvars, ts);
        if !f.is_zero() {
            return f;
        }
    }
}

fn sylvester_rows(f: &Polynomial, g: &Polynomial, v: Var) -> Vec<Vec<Polynomial>> {
    let n = f.nvars();
    let fc = f.coefficients(v);
    let gc = g.coefficients(v);
    let (m, k) = (fc.len() - 1, gc.len() - 1);
    let size = m + k;
    let mut rows = vec![vec![Polynomial::zero(n); size]; size];
    for i in 0..k {
        for (j, c) in fc.iter().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in gc.iter().enumerate() {
            rows[k + i][i + j] = c.clone();
        }
    }
    rows
}

/// Resultant as the Sylvester determinant, by Laplace expansion along rows
/// memoized on the columns still free.
pub fn sylvester_laplace(f: &Polynomial, g: &Polynomial, v: Var) -> Polynomial {
    let n = f.nvars();
    let rows = sylvester_rows(f, g, v);
    let size = rows.len();
    if size == 0 {
        return Polynomial::one(n);
    }
    fn det(rows: &[Vec<Polynomial>], row: usize, free: u32, memo: &mut HashMap<u32, Polynomial>, n: usize) -> Polynomial {
        if row == rows.len() {
            return Polynomial::one(n);
        }
        if let Some(d) = memo.get(&free) {
            return d.clone();
        }
        let mut acc = Polynomial::zero(n);
        let mut sign = 1;
        for col in 0..rows.len() {
            if free & (1 << col) == 0 {
                continue;
            }
            let e = &rows[row][col];
            if !e.is_zero() {
                let minor = det(rows, row + 1, free & !(1 << col), memo, n);
                let t = e * &minor;
                acc = if sign > 0 { &acc + &t } else { &acc - &t };
            }
            sign = -sign;
        }
        memo.insert(free, acc.clone());
        acc
    }
    det(&rows, 0, (1u32 << size) - 1, &mut HashMap::new(), n)
}

/// Resultant as the Sylvester determinant by fraction-free (Bareiss)
/// elimination.
pub fn sylvester_bareiss(f: &Polynomial, g: &Polynomial, v: Var) -> Polynomial {
    let n = f.nvars();
    let mut a = sylvester_rows(f, g, v);
    let size = a.len();
    if size == 0 {
        return Polynomial::one(n);
    }
    let mut negate = false;
    let mut prev = Polynomial::one(n);
    for k in 0..size - 1 {
        if a[k][k].is_zero() {
            match (k + 1..size).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Polynomial::zero(n),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = Polynomial::zero(n);
        }
        prev = a[k][k].clone();
    }
    let d = a[size - 1][size - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// `res(f, f') / lc(f)` up to sign, schoolbook style.
pub fn naive_discriminant(f: &Polynomial, v: Var) -> Polynomial {
    if f.degree(v) < 2 {
        return Polynomial::one(f.nvars());
    }
    let r = sylvester_bareiss(f, &f.derivative(v), v);
    r.exact_div(&f.lcoeff(v)).expect("leading coefficient divides")
}

fn naive_normalize(polys: &[Polynomial]) -> BTreeSet<Polynomial> {
    polys
        .iter()
        .filter(|p| !p.is_constant())
        .map(|p| squarefree_part(p).expect("nonzero"))
        .filter(|p| !p.is_constant())
        .collect()
}

fn naive_res_into(f: &Polynomial, g: &Polynomial, v: Var, out: &mut Vec<Polynomial>) {
    let r = sylvester_bareiss(f, g, v);
    if !r.is_zero() {
        out.push(r);
        return;
    }
    let d = cadorder::poly::gcd(f, g).expect("nonzero");
    let (f1, g1) = (f.exact_div(&d).expect("divides"), g.exact_div(&d).expect("divides"));
    if f1.contains(v) && g1.contains(v) {
        naive_res_into(&f1, &g1, v, out);
    }
}

/// Contents go to `out`; squarefree primitive parts that involve `v` form
/// the basis.
fn naive_basis<'a>(polys: impl IntoIterator<Item = &'a Polynomial>, v: Var, out: &mut Vec<Polynomial>) -> BTreeSet<Polynomial> {
    let mut basis = BTreeSet::new();
    for f in polys {
        if !f.contains(v) {
            out.push(f.clone());
            continue;
        }
        let (c, p) = content_primitive(f, v).expect("nonzero");
        out.push(c);
        basis.insert(squarefree_part(&p).expect("nonzero"));
    }
    basis
}

fn naive_closure(basis: &BTreeSet<Polynomial>, v: Var, out: &mut Vec<Polynomial>) {
    let b: Vec<&Polynomial> = basis.iter().collect();
    for f in &b {
        out.extend(f.coefficients(v));
        out.push(naive_discriminant(f, v));
    }
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            naive_res_into(b[i], b[j], v, out);
        }
    }
}

pub fn naive_mccallum(set: &BTreeSet<Polynomial>, v: Var) -> BTreeSet<Polynomial> {
    let mut out = Vec::new();
    let basis = naive_basis(set, v, &mut out);
    naive_closure(&basis, v, &mut out);
    naive_normalize(&out)
}

/// The reduced first step: per QFF, its first equation's coefficients,
/// discriminant and resultants with the QFF's other polynomials, or the full
/// operator when it has none; across QFFs, resultants between designated
/// polynomials.
pub fn naive_tti(p: &Problem, v: Var) -> BTreeSet<Polynomial> {
    let mut out = Vec::new();
    let mut designated: Vec<BTreeSet<Polynomial>> = Vec::new();
    for q in &p.qffs {
        let all: Vec<Polynomial> = q.constraints.iter().map(|c| c.poly().clone()).collect();
        let basis = naive_basis(&all, v, &mut out);
        match q.constraints.iter().find(|c| c.relop() == Relop::Eq) {
            None => {
                naive_closure(&basis, v, &mut out);
                designated.push(basis);
            }
            Some(ec) => {
                let mut des = BTreeSet::new();
                if ec.poly().contains(v) {
                    let (_, pp) = content_primitive(ec.poly(), v).expect("nonzero");
                    let e = squarefree_part(&pp).expect("nonzero");
                    out.extend(e.coefficients(v));
                    out.push(naive_discriminant(&e, v));
                    for g in basis.iter().filter(|g| **g != e) {
                        naive_res_into(&e, g, v, &mut out);
                    }
                    des.insert(e);
                }
                designated.push(des);
            }
        }
    }
    for i in 0..designated.len() {
        for j in i + 1..designated.len() {
            for f in &designated[i] {
                for g in designated[j].iter().filter(|g| *g != f) {
                    naive_res_into(f, g, v, &mut out);
                }
            }
        }
    }
    naive_normalize(&out)
}

pub fn naive_sotd<'a>(polys: impl IntoIterator<Item = &'a Polynomial>) -> u64 {
    polys.into_iter().flat_map(|f| f.terms().iter()).map(|(m, _)| m.exponents().iter().map(|&e| e as u64).sum::<u64>()).sum()
}

// ---------- univariate rational oracle ----------

pub type RPoly = Vec<BigRational>;

fn rtrim(mut a: RPoly) -> RPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

/// Ascending rational coefficients of a polynomial in `v` alone.
pub fn to_rpoly(f: &Polynomial, v: Var) -> RPoly {
    let d = f.degree(v).max(0) as usize;
    let mut a = vec![BigRational::zero(); d + 1];
    for (m, c) in f.terms() {
        assert!(m.exponents().iter().enumerate().all(|(i, &e)| i == v.0 || e == 0), "not univariate");
        a[m.exponent(v) as usize] = BigRational::from_integer(c.clone());
    }
    rtrim(a)
}

fn rrem(a: &RPoly, b: &RPoly) -> RPoly {
    let mut r = a.clone();
    let lb = b.last().expect("nonzero divisor");
    while r.len() >= b.len() && !r.is_empty() {
        let q = r.last().expect("nonempty") / lb;
        let s = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[s + i] -= &q * c;
        }
        r.pop();
        r = rtrim(r);
    }
    r
}

fn rquo(a: &RPoly, b: &RPoly) -> RPoly {
    let mut r = a.clone();
    let lb = b.last().expect("nonzero divisor");
    let mut q = vec![BigRational::zero(); a.len().saturating_sub(b.len()) + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let c = r.last().expect("nonempty") / lb;
        let s = r.len() - b.len();
        for (i, bc) in b.iter().enumerate() {
            r[s + i] -= &c * bc;
        }
        q[s] = c;
        r.pop();
        r = rtrim(r);
    }
    rtrim(q)
}

fn rgcd(a: &RPoly, b: &RPoly) -> RPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rrem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn rderiv(a: &RPoly) -> RPoly {
    rtrim(a.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(i.into())).collect())
}

pub fn reval(a: &RPoly, x: &BigRational) -> BigRational {
    a.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn imul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn variations(a: &[BigInt]) -> usize {
    let signs: Vec<bool> = a.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Roots of squarefree `p` (integer, ascending) in the open interval
/// (lo, hi): map it onto (0, inf) by x = (lo + hi t) / (1 + t) and bisect
/// until Descartes' bound is 0 or 1.
fn roots_between(p: &[BigInt], lo: &BigRational, hi: &BigRational) -> usize {
    let n = p.len() - 1;
    let c = lo.denom().lcm(hi.denom());
    let (a, b) = ((lo * &c).to_integer(), (hi * &c).to_integer());
    let powers = |lin: Vec<BigInt>| {
        let mut out = vec![vec![BigInt::one()]];
        for _ in 0..n {
            let next = imul(out.last().expect("nonempty"), &lin);
            out.push(next);
        }
        out
    };
    let num = powers(vec![a, b]);
    let den = powers(vec![c.clone(), c]);
    let mut q = vec![BigInt::zero(); n + 1];
    for (i, pi) in p.iter().enumerate() {
        if pi.is_zero() {
            continue;
        }
        for (k, t) in imul(&num[i], &den[n - i]).into_iter().enumerate() {
            q[k] += pi * t;
        }
    }
    match variations(&q) {
        0 => 0,
        1 => 1,
        _ => {
            let mid = (lo + hi) / BigRational::from_integer(2.into());
            let at_mid = usize::from(ieval(p, &mid).is_zero());
            roots_between(p, lo, &mid) + at_mid + roots_between(p, &mid, hi)
        }
    }
}

fn ieval(a: &[BigInt], x: &BigRational) -> BigRational {
    a.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
}

/// Distinct real roots by exact bisection with Descartes' rule inside a
/// Cauchy bound.
pub fn oracle_root_count(f: &Polynomial, v: Var) -> usize {
    let a = to_rpoly(f, v);
    assert!(!a.is_empty(), "zero polynomial");
    if a.len() == 1 {
        return 0;
    }
    let g = rgcd(&a, &rderiv(&a));
    let sf = rquo(&a, &g);
    let lead = sf.last().expect("nonzero").abs();
    let bound = BigRational::one() + sf.iter().map(|c| c.abs() / &lead).max().expect("nonempty");
    let lo = -bound.clone();
    let end = usize::from(reval(&sf, &lo).is_zero()) + usize::from(reval(&sf, &bound).is_zero());
    let scale = sf.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let int: Vec<BigInt> = sf.iter().map(|c| (c * &scale).to_integer()).collect();
    roots_between(&int, &lo, &bound) + end
}

/// Distinct real roots summed over the set, counting polynomials with the
/// same squarefree part once.
pub fn oracle_ndrr(set: &BTreeSet<Polynomial>, v: Var) -> usize {
    let parts: BTreeSet<Polynomial> = set.iter().map(|f| squarefree_part(f).expect("nonzero")).collect();
    parts.iter().map(|f| oracle_root_count(f, v)).sum()
}

/// Same problem with every constraint polynomial scaled by `k`.
pub fn scaled(p: &Problem, k: i64) -> Problem {
    let k = BigInt::from(k);
    let qffs = p
        .qffs
        .iter()
        .map(|q| Qff::new(q.constraints.iter().map(|c| Constraint::new(c.poly().scale(&k), c.relop()).expect("nonzero")).collect()))
        .collect();
    Problem::new(p.names(), qffs)
}

/// Same problem with every equation turned into a strict inequality.
pub fn without_equations(p: &Problem) -> Problem {
    let qffs = p
        .qffs
        .iter()
        .map(|q| {
            Qff::new(
                q.constraints
                    .iter()
                    .map(|c| {
                        let op = if c.relop() == Relop::Eq { Relop::Lt } else { c.relop() };
                        Constraint::new(c.poly().clone(), op).expect("nonzero")
                    })
                    .collect(),
            )
        })
        .collect();
    Problem::new(p.names(), qffs)
}
