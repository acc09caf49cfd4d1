//! Degree-based measures and the heuristics that rank variables by them.

use std::collections::{BTreeSet, HashSet};

use super::{rank, timed, HeuristicId, HeuristicReport};
use crate::formula::{Problem, VariableOrdering};
use crate::poly::{Monomial, Polynomial, Var};
use crate::projection::{newh_omitted_set, newh_set};

/// Per-variable measures over a polynomial set. Measures that range over
/// polynomials or monomials containing `v` are 0 when there are none.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Measures {
    /// Maximum degree in `v`.
    pub m1: u64,
    /// Maximum total degree of the leading coefficient in `v`.
    pub m2: u64,
    /// Sum of degrees in `v`.
    pub m3: u64,
    /// Maximum total degree of a monomial containing `v`.
    pub m4: u64,
    /// Number of distinct monomials containing `v`.
    pub m5: u64,
}

fn deg(f: &Polynomial, v: Var) -> u64 {
    f.degree(v).max(0) as u64
}

pub fn variable_measures<'a>(polys: impl IntoIterator<Item = &'a Polynomial>, v: Var) -> Measures {
    let mut m = Measures::default();
    let mut monos: HashSet<&Monomial> = HashSet::new();
    for f in polys {
        let d = deg(f, v);
        m.m1 = m.m1.max(d);
        m.m3 += d;
        if d > 0 {
            let lc = f.lcoeff(v);
            m.m2 = m.m2.max(lc.total_degree().unwrap_or(0) as u64);
        }
        for (mono, _) in f.terms() {
            if mono.contains(v) {
                m.m4 = m.m4.max(mono.total_degree() as u64);
                monos.insert(mono);
            }
        }
    }
    m.m5 = monos.len() as u64;
    m
}

fn rank_by(polys: &BTreeSet<Polynomial>, nvars: usize, id: HeuristicId, key: fn(&Measures) -> [u64; 3]) -> HeuristicReport {
    let names: &[&'static str] = match id {
        HeuristicId::Triangular => &["m1", "m2", "m3"],
        _ => &["m1", "m4", "m5"],
    };
    let items: Vec<(Var, Vec<u64>)> =
        (0..nvars).map(Var).map(|v| (v, key(&variable_measures(polys, v)).to_vec())).collect();
    let (order, tb) = rank(&items, names);
    let choice = VariableOrdering::new(order, nvars).expect("permutation");
    HeuristicReport::positional(id, choice, tb)
}

/// Ranks by (m1, m2, m3).
pub fn triangular_order(polys: &BTreeSet<Polynomial>, nvars: usize) -> HeuristicReport {
    timed::<()>(|| Ok(rank_by(polys, nvars, HeuristicId::Triangular, |m| [m.m1, m.m2, m.m3]))).expect("infallible")
}

/// Ranks by (m1, m4, m5).
pub fn brown_order(polys: &BTreeSet<Polynomial>, nvars: usize) -> HeuristicReport {
    timed::<()>(|| Ok(rank_by(polys, nvars, HeuristicId::Brown, |m| [m.m1, m.m4, m.m5]))).expect("infallible")
}

/// Sum over all polynomials of the total degrees of their monomials.
pub fn sotd<'a>(polys: impl IntoIterator<Item = &'a Polynomial>) -> u64 {
    polys.into_iter().map(Polynomial::sum_of_total_degrees).sum()
}

fn max_deg(set: &BTreeSet<Polynomial>, v: Var) -> u64 {
    set.iter().map(|g| deg(g, v)).max().unwrap_or(0)
}

fn has_tie(items: &[(Var, Vec<u64>)]) -> bool {
    let keys: BTreeSet<&Vec<u64>> = items.iter().map(|(_, k)| k).collect();
    keys.len() < items.len()
}

/// Maximum degree first; ties among the remaining variables by maximum
/// degree over the special polynomial set taken with respect to the
/// greatest variable, then (extended) over the omitted set.
pub fn newh_order(p: &Problem, extended: bool) -> HeuristicReport {
    let id = if extended { HeuristicId::NewHExt } else { HeuristicId::NewH };
    timed::<()>(|| {
        let polys = p.defining_polynomials();
        let m1: Vec<u64> = p.vars().map(|v| variable_measures(&polys, v).m1).collect();
        let min = *m1.iter().min().expect("at least one variable");
        let v1 = Var(m1.iter().position(|&m| m == min).expect("minimum exists"));
        let mut first_tied = m1.iter().filter(|&&m| m == min).count() > 1;
        let mut items: Vec<(Var, Vec<u64>)> = p.vars().filter(|&v| v != v1).map(|v| (v, vec![m1[v.0]])).collect();
        let mut names = vec!["m1"];
        if has_tie(&items) {
            let s = newh_set(p, v1);
            items.iter_mut().for_each(|(v, k)| k.push(max_deg(&s, *v)));
            names.push("newh-set");
            if extended && has_tie(&items) {
                let o = newh_omitted_set(p, v1);
                items.iter_mut().for_each(|(v, k)| k.push(max_deg(&o, *v)));
                names.push("newh-omitted");
            }
        }
        let (rest, mut tb) = rank(&items, &names);
        if first_tied && !tb.contains(&"lex") {
            tb.push("lex");
        }
        first_tied |= tb.contains(&"lex");
        let mut order = vec![v1];
        order.extend(rest);
        let choice = VariableOrdering::new(order, p.nvars()).expect("permutation");
        let mut r = HeuristicReport::positional(id, choice, tb);
        r.fallback_lex = first_tied;
        Ok(r)
    })
    .expect("infallible")
}
