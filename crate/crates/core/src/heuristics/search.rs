//! Heuristics that measure projection sets: exhaustive search over all
//! orderings and the greedy variant that fixes one variable per step.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{sotd, timed, HeuristicError, HeuristicId, HeuristicReport, MeasureTrace};
use crate::formula::{Problem, VariableOrdering};
use crate::poly::{Polynomial, Var};
use crate::projection::{mccallum_project, ttiprojection, ProjectionKind};
use crate::realroots::ndrr;

pub const DEFAULT_ORDERING_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    /// Sum of total degrees over the input and every projection stage.
    Sotd,
    /// Distinct real roots of the final univariate stage.
    Ndrr,
}

impl Measure {
    pub fn name(self) -> &'static str {
        match self {
            Measure::Sotd => "sotd",
            Measure::Ndrr => "ndrr",
        }
    }
}

/// Measures of one complete ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluated {
    pub ordering: VariableOrdering,
    pub sotd: u64,
    pub ndrr: Option<u64>,
}

impl Evaluated {
    fn get(&self, m: Measure) -> u64 {
        match m {
            Measure::Sotd => self.sotd,
            Measure::Ndrr => self.ndrr.expect("ndrr requested"),
        }
    }

    fn trace(&self) -> MeasureTrace {
        let mut t = vec![("sotd", self.sotd)];
        if let Some(n) = self.ndrr {
            t.push(("ndrr", n));
        }
        t
    }
}

fn project(
    p: &Problem,
    set: &BTreeSet<Polynomial>,
    v: Var,
    first: bool,
    kind: ProjectionKind,
) -> Result<BTreeSet<Polynomial>, HeuristicError> {
    Ok(match (first, kind) {
        (true, ProjectionKind::Tti) => ttiprojection(p, v).polys,
        _ => mccallum_project(set, v)?.polys,
    })
}

struct Walk<'a> {
    p: &'a Problem,
    kind: ProjectionKind,
    with_ndrr: bool,
}

impl Walk<'_> {
    /// Depth-first over ordering prefixes so orderings sharing a prefix share
    /// its projection stages.
    fn descend(
        &self,
        prefix: &[Var],
        set: &BTreeSet<Polynomial>,
        acc: u64,
        rest: &[Var],
    ) -> Result<Vec<Evaluated>, HeuristicError> {
        if rest.len() == 1 {
            let mut order = prefix.to_vec();
            order.push(rest[0]);
            let ndrr = if self.with_ndrr { Some(ndrr(set, rest[0])? as u64) } else { None };
            let ordering = VariableOrdering::new(order, self.p.nvars()).expect("permutation");
            return Ok(vec![Evaluated { ordering, sotd: acc, ndrr }]);
        }
        let branch = |i: usize| -> Result<Vec<Evaluated>, HeuristicError> {
            let v = rest[i];
            let next = project(self.p, set, v, prefix.is_empty(), self.kind)?;
            let mut pre = prefix.to_vec();
            pre.push(v);
            let mut rem = rest.to_vec();
            rem.remove(i);
            self.descend(&pre, &next, acc + sotd(&next), &rem)
        };
        let parts: Vec<Vec<Evaluated>> = if prefix.is_empty() {
            (0..rest.len()).into_par_iter().map(branch).collect::<Result<_, _>>()?
        } else {
            (0..rest.len()).map(branch).collect::<Result<_, _>>()?
        };
        Ok(parts.into_iter().flatten().collect())
    }
}

/// Measures every ordering of the problem's variables, sorted by ordering.
pub fn evaluate_orderings(
    p: &Problem,
    kind: ProjectionKind,
    with_ndrr: bool,
    cap: usize,
) -> Result<Vec<Evaluated>, HeuristicError> {
    if p.nvars() > cap {
        return Err(HeuristicError::CapExceeded { nvars: p.nvars(), cap });
    }
    let input = p.defining_polynomials();
    let vars: Vec<Var> = p.vars().collect();
    let walk = Walk { p, kind, with_ndrr };
    let mut all = walk.descend(&[], &input, sotd(&input), &vars)?;
    all.sort_by(|a, b| a.ordering.cmp(&b.ordering));
    Ok(all)
}

/// Picks the minimum under the given criteria, first ordering on full ties.
fn select(id: HeuristicId, all: Vec<Evaluated>, criteria: &[Measure]) -> HeuristicReport {
    let mut pool: Vec<&Evaluated> = all.iter().collect();
    let mut tiebreaks = Vec::new();
    for (k, &m) in criteria.iter().enumerate() {
        if pool.len() > 1 && k > 0 {
            tiebreaks.push(m.name());
        }
        let best = pool.iter().map(|e| e.get(m)).min().expect("nonempty");
        pool.retain(|e| e.get(m) == best);
    }
    let fallback_lex = pool.len() > 1;
    if fallback_lex {
        tiebreaks.push("lex");
    }
    let choice = pool[0].ordering.clone();
    let candidates = all.iter().map(|e| (e.ordering.clone(), e.trace())).collect();
    HeuristicReport { id, choice, candidates, tiebreaks_used: tiebreaks, elapsed: Default::default(), fallback_lex }
}

fn search_id(measure: Measure, kind: ProjectionKind) -> HeuristicId {
    match (measure, kind) {
        (Measure::Sotd, ProjectionKind::Full) => HeuristicId::Sotd,
        (Measure::Ndrr, ProjectionKind::Full) => HeuristicId::Ndrr,
        (Measure::Sotd, ProjectionKind::Tti) => HeuristicId::STti,
        (Measure::Ndrr, ProjectionKind::Tti) => HeuristicId::NTti,
    }
}

/// Exhaustive search minimizing one measure over all orderings.
pub fn ordering_search(p: &Problem, measure: Measure, kind: ProjectionKind) -> Result<HeuristicReport, HeuristicError> {
    ordering_search_capped(p, measure, kind, DEFAULT_ORDERING_CAP)
}

pub fn ordering_search_capped(
    p: &Problem,
    measure: Measure,
    kind: ProjectionKind,
    cap: usize,
) -> Result<HeuristicReport, HeuristicError> {
    timed(|| {
        let all = evaluate_orderings(p, kind, measure == Measure::Ndrr, cap)?;
        Ok(select(search_id(measure, kind), all, &[measure]))
    })
}

/// Minimizes `primary`, breaking ties with `secondary`.
pub fn combined_order(p: &Problem, primary: Measure, secondary: Measure) -> Result<HeuristicReport, HeuristicError> {
    combined_capped(p, primary, secondary, DEFAULT_ORDERING_CAP)
}

pub(crate) fn combined_capped(
    p: &Problem,
    primary: Measure,
    secondary: Measure,
    cap: usize,
) -> Result<HeuristicReport, HeuristicError> {
    let id = if primary == Measure::Sotd { HeuristicId::Sn } else { HeuristicId::Ns };
    timed(|| {
        let all = evaluate_orderings(p, ProjectionKind::Full, true, cap)?;
        Ok(select(id, all, &[primary, secondary]))
    })
}

/// Fixes the greatest remaining variable one step at a time: the one whose
/// projection has the lowest sum of total degrees.
pub fn greedy_sotd_order(p: &Problem, kind: ProjectionKind) -> Result<HeuristicReport, HeuristicError> {
    let id = if kind == ProjectionKind::Tti { HeuristicId::GsTti } else { HeuristicId::Gs };
    timed(|| {
        let mut set = p.defining_polynomials();
        let mut rest: Vec<Var> = p.vars().collect();
        let mut order = Vec::new();
        let mut tied = false;
        while rest.len() > 1 {
            let mut steps = rest
                .iter()
                .map(|&v| project(p, &set, v, order.is_empty(), kind).map(|next| (sotd(&next), next)))
                .collect::<Result<Vec<_>, _>>()?;
            let best = steps.iter().map(|(s, _)| *s).min().expect("nonempty");
            let i = steps.iter().position(|(s, _)| *s == best).expect("minimum exists");
            tied |= steps.iter().filter(|(s, _)| *s == best).count() > 1;
            let next = steps.swap_remove(i).1;
            order.push(rest.remove(i));
            set = next;
        }
        order.extend(rest);
        let choice = VariableOrdering::new(order, p.nvars()).expect("permutation");
        Ok(HeuristicReport::positional(id, choice, if tied { vec!["lex"] } else { vec![] }))
    })
}
