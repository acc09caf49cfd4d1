//! Variable ordering heuristics.
//!
//! Every heuristic returns a [`HeuristicReport`] whose `choice` lists the
//! variables greatest first. Smaller measures make a variable greater, and
//! residual ties fall back to declaration order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::formula::{Problem, VariableOrdering};
use crate::projection::{ProjectionError, ProjectionKind};
use crate::realroots::RootError;

mod measures;
mod search;

pub use measures::{brown_order, newh_order, sotd, triangular_order, variable_measures, Measures};
pub use search::{
    combined_order, evaluate_orderings, greedy_sotd_order, ordering_search, ordering_search_capped, Measure,
    DEFAULT_ORDERING_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HeuristicId {
    Triangular,
    Brown,
    Sotd,
    Ndrr,
    Sn,
    Ns,
    Gs,
    STti,
    NTti,
    GsTti,
    NewH,
    NewHExt,
}

impl HeuristicId {
    pub const ALL: [HeuristicId; 12] = [
        HeuristicId::Triangular,
        HeuristicId::Brown,
        HeuristicId::Sotd,
        HeuristicId::Ndrr,
        HeuristicId::Sn,
        HeuristicId::Ns,
        HeuristicId::Gs,
        HeuristicId::STti,
        HeuristicId::NTti,
        HeuristicId::GsTti,
        HeuristicId::NewH,
        HeuristicId::NewHExt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HeuristicId::Triangular => "triangular",
            HeuristicId::Brown => "brown",
            HeuristicId::Sotd => "sotd",
            HeuristicId::Ndrr => "ndrr",
            HeuristicId::Sn => "sn",
            HeuristicId::Ns => "ns",
            HeuristicId::Gs => "gs",
            HeuristicId::STti => "s-tti",
            HeuristicId::NTti => "n-tti",
            HeuristicId::GsTti => "gs-tti",
            HeuristicId::NewH => "newh",
            HeuristicId::NewHExt => "newh-ext",
        }
    }

    /// Whether the heuristic enumerates every ordering.
    pub fn enumerates(self) -> bool {
        matches!(
            self,
            HeuristicId::Sotd | HeuristicId::Ndrr | HeuristicId::Sn | HeuristicId::Ns | HeuristicId::STti | HeuristicId::NTti
        )
    }
}

impl fmt::Display for HeuristicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown heuristic {0:?}")]
pub struct UnknownHeuristic(pub String);

impl FromStr for HeuristicId {
    type Err = UnknownHeuristic;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        HeuristicId::ALL
            .into_iter()
            .find(|h| h.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownHeuristic(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeuristicError {
    #[error("{nvars} variables exceed the ordering enumeration cap of {cap}")]
    CapExceeded { nvars: usize, cap: usize },
    #[error(transparent)]
    Projection(#[from] ProjectionError),
    #[error(transparent)]
    Roots(#[from] RootError),
}

/// Named measure values recorded for one candidate ordering.
pub type MeasureTrace = Vec<(&'static str, u64)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeuristicReport {
    pub id: HeuristicId,
    pub choice: VariableOrdering,
    /// Every ordering evaluated, for the enumerating heuristics.
    pub candidates: BTreeMap<VariableOrdering, MeasureTrace>,
    /// Criteria after the first that were consulted to break a tie;
    /// `"lex"` when declaration order decided.
    pub tiebreaks_used: Vec<&'static str>,
    pub elapsed: Duration,
    pub fallback_lex: bool,
}

impl HeuristicReport {
    pub(crate) fn positional(id: HeuristicId, choice: VariableOrdering, tiebreaks_used: Vec<&'static str>) -> Self {
        let fallback_lex = tiebreaks_used.contains(&"lex");
        HeuristicReport { id, choice, candidates: BTreeMap::new(), tiebreaks_used, elapsed: Duration::ZERO, fallback_lex }
    }

    /// Same report without timing, for determinism checks.
    pub fn untimed(&self) -> HeuristicReport {
        HeuristicReport { elapsed: Duration::ZERO, ..self.clone() }
    }
}

pub(crate) fn timed<T>(f: impl FnOnce() -> Result<HeuristicReport, T>) -> Result<HeuristicReport, T> {
    let start = Instant::now();
    let mut r = f()?;
    r.elapsed = start.elapsed();
    Ok(r)
}

/// Runs the heuristic named by `id`.
pub fn suggest(p: &Problem, id: HeuristicId) -> Result<HeuristicReport, HeuristicError> {
    suggest_capped(p, id, DEFAULT_ORDERING_CAP)
}

pub fn suggest_capped(p: &Problem, id: HeuristicId, cap: usize) -> Result<HeuristicReport, HeuristicError> {
    use HeuristicId as H;
    use Measure::{Ndrr, Sotd};
    use ProjectionKind::{Full, Tti};
    let start = Instant::now();
    let mut r = match id {
        H::Triangular => triangular_order(&p.defining_polynomials(), p.nvars()),
        H::Brown => brown_order(&p.defining_polynomials(), p.nvars()),
        H::Sotd => ordering_search_capped(p, Sotd, Full, cap)?,
        H::Ndrr => ordering_search_capped(p, Ndrr, Full, cap)?,
        H::STti => ordering_search_capped(p, Sotd, Tti, cap)?,
        H::NTti => ordering_search_capped(p, Ndrr, Tti, cap)?,
        H::Sn => search::combined_capped(p, Sotd, Ndrr, cap)?,
        H::Ns => search::combined_capped(p, Ndrr, Sotd, cap)?,
        H::Gs => greedy_sotd_order(p, Full)?,
        H::GsTti => greedy_sotd_order(p, Tti)?,
        H::NewH => newh_order(p, false),
        H::NewHExt => newh_order(p, true),
    };
    r.id = id;
    r.elapsed = start.elapsed();
    Ok(r)
}

/// Sorts keyed items ascending, residual ties by position, and reports
/// which criteria after the first were consulted.
pub(crate) fn rank<T: Copy>(items: &[(T, Vec<u64>)], names: &[&'static str]) -> (Vec<T>, Vec<&'static str>) {
    let mut idx: Vec<usize> = (0..items.len()).collect();
    idx.sort_by(|&a, &b| items[a].1.cmp(&items[b].1).then(a.cmp(&b)));
    let mut used = vec![false; names.len() + 1];
    for w in idx.windows(2) {
        let (ka, kb) = (&items[w[0]].1, &items[w[1]].1);
        let k = ka.iter().zip(kb).position(|(a, b)| a != b).unwrap_or(names.len());
        used[1.min(k)..=k].iter_mut().for_each(|u| *u = true);
    }
    let mut tb: Vec<&'static str> = names.iter().enumerate().skip(1).filter(|(k, _)| used[*k]).map(|(_, n)| *n).collect();
    if used[names.len()] {
        tb.push("lex");
    }
    (idx.into_iter().map(|i| items[i].0).collect(), tb)
}
