use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{CorpusProblem, HarnessError};
use crate::heuristics::{suggest_capped, HeuristicError, HeuristicId};

pub const STATUS_OK: &str = "ok";
pub const STATUS_CAP: &str = "ordering-cap-exceeded";

/// One line of `choices.csv`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChoiceRow {
    pub problem_id: String,
    pub heuristic: String,
    /// Variable names greatest first joined by `>`; empty unless ok.
    pub ordering: String,
    /// Plain decimal seconds.
    pub heuristic_time_s: String,
    pub fallback_lex: bool,
    pub status: String,
}

impl ChoiceRow {
    pub fn is_ok(&self) -> bool {
        self.status == STATUS_OK
    }
}

fn status_of(e: &HeuristicError) -> String {
    match e {
        HeuristicError::CapExceeded { .. } => STATUS_CAP.to_string(),
        HeuristicError::Projection(_) => "projection-error".to_string(),
        HeuristicError::Roots(_) => "root-count-error".to_string(),
    }
}

/// Runs every heuristic on every problem. Failures become rows with a
/// non-ok status. Rows come back sorted by problem id, then heuristic in
/// [`HeuristicId::ALL`] order, whatever the scheduling.
pub fn run_sweep(corpus: &[CorpusProblem], heuristics: &[HeuristicId], cap: usize) -> Vec<ChoiceRow> {
    let jobs: Vec<(&CorpusProblem, HeuristicId)> =
        corpus.iter().flat_map(|c| heuristics.iter().map(move |&h| (c, h))).collect();
    let mut rows: Vec<(HeuristicId, ChoiceRow)> = jobs
        .into_par_iter()
        .map(|(c, h)| {
            let row = match suggest_capped(&c.problem, h, cap) {
                Ok(r) => ChoiceRow {
                    problem_id: c.id.clone(),
                    heuristic: h.name().to_string(),
                    ordering: r.choice.format(&c.problem),
                    heuristic_time_s: format!("{:.6}", r.elapsed.as_secs_f64()),
                    fallback_lex: r.fallback_lex,
                    status: STATUS_OK.to_string(),
                },
                Err(e) => ChoiceRow {
                    problem_id: c.id.clone(),
                    heuristic: h.name().to_string(),
                    ordering: String::new(),
                    heuristic_time_s: "0".to_string(),
                    fallback_lex: false,
                    status: status_of(&e),
                },
            };
            (h, row)
        })
        .collect();
    rows.sort_by(|(ha, a), (hb, b)| a.problem_id.cmp(&b.problem_id).then(ha.cmp(hb)));
    rows.into_iter().map(|(_, r)| r).collect()
}

pub fn write_choices(path: &Path, rows: &[ChoiceRow]) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_path(path).map_err(HarnessError::csv(path))?;
    for r in rows {
        w.serialize(r).map_err(HarnessError::csv(path))?;
    }
    w.flush().map_err(HarnessError::io(path))
}

pub fn read_choices(path: &Path) -> Result<Vec<ChoiceRow>, HarnessError> {
    let mut r = csv::Reader::from_path(path).map_err(HarnessError::csv(path))?;
    r.deserialize().collect::<Result<_, _>>().map_err(HarnessError::csv(path))
}
