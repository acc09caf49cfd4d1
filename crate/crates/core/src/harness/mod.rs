//! Evaluation harness: load a corpus, run heuristics over it, and turn an
//! externally produced table of CAD costs into percentage savings.

use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::formula::Problem;
use crate::generator::ManifestRow;
use crate::io::{parse_problem, ProblemSource};

mod savings;
mod sweep;

pub use savings::{
    aggregate, compute_savings, cost_summary, format_decimal, parse_decimal, system_type_of, write_aggregate,
    write_cost_summary, write_savings, AggregateRow, CostSummaryRow, CostTable, SavingsReport, SavingsRow,
};
pub use sweep::{read_choices, run_sweep, write_choices, ChoiceRow, STATUS_CAP, STATUS_OK};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Csv { path: PathBuf, source: csv::Error },
    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error("{path}: {message}")]
    Invalid { path: PathBuf, message: String },
    #[error("problem {problem}: bad {field} value {value:?}")]
    BadValue { problem: String, field: &'static str, value: String },
    #[error("no cost row for problem {problem} with ordering {ordering}")]
    MissingCost { problem: String, ordering: String },
}

impl HarnessError {
    pub(crate) fn invalid(path: &Path, message: impl Into<String>) -> Self {
        HarnessError::Invalid { path: path.to_path_buf(), message: message.into() }
    }

    pub(crate) fn io(path: &Path) -> impl FnOnce(std::io::Error) -> Self + '_ {
        move |source| HarnessError::Io { path: path.to_path_buf(), source }
    }

    pub(crate) fn csv(path: &Path) -> impl FnOnce(csv::Error) -> Self + '_ {
        move |source| HarnessError::Csv { path: path.to_path_buf(), source }
    }
}

/// One problem of a corpus on disk.
#[derive(Debug, Clone)]
pub struct CorpusProblem {
    pub id: String,
    pub problem: Problem,
}

fn read_problem(path: &Path) -> Result<Problem, HarnessError> {
    let text = fs::read_to_string(path).map_err(HarnessError::io(path))?;
    let src = ProblemSource::new(text, path.display().to_string());
    parse_problem(&src).map_err(|e| HarnessError::Parse { path: path.to_path_buf(), message: e.to_string() })
}

/// Reads `manifest.csv` if present, else every `*.prob` file sorted by name
/// with the file stem as problem id. Returned sorted by id.
pub fn load_corpus(dir: &Path) -> Result<Vec<CorpusProblem>, HarnessError> {
    let manifest = dir.join("manifest.csv");
    let mut out = Vec::new();
    if manifest.exists() {
        let mut r = csv::Reader::from_path(&manifest).map_err(HarnessError::csv(&manifest))?;
        for row in r.deserialize::<ManifestRow>() {
            let row = row.map_err(HarnessError::csv(&manifest))?;
            let problem = read_problem(&dir.join(&row.path))?;
            out.push(CorpusProblem { id: row.id, problem });
        }
    } else {
        let mut paths: Vec<PathBuf> = fs::read_dir(dir)
            .map_err(HarnessError::io(dir))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "prob"))
            .collect();
        paths.sort();
        for p in paths {
            let id = p.file_stem().expect("file name").to_string_lossy().into_owned();
            out.push(CorpusProblem { id, problem: read_problem(&p)? });
        }
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    if let Some(w) = out.windows(2).find(|w| w[0].id == w[1].id) {
        return Err(HarnessError::invalid(dir, format!("duplicate problem id {}", w[0].id)));
    }
    Ok(out)
}
