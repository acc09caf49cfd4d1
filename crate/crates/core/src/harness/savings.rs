//! Percentage savings of chosen orderings against the per-problem average
//! cost, in exact rational arithmetic. Rounding happens only when printing.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Read;
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Deserialize;

use super::{ChoiceRow, HarnessError};
use crate::heuristics::HeuristicId;

/// System type labels in the order their columns are reported.
const GROUP_ORDER: [&str; 6] = ["22", "12", "11", "20", "10", "00"];

/// Parses a plain decimal such as `12`, `-0.25` or `1.5e-3` exactly.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(d) => (true, d),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let n: BigInt = format!("0{int}{frac}").parse().ok()?;
    let shift = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut r = if shift >= 0 {
        BigRational::from_integer(n * ten.pow(shift as u32))
    } else {
        BigRational::new(n, ten.pow(shift.unsigned_abs()))
    };
    if neg {
        r = -r;
    }
    Some(r)
}

/// Fixed-point decimal with `places` digits, rounding half away from zero.
/// Never prints a negative zero.
pub fn format_decimal(r: &BigRational, places: u32) -> String {
    let scaled = r * BigRational::from_integer(BigInt::from(10).pow(places));
    let num: BigInt = scaled.numer().abs();
    let den: BigInt = scaled.denom().clone();
    let q: BigInt = (&num + &num + &den).div_floor(&(&den + &den));
    let digits = format!("{:0>width$}", q.to_string(), width = places as usize + 1);
    let (int, frac) = digits.split_at(digits.len() - places as usize);
    let sign = if r.is_negative() && !q.is_zero() { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// Leading digits of an id like `"20-017"`, or `"other"`.
pub fn system_type_of(problem_id: &str) -> String {
    match problem_id.split_once('-') {
        Some((t, _)) if !t.is_empty() && t.chars().all(|c| ('0'..='2').contains(&c)) => t.to_string(),
        _ => "other".to_string(),
    }
}

fn group_key(g: &str) -> (usize, String) {
    match GROUP_ORDER.iter().position(|&k| k == g) {
        Some(i) => (i, String::new()),
        None if g == "all" => (usize::MAX, String::new()),
        None => (GROUP_ORDER.len(), g.to_string()),
    }
}

fn heuristic_key(h: &str) -> (usize, String) {
    match h.parse::<HeuristicId>() {
        Ok(id) => (id as usize, String::new()),
        Err(_) => (HeuristicId::ALL.len(), h.to_string()),
    }
}

fn canonical_ordering(s: &str) -> Vec<String> {
    s.split('>').map(|v| v.trim().to_string()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemCosts {
    names: BTreeSet<String>,
    /// Canonical ordering text to (cells, seconds).
    pub rows: BTreeMap<String, (BigInt, BigRational)>,
}

impl ProblemCosts {
    /// All `n!` orderings present.
    pub fn is_complete(&self) -> bool {
        let full: usize = (1..=self.names.len()).product();
        self.rows.len() == full
    }

    fn mean(&self) -> (BigRational, BigRational) {
        let n = BigRational::from_integer(self.rows.len().into());
        let cells: BigInt = self.rows.values().map(|(c, _)| c).sum();
        let time: BigRational = self.rows.values().map(|(_, t)| t).sum();
        (BigRational::from_integer(cells) / &n, time / n)
    }
}

/// Costs of complete CADs per problem and ordering.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CostTable {
    pub problems: BTreeMap<String, ProblemCosts>,
}

#[derive(Deserialize)]
struct CostRecord {
    problem_id: String,
    ordering: String,
    cells: String,
    time_s: String,
}

impl CostTable {
    pub fn read(path: &Path) -> Result<CostTable, HarnessError> {
        let f = std::fs::File::open(path).map_err(HarnessError::io(path))?;
        Self::from_reader(f, path)
    }

    pub fn parse(text: &str) -> Result<CostTable, HarnessError> {
        Self::from_reader(text.as_bytes(), Path::new("<costs>"))
    }

    fn from_reader(r: impl Read, path: &Path) -> Result<CostTable, HarnessError> {
        let mut table = CostTable::default();
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(r);
        for rec in rdr.deserialize::<CostRecord>() {
            let rec = rec.map_err(HarnessError::csv(path))?;
            let bad = |field, value: &str| HarnessError::BadValue {
                problem: rec.problem_id.clone(),
                field,
                value: value.to_string(),
            };
            let cells: BigInt = rec.cells.parse().map_err(|_| bad("cells", &rec.cells))?;
            if !cells.is_positive() {
                return Err(bad("cells", &rec.cells));
            }
            let time = parse_decimal(&rec.time_s).filter(|t| !t.is_negative()).ok_or_else(|| bad("time_s", &rec.time_s))?;
            let order = canonical_ordering(&rec.ordering);
            let names: BTreeSet<String> = order.iter().cloned().collect();
            if names.len() != order.len() || names.contains("") {
                return Err(bad("ordering", &rec.ordering));
            }
            let entry = table
                .problems
                .entry(rec.problem_id.clone())
                .or_insert_with(|| ProblemCosts { names: names.clone(), rows: BTreeMap::new() });
            if entry.names != names {
                return Err(bad("ordering", &rec.ordering));
            }
            if entry.rows.insert(order.join(">"), (cells, time)).is_some() {
                return Err(HarnessError::invalid(
                    path,
                    format!("duplicate row for problem {} ordering {}", rec.problem_id, rec.ordering),
                ));
            }
        }
        Ok(table)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SavingsRow {
    pub problem_id: String,
    pub heuristic: String,
    pub ordering: String,
    pub cell_saving_pct: BigRational,
    pub time_saving_pct: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SavingsReport {
    pub rows: Vec<SavingsRow>,
    /// Problems left out because some orderings have no cost.
    pub excluded_partial: Vec<String>,
    /// Choices whose heuristic failed: (problem, heuristic, status).
    pub skipped: Vec<(String, String, String)>,
}

/// Cell saving `100 (avg - chosen) / avg` and time saving
/// `100 (avg - heuristic - chosen) / avg` for every successful choice of
/// a complete problem. A zero average time gives a zero time saving.
pub fn compute_savings(costs: &CostTable, choices: &[ChoiceRow]) -> Result<SavingsReport, HarnessError> {
    let hundred = BigRational::from_integer(100.into());
    let mut report = SavingsReport::default();
    let mut excluded = BTreeSet::new();
    for c in choices {
        if !c.is_ok() {
            report.skipped.push((c.problem_id.clone(), c.heuristic.clone(), c.status.clone()));
            continue;
        }
        let ordering = canonical_ordering(&c.ordering).join(">");
        let missing = || HarnessError::MissingCost { problem: c.problem_id.clone(), ordering: ordering.clone() };
        let pc = costs.problems.get(&c.problem_id).ok_or_else(missing)?;
        if !pc.is_complete() {
            excluded.insert(c.problem_id.clone());
            continue;
        }
        let (cells, time) = pc.rows.get(&ordering).ok_or_else(missing)?;
        let h_time = parse_decimal(&c.heuristic_time_s).filter(|t| !t.is_negative()).ok_or_else(|| {
            HarnessError::BadValue { problem: c.problem_id.clone(), field: "heuristic_time_s", value: c.heuristic_time_s.clone() }
        })?;
        let (avg_cells, avg_time) = pc.mean();
        let cell = &hundred * (&avg_cells - BigRational::from_integer(cells.clone())) / &avg_cells;
        let time = if avg_time.is_zero() {
            BigRational::zero()
        } else {
            &hundred * (&avg_time - h_time - time) / &avg_time
        };
        report.rows.push(SavingsRow {
            problem_id: c.problem_id.clone(),
            heuristic: c.heuristic.clone(),
            ordering,
            cell_saving_pct: cell,
            time_saving_pct: time,
        });
    }
    report.rows.sort_by(|a, b| {
        a.problem_id.cmp(&b.problem_id).then_with(|| heuristic_key(&a.heuristic).cmp(&heuristic_key(&b.heuristic)))
    });
    report.excluded_partial = excluded.into_iter().collect();
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AggregateRow {
    pub group: String,
    pub heuristic: String,
    pub problems: usize,
    pub mean_cell_saving_pct: BigRational,
    pub mean_time_saving_pct: BigRational,
}

fn mean<'a>(xs: impl IntoIterator<Item = &'a BigRational>) -> BigRational {
    let (sum, n) = xs.into_iter().fold((BigRational::zero(), 0usize), |(s, n), x| (s + x, n + 1));
    if n == 0 {
        sum
    } else {
        sum / BigRational::from_integer(n.into())
    }
}

fn median(mut xs: Vec<BigRational>) -> BigRational {
    if xs.is_empty() {
        return BigRational::zero();
    }
    xs.sort();
    let n = xs.len();
    if n % 2 == 1 {
        xs.swap_remove(n / 2)
    } else {
        (&xs[n / 2 - 1] + &xs[n / 2]) / BigRational::from_integer(2.into())
    }
}

/// Mean savings per system type and heuristic, then over all problems.
pub fn aggregate(rows: &[SavingsRow]) -> Vec<AggregateRow> {
    type Key = ((usize, String), (usize, String));
    let mut groups: BTreeMap<Key, (String, String, Vec<&SavingsRow>)> = BTreeMap::new();
    for r in rows {
        for g in [system_type_of(&r.problem_id), "all".to_string()] {
            groups
                .entry((group_key(&g), heuristic_key(&r.heuristic)))
                .or_insert_with(|| (g, r.heuristic.clone(), Vec::new()))
                .2
                .push(r);
        }
    }
    groups
        .into_values()
        .map(|(group, heuristic, rs)| AggregateRow {
            group,
            heuristic,
            problems: rs.len(),
            mean_cell_saving_pct: mean(rs.iter().map(|r| &r.cell_saving_pct)),
            mean_time_saving_pct: mean(rs.iter().map(|r| &r.time_saving_pct)),
        })
        .collect()
}

/// Cost distribution of the complete problems in one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostSummaryRow {
    pub group: String,
    pub problems: usize,
    pub mean_cells: BigRational,
    pub median_cells: BigRational,
    /// Median over problems of the per-problem average.
    pub median_avg_cells: BigRational,
    pub mean_time: BigRational,
    pub median_time: BigRational,
    pub median_avg_time: BigRational,
}

/// Mean and median over every CAD, and median of problem averages, per
/// system type and overall. Partial problems are left out.
pub fn cost_summary(costs: &CostTable) -> Vec<CostSummaryRow> {
    let mut groups: BTreeMap<(usize, String), (String, Vec<&ProblemCosts>)> = BTreeMap::new();
    for (id, pc) in costs.problems.iter().filter(|(_, pc)| pc.is_complete()) {
        for g in [system_type_of(id), "all".to_string()] {
            groups.entry(group_key(&g)).or_insert_with(|| (g, Vec::new())).1.push(pc);
        }
    }
    groups
        .into_values()
        .map(|(group, pcs)| {
            let cells: Vec<BigRational> =
                pcs.iter().flat_map(|pc| pc.rows.values().map(|(c, _)| BigRational::from_integer(c.clone()))).collect();
            let times: Vec<BigRational> = pcs.iter().flat_map(|pc| pc.rows.values().map(|(_, t)| t.clone())).collect();
            let (avg_cells, avg_times): (Vec<_>, Vec<_>) = pcs.iter().map(|pc| pc.mean()).unzip();
            CostSummaryRow {
                group,
                problems: pcs.len(),
                mean_cells: mean(&cells),
                median_cells: median(cells),
                median_avg_cells: median(avg_cells),
                mean_time: mean(&times),
                median_time: median(times),
                median_avg_time: median(avg_times),
            }
        })
        .collect()
}

fn write_table(path: &Path, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_path(path).map_err(HarnessError::csv(path))?;
    w.write_record(header).map_err(HarnessError::csv(path))?;
    for r in rows {
        w.write_record(&r).map_err(HarnessError::csv(path))?;
    }
    w.flush().map_err(HarnessError::io(path))
}

pub fn write_savings(path: &Path, rows: &[SavingsRow]) -> Result<(), HarnessError> {
    write_table(
        path,
        &["problem_id", "heuristic", "ordering", "cell_saving_pct", "time_saving_pct"],
        rows.iter().map(|r| {
            vec![
                r.problem_id.clone(),
                r.heuristic.clone(),
                r.ordering.clone(),
                format_decimal(&r.cell_saving_pct, 1),
                format_decimal(&r.time_saving_pct, 1),
            ]
        }),
    )
}

pub fn write_aggregate(path: &Path, rows: &[AggregateRow]) -> Result<(), HarnessError> {
    write_table(
        path,
        &["group", "heuristic", "mean_cell_saving_pct", "mean_time_saving_pct"],
        rows.iter().map(|r| {
            vec![
                r.group.clone(),
                r.heuristic.clone(),
                format_decimal(&r.mean_cell_saving_pct, 1),
                format_decimal(&r.mean_time_saving_pct, 1),
            ]
        }),
    )
}

pub fn write_cost_summary(path: &Path, rows: &[CostSummaryRow]) -> Result<(), HarnessError> {
    write_table(
        path,
        &[
            "group",
            "problems",
            "mean_cells",
            "median_cells",
            "median_avg_cells",
            "mean_time_s",
            "median_time_s",
            "median_avg_time_s",
        ],
        rows.iter().map(|r| {
            vec![
                r.group.clone(),
                r.problems.to_string(),
                format_decimal(&r.mean_cells, 1),
                format_decimal(&r.median_cells, 1),
                format_decimal(&r.median_avg_cells, 1),
                format_decimal(&r.mean_time, 3),
                format_decimal(&r.median_time, 3),
                format_decimal(&r.median_avg_time, 3),
            ]
        }),
    )
}
