//! Sweep a generated corpus, then score the choices against a cost table.
//! The costs here are made up; real ones come from timing actual CADs.

use cadorder::formula::VariableOrdering;
use cadorder::generator::{generate_corpus, GenParams};
use cadorder::harness::{aggregate, compute_savings, format_decimal, run_sweep, CorpusProblem, CostTable};
use cadorder::heuristics::{HeuristicId, DEFAULT_ORDERING_CAP};
use cadorder::poly::Var;

fn main() {
    let labels = vec!["10".to_string(), "00".to_string()];
    let params = GenParams { seed: 1, max_tdeg: 2, terms: 3, ..GenParams::default() };
    let corpus: Vec<CorpusProblem> = generate_corpus(&labels, 2, &params)
        .expect("valid labels")
        .into_iter()
        .map(|e| CorpusProblem { id: e.id, problem: e.problem })
        .collect();

    // Pretend each CAD costs more the later x comes in the ordering.
    let mut costs = String::from("problem_id,ordering,cells,time_s\n");
    for c in &corpus {
        for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let ord = VariableOrdering::new(perm.map(Var).to_vec(), 3).expect("permutation");
            let pos = perm.iter().position(|&v| v == 0).expect("x present");
            costs.push_str(&format!("{},{},{},{}.5\n", c.id, ord.format(&c.problem), 10 + 20 * pos, pos));
        }
    }
    let table = CostTable::parse(&costs).expect("well formed");

    let mut choices = run_sweep(&corpus, &[HeuristicId::Brown, HeuristicId::Sotd], DEFAULT_ORDERING_CAP);
    // Heuristic timing is noise at this size; zero it for reproducible output.
    choices.iter_mut().for_each(|c| c.heuristic_time_s = "0".into());
    let report = compute_savings(&table, &choices).expect("every ordering costed");
    for r in &report.rows {
        println!("{} {:<6} {} cells {}%", r.problem_id, r.heuristic, r.ordering, format_decimal(&r.cell_saving_pct, 1));
    }
    for a in aggregate(&report.rows) {
        println!("{:<4} {:<6} mean cells {}%", a.group, a.heuristic, format_decimal(&a.mean_cell_saving_pct, 1));
    }
}
