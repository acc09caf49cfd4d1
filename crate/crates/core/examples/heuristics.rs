//! Every ordering heuristic on one problem, with its tie-break trace.

use cadorder::heuristics::{suggest, HeuristicId};
use cadorder::io::parse_str;

fn main() {
    let p = parse_str(include_str!("circle.prob")).expect("bundled file parses");
    for id in HeuristicId::ALL {
        let r = suggest(&p, id).expect("three variables is under the cap");
        let tb = if r.tiebreaks_used.is_empty() { "-".to_string() } else { r.tiebreaks_used.join(",") };
        println!("{:<10} {:<6} tiebreaks {tb}", id.name(), r.choice.format(&p));
    }
}
