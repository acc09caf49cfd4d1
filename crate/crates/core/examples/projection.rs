//! Projection cascades under McCallum's operator and the reduced operator
//! for equational constraints.

use cadorder::formula::VariableOrdering;
use cadorder::heuristics::sotd;
use cadorder::io::parse_str;
use cadorder::projection::{project_cascade, CascadeInput, ProjectionKind};

fn main() {
    let p = parse_str(include_str!("circle.prob")).expect("bundled file parses");
    let names = p.names();
    let ord = VariableOrdering::parse("z>y>x", &p).expect("valid ordering");
    for kind in [ProjectionKind::Full, ProjectionKind::Tti] {
        let cascade = project_cascade(CascadeInput::Problem(&p), &ord, kind).expect("projection");
        println!("{kind:?}");
        for stage in &cascade.stages {
            let polys: Vec<String> = stage.polys.iter().map(|f| f.display(&names).to_string()).collect();
            println!("  eliminate {}: {{{}}} sotd {}", p.name(stage.eliminated), polys.join(", "), sotd(&stage.polys));
        }
    }
}
