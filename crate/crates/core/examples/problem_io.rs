//! Reading and printing the `.prob` format, and what a parse error looks like.

use cadorder::io::{parse_problem, print_problem, ProblemSource};

fn main() {
    let text = include_str!("circle.prob");
    let p = parse_problem(&ProblemSource::new(text, "circle.prob")).expect("bundled file parses");
    println!("system type {}, {} variables", p.system_type(), p.nvars());
    print!("{}", print_problem(&p));

    let bad = ProblemSource::new("vars: x, y\nqff: x^^2 + w = 0\n", "bad.prob");
    if let Err(e) = parse_problem(&bad) {
        println!("{e}");
    }
}
