//! A small seeded corpus with one problem per system type.

use cadorder::generator::{generate_corpus, GenParams};
use cadorder::io::print_problem;

fn main() {
    let labels: Vec<String> = ["22", "12", "11", "20", "10", "00"].map(String::from).to_vec();
    let params = GenParams { seed: 7, max_tdeg: 2, terms: 3, ..GenParams::default() };
    for e in generate_corpus(&labels, 1, &params).expect("valid labels") {
        println!("# {} (seed {})", e.id, e.seed);
        print!("{}", print_problem(&e.problem));
    }
}
