//! Sturm chains and distinct real root counts.

use cadorder::io::parse_polynomial;
use cadorder::poly::Var;
use cadorder::realroots::{count_real_roots, ndrr, sturm_chain};

fn main() {
    let x = Var(0);
    let p = |s: &str| parse_polynomial(s, &["x"]).expect("valid polynomial");
    let f = p("x^5 - 3*x + 1");
    for g in sturm_chain(&f, x).expect("univariate").seq {
        println!("  {}", g.display(&["x"]));
    }
    println!("{} real roots", count_real_roots(&f, x).expect("univariate"));

    let set = [p("x^2 - 2"), p("x^2 + 1"), p("(x - 1)^3")];
    println!("ndrr = {}", ndrr(&set, x).expect("univariate"));
}
