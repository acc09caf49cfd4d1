//! Exact polynomial algebra: resultants, discriminants, gcds and
//! squarefree parts.

use cadorder::io::parse_polynomial;
use cadorder::poly::{discriminant, gcd, resultant, squarefree_part, Var};

fn main() {
    let names = ["x", "y", "z"];
    let p = |s: &str| parse_polynomial(s, &names).expect("valid polynomial");
    let circle = p("x^2 + y^2 - 1");
    let saddle = p("x*y - z");

    let r = resultant(&circle, &saddle, Var(0)).expect("nonzero inputs");
    println!("res_x(circle, saddle) = {}", r.display(&names));
    println!("disc_x(circle) = {}", discriminant(&circle, Var(0)).display(&names));

    let f = p("(x - y)^2 * (x + 1)");
    let g = p("(x - y) * (x^2 + z)");
    println!("gcd = {}", gcd(&f, &g).expect("nonzero").display(&names));
    println!("squarefree part of f = {}", squarefree_part(&f).expect("nonzero").display(&names));
}
