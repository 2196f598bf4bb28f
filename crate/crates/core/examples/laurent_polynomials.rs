//! Sparse Laurent polynomials in `v` with exact integer coefficients.

use soergel::laurent::LaurentPoly;

fn main() {
    let p: LaurentPoly = "v^-1 + 2 + 3*v^2".parse().expect("valid polynomial");
    let q = &LaurentPoly::v() - &LaurentPoly::one();
    println!("p         = {p}");
    println!("q         = {q}");
    println!("p * q     = {}", &p * &q);
    println!("bar(p)    = {}", p.bar());
    println!("p v^2     = {}", p.shift(2));
    println!("p(1)      = {}", p.eval_at_one());
    let quantum_two = &LaurentPoly::v() + &LaurentPoly::v().bar();
    println!("v + v^-1 self-dual: {}", quantum_two.is_selfdual());
    println!("p nonnegative: {}, q nonnegative: {}", p.is_nonneg(), q.is_nonneg());
}
