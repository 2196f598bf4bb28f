//! Kazhdan-Lusztig basis, polynomials and mu-coefficients.

use soergel::coxeter::{CoxeterMatrix, CoxeterSystem};
use soergel::hecke::{format_q_poly, Hecke};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sys = CoxeterSystem::new(CoxeterMatrix::type_a(3)?)?;
    let hecke = Hecke::new(sys.clone());
    let all = sys.elements_up_to_length(6);
    hecke.kl_basis_many(&all);

    let x = sys.parse_element("s2 s1 s3 s2")?;
    println!("C'_[{}] = {}", sys.word_string(x), hecke.format(&hecke.kl_basis(x)));
    println!("self-dual: {}", hecke.bar_d(&hecke.kl_basis(x)) == *hecke.kl_basis(x));

    println!("nonconstant Kazhdan-Lusztig polynomials of S4:");
    for &x in &all {
        for &y in &sys.lower_interval(x) {
            let p = hecke.kl_polynomial(y, x);
            if p.len() > 1 {
                println!("  P_[{}],[{}] = {}", sys.word_string(y), sys.word_string(x), format_q_poly(&p));
            }
        }
    }

    let s = sys.matrix().generator_index("s2").expect("generator");
    let x = sys.parse_element("s1 s3 s2")?;
    print!("C'_s2 C'_[s1 s3 s2] =");
    for (y, m) in hecke.cs_product(s, x)? {
        print!(" {m} C'_[{}]", sys.word_string(y));
    }
    println!();
    let w0 = *all.last().unwrap();
    println!("mu([s2], [s1 s3 s2]) = {}", hecke.mu(sys.parse_element("s2")?, x));
    println!("C'_w0 has {} terms", hecke.kl_basis(w0).len());
    Ok(())
}
