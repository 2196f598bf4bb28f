//! Every Hecke algebra element is an integer combination of shifted products
//! of `T_s + 1`, and reading off standard multiplicities inverts the character map.

use soergel::chars::{bword_sum, express_in_bwords, left_inverse_roundtrip};
use soergel::coxeter::{CoxeterMatrix, CoxeterSystem};
use soergel::hecke::Hecke;
use soergel::laurent::LaurentPoly;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sys = CoxeterSystem::new(CoxeterMatrix::dihedral(None)?)?;
    let hecke = Hecke::new(sys.clone());
    let mut h = hecke.t_tilde(sys.parse_element("s t s")?);
    h.add_term(sys.parse_element("t")?, &"2*v^-1 - v^3".parse::<LaurentPoly>()?);
    h.add_term(sys.identity(), &LaurentPoly::constant(5));
    println!("h = {}", hecke.format(&h));

    let terms = express_in_bwords(&hecke, &h)?;
    for t in &terms {
        println!("  {:>3} * v^{} b({})", t.coeff.to_string(), t.shift, sys.format_word(&t.word));
    }
    println!("sum reproduces h: {}", bword_sum(&hecke, &terms) == h);
    println!("left inverse round trip: {}", left_inverse_roundtrip(&hecke, &h)?);
    Ok(())
}
