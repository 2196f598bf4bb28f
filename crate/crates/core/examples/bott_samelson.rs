//! Characters of Bott-Samelson bimodules, their decompositions, graded hom
//! ranks and indecomposability certificates.

use soergel::chars::{
    bs_character, bs_character_nabla, decompose_bs, decomposition_json, hom_rank, indecomposability_certificate,
    BSObject,
};
use soergel::coxeter::{CoxeterMatrix, CoxeterSystem};
use soergel::hecke::Hecke;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sys = CoxeterSystem::new(CoxeterMatrix::dihedral(Some(4))?)?;
    let hecke = Hecke::new(sys.clone());

    for word in ["s", "s t s", "s t s t", "s s t"] {
        let b = BSObject::normalised(sys.parse_word(word)?);
        let class = decompose_bs(&hecke, &b)?;
        println!("BS({word}) = {}", decomposition_json(&hecke, &b, &class));
    }

    let bs = BSObject::normalised(sys.parse_word("s")?);
    let end = hom_rank(&hecke, &bs_character(&hecke, &bs), &bs_character_nabla(&hecke, &bs))?;
    println!("graded rank of End(B_s) = {end}");

    let left = BSObject::new(sys.parse_word("s t")?, 2);
    let right = BSObject::new(sys.parse_word("t s t")?, 3);
    let rk = hom_rank(&hecke, &bs_character(&hecke, &left), &bs_character_nabla(&hecke, &right))?;
    println!("graded rank of Hom(BS(s t), BS(t s t)) = {rk}");

    for x in sys.elements_up_to_length(4) {
        let c = hecke.kl_basis(x);
        println!("[{}] certificate: {}", sys.word_string(x), indecomposability_certificate(&hecke, &c)?);
    }
    Ok(())
}
