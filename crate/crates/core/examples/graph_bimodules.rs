//! Functions on unions of twisted graphs, computed degree by degree.

use std::sync::Arc;

use soergel::bimlab::Lab;
use soergel::coxeter::{CoxeterMatrix, CoxeterSystem};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sys = CoxeterSystem::new(CoxeterMatrix::dihedral(Some(3))?)?;
    let lab = Lab::new(sys.clone(), Arc::new(sys.geometric_rep().clone()))?;

    let x = sys.parse_element("s t")?;
    let b = lab.lower_module(x, 8)?;
    let dims: Vec<usize> = (0..=8).step_by(2).map(|d| b.dim(d)).collect();
    println!("dim R(<= [s t])_d for d = 0, 2, ..., 8: {dims:?}");

    let er = lab.check_er(0, 10)?;
    println!("R (x)_(R^s) R = R(e, s): {}", er["pass"]);

    let w0 = sys.parse_element("s t s")?;
    let full = lab.lower_module(w0, 6)?;
    let (plus, minus, info) = lab.eigensplit(&full, 0, 2)?;
    println!("eigenspaces of s x id in degree 2: +{} -{}; {info}", plus.dim(), minus.dim());

    let midi = lab.check_mi_di(x, 1, 8)?;
    println!("dimension identity and splitting for [s t], t: {}", midi["pass"]);

    let ip = lab.check_ip(w0, sys.parse_element("s")?, 8)?;
    println!("sections supported at and above [s]: {}", ip["pass"]);

    let hom = lab.check_homtrunc(x, sys.parse_element("s")?, 10)?;
    println!("Hom(R(<= [s t]), R(<= [s])) rank {} matches the truncated computation", hom["hom_rank"]);
    Ok(())
}
