//! Exact arithmetic in `Q(cos(pi/N))`, reflection representations and the
//! polynomial functions they act on.

use soergel::coxeter::{CoxeterMatrix, CoxeterSystem};
use soergel::exactalg::field::CosineField;
use soergel::exactalg::{p_y, reflection_equation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let field = CosineField::new(5);
    let phi = field.two_cos_pi_over(5).expect("5 divides the field order");
    println!("field {field} of degree {}", field.degree());
    println!("2cos(pi/5) = {phi} ~ {:.6}", phi.to_f64());
    println!("its square minus itself: {}", &(&phi * &phi) - &phi);
    println!("inverse: {}", phi.inv().expect("nonzero"));

    let sys = CoxeterSystem::new(CoxeterMatrix::dihedral(Some(5))?)?;
    let rep = sys.geometric_rep();
    let w = sys.parse_element("s t s t s")?;
    println!("rho(s t s t s) = {:?}", rep.matrix_of_word(&sys.word(w)));
    println!("braid relations hold: {}", rep.satisfies_braid_relations(sys.matrix()));

    let t = sys.parse_element("s t s")?;
    println!("equation of the reflecting hyperplane of [s t s]: {:?}", reflection_equation(&sys, t, rep)?);
    let y = sys.parse_element("t s")?;
    let refl = sys.reflections_up_to_length(5);
    println!("p_[t s] = {:?}", p_y(&sys, y, rep, &refl)?);
    Ok(())
}
