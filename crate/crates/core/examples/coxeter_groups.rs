//! Coxeter systems from their matrices: words, multiplication, Bruhat order,
//! reflections and faithfulness of reflection representations.

use soergel::coxeter::{faithfulness_checks, CoxeterMatrix, CoxeterSystem};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cm = CoxeterMatrix::from_json(r#"{"generators":["a","b","c"],"m":[[1,3,2],[3,1,3],[2,3,1]]}"#)?;
    let sys = CoxeterSystem::new(cm)?;
    let elements = sys.elements_up_to_length(10);
    println!("{} elements; longest: [{}]", elements.len(), sys.word_string(*elements.last().unwrap()));

    let x = sys.parse_element("b a c b")?;
    let y = sys.parse_element("b c a b")?;
    println!("[b a c b] and [b c a b] are equal: {}", x == y);
    let z = sys.multiply(x, sys.parse_element("a")?)?;
    println!("[b a c b] * a = [{}] of length {}", sys.word_string(z), sys.length(z));
    println!("inverse of [{}] = [{}]", sys.word_string(z), sys.word_string(sys.inverse(z)?));

    let interval = sys.lower_interval(x);
    let names: Vec<String> = interval.iter().map(|&w| format!("[{}]", sys.word_string(w))).collect();
    println!("Bruhat interval below [b a c b]: {}", names.join(" "));
    println!("[a c] <= [b a c b]: {}", sys.bruhat_leq(sys.parse_element("a c")?, x)?);

    let reflections = sys.reflections_up_to_length(5);
    println!("{} reflections of length <= 5", reflections.len());

    let infinite = CoxeterSystem::new(CoxeterMatrix::dihedral(None)?)?;
    for rep in [infinite.geometric_rep(), infinite.minimal_rep()] {
        let report = faithfulness_checks(&infinite, rep, 8);
        println!(
            "I2(inf) {} rep (dim {}): injective {}, reflection vectors distinct {}, reflection faithful {}",
            rep.name(),
            rep.dim(),
            report.injective,
            report.reflection_vector_faithful,
            report.reflection_faithful
        );
    }
    Ok(())
}
