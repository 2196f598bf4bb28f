use std::collections::HashSet;

use serde::Serialize;

use super::{CoxeterSystem, ReflectionRep};
use crate::exactalg::field::Scalar;
use crate::exactalg::linalg::Vector;

/// Which faithfulness properties of a representation hold on all elements of
/// length at most `max_length`.
#[derive(Clone, Debug, Serialize)]
pub struct FaithfulnessReport {
    pub representation: String,
    pub dimension: usize,
    pub max_length: usize,
    pub elements_checked: usize,
    pub reflections_checked: usize,
    /// Distinct elements have distinct matrices.
    pub injective: bool,
    /// Reflections act as reflections, with pairwise distinct `(-1)`-eigenlines.
    pub reflection_vector_faithful: bool,
    /// The fixed space has codimension one exactly for reflections.
    pub reflection_faithful: bool,
    pub failures: Vec<String>,
}

/// Reflections come from brute force conjugation, not from the algebraic
/// test, so the report is independent of the representation under test.
pub fn faithfulness_checks(
    sys: &CoxeterSystem,
    rep: &ReflectionRep,
    max_length: usize,
) -> FaithfulnessReport {
    let elements = sys.elements_up_to_length(max_length);
    let reflections: HashSet<_> = sys.reflections_by_conjugation(max_length).into_iter().collect();
    let mut failures = Vec::new();

    let mut seen = HashSet::new();
    let mut injective = true;
    let mut reflection_faithful = true;
    let mut vector_faithful = true;
    let mut lines = HashSet::new();
    for &x in &elements {
        let m = rep.matrix_of_word(&sys.word(x));
        if !seen.insert(m.clone()) {
            injective = false;
            failures.push(format!("matrix of [{}] repeats", sys.word_string(x)));
        }
        if x.is_identity() {
            continue;
        }
        let codim_one = m.sub_identity().rank() == 1;
        let is_refl = reflections.contains(&x);
        if codim_one != is_refl {
            reflection_faithful = false;
            failures.push(format!(
                "[{}]: codimension-one fixed space {codim_one}, reflection {is_refl}",
                sys.word_string(x)
            ));
        }
        if is_refl {
            let involutive = (&m * &m).is_identity();
            let neg = m.add_identity().kernel();
            if !involutive || !codim_one || neg.len() != 1 {
                vector_faithful = false;
                failures.push(format!("[{}] does not act as a reflection", sys.word_string(x)));
            } else if !lines.insert(normalise(&neg[0])) {
                vector_faithful = false;
                failures.push(format!("[{}] shares its (-1)-eigenline", sys.word_string(x)));
            }
        }
    }
    FaithfulnessReport {
        representation: rep.name().to_string(),
        dimension: rep.dim(),
        max_length,
        elements_checked: elements.len(),
        reflections_checked: reflections.len(),
        injective,
        reflection_vector_faithful: vector_faithful,
        reflection_faithful,
        failures,
    }
}

fn normalise(v: &[Scalar]) -> Vector {
    let lead = v.iter().find(|c| !c.is_zero()).expect("nonzero vector");
    let inv = lead.inv().expect("nonzero");
    v.iter().map(|c| c * &inv).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterMatrix;

    #[test]
    fn infinite_dihedral_reports() {
        let sys = CoxeterSystem::new(CoxeterMatrix::dihedral(None).unwrap()).unwrap();
        let geo = faithfulness_checks(&sys, sys.geometric_rep(), 6);
        assert!(geo.injective);
        assert!(geo.reflection_vector_faithful);
        assert!(!geo.reflection_faithful);
        let min = faithfulness_checks(&sys, sys.minimal_rep(), 6);
        assert!(min.injective && min.reflection_vector_faithful && min.reflection_faithful);
        assert_eq!(min.dimension, 3);
    }

    #[test]
    fn finite_dihedral_geometric() {
        let sys = CoxeterSystem::new(CoxeterMatrix::dihedral(Some(3)).unwrap()).unwrap();
        let r = faithfulness_checks(&sys, sys.geometric_rep(), 3);
        assert!(r.injective && r.reflection_vector_faithful && r.reflection_faithful);
        assert_eq!(r.elements_checked, 6);
    }

    #[test]
    fn single_generator_minimal_dimension() {
        let cm = CoxeterMatrix::new(vec!["s".into()], vec![vec![1]]).unwrap();
        assert_eq!(ReflectionRep::minimal(&cm).unwrap().dim(), 1);
    }
}
