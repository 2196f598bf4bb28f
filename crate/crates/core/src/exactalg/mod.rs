//! Exact arithmetic: the fields `Q(2cos(pi/N))`, dense linear algebra, and
//! graded polynomial functions on a reflection representation.

pub mod field;
pub mod linalg;
pub mod poly;

use crate::coxeter::{CoxeterSystem, Element, ReflectionRep};
use field::Scalar;
use poly::PolyElem;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("polynomial does not live on this representation")]
    FieldMismatch,
    #[error("[{0}] is not a reflection in this representation")]
    NotAReflection(String),
    #[error("found {found} inversions of an element of length {length}; reflection list incomplete")]
    IncompleteReflections { found: usize, length: usize },
}

/// `f o rho(w)`. Satisfies `act(y, act(x, f)) = act(xy, f)`.
pub fn act(
    sys: &CoxeterSystem,
    w: Element,
    f: &PolyElem,
    rep: &ReflectionRep,
) -> Result<PolyElem, ExactError> {
    if f.nvars() != rep.dim() || f.field() != rep.field() {
        return Err(ExactError::FieldMismatch);
    }
    Ok(f.compose_linear(&rep.matrix_of_word(&sys.word(w))))
}

/// Coordinates of the linear form spanning the `(-1)`-eigenspace of `t` on
/// `V*`, scaled so the first nonzero coordinate is 1.
pub fn reflection_form(
    sys: &CoxeterSystem,
    t: Element,
    rep: &ReflectionRep,
) -> Result<Vec<Scalar>, ExactError> {
    let m = rep.matrix_of_word(&sys.word(t));
    let not_refl = || ExactError::NotAReflection(sys.word_string(t));
    if t.is_identity() || !(&m * &m).is_identity() || m.sub_identity().rank() != 1 {
        return Err(not_refl());
    }
    let kernel = m.transpose().add_identity().kernel();
    if kernel.len() != 1 {
        return Err(not_refl());
    }
    let a = &kernel[0];
    let lead = a.iter().find(|c| !c.is_zero()).ok_or_else(not_refl)?;
    let inv = lead.inv().expect("nonzero");
    Ok(a.iter().map(|c| c * &inv).collect())
}

/// `alpha_t` as a degree-2 polynomial.
pub fn reflection_equation(
    sys: &CoxeterSystem,
    t: Element,
    rep: &ReflectionRep,
) -> Result<PolyElem, ExactError> {
    let coeffs = reflection_form(sys, t, rep)?;
    Ok(linear_poly(rep, &coeffs))
}

pub(crate) fn linear_poly(rep: &ReflectionRep, coeffs: &[Scalar]) -> PolyElem {
    let n = rep.dim();
    PolyElem::from_terms(
        rep.field(),
        n,
        coeffs.iter().enumerate().map(|(i, c)| {
            let mut mono = vec![0u16; n];
            mono[i] = 1;
            (mono, c.clone())
        }),
    )
}

/// `p_y`: the product of `alpha_t` over the reflections `t` in `reflections`
/// with `yt < y`.
pub fn p_y(
    sys: &CoxeterSystem,
    y: Element,
    rep: &ReflectionRep,
    reflections: &[Element],
) -> Result<PolyElem, ExactError> {
    let ly = sys.length(y);
    let mut out = PolyElem::constant(Scalar::one(rep.field()), rep.dim());
    let mut found = 0;
    for &t in reflections {
        let yt = sys.multiply(y, t).expect("same system");
        if sys.length(yt) < ly {
            out = &out * &reflection_equation(sys, t, rep)?;
            found += 1;
        }
    }
    if found != ly {
        return Err(ExactError::IncompleteReflections { found, length: ly });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterMatrix;
    use crate::exactalg::poly::PolyRing;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn sys(m: Option<u32>) -> Arc<CoxeterSystem> {
        CoxeterSystem::new(CoxeterMatrix::dihedral(m).unwrap()).unwrap()
    }

    #[test]
    fn reflection_equations() {
        let w = sys(Some(3));
        let rep = w.geometric_rep();
        let s = w.generator(0).unwrap();
        let a_s = reflection_equation(&w, s, rep).unwrap();
        assert_eq!(act(&w, s, &a_s, rep).unwrap(), -&a_s);
        assert_eq!(act(&w, w.identity(), &a_s, rep).unwrap(), a_s);
        assert!(reflection_equation(&w, w.identity(), rep).is_err());
        let st = w.parse_element("s t").unwrap();
        assert!(reflection_equation(&w, st, rep).is_err());
        // ker alpha_sts is fixed by sts
        let sts = w.parse_element("s t s").unwrap();
        let a = reflection_form(&w, sts, rep).unwrap();
        let m = rep.matrix_of_word(&w.word(sts));
        let neg: Vec<_> = a.iter().map(|c| -c).collect();
        assert_eq!(m.apply_left(&a), neg);
    }

    #[test]
    fn s_invariant_in_degree_two() {
        let w = sys(Some(3));
        let rep = w.geometric_rep();
        let s = w.generator(0).unwrap();
        let m = rep.generator_matrix(0).transpose().sub_identity();
        let inv = m.kernel();
        assert_eq!(inv.len(), 1);
        let g = linear_poly(rep, &inv[0]);
        assert_eq!(act(&w, s, &g, rep).unwrap(), g);
    }

    #[test]
    fn p_y_in_s3() {
        let w = CoxeterSystem::new(CoxeterMatrix::type_a(2).unwrap()).unwrap();
        let rep = w.geometric_rep();
        let refl = w.reflections_up_to_length(3);
        let e = w.identity();
        assert_eq!(p_y(&w, e, rep, &refl).unwrap(), PolyElem::constant(Scalar::one(rep.field()), 2));
        let s = w.generator(0).unwrap();
        assert_eq!(p_y(&w, s, rep, &refl).unwrap(), reflection_equation(&w, s, rep).unwrap());
        let st = w.parse_element("s1 s2").unwrap();
        let t = w.generator(1).unwrap();
        let sts = w.parse_element("s1 s2 s1").unwrap();
        let expected = &reflection_equation(&w, t, rep).unwrap() * &reflection_equation(&w, sts, rep).unwrap();
        assert_eq!(p_y(&w, st, rep, &refl).unwrap(), expected);
        let w0 = w.parse_element("s1 s2 s1").unwrap();
        assert_eq!(p_y(&w, w0, rep, &refl).unwrap().degree(), Some(6));
        assert!(matches!(
            p_y(&w, w0, rep, &refl[..2]),
            Err(ExactError::IncompleteReflections { .. })
        ));
    }

    #[test]
    fn degrees_and_distinct_lines() {
        for m in [None, Some(5)] {
            let w = sys(m);
            let rep = w.minimal_rep();
            let refl = w.reflections_up_to_length(9);
            for y in w.elements_up_to_length(4) {
                let p = p_y(&w, y, rep, &refl).unwrap();
                assert_eq!(p.degree(), Some(2 * w.length(y)));
            }
            let forms: Vec<_> = refl.iter().map(|&t| reflection_form(&w, t, rep).unwrap()).collect();
            for i in 0..forms.len() {
                for j in 0..i {
                    assert_ne!(forms[i], forms[j]);
                }
            }
        }
    }

    fn small_poly(ring: &PolyRing, coeffs: &[i64], deg: usize) -> PolyElem {
        let b = ring.basis(deg);
        let cs: Vec<_> = (0..b.len())
            .map(|i| Scalar::from_int(ring.field(), coeffs[i % coeffs.len()]))
            .collect();
        ring.from_coords(&cs, deg)
    }

    proptest! {
        #[test]
        fn act_is_multiplicative_and_composes(
            a in proptest::collection::vec(-3i64..4, 1..6),
            b in proptest::collection::vec(-3i64..4, 1..6),
            w1 in proptest::collection::vec(0usize..2, 0..5),
            w2 in proptest::collection::vec(0usize..2, 0..5),
        ) {
            let w = sys(Some(4));
            let rep = w.geometric_rep();
            let ring = PolyRing::new(rep.field().clone(), rep.dim());
            let f = small_poly(&ring, &a, 1);
            let g = small_poly(&ring, &b, 2);
            let x = w.element_from_word(&w1);
            let y = w.element_from_word(&w2);
            let fg = &f * &g;
            prop_assert_eq!(
                act(&w, x, &fg, rep).unwrap(),
                &act(&w, x, &f, rep).unwrap() * &act(&w, x, &g, rep).unwrap()
            );
            let xy = w.multiply(x, y).unwrap();
            prop_assert_eq!(
                act(&w, y, &act(&w, x, &f, rep).unwrap(), rep).unwrap(),
                act(&w, xy, &f, rep).unwrap()
            );
        }
    }
}
