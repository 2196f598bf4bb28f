//! Verification suites run by `soergel verify`.

use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::chars::{self, BSObject, CharError};
use crate::coxeter::{CoxeterMatrix, CoxeterSystem};
use crate::hecke::{format_q_poly, Hecke, HeckeElt};
use crate::laurent::LaurentPoly;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub pass: bool,
    pub cases: Vec<Value>,
    pub failures: Vec<Value>,
}

impl SuiteReport {
    fn new(suite: &str, cases: Vec<Value>, failures: Vec<Value>) -> Self {
        Self { suite: suite.into(), pass: failures.is_empty(), cases, failures }
    }
}

pub fn system_label(sys: &CoxeterSystem) -> String {
    let cm = sys.matrix();
    if cm.rank() == 2 {
        match cm.order(0, 1) {
            Some(m) => format!("I2({m})"),
            None => "I2(inf)".into(),
        }
    } else {
        cm.to_canonical_json()
    }
}

pub fn dihedral_system(m: Option<u32>) -> Arc<CoxeterSystem> {
    CoxeterSystem::new(CoxeterMatrix::dihedral(m).expect("valid dihedral order")).expect("valid system")
}

pub fn s4_system() -> Arc<CoxeterSystem> {
    CoxeterSystem::new(CoxeterMatrix::type_a(3).expect("type A3")).expect("valid system")
}

/// Every word (not necessarily reduced) of length `<= max_len`.
pub fn all_words(rank: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let next: Vec<Vec<usize>> = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..rank).map(move |s| {
                    let mut w = w.clone();
                    w.push(s);
                    w
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn random_word(rng: &mut StdRng, rank: usize, max_len: usize) -> Vec<usize> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..rank)).collect()
}

/// Closed form, product identity and gamma recursion for each dihedral group.
pub fn dihedral(ms: &[Option<u32>], max_len: Option<usize>) -> Result<SuiteReport, CharError> {
    let mut cases = Vec::new();
    let mut failures = Vec::new();
    for &m in ms {
        let sys = dihedral_system(m);
        let hecke = Hecke::new(sys.clone());
        let len = max_len.unwrap_or(m.map_or(8, |m| m as usize));
        let report = chars::dihedral_checks(&hecke, len)?;
        let case = json!({"system": system_label(&sys), "pass": report.passed(), "report": report});
        if !report.passed() {
            failures.push(case.clone());
        }
        cases.push(case);
    }
    Ok(SuiteReport::new("dihedral", cases, failures))
}

/// Random BS pairs: the multiplicity formula must equal the bar of the pairing.
pub fn hom(sys: &Arc<CoxeterSystem>, count: usize, max_len: usize, seed: u64) -> SuiteReport {
    let hecke = Hecke::new(sys.clone());
    let mut rng = StdRng::seed_from_u64(seed);
    let pairs: Vec<(BSObject, BSObject)> = (0..count)
        .map(|_| {
            let a = random_word(&mut rng, sys.rank(), max_len);
            let b = random_word(&mut rng, sys.rank(), max_len);
            let (na, nb) = (rng.gen_range(-2..=2), rng.gen_range(-2..=2));
            (BSObject::new(a, na), BSObject::new(b, nb))
        })
        .collect();
    let failures: Vec<Value> = pairs
        .par_iter()
        .filter_map(|(a, b)| {
            let hm = chars::bs_character(&hecke, a);
            let hn = chars::bs_character_nabla(&hecke, b);
            chars::hom_rank(&hecke, &hm, &hn).err().map(|e| {
                json!({"left": sys.format_word(&a.word), "left_shift": a.shift,
                       "right": sys.format_word(&b.word), "right_shift": b.shift, "error": e.to_string()})
            })
        })
        .collect();
    let case = json!({"system": system_label(sys), "pairs": count, "max_word_length": max_len, "seed": seed});
    SuiteReport::new("hom", vec![case], failures)
}

/// A random element with up to four terms supported in length `<= 4`.
pub fn random_element(hecke: &Hecke, rng: &mut StdRng) -> HeckeElt {
    let sys = hecke.system();
    let pool = sys.elements_up_to_length(4);
    let mut h = hecke.zero();
    for _ in 0..rng.gen_range(1..=4) {
        let x = pool[rng.gen_range(0..pool.len())];
        let mut c = LaurentPoly::zero();
        for _ in 0..rng.gen_range(1..=3) {
            c.add_term(rng.gen_range(-3..=3), rng.gen_range(-3i64..=3).into());
        }
        h.add_term(x, &c);
    }
    h
}

/// b-word expansion followed by the left inverse must return the input.
pub fn leftinv(systems: &[Arc<CoxeterSystem>], count: usize, seed: u64) -> Result<SuiteReport, CharError> {
    let mut cases = Vec::new();
    let mut failures = Vec::new();
    for sys in systems {
        let hecke = Hecke::new(sys.clone());
        let mut rng = StdRng::seed_from_u64(seed);
        for _ in 0..count {
            let h = random_element(&hecke, &mut rng);
            if !chars::left_inverse_roundtrip(&hecke, &h)? {
                failures.push(json!({"system": system_label(sys), "element": hecke.format(&h)}));
            }
        }
        cases.push(json!({"system": system_label(sys), "elements": count, "seed": seed}));
    }
    Ok(SuiteReport::new("leftinv", cases, failures))
}

/// Nonnegative BS decompositions and self-dual expansion coefficients.
pub fn positivity(systems: &[Arc<CoxeterSystem>], max_len: usize) -> SuiteReport {
    let mut cases = Vec::new();
    let mut failures = Vec::new();
    for sys in systems {
        let hecke = Hecke::new(sys.clone());
        hecke.kl_basis_many(&sys.elements_up_to_length(max_len));
        let words = all_words(sys.rank(), max_len);
        let bad: Vec<Value> = words
            .par_iter()
            .filter_map(|w| {
                chars::decompose_bs(&hecke, &BSObject::normalised(w.clone()))
                    .err()
                    .map(|e| json!({"system": system_label(sys), "word": sys.format_word(w), "error": e.to_string()}))
            })
            .collect();
        failures.extend(bad);
        let mut nonneg = 0;
        let elements = sys.elements_up_to_length(max_len);
        for &x in &elements {
            match chars::selfdual_expansion(&hecke, x) {
                Ok(exp) => nonneg += usize::from(exp.nonnegative),
                Err(e) => failures.push(json!({"system": system_label(sys), "x": sys.word_string(x), "error": e.to_string()})),
            }
        }
        cases.push(json!({
            "system": system_label(sys),
            "words": words.len(),
            "elements": elements.len(),
            "selfdual_nonnegative": nonneg,
        }));
    }
    SuiteReport::new("positivity", cases, failures)
}

/// Kazhdan-Lusztig polynomials of `S_4`: triangularity, degree bound,
/// self-duality, nonnegativity, and the presence of a nonconstant one.
pub fn s4() -> SuiteReport {
    let sys = s4_system();
    let hecke = Hecke::new(sys.clone());
    let elements = sys.elements_up_to_length(6);
    hecke.kl_basis_many(&elements);
    let mut failures = Vec::new();
    let mut nonconstant = Vec::new();
    for &x in &elements {
        let c = hecke.kl_basis(x);
        if hecke.bar_d(&c) != *c {
            failures.push(json!({"x": sys.word_string(x), "error": "not self-dual"}));
        }
        for &y in &elements {
            let p = hecke.kl_polynomial(y, x);
            let below = sys.leq(y, x);
            let fail = |msg: &str| json!({"x": sys.word_string(x), "y": sys.word_string(y), "P": format_q_poly(&p), "error": msg});
            if !below && !p.is_empty() {
                failures.push(fail("nonzero off the Bruhat interval"));
            } else if y == x && !(p.len() == 1 && p[0].is_one()) {
                failures.push(fail("diagonal entry is not 1"));
            } else if below && y != x {
                let gap = sys.length(x) - sys.length(y);
                if p.first().is_none_or(|c| !c.is_one()) {
                    failures.push(fail("constant term is not 1"));
                }
                if p.len() > gap.div_ceil(2) {
                    failures.push(fail("degree bound violated"));
                }
                if p.iter().any(|c| c.is_negative()) {
                    failures.push(fail("negative coefficient"));
                }
                if p.iter().skip(1).any(|c| !c.is_zero()) {
                    nonconstant.push(json!({"y": sys.word_string(y), "x": sys.word_string(x), "P": format_q_poly(&p)}));
                }
            }
        }
    }
    if nonconstant.is_empty() {
        failures.push(json!({"error": "no nonconstant Kazhdan-Lusztig polynomial"}));
    }
    let case = json!({"system": "S4", "elements": elements.len(), "nonconstant": nonconstant});
    SuiteReport::new("s4", vec![case], failures)
}

/// The `C'_s C'_x` structure constants against constant terms of hom ranks.
pub fn omnibus(sys: &Arc<CoxeterSystem>, max_len: usize) -> Result<SuiteReport, CharError> {
    let hecke = Hecke::new(sys.clone());
    let mut failures = Vec::new();
    let mut checked = 0;
    for x in sys.elements_up_to_length(max_len) {
        for s in 0..sys.rank() {
            if sys.lmul(s, x) == x || sys.length(sys.lmul(s, x)) < sys.length(x) {
                continue;
            }
            let (ok, rows) = chars::omnibus_check(&hecke, s, x)?;
            checked += 1;
            if !ok {
                failures.push(json!({"x": sys.word_string(x), "s": sys.generator_name(s), "rows": rows}));
            }
        }
    }
    let case = json!({"system": system_label(sys), "pairs": checked});
    Ok(SuiteReport::new("omnibus", vec![case], failures))
}
