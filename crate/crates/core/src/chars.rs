//! Characters of Soergel bimodules as Hecke algebra elements.
//!
//! A bimodule with a `Delta`-flag has character `sum (B:Delta_x[nu]) v^nu T~_x`,
//! one with a `nabla`-flag `sum (B:nabla_x[mu]) v^-mu T~_x`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::coxeter::{CoxeterError, Element, Side};
use crate::hecke::{Hecke, HeckeElt, HeckeError};
use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CharError {
    #[error("negative multiplicity {coeff} at [{x}], v^{exp}: not a flag character")]
    NegativeMultiplicity { x: String, exp: i32, coeff: BigInt },
    #[error("hom formula {formula} disagrees with the pairing {pairing}")]
    HomCrossCheck { formula: String, pairing: String },
    #[error("coefficient of B_[{x}] is {coeff}, which has a negative term")]
    PositivityFailure { x: String, coeff: String },
    #[error("self-dual expansion of [{x}]: {reason}")]
    SelfDualExpansion { x: String, reason: String },
    #[error("the Coxeter system is not dihedral")]
    NotDihedral,
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FlagKind {
    Delta,
    Nabla,
}

/// The Bott-Samelson bimodule `B(s_1 ... s_k)[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BSObject {
    pub word: Vec<usize>,
    pub shift: i32,
}

impl BSObject {
    pub fn new(word: Vec<usize>, shift: i32) -> Self {
        Self { word, shift }
    }

    /// `B(word)[l]`, whose character is the product of the `C'_s`.
    pub fn normalised(word: Vec<usize>) -> Self {
        let shift = word.len() as i32;
        Self { word, shift }
    }
}

/// `C'_s h`, the character of `theta_s` applied to a bimodule.
pub fn theta(hecke: &Hecke, s: usize, h: &HeckeElt) -> HeckeElt {
    &hecke.left_mul_gen(s, h) + &h.shift(1)
}

/// `v^(n-k) (T~_{s_1} + v) ... (T~_{s_k} + v)`, the `Delta`-character.
pub fn bs_character(hecke: &Hecke, b: &BSObject) -> HeckeElt {
    let mut h = hecke.one();
    for &s in b.word.iter().rev() {
        h = theta(hecke, s, &h);
    }
    h.shift(b.shift - b.word.len() as i32)
}

/// The `nabla`-character, `d` of the `Delta`-character.
pub fn bs_character_nabla(hecke: &Hecke, b: &BSObject) -> HeckeElt {
    hecke.bar_d(&bs_character(hecke, b))
}

/// Multiplicities `(x, nu) -> (B : Delta_x[nu])`, or `(x, mu) -> (B : nabla_x[mu])`.
pub fn standard_mults(
    hecke: &Hecke,
    h: &HeckeElt,
    kind: FlagKind,
) -> Result<BTreeMap<(Element, i32), BigInt>, CharError> {
    let sys = hecke.system();
    let mut out = BTreeMap::new();
    for (x, p) in h.terms() {
        for (e, c) in p.terms() {
            if c.is_negative() {
                return Err(CharError::NegativeMultiplicity {
                    x: sys.word_string(x),
                    exp: e,
                    coeff: c.clone(),
                });
            }
            let shift = match kind {
                FlagKind::Delta => e,
                FlagKind::Nabla => -e,
            };
            out.insert((x, shift), c.clone());
        }
    }
    Ok(out)
}

/// Graded rank of the underlying right `R`-module: `sum v^(nu - l(x))`.
pub fn graded_rank_right(hecke: &Hecke, h: &HeckeElt) -> Result<LaurentPoly, CharError> {
    let sys = hecke.system();
    let mut out = LaurentPoly::zero();
    for ((x, nu), c) in standard_mults(hecke, h, FlagKind::Delta)? {
        out.add_term(nu - sys.length(x) as i32, c);
    }
    Ok(out)
}

/// Graded rank of `Hom(M, N)` for `M` with character `hm` (`Delta`) and `N`
/// with character `hn` (`nabla`). A homomorphism of degree `k` contributes
/// `v^k`, so the result is `<hm, hn>`; the multiplicity formula
/// `sum (M:Delta_x[nu]) (N:nabla_x[mu]) v^(mu - nu)` must be its bar image.
pub fn hom_rank(hecke: &Hecke, hm: &HeckeElt, hn: &HeckeElt) -> Result<LaurentPoly, CharError> {
    let dm = standard_mults(hecke, hm, FlagKind::Delta)?;
    let nn = standard_mults(hecke, hn, FlagKind::Nabla)?;
    let mut by_x: BTreeMap<Element, Vec<(i32, &BigInt)>> = BTreeMap::new();
    for ((x, mu), c) in &nn {
        by_x.entry(*x).or_default().push((*mu, c));
    }
    let mut formula = LaurentPoly::zero();
    for ((x, nu), a) in &dm {
        if let Some(list) = by_x.get(x) {
            for (mu, b) in list {
                formula.add_term(mu - nu, a * *b);
            }
        }
    }
    let pairing = hecke.pairing(hm, hn)?;
    if formula.bar() != pairing {
        return Err(CharError::HomCrossCheck {
            formula: formula.to_string(),
            pairing: pairing.to_string(),
        });
    }
    Ok(pairing)
}

/// `sum_x hom_rank(B, R_x) T_x`, where `R_x` has `nabla`-character
/// `v^l(x) T~_x`. On `Delta`-flag characters this returns its input.
pub fn left_inverse_image(hecke: &Hecke, hb: &HeckeElt) -> Result<HeckeElt, CharError> {
    let sys = hecke.system();
    let mut out = hecke.zero();
    for x in hb.support() {
        let lx = sys.length(x) as i32;
        let rx = HeckeElt::term(sys, x, LaurentPoly::monomial(1, lx));
        let rk = hom_rank(hecke, hb, &rx)?;
        out = &out + &hecke.t(x).scale(&rk);
    }
    Ok(out)
}

/// One summand `coeff * v^shift * b(word)` of a b-word expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BWordTerm {
    pub shift: i32,
    pub word: Vec<usize>,
    #[serde(serialize_with = "crate::serialize_display")]
    pub coeff: BigInt,
}

impl BWordTerm {
    pub fn object(&self) -> BSObject {
        BSObject::new(self.word.clone(), self.shift)
    }
}

/// Writes `h` as an integer combination of the `v^n b(word)`, eliminating the
/// ShortLex-largest support element first, using its ShortLex reduced word.
pub fn express_in_bwords(hecke: &Hecke, h: &HeckeElt) -> Result<Vec<BWordTerm>, CharError> {
    let sys = hecke.system();
    sys.check(h.support().next().unwrap_or(sys.identity()))?;
    let mut rest = h.clone();
    let mut out = Vec::new();
    while let Some(x) = hecke.top_element(&rest) {
        let word = sys.word(x);
        let lx = word.len() as i32;
        let p = rest.coeff(x);
        let mut base = BSObject::new(word.clone(), 0);
        for (k, c) in p.terms() {
            base.shift = k + lx;
            rest = &rest - &bs_character(hecke, &base).scale(&LaurentPoly::constant(c.clone()));
            out.push(BWordTerm { shift: k + lx, word: word.clone(), coeff: c.clone() });
        }
    }
    Ok(out)
}

/// `sum coeff * bs_character(word, shift)`.
pub fn bword_sum(hecke: &Hecke, terms: &[BWordTerm]) -> HeckeElt {
    terms.iter().fold(hecke.zero(), |acc, t| {
        &acc + &bs_character(hecke, &t.object()).scale(&LaurentPoly::constant(t.coeff.clone()))
    })
}

/// A direct sum `sum B_x[nu]^(mult)`; the coefficient of `v^nu` at `x` is the
/// multiplicity of `B_x[nu]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleClass {
    mults: BTreeMap<Element, LaurentPoly>,
}

impl BimoduleClass {
    pub fn new(hecke: &Hecke, mults: BTreeMap<Element, LaurentPoly>) -> Result<Self, CharError> {
        for (&x, p) in &mults {
            if !p.is_nonneg() {
                return Err(CharError::PositivityFailure {
                    x: hecke.system().word_string(x),
                    coeff: p.to_string(),
                });
            }
        }
        Ok(Self { mults: mults.into_iter().filter(|(_, p)| !p.is_zero()).collect() })
    }

    pub fn mults(&self) -> &BTreeMap<Element, LaurentPoly> {
        &self.mults
    }

    pub fn mult(&self, x: Element) -> LaurentPoly {
        self.mults.get(&x).cloned().unwrap_or_default()
    }

    /// Direct sum.
    pub fn sum(&self, other: &Self) -> Self {
        let mut mults = self.mults.clone();
        for (&x, p) in &other.mults {
            *mults.entry(x).or_default() += p;
        }
        Self { mults }
    }

    /// Character under `B_x -> C'_x`.
    pub fn character(&self, hecke: &Hecke) -> HeckeElt {
        self.mults
            .iter()
            .fold(hecke.zero(), |acc, (&x, p)| &acc + &hecke.kl_basis(x).scale(p))
    }

    /// Summands, leading element first.
    pub fn sorted(&self, hecke: &Hecke) -> Vec<(Element, LaurentPoly)> {
        let sys = hecke.system();
        let mut v: Vec<_> = self.mults.iter().map(|(&x, p)| (x, p.clone())).collect();
        v.sort_by(|a, b| sys.shortlex_cmp(b.0, a.0));
        v
    }
}

/// Decomposition of a Bott-Samelson bimodule into the `B_x[nu]`, assuming the
/// character of `B_x` is `C'_x`.
pub fn decompose_bs(hecke: &Hecke, b: &BSObject) -> Result<BimoduleClass, CharError> {
    let expansion = hecke.kl_expand(&bs_character(hecke, b))?;
    BimoduleClass::new(hecke, expansion)
}

pub fn decomposition_json(hecke: &Hecke, b: &BSObject, class: &BimoduleClass) -> Value {
    let sys = hecke.system();
    let word: Vec<&str> = b.word.iter().map(|&s| sys.generator_name(s)).collect();
    let summands: Vec<Value> = class
        .sorted(hecke)
        .into_iter()
        .map(|(x, p)| json!({"x": sys.word_string(x), "mult": p.to_string()}))
        .collect();
    json!({"word": word, "shift": b.shift, "summands": summands})
}

/// `End` has no negative degrees and a one-dimensional degree-zero part.
pub fn indecomposability_certificate(hecke: &Hecke, c: &HeckeElt) -> Result<bool, CharError> {
    let end = hom_rank(hecke, c, &hecke.bar_d(c))?;
    Ok(is_one_plus_positive(&end))
}

#[derive(Clone, Debug)]
pub struct SelfDualExpansion {
    pub x: Element,
    pub terms: BTreeMap<Element, LaurentPoly>,
    /// Whether every `h_y` has nonnegative coefficients. Observed, not required.
    pub nonnegative: bool,
}

/// `C'_{s_1} ... C'_{s_k} = C'_x + sum_{y<x} h_y C'_y` for the reduced word
/// of `x`; every `h_y` must be self-dual.
pub fn selfdual_expansion(hecke: &Hecke, x: Element) -> Result<SelfDualExpansion, CharError> {
    let sys = hecke.system();
    let b = BSObject::normalised(sys.word(x));
    let terms = hecke.kl_expand(&bs_character(hecke, &b))?;
    let fail = |reason: String| CharError::SelfDualExpansion { x: sys.word_string(x), reason };
    if !terms.get(&x).is_some_and(LaurentPoly::is_one) {
        return Err(fail("leading coefficient is not 1".into()));
    }
    for (&y, p) in &terms {
        if !p.is_selfdual() {
            return Err(fail(format!("h_[{}] = {p} is not self-dual", sys.word_string(y))));
        }
        if y != x && !sys.leq(y, x) {
            return Err(fail(format!("[{}] is not below x", sys.word_string(y))));
        }
    }
    let nonnegative = terms.values().all(LaurentPoly::is_nonneg);
    Ok(SelfDualExpansion { x, terms, nonnegative })
}

/// `hom_rank(C'_s M, N) = hom_rank(M, C'_s N)`.
pub fn theta_adjunction_check(
    hecke: &Hecke,
    hm: &HeckeElt,
    hn: &HeckeElt,
    s: usize,
) -> Result<bool, CharError> {
    let lhs = hom_rank(hecke, &theta(hecke, s, hm), hn)?;
    let rhs = hom_rank(hecke, hm, &theta(hecke, s, hn))?;
    Ok(lhs == rhs)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct DihedralReport {
    pub max_length: usize,
    pub elements: usize,
    pub closed_form: bool,
    pub product_identity: bool,
    pub product_cases: usize,
    pub empty_intersections: usize,
    pub gamma_recursion: bool,
    pub gamma_cases: usize,
    pub failures: Vec<String>,
}

impl DihedralReport {
    pub fn passed(&self) -> bool {
        self.closed_form && self.product_identity && self.gamma_recursion
    }
}

/// Checks, for all `x` with `l(x) <= max_len`: the closed form
/// `C'_x = v^l(x) sum_{y<=x} T_y`; the identity
/// `(T_s+1) sum_A T_y = sum_{A u sA} T_y + v^-2 sum_{A n sA} T_y` for
/// `A = {y <= x}`; and `v(T_s+1) gamma_x = gamma_sx + gamma_z` with `z < x`
/// (no `gamma_z` when `l(x) <= 1`) whenever `sx > x`.
pub fn dihedral_checks(hecke: &Hecke, max_len: usize) -> Result<DihedralReport, CharError> {
    let sys = hecke.system();
    if sys.rank() != 2 {
        return Err(CharError::NotDihedral);
    }
    let sum_t = |set: &[Element]| {
        set.iter().fold(hecke.zero(), |acc, &y| &acc + &hecke.t(y))
    };
    let gamma = |x: Element| sum_t(&sys.lower_interval(x)).shift(sys.length(x) as i32);
    let mut r = DihedralReport { max_length: max_len, closed_form: true, product_identity: true, gamma_recursion: true, ..Default::default() };
    let elements = sys.elements_up_to_length(max_len);
    r.elements = elements.len();
    let ts_plus_one = |s: usize, h: &HeckeElt| {
        let ts = hecke.t(sys.generator(s).expect("generator"));
        &hecke.multiply(&ts, h).expect("same system") + h
    };
    for &x in &elements {
        let gx = gamma(x);
        if *hecke.kl_basis(x) != gx {
            r.closed_form = false;
            r.failures.push(format!("closed form fails at [{}]", sys.word_string(x)));
        }
        let a = sys.lower_interval(x);
        for s in 0..2 {
            let sa: Vec<Element> = a.iter().map(|&y| sys.lmul(s, y)).collect();
            let union: std::collections::BTreeSet<Element> = a.iter().chain(&sa).copied().collect();
            let inter: Vec<Element> = a.iter().copied().filter(|y| sa.contains(y)).collect();
            let union: Vec<Element> = union.into_iter().collect();
            let lhs = ts_plus_one(s, &sum_t(&a));
            let rhs = &sum_t(&union) + &sum_t(&inter).shift(-2);
            r.product_cases += 1;
            if inter.is_empty() {
                r.empty_intersections += 1;
            }
            if lhs != rhs {
                r.product_identity = false;
                r.failures.push(format!("product identity fails at s={s}, x=[{}]", sys.word_string(x)));
            }
            if sys.descends(x, s, Side::Left) {
                continue;
            }
            r.gamma_cases += 1;
            let sx = sys.lmul(s, x);
            let rest = &ts_plus_one(s, &gx).shift(1) - &gamma(sx);
            let ok = if sys.length(x) <= 1 {
                rest.is_zero()
            } else {
                match hecke.top_element(&rest) {
                    Some(z) => sys.leq(z, x) && z != x && rest == gamma(z),
                    None => false,
                }
            };
            if !ok {
                r.gamma_recursion = false;
                r.failures.push(format!("gamma recursion fails at s={s}, x=[{}]", sys.word_string(x)));
            }
        }
    }
    Ok(r)
}

#[derive(Clone, Debug, Serialize)]
pub struct OmnibusRow {
    pub y: String,
    #[serde(serialize_with = "crate::serialize_display")]
    pub m_y: BigInt,
    #[serde(serialize_with = "crate::serialize_display")]
    pub hom_into: BigInt,
    #[serde(serialize_with = "crate::serialize_display")]
    pub hom_out: BigInt,
}

/// Compares the `m_y` in `C'_s C'_x = sum m_y C'_y` with the degree-zero
/// parts of `Hom(B_y, theta_s B_x)` and `Hom(theta_s B_x, B_y)`, for every
/// `y <= sx`.
pub fn omnibus_check(hecke: &Hecke, s: usize, x: Element) -> Result<(bool, Vec<OmnibusRow>), CharError> {
    let sys = hecke.system();
    let m = hecke.cs_product(s, x)?;
    let sx = sys.lmul(s, x);
    let product = theta(hecke, s, &hecke.kl_basis(x));
    let mut ok = true;
    let mut rows = Vec::new();
    for y in sys.lower_interval(sx) {
        let cy = hecke.kl_basis(y);
        let into = hom_rank(hecke, &cy, &product)?.coeff(0);
        let out = hom_rank(hecke, &product, &cy)?.coeff(0);
        let my = m.get(&y).cloned().unwrap_or_else(BigInt::zero);
        ok &= into == my && out == my;
        rows.push(OmnibusRow { y: sys.word_string(y), m_y: my, hom_into: into, hom_out: out });
    }
    Ok((ok, rows))
}

/// Checks `h = bword_sum(express_in_bwords(h))` and that applying
/// [`left_inverse_image`] to each summand recovers `h`.
pub fn left_inverse_roundtrip(hecke: &Hecke, h: &HeckeElt) -> Result<bool, CharError> {
    let terms = express_in_bwords(hecke, h)?;
    if bword_sum(hecke, &terms) != *h {
        return Ok(false);
    }
    let mut back = hecke.zero();
    for t in &terms {
        let img = left_inverse_image(hecke, &bs_character(hecke, &t.object()))?;
        back = &back + &img.scale(&LaurentPoly::constant(t.coeff.clone()));
    }
    Ok(back == *h)
}

/// `b(word) = (T_{s_1} + 1) ... (T_{s_k} + 1)` computed in the `T` basis.
pub fn b_word(hecke: &Hecke, word: &[usize]) -> HeckeElt {
    let sys = hecke.system();
    word.iter().fold(hecke.one(), |acc, &s| {
        let f = &hecke.t(sys.generator(s).expect("generator")) + &hecke.one();
        hecke.multiply(&acc, &f).expect("same system")
    })
}

pub(crate) fn is_one_plus_positive(p: &LaurentPoly) -> bool {
    let rest = p - &LaurentPoly::one();
    rest.is_nonneg() && rest.min_exp().is_none_or(|e| e > 0) && p.coeff(0).is_one()
}
