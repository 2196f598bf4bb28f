//! Degreewise models of the bimodules `R(A)` of functions on unions of
//! twisted graphs `Gr(x) = {(x l, l)}` in `V x V`.
//!
//! A degree-`d` element of `R(A)` is stored as the tuple of its restrictions
//! to the graphs, i.e. a vector in `(+)_{x in A} R_d`. Degrees are the even
//! internal degrees; the polynomial degree is `d / 2`.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::chars::{self, CharError};
use crate::coxeter::{CoxeterError, CoxeterSystem, Element, ReflectionRep, Side};
use crate::exactalg::field::Scalar;
use crate::exactalg::linalg::{Matrix, Subspace, Vector};
use crate::exactalg::poly::{PolyElem, PolyRing};
use crate::exactalg::{self, ExactError};
use crate::hecke::{Hecke, HeckeElt};
use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LabError {
    #[error("the element set A is empty")]
    EmptySet,
    #[error("degree cutoff {0} must be even")]
    OddCutoff(usize),
    #[error("degree {degree} exceeds the cutoff {maxdeg}")]
    BeyondCutoff { degree: usize, maxdeg: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no linear form beta vanishing on Gr(x) + Gr(rx) but not on U x 0 for x = [{0}]")]
    NoSuchBeta(String),
    #[error(
        "truncated hom dimension {computed} differs from the predicted {predicted} in degree {degree} \
         for [{x}] -> [{y}]; raise the degree cutoff"
    )]
    InconclusiveTruncation { x: String, y: String, degree: usize, predicted: String, computed: usize },
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Char(#[from] CharError),
}

/// Shared context: a Coxeter system, a representation `V` and `R = S(V*)`.
pub struct Lab {
    sys: Arc<CoxeterSystem>,
    rep: Arc<ReflectionRep>,
    ring: Arc<PolyRing>,
    hecke: Hecke,
}

/// `R(A)` up to degree `maxdeg`.
pub struct GraphModule {
    ring: Arc<PolyRing>,
    elements: Vec<Element>,
    mats: Vec<Matrix>,
    maxdeg: usize,
    pieces: Vec<Subspace>,
}

/// A subspace of a degree piece, with the graphs indexing its coordinate blocks.
#[derive(Clone, Debug)]
pub struct SectionSpace {
    pub degree: usize,
    pub components: Vec<Element>,
    pub space: Subspace,
}

impl SectionSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

fn check_even(d: usize) -> Result<(), LabError> {
    if d.is_multiple_of(2) {
        Ok(())
    } else {
        Err(LabError::OddCutoff(d))
    }
}

impl GraphModule {
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn maxdeg(&self) -> usize {
        self.maxdeg
    }

    /// `dim R(A)_d`; zero for odd or negative `d`.
    pub fn dim(&self, d: i64) -> usize {
        if d < 0 || d % 2 != 0 {
            return 0;
        }
        let k = (d / 2) as usize;
        assert!(k < self.pieces.len(), "degree {d} beyond cutoff {}", self.maxdeg);
        self.pieces[k].dim()
    }

    pub fn piece(&self, d: usize) -> &Subspace {
        &self.pieces[d / 2]
    }

    fn n(&self, k: usize) -> usize {
        self.ring.basis(k).len()
    }

    fn position(&self, z: Element) -> Option<usize> {
        self.elements.iter().position(|&e| e == z)
    }

    fn block<'a>(&self, v: &'a [Scalar], i: usize, k: usize) -> &'a [Scalar] {
        let n = self.n(k);
        &v[i * n..(i + 1) * n]
    }

    /// Multiplies block `i` by `polys[i]` (all of polynomial degree `j`).
    fn mul_componentwise(&self, v: &[Scalar], k: usize, polys: &[PolyElem], j: usize) -> Vector {
        let mut out = Vec::with_capacity(self.elements.len() * self.n(k + j));
        for (i, p) in polys.iter().enumerate() {
            let f = self.ring.from_coords(self.block(v, i, k), k);
            out.extend(self.ring.coords(&(&f * p), k + j));
        }
        out
    }

    fn right_mul_var(&self, v: &[Scalar], k: usize, var: usize) -> Vector {
        let mut out = Vec::with_capacity(self.elements.len() * self.n(k + 1));
        for i in 0..self.elements.len() {
            out.extend(self.ring.mul_variable_coords(self.block(v, i, k), k, var));
        }
        out
    }

    /// `f o rho(z)` for every graph `z`.
    fn twisted(&self, f: &PolyElem) -> Vec<PolyElem> {
        self.mats.iter().map(|m| f.compose_linear(m)).collect()
    }

    /// The class of `f (x) 1`.
    fn left_tuple(&self, f: &PolyElem, k: usize) -> Vector {
        self.twisted(f).iter().flat_map(|p| self.ring.coords(p, k)).collect()
    }

    /// Elements of `B_d` whose components outside `subset` vanish.
    pub fn gamma_in(&self, subset: &[Element], d: usize) -> SectionSpace {
        let k = d / 2;
        let n = self.n(k);
        let outside: Vec<usize> =
            (0..self.elements.len()).filter(|&i| !subset.contains(&self.elements[i])).collect();
        let basis = self.pieces[k].basis();
        let total = self.elements.len() * n;
        let space = if basis.is_empty() {
            Subspace::zero(total)
        } else if outside.is_empty() {
            self.pieces[k].clone()
        } else {
            let rows: Vec<Vector> = outside
                .iter()
                .flat_map(|&i| (i * n..(i + 1) * n).map(move |r| basis.iter().map(|b| b[r].clone()).collect()))
                .collect();
            let kernel = Matrix::from_rows(rows).kernel();
            Subspace::span(total, kernel.into_iter().map(|c| combine(&c, basis, total)))
        };
        SectionSpace { degree: d, components: self.elements.clone(), space }
    }

    /// Image of `B_d` under restriction to the graphs in `subset`.
    pub fn gamma_quot(&self, subset: &[Element], d: usize) -> SectionSpace {
        self.restrict(&self.pieces[d / 2], subset, d)
    }

    /// Image of a subspace of `B_d` under restriction to `subset`.
    pub fn restrict(&self, space: &Subspace, subset: &[Element], d: usize) -> SectionSpace {
        let k = d / 2;
        let idx: Vec<usize> = subset.iter().map(|&z| self.position(z).expect("subset of A")).collect();
        let n = self.n(k);
        let out = space.map(idx.len() * n, |v| {
            idx.iter().flat_map(|&i| self.block(v, i, k).to_vec()).collect()
        });
        SectionSpace { degree: d, components: subset.to_vec(), space: out }
    }

    /// `dim (R (x)_{R^s} B)_d = dim B_d + dim B_{d-2}`.
    pub fn theta_dims(&self, d: usize) -> usize {
        self.dim(d as i64) + self.dim(d as i64 - 2)
    }
}

fn combine(coeffs: &[Scalar], basis: &[Vector], len: usize) -> Vector {
    let field = basis[0][0].field().clone();
    let mut v = vec![Scalar::zero(&field); len];
    for (c, b) in coeffs.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        for (t, x) in v.iter_mut().zip(b) {
            if !x.is_zero() {
                *t = &*t + &(c * x);
            }
        }
    }
    v
}

/// `R^s` in polynomial degree `k`.
fn invariants(ring: &PolyRing, g: &Matrix, k: usize) -> Vec<PolyElem> {
    let m = ring.substitution_matrix(g, k);
    if m.rows() == 0 {
        return Vec::new();
    }
    m.sub_identity().kernel().into_iter().map(|c| ring.from_coords(&c, k)).collect()
}

fn subset_json(sys: &CoxeterSystem, set: &[Element]) -> Value {
    Value::from(set.iter().map(|&z| sys.word_string(z)).collect::<Vec<_>>())
}

impl Lab {
    pub fn new(sys: Arc<CoxeterSystem>, rep: Arc<ReflectionRep>) -> Result<Self, LabError> {
        if rep.rank() != sys.rank() {
            return Err(LabError::Precondition("representation has the wrong number of generators".into()));
        }
        let ring = Arc::new(PolyRing::new(rep.field().clone(), rep.dim()));
        let hecke = Hecke::new(sys.clone());
        Ok(Self { sys, rep, ring, hecke })
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.sys
    }

    pub fn rep(&self) -> &ReflectionRep {
        &self.rep
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn hecke(&self) -> &Hecke {
        &self.hecke
    }

    fn system_json(&self) -> Value {
        let cm = self.sys.matrix();
        if cm.rank() == 2 {
            match cm.order(0, 1) {
                Some(m) => json!(m),
                None => json!("inf"),
            }
        } else {
            Value::Null
        }
    }

    fn report(&self, check: &str, maxdeg: usize, pass: bool, extra: Value, details: Vec<Value>) -> Value {
        let mut obj = json!({
            "check": check,
            "m": self.system_json(),
            "rep": self.rep.name(),
            "maxdeg": maxdeg,
            "pass": pass,
            "details": details,
        });
        if let (Value::Object(o), Value::Object(e)) = (&mut obj, extra) {
            o.extend(e);
        }
        obj
    }

    /// Builds `R(A)` for even degrees up to `maxdeg`.
    pub fn build_graph_module(&self, elements: &[Element], maxdeg: usize) -> Result<GraphModule, LabError> {
        check_even(maxdeg)?;
        if elements.is_empty() {
            return Err(LabError::EmptySet);
        }
        let mut elements = elements.to_vec();
        for &z in &elements {
            self.sys.check(z)?;
        }
        self.sys.sort_shortlex(&mut elements);
        elements.dedup();
        let mats = elements.iter().map(|&z| self.rep.matrix_of_word(&self.sys.word(z))).collect();
        let mut module = GraphModule { ring: self.ring.clone(), elements, mats, maxdeg, pieces: Vec::new() };
        let nvars = self.ring.nvars();
        for k in 0..=maxdeg / 2 {
            let total = module.elements.len() * module.n(k);
            let mut space = Subspace::zero(total);
            for m in self.ring.basis(k).monomials() {
                space.insert(module.left_tuple(&self.ring.monomial(m), k));
            }
            if k > 0 {
                for b in module.pieces[k - 1].basis() {
                    for var in 0..nvars {
                        space.insert(module.right_mul_var(b, k - 1, var));
                    }
                }
            }
            module.pieces.push(space);
        }
        Ok(module)
    }

    /// `R(<= x)`.
    pub fn lower_module(&self, x: Element, maxdeg: usize) -> Result<GraphModule, LabError> {
        self.build_graph_module(&self.sys.lower_interval(x), maxdeg)
    }

    /// `R (x)_{R^s} R = R(e, s)` degreewise.
    pub fn check_er(&self, s: usize, maxdeg: usize) -> Result<Value, LabError> {
        let e = self.sys.identity();
        let se = self.sys.generator(s)?;
        let r = self.build_graph_module(&[e], maxdeg)?;
        let res = self.build_graph_module(&[e, se], maxdeg)?;
        let mut pass = true;
        let mut details = Vec::new();
        for d in (0..=maxdeg).step_by(2) {
            let lhs = r.theta_dims(d);
            let rhs = res.dim(d as i64);
            pass &= lhs == rhs;
            details.push(json!({"d": d, "theta": lhs, "res": rhs}));
        }
        Ok(self.report("er", maxdeg, pass, json!({"s": self.sys.generator_name(s)}), details))
    }

    /// `R(A)^+ (+) R(A)^-` for `s x id`, with `beta = alpha_s (x) 1`
    /// mapping `R(A)^+_d` onto `R(A)^-_{d+2}` and division by `beta`
    /// inverting it.
    pub fn eigensplit(&self, b: &GraphModule, s: usize, d: usize) -> Result<(SectionSpace, SectionSpace, Value), LabError> {
        let perm = self.swap_permutation(b, s)?;
        let plus = self.eigenspace(b, &perm, d, true);
        let minus = self.eigenspace(b, &perm, d, false);
        let mut info = json!({"d": d, "plus": plus.dim(), "minus": minus.dim()});
        if d + 2 <= b.maxdeg {
            let se = self.sys.generator(s)?;
            let alpha = exactalg::reflection_equation(&self.sys, se, &self.rep)?;
            let betas = b.twisted(&alpha);
            let k = d / 2;
            let image = plus.space.map(b.elements.len() * b.n(k + 1), |v| b.mul_componentwise(v, k, &betas, 1));
            let minus_next = self.eigenspace(b, &perm, d + 2, false);
            let mut divides = true;
            for v in minus_next.space.basis() {
                match divide_componentwise(b, v, k + 1, &betas) {
                    Some(q) => divides &= plus.space.contains(&q),
                    None => divides = false,
                }
            }
            let obj = info.as_object_mut().expect("object");
            obj.insert("minus_next".into(), json!(minus_next.dim()));
            obj.insert("beta_plus_is_minus_next".into(), json!(image == minus_next.space));
            obj.insert("division_lands_in_plus".into(), json!(divides));
        }
        Ok((plus, minus, info))
    }

    /// `new_y = old_{sy}`; requires `sA = A`.
    fn swap_permutation(&self, b: &GraphModule, s: usize) -> Result<Vec<usize>, LabError> {
        b.elements
            .iter()
            .map(|&y| {
                b.position(self.sys.lmul(s, y))
                    .ok_or_else(|| LabError::Precondition("sA != A".into()))
            })
            .collect()
    }

    fn eigenspace(&self, b: &GraphModule, perm: &[usize], d: usize, plus: bool) -> SectionSpace {
        let k = d / 2;
        let n = b.n(k);
        let space = b.pieces[k].map(b.elements.len() * n, |v| {
            let mut out = Vec::with_capacity(v.len());
            for (i, &j) in perm.iter().enumerate() {
                let own = b.block(v, i, k);
                let other = b.block(v, j, k);
                out.extend(own.iter().zip(other).map(|(x, y)| if plus { x + y } else { x - y }));
            }
            out
        });
        SectionSpace { degree: d, components: b.elements.clone(), space }
    }

    /// Graded dimension identity for `R (x)_{R^s} R(A)`, `A = {y <= x}`, and
    /// when `sA != A`, `x != e`, the split `R(A) = M (+) N`.
    pub fn check_mi_di(&self, x: Element, s: usize, maxdeg: usize) -> Result<Value, LabError> {
        if self.sys.rank() != 2 {
            return Err(LabError::Precondition("dihedral system required".into()));
        }
        let a = self.sys.lower_interval(x);
        let sa: Vec<Element> = a.iter().map(|&y| self.sys.lmul(s, y)).collect();
        let mut union: Vec<Element> = a.iter().chain(&sa).copied().collect::<BTreeSet<_>>().into_iter().collect();
        self.sys.sort_shortlex(&mut union);
        let inter: Vec<Element> = a.iter().copied().filter(|y| sa.contains(y)).collect();
        let b = self.build_graph_module(&a, maxdeg)?;
        let bu = self.build_graph_module(&union, maxdeg)?;
        let bi = if inter.is_empty() { None } else { Some(self.build_graph_module(&inter, maxdeg)?) };
        let mut pass = true;
        let mut details = Vec::new();
        for d in (0..=maxdeg).step_by(2) {
            let lhs = b.theta_dims(d);
            let rhs = bu.dim(d as i64) + bi.as_ref().map_or(0, |m| m.dim(d as i64 - 2));
            pass &= lhs == rhs;
            details.push(json!({"d": d, "theta": lhs, "union": bu.dim(d as i64), "intersection_shifted": rhs - bu.dim(d as i64)}));
        }
        let stable = inter.len() == a.len();
        let mut extra = json!({
            "x": self.sys.word_string(x),
            "s": self.sys.generator_name(s),
            "union": subset_json(&self.sys, &union),
            "intersection": subset_json(&self.sys, &inter),
        });
        if !stable && !x.is_identity() {
            let split = self.split_m_n(&b, x, s, &a, &sa)?;
            pass &= split.iter().all(|v| v["direct"] == json!(true) && v["spans"] == json!(true));
            extra.as_object_mut().expect("object").insert("split".into(), Value::from(split));
        }
        Ok(self.report("midi", maxdeg, pass, extra, details))
    }

    fn split_m_n(
        &self,
        b: &GraphModule,
        x: Element,
        s: usize,
        a: &[Element],
        sa: &[Element],
    ) -> Result<Vec<Value>, LabError> {
        let diff: Vec<Element> = a.iter().copied().filter(|y| !sa.contains(y)).collect();
        let rx = match diff.as_slice() {
            [p, q] if *p == x => *q,
            [p, q] if *q == x => *p,
            _ => return Err(LabError::Precondition(format!("A - sA has {} elements", diff.len()))),
        };
        let xinv = self.sys.inverse(x)?;
        let r = self.sys.multiply(rx, xinv)?;
        let rho_r = self.rep.matrix_of_word(&self.sys.word(r));
        let rho_x = self.rep.matrix_of_word(&self.sys.word(x));
        let roots: Vec<&[Scalar]> = (0..self.sys.rank()).map(|t| self.rep.root(t)).collect();
        let beta1 = rho_r
            .transpose()
            .sub_identity()
            .kernel()
            .into_iter()
            .find(|c| roots.iter().any(|e| !crate::exactalg::linalg::dot(c, e).is_zero()))
            .ok_or_else(|| LabError::NoSuchBeta(self.sys.word_string(x)))?;
        let beta2: Vector = rho_x.apply_left(&beta1).iter().map(|c| -c).collect();
        let betas: Vec<PolyElem> = b
            .mats
            .iter()
            .map(|m| {
                let row: Vector = m.apply_left(&beta1).iter().zip(&beta2).map(|(p, q)| p + q).collect();
                exactalg::linear_poly(&self.rep, &row)
            })
            .collect();
        let g = self.rep.generator_matrix(s);
        let nvars = self.ring.nvars();
        let mut m_prev: Option<Subspace> = None;
        let mut n_prev: Option<Subspace> = None;
        let mut out = Vec::new();
        for k in 0..=b.maxdeg / 2 {
            let total = b.elements.len() * b.n(k);
            let mut m_space = Subspace::zero(total);
            let mut n_space = Subspace::zero(total);
            for f in invariants(&self.ring, g, k) {
                n_space.insert(b.left_tuple(&f, k));
            }
            if k >= 1 {
                for f in invariants(&self.ring, g, k - 1) {
                    let tw = b.left_tuple(&f, k - 1);
                    m_space.insert(b.mul_componentwise(&tw, k - 1, &betas, 1));
                }
            }
            for (prev, cur) in [(&m_prev, &mut m_space), (&n_prev, &mut n_space)] {
                if let Some(p) = prev {
                    for v in p.basis() {
                        for var in 0..nvars {
                            cur.insert(b.right_mul_var(v, k - 1, var));
                        }
                    }
                }
            }
            let sum = m_space.sum(&n_space);
            let direct = sum.dim() == m_space.dim() + n_space.dim();
            let spans = sum.dim() == b.pieces[k].dim() && b.pieces[k].contains_space(&sum);
            out.push(json!({"d": 2 * k, "M": m_space.dim(), "N": n_space.dim(), "direct": direct, "spans": spans}));
            m_prev = Some(m_space);
            n_prev = Some(n_space);
        }
        Ok(out)
    }

    /// The two isomorphisms `Gamma_y B = Gamma^<=_y B p_y` and
    /// `Gamma_{>=y} B = Gamma^y B p_y` for `B = R(<= x)`, compared as subspaces
    /// of the `y`-component.
    pub fn check_ip(&self, x: Element, y: Element, maxdeg: usize) -> Result<Value, LabError> {
        if !self.sys.bruhat_leq(y, x)? {
            return Err(LabError::Precondition("y must lie below x".into()));
        }
        let b = self.lower_module(x, maxdeg)?;
        let a = b.elements.clone();
        let ly = self.sys.length(y);
        let refl = self.sys.reflections_up_to_length(2 * ly + 1);
        let p = exactalg::p_y(&self.sys, y, &self.rep, &refl)?;
        let below: Vec<Element> = a.iter().copied().filter(|&z| self.sys.leq(z, y)).collect();
        let above: Vec<Element> = a.iter().copied().filter(|&z| self.sys.leq(y, z)).collect();
        let mut pass = true;
        let mut details = Vec::new();
        for d in (0..=maxdeg).step_by(2) {
            let k = d / 2;
            let lhs1 = b.restrict(&b.gamma_in(&[y], d).space, &[y], d).space;
            let lhs2 = b.restrict(&b.gamma_in(&above, d).space, &[y], d).space;
            let (rhs1, rhs2) = if k >= ly {
                let dd = d - 2 * ly;
                let low = b.restrict(&b.gamma_in(&below, dd).space, &[y], dd).space;
                let all = b.gamma_quot(&[y], dd).space;
                let times_p = |sp: &Subspace| {
                    sp.map(b.n(k), |v| {
                        let f = self.ring.from_coords(v, k - ly);
                        self.ring.coords(&(&f * &p), k)
                    })
                };
                (times_p(&low), times_p(&all))
            } else {
                (Subspace::zero(b.n(k)), Subspace::zero(b.n(k)))
            };
            let ok1 = lhs1 == rhs1;
            let ok2 = lhs2 == rhs2;
            pass &= ok1 && ok2;
            details.push(json!({"d": d, "gamma_y": lhs1.dim(), "first": ok1, "gamma_geq_y": lhs2.dim(), "second": ok2}));
        }
        let extra = json!({"x": self.sys.word_string(x), "y": self.sys.word_string(y)});
        Ok(self.report("ip", maxdeg, pass, extra, details))
    }

    /// Monomials of `R (x) R` in polynomial degree `k`, as `(f, g)` pairs.
    fn pair_monomials(&self, k: usize) -> Vec<(PolyElem, PolyElem, usize)> {
        let mut out = Vec::new();
        for i in 0..=k {
            for f in self.ring.basis(i).monomials() {
                for g in self.ring.basis(k - i).monomials() {
                    out.push((self.ring.monomial(f), self.ring.monomial(g), i));
                }
            }
        }
        out
    }

    /// Image of each `f (x) g` of polynomial degree `k` in `R(A)`.
    fn pair_images(&self, b: &GraphModule, pairs: &[(PolyElem, PolyElem, usize)], k: usize) -> Vec<Vector> {
        pairs
            .iter()
            .map(|(f, g, _)| {
                b.twisted(f)
                    .iter()
                    .flat_map(|tf| self.ring.coords(&(tf * g), k))
                    .collect()
            })
            .collect()
    }

    /// Dimension of the degree-`homdeg` bimodule maps `B -> B'` seen through
    /// degrees `<= maxdeg`: the image `b'` of the generator `1` must be killed
    /// by every relation of `B` of degree `<= maxdeg - homdeg`. An upper bound
    /// for the true dimension.
    pub fn hom_dim_truncated(
        &self,
        b: &GraphModule,
        b2: &GraphModule,
        homdeg: i64,
        maxdeg: usize,
    ) -> Result<usize, LabError> {
        check_even(maxdeg)?;
        if homdeg < 0 || homdeg % 2 != 0 {
            return Ok(0);
        }
        let h = homdeg as usize;
        if h > maxdeg || maxdeg > b.maxdeg || maxdeg > b2.maxdeg {
            return Err(LabError::BeyondCutoff { degree: h.max(maxdeg), maxdeg: b.maxdeg.min(b2.maxdeg) });
        }
        let kh = h / 2;
        let targets = b2.pieces[kh].basis();
        if targets.is_empty() {
            return Ok(0);
        }
        let mut constraints = Vec::new();
        for k in 1..=(maxdeg - h) / 2 {
            let pairs = self.pair_monomials(k);
            let src = self.pair_images(b, &pairs, k);
            let dst = self.pair_images(b2, &pairs, k);
            let rows: Vec<Vector> = (0..src[0].len())
                .map(|r| src.iter().map(|c| c[r].clone()).collect())
                .collect();
            let relations = Matrix::from_rows(rows).kernel();
            let len = dst[0].len();
            for rel in relations {
                let image = combine(&rel, &dst, len);
                let polys: Vec<PolyElem> =
                    (0..b2.elements.len()).map(|i| self.ring.from_coords(b2.block(&image, i, k), k)).collect();
                let cols: Vec<Vector> =
                    targets.iter().map(|t| b2.mul_componentwise(t, kh, &polys, k)).collect();
                for r in 0..cols[0].len() {
                    let row: Vector = cols.iter().map(|c| c[r].clone()).collect();
                    if row.iter().any(|c| !c.is_zero()) {
                        constraints.push(row);
                    }
                }
            }
        }
        let rank = if constraints.is_empty() { 0 } else { Matrix::from_rows(constraints).rank() };
        Ok(targets.len() - rank)
    }

    /// `<v^-l(x) C'_x, v^l(y) C'_y>`: the hom rank between `R(<= x)` and
    /// `R(<= y)`, degree-`k` maps counted by `v^k`.
    pub fn predicted_hom_rank(&self, x: Element, y: Element) -> Result<LaurentPoly, LabError> {
        let hx: HeckeElt = self.hecke.kl_basis(x).shift(-(self.sys.length(x) as i32));
        let hy: HeckeElt = self.hecke.kl_basis(y).shift(self.sys.length(y) as i32);
        Ok(chars::hom_rank(&self.hecke, &hx, &hy)?)
    }

    /// Compares `hom_dim_truncated(R(<=x), R(<=y), h)` with the coefficient of
    /// `v^h` in `hom rank * Hilb(R)` for `h = 0, 2, ..., maxdeg - 4`.
    pub fn check_homtrunc(&self, x: Element, y: Element, maxdeg: usize) -> Result<Value, LabError> {
        check_even(maxdeg)?;
        let bx = self.lower_module(x, maxdeg)?;
        let by = self.lower_module(y, maxdeg)?;
        let rank = self.predicted_hom_rank(x, y)?;
        let hilbert = |h: i64| -> BigInt {
            let mut acc = BigInt::zero();
            for (e, c) in rank.terms() {
                let rest = h - e as i64;
                acc += c * BigInt::from(self.ring.dim_graded(rest));
            }
            acc
        };
        let top = maxdeg.saturating_sub(4);
        let cutoff_small = rank.max_exp().is_some_and(|e| e as usize > top) || rank.min_exp().is_some_and(|e| e < 0);
        let mut details = Vec::new();
        for h in (0..=top).step_by(2) {
            let computed = self.hom_dim_truncated(&bx, &by, h as i64, maxdeg)?;
            let predicted = hilbert(h as i64);
            details.push(json!({"h": h, "computed": computed, "predicted": predicted.to_string()}));
            if BigInt::from(computed) != predicted {
                return Err(LabError::InconclusiveTruncation {
                    x: self.sys.word_string(x),
                    y: self.sys.word_string(y),
                    degree: h,
                    predicted: predicted.to_string(),
                    computed,
                });
            }
        }
        let extra = json!({
            "x": self.sys.word_string(x),
            "y": self.sys.word_string(y),
            "hom_rank": rank.to_string(),
            "cutoff_too_small": cutoff_small,
        });
        Ok(self.report("homtrunc", maxdeg, true, extra, details))
    }

    /// Whether multiplying `v` by `f` on the right keeps its set of nonzero
    /// components.
    pub fn support_stable(&self, b: &GraphModule, v: &[Scalar], d: usize, f: &PolyElem) -> bool {
        let k = d / 2;
        let j = f.degree().map_or(0, |e| e / 2);
        let polys = vec![f.clone(); b.elements.len()];
        let w = b.mul_componentwise(v, k, &polys, j);
        let supp = |u: &[Scalar], kk: usize| -> Vec<bool> {
            (0..b.elements.len()).map(|i| b.block(u, i, kk).iter().any(|c| !c.is_zero())).collect()
        };
        supp(v, k) == supp(&w, k + j)
    }

    /// Descents are needed by callers choosing `s` with `sx > x`.
    pub fn ascends(&self, x: Element, s: usize) -> bool {
        !self.sys.descends(x, s, Side::Left)
    }
}

fn divide_componentwise(b: &GraphModule, v: &[Scalar], k: usize, betas: &[PolyElem]) -> Option<Vector> {
    let mut out = Vec::new();
    for (i, beta) in betas.iter().enumerate() {
        let f = b.ring.from_coords(b.block(v, i, k), k);
        let q = if f.is_zero() { f } else { f.div_exact(beta)? };
        out.extend(b.ring.coords(&q, k - 1));
    }
    Some(out)
}
