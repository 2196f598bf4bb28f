//! Polynomial functions on a representation `V`, graded with `deg V* = 2`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use parking_lot::RwLock;

use super::field::{FieldRef, Scalar};
use super::linalg::{Matrix, Vector};

/// Exponent vector, one entry per coordinate function on `V`.
pub type Monomial = Vec<u16>;

/// Degree reverse lexicographic comparison of two monomials of equal total
/// degree; `Greater` means earlier in the basis listing.
fn degrevlex(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    use std::cmp::Ordering::*;
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    if da != db {
        return da.cmp(&db);
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return if x < y { Greater } else { Less };
        }
    }
    Equal
}

/// Monomials of one polynomial degree in a fixed degrevlex order.
#[derive(Debug)]
pub struct GradedBasis {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl GradedBasis {
    fn new(nvars: usize, k: usize) -> Self {
        let mut monomials = Vec::new();
        let mut cur = vec![0u16; nvars];
        fn rec(i: usize, left: usize, cur: &mut Monomial, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left as u16;
                out.push(cur.clone());
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e as u16;
                rec(i + 1, left - e, cur, out);
            }
        }
        if nvars == 0 {
            if k == 0 {
                monomials.push(Vec::new());
            }
        } else {
            rec(0, k, &mut cur, &mut monomials);
        }
        monomials.sort_by(|a, b| degrevlex(b, a));
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Self { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// The graded ring `R = S(V*)` of polynomial functions on a `dim`-dimensional
/// space over an exact field. Polynomial degree `k` sits in grading `2k`.
pub struct PolyRing {
    field: FieldRef,
    nvars: usize,
    bases: RwLock<Vec<Arc<GradedBasis>>>,
}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyRing({} vars over {})", self.nvars, self.field)
    }
}

impl PolyRing {
    pub fn new(field: FieldRef, nvars: usize) -> Self {
        Self {
            field,
            nvars,
            bases: RwLock::new(Vec::new()),
        }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Monomial basis of polynomial degree `k` (grading `2k`).
    pub fn basis(&self, k: usize) -> Arc<GradedBasis> {
        if let Some(b) = self.bases.read().get(k) {
            return b.clone();
        }
        let mut bases = self.bases.write();
        while bases.len() <= k {
            let next = bases.len();
            bases.push(Arc::new(GradedBasis::new(self.nvars, next)));
        }
        bases[k].clone()
    }

    /// `dim R_d` for the grading `d`; zero in odd degrees.
    pub fn dim_graded(&self, d: i64) -> usize {
        if d < 0 || d % 2 != 0 {
            0
        } else {
            self.basis((d / 2) as usize).len()
        }
    }

    pub fn zero(&self) -> PolyElem {
        PolyElem::zero(&self.field, self.nvars)
    }

    pub fn one(&self) -> PolyElem {
        PolyElem::constant(Scalar::one(&self.field), self.nvars)
    }

    pub fn variable(&self, i: usize) -> PolyElem {
        let mut m = vec![0u16; self.nvars];
        m[i] = 1;
        PolyElem::from_terms(&self.field, self.nvars, [(m, Scalar::one(&self.field))])
    }

    /// Linear form `sum_i c_i x_i` given by a row vector.
    pub fn linear_form(&self, coeffs: &[Scalar]) -> PolyElem {
        assert_eq!(coeffs.len(), self.nvars);
        PolyElem::from_terms(
            &self.field,
            self.nvars,
            coeffs.iter().enumerate().map(|(i, c)| {
                let mut m = vec![0u16; self.nvars];
                m[i] = 1;
                (m, c.clone())
            }),
        )
    }

    /// Coordinates of a homogeneous polynomial of polynomial degree `k`.
    pub fn coords(&self, f: &PolyElem, k: usize) -> Vector {
        let basis = self.basis(k);
        let mut v = vec![Scalar::zero(&self.field); basis.len()];
        for (m, c) in &f.terms {
            let i = basis
                .index_of(m)
                .unwrap_or_else(|| panic!("monomial {m:?} not of degree {k}"));
            v[i] = c.clone();
        }
        v
    }

    pub fn from_coords(&self, coords: &[Scalar], k: usize) -> PolyElem {
        let basis = self.basis(k);
        PolyElem::from_terms(
            &self.field,
            self.nvars,
            basis
                .monomials()
                .iter()
                .zip(coords)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Multiplies coordinates of degree `k` by a linear form, landing in
    /// degree `k + 1`.
    pub fn mul_linear_coords(&self, coords: &[Scalar], k: usize, form: &[Scalar]) -> Vector {
        let src = self.basis(k);
        let dst = self.basis(k + 1);
        let mut out = vec![Scalar::zero(&self.field); dst.len()];
        for (m, c) in src.monomials().iter().zip(coords) {
            if c.is_zero() {
                continue;
            }
            for (i, a) in form.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let mut m2 = m.clone();
                m2[i] += 1;
                let j = dst.index_of(&m2).expect("degree bookkeeping");
                out[j] = &out[j] + &(c * a);
            }
        }
        out
    }

    /// Multiplies degree-`k` coordinates by the variable `x_i`.
    pub fn mul_variable_coords(&self, coords: &[Scalar], k: usize, i: usize) -> Vector {
        let src = self.basis(k);
        let dst = self.basis(k + 1);
        let mut out = vec![Scalar::zero(&self.field); dst.len()];
        for (m, c) in src.monomials().iter().zip(coords) {
            if c.is_zero() {
                continue;
            }
            let mut m2 = m.clone();
            m2[i] += 1;
            out[dst.index_of(&m2).expect("degree bookkeeping")] = c.clone();
        }
        out
    }

    /// Matrix of `f -> f o w` on polynomial degree `k`, columns indexed by the
    /// source monomials.
    pub fn substitution_matrix(&self, w: &Matrix, k: usize) -> Matrix {
        let basis = self.basis(k);
        let mut cols = Vec::with_capacity(basis.len());
        for m in basis.monomials() {
            let img = self.monomial(m).compose_linear(w);
            cols.push(self.coords(&img, k));
        }
        if cols.is_empty() {
            return Matrix::zeros(&self.field, 0, 0);
        }
        Matrix::from_rows(cols).transpose()
    }

    pub fn monomial(&self, m: &Monomial) -> PolyElem {
        PolyElem::from_terms(&self.field, self.nvars, [(m.clone(), Scalar::one(&self.field))])
    }
}

/// A polynomial function on `V`.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyElem {
    field: FieldRef,
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PolyElem {
    pub fn zero(field: &FieldRef, nvars: usize) -> Self {
        Self {
            field: field.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Scalar, nvars: usize) -> Self {
        let field = c.field().clone();
        Self::from_terms(&field, nvars, [(vec![0u16; nvars], c)])
    }

    pub fn from_terms(
        field: &FieldRef,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut p = Self::zero(field, nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        assert_eq!(m.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot = &*slot + &c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// Grading degree (twice the polynomial degree) if homogeneous and
    /// nonzero.
    pub fn degree(&self) -> Option<usize> {
        let mut degs = self
            .terms
            .keys()
            .map(|m| 2 * m.iter().map(|&e| e as usize).sum::<usize>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &Scalar) -> PolyElem {
        PolyElem::from_terms(
            &self.field,
            self.nvars,
            self.terms.iter().map(|(m, x)| (m.clone(), x * c)),
        )
    }

    /// `f o M`: substitutes `x_i -> sum_j M_ij x_j`, i.e. `(f o M)(l) = f(M l)`.
    pub fn compose_linear(&self, m: &Matrix) -> PolyElem {
        assert_eq!(m.rows(), self.nvars);
        assert_eq!(m.cols(), self.nvars);
        let images: Vec<PolyElem> = (0..self.nvars)
            .map(|i| {
                PolyElem::from_terms(
                    &self.field,
                    self.nvars,
                    (0..self.nvars).map(|j| {
                        let mut mono = vec![0u16; self.nvars];
                        mono[j] = 1;
                        (mono, m[(i, j)].clone())
                    }),
                )
            })
            .collect();
        let one = PolyElem::constant(Scalar::one(&self.field), self.nvars);
        let mut out = PolyElem::zero(&self.field, self.nvars);
        for (mono, c) in &self.terms {
            let mut t = one.clone();
            for (i, &e) in mono.iter().enumerate() {
                for _ in 0..e {
                    t = &t * &images[i];
                }
            }
            out = &out + &t.scale(c);
        }
        out
    }

    /// Exact division by a nonzero polynomial; `None` if it does not divide.
    pub fn div_exact(&self, divisor: &PolyElem) -> Option<PolyElem> {
        // Dividing by the lex-leading term repeatedly.
        let (lead_m, lead_c) = divisor.terms.iter().next_back()?;
        let lead_inv = lead_c.inv()?;
        let mut rem = self.clone();
        let mut quot = PolyElem::zero(&self.field, self.nvars);
        while let Some((m, c)) = rem.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if m.iter().zip(lead_m).any(|(a, b)| a < b) {
                return None;
            }
            let qm: Monomial = m.iter().zip(lead_m).map(|(a, b)| a - b).collect();
            let qc = &c * &lead_inv;
            let term = PolyElem::from_terms(&self.field, self.nvars, [(qm, qc)]);
            rem = &rem - &(&term * divisor);
            quot = &quot + &term;
        }
        Some(quot)
    }
}

impl fmt::Debug for PolyElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    write!(f, "*x{i}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl Add<&PolyElem> for &PolyElem {
    type Output = PolyElem;
    fn add(self, rhs: &PolyElem) -> PolyElem {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&PolyElem> for &PolyElem {
    type Output = PolyElem;
    fn sub(self, rhs: &PolyElem) -> PolyElem {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &PolyElem {
    type Output = PolyElem;
    fn neg(self) -> PolyElem {
        self.scale(&-Scalar::one(&self.field))
    }
}

impl Mul<&PolyElem> for &PolyElem {
    type Output = PolyElem;
    fn mul(self, rhs: &PolyElem) -> PolyElem {
        let mut out = PolyElem::zero(&self.field, self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(m, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::CosineField;

    #[test]
    fn graded_dimensions() {
        let r = PolyRing::new(CosineField::rationals(), 2);
        assert_eq!(r.dim_graded(0), 1);
        assert_eq!(r.dim_graded(2), 2);
        assert_eq!(r.dim_graded(4), 3);
        assert_eq!(r.dim_graded(3), 0);
        let r3 = PolyRing::new(CosineField::rationals(), 3);
        assert_eq!(r3.dim_graded(12), 28);
        // degrevlex: x0^2 > x0 x1 > x1^2 > x0 x2 > ...
        let b = r3.basis(2);
        assert_eq!(b.monomials()[0], vec![2, 0, 0]);
        assert_eq!(b.monomials()[1], vec![1, 1, 0]);
        assert_eq!(b.monomials()[2], vec![0, 2, 0]);
        assert_eq!(b.monomials()[3], vec![1, 0, 1]);
    }

    #[test]
    fn composition_and_division() {
        let f = CosineField::rationals();
        let r = PolyRing::new(f.clone(), 2);
        let x = r.variable(0);
        let y = r.variable(1);
        let swap = Matrix::from_rows(vec![
            vec![Scalar::zero(&f), Scalar::one(&f)],
            vec![Scalar::one(&f), Scalar::zero(&f)],
        ]);
        assert_eq!(x.compose_linear(&swap), y);
        let p = &(&x * &x) - &(&y * &y);
        let q = (&x - &y).clone();
        assert_eq!(p.div_exact(&q).unwrap(), &x + &y);
        assert!(x.div_exact(&y).is_none());
        assert_eq!(p.degree(), Some(4));
        let c = r.coords(&p, 2);
        assert_eq!(r.from_coords(&c, 2), p);
    }
}
