//! Dense exact linear algebra over a [`CosineField`](super::field::CosineField).

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Mul;

use super::field::{FieldRef, Scalar};

pub type Vector = Vec<Scalar>;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: &FieldRef, rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: &FieldRef, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one(field);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn sub_identity(&self) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let one = Scalar::one(self.data[0].field());
            m[(i, i)] = &m[(i, i)] - &one;
        }
        m
    }

    pub fn add_identity(&self) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let one = Scalar::one(self.data[0].field());
            m[(i, i)] = &m[(i, i)] + &one;
        }
        m
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| dot(self.row(i), v))
            .collect()
    }

    /// Row vector times matrix.
    pub fn apply_left(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| {
                let mut acc = Scalar::zero(self.data[0].field());
                for (i, x) in v.iter().enumerate() {
                    if !x.is_zero() && !self[(i, j)].is_zero() {
                        acc = &acc + &(x * &self[(i, j)]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        Subspace::span(self.cols, self.row_vectors()).dim()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn kernel(&self) -> Vec<Vector> {
        match self.data.first() {
            Some(x) => Echelon::new(self.cols, self.row_vectors()).null_space_in(x.field()),
            None => Vec::new(),
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Hash for Matrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        self.data.hash(state);
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        f.write_str("]")
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let field = self.data[0].field().clone();
        let mut out = Matrix::zeros(&field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        out
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero(a[0].field());
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn scale(v: &[Scalar], c: &Scalar) -> Vector {
    v.iter().map(|x| if x.is_zero() { x.clone() } else { x * c }).collect()
}

/// `a - c * b`, in place.
fn axpy_neg(a: &mut [Scalar], c: &Scalar, b: &[Scalar]) {
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = &*x - &(c * y);
        }
    }
}

/// Reduced row echelon form of a list of vectors.
#[derive(Clone, Debug)]
pub struct Echelon {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ambient: usize, vectors: Vec<Vector>) -> Self {
        let mut e = Self {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        };
        for v in vectors {
            e.insert(v);
        }
        e
    }

    /// Reduces `v` against the current rows.
    pub fn reduce(&self, mut v: Vector) -> Vector {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                axpy_neg(&mut v, &c, row);
            }
        }
        v
    }

    /// Adds a vector; returns whether the span grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        v = scale(&v, &inv);
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                axpy_neg(row, &c, &v);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, v);
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Null space; empty when there are no rows (the field is unknown),
    /// see [`Echelon::null_space_in`].
    pub fn null_space(&self) -> Vec<Vector> {
        match self.rows.first() {
            Some(r) => self.null_space_in(&r[0].field().clone()),
            None => Vec::new(),
        }
    }

    pub fn null_space_in(&self, field: &FieldRef) -> Vec<Vector> {
        let field = field.clone();
        let mut out = Vec::new();
        for free in (0..self.ambient).filter(|c| !self.pivots.contains(c)) {
            let mut x = vec![Scalar::zero(&field); self.ambient];
            x[free] = Scalar::one(&field);
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                x[p] = -&row[free];
            }
            out.push(x);
        }
        out
    }
}

/// A linear subspace of `K^n`, held as a reduced echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    ech: Echelon,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ech: Echelon::new(ambient, Vec::new()),
        }
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let mut ech = Echelon::new(ambient, Vec::new());
        for v in vectors {
            ech.insert(v);
        }
        Self { ech }
    }

    pub fn whole(field: &FieldRef, ambient: usize) -> Self {
        Self::span(
            ambient,
            (0..ambient).map(|i| {
                let mut v = vec![Scalar::zero(field); ambient];
                v[i] = Scalar::one(field);
                v
            }),
        )
    }

    pub fn ambient(&self) -> usize {
        self.ech.ambient
    }

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.ech.rows
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.ech.reduce(v.to_vec()))
    }

    pub fn insert(&mut self, v: Vector) -> bool {
        self.ech.insert(v)
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut out = self.clone();
        for v in other.basis() {
            out.insert(v.clone());
        }
        out
    }

    /// Intersection through the kernel of `[A; -B]`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let n = self.ambient();
        assert_eq!(n, other.ambient());
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(n);
        }
        let a = self.basis();
        let b = other.basis();
        // Columns are basis vectors; solve sum x_i a_i - sum y_j b_j = 0.
        let rows: Vec<Vector> = (0..n)
            .map(|k| {
                a.iter()
                    .map(|v| v[k].clone())
                    .chain(b.iter().map(|w| -&w[k]))
                    .collect()
            })
            .collect();
        let kernel = Matrix::from_rows(rows).kernel();
        let field = a[0][0].field().clone();
        Subspace::span(
            n,
            kernel.into_iter().map(|x| {
                let mut v = vec![Scalar::zero(&field); n];
                for (coef, basis_vec) in x.iter().zip(a) {
                    if !coef.is_zero() {
                        for (t, s) in v.iter_mut().zip(basis_vec) {
                            *t = &*t + &(coef * s);
                        }
                    }
                }
                v
            }),
        )
    }

    /// Image under a linear map given as a closure on vectors.
    pub fn map(&self, target_ambient: usize, f: impl Fn(&[Scalar]) -> Vector) -> Subspace {
        Subspace::span(target_ambient, self.basis().iter().map(|v| f(v)))
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        // Reduced echelon form is canonical.
        self.ambient() == other.ambient()
            && self.ech.pivots == other.ech.pivots
            && self.ech.rows == other.ech.rows
    }
}
impl Eq for Subspace {}
