use super::{CoxeterError, CoxeterMatrix};
use crate::exactalg::field::{FieldRef, Scalar};
use crate::exactalg::linalg::{dot, Matrix, Subspace, Vector};

/// Which reflection representation to build from a Coxeter matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RepKind {
    Geometric,
    Minimal,
}

impl std::str::FromStr for RepKind {
    type Err = CoxeterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "geometric" => Ok(Self::Geometric),
            "minimal" => Ok(Self::Minimal),
            other => Err(CoxeterError::InvalidMatrix(format!("unknown representation {other:?}"))),
        }
    }
}

/// A representation `V` in which each generator acts by
/// `v -> v - <v, e_s^v> e_s`.
#[derive(Clone, Debug)]
pub struct ReflectionRep {
    name: String,
    field: FieldRef,
    dim: usize,
    roots: Vec<Vector>,
    coroots: Vec<Vector>,
    gens: Vec<Matrix>,
}

impl ReflectionRep {
    pub fn from_roots(
        name: impl Into<String>,
        field: &FieldRef,
        roots: Vec<Vector>,
        coroots: Vec<Vector>,
    ) -> Result<Self, CoxeterError> {
        if roots.is_empty() || roots.len() != coroots.len() {
            return Err(CoxeterError::InvalidRepresentation("root/coroot count mismatch".into()));
        }
        let dim = roots[0].len();
        let two = Scalar::from_int(field, 2);
        for (a, c) in roots.iter().zip(&coroots) {
            if a.len() != dim || c.len() != dim {
                return Err(CoxeterError::InvalidRepresentation("inconsistent dimensions".into()));
            }
            if dot(a, c) != two {
                return Err(CoxeterError::InvalidRepresentation("<e_s, e_s^v> != 2".into()));
            }
        }
        let gens = roots
            .iter()
            .zip(&coroots)
            .map(|(a, c)| {
                let mut m = Matrix::identity(field, dim);
                for i in 0..dim {
                    for j in 0..dim {
                        if !a[i].is_zero() && !c[j].is_zero() {
                            m[(i, j)] = &m[(i, j)] - &(&a[i] * &c[j]);
                        }
                    }
                }
                m
            })
            .collect();
        Ok(Self { name: name.into(), field: field.clone(), dim, roots, coroots, gens })
    }

    pub fn build(kind: RepKind, cm: &CoxeterMatrix) -> Result<Self, CoxeterError> {
        match kind {
            RepKind::Geometric => Self::geometric(cm),
            RepKind::Minimal => Self::minimal(cm),
        }
    }

    /// Geometric representation: `V = span(e_s)`, `<e_t, e_s^v> = -2cos(pi/m_st)`.
    pub fn geometric(cm: &CoxeterMatrix) -> Result<Self, CoxeterError> {
        let field = cm.scalar_field();
        let n = cm.rank();
        let cartan = cartan_matrix(cm, &field)?;
        let roots = (0..n).map(|s| unit(&field, n, s)).collect();
        let coroots = (0..n).map(|s| (0..n).map(|t| cartan[t][s].clone()).collect()).collect();
        Self::from_roots("geometric", &field, roots, coroots)
    }

    /// Smallest representation with linearly independent roots and coroots:
    /// dimension `|S| + corank` of the Cartan matrix.
    pub fn minimal(cm: &CoxeterMatrix) -> Result<Self, CoxeterError> {
        let field = cm.scalar_field();
        let n = cm.rank();
        let cartan = cartan_matrix(cm, &field)?;
        let mut col_space = Subspace::span(n, (0..n).map(|s| cartan[s].clone()));
        let corank = n - col_space.dim();
        let mut extra = Vec::new();
        for i in 0..n {
            if extra.len() == corank {
                break;
            }
            let u = unit(&field, n, i);
            if col_space.insert(u) {
                extra.push(i);
            }
        }
        let dim = n + corank;
        let roots = (0..n).map(|s| unit(&field, dim, s)).collect();
        let coroots = (0..n)
            .map(|s| {
                let mut row: Vector = (0..n).map(|t| cartan[t][s].clone()).collect();
                row.extend(extra.iter().map(|&i| Scalar::from_int(&field, (i == s) as i64)));
                row
            })
            .collect();
        Self::from_roots("minimal", &field, roots, coroots)
    }

    /// Permutation representation of `S_n` on `Q^n` with roots `eps_i - eps_{i+1}`.
    pub fn permutation(n: usize, field: &FieldRef) -> Result<Self, CoxeterError> {
        if n < 2 {
            return Err(CoxeterError::InvalidRepresentation("need n >= 2".into()));
        }
        let roots: Vec<Vector> = (0..n - 1)
            .map(|i| {
                let mut r = vec![Scalar::zero(field); n];
                r[i] = Scalar::one(field);
                r[i + 1] = Scalar::from_int(field, -1);
                r
            })
            .collect();
        Self::from_roots("permutation", field, roots.clone(), roots)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn root(&self, s: usize) -> &[Scalar] {
        &self.roots[s]
    }

    pub fn coroot(&self, s: usize) -> &[Scalar] {
        &self.coroots[s]
    }

    pub fn generator_matrix(&self, s: usize) -> &Matrix {
        &self.gens[s]
    }

    /// `rho(s_1 ... s_k) = rho(s_1) ... rho(s_k)`.
    pub fn matrix_of_word(&self, word: &[usize]) -> Matrix {
        let mut m = Matrix::identity(&self.field, self.dim);
        for &s in word {
            m = &m * &self.gens[s];
        }
        m
    }

    /// Checks `(rho(s) rho(t))^{m_st} = 1` for every finite `m_st`.
    pub fn satisfies_braid_relations(&self, cm: &CoxeterMatrix) -> bool {
        let n = cm.rank();
        if n != self.rank() {
            return false;
        }
        (0..n).all(|s| {
            (s..n).all(|t| match cm.order(s, t) {
                None => true,
                Some(m) => {
                    let st = &self.gens[s] * &self.gens[t];
                    let mut acc = Matrix::identity(&self.field, self.dim);
                    for _ in 0..m {
                        acc = &acc * &st;
                    }
                    acc.is_identity()
                }
            })
        })
    }
}

fn unit(field: &FieldRef, n: usize, i: usize) -> Vector {
    (0..n).map(|j| Scalar::from_int(field, (i == j) as i64)).collect()
}

/// `A[t][s] = <e_t, e_s^v>`.
fn cartan_matrix(cm: &CoxeterMatrix, field: &FieldRef) -> Result<Vec<Vector>, CoxeterError> {
    let n = cm.rank();
    (0..n)
        .map(|t| (0..n).map(|s| cm.pairing(field, t, s)).collect())
        .collect()
}
