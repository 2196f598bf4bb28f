//! The real cyclotomic fields `Q(2cos(pi/N))`.
//!
//! Elements are stored as rational coordinate vectors in the power basis of
//! `theta = 2cos(pi/N)`. The real embedding is the one sending `theta` to the
//! positive cosine, which is what sign tests refer to.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer polynomial with coefficients listed from the constant term up.
pub type IntPoly = Vec<BigInt>;

fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Exact division by a monic divisor; panics if the remainder is nonzero.
fn poly_div_exact(num: &IntPoly, den: &IntPoly) -> IntPoly {
    let mut rem = num.clone();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    if rem.len() < den.len() {
        assert!(rem.iter().all(Zero::is_zero));
        return Vec::new();
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, d) in den.iter().enumerate() {
            rem[i - dd + j] -= &c * d;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    trim(&mut quot);
    quot
}

/// The cyclotomic polynomial `Phi_n`.
pub fn cyclotomic(n: u32) -> IntPoly {
    assert!(n >= 1);
    // y^n - 1
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    let mut den: IntPoly = vec![BigInt::one()];
    for d in 1..n {
        if n.is_multiple_of(d) {
            den = poly_mul(&den, &cyclotomic(d));
        }
    }
    poly_div_exact(&num, &den)
}

/// The minimal polynomial of `2cos(pi/n)` over `Q`, monic with integer
/// coefficients, obtained from `Phi_{2n}` through `x = y + 1/y`.
pub fn minimal_polynomial(n: u32) -> IntPoly {
    assert!(n >= 1);
    if n == 1 {
        // 2cos(pi) = -2
        return vec![BigInt::from(2), BigInt::one()];
    }
    let phi = cyclotomic(2 * n);
    let deg = phi.len() - 1;
    debug_assert!(deg.is_multiple_of(2));
    let k = deg / 2;
    // y^-k Phi(y) = a_k + sum_j a_{k+j} (y^j + y^-j), and y^j + y^-j = D_j(x)
    // with D_0 = 2, D_1 = x, D_{j+1} = x D_j - D_{j-1}.
    let mut out: IntPoly = vec![phi[k].clone()];
    let mut d_prev: IntPoly = vec![BigInt::from(2)];
    let mut d_cur: IntPoly = vec![BigInt::zero(), BigInt::one()];
    for j in 1..=k {
        let a = &phi[k + j];
        if out.len() < d_cur.len() {
            out.resize(d_cur.len(), BigInt::zero());
        }
        for (i, c) in d_cur.iter().enumerate() {
            out[i] += a * c;
        }
        let next = dickson_step(&d_cur, &d_prev);
        d_prev = d_cur;
        d_cur = next;
    }
    trim(&mut out);
    out
}

fn dickson_step(cur: &IntPoly, prev: &IntPoly) -> IntPoly {
    let mut next = vec![BigInt::zero(); cur.len() + 1];
    for (i, c) in cur.iter().enumerate() {
        next[i + 1] += c;
    }
    for (i, c) in prev.iter().enumerate() {
        next[i] -= c;
    }
    trim(&mut next);
    next
}

/// The Dickson polynomial `D_k` with `D_k(y + 1/y) = y^k + y^-k`.
fn dickson(k: u32) -> IntPoly {
    let mut prev: IntPoly = vec![BigInt::from(2)];
    if k == 0 {
        return prev;
    }
    let mut cur: IntPoly = vec![BigInt::zero(), BigInt::one()];
    for _ in 1..k {
        let next = dickson_step(&cur, &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Descriptor of `Q(2cos(pi/N))`.
#[derive(Debug)]
pub struct CosineField {
    order: u32,
    minpoly: IntPoly,
    theta: f64,
}

pub type FieldRef = Arc<CosineField>;

impl CosineField {
    pub fn new(order: u32) -> FieldRef {
        assert!(order >= 1, "field order must be positive");
        Arc::new(Self {
            order,
            minpoly: minimal_polynomial(order),
            theta: 2.0 * (std::f64::consts::PI / order as f64).cos(),
        })
    }

    /// The rational numbers, presented as `Q(2cos(pi/1))`.
    pub fn rationals() -> FieldRef {
        Self::new(1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn minimal_polynomial(&self) -> &IntPoly {
        &self.minpoly
    }

    /// `2cos(pi/m)` as an element of this field; `m` must divide the order
    /// unless the value is rational (`m <= 3`).
    pub fn two_cos_pi_over(self: &Arc<Self>, m: u32) -> Option<Scalar> {
        match m {
            1 => return Some(Scalar::from_int(self, -2)),
            2 => return Some(Scalar::zero(self)),
            3 => return Some(Scalar::one(self)),
            _ => {}
        }
        if m == 0 || !self.order.is_multiple_of(m) {
            return None;
        }
        // 2cos(k*pi/N) = D_k(theta) with k = N/m
        let d = dickson(self.order / m);
        let coords: Vec<BigRational> = d.into_iter().map(BigRational::from_integer).collect();
        Some(Scalar::from_poly(self, coords))
    }

    fn reduce(&self, mut coords: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree();
        for i in (d..coords.len()).rev() {
            let c = std::mem::take(&mut coords[i]);
            if c.is_zero() {
                continue;
            }
            for (j, m) in self.minpoly.iter().enumerate().take(d) {
                coords[i - d + j] -= &c * BigRational::from_integer(m.clone());
            }
        }
        coords.resize(d, BigRational::zero());
        coords
    }

    fn eval_minpoly_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.minpoly.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// A rational interval `[lo, hi]` isolating `theta` among the roots of
    /// the minimal polynomial.
    fn isolate_theta(&self) -> (BigRational, BigRational) {
        if self.degree() == 1 {
            let t = -BigRational::from_integer(self.minpoly[0].clone());
            return (t.clone(), t);
        }
        let centre = BigRational::from_float(self.theta).expect("finite cosine");
        let mut radius = BigRational::new(BigInt::one(), BigInt::from(1u64 << 40));
        loop {
            let lo = &centre - &radius;
            let hi = &centre + &radius;
            let flo = self.eval_minpoly_rational(&lo);
            let fhi = self.eval_minpoly_rational(&hi);
            if flo.is_zero() {
                return (lo.clone(), lo);
            }
            if fhi.is_zero() {
                return (hi.clone(), hi);
            }
            if flo.signum() != fhi.signum() {
                return (lo, hi);
            }
            radius *= BigRational::from_integer(BigInt::from(2));
        }
    }
}

impl PartialEq for CosineField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}
impl Eq for CosineField {}

impl fmt::Display for CosineField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 1 {
            f.write_str("Q")
        } else {
            write!(f, "Q(2cos(pi/{}))", self.order)
        }
    }
}

/// An element of a [`CosineField`].
#[derive(Clone)]
pub struct Scalar {
    field: FieldRef,
    coords: Vec<BigRational>,
}

impl Scalar {
    pub fn zero(field: &FieldRef) -> Self {
        Self {
            field: field.clone(),
            coords: vec![BigRational::zero(); field.degree()],
        }
    }

    pub fn one(field: &FieldRef) -> Self {
        Self::from_rational(field, BigRational::one())
    }

    pub fn from_int(field: &FieldRef, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(field: &FieldRef, q: BigRational) -> Self {
        let mut s = Self::zero(field);
        s.coords[0] = q;
        s
    }

    /// Reduces an arbitrary polynomial in `theta`.
    pub fn from_poly(field: &FieldRef, coords: Vec<BigRational>) -> Self {
        Self {
            field: field.clone(),
            coords: field.reduce(coords),
        }
    }

    /// `theta = 2cos(pi/N)` itself.
    pub fn generator(field: &FieldRef) -> Self {
        Self::from_poly(
            field,
            vec![BigRational::zero(), BigRational::one()],
        )
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coords[1..]
            .iter()
            .all(Zero::is_zero)
            .then_some(&self.coords[0])
    }

    pub fn same_field(&self, other: &Scalar) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field
    }

    pub fn to_f64(&self) -> f64 {
        let mut acc = 0.0;
        for c in self.coords.iter().rev() {
            acc = acc * self.field.theta + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// Exact sign under the real embedding: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        if let Some(q) = self.as_rational() {
            return if q.is_positive() { 1 } else { -1 };
        }
        let approx = self.to_f64();
        let scale: f64 = self
            .coords
            .iter()
            .map(|c| c.abs().to_f64().unwrap_or(f64::MAX))
            .sum::<f64>()
            .max(1.0);
        if approx.abs() > 1e-9 * scale {
            return if approx > 0.0 { 1 } else { -1 };
        }
        self.exact_signum()
    }

    /// Interval refinement around the isolated root; terminates because the
    /// value is nonzero.
    fn exact_signum(&self) -> i32 {
        let (mut lo, mut hi) = self.field.isolate_theta();
        let two = BigRational::from_integer(BigInt::from(2));
        loop {
            let (a, b) = self.eval_interval(&lo, &hi);
            if a.is_positive() {
                return 1;
            }
            if b.is_negative() {
                return -1;
            }
            let mid = (&lo + &hi) / &two;
            let fm = self.field.eval_minpoly_rational(&mid);
            if fm.is_zero() {
                lo = mid.clone();
                hi = mid;
                continue;
            }
            let flo = self.field.eval_minpoly_rational(&lo);
            if flo.signum() == fm.signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }

    fn eval_interval(&self, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
        let mut a = BigRational::zero();
        let mut b = BigRational::zero();
        for c in self.coords.iter().rev() {
            let prods = [&a * lo, &a * hi, &b * lo, &b * hi];
            let min = prods.iter().min().unwrap().clone();
            let max = prods.iter().max().unwrap().clone();
            a = min + c;
            b = max + c;
        }
        (a, b)
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(Self::from_rational(&self.field, q.recip()));
        }
        // Solve (multiplication by self) * x = 1 in the power basis.
        let d = self.field.degree();
        let mut rows: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); d + 1]; d];
        let mut basis = Scalar::one(&self.field);
        let theta = Scalar::generator(&self.field);
        for j in 0..d {
            let col = self * &basis;
            for i in 0..d {
                rows[i][j] = col.coords[i].clone();
            }
            basis = &basis * &theta;
        }
        rows[0][d] = BigRational::one();
        let sol = solve_rational(rows)?;
        Some(Self {
            field: self.field.clone(),
            coords: sol,
        })
    }

    pub fn pow(&self, k: u32) -> Scalar {
        let mut out = Scalar::one(&self.field);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    fn check_field(&self, other: &Scalar) {
        assert!(
            self.same_field(other),
            "scalar field mismatch: {} vs {}",
            self.field,
            other.field
        );
    }
}

/// Gaussian elimination on an augmented square system over `Q`.
fn solve_rational(mut rows: Vec<Vec<BigRational>>) -> Option<Vec<BigRational>> {
    let n = rows.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, piv);
        let inv = rows[col][col].recip();
        for x in rows[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                let pivot_row = rows[col].clone();
                for (x, p) in rows[r].iter_mut().zip(pivot_row.iter()) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(rows.into_iter().map(|r| r[n].clone()).collect())
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coords == other.coords
    }
}
impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.coords.hash(state);
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        f.write_str("[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]@{}", self.field)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_field(rhs);
        Scalar {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.check_field(rhs);
        Scalar {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_field(rhs);
        let d = self.field.degree();
        if d == 1 {
            return Scalar {
                field: self.field.clone(),
                coords: vec![&self.coords[0] * &rhs.coords[0]],
            };
        }
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Scalar {
            field: self.field.clone(),
            coords: self.field.reduce(prod),
        }
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Least common multiple helper for assembling the field order of a Coxeter
/// matrix.
pub fn lcm_all(values: impl IntoIterator<Item = u32>) -> u32 {
    values.into_iter().fold(1u32, |acc, m| acc.lcm(&m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> IntPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn minimal_polynomial_examples() {
        assert_eq!(minimal_polynomial(3), ints(&[-1, 1]));
        assert_eq!(minimal_polynomial(4), ints(&[-2, 0, 1]));
        assert_eq!(minimal_polynomial(6), ints(&[-3, 0, 1]));
        assert_eq!(minimal_polynomial(2), ints(&[0, 1]));
        assert_eq!(minimal_polynomial(1), ints(&[2, 1]));
        // 2cos(pi/5) = golden ratio: x^2 - x - 1
        assert_eq!(minimal_polynomial(5), ints(&[-1, -1, 1]));
    }

    #[test]
    fn minimal_polynomial_vanishes_numerically() {
        for n in 1..=24u32 {
            let p = minimal_polynomial(n);
            let x = 2.0 * (std::f64::consts::PI / n as f64).cos();
            let val: f64 = p
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap());
            assert!(val.abs() < 1e-6, "n={n} residual {val}");
        }
    }

    #[test]
    fn cosines_inside_the_field() {
        let f = CosineField::new(12);
        for m in [1u32, 2, 3, 4, 6, 12] {
            let c = f.two_cos_pi_over(m).unwrap();
            let expect = 2.0 * (std::f64::consts::PI / m as f64).cos();
            assert!((c.to_f64() - expect).abs() < 1e-12, "m={m}");
        }
        assert!(f.two_cos_pi_over(5).is_none());
    }

    #[test]
    fn inverse_and_sign() {
        let f = CosineField::new(5);
        let phi = Scalar::generator(&f);
        let inv = phi.inv().unwrap();
        assert!((&phi * &inv).is_one());
        // phi - 1 - 1/phi == 0
        let z = &(&phi - &Scalar::one(&f)) - &inv;
        assert!(z.is_zero());
        assert_eq!(phi.signum(), 1);
        assert_eq!((-&phi).signum(), -1);
        // tiny but nonzero: phi^-30 via exact refinement
        let tiny = inv.pow(30);
        assert_eq!(tiny.exact_signum(), 1);
        assert_eq!((-&tiny).exact_signum(), -1);
    }
}
