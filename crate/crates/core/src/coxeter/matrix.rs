use serde::{Deserialize, Serialize};

use super::CoxeterError;
use crate::exactalg::field::{lcm_all, CosineField, FieldRef, Scalar};

/// A Coxeter matrix with named generators. `0` encodes `m_st = infinity`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoxeterMatrix {
    generators: Vec<String>,
    m: Vec<Vec<u32>>,
}

impl CoxeterMatrix {
    pub fn new(generators: Vec<String>, m: Vec<Vec<u32>>) -> Result<Self, CoxeterError> {
        let cm = Self { generators, m };
        cm.validate()?;
        Ok(cm)
    }

    fn validate(&self) -> Result<(), CoxeterError> {
        let n = self.generators.len();
        let bad = |msg: String| Err(CoxeterError::InvalidMatrix(msg));
        if n == 0 {
            return bad("no generators".into());
        }
        if self.m.len() != n || self.m.iter().any(|r| r.len() != n) {
            return bad(format!("matrix must be {n}x{n}"));
        }
        for (i, name) in self.generators.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return bad(format!("invalid generator name {name:?}"));
            }
            if self.generators[..i].contains(name) {
                return bad(format!("duplicate generator name {name:?}"));
            }
        }
        for i in 0..n {
            if self.m[i][i] != 1 {
                return bad(format!("diagonal entry m[{i}][{i}] must be 1"));
            }
            for j in 0..n {
                if self.m[i][j] != self.m[j][i] {
                    return bad(format!("matrix not symmetric at ({i},{j})"));
                }
                if i != j && self.m[i][j] == 1 {
                    return bad(format!("off-diagonal entry m[{i}][{j}] must be >= 2 or 0"));
                }
            }
        }
        Ok(())
    }

    /// The dihedral system `I_2(m)` with generators `s`, `t`; `None` is the
    /// infinite dihedral group.
    pub fn dihedral(m: Option<u32>) -> Result<Self, CoxeterError> {
        let e = m.unwrap_or(0);
        Self::new(vec!["s".into(), "t".into()], vec![vec![1, e], vec![e, 1]])
    }

    /// Type `A_n` (the symmetric group `S_{n+1}`), generators `s1 .. sn`.
    pub fn type_a(n: usize) -> Result<Self, CoxeterError> {
        let generators = (1..=n).map(|i| format!("s{i}")).collect();
        let m = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.abs_diff(j) {
                        0 => 1,
                        1 => 3,
                        _ => 2,
                    })
                    .collect()
            })
            .collect();
        Self::new(generators, m)
    }

    pub fn from_json(text: &str) -> Result<Self, CoxeterError> {
        let cm: Self =
            serde_json::from_str(text).map_err(|e| CoxeterError::InvalidMatrix(e.to_string()))?;
        cm.validate()?;
        Ok(cm)
    }

    /// Compact JSON with fixed key order, used for cache keys.
    pub fn to_canonical_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serialises")
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// `m_st`, with `None` for infinity.
    pub fn order(&self, s: usize, t: usize) -> Option<u32> {
        match self.m[s][t] {
            0 => None,
            m => Some(m),
        }
    }

    pub fn entries(&self) -> &[Vec<u32>] {
        &self.m
    }

    pub fn is_dihedral(&self) -> bool {
        self.rank() == 2
    }

    /// `N = lcm` of the finite entries above 3; every `2cos(pi/m_st)` lies in
    /// `Q(2cos(pi/N))`.
    pub fn field_order(&self) -> u32 {
        lcm_all(self.m.iter().flatten().copied().filter(|&m| m > 3))
    }

    pub fn scalar_field(&self) -> FieldRef {
        CosineField::new(self.field_order())
    }

    /// `<e_t, e_s^v> = -2cos(pi/m_st)`, and `-2` for `m_st = infinity`.
    pub fn pairing(&self, field: &FieldRef, t: usize, s: usize) -> Result<Scalar, CoxeterError> {
        match self.order(s, t) {
            None => Ok(Scalar::from_int(field, -2)),
            Some(m) => field
                .two_cos_pi_over(m)
                .map(|c| -c)
                .ok_or(CoxeterError::UnsupportedField { m, field_order: field.order() }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip_and_infinity() {
        let text = r#"{"generators": ["s","t"], "m": [[1,0],[0,1]]}"#;
        let cm = CoxeterMatrix::from_json(text).unwrap();
        assert_eq!(cm.order(0, 1), None);
        assert_eq!(cm, CoxeterMatrix::dihedral(None).unwrap());
        assert_eq!(
            cm.to_canonical_json(),
            r#"{"generators":["s","t"],"m":[[1,0],[0,1]]}"#
        );
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(CoxeterMatrix::new(vec!["s".into(), "t".into()], vec![vec![1, 3], vec![2, 1]]).is_err());
        assert!(CoxeterMatrix::new(vec!["s".into(), "t".into()], vec![vec![1, 1], vec![1, 1]]).is_err());
        assert!(CoxeterMatrix::new(vec!["s".into()], vec![vec![2]]).is_err());
        assert!(CoxeterMatrix::new(vec!["s".into(), "s".into()], vec![vec![1, 3], vec![3, 1]]).is_err());
    }

    #[test]
    fn pairing_values() {
        let cm = CoxeterMatrix::dihedral(Some(3)).unwrap();
        let f = cm.scalar_field();
        assert_eq!(cm.pairing(&f, 1, 0).unwrap(), Scalar::from_int(&f, -1));
        assert_eq!(cm.pairing(&f, 0, 0).unwrap(), Scalar::from_int(&f, 2));
        let cm2 = CoxeterMatrix::dihedral(Some(2)).unwrap();
        let f2 = cm2.scalar_field();
        assert!(cm2.pairing(&f2, 1, 0).unwrap().is_zero());
        let a3 = CoxeterMatrix::type_a(3).unwrap();
        assert_eq!(a3.field_order(), 1);
        let h = CoxeterMatrix::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![vec![1, 4, 2], vec![4, 1, 6], vec![2, 6, 1]],
        )
        .unwrap();
        assert_eq!(h.field_order(), 12);
    }
}
