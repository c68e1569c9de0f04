//! Structural sets: ordered orthonormal tuples of vectors generating R_{0,m}.

use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::multivector::{check_dim, Blade, Multivector};
use crate::rational::{sqrt_exact, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructuralSet {
    vectors: Vec<Multivector>,
}

/// Orthogonal matrix `C` with `psi^i = sum_j C_ij e_j` (or, for
/// [`transition`], `psi^i = sum_j C_ij phi^j`).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TransitionMatrix(Matrix);

/// The two shapes a 2x2 orthogonal matrix can take.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PlanarForm {
    /// `[[c1, -c2], [c2, c1]]`, determinant +1.
    Rotation,
    /// `[[c1, c2], [c2, -c1]]`, determinant -1.
    Reflection,
}

impl TransitionMatrix {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::Shape { rows: matrix.rows(), cols: matrix.cols(), context: "transition matrix must be square" });
        }
        let t = TransitionMatrix(matrix);
        if !t.is_orthogonal() {
            return Err(Error::NotOrthogonal);
        }
        Ok(t)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    fn is_orthogonal(&self) -> bool {
        self.0.mul(&self.0.transpose()).map(|p| p.is_identity()).unwrap_or(false)
    }

    pub fn determinant(&self) -> Rational {
        self.0.determinant().expect("square by construction")
    }

    /// Rotation or reflection shape, only for `m = 2`.
    pub fn planar_form(&self) -> Option<PlanarForm> {
        if self.dim() != 2 {
            return None;
        }
        Some(if self.determinant().is_one() { PlanarForm::Rotation } else { PlanarForm::Reflection })
    }

    /// Rotation-shaped 2x2 matrix `[[c1, -c2], [c2, c1]]`.
    pub fn rotation(c1: Rational, c2: Rational) -> Result<Self> {
        TransitionMatrix::new(Matrix::from_rows(vec![vec![c1.clone(), -c2.clone()], vec![c2, c1]])?)
    }

    /// Reflection-shaped 2x2 matrix `[[c1, c2], [c2, -c1]]`.
    pub fn reflection(c1: Rational, c2: Rational) -> Result<Self> {
        TransitionMatrix::new(Matrix::from_rows(vec![vec![c1.clone(), c2.clone()], vec![c2, -c1]])?)
    }
}

impl StructuralSet {
    /// Checks grade and all `m(m+1)/2` anticommutation relations.
    pub fn validate(vectors: Vec<Multivector>) -> Result<Self> {
        let m = vectors.len();
        check_dim(m)?;
        for (idx, v) in vectors.iter().enumerate() {
            if v.dim() != m {
                return Err(Error::DimensionMismatch { left: m, right: v.dim() });
            }
            if v.is_zero() || !v.is_pure_grade(1) {
                return Err(Error::NotAVector { index: idx + 1 });
            }
        }
        for i in 0..m {
            for j in i..m {
                let anti = &(&vectors[i] * &vectors[j]) + &(&vectors[j] * &vectors[i]);
                let expected = if i == j { Multivector::scalar(m, Rational::from_integer((-2).into())) } else { Multivector::zero(m) };
                if anti != expected {
                    return Err(Error::RelationViolated { i: i + 1, j: j + 1, product: anti.to_string() });
                }
            }
        }
        Ok(StructuralSet { vectors })
    }

    pub fn standard(m: usize) -> Result<Self> {
        check_dim(m)?;
        Ok(StructuralSet { vectors: (1..=m).map(|i| Multivector::basis_vector(m, i).unwrap()).collect() })
    }

    /// `{e_m, ..., e_1}`.
    pub fn reversed(m: usize) -> Result<Self> {
        let signed: Vec<i64> = (1..=m as i64).rev().collect();
        StructuralSet::signed_permutation(&signed)
    }

    /// Entry `k` of `spec` is `±j`, meaning `psi^(k+1) = ±e_j`.
    pub fn signed_permutation(spec: &[i64]) -> Result<Self> {
        let m = spec.len();
        check_dim(m)?;
        let mut seen = vec![false; m + 1];
        let mut vectors = Vec::with_capacity(m);
        for &s in spec {
            let j = s.unsigned_abs() as usize;
            if j == 0 || j > m || seen[j] {
                return Err(Error::Invalid(format!("not a signed permutation: {spec:?}")));
            }
            seen[j] = true;
            let sign = if s < 0 { -Rational::one() } else { Rational::one() };
            vectors.push(Multivector::from_blade(m, Blade::vector(j), sign));
        }
        Ok(StructuralSet { vectors })
    }

    /// Set whose vectors are the rows of `c` in standard coordinates.
    pub fn from_matrix(c: &TransitionMatrix) -> Result<Self> {
        let m = c.dim();
        check_dim(m)?;
        let vectors = (0..m).map(|i| Multivector::vector(c.matrix().row(i))).collect();
        Ok(StructuralSet { vectors })
    }

    /// Set `psi^i = sum_j C_ij phi^j` built over a given frame.
    pub fn from_matrix_over(frame: &StructuralSet, c: &TransitionMatrix) -> Result<Self> {
        let m = frame.dim();
        if c.dim() != m {
            return Err(Error::DimensionMismatch { left: m, right: c.dim() });
        }
        let vectors = (0..m)
            .map(|i| {
                let mut v = Multivector::zero(m);
                for (j, phi) in frame.vectors.iter().enumerate() {
                    v += &phi.scale(c.matrix().get(i, j));
                }
                v
            })
            .collect();
        Ok(StructuralSet { vectors })
    }

    /// 2D rotation family with `c1 = cos`; `c2` must come out rational.
    pub fn rotation2(c1: Rational) -> Result<Self> {
        let c2 = planar_partner(&c1)?;
        StructuralSet::from_matrix(&TransitionMatrix::rotation(c1, c2)?)
    }

    pub fn reflection2(c1: Rational) -> Result<Self> {
        let c2 = planar_partner(&c1)?;
        StructuralSet::from_matrix(&TransitionMatrix::reflection(c1, c2)?)
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Multivector] {
        &self.vectors
    }

    /// `psi^i`, 1-based.
    pub fn vector(&self, i: usize) -> &Multivector {
        &self.vectors[i - 1]
    }

    /// Coordinates in the standard basis, one row per vector.
    pub fn coordinates(&self) -> TransitionMatrix {
        let m = self.dim();
        let rows = self
            .vectors
            .iter()
            .map(|v| (1..=m).map(|j| v.coefficient(Blade::vector(j))).collect())
            .collect();
        TransitionMatrix(Matrix::from_rows(rows).expect("square"))
    }

    /// Product `psi_A = psi^{j1} ... psi^{jk}` over the increasing indices of `a`.
    pub fn blade_product(&self, a: Blade) -> Multivector {
        a.indices().fold(Multivector::one(self.dim()), |acc, j| &acc * self.vector(j))
    }

    /// Coordinates of `a` in the blade basis `{psi_A}` of this frame,
    /// ordered like [`Blade::all`]. Uses `<a, psi_A> = [a conj(psi_A)]_0`.
    pub fn frame_coordinates(&self, a: &Multivector) -> Result<Vec<Rational>> {
        if a.dim() != self.dim() {
            return Err(Error::DimensionMismatch { left: self.dim(), right: a.dim() });
        }
        Ok(Blade::all(self.dim())
            .into_iter()
            .map(|b| (a * &self.blade_product(b).conjugate()).scalar_part())
            .collect())
    }
}

fn planar_partner(c1: &Rational) -> Result<Rational> {
    sqrt_exact(&(Rational::one() - c1 * c1))
        .ok_or_else(|| Error::Invalid(format!("1 - ({c1})^2 is not a rational square")))
}

/// Orthogonal matrix expressing `psi` in terms of `phi`: `psi^i = sum_j T_ij phi^j`.
pub fn transition(phi: &StructuralSet, psi: &StructuralSet) -> Result<TransitionMatrix> {
    if phi.dim() != psi.dim() {
        return Err(Error::DimensionMismatch { left: phi.dim(), right: psi.dim() });
    }
    let t = psi.coordinates().0.mul(&phi.coordinates().0.transpose())?;
    Ok(TransitionMatrix(t))
}

impl fmt::Display for StructuralSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vectors.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for StructuralSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.vectors.iter().map(|v| v.to_string()).collect();
        v.serialize(s)
    }
}

impl StructuralSet {
    /// Parses a JSON list of multivector strings, e.g. `["e[3]", "e[2]", "e[1]"]`.
    pub fn from_json_vectors(text: &str) -> Result<Self> {
        let items: Vec<String> = serde_json::from_str(text).map_err(|e| Error::Invalid(e.to_string()))?;
        let m = items.len();
        let vectors = items.iter().map(|s| Multivector::parse(s, m)).collect::<Result<Vec<_>>>()?;
        StructuralSet::validate(vectors)
    }

    /// Parses a JSON array of arrays of rational strings.
    pub fn from_json_matrix(text: &str) -> Result<Self> {
        let matrix: Matrix = serde_json::from_str(text).map_err(|e| Error::Invalid(e.to_string()))?;
        StructuralSet::from_matrix(&TransitionMatrix::new(matrix)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn standard_and_reversed_validate() {
        let s = StructuralSet::standard(3).unwrap();
        assert!(StructuralSet::validate(s.vectors().to_vec()).is_ok());
        let r = StructuralSet::reversed(3).unwrap();
        assert_eq!(r.vector(1), &Multivector::basis_vector(3, 3).unwrap());
        assert!(StructuralSet::validate(r.vectors().to_vec()).is_ok());
    }

    #[test]
    fn repeated_vector_fails_on_relation_1_2() {
        let e1 = Multivector::basis_vector(2, 1).unwrap();
        let err = StructuralSet::validate(vec![e1.clone(), e1]).unwrap_err();
        assert!(matches!(err, Error::RelationViolated { i: 1, j: 2, .. }), "{err}");
    }

    #[test]
    fn non_vector_entry_rejected() {
        let b = Multivector::from_blade(2, Blade::from_indices(&[1, 2], 2).unwrap(), int(1));
        let e1 = Multivector::basis_vector(2, 1).unwrap();
        assert!(matches!(StructuralSet::validate(vec![e1, b]), Err(Error::NotAVector { index: 2 })));
    }

    #[test]
    fn planar_families() {
        let rot = TransitionMatrix::rotation(ratio(3, 5), ratio(4, 5)).unwrap();
        assert_eq!(rot.planar_form(), Some(PlanarForm::Rotation));
        let refl = TransitionMatrix::reflection(ratio(3, 5), ratio(4, 5)).unwrap();
        assert_eq!(refl.planar_form(), Some(PlanarForm::Reflection));
        assert!(StructuralSet::from_matrix(&rot).is_ok());
        assert!(TransitionMatrix::rotation(ratio(1, 2), ratio(1, 2)).is_err());
        assert!(StructuralSet::rotation2(ratio(1, 2)).is_err());
        assert_eq!(StructuralSet::rotation2(ratio(5, 13)).unwrap().vector(1).coefficient(Blade::vector(2)), ratio(-12, 13));
    }

    #[test]
    fn identity_matrix_gives_standard_set() {
        let id = TransitionMatrix::new(Matrix::identity(3)).unwrap();
        assert_eq!(StructuralSet::from_matrix(&id).unwrap(), StructuralSet::standard(3).unwrap());
    }

    #[test]
    fn transitions() {
        let s = StructuralSet::standard(3).unwrap();
        assert!(transition(&s, &s).unwrap().matrix().is_identity());

        let rot = StructuralSet::rotation2(ratio(3, 5)).unwrap();
        let t = transition(&StructuralSet::standard(2).unwrap(), &rot).unwrap();
        assert_eq!(t.determinant(), int(1));
        assert_eq!(t.planar_form(), Some(PlanarForm::Rotation));

        let rev = StructuralSet::reversed(3).unwrap();
        let t = transition(&s, &rev).unwrap();
        assert_eq!(t.determinant(), int(-1));
        assert_eq!(*t.matrix().get(0, 2), int(1));
        assert_eq!(*t.matrix().get(1, 1), int(1));
    }

    #[test]
    fn frame_coordinates_in_rotated_frame() {
        let psi = StructuralSet::rotation2(ratio(3, 5)).unwrap();
        let a = &(&psi.vector(1).scale(&int(2)) + &Multivector::scalar(2, int(7)))
            + &(psi.vector(1) * psi.vector(2)).scale(&int(-3));
        assert_eq!(psi.frame_coordinates(&a).unwrap(), vec![int(7), int(2), int(0), int(-3)]);
    }

    #[test]
    fn json_forms() {
        let s = StructuralSet::from_json_vectors(r#"["e[3]", "e[2]", "e[1]"]"#).unwrap();
        assert_eq!(s, StructuralSet::reversed(3).unwrap());
        let r = StructuralSet::from_json_matrix(r#"[["3/5","-4/5"],["4/5","3/5"]]"#).unwrap();
        assert_eq!(r, StructuralSet::rotation2(ratio(3, 5)).unwrap());
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"["1*e[3]","1*e[2]","1*e[1]"]"#);
        assert!(StructuralSet::from_json_matrix(r#"[["1","1"],["0","1"]]"#).is_err());
    }
}
