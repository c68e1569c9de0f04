//! Exact linear algebra on homogeneous coefficient spaces.
//!
//! Every operator here maps degree-`d` fields to degree `d - 1` or `d - 2`
//! fields, so class membership splits by degree and each class becomes the
//! kernel of a finite rational matrix.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::classify::{classify, Class, RegionLabel};
use crate::error::{Error, Result};
use crate::linalg::{primitive, Matrix, OperatorMatrix};
use crate::multivector::{check_dim, Blade, Multivector};
use crate::polyfield::{MultiIndex, PolyField};
use crate::psi::{PsiKind, PsiPair};
use crate::rational::Rational;
use crate::structural::StructuralSet;

/// Degree-`d` homogeneous `R_{0,m}`-valued polynomials, with basis
/// `x^alpha e_A` ordered by monomial, then blade.
#[derive(Clone, Debug)]
pub struct CoefficientSpace {
    m: usize,
    d: usize,
    basis: Vec<(MultiIndex, Blade)>,
    index: HashMap<(MultiIndex, Blade), usize>,
}

impl CoefficientSpace {
    pub fn homogeneous(m: usize, d: usize) -> Result<Self> {
        check_dim(m)?;
        let blades = Blade::all(m);
        let basis: Vec<(MultiIndex, Blade)> = MultiIndex::homogeneous(m, d)
            .into_iter()
            .flat_map(|a| blades.iter().map(move |&b| (a.clone(), b)))
            .collect();
        let index = basis.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        Ok(CoefficientSpace { m, d, basis, index })
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn size(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[(MultiIndex, Blade)] {
        &self.basis
    }

    pub fn basis_field(&self, i: usize) -> PolyField {
        let (a, b) = &self.basis[i];
        PolyField::monomial(a.clone(), Multivector::from_blade(self.m, *b, Rational::one()))
    }

    pub fn field(&self, coeffs: &[Rational]) -> PolyField {
        let mut f = PolyField::zero(self.m);
        for ((a, b), c) in self.basis.iter().zip(coeffs) {
            f.add_term(a.clone(), &Multivector::from_blade(self.m, *b, c.clone()));
        }
        f
    }

    pub fn vector(&self, f: &PolyField) -> Result<Vec<Rational>> {
        if f.dim() != self.m {
            return Err(Error::DimensionMismatch { left: self.m, right: f.dim() });
        }
        let mut v = vec![Rational::zero(); self.size()];
        for (a, value) in f.terms() {
            if a.degree() != self.d {
                return Err(Error::DegreeMismatch { expected: self.d, found: a.degree() });
            }
            for (b, c) in value.terms() {
                v[self.index[&(a.clone(), b)]] = c.clone();
            }
        }
        Ok(v)
    }
}

/// Linear differential operators the solver linearizes.
#[derive(Clone, Debug)]
pub enum DiffOperator {
    Laplacian,
    /// `phi_d psi_d [f]`.
    LeftLeft { phi: StructuralSet, psi: StructuralSet },
    /// `phi_d [f] psi_d`.
    Sandwich { phi: StructuralSet, psi: StructuralSet },
    DiracLeft(StructuralSet),
    DiracRight(StructuralSet),
}

impl DiffOperator {
    pub fn for_class(class: Class, phi: &StructuralSet, psi: &StructuralSet) -> Self {
        match class {
            Class::Harmonic => DiffOperator::Laplacian,
            Class::PhiPsiHarmonic => DiffOperator::LeftLeft { phi: phi.clone(), psi: psi.clone() },
            Class::Inframonogenic => DiffOperator::Sandwich { phi: phi.clone(), psi: psi.clone() },
        }
    }

    pub fn order(&self) -> usize {
        match self {
            DiffOperator::DiracLeft(_) | DiffOperator::DiracRight(_) => 1,
            _ => 2,
        }
    }

    pub fn apply(&self, f: &PolyField) -> Result<PolyField> {
        match self {
            DiffOperator::Laplacian => Ok(f.laplacian()),
            DiffOperator::LeftLeft { phi, psi } => f.dirac_left_left(phi, psi),
            DiffOperator::Sandwich { phi, psi } => f.sandwich(phi, psi),
            DiffOperator::DiracLeft(psi) => f.dirac_left(psi),
            DiffOperator::DiracRight(psi) => f.dirac_right(psi),
        }
    }
}

/// Matrix of an operator between homogeneous spaces. When the source degree
/// is below the operator order the map is zero and `degenerate` is set;
/// the matrix then has no rows.
#[derive(Clone, Debug)]
pub struct OperatorMatrixReport {
    pub matrix: OperatorMatrix,
    pub target: Option<CoefficientSpace>,
    pub degenerate: bool,
}

pub fn operator_matrix(op: &DiffOperator, space: &CoefficientSpace) -> Result<OperatorMatrixReport> {
    let Some(target_degree) = space.degree().checked_sub(op.order()) else {
        return Ok(OperatorMatrixReport { matrix: Matrix::zeros(0, space.size()), target: None, degenerate: true });
    };
    let target = CoefficientSpace::homogeneous(space.dim(), target_degree)?;
    let columns = (0..space.size())
        .map(|i| target.vector(&op.apply(&space.basis_field(i))?))
        .collect::<Result<Vec<_>>>()?;
    let matrix = Matrix::from_columns(target.size(), &columns)?;
    Ok(OperatorMatrixReport { matrix, target: Some(target), degenerate: false })
}

/// Kernel basis, with each vector checked against the matrix.
pub fn nullspace(matrix: &OperatorMatrix) -> Result<Vec<Vec<Rational>>> {
    let basis = matrix.nullspace();
    for v in &basis {
        if !matrix.mul_vec(v)?.iter().all(Zero::is_zero) {
            return Err(Error::Invalid("nullspace vector does not map to zero".into()));
        }
    }
    Ok(basis)
}

#[derive(Clone, Debug)]
pub struct NullspaceBasis {
    pub space: CoefficientSpace,
    pub vectors: Vec<Vec<Rational>>,
}

impl NullspaceBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn fields(&self) -> Vec<PolyField> {
        self.vectors.iter().map(|v| self.space.field(v)).collect()
    }
}

/// Stacked matrix whose kernel is the intersection of the given classes.
fn class_matrix(classes: &[Class], phi: &StructuralSet, psi: &StructuralSet, space: &CoefficientSpace) -> Result<Matrix> {
    let parts = classes
        .iter()
        .map(|c| operator_matrix(&DiffOperator::for_class(*c, phi, psi), space).map(|r| r.matrix))
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<&Matrix> = parts.iter().collect();
    if refs.is_empty() {
        return Ok(Matrix::zeros(0, space.size()));
    }
    Matrix::vstack(&refs)
}

/// Basis of the intersection of `classes` in degree `d`.
pub fn class_basis(classes: &[Class], phi: &StructuralSet, psi: &StructuralSet, d: usize) -> Result<NullspaceBasis> {
    check_pair(phi, psi)?;
    let space = CoefficientSpace::homogeneous(phi.dim(), d)?;
    let vectors = nullspace(&class_matrix(classes, phi, psi, &space)?)?;
    Ok(NullspaceBasis { space, vectors })
}

fn check_pair(phi: &StructuralSet, psi: &StructuralSet) -> Result<()> {
    if phi.dim() != psi.dim() {
        return Err(Error::DimensionMismatch { left: phi.dim(), right: psi.dim() });
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ClassDimensions {
    #[serde(rename = "H")]
    pub h: usize,
    #[serde(rename = "Hpp")]
    pub hpp: usize,
    #[serde(rename = "I")]
    pub i: usize,
    #[serde(rename = "H∩Hpp")]
    pub h_hpp: usize,
    #[serde(rename = "H∩I")]
    pub h_i: usize,
    #[serde(rename = "Hpp∩I")]
    pub hpp_i: usize,
    pub triple: usize,
    #[serde(skip)]
    pub total: usize,
}

/// Dimensions of the classes and their intersections on degree-`d` fields.
pub fn class_dimensions(phi: &StructuralSet, psi: &StructuralSet, m: usize, d: usize) -> Result<ClassDimensions> {
    check_pair(phi, psi)?;
    if phi.dim() != m {
        return Err(Error::DimensionMismatch { left: m, right: phi.dim() });
    }
    let space = CoefficientSpace::homogeneous(m, d)?;
    let mats: Vec<Matrix> = Class::ALL
        .iter()
        .map(|c| class_matrix(&[*c], phi, psi, &space))
        .collect::<Result<_>>()?;
    let n = space.size();
    let dim_of = |idx: &[usize]| -> Result<usize> {
        let refs: Vec<&Matrix> = idx.iter().map(|&i| &mats[i]).collect();
        Ok(n - Matrix::vstack(&refs)?.rank())
    };
    Ok(ClassDimensions {
        h: dim_of(&[0])?,
        hpp: dim_of(&[1])?,
        i: dim_of(&[2])?,
        h_hpp: dim_of(&[0, 1])?,
        h_i: dim_of(&[0, 2])?,
        hpp_i: dim_of(&[1, 2])?,
        triple: dim_of(&[0, 1, 2])?,
        total: n,
    })
}

/// Searches degree-`d` fields for one lying in exactly the `target` region.
///
/// Candidates are the kernel basis of the required classes, then pairwise
/// combinations `p u + q v` with `1 <= |p|, |q| <= 3`. `None` means the
/// bounded search found nothing, not that no witness exists.
pub fn find_region_witness(
    phi: &StructuralSet,
    psi: &StructuralSet,
    m: usize,
    d: usize,
    target: RegionLabel,
) -> Result<Option<PolyField>> {
    check_pair(phi, psi)?;
    if phi.dim() != m {
        return Err(Error::DimensionMismatch { left: m, right: phi.dim() });
    }
    let space = CoefficientSpace::homogeneous(m, d)?;
    let required = target.required();
    let candidates = if required.is_empty() {
        (0..space.size())
            .map(|i| {
                let mut v = vec![Rational::zero(); space.size()];
                v[i] = Rational::one();
                v
            })
            .collect()
    } else {
        nullspace(&class_matrix(&required, phi, psi, &space)?)?
    };
    let excluded = target
        .excluded()
        .iter()
        .map(|c| class_matrix(&[*c], phi, psi, &space))
        .collect::<Result<Vec<_>>>()?;
    let escapes = |v: &[Rational]| -> Result<bool> {
        for mat in &excluded {
            if mat.mul_vec(v)?.iter().all(Zero::is_zero) {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let accept = |v: Vec<Rational>| -> Result<Option<PolyField>> {
        let f = space.field(&primitive(&v));
        Ok((classify(phi, psi, &f)?.region() == target).then_some(f))
    };

    for v in &candidates {
        if escapes(v)? {
            if let Some(f) = accept(v.clone())? {
                return Ok(Some(f));
            }
        }
    }
    let coeffs: Vec<Rational> = [1, -1, 2, -2, 3, -3].iter().map(|&c| Rational::from_integer(c.into())).collect();
    for a in 0..candidates.len() {
        for b in a + 1..candidates.len() {
            for p in &coeffs {
                for q in &coeffs {
                    let v: Vec<Rational> =
                        candidates[a].iter().zip(&candidates[b]).map(|(x, y)| x * p + y * q).collect();
                    if v.iter().all(Zero::is_zero) || !escapes(&v)? {
                        continue;
                    }
                    if let Some(f) = accept(v)? {
                        return Ok(Some(f));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// A field that is neither harmonic nor `(phi,phi)`-inframonogenic while
/// `Psi_+^{phi,phi}` of it is both.
///
/// Takes `f = x1 x2 + x1^2 e_1 + x1 x2 e_{1..m}`: the scalar and pseudoscalar
/// parts are harmonic and killed by the sandwich operator, the grade-1 term
/// is neither, and `Psi_+^{phi,phi}` only keeps grades `0` and `m`.
pub fn converse_counterexample(phi: &StructuralSet, m: usize) -> Result<PolyField> {
    if m < 2 {
        return Err(Error::Invalid(format!("converse construction needs m >= 2, got {m}")));
    }
    if phi.dim() != m {
        return Err(Error::DimensionMismatch { left: m, right: phi.dim() });
    }
    let x1x2 = {
        let mut e = vec![0; m];
        e[0] = 1;
        e[1] = 1;
        MultiIndex::new(e)
    };
    let x1sq = {
        let mut e = vec![0; m];
        e[0] = 2;
        MultiIndex::new(e)
    };
    let one = Rational::one();
    let f = PolyField::from_terms(
        m,
        [
            (x1x2.clone(), Multivector::scalar(m, one.clone())),
            (x1sq, Multivector::from_blade(m, Blade::vector(1), one.clone())),
            (x1x2, Multivector::from_blade(m, Blade::top(m), one)),
        ],
    );
    let before = classify(phi, phi, &f)?;
    let image = PsiPair::new(phi, phi)?.apply_field(&PsiKind::Plus, &f)?;
    let after = classify(phi, phi, &image)?;
    if before.harmonic || before.inframonogenic || !after.harmonic || !after.inframonogenic {
        return Err(Error::Invalid("converse construction failed verification".into()));
    }
    Ok(f)
}

/// A `(phi,psi)`-inframonogenic field of degree `d` with a grade component
/// outside the class, if the kernel basis contains one.
pub fn grade_split_counterexample(phi: &StructuralSet, psi: &StructuralSet, d: usize) -> Result<Option<PolyField>> {
    let basis = class_basis(&[Class::Inframonogenic], phi, psi, d)?;
    for f in basis.fields() {
        for k in 0..=phi.dim() {
            if !Class::Inframonogenic.contains(phi, psi, &f.grade_project(k)?)? {
                return Ok(Some(f));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, Serialize)]
pub struct SetsReport {
    pub phi: StructuralSet,
    pub psi: StructuralSet,
}

/// JSON report of a solver run.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SolveReport {
    pub m: usize,
    pub d: usize,
    pub sets: SetsReport,
    pub dims: ClassDimensions,
    pub witnesses: Vec<String>,
    pub witness_regions: Vec<String>,
    pub not_found: Vec<String>,
}

pub fn solve(phi: &StructuralSet, psi: &StructuralSet, d: usize, regions: &[RegionLabel]) -> Result<SolveReport> {
    let m = phi.dim();
    let dims = class_dimensions(phi, psi, m, d)?;
    let mut witnesses = Vec::new();
    let mut witness_regions = Vec::new();
    let mut not_found = Vec::new();
    for &r in regions {
        match find_region_witness(phi, psi, m, d, r)? {
            Some(f) => {
                witnesses.push(f.to_string());
                witness_regions.push(r.to_string());
            }
            None => not_found.push(r.to_string()),
        }
    }
    Ok(SolveReport {
        m,
        d,
        sets: SetsReport { phi: phi.clone(), psi: psi.clone() },
        dims,
        witnesses,
        witness_regions,
        not_found,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn paper() -> (StructuralSet, StructuralSet) {
        (StructuralSet::standard(3).unwrap(), StructuralSet::reversed(3).unwrap())
    }

    #[test]
    fn space_sizes() {
        assert_eq!(CoefficientSpace::homogeneous(3, 2).unwrap().size(), 6 * 8);
        assert_eq!(CoefficientSpace::homogeneous(2, 3).unwrap().size(), 4 * 4);
        assert_eq!(CoefficientSpace::homogeneous(4, 0).unwrap().size(), 16);
    }

    #[test]
    fn vector_field_roundtrip() {
        let space = CoefficientSpace::homogeneous(3, 2).unwrap();
        let f = PolyField::parse("2*x2*x3*e[1] - (x1^2 + x2^2)*e[2]", 3).unwrap();
        assert_eq!(space.field(&space.vector(&f).unwrap()), f);
        assert!(space.vector(&PolyField::parse("x1", 3).unwrap()).is_err());
    }

    #[test]
    fn laplacian_on_linear_fields_is_degenerate() {
        let space = CoefficientSpace::homogeneous(3, 1).unwrap();
        let r = operator_matrix(&DiffOperator::Laplacian, &space).unwrap();
        assert!(r.degenerate);
        assert!(r.matrix.is_zero());
        assert_eq!(nullspace(&r.matrix).unwrap().len(), space.size());
    }

    #[test]
    fn sandwich_matrix_annihilates_example() {
        let (phi, psi) = paper();
        let space = CoefficientSpace::homogeneous(3, 2).unwrap();
        let r = operator_matrix(&DiffOperator::Sandwich { phi, psi }, &space).unwrap();
        let v = space.vector(&PolyField::parse("2*x2*x3*e[1] - (x1^2 + x2^2)*e[2]", 3).unwrap()).unwrap();
        assert!(r.matrix.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn dirac_matrix_annihilates_hyperholomorphic_part() {
        let (_, psi) = paper();
        let f = PolyField::parse("(x2^2 - x1^2)*e[2] - 2*x1*x2*e[3] - x1*e[1,2] + x3*e[2,3]", 3).unwrap();
        let space = CoefficientSpace::homogeneous(3, 2).unwrap();
        let r = operator_matrix(&DiffOperator::DiracLeft(psi.clone()), &space).unwrap();
        let part = f.homogeneous_part(2);
        assert!(part.dirac_left(&psi).unwrap().is_zero());
        assert!(r.matrix.mul_vec(&space.vector(&part).unwrap()).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn harmonic_dimension_counts() {
        let s = StructuralSet::standard(3).unwrap();
        assert_eq!(class_basis(&[Class::Harmonic], &s, &s, 2).unwrap().dim(), 40);
        let s2 = StructuralSet::standard(2).unwrap();
        let dims = class_dimensions(&s2, &s2, 2, 2).unwrap();
        assert_eq!(dims.h, 8);
    }

    #[test]
    fn degree_below_order_gives_full_dimensions() {
        let (phi, psi) = paper();
        for d in 0..2 {
            let dims = class_dimensions(&phi, &psi, 3, d).unwrap();
            assert_eq!(dims.triple, dims.total);
            assert_eq!(dims.h, dims.total);
        }
    }

    #[test]
    fn witnesses_for_stated_regions() {
        let (phi, psi) = paper();
        let triple = find_region_witness(&phi, &psi, 3, 2, RegionLabel::ALL_CLASSES).unwrap().unwrap();
        assert_eq!(classify(&phi, &psi, &triple).unwrap().region(), RegionLabel::ALL_CLASSES);
        let target = RegionLabel::of(&[Class::PhiPsiHarmonic, Class::Inframonogenic]);
        let w = find_region_witness(&phi, &psi, 3, 2, target).unwrap().unwrap();
        assert_eq!(classify(&phi, &psi, &w).unwrap().region(), target);
        let s2 = StructuralSet::standard(2).unwrap();
        assert!(find_region_witness(&s2, &s2, 2, 1, RegionLabel::ALL_CLASSES).unwrap().is_some());
        // Nothing escapes a class whose operator vanishes identically.
        assert!(find_region_witness(&s2, &s2, 2, 1, RegionLabel::NONE).unwrap().is_none());
    }

    #[test]
    fn converse_construction() {
        for m in [2, 3] {
            let phi = StructuralSet::standard(m).unwrap();
            assert!(converse_counterexample(&phi, m).is_ok());
        }
        assert!(converse_counterexample(&StructuralSet::standard(1).unwrap(), 1).is_err());
    }

    #[test]
    fn grade_split_property() {
        let (phi, psi) = paper();
        assert!(grade_split_counterexample(&phi, &phi, 2).unwrap().is_none());
        let f = grade_split_counterexample(&phi, &psi, 2).unwrap().expect("counterexample for phi != psi");
        assert!(Class::Inframonogenic.contains(&phi, &psi, &f).unwrap());
    }

    #[test]
    fn solve_report_json_shape() {
        let (phi, psi) = paper();
        let r = solve(&phi, &psi, 2, &[RegionLabel::ALL_CLASSES]).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert!(v["dims"]["triple"].as_u64().unwrap() >= 1);
        assert!(v["dims"]["H∩Hpp"].is_u64());
        assert_eq!(v["witnesses"].as_array().unwrap().len(), 1);
        assert_eq!(v["sets"]["psi"][0], "1*e[3]");
        let _ = int(0);
    }
}
