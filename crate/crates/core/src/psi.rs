//! Generalized `Psi` operators built from a pair of structural sets.
//!
//! `Psi_k(a) = sum_{|A|=k} phi_A a reverse(psi_A)` with `Psi_0 = I`;
//! `Psi_+` and `Psi_-` sum the even and odd levels. On fields every
//! operator acts pointwise on the coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::multivector::{Blade, Multivector};
use crate::polyfield::PolyField;
use crate::rational::{binomial, Rational};
use crate::structural::StructuralSet;
use crate::verdict::Verdict;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum PsiKind {
    /// `Psi_k`, `0 <= k <= m`.
    Level(usize),
    Plus,
    Minus,
    /// `a -> sum_{j in J} phi^j a psi^j` for a nonempty 1-based index set.
    Subset(Vec<usize>),
}

/// A `Psi` operator together with the structural sets it is built from.
#[derive(Clone, Debug)]
pub struct PsiOperator {
    pub phi: StructuralSet,
    pub psi: StructuralSet,
    pub kind: PsiKind,
}

/// A pair of structural sets acting through `T_j(a) = phi^j a psi^j`.
///
/// The `T_j` commute, so `Psi_k = e_k(T_1, ..., T_m)` (elementary symmetric
/// polynomial) and every level comes out of one pass over `j`.
#[derive(Clone, Debug)]
pub struct PsiPair {
    phi: StructuralSet,
    psi: StructuralSet,
    corrupt: bool,
}

impl PsiPair {
    pub fn new(phi: &StructuralSet, psi: &StructuralSet) -> Result<Self> {
        if psi.dim() != phi.dim() {
            return Err(Error::DimensionMismatch { left: phi.dim(), right: psi.dim() });
        }
        Ok(PsiPair { phi: phi.clone(), psi: psi.clone(), corrupt: false })
    }

    pub fn dim(&self) -> usize {
        self.phi.dim()
    }

    pub fn phi(&self) -> &StructuralSet {
        &self.phi
    }

    pub fn psi(&self) -> &StructuralSet {
        &self.psi
    }

    /// Flips the sign of the `{1}` term, so `Psi_1` and `Psi_-` are wrong
    /// while the other levels are not. Negative control for the identity suite.
    #[doc(hidden)]
    pub fn corrupted(mut self) -> Self {
        self.corrupt = true;
        self
    }

    fn check(&self, a: &Multivector) -> Result<()> {
        if a.dim() != self.dim() {
            return Err(Error::DimensionMismatch { left: self.dim(), right: a.dim() });
        }
        Ok(())
    }

    fn t(&self, j: usize, a: &Multivector) -> Multivector {
        &(self.phi.vector(j) * a) * self.psi.vector(j)
    }

    /// `[Psi_0(a), ..., Psi_top(a)]`.
    fn levels(&self, a: &Multivector, top: usize) -> Vec<Multivector> {
        let m = self.dim();
        let mut out = vec![Multivector::zero(m); top + 1];
        out[0] = a.clone();
        for j in 1..=m {
            for k in (1..=top.min(j)).rev() {
                let image = self.t(j, &out[k - 1]);
                out[k] += &image;
            }
        }
        if self.corrupt && top >= 1 {
            let twice = self.t(1, a).scale(&Rational::from_integer(BigInt::from(2)));
            out[1] = &out[1] - &twice;
        }
        out
    }

    pub fn level(&self, k: usize, a: &Multivector) -> Result<Multivector> {
        self.check(a)?;
        if k > self.dim() {
            return Err(Error::LevelOutOfRange { level: k, context: "Psi_k needs 0 <= k <= m" });
        }
        Ok(self.levels(a, k).swap_remove(k))
    }

    fn parity_sum(&self, a: &Multivector, odd: bool) -> Multivector {
        let m = self.dim();
        self.levels(a, m)
            .into_iter()
            .enumerate()
            .filter(|(k, _)| (k % 2 == 1) == odd)
            .fold(Multivector::zero(m), |acc, (_, v)| &acc + &v)
    }

    pub fn plus(&self, a: &Multivector) -> Result<Multivector> {
        self.check(a)?;
        Ok(self.parity_sum(a, false))
    }

    pub fn minus(&self, a: &Multivector) -> Result<Multivector> {
        self.check(a)?;
        Ok(self.parity_sum(a, true))
    }

    pub fn subset(&self, indices: &[usize], a: &Multivector) -> Result<Multivector> {
        self.check(a)?;
        check_subset(indices, self.dim())?;
        let mut out = Multivector::zero(self.dim());
        for &j in indices {
            out += &self.t(j, a);
        }
        Ok(out)
    }

    pub fn apply(&self, kind: &PsiKind, a: &Multivector) -> Result<Multivector> {
        match kind {
            PsiKind::Level(k) => self.level(*k, a),
            PsiKind::Plus => self.plus(a),
            PsiKind::Minus => self.minus(a),
            PsiKind::Subset(j) => self.subset(j, a),
        }
    }

    /// Pointwise action on a field.
    pub fn apply_field(&self, kind: &PsiKind, f: &PolyField) -> Result<PolyField> {
        if f.dim() != self.dim() {
            return Err(Error::DimensionMismatch { left: self.dim(), right: f.dim() });
        }
        if let PsiKind::Subset(j) = kind {
            check_subset(j, self.dim())?;
        }
        if let PsiKind::Level(k) = kind {
            if *k > self.dim() {
                return Err(Error::LevelOutOfRange { level: *k, context: "Psi_k needs 0 <= k <= m" });
            }
        }
        Ok(f.map_values(|v| self.apply(kind, v).expect("validated above")))
    }

    /// Matrix in the blade basis ordered like [`Blade::all`].
    pub fn matrix(&self, kind: &PsiKind) -> Result<Matrix> {
        let m = self.dim();
        let blades = Blade::all(m);
        let columns = blades
            .iter()
            .map(|&b| {
                let image = self.apply(kind, &Multivector::from_blade(m, b, Rational::one()))?;
                Ok(blades.iter().map(|&r| image.coefficient(r)).collect())
            })
            .collect::<Result<Vec<Vec<Rational>>>>()?;
        Matrix::from_columns(blades.len(), &columns)
    }
}

fn check_subset(indices: &[usize], m: usize) -> Result<()> {
    let mut seen = vec![false; m + 1];
    if indices.is_empty() {
        return Err(Error::InvalidIndexSet(indices.to_vec()));
    }
    for &j in indices {
        if j == 0 || j > m || seen[j] {
            return Err(Error::InvalidIndexSet(indices.to_vec()));
        }
        seen[j] = true;
    }
    Ok(())
}

pub fn apply_psi_k(phi: &StructuralSet, psi: &StructuralSet, k: usize, a: &Multivector) -> Result<Multivector> {
    PsiPair::new(phi, psi)?.level(k, a)
}

pub fn apply_psi_subset1(phi: &StructuralSet, psi: &StructuralSet, indices: &[usize], a: &Multivector) -> Result<Multivector> {
    PsiPair::new(phi, psi)?.subset(indices, a)
}

pub fn apply_psi_plus(phi: &StructuralSet, psi: &StructuralSet, a: &Multivector) -> Result<Multivector> {
    PsiPair::new(phi, psi)?.plus(a)
}

pub fn apply_psi_minus(phi: &StructuralSet, psi: &StructuralSet, a: &Multivector) -> Result<Multivector> {
    PsiPair::new(phi, psi)?.minus(a)
}

pub fn psi_matrix(op: &PsiOperator) -> Result<Matrix> {
    PsiPair::new(&op.phi, &op.psi)?.matrix(&op.kind)
}

/// Rank of the operator's matrix and whether it is full.
pub fn psi_rank(op: &PsiOperator) -> Result<(usize, bool)> {
    let mat = psi_matrix(op)?;
    let r = mat.rank();
    Ok((r, r == mat.cols()))
}

fn sign(odd: bool) -> BigInt {
    if odd {
        -BigInt::one()
    } else {
        BigInt::one()
    }
}

/// Eigenvalue of `Psi_j^{phi,phi}` on grade-`k` multivectors:
/// `(-1)^{j(k+1)} sum_i C(m-k, j-i) C(k, i) (-1)^i`, `i` from
/// `max(0, j+k-m)` to `min(j, k)`.
pub fn psi_k_closed_form(m: usize, j: usize, k: usize) -> Rational {
    let (mi, ji, ki) = (m as i64, j as i64, k as i64);
    let lo = (ji + ki - mi).max(0);
    let hi = ji.min(ki);
    let mut sum = BigInt::zero();
    for i in lo..=hi {
        sum += binomial(mi - ki, ji - i) * binomial(ki, i) * sign(i % 2 == 1);
    }
    Rational::from_integer(sum * sign((ji * (ki + 1)) % 2 == 1))
}

/// `2F1(a, b; c; z)` for a series that terminates because `a` or `b` is a
/// non-positive integer.
pub fn hyp2f1_terminating(a: i64, b: i64, c: i64, z: &Rational) -> Result<Rational> {
    let stop = [a, b].into_iter().filter(|&x| x <= 0).map(|x| -x).min().ok_or(Error::NonTerminatingSeries)?;
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for n in 0..stop {
        let denom = (c + n) * (n + 1);
        if denom == 0 {
            return Err(Error::NonTerminatingSeries);
        }
        term = term * Rational::from_integer(BigInt::from((a + n) * (b + n))) * z / Rational::from_integer(BigInt::from(denom));
        sum += &term;
    }
    Ok(sum)
}

/// The same eigenvalue as [`psi_k_closed_form`], through the
/// hypergeometric rewrite with argument `-1`.
pub fn psi_k_hypergeometric(m: usize, j: usize, k: usize) -> Result<Rational> {
    let (mi, ji, ki) = (m as i64, j as i64, k as i64);
    if j > m || k > m {
        return Err(Error::LevelOutOfRange { level: j.max(k), context: "need 0 <= j, k <= m" });
    }
    let z = -Rational::one();
    if ji + ki - mi <= 0 {
        let s = sign((ji * (ki + 1)) % 2 == 1) * binomial(mi - ki, ji);
        Ok(Rational::from_integer(s) * hyp2f1_terminating(-ji, -ki, 1 - ji - ki + mi, &z)?)
    } else {
        let s = sign((ki * (ji + 1) + mi) % 2 == 1) * binomial(ki, mi - ji);
        Ok(Rational::from_integer(s) * hyp2f1_terminating(ji - mi, ki - mi, 1 + ji + ki - mi, &z)?)
    }
}

/// `(m-k+1) Psi_{k-1}(a) + (k+1) Psi_{k+1}(a) = Psi_1(Psi_k(a))`, `1 <= k <= m-1`.
pub fn check_level_recursion(pair: &PsiPair, k: usize, a: &Multivector) -> Result<Verdict> {
    let m = pair.dim();
    if k == 0 || k + 1 > m {
        return Err(Error::LevelOutOfRange { level: k, context: "recursion needs 1 <= k <= m-1" });
    }
    let c1 = Rational::from_integer(BigInt::from(m - k + 1));
    let c2 = Rational::from_integer(BigInt::from(k + 1));
    let lhs = &pair.level(k - 1, a)?.scale(&c1) + &pair.level(k + 1, a)?.scale(&c2);
    let rhs = pair.level(1, &pair.level(k, a)?)?;
    Ok(Verdict::compare(format!("level recursion k={k}"), &lhs, &rhs))
}

/// For `phi = psi`: odd `m` gives `Psi_j(a) = -Psi_{m-j}(a)`; even `m` gives
/// `Psi_j([a]_k) = (-1)^k Psi_{m-j}([a]_k)` for every grade `k`, checked
/// grade by grade.
pub fn check_complement_parity(phi: &StructuralSet, a: &Multivector, j: usize) -> Result<Verdict> {
    check_same_set_level(phi, j)?;
    let pair = PsiPair::new(phi, phi)?;
    let m = phi.dim();
    if m % 2 == 1 {
        let lhs = pair.level(j, a)?;
        let rhs = -&pair.level(m - j, a)?;
        return Ok(Verdict::compare(format!("complement parity j={j}"), &lhs, &rhs));
    }
    for k in a.grades() {
        let part = a.grade_project(k)?;
        let lhs = pair.level(j, &part)?;
        let image = pair.level(m - j, &part)?;
        let rhs = if k % 2 == 0 { image } else { -&image };
        if lhs != rhs {
            return Ok(Verdict::compare(format!("complement parity j={j} grade {k}"), &lhs, &rhs));
        }
    }
    let whole = pair.level(j, a)?;
    Ok(Verdict::compare(format!("complement parity j={j}"), &whole, &whole))
}

fn check_same_set_level(phi: &StructuralSet, j: usize) -> Result<()> {
    if j > phi.dim() {
        return Err(Error::LevelOutOfRange { level: j, context: "need 0 <= j <= m" });
    }
    Ok(())
}

/// Closed forms of `Psi_+^{phi,phi}` and `Psi_-^{phi,phi}` through
/// `2^{m-1}([a]_0 + [a]_m)` and `2^{m-1}([a]_m - [a]_0)` (odd `m`: minus is
/// the negated plus).
pub fn check_psi_pm_closed_form(phi: &StructuralSet, a: &Multivector) -> Result<Vec<Verdict>> {
    let pair = PsiPair::new(phi, phi)?;
    let m = phi.dim();
    let scale = Rational::from_integer(BigInt::one() << (m - 1));
    let low = a.grade_project(0)?;
    let top = a.grade_project(m)?;
    let plus_expected = (&low + &top).scale(&scale);
    let minus_expected = if m % 2 == 1 { -&plus_expected } else { (&top - &low).scale(&scale) };
    Ok(vec![
        Verdict::compare("Psi_+ closed form", &pair.plus(a)?, &plus_expected),
        Verdict::compare("Psi_- closed form", &pair.minus(a)?, &minus_expected),
    ])
}

/// `phi^j Psi_+(a) phi^j = Psi_-(a)` for `phi = psi`.
pub fn check_psi_pm_conjugation(phi: &StructuralSet, a: &Multivector, j: usize) -> Result<Verdict> {
    if j == 0 || j > phi.dim() {
        return Err(Error::AxisOutOfRange { axis: j, dim: phi.dim() });
    }
    let pair = PsiPair::new(phi, phi)?;
    let v = phi.vector(j);
    let lhs = &(v * &pair.plus(a)?) * v;
    Ok(Verdict::compare(format!("phi^{j} Psi_+ phi^{j} = Psi_-"), &lhs, &pair.minus(a)?))
}

/// Which of the `Psi_1`/Dirac commutation identities to check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CommutationIdentity {
    /// `phi_d[Psi_1 f] = -2 [f]psi_d - Psi_1(phi_d f)` and
    /// `[Psi_1 f]psi_d = -2 phi_d[f] - Psi_1([f]psi_d)`.
    FirstOrder,
    /// `phi_d[Psi_1 f]psi_d = Psi_1(phi_d[f]psi_d)` and
    /// `Laplace(Psi_1 f) = Psi_1(Laplace f)`.
    Sandwich,
    /// `Psi_1(phi_d psi_d f) = -2 psi_d[f]psi_d - phi_d[Psi_1(psi_d f)]`.
    LeftLeft,
}

pub fn check_dirac_commutation(pair: &PsiPair, f: &PolyField, which: CommutationIdentity) -> Result<Vec<Verdict>> {
    let (phi, psi) = (pair.phi(), pair.psi());
    let one = PsiKind::Level(1);
    let two = Rational::from_integer(BigInt::from(2));
    let psi1 = |g: &PolyField| pair.apply_field(&one, g);
    Ok(match which {
        CommutationIdentity::FirstOrder => {
            let lhs_left = psi1(f)?.dirac_left(phi)?;
            let rhs_left = f.dirac_right(psi)?.scale(&two).neg().try_sub(&psi1(&f.dirac_left(phi)?)?)?;
            let lhs_right = psi1(f)?.dirac_right(psi)?;
            let rhs_right = f.dirac_left(phi)?.scale(&two).neg().try_sub(&psi1(&f.dirac_right(psi)?)?)?;
            vec![
                Verdict::compare("phi_d[Psi_1 f] = -2 [f]psi_d - Psi_1(phi_d f)", &lhs_left, &rhs_left),
                Verdict::compare("[Psi_1 f]psi_d = -2 phi_d[f] - Psi_1([f]psi_d)", &lhs_right, &rhs_right),
            ]
        }
        CommutationIdentity::Sandwich => {
            let lhs = psi1(f)?.sandwich(phi, psi)?;
            let rhs = psi1(&f.sandwich(phi, psi)?)?;
            let lap_lhs = psi1(f)?.laplacian();
            let lap_rhs = psi1(&f.laplacian())?;
            vec![
                Verdict::compare("phi_d[Psi_1 f]psi_d = Psi_1(phi_d[f]psi_d)", &lhs, &rhs),
                Verdict::compare("Laplace(Psi_1 f) = Psi_1(Laplace f)", &lap_lhs, &lap_rhs),
            ]
        }
        CommutationIdentity::LeftLeft => {
            let lhs = psi1(&f.dirac_left_left(phi, psi)?)?;
            let g = f.dirac_left(psi)?;
            let rhs = f.sandwich(psi, psi)?.scale(&two).neg().try_sub(&psi1(&g)?.dirac_left(phi)?)?;
            vec![Verdict::compare("Psi_1(phi_d psi_d f) = -2 psi_d[f]psi_d - phi_d[Psi_1(psi_d f)]", &lhs, &rhs)]
        }
    })
}

/// `phi_d[Psi_+ f]psi_d = Psi_-(Laplace f)` and `phi_d[Psi_- f]psi_d = Psi_+(Laplace f)`.
pub fn check_sandwich_psi_pm(pair: &PsiPair, f: &PolyField) -> Result<Vec<Verdict>> {
    let (phi, psi) = (pair.phi(), pair.psi());
    let lap = f.laplacian();
    let plus_lhs = pair.apply_field(&PsiKind::Plus, f)?.sandwich(phi, psi)?;
    let plus_rhs = pair.apply_field(&PsiKind::Minus, &lap)?;
    let minus_lhs = pair.apply_field(&PsiKind::Minus, f)?.sandwich(phi, psi)?;
    let minus_rhs = pair.apply_field(&PsiKind::Plus, &lap)?;
    Ok(vec![
        Verdict::compare("phi_d[Psi_+ f]psi_d = Psi_-(Laplace f)", &plus_lhs, &plus_rhs),
        Verdict::compare("phi_d[Psi_- f]psi_d = Psi_+(Laplace f)", &minus_lhs, &minus_rhs),
    ])
}

/// For odd `m`, where `Psi_1` is invertible:
/// `f` is inframonogenic iff `Psi_1 f` is, and `f` is `(phi,psi)`-harmonic iff
/// `psi_d[f]psi_d = -1/2 phi_d[Psi_1(psi_d f)]`.
pub fn check_odd_dimension_equivalence(pair: &PsiPair, f: &PolyField) -> Result<Vec<Verdict>> {
    let m = pair.dim();
    if m % 2 == 0 {
        return Err(Error::Invalid(format!("equivalence needs odd dimension, got {m}")));
    }
    let (phi, psi) = (pair.phi(), pair.psi());
    let infra = f.sandwich(phi, psi)?.is_zero();
    let infra_image = pair.apply_field(&PsiKind::Level(1), f)?.sandwich(phi, psi)?.is_zero();
    let harmonic_pp = f.dirac_left_left(phi, psi)?.is_zero();
    let half = Rational::new(BigInt::from(-1), BigInt::from(2));
    let rhs_field = pair.apply_field(&PsiKind::Level(1), &f.dirac_left(psi)?)?.dirac_left(phi)?.scale(&half);
    let condition = f.sandwich(psi, psi)? == rhs_field;
    Ok(vec![
        Verdict::compare("f in I  <=>  Psi_1 f in I", &infra, &infra_image),
        Verdict::compare("f in Hpp  <=>  psi_d[f]psi_d = -1/2 phi_d[Psi_1(psi_d f)]", &harmonic_pp, &condition),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn std3() -> StructuralSet {
        StructuralSet::standard(3).unwrap()
    }

    fn e(m: usize, idx: &[usize]) -> Multivector {
        Multivector::from_blade(m, Blade::from_indices(idx, m).unwrap(), int(1))
    }

    #[test]
    fn level_zero_is_identity() {
        let a = &e(3, &[1, 2]) + &Multivector::scalar(3, int(5));
        assert_eq!(apply_psi_k(&std3(), &StructuralSet::reversed(3).unwrap(), 0, &a).unwrap(), a);
    }

    #[test]
    fn level_one_on_basis() {
        assert_eq!(apply_psi_k(&std3(), &std3(), 1, &e(3, &[1])).unwrap(), e(3, &[1]));
        assert_eq!(apply_psi_k(&std3(), &std3(), 1, &Multivector::one(3)).unwrap(), Multivector::scalar(3, int(-3)));
        assert!(apply_psi_k(&std3(), &std3(), 4, &Multivector::one(3)).is_err());
    }

    #[test]
    fn subset_examples() {
        let s = StructuralSet::standard(2).unwrap();
        assert_eq!(apply_psi_subset1(&s, &s, &[1], &e(2, &[2])).unwrap(), e(2, &[2]));
        let a = &e(3, &[1, 3]) + &e(3, &[2]);
        assert_eq!(
            apply_psi_subset1(&std3(), &std3(), &[1, 2, 3], &a).unwrap(),
            apply_psi_k(&std3(), &std3(), 1, &a).unwrap()
        );
        assert!(apply_psi_subset1(&s, &s, &[], &a.clone()).is_err());
        assert!(apply_psi_subset1(&s, &s, &[3], &e(2, &[1])).is_err());
        assert!(apply_psi_subset1(&s, &s, &[1, 1], &e(2, &[1])).is_err());
    }

    #[test]
    fn plus_of_one_in_three_dimensions() {
        assert_eq!(apply_psi_plus(&std3(), &std3(), &Multivector::one(3)).unwrap(), Multivector::scalar(3, int(4)));
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(psi_k_closed_form(3, 1, 1), int(1));
        assert_eq!(psi_k_closed_form(3, 2, 0), int(3));
        assert_eq!(psi_k_closed_form(2, 1, 1), int(0));
        for m in 1..6 {
            for k in 0..=m {
                assert_eq!(psi_k_closed_form(m, 0, k), int(1));
            }
        }
    }

    #[test]
    fn hypergeometric_values() {
        assert_eq!(hyp2f1_terminating(-1, -1, 2, &int(-1)).unwrap(), Rational::new(1.into(), 2.into()));
        assert_eq!(psi_k_hypergeometric(3, 1, 1).unwrap(), int(1));
        assert_eq!(psi_k_hypergeometric(2, 2, 2).unwrap(), psi_k_closed_form(2, 2, 2));
        assert_eq!(psi_k_hypergeometric(4, 0, 3).unwrap(), int(1));
        assert!(hyp2f1_terminating(1, 2, 3, &int(-1)).is_err());
    }

    #[test]
    fn matrices_and_rank() {
        let id = psi_matrix(&PsiOperator { phi: std3(), psi: std3(), kind: PsiKind::Level(0) }).unwrap();
        assert!(id.is_identity());
        let s2 = StructuralSet::standard(2).unwrap();
        let (rank, full) = psi_rank(&PsiOperator { phi: s2.clone(), psi: s2, kind: PsiKind::Level(1) }).unwrap();
        assert_eq!((rank, full), (2, false));
        let (_, full) =
            psi_rank(&PsiOperator { phi: std3(), psi: StructuralSet::reversed(3).unwrap(), kind: PsiKind::Level(1) }).unwrap();
        assert!(full);
    }

    #[test]
    fn recursion_example() {
        let pair = PsiPair::new(&std3(), &std3()).unwrap();
        let v = check_level_recursion(&pair, 1, &Multivector::one(3)).unwrap();
        assert!(v.holds);
        assert_eq!(v.lhs, "9");
        assert!(check_level_recursion(&pair, 1, &Multivector::zero(3)).unwrap().holds);
        assert!(check_level_recursion(&pair, 3, &Multivector::one(3)).is_err());
        assert!(check_level_recursion(&pair, 0, &Multivector::one(3)).is_err());
    }

    #[test]
    fn corrupted_pair_breaks_recursion() {
        let pair = PsiPair::new(&std3(), &std3()).unwrap().corrupted();
        assert!(!check_level_recursion(&pair, 1, &Multivector::one(3)).unwrap().holds);
    }

    #[test]
    fn parity_on_zero() {
        assert!(check_complement_parity(&std3(), &Multivector::zero(3), 1).unwrap().holds);
    }
}
