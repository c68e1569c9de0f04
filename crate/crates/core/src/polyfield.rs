//! Multivector-valued polynomial fields on R^m and the differential
//! operators acting on them.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multivector::{check_dim, Blade, Multivector};
use crate::rational::{parse_rational, Rational};
use crate::structural::StructuralSet;

/// Exponent vector of a monomial `x^alpha`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    pub fn constant(m: usize) -> Self {
        MultiIndex(vec![0; m])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// `x_i` as a multi-index, 1-based axis.
    pub fn variable(m: usize, i: usize) -> Self {
        let mut e = vec![0; m];
        e[i - 1] = 1;
        MultiIndex(e)
    }

    fn times(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All exponent vectors of total degree `d`, in canonical order.
    pub fn homogeneous(m: usize, d: usize) -> Vec<MultiIndex> {
        fn rec(m: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            if prefix.len() == m - 1 {
                prefix.push(left);
                out.push(MultiIndex(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in (0..=left).rev() {
                prefix.push(e);
                rec(m, left - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, d as u32, &mut Vec::with_capacity(m), &mut out);
        out
    }
}

/// Graded order: lower degree first, then larger powers of earlier
/// variables first (`x1^2 < x1 x2 < x2^2`).
impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Polynomial map R^m -> R_{0,m}, `sum_alpha x^alpha c_alpha`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyField {
    dim: usize,
    terms: BTreeMap<MultiIndex, Multivector>,
}

impl PolyField {
    pub fn zero(m: usize) -> Self {
        PolyField { dim: m, terms: BTreeMap::new() }
    }

    pub fn constant(value: Multivector) -> Self {
        let m = value.dim();
        let mut f = PolyField::zero(m);
        f.add_term(MultiIndex::constant(m), &value);
        f
    }

    pub fn monomial(alpha: MultiIndex, value: Multivector) -> Self {
        let mut f = PolyField::zero(value.dim());
        f.add_term(alpha, &value);
        f
    }

    pub fn from_terms(m: usize, terms: impl IntoIterator<Item = (MultiIndex, Multivector)>) -> Self {
        let mut f = PolyField::zero(m);
        for (a, v) in terms {
            f.add_term(a, &v);
        }
        f
    }

    pub fn parse(text: &str, m: usize) -> Result<Self> {
        crate::parse::parse_field(text, m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Multivector)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(MultiIndex::degree).max()
    }

    /// Value if the field has no non-constant terms.
    pub fn constant_value(&self) -> Option<Multivector> {
        match self.degree() {
            None => Some(Multivector::zero(self.dim)),
            Some(0) => self.terms.values().next().cloned(),
            Some(_) => None,
        }
    }

    pub fn add_term(&mut self, alpha: MultiIndex, value: &Multivector) {
        debug_assert_eq!(alpha.dim(), self.dim);
        debug_assert_eq!(value.dim(), self.dim);
        if value.is_zero() {
            return;
        }
        match self.terms.entry(alpha) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += value;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &PolyField) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &PolyField) -> Result<PolyField> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (a, v) in &other.terms {
            out.add_term(a.clone(), v);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &PolyField) -> Result<PolyField> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> PolyField {
        self.map_values(|v| -v)
    }

    pub fn scale(&self, c: &Rational) -> PolyField {
        self.map_values(|v| v.scale(c))
    }

    /// Pointwise product `f(x) g(x)` (geometric product of values).
    pub fn try_mul(&self, other: &PolyField) -> Result<PolyField> {
        self.check_same(other)?;
        let mut out = PolyField::zero(self.dim);
        for (a, u) in &self.terms {
            for (b, v) in &other.terms {
                out.add_term(a.times(b), &(u * v));
            }
        }
        Ok(out)
    }

    /// Applies a linear map to every coefficient.
    pub fn map_values(&self, f: impl Fn(&Multivector) -> Multivector) -> PolyField {
        let mut out = PolyField::zero(self.dim);
        for (a, v) in &self.terms {
            out.add_term(a.clone(), &f(v));
        }
        out
    }

    pub fn left_mul(&self, c: &Multivector) -> PolyField {
        self.map_values(|v| c * v)
    }

    pub fn right_mul(&self, c: &Multivector) -> PolyField {
        self.map_values(|v| v * c)
    }

    pub fn even_part(&self) -> PolyField {
        self.map_values(Multivector::even_part)
    }

    pub fn odd_part(&self) -> PolyField {
        self.map_values(Multivector::odd_part)
    }

    pub fn grade_project(&self, k: usize) -> Result<PolyField> {
        if k > self.dim {
            return Err(Error::GradeOutOfRange { grade: k, dim: self.dim });
        }
        Ok(self.map_values(|v| v.grade_project(k).expect("grade checked")))
    }

    /// Terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: usize) -> PolyField {
        PolyField {
            dim: self.dim,
            terms: self.terms.iter().filter(|(a, _)| a.degree() == d).map(|(a, v)| (a.clone(), v.clone())).collect(),
        }
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Multivector> {
        if point.len() != self.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: point.len() });
        }
        let mut out = Multivector::zero(self.dim);
        for (a, v) in &self.terms {
            let mut x = Rational::from_integer(1.into());
            for (p, &e) in point.iter().zip(a.exponents()) {
                for _ in 0..e {
                    x *= p;
                }
            }
            out += &v.scale(&x);
        }
        Ok(out)
    }

    /// `d f / d x_i`, 1-based axis.
    pub fn partial_derivative(&self, i: usize) -> Result<PolyField> {
        if i == 0 || i > self.dim {
            return Err(Error::AxisOutOfRange { axis: i, dim: self.dim });
        }
        let mut out = PolyField::zero(self.dim);
        for (a, v) in &self.terms {
            let e = a.0[i - 1];
            if e == 0 {
                continue;
            }
            let mut b = a.clone();
            b.0[i - 1] -= 1;
            out.add_term(b, &v.scale(&Rational::from_integer(BigInt::from(e))));
        }
        Ok(out)
    }

    fn check_set(&self, s: &StructuralSet) -> Result<()> {
        if s.dim() != self.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: s.dim() });
        }
        Ok(())
    }

    /// `psi_d[f] = sum_j psi^j (d_j f)`.
    pub fn dirac_left(&self, psi: &StructuralSet) -> Result<PolyField> {
        self.check_set(psi)?;
        let mut out = PolyField::zero(self.dim);
        for j in 1..=self.dim {
            out = out.try_add(&self.partial_derivative(j)?.left_mul(psi.vector(j)))?;
        }
        Ok(out)
    }

    /// `[f]psi_d = sum_j (d_j f) psi^j`.
    pub fn dirac_right(&self, psi: &StructuralSet) -> Result<PolyField> {
        self.check_set(psi)?;
        let mut out = PolyField::zero(self.dim);
        for j in 1..=self.dim {
            out = out.try_add(&self.partial_derivative(j)?.right_mul(psi.vector(j)))?;
        }
        Ok(out)
    }

    pub fn laplacian(&self) -> PolyField {
        let mut out = PolyField::zero(self.dim);
        for i in 1..=self.dim {
            let d2 = self.partial_derivative(i).and_then(|g| g.partial_derivative(i)).expect("axis in range");
            out = out.try_add(&d2).expect("same dimension");
        }
        out
    }

    /// Sandwich operator `phi_d[f]psi_d = sum_{i,j} phi^i (d_i d_j f) psi^j`.
    pub fn sandwich(&self, phi: &StructuralSet, psi: &StructuralSet) -> Result<PolyField> {
        self.check_set(phi)?;
        self.check_set(psi)?;
        let mut out = PolyField::zero(self.dim);
        for i in 1..=self.dim {
            let di = self.partial_derivative(i)?;
            for j in 1..=self.dim {
                let dij = di.partial_derivative(j)?;
                out = out.try_add(&dij.left_mul(phi.vector(i)).right_mul(psi.vector(j)))?;
            }
        }
        Ok(out)
    }

    /// `phi_d psi_d [f]`, the left-left composition.
    pub fn dirac_left_left(&self, phi: &StructuralSet, psi: &StructuralSet) -> Result<PolyField> {
        self.dirac_left(psi)?.dirac_left(phi)
    }

    /// Term list for JSON output.
    pub fn to_term_list(&self) -> Vec<TermRecord> {
        let mut out = Vec::new();
        for (a, v) in &self.terms {
            for (b, c) in v.terms() {
                out.push(TermRecord { alpha: a.0.clone(), blade: b.indices().collect(), coef: c.to_string() });
            }
        }
        out
    }

    pub fn from_term_list(m: usize, terms: &[TermRecord]) -> Result<PolyField> {
        check_dim(m)?;
        let mut f = PolyField::zero(m);
        for t in terms {
            if t.alpha.len() != m {
                return Err(Error::DimensionMismatch { left: m, right: t.alpha.len() });
            }
            let blade = Blade::from_indices(&t.blade, m)?;
            let coef = parse_rational(&t.coef)?;
            f.add_term(MultiIndex(t.alpha.clone()), &Multivector::from_blade(m, blade, coef));
        }
        Ok(f)
    }
}

/// One `(monomial, blade, coefficient)` triple of a field.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TermRecord {
    pub alpha: Vec<u32>,
    pub blade: Vec<usize>,
    pub coef: String,
}

/// Canonical text: one `coef*monomial*e[..]` summand per nonzero
/// coefficient, joined by ` + `.
impl fmt::Display for PolyField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (a, v) in &self.terms {
            for (b, c) in v.terms() {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "{c}")?;
                if a.degree() > 0 {
                    write!(f, "*{a}")?;
                }
                if !b.is_scalar() {
                    write!(f, "*{b}")?;
                }
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &PolyField {
    type Output = PolyField;

    fn add(self, rhs: &PolyField) -> PolyField {
        self.try_add(rhs).expect("sum of mismatched dimensions")
    }
}

impl std::ops::Sub for &PolyField {
    type Output = PolyField;

    fn sub(self, rhs: &PolyField) -> PolyField {
        self.try_sub(rhs).expect("difference of mismatched dimensions")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p(text: &str) -> PolyField {
        PolyField::parse(text, 3).unwrap()
    }

    fn space_sets() -> (StructuralSet, StructuralSet) {
        (StructuralSet::standard(3).unwrap(), StructuralSet::reversed(3).unwrap())
    }

    #[test]
    fn partials() {
        assert_eq!(p("x1^2*e[2]").partial_derivative(1).unwrap(), p("2*x1*e[2]"));
        assert!(p("x1*e[1]").partial_derivative(2).unwrap().is_zero());
        assert!(p("x1").partial_derivative(4).is_err());
        assert!(p("x1").partial_derivative(0).is_err());
    }

    #[test]
    fn dirac_of_linear_field() {
        let s = StructuralSet::standard(3).unwrap();
        assert_eq!(p("x1*e[1]").dirac_left(&s).unwrap(), p("-1"));
        assert_eq!(p("x1*e[1]").dirac_right(&s).unwrap(), p("-1"));
    }

    #[test]
    fn hyperholomorphic_example_is_annihilated() {
        let (_, psi) = space_sets();
        let f = p("(x2^2 - x1^2)*e[2] - 2*x1*x2*e[3] - x1*e[1,2] + x3*e[2,3]");
        assert!(f.dirac_left(&psi).unwrap().is_zero());
        assert!(f.dirac_right(&psi).unwrap().is_zero());
    }

    #[test]
    fn laplacian_examples() {
        assert!(p("x1^2 - x2^2").laplacian().is_zero());
        assert_eq!(p("2*x2*x3*e[1] - (x1^2 + x2^2)*e[2]").laplacian(), p("-4*e[2]"));
        assert!(p("x1*x3*e[1] + x2*e[2]").laplacian().is_zero());
    }

    #[test]
    fn sandwich_examples() {
        let (phi, psi) = space_sets();
        let s = StructuralSet::standard(3).unwrap();
        assert!(p("x1*e[1]").sandwich(&s, &s).unwrap().is_zero());
        assert!(p("x1*x3*e[1] + x2*e[2]").sandwich(&phi, &psi).unwrap().is_zero());
        assert!(!p("(x1*x2 + x2*x3)*e[2]").sandwich(&phi, &psi).unwrap().is_zero());
    }

    #[test]
    fn sandwich_orders_agree() {
        let (phi, psi) = space_sets();
        let f = p("x1^2*x2*e[1,3] + 3*x3^2*e[2] - x1*x2*x3");
        let direct = f.sandwich(&phi, &psi).unwrap();
        assert_eq!(direct, f.dirac_left(&phi).unwrap().dirac_right(&psi).unwrap());
        assert_eq!(direct, f.dirac_right(&psi).unwrap().dirac_left(&phi).unwrap());
    }

    #[test]
    fn dimension_mismatch() {
        let f = p("x1");
        assert!(f.dirac_left(&StructuralSet::standard(2).unwrap()).is_err());
    }

    #[test]
    fn canonical_text_roundtrip() {
        let f = p("(x2^2 - x1^2)*e[2] - 2*x1*x2*e[3] - x1*e[1,2] + x3*e[2,3]");
        let text = f.to_string();
        assert_eq!(text, "-1*x1*e[1,2] + 1*x3*e[2,3] + -1*x1^2*e[2] + -2*x1*x2*e[3] + 1*x2^2*e[2]");
        assert_eq!(p(&text), f);
        assert_eq!(PolyField::zero(3).to_string(), "0");
    }

    #[test]
    fn term_list_roundtrip() {
        let f = p("3/5*x1*x3*e[1,2] - 2");
        let json = serde_json::to_string(&f.to_term_list()).unwrap();
        assert_eq!(json, r#"[{"alpha":[0,0,0],"blade":[],"coef":"-2"},{"alpha":[1,0,1],"blade":[1,2],"coef":"3/5"}]"#);
        let back: Vec<TermRecord> = serde_json::from_str(&json).unwrap();
        assert_eq!(PolyField::from_term_list(3, &back).unwrap(), f);
    }

    #[test]
    fn homogeneous_monomials_in_order() {
        let v: Vec<String> = MultiIndex::homogeneous(3, 2).iter().map(|a| a.to_string()).collect();
        assert_eq!(v, ["x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"]);
        let mut sorted = MultiIndex::homogeneous(3, 2);
        sorted.sort();
        assert_eq!(sorted, MultiIndex::homogeneous(3, 2));
        assert_eq!(MultiIndex::homogeneous(2, 0).len(), 1);
    }

    #[test]
    fn evaluation() {
        let f = p("x1*x2*e[1] + 3");
        let v = f.evaluate(&[int(2), int(5), int(0)]).unwrap();
        assert_eq!(v, Multivector::parse("3 + 10*e[1]", 3).unwrap());
    }
}
