//! Exact arithmetic in the real Clifford algebra R_{0,m}.
//!
//! Basis vectors square to -1 and anticommute. A basis blade `e_A` is stored
//! as a bitmask of its index set; multivectors are sparse maps from blades to
//! nonzero rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::MAX_DIM;

pub(crate) fn check_dim(m: usize) -> Result<()> {
    if m == 0 || m > MAX_DIM {
        Err(Error::UnsupportedDimension(m))
    } else {
        Ok(())
    }
}

/// Basis blade `e_A`; bit `i-1` set means `e_i` is a factor.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Blade(u16);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_mask(mask: u16) -> Self {
        Blade(mask)
    }

    /// Builds a blade from strictly increasing 1-based indices.
    pub fn from_indices(indices: &[usize], m: usize) -> Result<Self> {
        let mut mask = 0u16;
        let mut last = 0;
        for &i in indices {
            if i == 0 || i > m {
                return Err(Error::BladeIndexOutOfRange { index: i, dim: m });
            }
            if i <= last {
                return Err(Error::BladeNotCanonical(indices.to_vec()));
            }
            last = i;
            mask |= 1 << (i - 1);
        }
        Ok(Blade(mask))
    }

    pub fn vector(i: usize) -> Self {
        debug_assert!(i >= 1 && i <= MAX_DIM);
        Blade(1 << (i - 1))
    }

    /// Pseudoscalar `e_1 ... e_m`.
    pub fn top(m: usize) -> Self {
        Blade(((1u32 << m) - 1) as u16)
    }

    pub fn mask(self) -> u16 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_scalar(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << (i - 1)) != 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..16usize).filter(move |b| mask & (1 << b) != 0).map(|b| b + 1)
    }

    /// Product of two basis blades as (sign, blade).
    ///
    /// Each factor of `other` is moved left past the factors of `self` with a
    /// larger index (one transposition each), then every shared index
    /// contributes `e_i e_i = -1`.
    pub fn product(self, other: Blade) -> (bool, Blade) {
        let (a, b) = (self.0 as u32, other.0 as u32);
        let mut swaps = 0u32;
        let mut rest = b;
        while rest != 0 {
            let bit = rest.trailing_zeros();
            swaps += (a >> (bit + 1)).count_ones();
            rest &= rest - 1;
        }
        swaps += (a & b).count_ones();
        (swaps % 2 == 1, Blade((a ^ b) as u16))
    }

    /// All blades of dimension `m` in canonical order.
    pub fn all(m: usize) -> Vec<Blade> {
        let mut v: Vec<Blade> = (0..(1u32 << m)).map(|x| Blade(x as u16)).collect();
        v.sort();
        v
    }

    /// Blades of grade `k` in canonical order.
    pub fn of_grade(m: usize, k: usize) -> Vec<Blade> {
        Blade::all(m).into_iter().filter(|b| b.grade() == k).collect()
    }
}

/// Canonical order: by grade, then lexicographically on the index list.
impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e[")?;
        for (n, i) in self.indices().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

/// Element of R_{0,m} with exact rational coefficients.
///
/// Zero coefficients are never stored, so derived equality is mathematical
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Multivector {
    dim: usize,
    terms: BTreeMap<Blade, Rational>,
}

impl Multivector {
    pub fn zero(m: usize) -> Self {
        Multivector { dim: m, terms: BTreeMap::new() }
    }

    pub fn scalar(m: usize, value: Rational) -> Self {
        Multivector::from_blade(m, Blade::SCALAR, value)
    }

    pub fn one(m: usize) -> Self {
        Multivector::scalar(m, Rational::one())
    }

    pub fn from_blade(m: usize, blade: Blade, coef: Rational) -> Self {
        let mut mv = Multivector::zero(m);
        mv.add_term(blade, coef);
        mv
    }

    /// Basis vector `e_i`, 1-based.
    pub fn basis_vector(m: usize, i: usize) -> Result<Self> {
        if i == 0 || i > m {
            return Err(Error::BladeIndexOutOfRange { index: i, dim: m });
        }
        Ok(Multivector::from_blade(m, Blade::vector(i), Rational::one()))
    }

    /// Grade-1 element `sum_j coords[j] e_{j+1}`.
    pub fn vector(coords: &[Rational]) -> Self {
        let m = coords.len();
        let mut mv = Multivector::zero(m);
        for (j, c) in coords.iter().enumerate() {
            mv.add_term(Blade::vector(j + 1), c.clone());
        }
        mv
    }

    pub fn from_terms(m: usize, terms: impl IntoIterator<Item = (Blade, Rational)>) -> Self {
        let mut mv = Multivector::zero(m);
        for (b, c) in terms {
            mv.add_term(b, c);
        }
        mv
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Rational)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn coefficient(&self, blade: Blade) -> Rational {
        self.terms.get(&blade).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scalar_part(&self) -> Rational {
        self.coefficient(Blade::SCALAR)
    }

    pub fn add_term(&mut self, blade: Blade, coef: Rational) {
        if coef.is_zero() {
            return;
        }
        debug_assert!(blade.mask() >> self.dim == 0, "blade outside dimension");
        match self.terms.entry(blade) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coef;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Multivector::zero(self.dim);
        }
        Multivector {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, c)| (*b, c * factor)).collect(),
        }
    }

    pub fn geometric_product(&self, other: &Multivector) -> Result<Multivector> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        let mut out = Multivector::zero(self.dim);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (neg, blade) = a.product(*b);
                let c = ca * cb;
                out.add_term(blade, if neg { -c } else { c });
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Multivector) -> Result<Multivector> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        Ok(out)
    }

    fn filter(&self, keep: impl Fn(Blade) -> bool) -> Multivector {
        Multivector {
            dim: self.dim,
            terms: self.terms.iter().filter(|(b, _)| keep(**b)).map(|(b, c)| (*b, c.clone())).collect(),
        }
    }

    fn map_sign(&self, negate: impl Fn(Blade) -> bool) -> Multivector {
        Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, if negate(*b) { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// `[a]_k`.
    pub fn grade_project(&self, k: usize) -> Result<Multivector> {
        if k > self.dim {
            return Err(Error::GradeOutOfRange { grade: k, dim: self.dim });
        }
        Ok(self.filter(|b| b.grade() == k))
    }

    pub fn even_part(&self) -> Multivector {
        self.filter(|b| b.grade() % 2 == 0)
    }

    pub fn odd_part(&self) -> Multivector {
        self.filter(|b| b.grade() % 2 == 1)
    }

    /// Clifford conjugation: `e_i -> -e_i`, reversing products.
    pub fn conjugate(&self) -> Multivector {
        self.map_sign(|b| {
            let k = b.grade();
            (k * (k + 1) / 2) % 2 == 1
        })
    }

    /// Reversion: `e_i -> e_i`, reversing products.
    pub fn reverse(&self) -> Multivector {
        self.map_sign(|b| {
            let k = b.grade();
            (k * k.saturating_sub(1) / 2) % 2 == 1
        })
    }

    /// Grades that carry a nonzero coefficient, ascending.
    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms.keys().map(|b| b.grade()).collect();
        g.dedup();
        g
    }

    pub fn is_pure_grade(&self, k: usize) -> bool {
        self.terms.keys().all(|b| b.grade() == k)
    }

    /// Dense coefficient vector indexed by blade mask.
    pub fn to_dense(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); 1 << self.dim];
        for (b, c) in &self.terms {
            v[b.mask() as usize] = c.clone();
        }
        v
    }

    pub fn from_dense(m: usize, coeffs: &[Rational]) -> Multivector {
        Multivector::from_terms(
            m,
            coeffs.iter().enumerate().map(|(i, c)| (Blade::from_mask(i as u16), c.clone())),
        )
    }

    /// Parses the textual form, e.g. `3/5*e[1,2] + -1*e[3]`.
    pub fn parse(text: &str, m: usize) -> Result<Multivector> {
        let field = crate::parse::parse_field(text, m)?;
        field.constant_value().ok_or_else(|| Error::Parse {
            position: 0,
            message: "multivector literal must not contain variables".into(),
        })
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (b, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            if b.is_scalar() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{b}")?;
            }
        }
        Ok(())
    }
}

impl Mul for &Multivector {
    type Output = Multivector;

    /// Panics on dimension mismatch; use [`Multivector::geometric_product`]
    /// for a checked product.
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.geometric_product(rhs).expect("geometric product of mismatched dimensions")
    }
}

impl Add for &Multivector {
    type Output = Multivector;

    fn add(self, rhs: &Multivector) -> Multivector {
        self.try_add(rhs).expect("sum of mismatched dimensions")
    }
}

impl Sub for &Multivector {
    type Output = Multivector;

    fn sub(self, rhs: &Multivector) -> Multivector {
        self + &(-rhs)
    }
}

impl Neg for &Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        self.map_sign(|_| true)
    }
}

impl AddAssign<&Multivector> for Multivector {
    fn add_assign(&mut self, rhs: &Multivector) {
        assert_eq!(self.dim, rhs.dim, "sum of mismatched dimensions");
        for (b, c) in &rhs.terms {
            self.add_term(*b, c.clone());
        }
    }
}
