//! Seeded generators for multivectors, fields and structural sets.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::Matrix;
use crate::multivector::{Blade, Multivector};
use crate::polyfield::{MultiIndex, PolyField};
use crate::rational::Rational;
use crate::structural::{StructuralSet, TransitionMatrix};

pub type Rng64 = ChaCha8Rng;

pub fn seeded(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let mut p: i64 = rng.random_range(-5..=5);
    if p == 0 {
        p = 1;
    }
    let q: i64 = rng.random_range(1..=3);
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Up to `max_terms` random blades with small nonzero rational coefficients.
pub fn multivector<R: Rng>(rng: &mut R, m: usize, max_terms: usize) -> Multivector {
    let n = rng.random_range(1..=max_terms.max(1));
    let mut mv = Multivector::zero(m);
    for _ in 0..n {
        let blade = Blade::from_mask(rng.random_range(0..(1u32 << m)) as u16);
        mv.add_term(blade, small_rational(rng));
    }
    mv
}

/// Dense random multivector touching every blade.
pub fn dense_multivector<R: Rng>(rng: &mut R, m: usize) -> Multivector {
    Multivector::from_terms(m, Blade::all(m).into_iter().map(|b| (b, small_rational(rng))))
}

/// Random pure grade-`k` element with every grade-`k` blade present.
pub fn graded_multivector<R: Rng>(rng: &mut R, m: usize, k: usize) -> Multivector {
    Multivector::from_terms(m, Blade::of_grade(m, k).into_iter().map(|b| (b, small_rational(rng))))
}

/// Random field with total degree at most `max_degree`.
pub fn field<R: Rng>(rng: &mut R, m: usize, max_degree: usize, max_terms: usize) -> PolyField {
    let n = rng.random_range(1..=max_terms.max(1));
    let mut f = PolyField::zero(m);
    for _ in 0..n {
        let d = rng.random_range(0..=max_degree);
        let monomials = MultiIndex::homogeneous(m, d);
        let alpha = monomials[rng.random_range(0..monomials.len())].clone();
        f.add_term(alpha, &multivector(rng, m, 3));
    }
    f
}

pub fn signed_permutation<R: Rng>(rng: &mut R, m: usize) -> StructuralSet {
    let mut idx: Vec<i64> = (1..=m as i64).collect();
    idx.shuffle(rng);
    for x in &mut idx {
        if rng.random_bool(0.5) {
            *x = -*x;
        }
    }
    StructuralSet::signed_permutation(&idx).expect("valid signed permutation")
}

/// Householder reflection `I - 2 v v^T / (v^T v)` for an integer vector `v`.
fn householder<R: Rng>(rng: &mut R, m: usize) -> Matrix {
    let v: Vec<i64> = loop {
        let v: Vec<i64> = (0..m).map(|_| rng.random_range(-2..=2)).collect();
        if v.iter().any(|&x| x != 0) {
            break v;
        }
    };
    let norm: i64 = v.iter().map(|x| x * x).sum();
    let rows = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let delta = if i == j { norm } else { 0 };
                    Rational::new(BigInt::from(delta - 2 * v[i] * v[j]), BigInt::from(norm))
                })
                .collect()
        })
        .collect();
    Matrix::from_rows(rows).expect("square")
}

/// Signed permutation composed with one or two rational reflections; the
/// result is generally dense.
pub fn rational_set<R: Rng>(rng: &mut R, m: usize) -> StructuralSet {
    let mut c = signed_permutation(rng, m).coordinates().matrix().clone();
    for _ in 0..rng.random_range(1..=2) {
        c = c.mul(&householder(rng, m)).expect("square");
    }
    StructuralSet::from_matrix(&TransitionMatrix::new(c).expect("product of orthogonal matrices"))
        .expect("orthogonal rows")
}

/// Nonempty subset of `1..=m`, sorted; `odd` forces odd size.
pub fn subset<R: Rng>(rng: &mut R, m: usize, odd: bool) -> Vec<usize> {
    loop {
        let mask: u32 = rng.random_range(1..(1u32 << m));
        if !odd || mask.count_ones() % 2 == 1 {
            return (0..m).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect();
        }
    }
}
