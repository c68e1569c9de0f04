//! Oracles shared by the integration tests. They use only index lists,
//! explicit sums and schoolbook elimination.
#![allow(dead_code)]

use cliffan::rational::Rational;
use cliffan::{Multivector, StructuralSet};
use num_traits::{Signed, Zero};

/// Product of basis blades given as index lists, by bubble sort with
/// `e_i e_j = -e_j e_i` and `e_i e_i = -1`.
pub fn blade_product_oracle(a: &[usize], b: &[usize]) -> (i32, Vec<usize>) {
    let mut word: Vec<usize> = a.iter().chain(b).copied().collect();
    let mut sign = 1;
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < word.len() {
            if word[i] > word[i + 1] {
                word.swap(i, i + 1);
                sign = -sign;
                changed = true;
            } else if word[i] == word[i + 1] {
                word.drain(i..i + 2);
                sign = -sign;
                changed = true;
                continue;
            }
            i += 1;
        }
        if !changed {
            return (sign, word);
        }
    }
}

pub fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << m)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..m).filter(|i| s & (1 << i) != 0).map(|i| i + 1).collect())
        .collect()
}

/// `sum_{|A|=k} phi_A a rev(psi_A)`, with the reversal written out as the
/// product of the factors in reverse order.
pub fn psi_sum_oracle(phi: &StructuralSet, psi: &StructuralSet, k: usize, a: &Multivector) -> Multivector {
    let m = phi.dim();
    let mut acc = Multivector::zero(m);
    for set in subsets(m, k) {
        let mut left = Multivector::one(m);
        for &j in &set {
            left = &left * phi.vector(j);
        }
        let mut right = Multivector::one(m);
        for &j in set.iter().rev() {
            right = &right * psi.vector(j);
        }
        acc += &(&(&left * a) * &right);
    }
    acc
}

/// Rank by schoolbook Gauss-Jordan on rationals, pivoting on the largest
/// absolute value in each column.
pub fn schoolbook_rank(rows: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).filter(|&r| !a[r][c].is_zero()).max_by(|&x, &y| a[x][c].abs().cmp(&a[y][c].abs()))
        else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for r in 0..a.len() {
            if r != rank && !a[r][c].is_zero() {
                let f = &a[r][c] / &pivot;
                for k in c..cols {
                    let v = &a[rank][k] * &f;
                    a[r][k] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}
