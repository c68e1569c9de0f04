//! Exact Clifford analysis in R_{0,m}.
//!
//! Structural sets, twisted Dirac operators on multivector-valued polynomial
//! fields, the generalized `Psi` operators, membership tests for the
//! harmonic, `(phi,psi)`-harmonic and `(phi,psi)`-inframonogenic classes, and
//! an exact nullspace solver over homogeneous coefficient spaces. All
//! arithmetic is over the rationals; every identity check is an exact
//! equality.

pub mod classify;
pub mod demo;
pub mod error;
pub mod linalg;
pub mod multivector;
pub mod parse;
pub mod planar;
pub mod polyfield;
pub mod psi;
pub mod random;
pub mod rational;
pub mod solver;
pub mod structural;
pub mod suite;
pub mod verdict;

pub use classify::{classify, region, Class, ClassMembership, MembershipReport, RegionLabel};
pub use error::{Error, Result};
pub use linalg::{Matrix, OperatorMatrix};
pub use multivector::{Blade, Multivector};
pub use polyfield::{MultiIndex, PolyField, TermRecord};
pub use rational::Rational;
pub use psi::{PsiKind, PsiOperator, PsiPair};
pub use solver::{
    class_dimensions, find_region_witness, ClassDimensions, CoefficientSpace, DiffOperator, NullspaceBasis, SolveReport,
};
pub use structural::{transition, PlanarForm, StructuralSet, TransitionMatrix};
pub use verdict::Verdict;

/// Largest supported dimension `m`.
pub const MAX_DIM: usize = 12;
