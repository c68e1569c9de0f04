//! The two-dimensional case, where every pair of structural sets is related
//! by a rotation or a reflection and `Psi_+`, `Psi_-` have explicit
//! component formulas in the `psi` frame.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::multivector::{Blade, Multivector};
use crate::polyfield::PolyField;
use crate::psi::{PsiKind, PsiPair};
use crate::rational::Rational;
use crate::structural::{PlanarForm, StructuralSet, TransitionMatrix};
use crate::verdict::Verdict;

/// `phi` with `phi^j = sum_i C_ij psi^i`, so that `C` is the transition
/// matrix from the basis `psi` to the basis `phi`.
pub fn planar_partner_set(psi: &StructuralSet, c: &TransitionMatrix) -> Result<StructuralSet> {
    if psi.dim() != 2 || c.dim() != 2 {
        return Err(Error::UnsupportedDimension(psi.dim()));
    }
    let ct = TransitionMatrix::new(c.matrix().transpose())?;
    StructuralSet::from_matrix_over(psi, &ct)
}

/// Scalar component fields `[f_0, f_1, f_2, f_12]` of `f` in the `psi` frame.
pub fn frame_components(psi: &StructuralSet, f: &PolyField) -> Result<[PolyField; 4]> {
    let mut out: [PolyField; 4] = std::array::from_fn(|_| PolyField::zero(2));
    for (alpha, value) in f.terms() {
        for (slot, c) in out.iter_mut().zip(psi.frame_coordinates(value)?) {
            slot.add_term(alpha.clone(), &Multivector::scalar(2, c));
        }
    }
    Ok(out)
}

fn in_frame(psi: &StructuralSet, parts: [PolyField; 4]) -> Result<PolyField> {
    let mut f = PolyField::zero(2);
    for (b, part) in Blade::all(2).into_iter().zip(parts) {
        f = f.try_add(&part.right_mul(&psi.blade_product(b)))?;
    }
    Ok(f)
}

/// Expected `(Psi_+(f), Psi_-(f))` from the component formulas.
pub fn planar_formulas(psi: &StructuralSet, c: &TransitionMatrix, f: &PolyField) -> Result<(PolyField, PolyField)> {
    let form = c.planar_form().ok_or_else(|| Error::Invalid("not a planar transition matrix".into()))?;
    let c1 = c.matrix().get(0, 0).clone();
    let c2 = c.matrix().get(1, 0).clone();
    let [f0, f1, f2, f12] = frame_components(psi, f)?;
    let two = Rational::from_integer(BigInt::from(2));
    let lin = |a: &PolyField, ca: &Rational, b: &PolyField, cb: &Rational| -> Result<PolyField> {
        a.scale(ca).try_add(&b.scale(cb))
    };
    let zero = PolyField::zero(2);
    let neg2 = -&two;
    Ok(match form {
        PlanarForm::Rotation => (
            in_frame(psi, [f0.scale(&two), zero.clone(), zero.clone(), f12.scale(&two)])?,
            in_frame(
                psi,
                [lin(&f0, &c1, &f12, &c2)?.scale(&neg2), zero.clone(), zero, lin(&f12, &c1, &f0, &-&c2)?.scale(&two)],
            )?,
        ),
        PlanarForm::Reflection => (
            in_frame(psi, [zero.clone(), f1.scale(&two), f2.scale(&two), zero.clone()])?,
            in_frame(
                psi,
                [zero.clone(), lin(&f1, &c1, &f2, &c2)?.scale(&neg2), lin(&f2, &c1, &f1, &-&c2)?.scale(&two), zero],
            )?,
        ),
    })
}

/// Compares the component formulas with the defining sums.
pub fn check_planar_formulas(psi: &StructuralSet, c: &TransitionMatrix, f: &PolyField) -> Result<Vec<Verdict>> {
    let phi = planar_partner_set(psi, c)?;
    let pair = PsiPair::new(&phi, psi)?;
    let (plus, minus) = planar_formulas(psi, c, f)?;
    Ok(vec![
        Verdict::compare("planar Psi_+ components", &pair.apply_field(&PsiKind::Plus, f)?, &plus),
        Verdict::compare("planar Psi_- components", &pair.apply_field(&PsiKind::Minus, f)?, &minus),
    ])
}

/// The part of `f` that the main theorems place in `H ∩ I`: the even part
/// for a rotation, the odd part for a reflection.
pub fn planar_part(form: PlanarForm, f: &PolyField) -> PolyField {
    match form {
        PlanarForm::Rotation => f.even_part(),
        PlanarForm::Reflection => f.odd_part(),
    }
}
