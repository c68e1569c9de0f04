//! Membership in the harmonic, `(phi,psi)`-harmonic and
//! `(phi,psi)`-inframonogenic classes, decided by exact vanishing.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyfield::PolyField;
use crate::structural::StructuralSet;
use crate::verdict::Verdict;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Class {
    /// `Laplace f = 0`.
    Harmonic,
    /// `phi_d psi_d [f] = 0`.
    PhiPsiHarmonic,
    /// `phi_d [f] psi_d = 0`.
    Inframonogenic,
}

impl Class {
    pub const ALL: [Class; 3] = [Class::Harmonic, Class::PhiPsiHarmonic, Class::Inframonogenic];

    fn bit(self) -> u8 {
        match self {
            Class::Harmonic => 1,
            Class::PhiPsiHarmonic => 2,
            Class::Inframonogenic => 4,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Class::Harmonic => "H",
            Class::PhiPsiHarmonic => "Hpp",
            Class::Inframonogenic => "I",
        }
    }

    /// Whether the field lies in the class.
    pub fn contains(self, phi: &StructuralSet, psi: &StructuralSet, f: &PolyField) -> Result<bool> {
        Ok(match self {
            Class::Harmonic => f.laplacian().is_zero(),
            Class::PhiPsiHarmonic => f.dirac_left_left(phi, psi)?.is_zero(),
            Class::Inframonogenic => f.sandwich(phi, psi)?.is_zero(),
        })
    }
}

/// Exact subset of the three classes a field belongs to (one of 8 regions).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct RegionLabel(u8);

impl RegionLabel {
    pub const NONE: RegionLabel = RegionLabel(0);
    pub const ALL_CLASSES: RegionLabel = RegionLabel(7);

    pub fn from_flags(harmonic: bool, phi_psi_harmonic: bool, inframonogenic: bool) -> Self {
        RegionLabel(harmonic as u8 | (phi_psi_harmonic as u8) << 1 | (inframonogenic as u8) << 2)
    }

    pub fn of(classes: &[Class]) -> Self {
        RegionLabel(classes.iter().fold(0, |acc, c| acc | c.bit()))
    }

    /// All eight regions, from the empty one to the triple intersection.
    pub fn all() -> [RegionLabel; 8] {
        std::array::from_fn(|i| RegionLabel(i as u8))
    }

    pub fn contains(self, class: Class) -> bool {
        self.0 & class.bit() != 0
    }

    pub fn required(self) -> Vec<Class> {
        Class::ALL.into_iter().filter(|c| self.contains(*c)).collect()
    }

    pub fn excluded(self) -> Vec<Class> {
        Class::ALL.into_iter().filter(|c| !self.contains(*c)).collect()
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.required().iter().map(|c| c.symbol()).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

/// Accepts `none`, `{}`, or class symbols separated by `,` or `+`, with
/// optional braces: `H,I`, `{H, Hpp, I}`, `Hpp+I`.
impl FromStr for RegionLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
        if t.is_empty() || t.eq_ignore_ascii_case("none") {
            return Ok(RegionLabel::NONE);
        }
        let mut label = RegionLabel::NONE;
        for part in t.split([',', '+']) {
            let class = match part.trim() {
                "H" => Class::Harmonic,
                "Hpp" => Class::PhiPsiHarmonic,
                "I" => Class::Inframonogenic,
                other => return Err(Error::Invalid(format!("unknown class {other:?} in region {s:?}"))),
            };
            label.0 |= class.bit();
        }
        Ok(label)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ClassMembership {
    pub harmonic: bool,
    pub phi_psi_harmonic: bool,
    pub inframonogenic: bool,
    pub hyperholomorphic_left: bool,
    pub hyperholomorphic_right: bool,
}

impl ClassMembership {
    pub fn region(&self) -> RegionLabel {
        RegionLabel::from_flags(self.harmonic, self.phi_psi_harmonic, self.inframonogenic)
    }

    pub fn report(&self) -> MembershipReport {
        MembershipReport {
            harmonic: self.harmonic,
            phi_psi_harmonic: self.phi_psi_harmonic,
            inframonogenic: self.inframonogenic,
            hyp_left: self.hyperholomorphic_left,
            hyp_right: self.hyperholomorphic_right,
            region: self.region().to_string(),
        }
    }
}

/// JSON shape of a membership answer.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MembershipReport {
    pub harmonic: bool,
    pub phi_psi_harmonic: bool,
    pub inframonogenic: bool,
    pub hyp_left: bool,
    pub hyp_right: bool,
    pub region: String,
}

pub fn classify(phi: &StructuralSet, psi: &StructuralSet, f: &PolyField) -> Result<ClassMembership> {
    if phi.dim() != psi.dim() {
        return Err(Error::DimensionMismatch { left: phi.dim(), right: psi.dim() });
    }
    Ok(ClassMembership {
        harmonic: Class::Harmonic.contains(phi, psi, f)?,
        phi_psi_harmonic: Class::PhiPsiHarmonic.contains(phi, psi, f)?,
        inframonogenic: Class::Inframonogenic.contains(phi, psi, f)?,
        hyperholomorphic_left: f.dirac_left(psi)?.is_zero(),
        hyperholomorphic_right: f.dirac_right(psi)?.is_zero(),
    })
}

pub fn region(phi: &StructuralSet, psi: &StructuralSet, f: &PolyField) -> Result<RegionLabel> {
    Ok(classify(phi, psi, f)?.region())
}

/// `f` is in `I` (resp. `Hpp`) exactly when both its even and odd parts are.
pub fn check_even_odd_split(phi: &StructuralSet, psi: &StructuralSet, f: &PolyField) -> Result<Vec<Verdict>> {
    let (even, odd) = (f.even_part(), f.odd_part());
    let mut out = Vec::new();
    for class in [Class::Inframonogenic, Class::PhiPsiHarmonic] {
        let whole = class.contains(phi, psi, f)?;
        let parts = class.contains(phi, psi, &even)? && class.contains(phi, psi, &odd)?;
        out.push(Verdict::compare(format!("f in {0} <=> f_+ and f_- in {0}", class.symbol()), &whole, &parts));
    }
    // The splitting of the operator images themselves.
    let sandwich = f.sandwich(phi, psi)?;
    out.push(Verdict::compare("[phi_d f psi_d]_+ = phi_d[f_+]psi_d", &sandwich.even_part(), &even.sandwich(phi, psi)?));
    out.push(Verdict::compare("[phi_d f psi_d]_- = phi_d[f_-]psi_d", &sandwich.odd_part(), &odd.sandwich(phi, psi)?));
    let left_left = f.dirac_left_left(phi, psi)?;
    out.push(Verdict::compare("[phi_d psi_d f]_+ = phi_d psi_d[f_+]", &left_left.even_part(), &even.dirac_left_left(phi, psi)?));
    out.push(Verdict::compare("[phi_d psi_d f]_- = phi_d psi_d[f_-]", &left_left.odd_part(), &odd.dirac_left_left(phi, psi)?));
    Ok(out)
}

/// `Laplace^2 f = 0`.
pub fn is_biharmonic(f: &PolyField) -> bool {
    f.laplacian().laplacian().is_zero()
}
