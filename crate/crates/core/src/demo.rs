//! Replays the worked examples in R^3 and R^2 with expected and actual
//! values side by side.

use std::fmt::Write as _;

use serde::Serialize;

use crate::classify::{classify, Class, RegionLabel};
use crate::error::Result;
use crate::multivector::{Blade, Multivector};
use crate::planar::{check_planar_formulas, planar_part, planar_partner_set};
use crate::polyfield::PolyField;
use crate::psi::{check_odd_dimension_equivalence, psi_k_closed_form, PsiKind, PsiPair};
use crate::rational::{int, ratio, Rational};
use crate::solver::{class_basis, class_dimensions, converse_counterexample, find_region_witness, grade_split_counterexample};
use crate::structural::{StructuralSet, TransitionMatrix};
use crate::verdict::all_hold;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DemoItem {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DemoReport {
    pub items: Vec<DemoItem>,
    pub all_pass: bool,
}

impl DemoReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for item in &self.items {
            let tag = if item.ok { "ok  " } else { "FAIL" };
            let _ = writeln!(s, "{tag}  {}\n      expected: {}\n      actual:   {}", item.name, item.expected, item.actual);
        }
        let ok = self.items.iter().filter(|i| i.ok).count();
        let _ = writeln!(s, "summary: {ok}/{} examples reproduced", self.items.len());
        s
    }
}

#[derive(Default)]
struct Items(Vec<DemoItem>);

impl Items {
    fn push(&mut self, name: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let ok = expected == actual;
        self.0.push(DemoItem { name: name.into(), expected, actual, ok });
    }
}

/// The R^3 fields with the region each is stated to lie in, and whether it
/// is left and right `psi`-hyperholomorphic.
pub const SPACE_EXAMPLES: [(&str, &str, bool); 5] = [
    ("(x2^2 - x1^2)*e[2] - 2*x1*x2*e[3] - x1*e[1,2] + x3*e[2,3]", "H, Hpp, I", true),
    ("2*x1*x3*e[1] - x2*e[2] - (x1^2 - x3^2)*e[3]", "H, Hpp, I", false),
    ("2*x2*x3*e[1] - (x1^2 + x2^2)*e[2]", "Hpp, I", false),
    ("x1*x3*e[1] + x2*e[2]", "H, I", false),
    ("(x1*x2 + x2*x3)*e[2]", "H, Hpp", false),
];

/// `phi = {e1, e2, e3}` and `psi = {e3, e2, e1}`.
pub fn space_sets() -> (StructuralSet, StructuralSet) {
    (StructuralSet::standard(3).expect("m=3"), StructuralSet::reversed(3).expect("m=3"))
}

pub fn run_demo() -> Result<DemoReport> {
    let mut items = Items::default();
    let (phi, psi) = space_sets();

    for (text, region, hyp) in SPACE_EXAMPLES {
        let f = PolyField::parse(text, 3)?;
        let c = classify(&phi, &psi, &f)?;
        items.push(format!("region of {text}"), format!("{{{region}}}"), c.region());
        items.push(
            format!("hyperholomorphic (left, right) for {text}"),
            format!("({hyp}, {hyp})"),
            format!("({}, {})", c.hyperholomorphic_left, c.hyperholomorphic_right),
        );
    }

    let s3 = StructuralSet::standard(3)?;
    let std_pair = PsiPair::new(&s3, &s3)?;
    let e1 = Multivector::basis_vector(3, 1)?;
    let one = Multivector::one(3);
    items.push("Psi_0(e1) = e1", &e1, std_pair.level(0, &e1)?);
    items.push("Psi_1(e1), standard set, m=3", &e1, std_pair.level(1, &e1)?);
    items.push("Psi_1(1), standard set, m=3", Multivector::scalar(3, int(-3)), std_pair.level(1, &one)?);
    items.push("Psi_+(1), standard set, m=3", Multivector::scalar(3, int(4)), std_pair.plus(&one)?);
    items.push("lambda(3,1,1)", int(1), psi_k_closed_form(3, 1, 1));
    items.push("lambda(3,2,0)", int(3), psi_k_closed_form(3, 2, 0));
    items.push("lambda(2,1,1)", int(0), psi_k_closed_form(2, 1, 1));
    let s2 = StructuralSet::standard(2)?;
    let rank = PsiPair::new(&s2, &s2)?.matrix(&PsiKind::Level(1))?.rank();
    items.push("rank of Psi_1, standard set, m=2", 2, rank);
    let rank = PsiPair::new(&phi, &psi)?.matrix(&PsiKind::Level(1))?.rank();
    items.push("rank of Psi_1 for the R^3 sets", 8, rank);

    let pair = PsiPair::new(&phi, &psi)?;
    for (text, _, _) in SPACE_EXAMPLES {
        let f = PolyField::parse(text, 3)?;
        items.push(format!("odd-m equivalences on {text}"), true, all_hold(&check_odd_dimension_equivalence(&pair, &f)?));
    }

    let dims = class_dimensions(&phi, &psi, 3, 2)?;
    items.push("triple intersection nonzero at degree 2", true, dims.triple >= 1);
    for target in [RegionLabel::ALL_CLASSES, RegionLabel::of(&[Class::PhiPsiHarmonic, Class::Inframonogenic])] {
        let found = match find_region_witness(&phi, &psi, 3, 2, target)? {
            Some(w) => classify(&phi, &psi, &w)?.region().to_string(),
            None => "not found".to_string(),
        };
        items.push(format!("witness for region {target} at degree 2"), target, found);
    }

    let grade_split = grade_split_counterexample(&phi, &psi, 2)?;
    items.push("grade components can leave I when phi != psi", true, grade_split.is_some());
    items.push("grade components stay in I when phi = psi", true, grade_split_counterexample(&phi, &phi, 2)?.is_none());

    for m in [2, 3] {
        let set = StructuralSet::standard(m)?;
        let f = converse_counterexample(&set, m)?;
        let before = classify(&set, &set, &f)?;
        let image = PsiPair::new(&set, &set)?.apply_field(&PsiKind::Plus, &f)?;
        let after = classify(&set, &set, &image)?;
        items.push(
            format!("converse fails for m={m}: f = {f}"),
            "f in neither H nor I; Psi_+(f) in both",
            format!(
                "f in {}; Psi_+(f) in {}",
                describe_hi(before.harmonic, before.inframonogenic),
                describe_hi(after.harmonic, after.inframonogenic)
            ),
        );
    }

    planar_items(&mut items)?;

    let all_pass = items.0.iter().all(|i| i.ok);
    Ok(DemoReport { items: items.0, all_pass })
}

fn describe_hi(h: bool, i: bool) -> &'static str {
    match (h, i) {
        (true, true) => "both",
        (true, false) => "H only",
        (false, true) => "I only",
        (false, false) => "neither H nor I",
    }
}

fn planar_items(items: &mut Items) -> Result<()> {
    let psi = StructuralSet::standard(2)?;
    let sample = PolyField::parse("x1^2 - 2*x2 + (x1*x2 + 1)*e[1] - x2^2*e[2] + 3*x1*e[1,2]", 2)?;
    let (c1, c2): (Rational, Rational) = (ratio(3, 5), ratio(4, 5));
    for (label, c) in [
        ("rotation", TransitionMatrix::rotation(c1.clone(), c2.clone())?),
        ("reflection", TransitionMatrix::reflection(c1.clone(), c2.clone())?),
    ] {
        items.push(
            format!("2D {label} (c1=3/5, c2=4/5): Psi_+ and Psi_- component formulas"),
            true,
            all_hold(&check_planar_formulas(&psi, &c, &sample)?),
        );
        let phi = planar_partner_set(&psi, &c)?;
        let form = c.planar_form().expect("planar");
        let mut all_in = true;
        let mut count = 0;
        for class in [Class::Harmonic, Class::Inframonogenic] {
            for d in 2..=3 {
                for f in class_basis(&[class], &phi, &psi, d)?.fields() {
                    let cls = classify(&phi, &psi, &planar_part(form, &f))?;
                    all_in &= cls.harmonic && cls.inframonogenic;
                    count += 1;
                }
            }
        }
        let part = if label == "rotation" { "f_+" } else { "f_-" };
        items.push(format!("2D {label}: {part} of each H and I basis field (degrees 2, 3; {count} fields) in H and I"), true, all_in);
    }
    let psi_rot = StructuralSet::rotation2(c1)?;
    items.push(
        "rotated frame psi^1 for c1=3/5",
        Multivector::from_terms(2, [(Blade::vector(1), ratio(3, 5)), (Blade::vector(2), ratio(-4, 5))]),
        psi_rot.vector(1),
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn demo_reproduces_everything() {
        let r = run_demo().unwrap();
        assert!(r.all_pass, "{}", r.to_text());
        assert!(r.items.len() >= 30);
    }
}
