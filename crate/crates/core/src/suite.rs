//! Seeded randomized verification of every operator identity.
//!
//! Each identity is run per dimension on its own RNG stream, so the report
//! depends only on the configuration.

use std::fmt::Write as _;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::classify::{check_even_odd_split, classify, Class, RegionLabel};
use crate::error::{Error, Result};
use crate::planar::{check_planar_formulas, planar_formulas, planar_part, planar_partner_set};
use crate::polyfield::PolyField;
use crate::psi::{
    check_complement_parity, check_dirac_commutation, check_level_recursion, check_odd_dimension_equivalence,
    check_psi_pm_closed_form, check_psi_pm_conjugation, check_sandwich_psi_pm, psi_k_closed_form,
    psi_k_hypergeometric, CommutationIdentity, PsiKind, PsiPair,
};
use crate::random::{self, Rng64};
use crate::rational::{int, ratio};
use crate::solver::{class_basis, NullspaceBasis};
use crate::structural::{StructuralSet, TransitionMatrix};
use crate::verdict::Verdict;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub dims: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub max_degree: usize,
    /// Negative control: use a `Psi` table with one sign flipped.
    pub corrupt: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { dims: vec![2, 3, 4, 5], trials: 50, seed: 1, max_degree: 4, corrupt: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityOutcome {
    pub identity: String,
    pub m: usize,
    pub cases: usize,
    pub failures: usize,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteReport {
    pub seed: u64,
    pub trials: usize,
    pub dims: Vec<usize>,
    pub outcomes: Vec<IdentityOutcome>,
    pub all_pass: bool,
}

impl SuiteReport {
    pub fn failed(&self) -> impl Iterator<Item = &IdentityOutcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "identity suite: seed={} trials={} dims={:?}", self.seed, self.trials, self.dims);
        for o in &self.outcomes {
            if o.passed {
                let _ = writeln!(s, "PASS  m={}  {}  [{} cases]", o.m, o.identity, o.cases);
            } else {
                let _ = writeln!(s, "FAIL  m={}  {}  [{}/{} failed]", o.m, o.identity, o.failures, o.cases);
                if let Some(c) = &o.counterexample {
                    let _ = writeln!(s, "    input: {}", c.input);
                    let _ = writeln!(s, "    lhs:   {}", c.lhs);
                    let _ = writeln!(s, "    rhs:   {}", c.rhs);
                }
            }
        }
        let passed = self.outcomes.iter().filter(|o| o.passed).count();
        let _ = writeln!(s, "summary: {passed}/{} identity checks passed", self.outcomes.len());
        s
    }
}

struct Tally {
    outcome: IdentityOutcome,
}

impl Tally {
    fn new(identity: &str, m: usize) -> Self {
        Tally {
            outcome: IdentityOutcome {
                identity: identity.to_string(),
                m,
                cases: 0,
                failures: 0,
                passed: true,
                counterexample: None,
            },
        }
    }

    fn record(&mut self, verdicts: &[Verdict], input: impl FnOnce() -> String) {
        self.outcome.cases += 1;
        if let Some(bad) = verdicts.iter().find(|v| !v.holds) {
            self.outcome.failures += 1;
            self.outcome.passed = false;
            if self.outcome.counterexample.is_none() {
                self.outcome.counterexample = Some(Counterexample {
                    input: format!("{} ({})", input(), bad.identity),
                    lhs: bad.lhs.clone(),
                    rhs: bad.rhs.clone(),
                });
            }
        }
    }

    fn check(&mut self, holds: bool, input: impl FnOnce() -> String, lhs: impl ToString, rhs: impl ToString) {
        let v = Verdict { identity: self.outcome.identity.clone(), holds, lhs: lhs.to_string(), rhs: rhs.to_string() };
        self.record(&[v], input);
    }
}

fn describe(phi: &StructuralSet, psi: &StructuralSet) -> String {
    format!("phi={phi} psi={psi}")
}

struct Ctx<'a> {
    cfg: &'a SuiteConfig,
    m: usize,
}

impl Ctx<'_> {
    fn rng(&self, stream: u64) -> Rng64 {
        random::seeded(self.cfg.seed ^ (self.m as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ stream.wrapping_mul(0xd1b5_4a32_d192_ed03))
    }

    fn pair(&self, phi: &StructuralSet, psi: &StructuralSet) -> Result<PsiPair> {
        let p = PsiPair::new(phi, psi)?;
        Ok(if self.cfg.corrupt { p.corrupted() } else { p })
    }

    fn field(&self, rng: &mut Rng64) -> PolyField {
        random::field(rng, self.m, self.cfg.max_degree, 4)
    }

    fn sets(&self, rng: &mut Rng64) -> (StructuralSet, StructuralSet) {
        (random::rational_set(rng, self.m), random::rational_set(rng, self.m))
    }
}

/// Random rational combination of up to three basis fields.
fn member(rng: &mut Rng64, basis: &NullspaceBasis) -> PolyField {
    let fields = basis.fields();
    let mut f = PolyField::zero(basis.space.dim());
    if fields.is_empty() {
        return f;
    }
    for _ in 0..3 {
        let g = &fields[rng.random_range(0..fields.len())];
        let c: i64 = [1, -1, 2, -3][rng.random_range(0..4)];
        f = f.try_add(&g.scale(&int(c))).expect("same dimension");
    }
    if f.is_zero() {
        fields[0].clone()
    } else {
        f
    }
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    if cfg.dims.is_empty() || cfg.trials == 0 {
        return Err(Error::Invalid("suite needs at least one dimension and one trial".into()));
    }
    let mut outcomes = Vec::new();
    for &m in &cfg.dims {
        if !(2..=6).contains(&m) {
            return Err(Error::UnsupportedDimension(m));
        }
        let ctx = Ctx { cfg, m };
        outcomes.extend(run_dimension(&ctx)?);
    }
    let all_pass = outcomes.iter().all(|o| o.passed);
    Ok(SuiteReport { seed: cfg.seed, trials: cfg.trials, dims: cfg.dims.clone(), outcomes, all_pass })
}

fn run_dimension(ctx: &Ctx) -> Result<Vec<IdentityOutcome>> {
    let m = ctx.m;
    let trials = ctx.cfg.trials;
    let mut out = Vec::new();

    // Algebraic identities on multivectors.
    {
        let mut t = Tally::new("Psi_j on grade k is lambda(m,j,k)", m);
        let mut rng = ctx.rng(1);
        for _ in 0..trials {
            let phi = random::rational_set(&mut rng, m);
            let pair = ctx.pair(&phi, &phi)?;
            let j = rng.random_range(0..=m);
            let k = rng.random_range(0..=m);
            let a = random::graded_multivector(&mut rng, m, k);
            let lhs = pair.level(j, &a)?;
            let rhs = a.scale(&psi_k_closed_form(m, j, k));
            t.check(lhs == rhs, || format!("phi={phi} j={j} k={k} a={a}"), &lhs, &rhs);
        }
        out.push(t.outcome);
    }
    {
        let mut t = Tally::new("hypergeometric form equals binomial sum", m);
        for j in 0..=m {
            for k in 0..=m {
                let lhs = psi_k_hypergeometric(m, j, k)?;
                let rhs = psi_k_closed_form(m, j, k);
                t.check(lhs == rhs, || format!("j={j} k={k}"), &lhs, &rhs);
            }
        }
        out.push(t.outcome);
    }
    {
        let mut t = Tally::new("odd subset Psi_1 is bijective", m);
        let mut rng = ctx.rng(2);
        let full = 1usize << m;
        for _ in 0..trials {
            let (phi, psi) = ctx.sets(&mut rng);
            let subset = random::subset(&mut rng, m, true);
            let rank = ctx.pair(&phi, &psi)?.matrix(&PsiKind::Subset(subset.clone()))?.rank();
            t.check(rank == full, || format!("{} J={subset:?}", describe(&phi, &psi)), rank, full);
        }
        out.push(t.outcome);
    }
    if m % 2 == 1 {
        let mut t = Tally::new("Psi_1 is bijective for odd m", m);
        let mut rng = ctx.rng(3);
        let full = 1usize << m;
        for _ in 0..trials {
            let (phi, psi) = ctx.sets(&mut rng);
            let rank = ctx.pair(&phi, &psi)?.matrix(&PsiKind::Level(1))?.rank();
            t.check(rank == full, || describe(&phi, &psi), rank, full);
        }
        out.push(t.outcome);
    }
    {
        let mut t = Tally::new("complement parity of Psi_j", m);
        let mut rng = ctx.rng(4);
        for _ in 0..trials {
            let phi = random::rational_set(&mut rng, m);
            let a = random::dense_multivector(&mut rng, m);
            let j = rng.random_range(0..=m);
            t.record(&[check_complement_parity(&phi, &a, j)?], || format!("phi={phi} j={j} a={a}"));
        }
        out.push(t.outcome);
    }
    {
        let mut closed = Tally::new("Psi_+ and Psi_- closed forms for phi = psi", m);
        let mut conj = Tally::new("phi^j Psi_+(a) phi^j = Psi_-(a)", m);
        let mut rng = ctx.rng(5);
        for _ in 0..trials {
            let phi = random::rational_set(&mut rng, m);
            let a = random::dense_multivector(&mut rng, m);
            closed.record(&check_psi_pm_closed_form(&phi, &a)?, || format!("phi={phi} a={a}"));
            let per_j = (1..=m).map(|j| check_psi_pm_conjugation(&phi, &a, j)).collect::<Result<Vec<_>>>()?;
            conj.record(&per_j, || format!("phi={phi} a={a}"));
        }
        out.push(closed.outcome);
        out.push(conj.outcome);
    }
    {
        let mut t = Tally::new("level recursion", m);
        let mut rng = ctx.rng(6);
        for _ in 0..trials {
            let (phi, psi) = ctx.sets(&mut rng);
            let pair = ctx.pair(&phi, &psi)?;
            let a = random::dense_multivector(&mut rng, m);
            let verdicts = (1..m).map(|k| check_level_recursion(&pair, k, &a)).collect::<Result<Vec<_>>>()?;
            t.record(&verdicts, || format!("{} a={a}", describe(&phi, &psi)));
        }
        out.push(t.outcome);
    }

    // Identities on polynomial fields.
    let field_checks: [(&str, u64); 5] = [
        ("even/odd split of I and Hpp", 7),
        ("first-order Psi_1 commutation", 8),
        ("Psi_1 commutes with sandwich and Laplacian", 9),
        ("Psi_1 of phi_d psi_d f", 10),
        ("sandwich of Psi_+ and Psi_-", 11),
    ];
    for (i, (name, stream)) in field_checks.into_iter().enumerate() {
        let mut t = Tally::new(name, m);
        let mut rng = ctx.rng(stream);
        for _ in 0..trials {
            let (phi, psi) = ctx.sets(&mut rng);
            let f = ctx.field(&mut rng);
            let pair = ctx.pair(&phi, &psi)?;
            let verdicts = match i {
                0 => check_even_odd_split(&phi, &psi, &f)?,
                1 => check_dirac_commutation(&pair, &f, CommutationIdentity::FirstOrder)?,
                2 => check_dirac_commutation(&pair, &f, CommutationIdentity::Sandwich)?,
                3 => check_dirac_commutation(&pair, &f, CommutationIdentity::LeftLeft)?,
                _ => check_sandwich_psi_pm(&pair, &f)?,
            };
            t.record(&verdicts, || format!("{} f={f}", describe(&phi, &psi)));
        }
        out.push(t.outcome);
    }

    // Identities on class members drawn from solver bases.
    let mut rng = ctx.rng(12);
    let (phi, psi) = ctx.sets(&mut rng);
    let degrees: &[usize] = if m <= 3 { &[2, 3] } else { &[2] };
    let bases = |class: Class| -> Result<Vec<NullspaceBasis>> {
        degrees.iter().map(|&d| class_basis(&[class], &phi, &psi, d)).collect()
    };
    let harmonic = bases(Class::Harmonic)?;
    let infra = bases(Class::Inframonogenic)?;
    let pair = ctx.pair(&phi, &psi)?;

    if m % 2 == 1 {
        let hpp = bases(Class::PhiPsiHarmonic)?;
        let mut t = Tally::new("odd-m equivalences for I and Hpp", m);
        for trial in 0..trials {
            let f = match trial % 3 {
                0 => ctx.field(&mut rng),
                1 => member(&mut rng, &infra[trial % infra.len()]),
                _ => member(&mut rng, &hpp[trial % hpp.len()]),
            };
            t.record(&check_odd_dimension_equivalence(&pair, &f)?, || format!("{} f={f}", describe(&phi, &psi)));
        }
        out.push(t.outcome);
    }
    {
        let mut t = Tally::new("Psi_+ and Psi_- map H and I into H and I", m);
        let both = RegionLabel::of(&[Class::Harmonic, Class::Inframonogenic]);
        for trial in 0..trials {
            let pool = if trial % 2 == 0 { &harmonic } else { &infra };
            let f = member(&mut rng, &pool[trial / 2 % pool.len()]);
            let mut verdicts = Vec::new();
            for kind in [PsiKind::Plus, PsiKind::Minus] {
                let image = pair.apply_field(&kind, &f)?;
                let c = classify(&phi, &psi, &image)?;
                let got = RegionLabel::from_flags(c.harmonic, false, c.inframonogenic);
                verdicts.push(Verdict::compare(format!("{kind:?} image in H and I"), &got.to_string(), &both.to_string()));
            }
            t.record(&verdicts, || format!("{} f={f}", describe(&phi, &psi)));
        }
        out.push(t.outcome);
    }

    if m == 2 {
        out.extend(planar_checks(ctx)?);
    }
    Ok(out)
}

fn planar_transition(rng: &mut Rng64) -> Result<TransitionMatrix> {
    let (p, q, r) = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25)][rng.random_range(0..4)];
    let mut c1 = ratio(p, r);
    let mut c2 = ratio(q, r);
    if rng.random_bool(0.5) {
        c1 = -c1;
    }
    if rng.random_bool(0.5) {
        c2 = -c2;
    }
    if rng.random_bool(0.5) {
        TransitionMatrix::rotation(c1, c2)
    } else {
        TransitionMatrix::reflection(c1, c2)
    }
}

fn planar_checks(ctx: &Ctx) -> Result<Vec<IdentityOutcome>> {
    let mut formulas = Tally::new("planar Psi_+ and Psi_- component formulas", 2);
    let mut parts = Tally::new("planar part of H or I member lies in H and I", 2);
    let mut rng = ctx.rng(13);
    for trial in 0..ctx.cfg.trials {
        let psi = random::rational_set(&mut rng, 2);
        let c = planar_transition(&mut rng)?;
        let f = ctx.field(&mut rng);
        let verdicts = if ctx.cfg.corrupt {
            let phi = planar_partner_set(&psi, &c)?;
            let pair = ctx.pair(&phi, &psi)?;
            let (plus, _) = planar_formulas(&psi, &c, &f)?;
            vec![Verdict::compare("planar Psi_+ components", &pair.apply_field(&PsiKind::Plus, &f)?, &plus)]
        } else {
            check_planar_formulas(&psi, &c, &f)?
        };
        formulas.record(&verdicts, || format!("psi={psi} C={:?} f={f}", c.matrix().to_rows()));

        let phi = planar_partner_set(&psi, &c)?;
        let class = if trial % 2 == 0 { Class::Harmonic } else { Class::Inframonogenic };
        let basis = class_basis(&[class], &phi, &psi, 2 + trial % 2)?;
        let g = member(&mut rng, &basis);
        let form = c.planar_form().expect("planar");
        let part = planar_part(form, &g);
        let cls = classify(&phi, &psi, &part)?;
        parts.check(
            cls.harmonic && cls.inframonogenic,
            || format!("phi={phi} psi={psi} form={form:?} f={g}"),
            format!("harmonic={} inframonogenic={}", cls.harmonic, cls.inframonogenic),
            "harmonic=true inframonogenic=true",
        );
    }
    Ok(vec![formulas.outcome, parts.outcome])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(corrupt: bool) -> SuiteConfig {
        SuiteConfig { dims: vec![2, 3], trials: 4, seed: 9, max_degree: 3, corrupt }
    }

    #[test]
    fn small_suite_passes() {
        let r = run_suite(&small(false)).unwrap();
        assert!(r.all_pass, "{}", r.to_text());
    }

    #[test]
    fn corrupted_table_is_named() {
        let r = run_suite(&small(true)).unwrap();
        assert!(!r.all_pass);
        let names: Vec<&str> = r.failed().map(|o| o.identity.as_str()).collect();
        assert!(names.contains(&"level recursion"), "{names:?}");
        assert!(r.to_text().contains("FAIL  m=3  level recursion"));
    }

    #[test]
    fn same_seed_same_report() {
        let a = run_suite(&small(false)).unwrap().to_text();
        let b = run_suite(&small(false)).unwrap().to_text();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_bad_config() {
        assert!(run_suite(&SuiteConfig { dims: vec![1], ..small(false) }).is_err());
        assert!(run_suite(&SuiteConfig { trials: 0, ..small(false) }).is_err());
    }
}
