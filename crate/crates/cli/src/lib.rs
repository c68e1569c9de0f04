//! Argument model and command execution for the `cliffan` binary. Commands
//! return their output instead of printing so they can be tested directly.

use std::fmt::Write as _;
use std::fs;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cliffan::demo::run_demo;
use cliffan::rational::parse_rational;
use cliffan::solver::solve;
use cliffan::suite::{run_suite, SuiteConfig};
use cliffan::{classify, PolyField, RegionLabel, StructuralSet, MAX_DIM};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "cliffan", version, about = "Exact Clifford analysis: identity checks, classification and class solver")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the seeded identity suite.
    Verify(VerifyArgs),
    /// Classify a polynomial field.
    Classify(ClassifyArgs),
    /// Class dimensions and region witnesses on homogeneous fields.
    Solve(SolveArgs),
    /// Replay the worked examples.
    Demo(DemoArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Dimensions to check, comma separated.
    #[arg(long = "m", value_delimiter = ',', default_values_t = [2, 3, 4, 5])]
    pub m: Vec<usize>,
    #[arg(long, default_value_t = 50)]
    pub trials: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Maximum degree of random fields.
    #[arg(long, default_value_t = 4)]
    pub degree: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Flip one sign in the Psi tables (negative control).
    #[arg(long, hide = true)]
    pub corrupt: bool,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[arg(long = "m", default_value_t = 3)]
    pub m: usize,
    #[arg(long, default_value = "standard")]
    pub phi: String,
    #[arg(long, default_value = "standard")]
    pub psi: String,
    #[arg(long)]
    pub expr: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[arg(long = "m", default_value_t = 3)]
    pub m: usize,
    #[arg(long, default_value_t = 2)]
    pub degree: usize,
    #[arg(long, default_value = "standard")]
    pub phi: String,
    #[arg(long, default_value = "standard")]
    pub psi: String,
    /// Region to find a witness for, e.g. `H,I` or `none`; repeatable; `all` for all eight.
    #[arg(long)]
    pub region: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct DemoArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

/// Parses a structural-set spec:
/// `standard`, `reversed`, `signedperm:3,-2,1`, `rot2:3/5`, `refl2:3/5`,
/// `matrix:<path>` (JSON rows of rational strings) or `vectors:<path>`
/// (JSON list of multivector strings).
pub fn parse_set(spec: &str, m: usize) -> Result<StructuralSet, String> {
    let (kind, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let set = match kind {
        "standard" => StructuralSet::standard(m),
        "reversed" => StructuralSet::reversed(m),
        "signedperm" => {
            let idx = arg
                .split([',', ' '])
                .filter(|s| !s.is_empty())
                .map(|s| s.trim().parse::<i64>().map_err(|_| format!("bad index {s:?} in {spec:?}")))
                .collect::<Result<Vec<_>, _>>()?;
            StructuralSet::signed_permutation(&idx)
        }
        "rot2" | "refl2" => {
            let c1 = parse_rational(arg).map_err(|e| e.to_string())?;
            if kind == "rot2" {
                StructuralSet::rotation2(c1)
            } else {
                StructuralSet::reflection2(c1)
            }
        }
        "matrix" | "vectors" => {
            let text = fs::read_to_string(arg).map_err(|e| format!("cannot read {arg:?}: {e}"))?;
            if kind == "matrix" {
                StructuralSet::from_json_matrix(&text)
            } else {
                StructuralSet::from_json_vectors(&text)
            }
        }
        _ => return Err(format!("unknown structural set {spec:?}")),
    }
    .map_err(|e| format!("{spec}: {e}"))?;
    if set.dim() != m {
        return Err(format!("{spec} has dimension {}, expected m={m}", set.dim()));
    }
    Ok(set)
}

fn check_m(m: usize) -> Result<(), String> {
    if (1..=MAX_DIM).contains(&m) {
        Ok(())
    } else {
        Err(format!("m must be between 1 and {MAX_DIM}, got {m}"))
    }
}

fn sets(m: usize, phi: &str, psi: &str) -> Result<(StructuralSet, StructuralSet), String> {
    check_m(m)?;
    Ok((parse_set(phi, m)?, parse_set(psi, m)?))
}

fn json(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Verify(a) => verify(a),
        Command::Classify(a) => classify_cmd(a),
        Command::Solve(a) => solve_cmd(a),
        Command::Demo(a) => demo(a),
    }
}

fn verify(a: VerifyArgs) -> Outcome {
    let cfg = SuiteConfig { dims: a.m, trials: a.trials, seed: a.seed, max_degree: a.degree, corrupt: a.corrupt };
    let report = match run_suite(&cfg) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let stdout = match a.format {
        Format::Text => report.to_text(),
        Format::Json => json(&report),
    };
    Outcome { code: if report.all_pass { EXIT_OK } else { EXIT_FAILED }, stdout, stderr: String::new() }
}

fn classify_cmd(a: ClassifyArgs) -> Outcome {
    let (phi, psi) = match sets(a.m, &a.phi, &a.psi) {
        Ok(s) => s,
        Err(e) => return Outcome::usage(e),
    };
    let f = match PolyField::parse(&a.expr, a.m) {
        Ok(f) => f,
        Err(e) => return Outcome::usage(e),
    };
    let c = match classify(&phi, &psi, &f) {
        Ok(c) => c,
        Err(e) => return Outcome::usage(e),
    };
    Outcome::ok(match a.format {
        Format::Json => json(&c.report()),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "field: {f}");
            let _ = writeln!(s, "phi: {phi}");
            let _ = writeln!(s, "psi: {psi}");
            let _ = writeln!(s, "harmonic: {}", c.harmonic);
            let _ = writeln!(s, "phi_psi_harmonic: {}", c.phi_psi_harmonic);
            let _ = writeln!(s, "inframonogenic: {}", c.inframonogenic);
            let _ = writeln!(s, "hyperholomorphic_left: {}", c.hyperholomorphic_left);
            let _ = writeln!(s, "hyperholomorphic_right: {}", c.hyperholomorphic_right);
            let _ = writeln!(s, "region: {}", c.region());
            s
        }
    })
}

fn parse_regions(specs: &[String]) -> Result<Vec<RegionLabel>, String> {
    let mut out = Vec::new();
    for spec in specs {
        if spec.trim() == "all" {
            out.extend(RegionLabel::all());
        } else {
            out.push(spec.parse::<RegionLabel>().map_err(|e| e.to_string())?);
        }
    }
    Ok(out)
}

fn solve_cmd(a: SolveArgs) -> Outcome {
    let (phi, psi) = match sets(a.m, &a.phi, &a.psi) {
        Ok(s) => s,
        Err(e) => return Outcome::usage(e),
    };
    let regions = match parse_regions(&a.region) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let report = match solve(&phi, &psi, a.degree, &regions) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    Outcome::ok(match a.format {
        Format::Json => json(&report),
        Format::Text => {
            let d = &report.dims;
            let mut s = String::new();
            let _ = writeln!(s, "m={} degree={} space dimension {}", report.m, report.d, d.total);
            let _ = writeln!(s, "phi: {phi}");
            let _ = writeln!(s, "psi: {psi}");
            for (name, v) in [
                ("H", d.h),
                ("Hpp", d.hpp),
                ("I", d.i),
                ("H∩Hpp", d.h_hpp),
                ("H∩I", d.h_i),
                ("Hpp∩I", d.hpp_i),
                ("triple", d.triple),
            ] {
                let _ = writeln!(s, "dim {name}: {v}");
            }
            for (region, w) in report.witness_regions.iter().zip(&report.witnesses) {
                let _ = writeln!(s, "witness {region}: {w}");
            }
            for region in &report.not_found {
                let _ = writeln!(s, "witness {region}: not found (bounded search at this degree)");
            }
            s
        }
    })
}

fn demo(a: DemoArgs) -> Outcome {
    let report = match run_demo() {
        Ok(r) => r,
        Err(e) => return Outcome { code: EXIT_FAILED, stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    let stdout = match a.format {
        Format::Text => report.to_text(),
        Format::Json => json(&report),
    };
    Outcome { code: if report.all_pass { EXIT_OK } else { EXIT_FAILED }, stdout, stderr: String::new() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_specs() {
        assert_eq!(parse_set("reversed", 3).unwrap(), StructuralSet::reversed(3).unwrap());
        assert_eq!(parse_set("signedperm:3,2,1", 3).unwrap(), StructuralSet::reversed(3).unwrap());
        assert!(parse_set("rot2:3/5", 2).is_ok());
        assert!(parse_set("refl2:5/13", 2).is_ok());
        assert!(parse_set("rot2:1/2", 2).is_err());
        assert!(parse_set("rot2:3/5", 3).is_err());
        assert!(parse_set("signedperm:1,1,2", 3).is_err());
        assert!(parse_set("bogus", 3).is_err());
        assert!(parse_set("matrix:/nonexistent.json", 2).is_err());
    }

    #[test]
    fn regions() {
        assert_eq!(parse_regions(&["all".into()]).unwrap().len(), 8);
        assert_eq!(parse_regions(&["H,I".into(), "none".into()]).unwrap().len(), 2);
        assert!(parse_regions(&["X".into()]).is_err());
    }
}
