//! Command-line front end. Every subcommand produces a report that renders
//! either in human notation or as stable `key=value` lines.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::abgroups::{abelianize_presentation, sl2_amalgam_presentation, FiniteAbelianGroup, GroupElement};
use crate::endoclass::{classify_loaded, ClassifierVerdict, SPOT_CHECK_SEED};
use crate::error::{Error, Result};
use crate::matrices::MatrixOrder;
use crate::mcg::{mcg_structure, omega, splitting_decision, torelli_invariants, Extension, OmegaDescription, Torus};
use crate::spheres::{bp_in_table_range, bp_order, render_row, theta_record};
use crate::steinberg::{build_counterexample_rep, closure_order, parse_candidate, steinberg_presentation};

#[derive(Parser, Debug)]
#[command(name = "sltorus", version, about = "SL_d(Z), homotopy spheres and exotic tori")]
pub struct Cli {
    /// Output style.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Preset {
    Sl2,
    Sl3,
    Sl4,
    Sl5,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print Θ_d and its split subgroup for a range of dimensions (d = 4 is skipped).
    SpheresTable {
        #[arg(long, default_value_t = 1)]
        from: usize,
        #[arg(long, default_value_t = 19)]
        to: usize,
    },
    /// Order of bP_{d+1} from the Bernoulli formula.
    Bp {
        #[arg(long)]
        dim: usize,
    },
    /// Whether the homology action for T^d # Σ splits. Coordinates are comma separated.
    Split {
        #[arg(long)]
        dim: usize,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
    },
    /// Classify an endomorphism of SL_d(Z) given as a candidate file.
    ClassifyEndo {
        #[arg(long)]
        file: PathBuf,
        /// Seed for the random words used to spot-check the conjugation.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check the Steinberg relations for a candidate file.
    VerifyHom {
        #[arg(long)]
        file: PathBuf,
    },
    /// Build the nontrivial finite-image homomorphism over Q(sqrt(-7)) and report on it.
    Counterexample {
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
    },
    /// Number of invariant factors of the SL_d(Z)-fixed part of Λ^r Z^d ⊗ Z/n.
    Invariants {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        wedge: usize,
        #[arg(long = "mod")]
        modulus: u64,
    },
    /// Mapping class group of T^d # Σ.
    Mcg {
        #[arg(long)]
        dim: usize,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, allow_hyphen_values = true)]
        eta_sigma: String,
    },
    /// Abelianization of a stored presentation.
    Abelianize {
        #[arg(long, value_enum)]
        preset: Preset,
    },
    /// The Torelli module Ω of the standard torus.
    Omega {
        #[arg(long)]
        dim: usize,
    },
}

/// Report as ordered key/value pairs plus its human rendering.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub fields: Vec<(String, String)>,
    pub human: String,
}

impl Report {
    fn field(&mut self, key: impl Into<String>, value: impl ToString) {
        self.fields.push((key.into(), value.to_string().replace('\n', "; ")));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Human => self.human.clone(),
            Format::Machine => self.fields.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join("\n"),
        }
    }
}

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
/// Usage errors exit with 2, errors from the computation with 1.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli.command) {
        Ok(report) => Outcome { code: 0, stdout: report.render(cli.format) + "\n", stderr: String::new() },
        Err(e) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

pub fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::SpheresTable { from, to } => spheres_table(*from, *to),
        Command::Bp { dim } => bp(*dim),
        Command::Split { dim, sigma } => split(*dim, sigma),
        Command::ClassifyEndo { file, seed } => classify(file, seed.unwrap_or(SPOT_CHECK_SEED)),
        Command::VerifyHom { file } => verify(file),
        Command::Counterexample { cap } => counterexample(*cap),
        Command::Invariants { dim, wedge, modulus } => invariants(*dim, *wedge, *modulus),
        Command::Mcg { dim, sigma, eta_sigma } => mcg(*dim, sigma, eta_sigma),
        Command::Abelianize { preset } => abelianize(*preset),
        Command::Omega { dim } => omega_report(*dim),
    }
}

/// Comma-separated integers; the empty string is the empty tuple.
pub fn parse_coords(s: &str) -> Result<Vec<i64>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Domain(format!("'{t}' is not an integer coordinate"))))
        .collect()
}

/// Element of `g` with the given coordinates; a single `0` names the
/// identity of the trivial group.
fn element_in(g: &FiniteAbelianGroup, s: &str) -> Result<GroupElement> {
    let coords = parse_coords(s)?;
    if g.rank() == 0 && coords.iter().all(|&c| c == 0) {
        return Ok(g.identity());
    }
    g.element(&coords)
}

fn spheres_table(from: usize, to: usize) -> Result<Report> {
    if from == 0 || from > to {
        return Err(Error::Domain(format!("need 1 <= from <= to, got from={from}, to={to}")));
    }
    let mut r = Report::default();
    let mut rows = Vec::new();
    for d in (from..=to).filter(|&d| d != 4) {
        let rec = theta_record(d)?;
        r.field(format!("theta_{d}"), rec.theta_string());
        r.field(format!("theta_split_{d}"), rec.split_string());
        rows.push(render_row(&rec));
    }
    r.human = rows.join("\n");
    Ok(r)
}

fn bp(d: usize) -> Result<Report> {
    let order = bp_order(d)?;
    let mut r = Report::default();
    r.field("dim", d);
    r.field("bp", &order);
    let in_table = bp_in_table_range(d);
    r.field("source", if in_table { "formula, table range" } else { "formula-only" });
    r.human = if in_table { order.to_string() } else { format!("{order} (formula-only)") };
    Ok(r)
}

fn split(d: usize, sigma: &str) -> Result<Report> {
    let torus = Torus::ConnectedSum(element_in(&theta_record(d)?.theta, sigma)?);
    let v = splitting_decision(d, &torus)?;
    let mut r = Report::default();
    r.field("dim", d);
    r.field("sigma", sigma);
    r.field("split", v.split);
    r.field("reason", &v.reason);
    r.human = format!("{}\n{}", if v.split { "split" } else { "not split" }, v.reason);
    Ok(r)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Input { path: path.display().to_string(), message: e.to_string() })
}

fn classify(file: &Path, seed: u64) -> Result<Report> {
    let cand = parse_candidate(&read(file)?)?;
    let report = classify_loaded(&cand, seed)?;
    let mut r = Report::default();
    r.field("dim", cand.d());
    match &report.verdict {
        ClassifierVerdict::Trivial => r.field("verdict", "trivial"),
        ClassifierVerdict::Automorphism { conjugator, used_inverse_transpose } => {
            r.field("verdict", "automorphism");
            r.field("conjugator", conjugator);
            r.field("inverse_transpose", used_inverse_transpose);
        }
        ClassifierVerdict::Rejected { reason } => {
            r.field("verdict", "rejected");
            r.field("reason", reason);
        }
    }
    for (i, s) in report.stages.iter().enumerate() {
        r.field(format!("stage.{}", i + 1), s);
    }
    r.human = report.verdict.to_string();
    Ok(r)
}

fn verify(file: &Path) -> Result<Report> {
    let cand = parse_candidate(&read(file)?)?;
    let report = cand.verify_hom()?;
    let mut r = Report::default();
    r.field("dim", cand.d());
    r.field("domain", cand.domain());
    r.field("result", if report.passed() { "pass" } else { "fail" });
    r.field("relators_checked", report.relators_checked);
    r.field("failures", report.failures.len());
    for (i, f) in report.failures.iter().enumerate() {
        r.field(format!("failure.{}", i + 1), format!("{}: {}", f.relator, f.reason));
    }
    r.human = report.to_string();
    Ok(r)
}

fn counterexample(cap: u64) -> Result<Report> {
    let h = build_counterexample_rep();
    let report = h.verify_hom()?;
    let mut r = Report::default();
    let mut human = vec![format!("field: {}", h.domain()), format!("relations: {report}")];
    r.field("field", h.domain());
    r.field("relations", if report.passed() { "pass" } else { "fail" });
    r.field("relators_checked", report.relators_checked);
    let mut orders = Vec::new();
    for (g, m) in h.images() {
        let o = match m.order(cap)? {
            MatrixOrder::Finite(n) => n.to_string(),
            MatrixOrder::Unbounded => "infinite".to_string(),
        };
        r.field(format!("order.{g}"), &o);
        orders.push(format!("{g}={o}"));
    }
    human.push(format!("generator orders: {}", orders.join(" ")));
    let closure = closure_order(&h, cap)?;
    r.field("closure_cap", cap);
    r.field("closure_order", closure);
    human.push(format!("image order: {closure} (cap {cap})"));
    r.human = human.join("\n");
    Ok(r)
}

fn invariants(d: usize, wedge: usize, n: u64) -> Result<Report> {
    let inv = torelli_invariants(d, wedge, n)?;
    let mut r = Report::default();
    r.field("dim", d);
    r.field("wedge", wedge);
    r.field("mod", n);
    r.field("count", inv.count());
    let factors: Vec<String> = inv.factors.iter().map(u64::to_string).collect();
    r.field("factors", factors.join(","));
    r.human = inv.count().to_string();
    Ok(r)
}

fn omega_fields(r: &mut Report, o: &OmegaDescription) {
    for s in &o.wedge_summands {
        r.field(format!("summand.{}", s.j), format!("{} x {}", s.multiplicity, s.label));
    }
    r.field("two_torsion", format!("{} x Z/2", o.two_torsion_multiplicity));
    r.field("finite_order", o.finite_order());
}

fn mcg(d: usize, sigma: &str, eta_sigma: &str) -> Result<Report> {
    let s = element_in(&theta_record(d)?.theta, sigma)?;
    let e = element_in(&theta_record(d + 1)?.theta, eta_sigma)?;
    let m = mcg_structure(d, &s, &e)?;
    let mut r = Report::default();
    r.field("dim", d);
    r.field("extension", if m.extension == Extension::Sl { "SL" } else { "SLbar" });
    omega_fields(&mut r, &m.quotient);
    r.field("killed_order", &m.killed_order);
    r.field("split", m.splitting);
    r.human = m.to_string();
    Ok(r)
}

fn abelianize(preset: Preset) -> Result<Report> {
    let (gens, rels) = match preset {
        Preset::Sl2 => sl2_amalgam_presentation(),
        Preset::Sl3 => steinberg_presentation(3)?,
        Preset::Sl4 => steinberg_presentation(4)?,
        Preset::Sl5 => steinberg_presentation(5)?,
    };
    let h1 = abelianize_presentation(&gens, &rels)?;
    let mut r = Report::default();
    r.field("preset", format!("{preset:?}").to_lowercase());
    r.field("generators", gens.len());
    r.field("relators", rels.len());
    r.field("h1", &h1);
    r.human = h1.to_string();
    Ok(r)
}

fn omega_report(d: usize) -> Result<Report> {
    let o = omega(d)?;
    let mut r = Report::default();
    r.field("dim", d);
    omega_fields(&mut r, &o);
    r.human = o.render();
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn out(args: &[&str]) -> Outcome {
        run(std::iter::once("sltorus").chain(args.iter().copied()))
    }

    #[test]
    fn coordinates() {
        assert_eq!(parse_coords("1,-2, 3").unwrap(), vec![1, -2, 3]);
        assert_eq!(parse_coords("(0,1)").unwrap(), vec![0, 1]);
        assert!(parse_coords("").unwrap().is_empty());
        assert!(parse_coords("1,x").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(out(&["bp", "--dim", "7"]).stdout, "28\n");
        assert_eq!(out(&["bp"]).code, 2);
        assert_eq!(out(&["frobnicate"]).code, 2);
        assert_eq!(out(&["bp", "--dim", "3"]).code, 1);
        assert_eq!(out(&["omega", "--dim", "19"]).code, 1);
        assert_eq!(out(&["--help"]).code, 0);
    }

    #[test]
    fn machine_format() {
        let o = out(&["--format", "machine", "invariants", "--dim", "3", "--wedge", "3", "--mod", "5"]);
        assert_eq!(o.stdout, "dim=3\nwedge=3\nmod=5\ncount=1\nfactors=5\n");
        let o = out(&["mcg", "--dim", "12", "--sigma", "0", "--eta-sigma", "0", "--format", "machine"]);
        assert!(o.stdout.contains("extension=SL\n"), "{o:?}");
    }
}
