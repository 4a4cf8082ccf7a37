//! Command-line front end.
//!
//! Exit codes: 0 when the command succeeds and the checked property holds,
//! 1 when the property fails, 2 on usage or parse errors.

pub mod format;
pub mod parse;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use rayon::prelude::*;

use crate::conditions::{
    g_from_u, modified_evidence_search, modified_residual, riccati_descent, star_residual,
    theorem2_solutions, CandidateSource,
};
use crate::painleve::{preset, verify_p3, FamilyId, FamilyParams};
use crate::polyring::{format_rational, Poly, Rational};
use crate::recurrence::{
    certificate, hirota_generate, somos_generate, HCoeffs, HirotaSpec, SomosSpec,
};

pub use format::{poly_latex, PolyJson, ReportJson};
pub use parse::{parse_poly, parse_rational, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "hirota",
    version,
    about = "Exact bilinear-recurrence polynomials, Somos sequences and polynomiality conditions"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long, value_parser = parse_family)]
    family: FamilyId,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    v: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    f: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    p0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    p1: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Generate P_0..P_n for a preset or custom family.
    Generate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Terms a_0..a_n of a Somos-k sequence as CSV.
    Somos {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Comma-separated rationals; defaults to k ones.
        #[arg(long, allow_hyphen_values = true)]
        seeds: Option<String>,
        /// Exit 1 if any term is not an integer.
        #[arg(long)]
        expect_integral: bool,
    },
    /// Evaluate the polynomiality condition for (f, g).
    CheckStar {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        beta: String,
    },
    /// All polynomial g satisfying the condition for a given f.
    SolveG {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        beta: String,
    },
    /// Search for solutions of the beta = 1 condition by degree of f.
    Search {
        #[arg(long)]
        deg_min: usize,
        #[arg(long)]
        deg_max: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        rng_seed: u64,
    },
    /// Substitute the rational P_III solution into its ODE.
    VerifyP3 {
        #[arg(long)]
        n: usize,
        /// One or more comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// Strict run: exact divisions and constant gcds up to P_n.
    Certify {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: u64,
    },
}

fn parse_family(s: &str) -> Result<FamilyId, String> {
    s.parse()
        .map_err(|e: crate::painleve::PainleveError| e.to_string())
}

struct Failure {
    code: i32,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        msg: msg.into(),
    }
}

fn poly_arg(name: &str, text: &str) -> Result<Poly, Failure> {
    parse_poly(text).map_err(|e| usage(format!("--{name}: {e}")))
}

fn rational_arg(name: &str, text: &str) -> Result<Rational, Failure> {
    parse_rational(text).map_err(|e| usage(format!("--{name}: {e}")))
}

fn rational_list_arg(name: &str, text: &str) -> Result<Vec<Rational>, Failure> {
    text.split(',')
        .map(|t| rational_arg(name, t.trim()))
        .collect()
}

fn build_spec(a: &FamilyArgs) -> Result<HirotaSpec, Failure> {
    let custom_only = [
        ("f", &a.f),
        ("g", &a.g),
        ("p", &a.p),
        ("alpha", &a.alpha),
        ("beta", &a.beta),
        ("p0", &a.p0),
        ("p1", &a.p1),
    ];
    if a.family != FamilyId::Custom {
        if let Some((name, _)) = custom_only.iter().find(|(_, v)| v.is_some()) {
            return Err(usage(format!("--{name} only applies to --family custom")));
        }
        let params = FamilyParams {
            c: a.c.as_deref().map(|t| rational_arg("c", t)).transpose()?,
            v: a.v.as_deref().map(|t| rational_arg("v", t)).transpose()?,
        };
        return preset(a.family, &params).map_err(|e| usage(e.to_string()));
    }
    let need = |name: &str, v: &Option<String>| -> Result<Poly, Failure> {
        match v {
            Some(t) => poly_arg(name, t),
            None => Err(usage(format!("--family custom needs --{name}"))),
        }
    };
    let opt_poly = |name: &str, v: &Option<String>| -> Result<Poly, Failure> {
        v.as_deref().map_or(Ok(Poly::one()), |t| poly_arg(name, t))
    };
    let opt_rat = |name: &str, v: &Option<String>| -> Result<Rational, Failure> {
        v.as_deref()
            .map_or(Ok(Rational::zero()), |t| rational_arg(name, t))
    };
    let h = HCoeffs::new(
        need("p", &a.p)?,
        opt_rat("alpha", &a.alpha)?,
        opt_rat("beta", &a.beta)?,
    );
    HirotaSpec::new(
        need("f", &a.f)?,
        need("g", &a.g)?,
        h,
        opt_poly("p0", &a.p0)?,
        opt_poly("p1", &a.p1)?,
    )
    .map_err(|e| usage(e.to_string()))
}

fn io(e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_FAILED,
        msg: format!("write failed: {e}"),
    }
}

fn dispatch(cmd: Cmd, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Cmd::Generate { family, n, format } => {
            let spec = build_spec(&family)?;
            let report = hirota_generate(&spec, n).map_err(|e| usage(e.to_string()))?;
            let json = ReportJson::new(family.family.name(), n, &report);
            let text = match format {
                Format::Json => format::to_json(&json) + "\n",
                Format::Csv => format::to_csv(&json, &report.entries),
                Format::Latex => format::to_latex(&report.entries),
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            if let Some(f) = &report.failure {
                writeln!(
                    err,
                    "step {}: P_{} does not divide the right-hand side",
                    f.n,
                    f.n - 1
                )
                .map_err(io)?;
                return Ok(EXIT_FAILED);
            }
            Ok(EXIT_OK)
        }
        Cmd::Somos {
            k,
            n,
            seeds,
            expect_integral,
        } => {
            let spec = match seeds {
                Some(s) => SomosSpec::new(k, rational_list_arg("seeds", &s)?, n),
                None => SomosSpec::unit(k, n),
            }
            .map_err(|e| usage(e.to_string()))?;
            let terms = somos_generate(&spec).map_err(|e| usage(e.to_string()))?;
            writeln!(out, "{}", format::rational_list(&terms)).map_err(io)?;
            if expect_integral {
                if let Some(i) = terms.iter().position(|t| !t.is_integer()) {
                    writeln!(
                        err,
                        "first non-integer term: a_{i} = {}",
                        format_rational(&terms[i])
                    )
                    .map_err(io)?;
                    return Ok(EXIT_FAILED);
                }
            }
            Ok(EXIT_OK)
        }
        Cmd::CheckStar { f, g, beta } => {
            let f = poly_arg("f", &f)?;
            let g = poly_arg("g", &g)?;
            let beta = rational_arg("beta", &beta)?;
            let rep = if beta.is_zero() {
                star_residual(&f, &g)
            } else {
                modified_residual(&f, &g, &beta)
            };
            writeln!(out, "residual: {}", rep.residual).map_err(io)?;
            writeln!(out, "satisfied: {}", rep.satisfied).map_err(io)?;
            Ok(if rep.satisfied { EXIT_OK } else { EXIT_FAILED })
        }
        Cmd::SolveG { f, beta } => {
            let f = poly_arg("f", &f)?;
            let beta = rational_arg("beta", &beta)?;
            let set = riccati_descent(&f, &beta).map_err(|e| usage(e.to_string()))?;
            let mut gs: Vec<Poly> = set.solutions.iter().map(|u| g_from_u(u, &f)).collect();
            gs.sort_by(Poly::canonical_cmp);
            for g in &gs {
                writeln!(out, "g: {g}").map_err(io)?;
            }
            for t in &set.contradiction_traces {
                writeln!(
                    out,
                    "contradiction: {} at coefficient {}",
                    t.branch, t.coefficient
                )
                .map_err(io)?;
            }
            if beta.is_zero() {
                let closed = theorem2_solutions(&f).map_err(|e| usage(e.to_string()))?;
                let agree = closed == gs;
                writeln!(out, "closed form agrees: {agree}").map_err(io)?;
                if !agree {
                    return Ok(EXIT_FAILED);
                }
            }
            Ok(EXIT_OK)
        }
        Cmd::Search {
            deg_min,
            deg_max,
            trials,
            rng_seed,
        } => {
            let rep = modified_evidence_search(deg_min, deg_max, trials, rng_seed)
                .map_err(|e| usage(e.to_string()))?;
            writeln!(out, "rng_seed: {rng_seed}").map_err(io)?;
            for d in &rep.degrees {
                writeln!(
                    out,
                    "degree {}: random {}/{} with solutions, structured {}/{} with solutions, contradicted {}, inconclusive {}",
                    d.degree,
                    d.random_with_solution,
                    d.random_candidates,
                    d.structured_with_solution,
                    d.structured_candidates,
                    d.contradicted,
                    d.inconclusive
                )
                .map_err(io)?;
                for pair in &d.found {
                    let src = match &pair.source {
                        CandidateSource::Random { trial } => format!("random #{trial}"),
                        CandidateSource::Structured { .. } => "structured".to_string(),
                    };
                    writeln!(out, "  f = {}, g = {} ({src})", pair.f, pair.g).map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Cmd::VerifyP3 { n, c } => {
            let cs = rational_list_arg("c", &c)?;
            let checks: Vec<_> = cs.par_iter().map(|c| verify_p3(n, c)).collect();
            let mut all = true;
            for chk in checks {
                let chk = chk.map_err(|e| usage(e.to_string()))?;
                writeln!(
                    out,
                    "n={} c={} a={} b={} residual={} pass={}",
                    chk.n,
                    format_rational(&chk.c),
                    format_rational(&chk.a),
                    format_rational(&chk.b),
                    chk.residual,
                    chk.pass
                )
                .map_err(io)?;
                all &= chk.pass;
            }
            Ok(if all { EXIT_OK } else { EXIT_FAILED })
        }
        Cmd::Certify { family, n } => {
            let spec = build_spec(&family)?;
            let cert = certificate(&spec, n).map_err(|e| usage(e.to_string()))?;
            for s in &cert.steps {
                writeln!(
                    out,
                    "step {}: divides={} coprime={} squarefree={}",
                    s.n, s.divides, s.coprime, s.squarefree
                )
                .map_err(io)?;
            }
            writeln!(out, "holds: {}", cert.holds()).map_err(io)?;
            Ok(if cert.holds() { EXIT_OK } else { EXIT_FAILED })
        }
    }
}

/// Runs one command line (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    match dispatch(cli.cmd, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}
