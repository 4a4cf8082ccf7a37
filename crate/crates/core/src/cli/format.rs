use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::polyring::{format_rational, Poly, Rational};
use crate::recurrence::{SequenceReport, StepFailure};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub variable: String,
    /// Ascending `[numerator, denominator]` pairs as decimal strings.
    pub coeffs: Vec<[String; 2]>,
}

impl From<&Poly> for PolyJson {
    fn from(p: &Poly) -> Self {
        Self {
            variable: "x".into(),
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| [c.numer().to_string(), c.denom().to_string()])
                .collect(),
        }
    }
}

impl TryFrom<&PolyJson> for Poly {
    type Error = String;

    fn try_from(j: &PolyJson) -> Result<Self, Self::Error> {
        if j.variable != "x" {
            return Err(format!("unsupported variable `{}`", j.variable));
        }
        let coeffs = j
            .coeffs
            .iter()
            .map(|[n, d]| {
                let n: BigInt = n.parse().map_err(|_| format!("bad numerator `{n}`"))?;
                let d: BigInt = d.parse().map_err(|_| format!("bad denominator `{d}`"))?;
                if d.is_zero() {
                    return Err("zero denominator".to_string());
                }
                Ok(Rational::new(n, d))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub n: u64,
    /// `null` for the zero polynomial.
    pub degree: Option<usize>,
    pub denominator_lcm: String,
    /// `gcd(P_n, P_{n+1})` constant; `null` for the last entry.
    pub coprime_with_next: Option<bool>,
    pub squarefree: bool,
    pub poly: PolyJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureJson {
    pub n: u64,
    pub remainder: PolyJson,
    pub divisor: PolyJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub family: String,
    pub horizon: u64,
    pub entries: Vec<EntryJson>,
    pub failure: Option<FailureJson>,
}

impl ReportJson {
    pub fn new(family: &str, horizon: u64, report: &SequenceReport) -> Self {
        let entries = report
            .entries
            .iter()
            .enumerate()
            .map(|(i, p)| EntryJson {
                n: i as u64,
                degree: report.degrees[i].finite(),
                denominator_lcm: p.denominator_lcm().to_string(),
                coprime_with_next: report.coprimality_flags.get(i).copied(),
                squarefree: report.squarefree_flags[i],
                poly: p.into(),
            })
            .collect();
        Self {
            family: family.to_string(),
            horizon,
            entries,
            failure: report.failure.as_ref().map(|f| FailureJson {
                n: f.n,
                remainder: (&f.remainder).into(),
                divisor: (&f.divisor).into(),
            }),
        }
    }

    pub fn to_report(&self) -> Result<SequenceReport, String> {
        let entries = self
            .entries
            .iter()
            .map(|e| Poly::try_from(&e.poly))
            .collect::<Result<Vec<_>, _>>()?;
        let failure = match &self.failure {
            Some(f) => Some(StepFailure {
                n: f.n,
                remainder: Poly::try_from(&f.remainder)?,
                divisor: Poly::try_from(&f.divisor)?,
            }),
            None => None,
        };
        Ok(SequenceReport {
            degrees: entries.iter().map(Poly::degree).collect(),
            coprimality_flags: self
                .entries
                .iter()
                .filter_map(|e| e.coprime_with_next)
                .collect(),
            squarefree_flags: self.entries.iter().map(|e| e.squarefree).collect(),
            entries,
            failure,
        })
    }
}

pub fn to_json(report: &ReportJson) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

fn opt_flag(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "true",
        Some(false) => "false",
        None => "",
    }
}

pub fn to_csv(report: &ReportJson, polys: &[Poly]) -> String {
    let mut s = String::from("n,degree,denominator_lcm,coprime_with_next,squarefree,poly\n");
    for (e, p) in report.entries.iter().zip(polys) {
        let deg = e.degree.map(|d| d.to_string()).unwrap_or_default();
        let _ = writeln!(
            s,
            "{},{},{},{},{},{}",
            e.n,
            deg,
            e.denominator_lcm,
            opt_flag(e.coprime_with_next),
            e.squarefree,
            p
        );
    }
    s
}

fn latex_coeff(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

/// Descending powers, fractions as `\frac`.
pub fn poly_latex(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if c.is_negative() {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if i == 0 || !mag.is_one() {
            s.push_str(&latex_coeff(&mag));
        }
        match i {
            0 => {}
            1 => s.push('x'),
            _ => {
                let _ = write!(s, "x^{{{i}}}");
            }
        }
    }
    s
}

pub fn to_latex(polys: &[Poly]) -> String {
    let mut s = String::from("\\begin{align*}\n");
    for (n, p) in polys.iter().enumerate() {
        let _ = writeln!(s, "P_{{{n}}} &= {} \\\\", poly_latex(p));
    }
    s.push_str("\\end{align*}\n");
    s
}

pub fn rational_list(values: &[Rational]) -> String {
    values
        .iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(",")
}
