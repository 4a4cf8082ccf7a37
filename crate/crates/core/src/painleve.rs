//! Ready-made recurrences for the Painlevé II–VI special polynomials, and
//! the rational Painlevé III solution built from Umemura polynomials.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::conditions::{modified_residual, star_residual, ResidualReport};
use crate::polyring::{Poly, PolyError, Rational, RationalFunction};
use crate::recurrence::{hirota_generate, HCoeffs, HirotaSpec, RecurrenceError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    /// Yablonskii–Vorob'ev.
    P2,
    /// Umemura polynomials for P_III.
    P3,
    /// P_IV with seeds (1, 1).
    P4a,
    /// P_IV with seeds (1, x).
    P4b,
    P5,
    P6,
    Custom,
}

impl FamilyId {
    pub const PRESETS: [FamilyId; 6] = [
        FamilyId::P2,
        FamilyId::P3,
        FamilyId::P4a,
        FamilyId::P4b,
        FamilyId::P5,
        FamilyId::P6,
    ];

    pub fn needs_c(self) -> bool {
        matches!(self, FamilyId::P3 | FamilyId::P6)
    }

    pub fn needs_v(self) -> bool {
        matches!(self, FamilyId::P5)
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::P2 => "p2",
            FamilyId::P3 => "p3",
            FamilyId::P4a => "p4a",
            FamilyId::P4b => "p4b",
            FamilyId::P5 => "p5",
            FamilyId::P6 => "p6",
            FamilyId::Custom => "custom",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = PainleveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "p2" => FamilyId::P2,
            "p3" => FamilyId::P3,
            "p4a" => FamilyId::P4a,
            "p4b" => FamilyId::P4b,
            "p5" => FamilyId::P5,
            "p6" => FamilyId::P6,
            "custom" => FamilyId::Custom,
            _ => return Err(PainleveError::UnknownFamily(s.to_string())),
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub c: Option<Rational>,
    pub v: Option<Rational>,
}

impl FamilyParams {
    pub fn with_c(c: Rational) -> Self {
        Self {
            c: Some(c),
            v: None,
        }
    }

    pub fn with_v(v: Rational) -> Self {
        Self {
            c: None,
            v: Some(v),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PainleveError {
    #[error("family {family} needs parameter `{param}`")]
    MissingParameter {
        family: FamilyId,
        param: &'static str,
    },
    #[error("the custom family has no preset")]
    NoPreset,
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("zero denominator after the 1/x substitution")]
    ZeroDenominator,
    #[error("y = 0 is not admissible in the P_III equation")]
    ZeroSolution,
    #[error(transparent)]
    Recurrence(#[from] RecurrenceError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn require(
    family: FamilyId,
    value: &Option<Rational>,
    param: &'static str,
) -> Result<Rational, PainleveError> {
    value
        .clone()
        .ok_or(PainleveError::MissingParameter { family, param })
}

/// The recurrence for one row of the table.
pub fn preset(family: FamilyId, params: &FamilyParams) -> Result<HirotaSpec, PainleveError> {
    let zero = Rational::zero;
    let one = Poly::one;
    let spec = match family {
        FamilyId::P2 => HirotaSpec::new(
            Poly::from_ints(&[-4]),
            Poly::zero(),
            HCoeffs::constant(Poly::x()),
            one(),
            Poly::x(),
        ),
        FamilyId::P3 => {
            let c = require(family, &params.c, "c")?;
            HirotaSpec::new(
                Poly::monomial(q(-1, 1), 4),
                Poly::monomial(q(-1, 1), 3),
                HCoeffs::constant(Poly::new(vec![Rational::one(), c])),
                one(),
                one(),
            )
        }
        FamilyId::P4a => HirotaSpec::new(
            one(),
            Poly::zero(),
            HCoeffs::new(Poly::from_ints(&[-1, 0, 1]), q(2, 1), zero()),
            one(),
            one(),
        ),
        FamilyId::P4b => HirotaSpec::new(
            one(),
            Poly::zero(),
            HCoeffs::new(Poly::from_ints(&[0, 0, 1]), q(2, 1), zero()),
            one(),
            Poly::x(),
        ),
        FamilyId::P5 => {
            let v = require(family, &params.v, "v")?;
            HirotaSpec::new(
                Poly::x(),
                one(),
                HCoeffs::new(Poly::new(vec![-v, q(1, 8)]), q(3, 8), zero()),
                one(),
                one(),
            )
        }
        FamilyId::P6 => {
            let c = require(family, &params.c, "c")?;
            // (n - 1/2)^2 = n(n-1) + 1/4
            HirotaSpec::new(
                Poly::from_ints(&[-4, 0, 1]).pow(2).scale(&q(1, 4)),
                Poly::from_ints(&[0, -4, 0, 1]).scale(&q(1, 4)),
                HCoeffs::new(Poly::new(vec![q(1, 4), c]), zero(), q(1, 1)),
                one(),
                one(),
            )
        }
        FamilyId::Custom => return Err(PainleveError::NoPreset),
    };
    Ok(spec?)
}

/// Star condition for the `beta = 0` rows, the modified one (`beta = 1`) for P_VI.
pub fn preset_condition_check(
    family: FamilyId,
    params: &FamilyParams,
) -> Result<ResidualReport, PainleveError> {
    let spec = preset(family, params)?;
    let beta = &spec.h().beta;
    Ok(if beta.is_zero() {
        star_residual(spec.f(), spec.g())
    } else {
        modified_residual(spec.f(), spec.g(), beta)
    })
}

/// `P(1/x)` as (reversed polynomial, power of x in the denominator).
fn at_reciprocal(p: &Poly) -> (Poly, usize) {
    (p.reverse(), p.degree().finite().unwrap_or(0))
}

/// `y = P_n(1/x, c) P_{n+1}(1/x, c-1) / (P_n(1/x, c-1) P_{n+1}(1/x, c))`.
///
/// Each `P(1/x)` is `rev(P) / x^deg P`; only the net power of `x` survives
/// in the ratio and is applied once as a monomial factor.
pub fn p3_solution(n: usize, c: &Rational) -> Result<RationalFunction, PainleveError> {
    let cm1 = c - Rational::one();
    let upper = hirota_generate(
        &preset(FamilyId::P3, &FamilyParams::with_c(c.clone()))?,
        n as u64 + 1,
    )?;
    let lower = hirota_generate(
        &preset(FamilyId::P3, &FamilyParams::with_c(cm1))?,
        n as u64 + 1,
    )?;
    let term = |rep: &crate::recurrence::SequenceReport, i: usize| -> Result<Poly, PainleveError> {
        match rep.entry(i) {
            Some(p) => Ok(p.clone()),
            None => Err(PainleveError::Recurrence(RecurrenceError::ZeroTerm {
                n: i as u64,
            })),
        }
    };
    let (a, da) = at_reciprocal(&term(&upper, n)?);
    let (b, db) = at_reciprocal(&term(&lower, n + 1)?);
    let (cc, dc) = at_reciprocal(&term(&lower, n)?);
    let (d, dd) = at_reciprocal(&term(&upper, n + 1)?);
    let mut num = &a * &b;
    let mut den = &cc * &d;
    if den.is_zero() {
        return Err(PainleveError::ZeroDenominator);
    }
    // num / x^(da+db) divided by den / x^(dc+dd)
    let offset = (dc + dd) as i64 - (da + db) as i64;
    if offset > 0 {
        num = num.shift(offset as usize);
    } else if offset < 0 {
        den = den.shift((-offset) as usize);
    }
    Ok(RationalFunction::new(num, den)?)
}

/// `y'' - y'^2/y + y'/x - (a y^2 + b)/x - y^3 + 1/y`.
pub fn p3_ode_residual(
    y: &RationalFunction,
    a: &Rational,
    b: &Rational,
) -> Result<RationalFunction, PainleveError> {
    if y.is_zero() {
        return Err(PainleveError::ZeroSolution);
    }
    let x = RationalFunction::from_poly(Poly::x());
    let inv_x = x.recip()?;
    let inv_y = y.recip()?;
    let y1 = y.derivative();
    let y2 = y1.derivative();
    let y_sq = y * y;
    let ab = &y_sq.scale(a) + &RationalFunction::from_poly(Poly::constant(b.clone()));
    let mut r = &y2 - &(&(&y1 * &y1) * &inv_y);
    r = &r + &(&y1 * &inv_x);
    r = &r - &(&ab * &inv_x);
    r = &r - &(&y_sq * y);
    Ok(&r + &inv_y)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OdeCheck {
    pub n: usize,
    pub c: Rational,
    pub a: Rational,
    pub b: Rational,
    pub residual: RationalFunction,
    pub pass: bool,
}

/// Substitutes the rational solution into P_III with `a = 2n - 1 + 2c`,
/// `b = 2n + 1 - 2c`.
pub fn verify_p3(n: usize, c: &Rational) -> Result<OdeCheck, PainleveError> {
    let nn = Rational::from_integer((n as i64).into());
    let two = q(2, 1);
    let a = &two * &nn - Rational::one() + &two * c;
    let b = &two * &nn + Rational::one() - &two * c;
    debug_assert_eq!(&a + &b, q(4, 1) * &nn);
    let y = p3_solution(n, c)?;
    let residual = p3_ode_residual(&y, &a, &b)?;
    let pass = residual.num().is_zero();
    Ok(OdeCheck {
        n,
        c: c.clone(),
        a,
        b,
        residual,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;

    #[test]
    fn presets_transcribe_table() {
        let p2 = preset(FamilyId::P2, &FamilyParams::default()).unwrap();
        assert_eq!(p2.f(), &Poly::from_ints(&[-4]));
        assert!(p2.g().is_zero());
        assert_eq!(p2.h().at(5), Poly::x());
        assert_eq!(p2.seeds(), (&Poly::one(), &Poly::x()));

        let p5 = preset(FamilyId::P5, &FamilyParams::with_v(rat(1, 2))).unwrap();
        assert_eq!(p5.f(), &Poly::x());
        assert_eq!(p5.g(), &Poly::one());
        // x/8 - 1/2 + 3n/8 at n = 3
        assert_eq!(p5.h().at(3), Poly::new(vec![rat(5, 8), rat(1, 8)]));

        let p6 = preset(FamilyId::P6, &FamilyParams::with_c(rat(0, 1))).unwrap();
        for n in 0..6i64 {
            assert_eq!(
                p6.h().at(n as u64),
                Poly::constant(rat(n * (n - 1), 1) + rat(1, 4))
            );
        }
    }

    #[test]
    fn missing_parameters() {
        assert_eq!(
            preset(FamilyId::P3, &FamilyParams::default()),
            Err(PainleveError::MissingParameter {
                family: FamilyId::P3,
                param: "c"
            })
        );
        assert_eq!(
            preset(FamilyId::P5, &FamilyParams::with_c(rat(1, 1))),
            Err(PainleveError::MissingParameter {
                family: FamilyId::P5,
                param: "v"
            })
        );
        assert_eq!(
            preset(FamilyId::Custom, &FamilyParams::default()),
            Err(PainleveError::NoPreset)
        );
    }

    #[test]
    fn preset_conditions_hold() {
        let params = FamilyParams {
            c: Some(rat(2, 1)),
            v: Some(rat(1, 2)),
        };
        for fam in FamilyId::PRESETS {
            assert!(
                preset_condition_check(fam, &params).unwrap().satisfied,
                "{fam}"
            );
        }
    }

    #[test]
    fn p3_small_cases() {
        assert_eq!(
            p3_solution(0, &rat(7, 3)).unwrap(),
            RationalFunction::from_poly(Poly::one())
        );
        // P_2 = 2x+1 at c = 2 and x+1 at c = 1: y = (x+1)/(x+2)
        let y = p3_solution(1, &rat(2, 1)).unwrap();
        assert_eq!(
            y,
            RationalFunction::new(Poly::from_ints(&[1, 1]), Poly::from_ints(&[2, 1])).unwrap()
        );
        // c = 1: P_2 at c - 1 = 0 is the constant 1
        let y = p3_solution(1, &rat(1, 1)).unwrap();
        assert_eq!(
            y,
            RationalFunction::new(Poly::x(), Poly::from_ints(&[1, 1])).unwrap()
        );
    }

    #[test]
    fn ode_residual_for_constant_y() {
        let one = RationalFunction::from_poly(Poly::one());
        assert!(p3_ode_residual(&one, &rat(3, 1), &rat(-3, 1))
            .unwrap()
            .is_zero());
        let r = p3_ode_residual(&one, &rat(1, 1), &rat(2, 1)).unwrap();
        assert_eq!(
            r,
            RationalFunction::new(Poly::from_ints(&[-3]), Poly::x()).unwrap()
        );
        assert_eq!(
            p3_ode_residual(&RationalFunction::zero(), &rat(1, 1), &rat(1, 1)),
            Err(PainleveError::ZeroSolution)
        );
    }

    #[test]
    fn verify_small() {
        let chk = verify_p3(1, &rat(2, 1)).unwrap();
        assert_eq!((chk.a.clone(), chk.b.clone()), (rat(5, 1), rat(-1, 1)));
        assert!(chk.pass);
        assert!(verify_p3(0, &rat(7, 3)).unwrap().pass);
        assert!(verify_p3(3, &rat(1, 2)).unwrap().pass);
    }
}
