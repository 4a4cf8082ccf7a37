use crate::polyring::{gcd, is_coprime, is_squarefree, Degree, Poly, Rational};

use super::RecurrenceError;

/// `h_n = p(x) + alpha * n + beta * n (n - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HCoeffs {
    pub p: Poly,
    pub alpha: Rational,
    pub beta: Rational,
}

impl HCoeffs {
    pub fn new(p: Poly, alpha: Rational, beta: Rational) -> Self {
        Self { p, alpha, beta }
    }

    /// `h` independent of `n`.
    pub fn constant(p: Poly) -> Self {
        Self::new(
            p,
            Rational::from_integer(0.into()),
            Rational::from_integer(0.into()),
        )
    }

    pub fn at(&self, n: u64) -> Poly {
        let n = Rational::from_integer(n.into());
        let shift = &self.alpha * &n + &self.beta * &n * (&n - Rational::from_integer(1.into()));
        &self.p + &Poly::constant(shift)
    }
}

pub fn h_at(h: &HCoeffs, n: u64) -> Poly {
    h.at(n)
}

/// A full instance of the bilinear recurrence with its two seeds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HirotaSpec {
    f: Poly,
    g: Poly,
    h: HCoeffs,
    seed0: Poly,
    seed1: Poly,
}

impl HirotaSpec {
    /// Rejects all-zero `(f, g, h.p)`, zero seeds, and a nonconstant common
    /// factor of `f`, `g` and `h.p`.
    pub fn new(
        f: Poly,
        g: Poly,
        h: HCoeffs,
        seed0: Poly,
        seed1: Poly,
    ) -> Result<Self, RecurrenceError> {
        if seed0.is_zero() || seed1.is_zero() {
            return Err(RecurrenceError::ZeroSeed);
        }
        let common = [&f, &g, &h.p]
            .into_iter()
            .filter(|p| !p.is_zero())
            .try_fold(Poly::zero(), |acc, p| gcd(&acc, p))
            .map_err(|_| RecurrenceError::AllZeroCoefficients)?;
        if common.is_zero() {
            return Err(RecurrenceError::AllZeroCoefficients);
        }
        if !common.is_constant() {
            return Err(RecurrenceError::CommonFactor(common));
        }
        Ok(Self {
            f,
            g,
            h,
            seed0,
            seed1,
        })
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn g(&self) -> &Poly {
        &self.g
    }

    pub fn h(&self) -> &HCoeffs {
        &self.h
    }

    pub fn seeds(&self) -> (&Poly, &Poly) {
        (&self.seed0, &self.seed1)
    }

    /// `f (P P'' - P'^2) + g P P' + h_n P^2`.
    pub fn rhs(&self, p: &Poly, n: u64) -> Poly {
        let d1 = p.derivative();
        let d2 = d1.derivative();
        let mut acc = &self.h.at(n) * &(p * p);
        if !self.f.is_zero() {
            acc = &acc + &(&self.f * &(&(p * &d2) - &(&d1 * &d1)));
        }
        if !self.g.is_zero() {
            acc = &acc + &(&self.g * &(p * &d1));
        }
        acc
    }
}

pub fn hirota_rhs(spec: &HirotaSpec, p: &Poly, n: u64) -> Poly {
    spec.rhs(p, n)
}

/// Step `n` failed: `P_{n-1}` does not divide the right-hand side built
/// from `P_n`, so `P_{n+1}` is not a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepFailure {
    pub n: u64,
    pub remainder: Poly,
    pub divisor: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepOutcome {
    Next(Poly),
    Failed(StepFailure),
}

/// Computes `P_{n+1}` from `P_{n-1}` and `P_n` by exact division.
pub fn hirota_step(
    spec: &HirotaSpec,
    prev: &Poly,
    cur: &Poly,
    n: u64,
) -> Result<StepOutcome, RecurrenceError> {
    if prev.is_zero() {
        return Err(RecurrenceError::ZeroTerm {
            n: n.saturating_sub(1),
        });
    }
    let rhs = spec.rhs(cur, n);
    let (q, r) = rhs.divrem(prev).expect("nonzero divisor");
    Ok(if r.is_zero() {
        StepOutcome::Next(q)
    } else {
        StepOutcome::Failed(StepFailure {
            n,
            remainder: r,
            divisor: prev.clone(),
        })
    })
}

/// Generated terms `P_0, P_1, ...` with per-term evidence.
///
/// `entries[n]` is `P_n`. `coprimality_flags[n]` records whether
/// `gcd(P_n, P_{n+1})` is constant; `squarefree_flags[n]` whether
/// `gcd(P_n, P_n')` is. On failure at step `n` the last entry is `P_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceReport {
    pub entries: Vec<Poly>,
    pub degrees: Vec<Degree>,
    pub coprimality_flags: Vec<bool>,
    pub squarefree_flags: Vec<bool>,
    pub failure: Option<StepFailure>,
}

impl SequenceReport {
    pub fn entry(&self, n: usize) -> Option<&Poly> {
        self.entries.get(n)
    }

    pub fn all_flags_hold(&self) -> bool {
        self.coprimality_flags.iter().all(|&b| b) && self.squarefree_flags.iter().all(|&b| b)
    }
}

/// Runs the recurrence up to `P_horizon` or the first failed division.
///
/// Cost grows fast: for P_II the degree of `P_n` is `n(n+1)/2`, so each step
/// works with polynomials of quadratically growing degree and coefficient size.
pub fn hirota_generate(spec: &HirotaSpec, horizon: u64) -> Result<SequenceReport, RecurrenceError> {
    let mut entries = vec![spec.seed0.clone()];
    if horizon >= 1 {
        entries.push(spec.seed1.clone());
    }
    let mut failure = None;
    for n in 1..horizon {
        let i = n as usize;
        match hirota_step(spec, &entries[i - 1], &entries[i], n)? {
            StepOutcome::Next(p) => {
                if p.is_zero() && n + 1 < horizon {
                    return Err(RecurrenceError::ZeroTerm { n: n + 1 });
                }
                entries.push(p);
            }
            StepOutcome::Failed(f) => {
                failure = Some(f);
                break;
            }
        }
    }
    let degrees = entries.iter().map(Poly::degree).collect();
    let coprimality_flags = entries
        .windows(2)
        .map(|w| is_coprime(&w[0], &w[1]))
        .collect();
    let squarefree_flags = entries.iter().map(is_squarefree).collect();
    Ok(SequenceReport {
        entries,
        degrees,
        coprimality_flags,
        squarefree_flags,
        failure,
    })
}

/// Per-step evidence for computing `P_{n+1}`: `divides` is `P_{n-1} | rhs`,
/// `coprime` is `gcd(P_{n-1}, P_n) = 1`, `squarefree` is `gcd(P_{n-1}, P_{n-1}') = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepCheck {
    pub n: u64,
    pub divides: bool,
    pub coprime: bool,
    pub squarefree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub report: SequenceReport,
    pub steps: Vec<StepCheck>,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        self.report.failure.is_none()
            && self.report.all_flags_hold()
            && self
                .steps
                .iter()
                .all(|s| s.divides && s.coprime && s.squarefree)
    }

    pub fn first_failing_step(&self) -> Option<&StepCheck> {
        self.steps
            .iter()
            .find(|s| !(s.divides && s.coprime && s.squarefree))
    }
}

/// Strict run: every step must divide exactly and the coprimality and
/// squarefree assumptions must hold for every generated term.
pub fn certificate(spec: &HirotaSpec, horizon: u64) -> Result<Certificate, RecurrenceError> {
    if horizon < 2 {
        return Err(RecurrenceError::HorizonTooShort {
            min: 2,
            got: horizon,
        });
    }
    let report = hirota_generate(spec, horizon)?;
    let last_step = match &report.failure {
        Some(f) => f.n,
        None => horizon - 1,
    };
    let steps = (1..=last_step)
        .map(|n| {
            let i = n as usize;
            StepCheck {
                n,
                divides: report.failure.as_ref().is_none_or(|f| f.n != n),
                coprime: report.coprimality_flags[i - 1],
                squarefree: report.squarefree_flags[i - 1],
            }
        })
        .collect();
    Ok(Certificate { report, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;

    fn p2() -> HirotaSpec {
        HirotaSpec::new(
            Poly::from_ints(&[-4]),
            Poly::zero(),
            HCoeffs::constant(Poly::x()),
            Poly::one(),
            Poly::x(),
        )
        .unwrap()
    }

    #[test]
    fn h_evaluation() {
        let h = HCoeffs::new(Poly::from_ints(&[-1, 0, 1]), rat(2, 1), rat(0, 1));
        assert_eq!(h.at(1), Poly::from_ints(&[1, 0, 1]));
        let h6 = HCoeffs::new(Poly::constant(rat(1, 4)), rat(0, 1), rat(1, 1));
        assert_eq!(h6.at(2), Poly::constant(rat(9, 4)));
        let hc = HCoeffs::constant(Poly::from_ints(&[3, 1]));
        for n in 0..5 {
            assert_eq!(hc.at(n), Poly::from_ints(&[3, 1]));
        }
    }

    #[test]
    fn rhs_examples() {
        assert_eq!(p2().rhs(&Poly::x(), 1), Poly::from_ints(&[4, 0, 0, 1]));
        assert_eq!(p2().rhs(&Poly::one(), 7), Poly::x());
        let p3 = HirotaSpec::new(
            Poly::from_ints(&[0, 0, 0, 0, -1]),
            Poly::from_ints(&[0, 0, 0, -1]),
            HCoeffs::constant(Poly::new(vec![rat(1, 1), rat(5, 3)])),
            Poly::one(),
            Poly::one(),
        )
        .unwrap();
        assert_eq!(
            p3.rhs(&Poly::one(), 1),
            Poly::new(vec![rat(1, 1), rat(5, 3)])
        );
    }

    #[test]
    fn step_examples() {
        let spec = p2();
        let out = hirota_step(&spec, &Poly::x(), &Poly::from_ints(&[4, 0, 0, 1]), 2).unwrap();
        assert_eq!(
            out,
            StepOutcome::Next(Poly::from_ints(&[-80, 0, 0, 20, 0, 0, 1]))
        );
        let p = Poly::from_ints(&[1, 2, 3]);
        assert_eq!(
            hirota_step(&spec, &Poly::one(), &p, 4).unwrap(),
            StepOutcome::Next(spec.rhs(&p, 4))
        );
        assert_eq!(
            hirota_step(&spec, &Poly::zero(), &p, 4),
            Err(RecurrenceError::ZeroTerm { n: 3 })
        );
    }

    #[test]
    fn violating_spec_fails_early() {
        let spec = HirotaSpec::new(
            Poly::from_ints(&[0, 0, 1]),
            Poly::one(),
            HCoeffs::constant(Poly::x()),
            Poly::one(),
            Poly::one(),
        )
        .unwrap();
        let rep = hirota_generate(&spec, 10).unwrap();
        let f = rep.failure.expect("must fail");
        assert!(f.n <= 10);
        assert!(!f.remainder.is_zero());
        assert!(f.remainder.degree() < f.divisor.degree());
        assert_eq!(rep.entries.len() as u64, f.n + 1);
        let cert = certificate(&spec, 10).unwrap();
        assert!(!cert.holds());
        let nondividing: Vec<_> = cert.steps.iter().filter(|s| !s.divides).collect();
        assert_eq!(nondividing.len(), 1);
        assert_eq!(nondividing[0].n, f.n);
        // P_2 = x and P_3 = x^3 - x^2 + x share x, so the coprimality
        // assumption breaks before divisibility does
        assert_eq!(cert.first_failing_step().unwrap().n, 3);
        assert!(!cert.first_failing_step().unwrap().coprime);
    }

    #[test]
    fn p2_degrees() {
        let rep = hirota_generate(&p2(), 3).unwrap();
        let degs: Vec<_> = rep.degrees.iter().map(|d| d.finite().unwrap()).collect();
        assert_eq!(degs, vec![0, 1, 3, 6]);
        assert!(rep.failure.is_none());
    }

    #[test]
    fn spec_validation() {
        let x = Poly::x();
        assert_eq!(
            HirotaSpec::new(
                x.clone(),
                x.clone(),
                HCoeffs::constant(Poly::from_ints(&[0, 2])),
                Poly::one(),
                Poly::one()
            ),
            Err(RecurrenceError::CommonFactor(x.clone()))
        );
        assert_eq!(
            HirotaSpec::new(
                Poly::zero(),
                Poly::zero(),
                HCoeffs::constant(Poly::zero()),
                Poly::one(),
                Poly::one()
            ),
            Err(RecurrenceError::AllZeroCoefficients)
        );
        assert_eq!(
            HirotaSpec::new(
                x.clone(),
                Poly::zero(),
                HCoeffs::constant(Poly::one()),
                Poly::zero(),
                Poly::one()
            ),
            Err(RecurrenceError::ZeroSeed)
        );
    }

    #[test]
    fn certificate_needs_two_steps() {
        assert_eq!(
            certificate(&p2(), 1),
            Err(RecurrenceError::HorizonTooShort { min: 2, got: 1 })
        );
    }
}
