use num_traits::Zero;

use crate::polyring::{linear_power_detect, Poly, Rational};

use super::ConditionError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualReport {
    pub residual: Poly,
    pub beta: Rational,
    pub satisfied: bool,
}

impl ResidualReport {
    fn new(residual: Poly, beta: Rational) -> Self {
        let satisfied = residual.is_zero();
        Self {
            residual,
            beta,
            satisfied,
        }
    }
}

fn star_part(f: &Poly, g: &Poly) -> Poly {
    let f1 = f.derivative();
    let f2 = f1.derivative();
    let g1 = g.derivative();
    let three = Rational::from_integer(3.into());
    let two = Rational::from_integer(2.into());
    &(&(&(f * &f2) - &(&f1 * &f1)) + &(&f1 * g).scale(&three))
        - &(&(f * &g1) + &(g * g)).scale(&two)
}

/// `f f'' - f'^2 + 3 f' g - 2 f g' - 2 g^2`.
pub fn star_residual(f: &Poly, g: &Poly) -> ResidualReport {
    ResidualReport::new(star_part(f, g), Rational::zero())
}

/// The star residual plus `2 beta f`; the condition that replaces it when
/// `h_n` carries a `beta n (n - 1)` term.
pub fn modified_residual(f: &Poly, g: &Poly, beta: &Rational) -> ResidualReport {
    let two_beta = beta * Rational::from_integer(2.into());
    ResidualReport::new(&star_part(f, g) + &f.scale(&two_beta), beta.clone())
}

pub fn g_from_u(u: &Poly, f: &Poly) -> Poly {
    u + &f.derivative().scale(&Rational::new(1.into(), 2.into()))
}

/// Every polynomial `g` with zero star residual for this `f`.
///
/// `g = f'/2` always works; when `f = gamma (x - r)^k` there is also
/// `g = gamma (x - r)^(k-1)`, which coincides with `f'/2` for `k = 2`.
pub fn theorem2_solutions(f: &Poly) -> Result<Vec<Poly>, ConditionError> {
    if f.is_zero() {
        return Err(ConditionError::ZeroF);
    }
    let mut out = vec![f.derivative().scale(&Rational::new(1.into(), 2.into()))];
    if !f.is_constant() {
        if let Some(lp) = linear_power_detect(f)? {
            out.push(Poly::linear_power(&lp.root, lp.k - 1).scale(&lp.gamma));
        }
    }
    for g in &out {
        let rep = star_residual(f, g);
        assert!(rep.satisfied, "closed-form solution {g} failed for f = {f}");
    }
    out.sort_by(Poly::canonical_cmp);
    out.dedup();
    Ok(out)
}
