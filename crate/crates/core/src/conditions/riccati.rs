//! Exhaustive polynomial solutions of `f u' - (f'/2) u + u^2 = beta f`.
//!
//! Work with twice the equation,
//!
//! ```text
//! E(u) = 2 f u' - f' u + 2 u^2 - 2 beta f = 0,
//! [x^e] E = sum_i f_i (2j - i) u_j  (j = e - i + 1)  +  2 sum_{a+b=e} u_a u_b  -  2 beta f_e.
//! ```
//!
//! With `m = deg f`, a nonzero `u` of degree `d >= max(m, 1)` leaves
//! `2 u_d^2 x^{2d}` uncancelled, so only `d <= max(m - 1, 0)` can occur. For
//! each such `d` the coefficient equations are taken from the top degree
//! down. Writing `s = max(m - 1, d)`, the equation at degree `e` involves
//! `u_j` only for `j >= e - s`, so each step introduces at most one new
//! coefficient `u_{e-s}`, appearing in the form `Q z^2 + L z + R`.
//! `Q != 0` only at the very first unknown (a quadratic, branched over its
//! rational roots). Otherwise `L` is a constant: either it is nonzero and
//! the coefficient is forced, or it vanishes and the coefficient becomes a
//! free parameter `t`. The remaining equations are then polynomials in `t`
//! whose common rational roots give the solutions. At most one free
//! coefficient arises; if a second one did the solver reports
//! [`ConditionError::Unsupported`] rather than silently dropping branches.

use std::fmt::Write as _;

use num_traits::Zero;

use crate::polyring::{format_rational, gcd, rational_roots, Degree, Poly, Rational};

use super::ConditionError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContradictionTrace {
    pub branch: String,
    /// Degree `e` of the coefficient equation `[x^e] E(u)` that could not hold.
    pub coefficient: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiccatiSolutionSet {
    pub solutions: Vec<Poly>,
    pub contradiction_traces: Vec<ContradictionTrace>,
}

impl RiccatiSolutionSet {
    /// Sorts, deduplicates and re-verifies every solution.
    fn new(
        f: &Poly,
        beta: &Rational,
        mut solutions: Vec<Poly>,
        contradiction_traces: Vec<ContradictionTrace>,
    ) -> Self {
        solutions.sort_by(Poly::canonical_cmp);
        solutions.dedup();
        for u in &solutions {
            assert!(
                riccati_lhs(f, beta, u).is_zero(),
                "descent produced a non-solution u = {u}"
            );
        }
        Self {
            solutions,
            contradiction_traces,
        }
    }
}

/// `2 f u' - f' u + 2 u^2 - 2 beta f`.
pub fn riccati_lhs(f: &Poly, beta: &Rational, u: &Poly) -> Poly {
    let two = Rational::from_integer(2.into());
    let a = (f * &u.derivative()).scale(&two);
    let b = &f.derivative() * u;
    let c = (u * u).scale(&two);
    &(&(&a - &b) + &c) - &f.scale(&(beta * &two))
}

struct Branch {
    desc: String,
    /// `coeffs[j]` is `u_j` as a polynomial in the free parameter `t`.
    coeffs: Vec<Option<Poly>>,
    param: Option<usize>,
    constraints: Vec<(usize, Poly)>,
    next_e: i64,
}

struct Descent<'a> {
    fc: Vec<Rational>,
    m: usize,
    beta: &'a Rational,
    solutions: Vec<Poly>,
    traces: Vec<ContradictionTrace>,
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

impl<'a> Descent<'a> {
    /// `[x^e] E` with every unassigned coefficient (and `u_skip`) set to zero.
    fn coefficient(&self, br: &Branch, e: usize, skip: Option<usize>) -> Poly {
        let get = |j: usize| -> Option<&Poly> {
            if Some(j) == skip {
                return None;
            }
            br.coeffs.get(j).and_then(Option::as_ref)
        };
        let mut acc = Poly::constant(
            -(self.beta * int(2) * self.fc.get(e).cloned().unwrap_or_else(Rational::zero)),
        );
        for (i, fi) in self.fc.iter().enumerate() {
            if fi.is_zero() || e + 1 < i {
                continue;
            }
            let j = e + 1 - i;
            if let Some(uj) = get(j) {
                let w = fi * int(2 * j as i64 - i as i64);
                acc = &acc + &uj.scale(&w);
            }
        }
        for a in 0..=e {
            let b = e - a;
            if let (Some(ua), Some(ub)) = (get(a), get(b)) {
                acc = &acc + &(ua * ub).scale(&int(2));
            }
        }
        acc
    }

    fn trace(&mut self, br: &Branch, e: usize, why: &str) {
        self.traces.push(ContradictionTrace {
            branch: format!("{}: {why}", br.desc),
            coefficient: e,
        });
    }

    fn run_branch(&mut self, mut br: Branch) -> Result<(), ConditionError> {
        let d = br.coeffs.len() - 1;
        let s = (self.m as i64 - 1).max(d as i64);
        while br.next_e >= 0 {
            let e = br.next_e as usize;
            br.next_e -= 1;
            let k = e as i64 - s;
            if k < 0 || k > d as i64 {
                let r = self.coefficient(&br, e, None);
                if r.is_zero() {
                    continue;
                }
                if r.is_constant() {
                    self.trace(&br, e, "coefficient equation has no solution");
                    return Ok(());
                }
                br.constraints.push((e, r));
                continue;
            }
            let k = k as usize;
            let r = self.coefficient(&br, e, Some(k));
            let quad = if 2 * k == e { int(2) } else { Rational::zero() };
            // linear coefficient of u_k
            let mut lin = Poly::zero();
            if e + 1 >= k && e + 1 - k <= self.m {
                let i = e + 1 - k;
                lin = Poly::constant(&self.fc[i] * int(2 * k as i64 - i as i64));
            }
            if e >= k {
                let a = e - k;
                if a != k {
                    if let Some(ua) = br.coeffs.get(a).and_then(Option::as_ref) {
                        lin = &lin + &ua.scale(&int(4));
                    }
                }
            }
            if !quad.is_zero() {
                if !lin.is_constant() || !r.is_constant() {
                    return Err(ConditionError::Unsupported(format!(
                        "{}: quadratic step at x^{e} depends on a free coefficient",
                        br.desc
                    )));
                }
                let eq = Poly::new(vec![r.constant_term(), lin.constant_term(), quad]);
                let roots = rational_roots(&eq)?;
                let roots: Vec<_> = roots
                    .into_iter()
                    .filter(|z| k != d || !z.is_zero())
                    .collect();
                if roots.is_empty() {
                    self.trace(&br, e, &format!("no nonzero rational u_{k}"));
                    return Ok(());
                }
                for z in roots {
                    let mut coeffs = br.coeffs.clone();
                    coeffs[k] = Some(Poly::constant(z.clone()));
                    let mut desc = br.desc.clone();
                    let _ = write!(desc, ", u_{k} = {}", format_rational(&z));
                    self.run_branch(Branch {
                        desc,
                        coeffs,
                        param: br.param,
                        constraints: br.constraints.clone(),
                        next_e: br.next_e,
                    })?;
                }
                return Ok(());
            }
            if !lin.is_constant() {
                return Err(ConditionError::Unsupported(format!(
                    "{}: linear coefficient of u_{k} depends on a free coefficient",
                    br.desc
                )));
            }
            if !lin.is_zero() {
                let uk = r.scale(&(-lin.constant_term().recip()));
                if k == d && uk.is_zero() {
                    self.trace(&br, e, "leading coefficient forced to zero");
                    return Ok(());
                }
                br.coeffs[k] = Some(uk);
                continue;
            }
            // u_k does not occur: the equation constrains earlier choices only
            if !r.is_zero() {
                if r.is_constant() {
                    self.trace(&br, e, "coefficient equation has no solution");
                    return Ok(());
                }
                br.constraints.push((e, r));
            }
            if br.param.is_some() {
                return Err(ConditionError::Unsupported(format!(
                    "{}: second free coefficient u_{k}",
                    br.desc
                )));
            }
            br.param = Some(k);
            br.coeffs[k] = Some(Poly::x());
            let _ = write!(br.desc, ", u_{k} free");
        }
        self.finish(br)
    }

    fn finish(&mut self, br: Branch) -> Result<(), ConditionError> {
        let d = br.coeffs.len() - 1;
        let Some(pk) = br.param else {
            let u = Poly::new(
                br.coeffs
                    .iter()
                    .map(|c| c.as_ref().expect("assigned").constant_term())
                    .collect(),
            );
            debug_assert!(br.constraints.is_empty());
            self.solutions.push(u);
            return Ok(());
        };
        let mut g = Poly::zero();
        let mut last_e = 0;
        for (e, c) in &br.constraints {
            g = gcd(&g, c)?;
            last_e = *e;
            if g.is_constant() {
                break;
            }
        }
        if g.is_zero() {
            return Err(ConditionError::InfiniteFamily(br.desc));
        }
        if g.is_constant() {
            self.trace(
                &br,
                last_e,
                "constraints on the free coefficient have no common root",
            );
            return Ok(());
        }
        let roots: Vec<_> = rational_roots(&g)?
            .into_iter()
            .filter(|t| pk != d || !t.is_zero())
            .collect();
        if roots.is_empty() {
            self.trace(
                &br,
                last_e,
                "free coefficient has no admissible rational value",
            );
            return Ok(());
        }
        for t in roots {
            let u = Poly::new(
                br.coeffs
                    .iter()
                    .map(|c| c.as_ref().expect("assigned").eval(&t))
                    .collect(),
            );
            self.solutions.push(u);
        }
        Ok(())
    }
}

/// All polynomial `u` with `f u' - (f'/2) u + u^2 = beta f`.
pub fn riccati_descent(f: &Poly, beta: &Rational) -> Result<RiccatiSolutionSet, ConditionError> {
    let Degree::Finite(m) = f.degree() else {
        return Err(ConditionError::ZeroF);
    };
    let mut run = Descent {
        fc: f.coeffs().to_vec(),
        m,
        beta,
        solutions: Vec::new(),
        traces: Vec::new(),
    };
    if beta.is_zero() {
        run.solutions.push(Poly::zero());
    } else {
        run.traces.push(ContradictionTrace {
            branch: "u = 0: leaves -2 beta f".into(),
            coefficient: m,
        });
    }
    let max_d = m.saturating_sub(1);
    for d in 0..=max_d {
        let top = [2 * d as i64, (m + d) as i64 - 1, m as i64]
            .into_iter()
            .max()
            .unwrap();
        run.run_branch(Branch {
            desc: format!("deg u = {d}"),
            coeffs: vec![None; d + 1],
            param: None,
            constraints: Vec::new(),
            next_e: top,
        })?;
    }
    let beyond = max_d + 1;
    run.traces.push(ContradictionTrace {
        branch: format!("deg u >= {beyond}: 2 u_d^2 x^(2d) has nothing to cancel against"),
        coefficient: 2 * beyond,
    });
    let Descent {
        solutions, traces, ..
    } = run;
    Ok(RiccatiSolutionSet::new(f, beta, solutions, traces))
}

/// Convenience: same as [`riccati_descent`] with `beta = 0`.
pub fn riccati_descent_star(f: &Poly) -> Result<RiccatiSolutionSet, ConditionError> {
    riccati_descent(f, &Rational::zero())
}
