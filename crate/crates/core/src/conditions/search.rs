use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::polyring::{Poly, PolyError, Rational};

use super::{g_from_u, modified_residual, riccati_descent, ConditionError};

/// Leading constants tried for the structured candidates.
const STRUCTURED_GAMMAS: [(i64, i64); 4] = [(1, 1), (-1, 1), (1, 4), (4, 1)];
/// Integer roots the structured candidates are built from.
const STRUCTURED_ROOTS: [i64; 5] = [-2, -1, 0, 1, 2];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CandidateSource {
    Random {
        trial: usize,
    },
    /// `gamma * prod (x - r_i)` with the listed roots (repeats are multiplicities).
    Structured {
        gamma: Rational,
        roots: Vec<i64>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoundPair {
    pub f: Poly,
    pub g: Poly,
    pub source: CandidateSource,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DegreeEvidence {
    pub degree: usize,
    pub random_candidates: usize,
    pub random_with_solution: usize,
    pub structured_candidates: usize,
    pub structured_with_solution: usize,
    /// Candidates whose descent ended without solutions and with at least
    /// one contradiction trace.
    pub contradicted: usize,
    /// Candidates the root search could not settle.
    pub inconclusive: usize,
    pub found: Vec<FoundPair>,
}

impl DegreeEvidence {
    pub fn solutions_found(&self) -> usize {
        self.found.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvidenceReport {
    pub rng_seed: u64,
    pub trials: usize,
    pub degrees: Vec<DegreeEvidence>,
}

fn random_poly(rng: &mut ChaCha8Rng, degree: usize) -> Poly {
    loop {
        let coeffs: Vec<Rational> = (0..=degree)
            .map(|_| {
                Rational::new(
                    rng.random_range(-9i64..=9).into(),
                    rng.random_range(1i64..=4).into(),
                )
            })
            .collect();
        let p = Poly::new(coeffs);
        if p.degree().finite() == Some(degree) {
            return p;
        }
    }
}

fn multisets(len: usize, from: usize, out: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    for (i, &r) in STRUCTURED_ROOTS.iter().enumerate().skip(from) {
        cur.push(r);
        multisets(len, i, out, cur);
        cur.pop();
    }
}

fn structured_candidates(degree: usize) -> Vec<(Poly, CandidateSource)> {
    let mut roots = Vec::new();
    multisets(degree, 0, &mut roots, &mut Vec::new());
    let mut out = Vec::with_capacity(roots.len() * STRUCTURED_GAMMAS.len());
    for (gn, gd) in STRUCTURED_GAMMAS {
        let gamma = Rational::new(gn.into(), gd.into());
        for rs in &roots {
            let f = rs.iter().fold(Poly::constant(gamma.clone()), |acc, &r| {
                &acc * &Poly::from_ints(&[-r, 1])
            });
            out.push((
                f,
                CandidateSource::Structured {
                    gamma: gamma.clone(),
                    roots: rs.clone(),
                },
            ));
        }
    }
    out
}

enum Outcome {
    Found(Vec<Poly>),
    Contradicted,
    Inconclusive,
}

fn examine(f: &Poly, beta: &Rational) -> Result<Outcome, ConditionError> {
    match riccati_descent(f, beta) {
        Ok(set) if !set.solutions.is_empty() => Ok(Outcome::Found(
            set.solutions.iter().map(|u| g_from_u(u, f)).collect(),
        )),
        Ok(set) if !set.contradiction_traces.is_empty() => Ok(Outcome::Contradicted),
        Ok(_) => Ok(Outcome::Inconclusive),
        Err(ConditionError::Poly(PolyError::RootSearchTooLarge)) => Ok(Outcome::Inconclusive),
        Err(e) => Err(e),
    }
}

/// Looks for polynomial solutions of the `beta = 1` condition by running the
/// descent on random and structured `f` of each degree in the range.
///
/// Random candidates have coefficients `n/d` with `|n| <= 9`, `1 <= d <= 4`;
/// structured ones are `gamma * prod (x - r_i)` over the fixed root and
/// leading-constant grids. Deterministic for a given `rng_seed`: the
/// candidate list is drawn up front and results are merged in list order.
pub fn modified_evidence_search(
    deg_min: usize,
    deg_max: usize,
    trials: usize,
    rng_seed: u64,
) -> Result<EvidenceReport, ConditionError> {
    if deg_min < 1 || deg_max < deg_min {
        return Err(ConditionError::SearchRange(format!(
            "need 1 <= deg_min <= deg_max, got {deg_min}..{deg_max}"
        )));
    }
    if trials < 1 {
        return Err(ConditionError::SearchRange(
            "need at least one trial".into(),
        ));
    }
    let beta = Rational::from_integer(1.into());
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut degrees = Vec::new();
    for degree in deg_min..=deg_max {
        let mut candidates: Vec<(Poly, CandidateSource)> = (0..trials)
            .map(|trial| {
                (
                    random_poly(&mut rng, degree),
                    CandidateSource::Random { trial },
                )
            })
            .collect();
        let random_candidates = candidates.len();
        candidates.extend(structured_candidates(degree));
        let outcomes: Vec<Outcome> = candidates
            .par_iter()
            .map(|(f, _)| examine(f, &beta))
            .collect::<Result<_, _>>()?;
        let mut ev = DegreeEvidence {
            degree,
            random_candidates,
            structured_candidates: candidates.len() - random_candidates,
            ..Default::default()
        };
        for ((f, source), outcome) in candidates.into_iter().zip(outcomes) {
            match outcome {
                Outcome::Found(gs) => {
                    match source {
                        CandidateSource::Random { .. } => ev.random_with_solution += 1,
                        CandidateSource::Structured { .. } => ev.structured_with_solution += 1,
                    }
                    for g in gs {
                        debug_assert!(modified_residual(&f, &g, &beta).satisfied);
                        ev.found.push(FoundPair {
                            f: f.clone(),
                            g,
                            source: source.clone(),
                        });
                    }
                }
                Outcome::Contradicted => ev.contradicted += 1,
                Outcome::Inconclusive => ev.inconclusive += 1,
            }
        }
        degrees.push(ev);
    }
    Ok(EvidenceReport {
        rng_seed,
        trials,
        degrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structured_grid_size() {
        // multisets of size 2 from 5 roots, times 4 leading constants
        assert_eq!(structured_candidates(2).len(), 15 * 4);
    }

    #[test]
    fn deterministic_for_seed() {
        let a = modified_evidence_search(1, 2, 5, 42).unwrap();
        let b = modified_evidence_search(1, 2, 5, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_bad_range() {
        assert!(modified_evidence_search(0, 2, 5, 1).is_err());
        assert!(modified_evidence_search(3, 2, 5, 1).is_err());
        assert!(modified_evidence_search(1, 2, 0, 1).is_err());
    }
}
