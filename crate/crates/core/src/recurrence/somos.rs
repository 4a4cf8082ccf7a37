use num_traits::{One, Zero};

use crate::polyring::Rational;

use super::RecurrenceError;

/// `a_n a_{n-k} = sum_{j=1}^{floor(k/2)} a_{n-j} a_{n-k+j}` with `k` seeds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SomosSpec {
    k: usize,
    seeds: Vec<Rational>,
    horizon: usize,
}

impl SomosSpec {
    pub fn new(k: usize, seeds: Vec<Rational>, horizon: usize) -> Result<Self, RecurrenceError> {
        if k < 4 {
            return Err(RecurrenceError::SomosOrder(k));
        }
        if seeds.len() != k {
            return Err(RecurrenceError::SomosSeedCount {
                k,
                got: seeds.len(),
            });
        }
        if let Some(i) = seeds.iter().position(Zero::is_zero) {
            return Err(RecurrenceError::SomosZeroDivisor { index: i });
        }
        Ok(Self { k, seeds, horizon })
    }

    /// All seeds equal to 1.
    pub fn unit(k: usize, horizon: usize) -> Result<Self, RecurrenceError> {
        Self::new(k, vec![Rational::one(); k], horizon)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }
}

/// Exact terms `a_0..=a_horizon`.
pub fn somos_generate(spec: &SomosSpec) -> Result<Vec<Rational>, RecurrenceError> {
    let k = spec.k;
    let mut a: Vec<Rational> = spec.seeds.iter().take(spec.horizon + 1).cloned().collect();
    for n in k..=spec.horizon {
        let div = &a[n - k];
        if div.is_zero() {
            return Err(RecurrenceError::SomosZeroDivisor { index: n - k });
        }
        let sum = (1..=k / 2).fold(Rational::zero(), |acc, j| acc + &a[n - j] * &a[n - k + j]);
        let next = sum / div;
        a.push(next);
    }
    Ok(a)
}

/// Smallest index whose term is not an integer, if any.
pub fn somos_first_noninteger(spec: &SomosSpec) -> Result<Option<usize>, RecurrenceError> {
    Ok(somos_generate(spec)?.iter().position(|t| !t.is_integer()))
}
