use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{zpoly, Degree, Poly, PolyError, Rational};

/// Monic greatest common divisor, computed over `Z[x]` on primitive parts.
pub fn gcd(p: &Poly, q: &Poly) -> Result<Poly, PolyError> {
    match (p.is_zero(), q.is_zero()) {
        (true, true) => Err(PolyError::GcdOfZeros),
        (false, true) => Ok(p.monic()),
        (true, false) => Ok(q.monic()),
        (false, false) => {
            let (a, _) = p.integer_parts();
            let (b, _) = q.integer_parts();
            Ok(Poly::from_bigints(zpoly::gcd_primitive(a, b)).monic())
        }
    }
}

// Word-sized primes for the modular coprimality filter.
const PRIMES: [u64; 3] = [2_305_843_009_213_693_951, 2_147_483_647, 998_244_353];

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    acc
}

fn reduce(a: &[BigInt], m: u64) -> Vec<u64> {
    let mb = BigInt::from(m);
    let mut v: Vec<u64> = a
        .iter()
        .map(|c| c.mod_floor(&mb).to_u64().expect("residue fits"))
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Degree of gcd(a, b) in `F_m[x]`; both inputs nonzero.
fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>, m: u64) -> usize {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = powmod(*b.last().unwrap(), m - 2, m);
        let db = b.len() - 1;
        while a.len() > db && !a.is_empty() {
            let c = mulmod(*a.last().unwrap(), inv, m);
            let shift = a.len() - 1 - db;
            for (i, &bi) in b.iter().enumerate() {
                let t = mulmod(c, bi, m);
                a[shift + i] = (a[shift + i] + m - t) % m;
            }
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len() - 1
}

/// True when gcd(p, q) is a constant.
///
/// Tries a modular image first: if the prime divides neither leading
/// coefficient, deg gcd mod p bounds the true gcd degree from above, so a
/// constant image settles the question. Otherwise falls back to [`gcd`].
pub fn is_coprime(p: &Poly, q: &Poly) -> bool {
    if p.is_zero() {
        return q.is_constant() && !q.is_zero();
    }
    if q.is_zero() {
        return p.is_constant();
    }
    if p.is_constant() || q.is_constant() {
        return true;
    }
    let (a, _) = p.integer_parts();
    let (b, _) = q.integer_parts();
    for &m in &PRIMES {
        let (ra, rb) = (reduce(&a, m), reduce(&b, m));
        if ra.len() != a.len() || rb.len() != b.len() {
            continue;
        }
        if gcd_degree_mod(ra, rb, m) == 0 {
            return true;
        }
    }
    zpoly::gcd_primitive(a, b).len() <= 1
}

/// True when gcd(p, p') is constant, i.e. `p` has no repeated root.
pub fn is_squarefree(p: &Poly) -> bool {
    is_coprime(p, &p.derivative())
}

/// `f = gamma * (x - root)^k` with `gamma != 0`, `k >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearPower {
    pub gamma: Rational,
    pub root: Rational,
    pub k: usize,
}

impl LinearPower {
    pub fn expand(&self) -> Poly {
        Poly::linear_power(&self.root, self.k).scale(&self.gamma)
    }
}

/// Detects whether `f` is a constant times a power of a single linear factor.
/// The radical `f / gcd(f, f')` must be linear.
pub fn linear_power_detect(f: &Poly) -> Result<Option<LinearPower>, PolyError> {
    let Degree::Finite(k) = f.degree() else {
        return Err(PolyError::ConstantInput);
    };
    if k == 0 {
        return Err(PolyError::ConstantInput);
    }
    let g = gcd(f, &f.derivative())?;
    let radical = f.div_exact(&g)?.expect("gcd divides f");
    if radical.degree() != Degree::Finite(1) {
        return Ok(None);
    }
    let radical = radical.monic();
    let root = -radical.coeff(0);
    let gamma = f.leading().cloned().expect("nonzero");
    let lp = LinearPower { gamma, root, k };
    debug_assert_eq!(&lp.expand(), f);
    Ok(Some(lp))
}

/// Roots of `p` lying in Q, ascending, without multiplicity.
///
/// Degrees 1 and 2 are solved in closed form. Higher degrees use the
/// rational root test, which needs the divisors of the extreme integer
/// coefficients; if either one has a prime factor above the trial-division
/// bound the call fails with [`PolyError::RootSearchTooLarge`].
pub fn rational_roots(p: &Poly) -> Result<Vec<Rational>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::RootsOfZero);
    }
    let (mut a, _) = p.integer_parts();
    let mut roots = Vec::new();
    if a[0].is_zero() {
        roots.push(Rational::zero());
        let lead_zeros = a.iter().take_while(|c| c.is_zero()).count();
        a.drain(..lead_zeros);
    }
    // distinct roots only
    let a = zpoly::primitive_part(a);
    let sq = if a.len() <= 2 {
        a
    } else {
        let da: Vec<BigInt> = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        let g = zpoly::gcd_primitive(a.clone(), da);
        // Gauss: a primitive divisor of a primitive polynomial leaves an integral cofactor
        let (q, _) = zpoly::divrem_integral(&a, &g).expect("primitive gcd divides over Z");
        zpoly::primitive_part(q)
    };
    match sq.len() {
        0 | 1 => {}
        2 => roots.push(Rational::new(-sq[0].clone(), sq[1].clone())),
        3 => {
            let (c, b, a2) = (&sq[0], &sq[1], &sq[2]);
            let disc: BigInt = b * b - BigInt::from(4) * a2 * c;
            if disc >= BigInt::zero() {
                let s = disc.sqrt();
                if &s * &s == disc {
                    let two_a = BigInt::from(2) * a2;
                    roots.push(Rational::new(-b + &s, two_a.clone()));
                    if !s.is_zero() {
                        roots.push(Rational::new(-b - &s, two_a));
                    }
                }
            }
        }
        _ => roots.extend(rational_root_test(&sq)?),
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

const TRIAL_BOUND: u64 = 1_000_000;

fn prime_factors(n: &BigInt) -> Result<Vec<(BigInt, u32)>, PolyError> {
    let mut n = n.magnitude().clone();
    let mut out = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_BOUND {
        let db = num_bigint::BigUint::from(d);
        if &db * &db > n {
            break;
        }
        let mut e = 0;
        while (&n % &db).is_zero() {
            n /= &db;
            e += 1;
        }
        if e > 0 {
            out.push((BigInt::from(d), e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let one = num_bigint::BigUint::from(1u32);
    if n > one {
        let bound = num_bigint::BigUint::from(TRIAL_BOUND);
        if n > &bound * &bound {
            return Err(PolyError::RootSearchTooLarge);
        }
        out.push((BigInt::from(n), 1));
    }
    Ok(out)
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>, PolyError> {
    let mut divs = vec![BigInt::from(1)];
    for (p, e) in prime_factors(n)? {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::from(1);
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    Ok(divs)
}

fn rational_root_test(a: &[BigInt]) -> Result<Vec<Rational>, PolyError> {
    // a[0] != 0 here (zero roots stripped)
    let nums = divisors(&a[0])?;
    let dens = divisors(a.last().unwrap())?;
    let n = a.len() - 1;
    let mut roots = Vec::new();
    for qd in &dens {
        for pn in &nums {
            if !pn.gcd(qd).is_one() {
                continue;
            }
            for sign in [1i32, -1] {
                let pn = pn * BigInt::from(sign);
                // sum a_i p^i q^(n-i)
                let mut acc = BigInt::zero();
                let mut ppow = BigInt::from(1);
                let qpows: Vec<BigInt> =
                    std::iter::successors(Some(BigInt::from(1)), |x| Some(x * qd))
                        .take(n + 1)
                        .collect();
                for (i, c) in a.iter().enumerate() {
                    acc += c * &ppow * &qpows[n - i];
                    ppow *= &pn;
                }
                if acc.is_zero() {
                    roots.push(Rational::new(pn, qd.clone()));
                }
            }
        }
    }
    Ok(roots)
}
