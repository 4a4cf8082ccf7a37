//! Integer-coefficient polynomial kernels.
//!
//! Rational polynomials are lifted to `Z[x]` (coefficients times the lcm of
//! denominators) before multiplication, pseudo-division and gcd, so the hot
//! loops never normalise fractions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Degree at which [`mul`] switches from schoolbook to Karatsuba.
///
/// From `cargo bench --bench mul_threshold` with 256-bit coefficients:
/// schoolbook wins at 16 coefficients, the kernels are within noise from 24
/// to 64, and Karatsuba is clearly ahead from 128 on. Any positive value
/// yields identical products.
pub const KARATSUBA_THRESHOLD: usize = 32;

pub(crate) fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Schoolbook product. Output length is `a.len() + b.len() - 1` (empty if
/// either side is empty); no trimming.
pub fn mul_schoolbook(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn add_into(dst: &mut [BigInt], src: &[BigInt]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d += s;
    }
}

fn sub_into(dst: &mut [BigInt], src: &[BigInt]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d -= s;
    }
}

fn padded_sum(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => unreachable!(),
        })
        .collect()
}

/// Karatsuba product with a schoolbook base case below `threshold`.
pub fn mul_karatsuba_with(a: &[BigInt], b: &[BigInt], threshold: usize) -> Vec<BigInt> {
    let (a, b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if b.is_empty() {
        return Vec::new();
    }
    if b.len() < threshold.max(2) {
        return mul_schoolbook(a, b);
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    if a.len() >= 2 * b.len() {
        // Unbalanced: slice the long operand into pieces of the short one's length.
        for (idx, chunk) in a.chunks(b.len()).enumerate() {
            let part = mul_karatsuba_with(chunk, b, threshold);
            add_into(&mut out[idx * b.len()..], &part);
        }
        return out;
    }
    let m = a.len() / 2;
    let (a0, a1) = a.split_at(m);
    let (b0, b1) = b.split_at(m);
    let z0 = mul_karatsuba_with(a0, b0, threshold);
    let z2 = mul_karatsuba_with(a1, b1, threshold);
    let mut z1 = mul_karatsuba_with(&padded_sum(a0, a1), &padded_sum(b0, b1), threshold);
    sub_into(&mut z1, &z0);
    sub_into(&mut z1, &z2);
    add_into(&mut out, &z0);
    add_into(&mut out[m..], &z1);
    add_into(&mut out[2 * m..], &z2);
    out
}

/// Product of two integer polynomials, trimmed.
pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = if a.len().min(b.len()) < KARATSUBA_THRESHOLD {
        mul_schoolbook(a, b)
    } else {
        mul_karatsuba_with(a, b, KARATSUBA_THRESHOLD)
    };
    trim(&mut out);
    out
}

pub(crate) fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Divides out the content and makes the leading coefficient positive.
pub(crate) fn primitive_part(mut a: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut a);
    let Some(lead) = a.last() else {
        return a;
    };
    let mut c = content(&a);
    if lead.is_negative() {
        c = -c;
    }
    if !c.is_one() {
        for x in a.iter_mut() {
            *x = &*x / &c;
        }
    }
    a
}

/// Remainder of `lc(b)^e * a` modulo `b` for some `e >= 0`; `b` nonzero and trimmed.
pub(crate) fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim(&mut r);
    let lb = b.last().expect("nonzero divisor");
    let db = b.len() - 1;
    while r.len() > db && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        let g = lr.gcd(lb);
        let sr = lb / &g;
        let sb = &lr / &g;
        if !sr.is_one() {
            for x in r.iter_mut() {
                *x *= &sr;
            }
        }
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &sb * bi;
        }
        trim(&mut r);
    }
    r
}

/// Long division that succeeds only if every quotient coefficient is an
/// integer, i.e. `lc(b)` divides each leading term met along the way.
pub(crate) fn divrem_integral(a: &[BigInt], b: &[BigInt]) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
    let lb = b.last()?;
    let db = b.len() - 1;
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return Some((Vec::new(), r));
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() > db {
        let lr = r.last().unwrap();
        let (qc, rem) = lr.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = r.len() - 1 - db;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &qc * bi;
        }
        q[shift] = qc;
        trim(&mut r);
    }
    trim(&mut q);
    Some((q, r))
}

/// Primitive gcd over `Z[x]` via the primitive remainder sequence.
pub(crate) fn gcd_primitive(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let mut a = primitive_part(a);
    let mut b = primitive_part(b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive_part(pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn karatsuba_matches_schoolbook_small_threshold() {
        let a: Vec<BigInt> = (0..37).map(|i| BigInt::from(i * i - 17)).collect();
        let b: Vec<BigInt> = (0..11).map(|i| BigInt::from(3 - i)).collect();
        for t in [2, 3, 5, 8, 64] {
            assert_eq!(mul_karatsuba_with(&a, &b, t), mul_schoolbook(&a, &b));
            assert_eq!(mul_karatsuba_with(&b, &a, t), mul_schoolbook(&a, &b));
        }
    }

    #[test]
    fn integral_division_rejects_fractional_quotient() {
        // (x^2 + 1) / (2x + 1) needs 1/2
        assert!(divrem_integral(&z(&[1, 0, 1]), &z(&[1, 2])).is_none());
        let (q, r) = divrem_integral(&z(&[-1, 0, 1]), &z(&[1, 1])).unwrap();
        assert_eq!(q, z(&[-1, 1]));
        assert!(r.is_empty());
    }

    #[test]
    fn primitive_gcd() {
        // 2(x-1)(x+2) and 6(x-1)(x-3)
        let g = gcd_primitive(z(&[-4, 2, 2]), z(&[18, -24, 6]));
        assert_eq!(g, z(&[-1, 1]));
    }
}
