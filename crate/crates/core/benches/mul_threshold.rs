//! Schoolbook vs Karatsuba on integer images of P_II-sized polynomials.
//!
//! Run with `cargo bench --bench mul_threshold`; the crossover picks
//! `zpoly::KARATSUBA_THRESHOLD`.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hirota::polyring::zpoly::{mul_karatsuba_with, mul_schoolbook};
use num_bigint::BigInt;
use std::hint::black_box;

fn operand(len: usize, bits: u32, salt: u64) -> Vec<BigInt> {
    let mut state = salt.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1;
    (0..len)
        .map(|_| {
            let mut c = BigInt::from(0);
            for _ in 0..bits.div_ceil(64) {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                c = (c << 64) + BigInt::from(state);
            }
            if state & 1 == 0 {
                -c
            } else {
                c
            }
        })
        .collect()
}

fn bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("int_poly_mul");
    for &len in &[8usize, 16, 24, 32, 48, 64, 128, 256] {
        let a = operand(len, 256, 1);
        let b = operand(len, 256, 2);
        group.bench_with_input(BenchmarkId::new("schoolbook", len), &len, |bn, _| {
            bn.iter(|| mul_schoolbook(black_box(&a), black_box(&b)))
        });
        for &t in &[16usize, 32, 48] {
            group.bench_with_input(
                BenchmarkId::new(format!("karatsuba_t{t}"), len),
                &len,
                |bn, _| bn.iter(|| mul_karatsuba_with(black_box(&a), black_box(&b), t)),
            );
        }
    }
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
