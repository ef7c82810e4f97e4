//! Seeded sample points and random test elements.

use qdouble_core::scalar::is_root_of_unity_risk;
use qdouble_core::u2h::{Pbw, U2h};
use qdouble_core::{Field, Rat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Stream ids keep the draws of different consumers independent.
const POINT_STREAM: u64 = 1;
const PAIR_STREAM: u64 = 2;

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// `count` distinct rationals `a/b`, avoiding `0`, `±1` and roots of unity of
/// small order, where `q`-integers up to 8 would vanish.
pub fn sample_points(seed: u64, count: usize) -> Vec<Rat> {
    let mut r = rng(seed, POINT_STREAM);
    let mut out: Vec<Rat> = Vec::with_capacity(count);
    while out.len() < count {
        let num: i64 = r.gen_range(-9..=9);
        let den: i64 = r.gen_range(1..=5);
        if num == 0 {
            continue;
        }
        let v = Rat::new(num, den);
        if v.abs().is_one() || is_root_of_unity_risk(&v, 8) || out.contains(&v) {
            continue;
        }
        out.push(v);
    }
    out
}

/// `count` pairs of random polynomials with 1 to 3 terms of degree at most
/// `degree` and coefficients in `-3..=3`.
pub fn random_pairs<F: Field>(seed: u64, count: usize, degree: u32) -> Vec<(Pbw<F>, Pbw<F>)> {
    let monos = U2h::<F>::monomials(degree);
    let mut r = rng(seed, PAIR_STREAM);
    let poly = |r: &mut ChaCha8Rng| {
        let mut p = Pbw::zero();
        while p.is_zero() {
            for _ in 0..r.gen_range(1..=3) {
                let m = monos[r.gen_range(0..monos.len())];
                p.add_term(m, &F::from_i64(r.gen_range(-3..=3)));
            }
        }
        p
    };
    (0..count).map(|_| (poly(&mut r), poly(&mut r))).collect()
}
