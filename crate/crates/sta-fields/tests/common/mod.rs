#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sta_core::Mv;
use sta_fields::{PolynomialField, SpacetimePoint};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_mv(r: &mut ChaCha8Rng) -> Mv {
    Mv::from_coeffs(std::array::from_fn(|_| r.gen_range(-1.0..1.0)))
}

pub fn random_poly(r: &mut ChaCha8Rng, even: bool) -> PolynomialField {
    let g = |r: &mut ChaCha8Rng| {
        let m = random_mv(r);
        if even {
            m.even()
        } else {
            m
        }
    };
    let c0 = g(r) + Mv::one() * 2.0;
    let c1 = std::array::from_fn(|_| g(r) * 0.5);
    let c2 = std::array::from_fn(|_| std::array::from_fn(|_| g(r) * 0.2));
    PolynomialField::new(c0, c1, c2)
}

pub fn random_vector_poly(r: &mut ChaCha8Rng) -> PolynomialField {
    let g = |r: &mut ChaCha8Rng| random_mv(r).grade(1);
    let c0 = g(r);
    let c1 = std::array::from_fn(|_| g(r));
    let c2 = std::array::from_fn(|_| std::array::from_fn(|_| g(r)));
    PolynomialField::new(c0, c1, c2)
}

pub fn random_point(r: &mut ChaCha8Rng, half: f64) -> SpacetimePoint {
    SpacetimePoint::new(std::array::from_fn(|_| r.gen_range(-half..half)))
}

/// Reference d'Alembertian and gradient by 4th-order central differences of values.
pub fn fd_first(f: impl Fn(&SpacetimePoint) -> Mv, p: &SpacetimePoint, mu: usize, h: f64) -> Mv {
    (f(&p.shifted(mu, -2.0 * h)) - f(&p.shifted(mu, -h)) * 8.0 + f(&p.shifted(mu, h)) * 8.0
        - f(&p.shifted(mu, 2.0 * h)))
        / (12.0 * h)
}
