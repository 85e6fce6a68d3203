//! Independent reference arithmetic: blades as index lists, products by
//! explicit bubble sorting and metric contraction. Shares nothing with the
//! library's sign table.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sta_core::Mv;

const ETA: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

fn indices(mask: usize) -> Vec<usize> {
    (0..4).filter(|i| mask >> i & 1 == 1).collect()
}

pub fn word_product(word: &[usize]) -> (f64, usize) {
    let mut idx = word.to_vec();
    let mut sign = 1.0;
    let n = idx.len();
    for pass in 0..n {
        for i in 0..n.saturating_sub(pass + 1) {
            if idx[i] > idx[i + 1] {
                idx.swap(i, i + 1);
                sign = -sign;
            }
        }
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < idx.len() {
        if i + 1 < idx.len() && idx[i] == idx[i + 1] {
            sign *= ETA[idx[i]];
            i += 2;
        } else {
            out.push(idx[i]);
            i += 1;
        }
    }
    (sign, out.iter().fold(0, |m, &k| m | 1 << k))
}

pub fn blade_product(a: usize, b: usize) -> (f64, usize) {
    let mut w = indices(a);
    w.extend(indices(b));
    word_product(&w)
}

pub fn product(a: &Mv, b: &Mv) -> Mv {
    let mut out = [0.0; 16];
    for i in 0..16 {
        for j in 0..16 {
            let (s, k) = blade_product(i, j);
            out[k] += s * a[i] * b[j];
        }
    }
    Mv::from_coeffs(out)
}

pub fn grade_of(mask: usize) -> usize {
    indices(mask).len()
}

/// Grade-filtered reference product keeping ⟨a_r b_s⟩_g where `keep(r, s, g)`.
pub fn filtered(a: &Mv, b: &Mv, keep: impl Fn(usize, usize, usize) -> bool) -> Mv {
    let mut out = [0.0; 16];
    for i in 0..16 {
        for j in 0..16 {
            let (s, k) = blade_product(i, j);
            if keep(grade_of(i), grade_of(j), grade_of(k)) {
                out[k] += s * a[i] * b[j];
            }
        }
    }
    Mv::from_coeffs(out)
}

pub fn word(w: &[usize]) -> Mv {
    let (s, k) = word_product(w);
    Mv::blade(k) * s
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_mv(r: &mut impl Rng) -> Mv {
    Mv::from_coeffs(std::array::from_fn(|_| r.gen_range(-1.0..1.0)))
}

pub fn random_grade(r: &mut impl Rng, k: usize) -> Mv {
    random_mv(r).grade(k)
}

pub fn random_even(r: &mut impl Rng) -> Mv {
    random_mv(r).even()
}

pub fn random_odd(r: &mut impl Rng) -> Mv {
    random_mv(r).odd()
}
