use std::sync::OnceLock;

use num_complex::Complex;
use sta_core::{ComplexMultivector, Multivector, Scalar};

use crate::ComplexMatrix4;

fn c<T: Scalar>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::of(re), T::of(im))
}

fn pauli<T: Scalar>(k: usize) -> [[Complex<T>; 2]; 2] {
    match k {
        1 => [[c(0., 0.), c(1., 0.)], [c(1., 0.), c(0., 0.)]],
        2 => [[c(0., 0.), c(0., -1.)], [c(0., 1.), c(0., 0.)]],
        3 => [[c(1., 0.), c(0., 0.)], [c(0., 0.), c(-1., 0.)]],
        _ => panic!("Pauli index {k} out of range 1..=3"),
    }
}

/// Image of γ_μ: γ̲_0 = diag(1,1,−1,−1), γ̲_k = [[0, −σ_k], [σ_k, 0]].
pub fn gamma_matrix<T: Scalar>(mu: usize) -> ComplexMatrix4<T> {
    let z = [[c(0., 0.); 2]; 2];
    if mu == 0 {
        return ComplexMatrix4::diag([c(1., 0.), c(1., 0.), c(-1., 0.), c(-1., 0.)]);
    }
    let s = pauli::<T>(mu);
    let ms = s.map(|row| row.map(|x| -x));
    ComplexMatrix4::from_blocks([[z, ms], [s, z]])
}

/// Blade images and the inverse of their trace-pairing Gram matrix.
pub struct RepTables<T> {
    blades: [ComplexMatrix4<T>; 16],
    gram_inv: [T; 16],
}

impl<T: Scalar> RepTables<T> {
    fn build() -> Self {
        let blades: [ComplexMatrix4<T>; 16] = std::array::from_fn(|mask| {
            (0..4)
                .filter(|mu| mask >> mu & 1 == 1)
                .fold(ComplexMatrix4::identity(), |acc, mu| acc * gamma_matrix(mu))
        });
        let mut gram_inv = [T::zero(); 16];
        for a in 0..16 {
            for b in 0..16 {
                let g = (blades[a].adjoint() * blades[b]).trace();
                if a == b {
                    gram_inv[a] = T::one() / g.re;
                } else {
                    assert!(g.norm() == T::zero(), "blade images {a} and {b} are not orthogonal");
                }
            }
        }
        Self { blades, gram_inv }
    }

    pub fn blade(&self, mask: usize) -> &ComplexMatrix4<T> {
        &self.blades[mask]
    }
}

/// Scalar types with cached representation tables.
pub trait RepScalar: Scalar {
    fn tables() -> &'static RepTables<Self>;
}

impl RepScalar for f64 {
    fn tables() -> &'static RepTables<f64> {
        static TABLES: OnceLock<RepTables<f64>> = OnceLock::new();
        TABLES.get_or_init(RepTables::build)
    }
}

impl RepScalar for f32 {
    fn tables() -> &'static RepTables<f32> {
        static TABLES: OnceLock<RepTables<f32>> = OnceLock::new();
        TABLES.get_or_init(RepTables::build)
    }
}

pub fn rep<T: RepScalar>(a: &ComplexMultivector<T>) -> ComplexMatrix4<T> {
    let t = T::tables();
    (0..16).fold(ComplexMatrix4::zero(), |acc, b| {
        let z = a.coeff(b);
        if z.re == T::zero() && z.im == T::zero() {
            acc
        } else {
            acc + t.blades[b].scale(z)
        }
    })
}

pub fn rep_real<T: RepScalar>(a: &Multivector<T>) -> ComplexMatrix4<T> {
    rep(&ComplexMultivector::from(*a))
}

/// Inverse of [`rep`] by projection onto the blade images.
pub fn unrep<T: RepScalar>(m: &ComplexMatrix4<T>) -> ComplexMultivector<T> {
    let t = T::tables();
    let mut re = Multivector::zero();
    let mut im = Multivector::zero();
    for b in 0..16 {
        let z = (t.blades[b].adjoint() * *m).trace() * t.gram_inv[b];
        re.set_coeff(b, z.re);
        im.set_coeff(b, z.im);
    }
    ComplexMultivector::new(re, im)
}
