use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use sta_core::Scalar;

/// Element of C(4), row-major.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct ComplexMatrix4<T> {
    pub m: [[Complex<T>; 4]; 4],
}

impl<T: Scalar> ComplexMatrix4<T> {
    pub fn zero() -> Self {
        Self { m: [[Complex::new(T::zero(), T::zero()); 4]; 4] }
    }

    pub fn identity() -> Self {
        Self::diag([Complex::new(T::one(), T::zero()); 4])
    }

    pub fn diag(d: [Complex<T>; 4]) -> Self {
        let mut out = Self::zero();
        for (i, x) in d.into_iter().enumerate() {
            out.m[i][i] = x;
        }
        out
    }

    pub fn from_rows(m: [[Complex<T>; 4]; 4]) -> Self {
        Self { m }
    }

    /// Block matrix [[a, b], [c, d]] from 2×2 blocks.
    pub fn from_blocks(blocks: [[[[Complex<T>; 2]; 2]; 2]; 2]) -> Self {
        let mut out = Self::zero();
        for (bi, row) in blocks.iter().enumerate() {
            for (bj, blk) in row.iter().enumerate() {
                for i in 0..2 {
                    for j in 0..2 {
                        out.m[2 * bi + i][2 * bj + j] = blk[i][j];
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, z: Complex<T>) -> Self {
        Self { m: self.m.map(|row| row.map(|x| x * z)) }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self { m: std::array::from_fn(|i| std::array::from_fn(|j| self.m[j][i].conj())) }
    }

    pub fn trace(&self) -> Complex<T> {
        (0..4).fold(Complex::new(T::zero(), T::zero()), |acc, i| acc + self.m[i][i])
    }

    pub fn column(&self, j: usize) -> [Complex<T>; 4] {
        std::array::from_fn(|i| self.m[i][j])
    }

    pub fn max_abs(&self) -> T {
        self.m.iter().flatten().fold(T::zero(), |acc, z| acc.max(z.norm()))
    }

    pub fn frobenius(&self) -> T {
        self.m.iter().flatten().fold(T::zero(), |acc, z| acc + z.norm_sqr()).sqrt()
    }

    pub fn apply(&self, v: &[Complex<T>; 4]) -> [Complex<T>; 4] {
        std::array::from_fn(|i| {
            (0..4).fold(Complex::new(T::zero(), T::zero()), |acc, k| acc + self.m[i][k] * v[k])
        })
    }
}

impl<T: Scalar> Add for ComplexMatrix4<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { m: std::array::from_fn(|i| std::array::from_fn(|j| self.m[i][j] + rhs.m[i][j])) }
    }
}

impl<T: Scalar> Sub for ComplexMatrix4<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { m: std::array::from_fn(|i| std::array::from_fn(|j| self.m[i][j] - rhs.m[i][j])) }
    }
}

impl<T: Scalar> Neg for ComplexMatrix4<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { m: self.m.map(|row| row.map(|x| -x)) }
    }
}

impl<T: Scalar> Mul for ComplexMatrix4<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = Complex::new(T::zero(), T::zero());
                for k in 0..4 {
                    acc = acc + self.m[i][k] * rhs.m[k][j];
                }
                out.m[i][j] = acc;
            }
        }
        out
    }
}

/// Row-major text, one row per line, entries as `re+imi`.
impl<T: Scalar> fmt::Display for ComplexMatrix4<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.m.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .map(|z| format!("{:?}{:+?}i", z.re.as_f64(), z.im.as_f64()))
                .collect();
            write!(f, "{}", cells.join(" "))?;
            if i < 3 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
