use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;

use crate::{Multivector, Scalar};

pub type ComplexScalar<T> = Complex<T>;

/// Element re + i·im of the complexified algebra; i is a central unit.
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct ComplexMultivector<T> {
    pub re: Multivector<T>,
    pub im: Multivector<T>,
}

impl<T: Scalar> ComplexMultivector<T> {
    pub fn new(re: Multivector<T>, im: Multivector<T>) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(Multivector::zero(), Multivector::zero())
    }

    pub fn one() -> Self {
        Self::from(Multivector::one())
    }

    pub fn i() -> Self {
        Self::new(Multivector::zero(), Multivector::one())
    }

    pub fn scale(&self, z: Complex<T>) -> Self {
        Self::new(self.re * z.re - self.im * z.im, self.re * z.im + self.im * z.re)
    }

    /// Complex conjugation i → −i.
    pub fn conj(&self) -> Self {
        Self::new(self.re, -self.im)
    }

    pub fn reverse(&self) -> Self {
        Self::new(self.re.reverse(), self.im.reverse())
    }

    pub fn grade(&self, k: usize) -> Self {
        Self::new(self.re.grade(k), self.im.grade(k))
    }

    pub fn norm(&self) -> T {
        (self.re.norm().powi(2) + self.im.norm().powi(2)).sqrt()
    }

    pub fn coeff(&self, mask: usize) -> Complex<T> {
        Complex::new(self.re.coeff(mask), self.im.coeff(mask))
    }
}

impl<T: Scalar> From<Multivector<T>> for ComplexMultivector<T> {
    fn from(re: Multivector<T>) -> Self {
        Self::new(re, Multivector::zero())
    }
}

impl<T: Scalar> Add for ComplexMultivector<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<T: Scalar> Sub for ComplexMultivector<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<T: Scalar> Neg for ComplexMultivector<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl<T: Scalar> Mul for ComplexMultivector<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl<T: Scalar> Mul<T> for ComplexMultivector<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        Self::new(self.re * rhs, self.im * rhs)
    }
}
