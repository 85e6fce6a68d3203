use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Index, Mul, Neg, Sub, SubAssign};

use crate::table::{DISPLAY_ORDER, GRADE, METRIC, PSEUDOSCALAR, REVERSE_SIGN, SIGN};
use crate::Scalar;

/// Element of Cl(1,3), stored densely by blade bitmask.
///
/// Coefficient `b` multiplies the blade whose factors are the γ_μ with bit μ
/// set in `b`, in ascending order. `0b0011` is γ_0γ_1.
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct Multivector<T> {
    c: [T; 16],
}

impl<T: Scalar> Multivector<T> {
    pub fn zero() -> Self {
        Self { c: [T::zero(); 16] }
    }

    pub fn one() -> Self {
        Self::scalar(T::one())
    }

    pub fn scalar(s: T) -> Self {
        let mut m = Self::zero();
        m.c[0] = s;
        m
    }

    pub fn from_coeffs(c: [T; 16]) -> Self {
        Self { c }
    }

    /// Unit blade for the bitmask `mask`.
    pub fn blade(mask: usize) -> Self {
        let mut m = Self::zero();
        m.c[mask] = T::one();
        m
    }

    /// γ_μ, the lowered basis vector.
    pub fn gamma(mu: usize) -> Self {
        Self::blade(1 << mu)
    }

    /// γ^μ = η^{μμ} γ_μ.
    pub fn gamma_up(mu: usize) -> Self {
        Self::gamma(mu) * T::of(METRIC[mu] as f64)
    }

    /// Vector v^μ γ_μ from contravariant components.
    pub fn vector(v: [T; 4]) -> Self {
        let mut m = Self::zero();
        for (mu, x) in v.into_iter().enumerate() {
            m.c[1 << mu] = x;
        }
        m
    }

    /// Vector v_μ γ^μ from covariant components.
    pub fn covector(v: [T; 4]) -> Self {
        let mut m = Self::zero();
        for (mu, x) in v.into_iter().enumerate() {
            m.c[1 << mu] = x * T::of(METRIC[mu] as f64);
        }
        m
    }

    /// Contravariant components v^μ of the grade-1 part.
    pub fn vector_components(&self) -> [T; 4] {
        [self.c[1], self.c[2], self.c[4], self.c[8]]
    }

    /// Covariant components v_μ = η_{μμ} v^μ of the grade-1 part.
    pub fn covector_components(&self) -> [T; 4] {
        let v = self.vector_components();
        std::array::from_fn(|mu| v[mu] * T::of(METRIC[mu] as f64))
    }

    pub fn coeffs(&self) -> &[T; 16] {
        &self.c
    }

    pub fn coeff(&self, mask: usize) -> T {
        self.c[mask]
    }

    pub fn set_coeff(&mut self, mask: usize, value: T) {
        self.c[mask] = value;
    }

    pub fn scalar_part(&self) -> T {
        self.c[0]
    }

    /// Coefficient on γ_5 = −γ_0γ_1γ_2γ_3.
    pub fn pseudoscalar_part(&self) -> T {
        -self.c[PSEUDOSCALAR]
    }

    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        Self { c: self.c.map(f) }
    }

    pub fn geometric_product(&self, rhs: &Self) -> Self {
        self.product_filtered(rhs, |_, _, _| true)
    }

    /// Sum over blade pairs of the product, keeping only pairs accepted by `keep(ga, gb, g_result)`.
    fn product_filtered(&self, rhs: &Self, keep: impl Fn(usize, usize, usize) -> bool) -> Self {
        let mut out = [T::zero(); 16];
        for a in 0..16 {
            let x = self.c[a];
            if x == T::zero() {
                continue;
            }
            for b in 0..16 {
                let y = rhs.c[b];
                if y == T::zero() || !keep(GRADE[a], GRADE[b], GRADE[a ^ b]) {
                    continue;
                }
                let p = x * y;
                if SIGN[a][b] > 0 {
                    out[a ^ b] = out[a ^ b] + p;
                } else {
                    out[a ^ b] = out[a ^ b] - p;
                }
            }
        }
        Self { c: out }
    }

    /// ⟨a⟩_k. Panics if `k > 4`.
    pub fn grade(&self, k: usize) -> Self {
        assert!(k <= 4, "grade {k} out of range 0..=4");
        let mut out = Self::zero();
        for b in 0..16 {
            if GRADE[b] == k {
                out.c[b] = self.c[b];
            }
        }
        out
    }

    pub fn even(&self) -> Self {
        self.grade_filter(|k| k % 2 == 0)
    }

    pub fn odd(&self) -> Self {
        self.grade_filter(|k| k % 2 == 1)
    }

    fn grade_filter(&self, f: impl Fn(usize) -> bool) -> Self {
        let mut out = Self::zero();
        for b in 0..16 {
            if f(GRADE[b]) {
                out.c[b] = self.c[b];
            }
        }
        out
    }

    /// Grades carrying a coefficient with magnitude above `tol`.
    pub fn grades_present(&self, tol: T) -> Vec<usize> {
        let mut present = [false; 5];
        for b in 0..16 {
            if self.c[b].abs() > tol {
                present[GRADE[b]] = true;
            }
        }
        (0..5).filter(|&k| present[k]).collect()
    }

    pub fn reverse(&self) -> Self {
        let mut out = *self;
        for b in 0..16 {
            if REVERSE_SIGN[b] < 0 {
                out.c[b] = -out.c[b];
            }
        }
        out
    }

    /// Grade involution: grade r scaled by (−1)^r.
    pub fn involute(&self) -> Self {
        let mut out = *self;
        for b in 0..16 {
            if GRADE[b] % 2 == 1 {
                out.c[b] = -out.c[b];
            }
        }
        out
    }

    pub fn clifford_conjugate(&self) -> Self {
        self.reverse().involute()
    }

    /// Σ ⟨a_r b_s⟩_{r+s}.
    pub fn wedge(&self, rhs: &Self) -> Self {
        self.product_filtered(rhs, |r, s, g| g == r + s)
    }

    /// Left contraction a⌟b = Σ ⟨a_r b_s⟩_{s−r}, zero where r > s.
    pub fn left_contract(&self, rhs: &Self) -> Self {
        self.product_filtered(rhs, |r, s, g| s >= r && g == s - r)
    }

    /// Right contraction a⌞b = Σ ⟨a_r b_s⟩_{r−s}, zero where s > r.
    pub fn right_contract(&self, rhs: &Self) -> Self {
        self.product_filtered(rhs, |r, s, g| r >= s && g == r - s)
    }

    /// a·b = ⟨ã b⟩_0: symmetric, zero between different grades, γ_1·γ_1 = −1.
    pub fn scalar_product(&self, rhs: &Self) -> T {
        let mut acc = T::zero();
        for b in 0..16 {
            let p = self.c[b] * rhs.c[b];
            // ã b picks the blade's own square times its reverse sign.
            let s = SIGN[b][b] * REVERSE_SIGN[b];
            if s > 0 {
                acc = acc + p;
            } else {
                acc = acc - p;
            }
        }
        acc
    }

    /// Euclidean norm of the 16 coefficients (bookkeeping norm, not the algebra's).
    pub fn norm(&self) -> T {
        self.c.iter().fold(T::zero(), |acc, &x| acc + x * x).sqrt()
    }

    pub fn max_abs(&self) -> T {
        self.c.iter().fold(T::zero(), |acc, &x| acc.max(x.abs()))
    }

    pub fn distance(&self, other: &Self) -> T {
        (*self - *other).norm()
    }

    pub fn is_finite(&self) -> bool {
        self.c.iter().all(|x| x.is_finite())
    }

    /// Norm of the odd part.
    pub fn odd_norm(&self) -> T {
        self.odd().norm()
    }

    pub fn is_even(&self, tol: T) -> bool {
        self.odd_norm() <= tol
    }

    /// Product with γ^μ on the left, summed against `parts[μ]`: Σ γ^μ parts[μ].
    pub fn dirac_sum(parts: &[Self; 4]) -> Self {
        (0..4).fold(Self::zero(), |acc, mu| acc + Self::gamma_up(mu) * parts[mu])
    }

    pub fn cast<U: Scalar>(&self) -> Multivector<U> {
        Multivector::from_coeffs(self.c.map(|x| U::of(x.as_f64())))
    }
}

impl<T> Index<usize> for Multivector<T> {
    type Output = T;
    fn index(&self, mask: usize) -> &T {
        &self.c[mask]
    }
}

impl<T: Scalar> Add for Multivector<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { c: std::array::from_fn(|i| self.c[i] + rhs.c[i]) }
    }
}

impl<T: Scalar> Sub for Multivector<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { c: std::array::from_fn(|i| self.c[i] - rhs.c[i]) }
    }
}

impl<T: Scalar> Neg for Multivector<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|x| -x)
    }
}

impl<T: Scalar> AddAssign for Multivector<T> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<T: Scalar> SubAssign for Multivector<T> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<T: Scalar> Mul for Multivector<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.geometric_product(&rhs)
    }
}

impl<T: Scalar> Mul<T> for Multivector<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        self.map(|x| x * rhs)
    }
}

impl<T: Scalar> Div<T> for Multivector<T> {
    type Output = Self;
    fn div(self, rhs: T) -> Self {
        self.map(|x| x / rhs)
    }
}

macro_rules! scalar_lhs {
    ($($t:ty),*) => {$(
        impl Mul<Multivector<$t>> for $t {
            type Output = Multivector<$t>;
            fn mul(self, rhs: Multivector<$t>) -> Multivector<$t> {
                rhs * self
            }
        }
    )*};
}
scalar_lhs!(f32, f64);

impl<T: Scalar> Sum for Multivector<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

fn blade_name(mask: usize) -> String {
    if mask == PSEUDOSCALAR {
        return "g5".into();
    }
    let mut s = String::from("g");
    for mu in 0..4 {
        if mask >> mu & 1 == 1 {
            s.push(char::from(b'0' + mu as u8));
        }
    }
    s
}

/// Stable text form, e.g. `3.0*g01 - 1.0*g5`. The top blade is shown as γ_5
/// with its coefficient converted accordingly.
impl<T: Scalar> fmt::Display for Multivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &b in DISPLAY_ORDER.iter() {
            let mut x = self.c[b].as_f64();
            if x == 0.0 {
                continue;
            }
            if b == PSEUDOSCALAR {
                x = -x;
            }
            let mag = format!("{:?}", x.abs());
            let body = if b == 0 { mag } else { format!("{mag}*{}", blade_name(b)) };
            match (first, x < 0.0) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
