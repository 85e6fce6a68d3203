use std::fmt;
use std::ops::{Add, Sub};

use sta_core::{gamma5, Mv};

/// (1,1)-extensor stored as T^{μν} = T(γ^μ)·γ^ν, so T(γ^μ) = T^{μν}γ_ν.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Extensor11 {
    pub t: [[f64; 4]; 4],
}

const ETA: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

impl Extensor11 {
    pub fn zero() -> Self {
        Self::default()
    }

    /// T(n) = n, T^{μν} = η^{μν}.
    pub fn identity() -> Self {
        Self { t: std::array::from_fn(|i| std::array::from_fn(|j| if i == j { ETA[i] } else { 0.0 })) }
    }

    /// From the images T(γ^μ); only their grade-1 parts are kept.
    pub fn from_images(images: &[Mv; 4]) -> Self {
        Self { t: images.map(|v| v.vector_components()) }
    }

    /// From a linear map on 1-forms, sampled on γ^μ.
    pub fn from_fn(f: impl Fn(&Mv) -> Mv) -> Self {
        Self::from_images(&std::array::from_fn(|mu| f(&Mv::gamma_up(mu))))
    }

    /// T(γ^μ).
    pub fn image(&self, mu: usize) -> Mv {
        Mv::vector(self.t[mu])
    }

    pub fn images(&self) -> [Mv; 4] {
        std::array::from_fn(|mu| self.image(mu))
    }

    /// T(n) for the grade-1 part of n.
    pub fn apply(&self, n: &Mv) -> Mv {
        let c = n.covector_components();
        (0..4).map(|mu| self.image(mu) * c[mu]).sum()
    }

    /// T†, defined by T(n)·m = n·T†(m); the transpose of the component matrix.
    pub fn adjoint(&self) -> Self {
        Self { t: std::array::from_fn(|i| std::array::from_fn(|j| self.t[j][i])) }
    }

    /// tr T = γ^μ·T(γ_μ).
    pub fn trace(&self) -> f64 {
        (0..4).map(|mu| ETA[mu] * self.t[mu][mu]).sum()
    }

    /// bif T = γ^μ∧T†(γ_μ).
    pub fn bif(&self) -> Mv {
        let adj = self.adjoint();
        (0..4).map(|mu| Mv::gamma(mu).wedge(&adj.image(mu))).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.t.iter().flatten().fold(0.0, |a, x| a.max(x.abs()))
    }

    /// T − T†.
    pub fn antisymmetric_part(&self) -> Self {
        *self - self.adjoint()
    }
}

impl Add for Extensor11 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { t: std::array::from_fn(|i| std::array::from_fn(|j| self.t[i][j] + rhs.t[i][j])) }
    }
}

impl Sub for Extensor11 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { t: std::array::from_fn(|i| std::array::from_fn(|j| self.t[i][j] - rhs.t[i][j])) }
    }
}

impl fmt::Display for Extensor11 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.t.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:?}")).collect();
            write!(f, "{}", cells.join(" "))?;
            if i < 3 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// (1,2)-extensor: bivector images S(γ^μ).
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Extensor12 {
    pub images: [Mv; 4],
}

impl Extensor12 {
    pub fn apply(&self, n: &Mv) -> Mv {
        let c = n.covector_components();
        (0..4).map(|mu| self.images[mu] * c[mu]).sum()
    }
}

/// S(n) = ½γ_5(s∧n).
pub fn spin_extensor(phi: &Mv) -> Extensor12 {
    let s = crate::spin(phi);
    Extensor12 { images: std::array::from_fn(|mu| gamma5::<f64>() * s.wedge(&Mv::gamma_up(mu)) * 0.5) }
}
