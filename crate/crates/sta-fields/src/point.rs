use std::ops::{Add, Sub};

use sta_core::Mv;

/// Point of Minkowski space in the global chart, x⁰ = t.
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct SpacetimePoint {
    pub x: [f64; 4],
}

impl SpacetimePoint {
    pub fn new(x: [f64; 4]) -> Self {
        Self { x }
    }

    pub fn origin() -> Self {
        Self::default()
    }

    /// Position 1-form x^μ γ_μ relative to `origin`.
    pub fn position(&self, origin: &SpacetimePoint) -> Mv {
        Mv::vector(std::array::from_fn(|mu| self.x[mu] - origin.x[mu]))
    }

    /// Point displaced by `h` along coordinate `mu`.
    pub fn shifted(&self, mu: usize, h: f64) -> Self {
        let mut x = self.x;
        x[mu] += h;
        Self { x }
    }

    /// Minkowski pairing k_μ x^μ with covariant `k`.
    pub fn pair(&self, k_lower: &[f64; 4]) -> f64 {
        (0..4).map(|mu| k_lower[mu] * self.x[mu]).sum()
    }
}

impl Add for SpacetimePoint {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { x: std::array::from_fn(|i| self.x[i] + rhs.x[i]) }
    }
}

impl Sub for SpacetimePoint {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { x: std::array::from_fn(|i| self.x[i] - rhs.x[i]) }
    }
}
