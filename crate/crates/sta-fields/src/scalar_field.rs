//! Real-valued fields used as gauge functions χ and amplitude envelopes.

use crate::{ScalarJet, SpacetimePoint};

pub trait ScalarField: Send + Sync {
    fn jet(&self, p: &SpacetimePoint) -> ScalarJet;

    fn value(&self, p: &SpacetimePoint) -> f64 {
        self.jet(p).v
    }
}

/// c + k_μ x^μ + ½ h_{μν} x^μ x^ν, with `h` symmetrised on construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadratic {
    pub c: f64,
    pub k: [f64; 4],
    pub h: [[f64; 4]; 4],
}

impl Quadratic {
    pub fn new(c: f64, k: [f64; 4], h: [[f64; 4]; 4]) -> Self {
        let h = std::array::from_fn(|i| std::array::from_fn(|j| 0.5 * (h[i][j] + h[j][i])));
        Self { c, k, h }
    }

    pub fn linear(k: [f64; 4]) -> Self {
        Self::new(0.0, k, [[0.0; 4]; 4])
    }

    /// The product x^a x^b.
    pub fn monomial(a: usize, b: usize) -> Self {
        let mut h = [[0.0; 4]; 4];
        h[a][b] += 1.0;
        h[b][a] += 1.0;
        Self::new(0.0, [0.0; 4], h)
    }
}

impl ScalarField for Quadratic {
    fn jet(&self, p: &SpacetimePoint) -> ScalarJet {
        let x = p.x;
        let hx: [f64; 4] = std::array::from_fn(|i| (0..4).map(|j| self.h[i][j] * x[j]).sum());
        let v = self.c + (0..4).map(|i| self.k[i] * x[i] + 0.5 * x[i] * hx[i]).sum::<f64>();
        ScalarJet { v, d: std::array::from_fn(|i| self.k[i] + hx[i]), dd: self.h }
    }
}

/// offset + amplitude·exp(−|x − center|²/(2σ²)) with the Euclidean chart distance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Gaussian {
    pub offset: f64,
    pub amplitude: f64,
    pub center: [f64; 4],
    pub sigma: f64,
}

impl ScalarField for Gaussian {
    fn jet(&self, p: &SpacetimePoint) -> ScalarJet {
        let s2 = self.sigma * self.sigma;
        let y: [f64; 4] = std::array::from_fn(|i| p.x[i] - self.center[i]);
        let g = self.amplitude * (-y.iter().map(|u| u * u).sum::<f64>() / (2.0 * s2)).exp();
        ScalarJet {
            v: self.offset + g,
            d: std::array::from_fn(|i| -g * y[i] / s2),
            dd: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    let delta = if i == j { 1.0 } else { 0.0 };
                    g * (y[i] * y[j] / s2 - delta) / s2
                })
            }),
        }
    }
}

/// amplitude·sin(k_μ x^μ + phase).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sinusoid {
    pub amplitude: f64,
    pub k: [f64; 4],
    pub phase: f64,
}

impl ScalarField for Sinusoid {
    fn jet(&self, p: &SpacetimePoint) -> ScalarJet {
        let xi = p.pair(&self.k) + self.phase;
        let (s, c) = xi.sin_cos();
        let a = self.amplitude;
        ScalarJet {
            v: a * s,
            d: self.k.map(|k| a * c * k),
            dd: std::array::from_fn(|i| std::array::from_fn(|j| -a * s * self.k[i] * self.k[j])),
        }
    }
}
