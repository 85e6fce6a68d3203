//! Residual sweeps over sample points with order-independent reductions.

use rayon::prelude::*;

use crate::SpacetimePoint;

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct ResidualStats {
    pub points: usize,
    pub skipped: usize,
    pub max: f64,
    pub mean: f64,
}

impl ResidualStats {
    /// Reduces in index order with Neumaier summation. `None` entries count as skipped.
    pub fn from_values(values: &[Option<f64>]) -> Self {
        let (mut sum, mut comp, mut max) = (0.0f64, 0.0f64, 0.0f64);
        let mut points = 0;
        for v in values.iter().flatten() {
            points += 1;
            let t = sum + v;
            comp += if sum.abs() >= v.abs() { (sum - t) + v } else { (v - t) + sum };
            sum = t;
            if v.is_nan() || *v > max {
                max = if v.is_nan() { f64::NAN } else { *v };
            }
        }
        let mean = if points == 0 { 0.0 } else { (sum + comp) / points as f64 };
        Self { points, skipped: values.len() - points, max, mean }
    }
}

/// Evaluates `f` on every item in parallel; results are collected in input order.
pub fn sweep<P, E, F>(items: &[P], f: F) -> Result<ResidualStats, E>
where
    P: Sync,
    E: Send,
    F: Fn(&P) -> Result<Option<f64>, E> + Sync + Send,
{
    let values = items.par_iter().map(&f).collect::<Result<Vec<_>, E>>()?;
    Ok(ResidualStats::from_values(&values))
}

/// Axis-aligned sampling region.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampleBox {
    pub min: [f64; 4],
    pub max: [f64; 4],
}

impl SampleBox {
    pub fn cube(half_width: f64) -> Self {
        Self { min: [-half_width; 4], max: [half_width; 4] }
    }

    /// First `n` points of the Halton sequence in bases 2, 3, 5, 7, scaled into the box.
    pub fn halton(&self, n: usize) -> Vec<SpacetimePoint> {
        const BASES: [usize; 4] = [2, 3, 5, 7];
        (1..=n)
            .map(|i| {
                SpacetimePoint::new(std::array::from_fn(|mu| {
                    self.min[mu] + (self.max[mu] - self.min[mu]) * radical_inverse(i, BASES[mu])
                }))
            })
            .collect()
    }

    /// Tensor grid with `per_axis` points per coordinate, endpoints included.
    pub fn grid(&self, per_axis: usize) -> Vec<SpacetimePoint> {
        let per_axis = per_axis.max(1);
        let coord = |mu: usize, k: usize| {
            if per_axis == 1 {
                0.5 * (self.min[mu] + self.max[mu])
            } else {
                self.min[mu] + (self.max[mu] - self.min[mu]) * k as f64 / (per_axis - 1) as f64
            }
        };
        let mut out = Vec::with_capacity(per_axis.pow(4));
        for a in 0..per_axis {
            for b in 0..per_axis {
                for c in 0..per_axis {
                    for d in 0..per_axis {
                        out.push(SpacetimePoint::new([coord(0, a), coord(1, b), coord(2, c), coord(3, d)]));
                    }
                }
            }
        }
        out
    }
}

fn radical_inverse(mut i: usize, base: usize) -> f64 {
    let (mut inv, mut f) = (0.0, 1.0 / base as f64);
    while i > 0 {
        inv += f * (i % base) as f64;
        i /= base;
        f /= base as f64;
    }
    inv
}
