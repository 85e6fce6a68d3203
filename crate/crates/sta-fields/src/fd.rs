//! Central-difference derivative engine over any field's evaluation map.

use sta_core::Mv;

use crate::{Field, FieldError, Jet, SpacetimePoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FdOrder {
    #[default]
    Second,
    Fourth,
}

impl FdOrder {
    /// Stencil radius in cells.
    pub fn radius(self) -> usize {
        match self {
            FdOrder::Second => 1,
            FdOrder::Fourth => 2,
        }
    }

    /// First-derivative weights at offsets −r..=r (divide by h).
    pub fn first(self) -> &'static [f64] {
        match self {
            FdOrder::Second => &[-0.5, 0.0, 0.5],
            FdOrder::Fourth => &[1.0 / 12.0, -8.0 / 12.0, 0.0, 8.0 / 12.0, -1.0 / 12.0],
        }
    }

    /// Second-derivative weights at offsets −r..=r (divide by h²).
    pub fn second(self) -> &'static [f64] {
        match self {
            FdOrder::Second => &[1.0, -2.0, 1.0],
            FdOrder::Fourth => &[-1.0 / 12.0, 16.0 / 12.0, -30.0 / 12.0, 16.0 / 12.0, -1.0 / 12.0],
        }
    }
}

/// Replaces the derivatives of `inner` by central differences of its values with step `h`.
/// Mixed second derivatives use the tensor product of first-derivative stencils.
pub struct FiniteDifference<F> {
    pub inner: F,
    pub h: f64,
    pub order: FdOrder,
}

impl<F: Field> FiniteDifference<F> {
    pub fn new(inner: F, h: f64, order: FdOrder) -> Self {
        Self { inner, h, order }
    }

    fn offsets(&self) -> impl Iterator<Item = (f64, usize)> + '_ {
        let r = self.order.radius() as isize;
        (-r..=r).enumerate().map(move |(i, k)| (k as f64 * self.h, i))
    }
}

impl<F: Field> Field for FiniteDifference<F> {
    fn value(&self, p: &SpacetimePoint) -> Result<Mv, FieldError> {
        self.inner.value(p)
    }

    fn jet(&self, p: &SpacetimePoint) -> Result<Jet, FieldError> {
        let (w1, w2) = (self.order.first(), self.order.second());
        let h = self.h;
        let v = self.inner.value(p)?;
        let mut jet = Jet::constant(v);
        for mu in 0..4 {
            let mut d = Mv::zero();
            let mut dd = Mv::zero();
            for (off, i) in self.offsets() {
                let f = if off == 0.0 { v } else { self.inner.value(&p.shifted(mu, off))? };
                d += f * w1[i];
                dd += f * w2[i];
            }
            jet.d[mu] = d / h;
            jet.dd[mu][mu] = dd / (h * h);
        }
        for mu in 0..4 {
            for nu in (mu + 1)..4 {
                let mut acc = Mv::zero();
                for (a, i) in self.offsets() {
                    if w1[i] == 0.0 {
                        continue;
                    }
                    for (b, j) in self.offsets() {
                        if w1[j] == 0.0 {
                            continue;
                        }
                        let q = p.shifted(mu, a).shifted(nu, b);
                        acc += self.inner.value(&q)? * (w1[i] * w1[j]);
                    }
                }
                jet.dd[mu][nu] = acc / (h * h);
                jet.dd[nu][mu] = jet.dd[mu][nu];
            }
        }
        Ok(jet)
    }
}
