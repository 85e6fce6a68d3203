use std::sync::Arc;

use sta_core::Mv;
use sta_fields::{Dual, Field, LatticeField, PotentialSpec, SpacetimePoint};

use crate::balance::{adjoint_images, divergence, Local};
use crate::{current, ExtensorError};

/// A point-dependent (1,1)-extensor given by its images T(γ^μ) and their derivatives.
pub trait ExtensorField: Send + Sync {
    fn images(&self, p: &SpacetimePoint) -> Result<[Dual; 4], ExtensorError>;
}

/// ∂_n·∂T(n) = Σ_μ ∂_μT(γ^μ).
pub fn extensor_divergence(t: &dyn ExtensorField, p: &SpacetimePoint) -> Result<Mv, ExtensorError> {
    Ok(divergence(&t.images(p)?))
}

/// ∂_n·∂[T(n)∧x] − [∂_n·∂T(n)]∧x − bif(T), an identity for every extensor field.
pub fn position_wedge_identity(t: &dyn ExtensorField, p: &SpacetimePoint, origin: &SpacetimePoint) -> Result<Mv, ExtensorError> {
    let images = t.images(p)?;
    let x = Dual::new(p.position(origin), std::array::from_fn(Mv::gamma));
    let wedged: [Dual; 4] = std::array::from_fn(|mu| images[mu].wedge(&x));
    let ext = crate::Extensor11::from_images(&images.map(|d| d.v));
    Ok(divergence(&wedged) - divergence(&images).wedge(&x.v) - ext.bif())
}

/// Which energy-momentum density to expose as an extensor field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MomentumKind {
    /// T† including the −e n·A J term.
    Adjoint,
    /// T, the adjoint of the above.
    Direct,
    /// T_D† = ⟨(n·∂)φ Kφ̃⟩₁ without the gauge term.
    FreeAdjoint,
}

#[derive(Clone)]
pub struct EnergyMomentumField {
    pub phi: Arc<dyn Field>,
    pub pot: PotentialSpec,
    pub kind: MomentumKind,
}

impl ExtensorField for EnergyMomentumField {
    fn images(&self, p: &SpacetimePoint) -> Result<[Dual; 4], ExtensorError> {
        let local = Local::at(self.phi.as_ref(), &self.pot, p, &SpacetimePoint::origin())?;
        Ok(match self.kind {
            MomentumKind::Adjoint => local.momentum_images(),
            MomentumKind::Direct => adjoint_images(&local.momentum_images()),
            MomentumKind::FreeAdjoint => local.free_momentum_images(),
        })
    }
}

/// ∫J⁰ dz over one stored lattice level, summed in cell order.
pub fn total_charge(lattice: &LatticeField, it: usize) -> f64 {
    lattice.level(it).iter().map(|phi| current(phi).vector_components()[0]).sum::<f64>() * lattice.dz()
}
