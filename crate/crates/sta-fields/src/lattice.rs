//! 1+1D lattice fields depending on (t, x³), periodic in x³, with all time levels kept.

use sta_core::{g21, Mv};

use crate::fd::FdOrder;
use crate::ops::require_even;
use crate::potential::{split_faraday, PotentialFamily};
use crate::snapshot::Snapshot;
use crate::{Field, FieldError, Jet, PotentialSpec, SpacetimePoint};

/// Spatial slice at one time: cells at z = z0 + i·dz, i = 0..n.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeSlice {
    pub z0: f64,
    pub dz: f64,
    pub t: f64,
    pub cells: Vec<Mv>,
}

impl LatticeSlice {
    /// Samples `field` at (t, 0, 0, z) on `n` cells of a periodic box of length `length`.
    pub fn sample(field: &dyn Field, n: usize, length: f64, t: f64) -> Result<Self, FieldError> {
        let dz = length / n as f64;
        let cells = (0..n)
            .map(|i| field.value(&SpacetimePoint::new([t, 0.0, 0.0, i as f64 * dz])))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { z0: 0.0, dz, t, cells })
    }

    pub fn z(&self, i: usize) -> f64 {
        self.z0 + i as f64 * self.dz
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LatticeField {
    z0: f64,
    dz: f64,
    t0: f64,
    dt: f64,
    levels: Vec<Vec<Mv>>,
    order: FdOrder,
}

fn wrap(i: isize, n: usize) -> usize {
    i.rem_euclid(n as isize) as usize
}

impl LatticeField {
    pub fn new(z0: f64, dz: f64, t0: f64, dt: f64, levels: Vec<Vec<Mv>>) -> Result<Self, FieldError> {
        let nz = levels.first().map_or(0, Vec::len);
        if nz == 0 {
            return Err(FieldError::InvalidLattice("no cells".into()));
        }
        if levels.iter().any(|l| l.len() != nz) {
            return Err(FieldError::InvalidLattice("levels differ in cell count".into()));
        }
        if !(dz > 0.0 && dt > 0.0) {
            return Err(FieldError::InvalidLattice(format!("non-positive spacing dz={dz} dt={dt}")));
        }
        Ok(Self { z0, dz, t0, dt, levels, order: FdOrder::Second })
    }

    pub fn with_order(mut self, order: FdOrder) -> Self {
        self.order = order;
        self
    }

    pub fn order(&self) -> FdOrder {
        self.order
    }

    pub fn nz(&self) -> usize {
        self.levels[0].len()
    }

    pub fn nt(&self) -> usize {
        self.levels.len()
    }

    pub fn dz(&self) -> f64 {
        self.dz
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn t(&self, it: usize) -> f64 {
        self.t0 + it as f64 * self.dt
    }

    pub fn z(&self, iz: usize) -> f64 {
        self.z0 + iz as f64 * self.dz
    }

    pub fn point(&self, it: usize, iz: usize) -> SpacetimePoint {
        SpacetimePoint::new([self.t(it), 0.0, 0.0, self.z(iz)])
    }

    pub fn level(&self, it: usize) -> &[Mv] {
        &self.levels[it]
    }

    pub fn levels(&self) -> &[Vec<Mv>] {
        &self.levels
    }

    pub fn slice(&self, it: usize) -> LatticeSlice {
        LatticeSlice { z0: self.z0, dz: self.dz, t: self.t(it), cells: self.levels[it].clone() }
    }

    fn at(&self, it: usize, iz: isize) -> Mv {
        self.levels[it][wrap(iz, self.nz())]
    }

    /// Lattice indices (it, iz) with at least `margin` stored levels on each side.
    pub fn interior(&self, margin: usize) -> Vec<(usize, usize)> {
        let nt = self.nt();
        if nt <= 2 * margin {
            return Vec::new();
        }
        (margin..nt - margin).flat_map(|it| (0..self.nz()).map(move |iz| (it, iz))).collect()
    }

    pub fn interior_points(&self, margin: usize) -> Vec<SpacetimePoint> {
        self.interior(margin).into_iter().map(|(it, iz)| self.point(it, iz)).collect()
    }

    pub fn locate(&self, p: &SpacetimePoint) -> Result<(usize, usize), FieldError> {
        let ft = (p.x[0] - self.t0) / self.dt;
        let fz = (p.x[3] - self.z0) / self.dz;
        let (it, iz) = (ft.round(), fz.round());
        if (ft - it).abs() > 1e-6 || (fz - iz).abs() > 1e-6 {
            return Err(FieldError::OffLattice { x: p.x });
        }
        if it < 0.0 || it as usize >= self.nt() {
            return Err(FieldError::BoundaryPoint { index: it as isize, levels: self.nt() });
        }
        Ok((it as usize, wrap(iz as isize, self.nz())))
    }

    /// Central-difference jet at a lattice site; needs `order.radius()` levels on either side.
    pub fn jet_at(&self, it: usize, iz: usize) -> Result<Jet, FieldError> {
        let r = self.order.radius();
        if it < r || it + r >= self.nt() {
            return Err(FieldError::BoundaryPoint { index: it as isize, levels: self.nt() });
        }
        let (w1, w2) = (self.order.first(), self.order.second());
        let ri = r as isize;
        let (it, iz) = (it as isize, iz as isize);
        let tl = |k: isize| self.at((it + k) as usize, iz);
        let zl = |k: isize| self.at(it as usize, iz + k);
        let mut jet = Jet::constant(self.at(it as usize, iz));
        let (mut d0, mut d3, mut d00, mut d33, mut d03) = (Mv::zero(), Mv::zero(), Mv::zero(), Mv::zero(), Mv::zero());
        for (i, k) in (-ri..=ri).enumerate() {
            d0 += tl(k) * w1[i];
            d00 += tl(k) * w2[i];
            d3 += zl(k) * w1[i];
            d33 += zl(k) * w2[i];
            for (j, l) in (-ri..=ri).enumerate() {
                if w1[i] != 0.0 && w1[j] != 0.0 {
                    d03 += self.at((it + k) as usize, iz + l) * (w1[i] * w1[j]);
                }
            }
        }
        let (dt, dz) = (self.dt, self.dz);
        jet.d[0] = d0 / dt;
        jet.d[3] = d3 / dz;
        jet.dd[0][0] = d00 / (dt * dt);
        jet.dd[3][3] = d33 / (dz * dz);
        jet.dd[0][3] = d03 / (dt * dz);
        jet.dd[3][0] = jet.dd[0][3];
        Ok(jet)
    }

    pub fn snapshot(&self, it: usize) -> Snapshot {
        Snapshot::from_cells(self.dz, self.t(it), &self.levels[it])
    }

    /// Rebuilds a lattice from snapshots at uniformly spaced times.
    pub fn from_snapshots(snaps: &[Snapshot], z0: f64) -> Result<Self, FieldError> {
        if snaps.len() < 2 {
            return Err(FieldError::InvalidLattice("need at least two snapshots".into()));
        }
        let dt = snaps[1].t - snaps[0].t;
        for (i, s) in snaps.iter().enumerate() {
            let expect = snaps[0].t + i as f64 * dt;
            if (s.t - expect).abs() > 1e-9 * dt.abs().max(1.0) {
                return Err(FieldError::InvalidLattice(format!("snapshot {i} is not uniformly spaced in time")));
            }
            if s.dz != snaps[0].dz {
                return Err(FieldError::InvalidLattice(format!("snapshot {i} has a different spacing")));
            }
        }
        let levels = snaps.iter().map(Snapshot::cells).collect::<Result<Vec<_>, _>>()?;
        Self::new(z0, snaps[0].dz, snaps[0].t, dt, levels)
    }
}

impl Field for LatticeField {
    fn value(&self, p: &SpacetimePoint) -> Result<Mv, FieldError> {
        let (it, iz) = self.locate(p)?;
        Ok(self.levels[it][iz])
    }

    fn jet(&self, p: &SpacetimePoint) -> Result<Jet, FieldError> {
        let (it, iz) = self.locate(p)?;
        self.jet_at(it, iz)
    }
}

fn check_potential(pot: &PotentialSpec, slice: &LatticeSlice, t_end: f64) -> Result<(), FieldError> {
    if let PotentialFamily::ConstantF { f, .. } = &pot.family {
        if split_faraday(f).1.norm() > 0.0 {
            return Err(FieldError::UnsupportedPotential("magnetic components need x¹, x² dependence".into()));
        }
    }
    let n = slice.cells.len();
    let length = n as f64 * slice.dz;
    for t in [slice.t, t_end] {
        for i in 0..=n {
            let z = slice.z0 + i as f64 * slice.dz;
            let a = pot.a_dual(&SpacetimePoint::new([t, 0.0, 0.0, z]));
            let scale = 1.0 + a.v.norm();
            if a.d[1].norm() > 1e-12 * scale || a.d[2].norm() > 1e-12 * scale {
                return Err(FieldError::UnsupportedPotential("potential depends on x¹ or x²".into()));
            }
        }
        let a0 = pot.a(&SpacetimePoint::new([t, 0.0, 0.0, slice.z0]));
        let a1 = pot.a(&SpacetimePoint::new([t, 0.0, 0.0, slice.z0 + length]));
        if a0.distance(&a1) > 1e-10 * (1.0 + a0.norm()) {
            return Err(FieldError::UnsupportedPotential("potential is not periodic in x³".into()));
        }
    }
    Ok(())
}

/// ∂_0φ = γ_0[−γ^3∂_3φγ_21 + eAφ + mφγ_0](−γ_21) on every cell.
fn rhs(pot: &PotentialSpec, t: f64, z0: f64, dz: f64, cells: &[Mv], order: FdOrder) -> Vec<Mv> {
    let n = cells.len();
    let w = order.first();
    let r = order.radius() as isize;
    let i21 = g21::<f64>();
    let g0 = Mv::gamma(0);
    let g3_up = Mv::gamma_up(3);
    (0..n)
        .map(|iz| {
            let d3: Mv = (-r..=r)
                .enumerate()
                .map(|(i, k)| cells[wrap(iz as isize + k, n)] * w[i])
                .sum::<Mv>()
                / dz;
            let ea = pot.ea_dual(&SpacetimePoint::new([t, 0.0, 0.0, z0 + iz as f64 * dz])).v;
            let phi = cells[iz];
            g0 * (-(g3_up * d3 * i21) + ea * phi + phi * g0 * pot.m) * (-i21)
        })
        .collect()
}

fn axpy(y: &[Mv], a: f64, x: &[Mv]) -> Vec<Mv> {
    y.iter().zip(x).map(|(y, x)| *y + *x * a).collect()
}

/// RK4 in time with the centered spatial stencil of `space_order`; periodic in x³.
pub fn evolve_dhe_with(
    initial: &LatticeSlice,
    pot: &PotentialSpec,
    dt: f64,
    steps: usize,
    space_order: FdOrder,
) -> Result<LatticeField, FieldError> {
    if initial.cells.len() < 2 * space_order.radius() + 1 {
        return Err(FieldError::InvalidLattice("too few cells for the stencil".into()));
    }
    if !(dt > 0.0) || dt > initial.dz {
        return Err(FieldError::CflViolation { dt, dx: initial.dz });
    }
    for (cell, v) in initial.cells.iter().enumerate() {
        if require_even(v).is_err() {
            return Err(FieldError::NonEvenInitial { cell, odd_norm: v.odd_norm() });
        }
    }
    check_potential(pot, initial, initial.t + steps as f64 * dt)?;

    let (z0, dz) = (initial.z0, initial.dz);
    let mut levels = Vec::with_capacity(steps + 1);
    levels.push(initial.cells.clone());
    let mut t = initial.t;
    for _ in 0..steps {
        let y = levels.last().expect("at least one level");
        let k1 = rhs(pot, t, z0, dz, y, space_order);
        let k2 = rhs(pot, t + dt / 2.0, z0, dz, &axpy(y, dt / 2.0, &k1), space_order);
        let k3 = rhs(pot, t + dt / 2.0, z0, dz, &axpy(y, dt / 2.0, &k2), space_order);
        let k4 = rhs(pot, t + dt, z0, dz, &axpy(y, dt, &k3), space_order);
        let next: Vec<Mv> = (0..y.len())
            .map(|i| y[i] + (k1[i] + k2[i] * 2.0 + k3[i] * 2.0 + k4[i]) * (dt / 6.0))
            .collect();
        levels.push(next);
        t += dt;
    }
    LatticeField::new(z0, dz, initial.t, dt, levels).map(|f| f.with_order(space_order))
}

/// `evolve_dhe_with` using the 2nd-order stencil.
pub fn evolve_dhe(initial: &LatticeSlice, pot: &PotentialSpec, dt: f64, steps: usize) -> Result<LatticeField, FieldError> {
    evolve_dhe_with(initial, pot, dt, steps, FdOrder::Second)
}
