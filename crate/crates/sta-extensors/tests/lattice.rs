use std::sync::Arc;

use sta_extensors::balance::{angular_balance_of, momentum_balance_of};
use sta_extensors::{momentum_balance_residual, total_charge, BalanceOptions, Local};
use sta_fields::{
    dhe_residual, evolve_dhe, FGauge, LatticeField, LatticeSlice, PlaneWave, PotentialFamily, PotentialSpec, Superposition,
};

fn electric() -> PotentialSpec {
    PotentialSpec::new(PotentialFamily::ConstantF { f: [0.0, 0.0, 0.5, 0.0, 0.0, 0.0], gauge: FGauge::Temporal }, 0.3, 1.0)
}

fn evolve(n: usize, steps: usize) -> LatticeField {
    let m = 1.0;
    let zeta = (std::f64::consts::TAU / m).asinh();
    let init = Superposition::new(vec![
        Arc::new(PlaneWave::rest(m)),
        Arc::new(PlaneWave::boosted(m, [0.0, 0.0, zeta], [0.0; 3]).with_amplitude(0.3)),
    ]);
    let slice = LatticeSlice::sample(&init, n, 1.0, 0.0).unwrap();
    evolve_dhe(&slice, &electric(), 0.5 / n as f64, steps).unwrap()
}

#[test]
fn lattice_balance_laws_converge() {
    let pot = electric();
    let mut rows = Vec::new();
    for n in [64usize, 128, 256] {
        let lat = evolve(n, 100 * n / 64);
        let (mut dhe, mut mom, mut ang) = (0.0f64, 0.0f64, 0.0f64);
        for p in lat.interior_points(2) {
            dhe = dhe.max(dhe_residual(&lat, &pot, &p).unwrap().norm());
            let local = Local::at(&lat, &pot, &p, &Default::default()).unwrap();
            mom = mom.max(momentum_balance_of(&local).norm());
            ang = ang.max(angular_balance_of(&local).norm());
        }
        rows.push([dhe, mom, ang]);
    }
    println!("{rows:?}");
    for k in 0..3 {
        for w in rows.windows(2) {
            let order = (w[0][k] / w[1][k]).log2();
            assert!((order - 2.0).abs() < 0.2, "quantity {k} order {order}: {rows:?}");
        }
    }
}

#[test]
fn lattice_gate_admits_evolved_solution() {
    let lat = evolve(64, 20);
    let opts = BalanceOptions::lattice(lat.dz());
    for p in lat.interior_points(2) {
        momentum_balance_residual(&lat, &electric(), &p, &opts).unwrap();
    }
}

#[test]
fn charge_is_conserved() {
    let lat = evolve(256, 100);
    let q0 = total_charge(&lat, 0);
    let drift = (0..lat.nt()).map(|it| (total_charge(&lat, it) - q0).abs() / q0).fold(0.0, f64::max);
    assert!(drift < 1e-6, "{drift:e}");
}
