use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sta_core::{gamma5, Mv};
use sta_extensors::{bilinears, spin_extensor, BilinearSet, Extensor11, ExtensorError};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_extensor(r: &mut ChaCha8Rng) -> Extensor11 {
    Extensor11 { t: std::array::from_fn(|_| std::array::from_fn(|_| r.gen_range(-1.0..1.0))) }
}

fn random_even(r: &mut ChaCha8Rng) -> Mv {
    Mv::from_coeffs(std::array::from_fn(|_| r.gen_range(-1.0..1.0))).even()
}

#[test]
fn bilinears_of_unit_spinor() {
    let b = bilinears(&Mv::one()).unwrap();
    assert_eq!(b, BilinearSet { j: Mv::gamma(0), s: Mv::gamma_up(3), rho: 1.0, beta: 0.0, v: Mv::gamma(0) });
    assert_eq!(b.s, -Mv::gamma(3));
}

#[test]
fn bilinears_are_phase_independent() {
    for th in [0.0, 0.4, 2.0, -3.0] {
        let phi = (sta_core::g21::<f64>() * th).exp_commuting_square().unwrap();
        let b = bilinears(&phi).unwrap();
        assert!(b.j.distance(&Mv::gamma(0)) < 1e-15);
        assert!(b.s.distance(&Mv::gamma_up(3)) < 1e-15);
    }
}

#[test]
fn bilinears_of_boost_rotor() {
    let a: f64 = 0.9;
    let phi = (Mv::gamma(3) * Mv::gamma(0) * (a / 2.0)).exp_commuting_square().unwrap();
    let b = bilinears(&phi).unwrap();
    assert!(b.j.distance(&Mv::vector([a.cosh(), 0.0, 0.0, a.sinh()])) < 1e-14);
    // matrix side: column of the rotor image applied the same way
    let m = ideal_rep::rep_real(&b.j);
    let expect = ideal_rep::rep_real(&phi) * ideal_rep::rep_real(&Mv::gamma(0)) * ideal_rep::rep_real(&phi.reverse());
    assert!((m - expect).frobenius() < 1e-13);
}

#[test]
fn bilinear_invariants_on_random_spinors() {
    let mut r = rng(1);
    for _ in 0..300 {
        let phi = random_even(&mut r);
        let b = bilinears(&phi).unwrap();
        assert!(b.j.grades_present(1e-12) == vec![1]);
        assert!(b.s.grade(1).distance(&b.s) < 1e-12);
        assert!(((b.j * b.j).scalar_part() - b.rho * b.rho).abs() < 1e-12);
        assert!(((b.v * b.v).scalar_part() - 1.0).abs() < 1e-12);
        let e = (gamma5::<f64>() * b.beta).exp_commuting_square().unwrap();
        let lhs = phi * Mv::gamma_up(0) * phi.invert_spinor().unwrap();
        assert!(lhs.distance(&(e * b.v)) < 1e-10);
        assert!((gamma5::<f64>() * b.s).distance(&(phi * sta_core::k_trivector::<f64>() * phi.reverse())) < 1e-13);
    }
    assert!(matches!(bilinears(&Mv::gamma(1)), Err(ExtensorError::Field(_))));
    assert!(matches!(bilinears(&Mv::zero()), Err(ExtensorError::Algebra(_))));
}

#[test]
fn identity_extensor() {
    let id = Extensor11::identity();
    assert_eq!(id.trace(), 4.0);
    assert_eq!(id.bif(), Mv::zero());
    let n = Mv::vector([0.3, -1.0, 2.0, 0.5]);
    assert_eq!(id.apply(&n), n);
}

#[test]
fn bif_of_bivector_contraction() {
    let b = Mv::blade(0b0011) * 0.7 + Mv::blade(0b1100) * -0.2 + Mv::blade(0b0110) * 1.5;
    let t = Extensor11::from_fn(|n| n.left_contract(&b));
    assert!(t.bif().distance(&(b * -2.0)) < 1e-15);
    assert_eq!(t.trace(), 0.0);
}

#[test]
fn adjoint_trace_and_bif_laws() {
    let mut r = rng(2);
    for _ in 0..500 {
        let t = random_extensor(&mut r);
        assert_eq!(t.adjoint().adjoint(), t);
        assert!((t.trace() - t.adjoint().trace()).abs() < 1e-15);
        assert!((t.bif() + t.adjoint().bif()).norm() < 1e-15);
        let bif = t.bif();
        for mu in 0..4 {
            let n = Mv::gamma_up(mu);
            let lhs = t.adjoint().apply(&n) - t.apply(&n);
            assert!(lhs.distance(&n.left_contract(&bif)) < 1e-13);
            for nu in 0..4 {
                let m = Mv::gamma_up(nu);
                let a = t.apply(&n).scalar_product(&m);
                let b = n.scalar_product(&t.adjoint().apply(&m));
                assert!((a - b).abs() < 1e-14);
            }
        }
        let n = Mv::from_coeffs(std::array::from_fn(|_| r.gen_range(-1.0..1.0))).grade(1);
        let lin: Mv = (0..4).map(|mu| t.image(mu) * n.covector_components()[mu]).sum();
        assert_eq!(t.apply(&n), lin);
    }
}

#[test]
fn spin_extensor_is_bivector_valued() {
    assert_eq!(spin_extensor(&Mv::one()).images[3], Mv::zero());
    let mut r = rng(3);
    for _ in 0..100 {
        let s = spin_extensor(&random_even(&mut r));
        let n = Mv::vector([1.0, 0.2, -0.3, 0.4]);
        let out = s.apply(&n);
        assert!(out.grade(2).distance(&out) < 1e-13);
    }
}

#[test]
fn display_has_four_rows() {
    assert_eq!(Extensor11::identity().to_string().lines().count(), 4);
}
