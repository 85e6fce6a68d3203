mod common;

use std::sync::Arc;

use common::{fd_first, random_mv, random_point, random_poly, random_vector_poly, rng};
use ideal_rep::rep_real;
use rand::Rng;
use sta_core::{g21, Mv};
use sta_fields::{
    adjoint_dhe_residual, dhe_residual, dirac_operator, dirac_split, faraday, faraday_bivector, ideal_dirac_residual,
    identity_vc, squared_equation_residual, ConstantField, FGauge, Field, FieldError, GaugeDressed, LinearPotential,
    PlaneWave, PolynomialField, PotentialFamily, PotentialSpec, Quadratic, SampleBox, SpacetimePoint, Superposition,
    ScalarField, Volkov,
};

fn pt(x: [f64; 4]) -> SpacetimePoint {
    SpacetimePoint::new(x)
}

#[test]
fn dirac_operator_examples() {
    let p = pt([0.4, -0.2, 0.9, 0.1]);
    assert_eq!(dirac_operator(&ConstantField(Mv::gamma(2) * 3.0), &p).unwrap(), Mv::zero());
    let t = PolynomialField::coordinate(0, Mv::one());
    assert_eq!(dirac_operator(&t, &p).unwrap(), Mv::gamma_up(0));
    let split = dirac_split(&t, &p).unwrap();
    assert_eq!(split.d_part, Mv::gamma_up(0));
    assert_eq!(split.delta_part, Mv::zero());

    let m = 1.3;
    let wave = PlaneWave::rest(m);
    let phi = wave.value(&p).unwrap();
    let expect = Mv::gamma(0) * g21::<f64>() * phi * -m;
    assert!(dirac_operator(&wave, &p).unwrap().distance(&expect) < 1e-14);
}

#[test]
fn d_minus_delta_reconstructs_dirac() {
    let mut r = rng(1);
    for _ in 0..100 {
        let c = random_poly(&mut r, false);
        let p = random_point(&mut r, 1.0);
        let s = dirac_split(&c, &p).unwrap();
        assert!((s.d_part - s.delta_part).distance(&s.dirac) < 1e-13);
    }
}

#[test]
fn rest_wave_residuals() {
    let m = 0.8;
    let pot = PotentialSpec::free(m);
    let wave = PlaneWave::rest(m);
    for p in SampleBox::cube(3.0).halton(500) {
        assert!(dhe_residual(&wave, &pot, &p).unwrap().norm() < 1e-12);
        assert!(adjoint_dhe_residual(&wave, &pot, &p).unwrap().norm() < 1e-12);
        assert!(squared_equation_residual(&wave, &pot, &p).unwrap().norm() < 1e-12);
    }
    // the opposite exponent sign leaves −2mφγ_0
    let wrong = PlaneWave::rest(m).with_sign(1.0);
    let p = pt([0.7, 0.0, 0.0, 0.0]);
    let phi = wrong.value(&p).unwrap();
    let res = dhe_residual(&wrong, &pot, &p).unwrap();
    assert!(res.distance(&(phi * Mv::gamma(0) * (-2.0 * m))) < 1e-14);
}

#[test]
fn constant_field_residuals() {
    let m = 2.0;
    let pot = PotentialSpec::free(m);
    let p = pt([0.1, 0.2, 0.3, 0.4]);
    let one = ConstantField(Mv::one());
    assert_eq!(dhe_residual(&one, &pot, &p).unwrap(), Mv::gamma(0) * -m);
    assert_eq!(adjoint_dhe_residual(&one, &pot, &p).unwrap(), Mv::gamma(0) * -m);
    assert!(matches!(dhe_residual(&ConstantField(Mv::gamma(1)), &pot, &p), Err(FieldError::NotEven { .. })));
}

#[test]
fn boosted_waves_solve_free_equation() {
    let mut r = rng(2);
    for _ in 0..20 {
        let m = r.gen_range(0.5..2.0);
        let z: [f64; 3] = std::array::from_fn(|_| r.gen_range(-1.0..1.0));
        let th: [f64; 3] = std::array::from_fn(|_| r.gen_range(-3.0..3.0));
        let wave = PlaneWave::boosted(m, z, th).with_phase(r.gen_range(0.0..6.0));
        let pot = PotentialSpec::free(m);
        assert!((wave.momentum * wave.momentum).scalar_part() - m * m < 1e-12);
        for _ in 0..20 {
            let p = random_point(&mut r, 2.0);
            assert!(dhe_residual(&wave, &pot, &p).unwrap().norm() < 1e-11);
            assert!(squared_equation_residual(&wave, &pot, &p).unwrap().norm() < 1e-10);
        }
    }
}

#[test]
fn gauge_dressed_wave_solves_pure_gauge_equation() {
    let (m, e) = (1.0, 0.7);
    let chi = Arc::new(Quadratic::new(0.2, [0.3, -0.1, 0.5, 0.2], [[0.1, 0.2, 0.0, 0.0], [0.0, -0.3, 0.1, 0.0], [0.0; 4], [0.0, 0.0, 0.0, 0.4]]));
    let dressed = GaugeDressed { inner: Arc::new(PlaneWave::boosted(m, [0.2, 0.0, -0.4], [0.1, 0.5, 0.0])), chi: chi.clone(), e };
    let pot = PotentialSpec::new(PotentialFamily::PureGauge(chi), e, m);
    for p in SampleBox::cube(2.0).halton(300) {
        assert!(dhe_residual(&dressed, &pot, &p).unwrap().norm() < 1e-12);
        assert!(squared_equation_residual(&dressed, &pot, &p).unwrap().norm() < 1e-10);
        assert!(faraday(&pot, &p).norm() < 1e-14);
    }
}

#[test]
fn gauge_covariance_on_random_smooth_fields() {
    let mut r = rng(3);
    let (m, e) = (0.9, 0.5);
    for _ in 0..50 {
        let phi = Arc::new(random_poly(&mut r, true));
        let a = LinearPotential { a0: random_mv(&mut r).grade(1), slope: std::array::from_fn(|_| random_mv(&mut r).grade(1)) };
        let chi = Quadratic::new(0.0, std::array::from_fn(|_| r.gen_range(-1.0..1.0)), std::array::from_fn(|_| std::array::from_fn(|_| r.gen_range(-0.5..0.5))));
        let base = PotentialSpec::new(PotentialFamily::Custom(Arc::new(a)), e, m);
        let shifted = PotentialSpec::new(PotentialFamily::Custom(Arc::new(ShiftedByGauge { a, chi })), e, m);
        let dressed = GaugeDressed { inner: phi.clone(), chi: Arc::new(chi), e };
        let p = random_point(&mut r, 1.0);
        let u = (g21::<f64>() * (-e * chi.value(&p))).exp_commuting_square().unwrap();
        let lhs = dhe_residual(&dressed, &shifted, &p).unwrap();
        let rhs = dhe_residual(phi.as_ref(), &base, &p).unwrap() * u;
        assert!(lhs.distance(&rhs) < 1e-10 * (1.0 + rhs.norm()));
    }
}

struct ShiftedByGauge {
    a: LinearPotential,
    chi: Quadratic,
}

impl sta_fields::VectorPotential for ShiftedByGauge {
    fn dual(&self, p: &SpacetimePoint) -> sta_fields::Dual {
        let j = self.chi.jet(p);
        let g = sta_fields::Dual::new(Mv::covector(j.d), std::array::from_fn(|nu| Mv::covector(j.dd[nu])));
        self.a.dual(p) + g
    }
}

#[test]
fn adjoint_residual_is_reverse_of_residual() {
    let mut r = rng(4);
    let pot = PotentialSpec::new(PotentialFamily::ConstantF { f: [0.3, -0.2, 0.5, 0.1, 0.7, -0.4], gauge: FGauge::Symmetric }, 0.6, 1.1);
    for _ in 0..200 {
        let phi = random_poly(&mut r, true);
        let p = random_point(&mut r, 1.0);
        let a = adjoint_dhe_residual(&phi, &pot, &p).unwrap();
        let b = dhe_residual(&phi, &pot, &p).unwrap().reverse();
        assert!(a.distance(&b) < 1e-12);
    }
}

#[test]
fn volkov_solves_wave_potential_equation() {
    let mut r = rng(5);
    for _ in 0..10 {
        let (m, e) = (1.0, r.gen_range(0.2..1.5));
        let w = r.gen_range(0.5..2.0);
        let k = Mv::vector([w, 0.0, 0.0, w]);
        let eps = Mv::vector([0.0, r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0), 0.0]);
        let z: [f64; 3] = std::array::from_fn(|_| r.gen_range(-0.5..0.5));
        let v = Volkov::new(m, z, [0.3, -0.2, 0.1], k, eps, e);
        let pot = PotentialSpec::new(PotentialFamily::Custom(Arc::new(v.potential())), e, m);
        for _ in 0..20 {
            let p = random_point(&mut r, 2.0);
            assert!(dhe_residual(&v, &pot, &p).unwrap().norm() < 1e-11);
            assert!(squared_equation_residual(&v, &pot, &p).unwrap().norm() < 1e-10);
            assert!(faraday(&pot, &p).norm() > 0.0 || eps.norm() == 0.0);
        }
    }
}

#[test]
fn squared_equation_needs_a_solution() {
    let phi = ConstantField(Mv::one() + Mv::blade(0b0011));
    let r = squared_equation_residual(&phi, &PotentialSpec::free(1.0), &pt([0.0; 4])).unwrap();
    assert!((r.norm() - 2f64.sqrt()).abs() < 1e-14);
}

#[test]
fn identity_vc_examples_and_sweep() {
    let p = pt([0.3, -0.7, 0.2, 1.1]);
    let v = ConstantField(Mv::gamma(3));
    let c = ConstantField(Mv::blade(0b0101));
    assert_eq!(identity_vc(&v, &c, &p).unwrap(), Mv::zero());
    let v = PolynomialField::coordinate(1, Mv::gamma(0));
    let c = PolynomialField::coordinate(0, Mv::gamma(1));
    assert!(identity_vc(&v, &c, &p).unwrap().norm() < 1e-12);

    let mut r = rng(6);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let v = random_vector_poly(&mut r);
        let c = random_poly(&mut r, false);
        let p = random_point(&mut r, 1.0);
        worst = worst.max(identity_vc(&v, &c, &p).unwrap().norm());
    }
    assert!(worst < 1e-10, "{worst:e}");
}

#[test]
fn faraday_examples() {
    let p = pt([0.5, 1.5, -0.5, 0.25]);
    assert_eq!(faraday(&PotentialSpec::free(1.0), &p), Mv::zero());
    let chi = PotentialSpec::new(PotentialFamily::PureGauge(Arc::new(Quadratic::monomial(0, 1))), 1.0, 1.0);
    assert!(faraday(&chi, &p).norm() < 1e-12);
    assert!(chi.a(&p).norm() > 0.1);

    let b = 0.8;
    let mut slope = [Mv::zero(); 4];
    slope[1] = Mv::gamma(2) * b;
    let custom = PotentialSpec::new(PotentialFamily::Custom(Arc::new(LinearPotential { a0: Mv::zero(), slope })), 1.0, 1.0);
    // γ^1 ∧ Bγ_2 = −B γ_1γ_2
    assert_eq!(faraday(&custom, &p), Mv::blade(0b0110) * -b);

    let f = [0.1, -0.2, 0.3, 0.4, -0.5, 0.6];
    for gauge in [FGauge::Symmetric, FGauge::Temporal] {
        let pot = PotentialSpec::new(PotentialFamily::ConstantF { f, gauge }, 1.0, 1.0);
        assert!(faraday(&pot, &p).distance(&faraday_bivector(&f)) < 1e-15);
    }
}

#[test]
fn ideal_residual_matches_column_of_residual() {
    let mut r = rng(7);
    let pot = PotentialSpec::new(PotentialFamily::ConstantF { f: [0.3, 0.0, -0.6, 0.2, 0.0, 0.5], gauge: FGauge::Symmetric }, 0.4, 1.2);
    for _ in 0..100 {
        let phi = random_poly(&mut r, true);
        let p = random_point(&mut r, 1.0);
        let res = dhe_residual(&phi, &pot, &p).unwrap();
        let col = rep_real(&res).column(0);
        let got = ideal_dirac_residual(&phi, &pot, &p).unwrap();
        for i in 0..4 {
            assert!((got.psi[i] - col[i]).norm() < 1e-10);
        }
    }
    let wave = PlaneWave::rest(1.0);
    let got = ideal_dirac_residual(&wave, &PotentialSpec::free(1.0), &pt([0.4, 0.0, 0.0, 0.0])).unwrap();
    assert!(got.norm() < 1e-12);
}

#[test]
fn grade_split_of_spinor_products_is_consistent() {
    // ∂_μ(φXφ̃) split into grades agrees with the product rule grade by grade.
    let mut r = rng(8);
    let k = sta_core::k_trivector::<f64>();
    for _ in 0..100 {
        let phi = random_poly(&mut r, true);
        let p = random_point(&mut r, 1.0);
        let d = phi.dual(&p).unwrap();
        let prod = d * sta_fields::Dual::constant(k) * d.reverse();
        let value_fn = |q: &SpacetimePoint| {
            let v = phi.value(q).unwrap();
            v * k * v.reverse()
        };
        for mu in 0..4 {
            let reference = fd_first(value_fn, &p, mu, 1e-3);
            assert!(prod.d[mu].distance(&reference) < 1e-9);
            assert!(prod.d[mu].grade(1).norm() < 1e-12);
        }
    }
}

#[test]
fn superposition_is_linear() {
    let a = Arc::new(PlaneWave::rest(1.0));
    let b = Arc::new(PlaneWave::boosted(1.0, [0.2, 0.0, 0.0], [0.0; 3]).with_amplitude(0.5));
    let s = Superposition::new(vec![a.clone(), b.clone()]);
    let pot = PotentialSpec::free(1.0);
    let p = pt([0.3, 0.1, -0.2, 0.6]);
    assert!(dhe_residual(&s, &pot, &p).unwrap().norm() < 1e-13);
    assert_eq!(s.value(&p).unwrap(), a.value(&p).unwrap() + b.value(&p).unwrap());
}
