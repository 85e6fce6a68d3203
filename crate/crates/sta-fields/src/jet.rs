use std::ops::{Add, Mul, Neg, Sub};

use sta_core::Mv;

/// Value with its four partial derivatives ∂_μ, propagated by the product rule.
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct Dual {
    pub v: Mv,
    pub d: [Mv; 4],
}

impl Dual {
    pub fn new(v: Mv, d: [Mv; 4]) -> Self {
        Self { v, d }
    }

    pub fn constant(v: Mv) -> Self {
        Self { v, d: [Mv::zero(); 4] }
    }

    pub fn scalar(s: f64) -> Self {
        Self::constant(Mv::scalar(s))
    }

    pub fn map_linear(&self, f: impl Fn(&Mv) -> Mv) -> Self {
        Self { v: f(&self.v), d: self.d.map(|x| f(&x)) }
    }

    pub fn bilinear(&self, rhs: &Self, f: impl Fn(&Mv, &Mv) -> Mv) -> Self {
        Self {
            v: f(&self.v, &rhs.v),
            d: std::array::from_fn(|mu| f(&self.d[mu], &rhs.v) + f(&self.v, &rhs.d[mu])),
        }
    }

    pub fn grade(&self, k: usize) -> Self {
        self.map_linear(|x| x.grade(k))
    }

    pub fn reverse(&self) -> Self {
        self.map_linear(|x| x.reverse())
    }

    pub fn wedge(&self, rhs: &Self) -> Self {
        self.bilinear(rhs, |a, b| a.wedge(b))
    }

    pub fn left_contract(&self, rhs: &Self) -> Self {
        self.bilinear(rhs, |a, b| a.left_contract(b))
    }

    pub fn right_contract(&self, rhs: &Self) -> Self {
        self.bilinear(rhs, |a, b| a.right_contract(b))
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map_linear(|x| *x * s)
    }

    /// Σ_μ γ^μ ∂_μ acting on the carried value.
    pub fn dirac(&self) -> Mv {
        Mv::dirac_sum(&self.d)
    }

    /// Σ_μ ∂_μ of the μ-th entry: the divergence of a family indexed by γ^μ.
    pub fn divergence(family: &[Dual; 4]) -> Mv {
        (0..4).map(|mu| family[mu].d[mu]).sum()
    }
}

impl Add for Dual {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { v: self.v + rhs.v, d: std::array::from_fn(|mu| self.d[mu] + rhs.d[mu]) }
    }
}

impl Sub for Dual {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { v: self.v - rhs.v, d: std::array::from_fn(|mu| self.d[mu] - rhs.d[mu]) }
    }
}

impl Neg for Dual {
    type Output = Self;
    fn neg(self) -> Self {
        self.map_linear(|x| -*x)
    }
}

impl Mul for Dual {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.bilinear(&rhs, |a, b| *a * *b)
    }
}

impl Mul<Mv> for Dual {
    type Output = Self;
    fn mul(self, rhs: Mv) -> Self {
        self.map_linear(|x| *x * rhs)
    }
}

impl Mul<Dual> for Mv {
    type Output = Dual;
    fn mul(self, rhs: Dual) -> Dual {
        rhs.map_linear(|x| self * *x)
    }
}

/// Value, gradient and Hessian of a multivector field at a point.
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct Jet {
    pub v: Mv,
    pub d: [Mv; 4],
    pub dd: [[Mv; 4]; 4],
}

impl Jet {
    pub fn constant(v: Mv) -> Self {
        Self { v, ..Self::default() }
    }

    /// (φ, ∂φ).
    pub fn dual(&self) -> Dual {
        Dual::new(self.v, self.d)
    }

    /// (∂_μφ, ∂_ν∂_μφ).
    pub fn derivative(&self, mu: usize) -> Dual {
        Dual::new(self.d[mu], self.dd[mu])
    }

    /// (∂^μφ, ∂_ν∂^μφ), index raised with η.
    pub fn derivative_up(&self, mu: usize) -> Dual {
        let s = if mu == 0 { 1.0 } else { -1.0 };
        self.derivative(mu).scale(s)
    }

    /// d'Alembertian ∂² = η^{μν}∂_μ∂_ν.
    pub fn box_op(&self) -> Mv {
        self.dd[0][0] - self.dd[1][1] - self.dd[2][2] - self.dd[3][3]
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            v: self.v * s,
            d: self.d.map(|x| x * s),
            dd: self.dd.map(|r| r.map(|x| x * s)),
        }
    }

    /// Jet of the pointwise product.
    pub fn product(&self, rhs: &Jet) -> Jet {
        Jet {
            v: self.v * rhs.v,
            d: std::array::from_fn(|mu| self.d[mu] * rhs.v + self.v * rhs.d[mu]),
            dd: std::array::from_fn(|mu| {
                std::array::from_fn(|nu| {
                    self.dd[mu][nu] * rhs.v
                        + self.d[mu] * rhs.d[nu]
                        + self.d[nu] * rhs.d[mu]
                        + self.v * rhs.dd[mu][nu]
                })
            }),
        }
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        Jet {
            v: self.v + rhs.v,
            d: std::array::from_fn(|mu| self.d[mu] + rhs.d[mu]),
            dd: std::array::from_fn(|mu| std::array::from_fn(|nu| self.dd[mu][nu] + rhs.dd[mu][nu])),
        }
    }
}

/// Value, gradient ∂_μ and Hessian ∂_μ∂_ν of a real function.
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct ScalarJet {
    pub v: f64,
    pub d: [f64; 4],
    pub dd: [[f64; 4]; 4],
}

impl ScalarJet {
    pub fn to_jet(&self) -> Jet {
        Jet {
            v: Mv::scalar(self.v),
            d: self.d.map(Mv::scalar),
            dd: self.dd.map(|r| r.map(Mv::scalar)),
        }
    }
}
