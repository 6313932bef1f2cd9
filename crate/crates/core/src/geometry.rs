//! Divisor-class calculus on `Y` in the basis `{V_0, V̄_inf, A}`, where
//! `A = π*φ*(-K_V)`.
//!
//! Top intersections follow three monomial rules:
//! `V_0^k · A^(n-k) = (-1/r)^(k-1) vol(V)`,
//! `V̄_inf^k · A^(n-k) = ((1-l)/r)^(k-1) vol(V)` for `k >= 1`,
//! every mixed `V_0 · V̄_inf` monomial vanishes and `A^n = 0`.

use std::ops::{Add, Neg, Sub};

use crate::math::{binomial_row, pow};
use crate::{Error, Polynomial, Result, Scalar};

/// Parameters `(n, r, l, vol V)` of the construction.
///
/// `n = dim Y`, `-K_V ~ rL`, `B ~ lL` and `vol_v = (-K_V)^(n-1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Construction<T> {
    n: u32,
    r: T,
    l: T,
    vol_v: T,
}

impl<T: Scalar> Construction<T> {
    pub fn new(n: u32, r: T, l: T, vol_v: T) -> Result<Self> {
        if n < 2 {
            return Err(Error::DimensionTooSmall(n));
        }
        if r <= T::one() {
            return Err(Error::IndexNotAboveOne(r.to_string()));
        }
        if l < T::zero() || l >= r.clone() + T::one() {
            return Err(Error::BranchOutOfRange {
                l: l.to_string(),
                r: r.to_string(),
            });
        }
        if vol_v <= T::zero() {
            return Err(Error::NonPositiveVolume(vol_v.to_string()));
        }
        Ok(Self { n, r, l, vol_v })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> &T {
        &self.r
    }

    pub fn l(&self) -> &T {
        &self.l
    }

    pub fn vol_v(&self) -> &T {
        &self.vol_v
    }

    /// Same `V` and `L` with a different branch divisor.
    pub fn with_l(&self, l: T) -> Result<Self> {
        Self::new(self.n, self.r.clone(), l, self.vol_v.clone())
    }

    pub fn with_vol_v(&self, vol_v: T) -> Result<Self> {
        Self::new(self.n, self.r.clone(), self.l.clone(), vol_v)
    }

    pub fn derived_classes(&self) -> DerivedClasses<T> {
        derived_classes(self)
    }

    pub fn top_power(&self, class: &ClassPoly<T>) -> Polynomial<T> {
        top_power(self, class)
    }

    /// `(-K_Y)^n`.
    pub fn vol_y(&self) -> T {
        self.top_power(&ClassPoly::anti_canonical())
            .eval(&T::zero())
    }

    /// `(-K_X)^n` of the unblown-up bundle; independent of `l`.
    pub fn vol_x(&self) -> T {
        vol_x(self)
    }
}

/// Divisor class `v0·V_0 + vinf·V̄_inf + a·A` with coefficients in `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassPoly<T> {
    pub v0: Polynomial<T>,
    pub vinf: Polynomial<T>,
    pub a: Polynomial<T>,
}

impl<T: Scalar> ClassPoly<T> {
    pub fn new(v0: Polynomial<T>, vinf: Polynomial<T>, a: Polynomial<T>) -> Self {
        Self { v0, vinf, a }
    }

    pub fn constant(v0: T, vinf: T, a: T) -> Self {
        Self::new(v0.into(), vinf.into(), a.into())
    }

    pub fn zero() -> Self {
        Self::new(Polynomial::zero(), Polynomial::zero(), Polynomial::zero())
    }

    pub fn v0() -> Self {
        Self::constant(T::one(), T::zero(), T::zero())
    }

    pub fn vinf() -> Self {
        Self::constant(T::zero(), T::one(), T::zero())
    }

    pub fn pullback() -> Self {
        Self::constant(T::zero(), T::zero(), T::one())
    }

    /// `-K_Y = V_0 + V̄_inf + A`.
    pub fn anti_canonical() -> Self {
        Self::constant(T::one(), T::one(), T::one())
    }

    pub fn is_zero(&self) -> bool {
        self.v0.is_zero() && self.vinf.is_zero() && self.a.is_zero()
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.v0.scale(s), self.vinf.scale(s), self.a.scale(s))
    }

    pub fn scale_poly(&self, p: &Polynomial<T>) -> Self {
        Self::new(p * &self.v0, p * &self.vinf, p * &self.a)
    }

    /// Coefficients at a fixed `t`.
    pub fn eval(&self, t: &T) -> [T; 3] {
        [self.v0.eval(t), self.vinf.eval(t), self.a.eval(t)]
    }

    /// Constant class obtained by fixing `t`.
    pub fn at(&self, t: &T) -> Self {
        let [x, y, z] = self.eval(t);
        Self::constant(x, y, z)
    }
}

impl<'a, T: Scalar> Add<&'a ClassPoly<T>> for &'a ClassPoly<T> {
    type Output = ClassPoly<T>;

    fn add(self, rhs: Self) -> ClassPoly<T> {
        ClassPoly::new(&self.v0 + &rhs.v0, &self.vinf + &rhs.vinf, &self.a + &rhs.a)
    }
}

impl<'a, T: Scalar> Sub<&'a ClassPoly<T>> for &'a ClassPoly<T> {
    type Output = ClassPoly<T>;

    fn sub(self, rhs: Self) -> ClassPoly<T> {
        ClassPoly::new(&self.v0 - &rhs.v0, &self.vinf - &rhs.vinf, &self.a - &rhs.a)
    }
}

impl<T: Scalar> Neg for &ClassPoly<T> {
    type Output = ClassPoly<T>;

    fn neg(self) -> ClassPoly<T> {
        ClassPoly::new(-&self.v0, -&self.vinf, -&self.a)
    }
}

/// Classes built from the basis.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivedClasses<T> {
    /// Relative hyperplane class `V_0 + (1/r)A`.
    pub h: ClassPoly<T>,
    /// Exceptional divisor `V_0 + (1/r)A - V̄_inf`.
    pub e: ClassPoly<T>,
    /// Strict transform of `φ*B`: `V̄_inf + ((l-1)/r)A - V_0`.
    pub f: ClassPoly<T>,
    pub anti_k: ClassPoly<T>,
}

/// At `l = 0` there is no blow-up: `E` and `F` come back as written (`F = -E`)
/// and must not be treated as effective classes.
pub fn derived_classes<T: Scalar>(c: &Construction<T>) -> DerivedClasses<T> {
    let inv_r = T::one() / c.r.clone();
    let one = T::one();
    let zero = T::zero();
    DerivedClasses {
        h: ClassPoly::constant(one.clone(), zero.clone(), inv_r.clone()),
        e: ClassPoly::constant(one.clone(), -one.clone(), inv_r),
        f: ClassPoly::constant(-one.clone(), one.clone(), (c.l.clone() - one) / c.r.clone()),
        anti_k: ClassPoly::anti_canonical(),
    }
}

/// `X^n` as a polynomial in `t`.
pub fn top_power<T: Scalar>(c: &Construction<T>, class: &ClassPoly<T>) -> Polynomial<T> {
    let n = c.n;
    let binoms: Vec<T> = binomial_row(n);
    let rho_zero = -(T::one() / c.r.clone());
    let rho_inf = (T::one() - c.l.clone()) / c.r.clone();

    // z^(n-k) for k = 0..=n, indexed by the exponent
    let mut z_pows = Vec::with_capacity(n as usize + 1);
    z_pows.push(Polynomial::one());
    for i in 1..=n as usize {
        let next = &z_pows[i - 1] * &class.a;
        z_pows.push(next);
    }

    let section_sum = |coeff: &Polynomial<T>, rho: &T| -> Polynomial<T> {
        let mut total = Polynomial::zero();
        if coeff.is_zero() {
            return total;
        }
        let mut x_pow = Polynomial::one();
        let mut rho_pow = T::one();
        for k in 1..=n as usize {
            x_pow = &x_pow * coeff;
            if k > 1 {
                rho_pow = rho_pow * rho.clone();
            }
            let weight = binoms[k].clone() * rho_pow.clone();
            total = &total + &(&x_pow * &z_pows[n as usize - k]).scale(&weight);
        }
        total
    };

    let sum = &section_sum(&class.v0, &rho_zero) + &section_sum(&class.vinf, &rho_inf);
    sum.scale(&c.vol_v)
}

/// Closed form `((r+1)^n - (r-1)^n) vol(V) / r^(n-1)`.
pub fn vol_x<T: Scalar>(c: &Construction<T>) -> T {
    let r = &c.r;
    let up = pow(&(r.clone() + T::one()), c.n);
    let down = pow(&(r.clone() - T::one()), c.n);
    (up - down) * c.vol_v.clone() / pow(r, c.n - 1)
}
