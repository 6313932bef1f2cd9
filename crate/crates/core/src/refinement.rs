//! Finite-level refinement of `-mK_Y` along `V̄_inf` (only for `l = 2`).
//!
//! The weight-`j` piece `W_{m,j}` has movable part `H^0(V, (mr - |m-j|)L)`
//! and fixed part `(j-m)B` when `j > m`. Its dimensions give the fixed-part
//! coefficient `a_m = (m N_m)^-1 Σ_j N_{m,j} a_{m,j}`, which tends to `a(n, r)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::invariants::coefficient_a;
use crate::math::{binom, integral_stride};
use crate::{Error, Rational, RationalConstruction, Result};

/// `k -> dim H^0(V, kL)` for a fixed base `V` and ample `L`.
pub trait HilbertFunction: Send + Sync {
    fn dim(&self, k: u64) -> BigUint;
    /// `dim V`.
    fn base_dimension(&self) -> u32;
    /// `r` with `-K_V = rL`.
    fn index(&self) -> Rational;
    fn describe(&self) -> String;
}

/// `P^s` with `L = O(d)`: `h(k) = C(kd + s, s)`, index `(s+1)/d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProjectiveSpace {
    pub s: u32,
    pub d: u32,
}

/// `P^1 × P^1` with `L = O(d, d)`: `h(k) = (kd + 1)^2`, index `2/d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProjectiveLineSquared {
    pub d: u32,
}

pub fn hilbert_projective_space(s: u32, d: u32) -> Result<ProjectiveSpace> {
    if s == 0 || d == 0 {
        return Err(Error::InvalidBase(format!("ps:{s}:{d}")));
    }
    Ok(ProjectiveSpace { s, d })
}

impl HilbertFunction for ProjectiveSpace {
    fn dim(&self, k: u64) -> BigUint {
        binom(k * u64::from(self.d) + u64::from(self.s), u64::from(self.s))
    }

    fn base_dimension(&self) -> u32 {
        self.s
    }

    fn index(&self) -> Rational {
        Rational::new(BigInt::from(self.s + 1), BigInt::from(self.d))
    }

    fn describe(&self) -> String {
        format!("ps:{}:{}", self.s, self.d)
    }
}

impl HilbertFunction for ProjectiveLineSquared {
    fn dim(&self, k: u64) -> BigUint {
        let side = BigUint::from(k * u64::from(self.d) + 1);
        &side * &side
    }

    fn base_dimension(&self) -> u32 {
        2
    }

    fn index(&self) -> Rational {
        Rational::new(BigInt::from(2), BigInt::from(self.d))
    }

    fn describe(&self) -> String {
        format!("p1p1:{}", self.d)
    }
}

/// Parsed `--base` argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    ProjectiveSpace(ProjectiveSpace),
    ProjectiveLineSquared(ProjectiveLineSquared),
}

impl Base {
    pub fn hilbert(&self) -> &dyn HilbertFunction {
        match self {
            Base::ProjectiveSpace(p) => p,
            Base::ProjectiveLineSquared(p) => p,
        }
    }
}

impl FromStr for Base {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::InvalidBase(text.to_string());
        let parts: Vec<&str> = text.split(':').collect();
        let num = |s: &str| s.parse::<u32>().map_err(|_| bad());
        match parts.as_slice() {
            ["ps", s, d] => Ok(Base::ProjectiveSpace(
                hilbert_projective_space(num(s)?, num(d)?).map_err(|_| bad())?,
            )),
            ["p1p1", d] => {
                let d = num(d)?;
                if d == 0 {
                    return Err(bad());
                }
                Ok(Base::ProjectiveLineSquared(ProjectiveLineSquared { d }))
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.hilbert().describe())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileRow {
    pub j: u64,
    /// `N_{m,j}`.
    pub dim: BigUint,
    /// Coefficient of `B` in the fixed part, `max(j - m, 0)`.
    pub fixed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisProfile {
    pub m: u64,
    pub rows: Vec<ProfileRow>,
}

impl BasisProfile {
    /// `N_m = Σ_j N_{m,j}`.
    pub fn total(&self) -> BigUint {
        self.rows.iter().map(|r| &r.dim).sum()
    }

    /// `Σ_j N_{m,j} a_{m,j}`.
    pub fn weighted_fixed(&self) -> BigUint {
        self.rows.iter().map(|r| &r.dim * r.fixed).sum()
    }
}

fn check_refinement(c: &RationalConstruction, h: &dyn HilbertFunction, m: u64) -> Result<u64> {
    if *c.l() != Rational::from_integer(2.into()) {
        return Err(Error::RequiresL2 {
            what: "the refinement by the infinity section",
            l: c.l().to_string(),
        });
    }
    if h.base_dimension() + 1 != c.n() {
        return Err(Error::BaseMismatch {
            base: h.describe(),
            reason: format!("dim V = {} but n - 1 = {}", h.base_dimension(), c.n() - 1),
        });
    }
    if h.index() != *c.r() {
        return Err(Error::BaseMismatch {
            base: h.describe(),
            reason: format!("index of L is {} but r = {}", h.index(), c.r()),
        });
    }
    if m == 0 {
        return Err(Error::ZeroLevel);
    }
    let mr = c.r() * Rational::from_integer(BigInt::from(m));
    if !mr.is_integer() {
        return Err(Error::NonIntegralTwist {
            m,
            stride: integral_stride(c.r()).to_string(),
        });
    }
    mr.to_integer()
        .to_u64()
        .ok_or_else(|| Error::NonIntegralTwist {
            m,
            stride: integral_stride(c.r()).to_string(),
        })
}

/// Rows `j = 0..=2m` with `N_{m,j} = h(mr - |m - j|)`.
pub fn basis_profile(
    c: &RationalConstruction,
    h: &dyn HilbertFunction,
    m: u64,
) -> Result<BasisProfile> {
    let mr = check_refinement(c, h, m)?;
    let rows = (0..=2 * m)
        .map(|j| ProfileRow {
            j,
            dim: h.dim(mr - m.abs_diff(j)),
            fixed: j.saturating_sub(m),
        })
        .collect();
    Ok(BasisProfile { m, rows })
}

pub fn a_m(c: &RationalConstruction, h: &dyn HilbertFunction, m: u64) -> Result<Rational> {
    let profile = basis_profile(c, h, m)?;
    let total = profile.total();
    debug_assert!(!total.is_zero());
    Ok(Rational::new(
        BigInt::from(profile.weighted_fixed()),
        BigInt::from(total) * BigInt::from(m),
    ))
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceRow {
    pub m: u64,
    pub a_m: Rational,
    /// `|a_m - a(n, r)|`.
    pub error: Rational,
}

/// One row per distinct `m`, sorted ascending.
pub fn convergence_table(
    c: &RationalConstruction,
    h: &dyn HilbertFunction,
    ms: &[u64],
) -> Result<Vec<ConvergenceRow>> {
    let target = coefficient_a(c.n(), c.r())?;
    let mut levels = ms.to_vec();
    levels.sort_unstable();
    levels.dedup();
    levels
        .into_iter()
        .map(|m| {
            let value = a_m(c, h, m)?;
            let error = num_traits::Signed::abs(&(&value - &target));
            Ok(ConvergenceRow {
                m,
                a_m: value,
                error,
            })
        })
        .collect()
}
