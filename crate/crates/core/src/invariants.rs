//! S- and β-invariants of the horizontal divisors, the pair coefficient
//! `a(n, r)` and the stability classification.

use crate::math::pow;
use crate::zariski::{volume_profile, HorizontalDivisor};
use crate::{Construction, Error, Result, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub enum Classification<T> {
    /// `l = 2`: K-(semi/poly)stability of `Y` is that of the pair `(V, aB)`.
    ReducesToPair { a: T },
    /// `l != 2`: `destabilizer` has `beta < 0`.
    KUnstable {
        destabilizer: HorizontalDivisor,
        beta: T,
    },
}

impl<T: Scalar> Classification<T> {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::ReducesToPair { .. } => "reduces-to-pair",
            Self::KUnstable { .. } => "k-unstable",
        }
    }
}

impl<T: Scalar> std::fmt::Display for Classification<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::ReducesToPair { a } => write!(f, "reduces-to-pair a={a}"),
            Self::KUnstable { destabilizer, beta } => {
                write!(f, "k-unstable destabilizer={destabilizer} beta={beta}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InvariantReport<T> {
    pub vol_y: T,
    pub s_v0: T,
    pub s_vinf: T,
    pub beta_v0: T,
    pub beta_vinf: T,
    pub classification: Classification<T>,
}

/// `∫_0^2 vol(-K_Y - tD) dt`, before normalizing by `vol(Y)`.
pub fn expected_vanishing_integral<T: Scalar>(c: &Construction<T>, d: HorizontalDivisor) -> T {
    volume_profile(c, d)
        .iter()
        .map(|p| {
            p.volume
                .integrate(&p.t_lo, &p.t_hi)
                .expect("profile pieces are ordered")
        })
        .fold(T::zero(), |acc, x| acc + x)
}

/// `S_Y(D) = vol(Y)^-1 ∫_0^2 vol(-K_Y - tD) dt`.
pub fn s_invariant<T: Scalar>(c: &Construction<T>, d: HorizontalDivisor) -> T {
    expected_vanishing_integral(c, d) / c.vol_y()
}

/// `β_Y(D) = 1 - S_Y(D)`; both horizontal divisors are prime on `Y`, so
/// their log discrepancy is 1.
pub fn beta<T: Scalar>(c: &Construction<T>, d: HorizontalDivisor) -> T {
    T::one() - s_invariant(c, d)
}

/// `a(n, r) = (r^(n+1) - (r-1)^(n+1) - (n+1)(r-1)^n) / (2(n+1)(r^n - (r-1)^n))`.
pub fn coefficient_a<T: Scalar>(n: u32, r: &T) -> Result<T> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    if *r <= T::one() {
        return Err(Error::IndexNotAboveOne(r.to_string()));
    }
    let rm1 = r.clone() - T::one();
    let np1 = T::from_int(i64::from(n) + 1);
    let num = pow(r, n + 1) - pow(&rm1, n + 1) - np1.clone() * pow(&rm1, n);
    let den = T::from_int(2) * np1 * (pow(r, n) - pow(&rm1, n));
    Ok(num / den)
}

/// Whether both horizontal β's vanish; only meaningful at `l = 2`.
pub fn futaki_check<T: Scalar>(c: &Construction<T>) -> Result<bool> {
    if *c.l() != T::from_int(2) {
        return Err(Error::RequiresL2 {
            what: "Futaki vanishing",
            l: c.l().to_string(),
        });
    }
    Ok(HorizontalDivisor::ALL.iter().all(|&d| beta(c, d).is_zero()))
}

fn classify_from_betas<T: Scalar>(
    c: &Construction<T>,
    beta_v0: &T,
    beta_vinf: &T,
) -> Result<Classification<T>> {
    if *c.l() == T::from_int(2) {
        return Ok(Classification::ReducesToPair {
            a: coefficient_a(c.n(), c.r())?,
        });
    }
    // the sign is decided by the computed values, never by the size of l
    let (destabilizer, beta) = if beta_v0 < beta_vinf {
        (HorizontalDivisor::ZeroSection, beta_v0)
    } else {
        (HorizontalDivisor::InfinitySection, beta_vinf)
    };
    if !beta.is_negative() {
        return Err(Error::NoDestabilizer {
            beta_v0: beta_v0.to_string(),
            beta_vinf: beta_vinf.to_string(),
        });
    }
    Ok(Classification::KUnstable {
        destabilizer,
        beta: beta.clone(),
    })
}

pub fn classify<T: Scalar>(c: &Construction<T>) -> Result<Classification<T>> {
    let b0 = beta(c, HorizontalDivisor::ZeroSection);
    let binf = beta(c, HorizontalDivisor::InfinitySection);
    classify_from_betas(c, &b0, &binf)
}

pub fn report<T: Scalar>(c: &Construction<T>) -> Result<InvariantReport<T>> {
    let vol_y = c.vol_y();
    let s_v0 = expected_vanishing_integral(c, HorizontalDivisor::ZeroSection) / vol_y.clone();
    let s_vinf = expected_vanishing_integral(c, HorizontalDivisor::InfinitySection) / vol_y.clone();
    let beta_v0 = T::one() - s_v0.clone();
    let beta_vinf = T::one() - s_vinf.clone();
    let classification = classify_from_betas(c, &beta_v0, &beta_vinf)?;
    Ok(InvariantReport {
        vol_y,
        s_v0,
        s_vinf,
        beta_v0,
        beta_vinf,
        classification,
    })
}
