//! Piecewise Zariski decomposition of `-K_Y - tD` for the two horizontal
//! divisors, breakpoint `t = 1`, pseudo-effective threshold `t = 2`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{ClassPoly, Construction, Error, Polynomial, Scalar};

/// The only torus-invariant prime divisors on `Y` dominating `V`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HorizontalDivisor {
    /// `V_0`, the zero section.
    ZeroSection,
    /// `V̄_inf`, strict transform of the section containing `B_inf`.
    InfinitySection,
}

impl HorizontalDivisor {
    pub const ALL: [HorizontalDivisor; 2] = [Self::ZeroSection, Self::InfinitySection];

    pub fn class<T: Scalar>(self) -> ClassPoly<T> {
        match self {
            Self::ZeroSection => ClassPoly::v0(),
            Self::InfinitySection => ClassPoly::vinf(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::ZeroSection => "zero-section",
            Self::InfinitySection => "infinity-section",
        }
    }

    pub fn other(self) -> Self {
        match self {
            Self::ZeroSection => Self::InfinitySection,
            Self::InfinitySection => Self::ZeroSection,
        }
    }
}

impl fmt::Display for HorizontalDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HorizontalDivisor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "zero-section" => Ok(Self::ZeroSection),
            "infinity-section" => Ok(Self::InfinitySection),
            other => Err(Error::Catalog(format!("unknown divisor {other:?}"))),
        }
    }
}

/// One piece `[t_lo, t_hi]` of the decomposition.
#[derive(Clone, Debug, PartialEq)]
pub struct Segment<T> {
    pub t_lo: T,
    pub t_hi: T,
    pub positive: ClassPoly<T>,
    pub negative: ClassPoly<T>,
}

/// `vol(-K_Y - tD)` on one segment.
#[derive(Clone, Debug, PartialEq)]
pub struct ProfilePiece<T> {
    pub t_lo: T,
    pub t_hi: T,
    pub volume: Polynomial<T>,
}

pub fn breakpoint<T: Scalar>() -> T {
    T::one()
}

/// Pseudo-effective threshold of both horizontal divisors.
pub fn threshold<T: Scalar>() -> T {
    T::from_int(2)
}

/// Segments `[0, 1]` and `[1, 2]`.
///
/// On `[1, 2]` the negative part is `(t-1)E` for `V̄_inf` (contracted by the
/// blow-down `π`) and `(t-1)F` for `V_0` (contracted by the second
/// contraction). The same formulas cover `l = 0` and `l = 1`.
pub fn decompose<T: Scalar>(c: &Construction<T>, d: HorizontalDivisor) -> Vec<Segment<T>> {
    let zero = T::zero();
    let one = T::one();
    let two = threshold::<T>();
    let r = c.r().clone();
    let t = Polynomial::<T>::t();
    let one_p = Polynomial::<T>::one();
    let one_minus_t = &one_p - &t;
    let two_minus_t = &Polynomial::constant(two.clone()) - &t;
    let t_minus_one = &t - &one_p;
    let derived = c.derived_classes();

    let (early, late_positive, late_negative) = match d {
        HorizontalDivisor::InfinitySection => {
            let early = ClassPoly::new(one_p.clone(), one_minus_t, one_p.clone());
            // (2-t)V_0 + ((r+1-t)/r)A
            let a = Polynomial::linear((r.clone() + one.clone()) / r.clone(), -(one.clone() / r));
            let late = ClassPoly::new(two_minus_t, Polynomial::zero(), a);
            (early, late, derived.e.scale_poly(&t_minus_one))
        }
        HorizontalDivisor::ZeroSection => {
            let early = ClassPoly::new(one_minus_t, one_p.clone(), one_p.clone());
            // (2-t)V̄_inf + ((r - (t-1)(l-1))/r)A
            let slope = (c.l().clone() - one.clone()) / r.clone();
            let a = &Polynomial::constant(one.clone()) - &t_minus_one.scale(&slope);
            let late = ClassPoly::new(Polynomial::zero(), two_minus_t, a);
            (early, late, derived.f.scale_poly(&t_minus_one))
        }
    };

    vec![
        Segment {
            t_lo: zero,
            t_hi: one.clone(),
            positive: early,
            negative: ClassPoly::zero(),
        },
        Segment {
            t_lo: one,
            t_hi: two,
            positive: late_positive,
            negative: late_negative,
        },
    ]
}

/// Top power of each positive part.
///
/// Panics if an exact profile fails to vanish at the threshold or jumps at
/// the breakpoint; either means the decomposition table is wrong.
pub fn volume_profile<T: Scalar>(
    c: &Construction<T>,
    d: HorizontalDivisor,
) -> Vec<ProfilePiece<T>> {
    let pieces: Vec<ProfilePiece<T>> = decompose(c, d)
        .into_iter()
        .map(|s| ProfilePiece {
            volume: c.top_power(&s.positive),
            t_lo: s.t_lo,
            t_hi: s.t_hi,
        })
        .collect();
    if T::EXACT {
        let tau = threshold::<T>();
        let last = pieces.last().expect("decomposition is nonempty");
        assert!(
            last.volume.eval(&tau).is_zero(),
            "vol(-K_Y - 2D) must vanish"
        );
        for w in pieces.windows(2) {
            assert_eq!(
                w[0].volume.eval(&w[0].t_hi),
                w[1].volume.eval(&w[1].t_lo),
                "volume profile must be continuous"
            );
        }
    }
    pieces
}

/// Evaluates a profile at `t`, zero outside `[0, 2]`.
pub fn profile_value<T: Scalar>(pieces: &[ProfilePiece<T>], t: &T) -> T {
    pieces
        .iter()
        .find(|p| &p.t_lo <= t && t <= &p.t_hi)
        .map(|p| p.volume.eval(t))
        .unwrap_or_else(T::zero)
}
