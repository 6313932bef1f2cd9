//! Test-only oracles. None of these call into the crate's integration or
//! intersection code paths.
#![allow(dead_code)]

use kstab::math::{parse_rational, to_f64};
use kstab::Rational;

pub fn q(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

pub fn f(x: &Rational) -> f64 {
    to_f64(x)
}

pub const GRID_N: [u32; 5] = [2, 3, 4, 5, 6];
pub const GRID_R: [&str; 4] = ["5/4", "3/2", "2", "3"];
pub const GRID_L: [&str; 7] = ["0", "1/2", "1", "3/2", "2", "5/2", "3"];

/// Every admissible `(n, r, l)` of the standard sweep grid.
pub fn admissible_grid() -> Vec<(u32, Rational, Rational)> {
    let mut out = Vec::new();
    for n in GRID_N {
        for r in GRID_R {
            for l in GRID_L {
                let (r, l) = (q(r), q(l));
                if l < &r + q("1") {
                    out.push((n, r, l));
                }
            }
        }
    }
    out
}

fn simpson_step(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adaptive(
    g: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    eps: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = g(lm);
    let frm = g(rm);
    let left = simpson_step(a, m, fa, flm, fm);
    let right = simpson_step(m, b, fm, frm, fb);
    let delta = left + right - whole;
    let noise = 64.0 * f64::EPSILON * (left.abs() + right.abs());
    if depth == 0 || delta.abs() <= 15.0 * eps || delta.abs() <= noise {
        return left + right + delta / 15.0;
    }
    adaptive(g, a, m, fa, flm, fm, left, eps / 2.0, depth - 1)
        + adaptive(g, m, b, fm, frm, fb, right, eps / 2.0, depth - 1)
}

/// Adaptive Simpson quadrature of `g` over `[a, b]`.
pub fn quad(g: &dyn Fn(f64) -> f64, a: f64, b: f64, eps: f64) -> f64 {
    let fa = g(a);
    let fb = g(b);
    let fm = g(0.5 * (a + b));
    let whole = simpson_step(a, b, fa, fm, fb);
    adaptive(g, a, b, fa, fm, fb, whole, eps, 40)
}

pub fn rel_err(approx: f64, exact: f64) -> f64 {
    if exact == 0.0 {
        approx.abs()
    } else {
        ((approx - exact) / exact).abs()
    }
}

/// `(x V_0 + y V̄_inf + z A)^n` by expanding all `3^n` ordered words and
/// applying the monomial rules to each word.
pub fn top_power_by_words(n: u32, r: f64, l: f64, vol_v: f64, x: f64, y: f64, z: f64) -> f64 {
    let mut total = 0.0;
    let words = 3usize.pow(n);
    for mut w in 0..words {
        let (mut k0, mut kinf) = (0u32, 0u32);
        let mut coeff = 1.0;
        for _ in 0..n {
            match w % 3 {
                0 => {
                    k0 += 1;
                    coeff *= x;
                }
                1 => {
                    kinf += 1;
                    coeff *= y;
                }
                _ => coeff *= z,
            }
            w /= 3;
        }
        let value = match (k0, kinf) {
            (0, 0) => 0.0,
            (k, 0) => (-1.0 / r).powi(k as i32 - 1) * vol_v,
            (0, k) => ((1.0 - l) / r).powi(k as i32 - 1) * vol_v,
            _ => 0.0,
        };
        total += coeff * value;
    }
    total
}

/// Closed-form anticanonical volume of `Y`, both branches.
pub fn vol_y_closed_form(n: u32, r: &Rational, l: &Rational, vol_v: &Rational) -> Rational {
    let one = q("1");
    let pw = |b: &Rational, e: u32| num_traits::pow(b.clone(), e as usize);
    let rn1 = pw(r, n - 1);
    let tail = pw(r, n) - pw(&(r - &one), n);
    let head = if *l == one {
        Rational::from_integer(n.into()) * rn1.clone()
    } else {
        (pw(r, n) - pw(&(r + &one - l), n)) / (l - &one)
    };
    (head + tail) * vol_v / rn1
}

/// Closed-form anticanonical volume of the bundle `X`.
pub fn vol_x_closed_form(n: u32, r: &Rational, vol_v: &Rational) -> Rational {
    let one = q("1");
    let pw = |b: &Rational, e: u32| num_traits::pow(b.clone(), e as usize);
    (pw(&(r + &one), n) - pw(&(r - &one), n)) * vol_v / pw(r, n - 1)
}

/// `S_X(V_0)` from the explicit integral `∫_0^2 ((r+1)^n - (r+t-1)^n) dt`,
/// normalized by `(r+1)^n - (r-1)^n`.
pub fn s_bundle_integral_form(n: u32, r: &Rational) -> Rational {
    let one = q("1");
    let pw = |b: &Rational, e: u32| num_traits::pow(b.clone(), e as usize);
    let np1 = Rational::from_integer((n + 1).into());
    let num = q("2") * pw(&(r + &one), n) - (pw(&(r + &one), n + 1) - pw(&(r - &one), n + 1)) / np1;
    num / (pw(&(r + &one), n) - pw(&(r - &one), n))
}

/// `1 + (f(r-1) - f(r+1)) / ((n+1)((r+1)^n - (r-1)^n))` with
/// `f(x) = x^(n+1) - (n+1) x^n`, as printed in the source's final line.
pub fn s_bundle_f_form(n: u32, r: &Rational) -> Rational {
    let one = q("1");
    let pw = |b: &Rational, e: u32| num_traits::pow(b.clone(), e as usize);
    let np1 = Rational::from_integer((n + 1).into());
    let fx = |x: &Rational| pw(x, n + 1) - &np1 * pw(x, n);
    let d = pw(&(r + &one), n) - pw(&(r - &one), n);
    one + (fx(&(r - q("1"))) - fx(&(r + q("1")))) / (np1 * d)
}

/// Integrand of `r^(n-1) vol(Y) β(V̄_inf) / vol(V)` over `t ∈ [0, 1]`, l != 1.
pub fn normalized_beta_integrand(n: u32, r: f64, l: f64, t: f64) -> f64 {
    let ni = n as i32;
    ((r - (t - 1.0) * (1.0 - l)).powi(ni) - (r + 1.0 - l).powi(ni)) / (l - 1.0) + (r - 1.0).powi(ni)
        - (r + t - 1.0).powi(ni)
}

/// `C(k + 2, 2)`, sections of `O(k)` on the plane.
pub fn plane_sections(k: u64) -> u128 {
    let k = k as u128;
    (k + 1) * (k + 2) / 2
}

/// `a_m` for `(n, r) = (3, 3)` over the plane by direct summation.
pub fn a_m_plane_index_three(m: u64) -> Rational {
    let mut total: u128 = 0;
    let mut weighted: u128 = 0;
    for j in 0..=2 * m {
        let degree = if j <= m { 3 * m - m + j } else { 3 * m + m - j };
        let dim = plane_sections(degree);
        total += dim;
        if j > m {
            weighted += dim * (j - m) as u128;
        }
    }
    Rational::new(weighted.into(), (total * m as u128).into())
}
