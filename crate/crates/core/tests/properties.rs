mod common;

use kstab::invariants::{beta, coefficient_a, s_invariant};
use kstab::refinement::{basis_profile, convergence_table, ProjectiveSpace};
use kstab::zariski::{decompose, profile_value, volume_profile};
use kstab::{Construction, HorizontalDivisor, Poly, Rational, RationalClass, Scalar};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(p, d)| Rational::new(p.into(), d.into()))
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rational(), 0..6).prop_map(Poly::new)
}

proptest! {
    #[test]
    fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn pow_is_repeated_product(a in small_poly(), e in 0u32..5) {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * &a;
        }
        prop_assert_eq!(a.pow(e), acc);
    }

    #[test]
    fn horner_matches_termwise_sum(a in small_poly(), x in small_rational()) {
        let mut total = Rational::zero();
        for (i, c) in a.coeffs().iter().enumerate() {
            total += c * num_traits::pow(x.clone(), i);
        }
        prop_assert_eq!(a.eval(&x), total);
    }

    #[test]
    fn integration_is_linear(a in small_poly(), b in small_poly(), lo in small_rational(), w in 0i64..8) {
        let hi = &lo + Rational::from_int(w);
        let lhs = (&a + &b).integrate(&lo, &hi).unwrap();
        let rhs = a.integrate(&lo, &hi).unwrap() + b.integrate(&lo, &hi).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn integration_is_additive(a in small_poly(), lo in small_rational(), w1 in 0i64..5, w2 in 0i64..5) {
        let mid = &lo + Rational::from_int(w1);
        let hi = &mid + Rational::from_int(w2);
        let whole = a.integrate(&lo, &hi).unwrap();
        let split = a.integrate(&lo, &mid).unwrap() + a.integrate(&mid, &hi).unwrap();
        prop_assert_eq!(whole, split);
    }

    #[test]
    fn top_power_scales_homogeneously(
        n in 2u32..6,
        ri in 0usize..4,
        li in 0usize..7,
        x in small_rational(), y in small_rational(), z in small_rational(),
        s in small_rational(),
    ) {
        let r = q(GRID_R[ri]);
        let l = q(GRID_L[li]);
        prop_assume!(l < &r + q("1"));
        let c = Construction::new(n, r, l, q("3/2")).unwrap();
        let class = RationalClass::constant(x, y, z);
        let lhs = c.top_power(&class.scale(&s));
        let rhs = c.top_power(&class).scale(&num_traits::pow(s, n as usize));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn exact_integrals_match_quadrature() {
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    for _ in 0..500 {
        let degree = rng.gen_range(0..=8);
        let coeffs: Vec<Rational> = (0..=degree)
            .map(|_| {
                Rational::new(
                    rng.gen_range(-20i64..=20).into(),
                    rng.gen_range(1i64..=9).into(),
                )
            })
            .collect();
        let p = Poly::new(coeffs.clone());
        let lo = Rational::new(rng.gen_range(-8i64..=8).into(), 4.into());
        let hi = &lo + Rational::new(rng.gen_range(1i64..=12).into(), 4.into());
        let exact = f(&p.integrate(&lo, &hi).unwrap());
        let cf: Vec<f64> = coeffs.iter().map(f).collect();
        let g = |t: f64| cf.iter().rev().fold(0.0, |acc, c| acc * t + c);
        // relative to ∫ Σ|c_i||t|^i so that near-cancelling integrals are still judged fairly
        let (a, b) = (f(&lo), f(&hi));
        let mass: f64 = cf
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let k = i as i32 + 1;
                let m = if a >= 0.0 {
                    b.powi(k) - a.powi(k)
                } else if b <= 0.0 {
                    a.abs().powi(k) - b.abs().powi(k)
                } else {
                    a.abs().powi(k) + b.powi(k)
                };
                c.abs() * m / f64::from(k)
            })
            .sum();
        let approx = quad(&g, a, b, 1e-12 * mass);
        assert!(
            (approx - exact).abs() <= 1e-9 * exact.abs().max(mass),
            "{p} on [{lo}, {hi}]: {approx} vs {exact}"
        );
    }
}

#[test]
fn top_power_matches_word_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (n, r, l) in admissible_grid() {
        let (x, y, z) = (
            Rational::new(rng.gen_range(-6i64..=6).into(), 2.into()),
            Rational::new(rng.gen_range(-6i64..=6).into(), 2.into()),
            Rational::new(rng.gen_range(-6i64..=6).into(), 2.into()),
        );
        let c = Construction::new(n, r.clone(), l.clone(), q("5/3")).unwrap();
        let exact = c
            .top_power(&RationalClass::constant(x.clone(), y.clone(), z.clone()))
            .eval(&q("0"));
        let words = top_power_by_words(n, f(&r), f(&l), 5.0 / 3.0, f(&x), f(&y), f(&z));
        assert!(
            (words - f(&exact)).abs() <= 1e-9 * (1.0 + words.abs()),
            "({n}, {r}, {l})"
        );
    }
}

#[test]
fn anticanonical_volume_is_positive() {
    for (n, r, l) in admissible_grid() {
        let c = Construction::new(n, r, l, q("1")).unwrap();
        assert!(c.vol_y().is_positive());
    }
}

#[test]
fn decomposition_identities() {
    let t = Poly::t();
    for (n, r, l) in admissible_grid() {
        let c = Construction::new(n, r.clone(), l, q("2")).unwrap();
        let anti_k = RationalClass::anti_canonical();
        let derived = c.derived_classes();
        for d in HorizontalDivisor::ALL {
            let target = &anti_k - &d.class::<Rational>().scale_poly(&t);
            let segments = decompose(&c, d);
            for seg in &segments {
                assert!(seg.t_lo < seg.t_hi);
                assert_eq!(&seg.positive + &seg.negative, target, "P + N at {d}");
            }
            // N on [1, 2] is (t - 1) times E or F
            let carrier = match d {
                HorizontalDivisor::InfinitySection => &derived.e,
                HorizontalDivisor::ZeroSection => &derived.f,
            };
            assert_eq!(
                segments[1].negative,
                carrier.scale_poly(&(&t - &Poly::one()))
            );

            let profile = volume_profile(&c, d);
            assert_eq!(profile[0].volume.eval(&q("0")), c.vol_y());
            assert_eq!(
                profile[0].volume.eval(&q("1")),
                profile[1].volume.eval(&q("1"))
            );
            assert!(profile[1].volume.eval(&q("2")).is_zero());
            let samples: Vec<Rational> =
                (0..=8).map(|i| Rational::new(i.into(), 4.into())).collect();
            for w in samples.windows(2) {
                assert!(
                    profile_value(&profile, &w[1]) <= profile_value(&profile, &w[0]),
                    "monotone"
                );
            }
        }
    }
}

#[test]
fn involution_symmetry_at_l_two() {
    for n in GRID_N {
        for r in GRID_R {
            let c = Construction::new(n, q(r), q("2"), q("1")).unwrap();
            assert_eq!(
                volume_profile(&c, HorizontalDivisor::ZeroSection),
                volume_profile(&c, HorizontalDivisor::InfinitySection)
            );
        }
    }
}

#[test]
fn betas_are_independent_of_base_volume() {
    for (n, r, l) in admissible_grid() {
        let base = Construction::new(n, r, l, q("1")).unwrap();
        for v in ["8", "22/7"] {
            let scaled = base.with_vol_v(q(v)).unwrap();
            for d in HorizontalDivisor::ALL {
                assert_eq!(s_invariant(&scaled, d), s_invariant(&base, d));
            }
        }
    }
}

#[test]
fn sign_pattern_regression() {
    // observed from exact computation on the grid
    for (n, r, l) in admissible_grid() {
        let c = Construction::new(n, r.clone(), l.clone(), q("1")).unwrap();
        let b0 = beta(&c, HorizontalDivisor::ZeroSection);
        let binf = beta(&c, HorizontalDivisor::InfinitySection);
        if l < q("2") {
            assert!(b0.is_negative() && binf.is_positive(), "({n}, {r}, {l})");
        } else if l > q("2") {
            assert!(binf.is_negative() && b0.is_positive(), "({n}, {r}, {l})");
        } else {
            assert!(b0.is_zero() && binf.is_zero());
        }
    }
}

#[test]
fn pair_coefficient_range() {
    for n in 2..=10 {
        for r in ["5/4", "3/2", "2", "3", "5"] {
            let a = coefficient_a(n, &q(r)).unwrap();
            assert!(a > q("0") && a < q("1/2"), "a({n}, {r}) = {a}");
        }
    }
}

#[test]
fn refinement_convergence_rate() {
    let c = Construction::new(3, q("3"), q("2"), q("1")).unwrap();
    let h = ProjectiveSpace { s: 2, d: 1 };
    let table = convergence_table(&c, &h, &[1, 2, 4, 8, 16, 32, 64]).unwrap();
    for row in &table {
        assert!(row.error.is_positive());
    }
    for w in table.windows(2) {
        assert!(w[1].error < w[0].error);
    }
    assert!(table[6].error < &table[0].error / Rational::from_int(10));
}

#[test]
fn total_dimension_growth() {
    // N_m / m^n over doublings settles within 5% by m = 64
    let c = Construction::new(3, q("3"), q("2"), q("1")).unwrap();
    let h = ProjectiveSpace { s: 2, d: 1 };
    let normalized = |m: u64| {
        let total = basis_profile(&c, &h, m).unwrap().total();
        Rational::new(BigInt::from(total), BigInt::from(m.pow(3)))
            .to_f64()
            .unwrap()
    };
    let ratio = normalized(32) / normalized(64);
    assert!((ratio - 1.0).abs() < 0.05, "ratio {ratio}");
}
