use heightlab::diffop::{apply_d, iterate_d};
use heightlab::factor::factor_over_q;
use heightlab::heights::AlgebraicNumber;
use heightlab::rational::BigRat;
use heightlab::roots::{isolate_roots, mahler_measure_log};
use heightlab::runge::runge_condition;
use heightlab::{count_absolute_factors, parse_bipoly, BiPoly, IntPoly, Limits};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn bipoly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, -6i64..=6), 1..=max_terms)
        .prop_map(|ts| BiPoly::from_i64(&ts))
}

fn nonzero_bipoly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = BiPoly> {
    bipoly(max_deg, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

fn intpoly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-9i64..=9, 2..=max_deg + 1)
        .prop_map(|c| IntPoly::from_i64(&c))
        .prop_filter("positive degree", |f| f.degree() >= 1)
}

/// A root of some irreducible factor of a random polynomial.
fn algebraic(max_deg: usize) -> impl Strategy<Value = AlgebraicNumber> {
    (intpoly(max_deg), any::<prop::sample::Index>()).prop_map(|(f, idx)| {
        let fac = factor_over_q(&f).unwrap();
        let g = fac.factors[idx.index(fac.factors.len())].0.clone();
        let i = idx.index(g.degree());
        AlgebraicNumber::from_irreducible(g, i)
    })
}

fn max_coeff(p: &BiPoly) -> BigRat {
    p.terms().map(|(_, c)| c.abs()).max().unwrap_or_else(BigRat::zero)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in bipoly(3, 5), b in bipoly(3, 5), c in bipoly(3, 5)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn degrees_add(a in nonzero_bipoly(4, 5), b in nonzero_bipoly(4, 5)) {
        let ab = &a * &b;
        prop_assert_eq!(ab.total_degree(), a.total_degree() + b.total_degree());
        prop_assert_eq!(ab.deg_x(), a.deg_x() + b.deg_x());
        prop_assert_eq!(ab.deg_y(), a.deg_y() + b.deg_y());
    }

    #[test]
    fn product_coefficient_bound(a in nonzero_bipoly(4, 6), b in nonzero_bipoly(4, 6)) {
        let k = (a.deg_x().min(b.deg_x()) + 1) * (a.deg_y().min(b.deg_y()) + 1);
        let bound = BigRat::from_integer(k.into()) * max_coeff(&a) * max_coeff(&b);
        prop_assert!(max_coeff(&(&a * &b)) <= bound);
    }

    #[test]
    fn text_round_trip(a in bipoly(5, 8)) {
        prop_assert_eq!(parse_bipoly(&a.to_text()).unwrap(), a);
    }

    #[test]
    fn inverse_substitution_is_an_involution(a in nonzero_bipoly(4, 6)) {
        // X ∤ P keeps deg_X after one application
        prop_assume!(!a.eval_partial_x(&BigRat::zero()).is_zero());
        let z = BigRat::zero();
        prop_assert_eq!(a.shift_inverse_substitute(&z).shift_inverse_substitute(&z), a);
    }

    #[test]
    fn d_kills_p_and_obeys_leibniz(
        p in nonzero_bipoly(3, 4),
        a in bipoly(3, 4),
        b in bipoly(3, 4),
        s in 0u32..=4,
    ) {
        prop_assert!(apply_d(&p, &p).is_zero());
        let lim = Limits::default();
        let lhs = iterate_d(&p, &(&a * &b), s, &lim).unwrap();
        let mut rhs = BiPoly::zero();
        let mut binom = BigInt::one();
        for k in 0..=s {
            let t = &iterate_d(&p, &a, k, &lim).unwrap() * &iterate_d(&p, &b, s - k, &lim).unwrap();
            rhs = &rhs + &t.scale(&BigRat::from_integer(binom.clone()));
            binom = binom * BigInt::from(s - k) / BigInt::from(k + 1);
        }
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(iterate_d(&p, &(&p * &a), s, &lim).unwrap(), &p * &iterate_d(&p, &a, s, &lim).unwrap());
    }

    #[test]
    fn iterate_d_bounds(p in nonzero_bipoly(3, 5), a in nonzero_bipoly(3, 5), s in 0u32..=4) {
        let (dp, dq) = (p.deg_x(), p.deg_y());
        prop_assume!(dp >= 1 && dq >= 1 && a.deg_y() < dq);
        let n = a.deg_x();
        let ds = iterate_d(&p, &a, s, &Limits::default()).unwrap();
        if !ds.is_zero() {
            prop_assert!(ds.deg_x() <= n + (dp - 1) * s);
            prop_assert!(ds.deg_y() <= (dq - 1) * (s + 1));
        }
        let r = dp.max(dq);
        let base = BigInt::from(2 * (dp + 1) * (dq + 1) * r * (n + r * s));
        let bound = BigRat::from_integer(base.pow(s)) * max_coeff(&p).pow(s as i32) * max_coeff(&a);
        prop_assert!(max_coeff(&ds) <= bound);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn factorization_re_expands(a in intpoly(6), b in intpoly(4)) {
        let f = &a * &b;
        let fac = factor_over_q(&f).unwrap();
        prop_assert_eq!(fac.expand(), f.to_rat());
        for (g, _) in &fac.factors {
            prop_assert!(g.lead().is_positive());
            prop_assert!(g.is_primitive());
        }
    }

    #[test]
    fn one_ball_per_distinct_root(f in intpoly(8)) {
        let sf = f.squarefree_part();
        let balls = isolate_roots(&f, &BigRat::new(1.into(), 1024.into())).unwrap();
        prop_assert_eq!(balls.len(), sf.degree());
    }

    #[test]
    fn mahler_measure_is_multiplicative(a in intpoly(5), b in intpoly(5)) {
        let tol = 1e-12;
        let ma = mahler_measure_log(&a, tol).unwrap();
        let mb = mahler_measure_log(&b, tol).unwrap();
        let mab = mahler_measure_log(&(&a * &b), tol).unwrap();
        prop_assert!((mab.value - ma.value - mb.value).abs() <= 3.0 * tol);
    }

    #[test]
    fn absolute_factor_count_adds(a in nonzero_bipoly(2, 4), b in nonzero_bipoly(2, 4)) {
        let (Ok(ka), Ok(kb)) = (count_absolute_factors(&a), count_absolute_factors(&b)) else {
            return Ok(());
        };
        match count_absolute_factors(&(&a * &b)) {
            Ok(k) => prop_assert_eq!(k, ka + kb),
            // a common factor makes the product non-squarefree
            Err(heightlab::Error::NotSquarefree) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn height_of_powers(x in algebraic(4), n in 1u32..=5) {
        let h = x.weil_height(1e-12).unwrap().value;
        let xn = x.pow(n).unwrap();
        let hn = xn.weil_height(1e-12).unwrap().value;
        prop_assert!((hn - n as f64 * h).abs() < 1e-9, "{hn} vs {n}·{h}");
    }

    #[test]
    fn height_of_reciprocal(x in algebraic(4)) {
        prop_assume!(!x.min_poly().coeff(0).is_zero());
        let h = x.weil_height(1e-12).unwrap().value;
        let hr = x.recip().unwrap().weil_height(1e-12).unwrap().value;
        prop_assert!((hr - h).abs() < 1e-9);
    }

    #[test]
    fn shifting_by_one_moves_height_by_at_most_ln2(x in algebraic(4), sign in prop::bool::ANY) {
        let xi = BigRat::from_integer(if sign { 1 } else { -1 }.into());
        let h = x.weil_height(1e-12).unwrap().value;
        let hs = x.sub_rational(&xi).unwrap().weil_height(1e-12).unwrap().value;
        prop_assert!((hs - h).abs() <= std::f64::consts::LN_2 + 1e-9);
    }

    #[test]
    fn runge_rejects_powers_of_one_form(a in 1i64..=5, b in 1i64..=5, d in 2u32..=4, lower in bipoly(3, 4)) {
        // (aX − bY)^d plus terms of degree < d
        let lin = BiPoly::from_i64(&[(1, 0, a), (0, 1, -b)]);
        let lower = BiPoly::from_terms(lower.terms().filter(|(e, _)| e.0 + e.1 < d).map(|(e, c)| (*e, c.clone())));
        let p = &lin.pow(d) + &lower;
        prop_assert!(!runge_condition(&p).unwrap().holds);
    }
}

#[test]
fn cyclotomic_mahler_measure_vanishes() {
    // Φ_n for a few n, and x^n − 1
    let cases: [&[i64]; 5] = [
        &[1, 1, 1],
        &[1, 0, 1],
        &[1, -1, 1, -1, 1],
        &[1, 0, -1, 0, 1],
        &[-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    ];
    for c in cases {
        let m = mahler_measure_log(&IntPoly::from_i64(c), 1e-12).unwrap();
        assert!(m.value.abs() < 1e-12, "{c:?}: {}", m.value);
    }
}
