use hirota::cli::parse_poly;
use hirota::conditions::{
    g_from_u, modified_residual, riccati_descent_star, riccati_lhs, star_residual,
    theorem2_solutions,
};
use hirota::polyring::{gcd, linear_power_detect, rat, Poly, Rational, RationalFunction};
use hirota::recurrence::{
    h_at, hirota_generate, hirota_rhs, somos_generate, HCoeffs, HirotaSpec, SomosSpec,
};
use num_traits::Zero;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=7).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 0..=max_deg + 1).prop_map(Poly::new)
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(6), b in poly(6), c in poly(6)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a * &Poly::one(), a);
    }

    #[test]
    fn divrem_reconstructs(a in poly(10), b in nonzero_poly(5)) {
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_is_monic_common_divisor(a in nonzero_poly(4), b in nonzero_poly(4), c in nonzero_poly(3)) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = gcd(&ac, &bc).unwrap();
        prop_assert!(g.leading().unwrap() == &rat(1, 1));
        prop_assert!(ac.div_exact(&g).unwrap().is_some());
        prop_assert!(bc.div_exact(&g).unwrap().is_some());
        prop_assert!(g.div_exact(&c.monic()).unwrap().is_some());
    }

    #[test]
    fn linear_power_recovered(gamma in nonzero_rational(), r in rational(), k in 1usize..=9) {
        let f = Poly::linear_power(&r, k).scale(&gamma);
        let lp = linear_power_detect(&f).unwrap().expect("linear power");
        prop_assert_eq!(&lp.gamma, &gamma);
        prop_assert_eq!(&lp.root, &r);
        prop_assert_eq!(lp.k, k);
        prop_assert_eq!(lp.expand(), f);
    }

    #[test]
    fn reverse_is_involution_off_zero(p in nonzero_poly(8)) {
        prop_assume!(!p.constant_term().is_zero());
        prop_assert_eq!(p.reverse().reverse(), p);
    }

    #[test]
    fn ratfun_canonical(a in poly(4), b in nonzero_poly(4), c in nonzero_poly(3)) {
        let x = RationalFunction::new(a.clone(), b.clone()).unwrap();
        let y = RationalFunction::new(&a * &c, &b * &c).unwrap();
        prop_assert_eq!(&x, &y);
        prop_assert!(x.den().leading().unwrap() == &rat(1, 1));
        prop_assert!(gcd(x.num(), x.den()).map(|g| g.is_constant()).unwrap_or(true));
    }

    #[test]
    fn half_derivative_solves_star(f in nonzero_poly(8)) {
        let g = f.derivative().scale(&rat(1, 2));
        prop_assert!(star_residual(&f, &g).satisfied);
    }

    #[test]
    fn linear_power_family_solves_star(gamma in nonzero_rational(), r in rational(), k in 1usize..=9) {
        let f = Poly::linear_power(&r, k).scale(&gamma);
        let g = Poly::linear_power(&r, k - 1).scale(&gamma);
        prop_assert!(star_residual(&f, &g).satisfied);
    }

    #[test]
    fn modified_residual_is_negated_riccati(f in nonzero_poly(5), u in poly(4), beta in rational()) {
        let rep = modified_residual(&f, &g_from_u(&u, &f), &beta);
        prop_assert_eq!(rep.residual, -riccati_lhs(&f, &beta, &u));
    }

    #[test]
    fn star_is_quadratic_form(f in poly(5), g in poly(4), lambda in nonzero_rational()) {
        let base = star_residual(&f, &g).residual;
        let scaled = star_residual(&f.scale(&lambda), &g.scale(&lambda)).residual;
        prop_assert_eq!(scaled, base.scale(&(&lambda * &lambda)));
    }

    #[test]
    fn pivot_identity(p in poly(3), alpha in rational(), beta in rational()) {
        let h = HCoeffs::new(p, alpha, beta.clone());
        let two = rat(2, 1);
        for n in 2..=20u64 {
            let lhs = &h_at(&h, n - 1).scale(&-two.clone()) + &h_at(&h, n);
            let rhs = &-h_at(&h, n - 2) + &Poly::constant(&two * &beta);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn parse_print_identity(p in poly(10)) {
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closed_form_matches_descent(kind in 0u8..2, f0 in nonzero_poly(5), gamma in nonzero_rational(), r in rational(), k in 1usize..=6) {
        let f = if kind == 0 { f0 } else { Poly::linear_power(&r, k).scale(&gamma) };
        let closed = theorem2_solutions(&f).unwrap();
        let set = riccati_descent_star(&f).unwrap();
        let mut via_u: Vec<Poly> = set.solutions.iter().map(|u| g_from_u(u, &f)).collect();
        via_u.sort_by(Poly::canonical_cmp);
        prop_assert_eq!(closed, via_u);
    }

    #[test]
    fn somos_terms_satisfy_recurrence(k in 4usize..=7, seeds in prop::collection::vec(nonzero_rational(), 7)) {
        let spec = SomosSpec::new(k, seeds[..k].to_vec(), 16).unwrap();
        let a = match somos_generate(&spec) {
            Ok(a) => a,
            Err(_) => return Ok(()),
        };
        for n in k..a.len() {
            let rhs: Rational = (1..=k / 2).map(|j| &a[n - j] * &a[n - k + j]).sum();
            prop_assert_eq!(&a[n] * &a[n - k], rhs);
        }
    }

    #[test]
    fn hirota_terms_satisfy_recurrence(f in nonzero_poly(2), p in nonzero_poly(2), alpha in rational()) {
        let g = f.derivative().scale(&rat(1, 2));
        let Ok(spec) = HirotaSpec::new(f, g, HCoeffs::new(p, alpha, rat(0, 1)), Poly::one(), Poly::x()) else {
            return Ok(());
        };
        let Ok(rep) = hirota_generate(&spec, 5) else { return Ok(()); };
        for n in 1..rep.entries.len() - 1 {
            let lhs = &rep.entries[n + 1] * &rep.entries[n - 1];
            prop_assert_eq!(lhs, hirota_rhs(&spec, &rep.entries[n], n as u64));
        }
    }
}
