use std::sync::Arc;

use mgcm_core::groebner::GroebnerBasis;
use mgcm_core::homological::{a_invariant, depth_of, minimal_free_resolution, projective_dim, v_of};
use mgcm_core::linalg::Echelon;
use mgcm_core::module::Presentation;
use mgcm_core::poly::MonoOrder;
use mgcm_core::ring::{Poly, PolyRing};
use mgcm_core::{DegSel, Degree, Field, GradingMap, Multidegree, PrimeField, Rationals};
use proptest::prelude::*;

fn ring<F: Field>(field: F, order: MonoOrder) -> Arc<PolyRing<F>> {
    let vars = ["x", "y", "z"].iter().map(|v| (v.to_string(), Multidegree(vec![1]), 1)).collect();
    Arc::new(PolyRing::new(field, vars, order).unwrap())
}

fn bigraded<F: Field>(field: F) -> Arc<PolyRing<F>> {
    let vars = vec![
        ("x0".to_string(), Multidegree(vec![1, 0]), 1),
        ("x1".to_string(), Multidegree(vec![1, 0]), 1),
        ("y0".to_string(), Multidegree(vec![0, 1]), 1),
        ("y1".to_string(), Multidegree(vec![0, 1]), 1),
    ];
    Arc::new(PolyRing::new(field, vars, MonoOrder::Degrevlex).unwrap())
}

type Terms = Vec<(i64, [u8; 3])>;

fn poly_text(terms: &Terms) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = terms.iter().map(|(c, e)| format!("({c})*x^{}*y^{}*z^{}", e[0], e[1], e[2])).collect();
    parts.join(" + ")
}

fn terms(max_len: usize, max_exp: u8) -> impl Strategy<Value = Terms> {
    prop::collection::vec((-20i64..20, [0..=max_exp, 0..=max_exp, 0..=max_exp]), 0..max_len)
}

/// Homogeneous polynomial of degree `d` with the given coefficients.
fn homogeneous(d: u8, coefs: &[i64]) -> Terms {
    let mut out = Vec::new();
    let mut k = 0;
    for a in 0..=d {
        for b in 0..=d - a {
            if let Some(&c) = coefs.get(k) {
                out.push((c, [a, b, d - a - b]));
            }
            k += 1;
        }
    }
    out
}

fn axioms<F: Field>(field: F, a: &Terms, b: &Terms, c: &Terms) {
    let r = ring(field, MonoOrder::Degrevlex);
    let (a, b, c) = (r.parse(&poly_text(a)).unwrap(), r.parse(&poly_text(b)).unwrap(), r.parse(&poly_text(c)).unwrap());
    assert_eq!(r.add(&r.add(&a, &b), &c), r.add(&a, &r.add(&b, &c)));
    assert_eq!(r.add(&a, &b), r.add(&b, &a));
    assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
    assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
    assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
    assert!(r.sub(&a, &a).is_zero());
    assert_eq!(r.mul(&a, &r.one()), a);
    let text = r.render_vector(&a);
    assert_eq!(r.parse(&text).unwrap(), a, "{text}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms_prime(a in terms(5, 3), b in terms(5, 3), c in terms(5, 3)) {
        axioms(PrimeField::default(), &a, &b, &c);
        axioms(PrimeField::new(7).unwrap(), &a, &b, &c);
    }

    #[test]
    fn ring_axioms_rational(a in terms(5, 3), b in terms(5, 3), c in terms(5, 3)) {
        axioms(Rationals, &a, &b, &c);
    }
}

fn monomials(d: u8) -> Vec<[u8; 3]> {
    homogeneous(d, &vec![1; 64]).into_iter().map(|t| t.1).collect()
}

/// Whether `f` lies in the degree-`d` span of monomial multiples of `gens`,
/// by row reduction over the monomial basis.
fn brute_member<F: Field>(r: &PolyRing<F>, gens: &[(u8, Poly<F::Elem>)], d: u8, f: &Poly<F::Elem>) -> bool {
    let basis = monomials(d);
    let index = |p: &Poly<F::Elem>| -> Vec<(usize, F::Elem)> {
        let mut row: Vec<(usize, F::Elem)> = p
            .terms
            .iter()
            .map(|t| {
                let e = [t.mono[0] as u8, t.mono[1] as u8, t.mono[2] as u8];
                (basis.iter().position(|m| *m == e).unwrap(), t.coef.clone())
            })
            .collect();
        row.sort_by_key(|x| x.0);
        row
    };
    let mut ech = Echelon::new(&r.field);
    for (dg, g) in gens {
        if *dg > d {
            continue;
        }
        for m in monomials(d - dg) {
            let mono = r.parse(&format!("x^{}*y^{}*z^{}", m[0], m[1], m[2])).unwrap();
            ech.insert(index(&r.mul(&mono, g)));
        }
    }
    ech.contains(index(f))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn membership_matches_linear_algebra(
        degs in prop::collection::vec(1u8..=2, 1..=3),
        coefs in prop::collection::vec(prop::collection::vec(-3i64..=3, 6), 3),
        target in prop::collection::vec(-3i64..=3, 10),
        d in 2u8..=3,
    ) {
        let r = ring(PrimeField::default(), MonoOrder::Degrevlex);
        let gens: Vec<(u8, Poly<u64>)> = degs
            .iter()
            .zip(&coefs)
            .map(|(&dg, c)| (dg, r.parse(&poly_text(&homogeneous(dg, c))).unwrap()))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        prop_assume!(!gens.is_empty());
        let polys: Vec<_> = gens.iter().map(|g| g.1.clone()).collect();
        let gb = GroebnerBasis::of_ideal(&r, &polys).unwrap();
        prop_assert!(gb.certify());
        let f = r.parse(&poly_text(&homogeneous(d, &target))).unwrap();
        prop_assert_eq!(gb.contains(&f), brute_member(&r, &gens, d, &f));
        // a combination of the generators is always a member
        let combo = gens.iter().fold(Poly::zero(), |acc, (dg, g)| {
            let m = r.parse(&format!("x^{}", 3 - dg)).unwrap();
            r.add(&acc, &r.mul(&m, g))
        });
        prop_assert!(gb.contains(&combo));
    }
}

fn monomial_ideal(exps: &[[u8; 3]]) -> String {
    exps.iter()
        .map(|e| if e.iter().all(|&x| x == 0) { "x".to_string() } else { format!("x^{}*y^{}*z^{}", e[0], e[1], e[2]) })
        .collect::<Vec<_>>()
        .join(", ")
}

fn cyclic<F: Field>(r: &Arc<PolyRing<F>>, gens: &str) -> Presentation<F> {
    let polys: Vec<_> = gens.split(", ").map(|g| r.parse(g).unwrap()).collect();
    Presentation::cyclic(Arc::clone(r), &polys).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn auslander_buchsbaum(exps in prop::collection::vec([0u8..3, 0u8..3, 0u8..3], 1..=4)) {
        let r = ring(PrimeField::default(), MonoOrder::Degrevlex);
        let m = cyclic(&r, &monomial_ideal(&exps));
        let res = minimal_free_resolution(&m, None);
        prop_assert!(res.check_complex() && res.check_minimal());
        prop_assert_eq!(depth_of(&m).unwrap() + projective_dim(&res).unwrap(), 3);
    }

    #[test]
    fn betti_numbers_ignore_the_order(exps in prop::collection::vec([0u8..3, 0u8..3, 0u8..3], 1..=4), lin in -2i64..=2) {
        let gens = format!("{}, x + ({lin})*y", monomial_ideal(&exps));
        let a = cyclic(&ring(PrimeField::default(), MonoOrder::Degrevlex), &gens);
        let b = cyclic(&ring(PrimeField::default(), MonoOrder::Lex), &gens);
        prop_assert_eq!(minimal_free_resolution(&a, None).betti(), minimal_free_resolution(&b, None).betti());
    }

    #[test]
    fn shift_equivariance(e0 in 1u8..3, e1 in 0u8..3, s0 in -3i64..=3, s1 in -3i64..=3) {
        let r = bigraded(PrimeField::default());
        let polys = vec![r.parse(&format!("x0^{e0}*y0^{e1}")).unwrap()];
        let m = Presentation::cyclic(Arc::clone(&r), &polys).unwrap();
        let s = Degree::new(Multidegree(vec![s0, s1]), s0 + s1);
        let shifted = m.shift_up(&s);
        prop_assert_eq!(v_of(&shifted).unwrap(), &v_of(&m).unwrap() + &s.md);
        prop_assert_eq!(a_invariant(&shifted).unwrap(), &a_invariant(&m).unwrap() + &s.md);
    }

    #[test]
    fn coarsening_sums_pieces(e0 in 0u8..3, e1 in 0u8..3, d in 0i64..=4) {
        let r = bigraded(PrimeField::default());
        let polys = vec![r.parse(&format!("x0^{e0}*y1^{e1} - x1^{e0}*y0^{e1}")).unwrap()];
        let m = Presentation::cyclic(Arc::clone(&r), &polys).unwrap();
        let total = GradingMap::new(vec![vec![1, 1]]).unwrap();
        let coarse = m.coarsen(&total).unwrap();
        let fine: usize = (0..=d).map(|i| m.piece_dim(&DegSel::multi(Multidegree(vec![i, d - i]))).unwrap()).sum();
        prop_assert_eq!(coarse.piece_dim(&DegSel::multi(Multidegree(vec![d]))).unwrap(), fine);
    }
}
