mod common;

use common::*;
use num_traits::{One, Zero};
use proptest::prelude::*;
use symop_core::operators::matrix_of;
use symop_core::tableaux::{self, enumerate_ssyt, enumerate_ssyt_bounded, jdt_slide, psi, psi_inverse, skew_lr_product, skew_pieri};
use symop_core::{
    apply_kb, jacobi_trudi, kron_coeff, lr_coeff, mn_character, partitions_of, partitions_up_to, skew_schur, Basis, OperatorExpr,
    Partition, Rational, SkewShape, SymFunc,
};

fn partition_up_to(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn partition_of(n: usize) -> impl Strategy<Value = Partition> {
    let all = partitions_of(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn skew_shape(max_outer: usize) -> impl Strategy<Value = SkewShape> {
    partition_up_to(max_outer).prop_flat_map(|outer| {
        let subs = outer.subpartitions();
        (0..subs.len()).prop_map(move |i| SkewShape::new(outer.clone(), subs[i].clone()).unwrap())
    })
}

fn schur_combination(max_deg: usize) -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((partition_up_to(max_deg), -5i64..=5, 1i64..=3), 0..5).prop_map(|terms| {
        terms.into_iter().map(|(p, n, d)| s(&p).scale(&Rational::new(n.into(), d.into()))).sum()
    })
}

fn homogeneous(n: usize) -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((partition_of(n), -5i64..=5), 1..4)
        .prop_map(|terms| terms.into_iter().map(|(p, c)| s(&p).scale_int(c)).sum())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basis_round_trips(f in schur_combination(5)) {
        for b in Basis::ALL {
            prop_assert_eq!(f.to_basis(b).to_schur(), f.clone());
            prop_assert_eq!(f.to_basis(b).to_basis(b), f.to_basis(b));
        }
    }

    #[test]
    fn products_agree_across_bases(a in partition_up_to(4), b in partition_up_to(4)) {
        let direct = s(&a) * s(&b);
        let via_p = (s(&a).to_basis(Basis::Power) * s(&b).to_basis(Basis::Power)).to_schur();
        prop_assert_eq!(&direct, &via_p);
        for xs in POINTS {
            prop_assert_eq!(eval(&direct, xs), eval(&s(&a), xs) * eval(&s(&b), xs));
        }
    }

    #[test]
    fn skew_schur_matches_fillings(shape in skew_shape(6)) {
        let f = skew_schur(&shape);
        for xs in POINTS {
            prop_assert_eq!(eval(&f, &xs[..4]), Rational::from_integer(eval_skew_schur(shape.outer(), shape.inner(), &xs[..4])));
        }
    }

    #[test]
    fn u_and_d_are_adjoint(mu in partition_up_to(3), f in homogeneous(3), g in partition_up_to(6)) {
        let lhs = (s(&mu) * &f).hall_inner(&s(&g));
        let rhs = f.hall_inner(&s(&g).skew(&s(&mu)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn k_and_kb_are_self_adjoint(l in partition_up_to(4), n in 0usize..=5, seed in any::<u64>()) {
        let all = partitions_of(n);
        let a = &all[(seed as usize) % all.len()];
        let b = &all[(seed as usize / 7) % all.len()];
        let k = |g: &SymFunc| s(&l).kronecker(g);
        prop_assert_eq!(k(&s(a)).hall_inner(&s(b)), s(a).hall_inner(&k(&s(b))));
        let kb = |g: &SymFunc| apply_kb(&s(&l), g);
        prop_assert_eq!(kb(&s(a)).hall_inner(&s(b)), s(a).hall_inner(&kb(&s(b))));
    }

    #[test]
    fn sign_twist_conjugates(l in partition_up_to(6)) {
        let n = l.size();
        prop_assert_eq!(s(&l).kronecker(&s(&Partition::column(n))), s(&l.conjugate()));
        prop_assert_eq!(s(&l).kronecker(&s(&Partition::row(n))), s(&l));
    }

    #[test]
    fn jacobi_trudi_matches_determinant(seq in prop::collection::vec(-2i64..=4, 1..=4)) {
        let straightened = jacobi_trudi(&seq).to_symfunc();
        prop_assert_eq!(straightened.to_basis(Basis::Complete), jt_determinant(&seq));
    }

    #[test]
    fn vertex_operator_matches_straightening(l in partition_up_to(4), n in 0usize..=6) {
        let mut seq = vec![n as i64 - l.size() as i64];
        seq.extend(l.parts().iter().map(|&x| x as i64));
        prop_assert_eq!(s(&l).gamma1_component(n), jacobi_trudi(&seq).to_symfunc());
    }

    #[test]
    fn lr_symmetry_and_conjugation(a in partition_up_to(3), b in partition_up_to(3), seed in any::<usize>()) {
        let prod = s(&a) * s(&b);
        let all = partitions_of(a.size() + b.size());
        let nu = &all[seed % all.len()];
        let c = lr_coeff(nu, &a, &b);
        prop_assert_eq!(c, lr_coeff(nu, &b, &a));
        prop_assert_eq!(c, lr_coeff(&nu.conjugate(), &a.conjugate(), &b.conjugate()));
        prop_assert_eq!(Rational::from_integer(c.into()), prod.coeff(nu));
        let quotient = symop_core::symfunc::skew_schur_of(nu, &a);
        prop_assert_eq!(Rational::from_integer(c.into()), quotient.coeff(&b));
    }

    #[test]
    fn kron_coeff_matches_product(n in 1usize..=6, seed in any::<usize>()) {
        let all = partitions_of(n);
        let (a, b, c) = (&all[seed % all.len()], &all[(seed / 3) % all.len()], &all[(seed / 11) % all.len()]);
        let g = kron_coeff(a, b, c).unwrap();
        prop_assert_eq!(Rational::from_integer(g.into()), s(a).kronecker(&s(b)).coeff(c));
        prop_assert_eq!(Rational::from_integer(g.into()), kron_by_characters(a, b, c));
        prop_assert_eq!(g, kron_coeff(b, c, a).unwrap());
    }

    #[test]
    fn ssyt_counts_are_inner_products(shape in skew_shape(5), seed in any::<usize>()) {
        let all = partitions_of(shape.size());
        let content = &all[seed % all.len()];
        let n = enumerate_ssyt(&shape, content.parts()).len();
        let kostka = skew_schur(&shape).hall_inner(&SymFunc::complete(content.clone()));
        prop_assert_eq!(Rational::from_integer(n.into()), kostka);
    }

    #[test]
    fn psi_is_a_bijection(shape in skew_shape(6), seed in any::<usize>()) {
        let all = partitions_of(shape.size());
        let content = &all[seed % all.len()];
        for t in tableaux::lr_fillings(&shape, content.parts()) {
            let a = psi(&t).unwrap();
            prop_assert_eq!(psi_inverse(&a).unwrap(), t);
        }
    }

    #[test]
    fn skew_lr_matches_direct_product(a in skew_shape(4), b in skew_shape(4)) {
        prop_assert_eq!(skew_lr_product(&a, &b), skew_schur(&a) * skew_schur(&b));
        prop_assert_eq!(tableaux::collapse(&tableaux::skew_lr_terms(&a, &b)), skew_schur(&a) * skew_schur(&b));
    }

    #[test]
    fn skew_pieri_matches_direct_product(k in 0usize..=3, b in skew_shape(5)) {
        prop_assert_eq!(skew_pieri(k, &b), SymFunc::h(k) * skew_schur(&b));
    }

    #[test]
    fn skew_corners_match_kronecker(a in partition_up_to(6), seed in any::<usize>()) {
        let subs: Vec<_> = a.subpartitions().into_iter().filter(|t| a.size() - t.size() >= 2).collect();
        prop_assume!(!subs.is_empty());
        let t = &subs[seed % subs.len()];
        let m = (a.size() - t.size()) as i64;
        let direct = skew_schur(&SkewShape::new(a.clone(), t.clone()).unwrap()).kronecker(&jacobi_trudi(&[m - 1, 1]).to_symfunc());
        prop_assert_eq!(tableaux::skew_corners_rhs(&a, t).unwrap(), direct);
    }

    #[test]
    fn jdt_forward_then_reverse(shape in skew_shape(5), seed in any::<usize>()) {
        let corners = shape.inner().corners();
        prop_assume!(!corners.is_empty());
        let all = enumerate_ssyt_bounded(&shape, 3);
        prop_assume!(!all.is_empty());
        let t = &all[seed % all.len()];
        let hole = corners[seed % corners.len()];
        let fwd = jdt_slide(t, hole).unwrap();
        if let Some(v) = fwd.vacated {
            let back = jdt_slide(&fwd.tableau, v).unwrap();
            prop_assert_eq!(&back.tableau, t);
            prop_assert_eq!(back.vacated, Some(hole));
        } else {
            prop_assert_eq!(&fwd.tableau, t);
        }
    }

    #[test]
    fn degree_bookkeeping(mu in partition_up_to(3), d in 0usize..=7, seed in any::<usize>()) {
        let all = partitions_of(d);
        let g = s(&all[seed % all.len()]);
        let m = mu.size();
        let check = |f: SymFunc, deg: Option<usize>| f.is_zero() || (f.is_homogeneous() && f.degree() == deg);
        prop_assert!(check(OperatorExpr::u_s(&mu).apply(&g), Some(d + m)));
        prop_assert!(check(OperatorExpr::d_s(&mu).apply(&g), d.checked_sub(m)));
        prop_assert!(check(OperatorExpr::k_s(&mu).apply(&g), Some(d)));
        prop_assert!(check(OperatorExpr::kb_s(&mu).apply(&g), Some(d)));
    }
}

#[test]
fn character_orthogonality() {
    for n in 0..=6 {
        let parts = partitions_of(n);
        for a in &parts {
            for b in &parts {
                let sum: Rational = parts
                    .iter()
                    .map(|rho| Rational::new(mn_character(a, rho).unwrap() * mn_character(b, rho).unwrap(), rho.z_factor().into()))
                    .fold(Rational::zero(), |x, y| x + y);
                let expect = if a == b { Rational::one() } else { Rational::zero() };
                assert_eq!(sum, expect, "⟨χ^{a}, χ^{b}⟩");
            }
        }
    }
}

#[test]
fn u_matrix_is_transpose_of_d_matrix() {
    for mu in partitions_up_to(3) {
        for n in 0..=5 {
            let um = matrix_of(&OperatorExpr::u_s(&mu), n);
            let dm = matrix_of(&OperatorExpr::d_s(&mu), n + mu.size());
            for lambda in partitions_up_to(n) {
                for nu in partitions_of(lambda.size() + mu.size()) {
                    assert_eq!(um.get(&nu, &lambda), dm.get(&lambda, &nu), "μ={mu} λ={lambda} ν={nu}");
                }
            }
        }
    }
}

#[test]
fn k_and_kb_matrices_are_symmetric() {
    for l in partitions_up_to(4) {
        for op in [OperatorExpr::k_s(&l), OperatorExpr::kb_s(&l)] {
            let m = matrix_of(&op, 5);
            for a in partitions_up_to(5) {
                for b in partitions_of(a.size()) {
                    assert_eq!(m.get(&a, &b), m.get(&b, &a), "{op} at ({a}, {b})");
                }
            }
        }
    }
}

#[test]
fn three_routes_to_kbar_agree() {
    for l in partitions_up_to(4) {
        let f = s(&l);
        let ud = symop_core::kb_as_ud(&f, 6);
        for g in partitions_up_to(6) {
            let direct = apply_kb(&f, &s(&g));
            assert_eq!(direct, symop_core::kb_via_gamma(&f, &s(&g)), "λ={l} γ={g}");
            assert_eq!(direct, ud.apply(&s(&g)), "λ={l} γ={g}");
        }
    }
}
