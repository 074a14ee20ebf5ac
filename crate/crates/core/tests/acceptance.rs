//! One line per acceptance criterion. Exits nonzero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::*;
use symop_core::identities::{self, verify_entry, Params, VerificationReport};
use symop_core::operators::{independent, matrix_of};
use symop_core::tableaux::{self, skew_lr_pairs_with_shapes, JdtCase};
use symop_core::{
    apply_kb, jacobi_trudi, kb_as_ud, kb_via_gamma, lr_coeff, mn_character, partitions_of, partitions_up_to, skew_schur, Assyt, Basis,
    Bounds, OperatorExpr, Partition, Rational, SkewShape, Ssyt, SymFunc,
};

type Outcome = Result<String, String>;

fn reports(rs: Vec<VerificationReport>) -> Outcome {
    let checks: usize = rs.iter().map(|r| r.instances).sum();
    match rs.iter().find(|r| !r.passed()) {
        Some(r) => Err(r.to_string()),
        None => Ok(format!("{checks} checks")),
    }
}

fn run_ids(ids: &[&str], bounds: Bounds) -> Vec<VerificationReport> {
    ids.iter().map(|id| identities::verify_identity(id, &bounds).unwrap()).collect()
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn c1() -> Outcome {
    let ids: Vec<String> = (1..=6).map(|i| format!("thm_main_{i}")).collect();
    let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
    reports(run_ids(&ids, Bounds { max_ab: 3, max_g: 4 }))
}

fn c2() -> Outcome {
    let ids: Vec<String> = (1..=6).map(|i| format!("thm_main_cor_{i}")).collect();
    let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
    reports(run_ids(&ids, Bounds { max_ab: 3, max_g: 4 }))
}

fn c3() -> Outcome {
    reports(run_ids(&["commutators_1", "commutators_2", "commutators_3"], Bounds { max_ab: 3, max_g: 4 }))
}

fn c4() -> Outcome {
    reports(run_ids(&["gessel_1", "gessel_2", "gessel_3"], Bounds { max_ab: 5, max_g: 5 }))
}

fn c5() -> Outcome {
    let mut rs = run_ids(&["kb1"], Bounds { max_ab: 0, max_g: 8 });
    rs.extend(run_ids(&["straightcorners"], Bounds { max_ab: 0, max_g: 8 }));
    // the entry compares each route against the corner formula; compare routes directly too
    for n in 2..=8 {
        let hook = Partition::new(vec![n - 1, 1]).unwrap();
        for a in partitions_of(n) {
            let via_p = s(&hook).kronecker(&s(&a));
            ensure(via_p == apply_kb(&s(&p("1")), &s(&a)), || format!("K̄_(1) s_{a} differs from s_(n−1,1) ∗ s_{a}"))?;
            if n <= 6 {
                ensure(via_p == kronecker_by_characters(&hook, &a), || format!("character sums differ at α={a}"))?;
            }
        }
    }
    reports(rs)
}

fn c6() -> Outcome {
    for l in partitions_up_to(4) {
        let f = s(&l);
        let ud = kb_as_ud(&f, 6);
        for g in partitions_up_to(6) {
            let a = apply_kb(&f, &s(&g));
            ensure(a == ud.apply(&s(&g)) && a == kb_via_gamma(&f, &s(&g)), || format!("λ={l} γ={g}"))?;
        }
    }
    let mut rs = run_ids(&["kbk_ud"], Bounds { max_ab: 4, max_g: 7 });
    rs.extend(run_ids(&["kbf_ud"], Bounds { max_ab: 4, max_g: 6 }));
    reports(rs)
}

fn c7() -> Outcome {
    let small = partitions_up_to(2);
    let mut ud = Vec::new();
    let mut du = Vec::new();
    for a in &small {
        for b in &small {
            ud.push(OperatorExpr::u_s(a) * OperatorExpr::d_s(b));
            du.push(OperatorExpr::d_s(b) * OperatorExpr::u_s(a));
        }
    }
    ensure(independent(&ud, 5), || "U_α D_β dependent at degree 5".into())?;
    ensure(independent(&du, 5), || "D_β U_α dependent at degree 5".into())?;
    let kp = OperatorExpr::k(SymFunc::p(2)) * OperatorExpr::u(SymFunc::p(1));
    for n in 0..=6 {
        ensure(matrix_of(&kp, n).is_zero(), || format!("K_p2 U_p1 nonzero at degree {n}"))?;
    }
    let one = p("1");
    let d1k2 = OperatorExpr::d_s(&one) * OperatorExpr::k_s(&p("2"));
    let d1k11 = OperatorExpr::d_s(&one) * OperatorExpr::k_s(&p("1,1"));
    ensure(matrix_of(&d1k2, 3) == matrix_of(&d1k11, 3), || "D1K2 ≠ D1K11".into())?;
    let k2u1 = OperatorExpr::k_s(&p("2")) * OperatorExpr::u_s(&one);
    let k11u1 = OperatorExpr::k_s(&p("1,1")) * OperatorExpr::u_s(&one);
    ensure(!independent(&[k2u1, k11u1], 5), || "K2U1, K11U1 independent".into())?;
    Ok(format!("{} + {} operators independent at degree 5", ud.len(), du.len()))
}

fn c8() -> Outcome {
    let mut instances = Vec::new();
    for f in partitions_up_to(6) {
        for g in partitions_up_to(6 - f.size()) {
            for b in partitions_up_to(4) {
                instances.push(Params::new(0).f(f.clone()).g(g.clone()).beta(b));
            }
        }
    }
    let rs = ["foulkes", "littlewood", "similar"]
        .iter()
        .map(|id| verify_entry(identities::find(id).unwrap(), &instances, "|f|+|g| ≤ 6, |β| ≤ 4".into()).unwrap())
        .collect();
    reports(rs)
}

fn c9() -> Outcome {
    let left = skew_shapes(5, 3);
    let mut n = 0;
    for a in &left {
        let fa = skew_schur(a);
        for b in &left {
            let product = tableaux::skew_lr_product(a, b);
            ensure(product == &fa * &skew_schur(b), || format!("s[{a}] s[{b}]"))?;
            n += 1;
        }
    }
    let t1 = Assyt::from_rows(sk("3,3/1"), vec![vec![3, 2], vec![5, 3, 1]]).unwrap();
    let t2 = Ssyt::from_rows(sk("9,9,5,3/7,5,4,1"), vec![vec![2, 4], vec![1, 4, 4, 5], vec![3], vec![5, 6]]).unwrap();
    let pairs = skew_lr_pairs_with_shapes(&sk("7,5,5,4,3,1/5,3,2,1"), &sk("7,5,4,1/3,3"), &p("1"), &p("9,9,5,3"));
    let pair = pairs.iter().find(|x| x.assyt == t1 && x.ssyt == t2).ok_or("example pair missing")?;
    ensure(pair.term.to_string() == "-s[9,9,5,3/1]", || format!("example pair gives {}", pair.term))?;
    ensure(pair.reverse_reading_word() == vec![2, 1, 3, 3, 5, 4, 2, 5, 4, 4, 1, 3, 6, 5], || "pair word".into())?;
    Ok(format!("{n} products, example pair gives -s[9,9,5,3/1]"))
}

fn sk(t: &str) -> SkewShape {
    t.parse().unwrap()
}

fn c10() -> Outcome {
    let mut n = 0;
    for shape in skew_shapes(5, 5) {
        for k in 0..=3 {
            ensure(tableaux::skew_pieri(k, &shape) == SymFunc::h(k) * skew_schur(&shape), || format!("h_{k} s[{shape}]"))?;
            if shape.inner().is_empty() {
                let terms = tableaux::skew_pieri_terms(k, &shape);
                let classical = terms.iter().all(|t| t.sign > 0 && t.shape.inner().is_empty());
                let strips = tableaux::horizontal_strips(shape.outer(), k);
                ensure(classical && terms.len() == strips.len(), || format!("classical Pieri at {shape}, k={k}"))?;
            }
            n += 1;
        }
    }
    Ok(format!("{n} products"))
}

fn c11() -> Outcome {
    let mut rs = run_ids(&["skew_corners"], Bounds { max_ab: 0, max_g: 6 });
    rs.extend(run_ids(&["nokronecker"], Bounds { max_ab: 0, max_g: 6 }));
    let mut bijections = 0;
    for a in partitions_up_to(5) {
        for t in a.subpartitions() {
            let r = tableaux::verify_jdt_bijection(&a, &t).unwrap();
            ensure(r.passed(), || format!("jdt α={a} θ={t}: {:?}", r.failures))?;
            bijections += 1;
        }
    }
    let r = tableaux::verify_jdt_bijection(&p("4,1,1"), &p("2,1")).unwrap();
    let case = |d: &str, g: &str| r.shape_cases.get(&(p(d), p(g))).cloned().unwrap_or_default();
    let table = [
        ("2,1,1", "4,2,1", JdtCase::A),
        ("2,1,1", "5,1,1", JdtCase::A),
        ("3,1", "4,1,1,1", JdtCase::B),
        ("3,1", "4,2,1", JdtCase::B),
        ("3,1", "5,1,1", JdtCase::C),
        ("2,1,1", "4,1,1,1", JdtCase::C),
    ];
    for (d, g, c) in table {
        ensure(case(d, g).into_iter().collect::<Vec<_>>() == vec![c], || format!("δ={d} γ={g} expected {c:?}"))?;
    }
    ensure(r.k == 2 && r.excluded == 1 && r.shape_cases.len() == 6, || "case inventory size".into())?;
    let corners = reports(rs)?;
    Ok(format!("{corners}, {bijections} bijections, case table reproduced"))
}

fn c12() -> Outcome {
    let mut instances = Vec::new();
    for a in partitions_up_to(5) {
        for k in 0..=3 {
            instances.push(Params::new(3).alpha(a.clone()).k(k));
        }
    }
    let rs = ["tworow_hook", "littlewood_sum"]
        .iter()
        .map(|id| verify_entry(identities::find(id).unwrap(), &instances, "|α| ≤ 5, k ≤ 3, |γ| ≤ 3".into()).unwrap())
        .collect();
    reports(rs)
}

fn c13() -> Outcome {
    for n in 0..=6 {
        for l in partitions_of(n) {
            for b in Basis::ALL {
                let f = SymFunc::basis_element(b, l.clone());
                ensure(f.to_schur().to_basis(b) == f, || format!("{b:?} round trip at {l}"))?;
            }
        }
        let parts = partitions_of(n);
        for a in &parts {
            for b in &parts {
                let ip: Rational = parts
                    .iter()
                    .map(|r| Rational::new(mn_character(a, r).unwrap() * mn_character(b, r).unwrap(), r.z_factor().into()))
                    .sum();
                ensure(ip == Rational::from_integer((a == b).into()), || format!("characters {a}, {b}"))?;
            }
        }
    }
    for nu in partitions_up_to(6) {
        for a in nu.subpartitions() {
            for b in partitions_of(nu.size() - a.size()) {
                let c = lr_coeff(&nu, &a, &b);
                ensure(c == lr_coeff(&nu, &b, &a) && c == lr_coeff(&nu.conjugate(), &a.conjugate(), &b.conjugate()), || {
                    format!("c^{nu}_{a},{b}")
                })?;
            }
        }
    }
    for seq in [[3i64, 4, 0], [0, 2, 2], [-1, 3, 1], [1, 1, 3]] {
        ensure(jacobi_trudi(&seq).to_symfunc().to_basis(Basis::Complete) == jt_determinant(&seq), || format!("JT {seq:?}"))?;
    }
    let mut slides = 0;
    for shape in skew_shapes(5, 5) {
        for t in tableaux::enumerate_ssyt_bounded(&shape, 3) {
            for hole in shape.inner().corners() {
                let fwd = tableaux::jdt_slide(&t, hole).unwrap();
                if let Some(v) = fwd.vacated {
                    let back = tableaux::jdt_slide(&fwd.tableau, v).unwrap();
                    ensure(back.tableau == t && back.vacated == Some(hole), || format!("jdt round trip {t:?}"))?;
                    slides += 1;
                }
            }
        }
    }
    Ok(format!("{slides} slide round trips"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("six commutation identities, |α|,|β| ≤ 3, |γ| ≤ 4", c1),
        ("structure-constant forms agree with skew forms", c2),
        ("commutator expansions agree", c3),
        ("Gessel identities, m, n ≤ 5", c4),
        ("K̄_(1) and corner formula, |α| ≤ 8, three Kronecker routes", c5),
        ("K̄_f through U and D, three routes; K̄_(k) for k ≤ 4", c6),
        ("independence at truncation and non-uniqueness examples", c7),
        ("Foulkes, Littlewood and similar identities", c8),
        ("skew Littlewood-Richardson rule and the example pair", c9),
        ("skew Pieri rule", c10),
        ("skew corner formula and jeu de taquin bijection", c11),
        ("two-row and hook expansions, Littlewood sums", c12),
        ("infrastructure: bases, characters, LR symmetry, jdt", c13),
    ];
    let mut failed = 0;
    for (i, (desc, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(note) => println!("criterion {:>2}: PASS  {desc} ({note}; {secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {desc} ({secs:.1}s)\n{why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
